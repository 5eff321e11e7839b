//! Integer partitions with the lexicographic total order, multiplicity and
//! body/tail views, and the sort/concatenate product used by the star-basis.

use serde::{Deserialize, Deserializer, Serialize};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partitions compare only within one degree: |a| = {0}, |b| = {1}")]
    SizeMismatch(u64, u64),
    #[error("partition parts must be positive")]
    NonPositivePart,
    #[error("{0:?} is not a hook partition")]
    NotAHook(Partition),
    #[error("cannot parse {0:?} as a partition")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers.
///
/// The derived `Ord` compares part lists lexicographically, which for two
/// partitions of the same integer is exactly the total order used throughout:
/// `(1^n)` is smallest and `(n)` is largest. Comparing partitions of
/// different integers is meaningful only through [`Partition::lex_compare`],
/// which enforces the equal-degree precondition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::NonPositivePart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The empty partition of 0, the identity for [`Partition::sort_concat`].
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn single(part: u32) -> Self {
        assert!(part > 0);
        Partition { parts: vec![part] }
    }

    /// `(a, 1^b)`; `a` must be positive.
    pub fn hook(a: u32, b: u32) -> Self {
        assert!(a > 0);
        let mut parts = Vec::with_capacity(1 + b as usize);
        parts.push(a);
        parts.resize(1 + b as usize, 1);
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |λ|, the integer being partitioned.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// ℓ(λ), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Lexicographic comparison; errors unless both partition the same integer.
    pub fn lex_compare(&self, other: &Partition) -> Result<Ordering, PartitionError> {
        let (wa, wb) = (self.weight(), other.weight());
        if wa != wb {
            return Err(PartitionError::SizeMismatch(wa, wb));
        }
        Ok(self.parts.cmp(&other.parts))
    }

    /// Multiset union of two part sequences, arranged weakly decreasing.
    pub fn sort_concat(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// m_i for i = 1..=n: the number of parts equal to i.
    pub fn multiplicities(&self) -> Vec<u32> {
        let n = self.weight() as usize;
        let mut m = vec![0u32; n + 1];
        for &p in &self.parts {
            m[p as usize] += 1;
        }
        m
    }

    /// The number of parts equal to 1.
    pub fn ones(&self) -> u32 {
        self.parts.iter().rev().take_while(|&&p| p == 1).count() as u32
    }

    /// True iff at most one part exceeds 1 (the case λ = (n) included).
    pub fn is_hook(&self) -> bool {
        self.parts.iter().filter(|&&p| p > 1).count() <= 1
    }

    /// m₁ of a hook `(n−m₁, 1^{m₁})`, counting the whole tail of 1s.
    ///
    /// `(1^n)` is written `(1, 1^{n−1})` in that notation, but it is excluded
    /// from every hook formula, so we report the plain count of 1-parts and
    /// let callers guard the m₁ = n−1 case.
    pub fn hook_m1(&self) -> Result<u32, PartitionError> {
        if !self.is_hook() {
            return Err(PartitionError::NotAHook(self.clone()));
        }
        if self.parts.first().copied().unwrap_or(0) > 1 {
            Ok(self.parts.len() as u32 - 1)
        } else {
            Ok(self.parts.len() as u32)
        }
    }

    /// Splits λ into the parts > 1 (body) and the count of trailing 1s (tail).
    pub fn body_tail(&self) -> BodyTail {
        let b = self.parts.iter().position(|&p| p == 1).unwrap_or(self.parts.len());
        BodyTail {
            body: Partition { parts: self.parts[..b].to_vec() },
            tail: (self.parts.len() - b) as u32,
        }
    }

    /// Appends k extra 1-parts.
    pub fn with_extra_ones(&self, k: u32) -> Partition {
        let mut parts = self.parts.clone();
        parts.resize(parts.len() + k as usize, 1);
        Partition { parts }
    }

    /// Parses either the textual form "3+3+1+1" or the list form "[3,3,1,1]".
    pub fn parse(s: &str) -> Result<Self, PartitionError> {
        let s = s.trim();
        let inner = s.strip_prefix('[').and_then(|t| t.strip_suffix(']'));
        let body = inner.unwrap_or(s);
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let sep = if inner.is_some() || body.contains(',') { ',' } else { '+' };
        let mut parts = Vec::new();
        for tok in body.split(sep) {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| PartitionError::Parse(s.to_string()))?;
            parts.push(p);
        }
        Partition::new(parts).map_err(|_| PartitionError::Parse(s.to_string()))
    }
}

/// Body/tail split of a partition per the λ-word analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BodyTail {
    pub body: Partition,
    pub tail: u32,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+"))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        let sorted = parts.windows(2).all(|w| w[0] >= w[1]);
        let pt = Partition::new(parts).map_err(serde::de::Error::custom)?;
        if !sorted {
            return Err(serde::de::Error::custom("partition parts must be weakly decreasing"));
        }
        Ok(pt)
    }
}

/// All partitions of n in increasing lexicographic order, (1^n) first, (n) last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn lex_order_examples() {
        assert_eq!(p(&[2, 1, 1]).lex_compare(&p(&[2, 2])).unwrap(), Ordering::Less);
        assert_eq!(p(&[3, 2, 1]).lex_compare(&p(&[3, 3])).unwrap(), Ordering::Less);
        // (1^n) is smallest among partitions of n
        for n in 1..=8u32 {
            let ones = p(&vec![1; n as usize]);
            for q in partitions_of(n) {
                assert_ne!(q.lex_compare(&ones).unwrap(), Ordering::Less);
            }
        }
        assert_eq!(
            p(&[2, 1]).lex_compare(&p(&[2, 2])),
            Err(PartitionError::SizeMismatch(3, 4))
        );
    }

    #[test]
    fn sort_concat_examples() {
        // λ and μ of the 4-cycle example in the leading-partition section
        let lam = p(&[3, 2, 2, 1]);
        let mu = Partition::new(vec![3, 2, 3, 1, 2]).unwrap();
        assert_eq!(lam.sort_concat(&mu), p(&[3, 3, 3, 2, 2, 2, 2, 1, 1]));
        assert_eq!(p(&[2]).sort_concat(&p(&[2])), p(&[2, 2]));
        let x = p(&[4, 1]);
        assert_eq!(x.sort_concat(&Partition::empty()), x);
        assert_eq!(Partition::new(vec![0]), Err(PartitionError::NonPositivePart));
    }

    #[test]
    fn hooks() {
        assert!(p(&[5, 1, 1, 1]).is_hook());
        assert_eq!(p(&[5, 1, 1, 1]).hook_m1().unwrap(), 3);
        assert!(p(&[7]).is_hook());
        assert_eq!(p(&[7]).hook_m1().unwrap(), 0);
        assert!(!p(&[3, 2, 1]).is_hook());
        assert!(p(&[3, 2, 1]).hook_m1().is_err());
        assert_eq!(Partition::hook(4, 2), p(&[4, 1, 1]));
        // |λ| − ℓ(λ) = λ₁ − 1 for hooks, used by inference
        for n in 1..=9u32 {
            for lam in partitions_of(n).iter().filter(|l| l.is_hook()) {
                assert_eq!(lam.weight() - lam.len() as u64, lam.parts()[0] as u64 - 1);
            }
        }
    }

    #[test]
    fn body_tail_examples() {
        let bt = p(&[3, 3, 1, 1]).body_tail();
        assert_eq!(bt.body, p(&[3, 3]));
        assert_eq!(bt.tail, 2);
        let bt = p(&[1, 1, 1]).body_tail();
        assert!(bt.body.is_empty());
        assert_eq!(bt.tail, 3);
        let bt = p(&[4]).body_tail();
        assert_eq!(bt.body, p(&[4]));
        assert_eq!(bt.tail, 0);
    }

    #[test]
    fn multiplicity_view() {
        let lam = p(&[4, 2, 2, 1]);
        let m = lam.multiplicities();
        assert_eq!(m[1], 1);
        assert_eq!(m[2], 2);
        assert_eq!(m[4], 1);
        assert_eq!(
            (1..m.len()).map(|i| i as u64 * m[i] as u64).sum::<u64>(),
            lam.weight()
        );
        assert_eq!(m.iter().sum::<u32>() as usize, lam.len());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Partition::parse("3+3+1+1").unwrap(), p(&[3, 3, 1, 1]));
        assert_eq!(Partition::parse("[3,3,1,1]").unwrap(), p(&[3, 3, 1, 1]));
        assert_eq!(Partition::parse("5").unwrap(), p(&[5]));
        assert!(Partition::parse("3+0").is_err());
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 0..=12
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &cnt) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n as u32).len(), cnt);
        }
    }
}
