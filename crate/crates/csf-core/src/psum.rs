//! Independent correctness oracle: X_G expanded in the power-sum basis by
//! brute force over edge subsets, then converted into the star basis by an
//! exact rational linear solve. Shares no code path with the DNC engine.
//!
//! The subset formula is X_G = Σ_{S ⊆ E} (−1)^{|S|} p_{λ(S)}, where λ(S) is
//! the component partition of (V, S).

use crate::graph::Graph;
use crate::partition::{partitions_of, Partition};
use crate::star::StarExpansion;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;
use std::sync::Mutex;
use thiserror::Error;

/// 2^|E| subsets; this is the desk-scale ceiling (K₈ has 28 edges).
pub const MAX_ORACLE_EDGES: usize = 28;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PsumError {
    #[error("oracle is exponential in edges: {0} exceeds the cap {MAX_ORACLE_EDGES}")]
    TooManyEdges(usize),
    #[error("star-to-power-sum transition matrix is singular (internal bug)")]
    SingularBasis,
    #[error("non-integral star coefficient at {0:?} (engine or oracle bug)")]
    NonIntegralSolution(Partition),
}

/// Sparse exact expansion in the formal power-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumExpansion {
    n: u32,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl PowerSumExpansion {
    pub fn zero(n: u32) -> Self {
        PowerSumExpansion { n, coeffs: BTreeMap::new() }
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn coeff(&self, lam: &Partition) -> BigInt {
        self.coeffs.get(lam).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, lam: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lam) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Formal product: p_μ · p_ν = p_{sort(μ·ν)}.
    pub fn product(&self, other: &PowerSumExpansion) -> PowerSumExpansion {
        let mut out = PowerSumExpansion::zero(self.n + other.n);
        for (p, a) in &self.coeffs {
            for (q, b) in &other.coeffs {
                out.add_term(p.sort_concat(q), a * b);
            }
        }
        out
    }
}

/// Component-size multiset packed into a u128: size i occupies a fixed bit
/// field wide enough for the maximal count ⌊n/i⌋, so merges are three shifts.
struct SizeKey {
    offsets: Vec<u32>,
}

impl SizeKey {
    fn new(n: usize) -> Self {
        let mut offsets = vec![0u32]; // size 0 is never a component
        let mut at = 0u32;
        for i in 1..=n {
            offsets.push(at);
            let max_count = (n / i) as u32;
            at += 32 - max_count.leading_zeros(); // bits for 0..=max_count
        }
        assert!(at <= 128, "size-key overflow for n = {n}");
        SizeKey { offsets }
    }

    fn all_singletons(&self, n: usize) -> u128 {
        (n as u128) << self.offsets[1]
    }

    fn key_of(&self, lam: &Partition) -> u128 {
        let mut key = 0u128;
        for &p in lam.parts() {
            key += 1u128 << self.offsets[p as usize];
        }
        key
    }

    #[inline]
    fn merge(&self, key: u128, a: usize, b: usize) -> u128 {
        key - (1u128 << self.offsets[a]) - (1u128 << self.offsets[b])
            + (1u128 << self.offsets[a + b])
    }
}

/// Disjoint-set forest without path compression so unions can be undone.
#[derive(Clone)]
struct Dsu {
    parent: Vec<u8>,
    size: Vec<u8>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n as u8).collect(), size: vec![1; n] }
    }

    #[inline]
    fn find(&self, mut v: u8) -> u8 {
        while self.parent[v as usize] != v {
            v = self.parent[v as usize];
        }
        v
    }

    /// Returns (child_root, new_root, child_size, root_size_before) or None
    /// if already joined.
    #[inline]
    fn union(&mut self, a: u8, b: u8) -> Option<(u8, u8, usize, usize)> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (big, small) =
            if self.size[ra as usize] >= self.size[rb as usize] { (ra, rb) } else { (rb, ra) };
        let (sb, ss) = (self.size[big as usize] as usize, self.size[small as usize] as usize);
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        Some((small, big, ss, sb))
    }

    #[inline]
    fn undo(&mut self, rec: (u8, u8, usize, usize)) {
        let (small, big, ss, _) = rec;
        self.parent[small as usize] = small;
        self.size[big as usize] -= ss as u8;
    }
}

#[allow(clippy::too_many_arguments)]
fn subset_walk(
    edges: &[(u8, u8)],
    idx: usize,
    dsu: &mut Dsu,
    sizes: &SizeKey,
    key: u128,
    sign: i64,
    table: &[(u128, u32)],
    acc: &mut [i64],
) {
    if idx == edges.len() {
        let slot = table.binary_search_by_key(&key, |t| t.0).expect("key is a partition of n");
        acc[table[slot].1 as usize] += sign;
        return;
    }
    subset_walk(edges, idx + 1, dsu, sizes, key, sign, table, acc);
    let (a, b) = edges[idx];
    match dsu.union(a, b) {
        None => subset_walk(edges, idx + 1, dsu, sizes, key, -sign, table, acc),
        Some(rec) => {
            let merged = sizes.merge(key, rec.2, rec.3);
            subset_walk(edges, idx + 1, dsu, sizes, merged, -sign, table, acc);
            dsu.undo(rec);
        }
    }
}

/// Brute-force power-sum expansion over all 2^|E| edge subsets.
pub fn csf_power_sum(g: &Graph) -> Result<PowerSumExpansion, PsumError> {
    let m = g.edge_count();
    if m > MAX_ORACLE_EDGES {
        return Err(PsumError::TooManyEdges(m));
    }
    let n = g.vertex_count();
    let parts = partitions_of(n as u32);
    let sizes = SizeKey::new(n.max(1));
    let mut table: Vec<(u128, u32)> =
        parts.iter().enumerate().map(|(i, p)| (sizes.key_of(p), i as u32)).collect();
    table.sort_unstable_by_key(|t| t.0);
    let edges: Vec<(u8, u8)> = g.edges().iter().map(|e| (e.u as u8, e.v as u8)).collect();

    // fork the first few include/exclude choices across threads
    let serial_depth = 16usize.min(edges.len());
    let fork = edges.len() - serial_depth;
    let acc: Vec<i64> = (0u32..1 << fork)
        .into_par_iter()
        .map(|prefix| {
            let mut dsu = Dsu::new(n);
            let mut key = sizes.all_singletons(n);
            let mut sign = 1i64;
            for (i, &(a, b)) in edges[..fork].iter().enumerate() {
                if prefix >> i & 1 == 1 {
                    sign = -sign;
                    if let Some(rec) = dsu.union(a, b) {
                        key = sizes.merge(key, rec.2, rec.3);
                    }
                }
            }
            let mut acc = vec![0i64; parts.len()];
            subset_walk(&edges[fork..], 0, &mut dsu, &sizes, key, sign, &table, &mut acc);
            acc
        })
        .reduce(
            || vec![0i64; parts.len()],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );

    let mut out = PowerSumExpansion::zero(n as u32);
    for (i, lam) in parts.into_iter().enumerate() {
        out.add_term(lam, BigInt::from(acc[i]));
    }
    Ok(out)
}

/// st_k in the power-sum basis: hooks (j+1, 1^{k−1−j}) with coefficients
/// (−1)^j C(k−1, j), exactly what the subset sum gives for a star's edges.
pub fn star_in_power_sum(k: u32) -> PowerSumExpansion {
    assert!(k >= 1);
    let mut out = PowerSumExpansion::zero(k);
    let mut binom = BigInt::one();
    for j in 0..k {
        let lam = Partition::hook(j + 1, k - 1 - j);
        let c = if j % 2 == 0 { binom.clone() } else { -binom.clone() };
        out.add_term(lam, c);
        // C(k−1, j+1) from C(k−1, j)
        binom = binom * BigInt::from(k - 1 - j) / BigInt::from(j + 1);
    }
    out
}

/// Integerized inverse of the star→power-sum transition matrix for degree n:
/// `inv` is D · M⁻¹ with a common denominator D.
struct BasisInverse {
    parts: Vec<Partition>,
    inv: Vec<Vec<BigInt>>,
    denom: BigInt,
}

static BASIS_CACHE: Lazy<Mutex<HashMap<u32, Arc<BasisInverse>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn basis_inverse(n: u32) -> Result<Arc<BasisInverse>, PsumError> {
    if let Some(hit) = BASIS_CACHE.lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let parts = partitions_of(n);
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let dim = parts.len();

    // column j = st_{λ(j)} expanded in the power-sum basis
    let mut m = vec![vec![BigRational::zero(); dim]; dim];
    for (j, lam) in parts.iter().enumerate() {
        let mut col = PowerSumExpansion::zero(0);
        col.add_term(Partition::empty(), BigInt::one());
        for &part in lam.parts() {
            col = col.product(&star_in_power_sum(part));
        }
        for (mu, c) in col.iter() {
            m[index[mu]][j] = BigRational::from_integer(c.clone());
        }
    }

    // Gauss-Jordan over exact rationals; no triangular order is assumed and
    // a missing pivot means the basis theorem was violated somewhere.
    let mut inv: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| !m[r][col].is_zero()).ok_or(PsumError::SingularBasis)?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut().chain(inv[col].iter_mut()) {
            *x /= p.clone();
        }
        for r in 0..dim {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in 0..dim {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
                let delta = &f * &inv[col][c];
                inv[r][c] -= delta;
            }
        }
    }

    let mut denom = BigInt::one();
    for row in &inv {
        for x in row {
            denom = denom.lcm(x.denom());
        }
    }
    let inv: Vec<Vec<BigInt>> = inv
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.numer() * (&denom / x.denom())).collect())
        .collect();

    let entry = Arc::new(BasisInverse { parts, inv, denom });
    BASIS_CACHE.lock().unwrap().insert(n, entry.clone());
    Ok(entry)
}

/// Unique star-basis expansion with the same power-sum form; errors if any
/// solved coefficient is non-integral.
pub fn to_star_basis(x: &PowerSumExpansion) -> Result<StarExpansion, PsumError> {
    let basis = basis_inverse(x.degree())?;
    let dim = basis.parts.len();
    let mut v = vec![BigInt::zero(); dim];
    for (mu, c) in x.iter() {
        let i = basis.parts.binary_search(mu).expect("partition of n");
        v[i] = c.clone();
    }
    let mut out = StarExpansion::zero(x.degree());
    for i in 0..dim {
        let mut y = BigInt::zero();
        for (j, vj) in v.iter().enumerate() {
            if !vj.is_zero() {
                y += &basis.inv[i][j] * vj;
            }
        }
        if y.is_zero() {
            continue;
        }
        let (q, rem) = y.div_rem(&basis.denom);
        if !rem.is_zero() {
            return Err(PsumError::NonIntegralSolution(basis.parts[i].clone()));
        }
        out.add_term(basis.parts[i].clone(), q);
    }
    Ok(out)
}

/// Convenience: oracle expansion of a graph straight into the star basis.
pub fn oracle_star_expansion(g: &Graph) -> Result<StarExpansion, PsumError> {
    to_star_basis(&csf_power_sum(g)?)
}
