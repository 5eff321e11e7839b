//! λ-word counting for paths, cycles, and pans: the internal edges carry a
//! fixed consecutive labeling, the expansion acts on the smallest remaining
//! internal label, and each DNC leaf is encoded by a word over {L, M, R, X}.
//! Counting the words that produce St_λ recovers |c_λ| cancellation-free.

use crate::graph::{EdgeRef, Graph};
use crate::partition::Partition;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("{family:?} needs n ≥ {min}, got {n}")]
    DegreeTooSmall { family: WordFamily, min: u32, n: u32 },
    #[error("word walk is exponential: {0} labeled edges exceeds the cap {1}")]
    TooManyLabels(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordFamily {
    Path,
    Cycle,
    Pan,
}

const LABEL_CAP: usize = 14;

/// The family graph plus its labeled internal edges in the consecutive
/// order the word encoding assumes.
fn labeled_graph(family: WordFamily, n: u32) -> Result<(Graph, Vec<(usize, usize)>), WordError> {
    let need = match family {
        WordFamily::Path => 4,
        WordFamily::Cycle => 3,
        WordFamily::Pan => 4,
    };
    if n < need {
        return Err(WordError::DegreeTooSmall { family, min: need, n });
    }
    let n = n as usize;
    match family {
        WordFamily::Path => {
            let g = crate::families::path(n).expect("n ≥ 4");
            let labels = (1..n - 2).map(|i| (i, i + 1)).collect();
            Ok((g, labels))
        }
        WordFamily::Cycle => {
            let g = crate::families::cycle(n).expect("n ≥ 3");
            let labels = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok((g, labels))
        }
        WordFamily::Pan => {
            // pendant hangs at cycle vertex 0; labels run from one edge at
            // the pendant's root around to the other
            let g = crate::families::pan(n).expect("n ≥ 4");
            let labels = (0..n - 1).map(|i| (i, (i + 1) % (n - 1))).collect();
            Ok((g, labels))
        }
    }
}

fn walk(
    g: &Graph,
    repr: &[usize],
    labels: &[(usize, usize)],
    idx: usize,
    word: &mut Vec<u8>,
    sink: &mut dyn FnMut(Partition, &[u8]),
) {
    if idx == labels.len() {
        debug_assert!(g.is_star_forest());
        sink(g.component_partition(), word);
        return;
    }
    let (a0, b0) = labels[idx];
    let (u, v) = (repr[a0], repr[b0]);
    let edge = if u != v { EdgeRef::new(u, v).ok() } else { None };
    let live_internal = edge.is_some_and(|e| g.has_edge(e) && g.is_internal_edge(e));
    if !live_internal {
        word.push(b'X');
        walk(g, repr, labels, idx + 1, word, sink);
        word.pop();
        return;
    }
    let e = edge.expect("internal edge");

    word.push(b'L');
    walk(&g.delete_edge(e).expect("live"), repr, labels, idx + 1, word, sink);
    word.pop();

    // both contractions merge the larger endpoint into the smaller one
    let merged: Vec<usize> =
        repr.iter().map(|&x| if x == e.v { e.u } else { x }).collect();
    word.push(b'M');
    walk(&g.dot_contract(e).expect("live"), &merged, labels, idx + 1, word, sink);
    word.pop();

    word.push(b'R');
    walk(&g.leaf_contract(e).expect("live").0, &merged, labels, idx + 1, word, sink);
    word.pop();
}

/// Number of valid λ-words per partition for the whole family graph.
pub fn lambda_word_counts(
    family: WordFamily,
    n: u32,
) -> Result<BTreeMap<Partition, BigInt>, WordError> {
    let (g, labels) = labeled_graph(family, n)?;
    if labels.len() > LABEL_CAP {
        return Err(WordError::TooManyLabels(labels.len(), LABEL_CAP));
    }
    let repr: Vec<usize> = (0..g.vertex_count()).collect();
    let mut counts: BTreeMap<Partition, BigInt> = BTreeMap::new();
    let mut word = Vec::with_capacity(labels.len());
    walk(&g, &repr, &labels, 0, &mut word, &mut |lam, _| {
        *counts.entry(lam).or_default() += BigInt::one();
    });
    Ok(counts)
}

/// |c_λ| as a word count; zero when λ never occurs.
pub fn count_lambda_words(
    family: WordFamily,
    n: u32,
    lam: &Partition,
) -> Result<BigInt, WordError> {
    Ok(lambda_word_counts(family, n)?.remove(lam).unwrap_or_default())
}

/// The words themselves, for inspection at small scale.
pub fn lambda_words(family: WordFamily, n: u32, lam: &Partition) -> Result<Vec<String>, WordError> {
    let (g, labels) = labeled_graph(family, n)?;
    if labels.len() > LABEL_CAP {
        return Err(WordError::TooManyLabels(labels.len(), LABEL_CAP));
    }
    let repr: Vec<usize> = (0..g.vertex_count()).collect();
    let mut words = Vec::new();
    let mut word = Vec::with_capacity(labels.len());
    walk(&g, &repr, &labels, 0, &mut word, &mut |l, w| {
        if &l == lam {
            words.push(String::from_utf8(w.to_vec()).expect("ascii"));
        }
    });
    words.sort();
    Ok(words)
}
