//! Test-corpus generators: exhaustive small connected graphs and seeded
//! random connected graphs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Edge probability for the random corpus.
pub const RANDOM_EDGE_PROB: f64 = 0.4;

/// Every labeled connected graph on exactly `n` vertices, in edge-mask
/// order. Guarded: the enumeration is 2^(n choose 2).
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 7 {
        return Err(Error::Budget(format!(
            "exhaustive enumeration supports 1..=7 vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges)?;
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

/// All connected graphs on 2..=n vertices.
pub fn connected_graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 2..=n {
        out.extend(connected_graphs(k)?);
    }
    Ok(out)
}

/// `count` connected Erdos-Renyi graphs on `n` vertices with edge
/// probability [`RANDOM_EDGE_PROB`]. Seed derivation: one ChaCha8 stream
/// seeded with `seed`; candidates are drawn pair-by-pair in lexicographic
/// order and disconnected candidates are rejected, so the corpus is fully
/// reproducible from (n, count, seed).
pub fn random_connected(n: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!(
            "random corpus requires n >= 2, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(RANDOM_EDGE_PROB) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}
