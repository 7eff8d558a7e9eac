//! Named graph families and the seeded uniform random graph. Vertices are
//! labeled "1".."n" so the CLI examples print the way people expect.

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Label};
use crate::{Error, Result};

fn numbered(n: u32) -> Vec<Label> {
    (1..=n).map(|i| Label::atom(i.to_string())).collect()
}

/// Complete graph K_n, n ≥ 1.
pub fn complete(n: u32) -> Graph {
    assert!(n >= 1, "complete graph needs n >= 1");
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    Graph::new(numbered(n), &edges).unwrap()
}

/// Cycle C_n, n ≥ 3.
pub fn cycle(n: u32) -> Graph {
    assert!(n >= 3, "cycle needs n >= 3");
    let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(numbered(n), &edges).unwrap()
}

/// Path P_n on n vertices, n ≥ 1.
pub fn path(n: u32) -> Graph {
    assert!(n >= 1, "path needs n >= 1");
    let edges: Vec<(u32, u32)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(numbered(n), &edges).unwrap()
}

/// Star with k ≥ 1 leaves; vertex "1" is the center.
pub fn star(k: u32) -> Graph {
    assert!(k >= 1, "star needs at least one leaf");
    let edges: Vec<(u32, u32)> = (1..=k).map(|i| (0, i)).collect();
    Graph::new(numbered(k + 1), &edges).unwrap()
}

/// n isolated vertices.
pub fn edgeless(n: u32) -> Graph {
    Graph::new(numbered(n), &[]).unwrap()
}

/// The octahedron: iterated Zykov join of three edgeless pairs, relabeled
/// "1".."6".
pub fn octahedron() -> Graph {
    let e2 = edgeless(2);
    let j = e2.zykov_join(&e2).zykov_join(&e2);
    let edges: Vec<(u32, u32)> = j.edges().iter().map(|&(a, b)| (a.0, b.0)).collect();
    Graph::new(numbered(6), &edges).unwrap()
}

/// Uniform random graph on n vertices with exactly m edges, deterministic
/// in `seed`. The edge set is a uniformly chosen m-subset of all
/// n(n-1)/2 slots.
pub fn random_graph(n: u32, m: u64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with_rng(n, m, &mut rng)
}

/// Same model, driven by a caller-managed stream.
pub fn random_graph_with_rng(n: u32, m: u64, rng: &mut impl RngCore) -> Result<Graph> {
    let slots = (n as u64) * (n as u64 - if n == 0 { 0 } else { 1 }) / 2;
    if m > slots {
        return Err(Error::InvalidGraph(format!(
            "random graph on {n} vertices cannot have {m} edges (max {slots})"
        )));
    }
    let mut all: Vec<(u32, u32)> = Vec::with_capacity(slots as usize);
    for a in 0..n {
        for b in a + 1..n {
            all.push((a, b));
        }
    }
    // partial Fisher-Yates: the first m entries are a uniform m-subset
    for i in 0..m as usize {
        let j = i + uniform_usize(rng, all.len() - i);
        all.swap(i, j);
    }
    let mut chosen: Vec<(u32, u32)> = all[..m as usize].to_vec();
    chosen.sort_unstable();
    Graph::new(numbered(n), &chosen)
}

/// Unbiased uniform draw from 0..k via rejection on a power-of-two mask.
pub(crate) fn uniform_usize(rng: &mut impl RngCore, k: usize) -> usize {
    if k <= 1 {
        return 0;
    }
    let mask = (k as u64).next_power_of_two() - 1;
    loop {
        let v = rng.next_u64() & mask;
        if v < k as u64 {
            return v as usize;
        }
    }
}
