#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rstp_core::{Edge, IntervalGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph on `n` vertices with class-1 style integer intervals.
/// Each pair is an edge with probability `density`; samples are redrawn
/// until connected.
pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> IntervalGraph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    let low = rng.gen_range(0..10);
                    let high = rng.gen_range(low + 1..=10);
                    edges.push(Edge::new(u, v, low, high));
                }
            }
        }
        let g = IntervalGraph::new(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Like [`random_graph`] but with at most `max_edges` edges.
pub fn small_graph(rng: &mut impl Rng, n: usize, density: f64, max_edges: usize) -> IntervalGraph {
    loop {
        let g = random_graph(rng, n, density);
        if g.edge_count() <= max_edges {
            return g;
        }
    }
}

/// The acceptance instance suite: 200 graphs, n in 4..=8, alternating
/// complete and ~50% density.
pub fn suite() -> Vec<IntervalGraph> {
    let mut r = rng(0x5eed_2024);
    (0..200)
        .map(|i| {
            let n = 4 + (i / 2) % 5;
            let density = if i % 2 == 0 { 1.0 } else { 0.5 };
            random_graph(&mut r, n, density)
        })
        .collect()
}
