//! Acceptance suite. Each test covers one criterion and prints a single
//! `[PASS]`/`[FAIL]` line; run with `--nocapture` to see them.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rstp_cli::{generate_instance, solve_instance};
use rstp_core::instances::{generate, GeneratorSpec};
use rstp_core::oracle::{
    enumerate_spanning_trees, oracle_deviation_by_scenarios, oracle_is_strong, oracle_is_weak, oracle_min_deviation,
    DEFAULT_TREE_BUDGET,
};
use rstp_core::pruning::weak_edges_with_stats;
use rstp_core::*;

fn criterion(id: u32, name: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("[PASS] criterion {id} ({name}): {detail}"),
        Err(detail) => {
            println!("[FAIL] criterion {id} ({name}): {detail}");
            panic!("criterion {id} failed: {detail}");
        }
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> IntervalGraph {
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

/// 200 instances, n in 4..=8, alternating complete and ~50% density.
fn suite() -> Vec<IntervalGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00AC_CE97);
    (0..200)
        .map(|i| random_graph(&mut rng, 4 + (i / 2) % 5, if i % 2 == 0 { 1.0 } else { 0.5 }))
        .collect()
}

fn trees_with_deviation(g: &IntervalGraph) -> Vec<(Vec<EdgeId>, Cost)> {
    enumerate_spanning_trees(g, DEFAULT_TREE_BUDGET)
        .unwrap()
        .into_iter()
        .map(|t| {
            let d = edge_set_deviation(&t, g);
            (t, d)
        })
        .collect()
}

#[test]
fn criterion_1_oracle_exactness() {
    let start = Instant::now();
    let graphs = suite();
    let mut result = Ok(());
    let mut solves = 0;
    'outer: for (i, g) in graphs.iter().enumerate() {
        let truth = oracle_min_deviation(g, DEFAULT_TREE_BUDGET).unwrap().optimum;
        for mode in PruningMode::ALL {
            for rule in BranchRule::ALL {
                let opts = SolverOptions::default().with_mode(mode).with_branch_rule(rule);
                let got = solve(g, &opts).unwrap().best_deviation;
                solves += 1;
                if got != truth {
                    result = Err(format!("instance {i}, {mode}/{rule}: solver {got}, oracle {truth}"));
                    break 'outer;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let outcome = result.and_then(|()| {
        if elapsed < Duration::from_secs(120) {
            Ok(format!(
                "{solves} solves on {} instances match the oracle in {elapsed:.1?}",
                graphs.len()
            ))
        } else {
            Err(format!("took {elapsed:.1?}, limit 120s"))
        }
    });
    criterion(1, "solver equals brute-force optimum", outcome);
}

#[test]
fn criterion_2_weak_edges() {
    let mut outcome = Ok(());
    for (i, g) in suite().iter().enumerate() {
        let expected: Vec<_> = (0..g.edge_count()).filter(|&e| oracle_is_weak(e, g)).collect();
        if weak_edges(g).unwrap() != expected {
            outcome = Err(format!("instance {i} differs from the per-edge oracle"));
            break;
        }
    }
    let outcome = outcome.and_then(|()| {
        let n = 200;
        let g = generate(&GeneratorSpec::new(1, n, 2024)).unwrap();
        let start = Instant::now();
        let stats = weak_edges_with_stats(&g).unwrap();
        let elapsed = start.elapsed();
        let limit = 4 * n * n;
        if elapsed >= Duration::from_secs(5) {
            Err(format!("n=200 took {elapsed:.2?}"))
        } else if stats.path_steps > limit {
            Err(format!("{} path steps exceed 4n² = {limit}", stats.path_steps))
        } else {
            Ok(format!(
                "suite matches oracle; n=200 complete: {elapsed:.2?}, {} steps (≤ {limit}), {} weak of {}",
                stats.path_steps,
                stats.weak.len(),
                g.edge_count()
            ))
        }
    });
    criterion(2, "weak edges equal per-edge oracle", outcome);
}

#[test]
fn criterion_3_strong_edges() {
    let mut outcome = Ok(0);
    for (i, g) in suite().iter().enumerate() {
        let strong = strong_edges(g);
        let expected: Vec<_> = (0..g.edge_count()).filter(|&e| oracle_is_strong(e, g)).collect();
        let weak = weak_edges(g).unwrap();
        if strong != expected {
            outcome = Err(format!("instance {i}: strong {strong:?}, oracle {expected:?}"));
            break;
        }
        if !strong.iter().all(|e| weak.contains(e)) {
            outcome = Err(format!("instance {i}: strong edge not weak"));
            break;
        }
        outcome = outcome.map(|c| c + strong.len());
    }
    criterion(
        3,
        "strong edges equal oracle and are weak",
        outcome.map(|c| format!("200 instances, {c} strong edges total")),
    );
}

#[test]
fn criterion_4_lower_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut configs = 0;
    let mut monotone_checks = 0;
    let mut failure = None;
    while configs < 1000 && failure.is_none() {
        let n = rng.gen_range(4..=6);
        let g = random_graph(&mut rng, n, 0.8);
        let trees = trees_with_deviation(&g);
        for _ in 0..20 {
            let mut c = Configuration::root(&g);
            for id in 0..g.edge_count() {
                match rng.gen_range(0..5) {
                    0 => {
                        c.select(&g, id);
                    }
                    1 => c.reject(id),
                    _ => {}
                }
            }
            let inside = |c: &Configuration, t: &[EdgeId]| {
                c.selected_edges().iter().all(|e| t.contains(e)) && !c.rejected_edges().iter().any(|e| t.contains(e))
            };
            let Some(best) = trees.iter().filter(|(t, _)| inside(&c, t)).map(|&(_, d)| d).min() else {
                continue;
            };
            configs += 1;
            let lb = lower_bound(&c, &g).unwrap();
            if lb > best {
                failure = Some(format!("LB {lb} > optimum {best} on {c:?}"));
                break;
            }
            for e in c.free_edges() {
                let mut with = c.clone();
                if with.select(&g, e) && trees.iter().any(|(t, _)| inside(&with, t)) {
                    monotone_checks += 1;
                    if lower_bound(&with, &g).unwrap() < lb {
                        failure = Some(format!("selecting {e} lowered the bound"));
                    }
                }
                let mut without = c.clone();
                without.reject(e);
                if trees.iter().any(|(t, _)| inside(&without, t)) {
                    monotone_checks += 1;
                    if lower_bound(&without, &g).unwrap() < lb {
                        failure = Some(format!("rejecting {e} lowered the bound"));
                    }
                }
            }
        }
    }
    let outcome = match failure {
        Some(f) => Err(f),
        None => Ok(format!(
            "{configs} configurations valid, {monotone_checks} monotonicity checks hold"
        )),
    };
    criterion(4, "lower bound valid and monotone", outcome);
}

#[test]
fn criterion_5_extreme_scenarios() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut instances = 0;
    let mut trees_checked = 0;
    let mut failure = None;
    while instances < 60 && failure.is_none() {
        let n = rng.gen_range(3..=6);
        let g = random_graph(&mut rng, n, 0.7);
        if g.edge_count() > 12 {
            continue;
        }
        instances += 1;
        for t in enumerate_spanning_trees(&g, DEFAULT_TREE_BUDGET).unwrap() {
            trees_checked += 1;
            let by_scenarios = oracle_deviation_by_scenarios(&t, &g).unwrap();
            let direct = edge_set_deviation(&t, &g);
            if by_scenarios != direct {
                failure = Some(format!("tree {t:?}: scenarios {by_scenarios}, worst case {direct}"));
                break;
            }
        }
    }
    let outcome = match failure {
        Some(f) => Err(f),
        None => Ok(format!("{trees_checked} trees on {instances} instances agree")),
    };
    criterion(5, "worst case equals max over extreme scenarios", outcome);
}

#[test]
fn criterion_6_root_pruning() {
    let mut outcome = Ok(());
    for (i, g) in suite().iter().enumerate() {
        let weak = weak_edges(g).unwrap();
        let trees = trees_with_deviation(g);
        let optimum = trees.iter().map(|&(_, d)| d).min().unwrap();
        let pruned = trees
            .iter()
            .filter(|(t, _)| t.iter().all(|e| weak.contains(e)))
            .map(|&(_, d)| d)
            .min();
        if pruned != Some(optimum) {
            outcome = Err(format!(
                "instance {i}: optimum {optimum}, after root pruning {pruned:?}"
            ));
            break;
        }
    }
    criterion(
        6,
        "root pruning keeps the optimum",
        outcome.map(|()| "200 instances".to_string()),
    );
}

#[test]
fn criterion_7_performance_envelope() {
    let mut failure = None;
    let mut slowest = Duration::ZERO;
    for class in 1..=6 {
        for seed in 0..10 {
            let g = generate(&GeneratorSpec::new(class, 10, seed)).unwrap();
            assert_eq!(g.edge_count(), 45);
            for mode in PruningMode::ALL {
                let start = Instant::now();
                solve(&g, &SolverOptions::default().with_mode(mode)).unwrap();
                let t = start.elapsed();
                slowest = slowest.max(t);
                if t >= Duration::from_secs(1) {
                    failure = Some(format!("class {class} seed {seed} {mode}: {t:.2?}"));
                }
            }
        }
    }
    let mut clustered = Vec::new();
    for class in [7u8, 8] {
        let mut nodes = [0u64; 2];
        for seed in 0..10 {
            let g = generate(&GeneratorSpec::new(class, 15, seed)).unwrap();
            for (k, mode) in PruningMode::ALL.into_iter().enumerate() {
                let start = Instant::now();
                let out = solve(&g, &SolverOptions::default().with_mode(mode)).unwrap();
                let t = start.elapsed();
                if t >= Duration::from_secs(30) {
                    failure = Some(format!("class {class} seed {seed} {mode}: {t:.2?}"));
                }
                nodes[k] += out.stats.nodes_visited;
            }
        }
        clustered.push(format!("class {class} n=15 nodes csr={} csf={}", nodes[0], nodes[1]));
    }
    let outcome = match failure {
        Some(f) => Err(f),
        None => Ok(format!("slowest n=10 solve {slowest:.2?}; {}", clustered.join("; "))),
    };
    criterion(7, "desk-scale performance", outcome);
}

#[test]
fn criterion_8_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let mut failure = None;
    for (class, nodes, seed) in [(1, 10, 7), (4, 8, 1), (7, 15, 3), (8, 15, 9)] {
        let spec = GeneratorSpec::new(class, nodes, seed);
        let a = generate_instance(&spec).unwrap();
        let b = generate_instance(&spec).unwrap();
        if a != b {
            failure = Some(format!("class {class} seed {seed}: instance text differs"));
            break;
        }
        let path = dir.path().join(format!("c{class}.rstp"));
        std::fs::write(&path, &a).unwrap();
        for mode in PruningMode::ALL {
            let opts = SolverOptions::default().with_mode(mode);
            let r1 = solve_instance(&path, opts).unwrap().render_without_wall_clock();
            let r2 = solve_instance(&path, opts).unwrap().render_without_wall_clock();
            if r1 != r2 {
                failure = Some(format!("class {class} {mode}: reports differ"));
            }
        }
    }
    // Pinned digest of one generated instance guards cross-platform stability.
    let pinned = generate_instance(&GeneratorSpec::new(1, 4, 0)).unwrap();
    if failure.is_none() && pinned != PINNED_CLASS1_N4_SEED0 {
        failure = Some(format!("class 1 n=4 seed 0 changed:\n{pinned}"));
    }
    let outcome = match failure {
        Some(f) => Err(f),
        None => Ok("instances byte-identical, reports identical modulo wall_ms".to_string()),
    };
    criterion(8, "determinism", outcome);
}

const PINNED_CLASS1_N4_SEED0: &str = "rstp 4 6\ne 0 1 2 10\ne 0 2 8 9\ne 0 3 1 2\ne 1 2 6 9\ne 1 3 4 5\ne 2 3 0 6\n";
