//! Heuristic start and global reduction on a graph with a planted dense
//! community.

use kdc::generate::{plant_near_clique, powerlaw_cluster};
use kdc::preprocess::{global_reduce, preprocess};
use kdc::SolverConfig;

fn main() {
    let base = powerlaw_cluster(20000, 5, 0.2, 3);
    let members: Vec<usize> = (0..15).map(|i| i * 997 % 20000).collect();
    let g = plant_near_clique(&base, &members, 3, 3);
    let (_, rep) = preprocess(&g, &SolverConfig::new(3));
    println!("input n = {}, m = {}", g.n(), g.m());
    println!(
        "initial solution {} -> reduced n = {}, m = {} in {:?}",
        rep.initial_size, rep.reduced_n, rep.reduced_m, rep.elapsed
    );
    for lb in [4, 8, 12, 16] {
        let r = global_reduce(&g, lb, 3);
        println!("lb {lb:>2}: n = {}, m = {}", r.graph.n(), r.graph.m());
    }
}
