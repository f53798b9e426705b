//! Degeneracy, cores and trusses of a power-law graph.

use kdc::decompose::{degeneracy_ordering, k_core, k_truss};
use kdc::generate::powerlaw_cluster;

fn main() {
    let g = powerlaw_cluster(5000, 4, 0.3, 1);
    let info = degeneracy_ordering(&g);
    println!("n = {}, m = {}, degeneracy {}", g.n(), g.m(), info.delta);
    for c in (1..=info.delta).step_by(2.max(info.delta / 5)) {
        println!("{c:>3}-core: {} vertices", k_core(&g, c).len());
    }
    for t in 3..=6 {
        println!("{t:>3}-truss: {} edges", k_truss(&g, t).len());
    }
}
