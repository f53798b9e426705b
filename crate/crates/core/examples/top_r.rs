//! Greedy vertex-disjoint k-defective cliques.

use kdc::generate::gnp;
use kdc::{fixtures, top_r_diversified, SolverConfig};

fn main() {
    let g = fixtures::figure2();
    for res in top_r_diversified(&g, 3, &SolverConfig::new(0)) {
        let names: Vec<&str> = res.best.iter().map(|&v| g.label(v)).collect();
        println!("clique of size {}: {}", res.size, names.join(" "));
    }

    let g = gnp(120, 0.3, 5);
    let sizes: Vec<usize> = top_r_diversified(&g, 10, &SolverConfig::new(2))
        .iter()
        .map(|r| r.size)
        .collect();
    println!("G(120, 0.3), k = 2, r = 10: sizes {sizes:?}");
}
