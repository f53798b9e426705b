//! The two degeneracy heuristics on the seven-vertex example and on a
//! random graph.

use kdc::decompose::degeneracy_ordering;
use kdc::fixtures;
use kdc::generate::gnp;
use kdc::preprocess::{degen, degen_opt};
use kdc::{kdc, SolverConfig};

fn main() {
    let g = fixtures::figure6();
    let info = degeneracy_ordering(&g);
    let order: Vec<&str> = info.order.iter().map(|&v| g.label(v)).collect();
    println!("degeneracy ordering: {} (delta = {})", order.join(" "), info.delta);
    for (name, set) in [("degen", degen(&g, 1)), ("degen-opt", degen_opt(&g, 1))] {
        let names: Vec<&str> = set.iter().map(|&v| g.label(v)).collect();
        println!("{name:>9} k=1: size {} {{{}}}", set.len(), names.join(", "));
    }

    let g = gnp(200, 0.1, 7);
    for k in [0, 2, 5] {
        let exact = kdc(&g, &SolverConfig::new(k)).size;
        println!(
            "G(200, 0.1) k={k}: degen {} degen-opt {} exact {exact}",
            degen(&g, k).len(),
            degen_opt(&g, k).len()
        );
    }
}
