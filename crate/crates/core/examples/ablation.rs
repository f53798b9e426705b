//! Search effort with individual techniques switched off.

use kdc::generate::gnp;
use kdc::{kdc, SolverConfig};

fn main() {
    let variants: [(&str, fn(SolverConfig) -> SolverConfig); 4] = [
        ("full", |c| c),
        ("no UB1", SolverConfig::without_ub1),
        ("no RR3/RR4", SolverConfig::without_rr34),
        ("degen only", SolverConfig::degen_only),
    ];
    for (n, p, k) in [(60, 0.5, 2), (80, 0.4, 3), (100, 0.3, 4)] {
        let g = gnp(n, p, 11);
        println!("G({n}, {p}) k = {k}");
        for (name, make) in variants {
            let res = kdc(&g, &make(SolverConfig::new(k)));
            println!(
                "  {name:<11} size {:>3}  nodes {:>8}  {:>8.1} ms",
                res.size,
                res.stats.nodes,
                res.stats.elapsed.as_secs_f64() * 1e3
            );
        }
    }
}
