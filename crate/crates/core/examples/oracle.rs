//! Cross-check the solver against exhaustive search on small random graphs.

use kdc::generate::gnp;
use kdc::verify::{brute_force_max, brute_force_max_clique, OracleBudget};
use kdc::{kdc, kdc_t, SolverConfig};

fn main() {
    let mut checked = 0;
    for seed in 0..60 {
        let g = gnp(14, 0.5, seed);
        let clique = brute_force_max_clique(&g).len();
        for k in [0, 1, 2, 4] {
            let want = brute_force_max(&g, k, OracleBudget::default()).unwrap().len();
            let got = kdc(&g, &SolverConfig::new(k)).size;
            let reference = kdc_t(&g, &SolverConfig::new(k)).size;
            assert_eq!((got, reference), (want, want), "seed {seed} k {k}");
            assert!(k > 0 || want == clique);
            checked += 1;
        }
    }
    println!("{checked} instances agree with exhaustive search");
}
