//! Base of the exponential running-time bound for small budgets.

use kdc::verify::gamma_k;

fn main() {
    for k in 0..=10 {
        println!("k = {k:>2}: gamma = {:.6}", gamma_k(k));
    }
}
