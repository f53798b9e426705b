//! Solve an edge-list file, or the built-in twelve-vertex example.
//!
//!     cargo run --release --example solve -- [path] [k]

use std::fs::File;
use std::io::BufReader;

use kdc::{fixtures, kdc, load_edge_list, SolverConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let g = match args.next() {
        Some(path) => load_edge_list(BufReader::new(File::open(path)?))?.0,
        None => fixtures::figure2(),
    };
    let ks: Vec<usize> = match args.next() {
        Some(k) => vec![k.parse()?],
        None => vec![0, 1, 2, 3],
    };
    println!("n = {}, m = {}", g.n(), g.m());
    for k in ks {
        let res = kdc(&g, &SolverConfig::new(k));
        let names: Vec<&str> = res.best.iter().map(|&v| g.label(v)).collect();
        println!(
            "k = {k}: size {} optimal {} nodes {} -> {}",
            res.size,
            res.optimal,
            res.stats.nodes,
            names.join(" ")
        );
    }
    Ok(())
}
