//! Upper bounds on the three-partite instance: two vertices already chosen,
//! nine candidates in three color classes, budget 3.

use kdc::bounds::{color_candidates, ub1, ub1_weights, ub2, ub3, ub_coloring_basic};
use kdc::{fixtures, Instance};

fn main() {
    let g = fixtures::figure4();
    let mut inst = Instance::new(&g, 3);
    inst.add_to_s(0);
    inst.add_to_s(1);
    let p = color_candidates(&inst);
    println!("color classes: {}", p.c());
    for w in ub1_weights(&inst, &p) {
        println!("  {:>3}  non-neighbors in S {}  weight {}", g.label(w.vertex), w.nn_in_s, w.weight);
    }
    println!("classic coloring bound: {}", ub_coloring_basic(inst.s().len(), 3, &p));
    println!("UB1 {}  UB2 {:?}  UB3 {}", ub1(&inst, &p), ub2(&inst), ub3(&inst));
}
