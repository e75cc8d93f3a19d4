//! k-step closures, diameters, and the relations a tournament induces at
//! each reachability horizon.
//!
//! ```bash
//! cargo run -p tournsol --example closure_ladders
//! ```

use tournsol::closure;
use tournsol::gen::{self, GenSpec, Kind};
use tournsol::oracle;

fn main() {
    let s = gen::generate(&GenSpec::new(9, Kind::Tournament, 42)).unwrap();
    println!("random 9-alternative tournament, seed 42\n");

    let ladder = closure::m_ladder(&s);
    println!("diameter d(mu) = {}", ladder.fixpoint_index());
    for k in 1..=ladder.fixpoint_index() {
        let level = ladder.level(k);
        let full_rows = (0..s.n())
            .filter(|&i| level.row(i).count() == s.n())
            .count();
        println!("  level {k}: {full_rows} alternatives reach everything within {k} steps");
    }

    // The ladder is breadth-first search in matrix clothing.
    let table = oracle::distances(&s);
    assert_eq!(ladder.fixpoint_index(), oracle::diameter(&table));
    for k in 1..=ladder.fixpoint_index() {
        assert_eq!(*ladder.level(k), oracle::reachability_within(&table, k));
    }
    println!("\nladder agrees with per-source breadth-first search");

    // Each level induces a complete relation triple on the tournament.
    for k in 1..=2 {
        let ind = closure::induced_relations(&s, k).unwrap();
        let asym_pairs: usize = (0..s.n()).map(|i| ind.m_tilde.row(i).count()).sum();
        let tied_pairs: usize = (0..s.n()).map(|i| ind.t_tilde.row(i).count()).sum();
        println!(
            "induced at k = {k}: {asym_pairs} one-way pairs, {} mutual pairs",
            tied_pairs / 2
        );
    }
}
