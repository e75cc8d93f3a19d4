//! Weakly stable sets: the formula path, the membership criterion, and plain
//! subset enumeration agreeing on a tied instance.
//!
//! ```bash
//! cargo run -p tournsol --example weakly_stable
//! ```

use tournsol::boolmat::BoolVec;
use tournsol::gen::{self, GenSpec};
use tournsol::oracle::{self, StabilityVersion};
use tournsol::solvers;

fn main() {
    let s = gen::generate(&GenSpec::weak(6, 0.4, 2024)).unwrap();
    println!("random 6-alternative instance with ties, seed 2024");
    println!(
        "majority edges: {:?}\n",
        s.edges().iter().map(|&(i, j)| (i + 1, j + 1)).collect::<Vec<_>>()
    );

    // Second version: every outsider is dominated from inside the set.
    let mws2 = solvers::mws2(&s);
    let enum2 =
        oracle::minimal_weakly_stable_union(&s, StabilityVersion::V2, oracle::DEFAULT_SUBSET_BOUND)
            .unwrap();
    println!("v2 union, formula:     {:?}", mws2.labels());
    println!("v2 union, enumeration: {:?}", enum2.labels());
    assert_eq!(mws2, enum2);

    // Third version: dominated from inside or tied with a member.
    let mws3 = solvers::mws3(&s);
    let enum3 =
        oracle::minimal_weakly_stable_union(&s, StabilityVersion::V3, oracle::DEFAULT_SUBSET_BOUND)
            .unwrap();
    let criterion = oracle::mws3_criterion(&s);
    println!("\nv3 union, formula:     {:?}", mws3.labels());
    println!("v3 union, enumeration: {:?}", enum3.labels());
    println!("v3 union, criterion:   {:?}", criterion.labels());
    assert_eq!(mws3, enum3);
    assert_eq!(mws3, criterion);

    // Individual sets can be probed directly.
    println!("\nstability of some subsets (v3):");
    for members in [vec![0], vec![0, 1], vec![2, 4]] {
        let b = BoolVec::from_members(s.n(), &members);
        let stable = oracle::is_weakly_stable(&s, &b, StabilityVersion::V3).unwrap();
        println!("  {:?} -> {}", b.labels(), if stable { "stable" } else { "not stable" });
    }
}
