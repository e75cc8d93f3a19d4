//! The five covering versions, their modified forms, and the uncaptured set
//! on an instance with ties — where the versions actually differ.
//!
//! ```bash
//! cargo run -p tournsol --example uncovered_family
//! ```

use tournsol::gen;
use tournsol::oracle;
use tournsol::solvers::{self, CoveringVersion};

fn main() {
    let s = gen::fixture();
    println!("six alternatives, ties present\n");

    println!("{:<10} {:<22} {:<22}", "version", "uncovered", "modified");
    for v in CoveringVersion::ALL {
        let original = solvers::uncovered(&s, v, false);
        let modified = solvers::uncovered(&s, v, true);
        assert!(modified.is_subset_of(&original));
        println!(
            "{:<10} {:<22} {:<22}",
            format!("V{}", v.number()),
            format!("{:?}", original.labels()),
            format!("{:?}", modified.labels()),
        );
    }

    println!("\nuncaptured: {:?}", solvers::uncaptured(&s).labels());

    // The formula path is one complement-multiply away from the covering
    // relation itself; the oracle builds that relation pair by pair.
    let rel = oracle::covering_relation(&s, CoveringVersion::V3, false);
    println!("\nthird-version covering pairs (i covers j):");
    for i in 0..s.n() {
        for j in rel.row(i).members() {
            println!("  {} covers {}", i + 1, j + 1);
        }
    }
    assert_eq!(
        solvers::uncovered(&s, CoveringVersion::V3, false),
        oracle::uncovered_set(&s, CoveringVersion::V3, false)
    );

    // On tournaments all ten variants collapse to one set.
    let t = gen::generate(&tournsol::gen::GenSpec::new(
        7,
        tournsol::gen::Kind::Tournament,
        3,
    ))
    .unwrap();
    let uc = solvers::uncovered(&t, CoveringVersion::V1, false);
    for v in CoveringVersion::ALL {
        assert_eq!(solvers::uncovered(&t, v, false), uc);
        assert_eq!(solvers::uncovered(&t, v, true), uc);
    }
    println!("\non a random 7-tournament every variant equals {:?}", uc.labels());
}
