//! The k-stable families of a tournament: classes SP and SS, cumulative P
//! and S, the stability horizon m, and the containment chain.
//!
//! ```bash
//! cargo run -p tournsol --example stable_sets
//! ```

use tournsol::gen::{self, GenSpec, Kind};
use tournsol::solvers::{self, ConceptId};

fn main() {
    let s = gen::generate(&GenSpec::new(10, Kind::Tournament, 11)).unwrap();
    println!("random 10-alternative tournament, seed 11\n");

    let m = solvers::stability_horizon(&s).unwrap();
    let md = solvers::minimal_dominant(&s);
    println!("stability horizon m = {m}; minimal dominant set {:?}\n", md.labels());

    println!("{:<4} {:<26} {:<26}", "k", "SP(k) new alternatives", "SS(k) new set members");
    for k in 1..=m {
        let sp = solvers::sp_k(&s, k).unwrap();
        let ss = solvers::ss_k(&s, k).unwrap();
        println!(
            "{:<4} {:<26} {:<26}",
            k,
            format!("{:?}", sp.labels()),
            format!("{:?}", ss.labels()),
        );
    }

    println!("\ncumulative chain:");
    for k in 1..=m {
        let pk = solvers::p_k(&s, k).unwrap();
        let sk = solvers::s_k(&s, k).unwrap();
        let pk2 = solvers::p_k(&s, k + 2).unwrap();
        assert!(pk.is_subset_of(&sk) && sk.is_subset_of(&pk2) && pk2.is_subset_of(&md));
        println!("  P({k}) = {:?}  within  S({k}) = {:?}", pk.labels(), sk.labels());
    }
    assert_eq!(solvers::p_k(&s, m).unwrap(), md);

    // The full report carries the same families.
    let report = solvers::solve_all(&s);
    assert_eq!(report.m, Some(m));
    assert_eq!(report.get(ConceptId::P(m)).unwrap(), md.labels());
    println!("\nreport digest {} confirms P(m) = MD", report.digest);
}
