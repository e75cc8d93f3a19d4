//! Walks the built-in six-alternative instance end to end: the matrix triple,
//! contour sets, and every solution concept.
//!
//! ```bash
//! cargo run -p tournsol --example worked_example
//! ```

use tournsol::closure;
use tournsol::gen;
use tournsol::solvers;

fn main() {
    let s = gen::fixture();
    println!("alternatives: {}", s.n());
    println!(
        "majority edges (1-based): {:?}",
        s.edges().iter().map(|&(i, j)| (i + 1, j + 1)).collect::<Vec<_>>()
    );
    println!("tied pairs: {:?}\n", s.tie_pairs().iter().map(|&(i, j)| (i + 1, j + 1)).collect::<Vec<_>>());

    println!("M (strict majority):\n{}\n", s.m());
    println!("T (ties):\n{}\n", s.t());
    println!("U = M + T + E:\n{}\n", s.u());

    let i = 1; // alternative 2 in 1-based labels
    println!("contours of alternative {}:", i + 1);
    println!("  dominates   L = {:?}", s.lower_contour(i).labels());
    println!("  dominated D = {:?}", s.upper_contour(i).labels());
    println!("  tied      H = {:?}\n", s.horizon(i).labels());

    let ladder = closure::m_ladder(&s);
    println!("closure ladder stabilizes at d(mu) = {}", ladder.fixpoint_index());
    for k in 1..=ladder.fixpoint_index() {
        println!("M_({k}):\n{}\n", ladder.level(k));
    }

    let report = solvers::solve_all(&s);
    println!("digest {}  d_mu {}  d_nu {}", report.digest, report.d_mu, report.d_nu);
    for entry in &report.concepts {
        println!("{:>5}: {:?}", entry.concept.to_string(), entry.members);
    }
}
