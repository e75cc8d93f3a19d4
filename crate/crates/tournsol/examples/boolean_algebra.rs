//! The Boolean matrix layer on its own: products, parts, maxima.
//!
//! ```bash
//! cargo run -p tournsol --example boolean_algebra
//! ```

use tournsol::boolmat::{BoolMatrix, BoolVec};

fn main() {
    let r: BoolMatrix = "0110 0010 0001 1000".parse().unwrap();
    println!("R:\n{r}\n");
    println!("R^tr:\n{}\n", r.transpose());
    println!("complement(R):\n{}\n", r.complement());
    println!("R·R (two-step pairs):\n{}\n", r.mul(&r));

    // Any relation splits into one-directional and mutual pairs.
    let p = r.asym_part();
    let s = r.sym_part();
    println!("asymmetric part:\n{p}\n");
    println!("symmetric part:\n{s}\n");
    assert_eq!(p.or(&s), r);

    // Maximal elements: nothing beats them without a reply.
    println!("max(R)        = {:?}", r.max_general().labels());
    println!("max(asym(R))  = {:?}", p.max_asymmetric().labels());
    assert_eq!(r.max_general(), p.max_asymmetric());

    // Accumulated powers of (R + E) are reachability within k steps.
    let e = BoolMatrix::identity(4);
    let reach2 = r.or(&e).power(2);
    println!("\nreach within 2 steps:\n{reach2}");

    // Vectors are subsets; products select rows.
    let b = BoolVec::from_members(4, &[0, 2]);
    println!("\nB = {:?},  R·b = {:?}", b.labels(), r.mul_vec(&b).labels());
}
