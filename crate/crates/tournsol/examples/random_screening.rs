//! Programmatic use of the screening harness: every formula cross-validated
//! against its definitional reference on seeded random instances.
//!
//! ```bash
//! cargo run -p tournsol --example random_screening
//! ```

use tournsol::check::{self, CheckConfig};

fn main() {
    let config = CheckConfig::new(25, 3, 7, 0xFEED);
    println!(
        "screening {} weak instances and {} tournaments per size {}..={}\n",
        config.trials, config.trials, config.n_lo, config.n_hi
    );

    let outcome = check::run_full(&config);
    for (name, count) in &outcome.properties {
        println!("{count:>6}  {name}");
    }
    println!(
        "\n{} checks across {} properties",
        outcome.total_checks(),
        outcome.properties.len()
    );
    match outcome.failure {
        None => println!("all held"),
        Some(f) => {
            println!("counterexample for {:?}: {}", f.property, f.detail);
            println!("{}", f.instance_text);
            std::process::exit(2);
        }
    }
}
