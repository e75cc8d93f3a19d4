//! Instance file formats: the line format, the JSON form, aggregation of a
//! preference profile, and the content digest.
//!
//! ```bash
//! cargo run -p tournsol --example instance_files
//! ```

use tournsol::gen::{self, GenSpec, Kind};
use tournsol::instance;
use tournsol::majority::{MajorityStructure, PreferenceProfile};

fn main() {
    // Text round-trip.
    let s = gen::generate(&GenSpec::new(5, Kind::Cycle, 0)).unwrap();
    let text = instance::to_text(&s);
    println!("five-cycle as a file:\n{text}");
    assert_eq!(instance::parse_text(&text).unwrap(), s);

    // JSON round-trip.
    let json = instance::to_json(&s);
    println!("as JSON: {json}\n");
    assert_eq!(instance::parse_json(&json).unwrap(), s);

    // A profile of strict orders aggregates by simple pairwise majority.
    let profile = PreferenceProfile::new(
        3,
        vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
    )
    .unwrap();
    let cyclic = MajorityStructure::from_profile(&profile);
    println!(
        "classic three-voter cycle aggregates to edges {:?}",
        cyclic.edges().iter().map(|&(i, j)| (i + 1, j + 1)).collect::<Vec<_>>()
    );
    let via_json =
        instance::parse_json(r#"{"n": 3, "profile": [[1,2,3],[2,3,1],[3,1,2]]}"#).unwrap();
    assert_eq!(via_json, cyclic);

    // Digest: stable identifier derived from the canonical serialization.
    println!("\ndigest of the cycle instance: {}", instance::digest(&s));
    println!("digest of the built-in fixture: {}", instance::digest(&gen::fixture()));

    // Parse errors carry line numbers.
    let err = instance::parse_text("n 3\nmu 1 5\n").unwrap_err();
    println!("\nbroken file rejected with: {err}");
}
