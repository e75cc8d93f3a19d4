//! Solution concepts for majority relations and tournaments, computed as
//! Boolean matrix-vector formulas.
//!
//! A majority relation over `n` alternatives is held as a validated pair of
//! bit matrices (strict majority M, ties T). Every supported solution concept
//! — Condorcet winner, core, the five uncovered-set variants and their
//! modifications, the uncaptured set, unions of minimal weakly stable sets,
//! strong and weak top cycles, the untrapped set, and the k-stable families
//! on tournaments — reduces to a handful of Boolean products, sums and
//! complements over those matrices.
//!
//! The [`oracle`] module re-implements every concept from its set-theoretic
//! definition (contour-set scans, subset enumeration, graph search) so the
//! formula path can be cross-validated; [`check`] wires both paths into a
//! randomized screening harness.
//!
//! Start with the runnable examples:
//!
//! ```bash
//! cargo run -p tournsol --example worked_example
//! cargo run -p tournsol --example boolean_algebra
//! cargo run -p tournsol --example closure_ladders
//! cargo run -p tournsol --example uncovered_family
//! cargo run -p tournsol --example weakly_stable
//! cargo run -p tournsol --example stable_sets
//! cargo run -p tournsol --example instance_files
//! cargo run -p tournsol --example random_screening
//! ```
//!
//! or the `tournsol` binary (`solve`, `gen`, `check`, `bench`).

pub mod boolmat;
pub mod check;
pub mod cli;
pub mod closure;
pub mod gen;
pub mod instance;
pub mod majority;
pub mod oracle;
pub mod solvers;

pub use boolmat::{BoolMatrix, BoolVec};
pub use majority::{MajorityStructure, NotTournament, PreferenceProfile};
pub use solvers::{ConceptId, CoveringVersion, SolutionReport};
