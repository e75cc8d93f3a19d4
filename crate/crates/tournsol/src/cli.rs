//! Command implementations behind the `tournsol` binary: solve, gen, check,
//! bench. Everything writes to a caller-supplied writer so the commands stay
//! testable; exit-code policy lives in the binary (0 ok, 1 usage or parse
//! trouble, 2 property failure).

use crate::boolmat::BoolMatrix;
use crate::check::{self, CheckConfig, CheckOutcome};
use crate::closure;
use crate::gen::{self, GenSpec, Kind, FIXTURE_NAME};
use crate::instance::{self, ParseError};
use crate::majority::MajorityStructure;
use crate::oracle;
use crate::solvers::{self, ConceptEntry, ConceptId, SolutionReport, SolverError};
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: ParseError,
    },
    #[error("concept {0} is defined for tournaments only, but the instance has ties (use an instance without ties or drop the concept)")]
    TournamentRequired(ConceptId),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Structured,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "structured" => Ok(OutputFormat::Structured),
            other => Err(CliError::Usage(format!(
                "unknown format {other:?}, want text or structured"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub enum InputSource {
    Path(PathBuf),
    Fixture(String),
}

/// Reads an instance: files starting with `{` parse as the structured JSON
/// format, anything else as the line format.
pub fn load_instance(source: &InputSource) -> Result<MajorityStructure, CliError> {
    match source {
        InputSource::Fixture(name) if name == FIXTURE_NAME => Ok(gen::fixture()),
        InputSource::Fixture(name) => Err(CliError::Usage(format!(
            "unknown fixture {name:?}; the built-in fixture is named {FIXTURE_NAME:?}"
        ))),
        InputSource::Path(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
                path: path.clone(),
                source,
            })?;
            let parsed = if text.trim_start().starts_with('{') {
                instance::parse_json(&text)
            } else {
                instance::parse_text(&text)
            };
            parsed.map_err(|source| CliError::Parse {
                path: path.display().to_string(),
                source,
            })
        }
    }
}

/// The `--concepts` argument: `all`, or a comma list of concept ids where
/// the k-families may be written either with an explicit degree (`SP2`) or
/// bare (`SP`) combined with `--k`.
pub fn parse_concepts(list: &str, k: Option<usize>) -> Result<Option<Vec<ConceptId>>, CliError> {
    if list.eq_ignore_ascii_case("all") {
        return Ok(None);
    }
    let mut ids = Vec::new();
    for item in list.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let family = match item.to_ascii_uppercase().as_str() {
            "P" => Some(ConceptId::P as fn(usize) -> ConceptId),
            "SP" => Some(ConceptId::Sp as fn(usize) -> ConceptId),
            "S" => Some(ConceptId::S as fn(usize) -> ConceptId),
            "SS" => Some(ConceptId::Ss as fn(usize) -> ConceptId),
            _ => None,
        };
        if let Some(build) = family {
            let k = k.ok_or_else(|| {
                CliError::Usage(format!("concept {item} needs --k (or write e.g. {item}2)"))
            })?;
            if k == 0 {
                return Err(CliError::Usage("--k must be at least 1".into()));
            }
            ids.push(build(k));
            continue;
        }
        ids.push(
            item.parse::<ConceptId>()
                .map_err(CliError::Usage)?,
        );
    }
    if ids.is_empty() {
        return Err(CliError::Usage("no concepts requested".into()));
    }
    Ok(Some(ids))
}

fn compute_concept(s: &MajorityStructure, id: ConceptId) -> Result<ConceptEntry, CliError> {
    let lift = |r: Result<crate::boolmat::BoolVec, SolverError>| match r {
        Ok(v) => Ok(v),
        Err(SolverError::NotTournament(_)) => Err(CliError::TournamentRequired(id)),
        Err(SolverError::InvalidK) => Err(CliError::Usage("k must be at least 1".into())),
    };
    let members = match id {
        ConceptId::Cw => solvers::condorcet_winner(s),
        ConceptId::Cr => solvers::core(s),
        ConceptId::Uc(v) => solvers::uncovered(s, v, false),
        ConceptId::UcM(v) => solvers::uncovered(s, v, true),
        ConceptId::Ucp => solvers::uncaptured(s),
        ConceptId::Mws2 => solvers::mws2(s),
        ConceptId::Mws3 => solvers::mws3(s),
        ConceptId::Mu => solvers::minimal_undominated_union(s),
        ConceptId::Ut => solvers::untrapped(s),
        ConceptId::Md => solvers::minimal_dominant(s),
        ConceptId::P(k) => lift(solvers::p_k(s, k))?,
        ConceptId::Sp(k) => lift(solvers::sp_k(s, k))?,
        ConceptId::S(k) => lift(solvers::s_k(s, k))?,
        ConceptId::Ss(k) => lift(solvers::ss_k(s, k))?,
    };
    Ok(ConceptEntry {
        concept: id,
        members: members.labels(),
    })
}

fn report_for(
    s: &MajorityStructure,
    selection: Option<&[ConceptId]>,
) -> Result<SolutionReport, CliError> {
    match selection {
        None => Ok(solvers::solve_all(s)),
        Some(ids) => {
            let concepts = ids
                .iter()
                .map(|&id| compute_concept(s, id))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(SolutionReport {
                digest: instance::digest(s),
                n: s.n(),
                tournament: s.is_tournament(),
                d_mu: closure::m_ladder(s).fixpoint_index(),
                d_nu: closure::u_ladder(s).fixpoint_index(),
                m: solvers::stability_horizon(s).ok(),
                concepts,
            })
        }
    }
}

fn render_text(report: &SolutionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digest: {}", report.digest);
    let _ = writeln!(out, "n: {}", report.n);
    let _ = writeln!(out, "tournament: {}", report.tournament);
    let _ = writeln!(out, "d_mu: {}", report.d_mu);
    let _ = writeln!(out, "d_nu: {}", report.d_nu);
    if let Some(m) = report.m {
        let _ = writeln!(out, "m: {m}");
    }
    for entry in &report.concepts {
        let members: Vec<String> = entry.members.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}: [{}]", entry.concept, members.join(","));
    }
    out
}

/// `solve`: read an instance, compute the requested concepts, print a report.
pub fn solve_command(
    source: &InputSource,
    concepts: &str,
    k: Option<usize>,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let s = load_instance(source)?;
    let selection = parse_concepts(concepts, k)?;
    let report = report_for(&s, selection.as_deref())?;
    match format {
        OutputFormat::Text => out.write_all(render_text(&report).as_bytes())?,
        OutputFormat::Structured => {
            serde_json::to_writer_pretty(&mut *out, &report)
                .map_err(|e| std::io::Error::other(e.to_string()))?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

/// `gen`: emit an instance file for the given spec.
pub fn gen_command(spec: &GenSpec, out: &mut impl Write) -> Result<(), CliError> {
    let s = gen::generate(spec).map_err(|e| CliError::Usage(e.to_string()))?;
    out.write_all(instance::to_text(&s).as_bytes())?;
    Ok(())
}

/// `check`: run the full screening suite; the caller maps a failed outcome
/// to exit code 2.
pub fn check_command(
    trials: usize,
    n_lo: usize,
    n_hi: usize,
    seed: u64,
    out: &mut impl Write,
) -> Result<CheckOutcome, CliError> {
    if n_lo == 0 || n_hi < n_lo {
        return Err(CliError::Usage(format!(
            "bad size range {n_lo}..{n_hi}; want 1 <= lo <= hi"
        )));
    }
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let outcome = check::run_full(&CheckConfig::new(trials, n_lo, n_hi, seed));
    for (name, count) in &outcome.properties {
        writeln!(out, "{name}: {count} checks")?;
    }
    writeln!(
        out,
        "total: {} checks across {} properties",
        outcome.total_checks(),
        outcome.properties.len()
    )?;
    match &outcome.failure {
        None => writeln!(out, "PASS")?,
        Some(f) => {
            writeln!(out, "FAIL: {}", f.property)?;
            writeln!(out, "  {}", f.detail)?;
            writeln!(out, "counterexample instance:")?;
            out.write_all(f.instance_text.as_bytes())?;
        }
    }
    Ok(outcome)
}

fn min_time(reps: usize, mut body: impl FnMut()) -> Duration {
    let mut best = Duration::MAX;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        body();
        best = best.min(start.elapsed());
    }
    best
}

/// `bench`: wall-clock the formula path per size (min over reps), with the
/// closure depth and a bit-packed vs triple-loop product comparison.
/// The naive column is skipped above 256 where it stops being informative.
pub fn bench_command(sizes: &[usize], reps: usize, out: &mut impl Write) -> Result<(), CliError> {
    if sizes.is_empty() {
        return Err(CliError::Usage("no sizes given".into()));
    }
    writeln!(
        out,
        "{:>6} {:>6} {:>14} {:>14} {:>14} {:>9}",
        "n", "d_mu", "solve_all", "product", "naive", "speedup"
    )?;
    for &n in sizes {
        if n == 0 {
            return Err(CliError::Usage("sizes must be at least 1".into()));
        }
        let s = gen::generate(&GenSpec::new(n, Kind::Tournament, 0xB5EED ^ n as u64))
            .expect("valid spec");
        let mut report = None;
        let solve = min_time(reps, || report = Some(solvers::solve_all(&s)));
        let d_mu = report.expect("ran at least once").d_mu;

        let m = s.m();
        let mut packed_out = None;
        let packed = min_time(reps, || packed_out = Some(m.mul(m)));
        let (naive_cell, speedup_cell) = if n <= 256 {
            let dense = m.to_dense();
            let mut naive_out = None;
            let naive = min_time(reps, || naive_out = Some(oracle::naive_mul(&dense, &dense)));
            assert_eq!(
                BoolMatrix::from_dense(&naive_out.unwrap()),
                packed_out.unwrap(),
                "kernel disagreement at n = {n}"
            );
            let ratio = naive.as_secs_f64() / packed.as_secs_f64().max(f64::MIN_POSITIVE);
            (format!("{naive:.2?}"), format!("{ratio:.1}x"))
        } else {
            ("-".into(), "-".into())
        };
        writeln!(
            out,
            "{:>6} {:>6} {:>14} {:>14} {:>14} {:>9}",
            n,
            d_mu,
            format!("{solve:.2?}"),
            format!("{packed:.2?}"),
            naive_cell,
            speedup_cell
        )?;
    }
    Ok(())
}

/// Parses `a..b` (inclusive) or a single number into an inclusive range.
pub fn parse_size_range(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("bad size range {text:?}; want N or LO..HI"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        Ok((lo, hi))
    } else {
        let n = text.trim().parse().map_err(|_| bad())?;
        Ok((n, n))
    }
}

/// Parses a comma list of sizes for `bench`.
pub fn parse_sizes(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad size {p:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve_fixture(concepts: &str, k: Option<usize>, format: OutputFormat) -> String {
        let mut out = Vec::new();
        solve_command(
            &InputSource::Fixture(FIXTURE_NAME.into()),
            concepts,
            k,
            format,
            &mut out,
        )
        .unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn fixture_text_report_contains_published_values() {
        let text = solve_fixture("all", None, OutputFormat::Text);
        for needle in [
            "CW: []",
            "CR: []",
            "UC1: [3,4,5,6]",
            "UC2: [2,3,4,5,6]",
            "UC3: [1,3,4,5,6]",
            "UC4: [1,2,3,4,5,6]",
            "UCP: [1,2,3,4,5,6]",
            "MWS2: [1,2,3,4,5,6]",
            "MU: [4,5,6]",
            "UT: [3,4,5,6]",
            "MD: [1,2,3,4,5,6]",
            "d_mu: 3",
        ] {
            assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
        }
    }

    #[test]
    fn selected_concepts_only() {
        let text = solve_fixture("MU,UT", None, OutputFormat::Text);
        assert!(text.contains("MU: [4,5,6]"));
        assert!(text.contains("UT: [3,4,5,6]"));
        assert!(!text.contains("UC1:"));
    }

    #[test]
    fn structured_output_is_stable_and_parseable() {
        let a = solve_fixture("all", None, OutputFormat::Structured);
        let b = solve_fixture("all", None, OutputFormat::Structured);
        assert_eq!(a, b, "same instance must serialize byte-identically");
        let value: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(value["d_mu"], 3);
        assert_eq!(value["concepts"][2]["concept"], "UC1");
        assert_eq!(
            value["concepts"][2]["members"],
            serde_json::json!([3, 4, 5, 6])
        );
    }

    #[test]
    fn tournament_only_request_on_tied_instance_is_an_error() {
        let mut out = Vec::new();
        let err = solve_command(
            &InputSource::Fixture(FIXTURE_NAME.into()),
            "SP",
            Some(2),
            OutputFormat::Text,
            &mut out,
        )
        .unwrap_err();
        assert!(matches!(err, CliError::TournamentRequired(ConceptId::Sp(2))));
    }

    #[test]
    fn family_selector_requires_k() {
        assert!(matches!(
            parse_concepts("SP", None),
            Err(CliError::Usage(_))
        ));
        let ids = parse_concepts("sp", Some(2)).unwrap().unwrap();
        assert_eq!(ids, vec![ConceptId::Sp(2)]);
        let ids = parse_concepts("CW,uc3,SP4", None).unwrap().unwrap();
        assert_eq!(
            ids,
            vec![
                ConceptId::Cw,
                ConceptId::Uc(crate::solvers::CoveringVersion::V3),
                ConceptId::Sp(4)
            ]
        );
        assert!(parse_concepts("all", None).unwrap().is_none());
    }

    #[test]
    fn gen_output_reparses_and_is_deterministic() {
        let spec = GenSpec::weak(8, 0.3, 7);
        let mut a = Vec::new();
        gen_command(&spec, &mut a).unwrap();
        let mut b = Vec::new();
        gen_command(&spec, &mut b).unwrap();
        assert_eq!(a, b, "identical bytes for identical specs");
        let parsed = instance::parse_text(std::str::from_utf8(&a).unwrap()).unwrap();
        assert_eq!(parsed, gen::generate(&spec).unwrap());
    }

    #[test]
    fn gen_fixture_round_trips() {
        let mut out = Vec::new();
        gen_command(&GenSpec::fixture(), &mut out).unwrap();
        let parsed = instance::parse_text(std::str::from_utf8(&out).unwrap()).unwrap();
        assert_eq!(parsed, gen::fixture());
    }

    #[test]
    fn check_command_reports_counts_and_passes() {
        let mut out = Vec::new();
        let outcome = check_command(2, 3, 5, 11, &mut out).unwrap();
        assert!(outcome.passed());
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("PASS"));
        assert!(text.contains("checks"));
    }

    #[test]
    fn size_range_parsing() {
        assert_eq!(parse_size_range("3..8").unwrap(), (3, 8));
        assert_eq!(parse_size_range("6").unwrap(), (6, 6));
        assert!(parse_size_range("x").is_err());
        assert_eq!(parse_sizes("64,256").unwrap(), vec![64, 256]);
    }

    #[test]
    fn bench_produces_a_table() {
        let mut out = Vec::new();
        bench_command(&[6, 12], 2, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("d_mu"));
        assert_eq!(text.lines().count(), 3);
    }
}
