//! Randomized screening: every formula-path concept against its
//! definition-level counterpart, plus the algebra identities, on seeded
//! instances. Stops at the first mismatch and carries the offending instance
//! in a parseable form.

use crate::boolmat::{BoolMatrix, BoolVec};
use crate::closure;
use crate::gen::{self, GenSpec, Kind, SplitMix64};
use crate::instance;
use crate::majority::MajorityStructure;
use crate::oracle::{self, StabilityVersion};
use crate::solvers::{self, ConceptId, CoveringVersion};

/// One counterexample: the property that failed, what differed, and the
/// instance in text form (directly parseable by `solve --input`).
#[derive(Debug, Clone)]
pub struct Failure {
    pub property: String,
    pub detail: String,
    pub instance_text: String,
}

#[derive(Debug, Clone, Default)]
pub struct CheckOutcome {
    /// Property name, number of comparisons that held.
    pub properties: Vec<(String, usize)>,
    pub failure: Option<Failure>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn total_checks(&self) -> usize {
        self.properties.iter().map(|(_, c)| c).sum()
    }

    fn merge(&mut self, other: CheckOutcome) {
        for (name, count) in other.properties {
            self.bump(&name, count);
        }
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }

    fn bump(&mut self, name: &str, by: usize) {
        match self.properties.iter_mut().find(|(n, _)| n == name) {
            Some((_, c)) => *c += by,
            None => self.properties.push((name.to_string(), by)),
        }
    }
}

struct Recorder {
    outcome: CheckOutcome,
    instance_text: String,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            outcome: CheckOutcome::default(),
            instance_text: String::new(),
        }
    }

    fn set_instance(&mut self, s: &MajorityStructure) {
        self.instance_text = instance::to_text(s);
    }

    fn ok(&self) -> bool {
        self.outcome.failure.is_none()
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, property: &str, got: T, want: T) {
        if self.outcome.failure.is_some() {
            return;
        }
        if got == want {
            self.outcome.bump(property, 1);
        } else {
            self.outcome.failure = Some(Failure {
                property: property.to_string(),
                detail: format!("got {got:?}, want {want:?}"),
                instance_text: self.instance_text.clone(),
            });
        }
    }

    fn holds(&mut self, property: &str, condition: bool, detail: impl Fn() -> String) {
        if self.outcome.failure.is_some() {
            return;
        }
        if condition {
            self.outcome.bump(property, 1);
        } else {
            self.outcome.failure = Some(Failure {
                property: property.to_string(),
                detail: detail(),
                instance_text: self.instance_text.clone(),
            });
        }
    }
}

/// What to screen and how hard.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    /// Instances per (kind, n) pair.
    pub trials: usize,
    /// Inclusive range of alternative counts.
    pub n_lo: usize,
    pub n_hi: usize,
    pub seed: u64,
    /// Enumeration oracles cap (minimal dominant set and friends).
    pub subset_bound: usize,
    /// Weakly-stable enumeration only below this size.
    pub mws_limit: usize,
    /// k-stable-set enumeration only below this size.
    pub stable_sets_limit: usize,
}

impl CheckConfig {
    pub fn new(trials: usize, n_lo: usize, n_hi: usize, seed: u64) -> Self {
        CheckConfig {
            trials,
            n_lo,
            n_hi,
            seed,
            subset_bound: oracle::DEFAULT_SUBSET_BOUND,
            mws_limit: 8,
            stable_sets_limit: 10,
        }
    }
}

/// Per-instance derived seed; documented so failures can be replayed.
fn instance_seed(base: u64, kind_tag: u64, n: usize, trial: usize) -> u64 {
    SplitMix64::new(base ^ (kind_tag << 56) ^ ((n as u64) << 40) ^ trial as u64).next_u64()
}

/// Screens weak (tied) instances over the configured range.
pub fn run_weak(config: &CheckConfig) -> CheckOutcome {
    let mut rec = Recorder::new();
    'outer: for n in config.n_lo..=config.n_hi {
        for trial in 0..config.trials {
            let seed = instance_seed(config.seed, 1, n, trial);
            let tie_prob = 0.1 + 0.5 * SplitMix64::new(seed).next_f64();
            let s = gen::generate(&GenSpec::weak(n, tie_prob, seed)).expect("valid spec");
            check_general(&mut rec, &s, config);
            if !rec.ok() {
                break 'outer;
            }
        }
    }
    rec.outcome
}

/// Screens tournaments over the configured range, including the k-stable
/// families.
pub fn run_tournaments(config: &CheckConfig) -> CheckOutcome {
    let mut rec = Recorder::new();
    'outer: for n in config.n_lo..=config.n_hi {
        for trial in 0..config.trials {
            let seed = instance_seed(config.seed, 2, n, trial);
            let s = gen::generate(&GenSpec::new(n, Kind::Tournament, seed)).expect("valid spec");
            check_general(&mut rec, &s, config);
            if rec.ok() {
                check_tournament(&mut rec, &s, config);
            }
            if !rec.ok() {
                break 'outer;
            }
        }
    }
    rec.outcome
}

/// The built-in worked example against its published values.
pub fn run_fixture() -> CheckOutcome {
    let mut rec = Recorder::new();
    let s = gen::fixture();
    rec.set_instance(&s);
    let report = solvers::solve_all(&s);
    let all = vec![1, 2, 3, 4, 5, 6];
    let cases: Vec<(ConceptId, Vec<usize>)> = vec![
        (ConceptId::Cw, vec![]),
        (ConceptId::Cr, vec![]),
        (ConceptId::Uc(CoveringVersion::V1), vec![3, 4, 5, 6]),
        (ConceptId::Uc(CoveringVersion::V2), vec![2, 3, 4, 5, 6]),
        (ConceptId::Uc(CoveringVersion::V3), vec![1, 3, 4, 5, 6]),
        (ConceptId::Uc(CoveringVersion::V4), all.clone()),
        (ConceptId::Uc(CoveringVersion::V5), all.clone()),
        (ConceptId::Ucp, all.clone()),
        (ConceptId::Mws2, all.clone()),
        (ConceptId::Mu, vec![4, 5, 6]),
        (ConceptId::Ut, vec![3, 4, 5, 6]),
        (ConceptId::Md, all),
    ];
    for (id, want) in cases {
        rec.eq(
            "fixture reproduces the worked example",
            report.get(id).map(<[usize]>::to_vec),
            Some(want),
        );
    }
    rec.eq("fixture reproduces the worked example", report.d_mu, 3);
    rec.outcome
}

/// Concepts defined for every instance, formulas vs definitions.
fn check_general(rec: &mut Recorder, s: &MajorityStructure, config: &CheckConfig) {
    rec.set_instance(s);
    let n = s.n();

    rec.eq(
        "condorcet winner = domination scan",
        solvers::condorcet_winner(s),
        oracle::condorcet_winner(s),
    );
    rec.eq("core = empty-upper-contour scan", solvers::core(s), oracle::core(s));

    for v in CoveringVersion::ALL {
        for modified in [false, true] {
            rec.eq(
                "uncovered = covering-relation scan",
                solvers::uncovered(s, v, modified),
                oracle::uncovered_set(s, v, modified),
            );
        }
    }
    rec.eq(
        "uncaptured = capturing scan",
        solvers::uncaptured(s),
        oracle::uncaptured_set(s),
    );
    rec.eq(
        "undominated union = source components",
        solvers::minimal_undominated_union(s),
        oracle::minimal_undominated_union(s),
    );
    rec.eq(
        "untrapped = trapping scan",
        solvers::untrapped(s),
        oracle::untrapped_set(s),
    );
    if n <= config.subset_bound {
        rec.eq(
            "minimal dominant = smallest dominant subset",
            Ok(solvers::minimal_dominant(s)),
            oracle::minimal_dominant_set(s, config.subset_bound),
        );
    }
    if n <= config.mws_limit {
        rec.eq(
            "weakly stable union v2 = enumeration",
            Ok(solvers::mws2(s)),
            oracle::minimal_weakly_stable_union(s, StabilityVersion::V2, config.subset_bound),
        );
        rec.eq(
            "weakly stable union v3 = enumeration",
            Ok(solvers::mws3(s)),
            oracle::minimal_weakly_stable_union(s, StabilityVersion::V3, config.subset_bound),
        );
    }
    rec.eq(
        "weakly stable v3 = membership criterion",
        solvers::mws3(s),
        oracle::mws3_criterion(s),
    );

    // Closure ladders against breadth-first search.
    let m_lad = closure::m_ladder(s);
    let mu_table = oracle::distances(s);
    for k in 1..=m_lad.fixpoint_index() {
        rec.eq(
            "mu ladder = breadth-first reachability",
            m_lad.level(k).clone(),
            oracle::reachability_within(&mu_table, k),
        );
    }
    rec.eq(
        "mu diameter = longest shortest path",
        m_lad.fixpoint_index(),
        oracle::diameter(&mu_table),
    );
    let u_lad = closure::u_ladder(s);
    let nu_table = oracle::distances_nu(s);
    for k in 1..=u_lad.fixpoint_index() {
        rec.eq(
            "nu ladder = breadth-first reachability",
            u_lad.level(k).clone(),
            oracle::reachability_within(&nu_table, k),
        );
    }
    rec.eq(
        "nu diameter = longest shortest path",
        u_lad.fixpoint_index(),
        oracle::diameter(&nu_table),
    );

    for i in 0..n {
        let together = s
            .lower_contour(i)
            .or(&s.upper_contour(i))
            .or(&s.horizon(i))
            .or(&BoolVec::unit(n, i));
        rec.eq("contours partition the alternatives", together, BoolVec::ones(n));
    }

    for v in CoveringVersion::ALL {
        rec.holds(
            "modified uncovered contained in original",
            solvers::uncovered(s, v, true).is_subset_of(&solvers::uncovered(s, v, false)),
            || format!("version {}", v.number()),
        );
    }
    rec.holds(
        "uncaptured contained in minimal dominant",
        solvers::uncaptured(s).is_subset_of(&solvers::minimal_dominant(s)),
        String::new,
    );

    let report = solvers::solve_all(s);
    rec.eq(
        "report agrees with single-concept operators",
        report.get(ConceptId::Mu).map(<[usize]>::to_vec),
        Some(solvers::minimal_undominated_union(s).labels()),
    );
    rec.eq(
        "report agrees with single-concept operators",
        report.get(ConceptId::Md).map(<[usize]>::to_vec),
        Some(solvers::minimal_dominant(s).labels()),
    );
    rec.eq(
        "report agrees with single-concept operators",
        report.get(ConceptId::Ut).map(<[usize]>::to_vec),
        Some(solvers::untrapped(s).labels()),
    );
}

/// Tournament-only families and coincidences.
fn check_tournament(rec: &mut Recorder, s: &MajorityStructure, config: &CheckConfig) {
    rec.set_instance(s);
    let n = s.n();
    let md = solvers::minimal_dominant(s);
    let uc = solvers::uncovered(s, CoveringVersion::V1, false);

    for v in CoveringVersion::ALL {
        for modified in [false, true] {
            rec.eq(
                "tournament uncovered variants coincide",
                solvers::uncovered(s, v, modified),
                uc.clone(),
            );
        }
    }
    rec.eq(
        "tournament MU = UT = MD",
        (solvers::minimal_undominated_union(s), solvers::untrapped(s)),
        (md.clone(), md.clone()),
    );

    let m = solvers::stability_horizon(s).expect("tournament");
    rec.eq(
        "stability horizon = eccentricity bound",
        Ok(m),
        oracle::stability_horizon(s),
    );
    for k in 1..=m + 1 {
        rec.eq(
            "cumulative stable alternatives = eccentricity scan",
            solvers::p_k(s, k).map_err(|e| e.to_string()),
            oracle::cumulative_stable_alternatives(s, k).map_err(|e| e.to_string()),
        );
        rec.eq(
            "stable alternative classes = eccentricity classes",
            solvers::sp_k(s, k).map_err(|e| e.to_string()),
            oracle::k_stable_alternatives(s, k).map_err(|e| e.to_string()),
        );
    }
    rec.eq(
        "P at the horizon is the minimal dominant set",
        solvers::p_k(s, m).map_err(|e| e.to_string()),
        Ok(md.clone()),
    );
    rec.holds(
        "stable classes beyond the horizon are empty",
        solvers::sp_k(s, m + 1).expect("tournament").is_zero(),
        || format!("m = {m}"),
    );
    rec.eq(
        "three-step cumulative class = uncaptured set",
        solvers::p_k(s, 3).map_err(|e| e.to_string()),
        Ok(solvers::uncaptured(s)),
    );
    rec.eq(
        "first stable class = condorcet winner",
        solvers::sp_k(s, 1).map_err(|e| e.to_string()),
        Ok(solvers::condorcet_winner(s)),
    );
    let cw = solvers::condorcet_winner(s);
    let sp2 = solvers::sp_k(s, 2).expect("tournament");
    if cw.is_zero() {
        rec.eq("second stable class = uncovered set when no winner", sp2, uc.clone());
    } else {
        rec.holds(
            "second stable class empty when a winner exists",
            sp2.is_zero(),
            String::new,
        );
    }

    // SP classes partition MD.
    let mut union = BoolVec::zeros(n);
    for k in 1..=m {
        union = union.or(&solvers::sp_k(s, k).expect("tournament"));
    }
    rec.eq("stable classes partition the minimal dominant set", union, md.clone());

    // Chain P_k <= S_k <= P_{k+2} <= MD, and the enumeration oracle.
    for k in 1..=m {
        let pk = solvers::p_k(s, k).expect("tournament");
        let sk = solvers::s_k(s, k).expect("tournament");
        let pk2 = solvers::p_k(s, k + 2).expect("tournament");
        rec.holds(
            "chain P(k) within S(k) within P(k+2) within MD",
            pk.is_subset_of(&sk) && sk.is_subset_of(&pk2) && pk2.is_subset_of(&md),
            || format!("k = {k}"),
        );
    }
    rec.eq(
        "cumulative stable sets stop at the minimal dominant set",
        solvers::s_k(s, m + 2).map_err(|e| e.to_string()),
        Ok(md.clone()),
    );
    if n <= config.stable_sets_limit {
        let mut prev = BoolVec::zeros(n);
        for k in 1..=m {
            let sk = solvers::s_k(s, k).expect("tournament");
            rec.eq(
                "cumulative stable sets = enumeration",
                Ok(sk.clone()),
                oracle::cumulative_stable_set_union(s, k, config.stable_sets_limit),
            );
            rec.eq(
                "stable set classes = enumeration differences",
                solvers::ss_k(s, k).map_err(|e| e.to_string()),
                Ok(sk.and_not(&prev)),
            );
            prev = sk;
        }
    }
    if n <= config.mws_limit {
        rec.eq(
            "tournament weakly stable versions coincide",
            oracle::minimal_weakly_stable_union(s, StabilityVersion::V1, config.subset_bound),
            Ok(solvers::mws2(s)),
        );
    }
}

/// The algebra identities on random relation matrices.
pub fn run_algebra(trials: usize, max_n: usize, seed: u64) -> CheckOutcome {
    let mut rec = Recorder::new();
    rec.instance_text = String::from("(random relation matrix, not a majority instance)");
    let mut rng = SplitMix64::new(seed);
    for trial in 0..trials {
        let n = 1 + rng.next_below(max_n);
        let mut r = BoolMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if rng.next_bool() {
                    r.set(i, j, true);
                }
            }
        }
        rec.instance_text = format!("trial {trial}, matrix\n{r}");

        let p = r.asym_part();
        let sym = r.sym_part();
        rec.eq("relation = asymmetric + symmetric part", p.or(&sym), r.clone());
        rec.holds(
            "symmetric part is symmetric",
            sym.is_symmetric(),
            String::new,
        );
        rec.eq(
            "asymmetric part meets its transpose nowhere",
            p.and(&p.transpose()),
            BoolMatrix::zeros(n),
        );
        rec.eq(
            "maxima agree with asymmetric-part maxima",
            r.max_general(),
            p.max_asymmetric(),
        );

        // Binomial collapse: (R + E)^k = sum of powers + E.
        let k = 1 + rng.next_below(n);
        let e = BoolMatrix::identity(n);
        let mut acc = e.clone();
        let mut pow = e.clone();
        for _ in 0..k {
            pow = pow.mul(&r);
            acc = acc.or(&pow);
        }
        rec.eq("reflexive power accumulates the power sum", r.or(&e).power(k), acc);

        rec.eq(
            "product matches the triple loop",
            r.mul(&p).to_dense(),
            oracle::naive_mul(&r.to_dense(), &p.to_dense()),
        );

        // A complete relation for the completeness identities.
        let mut c = BoolMatrix::zeros(n);
        for i in 0..n {
            if rng.next_bool() {
                c.set(i, i, true);
            }
            for j in (i + 1)..n {
                match rng.next_below(3) {
                    0 => c.set(i, j, true),
                    1 => c.set(j, i, true),
                    _ => {
                        c.set(i, j, true);
                        c.set(j, i, true);
                    }
                }
            }
        }
        rec.instance_text = format!("trial {trial}, complete matrix\n{c}");
        let cp = c.asym_part();
        let cs = c.sym_part();
        rec.eq(
            "complete: P + S + E = complement(P^tr)",
            cp.or(&cs).or(&e),
            cp.transpose().complement(),
        );
        rec.eq(
            "complete: P + P^tr + E = complement(S - E)",
            cp.or(&cp.transpose()).or(&e),
            cs.without_diagonal().complement(),
        );
        rec.eq(
            "complete: P + P^tr + S + E = I",
            cp.or(&cp.transpose()).or(&cs).or(&e),
            BoolMatrix::ones(n),
        );
        if !rec.ok() {
            break;
        }
    }
    rec.outcome
}

/// Everything: fixture, algebra, weak instances, tournaments. This is what
/// the `check` subcommand runs.
pub fn run_full(config: &CheckConfig) -> CheckOutcome {
    let mut outcome = run_fixture();
    if outcome.failure.is_none() {
        outcome.merge(run_algebra(
            config.trials.max(100),
            16,
            config.seed ^ 0xa15e,
        ));
    }
    if outcome.failure.is_none() {
        outcome.merge(run_weak(config));
    }
    if outcome.failure.is_none() {
        outcome.merge(run_tournaments(config));
    }
    outcome
}
