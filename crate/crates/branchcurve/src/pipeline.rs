//! End-to-end orchestration: the verify pipeline (per-prime projection,
//! census, per-point checks, formula comparison), plus the foci,
//! invariants, and profile modes. Every randomized choice derives from the
//! configured seed, so identical configurations give identical reports.

use std::time::{Duration, Instant};

use branchcurve_algebra::domain::{
    sample_prime, ExtensionField, Field, FiniteField, PrimeField, Rationals, Ring,
};
use branchcurve_algebra::irreducibility::absolute_factor_count;
use branchcurve_algebra::linalg::Matrix;
use branchcurve_algebra::multipoly::MultiPoly;
use branchcurve_algebra::{PrimePoly, RationalPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::focal::{
    contact_order, evaluation_rank_at, focal_form, foci, FocusStructure, Foci, LineFamily,
};
use crate::invariants::{
    branch_degree, clifford_h_bound, count_report, cusp_count, hilbert_bound, node_count,
    nonspeciality, ram_genus, special_h0_bound, InvariantSet,
};
use crate::parse::{parse_family_text, parse_surface_text};
use crate::projection::{branch_curve, line_profile, BranchComputation, LineProfile};
use crate::report::*;
use crate::singclass::{census, Classification, SingularityCensus};
use crate::surface::{check_smoothness, random_frame, SmoothnessVerdict, SurfaceModel};
use crate::GeometryError;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub primes: u32,
    pub seed: u64,
    pub retry_budget: u32,
    pub stretch: bool,
    pub time_budget: Option<Duration>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            primes: 2,
            seed: 0,
            retry_budget: 8,
            stretch: false,
            time_budget: None,
        }
    }
}

impl RunConfig {
    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            seed: self.seed,
            primes: self.primes,
            retry_budget: self.retry_budget,
            stretch: self.stretch,
        }
    }
}

pub fn poly_json<F: Field>(p: &MultiPoly<F>) -> PolyJson {
    PolyJson {
        nvars: p.nvars,
        terms: p
            .terms()
            .iter()
            .map(|(m, c)| (m.0.clone(), p.domain.format(c)))
            .collect(),
    }
}

fn input_echo(source: &str, surface: Option<&SurfaceModel>) -> InputEcho {
    InputEcho {
        source: source.to_string(),
        polynomial: surface.map(|s| poly_json(&s.f)),
        degree: surface.map(|s| s.d),
        smooth_claimed: surface.map(|s| s.smooth_claimed),
        invariants: surface.map(|s| InvariantsEcho {
            d: s.invariants.d,
            g: s.invariants.g,
            ksq: s.invariants.ksq,
            chi: s.invariants.chi,
            deg_gamma: s.deg_gamma,
        }),
    }
}

fn error_report(mode: &str, source: &str, cfg: &RunConfig, err: &GeometryError) -> Report {
    Report {
        schema: SCHEMA_VERSION,
        mode: mode.into(),
        config: cfg.echo(),
        input: input_echo(source, None),
        expected: None,
        runs: vec![],
        foci: None,
        invariants: None,
        profile: None,
        verdict: Verdict::Error,
        error: Some(err.to_string()),
    }
}

/// Derived sub-seed for the work done at prime index `i`.
fn prime_work_seed(seed: u64, i: u32) -> u64 {
    seed.wrapping_mul(0x9E3779B97F4A7C15)
        .wrapping_add(1 + i as u64)
}

struct Deadline {
    start: Instant,
    budget: Option<Duration>,
}

impl Deadline {
    fn new(budget: Option<Duration>) -> Self {
        Deadline {
            start: Instant::now(),
            budget,
        }
    }
    fn exceeded(&self) -> bool {
        match self.budget {
            Some(b) => self.start.elapsed() > b,
            None => false,
        }
    }
}

/// Tangency patterns behind the two singularity types: a cusp comes from
/// a single asymptotic tangency (3, 1, ...), a node from a plain
/// bitangency (2, 2, 1, ...).
fn profile_is_cusp_pattern(profile: &[u32]) -> bool {
    !profile.is_empty() && profile[0] == 3 && profile[1..].iter().all(|n| *n == 1)
}

fn profile_is_node_pattern(profile: &[u32]) -> bool {
    profile.len() >= 2
        && profile[0] == 2
        && profile[1] == 2
        && profile[2..].iter().all(|n| *n == 1)
}

enum FrameOutcome {
    Accepted(Box<(BranchComputation, SingularityCensus, ChecksJson, CensusJson)>),
    Rejected(String, bool), // reason, theorem-flavored
}

fn try_frame(
    surface: &SurfaceModel,
    f_mod_p: &PrimePoly,
    expected: &ExpectedCounts,
    smoothness_label: &str,
    rng: &mut ChaCha8Rng,
) -> Result<FrameOutcome, GeometryError> {
    let trace = std::env::var("BRANCHCURVE_TRACE").is_ok();
    let t0 = Instant::now();
    macro_rules! trace_stage {
        ($name:expr) => {
            if trace {
                eprintln!("[trace] {}: {:.2}s", $name, t0.elapsed().as_secs_f64());
            }
        };
    }
    let frame = match random_frame(f_mod_p, rng) {
        Ok(fr) => fr,
        Err(GeometryError::RetryBudgetExhausted(m)) => {
            return Ok(FrameOutcome::Rejected(format!("frame sampling: {m}"), false))
        }
        Err(e) => return Err(e),
    };
    let bc = match branch_curve(surface, f_mod_p, &frame, rng) {
        Ok(bc) => bc,
        Err(GeometryError::NonReducedBranch(m)) => {
            return Ok(FrameOutcome::Rejected(format!("non-reduced branch: {m}"), false))
        }
        Err(GeometryError::CenterOnSurface) => {
            return Ok(FrameOutcome::Rejected("center on surface".into(), false))
        }
        Err(e) => return Err(e),
    };
    trace_stage!("branch_curve");
    let deg_matches = bc.deg_branch as i64 == expected.deg_b;
    if !deg_matches {
        return Ok(FrameOutcome::Rejected(
            format!(
                "branch degree {} differs from expected {}",
                bc.deg_branch, expected.deg_b
            ),
            true,
        ));
    }
    trace_stage!("pre_census");
    let cens = match census(&bc.branch, rng) {
        Ok(c) => c,
        Err(GeometryError::Algebra(
            branchcurve_algebra::AlgebraError::PositiveDimensionalIntersection,
        )) => {
            return Ok(FrameOutcome::Rejected(
                "positive-dimensional singular locus".into(),
                false,
            ))
        }
        Err(GeometryError::RetryBudgetExhausted(m)) => {
            return Ok(FrameOutcome::Rejected(format!("census shears: {m}"), false))
        }
        Err(e) => return Err(e),
    };
    trace_stage!("census");
    if !cens.all_nodes_and_cusps() {
        return Ok(FrameOutcome::Rejected(
            format!(
                "{} singular points outside the node/cusp dichotomy",
                cens.other_count
            ),
            true,
        ));
    }

    // Per-point checks: multiplicity vs branching weight, and the profile
    // correspondence for nodes and cusps.
    let mut mult_ok = true;
    let mut profile_ok = true;
    let mut points_json = Vec::new();
    for pt in &cens.points {
        let profile: LineProfile =
            line_profile(&bc.f_moved, &pt.field, &pt.plane_point, rng)?;
        let mults = profile.multiplicities();
        if profile.branching_weight != pt.multiplicity {
            mult_ok = false;
        }
        let pattern_ok = match pt.classification {
            Classification::Cusp => profile_is_cusp_pattern(&mults),
            Classification::Node => profile_is_node_pattern(&mults),
            Classification::Other(_) => false,
        };
        if !pattern_ok {
            profile_ok = false;
        }
        points_json.push(PointJson {
            field_modulus: pt.field.modulus_coeffs().to_vec(),
            residue_degree: pt.residue_degree,
            plane_point: pt.plane_point.to_vec(),
            multiplicity: pt.multiplicity,
            classification: pt.classification.label().into(),
            profile: mults,
            branching_weight: profile.branching_weight,
            asymptotic_weight: profile.asymptotic_weight,
        });
    }
    if !mult_ok {
        return Ok(FrameOutcome::Rejected(
            "a singular point with multiplicity differing from its branching weight".into(),
            true,
        ));
    }
    if !profile_ok {
        return Ok(FrameOutcome::Rejected(
            "a node/cusp with the wrong tangency profile".into(),
            true,
        ));
    }

    trace_stage!("per_point_profiles");
    // Absolute irreducibility evidence.
    let irreducible = match branch_irreducible(&bc.branch, rng) {
        Ok(flag) => flag,
        Err(_) => false,
    };
    if !irreducible {
        return Ok(FrameOutcome::Rejected(
            "branch curve failed the absolute irreducibility test".into(),
            true,
        ));
    }

    trace_stage!("irreducibility");
    let counts_match = cens.node_count as i64 == expected.nodes
        && cens.cusp_count as i64 == expected.kappa;
    if !counts_match {
        return Ok(FrameOutcome::Rejected(
            format!(
                "census counts (nodes {}, cusps {}) differ from formulas (nodes {}, cusps {})",
                cens.node_count, cens.cusp_count, expected.nodes, expected.kappa
            ),
            true,
        ));
    }

    let checks = ChecksJson {
        smoothness_screen: smoothness_label.into(),
        branch_reduced: bc.branch_reduced,
        deg_b_matches: deg_matches,
        multiplicity_equals_branching_weight: mult_ok,
        profile_correspondence: profile_ok,
        absolutely_irreducible: irreducible,
        counts_match_formulas: counts_match,
    };
    let census_json = CensusJson {
        nodes: cens.node_count,
        cusps: cens.cusp_count,
        other: cens.other_count,
        points: points_json,
    };
    Ok(FrameOutcome::Accepted(Box::new((bc, cens, checks, census_json))))
}

/// Absolute irreducibility of a reduced plane curve given as a trivariate
/// form: shear so that no component sits at infinity, dehomogenize, count
/// absolutely irreducible factors.
pub fn branch_irreducible<R: Rng + ?Sized>(
    curve: &PrimePoly,
    rng: &mut R,
) -> Result<bool, GeometryError> {
    let fp = curve.domain;
    for _ in 0..16 {
        let data: Vec<u64> = (0..9).map(|_| fp.sample(rng)).collect();
        let m = Matrix::new(fp, 3, 3, data);
        if fp.is_zero(&m.det()) {
            continue;
        }
        let sheared = curve.linear_substitute(&m).expect("invertible");
        if sheared.partial_evaluate(&[(2, 0u64)]).is_zero() {
            continue; // x2 divides: component at infinity, shear again
        }
        if fp.is_zero(&sheared.evaluate(&[0, 0, 1])) {
            continue;
        }
        let affine = sheared.dehomogenize(2);
        let count = absolute_factor_count(&affine, 0, 1, rng)
            .map_err(GeometryError::Algebra)?;
        return Ok(count == 1);
    }
    Err(GeometryError::RetryBudgetExhausted(
        "no shear avoided components at infinity".into(),
    ))
}

fn verify_one_prime(
    surface: &SurfaceModel,
    prime_index: u32,
    expected: &ExpectedCounts,
    cfg: &RunConfig,
    prime_rng: &mut ChaCha8Rng,
    used: &mut Vec<u64>,
    deadline: &Deadline,
) -> Result<PrimeRun, GeometryError> {
    // Sample a fresh prime under which the surface keeps its degree.
    let mut prime = 0;
    let mut f_mod_p: Option<PrimePoly> = None;
    for _ in 0..32 {
        let p = sample_prime(prime_rng);
        if used.contains(&p) {
            continue;
        }
        let fp = PrimeField::new(p).expect("sampled prime");
        match surface.reduce_mod(fp) {
            Ok(f) => {
                prime = p;
                used.push(p);
                f_mod_p = Some(f);
                break;
            }
            Err(GeometryError::BadPrime(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let Some(f_mod_p) = f_mod_p else {
        return Err(GeometryError::RetryBudgetExhausted(
            "no usable prime found".into(),
        ));
    };
    let mut rng = ChaCha8Rng::seed_from_u64(prime_work_seed(cfg.seed, prime_index));

    // Smoothness screen.
    let screen_start = Instant::now();
    let smoothness_label = if surface.smooth_claimed {
        match check_smoothness(&f_mod_p, &mut rng) {
            SmoothnessVerdict::SmoothConsistent => "smooth_consistent".to_string(),
            SmoothnessVerdict::Witness(w) => {
                return Ok(PrimeRun {
                    prime,
                    frame_attempts: 0,
                    rejected_frames: vec![],
                    accepted: false,
                    deg_b: None,
                    branch: None,
                    census: None,
                    checks: None,
                    failure: Some(format!(
                        "smoothness screen found a singular point {}",
                        w.format()
                    )),
                });
            }
        }
    } else {
        "skipped_double_curve_declared".to_string()
    };

    if std::env::var("BRANCHCURVE_TRACE").is_ok() {
        eprintln!("[trace] smoothness_screen: {:.2}s", screen_start.elapsed().as_secs_f64());
    }
    let mut rejected = Vec::new();
    let mut theorem_flavored = false;
    for attempt in 0..cfg.retry_budget {
        if deadline.exceeded() {
            return Ok(PrimeRun {
                prime,
                frame_attempts: attempt,
                rejected_frames: rejected,
                accepted: false,
                deg_b: None,
                branch: None,
                census: None,
                checks: None,
                failure: Some("resource budget exceeded".into()),
            });
        }
        match try_frame(surface, &f_mod_p, expected, &smoothness_label, &mut rng)? {
            FrameOutcome::Accepted(boxed) => {
                let (bc, _cens, checks, census_json) = *boxed;
                return Ok(PrimeRun {
                    prime,
                    frame_attempts: attempt + 1,
                    rejected_frames: rejected,
                    accepted: true,
                    deg_b: Some(bc.deg_branch),
                    branch: Some(poly_json(&bc.branch)),
                    census: Some(census_json),
                    checks: Some(checks),
                    failure: None,
                });
            }
            FrameOutcome::Rejected(reason, theoremish) => {
                theorem_flavored |= theoremish;
                rejected.push(reason);
            }
        }
    }
    Ok(PrimeRun {
        prime,
        frame_attempts: cfg.retry_budget,
        rejected_frames: rejected,
        accepted: false,
        deg_b: None,
        branch: None,
        census: None,
        checks: None,
        failure: Some(if theorem_flavored {
            "frame retries exhausted with theorem-level rejections".into()
        } else {
            "frame retries exhausted on degenerate frames".into()
        }),
    })
}

/// End-to-end verification of the branch-curve counts for one surface.
pub fn run_verify(surface_text: &str, source: &str, cfg: &RunConfig) -> Report {
    let surface = match parse_surface_text(surface_text) {
        Ok(s) => s,
        Err(e) => return error_report("verify", source, cfg, &e),
    };
    if cfg.primes == 0 {
        return error_report(
            "verify",
            source,
            cfg,
            &GeometryError::Input("at least one prime is required".into()),
        );
    }
    if surface.d >= 5 && !cfg.stretch {
        return error_report(
            "verify",
            source,
            cfg,
            &GeometryError::Input(format!(
                "degree-{} verification is a long run; pass --stretch to enable it",
                surface.d
            )),
        );
    }
    let expected = match count_report(&surface.invariants) {
        Ok(c) => ExpectedCounts {
            deg_b: c.deg_b,
            kappa: c.kappa,
            pa_r: c.pa_r,
            nodes: c.nodes,
        },
        Err(e) => return error_report("verify", source, cfg, &e),
    };
    let deadline = Deadline::new(cfg.time_budget);
    let mut prime_rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut used = Vec::new();
    let mut runs = Vec::new();
    let mut verdict = Verdict::Pass;
    let mut error = None;
    for i in 0..cfg.primes {
        match verify_one_prime(
            &surface, i, &expected, cfg, &mut prime_rng, &mut used, &deadline,
        ) {
            Ok(run) => runs.push(run),
            Err(e) => {
                verdict = Verdict::Error;
                error = Some(e.to_string());
                break;
            }
        }
    }
    if verdict == Verdict::Pass {
        if runs.iter().any(|r| {
            r.failure
                .as_deref()
                .map(|f| f.contains("resource budget"))
                .unwrap_or(false)
        }) {
            verdict = Verdict::ResourceAbort;
        } else if runs.iter().any(|r| {
            r.failure
                .as_deref()
                .map(|f| f.contains("smoothness screen"))
                .unwrap_or(false)
        }) {
            verdict = Verdict::Error;
            error = runs
                .iter()
                .find_map(|r| r.failure.clone());
        } else if runs.iter().any(|r| {
            !r.accepted
                && r.failure
                    .as_deref()
                    .map(|f| f.contains("theorem-level"))
                    .unwrap_or(false)
        }) {
            verdict = Verdict::ViolationCandidate;
        } else if runs.iter().any(|r| !r.accepted) {
            verdict = Verdict::GenericityRetryExhausted;
        } else {
            // All runs accepted: they must agree with each other (they
            // already agree with the formulas by acceptance).
            let first = runs[0].census.as_ref().map(|c| (c.nodes, c.cusps));
            if !runs
                .iter()
                .all(|r| r.census.as_ref().map(|c| (c.nodes, c.cusps)) == first)
            {
                verdict = Verdict::ViolationCandidate;
            }
        }
    }
    Report {
        schema: SCHEMA_VERSION,
        mode: "verify".into(),
        config: cfg.echo(),
        input: input_echo(source, Some(&surface)),
        expected: Some(expected),
        runs,
        foci: None,
        invariants: None,
        profile: None,
        verdict,
        error,
    }
}

fn qstr(q: &BigRational) -> String {
    q.to_string()
}

/// Focal analysis of a family file at one parameter point.
pub fn run_foci(family_text: &str, source: &str, at: (i64, i64), cfg: &RunConfig) -> Report {
    let family: LineFamily<Rationals> = match parse_family_text(family_text) {
        Ok(f) => f,
        Err(e) => return error_report("foci", source, cfg, &e),
    };
    let z = (
        BigRational::from_integer(BigInt::from(at.0)),
        BigRational::from_integer(BigInt::from(at.1)),
    );
    let form = match focal_form(&family, &z) {
        Ok(f) => f,
        Err(e) => return error_report("foci", source, cfg, &e),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let rank = evaluation_rank_at(&family, &mut rng).unwrap_or(0);
    let structure = match form.structure {
        FocusStructure::IdenticallyZero => "identically_zero",
        FocusStructure::DoubleRoot => "double_root",
        FocusStructure::TwoDistinctRoots => "two_distinct_roots",
    };
    let (foci_json, conj) = match foci(&family, &z) {
        Ok(Foci::Points(pts)) => (
            pts.iter()
                .map(|f| FocusJson {
                    param: f.param.as_ref().map(|(s, t)| (qstr(s), qstr(t))),
                    point: f
                        .point
                        .as_ref()
                        .map(|p| p.iter().map(qstr).collect()),
                    multiplicity: f.multiplicity,
                })
                .collect(),
            None,
        ),
        Ok(Foci::ConjugatePair { coeffs }) => {
            (vec![], Some(coeffs.iter().map(qstr).collect()))
        }
        Err(_) => (vec![], None),
    };
    Report {
        schema: SCHEMA_VERSION,
        mode: "foci".into(),
        config: cfg.echo(),
        input: input_echo(source, None),
        expected: None,
        runs: vec![],
        foci: Some(FociJson {
            at: (at.0.to_string(), at.1.to_string()),
            focal_form: form.coeffs.iter().map(qstr).collect(),
            structure: structure.into(),
            evaluation_rank: rank,
            filling: rank == 4,
            foci: foci_json,
            conjugate_pair_min_poly: conj,
        }),
        invariants: None,
        profile: None,
        verdict: Verdict::Pass,
        error: None,
    }
}

/// Formula evaluation mode.
#[allow(clippy::too_many_arguments)]
pub fn run_invariants(
    d: i64,
    g: Option<i64>,
    ksq: Option<i64>,
    chi: Option<i64>,
    r: Option<i64>,
    h: Option<i64>,
    hs: Option<i64>,
    cfg: &RunConfig,
) -> Report {
    let (gs, ks, cs) = crate::surface::smooth_invariants(d);
    let mut inv = InvariantSet::new(d, g.unwrap_or(gs), ksq.unwrap_or(ks), chi.unwrap_or(cs));
    inv.r = r;
    inv.h = h;
    inv.h_s = hs;
    let nodes = node_count(&inv).ok();
    let hb = hilbert_bound(&inv).ok();
    let special = special_h0_bound(&inv).ok();
    let source = format!("d={d}");
    Report {
        schema: SCHEMA_VERSION,
        mode: "invariants".into(),
        config: cfg.echo(),
        input: input_echo(&source, None),
        expected: None,
        runs: vec![],
        foci: None,
        invariants: Some(InvariantsJson {
            deg_b: branch_degree(&inv),
            kappa: cusp_count(&inv),
            pa_r: ram_genus(&inv),
            nodes,
            hilbert_bound: hb.map(|(v, _)| v),
            hilbert_equality_eligible: hb.map(|(_, e)| e),
            nonspecial: nonspeciality(&inv),
            clifford_h_bound: qstr(&clifford_h_bound(&inv)),
            special_h0_bound: special.map(|q| qstr(&q)),
        }),
        profile: None,
        verdict: Verdict::Pass,
        error: None,
    }
}

/// Line-profile mode: replay the seeded first prime and frame, then profile
/// the line over the given plane point.
pub fn run_profile(
    surface_text: &str,
    source: &str,
    point: [i64; 3],
    cfg: &RunConfig,
) -> Report {
    let surface = match parse_surface_text(surface_text) {
        Ok(s) => s,
        Err(e) => return error_report("profile", source, cfg, &e),
    };
    let expected_deg_b = branch_degree(&surface.invariants);
    let mut prime_rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(prime_work_seed(cfg.seed, 0));
    let mut result = None;
    for _ in 0..32 {
        let p = sample_prime(&mut prime_rng);
        let fp = match PrimeField::new(p) {
            Ok(f) => f,
            Err(_) => continue,
        };
        match surface.reduce_mod(fp) {
            Ok(f) => {
                result = Some((p, fp, f));
                break;
            }
            Err(_) => continue,
        }
    }
    let Some((p, fp, f_mod_p)) = result else {
        return error_report(
            "profile",
            source,
            cfg,
            &GeometryError::RetryBudgetExhausted("no usable prime".into()),
        );
    };
    // Consume the stream exactly like the verify pipeline (screen first),
    // so the frames replay those of the verify run with the same seed.
    if surface.smooth_claimed {
        let _ = check_smoothness(&f_mod_p, &mut rng);
    }
    // First frame with a reduced branch curve of the expected degree; when
    // the verify run accepted its first frame this is the same projection.
    let mut picked = None;
    for _ in 0..cfg.retry_budget {
        let Ok(frame) = random_frame(&f_mod_p, &mut rng) else {
            continue;
        };
        match branch_curve(&surface, &f_mod_p, &frame, &mut rng) {
            Ok(bc) if bc.deg_branch as i64 == expected_deg_b => {
                picked = Some(bc);
                break;
            }
            _ => continue,
        }
    }
    let Some(bc) = picked else {
        return error_report(
            "profile",
            source,
            cfg,
            &GeometryError::RetryBudgetExhausted("no acceptable frame".into()),
        );
    };
    let coords = [fp.from_i64(point[0]), fp.from_i64(point[1]), fp.from_i64(point[2])];
    let on_b = fp.is_zero(&bc.branch.evaluate(&coords));
    let field = ExtensionField::new(fp, vec![0, 1]).expect("degree 1");
    let lift = [
        field.from_base(coords[0]),
        field.from_base(coords[1]),
        field.from_base(coords[2]),
    ];
    let profile = match line_profile(&bc.f_moved, &field, &lift, &mut rng) {
        Ok(pr) => pr,
        Err(e) => return error_report("profile", source, cfg, &e),
    };
    Report {
        schema: SCHEMA_VERSION,
        mode: "profile".into(),
        config: cfg.echo(),
        input: input_echo(source, Some(&surface)),
        expected: None,
        runs: vec![],
        foci: None,
        invariants: None,
        profile: Some(ProfileJson {
            prime: p,
            point: coords.to_vec(),
            on_branch_curve: on_b,
            profile: profile.multiplicities(),
            branching_weight: profile.branching_weight,
            asymptotic_weight: profile.asymptotic_weight,
        }),
        verdict: Verdict::Pass,
        error: None,
    }
}

/// Seeded random homogeneous surface with small integer coefficients that
/// passes the smoothness screen modulo a large prime.
pub fn seeded_random_smooth_surface(d: u32, seed: u64) -> RationalPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fp = PrimeField::new(1_000_000_007).expect("prime");
    // All monomials of degree d in 4 variables.
    let mut monos = Vec::new();
    for e0 in 0..=d {
        for e1 in 0..=(d - e0) {
            for e2 in 0..=(d - e0 - e1) {
                monos.push(vec![e0, e1, e2, d - e0 - e1 - e2]);
            }
        }
    }
    loop {
        let terms: Vec<(Vec<u32>, BigRational)> = monos
            .iter()
            .map(|m| {
                (
                    m.clone(),
                    Rationals.from_i64(rng.gen_range(-3..=3i64)),
                )
            })
            .collect();
        let f = MultiPoly::from_terms(Rationals, 4, terms);
        if f.homogeneous_degree() != Some(d) {
            continue;
        }
        let Ok(reduced) = (SurfaceModel {
            f: f.clone(),
            d,
            smooth_claimed: true,
            deg_gamma: 0,
            invariants: InvariantSet::new(0, 0, 0, 0),
        })
        .reduce_mod(fp) else {
            continue;
        };
        if check_smoothness(&reduced, &mut rng).is_smooth_consistent() {
            return f;
        }
    }
}

/// Convenience wrapper used by tests: contact order of the reference
/// families against their surfaces.
pub fn reference_contact_order(
    f: &RationalPoly,
    family: &LineFamily<Rationals>,
    z: (i64, i64),
) -> Result<u32, GeometryError> {
    let zq = (
        BigRational::from_integer(BigInt::from(z.0)),
        BigRational::from_integer(BigInt::from(z.1)),
    );
    contact_order(f, family, &zq)
}
