//! Machine-readable reports. Field order is fixed by the struct layout and
//! all collections are ordered, so identical inputs and seeds serialize to
//! byte-identical JSON.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// Stable exit codes: 0 pass, 2 violation candidate, 3 genericity retries
/// exhausted, 4 input error, 5 resource abort.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "VIOLATION_CANDIDATE")]
    ViolationCandidate,
    #[serde(rename = "GENERICITY_RETRY_EXHAUSTED")]
    GenericityRetryExhausted,
    #[serde(rename = "ERROR")]
    Error,
    #[serde(rename = "RESOURCE_ABORT")]
    ResourceAbort,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::ViolationCandidate => 2,
            Verdict::GenericityRetryExhausted => 3,
            Verdict::Error => 4,
            Verdict::ResourceAbort => 5,
        }
    }
}

/// Canonical polynomial image: sorted term list, exponents then a decimal
/// coefficient string.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PolyJson {
    pub nvars: usize,
    pub terms: Vec<(Vec<u32>, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub seed: u64,
    pub primes: u32,
    pub retry_budget: u32,
    pub stretch: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputEcho {
    pub source: String,
    pub polynomial: Option<PolyJson>,
    pub degree: Option<u32>,
    pub smooth_claimed: Option<bool>,
    pub invariants: Option<InvariantsEcho>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsEcho {
    pub d: i64,
    pub g: i64,
    pub ksq: i64,
    pub chi: i64,
    pub deg_gamma: i64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ExpectedCounts {
    pub deg_b: i64,
    pub kappa: i64,
    pub pa_r: i64,
    pub nodes: i64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PointJson {
    /// Modulus of the residue field over the base prime.
    pub field_modulus: Vec<u64>,
    pub residue_degree: u32,
    /// Homogeneous plane coordinates in the projection plane.
    pub plane_point: Vec<Vec<u64>>,
    pub multiplicity: u32,
    pub classification: String,
    /// Line intersection profile (n_1 >= n_2 >= ...).
    pub profile: Vec<u32>,
    pub branching_weight: u32,
    pub asymptotic_weight: u32,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CensusJson {
    pub nodes: u64,
    pub cusps: u64,
    pub other: u64,
    pub points: Vec<PointJson>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ChecksJson {
    pub smoothness_screen: String,
    pub branch_reduced: bool,
    pub deg_b_matches: bool,
    pub multiplicity_equals_branching_weight: bool,
    pub profile_correspondence: bool,
    pub absolutely_irreducible: bool,
    pub counts_match_formulas: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeRun {
    pub prime: u64,
    pub frame_attempts: u32,
    pub rejected_frames: Vec<String>,
    pub accepted: bool,
    pub deg_b: Option<u32>,
    pub branch: Option<PolyJson>,
    pub census: Option<CensusJson>,
    pub checks: Option<ChecksJson>,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FocusJson {
    pub param: Option<(String, String)>,
    pub point: Option<Vec<String>>,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct FociJson {
    pub at: (String, String),
    pub focal_form: Vec<String>,
    pub structure: String,
    pub evaluation_rank: usize,
    pub filling: bool,
    pub foci: Vec<FocusJson>,
    pub conjugate_pair_min_poly: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsJson {
    pub deg_b: i64,
    pub kappa: i64,
    pub pa_r: i64,
    pub nodes: Option<i64>,
    pub hilbert_bound: Option<i64>,
    pub hilbert_equality_eligible: Option<bool>,
    pub nonspecial: bool,
    pub clifford_h_bound: String,
    pub special_h0_bound: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileJson {
    pub prime: u64,
    pub point: Vec<u64>,
    pub on_branch_curve: bool,
    pub profile: Vec<u32>,
    pub branching_weight: u32,
    pub asymptotic_weight: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub mode: String,
    pub config: ConfigEcho,
    pub input: InputEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedCounts>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub runs: Vec<PrimeRun>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub foci: Option<FociJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileJson>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
