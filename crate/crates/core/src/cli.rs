//! Command-line front end: argument parsing, dispatch, and report rendering.
//!
//! Every invocation produces one [`ReportDocument`]. It is rendered either as
//! a plain-text table or as a single line of JSON in which big naturals are
//! decimal strings.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::cohomology::{cohomology_x, euler_characteristic, CohomologyProfile};
use crate::embedding::{Caps, EmbeddingData, MultiDegree};
use crate::error::Error;
use crate::regularity::{
    check_l_subadditivity, check_subadditivity, cm_regularity, cm_regularity_with_witness,
    ideal_sheaf_lambda, l_regularity_table, nonvanishing_degree, regularity_corners,
    regularity_table, segre_regularity_r2, violated_subset, LSubadditivity, LambdaReport,
    RegularitySet, SubadditivityReport, SubsetValue,
};
use crate::tate::{
    balanced_endpoints, m_tilde, p_minus, p_plus, tate_window, TateWindow, DEFAULT_PAD,
};
use crate::verify::{run_verification, VerifyConfig, VerifyReport, DEFAULT_SEED};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Table,
    Json,
}

/// Comma-separated integers, e.g. `1,-2,3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<i64>);

fn parse_int_list(s: &str) -> Result<IntList, String> {
    if s.trim().is_empty() {
        return Err("empty list".into());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| format!("`{}` is not a 64-bit integer: {e}", t.trim()))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(IntList)
}

/// `subsets=<n>,perms=<n>`, either key optional.
fn parse_caps(s: &str) -> Result<Caps, String> {
    let mut caps = Caps::default();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|e| format!("bad value for {key}: {e}"))?;
        match key.trim() {
            "subsets" => caps.subsets = value,
            "perms" => caps.perms = value,
            other => return Err(format!("unknown cap `{other}` (expected subsets or perms)")),
        }
    }
    Caps::new(caps.subsets, caps.perms).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "svreg",
    version,
    about = "Cohomology, regularity and Tate-resolution shapes for Segre-Veronese embeddings"
)]
struct RawCli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Seed for sampled verification.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Enumeration caps, e.g. `subsets=20,perms=8`.
    #[arg(long, global = true, value_parser = parse_caps)]
    caps: Option<Caps>,
    /// Show the per-subset rows behind a regularity verdict.
    #[arg(long, global = true)]
    explain: bool,
    #[command(subcommand)]
    command: RawCommand,
}

#[derive(Debug, Args)]
struct EmbeddingArgs {
    /// Factor dimensions l_1,...,l_r.
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    l: IntList,
    /// Veronese degrees d_1,...,d_r.
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    d: IntList,
}

#[derive(Debug, Args)]
struct TwistArgs {
    #[command(flatten)]
    emb: EmbeddingArgs,
    /// Twist m of the line bundle O_X(m).
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    m: IntList,
}

#[derive(Debug, Args)]
struct PointArgs {
    #[command(flatten)]
    twist: TwistArgs,
    /// Test point p of L = O_X(p).
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    p: IntList,
}

#[derive(Debug, Subcommand)]
enum RawCommand {
    /// Cohomology of O_X(m).
    Cohomology(TwistArgs),
    /// L-regularity by the subset inequalities.
    Regular(PointArgs),
    /// L-regularity by direct cohomology vanishing.
    Oracle(PointArgs),
    /// Corners of the regularity set.
    Regset {
        #[command(flatten)]
        twist: TwistArgs,
        /// Keep only componentwise-minimal corners.
        #[arg(long)]
        antichain: bool,
    },
    /// Membership of p in the regularity set via its corners.
    Member(PointArgs),
    /// Castelnuovo-Mumford regularity of F(m).
    Reg(TwistArgs),
    /// Regularity of F(k,l) under the Segre embedding of P^a x P^b.
    Segre2 {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
    },
    /// Regularity bound for the ideal sheaf of the embedded variety.
    Lambda(EmbeddingArgs),
    /// Subadditivity of regularity for m and m2 (and of L-regularity with p, p2).
    Subadd {
        #[command(flatten)]
        twist: TwistArgs,
        #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
        m2: IntList,
        #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true, requires = "p2")]
        p: Option<IntList>,
        #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true, requires = "p")]
        p2: Option<IntList>,
    },
    /// Columns of the Tate resolution of F(m) around [p-, p+].
    Tate {
        #[command(flatten)]
        twist: TwistArgs,
        #[arg(long, default_value_t = DEFAULT_PAD)]
        pad: u32,
    },
    /// Endpoints p+ and p- of the Tate resolution of F(m).
    Endpoints(TwistArgs),
    /// Sweep all closed forms against the cohomology oracle.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_l: i64,
        #[arg(long, default_value_t = 3)]
        max_d: i64,
        /// Entries of m and p range over [-range, range].
        #[arg(long, default_value_t = 8)]
        range: i64,
        /// Random r = 3 instances per sampled check.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Random (m, m2) pairs per embedding.
        #[arg(long, default_value_t = 1_000)]
        pairs: usize,
    },
    /// Read one request per line from stdin and emit one JSON document per line.
    Batch,
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct CliRequest {
    pub format: Format,
    pub caps: Caps,
    pub explain: bool,
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Cohomology {
        e: EmbeddingData,
        m: MultiDegree,
    },
    Regular {
        e: EmbeddingData,
        m: MultiDegree,
        p: MultiDegree,
    },
    Oracle {
        e: EmbeddingData,
        m: MultiDegree,
        p: MultiDegree,
    },
    Regset {
        e: EmbeddingData,
        m: MultiDegree,
        antichain: bool,
    },
    Member {
        e: EmbeddingData,
        m: MultiDegree,
        p: MultiDegree,
    },
    Reg {
        e: EmbeddingData,
        m: MultiDegree,
    },
    Segre2 {
        a: i64,
        b: i64,
        k: i64,
        l: i64,
    },
    Lambda {
        e: EmbeddingData,
    },
    Subadd {
        e: EmbeddingData,
        m: MultiDegree,
        m2: MultiDegree,
        points: Option<(MultiDegree, MultiDegree)>,
    },
    Tate {
        e: EmbeddingData,
        m: MultiDegree,
        pad: u32,
    },
    Endpoints {
        e: EmbeddingData,
        m: MultiDegree,
    },
    Verify(VerifyConfig),
    Batch,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Cohomology { .. } => "cohomology",
            Command::Regular { .. } => "regular",
            Command::Oracle { .. } => "oracle",
            Command::Regset { .. } => "regset",
            Command::Member { .. } => "member",
            Command::Reg { .. } => "reg",
            Command::Segre2 { .. } => "segre2",
            Command::Lambda { .. } => "lambda",
            Command::Subadd { .. } => "subadd",
            Command::Tate { .. } => "tate",
            Command::Endpoints { .. } => "endpoints",
            Command::Verify(_) => "verify",
            Command::Batch => "batch",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// `--help` or `--version`; not a failure.
    #[error("{0}")]
    Info(String),
    #[error("{0}")]
    Usage(String),
    #[error("{flag}: {source}")]
    Input { flag: &'static str, source: Error },
    #[error("{0}")]
    Compute(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Info(_) => EXIT_OK,
            _ => EXIT_INPUT,
        }
    }
}

fn input(flag: &'static str) -> impl FnOnce(Error) -> CliError {
    move |source| CliError::Input { flag, source }
}

fn embedding(args: EmbeddingArgs, caps: Caps) -> Result<EmbeddingData, CliError> {
    EmbeddingData::new(args.l.0, args.d.0)
        .map(|e| e.with_caps(caps))
        .map_err(|source| {
            let flag = match source {
                Error::NonPositiveDimension(_) | Error::Overflow(_) => "--l",
                _ => "--d",
            };
            CliError::Input { flag, source }
        })
}

fn degree(e: &EmbeddingData, flag: &'static str, v: IntList) -> Result<MultiDegree, CliError> {
    let md = MultiDegree(v.0);
    e.check(&md).map_err(input(flag))?;
    Ok(md)
}

fn twist_args(a: TwistArgs, caps: Caps) -> Result<(EmbeddingData, MultiDegree), CliError> {
    let e = embedding(a.emb, caps)?;
    let m = degree(&e, "--m", a.m)?;
    Ok((e, m))
}

fn point_args(
    a: PointArgs,
    caps: Caps,
) -> Result<(EmbeddingData, MultiDegree, MultiDegree), CliError> {
    let (e, m) = twist_args(a.twist, caps)?;
    let p = degree(&e, "--p", a.p)?;
    Ok((e, m, p))
}

/// Parses and validates `argv` (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<CliRequest, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let raw = RawCli::try_parse_from(argv).map_err(|err| {
        use clap::error::ErrorKind;
        match err.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Info(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    })?;
    let caps = raw.caps.unwrap_or_default();
    let command = match raw.command {
        RawCommand::Cohomology(a) => {
            let (e, m) = twist_args(a, caps)?;
            Command::Cohomology { e, m }
        }
        RawCommand::Regular(a) => {
            let (e, m, p) = point_args(a, caps)?;
            Command::Regular { e, m, p }
        }
        RawCommand::Oracle(a) => {
            let (e, m, p) = point_args(a, caps)?;
            Command::Oracle { e, m, p }
        }
        RawCommand::Regset { twist, antichain } => {
            let (e, m) = twist_args(twist, caps)?;
            Command::Regset { e, m, antichain }
        }
        RawCommand::Member(a) => {
            let (e, m, p) = point_args(a, caps)?;
            Command::Member { e, m, p }
        }
        RawCommand::Reg(a) => {
            let (e, m) = twist_args(a, caps)?;
            Command::Reg { e, m }
        }
        RawCommand::Segre2 { a, b, k, l } => {
            if a < 1 {
                return Err(CliError::Input {
                    flag: "--a",
                    source: Error::NonPositiveDimension(a),
                });
            }
            if b < 1 {
                return Err(CliError::Input {
                    flag: "--b",
                    source: Error::NonPositiveDimension(b),
                });
            }
            Command::Segre2 { a, b, k, l }
        }
        RawCommand::Lambda(a) => Command::Lambda {
            e: embedding(a, caps)?,
        },
        RawCommand::Subadd { twist, m2, p, p2 } => {
            let (e, m) = twist_args(twist, caps)?;
            let m2 = degree(&e, "--m2", m2)?;
            let points = match (p, p2) {
                (Some(p), Some(p2)) => Some((degree(&e, "--p", p)?, degree(&e, "--p2", p2)?)),
                _ => None,
            };
            Command::Subadd { e, m, m2, points }
        }
        RawCommand::Tate { twist, pad } => {
            let (e, m) = twist_args(twist, caps)?;
            Command::Tate { e, m, pad }
        }
        RawCommand::Endpoints(a) => {
            let (e, m) = twist_args(a, caps)?;
            Command::Endpoints { e, m }
        }
        RawCommand::Verify {
            max_l,
            max_d,
            range,
            samples,
            pairs,
        } => {
            if max_l < 1 {
                return Err(CliError::Input {
                    flag: "--max-l",
                    source: Error::NonPositiveDimension(max_l),
                });
            }
            if max_d < 1 {
                return Err(CliError::Input {
                    flag: "--max-d",
                    source: Error::NonPositiveDegree(max_d),
                });
            }
            if range < 0 {
                return Err(CliError::Usage(format!(
                    "--range: must be nonnegative, got {range}"
                )));
            }
            Command::Verify(VerifyConfig {
                max_l,
                max_d,
                range,
                samples,
                pairs,
                seed: raw.seed.unwrap_or(DEFAULT_SEED),
            })
        }
        RawCommand::Batch => Command::Batch,
    };
    Ok(CliRequest {
        format: raw.format,
        caps,
        explain: raw.explain,
        command,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegreInput {
    pub a: i64,
    pub b: i64,
    pub k: i64,
    pub l: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<MultiDegree>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<MultiDegree>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m2: Option<MultiDegree>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p2: Option<MultiDegree>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pad: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segre: Option<SegreInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyConfig>,
    pub caps: Caps,
}

/// A regularity corner with `σ` written 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerDoc {
    pub sigma: Vec<usize>,
    pub corner: MultiDegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportResult {
    Cohomology {
        n: i64,
        #[serde(with = "crate::decimal")]
        ambient_dim: num_bigint::BigUint,
        profile: CohomologyProfile,
        /// `h^0, ..., h^n` as decimal strings.
        table: Vec<String>,
        euler_characteristic: String,
    },
    Regular {
        regular: bool,
        /// First subset (1-based) whose inequality fails.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        violated_subset: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rows: Option<Vec<SubsetValue>>,
    },
    Oracle {
        regular: bool,
        /// First `i > 0` with nonvanishing `H^i`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        nonvanishing_degree: Option<i64>,
    },
    Corners {
        antichain: bool,
        corners: Vec<CornerDoc>,
    },
    Member {
        member: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dominated_corner: Option<MultiDegree>,
    },
    Regularity {
        value: i64,
        /// A subset (1-based) attaining the maximum.
        witness: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rows: Option<Vec<SubsetValue>>,
    },
    Segre {
        value: i64,
        general_formula: i64,
    },
    Lambda {
        report: LambdaReport,
        reg_structure_sheaf: i64,
        strict: bool,
    },
    Subadditivity {
        report: SubadditivityReport,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        l_regularity: Option<LSubadditivity>,
    },
    Window {
        n: i64,
        inverted: bool,
        window: TateWindow,
    },
    Endpoints {
        p_plus: i64,
        p_minus: i64,
        length: i64,
        m_tilde: MultiDegree,
        /// Present when `d = (1,...,1)` and all `l_k` agree.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        balanced: Option<(i64, i64)>,
    },
    Verify {
        passed: bool,
        report: VerifyReport,
    },
    Error {
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub command: String,
    pub input: ReportInput,
    pub result: ReportResult,
    /// The result the value comes from.
    pub note: String,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report documents always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: ReportDocument,
    pub exit_code: i32,
}

fn one_based(subset: &[usize]) -> Vec<usize> {
    subset.iter().map(|k| k + 1).collect()
}

fn one_based_rows(rows: Vec<SubsetValue>) -> Vec<SubsetValue> {
    rows.into_iter()
        .map(|r| SubsetValue {
            subset: one_based(&r.subset),
            value: r.value,
        })
        .collect()
}

fn embedding_input(e: &EmbeddingData) -> ReportInput {
    ReportInput {
        l: Some(e.dims().to_vec()),
        d: Some(e.degrees().to_vec()),
        caps: e.caps(),
        ..Default::default()
    }
}

/// Executes a validated request. `Batch` must be handled by [`execute`].
pub fn run(request: &CliRequest) -> Result<Outcome, CliError> {
    let explain = request.explain;
    let mut exit_code = EXIT_OK;
    let (input, result, note) = match &request.command {
        Command::Cohomology { e, m } => {
            let profile = cohomology_x(e, m)?;
            let table = profile.table(e.n()).iter().map(|v| v.to_string()).collect();
            let euler = euler_characteristic(e, m)?.to_string();
            (
                ReportInput {
                    m: Some(m.clone()),
                    ..embedding_input(e)
                },
                ReportResult::Cohomology {
                    n: e.n(),
                    ambient_dim: e.ambient_dim(),
                    profile,
                    table,
                    euler_characteristic: euler,
                },
                "Bott rules on each factor combined by the Kunneth formula",
            )
        }
        Command::Regular { e, m, p } => {
            let violated = violated_subset(e, m, p)?;
            let rows = if explain {
                Some(one_based_rows(l_regularity_table(e, m, p)?))
            } else {
                None
            };
            (
                ReportInput { m: Some(m.clone()), p: Some(p.clone()), ..embedding_input(e) },
                ReportResult::Regular {
                    regular: violated.is_none(),
                    violated_subset: violated.as_deref().map(one_based),
                    rows,
                },
                "O_X(m) is O_X(p)-regular iff max_{k in J}(p_k + m_k + l_k - l_J d_k) >= 0 for every nonempty J",
            )
        }
        Command::Oracle { e, m, p } => {
            let degree = nonvanishing_degree(e, m, p)?;
            (
                ReportInput {
                    m: Some(m.clone()),
                    p: Some(p.clone()),
                    ..embedding_input(e)
                },
                ReportResult::Oracle {
                    regular: degree.is_none(),
                    nonvanishing_degree: degree,
                },
                "direct vanishing test of H^i(X, O_X(m + p - i d)) for i = 1..n",
            )
        }
        Command::Regset { e, m, antichain } => {
            let corners = regularity_corners(e, m, *antichain)?
                .into_iter()
                .map(|c| CornerDoc {
                    sigma: one_based(&c.sigma),
                    corner: c.corner,
                })
                .collect();
            (
                ReportInput {
                    m: Some(m.clone()),
                    ..embedding_input(e)
                },
                ReportResult::Corners {
                    antichain: *antichain,
                    corners,
                },
                "regularity set as the union over permutations of p_sigma + N^r",
            )
        }
        Command::Member { e, m, p } => {
            let set = RegularitySet::new(e, m)?;
            let hit = set
                .corners()
                .iter()
                .find(|c| c.corner.dominated_by(p))
                .map(|c| c.corner.clone());
            (
                ReportInput {
                    m: Some(m.clone()),
                    p: Some(p.clone()),
                    ..embedding_input(e)
                },
                ReportResult::Member {
                    member: hit.is_some(),
                    dominated_corner: hit,
                },
                "membership in the union of corner translates p_sigma + N^r",
            )
        }
        Command::Reg { e, m } => {
            let (value, witness) = cm_regularity_with_witness(e, m)?;
            let rows = if explain {
                Some(one_based_rows(regularity_table(e, m)?))
            } else {
                None
            };
            (
                ReportInput {
                    m: Some(m.clone()),
                    ..embedding_input(e)
                },
                ReportResult::Regularity {
                    value,
                    witness: one_based(&witness),
                    rows,
                },
                "reg F(m) = max over nonempty J of min_{k in J} (l_J - floor((m_k + l_k) / d_k))",
            )
        }
        Command::Segre2 { a, b, k, l } => {
            let value = segre_regularity_r2(*a, *b, *k, *l)?;
            let e = EmbeddingData::new(vec![*a, *b], vec![1, 1])?.with_caps(request.caps);
            let general = cm_regularity(&e, &MultiDegree(vec![*k, *l]))?;
            (
                ReportInput {
                    segre: Some(SegreInput {
                        a: *a,
                        b: *b,
                        k: *k,
                        l: *l,
                    }),
                    caps: request.caps,
                    ..Default::default()
                },
                ReportResult::Segre {
                    value,
                    general_formula: general,
                },
                "Segre embedding of P^a x P^b: reg F(k,l) = max{-min{k,l}, min{b-k, a-l}}",
            )
        }
        Command::Lambda { e } => {
            let report = ideal_sheaf_lambda(e)?;
            let reg0 = cm_regularity(e, &MultiDegree::zero(e.rank()))?;
            (
                embedding_input(e),
                ReportResult::Lambda {
                    report,
                    reg_structure_sheaf: reg0,
                    strict: report.lambda - 1 > reg0,
                },
                "lambda = n + 1 - min_k floor(l_k / d_k) bounds the regularity of the ideal sheaf of the image",
            )
        }
        Command::Subadd { e, m, m2, points } => {
            let report = check_subadditivity(e, m, m2)?;
            let l_regularity = match points {
                Some((p, p2)) => Some(check_l_subadditivity(e, m, p, m2, p2)?),
                None => None,
            };
            if !report.holds || l_regularity == Some(LSubadditivity::Fails) {
                exit_code = EXIT_COUNTEREXAMPLE;
            }
            (
                ReportInput {
                    m: Some(m.clone()),
                    m2: Some(m2.clone()),
                    p: points.as_ref().map(|(p, _)| p.clone()),
                    p2: points.as_ref().map(|(_, p2)| p2.clone()),
                    ..embedding_input(e)
                },
                ReportResult::Subadditivity {
                    report,
                    l_regularity,
                },
                "reg F(m) + reg F(m2) >= reg F(m + m2), and L-regularity adds along p + p2",
            )
        }
        Command::Tate { e, m, pad } => {
            let window = tate_window(e, m, *pad)?;
            (
                ReportInput {
                    m: Some(m.clone()),
                    pad: Some(*pad),
                    ..embedding_input(e)
                },
                ReportResult::Window {
                    n: e.n(),
                    inverted: window.inverted(),
                    window,
                },
                "T^p = sum_i E^(i-p) (x) H^i(F(m)(p-i)); p+ = reg F(m), p- = -reg F(m~)",
            )
        }
        Command::Endpoints { e, m } => {
            let (hi, lo) = (p_plus(e, m)?, p_minus(e, m)?);
            let uniform =
                e.degrees().iter().all(|&d| d == 1) && e.dims().iter().all(|&l| l == e.dims()[0]);
            let balanced = if uniform {
                let mut sorted = m.0.clone();
                sorted.sort_unstable();
                Some(balanced_endpoints(e.rank(), e.dims()[0], &sorted)?)
            } else {
                None
            };
            if balanced.is_some_and(|b| b != (hi, lo)) {
                exit_code = EXIT_COUNTEREXAMPLE;
            }
            (
                ReportInput {
                    m: Some(m.clone()),
                    ..embedding_input(e)
                },
                ReportResult::Endpoints {
                    p_plus: hi,
                    p_minus: lo,
                    length: hi - lo,
                    m_tilde: m_tilde(e, m)?,
                    balanced,
                },
                "p+ = reg F(m) and p- = -reg F(m~) with m~ = -m + n d - l - 1",
            )
        }
        Command::Verify(cfg) => {
            let report = run_verification(cfg);
            let passed = report.passed();
            if !passed {
                exit_code = EXIT_COUNTEREXAMPLE;
            }
            (
                ReportInput {
                    verify: Some(cfg.clone()),
                    caps: request.caps,
                    ..Default::default()
                },
                ReportResult::Verify { passed, report },
                "closed forms checked against direct cohomology computations",
            )
        }
        Command::Batch => {
            return Err(CliError::Usage("batch requests cannot be nested".into()));
        }
    };
    Ok(Outcome {
        document: ReportDocument {
            version: VERSION.to_string(),
            command: request.command.name().to_string(),
            input,
            result,
            note: note.to_string(),
        },
        exit_code,
    })
}

fn fmt_subset(s: &[usize]) -> String {
    let inner: Vec<String> = s.iter().map(|k| k.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn fmt_list(v: &[i64]) -> String {
    MultiDegree(v.to_vec()).to_string()
}

/// Plain-text rendering of a document.
pub fn render_table(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let i = &doc.input;
    if let (Some(l), Some(d)) = (&i.l, &i.d) {
        let _ = write!(out, "l={} d={}", fmt_list(l), fmt_list(d));
        for (name, v) in [("m", &i.m), ("p", &i.p), ("m2", &i.m2), ("p2", &i.p2)] {
            if let Some(v) = v {
                let _ = write!(out, " {name}={v}");
            }
        }
        out.push('\n');
    }
    match &doc.result {
        ReportResult::Cohomology {
            n,
            ambient_dim,
            profile,
            table,
            euler_characteristic,
        } => {
            let _ = writeln!(out, "n = {n}, N = {ambient_dim}");
            match profile.degree() {
                Some(deg) => {
                    let _ = writeln!(
                        out,
                        "concentrated in degree {deg}, dimension {}",
                        profile.dimension()
                    );
                }
                None => out.push_str("all cohomology vanishes\n"),
            }
            out.push_str("  i  h^i\n");
            for (deg, h) in table.iter().enumerate() {
                let _ = writeln!(out, "{deg:>3}  {h}");
            }
            let _ = writeln!(out, "euler characteristic = {euler_characteristic}");
        }
        ReportResult::Regular {
            regular,
            violated_subset,
            rows,
        } => {
            let _ = writeln!(out, "regular: {regular}");
            if let Some(j) = violated_subset {
                let _ = writeln!(out, "violated at J = {}", fmt_subset(j));
            }
            if let Some(rows) = rows {
                out.push_str("J          max_k (p_k+m_k+l_k-l_J d_k)\n");
                for r in rows {
                    let mark = if r.value < 0 { "  <- fails" } else { "" };
                    let _ = writeln!(out, "{:<10} {}{mark}", fmt_subset(&r.subset), r.value);
                }
            }
        }
        ReportResult::Oracle {
            regular,
            nonvanishing_degree,
        } => {
            let _ = writeln!(out, "regular: {regular}");
            if let Some(deg) = nonvanishing_degree {
                let _ = writeln!(out, "H^{deg}(X, O_X(m + p - {deg} d)) != 0");
            }
        }
        ReportResult::Corners { antichain, corners } => {
            let _ = writeln!(
                out,
                "{} corners{}",
                corners.len(),
                if *antichain { " (minimal)" } else { "" }
            );
            out.push_str("sigma      corner\n");
            for c in corners {
                let s: Vec<String> = c.sigma.iter().map(|k| k.to_string()).collect();
                let _ = writeln!(out, "{:<10} {}", s.join(" "), c.corner);
            }
        }
        ReportResult::Member {
            member,
            dominated_corner,
        } => {
            let _ = writeln!(out, "member: {member}");
            if let Some(c) = dominated_corner {
                let _ = writeln!(out, "dominates corner {c}");
            }
        }
        ReportResult::Regularity {
            value,
            witness,
            rows,
        } => {
            let _ = writeln!(
                out,
                "reg = {value}  (attained at J = {})",
                fmt_subset(witness)
            );
            if let Some(rows) = rows {
                out.push_str("J          min_k (l_J - floor((m_k+l_k)/d_k))\n");
                for r in rows {
                    let mark = if r.subset == *witness { "  <- max" } else { "" };
                    let _ = writeln!(out, "{:<10} {}{mark}", fmt_subset(&r.subset), r.value);
                }
            }
        }
        ReportResult::Segre {
            value,
            general_formula,
        } => {
            if let Some(s) = &i.segre {
                let _ = writeln!(out, "a={} b={} k={} l={}", s.a, s.b, s.k, s.l);
            }
            let _ = writeln!(out, "reg = {value}  (general formula: {general_formula})");
        }
        ReportResult::Lambda {
            report,
            reg_structure_sheaf,
            strict,
        } => {
            let _ = writeln!(
                out,
                "lambda = {}  (case split: {}, q0 = {})",
                report.lambda, report.lambda_case_split, report.q0
            );
            let _ = writeln!(
                out,
                "reg O_Y = {reg_structure_sheaf}, lambda - 1 = {}{}",
                report.lambda - 1,
                if *strict { "  (strict)" } else { "" }
            );
        }
        ReportResult::Subadditivity {
            report,
            l_regularity,
        } => {
            let _ = writeln!(
                out,
                "reg F(m) = {}, reg F(m2) = {}, reg F(m+m2) = {}",
                report.reg_m, report.reg_m2, report.reg_sum
            );
            let _ = writeln!(out, "holds: {}", report.holds);
            if let Some(lr) = l_regularity {
                let text = match lr {
                    LSubadditivity::HypothesisNotMet => "hypothesis not met",
                    LSubadditivity::Holds => "holds",
                    LSubadditivity::Fails => "FAILS",
                };
                let _ = writeln!(out, "L-regularity of m+m2 at p+p2: {text}");
            }
        }
        ReportResult::Window {
            n,
            inverted,
            window,
        } => {
            let _ = writeln!(
                out,
                "p- = {}, p+ = {}, length = {}{}",
                window.p_minus,
                window.p_plus,
                window.length(),
                if *inverted { "  (inverted)" } else { "" }
            );
            out.push_str("   p  terms (i: E^(twist)^rank)\n");
            for t in &window.terms {
                let cells: Vec<String> = t
                    .entries
                    .iter()
                    .map(|en| format!("{}: E^({})^{}", en.i, en.twist, en.rank))
                    .collect();
                let tag = if t.p == window.p_plus && t.p == window.p_minus {
                    " [p-,p+]"
                } else if t.p == window.p_plus {
                    " [p+]"
                } else if t.p == window.p_minus {
                    " [p-]"
                } else {
                    ""
                };
                let _ = writeln!(
                    out,
                    "{:>4}  {}{tag}",
                    t.p,
                    if cells.is_empty() {
                        "0".into()
                    } else {
                        cells.join(", ")
                    }
                );
            }
            let _ = writeln!(out, "(n = {n})");
        }
        ReportResult::Endpoints {
            p_plus,
            p_minus,
            length,
            m_tilde,
            balanced,
        } => {
            let _ = writeln!(out, "p+ = {p_plus}, p- = {p_minus}, p+ - p- = {length}");
            let _ = writeln!(out, "m~ = {m_tilde}");
            if let Some((hi, lo)) = balanced {
                let _ = writeln!(out, "balanced closed form: p+ = {hi}, p- = {lo}");
            }
        }
        ReportResult::Verify { passed, report } => {
            for c in &report.checks {
                let status = if c.passed() { "ok  " } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{status} {:<52} {:>10} instances, {} failures",
                    c.name, c.instances, c.failures
                );
                if let Some(ce) = &c.counterexample {
                    let _ = writeln!(
                        out,
                        "     counterexample: {}",
                        serde_json::to_string(ce).unwrap_or_default()
                    );
                }
            }
            let _ = writeln!(
                out,
                "{}",
                if *passed {
                    "all checks passed"
                } else {
                    "counterexample found"
                }
            );
        }
        ReportResult::Error { message } => {
            let _ = writeln!(out, "error: {message}");
        }
    }
    out
}

fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json() + "\n",
        Format::Table => render_table(doc),
    }
}

fn error_document(command: &str, message: String) -> ReportDocument {
    ReportDocument {
        version: VERSION.to_string(),
        command: command.to_string(),
        input: ReportInput::default(),
        result: ReportResult::Error { message },
        note: String::new(),
    }
}

fn run_batch(stdin: impl BufRead, out: &mut impl Write) -> std::io::Result<i32> {
    let mut worst = EXIT_OK;
    for line in stdin.lines() {
        let line = line?;
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.is_empty() || words[0].starts_with('#') {
            continue;
        }
        let argv = std::iter::once("svreg").chain(words.iter().copied());
        let (doc, code) = match parse_args(argv).and_then(|req| match req.command {
            Command::Batch => Err(CliError::Usage("batch requests cannot be nested".into())),
            _ => run(&req),
        }) {
            Ok(outcome) => (outcome.document, outcome.exit_code),
            Err(err) => (error_document(words[0], err.to_string()), err.exit_code()),
        };
        writeln!(out, "{}", doc.to_json())?;
        worst = worst.max(code);
    }
    Ok(worst)
}

/// Full CLI behavior over explicit streams; returns the process exit code.
pub fn execute<I, T>(
    argv: I,
    stdin: impl BufRead,
    out: &mut impl Write,
    err: &mut impl Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let request = match parse_args(argv) {
        Ok(r) => r,
        Err(CliError::Info(text)) => {
            let _ = write!(out, "{text}");
            return EXIT_OK;
        }
        Err(e) => {
            let _ = writeln!(err, "{}", e.to_string().trim_end());
            return e.exit_code();
        }
    };
    if request.command == Command::Batch {
        return match run_batch(stdin, out) {
            Ok(code) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INPUT
            }
        };
    }
    match run(&request) {
        Ok(outcome) => {
            let _ = write!(out, "{}", render(&outcome.document, request.format));
            outcome.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
