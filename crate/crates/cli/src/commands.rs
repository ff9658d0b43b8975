use std::path::Path;

use relce_core::generic::{
    avoidance_check, fixpoint_remove_witnesses, force_meet_or_avoid, j_map, theorem3_demo,
    Avoidance, DemoError, FixpointError, FixpointReport, ForceRun, Requirement, ScanCap,
    ScanError, Theorem3Certificate, DEFAULT_SCAN_CAP,
};
use relce_core::{
    rightmost_construct, rightmost_oracle, verify_e_witness, BinaryString, ConstructError,
    EnumOperator, FiniteNatSet, PrefixTree, RightmostReport, TreeSpec, TreeSpecError,
};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use crate::cli::{Command, VerifyArgs};
use crate::error::CliError;

pub const SCAN_CAP_ENV: &str = "RELCE_SCAN_CAP";

/// Whether the mathematics answered yes (exit 0) or no (exit 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
}

pub struct Outcome {
    pub json: String,
    pub verdict: Verdict,
}

impl Outcome {
    fn new(body: &impl Serialize, verdict: Verdict) -> Self {
        let mut json = serde_json::to_string_pretty(body).expect("reports serialize");
        json.push('\n');
        Self { json, verdict }
    }

    fn yes_if(body: &impl Serialize, ok: bool) -> Self {
        Self::new(body, if ok { Verdict::Yes } else { Verdict::No })
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Rightmost {
            tree, seed, trace, ..
        } => rightmost(tree, *seed, *trace),
        Command::Fixpoint { sigma, p, trace, .. } => fixpoint(sigma, *p, *trace),
        Command::Demo3 { sigma, l, op, .. } => demo3(sigma, *l, op),
        Command::Force {
            requirements,
            t,
            scan_cap,
            ..
        } => force(requirements, *t, *scan_cap),
        Command::Verify(args) => verify(args),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::json(path, e))
}

fn parse_bits(flag: &str, text: &str) -> Result<BinaryString, CliError> {
    text.parse()
        .map_err(|e| CliError::usage(format!("--{flag}: {e}")))
}

fn scan_cap(flag: Option<u64>) -> Result<ScanCap, CliError> {
    if let Some(cap) = flag {
        return Ok(ScanCap(cap));
    }
    match std::env::var(SCAN_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(ScanCap)
            .map_err(|_| CliError::usage(format!("{SCAN_CAP_ENV}={v:?} is not a natural number"))),
        Err(_) => Ok(ScanCap(DEFAULT_SCAN_CAP)),
    }
}

fn scan_error(err: ScanError) -> CliError {
    let kind = match err {
        ScanError::BudgetExceeded { .. } => "scan-cap-exceeded",
        ScanError::BadBounds { .. } | ScanError::MemberTooLong { .. } => "precondition-violated",
    };
    CliError::new(kind, err.to_string())
}

fn load_tree(path: &Path, seed: Option<u64>) -> Result<PrefixTree, CliError> {
    let mut spec: TreeSpec = read_json(path)?;
    if let (Some(seed), TreeSpec::Generated(g)) = (seed, &mut spec) {
        g.seed = seed;
    }
    spec.build().map_err(|e| match e {
        TreeSpecError::Invalid(tree) => {
            CliError::new("invalid-tree", tree.to_string()).with_details(&tree.violations)
        }
        other => CliError::new("schema", other.to_string()),
    })
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    error: &'a CliError,
}

fn rightmost(tree_path: &Path, seed: Option<u64>, trace: bool) -> Result<Outcome, CliError> {
    let tree = load_tree(tree_path, seed)?;
    match rightmost_construct(&tree) {
        Ok(run) => {
            let report = RightmostReport::from_run(&tree, run, trace);
            let ok = report.oracle_agrees && report.witness_holds;
            Ok(Outcome::yes_if(&report, ok))
        }
        Err(ConstructError::Stuck {
            stage,
            current,
            trace,
        }) => {
            let err = CliError::new("stuck", format!("no backtrack target at stage {stage}"))
                .with_details(serde_json::json!({ "X": current, "trace": trace }));
            Ok(Outcome::new(&ErrorBody { error: &err }, Verdict::No))
        }
    }
}

fn fixpoint(sigma: &str, p: usize, trace: bool) -> Result<Outcome, CliError> {
    let sigma0 = parse_bits("sigma", sigma)?;
    let run = fixpoint_remove_witnesses(&sigma0, p).map_err(|e| {
        let err = CliError::new("precondition-violated", e.to_string());
        match e {
            FixpointError::WouldClearCodeBit { p, n, m } => err.with_details(serde_json::json!({
                "p": p, "n": n, "m": m, "j_sigma0": j_map(&sigma0),
            })),
            _ => err,
        }
    })?;
    let report = FixpointReport::from_run(&sigma0, p, run, trace);
    let ok = report.j_preserved;
    Ok(Outcome::yes_if(&report, ok))
}

#[derive(Serialize)]
struct NoCandidate {
    no_candidate: NoCandidateBody,
}

#[derive(Serialize)]
struct NoCandidateBody {
    t: usize,
    l: usize,
    z_t: FiniteNatSet,
}

fn demo3(sigma: &str, l: usize, op_path: &Path) -> Result<Outcome, CliError> {
    let sigma_x = parse_bits("sigma", sigma)?;
    let op: EnumOperator = read_json(op_path)?;
    match theorem3_demo(&sigma_x, l, &op) {
        Ok(cert) => Ok(Outcome::new(&cert, Verdict::Yes)),
        Err(DemoError::NoCandidate { t, l, z_t }) => Ok(Outcome::new(
            &NoCandidate {
                no_candidate: NoCandidateBody { t, l, z_t },
            },
            Verdict::No,
        )),
        Err(e @ DemoError::LevelTooLarge { .. }) => {
            Err(CliError::new("precondition-violated", e.to_string()))
        }
        Err(e @ DemoError::Rejected(_)) => {
            let err = CliError::new("certificate-rejected", e.to_string());
            Ok(Outcome::new(&ErrorBody { error: &err }, Verdict::No))
        }
    }
}

fn force(requirements: &Path, t: usize, cap: Option<u64>) -> Result<Outcome, CliError> {
    let reqs: Vec<Requirement> = read_json(requirements)?;
    let run = force_meet_or_avoid(&reqs, t, scan_cap(cap)?).map_err(scan_error)?;
    Ok(Outcome::new(&run, Verdict::Yes))
}

#[derive(Serialize)]
struct VerifyResult {
    verified: bool,
    kind: &'static str,
    problems: Vec<String>,
}

fn verified(kind: &'static str, problems: Vec<String>) -> Outcome {
    let ok = problems.is_empty();
    Outcome::yes_if(
        &VerifyResult {
            verified: ok,
            kind,
            problems,
        },
        ok,
    )
}

fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    if let Some(report) = &args.report {
        return verify_report(report, args);
    }
    if let Some(witness) = &args.witness {
        let x = args
            .x
            .as_deref()
            .ok_or_else(|| CliError::usage("--witness needs --x"))?;
        let x = parse_bits("x", x)?;
        let op: EnumOperator = read_json(witness)?;
        let report = verify_e_witness(&op, &x);
        let ok = report.holds;
        return Ok(Outcome::yes_if(&report, ok));
    }
    if let (Some(op), Some(sigma), Some(l)) = (&args.op, &args.sigma, args.l) {
        let base = parse_bits("sigma", sigma)?;
        let op: EnumOperator = read_json(op)?;
        let t = args.t.unwrap_or(base.len());
        let result =
            avoidance_check(&base, l, t, &op, scan_cap(args.scan_cap)?).map_err(scan_error)?;
        let ok = result == Avoidance::Holds;
        return Ok(Outcome::yes_if(&result, ok));
    }
    Err(CliError::usage(
        "verify needs --report, --witness with --x, or --op with --sigma and --l",
    ))
}

fn need<'a, T>(value: &'a Option<T>, flag: &str, kind: &str) -> Result<&'a T, CliError> {
    value
        .as_ref()
        .ok_or_else(|| CliError::usage(format!("verifying a {kind} report needs --{flag}")))
}

fn typed<T: DeserializeOwned>(path: &Path, value: Value) -> Result<T, CliError> {
    serde_json::from_value(value).map_err(|e| CliError::json(path, e))
}

fn verify_report(path: &Path, args: &VerifyArgs) -> Result<Outcome, CliError> {
    let value: Value = read_json(path)?;
    let has = |key: &str| value.get(key).is_some();
    if has("X") && has("C") {
        let report: RightmostReport = typed(path, value)?;
        let tree = load_tree(need(&args.tree, "tree", "rightmost")?, args.seed)?;
        Ok(verified("rightmost", check_rightmost(&tree, &report)))
    } else if has("tau") {
        let cert: Theorem3Certificate = typed(path, value)?;
        let op: EnumOperator = read_json(need(&args.op, "op", "certificate")?)?;
        Ok(verified("certificate", cert.problems(&op)))
    } else if has("sigma0") {
        let report: FixpointReport = typed(path, value)?;
        Ok(verified("fixpoint", check_fixpoint(&report)))
    } else if has("log") {
        let run: ForceRun = typed(path, value)?;
        let reqs: Vec<Requirement> = read_json(need(&args.requirements, "requirements", "force")?)?;
        let redo = force_meet_or_avoid(&reqs, run.sigma.len(), scan_cap(args.scan_cap)?)
            .map_err(scan_error)?;
        let problems = if redo == run {
            Vec::new()
        } else {
            vec!["re-running the forcing gives a different result".to_string()]
        };
        Ok(verified("force", problems))
    } else {
        Err(CliError::new(
            "schema",
            format!("{}: not a recognised report", path.display()),
        ))
    }
}

fn check_rightmost(tree: &PrefixTree, report: &RightmostReport) -> Vec<String> {
    let mut problems = Vec::new();
    let oracle_agrees = rightmost_oracle(tree) == report.x;
    let witness_holds = verify_e_witness(&report.c.to_operator(), &report.x).holds;
    if !oracle_agrees {
        problems.push("X is not the rightmost path of the tree".into());
    }
    if !witness_holds {
        problems.push("C does not witness the complement of X".into());
    }
    if report.oracle_agrees != oracle_agrees || report.witness_holds != witness_holds {
        problems.push("reported flags disagree with recomputation".into());
    }
    match rightmost_construct(tree) {
        Ok(run) => {
            if run.x != report.x || run.witness != report.c {
                problems.push("construction replay gives a different X or C".into());
            }
            if report.trace.as_ref().is_some_and(|t| *t != run.trace) {
                problems.push("construction replay gives a different trace".into());
            }
        }
        Err(e) => problems.push(e.to_string()),
    }
    problems
}

fn check_fixpoint(report: &FixpointReport) -> Vec<String> {
    let run = match fixpoint_remove_witnesses(&report.sigma0, report.p) {
        Ok(run) => run,
        Err(e) => return vec![e.to_string()],
    };
    let mut problems = Vec::new();
    if run.sigma != report.sigma {
        problems.push("replay gives a different sigma".into());
    }
    if report.trace.as_ref().is_some_and(|t| *t != run.trace) {
        problems.push("replay gives a different trace".into());
    }
    if report.sigma.get(report.p) != Some(true) {
        problems.push(format!("sigma({}) is not 1", report.p));
    }
    if !report.sigma0.to_set().is_subset(&report.sigma.to_set()) {
        problems.push("sigma drops a 1 of sigma0".into());
    }
    let j_same = j_map(&report.sigma) == j_map(&report.sigma0);
    if !j_same {
        problems.push("j(sigma) differs from j(sigma0)".into());
    }
    if report.j_preserved != j_same {
        problems.push("reported j_preserved disagrees with recomputation".into());
    }
    problems
}
