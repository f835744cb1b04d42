use std::fs;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use binvote::alg1::{enumerate_alg1_family, run_alg1, FamilyLimits, Script, SelectionPolicy};
use binvote::alg2::{run_alg2_with_limit, DEFAULT_PATH_LIMIT};
use binvote::coalition::{Coalition, CoalitionSet, MoulinCheck, MwcsReport, SubsetSequence};
use binvote::doc::{
    alg1_trace_json, alg2_trace_json, coalition_json, DocError, Document, GameDocument,
    SequenceDocument, WithTrace,
};
use binvote::profile::{Decision, Outcome, StrictProfile, TernaryProfile};
use binvote::verify::{
    all_2trade_violations, check_equivalence, check_essential, check_neutrality,
    check_strategy_proofness, find_integer_weights, AnyProfile, Domain, RuleHandle, WeightSearch,
    DEFAULT_WEIGHT_BUDGET,
};
use binvote::{DefaultRule, Error};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BOUND: u8 = 3;

/// Binary voting rules: coalition sets, sequential unanimity rules and the
/// conversions between them. Documents are JSON; `-` reads stdin.
#[derive(Parser)]
#[command(name = "binvote", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a game (P1, P2) or a sequence document.
    Validate {
        /// Game or sequence document, or - for stdin
        input: String,
    },

    /// Convert a game into an equivalent sequence.
    ToSequence {
        /// Game document, or - for stdin
        game: String,
        /// lex, seed=N or script=FILE
        #[arg(long, default_value = "lex")]
        policy: String,
        /// Add the essentiality condition to the selection criteria.
        #[arg(long)]
        essential: bool,
        /// List every reachable output instead of a single run.
        #[arg(long)]
        enumerate: bool,
        /// Cap on sequences listed by --enumerate.
        #[arg(long, default_value_t = 10_000)]
        max: usize,
    },

    /// Convert a sequence into its coalition set.
    ToCoalitions {
        /// Sequence document, or - for stdin
        sequence: String,
        /// Cap on paths enumerated per iteration
        #[arg(long, default_value_t = DEFAULT_PATH_LIMIT)]
        path_limit: usize,
    },

    /// Run exhaustive checks. Arguments are rule specs (game=PATH, seq=PATH)
    /// and optionally a keyword: equiv, sp, neutral, essential, trade, weights.
    Check {
        #[arg(required = true)]
        args: Vec<String>,
        /// Check strategy-proofness of each rule
        #[arg(long)]
        sp: bool,
        /// Check neutrality of each rule
        #[arg(long)]
        neutral: bool,
        /// Check that no set of a sequence is superfluous
        #[arg(long)]
        essential: bool,
        /// Search a game for a 2-trade
        #[arg(long)]
        trade: bool,
        /// Largest weight tried by the weight search.
        #[arg(long)]
        weights: Option<u64>,
        /// Cap on weight vectors tried
        #[arg(long, default_value_t = DEFAULT_WEIGHT_BUDGET)]
        budget: u64,
        /// strict or ternary
        #[arg(long, default_value = "strict")]
        domain: String,
        /// majority, dictator:i or tie
        #[arg(long = "default")]
        default_rule: Option<String>,
    },

    /// Evaluate a rule at one profile, e.g. "abaabbb" or "ab0a".
    Eval {
        /// game=PATH or seq=PATH
        rule: String,
        /// One ballot per voter: a, b or 0
        profile: String,
        /// strict or ternary; ternary when --default is given
        #[arg(long)]
        domain: Option<String>,
        /// majority, dictator:i or tie
        #[arg(long = "default")]
        default_rule: Option<String>,
    },
}

/// A failure carrying its exit code and an optional JSON report for stdout.
struct Failure {
    code: u8,
    message: String,
    report: Option<Value>,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
            report: None,
        }
    }

    fn semantic(message: impl Into<String>, report: Value) -> Self {
        Failure {
            code: EXIT_FAIL,
            message: message.into(),
            report: Some(report),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::BoundExceeded { .. } | Error::BudgetExceeded { .. } => EXIT_BOUND,
            Error::PopulationSize(_)
            | Error::VoterOutOfRange { .. }
            | Error::EmptyCoalition { .. }
            | Error::DimensionMismatch { .. }
            | Error::Profile(_)
            | Error::Domain(_)
            | Error::Window { .. } => EXIT_INPUT,
            _ => EXIT_FAIL,
        };
        Failure {
            code,
            message: e.to_string(),
            report: Some(json!({ "error": e.to_string() })),
        }
    }
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        match e {
            DocError::Model(inner) => inner.into(),
            other => Failure::input(other.to_string()),
        }
    }
}

type CliResult = Result<(String, bool), Failure>;

fn pretty<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::input(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{path}: {e}")))
    }
}

fn mwcs_report_json(report: &MwcsReport) -> Value {
    json!({
        "valid": report.is_pass(),
        "empty_collection": report.empty_collection,
        "minimality": report.minimality.map(|v| json!({
            "smaller": coalition_json(v.smaller),
            "larger": coalition_json(v.larger),
        })),
        "moulin": match report.moulin {
            MoulinCheck::Pass => json!("pass"),
            MoulinCheck::Counterexample(c) => json!({ "counterexample": coalition_json(c) }),
        },
        "summary": report.to_string(),
    })
}

fn load_game(path: &str) -> Result<CoalitionSet, Failure> {
    let doc = GameDocument::parse(&read_input(path)?)?;
    let mut cs = doc.to_set()?;
    let report = cs.validate()?;
    if !report.is_pass() {
        return Err(Failure::semantic(
            format!("{path}: {report}"),
            json!({ "game": mwcs_report_json(&report) }),
        ));
    }
    Ok(cs)
}

fn load_sequence(path: &str) -> Result<SubsetSequence, Failure> {
    let doc = SequenceDocument::parse(&read_input(path)?)?;
    Ok(doc.to_sequence()?)
}

fn require_valid_sequence(path: &str, seq: &SubsetSequence) -> Result<(), Failure> {
    let report = seq.validate();
    if report.is_pass() {
        Ok(())
    } else {
        Err(Failure::semantic(
            format!("{path}: {report}"),
            json!({ "sequence": { "valid": false, "issues": report.issues.iter().map(|i| i.to_string()).collect::<Vec<_>>() } }),
        ))
    }
}

fn cmd_validate(input: &str) -> CliResult {
    match Document::parse(&read_input(input)?)? {
        Document::Game(doc) => {
            let mut cs = doc.to_set()?;
            let report = cs.validate()?;
            Ok((
                pretty(&json!({ "kind": "game", "report": mwcs_report_json(&report) })),
                report.is_pass(),
            ))
        }
        Document::Sequence(doc) => {
            let report = doc.to_sequence()?.validate();
            let issues: Vec<String> = report.issues.iter().map(|i| i.to_string()).collect();
            Ok((
                pretty(
                    &json!({ "kind": "sequence", "report": { "valid": report.is_pass(), "issues": issues } }),
                ),
                report.is_pass(),
            ))
        }
    }
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct ScriptFile {
    backstop: usize,
    #[serde(default)]
    choices: Vec<Vec<usize>>,
    #[serde(default)]
    leftover_order: Option<Vec<Vec<usize>>>,
}

fn load_script(path: &str, n: usize) -> Result<Script, Failure> {
    let raw: ScriptFile = serde_json::from_str(&read_input(path)?)
        .map_err(|e| Failure::input(format!("{path}: {e}")))?;
    let convert = |lists: &[Vec<usize>]| -> Result<Vec<Coalition>, Failure> {
        lists
            .iter()
            .map(|v| Coalition::from_voters(n, v).map_err(Failure::from))
            .collect()
    };
    Ok(Script {
        backstop: raw.backstop,
        choices: convert(&raw.choices)?,
        leftover_order: raw.leftover_order.as_deref().map(convert).transpose()?,
    })
}

fn parse_policy(spec: &str, n: usize) -> Result<SelectionPolicy, Failure> {
    if spec == "lex" {
        return Ok(SelectionPolicy::lexicographic());
    }
    if let Some(seed) = spec.strip_prefix("seed=") {
        let seed = seed
            .parse()
            .map_err(|_| Failure::input(format!("bad seed '{seed}'")))?;
        return Ok(SelectionPolicy::seeded(seed));
    }
    if let Some(path) = spec.strip_prefix("script=") {
        return Ok(SelectionPolicy::scripted(load_script(path, n)?));
    }
    Err(Failure::input(format!(
        "unknown policy '{spec}' (expected lex, seed=N or script=FILE)"
    )))
}

fn cmd_to_sequence(
    game: &str,
    policy: &str,
    essential: bool,
    enumerate: bool,
    max: usize,
) -> CliResult {
    let cs = load_game(game)?;
    if enumerate {
        let limits = FamilyLimits {
            max_sequences: max,
            ..FamilyLimits::default()
        };
        let family = enumerate_alg1_family(&cs, limits, essential)?;
        return Ok((
            pretty(&json!({
                "schema_version": binvote::doc::SCHEMA_VERSION,
                "n": cs.n(),
                "sequences": family.sequences.iter().map(|s| s.to_lists()).collect::<Vec<_>>(),
                "truncated": family.truncated,
            })),
            true,
        ));
    }
    let policy = parse_policy(policy, cs.n())?.essential(essential);
    let (seq, trace) = run_alg1(&cs, &policy)?;
    let doc = SequenceDocument::from_sequence(&seq);
    let out = pretty(&WithTrace {
        doc: &doc,
        trace: alg1_trace_json(&trace),
    });
    Ok((out, true))
}

fn cmd_to_coalitions(path: &str, path_limit: usize) -> CliResult {
    let seq = load_sequence(path)?;
    require_valid_sequence(path, &seq)?;
    let (cs, trace) = run_alg2_with_limit(&seq, path_limit)?;
    let doc = GameDocument::from_set(&cs);
    let out = pretty(&WithTrace {
        doc: &doc,
        trace: alg2_trace_json(&trace),
    });
    Ok((out, true))
}

enum Loaded {
    Game(CoalitionSet),
    Seq(SubsetSequence),
}

fn load_spec(spec: &str) -> Result<Loaded, Failure> {
    if let Some(path) = spec.strip_prefix("game=") {
        Ok(Loaded::Game(load_game(path)?))
    } else if let Some(path) = spec.strip_prefix("seq=") {
        let seq = load_sequence(path)?;
        require_valid_sequence(path, &seq)?;
        Ok(Loaded::Seq(seq))
    } else {
        Err(Failure::input(format!(
            "'{spec}' is not a rule spec (expected game=PATH or seq=PATH)"
        )))
    }
}

fn handle(
    rule: &Loaded,
    domain: Domain,
    default: Option<&DefaultRule>,
) -> Result<RuleHandle, Failure> {
    let h = match (rule, default) {
        (Loaded::Game(cs), Some(f)) => RuleHandle::mwc_default(cs.clone(), f.clone(), domain)?,
        (Loaded::Seq(seq), Some(f)) => RuleHandle::su_default(seq.clone(), f.clone(), domain)?,
        (Loaded::Game(cs), None) => RuleHandle::mwc(cs.clone())?.on(domain)?,
        (Loaded::Seq(seq), None) => RuleHandle::su(seq.clone())?.on(domain)?,
    };
    Ok(h)
}

fn parse_default(raw: Option<&str>) -> Result<Option<DefaultRule>, Failure> {
    raw.map(|s| {
        s.parse::<DefaultRule>()
            .map_err(|e| Failure::input(e.to_string()))
    })
    .transpose()
}

fn parse_domain(raw: &str) -> Result<Domain, Failure> {
    raw.parse()
        .map_err(|e: Error| Failure::input(e.to_string()))
}

fn decision_json(outcome: &Outcome, default: Option<&DefaultRule>) -> Value {
    match outcome.decided_by {
        Decision::Coalition(c) => json!({ "kind": "coalition", "witness": coalition_json(c) }),
        Decision::Step { index, set } => {
            json!({ "kind": "step", "index": index, "set": coalition_json(set) })
        }
        Decision::Default => json!({
            "kind": "default",
            "rule": default.map(|f| f.to_string()),
        }),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    args: &[String],
    sp: bool,
    neutral: bool,
    essential: bool,
    trade: bool,
    weights: Option<u64>,
    budget: u64,
    domain: &str,
    default: Option<&str>,
) -> CliResult {
    let domain = parse_domain(domain)?;
    let default = parse_default(default)?;
    let (mut sp, mut neutral, mut essential, mut trade) = (sp, neutral, essential, trade);
    let mut equiv = false;
    let mut want_weights = weights.is_some();
    let mut specs = Vec::new();
    for arg in args {
        match arg.as_str() {
            "equiv" => equiv = true,
            "sp" => sp = true,
            "neutral" => neutral = true,
            "essential" => essential = true,
            "trade" => trade = true,
            "weights" => want_weights = true,
            spec => specs.push(spec.to_string()),
        }
    }
    let any_single = sp || neutral || essential || trade || want_weights;
    if specs.len() == 2 && !any_single {
        equiv = true;
    }
    if specs.is_empty() {
        return Err(Failure::input("no rule spec given"));
    }
    if equiv && specs.len() != 2 {
        return Err(Failure::input("equivalence needs exactly two rule specs"));
    }
    if !equiv && !any_single {
        return Err(Failure::input(
            "nothing to check: give two rule specs or a check keyword/flag",
        ));
    }
    let w_max = match (want_weights, weights) {
        (true, None) => return Err(Failure::input("the weight search needs --weights=W")),
        (_, w) => w,
    };

    let loaded: Vec<Loaded> = specs
        .iter()
        .map(|s| load_spec(s))
        .collect::<Result<_, _>>()?;
    let mut pass = true;
    let mut out = Map::new();

    if equiv {
        let h1 = handle(&loaded[0], domain, default.as_ref())?;
        let h2 = handle(&loaded[1], domain, default.as_ref())?;
        let verdict = match check_equivalence(&h1, &h2)? {
            None => json!({ "verdict": "equal", "profiles": h1.profile_count() }),
            Some(m) => {
                pass = false;
                json!({
                    "verdict": "counterexample",
                    "profile": m.profile.to_string(),
                    "left": m.left.value.to_string(),
                    "right": m.right.value.to_string(),
                })
            }
        };
        out.insert("equivalence".into(), verdict);
    }

    let mut rules = Vec::new();
    for (spec, rule) in specs.iter().zip(&loaded) {
        let mut checks = Map::new();
        checks.insert("spec".into(), json!(spec));
        if sp {
            let h = handle(rule, domain, default.as_ref())?;
            let v = match check_strategy_proofness(&h)? {
                None => json!({ "verdict": "pass" }),
                Some(v) => {
                    pass = false;
                    json!({
                        "verdict": "counterexample",
                        "profile": v.profile.to_string(),
                        "voter": v.voter,
                        "misreport": v.misreport.to_string(),
                        "truthful": v.truthful.to_string(),
                        "manipulated": v.manipulated.to_string(),
                    })
                }
            };
            checks.insert("strategy_proofness".into(), v);
        }
        if neutral {
            let h = handle(rule, domain, default.as_ref())?;
            let v = match check_neutrality(&h)? {
                None => json!({ "verdict": "pass" }),
                Some(v) => {
                    pass = false;
                    json!({
                        "verdict": "counterexample",
                        "profile": v.profile.to_string(),
                        "outcome": v.outcome.to_string(),
                        "swapped_outcome": v.swapped_outcome.to_string(),
                    })
                }
            };
            checks.insert("neutrality".into(), v);
        }
        if essential {
            let Loaded::Seq(seq) = rule else {
                return Err(Failure::input(format!(
                    "{spec}: essentiality applies to sequences"
                )));
            };
            let r = check_essential(seq)?;
            pass &= r.is_essential();
            checks.insert(
                "essential".into(),
                json!({
                    "verdict": if r.is_essential() { "essential" } else { "not_essential" },
                    "superfluous": r.superfluous(),
                    "distinguishing": r.distinguishing.iter().map(|(k, p)| json!({
                        "k": k,
                        "profile": p.map(|p| p.to_string()),
                    })).collect::<Vec<_>>(),
                    "backstop_reachable": r.backstop_reachable,
                }),
            );
        }
        if trade {
            let Loaded::Game(cs) = rule else {
                return Err(Failure::input(format!(
                    "{spec}: trade search applies to games"
                )));
            };
            let all = all_2trade_violations(cs)?;
            let v = match all.first() {
                None => json!({ "verdict": "none" }),
                Some(cert) => {
                    pass = false;
                    let (s1, s2) = cert.swapped();
                    json!({
                        "verdict": "certificate",
                        "c1": coalition_json(cert.c1),
                        "c2": coalition_json(cert.c2),
                        "i": cert.i,
                        "j": cert.j,
                        "swapped": [coalition_json(s1), coalition_json(s2)],
                        "total": all.len(),
                        "all": all.iter().map(|c| json!({
                            "c1": coalition_json(c.c1),
                            "c2": coalition_json(c.c2),
                            "i": c.i,
                            "j": c.j,
                        })).collect::<Vec<_>>(),
                    })
                }
            };
            checks.insert("trade".into(), v);
        }
        if let Some(w_max) = w_max {
            let Loaded::Game(cs) = rule else {
                return Err(Failure::input(format!(
                    "{spec}: weight search applies to games"
                )));
            };
            let v = match find_integer_weights(cs, w_max, budget)? {
                WeightSearch::Found(cert) => json!({
                    "verdict": "found",
                    "weights": cert.weights,
                    "threshold": cert.threshold,
                }),
                WeightSearch::NoneWithinBound { classes, tried } => {
                    pass = false;
                    json!({
                        "verdict": "none_within_bound",
                        "w_max": w_max,
                        "classes": classes,
                        "tried": tried,
                    })
                }
            };
            checks.insert("weights".into(), v);
        }
        if checks.len() > 1 {
            rules.push(Value::Object(checks));
        }
    }
    if !rules.is_empty() {
        out.insert("rules".into(), Value::Array(rules));
    }
    out.insert("domain".into(), json!(domain.to_string()));
    out.insert("pass".into(), json!(pass));
    Ok((pretty(&out), pass))
}

fn cmd_eval(rule: &str, profile: &str, domain: Option<&str>, default: Option<&str>) -> CliResult {
    let default = parse_default(default)?;
    let domain = match domain {
        Some(d) => parse_domain(d)?,
        None if default.is_some() => Domain::Ternary,
        None => Domain::Strict,
    };
    let profile = match domain {
        Domain::Strict => AnyProfile::Strict(
            profile
                .parse::<StrictProfile>()
                .map_err(|e| Failure::input(e.to_string()))?,
        ),
        Domain::Ternary => AnyProfile::Ternary(
            profile
                .parse::<TernaryProfile>()
                .map_err(|e| Failure::input(e.to_string()))?,
        ),
    };
    let loaded = load_spec(rule)?;
    let h = handle(&loaded, domain, default.as_ref())?;
    let outcome = h.evaluate(&profile)?;
    Ok((
        pretty(&json!({
            "rule": rule,
            "profile": profile.to_string(),
            "domain": domain.to_string(),
            "outcome": outcome.value.to_string(),
            "decided_by": decision_json(&outcome, default.as_ref()),
        })),
        true,
    ))
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Validate { input } => cmd_validate(&input),
        Command::ToSequence {
            game,
            policy,
            essential,
            enumerate,
            max,
        } => cmd_to_sequence(&game, &policy, essential, enumerate, max),
        Command::ToCoalitions {
            sequence,
            path_limit,
        } => cmd_to_coalitions(&sequence, path_limit),
        Command::Check {
            args,
            sp,
            neutral,
            essential,
            trade,
            weights,
            budget,
            domain,
            default_rule,
        } => cmd_check(
            &args,
            sp,
            neutral,
            essential,
            trade,
            weights,
            budget,
            &domain,
            default_rule.as_deref(),
        ),
        Command::Eval {
            rule,
            profile,
            domain,
            default_rule,
        } => cmd_eval(&rule, &profile, domain.as_deref(), default_rule.as_deref()),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok((text, pass)) => {
            emit(&text);
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Err(f) => {
            if let Some(report) = f.report {
                emit(&pretty(&report));
            }
            eprintln!("binvote: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
