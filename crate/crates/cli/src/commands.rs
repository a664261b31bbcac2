use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;
use unitgroup_core::analysis::{
    bounded_unit_search_zg, check_z2_witness, classify_hyperbolic, classify_hypercentral_finite,
    classify_hypercentral_structured, construct_z2_witness, enumerate_v_kg, unit_group_structure,
    verify_dedekind_conditions, About, AnalysisError, GroupDescriptor, HyperbolicRule,
    HypercentralAnswer, HypercentralVerdict, DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_INDEPENDENCE_BOUND, DEFAULT_SEARCH_BUDGET,
};
use unitgroup_core::coeff::{CoeffError, FieldDescriptor, GaloisField};
use unitgroup_core::groups::{upper_central_series, FiniteGroup, GroupError};

use crate::report::{ErrorReport, Report, Timings, SCHEMA_VERSION};
use crate::spec::{parse_field_spec, parse_group_spec, GroupSpec, SpecError};

#[derive(Debug, Parser)]
#[command(
    name = "unitgroup",
    version,
    about = "Unit groups of group rings: hypercentrality and hyperbolicity verdicts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Leave wall-clock timings out of the report.
    #[arg(long, global = true)]
    pub no_timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AboutArg {
    #[value(name = "V")]
    V,
    #[value(name = "U")]
    U,
}

#[derive(Debug, Args)]
pub struct GroupArg {
    /// Group spec, e.g. `K8xE2^2`, `D4`, `@group.json`, `infinite:coprime-torsion`.
    #[arg(long)]
    pub group: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Is the hypercenter of U(ZG) trivial-by-central? (finite or structured G)
    ClassifyHypercentral {
        #[command(flatten)]
        group: GroupArg,
    },
    /// Is V(KG) or U(KG) hyperbolic?
    ClassifyHyperbolic {
        /// Field spec: GF(p), GF(p^n), GF(q), GF(p)(t), algcl(p).
        #[arg(long)]
        field: String,
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_enum)]
        about: AboutArg,
        /// Include the Z^2 witness in the report when one is attached.
        #[arg(long)]
        witness: bool,
        #[arg(long, default_value_t = DEFAULT_INDEPENDENCE_BOUND)]
        independence_bound: u32,
    },
    /// Enumerate V(KG) for a finite field K and a finite group G.
    EnumerateUnits {
        #[arg(long)]
        field: String,
        #[command(flatten)]
        group: GroupArg,
        /// Maximum number of augmentation-one candidates.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
    },
    /// Search units of ZG with coefficients in [-B, B].
    UnitSearch {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value_t = 1)]
        bound: u32,
        /// Maximum number of coefficient vectors.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Build and verify commuting units u1, u2 in GF(p)(t)G generating Z^2.
    WitnessZ2 {
        /// Must be GF(p)(t).
        #[arg(long)]
        field: String,
        #[command(flatten)]
        group: GroupArg,
        /// Torsion element g0 (label); defaults to the first element of order prime to p.
        #[arg(long)]
        element: Option<String>,
        #[arg(long, default_value_t = DEFAULT_INDEPENDENCE_BOUND)]
        independence_bound: u32,
    },
    /// Upper central series of a finite group.
    CentralSeries {
        #[command(flatten)]
        group: GroupArg,
    },
    /// The four necessary conditions on the torsion of G.
    VerifyDedekind {
        #[command(flatten)]
        group: GroupArg,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{0}")]
    Usage(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

impl From<CoeffError> for CliError {
    fn from(e: CoeffError) -> Self {
        CliError::Analysis(e.into())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Spec(_) | CliError::Usage(_) => 1,
            CliError::Analysis(e) if is_budget(e) => 2,
            CliError::Precondition(_) | CliError::Analysis(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self.exit_code() {
            1 => "usage",
            2 => "budget_exceeded",
            _ => "precondition",
        }
    }
}

fn is_budget(e: &AnalysisError) -> bool {
    matches!(
        e,
        AnalysisError::BudgetExceeded { .. }
            | AnalysisError::Group(GroupError::TooLarge(_))
            | AnalysisError::Coeff(CoeffError::BudgetExceeded { .. })
    )
}

impl Command {
    pub fn verb(&self) -> &'static str {
        match self {
            Command::ClassifyHypercentral { .. } => "classify-hypercentral",
            Command::ClassifyHyperbolic { .. } => "classify-hyperbolic",
            Command::EnumerateUnits { .. } => "enumerate-units",
            Command::UnitSearch { .. } => "unit-search",
            Command::WitnessZ2 { .. } => "witness-z2",
            Command::CentralSeries { .. } => "central-series",
            Command::VerifyDedekind { .. } => "verify-dedekind",
        }
    }

    /// The inputs as given on the command line.
    pub fn inputs(&self) -> Value {
        match self {
            Command::ClassifyHypercentral { group }
            | Command::CentralSeries { group }
            | Command::VerifyDedekind { group } => json!({ "group": group.group }),
            Command::ClassifyHyperbolic {
                field,
                group,
                about,
                witness,
                independence_bound,
            } => json!({
                "field": field,
                "group": group.group,
                "about": format!("{about:?}"),
                "witness": witness,
                "independence_bound": independence_bound,
            }),
            Command::EnumerateUnits {
                field,
                group,
                budget,
            } => {
                json!({ "field": field, "group": group.group, "budget": budget })
            }
            Command::UnitSearch {
                group,
                bound,
                budget,
            } => {
                json!({ "group": group.group, "bound": bound, "budget": budget })
            }
            Command::WitnessZ2 {
                field,
                group,
                element,
                independence_bound,
            } => json!({
                "field": field,
                "group": group.group,
                "element": element,
                "independence_bound": independence_bound,
            }),
        }
    }
}

/// A computed answer before it is wrapped into a [`Report`].
#[derive(Debug)]
pub struct Outcome {
    pub answer: Value,
    pub rule: Value,
    pub evidence: Value,
    pub witness: Option<Value>,
    pub summary: String,
}

fn finite_only(spec: GroupSpec) -> Result<FiniteGroup, CliError> {
    match spec {
        GroupSpec::Finite(g) => Ok(g),
        GroupSpec::Structured(s) if s.free_rank() == 0 => Ok(s.torsion().clone()),
        _ => Err(CliError::Precondition(
            "this command needs a finite group".into(),
        )),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn hypercentral_outcome(name: &str, v: &HypercentralVerdict) -> Outcome {
    let (answer, rule) = match &v.answer {
        HypercentralAnswer::Yes { case } => (format!("Yes({case})"), format!("case ({case})")),
        HypercentralAnswer::No { reason } => ("No".to_string(), reason.clone()),
        HypercentralAnswer::Indeterminate { reason } => {
            ("Indeterminate".to_string(), reason.clone())
        }
    };
    Outcome {
        answer: json!(answer),
        rule: json!(rule),
        evidence: to_value(&v.evidence),
        witness: None,
        summary: format!("{name}: {}", v.answer),
    }
}

pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::ClassifyHypercentral { group } => {
            let v = match parse_group_spec(&group.group)? {
                GroupSpec::Finite(g) => classify_hypercentral_finite(&g),
                GroupSpec::Structured(s) => classify_hypercentral_structured(&s),
                GroupSpec::Infinite { .. } => {
                    return Err(CliError::Precondition(
                        "an infinite group needs a structured description (@file.json)".into(),
                    ))
                }
            };
            Ok(hypercentral_outcome(&group.group, &v))
        }
        Command::ClassifyHyperbolic {
            field,
            group,
            about,
            witness,
            independence_bound,
        } => {
            let k = parse_field_spec(field)?;
            let p = k.characteristic();
            let descriptor = match parse_group_spec(&group.group)? {
                GroupSpec::Finite(g) => GroupDescriptor::Finite(Arc::new(g)),
                GroupSpec::Structured(s) if s.free_rank() == 0 => {
                    GroupDescriptor::Finite(Arc::new(s.torsion().clone()))
                }
                GroupSpec::Structured(s) => {
                    let t = s.torsion();
                    GroupDescriptor::Infinite {
                        has_torsion: t.order() > 1,
                        has_p_prime_torsion: t
                            .elements()
                            .skip(1)
                            .any(|x| !(t.element_order(x) as u64).is_multiple_of(p)),
                    }
                }
                GroupSpec::Infinite {
                    has_torsion,
                    has_coprime_torsion,
                } => GroupDescriptor::Infinite {
                    has_torsion,
                    has_p_prime_torsion: has_coprime_torsion,
                },
            };
            let about = match about {
                AboutArg::V => About::V,
                AboutArg::U => About::U,
            };
            let v = classify_hyperbolic(&k, &descriptor, about, *independence_bound)?;
            let rule = if v.rule == HyperbolicRule::None {
                Value::Null
            } else {
                json!(v.rule.to_string())
            };
            let mut summary = format!(
                "{about:?}({k}{}): {:?} by {}",
                group.group, v.answer, v.rule
            );
            if v.witness.is_some() {
                summary.push_str(if *witness {
                    ", Z^2 witness attached"
                } else {
                    ", Z^2 witness found"
                });
            }
            Ok(Outcome {
                answer: to_value(&v.answer),
                rule,
                evidence: json!({
                    "about": v.about,
                    "rule_statement": v.rule_statement,
                    "constraints": v.constraints,
                    "field_traits": k.traits(),
                }),
                witness: v.witness.as_ref().filter(|_| *witness).map(to_value),
                summary,
            })
        }
        Command::EnumerateUnits {
            field,
            group,
            budget,
        } => {
            let FieldDescriptor::Finite { p, n } = parse_field_spec(field)? else {
                return Err(CliError::Precondition(
                    "unit enumeration needs a finite field".into(),
                ));
            };
            let k = GaloisField::new(p, n)?;
            let g = Arc::new(finite_only(parse_group_spec(&group.group)?)?);
            let v = enumerate_v_kg(&k, g, *budget)?;
            let s = unit_group_structure(&v);
            Ok(Outcome {
                answer: to_value(&s),
                rule: json!("exhaustive enumeration of augmentation-one elements, filtered by exact inversion"),
                evidence: json!({
                    "candidates": v.candidates,
                    "units": v.carrier.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                }),
                witness: None,
                summary: format!("V({field}{}) has order {} ({:?})", group.group, s.order, s.nilpotency),
            })
        }
        Command::UnitSearch {
            group,
            bound,
            budget,
        } => {
            let g = Arc::new(finite_only(parse_group_spec(&group.group)?)?);
            let n = g.order();
            let units = bounded_unit_search_zg(g, *bound, *budget)?;
            let nontrivial: Vec<String> = units
                .iter()
                .filter(|x| !x.is_trivial_unit())
                .map(|x| x.to_string())
                .collect();
            Ok(Outcome {
                answer: json!({ "units": units.len(), "trivial_only": nontrivial.is_empty() }),
                rule: json!(
                    "exhaustive search over coefficient vectors in [-B, B] with augmentation 1"
                ),
                evidence: json!({
                    "candidates": (2 * u128::from(*bound) + 1).pow(n as u32).to_string(),
                    "units": units.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "nontrivial": nontrivial,
                }),
                witness: None,
                summary: format!(
                    "Z{}: {} units with coefficients in [-{bound}, {bound}], {} nontrivial",
                    group.group,
                    units.len(),
                    nontrivial.len()
                ),
            })
        }
        Command::WitnessZ2 {
            field,
            group,
            element,
            independence_bound,
        } => {
            let FieldDescriptor::FunctionField { p } = parse_field_spec(field)? else {
                return Err(CliError::Precondition(
                    "the witness lives over GF(p)(t)".into(),
                ));
            };
            let g = Arc::new(finite_only(parse_group_spec(&group.group)?)?);
            let g0 = match element {
                Some(label) => g.index_of(label).ok_or_else(|| {
                    CliError::Usage(format!("unknown element {label:?} of {}", group.group))
                })?,
                None => g
                    .elements()
                    .skip(1)
                    .find(|&x| !(g.element_order(x) as u64).is_multiple_of(p))
                    .ok_or_else(|| {
                        CliError::Precondition(format!(
                            "no nontrivial element of order prime to {p}"
                        ))
                    })?,
            };
            let mut w = construct_z2_witness(p, g, g0)?;
            let checks = check_z2_witness(&w, *independence_bound)?;
            let passed = checks.passed();
            w.checks = Some(checks);
            Ok(Outcome {
                answer: json!({ "verified": passed }),
                rule: json!("u1 = e + t(1 - e), u2 = e + (1 + t)(1 - e), e the idempotent of <g0>"),
                evidence: to_value(&w.checks),
                witness: Some(to_value(&w)),
                summary: format!(
                    "Z^2 witness in {field}{}: {}",
                    group.group,
                    if passed { "verified" } else { "FAILED" }
                ),
            })
        }
        Command::CentralSeries { group } => {
            let g = finite_only(parse_group_spec(&group.group)?)?;
            let series = upper_central_series(&g);
            Ok(Outcome {
                answer: to_value(&series.nilpotency),
                rule: json!("upper central series via centers of successive quotients"),
                evidence: json!({
                    "orders": series.orders(),
                    "terms": series.terms.iter().map(|t| t.labels()).collect::<Vec<_>>(),
                }),
                witness: None,
                summary: format!(
                    "{}: orders {:?}, {:?}",
                    group.group,
                    series.orders(),
                    series.nilpotency
                ),
            })
        }
        Command::VerifyDedekind { group } => {
            let g = finite_only(parse_group_spec(&group.group)?)?;
            let report = verify_dedekind_conditions(&g);
            let summary = match report.first_failure() {
                Some(f) => format!("{}: {f}", group.group),
                None => format!("{}: all four conditions hold", group.group),
            };
            Ok(Outcome {
                answer: json!({ "all_hold": report.all_hold() }),
                rule: json!("brute force over all pairs of elements"),
                evidence: to_value(&report),
                witness: None,
                summary,
            })
        }
    }
}

/// Runs a parsed invocation: the report, a one-line summary and the exit
/// code.
pub fn run(cli: &Cli) -> (Report, String, i32) {
    let start = Instant::now();
    let result = execute(&cli.command);
    let timings = (!cli.no_timings).then(|| Timings {
        total_ms: start.elapsed().as_secs_f64() * 1e3,
    });
    let mut report = Report {
        schema_version: SCHEMA_VERSION,
        question: cli.command.verb().to_string(),
        inputs: cli.command.inputs(),
        answer: Value::Null,
        rule: Value::Null,
        evidence: Value::Null,
        witness: None,
        error: None,
        timings,
    };
    match result {
        Ok(o) => {
            report.answer = o.answer;
            report.rule = o.rule;
            report.evidence = o.evidence;
            report.witness = o.witness;
            (report, o.summary, 0)
        }
        Err(e) => {
            let code = e.exit_code();
            report.error = Some(ErrorReport {
                kind: e.kind(),
                message: e.to_string(),
            });
            (report, format!("error: {e}"), code)
        }
    }
}
