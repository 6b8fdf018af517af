//! Verb dispatch for the command-line front end.
//!
//! Every verb evaluates to a [`Record`]: canonical text plus a flat
//! structured form for machine consumption.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bundle::{BundleObject, Indecomposable};
use crate::error::Error;
use crate::expr::{parse_bundle, ExprError};
use crate::kring::{closed_form_s, krull_dim_class, summand_closure, tannakian_label};
use crate::oracle::{phi_transport, product_tensor};

pub const DEFAULT_MAX_POWER: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Normalize,
    Tensor,
    Dual,
    Rank,
    Det,
    Hom,
    Gamma,
    Jh,
    Classify,
    Summands,
    ClosedForm,
    Group,
    RingDim,
    OracleCheck,
}

impl Verb {
    pub const ALL: [Verb; 14] = [
        Verb::Normalize,
        Verb::Tensor,
        Verb::Dual,
        Verb::Rank,
        Verb::Det,
        Verb::Hom,
        Verb::Gamma,
        Verb::Jh,
        Verb::Classify,
        Verb::Summands,
        Verb::ClosedForm,
        Verb::Group,
        Verb::RingDim,
        Verb::OracleCheck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Verb::Normalize => "normalize",
            Verb::Tensor => "tensor",
            Verb::Dual => "dual",
            Verb::Rank => "rank",
            Verb::Det => "det",
            Verb::Hom => "hom",
            Verb::Gamma => "gamma",
            Verb::Jh => "jh",
            Verb::Classify => "classify",
            Verb::Summands => "summands",
            Verb::ClosedForm => "closedform",
            Verb::Group => "group",
            Verb::RingDim => "ringdim",
            Verb::OracleCheck => "oracle-check",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Verb::Tensor | Verb::Hom | Verb::OracleCheck => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Verb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Verb {
    type Err = CommandError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Verb::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| CommandError::Usage(format!("unknown verb '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub verb: Verb,
    pub args: Vec<String>,
    pub max_power: u32,
    pub modulus: Option<u64>,
}

impl Command {
    pub fn new(verb: Verb, args: Vec<String>) -> Self {
        Command {
            verb,
            args,
            max_power: DEFAULT_MAX_POWER,
            modulus: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("argument {index}: {source}")]
    Parse {
        index: usize,
        #[source]
        source: ExprError,
    },
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("oracle disagreement: {0}")]
    CheckFailed(String),
}

impl CommandError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::CheckFailed(_) => 1,
            CommandError::Usage(_) => 2,
            CommandError::Parse { .. } => 3,
            CommandError::Domain(_) => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummandRecord {
    pub rank: u64,
    pub twist: String,
    pub multiplicity: u64,
}

/// Flat structured output of one command.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub verb: String,
    /// Inputs in canonical form.
    pub inputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summands: Option<Vec<SummandRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    /// Human-readable output.
    pub text: String,
}

impl Record {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

fn summand_records(a: &BundleObject) -> Vec<SummandRecord> {
    a.summands()
        .map(|(x, m)| SummandRecord {
            rank: x.rank(),
            twist: x.twist().to_string(),
            multiplicity: m,
        })
        .collect()
}

fn indecomposable(a: &BundleObject) -> Result<&Indecomposable, CommandError> {
    a.as_indecomposable()
        .ok_or_else(|| Error::NotIndecomposable(a.to_string()).into())
}

/// Parses the arguments and dispatches the verb.
pub fn eval(cmd: &Command) -> Result<Record, CommandError> {
    if cmd.args.len() != cmd.verb.arity() {
        return Err(CommandError::Usage(format!(
            "'{}' takes {} expression argument(s), got {}",
            cmd.verb,
            cmd.verb.arity(),
            cmd.args.len()
        )));
    }
    let objs = cmd
        .args
        .iter()
        .enumerate()
        .map(|(index, s)| parse_bundle(s).map_err(|source| CommandError::Parse { index, source }))
        .collect::<Result<Vec<_>, _>>()?;
    let inputs = objs.iter().map(BundleObject::to_string).collect();

    let bundle = |b: BundleObject| (Some(summand_records(&b)), None, b.to_string());
    let scalar = |v: Value, text: String| (None, Some(v), text);

    let a = &objs[0];
    let (summands, result, text) = match cmd.verb {
        Verb::Normalize => bundle(a.clone()),
        Verb::Tensor => bundle(a.tensor(&objs[1])),
        Verb::Dual => bundle(a.dual()),
        Verb::Jh => bundle(a.jh_factors()),
        Verb::Rank => {
            let r = a.rank();
            scalar(json!(r), r.to_string())
        }
        Verb::Det => {
            let d = a.det().to_string();
            scalar(json!(d), d)
        }
        Verb::Hom => {
            let h = a.hom_dim(&objs[1]);
            scalar(json!(h), h.to_string())
        }
        Verb::Gamma => {
            let g = a.gamma_dim();
            scalar(json!(g), g.to_string())
        }
        Verb::Classify => {
            let (u, f, s) = (a.is_unipotent(), a.is_finite(), a.is_semifinite());
            scalar(
                json!({ "unipotent": u, "finite": f, "semifinite": s }),
                format!("unipotent: {u}\nfinite: {f}\nsemifinite: {s}"),
            )
        }
        Verb::Summands => {
            let c = summand_closure(a, cmd.max_power);
            let set: BundleObject = c.classes.iter().cloned().collect();
            let listing: Vec<String> = c.classes.iter().map(ToString::to_string).collect();
            let text = format!(
                "{{{}}}\nstabilized: {} (powers expanded: {})",
                listing.join(", "),
                c.stabilized,
                c.powers_used
            );
            (
                Some(summand_records(&set)),
                Some(json!({ "stabilized": c.stabilized, "powers_used": c.powers_used })),
                text,
            )
        }
        Verb::ClosedForm => {
            let cf = closed_form_s(indecomposable(a)?).to_string();
            scalar(json!(cf), cf)
        }
        Verb::Group => {
            let label = tannakian_label(indecomposable(a)?);
            scalar(
                serde_json::to_value(label).expect("label serializes"),
                label.to_string(),
            )
        }
        Verb::RingDim => {
            let d = krull_dim_class(a)?;
            scalar(json!(d), d.to_string())
        }
        Verb::OracleCheck => {
            let m = cmd
                .modulus
                .ok_or_else(|| CommandError::Usage("oracle-check requires --modulus".into()))?;
            let b = &objs[1];
            let lhs = phi_transport(&a.tensor(b), m)?;
            let rhs = product_tensor(&phi_transport(a, m)?, &phi_transport(b, m)?, m)?;
            if lhs != rhs {
                return Err(CommandError::CheckFailed(format!("{lhs} != {rhs}")));
            }
            let text = format!("phi(A*B) = {lhs}\nphi(A)*phi(B) = {rhs}\nagree: true");
            scalar(
                json!({
                    "modulus": m,
                    "transported": lhs.components().map(|((c, b), k)| json!({"character": c, "block": b, "multiplicity": k})).collect::<Vec<_>>(),
                    "agree": true,
                }),
                text,
            )
        }
    };
    Ok(Record {
        verb: cmd.verb.name().to_string(),
        inputs,
        summands,
        result,
        text,
    })
}
