//! Report structures and their JSON / table renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::code::QuantumCode;
use crate::erasure::{
    classify_paulis, erasure_space, minimum_distance, pure_distance, pure_erasure_space,
    Classification,
};
use crate::error::Result;
use crate::pauli::{PauliLetter, PauliOperator};
use crate::subspace::PauliCoordinates;
use crate::union::{TheoremCheck, UnionBuildReport};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightRow {
    pub w: usize,
    pub members: usize,
    pub non_members: usize,
    pub violators: Vec<String>,
}

impl WeightRow {
    fn from_classification(c: &Classification) -> Vec<WeightRow> {
        c.per_weight
            .iter()
            .map(|class| WeightRow {
                w: class.weight,
                members: class.members,
                non_members: class.non_members,
                violators: class
                    .violators
                    .iter()
                    .map(|v| v.pauli.to_string())
                    .collect(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub code: String,
    pub pure: bool,
    pub per_weight: Vec<WeightRow>,
    pub dim: usize,
    pub distance: usize,
}

/// Which single-qubit Paulis on each position are members.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SingleQubitRow {
    pub qubit: usize,
    #[serde(rename = "X")]
    pub x: bool,
    #[serde(rename = "Y")]
    pub y: bool,
    #[serde(rename = "Z")]
    pub z: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub code: String,
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub pure: bool,
    pub dim: usize,
    pub distance: usize,
    pub degenerate: bool,
    pub erasure_dim: usize,
    pub pure_dim: usize,
    pub pure_distance: usize,
    pub single_qubit: Vec<SingleQubitRow>,
    pub per_weight: Vec<WeightRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub code: String,
    pub distance: usize,
    pub degenerate: bool,
    pub pure_distance: usize,
    pub pure_degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub dim: usize,
    pub dim_direct: usize,
    pub matches_direct: bool,
    pub residual: f64,
}

impl From<TheoremCheck> for TheoremReport {
    fn from(t: TheoremCheck) -> Self {
        TheoremReport {
            dim: t.dim_formula,
            dim_direct: t.dim_direct,
            matches_direct: t.matches_direct,
            residual: t.residual,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnionReport {
    pub components: Vec<String>,
    #[serde(rename = "K")]
    pub k: usize,
    pub n: usize,
    pub max_cross_overlap: f64,
    pub distance: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem4: Option<TheoremReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem5: Option<TheoremReport>,
}

impl UnionReport {
    pub fn new(build: &UnionBuildReport, distance: usize) -> Self {
        UnionReport {
            components: build.component_labels.clone(),
            k: build.k,
            n: build.n,
            max_cross_overlap: build.max_cross_overlap,
            distance,
            theorem4: None,
            theorem5: None,
        }
    }
}

pub fn classification_report(
    code: &QuantumCode,
    max_weight: usize,
    pure: bool,
) -> Result<ClassificationReport> {
    let c = classify_paulis(code, max_weight, pure)?;
    let (dim, distance) = if pure {
        (pure_erasure_space(code).dim(), pure_distance(code).value)
    } else {
        (erasure_space(code).dim(), minimum_distance(code).value)
    };
    Ok(ClassificationReport {
        code: code.label().to_string(),
        pure,
        per_weight: WeightRow::from_classification(&c),
        dim,
        distance,
    })
}

pub fn analysis_report(
    code: &QuantumCode,
    max_weight: usize,
    pure: bool,
) -> Result<AnalysisReport> {
    let c = classify_paulis(code, max_weight, pure)?;
    let erasure = erasure_space(code);
    let pure_space = pure_erasure_space(code);
    let d = minimum_distance(code);
    let pd = pure_distance(code);
    let coords = PauliCoordinates::new(code.n());
    let space = if pure { &pure_space } else { &erasure };
    let single_qubit = (0..code.n())
        .map(|q| {
            let member = |l| space.contains_pauli(&coords, &PauliOperator::single(code.n(), q, l));
            SingleQubitRow {
                qubit: q,
                x: member(PauliLetter::X),
                y: member(PauliLetter::Y),
                z: member(PauliLetter::Z),
            }
        })
        .collect();
    let (dim, distance, degenerate) = if pure {
        (pure_space.dim(), pd.value, pd.degenerate)
    } else {
        (erasure.dim(), d.value, d.degenerate)
    };
    Ok(AnalysisReport {
        code: code.label().to_string(),
        n: code.n(),
        k: code.k(),
        pure,
        dim,
        distance,
        degenerate,
        erasure_dim: erasure.dim(),
        pure_dim: pure_space.dim(),
        pure_distance: pd.value,
        single_qubit,
        per_weight: WeightRow::from_classification(&c),
    })
}

pub fn distance_report(code: &QuantumCode) -> DistanceReport {
    let d = minimum_distance(code);
    let pd = pure_distance(code);
    DistanceReport {
        code: code.label().to_string(),
        distance: d.value,
        degenerate: d.degenerate,
        pure_distance: pd.value,
        pure_degenerate: pd.degenerate,
    }
}

pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

/// Smallest rotation of `s`, used to group cyclic shifts.
fn rotation_key(s: &str) -> String {
    let n = s.len();
    (0..n.max(1))
        .map(|k| format!("{}{}", &s[k..], &s[..k]))
        .min()
        .unwrap_or_default()
}

/// Violators grouped by cyclic orbit, one group per line, columns aligned.
pub fn violator_groups(violators: &[String]) -> Vec<Vec<String>> {
    let mut groups: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for v in violators {
        groups.entry(rotation_key(v)).or_default().push(v.clone());
    }
    groups.into_values().collect()
}

fn weight_table(out: &mut String, rows: &[WeightRow]) {
    let _ = writeln!(out, "{:>3}  {:>8}  {:>11}", "w", "members", "non-members");
    for r in rows {
        let _ = writeln!(out, "{:>3}  {:>8}  {:>11}", r.w, r.members, r.non_members);
        for group in violator_groups(&r.violators) {
            let _ = writeln!(out, "     {}", group.join("  "));
        }
    }
}

pub fn analysis_table(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let kind = if r.pure {
        "pure erasure space"
    } else {
        "erasure space"
    };
    let _ = writeln!(out, "code {}  ((n={}, K={}))", r.code, r.n, r.k);
    let _ = writeln!(
        out,
        "{kind}: dim {}  distance {}{}",
        r.dim,
        r.distance,
        if r.degenerate { " (degenerate)" } else { "" }
    );
    let _ = writeln!(
        out,
        "erasure dim {}  pure dim {}  pure distance {}",
        r.erasure_dim, r.pure_dim, r.pure_distance
    );
    let _ = writeln!(out, "single-qubit members:");
    for s in &r.single_qubit {
        let mark = |b: bool| if b { "+" } else { "-" };
        let _ = writeln!(
            out,
            "  q{}  X{} Y{} Z{}",
            s.qubit,
            mark(s.x),
            mark(s.y),
            mark(s.z)
        );
    }
    weight_table(&mut out, &r.per_weight);
    out
}

pub fn classification_table(r: &ClassificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "code {}  pure {}  dim {}  distance {}",
        r.code, r.pure, r.dim, r.distance
    );
    weight_table(&mut out, &r.per_weight);
    out
}

pub fn distance_table(r: &DistanceReport) -> String {
    format!(
        "code {}\ndistance {}{}\npure distance {}{}\n",
        r.code,
        r.distance,
        if r.degenerate { " (degenerate)" } else { "" },
        r.pure_distance,
        if r.pure_degenerate {
            " (degenerate)"
        } else {
            ""
        }
    )
}

pub fn union_table(r: &UnionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "union of {}", r.components.join(", "));
    let _ = writeln!(
        out,
        "n {}  K {}  distance {}  max cross overlap {:.3e}",
        r.n, r.k, r.distance, r.max_cross_overlap
    );
    for (name, t) in [("theorem4", &r.theorem4), ("theorem5", &r.theorem5)] {
        if let Some(t) = t {
            let _ = writeln!(
                out,
                "{name}: dim {} (direct {})  residual {:.3e}  matches {}",
                t.dim, t.dim_direct, t.residual, t.matches_direct
            );
        }
    }
    out
}
