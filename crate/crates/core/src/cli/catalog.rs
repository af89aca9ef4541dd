//! Built-in families with their expected invariants.

use serde::Deserialize;
use serde_json::Value;

use super::config::{build_config, AnalysisConfig, RawConfig};
use super::report::{analyze, AnalyzeOptions};
use super::CliError;
use crate::albanese::canonical_kernel;
use crate::groups::{abelian_invariants_of, center, commutator_subgroup, Subgroup};

const SOURCES: [&str; 7] = [
    include_str!("../../catalog/k2_2_dihedral.json"),
    include_str!("../../catalog/k2_2_quaternion.json"),
    include_str!("../../catalog/k2_4.json"),
    include_str!("../../catalog/k2_6_cyclic.json"),
    include_str!("../../catalog/k2_6_dihedral.json"),
    include_str!("../../catalog/k2_7.json"),
    include_str!("../../catalog/q3_dihedral.json"),
];

/// How the canonical kernel sits in the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelRole {
    Trivial,
    WholeG0,
    CenterG,
    CenterG0,
    CommutatorG0,
    /// The only subgroup of `G⁰` of order 2.
    UniqueOrderTwo,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub group_order: usize,
    pub g0_order: usize,
    pub genus_c: u64,
    pub q: usize,
    #[serde(default)]
    pub minimality: Option<String>,
    pub kernel: KernelRole,
    pub kernel_order: usize,
    #[serde(default)]
    pub kernel_group_invariants: Option<Vec<u64>>,
    pub albanese_degree: usize,
    pub kernel_invariants: Vec<u64>,
    pub polarization: Vec<u64>,
    pub o2_count: usize,
    pub ksq: i64,
    #[serde(default)]
    pub dihedral_invariants: Option<[i64; 3]>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub family: String,
    pub description: String,
    pub config: RawConfig,
    pub expected: Expected,
}

impl CatalogEntry {
    pub fn analysis_config(&self) -> Result<AnalysisConfig, CliError> {
        build_config(self.config.clone())
    }
}

#[derive(Clone, Debug)]
pub struct CatalogOutcome {
    pub family: String,
    pub description: String,
    pub report: Value,
    pub deviations: Vec<String>,
}

/// All built-in entries, sorted by family name.
pub fn entries() -> Vec<CatalogEntry> {
    let mut all: Vec<CatalogEntry> = SOURCES
        .iter()
        .map(|s| serde_json::from_str(s).expect("built-in catalog entry parses"))
        .collect();
    all.sort_by(|a, b| a.family.cmp(&b.family));
    all
}

pub fn family_names() -> Vec<String> {
    entries().into_iter().map(|e| e.family).collect()
}

pub fn entry(family: &str) -> Result<CatalogEntry, CliError> {
    entries()
        .into_iter()
        .find(|e| e.family == family)
        .ok_or_else(|| CliError::FamilyUnknown(family.to_string()))
}

fn kernel_role_holds(role: KernelRole, config: &AnalysisConfig, k: &Subgroup) -> bool {
    let action = &config.action;
    let g0 = action.g0_group();
    match role {
        KernelRole::Trivial => k.order() == 1,
        KernelRole::WholeG0 => k.order() == g0.order(),
        KernelRole::CenterG => action.lift(k) == center(action.group()),
        KernelRole::CenterG0 => *k == center(g0),
        KernelRole::CommutatorG0 => *k == commutator_subgroup(g0, &Subgroup::whole(g0)),
        KernelRole::UniqueOrderTwo => {
            let involutions: Vec<_> = g0
                .elements()
                .filter(|&x| g0.element_order(x) == 2)
                .collect();
            involutions.len() == 1 && k.order() == 2 && k.contains(involutions[0])
        }
    }
}

/// Differences between a report and the expected block, one line each.
pub fn deviations(expected: &Expected, config: &AnalysisConfig, report: &Value) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |name: &str, got: &Value, want: Value| {
        if *got != want {
            out.push(format!("{name}: got {got}, expected {want}"));
        }
    };
    check(
        "group_order",
        &report["group_order"],
        expected.group_order.into(),
    );
    check("g0_order", &report["g0_order"], expected.g0_order.into());
    check("genus_c", &report["genus_c"], expected.genus_c.into());
    check("q", &report["q"], expected.q.into());
    if let Some(m) = &expected.minimality {
        check(
            "minimality",
            &report["minimality"]["verdict"],
            m.as_str().into(),
        );
    }
    check(
        "kernel_order",
        &report["canonical_kernel"]["order"],
        expected.kernel_order.into(),
    );
    check(
        "albanese_degree",
        &report["albanese"]["degree"],
        expected.albanese_degree.into(),
    );
    check(
        "kernel_invariants",
        &report["albanese"]["kernel_invariants"],
        expected.kernel_invariants.clone().into(),
    );
    check(
        "polarization",
        &report["albanese"]["polarization"],
        expected.polarization.clone().into(),
    );
    check(
        "o2_count",
        &report["ramification"]["o2_count"],
        expected.o2_count.into(),
    );
    check("ksq", &report["ksq"], expected.ksq.into());
    if let Some([q, chi, ksq]) = expected.dihedral_invariants {
        let d = &report["dihedral_invariants"];
        let got = Value::from(vec![d["q"].clone(), d["chi"].clone(), d["ksq"].clone()]);
        check("dihedral_invariants", &got, vec![q, chi, ksq].into());
    }

    let k = canonical_kernel(&config.action);
    if !kernel_role_holds(expected.kernel, config, &k) {
        out.push(format!("kernel: not {:?}", expected.kernel));
    }
    if let Some(inv) = &expected.kernel_group_invariants {
        let (kg, _) = k.as_group(config.action.g0_group());
        let got = abelian_invariants_of(&kg).ok();
        if got.as_ref() != Some(inv) {
            out.push(format!(
                "kernel_group_invariants: got {got:?}, expected {inv:?}"
            ));
        }
    }
    out
}

/// Analyzes one family, or all of them when `family` is `None`.
pub fn catalog(
    family: Option<&str>,
    opts: AnalyzeOptions,
) -> Result<Vec<CatalogOutcome>, CliError> {
    let selected = match family {
        Some(name) => vec![entry(name)?],
        None => entries(),
    };
    selected
        .into_iter()
        .map(|e| {
            let config = e.analysis_config()?;
            let report = analyze(&config, opts)?;
            let deviations = deviations(&e.expected, &config, &report);
            Ok(CatalogOutcome {
                family: e.family,
                description: e.description,
                report,
                deviations,
            })
        })
        .collect()
}
