//! JSON configuration: group, `G⁰`, `τ′` and the generating vector, all given
//! by words in the group's generators.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CliError, SchemaError};
use crate::cover::{make_generating_vector, make_mixed_action, MixedAction};
use crate::groups::{subgroup_generated, Elem, FiniteGroup, Subgroup, DEFAULT_ORDER_CAP};

/// Signed 1-based generator indices; a negative letter is an inverse.
pub type Word = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    /// 1-based one-line images.
    Permutations {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    /// Entries are 0-based labels; word letter `k` is the element labelled `k - 1`.
    Cayley { cayley: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub group: GroupSpec,
    pub g0: Vec<Word>,
    pub tau_prime: Word,
    pub base_genus: usize,
    #[serde(default)]
    pub hyperbolic: Vec<(Word, Word)>,
    #[serde(default)]
    pub elliptic: Vec<Word>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elliptic_orders: Option<Vec<usize>>,
}

/// What `search` needs: the group and `G⁰`. Other fields are ignored.
#[derive(Clone, Debug, Deserialize)]
pub struct RawSearchConfig {
    pub group: GroupSpec,
    pub g0: Vec<Word>,
}

/// A group with the generator list words refer to and printable element names.
#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub group: FiniteGroup,
    pub generators: Vec<Elem>,
    pub names: Vec<String>,
}

impl LoadedGroup {
    pub fn from_spec(spec: &GroupSpec) -> Result<Self, CliError> {
        match spec {
            GroupSpec::Permutations { degree, generators } => {
                let zero_based: Vec<Vec<usize>> = generators
                    .iter()
                    .map(|p| {
                        p.iter()
                            .map(|&x| x.checked_sub(1).unwrap_or(*degree))
                            .collect()
                    })
                    .collect();
                let group =
                    FiniteGroup::from_permutations(*degree, &zero_based, DEFAULT_ORDER_CAP)?;
                let labels = group.permutation_labels().expect("built from permutations");
                let gens = zero_based
                    .iter()
                    .map(|p| {
                        labels
                            .iter()
                            .position(|l| l == p)
                            .expect("generator lies in its closure")
                    })
                    .collect();
                let names = labels.iter().map(|l| cycle_notation(l)).collect();
                Ok(LoadedGroup {
                    group,
                    generators: gens,
                    names,
                })
            }
            GroupSpec::Cayley { cayley } => {
                let group = FiniteGroup::from_cayley(cayley)?;
                let n = cayley.len();
                let e = (0..n)
                    .find(|&e| (0..n).all(|j| cayley[e][j] == j))
                    .expect("validated identity");
                // from_cayley swaps the identity label with 0
                let internal = |u: usize| {
                    if u == e {
                        0
                    } else if u == 0 {
                        e
                    } else {
                        u
                    }
                };
                let generators = (0..n).map(internal).collect();
                let mut names = vec![String::new(); n];
                for u in 0..n {
                    names[internal(u)] = u.to_string();
                }
                Ok(LoadedGroup {
                    group,
                    generators,
                    names,
                })
            }
        }
    }

    pub fn eval(&self, field: &str, word: &[i64]) -> Result<Elem, CliError> {
        let g = &self.group;
        word.iter().try_fold(g.identity(), |acc, &letter| {
            let k = letter.unsigned_abs() as usize;
            if k == 0 || k > self.generators.len() {
                return Err(CliError::WordOutOfRange {
                    field: field.to_string(),
                    letter,
                    generators: self.generators.len(),
                });
            }
            let x = self.generators[k - 1];
            Ok(g.mul(acc, if letter < 0 { g.inv(x) } else { x }))
        })
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn g0_from_words(&self, words: &[Word]) -> Result<Subgroup, CliError> {
        let gens = words
            .iter()
            .enumerate()
            .map(|(i, w)| self.eval(&format!("g0[{i}]"), w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(subgroup_generated(&self.group, &gens))
    }
}

/// `(1 2 3)(4 5)` from 0-based one-line images; the identity is `()`.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// A validated configuration.
#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    pub raw: RawConfig,
    pub group: LoadedGroup,
    pub action: MixedAction,
}

pub fn load_config(path: &Path) -> Result<AnalysisConfig, CliError> {
    let text = read(path)?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<AnalysisConfig, CliError> {
    let raw: RawConfig = serde_json::from_str(text).map_err(CliError::from_json)?;
    build_config(raw)
}

pub fn build_config(raw: RawConfig) -> Result<AnalysisConfig, CliError> {
    let group = LoadedGroup::from_spec(&raw.group)?;
    let g0 = group.g0_from_words(&raw.g0)?;
    let (g0_group, members) = g0.as_group(&group.group);
    let local = |field: String, w: &Word| -> Result<Elem, CliError> {
        let x = group.eval(&field, w)?;
        members
            .binary_search(&x)
            .map_err(|_| CliError::Schema(SchemaError::NotInG0 { field }))
    };
    let hyperbolic = raw
        .hyperbolic
        .iter()
        .enumerate()
        .map(|(i, (a, b))| {
            Ok((
                local(format!("hyperbolic[{i}][0]"), a)?,
                local(format!("hyperbolic[{i}][1]"), b)?,
            ))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let elliptic = raw
        .elliptic
        .iter()
        .enumerate()
        .map(|(i, w)| local(format!("elliptic[{i}]"), w))
        .collect::<Result<Vec<_>, _>>()?;
    let tau_prime = group.eval("tau_prime", &raw.tau_prime)?;
    let gv = make_generating_vector(
        g0_group,
        raw.base_genus,
        hyperbolic,
        elliptic,
        raw.elliptic_orders.as_deref(),
    )
    .map_err(SchemaError::from)?;
    let action = make_mixed_action(group.group.clone(), g0.members(), tau_prime, gv)
        .map_err(SchemaError::from)?;
    Ok(AnalysisConfig { raw, group, action })
}

pub fn load_search_config(path: &Path) -> Result<(LoadedGroup, Subgroup), CliError> {
    let raw: RawSearchConfig = serde_json::from_str(&read(path)?).map_err(CliError::from_json)?;
    let group = LoadedGroup::from_spec(&raw.group)?;
    let g0 = group.g0_from_words(&raw.g0)?;
    Ok((group, g0))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
