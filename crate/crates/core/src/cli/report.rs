//! The full report for one configuration, as JSON with sorted keys.

use serde_json::{json, Map, Value};

use super::config::{AnalysisConfig, LoadedGroup};
use super::CliError;
use crate::albanese::albanese_report;
use crate::cover::MixedAction;
use crate::groups::{
    abelian_invariants_of, is_abelian_subgroup, is_generalized_dihedral, Elem, Subgroup,
};
use crate::invariants::{dihedral_invariants, semi_isogenous_ksq};
use crate::lattice::{
    quotient_lattice, Audit, LatticeError, LatticeOptions, QuotientGenus, QuotientLattice,
};
use crate::ramification::ramification_report;

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    pub audit: Audit,
}

fn names(group: &LoadedGroup, elems: impl IntoIterator<Item = Elem>) -> Value {
    Value::from(
        elems
            .into_iter()
            .map(|x| group.name(x).to_string())
            .collect::<Vec<_>>(),
    )
}

fn local_names(group: &LoadedGroup, action: &MixedAction, k: &Subgroup) -> Value {
    names(group, action.lift(k).members().iter().copied())
}

fn genus_value(genus: &QuotientGenus) -> Value {
    match genus {
        QuotientGenus::Known(g) => json!(g),
        QuotientGenus::NotComputed => json!("NotComputed"),
    }
}

fn lattice_value(group: &LoadedGroup, action: &MixedAction, lattice: &QuotientLattice) -> Value {
    let kernels: Vec<Value> = lattice
        .quotients
        .iter()
        .map(|fq| {
            let r = &fq.realization;
            json!({
                "kernel_order": fq.kernel.order(),
                "kernel": local_names(group, action, &fq.kernel),
                "gk_order": fq.gk.order(),
                "gk_normal": fq.normal_in_square,
                "dihedral_target": fq.is_dihedral_target,
                "pi_degree": fq.pi_degree,
                "realization": {
                    "group_order": r.group.order(),
                    "g0_order": r.g0.order(),
                    "genus": genus_value(&r.genus),
                },
            })
        })
        .collect();
    let audit = match lattice.audit {
        Some(a) => json!({ "overgroups": a.overgroups, "kernels": a.kernels }),
        None => Value::Null,
    };
    json!({ "status": "computed", "square_order": lattice.square.group().order(), "kernels": kernels, "bijection_audit": audit })
}

/// The further-quotient table alone.
pub fn lattice_json(config: &AnalysisConfig, opts: AnalyzeOptions) -> Result<Value, CliError> {
    let lattice_opts = LatticeOptions {
        audit: opts.audit,
        ..LatticeOptions::default()
    };
    let lattice = quotient_lattice(&config.action, &lattice_opts)?;
    Ok(lattice_value(&config.group, &config.action, &lattice))
}

pub fn analyze(config: &AnalysisConfig, opts: AnalyzeOptions) -> Result<Value, CliError> {
    let action = &config.action;
    let group = &config.group;
    let g = action.group();

    let alb = albanese_report(action)?;
    let mut albanese = Map::new();
    match &alb.map {
        None => {
            albanese.insert("applicable".into(), json!(false));
            albanese.insert("degree".into(), json!("NotApplicable"));
            albanese.insert("kernel_invariants".into(), json!("NotApplicable"));
        }
        Some(m) => {
            albanese.insert("applicable".into(), json!(true));
            albanese.insert("degree".into(), json!(m.degree));
            albanese.insert("kernel_invariants".into(), json!(m.kernel_invariants));
            match &m.polarization {
                Ok(p) => {
                    albanese.insert("polarization".into(), json!(p));
                }
                Err(e) => {
                    albanese.insert("polarization".into(), Value::Null);
                    albanese.insert("warning".into(), json!(format!("ChainTooLong: {e}")));
                }
            }
            albanese.insert("target_genus".into(), json!(m.target_genus));
            albanese.insert(
                "target_group".into(),
                json!({ "order": m.target_order, "invariants": m.kernel_invariants }),
            );
            albanese.insert("dihedral_ok".into(), json!(m.dihedral_ok));
            albanese.insert(
                "max_albanese_dimension".into(),
                json!(m.max_albanese_dimension),
            );
            albanese.insert("fibres_rational".into(), json!(m.fibres_rational));
        }
    }

    let lattice_opts = LatticeOptions {
        audit: opts.audit,
        ..LatticeOptions::default()
    };
    let lattice = match quotient_lattice(action, &lattice_opts) {
        Ok(l) => lattice_value(group, action, &l),
        Err(LatticeError::GroupTooLarge { order, limit }) => {
            json!({ "status": "skipped", "reason": format!("|G0| = {order} exceeds {limit}") })
        }
        Err(e) => return Err(e.into()),
    };

    let semi = action.is_semi_isogenous();
    let (ramification, ksq) = if semi {
        let r = ramification_report(action, &alb.kernel)
            .map_err(|e| CliError::TheoremViolation(format!("ramification: {e}")))?;
        let labels: Vec<Value> = r
            .curve_labels
            .iter()
            .map(|c| json!({ "g": group.name(c.g), "h": group.name(c.h), "genus": c.genus }))
            .collect();
        let value = json!({
            "o2": names(group, r.o2.iter().copied()),
            "o2_count": r.o2.len(),
            "curves": labels,
            "quotient_ramification": names(group, r.quotient_ramification.iter().copied()),
            "pi_k": names(group, r.pi_k.iter().copied()),
            "rho_k": names(group, r.rho_k.iter().copied()),
            "simple": r.simple,
        });
        (value, json!(semi_isogenous_ksq(action)?))
    } else {
        (Value::Null, Value::Null)
    };

    let dihedral =
        semi && is_abelian_subgroup(g, action.g0()) && is_generalized_dihedral(g, action.g0())?;
    let dihedral_value = if dihedral {
        let d = dihedral_invariants(action.order_g0() as u64, action.genus_c())?;
        json!({ "q": d.q, "chi": d.chi, "ksq": d.ksq, "pg": d.pg() })
    } else {
        Value::Null
    };

    let verdict = action.minimality_verdict();
    let g0_invariants = abelian_invariants_of(action.g0_group()).ok();
    Ok(json!({
        "input": serde_json::to_value(&config.raw).expect("config serializes"),
        "group_order": g.order(),
        "g0_order": action.order_g0(),
        "g0_abelian_invariants": g0_invariants,
        "tau_prime": group.name(action.tau_prime()),
        "branch_orders": action.gv().branch_orders(),
        "q": action.irregularity(),
        "genus_c": action.genus_c(),
        "semi_isogenous": semi,
        "minimality": { "verdict": verdict.label(), "justification": verdict.justification() },
        "canonical_kernel": { "order": alb.kernel.order(), "members": names(group, alb.kernel_in_g.members().iter().copied()) },
        "albanese": Value::Object(albanese),
        "lattice": lattice,
        "ramification": ramification,
        "ksq": ksq,
        "dihedral_invariants": dihedral_value,
    }))
}

/// Indented `key: value` lines for a JSON value.
pub fn render_text(value: &Value) -> String {
    let mut out = String::new();
    render_into(value, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Object(_) => None,
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => None,
        Value::Array(items) => Some(format!(
            "[{}]",
            items
                .iter()
                .map(|i| scalar(i).unwrap())
                .collect::<Vec<_>>()
                .join(", ")
        )),
        Value::String(s) => Some(s.clone()),
        other => Some(other.to_string()),
    }
}

fn render_into(value: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(v, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        render_into(v, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap())),
    }
}
