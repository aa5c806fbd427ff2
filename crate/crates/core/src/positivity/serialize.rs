//! Canonical JSON for certificates: sorted keys, no whitespace, every node
//! carrying its stored triple so that tampering is caught by verification.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::partition::{KroneckerTriple, Partition};

use super::axioms::Axiom;
use super::certificate::{Certificate, ClosedForm, Node, Swap, TransposePair};

pub const CERT_SCHEMA: &str = "cert-v1";

fn parts(p: &Partition) -> Value {
    Value::from(p.parts().to_vec())
}

fn pair_name(p: TransposePair) -> &'static str {
    match p {
        TransposePair::MuNu => "mu-nu",
        TransposePair::LamMu => "lam-mu",
        TransposePair::LamNu => "lam-nu",
    }
}

fn swap_name(s: Swap) -> &'static str {
    match s {
        Swap::S12 => "12",
        Swap::S13 => "13",
        Swap::S23 => "23",
    }
}

fn axiom_params(a: &Axiom) -> Value {
    match a {
        Axiom::Square { k } => json!({ "k": k }),
        Axiom::Hook7 { j } => json!({ "j": j }),
        Axiom::NearHook7 { j, rho } => json!({ "j": j, "rho": parts(rho) }),
        Axiom::Stretch7 { i, k } => json!({ "i": i, "k": k }),
        Axiom::RhoCase { rho } => json!({ "rho": parts(rho) }),
        Axiom::Cols6 { i } => json!({ "i": i }),
    }
}

fn node_value(c: &Certificate) -> Value {
    let t = &c.triple;
    let children: Vec<Value> = c.children().into_iter().map(|ch| node_value(ch)).collect();
    let justification = match &c.node {
        Node::Oracle => json!({ "tier": "oracle" }),
        Node::Axiom(a) => json!({ "tier": "axiom", "axiom_id": a.id(), "params": axiom_params(a) }),
        Node::ClosedForm(ClosedForm::Hook { d, n, k }) => {
            json!({ "tier": "closed-form", "params": { "kind": "hook", "d": d, "n": n, "k": k } })
        }
        Node::ClosedForm(ClosedForm::TwoColumn { n, d, k }) => {
            json!({ "tier": "closed-form", "params": { "kind": "two-column", "n": n, "d": d, "k": k } })
        }
        Node::Add(..) => json!({ "tier": "rule", "params": { "rule": "semigroup" } }),
        Node::Transpose(_, p) => json!({ "tier": "rule", "params": { "rule": "transpose", "pair": pair_name(*p) } }),
        Node::Permute(_, s) => json!({ "tier": "rule", "params": { "rule": "symmetry", "swap": swap_name(*s) } }),
    };
    json!({
        "node_kind": c.kind_name(),
        "triple": [parts(&t.lam), parts(&t.mu), parts(&t.nu)],
        "children": children,
        "justification": justification,
    })
}

/// `{"root": …, "schema": "cert-v1"}` with sorted keys and no whitespace.
pub fn to_json(cert: &Certificate) -> String {
    let v = json!({ "schema": CERT_SCHEMA, "root": node_value(cert) });
    serde_json::to_string(&v).expect("JSON values always serialize")
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| malformed(format!("missing field {key:?}")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| malformed(format!("{what} is not a nonnegative integer")))
}

fn as_partition(v: &Value) -> Result<Partition> {
    let arr = v.as_array().ok_or_else(|| malformed("partition is not an array"))?;
    let parts = arr.iter().map(|x| as_u64(x, "part")).collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

fn param(params: &Value, key: &str) -> Result<u64> {
    as_u64(params.get(key).ok_or_else(|| malformed(format!("missing parameter {key:?}")))?, key)
}

fn parse_node(v: &Value) -> Result<Certificate> {
    let obj = v.as_object().ok_or_else(|| malformed("node is not an object"))?;
    let kind = get(obj, "node_kind")?.as_str().ok_or_else(|| malformed("node_kind is not a string"))?;
    let tr = get(obj, "triple")?.as_array().ok_or_else(|| malformed("triple is not an array"))?;
    if tr.len() != 3 {
        return Err(malformed("triple must have three partitions"));
    }
    let triple = KroneckerTriple { lam: as_partition(&tr[0])?, mu: as_partition(&tr[1])?, nu: as_partition(&tr[2])? };
    let children = get(obj, "children")?.as_array().ok_or_else(|| malformed("children is not an array"))?;
    let just = get(obj, "justification")?;
    let params = just.get("params").cloned().unwrap_or(Value::Null);
    let kids = children.iter().map(|c| parse_node(c).map(Arc::new)).collect::<Result<Vec<_>>>()?;
    let arity = |n: usize| {
        if kids.len() == n {
            Ok(())
        } else {
            Err(malformed(format!("{kind} node with {} children", kids.len())))
        }
    };
    let node = match kind {
        "oracle" => {
            arity(0)?;
            Node::Oracle
        }
        "axiom" => {
            arity(0)?;
            let id = just.get("axiom_id").and_then(Value::as_str).ok_or_else(|| malformed("axiom without axiom_id"))?;
            let axiom = match id {
                "SQUARE" => Axiom::Square { k: param(&params, "k")? },
                "HOOK7" => Axiom::Hook7 { j: param(&params, "j")? },
                "NEARHOOK7" => Axiom::NearHook7 {
                    j: param(&params, "j")?,
                    rho: as_partition(params.get("rho").ok_or_else(|| malformed("missing rho"))?)?,
                },
                "STRETCH7" => Axiom::Stretch7 { i: param(&params, "i")?, k: param(&params, "k")? },
                "RHOCASE" => Axiom::RhoCase { rho: as_partition(params.get("rho").ok_or_else(|| malformed("missing rho"))?)? },
                "COLS6" => Axiom::Cols6 { i: param(&params, "i")? },
                other => return Err(malformed(format!("unknown axiom {other:?}"))),
            };
            Node::Axiom(axiom)
        }
        "closed-form" => {
            arity(0)?;
            let (n, d, k) = (param(&params, "n")?, param(&params, "d")?, param(&params, "k")?);
            match params.get("kind").and_then(Value::as_str) {
                Some("hook") => Node::ClosedForm(ClosedForm::Hook { d, n, k }),
                Some("two-column") => Node::ClosedForm(ClosedForm::TwoColumn { n, d, k }),
                _ => return Err(malformed("unknown closed-form kind")),
            }
        }
        "add" => {
            arity(2)?;
            Node::Add(kids[0].clone(), kids[1].clone())
        }
        "transpose" => {
            arity(1)?;
            let pair = match params.get("pair").and_then(Value::as_str) {
                Some("mu-nu") => TransposePair::MuNu,
                Some("lam-mu") => TransposePair::LamMu,
                Some("lam-nu") => TransposePair::LamNu,
                _ => return Err(malformed("unknown transpose pair")),
            };
            Node::Transpose(kids[0].clone(), pair)
        }
        "permute" => {
            arity(1)?;
            let swap = match params.get("swap").and_then(Value::as_str) {
                Some("12") => Swap::S12,
                Some("13") => Swap::S13,
                Some("23") => Swap::S23,
                _ => return Err(malformed("unknown swap")),
            };
            Node::Permute(kids[0].clone(), swap)
        }
        other => return Err(malformed(format!("unknown node_kind {other:?}"))),
    };
    Ok(Certificate { triple, node })
}

/// Parses a certificate; stored triples are kept as written, so call
/// [`Certificate::verify`] before trusting the result.
pub fn from_json(text: &str) -> Result<Certificate> {
    let mut de = serde_json::Deserializer::from_str(text);
    de.disable_recursion_limit();
    let v: Value = serde::Deserialize::deserialize(&mut de)?;
    de.end()?;
    let schema = v.get("schema").and_then(Value::as_str);
    if schema != Some(CERT_SCHEMA) {
        return Err(malformed(format!("expected schema {CERT_SCHEMA:?}, found {schema:?}")));
    }
    parse_node(v.get("root").ok_or_else(|| malformed("missing root"))?)
}
