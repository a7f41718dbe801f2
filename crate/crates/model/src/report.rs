//! JSON and DOT reports. JSON objects have sorted keys; every algebraic
//! number carries its display text and its exact encoding.

use crate::model::{DivisorialModel, ModelResult, VerifyReport};
use numtower::{json::to_json, TowerElem};
use resolution::{log_order, to_dot, ComponentId, ResolutionTree};
use serde_json::{json, Value};

fn elem(x: &TowerElem) -> Value {
    json!({ "text": x.to_string(), "exact": to_json(x) })
}

pub fn tree_json(tree: &ResolutionTree) -> Value {
    let nodes: Vec<Value> = tree
        .nodes
        .iter()
        .map(|n| {
            json!({
                "address": n.address.to_string(),
                "classification": n.classification.name(),
                "exceptional": n.exceptional.iter().map(|(e, _)| ComponentId::Exceptional(*e).to_string()).collect::<Vec<_>>(),
                "blown_up": n.created.map(|e| ComponentId::Exceptional(e).to_string()),
                "log_order": log_order(n),
                "local_form": n.local_form.to_string(),
            })
        })
        .collect();
    let branches: Vec<Value> = tree
        .branches
        .iter()
        .enumerate()
        .map(|(i, b)| {
            json!({
                "label": ComponentId::Branch(i).to_string(),
                "address": b.address.to_string(),
                "order": b.order(),
                "multiplicities": b.multiplicities.iter().map(|(n, m)| json!([tree.nodes[*n].address.to_string(), m])).collect::<Vec<_>>(),
                "local_cs": elem(&b.local_cs),
                "equation": b.equation.map(|e| tree.equations[e].to_string()),
            })
        })
        .collect();
    let exceptional: Vec<Value> = tree
        .exceptional
        .iter()
        .enumerate()
        .map(|(i, e)| {
            json!({
                "label": ComponentId::Exceptional(i).to_string(),
                "center": tree.nodes[e.created_at].address.to_string(),
                "self_intersection": e.self_intersection,
            })
        })
        .collect();
    let edges: Vec<Value> = tree
        .dual_graph()
        .iter()
        .map(|(a, b, n)| json!([a.to_string(), b.to_string(), tree.nodes[*n].address.to_string()]))
        .collect();
    json!({
        "blowups": tree.num_blowups(),
        "nodes": nodes,
        "branches": branches,
        "exceptional": exceptional,
        "dual_graph": edges,
        "unmatched_equations": tree.unmatched_equations.iter().map(|(i, r)| json!([i + 1, r])).collect::<Vec<_>>(),
    })
}

/// `{status, branches, exceptional, matrix, checks, dual_graph}`.
pub fn model_json(tree: &ResolutionTree, r: &ModelResult) -> Value {
    let branches: Vec<Value> = tree
        .branches
        .iter()
        .enumerate()
        .map(|(i, b)| {
            json!({
                "id": ComponentId::Branch(i).to_string(),
                "address": b.address.to_string(),
                "order": b.order(),
                "cs_index": elem(&r.matrix.entries[i][i]),
                "coefficient": elem(&r.model.lambdas[i]),
                "equation": b.equation.map(|e| tree.equations[e].to_string()),
            })
        })
        .collect();
    let exceptional: Vec<Value> = (tree.preexisting..tree.exceptional.len())
        .map(|e| {
            let c = ComponentId::Exceptional(e);
            json!({
                "id": c.to_string(),
                "center": tree.nodes[tree.exceptional[e].created_at].address.to_string(),
                "coefficient": elem(&r.model.coefficient(tree, c)),
                "self_intersection": tree.exceptional[e].self_intersection,
            })
        })
        .collect();
    let edges: Vec<Value> = tree
        .dual_graph()
        .iter()
        .map(|(a, b, n)| json!([a.to_string(), b.to_string(), tree.nodes[*n].address.to_string()]))
        .collect();
    json!({
        "status": "ok",
        "branches": branches,
        "exceptional": exceptional,
        "matrix": r.matrix.entries.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "dual_graph": edges,
        "checks": {
            "rank": r.matrix.rank(),
            "size": r.matrix.size(),
            "det_b0": r.matrix.det_b0().to_string(),
            "methods_agree": true,
            "cs_sums": r.cs_sums.iter().map(|(e, s)| json!([ComponentId::Exceptional(*e).to_string(), s.to_string()])).collect::<Vec<_>>(),
        },
    })
}

pub fn verify_json(r: &VerifyReport) -> Value {
    json!({
        "is_model": r.is_model(),
        "support_ok": r.support_ok,
        "index_violations": r.index_violations,
        "dicritical": r.dicritical.as_ref().map(|(at, w)| json!({ "at": at, "witness": w })),
    })
}

/// Dual graph with each vertex labelled by its model coefficient.
pub fn annotated_dot(tree: &ResolutionTree, m: Option<&DivisorialModel>) -> String {
    to_dot(tree, &|c| m.map(|m| m.coefficient(tree, c).to_string()))
}
