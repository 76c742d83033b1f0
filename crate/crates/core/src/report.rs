//! JSON sections of the CLI report envelope.

use serde_json::{json, Value};

use crate::belts::{belt_condition, BeltCertificate, BeltVerdict};
use crate::classify::{
    is_translative_tile, is_twofold_translative_tile, DecisionRoute, SearchResult, TileDecision, TileReason, TileVerdict};
use crate::geometry::format_rational;
use crate::io::{lattice_json, point_json, polytope_json, translates_json, vector_json};

use crate::multiplicity::{
    BeltLocalGeometry, BoundaryClassification, Method, MultiplicityReport, RefinedSets, Verdict,
};
use crate::error::Result;
use crate::symmetry::{cs_facets_report, SymmetryReport};
use crate::Polytope;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Report skeleton echoing the canonical input polytope.
pub fn envelope(command: &str, p: &Polytope) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("tool".into(), json!("tilescope"));
    m.insert("tool_version".into(), json!(TOOL_VERSION));
    m.insert("command".into(), json!(command));
    m.insert("input".into(), polytope_json(p));
    m
}

pub fn symmetry_json(s: &SymmetryReport) -> Value {
    json!({
        "body_center": s.body_center.as_ref().map(point_json),
        "facet_centers": s.facet_centers.iter().map(|c| c.as_ref().map(point_json)).collect::<Vec<_>>(),
        "is_cs_with_cs_facets": s.is_cs_with_cs_facets,
    })
}

pub fn belts_json(c: &BeltCertificate) -> Value {
    json!({
        "verdict": match c.verdict { BeltVerdict::Pass => "Pass", BeltVerdict::Fail => "Fail" },
        "belts": c.belts.iter().map(|(g, n)| json!({"generator": g, "size": n})).collect::<Vec<_>>(),
        "witness": c.witness.as_ref().map(|b| json!({
            "generator": b.generator,
            "facet_ids": b.facet_ids,
            "size": b.size,
        })),
    })
}

pub fn multiplicity_json(r: &MultiplicityReport) -> Value {
    let verdict = match &r.verdict {
        Verdict::Constant { k } => json!({"kind": "Constant", "k": k}),
        Verdict::NonConstant {
            witness_lo,
            witness_hi,
            values,
        } => json!({
            "kind": "NonConstant",
            "witness_lo": point_json(witness_lo),
            "witness_hi": point_json(witness_hi),
            "values": [values.0, values.1],
        }),
        Verdict::NotCovering { witness } => json!({"kind": "NotCovering", "witness": point_json(witness)}),
    };
    let method = match r.method {
        Method::Exact2D => json!({"kind": "Exact2D"}),
        Method::Sampled3D { samples } => json!({"kind": "Sampled3D", "samples": samples}),
    };
    json!({
        "verdict": verdict,
        "method": method,
        "evaluated_points": r.evaluated,
        "volume_identity": {
            "volume": format_rational(&r.volume_identity.volume),
            "det": format_rational(&r.volume_identity.det),
            "consistent": r.volume_identity.consistent,
        },
    })
}

pub fn decision_json(d: &TileDecision) -> Value {
    let reason = match &d.reason {
        TileReason::NotCS => json!({"kind": "NotCS"}),
        TileReason::FacetNotCS => json!({"kind": "FacetNotCS"}),
        TileReason::BeltWitness(b) => json!({"kind": "BeltWitness", "generator": b.generator, "size": b.size}),
        TileReason::Certified => json!({"kind": "Certified"}),
    };
    json!({
        "verdict": match d.verdict { TileVerdict::Tile => "Tile", TileVerdict::NotTile => "NotTile" },
        "reason": reason,
        "route": match d.route {
            DecisionRoute::BeltCriterion => "BeltCriterion",
            DecisionRoute::TwofoldEquivalence => "TwofoldEquivalence",
        },
        "lattice": d.lattice.as_ref().map(|l| lattice_json(l)["lattice"].clone()),
        "crosscheck": d.crosscheck.as_ref().map(multiplicity_json),
    })
}

pub fn boundary_json(b: &BoundaryClassification) -> Value {
    json!({
        "all": translates_json(&b.all)["translates"],
        "interior_hits": translates_json(&b.interior_hits)["translates"],
        "boundary_hits": translates_json(&b.boundary_hits)["translates"],
        "touching": translates_json(&b.touching)["translates"],
    })
}

pub fn local_geometry_json(g: &BeltLocalGeometry) -> Value {
    let frags = |fs: &[crate::multiplicity::FacetFragment]| {
        fs.iter()
            .map(|f| json!({"facet": f.facet, "direction": vector_json(&f.direction)}))
            .collect::<Vec<_>>()
    };
    json!({
        "point": point_json(&g.point),
        "plane_directions": g.plane_directions.iter().map(vector_json).collect::<Vec<_>>(),
        "generator": g.generator,
        "f_plus": frags(&g.f_plus),
        "f_minus": frags(&g.f_minus),
        "e_plus": g.e_plus,
        "e_minus": g.e_minus,
        "angle_is_straight": g.angle_is_straight,
        "angle_radians_display": format!("{:.6}", g.angle_radians),
    })
}

pub fn refined_json(r: &RefinedSets) -> Value {
    json!({
        "s_contact": translates_json(&r.s_contact)["translates"],
        "side_set": translates_json(&r.side_set)["translates"],
    })
}

pub fn search_json(s: &SearchResult) -> Value {
    json!({
        "found": s.found.iter().map(|(l, k)| json!({"lattice": lattice_json(l)["lattice"], "k": k})).collect::<Vec<_>>(),
        "budget": {
            "grid_denominator": s.budget.grid_denominator.to_string(),
            "max_index": s.budget.max_index,
            "max_k": s.budget.max_k,
            "candidates": s.budget.candidates,
            "skipped_k": s.budget.skipped_k,
        },
    })
}

/// Full `analyze` report: volume, symmetry, belts and both tile decisions.
pub fn analyze(p: &Polytope) -> Result<serde_json::Map<String, Value>> {
    let mut r = envelope("analyze", p);
    let symmetry = cs_facets_report(p);
    r.insert("volume".into(), json!(format_rational(&p.volume())));
    r.insert("symmetry".into(), symmetry_json(&symmetry));
    let belts = if symmetry.is_cs_with_cs_facets {
        belts_json(&belt_condition(p)?)
    } else {
        Value::Null
    };
    r.insert("belts".into(), belts);
    r.insert("onefold".into(), decision_json(&is_translative_tile(p)?));
    r.insert("twofold".into(), decision_json(&is_twofold_translative_tile(p)?));
    Ok(r)
}
