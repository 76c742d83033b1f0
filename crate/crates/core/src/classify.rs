//! Tileability decisions, 2D lattice construction and bounded k-fold lattice search.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::belts::{belt_condition, Belt, BeltCertificate, BeltVerdict};
use crate::error::{Result, TilingError};
use crate::geometry::rational::lcm_of_denominators;
use crate::geometry::{Polytope, Rational, Vector};
use crate::multiplicity::lattice::sublattices_2d;
use crate::multiplicity::verify::quick_screen;
use crate::multiplicity::{verify_lattice_tiling, Lattice, MultiplicityReport, Verdict};
use crate::symmetry::{cs_facets_report, SymmetryReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TileVerdict {
    Tile,
    NotTile,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TileReason {
    NotCS,
    FacetNotCS,
    BeltWitness(Belt),
    Certified,
}

/// How a decision was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecisionRoute {
    /// Symmetry checks followed by the belt criterion.
    BeltCriterion,
    /// Twofold tileability, decided through its equivalence with onefold tileability.
    TwofoldEquivalence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileDecision {
    pub verdict: TileVerdict,
    pub reason: TileReason,
    pub route: DecisionRoute,
    pub symmetry: SymmetryReport,
    pub belts: Option<BeltCertificate>,
    /// Present for 2D tiles.
    pub lattice: Option<Lattice>,
    /// Verification of `lattice`; `Constant(1)` for 2D tiles.
    pub crosscheck: Option<MultiplicityReport>,
}

impl TileDecision {
    pub fn is_tile(&self) -> bool {
        self.verdict == TileVerdict::Tile
    }
}

/// Translative tile iff centrally symmetric, with centrally symmetric facets, and every
/// belt of size four or six. 2D tiles additionally get a verified lattice tiling.
pub fn is_translative_tile(p: &Polytope) -> Result<TileDecision> {
    let symmetry = cs_facets_report(p);
    let reject = |reason, symmetry, belts| TileDecision {
        verdict: TileVerdict::NotTile,
        reason,
        route: DecisionRoute::BeltCriterion,
        symmetry,
        belts,
        lattice: None,
        crosscheck: None,
    };
    if symmetry.body_center.is_none() {
        return Ok(reject(TileReason::NotCS, symmetry, None));
    }
    if !symmetry.is_cs_with_cs_facets {
        return Ok(reject(TileReason::FacetNotCS, symmetry, None));
    }
    let cert = belt_condition(p)?;
    if cert.verdict == BeltVerdict::Fail {
        let witness = cert.witness.clone().expect("failing certificate has a witness");
        return Ok(reject(TileReason::BeltWitness(witness), symmetry, Some(cert)));
    }
    let (lattice, crosscheck) = if p.dim() == 2 {
        let (l, report) = lattice_with_report(p)?;
        (Some(l), Some(report))
    } else {
        (None, None)
    };
    Ok(TileDecision {
        verdict: TileVerdict::Tile,
        reason: TileReason::Certified,
        route: DecisionRoute::BeltCriterion,
        symmetry,
        belts: Some(cert),
        lattice,
        crosscheck,
    })
}

/// Twofold translative tiles are exactly the onefold translative tiles; the decision is
/// delegated and labelled accordingly.
pub fn is_twofold_translative_tile(p: &Polytope) -> Result<TileDecision> {
    let mut d = is_translative_tile(p)?;
    d.route = DecisionRoute::TwofoldEquivalence;
    Ok(d)
}

fn edge_vectors(p: &Polytope) -> Vec<Vector> {
    let cycle = p.boundary_cycle();
    (0..cycle.len())
        .map(|i| p.edge_vector(cycle[i], cycle[(i + 1) % cycle.len()]))
        .collect()
}

fn lattice_with_report(p: &Polytope) -> Result<(Lattice, MultiplicityReport)> {
    let e = edge_vectors(p);
    let basis = match e.len() {
        4 => vec![e[0].clone(), e[1].clone()],
        6 => vec![&e[0] + &e[1], &e[1] + &e[2]],
        _ => return Err(TilingError::NotATile),
    };
    let lattice = Lattice::new(basis)?;
    let report = verify_lattice_tiling(p, &lattice)?;
    if report.verdict != (Verdict::Constant { k: 1 }) || !report.volume_identity.consistent {
        return Err(TilingError::InternalVerificationFailure(format!(
            "constructed lattice gives {:?}",
            report.verdict
        )));
    }
    Ok((lattice, report))
}

/// Tiling lattice of a 2D translative tile: two adjacent edges of a parallelogram, or
/// `{e1 + e2, e2 + e3}` for a hexagon with consecutive edges `e1, e2, e3`.
pub fn construct_lattice_2d(p: &Polytope) -> Result<Lattice> {
    if p.dim() != 2 {
        return Err(TilingError::UnsupportedDimension(p.dim()));
    }
    let sym = cs_facets_report(p);
    if !sym.is_cs_with_cs_facets || belt_condition(p)?.verdict != BeltVerdict::Pass {
        return Err(TilingError::NotATile);
    }
    lattice_with_report(p).map(|(l, _)| l)
}

/// Candidate lattices are all sublattices of `(1/grid_denominator) ℤ²` with index at most
/// `max_index`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SearchBudget {
    /// Defaults to the lcm of the vertex coordinate denominators.
    pub grid_denominator: Option<BigInt>,
    /// Defaults to `(span · grid_denominator)²`, `span` the largest bounding-box side,
    /// which bounds every index that can occur.
    pub max_index: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BudgetUsed {
    pub grid_denominator: BigInt,
    pub max_index: u64,
    pub max_k: u64,
    pub candidates: usize,
    /// Values of `k` whose index exceeded `max_index`.
    pub skipped_k: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// `(lattice in Hermite normal form, k)`, ordered by `k` then basis.
    pub found: Vec<(Lattice, u64)>,
    pub budget: BudgetUsed,
}

pub fn default_budget(p: &Polytope) -> (BigInt, u64) {
    let denom = lcm_of_denominators(p.vertices().iter().flat_map(|v| v.coords()));
    let (lo, hi) = p.bounding_box();
    let span = (0..p.dim())
        .map(|i| &hi[i] - &lo[i])
        .max()
        .unwrap_or_else(Rational::zero);
    let side = (span * Rational::from_integer(denom.clone())).ceil().to_integer();
    let max_index = (&side * &side).to_u64().unwrap_or(u64::MAX);
    (denom, max_index)
}

/// Every lattice `Λ` within the budget such that `P + Λ` is a k-fold tiling, `k <= max_k`.
pub fn search_lattice_multiplicity(p: &Polytope, max_k: u64, budget: &SearchBudget) -> Result<SearchResult> {
    if p.dim() != 2 {
        return Err(TilingError::UnsupportedDimension(p.dim()));
    }
    let (default_denom, default_max) = default_budget(p);
    let denom = budget.grid_denominator.clone().unwrap_or(default_denom);
    let max_index = budget.max_index.unwrap_or(default_max);
    let volume = p.volume();
    let scaled = &volume * Rational::from_integer(&denom * &denom);

    let mut found = Vec::new();
    let mut candidates = 0;
    let mut skipped_k = Vec::new();
    for k in 1..=max_k {
        let index = &scaled / Rational::from_integer(k.into());
        if !index.is_integer() {
            continue;
        }
        let index = match index.to_integer().to_u64() {
            Some(n) if n <= max_index => n,
            _ => {
                skipped_k.push(k);
                continue;
            }
        };
        let lattices = sublattices_2d(&denom, index);
        candidates += lattices.len();
        let hits: Vec<Result<Option<Lattice>>> = lattices
            .into_par_iter()
            .map(|l| {
                if !quick_screen(p, &l, k) {
                    return Ok(None);
                }
                let r = verify_lattice_tiling(p, &l)?;
                Ok((r.verdict == Verdict::Constant { k } && r.volume_identity.consistent).then_some(l))
            })
            .collect();
        for hit in hits {
            if let Some(l) = hit? {
                found.push((l, k));
            }
        }
    }
    Ok(SearchResult {
        found,
        budget: BudgetUsed {
            grid_denominator: denom,
            max_index,
            max_k,
            candidates,
            skipped_k,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::geometry::{int, rat, Point};

    #[test]
    fn decisions_for_named_shapes() {
        let h6 = is_translative_tile(&corpus::hexagon_h6()).unwrap();
        assert!(h6.is_tile());
        assert_eq!(h6.crosscheck.unwrap().verdict, Verdict::Constant { k: 1 });
        let o7 = is_translative_tile(&corpus::octagon_o7()).unwrap();
        assert_eq!(o7.verdict, TileVerdict::NotTile);
        assert!(matches!(o7.reason, TileReason::BeltWitness(ref b) if b.size == 8));
        assert_eq!(is_translative_tile(&corpus::triangle()).unwrap().reason, TileReason::NotCS);
        assert_eq!(is_translative_tile(&corpus::octahedron()).unwrap().reason, TileReason::FacetNotCS);
        let rd = is_twofold_translative_tile(&corpus::rhombic_dodecahedron()).unwrap();
        assert!(rd.is_tile());
        assert_eq!(rd.route, DecisionRoute::TwofoldEquivalence);
        assert!(rd.lattice.is_none());
    }

    #[test]
    fn constructed_lattices() {
        let sq = construct_lattice_2d(&corpus::unit_square()).unwrap();
        assert_eq!(sq.basis(), &[Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1])]);
        let par = Polytope::from_int_points(&[&[0, 0], &[2, 0], &[3, 1], &[1, 1]]).unwrap();
        assert_eq!(
            construct_lattice_2d(&par).unwrap().basis(),
            &[Vector::from_ints(&[2, 0]), Vector::from_ints(&[1, 1])]
        );
        let h6 = construct_lattice_2d(&corpus::hexagon_h6()).unwrap();
        assert_eq!(h6.basis(), &[Vector::from_ints(&[3, 1]), Vector::from_ints(&[1, 2])]);
        assert_eq!(h6.abs_det(), int(5));
        assert_eq!(construct_lattice_2d(&corpus::octagon_o7()), Err(TilingError::NotATile));
    }

    #[test]
    fn search_examples() {
        let r = search_lattice_multiplicity(&corpus::rectangle(2, 2), 4, &SearchBudget::default()).unwrap();
        assert!(r.found.contains(&(Lattice::integer(2), 4)));
        assert!(r.found.contains(&(Lattice::from_ints(&[&[2, 0], &[0, 2]]).unwrap(), 1)));
        let r = search_lattice_multiplicity(&corpus::unit_square(), 1, &SearchBudget::default()).unwrap();
        assert_eq!(r.found, vec![(Lattice::integer(2), 1)]);
        let r = search_lattice_multiplicity(&corpus::octagon_o7(), 7, &SearchBudget::default()).unwrap();
        assert_eq!(r.found, vec![(Lattice::integer(2), 7)]);
    }

    #[test]
    fn scaled_search_hits_reverify() {
        let s = rat(3, 2);
        let p = corpus::octagon_o7().scale(&s);
        let hit = verify_lattice_tiling(&p, &Lattice::integer(2).scale(&s)).unwrap();
        assert_eq!(hit.verdict, Verdict::Constant { k: 7 });
        assert_eq!(is_translative_tile(&p).unwrap().verdict, TileVerdict::NotTile);
        let moved = corpus::hexagon_h6().translate(&Point::new(vec![rat(1, 3), rat(-2, 5)]).as_vector());
        assert!(is_translative_tile(&moved).unwrap().is_tile());
    }
}
