//! Local probes at a boundary point `q`: which translates contain `q`, how they touch
//! `P`, and the two-sided geometry of a belt at `q`.

use num_traits::{Signed, Zero};

use super::lattice::TranslateSet;
use super::verify::multiplicity_at;
use crate::belts::{belt_of_subfacet, generator_direction};
use crate::error::{Result, TilingError};
use crate::geometry::predicates::facet_halfspaces;
use crate::geometry::{
    halfspace_vertices, int, interiors_disjoint, intersection_vertices, HalfSpace, Location, Point,
    Polytope, Rational, Vector,
};

/// `all ⊇ boundary_hits ⊇ touching`, and `all = interior_hits ⊎ boundary_hits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryClassification {
    /// Translates `x` with `q ∈ P + x`.
    pub all: TranslateSet,
    /// `q` in the interior of `P + x`.
    pub interior_hits: TranslateSet,
    /// `q` on the boundary of `P + x`.
    pub boundary_hits: TranslateSet,
    /// Boundary hits whose body has interior disjoint from `int(P)`.
    pub touching: TranslateSet,
}

fn check_dim(p: &Polytope, q: &Point) -> Result<()> {
    if p.dim() == q.dim() {
        Ok(())
    } else {
        Err(TilingError::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        })
    }
}

pub fn boundary_sets(p: &Polytope, x: &TranslateSet, q: &Point) -> Result<BoundaryClassification> {
    check_dim(p, q)?;
    let mut all = Vec::new();
    let mut interior = Vec::new();
    let mut boundary = Vec::new();
    let mut touching = Vec::new();
    for (v, m) in x.entries() {
        match p.locate(&(q - v)) {
            Location::Exterior => continue,
            Location::Interior => interior.push((v.clone(), *m)),
            Location::Boundary(_) => {
                boundary.push((v.clone(), *m));
                if interiors_disjoint(p, &p.translate(v)) {
                    touching.push((v.clone(), *m));
                }
            }
        }
        all.push((v.clone(), *m));
    }
    Ok(BoundaryClassification {
        all: TranslateSet::new(all),
        interior_hits: TranslateSet::new(interior),
        boundary_hits: TranslateSet::new(boundary),
        touching: TranslateSet::new(touching),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

/// The part of a belt facet on one side of `S(G, q)`, described by the in-facet direction
/// pointing from `q` into it (orthogonal to `G`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetFragment {
    pub facet: usize,
    pub direction: Vector,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BeltLocalGeometry {
    pub point: Point,
    /// Directions spanning `S(G, q)` besides `q` itself: empty in 2D, `[g]` in 3D.
    pub plane_directions: Vec<Vector>,
    pub generator: usize,
    pub f_plus: Vec<FacetFragment>,
    pub f_minus: Vec<FacetFragment>,
    /// Subfacets parallel to `G` bounding each side away from `q`.
    pub e_plus: Option<usize>,
    pub e_minus: Option<usize>,
    /// Display only.
    pub angle_radians: f64,
    /// Exact: both sides belong to one facet, so the cross-sectional angle is `π`.
    pub angle_is_straight: bool,
}

impl BeltLocalGeometry {
    /// Membership in `S(G, q)`.
    pub fn in_plane(&self, y: &Point) -> bool {
        match self.plane_directions.first() {
            None => y == &self.point,
            Some(g) => (y - &self.point).cross3(g).is_zero(),
        }
    }

    pub fn side(&self, side: Side) -> &[FacetFragment] {
        match side {
            Side::Plus => &self.f_plus,
            Side::Minus => &self.f_minus,
        }
    }
}

fn angle_between(a: &Vector, b: &Vector) -> f64 {
    let (fa, fb) = (a.to_f64(), b.to_f64());
    let dot: f64 = fa.iter().zip(&fb).map(|(x, y)| x * y).sum();
    let cos = dot / (a.to_f64_norm() * b.to_f64_norm());
    cos.clamp(-1.0, 1.0).acos()
}

/// Belt geometry at `q` for the belt generated by subfacet `g`.
///
/// The `+` side is the fragment whose outward normal `n` and direction `d` satisfy
/// `cross(n, d) > 0` in 2D, or `(n × d) · g > 0` in 3D.
pub fn belt_local_geometry(p: &Polytope, g: usize, q: &Point) -> Result<BeltLocalGeometry> {
    check_dim(p, q)?;
    let belt = belt_of_subfacet(p, g)?;
    let not_on_belt = || TilingError::PointNotOnBelt(q.to_string());
    if !p.contains(q) {
        return Err(not_on_belt());
    }
    let gdir = generator_direction(p, g);
    let on: Vec<usize> = belt
        .facet_ids
        .iter()
        .copied()
        .filter(|&f| p.facets()[f].slack(q).is_zero())
        .collect();
    if on.is_empty() {
        return Err(not_on_belt());
    }

    let mut f_plus = Vec::new();
    let mut f_minus = Vec::new();
    let mut e_plus = None;
    let mut e_minus = None;
    for f in on {
        let facet = &p.facets()[f];
        let d = match &gdir {
            None => facet.normal.perp(),
            Some(g) => g.cross3(&facet.normal),
        };
        for (sign, side) in [(1, Side::Plus), (-1, Side::Minus)] {
            let dd = d.scale(&int(sign));
            let ahead = |v: usize| dd.dot(&(&p.vertices()[v] - q)).is_positive();
            if !facet.vertices.iter().any(|&v| ahead(v)) {
                continue;
            }
            let far = match &gdir {
                None => facet.vertices.iter().copied().find(|&v| ahead(v)),
                Some(g) => {
                    let n = facet.vertices.len();
                    (0..n).find_map(|j| {
                        let (a, b) = (facet.vertices[j], facet.vertices[(j + 1) % n]);
                        let e = p.edge_vector(a, b);
                        (e.is_parallel(g) && ahead(a))
                            .then(|| p.face_lattice().find(&[a.min(b), a.max(b)]))
                            .flatten()
                            .map(|r| r.index)
                    })
                }
            };
            let frag = FacetFragment {
                facet: f,
                direction: dd,
            };
            match side {
                Side::Plus => {
                    e_plus = e_plus.or(far);
                    f_plus.push(frag);
                }
                Side::Minus => {
                    e_minus = e_minus.or(far);
                    f_minus.push(frag);
                }
            }
        }
    }
    let angle_is_straight = f_plus.len() == 1 && f_minus.len() == 1 && f_plus[0].facet == f_minus[0].facet;
    let angle_radians = match (f_plus.first(), f_minus.first()) {
        _ if angle_is_straight => std::f64::consts::PI,
        (Some(a), Some(b)) => angle_between(&a.direction, &b.direction),
        _ => f64::NAN,
    };
    Ok(BeltLocalGeometry {
        point: q.clone(),
        plane_directions: gdir.into_iter().collect(),
        generator: belt.generator,
        f_plus,
        f_minus,
        e_plus,
        e_minus,
        angle_radians,
        angle_is_straight,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedSets {
    /// Touching translates meeting `P` only inside `S(G, q)`.
    pub s_contact: TranslateSet,
    /// Touching translates covering part of the chosen side beyond `S(G, q)`.
    pub side_set: TranslateSet,
}

pub fn refined_boundary_sets(
    p: &Polytope,
    x: &TranslateSet,
    g: usize,
    q: &Point,
    side: Side,
) -> Result<RefinedSets> {
    let geom = belt_local_geometry(p, g, q)?;
    let touching = boundary_sets(p, x, q)?.touching;
    let s_contact = touching.filter(|v| {
        intersection_vertices(p, &p.translate(v))
            .iter()
            .all(|y| geom.in_plane(y))
    });
    let base = facet_halfspaces(p);
    let side_set = touching.filter(|v| {
        let shifted = facet_halfspaces(&p.translate(v));
        geom.side(side).iter().any(|frag| {
            let facet = &p.facets()[frag.facet];
            let mut hs = base.clone();
            hs.push(HalfSpace::new(-&facet.normal, -&facet.offset));
            hs.push(HalfSpace::new(-&frag.direction, -frag.direction.dot_point(q)));
            hs.extend(shifted.iter().cloned());
            halfspace_vertices(p.dim(), &hs).iter().any(|y| !geom.in_plane(y))
        })
    });
    Ok(RefinedSets { s_contact, side_set })
}

fn probe_directions(dim: usize) -> Vec<Vector> {
    if dim == 2 {
        let raw: [[i64; 2]; 12] = [
            [1, 0], [0, 1], [-1, 0], [0, -1], [2, 1], [-1, 2], [-2, -1], [1, -2], [3, 7], [-7, 3], [-3, -7],
            [7, -3],
        ];
        raw.iter().map(|c| Vector::from_ints(c)).collect()
    } else {
        let mut out = Vec::new();
        for a in -1..=1 {
            for b in -1..=1 {
                for c in -1..=1 {
                    if (a, b, c) != (0, 0, 0) {
                        out.push(Vector::from_ints(&[a, b, c]));
                    }
                }
            }
        }
        out.extend([[1, 2, 3], [-3, 1, 2], [2, -3, 1], [-1, -2, -3]].iter().map(|c| Vector::from_ints(c)));
        out
    }
}

/// Multiplicities of `P + X` at generic points arbitrarily close to `q`, one per probe
/// direction that avoids every facet hyperplane through `q`.
pub fn local_multiplicities(p: &Polytope, x: &TranslateSet, q: &Point) -> Result<Vec<u64>> {
    check_dim(p, q)?;
    let mut out = Vec::new();
    'dirs: for d in probe_directions(p.dim()) {
        let mut eps = int(1);
        for (v, _) in x.entries() {
            let local = q - v;
            for f in p.facets() {
                let s = f.slack(&local);
                let nd = f.normal.dot(&d);
                if s.is_zero() {
                    if nd.is_zero() {
                        continue 'dirs;
                    }
                } else if s.is_negative() == nd.is_positive() && !nd.is_zero() {
                    let reach: Rational = (&s / &nd).abs();
                    if reach < eps {
                        eps = reach;
                    }
                }
            }
        }
        let y = q + &d.scale(&(eps / int(2)));
        if let Ok(m) = multiplicity_at(p, x, &y) {
            out.push(m);
        }
    }
    Ok(out)
}

/// A translate `x_j ≠ x_i` with `q ∈ ∂(P + x_j)` and interiors of `P + x_i`, `P + x_j`
/// disjoint. `None` would contradict the tiling property of the window.
pub fn disjoint_partner(p: &Polytope, x: &TranslateSet, q: &Point, designated: &Vector) -> Result<Option<Vector>> {
    check_dim(p, q)?;
    if !x.contains(designated) || !matches!(p.locate(&(q - designated)), Location::Boundary(_)) {
        return Err(TilingError::PointNotOnBoundary(q.to_string()));
    }
    let local = local_multiplicities(p, x, q)?;
    let uniform = local.first().is_some_and(|&k| k > 0 && local.iter().all(|&m| m == k));
    if !uniform {
        return Err(TilingError::PrewindowTooSmall(q.to_string()));
    }
    let body = p.translate(designated);
    Ok(x
        .vectors()
        .filter(|v| *v != designated)
        .filter(|v| matches!(p.locate(&(q - *v)), Location::Boundary(_)))
        .find(|v| interiors_disjoint(&body, &p.translate(v)))
        .cloned())
}
