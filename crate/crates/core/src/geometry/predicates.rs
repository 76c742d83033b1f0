//! Exact two-body predicates and small H-representation utilities.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::point::{solve, Point, Vector};
use super::polytope::Polytope;
use super::rational::{int, Rational};

/// Directions that include a weakly separating axis whenever one exists: facet normals
/// of both bodies and, in 3D, cross products of their edge directions.
fn candidate_axes(p: &Polytope, q: &Polytope) -> Vec<Vector> {
    let mut axes: BTreeSet<Vector> = p
        .facets()
        .iter()
        .chain(q.facets())
        .map(|f| f.normal.line_direction())
        .collect();
    if p.dim() == 3 {
        let dirs = |poly: &Polytope| -> BTreeSet<Vector> {
            poly.subfacets()
                .iter()
                .map(|e| poly.edge_vector(e[0], e[1]).line_direction())
                .collect()
        };
        let (dp, dq) = (dirs(p), dirs(q));
        for a in &dp {
            for b in &dq {
                let c = a.cross3(b);
                if !c.is_zero() {
                    axes.insert(c.line_direction());
                }
            }
        }
    }
    axes.into_iter().collect()
}

fn extent(p: &Polytope, axis: &Vector) -> (Rational, Rational) {
    let mut vals = p.vertices().iter().map(|v| axis.dot_point(v));
    let first = vals.next().expect("polytope has vertices");
    vals.fold((first.clone(), first), |(lo, hi), v| {
        if v < lo {
            (v, hi)
        } else if v > hi {
            (lo, v)
        } else {
            (lo, hi)
        }
    })
}

/// `true` iff `int(P) ∩ int(Q) = ∅`.
pub fn interiors_disjoint(p: &Polytope, q: &Polytope) -> bool {
    assert_eq!(p.dim(), q.dim(), "dimension mismatch");
    candidate_axes(p, q).iter().any(|axis| {
        let (plo, phi) = extent(p, axis);
        let (qlo, qhi) = extent(q, axis);
        phi <= qlo || qhi <= plo
    })
}

/// `true` iff the closed bodies meet.
pub fn bodies_intersect(p: &Polytope, q: &Polytope) -> bool {
    !candidate_axes(p, q).iter().any(|axis| {
        let (plo, phi) = extent(p, axis);
        let (qlo, qhi) = extent(q, axis);
        phi < qlo || qhi < plo
    })
}

/// A half-space `normal · y <= offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpace {
    pub normal: Vector,
    pub offset: Rational,
}

impl HalfSpace {
    pub fn new(normal: Vector, offset: Rational) -> Self {
        Self { normal, offset }
    }

    pub fn contains(&self, y: &Point) -> bool {
        self.normal.dot_point(y) <= self.offset
    }
}

pub fn facet_halfspaces(p: &Polytope) -> Vec<HalfSpace> {
    p.facets()
        .iter()
        .map(|f| HalfSpace::new(f.normal.clone(), f.offset.clone()))
        .collect()
}

/// Vertices of the bounded polyhedron `{y : all constraints hold}` by exhaustive basis
/// enumeration. Returns an empty list for an empty set.
pub fn halfspace_vertices(dim: usize, constraints: &[HalfSpace]) -> Vec<Point> {
    let mut out = BTreeSet::new();
    let n = constraints.len();
    let mut visit = |idx: &[usize]| {
        let rows: Vec<Vector> = idx.iter().map(|&i| constraints[i].normal.clone()).collect();
        let rhs: Vec<Rational> = idx.iter().map(|&i| constraints[i].offset.clone()).collect();
        if let Some(x) = solve(&rows, &rhs) {
            let y = x.as_point();
            if constraints.iter().all(|h| h.contains(&y)) {
                out.insert(y);
            }
        }
    };
    match dim {
        2 => {
            for i in 0..n {
                for j in i + 1..n {
                    visit(&[i, j]);
                }
            }
        }
        3 => {
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        visit(&[i, j, k]);
                    }
                }
            }
        }
        d => panic!("halfspace enumeration in dimension {d} is not supported"),
    }
    out.into_iter().collect()
}

/// Vertices of `P ∩ Q`.
pub fn intersection_vertices(p: &Polytope, q: &Polytope) -> Vec<Point> {
    let mut hs = facet_halfspaces(p);
    hs.extend(facet_halfspaces(q));
    halfspace_vertices(p.dim(), &hs)
}

/// Clips a convex polygon, given as a vertex cycle, to `normal · y <= offset`.
pub fn clip_polygon(cycle: &[Point], normal: &Vector, offset: &Rational) -> Vec<Point> {
    let n = cycle.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let (a, b) = (&cycle[i], &cycle[(i + 1) % n]);
        let sa = normal.dot_point(a) - offset;
        let sb = normal.dot_point(b) - offset;
        if !sa.is_positive() {
            out.push(a.clone());
        }
        if (sa.is_negative() && sb.is_positive()) || (sa.is_positive() && sb.is_negative()) {
            let t = &sa / (&sa - &sb);
            out.push(a + &(b - a).scale(&t));
        }
    }
    out
}

/// Absolute area of a polygon given as a vertex cycle.
pub fn polygon_area(cycle: &[Point]) -> Rational {
    let n = cycle.len();
    if n < 3 {
        return Rational::zero();
    }
    let mut twice = Rational::zero();
    for i in 0..n {
        twice += cycle[i].as_vector().cross2(&cycle[(i + 1) % n].as_vector());
    }
    twice.abs() / int(2)
}
