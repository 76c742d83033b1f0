//! Belts: the facets containing a translate of a given subfacet, and the four-or-six test.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Result, TilingError};
use crate::geometry::{Polytope, Rational, Vector};
use crate::symmetry::cs_facets_report;

/// Translation class of a subfacet.
///
/// All vertices of a polygon are translates of each other. A 3D edge is identified by its
/// line direction and its length along that direction, so `G` and `-G` coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubfacetClass {
    Point,
    Segment { direction: Vector, length: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Belt {
    /// Lowest-index subfacet of the class.
    pub generator: usize,
    /// Facets of the belt in cyclic order around the generator direction.
    pub facet_ids: Vec<usize>,
    pub size: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BeltVerdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeltCertificate {
    pub verdict: BeltVerdict,
    /// `(generator subfacet, belt size)` per class.
    pub belts: Vec<(usize, usize)>,
    pub witness: Option<Belt>,
}

pub fn subfacet_class(p: &Polytope, subfacet: usize) -> SubfacetClass {
    if p.dim() == 2 {
        return SubfacetClass::Point;
    }
    let e = &p.subfacets()[subfacet];
    segment_class(&p.edge_vector(e[0], e[1]))
}

fn segment_class(edge: &Vector) -> SubfacetClass {
    let direction = edge.line_direction();
    let i = (0..direction.dim())
        .find(|&i| !direction[i].is_zero())
        .expect("edge has non-zero length");
    SubfacetClass::Segment {
        length: (&edge[i] / &direction[i]).abs(),
        direction,
    }
}

/// Direction of the generator line in 3D, `None` in 2D.
pub fn generator_direction(p: &Polytope, subfacet: usize) -> Option<Vector> {
    match subfacet_class(p, subfacet) {
        SubfacetClass::Point => None,
        SubfacetClass::Segment { direction, .. } => Some(direction),
    }
}

/// Integer basis `(u, w)` of the plane orthogonal to `g`, with `(u × w) · g > 0`.
pub(crate) fn orthogonal_basis(g: &Vector) -> (Vector, Vector) {
    let k = (0..3)
        .min_by(|&i, &j| g[i].abs().cmp(&g[j].abs()).then(i.cmp(&j)))
        .expect("3 coordinates");
    let mut unit = vec![0i64; 3];
    unit[k] = 1;
    let u = g.cross3(&Vector::from_ints(&unit));
    let w = g.cross3(&u);
    (u, w)
}

fn half(v: &Vector) -> u8 {
    if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
        0
    } else {
        1
    }
}

/// Counter-clockwise angular order of non-zero 2D vectors starting at the positive x-axis.
pub(crate) fn cmp_angle(a: &Vector, b: &Vector) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.cross2(b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Facets of `p` containing some subfacet of `class`.
fn facets_with_class(p: &Polytope, class: &SubfacetClass) -> Vec<usize> {
    match class {
        SubfacetClass::Point => (0..p.facets().len()).collect(),
        SubfacetClass::Segment { .. } => p
            .facets()
            .iter()
            .enumerate()
            .filter(|(_, f)| {
                let n = f.vertices.len();
                (0..n).any(|j| {
                    let e = p.edge_vector(f.vertices[j], f.vertices[(j + 1) % n]);
                    &segment_class(&e) == class
                })
            })
            .map(|(i, _)| i)
            .collect(),
    }
}

/// The belt determined by one subfacet, without checking symmetry preconditions.
pub fn belt_of_subfacet(p: &Polytope, subfacet: usize) -> Result<Belt> {
    if subfacet >= p.subfacets().len() {
        return Err(TilingError::NoSuchSubfacet(subfacet));
    }
    let class = subfacet_class(p, subfacet);
    let generator = (0..p.subfacets().len())
        .find(|&i| subfacet_class(p, i) == class)
        .expect("subfacet belongs to its own class");
    let mut facet_ids = facets_with_class(p, &class);
    if let SubfacetClass::Segment { direction, .. } = &class {
        let (u, w) = orthogonal_basis(direction);
        let key = |f: usize| {
            let n = &p.facets()[f].normal;
            Vector::new(vec![n.dot(&u), n.dot(&w)])
        };
        facet_ids.sort_by(|&a, &b| cmp_angle(&key(a), &key(b)));
    }
    let size = facet_ids.len();
    Ok(Belt {
        generator,
        facet_ids,
        size,
    })
}

/// One belt per translation class of subfacets.
pub fn belts_of(p: &Polytope) -> Result<Vec<Belt>> {
    if !cs_facets_report(p).is_cs_with_cs_facets {
        return Err(TilingError::NotCentrallySymmetric);
    }
    let mut first_of_class: BTreeMap<SubfacetClass, usize> = BTreeMap::new();
    for i in 0..p.subfacets().len() {
        first_of_class.entry(subfacet_class(p, i)).or_insert(i);
    }
    let mut generators: Vec<usize> = first_of_class.into_values().collect();
    generators.sort_unstable();
    generators.into_iter().map(|g| belt_of_subfacet(p, g)).collect()
}

/// Passes iff every belt has four or six facets.
pub fn belt_condition(p: &Polytope) -> Result<BeltCertificate> {
    let belts = belts_of(p)?;
    let witness = belts.iter().find(|b| b.size != 4 && b.size != 6).cloned();
    Ok(BeltCertificate {
        verdict: if witness.is_some() {
            BeltVerdict::Fail
        } else {
            BeltVerdict::Pass
        },
        belts: belts.iter().map(|b| (b.generator, b.size)).collect(),
        witness,
    })
}
