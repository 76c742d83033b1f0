//! Point-reflection symmetry of a polytope and of each of its facets.

use std::collections::BTreeSet;

use crate::geometry::{Point, Polytope};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub body_center: Option<Point>,
    pub facet_centers: Vec<Option<Point>>,
    pub is_cs_with_cs_facets: bool,
}

/// Center of a finite point set invariant under point reflection, if any.
///
/// The only possible center is the centroid; it is verified by exact pairing.
pub fn point_set_center(points: &[Point]) -> Option<Point> {
    let c = Point::centroid(points);
    let set: BTreeSet<&Point> = points.iter().collect();
    points
        .iter()
        .all(|v| set.contains(&v.reflect_through(&c)))
        .then_some(c)
}

/// `c` with `2c - V(P) = V(P)`, when it exists.
pub fn symmetry_center(p: &Polytope) -> Option<Point> {
    point_set_center(p.vertices())
}

/// Center of symmetry of facet `i` inside its own affine hull.
pub fn facet_center(p: &Polytope, i: usize) -> Option<Point> {
    let facet = &p.facets()[i];
    let pts: Vec<Point> = facet.vertices.iter().map(|&v| p.vertices()[v].clone()).collect();
    if p.dim() == 2 {
        return point_set_center(&pts);
    }
    // Facet-local 2D coordinates: drop one coordinate the facet plane projects onto
    // injectively, test there, then lift the center back (the centroid commutes with
    // the affine projection).
    let axis = crate::geometry::polytope::projection_axis(&facet.normal);
    let local: Vec<Point> = pts
        .iter()
        .map(|v| {
            Point::new(
                v.coords()
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != axis)
                    .map(|(_, c)| c.clone())
                    .collect(),
            )
        })
        .collect();
    point_set_center(&local).map(|_| Point::centroid(&pts))
}

pub fn cs_facets_report(p: &Polytope) -> SymmetryReport {
    let body_center = symmetry_center(p);
    let facet_centers: Vec<Option<Point>> = (0..p.facets().len()).map(|i| facet_center(p, i)).collect();
    let is_cs_with_cs_facets = body_center.is_some() && facet_centers.iter().all(Option::is_some);
    SymmetryReport {
        body_center,
        facet_centers,
        is_cs_with_cs_facets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::geometry::{rat, Vector};

    #[test]
    fn square_center() {
        assert_eq!(
            symmetry_center(&corpus::unit_square()),
            Some(Point::new(vec![rat(1, 2), rat(1, 2)]))
        );
    }

    #[test]
    fn triangle_has_no_center() {
        assert_eq!(symmetry_center(&corpus::triangle()), None);
        assert!(!cs_facets_report(&corpus::triangle()).is_cs_with_cs_facets);
    }

    #[test]
    fn octagon_center() {
        assert_eq!(
            symmetry_center(&corpus::octagon_o7()),
            Some(Point::new(vec![rat(3, 2), rat(3, 2)]))
        );
    }

    #[test]
    fn polygons_always_have_cs_edges() {
        let r = cs_facets_report(&corpus::triangle());
        assert!(r.facet_centers.iter().all(Option::is_some));
    }

    #[test]
    fn cube_passes_octahedron_fails_on_facets() {
        assert!(cs_facets_report(&corpus::cube()).is_cs_with_cs_facets);
        let oct = cs_facets_report(&corpus::octahedron());
        assert_eq!(oct.body_center, Some(Point::from_ints(&[0, 0, 0])));
        assert!(oct.facet_centers.iter().all(Option::is_none));
        assert!(!oct.is_cs_with_cs_facets);
    }

    #[test]
    fn paired_facets_have_negated_normals() {
        for (_, p) in corpus::named() {
            if let Some(c) = symmetry_center(&p) {
                for f in p.facets() {
                    let mirror = -&f.normal;
                    let partner = p.facets().iter().find(|g| g.normal == mirror).expect("antipodal facet");
                    let reflected: BTreeSet<Point> = f.vertices.iter().map(|&v| p.vertices()[v].reflect_through(&c)).collect();
                    let actual: BTreeSet<Point> = partner.vertices.iter().map(|&v| p.vertices()[v].clone()).collect();
                    assert_eq!(reflected, actual);
                }
            }
        }
    }

    #[test]
    fn center_moves_with_translation() {
        let t = Vector::new(vec![rat(-7, 3), rat(5, 2), rat(1, 9)]);
        let p = corpus::truncated_octahedron();
        let c = symmetry_center(&p).unwrap();
        assert_eq!(symmetry_center(&p.translate(&t)), Some(&c + &t));
    }
}
