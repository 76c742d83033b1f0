//! Full-dimensional convex polytopes in V- and H-representation with their face lattice.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::{Signed, Zero};

use super::point::{det, Point, Vector};
use super::rational::{int, Rational};
use crate::error::{Result, TilingError};

/// A facet inequality `normal · y <= offset` with its boundary vertex cycle.
///
/// In 2D the cycle is `[tail, head]` of the edge in counter-clockwise order; in 3D it
/// runs counter-clockwise when viewed from outside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vector,
    pub offset: Rational,
    pub vertices: Vec<usize>,
}

impl Facet {
    /// `normal · y - offset`: negative inside, zero on the hyperplane.
    pub fn slack(&self, y: &Point) -> Rational {
        self.normal.dot_point(y) - &self.offset
    }
}

/// Reference to a face by dimension and index within [`FaceLattice::faces_of_dim`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceRef {
    pub dim: usize,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    faces: Vec<Vec<Vec<usize>>>,
    subfacet_facets: Vec<[usize; 2]>,
}

impl FaceLattice {
    /// Faces of dimension `k` (`0 <= k < d`), each a sorted vertex index set.
    pub fn faces_of_dim(&self, k: usize) -> &[Vec<usize>] {
        &self.faces[k]
    }

    pub fn face(&self, r: FaceRef) -> &[usize] {
        &self.faces[r.dim][r.index]
    }

    /// The two facets incident to subfacet `i`.
    pub fn facets_of_subfacet(&self, i: usize) -> [usize; 2] {
        self.subfacet_facets[i]
    }

    pub fn find(&self, vertex_set: &[usize]) -> Option<FaceRef> {
        self.faces.iter().enumerate().find_map(|(dim, list)| {
            list.iter()
                .position(|f| f.as_slice() == vertex_set)
                .map(|index| FaceRef { dim, index })
        })
    }

    pub fn count(&self, k: usize) -> usize {
        self.faces[k].len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    /// Boundary point; the reference names the minimal face containing it.
    Boundary(FaceRef),
    Exterior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Point>,
    facets: Vec<Facet>,
    faces: FaceLattice,
}

impl Polytope {
    /// Convex hull of a point cloud in dimension 2 or 3.
    pub fn from_points(points: &[Point]) -> Result<Polytope> {
        let dim = points
            .first()
            .map(Point::dim)
            .ok_or_else(|| TilingError::DegenerateInput("empty point list".into()))?;
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(TilingError::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        match dim {
            2 => hull_2d(points),
            3 => hull_3d(points),
            d => Err(TilingError::UnsupportedDimension(d)),
        }
    }

    pub fn from_int_points(points: &[&[i64]]) -> Result<Polytope> {
        let pts: Vec<Point> = points.iter().map(|c| Point::from_ints(c)).collect();
        Polytope::from_points(&pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Extreme points in lexicographic order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        &self.faces
    }

    /// The (d-2)-faces: vertices in 2D, edges in 3D.
    pub fn subfacets(&self) -> &[Vec<usize>] {
        self.faces.faces_of_dim(self.dim - 2)
    }

    /// Vertex cycle of a polygon in counter-clockwise order, starting at the lex-least vertex.
    pub fn boundary_cycle(&self) -> Vec<usize> {
        assert_eq!(self.dim, 2, "boundary_cycle is defined for polygons");
        self.facets.iter().map(|f| f.vertices[0]).collect()
    }

    /// Edge vector of a 2D facet or a 3D edge given by index into [`Polytope::subfacets`].
    pub fn edge_vector(&self, a: usize, b: usize) -> Vector {
        &self.vertices[b] - &self.vertices[a]
    }

    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.vertices[0].coords().to_vec();
        let mut hi = lo.clone();
        for v in &self.vertices[1..] {
            for (i, c) in v.coords().iter().enumerate() {
                if c < &lo[i] {
                    lo[i] = c.clone();
                }
                if c > &hi[i] {
                    hi[i] = c.clone();
                }
            }
        }
        (Point::new(lo), Point::new(hi))
    }

    /// Exact interior / boundary / exterior classification.
    pub fn locate(&self, q: &Point) -> Location {
        let mut tight = Vec::new();
        for (i, f) in self.facets.iter().enumerate() {
            let s = f.slack(q);
            if s.is_positive() {
                return Location::Exterior;
            }
            if s.is_zero() {
                tight.push(i);
            }
        }
        if tight.is_empty() {
            return Location::Interior;
        }
        let mut common: BTreeSet<usize> = self.faces.faces[self.dim - 1][tight[0]]
            .iter()
            .copied()
            .collect();
        for &f in &tight[1..] {
            let other: BTreeSet<usize> = self.faces.faces[self.dim - 1][f].iter().copied().collect();
            common = common.intersection(&other).copied().collect();
        }
        let set: Vec<usize> = common.into_iter().collect();
        let face = self
            .faces
            .find(&set)
            .expect("tight facets of a boundary point intersect in a face");
        Location::Boundary(face)
    }

    pub fn contains(&self, q: &Point) -> bool {
        self.facets.iter().all(|f| !f.slack(q).is_positive())
    }

    pub fn contains_in_interior(&self, q: &Point) -> bool {
        self.facets.iter().all(|f| f.slack(q).is_negative())
    }

    /// Exact d-volume.
    pub fn volume(&self) -> Rational {
        match self.dim {
            2 => {
                let cycle = self.boundary_cycle();
                let mut twice = Rational::zero();
                for i in 0..cycle.len() {
                    let a = self.vertices[cycle[i]].as_vector();
                    let b = self.vertices[cycle[(i + 1) % cycle.len()]].as_vector();
                    twice += a.cross2(&b);
                }
                twice.abs() / int(2)
            }
            _ => {
                let c = Point::centroid(&self.vertices);
                let mut six = Rational::zero();
                for f in &self.facets {
                    let a = &self.vertices[f.vertices[0]] - &c;
                    for w in f.vertices[1..].windows(2) {
                        let b = &self.vertices[w[0]] - &c;
                        let e = &self.vertices[w[1]] - &c;
                        six += det(&[a.clone(), b, e]);
                    }
                }
                six.abs() / int(6)
            }
        }
    }

    /// `P + t`. Combinatorics and orderings are unchanged by translation.
    pub fn translate(&self, t: &Vector) -> Polytope {
        Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v + t).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    offset: &f.offset + f.normal.dot(t),
                    vertices: f.vertices.clone(),
                })
                .collect(),
            faces: self.faces.clone(),
        }
    }

    /// `s P` for a positive rational `s`.
    pub fn scale(&self, s: &Rational) -> Polytope {
        assert!(s.is_positive(), "scale factor must be positive");
        Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.scale(s)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    offset: &f.offset * s,
                    vertices: f.vertices.clone(),
                })
                .collect(),
            faces: self.faces.clone(),
        }
    }

    /// `-P`.
    pub fn negate(&self) -> Polytope {
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| (-v.as_vector()).as_point())
            .collect();
        Polytope::from_points(&pts).expect("reflection of a valid polytope is valid")
    }
}

fn check_edge_incidence(dim: usize, facets: &[Facet], n_vertices: usize) -> Result<FaceLattice> {
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim];
    faces[0] = (0..n_vertices).map(|i| vec![i]).collect();
    faces[dim - 1] = facets
        .iter()
        .map(|f| {
            let mut s = f.vertices.clone();
            s.sort_unstable();
            s
        })
        .collect();
    let mut subfacet_facets = Vec::new();
    if dim == 2 {
        let mut by_vertex = vec![[usize::MAX; 2]; n_vertices];
        for (i, f) in facets.iter().enumerate() {
            by_vertex[f.vertices[1]][0] = i;
            by_vertex[f.vertices[0]][1] = i;
        }
        subfacet_facets = by_vertex;
    } else {
        let mut edges: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, f) in facets.iter().enumerate() {
            let n = f.vertices.len();
            for j in 0..n {
                let (a, b) = (f.vertices[j], f.vertices[(j + 1) % n]);
                edges.entry((a.min(b), a.max(b))).or_default().push(i);
            }
        }
        for (edge, inc) in &edges {
            if inc.len() != 2 {
                return Err(TilingError::InternalVerificationFailure(format!(
                    "edge {edge:?} lies in {} facets",
                    inc.len()
                )));
            }
            faces[1].push(vec![edge.0, edge.1]);
            subfacet_facets.push([inc[0], inc[1]]);
        }
    }
    Ok(FaceLattice {
        faces,
        subfacet_facets,
    })
}

/// Strictly convex counter-clockwise chain of sorted, deduplicated points.
fn monotone_chain(sorted: &[Point]) -> Vec<Point> {
    let turn = |a: &Point, b: &Point, c: &Point| (b - a).cross2(&(c - a));
    let mut lower: Vec<Point> = Vec::new();
    for p in sorted {
        while lower.len() >= 2 && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in sorted.iter().rev() {
        while upper.len() >= 2 && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn hull_2d(points: &[Point]) -> Result<Polytope> {
    let sorted: Vec<Point> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    if sorted.len() < 3 {
        return Err(TilingError::DegenerateInput("fewer than 3 distinct points".into()));
    }
    let cycle = monotone_chain(&sorted);
    if cycle.len() < 3 {
        return Err(TilingError::DegenerateInput("points are collinear".into()));
    }
    // cycle starts at the lex-least point, so vertex index i of the sorted set
    // is found by lookup.
    let vertices: Vec<Point> = cycle.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let index = |p: &Point| vertices.binary_search(p).expect("hull vertex");
    let n = cycle.len();
    let facets: Vec<Facet> = (0..n)
        .map(|i| {
            let (a, b) = (&cycle[i], &cycle[(i + 1) % n]);
            let normal = (-(b - a).perp()).primitive();
            let offset = normal.dot_point(a);
            Facet {
                normal,
                offset,
                vertices: vec![index(a), index(b)],
            }
        })
        .collect();
    let faces = check_edge_incidence(2, &facets, vertices.len())?;
    Ok(Polytope {
        dim: 2,
        vertices,
        facets,
        faces,
    })
}

/// Projects a point onto the two coordinates other than `drop`.
fn project_dropping(p: &Point, drop: usize) -> Point {
    Point::new(
        p.coords()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != drop)
            .map(|(_, c)| c.clone())
            .collect(),
    )
}

/// Coordinate index whose removal keeps the plane with this normal injective.
pub(crate) fn projection_axis(normal: &Vector) -> usize {
    (0..normal.dim())
        .max_by(|&i, &j| normal[i].abs().cmp(&normal[j].abs()).then(j.cmp(&i)))
        .expect("non-empty normal")
}

fn hull_3d(points: &[Point]) -> Result<Polytope> {
    let pts: Vec<Point> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let n = pts.len();
    let spans = (0..n).any(|i| {
        (i + 1..n).any(|j| {
            (j + 1..n).any(|k| {
                let nrm = (&pts[j] - &pts[i]).cross3(&(&pts[k] - &pts[i]));
                !nrm.is_zero() && pts.iter().any(|p| !nrm.dot(&(p - &pts[i])).is_zero())
            })
        })
    });
    if !spans {
        return Err(TilingError::DegenerateInput(
            "points do not affinely span 3 dimensions".into(),
        ));
    }

    let mut planes: Vec<(Vector, Rational)> = Vec::new();
    let mut seen: HashSet<(Vector, Rational)> = HashSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let u = &pts[j] - &pts[i];
            for k in j + 1..n {
                let raw = u.cross3(&(&pts[k] - &pts[i]));
                if raw.is_zero() {
                    continue;
                }
                let nrm = raw.primitive();
                let off = nrm.dot_point(&pts[i]);
                let neg = (-&nrm, -&off);
                if seen.contains(&(nrm.clone(), off.clone())) || seen.contains(&neg) {
                    continue;
                }
                let (mut above, mut below) = (false, false);
                for p in &pts {
                    let s = nrm.dot_point(p) - &off;
                    above |= s.is_positive();
                    below |= s.is_negative();
                    if above && below {
                        break;
                    }
                }
                let oriented = match (above, below) {
                    (false, true) => (nrm, off),
                    (true, false) => neg,
                    _ => continue,
                };
                seen.insert(oriented.clone());
                planes.push(oriented);
            }
        }
    }
    planes.sort();

    let mut cycles: Vec<Vec<Point>> = Vec::with_capacity(planes.len());
    for (nrm, off) in &planes {
        let on: Vec<Point> = pts
            .iter()
            .filter(|p| nrm.dot_point(p) == *off)
            .cloned()
            .collect();
        let axis = projection_axis(nrm);
        let mut proj: Vec<(Point, Point)> = on.iter().map(|p| (project_dropping(p, axis), p.clone())).collect();
        proj.sort();
        let flat: Vec<Point> = proj.iter().map(|(a, _)| a.clone()).collect();
        let ring2d = monotone_chain(&flat);
        let mut ring: Vec<Point> = ring2d
            .iter()
            .map(|q| proj[flat.binary_search(q).expect("projected vertex")].1.clone())
            .collect();
        let orient = (&ring[1] - &ring[0]).cross3(&(&ring[2] - &ring[1])).dot(nrm);
        if orient.is_negative() {
            ring.reverse();
        }
        cycles.push(ring);
    }

    let vertices: Vec<Point> = cycles.iter().flatten().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let facets: Vec<Facet> = planes
        .into_iter()
        .zip(cycles)
        .map(|((normal, offset), ring)| {
            let mut idx: Vec<usize> = ring
                .iter()
                .map(|p| vertices.binary_search(p).expect("facet vertex"))
                .collect();
            let start = idx.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i).unwrap_or(0);
            idx.rotate_left(start);
            Facet {
                normal,
                offset,
                vertices: idx,
            }
        })
        .collect();
    let faces = check_edge_incidence(3, &facets, vertices.len())?;
    Ok(Polytope {
        dim: 3,
        vertices,
        facets,
        faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::rat;

    fn square() -> Polytope {
        Polytope::from_int_points(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]).unwrap()
    }

    #[test]
    fn hull_drops_interior_point() {
        let pts = vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[1, 1]),
            Point::from_ints(&[0, 1]),
            Point::new(vec![rat(1, 2), rat(1, 2)]),
        ];
        let p = Polytope::from_points(&pts).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
    }

    #[test]
    fn collinear_input_is_degenerate() {
        let err = Polytope::from_int_points(&[&[0, 0], &[1, 0], &[2, 0]]).unwrap_err();
        assert!(matches!(err, TilingError::DegenerateInput(_)));
        let flat = Polytope::from_int_points(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]).unwrap_err();
        assert!(matches!(flat, TilingError::DegenerateInput(_)));
    }

    #[test]
    fn hull_drops_collinear_boundary_points() {
        let p = Polytope::from_int_points(&[&[0, 0], &[1, 0], &[2, 0], &[2, 2], &[0, 2]]).unwrap();
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn square_facets_are_outward_primitive() {
        let p = square();
        let normals: Vec<Vector> = p.facets().iter().map(|f| f.normal.clone()).collect();
        assert_eq!(
            normals,
            vec![
                Vector::from_ints(&[0, -1]),
                Vector::from_ints(&[1, 0]),
                Vector::from_ints(&[0, 1]),
                Vector::from_ints(&[-1, 0]),
            ]
        );
        assert_eq!(p.boundary_cycle(), vec![0, 2, 3, 1]);
    }

    #[test]
    fn cube_lattice() {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(Point::from_ints(&[x, y, z]));
                }
            }
        }
        let cube = Polytope::from_points(&pts).unwrap();
        let fl = cube.face_lattice();
        assert_eq!((fl.count(0), fl.count(1), fl.count(2)), (8, 12, 6));
        assert_eq!(cube.volume(), int(1));
    }

    #[test]
    fn locate_square() {
        let p = square();
        assert_eq!(p.locate(&Point::new(vec![rat(1, 2), rat(1, 2)])), Location::Interior);
        assert_eq!(p.locate(&Point::from_ints(&[2, 0])), Location::Exterior);
        match p.locate(&Point::new(vec![int(0), rat(1, 2)])) {
            Location::Boundary(f) => {
                assert_eq!(f.dim, 1);
                assert_eq!(p.face_lattice().face(f), &[0, 1]);
            }
            other => panic!("unexpected {other:?}"),
        }
        match p.locate(&Point::from_ints(&[1, 1])) {
            Location::Boundary(f) => assert_eq!(f, FaceRef { dim: 0, index: 3 }),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn octagon_area_and_counts() {
        let o7 = Polytope::from_int_points(&[
            &[1, 0], &[2, 0], &[3, 1], &[3, 2], &[2, 3], &[1, 3], &[0, 2], &[0, 1],
        ])
        .unwrap();
        assert_eq!(o7.face_lattice().count(0), 8);
        assert_eq!(o7.face_lattice().count(1), 8);
        assert_eq!(o7.volume(), int(7));
    }

    #[test]
    fn subfacet_incidence_2d() {
        let p = square();
        // vertex (1,1) is index 3; bottom/right/top/left facets are 0..4
        assert_eq!(p.face_lattice().facets_of_subfacet(3), [1, 2]);
        assert_eq!(p.face_lattice().facets_of_subfacet(0), [3, 0]);
    }
}
