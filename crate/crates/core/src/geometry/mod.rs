//! Exact rational geometry in dimensions 2 and 3.

pub mod point;
pub mod polytope;
pub mod predicates;
pub mod rational;

pub use point::{det, solve, Point, Vector};
pub use polytope::{Facet, FaceLattice, FaceRef, Location, Polytope};
pub use predicates::{
    bodies_intersect, clip_polygon, halfspace_vertices, interiors_disjoint, intersection_vertices,
    polygon_area, HalfSpace,
};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
