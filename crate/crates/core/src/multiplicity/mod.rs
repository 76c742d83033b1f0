//! k-fold tiling verification and the boundary-classification probes.

pub mod arrangement;
pub mod lattice;
pub mod probes;
pub mod verify;

pub use lattice::{Lattice, TranslateSet};
pub use probes::{
    belt_local_geometry, boundary_sets, disjoint_partner, local_multiplicities, refined_boundary_sets,
    BeltLocalGeometry, BoundaryClassification, FacetFragment, RefinedSets, Side,
};
pub use verify::{
    multiplicity_at, verify_lattice_tiling, verify_lattice_tiling_with, Method, MultiplicityReport,
    Verdict, VerifyOptions, VolumeIdentity,
};
