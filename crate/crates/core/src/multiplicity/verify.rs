//! Multiplicity counting and k-fold lattice tiling verification.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::arrangement::{trapezoids, Segment, Trapezoid};
use super::lattice::{Lattice, TranslateSet};
use crate::error::{Result, TilingError};
use crate::geometry::{int, Location, Point, Polytope, Rational, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Constant {
        k: u64,
    },
    NonConstant {
        witness_lo: Point,
        witness_hi: Point,
        values: (u64, u64),
    },
    NotCovering {
        witness: Point,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exact2D,
    Sampled3D { samples: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeIdentity {
    pub volume: Rational,
    pub det: Rational,
    /// `volume = k · det` for a constant verdict; `false` otherwise.
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub verdict: Verdict,
    pub method: Method,
    pub volume_identity: VolumeIdentity,
    /// Number of exact sample points evaluated.
    pub evaluated: usize,
}

impl MultiplicityReport {
    pub fn constant_k(&self) -> Option<u64> {
        match self.verdict {
            Verdict::Constant { k } => Some(k),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Sample count for 3D verification.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 10_000,
            seed: 0,
        }
    }
}

/// Number of bodies of `P + X` (with multiplicity) containing `q` in their interior.
pub fn multiplicity_at(p: &Polytope, x: &TranslateSet, q: &Point) -> Result<u64> {
    if q.dim() != p.dim() {
        return Err(TilingError::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    let mut total = 0;
    for (v, m) in x.entries() {
        match p.locate(&(q - v)) {
            Location::Interior => total += m,
            Location::Boundary(_) => return Err(TilingError::NonGenericPoint(q.to_string())),
            Location::Exterior => {}
        }
    }
    Ok(total)
}

/// Closed half-open fundamental parallelepiped corners of a basis.
fn fundamental_box(basis: &[Vector]) -> (Point, Point) {
    let d = basis.len();
    let mut lo = vec![Rational::zero(); d];
    let mut hi = vec![Rational::zero(); d];
    for b in basis {
        for i in 0..d {
            if b[i] < Rational::zero() {
                lo[i] += &b[i];
            } else {
                hi[i] += &b[i];
            }
        }
    }
    (Point::new(lo), Point::new(hi))
}

/// Lattice translates whose bounding box meets the bounding box of the fundamental domain.
fn translates_for_domain(p: &Polytope, lattice: &Lattice) -> TranslateSet {
    let (flo, fhi) = fundamental_box(lattice.basis());
    let (plo, phi) = p.bounding_box();
    let d = p.dim();
    let lo = Point::new((0..d).map(|i| &flo[i] - &phi[i]).collect());
    let hi = Point::new((0..d).map(|i| &fhi[i] - &plo[i]).collect());
    TranslateSet::from_vectors(lattice.points_in_box(&lo, &hi))
}

fn parallelogram(basis: &[Vector]) -> Polytope {
    let o = Point::zero(2);
    let a = &o + &basis[0];
    let c = &a + &basis[1];
    let b = &o + &basis[1];
    Polytope::from_points(&[o, a, c, b]).expect("non-singular basis spans a parallelogram")
}

fn summarize(samples: &[(Point, u64)], method: Method, p: &Polytope, lattice: &Lattice) -> MultiplicityReport {
    let volume = p.volume();
    let det = lattice.abs_det();
    let uncovered = samples.iter().find(|(_, m)| *m == 0);
    let lo = samples.iter().min_by_key(|(_, m)| *m);
    let hi = samples.iter().max_by_key(|(_, m)| *m);
    let verdict = match (uncovered, lo, hi) {
        (Some((w, _)), _, _) => Verdict::NotCovering { witness: w.clone() },
        (None, Some(lo), Some(hi)) if lo.1 != hi.1 => Verdict::NonConstant {
            witness_lo: lo.0.clone(),
            witness_hi: hi.0.clone(),
            values: (lo.1, hi.1),
        },
        (None, Some(lo), _) => Verdict::Constant { k: lo.1 },
        (None, None, _) => Verdict::NotCovering {
            witness: Point::zero(p.dim()),
        },
    };
    let consistent = match verdict {
        Verdict::Constant { k } => int(k as i64) * &det == volume,
        _ => false,
    };
    MultiplicityReport {
        verdict,
        method,
        volume_identity: VolumeIdentity {
            volume,
            det,
            consistent,
        },
        evaluated: samples.len(),
    }
}

/// Arrangement of the fundamental parallelogram and all translate edges near it, with the
/// multiplicity of every trapezoid inside the parallelogram.
pub struct DomainArrangement {
    pub segments: Vec<Segment>,
    pub cells: Vec<(Trapezoid, u64)>,
    pub domain: Polytope,
    pub translates: TranslateSet,
}

pub fn domain_arrangement(p: &Polytope, lattice: &Lattice) -> Result<DomainArrangement> {
    if p.dim() != 2 || lattice.dim() != 2 {
        return Err(TilingError::UnsupportedDimension(p.dim().max(lattice.dim())));
    }
    let reduced = lattice.reduced();
    let domain = parallelogram(reduced.basis());
    let translates = translates_for_domain(p, &reduced);
    let (flo, fhi) = domain.bounding_box();

    let cycle = p.boundary_cycle();
    let mut segments = Vec::new();
    for (v, _) in translates.entries() {
        for i in 0..cycle.len() {
            let a = &p.vertices()[cycle[i]] + v;
            let b = &p.vertices()[cycle[(i + 1) % cycle.len()]] + v;
            let seg = Segment::new(a, b);
            let (ylo, yhi) = if seg.a[1] <= seg.b[1] { (&seg.a[1], &seg.b[1]) } else { (&seg.b[1], &seg.a[1]) };
            if seg.b[0] < flo[0] || seg.a[0] > fhi[0] || yhi < &flo[1] || ylo > &fhi[1] {
                continue;
            }
            segments.push(seg);
        }
    }
    let dcycle = domain.boundary_cycle();
    for i in 0..dcycle.len() {
        segments.push(Segment::new(
            domain.vertices()[dcycle[i]].clone(),
            domain.vertices()[dcycle[(i + 1) % dcycle.len()]].clone(),
        ));
    }

    let cells: Vec<Trapezoid> = trapezoids(&segments, &flo[0], &fhi[0])
        .into_iter()
        .filter(|t| domain.contains_in_interior(&t.sample))
        .collect();
    let evaluated: Vec<Result<(Trapezoid, u64)>> = cells
        .into_par_iter()
        .map(|t| {
            let m = multiplicity_at(p, &translates, &t.sample).map_err(|e| {
                TilingError::InternalVerificationFailure(format!("arrangement sample not generic: {e}"))
            })?;
            Ok((t, m))
        })
        .collect();
    Ok(DomainArrangement {
        segments,
        cells: evaluated.into_iter().collect::<Result<_>>()?,
        domain,
        translates,
    })
}

fn verify_2d(p: &Polytope, lattice: &Lattice) -> Result<MultiplicityReport> {
    let arr = domain_arrangement(p, lattice)?;
    let samples: Vec<(Point, u64)> = arr.cells.into_iter().map(|(t, m)| (t.sample, m)).collect();
    Ok(summarize(&samples, Method::Exact2D, p, lattice))
}

fn verify_3d(p: &Polytope, lattice: &Lattice, options: &VerifyOptions) -> Result<MultiplicityReport> {
    let reduced = lattice.reduced();
    let translates = translates_for_domain(p, &reduced);
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    // odd denominator keeps samples off the many half-integer facet planes
    let denom: i64 = (1 << 20) + 1;
    let mut points = Vec::with_capacity(options.samples);
    let mut attempts = 0usize;
    while points.len() < options.samples {
        attempts += 1;
        if attempts > options.samples.saturating_mul(20) + 100 {
            return Err(TilingError::InternalVerificationFailure(
                "could not draw generic sample points".into(),
            ));
        }
        let t: Vec<Rational> = (0..3)
            .map(|_| Rational::new(rng.gen_range(1..denom).into(), denom.into()))
            .collect();
        let mut q = Point::zero(3);
        for (b, c) in reduced.basis().iter().zip(&t) {
            q = &q + &b.scale(c);
        }
        match multiplicity_at(p, &translates, &q) {
            Ok(_) => points.push(q),
            Err(TilingError::NonGenericPoint(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let samples: Vec<(Point, u64)> = points
        .into_par_iter()
        .map(|q| {
            let m = multiplicity_at(p, &translates, &q).expect("sample checked generic");
            (q, m)
        })
        .collect();
    Ok(summarize(
        &samples,
        Method::Sampled3D {
            samples: options.samples,
        },
        p,
        lattice,
    ))
}

/// Decides whether `P + Λ` is a k-fold tiling: exactly in 2D, by exact per-point sampling in 3D.
pub fn verify_lattice_tiling(p: &Polytope, lattice: &Lattice) -> Result<MultiplicityReport> {
    verify_lattice_tiling_with(p, lattice, &VerifyOptions::default())
}

pub fn verify_lattice_tiling_with(
    p: &Polytope,
    lattice: &Lattice,
    options: &VerifyOptions,
) -> Result<MultiplicityReport> {
    if p.dim() != lattice.dim() {
        return Err(TilingError::DimensionMismatch {
            expected: p.dim(),
            found: lattice.dim(),
        });
    }
    match p.dim() {
        2 => verify_2d(p, lattice),
        3 => verify_3d(p, lattice, options),
        d => Err(TilingError::UnsupportedDimension(d)),
    }
}

/// Cheap rejection: multiplicities at a few generic points of the fundamental domain.
/// `false` proves the lattice does not give a `k`-fold tiling; `true` proves nothing.
pub(crate) fn quick_screen(p: &Polytope, lattice: &Lattice, k: u64) -> bool {
    let reduced = lattice.reduced();
    let fractions = [(1, 7), (3, 11), (5, 13), (9, 17), (12, 19), (2, 23), (20, 29), (14, 31)];
    for (i, &(a, b)) in fractions.iter().enumerate() {
        let (c, d) = fractions[(i + 3) % fractions.len()];
        let mut q = &Point::zero(2) + &reduced.basis()[0].scale(&crate::geometry::rat(a, b));
        q = &q + &reduced.basis()[1].scale(&crate::geometry::rat(c, d));
        let (lo, hi) = p.bounding_box();
        let near = TranslateSet::from_vectors(reduced.points_in_box(
            &Point::new((0..2).map(|j| &q[j] - &hi[j]).collect()),
            &Point::new((0..2).map(|j| &q[j] - &lo[j]).collect()),
        ));
        match multiplicity_at(p, &near, &q) {
            Ok(m) if m != k => return false,
            _ => {}
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::geometry::rat;

    fn naive_count(p: &Polytope, x: &TranslateSet, q: &Point) -> u64 {
        // independent oracle: strict side tests against raw CCW vertex cycles
        let cycle: Vec<Point> = p.boundary_cycle().iter().map(|&i| p.vertices()[i].clone()).collect();
        x.entries()
            .iter()
            .filter(|(v, _)| {
                (0..cycle.len()).all(|i| {
                    let a = &cycle[i] + v;
                    let b = &cycle[(i + 1) % cycle.len()] + v;
                    (&b - &a).cross2(&(q - &a)) > Rational::zero()
                })
            })
            .map(|(_, m)| *m)
            .sum()
    }

    #[test]
    fn multiplicity_examples() {
        let sq = corpus::unit_square();
        let origin = TranslateSet::from_vectors([Vector::zero(2)]);
        let c = Point::new(vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(multiplicity_at(&sq, &origin, &c).unwrap(), 1);
        assert_eq!(multiplicity_at(&sq, &origin, &Point::from_ints(&[5, 5])).unwrap(), 0);
        let big = corpus::rectangle(2, 2);
        let window = TranslateSet::from_vectors(
            Lattice::integer(2).points_in_box(&Point::from_ints(&[-3, -3]), &Point::from_ints(&[3, 3])),
        );
        assert_eq!(multiplicity_at(&big, &window, &c).unwrap(), 4);
        assert_eq!(naive_count(&big, &window, &c), 4);
        assert!(matches!(
            multiplicity_at(&sq, &origin, &Point::new(vec![int(1), rat(1, 2)])),
            Err(TilingError::NonGenericPoint(_))
        ));
    }

    #[test]
    fn multiset_multiplicities_count() {
        let sq = corpus::unit_square();
        let x = TranslateSet::new(vec![(Vector::zero(2), 2)]);
        assert_eq!(multiplicity_at(&sq, &x, &Point::new(vec![rat(1, 2), rat(1, 3)])).unwrap(), 2);
    }

    #[test]
    fn verifier_examples() {
        let z2 = Lattice::integer(2);
        let r = verify_lattice_tiling(&corpus::unit_square(), &z2).unwrap();
        assert_eq!(r.verdict, Verdict::Constant { k: 1 });
        assert!(r.volume_identity.consistent);
        let r = verify_lattice_tiling(&corpus::rectangle(2, 2), &z2).unwrap();
        assert_eq!(r.verdict, Verdict::Constant { k: 4 });
        assert!(r.volume_identity.consistent);
        let gap = Lattice::from_ints(&[&[2, 0], &[0, 1]]).unwrap();
        let r = verify_lattice_tiling(&corpus::unit_square(), &gap).unwrap();
        assert_eq!(
            r.verdict,
            Verdict::NotCovering {
                witness: Point::new(vec![rat(3, 2), rat(1, 2)])
            }
        );
        assert!(!r.volume_identity.consistent);
    }

    #[test]
    fn octagon_is_sevenfold() {
        let r = verify_lattice_tiling(&corpus::octagon_o7(), &Lattice::integer(2)).unwrap();
        assert_eq!(r.verdict, Verdict::Constant { k: 7 });
        assert!(r.volume_identity.consistent);
    }

    #[test]
    fn non_constant_detected() {
        let l = Lattice::new(vec![Vector::new(vec![rat(2, 3), int(0)]), Vector::from_ints(&[0, 1])]).unwrap();
        let r = verify_lattice_tiling(&corpus::unit_square(), &l).unwrap();
        match r.verdict {
            Verdict::NonConstant { values, witness_lo, witness_hi } => {
                assert_eq!(values, (1, 2));
                let all = TranslateSet::from_vectors(
                    l.points_in_box(&Point::from_ints(&[-2, -2]), &Point::from_ints(&[2, 2])),
                );
                assert_eq!(naive_count(&corpus::unit_square(), &all, &witness_lo), 1);
                assert_eq!(naive_count(&corpus::unit_square(), &all, &witness_hi), 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cube_sampled() {
        let opts = VerifyOptions { samples: 200, seed: 7 };
        let r = verify_lattice_tiling_with(&corpus::cuboid(2, 1, 1), &Lattice::integer(3), &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Constant { k: 2 });
        assert_eq!(r.method, Method::Sampled3D { samples: 200 });
        assert!(r.volume_identity.consistent);
        let r2 = verify_lattice_tiling_with(&corpus::cuboid(2, 1, 1), &Lattice::integer(3), &opts).unwrap();
        assert_eq!(r, r2);
    }
}
