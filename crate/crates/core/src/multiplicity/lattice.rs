//! Lattices and finite translate multisets.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Result, TilingError};
use crate::geometry::rational::lcm_of_denominators;
use crate::geometry::{det, solve, Point, Polytope, Rational, Vector};

/// A full-rank lattice given by basis vectors.
///
/// The supplied basis is kept as-is; equality compares Hermite normal forms.
#[derive(Clone, Debug)]
pub struct Lattice {
    basis: Vec<Vector>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.canonical().basis == other.canonical().basis
    }
}

impl Eq for Lattice {}

impl Lattice {
    pub fn new(basis: Vec<Vector>) -> Result<Lattice> {
        let d = basis.len();
        if !(2..=3).contains(&d) {
            return Err(TilingError::UnsupportedDimension(d));
        }
        if let Some(v) = basis.iter().find(|v| v.dim() != d) {
            return Err(TilingError::DimensionMismatch {
                expected: d,
                found: v.dim(),
            });
        }
        if det(&basis).is_zero() {
            return Err(TilingError::DegenerateInput("lattice basis is singular".into()));
        }
        Ok(Lattice { basis })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Lattice> {
        Lattice::new(rows.iter().map(|r| Vector::from_ints(r)).collect())
    }

    /// `ℤ^d`.
    pub fn integer(dim: usize) -> Lattice {
        let basis = (0..dim)
            .map(|i| {
                let mut c = vec![0i64; dim];
                c[i] = 1;
                Vector::from_ints(&c)
            })
            .collect();
        Lattice { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn det(&self) -> Rational {
        det(&self.basis)
    }

    pub fn abs_det(&self) -> Rational {
        self.det().abs()
    }

    pub fn scale(&self, s: &Rational) -> Lattice {
        Lattice {
            basis: self.basis.iter().map(|b| b.scale(s)).collect(),
        }
    }

    fn column_rows(&self) -> Vec<Vector> {
        let d = self.dim();
        (0..d)
            .map(|i| Vector::new(self.basis.iter().map(|b| b[i].clone()).collect()))
            .collect()
    }

    /// Coefficients `c` with `x = Σ c_i b_i`.
    pub fn coordinates_of(&self, x: &Vector) -> Vector {
        solve(&self.column_rows(), x.coords()).expect("basis is non-singular")
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.coordinates_of(x).coords().iter().all(|c| c.is_integer())
    }

    /// Hermite normal form: upper-triangular rows with positive pivots and reduced
    /// entries above each pivot. Unique per lattice.
    pub fn canonical(&self) -> Lattice {
        let denom = lcm_of_denominators(self.basis.iter().flat_map(|b| b.coords()));
        let scale = Rational::from_integer(denom.clone());
        let mut m: Vec<Vec<BigInt>> = self
            .basis
            .iter()
            .map(|b| b.coords().iter().map(|c| (c * &scale).to_integer()).collect())
            .collect();
        hermite_rows(&mut m);
        Lattice {
            basis: m
                .into_iter()
                .map(|row| {
                    Vector::new(
                        row.into_iter()
                            .map(|v| Rational::new(v, denom.clone()))
                            .collect(),
                    )
                })
                .collect(),
        }
    }

    /// A basis with short, nearly orthogonal vectors (pairwise Gauss reduction).
    pub fn reduced(&self) -> Lattice {
        let mut b = self.basis.clone();
        loop {
            let mut changed = false;
            for i in 0..b.len() {
                for j in 0..b.len() {
                    if i == j {
                        continue;
                    }
                    let nj = b[j].norm_squared();
                    let mu = (b[i].dot(&b[j]) / &nj).round();
                    if !mu.is_zero() {
                        let candidate = &b[i] - &b[j].scale(&mu);
                        if candidate.norm_squared() < b[i].norm_squared() {
                            b[i] = candidate;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Lattice { basis: b }
    }

    /// Lattice points inside the closed box `[lo, hi]`.
    pub fn points_in_box(&self, lo: &Point, hi: &Point) -> Vec<Vector> {
        let red = self.reduced();
        let d = self.dim();
        let mut cmin: Vec<Option<BigInt>> = vec![None; d];
        let mut cmax: Vec<Option<BigInt>> = vec![None; d];
        for mask in 0..(1usize << d) {
            let corner = Vector::new(
                (0..d)
                    .map(|i| if mask >> i & 1 == 1 { hi[i].clone() } else { lo[i].clone() })
                    .collect(),
            );
            let c = red.coordinates_of(&corner);
            for i in 0..d {
                let f = c[i].floor().to_integer();
                let cl = c[i].ceil().to_integer();
                if cmin[i].as_ref().is_none_or(|m| &f < m) {
                    cmin[i] = Some(f);
                }
                if cmax[i].as_ref().is_none_or(|m| &cl > m) {
                    cmax[i] = Some(cl);
                }
            }
        }
        let ranges: Vec<(BigInt, BigInt)> = cmin
            .into_iter()
            .zip(cmax)
            .map(|(a, b)| (a.expect("bound"), b.expect("bound")))
            .collect();
        let mut out = Vec::new();
        let mut idx: Vec<BigInt> = ranges.iter().map(|r| r.0.clone()).collect();
        'outer: loop {
            let mut x = Vector::zero(d);
            for (i, c) in idx.iter().enumerate() {
                x = &x + &red.basis[i].scale(&Rational::from_integer(c.clone()));
            }
            if (0..d).all(|i| lo[i] <= x[i] && x[i] <= hi[i]) {
                out.push(x);
            }
            for i in 0..d {
                if idx[i] < ranges[i].1 {
                    idx[i] += 1;
                    continue 'outer;
                }
                idx[i] = ranges[i].0.clone();
            }
            break;
        }
        out.sort();
        out
    }
}

/// In-place row Hermite normal form of a full-rank square integer matrix.
pub(crate) fn hermite_rows(m: &mut [Vec<BigInt>]) {
    let d = m.len();
    for col in 0..d {
        loop {
            let pivot = (col..d)
                .filter(|&r| !m[r][col].is_zero())
                .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()))
                .expect("full rank");
            m.swap(col, pivot);
            let mut done = true;
            for r in col + 1..d {
                if !m[r][col].is_zero() {
                    let q = m[r][col].div_floor(&m[col][col]);
                    for c in 0..d {
                        let delta = &q * &m[col][c];
                        m[r][c] -= delta;
                    }
                    done &= m[r][col].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if m[col][col].is_negative() {
            for c in 0..d {
                m[col][c] = -&m[col][c];
            }
        }
        for r in 0..col {
            let q = m[r][col].div_floor(&m[col][col]);
            if !q.is_zero() {
                for c in 0..d {
                    let delta = &q * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
}

/// Rows `(a, b), (0, c)` scaled by `1/denominator`, for all `a·c = index`, `0 <= b < c`:
/// every sublattice of `(1/denominator)ℤ²` with that index, each once.
pub fn sublattices_2d(denominator: &BigInt, index: u64) -> Vec<Lattice> {
    let mut out = Vec::new();
    for a in 1..=index {
        if !index.is_multiple_of(a) {
            continue;
        }
        let c = index / a;
        for b in 0..c {
            let row = |x: u64, y: u64| {
                Vector::new(vec![
                    Rational::new(BigInt::from(x), denominator.clone()),
                    Rational::new(BigInt::from(y), denominator.clone()),
                ])
            };
            out.push(Lattice {
                basis: vec![row(a, b), row(0, c)],
            });
        }
    }
    out
}

/// A finite multiset of translation vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TranslateSet {
    entries: Vec<(Vector, u64)>,
}

impl TranslateSet {
    /// Merges repeated vectors by adding multiplicities. Zero multiplicities are dropped.
    pub fn new(entries: impl IntoIterator<Item = (Vector, u64)>) -> TranslateSet {
        let mut acc: BTreeMap<Vector, u64> = BTreeMap::new();
        for (v, m) in entries {
            if m > 0 {
                *acc.entry(v).or_insert(0) += m;
            }
        }
        TranslateSet {
            entries: acc.into_iter().collect(),
        }
    }

    pub fn from_vectors(vectors: impl IntoIterator<Item = Vector>) -> TranslateSet {
        TranslateSet::new(vectors.into_iter().map(|v| (v, 1)))
    }

    pub fn entries(&self) -> &[(Vector, u64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity_of(&self, v: &Vector) -> u64 {
        self.entries
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.multiplicity_of(v) > 0
    }

    pub fn contains_origin(&self) -> bool {
        self.entries.first().map(|(v, _)| v.dim()).is_some_and(|d| self.contains(&Vector::zero(d)))
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Vector> {
        self.entries.iter().map(|(v, _)| v)
    }

    pub fn filter(&self, mut keep: impl FnMut(&Vector) -> bool) -> TranslateSet {
        TranslateSet {
            entries: self.entries.iter().filter(|(v, _)| keep(v)).cloned().collect(),
        }
    }

    /// Lattice vectors `x` such that the bounding box of `P + x` meets the box of
    /// half-width `margin` around `q`. Always contains every `x` with `q ∈ P + x`.
    pub fn lattice_near(lattice: &Lattice, p: &Polytope, q: &Point, margin: &Rational) -> TranslateSet {
        let (plo, phi) = p.bounding_box();
        let d = p.dim();
        let lo = Point::new((0..d).map(|i| &q[i] - margin - &phi[i]).collect());
        let hi = Point::new((0..d).map(|i| &q[i] + margin - &plo[i]).collect());
        TranslateSet::from_vectors(lattice.points_in_box(&lo, &hi))
    }
}

pub fn index_of(lattice: &Lattice, denominator: &BigInt) -> Option<u64> {
    let scaled = lattice.abs_det() * Rational::from_integer(denominator * denominator);
    if scaled.is_integer() {
        use num_traits::ToPrimitive;
        scaled.to_integer().to_u64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::geometry::{int, rat};

    #[test]
    fn hnf_identifies_equal_lattices() {
        let a = Lattice::from_ints(&[&[3, 1], &[1, 2]]).unwrap();
        let b = Lattice::from_ints(&[&[4, 3], &[1, 2]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.abs_det(), int(5));
        let canon = a.canonical();
        assert_eq!(canon.basis()[1][0], int(0));
        assert_ne!(a, Lattice::integer(2));
    }

    #[test]
    fn hnf_rational() {
        let l = Lattice::new(vec![
            Vector::new(vec![rat(1, 2), int(0)]),
            Vector::new(vec![rat(1, 4), rat(1, 2)]),
        ])
        .unwrap();
        let c = l.canonical();
        assert_eq!(c.basis()[0], Vector::new(vec![rat(1, 4), rat(1, 2)]));
        assert_eq!(c.basis()[1], Vector::new(vec![int(0), int(1)]));
        assert_eq!(l, c);
    }

    #[test]
    fn singular_basis_rejected() {
        assert!(Lattice::from_ints(&[&[1, 2], &[2, 4]]).is_err());
    }

    #[test]
    fn sublattice_count_is_sigma() {
        let one = BigInt::one();
        assert_eq!(sublattices_2d(&one, 1).len(), 1);
        assert_eq!(sublattices_2d(&one, 4).len(), 7);
        assert_eq!(sublattices_2d(&one, 6).len(), 12);
        let all = sublattices_2d(&one, 6);
        for (i, a) in all.iter().enumerate() {
            assert_eq!(a.abs_det(), int(6));
            for b in &all[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn box_enumeration_handles_skewed_bases() {
        let skew = Lattice::from_ints(&[&[1, 0], &[37, 1]]).unwrap();
        let pts = skew.points_in_box(&Point::from_ints(&[-1, -1]), &Point::from_ints(&[1, 1]));
        assert_eq!(pts.len(), 9);
    }

    #[test]
    fn translate_multiset_merges() {
        let x = TranslateSet::new(vec![
            (Vector::from_ints(&[0, 0]), 1),
            (Vector::from_ints(&[1, 0]), 2),
            (Vector::from_ints(&[0, 0]), 1),
        ]);
        assert_eq!(x.len(), 2);
        assert_eq!(x.total(), 4);
        assert_eq!(x.multiplicity_of(&Vector::from_ints(&[0, 0])), 2);
        assert!(x.contains_origin());
    }
}
