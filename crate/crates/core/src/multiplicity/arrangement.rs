//! Vertical trapezoidal decomposition of a planar segment arrangement.
//!
//! Every face of the arrangement contains the interior of at least one trapezoid, and
//! each trapezoid carries an exact sample point lying on no segment.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::geometry::rational::midpoint;
use crate::geometry::{Point, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    /// Stores the endpoints in lexicographic order.
    pub fn new(a: Point, b: Point) -> Segment {
        if a <= b {
            Segment { a, b }
        } else {
            Segment { a: b, b: a }
        }
    }

    fn is_vertical(&self) -> bool {
        self.a[0] == self.b[0]
    }

    /// Height at abscissa `x`; the segment must be non-vertical.
    pub fn y_at(&self, x: &Rational) -> Rational {
        let t = (x - &self.a[0]) / (&self.b[0] - &self.a[0]);
        &self.a[1] + t * (&self.b[1] - &self.a[1])
    }

    /// Abscissa of a proper or touching crossing with `other`, if any.
    fn crossing_x(&self, other: &Segment) -> Option<Rational> {
        let r = &self.b - &self.a;
        let s = &other.b - &other.a;
        let denom = r.cross2(&s);
        if denom.is_zero() {
            return None;
        }
        let qp = &other.a - &self.a;
        let t = qp.cross2(&s) / &denom;
        let u = qp.cross2(&r) / &denom;
        let unit = Rational::zero()..=Rational::from_integer(1.into());
        if unit.contains(&t) && unit.contains(&u) {
            Some(&self.a[0] + t * &r[0])
        } else {
            None
        }
    }
}

/// One trapezoid of the decomposition between abscissae `x0 < x1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trapezoid {
    pub x0: Rational,
    pub x1: Rational,
    pub lower: usize,
    pub upper: usize,
    pub sample: Point,
}

impl Trapezoid {
    /// Corners in counter-clockwise order.
    pub fn corners(&self, segments: &[Segment]) -> [Point; 4] {
        let (lo, up) = (&segments[self.lower], &segments[self.upper]);
        [
            Point::new(vec![self.x0.clone(), lo.y_at(&self.x0)]),
            Point::new(vec![self.x1.clone(), lo.y_at(&self.x1)]),
            Point::new(vec![self.x1.clone(), up.y_at(&self.x1)]),
            Point::new(vec![self.x0.clone(), up.y_at(&self.x0)]),
        ]
    }
}

/// Slab abscissae: every endpoint and crossing inside `[xlo, xhi]`, plus the bounds.
fn critical_xs(segments: &[Segment], xlo: &Rational, xhi: &Rational) -> Vec<Rational> {
    let mut xs: BTreeSet<Rational> = BTreeSet::new();
    xs.insert(xlo.clone());
    xs.insert(xhi.clone());
    for s in segments {
        for x in [&s.a[0], &s.b[0]] {
            if xlo <= x && x <= xhi {
                xs.insert(x.clone());
            }
        }
    }
    let mut order: Vec<usize> = (0..segments.len()).collect();
    order.sort_by(|&i, &j| segments[i].a[0].cmp(&segments[j].a[0]));
    for (k, &i) in order.iter().enumerate() {
        let si = &segments[i];
        for &j in &order[k + 1..] {
            let sj = &segments[j];
            if sj.a[0] > si.b[0] {
                break;
            }
            let (ylo_i, yhi_i) = minmax(&si.a[1], &si.b[1]);
            let (ylo_j, yhi_j) = minmax(&sj.a[1], &sj.b[1]);
            if yhi_i < ylo_j || yhi_j < ylo_i {
                continue;
            }
            if let Some(x) = si.crossing_x(sj) {
                if xlo <= &x && &x <= xhi {
                    xs.insert(x);
                }
            }
        }
    }
    xs.into_iter().collect()
}

fn minmax<'a>(a: &'a Rational, b: &'a Rational) -> (&'a Rational, &'a Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Decomposes the strip `xlo < x < xhi`. Regions above the top segment or below the
/// bottom one in a slab are not reported.
pub fn trapezoids(segments: &[Segment], xlo: &Rational, xhi: &Rational) -> Vec<Trapezoid> {
    let xs = critical_xs(segments, xlo, xhi);
    let mut out = Vec::new();
    for w in xs.windows(2) {
        let (x0, x1) = (&w[0], &w[1]);
        let xm = midpoint(x0, x1);
        let mut active: Vec<(Rational, usize)> = segments
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_vertical() && &s.a[0] <= x0 && &s.b[0] >= x1)
            .map(|(i, s)| (s.y_at(&xm), i))
            .collect();
        active.sort();
        active.dedup_by(|b, a| a.0 == b.0);
        for pair in active.windows(2) {
            let (ya, lower) = (&pair[0].0, pair[0].1);
            let (yb, upper) = (&pair[1].0, pair[1].1);
            out.push(Trapezoid {
                x0: x0.clone(),
                x1: x1.clone(),
                lower,
                upper,
                sample: Point::new(vec![xm.clone(), midpoint(ya, yb)]),
            });
        }
    }
    out
}
