//! Exact points and translation vectors in dimension 2 or 3.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::rational::{format_rational, int, lcm_of_denominators, parse_rational, to_f64, Rational};
use crate::error::{Result, TilingError};

/// A location in space. Ordered lexicographically by coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Rational>);

/// A displacement, e.g. a translation vector `x` in `K + x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Rational>);

macro_rules! coord_impls {
    ($ty:ident) => {
        impl $ty {
            pub fn new(coords: Vec<Rational>) -> Self {
                Self(coords)
            }

            pub fn from_ints(coords: &[i64]) -> Self {
                Self(coords.iter().map(|&c| int(c)).collect())
            }

            pub fn zero(dim: usize) -> Self {
                Self(vec![Rational::zero(); dim])
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[Rational] {
                &self.0
            }

            pub fn to_f64(&self) -> Vec<f64> {
                self.0.iter().map(to_f64).collect()
            }

            /// Parses a comma separated list such as `"1/2,1"`.
            pub fn parse(text: &str) -> Result<Self> {
                let coords = text
                    .split(',')
                    .map(parse_rational)
                    .collect::<Result<Vec<_>>>()?;
                if coords.len() < 2 || coords.len() > 3 {
                    return Err(TilingError::Parse(format!(
                        "expected 2 or 3 coordinates in {text:?}"
                    )));
                }
                Ok(Self(coords))
            }
        }

        impl Index<usize> for $ty {
            type Output = Rational;
            fn index(&self, i: usize) -> &Rational {
                &self.0[i]
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> = self.0.iter().map(format_rational).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    };
}

coord_impls!(Point);
coord_impls!(Vector);

impl Point {
    pub fn as_vector(&self) -> Vector {
        Vector(self.0.clone())
    }

    pub fn translate(&self, v: &Vector) -> Point {
        self + v
    }

    /// Point reflection `2c - self`.
    pub fn reflect_through(&self, center: &Point) -> Point {
        Point(
            self.0
                .iter()
                .zip(&center.0)
                .map(|(p, c)| c * int(2) - p)
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Point {
        Point(self.0.iter().map(|c| c * s).collect())
    }

    /// Vertex centroid of a non-empty point list.
    pub fn centroid(points: &[Point]) -> Point {
        let dim = points[0].dim();
        let n = int(points.len() as i64);
        let mut acc = vec![Rational::zero(); dim];
        for p in points {
            for (a, c) in acc.iter_mut().zip(&p.0) {
                *a += c;
            }
        }
        Point(acc.into_iter().map(|a| a / &n).collect())
    }
}

impl Vector {
    pub fn as_point(&self) -> Point {
        Point(self.0.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Dot product against a point's coordinates.
    pub fn dot_point(&self, p: &Point) -> Rational {
        self.0.iter().zip(&p.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, s: &Rational) -> Vector {
        Vector(self.0.iter().map(|c| c * s).collect())
    }

    pub fn norm_squared(&self) -> Rational {
        self.dot(self)
    }

    /// 2D cross product `self.x * other.y - self.y * other.x`.
    pub fn cross2(&self, other: &Vector) -> Rational {
        &self.0[0] * &other.0[1] - &self.0[1] * &other.0[0]
    }

    pub fn cross3(&self, other: &Vector) -> Vector {
        let (a, b) = (&self.0, &other.0);
        Vector(vec![
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ])
    }

    /// Counter-clockwise quarter turn (2D only).
    pub fn perp(&self) -> Vector {
        Vector(vec![-&self.0[1], self.0[0].clone()])
    }

    /// The positive multiple of `self` with coprime integer entries.
    pub fn primitive(&self) -> Vector {
        let denom = lcm_of_denominators(&self.0);
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * Rational::from_integer(denom.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if g.is_zero() {
            return self.clone();
        }
        Vector(ints.into_iter().map(|v| Rational::from_integer(v / &g)).collect())
    }

    /// Representative of the line direction: primitive with first non-zero entry positive.
    pub fn line_direction(&self) -> Vector {
        let p = self.primitive();
        match p.0.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => -&p,
            _ => p,
        }
    }

    /// `true` when the two vectors are parallel (zero counts as parallel to everything).
    pub fn is_parallel(&self, other: &Vector) -> bool {
        match self.dim() {
            2 => self.cross2(other).is_zero(),
            _ => self.cross3(other).is_zero(),
        }
    }

    pub fn to_f64_norm(&self) -> f64 {
        self.to_f64().iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

/// Determinant of a square matrix given by rows, d in {1, 2, 3}.
pub fn det(rows: &[Vector]) -> Rational {
    match rows.len() {
        1 => rows[0][0].clone(),
        2 => rows[0].cross2(&rows[1]),
        3 => rows[0].dot(&rows[1].cross3(&rows[2])),
        n => panic!("determinant of {n}x{n} matrix not supported"),
    }
}

/// Solves `rows * x = rhs` by Cramer's rule; `None` when singular.
pub fn solve(rows: &[Vector], rhs: &[Rational]) -> Option<Vector> {
    let d = det(rows);
    if d.is_zero() {
        return None;
    }
    let n = rows.len();
    let mut out = Vec::with_capacity(n);
    for col in 0..n {
        let replaced: Vec<Vector> = rows
            .iter()
            .zip(rhs)
            .map(|(row, b)| {
                let mut c = row.0.clone();
                c[col] = b.clone();
                Vector(c)
            })
            .collect();
        out.push(det(&replaced) / &d);
    }
    Some(Vector(out))
}

impl<'a> Sub<&'a Point> for &'a Point {
    type Output = Vector;
    fn sub(self, rhs: &'a Point) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl<'a> Add<&'a Vector> for &'a Point {
    type Output = Point;
    fn add(self, rhs: &'a Vector) -> Point {
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a Vector> for &'a Point {
    type Output = Point;
    fn sub(self, rhs: &'a Vector) -> Point {
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl<'a> Add<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn add(self, rhs: &'a Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn sub(self, rhs: &'a Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -&self
    }
}
