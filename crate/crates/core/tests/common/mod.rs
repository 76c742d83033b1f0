//! Shape generators and brute-force oracles shared by the integration suites.
//!
//! The oracles deliberately avoid the library's hull, locate and clipping code: they work
//! from explicit counter-clockwise vertex cycles with plain cross products.

#![allow(dead_code)]

use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use tilescope::geometry::{int, rat};
use tilescope::{Point, Polytope, Rational, Vector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn pt(x: Rational, y: Rational) -> Point {
    Point::new(vec![x, y])
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Vertex cycle of a zonogon: partial sums of `edges` (sorted by angle in the upper
/// half-plane) followed by their negatives.
pub fn zonogon_cycle(edges: &[Vector]) -> Vec<Point> {
    let mut cycle = vec![pt(int(0), int(0))];
    for e in edges.iter().cloned().chain(edges.iter().map(|e| -e)) {
        let last = cycle.last().unwrap().clone();
        cycle.push(&last + &e);
    }
    cycle.pop();
    cycle
}

/// `n` pairwise non-parallel edge vectors with small rational coordinates, in increasing
/// angle order within the half-plane `y > 0 or (y = 0, x > 0)`.
pub fn random_edge_fan(rng: &mut ChaCha8Rng, n: usize, denominators: &[i64]) -> Vec<Vector> {
    loop {
        let mut edges: Vec<Vector> = (0..n)
            .map(|_| {
                let d = denominators[rng.gen_range(0..denominators.len())];
                let mut x = rng.gen_range(-4..=4);
                let mut y = rng.gen_range(0..=4);
                if y == 0 && x <= 0 {
                    x = x.abs() + 1;
                }
                if x == 0 && y == 0 {
                    y = 1;
                }
                Vector::new(vec![rat(x, d), rat(y, d)])
            })
            .collect();
        // Angular sort on the upper half-plane: a precedes b iff cross(a, b) > 0.
        edges.sort_by(|a, b| int(0).cmp(&a.cross2(b)));
        if edges.windows(2).all(|w| w[0].cross2(&w[1]).is_positive()) {
            return edges;
        }
    }
}

pub fn random_cs_polygon(rng: &mut ChaCha8Rng, pairs: usize, denominators: &[i64]) -> (Vec<Point>, Polytope) {
    let cycle = zonogon_cycle(&random_edge_fan(rng, pairs, denominators));
    let p = Polytope::from_points(&cycle).expect("zonogon");
    (cycle, p)
}

/// Convex hull of random rational points, returned as a CCW cycle computed here (gift
/// wrapping) so the oracle never depends on the library hull.
pub fn random_convex_polygon(rng: &mut ChaCha8Rng, points: usize, denom: i64) -> (Vec<Point>, Polytope) {
    loop {
        let pts: Vec<Point> = (0..points)
            .map(|_| pt(rat(rng.gen_range(-6..=6), denom), rat(rng.gen_range(-6..=6), denom)))
            .collect();
        if let Some(cycle) = gift_wrap(&pts) {
            if cycle.len() >= 3 {
                let p = Polytope::from_points(&cycle).expect("non-degenerate");
                return (cycle, p);
            }
        }
    }
}

fn gift_wrap(pts: &[Point]) -> Option<Vec<Point>> {
    let start = pts.iter().min()?.clone();
    let mut cycle = vec![start.clone()];
    let mut current = start.clone();
    loop {
        let mut next: Option<Point> = None;
        for c in pts {
            if *c == current {
                continue;
            }
            next = match next {
                None => Some(c.clone()),
                Some(n) => {
                    let turn = cross(&current, &n, c);
                    let farther = (c - &current).norm_squared() > (&n - &current).norm_squared();
                    if turn.is_negative() || (turn.is_zero() && farther) {
                        Some(c.clone())
                    } else {
                        Some(n)
                    }
                }
            };
        }
        let n = next?;
        if n == start {
            break;
        }
        cycle.push(n.clone());
        current = n;
        if cycle.len() > pts.len() {
            return None;
        }
    }
    let area2: Rational = (0..cycle.len())
        .map(|i| cross(&cycle[0], &cycle[i], &cycle[(i + 1) % cycle.len()]))
        .sum();
    area2.is_positive().then_some(cycle)
}

/// Strict interior test against a CCW cycle.
pub fn strictly_inside(cycle: &[Point], q: &Point) -> bool {
    (0..cycle.len()).all(|i| cross(&cycle[i], &cycle[(i + 1) % cycle.len()], q).is_positive())
}

pub fn on_boundary(cycle: &[Point], q: &Point) -> bool {
    let n = cycle.len();
    let inside = (0..n).all(|i| !cross(&cycle[i], &cycle[(i + 1) % n], q).is_negative());
    inside && !strictly_inside(cycle, q)
}

/// Coefficient ranges `(i, j)` of every lattice point `i·b1 + j·b2` whose translate of
/// `cycle` could contain `q`: the corners of `q − bbox(cycle)` in lattice coordinates.
fn coefficient_ranges(cycle: &[Point], basis: &[Vector; 2], q: &Point) -> [(i64, i64); 2] {
    let xs = cycle.iter().map(|p| p[0].clone());
    let ys = cycle.iter().map(|p| p[1].clone());
    let (xlo, xhi) = (xs.clone().min().unwrap(), xs.max().unwrap());
    let (ylo, yhi) = (ys.clone().min().unwrap(), ys.max().unwrap());
    let det = basis[0].cross2(&basis[1]);
    let mut lo = [i64::MAX; 2];
    let mut hi = [i64::MIN; 2];
    for x in [&xlo, &xhi] {
        for y in [&ylo, &yhi] {
            let v = Vector::new(vec![&q[0] - x, &q[1] - y]);
            // Cramer: v = a·b1 + b·b2.
            let coeffs = [v.cross2(&basis[1]) / &det, basis[0].cross2(&v) / &det];
            for k in 0..2 {
                lo[k] = lo[k].min(coeffs[k].floor().to_integer().try_into().unwrap());
                hi[k] = hi[k].max(coeffs[k].ceil().to_integer().try_into().unwrap());
            }
        }
    }
    [(lo[0], hi[0]), (lo[1], hi[1])]
}

fn lattice_points_near(cycle: &[Point], basis: &[Vector; 2], q: &Point) -> Vec<Vector> {
    let [(ilo, ihi), (jlo, jhi)] = coefficient_ranges(cycle, basis, q);
    let mut out = Vec::new();
    for i in ilo..=ihi {
        for j in jlo..=jhi {
            out.push(&basis[0].scale(&int(i)) + &basis[1].scale(&int(j)));
        }
    }
    out
}

/// Brute-force multiplicity of `cycle + Λ` at `q`.
pub fn naive_multiplicity(cycle: &[Point], basis: &[Vector; 2], q: &Point) -> u64 {
    lattice_points_near(cycle, basis, q)
        .iter()
        .filter(|v| strictly_inside(cycle, &(q - *v)))
        .count() as u64
}

pub fn naive_on_some_boundary(cycle: &[Point], basis: &[Vector; 2], q: &Point) -> bool {
    lattice_points_near(cycle, basis, q)
        .iter()
        .any(|v| on_boundary(cycle, &(q - v)))
}

/// Sutherland–Hodgman clip of a CCW cycle against the left side of the directed line a→b.
fn clip_left(poly: &[Point], a: &Point, b: &Point) -> Vec<Point> {
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (p, q) = (&poly[i], &poly[(i + 1) % poly.len()]);
        let (sp, sq) = (cross(a, b, p), cross(a, b, q));
        if !sp.is_negative() {
            out.push(p.clone());
        }
        if (sp.is_positive() && sq.is_negative()) || (sp.is_negative() && sq.is_positive()) {
            let t = &sp / (&sp - &sq);
            out.push(Point::new(vec![
                &p[0] + &t * (&q[0] - &p[0]),
                &p[1] + &t * (&q[1] - &p[1]),
            ]));
        }
    }
    out
}

pub fn clip(subject: &[Point], clipper: &[Point]) -> Vec<Point> {
    let mut out = subject.to_vec();
    for i in 0..clipper.len() {
        if out.is_empty() {
            break;
        }
        out = clip_left(&out, &clipper[i], &clipper[(i + 1) % clipper.len()]);
    }
    out
}

pub fn area(cycle: &[Point]) -> Rational {
    if cycle.len() < 3 {
        return Rational::zero();
    }
    let twice: Rational = (0..cycle.len())
        .map(|i| cross(&cycle[0], &cycle[i], &cycle[(i + 1) % cycle.len()]))
        .sum();
    twice / int(2)
}

pub fn square_around(q: &Point, eps: &Rational) -> Vec<Point> {
    vec![
        pt(&q[0] - eps, &q[1] - eps),
        pt(&q[0] + eps, &q[1] - eps),
        pt(&q[0] + eps, &q[1] + eps),
        pt(&q[0] - eps, &q[1] + eps),
    ]
}

/// Dyadic radii 1, 1/2, …, 1/2^10.
pub fn epsilon_grid() -> Vec<Rational> {
    (0..=10).map(|k| rat(1, 1 << k)).collect()
}

/// Interiors of `a` and `b` are disjoint inside the square of radius `eps` around `q`.
pub fn locally_disjoint(a: &[Point], b: &[Point], q: &Point, eps: &Rational) -> bool {
    area(&clip(&clip(a, b), &square_around(q, eps))).is_zero()
}

/// Uniform rational point on the boundary of a CCW cycle; one in four lands on a vertex.
pub fn random_boundary_point(rng: &mut ChaCha8Rng, cycle: &[Point]) -> Point {
    let i = rng.gen_range(0..cycle.len());
    if rng.gen_range(0..4) == 0 {
        return cycle[i].clone();
    }
    let (a, b) = (&cycle[i], &cycle[(i + 1) % cycle.len()]);
    let t = rat(rng.gen_range(1..97), 97);
    &a.clone() + &(b - a).scale(&t)
}

pub fn translate_cycle(cycle: &[Point], v: &Vector) -> Vec<Point> {
    cycle.iter().map(|p| p + v).collect()
}

/// Generic zonotope: hull of all subset sums of `generators`.
pub fn zonotope(generators: &[[i64; 3]]) -> Polytope {
    let mut pts = vec![Point::zero(3)];
    for g in generators {
        let v = Vector::from_ints(g);
        let shifted: Vec<Point> = pts.iter().map(|p| p + &v).collect();
        pts.extend(shifted);
    }
    Polytope::from_points(&pts).expect("zonotope")
}
