//! Named polytopes used by the CLI examples and the test suites.

use crate::geometry::{int, Point, Polytope, Rational};

fn poly(points: &[&[i64]]) -> Polytope {
    Polytope::from_int_points(points).expect("corpus polytope is valid")
}

pub fn unit_square() -> Polytope {
    poly(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]])
}

pub fn rectangle(width: i64, height: i64) -> Polytope {
    poly(&[&[0, 0], &[width, 0], &[width, height], &[0, height]])
}

pub fn triangle() -> Polytope {
    poly(&[&[0, 0], &[1, 0], &[0, 1]])
}

/// Centrally symmetric hexagon with edge vectors (2,0), (1,1), (0,1); area 5.
pub fn hexagon_h6() -> Polytope {
    poly(&[&[0, 0], &[2, 0], &[3, 1], &[3, 2], &[1, 2], &[0, 1]])
}

/// Lattice octagon of area 7 with edge vectors along the eight primitive directions.
pub fn octagon_o7() -> Polytope {
    poly(&[&[1, 0], &[2, 0], &[3, 1], &[3, 2], &[2, 3], &[1, 3], &[0, 2], &[0, 1]])
}

pub fn cube() -> Polytope {
    cuboid(1, 1, 1)
}

pub fn cuboid(a: i64, b: i64, c: i64) -> Polytope {
    let mut pts = Vec::new();
    for x in [0, a] {
        for y in [0, b] {
            for z in [0, c] {
                pts.push(Point::from_ints(&[x, y, z]));
            }
        }
    }
    Polytope::from_points(&pts).expect("cuboid")
}

pub fn octahedron() -> Polytope {
    poly(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]])
}

pub fn tetrahedron() -> Polytope {
    poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
}

pub fn rhombic_dodecahedron() -> Polytope {
    let mut pts = Vec::new();
    for x in [-1, 1] {
        for y in [-1, 1] {
            for z in [-1, 1] {
                pts.push(Point::from_ints(&[x, y, z]));
            }
        }
    }
    for axis in 0..3 {
        for s in [-2, 2] {
            let mut c = [0i64; 3];
            c[axis] = s;
            pts.push(Point::from_ints(&c));
        }
    }
    Polytope::from_points(&pts).expect("rhombic dodecahedron")
}

/// All permutations of (0, ±1, ±2).
pub fn truncated_octahedron() -> Polytope {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut pts = Vec::new();
    for s1 in [-1, 1] {
        for s2 in [-1, 1] {
            let base = [0i64, s1, 2 * s2];
            for p in &perms {
                pts.push(Point::from_ints(&[base[p[0]], base[p[1]], base[p[2]]]));
            }
        }
    }
    Polytope::from_points(&pts).expect("truncated octahedron")
}

/// Right prism `base × [0, height]` over a polygon.
pub fn prism(base: &Polytope, height: Rational) -> Polytope {
    assert_eq!(base.dim(), 2, "prism base must be a polygon");
    let mut pts = Vec::new();
    for v in base.vertices() {
        for z in [int(0), height.clone()] {
            pts.push(Point::new(vec![v[0].clone(), v[1].clone(), z]));
        }
    }
    Polytope::from_points(&pts).expect("prism")
}

pub fn hexagonal_prism() -> Polytope {
    prism(&hexagon_h6(), int(1))
}

pub fn octagonal_prism() -> Polytope {
    prism(&octagon_o7(), int(1))
}

/// Every named shape with a short identifier.
pub fn named() -> Vec<(&'static str, Polytope)> {
    vec![
        ("unit_square", unit_square()),
        ("triangle", triangle()),
        ("hexagon_h6", hexagon_h6()),
        ("octagon_o7", octagon_o7()),
        ("cube", cube()),
        ("octahedron", octahedron()),
        ("tetrahedron", tetrahedron()),
        ("rhombic_dodecahedron", rhombic_dodecahedron()),
        ("truncated_octahedron", truncated_octahedron()),
        ("hexagonal_prism", hexagonal_prism()),
        ("octagonal_prism", octagonal_prism()),
    ]
}
