//! SVG rendering. Geometry stays exact until the final coordinate formatting.

use std::fmt::Write;

use crate::belts::{belts_of, generator_direction};
use crate::error::{Result, TilingError};
use crate::geometry::Point;
use crate::multiplicity::verify::domain_arrangement;
use crate::multiplicity::Lattice;
use crate::Polytope;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];
const SIZE: f64 = 480.0;
const MARGIN: f64 = 20.0;

/// Maps model coordinates into the SVG viewport, flipping the y axis.
struct Frame {
    min: [f64; 2],
    scale: f64,
}

impl Frame {
    fn fit(points: &[[f64; 2]]) -> Frame {
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in points {
            for i in 0..2 {
                min[i] = min[i].min(p[i]);
                max[i] = max[i].max(p[i]);
            }
        }
        let span = (max[0] - min[0]).max(max[1] - min[1]).max(1e-9);
        Frame {
            min,
            scale: (SIZE - 2.0 * MARGIN) / span,
        }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        (
            MARGIN + (p[0] - self.min[0]) * self.scale,
            SIZE - MARGIN - (p[1] - self.min[1]) * self.scale,
        )
    }

    fn path(&self, pts: &[[f64; 2]]) -> String {
        pts.iter()
            .map(|&p| {
                let (x, y) = self.map(p);
                format!("{x:.3},{y:.3}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn xy(p: &Point) -> [f64; 2] {
    let c = p.to_f64();
    [c[0], c[1]]
}

/// Oblique projection for 3D wireframes.
fn project(p: &Point) -> [f64; 2] {
    let c = p.to_f64();
    [c[0] + 0.45 * c[2], c[1] + 0.3 * c[2]]
}

fn open(out: &mut String) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

/// The polytope with its edges coloured by belt. Non-symmetric inputs are drawn in grey.
pub fn polytope_svg(p: &Polytope) -> String {
    let belts = belts_of(p).ok();
    let mut out = String::new();
    open(&mut out);
    if p.dim() == 2 {
        let pts: Vec<[f64; 2]> = p.boundary_cycle().iter().map(|&i| xy(&p.vertices()[i])).collect();
        let frame = Frame::fit(&pts);
        let stroke = if belts.is_some() { PALETTE[0] } else { "#777777" };
        let _ = writeln!(
            out,
            r#"<polygon points="{}" fill="{stroke}" fill-opacity="0.12" stroke="{stroke}" stroke-width="2"/>"#,
            frame.path(&pts)
        );
        if let Some(b) = belts.as_ref().and_then(|b| b.first()) {
            let (x, y) = frame.map(xy(&p.vertices()[p.subfacets()[b.generator][0]]));
            let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="4" fill="{}"/>"#, PALETTE[1]);
        }
    } else {
        let pts: Vec<[f64; 2]> = p.vertices().iter().map(project).collect();
        let frame = Frame::fit(&pts);
        for (i, edge) in p.subfacets().iter().enumerate() {
            let colour = belts
                .as_ref()
                .and_then(|bs| {
                    let d = generator_direction(p, i)?;
                    bs.iter().position(|b| {
                        generator_direction(p, b.generator).is_some_and(|g| g.is_parallel(&d))
                    })
                })
                .map_or("#777777", |k| PALETTE[k % PALETTE.len()]);
            let seg = [pts[edge[0]], pts[edge[1]]];
            let _ = writeln!(
                out,
                r#"<polyline points="{}" fill="none" stroke="{colour}" stroke-width="2"/>"#,
                frame.path(&seg)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

/// A patch of the lattice arrangement around one fundamental domain. Cells inside the
/// domain are shaded by multiplicity; translate outlines are drawn on top.
pub fn tiling_svg(p: &Polytope, lattice: &Lattice) -> Result<String> {
    if p.dim() != 2 {
        return Err(TilingError::UnsupportedDimension(p.dim()));
    }
    let arr = domain_arrangement(p, lattice)?;
    let max_k = arr.cells.iter().map(|(_, k)| *k).max().unwrap_or(0).max(1);

    let cycle = p.boundary_cycle();
    let outlines: Vec<Vec<[f64; 2]>> = arr
        .translates
        .vectors()
        .map(|v| cycle.iter().map(|&i| xy(&(&p.vertices()[i] + v))).collect())
        .collect();
    let all: Vec<[f64; 2]> = outlines.iter().flatten().copied().collect();
    let frame = Frame::fit(&all);

    let mut out = String::new();
    open(&mut out);
    for (cell, k) in &arr.cells {
        let corners: Vec<[f64; 2]> = cell.corners(&arr.segments).iter().map(xy).collect();
        let shade = 0.15 + 0.75 * (*k as f64) / (max_k as f64);
        let _ = writeln!(
            out,
            r#"<polygon points="{}" fill="{}" fill-opacity="{shade:.3}" stroke="none"><title>{k}</title></polygon>"#,
            frame.path(&corners),
            PALETTE[0]
        );
    }
    for o in &outlines {
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="none" stroke="#333333" stroke-width="1"/>"##,
            frame.path(o)
        );
    }
    let dom: Vec<[f64; 2]> = arr
        .domain
        .boundary_cycle()
        .iter()
        .map(|&i| xy(&arr.domain.vertices()[i]))
        .collect();
    let _ = writeln!(
        out,
        r#"<polygon points="{}" fill="none" stroke="{}" stroke-width="2" stroke-dasharray="6 4"/>"#,
        frame.path(&dom),
        PALETTE[1]
    );
    out.push_str("</svg>\n");
    Ok(out)
}
