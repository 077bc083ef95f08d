//! SVG drawing of a curve from its rotation system.
//!
//! Every edge is subdivided twice so loops and parallel edges become simple
//! paths; the outer face is pinned to a circle and the remaining points are
//! placed by barycentric relaxation.

use std::fmt::Write;

use flatcurve::{alexander_numbering, CurveMap, Dart};

const SIZE: f64 = 480.0;
const RADIUS: f64 = 200.0;
const SWEEPS: usize = 3000;

struct Layout {
    pos: Vec<(f64, f64)>,
    /// Point on the edge of each dart, next to the dart's own crossing.
    near: Vec<usize>,
}

fn layout(curve: &CurveMap) -> Layout {
    let n = curve.vertex_count();
    let darts = 4 * n;
    let mut near = vec![0; darts];
    let mut next = n;
    for d in curve.darts() {
        near[d.index()] = next;
        next += 1;
    }
    let mut adj = vec![Vec::new(); next];
    for d in curve.darts() {
        let p = near[d.index()];
        adj[d.vertex()].push(p);
        adj[p].push(d.vertex());
        adj[p].push(near[curve.alpha(d).index()]);
    }
    let mut pos = vec![(0.0, 0.0); next];
    let mut fixed = vec![false; next];
    let mut boundary = Vec::new();
    let start = curve.outer();
    let mut d = start;
    loop {
        for p in [d.vertex(), near[d.index()], near[curve.alpha(d).index()]] {
            if !boundary.contains(&p) {
                boundary.push(p);
            }
        }
        d = curve.face_next(d);
        if d == start {
            break;
        }
    }
    // the outer face is walked clockwise, so place it clockwise
    let k = boundary.len() as f64;
    for (i, &p) in boundary.iter().enumerate() {
        let t = -std::f64::consts::TAU * i as f64 / k;
        pos[p] = (RADIUS * t.cos(), RADIUS * t.sin());
        fixed[p] = true;
    }
    for _ in 0..SWEEPS {
        for p in 0..next {
            if fixed[p] {
                continue;
            }
            let m = adj[p].len() as f64;
            let (sx, sy) = adj[p].iter().fold((0.0, 0.0), |(x, y), &q| (x + pos[q].0, y + pos[q].1));
            pos[p] = (sx / m, sy / m);
        }
    }
    Layout { pos, near }
}

fn point(p: (f64, f64)) -> String {
    // y axis points down in SVG
    format!("{:.2},{:.2}", SIZE / 2.0 + p.0, SIZE / 2.0 - p.1)
}

/// SVG 1.1 document; faces are labeled with winding numbers when `labels` is
/// set and the map is a single curve.
pub fn svg(curve: &CurveMap, labels: bool) -> anyhow::Result<String> {
    curve.validate()?;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )?;
    writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##)?;
    if curve.is_circle() {
        writeln!(
            s,
            r##"<path d="M {} A {RADIUS} {RADIUS} 0 1 1 {} A {RADIUS} {RADIUS} 0 1 1 {} Z" fill="none" stroke="#222222" stroke-width="2"/>"##,
            point((RADIUS, 0.0)),
            point((-RADIUS, 0.0)),
            point((RADIUS, 0.0))
        )?;
        if labels {
            writeln!(s, r#"<text x="{0}" y="{0}" text-anchor="middle">1</text>"#, SIZE / 2.0)?;
            writeln!(s, r#"<text x="12" y="20">0</text>"#)?;
        }
        writeln!(s, "</svg>")?;
        return Ok(s);
    }
    let lay = layout(curve);
    let mut seen = vec![false; 4 * curve.vertex_count()];
    for start in curve.darts() {
        if seen[start.index()] {
            continue;
        }
        let strand = curve.strand_from(start);
        let mut path = format!("M {}", point(lay.pos[start.vertex()]));
        for &d in &strand {
            seen[d.index()] = true;
            seen[curve.alpha(d).index()] = true;
            let a = curve.alpha(d);
            for p in [lay.near[d.index()], lay.near[a.index()], a.vertex()] {
                write!(path, " L {}", point(lay.pos[p]))?;
            }
        }
        writeln!(
            s,
            r##"<path d="{path} Z" fill="none" stroke="#222222" stroke-width="2" stroke-linejoin="round"/>"##
        )?;
    }
    for v in 0..curve.vertex_count() {
        writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="3" fill="#c0392b"/>"##,
            SIZE / 2.0 + lay.pos[v].0,
            SIZE / 2.0 - lay.pos[v].1
        )?;
    }
    if labels {
        if let Ok(alex) = alexander_numbering(curve) {
            let outer_face = alex.faces.of(curve.outer());
            let mut done = vec![false; alex.faces.count()];
            for start in curve.darts() {
                let f = alex.faces.of(start);
                if done[f] {
                    continue;
                }
                done[f] = true;
                let value = alex.face_value_right_of(start);
                if f == outer_face {
                    writeln!(s, r#"<text x="12" y="20">{value}</text>"#)?;
                    continue;
                }
                let (mut x, mut y, mut k) = (0.0, 0.0, 0.0);
                let mut d: Dart = start;
                loop {
                    for p in [d.vertex(), lay.near[d.index()], lay.near[curve.alpha(d).index()]] {
                        x += lay.pos[p].0;
                        y += lay.pos[p].1;
                        k += 1.0;
                    }
                    d = curve.face_next(d);
                    if d == start {
                        break;
                    }
                }
                writeln!(
                    s,
                    r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="middle">{value}</text>"#,
                    SIZE / 2.0 + x / k,
                    SIZE / 2.0 - y / k + 4.0
                )?;
            }
        }
    }
    writeln!(s, "</svg>")?;
    Ok(s)
}
