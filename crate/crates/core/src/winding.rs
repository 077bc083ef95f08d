//! Winding numbers: Alexander numbering of faces, winding of the sub-loop
//! closed at a crossing, and the diameter of the face-adjacency graph.

use std::collections::VecDeque;

use num_rational::Ratio;

use crate::canon::graph_diameter;
use crate::error::{Error, Result};
use crate::gauss::passages;
use crate::map::{CurveMap, Dart, Faces};

pub type Rational = Ratio<i64>;

/// Winding numbers of a curve around its faces, vertices, and edges.
#[derive(Clone, Debug)]
pub struct AlexanderNumbering {
    pub faces: Faces,
    /// Winding number per face index of `faces`.
    pub face_values: Vec<i64>,
    /// Average of the four corners at each vertex.
    pub vertex_values: Vec<Rational>,
    /// Value of the edge containing each dart (average of its two sides).
    pub edge_values: Vec<Rational>,
}

impl AlexanderNumbering {
    pub fn face_value_right_of(&self, d: Dart) -> i64 {
        self.face_values[self.faces.of(d)]
    }

    pub fn edge_value(&self, d: Dart) -> Rational {
        self.edge_values[d.index()]
    }
}

/// Marks the darts that point along the direction of travel. The basepoint
/// strand is oriented from the basepoint; any other strand from its smallest
/// dart.
pub(crate) fn forward_darts(curve: &CurveMap) -> Vec<bool> {
    let mut fwd = vec![false; 4 * curve.vertex_count()];
    let mut seen = vec![false; fwd.len()];
    let starts = std::iter::once(curve.base()).chain(curve.darts());
    for s in starts {
        if seen[s.index()] {
            continue;
        }
        for d in curve.strand_from(s) {
            fwd[d.index()] = true;
            seen[d.index()] = true;
            seen[curve.alpha(d).index()] = true;
        }
    }
    fwd
}

/// Propagates face labels from the outer face (value 0), where crossing the
/// edge of dart `d` from its right to its left adds `step(d)`.
fn propagate(
    curve: &CurveMap,
    faces: &Faces,
    step: impl Fn(Dart) -> i64,
) -> Result<Vec<i64>> {
    let mut value = vec![None; faces.count()];
    let outer = faces.of(curve.outer());
    value[outer] = Some(0);
    let mut queue = VecDeque::from([outer]);
    while let Some(f) = queue.pop_front() {
        let here = value[f].unwrap();
        for &d in &faces.orbits[f] {
            let across = faces.of(curve.alpha(d));
            let v = here + step(d);
            match value[across] {
                None => {
                    value[across] = Some(v);
                    queue.push_back(across);
                }
                Some(w) if w != v => {
                    return Err(Error::Validation("inconsistent face labeling".into()));
                }
                Some(_) => {}
            }
        }
    }
    value
        .into_iter()
        .map(|v| v.ok_or_else(|| Error::Validation("map not connected".into())))
        .collect()
}

pub fn alexander_numbering(curve: &CurveMap) -> Result<AlexanderNumbering> {
    if curve.is_circle() {
        // outer face 0, inner face 1 for the counterclockwise circle
        return Ok(AlexanderNumbering {
            faces: Faces {
                face_of: Vec::new(),
                orbits: vec![Vec::new(), Vec::new()],
            },
            face_values: vec![0, 1],
            vertex_values: Vec::new(),
            edge_values: Vec::new(),
        });
    }
    if curve.component_count() != 1 {
        return Err(Error::Validation("map not connected".into()));
    }
    let faces = curve.faces();
    let fwd = forward_darts(curve);
    let face_values = propagate(curve, &faces, |d| {
        if fwd[d.index()] {
            1
        } else {
            -1
        }
    })?;
    let vertex_values = (0..curve.vertex_count())
        .map(|v| {
            let s: i64 = (0..4).map(|k| face_values[faces.of(Dart::new(v, k))]).sum();
            Rational::new(s, 4)
        })
        .collect();
    let edge_values = curve
        .darts()
        .map(|d| {
            let s = face_values[faces.of(d)] + face_values[faces.of(curve.alpha(d))];
            Rational::new(s, 2)
        })
        .collect();
    Ok(AlexanderNumbering {
        faces,
        face_values,
        vertex_values,
        edge_values,
    })
}

/// Winding number of the sub-loop between the two passages through `x`,
/// evaluated at `x` itself as the average over the two sectors cut out by the
/// sub-loop there.
pub fn subloop_winding(curve: &CurveMap, x: usize) -> Result<Rational> {
    curve.require_unicursal()?;
    if x >= curve.vertex_count() {
        return Err(Error::InvalidArguments(format!("no crossing {x}")));
    }
    if !curve.basepoint_on_outer() {
        return Err(Error::BasepointNotOuter);
    }
    let faces = curve.faces();
    Ok(subloop_winding_with(curve, &faces, &curve.traversal(), x))
}

pub(crate) fn subloop_winding_with(curve: &CurveMap, faces: &Faces, trav: &[Dart], x: usize) -> Rational {
    let pass = passages(curve, trav)[x];
    let mut on_loop = vec![false; 4 * curve.vertex_count()];
    for &d in &trav[pass.first + 1..=pass.second] {
        on_loop[d.index()] = true;
    }
    let labels = propagate(curve, faces, |d| {
        if on_loop[d.index()] {
            1
        } else if on_loop[curve.alpha(d).index()] {
            -1
        } else {
            0
        }
    })
    .expect("sub-loop labeling of a planar map is consistent");
    let exit = trav[pass.first + 1];
    let entry = curve.alpha(trav[pass.second]);
    // the sub-loop's two rays at x are adjacent; `lo` is the first of them in
    // counterclockwise order, so the tip sector is the corner (lo, lo + 1)
    let lo = if entry == exit.rotate() { exit } else { entry };
    let inside = labels[faces.of(lo.rotate())];
    let outside = labels[faces.of(lo.turn(3))];
    Rational::new(inside + outside, 2)
}

/// Diameter of the face-adjacency graph (faces adjacent when they share an
/// edge).
pub fn dual_diameter(curve: &CurveMap) -> usize {
    if curve.is_circle() {
        return 1;
    }
    let faces = curve.faces();
    let mut adj = vec![Vec::new(); faces.count()];
    for d in curve.darts() {
        let (f, g) = (faces.of(d), faces.of(curve.alpha(d)));
        if f != g && !adj[f].contains(&g) {
            adj[f].push(g);
            adj[g].push(f);
        }
    }
    graph_diameter(&adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use crate::gauss::gauss_code;
    use crate::generators::torus_knot;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn trefoil_alexander() {
        let t = torus_knot(2, 3);
        let a = alexander_numbering(&t).unwrap();
        let mut vals = a.face_values.clone();
        vals.sort();
        assert_eq!(vals, vec![0, 1, 1, 1, 2]);
        assert_eq!(a.face_value_right_of(t.outer()), 0);
        assert!(a.vertex_values.iter().all(|v| *v == r(1, 1)));
        let along: Vec<Rational> = t.traversal().iter().map(|&d| a.edge_value(d)).collect();
        assert_eq!(along, vec![r(1, 2), r(3, 2), r(1, 2), r(3, 2), r(1, 2), r(3, 2)]);
    }

    #[test]
    fn circle_alexander() {
        let a = alexander_numbering(&CurveMap::circle()).unwrap();
        assert_eq!(a.face_values, vec![0, 1]);
    }

    #[test]
    fn figure_eight_alexander() {
        let text = "cmap 1\nvertices 1\nv 0 0.1 0.0 0.3 0.2\nbase 0.0\nouter 0.2\n";
        let m = CurveMap::parse_cmap(text).unwrap();
        let a = alexander_numbering(&m).unwrap();
        let mut vals = a.face_values.clone();
        vals.sort();
        assert_eq!(vals, vec![-1, 0, 1]);
        assert_eq!(a.vertex_values[0], r(0, 1));

        // the other figure-eight: one loop nested in the other
        let nested = m.with_outer(Dart::new(0, 1));
        let a = alexander_numbering(&nested).unwrap();
        let mut vals: Vec<i64> = a.face_values.iter().map(|v| v.abs()).collect();
        vals.sort();
        assert_eq!(vals, vec![0, 1, 2]);
        assert_eq!(a.vertex_values[0].abs(), r(1, 1));
    }

    #[test]
    fn trefoil_subloops_are_half() {
        let t = torus_knot(2, 3);
        for x in 0..3 {
            assert_eq!(subloop_winding(&t, x).unwrap(), r(1, 2));
        }
    }

    #[test]
    fn figure_eight_subloop() {
        let text = "cmap 1\nvertices 1\nv 0 0.1 0.0 0.3 0.2\nbase 0.0\nouter 0.2\n";
        let m = CurveMap::parse_cmap(text).unwrap();
        assert_eq!(subloop_winding(&m, 0).unwrap().abs(), r(1, 2));
    }

    #[test]
    fn subloop_requires_outer_basepoint() {
        let t = torus_knot(3, 4);
        let faces = t.faces();
        let outer = faces.of(t.outer());
        let inner = t
            .traversal()
            .into_iter()
            .find(|&d| faces.of(d) != outer && faces.of(t.alpha(d)) != outer)
            .unwrap();
        assert_eq!(subloop_winding(&t.with_basepoint(inner), 0), Err(Error::BasepointNotOuter));
    }

    #[test]
    fn sign_is_winding_increase_at_first_passage() {
        for (p, q) in [(2, 3), (3, 4), (4, 3), (3, 5), (5, 4)] {
            let t = torus_knot(p, q);
            let a = alexander_numbering(&t).unwrap();
            let code = gauss_code(&t).unwrap();
            let trav = t.traversal();
            let mut seen = vec![false; t.vertex_count()];
            for i in 0..trav.len() {
                let x = t.alpha(trav[i]).vertex();
                let next = trav[(i + 1) % trav.len()];
                if !std::mem::replace(&mut seen[x], true) {
                    let change = a.edge_value(next) - a.edge_value(trav[i]);
                    assert_eq!(change, r(code.sign(x).value(), 1));
                }
            }
        }
    }

    #[test]
    fn diameters() {
        assert_eq!(dual_diameter(&CurveMap::circle()), 1);
        assert_eq!(dual_diameter(&torus_knot(2, 3)), 2);
        let v = dual_diameter(&torus_knot(5, 4)) as i64;
        assert!(8 <= 2 * 15 * v + 15);
    }
}
