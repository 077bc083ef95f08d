//! Homotopy moves and medial electrical moves on four-regular maps, plus
//! vertex smoothing.
//!
//! Removal moves (1->0, 2->0) and smoothings are strand splices: the removed
//! crossings are replaced by a pairing of their darts and every surviving dart
//! is reconnected by following the pairing until it reaches another
//! survivor. 3->3 keeps the three crossings and rewires the twelve darts
//! around the triangle.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gauss::gauss_code;
use crate::map::{CurveMap, Dart, Faces};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveKind {
    #[serde(rename = "1->0")]
    OneZero,
    #[serde(rename = "0->1")]
    ZeroOne,
    #[serde(rename = "2->0")]
    TwoZero,
    #[serde(rename = "0->2")]
    ZeroTwo,
    #[serde(rename = "3->3")]
    ThreeThree,
    #[serde(rename = "2->1")]
    TwoOne,
    #[serde(rename = "1->2")]
    OneTwo,
}

impl MoveKind {
    pub const ALL: [MoveKind; 7] = [
        MoveKind::OneZero,
        MoveKind::ZeroOne,
        MoveKind::TwoZero,
        MoveKind::ZeroTwo,
        MoveKind::ThreeThree,
        MoveKind::TwoOne,
        MoveKind::OneTwo,
    ];
    pub const HOMOTOPY: [MoveKind; 5] = [
        MoveKind::OneZero,
        MoveKind::ZeroOne,
        MoveKind::TwoZero,
        MoveKind::ZeroTwo,
        MoveKind::ThreeThree,
    ];
    pub const HOMOTOPY_DECREASING: [MoveKind; 3] =
        [MoveKind::OneZero, MoveKind::TwoZero, MoveKind::ThreeThree];
    pub const MEDIAL_DECREASING: [MoveKind; 3] =
        [MoveKind::OneZero, MoveKind::TwoOne, MoveKind::ThreeThree];

    /// Change in crossing count.
    pub fn vertex_delta(self) -> i64 {
        match self {
            MoveKind::OneZero => -1,
            MoveKind::ZeroOne => 1,
            MoveKind::TwoZero => -2,
            MoveKind::ZeroTwo => 2,
            MoveKind::ThreeThree => 0,
            MoveKind::TwoOne => -1,
            MoveKind::OneTwo => 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MoveKind::OneZero => "1->0",
            MoveKind::ZeroOne => "0->1",
            MoveKind::TwoZero => "2->0",
            MoveKind::ZeroTwo => "0->2",
            MoveKind::ThreeThree => "3->3",
            MoveKind::TwoOne => "2->1",
            MoveKind::OneTwo => "1->2",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for MoveKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        MoveKind::ALL
            .into_iter()
            .find(|k| k.label() == s || k.label().replace("->", "") == s)
            .ok_or_else(|| format!("unknown move kind {s:?}"))
    }
}

/// An applicable local move.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveSite {
    /// Empty monogon, given by its dart.
    OneZero { face: Dart },
    /// New kink on the edge of `edge`, in the face to the right of `edge`
    /// (`right = true`) or to its left. On the circle `edge` is ignored and
    /// `right` selects a loop outside (`true`) or inside.
    ZeroOne { edge: Dart, right: bool },
    /// Empty bigon with two distinct crossings.
    TwoZero { face: Dart },
    /// Push the edge of `finger` across the edge of `target`; both darts
    /// have the common face on their right.
    ZeroTwo { finger: Dart, target: Dart },
    /// Empty triangle with three distinct crossings.
    ThreeThree { face: Dart },
    /// Contract an empty bigon to one crossing.
    TwoOne { face: Dart },
    /// Split crossing `vertex` into an empty bigon; `variant` picks which
    /// pair of adjacent darts goes to the first new crossing.
    OneTwo { vertex: usize, variant: usize },
}

impl MoveSite {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSite::OneZero { .. } => MoveKind::OneZero,
            MoveSite::ZeroOne { .. } => MoveKind::ZeroOne,
            MoveSite::TwoZero { .. } => MoveKind::TwoZero,
            MoveSite::ZeroTwo { .. } => MoveKind::ZeroTwo,
            MoveSite::ThreeThree { .. } => MoveKind::ThreeThree,
            MoveSite::TwoOne { .. } => MoveKind::TwoOne,
            MoveSite::OneTwo { .. } => MoveKind::OneTwo,
        }
    }

    /// Dart that locates the site (for face sites, any dart of the face).
    pub fn anchor(&self) -> Dart {
        match *self {
            MoveSite::OneZero { face }
            | MoveSite::TwoZero { face }
            | MoveSite::ThreeThree { face }
            | MoveSite::TwoOne { face } => face,
            MoveSite::ZeroOne { edge, .. } => edge,
            MoveSite::ZeroTwo { finger, .. } => finger,
            MoveSite::OneTwo { vertex, variant } => Dart::new(vertex, variant),
        }
    }
}

/// Distinct vertices of a face orbit, or `None` if a vertex repeats.
fn distinct_vertices(orbit: &[Dart]) -> Option<Vec<usize>> {
    let mut vs: Vec<usize> = orbit.iter().map(|d| d.vertex()).collect();
    vs.sort_unstable();
    let len = vs.len();
    vs.dedup();
    (vs.len() == len).then_some(vs)
}

fn face_orbit(curve: &CurveMap, start: Dart) -> Vec<Dart> {
    let mut out = vec![start];
    let mut d = curve.face_next(start);
    while d != start {
        out.push(d);
        d = curve.face_next(d);
    }
    out
}

fn face_site_ok(curve: &CurveMap, face: Dart, degree: usize) -> bool {
    if face.index() >= 4 * curve.vertex_count() {
        return false;
    }
    let orbit = face_orbit(curve, face);
    orbit.len() == degree && (degree == 1 || distinct_vertices(&orbit).is_some())
}

/// All sites of the requested kinds in a deterministic order.
pub fn enumerate_moves(curve: &CurveMap, kinds: &[MoveKind]) -> Vec<MoveSite> {
    let mut out = Vec::new();
    let wants = |k: MoveKind| kinds.contains(&k);
    if curve.is_circle() {
        if wants(MoveKind::ZeroOne) {
            for right in [true, false] {
                out.push(MoveSite::ZeroOne { edge: Dart(0), right });
            }
        }
        return out;
    }
    let faces = curve.faces();
    for orbit in &faces.orbits {
        let face = *orbit.iter().min().unwrap();
        let distinct = orbit.len() == 1 || distinct_vertices(orbit).is_some();
        match orbit.len() {
            1 if wants(MoveKind::OneZero) => out.push(MoveSite::OneZero { face }),
            2 if distinct => {
                if wants(MoveKind::TwoZero) {
                    out.push(MoveSite::TwoZero { face });
                }
                if wants(MoveKind::TwoOne) {
                    out.push(MoveSite::TwoOne { face });
                }
            }
            3 if distinct && wants(MoveKind::ThreeThree) => out.push(MoveSite::ThreeThree { face }),
            _ => {}
        }
    }
    if wants(MoveKind::ZeroOne) {
        for d in curve.darts() {
            if d < curve.alpha(d) {
                for right in [true, false] {
                    out.push(MoveSite::ZeroOne { edge: d, right });
                }
            }
        }
    }
    if wants(MoveKind::ZeroTwo) {
        for orbit in &faces.orbits {
            for &f in orbit {
                for &g in orbit {
                    if f != g && curve.alpha(f) != g {
                        out.push(MoveSite::ZeroTwo { finger: f, target: g });
                    }
                }
            }
        }
    }
    if wants(MoveKind::OneTwo) {
        for v in 0..curve.vertex_count() {
            for variant in 0..2 {
                out.push(MoveSite::OneTwo { vertex: v, variant });
            }
        }
    }
    out
}

/// Whether `site` can be applied to `curve` as it stands.
pub fn site_valid(curve: &CurveMap, site: &MoveSite) -> bool {
    let n = curve.vertex_count();
    match *site {
        MoveSite::OneZero { face } => face_site_ok(curve, face, 1),
        MoveSite::TwoZero { face } | MoveSite::TwoOne { face } => face_site_ok(curve, face, 2),
        MoveSite::ThreeThree { face } => face_site_ok(curve, face, 3),
        MoveSite::ZeroOne { edge, .. } => curve.is_circle() || edge.index() < 4 * n,
        MoveSite::ZeroTwo { finger, target } => {
            finger.index() < 4 * n
                && target.index() < 4 * n
                && finger != target
                && curve.alpha(finger) != target
                && face_orbit(curve, finger).contains(&target)
        }
        MoveSite::OneTwo { vertex, variant } => vertex < n && variant < 2,
    }
}

/// Mutable dart table used while a move is being built.
struct Splice {
    alpha: Vec<Option<Dart>>,
    dead: Vec<bool>,
}

impl Splice {
    fn from(curve: &CurveMap) -> Self {
        Splice {
            alpha: curve.alpha_table().iter().map(|&d| Some(d)).collect(),
            dead: vec![false; curve.vertex_count()],
        }
    }

    fn add_vertex(&mut self) -> usize {
        self.alpha.extend([None; 4]);
        self.dead.push(false);
        self.dead.len() - 1
    }

    fn link(&mut self, a: Dart, b: Dart) {
        self.alpha[a.index()] = Some(b);
        self.alpha[b.index()] = Some(a);
    }

    fn get(&self, d: Dart) -> Dart {
        self.alpha[d.index()].expect("unlinked dart")
    }

    /// Deletes `vertices`, joining the dart pairs given by `pair` (an
    /// involution on the darts of the deleted vertices). Returns the number of
    /// closed strands that lost all their crossings.
    fn remove(&mut self, vertices: &[usize], pair: impl Fn(Dart) -> Dart) -> usize {
        for &v in vertices {
            self.dead[v] = true;
        }
        let dead = |d: Dart| self.dead[d.vertex()];
        let mut new_links = Vec::new();
        let mut visited = vec![false; self.alpha.len()];
        for &v in vertices {
            for k in 0..4 {
                let start = Dart::new(v, k);
                if visited[start.index()] {
                    continue;
                }
                // walk outwards in both directions from `start` to survivors
                let mut ends = Vec::new();
                let mut closed = false;
                for first in [start, pair(start)] {
                    let mut d = first;
                    loop {
                        visited[d.index()] = true;
                        let a = self.get(d);
                        if !dead(a) {
                            ends.push(a);
                            break;
                        }
                        visited[a.index()] = true;
                        d = pair(a);
                        if d == start || d == pair(start) && d != first {
                            closed = true;
                            break;
                        }
                    }
                    if closed {
                        break;
                    }
                }
                if closed {
                    new_links.push(None);
                } else {
                    new_links.push(Some((ends[0], ends[1])));
                }
            }
        }
        let mut free = 0;
        for l in new_links {
            match l {
                Some((a, b)) => self.link(a, b),
                None => free += 1,
            }
        }
        free
    }

    /// Compacts away dead vertices. `base` and `outer` are old dart ids and
    /// must survive.
    fn finish(self, base: Dart, outer: Dart) -> CurveMap {
        let mut new_id = vec![usize::MAX; self.dead.len()];
        let mut next = 0;
        for (v, &d) in self.dead.iter().enumerate() {
            if !d {
                new_id[v] = next;
                next += 1;
            }
        }
        if next == 0 {
            return CurveMap::circle();
        }
        let m = |d: Dart| Dart::new(new_id[d.vertex()], d.slot());
        let mut alpha = vec![Dart(0); 4 * next];
        for (i, a) in self.alpha.iter().enumerate() {
            let d = Dart(i as u32);
            if !self.dead[d.vertex()] {
                alpha[m(d).index()] = m(a.expect("unlinked dart"));
            }
        }
        debug_assert!(!self.dead[base.vertex()] && !self.dead[outer.vertex()]);
        CurveMap::from_raw(alpha, m(base), m(outer))
    }
}

/// First dart of the face orbit through `start` not at a vertex in `gone`.
fn surviving_in_face(curve: &CurveMap, start: Dart, gone: &[usize]) -> Option<Dart> {
    face_orbit(curve, start)
        .into_iter()
        .find(|d| !gone.contains(&d.vertex()))
}

/// New outer face representative after deleting `gone`, falling back to the
/// face through `absorb` when the outer face itself collapses.
fn outer_after_delete(curve: &CurveMap, gone: &[usize], absorb: &[Dart]) -> Option<Dart> {
    surviving_in_face(curve, curve.outer(), gone)
        .or_else(|| absorb.iter().find_map(|&a| surviving_in_face(curve, a, gone)))
}

/// New basepoint: first traversal dart (same orientation) at a surviving
/// vertex.
fn base_after_delete(curve: &CurveMap, gone: &[usize]) -> Option<Dart> {
    curve
        .strand_from(curve.base())
        .into_iter()
        .chain(curve.darts())
        .find(|d| !gone.contains(&d.vertex()))
}

fn any_survivor(curve: &CurveMap, gone: &[usize]) -> Option<Dart> {
    curve.darts().find(|d| !gone.contains(&d.vertex()))
}

/// Applies `site`. Removal moves that delete every crossing yield the circle.
pub fn apply_move(curve: &CurveMap, site: &MoveSite) -> Result<CurveMap> {
    if !site_valid(curve, site) {
        return Err(Error::InvalidSite(format!("{} at {}", site.kind(), site.anchor())));
    }
    let out = match *site {
        MoveSite::OneZero { face } => {
            let x = face.vertex();
            let gone = [x];
            let absorb = [curve.alpha(face)];
            let mut sp = Splice::from(curve);
            sp.remove(&gone, |d| d.opposite());
            finish_delete(curve, sp, &gone, &absorb)
        }
        MoveSite::TwoZero { face } => {
            let other = curve.alpha(face);
            let gone = [face.vertex(), other.vertex()];
            // the bigon merges with the corner faces beyond its two tips
            let absorb = [face.turn(2), other.turn(3)];
            let mut sp = Splice::from(curve);
            sp.remove(&gone, |d| d.opposite());
            finish_delete(curve, sp, &gone, &absorb)
        }
        MoveSite::TwoOne { face } => contract_bigon(curve, face),
        MoveSite::ThreeThree { face } => flip_triangle(curve, face),
        MoveSite::ZeroOne { edge, right } => add_kink(curve, edge, right),
        MoveSite::ZeroTwo { finger, target } => add_bigon(curve, finger, target),
        MoveSite::OneTwo { vertex, variant } => split_vertex(curve, vertex, variant),
    };
    debug_assert!(out.validate().is_ok(), "{site:?} broke the map");
    Ok(out)
}

fn finish_delete(curve: &CurveMap, sp: Splice, gone: &[usize], absorb: &[Dart]) -> CurveMap {
    if sp.dead.iter().all(|&d| d) {
        return CurveMap::circle();
    }
    let outer = outer_after_delete(curve, gone, absorb)
        .or_else(|| any_survivor(curve, gone))
        .unwrap();
    let base = base_after_delete(curve, gone).unwrap();
    sp.finish(base, outer)
}

fn contract_bigon(curve: &CurveMap, face: Dart) -> CurveMap {
    // bigon darts: face at x, alpha(face) at y, rotate(alpha(face)) at y
    let d1 = face;
    let a = curve.alpha(d1);
    let (x, y) = (d1.vertex(), a.vertex());
    let survivors = [d1.turn(1), d1.turn(2), a.turn(2), a.turn(3)];
    let mut sp = Splice::from(curve);
    let z = sp.add_vertex();
    for (i, &s) in survivors.iter().enumerate() {
        let p = curve.alpha(s);
        let target = match survivors.iter().position(|&t| t == p) {
            Some(j) => Dart::new(z, j),
            None => p,
        };
        sp.link(Dart::new(z, i), target);
    }
    sp.dead[x] = true;
    sp.dead[y] = true;
    let relocate = |d: Dart| match survivors.iter().position(|&t| t == d) {
        Some(j) => Dart::new(z, j),
        None => d,
    };
    let gone = [x, y];
    let outer = surviving_in_face(curve, curve.outer(), &gone)
        .map(relocate)
        .or_else(|| surviving_in_face(curve, d1.turn(2), &gone).map(relocate))
        .unwrap_or(Dart::new(z, 0));
    let base = base_after_delete(curve, &gone).map(relocate).unwrap_or(Dart::new(z, 0));
    // survivors still hold their old links at dead vertices; finish() skips
    // dead vertices and `relocate` already mapped base/outer onto z
    for &s in &survivors {
        sp.alpha[s.index()] = None;
    }
    sp.finish(base, outer)
}

fn flip_triangle(curve: &CurveMap, face: Dart) -> CurveMap {
    let t = [face, curve.face_next(face), curve.face_next(curve.face_next(face))];
    let verts: Vec<usize> = t.iter().map(|d| d.vertex()).collect();
    // per triangle edge i: e = t[i], f = alpha(t[i]); primes are opposites
    let mut sp = Splice::from(curve);
    let outward: Vec<Dart> = t
        .iter()
        .flat_map(|&e| [e.opposite(), curve.alpha(e).opposite()])
        .collect();
    // stub of outward dart o is carried by N(o) after the flip
    let carrier = |o: Dart| -> Dart {
        let i = outward.iter().position(|&w| w == o).unwrap();
        let e = t[i / 2];
        if i % 2 == 0 {
            curve.alpha(e)
        } else {
            e
        }
    };
    let mut links = Vec::new();
    for &o in &outward {
        let p = curve.alpha(o);
        let partner = if outward.contains(&p) { carrier(p) } else { p };
        links.push((carrier(o), partner));
    }
    for &e in &t {
        links.push((e.opposite(), curve.alpha(e).opposite()));
    }
    for (a, b) in links {
        sp.link(a, b);
    }
    let outer_face = face_orbit(curve, curve.outer());
    let outer = if outer_face.contains(&face) {
        t[0].opposite()
    } else {
        outer_face
            .iter()
            .find_map(|&d| {
                if !verts.contains(&d.vertex()) {
                    Some(d)
                } else if outward.contains(&d) {
                    Some(carrier(d))
                } else {
                    None
                }
            })
            .unwrap_or(t[0].opposite())
    };
    let base = curve.base();
    sp.finish(base, outer)
}

fn add_kink(curve: &CurveMap, edge: Dart, right: bool) -> CurveMap {
    if curve.is_circle() {
        // figure-eight; `right` puts the new loop outside the old circle
        let alpha = vec![Dart(1), Dart(0), Dart(3), Dart(2)];
        let outer = if right { Dart(2) } else { Dart(1) };
        return CurveMap::from_raw(alpha, Dart(0), outer);
    }
    let far = curve.alpha(edge);
    let mut sp = Splice::from(curve);
    let z = sp.add_vertex();
    let zd = |k| Dart::new(z, k);
    sp.link(edge, zd(0));
    if right {
        // loop in the face right of `edge`: between z.3 and z.0
        sp.link(far, zd(1));
        sp.link(zd(2), zd(3));
    } else {
        sp.link(far, zd(3));
        sp.link(zd(1), zd(2));
    }
    let base = if curve.base() == far { zd(if right { 1 } else { 3 }) } else { curve.base() };
    // `base == edge` keeps its id and still leaves along the same edge
    sp.finish(base, curve.outer())
}

fn add_bigon(curve: &CurveMap, finger: Dart, target: Dart) -> CurveMap {
    let (f1, g1) = (finger, curve.alpha(finger));
    let (f2, g2) = (target, curve.alpha(target));
    let mut sp = Splice::from(curve);
    let x = sp.add_vertex();
    let y = sp.add_vertex();
    let xd = |k| Dart::new(x, k);
    let yd = |k| Dart::new(y, k);
    sp.link(xd(0), yd(2));
    sp.link(xd(1), yd(1));
    sp.link(xd(2), f2);
    sp.link(yd(0), g2);
    sp.link(yd(3), f1);
    sp.link(xd(3), g1);
    // base dart ids are kept; a base of g1 or g2 now points into the new
    // crossings along the same edge and direction
    sp.finish(curve.base(), curve.outer())
}

fn split_vertex(curve: &CurveMap, v: usize, variant: usize) -> CurveMap {
    let z = |k: usize| Dart::new(v, variant + k);
    let mut sp = Splice::from(curve);
    let x = sp.add_vertex();
    let y = sp.add_vertex();
    // x: [bigon, z0, z1, bigon]   y: [bigon, bigon, z2, z3]
    let place = [Dart::new(x, 1), Dart::new(x, 2), Dart::new(y, 2), Dart::new(y, 3)];
    let moved = |d: Dart| (d.vertex() == v).then(|| place[(d.slot() + 4 - variant) % 4]);
    for (k, &slot) in place.iter().enumerate() {
        let p = curve.alpha(z(k));
        sp.link(slot, moved(p).unwrap_or(p));
    }
    sp.link(Dart::new(x, 0), Dart::new(y, 0));
    sp.link(Dart::new(x, 3), Dart::new(y, 1));
    sp.dead[v] = true;
    for k in 0..4 {
        sp.alpha[z(k).index()] = None;
    }
    let base = moved(curve.base()).unwrap_or(curve.base());
    let outer = moved(curve.outer()).unwrap_or(curve.outer());
    sp.finish(base, outer)
}

/// Defect change predicted from the interleaving pattern at the site.
pub fn predict_delta(curve: &CurveMap, site: &MoveSite) -> Result<i64> {
    if !site_valid(curve, site) {
        return Err(Error::InvalidSite(format!("{} at {}", site.kind(), site.anchor())));
    }
    let code = gauss_code(curve)?;
    match *site {
        MoveSite::OneZero { .. } => Ok(0),
        MoveSite::TwoZero { face } => {
            let (x, y) = (face.vertex(), curve.alpha(face).vertex());
            Ok(if code.interleaved_unchecked(x, y) { -2 } else { 0 })
        }
        MoveSite::ThreeThree { face } => {
            let a = face.vertex();
            let b = curve.face_next(face).vertex();
            let c = curve.face_next(curve.face_next(face)).vertex();
            let pairs = [(a, b), (b, c), (a, c)]
                .iter()
                .filter(|&&(p, q)| code.interleaved_unchecked(p, q))
                .count();
            Ok(if pairs % 2 == 0 { 2 } else { -2 })
        }
        _ => Err(Error::UnsupportedKind(site.kind().to_string())),
    }
}

/// The two ways to resolve a crossing into two non-crossing strands.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SmoothingChoice {
    /// Join slots 0-1 and 2-3.
    A,
    /// Join slots 1-2 and 3-0.
    B,
}

/// Result of smoothing one crossing.
#[derive(Clone, Debug)]
pub struct Smoothing {
    /// Remaining map; the circle when no crossing is left.
    pub map: CurveMap,
    /// Number of closed curves in the result, counting vertex-free circles.
    pub curves: usize,
    /// Number of connected pieces of the drawing, counting free circles.
    pub pieces: usize,
}

impl Smoothing {
    /// Whether the result is one connected drawing.
    pub fn connected(&self) -> bool {
        self.pieces == 1
    }
}

pub fn smooth(curve: &CurveMap, x: usize, choice: SmoothingChoice) -> Result<Smoothing> {
    if x >= curve.vertex_count() {
        return Err(Error::InvalidArguments(format!("no crossing {x}")));
    }
    let pair = move |d: Dart| match (choice, d.slot()) {
        (SmoothingChoice::A, s) => Dart::new(d.vertex(), s ^ 1),
        (SmoothingChoice::B, s) => Dart::new(d.vertex(), [3, 2, 1, 0][s]),
    };
    let gone = [x];
    let mut sp = Splice::from(curve);
    let free = sp.remove(&gone, pair);
    if sp.dead.iter().all(|&d| d) {
        return Ok(Smoothing {
            map: CurveMap::circle(),
            curves: free,
            pieces: free,
        });
    }
    let absorb: Vec<Dart> = (0..4).map(|k| Dart::new(x, k)).collect();
    let outer = outer_after_delete(curve, &gone, &absorb)
        .or_else(|| any_survivor(curve, &gone))
        .unwrap();
    let base = base_after_delete(curve, &gone).unwrap();
    let map = sp.finish(base, outer);
    Ok(Smoothing {
        curves: map.strand_count() + free,
        pieces: map.component_count() + free,
        map,
    })
}

/// The choice that keeps a unicursal curve a single closed curve at `x`.
pub fn connected_choice(curve: &CurveMap, x: usize) -> Result<SmoothingChoice> {
    for c in [SmoothingChoice::A, SmoothingChoice::B] {
        if smooth(curve, x, c)?.curves == 1 {
            return Ok(c);
        }
    }
    Err(Error::NotUnicursal)
}

/// Number of faces of each degree, for quick structural summaries.
pub fn face_census(faces: &Faces) -> Vec<usize> {
    let max = faces.orbits.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![0; max + 1];
    for o in &faces.orbits {
        out[o.len()] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defect::defect_polyak;
    use crate::generators::torus_knot;

    fn fig8() -> CurveMap {
        CurveMap::parse_cmap("cmap 1\nvertices 1\nv 0 0.1 0.0 0.3 0.2\nbase 0.0\nouter 0.2\n").unwrap()
    }

    fn count(sites: &[MoveSite], k: MoveKind) -> usize {
        sites.iter().filter(|s| s.kind() == k).count()
    }

    #[test]
    fn trefoil_sites() {
        let sites = enumerate_moves(&torus_knot(2, 3), &MoveKind::HOMOTOPY_DECREASING);
        assert_eq!(count(&sites, MoveKind::OneZero), 0);
        assert_eq!(count(&sites, MoveKind::TwoZero), 3);
        assert_eq!(count(&sites, MoveKind::ThreeThree), 2);
    }

    #[test]
    fn figure_eight_and_circle_sites() {
        assert_eq!(enumerate_moves(&fig8(), &[MoveKind::OneZero]).len(), 2);
        let c = CurveMap::circle();
        assert!(enumerate_moves(&c, &MoveKind::HOMOTOPY_DECREASING).is_empty());
        assert_eq!(enumerate_moves(&c, &[MoveKind::ZeroOne]).len(), 2);
    }

    #[test]
    fn trefoil_moves() {
        let t = torus_knot(2, 3);
        let sites = enumerate_moves(&t, &MoveKind::HOMOTOPY_DECREASING);
        for s in &sites {
            let after = apply_move(&t, s).unwrap();
            after.validate().unwrap();
            assert!(after.is_unicursal());
            let delta = defect_polyak(&after).unwrap() - 2;
            assert_eq!(predict_delta(&t, s).unwrap(), delta);
            match s.kind() {
                MoveKind::TwoZero => {
                    assert_eq!(after.vertex_count(), 1);
                    assert_eq!(delta, -2);
                }
                MoveKind::ThreeThree => {
                    assert_eq!(after.vertex_count(), 3);
                    assert_eq!(defect_polyak(&after).unwrap(), 0);
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn figure_eight_unkinks_to_circle() {
        let f = fig8();
        let s = enumerate_moves(&f, &[MoveKind::OneZero])[0];
        assert_eq!(predict_delta(&f, &s).unwrap(), 0);
        assert!(apply_move(&f, &s).unwrap().is_circle());
    }

    #[test]
    fn stale_site_rejected() {
        let t = torus_knot(2, 3);
        let bad = MoveSite::OneZero { face: Dart(0) };
        assert!(matches!(apply_move(&t, &bad), Err(Error::InvalidSite(_))));
        let inc = MoveSite::ZeroOne { edge: Dart(0), right: true };
        assert!(matches!(predict_delta(&t, &inc), Err(Error::UnsupportedKind(_))));
    }

    #[test]
    fn smoothing_figure_eight() {
        let f = fig8();
        let mut comps: Vec<usize> = [SmoothingChoice::A, SmoothingChoice::B]
            .iter()
            .map(|&c| {
                let s = smooth(&f, 0, c).unwrap();
                assert!(s.map.is_circle());
                s.curves
            })
            .collect();
        comps.sort();
        assert_eq!(comps, vec![1, 2]);
    }

    #[test]
    fn smoothing_trefoil_crossing() {
        let t = torus_knot(2, 3);
        for x in 0..3 {
            let c = connected_choice(&t, x).unwrap();
            let s = smooth(&t, x, c).unwrap();
            assert_eq!(s.curves, 1);
            assert_eq!(s.map.vertex_count(), 2);
            assert_eq!(s.map.traversal().len(), 4);
            s.map.validate().unwrap();
            let other = if c == SmoothingChoice::A { SmoothingChoice::B } else { SmoothingChoice::A };
            assert_eq!(smooth(&t, x, other).unwrap().map.strand_count(), 2);
        }
    }

    #[test]
    fn increasing_moves_are_valid() {
        let t = torus_knot(3, 4);
        let sites = enumerate_moves(&t, &[MoveKind::ZeroOne, MoveKind::ZeroTwo, MoveKind::OneTwo]);
        assert!(!sites.is_empty());
        for s in sites {
            let after = apply_move(&t, &s).unwrap();
            after.validate().unwrap();
            assert_eq!(after.vertex_count() as i64, 8 + s.kind().vertex_delta());
            if s.kind() != MoveKind::OneTwo {
                assert!(after.is_unicursal(), "{s:?}");
            }
        }
    }

    #[test]
    fn kind_labels_parse() {
        for k in MoveKind::ALL {
            assert_eq!(k.label().parse::<MoveKind>().unwrap(), k);
        }
    }
}
