//! Plane graphs of arbitrary degree: duals, medial maps, and the six facial
//! electrical transformations.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::canon::{canonical_key, CanonicalKey, DartPerms};
use crate::error::{parse_err, Error, Result};
use crate::map::{CmapDoc, CurveMap, Dart};
use crate::moves::MoveSite;

/// A connected plane graph as a rotation system. Darts of vertex `v` are
/// `first[v]..first[v + 1]` in counterclockwise order. A graph without edges is
/// a single isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    first: Vec<usize>,
    owner: Vec<usize>,
    alpha: Vec<usize>,
    outer: usize,
}

impl PlaneGraph {
    /// Builds from per-vertex rotations of `(vertex, slot)` dart targets.
    pub fn from_rotations(rows: &[Vec<(usize, usize)>], outer: Option<(usize, usize)>) -> Result<Self> {
        let mut first = vec![0];
        for r in rows {
            first.push(first.last().unwrap() + r.len());
        }
        let locate = |(v, s): (usize, usize)| -> Result<usize> {
            if v < rows.len() && s < rows[v].len() {
                Ok(first[v] + s)
            } else {
                Err(Error::Validation(format!("dart {v}.{s} out of range")))
            }
        };
        let mut alpha = Vec::with_capacity(first[rows.len()]);
        let mut owner = Vec::with_capacity(alpha.capacity());
        for (v, r) in rows.iter().enumerate() {
            for &t in r {
                alpha.push(locate(t)?);
                owner.push(v);
            }
        }
        let outer = match outer {
            Some(o) => locate(o)?,
            None => 0,
        };
        let g = PlaneGraph {
            first,
            owner,
            alpha,
            outer,
        };
        g.validate()?;
        Ok(g)
    }

    /// Builds a simple graph from neighbor lists in counterclockwise order.
    pub fn from_neighbor_rotations(rot: &[Vec<usize>], outer: Option<(usize, usize)>) -> Result<Self> {
        let mut rows = Vec::with_capacity(rot.len());
        for (v, nbrs) in rot.iter().enumerate() {
            let mut row = Vec::with_capacity(nbrs.len());
            for &u in nbrs {
                let back = rot
                    .get(u)
                    .and_then(|r| r.iter().position(|&w| w == v))
                    .ok_or_else(|| Error::Validation(format!("edge {v}-{u} missing its reverse")))?;
                row.push((u, back));
            }
            rows.push(row);
        }
        PlaneGraph::from_rotations(&rows, outer)
    }

    /// The graph with one vertex and no edges.
    pub fn single_vertex() -> Self {
        PlaneGraph {
            first: vec![0, 0],
            owner: Vec::new(),
            alpha: Vec::new(),
            outer: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.first.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.alpha.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.first[v + 1] - self.first[v]
    }

    pub fn dart(&self, v: usize, slot: usize) -> usize {
        self.first[v] + slot
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        self.owner[d]
    }

    pub fn slot(&self, d: usize) -> usize {
        d - self.first[self.owner[d]]
    }

    pub fn alpha(&self, d: usize) -> usize {
        self.alpha[d]
    }

    pub fn rot(&self, d: usize) -> usize {
        let v = self.owner[d];
        if d + 1 == self.first[v + 1] {
            self.first[v]
        } else {
            d + 1
        }
    }

    pub fn rot_back(&self, d: usize) -> usize {
        let v = self.owner[d];
        if d == self.first[v] {
            self.first[v + 1] - 1
        } else {
            d - 1
        }
    }

    pub fn face_next(&self, d: usize) -> usize {
        self.rot(self.alpha[d])
    }

    /// Dart with the outer face on its right (meaningless without edges).
    pub fn outer(&self) -> usize {
        self.outer
    }

    /// Face orbits under `face_next`, each listing darts with the face on
    /// their right.
    pub fn face_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.alpha.len()];
        let mut out = Vec::new();
        for s in 0..self.alpha.len() {
            if seen[s] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                orbit.push(d);
                d = self.face_next(d);
            }
            out.push(orbit);
        }
        out
    }

    pub fn face_of(&self) -> Vec<usize> {
        let mut face = vec![0; self.alpha.len()];
        for (i, o) in self.face_orbits().iter().enumerate() {
            for &d in o {
                face[d] = i;
            }
        }
        face
    }

    pub fn face_orbit(&self, start: usize) -> Vec<usize> {
        let mut out = vec![start];
        let mut d = self.face_next(start);
        while d != start {
            out.push(d);
            d = self.face_next(d);
        }
        out
    }

    pub fn face_count(&self) -> usize {
        if self.alpha.is_empty() {
            1
        } else {
            self.face_orbits().len()
        }
    }

    fn connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for d in self.first[v]..self.first[v + 1] {
                let u = self.owner[self.alpha[d]];
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    pub fn validate(&self) -> Result<()> {
        if self.vertex_count() == 0 {
            return Err(Error::Validation("graph has no vertices".into()));
        }
        for d in 0..self.alpha.len() {
            let a = self.alpha[d];
            if a >= self.alpha.len() {
                return Err(Error::Validation("alpha out of range".into()));
            }
            if a == d {
                return Err(Error::Validation("alpha not fixed-point-free".into()));
            }
            if self.alpha[a] != d {
                return Err(Error::Validation("alpha not an involution".into()));
            }
        }
        if !self.alpha.is_empty() && self.outer >= self.alpha.len() {
            return Err(Error::Validation("outer dart out of range".into()));
        }
        if !self.connected() {
            return Err(Error::Validation("graph not connected".into()));
        }
        let chi = self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64;
        if chi != 2 {
            return Err(Error::Validation(format!("Euler characteristic {chi}, not 2")));
        }
        Ok(())
    }

    /// Edge index of each dart; edges numbered by their smaller dart.
    pub fn edge_ids(&self) -> Vec<usize> {
        let mut id = vec![usize::MAX; self.alpha.len()];
        let mut next = 0;
        for d in 0..self.alpha.len() {
            if id[d] == usize::MAX {
                id[d] = next;
                id[self.alpha[d]] = next;
                next += 1;
            }
        }
        id
    }

    pub(crate) fn dart_perms(&self) -> DartPerms {
        DartPerms {
            alpha: self.alpha.clone(),
            rot: (0..self.alpha.len()).map(|d| self.rot(d)).collect(),
        }
    }

    pub fn canonical_form(&self, include_mirror: bool) -> CanonicalKey {
        canonical_key(&self.dart_perms(), &[self.vertex_count() as u32], include_mirror)
    }

    /// Faces become vertices. The dual of the outer face's neighbor vertex
    /// side is kept outer: the face of the dual around the tail of `outer`.
    pub fn dual(&self) -> PlaneGraph {
        if self.alpha.is_empty() {
            return PlaneGraph::single_vertex();
        }
        let orbits = self.face_orbits();
        let mut new_id = vec![0; self.alpha.len()];
        let mut first = vec![0];
        let mut owner = Vec::with_capacity(self.alpha.len());
        let mut next = 0;
        for (f, o) in orbits.iter().enumerate() {
            // boundary order is clockwise around the face
            new_id[o[0]] = next;
            for (i, &d) in o[1..].iter().rev().enumerate() {
                new_id[d] = next + 1 + i;
            }
            next += o.len();
            first.push(next);
            owner.extend(std::iter::repeat_n(f, o.len()));
        }
        let mut alpha = vec![0; self.alpha.len()];
        for d in 0..self.alpha.len() {
            alpha[new_id[d]] = new_id[self.alpha[d]];
        }
        PlaneGraph {
            first,
            owner,
            alpha,
            outer: new_id[self.alpha[self.outer]],
        }
    }

    /// Medial dart at the midpoint of the edge of `d` whose right side lies in
    /// the face of the graph to the right of `d`.
    pub fn medial_face_dart(&self, d: usize) -> Dart {
        let e = self.edge_ids()[d];
        Dart::new(e, if d < self.alpha[d] { 3 } else { 1 })
    }

    /// Medial dart whose right side lies in the region around the tail vertex
    /// of `d`.
    pub fn medial_vertex_dart(&self, d: usize) -> Dart {
        let e = self.edge_ids()[d];
        Dart::new(e, if d < self.alpha[d] { 2 } else { 0 })
    }

    /// Medial map: one crossing per edge, numbered as in [`edge_ids`]. With
    /// the edge's smaller dart `d` pointing east, the slots point northeast,
    /// northwest, southwest, southeast.
    ///
    /// [`edge_ids`]: PlaneGraph::edge_ids
    pub fn medial(&self) -> CurveMap {
        if self.alpha.is_empty() {
            return CurveMap::circle();
        }
        let ids = self.edge_ids();
        let canonical = |x: usize| x < self.alpha[x];
        let as_first = |x: usize| Dart::new(ids[x], if canonical(x) { 1 } else { 3 });
        let as_second = |x: usize| Dart::new(ids[x], if canonical(x) { 2 } else { 0 });
        let mut alpha = vec![Dart(0); 4 * self.edge_count()];
        for a in 0..self.alpha.len() {
            let (p, q) = (as_first(a), as_second(self.rot(a)));
            alpha[p.index()] = q;
            alpha[q.index()] = p;
        }
        let outer = self.medial_face_dart(self.outer);
        CurveMap::from_raw(alpha, outer, outer)
    }

    pub fn to_cmap(&self) -> String {
        let mut s = String::from("cmap 1\n");
        writeln!(s, "vertices {}", self.vertex_count()).unwrap();
        for v in 0..self.vertex_count() {
            write!(s, "v {v} {}", self.degree(v)).unwrap();
            for d in self.first[v]..self.first[v + 1] {
                let a = self.alpha[d];
                write!(s, " {}.{}", self.owner[a], self.slot(a)).unwrap();
            }
            s.push('\n');
        }
        if !self.alpha.is_empty() {
            writeln!(s, "outer {}.{}", self.owner[self.outer], self.slot(self.outer)).unwrap();
        }
        s
    }

    pub fn parse_cmap(text: &str) -> Result<PlaneGraph> {
        let doc = CmapDoc::parse(text)?;
        if doc.circle {
            return Err(parse_err(doc.circle_line, "a plane graph has no circle marker"));
        }
        if doc.vertices == 0 {
            return Err(parse_err(doc.last_line, "a plane graph needs a vertex"));
        }
        let mut rows = vec![Vec::new(); doc.vertices];
        for row in &doc.rows {
            rows[row.id] = row.targets.clone();
        }
        let has_edges = rows.iter().any(|r| !r.is_empty());
        if has_edges && doc.outer.is_none() {
            return Err(parse_err(doc.last_line, "missing outer line"));
        }
        PlaneGraph::from_rotations(&rows, doc.outer.filter(|_| has_edges))
    }

    /// Deletes the edge of `d`; the result must stay connected.
    pub fn delete_edge(&self, d: usize) -> Result<PlaneGraph> {
        let mut ed = Edit::from(self);
        let a = self.alpha[d];
        ed.remove_dart(d);
        ed.remove_dart(a);
        ed.prefer_orbit(self, self.outer, &[d, a]);
        ed.prefer_orbit(self, a, &[d, a]);
        ed.build()
    }

    /// Contracts the non-loop edge of `d`, merging its endpoints.
    pub fn contract_edge(&self, d: usize) -> Result<PlaneGraph> {
        let a = self.alpha[d];
        let (u, w) = (self.owner[d], self.owner[a]);
        if u == w {
            return Err(Error::InvalidArguments("cannot contract a loop".into()));
        }
        let mut ed = Edit::from(self);
        let after = |x: usize| {
            let mut out = Vec::new();
            let mut y = self.rot(x);
            while y != x {
                out.push(y);
                y = self.rot(y);
            }
            out
        };
        let mut merged = after(d);
        merged.extend(after(a));
        ed.rots[u] = Some(merged);
        ed.rots[w] = None;
        ed.prefer_orbit(self, self.outer, &[d, a]);
        ed.prefer_orbit(self, a, &[d, a]);
        ed.build()
    }
}

impl fmt::Display for PlaneGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cmap())
    }
}

/// Editable copy of a plane graph; darts keep their ids, new darts are
/// appended.
struct Edit {
    rots: Vec<Option<Vec<usize>>>,
    alpha: Vec<usize>,
    outer_candidates: Vec<usize>,
}

impl Edit {
    fn from(g: &PlaneGraph) -> Self {
        Edit {
            rots: (0..g.vertex_count())
                .map(|v| Some((g.first[v]..g.first[v + 1]).collect()))
                .collect(),
            alpha: g.alpha.clone(),
            outer_candidates: Vec::new(),
        }
    }

    fn new_dart(&mut self) -> usize {
        self.alpha.push(usize::MAX);
        self.alpha.len() - 1
    }

    fn link(&mut self, a: usize, b: usize) {
        self.alpha[a] = b;
        self.alpha[b] = a;
    }

    fn remove_dart(&mut self, d: usize) {
        for r in self.rots.iter_mut().flatten() {
            r.retain(|&x| x != d);
        }
    }

    /// Replaces dart `d` in its rotation by `with` (in counterclockwise order).
    fn replace_dart(&mut self, d: usize, with: &[usize]) {
        for r in self.rots.iter_mut().flatten() {
            if let Some(i) = r.iter().position(|&x| x == d) {
                r.splice(i..=i, with.iter().copied());
                return;
            }
        }
    }

    fn prefer_orbit(&mut self, g: &PlaneGraph, start: usize, gone: &[usize]) {
        self.outer_candidates
            .extend(g.face_orbit(start).into_iter().filter(|d| !gone.contains(d)));
    }

    fn build(self) -> Result<PlaneGraph> {
        let mut new_id = vec![usize::MAX; self.alpha.len()];
        let mut vertex_id = vec![usize::MAX; self.rots.len()];
        let mut first = vec![0];
        let mut owner = Vec::new();
        let mut next = 0;
        for (v, r) in self.rots.iter().enumerate() {
            if let Some(r) = r {
                vertex_id[v] = first.len() - 1;
                for &d in r {
                    new_id[d] = next;
                    owner.push(vertex_id[v]);
                    next += 1;
                }
                first.push(next);
            }
        }
        let mut alpha = vec![0; next];
        for (old, &new) in new_id.iter().enumerate() {
            if new != usize::MAX {
                let a = new_id[self.alpha[old]];
                if a == usize::MAX {
                    return Err(Error::Validation("dangling dart after edit".into()));
                }
                alpha[new] = a;
            }
        }
        let outer = self
            .outer_candidates
            .iter()
            .map(|&d| new_id.get(d).copied().unwrap_or(usize::MAX))
            .find(|&d| d != usize::MAX)
            .unwrap_or(0);
        let g = PlaneGraph {
            first,
            owner,
            alpha,
            outer,
        };
        g.validate()?;
        Ok(g)
    }
}

/// The six electrical transformations, in dual pairs.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ElectricalKind {
    Leaf,
    Loop,
    Series,
    Parallel,
    YDelta,
    DeltaY,
}

impl ElectricalKind {
    pub const ALL: [ElectricalKind; 6] = [
        ElectricalKind::Leaf,
        ElectricalKind::Loop,
        ElectricalKind::Series,
        ElectricalKind::Parallel,
        ElectricalKind::YDelta,
        ElectricalKind::DeltaY,
    ];

    pub fn dual(self) -> ElectricalKind {
        match self {
            ElectricalKind::Leaf => ElectricalKind::Loop,
            ElectricalKind::Loop => ElectricalKind::Leaf,
            ElectricalKind::Series => ElectricalKind::Parallel,
            ElectricalKind::Parallel => ElectricalKind::Series,
            ElectricalKind::YDelta => ElectricalKind::DeltaY,
            ElectricalKind::DeltaY => ElectricalKind::YDelta,
        }
    }

    /// True for kinds located at a vertex (the others sit on a face).
    pub fn at_vertex(self) -> bool {
        matches!(self, ElectricalKind::Leaf | ElectricalKind::Series | ElectricalKind::YDelta)
    }

    /// Edge count change.
    pub fn edge_delta(self) -> i64 {
        match self {
            ElectricalKind::Leaf | ElectricalKind::Loop => -1,
            ElectricalKind::Series | ElectricalKind::Parallel => -1,
            ElectricalKind::YDelta | ElectricalKind::DeltaY => 0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ElectricalKind::Leaf => "leaf",
            ElectricalKind::Loop => "loop",
            ElectricalKind::Series => "series",
            ElectricalKind::Parallel => "parallel",
            ElectricalKind::YDelta => "y-delta",
            ElectricalKind::DeltaY => "delta-y",
        }
    }

    fn size(self) -> usize {
        match self {
            ElectricalKind::Leaf | ElectricalKind::Loop => 1,
            ElectricalKind::Series | ElectricalKind::Parallel => 2,
            ElectricalKind::YDelta | ElectricalKind::DeltaY => 3,
        }
    }
}

impl fmt::Display for ElectricalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// An electrical transformation site: a vertex id for vertex kinds, the
/// smallest dart of the face for face kinds.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElectricalSite {
    pub kind: ElectricalKind,
    pub at: usize,
}

/// Darts around a vertex or face site, if the site is valid: degree matches
/// and all edges distinct.
fn site_darts(g: &PlaneGraph, site: &ElectricalSite) -> Option<Vec<usize>> {
    let darts: Vec<usize> = if site.kind.at_vertex() {
        if site.at >= g.vertex_count() {
            return None;
        }
        (g.first[site.at]..g.first[site.at + 1]).collect()
    } else {
        if site.at >= g.dart_count() {
            return None;
        }
        g.face_orbit(site.at)
    };
    if darts.len() != site.kind.size() {
        return None;
    }
    let distinct = darts.iter().all(|&d| !darts.contains(&g.alpha[d]));
    distinct.then_some(darts)
}

pub fn enumerate_electrical(g: &PlaneGraph) -> Vec<ElectricalSite> {
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        for kind in [ElectricalKind::Leaf, ElectricalKind::Series, ElectricalKind::YDelta] {
            let s = ElectricalSite { kind, at: v };
            if site_darts(g, &s).is_some() {
                out.push(s);
            }
        }
    }
    for orbit in g.face_orbits() {
        let at = *orbit.iter().min().unwrap();
        for kind in [ElectricalKind::Loop, ElectricalKind::Parallel, ElectricalKind::DeltaY] {
            let s = ElectricalSite { kind, at };
            if site_darts(g, &s).is_some() {
                out.push(s);
            }
        }
    }
    out
}

pub fn apply_electrical(g: &PlaneGraph, site: &ElectricalSite) -> Result<PlaneGraph> {
    let darts = site_darts(g, site)
        .ok_or_else(|| Error::InvalidSite(format!("{} at {}", site.kind, site.at)))?;
    let mut ed = Edit::from(g);
    match site.kind {
        ElectricalKind::Leaf => {
            let (d, a) = (darts[0], g.alpha[darts[0]]);
            ed.rots[site.at] = None;
            ed.remove_dart(a);
            ed.prefer_orbit(g, g.outer, &[d, a]);
        }
        ElectricalKind::Loop | ElectricalKind::Parallel => {
            let (d, a) = (darts[0], g.alpha[darts[0]]);
            ed.remove_dart(d);
            ed.remove_dart(a);
            ed.prefer_orbit(g, g.outer, &[d, a]);
            ed.prefer_orbit(g, a, &[d, a]);
        }
        ElectricalKind::Series => {
            let (a, b) = (g.alpha[darts[0]], g.alpha[darts[1]]);
            ed.rots[site.at] = None;
            ed.link(a, b);
            ed.prefer_orbit(g, g.outer, &darts);
        }
        ElectricalKind::YDelta => {
            let n: Vec<usize> = darts.iter().map(|&d| g.alpha[d]).collect();
            // plus[i] at the far end of d_i points to the next neighbor,
            // minus[i] to the previous one
            let plus: Vec<usize> = (0..3).map(|_| ed.new_dart()).collect();
            let minus: Vec<usize> = (0..3).map(|_| ed.new_dart()).collect();
            for i in 0..3 {
                ed.replace_dart(n[i], &[plus[i], minus[i]]);
                ed.link(plus[i], minus[(i + 1) % 3]);
            }
            ed.rots[site.at] = None;
            let gone: Vec<usize> = darts.iter().chain(&n).copied().collect();
            ed.prefer_orbit(g, g.outer, &gone);
            if let Some(i) = n.iter().position(|&x| x == g.outer) {
                ed.outer_candidates.push(plus[i]);
            }
            if let Some(i) = darts.iter().position(|&x| x == g.outer) {
                ed.outer_candidates.push(plus[(i + 2) % 3]);
            }
        }
        ElectricalKind::DeltaY => {
            let f = &darts;
            let c = ed.rots.len();
            let spokes: Vec<usize> = (0..3).map(|_| ed.new_dart()).collect();
            for i in 0..3 {
                // at the head of f[i]: alpha(f[i]) then f[i + 1] collapse to s
                let s = ed.new_dart();
                ed.replace_dart(g.alpha[f[i]], &[s]);
                ed.remove_dart(f[(i + 1) % 3]);
                ed.link(s, spokes[(i + 1) % 3]);
            }
            ed.rots.push(Some(vec![spokes[0], spokes[2], spokes[1]]));
            debug_assert_eq!(ed.rots.len(), c + 1);
            let gone: Vec<usize> = f.iter().flat_map(|&d| [d, g.alpha[d]]).collect();
            ed.prefer_orbit(g, g.outer, &gone);
            for &d in f {
                ed.prefer_orbit(g, g.alpha[d], &gone);
            }
        }
    }
    ed.build()
}

/// Medial move that mirrors `site` on `g.medial()`.
pub fn medial_site(g: &PlaneGraph, site: &ElectricalSite) -> MoveSite {
    let face = if site.kind.at_vertex() {
        g.medial_vertex_dart(g.dart(site.at, 0))
    } else {
        g.medial_face_dart(site.at)
    };
    match site.kind.size() {
        1 => MoveSite::OneZero { face },
        2 => MoveSite::TwoOne { face },
        _ => MoveSite::ThreeThree { face },
    }
}

/// Random connected plane graph: a grid with a few edges deleted and
/// contracted.
pub fn scrambled_grid(p: usize, q: usize, edits: usize, seed: u64) -> PlaneGraph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut g = crate::generators::rectangular_grid(p, q).expect("valid grid");
    for _ in 0..edits {
        if g.edge_count() < 2 {
            break;
        }
        let d = rng.gen_range(0..g.dart_count());
        let next = if rng.gen_bool(0.5) { g.delete_edge(d) } else { g.contract_edge(d) };
        if let Ok(h) = next {
            g = h;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cylindrical_grid, rectangular_grid, torus_knot};
    use crate::moves::{apply_move, smooth, SmoothingChoice};

    fn c3() -> PlaneGraph {
        cylindrical_grid(1, 3).unwrap()
    }

    #[test]
    fn triangle_medial_is_trefoil() {
        let m = c3().medial();
        m.validate().unwrap();
        assert_eq!(m.canonical_form(false), torus_knot(2, 3).canonical_form(false));
        assert!(PlaneGraph::single_vertex().medial().is_circle());
    }

    #[test]
    fn cylinder_medials_are_torus_knots() {
        for k in 1..=3 {
            for q in [3, 5, 7] {
                let m = cylindrical_grid(k, q).unwrap().medial();
                m.validate().unwrap();
                assert_eq!(
                    m.canonical_form(false),
                    torus_knot(2 * k, q).canonical_form(false),
                    "k={k} q={q}"
                );
            }
        }
    }

    #[test]
    fn duals() {
        let d = c3().dual();
        assert_eq!((d.vertex_count(), d.edge_count()), (2, 3));
        assert_eq!(d.dual().canonical_form(false), c3().canonical_form(false));
        let g = rectangular_grid(3, 4).unwrap();
        let d = g.dual();
        assert_eq!(d.vertex_count(), 2 * 3 + 1);
        assert_eq!(d.dual().canonical_form(false), g.canonical_form(false));
        assert_eq!(d.medial().canonical_form(false), g.medial().canonical_form(false));
    }

    #[test]
    fn cmap_round_trip() {
        let g = rectangular_grid(2, 3).unwrap();
        assert_eq!(PlaneGraph::parse_cmap(&g.to_cmap()).unwrap(), g);
        let one = PlaneGraph::single_vertex();
        assert_eq!(PlaneGraph::parse_cmap(&one.to_cmap()).unwrap(), one);
        let big = cylindrical_grid(3, 5).unwrap();
        assert_eq!(PlaneGraph::parse_cmap(&big.to_cmap()).unwrap(), big);
    }

    #[test]
    fn triangle_reduces_in_three() {
        let g = c3();
        let s = ElectricalSite { kind: ElectricalKind::Series, at: 0 };
        let g = apply_electrical(&g, &s).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 2));
        let par = enumerate_electrical(&g)
            .into_iter()
            .find(|s| s.kind == ElectricalKind::Parallel)
            .unwrap();
        let g = apply_electrical(&g, &par).unwrap();
        let leaf = enumerate_electrical(&g)
            .into_iter()
            .find(|s| s.kind == ElectricalKind::Leaf)
            .unwrap();
        let g = apply_electrical(&g, &leaf).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn medial_commutes_with_every_kind() {
        let graphs = [
            c3(),
            c3().dual(),
            rectangular_grid(3, 3).unwrap(),
            cylindrical_grid(2, 4).unwrap(),
            scrambled_grid(3, 4, 5, 1),
            rectangular_grid(1, 4).unwrap(),
            rectangular_grid(1, 4).unwrap().dual(),
            rectangular_grid(2, 3).unwrap().contract_edge(0).unwrap(),
        ];
        let mut seen = std::collections::HashSet::new();
        for g in &graphs {
            let m = g.medial();
            for s in enumerate_electrical(g) {
                seen.insert(s.kind);
                let after = apply_electrical(g, &s).unwrap();
                let via = apply_move(&m, &medial_site(g, &s)).unwrap();
                assert_eq!(
                    after.medial().canonical_form(false),
                    via.canonical_form(false),
                    "{s:?}"
                );
            }
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn kinds_swap_under_duality() {
        for g in [rectangular_grid(3, 4).unwrap(), cylindrical_grid(2, 5).unwrap(), scrambled_grid(4, 4, 6, 3)] {
            let count = |h: &PlaneGraph, k: ElectricalKind| {
                enumerate_electrical(h).iter().filter(|s| s.kind == k).count()
            };
            let d = g.dual();
            for k in ElectricalKind::ALL {
                assert_eq!(count(&g, k), count(&d, k.dual()), "{k}");
            }
        }
    }

    #[test]
    fn minors_are_smoothings() {
        let g = rectangular_grid(3, 3).unwrap();
        let m = g.medial();
        let ids = g.edge_ids();
        for d in 0..g.dart_count() {
            if d > g.alpha(d) {
                continue;
            }
            let x = ids[d];
            if let Ok(h) = g.delete_edge(d) {
                let s = smooth(&m, x, SmoothingChoice::B).unwrap();
                assert_eq!(s.map.canonical_form(false), h.medial().canonical_form(false));
            }
            let h = g.contract_edge(d).unwrap();
            let s = smooth(&m, x, SmoothingChoice::A).unwrap();
            assert_eq!(s.map.canonical_form(false), h.medial().canonical_form(false));
        }
    }

    #[test]
    fn stale_sites_rejected() {
        let s = ElectricalSite { kind: ElectricalKind::Leaf, at: 0 };
        assert!(matches!(apply_electrical(&c3(), &s), Err(Error::InvalidSite(_))));
    }
}
