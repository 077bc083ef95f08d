//! Four-regular combinatorial maps: the shadow of a generic closed curve.
//!
//! Every vertex owns four darts numbered `4 * vertex + slot`, with slots in
//! counterclockwise order. Only the edge involution `alpha` is stored. The
//! curve goes straight through each crossing, so the traversal successor of an
//! outgoing dart `d` is `opposite(alpha(d))`. The face to the right of `d` is
//! traced by `rotate(alpha(d))`.

use std::fmt::{self, Write as _};

use crate::canon::{canonical_key, CanonicalKey, DartPerms};
use crate::error::{parse_err, Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub u32);

impl Dart {
    pub fn new(vertex: usize, slot: usize) -> Self {
        Dart((4 * vertex + (slot % 4)) as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn vertex(self) -> usize {
        self.index() / 4
    }

    #[inline]
    pub fn slot(self) -> usize {
        self.index() % 4
    }

    /// Counterclockwise successor around the vertex.
    #[inline]
    pub fn rotate(self) -> Dart {
        Dart::new(self.vertex(), self.slot() + 1)
    }

    #[inline]
    pub fn rotate_back(self) -> Dart {
        Dart::new(self.vertex(), self.slot() + 3)
    }

    #[inline]
    pub fn opposite(self) -> Dart {
        Dart::new(self.vertex(), self.slot() + 2)
    }

    /// Offset by `k` slots counterclockwise.
    #[inline]
    pub fn turn(self, k: usize) -> Dart {
        Dart::new(self.vertex(), self.slot() + k)
    }

    pub(crate) fn shifted(self, vertices: usize) -> Dart {
        Dart(self.0 + 4 * vertices as u32)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.vertex(), self.slot())
    }
}

impl std::str::FromStr for Dart {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (v, slot) = parse_dart_ref(s)?;
        if slot > 3 {
            return Err(format!("slot out of range in {s:?}"));
        }
        Ok(Dart::new(v, slot))
    }
}

/// Parses `vertexId.slot` without bounding the slot.
pub(crate) fn parse_dart_ref(s: &str) -> std::result::Result<(usize, usize), String> {
    let (v, slot) = s
        .split_once('.')
        .ok_or_else(|| format!("expected vertexId.slot, got {s:?}"))?;
    let v: usize = v.parse().map_err(|_| format!("bad vertex id in {s:?}"))?;
    let slot: usize = slot.parse().map_err(|_| format!("bad slot in {s:?}"))?;
    Ok((v, slot))
}

/// A connected (or, for intermediate results, possibly disconnected)
/// four-regular plane map with a traversal basepoint and a designated outer
/// face. A map without vertices is the circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveMap {
    alpha: Vec<Dart>,
    base: Dart,
    outer: Dart,
}

/// Face structure of a map.
#[derive(Clone, Debug)]
pub struct Faces {
    /// Face index of the face to the right of each dart.
    pub face_of: Vec<usize>,
    /// Darts of each face in boundary order.
    pub orbits: Vec<Vec<Dart>>,
}

impl Faces {
    pub fn count(&self) -> usize {
        self.orbits.len()
    }

    pub fn of(&self, d: Dart) -> usize {
        self.face_of[d.index()]
    }

    pub fn degree(&self, face: usize) -> usize {
        self.orbits[face].len()
    }
}

impl CurveMap {
    pub fn circle() -> Self {
        CurveMap {
            alpha: Vec::new(),
            base: Dart(0),
            outer: Dart(0),
        }
    }

    /// Builds and fully validates a connected map.
    pub fn new(alpha: Vec<Dart>, base: Dart, outer: Dart) -> Result<Self> {
        let map = CurveMap { alpha, base, outer };
        map.validate()?;
        Ok(map)
    }

    /// Builds a map checking only the involution; used for intermediate
    /// results such as smoothings that may disconnect.
    pub(crate) fn from_raw(alpha: Vec<Dart>, base: Dart, outer: Dart) -> Self {
        let map = CurveMap { alpha, base, outer };
        debug_assert!(map.check_involution().is_ok());
        map
    }

    pub fn is_circle(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.alpha.len() / 4
    }

    pub fn edge_count(&self) -> usize {
        if self.is_circle() {
            1
        } else {
            2 * self.vertex_count()
        }
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.alpha.len() as u32).map(Dart)
    }

    #[inline]
    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d.index()]
    }

    pub fn alpha_table(&self) -> &[Dart] {
        &self.alpha
    }

    /// Traversal successor: leave through the dart straight across from the
    /// one we arrived on.
    #[inline]
    pub fn succ(&self, d: Dart) -> Dart {
        self.alpha(d).opposite()
    }

    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        self.alpha(d).rotate()
    }

    pub fn base(&self) -> Dart {
        self.base
    }

    pub fn outer(&self) -> Dart {
        self.outer
    }

    fn check_involution(&self) -> Result<()> {
        let len = self.alpha.len() as u32;
        for d in self.darts() {
            let a = self.alpha(d);
            if a.0 >= len {
                return Err(Error::Validation(format!("alpha({d}) = {a} out of range")));
            }
            if a == d {
                return Err(Error::Validation("alpha not fixed-point-free".into()));
            }
            if self.alpha(a) != d {
                return Err(Error::Validation("alpha not an involution".into()));
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.is_circle() {
            return Ok(());
        }
        if !self.alpha.len().is_multiple_of(4) {
            return Err(Error::Validation("dart count not a multiple of 4".into()));
        }
        self.check_involution()?;
        if self.base.0 as usize >= self.alpha.len() || self.outer.0 as usize >= self.alpha.len() {
            return Err(Error::Validation("basepoint or outer dart out of range".into()));
        }
        if self.component_count() != 1 {
            return Err(Error::Validation("map not connected".into()));
        }
        let faces = self.faces().count();
        if faces != self.vertex_count() + 2 {
            return Err(Error::Validation(format!(
                "wrong face count: {faces} faces for {} vertices",
                self.vertex_count()
            )));
        }
        Ok(())
    }

    /// Face orbits of the darts. The circle has no darts, so its two faces
    /// are not listed.
    pub fn faces(&self) -> Faces {
        let n = self.alpha.len();
        let mut face_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for s in self.darts() {
            if face_of[s.index()] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = Vec::new();
            let mut d = s;
            loop {
                face_of[d.index()] = id;
                orbit.push(d);
                d = self.face_next(d);
                if d == s {
                    break;
                }
            }
            orbits.push(orbit);
        }
        Faces { face_of, orbits }
    }

    /// Number of connected components of the underlying graph (vertex-bearing
    /// components only).
    pub fn component_count(&self) -> usize {
        self.vertex_components().iter().copied().max().map_or(0, |m| m + 1)
    }

    /// Component id per vertex.
    pub fn vertex_components(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for k in 0..4 {
                    let w = self.alpha(Dart::new(v, k)).vertex();
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Outgoing darts of the closed walk starting at `start`, in order.
    pub fn strand_from(&self, start: Dart) -> Vec<Dart> {
        let mut out = vec![start];
        let mut d = self.succ(start);
        while d != start {
            out.push(d);
            d = self.succ(d);
        }
        out
    }

    /// Outgoing darts of the traversal from the basepoint.
    pub fn traversal(&self) -> Vec<Dart> {
        if self.is_circle() {
            return Vec::new();
        }
        self.strand_from(self.base)
    }

    /// Number of closed strands (straight-ahead walks) in the map.
    pub fn strand_count(&self) -> usize {
        let mut seen = vec![false; self.alpha.len()];
        let mut count = 0;
        for s in self.darts() {
            if seen[s.index()] {
                continue;
            }
            count += 1;
            for d in self.strand_from(s) {
                seen[d.index()] = true;
                seen[self.alpha(d).index()] = true;
            }
        }
        count
    }

    pub fn is_unicursal(&self) -> bool {
        self.is_circle()
            || (self.traversal().len() == 2 * self.vertex_count() && self.component_count() == 1)
    }

    pub fn require_unicursal(&self) -> Result<()> {
        if self.is_unicursal() {
            Ok(())
        } else {
            Err(Error::NotUnicursal)
        }
    }

    pub fn outer_face_darts(&self) -> Vec<Dart> {
        if self.is_circle() {
            return Vec::new();
        }
        let mut out = vec![self.outer];
        let mut d = self.face_next(self.outer);
        while d != self.outer {
            out.push(d);
            d = self.face_next(d);
        }
        out
    }

    /// True when the basepoint edge borders the outer face.
    pub fn basepoint_on_outer(&self) -> bool {
        if self.is_circle() {
            return true;
        }
        let faces = self.faces();
        let outer = faces.of(self.outer);
        faces.of(self.base) == outer || faces.of(self.alpha(self.base)) == outer
    }

    /// Moves the basepoint to the first traversal dart whose edge borders the
    /// outer face, keeping the orientation. Returns whether it moved.
    pub fn normalize_basepoint(&self) -> (CurveMap, bool) {
        if self.basepoint_on_outer() {
            return (self.clone(), false);
        }
        let faces = self.faces();
        let outer = faces.of(self.outer);
        let base = self
            .traversal()
            .into_iter()
            .find(|&d| faces.of(d) == outer || faces.of(self.alpha(d)) == outer)
            .expect("every face of a connected map touches the traversal");
        (self.with_basepoint(base), true)
    }

    pub fn with_basepoint(&self, base: Dart) -> CurveMap {
        CurveMap {
            alpha: self.alpha.clone(),
            base,
            outer: self.outer,
        }
    }

    pub fn with_outer(&self, outer: Dart) -> CurveMap {
        CurveMap {
            alpha: self.alpha.clone(),
            base: self.base,
            outer,
        }
    }

    /// Same curve traversed backwards from the same point.
    pub fn reversed(&self) -> CurveMap {
        if self.is_circle() {
            return self.clone();
        }
        self.with_basepoint(self.alpha(self.base))
    }

    /// Mirror image: every rotation reversed.
    pub fn mirror(&self) -> CurveMap {
        if self.is_circle() {
            return self.clone();
        }
        let m = |d: Dart| Dart::new(d.vertex(), 4 - d.slot());
        let mut alpha = vec![Dart(0); self.alpha.len()];
        for d in self.darts() {
            alpha[m(d).index()] = m(self.alpha(d));
        }
        CurveMap {
            alpha,
            base: m(self.base),
            outer: m(self.alpha(self.outer)),
        }
    }

    /// Renumbers vertices by `perm` (old vertex -> new vertex), rotations intact.
    pub fn relabeled(&self, perm: &[usize]) -> CurveMap {
        let m = |d: Dart| Dart::new(perm[d.vertex()], d.slot());
        let mut alpha = vec![Dart(0); self.alpha.len()];
        for d in self.darts() {
            alpha[m(d).index()] = m(self.alpha(d));
        }
        CurveMap {
            alpha,
            base: m(self.base),
            outer: m(self.outer),
        }
    }

    pub(crate) fn dart_perms(&self) -> DartPerms {
        DartPerms {
            alpha: self.alpha.iter().map(|d| d.index()).collect(),
            rot: self.darts().map(|d| d.rotate().index()).collect(),
        }
    }

    /// Key equal for maps isomorphic as rotation systems (and, with
    /// `include_mirror`, for mirror images). Basepoint and outer face are not
    /// part of the key.
    pub fn canonical_form(&self, include_mirror: bool) -> CanonicalKey {
        if self.is_circle() {
            return CanonicalKey(Vec::new());
        }
        canonical_key(&self.dart_perms(), &[], include_mirror)
    }

    /// Disjoint union with `other`, whose vertices are renumbered after ours.
    /// Basepoint and outer face are ours.
    pub(crate) fn disjoint_union(&self, other: &CurveMap) -> CurveMap {
        let shift = self.vertex_count();
        let mut alpha = self.alpha.clone();
        alpha.extend(other.alpha.iter().map(|d| d.shifted(shift)));
        CurveMap {
            alpha,
            base: self.base,
            outer: self.outer,
        }
    }

    pub(crate) fn set_link(&mut self, a: Dart, b: Dart) {
        self.alpha[a.index()] = b;
        self.alpha[b.index()] = a;
    }

    /// Serializes to the CMAP v1 text format.
    pub fn to_cmap(&self) -> String {
        let mut s = String::from("cmap 1\n");
        writeln!(s, "vertices {}", self.vertex_count()).unwrap();
        if self.is_circle() {
            s.push_str("circle\n");
            return s;
        }
        for v in 0..self.vertex_count() {
            write!(s, "v {v}").unwrap();
            for k in 0..4 {
                write!(s, " {}", self.alpha(Dart::new(v, k))).unwrap();
            }
            s.push('\n');
        }
        writeln!(s, "base {}", self.base).unwrap();
        writeln!(s, "outer {}", self.outer).unwrap();
        s
    }

    /// Parses and validates a CMAP v1 document describing a four-regular map.
    pub fn parse_cmap(text: &str) -> Result<CurveMap> {
        let doc = CmapDoc::parse(text)?;
        if doc.circle {
            if doc.vertices != 0 {
                return Err(parse_err(doc.circle_line, "circle marker requires 0 vertices"));
            }
            return Ok(CurveMap::circle());
        }
        if doc.vertices == 0 {
            return Err(parse_err(doc.last_line, "vertices 0 requires the circle marker"));
        }
        let mut alpha = vec![None; 4 * doc.vertices];
        for row in &doc.rows {
            if row.explicit_degree.is_some_and(|d| d != 4) || row.targets.len() != 4 {
                return Err(parse_err(row.line, "curve vertices have exactly 4 darts"));
            }
            for (k, &(v, s)) in row.targets.iter().enumerate() {
                if v >= doc.vertices || s > 3 {
                    return Err(parse_err(row.line, format!("dart {v}.{s} out of range")));
                }
                alpha[4 * row.id + k] = Some(Dart::new(v, s));
            }
        }
        let alpha: Vec<Dart> = alpha
            .into_iter()
            .enumerate()
            .map(|(i, d)| d.ok_or_else(|| Error::Validation(format!("vertex {} not listed", i / 4))))
            .collect::<Result<_>>()?;
        let as_dart = |d: Option<(usize, usize)>, what: &str| match d {
            Some((v, s)) if s < 4 => Ok(Dart::new(v, s)),
            Some((v, s)) => Err(parse_err(doc.last_line, format!("{what} dart {v}.{s} out of range"))),
            None => Err(parse_err(doc.last_line, format!("missing {what} line"))),
        };
        let base = as_dart(doc.base, "base")?;
        let outer = as_dart(doc.outer, "outer")?;
        CurveMap::new(alpha, base, outer)
    }
}

/// One `v` line of a CMAP document.
pub(crate) struct CmapRow {
    pub line: usize,
    pub id: usize,
    pub explicit_degree: Option<usize>,
    pub targets: Vec<(usize, usize)>,
}

/// Line-level parse of a CMAP v1 document shared by curves and plane graphs.
pub(crate) struct CmapDoc {
    pub vertices: usize,
    pub rows: Vec<CmapRow>,
    pub base: Option<(usize, usize)>,
    pub outer: Option<(usize, usize)>,
    pub circle: bool,
    pub circle_line: usize,
    pub last_line: usize,
}

impl CmapDoc {
    pub fn parse(text: &str) -> Result<CmapDoc> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, header) = lines.next().ok_or_else(|| parse_err(1, "empty document"))?;
        if header.split_whitespace().collect::<Vec<_>>() != ["cmap", "1"] {
            return Err(parse_err(ln, "expected header `cmap 1`"));
        }
        let (ln, count) = lines.next().ok_or_else(|| parse_err(ln + 1, "missing vertices line"))?;
        let vertices = match count.split_whitespace().collect::<Vec<_>>()[..] {
            ["vertices", n] => n.parse::<usize>().map_err(|_| parse_err(ln, "bad vertex count"))?,
            _ => return Err(parse_err(ln, "expected `vertices <n>`")),
        };
        let mut doc = CmapDoc {
            vertices,
            rows: Vec::new(),
            base: None,
            outer: None,
            circle: false,
            circle_line: 0,
            last_line: ln,
        };
        let mut seen = vec![false; vertices];
        for (ln, line) in lines {
            doc.last_line = ln;
            let toks: Vec<&str> = line.split_whitespace().collect();
            let dart = |s: &str| parse_dart_ref(s).map_err(|e| parse_err(ln, e));
            match toks[0] {
                "v" => {
                    if toks.len() < 2 {
                        return Err(parse_err(ln, "missing vertex id"));
                    }
                    let id: usize = toks[1].parse().map_err(|_| parse_err(ln, "bad vertex id"))?;
                    if id >= vertices {
                        return Err(parse_err(ln, format!("vertex id {id} out of range")));
                    }
                    if std::mem::replace(&mut seen[id], true) {
                        return Err(parse_err(ln, format!("vertex {id} listed twice")));
                    }
                    let rest = &toks[2..];
                    let (explicit_degree, rest) = match rest.first() {
                        Some(t) if !t.contains('.') => {
                            let d: usize = t.parse().map_err(|_| parse_err(ln, "bad degree"))?;
                            (Some(d), &rest[1..])
                        }
                        _ => (None, rest),
                    };
                    if let Some(d) = explicit_degree {
                        if rest.len() != d {
                            return Err(parse_err(ln, format!("degree {d} but {} darts", rest.len())));
                        }
                    }
                    let targets = rest.iter().map(|t| dart(t)).collect::<Result<Vec<_>>>()?;
                    doc.rows.push(CmapRow {
                        line: ln,
                        id,
                        explicit_degree,
                        targets,
                    });
                }
                "base" if toks.len() == 2 => doc.base = Some(dart(toks[1])?),
                "outer" if toks.len() == 2 => doc.outer = Some(dart(toks[1])?),
                "circle" if toks.len() == 1 => {
                    doc.circle = true;
                    doc.circle_line = ln;
                }
                _ => return Err(parse_err(ln, format!("unrecognized line {line:?}"))),
            }
        }
        if !doc.circle {
            if let Some(v) = seen.iter().position(|s| !s) {
                return Err(parse_err(doc.last_line, format!("vertex {v} not listed")));
            }
        }
        Ok(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::torus_knot;

    const TREFOIL: &str = "\
cmap 1
vertices 3
# doubled 3-cycle
v 0 1.1 2.0 2.3 1.2
v 1 2.1 0.0 0.3 2.2
v 2 0.1 1.0 1.3 0.2
base 0.3
outer 0.3
";

    #[test]
    fn trefoil_text_loads() {
        let m = CurveMap::parse_cmap(TREFOIL).unwrap();
        assert_eq!(m.vertex_count(), 3);
        assert_eq!(m.edge_count(), 6);
        assert_eq!(m.faces().count(), 5);
        assert!(m.is_unicursal());
        assert_eq!(m.canonical_form(false), torus_knot(2, 3).canonical_form(false));
    }

    #[test]
    fn circle_text_loads() {
        let m = CurveMap::parse_cmap("cmap 1\nvertices 0\ncircle\n").unwrap();
        assert!(m.is_circle());
        assert_eq!(CurveMap::parse_cmap(&m.to_cmap()).unwrap(), m);
    }

    #[test]
    fn fixed_point_rejected() {
        let text = "cmap 1\nvertices 1\nv 0 0.0 0.3 0.3 0.2\nbase 0.0\nouter 0.0\n";
        let err = CurveMap::parse_cmap(text).unwrap_err();
        assert_eq!(err, Error::Validation("alpha not fixed-point-free".into()));
    }

    #[test]
    fn non_involution_rejected() {
        let text = "cmap 1\nvertices 1\nv 0 0.1 0.2 0.3 0.0\nbase 0.0\nouter 0.0\n";
        let err = CurveMap::parse_cmap(text).unwrap_err();
        assert_eq!(err, Error::Validation("alpha not an involution".into()));
    }

    #[test]
    fn non_planar_face_count_rejected() {
        // one vertex, loops on opposite slots: a torus map with 1 face
        let text = "cmap 1\nvertices 1\nv 0 0.2 0.3 0.0 0.1\nbase 0.0\nouter 0.0\n";
        let err = CurveMap::parse_cmap(text).unwrap_err();
        assert!(matches!(err, Error::Validation(m) if m.contains("wrong face count")));
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = CurveMap::parse_cmap("cmap 1\nvertices 1\nv 0 0.1 zz 0.3 0.2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = CurveMap::parse_cmap("cmap 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn figure_eight_faces() {
        let text = "cmap 1\nvertices 1\nv 0 0.1 0.0 0.3 0.2\nbase 0.0\nouter 0.2\n";
        let m = CurveMap::parse_cmap(text).unwrap();
        let faces = m.faces();
        let mut degrees: Vec<usize> = (0..faces.count()).map(|f| faces.degree(f)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 2]);
        assert_eq!(faces.degree(faces.of(m.outer())), 2);
        assert_eq!(m.traversal().len(), 2);
    }

    #[test]
    fn mirror_and_reverse_keep_structure() {
        let t = torus_knot(3, 4);
        for m in [t.mirror(), t.reversed()] {
            m.validate().unwrap();
            assert!(m.is_unicursal());
        }
        assert_eq!(t.mirror().mirror(), t);
        assert_eq!(t.canonical_form(true), t.mirror().canonical_form(true));
    }

    #[test]
    fn canonical_form_ignores_vertex_names() {
        let t = torus_knot(3, 4);
        let n = t.vertex_count();
        let perm: Vec<usize> = (0..n).map(|v| (v * 5 + 3) % n).collect();
        assert_eq!(t.relabeled(&perm).canonical_form(false), t.canonical_form(false));
        assert_ne!(t.canonical_form(false), torus_knot(2, 3).canonical_form(false));
    }
}
