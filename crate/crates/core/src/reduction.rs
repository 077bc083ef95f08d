//! Reduction strategies, exact minimum-move search, and lower-bound reports.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::CanonicalKey;
use crate::defect::defect_polyak;
use crate::error::{Error, Result};
use crate::graph::{apply_electrical, enumerate_electrical, ElectricalKind, ElectricalSite, PlaneGraph};
use crate::map::{CurveMap, Dart};
use crate::moves::{apply_move, enumerate_moves, smooth, MoveKind, MoveSite, SmoothingChoice};

/// Which local moves a reduction may use.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// 1->0, 2->0, 3->3 and inverses.
    Homotopy,
    /// 1->0, 2->1, 3->3 and inverses.
    Medial,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "homotopy" => Ok(Family::Homotopy),
            "medial" | "medial-electrical" => Ok(Family::Medial),
            _ => Err(format!("unknown move family {s:?}")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Homotopy => "homotopy",
            Family::Medial => "medial",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Removal moves first, then flips scored by whether they expose a
    /// removal, with a breadth-first fallback over flips.
    #[default]
    Greedy,
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "greedy" => Ok(Strategy::Greedy),
            _ => Err(format!("unknown strategy {s:?}")),
        }
    }
}

/// States the generic greedy and breadth-first searches run on.
trait SearchState: Clone + Send + Sync {
    type Site: Copy + Send + Sync;
    fn key(&self) -> CanonicalKey;
    fn done(&self) -> bool;
    /// Size that strictly drops under removal moves.
    fn size(&self) -> usize;
    /// Removal moves, highest priority first.
    fn removals(&self) -> Vec<Self::Site>;
    /// Size-preserving moves.
    fn flips(&self) -> Vec<Self::Site>;
    fn apply(&self, site: &Self::Site) -> Self;
}

#[derive(Clone)]
struct Curve {
    map: CurveMap,
    family: Family,
}

impl SearchState for Curve {
    type Site = MoveSite;

    fn key(&self) -> CanonicalKey {
        self.map.canonical_form(false)
    }

    fn done(&self) -> bool {
        self.map.is_circle()
    }

    fn size(&self) -> usize {
        self.map.vertex_count()
    }

    fn removals(&self) -> Vec<MoveSite> {
        let pair = match self.family {
            Family::Homotopy => MoveKind::TwoZero,
            Family::Medial => MoveKind::TwoOne,
        };
        let mut sites = enumerate_moves(&self.map, &[MoveKind::OneZero, pair]);
        sites.sort_by_key(|s| s.kind() != MoveKind::OneZero);
        sites
    }

    fn flips(&self) -> Vec<MoveSite> {
        enumerate_moves(&self.map, &[MoveKind::ThreeThree])
    }

    fn apply(&self, site: &MoveSite) -> Self {
        Curve {
            map: apply_move(&self.map, site).expect("enumerated site applies"),
            family: self.family,
        }
    }
}

#[derive(Clone)]
struct Graph(PlaneGraph);

fn kind_rank(k: ElectricalKind) -> usize {
    match k {
        ElectricalKind::Leaf => 0,
        ElectricalKind::Loop => 1,
        ElectricalKind::Series => 2,
        ElectricalKind::Parallel => 3,
        ElectricalKind::YDelta | ElectricalKind::DeltaY => 4,
    }
}

impl SearchState for Graph {
    type Site = ElectricalSite;

    fn key(&self) -> CanonicalKey {
        self.0.canonical_form(false)
    }

    fn done(&self) -> bool {
        self.0.edge_count() == 0
    }

    fn size(&self) -> usize {
        self.0.edge_count()
    }

    fn removals(&self) -> Vec<ElectricalSite> {
        let mut sites: Vec<ElectricalSite> = enumerate_electrical(&self.0)
            .into_iter()
            .filter(|s| kind_rank(s.kind) < 4)
            .collect();
        sites.sort_by_key(|s| kind_rank(s.kind));
        sites
    }

    fn flips(&self) -> Vec<ElectricalSite> {
        enumerate_electrical(&self.0)
            .into_iter()
            .filter(|s| kind_rank(s.kind) == 4)
            .collect()
    }

    fn apply(&self, site: &ElectricalSite) -> Self {
        Graph(apply_electrical(&self.0, site).expect("enumerated site applies"))
    }
}

/// Breadth-first search over flips from `start` for the nearest state with a
/// removal move. Returns the flip path.
fn flip_search<S: SearchState>(start: &S, budget: usize) -> Option<Vec<S::Site>> {
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    seen.insert(start.key());
    let mut nodes: Vec<(S, Option<(usize, S::Site)>)> = vec![(start.clone(), None)];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let expanded: Vec<Vec<(S::Site, S, CanonicalKey)>> = frontier
            .par_iter()
            .map(|&i| {
                let s = &nodes[i].0;
                s.flips()
                    .into_iter()
                    .map(|site| {
                        let next = s.apply(&site);
                        let key = next.key();
                        (site, next, key)
                    })
                    .collect()
            })
            .collect();
        let mut next_frontier = Vec::new();
        for (&parent, children) in frontier.iter().zip(expanded) {
            for (site, state, key) in children {
                if !seen.insert(key) {
                    continue;
                }
                let found = !state.removals().is_empty();
                nodes.push((state, Some((parent, site))));
                let idx = nodes.len() - 1;
                if found {
                    let mut path = Vec::new();
                    let mut i = idx;
                    while let Some((p, s)) = nodes[i].1 {
                        path.push(s);
                        i = p;
                    }
                    path.reverse();
                    return Some(path);
                }
                next_frontier.push(idx);
                if nodes.len() > budget {
                    return None;
                }
            }
        }
        frontier = next_frontier;
    }
    None
}

const FLIP_SEARCH_BUDGET: usize = 200_000;

/// Greedy reduction. Returns the applied sites, the final state, and whether
/// the state was fully reduced.
fn greedy<S: SearchState>(start: S, max_steps: usize) -> (Vec<S::Site>, S, bool) {
    let mut cur = start;
    let mut steps = Vec::new();
    let mut visited: HashSet<CanonicalKey> = HashSet::new();
    let mut level = cur.size();
    visited.insert(cur.key());
    while !cur.done() {
        if steps.len() >= max_steps {
            return (steps, cur, false);
        }
        if cur.size() < level {
            // removals shrink the state, so earlier states cannot recur
            level = cur.size();
            visited.clear();
            visited.insert(cur.key());
        }
        if let Some(site) = cur.removals().first() {
            cur = cur.apply(site);
            steps.push(*site);
            continue;
        }
        let flips = cur.flips();
        let mut scored: Vec<(bool, S::Site, S)> = flips
            .iter()
            .map(|site| {
                let next = cur.apply(site);
                (next.removals().is_empty(), *site, next)
            })
            .collect();
        scored.sort_by_key(|c| c.0);
        let pick = scored.into_iter().find_map(|(_, site, next)| {
            let key = next.key();
            (!visited.contains(&key)).then_some((site, next, key))
        });
        match pick {
            Some((site, next, key)) => {
                visited.insert(key);
                cur = next;
                steps.push(site);
            }
            None => match flip_search(&cur, FLIP_SEARCH_BUDGET) {
                Some(path) => {
                    for site in path {
                        if steps.len() >= max_steps {
                            return (steps, cur, false);
                        }
                        cur = cur.apply(&site);
                        visited.insert(cur.key());
                        steps.push(site);
                    }
                }
                None => return (steps, cur, false),
            },
        }
    }
    (steps, cur, true)
}

/// One applied move with defects before and after (when the map is a single
/// curve).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub site: MoveSite,
    pub defect_before: Option<i64>,
    pub defect_after: Option<i64>,
    pub n_after: usize,
}

impl TraceStep {
    pub fn delta(&self) -> Option<i64> {
        Some(self.defect_after? - self.defect_before?)
    }
}

/// JSON form of a trace step.
#[derive(Clone, Debug, Serialize)]
pub struct StepRecord {
    pub kind: MoveKind,
    pub face: String,
    pub delta: Option<i64>,
    pub n_after: usize,
}

fn defect_if_curve(map: &CurveMap) -> Option<i64> {
    map.is_unicursal().then(|| defect_polyak(map).expect("unicursal"))
}

/// Smallest dart naming the site's location.
pub fn site_label(map: &CurveMap, site: &MoveSite) -> String {
    match *site {
        MoveSite::OneZero { face }
        | MoveSite::TwoZero { face }
        | MoveSite::ThreeThree { face }
        | MoveSite::TwoOne { face } => {
            let mut d = face;
            let mut best = face;
            loop {
                d = map.face_next(d);
                if d == face {
                    break;
                }
                best = best.min(d);
            }
            best.to_string()
        }
        MoveSite::ZeroOne { edge, .. } => edge.min(map.alpha(edge)).to_string(),
        MoveSite::ZeroTwo { finger, target } => format!("{finger}/{target}"),
        MoveSite::OneTwo { vertex, variant } => Dart::new(vertex, variant).to_string(),
    }
}

/// An auditable sequence of moves on a curve.
#[derive(Clone, Debug)]
pub struct MoveTrace {
    pub family: Family,
    pub initial: CurveMap,
    pub steps: Vec<TraceStep>,
    pub final_map: CurveMap,
    /// False when the step budget ran out before the circle was reached.
    pub complete: bool,
}

impl MoveTrace {
    fn build(family: Family, initial: &CurveMap, sites: &[MoveSite], complete: bool) -> Self {
        let mut map = initial.clone();
        let mut before = defect_if_curve(&map);
        let mut steps = Vec::with_capacity(sites.len());
        for site in sites {
            map = apply_move(&map, site).expect("recorded site applies");
            let after = defect_if_curve(&map);
            steps.push(TraceStep {
                site: *site,
                defect_before: before,
                defect_after: after,
                n_after: map.vertex_count(),
            });
            before = after;
        }
        MoveTrace {
            family,
            initial: initial.clone(),
            steps,
            final_map: map,
            complete,
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Re-applies every step from `initial`, checking sites, recorded
    /// defects, crossing counts, and the final map.
    pub fn replay(&self) -> Result<()> {
        let mut map = self.initial.clone();
        for (i, step) in self.steps.iter().enumerate() {
            if defect_if_curve(&map) != step.defect_before {
                return Err(Error::Validation(format!("step {i}: defect before does not match")));
            }
            map = apply_move(&map, &step.site)?;
            if defect_if_curve(&map) != step.defect_after || map.vertex_count() != step.n_after {
                return Err(Error::Validation(format!("step {i}: result does not match")));
            }
            // only homotopy moves have bounded defect change
            if let (Family::Homotopy, Some(d)) = (self.family, step.delta()) {
                if ![-2, 0, 2].contains(&d) {
                    return Err(Error::Validation(format!("step {i}: defect changed by {d}")));
                }
            }
        }
        if map.canonical_form(false) != self.final_map.canonical_form(false) {
            return Err(Error::Validation("final map does not match".into()));
        }
        Ok(())
    }

    pub fn records(&self) -> Vec<StepRecord> {
        let mut map = self.initial.clone();
        self.steps
            .iter()
            .map(|s| {
                let rec = StepRecord {
                    kind: s.site.kind(),
                    face: site_label(&map, &s.site),
                    delta: s.delta(),
                    n_after: s.n_after,
                };
                map = apply_move(&map, &s.site).expect("recorded site applies");
                rec
            })
            .collect()
    }
}

/// Reduces a curve to the circle. The homotopy family needs a unicursal
/// curve; the medial family accepts any connected four-regular map.
pub fn reduce_curve(curve: &CurveMap, family: Family, strategy: Strategy, max_steps: usize) -> Result<MoveTrace> {
    let Strategy::Greedy = strategy;
    match family {
        Family::Homotopy => curve.require_unicursal()?,
        Family::Medial => curve.validate()?,
    }
    let (sites, _, complete) = greedy(
        Curve {
            map: curve.clone(),
            family,
        },
        max_steps,
    );
    Ok(MoveTrace::build(family, curve, &sites, complete))
}

/// One applied electrical transformation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElectricalStep {
    pub site: ElectricalSite,
    pub edges_after: usize,
}

#[derive(Clone, Debug)]
pub struct ElectricalTrace {
    pub initial: PlaneGraph,
    pub steps: Vec<ElectricalStep>,
    pub final_graph: PlaneGraph,
    pub complete: bool,
}

impl ElectricalTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn replay(&self) -> Result<()> {
        let mut g = self.initial.clone();
        for (i, step) in self.steps.iter().enumerate() {
            g = apply_electrical(&g, &step.site)?;
            if g.edge_count() != step.edges_after {
                return Err(Error::Validation(format!("step {i}: edge count does not match")));
            }
        }
        if g.canonical_form(false) != self.final_graph.canonical_form(false) {
            return Err(Error::Validation("final graph does not match".into()));
        }
        Ok(())
    }
}

/// Reduces a connected plane graph to a single vertex by facial electrical
/// transformations.
pub fn reduce_graph(g: &PlaneGraph, strategy: Strategy, max_steps: usize) -> Result<ElectricalTrace> {
    let Strategy::Greedy = strategy;
    g.validate()?;
    let (sites, last, complete) = greedy(Graph(g.clone()), max_steps);
    let mut cur = g.clone();
    let steps = sites
        .iter()
        .map(|s| {
            cur = apply_electrical(&cur, s).expect("recorded site applies");
            ElectricalStep {
                site: *s,
                edges_after: cur.edge_count(),
            }
        })
        .collect();
    Ok(ElectricalTrace {
        initial: g.clone(),
        steps,
        final_graph: last.0,
        complete,
    })
}

/// Result of an exact breadth-first search.
#[derive(Clone, Debug)]
pub struct SearchResult {
    /// Minimum number of moves found.
    pub moves: usize,
    /// An optimal trace.
    pub trace: MoveTrace,
    /// Whether the count is certified minimal over all move sequences. For
    /// the medial family this always holds (increasing moves are never
    /// needed); for homotopy it holds when the count meets the defect bound.
    pub exact: bool,
    /// Whether the homotopy search was limited by the crossing cap.
    pub capped: bool,
    /// Distinct states visited.
    pub states: usize,
}

fn search_moves(map: &CurveMap, family: Family, cap: usize) -> Vec<(MoveSite, CurveMap)> {
    let kinds: &[MoveKind] = match family {
        Family::Medial => &MoveKind::MEDIAL_DECREASING,
        Family::Homotopy => &MoveKind::HOMOTOPY,
    };
    let mut out = Vec::new();
    for site in enumerate_moves(map, kinds) {
        if map.vertex_count() as i64 + site.kind().vertex_delta() > cap as i64 {
            continue;
        }
        out.push((site, apply_move(map, &site).expect("enumerated site applies")));
    }
    out
}

/// Minimum number of moves reducing `map` to the circle, by breadth-first
/// search over canonical forms. Homotopy searches never exceed `crossing_cap`
/// crossings. Fails when `depth_cap` or `state_budget` is exhausted.
pub fn min_moves_search(
    map: &CurveMap,
    family: Family,
    crossing_cap: usize,
    depth_cap: usize,
    state_budget: usize,
) -> Result<SearchResult> {
    match family {
        Family::Homotopy => map.require_unicursal()?,
        Family::Medial => map.validate()?,
    }
    if crossing_cap < map.vertex_count() {
        return Err(Error::InvalidArguments("crossing cap below crossing count".into()));
    }
    let done = |nodes: &Vec<(CurveMap, Option<(usize, MoveSite)>)>, idx: usize, states: usize| {
        let mut sites = Vec::new();
        let mut i = idx;
        while let Some((p, s)) = nodes[i].1 {
            sites.push(s);
            i = p;
        }
        sites.reverse();
        let trace = MoveTrace::build(family, map, &sites, true);
        let moves = sites.len();
        let exact = match family {
            Family::Medial => true,
            Family::Homotopy => {
                let d = defect_polyak(map).expect("unicursal");
                moves as i64 == (d.abs() + 1) / 2
            }
        };
        SearchResult {
            moves,
            trace,
            exact,
            capped: family == Family::Homotopy,
            states,
        }
    };
    let mut nodes: Vec<(CurveMap, Option<(usize, MoveSite)>)> = vec![(map.clone(), None)];
    if map.is_circle() {
        return Ok(done(&nodes, 0, 1));
    }
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    seen.insert(map.canonical_form(true));
    let mut frontier = vec![0usize];
    for _depth in 0..depth_cap {
        let expanded: Vec<Vec<(MoveSite, CurveMap, CanonicalKey)>> = frontier
            .par_iter()
            .map(|&i| {
                search_moves(&nodes[i].0, family, crossing_cap)
                    .into_iter()
                    .map(|(s, m)| {
                        let k = m.canonical_form(true);
                        (s, m, k)
                    })
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (&parent, children) in frontier.iter().zip(expanded) {
            for (site, child, key) in children {
                if !seen.insert(key) {
                    continue;
                }
                let circle = child.is_circle();
                nodes.push((child, Some((parent, site))));
                if circle {
                    return Ok(done(&nodes, nodes.len() - 1, seen.len()));
                }
                next.push(nodes.len() - 1);
            }
        }
        if seen.len() > state_budget {
            return Err(Error::BudgetExceeded(seen.len()));
        }
        if next.is_empty() {
            return Err(Error::Validation("search space exhausted without reaching the circle".into()));
        }
        frontier = next;
    }
    Err(Error::BudgetExceeded(depth_cap))
}

/// Lower-bound certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub defect: i64,
    pub lower_bound: i64,
    pub achieved_moves: usize,
    /// True when `achieved_moves` meets `lower_bound`.
    pub exact: bool,
    /// Whether the defect came from a unicursal smoothing rather than the map
    /// itself.
    pub smoothed: bool,
}

fn ceil_half(d: i64) -> i64 {
    (d.abs() + 1) / 2
}

/// Smooths crossings where two different strands meet, keeping the drawing
/// connected, until a single curve remains.
pub fn unicursal_smoothing(map: &CurveMap) -> Result<CurveMap> {
    map.validate()?;
    let mut cur = map.clone();
    while !cur.is_unicursal() {
        let mut strand_of = vec![usize::MAX; 4 * cur.vertex_count()];
        let mut id = 0;
        for s in cur.darts() {
            if strand_of[s.index()] != usize::MAX {
                continue;
            }
            for d in cur.strand_from(s) {
                strand_of[d.index()] = id;
                strand_of[cur.alpha(d).index()] = id;
            }
            id += 1;
        }
        let x = (0..cur.vertex_count())
            .find(|&v| strand_of[4 * v] != strand_of[4 * v + 1])
            .ok_or_else(|| Error::Validation("no crossing between distinct strands".into()))?;
        let next = [SmoothingChoice::A, SmoothingChoice::B]
            .into_iter()
            .map(|c| smooth(&cur, x, c))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .find(|s| s.connected())
            .ok_or_else(|| Error::Validation("no connected smoothing".into()))?;
        cur = next.map;
    }
    Ok(cur)
}

pub fn bounds_report_curve(curve: &CurveMap, max_steps: usize) -> Result<BoundsReport> {
    let defect = defect_polyak(curve)?;
    let trace = reduce_curve(curve, Family::Homotopy, Strategy::Greedy, max_steps)?;
    if !trace.complete {
        return Err(Error::BudgetExceeded(max_steps));
    }
    let lower_bound = ceil_half(defect);
    Ok(BoundsReport {
        n: curve.vertex_count(),
        defect,
        lower_bound,
        achieved_moves: trace.len(),
        exact: trace.len() as i64 == lower_bound,
        smoothed: false,
    })
}

pub fn bounds_report_graph(g: &PlaneGraph, max_steps: usize) -> Result<BoundsReport> {
    let medial = g.medial();
    let (curve, smoothed) = if medial.is_unicursal() {
        (medial.clone(), false)
    } else {
        (unicursal_smoothing(&medial)?, true)
    };
    let defect = defect_polyak(&curve)?;
    let trace = reduce_graph(g, Strategy::Greedy, max_steps)?;
    if !trace.complete {
        return Err(Error::BudgetExceeded(max_steps));
    }
    let lower_bound = ceil_half(defect);
    Ok(BoundsReport {
        n: medial.vertex_count(),
        defect,
        lower_bound,
        achieved_moves: trace.len(),
        exact: trace.len() as i64 == lower_bound,
        smoothed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cylindrical_grid, rectangular_grid, torus_knot};

    fn fig8() -> CurveMap {
        CurveMap::parse_cmap("cmap 1\nvertices 1\nv 0 0.1 0.0 0.3 0.2\nbase 0.0\nouter 0.2\n").unwrap()
    }

    #[test]
    fn greedy_small_curves() {
        let t = reduce_curve(&fig8(), Family::Homotopy, Strategy::Greedy, 10).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.complete);
        let t = reduce_curve(&torus_knot(2, 3), Family::Homotopy, Strategy::Greedy, 10).unwrap();
        assert!(t.complete && t.final_map.is_circle());
        t.replay().unwrap();
        let t = reduce_curve(&torus_knot(2, 3), Family::Medial, Strategy::Greedy, 10).unwrap();
        assert_eq!(t.len(), 3);
        t.replay().unwrap();
    }

    #[test]
    fn greedy_torus_knot() {
        let k = torus_knot(4, 5);
        let t = reduce_curve(&k, Family::Homotopy, Strategy::Greedy, 5000).unwrap();
        assert!(t.complete);
        t.replay().unwrap();
        assert!(t.len() >= 10);
        assert!(t.steps.iter().all(|s| [-2, 0, 2].contains(&s.delta().unwrap())));
    }

    #[test]
    fn exact_search() {
        let tre = torus_knot(2, 3);
        let x = min_moves_search(&tre, Family::Medial, 3, 10, 100_000).unwrap();
        assert_eq!(x.moves, 3);
        x.trace.replay().unwrap();
        let h = min_moves_search(&tre, Family::Homotopy, 3, 10, 100_000).unwrap();
        assert_eq!(h.moves, 2);
        let c = min_moves_search(&CurveMap::circle(), Family::Homotopy, 0, 1, 10).unwrap();
        assert_eq!(c.moves, 0);
    }

    #[test]
    fn graph_reduction() {
        let c3 = cylindrical_grid(1, 3).unwrap();
        let t = reduce_graph(&c3, Strategy::Greedy, 10).unwrap();
        assert_eq!(t.len(), 3);
        t.replay().unwrap();
        let loop1 = PlaneGraph::from_rotations(&[vec![(0, 1), (0, 0)]], Some((0, 0))).unwrap();
        assert_eq!(reduce_graph(&loop1, Strategy::Greedy, 10).unwrap().len(), 1);
        let g = rectangular_grid(3, 3).unwrap();
        let r = bounds_report_graph(&g, 1000).unwrap();
        assert!(r.achieved_moves as i64 >= r.lower_bound);
    }

    #[test]
    fn bounds() {
        let r = bounds_report_graph(&cylindrical_grid(1, 3).unwrap(), 100).unwrap();
        assert_eq!((r.lower_bound, r.achieved_moves), (1, 3));
        let r = bounds_report_graph(&PlaneGraph::single_vertex(), 100).unwrap();
        assert_eq!((r.lower_bound, r.achieved_moves), (0, 0));
        let r = bounds_report_curve(&torus_knot(2, 3), 100).unwrap();
        assert_eq!(r.lower_bound, 1);
    }

    #[test]
    fn smoothing_to_one_curve() {
        let link = torus_knot(3, 3);
        let s = unicursal_smoothing(&link).unwrap();
        assert!(s.is_unicursal());
        assert!(s.vertex_count() < link.vertex_count());
    }
}
