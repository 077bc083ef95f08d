//! Invariant suites over a fixed corpus of curves and graphs.

use clap::ValueEnum;

use flatcurve::graph::scrambled_grid;
use flatcurve::reduction::{reduce_curve, reduce_graph, Family, Strategy};
use flatcurve::{
    apply_electrical, apply_move, connected_sum, cylindrical_grid, defect_of_code, defect_polyak, defect_report,
    defect_winding, enumerate_electrical, enumerate_moves, expected_c2_exhaustive, gauss_code, medial_site,
    predict_delta, random_curve, rectangular_grid, torus_knot, CurveMap, MoveKind, PlaneGraph,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Lemma51,
    Lemma52,
    Formulas,
    Invariance,
    Deltas,
    Medial,
    Casson,
    Reduction,
    Roundtrip,
}

impl Suite {
    const EACH: [Suite; 9] = [
        Suite::Lemma51,
        Suite::Lemma52,
        Suite::Formulas,
        Suite::Invariance,
        Suite::Deltas,
        Suite::Medial,
        Suite::Casson,
        Suite::Reduction,
        Suite::Roundtrip,
    ];

    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

pub fn curves() -> Vec<(String, CurveMap)> {
    let mut out = vec![("circle".to_string(), CurveMap::circle())];
    for p in 2..=5 {
        for q in 2..=6 {
            if num_gcd(p, q) == 1 {
                out.push((format!("T({p},{q})"), torus_knot(p, q)));
            }
        }
    }
    for n in 1..=24 {
        out.push((format!("random({n},{n})"), random_curve(n, n as u64)));
    }
    let t = torus_knot(2, 3);
    let m = torus_knot(4, 3);
    out.push(("T(2,3)#T(4,3)".into(), connected_sum(&t, &m).expect("knots")));
    out.push(("T(3,4)#T(2,3)".into(), connected_sum(&torus_knot(3, 4), &t).expect("knots")));
    out
}

pub fn graphs() -> Vec<(String, PlaneGraph)> {
    let mut out = Vec::new();
    for k in 1..=2 {
        for q in [3, 4, 5] {
            out.push((format!("cylgrid({k},{q})"), cylindrical_grid(k, q).expect("valid")));
        }
    }
    for (p, q) in [(1, 3), (2, 3), (3, 3)] {
        out.push((format!("grid({p},{q})"), rectangular_grid(p, q).expect("valid")));
    }
    for seed in 0..4 {
        out.push((format!("scrambled(3,4,{seed})"), scrambled_grid(3, 4, 5, seed)));
    }
    out
}

fn num_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// One line per violation: the invariant, the case, and what went wrong.
type Violations = Vec<String>;

fn lemma51(corpus: &[(String, CurveMap)], v: &mut Violations) {
    for (name, c) in corpus {
        match defect_report(c) {
            Ok(r) if r.residuals.iter().all(|&x| x == 0) => {}
            Ok(r) => v.push(format!("sub-loop identity: {name}: residuals {:?}", r.residuals)),
            Err(e) => v.push(format!("sub-loop identity: {name}: {e}")),
        }
    }
}

fn lemma52(corpus: &[(String, CurveMap)], v: &mut Violations) {
    for (name, c) in corpus {
        match defect_report(c) {
            Ok(r) if r.polyak.abs() <= r.lemma52_bound => {}
            Ok(r) => v.push(format!("diameter bound: {name}: |{}| > {}", r.polyak, r.lemma52_bound)),
            Err(e) => v.push(format!("diameter bound: {name}: {e}")),
        }
    }
}

fn formulas(corpus: &[(String, CurveMap)], v: &mut Violations) {
    for (name, c) in corpus {
        match (defect_polyak(c), defect_winding(c)) {
            (Ok(a), Ok(b)) if a == b && a % 2 == 0 => {}
            (a, b) => v.push(format!("formula agreement: {name}: polyak {a:?}, winding {b:?}")),
        }
    }
}

fn invariance(corpus: &[(String, CurveMap)], v: &mut Violations) {
    for (name, c) in corpus {
        let d = defect_polyak(c).expect("unicursal corpus");
        let mut bad = Vec::new();
        for b in c.traversal() {
            if defect_polyak(&c.with_basepoint(b)).ok() != Some(d) {
                bad.push(format!("basepoint {b}"));
            }
        }
        if defect_polyak(&c.reversed()).ok() != Some(d) {
            bad.push("orientation".into());
        }
        if defect_polyak(&c.mirror()).ok() != Some(d) {
            bad.push("reflection".into());
        }
        let code = gauss_code(c).expect("unicursal corpus");
        if defect_of_code(&code.negated()) != d {
            bad.push("sign flip".into());
        }
        for b in bad {
            v.push(format!("defect invariance: {name}: {b}"));
        }
    }
}

fn deltas(corpus: &[(String, CurveMap)], v: &mut Violations) {
    for (name, c) in corpus {
        let before = defect_polyak(c).expect("unicursal corpus");
        for site in enumerate_moves(c, &MoveKind::HOMOTOPY_DECREASING) {
            let after = apply_move(c, &site).and_then(|m| defect_polyak(&m));
            let predicted = predict_delta(c, &site);
            let ok = matches!((&after, &predicted), (Ok(a), Ok(p)) if a - before == *p && [-2, 0, 2].contains(p))
                && (site.kind() != MoveKind::OneZero || predicted == Ok(0));
            if !ok {
                v.push(format!("move delta: {name}: {site:?}: predicted {predicted:?}, after {after:?}"));
            }
        }
    }
}

fn medial(graphs: &[(String, PlaneGraph)], v: &mut Violations) {
    for k in 1..=2 {
        for q in [3, 5] {
            let m = cylindrical_grid(k, q).expect("valid").medial();
            if m.canonical_form(false) != torus_knot(2 * k, q).canonical_form(false) {
                v.push(format!("medial torus: cylgrid({k},{q})"));
            }
        }
    }
    for (name, g) in graphs {
        let m = g.medial();
        for s in enumerate_electrical(g) {
            let direct = apply_electrical(g, &s).map(|h| h.medial().canonical_form(false));
            let via = apply_move(&m, &medial_site(g, &s)).map(|c| c.canonical_form(false));
            if direct.is_err() || direct != via {
                v.push(format!("medial commutation: {name}: {} at {}", s.kind, s.at));
            }
        }
    }
}

fn casson(corpus: &[(String, CurveMap)], v: &mut Violations) {
    for (name, c) in corpus.iter().filter(|(_, c)| c.vertex_count() <= 12) {
        match expected_c2_exhaustive(c) {
            Ok(e) if e.matches_defect() => {}
            Ok(e) => v.push(format!(
                "casson identity: {name}: {}/{} vs defect {}",
                e.numerator, e.denominator, e.defect
            )),
            Err(e) => v.push(format!("casson identity: {name}: {e}")),
        }
    }
}

fn reduction(corpus: &[(String, CurveMap)], graphs: &[(String, PlaneGraph)], v: &mut Violations) {
    for (name, c) in corpus.iter().filter(|(_, c)| c.vertex_count() <= 16) {
        for family in [Family::Homotopy, Family::Medial] {
            let budget = 5 * c.vertex_count().pow(2) + 16;
            match reduce_curve(c, family, Strategy::Greedy, budget) {
                Ok(t) if t.complete && t.replay().is_ok() => {}
                Ok(t) => v.push(format!("trace replay: {name} ({family}): complete {}", t.complete)),
                Err(e) => v.push(format!("trace replay: {name} ({family}): {e}")),
            }
        }
    }
    for (name, g) in graphs {
        let budget = 5 * g.edge_count().pow(2) + 16;
        match reduce_graph(g, Strategy::Greedy, budget) {
            Ok(t) if t.complete && t.replay().is_ok() => {}
            Ok(t) => v.push(format!("electrical replay: {name}: complete {}", t.complete)),
            Err(e) => v.push(format!("electrical replay: {name}: {e}")),
        }
    }
}

fn roundtrip(corpus: &[(String, CurveMap)], graphs: &[(String, PlaneGraph)], v: &mut Violations) {
    for (name, c) in corpus {
        match CurveMap::parse_cmap(&c.to_cmap()) {
            Ok(back) if back.canonical_form(false) == c.canonical_form(false) => {}
            _ => v.push(format!("cmap round trip: {name}")),
        }
    }
    for (name, g) in graphs {
        match PlaneGraph::parse_cmap(&g.to_cmap()) {
            Ok(back) if back.canonical_form(false) == g.canonical_form(false) => {}
            _ => v.push(format!("cmap round trip: {name}")),
        }
    }
}

/// Runs the suite and prints one status line per sub-suite followed by any
/// violations. Returns the number of violations.
pub fn run(suite: Suite) -> usize {
    let corpus = curves();
    let graphs = graphs();
    let selected: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut total = 0;
    for s in selected {
        let mut v = Violations::new();
        match s {
            Suite::Lemma51 => lemma51(&corpus, &mut v),
            Suite::Lemma52 => lemma52(&corpus, &mut v),
            Suite::Formulas => formulas(&corpus, &mut v),
            Suite::Invariance => invariance(&corpus, &mut v),
            Suite::Deltas => deltas(&corpus, &mut v),
            Suite::Medial => medial(&graphs, &mut v),
            Suite::Casson => casson(&corpus, &mut v),
            Suite::Reduction => reduction(&corpus, &graphs, &mut v),
            Suite::Roundtrip => roundtrip(&corpus, &graphs, &mut v),
            Suite::All => unreachable!(),
        }
        if v.is_empty() {
            println!("ok\t{}", s.name());
        } else {
            println!("FAIL\t{}\t{} violations", s.name(), v.len());
            for line in &v {
                println!("\t{line}");
            }
        }
        total += v.len();
    }
    total
}
