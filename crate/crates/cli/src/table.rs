//! Verification tables printed as TSV.

use std::fmt::Write;

use flatcurve::reduction::bounds_report_graph;
use flatcurve::{cylindrical_grid, defect_polyak, torus_knot};

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Defects of `T(p, ap+1)` and `T(aq+1, q)` against the closed forms.
pub fn torus() -> String {
    let mut s = String::from("p\tq\tn\tdefect\texpected\tok\n");
    let mut row = |p: usize, q: usize, expected: i64| {
        let d = defect_polyak(&torus_knot(p, q)).expect("coprime torus knot");
        writeln!(s, "{p}\t{q}\t{}\t{d}\t{expected}\t{}", (p - 1) * q, d == expected).unwrap();
    };
    for a in 1..=3 {
        for p in 2..=10 {
            row(p, a * p + 1, 2 * a as i64 * binom(p as i64 + 1, 3));
        }
        for q in 2..=10 {
            row(a * q + 1, q, -2 * a as i64 * binom(q as i64, 3));
        }
    }
    s
}

/// Defect lower bound against greedy electrical reduction on
/// `cylindrical_grid(k, 2k+1)`.
pub fn grids() -> anyhow::Result<String> {
    let mut s = String::from("k\tq\tedges\tdefect\tlower_bound\texpected\tachieved\tbudget\tok\n");
    for k in 2..=4 {
        let q = 2 * k + 1;
        let g = cylindrical_grid(k, q)?;
        let n = g.edge_count();
        let budget = 5 * n * n;
        let r = bounds_report_graph(&g, budget)?;
        let expected = binom(q as i64, 3);
        let ok = r.lower_bound == expected && r.achieved_moves <= budget;
        writeln!(
            s,
            "{k}\t{q}\t{n}\t{}\t{}\t{expected}\t{}\t{budget}\t{ok}",
            r.defect, r.lower_bound, r.achieved_moves
        )?;
    }
    Ok(s)
}
