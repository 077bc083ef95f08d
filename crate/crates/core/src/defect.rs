//! The defect invariant, computed from interleaved pairs and, independently,
//! from sub-loop winding numbers.

use serde::Serialize;

use crate::error::Result;
use crate::gauss::{gauss_code, SignedGaussCode};
use crate::map::CurveMap;
use crate::winding::{dual_diameter, subloop_winding_with, Rational};

/// Defect from a signed Gauss code: `-2` times the sum of sign products over
/// unordered interleaved pairs.
pub fn defect_of_code(code: &SignedGaussCode) -> i64 {
    let n = code.crossing_count();
    let mut sum = 0;
    for x in 0..n {
        for y in (x + 1)..n {
            if code.interleaved_unchecked(x, y) {
                sum += code.sign(x).value() * code.sign(y).value();
            }
        }
    }
    -2 * sum
}

pub fn defect_polyak(curve: &CurveMap) -> Result<i64> {
    Ok(defect_of_code(&gauss_code(curve)?))
}

fn interleaved_pairs(code: &SignedGaussCode) -> usize {
    let n = code.crossing_count();
    (0..n)
        .flat_map(|x| ((x + 1)..n).map(move |y| (x, y)))
        .filter(|&(x, y)| code.interleaved_unchecked(x, y))
        .count()
}

/// `n - 2 * sum_x sgn(x) * wind(loop_x, x)` with the basepoint moved to the
/// outer face first.
pub fn defect_winding(curve: &CurveMap) -> Result<i64> {
    curve.require_unicursal()?;
    if curve.is_circle() {
        return Ok(0);
    }
    let (curve, _) = curve.normalize_basepoint();
    let code = gauss_code(&curve)?;
    let faces = curve.faces();
    let trav = curve.traversal();
    let mut acc = Rational::from_integer(curve.vertex_count() as i64);
    for x in 0..curve.vertex_count() {
        let w = subloop_winding_with(&curve, &faces, &trav, x);
        acc -= Rational::from_integer(2 * code.sign(x).value()) * w;
    }
    assert!(acc.is_integer(), "winding defect {acc} is not an integer");
    Ok(acc.to_integer())
}

/// Both defect formulas plus the per-crossing sub-loop identity and the
/// diameter bound.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DefectReport {
    pub n: usize,
    pub polyak: i64,
    pub winding: i64,
    pub pairs: usize,
    pub lemma52_bound: i64,
    /// Per crossing: interleaved sign sum minus `2 wind - sgn`; all zero on a
    /// valid curve.
    pub residuals: Vec<i64>,
    /// True if the basepoint was relocated to the outer face.
    pub basepoint_moved: bool,
}

impl DefectReport {
    pub fn holds(&self) -> bool {
        self.polyak == self.winding
            && self.polyak.abs() <= self.lemma52_bound
            && self.residuals.iter().all(|&r| r == 0)
    }
}

pub fn defect_report(curve: &CurveMap) -> Result<DefectReport> {
    curve.require_unicursal()?;
    let (curve, moved) = curve.normalize_basepoint();
    let code = gauss_code(&curve)?;
    let n = curve.vertex_count();
    let mut residuals = Vec::with_capacity(n);
    if n > 0 {
        let faces = curve.faces();
        let trav = curve.traversal();
        for x in 0..n {
            let lhs: i64 = (0..n)
                .filter(|&y| y != x && code.interleaved_unchecked(x, y))
                .map(|y| code.sign(y).value())
                .sum();
            let w = subloop_winding_with(&curve, &faces, &trav, x);
            let rhs = Rational::from_integer(2) * w - Rational::from_integer(code.sign(x).value());
            let res = Rational::from_integer(lhs) - rhs;
            assert!(res.is_integer());
            residuals.push(res.to_integer());
        }
    }
    Ok(DefectReport {
        n,
        polyak: defect_of_code(&code),
        winding: defect_winding(&curve)?,
        pairs: interleaved_pairs(&code),
        lemma52_bound: (2 * n * dual_diameter(&curve) + n) as i64,
        residuals,
        basepoint_moved: moved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::torus_knot;

    #[test]
    fn small_values() {
        assert_eq!(defect_polyak(&CurveMap::circle()).unwrap(), 0);
        assert_eq!(defect_polyak(&torus_knot(2, 3)).unwrap(), 2);
        assert_eq!(defect_polyak(&torus_knot(4, 3)).unwrap(), -2);
        let fig8 = CurveMap::parse_cmap("cmap 1\nvertices 1\nv 0 0.1 0.0 0.3 0.2\nbase 0.0\nouter 0.2\n").unwrap();
        assert_eq!(defect_polyak(&fig8).unwrap(), 0);
        assert_eq!(defect_winding(&fig8).unwrap(), 0);
    }

    #[test]
    fn winding_formula_trefoil() {
        assert_eq!(defect_winding(&torus_knot(2, 3)).unwrap(), 2);
        assert_eq!(defect_winding(&CurveMap::circle()).unwrap(), 0);
    }

    #[test]
    fn reports() {
        let r = defect_report(&torus_knot(2, 3)).unwrap();
        assert_eq!(r.residuals, vec![0, 0, 0]);
        assert_eq!(r.lemma52_bound, 15);
        assert_eq!(r.pairs, 3);
        assert!(r.holds());

        let r = defect_report(&CurveMap::circle()).unwrap();
        assert!(r.residuals.is_empty());
        assert_eq!(r.lemma52_bound, 0);

        let r = defect_report(&torus_knot(5, 4)).unwrap();
        assert_eq!(r.n, 16);
        assert_eq!(r.polyak, -8);
        assert!(r.holds());
    }

    #[test]
    fn code_defect_from_text() {
        let code = SignedGaussCode::parse("a+ b- c+ a+ b- c+").unwrap();
        assert_eq!(defect_of_code(&code), 2);
        assert_eq!(defect_of_code(&code.negated()), 2);
    }
}
