//! Knot diagrams over curve shadows and the Casson invariant `c2`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::defect::defect_of_code;
use crate::error::{Error, Result};
use crate::gauss::{gauss_code, passages, SignedGaussCode};
use crate::map::{CurveMap, Dart};

/// A shadow with one over/under bit per crossing. `ascending[x]` is true iff
/// the first passage through `x` after the basepoint goes over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotDiagram {
    shadow: CurveMap,
    ascending: Vec<bool>,
}

impl KnotDiagram {
    pub fn new(shadow: CurveMap, ascending: Vec<bool>) -> Result<Self> {
        shadow.require_unicursal()?;
        if ascending.len() != shadow.vertex_count() {
            return Err(Error::InvalidArguments(format!(
                "{} bits for {} crossings",
                ascending.len(),
                shadow.vertex_count()
            )));
        }
        Ok(KnotDiagram { shadow, ascending })
    }

    pub fn shadow(&self) -> &CurveMap {
        &self.shadow
    }

    pub fn ascending(&self) -> &[bool] {
        &self.ascending
    }

    /// Slot parity of the strand that passes over at each crossing.
    fn over_parity(&self) -> Vec<usize> {
        let trav = self.shadow.traversal();
        let pass = passages(&self.shadow, &trav);
        pass.iter()
            .zip(&self.ascending)
            .map(|(p, &asc)| {
                let first = self.shadow.alpha(trav[p.first]).slot() % 2;
                if asc {
                    first
                } else {
                    1 - first
                }
            })
            .collect()
    }

    /// Same knot diagram read from a different basepoint (and direction); the
    /// bits are re-expressed in the new passage order.
    pub fn with_basepoint(&self, base: Dart) -> KnotDiagram {
        let over = self.over_parity();
        let shadow = self.shadow.with_basepoint(base);
        let trav = shadow.traversal();
        let ascending = passages(&shadow, &trav)
            .iter()
            .zip(&over)
            .map(|(p, &o)| shadow.alpha(trav[p.first]).slot() % 2 == o)
            .collect();
        KnotDiagram { shadow, ascending }
    }
}

/// Interleaved pairs `(x, y)` with `x` met first, and weight `-sgn(x) sgn(y)`.
fn weighted_pairs(code: &SignedGaussCode) -> Vec<(usize, usize, i64)> {
    let n = code.crossing_count();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && code.positions(x)[0] < code.positions(y)[0] && code.interleaved_unchecked(x, y) {
                out.push((x, y, -code.sign(x).value() * code.sign(y).value()));
            }
        }
    }
    out
}

fn c2_of(pairs: &[(usize, usize, i64)], ascending: impl Fn(usize) -> bool) -> i64 {
    pairs
        .iter()
        .filter(|&&(x, y, _)| !ascending(x) && ascending(y))
        .map(|&(_, _, w)| w)
        .sum()
}

/// Polyak–Viro formula: minus the sum over descending `x` and ascending `y`
/// that interleave with `x` met first of `sgn(x) sgn(y)`.
pub fn casson_c2(diagram: &KnotDiagram) -> Result<i64> {
    let code = gauss_code(&diagram.shadow)?;
    Ok(c2_of(&weighted_pairs(&code), |x| diagram.ascending[x]))
}

/// Exact mean of `c2` over all `2^n` resolutions, as an unreduced fraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactExpectation {
    pub n: usize,
    pub defect: i64,
    #[serde(rename = "expected_c2_num")]
    pub numerator: i64,
    #[serde(rename = "expected_c2_den")]
    pub denominator: u64,
}

impl ExactExpectation {
    /// `numerator * 8 == defect * denominator`.
    pub fn matches_defect(&self) -> bool {
        self.numerator as i128 * 8 == self.defect as i128 * self.denominator as i128
    }
}

pub const MAX_EXHAUSTIVE: usize = 20;

pub fn expected_c2_exhaustive(shadow: &CurveMap) -> Result<ExactExpectation> {
    let code = gauss_code(shadow)?;
    let n = code.crossing_count();
    if n > MAX_EXHAUSTIVE {
        return Err(Error::TooLarge(format!("{n} crossings; exhaustive limit is {MAX_EXHAUSTIVE}")));
    }
    let pairs = weighted_pairs(&code);
    let numerator = (0u64..1 << n)
        .into_par_iter()
        .map(|mask| c2_of(&pairs, |x| mask >> x & 1 == 1))
        .sum();
    Ok(ExactExpectation {
        n,
        defect: defect_of_code(&code),
        numerator,
        denominator: 1 << n,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarlo {
    pub samples: usize,
    pub mean: f64,
    pub stderr: f64,
}

/// Sample mean and standard error of `c2` over uniformly random resolutions.
/// Sample `i` draws from its own stream of the seeded generator, so results do
/// not depend on thread count.
pub fn expected_c2_monte_carlo(shadow: &CurveMap, samples: usize, seed: u64) -> Result<MonteCarlo> {
    if samples == 0 {
        return Err(Error::InvalidArguments("need at least one sample".into()));
    }
    let code = gauss_code(shadow)?;
    let n = code.crossing_count();
    let pairs = weighted_pairs(&code);
    let (sum, sq) = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
            let c = c2_of(&pairs, |x| bits[x]) as i128;
            (c, c * c)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let k = samples as f64;
    let mean = sum as f64 / k;
    let stderr = if samples > 1 {
        let var = (sq as f64 - sum as f64 * mean) / (k - 1.0);
        (var.max(0.0) / k).sqrt()
    } else {
        0.0
    };
    Ok(MonteCarlo { samples, mean, stderr })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{connected_sum, torus_knot};

    #[test]
    fn trefoil_resolutions() {
        let t = torus_knot(2, 3);
        let all_up = KnotDiagram::new(t.clone(), vec![true; 3]).unwrap();
        assert_eq!(casson_c2(&all_up).unwrap(), 0);
        let e = expected_c2_exhaustive(&t).unwrap();
        assert_eq!((e.numerator, e.denominator), (2, 8));
        assert!(e.matches_defect());
    }

    #[test]
    fn circle_and_figure_eight() {
        let fig8 = CurveMap::parse_cmap("cmap 1\nvertices 1\nv 0 0.1 0.0 0.3 0.2\nbase 0.0\nouter 0.2\n").unwrap();
        for b in [true, false] {
            assert_eq!(casson_c2(&KnotDiagram::new(fig8.clone(), vec![b]).unwrap()).unwrap(), 0);
        }
        let e = expected_c2_exhaustive(&CurveMap::circle()).unwrap();
        assert_eq!((e.numerator, e.denominator), (0, 1));
    }

    #[test]
    fn exact_identity_on_torus_knots() {
        for (p, q) in [(4, 3), (3, 4), (3, 5), (5, 3)] {
            assert!(expected_c2_exhaustive(&torus_knot(p, q)).unwrap().matches_defect());
        }
        let e = expected_c2_exhaustive(&torus_knot(4, 3)).unwrap();
        assert_eq!(e.numerator * 4, -(e.denominator as i64));
        let s = connected_sum(&torus_knot(2, 3), &torus_knot(4, 3)).unwrap();
        assert_eq!(expected_c2_exhaustive(&s).unwrap().numerator, 0);
    }

    #[test]
    fn basepoint_and_orientation_invariance() {
        let t = torus_knot(3, 4);
        let bits: Vec<bool> = (0..8).map(|i| (i * 5) % 3 == 0).collect();
        let k = KnotDiagram::new(t.clone(), bits).unwrap();
        let c = casson_c2(&k).unwrap();
        for d in t.darts() {
            assert_eq!(casson_c2(&k.with_basepoint(d)).unwrap(), c, "basepoint {d}");
        }
        let back = k.with_basepoint(t.alpha(t.base()));
        assert_eq!(back.with_basepoint(t.base()), k);
    }

    #[test]
    fn monte_carlo() {
        let t = torus_knot(2, 3);
        let one = expected_c2_monte_carlo(&t, 1, 3).unwrap();
        assert_eq!(one.stderr, 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        rng.set_stream(0);
        let bits: Vec<bool> = (0..3).map(|_| rng.gen()).collect();
        let c = casson_c2(&KnotDiagram::new(t.clone(), bits).unwrap()).unwrap();
        assert_eq!(one.mean, c as f64);
        let mc = expected_c2_monte_carlo(&t, 20_000, 11).unwrap();
        assert!((mc.mean - 0.25).abs() < 4.0 * mc.stderr);
        assert_eq!(mc, expected_c2_monte_carlo(&t, 20_000, 11).unwrap());
    }

    #[test]
    fn too_large() {
        let big = torus_knot(8, 3);
        assert!(matches!(expected_c2_exhaustive(&big), Err(Error::TooLarge(_))));
    }
}
