//! Signed Gauss codes and the interleaving relation.

use std::collections::HashMap;
use std::fmt;

use crate::error::{parse_err, Error, Result};
use crate::map::{CurveMap, Dart};

/// Crossing sign, +1 or -1.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Double-occurrence word with per-crossing signs.
///
/// `word[i] = (crossing, occurrence)` lists crossings in traversal order with
/// occurrence 1 or 2. Crossings are numbered `0..crossing_count()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGaussCode {
    word: Vec<(usize, u8)>,
    signs: Vec<Sign>,
    positions: Vec<[usize; 2]>,
}

impl SignedGaussCode {
    /// Builds a code from a crossing sequence (each crossing twice) and signs.
    pub fn new(sequence: &[usize], signs: Vec<Sign>) -> Result<Self> {
        let n = signs.len();
        if sequence.len() != 2 * n {
            return Err(Error::Validation(format!(
                "word of length {} for {n} crossings",
                sequence.len()
            )));
        }
        let mut positions = vec![[usize::MAX; 2]; n];
        let mut word = Vec::with_capacity(sequence.len());
        for (i, &x) in sequence.iter().enumerate() {
            let slot = positions
                .get_mut(x)
                .ok_or_else(|| Error::Validation(format!("crossing {x} out of range")))?;
            let occ = if slot[0] == usize::MAX {
                0
            } else if slot[1] == usize::MAX {
                1
            } else {
                return Err(Error::Validation(format!("crossing {x} appears more than twice")));
            };
            slot[occ] = i;
            word.push((x, occ as u8 + 1));
        }
        if let Some(x) = positions.iter().position(|p| p[1] == usize::MAX) {
            return Err(Error::Validation(format!("crossing {x} appears fewer than twice")));
        }
        Ok(SignedGaussCode {
            word,
            signs,
            positions,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn word(&self) -> &[(usize, u8)] {
        &self.word
    }

    pub fn sign(&self, x: usize) -> Sign {
        self.signs[x]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Positions of the first and second occurrence of `x` in the word.
    pub fn positions(&self, x: usize) -> [usize; 2] {
        self.positions[x]
    }

    /// Whether the occurrences of `x` and `y` alternate cyclically.
    pub fn interleaved(&self, x: usize, y: usize) -> Result<bool> {
        if x == y {
            return Err(Error::InvalidArguments("interleaving needs two distinct crossings".into()));
        }
        if x >= self.crossing_count() || y >= self.crossing_count() {
            return Err(Error::InvalidArguments("crossing out of range".into()));
        }
        Ok(self.interleaved_unchecked(x, y))
    }

    #[inline]
    pub(crate) fn interleaved_unchecked(&self, x: usize, y: usize) -> bool {
        let [a, b] = self.positions[x];
        let [c, d] = self.positions[y];
        (a < c && c < b) != (a < d && d < b)
    }

    /// Every crossing with its sign negated.
    pub fn negated(&self) -> SignedGaussCode {
        SignedGaussCode {
            word: self.word.clone(),
            signs: self.signs.iter().map(|s| s.flipped()).collect(),
            positions: self.positions.clone(),
        }
    }

    /// Parses the single-line text form, e.g. `a+ b- c+ a+ b- c+`.
    pub fn parse(text: &str) -> Result<SignedGaussCode> {
        let mut ids: HashMap<&str, usize> = HashMap::new();
        let mut signs: Vec<Sign> = Vec::new();
        let mut seq = Vec::new();
        for tok in text.split_whitespace() {
            let (label, sign) = match tok.as_bytes().last() {
                Some(b'+') => (&tok[..tok.len() - 1], Sign::Positive),
                Some(b'-') => (&tok[..tok.len() - 1], Sign::Negative),
                _ => return Err(parse_err(1, format!("token {tok:?} lacks a sign suffix"))),
            };
            if label.is_empty() {
                return Err(parse_err(1, format!("token {tok:?} lacks a label")));
            }
            let next = ids.len();
            let id = *ids.entry(label).or_insert(next);
            if id == signs.len() {
                signs.push(sign);
            } else if signs[id] != sign {
                return Err(parse_err(1, format!("crossing {label} has inconsistent signs")));
            }
            seq.push(id);
        }
        SignedGaussCode::new(&seq, signs).map_err(|e| parse_err(1, e.to_string()))
    }
}

/// Spreadsheet-style label: a..z, aa, ab, ...
pub fn crossing_label(mut x: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (x % 26) as u8);
        if x < 26 {
            break;
        }
        x = x / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).unwrap()
}

impl fmt::Display for SignedGaussCode {
    /// Crossings are relabeled in order of first appearance.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rank = vec![usize::MAX; self.crossing_count()];
        let mut next = 0;
        for (i, &(x, _)) in self.word.iter().enumerate() {
            if rank[x] == usize::MAX {
                rank[x] = next;
                next += 1;
            }
            if i > 0 {
                f.write_str(" ")?;
            }
            let s = if self.signs[x] == Sign::Positive { '+' } else { '-' };
            write!(f, "{}{}", crossing_label(rank[x]), s)?;
        }
        Ok(())
    }
}

/// Passage data for one crossing of a traversal.
#[derive(Copy, Clone, Debug)]
pub(crate) struct Passages {
    /// Index in the traversal of the dart arriving at the first passage.
    pub first: usize,
    pub second: usize,
}

/// Per-crossing passage indices along the traversal (outgoing darts
/// `trav[i]` arrive at `alpha(trav[i])`).
pub(crate) fn passages(curve: &CurveMap, trav: &[Dart]) -> Vec<Passages> {
    let mut out = vec![
        Passages {
            first: usize::MAX,
            second: usize::MAX
        };
        curve.vertex_count()
    ];
    for (i, &d) in trav.iter().enumerate() {
        let x = curve.alpha(d).vertex();
        if out[x].first == usize::MAX {
            out[x].first = i;
        } else {
            out[x].second = i;
        }
    }
    out
}

/// Signed Gauss code read from the basepoint.
///
/// A crossing is positive iff the entry dart of its second passage is the
/// counterclockwise successor of the exit dart of its first passage, i.e.
/// the first passage crosses the second from its right to its left.
pub fn gauss_code(curve: &CurveMap) -> Result<SignedGaussCode> {
    curve.require_unicursal()?;
    if curve.is_circle() {
        return SignedGaussCode::new(&[], Vec::new());
    }
    let trav = curve.traversal();
    let pass = passages(curve, &trav);
    let signs = pass
        .iter()
        .map(|p| {
            let first_exit = curve.alpha(trav[p.first]).opposite();
            let second_entry = curve.alpha(trav[p.second]);
            if second_entry == first_exit.rotate() {
                Sign::Positive
            } else {
                Sign::Negative
            }
        })
        .collect();
    let seq: Vec<usize> = trav.iter().map(|&d| curve.alpha(d).vertex()).collect();
    SignedGaussCode::new(&seq, signs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::torus_knot;

    #[test]
    fn trefoil_code_and_signs() {
        let code = gauss_code(&torus_knot(2, 3)).unwrap();
        assert_eq!(code.to_string(), "a+ b- c+ a+ b- c+");
    }

    #[test]
    fn circle_has_empty_word() {
        let code = gauss_code(&CurveMap::circle()).unwrap();
        assert_eq!(code.crossing_count(), 0);
        assert_eq!(code.to_string(), "");
    }

    #[test]
    fn figure_eight_word() {
        let text = "cmap 1\nvertices 1\nv 0 0.1 0.0 0.3 0.2\nbase 0.0\nouter 0.2\n";
        let m = CurveMap::parse_cmap(text).unwrap();
        let code = gauss_code(&m).unwrap();
        assert_eq!(code.word(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn interleaving_examples() {
        let tre = SignedGaussCode::parse("a+ b- c+ a+ b- c+").unwrap();
        assert!(tre.interleaved(0, 1).unwrap());
        let curls = SignedGaussCode::parse("a+ a+ b- b-").unwrap();
        assert!(!curls.interleaved(0, 1).unwrap());
        let abab = SignedGaussCode::parse("a- b- a- b-").unwrap();
        assert!(abab.interleaved(0, 1).unwrap());
        assert!(matches!(tre.interleaved(2, 2), Err(Error::InvalidArguments(_))));
    }

    #[test]
    fn text_round_trip() {
        let s = "a+ b- a+ c- b- c-";
        assert_eq!(SignedGaussCode::parse(s).unwrap().to_string(), s);
        assert!(SignedGaussCode::parse("a+ b").is_err());
        assert!(SignedGaussCode::parse("a+ a-").is_err());
        assert!(SignedGaussCode::parse("a+ a+ a+").is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(crossing_label(0), "a");
        assert_eq!(crossing_label(25), "z");
        assert_eq!(crossing_label(26), "aa");
        assert_eq!(crossing_label(27), "ab");
    }
}
