//! Constructors: flat torus knots, grid graphs, random curves, connected sums.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::PlaneGraph;
use crate::map::{CurveMap, Dart};
use crate::moves::{apply_move, enumerate_moves, MoveKind};

/// Flat torus knot `T(p, q)`: the closure of the braid
/// `(s_1 s_2 ... s_{p-1})^q` drawn in an annulus, strands running
/// counterclockwise. Crossing `(t, k)` with `t < q`, `1 <= k < p` swaps the
/// strands at radial levels `k - 1` and `k`. For `gcd(p, q) > 1` the result
/// has several strands. `p = 1` gives the circle.
///
/// Slots at every crossing: 0 leaves on the inner level, 1 arrives on the
/// inner level, 2 arrives on the outer level, 3 leaves on the outer level.
pub fn torus_knot(p: usize, q: usize) -> CurveMap {
    assert!(p >= 1 && q >= 1, "torus knot needs p, q >= 1");
    if p == 1 {
        return CurveMap::circle();
    }
    let w = p - 1;
    let n = w * q;
    let id = |t: usize, k: usize| (t % q) * w + (k - 1);
    let mut alpha = vec![Dart(0); 4 * n];
    let mut link = |a: Dart, b: Dart| {
        alpha[a.index()] = b;
        alpha[b.index()] = a;
    };
    for level in 0..p {
        // crossings touching this level, in angular order, with the slot used
        // to leave along it and the slot used to arrive on it
        let mut seq = Vec::new();
        for t in 0..q {
            if level >= 1 {
                seq.push((id(t, level), 3, 2));
            }
            if level + 1 < p {
                seq.push((id(t, level + 1), 0, 1));
            }
        }
        for i in 0..seq.len() {
            let (v, out, _) = seq[i];
            let (u, _, inc) = seq[(i + 1) % seq.len()];
            link(Dart::new(v, out), Dart::new(u, inc));
        }
    }
    let outer = Dart::new(id(0, w), 3);
    CurveMap::from_raw(alpha, outer, outer)
}

/// `p` nested `q`-cycles joined radially; level 1 is innermost.
pub fn cylindrical_grid(p: usize, q: usize) -> Result<PlaneGraph> {
    if p < 1 || q < 3 {
        return Err(Error::InvalidArguments(format!(
            "cylindrical grid needs p >= 1 and q >= 3, got {p} x {q}"
        )));
    }
    let id = |i: usize, j: usize| i * q + j % q;
    let mut rot = Vec::with_capacity(p * q);
    for i in 0..p {
        for j in 0..q {
            // counterclockwise: forward, inward, backward, outward
            let mut r = vec![id(i, j + 1)];
            if i > 0 {
                r.push(id(i - 1, j));
            }
            r.push(id(i, j + q - 1));
            if i + 1 < p {
                r.push(id(i + 1, j));
            }
            rot.push(r);
        }
    }
    PlaneGraph::from_neighbor_rotations(&rot, Some((id(p - 1, 0), 0)))
}

/// `p` rows by `q` columns of the square lattice.
pub fn rectangular_grid(p: usize, q: usize) -> Result<PlaneGraph> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidArguments(format!(
            "rectangular grid needs p, q >= 1, got {p} x {q}"
        )));
    }
    let id = |r: usize, c: usize| r * q + c;
    let mut rot = Vec::with_capacity(p * q);
    for r in 0..p {
        for c in 0..q {
            // counterclockwise from east
            let mut v = Vec::new();
            if c + 1 < q {
                v.push(id(r, c + 1));
            }
            if r + 1 < p {
                v.push(id(r + 1, c));
            }
            if c > 0 {
                v.push(id(r, c - 1));
            }
            if r > 0 {
                v.push(id(r - 1, c));
            }
            rot.push(v);
        }
    }
    let outer = (p * q > 1).then_some((0, 0));
    PlaneGraph::from_neighbor_rotations(&rot, outer)
}

/// Random curve with exactly `n` crossings, grown from the circle by random
/// 0->1 and 0->2 moves with a 3->3 flip on every third step where possible.
pub fn random_curve(n: usize, seed: u64) -> CurveMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut curve = CurveMap::circle();
    let mut step = 0usize;
    while curve.vertex_count() < n {
        step += 1;
        if step.is_multiple_of(3) {
            let flips = enumerate_moves(&curve, &[MoveKind::ThreeThree]);
            if let Some(site) = flips.choose(&mut rng) {
                curve = apply_move(&curve, site).expect("enumerated site applies");
                continue;
            }
        }
        let room = n - curve.vertex_count();
        let kind = if room >= 2 && !curve.is_circle() && rng.gen_bool(0.5) {
            MoveKind::ZeroTwo
        } else {
            MoveKind::ZeroOne
        };
        let sites = enumerate_moves(&curve, &[kind]);
        let site = sites.choose(&mut rng).expect("increasing moves always exist");
        curve = apply_move(&curve, site).expect("enumerated site applies");
    }
    let trav = curve.traversal();
    if let Some(&b) = trav.choose(&mut rng) {
        curve = curve.with_basepoint(b);
    }
    curve
}

/// Connected sum: the outer edges of both curves are cut and cross-spliced,
/// with `c2` placed in the outer face of `c1`. No crossing of `c1` is
/// interleaved with a crossing of `c2`.
pub fn connected_sum(c1: &CurveMap, c2: &CurveMap) -> Result<CurveMap> {
    c1.require_unicursal()?;
    c2.require_unicursal()?;
    if c2.is_circle() {
        return Ok(c1.clone());
    }
    if c1.is_circle() {
        return Ok(c2.clone());
    }
    let shift = c1.vertex_count();
    let o1 = c1.outer();
    let a1 = c1.alpha(o1);
    let o2 = c2.outer().shifted(shift);
    let a2 = c2.alpha(c2.outer()).shifted(shift);
    let mut sum = c1.disjoint_union(c2);
    sum.set_link(o1, a2);
    sum.set_link(o2, a1);
    sum.validate()?;
    Ok(sum)
}
