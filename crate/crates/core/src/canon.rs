//! Canonical keys for combinatorial maps.
//!
//! A map here is any pair of dart permutations: `alpha` (edge involution) and
//! `rot` (counterclockwise successor around a vertex). Two maps get equal keys
//! iff they are isomorphic as rotation systems; with the mirror flag, also up to
//! reversing every rotation.

use std::collections::VecDeque;

/// Isomorphism-invariant key of a (possibly disconnected) map.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(pub Vec<u32>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|w| w.to_le_bytes()).collect()
    }
}

/// Raw dart-permutation view used by [`canonical_key`].
pub(crate) struct DartPerms {
    pub alpha: Vec<usize>,
    pub rot: Vec<usize>,
}

impl DartPerms {
    fn mirrored(&self) -> DartPerms {
        let mut rot = vec![0; self.rot.len()];
        for (d, &r) in self.rot.iter().enumerate() {
            rot[r] = d;
        }
        DartPerms {
            alpha: self.alpha.clone(),
            rot,
        }
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.alpha.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let d = comp[i];
                i += 1;
                for e in [self.alpha[d], self.rot[d]] {
                    if !seen[e] {
                        seen[e] = true;
                        comp.push(e);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Per-dart invariant used to prune starting darts: sizes of the face on
    /// each side and the vertex degree.
    fn dart_invariants(&self) -> Vec<(usize, usize, usize)> {
        let n = self.alpha.len();
        let mut face_size = vec![0usize; n];
        let mut vert_size = vec![0usize; n];
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = s;
            loop {
                seen[d] = true;
                orbit.push(d);
                d = self.rot[self.alpha[d]];
                if d == s {
                    break;
                }
            }
            for &d in &orbit {
                face_size[d] = orbit.len();
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = s;
            loop {
                seen[d] = true;
                orbit.push(d);
                d = self.rot[d];
                if d == s {
                    break;
                }
            }
            for &d in &orbit {
                vert_size[d] = orbit.len();
            }
        }
        (0..n)
            .map(|d| (face_size[d], face_size[self.alpha[d]], vert_size[d]))
            .collect()
    }

    fn code_from(&self, start: usize, size: usize, label: &mut [u32]) -> Vec<u32> {
        const UNSET: u32 = u32::MAX;
        let mut order = Vec::with_capacity(size);
        label[start] = 0;
        order.push(start);
        let mut i = 0;
        let mut code = Vec::with_capacity(2 * size + 1);
        code.push(size as u32);
        while i < order.len() {
            let d = order[i];
            i += 1;
            for e in [self.alpha[d], self.rot[d]] {
                if label[e] == UNSET {
                    label[e] = order.len() as u32;
                    order.push(e);
                }
                code.push(label[e]);
            }
        }
        for &d in &order {
            label[d] = UNSET;
        }
        code
    }

    fn component_codes(&self) -> Vec<Vec<u32>> {
        let inv = self.dart_invariants();
        let mut label = vec![u32::MAX; self.alpha.len()];
        let mut codes: Vec<Vec<u32>> = self
            .components()
            .into_iter()
            .map(|comp| {
                let best_inv = comp.iter().map(|&d| inv[d]).min().unwrap();
                comp.iter()
                    .filter(|&&d| inv[d] == best_inv)
                    .map(|&d| self.code_from(d, comp.len(), &mut label))
                    .min()
                    .unwrap()
            })
            .collect();
        codes.sort();
        codes
    }
}

pub(crate) fn canonical_key(perms: &DartPerms, extra: &[u32], include_mirror: bool) -> CanonicalKey {
    let flatten = |codes: Vec<Vec<u32>>| {
        let mut out = extra.to_vec();
        for c in codes {
            out.extend(c);
        }
        out
    };
    let plain = flatten(perms.component_codes());
    if !include_mirror {
        return CanonicalKey(plain);
    }
    let mirrored = flatten(perms.mirrored().component_codes());
    CanonicalKey(plain.min(mirrored))
}

/// Breadth-first eccentricity diameter of an undirected graph given as
/// adjacency lists. Returns 0 for a single node.
pub(crate) fn graph_diameter(adj: &[Vec<usize>]) -> usize {
    let mut best = 0;
    let mut dist = vec![usize::MAX; adj.len()];
    for s in 0..adj.len() {
        dist.iter_mut().for_each(|x| *x = usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    best = best.max(dist[v]);
                    queue.push_back(v);
                }
            }
        }
    }
    best
}
