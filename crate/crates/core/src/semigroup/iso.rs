//! Semigroup isomorphism by invariant-pruned backtracking.

use super::FiniteSemigroup;

/// Isomorphism-invariant data attached to one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementFingerprint {
    pub index: usize,
    pub period: usize,
    pub idempotent: bool,
    pub nilpotent: bool,
    pub is_zero: bool,
    /// `|{y : xy = x}|` and `|{y : yx = x}|`.
    pub right_stabilizers: usize,
    pub left_stabilizers: usize,
    /// Number of square roots `|{y : y² = x}|`.
    pub roots: usize,
}

pub fn fingerprint(s: &FiniteSemigroup) -> Vec<ElementFingerprint> {
    let n = s.order();
    let mut roots = vec![0; n];
    for y in 0..n {
        roots[s.mul(y, y)] += 1;
    }
    (0..n)
        .map(|x| {
            let (index, period) = s.index_period(x);
            ElementFingerprint {
                index,
                period,
                idempotent: s.mul(x, x) == x,
                nilpotent: s.zero().is_some_and(|z| x != z && s.power(x, n.max(2)) == z),
                is_zero: s.zero() == Some(x),
                right_stabilizers: (0..n).filter(|&y| s.mul(x, y) == x).count(),
                left_stabilizers: (0..n).filter(|&y| s.mul(y, x) == x).count(),
                roots: roots[x],
            }
        })
        .collect()
}

fn sorted_profile(fp: &[ElementFingerprint]) -> Vec<ElementFingerprint> {
    let mut p = fp.to_vec();
    p.sort();
    p
}

struct Search<'a> {
    a: &'a FiniteSemigroup,
    b: &'a FiniteSemigroup,
    fa: Vec<ElementFingerprint>,
    fb: Vec<ElementFingerprint>,
}

impl Search<'_> {
    /// Closes a partial map under products of mapped pairs. Returns false
    /// on conflict.
    fn propagate(&self, map: &mut [Option<usize>], inv: &mut [Option<usize>]) -> bool {
        let n = self.a.order();
        loop {
            let mut changed = false;
            for x in 0..n {
                let Some(fx) = map[x] else { continue };
                for y in 0..n {
                    let Some(fy) = map[y] else { continue };
                    let xy = self.a.mul(x, y);
                    let target = self.b.mul(fx, fy);
                    match map[xy] {
                        Some(t) if t != target => return false,
                        Some(_) => {}
                        None => {
                            if inv[target].is_some() || self.fa[xy] != self.fb[target] {
                                return false;
                            }
                            map[xy] = Some(target);
                            inv[target] = Some(xy);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn extend(&self, map: Vec<Option<usize>>, inv: Vec<Option<usize>>) -> Option<Vec<usize>> {
        let Some(x) = map.iter().position(Option::is_none) else {
            return Some(map.into_iter().map(Option::unwrap).collect());
        };
        for y in 0..self.b.order() {
            if inv[y].is_some() || self.fa[x] != self.fb[y] {
                continue;
            }
            let (mut m, mut i) = (map.clone(), inv.clone());
            m[x] = Some(y);
            i[y] = Some(x);
            if self.propagate(&mut m, &mut i) {
                if let Some(found) = self.extend(m, i) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// A product-preserving bijection `φ` with `φ[x]` the image of `x`, if
/// one exists.
pub fn isomorphic(a: &FiniteSemigroup, b: &FiniteSemigroup) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let (fa, fb) = (fingerprint(a), fingerprint(b));
    if sorted_profile(&fa) != sorted_profile(&fb) {
        return None;
    }
    let search = Search { a, b, fa, fb };
    let n = a.order();
    let phi = search.extend(vec![None; n], vec![None; n])?;
    debug_assert!((0..n).all(|x| (0..n).all(|y| phi[a.mul(x, y)] == b.mul(phi[x], phi[y]))));
    Some(phi)
}
