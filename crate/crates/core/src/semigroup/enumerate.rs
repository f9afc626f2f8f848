//! Exhaustive enumeration of small semigroups up to isomorphism.

use std::collections::BTreeSet;

use super::FiniteSemigroup;
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 5;

const UNSET: u8 = u8::MAX;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Lexicographically least row-major table over all relabelings.
fn canonical_flat(n: usize, table: &[u8], inverses: &[Vec<usize>]) -> Vec<u8> {
    let mut best: Vec<u8> = table.to_vec();
    let mut cand = vec![0u8; n * n];
    for q in inverses {
        // q[new] = old; p[old] = new.
        let mut p = [0u8; 8];
        for (new, &old) in q.iter().enumerate() {
            p[old] = new as u8;
        }
        let mut ord = std::cmp::Ordering::Equal;
        for i in 0..n {
            for j in 0..n {
                let v = p[table[q[i] * n + q[j]] as usize];
                if ord == std::cmp::Ordering::Equal {
                    ord = v.cmp(&best[i * n + j]);
                    if ord == std::cmp::Ordering::Greater {
                        break;
                    }
                }
                cand[i * n + j] = v;
            }
            if ord == std::cmp::Ordering::Greater {
                break;
            }
        }
        if ord == std::cmp::Ordering::Less {
            best.copy_from_slice(&cand);
        }
    }
    best
}

/// Canonical form of a semigroup: its least relabeled Cayley table.
/// Two semigroups are isomorphic iff their canonical tables coincide.
pub fn canonical_table(s: &FiniteSemigroup) -> Vec<usize> {
    let n = s.order();
    assert!(n <= 8, "canonical_table is intended for tiny semigroups");
    let flat: Vec<u8> = s.flat_table().iter().map(|&x| x as u8).collect();
    canonical_flat(n, &flat, &permutations(n)).into_iter().map(usize::from).collect()
}

fn consistent(n: usize, t: &[u8]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = t[a * n + b];
            if ab == UNSET {
                continue;
            }
            for c in 0..n {
                let bc = t[b * n + c];
                if bc == UNSET {
                    continue;
                }
                let l = t[ab as usize * n + c];
                let r = t[a * n + bc as usize];
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn fill(n: usize, cell: usize, t: &mut Vec<u8>, found: &mut BTreeSet<Vec<u8>>, inverses: &[Vec<usize>]) {
    if cell == n * n {
        found.insert(canonical_flat(n, t, inverses));
        return;
    }
    for v in 0..n as u8 {
        t[cell] = v;
        if consistent(n, t) {
            fill(n, cell + 1, t, found, inverses);
        }
    }
    t[cell] = UNSET;
}

/// Visits one representative (the canonical table) of every isomorphism
/// class of semigroups of the given order, in increasing canonical order,
/// and returns the number of classes.
pub fn enumerate_semigroups(order: usize, mut visitor: impl FnMut(&FiniteSemigroup)) -> Result<usize> {
    if order == 0 {
        return Err(Error::Empty);
    }
    if order > MAX_ENUMERATION_ORDER {
        return Err(Error::BudgetExceeded(order));
    }
    let inverses = permutations(order);
    let mut found = BTreeSet::new();
    fill(order, 0, &mut vec![UNSET; order * order], &mut found, &inverses);
    for t in &found {
        let s = FiniteSemigroup::from_flat(order, t.iter().map(|&x| usize::from(x)).collect(), None)
            .expect("enumerated tables are associative");
        visitor(&s);
    }
    Ok(found.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // OEIS A027851: 1, 5, 24 semigroups of orders 1, 2, 3 up to isomorphism.
        assert_eq!(enumerate_semigroups(1, |_| {}).unwrap(), 1);
        assert_eq!(enumerate_semigroups(2, |_| {}).unwrap(), 5);
        assert_eq!(enumerate_semigroups(3, |_| {}).unwrap(), 24);
    }

    #[test]
    fn budget_guard() {
        assert_eq!(enumerate_semigroups(6, |_| {}), Err(Error::BudgetExceeded(6)));
        assert_eq!(enumerate_semigroups(0, |_| {}), Err(Error::Empty));
    }

    #[test]
    fn representatives_are_canonical() {
        enumerate_semigroups(3, |s| assert_eq!(canonical_table(s), s.flat_table())).unwrap();
    }
}
