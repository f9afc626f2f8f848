//! Finite semigroups given by Cayley tables.

mod enumerate;
mod ideals;
mod io;
mod iso;
mod subgroups;

pub use enumerate::{canonical_table, enumerate_semigroups, MAX_ENUMERATION_ORDER};
pub use ideals::{factor_classify, principal_series, FactorKind, PrincipalSeries, ReesDesc, SeriesFactor};
pub use io::CayleyJson;
pub use iso::{fingerprint, isomorphic, ElementFingerprint};
pub use subgroups::{maximal_subgroups, MaximalSubgroup};

use crate::error::{Error, Result};

/// A validated finite semigroup. Elements are the indices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    names: Option<Vec<String>>,
    zero: Option<usize>,
}

impl FiniteSemigroup {
    /// Validates a raw Cayley table. The zero element, if any, is detected
    /// automatically.
    pub fn new(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: i, len: row.len(), expected: n });
            }
            if let Some((j, &value)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::OutOfRangeEntry { i, j, value, order: n });
            }
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::NameCount { expected: n, got: names.len() });
            }
        }
        Self::from_flat(n, table.into_iter().flatten().collect(), names)
    }

    /// Like [`FiniteSemigroup::new`] but also checks a declared zero.
    pub fn with_declared_zero(
        table: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
        zero: Option<usize>,
    ) -> Result<Self> {
        let s = Self::new(table, names)?;
        if let Some(z) = zero {
            if s.zero != Some(z) {
                return Err(Error::ZeroMismatch(z));
            }
        }
        Ok(s)
    }

    pub(crate) fn from_flat(order: usize, table: Vec<usize>, names: Option<Vec<String>>) -> Result<Self> {
        debug_assert_eq!(table.len(), order * order);
        let mut s = FiniteSemigroup { order, table, names, zero: None };
        if let Some((a, b, c)) = s.associativity_witness() {
            return Err(Error::NonAssociative { a, b, c });
        }
        s.zero = s.find_zero();
        Ok(s)
    }

    fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    fn find_zero(&self) -> Option<usize> {
        (0..self.order).find(|&z| (0..self.order).all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of an element: its name if present, else its index.
    pub fn label(&self, x: usize) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub(crate) fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::NameCount { expected: self.order, got: names.len() });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn without_names(mut self) -> Self {
        self.names = None;
        self
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|n| n == name)
    }

    /// Two-sided identity, if any.
    pub fn identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True iff the whole semigroup is a group.
    pub fn is_group(&self) -> bool {
        match self.identity() {
            Some(e) => (0..self.order).all(|x| (0..self.order).any(|y| self.mul(x, y) == e && self.mul(y, x) == e)),
            None => false,
        }
    }

    pub fn power(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1);
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    /// Index and period of the monogenic subsemigroup generated by `x`:
    /// the smallest `i, p` with `x^(i+p) = x^i`.
    pub fn index_period(&self, x: usize) -> (usize, usize) {
        let mut seen = vec![0usize; self.order];
        let mut cur = x;
        let mut k = 1;
        loop {
            if seen[cur] != 0 {
                return (seen[cur], k - seen[cur]);
            }
            seen[cur] = k;
            cur = self.mul(cur, x);
            k += 1;
        }
    }

    /// `E(S)`: all `e` with `e*e = e`, including the zero.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&e| self.mul(e, e) == e).collect()
    }

    /// Nontrivial nilpotents: `s != θ` with `s^m = θ` for some `m`.
    pub fn nilpotents(&self) -> Result<Vec<usize>> {
        let z = self.zero.ok_or(Error::NoZeroElement)?;
        Ok((0..self.order)
            .filter(|&s| s != z && self.power(s, self.order.max(2)) == z)
            .collect())
    }

    /// True iff every non-zero element has exactly one inverse `b`
    /// (`aba = a`, `bab = b`).
    pub fn is_inverse(&self) -> bool {
        (0..self.order).filter(|&a| Some(a) != self.zero).all(|a| {
            (0..self.order)
                .filter(|&b| {
                    self.mul(self.mul(a, b), a) == a && self.mul(self.mul(b, a), b) == b
                })
                .count()
                == 1
        })
    }

    /// `S^θ`: a new zero appended as the last element.
    pub fn adjoin_zero(&self) -> FiniteSemigroup {
        self.adjoin(|_, _| None, "θ")
    }

    /// `S^1`: a new identity appended as the last element.
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        self.adjoin(|a, b| Some((a, b)), "1")
    }

    fn adjoin(&self, rule: impl Fn(usize, usize) -> Option<(usize, usize)>, label: &str) -> FiniteSemigroup {
        let n = self.order;
        let new = n;
        let mut table = Vec::with_capacity((n + 1) * (n + 1));
        for a in 0..=n {
            for b in 0..=n {
                let v = if a < n && b < n {
                    self.mul(a, b)
                } else if a == new && b == new {
                    new
                } else {
                    // One factor is the new element: identity returns the
                    // other factor, zero absorbs.
                    match rule(a, b) {
                        Some(_) if a == new => b,
                        Some(_) => a,
                        None => new,
                    }
                };
                table.push(v);
            }
        }
        let names = self.names.as_ref().map(|ns| {
            let mut ns = ns.clone();
            ns.push(label.to_string());
            ns
        });
        FiniteSemigroup::from_flat(n + 1, table, names).expect("adjoining a zero or identity preserves associativity")
    }

    /// `S` itself if it already has a zero, otherwise `S^θ`.
    pub fn with_zero(&self) -> (FiniteSemigroup, bool) {
        match self.zero {
            Some(_) => (self.clone(), false),
            None => (self.adjoin_zero(), true),
        }
    }

    /// `S` itself if it already is a monoid, otherwise `S^1`.
    pub fn with_identity(&self) -> (FiniteSemigroup, bool) {
        match self.identity() {
            Some(_) => (self.clone(), false),
            None => (self.adjoin_identity(), true),
        }
    }

    /// The subsemigroup on `elements` (which must be closed), relabeled in
    /// the given order.
    pub fn restrict(&self, elements: &[usize]) -> Result<FiniteSemigroup> {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &e) in elements.iter().enumerate() {
            pos[e] = i;
        }
        let k = elements.len();
        if k == 0 {
            return Err(Error::Empty);
        }
        let mut table = Vec::with_capacity(k * k);
        for &a in elements {
            for &b in elements {
                let p = pos[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::PreconditionViolated(format!(
                        "subset not closed: {} * {} leaves it",
                        self.label(a),
                        self.label(b)
                    )));
                }
                table.push(p);
            }
        }
        let names = self.names.as_ref().map(|ns| elements.iter().map(|&e| ns[e].clone()).collect());
        FiniteSemigroup::from_flat(k, table, names)
    }

    /// Relabel by a permutation: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSemigroup {
        let n = self.order;
        let mut inv = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        let names = self.names.as_ref().map(|ns| (0..n).map(|i| ns[inv[i]].clone()).collect());
        FiniteSemigroup::from_flat(n, table, names).expect("relabeling preserves associativity")
    }

    /// Rees quotient `S/I`: the elements of `S \ I` (in index order)
    /// followed by a new zero.
    pub fn rees_quotient(&self, ideal: &[usize]) -> Result<FiniteSemigroup> {
        let mut in_ideal = vec![false; self.order];
        for &x in ideal {
            in_ideal[x] = true;
        }
        for &x in ideal {
            for s in 0..self.order {
                let l = self.mul(s, x);
                if !in_ideal[l] {
                    return Err(Error::NotAnIdeal { element: x, multiplier: s, product: l, side: "left" });
                }
                let r = self.mul(x, s);
                if !in_ideal[r] {
                    return Err(Error::NotAnIdeal { element: x, multiplier: s, product: r, side: "right" });
                }
            }
        }
        let keep: Vec<usize> = (0..self.order).filter(|&x| !in_ideal[x]).collect();
        Ok(quotient_on(self, &keep, &in_ideal))
    }
}

/// Rees factor on `keep ∪ {θ}` where products landing in `collapsed` go to θ.
pub(crate) fn quotient_on(s: &FiniteSemigroup, keep: &[usize], collapsed: &[bool]) -> FiniteSemigroup {
    let k = keep.len();
    let theta = k;
    let mut pos = vec![theta; s.order()];
    for (i, &x) in keep.iter().enumerate() {
        pos[x] = i;
    }
    let mut table = Vec::with_capacity((k + 1) * (k + 1));
    for a in 0..=k {
        for b in 0..=k {
            let v = if a == theta || b == theta {
                theta
            } else {
                let p = s.mul(keep[a], keep[b]);
                if collapsed[p] {
                    theta
                } else {
                    pos[p]
                }
            };
            table.push(v);
        }
    }
    let names = s.names().map(|ns| {
        let mut v: Vec<String> = keep.iter().map(|&x| ns[x].clone()).collect();
        v.push("θ".to_string());
        v
    });
    FiniteSemigroup::from_flat(k + 1, table, names).expect("Rees quotient by an ideal is associative")
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn t2() -> FiniteSemigroup {
        // e1 e2 j0 θ
        FiniteSemigroup::new(
            vec![vec![0, 3, 2, 3], vec![3, 1, 3, 3], vec![3, 2, 3, 3], vec![3, 3, 3, 3]],
            Some(["e1", "e2", "j0", "θ"].map(String::from).to_vec()),
        )
        .unwrap()
    }

    fn cyclic(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(), None).unwrap()
    }

    #[test]
    fn validates_t2_with_zero() {
        let s = t2();
        assert_eq!(s.zero(), Some(3));
        assert_eq!(s.order(), 4);
    }

    #[test]
    fn singleton_is_valid() {
        let s = FiniteSemigroup::new(vec![vec![0]], None).unwrap();
        assert_eq!(s.zero(), Some(0));
        assert_eq!(s.identity(), Some(0));
    }

    #[test]
    fn rejects_malformed_tables() {
        assert_eq!(FiniteSemigroup::new(vec![], None), Err(Error::Empty));
        assert!(matches!(
            FiniteSemigroup::new(vec![vec![0, 1], vec![0]], None),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            FiniteSemigroup::new(vec![vec![0, 2], vec![0, 0]], None),
            Err(Error::OutOfRangeEntry { i: 0, j: 1, value: 2, .. })
        ));
    }

    #[test]
    fn non_associative_magma_found_by_search() {
        // Oracle: scan all 16 binary operations on {0,1} for one that fails
        // associativity, then check `new` reports a genuine witness triple.
        let mut found = 0;
        for code in 0..16u32 {
            let t: Vec<Vec<usize>> =
                (0..2).map(|a| (0..2).map(|b| ((code >> (2 * a + b)) & 1) as usize).collect()).collect();
            let brute = (0..2).any(|a| {
                (0..2).any(|b| (0..2).any(|c| t[t[a][b]][c] != t[a][t[b][c]]))
            });
            match FiniteSemigroup::new(t.clone(), None) {
                Err(Error::NonAssociative { a, b, c }) => {
                    assert!(brute);
                    assert_ne!(t[t[a][b]][c], t[a][t[b][c]]);
                    found += 1;
                }
                Ok(_) => assert!(!brute),
                Err(e) => panic!("unexpected {e}"),
            }
        }
        // 8 of the 16 two-element magmas are semigroups.
        assert_eq!(found, 8);
    }

    #[test]
    fn declared_zero_is_reverified() {
        let rows = t2().rows();
        assert!(FiniteSemigroup::with_declared_zero(rows.clone(), None, Some(3)).is_ok());
        assert_eq!(FiniteSemigroup::with_declared_zero(rows, None, Some(0)), Err(Error::ZeroMismatch(0)));
    }

    #[test]
    fn idempotents_and_nilpotents() {
        let s = t2();
        assert_eq!(s.idempotents(), vec![0, 1, 3]);
        assert_eq!(s.nilpotents().unwrap(), vec![2]);
        assert_eq!(cyclic(5).idempotents(), vec![0]);
        assert_eq!(cyclic(3).nilpotents(), Err(Error::NoZeroElement));
        assert!(cyclic(3).adjoin_zero().nilpotents().unwrap().is_empty());
        let null = FiniteSemigroup::new(vec![vec![0, 0], vec![0, 0]], None).unwrap();
        assert_eq!(null.idempotents(), vec![0]);
    }

    #[test]
    fn adjoining() {
        let triv = FiniteSemigroup::new(vec![vec![0]], None).unwrap();
        let z = triv.adjoin_zero();
        assert_eq!(z.rows(), vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(z.zero(), Some(1));
        let c2 = cyclic(2).adjoin_identity();
        assert_eq!(c2.order(), 3);
        assert_eq!(c2.identity(), Some(2));
        assert_eq!(c2.mul(1, 1), 0);
        assert!(!cyclic(2).with_identity().1);
        assert!(t2().with_identity().1);
    }

    #[test]
    fn rees_quotient_of_t2() {
        let s = t2();
        let q = s.rees_quotient(&[2, 3]).unwrap();
        assert_eq!(q.order(), 3);
        assert_eq!(q.rows(), vec![vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]]);
        let same = s.rees_quotient(&[3]).unwrap();
        assert_eq!(same.rows(), s.rows());
        assert!(matches!(s.rees_quotient(&[1, 3]), Err(Error::NotAnIdeal { .. })));
    }

    #[test]
    fn inverse_semigroups() {
        assert!(cyclic(4).is_inverse());
        assert!(!t2().is_inverse());
    }

    #[test]
    fn index_period_of_cyclic_elements() {
        let c6 = cyclic(6);
        assert_eq!(c6.index_period(1), (1, 6));
        assert_eq!(c6.index_period(2), (1, 3));
        assert_eq!(t2().index_period(2), (2, 1));
    }
}
