use super::FiniteSemigroup;

/// The maximal subgroup `G_e` at a non-zero idempotent `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalSubgroup {
    pub identity: usize,
    /// Elements of `G_e` as indices of the ambient semigroup, sorted.
    pub elements: Vec<usize>,
    /// `G_e` as a standalone group, relabeled in `elements` order.
    pub group: FiniteSemigroup,
}

/// For each idempotent `e ≠ θ`, the group of units of the local monoid `eSe`.
pub fn maximal_subgroups(s: &FiniteSemigroup) -> Vec<MaximalSubgroup> {
    s.idempotents()
        .into_iter()
        .filter(|&e| Some(e) != s.zero())
        .map(|e| {
            let mut local: Vec<usize> = s.elements().map(|x| s.mul(s.mul(e, x), e)).collect();
            local.sort_unstable();
            local.dedup();
            let elements: Vec<usize> = local
                .iter()
                .copied()
                .filter(|&x| local.iter().any(|&y| s.mul(x, y) == e && s.mul(y, x) == e))
                .collect();
            let group = s.restrict(&elements).expect("units of a monoid are closed");
            MaximalSubgroup { identity: e, elements, group }
        })
        .collect()
}
