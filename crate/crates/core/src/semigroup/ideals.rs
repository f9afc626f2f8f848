use serde::{Deserialize, Serialize};

use super::{quotient_on, FiniteSemigroup};
use crate::error::{Error, Result};
use crate::groups::{group_desc, GroupDesc};

/// Shape of a completely 0-simple factor that is not a group with zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesDesc {
    /// Number of nonzero R-classes.
    pub rows: usize,
    /// Number of nonzero L-classes.
    pub cols: usize,
    /// `(|F| - 1) / (rows * cols)`.
    pub group_order: usize,
    pub completely_zero_simple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorKind {
    Null,
    Group(GroupDesc),
    GroupWithZero(GroupDesc),
    ReesMatrix(ReesDesc),
}

impl FactorKind {
    pub fn group(&self) -> Option<&GroupDesc> {
        match self {
            FactorKind::Group(g) | FactorKind::GroupWithZero(g) => Some(g),
            _ => None,
        }
    }

    pub fn short(&self) -> String {
        match self {
            FactorKind::Null => "Null".into(),
            FactorKind::Group(g) => format!("Group({})", g.name()),
            FactorKind::GroupWithZero(g) => format!("GroupWithZero({})", g.name()),
            FactorKind::ReesMatrix(r) => format!("ReesMatrix({}x{} over order {})", r.rows, r.cols, r.group_order),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesFactor {
    /// `S_i \ S_{i+1}`, as indices of [`PrincipalSeries::semigroup`].
    pub elements: Vec<usize>,
    pub kind: FactorKind,
    /// The Rees factor `S_i / S_{i+1}`; its zero is the last element.
    pub quotient: FiniteSemigroup,
}

/// A maximal chain of ideals `S = S_1 ⊃ … ⊃ S_k = {θ} ⊃ ∅`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalSeries {
    /// The semigroup the chain lives in: the input, or the input with a
    /// zero adjoined when it had none.
    pub semigroup: FiniteSemigroup,
    pub zero_adjoined: bool,
    /// `S_1, …, S_k`, each sorted; the last is `{θ}`.
    pub ideals: Vec<Vec<usize>>,
    /// One factor per consecutive pair `S_i ⊃ S_{i+1}`.
    pub factors: Vec<SeriesFactor>,
}

impl PrincipalSeries {
    pub fn null_factor_count(&self) -> usize {
        self.factors.iter().filter(|f| f.kind == FactorKind::Null).count()
    }

    /// Maps an index of the series semigroup back to the input, if it was
    /// not the adjoined zero.
    pub fn original_index(&self, x: usize) -> Option<usize> {
        if self.zero_adjoined && x + 1 == self.semigroup.order() {
            None
        } else {
            Some(x)
        }
    }
}

fn bits(s: &FiniteSemigroup, xs: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut v = vec![false; s.order()];
    for x in xs {
        v[x] = true;
    }
    v
}

/// `S¹ x S¹` as a membership mask.
pub(crate) fn principal_ideal(s: &FiniteSemigroup, x: usize) -> Vec<bool> {
    let n = s.order();
    let mut m = vec![false; n];
    m[x] = true;
    for a in 0..n {
        let ax = s.mul(a, x);
        m[ax] = true;
        m[s.mul(x, a)] = true;
        for b in 0..n {
            m[s.mul(ax, b)] = true;
        }
    }
    m
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

/// Builds the deterministic principal series: from the current ideal,
/// remove a maximal J-class, choosing among the resulting maximal proper
/// ideals the one whose sorted index sequence is lexicographically
/// smallest.
pub fn principal_series(input: &FiniteSemigroup) -> PrincipalSeries {
    let whole_group = input.is_group();
    let (s, zero_adjoined) = input.with_zero();
    let n = s.order();
    let theta = s.zero().expect("with_zero yields a zero");
    let pideal: Vec<Vec<bool>> = (0..n).map(|x| principal_ideal(&s, x)).collect();
    // J-class representative: smallest element with the same principal ideal.
    let class_of: Vec<usize> = (0..n).map(|x| (0..n).find(|&y| pideal[y] == pideal[x]).unwrap()).collect();

    let mut current: Vec<usize> = (0..n).collect();
    let mut ideals = vec![current.clone()];
    while current.len() > 1 {
        let reps: Vec<usize> = {
            let mut r: Vec<usize> = current.iter().map(|&x| class_of[x]).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let maximal = reps.iter().copied().filter(|&c| {
            reps.iter().all(|&d| d == c || !(subset(&pideal[c], &pideal[d]) && pideal[c] != pideal[d]))
        });
        let next = maximal
            .filter(|&c| c != class_of[theta])
            .map(|c| current.iter().copied().filter(|&x| class_of[x] != c).collect::<Vec<_>>())
            .min()
            .expect("an ideal larger than {θ} has a maximal non-zero J-class");
        ideals.push(next.clone());
        current = next;
    }

    let factors = ideals
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let lower = bits(&s, w[1].iter().copied());
            let elements: Vec<usize> = w[0].iter().copied().filter(|&x| !lower[x]).collect();
            let quotient = quotient_on(&s, &elements, &lower);
            let mut kind = factor_classify(&quotient).expect("Rees factors carry a zero");
            if i == 0 && whole_group {
                if let FactorKind::GroupWithZero(g) = kind {
                    kind = FactorKind::Group(g);
                }
            }
            SeriesFactor { elements, kind, quotient }
        })
        .collect();

    PrincipalSeries { semigroup: s, zero_adjoined, ideals, factors }
}

/// Classifies a Rees factor (a semigroup with zero).
pub fn factor_classify(f: &FiniteSemigroup) -> Result<FactorKind> {
    let theta = f.zero().ok_or(Error::NoZeroElement)?;
    let nonzero: Vec<usize> = f.elements().filter(|&x| x != theta).collect();
    let all_null = nonzero.iter().all(|&a| nonzero.iter().all(|&b| f.mul(a, b) == theta));
    if all_null && f.order() == 2 {
        return Ok(FactorKind::Null);
    }
    let closed = !nonzero.is_empty() && nonzero.iter().all(|&a| nonzero.iter().all(|&b| f.mul(a, b) != theta));
    if closed {
        let g = f.restrict(&nonzero)?;
        if g.is_group() {
            return Ok(FactorKind::GroupWithZero(group_desc(&g)?));
        }
    }
    Ok(FactorKind::ReesMatrix(rees_desc(f, theta, &nonzero)))
}

fn rees_desc(f: &FiniteSemigroup, theta: usize, nonzero: &[usize]) -> ReesDesc {
    let right = |x: usize| bits(f, std::iter::once(x).chain(f.elements().map(|a| f.mul(x, a))));
    let left = |x: usize| bits(f, std::iter::once(x).chain(f.elements().map(|a| f.mul(a, x))));
    let count = |key: &dyn Fn(usize) -> Vec<bool>| {
        let mut ks: Vec<Vec<bool>> = nonzero.iter().map(|&x| key(x)).collect();
        ks.sort();
        ks.dedup();
        ks.len()
    };
    let rows = count(&right);
    let cols = count(&left);
    let cells = rows * cols;
    let group_order = if cells > 0 && nonzero.len().is_multiple_of(cells) { nonzero.len() / cells } else { 0 };
    let squares_nonzero = nonzero.iter().any(|&a| nonzero.iter().any(|&b| f.mul(a, b) != theta));
    let zero_simple = squares_nonzero && nonzero.iter().all(|&x| principal_ideal(f, x).iter().all(|&m| m));
    let has_idempotent = nonzero.iter().any(|&e| f.mul(e, e) == e);
    ReesDesc { rows, cols, group_order, completely_zero_simple: zero_simple && has_idempotent }
}
