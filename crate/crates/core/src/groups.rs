//! Recognition of the small finite groups that decide hyperbolicity.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{isomorphic, FiniteSemigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupName {
    Cyclic(usize),
    S3,
    D4,
    Q8,
    Q12,
    /// The nonabelian `C4 ⋊ C4`, the generator acting by inversion.
    C4sdC4,
    /// `C2^rank`, rank ≥ 2 (smaller ones are cyclic).
    ElemAbelian2(u32),
    Hamiltonian2,
    Other,
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic(n) => write!(f, "C{n}"),
            GroupName::S3 => f.write_str("S3"),
            GroupName::D4 => f.write_str("D4"),
            GroupName::Q8 => f.write_str("Q8"),
            GroupName::Q12 => f.write_str("Q12"),
            GroupName::C4sdC4 => f.write_str("C4:C4"),
            GroupName::ElemAbelian2(k) => write!(f, "C2^{k}"),
            GroupName::Hamiltonian2 => f.write_str("Hamiltonian2"),
            GroupName::Other => f.write_str("Other"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDesc {
    pub order: usize,
    pub abelian: bool,
    pub exponent: usize,
    pub element_order_histogram: BTreeMap<usize, usize>,
    pub recognized: GroupName,
}

impl GroupDesc {
    pub fn name(&self) -> String {
        match self.recognized {
            GroupName::Other if self.abelian => format!("abelian order {} exponent {}", self.order, self.exponent),
            GroupName::Other => format!("order {}", self.order),
            n => n.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Type2Cyclic {
    C5,
    C8,
    C12,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExceptionalGroup {
    S3,
    D4,
    Q12,
    C4sdC4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuadraticClass {
    ElemAbelian2,
    AbelianExp4,
    AbelianExp6,
    C3,
    C4,
    Q8,
    C8,
    Other,
}

fn require_group(g: &FiniteSemigroup) -> Result<usize> {
    if g.is_group() {
        Ok(g.identity().expect("groups have an identity"))
    } else {
        Err(Error::NotAGroup)
    }
}

fn element_orders(g: &FiniteSemigroup) -> Vec<usize> {
    g.elements().map(|x| g.index_period(x).1).collect()
}

pub fn group_desc(g: &FiniteSemigroup) -> Result<GroupDesc> {
    require_group(g)?;
    let orders = element_orders(g);
    let exponent = orders.iter().fold(1, |acc, &o| acc.lcm(&o));
    let mut element_order_histogram = BTreeMap::new();
    for &o in &orders {
        *element_order_histogram.entry(o).or_insert(0) += 1;
    }
    let abelian = g.is_commutative();
    let order = g.order();
    let recognized = if orders.contains(&order) {
        GroupName::Cyclic(order)
    } else if let Some(e) = match_exceptional(g) {
        match e {
            ExceptionalGroup::S3 => GroupName::S3,
            ExceptionalGroup::D4 => GroupName::D4,
            ExceptionalGroup::Q12 => GroupName::Q12,
            ExceptionalGroup::C4sdC4 => GroupName::C4sdC4,
        }
    } else if order == 8 && isomorphic(g, &quaternion8()).is_some() {
        GroupName::Q8
    } else if abelian && exponent == 2 {
        GroupName::ElemAbelian2(order.trailing_zeros())
    } else if hamiltonian(g, abelian) {
        GroupName::Hamiltonian2
    } else {
        GroupName::Other
    };
    Ok(GroupDesc { order, abelian, exponent, element_order_histogram, recognized })
}

fn hamiltonian(g: &FiniteSemigroup, abelian: bool) -> bool {
    if abelian || !g.order().is_power_of_two() {
        return false;
    }
    let e = g.identity().expect("group");
    let inverse: Vec<usize> =
        g.elements().map(|x| g.elements().find(|&y| g.mul(x, y) == e).expect("group")).collect();
    // Every cyclic subgroup normal implies every subgroup normal.
    g.elements().all(|x| {
        let (_, period) = g.index_period(x);
        let cyc: Vec<usize> = (1..=period).map(|k| g.power(x, k)).collect();
        g.elements().all(|h| cyc.contains(&g.mul(g.mul(h, x), inverse[h])))
    })
}

pub fn is_hamiltonian_2group(g: &FiniteSemigroup) -> Result<bool> {
    require_group(g)?;
    Ok(hamiltonian(g, g.is_commutative()))
}

/// Abelian of exponent dividing 4 or 6, or a Hamiltonian 2-group.
pub fn is_higman(g: &FiniteSemigroup) -> Result<bool> {
    let d = group_desc(g)?;
    Ok(higman_desc(&d) || is_hamiltonian_2group(g)?)
}

pub(crate) fn higman_desc(d: &GroupDesc) -> bool {
    (d.abelian && (4 % d.exponent == 0 || 6 % d.exponent == 0))
        || matches!(d.recognized, GroupName::Q8 | GroupName::Hamiltonian2)
}

pub fn type2_cyclic(g: &FiniteSemigroup) -> Option<Type2Cyclic> {
    group_desc(g).ok().and_then(|d| type2_desc(&d))
}

pub(crate) fn type2_desc(d: &GroupDesc) -> Option<Type2Cyclic> {
    match d.recognized {
        GroupName::Cyclic(5) => Some(Type2Cyclic::C5),
        GroupName::Cyclic(8) => Some(Type2Cyclic::C8),
        GroupName::Cyclic(12) => Some(Type2Cyclic::C12),
        _ => None,
    }
}

fn match_exceptional(g: &FiniteSemigroup) -> Option<ExceptionalGroup> {
    let reference = match g.order() {
        6 => (ExceptionalGroup::S3, symmetric3()),
        8 => (ExceptionalGroup::D4, dihedral4()),
        12 => (ExceptionalGroup::Q12, dicyclic12()),
        16 => (ExceptionalGroup::C4sdC4, c4_semidirect_c4()),
        _ => return None,
    };
    isomorphic(g, &reference.1).map(|_| reference.0)
}

pub fn exceptional_group(g: &FiniteSemigroup) -> Option<ExceptionalGroup> {
    if !g.is_group() {
        return None;
    }
    match_exceptional(g)
}

pub(crate) fn exceptional_desc(d: &GroupDesc) -> Option<ExceptionalGroup> {
    match d.recognized {
        GroupName::S3 => Some(ExceptionalGroup::S3),
        GroupName::D4 => Some(ExceptionalGroup::D4),
        GroupName::Q12 => Some(ExceptionalGroup::Q12),
        GroupName::C4sdC4 => Some(ExceptionalGroup::C4sdC4),
        _ => None,
    }
}

pub fn quadratic_class(g: &FiniteSemigroup) -> Result<QuadraticClass> {
    Ok(quadratic_desc(&group_desc(g)?))
}

pub(crate) fn quadratic_desc(d: &GroupDesc) -> QuadraticClass {
    match d.recognized {
        GroupName::Cyclic(3) => QuadraticClass::C3,
        GroupName::Cyclic(4) => QuadraticClass::C4,
        GroupName::Cyclic(8) => QuadraticClass::C8,
        GroupName::Q8 => QuadraticClass::Q8,
        _ if d.abelian && 2 % d.exponent == 0 => QuadraticClass::ElemAbelian2,
        _ if d.abelian && 4 % d.exponent == 0 => QuadraticClass::AbelianExp4,
        _ if d.abelian && 6 % d.exponent == 0 => QuadraticClass::AbelianExp6,
        _ => QuadraticClass::Other,
    }
}

// Reference constructions.

pub fn cyclic(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    FiniteSemigroup::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(), None)
        .expect("cyclic groups are associative")
}

/// `G × H` with `(g, h)` at index `g * |H| + h`.
pub fn direct_product(g: &FiniteSemigroup, h: &FiniteSemigroup) -> FiniteSemigroup {
    let (m, n) = (g.order(), h.order());
    let table = (0..m * n)
        .map(|x| (0..m * n).map(|y| g.mul(x / n, y / n) * n + h.mul(x % n, y % n)).collect())
        .collect();
    FiniteSemigroup::new(table, None).expect("direct products are associative")
}

/// `C_a ⋊ C_b` where the generator of `C_b` acts by `x ↦ r·x`; requires
/// `r^b ≡ 1 (mod a)`. Element `(x, y)` sits at index `y * a + x`.
pub fn semidirect_cyclic(a: usize, b: usize, r: usize) -> FiniteSemigroup {
    let act = |y: usize, x: usize| (0..y).fold(x, |acc, _| acc * r % a);
    let n = a * b;
    let table = (0..n)
        .map(|p| {
            let (x1, y1) = (p % a, p / a);
            (0..n)
                .map(|q| {
                    let (x2, y2) = (q % a, q / a);
                    ((y1 + y2) % b) * a + (x1 + act(y1, x2)) % a
                })
                .collect()
        })
        .collect();
    let names = (0..n).map(|p| format!("a{}b{}", p % a, p / a)).collect();
    FiniteSemigroup::new(table, Some(names)).expect("r^b = 1 mod a gives an associative product")
}

pub fn symmetric3() -> FiniteSemigroup {
    semidirect_cyclic(3, 2, 2)
}

pub fn dihedral4() -> FiniteSemigroup {
    semidirect_cyclic(4, 2, 3)
}

/// `Q12 = C3 ⋊ C4`, `C4` acting by inversion.
pub fn dicyclic12() -> FiniteSemigroup {
    semidirect_cyclic(3, 4, 2)
}

pub fn c4_semidirect_c4() -> FiniteSemigroup {
    semidirect_cyclic(4, 4, 3)
}

/// Quaternion group; index `2u + s` for unit `u ∈ {1,i,j,k}` and sign bit `s`.
pub fn quaternion8() -> FiniteSemigroup {
    // (sign, unit) of u*v for units 1,i,j,k.
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let table = (0..8)
        .map(|p| {
            (0..8)
                .map(|q| {
                    let (s, u) = UNITS[p / 2][q / 2];
                    2 * u + (s + p % 2 + q % 2) % 2
                })
                .collect()
        })
        .collect();
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    FiniteSemigroup::new(table, Some(names)).expect("quaternion product is associative")
}

/// The named reference groups, in a fixed order.
pub fn reference_groups() -> Vec<(&'static str, FiniteSemigroup)> {
    vec![
        ("S3", symmetric3()),
        ("D4", dihedral4()),
        ("Q8", quaternion8()),
        ("Q12", dicyclic12()),
        ("C4sdC4", c4_semidirect_c4()),
    ]
}

/// Parses `C<n>` and products such as `C2xC4` or `C2^3`.
pub fn abelian_by_name(name: &str) -> Option<FiniteSemigroup> {
    let mut acc: Option<FiniteSemigroup> = None;
    for part in name.split('x') {
        let part = part.strip_prefix('C')?;
        let (base, power) = match part.split_once('^') {
            Some((b, p)) => (b.parse::<usize>().ok()?, p.parse::<usize>().ok()?),
            None => (part.parse::<usize>().ok()?, 1),
        };
        if base == 0 || base > 64 || power == 0 {
            return None;
        }
        for _ in 0..power {
            let c = cyclic(base);
            acc = Some(match acc {
                Some(a) => direct_product(&a, &c),
                None => c,
            });
            if acc.as_ref().is_some_and(|a| a.order() > 256) {
                return None;
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        let c4 = group_desc(&cyclic(4)).unwrap();
        assert_eq!((c4.order, c4.abelian, c4.exponent), (4, true, 4));
        let q8 = group_desc(&quaternion8()).unwrap();
        assert_eq!((q8.order, q8.abelian, q8.exponent), (8, false, 4));
        // Q8: the identity, -1, and six elements ±i, ±j, ±k of order 4.
        assert_eq!(q8.element_order_histogram, BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        assert_eq!(q8.recognized, GroupName::Q8);
        let s3 = group_desc(&symmetric3()).unwrap();
        assert_eq!((s3.order, s3.abelian, s3.exponent, s3.recognized), (6, false, 6, GroupName::S3));
    }

    #[test]
    fn not_a_group() {
        let band = FiniteSemigroup::new(vec![vec![0, 0], vec![0, 1]], None).unwrap();
        assert_eq!(group_desc(&band), Err(Error::NotAGroup));
        assert_eq!(is_higman(&band), Err(Error::NotAGroup));
    }

    #[test]
    fn higman() {
        assert!(is_higman(&abelian_by_name("C2xC4").unwrap()).unwrap());
        assert!(is_higman(&quaternion8()).unwrap());
        assert!(!is_higman(&cyclic(8)).unwrap());
        assert!(is_higman(&cyclic(6)).unwrap());
        assert!(!is_higman(&cyclic(5)).unwrap());
    }

    #[test]
    fn hamiltonian_by_brute_force() {
        assert!(is_hamiltonian_2group(&quaternion8()).unwrap());
        // In D4 (index y*4 + x), the reflection b = (0,1) generates {1, b};
        // conjugating by the rotation a gives a^2 b, outside that subgroup.
        let d4 = dihedral4();
        let (a, b) = (1, 4);
        let a_inv = 3;
        let conj = d4.mul(d4.mul(a, b), a_inv);
        assert!(conj != b && conj != 0);
        assert!(!is_hamiltonian_2group(&d4).unwrap());
        assert!(!is_hamiltonian_2group(&cyclic(8)).unwrap());
        // Q8 × C2 is Hamiltonian but not Q8 itself.
        let q8c2 = direct_product(&quaternion8(), &cyclic(2));
        assert_eq!(group_desc(&q8c2).unwrap().recognized, GroupName::Hamiltonian2);
        assert!(is_higman(&q8c2).unwrap());
    }

    #[test]
    fn type2() {
        assert_eq!(type2_cyclic(&cyclic(5)), Some(Type2Cyclic::C5));
        assert_eq!(type2_cyclic(&cyclic(10)), None);
        assert_eq!(type2_cyclic(&abelian_by_name("C2xC4").unwrap()), None);
        assert_eq!(type2_cyclic(&cyclic(12)), Some(Type2Cyclic::C12));
    }

    #[test]
    fn exceptional() {
        assert_eq!(exceptional_group(&dihedral4()), Some(ExceptionalGroup::D4));
        assert_eq!(exceptional_group(&quaternion8()), None);
        assert_eq!(exceptional_group(&dicyclic12()), Some(ExceptionalGroup::Q12));
        assert_eq!(exceptional_group(&c4_semidirect_c4()), Some(ExceptionalGroup::C4sdC4));
        // Other groups of order 12 and 16 are rejected.
        assert_eq!(exceptional_group(&semidirect_cyclic(6, 2, 5)), None);
        assert_eq!(exceptional_group(&abelian_by_name("C4xC4").unwrap()), None);
    }

    #[test]
    fn quadratic_classes() {
        let q = |n: &str| quadratic_class(&abelian_by_name(n).unwrap()).unwrap();
        assert_eq!(q("C2xC2"), QuadraticClass::ElemAbelian2);
        assert_eq!(q("C8"), QuadraticClass::C8);
        assert_eq!(q("C6"), QuadraticClass::AbelianExp6);
        assert_eq!(q("C3xC3"), QuadraticClass::AbelianExp6);
        assert_eq!(q("C2xC4"), QuadraticClass::AbelianExp4);
        assert_eq!(q("C1"), QuadraticClass::ElemAbelian2);
        assert_eq!(q("C5"), QuadraticClass::Other);
        assert_eq!(quadratic_class(&quaternion8()).unwrap(), QuadraticClass::Q8);
    }

    #[test]
    fn exponent_divides_order() {
        for (_, g) in reference_groups() {
            let d = group_desc(&g).unwrap();
            assert_eq!(d.order % d.exponent, 0);
            assert_eq!(d.element_order_histogram.values().sum::<usize>(), d.order);
        }
    }

    #[test]
    fn class_disjointness() {
        let mut all: Vec<FiniteSemigroup> = reference_groups().into_iter().map(|(_, g)| g).collect();
        all.extend([5, 8, 12, 1, 2, 3, 4, 6].map(cyclic));
        for g in &all {
            let h = is_higman(g).unwrap();
            assert!(!(h && type2_cyclic(g).is_some()));
            assert!(!(h && exceptional_group(g).is_some()));
        }
    }

    #[test]
    fn names() {
        assert_eq!(abelian_by_name("C2^3").unwrap().order(), 8);
        assert!(abelian_by_name("D4").is_none());
        assert!(abelian_by_name("C0").is_none());
    }
}
