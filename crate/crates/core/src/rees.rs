//! Rees matrix semigroups `𝓜(G; m, n; P)`, Munn algebras and the named
//! small semigroups used throughout the classifier.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::algebra::StructureConstantAlgebra;
use crate::error::{Error, Result};
use crate::groups::{abelian_by_name, reference_groups};
use crate::linalg::{add_scaled, zero_vec, Matrix, Rational};
use crate::semigroup::FiniteSemigroup;

/// An `n × m` sandwich matrix over `G^θ`; `None` is `θ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sandwich {
    pub m: usize,
    pub n: usize,
    /// `entries[λ][j]` is `p_{λj}`.
    pub entries: Vec<Vec<Option<usize>>>,
}

impl Sandwich {
    pub fn new(m: usize, n: usize, entries: Vec<Vec<Option<usize>>>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidSandwich("m and n must be positive".into()));
        }
        if entries.len() != n || entries.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidSandwich(format!("expected {n} rows of {m} entries")));
        }
        Ok(Sandwich { m, n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n).map(|l| (0..n).map(|j| (l == j).then_some(0)).collect()).collect();
        Sandwich { m: n, n, entries }
    }

    /// Over the trivial group: `true` entries are `1`, `false` are `θ`.
    pub fn from_pattern(rows: &[&[bool]]) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        Self::new(m, n, rows.iter().map(|r| r.iter().map(|&b| b.then_some(0)).collect()).collect())
    }

    pub fn get(&self, lambda: usize, j: usize) -> Option<usize> {
        self.entries[lambda][j]
    }

    /// The entries as a rational matrix, valid when the group is trivial.
    pub fn rational(&self) -> Matrix {
        let mut p = Matrix::zeros(self.n, self.m);
        for (l, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.is_some() {
                    p[(l, j)] = Rational::one();
                }
            }
        }
        p
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EntryRepr {
    Element(usize),
    Theta(String),
}

#[derive(Serialize, Deserialize)]
struct SandwichRepr {
    m: usize,
    n: usize,
    entries: Vec<Vec<EntryRepr>>,
}

impl Serialize for Sandwich {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| match e {
                        Some(g) => EntryRepr::Element(*g),
                        None => EntryRepr::Theta("theta".into()),
                    })
                    .collect()
            })
            .collect();
        SandwichRepr { m: self.m, n: self.n, entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Sandwich {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SandwichRepr::deserialize(deserializer)?;
        let entries = raw
            .entries
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|e| match e {
                        EntryRepr::Element(g) => Ok(Some(g)),
                        EntryRepr::Theta(s) if s == "theta" => Ok(None),
                        EntryRepr::Theta(s) => Err(de::Error::custom(format!("unknown sandwich entry `{s}`"))),
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Sandwich::new(raw.m, raw.n, entries).map_err(de::Error::custom)
    }
}

/// `𝓜(G; m, n; P)`. Element `(a)_{iλ}` has index `(i·n + λ)·|G| + a`,
/// and `θ` is the last element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesMatrixSemigroup {
    pub group: FiniteSemigroup,
    pub sandwich: Sandwich,
    pub semigroup: FiniteSemigroup,
}

impl ReesMatrixSemigroup {
    pub fn m(&self) -> usize {
        self.sandwich.m
    }

    pub fn n(&self) -> usize {
        self.sandwich.n
    }

    pub fn element(&self, i: usize, lambda: usize, a: usize) -> usize {
        (i * self.n() + lambda) * self.group.order() + a
    }

    pub fn theta(&self) -> usize {
        self.semigroup.order() - 1
    }

    /// `(i, λ, a)` for a nonzero element.
    pub fn coordinates(&self, x: usize) -> Option<(usize, usize, usize)> {
        let g = self.group.order();
        (x != self.theta()).then(|| (x / g / self.n(), x / g % self.n(), x % g))
    }
}

pub fn rees(group: &FiniteSemigroup, m: usize, n: usize, p: &Sandwich) -> Result<ReesMatrixSemigroup> {
    if !group.is_group() {
        return Err(Error::NotAGroup);
    }
    if p.m != m || p.n != n {
        return Err(Error::InvalidSandwich(format!("sandwich is {}x{}, expected {n}x{m}", p.n, p.m)));
    }
    let g = group.order();
    if let Some(bad) = p.entries.iter().flatten().flatten().find(|&&e| e >= g) {
        return Err(Error::InvalidSandwich(format!("entry {bad} is not an element of a group of order {g}")));
    }
    let size = m * n * g;
    let theta = size;
    let table = (0..=size)
        .map(|x| {
            (0..=size)
                .map(|y| {
                    if x == theta || y == theta {
                        return theta;
                    }
                    let (i, l, a) = (x / g / n, x / g % n, x % g);
                    let (j, mu, b) = (y / g / n, y / g % n, y % g);
                    match p.entries[l][j] {
                        Some(c) => (i * n + mu) * g + group.mul(group.mul(a, c), b),
                        None => theta,
                    }
                })
                .collect()
        })
        .collect();
    let names = (0..=size)
        .map(|x| {
            if x == theta {
                "θ".to_string()
            } else if g == 1 {
                format!("e{}{}", x / n + 1, x % n + 1)
            } else {
                format!("({})_{}{}", group.label(x % g), x / g / n + 1, x / g % n + 1)
            }
        })
        .collect();
    let semigroup = FiniteSemigroup::new(table, Some(names))?;
    Ok(ReesMatrixSemigroup { group: group.clone(), sandwich: p.clone(), semigroup })
}

fn trivial_group() -> FiniteSemigroup {
    FiniteSemigroup::new(vec![vec![0]], Some(vec!["1".into()])).expect("trivial group")
}

fn rees_2x2(rows: [[bool; 2]; 2]) -> FiniteSemigroup {
    let p = Sandwich::from_pattern(&[&rows[0], &rows[1]]).expect("2x2 pattern");
    rees(&trivial_group(), 2, 2, &p).expect("trivial-group Rees matrix semigroup").semigroup
}

fn named(rows: Vec<Vec<usize>>, names: &[&str]) -> FiniteSemigroup {
    FiniteSemigroup::new(rows, Some(names.iter().map(|s| s.to_string()).collect())).expect("fixture table")
}

pub fn fixture_m() -> FiniteSemigroup {
    rees_2x2([[true, false], [false, true]])
}

pub fn fixture_msigma() -> FiniteSemigroup {
    rees_2x2([[false, true], [true, false]])
}

/// `P = U − e21`.
pub fn fixture_m1() -> FiniteSemigroup {
    rees_2x2([[true, true], [false, true]])
}

/// `P = U − e12`.
pub fn fixture_m2() -> FiniteSemigroup {
    rees_2x2([[true, false], [true, true]])
}

pub fn fixture_t2() -> FiniteSemigroup {
    named(
        vec![vec![0, 3, 2, 3], vec![3, 1, 3, 3], vec![3, 2, 3, 3], vec![3, 3, 3, 3]],
        &["e1", "e2", "j0", "θ"],
    )
}

pub fn fixture_t2hat() -> FiniteSemigroup {
    named(
        vec![vec![0, 2, 2, 3], vec![3, 1, 3, 3], vec![3, 2, 3, 3], vec![3, 3, 3, 3]],
        &["e1", "e2", "j0", "θ"],
    )
}

pub fn fixture_t2prime() -> FiniteSemigroup {
    named(
        vec![
            vec![0, 2, 2, 3, 4],
            vec![2, 1, 2, 4, 4],
            vec![2, 2, 2, 4, 4],
            vec![4, 3, 4, 4, 4],
            vec![4, 4, 4, 4, 4],
        ],
        &["e1", "e2", "e3", "j0", "θ"],
    )
}

/// The seven named semigroups.
pub fn fixtures() -> BTreeMap<&'static str, FiniteSemigroup> {
    BTreeMap::from([
        ("M", fixture_m()),
        ("Msigma", fixture_msigma()),
        ("M1", fixture_m1()),
        ("M2", fixture_m2()),
        ("T2", fixture_t2()),
        ("T2hat", fixture_t2hat()),
        ("T2prime", fixture_t2prime()),
    ])
}

/// Resolves a fixture name: one of [`fixtures`], a reference group
/// (`S3`, `D4`, `Q8`, `Q12`, `C4sdC4`), or an abelian group like `C5`,
/// `C2xC4`, `C2^3`.
pub fn fixture(name: &str) -> Result<FiniteSemigroup> {
    if let Some(s) = fixtures().remove(name) {
        return Ok(s);
    }
    if let Some((_, g)) = reference_groups().into_iter().find(|(n, _)| *n == name) {
        return Ok(g);
    }
    abelian_by_name(name).ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

pub fn fixture_names() -> Vec<String> {
    let mut names: Vec<String> = fixtures().keys().map(|s| s.to_string()).collect();
    names.extend(reference_groups().into_iter().map(|(n, _)| n.to_string()));
    names
}

/// `𝔪(R; m, n; P)` over a base algebra `R`. Basis element `b_k E_{iλ}`
/// has index `(i·n + λ)·dim R + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MunnAlgebra {
    pub base: StructureConstantAlgebra,
    pub m: usize,
    pub n: usize,
    /// `sandwich[λ][j]`, coordinates in the base.
    pub sandwich: Vec<Vec<Vec<Rational>>>,
    pub algebra: StructureConstantAlgebra,
}

pub fn munn(base: &StructureConstantAlgebra, m: usize, n: usize, p: Vec<Vec<Vec<Rational>>>) -> Result<MunnAlgebra> {
    let r = base.dim();
    if m == 0 || n == 0 {
        return Err(Error::InvalidSandwich("m and n must be positive".into()));
    }
    if p.len() != n || p.iter().any(|row| row.len() != m || row.iter().any(|e| e.len() != r)) {
        return Err(Error::InvalidSandwich(format!("expected {n}x{m} entries of length {r}")));
    }
    let dim = m * n * r;
    let mut products = Vec::with_capacity(dim * dim);
    for x in 0..dim {
        let (i, l, a) = (x / r / n, x / r % n, x % r);
        for y in 0..dim {
            let (j, mu, b) = (y / r / n, y / r % n, y % r);
            let coeff = base.mul(&base.mul(&base.basis_vec(a), &p[l][j]), &base.basis_vec(b));
            let offset = (i * n + mu) * r;
            products.push(
                coeff.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (offset + k, c)).collect(),
            );
        }
    }
    let labels = (0..dim)
        .map(|x| {
            let (i, l, a) = (x / r / n + 1, x / r % n + 1, &base.labels()[x % r]);
            if r == 1 {
                format!("E{i}{l}")
            } else {
                format!("{a}E{i}{l}")
            }
        })
        .collect();
    let algebra = StructureConstantAlgebra::new(labels, products)?;
    Ok(MunnAlgebra { base: base.clone(), m, n, sandwich: p, algebra })
}

/// The rationals as a one-dimensional algebra.
pub fn rationals() -> StructureConstantAlgebra {
    StructureConstantAlgebra::new(vec!["1".into()], vec![vec![(0, Rational::one())]]).expect("ℚ is associative")
}

/// `𝔪(ℚ; m, n; P)` for a rational `n × m` sandwich.
pub fn munn_rational(p: &Matrix) -> Result<MunnAlgebra> {
    let entries = p.to_rows().into_iter().map(|row| row.into_iter().map(|c| vec![c]).collect()).collect();
    munn(&rationals(), p.cols(), p.rows(), entries)
}

/// The Munn algebra matching the contracted algebra of a Rees matrix
/// semigroup, over the group algebra of its structural group.
pub fn munn_of_rees(r: &ReesMatrixSemigroup) -> Result<MunnAlgebra> {
    let base = crate::algebra::group_algebra(&r.group)?;
    let g = r.group.order();
    let entries = r
        .sandwich
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| match e {
                    Some(c) => base.basis_vec(*c),
                    None => zero_vec(g),
                })
                .collect()
        })
        .collect();
    munn(&base, r.m(), r.n(), entries)
}

impl MunnAlgebra {
    fn rational_sandwich(&self) -> Result<Matrix> {
        if self.base.dim() != 1 || self.base.basis_product(0, 0) != [(0, Rational::one())] {
            return Err(Error::UnsupportedBase);
        }
        Ok(Matrix::from_rows(
            self.sandwich.iter().map(|row| row.iter().map(|e| e[0].clone()).collect()).collect(),
            self.m,
        ))
    }
}

/// Whether `m = n` and `P` is invertible; only rational bases are
/// supported.
pub fn sandwich_invertible(a: &MunnAlgebra) -> Result<bool> {
    let p = a.rational_sandwich()?;
    Ok(a.m == a.n && !p.determinant().is_zero())
}

/// The certified isomorphism `X ↦ X∘P` onto `M_m(ℚ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixIso {
    pub size: usize,
    /// Image of each basis element `E_{iλ}`.
    pub images: Vec<Matrix>,
    /// Preimage of each matrix unit `E_{ij}` (index `i·m + j`).
    pub preimages: Vec<Vec<Rational>>,
    /// Preimage of the identity matrix.
    pub unity: Vec<Rational>,
}

impl MatrixIso {
    pub fn apply(&self, x: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.size, self.size);
        for (c, img) in x.iter().zip(&self.images) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.size {
                for j in 0..self.size {
                    out[(i, j)] += c * &img[(i, j)];
                }
            }
        }
        out
    }
}

pub fn munn_to_matrix_iso(a: &MunnAlgebra) -> Result<MatrixIso> {
    if !sandwich_invertible(a)? {
        return Err(Error::NotInvertible);
    }
    let p = a.rational_sandwich()?;
    let size = a.m;
    let dim = a.algebra.dim();
    // E_{iλ} P has row i equal to row λ of P.
    let images: Vec<Matrix> = (0..dim)
        .map(|x| {
            let (i, l) = (x / size, x % size);
            let mut img = Matrix::zeros(size, size);
            for j in 0..size {
                img[(i, j)] = p[(l, j)].clone();
            }
            img
        })
        .collect();
    let iso = MatrixIso { size, images, preimages: Vec::new(), unity: Vec::new() };
    for x in 0..dim {
        for y in 0..dim {
            let prod = a.algebra.mul(&a.algebra.basis_vec(x), &a.algebra.basis_vec(y));
            if iso.apply(&prod) != iso.images[x].mul(&iso.images[y]) {
                return Err(Error::InternalInconsistency(format!("X ↦ XP is not multiplicative on ({x}, {y})")));
            }
        }
    }
    // Preimage of E_{ij} is E_{ij} P^{-1}: Σ_λ (P^{-1})_{jλ} E_{iλ}.
    let pinv = p.inverse().ok_or(Error::NotInvertible)?;
    let preimages: Vec<Vec<Rational>> = (0..size * size)
        .map(|u| {
            let (i, j) = (u / size, u % size);
            let mut v = zero_vec(dim);
            for l in 0..size {
                v[i * size + l] = pinv[(j, l)].clone();
            }
            v
        })
        .collect();
    let mut unity = zero_vec(dim);
    for i in 0..size {
        add_scaled(&mut unity, &Rational::one(), &preimages[i * size + i]);
    }
    for (u, pre) in preimages.iter().enumerate() {
        let mut unit = Matrix::zeros(size, size);
        unit[(u / size, u % size)] = Rational::one();
        if iso.apply(pre) != unit {
            return Err(Error::InternalInconsistency("matrix unit preimage does not map back".into()));
        }
    }
    Ok(MatrixIso { preimages, unity, ..iso })
}
