//! Exact structure-constant algebras over the rationals: contracted
//! semigroup algebras, unity, the Jacobson radical via the trace form,
//! center, and the action of the algebra on a one-dimensional radical.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, coordinates, fmt_rational, in_span, is_zero_vec, parse_rational, span_basis, sub_vec, unit_vec,
    zero_vec, Matrix, Rational,
};
use crate::semigroup::FiniteSemigroup;

/// `b_i b_j = Σ_k c_ijk b_k`, stored sparsely per ordered basis pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstantAlgebra {
    dim: usize,
    labels: Vec<String>,
    products: Vec<Vec<(usize, Rational)>>,
    unity: Option<Vec<Rational>>,
}

impl StructureConstantAlgebra {
    /// Builds an algebra from sparse products `(i, j) -> [(k, c_ijk)]`,
    /// verifying associativity on all basis triples. Dimension 0 is the
    /// zero algebra, whose unity is `0`.
    pub fn new(labels: Vec<String>, products: Vec<Vec<(usize, Rational)>>) -> Result<Self> {
        let dim = labels.len();
        if products.len() != dim * dim {
            return Err(Error::Dimension(format!("expected {} products, got {}", dim * dim, products.len())));
        }
        if products.iter().flatten().any(|(k, _)| *k >= dim) {
            return Err(Error::Dimension("structure constant index out of range".into()));
        }
        let products = products
            .into_iter()
            .map(|p| {
                let mut dense = zero_vec(dim);
                for (k, c) in p {
                    dense[k] += c;
                }
                dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        let mut a = StructureConstantAlgebra { dim, labels, products, unity: None };
        if let Some((i, j, k)) = a.associativity_witness() {
            return Err(Error::AlgebraNotAssociative(i, j, k));
        }
        a.unity = a.solve_unity();
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unity(&self) -> Option<&[Rational]> {
        self.unity.as_deref()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim + j]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Rational> {
        unit_vec(self.dim, i)
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let s = xi * yj;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let bij = self.mul(&self.basis_vec(i), &self.basis_vec(j));
                for k in 0..self.dim {
                    let bk = self.basis_vec(k);
                    let left = self.mul(&bij, &bk);
                    let right = self.mul(&self.basis_vec(i), &self.mul(&self.basis_vec(j), &bk));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Matrix of left multiplication by `x` in the standard basis
    /// (column `j` holds the coordinates of `x b_j`).
    pub fn left_matrix(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(x, &self.basis_vec(j));
            for (i, c) in col.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        m
    }

    /// Solves `u b_i = b_i = b_i u` for all `i`.
    fn solve_unity(&self) -> Option<Vec<Rational>> {
        let d = self.dim;
        // Unknown u = Σ u_k b_k. Row (side, i, l): Σ_k u_k coeff_l(b_k b_i) = δ_il, and the mirror.
        let mut m = Matrix::zeros(2 * d * d, d);
        let mut rhs = zero_vec(2 * d * d);
        for i in 0..d {
            for k in 0..d {
                for (l, c) in self.basis_product(k, i) {
                    m[(i * d + l, k)] += c;
                }
                for (l, c) in self.basis_product(i, k) {
                    m[(d * d + i * d + l, k)] += c;
                }
            }
            rhs[i * d + i] = Rational::one();
            rhs[d * d + i * d + i] = Rational::one();
        }
        m.solve(&rhs)
    }

    /// The same algebra with a unity adjoined as the last basis element.
    pub fn adjoin_unity(&self) -> StructureConstantAlgebra {
        let d = self.dim + 1;
        let one = self.dim;
        let mut products = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                products.push(if i == one {
                    vec![(j, Rational::one())]
                } else if j == one {
                    vec![(i, Rational::one())]
                } else {
                    self.basis_product(i, j).to_vec()
                });
            }
        }
        let mut labels = self.labels.clone();
        labels.push("1".into());
        StructureConstantAlgebra::new(labels, products).expect("unitization is associative")
    }

    /// Same structure constants, ignoring labels.
    pub fn same_structure(&self, other: &StructureConstantAlgebra) -> bool {
        self.dim == other.dim && self.products == other.products
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Products `x y` for all pairs drawn from two spanning sets, as a
    /// reduced echelon basis.
    pub fn product_space(&self, xs: &[Vec<Rational>], ys: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let prods: Vec<Vec<Rational>> = xs.iter().flat_map(|x| ys.iter().map(move |y| self.mul(x, y))).collect();
        span_basis(&prods, self.dim)
    }
}

/// `K_0 S`: basis `S \ {θ}`, with `θ` identified with 0.
pub fn contracted_algebra(s: &FiniteSemigroup) -> Result<StructureConstantAlgebra> {
    let theta = s.zero().ok_or(Error::NoZeroElement)?;
    let basis: Vec<usize> = s.elements().filter(|&x| x != theta).collect();
    let mut pos = vec![usize::MAX; s.order()];
    for (i, &x) in basis.iter().enumerate() {
        pos[x] = i;
    }
    let mut products = Vec::with_capacity(basis.len() * basis.len());
    for &a in &basis {
        for &b in &basis {
            let p = s.mul(a, b);
            products.push(if p == theta { vec![] } else { vec![(pos[p], Rational::one())] });
        }
    }
    let labels = basis.iter().map(|&x| s.label(x)).collect();
    StructureConstantAlgebra::new(labels, products)
}

/// Maps an element of a semigroup with zero to its basis index in the
/// contracted algebra.
pub fn contracted_index(s: &FiniteSemigroup, x: usize) -> Option<usize> {
    let theta = s.zero()?;
    (x != theta).then(|| if x > theta { x - 1 } else { x })
}

/// The group algebra `ℚG`.
pub fn group_algebra(g: &FiniteSemigroup) -> Result<StructureConstantAlgebra> {
    if !g.is_group() {
        return Err(Error::NotAGroup);
    }
    let n = g.order();
    let products = (0..n * n).map(|p| vec![(g.mul(p / n, p % n), Rational::one())]).collect();
    StructureConstantAlgebra::new(g.elements().map(|x| g.label(x)).collect(), products)
}

pub fn has_unity(a: &StructureConstantAlgebra) -> Option<Vec<Rational>> {
    a.unity.clone()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalInfo {
    pub dim: usize,
    /// Reduced echelon basis of `J(A)`.
    pub basis: Vec<Vec<Rational>>,
    /// Smallest `k ≥ 1` with `J^k = 0`.
    pub nilpotency_index: usize,
    pub central: bool,
}

impl RadicalInfo {
    pub fn j_squared_zero(&self) -> bool {
        self.nilpotency_index <= 2
    }

    /// `b J ⊆ J` and `J b ⊆ J` for every basis element `b`.
    pub fn is_two_sided_ideal(&self, a: &StructureConstantAlgebra) -> bool {
        (0..a.dim()).all(|i| {
            let b = a.basis_vec(i);
            self.basis.iter().all(|v| in_span(&self.basis, &a.mul(&b, v)) && in_span(&self.basis, &a.mul(v, &b)))
        })
    }
}

/// Gram matrix of the trace form `T_ij = tr(L_{b_i b_j})`.
pub fn trace_form(a: &StructureConstantAlgebra) -> Matrix {
    let d = a.dim();
    // tr(L_{b_k}) = Σ_l coeff_l(b_k b_l).
    let traces: Vec<Rational> = (0..d)
        .map(|k| {
            (0..d)
                .flat_map(|l| a.basis_product(k, l).iter().filter(move |(m, _)| *m == l).map(|(_, c)| c.clone()))
                .fold(Rational::zero(), |acc, c| acc + c)
        })
        .collect();
    let mut t = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            t[(i, j)] = a.basis_product(i, j).iter().fold(Rational::zero(), |acc, (k, c)| acc + c * &traces[*k]);
        }
    }
    t
}

/// Jacobson radical as the kernel of the trace form (characteristic 0).
/// Non-unital algebras are unitized first and the result intersected
/// back with the original span.
pub fn radical(a: &StructureConstantAlgebra) -> RadicalInfo {
    let basis = if a.unity().is_some() {
        trace_form(a).kernel()
    } else {
        let unitized = a.adjoin_unity();
        let kernel = trace_form(&unitized).kernel();
        // Intersect with {x : x_1 = 0}.
        let mut constraint = Matrix::zeros(1, kernel.len());
        for (j, v) in kernel.iter().enumerate() {
            constraint[(0, j)] = v[a.dim()].clone();
        }
        let combos = constraint.kernel();
        let vectors: Vec<Vec<Rational>> = combos
            .iter()
            .map(|c| {
                let mut v = zero_vec(unitized.dim());
                for (coef, k) in c.iter().zip(&kernel) {
                    add_scaled(&mut v, coef, k);
                }
                v.truncate(a.dim());
                v
            })
            .collect();
        span_basis(&vectors, a.dim())
    };
    let mut power = basis.clone();
    let mut nilpotency_index = 1;
    while !power.is_empty() {
        power = a.product_space(&power, &basis);
        nilpotency_index += 1;
    }
    let central = basis.iter().all(|v| {
        (0..a.dim()).all(|i| {
            let b = a.basis_vec(i);
            a.mul(v, &b) == a.mul(&b, v)
        })
    });
    RadicalInfo { dim: basis.len(), basis, nilpotency_index, central }
}

/// Basis of the center `{x : x b_i = b_i x for all i}`.
pub fn center(a: &StructureConstantAlgebra) -> Vec<Vec<Rational>> {
    let d = a.dim();
    let mut m = Matrix::zeros(d * d, d);
    for i in 0..d {
        for k in 0..d {
            for (l, c) in a.basis_product(k, i) {
                m[(i * d + l, k)] += c;
            }
            for (l, c) in a.basis_product(i, k) {
                m[(i * d + l, k)] -= c;
            }
        }
    }
    m.kernel()
}

/// `x j0 = lambda j0` and `j0 x = rho j0` for a basis element `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionScalars {
    pub element: usize,
    pub lambda: Rational,
    pub rho: Rational,
}

fn scalar_multiple(v: &[Rational], j0: &[Rational]) -> Result<Rational> {
    coordinates(&[j0.to_vec()], v)
        .map(|c| c[0].clone())
        .ok_or_else(|| Error::InternalInconsistency("product leaves the radical line".into()))
}

pub fn action_scalars_of(a: &StructureConstantAlgebra, j0: &[Rational], x: &[Rational]) -> Result<(Rational, Rational)> {
    Ok((scalar_multiple(&a.mul(x, j0), j0)?, scalar_multiple(&a.mul(j0, x), j0)?))
}

pub fn action_scalars(a: &StructureConstantAlgebra, rad: &RadicalInfo, element: usize) -> Result<ActionScalars> {
    if rad.dim != 1 {
        return Err(Error::RadicalNotALine(rad.dim));
    }
    let (lambda, rho) = action_scalars_of(a, &rad.basis[0], &a.basis_vec(element))?;
    Ok(ActionScalars { element, lambda, rho })
}

/// Witness that `span{u, v, j0}` is an ideal isomorphic to the upper
/// triangular algebra `T2(ℚ)` via `u ↦ E11, v ↦ E22, j0 ↦ E12`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T2Block {
    pub passed: bool,
    pub u: Vec<Rational>,
    pub v: Vec<Rational>,
    pub j0: Vec<Rational>,
    pub is_ideal: bool,
    pub diagnostic: Option<String>,
}

impl T2Block {
    fn fail(j0: &[Rational], msg: impl Into<String>) -> Self {
        let z = zero_vec(j0.len());
        T2Block { passed: false, u: z.clone(), v: z, j0: j0.to_vec(), is_ideal: false, diagnostic: Some(msg.into()) }
    }
}

/// Looks for the `T2(ℚ)` ideal carried by a non-central one-dimensional
/// radical. Let `λ, ρ` be the characters `x j0 = λ(x) j0`, `j0 x = ρ(x) j0`
/// and `K = ker λ ∩ ker ρ`. The complement `B = K²` is an ideal with a
/// unity `1_B`; `T = A(1 - 1_B)` is then the candidate block, `u` is any
/// element of `T` with `λ(u) = 1, ρ(u) = 0`, and `v = (1 - 1_B) - u`.
/// Every claimed relation is verified exactly afterwards.
pub fn t2_block_check(a: &StructureConstantAlgebra, rad: &RadicalInfo) -> Result<T2Block> {
    if rad.dim != 1 {
        return Err(Error::RadicalNotALine(rad.dim));
    }
    let d = a.dim();
    let j0 = rad.basis[0].clone();
    if rad.central {
        return Ok(T2Block::fail(&j0, "radical is central"));
    }
    let Some(one) = a.unity().map(<[Rational]>::to_vec) else {
        return Ok(T2Block::fail(&j0, "algebra has no unity"));
    };
    let scalars: Vec<(Rational, Rational)> =
        (0..d).map(|i| action_scalars_of(a, &j0, &a.basis_vec(i))).collect::<Result<_>>()?;
    let mut chars = Matrix::zeros(2, d);
    for (i, (l, r)) in scalars.iter().enumerate() {
        chars[(0, i)] = l.clone();
        chars[(1, i)] = r.clone();
    }
    let kernel = chars.kernel();
    let b_space = a.product_space(&kernel, &kernel);
    let unit_b = if b_space.is_empty() {
        zero_vec(d)
    } else {
        match subspace_unity(a, &b_space) {
            Some(e) => e,
            None => return Ok(T2Block::fail(&j0, "complement of the block has no unity")),
        }
    };
    let w = sub_vec(&one, &unit_b);
    let t_space = span_basis(&(0..d).map(|i| a.mul(&a.basis_vec(i), &w)).collect::<Vec<_>>(), d);
    if t_space.len() != 3 {
        return Ok(T2Block::fail(&j0, format!("candidate block has dimension {}, expected 3", t_space.len())));
    }
    // Solve for u = Σ c_m t_m with λ(u) = 1, ρ(u) = 0.
    let mut sys = Matrix::zeros(2, t_space.len());
    for (m, t) in t_space.iter().enumerate() {
        let (l, r) = action_scalars_of(a, &j0, t)?;
        sys[(0, m)] = l;
        sys[(1, m)] = r;
    }
    let Some(c) = sys.solve(&[Rational::one(), Rational::zero()]) else {
        return Ok(T2Block::fail(&j0, "no block element acts as the identity on j0 from the left only"));
    };
    let mut u = zero_vec(d);
    for (coef, t) in c.iter().zip(&t_space) {
        add_scaled(&mut u, coef, t);
    }
    let v = sub_vec(&w, &u);

    let zero = zero_vec(d);
    let relations = [
        (a.mul(&u, &u), u.clone(), "u² = u"),
        (a.mul(&v, &v), v.clone(), "v² = v"),
        (a.mul(&u, &v), zero.clone(), "uv = 0"),
        (a.mul(&v, &u), zero.clone(), "vu = 0"),
        (a.mul(&u, &j0), j0.clone(), "u j0 = j0"),
        (a.mul(&j0, &v), j0.clone(), "j0 v = j0"),
        (a.mul(&j0, &u), zero.clone(), "j0 u = 0"),
        (a.mul(&v, &j0), zero.clone(), "v j0 = 0"),
        (a.mul(&j0, &j0), zero.clone(), "j0² = 0"),
    ];
    if let Some((_, _, name)) = relations.iter().find(|(lhs, rhs, _)| lhs != rhs) {
        return Ok(T2Block { passed: false, u, v, j0, is_ideal: false, diagnostic: Some(format!("{name} fails")) });
    }
    let span = span_basis(&[u.clone(), v.clone(), j0.clone()], d);
    let is_ideal = (0..d).all(|i| {
        let b = a.basis_vec(i);
        [&u, &v, &j0].iter().all(|x| in_span(&span, &a.mul(&b, x)) && in_span(&span, &a.mul(x, &b)))
    });
    let diagnostic = (!is_ideal).then(|| "span{u, v, j0} is not an ideal".to_string());
    Ok(T2Block { passed: is_ideal, u, v, j0, is_ideal, diagnostic })
}

/// Unity of the subalgebra spanned by `space` (assumed closed), if any.
fn subspace_unity(a: &StructureConstantAlgebra, space: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let d = a.dim();
    let r = space.len();
    // e = Σ c_m s_m with e s_i = s_i = s_i e.
    let mut m = Matrix::zeros(2 * r * d, r);
    let mut rhs = zero_vec(2 * r * d);
    for (i, si) in space.iter().enumerate() {
        for (k, sk) in space.iter().enumerate() {
            let left = a.mul(sk, si);
            let right = a.mul(si, sk);
            for l in 0..d {
                m[(i * d + l, k)] = left[l].clone();
                m[(r * d + i * d + l, k)] = right[l].clone();
            }
        }
        for l in 0..d {
            rhs[i * d + l] = si[l].clone();
            rhs[r * d + i * d + l] = si[l].clone();
        }
    }
    let c = m.solve(&rhs)?;
    let mut e = zero_vec(d);
    for (coef, s) in c.iter().zip(space) {
        add_scaled(&mut e, coef, s);
    }
    Some(e)
}

// Serialized forms.

/// `{dim, labels, structure: [[i, j, k, num, den], ...], unity?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDump {
    pub dim: usize,
    pub labels: Vec<String>,
    pub structure: Vec<(usize, usize, usize, i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unity: Option<Vec<String>>,
}

fn to_i64_pair(c: &Rational) -> Result<(i64, i64)> {
    let n = i64::try_from(c.numer()).map_err(|_| Error::Dimension("structure constant too large".into()))?;
    let d = i64::try_from(c.denom()).map_err(|_| Error::Dimension("structure constant too large".into()))?;
    Ok((n, d))
}

impl StructureConstantAlgebra {
    pub fn dump(&self) -> Result<AlgebraDump> {
        let mut structure = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    let (num, den) = to_i64_pair(c)?;
                    structure.push((i, j, *k, num, den));
                }
            }
        }
        Ok(AlgebraDump {
            dim: self.dim,
            labels: self.labels.clone(),
            structure,
            unity: self.unity.as_ref().map(|u| u.iter().map(fmt_rational).collect()),
        })
    }

    pub fn from_dump(dump: &AlgebraDump) -> Result<Self> {
        if dump.labels.len() != dump.dim {
            return Err(Error::Dimension("label count differs from dim".into()));
        }
        let mut products = vec![Vec::new(); dump.dim * dump.dim];
        for &(i, j, k, num, den) in &dump.structure {
            if i >= dump.dim || j >= dump.dim || den == 0 {
                return Err(Error::Dimension(format!("bad structure triple ({i}, {j}, {k}, {num}, {den})")));
            }
            products[i * dump.dim + j].push((k, Rational::new(num.into(), den.into())));
        }
        Self::new(dump.labels.clone(), products)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalReport {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
    pub nilpotency_index: usize,
    pub central: bool,
    pub j_squared_zero: bool,
}

impl From<&RadicalInfo> for RadicalReport {
    fn from(r: &RadicalInfo) -> Self {
        RadicalReport {
            dim: r.dim,
            basis: r.basis.iter().map(|v| v.iter().map(fmt_rational).collect()).collect(),
            nilpotency_index: r.nilpotency_index,
            central: r.central,
            j_squared_zero: r.j_squared_zero(),
        }
    }
}

impl RadicalReport {
    pub fn basis_vectors(&self) -> Option<Vec<Vec<Rational>>> {
        self.basis.iter().map(|v| v.iter().map(|s| parse_rational(s)).collect()).collect()
    }
}

/// True when `v` is a nonzero multiple of a single basis vector.
pub fn single_support(v: &[Rational]) -> Option<usize> {
    let mut it = v.iter().enumerate().filter(|(_, c)| !c.is_zero());
    let (i, _) = it.next()?;
    it.next().is_none().then_some(i)
}

pub fn is_zero(v: &[Rational]) -> bool {
    is_zero_vec(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};

    fn t2() -> FiniteSemigroup {
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
    fn contracted_t2() {
        let a = contracted_algebra(&t2()).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.labels(), ["e1", "e2", "j0"]);
        assert_eq!(a.basis_product(0, 2), &[(2, rat(1))]);
        assert_eq!(a.basis_product(2, 1), &[(2, rat(1))]);
        assert!(a.basis_product(2, 2).is_empty());
        assert_eq!(a.unity(), Some(&[rat(1), rat(1), rat(0)][..]));
    }

    #[test]
    fn unity_cases() {
        let null = FiniteSemigroup::new(vec![vec![1, 1], vec![1, 1]], None).unwrap();
        assert_eq!(has_unity(&contracted_algebra(&null).unwrap()), None);
        let qc3 = group_algebra(&cyclic(3)).unwrap();
        assert_eq!(has_unity(&qc3), Some(vec![rat(1), rat(0), rat(0)]));
        assert_eq!(contracted_algebra(&cyclic(3)), Err(Error::NoZeroElement));
    }

    #[test]
    fn radical_of_t2() {
        let a = contracted_algebra(&t2()).unwrap();
        // Oracle: tr L_e1 = 2 (e1 fixes e1 and j0), tr L_e2 = 1, tr L_j0 = 0,
        // so T = [[2,0,0],[0,1,0],[0,0,0]] and the kernel is ℚ j0.
        let t = trace_form(&a);
        assert_eq!(t, Matrix::from_i64(&[vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]));
        let r = radical(&a);
        assert_eq!(r.dim, 1);
        assert_eq!(r.basis, vec![vec![rat(0), rat(0), rat(1)]]);
        assert_eq!(r.nilpotency_index, 2);
        assert!(!r.central);
        assert!(r.is_two_sided_ideal(&a));
    }

    #[test]
    fn zero_algebra() {
        let trivial = FiniteSemigroup::new(vec![vec![0]], None).unwrap();
        let a = contracted_algebra(&trivial).unwrap();
        assert_eq!(a.dim(), 0);
        assert_eq!(a.unity(), Some(&[][..]));
        assert_eq!(radical(&a).dim, 0);
    }

    #[test]
    fn group_algebras_are_semisimple() {
        let r = radical(&group_algebra(&cyclic(2)).unwrap());
        assert_eq!(r.dim, 0);
        assert_eq!(r.nilpotency_index, 1);
    }

    #[test]
    fn null_radical_is_everything() {
        let null = FiniteSemigroup::new(vec![vec![1, 1], vec![1, 1]], None).unwrap();
        let a = contracted_algebra(&null).unwrap();
        let r = radical(&a);
        assert_eq!(r.dim, 1);
        assert!(r.central);
    }

    #[test]
    fn action_scalars_on_t2() {
        let a = contracted_algebra(&t2()).unwrap();
        let r = radical(&a);
        let e1 = action_scalars(&a, &r, 0).unwrap();
        assert_eq!((e1.lambda, e1.rho), (rat(1), rat(0)));
        let e2 = action_scalars(&a, &r, 1).unwrap();
        assert_eq!((e2.lambda, e2.rho), (rat(0), rat(1)));
        let semisimple = group_algebra(&cyclic(2)).unwrap();
        let rs = radical(&semisimple);
        assert_eq!(action_scalars(&semisimple, &rs, 0), Err(Error::RadicalNotALine(0)));
    }

    #[test]
    fn t2_block_on_t2() {
        let a = contracted_algebra(&t2()).unwrap();
        let r = radical(&a);
        let b = t2_block_check(&a, &r).unwrap();
        assert!(b.passed, "{:?}", b.diagnostic);
        assert_eq!(b.u, vec![rat(1), rat(0), rat(0)]);
        assert_eq!(b.v, vec![rat(0), rat(1), rat(0)]);
    }

    #[test]
    fn center_of_commutative_and_t2() {
        let qc3 = group_algebra(&cyclic(3)).unwrap();
        assert_eq!(center(&qc3).len(), 3);
        // Oracle: x = a e1 + b e2 + c j0 commutes with j0 iff a j0 = b j0,
        // and with e1 iff c j0 = 0 (e1 j0 = j0, j0 e1 = 0). So the center
        // is ℚ(e1 + e2).
        let a = contracted_algebra(&t2()).unwrap();
        assert_eq!(center(&a), vec![vec![rat(1), rat(1), rat(0)]]);
    }

    #[test]
    fn non_associative_constants_rejected() {
        // b0 b0 = b1, everything else zero except b1 b0 = b0: (b0 b0) b0 = b0 but b0 (b0 b0) = 0.
        let products = vec![vec![(1, rat(1))], vec![], vec![(0, rat(1))], vec![]];
        assert!(matches!(
            StructureConstantAlgebra::new(vec!["a".into(), "b".into()], products),
            Err(Error::AlgebraNotAssociative(..))
        ));
    }

    #[test]
    fn dump_round_trip() {
        let a = contracted_algebra(&t2()).unwrap();
        let dump = a.dump().unwrap();
        let text = serde_json::to_string(&dump).unwrap();
        let back: AlgebraDump = serde_json::from_str(&text).unwrap();
        assert_eq!(StructureConstantAlgebra::from_dump(&back).unwrap(), a);
        let report = RadicalReport::from(&radical(&a));
        assert_eq!(report.basis_vectors().unwrap(), radical(&a).basis);
        let _ = frac(1, 2);
    }
}
