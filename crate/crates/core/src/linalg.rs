//! Exact linear algebra over the rationals.
//!
//! Forward elimination is fraction-free (Bareiss) over the integers after
//! clearing each row's denominators; reduced forms and kernels are then
//! produced over `BigRational`. Nothing in here ever rounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rational], scale: &Rational, v: &[Rational]) {
    if scale.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += scale * x;
        }
    }
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Row echelon form produced by fraction-free elimination.
#[derive(Debug, Clone)]
pub struct Echelon {
    /// Nonzero integer rows, in echelon order.
    pub rows: Vec<Vec<BigInt>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
    /// Number of row swaps performed.
    pub swaps: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix row");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(), cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Fraction-free forward elimination. Each row is first scaled by the
    /// lcm of its denominators; the returned scale factors multiply the
    /// original rows.
    pub fn echelon(&self) -> (Echelon, Vec<BigInt>) {
        let mut scales = Vec::with_capacity(self.rows);
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                scales.push(l.clone());
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                m.swap(p, r);
                swaps += 1;
            }
            let (head, tail) = m.split_at_mut(r + 1);
            let pivot_row = &head[r];
            for row in tail.iter_mut() {
                for j in c + 1..self.cols {
                    let v = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                    row[j] = v / &prev;
                }
                row[c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        (Echelon { rows: m, pivots, swaps }, scales)
    }

    pub fn rank(&self) -> usize {
        self.echelon().0.pivots.len()
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        if self.rows == 0 {
            return Rational::one();
        }
        let (ech, scales) = self.echelon();
        if ech.pivots.len() < self.rows {
            return Rational::zero();
        }
        // The last Bareiss pivot is the determinant of the scaled matrix.
        let mut det = Rational::from_integer(ech.rows[self.rows - 1][self.cols - 1].clone());
        if ech.swaps % 2 == 1 {
            det = -det;
        }
        let scale = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
        det / Rational::from_integer(scale)
    }

    /// Reduced row echelon form (nonzero rows only) and pivot columns.
    pub fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let (ech, _) = self.echelon();
        let mut rows: Vec<Vec<Rational>> = ech
            .rows
            .iter()
            .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        for (i, &p) in ech.pivots.iter().enumerate() {
            let inv = rows[i][p].recip();
            for x in rows[i].iter_mut() {
                *x *= &inv;
            }
        }
        for (i, &p) in ech.pivots.iter().enumerate().rev() {
            let (above, rest) = rows.split_at_mut(i);
            let pivot_row = &rest[0];
            for row in above.iter_mut() {
                let f = row[p].clone();
                if !f.is_zero() {
                    for (x, y) in row.iter_mut().zip(pivot_row) {
                        if !y.is_zero() {
                            *x -= &f * y;
                        }
                    }
                }
            }
        }
        (rows, ech.pivots)
    }

    /// Basis of the right null space `{x : Mx = 0}`, itself in reduced
    /// row echelon form.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let raw: Vec<Vec<Rational>> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = zero_vec(self.cols);
                v[f] = Rational::one();
                for (row, &p) in rref.iter().zip(&pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect();
        span_basis(&raw, self.cols)
    }

    /// One solution of `Mx = rhs` with all free variables zero, or `None`
    /// when the system is inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let (rref, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.cols);
        for (row, &p) in rref.iter().zip(&pivots) {
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (rref, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_rows(rref.into_iter().map(|r| r[n..].to_vec()).collect(), n))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Reduced echelon basis of the span of `vectors` (all of length `dim`).
pub fn span_basis(vectors: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    Matrix::from_rows(vectors.to_vec(), dim).rref().0
}

/// Coordinates of `v` in terms of `basis` (rows), if `v` lies in the span.
pub fn coordinates(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return is_zero_vec(v).then(Vec::new);
    }
    let dim = v.len();
    // Columns are basis vectors.
    let mut m = Matrix::zeros(dim, basis.len());
    for (j, b) in basis.iter().enumerate() {
        for i in 0..dim {
            m[(i, j)] = b[i].clone();
        }
    }
    m.solve(v)
}

pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    coordinates(basis, v).is_some()
}

/// Human-readable exact rational, `p` or `p/q`.
pub fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn is_integral_unit(x: &Rational) -> bool {
    x.is_integer() && x.numer().abs() <= BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = Matrix::from_i64(&[vec![2, -1, 0], vec![1, 3, 4], vec![0, 5, -2]]);
        // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) + 0 = -52 - 2
        assert_eq!(m.determinant(), rat(-54));
        let upper = Matrix::from_i64(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(upper.determinant(), rat(1));
        let ones = Matrix::from_i64(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(ones.determinant(), rat(0));
    }

    #[test]
    fn determinant_with_fractions_and_swaps() {
        let m = Matrix::from_rows(
            vec![vec![rat(0), frac(1, 2)], vec![frac(1, 3), rat(1)]],
            2,
        );
        assert_eq!(m.determinant(), frac(-1, 6));
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&m.mul_vec(v)));
        }
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_i64(&[vec![1, 1], vec![0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(m.solve(&[rat(3), rat(1)]), Some(vec![rat(2), rat(1)]));
        let singular = Matrix::from_i64(&[vec![1, 1], vec![1, 1]]);
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&[rat(1), rat(2)]).is_none());
    }

    #[test]
    fn span_membership() {
        let basis = span_basis(&[vec![rat(1), rat(1), rat(0)]], 3);
        assert!(in_span(&basis, &[rat(2), rat(2), rat(0)]));
        assert!(!in_span(&basis, &[rat(1), rat(0), rat(0)]));
    }

    #[test]
    fn rational_text_round_trip() {
        for x in [frac(-3, 4), rat(7), rat(0)] {
            assert_eq!(parse_rational(&fmt_rational(&x)), Some(x));
        }
    }
}
