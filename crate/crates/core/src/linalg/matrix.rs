use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{int_poly_gcd, Poly};
use super::Scalar;
use crate::error::{Error, Result};
use crate::{Int, Rat};

/// Dense row-major matrix over an exact scalar ring.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: (0..rows * cols).map(|_| T::zero()).collect() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc += self.get(i, k).clone() * other.get(k, j).clone();
            }
            acc
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc += self.get(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc += self.get(i, i).clone();
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }
                })
            })
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() + rhs.get(i, j).clone())
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() - rhs.get(i, j).clone())
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for Matrix<Int> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            write!(f, "[")?;
            for (k, cell) in row.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(tI - M)` by the Samuelson-Berkowitz
/// recursion: division-free, so it stays in the scalar ring.
pub fn char_poly<T: Scalar>(m: &Matrix<T>) -> Poly<T> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    // Coefficient vector of the leading principal minor's characteristic
    // polynomial, in descending degree order.
    let mut p: Vec<T> = vec![T::one()];
    for k in 0..n {
        // Toeplitz column [1, -a, -(r c), -(r M c), ..., -(r M^{k-1} c)]
        // where M is the k x k principal block, r/c its border row/column.
        let mut tcol: Vec<T> = Vec::with_capacity(k + 2);
        tcol.push(T::one());
        tcol.push(-m.get(k, k).clone());
        if k > 0 {
            let mut v: Vec<T> = (0..k).map(|i| m.get(i, k).clone()).collect();
            for step in 0..k {
                let mut s = T::zero();
                for j in 0..k {
                    s += m.get(k, j).clone() * v[j].clone();
                }
                tcol.push(-s);
                if step + 1 < k {
                    let mut nv = Vec::with_capacity(k);
                    for i in 0..k {
                        let mut acc = T::zero();
                        for j in 0..k {
                            acc += m.get(i, j).clone() * v[j].clone();
                        }
                        nv.push(acc);
                    }
                    v = nv;
                }
            }
        }
        let mut np: Vec<T> = (0..k + 2).map(|_| T::zero()).collect();
        for (i, slot) in np.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                *slot += tcol[i - j].clone() * pj.clone();
            }
        }
        p = np;
    }
    p.reverse();
    Poly::from_coeffs(p)
}

impl Matrix<Int> {
    pub fn to_rational(&self) -> Matrix<Rat> {
        self.map(|x| Rat::from(x.clone()))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut a: Vec<Vec<Int>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut negate = false;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Exact inverse over the rationals; `None` if singular.
    pub fn inverse_rational(&self) -> Option<Matrix<Rat>> {
        self.to_rational().inverse()
    }

    /// Minimal polynomial: the least-degree monic annihilator, computed as
    /// the lcm of the annihilators of the Krylov sequences of the standard
    /// basis vectors. Basis vectors already inside the invariant subspace
    /// spanned so far are skipped; integrality of the result follows from
    /// the characteristic polynomial being monic.
    pub fn min_poly(&self) -> Poly<Int> {
        assert!(self.is_square(), "minimal polynomial of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        let m = self.to_rational();
        // Echelonized basis of the union of all processed Krylov subspaces.
        let mut space: Vec<(usize, Vec<Rat>)> = Vec::new();
        let reduce = |space: &Vec<(usize, Vec<Rat>)>, v: &mut Vec<Rat>| {
            for (piv, w) in space {
                if !v[*piv].is_zero() {
                    let c = &v[*piv] / &w[*piv];
                    for (x, y) in v.iter_mut().zip(w) {
                        *x -= &c * y;
                    }
                }
            }
        };
        let mut min = Poly::<Rat>::one();
        for s in 0..n {
            let mut e: Vec<Rat> = (0..n).map(|_| Rat::zero()).collect();
            e[s] = Rat::one();
            {
                let mut r = e.clone();
                reduce(&space, &mut r);
                if r.iter().all(Rat::is_zero) {
                    continue; // annihilator divides the current lcm already
                }
            }
            let ann = krylov_annihilator(&m, e.clone(), &mut space, &reduce);
            min = min.lcm(&ann);
            if min.degree() == Some(n) {
                break;
            }
        }
        let result = min.to_int_poly().expect("minimal polynomial must be integral");
        // Oracle: substituting the matrix must give zero, checked columnwise.
        for s in 0..n {
            let mut e: Vec<Int> = vec![Int::zero(); n];
            e[s] = Int::one();
            let mut acc = vec![Int::zero(); n];
            for c in result.coeffs().iter().rev() {
                acc = self.apply(&acc);
                for (a, b) in acc.iter_mut().zip(&e) {
                    *a += c * b;
                }
            }
            assert!(acc.iter().all(Zero::is_zero), "minimal polynomial fails to annihilate");
        }
        result
    }
}

/// Minimal annihilator of the Krylov sequence of `e`; extends `space` with
/// the independent Krylov vectors it generates.
fn krylov_annihilator(
    m: &Matrix<Rat>,
    e: Vec<Rat>,
    space: &mut Vec<(usize, Vec<Rat>)>,
    reduce: &impl Fn(&Vec<(usize, Vec<Rat>)>, &mut Vec<Rat>),
) -> Poly<Rat> {
    // Local echelon rows carry the expansion of each reduced Krylov vector
    // in terms of the original sequence e, Me, M^2 e, ...
    let mut local: Vec<(usize, Vec<Rat>, Vec<Rat>)> = Vec::new();
    let mut cur = e;
    let mut k = 0usize;
    loop {
        let mut red = cur.clone();
        let mut combo: Vec<Rat> = (0..k + 1).map(|i| Rat::from(Int::from((i == k) as i64))).collect();
        for (piv, w, wc) in &local {
            if !red[*piv].is_zero() {
                let c = &red[*piv] / &w[*piv];
                for (x, y) in red.iter_mut().zip(w) {
                    *x -= &c * y;
                }
                for (x, y) in combo.iter_mut().zip(wc) {
                    *x -= &c * y;
                }
            }
        }
        match red.iter().position(|x| !x.is_zero()) {
            None => {
                // cur = sum combo[j] * M^j e with combo[k] = 1
                return Poly::from_coeffs(combo);
            }
            Some(p) => {
                local.push((p, red, combo));
                {
                    let mut r = cur.clone();
                    reduce(space, &mut r);
                    if let Some(piv) = r.iter().position(|x| !x.is_zero()) {
                        space.push((piv, r));
                    }
                }
                cur = m.apply(&cur);
                k += 1;
            }
        }
    }
}

impl Matrix<Rat> {
    /// Gauss-Jordan inverse; `None` if singular.
    pub fn inverse(&self) -> Option<Matrix<Rat>> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rat> = (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..n).map(|j| Rat::from(Int::from((i == j) as i64))));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&i| !a[i][col].is_zero())?;
            a.swap(col, pivot);
            let pv = a[col][col].clone();
            for x in &mut a[col] {
                *x /= &pv;
            }
            for i in 0..n {
                if i != col && !a[i][col].is_zero() {
                    let f = a[i][col].clone();
                    let (head, tail) = a.split_at_mut(col.max(i));
                    let (ri, rc) = if i < col {
                        (&mut head[i], &tail[0])
                    } else {
                        (&mut tail[0], &head[col])
                    };
                    for (x, y) in ri.iter_mut().zip(rc) {
                        *x -= &f * y;
                    }
                }
            }
        }
        Some(Matrix::from_fn(n, n, |i, j| a[i][n + j].clone()))
    }
}

/// A matrix is diagonalizable over the complex numbers iff its minimal
/// polynomial is squarefree.
pub fn is_diagonalizable(m: &Matrix<Int>) -> bool {
    let mu = m.min_poly();
    let g = int_poly_gcd(&mu, &mu.derivative());
    g.degree() == Some(0)
}
