//! Contingency tables with fixed margins: enumeration in the basis order,
//! the canonical table, and swap moves.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::weights::WeightVector;

/// Nonnegative integer matrix, read as the exponent matrix of a monomial.
/// Stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ContingencyTable {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl ContingencyTable {
    pub fn new(rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "entry count {} does not match {rows}x{cols}",
                data.len()
            )));
        }
        Ok(ContingencyTable { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged table rows".into()));
        }
        Ok(ContingencyTable { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ContingencyTable { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub(crate) fn get_mut(&mut self, i: usize, j: usize) -> &mut u32 {
        &mut self.data[i * self.cols + j]
    }

    /// Row-major entries (the canonical flat key used across modules).
    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn degree(&self) -> u64 {
        self.data.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn row_margins(&self) -> WeightVector {
        WeightVector::new((0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).sum()).collect())
    }

    pub fn col_margins(&self) -> WeightVector {
        WeightVector::new((0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j)).sum()).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        ContingencyTable { rows: self.cols, cols: self.rows, data }
    }

    /// Entries flattened down columns, left to right: the reading order the
    /// basis comparison uses.
    pub fn colmajor(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self.get(i, j));
            }
        }
        out
    }

    /// Extend with zero rows/columns to the requested shape.
    pub fn pad(&self, rows: usize, cols: usize) -> Result<Self> {
        if rows < self.rows || cols < self.cols {
            return Err(Error::InvalidArgument(format!(
                "cannot pad {}x{} down to {rows}x{cols}",
                self.rows, self.cols
            )));
        }
        let mut out = ContingencyTable::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.get_mut(i, j) = self.get(i, j);
            }
        }
        Ok(out)
    }

    /// Entrywise sum with another table of the same shape.
    pub fn add_unit(&self, i: usize, j: usize) -> Self {
        let mut out = self.clone();
        *out.get_mut(i, j) += 1;
        out
    }
}

impl fmt::Debug for ContingencyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ContingencyTable({self})")
    }
}

impl fmt::Display for ContingencyTable {
    /// Semicolon-separated rows, comma-separated entries: `0,3,2;1,2,0;2,0,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                (0..self.cols).map(|j| self.get(i, j).to_string()).collect::<Vec<_>>().join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

/// Basis comparison: `Less` means "earlier in the ordered basis", which is
/// the lexicographically *larger* monomial under the variable order that
/// reads the matrix down columns, left to right.
pub fn basis_cmp(a: &ContingencyTable, b: &ContingencyTable) -> Ordering {
    debug_assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    for j in 0..a.cols {
        for i in 0..a.rows {
            match a.get(i, j).cmp(&b.get(i, j)) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
    }
    Ordering::Equal
}

/// Adds `+1` at `(r, c)` and `(r2, c2)`, `-1` at `(r, c2)` and `(r2, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SwapMove {
    pub r: usize,
    pub r2: usize,
    pub c: usize,
    pub c2: usize,
}

impl SwapMove {
    pub fn new(r: usize, r2: usize, c: usize, c2: usize) -> Result<Self> {
        if r == r2 || c == c2 {
            return Err(Error::InvalidArgument("swap move needs distinct rows and columns".into()));
        }
        Ok(SwapMove { r, r2, c, c2 })
    }
}

/// Apply a swap move; margins are preserved, entries must stay nonnegative.
pub fn apply_swap(alpha: &ContingencyTable, s: SwapMove) -> Result<ContingencyTable> {
    let max = alpha.rows.max(alpha.cols);
    if s.r >= alpha.rows || s.r2 >= alpha.rows || s.c >= alpha.cols || s.c2 >= alpha.cols {
        return Err(Error::InvalidArgument(format!("swap indices out of range for {max}")));
    }
    if alpha.get(s.r, s.c2) == 0 || alpha.get(s.r2, s.c) == 0 {
        return Err(Error::InfeasibleSwap(format!(
            "entries at ({},{}) and ({},{}) must be positive",
            s.r, s.c2, s.r2, s.c
        )));
    }
    let mut out = alpha.clone();
    *out.get_mut(s.r, s.c) += 1;
    *out.get_mut(s.r2, s.c2) += 1;
    *out.get_mut(s.r, s.c2) -= 1;
    *out.get_mut(s.r2, s.c) -= 1;
    Ok(out)
}

/// All tables with the given margins, emitted already in basis order
/// (column-by-column greedy fill, largest feasible entry first).
pub fn enumerate_tables(
    sigma: &WeightVector,
    pi: &WeightVector,
    cap: usize,
) -> Result<Vec<ContingencyTable>> {
    if sigma.degree() != pi.degree() {
        return Err(Error::InvalidWeight(format!(
            "margin totals differ: |{sigma}| = {} vs |{pi}| = {}",
            sigma.degree(),
            pi.degree()
        )));
    }
    let m = sigma.len();
    let n = pi.len();
    let mut out: Vec<ContingencyTable> = Vec::new();
    let mut rows_left: Vec<u32> = sigma.parts().to_vec();
    let mut cur = ContingencyTable::zeros(m, n);
    // Remaining column capacity after column j, for pruning.
    let mut tail_capacity: Vec<u64> = vec![0; n + 1];
    for j in (0..n).rev() {
        tail_capacity[j] = tail_capacity[j + 1] + u64::from(pi.parts()[j]);
    }

    fn fill_col(
        j: usize,
        i: usize,
        left: u32,
        cur: &mut ContingencyTable,
        rows_left: &mut Vec<u32>,
        pi: &WeightVector,
        tail_capacity: &[u64],
        out: &mut Vec<ContingencyTable>,
        cap: usize,
    ) -> Result<()> {
        let m = cur.rows();
        let n = cur.cols();
        if j == n {
            debug_assert!(rows_left.iter().all(|&x| x == 0));
            if out.len() == cap {
                return Err(Error::capacity("contingency table enumeration", cap));
            }
            out.push(cur.clone());
            return Ok(());
        }
        if i == m {
            if left != 0 {
                return Ok(());
            }
            // prune: every row remainder must fit in the remaining columns
            if rows_left.iter().any(|&x| u64::from(x) > tail_capacity[j + 1]) {
                return Ok(());
            }
            return fill_col(j + 1, 0, pi.parts().get(j + 1).copied().unwrap_or(0), cur, rows_left, pi, tail_capacity, out, cap);
        }
        let hi = left.min(rows_left[i]);
        for v in (0..=hi).rev() {
            *cur.get_mut(i, j) = v;
            rows_left[i] -= v;
            fill_col(j, i + 1, left - v, cur, rows_left, pi, tail_capacity, out, cap)?;
            rows_left[i] += v;
        }
        *cur.get_mut(i, j) = 0;
        Ok(())
    }

    if n == 0 {
        if sigma.degree() == 0 {
            out.push(cur);
        }
        return Ok(out);
    }
    fill_col(0, 0, pi.parts()[0], &mut cur, &mut rows_left, pi, &tail_capacity, &mut out, cap)?;
    Ok(out)
}

/// The unique table whose insertion image has a one-row shape: the greedy
/// north-west-justified filling, equivalently the basis-order maximum.
pub fn canonical_table(sigma: &WeightVector, pi: &WeightVector) -> Result<ContingencyTable> {
    if sigma.degree() != pi.degree() {
        return Err(Error::InvalidWeight(format!(
            "margin totals differ: |{sigma}| = {} vs |{pi}| = {}",
            sigma.degree(),
            pi.degree()
        )));
    }
    let m = sigma.len();
    let n = pi.len();
    let mut out = ContingencyTable::zeros(m, n);
    let mut rows_left: Vec<u32> = sigma.parts().to_vec();
    for j in 0..n {
        let mut col_left = pi.parts()[j];
        for i in 0..m {
            let v = col_left.min(rows_left[i]);
            *out.get_mut(i, j) = v;
            col_left -= v;
            rows_left[i] -= v;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(parts: &[u32]) -> WeightVector {
        WeightVector::new(parts.to_vec())
    }

    fn table(rows: &[&[u32]]) -> ContingencyTable {
        ContingencyTable::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn order_11_11() {
        let tables = enumerate_tables(&w(&[1, 1]), &w(&[1, 1]), 1000).unwrap();
        assert_eq!(tables, vec![table(&[&[1, 0], &[0, 1]]), table(&[&[0, 1], &[1, 0]])]);
    }

    #[test]
    fn permutation_weights_enumerate_to_factorial() {
        for d in 1..=4usize {
            let ones = w(&vec![1; d]);
            let tables = enumerate_tables(&ones, &ones, 1000).unwrap();
            let fact: usize = (1..=d).product();
            assert_eq!(tables.len(), fact);
            for t in &tables {
                assert!(t.entries().iter().all(|&x| x <= 1));
            }
        }
    }

    #[test]
    fn order_is_strictly_decreasing() {
        let tables = enumerate_tables(&w(&[2, 1]), &w(&[1, 1, 1]), 1000).unwrap();
        for pair in tables.windows(2) {
            assert_eq!(basis_cmp(&pair[0], &pair[1]), std::cmp::Ordering::Less);
        }
        assert_eq!(tables.len(), 3);
    }

    #[test]
    fn canonical_is_first_and_greedy() {
        let sigma = w(&[2, 1]);
        let pi = w(&[1, 1, 1]);
        let tables = enumerate_tables(&sigma, &pi, 1000).unwrap();
        let canon = canonical_table(&sigma, &pi).unwrap();
        assert_eq!(tables[0], canon);
        // bottom-row 1 in the last column for ((d-1, 1), 1^d)
        for d in 2..=5u32 {
            let sigma = w(&[d - 1, 1]);
            let pi = w(&vec![1; d as usize]);
            let canon = canonical_table(&sigma, &pi).unwrap();
            assert_eq!(canon.get(1, d as usize - 1), 1);
            assert_eq!(canon.get(0, d as usize - 1), 0);
        }
        assert_eq!(canonical_table(&w(&[1, 1]), &w(&[1, 1])).unwrap(), table(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn swap_moves() {
        let a = table(&[&[0, 1], &[1, 0]]);
        let s = SwapMove::new(0, 1, 0, 1).unwrap();
        assert_eq!(apply_swap(&a, s).unwrap(), table(&[&[1, 0], &[0, 1]]));
        // infeasible: would go negative
        let b = table(&[&[1, 0], &[0, 1]]);
        assert!(matches!(apply_swap(&b, s), Err(Error::InfeasibleSwap(_))));
        assert!(SwapMove::new(0, 0, 0, 1).is_err());
    }

    #[test]
    fn capacity_error_names_bound() {
        let ones = w(&[1, 1, 1, 1]);
        let err = enumerate_tables(&ones, &ones, 10).unwrap_err();
        match err {
            Error::Capacity { bound, .. } => assert_eq!(bound, 10),
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_margins() {
        // empty margins, zero-degree
        let tables = enumerate_tables(&w(&[]), &w(&[]), 10).unwrap();
        assert_eq!(tables.len(), 1);
        assert_eq!(tables[0].rows(), 0);
        // mismatched totals
        assert!(enumerate_tables(&w(&[1]), &w(&[2]), 10).is_err());
        // zero entries in margins are fine
        let tables = enumerate_tables(&w(&[0, 1]), &w(&[1, 0]), 10).unwrap();
        assert_eq!(tables, vec![table(&[&[0, 0], &[1, 0]])]);
    }
}
