//! Products of minors of the generic matrix encoded by tableau pairs, and
//! their exact expansion into integer polynomials keyed by exponent
//! matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::contingency::ContingencyTable;
use crate::error::{Error, Result};
use crate::tableaux::{Label, TableauPair};
use crate::Int;

/// One minor of the generic matrix: strictly increasing row and column
/// index lists of equal length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Minor {
    rows: Vec<Label>,
    cols: Vec<Label>,
}

impl Minor {
    pub fn new(rows: Vec<Label>, cols: Vec<Label>) -> Result<Self> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::InvalidArgument(
                "minor needs equally many rows and columns, at least one".into(),
            ));
        }
        if rows.windows(2).any(|w| w[0] >= w[1]) || cols.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("minor indices must strictly increase".into()));
        }
        if rows[0] == 0 || cols[0] == 0 {
            return Err(Error::InvalidArgument("minor indices are 1-based".into()));
        }
        Ok(Minor { rows, cols })
    }

    pub fn rows(&self) -> &[Label] {
        &self.rows
    }

    pub fn cols(&self) -> &[Label] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

/// Ordered product of minors encoded by a tableau pair: the c-th minor
/// takes its row indices from column c of P and its column indices from
/// column c of Q.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bitableau {
    minors: Vec<Minor>,
    source: TableauPair,
}

impl Bitableau {
    pub fn minors(&self) -> &[Minor] {
        &self.minors
    }

    pub fn source_pair(&self) -> &TableauPair {
        &self.source
    }
}

/// Build the minor sequence of a tableau pair. Column strictness of
/// semistandard tableaux makes every index list valid.
pub fn bitableau_of(pair: &TableauPair) -> Bitableau {
    let ncols = pair.shape().parts().first().copied().unwrap_or(0);
    let minors = (0..ncols)
        .map(|c| {
            Minor::new(pair.p().column(c), pair.q().column(c))
                .expect("tableau columns strictly increase")
        })
        .collect();
    Bitableau { minors, source: pair.clone() }
}

/// Sparse integer polynomial in the matrix variables, keyed by exponent
/// matrix. Keys are the row-major entry vectors of tables of one fixed
/// shape; map order is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialPoly {
    rows: usize,
    cols: usize,
    terms: BTreeMap<Vec<u32>, Int>,
}

impl MonomialPoly {
    pub fn constant(rows: usize, cols: usize, value: Int) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(vec![0; rows * cols], value);
        }
        MonomialPoly { rows, cols, terms }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as (exponent table, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (ContingencyTable, &Int)> {
        self.terms.iter().map(|(k, v)| {
            (
                ContingencyTable::new(self.rows, self.cols, k.clone())
                    .expect("stored keys have the right length"),
                v,
            )
        })
    }

    pub fn coefficient(&self, table: &ContingencyTable) -> Int {
        self.terms.get(table.entries()).cloned().unwrap_or_else(Int::zero)
    }

    pub fn coefficient_sum(&self) -> Int {
        self.terms.values().sum()
    }

    /// Product, merging exponent keys by entrywise addition.
    pub fn mul(&self, other: &MonomialPoly, cap: usize) -> Result<MonomialPoly> {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut terms: BTreeMap<Vec<u32>, Int> = BTreeMap::new();
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let key: Vec<u32> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                let entry = terms.entry(key).or_insert_with(Int::zero);
                *entry += va * vb;
            }
            if terms.len() > cap {
                return Err(Error::capacity("monomial expansion", cap));
            }
        }
        terms.retain(|_, v| !v.is_zero());
        Ok(MonomialPoly { rows: self.rows, cols: self.cols, terms })
    }
}

impl fmt::Debug for MonomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialPoly({} terms on {}x{})", self.terms.len(), self.rows, self.cols)
    }
}

/// Expand one minor determinant as a monomial polynomial by the Leibniz
/// sum over permutations of its column indices.
fn expand_minor(minor: &Minor, rows: usize, cols: usize) -> MonomialPoly {
    let k = minor.size();
    let mut terms: BTreeMap<Vec<u32>, Int> = BTreeMap::new();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut sign = 1i64;
    // Heap's algorithm; each swap of two elements flips the sign.
    let mut c = vec![0usize; k];
    let emit = |perm: &[usize], sign: i64, terms: &mut BTreeMap<Vec<u32>, Int>| {
        let mut key = vec![0u32; rows * cols];
        for (a, &pa) in perm.iter().enumerate() {
            let i = minor.rows[a] as usize - 1;
            let j = minor.cols[pa] as usize - 1;
            key[i * cols + j] += 1;
        }
        let entry = terms.entry(key).or_insert_with(Int::zero);
        *entry += Int::from(sign);
    };
    emit(&perm, sign, &mut terms);
    let mut i = 1;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            emit(&perm, sign, &mut terms);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    terms.retain(|_, v| !v.is_zero());
    MonomialPoly { rows, cols, terms }
}

/// Exact signed expansion of the product of minor determinants, on the
/// `rows x cols` variable matrix.
pub fn expand_in(b: &Bitableau, rows: usize, cols: usize, cap: usize) -> Result<MonomialPoly> {
    let need_rows = b.source.p().max_label() as usize;
    let need_cols = b.source.q().max_label() as usize;
    if rows < need_rows || cols < need_cols {
        return Err(Error::InvalidArgument(format!(
            "expansion needs at least a {need_rows}x{need_cols} variable matrix"
        )));
    }
    let mut acc = MonomialPoly::constant(rows, cols, Int::from(1));
    for minor in &b.minors {
        let factor = expand_minor(minor, rows, cols);
        acc = acc.mul(&factor, cap)?;
    }
    Ok(acc)
}

/// Expansion on the smallest variable matrix covering the labels.
pub fn expand(b: &Bitableau, cap: usize) -> Result<MonomialPoly> {
    let rows = b.source.p().max_label() as usize;
    let cols = b.source.q().max_label() as usize;
    expand_in(b, rows, cols, cap)
}

/// Value of the product of minors with every variable set to 1: the
/// determinant of an all-ones block vanishes except in size one, so this
/// is 1 exactly for one-row shapes.
pub fn evaluate_all_ones(b: &Bitableau) -> Int {
    let mut acc = Int::from(1);
    for minor in &b.minors {
        let k = minor.size();
        let ones = crate::IntMatrix::from_fn(k, k, |_, _| Int::from(1));
        acc *= ones.det();
    }
    acc
}
