//! Construction of the insertion operator on a weight space: the matrix
//! over the ordered table basis, its exact inverse, closed-form entry
//! formulas for special weight families, and block assembly.

use std::collections::HashMap;

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::bitableau::{bitableau_of, expand_in};
use crate::contingency::{canonical_table, enumerate_tables, ContingencyTable};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::tableaux::rsk;
use crate::weights::{block_multiplicities, BlockMultiplicity, WeightPair, WeightVector};
use crate::{Int, IntMatrix};

/// The insertion operator restricted to one weight space, as a square
/// integer matrix over the ordered contingency-table basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RskMatrix {
    pair: WeightPair,
    basis: Vec<ContingencyTable>,
    matrix: IntMatrix,
}

impl RskMatrix {
    pub fn pair(&self) -> &WeightPair {
        &self.pair
    }

    pub fn basis(&self) -> &[ContingencyTable] {
        &self.basis
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_index(&self, table: &ContingencyTable) -> Option<usize> {
        self.basis.iter().position(|t| t == table)
    }
}

/// Column `alpha` of the matrix holds the expansion coefficients of the
/// minor product attached to the insertion image of `alpha`.
pub fn build_matrix(pair: &WeightPair, cap: usize) -> Result<RskMatrix> {
    let basis = enumerate_tables(pair.sigma(), pair.pi(), cap)?;
    let index: HashMap<&[u32], usize> =
        basis.iter().enumerate().map(|(k, t)| (t.entries(), k)).collect();
    let n = basis.len();
    let m_rows = pair.sigma().len();
    let m_cols = pair.pi().len();
    let mut matrix = Matrix::zero(n, n);
    for (col, alpha) in basis.iter().enumerate() {
        let image = rsk(alpha);
        let poly = expand_in(&bitableau_of(&image), m_rows, m_cols, cap)?;
        for (term, coeff) in poly.terms() {
            let row = *index.get(term.entries()).ok_or_else(|| {
                Error::Internal(format!("expansion term {term} escapes the weight space"))
            })?;
            *matrix.get_mut(row, col) = coeff.clone();
        }
    }
    Ok(RskMatrix { pair: pair.clone(), basis, matrix })
}

/// Exact inverse on the same basis. Integrality of the inverse is a
/// structural fact; a violation means the construction is broken.
pub fn build_inverse(pair: &WeightPair, cap: usize) -> Result<RskMatrix> {
    let forward = build_matrix(pair, cap)?;
    let inv = invert_exact(&forward.matrix)?;
    Ok(RskMatrix { pair: forward.pair, basis: forward.basis, matrix: inv })
}

pub(crate) fn invert_exact(matrix: &IntMatrix) -> Result<IntMatrix> {
    let rational = matrix
        .inverse_rational()
        .ok_or_else(|| Error::Internal("operator matrix is singular".into()))?;
    let n = matrix.rows();
    let mut out = Matrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = rational.get(i, j);
            if !v.is_integer() {
                return Err(Error::Internal(format!(
                    "inverse entry ({i}, {j}) = {v} is not an integer"
                )));
            }
            *out.get_mut(i, j) = v.to_integer();
        }
    }
    Ok(out)
}

/// Determinant of the submatrix of `beta` on the row indices of column `c`
/// of P and the column indices of column `c` of Q, multiplied over all
/// columns. For weights where every variable meets at most one minor this
/// is the matrix entry at `(beta, alpha)`.
fn product_of_minor_determinants(beta: &ContingencyTable, alpha: &ContingencyTable) -> Int {
    let image = rsk(alpha);
    let ncols = image.shape().parts().first().copied().unwrap_or(0);
    let mut acc = Int::one();
    for c in 0..ncols {
        let rows = image.p().column(c);
        let cols = image.q().column(c);
        let k = rows.len();
        let sub = Matrix::from_fn(k, k, |a, b| {
            Int::from(beta.get(rows[a] as usize - 1, cols[b] as usize - 1))
        });
        acc *= sub.det();
        if acc.is_zero() {
            return acc;
        }
    }
    acc
}

/// Entry formula on permutation weights (both margins all ones): a signed
/// product of determinants of partial permutation matrices.
pub fn permutation_entry(beta: &ContingencyTable, alpha: &ContingencyTable) -> Result<Int> {
    for (name, t) in [("beta", beta), ("alpha", alpha)] {
        let all_ones = t.rows() == t.cols()
            && t.row_margins().parts().iter().all(|&x| x == 1)
            && t.col_margins().parts().iter().all(|&x| x == 1);
        if !all_ones {
            return Err(Error::InvalidArgument(format!(
                "{name} is not a permutation table"
            )));
        }
    }
    if beta.rows() != alpha.rows() {
        return Err(Error::InvalidArgument("tables lie in different weight spaces".into()));
    }
    Ok(product_of_minor_determinants(beta, alpha))
}

/// Entry formula on voting weights: two row weights, all column margins 1.
pub fn voting_entry(beta: &ContingencyTable, alpha: &ContingencyTable) -> Result<Int> {
    for (name, t) in [("beta", beta), ("alpha", alpha)] {
        let ok = t.rows() == 2 && t.col_margins().parts().iter().all(|&x| x == 1);
        if !ok {
            return Err(Error::InvalidArgument(format!(
                "{name} does not have voting margins (two rows, unit columns)"
            )));
        }
    }
    if beta.row_margins() != alpha.row_margins() || beta.cols() != alpha.cols() {
        return Err(Error::InvalidArgument("tables lie in different weight spaces".into()));
    }
    Ok(product_of_minor_determinants(beta, alpha))
}

/// Closed form of the operator on `((d-1, 1), 1^d)`: identity-plus-shift
/// in the first row, a final row of -1's.
pub fn matrix_a_d(d: u32) -> Result<RskMatrix> {
    if d < 2 {
        return Err(Error::InvalidArgument("the shift family needs degree at least 2".into()));
    }
    let sigma = WeightVector::new(vec![d - 1, 1]);
    let pi = WeightVector::new(vec![1; d as usize]);
    let pair = WeightPair::new(sigma, pi)?;
    let basis = enumerate_tables(pair.sigma(), pair.pi(), crate::DEFAULT_TABLE_CAP)?;
    let n = d as usize;
    let mut matrix = Matrix::zero(n, n);
    *matrix.get_mut(0, 0) = Int::one();
    *matrix.get_mut(0, 1) = Int::one();
    for r in 1..n - 1 {
        *matrix.get_mut(r, r + 1) = Int::one();
    }
    for c in 1..n {
        *matrix.get_mut(n - 1, c) = -Int::one();
    }
    Ok(RskMatrix { pair, basis, matrix })
}

/// Compositions bounded entrywise by `pi` with total `pi_1`, in the basis
/// order (reverse lexicographic).
pub fn bounded_compositions(pi: &WeightVector) -> Vec<Vec<u32>> {
    let n = pi.len();
    let target = pi.parts().first().copied().unwrap_or(0);
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(j: usize, left: u32, pi: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if j == pi.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = left.min(pi[j]);
        for v in (0..=hi).rev() {
            cur[j] = v;
            rec(j + 1, left - v, pi, cur, out);
        }
        cur[j] = 0;
    }
    rec(0, target, pi.parts(), &mut cur, &mut out);
    out
}

/// Upper-triangular closed form on triangular weight pairs, indexed by
/// bounded compositions: entry `(rho, tau)` is
/// `(-1)^(pi_1 - rho_1) * prod_j C(tau_j, rho_j)`.
pub struct TriangularMatrix {
    pub pi: WeightVector,
    pub compositions: Vec<Vec<u32>>,
    pub matrix: IntMatrix,
}

/// The triangular pair determined by `pi`: sigma = (pi_1, |pi| - pi_1).
pub fn triangular_pair(pi: &WeightVector) -> Result<WeightPair> {
    if pi.is_empty() || !pi.is_positive() {
        return Err(Error::InvalidArgument("column weights must be positive".into()));
    }
    let first = pi.parts()[0];
    let rest = pi.degree() - u64::from(first);
    let rest = u32::try_from(rest)
        .map_err(|_| Error::InvalidArgument("weights out of range".into()))?;
    if rest == 0 {
        return Err(Error::InvalidArgument(
            "triangular weights need a second positive row weight".into(),
        ));
    }
    let pair = WeightPair::new(WeightVector::new(vec![first, rest]), pi.clone())?;
    if !pair.is_triangular() {
        return Err(Error::InvalidArgument(format!("{pair} is not reduced, hence not triangular")));
    }
    Ok(pair)
}

pub fn matrix_m_pi(pi: &WeightVector) -> Result<TriangularMatrix> {
    triangular_pair(pi)?;
    let comps = bounded_compositions(pi);
    let n = comps.len();
    let pi1 = pi.parts()[0];
    let matrix = Matrix::from_fn(n, n, |a, b| {
        let rho = &comps[a];
        let tau = &comps[b];
        let mut v = Int::one();
        for j in 1..pi.len() {
            v *= binomial(Int::from(tau[j]), Int::from(rho[j]));
        }
        if (pi1 - rho[0]) % 2 == 1 {
            v = -v;
        }
        v
    });
    Ok(TriangularMatrix { pi: pi.clone(), compositions: comps, matrix })
}

/// Eigenvalue multiplicities of the triangular closed form: counts of
/// bounded compositions with `pi_1 - rho_1` even (eigenvalue 1) and odd
/// (eigenvalue -1).
pub fn triangular_eigen_multiplicities(pi: &WeightVector) -> Result<(usize, usize)> {
    triangular_pair(pi)?;
    let pi1 = pi.parts()[0];
    let mut plus = 0;
    let mut minus = 0;
    for rho in bounded_compositions(pi) {
        if (pi1 - rho[0]) % 2 == 0 {
            plus += 1;
        } else {
            minus += 1;
        }
    }
    Ok((plus, minus))
}

/// One block of the assembled degree component.
#[derive(Clone, Debug)]
pub struct Block {
    pub pair: WeightPair,
    pub multiplicity: Int,
    pub matrix: Option<RskMatrix>,
}

/// Block structure of the whole degree-`d` operator on `m x n` variables:
/// a trivial 1x1 identity with multiplicity `n0` plus reduced-pair blocks.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub m: usize,
    pub n: usize,
    pub d: u64,
    pub n0: Int,
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    /// Total dimension: `n0 + sum multiplicity * dim`.
    pub fn total_dimension(&self, cap: usize) -> Result<Int> {
        let mut total = self.n0.clone();
        for b in &self.blocks {
            let dim = match &b.matrix {
                Some(m) => m.dim(),
                None => enumerate_tables(b.pair.sigma(), b.pair.pi(), cap)?.len(),
            };
            total += &b.multiplicity * Int::from(dim);
        }
        Ok(total)
    }
}

/// Assemble the block decomposition; with `materialize`, each distinct
/// reduced block matrix is built once.
pub fn assemble_blocks(m: usize, n: usize, d: u64, materialize: bool, cap: usize) -> Result<BlockDecomposition> {
    let (n0, mults) = block_multiplicities(m, n, d);
    let mut blocks = Vec::with_capacity(mults.len());
    for BlockMultiplicity { pair, multiplicity } in mults {
        let matrix = if materialize { Some(build_matrix(&pair, cap)?) } else { None };
        blocks.push(Block { pair, multiplicity, matrix });
    }
    Ok(BlockDecomposition { m, n, d, n0, blocks })
}

/// Witness report for the variable-multiplication commutation test at one
/// position `(k, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationReport {
    pub pair: WeightPair,
    pub k: usize,
    pub l: usize,
    /// Brute-force verdict: multiplication by the variable commutes with
    /// insertion and hits the whole target space.
    pub commutes: bool,
    /// The margin inequality `sigma_k + pi_l >= d`.
    pub predicate: bool,
}

/// Brute-force test that multiplying by the variable at `(k, l)` commutes
/// with insertion, compared against the margin inequality.
pub fn check_rsk_commuting_multiplication(
    pair: &WeightPair,
    k: usize,
    l: usize,
    cap: usize,
) -> Result<CommutationReport> {
    if k >= pair.sigma().len() || l >= pair.pi().len() {
        return Err(Error::InvalidArgument("variable position out of range".into()));
    }
    let m = pair.sigma().len();
    let n = pair.pi().len();
    let source = enumerate_tables(pair.sigma(), pair.pi(), cap)?;
    let bumped = WeightPair::new(pair.sigma().bump(k), pair.pi().bump(l))?;
    let target = enumerate_tables(bumped.sigma(), bumped.pi(), cap)?;

    // surjectivity: every target table must use the variable at (k, l)
    let onto = target.iter().all(|t| t.get(k, l) >= 1);

    let mut commutes_on_all = true;
    for alpha in &source {
        let lifted = alpha.add_unit(k, l);
        let lhs = expand_in(&bitableau_of(&rsk(&lifted)), m, n, cap)?;
        let rhs = expand_in(&bitableau_of(&rsk(alpha)), m, n, cap)?;
        // compare lhs with z_{kl} * rhs, term by term
        if lhs.len() != rhs.len() {
            commutes_on_all = false;
            break;
        }
        let shifted_match = rhs.terms().all(|(t, c)| lhs.coefficient(&t.add_unit(k, l)) == *c);
        if !shifted_match {
            commutes_on_all = false;
            break;
        }
    }

    let d = pair.degree();
    let predicate =
        u64::from(pair.sigma().parts()[k]) + u64::from(pair.pi().parts()[l]) >= d;
    Ok(CommutationReport { pair: pair.clone(), k, l, commutes: commutes_on_all && onto, predicate })
}

/// Family of arbitrarily large diagonal entries: for `n >= 1` the pair
/// `((n+2, n+1), (n+1, n+1, 1))` and the table `[[1, n, 1], [n, 1, 0]]`
/// give a diagonal entry of absolute value `n`. The entry is computed by
/// honest expansion, not from the closed form.
pub fn diagonal_entry_construction(n: u32) -> Result<(WeightPair, ContingencyTable, Int)> {
    if n == 0 {
        return Err(Error::InvalidArgument("the construction needs n >= 1".into()));
    }
    let sigma = WeightVector::new(vec![n + 2, n + 1]);
    let pi = WeightVector::new(vec![n + 1, n + 1, 1]);
    let pair = WeightPair::new(sigma, pi)?;
    let alpha = ContingencyTable::from_rows(vec![vec![1, n, 1], vec![n, 1, 0]])?;
    let poly = expand_in(&bitableau_of(&rsk(&alpha)), 2, 3, crate::DEFAULT_TABLE_CAP)?;
    let entry = poly.coefficient(&alpha);
    Ok((pair, alpha, entry))
}

/// Column-sum law: each column of a weight-space matrix sums to 0, except
/// the canonical-table column which sums to 1.
pub fn column_sums_ok(m: &RskMatrix) -> bool {
    let n = m.dim();
    if n == 0 {
        return true;
    }
    let canon = match canonical_table(m.pair().sigma(), m.pair().pi()) {
        Ok(c) => c,
        Err(_) => return false,
    };
    let canon_idx = m.basis_index(&canon);
    (0..n).all(|col| {
        let mut s = Int::zero();
        for row in 0..n {
            s += m.matrix().get(row, col).clone();
        }
        if Some(col) == canon_idx {
            s.is_one()
        } else {
            s.is_zero()
        }
    })
}
