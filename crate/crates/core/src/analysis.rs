//! High-level results: closed-form determinants and traces of the full
//! degree-d operator, exhaustive permutation sweeps, the Dynkin-type
//! diagonalizability classification, and conjecture scanners.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{char_poly, int_poly_gcd, is_diagonalizable, strip_pm1_factors, sturm_real_root_count};
use crate::operator::{build_inverse, build_matrix, matrix_a_d};
use crate::weights::{
    block_n, block_n0, block_n_is_odd, compositions, enumerate_reduced_pairs, WeightPair,
    WeightVector,
};
use crate::{Int, IntPoly};

// ---------------------------------------------------------------------------
// Block value cache

/// Cache of per-block determinants and traces, keyed by reduced pair.
pub struct BlockCache {
    cap: usize,
    dets: HashMap<WeightPair, i32>,
    traces: HashMap<(WeightPair, bool), Int>,
}

impl BlockCache {
    pub fn new(cap: usize) -> Self {
        BlockCache { cap, dets: HashMap::new(), traces: HashMap::new() }
    }

    pub fn det(&mut self, pair: &WeightPair) -> Result<i32> {
        if let Some(&d) = self.dets.get(pair) {
            return Ok(d);
        }
        let m = build_matrix(pair, self.cap)?;
        let det = m.matrix().det();
        let val = if det.is_one() {
            1
        } else if (-&det).is_one() {
            -1
        } else {
            return Err(Error::Internal(format!("block determinant {det} is not a unit")));
        };
        self.dets.insert(pair.clone(), val);
        Ok(val)
    }

    pub fn trace(&mut self, pair: &WeightPair, inverse: bool) -> Result<Int> {
        if let Some(t) = self.traces.get(&(pair.clone(), inverse)) {
            return Ok(t.clone());
        }
        let m = if inverse { build_inverse(pair, self.cap)? } else { build_matrix(pair, self.cap)? };
        let t = m.matrix().trace();
        self.traces.insert((pair.clone(), inverse), t.clone());
        Ok(t)
    }
}

// ---------------------------------------------------------------------------
// Determinant

/// Determinant of the degree-`d` operator on `m x n` variables, as a
/// product of block determinants over reduced pairs with odd multiplicity
/// (multiplicity parity via the base-2 binomial criterion).
pub fn det_rsk(m: usize, n: usize, d: u64, cache: &mut BlockCache) -> Result<i32> {
    let mut sign = 1i32;
    let bound = m.max(n);
    for pair in enumerate_reduced_pairs(d, bound, bound) {
        if block_n_is_odd(&pair, m, n, d)? {
            sign *= cache.det(&pair)?;
        }
    }
    Ok(sign)
}

/// Determinant computed without the reduction theory: the product of the
/// determinants of every margin block of the degree component.
pub fn det_rsk_direct(m: usize, n: usize, d: u64, cap: usize) -> Result<Int> {
    let mut det = Int::one();
    for sigma in compositions(d, m) {
        for pi in compositions(d, n) {
            let pair = WeightPair::new(WeightVector::new(sigma.clone()), WeightVector::new(pi))?;
            let block = build_matrix(&pair, cap)?;
            det *= block.matrix().det();
        }
    }
    Ok(det)
}

/// Check that the determinant is periodic in both matrix dimensions with
/// period `2^r`, `r` minimal with `2^r > d`.
pub fn verify_det_period(
    d: u64,
    m_range: std::ops::RangeInclusive<usize>,
    n_range: std::ops::RangeInclusive<usize>,
    cache: &mut BlockCache,
) -> Result<bool> {
    let period = det_period(d);
    for m in m_range {
        for n in n_range.clone() {
            let base = det_rsk(m, n, d, cache)?;
            if base != det_rsk(m + period, n, d, cache)?
                || base != det_rsk(m, n + period, d, cache)?
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The guaranteed period `2^r` with `r` minimal such that `2^r > d`.
pub fn det_period(d: u64) -> usize {
    let mut p = 2usize;
    while (p as u64) <= d {
        p *= 2;
    }
    p
}

// ---------------------------------------------------------------------------
// Trace

/// Trace of the degree-`d` operator (or of its inverse), summed over the
/// block decomposition.
pub fn trace_rsk(m: usize, n: usize, d: u64, inverse: bool, cache: &mut BlockCache) -> Result<Int> {
    let mut total = block_n0(m, n, d);
    let bound = m.max(n);
    for pair in enumerate_reduced_pairs(d, bound, bound) {
        let mult = block_n(&pair, m, n, d)?;
        if mult.is_zero() {
            continue;
        }
        total += mult * cache.trace(&pair, inverse)?;
    }
    Ok(total)
}

/// Trace computed without the reduction theory, block by margin block.
pub fn trace_rsk_direct(m: usize, n: usize, d: u64, inverse: bool, cap: usize) -> Result<Int> {
    let mut total = Int::zero();
    for sigma in compositions(d, m) {
        for pi in compositions(d, n) {
            let pair = WeightPair::new(WeightVector::new(sigma.clone()), WeightVector::new(pi))?;
            let block =
                if inverse { build_inverse(&pair, cap)? } else { build_matrix(&pair, cap)? };
            total += block.matrix().trace();
        }
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// Exhaustive permutation sweeps

/// Maximum label count the fixed-size sweep buffers support.
const SWEEP_MAX: usize = 20;

struct SweepBuffers {
    p_rows: [[u8; SWEEP_MAX]; SWEEP_MAX],
    q_rows: [[u8; SWEEP_MAX]; SWEEP_MAX],
    row_lens: [usize; SWEEP_MAX],
    nrows: usize,
}

impl SweepBuffers {
    fn new() -> Self {
        SweepBuffers {
            p_rows: [[0; SWEEP_MAX]; SWEEP_MAX],
            q_rows: [[0; SWEEP_MAX]; SWEEP_MAX],
            row_lens: [0; SWEEP_MAX],
            nrows: 0,
        }
    }

    /// Diagonal entry of the permutation block at the permutation table
    /// `w` (column j holds a 1 in row w[j]): the signed product over the
    /// shape columns of the induced partial-permutation determinants.
    fn diag_entry(&mut self, w: &[u8]) -> i64 {
        self.nrows = 0;
        // insertion of the word w(0), w(1), ... with recording labels
        for (j, &wj) in w.iter().enumerate() {
            let mut p = wj + 1;
            let mut r = 0;
            loop {
                if r == self.nrows {
                    self.p_rows[r][0] = p;
                    self.q_rows[r][0] = (j + 1) as u8;
                    self.row_lens[r] = 1;
                    self.nrows += 1;
                    break;
                }
                let len = self.row_lens[r];
                let row = &mut self.p_rows[r];
                let mut idx = len;
                for (t, &x) in row[..len].iter().enumerate() {
                    if x > p {
                        idx = t;
                        break;
                    }
                }
                if idx == len {
                    row[len] = p;
                    self.q_rows[r][len] = (j + 1) as u8;
                    self.row_lens[r] = len + 1;
                    break;
                }
                std::mem::swap(&mut row[idx], &mut p);
                r += 1;
            }
        }
        // product over columns of det of the submatrix on (P column, Q column)
        let mut product = 1i64;
        let ncols = self.row_lens[0];
        for c in 0..ncols {
            let mut height = 0;
            while height < self.nrows && self.row_lens[height] > c {
                height += 1;
            }
            // rows R (strictly increasing) and the images of the Q-column
            let mut perm = [0usize; SWEEP_MAX];
            let mut ok = true;
            'build: for b in 0..height {
                let col_label = self.q_rows[b][c]; // 1-based column index
                let image = w[(col_label - 1) as usize] + 1; // 1-based row index
                for (a, row) in self.p_rows[..height].iter().enumerate() {
                    if row[c] == image {
                        perm[b] = a;
                        continue 'build;
                    }
                }
                ok = false;
                break;
            }
            if !ok {
                return 0;
            }
            // parity of perm over 0..height
            let mut visited = [false; SWEEP_MAX];
            let mut sign = 1i64;
            for start in 0..height {
                if visited[start] {
                    continue;
                }
                let mut len = 0;
                let mut at = start;
                while !visited[at] {
                    visited[at] = true;
                    at = perm[at];
                    len += 1;
                }
                if len % 2 == 0 {
                    sign = -sign;
                }
            }
            product *= sign;
        }
        product
    }
}

fn factorial(d: u32) -> u64 {
    (1..=u64::from(d)).product()
}

/// Lexicographically `rank`-th permutation of `0..d`.
fn unrank_permutation(d: u32, mut rank: u64, out: &mut Vec<u8>) {
    out.clear();
    let mut pool: Vec<u8> = (0..d as u8).collect();
    for k in (1..=d as u64).rev() {
        let f = factorial((k - 1) as u32);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
}

/// In-place lexicographic successor; false when `w` was the last one.
fn next_permutation(w: &mut [u8]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Sweep all `d!` permutation tables in lexicographic rank order,
/// partitioned into contiguous rank ranges across `workers` threads.
/// Returns the diagonal sum and the number of zero diagonal entries; the
/// result is identical for every worker count.
pub fn sweep_permutation_diagonal(d: u32, workers: usize, limit: u32) -> Result<(i64, u64)> {
    if d > limit {
        return Err(Error::capacity(format!("permutation sweep at degree {d}"), limit as usize));
    }
    if d as usize > SWEEP_MAX {
        return Err(Error::capacity(format!("permutation sweep at degree {d}"), SWEEP_MAX));
    }
    if d == 0 {
        return Ok((1, 0)); // the empty table contributes the fixed constant
    }
    let total = factorial(d);
    let workers = workers.max(1).min(total as usize);
    let mut bounds: Vec<(u64, u64)> = Vec::with_capacity(workers);
    for t in 0..workers as u64 {
        let lo = total * t / workers as u64;
        let hi = total * (t + 1) / workers as u64;
        bounds.push((lo, hi));
    }
    let results: Vec<(i64, u64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&(lo, hi)| {
                scope.spawn(move || {
                    let mut buffers = SweepBuffers::new();
                    let mut w = Vec::with_capacity(d as usize);
                    unrank_permutation(d, lo, &mut w);
                    let mut sum = 0i64;
                    let mut zeros = 0u64;
                    let mut rank = lo;
                    while rank < hi {
                        let e = buffers.diag_entry(&w);
                        sum += e;
                        if e == 0 {
                            zeros += 1;
                        }
                        rank += 1;
                        if rank < hi && !next_permutation(&mut w) {
                            break;
                        }
                    }
                    (sum, zeros)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect()
    });
    let mut sum = 0i64;
    let mut zeros = 0u64;
    for (s, z) in results {
        sum += s;
        zeros += z;
    }
    Ok((sum, zeros))
}

/// Trace of the permutation-weight block, never materializing its matrix.
pub fn trace_perm(d: u32, workers: usize, limit: u32) -> Result<i64> {
    Ok(sweep_permutation_diagonal(d, workers, limit)?.0)
}

/// Number of permutation tables with a zero diagonal entry.
pub fn count_cd(d: u32, workers: usize, limit: u32) -> Result<u64> {
    Ok(sweep_permutation_diagonal(d, workers, limit)?.1)
}

// ---------------------------------------------------------------------------
// Diagonalizability classification

/// Dynkin-type label of the three-path graph with arm node counts
/// `m - 1`, `n - 1`, `d - 1` hanging off a central node.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DynkinLabel {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    /// The affine extension: arms 1, 2, 5.
    E9,
    None,
}

impl fmt::Display for DynkinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinLabel::A(k) => write!(f, "A{k}"),
            DynkinLabel::D(k) => write!(f, "D{k}"),
            DynkinLabel::E6 => write!(f, "E6"),
            DynkinLabel::E7 => write!(f, "E7"),
            DynkinLabel::E8 => write!(f, "E8"),
            DynkinLabel::E9 => write!(f, "E9"),
            DynkinLabel::None => write!(f, "none"),
        }
    }
}

/// Which branch of the classification decided the verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassificationRule {
    /// One dimension is at most 1: the operator is the identity.
    ThinMatrix,
    /// Both dimensions are 2: every block is an involution.
    TwoByTwo,
    /// Dimensions {2, 3} with degree at most 6.
    TwoByThreeLowDegree,
    /// Degree at most 3.
    LowDegree,
    /// None of the diagonalizable branches apply.
    NotDiagonalizable,
}

impl fmt::Display for ClassificationRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassificationRule::ThinMatrix => "one dimension at most 1 (identity operator)",
            ClassificationRule::TwoByTwo => "2x2 variables (involutive blocks)",
            ClassificationRule::TwoByThreeLowDegree => "2x3 variables with degree at most 6",
            ClassificationRule::LowDegree => "degree at most 3",
            ClassificationRule::NotDiagonalizable => "no diagonalizable branch applies",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub m: usize,
    pub n: usize,
    pub d: u64,
    pub diagonalizable: bool,
    pub dynkin_label: DynkinLabel,
    pub rule: ClassificationRule,
}

/// Label of the three-path graph joined at one node, with the convention
/// that a zero value makes the defining inequality hold.
pub fn dynkin_label(m: usize, n: usize, d: u64) -> DynkinLabel {
    let mut t = [m, n, d as usize];
    t.sort_unstable();
    let [x, y, z] = t;
    let nodes = (m + n + d as usize).saturating_sub(2).max(1);
    // Two values equal to 2 put the graph in the D family. The degenerate
    // case (1, 2, 2) is the three-node path, labelled D3 (= A3) so the
    // whole (2, 2, *) family carries the D label.
    if x == 2 && y == 2 {
        return DynkinLabel::D(z + 2);
    }
    if x == 1 && y == 2 && z == 2 {
        return DynkinLabel::D(3);
    }
    if x <= 1 {
        return DynkinLabel::A(nodes);
    }
    match (x, y) {
        (2, 3) => match z {
            3 => DynkinLabel::E6,
            4 => DynkinLabel::E7,
            5 => DynkinLabel::E8,
            6 => DynkinLabel::E9,
            _ => DynkinLabel::None,
        },
        _ => DynkinLabel::None,
    }
}

/// Classify diagonalizability of the degree-`d` operator on `m x n`
/// variables: diagonalizable iff the degree is at most 3 or the three-path
/// graph is of ADE type (equivalently `1/m + 1/n + 1/d > 1`) or its affine
/// E9 special case.
pub fn classify_diagonalizable(m: usize, n: usize, d: u64) -> ClassificationResult {
    let label = dynkin_label(m, n, d);
    let (lo, hi) = (m.min(n), m.max(n));
    let (diagonalizable, rule) = if lo <= 1 || d == 0 {
        (true, ClassificationRule::ThinMatrix)
    } else if lo == 2 && hi == 2 {
        (true, ClassificationRule::TwoByTwo)
    } else if lo == 2 && hi == 3 && d <= 6 {
        (true, ClassificationRule::TwoByThreeLowDegree)
    } else if d <= 3 {
        (true, ClassificationRule::LowDegree)
    } else {
        (false, ClassificationRule::NotDiagonalizable)
    };
    ClassificationResult { m, n, d, diagonalizable, dynkin_label: label, rule }
}

/// Cross-check: diagonalizability of every block with positive
/// multiplicity, decided by squarefree minimal polynomials.
pub fn classify_via_blocks(m: usize, n: usize, d: u64, cap: usize) -> Result<bool> {
    let bound = m.max(n);
    for pair in enumerate_reduced_pairs(d, bound, bound) {
        if block_n(&pair, m, n, d)?.is_zero() {
            continue;
        }
        let block = build_matrix(&pair, cap)?;
        if !is_diagonalizable(block.matrix()) {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Conjecture scanners

/// Outcome of a conjecture scan: the range scanned and any counterexamples
/// found. A scan never claims a proof.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub id: String,
    pub scanned: String,
    pub counterexamples: Vec<WeightPair>,
    pub all_pass: bool,
}

impl ConjectureReport {
    fn new(id: &str, scanned: String, counterexamples: Vec<WeightPair>) -> Self {
        let all_pass = counterexamples.is_empty();
        ConjectureReport { id: id.to_string(), scanned, counterexamples, all_pass }
    }
}

/// Degree of the squarefree part of a polynomial.
fn squarefree_degree(p: &IntPoly) -> usize {
    let g = int_poly_gcd(p, &p.derivative());
    p.degree().unwrap_or(0) - g.degree().unwrap_or(0)
}

/// Scan reduced pairs with both lengths in `[3, max_len]` up to
/// `degree_bound` for a non-real eigenvalue: a counterexample is a block
/// whose characteristic polynomial has only real roots.
pub fn scan_conjecture_complex(
    degree_bound: u64,
    max_len: usize,
    cap: usize,
) -> Result<ConjectureReport> {
    let mut counterexamples = Vec::new();
    for pair in enumerate_reduced_pairs(degree_bound, max_len, max_len) {
        if pair.sigma().len() < 3 || pair.pi().len() < 3 {
            continue;
        }
        let block = build_matrix(&pair, cap)?;
        let p = char_poly(block.matrix());
        let real = sturm_real_root_count(&p)?;
        if real == squarefree_degree(&p) {
            counterexamples.push(pair);
        }
    }
    Ok(ConjectureReport::new(
        "non-real eigenvalue on weights of length >= 3",
        format!("reduced pairs, lengths 3..={max_len}, degree <= {degree_bound}"),
        counterexamples,
    ))
}

/// Scan non-triangular reduced pairs with the given vector lengths for a
/// non-integer eigenvalue: after stripping all factors `(t-1)` and `(t+1)`
/// from the characteristic polynomial a nonconstant remainder must be
/// left (its roots are irrational because rational eigenvalues can only
/// be +1 or -1). Triangular pairs are checked to leave a constant.
pub fn scan_conjecture_nonintegral(
    degree_bound: u64,
    len_sigma: usize,
    len_pi: usize,
    cap: usize,
) -> Result<ConjectureReport> {
    let mut counterexamples = Vec::new();
    for pair in enumerate_reduced_pairs(degree_bound, len_sigma, len_pi) {
        if pair.sigma().len() != len_sigma || pair.pi().len() != len_pi {
            continue;
        }
        let block = build_matrix(&pair, cap)?;
        let p = char_poly(block.matrix());
        let (_, _, remainder) = strip_pm1_factors(&p);
        if pair.is_triangular() {
            if remainder.degree() != Some(0) {
                return Err(Error::Internal(format!(
                    "triangular pair {pair} has eigenvalues besides 1 and -1"
                )));
            }
        } else if remainder.degree() == Some(0) {
            counterexamples.push(pair);
        }
    }
    Ok(ConjectureReport::new(
        "non-integer eigenvalue on non-triangular reduced pairs",
        format!("reduced pairs, lengths ({len_sigma}, {len_pi}), degree <= {degree_bound}"),
        counterexamples,
    ))
}

/// Ratio trend of zero diagonal entries among permutation tables. Trend
/// data only; there is no pass/fail verdict.
pub fn scan_cd_ratio(d_max: u32, workers: usize, limit: u32) -> Result<Vec<(u32, u64, f64)>> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        let zeros = count_cd(d, workers, limit)?;
        let ratio = zeros as f64 / factorial(d) as f64;
        out.push((d, zeros, ratio));
    }
    Ok(out)
}

/// Exhaustively confirm the permutation-block trace is nonzero in range
/// (it vanishes at degree 2).
pub fn scan_trace_perm_nonzero(d_max: u32, workers: usize, limit: u32) -> Result<ConjectureReport> {
    let mut counterexamples = Vec::new();
    for d in 1..=d_max {
        if d == 2 {
            continue;
        }
        if trace_perm(d, workers, limit)? == 0 {
            let ones = WeightVector::new(vec![1; d as usize]);
            counterexamples.push(WeightPair::new(ones.clone(), ones)?);
        }
    }
    Ok(ConjectureReport::new(
        "nonzero permutation-block trace away from degree 2",
        format!("degrees 1..={d_max} excluding 2"),
        counterexamples,
    ))
}

// ---------------------------------------------------------------------------
// Roots of unity

/// Verify that all k-th roots of unity appear as eigenvalues when
/// `m >= 2` and `n, d >= k`: the shift-family block of degree `k` occurs
/// with positive multiplicity and `t^k - 1` divides its characteristic
/// polynomial.
pub fn roots_of_unity_presence(k: u32, m: usize, n: usize, d: u64, cap: usize) -> Result<bool> {
    if m < 2 || (n as u64) < u64::from(k) || d < u64::from(k) || k == 0 {
        return Err(Error::InvalidArgument(
            "need m >= 2 and n, d at least the root order".into(),
        ));
    }
    if k == 1 {
        // eigenvalue 1: the canonical monomial of any block is fixed
        return Ok(block_n0(m, n, d) > Int::zero());
    }
    let pair = WeightPair::new(
        WeightVector::new(vec![k - 1, 1]),
        WeightVector::new(vec![1; k as usize]),
    )?;
    let mult = block_n(&pair, m, n, d)?;
    if mult.is_zero() {
        return Ok(false);
    }
    let block = build_matrix(&pair, cap)?;
    let p = char_poly(block.matrix());
    let cyclic = char_poly(matrix_a_d(k)?.matrix());
    Ok(p.div_exact(&cyclic).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_TABLE_CAP as CAP;

    #[test]
    fn determinant_small_closed_forms() {
        let mut cache = BlockCache::new(CAP);
        // degree 2: sign -1 exactly when both dimensions are 2 or 3 mod 4
        for m in 1..=9 {
            for n in 1..=9 {
                let want = if (m % 4 == 2 || m % 4 == 3) && (n % 4 == 2 || n % 4 == 3) {
                    -1
                } else {
                    1
                };
                assert_eq!(det_rsk(m, n, 2, &mut cache).unwrap(), want, "({m},{n},2)");
                let want3 = if m % 4 == 3 && n % 4 == 3 { -1 } else { 1 };
                assert_eq!(det_rsk(m, n, 3, &mut cache).unwrap(), want3, "({m},{n},3)");
            }
        }
        // 2x2: sign -1 exactly at degrees 2 and 4 mod 8
        for d in 1..=18u64 {
            let want = if d % 8 == 2 || d % 8 == 4 { -1 } else { 1 };
            assert_eq!(det_rsk(2, 2, d, &mut cache).unwrap(), want, "(2,2,{d})");
        }
    }

    #[test]
    fn determinant_matches_direct_computation() {
        let mut cache = BlockCache::new(CAP);
        for m in 1..=3 {
            for n in 1..=3 {
                for d in 0..=3u64 {
                    let direct = det_rsk_direct(m, n, d, CAP).unwrap();
                    let formula = Int::from(det_rsk(m, n, d, &mut cache).unwrap());
                    assert_eq!(direct, formula, "({m},{n},{d})");
                }
            }
        }
    }

    #[test]
    fn periodicity() {
        let mut cache = BlockCache::new(CAP);
        assert_eq!(det_period(2), 4);
        assert_eq!(det_period(3), 4);
        assert_eq!(det_period(4), 8);
        assert!(verify_det_period(2, 1..=6, 1..=4, &mut cache).unwrap());
        assert!(verify_det_period(3, 1..=6, 1..=4, &mut cache).unwrap());
    }

    #[test]
    fn trace_small() {
        let mut cache = BlockCache::new(CAP);
        // degree 1 is the identity on m*n variables
        for m in 1..=4 {
            for n in 1..=4 {
                assert_eq!(trace_rsk(m, n, 1, false, &mut cache).unwrap(), Int::from(m * n));
            }
        }
        // trace at (m, m, 2) is m^3
        for m in 1..=5usize {
            assert_eq!(trace_rsk(m, m, 2, false, &mut cache).unwrap(), Int::from(m.pow(3)));
        }
        // direct agreement
        for m in 1..=3 {
            for n in 1..=3 {
                for d in 0..=3u64 {
                    for inverse in [false, true] {
                        assert_eq!(
                            trace_rsk(m, n, d, inverse, &mut cache).unwrap(),
                            trace_rsk_direct(m, n, d, inverse, CAP).unwrap(),
                            "({m},{n},{d},{inverse})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sweep_matches_small_factorials() {
        assert_eq!(trace_perm(1, 1, 11).unwrap(), 1);
        assert_eq!(trace_perm(2, 1, 11).unwrap(), 0);
        assert_eq!(trace_perm(3, 1, 11).unwrap(), -3);
        assert_eq!(trace_perm(4, 1, 11).unwrap(), -5);
        assert_eq!(count_cd(3, 1, 11).unwrap(), 1);
        assert_eq!(count_cd(4, 1, 11).unwrap(), 7);
        // above the configured limit
        assert!(matches!(trace_perm(8, 1, 7), Err(Error::Capacity { .. })));
    }

    #[test]
    fn sweep_is_worker_count_independent() {
        for workers in [1, 2, 3, 5, 8] {
            assert_eq!(sweep_permutation_diagonal(6, workers, 11).unwrap(), (96, 406));
        }
    }

    #[test]
    fn sweep_matches_materialized_block() {
        let ones = WeightVector::new(vec![1; 5]);
        let pair = WeightPair::new(ones.clone(), ones).unwrap();
        let block = build_matrix(&pair, CAP).unwrap();
        assert_eq!(Int::from(trace_perm(5, 2, 11).unwrap()), block.matrix().trace());
        let zeros = (0..block.dim())
            .filter(|&i| block.matrix().get(i, i).is_zero())
            .count() as u64;
        assert_eq!(count_cd(5, 2, 11).unwrap(), zeros);
    }

    #[test]
    fn permutation_unranking() {
        let mut w = Vec::new();
        unrank_permutation(4, 0, &mut w);
        assert_eq!(w, vec![0, 1, 2, 3]);
        unrank_permutation(4, 23, &mut w);
        assert_eq!(w, vec![3, 2, 1, 0]);
        // unrank agrees with repeated next_permutation
        let mut v = Vec::new();
        unrank_permutation(5, 0, &mut v);
        for rank in 1..120 {
            assert!(next_permutation(&mut v));
            unrank_permutation(5, rank, &mut w);
            assert_eq!(v, w, "rank {rank}");
        }
        assert!(!next_permutation(&mut v));
    }

    #[test]
    fn dynkin_labels() {
        assert_eq!(dynkin_label(1, 4, 9), DynkinLabel::A(12));
        assert_eq!(dynkin_label(2, 2, 5), DynkinLabel::D(7));
        assert_eq!(dynkin_label(2, 5, 2), DynkinLabel::D(7));
        assert_eq!(dynkin_label(2, 3, 3), DynkinLabel::E6);
        assert_eq!(dynkin_label(3, 2, 4), DynkinLabel::E7);
        assert_eq!(dynkin_label(2, 3, 5), DynkinLabel::E8);
        assert_eq!(dynkin_label(2, 3, 6), DynkinLabel::E9);
        assert_eq!(dynkin_label(3, 2, 6), DynkinLabel::E9);
        assert_eq!(dynkin_label(2, 3, 7), DynkinLabel::None);
        assert_eq!(dynkin_label(3, 3, 4), DynkinLabel::None);
    }

    #[test]
    fn classification_verdicts() {
        assert!(classify_diagonalizable(2, 3, 6).diagonalizable);
        assert_eq!(classify_diagonalizable(2, 3, 6).dynkin_label, DynkinLabel::E9);
        assert!(!classify_diagonalizable(2, 3, 7).diagonalizable);
        for d in 1..=12 {
            assert!(classify_diagonalizable(2, 2, d).diagonalizable);
            assert!(matches!(classify_diagonalizable(2, 2, d).dynkin_label, DynkinLabel::D(_)));
        }
        assert!(classify_diagonalizable(3, 3, 3).diagonalizable);
        assert_eq!(classify_diagonalizable(3, 3, 3).rule, ClassificationRule::LowDegree);
        assert!(!classify_diagonalizable(3, 3, 4).diagonalizable);
        // diagonalizable iff low degree or a labelled graph
        for m in 0..=5 {
            for n in 0..=5 {
                for d in 0..=8u64 {
                    let c = classify_diagonalizable(m, n, d);
                    let by_label = d <= 3 || c.dynkin_label != DynkinLabel::None;
                    assert_eq!(c.diagonalizable, by_label, "({m},{n},{d})");
                }
            }
        }
    }

    #[test]
    fn classification_cross_check_small() {
        for (m, n, dmax) in [(2, 2, 6), (2, 3, 7), (3, 3, 4)] {
            for d in 1..=dmax {
                let predicted = classify_diagonalizable(m, n, d).diagonalizable;
                let checked = classify_via_blocks(m, n, d, CAP).unwrap();
                assert_eq!(predicted, checked, "({m},{n},{d})");
            }
        }
    }

    #[test]
    fn scanners_small() {
        let report = scan_conjecture_complex(6, 3, CAP).unwrap();
        assert!(report.all_pass, "counterexamples: {:?}", report.counterexamples);
        let report = scan_conjecture_nonintegral(6, 2, 3, CAP).unwrap();
        assert!(report.all_pass);
        let report = scan_conjecture_nonintegral(6, 3, 3, CAP).unwrap();
        assert!(report.all_pass);
        let report = scan_trace_perm_nonzero(6, 2, 11).unwrap();
        assert!(report.all_pass);
        let ratios = scan_cd_ratio(5, 2, 11).unwrap();
        assert_eq!(ratios[4], (5, 53, 53.0 / 120.0));
    }

    #[test]
    fn roots_of_unity() {
        assert!(roots_of_unity_presence(2, 2, 2, 2, CAP).unwrap());
        assert!(roots_of_unity_presence(3, 2, 3, 3, CAP).unwrap());
        assert!(roots_of_unity_presence(4, 2, 4, 7, CAP).unwrap());
        assert!(roots_of_unity_presence(1, 2, 1, 1, CAP).unwrap());
        assert!(roots_of_unity_presence(3, 2, 2, 3, CAP).is_err());
    }
}
