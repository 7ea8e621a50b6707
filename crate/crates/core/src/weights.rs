//! Weight vectors and pairs, the normalization convention, growth-potential
//! matrices, reduction, the variable-multiplication poset, and the counting
//! functions behind the block decomposition.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::contingency::ContingencyTable;
use crate::error::{Error, Result};
use crate::Int;

/// Vector of nonnegative integer weights; the degree is the entry sum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    parts: Vec<u32>,
}

impl WeightVector {
    pub fn new(parts: Vec<u32>) -> Self {
        WeightVector { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.parts.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn max_part(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    pub fn is_positive(&self) -> bool {
        self.parts.iter().all(|&x| x > 0)
    }

    /// Copy with `+1` at index `k`.
    pub fn bump(&self, k: usize) -> Self {
        let mut parts = self.parts.clone();
        parts[k] += 1;
        WeightVector::new(parts)
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w({self})")
    }
}

impl fmt::Display for WeightVector {
    /// Compact digit string when all parts are single digits (`232`),
    /// comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        if self.parts.iter().all(|&x| x <= 9) {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Pair of weight vectors of equal degree: row margins and column margins.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightPair {
    sigma: WeightVector,
    pi: WeightVector,
}

impl WeightPair {
    pub fn new(sigma: WeightVector, pi: WeightVector) -> Result<Self> {
        if sigma.degree() != pi.degree() {
            return Err(Error::InvalidWeight(format!(
                "degrees differ: |{sigma}| = {} vs |{pi}| = {}",
                sigma.degree(),
                pi.degree()
            )));
        }
        Ok(WeightPair { sigma, pi })
    }

    pub fn sigma(&self) -> &WeightVector {
        &self.sigma
    }

    pub fn pi(&self) -> &WeightVector {
        &self.pi
    }

    pub fn degree(&self) -> u64 {
        self.sigma.degree()
    }

    pub fn transposed(&self) -> Self {
        WeightPair { sigma: self.pi.clone(), pi: self.sigma.clone() }
    }

    /// Normalized form: no zero entries, the shorter vector first, and at
    /// equal lengths the lexicographically larger vector first.
    pub fn is_normalized(&self) -> bool {
        self.sigma.is_positive()
            && self.pi.is_positive()
            && (self.sigma.len() < self.pi.len()
                || (self.sigma.len() == self.pi.len() && self.sigma.parts() >= self.pi.parts()))
    }

    /// A pair is reduced when no variable division is possible:
    /// `max sigma + max pi <= degree`.
    pub fn is_reduced(&self) -> bool {
        u64::from(self.sigma.max_part()) + u64::from(self.pi.max_part()) <= self.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.degree() == 0
    }

    /// Triangular pairs: two row weights with the first equal to the first
    /// column weight (and reduced). Their matrices are upper-triangular.
    pub fn is_triangular(&self) -> bool {
        self.sigma.len() == 2
            && !self.pi.is_empty()
            && self.sigma.parts()[0] == self.pi.parts()[0]
            && self.is_reduced()
    }
}

impl fmt::Debug for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.sigma, self.pi)
    }
}

impl fmt::Display for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.sigma, self.pi)
    }
}

/// Remove zero entries and transpose as needed so the pair is normalized.
/// The flag records whether a transposition happened.
pub fn normalize(pair: &WeightPair) -> (WeightPair, bool) {
    let sigma = WeightVector::new(pair.sigma.parts().iter().copied().filter(|&x| x > 0).collect());
    let pi = WeightVector::new(pair.pi.parts().iter().copied().filter(|&x| x > 0).collect());
    let transpose = sigma.len() > pi.len()
        || (sigma.len() == pi.len() && sigma.parts() < pi.parts());
    let pair = if transpose {
        WeightPair { sigma: pi, pi: sigma }
    } else {
        WeightPair { sigma, pi }
    };
    (pair, transpose)
}

/// Integer matrix with entries `sigma_i + pi_j - d`: positive entries mark
/// variables dividing every monomial of the weight space, zero entries mark
/// multiplications that commute with insertion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrowthMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl GrowthMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    /// Number of zero entries (the growth potential).
    pub fn zero_count(&self) -> usize {
        self.entries.iter().filter(|&&x| x == 0).count()
    }

    pub fn positive_positions(&self) -> Vec<(usize, usize)> {
        (0..self.rows * self.cols)
            .filter(|&k| self.entries[k] > 0)
            .map(|k| (k / self.cols, k % self.cols))
            .collect()
    }
}

pub fn growth_matrix(pair: &WeightPair) -> GrowthMatrix {
    let d = pair.degree() as i64;
    let m = pair.sigma.len();
    let n = pair.pi.len();
    let mut entries = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            entries
                .push(i64::from(pair.sigma.parts()[i]) + i64::from(pair.pi.parts()[j]) - d);
        }
    }
    GrowthMatrix { rows: m, cols: n, entries }
}

/// Record of a reduction: the divisor exponent matrix together with the
/// reduced pair it leads to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionRecord {
    pub original: WeightPair,
    pub reduced: WeightPair,
    pub divisor_exponents: ContingencyTable,
}

/// Reduce a pair by dividing out every variable with positive growth
/// entry: `divisor(i, j) = max(g(i, j), 0)` in closed form.
pub fn reduce(pair: &WeightPair) -> ReductionRecord {
    let g = growth_matrix(pair);
    let m = g.rows();
    let n = g.cols();
    let mut divisor = ContingencyTable::zeros(m, n);
    for i in 0..m {
        for j in 0..n {
            if g.get(i, j) > 0 {
                *divisor.get_mut(i, j) = u32::try_from(g.get(i, j)).unwrap();
            }
        }
    }
    let row_div = divisor.row_margins();
    let col_div = divisor.col_margins();
    let sigma = WeightVector::new(
        pair.sigma.parts().iter().zip(row_div.parts()).map(|(&a, &b)| a - b).collect(),
    );
    let pi = WeightVector::new(
        pair.pi.parts().iter().zip(col_div.parts()).map(|(&a, &b)| a - b).collect(),
    );
    let reduced = WeightPair::new(sigma, pi).expect("reduction preserves the degree balance");
    debug_assert!(reduced.is_reduced(), "closed-form reduction must land on a reduced pair");
    ReductionRecord { original: pair.clone(), reduced, divisor_exponents: divisor }
}

/// Upward covers in the variable-multiplication poset: all
/// `(sigma + e_k, pi + e_l)` with `sigma_k + pi_l >= d`.
pub fn poset_covers(pair: &WeightPair) -> Vec<WeightPair> {
    let d = pair.degree();
    let mut out = Vec::new();
    for k in 0..pair.sigma.len() {
        for l in 0..pair.pi.len() {
            if u64::from(pair.sigma.parts()[k]) + u64::from(pair.pi.parts()[l]) >= d {
                out.push(WeightPair {
                    sigma: pair.sigma.bump(k),
                    pi: pair.pi.bump(l),
                });
            }
        }
    }
    out
}

/// Downward covers: single-variable divisions at positive growth entries.
pub fn poset_lower_covers(pair: &WeightPair) -> Vec<WeightPair> {
    let g = growth_matrix(pair);
    g.positive_positions()
        .into_iter()
        .map(|(k, l)| {
            let mut sigma = pair.sigma.parts().to_vec();
            let mut pi = pair.pi.parts().to_vec();
            sigma[k] -= 1;
            pi[l] -= 1;
            WeightPair { sigma: WeightVector::new(sigma), pi: WeightVector::new(pi) }
        })
        .collect()
}

/// All pairs reachable from `pair` by repeated single-variable divisions,
/// including the pair itself.
pub fn poset_downward_closure(pair: &WeightPair) -> Vec<WeightPair> {
    let mut seen: BTreeSet<WeightPair> = BTreeSet::new();
    let mut stack = vec![pair.clone()];
    while let Some(p) = stack.pop() {
        if seen.insert(p.clone()) {
            stack.extend(poset_lower_covers(&p));
        }
    }
    seen.into_iter().collect()
}

/// Number of degree-`d` normalized weight pairs reducing to the given
/// nonzero reduced pair.
pub fn count_a(pair: &WeightPair, d: u64) -> Result<Int> {
    if !pair.is_reduced() {
        return Err(Error::InvalidArgument(format!("{pair} is not reduced")));
    }
    if pair.is_zero() || !pair.is_normalized() {
        return Err(Error::InvalidArgument(format!(
            "{pair} is not a nonzero normalized reduced pair"
        )));
    }
    let dp = pair.degree();
    if d < dp {
        return Ok(Int::zero());
    }
    if pair.pi.len() >= 3 {
        let g = growth_matrix(pair).zero_count() as u64;
        if g >= 1 {
            Ok(binomial(Int::from(d - dp + g - 1), Int::from(g - 1)))
        } else {
            Ok(if d == dp { Int::one() } else { Int::zero() })
        }
    } else {
        // both lengths are 2: the pair is (aa, aa)
        let delta = u64::from(d == dp);
        Ok(Int::from(4 * (d - dp) + delta))
    }
}

/// Parity of `count_a` via the base-2 digit criterion for binomial
/// coefficients (no big-integer arithmetic).
pub fn count_a_is_odd(pair: &WeightPair, d: u64) -> Result<bool> {
    if !pair.is_reduced() || pair.is_zero() || !pair.is_normalized() {
        return Err(Error::InvalidArgument(format!(
            "{pair} is not a nonzero normalized reduced pair"
        )));
    }
    let dp = pair.degree();
    if d < dp {
        return Ok(false);
    }
    if pair.pi.len() >= 3 {
        let g = growth_matrix(pair).zero_count() as u64;
        if g >= 1 {
            Ok(binomial_is_odd(d - dp + g - 1, g - 1))
        } else {
            Ok(d == dp)
        }
    } else {
        Ok(d == dp)
    }
}

/// Lucas criterion at the prime 2: `C(a, b)` is odd iff the binary digits
/// of `b` are a subset of those of `a`.
pub fn binomial_is_odd(a: u64, b: u64) -> bool {
    b & !a == 0
}

/// One block of the decomposition: a reduced pair with its multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockMultiplicity {
    pub pair: WeightPair,
    pub multiplicity: Int,
}

/// Multiplicity of the reduced pair inside the degree-`d` operator on
/// `m x n` matrices.
pub fn block_n(pair: &WeightPair, m: usize, n: usize, d: u64) -> Result<Int> {
    let a = count_a(pair, d)?;
    if a.is_zero() {
        return Ok(Int::zero());
    }
    let (ls, lp) = (pair.sigma.len(), pair.pi.len());
    let (m, n) = (Int::from(m), Int::from(n));
    let choose = |t: &Int, k: usize| binomial(t.clone(), Int::from(k));
    let count = if pair.sigma == pair.pi {
        choose(&m, ls) * choose(&n, lp)
    } else {
        choose(&m, ls) * choose(&n, lp) + choose(&m, lp) * choose(&n, ls)
    };
    Ok(a * count)
}

/// Parity of `block_n`, entirely via Lucas.
pub fn block_n_is_odd(pair: &WeightPair, m: usize, n: usize, d: u64) -> Result<bool> {
    if !count_a_is_odd(pair, d)? {
        return Ok(false);
    }
    let (ls, lp) = (pair.sigma.len() as u64, pair.pi.len() as u64);
    let (m, n) = (m as u64, n as u64);
    let direct = binomial_is_odd(m, ls) && binomial_is_odd(n, lp);
    Ok(if pair.sigma == pair.pi {
        direct
    } else {
        direct != (binomial_is_odd(m, lp) && binomial_is_odd(n, ls))
    })
}

/// Multiplicity of the trivial one-dimensional block: monomials supported
/// on a single row or column of the variable matrix.
pub fn block_n0(m: usize, n: usize, d: u64) -> Int {
    if d == 0 {
        return Int::one();
    }
    let (mi, ni) = (Int::from(m), Int::from(n));
    let di = Int::from(d);
    binomial(di.clone() + ni.clone() - Int::one(), di.clone()) * mi.clone()
        + binomial(di.clone() + mi.clone() - Int::one(), di) * ni.clone()
        - mi * ni
}

/// The full block census: the trivial multiplicity together with every
/// nonzero reduced pair of degree at most `d` that appears with positive
/// multiplicity.
pub fn block_multiplicities(m: usize, n: usize, d: u64) -> (Int, Vec<BlockMultiplicity>) {
    let n0 = block_n0(m, n, d);
    let mut blocks = Vec::new();
    let len_bound = m.max(n);
    for pair in enumerate_reduced_pairs(d, len_bound, len_bound) {
        let mult = block_n(&pair, m, n, d).expect("enumerated pairs are reduced");
        if !mult.is_zero() {
            blocks.push(BlockMultiplicity { pair, multiplicity: mult });
        }
    }
    (n0, blocks)
}

/// All normalized nonzero reduced pairs with degree `<= d_max` and vector
/// lengths within the bounds, ordered by degree, then lengths, then
/// reverse-lexicographically.
pub fn enumerate_reduced_pairs(
    d_max: u64,
    max_len_sigma: usize,
    max_len_pi: usize,
) -> Vec<WeightPair> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        for ls in 1..=max_len_sigma {
            for lp in ls..=max_len_pi {
                for sigma in positive_compositions(d, ls) {
                    for pi in positive_compositions(d, lp) {
                        if ls == lp && sigma < pi {
                            continue;
                        }
                        let pair = WeightPair {
                            sigma: WeightVector::new(sigma.clone()),
                            pi: WeightVector::new(pi),
                        };
                        if pair.is_reduced() {
                            out.push(pair);
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| {
        (a.degree(), a.sigma.len(), a.pi.len())
            .cmp(&(b.degree(), b.sigma.len(), b.pi.len()))
            .then_with(|| b.sigma.parts().cmp(a.sigma.parts()))
            .then_with(|| b.pi.parts().cmp(a.pi.parts()))
    });
    out
}

/// Compositions of `total` into exactly `parts` nonnegative parts, in
/// lexicographic order.
pub fn compositions(total: u64, parts: usize) -> Vec<Vec<u32>> {
    fn rec(total: u64, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            if total <= u64::from(u32::MAX) {
                cur.push(total as u32);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for first in 0..=total {
            cur.push(first as u32);
            rec(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `total` into exactly `parts` positive parts, in
/// lexicographic order.
pub fn positive_compositions(total: u64, parts: usize) -> Vec<Vec<u32>> {
    fn rec(total: u64, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            if total >= 1 && total <= u64::from(u32::MAX) {
                cur.push(total as u32);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for first in 1..=total.saturating_sub(parts as u64 - 1) {
            cur.push(first as u32);
            rec(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}
