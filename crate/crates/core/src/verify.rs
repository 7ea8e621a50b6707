//! Named invariant suites, runnable from the command line and from tests.
//! Each check re-derives a structural fact from scratch at desk scale.

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::analysis::{
    classify_diagonalizable, classify_via_blocks, det_rsk, det_rsk_direct, trace_perm, trace_rsk,
    trace_rsk_direct, BlockCache,
};
use crate::bitableau::{bitableau_of, evaluate_all_ones, expand_in};
use crate::contingency::{apply_swap, basis_cmp, canonical_table, enumerate_tables, SwapMove};
use crate::error::{Error, Result};
use crate::linalg::{char_poly, int_poly_gcd};
use crate::operator::{build_inverse, build_matrix, column_sums_ok, matrix_a_d, matrix_m_pi};
use crate::tableaux::{inverse_rsk_padded, rsk, rsk_with_chains};
use crate::weights::{
    block_multiplicities, compositions, normalize, positive_compositions, reduce, WeightPair,
    WeightVector,
};
use crate::{Int, DEFAULT_TABLE_CAP};

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

struct Recorder {
    checks: Vec<CheckOutcome>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    fn record(&mut self, name: &str, outcome: std::result::Result<(), String>) {
        match outcome {
            Ok(()) => self.checks.push(CheckOutcome {
                name: name.to_string(),
                pass: true,
                detail: String::new(),
            }),
            Err(detail) => {
                self.checks.push(CheckOutcome { name: name.to_string(), pass: false, detail })
            }
        }
    }
}

fn fail(msg: impl Into<String>) -> std::result::Result<(), String> {
    Err(msg.into())
}

const SUITES: &[&str] = &[
    "tableaux",
    "contingency",
    "weights",
    "bitableau",
    "operator",
    "linalg",
    "analysis",
];

pub fn available_suites() -> &'static [&'static str] {
    SUITES
}

pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let mut rec = Recorder::new();
    match name {
        "tableaux" => suite_tableaux(&mut rec),
        "contingency" => suite_contingency(&mut rec),
        "weights" => suite_weights(&mut rec),
        "bitableau" => suite_bitableau(&mut rec),
        "operator" => suite_operator(&mut rec),
        "linalg" => suite_linalg(&mut rec),
        "analysis" => suite_analysis(&mut rec),
        "all" => {
            for s in SUITES {
                let sub = run_suite(s)?;
                rec.checks.extend(sub.checks.into_iter().map(|mut c| {
                    c.name = format!("{s}: {}", c.name);
                    c
                }));
            }
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown suite {other:?}; available: {}, all",
                SUITES.join(", ")
            )))
        }
    }
    Ok(SuiteReport { suite: name.to_string(), checks: rec.checks })
}

fn small_weight_pairs(max_d: u64, max_m: usize, max_n: usize) -> Vec<WeightPair> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for m in 1..=max_m {
            for n in 1..=max_n {
                for sigma in positive_compositions(d, m) {
                    for pi in positive_compositions(d, n) {
                        out.push(
                            WeightPair::new(
                                WeightVector::new(sigma.clone()),
                                WeightVector::new(pi),
                            )
                            .expect("equal totals"),
                        );
                    }
                }
            }
        }
    }
    out
}

fn suite_tableaux(rec: &mut Recorder) {
    rec.record("insertion roundtrip, degree <= 5 on <= 3x3", {
        (|| {
            for pair in small_weight_pairs(5, 3, 3) {
                let tables = enumerate_tables(pair.sigma(), pair.pi(), DEFAULT_TABLE_CAP)
                    .map_err(|e| e.to_string())?;
                for alpha in tables {
                    let image = rsk(&alpha);
                    let back = inverse_rsk_padded(&image, alpha.rows(), alpha.cols())
                        .map_err(|e| e.to_string())?;
                    if back != alpha {
                        return fail(format!("roundtrip failed at {alpha}"));
                    }
                }
            }
            Ok(())
        })()
    });
    rec.record("content preservation and transpose symmetry", {
        (|| {
            for pair in small_weight_pairs(4, 3, 3) {
                let tables = enumerate_tables(pair.sigma(), pair.pi(), DEFAULT_TABLE_CAP)
                    .map_err(|e| e.to_string())?;
                for alpha in tables {
                    let image = rsk(&alpha);
                    if image.p().content_in(alpha.rows()).map_err(|e| e.to_string())?
                        != alpha.row_margins()
                        || image.q().content_in(alpha.cols()).map_err(|e| e.to_string())?
                            != alpha.col_margins()
                    {
                        return fail(format!("content mismatch at {alpha}"));
                    }
                    let swapped = rsk(&alpha.transpose());
                    if swapped.p() != image.q() || swapped.q() != image.p() {
                        return fail(format!("transpose symmetry fails at {alpha}"));
                    }
                }
            }
            Ok(())
        })()
    });
    rec.record("bump chains partition the biword, antidiagonally", {
        (|| {
            for pair in small_weight_pairs(5, 3, 3) {
                let tables = enumerate_tables(pair.sigma(), pair.pi(), DEFAULT_TABLE_CAP)
                    .map_err(|e| e.to_string())?;
                for alpha in tables {
                    let (image, chains) = rsk_with_chains(&alpha);
                    let total: usize = chains.iter().map(|c| c.biletters.len()).sum();
                    if total as u64 != alpha.degree() {
                        return fail(format!("chain sizes do not add up at {alpha}"));
                    }
                    for c in &chains {
                        for w in c.biletters.windows(2) {
                            if w[0].row <= w[1].row || w[0].col >= w[1].col {
                                return fail(format!("chain not antidiagonal at {alpha}"));
                            }
                        }
                        let v = c.value();
                        if v.row != image.p().rows()[0][c.column]
                            || v.col != image.q().rows()[0][c.column]
                        {
                            return fail(format!("chain value mismatch at {alpha}"));
                        }
                    }
                }
            }
            Ok(())
        })()
    });
}

fn suite_contingency(rec: &mut Recorder) {
    rec.record("enumeration strictly decreasing, canonical first", {
        (|| {
            for pair in small_weight_pairs(5, 3, 3) {
                let tables = enumerate_tables(pair.sigma(), pair.pi(), DEFAULT_TABLE_CAP)
                    .map_err(|e| e.to_string())?;
                for w in tables.windows(2) {
                    if basis_cmp(&w[0], &w[1]) != std::cmp::Ordering::Less {
                        return fail(format!("order violation in {pair}"));
                    }
                }
                let canon =
                    canonical_table(pair.sigma(), pair.pi()).map_err(|e| e.to_string())?;
                if tables.first() != Some(&canon) {
                    return fail(format!("canonical table is not first for {pair}"));
                }
                if rsk(&canon).shape().len() > 1 {
                    return fail(format!("canonical table has a multi-row image for {pair}"));
                }
            }
            Ok(())
        })()
    });
    rec.record("margin identity from inclusion-exclusion", {
        (|| {
            for pair in small_weight_pairs(5, 3, 3) {
                let d = pair.degree() as i64;
                let tables = enumerate_tables(pair.sigma(), pair.pi(), DEFAULT_TABLE_CAP)
                    .map_err(|e| e.to_string())?;
                for alpha in tables {
                    for k in 0..alpha.rows() {
                        for l in 0..alpha.cols() {
                            let mut off = 0i64;
                            for i in 0..alpha.rows() {
                                for j in 0..alpha.cols() {
                                    if i != k && j != l {
                                        off += i64::from(alpha.get(i, j));
                                    }
                                }
                            }
                            let lhs = i64::from(alpha.get(k, l)) - off;
                            let rhs = i64::from(pair.sigma().parts()[k])
                                + i64::from(pair.pi().parts()[l])
                                - d;
                            if lhs != rhs {
                                return fail(format!("margin identity fails at {alpha}"));
                            }
                        }
                    }
                }
            }
            Ok(())
        })()
    });
    rec.record("every table divisible by a variable iff margins exceed degree", {
        (|| {
            for pair in small_weight_pairs(5, 3, 3) {
                let d = pair.degree();
                let tables = enumerate_tables(pair.sigma(), pair.pi(), DEFAULT_TABLE_CAP)
                    .map_err(|e| e.to_string())?;
                for k in 0..pair.sigma().len() {
                    for l in 0..pair.pi().len() {
                        let always = tables.iter().all(|t| t.get(k, l) >= 1);
                        let predicate = u64::from(pair.sigma().parts()[k])
                            + u64::from(pair.pi().parts()[l])
                            > d;
                        if always != predicate {
                            return fail(format!("divisibility mismatch at {pair} ({k},{l})"));
                        }
                    }
                }
            }
            Ok(())
        })()
    });
    rec.record("weight-space dimensions add up to the full degree component", {
        (|| {
            for m in 1..=3usize {
                for n in 1..=3usize {
                    for d in 0..=5u64 {
                        let mut total = 0usize;
                        for sigma in compositions(d, m) {
                            for pi in compositions(d, n) {
                                total += enumerate_tables(
                                    &WeightVector::new(sigma.clone()),
                                    &WeightVector::new(pi),
                                    DEFAULT_TABLE_CAP,
                                )
                                .map_err(|e| e.to_string())?
                                .len();
                            }
                        }
                        let expect = binomial(Int::from(m * n + d as usize - 1), Int::from(d));
                        if Int::from(total) != expect {
                            return fail(format!("dimension sum off at ({m},{n},{d})"));
                        }
                    }
                }
            }
            Ok(())
        })()
    });
    rec.record("increasing swaps terminate at the canonical table", {
        (|| {
            let ones = WeightVector::new(vec![1, 1, 1]);
            let tables =
                enumerate_tables(&ones, &ones, DEFAULT_TABLE_CAP).map_err(|e| e.to_string())?;
            let canon = canonical_table(&ones, &ones).map_err(|e| e.to_string())?;
            for start in tables {
                let mut cur = start.clone();
                for _ in 0..64 {
                    if cur == canon {
                        break;
                    }
                    let (_, chains) = rsk_with_chains(&cur);
                    let chain = chains
                        .iter()
                        .find(|c| c.biletters.len() >= 2)
                        .ok_or_else(|| format!("no long chain yet not canonical: {cur}"))?;
                    let (a, b) = (chain.biletters[0], chain.biletters[1]);
                    let mv = SwapMove::new(
                        (a.row - 1) as usize,
                        (b.row - 1) as usize,
                        (a.col - 1) as usize,
                        (b.col - 1) as usize,
                    )
                    .map_err(|e| e.to_string())?;
                    let next = apply_swap(&cur, mv).map_err(|e| e.to_string())?;
                    if basis_cmp(&next, &cur) != std::cmp::Ordering::Less {
                        return fail(format!("swap did not increase {cur}"));
                    }
                    cur = next;
                }
                if cur != canon {
                    return fail(format!("did not reach the canonical table from {start}"));
                }
            }
            Ok(())
        })()
    });
}

fn suite_weights(rec: &mut Recorder) {
    rec.record("reduction is idempotent and lands on reduced pairs", {
        (|| {
            for pair in small_weight_pairs(6, 3, 3) {
                let (norm, _) = normalize(&pair);
                let r = reduce(&norm);
                if !r.reduced.is_reduced() {
                    return fail(format!("{pair} reduces to a non-reduced pair"));
                }
                if reduce(&r.reduced).reduced != r.reduced {
                    return fail(format!("reduction not idempotent at {pair}"));
                }
            }
            Ok(())
        })()
    });
    rec.record("block dimensions add up to the full degree component", {
        (|| {
            for m in 1..=3usize {
                for n in 1..=3usize {
                    for d in 0..=5u64 {
                        let (n0, blocks) = block_multiplicities(m, n, d);
                        let mut total = n0;
                        for b in blocks {
                            let dim = enumerate_tables(
                                b.pair.sigma(),
                                b.pair.pi(),
                                DEFAULT_TABLE_CAP,
                            )
                            .map_err(|e| e.to_string())?
                            .len();
                            total += b.multiplicity * Int::from(dim);
                        }
                        let expect = binomial(Int::from(m * n + d as usize - 1), Int::from(d));
                        if total != expect {
                            return fail(format!("block dimension identity off at ({m},{n},{d})"));
                        }
                    }
                }
            }
            Ok(())
        })()
    });
    rec.record("raw census of reductions matches the multiplicity formula", {
        (|| {
            let (m, n) = (3usize, 3usize);
            for d in 1..=4u64 {
                let mut census: std::collections::HashMap<WeightPair, Int> =
                    std::collections::HashMap::new();
                let mut trivial = Int::zero();
                for sigma in compositions(d, m) {
                    for pi in compositions(d, n) {
                        let raw = WeightPair::new(
                            WeightVector::new(sigma.clone()),
                            WeightVector::new(pi),
                        )
                        .map_err(|e| e.to_string())?;
                        let (norm, _) = normalize(&raw);
                        let red = reduce(&norm).reduced;
                        let (red, _) = normalize(&red);
                        if red.degree() == 0 {
                            trivial += Int::one();
                        } else {
                            *census.entry(red).or_insert_with(Int::zero) += Int::one();
                        }
                    }
                }
                let (n0, blocks) = block_multiplicities(m, n, d);
                if trivial != n0 {
                    return fail(format!("trivial census {trivial} vs n0 {n0} at degree {d}"));
                }
                for b in &blocks {
                    let seen = census.get(&b.pair).cloned().unwrap_or_else(Int::zero);
                    if seen != b.multiplicity {
                        return fail(format!(
                            "census {seen} vs multiplicity {} for {} at degree {d}",
                            b.multiplicity, b.pair
                        ));
                    }
                }
                if census.len() != blocks.len() {
                    return fail(format!("census has extra reduced pairs at degree {d}"));
                }
            }
            Ok(())
        })()
    });
}

fn suite_bitableau(rec: &mut Recorder) {
    rec.record("column sums are 0 except 1 at the canonical table", {
        (|| {
            for pair in small_weight_pairs(4, 3, 3) {
                let m = build_matrix(&pair, DEFAULT_TABLE_CAP).map_err(|e| e.to_string())?;
                if !column_sums_ok(&m) {
                    return fail(format!("column sums broken for {pair}"));
                }
            }
            Ok(())
        })()
    });
    rec.record("coefficient sums equal the all-ones evaluation", {
        (|| {
            for pair in small_weight_pairs(4, 3, 3) {
                let tables = enumerate_tables(pair.sigma(), pair.pi(), DEFAULT_TABLE_CAP)
                    .map_err(|e| e.to_string())?;
                for alpha in tables {
                    let b = bitableau_of(&rsk(&alpha));
                    let poly = expand_in(&b, alpha.rows(), alpha.cols(), DEFAULT_TABLE_CAP)
                        .map_err(|e| e.to_string())?;
                    let sum = poly.coefficient_sum();
                    if sum != evaluate_all_ones(&b) {
                        return fail(format!("coefficient sum mismatch at {alpha}"));
                    }
                    if !sum.is_zero() && !sum.is_one() {
                        return fail(format!("coefficient sum out of range at {alpha}"));
                    }
                }
            }
            Ok(())
        })()
    });
    rec.record("every expansion term stays in the weight space", {
        (|| {
            for pair in small_weight_pairs(4, 3, 3) {
                let tables = enumerate_tables(pair.sigma(), pair.pi(), DEFAULT_TABLE_CAP)
                    .map_err(|e| e.to_string())?;
                for alpha in tables {
                    let b = bitableau_of(&rsk(&alpha));
                    let poly = expand_in(&b, alpha.rows(), alpha.cols(), DEFAULT_TABLE_CAP)
                        .map_err(|e| e.to_string())?;
                    for (term, _) in poly.terms() {
                        if term.row_margins() != alpha.row_margins()
                            || term.col_margins() != alpha.col_margins()
                        {
                            return fail(format!("term escapes the weight space at {alpha}"));
                        }
                    }
                }
            }
            Ok(())
        })()
    });
}

fn suite_operator(rec: &mut Recorder) {
    rec.record("inverse times matrix is the identity, determinant is a unit", {
        (|| {
            for pair in small_weight_pairs(4, 3, 3) {
                let m = build_matrix(&pair, DEFAULT_TABLE_CAP).map_err(|e| e.to_string())?;
                let inv = build_inverse(&pair, DEFAULT_TABLE_CAP).map_err(|e| e.to_string())?;
                if !m.matrix().matmul(inv.matrix()).is_identity() {
                    return fail(format!("inverse failed for {pair}"));
                }
                let det = m.matrix().det();
                if !det.is_one() && !(-&det).is_one() {
                    return fail(format!("determinant {det} is not a unit for {pair}"));
                }
            }
            Ok(())
        })()
    });
    rec.record("closed forms agree with built matrices", {
        (|| {
            for d in 2..=5u32 {
                let closed = matrix_a_d(d).map_err(|e| e.to_string())?;
                let built =
                    build_matrix(closed.pair(), DEFAULT_TABLE_CAP).map_err(|e| e.to_string())?;
                if closed.matrix() != built.matrix() {
                    return fail(format!("shift family mismatch at degree {d}"));
                }
            }
            for pi in [vec![2u32, 2], vec![2, 1, 1], vec![1, 1, 1], vec![3, 2, 3]] {
                let pi = WeightVector::new(pi);
                let tri = matrix_m_pi(&pi).map_err(|e| e.to_string())?;
                let sigma = WeightVector::new(vec![
                    pi.parts()[0],
                    (pi.degree() - u64::from(pi.parts()[0])) as u32,
                ]);
                let pair = WeightPair::new(sigma, pi.clone()).map_err(|e| e.to_string())?;
                let built = build_matrix(&pair, DEFAULT_TABLE_CAP).map_err(|e| e.to_string())?;
                if &tri.matrix != built.matrix() {
                    return fail(format!("triangular family mismatch at {pair}"));
                }
                if !tri.matrix.matmul(&tri.matrix).is_identity() {
                    return fail(format!("triangular matrix is not an involution at {pair}"));
                }
            }
            Ok(())
        })()
    });
}

fn suite_linalg(rec: &mut Recorder) {
    rec.record("Cayley-Hamilton on built matrices", {
        (|| {
            for pair in small_weight_pairs(3, 3, 3) {
                let m = build_matrix(&pair, DEFAULT_TABLE_CAP).map_err(|e| e.to_string())?;
                if m.dim() > 12 {
                    continue;
                }
                let p = char_poly(m.matrix());
                // evaluate columnwise via Horner
                let n = m.dim();
                for s in 0..n {
                    let mut e = vec![Int::zero(); n];
                    e[s] = Int::one();
                    let mut acc = vec![Int::zero(); n];
                    for c in p.coeffs().iter().rev() {
                        acc = m.matrix().apply(&acc);
                        for (a, b) in acc.iter_mut().zip(&e) {
                            *a += c * b;
                        }
                    }
                    if !acc.iter().all(Zero::is_zero) {
                        return fail(format!("Cayley-Hamilton fails for {pair}"));
                    }
                }
            }
            Ok(())
        })()
    });
    rec.record("minimal polynomial divides the characteristic polynomial", {
        (|| {
            for pair in small_weight_pairs(4, 3, 3) {
                let m = build_matrix(&pair, DEFAULT_TABLE_CAP).map_err(|e| e.to_string())?;
                let p = char_poly(m.matrix());
                let mu = m.matrix().min_poly();
                if p.div_exact(&mu).is_none() {
                    return fail(format!("minimal polynomial does not divide at {pair}"));
                }
                let c0 = p.coeff(0);
                if !c0.is_one() && !(-&c0).is_one() {
                    return fail(format!("constant term {c0} is not a unit at {pair}"));
                }
            }
            Ok(())
        })()
    });
    rec.record("distinct real roots never exceed the squarefree degree", {
        (|| {
            for pair in small_weight_pairs(4, 3, 3) {
                let m = build_matrix(&pair, DEFAULT_TABLE_CAP).map_err(|e| e.to_string())?;
                let p = char_poly(m.matrix());
                let g = int_poly_gcd(&p, &p.derivative());
                let sf_deg = p.degree().unwrap_or(0) - g.degree().unwrap_or(0);
                let real = sturm_count(&p)?;
                if real > sf_deg || (sf_deg - real) % 2 != 0 {
                    return fail(format!("root count {real} vs squarefree degree {sf_deg}"));
                }
            }
            Ok(())
        })()
    });
}

fn sturm_count(p: &crate::IntPoly) -> std::result::Result<usize, String> {
    crate::linalg::sturm_real_root_count(p).map_err(|e| e.to_string())
}

fn suite_analysis(rec: &mut Recorder) {
    rec.record("determinant formula matches direct computation", {
        (|| {
            let mut cache = BlockCache::new(DEFAULT_TABLE_CAP);
            for m in 1..=3usize {
                for n in 1..=3usize {
                    for d in 0..=3u64 {
                        let direct = det_rsk_direct(m, n, d, DEFAULT_TABLE_CAP)
                            .map_err(|e| e.to_string())?;
                        let formula =
                            det_rsk(m, n, d, &mut cache).map_err(|e| e.to_string())?;
                        if direct != Int::from(formula) {
                            return fail(format!("determinant mismatch at ({m},{n},{d})"));
                        }
                    }
                }
            }
            Ok(())
        })()
    });
    rec.record("trace formula matches direct computation", {
        (|| {
            let mut cache = BlockCache::new(DEFAULT_TABLE_CAP);
            for m in 1..=3usize {
                for n in 1..=3usize {
                    for d in 0..=3u64 {
                        for inverse in [false, true] {
                            let direct = trace_rsk_direct(m, n, d, inverse, DEFAULT_TABLE_CAP)
                                .map_err(|e| e.to_string())?;
                            let formula = trace_rsk(m, n, d, inverse, &mut cache)
                                .map_err(|e| e.to_string())?;
                            if direct != formula {
                                return fail(format!("trace mismatch at ({m},{n},{d})"));
                            }
                        }
                    }
                }
            }
            Ok(())
        })()
    });
    rec.record("permutation sweep agrees with the materialized block", {
        (|| {
            for d in 1..=5u32 {
                let ones = WeightVector::new(vec![1; d as usize]);
                let pair =
                    WeightPair::new(ones.clone(), ones).map_err(|e| e.to_string())?;
                let block =
                    build_matrix(&pair, DEFAULT_TABLE_CAP).map_err(|e| e.to_string())?;
                let swept = trace_perm(d, 2, 11).map_err(|e| e.to_string())?;
                if Int::from(swept) != block.matrix().trace() {
                    return fail(format!("sweep trace mismatch at degree {d}"));
                }
            }
            Ok(())
        })()
    });
    rec.record("classification agrees with per-block diagonalizability", {
        (|| {
            for (m, n, dmax) in [(2usize, 2usize, 5u64), (2, 3, 6), (3, 3, 4)] {
                for d in 1..=dmax {
                    let predicted = classify_diagonalizable(m, n, d).diagonalizable;
                    let checked = classify_via_blocks(m, n, d, DEFAULT_TABLE_CAP)
                        .map_err(|e| e.to_string())?;
                    if predicted != checked {
                        return fail(format!("classification mismatch at ({m},{n},{d})"));
                    }
                }
            }
            Ok(())
        })()
    });
}
