use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gf2::Gf2Poly;
use super::Scalar;
use crate::error::{Error, Result};
use crate::{Int, Rat};

/// Dense univariate polynomial, coefficients ascending by degree, no
/// trailing zeros (the zero polynomial has an empty coefficient vector).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs: Vec<T> = (0..k).map(|_| T::zero()).collect();
        coeffs.push(c);
        Poly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out: Vec<T> =
            (0..self.coeffs.len() + other.coeffs.len() - 1).map(|_| T::zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        let mut k = T::one();
        for c in &self.coeffs[1..] {
            out.push(c.clone() * k.clone());
            k += T::one();
        }
        Poly::from_coeffs(out)
    }
}

impl Poly<Rat> {
    /// Euclidean division over the rationals.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot: Vec<Rat> = (0..rem.len() - dlen + 1).map(|_| Rat::zero()).collect();
        let lead = divisor.leading().unwrap().clone();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dlen - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let v = &c * d;
                rem[k + i] -= v;
            }
            quot[k] = c;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let lc = lc.clone();
                Poly { coeffs: self.coeffs.iter().map(|c| c / &lc).collect() }
            }
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q.mul(other).monic()
    }

    /// Conversion to an integer polynomial; `None` if any coefficient has a
    /// nontrivial denominator.
    pub fn to_int_poly(&self) -> Option<Poly<Int>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(Poly::from_coeffs(out))
    }
}

impl Poly<Int> {
    pub fn to_rational(&self) -> Poly<Rat> {
        Poly { coeffs: self.coeffs.iter().map(|c| Rat::from(c.clone())).collect() }
    }

    /// Content: gcd of the coefficients (nonnegative).
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divide by the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Poly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Exact division; `None` when the divisor does not divide exactly.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.to_rational().divrem(&divisor.to_rational());
        if !r.is_zero() {
            return None;
        }
        q.to_int_poly()
    }

    /// Human-readable form in descending powers, e.g. `t^3 + 2t^2 + 1`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if k > 0 {
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "Poly[{}]", coeffs.join(", "))
    }
}

impl fmt::Display for Poly<Int> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("t"))
    }
}

/// Gcd of integer polynomials, returned primitive with positive leading
/// coefficient (computed over the rationals, then rescaled).
pub fn int_poly_gcd(a: &Poly<Int>, b: &Poly<Int>) -> Poly<Int> {
    let g = a.to_rational().gcd(&b.to_rational());
    if g.is_zero() {
        return Poly::zero();
    }
    // monic rational gcd; clear denominators
    let mut denom = Int::one();
    for c in g.coeffs() {
        denom = denom.lcm(c.denom());
    }
    let scaled = Poly::from_coeffs(
        g.coeffs().iter().map(|c| (c * Rat::from(denom.clone())).to_integer()).collect(),
    );
    scaled.primitive_part()
}

/// Number of distinct real roots, by sign variations of the Sturm chain of
/// the squarefree part. Chain remainders are rescaled to primitive integer
/// polynomials (positive factors only, to preserve signs).
pub fn sturm_real_root_count(p: &Poly<Int>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("Sturm chain of the zero polynomial".into()));
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    let g = int_poly_gcd(p, &p.derivative());
    let sf = p
        .div_exact(&g)
        .map(|q| q.primitive_part())
        .ok_or_else(|| Error::Internal("squarefree part division failed".into()))?;
    if sf.degree() == Some(0) {
        return Ok(0);
    }
    let mut chain: Vec<Poly<Int>> = vec![sf.clone(), sf.derivative().primitive_part()];
    loop {
        let f2 = &chain[chain.len() - 2];
        let f1 = &chain[chain.len() - 1];
        if f1.is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = f2.to_rational().divrem(&f1.to_rational());
        if r.is_zero() {
            break;
        }
        // -remainder, cleared to a primitive integer polynomial; only
        // positive rescaling factors are allowed here
        let mut denom = Int::one();
        for c in r.coeffs() {
            denom = denom.lcm(c.denom());
        }
        let denom = denom.abs();
        let neg_r = Poly::from_coeffs(
            r.coeffs().iter().map(|c| -(c * Rat::from(denom.clone())).to_integer()).collect(),
        );
        chain.push(neg_r.primitive_part());
    }
    let variations = |at_minus_inf: bool| {
        let mut count = 0usize;
        let mut last: Option<bool> = None; // sign: true = positive
        for f in &chain {
            let deg = f.degree().unwrap_or(0);
            let lc = f.leading().expect("chain entries are nonzero");
            let mut positive = lc.is_positive();
            if at_minus_inf && deg % 2 == 1 {
                positive = !positive;
            }
            if let Some(prev) = last {
                if prev != positive {
                    count += 1;
                }
            }
            last = Some(positive);
        }
        count
    };
    Ok(variations(true) - variations(false))
}

/// Factor out `(t-1)^a (t+1)^b`, returning `(a, b, remainder)` with the
/// remainder vanishing at neither 1 nor -1.
pub fn strip_pm1_factors(p: &Poly<Int>) -> (u32, u32, Poly<Int>) {
    assert!(!p.is_zero(), "cannot strip factors from the zero polynomial");
    let mut rem = p.clone();
    let one = Int::one();
    let minus_one = -Int::one();
    let t_minus_1 = Poly::from_coeffs(vec![-Int::one(), Int::one()]);
    let t_plus_1 = Poly::from_coeffs(vec![Int::one(), Int::one()]);
    let mut a = 0u32;
    while rem.eval(&one).is_zero() {
        rem = rem.div_exact(&t_minus_1).expect("root at 1 implies exact division");
        a += 1;
    }
    let mut b = 0u32;
    while rem.eval(&minus_one).is_zero() {
        rem = rem.div_exact(&t_plus_1).expect("root at -1 implies exact division");
        b += 1;
    }
    (a, b, rem)
}

const DIVISOR_SCAN_BOUND: u64 = 1_000_000_000_000;

/// Rational roots of a monic integer polynomial. By the rational root
/// theorem these are integers dividing the lowest nonzero coefficient.
pub fn rational_root_constraint(p: &Poly<Int>) -> Result<Vec<Int>> {
    if !p.is_monic() {
        return Err(Error::InvalidArgument("rational root scan requires a monic polynomial".into()));
    }
    let valuation = p.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
    let stripped = Poly::from_coeffs(p.coeffs()[valuation..].to_vec());
    let mut roots: Vec<Int> = Vec::new();
    if valuation > 0 {
        roots.push(Int::zero());
    }
    let c0 = stripped.coeff(0).abs();
    if c0.is_zero() {
        return Ok(roots); // stripped polynomial is a unit power of t; unreachable
    }
    let c0u: u64 = match u64::try_from(&c0) {
        Ok(v) if v <= DIVISOR_SCAN_BOUND => v,
        _ => {
            return Err(Error::capacity(
                format!("divisor enumeration of constant term {c0}"),
                DIVISOR_SCAN_BOUND as usize,
            ))
        }
    };
    let mut divisors: Vec<u64> = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= c0u {
        if c0u % d == 0 {
            divisors.push(d);
            divisors.push(c0u / d);
        }
        d += 1;
    }
    divisors.sort_unstable();
    divisors.dedup();
    for d in divisors {
        for cand in [Int::from(d), -Int::from(d)] {
            if stripped.eval(&cand).is_zero() {
                roots.push(cand);
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// Irreducibility of the mod-2 reduction: `f` of degree `n` is reducible
/// iff it shares a factor with `x^(2^k) - x` for some `k <= n/2`.
pub fn irreducible_mod2(p: &Poly<Int>) -> Result<bool> {
    let f = Gf2Poly::from_int_coeffs(p.coeffs());
    if f.is_zero() {
        return Err(Error::InvalidArgument("polynomial vanishes modulo 2".into()));
    }
    let n = f.degree();
    if n == 0 {
        return Ok(false); // units are not irreducible
    }
    if n == 1 {
        return Ok(true);
    }
    if !f.coeff(0) {
        return Ok(false); // divisible by x
    }
    let mut xpow = Gf2Poly::x().rem(&f); // x^(2^0) mod f
    for _ in 1..=n / 2 {
        xpow = xpow.square().rem(&f); // x^(2^k) mod f
        let probe = xpow.add(&Gf2Poly::x()); // x^(2^k) - x over GF(2)
        if !f.gcd(&probe).is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}
