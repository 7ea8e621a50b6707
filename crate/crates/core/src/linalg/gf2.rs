//! Minimal GF(2)[x] arithmetic on bit-packed coefficients.

use crate::Int;
use num_integer::Integer;

/// Polynomial over GF(2); bit k of `words` is the coefficient of x^k.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { words: Vec::new() }
    }

    pub fn x() -> Self {
        Gf2Poly { words: vec![0b10] }
    }

    pub fn from_int_coeffs(coeffs: &[Int]) -> Self {
        let mut p = Gf2Poly { words: vec![0; coeffs.len() / 64 + 1] };
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_odd() {
                p.words[k / 64] |= 1 << (k % 64);
            }
        }
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> usize {
        let last = *self.words.last().expect("degree of the zero polynomial");
        (self.words.len() - 1) * 64 + (63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, k: usize) -> bool {
        self.words.get(k / 64).is_some_and(|w| w >> (k % 64) & 1 == 1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut words = vec![0u64; self.words.len().max(other.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0);
        }
        let mut p = Gf2Poly { words };
        p.trim();
        p
    }

    fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return Gf2Poly::zero();
        }
        let (q, r) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + q + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + q] |= w << r;
            if r > 0 {
                words[i + q + 1] |= w >> (64 - r);
            }
        }
        let mut p = Gf2Poly { words };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Gf2Poly::zero();
        if self.is_zero() || other.is_zero() {
            return acc;
        }
        for k in 0..=other.degree() {
            if other.coeff(k) {
                acc = acc.add(&self.shifted(k));
            }
        }
        acc
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn rem(&self, modulus: &Self) -> Self {
        assert!(!modulus.is_zero(), "reduction modulo zero");
        let md = modulus.degree();
        let mut r = self.clone();
        while !r.is_zero() {
            let rd = r.degree();
            if rd < md {
                break;
            }
            r = r.add(&modulus.shifted(rd - md));
        }
        r
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }
}
