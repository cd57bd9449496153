//! Dense univariate polynomials in the parameter `t`, with integer or
//! rational coefficients. Degrees stay small in this artifact, so dense
//! storage wins.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `t` with arbitrary-precision integer coefficients.
/// `coeffs[k]` is the coefficient of `t^k`; no trailing zeros are stored,
/// so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `t^k`.
    pub fn t_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division; panics if the division leaves a remainder. Used by
    /// the Bareiss elimination, where exactness is guaranteed.
    pub fn exact_div(&self, den: &IntPoly) -> IntPoly {
        assert!(!den.is_zero(), "exact_div by zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let dn = den.coeffs.len();
        let mut rem = self.coeffs.clone();
        assert!(rem.len() >= dn, "exact_div: degree too small");
        let qn = rem.len() - dn + 1;
        let mut quot = vec![BigInt::zero(); qn];
        let lead = &den.coeffs[dn - 1];
        for k in (0..qn).rev() {
            let top = rem[k + dn - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num::Integer::div_rem(&top, lead);
            assert!(r.is_zero(), "exact_div: inexact leading division");
            for (idx, dc) in den.coeffs.iter().enumerate() {
                rem[k + idx] -= &q * dc;
            }
            quot[k] = q;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "exact_div: nonzero remainder");
        IntPoly::from_coeffs(quot)
    }

    /// gcd of all coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| num::Integer::gcd(&acc, c))
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        IntPoly::from_coeffs(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        IntPoly::from_coeffs(out)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn fmt_terms<C, F>(f: &mut fmt::Formatter<'_>, coeffs: &[C], is_zero: F) -> fmt::Result
where
    C: fmt::Display + Signed,
    F: Fn(&C) -> bool,
{
    // Canonical text form: descending degree, explicit signs, e.g. "t^4 - t^2".
    let mut first = true;
    for k in (0..coeffs.len()).rev() {
        let c = &coeffs[k];
        if is_zero(c) {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mag_str = format!("{}", mag);
        match k {
            0 => write!(f, "{}", mag_str)?,
            _ => {
                if mag_str != "1" {
                    write!(f, "{}*", mag_str)?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", k)?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, |c: &BigInt| c.is_zero())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, |c: &BigRational| c.is_zero())
    }
}

/// Polynomial in `t` with rational coefficients, used where reductions in
/// Q[t] are needed (gcds, monic normalization).
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn t_pow(k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Make the leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, den: &QPoly) -> (QPoly, QPoly) {
        assert!(!den.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.coeffs.len() < den.coeffs.len() {
            return (QPoly::zero(), self.clone());
        }
        let dn = den.coeffs.len();
        let lead = den.coeffs[dn - 1].recip();
        let mut rem = self.coeffs.clone();
        let qn = rem.len() - dn + 1;
        let mut quot = vec![BigRational::zero(); qn];
        for k in (0..qn).rev() {
            let q = &rem[k + dn - 1] * &lead;
            if q.is_zero() {
                continue;
            }
            for (idx, dc) in den.coeffs.iter().enumerate() {
                let prod = &q * dc;
                rem[k + idx] -= prod;
            }
            quot[k] = q;
        }
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    /// Monic gcd in Q[t].
    /// Polynomial composition self(p(t)), by Horner evaluation.
    pub fn compose(&self, p: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for c in self.coeffs.iter().rev() {
            out = &(&out * p) + &QPoly::constant(c.clone());
        }
        out
    }

    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Clear denominators: returns `(p, d)` with `p` an integer polynomial,
    /// `d` a positive integer, and `self = p / d` with gcd(content(p), d) = 1.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        if self.is_zero() {
            return (IntPoly::zero(), BigInt::one());
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num::Integer::lcm(&lcm, c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let p = IntPoly::from_coeffs(ints);
        let g = num::Integer::gcd(&p.content(), &lcm);
        let p = IntPoly::from_coeffs(p.coeffs.iter().map(|c| c / &g).collect());
        (p, lcm / g)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_canonical() {
        let p = &IntPoly::t_pow(4) - &IntPoly::t_pow(2);
        assert_eq!(p.to_string(), "t^4 - t^2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64s(&[1, 2]).to_string(), "2*t + 1");
        assert_eq!(IntPoly::from_i64s(&[-1, 0, 1]).to_string(), "t^2 - 1");
    }

    #[test]
    fn exact_div_roundtrip() {
        let a = IntPoly::from_i64s(&[-1, 0, 1]); // t^2 - 1
        let b = IntPoly::from_i64s(&[1, 1]); // t + 1
        assert_eq!(a.exact_div(&b), IntPoly::from_i64s(&[-1, 1]));
    }

    #[test]
    fn qpoly_gcd() {
        // gcd(2t^2 - 2, 2t - 2) = t - 1 (monic)
        let a = IntPoly::from_i64s(&[-2, 0, 2]).to_qpoly();
        let b = IntPoly::from_i64s(&[-2, 2]).to_qpoly();
        let g = a.gcd(&b);
        assert_eq!(g, IntPoly::from_i64s(&[-1, 1]).to_qpoly());
    }
}
