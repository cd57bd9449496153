//! The coefficient field Q(t): reduced fractions of polynomials with a
//! monic denominator, so equality is representation equality.

use super::poly::{IntPoly, QPoly};
use crate::error::ExactError;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly, // monic, coprime to num; zero is 0/1
}

impl RatFunc {
    /// Reduce `num/den` to the canonical representative.
    pub fn reduce(num: QPoly, den: QPoly) -> Result<RatFunc, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: QPoly::zero(),
                den: QPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, r1) = num.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.div_rem(&g);
        debug_assert!(r2.is_zero());
        let lead = den.leading().expect("nonzero denominator").recip();
        Ok(RatFunc {
            num: num.scale(&lead),
            den: den.monic(),
        })
    }

    pub fn from_int_polys(num: &IntPoly, den: &IntPoly) -> Result<RatFunc, ExactError> {
        Self::reduce(num.to_qpoly(), den.to_qpoly())
    }

    pub fn from_poly(p: &IntPoly) -> RatFunc {
        RatFunc {
            num: p.to_qpoly(),
            den: QPoly::one(),
        }
    }

    pub fn from_qpoly(p: QPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> RatFunc {
        RatFunc {
            num: QPoly::constant(c),
            den: QPoly::one(),
        }
    }

    pub fn from_i64(c: i64) -> RatFunc {
        Self::from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn zero() -> RatFunc {
        RatFunc {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    /// The scalar `t^k` (`t` is the circle / the dimension of `X`).
    pub fn t_pow(k: usize) -> RatFunc {
        RatFunc {
            num: QPoly::t_pow(k),
            den: QPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Result<RatFunc, ExactError> {
        RatFunc::reduce(self.den.clone(), self.num.clone())
    }

    /// If the value is a polynomial with integer coefficients, return it.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if !self.den.is_one() {
            return None;
        }
        let (p, d) = self.num.clear_denominators();
        if d.is_one() {
            Some(p)
        } else {
            None
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::reduce(num, den).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RatFunc::reduce(num, den).expect("nonzero denominator")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        let num = &self.num * &rhs.den;
        let den = &self.den * &rhs.num;
        RatFunc::reduce(num, den).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Integer-cleared form: "(t+1)/(t-1)", "(t^2 + t)/2", or plain "t^4 - t^2".
        let (n, dn) = self.num.clear_denominators();
        let (d, dd) = self.den.clear_denominators();
        // value = (n * dd) / (d * dn)
        let num = n.scale(&dd);
        let den = d.scale(&dn);
        let g = num::Integer::gcd(&num.content(), &den.content());
        let (num, den) = if g.is_one() || g.is_zero() {
            (num, den)
        } else {
            let div = IntPoly::constant(g);
            (num.exact_div(&div), den.exact_div(&div))
        };
        // normalize the sign into the numerator
        let den_neg = den.leading().map_or(false, |c| c.is_negative());
        let (num, den) = if den_neg { (-&num, -&den) } else { (num, den) };
        if den.degree() == Some(0) && den.leading().map_or(false, |c| c.is_one()) {
            write!(f, "{}", num)
        } else if den.degree() == Some(0) {
            write!(f, "({})/{}", num, den)
        } else {
            write!(f, "({})/({})", num, den)
        }
    }
}
