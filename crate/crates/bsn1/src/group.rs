//! The group BS(n,1) = < a, t | t^{-1} a^n t = a > as Z[1/n] x| Z.
//!
//! Every element has a unique normal form a^nu t^c with nu in Z[1/n] and
//! c in Z, and the operations are
//!
//! ```text
//! (a^nu1 t^c1)(a^nu2 t^c2) = a^{nu1 + n^{c1} nu2} t^{c1 + c2}
//! (a^nu t^c)^{-1}          = a^{-n^{-c} nu} t^{-c}
//! ```
//!
//! The faithful 2x2 rational representation a -> [[1,1],[0,1]],
//! t -> [[n,0],[0,1]] doubles as an independent cross-check: it sends
//! a^nu t^c to [[n^c, nu],[0,1]], and matrix equality is normal-form
//! equality.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Error;
use crate::ring::{LocalNumber, NContext};

/// A group element in normal form a^nu t^c.
///
/// Equality is componentwise; by uniqueness of normal forms this is group
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BsElement {
    nu: LocalNumber,
    c: i64,
}

impl BsElement {
    pub fn new(nu: LocalNumber, c: i64) -> Self {
        BsElement { nu, c }
    }

    /// a^0 t^0.
    pub fn identity() -> Self {
        BsElement {
            nu: LocalNumber::zero(),
            c: 0,
        }
    }

    /// a^nu.
    pub fn a_power(nu: LocalNumber) -> Self {
        BsElement { nu, c: 0 }
    }

    /// t^c.
    pub fn t_power(c: i64) -> Self {
        BsElement {
            nu: LocalNumber::zero(),
            c,
        }
    }

    /// The a-exponent of the normal form.
    pub fn nu(&self) -> &LocalNumber {
        &self.nu
    }

    /// The t-exponent, i.e. the image under the projection BS(n,1) ->> Z.
    pub fn t_exponent(&self) -> i64 {
        self.c
    }

    pub fn is_identity(&self) -> bool {
        self.nu.is_zero() && self.c == 0
    }

    /// Normal-form product.
    pub fn multiply(&self, rhs: &BsElement, ctx: &NContext) -> Result<BsElement, Error> {
        let nu = if rhs.nu.is_zero() {
            self.nu.clone()
        } else {
            &self.nu + ctx.pow_n(self.c)? * &rhs.nu
        };
        let c = self.c.checked_add(rhs.c).ok_or(Error::Overflow)?;
        Ok(BsElement { nu, c })
    }

    pub fn inverse(&self, ctx: &NContext) -> Result<BsElement, Error> {
        let c = self.c.checked_neg().ok_or(Error::Overflow)?;
        let nu = if self.nu.is_zero() {
            LocalNumber::zero()
        } else {
            -(ctx.pow_n(c)? * &self.nu)
        };
        Ok(BsElement { nu, c })
    }

    /// r-th power by the closed form
    /// (a^nu t^c)^r = a^{((n^{rc}-1)/(n^c-1)) nu} t^{rc}, with the c = 0
    /// branch (a^nu)^r = a^{r nu}.
    pub fn power(&self, r: i64, ctx: &NContext) -> Result<BsElement, Error> {
        if self.c == 0 {
            return Ok(BsElement::a_power(
                &self.nu * LocalNumber::from_big(BigInt::from(r)),
            ));
        }
        if r == 0 {
            return Ok(BsElement::identity());
        }
        let rc = r.checked_mul(self.c).ok_or(Error::Overflow)?;
        if self.nu.is_zero() {
            return Ok(BsElement::t_power(rc));
        }
        let num = ctx.pow_n(rc)? - LocalNumber::one();
        let den = ctx.pow_n(self.c)? - LocalNumber::one();
        let coeff = num
            .div_exact(&den, ctx)
            .expect("(n^{rc}-1)/(n^c-1) lies in Z[1/n]");
        Ok(BsElement {
            nu: coeff * &self.nu,
            c: rc,
        })
    }

    /// Left conjugation: returns h * self * h^{-1}.
    pub fn conjugate_by(&self, h: &BsElement, ctx: &NContext) -> Result<BsElement, Error> {
        h.multiply(self, ctx)?.multiply(&h.inverse(ctx)?, ctx)
    }

    /// Image under the faithful representation into GL_2(Q):
    /// a^nu t^c -> [[n^c, nu], [0, 1]].
    pub fn matrix_rep(&self, ctx: &NContext) -> Result<RationalMatrix2, Error> {
        let ncol = ctx.pow_n(self.c)?;
        Ok(RationalMatrix2::new([
            [to_rational(&ncol), to_rational(&self.nu)],
            [
                BigRational::from_integer(BigInt::from(0)),
                BigRational::from_integer(BigInt::from(1)),
            ],
        ]))
    }
}

fn to_rational(v: &LocalNumber) -> BigRational {
    BigRational::new(v.numerator().clone(), v.denominator().clone())
}

impl fmt::Display for BsElement {
    /// Canonical textual form: `a^(k/d) t^c`, exponent 1 omitted,
    /// zero-exponent factors omitted, identity printed as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        if !self.nu.is_zero() {
            if self.nu.is_one() {
                write!(f, "a")?;
            } else if self.nu.is_integer() {
                write!(f, "a^{}", self.nu)?;
            } else {
                write!(f, "a^({})", self.nu)?;
            }
            first = false;
        }
        if self.c != 0 {
            if !first {
                write!(f, " ")?;
            }
            if self.c == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{}", self.c)?;
            }
        }
        Ok(())
    }
}

/// Exact 2x2 rational matrix, the codomain of [`BsElement::matrix_rep`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix2 {
    e: [[BigRational; 2]; 2],
}

impl RationalMatrix2 {
    pub fn new(e: [[BigRational; 2]; 2]) -> Self {
        RationalMatrix2 { e }
    }

    pub fn identity() -> Self {
        let one = || BigRational::from_integer(BigInt::from(1));
        let zero = || BigRational::from_integer(BigInt::from(0));
        RationalMatrix2 {
            e: [[one(), zero()], [zero(), one()]],
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.e[i][j]
    }

    pub fn mul(&self, rhs: &RationalMatrix2) -> RationalMatrix2 {
        let mut out = Self::identity();
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = &self.e[i][0] * &rhs.e[0][j] + &self.e[i][1] * &rhs.e[1][j];
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}
