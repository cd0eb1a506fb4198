//! Exact arithmetic in the localization Z[1/n].
//!
//! Z[1/n] is the subring of Q of fractions whose denominator divides some
//! power of n. It is an Euclidean domain; its units are exactly the
//! rationals of the form +-(p_1^{a_1} ... p_m^{a_m}) with a_i in Z, where
//! p_1, ..., p_m are the primes of |n|. Every nonzero element splits as
//! (unit) * (positive integer coprime to n), which pins down a canonical
//! gcd representative and makes Bezout output reproducible.
//!
//! Values are stored as reduced fractions, not as pairs (k, p) with value
//! k/n^p: the latter is non-unique for composite n (1/3 = 2/6 for n = 6).
//! [`PowerForm`] is the derived k/n^p view, with minimal p.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arithmetic context: the base n with |n| >= 2 and the prime
/// factorization of |n|.
///
/// Negative n is fully supported. As a ring Z[1/n] = Z[1/|n|], but powers
/// of n alternate in sign, which matters to everything downstream; residue
/// computations always use absolute values while signs travel with the
/// numbers themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NContext {
    n: i64,
    primes: Vec<(u64, u32)>,
}

impl NContext {
    /// Builds the context for Z[1/n], factoring |n| by trial division.
    pub fn new(n: i64) -> Result<Self, Error> {
        if (-1..=1).contains(&n) {
            return Err(Error::UnsupportedModulus(n));
        }
        Ok(NContext {
            n,
            primes: factor(n.unsigned_abs()),
        })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn big_n(&self) -> BigInt {
        BigInt::from(self.n)
    }

    /// Distinct primes of |n| with their exponents, strictly increasing.
    pub fn primes(&self) -> &[(u64, u32)] {
        &self.primes
    }

    /// n^e for e >= 0, as an exact integer.
    pub fn pow_n_int(&self, e: u32) -> BigInt {
        self.big_n().pow(e)
    }

    /// n^e for any e, as an element of Z[1/n].
    pub fn pow_n(&self, e: i64) -> Result<LocalNumber, Error> {
        let mag: u32 = e.unsigned_abs().try_into().map_err(|_| Error::Overflow)?;
        let p = self.pow_n_int(mag);
        Ok(if e >= 0 {
            LocalNumber::from_big(p)
        } else {
            LocalNumber::make(BigInt::one(), p)
        })
    }

    /// (n^c - 1)/(n - 1), exact in Z[1/n] for either sign of c.
    ///
    /// For c >= 0 this is the integer 1 + n + ... + n^{c-1}; for c < 0 it
    /// equals -(1 + n + ... + n^{|c|-1})/n^{|c|}.
    pub fn geometric(&self, c: i64) -> Result<LocalNumber, Error> {
        if c == 0 {
            return Ok(LocalNumber::zero());
        }
        let mag: u32 = c.unsigned_abs().try_into().map_err(|_| Error::Overflow)?;
        let npow = self.pow_n_int(mag);
        let sum = (&npow - 1) / (self.big_n() - 1);
        Ok(if c > 0 {
            LocalNumber::from_big(sum)
        } else {
            LocalNumber::make(-sum, npow)
        })
    }

    /// |v| with every prime factor of n divided out; 0 maps to 0.
    pub(crate) fn strip_n_primes(&self, v: &BigInt) -> BigInt {
        let mut m = v.abs();
        if m.is_zero() {
            return m;
        }
        for &(p, _) in &self.primes {
            let p = BigInt::from(p);
            loop {
                let (q, r) = m.div_rem(&p);
                if r.is_zero() {
                    m = q;
                } else {
                    break;
                }
            }
        }
        m
    }

    /// True iff every prime factor of v divides n (vacuously for |v| = 1).
    pub(crate) fn is_n_smooth(&self, v: &BigInt) -> bool {
        !v.is_zero() && self.strip_n_primes(v).is_one()
    }
}

fn factor(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// An exact element of Z[1/n]: a reduced fraction with positive
/// denominator, the denominator factoring over the primes of |n|.
///
/// Equality is componentwise equality of the canonical (num, den) pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalNumber {
    num: BigInt,
    den: BigInt,
}

/// The k/n^p view of a [`LocalNumber`], with p minimal such that the value
/// times n^p is an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerForm {
    pub k: BigInt,
    pub p: u32,
}

/// Output of [`LocalNumber::bezout`]: d = sigma*a + tau*b with d the
/// canonical gcd of a and b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutData {
    pub d: LocalNumber,
    pub sigma: LocalNumber,
    pub tau: LocalNumber,
}

impl LocalNumber {
    /// Reduces and sign-normalizes. `den` must be nonzero.
    fn make(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return LocalNumber {
                num,
                den: BigInt::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        LocalNumber { num, den }
    }

    pub fn zero() -> Self {
        LocalNumber {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        LocalNumber {
            num: BigInt::one(),
            den: BigInt::one(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_big(BigInt::from(v))
    }

    pub fn from_big(v: BigInt) -> Self {
        LocalNumber {
            num: v,
            den: BigInt::one(),
        }
    }

    /// num/den as an element of Z[1/n]; fails when the reduced denominator
    /// has a prime factor not dividing n.
    pub fn new(num: BigInt, den: BigInt, ctx: &NContext) -> Result<Self, Error> {
        let v = Self::make(num, den);
        if v.in_ring(ctx) {
            Ok(v)
        } else {
            Err(Error::NotInRing(v.to_string()))
        }
    }

    /// k/n^p. Always lands in the ring, for any k and p >= 0.
    pub fn from_power_form(k: BigInt, p: u32, ctx: &NContext) -> Self {
        Self::make(k, ctx.pow_n_int(p))
    }

    pub fn from_ratio(num: i64, den: i64, ctx: &NContext) -> Result<Self, Error> {
        Self::new(BigInt::from(num), BigInt::from(den), ctx)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// Membership of this (already reduced) fraction in Z[1/n] for `ctx`.
    pub fn in_ring(&self, ctx: &NContext) -> bool {
        self.den.is_one() || ctx.is_n_smooth(&self.den)
    }

    /// Minimal p with self * n^p an integer, and the matching k.
    ///
    /// Fails with [`Error::ContextMismatch`] if the value does not lie in
    /// Z[1/n] for `ctx`.
    pub fn to_power_form(&self, ctx: &NContext) -> Result<PowerForm, Error> {
        let mut rem = self.den.clone();
        let mut p = 0u32;
        for &(q, e) in ctx.primes() {
            let q = BigInt::from(q);
            let mut d = 0u32;
            loop {
                let (quo, r) = rem.div_rem(&q);
                if r.is_zero() {
                    rem = quo;
                    d += 1;
                } else {
                    break;
                }
            }
            p = p.max(d.div_ceil(e));
        }
        if !rem.is_one() {
            return Err(Error::ContextMismatch);
        }
        let scaled = &self.num * ctx.pow_n_int(p);
        let (k, r) = scaled.div_rem(&self.den);
        debug_assert!(r.is_zero());
        Ok(PowerForm { k, p })
    }

    /// True iff the value is invertible in Z[1/n]: nonzero with every
    /// prime of the numerator dividing n.
    pub fn is_unit(&self, ctx: &NContext) -> bool {
        ctx.is_n_smooth(&self.num)
    }

    /// Splits a nonzero value as (unit) * (positive integer coprime to n).
    pub fn unit_decompose(&self, ctx: &NContext) -> Result<(LocalNumber, BigInt), Error> {
        if self.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let m = ctx.strip_n_primes(&self.num);
        let unit = LocalNumber::make(&self.num / &m, self.den.clone());
        Ok((unit, m))
    }

    /// The positive n-free part of the numerator; 0 for the zero value.
    pub fn m_part(&self, ctx: &NContext) -> BigInt {
        ctx.strip_n_primes(&self.num)
    }

    /// Multiplicative inverse, defined exactly on units.
    pub fn invert_unit(&self, ctx: &NContext) -> Result<LocalNumber, Error> {
        if !self.is_unit(ctx) {
            return Err(Error::NotAUnit(self.to_string()));
        }
        Ok(Self::make(self.den.clone(), self.num.clone()))
    }

    /// Canonical gcd: the positive n-free integer generator of the ideal
    /// (a, b); gcd(a, 0) is the n-free part of a, gcd(0, 0) = 0.
    pub fn gcd(&self, other: &LocalNumber, ctx: &NContext) -> LocalNumber {
        LocalNumber::from_big(self.m_part(ctx).gcd(&other.m_part(ctx)))
    }

    /// Bezout coefficients for the canonical gcd:
    /// sigma*a + tau*b = gcd(a, b) exactly. bezout(0, 0) is all zeros.
    pub fn bezout(&self, other: &LocalNumber, ctx: &NContext) -> BezoutData {
        let ma = self.m_part(ctx);
        let mb = other.m_part(ctx);
        let ext = ma.extended_gcd(&mb);
        let sigma = if self.is_zero() {
            LocalNumber::zero()
        } else {
            let (ua, _) = self.unit_decompose(ctx).expect("nonzero");
            LocalNumber::from_big(ext.x) * ua.invert_unit(ctx).expect("unit part")
        };
        let tau = if other.is_zero() {
            LocalNumber::zero()
        } else {
            let (ub, _) = other.unit_decompose(ctx).expect("nonzero");
            LocalNumber::from_big(ext.y) * ub.invert_unit(ctx).expect("unit part")
        };
        BezoutData {
            d: LocalNumber::from_big(ext.gcd),
            sigma,
            tau,
        }
    }

    /// True iff other = self * c for some c in Z[1/n]; 0 divides only 0.
    pub fn divides(&self, other: &LocalNumber, ctx: &NContext) -> bool {
        let ma = self.m_part(ctx);
        if ma.is_zero() {
            return other.is_zero();
        }
        other.m_part(ctx).is_multiple_of(&ma)
    }

    /// Exact quotient self/other when it exists in the ring.
    pub fn div_exact(&self, other: &LocalNumber, ctx: &NContext) -> Option<LocalNumber> {
        if other.is_zero() {
            return None;
        }
        let q = Self::make(&self.num * &other.den, &self.den * &other.num);
        if q.in_ring(ctx) {
            Some(q)
        } else {
            None
        }
    }

    /// The exponent r with self = n^r exactly, if one exists.
    pub fn as_power_of_n(&self, ctx: &NContext) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        rational_power_of_n(&self.num, &self.den, ctx)
    }

    /// Parses `k` or `k/d` (reduced on acceptance) into the ring.
    pub fn parse(text: &str, ctx: &NContext) -> Result<Self, Error> {
        let s = text.trim();
        let (num_str, den_str) = match s.find('/') {
            Some(pos) => (&s[..pos], Some((&s[pos + 1..], pos + 1))),
            None => (s, None),
        };
        let num = parse_bigint(num_str, 0)?;
        let den = match den_str {
            Some((d, off)) => {
                let den = parse_bigint(d, off)?;
                if den.is_zero() {
                    return Err(Error::syntax(off, "nonzero denominator".to_string()));
                }
                den
            }
            None => BigInt::one(),
        };
        Self::new(num, den, ctx)
    }
}

fn parse_bigint(s: &str, offset: usize) -> Result<BigInt, Error> {
    let t = s.trim();
    if t.is_empty() || !t.bytes().all(|b| b == b'-' || b.is_ascii_digit()) {
        return Err(Error::syntax(offset, "integer"));
    }
    t.parse::<BigInt>()
        .map_err(|_| Error::syntax(offset, "integer"))
}

/// The exponent e with num/den = n^e exactly, if one exists.
/// Both num and den must be nonzero.
pub(crate) fn rational_power_of_n(num: &BigInt, den: &BigInt, ctx: &NContext) -> Option<i64> {
    let n = ctx.big_n();
    // e >= 0: num == den * n^e
    let mut cur = den.clone();
    let mut e = 0i64;
    while cur.magnitude() < num.magnitude() {
        cur *= &n;
        e += 1;
    }
    if &cur == num {
        return Some(e);
    }
    // e < 0: den == num * n^{-e}
    let mut cur = num.clone();
    let mut e = 0i64;
    while cur.magnitude() < den.magnitude() {
        cur *= &n;
        e += 1;
    }
    if &cur == den && e > 0 {
        return Some(-e);
    }
    None
}

impl fmt::Display for LocalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl PartialOrd for LocalNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LocalNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive, so cross-multiplication is order-safe
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl Add for &LocalNumber {
    type Output = LocalNumber;
    fn add(self, rhs: &LocalNumber) -> LocalNumber {
        LocalNumber::make(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &LocalNumber {
    type Output = LocalNumber;
    fn sub(self, rhs: &LocalNumber) -> LocalNumber {
        LocalNumber::make(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &LocalNumber {
    type Output = LocalNumber;
    fn mul(self, rhs: &LocalNumber) -> LocalNumber {
        LocalNumber::make(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &LocalNumber {
    type Output = LocalNumber;
    fn neg(self) -> LocalNumber {
        LocalNumber {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LocalNumber {
            type Output = LocalNumber;
            fn $method(self, rhs: LocalNumber) -> LocalNumber {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&LocalNumber> for LocalNumber {
            type Output = LocalNumber;
            fn $method(self, rhs: &LocalNumber) -> LocalNumber {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<LocalNumber> for &LocalNumber {
            type Output = LocalNumber;
            fn $method(self, rhs: LocalNumber) -> LocalNumber {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LocalNumber {
    type Output = LocalNumber;
    fn neg(self) -> LocalNumber {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: i64) -> NContext {
        NContext::new(n).unwrap()
    }

    fn ln(num: i64, den: i64, ctx: &NContext) -> LocalNumber {
        LocalNumber::from_ratio(num, den, ctx).unwrap()
    }

    #[test]
    fn context_factors_prime_n() {
        assert_eq!(ctx(2).primes(), &[(2, 1)]);
    }

    #[test]
    fn context_factors_composite_n() {
        assert_eq!(ctx(12).primes(), &[(2, 2), (3, 1)]);
        assert_eq!(ctx(-12).primes(), &[(2, 2), (3, 1)]);
    }

    #[test]
    fn context_rejects_degenerate_n() {
        for n in [-1, 0, 1] {
            assert_eq!(NContext::new(n), Err(Error::UnsupportedModulus(n)));
        }
    }

    #[test]
    fn arithmetic_examples() {
        let c2 = ctx(2);
        assert_eq!(&ln(1, 2, &c2) + &ln(1, 2, &c2), ln(1, 1, &c2));
        assert_eq!(&ln(3, 4, &c2) * &ln(2, 1, &c2), ln(3, 2, &c2));
        let c6 = ctx(6);
        assert_eq!(&ln(1, 3, &c6) + &ln(1, 2, &c6), ln(5, 6, &c6));
    }

    #[test]
    fn fraction_must_lie_in_ring() {
        let c2 = ctx(2);
        assert!(LocalNumber::from_ratio(1, 3, &c2).is_err());
        // 2/6 reduces to 1/3, also out of the ring for n = 2
        assert!(LocalNumber::from_ratio(2, 6, &c2).is_err());
        // 3/6 reduces to 1/2, fine
        assert_eq!(LocalNumber::from_ratio(3, 6, &c2).unwrap(), ln(1, 2, &c2));
    }

    #[test]
    fn power_form_examples() {
        let c2 = ctx(2);
        let pf = ln(3, 4, &c2).to_power_form(&c2).unwrap();
        assert_eq!((pf.k, pf.p), (BigInt::from(3), 2));

        let pf = LocalNumber::zero().to_power_form(&c2).unwrap();
        assert_eq!((pf.k, pf.p), (BigInt::zero(), 0));

        let c6 = ctx(6);
        let pf = ln(1, 3, &c6).to_power_form(&c6).unwrap();
        assert_eq!((pf.k, pf.p), (BigInt::from(2), 1));
    }

    #[test]
    fn power_form_negative_n() {
        let c = ctx(-2);
        // 1/2 = (-1)/(-2)^1
        let pf = ln(1, 2, &c).to_power_form(&c).unwrap();
        assert_eq!((pf.k.clone(), pf.p), (BigInt::from(-1), 1));
        assert_eq!(LocalNumber::from_power_form(pf.k, pf.p, &c), ln(1, 2, &c));
    }

    #[test]
    fn unit_examples() {
        let c2 = ctx(2);
        assert!(ln(-8, 1, &c2).is_unit(&c2));
        assert!(!ln(3, 1, &c2).is_unit(&c2));
        assert!(!LocalNumber::zero().is_unit(&c2));
    }

    #[test]
    fn unit_decompose_examples() {
        let c2 = ctx(2);
        let (u, m) = ln(6, 1, &c2).unit_decompose(&c2).unwrap();
        assert_eq!((u, m), (ln(2, 1, &c2), BigInt::from(3)));

        let (u, m) = ln(-1, 4, &c2).unit_decompose(&c2).unwrap();
        assert_eq!((u, m), (ln(-1, 4, &c2), BigInt::one()));

        let (u, m) = ln(5, 1, &c2).unit_decompose(&c2).unwrap();
        assert_eq!((u, m), (LocalNumber::one(), BigInt::from(5)));

        assert_eq!(
            LocalNumber::zero().unit_decompose(&c2),
            Err(Error::ZeroArgument)
        );
    }

    #[test]
    fn gcd_examples() {
        let c2 = ctx(2);
        assert_eq!(ln(6, 1, &c2).gcd(&ln(4, 1, &c2), &c2), LocalNumber::one());
        let a = ln(-12, 1, &c2);
        assert_eq!(a.gcd(&LocalNumber::zero(), &c2), ln(3, 1, &c2));
        assert_eq!(ln(15, 1, &c2).gcd(&ln(9, 1, &c2), &c2), ln(3, 1, &c2));
        assert_eq!(
            LocalNumber::zero().gcd(&LocalNumber::zero(), &c2),
            LocalNumber::zero()
        );
    }

    #[test]
    fn bezout_identity_holds() {
        let c2 = ctx(2);
        for (a, b) in [
            (ln(6, 1, &c2), ln(4, 1, &c2)),
            (ln(15, 2, &c2), ln(-9, 4, &c2)),
            (ln(0, 1, &c2), ln(7, 8, &c2)),
            (ln(0, 1, &c2), ln(0, 1, &c2)),
            (ln(21, 16, &c2), ln(35, 1, &c2)),
        ] {
            let bz = a.bezout(&b, &c2);
            assert_eq!(&(&bz.sigma * &a) + &(&bz.tau * &b), bz.d);
            assert_eq!(bz.d, a.gcd(&b, &c2));
            assert!(bz.d.divides(&a, &c2));
            assert!(bz.d.divides(&b, &c2));
        }
    }

    #[test]
    fn divides_examples() {
        let c2 = ctx(2);
        assert!(ln(3, 1, &c2).divides(&ln(6, 1, &c2), &c2));
        assert!(!ln(3, 1, &c2).divides(&ln(2, 1, &c2), &c2));
        assert!(LocalNumber::zero().divides(&LocalNumber::zero(), &c2));
        assert!(!LocalNumber::zero().divides(&ln(1, 1, &c2), &c2));
    }

    #[test]
    fn invert_unit_works() {
        let c2 = ctx(2);
        let u = ln(-8, 1, &c2);
        assert_eq!(&u * &u.invert_unit(&c2).unwrap(), LocalNumber::one());
        assert_eq!(
            ln(3, 1, &c2).invert_unit(&c2),
            Err(Error::NotAUnit("3".to_string()))
        );
    }

    #[test]
    fn power_of_n_detection() {
        let c = ctx(-2);
        assert_eq!(ln(-8, 1, &c).as_power_of_n(&c), Some(3));
        assert_eq!(ln(4, 1, &c).as_power_of_n(&c), Some(2));
        assert_eq!(ln(2, 1, &c).as_power_of_n(&c), None);
        assert_eq!(ln(-1, 2, &c).as_power_of_n(&c), Some(-1));
        assert_eq!(LocalNumber::one().as_power_of_n(&c), Some(0));
        assert_eq!(ln(-1, 1, &c).as_power_of_n(&c), None);
        let c2 = ctx(2);
        assert_eq!(ln(1, 2, &c2).as_power_of_n(&c2), Some(-1));
        assert_eq!(ln(3, 1, &c2).as_power_of_n(&c2), None);
    }

    #[test]
    fn geometric_sums() {
        let c2 = ctx(2);
        assert_eq!(c2.geometric(0).unwrap(), LocalNumber::zero());
        assert_eq!(c2.geometric(3).unwrap(), ln(7, 1, &c2)); // 1 + 2 + 4
        assert_eq!(c2.geometric(-1).unwrap(), ln(-1, 2, &c2));
        let cm2 = ctx(-2);
        assert_eq!(cm2.geometric(2).unwrap(), ln(-1, 1, &cm2)); // 1 + (-2)
        assert_eq!(cm2.geometric(-2).unwrap(), ln(1, 4, &cm2));
    }

    #[test]
    fn display_and_parse_round_trip() {
        let c2 = ctx(2);
        for v in [
            ln(3, 4, &c2),
            ln(-7, 8, &c2),
            ln(5, 1, &c2),
            LocalNumber::zero(),
        ] {
            assert_eq!(LocalNumber::parse(&v.to_string(), &c2).unwrap(), v);
        }
        assert!(LocalNumber::parse("1/0", &c2).is_err());
        assert!(LocalNumber::parse("x", &c2).is_err());
        assert_eq!(
            LocalNumber::parse("1/3", &c2),
            Err(Error::NotInRing("1/3".to_string()))
        );
    }
}
