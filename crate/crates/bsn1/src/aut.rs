//! The automorphism group of BS(n,1).
//!
//! Every automorphism has the form phi_{alpha,beta} with alpha a unit of
//! Z[1/n] and beta in Z[1/n], acting by a -> a^alpha, t -> a^beta t; on
//! normal forms,
//!
//! ```text
//! (a^nu t^c) phi_{alpha,beta} = a^{nu alpha + ((n^c - 1)/(n - 1)) beta} t^c.
//! ```
//!
//! Automorphisms act on the right, matching the convention that maps are
//! written after their argument: `compose(f, g)` applies f first, then g,
//! and equals phi_{alpha_f alpha_g, beta_f alpha_g + beta_g}. This is the
//! same law as multiplying the lower-triangular matrices
//! [[alpha, 0], [beta, 1]] over Z[1/n].
//!
//! Inner automorphisms: left conjugation by a^beta t^r is
//! phi_{n^r, (1-n) beta}, so Inn = { phi_{alpha,beta} : alpha = n^r,
//! (n-1) | beta }.

use std::fmt;

use crate::error::Error;
use crate::group::BsElement;
use crate::ring::{LocalNumber, NContext};

/// phi_{alpha,beta}: a -> a^alpha, t -> a^beta t, with alpha a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    alpha: LocalNumber,
    beta: LocalNumber,
}

impl Automorphism {
    /// Validates that alpha is invertible in Z[1/n].
    pub fn new(alpha: LocalNumber, beta: LocalNumber, ctx: &NContext) -> Result<Self, Error> {
        if !alpha.is_unit(ctx) {
            return Err(Error::NotAUnit(alpha.to_string()));
        }
        Ok(Automorphism { alpha, beta })
    }

    pub fn identity() -> Self {
        Automorphism {
            alpha: LocalNumber::one(),
            beta: LocalNumber::zero(),
        }
    }

    pub fn alpha(&self) -> &LocalNumber {
        &self.alpha
    }

    pub fn beta(&self) -> &LocalNumber {
        &self.beta
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_one() && self.beta.is_zero()
    }

    /// self first, then `then`.
    pub fn compose(&self, then: &Automorphism) -> Automorphism {
        Automorphism {
            alpha: &self.alpha * &then.alpha,
            beta: &(&self.beta * &then.alpha) + &then.beta,
        }
    }

    /// The inverse phi_{alpha^{-1}, -beta alpha^{-1}}.
    pub fn invert(&self, ctx: &NContext) -> Automorphism {
        let alpha_inv = self
            .alpha
            .invert_unit(ctx)
            .expect("alpha is a unit by construction");
        Automorphism {
            beta: -(&self.beta * &alpha_inv),
            alpha: alpha_inv,
        }
    }

    /// Image of a group element; the t-exponent is preserved.
    pub fn apply(&self, g: &BsElement, ctx: &NContext) -> Result<BsElement, Error> {
        let scaled = g.nu() * &self.alpha;
        let nu = if self.beta.is_zero() {
            scaled
        } else {
            let mu = ctx.geometric(g.t_exponent())?;
            &scaled + &(&mu * &self.beta)
        };
        Ok(BsElement::new(nu, g.t_exponent()))
    }

    /// The inner automorphism x -> g x g^{-1}, i.e. phi_{n^r, (1-n) beta}
    /// for g = a^beta t^r.
    pub fn inner_of(g: &BsElement, ctx: &NContext) -> Result<Automorphism, Error> {
        let alpha = ctx.pow_n(g.t_exponent())?;
        let one_minus_n = LocalNumber::from_big(1 - ctx.big_n());
        Ok(Automorphism {
            alpha,
            beta: &one_minus_n * g.nu(),
        })
    }

    /// Membership in Inn(BS(n,1)): alpha must be an exact power of n and
    /// beta a multiple of n - 1 in Z[1/n].
    pub fn is_inner(&self, ctx: &NContext) -> bool {
        self.alpha.as_power_of_n(ctx).is_some()
            && LocalNumber::from_big(ctx.big_n() - 1).divides(&self.beta, ctx)
    }

    /// Parses the literal form `phi(alpha; beta)` with `k` or `k/d`
    /// components.
    pub fn parse(text: &str, ctx: &NContext) -> Result<Self, Error> {
        let s = text.trim();
        let inner = s
            .strip_prefix("phi(")
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| Error::syntax(0, "automorphism literal phi(alpha; beta)"))?;
        let (alpha_str, beta_str) = inner
            .split_once(';')
            .ok_or_else(|| Error::syntax(4, "';' between alpha and beta"))?;
        let alpha = LocalNumber::parse(alpha_str, ctx)?;
        let beta = LocalNumber::parse(beta_str, ctx)?;
        Automorphism::new(alpha, beta, ctx)
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi({}; {})", self.alpha, self.beta)
    }
}
