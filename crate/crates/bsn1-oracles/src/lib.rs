//! Independent reference implementations used by tests and the CLI's
//! `--check` flag: bounded brute-force searches, deterministic random
//! instance generation, and cross-checks through the matrix
//! representation. Production decision paths never call into this crate.
//!
//! Brute-force enumeration is one-sided by nature: a found witness proves
//! a yes, exhaustion proves nothing unless the caller supplies bounds
//! known to be complete for the instance.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bsn1::aut::Automorphism;
use bsn1::group::{BsElement, RationalMatrix2};
use bsn1::ring::{LocalNumber, NContext};
use bsn1::words::{Term, Word};

/// Box bounds for enumeration and sampling: numerators up to `max_num` in
/// absolute value, denominator n-exponents and t-exponents up to
/// `max_exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_num: u64,
    pub max_exp: u32,
}

impl SearchBounds {
    pub fn new(max_num: u64, max_exp: u32) -> Self {
        SearchBounds { max_num, max_exp }
    }
}

/// Numerators ordered by absolute value: 0, 1, -1, 2, -2, ...
fn numerators(max_num: u64) -> impl Iterator<Item = i64> {
    (0..=max_num as i64).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
}

/// t-exponents ordered by absolute value: 0, 1, -1, 2, -2, ...
fn t_exponents(max_exp: u32) -> impl Iterator<Item = i64> {
    (0..=i64::from(max_exp)).flat_map(|r| if r == 0 { vec![0] } else { vec![r, -r] })
}

/// All elements a^{num/n^e} t^r in the box, in a fixed order
/// (lexicographic in (|num|, e, |r|)). Non-canonical (num, e) pairs repeat
/// canonical values; that only costs time.
pub fn elements_in_box(ctx: &NContext, bounds: &SearchBounds) -> Vec<BsElement> {
    let mut out = Vec::new();
    for num in numerators(bounds.max_num) {
        for e in 0..=bounds.max_exp {
            let nu = LocalNumber::from_power_form(BigInt::from(num), e, ctx);
            for r in t_exponents(bounds.max_exp) {
                out.push(BsElement::new(nu.clone(), r));
            }
        }
    }
    out
}

/// First g in the box with v = g u g^{-1}.
pub fn brute_conjugator(
    u: &BsElement,
    v: &BsElement,
    bounds: &SearchBounds,
    ctx: &NContext,
) -> Option<BsElement> {
    elements_in_box(ctx, bounds)
        .into_iter()
        .find(|g| verify_conjugacy(u, v, g, ctx))
}

/// First g in the box with v = (g phi)^{-1} u g.
pub fn brute_twisted_conjugator(
    u: &BsElement,
    v: &BsElement,
    f: &Automorphism,
    bounds: &SearchBounds,
    ctx: &NContext,
) -> Option<BsElement> {
    elements_in_box(ctx, bounds)
        .into_iter()
        .find(|g| verify_twisted_conjugacy(u, v, f, g, ctx))
}

/// All automorphisms phi_{alpha,beta} with alpha = +-(prod p_i^{a_i}),
/// |a_i| <= max_exp, and beta in the usual box.
pub fn automorphisms_in_box(ctx: &NContext, bounds: &SearchBounds) -> Vec<Automorphism> {
    let mut alphas: Vec<LocalNumber> = vec![LocalNumber::one()];
    for &(p, _) in ctx.primes() {
        let mut next = Vec::new();
        for a in alphas {
            for e in -i64::from(bounds.max_exp)..=i64::from(bounds.max_exp) {
                let factor = prime_power(p, e, ctx);
                next.push(&a * &factor);
            }
        }
        alphas = next;
    }
    let mut out = Vec::new();
    for alpha in alphas {
        for sign in [1i64, -1] {
            let signed = &alpha * &LocalNumber::from_int(sign);
            for num in numerators(bounds.max_num) {
                for e in 0..=bounds.max_exp {
                    let beta = LocalNumber::from_power_form(BigInt::from(num), e, ctx);
                    out.push(
                        Automorphism::new(signed.clone(), beta, ctx)
                            .expect("alpha is a unit by construction"),
                    );
                }
            }
        }
    }
    out
}

/// p^e as a ring element; p must be one of the primes of the context.
fn prime_power(p: u64, e: i64, ctx: &NContext) -> LocalNumber {
    let mag = BigInt::from(p).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        LocalNumber::from_big(mag)
    } else {
        LocalNumber::new(BigInt::one(), mag, ctx).expect("prime of n is invertible")
    }
}

/// First automorphism in the box with apply(f, u) = v.
pub fn brute_orbit_aut(
    u: &BsElement,
    v: &BsElement,
    bounds: &SearchBounds,
    ctx: &NContext,
) -> Option<Automorphism> {
    automorphisms_in_box(ctx, bounds)
        .into_iter()
        .find(|f| verify_orbit(u, v, f, ctx))
}

/// First lambda in the box with alpha + delta lambda a unit.
pub fn brute_coset_unit(
    alpha: &LocalNumber,
    delta: &LocalNumber,
    bounds: &SearchBounds,
    ctx: &NContext,
) -> Option<LocalNumber> {
    for num in numerators(bounds.max_num) {
        for e in 0..=bounds.max_exp {
            let lambda = LocalNumber::from_power_form(BigInt::from(num), e, ctx);
            if (alpha + delta * &lambda).is_unit(ctx) {
                return Some(lambda);
            }
        }
    }
    None
}

/// Uniform element of the box, deterministic for a fixed generator state.
pub fn random_element<R: Rng>(ctx: &NContext, bounds: &SearchBounds, rng: &mut R) -> BsElement {
    let num = rng.gen_range(-(bounds.max_num as i64)..=bounds.max_num as i64);
    let e = rng.gen_range(0..=bounds.max_exp);
    let c = rng.gen_range(-i64::from(bounds.max_exp)..=i64::from(bounds.max_exp));
    BsElement::new(LocalNumber::from_power_form(BigInt::from(num), e, ctx), c)
}

/// Uniform automorphism: alpha = +-(prod p_i^{a_i}) with |a_i| <= max_exp,
/// beta a uniform box element.
pub fn random_aut<R: Rng>(ctx: &NContext, bounds: &SearchBounds, rng: &mut R) -> Automorphism {
    let mut alpha = if rng.gen::<bool>() {
        LocalNumber::one()
    } else {
        LocalNumber::from_int(-1)
    };
    for &(p, _) in ctx.primes() {
        let e = rng.gen_range(-i64::from(bounds.max_exp)..=i64::from(bounds.max_exp));
        alpha = &alpha * &prime_power(p, e, ctx);
    }
    let num = rng.gen_range(-(bounds.max_num as i64)..=bounds.max_num as i64);
    let e = rng.gen_range(0..=bounds.max_exp);
    let beta = LocalNumber::from_power_form(BigInt::from(num), e, ctx);
    Automorphism::new(alpha, beta, ctx).expect("alpha is a unit by construction")
}

/// Convenience seeded variants with a reproducible stream.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_element_seeded(ctx: &NContext, bounds: &SearchBounds, seed: u64) -> BsElement {
    random_element(ctx, bounds, &mut seeded_rng(seed))
}

/// The set { u mod delta : u a unit of Z[1/n] that is an integer },
/// computed independently of the decision module by closing
/// { +-1, p_1, ..., p_m } under multiplication mod delta.
pub fn modular_unit_residues(delta: &BigInt, ctx: &NContext) -> BTreeSet<BigInt> {
    assert!(delta >= &BigInt::one());
    let mut set = BTreeSet::new();
    let mut queue = vec![
        BigInt::one().mod_floor(delta),
        (-BigInt::one()).mod_floor(delta),
    ];
    while let Some(r) = queue.pop() {
        if !set.insert(r.clone()) {
            continue;
        }
        for &(p, _) in ctx.primes() {
            queue.push((&r * BigInt::from(p)).mod_floor(delta));
        }
    }
    set
}

/// Independent check of a coset-of-units instance with integer alpha = k:
/// the coset k + delta Z[1/n] contains a unit iff k n^z mod m(delta) hits
/// a unit residue for some z, where m(delta) is the positive n-free part
/// of delta. Exact (not bounded): the powers of n mod m(delta) cycle.
pub fn coset_contains_unit_by_residues(k: &BigInt, delta: &LocalNumber, ctx: &NContext) -> bool {
    if delta.is_zero() {
        return LocalNumber::from_big(k.clone()).is_unit(ctx);
    }
    let m = delta.m_part(ctx);
    if m.is_one() {
        return true;
    }
    let residues = modular_unit_residues(&m, ctx);
    let mut seen = BTreeSet::new();
    let mut cur = k.mod_floor(&m);
    let n = ctx.big_n();
    while seen.insert(cur.clone()) {
        if residues.contains(&cur) {
            return true;
        }
        cur = (cur * &n).mod_floor(&m);
    }
    false
}

/// v = g u g^{-1}, checked by direct multiplication.
pub fn verify_conjugacy(u: &BsElement, v: &BsElement, g: &BsElement, ctx: &NContext) -> bool {
    match u.conjugate_by(g, ctx) {
        Ok(w) => &w == v,
        Err(_) => false,
    }
}

/// v = (g phi)^{-1} u g, checked by direct multiplication.
pub fn verify_twisted_conjugacy(
    u: &BsElement,
    v: &BsElement,
    f: &Automorphism,
    g: &BsElement,
    ctx: &NContext,
) -> bool {
    let result = (|| {
        f.apply(g, ctx)?
            .inverse(ctx)?
            .multiply(u, ctx)?
            .multiply(g, ctx)
    })();
    match result {
        Ok(w) => &w == v,
        Err(_) => false,
    }
}

/// apply(f, u) = v, checked by direct application.
pub fn verify_orbit(u: &BsElement, v: &BsElement, f: &Automorphism, ctx: &NContext) -> bool {
    match f.apply(u, ctx) {
        Ok(w) => &w == v,
        Err(_) => false,
    }
}

/// Evaluates a word entirely inside the matrix representation and reports
/// whether the product is the identity matrix. Independent route for the
/// word problem.
pub fn verify_word_trivial(word: &Word, ctx: &NContext) -> Option<bool> {
    let mut acc = RationalMatrix2::identity();
    for term in word.terms() {
        let m = match term {
            Term::A(x) => BsElement::a_power(x.clone()).matrix_rep(ctx).ok()?,
            Term::T(e) => BsElement::t_power(*e).matrix_rep(ctx).ok()?,
        };
        acc = acc.mul(&m);
    }
    Some(acc.is_identity())
}

/// Recovers the group element from its matrix image, if the matrix is one.
pub fn matrix_to_element(m: &RationalMatrix2, ctx: &NContext) -> Option<BsElement> {
    if !m.entry(1, 0).is_zero() || !m.entry(1, 1).is_one() {
        return None;
    }
    let scale = m.entry(0, 0);
    let scale_ln = LocalNumber::new(scale.numer().clone(), scale.denom().clone(), ctx).ok()?;
    let c = scale_ln.as_power_of_n(ctx)?;
    let nu = m.entry(0, 1);
    let nu_ln = LocalNumber::new(nu.numer().clone(), nu.denom().clone(), ctx).ok()?;
    Some(BsElement::new(nu_ln, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: i64) -> NContext {
        NContext::new(n).unwrap()
    }

    #[test]
    fn brute_conjugator_examples() {
        let c2 = ctx(2);
        let a = BsElement::a_power(LocalNumber::one());
        let a2 = BsElement::a_power(LocalNumber::from_int(2));
        let a3 = BsElement::a_power(LocalNumber::from_int(3));
        let bounds = SearchBounds::new(4, 3);
        assert_eq!(
            brute_conjugator(&a, &a2, &bounds, &c2),
            Some(BsElement::t_power(1))
        );
        assert_eq!(
            brute_conjugator(&a, &a, &bounds, &c2),
            Some(BsElement::identity())
        );
        assert_eq!(brute_conjugator(&a, &a3, &bounds, &c2), None);
    }

    #[test]
    fn brute_twisted_finds_planted_witness() {
        let c2 = ctx(2);
        let u = BsElement::new(LocalNumber::from_int(3), 1);
        let w = BsElement::new(LocalNumber::from_int(1), -1);
        let f = Automorphism::new(
            LocalNumber::from_int(2),
            LocalNumber::from_ratio(1, 2, &c2).unwrap(),
            &c2,
        )
        .unwrap();
        let v = f
            .apply(&w, &c2)
            .unwrap()
            .inverse(&c2)
            .unwrap()
            .multiply(&u, &c2)
            .unwrap()
            .multiply(&w, &c2)
            .unwrap();
        let found = brute_twisted_conjugator(&u, &v, &f, &SearchBounds::new(3, 2), &c2)
            .expect("planted witness within bounds");
        assert!(verify_twisted_conjugacy(&u, &v, &f, &found, &c2));
    }

    #[test]
    fn brute_orbit_example() {
        let c2 = ctx(2);
        let a = BsElement::a_power(LocalNumber::one());
        let a4 = BsElement::a_power(LocalNumber::from_int(4));
        let found = brute_orbit_aut(&a, &a4, &SearchBounds::new(2, 2), &c2).unwrap();
        assert_eq!(found.alpha(), &LocalNumber::from_int(4));
    }

    #[test]
    fn brute_coset_example() {
        let c2 = ctx(2);
        let found = brute_coset_unit(
            &LocalNumber::from_int(3),
            &LocalNumber::from_int(7),
            &SearchBounds::new(4, 2),
            &c2,
        );
        assert_eq!(found, Some(LocalNumber::from_int(-1)));
    }

    #[test]
    fn unit_residue_closures() {
        let c2 = ctx(2);
        let set = modular_unit_residues(&BigInt::from(7), &c2);
        let expect: BTreeSet<BigInt> = (1..=6).map(BigInt::from).collect();
        assert_eq!(set, expect);

        let c3 = ctx(3);
        let set = modular_unit_residues(&BigInt::from(8), &c3);
        let expect: BTreeSet<BigInt> = [1, 3, 5, 7].into_iter().map(BigInt::from).collect();
        assert_eq!(set, expect);

        let set = modular_unit_residues(&BigInt::one(), &c2);
        let expect: BTreeSet<BigInt> = [0].into_iter().map(BigInt::from).collect();
        assert_eq!(set, expect);
    }

    #[test]
    fn random_is_reproducible_and_canonical() {
        let c6 = ctx(6);
        let bounds = SearchBounds::new(1000, 5);
        let g1 = random_element_seeded(&c6, &bounds, 42);
        let g2 = random_element_seeded(&c6, &bounds, 42);
        assert_eq!(g1, g2);
        assert!(g1.nu().in_ring(&c6));

        let mut rng = seeded_rng(7);
        for _ in 0..50 {
            let f = random_aut(&c6, &bounds, &mut rng);
            assert!(f.alpha().is_unit(&c6));
        }
    }

    #[test]
    fn matrix_round_trip() {
        let c2 = ctx(2);
        let g = BsElement::new(LocalNumber::from_ratio(5, 8, &c2).unwrap(), -3);
        let m = g.matrix_rep(&c2).unwrap();
        assert_eq!(matrix_to_element(&m, &c2), Some(g));
    }
}
