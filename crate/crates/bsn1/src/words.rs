//! Words over the generators a and t, their parser, and evaluation to
//! normal form (which is the word problem).
//!
//! Grammar, which is also the CLI's element syntax:
//!
//! ```text
//! word := term*
//! term := ('a' | 't') ('^' exp)?
//! exp  := int | '(' int '/' int ')'
//! ```
//!
//! Terms are separated by optional whitespace or `*`; the single token `1`
//! denotes the empty word. Rational exponents are accepted on `a` only and
//! must lie in Z[1/n]; t always carries an integer exponent.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::group::BsElement;
use crate::ring::{LocalNumber, NContext};

/// One parsed factor: a rational power of a, or an integer power of t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    A(LocalNumber),
    T(i64),
}

/// A word over the generators; exponents are nonzero after tokenization.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word {
    terms: Vec<Term>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_terms(terms: Vec<Term>) -> Self {
        Word {
            terms: terms
                .into_iter()
                .filter(|t| match t {
                    Term::A(x) => !x.is_zero(),
                    Term::T(e) => *e != 0,
                })
                .collect(),
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Word { terms }
    }

    pub fn parse(text: &str, ctx: &NContext) -> Result<Word, Error> {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            ctx,
        }
        .word()
    }

    /// Left fold of the group product over the terms; the result is the
    /// canonical normal form of the word.
    pub fn evaluate(&self, ctx: &NContext) -> Result<BsElement, Error> {
        let mut acc = BsElement::identity();
        for term in &self.terms {
            let factor = match term {
                Term::A(x) => BsElement::a_power(x.clone()),
                Term::T(e) => BsElement::t_power(*e),
            };
            acc = acc.multiply(&factor, ctx)?;
        }
        Ok(acc)
    }

    /// The word problem: does the word represent the trivial element?
    pub fn is_trivial(&self, ctx: &NContext) -> Result<bool, Error> {
        Ok(self.evaluate(ctx)?.is_identity())
    }
}

/// Canonical textual form of an element; `Word::parse` followed by
/// `evaluate` returns the same element.
pub fn format_element(g: &BsElement) -> String {
    g.to_string()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    ctx: &'a NContext,
}

impl<'a> Parser<'a> {
    fn skip_separators(&mut self) {
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b' ' | b'\t' | b'\n' | b'\r' | b'*' => self.pos += 1,
                _ => break,
            }
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn word(mut self) -> Result<Word, Error> {
        self.skip_separators();
        if self.peek() == Some(b'1') {
            let start = self.pos;
            self.pos += 1;
            self.skip_separators();
            if self.pos != self.bytes.len() {
                return Err(Error::syntax(start, "'1' to stand alone as the empty word"));
            }
            return Ok(Word::empty());
        }
        let mut terms = Vec::new();
        while self.pos < self.bytes.len() {
            match self.peek() {
                Some(b'a') => {
                    self.pos += 1;
                    let exp = self.a_exponent()?;
                    if !exp.is_zero() {
                        terms.push(Term::A(exp));
                    }
                }
                Some(b't') => {
                    self.pos += 1;
                    let exp = self.t_exponent()?;
                    if exp != 0 {
                        terms.push(Term::T(exp));
                    }
                }
                _ => return Err(Error::syntax(self.pos, "generator 'a' or 't'")),
            }
            self.skip_separators();
        }
        Ok(Word { terms })
    }

    fn a_exponent(&mut self) -> Result<LocalNumber, Error> {
        if self.peek() != Some(b'^') {
            return Ok(LocalNumber::one());
        }
        self.pos += 1;
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let num = self.integer_big()?;
            if self.peek() != Some(b'/') {
                return Err(Error::syntax(self.pos, "'/'"));
            }
            self.pos += 1;
            let den_pos = self.pos;
            let den = self.integer_big()?;
            if den.is_zero() {
                return Err(Error::syntax(den_pos, "nonzero denominator"));
            }
            if self.peek() != Some(b')') {
                return Err(Error::syntax(self.pos, "')'"));
            }
            self.pos += 1;
            LocalNumber::new(num, den, self.ctx)
        } else {
            Ok(LocalNumber::from_big(self.integer_big()?))
        }
    }

    fn t_exponent(&mut self) -> Result<i64, Error> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        if self.peek() == Some(b'(') {
            return Err(Error::syntax(self.pos, "integer exponent for 't'"));
        }
        let start = self.pos;
        let v = self.integer_big()?;
        i64::try_from(&v).map_err(|_| Error::syntax(start, "machine-sized integer"))
    }

    fn integer_big(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(Error::syntax(self.pos, "integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii slice");
        text.parse::<BigInt>()
            .map_err(|_| Error::syntax(start, "integer"))
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
    fn parse_examples() {
        let c2 = ctx(2);
        let w = Word::parse("t^-1 a^2 t", &c2).unwrap();
        assert_eq!(
            w.terms(),
            &[Term::T(-1), Term::A(ln(2, 1, &c2)), Term::T(1)]
        );

        let w = Word::parse("a^(3/4)t^2", &c2).unwrap();
        assert_eq!(w.terms(), &[Term::A(ln(3, 4, &c2)), Term::T(2)]);

        assert_eq!(
            Word::parse("a^(1/3)", &c2),
            Err(Error::NotInRing("1/3".to_string()))
        );
    }

    #[test]
    fn parse_separators_and_empty() {
        let c2 = ctx(2);
        assert_eq!(Word::parse("1", &c2).unwrap(), Word::empty());
        assert_eq!(Word::parse("  1  ", &c2).unwrap(), Word::empty());
        assert_eq!(Word::parse("", &c2).unwrap(), Word::empty());
        let w1 = Word::parse("a*t^2*a^-1", &c2).unwrap();
        let w2 = Word::parse("a t^2 a^-1", &c2).unwrap();
        assert_eq!(w1, w2);
        // zero exponents vanish at tokenization
        assert_eq!(Word::parse("a^0 t^0", &c2).unwrap(), Word::empty());
    }

    #[test]
    fn parse_errors_report_position() {
        let c2 = ctx(2);
        match Word::parse("a^(1/2) b", &c2) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 8),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            Word::parse("t^(1/2)", &c2),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            Word::parse("a^(1/0)", &c2),
            Err(Error::Syntax { position: 5, .. })
        ));
        assert!(matches!(Word::parse("a^", &c2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("1 a", &c2), Err(Error::Syntax { .. })));
    }

    #[test]
    fn evaluate_examples() {
        let c2 = ctx(2);
        let eval = |s: &str| Word::parse(s, &c2).unwrap().evaluate(&c2).unwrap();
        assert_eq!(eval("t^-1 a^2 t"), BsElement::a_power(ln(1, 1, &c2)));
        assert_eq!(eval("a a^-1"), BsElement::identity());
        assert_eq!(eval("t a t^-1"), BsElement::a_power(ln(2, 1, &c2)));
    }

    #[test]
    fn word_problem_examples() {
        let c2 = ctx(2);
        let trivial = |s: &str| Word::parse(s, &c2).unwrap().is_trivial(&c2).unwrap();
        assert!(trivial("t^-1 a^2 t a^-1"));
        assert!(!trivial("a"));
        assert!(trivial("t^-2 a^4 t^2 a^-1"));
    }

    #[test]
    fn format_round_trips() {
        let c2 = ctx(2);
        for g in [
            BsElement::identity(),
            BsElement::a_power(ln(1, 1, &c2)),
            BsElement::a_power(ln(-3, 4, &c2)),
            BsElement::new(ln(7, 2, &c2), -5),
            BsElement::t_power(1),
            BsElement::new(ln(-1, 1, &c2), 1),
        ] {
            let text = format_element(&g);
            let back = Word::parse(&text, &c2).unwrap().evaluate(&c2).unwrap();
            assert_eq!(back, g, "round trip through {text:?}");
        }
    }
}
