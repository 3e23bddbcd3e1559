use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::field::{Coeff, Field};
use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};

/// The polynomial ring `k[X_1, ..., X_e]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    var_names: Vec<String>,
    field: Field,
}

impl Ring {
    pub fn new<S: AsRef<str>>(var_names: &[S], field: Field) -> Result<Arc<Ring>> {
        if var_names.is_empty() {
            return Err(Error::InvalidRing("at least one variable required".into()));
        }
        if var_names.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "at most {MAX_VARS} variables supported"
            )));
        }
        let mut seen = HashSet::new();
        for name in var_names {
            let name = name.as_ref();
            let valid = name
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidRing(format!("bad variable name {name:?}")));
            }
            if !seen.insert(name) {
                return Err(Error::InvalidRing(format!("duplicate variable {name:?}")));
            }
        }
        Ok(Arc::new(Ring {
            var_names: var_names.iter().map(|s| s.as_ref().to_string()).collect(),
            field,
        }))
    }

    /// `k[X, Y, Z]`.
    pub fn xyz(field: Field) -> Arc<Ring> {
        Ring::new(&["X", "Y", "Z"], field).expect("valid ring")
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|v| v == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

/// A polynomial in canonical form: nonzero coefficients, distinct monomials,
/// sorted strictly descending in degree-reverse-lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

const CANONICAL: MonomialOrder = MonomialOrder::DegRevLex;

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        Self::from_terms(ring, vec![(c, Monomial::one())])
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Self {
        assert!(index < ring.num_vars());
        Self::from_terms(ring, vec![(ring.field().one(), Monomial::var(index))])
    }

    pub fn monomial(ring: &Arc<Ring>, mono: Monomial) -> Self {
        Self::from_terms(ring, vec![(ring.field().one(), mono)])
    }

    /// Builds the canonical polynomial from an arbitrary term list:
    /// merges duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(Coeff, Monomial)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| CANONICAL.cmp(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.mono == m => last.coeff = last.coeff.add(&c),
                _ => out.push(Term { coeff: c, mono: m }),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Re-sorts and merges; the identity on canonical input.
    pub fn normalized(&self) -> Self {
        Self::from_terms(
            &self.ring,
            self.terms
                .iter()
                .map(|t| (t.coeff.clone(), t.mono))
                .collect(),
        )
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match CANONICAL.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].coeff.add(&b[j].coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: a[i].mono,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.neg(),
                    mono: t.mono,
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul(c),
                    mono: t.mono,
                })
                .collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves every
    /// monomial order, so the result stays sorted.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul(c),
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                raw.push((a.coeff.mul(&b.coeff), a.mono.mul(&b.mono)));
            }
        }
        Polynomial::from_terms(&self.ring, raw)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// The maximal term under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Result<(Coeff, Monomial)> {
        let t = match order {
            MonomialOrder::DegRevLex => self.terms.first(),
            _ => self.terms.iter().max_by(|a, b| order.cmp(&a.mono, &b.mono)),
        }
        .ok_or(Error::ZeroPolynomial)?;
        Ok((t.coeff.clone(), t.mono))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// True when all terms share one degree (the zero polynomial counts).
    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].mono.degree() == w[1].mono.degree())
    }

    /// The coefficient of the degree-zero term.
    pub fn constant_term(&self) -> Coeff {
        match self.terms.last() {
            Some(t) if t.mono.degree() == 0 => t.coeff.clone(),
            _ => self.ring.field().zero(),
        }
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .binary_search_by(|t| CANONICAL.cmp(m, &t.mono))
            .map(|i| self.terms[i].coeff.clone())
            .unwrap_or_else(|_| self.ring.field().zero())
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => self.scale(&t.coeff.inv()),
        }
    }

    /// Exact quotient by `divisor`; `None` when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (dc, dm) = divisor.leading_term(CANONICAL).ok()?;
        let dinv = dc.inv();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(lt) = rem.terms.first() {
            let q = dm.quotient_of(&lt.mono)?;
            let c = lt.coeff.mul(&dinv);
            rem = rem.add_unchecked(&divisor.mul_term(&c.neg(), &q));
            quot.push((c, q));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Same polynomial viewed in another ring with the same variables.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn q() -> Arc<Ring> {
        Ring::xyz(Field::Rationals)
    }

    #[test]
    fn difference_of_squares() {
        let r = q();
        let f = parse_poly("X+Y", &r).unwrap();
        let g = parse_poly("X-Y", &r).unwrap();
        assert_eq!(f.mul(&g).unwrap(), parse_poly("X^2-Y^2", &r).unwrap());
    }

    #[test]
    fn adding_zero_is_identity() {
        let r = q();
        let f = parse_poly("X^2*Y + 3*Z^3", &r).unwrap();
        assert_eq!(f.add(&Polynomial::zero(&r)).unwrap(), f);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = parse_poly("X", &q()).unwrap();
        let other = Ring::new(&["A", "B"], Field::Rationals).unwrap();
        let b = parse_poly("A", &other).unwrap();
        assert!(matches!(a.add(&b), Err(Error::RingMismatch)));
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch)));
    }

    #[test]
    fn leading_term_of_zero_fails() {
        assert!(matches!(
            Polynomial::zero(&q()).leading_term(MonomialOrder::DegRevLex),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn leading_terms() {
        let r = q();
        let f = parse_poly("X^2*Y + Z^3", &r).unwrap();
        let (_, lm) = f.leading_term(MonomialOrder::DegRevLex).unwrap();
        assert_eq!(lm, Monomial::from_exponents(&[2, 1, 0]));
        let g = parse_poly("Y + X", &r).unwrap();
        for o in [MonomialOrder::DegRevLex, MonomialOrder::DegLex] {
            assert_eq!(g.leading_term(o).unwrap().1, Monomial::var(0));
        }
    }

    #[test]
    fn exact_division() {
        let r = q();
        let f = parse_poly("X^3*Y - X*Y*Z^2", &r).unwrap();
        let g = parse_poly("X^2 - Z^2", &r).unwrap();
        assert_eq!(f.exact_div(&g).unwrap(), parse_poly("X*Y", &r).unwrap());
        assert!(parse_poly("X^2 + Y", &r).unwrap().exact_div(&g).is_none());
    }
}
