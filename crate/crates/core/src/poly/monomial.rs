//! Dense exponent vectors and graded monomial orders.

use std::cmp::Ordering;
use std::fmt;

/// Upper bound on the number of variables of a ring.
pub const MAX_VARS: usize = 16;

/// A monomial `X_0^a_0 ... X_{e-1}^a_{e-1}`; unused slots stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            degree: 0,
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).expect("exponent overflow");
            m.degree += e;
        }
        m
    }

    pub fn var(index: usize) -> Self {
        Self::var_pow(index, 1)
    }

    pub fn var_pow(index: usize, power: u32) -> Self {
        let mut m = Monomial::one();
        m.exps[index] = power as u16;
        m.degree = power;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e += *o;
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps;
        for (e, s) in exps.iter_mut().zip(self.exps.iter()) {
            *e -= *s;
        }
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for (e, (a, b)) in exps.iter_mut().zip(self.exps.iter().zip(&other.exps)) {
            *e = (*a).max(*b);
        }
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for (e, (a, b)) in exps.iter_mut().zip(self.exps.iter().zip(&other.exps)) {
            *e = (*a).min(*b);
        }
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with a positive exponent, as a bitmask.
    pub fn support(&self) -> u32 {
        let mut mask = 0;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Moves every exponent `shift` slots to the right (used to adjoin
    /// elimination variables in front).
    pub(crate) fn shifted_right(&self, shift: usize) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        exps[shift..].copy_from_slice(&self.exps[..MAX_VARS - shift]);
        debug_assert!(self.exps[MAX_VARS - shift..].iter().all(|&e| e == 0));
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    pub(crate) fn shifted_left(&self, shift: usize) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        exps[..MAX_VARS - shift].copy_from_slice(&self.exps[shift..]);
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1);
        write!(f, "x{:?}", &self.exps[..last])
    }
}

/// All monomials of total degree `degree` in `nvars` variables, in
/// descending lexicographic order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(var: usize, nvars: usize, left: u32, cur: &mut [u32], out: &mut Vec<Monomial>) {
        if var + 1 == nvars {
            cur[var] = left;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[var] = e;
            rec(var + 1, nvars, left - e, cur, out);
        }
        cur[var] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    let mut cur = vec![0u32; nvars];
    rec(0, nvars, degree, &mut cur, &mut out);
    out
}

/// A monomial order. Graded orders compare total degree first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    DegLex,
    /// Degree-reverse-lexicographic on the first `block` variables, ties
    /// broken by degree-reverse-lexicographic on the remaining ones.
    Elimination(usize),
}

fn revlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    for i in (lo..hi).rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

fn block_degree(m: &Monomial, lo: usize, hi: usize) -> u32 {
    m.exps[lo..hi].iter().map(|&e| e as u32).sum()
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| revlex_range(a, b, 0, MAX_VARS)),
            MonomialOrder::DegLex => a.degree.cmp(&b.degree).then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::Elimination(k) => block_degree(a, 0, k)
                .cmp(&block_degree(b, 0, k))
                .then_with(|| revlex_range(a, b, 0, k))
                .then_with(|| block_degree(a, k, MAX_VARS).cmp(&block_degree(b, k, MAX_VARS)))
                .then_with(|| revlex_range(a, b, k, MAX_VARS)),
        }
    }
}
