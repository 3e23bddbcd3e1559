use std::sync::{Arc, OnceLock};

use super::engine::{self, ModuleOrder, VTerm, Vector};
use super::hilbert::{hilbert_numerator, hilbert_value};
use crate::error::{Error, Result};
use crate::poly::{
    monomials_of_degree, parse_poly, Monomial, MonomialOrder, Polynomial, Ring, MAX_VARS,
};

pub(crate) fn to_vector(p: &Polynomial, comp: usize, order: &ModuleOrder) -> Vector {
    Vector::from_terms(
        p.terms()
            .iter()
            .map(|t| VTerm {
                coeff: t.coeff.clone(),
                mono: t.mono,
                comp,
            })
            .collect(),
        order,
    )
}

pub(crate) fn to_polynomial(v: &Vector, ring: &Arc<Ring>) -> Polynomial {
    Polynomial::from_terms(
        ring,
        v.terms.iter().map(|t| (t.coeff.clone(), t.mono)).collect(),
    )
}

#[derive(Clone, Debug)]
struct GbCache {
    polys: Vec<Polynomial>,
    vectors: Vec<Vector>,
}

/// An ideal given by generators, with a lazily computed reduced Gröbner
/// basis for degree-reverse-lexicographic order.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    gb: OnceLock<GbCache>,
}

const DRL: MonomialOrder = MonomialOrder::DegRevLex;

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.is_empty() {
            return Err(Error::Precondition(
                "an ideal needs at least one generator".into(),
            ));
        }
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        })
    }

    /// Parses each string as a generator.
    pub fn from_strs<S: AsRef<str>>(ring: &Arc<Ring>, gens: &[S]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|s| parse_poly(s.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::zero(ring)]).expect("valid")
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("valid")
    }

    /// The homogeneous maximal ideal `(X_1, ..., X_e)`.
    pub fn maximal(ring: &Arc<Ring>) -> Ideal {
        let gens = (0..ring.num_vars())
            .map(|i| Polynomial::var(ring, i))
            .collect();
        Ideal::new(ring, gens).expect("valid")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    fn cache(&self) -> &GbCache {
        self.gb.get_or_init(|| {
            let order = ModuleOrder::ideal(DRL);
            let vectors = engine::groebner_basis(&self.vectors(&order), &order);
            let polys = vectors
                .iter()
                .map(|v| to_polynomial(v, &self.ring))
                .collect();
            GbCache { polys, vectors }
        })
    }

    fn vectors(&self, order: &ModuleOrder) -> Vec<Vector> {
        self.gens.iter().map(|g| to_vector(g, 0, order)).collect()
    }

    /// Reduced degree-reverse-lexicographic Gröbner basis (cached).
    pub fn groebner_basis(&self) -> &[Polynomial] {
        &self.cache().polys
    }

    /// Reduced Gröbner basis for an arbitrary order; only the default order
    /// is cached.
    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Vec<Polynomial> {
        if order == DRL {
            return self.groebner_basis().to_vec();
        }
        let order = ModuleOrder::ideal(order);
        engine::groebner_basis(&self.vectors(&order), &order)
            .iter()
            .map(|v| to_polynomial(v, &self.ring))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.cache()
            .vectors
            .iter()
            .map(|v| v.terms[0].mono)
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let order = ModuleOrder::ideal(DRL);
        let r = engine::reduce(&to_vector(f, 0, &order), &self.cache().vectors, &order);
        Ok(to_polynomial(&r, &self.ring))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(Polynomial::is_zero)
    }

    pub fn is_unit(&self) -> bool {
        self.leading_monomials().iter().any(|m| m.degree() == 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub(crate) fn require_homogeneous(&self) -> Result<()> {
        match self.gens.iter().find(|g| !g.is_homogeneous()) {
            Some(g) => Err(Error::NotHomogeneous(g.to_string())),
            None => Ok(()),
        }
    }

    /// Standard monomials (outside the initial ideal) of degree `d`.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let lead = self.leading_monomials();
        monomials_of_degree(self.ring.num_vars(), d)
            .into_iter()
            .filter(|m| !lead.iter().any(|l| l.divides(m)))
            .collect()
    }

    /// Every variable has a pure power among the leading monomials.
    pub fn is_artinian(&self) -> bool {
        let lead = self.leading_monomials();
        (0..self.ring.num_vars()).all(|i| {
            lead.iter()
                .any(|m| m.degree() == 0 || (m.exp(i) == m.degree() && m.degree() > 0))
        })
    }

    /// Krull dimension of `Q/I`: the largest set of variables containing
    /// the support of no leading monomial.
    pub fn krull_dim(&self) -> usize {
        let masks: Vec<u32> = self
            .leading_monomials()
            .iter()
            .map(Monomial::support)
            .collect();
        let e = self.ring.num_vars();
        (0u32..1 << e)
            .filter(|s| masks.iter().all(|m| m & !s != 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// A minimal homogeneous generating set, taken from the generators.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        self.require_homogeneous()?;
        let order = ModuleOrder::ideal(DRL);
        let vectors = self.vectors(&order);
        let keep = engine::minimal_subset(&vectors, &order, self.ring.num_vars());
        Ok(keep.into_iter().map(|i| self.gens[i].clone()).collect())
    }

    /// Same ideal with a minimal generating set, when homogeneous.
    pub fn minimalized(&self) -> Ideal {
        match self.minimal_generators() {
            Ok(gens) if !gens.is_empty() => {
                let out = Ideal::new(&self.ring, gens).expect("same ring");
                if let Some(c) = self.gb.get() {
                    let _ = out.gb.set(c.clone());
                }
                out
            }
            _ => self.clone(),
        }
    }

    /// Degrees of the generators, ascending.
    pub fn generator_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.gens.iter().filter_map(Polynomial::degree).collect();
        d.sort_unstable();
        d
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.groebner_basis() == other.groebner_basis()
    }
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn groebner_basis(ideal: &Ideal, order: MonomialOrder) -> Vec<Polynomial> {
    ideal.groebner_basis_in(order)
}

pub fn normal_form(f: &Polynomial, ideal: &Ideal) -> Result<Polynomial> {
    ideal.normal_form(f)
}

/// Equality of ideals via their reduced degree-reverse-lexicographic bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    Ok(a.groebner_basis() == b.groebner_basis())
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    let ring = &a.ring;
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if ring.num_vars() + 1 > MAX_VARS {
        return Err(Error::InvalidRing(
            "no room for an elimination variable".into(),
        ));
    }
    let order = ModuleOrder::ideal(MonomialOrder::Elimination(1));
    let t = Monomial::var(0);
    let lift = |p: &Polynomial, times_t: bool, sign: bool| -> Vec<VTerm> {
        p.terms()
            .iter()
            .map(|term| {
                let mono = term.mono.shifted_right(1);
                VTerm {
                    coeff: if sign {
                        term.coeff.neg()
                    } else {
                        term.coeff.clone()
                    },
                    mono: if times_t { mono.mul(&t) } else { mono },
                    comp: 0,
                }
            })
            .collect()
    };
    let mut gens = Vec::new();
    for f in a.gens.iter().filter(|f| !f.is_zero()) {
        gens.push(Vector::from_terms(lift(f, true, false), &order));
    }
    for g in b.gens.iter().filter(|g| !g.is_zero()) {
        let mut terms = lift(g, false, false);
        terms.extend(lift(g, true, true));
        gens.push(Vector::from_terms(terms, &order));
    }
    let basis = engine::groebner_basis(&gens, &order);
    let polys: Vec<Polynomial> = basis
        .iter()
        .filter(|v| v.terms[0].mono.exp(0) == 0)
        .map(|v| {
            Polynomial::from_terms(
                ring,
                v.terms
                    .iter()
                    .map(|t| (t.coeff.clone(), t.mono.shifted_left(1)))
                    .collect(),
            )
        })
        .collect();
    if polys.is_empty() {
        return Ok(Ideal::zero(ring));
    }
    // The surviving elements are already the reduced basis for the default
    // order on the original variables.
    let out = Ideal::new(ring, polys.clone())?;
    let drl = ModuleOrder::ideal(DRL);
    let vectors = polys.iter().map(|p| to_vector(p, 0, &drl)).collect();
    let _ = out.gb.set(GbCache { polys, vectors });
    Ok(out.minimalized())
}

/// `J : (g)`.
fn colon_principal(j: &Ideal, g: &Polynomial) -> Result<Ideal> {
    let principal = Ideal::new(&j.ring, vec![g.clone()])?;
    let meet = intersect(j, &principal)?;
    let mut quotients = Vec::with_capacity(meet.gens.len());
    for h in &meet.gens {
        let q = h
            .exact_div(g)
            .ok_or_else(|| Error::Internal(format!("{h} is not divisible by {g}")))?;
        quotients.push(q);
    }
    Ideal::new(&j.ring, quotients)
}

/// `J : I = { f : f·I ⊆ J }`, as the intersection of `J : g` over the
/// generators `g` of `I`.
pub fn colon(j: &Ideal, i: &Ideal) -> Result<Ideal> {
    if j.ring != i.ring {
        return Err(Error::RingMismatch);
    }
    let mut acc: Option<Ideal> = None;
    for g in i.gens.iter().filter(|g| !g.is_zero()) {
        if j.contains(g)? {
            continue;
        }
        let q = colon_principal(j, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q)?,
        });
    }
    Ok(match acc {
        None => Ideal::unit(&j.ring),
        Some(a) => a.minimalized(),
    })
}

/// Hilbert function and series of `Q/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub num_vars: usize,
    /// `values[d] = h(d)` for `d` up to the last degree computed; for
    /// Artinian quotients this is the full table.
    pub values: Vec<u64>,
    /// Coefficients of `N(t)` with `HS(t) = N(t) / (1 - t)^e`, lowest first.
    pub series_numerator: Vec<i64>,
    pub krull_dim: usize,
}

impl HilbertData {
    /// `h(d)` for any `d`, from the series.
    pub fn value(&self, d: u32) -> u64 {
        hilbert_value(&self.series_numerator, self.num_vars, d) as u64
    }

    pub fn is_artinian(&self) -> bool {
        self.krull_dim == 0
    }

    /// `dim_k Q/I` for Artinian quotients.
    pub fn total(&self) -> Option<u64> {
        self.is_artinian().then(|| self.values.iter().sum())
    }
}

/// Hilbert data of `Q/I` for homogeneous `I`; values are counted from
/// standard monomials, the series from the initial ideal.
pub fn hilbert(ideal: &Ideal) -> Result<HilbertData> {
    ideal.require_homogeneous()?;
    let lead = ideal.leading_monomials();
    let series_numerator = hilbert_numerator(&lead);
    let krull_dim = if ideal.is_unit() {
        0
    } else {
        ideal.krull_dim()
    };
    let mut values = Vec::new();
    if ideal.is_unit() {
        values.push(0);
    } else if krull_dim == 0 {
        let mut d = 0;
        loop {
            let h = ideal.standard_monomials(d).len() as u64;
            if h == 0 {
                break;
            }
            values.push(h);
            d += 1;
        }
    } else {
        let top = lead.iter().map(Monomial::degree).max().unwrap_or(0) + 1;
        for d in 0..=top {
            values.push(ideal.standard_monomials(d).len() as u64);
        }
    }
    Ok(HilbertData {
        num_vars: ideal.ring.num_vars(),
        values,
        series_numerator,
        krull_dim,
    })
}

pub fn is_artinian(ideal: &Ideal) -> bool {
    ideal.is_artinian()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn ring() -> Arc<Ring> {
        Ring::xyz(Field::Rationals)
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::from_strs(&ring(), gens).unwrap()
    }

    #[test]
    fn maximal_ideal_basis() {
        let m = ideal(&["X", "Y", "Z"]);
        assert_eq!(m.groebner_basis().len(), 3);
        assert!(m.is_artinian());
    }

    #[test]
    fn quotient_dimension_four() {
        let i = ideal(&["X^2 - Y", "Y^2 - X"]);
        let lead = i.leading_monomials();
        let mut count = 0;
        for d in 0..6 {
            count += monomials_of_degree(3, d)
                .iter()
                .filter(|m| m.exp(2) == 0 && !lead.iter().any(|l| l.divides(m)))
                .count();
        }
        assert_eq!(count, 4);
    }

    #[test]
    fn normal_forms() {
        let i = ideal(&["X^2", "Y^2", "Z^3"]);
        for g in i.gens() {
            assert!(i.normal_form(g).unwrap().is_zero());
        }
        let xyz = parse_poly("X*Y*Z", i.ring()).unwrap();
        assert_eq!(i.normal_form(&xyz).unwrap(), xyz);
    }

    #[test]
    fn equality_ignores_presentation() {
        assert!(ideal_equal(&ideal(&["X"]), &ideal(&["X", "X^2"])).unwrap());
        assert!(ideal_equal(&ideal(&["X", "Y^2 + Z"]), &ideal(&["Y^2 + Z", "X"])).unwrap());
        assert!(!ideal_equal(&ideal(&["X"]), &ideal(&["Y"])).unwrap());
    }

    #[test]
    fn simple_intersections() {
        let r = intersect(&ideal(&["X"]), &ideal(&["Y"])).unwrap();
        assert!(ideal_equal(&r, &ideal(&["X*Y"])).unwrap());
        let i = ideal(&["X^2", "Y*Z"]);
        assert!(ideal_equal(&intersect(&i, &ideal(&["1"])).unwrap(), &i).unwrap());
    }

    #[test]
    fn trivial_colons() {
        let i = ideal(&["X^2", "Y*Z", "Z^3"]);
        assert!(ideal_equal(&colon(&i, &ideal(&["1"])).unwrap(), &i).unwrap());
        assert!(colon(&i, &i).unwrap().is_unit());
    }

    #[test]
    fn hilbert_of_polynomial_ring() {
        let h = hilbert(&Ideal::zero(&ring())).unwrap();
        assert_eq!(h.krull_dim, 3);
        for d in 0..10 {
            assert_eq!(
                h.value(d) as i128,
                super::super::hilbert::binomial(d as i64 + 2, 2)
            );
        }
    }

    #[test]
    fn artinian_predicate() {
        assert!(!ideal(&["X"]).is_artinian());
        assert!(!ideal(&["X^2", "Y^3"]).is_artinian());
        assert_eq!(ideal(&["X^2", "Y^3"]).krull_dim(), 1);
        assert!(ideal(&["X^2", "Y^3", "X*Z - Z^2", "Z^4"]).is_artinian());
    }

    #[test]
    fn hilbert_rejects_inhomogeneous() {
        assert!(matches!(
            hilbert(&ideal(&["X^2 - Y"])),
            Err(Error::NotHomogeneous(_))
        ));
    }
}
