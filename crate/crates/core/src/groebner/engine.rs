//! Buchberger's algorithm for submodules of graded free modules.
//!
//! Ideals are handled as submodules of a rank-one module, so a single
//! engine serves Gröbner bases, normal forms and syzygy computations.

use std::cmp::Ordering;

use crate::linalg::LinearSpan;
use crate::poly::{monomials_of_degree, Coeff, Monomial, MonomialOrder};

/// One term `c * m * e_comp` of a module element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VTerm {
    pub coeff: Coeff,
    pub mono: Monomial,
    pub comp: usize,
}

/// A monomial order on a free module with twisted basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub mono: MonomialOrder,
    /// Position-over-term (smaller component index is larger) when true;
    /// otherwise term-over-position using the twisted degree first.
    pub position_first: bool,
    pub twists: Vec<u32>,
}

impl ModuleOrder {
    /// The order used for ideals: rank one, no twist.
    pub fn ideal(mono: MonomialOrder) -> Self {
        ModuleOrder {
            mono,
            position_first: true,
            twists: vec![0],
        }
    }

    pub fn position_over_term(mono: MonomialOrder, twists: Vec<u32>) -> Self {
        ModuleOrder {
            mono,
            position_first: true,
            twists,
        }
    }

    #[inline]
    pub fn degree(&self, m: &Monomial, comp: usize) -> u32 {
        m.degree() + self.twists.get(comp).copied().unwrap_or(0)
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: usize, bm: &Monomial, bc: usize) -> Ordering {
        if self.position_first {
            bc.cmp(&ac).then_with(|| self.mono.cmp(am, bm))
        } else {
            self.degree(am, ac)
                .cmp(&self.degree(bm, bc))
                .then_with(|| self.mono.cmp(am, bm))
                .then_with(|| bc.cmp(&ac))
        }
    }

    #[inline]
    fn cmp_terms(&self, a: &VTerm, b: &VTerm) -> Ordering {
        self.cmp(&a.mono, a.comp, &b.mono, b.comp)
    }
}

/// A module element with terms sorted strictly descending.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    pub terms: Vec<VTerm>,
}

impl Vector {
    pub fn from_terms(mut terms: Vec<VTerm>, order: &ModuleOrder) -> Vector {
        terms.sort_by(|a, b| order.cmp_terms(b, a));
        let mut out: Vec<VTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono && last.comp == t.comp => {
                    last.coeff = last.coeff.add(&t.coeff)
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Vector { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    pub fn scale(&self, c: &Coeff) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    coeff: t.coeff.mul(c),
                    mono: t.mono,
                    comp: t.comp,
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> Vector {
        match self.lead() {
            Some(t) if !t.coeff.is_one() => self.scale(&t.coeff.inv()),
            _ => self.clone(),
        }
    }

    /// True when every term has the same twisted degree.
    pub fn is_homogeneous(&self, order: &ModuleOrder) -> bool {
        self.terms
            .windows(2)
            .all(|w| order.degree(&w[0].mono, w[0].comp) == order.degree(&w[1].mono, w[1].comp))
    }

    pub fn degree(&self, order: &ModuleOrder) -> Option<u32> {
        self.lead().map(|t| order.degree(&t.mono, t.comp))
    }

    /// `self - c * m * g`.
    pub fn sub_mul(&self, c: &Coeff, m: &Monomial, g: &Vector, order: &ModuleOrder) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let a = &self.terms;
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < g.terms.len() {
            let gt = &g.terms[j];
            let gm = gt.mono.mul(m);
            match order.cmp(&a[i].mono, a[i].comp, &gm, gt.comp) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(VTerm {
                        coeff: gt.coeff.mul(c).neg(),
                        mono: gm,
                        comp: gt.comp,
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = a[i].coeff.sub(&gt.coeff.mul(c));
                    if !coeff.is_zero() {
                        out.push(VTerm {
                            coeff,
                            mono: gm,
                            comp: gt.comp,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for gt in &g.terms[j..] {
            out.push(VTerm {
                coeff: gt.coeff.mul(c).neg(),
                mono: gt.mono.mul(m),
                comp: gt.comp,
            });
        }
        Vector { terms: out }
    }

    pub fn add(&self, other: &Vector, order: &ModuleOrder) -> Vector {
        let Some(field) = self.lead().or(other.lead()).map(|t| t.coeff.field()) else {
            return Vector::default();
        };
        self.sub_mul(&field.from_i64(-1), &Monomial::one(), other, order)
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    coeff: t.coeff.mul(c),
                    mono: t.mono.mul(m),
                    comp: t.comp,
                })
                .filter(|t| !t.coeff.is_zero())
                .collect(),
        }
    }
}

/// Index of a reducer whose leading term divides `(m, comp)`.
fn find_divisor(basis: &[Vector], m: &Monomial, comp: usize) -> Option<usize> {
    basis.iter().position(|g| {
        let lt = g.lead().expect("basis elements are nonzero");
        lt.comp == comp && lt.mono.divides(m)
    })
}

/// Fully reduces `f` modulo `basis` (whose elements must be monic).
pub fn reduce(f: &Vector, basis: &[Vector], order: &ModuleOrder) -> Vector {
    let mut f = f.clone();
    let mut i = 0;
    while i < f.terms.len() {
        let t = &f.terms[i];
        match find_divisor(basis, &t.mono, t.comp) {
            Some(j) => {
                let g = &basis[j];
                let q = g.terms[0].mono.quotient_of(&t.mono).expect("divides");
                let c = t.coeff.clone();
                f = f.sub_mul(&c, &q, g, order);
            }
            None => i += 1,
        }
    }
    f
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    degree: u32,
}

fn s_vector(a: &Vector, b: &Vector, lcm: &Monomial, order: &ModuleOrder) -> Vector {
    let qa = a.terms[0].mono.quotient_of(lcm).expect("lcm");
    let qb = b.terms[0].mono.quotient_of(lcm).expect("lcm");
    let one = a.terms[0].coeff.field().one();
    a.mul_term(&one, &qa).sub_mul(&one, &qb, b, order)
}

/// Gebauer–Möller bookkeeping for a newly added basis element `h`.
fn update(
    basis: &[Vector],
    active: &mut [bool],
    pairs: &mut Vec<Pair>,
    h: usize,
    order: &ModuleOrder,
    product_criterion: bool,
) {
    let hl = basis[h].terms[0].clone();
    let candidates: Vec<(usize, Monomial, bool)> = (0..h)
        .filter(|&g| active[g] && basis[g].terms[0].comp == hl.comp)
        .map(|g| {
            let gm = &basis[g].terms[0].mono;
            (
                g,
                hl.mono.lcm(gm),
                product_criterion && hl.mono.is_coprime(gm),
            )
        })
        .collect();

    let mut remaining: Vec<bool> = vec![true; candidates.len()];
    let mut kept: Vec<usize> = Vec::new();
    for k in 0..candidates.len() {
        remaining[k] = false;
        let (_, ref lcm, coprime) = candidates[k];
        let dominated = |other: usize| candidates[other].1.divides(lcm);
        let blocked = (0..candidates.len()).any(|o| remaining[o] && dominated(o))
            || kept.iter().any(|&o| dominated(o));
        if coprime || !blocked {
            kept.push(k);
        }
    }

    pairs.retain(|p| {
        if p.comp != hl.comp || !hl.mono.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i].terms[0].mono.lcm(&hl.mono);
        let lj = basis[p.j].terms[0].mono.lcm(&hl.mono);
        li == p.lcm || lj == p.lcm
    });

    for k in kept {
        let (g, lcm, coprime) = candidates[k];
        if coprime {
            continue;
        }
        pairs.push(Pair {
            i: g,
            j: h,
            degree: order.degree(&lcm, hl.comp),
            lcm,
            comp: hl.comp,
        });
    }

    for g in 0..h {
        if active[g] {
            let gl = &basis[g].terms[0];
            if gl.comp == hl.comp && hl.mono.divides(&gl.mono) {
                active[g] = false;
            }
        }
    }
}

fn select_pair(pairs: &[Pair], order: &ModuleOrder) -> usize {
    let mut best = 0;
    for k in 1..pairs.len() {
        let (a, b) = (&pairs[k], &pairs[best]);
        let better = a
            .degree
            .cmp(&b.degree)
            .then_with(|| order.cmp(&a.lcm, a.comp, &b.lcm, b.comp))
            .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
        if better == Ordering::Less {
            best = k;
        }
    }
    best
}

/// Reduced Gröbner basis of the submodule generated by `gens`, monic and
/// sorted by descending leading term.
pub fn groebner_basis(gens: &[Vector], order: &ModuleOrder) -> Vec<Vector> {
    let product_criterion = gens
        .iter()
        .flat_map(|g| g.terms.iter())
        .all(|t| t.comp == 0);

    let mut input: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        order
            .degree(&x.mono, x.comp)
            .cmp(&order.degree(&y.mono, y.comp))
            .then_with(|| order.cmp_terms(x, y))
    });

    let mut basis: Vec<Vector> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending = input.into_iter().peekable();

    loop {
        // Interleave input elements with pairs of no larger degree.
        let next_pair_degree = if pairs.is_empty() {
            None
        } else {
            Some(pairs[select_pair(&pairs, order)].degree)
        };
        let take_input = match (pending.peek(), next_pair_degree) {
            (Some(g), Some(d)) => g.degree(order).unwrap() <= d,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        let candidate = if take_input {
            pending.next().unwrap()
        } else {
            let p = pairs.swap_remove(select_pair(&pairs, order));
            s_vector(&basis[p.i], &basis[p.j], &p.lcm, order)
        };
        let h = reduce(&candidate, &basis, order);
        if h.is_zero() {
            continue;
        }
        basis.push(h.monic());
        active.push(true);
        let idx = basis.len() - 1;
        update(
            &basis,
            &mut active,
            &mut pairs,
            idx,
            order,
            product_criterion,
        );
    }

    let mut minimal: Vec<Vector> = basis
        .into_iter()
        .zip(active)
        .filter_map(|(g, a)| a.then_some(g))
        .collect();
    // Drop elements whose leading term is divisible by another one.
    let mut keep = vec![true; minimal.len()];
    for a in 0..minimal.len() {
        for b in 0..minimal.len() {
            if a != b && keep[b] {
                let (la, lb) = (&minimal[a].terms[0], &minimal[b].terms[0]);
                if la.comp == lb.comp && lb.mono.divides(&la.mono) && (la.mono != lb.mono || b < a)
                {
                    keep[a] = false;
                    break;
                }
            }
        }
    }
    let mut k = 0;
    minimal.retain(|_| {
        k += 1;
        keep[k - 1]
    });
    // Interreduce tails.
    for a in 0..minimal.len() {
        let others: Vec<Vector> = minimal
            .iter()
            .enumerate()
            .filter(|&(b, _)| b != a)
            .map(|(_, g)| g.clone())
            .collect();
        let head = Vector {
            terms: vec![minimal[a].terms[0].clone()],
        };
        let tail = Vector {
            terms: minimal[a].terms[1..].to_vec(),
        };
        let tail = reduce(&tail, &others, order);
        minimal[a] = head.add(&tail, order);
    }
    minimal.sort_by(|a, b| order.cmp_terms(&b.terms[0], &a.terms[0]));
    minimal
}

/// Checks Buchberger's criterion: every S-vector reduces to zero.
pub fn is_groebner_basis(basis: &[Vector], order: &ModuleOrder) -> bool {
    let monic: Vec<Vector> = basis.iter().map(Vector::monic).collect();
    for i in 0..monic.len() {
        for j in i + 1..monic.len() {
            let (a, b) = (&monic[i].terms[0], &monic[j].terms[0]);
            if a.comp != b.comp {
                continue;
            }
            let lcm = a.mono.lcm(&b.mono);
            if !reduce(&s_vector(&monic[i], &monic[j], &lcm, order), &monic, order).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Indices of a minimal generating subset of homogeneous `gens`, chosen
/// greedily in order of increasing degree.
pub fn minimal_subset(gens: &[Vector], order: &ModuleOrder, num_vars: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_zero()).collect();
    idx.sort_by_key(|&i| gens[i].degree(order).unwrap());
    let mut kept: Vec<usize> = Vec::new();
    let mut k = 0;
    while k < idx.len() {
        let d = gens[idx[k]].degree(order).unwrap();
        let mut span = LinearSpan::new(order.clone());
        for &i in &kept {
            let gap = d - gens[i].degree(order).unwrap();
            let one = gens[i].terms[0].coeff.field().one();
            for m in monomials_of_degree(num_vars, gap) {
                span.insert(&gens[i].mul_term(&one, &m));
            }
        }
        while k < idx.len() && gens[idx[k]].degree(order).unwrap() == d {
            if span.insert(&gens[idx[k]]) {
                kept.push(idx[k]);
            }
            k += 1;
        }
    }
    kept.sort_unstable();
    kept
}
