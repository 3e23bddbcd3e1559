//! Oracles shared by the integration tests. Each recomputes a quantity by a
//! route that avoids the code under test.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use perfect_ideals::groebner::{hilbert, Ideal};
use perfect_ideals::linalg::DenseMatrix;
use perfect_ideals::poly::{monomials_of_degree, Coeff, Field, Monomial, Polynomial, Ring};
use perfect_ideals::resolution::GradedBettiTable;

pub const P: u32 = 32003;

pub fn qq() -> Arc<Ring> {
    Ring::xyz(Field::Rationals)
}

pub fn fp() -> Arc<Ring> {
    Ring::xyz(Field::Prime(P))
}

pub fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> Ideal {
    Ideal::from_strs(ring, gens).unwrap()
}

/// `C(n, k)` with `C(n, k) = 0` for `n < k` or negative `n`.
pub fn choose(n: i64, k: i64) -> i64 {
    if n < k || n < 0 || k < 0 {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// Graded Betti numbers as Koszul homology: `β_{i,j} = dim H_i(K(X; Q/I))_j`,
/// from normal forms on standard-monomial bases. Covers `j <= max_degree`.
pub fn koszul_betti(ideal: &Ideal, max_degree: u32) -> Vec<Vec<u32>> {
    let ring = ideal.ring();
    let e = ring.num_vars();
    let field = ring.field();
    let subsets = |i: usize| -> Vec<u32> {
        (0u32..1 << e)
            .filter(|s| s.count_ones() as usize == i)
            .collect()
    };
    // Basis of K_i in internal degree j: (subset, standard monomial of degree j - i).
    let basis = |i: usize, j: u32| -> Vec<(u32, Monomial)> {
        if (j as usize) < i {
            return Vec::new();
        }
        let mons = ideal.standard_monomials(j - i as u32);
        subsets(i)
            .into_iter()
            .flat_map(|s| mons.iter().map(move |m| (s, *m)))
            .collect()
    };
    // d_i : K_i -> K_{i-1} in degree j.
    let rank_of_d = |i: usize, j: u32| -> usize {
        if i == 0 || i > e {
            return 0;
        }
        let src = basis(i, j);
        let tgt = basis(i - 1, j);
        if src.is_empty() || tgt.is_empty() {
            return 0;
        }
        let index: HashMap<(u32, Monomial), usize> =
            tgt.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        let mut mat = DenseMatrix::zeros(field, tgt.len(), src.len());
        for (c, (s, u)) in src.iter().enumerate() {
            let mut sign = 1i64;
            for k in 0..e {
                if s & (1 << k) == 0 {
                    continue;
                }
                let nf = ideal
                    .normal_form(&Polynomial::monomial(ring, u.mul(&Monomial::var(k))))
                    .unwrap();
                for t in nf.terms() {
                    let r = index[&(s & !(1 << k), t.mono)];
                    let v = mat.get(r, c).add(&t.coeff.mul(&field.from_i64(sign)));
                    mat.set(r, c, v);
                }
                sign = -sign;
            }
        }
        mat.rank()
    };
    let mut out = vec![Vec::new(); e + 1];
    for (i, twists) in out.iter_mut().enumerate() {
        for j in 0..=max_degree {
            let dim = basis(i, j).len();
            let betti = dim - rank_of_d(i, j) - rank_of_d(i + 1, j);
            twists.extend(std::iter::repeat_n(j, betti));
        }
    }
    while out.len() > 1 && out.last().unwrap().is_empty() {
        out.pop();
    }
    out
}

/// `dim_k (J : I)_d`, as the kernel of `f -> (NF_J(f g))_g` on `Q_d`.
pub fn colon_dimension(j: &Ideal, i: &Ideal, d: u32) -> usize {
    let ring = j.ring();
    let field = ring.field();
    let source = monomials_of_degree(ring.num_vars(), d);
    let mut rows: Vec<HashMap<(usize, Monomial), Coeff>> = vec![HashMap::new(); source.len()];
    for (c, u) in source.iter().enumerate() {
        for (k, g) in i.gens().iter().enumerate() {
            let prod = g.mul(&Polynomial::monomial(ring, *u)).unwrap();
            for t in j.normal_form(&prod).unwrap().terms() {
                rows[c].insert((k, t.mono), t.coeff.clone());
            }
        }
    }
    let keys: Vec<(usize, Monomial)> = {
        let mut ks: Vec<_> = rows.iter().flat_map(|r| r.keys().copied()).collect();
        ks.sort_by_key(|(k, m)| (*k, m.exponents(3)));
        ks.dedup();
        ks
    };
    if keys.is_empty() {
        return source.len();
    }
    let mut mat = DenseMatrix::zeros(field, keys.len(), source.len());
    for (c, row) in rows.iter().enumerate() {
        for (r, key) in keys.iter().enumerate() {
            if let Some(v) = row.get(key) {
                mat.set(r, c, v.clone());
            }
        }
    }
    source.len() - mat.rank()
}

/// `h_{Q/I}(d)` from the Betti table: `Σ_i (-1)^i Σ_j C(d - d_{i,j} + e - 1, e - 1)`.
pub fn hilbert_from_twists(table: &GradedBettiTable, e: usize, d: u32) -> i64 {
    let mut total = 0;
    for (i, twists) in table.twists.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for &t in twists {
            total += sign * choose(d as i64 - t as i64 + e as i64 - 1, e as i64 - 1);
        }
    }
    total
}

/// Compares the Hilbert function implied by the twists with standard
/// monomial counts in degrees `0..=max`.
pub fn euler_agrees(ideal: &Ideal, table: &GradedBettiTable, max: u32) -> bool {
    let e = ideal.ring().num_vars();
    (0..=max).all(|d| hilbert_from_twists(table, e, d) == ideal.standard_monomials(d).len() as i64)
        && hilbert(ideal).is_ok()
}

/// A degree bound past all twists.
pub fn twist_bound(table: &GradedBettiTable) -> u32 {
    table.twists.iter().flatten().copied().max().unwrap_or(0) + 3
}

/// Value of `f` at `point` over `F_p`.
pub fn eval_mod_p(f: &Polynomial, point: &[u64]) -> u64 {
    let p = P as u64;
    let mut acc = 0u64;
    for t in f.terms() {
        let c = match &t.coeff {
            Coeff::Modular { value, .. } => *value as u64,
            Coeff::Rational(_) => panic!("expects F_p coefficients"),
        };
        let mut v = c;
        for (k, x) in point.iter().enumerate() {
            for _ in 0..t.mono.exp(k) {
                v = v * x % p;
            }
        }
        acc = (acc + v) % p;
    }
    acc
}
