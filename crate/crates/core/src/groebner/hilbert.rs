//! Hilbert series of monomial quotients.

use crate::poly::Monomial;

/// Integer polynomials in `t`, lowest degree first.
pub(crate) fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

pub(crate) fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn one_minus_t_pow(k: u32) -> Vec<i64> {
    let mut p = vec![0; k as usize + 1];
    p[0] += 1;
    p[k as usize] -= 1;
    trim(p)
}

/// Drops generators divisible by another one.
pub(crate) fn minimize_monomials(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted = gens.to_vec();
    sorted.sort_by_key(|m| m.degree());
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^e` of `Q / (gens)`.
///
/// Pivots on a variable power `x^k` taken from a generator that is not a
/// pure power: `N(I) = N(I + x^k) + t^k N(I : x^k)`.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    let gens = minimize_monomials(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.degree() == 0) {
        return Vec::new();
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.support() & b.support() == 0));
    if coprime {
        return gens.iter().fold(vec![1], |acc, m| {
            poly_mul(&acc, &one_minus_t_pow(m.degree()))
        });
    }
    let pivot_gen = gens
        .iter()
        .find(|m| m.support().count_ones() >= 2)
        .expect("a non-coprime minimal set has a mixed generator");
    let support = pivot_gen.support();
    let var = (0..32)
        .filter(|&i| support & (1 << i) != 0)
        .max_by_key(|&i| {
            (
                gens.iter().filter(|m| m.exp(i) > 0).count(),
                std::cmp::Reverse(i),
            )
        })
        .unwrap();
    let k = pivot_gen.exp(var);
    let p = Monomial::var_pow(var, k);

    let mut sum = gens.clone();
    sum.push(p);
    let quotient: Vec<Monomial> = gens
        .iter()
        .map(|m| m.gcd(&p).quotient_of(m).expect("gcd divides"))
        .collect();

    let a = hilbert_numerator(&sum);
    let mut b = vec![0; k as usize];
    b.extend(hilbert_numerator(&quotient));
    poly_add(&a, &b)
}

/// `C(n, k)` as `i128`, zero when `n < k` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Hilbert function value at `d` from the series numerator in `e`
/// variables.
pub fn hilbert_value(numerator: &[i64], num_vars: usize, d: u32) -> i128 {
    let e = num_vars as i64;
    numerator
        .iter()
        .enumerate()
        .filter(|&(k, _)| k as u32 <= d)
        .map(|(k, &c)| c as i128 * binomial(d as i64 - k as i64 + e - 1, e - 1))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn complete_intersection() {
        // (X^2, Y^2, Z^3): (1-t^2)^2 (1-t^3)
        let n = hilbert_numerator(&[m(&[2, 0, 0]), m(&[0, 2, 0]), m(&[0, 0, 3])]);
        let expect = poly_mul(
            &poly_mul(&one_minus_t_pow(2), &one_minus_t_pow(2)),
            &one_minus_t_pow(3),
        );
        assert_eq!(n, expect);
    }

    #[test]
    fn square_of_maximal_ideal() {
        let gens: Vec<Monomial> = crate::poly::monomials_of_degree(3, 2);
        let n = hilbert_numerator(&gens);
        // 1 - 6t^2 + 8t^3 - 3t^4
        assert_eq!(n, vec![1, 0, -6, 8, -3]);
        assert_eq!(hilbert_value(&n, 3, 0), 1);
        assert_eq!(hilbert_value(&n, 3, 1), 3);
        assert_eq!(hilbert_value(&n, 3, 2), 0);
        assert_eq!(hilbert_value(&n, 3, 7), 0);
    }

    #[test]
    fn zero_and_unit_ideals() {
        assert_eq!(hilbert_numerator(&[]), vec![1]);
        assert!(hilbert_numerator(&[Monomial::one()]).is_empty());
        assert_eq!(hilbert_value(&[1], 3, 4), 15);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 2), 1);
        assert_eq!(binomial(1, 2), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
