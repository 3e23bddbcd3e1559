use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::DenseMatrix;
use crate::poly::{Monomial, Polynomial};

use super::complex::resolve;

/// The socle `0 :_{Q/I} 𝔪` of an Artinian quotient.
#[derive(Clone, Debug)]
pub struct SocleData {
    /// Degree to multiplicity; the socle polynomial `Σ c_j t^j`.
    pub degree_multiset: BTreeMap<u32, usize>,
    /// Normal forms spanning the socle, grouped by ascending degree.
    pub representatives: Vec<Polynomial>,
    pub socle_degree: u32,
}

impl SocleData {
    /// The type: `dim_k` of the socle.
    pub fn dimension(&self) -> usize {
        self.degree_multiset.values().sum()
    }

    /// Coefficients `c_0, ..., c_s`.
    pub fn polynomial(&self) -> Vec<usize> {
        (0..=self.socle_degree)
            .map(|d| self.degree_multiset.get(&d).copied().unwrap_or(0))
            .collect()
    }

    pub fn is_level(&self) -> bool {
        self.degree_multiset.len() == 1
    }
}

/// Socle of `Q/I`, degree by degree: kernels of the multiplication maps
/// `(Q/I)_d -> (Q/I)_{d+1}^e` on standard-monomial bases.
pub fn socle(ideal: &Ideal) -> Result<SocleData> {
    ideal.require_homogeneous()?;
    if ideal.is_unit() || !ideal.is_artinian() {
        return Err(Error::NotArtinian);
    }
    let ring = ideal.ring();
    let field = ring.field();
    let e = ring.num_vars();
    let mut degree_multiset = BTreeMap::new();
    let mut representatives = Vec::new();
    let mut socle_degree = 0;
    let mut d = 0;
    let mut basis = ideal.standard_monomials(0);
    while !basis.is_empty() {
        let next = ideal.standard_monomials(d + 1);
        let index: HashMap<Monomial, usize> =
            next.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut matrix = DenseMatrix::zeros(field, e * next.len(), basis.len());
        for (c, b) in basis.iter().enumerate() {
            for k in 0..e {
                let nf =
                    ideal.normal_form(&Polynomial::monomial(ring, b.mul(&Monomial::var(k))))?;
                for t in nf.terms() {
                    matrix.set(k * next.len() + index[&t.mono], c, t.coeff.clone());
                }
            }
        }
        let kernel = matrix.kernel();
        if !kernel.is_empty() {
            degree_multiset.insert(d, kernel.len());
            socle_degree = d;
            for x in kernel {
                let terms = x.into_iter().zip(&basis).map(|(c, m)| (c, *m)).collect();
                representatives.push(Polynomial::from_terms(ring, terms));
            }
        }
        basis = next;
        d += 1;
    }
    Ok(SocleData {
        degree_multiset,
        representatives,
        socle_degree,
    })
}

/// The socle of `Q/I` sits in a single degree.
pub fn is_level(ideal: &Ideal) -> Result<bool> {
    Ok(socle(ideal)?.is_level())
}

/// Grade and perfection of a homogeneous proper ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Perfection {
    /// `e - dim Q/I`, which equals the grade in a polynomial ring.
    pub grade: usize,
    pub projective_dimension: usize,
    pub is_perfect: bool,
}

pub fn grade_and_perfection(ideal: &Ideal) -> Result<Perfection> {
    let res = resolve(ideal)?;
    let grade = ideal.ring().num_vars() - ideal.krull_dim();
    let pd = res.length();
    Ok(Perfection {
        grade,
        projective_dimension: pd,
        is_perfect: pd == grade,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, Ring};

    #[test]
    fn residue_field() {
        let r = Ring::xyz(Field::Rationals);
        let s = socle(&Ideal::maximal(&r)).unwrap();
        assert_eq!(s.polynomial(), vec![1]);
        assert!(s.is_level());
    }

    #[test]
    fn non_artinian_rejected() {
        let r = Ring::xyz(Field::Rationals);
        let i = Ideal::from_strs(&r, &["X", "Y"]).unwrap();
        assert!(matches!(socle(&i), Err(Error::NotArtinian)));
    }

    #[test]
    fn perfection_of_small_ideals() {
        let r = Ring::xyz(Field::Rationals);
        let p = grade_and_perfection(&Ideal::from_strs(&r, &["X"]).unwrap()).unwrap();
        assert_eq!((p.grade, p.is_perfect), (1, true));
        let p = grade_and_perfection(&Ideal::from_strs(&r, &["X*Y", "X*Z"]).unwrap()).unwrap();
        assert_eq!(
            (p.grade, p.projective_dimension, p.is_perfect),
            (1, 2, false)
        );
    }
}
