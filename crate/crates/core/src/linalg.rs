//! Linear algebra over the coefficient field.

use std::collections::HashMap;

use crate::groebner::engine::{ModuleOrder, VTerm, Vector};
use crate::poly::{Coeff, Field, Monomial};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
    field: Field,
}

impl DenseMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
            field,
        }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Coeff>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let nrows = rows.len();
        let data: Vec<Coeff> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), nrows * cols, "ragged matrix");
        DenseMatrix {
            rows: nrows,
            cols,
            data,
            field,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Coeff {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Coeff) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv();
            for k in c..self.cols {
                let v = self.get(r, k).mul(&inv);
                self.set(r, k, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for k in c..self.cols {
                    let v = self.get(i, k).sub(&factor.mul(self.get(r, k)));
                    self.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{ x : A x = 0 }`.
    pub fn kernel(&self) -> Vec<Vec<Coeff>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![self.field.zero(); self.cols];
                x[f] = self.field.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = m.get(r, f).neg();
                }
                x
            })
            .collect()
    }

    /// Determinant by Gaussian elimination. Panics when not square.
    pub fn determinant(&self) -> Coeff {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            let pivot = m.get(c, c).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv();
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).mul(&inv);
                for k in c..m.cols {
                    let v = m.get(i, k).sub(&factor.mul(m.get(c, k)));
                    m.set(i, k, v);
                }
            }
        }
        det
    }
}

/// The span of a set of module elements, kept in echelon form keyed by
/// leading term.
#[derive(Clone, Debug)]
pub struct LinearSpan {
    order: ModuleOrder,
    rows: Vec<Vector>,
    pivots: HashMap<(Monomial, usize), usize>,
}

impl LinearSpan {
    pub fn new(order: ModuleOrder) -> Self {
        LinearSpan {
            order,
            rows: Vec::new(),
            pivots: HashMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the pivots; the result has no pivot terms.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut v = v.clone();
        let mut i = 0;
        while i < v.terms.len() {
            let VTerm { mono, comp, coeff } = &v.terms[i];
            match self.pivots.get(&(*mono, *comp)) {
                Some(&row) => {
                    let c = coeff.clone();
                    v = v.sub_mul(&c, &Monomial::one(), &self.rows[row], &self.order);
                }
                None => i += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &Vector) -> bool {
        let r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let r = r.monic();
        let lead = r.terms[0].clone();
        self.pivots.insert((lead.mono, lead.comp), self.rows.len());
        self.rows.push(r);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(field: Field, rows: &[&[i64]]) -> DenseMatrix {
        DenseMatrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn determinant_small_cases() {
        let q = Field::Rationals;
        assert_eq!(mat(q, &[&[1, 2], &[3, 4]]).determinant(), q.from_i64(-2));
        assert_eq!(mat(q, &[&[0, 1], &[1, 0]]).determinant(), q.from_i64(-1));
        assert!(mat(q, &[&[1, 2], &[2, 4]]).determinant().is_zero());
    }

    #[test]
    fn kernel_dimension_and_membership() {
        let q = Field::Rationals;
        let a = mat(q, &[&[1, 1, 0, 2], &[0, 1, 1, 1]]);
        let ker = a.kernel();
        assert_eq!(ker.len(), 2);
        for x in ker {
            for r in 0..a.rows() {
                let acc = (0..a.cols()).fold(q.zero(), |acc, c| acc.add(&a.get(r, c).mul(&x[c])));
                assert!(acc.is_zero());
            }
        }
        assert_eq!(a.rank(), 2);
    }
}
