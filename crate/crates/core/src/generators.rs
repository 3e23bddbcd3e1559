//! Families of grade-3 perfect ideals: Pfaffian (Gorenstein) ideals,
//! ideals of 2x2 minors, and the worked examples.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::formats::{format_of, ResolutionFormat};
use crate::groebner::Ideal;
use crate::poly::{Field, Polynomial, Ring};
use crate::resolution::minimal_free_resolution;

/// Retry budget for randomized constructions.
pub const RETRY_BUDGET: usize = 64;

/// A skew-symmetric matrix, stored in full.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix {
    entries: Vec<Vec<Polynomial>>,
}

impl SkewMatrix {
    /// Builds the matrix from its strict upper triangle, given row by row:
    /// `upper[i]` holds `a_{i,i+1}, ..., a_{i,size-1}`.
    pub fn from_upper(
        ring: &Arc<Ring>,
        size: usize,
        upper: Vec<Vec<Polynomial>>,
    ) -> Result<SkewMatrix> {
        if upper.len() + 1 < size
            || (0..size).any(|i| upper.get(i).map_or(0, Vec::len) != size - i - 1)
        {
            return Err(Error::Precondition(
                "upper triangle has the wrong shape".into(),
            ));
        }
        let mut entries = vec![vec![Polynomial::zero(ring); size]; size];
        for i in 0..size {
            for j in i + 1..size {
                let a = upper[i][j - i - 1].clone();
                if a.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                entries[j][i] = a.neg();
                entries[i][j] = a;
            }
        }
        Ok(SkewMatrix { entries })
    }

    /// Random skew matrix whose entries are linear forms in the first
    /// `min(3, e)` variables.
    pub fn random_linear<R: Rng>(ring: &Arc<Ring>, size: usize, rng: &mut R) -> SkewMatrix {
        let field = ring.field();
        let vars = ring.num_vars().min(3);
        let upper = (0..size)
            .map(|i| {
                (i + 1..size)
                    .map(|_| {
                        let terms = (0..vars)
                            .map(|v| (field.random(rng), crate::poly::Monomial::var(v)))
                            .collect();
                        Polynomial::from_terms(ring, terms)
                    })
                    .collect()
            })
            .collect();
        SkewMatrix::from_upper(ring, size, upper).expect("well-formed")
    }

    /// Random skew matrix with constant entries.
    pub fn random_constant<R: Rng>(ring: &Arc<Ring>, size: usize, rng: &mut R) -> SkewMatrix {
        let field = ring.field();
        let upper = (0..size)
            .map(|i| {
                (i + 1..size)
                    .map(|_| Polynomial::constant(ring, field.random(rng)))
                    .collect()
            })
            .collect();
        SkewMatrix::from_upper(ring, size, upper).expect("well-formed")
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    /// The matrix with row and column `k` removed.
    pub fn delete(&self, k: usize) -> SkewMatrix {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        SkewMatrix { entries }
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }
}

fn pfaffian_of(m: &SkewMatrix, idx: &[usize]) -> Polynomial {
    let ring = m.entries[0][0].ring();
    if idx.is_empty() {
        return Polynomial::one(ring);
    }
    let first = idx[0];
    let mut acc = Polynomial::zero(ring);
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let a = m.get(first, j);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&k| k != j).collect();
        let term = a.mul(&pfaffian_of(m, &rest)).expect("same ring");
        acc = if pos % 2 == 1 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        }
        .expect("same ring");
    }
    acc
}

/// Pfaffian by expansion along the first row; `pf([[0,a],[-a,0]]) = a`.
pub fn pfaffian(m: &SkewMatrix) -> Result<Polynomial> {
    if m.size() % 2 == 1 {
        return Err(Error::Precondition("Pfaffian of an odd-size matrix".into()));
    }
    if m.size() == 0 {
        return Err(Error::Precondition("empty matrix".into()));
    }
    let idx: Vec<usize> = (0..m.size()).collect();
    Ok(pfaffian_of(m, &idx))
}

/// The signed submaximal Pfaffians of an odd-size skew matrix.
pub fn submaximal_pfaffians(m: &SkewMatrix) -> Result<Vec<Polynomial>> {
    if m.size().is_multiple_of(2) || m.size() < 3 {
        return Err(Error::Precondition("need an odd size of at least 3".into()));
    }
    (0..m.size())
        .map(|k| {
            let p = pfaffian(&m.delete(k))?;
            Ok(if k % 2 == 0 { p } else { p.neg() })
        })
        .collect()
}

/// A grade-3 Gorenstein ideal of format `(1, m, m, 1)` for odd `m >= 3`.
///
/// For `m = 3` this is `(X_1, X_2, X_3)`; otherwise the submaximal
/// Pfaffians of a random linear skew matrix, accepted only after its
/// resolution has been computed and checked.
pub fn gorenstein_ideal(m: usize, ring: &Arc<Ring>, seed: u64) -> Result<Ideal> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "m = {m} must be odd and at least 3"
        )));
    }
    if ring.num_vars() < 3 {
        return Err(Error::InvalidRing("need at least three variables".into()));
    }
    if m == 3 {
        return Ideal::new(ring, (0..3).map(|i| Polynomial::var(ring, i)).collect());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let want = ResolutionFormat::new(m, 1)?;
    for _ in 0..RETRY_BUDGET {
        let matrix = SkewMatrix::random_linear(ring, m, &mut rng);
        let ideal = Ideal::new(ring, submaximal_pfaffians(&matrix)?)?;
        if ideal.is_zero() || ideal.krull_dim() + 3 != ring.num_vars() {
            continue;
        }
        let table = minimal_free_resolution(&ideal)?;
        if format_of(&table).ok() == Some(want) {
            return Ok(ideal);
        }
    }
    Err(Error::RetriesExhausted {
        attempts: RETRY_BUDGET,
        context: format!("Gorenstein ideal with m = {m}"),
    })
}

fn check_linear(entries: &[Vec<Polynomial>]) -> Result<()> {
    for p in entries.iter().flatten() {
        if !p.is_zero() && (p.degree() != Some(1) || !p.is_homogeneous()) {
            return Err(Error::Precondition(format!(
                "entry {p} is not a linear form"
            )));
        }
    }
    Ok(())
}

fn minor(m: &[Vec<Polynomial>], rows: (usize, usize), cols: (usize, usize)) -> Polynomial {
    let a = m[rows.0][cols.0]
        .mul(&m[rows.1][cols.1])
        .expect("same ring");
    let b = m[rows.0][cols.1]
        .mul(&m[rows.1][cols.0])
        .expect("same ring");
    a.sub(&b).expect("same ring")
}

/// The 2x2 minors of a `2 x 4` matrix or of a symmetric `3 x 3` matrix of
/// linear forms; for the symmetric shape a minor and its transpose are
/// listed once.
pub fn minors_2x2(matrix: &[Vec<Polynomial>]) -> Result<Ideal> {
    let shape = (matrix.len(), matrix.first().map_or(0, Vec::len));
    if matrix.iter().any(|r| r.len() != shape.1) {
        return Err(Error::Precondition("ragged matrix".into()));
    }
    check_linear(matrix)?;
    let ring = matrix[0][0].ring().clone();
    let pairs = |k: usize| -> Vec<(usize, usize)> {
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .collect()
    };
    let minors: Vec<Polynomial> = match shape {
        (2, 4) => pairs(4)
            .into_iter()
            .map(|c| minor(matrix, (0, 1), c))
            .collect(),
        (3, 3) => {
            let symmetric = (0..3).all(|i| (0..3).all(|j| matrix[i][j] == matrix[j][i]));
            if !symmetric {
                return Err(Error::Precondition("3 x 3 matrix must be symmetric".into()));
            }
            let p = pairs(3);
            p.iter()
                .enumerate()
                .flat_map(|(a, &r)| p[a..].iter().map(move |&c| (r, c)))
                .map(|(r, c)| minor(matrix, r, c))
                .collect()
        }
        _ => {
            return Err(Error::Precondition(format!(
                "unsupported shape {}x{}",
                shape.0, shape.1
            )))
        }
    };
    Ideal::new(&ring, minors)
}

/// A random `2 x 4` matrix of linear forms in the first three variables.
pub fn random_linear_2x4<R: Rng>(ring: &Arc<Ring>, rng: &mut R) -> Vec<Vec<Polynomial>> {
    let field = ring.field();
    let vars = ring.num_vars().min(3);
    (0..2)
        .map(|_| {
            (0..4)
                .map(|_| {
                    let terms = (0..vars)
                        .map(|v| (field.random(rng), crate::poly::Monomial::var(v)))
                        .collect();
                    Polynomial::from_terms(ring, terms)
                })
                .collect()
        })
        .collect()
}

const EXAMPLES: &[(&str, &[&str])] = &[
    ("N2", &["X^2", "X*Y", "X*Z", "Y^2", "Y*Z", "Z^2"]),
    ("I_3_4", &["X^2", "Y^2", "X*Y*Z", "X*Z^2", "Y*Z^2", "Z^3"]),
    (
        "J_3_4",
        &[
            "X^3-Y*Z^2",
            "Y^3-X*Z^2",
            "Z^3",
            "X^2*Y^2",
            "X^2*Y*Z",
            "X*Y^2*Z",
            "X*Y*Z^2",
        ],
    ),
    (
        "I_3_7",
        &[
            "X^3",
            "X^2*Y+Y*Z^2",
            "X^2*Z+X*Y*Z",
            "X*Y^2+X*Y*Z",
            "X*Z^2",
            "Y^3",
            "Y^2*Z",
            "Z^3",
        ],
    ),
    (
        "J_3_7",
        &["X^3", "X^2*Y-Y*Z^2", "X*Y*Z-X*Z^2-Y^2*Z", "Y^3", "Z^3"],
    ),
];

/// Names accepted by [`example`].
pub fn example_names() -> Vec<&'static str> {
    EXAMPLES.iter().map(|(n, _)| *n).collect()
}

/// One of the worked example ideals in `k[X,Y,Z]`.
pub fn example(name: &str, field: Field) -> Result<Ideal> {
    let (_, gens) = EXAMPLES.iter().find(|(n, _)| *n == name).ok_or_else(|| {
        Error::Precondition(format!(
            "unknown example {name:?}; known: {}",
            example_names().join(", ")
        ))
    })?;
    Ideal::from_strs(&Ring::xyz(field), gens)
}

/// All worked examples by name.
pub fn worked_examples(field: Field) -> BTreeMap<&'static str, Ideal> {
    EXAMPLES
        .iter()
        .map(|(n, _)| (*n, example(n, field).expect("valid example")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn two_by_two() {
        let r = Ring::new(&["a"], Field::Rationals).unwrap();
        let a = parse_poly("a", &r).unwrap();
        let m = SkewMatrix::from_upper(&r, 2, vec![vec![a.clone()], vec![]]).unwrap();
        assert_eq!(pfaffian(&m).unwrap(), a);
    }

    #[test]
    fn four_by_four_formula() {
        let names = ["a12", "a13", "a14", "a23", "a24", "a34"];
        let r = Ring::new(&names, Field::Rationals).unwrap();
        let v = |s: &str| parse_poly(s, &r).unwrap();
        let m = SkewMatrix::from_upper(
            &r,
            4,
            vec![
                vec![v("a12"), v("a13"), v("a14")],
                vec![v("a23"), v("a24")],
                vec![v("a34")],
                vec![],
            ],
        )
        .unwrap();
        assert_eq!(pfaffian(&m).unwrap(), v("a12*a34 - a13*a24 + a14*a23"));
    }

    #[test]
    fn odd_size_rejected() {
        let r = Ring::xyz(Field::Rationals);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(pfaffian(&SkewMatrix::random_constant(&r, 3, &mut rng)).is_err());
    }

    #[test]
    fn examples_are_known() {
        let all = worked_examples(Field::Rationals);
        assert_eq!(all.len(), 5);
        assert_eq!(all["I_3_7"].gens().len(), 8);
        assert!(example("nope", Field::Rationals).is_err());
    }

    #[test]
    fn minors_of_both_matrices() {
        let r = Ring::xyz(Field::Rationals);
        let p = |s: &str| parse_poly(s, &r).unwrap();
        let a = vec![
            vec![p("X"), p("Y"), p("Z"), p("0")],
            vec![p("0"), p("X"), p("Y"), p("Z")],
        ];
        let b = vec![
            vec![p("X"), p("Y"), p("Z")],
            vec![p("Y"), p("0"), p("X")],
            vec![p("Z"), p("X"), p("Y")],
        ];
        let n2 = example("N2", Field::Rationals).unwrap();
        let ia = minors_2x2(&a).unwrap();
        let ib = minors_2x2(&b).unwrap();
        assert_eq!(ib.gens().len(), 6);
        assert_eq!(ia, n2);
        assert_eq!(ib, n2);
        assert!(minors_2x2(&[vec![p("X^2"), p("Y")], vec![p("Y"), p("Z")]]).is_err());
    }
}
