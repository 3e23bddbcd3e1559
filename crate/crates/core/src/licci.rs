//! Numerical obstructions to being licci, compressed algebras, the reduction
//! table of Dynkin formats, and exhaustive checks of the Hilbert-function
//! estimates showing that E-type formats avoid the obstruction.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formats::{format_of, ResolutionFormat};
use crate::groebner::{binomial, hilbert, Ideal};
use crate::linkage::{apply_move, FormatMove};
use crate::resolution::{socle, GradedBettiTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    NotLicci,
    /// The test is one-directional and never certifies licci.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    /// Initial degree `d_{1,1}`.
    pub d_min: u32,
    /// Largest last twist `d_{3,n}`.
    pub d_top: u32,
    /// `2 d_{1,1} - d_{3,n}`.
    pub margin: i64,
}

/// `d_{3,n} <= 2 d_{1,1}` forces a grade-3 perfect ideal to be non-licci.
pub fn hu_obstruction(table: &GradedBettiTable) -> Result<ObstructionReport> {
    format_of(table)?;
    let d_min = *table.twists[1].iter().min().expect("m >= 3");
    let d_top = *table.twists[3].iter().max().expect("n >= 1");
    let margin = 2 * i64::from(d_min) - i64::from(d_top);
    let verdict = if margin >= 0 {
        Verdict::NotLicci
    } else {
        Verdict::Inconclusive
    };
    Ok(ObstructionReport {
        verdict,
        d_min,
        d_top,
        margin,
    })
}

/// The obstruction read off an Artinian quotient in three variables:
/// `3 + socle degree <= 2 * initial degree`.
pub fn artinian_obstruction(ideal: &Ideal) -> Result<Verdict> {
    if ideal.ring().num_vars() != 3 {
        return Err(Error::Precondition("needs three variables".into()));
    }
    let s = socle(ideal)?.socle_degree;
    let d = ideal
        .generator_degrees()
        .into_iter()
        .min()
        .ok_or(Error::NotArtinian)?;
    Ok(if 3 + s <= 2 * d {
        Verdict::NotLicci
    } else {
        Verdict::Inconclusive
    })
}

/// Hilbert function of an Artinian quotient against the maximum allowed by
/// its socle polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompressedProfile {
    /// `c_0, ..., c_s`.
    pub socle_coefficients: Vec<usize>,
    pub socle_degree: u32,
    pub embedding_dim: usize,
    pub hilbert: Vec<u64>,
    /// `B(i) = min{ h_Q(i), Σ_{j>=i} c_j h_Q(j-i) }`.
    pub bound: Vec<u64>,
    /// `min{ h_Q(i), n h_Q(s-i) }` with `n` the type.
    pub weak_bound: Vec<u64>,
    pub is_compressed: bool,
    /// First degree with `h(i) < B(i)`.
    pub witness_degree: Option<u32>,
    /// Degrees where both entries of the weak bound agree.
    pub tie_degrees: Vec<u32>,
}

impl CompressedProfile {
    pub fn type_(&self) -> usize {
        self.socle_coefficients.iter().sum()
    }

    /// Compressed, level, and the two sides of the weak bound meet.
    pub fn is_extremely_compressed(&self) -> bool {
        let level = self.socle_coefficients.iter().filter(|&&c| c > 0).count() == 1;
        self.is_compressed && level && !self.tie_degrees.is_empty()
    }
}

fn h_q(e: usize, i: i64) -> u64 {
    if i < 0 {
        0
    } else {
        binomial(e as i64 - 1 + i, e as i64 - 1) as u64
    }
}

pub fn compressed_check(ideal: &Ideal) -> Result<CompressedProfile> {
    let soc = socle(ideal)?;
    let h = hilbert(ideal)?;
    let e = ideal.ring().num_vars();
    let s = soc.socle_degree;
    let c = soc.polynomial();
    let n: usize = c.iter().sum();
    let mut hilbert_values = Vec::new();
    let mut bound = Vec::new();
    let mut weak_bound = Vec::new();
    let mut tie_degrees = Vec::new();
    let mut witness_degree = None;
    for i in 0..=s {
        let free = h_q(e, i64::from(i));
        let socle_side: u64 = (i..=s)
            .map(|j| c[j as usize] as u64 * h_q(e, i64::from(j - i)))
            .sum();
        let type_side = n as u64 * h_q(e, i64::from(s - i));
        let b = free.min(socle_side);
        let value = h.value(i);
        if value > b {
            return Err(Error::Verification(format!(
                "h({i}) = {value} exceeds the bound {b}"
            )));
        }
        if value < b && witness_degree.is_none() {
            witness_degree = Some(i);
        }
        if free == type_side {
            tie_degrees.push(i);
        }
        hilbert_values.push(value);
        bound.push(b);
        weak_bound.push(free.min(type_side));
    }
    Ok(CompressedProfile {
        socle_coefficients: c,
        socle_degree: s,
        embedding_dim: e,
        hilbert: hilbert_values,
        bound,
        weak_bound,
        is_compressed: witness_degree.is_none(),
        witness_degree,
        tie_degrees,
    })
}

/// A row of the table pairing a Dynkin format with the format one link
/// away: `right = P22a(left)`, so `β(right) = β(left) + 2`.
#[derive(Clone, Copy, Debug)]
pub struct ReductionRow {
    pub left: FormatFamily,
    pub right: FormatFamily,
}

/// A format, possibly depending on a parameter `l >= min_l`.
#[derive(Clone, Copy, Debug)]
pub struct FormatFamily {
    pub label: &'static str,
    pub min_l: usize,
    m: fn(usize) -> usize,
    n: fn(usize) -> usize,
}

impl FormatFamily {
    const fn fixed(label: &'static str, m: fn(usize) -> usize, n: fn(usize) -> usize) -> Self {
        FormatFamily {
            label,
            min_l: 0,
            m,
            n,
        }
    }

    pub fn is_family(&self) -> bool {
        self.min_l > 0
    }

    /// The format at parameter `l`; `None` below `min_l` or when the
    /// ranks are out of range.
    pub fn at(&self, l: usize) -> Option<ResolutionFormat> {
        if l < self.min_l {
            return None;
        }
        ResolutionFormat::new((self.m)(l), (self.n)(l)).ok()
    }
}

pub fn reduction_table() -> [ReductionRow; 7] {
    fn fam(
        label: &'static str,
        min_l: usize,
        m: fn(usize) -> usize,
        n: fn(usize) -> usize,
    ) -> FormatFamily {
        FormatFamily { label, min_l, m, n }
    }
    let fixed = FormatFamily::fixed;
    [
        ReductionRow {
            left: fam("(1,2l+1,2l+1,1)", 1, |l| 2 * l + 1, |_| 1),
            right: fam("(1,4,2l+2,2l-1)", 1, |_| 4, |l| 2 * l - 1),
        },
        ReductionRow {
            left: fam("(1,4,l+3,l)", 2, |_| 4, |l| l),
            right: fam("(1,l+3,l+4,2)", 2, |l| l + 3, |_| 2),
        },
        ReductionRow {
            left: fixed("(1,5,6,2)", |_| 5, |_| 2),
            right: fixed("(1,5,7,3)", |_| 5, |_| 3),
        },
        ReductionRow {
            left: fixed("(1,5,7,3)", |_| 5, |_| 3),
            right: fixed("(1,6,8,3)", |_| 6, |_| 3),
        },
        ReductionRow {
            left: fixed("(1,5,8,4)", |_| 5, |_| 4),
            right: fixed("(1,7,9,3)", |_| 7, |_| 3),
        },
        ReductionRow {
            left: fixed("(1,6,7,2)", |_| 6, |_| 2),
            right: fixed("(1,5,8,4)", |_| 5, |_| 4),
        },
        ReductionRow {
            left: fixed("(1,7,8,2)", |_| 7, |_| 2),
            right: fixed("(1,5,9,5)", |_| 5, |_| 5),
        },
    ]
}

/// The format whose direct links realize `f` under `P22a`:
/// `(1, n+2, m+n-2, m-3)`.
pub fn reduction_predecessor(f: ResolutionFormat) -> Option<ResolutionFormat> {
    ResolutionFormat::new(f.n + 2, f.m.checked_sub(3)?).ok()
}

/// Checks every row of the reduction table for `l <= max_l`: the left
/// column is the predecessor of the right, `P22a` maps left to right where
/// it applies, and `β` grows by two. Returns the failures.
pub fn verify_reduction_table(max_l: usize) -> Vec<String> {
    let mut failures = Vec::new();
    for row in reduction_table() {
        let ls: Vec<usize> = if row.left.is_family() {
            (row.left.min_l..=max_l).collect()
        } else {
            vec![0]
        };
        for l in ls {
            let (Some(left), Some(right)) = (row.left.at(l), row.right.at(l)) else {
                failures.push(format!("{} at l = {l} is not a format", row.right.label));
                continue;
            };
            if reduction_predecessor(right) != Some(left) {
                failures.push(format!("{right} does not reduce to {left}"));
            }
            if right.total_rank() != left.total_rank() + 2 {
                failures.push(format!("β({right}) != β({left}) + 2"));
            }
            if FormatMove::P22a.precondition(left)
                && apply_move(left, FormatMove::P22a).ok() != Some(right)
            {
                failures.push(format!("P22a({left}) != {right}"));
            }
        }
    }
    failures
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    pub s: i64,
    pub d: i64,
    pub case: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub statement: String,
    pub s_max: i64,
    pub checks: usize,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }
}

/// Records checks at one `(s, d)`. Quantities are kept as integers scaled
/// by four so every printed fraction is exact.
struct Point<'a> {
    s: i64,
    d: i64,
    case: &'a str,
    report: SweepReport,
}

impl Point<'_> {
    fn new(s: i64, d: i64, case: &str) -> Point<'_> {
        Point {
            s,
            d,
            case,
            report: SweepReport::default(),
        }
    }

    fn check(&mut self, ok: bool, check: &str, detail: impl FnOnce() -> String) {
        self.report.checks += 1;
        if !ok {
            self.report.failures.push(SweepFailure {
                s: self.s,
                d: self.d,
                case: self.case.to_string(),
                check: check.to_string(),
                detail: detail(),
            });
        }
    }

    fn eq(&mut self, check: &str, direct: i64, closed: i64) {
        self.check(direct == closed, check, || {
            format!("direct {direct}/4, closed form {closed}/4")
        });
    }

    fn ge(&mut self, check: &str, lhs: i64, rhs: i64) {
        self.check(lhs >= rhs, check, || format!("{lhs}/4 < {rhs}/4"));
    }

    fn gt(&mut self, check: &str, lhs: i64, rhs: i64) {
        self.check(lhs > rhs, check, || format!("{lhs}/4 <= {rhs}/4"));
    }
}

fn h(i: i64) -> i64 {
    h_q(3, i) as i64
}

fn ceil_half(d: i64) -> i64 {
    (d + 1) / 2
}

/// The `(1,m,m+1,2)` estimate, `4 <= m <= 7`: for all `1 <= s <= s_max`
/// and `2 <= d <= s+1`, every closed form in the argument is compared with
/// direct binomial evaluation and every stated lower bound is tested.
pub fn verify_prop_m(s_max: i64) -> Result<SweepReport> {
    sweep(s_max, "(1,m,m+1,2), 4 <= m <= 7", prop_m_point)
}

/// The `(1,5,n+4,n)` estimate, `1 <= n <= 4`, checked like
/// [`verify_prop_m`].
pub fn verify_prop_n(s_max: i64) -> Result<SweepReport> {
    sweep(s_max, "(1,5,n+4,n), 1 <= n <= 4", prop_n_point)
}

fn sweep(s_max: i64, statement: &str, point: fn(i64, i64) -> SweepReport) -> Result<SweepReport> {
    if s_max < 1 {
        return Err(Error::Precondition("s_max must be at least 1".into()));
    }
    let merged = (1..=s_max)
        .into_par_iter()
        .map(|s| {
            (2..=s + 1)
                .map(|d| point(s, d))
                .fold(SweepReport::default(), SweepReport::merge)
        })
        .reduce(SweepReport::default, SweepReport::merge);
    Ok(SweepReport {
        statement: statement.to_string(),
        s_max,
        ..merged
    })
}

fn prop_m_point(s: i64, d: i64) -> SweepReport {
    if 2 * d < s + 3 {
        let mut p = Point::new(s, d, "case 1");
        if d == 2 {
            let lhs = h(s) - h(s - 2);
            p.eq("h_Q(s) - h_Q(s-2) = 2s+1", 4 * lhs, 4 * (2 * s + 1));
            p.eq("2 = 2h_Q(0)", 4 * 2, 4 * 2 * h(0));
            p.gt("2s+1 > 2h_Q(0)", 4 * lhs, 4 * 2 * h(0));
            return p.report;
        }
        let u = s + 2 - ceil_half(d);
        p.check(u <= s, "u <= s", || format!("u = {u}"));
        let a = 2 * h(s - u);
        let b = h(u) - h(u - d) - 6 * h(u - s - 3 + d);
        let even = d % 2 == 0;
        let (a4, b4, diff4, margin4) = if even {
            (
                d * (d - 2),
                d * (4 * s - 7 * d + 8),
                2 * d * (2 * (s - 2 * d + 3) - 1),
                2 * d,
            )
        } else {
            (
                (d + 1) * (d - 1),
                d * (4 * s - 7 * d + 12) + 3,
                4 * (d * (s - 2 * d + 3) + 1),
                4 * (d + 1),
            )
        };
        p.eq("2h_Q(s-u)", 4 * a, a4);
        p.eq("h_Q(u) - h_Q(u-d) - 6h_Q(u-s-3+d)", 4 * b, b4);
        p.eq("difference of closed forms", b4 - a4, diff4);
        p.ge("stated lower bound", diff4, margin4);
        p.gt("h_R(u) > 2h_Q(s-u)", 4 * b, 4 * a);
        p.report
    } else {
        let mut p = Point::new(s, d, "case 2");
        let u = (s + d) / 2;
        let sigma = s - d + 3;
        p.check(
            1 <= sigma && sigma <= d && d <= s + 1 && u <= s,
            "1 <= σ <= d <= s+1, u <= s",
            || format!("σ = {sigma}, u = {u}"),
        );
        let a = 2 * h(s - u);
        let b = h(u) - 7 * h(u - d);
        let even = (s + d) % 2 == 0;
        let (a4, b4, middle4, value4) = if even {
            (
                sigma * sigma - 1,
                2 * d * (d + sigma) - 3 * (sigma * sigma - 1),
                4 * sigma * sigma - 4 * (sigma * sigma - 1),
                4,
            )
        } else {
            (
                sigma * (sigma + 2),
                2 * d * (d + sigma - 1) - 3 * sigma * (sigma - 2),
                2 * sigma * (2 * sigma - 1) - 4 * sigma * (sigma - 1),
                2 * sigma,
            )
        };
        p.eq("2h_Q(s-u)", 4 * a, a4);
        p.eq("h_Q(u) - 7h_Q(u-d)", 4 * b, b4);
        p.ge("estimate using d >= σ", b4 - a4, middle4);
        p.eq("stated lower bound", middle4, value4);
        p.gt("h_R(u) > 2h_Q(s-u)", 4 * b, 4 * a);
        p.report
    }
}

fn prop_n_point(s: i64, d: i64) -> SweepReport {
    if 2 * d <= s + 3 {
        let mut p = Point::new(s, d, "case 1");
        if d == 2 {
            if s < 2 {
                // Socle degree 1 with initial degree 2 means I = 𝔪², which
                // needs h_Q(2) = 6 > 5 generators.
                p.gt("s = 1 needs more than five quadrics", h(2), 5);
                return p.report;
            }
            let lhs = h(s) - h(s - 2);
            p.eq("h_Q(s) - h_Q(s-2) = 2s+1", 4 * lhs, 4 * (2 * s + 1));
            p.gt("2s+1 > 4", 4 * lhs, 4 * 4);
            p.ge("4 >= n h_Q(0)", 4 * 4, 4 * 4 * h(0));
            return p.report;
        }
        let u = s + 2 - ceil_half(d);
        p.check(u <= s, "u <= s", || format!("u = {u}"));
        let a = 4 * h(s - u);
        let b = h(u) - h(u - d) - 4 * h(u - s - 3 + d);
        let even = d % 2 == 0;
        let (a4, b4, diff4, margin4) = if even {
            (
                2 * d * (d - 2),
                2 * d * (2 * s - 3 * d + 5),
                2 * d * (2 * (s - 2 * d + 3) + 1),
                6 * d,
            )
        } else {
            (
                2 * (d + 1) * (d - 1),
                2 * (d * (2 * s - 3 * d + 6) + 1),
                2 * (2 * d * (s - 2 * d + 3) + 2),
                4 * (d + 1),
            )
        };
        p.eq("4h_Q(s-u)", 4 * a, a4);
        p.eq("h_Q(u) - h_Q(u-d) - 4h_Q(u-s-3+d)", 4 * b, b4);
        p.eq("difference of closed forms", b4 - a4, diff4);
        p.ge("stated lower bound", diff4, margin4);
        p.gt("h_R(u) > 4h_Q(s-u)", 4 * b, 4 * a);
        p.report
    } else {
        let mut p = Point::new(s, d, "case 2");
        let u = (s + d) / 2;
        let sigma = s - d + 3;
        p.check(
            2 <= sigma + 1 && sigma < d && d <= s + 1 && u <= s,
            "2 <= σ+1 <= d <= s+1, u <= s",
            || format!("σ = {sigma}, u = {u}"),
        );
        let a = 4 * h(s - u);
        let b = h(u) - 5 * h(u - d);
        let even = (s + d) % 2 == 0;
        let (a4, b4, middle4, value4) = if even {
            (
                2 * (sigma * sigma - 1),
                2 * (d * (d + sigma) - (sigma * sigma - 1)),
                2 * ((sigma + 1) * (2 * sigma + 1) - 2 * (sigma * sigma - 1)),
                6 * (sigma + 1),
            )
        } else {
            (
                2 * sigma * (sigma + 2),
                2 * (d * (d + sigma - 1) - sigma * (sigma - 2)),
                2 * ((sigma + 1) * 2 * sigma - 2 * (sigma * sigma - sigma)),
                8 * sigma,
            )
        };
        p.eq("4h_Q(s-u)", 4 * a, a4);
        p.eq("h_Q(u) - 5h_Q(u-d)", 4 * b, b4);
        p.ge("estimate using d >= σ+1", b4 - a4, middle4);
        p.eq("stated lower bound", middle4, value4);
        p.gt("h_R(u) > 4h_Q(s-u)", 4 * b, 4 * a);
        p.report
    }
}

/// For formats `(1,m,m+1,2)`, `4 <= m <= 7`, and `(1,5,n+4,n)`,
/// `1 <= n <= 4`, with initial degree at least 2: whether
/// `d_{3,n} > d_{1,1} + d_{1,2}`. A `false` answer is a counterexample to
/// the estimates verified by [`verify_prop_m`] and [`verify_prop_n`].
pub fn check_dynkin_unobstructed(table: &GradedBettiTable) -> Result<bool> {
    let f = format_of(table)?;
    let covered = (f.n == 2 && (4..=7).contains(&f.m)) || (f.m == 5 && (1..=4).contains(&f.n));
    if !covered {
        return Err(Error::Precondition(format!(
            "{f} is not covered by the estimate"
        )));
    }
    let gens = &table.twists[1];
    let (d1, d2) = (gens[0], gens[1]);
    if d1 < 2 {
        return Err(Error::Precondition("initial degree below 2".into()));
    }
    let top = *table.twists[3].last().expect("n >= 1");
    Ok(top > d1 + d2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(twists: &[&[u32]]) -> GradedBettiTable {
        GradedBettiTable::new(twists.iter().map(|t| t.to_vec()).collect())
    }

    #[test]
    fn obstruction_verdicts() {
        let koszul = table(&[&[0], &[1, 1, 1], &[2, 2, 2], &[3]]);
        let r = hu_obstruction(&koszul).unwrap();
        assert_eq!((r.verdict, r.margin), (Verdict::Inconclusive, -1));
        let n2 = table(&[&[0], &[2; 6], &[3; 8], &[4; 3]]);
        assert_eq!(hu_obstruction(&n2).unwrap().verdict, Verdict::NotLicci);
        assert!(hu_obstruction(&table(&[&[0], &[1]])).is_err());
    }

    #[test]
    fn reduction_rows() {
        assert_eq!(reduction_table().len(), 7);
        assert!(verify_reduction_table(20).is_empty());
        let row = reduction_table()[3];
        assert_eq!(row.right.at(0), Some(ResolutionFormat { m: 6, n: 3 }));
    }

    #[test]
    fn small_sweep_points() {
        // d = 4, s = 5 lies in the first case of the (1,m,m+1,2) estimate.
        let r = prop_m_point(5, 4);
        assert!(r.passed(), "{:?}", r.failures);
        assert!(prop_m_point(7, 2).passed());
    }

    #[test]
    fn unobstructed_formats_only() {
        let e6 = table(&[&[0], &[2, 2, 2, 2, 2], &[3, 3, 3, 3, 3, 4], &[4, 5]]);
        assert!(check_dynkin_unobstructed(&e6).unwrap());
        let ci = table(&[&[0], &[1, 1, 1], &[2, 2, 2], &[3]]);
        assert!(check_dynkin_unobstructed(&ci).is_err());
    }
}
