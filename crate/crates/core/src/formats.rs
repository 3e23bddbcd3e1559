//! Resolution formats `(1, m, m+n-1, n)`, their `T(2, m-2, n+1)` graphs and
//! the Dynkin classification.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::resolution::GradedBettiTable;

/// The format `(1, m, m+n-1, n)` of a grade-3 perfect ideal with `m`
/// minimal generators and type `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ResolutionFormat {
    pub m: usize,
    pub n: usize,
}

impl ResolutionFormat {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 3 || n < 1 {
            return Err(Error::InvalidFormat(format!(
                "need m >= 3 and n >= 1, got m = {m}, n = {n}"
            )));
        }
        Ok(ResolutionFormat { m, n })
    }

    /// Validates a rank quadruple.
    pub fn from_ranks(ranks: &[usize]) -> Result<Self> {
        match *ranks {
            [1, m, f2, n] if f2 + 1 == m + n => ResolutionFormat::new(m, n),
            _ => Err(Error::InvalidFormat(format!(
                "{ranks:?} is not of the form (1, m, m+n-1, n)"
            ))),
        }
    }

    pub fn ranks(&self) -> [usize; 4] {
        [1, self.m, self.m + self.n - 1, self.n]
    }

    /// `β = 2(m + n)`.
    pub fn total_rank(&self) -> usize {
        2 * (self.m + self.n)
    }

    pub fn graph(&self) -> FormatGraph {
        FormatGraph {
            arms: [2, self.m - 2, self.n + 1],
        }
    }

    pub fn is_gorenstein(&self) -> bool {
        self.n == 1
    }

    pub fn to_json(&self) -> serde_json::Value {
        let class = classify(*self);
        json!({
            "format": self.ranks(),
            "class": class.to_string(),
            "arms": self.graph().arms,
        })
    }
}

impl fmt::Display for ResolutionFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.ranks();
        write!(f, "({a},{b},{c},{d})")
    }
}

impl FromStr for ResolutionFormat {
    type Err = Error;

    /// Accepts `1,m,f2,n` with optional parentheses and spaces.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let ranks = inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidFormat(format!("cannot read {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ResolutionFormat::from_ranks(&ranks)
    }
}

/// Reads the format off a Betti table of length 3.
pub fn format_of(table: &GradedBettiTable) -> Result<ResolutionFormat> {
    if table.length() != 3 {
        return Err(Error::InvalidFormat(format!(
            "length {} instead of 3",
            table.length()
        )));
    }
    if table.twists[0] != [0] {
        return Err(Error::InvalidFormat("F_0 is not Q".into()));
    }
    ResolutionFormat::from_ranks(&table.ranks())
}

/// The tree `T(p, q, r)`: three arms joined at a central node, arm lengths
/// counting that node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormatGraph {
    pub arms: [usize; 3],
}

impl FormatGraph {
    pub fn node_count(&self) -> usize {
        self.arms.iter().sum::<usize>() - 2
    }

    /// `1/p + 1/q + 1/r > 1`, in integers.
    pub fn is_dynkin(&self) -> bool {
        let [p, q, r] = self.arms;
        q * r + p * r + p * q > p * q * r
    }

    /// Draws the graph as in the usual picture: the first arm hangs below
    /// the central node.
    pub fn render(&self) -> String {
        let [p, q, r] = self.arms;
        let left = q - 1;
        let mut line = String::new();
        for _ in 0..left {
            line.push_str("o---");
        }
        line.push('o');
        for _ in 0..r - 1 {
            line.push_str("---o");
        }
        let mut out = line;
        let col = 4 * left;
        for _ in 0..p - 1 {
            out.push('\n');
            out.push_str(&" ".repeat(col));
            out.push('|');
            out.push('\n');
            out.push_str(&" ".repeat(col));
            out.push('o');
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinClass {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    NotDynkin,
}

impl DynkinClass {
    pub fn is_dynkin(&self) -> bool {
        *self != DynkinClass::NotDynkin
    }
}

impl fmt::Display for DynkinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinClass::A(k) => write!(f, "A{k}"),
            DynkinClass::D(k) => write!(f, "D{k}"),
            DynkinClass::E6 => f.write_str("E6"),
            DynkinClass::E7 => f.write_str("E7"),
            DynkinClass::E8 => f.write_str("E8"),
            DynkinClass::NotDynkin => f.write_str("NotDynkin"),
        }
    }
}

pub fn classify(format: ResolutionFormat) -> DynkinClass {
    let graph = format.graph();
    let mut arms = graph.arms;
    arms.sort_unstable();
    let nodes = graph.node_count();
    let class = match arms {
        [1, _, _] => DynkinClass::A(nodes),
        [2, 2, _] => DynkinClass::D(nodes),
        [2, 3, 3] => DynkinClass::E6,
        [2, 3, 4] => DynkinClass::E7,
        [2, 3, 5] => DynkinClass::E8,
        _ => DynkinClass::NotDynkin,
    };
    debug_assert_eq!(class.is_dynkin(), graph.is_dynkin());
    class
}

/// Formats admitting a grade-3 perfect ideal: all except `(1,m,m,1)` with
/// `m` even and `(1,3,n+2,n)` with `n >= 2`.
pub fn realizable(format: ResolutionFormat) -> bool {
    let ResolutionFormat { m, n } = format;
    !(n == 1 && m % 2 == 0) && !(m == 3 && n >= 2)
}

/// Dynkin formats with `m <= max_m`, `n <= max_n`, optionally restricted
/// to realizable ones, ordered by `(m, n)`.
pub fn enumerate_dynkin(
    max_m: usize,
    max_n: usize,
    only_realizable: bool,
) -> Vec<(ResolutionFormat, DynkinClass)> {
    let mut out = Vec::new();
    for m in 3..=max_m {
        for n in 1..=max_n {
            let f = ResolutionFormat { m, n };
            let class = classify(f);
            if class.is_dynkin() && (!only_realizable || realizable(f)) {
                out.push((f, class));
            }
        }
    }
    out
}

/// The realizable Dynkin formats written out family by family: the
/// complete intersection, odd Gorenstein formats, almost complete
/// intersections and the five exceptional formats.
pub fn listed_dynkin_formats(max_m: usize, max_n: usize) -> Vec<(ResolutionFormat, DynkinClass)> {
    let mut out = vec![(ResolutionFormat { m: 3, n: 1 }, DynkinClass::A(3))];
    out.extend(
        (5..=max_m)
            .step_by(2)
            .map(|m| (ResolutionFormat { m, n: 1 }, DynkinClass::D(m))),
    );
    if max_m >= 4 {
        out.extend((2..=max_n).map(|n| (ResolutionFormat { m: 4, n }, DynkinClass::D(n + 3))));
    }
    for (m, n, c) in [
        (5, 2, DynkinClass::E6),
        (6, 2, DynkinClass::E7),
        (5, 3, DynkinClass::E7),
        (7, 2, DynkinClass::E8),
        (5, 4, DynkinClass::E8),
    ] {
        out.push((ResolutionFormat { m, n }, c));
    }
    out.retain(|(f, _)| f.m <= max_m && f.n <= max_n);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(m: usize, n: usize) -> ResolutionFormat {
        ResolutionFormat::new(m, n).unwrap()
    }

    #[test]
    fn exceptional_formats() {
        assert_eq!(classify(f(5, 2)), DynkinClass::E6);
        assert_eq!(classify(f(5, 4)), DynkinClass::E8);
        assert_eq!(classify(f(7, 2)), DynkinClass::E8);
        assert_eq!(classify(f(6, 3)), DynkinClass::NotDynkin);
        assert_eq!(classify(f(4, 2)), DynkinClass::D(5));
        assert_eq!(classify(f(3, 1)), DynkinClass::A(3));
        assert_eq!(classify(f(3, 4)), DynkinClass::A(6));
    }

    #[test]
    fn parse_and_print() {
        let x: ResolutionFormat = "1,6,8,3".parse().unwrap();
        assert_eq!(x, f(6, 3));
        assert_eq!(x.to_string(), "(1,6,8,3)");
        assert!("1,6,9,3".parse::<ResolutionFormat>().is_err());
        assert!("2,6,7,3".parse::<ResolutionFormat>().is_err());
        assert_eq!(f(6, 2).to_json()["arms"], json!([2, 4, 3]));
    }

    #[test]
    fn realizability() {
        assert!(!realizable(f(4, 1)));
        assert!(!realizable(f(3, 3)));
        assert!(realizable(f(8, 2)));
        assert!(realizable(f(3, 1)));
    }

    #[test]
    fn small_enumeration() {
        assert_eq!(
            enumerate_dynkin(3, 1, true),
            vec![(f(3, 1), DynkinClass::A(3))]
        );
    }

    #[test]
    fn graph_picture() {
        let g = f(5, 2).graph();
        assert_eq!(g.node_count(), 6);
        assert_eq!(g.render().matches('o').count(), 6);
    }
}
