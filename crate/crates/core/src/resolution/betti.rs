use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Twists `d_{i,j}` of a graded free resolution; `twists[i]` lists the
/// internal degrees of the basis of `F_i` in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedBettiTable {
    pub twists: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    format: Vec<usize>,
    twists: Vec<Vec<u32>>,
}

impl GradedBettiTable {
    pub fn new(mut twists: Vec<Vec<u32>>) -> Self {
        for t in &mut twists {
            t.sort_unstable();
        }
        GradedBettiTable { twists }
    }

    /// Homological length `p`.
    pub fn length(&self) -> usize {
        self.twists.len().saturating_sub(1)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.twists.iter().map(Vec::len).collect()
    }

    /// `β_{i,d}`.
    pub fn betti(&self, i: usize, d: u32) -> usize {
        self.twists
            .get(i)
            .map_or(0, |t| t.iter().filter(|&&x| x == d).count())
    }

    /// `Σ_i (-1)^i Σ_j t^{d_{i,j}}`, lowest degree first.
    pub fn euler_numerator(&self) -> Vec<i64> {
        let top = self.twists.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut out = vec![0i64; top + 1];
        for (i, ts) in self.twists.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for &d in ts {
                out[d as usize] += sign;
            }
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Ranks of the internal-degree multisets, keyed by degree.
    pub fn degree_counts(&self, i: usize) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &d in self.twists.get(i).map(Vec::as_slice).unwrap_or(&[]) {
            *m.entry(d).or_insert(0) += 1;
        }
        m
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(BettiJson {
            format: self.ranks(),
            twists: self.twists.clone(),
        })
        .expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let parsed: BettiJson = serde_json::from_value(value.clone())?;
        let table = GradedBettiTable::new(parsed.twists);
        if table.ranks() != parsed.format {
            return Err(Error::InvalidFormat(
                "format does not match the twist lists".into(),
            ));
        }
        Ok(table)
    }

    /// Twist lists written compactly, e.g. `(0; 2^6; 3^8; 4^3)`.
    pub fn compact(&self) -> String {
        let parts: Vec<String> = (0..self.twists.len())
            .map(|i| {
                self.degree_counts(i)
                    .iter()
                    .map(|(d, k)| {
                        if *k == 1 {
                            d.to_string()
                        } else {
                            format!("{d}^{k}")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("({})", parts.join("; "))
    }
}

impl fmt::Display for GradedBettiTable {
    /// Rows are indexed by `d - i`, columns by `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.twists.len();
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self
                .twists
                .iter()
                .enumerate()
                .flat_map(|(i, ts)| ts.iter().map(move |&d| d as i64 - i as i64))
                .collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let cell = |i: usize, row: i64| -> String {
            let d = row + i as i64;
            let n = if d < 0 { 0 } else { self.betti(i, d as u32) };
            if n == 0 {
                ".".to_string()
            } else {
                n.to_string()
            }
        };
        let width = self
            .ranks()
            .iter()
            .map(|r| r.to_string().len())
            .max()
            .unwrap_or(1)
            .max(p.to_string().len());
        let label = rows
            .iter()
            .map(|r| format!("{r}:").len())
            .max()
            .unwrap_or(2)
            .max("total:".len());
        write!(f, "{:>label$}", "")?;
        for i in 0..p {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for r in self.ranks() {
            write!(f, " {r:>width$}")?;
        }
        for row in rows {
            writeln!(f)?;
            write!(f, "{:>label$}", format!("{row}:"))?;
            for i in 0..p {
                write!(f, " {:>width$}", cell(i, row))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n2() -> GradedBettiTable {
        GradedBettiTable::new(vec![vec![0], vec![2; 6], vec![3; 8], vec![4; 3]])
    }

    #[test]
    fn euler_characteristic() {
        assert_eq!(n2().euler_numerator(), vec![1, 0, -6, 8, -3]);
    }

    #[test]
    fn json_roundtrip() {
        let t = n2();
        let v = t.to_json();
        assert_eq!(v["format"], serde_json::json!([1, 6, 8, 3]));
        assert_eq!(GradedBettiTable::from_json(&v).unwrap(), t);
    }

    #[test]
    fn pretty_print() {
        let s = n2().to_string();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(
            lines[1].split_whitespace().collect::<Vec<_>>(),
            ["total:", "1", "6", "8", "3"]
        );
        assert_eq!(
            lines[2].split_whitespace().collect::<Vec<_>>(),
            ["0:", "1", ".", ".", "."]
        );
        assert_eq!(
            lines[3].split_whitespace().collect::<Vec<_>>(),
            ["1:", ".", "6", "8", "3"]
        );
        assert_eq!(n2().compact(), "(0; 2^6; 3^8; 4^3)");
    }
}
