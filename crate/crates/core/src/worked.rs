//! End-to-end runs of the two worked linkage chains, compared against
//! expected values: the square of the maximal ideal linked twice, and a
//! compressed level algebra of type two linked once.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::engine::ModuleOrder;
use crate::groebner::{hilbert, ideal_equal, to_vector, Ideal};
use crate::licci::{compressed_check, hu_obstruction, Verdict};
use crate::linalg::LinearSpan;
use crate::linkage::{direct_link, LinkStep, RegularSequence};
use crate::poly::{parse_poly, Field, MonomialOrder, Polynomial, Ring};
use crate::resolution::{resolve, socle, GradedBettiTable};

/// The values shipped with the crate.
pub const EXPECTED_JSON: &str = include_str!("../data/expected.json");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Expected {
    pub schema: u32,
    pub square_chain: SquareChain,
    pub compressed_chain: CompressedChain,
}

impl Expected {
    pub fn builtin() -> Expected {
        serde_json::from_str(EXPECTED_JSON).expect("shipped expectations parse")
    }

    pub fn from_json(text: &str) -> Result<Expected> {
        let e: Expected = serde_json::from_str(text)?;
        if e.schema != 1 {
            return Err(Error::Precondition(format!(
                "unsupported schema {}",
                e.schema
            )));
        }
        Ok(e)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SquareChain {
    pub ideal: Vec<String>,
    pub twists: Vec<Vec<u32>>,
    pub verdict: Verdict,
    pub first_sequence: Vec<String>,
    pub first_link: Vec<String>,
    pub first_format: Vec<usize>,
    pub first_level: bool,
    pub first_type: usize,
    pub second_sequence: Vec<String>,
    pub second_link: Vec<String>,
    pub second_format: Vec<usize>,
    pub second_socle: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CompressedChain {
    pub ideal: Vec<String>,
    pub twists: Vec<Vec<u32>>,
    pub hilbert: Vec<u64>,
    pub socle_polynomial: Vec<usize>,
    pub compressed: bool,
    pub verdict: Verdict,
    pub sequence: Vec<String>,
    pub link: Vec<String>,
    pub link_format: Vec<usize>,
    pub link_hilbert: Vec<u64>,
    pub link_level: bool,
    pub link_type: usize,
}

/// Outcome of one chain.
#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub name: String,
    pub passed: bool,
    /// One line naming each disagreement.
    pub mismatches: Vec<String>,
    pub summary: String,
}

#[derive(Default)]
struct Diff(Vec<String>);

impl Diff {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: &T, got: &T) {
        if expected != got {
            self.0
                .push(format!("{what}: expected {expected:?}, got {got:?}"));
        }
    }

    fn holds(&mut self, what: &str, ok: bool) {
        if !ok {
            self.0.push(format!("{what}: does not hold"));
        }
    }
}

fn ideal_of(ring: &std::sync::Arc<Ring>, gens: &[String]) -> Result<Ideal> {
    Ideal::from_strs(ring, gens)
}

fn sequence_of(ring: &std::sync::Arc<Ring>, elems: &[String]) -> Result<RegularSequence> {
    RegularSequence::parse(&elems.join(";"), ring)
}

fn ranks(table: &Option<GradedBettiTable>) -> Vec<usize> {
    table
        .as_ref()
        .map(GradedBettiTable::ranks)
        .unwrap_or_default()
}

fn format_text(ranks: &[usize]) -> String {
    ranks
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Whether `a` and `b` span the same subspace of `Q/I`.
pub fn same_classes(ideal: &Ideal, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    let order = ModuleOrder::ideal(MonomialOrder::DegRevLex);
    let span = |ps: &[Polynomial]| -> Result<LinearSpan> {
        let mut s = LinearSpan::new(order.clone());
        for p in ps {
            s.insert(&to_vector(&ideal.normal_form(p)?, 0, &order));
        }
        Ok(s)
    };
    let (sa, sb) = (span(a)?, span(b)?);
    let inside = |s: &LinearSpan, ps: &[Polynomial]| -> Result<bool> {
        for p in ps {
            if !s.contains(&to_vector(&ideal.normal_form(p)?, 0, &order)) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok(sa.dim() == sb.dim() && inside(&sa, b)? && inside(&sb, a)?)
}

fn check_link(diff: &mut Diff, label: &str, step: &LinkStep, expected_gens: &Ideal) -> Result<()> {
    diff.holds(
        &format!("{label} equals the expected ideal"),
        ideal_equal(&step.target, expected_gens)?,
    );
    diff.holds(&format!("{label} links back"), step.double_link_verified);
    Ok(())
}

/// Resolves the square of the maximal ideal, links it by the first
/// sequence and the result by the second, and checks formats, socles and
/// the obstruction verdict.
pub fn run_square_chain(expected: &SquareChain, field: Field) -> Result<ChainReport> {
    let ring = Ring::xyz(field);
    let mut diff = Diff::default();
    let n2 = ideal_of(&ring, &expected.ideal)?;
    let table = resolve(&n2)?.betti_table();
    diff.eq("twists", &expected.twists, &table.twists);
    diff.eq(
        "verdict",
        &expected.verdict,
        &hu_obstruction(&table)?.verdict,
    );

    let first = direct_link(&n2, &sequence_of(&ring, &expected.first_sequence)?)?;
    check_link(
        &mut diff,
        "first link",
        &first,
        &ideal_of(&ring, &expected.first_link)?,
    )?;
    let first_ranks = ranks(&first.target_table);
    diff.eq("first format", &expected.first_format, &first_ranks);
    let first_socle = socle(&first.target)?;
    diff.eq(
        "first link level",
        &expected.first_level,
        &first_socle.is_level(),
    );
    diff.eq(
        "first link type",
        &expected.first_type,
        &first_socle.dimension(),
    );

    let second = direct_link(
        &first.target,
        &sequence_of(&ring, &expected.second_sequence)?,
    )?;
    check_link(
        &mut diff,
        "second link",
        &second,
        &ideal_of(&ring, &expected.second_link)?,
    )?;
    let second_ranks = ranks(&second.target_table);
    diff.eq("second format", &expected.second_format, &second_ranks);
    let reps = socle(&second.target)?.representatives;
    let wanted = expected
        .second_socle
        .iter()
        .map(|s| parse_poly(s, &ring))
        .collect::<Result<Vec<_>>>()?;
    diff.holds(
        "second link socle classes",
        same_classes(&second.target, &reps, &wanted)?,
    );

    let summary = format!(
        "formats {} -> {} -> {}; socle {{{}}}",
        format_text(&table.ranks()),
        format_text(&first_ranks),
        format_text(&second_ranks),
        reps.iter()
            .map(|p| p.to_string().to_lowercase().replace('*', ""))
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(report("N2 chain", diff, summary))
}

/// Checks the compressed type-two ideal and its link by the cubes.
pub fn run_compressed_chain(expected: &CompressedChain, field: Field) -> Result<ChainReport> {
    let ring = Ring::xyz(field);
    let mut diff = Diff::default();
    let ideal = ideal_of(&ring, &expected.ideal)?;
    let table = resolve(&ideal)?.betti_table();
    diff.eq("twists", &expected.twists, &table.twists);
    let profile = compressed_check(&ideal)?;
    diff.eq("hilbert function", &expected.hilbert, &profile.hilbert);
    diff.eq(
        "socle polynomial",
        &expected.socle_polynomial,
        &profile.socle_coefficients,
    );
    diff.eq("compressed", &expected.compressed, &profile.is_compressed);
    diff.eq(
        "verdict",
        &expected.verdict,
        &hu_obstruction(&table)?.verdict,
    );

    let step = direct_link(&ideal, &sequence_of(&ring, &expected.sequence)?)?;
    check_link(&mut diff, "link", &step, &ideal_of(&ring, &expected.link)?)?;
    let link_ranks = ranks(&step.target_table);
    diff.eq("link format", &expected.link_format, &link_ranks);
    let link_h = hilbert(&step.target)?.values;
    diff.eq("link hilbert function", &expected.link_hilbert, &link_h);
    let soc = socle(&step.target)?;
    diff.eq("link level", &expected.link_level, &soc.is_level());
    diff.eq("link type", &expected.link_type, &soc.dimension());

    let h_text = |h: &[u64]| {
        h.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    let summary = format!(
        "{} -> {}; h = {} and {}",
        format_text(&table.ranks()),
        format_text(&link_ranks),
        h_text(&profile.hilbert),
        h_text(&link_h)
    );
    Ok(report("I_3_7 chain", diff, summary))
}

fn report(name: &str, diff: Diff, summary: String) -> ChainReport {
    ChainReport {
        name: name.to_string(),
        passed: diff.0.is_empty(),
        mismatches: diff.0,
        summary,
    }
}

/// Both chains.
pub fn reproduce(expected: &Expected, field: Field) -> Result<Vec<ChainReport>> {
    Ok(vec![
        run_square_chain(&expected.square_chain, field)?,
        run_compressed_chain(&expected.compressed_chain, field)?,
    ])
}

impl std::fmt::Display for ChainReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{}: {status} ({})", self.name, self.summary)?;
        for m in &self.mismatches {
            write!(f, "\n  mismatch: {m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_expectations_pass() {
        let reports = reproduce(&Expected::builtin(), Field::Rationals).unwrap();
        for r in &reports {
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn tampered_expectation_is_named() {
        let mut e = Expected::builtin();
        e.compressed_chain.link_type = 4;
        let r = run_compressed_chain(&e.compressed_chain, Field::Rationals).unwrap();
        assert!(!r.passed);
        assert!(r.mismatches[0].starts_with("link type"));
    }
}
