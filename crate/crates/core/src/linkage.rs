//! Direct links `J = (x_1, x_2, x_3) : I`, the format moves they induce,
//! and realization of formats by chains of links.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::formats::{format_of, realizable, ResolutionFormat};
use crate::generators::{gorenstein_ideal, RETRY_BUDGET};
use crate::groebner::engine::ModuleOrder;
use crate::groebner::{colon, ideal_equal, Ideal};
use crate::io::ideal_to_json;
use crate::linalg::LinearSpan;
use crate::poly::{monomials_of_degree, MonomialOrder, Polynomial, Ring};
use crate::resolution::{resolve, GradedBettiTable};

/// Format changes produced by one direct link (`P22a`, `P22b`) or by two
/// consecutive links (`C23a`, `C23b`, `C23c`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormatMove {
    P22a,
    P22b,
    C23a,
    C23b,
    C23c,
}

impl FormatMove {
    pub const ALL: [FormatMove; 5] = [
        FormatMove::P22a,
        FormatMove::P22b,
        FormatMove::C23a,
        FormatMove::C23b,
        FormatMove::C23c,
    ];

    pub fn precondition(&self, f: ResolutionFormat) -> bool {
        match self {
            FormatMove::P22a | FormatMove::C23a => f.m >= 4,
            FormatMove::P22b | FormatMove::C23b => f.m >= 5,
            FormatMove::C23c => f.m >= 4 && f.n >= 2,
        }
    }

    /// The direct links making up the move, in order of application.
    pub fn links(&self) -> Vec<FormatMove> {
        match self {
            FormatMove::P22a | FormatMove::P22b => vec![*self],
            FormatMove::C23a => vec![FormatMove::P22a, FormatMove::P22a],
            FormatMove::C23b => vec![FormatMove::P22b, FormatMove::P22a],
            FormatMove::C23c => vec![FormatMove::P22a, FormatMove::P22b],
        }
    }

    /// How many of the three sequence elements are minimal generators.
    fn minimal_count(&self) -> usize {
        match self {
            FormatMove::P22a => 2,
            FormatMove::P22b => 3,
            _ => unreachable!("only single links are realized directly"),
        }
    }
}

impl fmt::Display for FormatMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for FormatMove {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormatMove::ALL
            .into_iter()
            .find(|m| m.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown move {s:?}")))
    }
}

pub fn apply_move(f: ResolutionFormat, mv: FormatMove) -> Result<ResolutionFormat> {
    if !mv.precondition(f) {
        return Err(Error::Precondition(format!("{mv} does not apply to {f}")));
    }
    let ResolutionFormat { m, n } = f;
    let (m2, n2) = match mv {
        FormatMove::P22a => (n + 3, m - 2),
        FormatMove::P22b => (n + 3, m - 3),
        FormatMove::C23a => (m + 1, n + 1),
        FormatMove::C23b => (m, n + 1),
        FormatMove::C23c => (m + 1, n),
    };
    ResolutionFormat::new(m2, n2)
}

/// Checks that every two-link move equals the composition of its single
/// links on all formats with `3 <= m, n <= max` where it applies. Returns
/// the failures.
pub fn verify_move_algebra(max: usize) -> Vec<String> {
    let mut failures = Vec::new();
    for m in 3..=max {
        for n in 1..=max {
            let f = ResolutionFormat { m, n };
            for mv in [FormatMove::C23a, FormatMove::C23b, FormatMove::C23c] {
                if !mv.precondition(f) {
                    continue;
                }
                let composed = mv.links().into_iter().try_fold(f, apply_move);
                match (composed, apply_move(f, mv)) {
                    (Ok(a), Ok(b)) if a == b => {}
                    (a, b) => {
                        failures.push(format!("{mv} on {f}: links give {a:?}, move gives {b:?}"))
                    }
                }
            }
        }
    }
    failures
}

/// Three homogeneous elements generating an ideal of codimension three.
#[derive(Clone, Debug)]
pub struct RegularSequence {
    elems: [Polynomial; 3],
}

impl RegularSequence {
    pub fn new(elems: [Polynomial; 3]) -> Result<RegularSequence> {
        let ring = elems[0].ring().clone();
        if elems.iter().any(|p| p.ring() != &ring) {
            return Err(Error::RingMismatch);
        }
        if let Some(p) = elems.iter().find(|p| p.is_zero() || !p.is_homogeneous()) {
            return Err(Error::NotRegular(format!("{p} is zero or not homogeneous")));
        }
        if ring.num_vars() < 3 {
            return Err(Error::NotRegular("fewer than three variables".into()));
        }
        let seq = RegularSequence { elems };
        let ideal = seq.ideal();
        if ideal.is_unit() || ideal.krull_dim() + 3 != ring.num_vars() {
            return Err(Error::NotRegular(
                "the elements do not generate an ideal of codimension 3".into(),
            ));
        }
        Ok(seq)
    }

    pub fn parse(text: &str, ring: &Arc<Ring>) -> Result<RegularSequence> {
        let polys = crate::poly::parse_poly_list(text, ring)?;
        let elems: [Polynomial; 3] = polys
            .try_into()
            .map_err(|_| Error::Precondition("a sequence needs exactly three elements".into()))?;
        RegularSequence::new(elems)
    }

    pub fn elements(&self) -> &[Polynomial; 3] {
        &self.elems
    }

    pub fn degrees(&self) -> [u32; 3] {
        self.elems.clone().map(|p| p.degree().expect("nonzero"))
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.elems[0].ring(), self.elems.to_vec()).expect("same ring")
    }
}

/// One audited direct link.
#[derive(Clone, Debug)]
pub struct LinkStep {
    pub source: Ideal,
    pub source_table: GradedBettiTable,
    pub sequence: RegularSequence,
    pub target: Ideal,
    /// `None` when the target is the unit ideal.
    pub target_table: Option<GradedBettiTable>,
    /// Format forced by the degrees of the sequence and how many of its
    /// elements are minimal generators, if the link is as generic as the
    /// degrees allow.
    pub predicted: Option<ResolutionFormat>,
    pub double_link_verified: bool,
    /// The target is the unit ideal (the source was generated by the
    /// sequence).
    pub terminal: bool,
}

impl LinkStep {
    pub fn source_format(&self) -> Option<ResolutionFormat> {
        format_of(&self.source_table).ok()
    }

    pub fn target_format(&self) -> Option<ResolutionFormat> {
        self.target_table.as_ref().and_then(|t| format_of(t).ok())
    }

    pub fn matches_prediction(&self) -> bool {
        self.predicted.is_some() && self.predicted == self.target_format()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "source": ideal_to_json(&self.source),
            "source_betti": self.source_table.to_json(),
            "sequence": self.sequence.elems.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "sequence_degrees": self.sequence.degrees(),
            "target": ideal_to_json(&self.target),
            "target_betti": self.target_table.as_ref().map(GradedBettiTable::to_json),
            "predicted_format": self.predicted.map(|f| f.ranks()),
            "double_link_verified": self.double_link_verified,
            "terminal": self.terminal,
        })
    }
}

/// Number of the given elements that are independent modulo `𝔪 I`.
pub fn minimal_rank(ideal: &Ideal, elems: &[Polynomial]) -> Result<usize> {
    let gens = ideal.minimal_generators()?;
    let order = ModuleOrder::ideal(MonomialOrder::DegRevLex);
    let e = ideal.ring().num_vars();
    let mut degrees: Vec<u32> = elems.iter().filter_map(Polynomial::degree).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut rank = 0;
    for d in degrees {
        let mut span = LinearSpan::new(order.clone());
        for g in &gens {
            let gd = g.degree().expect("nonzero generator");
            if gd >= d {
                continue;
            }
            for mono in monomials_of_degree(e, d - gd) {
                let one = ideal.ring().field().one();
                span.insert(&crate::groebner::to_vector(
                    &g.mul_term(&one, &mono),
                    0,
                    &order,
                ));
            }
        }
        for x in elems.iter().filter(|x| x.degree() == Some(d)) {
            if span.insert(&crate::groebner::to_vector(x, 0, &order)) {
                rank += 1;
            }
        }
    }
    Ok(rank)
}

/// Format predicted for a link of `source` by `elems`, assuming the only
/// cancellation in the mapping cone comes from minimal generators in the
/// sequence. The assumption holds when no `deg x_i + deg x_j` is a twist of
/// `F_2` and `Σ deg x_i` is not a twist of `F_3`.
fn predict(source: ResolutionFormat, r1: usize) -> Option<ResolutionFormat> {
    ResolutionFormat::new(source.n + 3, source.m.checked_sub(r1)?).ok()
}

fn check_grade3_perfect(table: &GradedBettiTable, ideal: &Ideal) -> Result<()> {
    let codim = ideal.ring().num_vars() - ideal.krull_dim();
    if table.length() != 3 || codim != 3 {
        return Err(Error::Precondition(format!(
            "ideal is not grade-3 perfect (codim {codim}, projective dimension {})",
            table.length()
        )));
    }
    Ok(())
}

/// Performs and audits the direct link of `ideal` by `seq`.
pub fn direct_link(ideal: &Ideal, seq: &RegularSequence) -> Result<LinkStep> {
    ideal.require_homogeneous()?;
    for x in seq.elements() {
        if x.ring() != ideal.ring() {
            return Err(Error::RingMismatch);
        }
        if !ideal.contains(x)? {
            return Err(Error::Precondition(format!("{x} is not in the ideal")));
        }
    }
    let source_table = resolve(ideal)?.betti_table();
    check_grade3_perfect(&source_table, ideal)?;
    link_with_table(ideal, source_table, seq)
}

fn link_with_table(
    ideal: &Ideal,
    source_table: GradedBettiTable,
    seq: &RegularSequence,
) -> Result<LinkStep> {
    let ci = seq.ideal();
    let target = colon(&ci, ideal)?;
    let double_link_verified = ideal_equal(&colon(&ci, &target)?, ideal)?;
    if !double_link_verified {
        return Err(Error::Verification(
            "double link does not return to the source".into(),
        ));
    }
    let source_format = format_of(&source_table).ok();
    let predicted = match source_format {
        Some(f) => predict(f, minimal_rank(ideal, seq.elements())?),
        None => None,
    };
    if target.is_unit() {
        return Ok(LinkStep {
            source: ideal.clone(),
            source_table,
            sequence: seq.clone(),
            target,
            target_table: None,
            predicted,
            double_link_verified,
            terminal: true,
        });
    }
    let target_table = resolve(&target)?.betti_table();
    check_grade3_perfect(&target_table, &target)
        .map_err(|e| Error::Verification(format!("link target: {e}")))?;
    Ok(LinkStep {
        source: ideal.clone(),
        source_table,
        sequence: seq.clone(),
        target,
        target_table: Some(target_table),
        predicted,
        double_link_verified,
        terminal: false,
    })
}

/// Which part of the ideal a sequence element is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementKind {
    /// A generic element of `I_d`; a minimal generator when `d` is a
    /// generator degree.
    Generic,
    /// A generic element of `(𝔪 I)_d`.
    Deep,
}

/// A random homogeneous element of degree `d` of `I` or `𝔪 I`.
pub fn random_element<R: Rng>(
    gens: &[Polynomial],
    d: u32,
    kind: ElementKind,
    rng: &mut R,
) -> Option<Polynomial> {
    let ring = gens.first()?.ring().clone();
    let field = ring.field();
    let mut acc = Polynomial::zero(&ring);
    for g in gens {
        let gd = g.degree()?;
        let allowed = match kind {
            ElementKind::Generic => gd <= d,
            ElementKind::Deep => gd < d,
        };
        if !allowed {
            continue;
        }
        for mono in monomials_of_degree(ring.num_vars(), d - gd) {
            acc = acc.add(&g.mul_term(&field.random(rng), &mono)).ok()?;
        }
    }
    (!acc.is_zero()).then_some(acc)
}

/// Links `ideal` by three random elements of the requested degrees, each a
/// generic element of `I` in its degree; retries until the elements form
/// a regular sequence and the link passes its audit.
pub fn find_generic_link(ideal: &Ideal, degrees: [u32; 3], seed: u64) -> Result<LinkStep> {
    ideal.require_homogeneous()?;
    let table = resolve(ideal)?.betti_table();
    check_grade3_perfect(&table, ideal)?;
    let req = LinkRequest {
        ideal,
        table: &table,
        degrees,
        kinds: [ElementKind::Generic; 3],
        attempts: RETRY_BUDGET,
    };
    find_link(req, seed, |_| true)
}

struct LinkRequest<'a> {
    ideal: &'a Ideal,
    table: &'a GradedBettiTable,
    degrees: [u32; 3],
    kinds: [ElementKind; 3],
    attempts: usize,
}

fn find_link(
    req: LinkRequest<'_>,
    seed: u64,
    accept: impl Fn(&LinkStep) -> bool,
) -> Result<LinkStep> {
    let LinkRequest {
        ideal,
        table,
        degrees,
        kinds,
        attempts,
    } = req;
    let gens = ideal.minimal_generators()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_error = String::from("no admissible elements in the requested degrees");
    for _ in 0..attempts {
        let drawn: Option<Vec<Polynomial>> = (0..3)
            .map(|i| random_element(&gens, degrees[i], kinds[i], &mut rng))
            .collect();
        let Some(drawn) = drawn else {
            break;
        };
        let elems: [Polynomial; 3] = drawn.try_into().expect("three elements");
        let seq = match RegularSequence::new(elems) {
            Ok(s) => s,
            Err(e) => {
                last_error = e.to_string();
                continue;
            }
        };
        match link_with_table(ideal, table.clone(), &seq) {
            Ok(step) if accept(&step) => return Ok(step),
            Ok(step) => {
                last_error = format!(
                    "target format {} differs from the prediction {}",
                    step.target_format().map_or("-".into(), |f| f.to_string()),
                    step.predicted.map_or("-".into(), |f| f.to_string())
                );
            }
            Err(e) => last_error = e.to_string(),
        }
    }
    Err(Error::RetriesExhausted {
        attempts,
        context: format!("link in degrees {degrees:?}: {last_error}"),
    })
}

/// Degree triples for a link realizing `mv`, best first: those where the
/// mapping cone can only cancel against minimal generators come first,
/// then smaller total degree.
fn candidate_degrees(
    table: &GradedBettiTable,
    mv: FormatMove,
) -> Vec<([u32; 3], [ElementKind; 3])> {
    let gen_degrees = &table.twists[1];
    let k = mv.minimal_count();
    let d_min = gen_degrees[0];
    let d_max = *gen_degrees.last().unwrap();
    let mut minimal_choices: Vec<Vec<u32>> = Vec::new();
    let n = gen_degrees.len();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize == k {
            let pick: Vec<u32> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| gen_degrees[i])
                .collect();
            if !minimal_choices.contains(&pick) {
                minimal_choices.push(pick);
            }
        }
    }
    let mut out = Vec::new();
    for pick in minimal_choices {
        if k == 3 {
            out.push(([pick[0], pick[1], pick[2]], [ElementKind::Generic; 3]));
        } else {
            for deep in d_min + 1..=d_max + 2 {
                out.push((
                    [pick[0], pick[1], deep],
                    [
                        ElementKind::Generic,
                        ElementKind::Generic,
                        ElementKind::Deep,
                    ],
                ));
            }
        }
    }
    let collisions = |d: &[u32; 3]| {
        let pairs = [d[0] + d[1], d[0] + d[2], d[1] + d[2]];
        let f2 = pairs.iter().filter(|s| table.twists[2].contains(s)).count();
        let f3 = usize::from(table.twists[3].contains(&(d[0] + d[1] + d[2])));
        f2 + f3
    };
    out.sort_by_key(|(d, _)| (collisions(d), d.iter().sum::<u32>(), *d));
    out
}

/// Attempts per degree triple when searching for a link with a prescribed
/// target format.
const ATTEMPTS_PER_TRIPLE: usize = 8;
/// Degree triples tried per link.
const TRIPLES_PER_LINK: usize = 8;

/// Links `ideal` so that its format changes by `mv` (`P22a` or `P22b`),
/// searching degree triples and retrying random choices.
pub fn link_by_move(ideal: &Ideal, mv: FormatMove, seed: u64) -> Result<LinkStep> {
    let mut errors = Vec::new();
    let table = resolve(ideal)?.betti_table();
    let found = links_by_move(ideal, &table, mv, seed, &mut errors)?.next();
    found.ok_or_else(|| Error::RetriesExhausted {
        attempts: ATTEMPTS_PER_TRIPLE * TRIPLES_PER_LINK,
        context: format!("{mv}: {}", errors.join("; ")),
    })
}

/// Successful links realizing `mv`, one per degree triple that works, best
/// triple first. Failures are appended to `errors`.
fn links_by_move<'a>(
    ideal: &'a Ideal,
    table: &'a GradedBettiTable,
    mv: FormatMove,
    seed: u64,
    errors: &'a mut Vec<String>,
) -> Result<impl Iterator<Item = LinkStep> + 'a> {
    if !matches!(mv, FormatMove::P22a | FormatMove::P22b) {
        return Err(Error::Precondition(format!("{mv} is not a single link")));
    }
    ideal.require_homogeneous()?;
    check_grade3_perfect(table, ideal)?;
    let source = format_of(table)?;
    let want = apply_move(source, mv)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates = candidate_degrees(table, mv);
    Ok(candidates
        .into_iter()
        .take(TRIPLES_PER_LINK)
        .filter_map(move |(degrees, kinds)| {
            let req = LinkRequest {
                ideal,
                table,
                degrees,
                kinds,
                attempts: ATTEMPTS_PER_TRIPLE,
            };
            match find_link(req, rng.gen(), |s| s.target_format() == Some(want)) {
                Ok(step) => Some(step),
                Err(e) => {
                    errors.push(format!("{mv} from {source} in degrees {degrees:?}: {e}"));
                    None
                }
            }
        }))
}

/// The Gorenstein format a chain starts from, and the single links leading
/// from it to `f`.
pub fn realization_plan(f: ResolutionFormat) -> Result<(ResolutionFormat, Vec<FormatMove>)> {
    if !realizable(f) {
        return Err(Error::Precondition(format!("{f} is not realizable")));
    }
    let ResolutionFormat { m, n } = f;
    let gor = |g: usize| ResolutionFormat::new(g, 1).expect("valid");
    let repeat =
        |mv: FormatMove, k: usize| -> Vec<FormatMove> { (0..k).flat_map(|_| mv.links()).collect() };
    Ok(if n == 1 {
        (gor(m), Vec::new())
    } else if m == 4 && n % 2 == 0 {
        (gor(n + 3), vec![FormatMove::P22b])
    } else if m == 4 {
        (gor(n + 2), vec![FormatMove::P22a])
    } else if m % 2 == 1 {
        (gor(m), repeat(FormatMove::C23b, n - 1))
    } else {
        let mut moves = FormatMove::C23a.links();
        moves.extend(repeat(FormatMove::C23b, n - 2));
        (gor(m - 1), moves)
    })
}

/// An ideal of format `f` in a three-variable ring, built from a
/// Gorenstein ideal by the chain of links in [`realization_plan`]; every
/// intermediate format is checked against the move table.
#[derive(Clone, Debug)]
pub struct Realization {
    pub ideal: Ideal,
    pub start: ResolutionFormat,
    pub steps: Vec<LinkStep>,
}

/// Upper bound on links attempted by one realization, counting those
/// abandoned when backtracking.
const REALIZATION_LINK_BUDGET: usize = 64;

pub fn realize_format(f: ResolutionFormat, ring: &Arc<Ring>, seed: u64) -> Result<Realization> {
    if ring.num_vars() != 3 {
        return Err(Error::InvalidRing(
            "realization works in three variables".into(),
        ));
    }
    let (start, moves) = realization_plan(f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ideal = gorenstein_ideal(start.m, ring, rng.gen())?;
    let mut search = ChainSearch {
        moves: &moves,
        rng,
        budget: REALIZATION_LINK_BUDGET,
        errors: Vec::new(),
        deepest: Vec::new(),
    };
    let table = resolve(&ideal)?.betti_table();
    match search.extend(&ideal, &table, start, &mut Vec::new()) {
        Some(steps) => {
            let ideal = steps.last().map_or(ideal, |s| s.target.clone());
            Ok(Realization {
                ideal,
                start,
                steps,
            })
        }
        None => {
            let chain: Vec<String> = std::iter::once(start.to_string())
                .chain(search.deepest.iter().map(|f| f.to_string()))
                .collect();
            Err(Error::Verification(format!(
                "no chain to {f} found; longest partial chain {}; last failures: {}",
                chain.join(" -> "),
                search
                    .errors
                    .iter()
                    .rev()
                    .take(3)
                    .cloned()
                    .collect::<Vec<_>>()
                    .join("; ")
            )))
        }
    }
}

/// Depth-first search over links, backtracking to other degree triples
/// when a later move cannot be realized from an intermediate ideal.
struct ChainSearch<'m> {
    moves: &'m [FormatMove],
    rng: ChaCha8Rng,
    budget: usize,
    errors: Vec<String>,
    deepest: Vec<ResolutionFormat>,
}

impl ChainSearch<'_> {
    fn extend(
        &mut self,
        ideal: &Ideal,
        table: &GradedBettiTable,
        format: ResolutionFormat,
        steps: &mut Vec<LinkStep>,
    ) -> Option<Vec<LinkStep>> {
        let Some(&mv) = self.moves.get(steps.len()) else {
            return Some(steps.clone());
        };
        let want = apply_move(format, mv).ok()?;
        let seed = self.rng.gen();
        let mut errors = Vec::new();
        let Ok(links) = links_by_move(ideal, table, mv, seed, &mut errors) else {
            return None;
        };
        let links: Vec<LinkStep> = links.take(self.budget).collect();
        self.budget = self.budget.saturating_sub(links.len().max(1));
        self.errors.append(&mut errors);
        for step in links {
            if step.target_format() != Some(want) {
                continue;
            }
            let target_table = step.target_table.clone().expect("non-terminal link");
            let target = step.target.clone();
            steps.push(step);
            if steps.len() > self.deepest.len() {
                self.deepest = steps.iter().filter_map(LinkStep::target_format).collect();
            }
            if let Some(done) = self.extend(&target, &target_table, want, steps) {
                return Some(done);
            }
            steps.pop();
            if self.budget == 0 {
                return None;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(m: usize, n: usize) -> ResolutionFormat {
        ResolutionFormat::new(m, n).unwrap()
    }

    #[test]
    fn move_table() {
        assert_eq!(apply_move(f(6, 3), FormatMove::P22a).unwrap(), f(6, 4));
        assert_eq!(apply_move(f(5, 5), FormatMove::P22b).unwrap(), f(8, 2));
        assert!(apply_move(f(4, 3), FormatMove::P22b).is_err());
        assert!(apply_move(f(4, 1), FormatMove::C23c).is_err());
    }

    #[test]
    fn plans_end_at_target() {
        for m in 3..12 {
            for n in 1..8 {
                let target = f(m, n);
                let Ok((start, moves)) = realization_plan(target) else {
                    assert!(!realizable(target));
                    continue;
                };
                assert_eq!(start.n, 1);
                assert_eq!(start.m % 2, 1);
                let end = moves
                    .iter()
                    .try_fold(start, |acc, mv| apply_move(acc, *mv))
                    .unwrap();
                assert_eq!(end, target);
            }
        }
    }

    #[test]
    fn move_names_parse() {
        assert_eq!("c23b".parse::<FormatMove>().unwrap(), FormatMove::C23b);
        assert!("P99".parse::<FormatMove>().is_err());
    }
}
