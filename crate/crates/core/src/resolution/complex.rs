use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::engine::{self, ModuleOrder, VTerm, Vector};
use crate::groebner::{hilbert, Ideal};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

use super::betti::GradedBettiTable;

/// A homogeneous map `F_src -> F_tgt` of graded free modules, stored as a
/// dense matrix with one row per target basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub target_twists: Vec<u32>,
    pub source_twists: Vec<u32>,
    pub entries: Vec<Vec<Polynomial>>,
}

impl GradedMap {
    pub fn new(
        ring: &Arc<Ring>,
        target_twists: Vec<u32>,
        source_twists: Vec<u32>,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<GradedMap> {
        if entries.len() != target_twists.len()
            || entries.iter().any(|r| r.len() != source_twists.len())
        {
            return Err(Error::Precondition(
                "matrix shape does not match the twists".into(),
            ));
        }
        if entries.iter().flatten().any(|p| p.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        let map = GradedMap {
            target_twists,
            source_twists,
            entries,
        };
        map.check_homogeneous()?;
        Ok(map)
    }

    /// The `1 x m` presentation `F_1 -> Q` of `Q/(gens)`.
    pub fn from_generators(gens: &[Polynomial]) -> Result<GradedMap> {
        let ring = gens
            .first()
            .ok_or_else(|| Error::Precondition("no generators".into()))?
            .ring()
            .clone();
        let twists = gens
            .iter()
            .map(|g| {
                g.degree()
                    .ok_or_else(|| Error::Precondition("zero generator".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        GradedMap::new(&ring, vec![0], twists, vec![gens.to_vec()])
    }

    pub fn rows(&self) -> usize {
        self.target_twists.len()
    }

    pub fn cols(&self) -> usize {
        self.source_twists.len()
    }

    fn check_homogeneous(&self) -> Result<()> {
        for (r, row) in self.entries.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let want = self.source_twists[c] as i64 - self.target_twists[r] as i64;
                if !p.is_homogeneous() || p.degree().map(i64::from) != Some(want) {
                    return Err(Error::NotHomogeneous(format!(
                        "entry ({r},{c}) = {p} does not have degree {want}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn column(&self, c: usize, order: &ModuleOrder) -> Vector {
        let terms = self
            .entries
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row[c].terms().iter().map(move |t| VTerm {
                    coeff: t.coeff.clone(),
                    mono: t.mono,
                    comp: r,
                })
            })
            .collect();
        Vector::from_terms(terms, order)
    }

    /// Builds the map whose columns are `cols`, components indexing rows.
    pub fn from_columns(
        ring: &Arc<Ring>,
        target_twists: Vec<u32>,
        source_twists: Vec<u32>,
        cols: &[Vector],
    ) -> GradedMap {
        let rows = target_twists.len();
        let mut raw: Vec<Vec<Vec<_>>> = vec![vec![Vec::new(); cols.len()]; rows];
        for (c, v) in cols.iter().enumerate() {
            for t in &v.terms {
                raw[t.comp][c].push((t.coeff.clone(), t.mono));
            }
        }
        let entries = raw
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|terms| Polynomial::from_terms(ring, terms))
                    .collect()
            })
            .collect();
        GradedMap {
            target_twists,
            source_twists,
            entries,
        }
    }

    /// `self ∘ other`, where `other` maps into the source of `self`.
    pub fn compose(&self, other: &GradedMap) -> Result<Vec<Vec<Polynomial>>> {
        if self.cols() != other.rows() {
            return Err(Error::Precondition("maps are not composable".into()));
        }
        let mut out = Vec::with_capacity(self.rows());
        for row in &self.entries {
            let mut out_row = Vec::with_capacity(other.cols());
            for c in 0..other.cols() {
                let mut acc: Option<Polynomial> = None;
                for (k, a) in row.iter().enumerate() {
                    let prod = a.mul(&other.entries[k][c])?;
                    acc = Some(match acc {
                        None => prod,
                        Some(s) => s.add(&prod)?,
                    });
                }
                out_row.push(acc.expect("nonempty sum"));
            }
            out.push(out_row);
        }
        Ok(out)
    }

    /// No entry is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|p| p.constant_term().is_zero())
    }
}

fn lift_order(target_twists: &[u32], source_twists: &[u32]) -> ModuleOrder {
    let twists = target_twists.iter().chain(source_twists).copied().collect();
    ModuleOrder::position_over_term(MonomialOrder::DegRevLex, twists)
}

/// Generators of the kernel of `map`, as a map into its source.
///
/// Each column `c_j` is paired with the basis vector `e_j` of a second
/// copy of the source, and a position-over-term basis with the target
/// components first is computed; the elements free of target components
/// generate the kernel. The result is pruned to a minimal generating set.
pub fn syzygies(ring: &Arc<Ring>, map: &GradedMap) -> Result<GradedMap> {
    map.check_homogeneous()?;
    let r0 = map.rows();
    let order = lift_order(&map.target_twists, &map.source_twists);
    let one = ring.field().one();
    let gens: Vec<Vector> = (0..map.cols())
        .map(|j| {
            let mut v = map.column(j, &order);
            v.terms.push(VTerm {
                coeff: one.clone(),
                mono: Monomial::one(),
                comp: r0 + j,
            });
            v
        })
        .collect();
    let basis = engine::groebner_basis(&gens, &order);
    let kernel_order =
        ModuleOrder::position_over_term(MonomialOrder::DegRevLex, map.source_twists.clone());
    let kernel: Vec<Vector> = basis
        .into_iter()
        .filter(|v| v.terms[0].comp >= r0)
        .map(|v| Vector {
            terms: v
                .terms
                .into_iter()
                .map(|t| VTerm {
                    comp: t.comp - r0,
                    ..t
                })
                .collect(),
        })
        .collect();
    let keep = engine::minimal_subset(&kernel, &kernel_order, ring.num_vars());
    let mut cols: Vec<Vector> = keep.into_iter().map(|i| kernel[i].clone()).collect();
    cols.sort_by_key(|v| v.degree(&kernel_order).unwrap());
    let twists = cols
        .iter()
        .map(|v| v.degree(&kernel_order).unwrap())
        .collect();
    Ok(GradedMap::from_columns(
        ring,
        map.source_twists.clone(),
        twists,
        &cols,
    ))
}

/// A finite graded free resolution `F_0 <- F_1 <- ... <- F_p` of `Q/I`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub ring: Arc<Ring>,
    /// `maps[i]` is the differential `F_{i+1} -> F_i`.
    pub maps: Vec<GradedMap>,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn twists(&self, i: usize) -> &[u32] {
        if i == 0 {
            match self.maps.first() {
                Some(m) => &m.target_twists,
                None => &[0],
            }
        } else {
            &self.maps[i - 1].source_twists
        }
    }

    pub fn betti_table(&self) -> GradedBettiTable {
        let twists = (0..=self.length())
            .map(|i| {
                let mut t = self.twists(i).to_vec();
                t.sort_unstable();
                t
            })
            .collect();
        GradedBettiTable::new(twists)
    }

    /// Consecutive differentials compose to zero.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| {
            w[0].compose(&w[1])
                .map(|m| m.iter().flatten().all(Polynomial::is_zero))
                .unwrap_or(false)
        })
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(GradedMap::is_minimal)
    }
}

/// Minimal graded free resolution of `Q/I` by iterated minimal syzygies.
pub fn resolve(ideal: &Ideal) -> Result<FreeResolution> {
    ideal.require_homogeneous()?;
    if ideal.is_unit() {
        return Err(Error::Precondition(
            "the unit ideal has no quotient to resolve".into(),
        ));
    }
    let ring = ideal.ring().clone();
    if ideal.is_zero() {
        return Ok(FreeResolution {
            ring,
            maps: Vec::new(),
        });
    }
    let mut gens = ideal.minimal_generators()?;
    gens.sort_by_key(|g| g.degree());
    let mut maps = vec![GradedMap::from_generators(&gens)?];
    loop {
        let next = syzygies(&ring, maps.last().unwrap())?;
        if next.cols() == 0 {
            break;
        }
        if maps.len() > ring.num_vars() {
            return Err(Error::Internal(
                "resolution longer than the number of variables".into(),
            ));
        }
        maps.push(next);
    }
    let res = FreeResolution { ring, maps };
    check_euler(ideal, &res.betti_table())?;
    Ok(res)
}

static EULER_CHECKS: AtomicUsize = AtomicUsize::new(0);

/// How many resolutions in this process had their Betti table checked
/// against the Hilbert series.
pub fn euler_checks() -> usize {
    EULER_CHECKS.load(AtomicOrdering::Relaxed)
}

/// The alternating sum of twists must equal the Hilbert series numerator,
/// which is computed from the initial ideal independently of the syzygies.
fn check_euler(ideal: &Ideal, table: &GradedBettiTable) -> Result<()> {
    let mut expected = hilbert(ideal)?.series_numerator;
    while expected.last() == Some(&0) {
        expected.pop();
    }
    let got = table.euler_numerator();
    EULER_CHECKS.fetch_add(1, AtomicOrdering::Relaxed);
    if got != expected {
        return Err(Error::Internal(format!(
            "Betti table {} gives numerator {got:?}, Hilbert series has {expected:?}",
            table.compact()
        )));
    }
    Ok(())
}

/// Graded Betti table of the minimal free resolution of `Q/I`.
pub fn minimal_free_resolution(ideal: &Ideal) -> Result<GradedBettiTable> {
    Ok(resolve(ideal)?.betti_table())
}

/// The Taylor resolution of a monomial ideal: basis elements of `F_i` are
/// the `i`-subsets of the generators, twisted by the degree of their lcm.
/// It is a resolution but rarely minimal.
pub fn taylor_resolution(ring: &Arc<Ring>, gens: &[Monomial]) -> Result<FreeResolution> {
    let r = gens.len();
    if r == 0 || r > 12 {
        return Err(Error::Precondition(
            "Taylor resolution needs 1 to 12 generators".into(),
        ));
    }
    let lcm_of = |mask: u32| {
        (0..r)
            .filter(|k| mask & (1 << k) != 0)
            .fold(Monomial::one(), |acc, k| acc.lcm(&gens[k]))
    };
    let subsets =
        |size: u32| -> Vec<u32> { (0u32..1 << r).filter(|m| m.count_ones() == size).collect() };
    let field = ring.field();
    let mut maps = Vec::new();
    for i in 1..=r as u32 {
        let (src, tgt) = (subsets(i), subsets(i - 1));
        let src_twists: Vec<u32> = src.iter().map(|&s| lcm_of(s).degree()).collect();
        let tgt_twists: Vec<u32> = tgt.iter().map(|&s| lcm_of(s).degree()).collect();
        let mut entries = vec![vec![Polynomial::zero(ring); src.len()]; tgt.len()];
        for (c, &s) in src.iter().enumerate() {
            let ls = lcm_of(s);
            for (pos, k) in (0..r).filter(|k| s & (1 << k) != 0).enumerate() {
                let face = s & !(1 << k);
                let row = tgt.iter().position(|&t| t == face).expect("face present");
                let q = lcm_of(face).quotient_of(&ls).expect("lcm divides");
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                entries[row][c] = Polynomial::from_terms(ring, vec![(field.from_i64(sign), q)]);
            }
        }
        maps.push(GradedMap::new(ring, tgt_twists, src_twists, entries)?);
    }
    Ok(FreeResolution {
        ring: ring.clone(),
        maps,
    })
}

fn find_unit(map: &GradedMap) -> Option<(usize, usize)> {
    for (r, row) in map.entries.iter().enumerate() {
        for (c, p) in row.iter().enumerate() {
            if !p.is_zero() && p.degree() == Some(0) {
                return Some((r, c));
            }
        }
    }
    None
}

/// Cancels unit entries of the differentials until none remain; the
/// result is a minimal resolution homotopy equivalent to the input.
#[allow(clippy::needless_range_loop)]
pub fn minimalize(res: &FreeResolution) -> Result<FreeResolution> {
    let mut maps = res.maps.clone();
    let mut i = 0;
    while i < maps.len() {
        let Some((r, c)) = find_unit(&maps[i]) else {
            i += 1;
            continue;
        };
        let m = &maps[i];
        let u_inv = m.entries[r][c].constant_term().inv();
        let mut entries = m.entries.clone();
        for y in 0..m.cols() {
            if y == c || m.entries[r][y].is_zero() {
                continue;
            }
            let factor = m.entries[r][y].scale(&u_inv);
            for x in 0..m.rows() {
                if m.entries[x][c].is_zero() {
                    continue;
                }
                entries[x][y] = entries[x][y].sub(&m.entries[x][c].mul(&factor)?)?;
            }
        }
        entries.remove(r);
        for row in &mut entries {
            row.remove(c);
        }
        let mut target_twists = m.target_twists.clone();
        target_twists.remove(r);
        let mut source_twists = m.source_twists.clone();
        source_twists.remove(c);
        maps[i] = GradedMap {
            target_twists,
            source_twists,
            entries,
        };
        if i + 1 < maps.len() {
            maps[i + 1].entries.remove(c);
            maps[i + 1].target_twists.remove(c);
        }
        if i > 0 {
            for row in &mut maps[i - 1].entries {
                row.remove(r);
            }
            maps[i - 1].source_twists.remove(r);
        }
        i = i.saturating_sub(1);
    }
    while maps.last().is_some_and(|m| m.cols() == 0) {
        maps.pop();
    }
    Ok(FreeResolution {
        ring: res.ring.clone(),
        maps,
    })
}
