//! Finite-window evidence for ideal structure: exact rank accumulation
//! under fraction-free elimination, window enumeration, and a strict
//! ideal-closure sweep.
//!
//! The closure probe is *sound by construction*: a bracket whose support
//! leaves the window is discarded outright, never projected, so every
//! vector it reaches is an honest member of the ideal generated by the
//! seed. The price is that the reached span is a lower bound; certifying
//! non-membership is out of scope.

use crate::algebra::{AlgebraElement, ExponentVector, Monomial, VariableKind};
use crate::config::{bracket_elements, AlgebraConfig, Element};
use crate::error::{Error, Result};
use crate::hamiltonian::quotient_rep;
use crate::lattice::GroupElement;
use num::integer::{gcd, lcm};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Incremental exact rank of a stream of sparse rational vectors.
///
/// Rows are stored as primitive integer vectors in echelon form keyed by
/// their leading index; insertion reduces the incoming vector by
/// fraction-free cross-multiplication. Deterministic given input order.
#[derive(Debug, Clone, Default)]
pub struct RankAccumulator<K: Ord + Clone> {
    rows: BTreeMap<K, BTreeMap<K, BigInt>>,
}

impl<K: Ord + Clone> RankAccumulator<K> {
    pub fn new() -> Self {
        RankAccumulator {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts a vector; returns whether the rank grew.
    pub fn insert<I: IntoIterator<Item = (K, BigRational)>>(&mut self, vector: I) -> bool {
        let reduced = self.reduce(integerize(vector));
        match reduced.first_key_value() {
            None => false,
            Some((lead, _)) => {
                let lead = lead.clone();
                self.rows.insert(lead, reduced);
                true
            }
        }
    }

    /// Whether a vector lies in the span of the inserted ones.
    pub fn contains<I: IntoIterator<Item = (K, BigRational)>>(&self, vector: I) -> bool {
        self.reduce(integerize(vector)).is_empty()
    }

    /// Forward reduction against the stored echelon rows.
    fn reduce(&self, mut v: BTreeMap<K, BigInt>) -> BTreeMap<K, BigInt> {
        loop {
            let Some((lead, lead_coeff)) = v.first_key_value() else {
                return v;
            };
            let Some(row) = self.rows.get(lead) else {
                normalize_row(&mut v);
                return v;
            };
            let row_lead = row.first_key_value().expect("stored rows are nonzero").1.clone();
            let lead_coeff = lead_coeff.clone();
            let mut w: BTreeMap<K, BigInt> = v
                .iter()
                .map(|(k, c)| (k.clone(), c * &row_lead))
                .collect();
            for (k, c) in row {
                let delta = c * &lead_coeff;
                match w.get_mut(k) {
                    Some(entry) => {
                        *entry -= delta;
                    }
                    None => {
                        w.insert(k.clone(), -delta);
                    }
                }
            }
            w.retain(|_, c| !c.is_zero());
            normalize_row(&mut w);
            v = w;
        }
    }
}

/// Clears denominators and divides by the content.
fn integerize<K: Ord + Clone, I: IntoIterator<Item = (K, BigRational)>>(
    vector: I,
) -> BTreeMap<K, BigInt> {
    let entries: Vec<(K, BigRational)> =
        vector.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    let mut scale = BigInt::one();
    for (_, c) in &entries {
        scale = lcm(scale, c.denom().clone());
    }
    let mut out: BTreeMap<K, BigInt> = BTreeMap::new();
    for (k, c) in entries {
        let v = c.numer() * (&scale / c.denom());
        match out.get_mut(&k) {
            Some(e) => *e += v,
            None => {
                out.insert(k, v);
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    let mut out = out;
    normalize_row(&mut out);
    out
}

/// Divides by the gcd of the entries and makes the leading one positive.
fn normalize_row<K: Ord + Clone>(row: &mut BTreeMap<K, BigInt>) {
    let mut content = BigInt::zero();
    for c in row.values() {
        content = gcd(content, c.clone());
    }
    if content.is_zero() {
        return;
    }
    let negate = row
        .first_key_value()
        .map(|(_, c)| c.is_negative())
        .unwrap_or(false);
    if negate {
        content = -content;
    }
    if !content.is_one() {
        for c in row.values_mut() {
            *c = &*c / &content;
        }
    }
}

/// Finite monomial window: per-coordinate bounds on the group part and a
/// bound on the total degree of the exponent part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    bounds: Vec<(i64, i64)>,
    max_degree: u32,
}

impl Window {
    pub fn new(bounds: Vec<(i64, i64)>, max_degree: u32) -> Result<Self> {
        for &(lo, hi) in &bounds {
            if lo > hi {
                return Err(Error::argument(format!("empty coordinate range {lo}..{hi}")));
            }
        }
        Ok(Window { bounds, max_degree })
    }

    pub fn rank(&self) -> usize {
        self.bounds.len()
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        if m.group.dim() != self.bounds.len() {
            return false;
        }
        for (c, &(lo, hi)) in m.group.0.iter().zip(&self.bounds) {
            if *c < BigInt::from(lo) || *c > BigInt::from(hi) {
                return false;
            }
        }
        m.exps.total_degree() <= self.max_degree as u64
    }

    /// All monomials in the window, in canonical order.
    pub fn monomials(&self, kinds: &[VariableKind]) -> Vec<Monomial> {
        let mut groups: Vec<Vec<BigInt>> = vec![vec![]];
        for &(lo, hi) in &self.bounds {
            let mut next = Vec::new();
            for g in &groups {
                for c in lo..=hi {
                    let mut g2 = g.clone();
                    g2.push(BigInt::from(c));
                    next.push(g2);
                }
            }
            groups = next;
        }
        let exps = degree_bounded_exponents(kinds, self.max_degree);
        let mut out = Vec::with_capacity(groups.len() * exps.len());
        for g in groups {
            for e in &exps {
                out.push(Monomial::new(GroupElement(g.clone()), e.clone()));
            }
        }
        out.sort();
        out
    }
}

/// All exponent vectors of total degree at most `max_degree` that vanish on
/// group-only directions.
fn degree_bounded_exponents(kinds: &[VariableKind], max_degree: u32) -> Vec<ExponentVector> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for &kind in kinds {
        let mut next = Vec::new();
        for prefix in &out {
            let used: u32 = prefix.iter().sum();
            let cap = match kind {
                VariableKind::GroupOnly => 0,
                VariableKind::Polynomial => max_degree - used,
            };
            for e in 0..=cap {
                let mut p2 = prefix.clone();
                p2.push(e);
                next.push(p2);
            }
        }
        out = next;
    }
    out.into_iter().map(ExponentVector).collect()
}

/// How a reached vector was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Seed,
    Bracket { multiplier: usize, parent: usize },
}

/// Result of a closure sweep. `basis` holds the raw reached vectors (each
/// one exactly the bracket named by its witness), which are exactly
/// independent; `saturated` records whether a full sweep added nothing.
#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub window_dim: usize,
    pub reached_dim: usize,
    pub saturated: bool,
    pub iterations: usize,
    pub basis: Vec<Element>,
    pub witnesses: Vec<Witness>,
}

impl fmt::Display for ClosureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "window dimension: {}", self.window_dim)?;
        writeln!(f, "reached dimension: {}", self.reached_dim)?;
        writeln!(f, "saturated: {}", self.saturated)?;
        writeln!(f, "iterations: {}", self.iterations)?;
        writeln!(f, "basis:")?;
        for (v, w) in self.basis.iter().zip(&self.witnesses) {
            match w {
                Witness::Seed => writeln!(f, "  [seed] {v}")?,
                Witness::Bracket { multiplier, parent } => {
                    writeln!(f, "  [g{} on {}] {v}", multiplier + 1, parent + 1)?
                }
            }
        }
        Ok(())
    }
}

type SparseKey = (usize, Monomial);

fn element_sparse(e: &Element) -> Vec<(SparseKey, BigRational)> {
    match e {
        Element::Scalar(u) => u
            .iter()
            .map(|(m, c)| ((0usize, m.clone()), c.clone()))
            .collect(),
        Element::Vector(w) => {
            let mut out = Vec::new();
            for (p, comp) in w.components().iter().enumerate() {
                for (m, c) in comp.iter() {
                    out.push(((p, m.clone()), c.clone()));
                }
            }
            out
        }
    }
}

fn element_supported(e: &Element, window: &Window) -> bool {
    match e {
        Element::Scalar(u) => u.iter().all(|(m, _)| window.contains_monomial(m)),
        Element::Vector(w) => w
            .components()
            .iter()
            .all(|c| c.iter().all(|(m, _)| window.contains_monomial(m))),
    }
}

/// Quotient normalization where the family requires it.
fn normal_form(e: Element, cfg: &AlgebraConfig) -> Element {
    match (e, cfg) {
        (Element::Scalar(u), AlgebraConfig::Hamiltonian(_)) => Element::Scalar(quotient_rep(&u)),
        (e, _) => e,
    }
}

/// Dimension of the window-supported coordinate space the probe works in.
pub fn window_dimension(cfg: &AlgebraConfig, window: &Window) -> usize {
    let monomials = window.monomials(cfg.kinds());
    match cfg {
        AlgebraConfig::Witt(_) | AlgebraConfig::Special(_) => monomials.len() * cfg.vars(),
        AlgebraConfig::Hamiltonian(_) => {
            // quotient coordinates: the identity symbol is not a direction
            let unit = monomials.iter().filter(|m| m.is_one()).count();
            monomials.len() - unit
        }
        AlgebraConfig::Contact(_) => monomials.len(),
    }
}

/// Default multiplier set: window symbols of degree at most one, as fields
/// in every direction for the vector-field families, plus the identity
/// symbol even when the window misses it.
pub fn default_multipliers(cfg: &AlgebraConfig, window: &Window) -> Vec<Element> {
    let mut symbols: Vec<Monomial> = window
        .monomials(cfg.kinds())
        .into_iter()
        .filter(|m| m.exps.total_degree() <= 1)
        .collect();
    let unit = Monomial::one(cfg.rank(), cfg.vars());
    if !symbols.contains(&unit) {
        symbols.push(unit);
        symbols.sort();
    }
    match cfg {
        AlgebraConfig::Witt(_) | AlgebraConfig::Special(_) => {
            let n = cfg.vars();
            let mut out = Vec::new();
            for p in 0..n {
                for m in &symbols {
                    out.push(Element::Vector(crate::witt::WittVector::from_term(
                        n,
                        p,
                        AlgebraElement::monomial(m.clone()),
                    )));
                }
            }
            out
        }
        _ => symbols
            .into_iter()
            .map(|m| Element::Scalar(AlgebraElement::monomial(m)))
            .collect(),
    }
}

/// Strict windowed closure of the seed under bracketing with the
/// multipliers: iterates sweeps until a fixed point or the sweep cap, only
/// ever keeping brackets whose full support stays inside the window.
pub fn ideal_closure(
    cfg: &AlgebraConfig,
    seed: &Element,
    window: &Window,
    multipliers: &[Element],
    cap: usize,
) -> Result<ClosureReport> {
    if window.rank() != cfg.rank() {
        return Err(Error::argument(
            "window bounds must match the group rank",
        ));
    }
    let seed = normal_form(seed.clone().normalized_for(cfg), cfg);
    if seed.is_zero() {
        return Err(Error::argument("seed is zero"));
    }
    if !element_supported(&seed, window) {
        return Err(Error::argument("seed is not supported inside the window"));
    }
    let mut acc: RankAccumulator<SparseKey> = RankAccumulator::new();
    acc.insert(element_sparse(&seed));
    let mut basis = vec![seed];
    let mut witnesses = vec![Witness::Seed];
    let mut processed = 0usize;
    let mut iterations = 0usize;
    let mut saturated = false;
    loop {
        if processed == basis.len() {
            saturated = true;
            break;
        }
        if iterations == cap {
            break;
        }
        iterations += 1;
        let sweep_end = basis.len();
        for parent in processed..sweep_end {
            for (gi, g) in multipliers.iter().enumerate() {
                let w = normal_form(bracket_elements(g, &basis[parent], cfg)?, cfg);
                if w.is_zero() || !element_supported(&w, window) {
                    continue;
                }
                if acc.insert(element_sparse(&w)) {
                    basis.push(w);
                    witnesses.push(Witness::Bracket {
                        multiplier: gi,
                        parent,
                    });
                }
            }
        }
        processed = sweep_end;
    }
    Ok(ClosureReport {
        window_dim: window_dimension(cfg, window),
        reached_dim: basis.len(),
        saturated,
        iterations,
        basis,
        witnesses,
    })
}

/// Recomputes every witness chain and checks it reproduces the recorded
/// vector exactly.
pub fn replay_witnesses(
    report: &ClosureReport,
    cfg: &AlgebraConfig,
    seed: &Element,
    multipliers: &[Element],
) -> Result<bool> {
    let seed = normal_form(seed.clone().normalized_for(cfg), cfg);
    for (i, w) in report.witnesses.iter().enumerate() {
        let expected = match *w {
            Witness::Seed => seed.clone(),
            Witness::Bracket { multiplier, parent } => {
                if multiplier >= multipliers.len() || parent >= i {
                    return Ok(false);
                }
                normal_form(
                    bracket_elements(&multipliers[multiplier], &report.basis[parent], cfg)?,
                    cfg,
                )
            }
        };
        if report.basis[i] != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn empty_stream_has_rank_zero() {
        let acc: RankAccumulator<usize> = RankAccumulator::new();
        assert_eq!(acc.rank(), 0);
        assert!(acc.contains(Vec::<(usize, BigRational)>::new()));
    }

    #[test]
    fn independent_vectors_accumulate() {
        let mut acc: RankAccumulator<usize> = RankAccumulator::new();
        assert!(acc.insert(vec![(0usize, rat(1))]));
        assert!(acc.insert(vec![(0usize, rat(1)), (1usize, rat(1))]));
        assert_eq!(acc.rank(), 2);
    }

    #[test]
    fn dependent_vectors_do_not() {
        let mut acc: RankAccumulator<usize> = RankAccumulator::new();
        let v = vec![(0usize, rat(3)), (2usize, rat(-1))];
        let w = vec![(1usize, rat(1))];
        assert!(acc.insert(v.clone()));
        assert!(!acc.insert(v.iter().map(|(k, c)| (*k, c * rat(2)))));
        assert!(acc.insert(w.clone()));
        assert_eq!(acc.rank(), 2);
        // v + w is in the span
        let mut vw = v.clone();
        vw.extend(w);
        assert!(acc.contains(vw));
        assert!(!acc.contains(vec![(2usize, rat(1))]));
    }

    #[test]
    fn rational_vectors_are_cleared_exactly() {
        let mut acc: RankAccumulator<usize> = RankAccumulator::new();
        acc.insert(vec![
            (0usize, BigRational::new(BigInt::from(1), BigInt::from(2))),
            (1usize, BigRational::new(BigInt::from(1), BigInt::from(3))),
        ]);
        assert!(acc.contains(vec![(0usize, rat(3)), (1usize, rat(2))]));
        assert!(!acc.contains(vec![(0usize, rat(3)), (1usize, rat(3))]));
    }

    #[test]
    fn window_enumeration_respects_kinds_and_degree() {
        let w = Window::new(vec![(-1, 1)], 2).unwrap();
        let kinds = [VariableKind::GroupOnly, VariableKind::Polynomial];
        let monos = w.monomials(&kinds);
        // 3 group choices times degrees 0..=2 at the polynomial index
        assert_eq!(monos.len(), 9);
        assert!(monos.iter().all(|m| m.exps.get(0) == 0));
        assert!(monos.iter().all(|m| w.contains_monomial(m)));
        let sorted = {
            let mut s = monos.clone();
            s.sort();
            s
        };
        assert_eq!(monos, sorted);
    }

    #[test]
    fn closure_of_a_one_dimensional_window_is_the_seed() {
        use crate::lattice::GradingMap;
        use crate::witt::{WittConfig, WittVector};
        let cfg = AlgebraConfig::Witt(
            WittConfig::new(
                1,
                vec![VariableKind::GroupOnly],
                vec![GradingMap::from_i64(&[1])],
            )
            .unwrap(),
        );
        let window = Window::new(vec![(0, 0)], 0).unwrap();
        let seed = Element::Vector(WittVector::from_term(1, 0, AlgebraElement::one(1, 1)));
        let multipliers = default_multipliers(&cfg, &window);
        let report = ideal_closure(&cfg, &seed, &window, &multipliers, 64).unwrap();
        assert_eq!(report.reached_dim, 1);
        assert!(report.saturated);
        assert!(replay_witnesses(&report, &cfg, &seed, &multipliers).unwrap());
    }

    #[test]
    fn zero_or_unsupported_seeds_are_rejected() {
        use crate::lattice::GradingMap;
        use crate::witt::{WittConfig, WittVector};
        let cfg = AlgebraConfig::Witt(
            WittConfig::new(
                1,
                vec![VariableKind::Polynomial],
                vec![GradingMap::from_i64(&[1])],
            )
            .unwrap(),
        );
        let window = Window::new(vec![(0, 0)], 1).unwrap();
        assert!(ideal_closure(
            &cfg,
            &Element::Vector(WittVector::zero(1)),
            &window,
            &[],
            8
        )
        .is_err());
        let far = Element::Vector(WittVector::from_term(
            1,
            0,
            AlgebraElement::monomial(Monomial::group_only(GroupElement::from_i64(&[5]), 1)),
        ));
        assert!(ideal_closure(&cfg, &far, &window, &[], 8).is_err());
    }
}
