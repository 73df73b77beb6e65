//! The Hamiltonian-type family: a bracket on the algebra itself built from
//! paired directions, with three layers. Unshifted pairs contribute a
//! mixed/down-grading cross term; shifted pairs contribute a cross term of
//! mixed operators multiplied by a per-pair shift symbol; and the group
//! parts contribute through a skew-symmetric bilinear form. The identity is
//! central, so the Lie algebra of interest is the quotient by constants,
//! represented here by constant-free canonical representatives.

use crate::algebra::{AlgebraElement, Monomial, VariableKind};
use crate::config::Violation;
use crate::deriv::{down_grading, grading, mixed};
use crate::error::{Error, Result};
use crate::lattice::{kernel_lattice, witness_outside_kernel, GradingMap, GroupElement, SkewForm};
use crate::probe::RankAccumulator;
use num::{BigRational, Zero};
use std::collections::BTreeSet;

/// Construction data for a Hamiltonian-type algebra on `2 * pairs`
/// directions. The first `shifted_pairs` pairs use the shifted cross term
/// and carry one shift element each; the pair of direction `p` is `p +
/// pairs` (and back).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianConfig {
    rank: usize,
    pairs: usize,
    shifted_pairs: usize,
    kinds: Vec<VariableKind>,
    maps: Vec<GradingMap>,
    form: SkewForm,
    pair_shifts: Vec<GroupElement>,
}

impl HamiltonianConfig {
    pub fn new(
        rank: usize,
        pairs: usize,
        shifted_pairs: usize,
        kinds: Vec<VariableKind>,
        maps: Vec<GradingMap>,
        form: SkewForm,
        pair_shifts: Vec<GroupElement>,
    ) -> Result<Self> {
        let n = 2 * pairs;
        if kinds.len() != n || maps.len() != n {
            return Err(Error::config(format!(
                "expected {n} kinds and maps for {pairs} pairs"
            )));
        }
        if shifted_pairs > pairs {
            return Err(Error::config("more shifted pairs than pairs"));
        }
        for m in &maps {
            if m.dim() != rank {
                return Err(Error::config("grading map dimension mismatch"));
            }
        }
        if form.dim() != rank {
            return Err(Error::config("skew form dimension mismatch"));
        }
        if pair_shifts.len() != shifted_pairs {
            return Err(Error::config(format!(
                "expected {shifted_pairs} pair shifts, got {}",
                pair_shifts.len()
            )));
        }
        for s in &pair_shifts {
            if s.dim() != rank {
                return Err(Error::config("pair shift dimension mismatch"));
            }
        }
        Ok(HamiltonianConfig {
            rank,
            pairs,
            shifted_pairs,
            kinds,
            maps,
            form,
            pair_shifts,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn pairs(&self) -> usize {
        self.pairs
    }

    pub fn shifted_pairs(&self) -> usize {
        self.shifted_pairs
    }

    pub fn vars(&self) -> usize {
        2 * self.pairs
    }

    pub fn kinds(&self) -> &[VariableKind] {
        &self.kinds
    }

    pub fn maps(&self) -> &[GradingMap] {
        &self.maps
    }

    pub fn kind(&self, p: usize) -> VariableKind {
        self.kinds[p]
    }

    pub fn map(&self, p: usize) -> &GradingMap {
        &self.maps[p]
    }

    pub fn form(&self) -> &SkewForm {
        &self.form
    }

    /// The other member of `p`'s pair.
    pub fn partner(&self, p: usize) -> usize {
        if p < self.pairs {
            p + self.pairs
        } else {
            p - self.pairs
        }
    }

    /// Orientation of direction `p` within its pair: `+1` on the first
    /// half, `-1` on the second.
    pub fn orientation(&self, p: usize) -> i64 {
        if p < self.pairs {
            1
        } else {
            -1
        }
    }

    /// Shift element of pair `p` (zero beyond the shifted range).
    pub fn shift(&self, p: usize) -> GroupElement {
        let pair = p % self.pairs.max(1);
        if pair < self.shifted_pairs {
            self.pair_shifts[pair].clone()
        } else {
            GroupElement::zero(self.rank)
        }
    }

    /// Sum of all pair shifts; the distinguished group element of the
    /// degenerate regime.
    pub fn total_shift(&self) -> GroupElement {
        let mut acc = GroupElement::zero(self.rank);
        for s in &self.pair_shifts {
            acc = &acc + s;
        }
        acc
    }

    /// Directions in shifted pairs whose maps are nonzero on both sides;
    /// these enter the nondegeneracy condition (4.8).
    pub fn doubly_graded_indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for p in 0..self.shifted_pairs {
            if !self.maps[p].is_zero() && !self.maps[p + self.pairs].is_zero() {
                out.push(p);
                out.push(p + self.pairs);
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether every direction is group-only (the degenerate regime).
    pub fn pure_group(&self) -> bool {
        self.kinds.iter().all(|&k| k == VariableKind::GroupOnly)
    }
}

/// Checks the admissibility conditions (4.2)-(4.9).
pub fn validate(cfg: &HamiltonianConfig) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = cfg.vars();
    let m = cfg.pairs();
    let m1 = cfg.shifted_pairs();
    let k = cfg.rank();

    // (4.2): every direction grades or carries a polynomial variable
    for p in 0..n {
        if cfg.map(p).is_zero() && cfg.kind(p) == VariableKind::GroupOnly {
            out.push(Violation::new(
                "(4.2)",
                format!("direction {} neither grades nor has a variable", p + 1),
            ));
        }
    }
    // (4.3): every shifted pair grades on at least one side
    for p in 0..m1 {
        if cfg.map(p).is_zero() && cfg.map(p + m).is_zero() {
            out.push(Violation::new(
                "(4.3)",
                format!("shifted pair {} has two zero maps", p + 1),
            ));
        }
    }
    // (4.4): in an unshifted pair, a group-only side forces the partner map
    // to vanish
    for q in m1..m {
        if cfg.kind(q) == VariableKind::GroupOnly && !cfg.map(q + m).is_zero() {
            out.push(Violation::new(
                "(4.4)",
                format!("direction {} is group-only but its partner grades", q + 1),
            ));
        }
        if cfg.kind(q + m) == VariableKind::GroupOnly && !cfg.map(q).is_zero() {
            out.push(Violation::new(
                "(4.4)",
                format!(
                    "direction {} is group-only but its partner grades",
                    q + m + 1
                ),
            ));
        }
    }
    // (4.6): graded directions of unshifted pairs stay visible once the
    // other kernels are imposed
    let unshifted: Vec<usize> = (m1..m).chain(m + m1..n).collect();
    for &p in &unshifted {
        if cfg.map(p).is_zero() {
            continue;
        }
        let others: Vec<GradingMap> = (0..n)
            .filter(|&q| q != p)
            .map(|q| cfg.map(q).clone())
            .collect();
        let inside = kernel_lattice(&others, k);
        if witness_outside_kernel(&inside, cfg.map(p)).is_none() {
            out.push(Violation::new(
                "(4.6)",
                format!("no witness for direction {} outside its kernel", p + 1),
            ));
        }
    }
    // (4.7): same for shifted pairs, inside the radical of the form
    let radical = cfg.form().radical();
    let shifted: Vec<usize> = (0..m1).chain(m..m + m1).collect();
    for &p in &shifted {
        if cfg.map(p).is_zero() {
            continue;
        }
        let others: Vec<GradingMap> = (0..n)
            .filter(|&q| q != p)
            .map(|q| cfg.map(q).clone())
            .collect();
        let inside = kernel_lattice(&others, k)
            .intersect(&radical)
            .expect("same ambient dimension");
        if witness_outside_kernel(&inside, cfg.map(p)).is_none() {
            out.push(Violation::new(
                "(4.7)",
                format!(
                    "no radical witness for direction {} outside its kernel",
                    p + 1
                ),
            ));
        }
    }
    // (4.8): the form pairs the joint kernel of the doubly graded maps
    // nondegenerately against the joint kernel of all maps
    let mho = cfg.doubly_graded_indices();
    let mho_maps: Vec<GradingMap> = mho.iter().map(|&p| cfg.map(p).clone()).collect();
    let mho_kernel = kernel_lattice(&mho_maps, k);
    let pairing_rows: Vec<GradingMap> = mho_kernel
        .basis_elements()
        .iter()
        .map(|b| cfg.form().pairing_map(b))
        .collect();
    let left = kernel_lattice(&pairing_rows, k);
    let all_kernel = kernel_lattice(cfg.maps(), k);
    let meet = left
        .intersect(&all_kernel)
        .expect("same ambient dimension");
    if !meet.is_trivial() {
        out.push(Violation::new(
            "(4.8)",
            format!("degenerate pairing: common kernel has rank {}", meet.rank()),
        ));
    }
    // (4.9): each pair shift is nonzero, annihilated by the form, and killed
    // by every map outside its own pair
    for p in 0..m1 {
        let s = &cfg.pair_shifts[p];
        if s.is_zero() {
            out.push(Violation::new(
                "(4.9)",
                format!("shift of pair {} is zero", p + 1),
            ));
            continue;
        }
        if !cfg.form().annihilates(s) {
            out.push(Violation::new(
                "(4.9)",
                format!("shift of pair {} is not in the radical of the form", p + 1),
            ));
        }
        for q in 0..n {
            if q == p || q == p + m {
                continue;
            }
            if !cfg.map(q).eval(s).is_zero() {
                out.push(Violation::new(
                    "(4.9)",
                    format!(
                        "shift of pair {} is not killed by the map of direction {}",
                        p + 1,
                        q + 1
                    ),
                ));
            }
        }
    }
    out
}

/// The bracket, extended bilinearly over the group grading.
pub fn bracket(u: &AlgebraElement, v: &AlgebraElement, cfg: &HamiltonianConfig) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (alpha, ua) in u.grade_split() {
        for (beta, vb) in v.grade_split() {
            out = &out + &homogeneous_bracket(&ua, &alpha, &vb, &beta, cfg);
        }
    }
    out
}

fn homogeneous_bracket(
    u: &AlgebraElement,
    alpha: &GroupElement,
    v: &AlgebraElement,
    beta: &GroupElement,
    cfg: &HamiltonianConfig,
) -> AlgebraElement {
    let m = cfg.pairs();
    let m1 = cfg.shifted_pairs();
    let mut acc = AlgebraElement::zero();
    // unshifted pairs: mixed against down-grading, down-grading against
    // grading, antisymmetrized exactly as printed
    for q in m1..m {
        let qq = q + m;
        acc = &acc + &(&mixed(u, q, cfg.map(q)) * &down_grading(v, qq));
        acc = &acc + &(&down_grading(u, q) * &grading(v, cfg.map(qq)));
        acc = &acc - &(&down_grading(u, qq) * &mixed(v, q, cfg.map(q)));
        acc = &acc - &(&grading(u, cfg.map(qq)) * &down_grading(v, q));
    }
    // shifted pairs: mixed cross term times the shift symbol
    for p in 0..m1 {
        let pp = p + m;
        let inner = &(&mixed(u, p, cfg.map(p)) * &mixed(v, pp, cfg.map(pp)))
            - &(&mixed(u, pp, cfg.map(pp)) * &mixed(v, p, cfg.map(p)));
        if inner.is_zero() {
            continue;
        }
        let shift = AlgebraElement::monomial(Monomial::group_only(cfg.shift(p), cfg.vars()));
        acc = &acc + &(&shift * &inner);
    }
    // group pairing term
    let f = cfg.form().eval(alpha, beta);
    if !f.is_zero() {
        acc = &acc + &(u * v).scaled(&f);
    }
    acc
}

/// Canonical representative in the quotient by constants: drops the
/// coefficient of the identity symbol.
pub fn quotient_rep(u: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in u.iter() {
        if !m.is_one() {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

/// Closed form for brackets of pure group symbols in the degenerate regime
/// (every direction group-only): the form value on the combined symbol plus
/// one cross-determinant term per pair, shifted by that pair's shift.
pub fn closed_form_bracket(
    alpha: &GroupElement,
    beta: &GroupElement,
    cfg: &HamiltonianConfig,
) -> Result<AlgebraElement> {
    if !cfg.pure_group() {
        return Err(Error::argument(
            "the closed form applies only to pure group configs",
        ));
    }
    let n = cfg.vars();
    let mut out = AlgebraElement::zero();
    let combined = alpha + beta;
    out.add_term(
        Monomial::group_only(combined.clone(), n),
        cfg.form().eval(alpha, beta),
    );
    for p in 0..cfg.pairs() {
        let pp = cfg.partner(p);
        let c = &(&cfg.map(p).eval(alpha) * &cfg.map(pp).eval(beta))
            - &(&cfg.map(pp).eval(alpha) * &cfg.map(p).eval(beta));
        if c.is_zero() {
            continue;
        }
        out.add_term(Monomial::group_only(&combined + &cfg.shift(p), n), c);
    }
    Ok(out)
}

/// Window probe for the derived subalgebra in the degenerate regime with a
/// nonzero total shift: returns the window symbols that lie in the exact
/// span of all quotient brackets of window pairs.
pub fn derived_subalgebra_window(
    cfg: &HamiltonianConfig,
    window: &[GroupElement],
) -> Result<BTreeSet<GroupElement>> {
    if !cfg.pure_group() {
        return Err(Error::argument(
            "the derived-subalgebra probe applies only to pure group configs",
        ));
    }
    if cfg.total_shift().is_zero() {
        return Err(Error::argument(
            "the derived-subalgebra probe needs a nonzero total shift",
        ));
    }
    let n = cfg.vars();
    let mut acc: RankAccumulator<Monomial> = RankAccumulator::new();
    for b in window {
        for g in window {
            let w = quotient_rep(&bracket(
                &AlgebraElement::monomial(Monomial::group_only(b.clone(), n)),
                &AlgebraElement::monomial(Monomial::group_only(g.clone(), n)),
                cfg,
            ));
            if !w.is_zero() {
                acc.insert(w.iter().map(|(m, c)| (m.clone(), c.clone())));
            }
        }
    }
    let mut reached = BTreeSet::new();
    for alpha in window {
        let unit = [(
            Monomial::group_only(alpha.clone(), n),
            BigRational::from_integer(1.into()),
        )];
        if acc.contains(unit.iter().cloned()) {
            reached.insert(alpha.clone());
        }
    }
    Ok(reached)
}
