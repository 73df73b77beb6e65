//! The Witt-type family: vector fields with algebra coefficients over the
//! mixed operators, with the standard vector-field bracket.
//!
//! A configuration is admissible when the grading maps jointly separate the
//! group — condition (2.7) — and every direction without a polynomial
//! variable still sees the group through its own map once the other kernels
//! are imposed — condition (2.6). Validators report violations as data.

use crate::algebra::{AlgebraElement, VariableKind};
use crate::config::Violation;
use crate::deriv::mixed;
use crate::error::{Error, Result};
use crate::lattice::{kernel_lattice, witness_outside_kernel, GradingMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Construction data for a Witt-type algebra: the group rank, the kind of
/// each direction, and one grading map per direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittConfig {
    rank: usize,
    kinds: Vec<VariableKind>,
    maps: Vec<GradingMap>,
}

impl WittConfig {
    pub fn new(rank: usize, kinds: Vec<VariableKind>, maps: Vec<GradingMap>) -> Result<Self> {
        if kinds.len() != maps.len() {
            return Err(Error::config(format!(
                "{} kinds but {} grading maps",
                kinds.len(),
                maps.len()
            )));
        }
        for (p, m) in maps.iter().enumerate() {
            if m.dim() != rank {
                return Err(Error::config(format!(
                    "grading map {} has dimension {} but the group rank is {}",
                    p + 1,
                    m.dim(),
                    rank
                )));
            }
        }
        Ok(WittConfig { rank, kinds, maps })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of derivation directions.
    pub fn vars(&self) -> usize {
        self.kinds.len()
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
}

/// Vector field: one algebra coefficient per derivation direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittVector {
    comps: Vec<AlgebraElement>,
}

impl WittVector {
    pub fn zero(n: usize) -> Self {
        WittVector {
            comps: vec![AlgebraElement::zero(); n],
        }
    }

    pub fn new(comps: Vec<AlgebraElement>) -> Self {
        WittVector { comps }
    }

    /// The field `u * d_p` with a single nonzero component.
    pub fn from_term(n: usize, p: usize, u: AlgebraElement) -> Self {
        let mut w = Self::zero(n);
        w.comps[p] = u;
        w
    }

    pub fn vars(&self) -> usize {
        self.comps.len()
    }

    pub fn component(&self, p: usize) -> &AlgebraElement {
        &self.comps[p]
    }

    pub fn components(&self) -> &[AlgebraElement] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Multiplies every component by an algebra element.
    pub fn scaled_by(&self, u: &AlgebraElement) -> WittVector {
        WittVector {
            comps: self.comps.iter().map(|c| c * u).collect(),
        }
    }
}

impl Add for &WittVector {
    type Output = WittVector;
    fn add(self, rhs: &WittVector) -> WittVector {
        assert_eq!(self.vars(), rhs.vars(), "vector field arity mismatch");
        WittVector {
            comps: self
                .comps
                .iter()
                .zip(&rhs.comps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &WittVector {
    type Output = WittVector;
    fn sub(self, rhs: &WittVector) -> WittVector {
        assert_eq!(self.vars(), rhs.vars(), "vector field arity mismatch");
        WittVector {
            comps: self
                .comps
                .iter()
                .zip(&rhs.comps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &WittVector {
    type Output = WittVector;
    fn neg(self) -> WittVector {
        WittVector {
            comps: self.comps.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (p, comp) in self.comps.iter().enumerate() {
            for (m, c) in comp.iter() {
                if wrote {
                    write!(f, " + ")?;
                }
                write!(f, "({})*{}d{}", crate::algebra::format_rational(c), m, p + 1)?;
                wrote = true;
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Checks the admissibility conditions (2.6) and (2.7).
pub fn validate(cfg: &WittConfig) -> Vec<Violation> {
    let mut out = Vec::new();
    let joint = kernel_lattice(cfg.maps(), cfg.rank());
    if !joint.is_trivial() {
        out.push(Violation::new(
            "(2.7)",
            format!("joint kernel of the grading maps has rank {}", joint.rank()),
        ));
    }
    for p in 0..cfg.vars() {
        if cfg.kind(p) != VariableKind::GroupOnly {
            continue;
        }
        let others: Vec<GradingMap> = (0..cfg.vars())
            .filter(|&q| q != p)
            .map(|q| cfg.map(q).clone())
            .collect();
        let inside = kernel_lattice(&others, cfg.rank());
        if witness_outside_kernel(&inside, cfg.map(p)).is_none() {
            out.push(Violation::new(
                "(2.6)",
                format!("no group element separates direction {} from the others", p + 1),
            ));
        }
    }
    out
}

/// Applies the field to an algebra element through the mixed operators.
pub fn apply(w: &WittVector, u: &AlgebraElement, cfg: &WittConfig) -> AlgebraElement {
    assert_eq!(w.vars(), cfg.vars(), "vector field arity mismatch");
    let mut out = AlgebraElement::zero();
    for p in 0..cfg.vars() {
        if w.comps[p].is_zero() {
            continue;
        }
        out = &out + &(&w.comps[p] * &mixed(u, p, cfg.map(p)));
    }
    out
}

/// Vector-field bracket: component `q` of `[a, b]` collects
/// `a_p d_p(b_q) - b_p d_p(a_q)` over all `p`.
pub fn bracket(a: &WittVector, b: &WittVector, cfg: &WittConfig) -> WittVector {
    let n = cfg.vars();
    assert_eq!(a.vars(), n, "vector field arity mismatch");
    assert_eq!(b.vars(), n, "vector field arity mismatch");
    let mut comps = Vec::with_capacity(n);
    for q in 0..n {
        let mut acc = AlgebraElement::zero();
        for p in 0..n {
            if !a.comps[p].is_zero() && !b.comps[q].is_zero() {
                acc = &acc + &(&a.comps[p] * &mixed(&b.comps[q], p, cfg.map(p)));
            }
            if !b.comps[p].is_zero() && !a.comps[q].is_zero() {
                acc = &acc - &(&b.comps[p] * &mixed(&a.comps[q], p, cfg.map(p)));
            }
        }
        comps.push(acc);
    }
    WittVector { comps }
}
