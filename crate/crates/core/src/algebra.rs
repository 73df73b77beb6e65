//! The commutative associative algebra underlying all four families.
//!
//! Basis symbols pair a group part (an exponent-group element) with a
//! vector of natural-number exponents, one per derivation direction.
//! Elements are finite rational linear combinations kept in normalized
//! form: a zero coefficient is never stored, so structural equality is
//! semantic equality. Term maps are ordered, which fixes the canonical
//! term order used for display and serialization: lexicographic on the
//! group coordinates, then on the exponents.

use crate::lattice::GroupElement;
use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Whether a direction carries only the group part or also a polynomial
/// variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VariableKind {
    /// The exponent at this index is always zero.
    #[serde(rename = "group")]
    GroupOnly,
    /// Natural-number exponents.
    #[serde(rename = "poly")]
    Polynomial,
}

/// Vector of natural-number exponents, one per direction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The vector with a single 1 at position `p`.
    pub fn unit(n: usize, p: usize) -> Self {
        let mut v = vec![0; n];
        v[p] = 1;
        ExponentVector(v)
    }

    pub fn from_u32(exps: &[u32]) -> Self {
        ExponentVector(exps.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, p: usize) -> u32 {
        self.0[p]
    }

    /// Sum of all entries.
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.dim(), other.dim(), "exponent dimension mismatch");
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Lowers entry `p` by one; `None` encodes the zero element of the
    /// algebra (an undefined symbol is treated as zero).
    pub fn checked_dec(&self, p: usize) -> Option<ExponentVector> {
        if self.0[p] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[p] -= 1;
        Some(ExponentVector(v))
    }
}

/// Basis symbol of the algebra: a group part and an exponent part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub group: GroupElement,
    pub exps: ExponentVector,
}

impl Monomial {
    pub fn new(group: GroupElement, exps: ExponentVector) -> Self {
        Monomial { group, exps }
    }

    /// The identity symbol: zero group part, zero exponents.
    pub fn one(rank: usize, n: usize) -> Self {
        Monomial {
            group: GroupElement::zero(rank),
            exps: ExponentVector::zero(n),
        }
    }

    /// A pure group symbol with zero exponents.
    pub fn group_only(group: GroupElement, n: usize) -> Self {
        Monomial {
            group,
            exps: ExponentVector::zero(n),
        }
    }

    pub fn is_one(&self) -> bool {
        self.group.is_zero() && self.exps.0.iter().all(|&e| e == 0)
    }

    /// Symbol product: group parts and exponents add componentwise.
    pub fn product(&self, other: &Monomial) -> Monomial {
        Monomial {
            group: &self.group + &other.group,
            exps: self.exps.add(&other.exps),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[(")?;
        for (i, c) in self.group.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ");(")?;
        for (i, e) in self.exps.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")]")
    }
}

/// Finite rational linear combination of monomials, in normalized form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, BigRational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, n: usize) -> Self {
        Self::monomial(Monomial::one(rank, n))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_term(m, BigRational::one())
    }

    pub fn from_term(m: Monomial, c: BigRational) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Adds `c * m`, dropping the stored entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, c: &BigRational) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scaled_i64(&self, c: i64) -> AlgebraElement {
        self.scaled(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Splits the element by group part; the parts are nonzero, homogeneous
    /// in the group grading, and sum back to the element.
    pub fn grade_split(&self) -> BTreeMap<GroupElement, AlgebraElement> {
        let mut out: BTreeMap<GroupElement, AlgebraElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.group.clone())
                .or_insert_with(AlgebraElement::zero)
                .add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.product(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*{}", format_rational(c), m)?;
        }
        Ok(())
    }
}

/// Renders a rational as `n` or `n/d`, independent of library formatting.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
