//! The operator family acting on the algebra: grading operators, which
//! scale a symbol by the map value of its group part; down-grading
//! operators, which lower one polynomial exponent; their sums (the mixed
//! operators); the scaled variants used by the Special family; and the
//! Euler-type weight operator used by the Contact family.
//!
//! All of them satisfy the product rule exactly, which is checkable with
//! [`DerivationKind::leibniz_holds`].

use crate::algebra::AlgebraElement;
use crate::config::AlgebraConfig;
use crate::error::{Error, Result};
use crate::lattice::GradingMap;
use num::{BigInt, BigRational, Zero};

/// Scales every term by the map value of its group part.
pub fn grading(u: &AlgebraElement, map: &GradingMap) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in u.iter() {
        let f = map.eval(&m.group);
        if !f.is_zero() {
            out.add_term(m.clone(), c * f);
        }
    }
    out
}

/// Lowers the exponent at position `p`, scaling by the old exponent.
/// Terms with exponent zero at `p` vanish.
pub fn down_grading(u: &AlgebraElement, p: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in u.iter() {
        let e = m.exps.get(p);
        if let Some(lowered) = m.exps.checked_dec(p) {
            let mut t = m.clone();
            t.exps = lowered;
            out.add_term(t, c * BigRational::from_integer(BigInt::from(e)));
        }
    }
    out
}

/// The mixed operator at position `p`: grading plus down-grading.
pub fn mixed(u: &AlgebraElement, p: usize, map: &GradingMap) -> AlgebraElement {
    &grading(u, map) + &down_grading(u, p)
}

/// Identifier of an operator, interpreted against a configuration.
///
/// Keeping operators as data rather than closures lets them travel through
/// command-line requests and test fixtures. Indices are zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivationKind {
    /// Scale by the value of the `p`-th grading map.
    Grading(usize),
    /// Lower the `p`-th exponent.
    DownGrading(usize),
    /// Sum of the two above.
    Mixed(usize),
    /// Mixed operator followed by multiplication with the `p`-th scale
    /// symbol; only meaningful for Special-family configurations.
    Scaled(usize),
    /// Scale each symbol by its Euler weight; only meaningful for
    /// Contact-family configurations.
    ContactEuler,
}

impl DerivationKind {
    pub fn apply(&self, u: &AlgebraElement, cfg: &AlgebraConfig) -> Result<AlgebraElement> {
        let n = cfg.vars();
        let check = |p: usize| -> Result<()> {
            if p < n {
                Ok(())
            } else {
                Err(Error::argument(format!(
                    "derivation index {} out of range 1..={}",
                    p + 1,
                    n
                )))
            }
        };
        match *self {
            DerivationKind::Grading(p) => {
                check(p)?;
                Ok(grading(u, &cfg.maps()[p]))
            }
            DerivationKind::DownGrading(p) => {
                check(p)?;
                Ok(down_grading(u, p))
            }
            DerivationKind::Mixed(p) => {
                check(p)?;
                Ok(mixed(u, p, &cfg.maps()[p]))
            }
            DerivationKind::Scaled(p) => {
                check(p)?;
                match cfg {
                    AlgebraConfig::Special(sc) => Ok(crate::special::scaled(p, u, sc)),
                    _ => Err(Error::argument(
                        "scaled derivations require a special-type config",
                    )),
                }
            }
            DerivationKind::ContactEuler => match cfg {
                AlgebraConfig::Contact(cc) => Ok(crate::contact::euler(u, cc)),
                _ => Err(Error::argument(
                    "the Euler operator requires a contact-type config",
                )),
            },
        }
    }

    /// Exact check of the product rule on a concrete pair.
    pub fn leibniz_holds(
        &self,
        u: &AlgebraElement,
        v: &AlgebraElement,
        cfg: &AlgebraConfig,
    ) -> Result<bool> {
        let lhs = self.apply(&(u * v), cfg)?;
        let rhs = &(&self.apply(u, cfg)? * v) + &(u * &self.apply(v, cfg)?);
        Ok(lhs == rhs)
    }
}

/// All kinds applicable to a configuration, in a fixed order.
pub fn kinds_for(cfg: &AlgebraConfig) -> Vec<DerivationKind> {
    let n = cfg.vars();
    let mut out = Vec::new();
    for p in 0..n {
        out.push(DerivationKind::Grading(p));
    }
    for p in 0..n {
        out.push(DerivationKind::DownGrading(p));
    }
    for p in 0..n {
        out.push(DerivationKind::Mixed(p));
    }
    match cfg {
        AlgebraConfig::Special(_) => {
            for p in 0..n {
                out.push(DerivationKind::Scaled(p));
            }
        }
        AlgebraConfig::Contact(_) => out.push(DerivationKind::ContactEuler),
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExponentVector, Monomial, VariableKind};
    use crate::lattice::GroupElement;
    use crate::witt::WittConfig;
    use num::One;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn mono(coords: &[i64], exps: &[u32]) -> Monomial {
        Monomial::new(GroupElement::from_i64(coords), ExponentVector::from_u32(exps))
    }

    fn line_config() -> AlgebraConfig {
        // one direction, polynomial, grading by the single coordinate
        AlgebraConfig::Witt(
            WittConfig::new(
                1,
                vec![VariableKind::Polynomial],
                vec![GradingMap::from_i64(&[1])],
            )
            .unwrap(),
        )
    }

    #[test]
    fn mixed_operator_on_a_symbol() {
        // on x^{(b),(j)} with the coordinate map: b*x^{(b),(j)} + j*x^{(b),(j-1)}
        let cfg = line_config();
        let u = AlgebraElement::monomial(mono(&[2], &[3]));
        let out = DerivationKind::Mixed(0).apply(&u, &cfg).unwrap();
        let mut expected = AlgebraElement::from_term(mono(&[2], &[3]), rat(2));
        expected.add_term(mono(&[2], &[2]), rat(3));
        assert_eq!(out, expected);
    }

    #[test]
    fn down_grading_is_nilpotent_past_the_exponent() {
        let cfg = line_config();
        let mut u = AlgebraElement::monomial(mono(&[1], &[2]));
        for _ in 0..3 {
            u = DerivationKind::DownGrading(0).apply(&u, &cfg).unwrap();
        }
        assert!(u.is_zero());
    }

    #[test]
    fn derivations_kill_the_identity() {
        let cfg = line_config();
        let one = AlgebraElement::one(1, 1);
        for kind in kinds_for(&cfg) {
            assert!(kind.apply(&one, &cfg).unwrap().is_zero());
        }
    }

    #[test]
    fn leibniz_on_simple_pairs() {
        let cfg = line_config();
        let one = AlgebraElement::one(1, 1);
        for kind in kinds_for(&cfg) {
            assert!(kind.leibniz_holds(&one, &one, &cfg).unwrap());
        }
        let u = AlgebraElement::monomial(mono(&[1], &[0]));
        let v = AlgebraElement::monomial(mono(&[0], &[1]));
        assert!(DerivationKind::Mixed(0).leibniz_holds(&u, &v, &cfg).unwrap());
    }

    #[test]
    fn grading_scales_by_map_value() {
        let cfg = line_config();
        let u = AlgebraElement::monomial(mono(&[3], &[1]));
        let out = DerivationKind::Grading(0).apply(&u, &cfg).unwrap();
        assert_eq!(out, u.scaled(&rat(3)));
        assert!(BigRational::one().is_one());
    }
}
