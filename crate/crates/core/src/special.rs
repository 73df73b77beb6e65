//! The Special-type family: divergence-free fields generated by applying a
//! twisted pair of scaled operators.
//!
//! The exponent group here is a product of one subgroup per direction, so
//! the rank equals the number of directions and each grading map is either
//! the coordinate projection (when that factor is nonzero) or identically
//! zero (when the factor is trivial — in which case the corresponding
//! coordinate of every group element is frozen to zero).
//!
//! Two closed-form identities for brackets of generators, the four-term
//! expansion and the same-pair formula, are implemented separately from the
//! direct bracket so that each can serve as an oracle for the other.

use crate::algebra::{AlgebraElement, ExponentVector, Monomial, VariableKind};
use crate::config::Violation;
use crate::deriv::mixed;
use crate::error::{Error, Result};
use crate::lattice::{GradingMap, GroupElement};
use crate::witt::{self, WittConfig, WittVector};
use num::{BigInt, BigRational, Zero};

/// Construction data for a Special-type algebra.
///
/// `twist` is the global exponent multiplying every generator; `scale_shifts`
/// holds the per-direction exponents entering the scaled operators. Both must
/// vanish on frozen coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialConfig {
    base: WittConfig,
    delta_nonzero: Vec<bool>,
    twist: GroupElement,
    scale_shifts: GroupElement,
}

impl SpecialConfig {
    pub fn new(
        kinds: Vec<VariableKind>,
        delta_nonzero: Vec<bool>,
        twist: GroupElement,
        scale_shifts: GroupElement,
    ) -> Result<Self> {
        let n = kinds.len();
        if n < 2 {
            return Err(Error::config(
                "special-type configs need at least two directions",
            ));
        }
        if delta_nonzero.len() != n {
            return Err(Error::config("factor flags must match the direction count"));
        }
        if twist.dim() != n || scale_shifts.dim() != n {
            return Err(Error::config(
                "twist and scale shifts must have one coordinate per direction",
            ));
        }
        for p in 0..n {
            if !delta_nonzero[p] && (!twist.coord(p).is_zero() || !scale_shifts.coord(p).is_zero())
            {
                return Err(Error::config(format!(
                    "coordinate {} is frozen but the twist or scale shift is nonzero there",
                    p + 1
                )));
            }
        }
        let maps = (0..n)
            .map(|p| {
                if delta_nonzero[p] {
                    GradingMap::coordinate(n, p)
                } else {
                    GradingMap::zero(n)
                }
            })
            .collect();
        let base = WittConfig::new(n, kinds, maps)?;
        Ok(SpecialConfig {
            base,
            delta_nonzero,
            twist,
            scale_shifts,
        })
    }

    pub fn base(&self) -> &WittConfig {
        &self.base
    }

    pub fn vars(&self) -> usize {
        self.base.vars()
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn delta_nonzero(&self) -> &[bool] {
        &self.delta_nonzero
    }

    pub fn twist(&self) -> &GroupElement {
        &self.twist
    }

    pub fn scale_shifts(&self) -> &GroupElement {
        &self.scale_shifts
    }

    /// Whether a group element respects the frozen coordinates.
    pub fn group_element_allowed(&self, g: &GroupElement) -> bool {
        g.dim() == self.rank()
            && (0..self.rank()).all(|p| self.delta_nonzero[p] || g.coord(p).is_zero())
    }

    /// The symbol `x` with the `p`-th scale shift at coordinate `p`.
    pub(crate) fn scale_monomial(&self, p: usize) -> Monomial {
        Monomial::group_only(
            GroupElement::unit_scaled(self.rank(), p, self.scale_shifts.coord(p).clone()),
            self.vars(),
        )
    }

    /// The symbol `x` with the global twist exponent.
    pub(crate) fn twist_monomial(&self) -> Monomial {
        Monomial::group_only(self.twist.clone(), self.vars())
    }

    /// The exponent shift carried by a generator pair: twist plus both
    /// scale shifts, placed at their own coordinates.
    pub fn pair_shift(&self, p: usize, q: usize) -> GroupElement {
        let mut v = self.twist.clone();
        v.0[p] = v.coord(p) + self.scale_shifts.coord(p);
        v.0[q] = v.coord(q) + self.scale_shifts.coord(q);
        v
    }
}

/// Checks that every direction without a polynomial variable has a nonzero
/// group factor — condition (3.5).
pub fn validate(cfg: &SpecialConfig) -> Vec<Violation> {
    let mut out = Vec::new();
    for p in 0..cfg.vars() {
        if cfg.base.kind(p) == VariableKind::GroupOnly && !cfg.delta_nonzero[p] {
            out.push(Violation::new(
                "(3.5)",
                format!(
                    "direction {} has neither a polynomial variable nor a group factor",
                    p + 1
                ),
            ));
        }
    }
    out
}

/// The scaled operator applied to `u`: mixed operator at `p`, then
/// multiplication by the `p`-th scale symbol.
pub fn scaled(p: usize, u: &AlgebraElement, cfg: &SpecialConfig) -> AlgebraElement {
    let d = mixed(u, p, cfg.base.map(p));
    &AlgebraElement::monomial(cfg.scale_monomial(p)) * &d
}

/// The generator attached to an ordered index pair and an argument:
/// the field whose `p`-component is the twisted scaled image of `u` under
/// direction `q`, and whose `q`-component is minus the mirror image.
pub fn generator(p: usize, q: usize, u: &AlgebraElement, cfg: &SpecialConfig) -> Result<WittVector> {
    let n = cfg.vars();
    if p >= n || q >= n {
        return Err(Error::argument(format!(
            "generator index out of range 1..={n}"
        )));
    }
    if p == q {
        return Err(Error::argument("generator indices must differ"));
    }
    let twist = AlgebraElement::monomial(cfg.twist_monomial());
    let comp_p = &(&twist * &scaled(q, u, cfg)) * &AlgebraElement::monomial(cfg.scale_monomial(p));
    let comp_q = &(&twist * &scaled(p, u, cfg)) * &AlgebraElement::monomial(cfg.scale_monomial(q));
    let mut w = WittVector::zero(n);
    w = &w + &WittVector::from_term(n, p, comp_p);
    w = &w - &WittVector::from_term(n, q, comp_q);
    Ok(w)
}

/// Bracket inherited from the ambient vector-field algebra.
pub fn bracket(a: &WittVector, b: &WittVector, cfg: &SpecialConfig) -> WittVector {
    witt::bracket(a, b, cfg.base())
}

/// One term of the four-term expansion: an index pair and the argument fed
/// to the generator at that pair (sign folded into the argument).
pub type ExpansionTerm = ((usize, usize), AlgebraElement);

/// The four-term expansion of a bracket of two generators:
/// `[g(p,q; u), g(r,s; v)]` expands over the pairs `(p,s)`, `(q,r)`,
/// `(p,r)`, `(q,s)` with twisted products of scaled images as arguments.
pub fn expand_bracket(
    p: usize,
    q: usize,
    r: usize,
    s: usize,
    u: &AlgebraElement,
    v: &AlgebraElement,
    cfg: &SpecialConfig,
) -> Result<Vec<ExpansionTerm>> {
    let n = cfg.vars();
    for &i in &[p, q, r, s] {
        if i >= n {
            return Err(Error::argument(format!(
                "expansion index out of range 1..={n}"
            )));
        }
    }
    if p == q || r == s {
        return Err(Error::argument("generator indices must differ"));
    }
    let twist = AlgebraElement::monomial(cfg.twist_monomial());
    let arg = |x: usize, y: usize| -> AlgebraElement {
        &(&twist * &scaled(x, u, cfg)) * &scaled(y, v, cfg)
    };
    Ok(vec![
        ((p, s), arg(q, r)),
        ((q, r), arg(p, s)),
        ((p, r), -&arg(q, s)),
        ((q, s), -&arg(p, r)),
    ])
}

/// Realizes a formal sum of generator terms as a vector field. Pairs with
/// equal indices denote the identically-zero generator and are skipped.
pub fn realize_expansion(terms: &[ExpansionTerm], cfg: &SpecialConfig) -> Result<WittVector> {
    let mut acc = WittVector::zero(cfg.vars());
    for ((a, b), arg) in terms {
        if a == b || arg.is_zero() {
            continue;
        }
        acc = &acc + &generator(*a, *b, arg, cfg)?;
    }
    Ok(acc)
}

/// One term of the same-pair closed form: the pair, the argument symbol,
/// and its rational coefficient.
pub type SamePairTerm = ((usize, usize), Monomial, BigRational);

/// Closed form for the bracket of two generators over the *same* index
/// pair, on symbol arguments: four terms supported on the combined symbol
/// shifted by the pair shift, with exponent drops at `p`, `q`, or both.
/// Underflowing exponents denote zero and their terms are dropped.
pub fn same_pair_bracket(
    a: &Monomial,
    b: &Monomial,
    p: usize,
    q: usize,
    cfg: &SpecialConfig,
) -> Result<Vec<SamePairTerm>> {
    let n = cfg.vars();
    if p >= n || q >= n {
        return Err(Error::argument(format!(
            "generator index out of range 1..={n}"
        )));
    }
    if p == q {
        return Err(Error::argument("generator indices must differ"));
    }
    let rat = |x: &BigInt| BigRational::from_integer(x.clone());
    let int = |e: u32| BigRational::from_integer(BigInt::from(e));
    let alpha_p = rat(a.group.coord(p));
    let alpha_q = rat(a.group.coord(q));
    let beta_p = rat(b.group.coord(p));
    let beta_q = rat(b.group.coord(q));
    let i_p = int(a.exps.get(p));
    let i_q = int(a.exps.get(q));
    let j_p = int(b.exps.get(p));
    let j_q = int(b.exps.get(q));

    let group = &(&(&a.group + &b.group) + &cfg.pair_shift(p, q));
    let exps = a.exps.add(&b.exps);
    let mut out = Vec::new();
    let mut push = |coeff: BigRational, exps: Option<ExponentVector>| {
        if coeff.is_zero() {
            return;
        }
        if let Some(e) = exps {
            out.push(((p, q), Monomial::new(group.clone(), e), coeff));
        }
    };

    push(&alpha_q * &beta_p - &alpha_p * &beta_q, Some(exps.clone()));
    push(
        &i_q * &j_p - &i_p * &j_q,
        exps.checked_dec(p).and_then(|e| e.checked_dec(q)),
    );
    push(&alpha_q * &j_p - &beta_q * &i_p, exps.checked_dec(p));
    push(&beta_p * &i_q - &alpha_p * &j_q, exps.checked_dec(q));
    Ok(out)
}

/// Realizes a same-pair formal sum as a vector field.
pub fn realize_same_pair(terms: &[SamePairTerm], cfg: &SpecialConfig) -> Result<WittVector> {
    let mut acc = WittVector::zero(cfg.vars());
    for ((a, b), m, c) in terms {
        let g = generator(*a, *b, &AlgebraElement::monomial(m.clone()), cfg)?;
        acc = &acc + &g.scaled_by(&AlgebraElement::from_term(
            Monomial::one(cfg.rank(), cfg.vars()),
            c.clone(),
        ));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(coords: &[i64], exps: &[u32]) -> AlgebraElement {
        AlgebraElement::monomial(Monomial::new(
            GroupElement::from_i64(coords),
            ExponentVector::from_u32(exps),
        ))
    }

    /// Two nonzero factors, group-only variables, free twist and shifts.
    fn plane(twist: &[i64], shifts: &[i64]) -> SpecialConfig {
        SpecialConfig::new(
            vec![VariableKind::GroupOnly, VariableKind::GroupOnly],
            vec![true, true],
            GroupElement::from_i64(twist),
            GroupElement::from_i64(shifts),
        )
        .unwrap()
    }

    /// Second factor trivial, both directions polynomial.
    fn half_frozen() -> SpecialConfig {
        SpecialConfig::new(
            vec![VariableKind::Polynomial, VariableKind::Polynomial],
            vec![true, false],
            GroupElement::from_i64(&[1, 0]),
            GroupElement::from_i64(&[2, 0]),
        )
        .unwrap()
    }

    #[test]
    fn generator_on_pure_group_symbol() {
        // generator (1,2) applied to x over the second coordinate only:
        // gamma * x^{twist + both shifts + gamma at 2} in component 1
        let cfg = plane(&[1, 0], &[0, 1]);
        let gamma = 3i64;
        let u = elem(&[0, gamma], &[0, 0]);
        let w = generator(0, 1, &u, &cfg).unwrap();
        // twist (1,0) + shifts (0,1) + argument (0,3) => (1,4)
        let expected =
            WittVector::from_term(2, 0, elem(&[1, 4], &[0, 0]).scaled_i64(gamma));
        assert_eq!(w, expected);
    }

    #[test]
    fn generator_on_polynomial_symbol_with_frozen_factor() {
        // with the second factor frozen the argument x2 has down-grading
        // image 1, so the generator lands in component 1 with the twist
        // plus the first scale shift only
        let cfg = half_frozen();
        let u = elem(&[0, 0], &[0, 1]);
        let w = generator(0, 1, &u, &cfg).unwrap();
        let expected = WittVector::from_term(2, 0, elem(&[3, 0], &[0, 0]));
        assert_eq!(w, expected);
    }

    #[test]
    fn generator_kills_the_identity() {
        let cfg = plane(&[1, 0], &[0, 1]);
        let one = AlgebraElement::one(2, 2);
        assert!(generator(0, 1, &one, &cfg).unwrap().is_zero());
    }

    #[test]
    fn generator_rejects_equal_indices() {
        let cfg = plane(&[0, 0], &[0, 0]);
        assert!(generator(1, 1, &AlgebraElement::one(2, 2), &cfg).is_err());
    }

    #[test]
    fn bracket_of_generator_with_itself_vanishes() {
        let cfg = plane(&[1, 0], &[0, 1]);
        let g = generator(0, 1, &elem(&[1, 2], &[0, 0]), &cfg).unwrap();
        assert!(bracket(&g, &g, &cfg).is_zero());
    }

    #[test]
    fn same_pair_closed_form_single_term() {
        // arguments x over (1,0) and (0,1) with zero twist and shifts:
        // single term with coefficient alpha_2*beta_1 - alpha_1*beta_2 = -1
        let cfg = plane(&[0, 0], &[0, 0]);
        let a = Monomial::group_only(GroupElement::from_i64(&[1, 0]), 2);
        let b = Monomial::group_only(GroupElement::from_i64(&[0, 1]), 2);
        let terms = same_pair_bracket(&a, &b, 0, 1, &cfg).unwrap();
        assert_eq!(terms.len(), 1);
        let ((p, q), m, c) = &terms[0];
        assert_eq!((*p, *q), (0, 1));
        assert_eq!(m.group, GroupElement::from_i64(&[1, 1]));
        assert_eq!(*c, BigRational::from_integer(BigInt::from(-1)));

        let direct = bracket(
            &generator(0, 1, &AlgebraElement::monomial(a), &cfg).unwrap(),
            &generator(0, 1, &AlgebraElement::monomial(b), &cfg).unwrap(),
            &cfg,
        );
        assert_eq!(realize_same_pair(&terms, &cfg).unwrap(), direct);
    }

    #[test]
    fn same_pair_closed_form_of_equal_arguments_is_empty() {
        let cfg = plane(&[1, 0], &[0, 1]);
        let a = Monomial::group_only(GroupElement::from_i64(&[2, 1]), 2);
        assert!(same_pair_bracket(&a, &a.clone(), 0, 1, &cfg).unwrap().is_empty());
    }

    #[test]
    fn expansion_realizes_to_direct_bracket() {
        let cfg = plane(&[1, 0], &[0, 1]);
        let u = elem(&[1, 0], &[0, 0]);
        let v = elem(&[0, 1], &[0, 0]);
        let direct = bracket(
            &generator(0, 1, &u, &cfg).unwrap(),
            &generator(0, 1, &v, &cfg).unwrap(),
            &cfg,
        );
        let terms = expand_bracket(0, 1, 0, 1, &u, &v, &cfg).unwrap();
        assert_eq!(realize_expansion(&terms, &cfg).unwrap(), direct);
    }

    #[test]
    fn expansion_of_identity_arguments_is_zero() {
        let cfg = plane(&[1, 0], &[0, 1]);
        let one = AlgebraElement::one(2, 2);
        let terms = expand_bracket(0, 1, 0, 1, &one, &one, &cfg).unwrap();
        assert!(realize_expansion(&terms, &cfg).unwrap().is_zero());
    }

    #[test]
    fn missing_factor_on_group_direction_is_flagged() {
        let cfg = SpecialConfig::new(
            vec![VariableKind::Polynomial, VariableKind::GroupOnly],
            vec![true, false],
            GroupElement::from_i64(&[0, 0]),
            GroupElement::from_i64(&[0, 0]),
        )
        .unwrap();
        let v = validate(&cfg);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].condition, "(3.5)");
    }

    #[test]
    fn frozen_coordinate_constraints_are_structural() {
        assert!(SpecialConfig::new(
            vec![VariableKind::Polynomial, VariableKind::Polynomial],
            vec![true, false],
            GroupElement::from_i64(&[0, 1]),
            GroupElement::from_i64(&[0, 0]),
        )
        .is_err());
    }
}
