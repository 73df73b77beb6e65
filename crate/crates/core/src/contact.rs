//! The Contact-type family: a bracket on the algebra over an odd number of
//! directions `2 * pairs + 1`. The paired directions contribute shifted
//! mixed cross terms as in the Hamiltonian family; the last (center)
//! direction contributes through the Euler weight operator, entering as
//! `(2 - weight)`.
//!
//! The exponent group splits as a direct sum of two generator blocks: the
//! kernel of the center map and the joint kernel of the paired maps. The
//! split is supplied as a partition of the generators and verified, not
//! computed, since the decomposition is not canonical.

use crate::algebra::{AlgebraElement, ExponentVector, Monomial, VariableKind};
use crate::config::Violation;
use crate::deriv::mixed;
use crate::error::{Error, Result};
use crate::hamiltonian::HamiltonianConfig;
use crate::lattice::{kernel_lattice, witness_outside_kernel, GradingMap, GroupElement, SkewForm};
use num::{BigInt, BigRational, One, Zero};

/// Construction data for a Contact-type algebra.
///
/// `pair_shifts[p]` is the common shift of the pair `(p, p + pairs)` when
/// both maps of the pair are nonzero, and `None` (meaning zero) when the
/// pair is ungraded. `center_shift` shifts the Euler term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactConfig {
    rank: usize,
    pairs: usize,
    kinds: Vec<VariableKind>,
    maps: Vec<GradingMap>,
    kernel_generators: Vec<usize>,
    center_generators: Vec<usize>,
    pair_shifts: Vec<Option<GroupElement>>,
    center_shift: GroupElement,
}

impl ContactConfig {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        rank: usize,
        pairs: usize,
        kinds: Vec<VariableKind>,
        maps: Vec<GradingMap>,
        kernel_generators: Vec<usize>,
        center_generators: Vec<usize>,
        pair_shifts: Vec<Option<GroupElement>>,
        center_shift: GroupElement,
    ) -> Result<Self> {
        if pairs == 0 {
            return Err(Error::config("contact-type configs need at least one pair"));
        }
        let n = 2 * pairs + 1;
        if kinds.len() != n || maps.len() != n {
            return Err(Error::config(format!(
                "expected {n} kinds and maps for {pairs} pairs plus the center"
            )));
        }
        for m in &maps {
            if m.dim() != rank {
                return Err(Error::config("grading map dimension mismatch"));
            }
        }
        // the generator split must be a partition of 0..rank
        let mut seen = vec![false; rank];
        for &i in kernel_generators.iter().chain(&center_generators) {
            if i >= rank {
                return Err(Error::config("generator index out of range"));
            }
            if seen[i] {
                return Err(Error::config("generator assigned to both blocks"));
            }
            seen[i] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::config("generator split must cover every generator"));
        }
        if pair_shifts.len() != pairs {
            return Err(Error::config(format!(
                "expected {pairs} pair shifts, got {}",
                pair_shifts.len()
            )));
        }
        for s in pair_shifts.iter().flatten() {
            if s.dim() != rank {
                return Err(Error::config("pair shift dimension mismatch"));
            }
        }
        if center_shift.dim() != rank {
            return Err(Error::config("center shift dimension mismatch"));
        }
        Ok(ContactConfig {
            rank,
            pairs,
            kinds,
            maps,
            kernel_generators,
            center_generators,
            pair_shifts,
            center_shift,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn pairs(&self) -> usize {
        self.pairs
    }

    pub fn vars(&self) -> usize {
        2 * self.pairs + 1
    }

    /// Index of the center direction.
    pub fn center(&self) -> usize {
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

    pub fn partner(&self, p: usize) -> usize {
        debug_assert!(p < 2 * self.pairs);
        if p < self.pairs {
            p + self.pairs
        } else {
            p - self.pairs
        }
    }

    /// Generator indices spanning the kernel block (killed by the center map).
    pub fn kernel_generators(&self) -> &[usize] {
        &self.kernel_generators
    }

    /// Generator indices spanning the center block (killed by the paired maps).
    pub fn center_generators(&self) -> &[usize] {
        &self.center_generators
    }

    /// Paired directions whose maps are nonzero.
    pub fn graded_indices(&self) -> Vec<usize> {
        (0..2 * self.pairs).filter(|&p| !self.maps[p].is_zero()).collect()
    }

    /// Paired directions whose maps vanish.
    pub fn ungraded_indices(&self) -> Vec<usize> {
        (0..2 * self.pairs).filter(|&p| self.maps[p].is_zero()).collect()
    }

    /// Shift of paired direction `p` (zero on ungraded pairs).
    pub fn shift(&self, p: usize) -> GroupElement {
        let pair = p % self.pairs;
        match &self.pair_shifts[pair] {
            Some(s) => s.clone(),
            None => GroupElement::zero(self.rank),
        }
    }

    pub fn center_shift(&self) -> &GroupElement {
        &self.center_shift
    }

    /// Whether `g` lies in the span of the kernel-block generators.
    pub fn in_kernel_block(&self, g: &GroupElement) -> bool {
        (0..self.rank).all(|i| self.kernel_generators.contains(&i) || g.coord(i).is_zero())
    }

    /// Whether `g` lies in the span of the center-block generators.
    pub fn in_center_block(&self, g: &GroupElement) -> bool {
        (0..self.rank).all(|i| self.center_generators.contains(&i) || g.coord(i).is_zero())
    }

    /// Restriction of a map to the kernel block, in block coordinates.
    fn restricted_map(&self, p: usize) -> GradingMap {
        GradingMap(
            self.kernel_generators
                .iter()
                .map(|&i| self.maps[p].0[i].clone())
                .collect(),
        )
    }

    /// Euler weight of a symbol: graded map values on the group part plus
    /// exponents at the ungraded paired directions.
    pub fn euler_weight(&self, m: &Monomial) -> BigRational {
        let mut acc = BigRational::zero();
        for p in self.graded_indices() {
            acc += self.maps[p].eval(&m.group);
        }
        for q in self.ungraded_indices() {
            acc += BigRational::from_integer(BigInt::from(m.exps.get(q)));
        }
        acc
    }

    /// Two minus the Euler weight: the factor that multiplies the center
    /// derivative in the bracket.
    pub fn euler_coweight(&self, alpha: &GroupElement, exps: &ExponentVector) -> BigRational {
        let m = Monomial::new(alpha.clone(), exps.clone());
        BigRational::from_integer(BigInt::from(2)) - self.euler_weight(&m)
    }
}

/// Scales every term by its Euler weight.
pub fn euler(u: &AlgebraElement, cfg: &ContactConfig) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in u.iter() {
        let w = cfg.euler_weight(m);
        if !w.is_zero() {
            out.add_term(m.clone(), c * w);
        }
    }
    out
}

/// `(2 - weight)` applied termwise.
fn co_euler(u: &AlgebraElement, cfg: &ContactConfig) -> AlgebraElement {
    &u.scaled(&BigRational::from_integer(BigInt::from(2))) - &euler(u, cfg)
}

/// Checks the admissibility conditions (5.1)-(5.3) and (5.5)-(5.9).
pub fn validate(cfg: &ContactConfig) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = cfg.vars();
    let center = cfg.center();
    let k = cfg.rank();

    // (5.1): every direction grades or carries a polynomial variable
    for p in 0..n {
        if cfg.map(p).is_zero() && cfg.kind(p) == VariableKind::GroupOnly {
            out.push(Violation::new(
                "(5.1)",
                format!("direction {} neither grades nor has a variable", p + 1),
            ));
        }
    }
    // (5.2): the generator split realizes the two kernels
    let mut split_ok = true;
    for &i in cfg.kernel_generators() {
        if !cfg.map(center).0[i].is_zero() {
            split_ok = false;
            out.push(Violation::new(
                "(5.2)",
                format!("kernel-block generator {} is not killed by the center map", i + 1),
            ));
        }
    }
    let center_kernel = kernel_lattice(std::slice::from_ref(cfg.map(center)), k);
    if center_kernel.rank() != cfg.kernel_generators().len() {
        split_ok = false;
        out.push(Violation::new(
            "(5.2)",
            format!(
                "kernel of the center map has rank {} but the kernel block has {} generators",
                center_kernel.rank(),
                cfg.kernel_generators().len()
            ),
        ));
    }
    let paired_maps: Vec<GradingMap> = (0..2 * cfg.pairs()).map(|p| cfg.map(p).clone()).collect();
    for &i in cfg.center_generators() {
        if paired_maps.iter().any(|m| !m.0[i].is_zero()) {
            split_ok = false;
            out.push(Violation::new(
                "(5.2)",
                format!(
                    "center-block generator {} is not killed by every paired map",
                    i + 1
                ),
            ));
        }
    }
    let paired_kernel = kernel_lattice(&paired_maps, k);
    if paired_kernel.rank() != cfg.center_generators().len() {
        split_ok = false;
        out.push(Violation::new(
            "(5.2)",
            format!(
                "joint kernel of the paired maps has rank {} but the center block has {} generators",
                paired_kernel.rank(),
                cfg.center_generators().len()
            ),
        ));
    }
    let _ = split_ok;
    // (5.3): the paired maps separate the kernel block
    let restricted: Vec<GradingMap> =
        (0..2 * cfg.pairs()).map(|p| cfg.restricted_map(p)).collect();
    let restricted_kernel = kernel_lattice(&restricted, cfg.kernel_generators().len());
    if !restricted_kernel.is_trivial() {
        out.push(Violation::new(
            "(5.3)",
            format!(
                "paired maps have a joint kernel of rank {} inside the kernel block",
                restricted_kernel.rank()
            ),
        ));
    }
    // (5.5): each graded direction stays visible inside the kernel block
    for q in cfg.graded_indices() {
        let others: Vec<GradingMap> = (0..2 * cfg.pairs())
            .filter(|&p| p != q)
            .map(|p| cfg.restricted_map(p))
            .collect();
        let inside = kernel_lattice(&others, cfg.kernel_generators().len());
        if witness_outside_kernel(&inside, &cfg.restricted_map(q)).is_none() {
            out.push(Violation::new(
                "(5.5)",
                format!("no kernel-block witness for direction {}", q + 1),
            ));
        }
    }
    // (5.6)/(5.8): shifts of graded pairs; (5.9): no shift on ungraded pairs
    for pair in 0..cfg.pairs() {
        let a = pair;
        let b = pair + cfg.pairs();
        let a_graded = !cfg.map(a).is_zero();
        let b_graded = !cfg.map(b).is_zero();
        match (&cfg.pair_shifts[pair], a_graded || b_graded) {
            (None, false) => {}
            (Some(s), false) => {
                if !s.is_zero() {
                    out.push(Violation::new(
                        "(5.9)",
                        format!("ungraded pair {} carries a nonzero shift", pair + 1),
                    ));
                }
            }
            (None, true) => {
                out.push(Violation::new(
                    "(5.6)",
                    format!("graded pair {} has no shift element", pair + 1),
                ));
            }
            (Some(s), true) => {
                if !(a_graded && b_graded) {
                    out.push(Violation::new(
                        "(5.6)",
                        format!(
                            "pair {} grades on only one side, so no shift can separate it",
                            pair + 1
                        ),
                    ));
                    continue;
                }
                let mut ok = true;
                if !cfg.in_kernel_block(s) {
                    ok = false;
                    out.push(Violation::new(
                        "(5.6)",
                        format!("shift of pair {} is not in the kernel block", pair + 1),
                    ));
                }
                for p in 0..2 * cfg.pairs() {
                    if p == a || p == b {
                        continue;
                    }
                    if !cfg.map(p).eval(s).is_zero() {
                        ok = false;
                        out.push(Violation::new(
                            "(5.6)",
                            format!(
                                "shift of pair {} is not killed by the map of direction {}",
                                pair + 1,
                                p + 1
                            ),
                        ));
                    }
                }
                let va = cfg.map(a).eval(s);
                let vb = cfg.map(b).eval(s);
                if va.is_zero() || vb.is_zero() {
                    ok = false;
                    out.push(Violation::new(
                        "(5.6)",
                        format!("shift of pair {} vanishes under its own maps", pair + 1),
                    ));
                }
                // (5.8) only once the shift is admissible at all
                if ok {
                    let minus_one = -BigRational::one();
                    if va != minus_one || vb != minus_one {
                        out.push(Violation::new(
                            "(5.8)",
                            format!(
                                "shift of pair {} is not normalized: map values {} and {}",
                                pair + 1,
                                va,
                                vb
                            ),
                        ));
                    }
                }
            }
        }
    }
    // (5.7): the center shift lies in the center block
    if !cfg.in_center_block(cfg.center_shift()) {
        out.push(Violation::new(
            "(5.7)",
            "center shift is not in the center block".to_string(),
        ));
    }
    out
}

/// The contact bracket: shifted mixed cross terms over the pairs plus the
/// Euler/center cross term multiplied by the center-shift symbol.
pub fn bracket(u: &AlgebraElement, v: &AlgebraElement, cfg: &ContactConfig) -> AlgebraElement {
    let n = cfg.vars();
    let center = cfg.center();
    let mut acc = AlgebraElement::zero();
    for p in 0..cfg.pairs() {
        let pp = p + cfg.pairs();
        let inner = &(&mixed(u, p, cfg.map(p)) * &mixed(v, pp, cfg.map(pp)))
            - &(&mixed(u, pp, cfg.map(pp)) * &mixed(v, p, cfg.map(p)));
        if inner.is_zero() {
            continue;
        }
        let shift = AlgebraElement::monomial(Monomial::group_only(cfg.shift(p), n));
        acc = &acc + &(&shift * &inner);
    }
    let inner = &(&co_euler(u, cfg) * &mixed(v, center, cfg.map(center)))
        - &(&mixed(u, center, cfg.map(center)) * &co_euler(v, cfg));
    if !inner.is_zero() {
        let shift = AlgebraElement::monomial(Monomial::group_only(cfg.center_shift().clone(), n));
        acc = &acc + &(&shift * &inner);
    }
    acc
}

/// Closed form for the bracket of a center-block group symbol against an
/// arbitrary symbol.
pub fn bracket_with_constant(
    kappa: &GroupElement,
    target: &Monomial,
    cfg: &ContactConfig,
) -> Result<AlgebraElement> {
    if !cfg.in_center_block(kappa) {
        return Err(Error::argument(
            "the closed form needs a center-block group element",
        ));
    }
    let center = cfg.center();
    let two = BigRational::from_integer(BigInt::from(2));
    let phi_n = cfg.map(center);
    let base_group = &(&target.group + kappa) + cfg.center_shift();
    let mut out = AlgebraElement::zero();
    let c1 = &(&two * &phi_n.eval(&target.group))
        - &(&phi_n.eval(kappa) * &cfg.euler_coweight(&target.group, &target.exps));
    out.add_term(Monomial::new(base_group.clone(), target.exps.clone()), c1);
    if let Some(lowered) = target.exps.checked_dec(center) {
        let ln = BigRational::from_integer(BigInt::from(target.exps.get(center)));
        out.add_term(Monomial::new(base_group, lowered), &two * &ln);
    }
    Ok(out)
}

/// Whether an element lies in the centerless core: group parts in the
/// kernel block and a zero exponent at the center direction.
pub fn in_core(u: &AlgebraElement, cfg: &ContactConfig) -> bool {
    u.iter().all(|(m, _)| {
        cfg.in_kernel_block(&m.group) && m.exps.get(cfg.center()) == 0
    })
}

/// The Hamiltonian-type configuration induced on the core: the paired data
/// with every pair shifted and a zero form.
pub fn induced_hamiltonian(cfg: &ContactConfig) -> HamiltonianConfig {
    let m = cfg.pairs();
    HamiltonianConfig::new(
        cfg.rank(),
        m,
        m,
        cfg.kinds()[..2 * m].to_vec(),
        cfg.maps()[..2 * m].to_vec(),
        SkewForm::zero(cfg.rank()),
        (0..m).map(|p| cfg.shift(p)).collect(),
    )
    .expect("induced data is structurally consistent")
}

/// Forgets the center direction of a core-supported element, mapping it
/// into the induced Hamiltonian algebra.
pub fn drop_center_variable(u: &AlgebraElement, cfg: &ContactConfig) -> Result<AlgebraElement> {
    let center = cfg.center();
    let mut out = AlgebraElement::zero();
    for (m, c) in u.iter() {
        if m.exps.get(center) != 0 {
            return Err(Error::argument(
                "element depends on the center variable",
            ));
        }
        let exps = ExponentVector(m.exps.0[..center].to_vec());
        out.add_term(Monomial::new(m.group.clone(), exps), c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn symbol(coords: &[i64], exps: &[u32]) -> AlgebraElement {
        AlgebraElement::monomial(Monomial::new(
            GroupElement::from_i64(coords),
            ExponentVector::from_u32(exps),
        ))
    }

    /// Rank-3 config with identity coordinate maps, one graded pair with
    /// shift (-1,-1,0), center shift (0,0,1), all directions polynomial.
    pub(crate) fn graded_example() -> ContactConfig {
        ContactConfig::new(
            3,
            1,
            vec![VariableKind::Polynomial; 3],
            vec![
                GradingMap::from_i64(&[1, 0, 0]),
                GradingMap::from_i64(&[0, 1, 0]),
                GradingMap::from_i64(&[0, 0, 1]),
            ],
            vec![0, 1],
            vec![2],
            vec![Some(GroupElement::from_i64(&[-1, -1, 0]))],
            GroupElement::from_i64(&[0, 0, 1]),
        )
        .unwrap()
    }

    /// Rank-0 config: the classical polynomial contact algebra in three
    /// variables.
    pub(crate) fn classical_example() -> ContactConfig {
        ContactConfig::new(
            0,
            1,
            vec![VariableKind::Polynomial; 3],
            vec![GradingMap::zero(0), GradingMap::zero(0), GradingMap::zero(0)],
            vec![],
            vec![],
            vec![None],
            GroupElement::zero(0),
        )
        .unwrap()
    }

    #[test]
    fn examples_are_admissible() {
        assert!(validate(&graded_example()).is_empty());
        assert!(validate(&classical_example()).is_empty());
    }

    #[test]
    fn euler_coweight_values() {
        let cfg = graded_example();
        assert_eq!(
            cfg.euler_coweight(&GroupElement::zero(3), &ExponentVector::zero(3)),
            rat(2)
        );
        // graded values 2 + 1 = 3 gives coweight -1
        assert_eq!(
            cfg.euler_coweight(&GroupElement::from_i64(&[2, 1, 5]), &ExponentVector::zero(3)),
            rat(-1)
        );
        // consistency with the Euler operator
        let m = Monomial::new(GroupElement::from_i64(&[1, 2, 0]), ExponentVector::from_u32(&[0, 0, 3]));
        let applied = euler(&AlgebraElement::monomial(m.clone()), &cfg);
        let expected = AlgebraElement::monomial(m.clone())
            .scaled(&(rat(2) - cfg.euler_coweight(&m.group, &m.exps)));
        assert_eq!(applied, expected);
    }

    #[test]
    fn bracket_with_identity_matches_the_closed_form() {
        let cfg = graded_example();
        let one = AlgebraElement::one(3, 3);
        let target = Monomial::new(
            GroupElement::from_i64(&[1, 2, 2]),
            ExponentVector::from_u32(&[1, 0, 2]),
        );
        let direct = bracket(&one, &AlgebraElement::monomial(target.clone()), &cfg);
        // identity: 2*phi_n(g) x^{g+shift, e} + 2*e_n x^{g+shift, e - 1_n}
        let mut expected = AlgebraElement::from_term(
            Monomial::new(
                &target.group + cfg.center_shift(),
                target.exps.clone(),
            ),
            rat(2) * cfg.map(2).eval(&target.group),
        );
        expected.add_term(
            Monomial::new(
                &target.group + cfg.center_shift(),
                target.exps.checked_dec(2).unwrap(),
            ),
            rat(4),
        );
        assert_eq!(direct, expected);
        // and the constant closed form with a zero constant agrees
        assert_eq!(
            bracket_with_constant(&GroupElement::zero(3), &target, &cfg).unwrap(),
            direct
        );
    }

    #[test]
    fn bracket_is_skew() {
        let cfg = graded_example();
        let u = &symbol(&[1, 0, 0], &[0, 1, 0]) + &symbol(&[0, -1, 2], &[1, 0, 0]).scaled(&rat(2));
        let v = symbol(&[0, 0, 1], &[0, 0, 1]);
        assert!(bracket(&u, &u, &cfg).is_zero());
        assert!((&bracket(&u, &v, &cfg) + &bracket(&v, &u, &cfg)).is_zero());
    }

    #[test]
    fn constant_closed_form_matches_direct_bracket() {
        let cfg = graded_example();
        let kappa = GroupElement::from_i64(&[0, 0, 2]);
        let target = Monomial::new(
            GroupElement::from_i64(&[1, -1, 1]),
            ExponentVector::from_u32(&[0, 2, 1]),
        );
        let lhs = bracket(
            &AlgebraElement::monomial(Monomial::group_only(kappa.clone(), 3)),
            &AlgebraElement::monomial(target.clone()),
            &cfg,
        );
        assert_eq!(lhs, bracket_with_constant(&kappa, &target, &cfg).unwrap());
    }

    #[test]
    fn constant_closed_form_rejects_kernel_block_elements() {
        let cfg = graded_example();
        let kappa = GroupElement::from_i64(&[1, 0, 0]);
        let target = Monomial::one(3, 3);
        assert!(bracket_with_constant(&kappa, &target, &cfg).is_err());
    }

    #[test]
    fn core_bracket_restricts_to_the_induced_pair_bracket() {
        let cfg = graded_example();
        let u = &symbol(&[1, 0, 0], &[0, 1, 0]) + &symbol(&[-1, 1, 0], &[0, 0, 0]);
        let v = symbol(&[0, 1, 0], &[1, 0, 0]);
        assert!(in_core(&u, &cfg) && in_core(&v, &cfg));
        let lhs = drop_center_variable(&bracket(&u, &v, &cfg), &cfg).unwrap();
        let ind = induced_hamiltonian(&cfg);
        let rhs = crate::hamiltonian::bracket(
            &drop_center_variable(&u, &cfg).unwrap(),
            &drop_center_variable(&v, &cfg).unwrap(),
            &ind,
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn grading_shift_of_bracket_monomials() {
        let cfg = graded_example();
        let a = Monomial::new(GroupElement::from_i64(&[1, 1, 1]), ExponentVector::zero(3));
        let b = Monomial::new(GroupElement::from_i64(&[0, 2, -1]), ExponentVector::zero(3));
        let sum = &a.group + &b.group;
        let allowed: Vec<GroupElement> = vec![
            &sum + &cfg.shift(0),
            &sum + cfg.center_shift(),
        ];
        let out = bracket(
            &AlgebraElement::monomial(a),
            &AlgebraElement::monomial(b),
            &cfg,
        );
        assert!(!out.is_zero());
        for (m, _) in out.iter() {
            assert!(allowed.contains(&m.group));
        }
    }

    #[test]
    fn misnormalized_shift_is_flagged() {
        let mut shifts = vec![Some(GroupElement::from_i64(&[-2, -2, 0]))];
        let cfg = ContactConfig::new(
            3,
            1,
            vec![VariableKind::Polynomial; 3],
            vec![
                GradingMap::from_i64(&[1, 0, 0]),
                GradingMap::from_i64(&[0, 1, 0]),
                GradingMap::from_i64(&[0, 0, 1]),
            ],
            vec![0, 1],
            vec![2],
            shifts.drain(..).collect(),
            GroupElement::from_i64(&[0, 0, 0]),
        )
        .unwrap();
        let conds: Vec<&str> = validate(&cfg).iter().map(|v| v.condition).collect();
        assert_eq!(conds, vec!["(5.8)"]);
    }

    #[test]
    fn center_shift_outside_its_block_is_flagged() {
        let cfg = ContactConfig::new(
            3,
            1,
            vec![VariableKind::Polynomial; 3],
            vec![
                GradingMap::from_i64(&[1, 0, 0]),
                GradingMap::from_i64(&[0, 1, 0]),
                GradingMap::from_i64(&[0, 0, 1]),
            ],
            vec![0, 1],
            vec![2],
            vec![Some(GroupElement::from_i64(&[-1, -1, 0]))],
            GroupElement::from_i64(&[1, 0, 0]),
        )
        .unwrap();
        let conds: Vec<&str> = validate(&cfg).iter().map(|v| v.condition).collect();
        assert_eq!(conds, vec!["(5.7)"]);
    }
}
