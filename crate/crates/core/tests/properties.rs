//! Property tests over randomly generated elements and maps: algebra
//! axioms, derivation contracts, bracket identities, lattice facts, parser
//! round-trips, and rank-accumulator behavior.

use cartan_core::algebra::{AlgebraElement, ExponentVector, Monomial, VariableKind};
use cartan_core::config::{AlgebraConfig, Element};
use cartan_core::deriv::{self, DerivationKind};
use cartan_core::lattice::{
    kernel_lattice, witness_outside_kernel, GradingMap, GroupElement, IntegerLattice,
};
use cartan_core::probe::RankAccumulator;
use cartan_core::textform::parse_element;
use cartan_core::witt::{self, WittConfig, WittVector};
use num::{BigInt, BigRational, Zero};
use proptest::prelude::*;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rank-2 config with one group-only and one polynomial direction.
fn base_config() -> WittConfig {
    WittConfig::new(
        2,
        vec![VariableKind::GroupOnly, VariableKind::Polynomial],
        vec![GradingMap::from_i64(&[1, 0]), GradingMap::from_i64(&[0, 1])],
    )
    .unwrap()
}

fn base_algebra() -> AlgebraConfig {
    AlgebraConfig::Witt(base_config())
}

prop_compose! {
    fn arb_monomial()(a in -3i64..=3, b in -3i64..=3, e in 0u32..=3) -> Monomial {
        Monomial::new(GroupElement::from_i64(&[a, b]), ExponentVector::from_u32(&[0, e]))
    }
}

prop_compose! {
    fn arb_element()(terms in prop::collection::vec((arb_monomial(), -2i64..=2), 1..=3)) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in terms {
            out.add_term(m, rat(c));
        }
        out
    }
}

prop_compose! {
    fn arb_field()(comps in prop::collection::vec((0usize..2, arb_element()), 1..=2)) -> WittVector {
        let mut w = WittVector::zero(2);
        for (p, u) in comps {
            w = &w + &WittVector::from_term(2, p, u);
        }
        w
    }
}

proptest! {
    #[test]
    fn multiplication_is_commutative_and_associative(
        u in arb_element(),
        v in arb_element(),
        w in arb_element(),
    ) {
        prop_assert_eq!(&u * &v, &v * &u);
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
    }

    #[test]
    fn elements_stay_normalized(u in arb_element(), v in arb_element()) {
        let sum = &u + &v;
        for (_, c) in sum.iter() {
            prop_assert!(!c.is_zero());
        }
        prop_assert!((&u - &u).is_zero());
        prop_assert!((&u + &(-&u)).is_zero());
    }

    #[test]
    fn grade_split_parts_are_homogeneous_and_resum(u in arb_element()) {
        let split = u.grade_split();
        let mut resum = AlgebraElement::zero();
        for (grade, part) in &split {
            prop_assert!(!part.is_zero());
            for (m, _) in part.iter() {
                prop_assert_eq!(&m.group, grade);
            }
            resum = &resum + part;
        }
        prop_assert_eq!(resum, u);
    }

    #[test]
    fn every_operator_satisfies_the_product_rule(u in arb_element(), v in arb_element()) {
        let cfg = base_algebra();
        for kind in deriv::kinds_for(&cfg) {
            prop_assert!(kind.leibniz_holds(&u, &v, &cfg).unwrap());
        }
    }

    #[test]
    fn grading_family_commutes_pairwise(u in arb_element()) {
        let cfg = base_algebra();
        let kinds = deriv::kinds_for(&cfg);
        for a in &kinds {
            for b in &kinds {
                let ab = a.apply(&b.apply(&u, &cfg).unwrap(), &cfg).unwrap();
                let ba = b.apply(&a.apply(&u, &cfg).unwrap(), &cfg).unwrap();
                prop_assert_eq!(ab, ba);
            }
        }
    }

    #[test]
    fn down_grading_is_nilpotent(m in arb_monomial()) {
        let cfg = base_algebra();
        let reps = m.exps.get(1) + 1;
        let mut u = AlgebraElement::monomial(m);
        for _ in 0..reps {
            u = DerivationKind::DownGrading(1).apply(&u, &cfg).unwrap();
        }
        prop_assert!(u.is_zero());
    }

    #[test]
    fn field_bracket_is_skew_and_satisfies_jacobi(
        a in arb_field(),
        b in arb_field(),
        c in arb_field(),
    ) {
        let cfg = base_config();
        prop_assert!(witt::bracket(&a, &a, &cfg).is_zero());
        let ab = witt::bracket(&a, &b, &cfg);
        let ba = witt::bracket(&b, &a, &cfg);
        prop_assert!((&ab + &ba).is_zero());
        let jac = &(&witt::bracket(&ab, &c, &cfg)
            + &witt::bracket(&witt::bracket(&b, &c, &cfg), &a, &cfg))
            + &witt::bracket(&witt::bracket(&c, &a, &cfg), &b, &cfg);
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn bracket_action_matches_commutator_of_actions(
        a in arb_field(),
        b in arb_field(),
        u in arb_element(),
    ) {
        let cfg = base_config();
        let lhs = witt::apply(&witt::bracket(&a, &b, &cfg), &u, &cfg);
        let rhs = &witt::apply(&a, &witt::apply(&b, &u, &cfg), &cfg)
            - &witt::apply(&b, &witt::apply(&a, &u, &cfg), &cfg);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernel_rank_complements_map_rank(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 0..=3),
    ) {
        let maps: Vec<GradingMap> = rows.iter().map(|r| GradingMap::from_i64(r)).collect();
        let kernel = kernel_lattice(&maps, 3);
        let mut acc: RankAccumulator<usize> = RankAccumulator::new();
        for m in &maps {
            acc.insert(m.0.iter().cloned().enumerate());
        }
        prop_assert_eq!(kernel.rank() + acc.rank(), 3);
        for b in kernel.basis_elements() {
            for m in &maps {
                prop_assert!(m.eval(&b).is_zero());
            }
        }
    }

    #[test]
    fn intersections_live_in_both_lattices(
        a in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..=2),
        b in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..=2),
        coeffs in prop::collection::vec(-2i64..=2, 2),
    ) {
        let build = |rows: &Vec<Vec<i64>>| {
            let ints: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect();
            IntegerLattice::from_basis(3, ints)
        };
        let (Ok(la), Ok(lb)) = (build(&a), build(&b)) else {
            // dependent generating sets are outside this property
            return Ok(());
        };
        let meet = la.intersect(&lb).unwrap();
        for v in meet.basis_elements() {
            prop_assert!(la.contains(&v));
            prop_assert!(lb.contains(&v));
        }
        // a combination of the a-basis landing in b lies in the meet
        let mut combo = GroupElement::zero(3);
        for (v, &c) in la.basis_elements().iter().zip(&coeffs) {
            let scaled = GroupElement(v.0.iter().map(|x| x * BigInt::from(c)).collect());
            combo = &combo + &scaled;
        }
        if lb.contains(&combo) {
            prop_assert!(meet.contains(&combo));
        }
    }

    #[test]
    fn witnesses_really_avoid_the_kernel(
        rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..=2),
        avoid in prop::collection::vec(-2i64..=2, 3),
    ) {
        let maps: Vec<GradingMap> = rows.iter().map(|r| GradingMap::from_i64(r)).collect();
        let inside = kernel_lattice(&maps, 3);
        let avoid = GradingMap::from_i64(&avoid);
        match witness_outside_kernel(&inside, &avoid) {
            Some(w) => {
                prop_assert!(!avoid.eval(&w).is_zero());
                prop_assert!(inside.contains(&w));
            }
            None => {
                for b in inside.basis_elements() {
                    prop_assert!(avoid.eval(&b).is_zero());
                }
            }
        }
    }

    #[test]
    fn printed_elements_parse_back(u in arb_element(), w in arb_field()) {
        let cfg = base_algebra();
        let scalar = Element::Scalar(u);
        let parsed = parse_element(&scalar.to_string(), &cfg).unwrap();
        prop_assert_eq!(parsed.to_string(), scalar.to_string());
        let vector = Element::Vector(w).normalized_for(&cfg);
        let parsed = parse_element(&vector.to_string(), &cfg).unwrap();
        prop_assert_eq!(parsed.to_string(), vector.to_string());
    }

    #[test]
    fn rank_never_counts_dependent_vectors(
        vectors in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=6),
        multiple in 1i64..=3,
    ) {
        let mut acc: RankAccumulator<usize> = RankAccumulator::new();
        for v in &vectors {
            acc.insert(v.iter().map(|&c| rat(c)).enumerate());
        }
        let rank = acc.rank();
        prop_assert!(rank <= 4);
        // re-inserting scaled copies changes nothing
        let mut acc2 = acc.clone();
        for v in &vectors {
            prop_assert!(!acc2.insert(v.iter().map(|&c| rat(c * multiple)).enumerate()));
            prop_assert!(acc2.contains(v.iter().map(|&c| rat(c * multiple)).enumerate()));
        }
        prop_assert_eq!(acc2.rank(), rank);
    }
}
