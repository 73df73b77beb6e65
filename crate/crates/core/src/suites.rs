//! Named property suites over a configuration: Lie-algebra axioms,
//! derivation contracts, and the closed-form cross-checks. Each suite runs
//! a fixed number of seeded samples and reports the first counterexample
//! verbatim, so identical invocations produce identical output.

use crate::algebra::{AlgebraElement, Monomial};
use crate::config::{bracket_elements, AlgebraConfig, Element};
use crate::contact;
use crate::deriv::kinds_for;
use crate::error::{Error, Result};
use crate::hamiltonian;
use crate::sample::Sampler;
use crate::special;
use num::{BigInt, BigRational};
use std::fmt;

/// The available suites. Names follow the condition-numbering convention
/// used throughout: `oracle-3.8` cross-checks identity (3.8), and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Jacobi,
    Skew,
    Leibniz,
    Oracle38,
    Oracle312,
    Oracle478,
    Oracle521,
    Oracle526,
    Central1,
    Restriction540,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Jacobi,
        Suite::Skew,
        Suite::Leibniz,
        Suite::Oracle38,
        Suite::Oracle312,
        Suite::Oracle478,
        Suite::Oracle521,
        Suite::Oracle526,
        Suite::Central1,
        Suite::Restriction540,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Jacobi => "jacobi",
            Suite::Skew => "skew",
            Suite::Leibniz => "leibniz",
            Suite::Oracle38 => "oracle-3.8",
            Suite::Oracle312 => "oracle-3.12",
            Suite::Oracle478 => "oracle-4.78",
            Suite::Oracle521 => "oracle-5.21",
            Suite::Oracle526 => "oracle-5.26",
            Suite::Central1 => "central-1",
            Suite::Restriction540 => "restriction-5.40",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of a suite run.
#[derive(Debug, Clone)]
pub struct SuiteRun {
    pub suite: Suite,
    pub samples: usize,
    pub violations: usize,
    pub first_counterexample: Option<String>,
}

impl SuiteRun {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for SuiteRun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "suite {}: ok ({} samples)", self.suite, self.samples)
        } else {
            write!(
                f,
                "suite {}: {} violation(s) in {} samples",
                self.suite, self.violations, self.samples
            )?;
            if let Some(ce) = &self.first_counterexample {
                write!(f, "\nfirst counterexample: {ce}")?;
            }
            Ok(())
        }
    }
}

/// Runs a suite on a configuration with a seeded sampler.
pub fn run_suite(
    suite: Suite,
    cfg: &AlgebraConfig,
    samples: usize,
    seed: u64,
) -> Result<SuiteRun> {
    let mut sampler = Sampler::new(seed);
    let mut violations = 0usize;
    let mut first = None;
    let mut record = |ce: Option<String>| {
        if let Some(ce) = ce {
            violations += 1;
            if first.is_none() {
                first = Some(ce);
            }
        }
    };
    for _ in 0..samples {
        let ce = run_one(suite, cfg, &mut sampler)?;
        record(ce);
    }
    Ok(SuiteRun {
        suite,
        samples,
        violations,
        first_counterexample: first,
    })
}

fn sample_element(cfg: &AlgebraConfig, sampler: &mut Sampler) -> Element {
    match cfg {
        AlgebraConfig::Witt(_) => Element::Vector(sampler.vector_field(cfg)),
        AlgebraConfig::Special(sc) => Element::Vector(sampler.generator_sum(sc)),
        _ => Element::Scalar(sampler.element(cfg)),
    }
}

fn add_elements(a: &Element, b: &Element) -> Element {
    match (a, b) {
        (Element::Scalar(x), Element::Scalar(y)) => Element::Scalar(x + y),
        (Element::Vector(x), Element::Vector(y)) => Element::Vector(x + y),
        _ => unreachable!("sampled elements share a shape"),
    }
}

fn run_one(suite: Suite, cfg: &AlgebraConfig, sampler: &mut Sampler) -> Result<Option<String>> {
    match suite {
        Suite::Jacobi => {
            let a = sample_element(cfg, sampler);
            let b = sample_element(cfg, sampler);
            let c = sample_element(cfg, sampler);
            let ab_c = bracket_elements(&bracket_elements(&a, &b, cfg)?, &c, cfg)?;
            let bc_a = bracket_elements(&bracket_elements(&b, &c, cfg)?, &a, cfg)?;
            let ca_b = bracket_elements(&bracket_elements(&c, &a, cfg)?, &b, cfg)?;
            let total = add_elements(&add_elements(&ab_c, &bc_a), &ca_b);
            if total.is_zero() {
                Ok(None)
            } else {
                Ok(Some(format!("jacobi sum nonzero for a={a}; b={b}; c={c}")))
            }
        }
        Suite::Skew => {
            let a = sample_element(cfg, sampler);
            let b = sample_element(cfg, sampler);
            let aa = bracket_elements(&a, &a, cfg)?;
            if !aa.is_zero() {
                return Ok(Some(format!("[a,a] nonzero for a={a}")));
            }
            let ab_ba = add_elements(
                &bracket_elements(&a, &b, cfg)?,
                &bracket_elements(&b, &a, cfg)?,
            );
            if ab_ba.is_zero() {
                Ok(None)
            } else {
                Ok(Some(format!("[a,b]+[b,a] nonzero for a={a}; b={b}")))
            }
        }
        Suite::Leibniz => {
            let u = sampler.element(cfg);
            let v = sampler.element(cfg);
            for kind in kinds_for(cfg) {
                if !kind.leibniz_holds(&u, &v, cfg)? {
                    return Ok(Some(format!(
                        "product rule fails for {kind:?} on u={u}; v={v}"
                    )));
                }
            }
            Ok(None)
        }
        Suite::Oracle38 => {
            let AlgebraConfig::Special(sc) = cfg else {
                return Err(Error::argument("oracle-3.8 needs a special-type config"));
            };
            let n = sc.vars();
            let (p, q) = sampler.index_pair(n);
            let (r, s) = sampler.index_pair(n);
            let u = AlgebraElement::monomial(sampler.monomial(cfg));
            let v = AlgebraElement::monomial(sampler.monomial(cfg));
            let direct = special::bracket(
                &special::generator(p, q, &u, sc)?,
                &special::generator(r, s, &v, sc)?,
                sc,
            );
            let expanded =
                special::realize_expansion(&special::expand_bracket(p, q, r, s, &u, &v, sc)?, sc)?;
            if direct == expanded {
                Ok(None)
            } else {
                Ok(Some(format!(
                    "expansion mismatch for pairs ({},{})/({},{}) on u={u}; v={v}",
                    p + 1,
                    q + 1,
                    r + 1,
                    s + 1
                )))
            }
        }
        Suite::Oracle312 => {
            let AlgebraConfig::Special(sc) = cfg else {
                return Err(Error::argument("oracle-3.12 needs a special-type config"));
            };
            let n = sc.vars();
            let (p, q) = sampler.index_pair(n);
            let a = sampler.monomial(cfg);
            let b = sampler.monomial(cfg);
            let direct = special::bracket(
                &special::generator(p, q, &AlgebraElement::monomial(a.clone()), sc)?,
                &special::generator(p, q, &AlgebraElement::monomial(b.clone()), sc)?,
                sc,
            );
            let closed =
                special::realize_same_pair(&special::same_pair_bracket(&a, &b, p, q, sc)?, sc)?;
            if direct == closed {
                Ok(None)
            } else {
                Ok(Some(format!(
                    "same-pair closed form mismatch for ({},{}) on {a} and {b}",
                    p + 1,
                    q + 1
                )))
            }
        }
        Suite::Oracle478 => {
            let AlgebraConfig::Hamiltonian(hc) = cfg else {
                return Err(Error::argument("oracle-4.78 needs a hamiltonian-type config"));
            };
            if !hc.pure_group() {
                return Err(Error::argument(
                    "oracle-4.78 applies to pure group configs only",
                ));
            }
            let alpha = sampler.group_element(cfg);
            let beta = sampler.group_element(cfg);
            let n = cfg.vars();
            let direct = hamiltonian::bracket(
                &AlgebraElement::monomial(Monomial::group_only(alpha.clone(), n)),
                &AlgebraElement::monomial(Monomial::group_only(beta.clone(), n)),
                hc,
            );
            let closed = hamiltonian::closed_form_bracket(&alpha, &beta, hc)?;
            if direct == closed {
                Ok(None)
            } else {
                Ok(Some(format!(
                    "group closed form mismatch for {alpha} and {beta}"
                )))
            }
        }
        Suite::Oracle521 => {
            let AlgebraConfig::Contact(cc) = cfg else {
                return Err(Error::argument("oracle-5.21 needs a contact-type config"));
            };
            let target = sampler.monomial(cfg);
            let direct = contact::bracket(
                &AlgebraElement::one(cc.rank(), cc.vars()),
                &AlgebraElement::monomial(target.clone()),
                cc,
            );
            // independent evaluation of the identity-bracket closed form
            let two = BigRational::from_integer(BigInt::from(2));
            let center = cc.center();
            let shifted = &target.group + cc.center_shift();
            let mut expected = AlgebraElement::zero();
            expected.add_term(
                Monomial::new(shifted.clone(), target.exps.clone()),
                &two * &cc.map(center).eval(&target.group),
            );
            if let Some(lowered) = target.exps.checked_dec(center) {
                let ln = BigRational::from_integer(BigInt::from(target.exps.get(center)));
                expected.add_term(Monomial::new(shifted, lowered), &two * &ln);
            }
            if direct == expected {
                Ok(None)
            } else {
                Ok(Some(format!("identity-bracket mismatch on {target}")))
            }
        }
        Suite::Oracle526 => {
            let AlgebraConfig::Contact(cc) = cfg else {
                return Err(Error::argument("oracle-5.26 needs a contact-type config"));
            };
            let kappa = sampler.center_block_element(cc);
            let target = sampler.monomial(cfg);
            let direct = contact::bracket(
                &AlgebraElement::monomial(Monomial::group_only(kappa.clone(), cc.vars())),
                &AlgebraElement::monomial(target.clone()),
                cc,
            );
            let closed = contact::bracket_with_constant(&kappa, &target, cc)?;
            if direct == closed {
                Ok(None)
            } else {
                Ok(Some(format!(
                    "center-block closed form mismatch for {kappa} on {target}"
                )))
            }
        }
        Suite::Central1 => {
            let AlgebraConfig::Hamiltonian(hc) = cfg else {
                return Err(Error::argument("central-1 needs a hamiltonian-type config"));
            };
            let v = sampler.element(cfg);
            let one = AlgebraElement::one(cfg.rank(), cfg.vars());
            if !hamiltonian::bracket(&one, &v, hc).is_zero() {
                return Ok(Some(format!("identity not central against v={v}")));
            }
            let u = sampler.element(cfg);
            let c = sampler.coefficient();
            let shifted = &u + &one.scaled(&c);
            if hamiltonian::bracket(&u, &v, hc) == hamiltonian::bracket(&shifted, &v, hc) {
                Ok(None)
            } else {
                Ok(Some(format!(
                    "bracket not constant-invariant for u={u}; v={v}; c={c}"
                )))
            }
        }
        Suite::Restriction540 => {
            let AlgebraConfig::Contact(cc) = cfg else {
                return Err(Error::argument(
                    "restriction-5.40 needs a contact-type config",
                ));
            };
            let u = sampler.core_element(cc);
            let v = sampler.core_element(cc);
            let lhs = contact::drop_center_variable(&contact::bracket(&u, &v, cc), cc)?;
            let induced = contact::induced_hamiltonian(cc);
            let rhs = hamiltonian::bracket(
                &contact::drop_center_variable(&u, cc)?,
                &contact::drop_center_variable(&v, cc)?,
                &induced,
            );
            if lhs == rhs {
                Ok(None)
            } else {
                Ok(Some(format!(
                    "core restriction mismatch for u={u}; v={v}"
                )))
            }
        }
    }
}
