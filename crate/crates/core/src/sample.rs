//! Seeded random construction of test elements.
//!
//! The distributions are fixed so runs are reproducible byte for byte:
//! group coordinates uniform in [-3, 3], exponents uniform in [0, 3] at
//! polynomial directions, coefficients uniform in {-2, -1, 1, 2}. Small
//! supports keep exact arithmetic fast while reaching every formula branch.

use crate::algebra::{AlgebraElement, ExponentVector, Monomial, VariableKind};
use crate::config::AlgebraConfig;
use crate::contact::ContactConfig;
use crate::lattice::GroupElement;
use crate::special::SpecialConfig;
use crate::witt::WittVector;
use num::{BigInt, BigRational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn coefficient(&mut self) -> BigRational {
        let choices = [-2i64, -1, 1, 2];
        BigRational::from_integer(BigInt::from(choices[self.rng.gen_range(0..choices.len())]))
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// An ordered pair of distinct indices below `n`.
    pub fn index_pair(&mut self, n: usize) -> (usize, usize) {
        let p = self.rng.gen_range(0..n);
        let mut q = self.rng.gen_range(0..n - 1);
        if q >= p {
            q += 1;
        }
        (p, q)
    }

    /// A group element compatible with the config (frozen coordinates of
    /// special-type configs stay zero).
    pub fn group_element(&mut self, cfg: &AlgebraConfig) -> GroupElement {
        let k = cfg.rank();
        let frozen: Option<&[bool]> = match cfg {
            AlgebraConfig::Special(sc) => Some(sc.delta_nonzero()),
            _ => None,
        };
        let coords = (0..k)
            .map(|i| {
                if frozen.map(|d| !d[i]).unwrap_or(false) {
                    BigInt::from(0)
                } else {
                    BigInt::from(self.rng.gen_range(-3i64..=3))
                }
            })
            .collect();
        GroupElement(coords)
    }

    pub fn exponents(&mut self, cfg: &AlgebraConfig) -> ExponentVector {
        ExponentVector(
            cfg.kinds()
                .iter()
                .map(|&kind| match kind {
                    VariableKind::GroupOnly => 0,
                    VariableKind::Polynomial => self.rng.gen_range(0u32..=3),
                })
                .collect(),
        )
    }

    pub fn monomial(&mut self, cfg: &AlgebraConfig) -> Monomial {
        Monomial::new(self.group_element(cfg), self.exponents(cfg))
    }

    /// An algebra element with one to three sampled terms.
    pub fn element(&mut self, cfg: &AlgebraConfig) -> AlgebraElement {
        let nterms = self.rng.gen_range(1usize..=3);
        let mut out = AlgebraElement::zero();
        for _ in 0..nterms {
            out.add_term(self.monomial(cfg), self.coefficient());
        }
        out
    }

    /// A vector field with one or two populated components.
    pub fn vector_field(&mut self, cfg: &AlgebraConfig) -> WittVector {
        let n = cfg.vars();
        let ncomps = self.rng.gen_range(1usize..=2.min(n));
        let mut w = WittVector::zero(n);
        for _ in 0..ncomps {
            let p = self.rng.gen_range(0..n);
            let nterms = self.rng.gen_range(1usize..=2);
            let mut comp = AlgebraElement::zero();
            for _ in 0..nterms {
                comp.add_term(self.monomial(cfg), self.coefficient());
            }
            w = &w + &WittVector::from_term(n, p, comp);
        }
        w
    }

    /// A sum of one or two generators of a special-type algebra.
    pub fn generator_sum(&mut self, sc: &SpecialConfig) -> WittVector {
        let cfg = AlgebraConfig::Special(sc.clone());
        let n = sc.vars();
        let count = self.rng.gen_range(1usize..=2);
        let mut acc = WittVector::zero(n);
        for _ in 0..count {
            let p = self.rng.gen_range(0..n);
            let mut q = self.rng.gen_range(0..n - 1);
            if q >= p {
                q += 1;
            }
            let arg = AlgebraElement::from_term(self.monomial(&cfg), self.coefficient());
            let g = crate::special::generator(p, q, &arg, sc).expect("indices differ");
            acc = &acc + &g;
        }
        acc
    }

    /// A group element supported on the center block of a contact config.
    pub fn center_block_element(&mut self, cc: &ContactConfig) -> GroupElement {
        let mut coords = vec![BigInt::from(0); cc.rank()];
        for &i in cc.center_generators() {
            coords[i] = BigInt::from(self.rng.gen_range(-3i64..=3));
        }
        GroupElement(coords)
    }

    /// An element of the centerless core of a contact config: group parts
    /// in the kernel block, zero exponent at the center direction.
    pub fn core_element(&mut self, cc: &ContactConfig) -> AlgebraElement {
        let nterms = self.rng.gen_range(1usize..=3);
        let mut out = AlgebraElement::zero();
        for _ in 0..nterms {
            let mut coords = vec![BigInt::from(0); cc.rank()];
            for &i in cc.kernel_generators() {
                coords[i] = BigInt::from(self.rng.gen_range(-3i64..=3));
            }
            let mut exps: Vec<u32> = cc
                .kinds()
                .iter()
                .map(|&kind| match kind {
                    VariableKind::GroupOnly => 0,
                    VariableKind::Polynomial => self.rng.gen_range(0u32..=3),
                })
                .collect();
            exps[cc.center()] = 0;
            out.add_term(
                Monomial::new(GroupElement(coords), ExponentVector(exps)),
                self.coefficient(),
            );
        }
        out
    }
}
