//! Umbrella over the four family configurations, the violation type shared
//! by all validators, and the element type shared by the parser, the
//! command-line surface, and the probe.

use crate::algebra::{AlgebraElement, VariableKind};
use crate::contact::ContactConfig;
use crate::error::{Error, Result};
use crate::hamiltonian::HamiltonianConfig;
use crate::lattice::GradingMap;
use crate::special::SpecialConfig;
use crate::witt::{self, WittConfig, WittVector};
use std::fmt;

/// A failed construction condition, identified by its condition number.
///
/// Validators return violations as data so that a caller can report every
/// failed condition at once; they never abort on the first one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: &'static str,
    pub detail: String,
}

impl Violation {
    pub fn new(condition: &'static str, detail: String) -> Self {
        Violation { condition, detail }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "violated {}: {}", self.condition, self.detail)
    }
}

/// The full construction data of any of the four families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraConfig {
    Witt(WittConfig),
    Special(SpecialConfig),
    Hamiltonian(HamiltonianConfig),
    Contact(ContactConfig),
}

impl AlgebraConfig {
    pub fn family(&self) -> &'static str {
        match self {
            AlgebraConfig::Witt(_) => "witt",
            AlgebraConfig::Special(_) => "special",
            AlgebraConfig::Hamiltonian(_) => "hamiltonian",
            AlgebraConfig::Contact(_) => "contact",
        }
    }

    /// Rank of the exponent group.
    pub fn rank(&self) -> usize {
        match self {
            AlgebraConfig::Witt(c) => c.rank(),
            AlgebraConfig::Special(c) => c.rank(),
            AlgebraConfig::Hamiltonian(c) => c.rank(),
            AlgebraConfig::Contact(c) => c.rank(),
        }
    }

    /// Number of derivation directions.
    pub fn vars(&self) -> usize {
        match self {
            AlgebraConfig::Witt(c) => c.vars(),
            AlgebraConfig::Special(c) => c.vars(),
            AlgebraConfig::Hamiltonian(c) => c.vars(),
            AlgebraConfig::Contact(c) => c.vars(),
        }
    }

    pub fn kinds(&self) -> &[VariableKind] {
        match self {
            AlgebraConfig::Witt(c) => c.kinds(),
            AlgebraConfig::Special(c) => c.base().kinds(),
            AlgebraConfig::Hamiltonian(c) => c.kinds(),
            AlgebraConfig::Contact(c) => c.kinds(),
        }
    }

    pub fn maps(&self) -> &[GradingMap] {
        match self {
            AlgebraConfig::Witt(c) => c.maps(),
            AlgebraConfig::Special(c) => c.base().maps(),
            AlgebraConfig::Hamiltonian(c) => c.maps(),
            AlgebraConfig::Contact(c) => c.maps(),
        }
    }

    /// Runs this family's validator.
    pub fn validate(&self) -> Vec<Violation> {
        match self {
            AlgebraConfig::Witt(c) => witt::validate(c),
            AlgebraConfig::Special(c) => crate::special::validate(c),
            AlgebraConfig::Hamiltonian(c) => crate::hamiltonian::validate(c),
            AlgebraConfig::Contact(c) => crate::contact::validate(c),
        }
    }

    /// Whether elements of this family are vector fields rather than
    /// algebra elements.
    pub fn uses_vector_fields(&self) -> bool {
        matches!(self, AlgebraConfig::Witt(_) | AlgebraConfig::Special(_))
    }
}

/// An element of whichever algebra a configuration describes: a vector
/// field for the Witt and Special families, an algebra element for the
/// Hamiltonian and Contact families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Scalar(AlgebraElement),
    Vector(WittVector),
}

impl Element {
    pub fn is_zero(&self) -> bool {
        match self {
            Element::Scalar(u) => u.is_zero(),
            Element::Vector(w) => w.is_zero(),
        }
    }

    /// Coerces a zero of either shape into the family's natural shape.
    pub fn normalized_for(self, cfg: &AlgebraConfig) -> Element {
        match (&self, cfg.uses_vector_fields()) {
            (Element::Scalar(u), true) if u.is_zero() => {
                Element::Vector(WittVector::zero(cfg.vars()))
            }
            (Element::Vector(w), false) if w.is_zero() => Element::Scalar(AlgebraElement::zero()),
            _ => self,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Scalar(u) => write!(f, "{u}"),
            Element::Vector(w) => write!(f, "{w}"),
        }
    }
}

/// Bracket of two elements in the algebra a configuration describes.
pub fn bracket_elements(a: &Element, b: &Element, cfg: &AlgebraConfig) -> Result<Element> {
    let a = a.clone().normalized_for(cfg);
    let b = b.clone().normalized_for(cfg);
    match cfg {
        AlgebraConfig::Witt(c) => match (&a, &b) {
            (Element::Vector(x), Element::Vector(y)) => {
                Ok(Element::Vector(witt::bracket(x, y, c)))
            }
            _ => Err(Error::argument(
                "witt-type brackets need vector field operands",
            )),
        },
        AlgebraConfig::Special(c) => match (&a, &b) {
            (Element::Vector(x), Element::Vector(y)) => {
                Ok(Element::Vector(crate::special::bracket(x, y, c)))
            }
            _ => Err(Error::argument(
                "special-type brackets need vector field operands",
            )),
        },
        AlgebraConfig::Hamiltonian(c) => match (&a, &b) {
            (Element::Scalar(x), Element::Scalar(y)) => {
                Ok(Element::Scalar(crate::hamiltonian::bracket(x, y, c)))
            }
            _ => Err(Error::argument(
                "hamiltonian-type brackets need algebra elements",
            )),
        },
        AlgebraConfig::Contact(c) => match (&a, &b) {
            (Element::Scalar(x), Element::Scalar(y)) => {
                Ok(Element::Scalar(crate::contact::bracket(x, y, c)))
            }
            _ => Err(Error::argument(
                "contact-type brackets need algebra elements",
            )),
        },
    }
}
