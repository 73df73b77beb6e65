//! Text grammar for elements, matching the canonical printing format:
//!
//! ```text
//! element := term (("+"|"-") term)* ;
//! term    := [coeff "*"] atom ;
//! coeff   := ["("] integer ["/" positive-integer] [")"] ;
//! atom    := "x[(" intlist ");(" natlist ")]" ["d" index]
//!          | "D[" index "," index "](" element ")"
//!          | "0" ;
//! ```
//!
//! `dp` marks a vector-field component; `D[p,q](...)` builds a Special-type
//! generator. Indices are one-based. Whitespace is insignificant. Parsing a
//! canonical print form reproduces the printed element.

use crate::algebra::{AlgebraElement, ExponentVector, Monomial, VariableKind};
use crate::config::{AlgebraConfig, Element};
use crate::error::{Error, Result};
use crate::lattice::GroupElement;
use crate::special;
use crate::witt::WittVector;
use num::{BigInt, BigRational, One, Zero};
use std::str::FromStr;

/// Parses a rational written as `n` or `n/d` with `d > 0`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let err = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("{msg}: {text:?}"),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| err("bad numerator"))?;
    let d = BigInt::from_str(den).map_err(|_| err("bad denominator"))?;
    if d <= BigInt::zero() {
        return Err(err("denominator must be positive"));
    }
    Ok(BigRational::new(n, d))
}

/// Parses an element against a configuration. The result is a vector field
/// exactly when the text uses `d`/`D` markers; a bare `0` adapts to the
/// family.
pub fn parse_element(text: &str, cfg: &AlgebraConfig) -> Result<Element> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        cfg,
    };
    let e = p.element()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e.normalized_for(cfg))
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    cfg: &'a AlgebraConfig,
}

enum Atom {
    Scalar(AlgebraElement),
    Vector(WittVector),
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(format!("expected {:?}", b as char)))
        }
    }

    fn element(&mut self) -> Result<Element> {
        let mut scalars: Option<AlgebraElement> = None;
        let mut vectors: Option<WittVector> = None;
        let mut first = true;
        loop {
            let sign = if first {
                // an optional leading minus on the first term
                if self.eat(b'-') {
                    -1i64
                } else {
                    1
                }
            } else if self.eat(b'+') {
                1
            } else if self.eat(b'-') {
                -1
            } else {
                break;
            };
            first = false;
            let (coeff, atom) = self.term()?;
            let coeff = if sign < 0 { -coeff } else { coeff };
            match atom {
                Atom::Scalar(u) => {
                    if vectors.is_some() && !u.is_zero() {
                        return Err(self.err("cannot mix scalar and vector-field terms"));
                    }
                    let scaled = u.scaled(&coeff);
                    scalars = Some(match scalars {
                        None => scaled,
                        Some(acc) => &acc + &scaled,
                    });
                }
                Atom::Vector(w) => {
                    if scalars.as_ref().map(|s| !s.is_zero()).unwrap_or(false) {
                        return Err(self.err("cannot mix scalar and vector-field terms"));
                    }
                    let scaled = w.scaled_by(&AlgebraElement::from_term(
                        Monomial::one(self.cfg.rank(), self.cfg.vars()),
                        coeff,
                    ));
                    vectors = Some(match vectors {
                        None => scaled,
                        Some(acc) => &acc + &scaled,
                    });
                }
            }
        }
        if first {
            return Err(self.err("expected an element"));
        }
        match (vectors, scalars) {
            (Some(w), _) => Ok(Element::Vector(w)),
            (None, Some(u)) => Ok(Element::Scalar(u)),
            (None, None) => unreachable!("at least one term was parsed"),
        }
    }

    fn term(&mut self) -> Result<(BigRational, Atom)> {
        let coeff = match self.peek() {
            Some(b'(') | Some(b'-') => Some(self.coeff()?),
            Some(c) if c.is_ascii_digit() => {
                // lone "0" is the zero atom, not a coefficient
                if c == b'0' && !self.next_is_coefficient_like() {
                    None
                } else {
                    Some(self.coeff()?)
                }
            }
            _ => None,
        };
        let coeff = match coeff {
            Some(c) => {
                self.expect(b'*')?;
                c
            }
            None => BigRational::one(),
        };
        Ok((coeff, self.atom()?))
    }

    /// Distinguishes a leading `0` atom from a numeric coefficient by
    /// looking for more digits, a slash, or a `*`.
    fn next_is_coefficient_like(&mut self) -> bool {
        self.skip_ws();
        let mut i = self.pos;
        while i < self.bytes.len() && self.bytes[i].is_ascii_digit() {
            i += 1;
        }
        while i < self.bytes.len() && self.bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        matches!(self.bytes.get(i), Some(b'*') | Some(b'/'))
    }

    fn coeff(&mut self) -> Result<BigRational> {
        let wrapped = self.eat(b'(');
        let n = self.integer()?;
        let r = if self.eat(b'/') {
            let d = self.integer()?;
            if d <= BigInt::zero() {
                return Err(self.err("denominator must be positive"));
            }
            BigRational::new(n, d)
        } else {
            BigRational::from_integer(n)
        };
        if wrapped {
            self.expect(b')')?;
        }
        Ok(r)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .map(|b| b.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(BigInt::from_str(s).expect("validated digits"))
    }

    fn usize_index(&mut self) -> Result<usize> {
        let pos = self.pos;
        let n = self.integer()?;
        let n: usize = n
            .try_into()
            .map_err(|_| Error::Parse {
                pos,
                msg: "index must be positive".into(),
            })?;
        if n == 0 {
            return Err(Error::Parse {
                pos,
                msg: "indices are one-based".into(),
            });
        }
        Ok(n)
    }

    fn atom(&mut self) -> Result<Atom> {
        match self.peek() {
            Some(b'x') => self.symbol_atom(),
            Some(b'D') => self.generator_atom(),
            Some(b'0') => {
                self.pos += 1;
                Ok(Atom::Scalar(AlgebraElement::zero()))
            }
            _ => Err(self.err("expected 'x[', 'D[' or '0'")),
        }
    }

    fn symbol_atom(&mut self) -> Result<Atom> {
        self.expect(b'x')?;
        self.expect(b'[')?;
        self.expect(b'(')?;
        let coords = self.int_list()?;
        self.expect(b')')?;
        self.expect(b';')?;
        self.expect(b'(')?;
        let exps_pos = self.pos;
        let exps = self.nat_list()?;
        self.expect(b')')?;
        self.expect(b']')?;
        if coords.len() != self.cfg.rank() {
            return Err(self.err(format!(
                "symbol has {} group coordinates but the config rank is {}",
                coords.len(),
                self.cfg.rank()
            )));
        }
        if exps.len() != self.cfg.vars() {
            return Err(self.err(format!(
                "symbol has {} exponents but the config has {} directions",
                exps.len(),
                self.cfg.vars()
            )));
        }
        for (p, kind) in self.cfg.kinds().iter().enumerate() {
            if *kind == VariableKind::GroupOnly && exps[p] != 0 {
                return Err(Error::Parse {
                    pos: exps_pos,
                    msg: format!("nonzero exponent at group-only direction {}", p + 1),
                });
            }
        }
        let group = GroupElement(coords);
        if let AlgebraConfig::Special(sc) = self.cfg {
            if !sc.group_element_allowed(&group) {
                return Err(self.err(
                    "nonzero group coordinate at a direction with a trivial factor",
                ));
            }
        }
        let mono = Monomial::new(group, ExponentVector(exps));
        if self.peek() == Some(b'd') {
            self.pos += 1;
            if !self.cfg.uses_vector_fields() {
                return Err(self.err("component markers need a witt- or special-type config"));
            }
            let pos = self.pos;
            let idx = self.usize_index()?;
            if idx > self.cfg.vars() {
                return Err(Error::Parse {
                    pos,
                    msg: format!("component {idx} exceeds the direction count"),
                });
            }
            Ok(Atom::Vector(WittVector::from_term(
                self.cfg.vars(),
                idx - 1,
                AlgebraElement::monomial(mono),
            )))
        } else {
            Ok(Atom::Scalar(AlgebraElement::monomial(mono)))
        }
    }

    fn generator_atom(&mut self) -> Result<Atom> {
        self.expect(b'D')?;
        let AlgebraConfig::Special(sc) = self.cfg else {
            return Err(self.err("generators need a special-type config"));
        };
        self.expect(b'[')?;
        let pos = self.pos;
        let p = self.usize_index()?;
        self.expect(b',')?;
        let q = self.usize_index()?;
        self.expect(b']')?;
        if p > sc.vars() || q > sc.vars() || p == q {
            return Err(Error::Parse {
                pos,
                msg: "generator indices must be distinct and in range".into(),
            });
        }
        self.expect(b'(')?;
        let inner = self.element()?;
        self.expect(b')')?;
        let Element::Scalar(arg) = inner else {
            return Err(self.err("generator arguments must be scalar elements"));
        };
        Ok(Atom::Vector(special::generator(p - 1, q - 1, &arg, sc)?))
    }

    fn int_list(&mut self) -> Result<Vec<BigInt>> {
        let mut out = Vec::new();
        if self.peek() == Some(b')') {
            return Ok(out);
        }
        loop {
            out.push(self.integer()?);
            if !self.eat(b',') {
                break;
            }
        }
        Ok(out)
    }

    fn nat_list(&mut self) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        if self.peek() == Some(b')') {
            return Ok(out);
        }
        loop {
            let pos = self.pos;
            let n = self.integer()?;
            let n: u32 = n.try_into().map_err(|_| Error::Parse {
                pos,
                msg: "exponents must be small naturals".into(),
            })?;
            out.push(n);
            if !self.eat(b',') {
                break;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::GradingMap;
    use crate::witt::WittConfig;

    fn witt_cfg() -> AlgebraConfig {
        AlgebraConfig::Witt(
            WittConfig::new(
                2,
                vec![VariableKind::GroupOnly, VariableKind::Polynomial],
                vec![GradingMap::from_i64(&[1, 0]), GradingMap::from_i64(&[0, 1])],
            )
            .unwrap(),
        )
    }

    fn special_cfg() -> AlgebraConfig {
        AlgebraConfig::Special(
            crate::special::SpecialConfig::new(
                vec![VariableKind::GroupOnly, VariableKind::GroupOnly],
                vec![true, true],
                GroupElement::from_i64(&[0, 0]),
                GroupElement::from_i64(&[0, 0]),
            )
            .unwrap(),
        )
    }

    #[test]
    fn parses_the_identity_symbol() {
        let cfg = witt_cfg();
        let e = parse_element("x[(0,0);(0,0)]", &cfg).unwrap();
        assert_eq!(e, Element::Scalar(AlgebraElement::one(2, 2)));
    }

    #[test]
    fn parses_rational_combinations() {
        let cfg = witt_cfg();
        let e = parse_element("3/2*x[(1,0);(0,2)] - x[(0,0);(0,0)]", &cfg).unwrap();
        let Element::Scalar(u) = e else { panic!("scalar expected") };
        assert_eq!(u.num_terms(), 2);
        assert_eq!(
            u.coeff(&Monomial::new(
                GroupElement::from_i64(&[1, 0]),
                ExponentVector::from_u32(&[0, 2])
            )),
            BigRational::new(BigInt::from(3), BigInt::from(2))
        );
        assert_eq!(
            u.coeff(&Monomial::one(2, 2)),
            BigRational::from_integer(BigInt::from(-1))
        );
    }

    #[test]
    fn parses_vector_components_and_round_trips() {
        let cfg = witt_cfg();
        let printed = "(1)*x[(1,0);(0,0)]d1 + (-1)*x[(1,0);(0,1)]d2";
        let e = parse_element(printed, &cfg).unwrap();
        assert_eq!(e.to_string(), printed);
        let again = parse_element(&e.to_string(), &cfg).unwrap();
        assert_eq!(e, again);
    }

    #[test]
    fn parses_generators_against_special_configs() {
        let cfg = special_cfg();
        let e = parse_element("D[1,2](x[(0,1);(0,0)])", &cfg).unwrap();
        let Element::Vector(w) = &e else { panic!("vector expected") };
        // with zero twist and shifts this is x^{(0,1)} in component 1
        assert_eq!(
            *w,
            WittVector::from_term(
                2,
                0,
                AlgebraElement::monomial(Monomial::group_only(GroupElement::from_i64(&[0, 1]), 2))
            )
        );
    }

    #[test]
    fn zero_parses_and_round_trips() {
        let cfg = witt_cfg();
        let e = parse_element("0", &cfg).unwrap();
        assert!(e.is_zero());
        assert_eq!(e.to_string(), "0");
        // zero adapts to the vector-field family
        assert!(matches!(e, Element::Vector(_)));
    }

    #[test]
    fn errors_carry_positions() {
        let cfg = witt_cfg();
        let err = parse_element("x[(1,0);(0,0)]d9", &cfg).unwrap_err();
        match err {
            Error::Parse { pos, .. } => assert!(pos > 0),
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(parse_element("x[(1);(0,0)]", &cfg).is_err());
        assert!(parse_element("x[(1,0);(1,0)]", &cfg).is_err()); // group-only exponent
        assert!(parse_element("x[(1,0);(0,0)] + y", &cfg).is_err());
        assert!(parse_element("D[1,2](x[(0,0);(0,0)])", &cfg).is_err()); // not special
        assert!(parse_element("x[(1,0);(0,0)]d1 + x[(0,0);(0,0)]", &cfg).is_err());
    }

    #[test]
    fn rationals_parse_standalone() {
        assert_eq!(
            parse_rational("-3/2").unwrap(),
            BigRational::new(BigInt::from(-3), BigInt::from(2))
        );
        assert_eq!(
            parse_rational("5").unwrap(),
            BigRational::from_integer(BigInt::from(5))
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
