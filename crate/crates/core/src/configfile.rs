//! Loading construction data: the TOML config-file schema, the built-in
//! presets, and the window specification mini-syntax.
//!
//! Rationals travel as `"p/q"` strings so no floating point ever enters a
//! config. A config argument is either a file path or `preset:NAME`, where
//! `NAME` may carry parameters as in `preset:example-2?n1=0,n2=1,m=1`.

use crate::algebra::VariableKind;
use crate::config::AlgebraConfig;
use crate::contact::ContactConfig;
use crate::error::{Error, Result};
use crate::hamiltonian::HamiltonianConfig;
use crate::lattice::{GradingMap, GroupElement, SkewForm};
use crate::probe::Window;
use crate::special::SpecialConfig;
use crate::textform::parse_rational;
use crate::witt::WittConfig;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraType {
    Witt,
    Special,
    Hamiltonian,
    Contact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaSplit {
    pub gamma1: Vec<usize>,
    pub gamma2: Vec<usize>,
}

/// On-disk construction data. Which optional fields apply depends on the
/// algebra type; `build` checks everything structurally and the family
/// validators check the numbered conditions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ConfigFile {
    pub algebra_type: AlgebraType,
    pub k: usize,
    pub n: usize,
    pub kinds: Vec<VariableKind>,
    pub grading_maps: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skew_form: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigmas: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_n: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m1: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_split: Option<GammaSplit>,
}

impl ConfigFile {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::config(format!("bad config file: {e}")))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config files serialize")
    }

    fn parse_maps(&self) -> Result<Vec<GradingMap>> {
        if self.grading_maps.len() != self.n {
            return Err(Error::config(format!(
                "expected {} grading maps, found {}",
                self.n,
                self.grading_maps.len()
            )));
        }
        self.grading_maps
            .iter()
            .map(|row| {
                if row.len() != self.k {
                    return Err(Error::config(format!(
                        "grading map row has {} entries but k = {}",
                        row.len(),
                        self.k
                    )));
                }
                Ok(GradingMap(
                    row.iter()
                        .map(|s| parse_rational(s))
                        .collect::<Result<Vec<_>>>()?,
                ))
            })
            .collect()
    }

    fn parse_form(&self) -> Result<SkewForm> {
        match &self.skew_form {
            None => Ok(SkewForm::zero(self.k)),
            Some(rows) => {
                if rows.len() != self.k || rows.iter().any(|r| r.len() != self.k) {
                    return Err(Error::config("skew form must be a k-by-k matrix"));
                }
                let gram = rows
                    .iter()
                    .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                SkewForm::new(gram)
            }
        }
    }

    fn group_element(&self, coords: &Option<Vec<i64>>, what: &str) -> Result<GroupElement> {
        match coords {
            None => Ok(GroupElement::zero(self.k)),
            Some(v) => {
                if v.len() != self.k {
                    return Err(Error::config(format!(
                        "{what} has {} coordinates but k = {}",
                        v.len(),
                        self.k
                    )));
                }
                Ok(GroupElement::from_i64(v))
            }
        }
    }

    /// Builds the typed configuration, checking structure only.
    pub fn build(&self) -> Result<AlgebraConfig> {
        if self.kinds.len() != self.n {
            return Err(Error::config(format!(
                "expected {} kinds, found {}",
                self.n,
                self.kinds.len()
            )));
        }
        let maps = self.parse_maps()?;
        match self.algebra_type {
            AlgebraType::Witt => Ok(AlgebraConfig::Witt(WittConfig::new(
                self.k,
                self.kinds.clone(),
                maps,
            )?)),
            AlgebraType::Special => {
                if self.k != self.n {
                    return Err(Error::config(
                        "special-type configs need k = n (one group factor per direction)",
                    ));
                }
                let deltas = maps
                    .iter()
                    .enumerate()
                    .map(|(p, m)| {
                        if m.is_zero() {
                            Ok(false)
                        } else if *m == GradingMap::coordinate(self.k, p) {
                            Ok(true)
                        } else {
                            Err(Error::config(format!(
                                "special grading map {} must be the coordinate projection or zero",
                                p + 1
                            )))
                        }
                    })
                    .collect::<Result<Vec<bool>>>()?;
                Ok(AlgebraConfig::Special(SpecialConfig::new(
                    self.kinds.clone(),
                    deltas,
                    self.group_element(&self.rho, "rho")?,
                    self.group_element(&self.sigma, "sigma")?,
                )?))
            }
            AlgebraType::Hamiltonian => {
                if self.n % 2 != 0 {
                    return Err(Error::config("hamiltonian-type configs need an even n"));
                }
                let pairs = self.n / 2;
                let m1 = self.m1.unwrap_or(0);
                let shift_rows = self.sigmas.clone().unwrap_or_default();
                if shift_rows.len() != m1 {
                    return Err(Error::config(format!(
                        "expected {m1} sigma rows for m1 = {m1}, found {}",
                        shift_rows.len()
                    )));
                }
                let shifts = shift_rows
                    .iter()
                    .map(|row| self.group_element(&Some(row.clone()), "sigma row"))
                    .collect::<Result<Vec<_>>>()?;
                Ok(AlgebraConfig::Hamiltonian(HamiltonianConfig::new(
                    self.k,
                    pairs,
                    m1,
                    self.kinds.clone(),
                    maps,
                    self.parse_form()?,
                    shifts,
                )?))
            }
            AlgebraType::Contact => {
                if self.n % 2 == 0 || self.n < 3 {
                    return Err(Error::config(
                        "contact-type configs need an odd n of at least 3",
                    ));
                }
                let pairs = (self.n - 1) / 2;
                let split = self.gamma_split.clone().ok_or_else(|| {
                    Error::config("contact-type configs need a gammaSplit table")
                })?;
                let shift_rows = self.sigmas.clone().unwrap_or_else(|| vec![vec![0; self.k]; pairs]);
                if shift_rows.len() != pairs {
                    return Err(Error::config(format!(
                        "expected {pairs} sigma rows (one per pair), found {}",
                        shift_rows.len()
                    )));
                }
                let shifts = shift_rows
                    .iter()
                    .map(|row| -> Result<Option<GroupElement>> {
                        let g = self.group_element(&Some(row.clone()), "sigma row")?;
                        Ok(if g.is_zero() { None } else { Some(g) })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(AlgebraConfig::Contact(ContactConfig::new(
                    self.k,
                    pairs,
                    self.kinds.clone(),
                    maps,
                    split.gamma1,
                    split.gamma2,
                    shifts,
                    self.group_element(&self.sigma_n, "sigmaN")?,
                )?))
            }
        }
    }
}

/// Resolves a config argument: `preset:NAME` or a file path.
pub fn load_config(spec: &str) -> Result<ConfigFile> {
    if let Some(name) = spec.strip_prefix("preset:") {
        return preset(name);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::config(format!("cannot read {spec}: {e}")))?;
    ConfigFile::from_toml(&text)
}

fn rational_row(values: &[i64]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

fn coordinate_rows(n: usize, k: usize, graded: usize) -> Vec<Vec<String>> {
    // first `graded` directions get the matching coordinate projection,
    // the rest get the zero map
    (0..n)
        .map(|p| {
            let mut row = vec![0i64; k];
            if p < graded && p < k {
                row[p] = 1;
            }
            rational_row(&row)
        })
        .collect()
}

struct PresetParams {
    entries: Vec<(String, i64)>,
}

impl PresetParams {
    fn parse(s: &str) -> Result<(String, PresetParams)> {
        match s.split_once('?') {
            None => Ok((
                s.to_string(),
                PresetParams {
                    entries: Vec::new(),
                },
            )),
            Some((name, params)) => {
                let mut entries = Vec::new();
                for piece in params.split(',') {
                    if piece.is_empty() {
                        continue;
                    }
                    let (key, value) = piece.split_once('=').ok_or_else(|| {
                        Error::argument(format!("bad preset parameter {piece:?}"))
                    })?;
                    let value: i64 = value.parse().map_err(|_| {
                        Error::argument(format!("bad preset parameter value {value:?}"))
                    })?;
                    entries.push((key.to_string(), value));
                }
                Ok((name.to_string(), PresetParams { entries }))
            }
        }
    }

    fn get(&self, key: &str, default: i64) -> i64 {
        self.entries
            .iter()
            .rev()
            .find(|(k, _)| k == key)
            .map(|(_, v)| *v)
            .unwrap_or(default)
    }
}

/// Builds a named preset. See the guide for the catalogue.
pub fn preset(spec: &str) -> Result<ConfigFile> {
    let (name, params) = PresetParams::parse(spec)?;
    match name.as_str() {
        // group-times-polynomial construction over Z^m with coordinate maps
        "example-2" => {
            let n1 = params.get("n1", 1);
            let n2 = params.get("n2", 1);
            let m = params.get("m", 2);
            if n1 < 0 || n2 < 0 || n1 + n2 < 1 {
                return Err(Error::argument("example-2 needs n1 + n2 >= 1"));
            }
            if m < n1 || m > n1 + n2 {
                return Err(Error::argument("example-2 needs n1 <= m <= n1 + n2"));
            }
            let (n1, n2, m) = (n1 as usize, n2 as usize, m as usize);
            let n = n1 + n2;
            let mut kinds = vec![VariableKind::GroupOnly; n1];
            kinds.extend(vec![VariableKind::Polynomial; n2]);
            Ok(ConfigFile {
                algebra_type: AlgebraType::Witt,
                k: m,
                n,
                kinds,
                grading_maps: coordinate_rows(n, m, m),
                skew_form: None,
                rho: None,
                sigma: None,
                sigmas: None,
                sigma_n: None,
                m1: None,
                gamma_split: None,
            })
        }
        "special-group" => Ok(special_preset(
            vec![VariableKind::GroupOnly, VariableKind::GroupOnly],
            &[true, true],
            vec![1, 0],
            vec![0, 1],
        )),
        "special-mixed" => Ok(special_preset(
            vec![VariableKind::Polynomial, VariableKind::Polynomial],
            &[true, false],
            vec![2, 0],
            vec![1, 0],
        )),
        "special-rank3" => Ok(special_preset(
            vec![
                VariableKind::GroupOnly,
                VariableKind::Polynomial,
                VariableKind::Polynomial,
            ],
            &[true, true, false],
            vec![0, 1, 0],
            vec![1, 1, 0],
        )),
        // one shifted pair of group directions with coordinate maps
        "example-4" => Ok(ConfigFile {
            algebra_type: AlgebraType::Hamiltonian,
            k: 2,
            n: 2,
            kinds: vec![VariableKind::GroupOnly, VariableKind::GroupOnly],
            grading_maps: coordinate_rows(2, 2, 2),
            skew_form: None,
            rho: None,
            sigma: None,
            sigmas: Some(vec![vec![1, 1]]),
            sigma_n: None,
            m1: Some(1),
            gamma_split: None,
        }),
        // ungraded polynomial pair over a symplectic group ring
        "example-4-symplectic" => Ok(ConfigFile {
            algebra_type: AlgebraType::Hamiltonian,
            k: 2,
            n: 2,
            kinds: vec![VariableKind::Polynomial, VariableKind::Polynomial],
            grading_maps: coordinate_rows(2, 2, 0),
            skew_form: Some(vec![
                vec!["0".into(), "1".into()],
                vec!["-1".into(), "0".into()],
            ]),
            rho: None,
            sigma: None,
            sigmas: Some(vec![]),
            sigma_n: None,
            m1: Some(0),
            gamma_split: None,
        }),
        // a polynomial direction paired with a graded group direction
        "example-4-mixed" => Ok(ConfigFile {
            algebra_type: AlgebraType::Hamiltonian,
            k: 1,
            n: 2,
            kinds: vec![VariableKind::Polynomial, VariableKind::GroupOnly],
            grading_maps: vec![rational_row(&[0]), rational_row(&[1])],
            skew_form: None,
            rho: None,
            sigma: None,
            sigmas: Some(vec![]),
            sigma_n: None,
            m1: Some(0),
            gamma_split: None,
        }),
        // no derivation directions at all: the pure form bracket
        "example-4-block" => Ok(ConfigFile {
            algebra_type: AlgebraType::Hamiltonian,
            k: 2,
            n: 0,
            kinds: vec![],
            grading_maps: vec![],
            skew_form: Some(vec![
                vec!["0".into(), "1".into()],
                vec!["-1".into(), "0".into()],
            ]),
            rho: None,
            sigma: None,
            sigmas: Some(vec![]),
            sigma_n: None,
            m1: Some(0),
            gamma_split: None,
        }),
        "example-5" => Ok(example5_preset(vec![
            VariableKind::Polynomial,
            VariableKind::Polynomial,
            VariableKind::Polynomial,
        ])),
        "example-5-group" => Ok(example5_preset(vec![
            VariableKind::GroupOnly,
            VariableKind::GroupOnly,
            VariableKind::GroupOnly,
        ])),
        // the classical polynomial contact algebra in three variables
        "example-5-classical" => Ok(ConfigFile {
            algebra_type: AlgebraType::Contact,
            k: 0,
            n: 3,
            kinds: vec![VariableKind::Polynomial; 3],
            grading_maps: vec![vec![], vec![], vec![]],
            skew_form: None,
            rho: None,
            sigma: None,
            sigmas: Some(vec![vec![]]),
            sigma_n: Some(vec![]),
            m1: None,
            gamma_split: Some(GammaSplit {
                gamma1: vec![],
                gamma2: vec![],
            }),
        }),
        other => Err(Error::argument(format!("unknown preset {other:?}"))),
    }
}

fn special_preset(
    kinds: Vec<VariableKind>,
    deltas: &[bool],
    rho: Vec<i64>,
    sigma: Vec<i64>,
) -> ConfigFile {
    let n = kinds.len();
    let grading_maps = (0..n)
        .map(|p| {
            let mut row = vec![0i64; n];
            if deltas[p] {
                row[p] = 1;
            }
            rational_row(&row)
        })
        .collect();
    ConfigFile {
        algebra_type: AlgebraType::Special,
        k: n,
        n,
        kinds,
        grading_maps,
        skew_form: None,
        rho: Some(rho),
        sigma: Some(sigma),
        sigmas: None,
        sigma_n: None,
        m1: None,
        gamma_split: None,
    }
}

fn example5_preset(kinds: Vec<VariableKind>) -> ConfigFile {
    ConfigFile {
        algebra_type: AlgebraType::Contact,
        k: 3,
        n: 3,
        kinds,
        grading_maps: coordinate_rows(3, 3, 3),
        skew_form: None,
        rho: None,
        sigma: None,
        sigmas: Some(vec![vec![-1, -1, 0]]),
        sigma_n: Some(vec![0, 0, 1]),
        m1: None,
        gamma_split: Some(GammaSplit {
            gamma1: vec![0, 1],
            gamma2: vec![2],
        }),
    }
}

/// All preset names, for help output and coverage tests.
pub const PRESET_NAMES: [&str; 11] = [
    "example-2",
    "special-group",
    "special-mixed",
    "special-rank3",
    "example-4",
    "example-4-symplectic",
    "example-4-mixed",
    "example-4-block",
    "example-5",
    "example-5-group",
    "example-5-classical",
];

/// Parses a window specification: `alpha=LO..HI[,LO..HI...];deg=N`.
///
/// A single range broadcasts to every group coordinate; `deg` defaults to
/// zero; for rank-zero groups the `alpha` part is omitted.
pub fn parse_window(spec: &str, rank: usize) -> Result<Window> {
    let mut bounds: Option<Vec<(i64, i64)>> = None;
    let mut degree = 0u32;
    for piece in spec.split(';') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (key, value) = piece
            .split_once('=')
            .ok_or_else(|| Error::argument(format!("bad window component {piece:?}")))?;
        match key.trim() {
            "alpha" => {
                let mut ranges = Vec::new();
                for r in value.split(',') {
                    let (lo, hi) = r
                        .split_once("..")
                        .ok_or_else(|| Error::argument(format!("bad range {r:?}")))?;
                    let lo: i64 = lo
                        .trim()
                        .parse()
                        .map_err(|_| Error::argument(format!("bad bound {lo:?}")))?;
                    let hi: i64 = hi
                        .trim()
                        .parse()
                        .map_err(|_| Error::argument(format!("bad bound {hi:?}")))?;
                    ranges.push((lo, hi));
                }
                if ranges.len() == 1 && rank > 1 {
                    ranges = vec![ranges[0]; rank];
                }
                bounds = Some(ranges);
            }
            "deg" => {
                degree = value
                    .trim()
                    .parse()
                    .map_err(|_| Error::argument(format!("bad degree {value:?}")))?;
            }
            other => {
                return Err(Error::argument(format!(
                    "unknown window component {other:?}"
                )))
            }
        }
    }
    let bounds = bounds.unwrap_or_default();
    if bounds.len() != rank {
        return Err(Error::argument(format!(
            "window gives {} coordinate ranges but the group rank is {rank}",
            bounds.len()
        )));
    }
    Window::new(bounds, degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_build_and_validate() {
        for name in PRESET_NAMES {
            let file = preset(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            let cfg = file.build().unwrap_or_else(|e| panic!("{name}: {e}"));
            let violations = cfg.validate();
            assert!(
                violations.is_empty(),
                "{name} should be admissible, got {violations:?}"
            );
        }
    }

    #[test]
    fn preset_parameters_apply() {
        let file = preset("example-2?n1=0,n2=1,m=1").unwrap();
        assert_eq!(file.k, 1);
        assert_eq!(file.n, 1);
        assert_eq!(file.kinds, vec![VariableKind::Polynomial]);
        let cfg = file.build().unwrap();
        assert!(cfg.validate().is_empty());

        assert!(preset("example-2?m=5").is_err());
        assert!(preset("nonsense").is_err());
    }

    #[test]
    fn toml_round_trip() {
        let file = preset("example-5").unwrap();
        let text = file.to_toml();
        let back = ConfigFile::from_toml(&text).unwrap();
        assert_eq!(file, back);
    }

    #[test]
    fn window_spec_parses_and_broadcasts() {
        let w = parse_window("alpha=-2..2;deg=1", 2).unwrap();
        assert_eq!(w.rank(), 2);
        assert_eq!(w.max_degree(), 1);
        let w = parse_window("alpha=-1..1,0..3", 2).unwrap();
        assert_eq!(w.rank(), 2);
        assert_eq!(w.max_degree(), 0);
        let w = parse_window("deg=2", 0).unwrap();
        assert_eq!(w.rank(), 0);
        assert!(parse_window("alpha=-1..1", 2).is_ok());
        assert!(parse_window("alpha=2..-2", 1).is_err());
        assert!(parse_window("deg=1", 1).is_err());
        assert!(parse_window("alpha=1..2;bad=3", 1).is_err());
    }

    #[test]
    fn zero_sigma_rows_mean_unshifted_contact_pairs() {
        let mut file = preset("example-5").unwrap();
        file.sigmas = Some(vec![vec![0, 0, 0]]);
        let cfg = file.build().unwrap();
        // a graded pair without a shift is inadmissible
        let conds: Vec<&str> = cfg.validate().iter().map(|v| v.condition).collect();
        assert!(conds.contains(&"(5.6)"));
    }
}
