//! Line-oriented `key=value` scenario files.
//!
//! ```text
//! # balanced h3 with the abelian instanton
//! preset = h3
//! param = t=1
//! connection = plus
//! instanton = abelian
//! checks = balanced, anomaly, eom
//! ```
//!
//! Several pairs may share a line (`preset=h3 checks=theorems`); `structure`
//! always takes the rest of its line.

use std::fmt;

use nilflux::anomaly::InstantonKind;
use nilflux::connections::ConnectionKind;
use nilflux::frames::{Params, PresetName};
use nilflux::notation::parse_scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Geometry {
    Preset(PresetName),
    /// Structure equations in `(de1, ..., de6)` notation with the standard `J`.
    Structure(String),
}

/// Checks in the order they run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Integrable,
    Balanced,
    Golden,
    Structural,
    Holonomy,
    Instanton,
    Anomaly,
    Theorems,
    Remarks,
    Eom,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Integrable,
        Check::Balanced,
        Check::Golden,
        Check::Structural,
        Check::Holonomy,
        Check::Instanton,
        Check::Anomaly,
        Check::Theorems,
        Check::Remarks,
        Check::Eom,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Check::Integrable => "integrable",
            Check::Balanced => "balanced",
            Check::Golden => "golden",
            Check::Structural => "structural",
            Check::Holonomy => "holonomy",
            Check::Instanton => "instanton",
            Check::Anomaly => "anomaly",
            Check::Theorems => "theorems",
            Check::Remarks => "remarks",
            Check::Eom => "eom",
        }
    }

    pub fn parse(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.as_str() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub geometry: Geometry,
    pub params: Params,
    pub connections: Vec<ConnectionKind>,
    pub instanton: Option<InstantonKind>,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "scenario line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for ScenarioError {}

/// Splits a line into `(key, value)` pairs, tolerating spaces around `=`.
fn pairs(line: &str) -> Result<Vec<(String, String)>, String> {
    let mut out = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        let eq = rest.find('=').ok_or_else(|| format!("expected key=value, found `{rest}`"))?;
        let key = rest[..eq].trim();
        if key.is_empty() || key.contains(char::is_whitespace) {
            return Err(format!("malformed key `{key}`"));
        }
        let after = rest[eq + 1..].trim_start();
        if key == "structure" {
            out.push((key.to_owned(), after.trim().to_owned()));
            break;
        }
        // `param` values contain their own `=`: take `name=value` as one token
        let value_end = if key == "param" {
            let inner = after.find('=').ok_or("param needs name=value")?;
            let tail = after[inner + 1..].trim_start();
            let skipped = after.len() - tail.len();
            skipped + tail.find(char::is_whitespace).unwrap_or(tail.len())
        } else {
            value_extent(after)
        };
        out.push((key.to_owned(), after[..value_end].trim().to_owned()));
        rest = after[value_end..].trim_start();
    }
    Ok(out)
}

/// Length of a value that may be a comma list with spaces after the commas.
fn value_extent(s: &str) -> usize {
    let mut end = 0;
    let bytes = s.as_bytes();
    while end < bytes.len() {
        if bytes[end].is_ascii_whitespace() {
            let next = s[end..].trim_start();
            let prev_comma = s[..end].trim_end().ends_with(',');
            if prev_comma || next.starts_with(',') {
                end = s.len() - next.len();
                continue;
            }
            break;
        }
        end += 1;
    }
    end
}

fn list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}

impl Scenario {
    pub fn parse(src: &str) -> Result<Scenario, ScenarioError> {
        let mut geometry = None;
        let mut params = Params::new();
        let mut connections = Vec::new();
        let mut instanton = None;
        let mut checks = Vec::new();
        for (n, raw) in src.lines().enumerate() {
            let line = n + 1;
            let err = |msg: String| ScenarioError { line, msg };
            let text = raw.split('#').next().unwrap_or("");
            for (key, value) in pairs(text).map_err(err)? {
                match key.as_str() {
                    "preset" | "structure" if geometry.is_some() => {
                        return Err(err("geometry given twice".into()))
                    }
                    "preset" => {
                        geometry = Some(Geometry::Preset(
                            PresetName::parse(&value).map_err(|e| err(e.to_string()))?,
                        ))
                    }
                    "structure" => {
                        nilflux::frames::parse_structure(&value).map_err(|e| err(e.to_string()))?;
                        geometry = Some(Geometry::Structure(value));
                    }
                    "param" => {
                        let (name, v) = value
                            .split_once('=')
                            .ok_or_else(|| err("param needs name=value".into()))?;
                        let s = parse_scalar(v.trim()).map_err(|e| err(format!("param {name}: {e}")))?;
                        params.set(name.trim(), s);
                    }
                    "connection" => {
                        for c in list(&value) {
                            let kind = ConnectionKind::parse(c)
                                .ok_or_else(|| err(format!("unknown connection `{c}`")))?;
                            if !connections.contains(&kind) {
                                connections.push(kind);
                            }
                        }
                    }
                    "instanton" => {
                        instanton = Some(
                            InstantonKind::parse(&value)
                                .ok_or_else(|| err(format!("unknown instanton `{value}`")))?,
                        )
                    }
                    "checks" => {
                        for c in list(&value) {
                            checks.push(
                                Check::parse(c).ok_or_else(|| err(format!("unknown check `{c}`")))?,
                            );
                        }
                    }
                    other => return Err(err(format!("unknown key `{other}`"))),
                }
            }
        }
        let geometry = geometry.ok_or(ScenarioError {
            line: 0,
            msg: "missing preset or structure".into(),
        })?;
        if connections.is_empty() {
            connections.push(ConnectionKind::Plus);
        }
        checks.sort();
        checks.dedup();
        Ok(Scenario {
            geometry,
            params,
            connections,
            instanton,
            checks,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nilflux::Scalar;

    #[test]
    fn single_line_scenario() {
        let s = Scenario::parse("preset=h3 checks=theorems").unwrap();
        assert_eq!(s.geometry, Geometry::Preset(PresetName::H3));
        assert_eq!(s.checks, vec![Check::Theorems]);
        assert_eq!(s.connections, vec![ConnectionKind::Plus]);
    }

    #[test]
    fn spaced_pairs_comments_and_lists() {
        let src = "# header\npreset = iwasawa  # trailing\nparam = t=3/2\nconnection = lc, plus\n\
                   checks = eom, balanced\ninstanton = abelian\n";
        let s = Scenario::parse(src).unwrap();
        assert_eq!(s.params.get("t"), Scalar::from_ratio(3, 2));
        assert_eq!(s.connections, vec![ConnectionKind::LeviCivita, ConnectionKind::Plus]);
        assert_eq!(s.checks, vec![Check::Balanced, Check::Eom]);
        assert_eq!(s.instanton, Some(InstantonKind::Abelian));
    }

    #[test]
    fn several_params_on_one_line() {
        let s = Scenario::parse("preset=h3 param=t=1 param=tp=1/2 checks=eom").unwrap();
        assert_eq!(s.params.get("tp"), Scalar::from_ratio(1, 2));
        assert_eq!(s.checks, vec![Check::Eom]);
    }

    #[test]
    fn structure_takes_the_rest_of_the_line() {
        let s = Scenario::parse("structure = (0, 0, 0, 0, 12, 13)\nchecks=balanced").unwrap();
        assert_eq!(s.geometry, Geometry::Structure("(0, 0, 0, 0, 12, 13)".into()));
    }

    #[test]
    fn diagnostics_name_the_line() {
        let e = Scenario::parse("preset=h3\nchecks=balanced, wobble").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("wobble"));
        let e = Scenario::parse("preset=nowhere").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(Scenario::parse("checks=balanced").is_err());
        assert!(Scenario::parse("preset=h3\nstructure=(0,0,0,0,0,0)").is_err());
        assert!(Scenario::parse("preset h3").is_err());
    }
}
