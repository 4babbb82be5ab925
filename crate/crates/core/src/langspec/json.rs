//! JSON form of language specs.

use serde::{Deserialize, Serialize};

use super::{
    DfaSpec, DigitRestriction, Direction, LanguageKind, LanguageSpec, LeadingZeroPolicy, PeriodicBlocks,
    PowerAvoidance,
};
use crate::error::{Error, Result};
use crate::numeration::{format_block, parse_block};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum Kind {
    DigitRestriction,
    PeriodicBlocks,
    PowerAvoidance,
    EvilFactor,
    Dfa,
}

#[derive(Debug, Serialize, Deserialize)]
struct ResidueBlocks {
    residue: usize,
    blocks: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecDoc {
    kind: Kind,
    base: u32,
    #[serde(default)]
    leading_zeros: LeadingZeroPolicy,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    prefix: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    period: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    period_length: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    forbidden: Option<Vec<ResidueBlocks>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    letter: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exponent: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    states: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    initial: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    accepting: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    transitions: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    direction: Option<Direction>,
}

fn at(path: &str, message: impl Into<String>) -> Error {
    Error::Parse { path: path.to_string(), message: message.into() }
}

fn required<T>(v: Option<T>, field: &str) -> Result<T> {
    v.ok_or_else(|| at(field, "missing field"))
}

fn digit_sets(sets: Vec<Vec<u32>>, base: u32, field: &str) -> Result<Vec<Vec<u8>>> {
    sets.into_iter()
        .enumerate()
        .map(|(i, set)| {
            let mut out = Vec::with_capacity(set.len());
            for (j, d) in set.into_iter().enumerate() {
                if d >= base {
                    return Err(at(&format!("{field}[{i}][{j}]"), format!("digit {d} out of range for base {base}")));
                }
                out.push(d as u8);
            }
            out.sort_unstable();
            out.dedup();
            if out.is_empty() {
                return Err(at(&format!("{field}[{i}]"), "allowed digit set is empty"));
            }
            Ok(out)
        })
        .collect()
}

/// Parses and validates a JSON spec document.
pub fn parse_spec(text: &str) -> Result<LanguageSpec> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: SpecDoc = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        at(&path, e.into_inner().to_string())
    })?;
    let base = doc.base;
    if !(2..=crate::numeration::MAX_BASE).contains(&base) {
        return Err(at("base", format!("base {base} out of range")));
    }
    let kind = match doc.kind {
        Kind::DigitRestriction => LanguageKind::DigitRestriction(DigitRestriction {
            prefix: digit_sets(doc.prefix.unwrap_or_default(), base, "prefix")?,
            period: digit_sets(required(doc.period, "period")?, base, "period")?,
        }),
        Kind::PeriodicBlocks => {
            let p = required(doc.period_length, "period_length")?;
            if p == 0 {
                return Err(at("period_length", "must be at least 1"));
            }
            let mut forbidden = vec![Vec::new(); p];
            for (i, rb) in required(doc.forbidden, "forbidden")?.into_iter().enumerate() {
                if rb.residue >= p {
                    return Err(at(&format!("forbidden[{i}].residue"), format!("residue {} >= period {p}", rb.residue)));
                }
                for (j, s) in rb.blocks.iter().enumerate() {
                    let block = parse_block(s, base)
                        .map_err(|e| at(&format!("forbidden[{i}].blocks[{j}]"), e.to_string()))?;
                    forbidden[rb.residue].push(block);
                }
            }
            LanguageKind::PeriodicBlocks(PeriodicBlocks { period: p, forbidden })
        }
        Kind::PowerAvoidance => {
            let letter = required(doc.letter, "letter")?;
            if letter >= base {
                return Err(at("letter", format!("digit {letter} out of range for base {base}")));
            }
            LanguageKind::PowerAvoidance(PowerAvoidance {
                letter: letter as u8,
                exponent: required(doc.exponent, "exponent")?,
            })
        }
        Kind::EvilFactor => LanguageKind::EvilFactor,
        Kind::Dfa => {
            let states = required(doc.states, "states")?;
            let mut accepting = vec![false; states];
            for (i, q) in required(doc.accepting, "accepting")?.into_iter().enumerate() {
                *accepting
                    .get_mut(q)
                    .ok_or_else(|| at(&format!("accepting[{i}]"), "state out of range"))? = true;
            }
            LanguageKind::Dfa(DfaSpec {
                states,
                initial: required(doc.initial, "initial")?,
                accepting,
                transitions: required(doc.transitions, "transitions")?,
                direction: doc.direction.unwrap_or_default(),
            })
        }
    };
    let mut spec = LanguageSpec::new(base, doc.leading_zeros, kind)?;
    spec.name = doc.name;
    Ok(spec)
}

/// JSON value for a spec; `parse_spec` inverts it.
pub fn spec_to_json(spec: &LanguageSpec) -> serde_json::Value {
    let sets = |v: &[Vec<u8>]| v.iter().map(|s| s.iter().map(|&d| u32::from(d)).collect()).collect();
    let mut doc = SpecDoc {
        kind: Kind::EvilFactor,
        base: spec.base,
        leading_zeros: spec.leading_zeros,
        name: spec.name.clone(),
        prefix: None,
        period: None,
        period_length: None,
        forbidden: None,
        letter: None,
        exponent: None,
        states: None,
        initial: None,
        accepting: None,
        transitions: None,
        direction: None,
    };
    match &spec.kind {
        LanguageKind::DigitRestriction(dr) => {
            doc.kind = Kind::DigitRestriction;
            doc.prefix = Some(sets(&dr.prefix));
            doc.period = Some(sets(&dr.period));
        }
        LanguageKind::PeriodicBlocks(pb) => {
            doc.kind = Kind::PeriodicBlocks;
            doc.period_length = Some(pb.period);
            doc.forbidden = Some(
                pb.forbidden
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| !b.is_empty())
                    .map(|(r, b)| ResidueBlocks { residue: r, blocks: b.iter().map(|x| format_block(x)).collect() })
                    .collect(),
            );
        }
        LanguageKind::PowerAvoidance(pa) => {
            doc.kind = Kind::PowerAvoidance;
            doc.letter = Some(pa.letter.into());
            doc.exponent = Some(pa.exponent);
        }
        LanguageKind::EvilFactor => {}
        LanguageKind::Dfa(d) => {
            doc.kind = Kind::Dfa;
            doc.states = Some(d.states);
            doc.initial = Some(d.initial);
            doc.accepting = Some((0..d.states).filter(|&q| d.accepting[q]).collect());
            doc.transitions = Some(d.transitions.clone());
            doc.direction = Some(d.direction);
        }
    }
    serde_json::to_value(doc).expect("spec serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langspec::presets::preset;

    const L1: &str = r#"{"kind":"periodic_blocks","base":10,"leading_zeros":"forbidden","period_length":2,
        "forbidden":[{"residue":0,"blocks":["12"]},{"residue":1,"blocks":["89"]}]}"#;

    #[test]
    fn parses_l1() {
        let spec = parse_spec(L1).unwrap();
        assert_eq!(spec.kind, preset("L1").unwrap().kind);
        let again = parse_spec(&spec_to_json(&spec).to_string()).unwrap();
        assert_eq!(again, spec);
    }

    #[test]
    fn round_trips_presets() {
        for name in ["L1", "L2", "L5", "kempner", "LJ", "LJp", "thue_morse", "L3:10:1:2", "full", "powers2"] {
            let spec = preset(name).unwrap();
            let again = parse_spec(&spec_to_json(&spec).to_string()).unwrap();
            assert_eq!(again, spec, "{name}");
        }
    }

    #[test]
    fn digit_out_of_range_reports_path() {
        let bad = r#"{"kind":"periodic_blocks","base":10,"period_length":2,
            "forbidden":[{"residue":1,"blocks":["8a"]}]}"#;
        match parse_spec(bad) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "forbidden[0].blocks[0]"),
            other => panic!("{other:?}"),
        }
        let bad = r#"{"kind":"digit_restriction","base":10,"period":[[0,10]]}"#;
        assert!(matches!(parse_spec(bad), Err(Error::Parse { .. })));
    }

    #[test]
    fn schema_errors_have_paths() {
        match parse_spec(r#"{"kind":"power_avoidance","base":"ten"}"#) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "base"),
            other => panic!("{other:?}"),
        }
        assert!(parse_spec(r#"{"kind":"nope","base":2}"#).is_err());
        assert!(parse_spec(r#"{"kind":"power_avoidance","base":2,"letter":1}"#).is_err());
    }

    #[test]
    fn degenerate_digit_set_is_invalid() {
        let r = parse_spec(r#"{"kind":"digit_restriction","base":10,"period":[[0]]}"#);
        assert!(matches!(r, Err(Error::InvalidSpec(_))));
    }
}
