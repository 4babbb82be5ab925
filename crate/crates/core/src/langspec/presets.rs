//! Built-in languages, addressable as `preset:NAME` on the command line.
//!
//! Fixed names: `L1`, `L2`, `L2p`, `L5`, `kempner`, `full`, `LJ`, `LJp`,
//! `powers2`, `thue_morse`, `evil`, `alt9`. Parametric names:
//! `L3:b:a:k` (no leading zero, avoid `a^k`), `y:b:k` (leading zeros allowed,
//! avoid `1^k`), `L4:b:a` (avoid the letter `a`).

use super::{
    DfaSpec, DigitRestriction, Direction, LanguageKind, LanguageSpec, LeadingZeroPolicy, PeriodicBlocks,
    PowerAvoidance,
};
use crate::error::{Error, Result};
use crate::numeration::parse_block;

use LeadingZeroPolicy::{Allowed, Forbidden};

pub const FIXED: &[&str] = &[
    "L1", "L2", "L2p", "L5", "kempner", "full", "LJ", "LJp", "powers2", "thue_morse", "evil", "alt9",
];

fn blocks(base: u32, per_residue: &[&[&str]]) -> Result<LanguageKind> {
    let forbidden = per_residue
        .iter()
        .map(|bs| bs.iter().map(|s| parse_block(s, base)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(LanguageKind::PeriodicBlocks(PeriodicBlocks { period: per_residue.len(), forbidden }))
}

fn avoid_letter(base: u32, a: u8) -> LanguageKind {
    LanguageKind::DigitRestriction(DigitRestriction {
        prefix: vec![],
        period: vec![(0..base as u8).filter(|&d| d != a).collect()],
    })
}

fn parity_dfa(accept_odd: bool) -> LanguageKind {
    LanguageKind::Dfa(DfaSpec {
        states: 2,
        initial: 0,
        accepting: vec![!accept_odd, accept_odd],
        transitions: vec![vec![0, 1], vec![1, 0]],
        direction: Direction::Msd,
    })
}

fn param<T: std::str::FromStr>(s: &str, name: &str) -> Result<T> {
    s.parse().map_err(|_| Error::InvalidInput(format!("bad parameter {s:?} in preset {name:?}")))
}

/// Looks up a preset by name.
pub fn preset(name: &str) -> Result<LanguageSpec> {
    let parts: Vec<&str> = name.split(':').collect();
    let spec = match parts.as_slice() {
        ["L1"] => LanguageSpec::new(10, Forbidden, blocks(10, &[&["12"], &["89"]])?)?,
        ["L2"] => LanguageSpec::new(10, Forbidden, blocks(10, &[&["12"], &["21"]])?)?,
        ["L2p"] => LanguageSpec::new(10, Allowed, blocks(10, &[&["12"], &["21"]])?)?,
        ["L5"] => LanguageSpec::new(10, Forbidden, blocks(10, &[&["12", "89"], &["89"]])?)?,
        ["kempner"] => LanguageSpec::new(10, Forbidden, avoid_letter(10, 9))?,
        ["full"] => LanguageSpec::new(
            10,
            Forbidden,
            LanguageKind::DigitRestriction(DigitRestriction { prefix: vec![], period: vec![(0..10).collect()] }),
        )?,
        ["alt9"] => LanguageSpec::new(
            10,
            Forbidden,
            LanguageKind::DigitRestriction(DigitRestriction {
                prefix: vec![],
                period: vec![(0..10).collect(), (0..9).collect()],
            }),
        )?,
        ["LJ"] => LanguageSpec::new(2, Allowed, LanguageKind::EvilFactor)?,
        ["LJp"] => LanguageSpec::new(2, Forbidden, LanguageKind::EvilFactor)?,
        ["powers2"] => LanguageSpec::new(
            2,
            Forbidden,
            LanguageKind::Dfa(DfaSpec {
                states: 3,
                initial: 0,
                accepting: vec![false, true, false],
                transitions: vec![vec![0, 1], vec![1, 2], vec![2, 2]],
                direction: Direction::Msd,
            }),
        )?,
        ["thue_morse"] => LanguageSpec::new(2, Forbidden, parity_dfa(true))?,
        ["evil"] => LanguageSpec::new(2, Forbidden, parity_dfa(false))?,
        ["L3", b, a, k] => {
            let base: u32 = param(b, name)?;
            LanguageSpec::new(
                base,
                Forbidden,
                LanguageKind::PowerAvoidance(PowerAvoidance { letter: param(a, name)?, exponent: param(k, name)? }),
            )?
        }
        ["y", b, k] => {
            let base: u32 = param(b, name)?;
            LanguageSpec::new(
                base,
                Allowed,
                LanguageKind::PowerAvoidance(PowerAvoidance { letter: 1, exponent: param(k, name)? }),
            )?
        }
        ["L4", b, a] => {
            let base: u32 = param(b, name)?;
            let a: u8 = param(a, name)?;
            if u32::from(a) >= base {
                return Err(Error::InvalidDigit { digit: a.into(), base });
            }
            LanguageSpec::new(base, Forbidden, avoid_letter(base, a))?
        }
        _ => return Err(Error::InvalidInput(format!("unknown preset {name:?}"))),
    };
    Ok(spec.named(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixed_presets_build() {
        for name in FIXED {
            let spec = preset(name).unwrap();
            assert_eq!(spec.name.as_deref(), Some(*name));
        }
        assert!(preset("L3:2:1:2").is_ok());
        assert!(preset("L4:10:0").is_ok());
        assert!(preset("L4:10:10").is_err());
        assert!(preset("nope").is_err());
    }

    #[test]
    fn powers_of_two() {
        let p = preset("powers2").unwrap();
        let members: Vec<u64> = (1..40).filter(|&n| p.contains(n)).collect();
        assert_eq!(members, vec![1, 2, 4, 8, 16, 32]);
    }
}
