//! Hilbert-style proof systems and a derivation checker.
//!
//! A derivation is a numbered list of formulas, each with a justification
//! that refers only to earlier lines. [`check_derivation`] is the only
//! component that has to be trusted: derivations are plain data, written in
//! the text format handled by [`Derivation::parse`] and [`Derivation::render`].

mod build;
mod check;
mod schema;
mod taut;

pub use build::{corpus, gen_prop19, Builder, CorpusEntry};
pub use check::{check_derivation, CheckError, Derivation, Justification, Step, SyntaxError};
pub use schema::{
    canonical_name, instantiate, match_schema, metavariables, nearest_miss, schema, Bindings, SCHEMAS,
};
pub use taut::{is_bool_taut, LetterBudget, MAX_LETTERS};

use crate::semantics::FrameClass;

/// Inference rules beyond TAUT and PC, which every system has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Mp,
    NecKw,
    ReKw,
    Sub,
    Ri,
    Wm,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Mp => "MP",
            Rule::NecKw => "NECKw",
            Rule::ReKw => "REKw",
            Rule::Sub => "Sub",
            Rule::Ri => "RI",
            Rule::Wm => "WM",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofSystem {
    pub name: &'static str,
    pub axioms: Vec<&'static str>,
    pub rules: Vec<Rule>,
    /// Frame class the system is sound for.
    pub class: FrameClass,
}

impl ProofSystem {
    pub fn has_axiom(&self, name: &str) -> bool {
        let canon = canonical_name(name);
        self.axioms.iter().any(|a| *a == canon)
    }

    pub fn has_rule(&self, r: Rule) -> bool {
        self.rules.contains(&r)
    }
}

const PLKW_AXIOMS: [&str; 3] = ["KwCon", "KwDis", "Kw<->"];
const REDUCTION_AXIOMS: [&str; 5] = ["!ATOM", "!NEG", "!CON", "!!", "!Kw"];
const PLKW_RULES: [Rule; 4] = [Rule::Mp, Rule::NecKw, Rule::ReKw, Rule::Sub];

/// Names of the registered systems.
pub const SYSTEM_NAMES: [&str; 11] = [
    "PLKw", "PLKwT", "PLKw4", "PLKw5", "PLKw45", "PLKwS4", "PLKwS5", "PLKwA", "PLKwAS5", "Ig", "LB",
];

/// Looks up a system by name.
pub fn system(name: &str) -> Option<ProofSystem> {
    let plkw = |name: &'static str, extra: &[&'static str], class: FrameClass| {
        let mut axioms = PLKW_AXIOMS.to_vec();
        axioms.extend_from_slice(extra);
        ProofSystem {
            name,
            axioms,
            rules: PLKW_RULES.to_vec(),
            class,
        }
    };
    let with_reduction = |mut s: ProofSystem| {
        s.axioms.extend_from_slice(&REDUCTION_AXIOMS);
        s
    };
    Some(match name {
        "PLKw" => plkw("PLKw", &[], FrameClass::K),
        "PLKwT" => plkw("PLKwT", &["KwT"], FrameClass::T),
        "PLKw4" => plkw("PLKw4", &["Kw4"], FrameClass::K4),
        "PLKw5" => plkw("PLKw5", &["Kw5"], FrameClass::K5),
        "PLKw45" => plkw("PLKw45", &["Kw4", "Kw5"], FrameClass::K45),
        "PLKwS4" => plkw("PLKwS4", &["KwT", "wKw4"], FrameClass::S4),
        "PLKwS5" => plkw("PLKwS5", &["KwT", "wKw5"], FrameClass::S5),
        "PLKwA" => with_reduction(plkw("PLKwA", &[], FrameClass::K)),
        "PLKwAS5" => with_reduction(plkw("PLKwAS5", &["KwT", "wKw5"], FrameClass::S5)),
        "Ig" => ProofSystem {
            name: "Ig",
            axioms: vec!["I1", "I2", "I3", "I4"],
            rules: vec![Rule::Mp, Rule::Sub, Rule::Ri],
            class: FrameClass::K,
        },
        "LB" => ProofSystem {
            name: "LB",
            axioms: vec!["N", "Z", "R"],
            rules: vec![Rule::Mp, Rule::Sub, Rule::Wm],
            class: FrameClass::S4,
        },
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_consistent() {
        for name in SYSTEM_NAMES {
            let s = system(name).unwrap();
            assert_eq!(s.name, name);
            for a in &s.axioms {
                assert!(schema(a).is_some(), "{name}: {a}");
            }
        }
        assert!(system("PLKwA").unwrap().has_axiom("!COM"));
        assert!(!system("PLKw").unwrap().has_axiom("KwT"));
        assert!(system("nope").is_none());
    }
}
