//! The reconstructed example models and frames, shipped as JSON under
//! `fixtures/` and embedded here, plus a self-test of every claim made
//! about them.

use super::{frame_valid, mc, model_valid, Frame, FrameFile, KripkeModel, ModelFile, Property};
use crate::formula::{enumerate_formulas, parse, Formula, LanguageTag};

const M1: &str = include_str!("../../../../fixtures/m1.json");
const PROP6_M: &str = include_str!("../../../../fixtures/prop6_m.json");
const PROP6_N: &str = include_str!("../../../../fixtures/prop6_n.json");
const PROP7_M: &str = include_str!("../../../../fixtures/prop7_m.json");
const PROP7_N: &str = include_str!("../../../../fixtures/prop7_n.json");
const F1: &str = include_str!("../../../../fixtures/f1.json");
const F2: &str = include_str!("../../../../fixtures/f2.json");
const M27: &str = include_str!("../../../../fixtures/m27.json");
const N28: &str = include_str!("../../../../fixtures/n28.json");
const SEC6: &str = include_str!("../../../../fixtures/sec6.json");
const G4: &str = include_str!("../../../../fixtures/g4.json");

/// The G4 instance with `φ := q`, `χ := p`.
pub const G4_INSTANCE: &str = "~Kw[i]p -> (Kw[i]q & ~Kw[i](q & p) -> \
     Kw[i](Kw[i]q & ~Kw[i](p & q)) & ~Kw[i](Kw[i]q & ~Kw[i](q & p) & p))";

fn model(text: &str) -> KripkeModel {
    ModelFile::from_json(text)
        .and_then(|f| f.to_model())
        .expect("embedded fixture is well-formed")
}

fn frame(text: &str) -> Frame {
    FrameFile::from_json(text)
        .and_then(|f| f.to_frame())
        .expect("embedded fixture is well-formed")
}

/// `s→s, s→t`, `q` true at `t` only.
pub fn m1() -> KripkeModel {
    model(M1)
}

/// `s→t, t→t` with `p` true at `t`.
pub fn prop6_m() -> KripkeModel {
    model(PROP6_M)
}

/// `s→t, t→t` with `p` false everywhere.
pub fn prop6_n() -> KripkeModel {
    model(PROP6_N)
}

/// `s↔t` with `p` true at `t`.
pub fn prop7_m() -> KripkeModel {
    model(PROP7_M)
}

/// `s↔t` with `p` false everywhere.
pub fn prop7_n() -> KripkeModel {
    model(PROP7_N)
}

/// The chain `s→t→u`.
pub fn f1() -> Frame {
    frame(F1)
}

/// One reflexive world.
pub fn f2() -> Frame {
    frame(F2)
}

pub fn m27() -> KripkeModel {
    model(M27)
}

pub fn n28() -> KripkeModel {
    model(N28)
}

pub fn sec6() -> KripkeModel {
    model(SEC6)
}

pub fn g4() -> KripkeModel {
    model(G4)
}

/// Fixture JSON by file stem, for tools that want to write them out.
pub fn raw(name: &str) -> Option<&'static str> {
    Some(match name {
        "m1" => M1,
        "prop6_m" => PROP6_M,
        "prop6_n" => PROP6_N,
        "prop7_m" => PROP7_M,
        "prop7_n" => PROP7_N,
        "f1" => F1,
        "f2" => F2,
        "m27" => M27,
        "n28" => N28,
        "sec6" => SEC6,
        "g4" => G4,
        _ => return None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureCheck {
    pub name: &'static str,
    pub passed: bool,
}

fn f(s: &str) -> Formula {
    parse(s).expect("built-in formula parses")
}

fn at(m: &KripkeModel, w: &str, s: &str) -> bool {
    mc(m, w, &f(s)).expect("fixture world exists")
}

fn props_of(fr: &Frame) -> Vec<Property> {
    fr.properties()
        .into_values()
        .next()
        .map(|s| s.into_iter().collect())
        .unwrap_or_default()
}

/// PLKw formulas over `vars` up to `max_size`, agent `i`.
fn plkw(vars: &[&str], max_size: usize) -> Vec<Formula> {
    enumerate_formulas(vars, &["i"], LanguageTag::PLKw, max_size).collect()
}

fn pointed_equivalent(a: &KripkeModel, b: &KripkeModel, formulas: &[Formula]) -> bool {
    formulas
        .iter()
        .all(|g| mc(a, "s", g).ok() == mc(b, "s", g).ok())
}

/// Checks every textual claim about the fixtures. Each entry names one claim.
pub fn verify_fixtures() -> Vec<FixtureCheck> {
    let mut out = Vec::new();
    let mut check = |name: &'static str, passed: bool| out.push(FixtureCheck { name, passed });

    let m1 = m1();
    check("m1: s |= Kw[i](p -> q)", at(&m1, "s", "Kw[i](p -> q)"));
    check("m1: s |= Kw[i]p", at(&m1, "s", "Kw[i]p"));
    check("m1: s |/= Kw[i]q", !at(&m1, "s", "Kw[i]q"));
    check(
        "m1: K schema fails at s",
        !at(&m1, "s", "Kw[i](p -> q) -> (Kw[i]p -> Kw[i]q)"),
    );

    let small = plkw(&["p"], 6);
    let (m6, n6) = (prop6_m(), prop6_n());
    check(
        "prop6: serial, transitive, euclidean",
        [&m6, &n6].iter().all(|m| {
            let ps = props_of(m.frame());
            [Property::Serial, Property::Transitive, Property::Euclidean]
                .iter()
                .all(|p| ps.contains(p))
        }),
    );
    check(
        "prop6: K[i]p separates",
        at(&m6, "s", "K[i]p") && !at(&n6, "s", "K[i]p"),
    );
    check("prop6: PLKw-equivalent up to size 6", pointed_equivalent(&m6, &n6, &small));

    let (m7, n7) = (prop7_m(), prop7_n());
    check(
        "prop7: symmetric",
        [&m7, &n7]
            .iter()
            .all(|m| props_of(m.frame()).contains(&Property::Symmetric)),
    );
    check(
        "prop7: K[i]p separates",
        at(&m7, "s", "K[i]p") && !at(&n7, "s", "K[i]p"),
    );
    check("prop7: PLKw-equivalent up to size 6", pointed_equivalent(&m7, &n7, &small));

    let (fr1, fr2) = (f1(), f2());
    check(
        "f1: only partial-functional",
        props_of(&fr1) == vec![Property::PartialFunctional],
    );
    check("f2: all six properties", props_of(&fr2) == Property::ALL.to_vec());
    check(
        "f1/f2: agree on frame validity up to size 6",
        small.iter().all(|g| {
            frame_valid(&fr1, g, super::DEFAULT_FRAME_BITS).ok()
                == frame_valid(&fr2, g, super::DEFAULT_FRAME_BITS).ok()
        }),
    );

    let two = plkw(&["p", "q"], 6);
    let m27 = m27();
    check(
        "m27: every wKw4 instance is model-valid",
        two.iter().all(|phi| {
            let inst = Formula::implies(
                Formula::kw("i", phi.clone()),
                Formula::kw("i", Formula::kw("i", phi.clone())),
            );
            model_valid(&m27, &inst)
        }),
    );
    check(
        "m27: Kw4 instance fails at s",
        !at(&m27, "s", "Kw[i]p -> Kw[i](Kw[i]p | q)"),
    );

    let n28 = n28();
    check(
        "n28: every wKw5 instance is model-valid",
        two.iter().all(|phi| {
            let inst = Formula::implies(
                Formula::not(Formula::kw("i", phi.clone())),
                Formula::kw("i", Formula::not(Formula::kw("i", phi.clone()))),
            );
            model_valid(&n28, &inst)
        }),
    );
    check(
        "n28: Kw5 instance fails at s",
        !at(&n28, "s", "~Kw[i]p -> Kw[i](~Kw[i]p | q)"),
    );

    let sec6 = sec6();
    check(
        "sec6: substitution instance fails at s",
        !at(&sec6, "s", "~Kw[i]q -> [q]~Kw[i]q"),
    );
    check("sec6: p -> [q]p holds everywhere", model_valid(&sec6, &f("p -> [q]p")));

    let g4 = g4();
    check("g4: transitive", props_of(g4.frame()).contains(&Property::Transitive));
    check("g4: s |= ~Kw[i]p", at(&g4, "s", "~Kw[i]p"));
    check(
        "g4: s |= Kw[i]q & ~Kw[i](q & p)",
        at(&g4, "s", "Kw[i]q & ~Kw[i](q & p)"),
    );
    check(
        "g4: s |/= Kw[i](Kw[i]q & ~Kw[i](p & q))",
        !at(&g4, "s", "Kw[i](Kw[i]q & ~Kw[i](p & q))"),
    );
    check("g4: instance false at s", !at(&g4, "s", G4_INSTANCE));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_claim_holds() {
        let failed: Vec<_> = verify_fixtures()
            .into_iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        assert!(failed.is_empty(), "{failed:?}");
    }

    #[test]
    fn raw_lookup() {
        assert!(raw("m1").is_some());
        assert!(raw("nope").is_none());
    }
}
