//! Semantic invariants, checked on random models and random formulas.

mod common;

use common::{random_formula, random_model, random_model_in, Gen};
use kwl_core::decide::{valid, Verdict};
use kwl_core::formula::{enumerate_formulas, Formula, LanguageTag};
use kwl_core::proof::{instantiate, metavariables, schema, Bindings};
use kwl_core::semantics::{mc, model_valid, FrameClass, KripkeModel};
use kwl_core::translate::{el_to_kw, kw_to_el, reduce, reduce_traced, Axiom};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const PROPS: [&str; 3] = ["p", "q", "r"];
const AGENTS: [&str; 2] = ["a", "b"];

fn gen(kw: bool, k: bool, announce: bool) -> Gen<'static> {
    Gen {
        props: &PROPS,
        agents: &AGENTS,
        kw,
        k,
        announce,
        derived: true,
    }
}

fn holds_everywhere(m: &KripkeModel, f: &Formula) -> bool {
    m.truth_set(f).iter().all(|&b| b)
}

/// Frame class each schema is sound for.
const SOUNDNESS: &[(&str, FrameClass)] = &[
    ("KwCon", FrameClass::K),
    ("KwDis", FrameClass::K),
    ("Kw<->", FrameClass::K),
    ("KwT", FrameClass::T),
    ("Kw4", FrameClass::K4),
    ("wKw4", FrameClass::K4),
    ("Kw5", FrameClass::K5),
    ("wKw5", FrameClass::K5),
    ("!ATOM", FrameClass::K),
    ("!NEG", FrameClass::K),
    ("!CON", FrameClass::K),
    ("!!", FrameClass::K),
    ("!Kw", FrameClass::K),
    ("I1", FrameClass::K),
    ("I2", FrameClass::K),
    ("I3", FrameClass::K),
    ("I4", FrameClass::K),
    ("N", FrameClass::K),
    ("Z", FrameClass::K),
    ("R", FrameClass::S4),
];

pub fn random_instance(rng: &mut StdRng, name: &str) -> Formula {
    let s = schema(name).unwrap();
    let mut b = Bindings::default();
    let g = gen(true, false, s.has_announcement());
    for m in metavariables(s) {
        let f = if m == "P" {
            Formula::prop(PROPS[rng.gen_range(0..PROPS.len())])
        } else {
            random_formula(rng, g, 3)
        };
        b.formulas.insert(m, f);
    }
    b.agents.insert("I".into(), AGENTS[rng.gen_range(0..AGENTS.len())].into());
    instantiate(s, &b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn axioms_hold_on_their_classes(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        for &(name, class) in SOUNDNESS {
            let m = random_model_in(&mut rng, class, 4, &AGENTS, &PROPS);
            for _ in 0..8 {
                let f = random_instance(&mut rng, name);
                prop_assert!(holds_everywhere(&m, &f), "{} on {}: {}", name, class, f);
            }
        }
    }

    /// `Kw φ ∧ Kw(φ → χ) ∧ ¬Kw χ` forces `K ¬φ`, and with `χ := ψ` any
    /// `¬Kw ψ ∧ K ¬φ` produces it.
    #[test]
    fn almost_definability(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = random_model(&mut rng, 4, &["i"], &PROPS);
        let g = Gen { agents: &["i"], ..gen(true, false, false) };
        let (phi, chi) = (random_formula(&mut rng, g, 3), random_formula(&mut rng, g, 3));
        let kw = |f: Formula| Formula::kw("i", f);
        let pattern = |c: &Formula| Formula::conj([
            kw(phi.clone()),
            kw(Formula::implies(phi.clone(), c.clone())),
            Formula::not(kw(c.clone())),
        ]);
        let k_not_phi = Formula::k("i", Formula::not(phi.clone()));
        for w in m.worlds() {
            if mc(&m, w, &pattern(&chi)).unwrap() {
                prop_assert!(mc(&m, w, &k_not_phi).unwrap());
            }
            let ignorant = Formula::not(kw(chi.clone()));
            if mc(&m, w, &Formula::and(ignorant, k_not_phi.clone())).unwrap() {
                prop_assert!(mc(&m, w, &pattern(&chi)).unwrap());
            }
        }
    }

    #[test]
    fn kw_ignores_negation(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = random_model(&mut rng, 5, &AGENTS, &PROPS);
        let f = random_formula(&mut rng, gen(true, true, false), 4);
        for a in AGENTS {
            prop_assert_eq!(
                m.truth_set(&Formula::kw(a, f.clone())),
                m.truth_set(&Formula::kw(a, Formula::not(f.clone())))
            );
        }
    }

    #[test]
    fn partial_functional_models_know_whether(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = random_model_in(&mut rng, FrameClass::PF, 5, &AGENTS, &PROPS);
        let f = random_formula(&mut rng, gen(true, true, true), 4);
        prop_assert!(holds_everywhere(&m, &Formula::kw("a", f)));
    }

    #[test]
    fn nec_and_re_preserve_model_validity(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = random_model(&mut rng, 3, &["i"], &["p", "q"]);
        let g = Gen { props: &["p", "q"], agents: &["i"], ..gen(true, false, false) };
        let phi = random_formula(&mut rng, g, 3);
        // A premise valid on the model by construction, and a random one.
        for premise in [Formula::or(phi.clone(), Formula::not(phi.clone())), phi.clone()] {
            if model_valid(&m, &premise) {
                prop_assert!(model_valid(&m, &Formula::kw("i", premise)));
            }
        }
        let psi = random_formula(&mut rng, g, 3);
        for (a, b) in [(phi.clone(), Formula::and(phi.clone(), Formula::Top)), (phi, psi)] {
            if model_valid(&m, &Formula::iff(a.clone(), b.clone())) {
                let kw = |f: Formula| Formula::kw("i", f);
                prop_assert!(model_valid(&m, &Formula::iff(kw(a), kw(b))));
            }
        }
    }
}

#[test]
fn translations_preserve_truth() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..500 {
        let m = random_model(&mut rng, 4, &AGENTS, &PROPS);
        let f = random_formula(&mut rng, gen(true, false, false), 4);
        assert_eq!(m.truth_set(&f), m.truth_set(&kw_to_el(&f).unwrap()), "{f}");

        let r = random_model_in(&mut rng, FrameClass::T, 4, &AGENTS, &PROPS);
        let e = random_formula(&mut rng, gen(false, true, false), 4);
        assert_eq!(r.truth_set(&e), r.truth_set(&el_to_kw(&e).unwrap()), "{e}");
        let round = el_to_kw(&kw_to_el(&f).unwrap()).unwrap();
        assert_eq!(r.truth_set(&f), r.truth_set(&round), "{f}");
    }
}

#[test]
fn reduction_preserves_truth_and_terminates() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..500 {
        let f = random_formula(&mut rng, gen(true, false, true), 4);
        let (g, trace) = reduce_traced(&f).unwrap();
        assert!(!g.has_announcement(), "{f}");
        for s in &trace {
            if s.axiom == Axiom::Expand {
                assert_eq!(s.before, s.after);
            } else {
                assert!(s.before > s.after, "{f}: {s:?}");
            }
        }
        assert!(g.complexity() <= f.complexity(), "{f}");
        for _ in 0..3 {
            let m = random_model(&mut rng, 4, &AGENTS, &PROPS);
            assert_eq!(m.truth_set(&f), m.truth_set(&g), "{f}");
        }
    }
}

#[test]
fn substitution_preserves_validity() {
    let mut rng = StdRng::seed_from_u64(13);
    let g = Gen { props: &["p", "q"], agents: &["i"], ..gen(true, false, false) };
    let mut checked = 0;
    for f in enumerate_formulas(&["p", "q"], &["i"], LanguageTag::PLKw, 5) {
        if !matches!(valid(&f, FrameClass::K).unwrap().verdict, Verdict::Valid) {
            continue;
        }
        let s = f.substitute("p", &random_formula(&mut rng, g, 3));
        assert!(matches!(valid(&s, FrameClass::K).unwrap().verdict, Verdict::Valid), "{f} -> {s}");
        checked += 1;
    }
    assert!(checked > 50, "only {checked} valid formulas");
}

#[test]
fn reduce_is_idempotent_on_announcement_free_input() {
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..200 {
        let f = random_formula(&mut rng, gen(true, false, false), 4);
        assert_eq!(reduce(&f).unwrap(), f);
    }
}
