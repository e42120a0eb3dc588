//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails. Time limits are wall-clock and measured
//! per criterion.

mod common;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{bounded_countermodel, random_formula, random_model, random_model_in, Gen};
use kwl_core::decide::{valid, Verdict};
use kwl_core::formula::{enumerate_formulas, parse, Formula, LanguageTag};
use kwl_core::proof::{
    check_derivation, corpus, gen_prop19, instantiate, metavariables, schema, system, Bindings,
    Derivation,
};
use kwl_core::semantics::fixtures::{self, G4_INSTANCE};
use kwl_core::semantics::{
    frame_valid, mc, model_valid, FrameClass, KripkeModel, Property, DEFAULT_FRAME_BITS,
};
use kwl_core::translate::{el_to_kw, kw_to_el, reduce_traced, Axiom};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const PROPS: [&str; 3] = ["p", "q", "r"];
const AGENTS: [&str; 2] = ["a", "b"];

fn f(s: &str) -> Formula {
    parse(s).unwrap()
}

fn is_valid(g: &Formula, class: FrameClass) -> bool {
    matches!(valid(g, class).unwrap().verdict, Verdict::Valid)
}

/// Outcome of one criterion: a pass flag and a short detail line.
type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn c1() -> Check {
    let m = fixtures::m1();
    let at = |s: &str| mc(&m, "s", &f(s)).unwrap();
    ensure(at("Kw[i](p -> q)"), "Kw[i](p -> q) false at s")?;
    ensure(at("Kw[i]p"), "Kw[i]p false at s")?;
    ensure(!at("Kw[i]q"), "Kw[i]q true at s")?;
    ensure(!at("Kw[i](p -> q) -> (Kw[i]p -> Kw[i]q)"), "K schema holds at s")?;
    Ok("Kw[i](p->q)=1 Kw[i]p=1 Kw[i]q=0 at s".into())
}

/// Axiom and frame class it is checked on.
const SOUND: &[(&str, FrameClass)] = &[
    ("KwCon", FrameClass::K),
    ("KwDis", FrameClass::K),
    ("Kw<->", FrameClass::K),
    ("KwT", FrameClass::T),
    ("Kw4", FrameClass::K4),
    ("Kw5", FrameClass::K5),
    ("wKw4", FrameClass::K4),
    ("wKw5", FrameClass::K5),
    ("!ATOM", FrameClass::K),
    ("!NEG", FrameClass::K),
    ("!CON", FrameClass::K),
    ("!!", FrameClass::K),
    ("!Kw", FrameClass::K),
];

fn c2() -> Check {
    let mut rng = StdRng::seed_from_u64(2);
    let mut checks = 0usize;
    for &(name, class) in SOUND {
        let s = schema(name).unwrap();
        let g = Gen {
            props: &PROPS,
            agents: &AGENTS,
            kw: true,
            k: false,
            announce: s.has_announcement(),
            derived: true,
        };
        let models: Vec<KripkeModel> = (0..100)
            .map(|_| random_model_in(&mut rng, class, 4, &AGENTS, &PROPS))
            .collect();
        for _ in 0..1000 {
            let mut b = Bindings::default();
            for m in metavariables(s) {
                let v = if m == "P" {
                    Formula::prop(PROPS[rng.gen_range(0..PROPS.len())])
                } else {
                    random_formula(&mut rng, g, 3)
                };
                b.formulas.insert(m, v);
            }
            b.agents.insert("I".into(), AGENTS[rng.gen_range(0..2)].into());
            let inst = instantiate(s, &b);
            for m in &models {
                ensure(model_valid(m, &inst), format!("{name} fails: {inst}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{} axioms, {checks} model checks, 0 failures", SOUND.len()))
}

fn c3() -> Check {
    let (f1, f2) = (fixtures::f1(), fixtures::f2());
    let props = |fr: &kwl_core::semantics::Frame| -> Vec<Property> {
        fr.properties().into_values().next().unwrap().into_iter().collect()
    };
    ensure(props(&f1) == vec![Property::PartialFunctional], "F1 properties")?;
    ensure(props(&f2) == Property::ALL.to_vec(), "F2 properties")?;
    let mut n = 0;
    for g in enumerate_formulas(&["p"], &["i"], LanguageTag::PLKw, 6) {
        let a = frame_valid(&f1, &g, DEFAULT_FRAME_BITS).unwrap();
        let b = frame_valid(&f2, &g, DEFAULT_FRAME_BITS).unwrap();
        ensure(a == b, format!("F1/F2 disagree on {g}"))?;
        n += 1;
    }
    Ok(format!("{n} formulas agree; F1 = partial-functional, F2 = all six"))
}

fn c4() -> Check {
    let two: Vec<Formula> = enumerate_formulas(&["p", "q"], &["i"], LanguageTag::PLKw, 6).collect();
    let (m27, n28) = (fixtures::m27(), fixtures::n28());
    for phi in &two {
        let kw = Formula::kw("i", phi.clone());
        let w4 = Formula::implies(kw.clone(), Formula::kw("i", kw.clone()));
        ensure(model_valid(&m27, &w4), format!("M27 refutes wKw4 at {phi}"))?;
        let nkw = Formula::not(kw);
        let w5 = Formula::implies(nkw.clone(), Formula::kw("i", nkw));
        ensure(model_valid(&n28, &w5), format!("N28 refutes wKw5 at {phi}"))?;
    }
    ensure(!mc(&m27, "s", &f("Kw[i]p -> Kw[i](Kw[i]p | q)")).unwrap(), "Kw4 holds on M27")?;
    ensure(!mc(&n28, "s", &f("~Kw[i]p -> Kw[i](~Kw[i]p | q)")).unwrap(), "Kw5 holds on N28")?;
    Ok(format!("{} weak instances valid on each; strong instances fail at s", two.len()))
}

fn c5() -> Check {
    let g4 = fixtures::g4();
    let inst = f(G4_INSTANCE);
    ensure(g4.frame().is_in_class(FrameClass::K4), "G4 fixture not transitive")?;
    ensure(!mc(&g4, "s", &inst).unwrap(), "instance holds at s")?;
    match valid(&inst, FrameClass::K4).unwrap().verdict {
        Verdict::Invalid { countermodel, point } => {
            ensure(countermodel.frame().is_in_class(FrameClass::K4), "countermodel not K4")?;
            ensure(!mc(&countermodel, &point, &inst).unwrap(), "countermodel does not refute")?;
            Ok(format!("invalid over K4, {}-world countermodel verified", countermodel.worlds().len()))
        }
        v => Err(format!("decide returned {v:?}")),
    }
}

fn c6() -> Check {
    let mut rng = StdRng::seed_from_u64(6);
    let g = Gen {
        props: &PROPS,
        agents: &AGENTS,
        kw: true,
        k: false,
        announce: true,
        derived: true,
    };
    let models: Vec<KripkeModel> = (0..50).map(|_| random_model(&mut rng, 4, &AGENTS, &PROPS)).collect();
    let mut steps = 0;
    for _ in 0..500 {
        let phi = random_formula(&mut rng, g, 4);
        let (r, trace) = reduce_traced(&phi).map_err(|e| e.to_string())?;
        ensure(!r.has_announcement(), format!("announcement left in reduce({phi})"))?;
        for s in &trace {
            let ok = if s.axiom == Axiom::Expand { s.before == s.after } else { s.before > s.after };
            ensure(ok, format!("{phi}: {s:?}"))?;
        }
        steps += trace.len();
        for m in &models {
            ensure(m.truth_set(&phi) == m.truth_set(&r), format!("reduce changes {phi}"))?;
        }
    }
    Ok(format!("500 formulas x 50 models, {steps} rewrite steps"))
}

fn c7() -> Check {
    let mut rng = StdRng::seed_from_u64(7);
    let gen = |kw, k| Gen {
        props: &PROPS,
        agents: &AGENTS,
        kw,
        k,
        announce: false,
        derived: true,
    };
    for _ in 0..500 {
        let m = random_model(&mut rng, 4, &AGENTS, &PROPS);
        let w = m.worlds()[rng.gen_range(0..m.worlds().len())].clone();
        let phi = random_formula(&mut rng, gen(true, false), 4);
        let t = kw_to_el(&phi).map_err(|e| e.to_string())?;
        ensure(mc(&m, &w, &phi).unwrap() == mc(&m, &w, &t).unwrap(), format!("t on {phi}"))?;
    }
    for _ in 0..500 {
        let m = random_model_in(&mut rng, FrameClass::T, 4, &AGENTS, &PROPS);
        let w = m.worlds()[rng.gen_range(0..m.worlds().len())].clone();
        let phi = random_formula(&mut rng, gen(false, true), 4);
        let t = el_to_kw(&phi).map_err(|e| e.to_string())?;
        ensure(mc(&m, &w, &phi).unwrap() == mc(&m, &w, &t).unwrap(), format!("t' on {phi}"))?;
    }
    let (m1, kp) = (fixtures::m1(), f("K[i]p"));
    let tk = el_to_kw(&kp).unwrap();
    let (before, after) = (mc(&m1, "t", &kp).unwrap(), mc(&m1, "t", &tk).unwrap());
    ensure(before && !after, "t' failure on M1 not reproduced")?;
    Ok(format!("1000 triples agree; on M1 at t K[i]p = 1 but {tk} = 0"))
}

/// Ten single-step corruptions with the step that must be rejected.
const MUTATIONS: [(&str, usize); 10] = [
    ("lemma17.prf", 5),
    ("lemma18.prf", 8),
    ("lemma48.prf", 4),
    ("lemma49.prf", 10),
    ("kw4_in_s4.prf", 2),
    ("ig_i3.prf", 39),
    ("ig_ri.prf", 12),
    ("s4_wm.prf", 4),
    ("lb_kwcon.prf", 2),
    ("lb_kwt.prf", 6),
];

fn certify(d: &Derivation) -> Result<FrameClass, String> {
    let name = d.system.as_deref().ok_or("no system header")?;
    let sys = system(name).ok_or(format!("unknown system {name}"))?;
    check_derivation(d, &sys).map_err(|e| e.to_string())?;
    Ok(sys.class)
}

fn c8() -> Check {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../proofs");
    let load = |file: &str| -> Result<Derivation, String> {
        let text = std::fs::read_to_string(dir.join(file)).map_err(|e| format!("{file}: {e}"))?;
        Derivation::parse(&text).map_err(|e| format!("{file}: {e}"))
    };
    let entries = corpus();
    for e in &entries {
        let d = load(e.file)?;
        let class = certify(&d).map_err(|m| format!("{}: {m}", e.file))?;
        ensure(is_valid(d.conclusion().unwrap(), class), format!("{} not valid", e.file))?;
    }
    for k in 1..=4 {
        let d = gen_prop19(k);
        let class = certify(&d).map_err(|m| format!("gen_prop19({k}): {m}"))?;
        ensure(is_valid(d.conclusion().unwrap(), class), format!("gen_prop19({k}) not valid"))?;
    }
    let swap = |g: &Formula| {
        g.map_props(&|n| match n {
            "p" => Some(Formula::prop("q")),
            "q" => Some(Formula::prop("p")),
            _ => None,
        })
    };
    for (file, step) in MUTATIONS {
        let mut d = load(file)?;
        d.steps[step - 1].formula = swap(&d.steps[step - 1].formula);
        let sys = system(d.system.as_deref().unwrap()).unwrap();
        match check_derivation(&d, &sys) {
            Err(e) if e.step == step => {}
            Err(e) => return Err(format!("{file}: rejected at step {} not {step}", e.step)),
            Ok(()) => return Err(format!("{file}: mutation at {step} accepted")),
        }
    }
    Ok(format!(
        "{} files + gen_prop19(1..4) certified and valid; 10 mutations rejected",
        entries.len()
    ))
}

fn c9() -> Check {
    let classes = [FrameClass::K, FrameClass::T, FrameClass::K4, FrameClass::S5];
    let formulas: Vec<Formula> = enumerate_formulas(&["p"], &["i"], LanguageTag::PLKwK, 5).collect();
    let mut invalid = 0;
    for class in classes {
        for g in &formulas {
            let refuted = bounded_countermodel(g, class, 3, &["i"]).is_some();
            match valid(g, class).unwrap().verdict {
                Verdict::Valid => ensure(!refuted, format!("{class}: {g} valid but refuted"))?,
                Verdict::Invalid { countermodel, point } => {
                    invalid += 1;
                    ensure(countermodel.frame().is_in_class(class), format!("{class}: {g} class"))?;
                    ensure(!mc(&countermodel, &point, g).unwrap(), format!("{class}: {g} model"))?;
                }
                Verdict::ResourceLimit => return Err(format!("{class}: budget on {g}")),
            }
        }
    }
    Ok(format!("{} formulas x 4 classes, {invalid} countermodels verified", formulas.len()))
}

fn c10() -> Check {
    ensure(is_valid(&f("p -> [q]p"), FrameClass::K), "p -> [q]p not valid")?;
    let inst = f("~Kw[i]q -> [q]~Kw[i]q");
    ensure(!mc(&fixtures::sec6(), "s", &inst).unwrap(), "substitution instance holds")?;
    ensure(!is_valid(&inst, FrameClass::K), "substitution instance judged valid")?;
    Ok("p -> [q]p valid over K; ~Kw[i]q -> [q]~Kw[i]q false at s".into())
}

type Criterion = (&'static str, fn() -> Check, Duration);

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 10] = [
        ("M1 fixture", c1, Duration::from_millis(1)),
        ("axiom soundness", c2, secs(30)),
        ("frame undefinability", c3, secs(10)),
        ("incompleteness fixtures", c4, secs(30)),
        ("G4 refutation", c5, Duration::MAX),
        ("reduction correctness", c6, secs(60)),
        ("translations", c7, Duration::MAX),
        ("proof corpus", c8, Duration::MAX),
        ("decision oracle", c9, secs(300)),
        ("non-substitution witness", c10, Duration::MAX),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut result = run();
        let took = start.elapsed();
        if result.is_ok() && took > limit {
            result = Err(format!("took {took:?}, limit {limit:?}"));
        }
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += result.is_err() as usize;
        println!("{tag} criterion {}: {name} ({took:.2?}): {detail}", k + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
