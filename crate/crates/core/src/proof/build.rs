//! Builder for derivations, the derived-lemma generators they share, the
//! `gen_prop19` family and the shipped corpus.
//!
//! Lemma generators take the formulas to instantiate and return the line
//! number of their conclusion. Every derived lemma a proof cites is inlined
//! as a full sub-derivation, so each file checks on its own.

use super::check::{Derivation, Justification, Step};
use crate::formula::{parse, parse_schema, Formula};

const AGENT: &str = "i";

/// Instantiates a template whose uppercase words are placeholders.
fn t(template: &str, binds: &[(&str, &Formula)]) -> Formula {
    let pat = parse_schema(template).expect("template parses");
    pat.map_props(&|name| {
        binds
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, f)| (*f).clone())
    })
}

fn f(s: &str) -> Formula {
    parse(s).expect("corpus formula parses")
}

pub struct Builder {
    d: Derivation,
}

impl Builder {
    pub fn new(system: &str) -> Builder {
        Builder {
            d: Derivation {
                system: Some(system.to_string()),
                steps: Vec::new(),
            },
        }
    }

    fn push(&mut self, formula: Formula, just: Justification) -> usize {
        self.d.steps.push(Step { formula, just });
        self.d.steps.len()
    }

    pub fn line(&self, k: usize) -> &Formula {
        &self.d.steps[k - 1].formula
    }

    pub fn axiom(&mut self, name: &str, formula: Formula) -> usize {
        self.push(formula, Justification::Axiom(name.to_string()))
    }

    pub fn taut(&mut self, formula: Formula) -> usize {
        self.push(formula, Justification::Taut)
    }

    pub fn pc(&mut self, formula: Formula, from: &[usize]) -> usize {
        self.push(formula, Justification::Pc(from.to_vec()))
    }

    pub fn mp(&mut self, formula: Formula, a: usize, b: usize) -> usize {
        self.push(formula, Justification::Mp(a, b))
    }

    pub fn neckw(&mut self, k: usize) -> usize {
        let g = Formula::kw(AGENT, self.line(k).clone());
        self.push(g, Justification::NecKw(k, AGENT.into()))
    }

    /// REKw on a biconditional line.
    pub fn rekw(&mut self, k: usize) -> usize {
        let Formula::Iff(a, b) = self.line(k).clone() else {
            panic!("rekw on a non-biconditional line {k}")
        };
        let g = Formula::iff(Formula::kw(AGENT, *a), Formula::kw(AGENT, *b));
        self.push(g, Justification::ReKw(k, AGENT.into()))
    }

    /// A tautological biconditional followed by REKw on it.
    pub fn taut_rekw(&mut self, iff: Formula) -> usize {
        let k = self.taut(iff);
        self.rekw(k)
    }

    pub fn sub(&mut self, k: usize, context: Formula, hole: &str) -> usize {
        let Formula::Iff(a, b) = self.line(k).clone() else {
            panic!("sub on a non-biconditional line {k}")
        };
        let g = Formula::iff(context.substitute(hole, &a), context.substitute(hole, &b));
        self.push(g, Justification::Sub(k, context, hole.to_string()))
    }

    pub fn ri(&mut self, k: usize, chi: Formula) -> usize {
        let phi = self.line(k).clone();
        let g = t(
            "Kw[i]PHI & (~Kw[i]CHI -> ~Kw[i](CHI & PHI))",
            &[("PHI", &phi), ("CHI", &chi)],
        );
        self.push(g, Justification::Ri(k, chi))
    }

    pub fn wm(&mut self, k: usize) -> usize {
        let Formula::Implies(ante, psi) = self.line(k).clone() else {
            panic!("wm on a non-implication line {k}")
        };
        let g = Formula::implies(*ante, Formula::and(Formula::kw(AGENT, (*psi).clone()), *psi));
        self.push(g, Justification::Wm(k))
    }

    /// WM followed by dropping the second conjunct of its consequent.
    pub fn wm_kw(&mut self, k: usize) -> usize {
        let w = self.wm(k);
        let Formula::Implies(ante, cons) = self.line(w).clone() else {
            unreachable!()
        };
        let Formula::And(kw, _) = *cons else {
            unreachable!()
        };
        self.pc(Formula::implies(*ante, *kw), &[w])
    }

    pub fn len(&self) -> usize {
        self.d.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.steps.is_empty()
    }

    pub fn finish(self) -> Derivation {
        self.d
    }
}

/// `Kw χ ∧ Kw(¬χ → φ) ∧ ¬Kw φ ∧ Kw(χ → ψ) → Kw ψ`, five lines.
pub fn lemma17(b: &mut Builder, phi: &Formula, psi: &Formula, chi: &Formula) -> usize {
    let s = [("PHI", phi), ("PSI", psi), ("CHI", chi)];
    let l1 = b.axiom("KwCon", t("Kw[i](CHI -> PHI) & Kw[i](~CHI -> PHI) -> Kw[i]PHI", &s));
    let l2 = b.axiom("KwDis", t("Kw[i]CHI -> Kw[i](CHI -> PHI) | Kw[i](~CHI -> PSI)", &s));
    let l3 = b.axiom("KwCon", t("Kw[i](CHI -> PSI) & Kw[i](~CHI -> PSI) -> Kw[i]PSI", &s));
    let l4 = b.pc(
        t("Kw[i]CHI & Kw[i](~CHI -> PHI) & ~Kw[i]PHI -> Kw[i](~CHI -> PSI)", &s),
        &[l1, l2],
    );
    b.pc(
        t(
            "Kw[i]CHI & Kw[i](~CHI -> PHI) & ~Kw[i]PHI & Kw[i](CHI -> PSI) -> Kw[i]PSI",
            &s,
        ),
        &[l3, l4],
    )
}

/// `Kw(φ ∧ ¬ψ → χ) ∧ Kw ψ ∧ Kw(ψ → δ) ∧ ¬Kw δ → Kw(φ → χ)`.
pub fn lemma18(b: &mut Builder, phi: &Formula, psi: &Formula, chi: &Formula, delta: &Formula) -> usize {
    let s = [("PHI", phi), ("PSI", psi), ("CHI", chi), ("DELTA", delta)];
    let l1 = lemma17(b, &t("PHI -> CHI", &s), delta, psi);
    let l2 = b.pc(
        t(
            "Kw[i](~PSI -> (PHI -> CHI)) & Kw[i]PSI & Kw[i](PSI -> DELTA) & ~Kw[i]DELTA -> Kw[i](PHI -> CHI)",
            &s,
        ),
        &[l1],
    );
    let l4 = b.taut_rekw(t("(PHI & ~PSI -> CHI) <-> (~PSI -> (PHI -> CHI))", &s));
    b.pc(
        t(
            "Kw[i](PHI & ~PSI -> CHI) & Kw[i]PSI & Kw[i](PSI -> DELTA) & ~Kw[i]DELTA -> Kw[i](PHI -> CHI)",
            &s,
        ),
        &[l2, l4],
    )
}

/// `Kw x <-> Kw ¬y` style step: from `a <-> ¬c` derive `Kw a <-> Kw c`.
fn kw_through_negation(b: &mut Builder, a: &Formula, c: &Formula) -> usize {
    let s = [("A", a), ("C", c)];
    let l1 = b.taut_rekw(t("A <-> ~C", &s));
    let l2 = b.axiom("Kw<->", t("Kw[i]C <-> Kw[i]~C", &s));
    b.pc(t("Kw[i]A <-> Kw[i]C", &s), &[l1, l2])
}

/// `Kw(χ ∧ φ) ∧ Kw(¬χ ∧ φ) → Kw φ`.
pub fn lemma48(b: &mut Builder, chi: &Formula, phi: &Formula) -> usize {
    let s = [("PHI", phi), ("CHI", chi)];
    let l4 = kw_through_negation(b, &t("CHI & PHI", &s), &t("CHI -> ~PHI", &s));
    let l6 = kw_through_negation(b, &t("~CHI & PHI", &s), &t("~CHI -> ~PHI", &s));
    let l7 = b.axiom("KwCon", t("Kw[i](CHI -> ~PHI) & Kw[i](~CHI -> ~PHI) -> Kw[i]~PHI", &s));
    let l8 = b.pc(t("Kw[i](CHI & PHI) & Kw[i](~CHI & PHI) -> Kw[i]~PHI", &s), &[l7, l4, l6]);
    let l9 = b.axiom("Kw<->", t("Kw[i]PHI <-> Kw[i]~PHI", &s));
    b.pc(t("Kw[i](CHI & PHI) & Kw[i](~CHI & PHI) -> Kw[i]PHI", &s), &[l8, l9])
}

/// `Kw φ → Kw(φ ∧ ψ) ∨ Kw(¬φ ∧ χ)`.
pub fn lemma49(b: &mut Builder, phi: &Formula, psi: &Formula, chi: &Formula) -> usize {
    let s = [("PHI", phi), ("PSI", psi), ("CHI", chi)];
    let l4 = kw_through_negation(b, &t("PHI & PSI", &s), &t("PHI -> ~PSI", &s));
    let l6 = kw_through_negation(b, &t("~PHI & CHI", &s), &t("~PHI -> ~CHI", &s));
    let l7 = b.axiom("KwDis", t("Kw[i]PHI -> Kw[i](PHI -> ~PSI) | Kw[i](~PHI -> ~CHI)", &s));
    b.pc(t("Kw[i]PHI -> Kw[i](PHI & PSI) | Kw[i](~PHI & CHI)", &s), &[l7, l4, l6])
}

/// `Kw φ ∧ Kw ψ → Kw(φ ∧ ψ)`.
pub fn kw_and(b: &mut Builder, phi: &Formula, psi: &Formula) -> usize {
    let s = [("PHI", phi), ("PSI", psi)];
    let l1 = lemma49(b, phi, psi, &t("~(PHI & PSI)", &s));
    let l2 = lemma49(b, psi, phi, phi);
    let l3 = b.taut_rekw(t("PHI & PSI <-> PSI & PHI", &s));
    let l4 = b.pc(t("Kw[i]PSI -> Kw[i](PHI & PSI) | Kw[i](~PSI & PHI)", &s), &[l2, l3]);
    let l6 = b.taut_rekw(t("~PSI & PHI <-> PHI & ~(PHI & PSI)", &s));
    let l7 = b.pc(
        t("Kw[i]PSI -> Kw[i](PHI & PSI) | Kw[i](PHI & ~(PHI & PSI))", &s),
        &[l4, l6],
    );
    let l8 = lemma48(b, phi, &t("~(PHI & PSI)", &s));
    let l9 = b.axiom("Kw<->", t("Kw[i](PHI & PSI) <-> Kw[i]~(PHI & PSI)", &s));
    let l10 = b.pc(
        t(
            "Kw[i](PHI & ~(PHI & PSI)) & Kw[i](~PHI & ~(PHI & PSI)) -> Kw[i](PHI & PSI)",
            &s,
        ),
        &[l8, l9],
    );
    let l11 = b.pc(
        t(
            "Kw[i]PHI & Kw[i]PSI -> Kw[i](PHI & PSI) | Kw[i](PHI & ~(PHI & PSI)) & Kw[i](~PHI & ~(PHI & PSI))",
            &s,
        ),
        &[l1, l7],
    );
    b.pc(t("Kw[i]PHI & Kw[i]PSI -> Kw[i](PHI & PSI)", &s), &[l10, l11])
}

/// `Kw φ ∧ ¬Kw(χ₁ ∧ φ) ∧ Kw(φ → ψ) → Kw ψ`.
fn i3_first(b: &mut Builder, phi: &Formula, psi: &Formula, chi1: &Formula) -> usize {
    let s = [("PHI", phi), ("PSI", psi), ("CHI", chi1)];
    let l2 = b.taut_rekw(t("~(CHI & PHI) <-> (PHI -> ~CHI)", &s));
    let l3 = b.axiom("Kw<->", t("Kw[i](CHI & PHI) <-> Kw[i]~(CHI & PHI)", &s));
    let l4 = b.pc(t("Kw[i](CHI & PHI) <-> Kw[i](PHI -> ~CHI)", &s), &[l2, l3]);
    let l5 = b.axiom(
        "KwDis",
        t("Kw[i]PHI -> Kw[i](PHI -> ~CHI) | Kw[i](~PHI -> CHI & PHI)", &s),
    );
    let l6 = b.pc(
        t("Kw[i]PHI & ~Kw[i](PHI -> ~CHI) -> Kw[i](~PHI -> CHI & PHI)", &s),
        &[l5],
    );
    let l7 = b.pc(
        t("Kw[i]PHI & ~Kw[i](CHI & PHI) -> Kw[i](~PHI -> CHI & PHI)", &s),
        &[l4, l6],
    );
    let l8 = lemma17(b, &t("CHI & PHI", &s), psi, phi);
    b.pc(
        t("Kw[i]PHI & ~Kw[i](CHI & PHI) & Kw[i](PHI -> PSI) -> Kw[i]PSI", &s),
        &[l7, l8],
    )
}

/// The I3 instance for the given formulas.
fn i3(b: &mut Builder, phi: &Formula, psi: &Formula, chi1: &Formula, chi2: &Formula) -> usize {
    let s = [("PHI", phi), ("PSI", psi), ("CHI1", chi1), ("CHI2", chi2)];
    let star = i3_first(b, phi, psi, chi1);
    let l1 = kw_and(b, phi, psi);
    let both = kw_and(b, &t("PHI & PSI", &s), &t("CHI1 & PSI", &s));
    let regroup = b.taut_rekw(t("(PHI & PSI) & (CHI1 & PSI) <-> PSI & (PHI & CHI1)", &s));
    let l2 = b.pc(
        t("Kw[i](PHI & PSI) & Kw[i](CHI1 & PSI) -> Kw[i](PSI & (PHI & CHI1))", &s),
        &[both, regroup],
    );
    let l3 = b.pc(
        t("Kw[i]PHI & Kw[i]PSI & Kw[i](CHI1 & PSI) -> Kw[i](PSI & (PHI & CHI1))", &s),
        &[l1, l2],
    );
    let l4 = lemma48(b, psi, &t("PHI & CHI1", &s));
    let l5 = b.pc(
        t(
            "Kw[i]PHI & Kw[i]PSI & Kw[i](CHI1 & PSI) & Kw[i](~PSI & (PHI & CHI1)) -> Kw[i](PHI & CHI1)",
            &s,
        ),
        &[l3, l4],
    );
    let l6 = lemma49(b, &t("PHI -> PSI", &s), chi2, chi1);
    let l7 = b.pc(
        t(
            "Kw[i](PHI -> PSI) & ~Kw[i]((PHI -> PSI) & CHI2) -> Kw[i](~(PHI -> PSI) & CHI1)",
            &s,
        ),
        &[l6],
    );
    let l8 = b.taut_rekw(t("~PSI & (PHI & CHI1) <-> ~(PHI -> PSI) & CHI1", &s));
    let l9 = b.pc(
        t(
            "Kw[i](PHI -> PSI) & ~Kw[i]((PHI -> PSI) & CHI2) -> Kw[i](~PSI & (PHI & CHI1))",
            &s,
        ),
        &[l7, l8],
    );
    let l10 = b.pc(
        t(
            "Kw[i]PHI & Kw[i]PSI & Kw[i](CHI1 & PSI) & Kw[i](PHI -> PSI) & ~Kw[i]((PHI -> PSI) & CHI2) \
             -> Kw[i](PHI & CHI1)",
            &s,
        ),
        &[l5, l9],
    );
    let l11 = b.pc(
        t(
            "Kw[i]PHI & Kw[i]PSI & ~Kw[i](PHI & CHI1) & Kw[i](PHI -> PSI) & ~Kw[i]((PHI -> PSI) & CHI2) \
             -> ~Kw[i](CHI1 & PSI)",
            &s,
        ),
        &[l10],
    );
    let l12 = b.taut_rekw(t("CHI1 & PHI <-> PHI & CHI1", &s));
    let l13 = b.taut_rekw(t("CHI2 & (PHI -> PSI) <-> (PHI -> PSI) & CHI2", &s));
    let l14 = b.pc(
        t(
            "Kw[i]PHI & Kw[i]PSI & ~Kw[i](CHI1 & PHI) & Kw[i](PHI -> PSI) & ~Kw[i](CHI2 & (PHI -> PSI)) \
             -> ~Kw[i](CHI1 & PSI)",
            &s,
        ),
        &[l11, l12, l13],
    );
    let l16 = b.pc(
        t(
            "Kw[i]PHI & ~Kw[i](CHI1 & PHI) & Kw[i](PHI -> PSI) & ~Kw[i](CHI2 & (PHI -> PSI)) \
             -> ~Kw[i](CHI1 & PSI)",
            &s,
        ),
        &[l14, star],
    );
    b.pc(
        t(
            "Kw[i]PHI & ~Kw[i](CHI1 & PHI) & Kw[i](PHI -> PSI) & ~Kw[i](CHI2 & (PHI -> PSI)) \
             -> Kw[i]PSI & ~Kw[i](CHI1 & PSI)",
            &s,
        ),
        &[star, l16],
    )
}

fn kw(f: &Formula) -> Formula {
    Formula::kw(AGENT, f.clone())
}

/// The theorem proved by `gen_prop19` for the given formulas.
pub fn prop19_statement(phi: &Formula, chis: &[Formula], psis: &[Formula]) -> Formula {
    let neg_chis = Formula::conj(chis.iter().map(|c| Formula::not(c.clone())));
    Formula::implies(
        Formula::conj([
            Formula::conj(chis.iter().map(kw)),
            kw(&Formula::implies(neg_chis, phi.clone())),
            Formula::not(kw(phi)),
            Formula::conj(
                chis.iter()
                    .zip(psis)
                    .map(|(c, p)| kw(&Formula::implies(c.clone(), p.clone()))),
            ),
        ]),
        Formula::disj(psis.iter().map(kw)),
    )
}

/// Derivation in PLKw of the disjunctive Kw theorem for `k` pairs, with
/// `φ = p`, `χ_j = cj` and `ψ_j = dj`.
pub fn gen_prop19(k: usize) -> Derivation {
    let chis: Vec<Formula> = (1..=k).map(|j| Formula::prop(&format!("c{j}"))).collect();
    let psis: Vec<Formula> = (1..=k).map(|j| Formula::prop(&format!("d{j}"))).collect();
    gen_prop19_with(&Formula::prop("p"), &chis, &psis)
}

/// As [`gen_prop19`] with caller-chosen formulas. `chis` and `psis` must be
/// non-empty and of equal length.
pub fn gen_prop19_with(phi: &Formula, chis: &[Formula], psis: &[Formula]) -> Derivation {
    assert!(!chis.is_empty() && chis.len() == psis.len(), "need k >= 1 pairs");
    let mut b = Builder::new("PLKw");
    let mut ih = lemma17(&mut b, phi, &psis[0], &chis[0]);
    for m in 1..chis.len() {
        let (chi_next, psi_next) = (&chis[m], &psis[m]);
        let l1 = b.pc(b.line(ih).clone(), &[ih]);
        let neg_m = Formula::conj(chis[..m].iter().map(|c| Formula::not(c.clone())));
        let l2 = lemma18(&mut b, &neg_m, chi_next, phi, psi_next);
        // Conjunctions nest to the left, so this line repeats line 2.
        let l3 = b.pc(b.line(l2).clone(), &[l2]);
        let s = [
            ("NEGM1", &Formula::conj(chis[..=m].iter().map(|c| Formula::not(c.clone())))),
            ("KWCHIS1", &Formula::conj(chis[..=m].iter().map(kw))),
            (
                "KWIMPS1",
                &Formula::conj(
                    chis[..=m]
                        .iter()
                        .zip(psis)
                        .map(|(c, p)| kw(&Formula::implies(c.clone(), p.clone()))),
                ),
            ),
            ("PSIN", psi_next),
            ("PHI", phi),
        ];
        let ante = t(
            "Kw[i](NEGM1 -> PHI) & KWCHIS1 & KWIMPS1 & ~Kw[i]PSIN & ~Kw[i]PHI",
            &s,
        );
        let Formula::Implies(ih_ante, ih_cons) = b.line(ih).clone() else {
            unreachable!()
        };
        let l4 = b.pc(Formula::implies(ante.clone(), *ih_ante), &[l3]);
        let l5 = b.pc(Formula::implies(ante, *ih_cons), &[l1, l4]);
        ih = b.pc(prop19_statement(phi, &chis[..=m], &psis[..=m]), &[l5]);
    }
    b.finish()
}

/// One file of the shipped corpus.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// File name under `proofs/`.
    pub file: &'static str,
    pub description: &'static str,
    pub derivation: Derivation,
}

impl CorpusEntry {
    pub fn file_text(&self) -> String {
        format!("# {}\n{}", self.description, self.derivation.render())
    }
}

fn entry(file: &'static str, description: &'static str, b: Builder) -> CorpusEntry {
    CorpusEntry {
        file,
        description,
        derivation: b.finish(),
    }
}

/// Every derivation shipped under `proofs/`, with `φ = p`, `ψ = q`,
/// `χ = r`, `δ = s` (and `χ₁ = r`, `χ₂ = s` for I3).
pub fn corpus() -> Vec<CorpusEntry> {
    let (p, q, r, s) = (f("p"), f("q"), f("r"), f("s"));
    let mut out = Vec::new();

    let mut b = Builder::new("PLKw");
    lemma17(&mut b, &p, &q, &r);
    out.push(entry("lemma17.prf", "Kw r & Kw(~r -> p) & ~Kw p & Kw(r -> q) -> Kw q", b));

    let mut b = Builder::new("PLKw");
    lemma18(&mut b, &p, &q, &r, &s);
    out.push(entry(
        "lemma18.prf",
        "Kw(p & ~q -> r) & Kw q & Kw(q -> s) & ~Kw s -> Kw(p -> r)",
        b,
    ));

    for (file, system, negate, axiom, description) in [
        ("kw4_in_s4.prf", "PLKwS4", false, "wKw4", "Kw4 from KwT and wKw4"),
        ("kw5_in_s5.prf", "PLKwS5", true, "wKw5", "Kw5 from KwT and wKw5"),
    ] {
        let mut b = Builder::new(system);
        let base = if negate { f("~Kw[i]p") } else { f("Kw[i]p") };
        let sb = [("B", &base), ("PSI", &q)];
        let l1 = b.taut(t("B -> B | PSI", &sb));
        let l2 = b.neckw(l1);
        let l3 = b.axiom("KwT", t("Kw[i]B & Kw[i](B -> B | PSI) & B -> Kw[i](B | PSI)", &sb));
        let l4 = b.pc(t("Kw[i]B & B -> Kw[i](B | PSI)", &sb), &[l2, l3]);
        let l5 = b.axiom(axiom, t("B -> Kw[i]B", &sb));
        b.pc(t("B -> Kw[i](B | PSI)", &sb), &[l4, l5]);
        out.push(entry(file, description, b));
    }

    let mut b = Builder::new("PLKw");
    lemma48(&mut b, &r, &p);
    out.push(entry("lemma48.prf", "Kw(r & p) & Kw(~r & p) -> Kw p", b));

    let mut b = Builder::new("PLKw");
    lemma49(&mut b, &p, &q, &r);
    out.push(entry("lemma49.prf", "Kw p -> Kw(p & q) | Kw(~p & r)", b));

    let mut b = Builder::new("PLKw");
    let l = b.axiom("Kw<->", f("Kw[i]p <-> Kw[i]~p"));
    b.pc(f("~Kw[i]p <-> ~Kw[i]~p"), &[l]);
    out.push(entry("ig_i1.prf", "I1 in PLKw", b));

    let mut b = Builder::new("PLKw");
    let l = kw_and(&mut b, &p, &q);
    b.pc(f("~Kw[i](p & q) -> ~Kw[i]p | ~Kw[i]q"), &[l]);
    out.push(entry("ig_i2.prf", "I2 in PLKw, via Kw p & Kw q -> Kw(p & q)", b));

    let mut b = Builder::new("PLKw");
    i3(&mut b, &p, &q, &r, &s);
    out.push(entry("ig_i3.prf", "I3 in PLKw", b));

    let mut b = Builder::new("PLKw");
    let l1 = lemma48(&mut b, &q, &r);
    let l2 = b.taut_rekw(f("r & q <-> q & r"));
    let l3 = b.taut_rekw(f("r & ~q <-> ~q & r"));
    let l4 = b.pc(f("~Kw[i]r -> ~Kw[i](r & q) | ~Kw[i](r & ~q)"), &[l1, l2, l3]);
    b.pc(f("Kw[i]q & ~Kw[i]r -> ~Kw[i](r & q) | ~Kw[i](r & ~q)"), &[l4]);
    out.push(entry("ig_i4.prf", "I4 in PLKw, via ~Kw r -> ~Kw(r & q) | ~Kw(r & ~q)", b));

    // RI for the theorem p | ~p and chi = r.
    let mut b = Builder::new("PLKw");
    let l1 = b.taut(f("p | ~p"));
    let l2 = b.neckw(l1);
    let l3 = b.pc(f("~(p | ~p) -> ~r"), &[l1]);
    let l4 = b.neckw(l3);
    let l5 = b.axiom("KwCon", f("Kw[i](p | ~p -> ~r) & Kw[i](~(p | ~p) -> ~r) -> Kw[i]~r"));
    let l6 = b.pc(f("Kw[i](p | ~p -> ~r) -> Kw[i]~r"), &[l4, l5]);
    let l8 = b.taut_rekw(f("r & (p | ~p) <-> ~(p | ~p -> ~r)"));
    let l9 = b.axiom("Kw<->", f("Kw[i](p | ~p -> ~r) <-> Kw[i]~(p | ~p -> ~r)"));
    let l10 = b.axiom("Kw<->", f("Kw[i]r <-> Kw[i]~r"));
    let l11 = b.pc(f("Kw[i](r & (p | ~p)) -> Kw[i]r"), &[l6, l8, l9, l10]);
    b.pc(f("Kw[i](p | ~p) & (~Kw[i]r -> ~Kw[i](r & (p | ~p)))"), &[l2, l11]);
    out.push(entry("ig_ri.prf", "RI applied to p | ~p with chi = r, replayed in PLKw", b));

    // Sub for (p & q) <-> (q & p) in the context Kw(~Kw x -> r).
    let mut b = Builder::new("PLKw");
    let l1 = b.taut(f("p & q <-> q & p"));
    let l2 = b.rekw(l1);
    let l3 = b.pc(f("(~Kw[i](p & q) -> r) <-> (~Kw[i](q & p) -> r)"), &[l2]);
    b.rekw(l3);
    b.sub(l1, f("Kw[i](~Kw[i]x -> r)"), "x");
    out.push(entry("ig_sub.prf", "Sub replayed by REKw and PC, then applied directly", b));

    let mut b = Builder::new("PLKwS4");
    let l1 = b.taut(f("top"));
    let l2 = b.neckw(l1);
    b.pc(f("Kw[i]top <-> top"), &[l2]);
    out.push(entry("s4_n.prf", "N in PLKwS4", b));

    let mut b = Builder::new("PLKwS4");
    b.axiom("Kw<->", f("Kw[i]p <-> Kw[i]~p"));
    out.push(entry("s4_z.prf", "Z in PLKwS4", b));

    let mut b = Builder::new("PLKwS4");
    kw_and(&mut b, &p, &q);
    out.push(entry("s4_r.prf", "R in PLKwS4", b));

    // WM for the theorem Kw p & p -> p | q.
    let mut b = Builder::new("PLKwS4");
    let l1 = b.taut(f("Kw[i]p & p -> p | q"));
    let l2 = b.neckw(l1);
    let l3 = b.axiom(
        "KwT",
        f("Kw[i](Kw[i]p & p) & Kw[i](Kw[i]p & p -> p | q) & (Kw[i]p & p) -> Kw[i](p | q)"),
    );
    let l4 = b.pc(f("Kw[i](Kw[i]p & p) & (Kw[i]p & p) -> Kw[i](p | q)"), &[l2, l3]);
    let l5 = b.axiom("wKw4", f("Kw[i]p -> Kw[i]Kw[i]p"));
    let l6 = kw_and(&mut b, &f("Kw[i]p"), &p);
    let l7 = b.pc(f("Kw[i]p & p -> Kw[i](p | q)"), &[l4, l5, l6]);
    b.pc(f("Kw[i]p & p -> Kw[i](p | q) & (p | q)"), &[l1, l7]);
    out.push(entry("s4_wm.prf", "WM applied to Kw p & p -> p | q, replayed in PLKwS4", b));

    let mut b = Builder::new("LB");
    let l1 = b.taut(f("Kw[i]p & p -> p | q"));
    b.wm_kw(l1);
    out.push(entry("lb_wm_kw.prf", "From Kw p & p -> p | q to Kw p & p -> Kw(p | q)", b));

    let mut b = Builder::new("LB");
    let l1 = b.taut(f("(r -> p) & (~r -> p) <-> p"));
    let l2 = b.sub(l1, f("Kw[i]x"), "x");
    let l3 = b.axiom("R", f("Kw[i](r -> p) & Kw[i](~r -> p) -> Kw[i]((r -> p) & (~r -> p))"));
    b.pc(f("Kw[i](r -> p) & Kw[i](~r -> p) -> Kw[i]p"), &[l2, l3]);
    out.push(entry("lb_kwcon.prf", "KwCon in LB", b));

    let mut b = Builder::new("LB");
    let l1 = b.taut(f("p -> (~p -> r)"));
    let l2 = b.pc(f("Kw[i]p & p -> (~p -> r)"), &[l1]);
    let l3 = b.wm_kw(l2);
    let l4 = b.taut(f("~p -> (p -> q)"));
    let l5a = b.pc(f("Kw[i]~p & ~p -> (p -> q)"), &[l4]);
    let l5 = b.wm_kw(l5a);
    let z = b.axiom("Z", f("Kw[i]p <-> Kw[i]~p"));
    let l6 = b.pc(f("Kw[i]p & ~p -> Kw[i](p -> q)"), &[l5, z]);
    b.pc(f("Kw[i]p -> Kw[i](p -> q) | Kw[i](~p -> r)"), &[l3, l6]);
    out.push(entry("lb_kwdis.prf", "KwDis in LB", b));

    let mut b = Builder::new("LB");
    let l1 = b.taut(f("p & (p -> q) -> q"));
    let l2 = b.pc(f("Kw[i](p & (p -> q)) & (p & (p -> q)) -> q"), &[l1]);
    let l3 = b.wm_kw(l2);
    let l4 = b.axiom("R", f("Kw[i]p & Kw[i](p -> q) -> Kw[i](p & (p -> q))"));
    let l5 = b.pc(f("Kw[i]p & Kw[i](p -> q) & p & (p -> q) -> Kw[i]q"), &[l3, l4]);
    let l6 = b.taut(f("~(p -> q) -> ~q"));
    let l7a = b.pc(f("Kw[i]~(p -> q) & ~(p -> q) -> ~q"), &[l6]);
    let l7 = b.wm_kw(l7a);
    let z1 = b.axiom("Z", f("Kw[i](p -> q) <-> Kw[i]~(p -> q)"));
    let z2 = b.axiom("Z", f("Kw[i]q <-> Kw[i]~q"));
    let l8 = b.pc(f("Kw[i](p -> q) & ~(p -> q) -> Kw[i]q"), &[l7, z1, z2]);
    let l9 = b.pc(f("Kw[i]p & Kw[i](p -> q) & p & ~(p -> q) -> Kw[i]q"), &[l8]);
    b.pc(f("Kw[i]p & Kw[i](p -> q) & p -> Kw[i]q"), &[l5, l9]);
    out.push(entry("lb_kwt.prf", "KwT in LB", b));

    let mut b = Builder::new("LB");
    let l1 = b.taut(f("Kw[i]p & p -> Kw[i]p"));
    let l2 = b.wm_kw(l1);
    let l3 = b.taut(f("Kw[i]~p & ~p -> Kw[i]~p"));
    let z = b.axiom("Z", f("Kw[i]p <-> Kw[i]~p"));
    let l4 = b.pc(f("Kw[i]~p & ~p -> Kw[i]p"), &[l3, z]);
    let l5 = b.wm_kw(l4);
    let l6 = b.pc(f("Kw[i]p & ~p -> Kw[i]Kw[i]p"), &[l5, z]);
    b.pc(f("Kw[i]p -> Kw[i]Kw[i]p"), &[l2, l6]);
    out.push(entry("lb_wkw4.prf", "wKw4 in LB", b));

    let mut b = Builder::new("LB");
    let l1 = b.taut(f("p | ~p"));
    let l2 = b.pc(f("p | ~p <-> top"), &[l1]);
    let l3 = b.sub(l2, f("Kw[i]x"), "x");
    let l4 = b.axiom("N", f("Kw[i]top <-> top"));
    b.pc(f("Kw[i](p | ~p)"), &[l3, l4]);
    out.push(entry("lb_neckw.prf", "NECKw applied to p | ~p, replayed in LB", b));

    let mut b = Builder::new("LB");
    let l1 = b.taut(f("p & q <-> q & p"));
    b.sub(l1, f("Kw[i]x"), "x");
    out.push(entry("lb_rekw.prf", "REKw applied to p & q <-> q & p, replayed in LB", b));

    out
}
