//! Translations between the knowing-whether language and epistemic logic,
//! and elimination of public announcements by the reduction axioms.

use thiserror::Error;

use crate::formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("{operator} is not allowed in {function}")]
    Unsupported {
        operator: &'static str,
        function: &'static str,
    },
}

fn unsupported(operator: &'static str, function: &'static str) -> TranslateError {
    TranslateError::Unsupported { operator, function }
}

fn rebuild(
    f: &Formula,
    rec: &mut dyn FnMut(&Formula) -> Result<Formula, TranslateError>,
) -> Result<Formula, TranslateError> {
    Ok(match f {
        Formula::Top | Formula::Bot | Formula::Prop(_) => f.clone(),
        Formula::Not(a) => Formula::not(rec(a)?),
        Formula::And(a, b) => Formula::and(rec(a)?, rec(b)?),
        Formula::Or(a, b) => Formula::or(rec(a)?, rec(b)?),
        Formula::Implies(a, b) => Formula::implies(rec(a)?, rec(b)?),
        Formula::Iff(a, b) => Formula::iff(rec(a)?, rec(b)?),
        Formula::Kw(i, a) => Formula::Kw(i.clone(), Box::new(rec(a)?)),
        Formula::K(i, a) => Formula::K(i.clone(), Box::new(rec(a)?)),
        Formula::Announce(a, b) => Formula::announce(rec(a)?, rec(b)?),
    })
}

/// `t`: `Kw[i]φ ↦ K[i]t(φ) | K[i]~t(φ)`, homomorphic elsewhere.
pub fn kw_to_el(f: &Formula) -> Result<Formula, TranslateError> {
    match f {
        Formula::K(..) => Err(unsupported("K", "kw_to_el")),
        Formula::Announce(..) => Err(unsupported("an announcement", "kw_to_el")),
        _ => eliminate_kw_with(f, &mut |g| kw_to_el(g)),
    }
}

/// Like [`kw_to_el`] but leaves `K` in place, for mixed formulas.
pub fn eliminate_kw(f: &Formula) -> Result<Formula, TranslateError> {
    match f {
        Formula::Announce(..) => Err(unsupported("an announcement", "eliminate_kw")),
        _ => eliminate_kw_with(f, &mut |g| eliminate_kw(g)),
    }
}

fn eliminate_kw_with(
    f: &Formula,
    rec: &mut dyn FnMut(&Formula) -> Result<Formula, TranslateError>,
) -> Result<Formula, TranslateError> {
    match f {
        Formula::Kw(i, a) => {
            let t = rec(a)?;
            Ok(Formula::or(
                Formula::K(i.clone(), Box::new(t.clone())),
                Formula::K(i.clone(), Box::new(Formula::not(t))),
            ))
        }
        _ => rebuild(f, rec),
    }
}

/// `t'`: `K[i]φ ↦ t'(φ) & Kw[i]t'(φ)`, homomorphic elsewhere. Truth
/// preserving on reflexive models only.
pub fn el_to_kw(f: &Formula) -> Result<Formula, TranslateError> {
    match f {
        Formula::Kw(..) => Err(unsupported("Kw", "el_to_kw")),
        Formula::Announce(..) => Err(unsupported("an announcement", "el_to_kw")),
        Formula::K(i, a) => {
            let t = el_to_kw(a)?;
            Ok(Formula::and(t.clone(), Formula::Kw(i.clone(), Box::new(t))))
        }
        _ => rebuild(f, &mut |g| el_to_kw(g)),
    }
}

/// Name of a reduction step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    Atom,
    Neg,
    Con,
    Compose,
    Kw,
    Top,
    Bot,
    /// Unfolding a derived connective in an announcement body.
    Expand,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Atom => "!ATOM",
            Axiom::Neg => "!NEG",
            Axiom::Con => "!CON",
            Axiom::Compose => "!!",
            Axiom::Kw => "!Kw",
            Axiom::Top => "!TOP",
            Axiom::Bot => "!BOT",
            Axiom::Expand => "expand",
        }
    }
}

/// One rewrite of a redex `[φ]ψ`: complexity of the redex and of the
/// formula it is replaced by (which may still contain announcements).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub axiom: Axiom,
    pub before: u64,
    pub after: u64,
}

/// Eliminates every announcement. The result is announcement-free and
/// equivalent to `f`.
pub fn reduce(f: &Formula) -> Result<Formula, TranslateError> {
    reduce_traced(f).map(|(g, _)| g)
}

/// [`reduce`], also returning each rewrite performed.
pub fn reduce_traced(f: &Formula) -> Result<(Formula, Vec<RewriteStep>), TranslateError> {
    let mut trace = Vec::new();
    let g = reduce_in(f, &mut trace)?;
    Ok((g, trace))
}

fn reduce_in(f: &Formula, trace: &mut Vec<RewriteStep>) -> Result<Formula, TranslateError> {
    match f {
        Formula::K(..) => Err(unsupported("K", "reduce")),
        Formula::Announce(a, b) => {
            let a = reduce_in(a, trace)?;
            announce(&a, b, trace)
        }
        _ => rebuild(f, &mut |g| reduce_in(g, trace)),
    }
}

/// Announcement-free equivalent of `[phi]body`, where `phi` is already
/// announcement-free. Rewrites top-down from the body's head.
fn announce(
    phi: &Formula,
    body: &Formula,
    trace: &mut Vec<RewriteStep>,
) -> Result<Formula, TranslateError> {
    let redex = || Formula::announce(phi.clone(), body.clone());
    let mut record = |axiom: Axiom, result: &Formula| {
        trace.push(RewriteStep {
            axiom,
            before: redex().complexity(),
            after: result.complexity(),
        })
    };
    let ann = |x: &Formula| Formula::announce(phi.clone(), x.clone());
    match body {
        Formula::Top => {
            record(Axiom::Top, &Formula::Top);
            Ok(Formula::Top)
        }
        Formula::Bot => {
            let out = Formula::implies(phi.clone(), Formula::Bot);
            record(Axiom::Bot, &out);
            Ok(out)
        }
        Formula::Prop(_) => {
            let out = Formula::implies(phi.clone(), body.clone());
            record(Axiom::Atom, &out);
            Ok(out)
        }
        Formula::Not(a) => {
            record(
                Axiom::Neg,
                &Formula::implies(phi.clone(), Formula::not(ann(a))),
            );
            let inner = announce(phi, a, trace)?;
            Ok(Formula::implies(phi.clone(), Formula::not(inner)))
        }
        Formula::And(a, b) => {
            record(Axiom::Con, &Formula::and(ann(a), ann(b)));
            Ok(Formula::and(
                announce(phi, a, trace)?,
                announce(phi, b, trace)?,
            ))
        }
        Formula::Announce(a, b) => {
            let combined = Formula::and(phi.clone(), ann(a));
            record(Axiom::Compose, &Formula::announce(combined, (**b).clone()));
            let combined = Formula::and(phi.clone(), announce(phi, a, trace)?);
            announce(&combined, b, trace)
        }
        Formula::Kw(i, a) => {
            let kw = |x: Formula| Formula::Kw(i.clone(), Box::new(x));
            let neg = Formula::not((**a).clone());
            record(
                Axiom::Kw,
                &Formula::implies(phi.clone(), Formula::or(kw(ann(a)), kw(ann(&neg)))),
            );
            let pos = announce(phi, a, trace)?;
            let neg = announce(phi, &neg, trace)?;
            Ok(Formula::implies(phi.clone(), Formula::or(kw(pos), kw(neg))))
        }
        Formula::K(..) => Err(unsupported("K under an announcement", "reduce")),
        Formula::Or(..) | Formula::Implies(..) | Formula::Iff(..) => {
            let expanded = body.expand_head();
            record(Axiom::Expand, &ann(&expanded));
            announce(phi, &expanded, trace)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::semantics::{fixtures, mc, KripkeModel};

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn t_examples() {
        assert_eq!(kw_to_el(&f("Kw[i]p")).unwrap(), f("K[i]p | K[i]~p"));
        assert_eq!(kw_to_el(&f("p")).unwrap(), f("p"));
        assert_eq!(
            kw_to_el(&f("Kw[i]Kw[j]q")).unwrap(),
            f("K[i](K[j]q | K[j]~q) | K[i]~(K[j]q | K[j]~q)")
        );
        assert!(kw_to_el(&f("K[i]p")).is_err());
        assert!(kw_to_el(&f("[p]q")).is_err());
        assert_eq!(eliminate_kw(&f("K[i]Kw[i]p")).unwrap(), f("K[i](K[i]p | K[i]~p)"));
    }

    #[test]
    fn t_prime_examples() {
        assert_eq!(el_to_kw(&f("K[i]p")).unwrap(), f("p & Kw[i]p"));
        assert_eq!(el_to_kw(&f("~K[i]q")).unwrap(), f("~(q & Kw[i]q)"));
        assert!(el_to_kw(&f("Kw[i]p")).is_err());
        assert!(el_to_kw(&f("[p]q")).is_err());
    }

    #[test]
    fn t_prime_fails_off_reflexive_models() {
        let m: KripkeModel = fixtures::m1();
        let g = f("K[i]p");
        assert_ne!(
            mc(&m, "t", &g).unwrap(),
            mc(&m, "t", &el_to_kw(&g).unwrap()).unwrap()
        );
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&f("[p]q")).unwrap(), f("p -> q"));
        assert_eq!(reduce(&f("[p]~q")).unwrap(), f("p -> ~(p -> q)"));
        assert_eq!(reduce(&f("[p]top")).unwrap(), Formula::Top);
        assert_eq!(reduce(&f("[p]bot")).unwrap(), f("p -> bot"));
        assert_eq!(reduce(&f("[p][q]r")).unwrap(), f("p & (p -> q) -> r"));
        assert_eq!(
            reduce(&f("[p]Kw[i]q")).unwrap(),
            f("p -> Kw[i](p -> q) | Kw[i](p -> ~(p -> q))")
        );
        assert!(reduce(&f("[p]K[i]q")).is_err());
        assert!(reduce(&f("K[i]q")).is_err());
        assert_eq!(reduce(&f("Kw[i]p")).unwrap(), f("Kw[i]p"));
    }

    #[test]
    fn compose_fires_on_nested_announcements() {
        let (_, trace) = reduce_traced(&f("[p][q]r")).unwrap();
        let names: Vec<&str> = trace.iter().map(|s| s.axiom.name()).collect();
        assert_eq!(names, ["!!", "!ATOM", "!ATOM"]);
    }

    #[test]
    fn every_step_decreases_the_redex() {
        for text in [
            "[p]q",
            "[p][q]r",
            "[p]Kw[i](q | [r]~s)",
            "[[p]q](q <-> Kw[i][q]p)",
            "[p]bot & [q -> r]top",
            "[Kw[i]p][q][r]Kw[j]~s",
        ] {
            let (g, trace) = reduce_traced(&f(text)).unwrap();
            assert!(!g.has_announcement(), "{text}");
            assert!(!trace.is_empty());
            for s in trace {
                match s.axiom {
                    Axiom::Expand => assert_eq!(s.before, s.after, "{text}"),
                    _ => assert!(s.before > s.after, "{text}: {s:?}"),
                }
            }
            assert_eq!(reduce(&g).unwrap(), g);
        }
    }
}
