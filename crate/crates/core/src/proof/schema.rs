//! Axiom schemas and syntactic matching.
//!
//! A schema is a formula whose uppercase propositions are metavariables.
//! `I` is the agent metavariable. The metavariable `P` of `!ATOM` matches
//! propositions only.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::formula::{parse_schema, Formula};

/// Schema names and their concrete syntax.
pub const SCHEMAS: &[(&str, &str)] = &[
    ("KwCon", "Kw[I](CHI -> PHI) & Kw[I](~CHI -> PHI) -> Kw[I]PHI"),
    ("KwDis", "Kw[I]PHI -> Kw[I](PHI -> PSI) | Kw[I](~PHI -> CHI)"),
    ("Kw<->", "Kw[I]PHI <-> Kw[I]~PHI"),
    ("KwT", "Kw[I]PHI & Kw[I](PHI -> PSI) & PHI -> Kw[I]PSI"),
    ("Kw4", "Kw[I]PHI -> Kw[I](Kw[I]PHI | PSI)"),
    ("Kw5", "~Kw[I]PHI -> Kw[I](~Kw[I]PHI | PSI)"),
    ("wKw4", "Kw[I]PHI -> Kw[I]Kw[I]PHI"),
    ("wKw5", "~Kw[I]PHI -> Kw[I]~Kw[I]PHI"),
    ("!ATOM", "[PHI]P <-> (PHI -> P)"),
    ("!NEG", "[PHI]~PSI <-> (PHI -> ~[PHI]PSI)"),
    ("!CON", "[PHI](PSI & CHI) <-> [PHI]PSI & [PHI]CHI"),
    ("!!", "[PHI][PSI]CHI <-> [PHI & [PHI]PSI]CHI"),
    ("!Kw", "[PHI]Kw[I]PSI <-> (PHI -> Kw[I][PHI]PSI | Kw[I][PHI]~PSI)"),
    ("I1", "~Kw[I]PHI <-> ~Kw[I]~PHI"),
    ("I2", "~Kw[I](PHI & PSI) -> ~Kw[I]PHI | ~Kw[I]PSI"),
    (
        "I3",
        "Kw[I]PHI & ~Kw[I](CHI1 & PHI) & Kw[I](PHI -> PSI) & ~Kw[I](CHI2 & (PHI -> PSI)) \
         -> Kw[I]PSI & ~Kw[I](CHI1 & PSI)",
    ),
    ("I4", "Kw[I]PSI & ~Kw[I]CHI -> ~Kw[I](CHI & PSI) | ~Kw[I](CHI & ~PSI)"),
    ("N", "Kw[I]top <-> top"),
    ("Z", "Kw[I]PHI <-> Kw[I]~PHI"),
    ("R", "Kw[I]PHI & Kw[I]PSI -> Kw[I](PHI & PSI)"),
];

/// Accepted alternative spellings.
const ALIASES: &[(&str, &str)] = &[("!COM", "!CON"), ("KwIff", "Kw<->")];

pub fn canonical_name(name: &str) -> &str {
    ALIASES
        .iter()
        .find(|(alias, _)| *alias == name)
        .map_or(name, |(_, canon)| canon)
}

/// The parsed schema for `name` (aliases accepted).
pub fn schema(name: &str) -> Option<&'static Formula> {
    static PARSED: OnceLock<BTreeMap<&'static str, Formula>> = OnceLock::new();
    let table = PARSED.get_or_init(|| {
        SCHEMAS
            .iter()
            .map(|(n, text)| (*n, parse_schema(text).expect("built-in schema parses")))
            .collect()
    });
    table.get(canonical_name(name))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings {
    pub formulas: BTreeMap<String, Formula>,
    pub agents: BTreeMap<String, String>,
}

fn is_meta(name: &str) -> bool {
    name.bytes().all(|b| !b.is_ascii_lowercase())
}

fn bind(pat: &Formula, f: &Formula, b: &mut Bindings) -> bool {
    use Formula::*;
    match (pat, f) {
        (Prop(m), _) if is_meta(m) => {
            if m == "P" && !matches!(f, Prop(_)) {
                return false;
            }
            match b.formulas.get(m) {
                Some(prev) => prev == f,
                None => {
                    b.formulas.insert(m.clone(), f.clone());
                    true
                }
            }
        }
        (Top, Top) | (Bot, Bot) => true,
        (Prop(x), Prop(y)) => x == y,
        (Not(x), Not(y)) => bind(x, y, b),
        (And(x1, x2), And(y1, y2))
        | (Or(x1, x2), Or(y1, y2))
        | (Implies(x1, x2), Implies(y1, y2))
        | (Iff(x1, x2), Iff(y1, y2))
        | (Announce(x1, x2), Announce(y1, y2)) => bind(x1, y1, b) && bind(x2, y2, b),
        (Kw(i, x), Kw(j, y)) | (K(i, x), K(j, y)) => {
            let agent_ok = if is_meta(i) {
                b.agents.entry(i.clone()).or_insert_with(|| j.clone()) == j
            } else {
                i == j
            };
            agent_ok && bind(x, y, b)
        }
        _ => false,
    }
}

/// Matches `f` against the named schema, binding every metavariable and
/// the agent consistently.
pub fn match_schema(f: &Formula, name: &str) -> Option<Bindings> {
    let pat = schema(name)?;
    let mut b = Bindings::default();
    bind(pat, f, &mut b).then_some(b)
}

/// Replaces the metavariables of `schema` by their bindings. Unbound
/// metavariables are left in place.
pub fn instantiate(schema: &Formula, b: &Bindings) -> Formula {
    use Formula::*;
    let rec = |g: &Formula| Box::new(instantiate(g, b));
    let agent = |i: &String| b.agents.get(i).cloned().unwrap_or_else(|| i.clone());
    match schema {
        Prop(m) => b.formulas.get(m).cloned().unwrap_or_else(|| schema.clone()),
        Top | Bot => schema.clone(),
        Not(x) => Not(rec(x)),
        And(x, y) => And(rec(x), rec(y)),
        Or(x, y) => Or(rec(x), rec(y)),
        Implies(x, y) => Implies(rec(x), rec(y)),
        Iff(x, y) => Iff(rec(x), rec(y)),
        Announce(x, y) => Announce(rec(x), rec(y)),
        Kw(i, x) => Kw(agent(i), rec(x)),
        K(i, x) => K(agent(i), rec(x)),
    }
}

/// Metavariables occurring in `schema`, agent metavariables excluded.
pub fn metavariables(schema: &Formula) -> Vec<String> {
    schema.props().into_iter().filter(|p| is_meta(p)).collect()
}

/// Structural overlap between a schema and a formula, ignoring binding
/// consistency. Used to name the nearest miss.
fn overlap(pat: &Formula, f: &Formula) -> usize {
    use Formula::*;
    match (pat, f) {
        (Prop(m), _) if is_meta(m) => 1,
        (Top, Top) | (Bot, Bot) => 1,
        (Prop(x), Prop(y)) if x == y => 1,
        (Not(x), Not(y)) => 1 + overlap(x, y),
        (And(x1, x2), And(y1, y2))
        | (Or(x1, x2), Or(y1, y2))
        | (Implies(x1, x2), Implies(y1, y2))
        | (Iff(x1, x2), Iff(y1, y2))
        | (Announce(x1, x2), Announce(y1, y2)) => 1 + overlap(x1, y1) + overlap(x2, y2),
        (Kw(_, x), Kw(_, y)) | (K(_, x), K(_, y)) => 1 + overlap(x, y),
        _ => 0,
    }
}

/// The schema among `names` that `f` comes closest to matching.
pub fn nearest_miss<'n>(f: &Formula, names: &[&'n str]) -> Option<&'n str> {
    names
        .iter()
        .filter_map(|n| schema(n).map(|s| (overlap(s, f), *n)))
        .max_by_key(|(score, _)| *score)
        .map(|(_, n)| n)
}
