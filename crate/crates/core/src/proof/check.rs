use std::fmt;

use thiserror::Error;

use super::schema::{match_schema, nearest_miss};
use super::taut::is_bool_taut;
use super::{ProofSystem, Rule};
use crate::formula::{parse, Formula};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    /// Instance of a named axiom schema.
    Axiom(String),
    /// Boolean tautology.
    Taut,
    /// Tautological consequence of the listed lines.
    Pc(Vec<usize>),
    /// Modus ponens; the lines are `φ` and `φ -> ψ` in either order.
    Mp(usize, usize),
    NecKw(usize, String),
    ReKw(usize, String),
    /// From `φ <-> ψ` at the line, infer `χ[φ/p] <-> χ[ψ/p]`.
    Sub(usize, Formula, String),
    /// From `φ` infer `Kw φ & (~Kw χ -> ~Kw(χ & φ))`.
    Ri(usize, Formula),
    /// From `Kw φ & φ -> ψ` infer `Kw φ & φ -> Kw ψ & ψ`.
    Wm(usize),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ks: &[usize]| ks.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Justification::Axiom(n) => write!(f, "axiom {n}"),
            Justification::Taut => f.write_str("taut"),
            Justification::Pc(ks) => write!(f, "pc {}", list(ks)),
            Justification::Mp(a, b) => write!(f, "mp {a},{b}"),
            Justification::NecKw(k, i) => write!(f, "neckw {k} {i}"),
            Justification::ReKw(k, i) => write!(f, "rekw {k} {i}"),
            Justification::Sub(k, chi, p) => write!(f, "sub {k} {chi} {p}"),
            Justification::Ri(k, chi) => write!(f, "ri {k} {chi}"),
            Justification::Wm(k) => write!(f, "wm {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub formula: Formula,
    pub just: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Derivation {
    /// System named in the file header, if any.
    pub system: Option<String>,
    /// Step `k` (1-based) is `steps[k - 1]`.
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("step {step}: {message}")]
pub struct CheckError {
    pub step: usize,
    pub message: String,
}

fn numbers(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad line reference `{t}`")))
        .collect()
}

fn number(text: &str) -> Result<usize, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("bad line reference `{}`", text.trim()))
}

fn formula(text: &str) -> Result<Formula, String> {
    parse(text.trim()).map_err(|e| e.to_string())
}

fn parse_justification(text: &str) -> Result<Justification, String> {
    let text = text.trim();
    let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    let split_last = |s: &str| -> Result<(String, String), String> {
        let (a, b) = s
            .rsplit_once(char::is_whitespace)
            .ok_or_else(|| format!("`{head}` needs a line and one more argument"))?;
        Ok((a.trim().to_string(), b.to_string()))
    };
    let split_first = |s: &str| -> Result<(usize, String), String> {
        let (a, b) = s
            .split_once(char::is_whitespace)
            .ok_or_else(|| format!("`{head}` needs a line and one more argument"))?;
        Ok((number(a)?, b.trim().to_string()))
    };
    Ok(match head.to_ascii_lowercase().as_str() {
        "axiom" if !rest.is_empty() => Justification::Axiom(rest.to_string()),
        "axiom" => return Err("`axiom` needs a schema name".into()),
        "taut" => Justification::Taut,
        "pc" => Justification::Pc(numbers(rest)?),
        "mp" => match numbers(rest)?.as_slice() {
            [a, b] => Justification::Mp(*a, *b),
            _ => return Err("`mp` needs two line references".into()),
        },
        "neckw" => {
            let (k, i) = split_first(rest)?;
            Justification::NecKw(k, i)
        }
        "rekw" => {
            let (k, i) = split_first(rest)?;
            Justification::ReKw(k, i)
        }
        "sub" => {
            let (k, tail) = split_first(rest)?;
            let (chi, p) = split_last(&tail)?;
            Justification::Sub(k, formula(&chi)?, p)
        }
        "ri" => {
            let (k, chi) = split_first(rest)?;
            Justification::Ri(k, formula(&chi)?)
        }
        "wm" => Justification::Wm(number(rest)?),
        other => return Err(format!("unknown justification `{other}`")),
    })
}

impl Derivation {
    /// Parses the text format:
    ///
    /// ```text
    /// system PLKw
    /// # comment
    /// 1. Kw[i](r -> p) & Kw[i](~r -> p) -> Kw[i]p ; axiom KwCon
    /// 2. ... ; pc 1
    /// ```
    pub fn parse(text: &str) -> Result<Derivation, SyntaxError> {
        let mut d = Derivation::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| SyntaxError { line, message };
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            if let Some(name) = t.strip_prefix("system ") {
                if d.system.is_some() || !d.steps.is_empty() {
                    return Err(err("`system` must appear once, before the steps".into()));
                }
                d.system = Some(name.trim().to_string());
                continue;
            }
            let (num, body) = t
                .split_once('.')
                .ok_or_else(|| err("expected `<n>. <formula> ; <justification>`".into()))?;
            let n = number(num).map_err(err)?;
            if n != d.steps.len() + 1 {
                return Err(err(format!(
                    "step numbered {n}, expected {}",
                    d.steps.len() + 1
                )));
            }
            let (f, j) = body
                .split_once(';')
                .ok_or_else(|| err("missing `;` before the justification".into()))?;
            d.steps.push(Step {
                formula: formula(f).map_err(err)?,
                just: parse_justification(j).map_err(err)?,
            });
        }
        Ok(d)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(s) = &self.system {
            out.push_str(&format!("system {s}\n"));
        }
        for (k, step) in self.steps.iter().enumerate() {
            out.push_str(&format!("{}. {} ; {}\n", k + 1, step.formula, step.just));
        }
        out
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.steps.last().map(|s| &s.formula)
    }
}

fn tautology(f: &Formula) -> Result<bool, String> {
    is_bool_taut(f).map_err(|e| e.to_string())
}

fn check_step(d: &Derivation, step: usize, sys: &ProofSystem) -> Result<(), String> {
    let Step { formula: f, just } = &d.steps[step - 1];
    let line = |k: usize| -> Result<&Formula, String> {
        if k == 0 || k >= step {
            return Err(format!("reference to line {k} does not point backwards"));
        }
        Ok(&d.steps[k - 1].formula)
    };
    let licensed = |r: Rule| -> Result<(), String> {
        if sys.has_rule(r) {
            Ok(())
        } else {
            Err(format!("rule {} is not part of {}", r.name(), sys.name))
        }
    };
    let iff_parts = |g: &Formula| -> Result<(Formula, Formula), String> {
        match g {
            Formula::Iff(a, b) => Ok(((**a).clone(), (**b).clone())),
            _ => Err(format!("premise `{g}` is not a biconditional")),
        }
    };
    let expect = |want: Formula| -> Result<(), String> {
        if &want == f {
            Ok(())
        } else {
            Err(format!("rule yields `{want}`, not `{f}`"))
        }
    };
    match just {
        Justification::Axiom(name) => {
            if !sys.has_axiom(name) {
                return Err(format!("`{name}` is not an axiom of {}", sys.name));
            }
            if match_schema(f, name).is_some() {
                return Ok(());
            }
            let near = nearest_miss(f, &sys.axioms).unwrap_or(name);
            Err(format!(
                "not an instance of {name} (nearest schema: {near})"
            ))
        }
        Justification::Taut => {
            if tautology(f)? {
                Ok(())
            } else {
                Err("not a Boolean tautology".into())
            }
        }
        Justification::Pc(ks) => {
            let premises = ks.iter().map(|&k| line(k).cloned()).collect::<Result<Vec<_>, _>>()?;
            let goal = Formula::implies(Formula::conj(premises), f.clone());
            if tautology(&goal)? {
                Ok(())
            } else {
                Err("does not follow propositionally from the cited lines".into())
            }
        }
        Justification::Mp(a, b) => {
            licensed(Rule::Mp)?;
            let (x, y) = (line(*a)?, line(*b)?);
            let fits = |ante: &Formula, imp: &Formula| {
                matches!(imp, Formula::Implies(l, r) if **l == *ante && **r == *f)
            };
            if fits(x, y) || fits(y, x) {
                Ok(())
            } else {
                Err(format!("lines {a} and {b} do not give `{f}` by modus ponens"))
            }
        }
        Justification::NecKw(k, i) => {
            licensed(Rule::NecKw)?;
            expect(Formula::kw(i, line(*k)?.clone()))
        }
        Justification::ReKw(k, i) => {
            licensed(Rule::ReKw)?;
            let (a, b) = iff_parts(line(*k)?)?;
            expect(Formula::iff(Formula::kw(i, a), Formula::kw(i, b)))
        }
        Justification::Sub(k, chi, p) => {
            licensed(Rule::Sub)?;
            let (a, b) = iff_parts(line(*k)?)?;
            expect(Formula::iff(chi.substitute(p, &a), chi.substitute(p, &b)))
        }
        Justification::Ri(k, chi) => {
            licensed(Rule::Ri)?;
            let phi = line(*k)?.clone();
            let agent = match f {
                Formula::And(l, _) => match &**l {
                    Formula::Kw(i, _) => i.clone(),
                    _ => return Err("RI conclusion must start with `Kw[i]`".into()),
                },
                _ => return Err("RI conclusion must be a conjunction".into()),
            };
            let kw = |g: Formula| Formula::kw(&agent, g);
            expect(Formula::and(
                kw(phi.clone()),
                Formula::implies(
                    Formula::not(kw(chi.clone())),
                    Formula::not(kw(Formula::and(chi.clone(), phi))),
                ),
            ))
        }
        Justification::Wm(k) => {
            licensed(Rule::Wm)?;
            let premise = line(*k)?;
            let shape = match premise {
                Formula::Implies(l, psi) => match &**l {
                    Formula::And(kw, phi) => match &**kw {
                        Formula::Kw(i, inner) if inner == phi => Some((i.clone(), (**psi).clone())),
                        _ => None,
                    },
                    _ => None,
                },
                _ => None,
            };
            let (agent, psi) = shape.ok_or_else(|| {
                format!("premise `{premise}` is not of the form `Kw φ & φ -> ψ`")
            })?;
            let Formula::Implies(l, _) = premise else { unreachable!() };
            expect(Formula::implies(
                (**l).clone(),
                Formula::and(Formula::kw(&agent, psi.clone()), psi),
            ))
        }
    }
}

/// Checks every step of `d` in `sys`. The first failing step is reported.
pub fn check_derivation(d: &Derivation, sys: &ProofSystem) -> Result<(), CheckError> {
    if d.steps.is_empty() {
        return Err(CheckError {
            step: 0,
            message: "empty derivation".into(),
        });
    }
    for step in 1..=d.steps.len() {
        check_step(d, step, sys).map_err(|message| CheckError { step, message })?;
    }
    Ok(())
}
