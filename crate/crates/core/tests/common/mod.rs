#![allow(dead_code)]

use kwl_core::formula::Formula;
use kwl_core::semantics::{Frame, FrameClass, KripkeModel};
use rand::rngs::StdRng;
use rand::Rng;

pub fn world_names(n: usize) -> Vec<String> {
    (0..n).map(|w| format!("x{w}")).collect()
}

/// Every frame with `n` worlds and one relation per agent, each relation
/// drawn from all `2^(n*n)` subsets, filtered to `class`.
pub fn all_frames(n: usize, agents: &[&str], class: FrameClass) -> Vec<Frame> {
    let names = world_names(n);
    let per_agent: Vec<u64> = (0..1u64 << (n * n)).collect();
    let mut out = Vec::new();
    let total = per_agent.len().pow(agents.len() as u32);
    for code in 0..total {
        let mut fr = Frame::new(&names, agents).unwrap();
        let mut rest = code;
        for a in agents {
            let bits = rest % per_agent.len();
            rest /= per_agent.len();
            for k in 0..n * n {
                if bits >> k & 1 == 1 {
                    fr.add_edge(a, &names[k / n], &names[k % n]).unwrap();
                }
            }
        }
        if fr.is_in_class(class) {
            out.push(fr);
        }
    }
    out
}

/// Every valuation of `props` over `frame`.
pub fn all_models(frame: &Frame, props: &[String]) -> Vec<KripkeModel> {
    let n = frame.len();
    let bits = n * props.len();
    (0..1u64 << bits)
        .map(|mask| {
            let mut m = KripkeModel::new(frame.clone());
            for (k, p) in props.iter().enumerate() {
                m.declare_prop(p);
                for w in 0..n {
                    if mask >> (k * n + w) & 1 == 1 {
                        m.set_true(p, &frame.worlds()[w]).unwrap();
                    }
                }
            }
            m
        })
        .collect()
}

/// A pointed model in `class` with at most `max_worlds` worlds refuting `f`.
pub fn bounded_countermodel(
    f: &Formula,
    class: FrameClass,
    max_worlds: usize,
    agents: &[&str],
) -> Option<(KripkeModel, usize)> {
    let props: Vec<String> = f.props().into_iter().collect();
    for n in 1..=max_worlds {
        for fr in all_frames(n, agents, class) {
            for m in all_models(&fr, &props) {
                if let Some(w) = m.truth_set(f).iter().position(|b| !b) {
                    return Some((m, w));
                }
            }
        }
    }
    None
}

pub fn random_model(rng: &mut StdRng, max_worlds: usize, agents: &[&str], props: &[&str]) -> KripkeModel {
    let n = rng.gen_range(1..=max_worlds);
    let names = world_names(n);
    let mut fr = Frame::new(&names, agents).unwrap();
    let density: f64 = rng.gen_range(0.1..0.7);
    for a in agents {
        for u in &names {
            for v in &names {
                if rng.gen_bool(density) {
                    fr.add_edge(a, u, v).unwrap();
                }
            }
        }
    }
    let mut m = KripkeModel::new(fr);
    for p in props {
        m.declare_prop(p);
        for w in &names {
            if rng.gen_bool(0.5) {
                m.set_true(p, w).unwrap();
            }
        }
    }
    m
}

/// Random model in `class`: a random relation closed under the class's
/// conditions. PF and D are handled by pruning and padding.
pub fn random_model_in(
    rng: &mut StdRng,
    class: FrameClass,
    max_worlds: usize,
    agents: &[&str],
    props: &[&str],
) -> KripkeModel {
    loop {
        let n = rng.gen_range(1..=max_worlds);
        let names = world_names(n);
        let mut rels: Vec<Vec<Vec<bool>>> = Vec::new();
        for _ in agents {
            let mut r = vec![vec![false; n]; n];
            let density: f64 = rng.gen_range(0.05..0.5);
            for row in r.iter_mut() {
                for cell in row.iter_mut() {
                    *cell = rng.gen_bool(density);
                }
            }
            close(&mut r, class, rng);
            rels.push(r);
        }
        let mut fr = Frame::new(&names, agents).unwrap();
        for (a, r) in agents.iter().zip(&rels) {
            for u in 0..n {
                for v in 0..n {
                    if r[u][v] {
                        fr.add_edge(a, &names[u], &names[v]).unwrap();
                    }
                }
            }
        }
        if !fr.is_in_class(class) {
            continue;
        }
        let mut m = KripkeModel::new(fr);
        for p in props {
            m.declare_prop(p);
            for w in &names {
                if rng.gen_bool(0.5) {
                    m.set_true(p, w).unwrap();
                }
            }
        }
        return m;
    }
}

fn close(r: &mut [Vec<bool>], class: FrameClass, rng: &mut StdRng) {
    let n = r.len();
    if class == FrameClass::PF {
        for row in r.iter_mut() {
            let hits: Vec<usize> = (0..n).filter(|&v| row[v]).collect();
            row.iter_mut().for_each(|c| *c = false);
            if let Some(&keep) = hits.first() {
                row[keep] = true;
            }
        }
        return;
    }
    if class.serial() {
        for row in r.iter_mut() {
            if !row.iter().any(|&c| c) {
                row[rng.gen_range(0..n)] = true;
            }
        }
    }
    if class.reflexive() {
        for (w, row) in r.iter_mut().enumerate() {
            row[w] = true;
        }
    }
    loop {
        let mut changed = false;
        for u in 0..n {
            for v in 0..n {
                if !r[u][v] {
                    continue;
                }
                for z in 0..n {
                    if class.symmetric() && !r[v][u] {
                        r[v][u] = true;
                        changed = true;
                    }
                    if class.transitive() && r[v][z] && !r[u][z] {
                        r[u][z] = true;
                        changed = true;
                    }
                    if class.euclidean() && r[u][z] && !r[v][z] {
                        r[v][z] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
}

#[derive(Clone, Copy)]
pub struct Gen<'a> {
    pub props: &'a [&'a str],
    pub agents: &'a [&'a str],
    pub kw: bool,
    pub k: bool,
    pub announce: bool,
    pub derived: bool,
}

pub fn random_formula(rng: &mut StdRng, g: Gen<'_>, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => Formula::Top,
            1 if g.derived => Formula::Bot,
            _ => Formula::prop(g.props[rng.gen_range(0..g.props.len())]),
        };
    }
    let agent = g.agents[rng.gen_range(0..g.agents.len())];
    let sub = |rng: &mut StdRng| random_formula(rng, g, depth - 1);
    loop {
        match rng.gen_range(0..10) {
            0 | 1 => return Formula::not(sub(rng)),
            2 | 3 => return Formula::and(sub(rng), sub(rng)),
            4 if g.derived => return Formula::or(sub(rng), sub(rng)),
            5 if g.derived => return Formula::implies(sub(rng), sub(rng)),
            6 if g.derived => return Formula::iff(sub(rng), sub(rng)),
            7 if g.kw => return Formula::kw(agent, sub(rng)),
            8 if g.k => return Formula::k(agent, sub(rng)),
            9 if g.announce => return Formula::announce(sub(rng), sub(rng)),
            _ => {}
        }
    }
}
