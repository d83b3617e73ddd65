//! Cyclic conjugation chains `r_j = x_{j+1}^{-1} x_j^{w_j}` and the
//! transformations that bring a `C_1`-presentation into realizable shape.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diagrams::Sign;
use crate::error::{Error, Result};
use crate::presentations::{classify_cm, Presentation};
use crate::words::{Generator, Word};

/// `w` with `r = x_target^{-1} w^{-1} x_source w`, chosen without leading
/// `x_source` letters (those cancel in `r`).
pub fn chain_conjugator(r: &Word, source: u32, target: u32) -> Option<Word> {
    let q = Word::x(target).mul(r);
    let letters: Vec<(Generator, i64)> = q.letters().collect();
    if letters.len().is_multiple_of(2) {
        return None;
    }
    let mid = letters.len() / 2;
    if letters[mid] != (Generator::x(source), 1) {
        return None;
    }
    let w = Word::from_raw(letters[mid + 1..].iter().copied());
    let winv = Word::from_raw(letters[..mid].iter().copied());
    (winv == w.inverse()).then_some(w)
}

/// The conjugators `w_1..w_n` if `p` is a cyclic chain over one `v`.
pub fn cyclic_chain(p: &Presentation) -> Option<Vec<Word>> {
    let n = p.x_count();
    if n == 0 || p.v_count() != 1 || p.relators().len() != n as usize {
        return None;
    }
    p.relators()
        .iter()
        .enumerate()
        .map(|(j, r)| {
            let j = j as u32 + 1;
            chain_conjugator(r, j, j % n + 1)
        })
        .collect()
}

/// Build the chain presentation `x_{j+1}^{-1} x_j^{w_j}` over one `v`.
pub fn chain_presentation(x_names: Vec<String>, v_name: String, ws: &[Word]) -> Result<Presentation> {
    let n = ws.len() as u32;
    let relators = ws
        .iter()
        .enumerate()
        .map(|(j, w)| {
            let j = j as u32 + 1;
            Word::x(j % n + 1).inverse().mul(&Word::x(j).conj_by(w))
        })
        .collect();
    Presentation::new(x_names, alloc::vec![v_name], relators)
}

/// One link of a realizable chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Link {
    /// `w = v^ε`: a node, or the tail of the arrow whose head names this arc.
    Plain(Sign),
    /// `w = v^{-ε} x_tail^ε`: the head of an arrow of sign `ε`.
    Head { tail: u32, sign: Sign },
}

impl Link {
    fn classify(w: &Word) -> Option<Link> {
        let letters: Vec<(Generator, i64)> = w.letters().collect();
        match letters.as_slice() {
            [(g, e)] if g.is_v() => Some(Link::Plain(Sign::from_value(*e)?)),
            [(v, f), (x, e)] if v.is_v() && x.is_x() && *f == -*e => {
                Some(Link::Head { tail: x.index, sign: Sign::from_value(*e)? })
            }
            _ => None,
        }
    }

    pub fn conjugator(self) -> Word {
        match self {
            Link::Plain(s) => Word::v(1).pow(s.value()),
            Link::Head { tail, sign } => Word::v(1).pow(-sign.value()).mul(&Word::x(tail).pow(sign.value())),
        }
    }
}

/// A cyclic chain whose links are nodes or correctly paired heads and tails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizablePresentation {
    presentation: Presentation,
    links: Vec<Link>,
}

impl RealizablePresentation {
    pub fn new(p: Presentation) -> Result<Self> {
        let ws = cyclic_chain(&p).ok_or_else(|| Error::NotRealizable("not a cyclic chain".into()))?;
        let mut links = Vec::with_capacity(ws.len());
        for (j, w) in ws.iter().enumerate() {
            let link = Link::classify(w).ok_or_else(|| {
                Error::NotRealizable(format!("w{} = {} is not v^e or v^-e x^e", j + 1, p.render_word(w)))
            })?;
            links.push(link);
        }
        let mut claimed = BTreeSet::new();
        for (k, link) in links.iter().enumerate() {
            let Link::Head { tail, sign } = *link else { continue };
            if links[tail as usize - 1] != Link::Plain(sign) {
                return Err(Error::NotRealizable(format!(
                    "w{} uses x{tail} as a tail, but w{tail} is not v^{}",
                    k + 1,
                    sign.value()
                )));
            }
            if !claimed.insert(tail) {
                return Err(Error::NotRealizable(format!("x{tail} is the tail of two heads")));
            }
        }
        Ok(RealizablePresentation { presentation: p, links })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn into_presentation(self) -> Presentation {
        self.presentation
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn conjugators(&self) -> Vec<Word> {
        self.links.iter().map(|l| l.conjugator()).collect()
    }
}

fn precondition(msg: &str) -> Error {
    Error::Precondition(msg.into())
}

/// Turn a 1-irreducible `C_1`-presentation of deficiency 1 or 2 into a cyclic
/// chain presenting the same group.
pub fn to_cyclic(p: &Presentation) -> Result<Presentation> {
    to_cyclic_mapped(p).map(|(q, _)| q)
}

/// `to_cyclic`, also returning the new index of every old `x`-generator.
pub fn to_cyclic_mapped(p: &Presentation) -> Result<(Presentation, Vec<u32>)> {
    let rep = classify_cm(p);
    if !rep.is_cm {
        return Err(precondition("not a C-presentation"));
    }
    if rep.m != 1 {
        return Err(precondition("expected exactly one v-generator"));
    }
    if !rep.is_m_irreducible {
        return Err(precondition("relation graph is not connected"));
    }
    if !(1..=2).contains(&rep.deficiency) {
        return Err(precondition("deficiency must be 1 or 2"));
    }
    let n = p.x_count();
    let identity: Vec<u32> = (1..=n).collect();
    if cyclic_chain(p).is_some() {
        return Ok((p.clone(), identity));
    }
    // Edges (a, b, u) with b = a^u.
    let mut edges: Vec<(u32, u32, Word)> =
        rep.relators.iter().flatten().map(|c| (c.source, c.target, c.conjugator.clone())).collect();
    if edges.len() + 1 == n as usize {
        let pad = edges.last().cloned().unwrap_or((1, 1, Word::identity()));
        edges.push(pad);
    }
    debug_assert_eq!(edges.len(), n as usize);

    // Strip leaves until only the unique cycle is left.
    let nv = n as usize + 1;
    let mut deg = alloc::vec![0usize; nv];
    for &(a, b, _) in &edges {
        deg[a as usize] += 1;
        deg[b as usize] += 1;
    }
    let mut alive = alloc::vec![true; edges.len()];
    let mut on_cycle = alloc::vec![true; nv];
    on_cycle[0] = false;
    let mut stack: Vec<usize> = (1..nv).filter(|&x| deg[x] == 1).collect();
    while let Some(x) = stack.pop() {
        if !on_cycle[x] || deg[x] != 1 {
            continue;
        }
        on_cycle[x] = false;
        let e = (0..edges.len())
            .find(|&e| alive[e] && (edges[e].0 as usize == x || edges[e].1 as usize == x))
            .expect("leaf edge");
        alive[e] = false;
        let (a, b) = (edges[e].0 as usize, edges[e].1 as usize);
        deg[a] -= 1;
        deg[b] -= 1;
        let other = if a == x { b } else { a };
        if deg[other] == 1 {
            stack.push(other);
        }
    }

    // Walk the cycle: links (from, w) with next vertex = from^w.
    let start = (1..nv).find(|&x| on_cycle[x]).expect("cycle") as u32;
    let mut links: Vec<(u32, Word)> = Vec::new();
    let mut used = alloc::vec![false; edges.len()];
    let mut cur = start;
    loop {
        let e = (0..edges.len())
            .find(|&e| alive[e] && !used[e] && (edges[e].0 == cur || edges[e].1 == cur))
            .expect("cycle edge");
        used[e] = true;
        let (a, b, ref u) = edges[e];
        if a == cur {
            links.push((cur, u.clone()));
            cur = b;
        } else {
            links.push((cur, u.inverse()));
            cur = a;
        }
        if cur == start {
            break;
        }
    }

    // Pull the remaining vertices into the cycle: a -> a' (w) with a tree
    // edge a -> b (u) becomes a -> b (u), b -> a' (u^{-1} w).
    let mut in_chain = on_cycle;
    let mut pending: Vec<usize> = (0..edges.len()).filter(|&e| !alive[e]).collect();
    while !pending.is_empty() {
        let pos = pending
            .iter()
            .position(|&e| in_chain[edges[e].0 as usize] != in_chain[edges[e].1 as usize])
            .expect("connected graph");
        let (a0, b0, ref u0) = edges[pending.remove(pos)];
        let (a, b, u) = if in_chain[a0 as usize] { (a0, b0, u0.clone()) } else { (b0, a0, u0.inverse()) };
        let i = links.iter().position(|l| l.0 == a).expect("vertex on chain");
        let w = core::mem::replace(&mut links[i].1, u.clone());
        links.insert(i + 1, (b, u.inverse().mul(&w)));
        in_chain[b as usize] = true;
    }

    let first = links.iter().position(|l| l.0 == 1).expect("x1 on chain");
    links.rotate_left(first);
    let mut map = alloc::vec![0u32; n as usize];
    for (pos, (v, _)) in links.iter().enumerate() {
        map[*v as usize - 1] = pos as u32 + 1;
    }
    let rename = |g: Generator| if g.is_x() { Generator::x(map[g.index as usize - 1]) } else { g };
    let ws: Vec<Word> = links.iter().map(|(_, w)| w.rename(rename)).collect();
    let names = links.iter().map(|(v, _)| p.x_names()[*v as usize - 1].clone()).collect();
    let q = chain_presentation(names, p.v_names()[0].clone(), &ws)?;
    Ok((q, map))
}

/// Output of the realizable-shape transformation.
#[derive(Debug, Clone)]
pub struct Realizable {
    pub presentation: RealizablePresentation,
    /// New index of each old `x`-generator.
    pub x_map: Vec<u32>,
    /// Each new `x`-generator as a word over the old generators.
    pub exprs: Vec<Word>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    V(i64),
    X(usize, i64),
    Head(usize, i64),
}

struct Builder {
    names: Vec<String>,
    exprs: Vec<Word>,
    taken: BTreeSet<String>,
    next_name: u32,
}

impl Builder {
    fn fresh(&mut self, expr: Word) -> usize {
        let name = loop {
            let cand = format!("x{}", self.next_name);
            self.next_name += 1;
            if self.taken.insert(cand.clone()) {
                break cand;
            }
        };
        self.names.push(name);
        self.exprs.push(expr);
        self.exprs.len() - 1
    }

    fn step_word(&self, s: Step) -> Word {
        let v = Word::v(1);
        match s {
            Step::V(e) => v.pow(e),
            Step::X(k, e) => self.exprs[k].pow(e),
            Step::Head(k, e) => v.pow(-e).mul(&self.exprs[k].pow(e)),
        }
    }
}

/// Bring a cyclic chain into realizable shape, presenting the same group.
pub fn to_realizable(p: &Presentation) -> Result<RealizablePresentation> {
    to_realizable_mapped(p).map(|r| r.presentation)
}

pub fn to_realizable_mapped(p: &Presentation) -> Result<Realizable> {
    let ws = cyclic_chain(p).ok_or_else(|| precondition("not a cyclic chain"))?;
    let n = ws.len();
    if let Ok(rp) = RealizablePresentation::new(p.clone()) {
        return Ok(Realizable {
            presentation: rp,
            x_map: (1..=n as u32).collect(),
            exprs: (1..=n as u32).map(Word::x).collect(),
        });
    }
    let next_name = p
        .x_names()
        .iter()
        .filter_map(|s| s.strip_prefix('x').and_then(|d| d.parse::<u32>().ok()))
        .max()
        .unwrap_or(0)
        .max(n as u32)
        + 1;
    let mut b = Builder {
        names: p.x_names().to_vec(),
        exprs: (1..=n as u32).map(Word::x).collect(),
        taken: p.x_names().iter().cloned().collect(),
        next_name,
    };

    // Step 1: one letter per link. A leading x_j^ε on the link leaving x_j
    // conjugates x_j by itself and is erased; an empty link becomes a
    // cancelling node pair through a fresh generator.
    let mut chain: Vec<(usize, Step)> = Vec::new();
    for (j, w) in ws.iter().enumerate() {
        let mut letters: Vec<Step> =
            w.letters().map(|(g, e)| if g.is_v() { Step::V(e) } else { Step::X(g.index as usize - 1, e) }).collect();
        let lead = letters.iter().take_while(|s| matches!(s, Step::X(k, _) if *k == j)).count();
        letters.drain(..lead);
        if letters.is_empty() {
            chain.push((j, Step::V(1)));
            let y = b.fresh(b.exprs[j].conj_by(&Word::v(1)));
            chain.push((y, Step::V(-1)));
            continue;
        }
        let mut cur = j;
        let count = letters.len();
        for (i, s) in letters.into_iter().enumerate() {
            chain.push((cur, s));
            if i + 1 < count {
                let e = b.exprs[cur].conj_by(&b.step_word(s));
                cur = b.fresh(e);
            }
        }
    }

    // Step 2: a bare letter x_k^ε on the link leaving x_j becomes a head whose
    // tail is a new v^ε link leaving x_k.
    while let Some(i) = chain.iter().position(|(_, s)| matches!(s, Step::X(..))) {
        let (xj, Step::X(k, e)) = chain[i] else { unreachable!() };
        let k1 = b.fresh(b.exprs[k].conj_by(&Word::v(1).pow(e)));
        let k2 = b.fresh(b.exprs[k].clone());
        let big_xj = b.fresh(b.exprs[xj].conj_by(&Word::v(1).pow(e)));
        for (idx, (_, s)) in chain.iter_mut().enumerate() {
            if idx == i {
                continue;
            }
            match s {
                Step::X(t, _) | Step::Head(t, _) if *t == k => *t = k2,
                _ => {}
            }
        }
        chain[i].1 = Step::V(e);
        chain.insert(i + 1, (big_xj, Step::Head(k, e)));
        let pk = chain.iter().position(|(f, _)| *f == k).expect("link of x_k");
        let ck = core::mem::replace(&mut chain[pk].1, Step::V(e));
        chain.insert(pk + 1, (k1, Step::V(-e)));
        chain.insert(pk + 2, (k2, ck));
    }

    let first = chain.iter().position(|(f, _)| *f == 0).expect("x1 on chain");
    chain.rotate_left(first);
    let mut pos = alloc::vec![u32::MAX; b.exprs.len()];
    for (i, (f, _)) in chain.iter().enumerate() {
        pos[*f] = i as u32 + 1;
    }
    let new_ws: Vec<Word> = chain
        .iter()
        .map(|(_, s)| match *s {
            Step::V(e) => Word::v(1).pow(e),
            Step::Head(k, e) => Word::v(1).pow(-e).mul(&Word::x(pos[k]).pow(e)),
            Step::X(..) => unreachable!("step 2 removes bare letters"),
        })
        .collect();
    let names = chain.iter().map(|(f, _)| b.names[*f].clone()).collect();
    let exprs = chain.iter().map(|(f, _)| b.exprs[*f].clone()).collect();
    let q = chain_presentation(names, p.v_names()[0].clone(), &new_ws)?;
    let presentation = RealizablePresentation::new(q)?;
    let x_map = (0..n).map(|i| pos[i]).collect();
    Ok(Realizable { presentation, x_map, exprs })
}
