use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::chain::{chain_presentation, to_realizable_mapped, Link, RealizablePresentation};
use super::peripheral::{commute_in_quotient, meridian_longitude, small_symmetric_groups, PeripheralPair};
use crate::diagrams::{Event, MarkedGaussDiagram};
use crate::error::{Error, Result};
use crate::presentations::{
    classify_cm, evaluate, is_homomorphism, presentation_of_diagram, FiniteGroup, Presentation, DEFAULT_SEARCH_LIMIT,
};
use crate::words::{Generator, Word, WordContext};

/// One circle, one event per link: heads and their tails become arrows,
/// every other `v^ε` link a node.
pub fn realize(p: &RealizablePresentation) -> MarkedGaussDiagram {
    let links = p.links();
    let mut events: Vec<Event> = links
        .iter()
        .map(|l| match *l {
            Link::Plain(s) => Event::Node(s),
            Link::Head { .. } => Event::Node(crate::diagrams::Sign::Plus),
        })
        .collect();
    let mut signs = BTreeMap::new();
    let mut next = 1u32;
    for (j, l) in links.iter().enumerate() {
        if let Link::Head { tail, sign } = *l {
            events[j] = Event::Head(next);
            events[tail as usize - 1] = Event::Tail(next);
            signs.insert(next, sign);
            next += 1;
        }
    }
    MarkedGaussDiagram::new(alloc::vec![events], signs).expect("realizable links pair up").canonical_ids()
}

/// `to_cyclic`, `to_realizable` and `realize` in one go.
pub fn realize_presentation(p: &Presentation) -> Result<MarkedGaussDiagram> {
    let cyclic = super::chain::to_cyclic(p)?;
    let rp = super::chain::to_realizable(&cyclic)?;
    Ok(realize(&rp))
}

#[derive(Debug, Clone)]
pub struct PeripheralRealization {
    pub diagram: MarkedGaussDiagram,
    /// Meridian and longitude of the diagram at the arc of `x0`.
    pub pair: PeripheralPair,
    /// Arc generator of `Π_D` (1-based) for each `x`-generator of the input.
    pub x_map: Vec<u32>,
    pub warnings: Vec<String>,
}

/// Realize a deficiency-2 presentation with prescribed peripheral pair
/// `(x0, l)`, where `x0 = x1^{x0_conjugator}`.
///
/// `l` must have zero total `x`-exponent; that `l` commutes with `x0` is only
/// checked in `S_3`, `S_4`, `S_5`.
pub fn realize_with_peripheral(p: &Presentation, x0_conjugator: &Word, l: &Word) -> Result<PeripheralRealization> {
    let rep = classify_cm(p);
    if !rep.is_cm || rep.m != 1 || !rep.is_m_irreducible || rep.deficiency != 2 {
        return Err(Error::Precondition("expected a 1-irreducible C_1-presentation of deficiency 2".into()));
    }
    let ctx = p.context();
    ctx.check(x0_conjugator)?;
    ctx.check(l)?;
    let x_sum: i64 = (1..=ctx.x_count).map(|i| l.exponent_sum(Generator::x(i))).sum();
    if x_sum != 0 {
        return Err(Error::Precondition(format!(
            "longitude has x-exponent sum {x_sum}; its image in G_v is not in the commutator subgroup"
        )));
    }
    let x0 = Word::x(1).conj_by(x0_conjugator);
    let mut warnings = Vec::new();
    for (name, g) in small_symmetric_groups() {
        match commute_in_quotient(p, &g, &x0, l, DEFAULT_SEARCH_LIMIT)? {
            Some(true) => {}
            Some(false) => return Err(Error::Refuted(format!("l does not commute with x0 in a quotient onto {name}"))),
            None => warnings.push(format!("commutation in {name} not checked: search limit")),
        }
    }
    warnings.push("commutation of l with x0 is verified only in finite quotients".into());

    // Path x0 -> x1 -> ... through the tree Γ, then close it with
    // (w_0 .. w_{n-1})^{-1} l.
    let n = ctx.x_count;
    let x0_id = n + 1;
    let mut verts: Vec<u32> = alloc::vec![x0_id, 1];
    let mut conj: Vec<Word> = alloc::vec![x0_conjugator.inverse()];
    let mut on_path = alloc::vec![false; n as usize + 2];
    on_path[x0_id as usize] = true;
    on_path[1] = true;
    let mut pending: Vec<(u32, u32, Word)> =
        rep.relators.iter().flatten().map(|c| (c.source, c.target, c.conjugator.clone())).collect();
    while !pending.is_empty() {
        let pos =
            pending.iter().position(|(a, b, _)| on_path[*a as usize] != on_path[*b as usize]).expect("connected graph");
        let (a0, b0, u0) = pending.remove(pos);
        let (a, b, u) = if on_path[a0 as usize] { (a0, b0, u0) } else { (b0, a0, u0.inverse()) };
        let i = verts.iter().position(|&v| v == a).expect("vertex on path");
        if i + 1 == verts.len() {
            verts.push(b);
            conj.push(u);
        } else {
            let w = core::mem::replace(&mut conj[i], u.clone());
            verts.insert(i + 1, b);
            conj.insert(i + 1, u.inverse().mul(&w));
        }
        on_path[b as usize] = true;
    }
    let full = Word::product(conj.iter());
    conj.push(full.inverse().mul(l));

    let mut pos = alloc::vec![0u32; n as usize + 2];
    for (i, v) in verts.iter().enumerate() {
        pos[*v as usize] = i as u32 + 1;
    }
    let rename = |g: Generator| if g.is_x() { Generator::x(pos[g.index as usize]) } else { g };
    let ws: Vec<Word> = conj.iter().map(|w| w.rename(rename)).collect();
    let x0_name = if p.x_names().iter().any(|s| s == "x0") { String::from("x0'") } else { String::from("x0") };
    let names =
        verts.iter().map(|&v| if v == x0_id { x0_name.clone() } else { p.x_names()[v as usize - 1].clone() }).collect();
    let cyclic = chain_presentation(names, p.v_names()[0].clone(), &ws)?;
    let r = to_realizable_mapped(&cyclic)?;
    let diagram = realize(&r.presentation);
    let pair = meridian_longitude(&diagram, 0)?;
    let x_map = (1..=n).map(|i| r.x_map[pos[i as usize] as usize - 1]).collect();
    Ok(PeripheralRealization { diagram, pair, x_map, warnings })
}

#[derive(Debug, Clone)]
pub struct Homomorph {
    pub diagram: MarkedGaussDiagram,
    /// Image of each arc generator of `Π_D` as a word in `μ_1..μ_n` (as
    /// `x1..xn`) and `ν` (as `v1`).
    pub assignment: Vec<Word>,
    /// Images in the target, indexed by generator slot of `Π_D`.
    pub images: Option<Vec<u32>>,
    /// Image of the longitude at arc `x1`.
    pub longitude_image: Option<u32>,
}

/// A diagram `D` with `ρ: Π_D -> G`, `x_1 ↦ μ_1`, `v ↦ ν`, from conjugators
/// `w_i` with `μ_{i+1} = μ_i^{w_i}` (indices mod `n`).
///
/// With a target `(G, [μ_1..μ_n], ν)`, every relator of `Π_D` is checked.
pub fn realize_homomorph(conjugators: &[Word], target: Option<(&FiniteGroup, &[u32], u32)>) -> Result<Homomorph> {
    let n = conjugators.len() as u32;
    if n == 0 {
        return Err(Error::Precondition("at least one conjugator is required".into()));
    }
    let ctx = WordContext::new(n, 1);
    for w in conjugators {
        ctx.check(w)?;
    }
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    let cyclic = chain_presentation(names, "v1".into(), conjugators)?;
    let r = to_realizable_mapped(&cyclic)?;
    let diagram = realize(&r.presentation);
    let assignment = r.exprs;
    let (images, longitude_image) = match target {
        None => (None, None),
        Some((g, mu, nu)) => {
            if mu.len() != n as usize {
                return Err(Error::SizeMismatch { left: mu.len(), right: n as usize });
            }
            if mu.iter().chain([&nu]).any(|&a| a as usize >= g.order()) {
                return Err(Error::InvalidGroup("image outside the group".into()));
            }
            let mut base: Vec<u32> = mu.to_vec();
            base.push(nu);
            let mut img: Vec<u32> = assignment.iter().map(|w| evaluate(g, ctx, &base, w)).collect();
            img.push(nu);
            let pd = presentation_of_diagram(&diagram);
            if !is_homomorphism(&pd, g, &img)? {
                return Err(Error::Refuted("some relator of the diagram group is not sent to 1".into()));
            }
            let l = meridian_longitude(&diagram, 0)?.longitude;
            let li = evaluate(g, pd.context(), &img, &l);
            (Some(img), Some(li))
        }
    };
    Ok(Homomorph { diagram, assignment, images, longitude_image })
}
