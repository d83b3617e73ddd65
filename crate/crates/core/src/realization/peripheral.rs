use alloc::string::String;
use alloc::vec::Vec;

use super::chain::cyclic_chain;
use crate::diagrams::{Event, MarkedGaussDiagram};
use crate::error::{Error, Result};
use crate::presentations::{
    evaluate, event_conjugator, for_each_hom, simplify_tracked, FiniteGroup, Presentation, DEFAULT_SEARCH_LIMIT,
    DEFAULT_SIMPLIFY_BOUND,
};
use crate::words::{Generator, Word};

/// A meridian (one arc generator) and its longitude.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeripheralPair {
    pub meridian: Word,
    pub longitude: Word,
}

/// Sum of the signs of the arrows whose head lies on circle `c`.
pub fn longitude_alpha(d: &MarkedGaussDiagram, c: usize) -> i64 {
    d.circles()[c]
        .iter()
        .filter_map(|e| match e {
            Event::Head(id) => d.arrow(*id).map(|a| a.sign.value()),
            _ => None,
        })
        .sum()
}

/// Meridian of global arc `arc` (0-based) and the longitude read from it.
pub fn meridian_longitude(d: &MarkedGaussDiagram, arc: usize) -> Result<PeripheralPair> {
    let c = d.circle_of_arc(arc).ok_or(Error::InvalidPosition { circle: 0, position: arc })?;
    let local = arc - d.arc_offset(c);
    let k = d.circles()[c].len();
    let mut longitude = Word::identity();
    for step in 0..k {
        longitude = longitude.mul(&event_conjugator(d, c, (local + step) % k));
    }
    let meridian = Word::x(arc as u32 + 1);
    longitude = longitude.mul(&meridian.pow(-longitude_alpha(d, c)));
    Ok(PeripheralPair { meridian, longitude })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCheck {
    pub group: String,
    /// `None` when the homomorphism search hit its node budget.
    pub commute: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeripheralReport {
    /// The longitude is `w_m .. w_{m-1}` up to meridian powers, so
    /// `m^{longitude} = m` follows from the chain relators.
    pub syntactic: bool,
    pub quotients: Vec<QuotientCheck>,
}

impl PeripheralReport {
    pub fn passed(&self) -> bool {
        self.syntactic && self.quotients.iter().all(|q| q.commute == Some(true))
    }
}

fn meridian_power(w: &Word, m: Generator) -> bool {
    w.generators().all(|g| g == m)
}

fn syntactic_check(p: &Presentation, pair: &PeripheralPair) -> bool {
    let Some(m) = pair.meridian.as_generator().filter(|g| g.is_x()) else { return false };
    if meridian_power(&pair.longitude, m) {
        return true;
    }
    let Some(ws) = cyclic_chain(p) else { return false };
    let n = ws.len();
    let start = m.index as usize - 1;
    let full = Word::product((0..n).map(|s| &ws[(start + s) % n]));
    let l = &pair.longitude;
    meridian_power(&full.inverse().mul(l), m) || meridian_power(&l.mul(&full.inverse()), m)
}

/// Do the images of `a` and `b` commute under every homomorphism `p -> g`?
///
/// `Ok(None)` if the search exceeds `limit` nodes.
pub fn commute_in_quotient(p: &Presentation, g: &FiniteGroup, a: &Word, b: &Word, limit: u64) -> Result<Option<bool>> {
    let ctx = p.context();
    ctx.check(a)?;
    ctx.check(b)?;
    let (q, map) = simplify_tracked(p, DEFAULT_SIMPLIFY_BOUND);
    let carry = |w: &Word| w.substitute(|h| if h.is_x() { map[h.index as usize - 1].clone() } else { Word::gen(h) });
    let (a, b) = (carry(a), carry(b));
    let qctx = q.context();
    let mut ok = true;
    let run = for_each_hom(&q, g, limit, &mut |img| {
        ok = g.commute(evaluate(g, qctx, img, &a), evaluate(g, qctx, img, &b));
        ok
    });
    match run {
        Ok(_) => Ok(Some(ok)),
        Err(Error::SearchLimit { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `S_3`, `S_4`, `S_5`.
pub fn small_symmetric_groups() -> Vec<(String, FiniteGroup)> {
    (3..=5).map(|k| (alloc::format!("S{k}"), FiniteGroup::symmetric(k))).collect()
}

pub fn check_peripheral(p: &Presentation, pair: &PeripheralPair) -> Result<PeripheralReport> {
    check_peripheral_with(p, pair, &small_symmetric_groups(), DEFAULT_SEARCH_LIMIT)
}

pub fn check_peripheral_with(
    p: &Presentation,
    pair: &PeripheralPair,
    groups: &[(String, FiniteGroup)],
    limit: u64,
) -> Result<PeripheralReport> {
    let ctx = p.context();
    ctx.check(&pair.meridian)?;
    ctx.check(&pair.longitude)?;
    let mut quotients = Vec::new();
    for (name, g) in groups {
        let commute = commute_in_quotient(p, g, &pair.meridian, &pair.longitude, limit)?;
        quotients.push(QuotientCheck { group: name.clone(), commute });
    }
    Ok(PeripheralReport { syntactic: syntactic_check(p, pair), quotients })
}
