use alloc::vec::Vec;

use super::finite_group::FiniteGroup;
use super::Presentation;
use crate::error::{Error, Result};
use crate::words::Generator;

/// Default bound on search nodes for `hom_count`.
pub const DEFAULT_SEARCH_LIMIT: u64 = 50_000_000;

/// A relator compiled to generator slots.
struct Rel {
    syl: Vec<(usize, i64)>,
    slots: Vec<usize>,
}

struct Search<'a> {
    g: &'a FiniteGroup,
    visit: Option<&'a mut dyn FnMut(&[u32]) -> bool>,
    stopped: bool,
    rels: Vec<Rel>,
    v_slots: Vec<usize>,
    order: Vec<usize>,
    assign: Vec<Option<u32>>,
    nodes: u64,
    limit: u64,
    part: usize,
    parts: usize,
    split_done: bool,
}

impl Search<'_> {
    fn eval(&self, r: &Rel) -> u32 {
        r.syl.iter().fold(0, |acc, &(s, e)| self.g.mul(acc, self.g.pow(self.assign[s].expect("assigned"), e)))
    }

    fn consistent_v(&self, slot: usize) -> bool {
        let a = self.assign[slot].expect("assigned");
        self.v_slots.iter().all(|&o| o == slot || self.assign[o].is_none_or(|b| self.g.commute(a, b)))
    }

    /// Assign forced generators; returns the slots it filled, or `None` on contradiction.
    fn propagate(&mut self) -> Option<Vec<usize>> {
        let mut filled = Vec::new();
        loop {
            let mut progress = false;
            for ri in 0..self.rels.len() {
                let r = &self.rels[ri];
                let mut unknown = None;
                let mut count = 0;
                for &s in &r.slots {
                    if self.assign[s].is_none() {
                        count += 1;
                        unknown = Some(s);
                    }
                }
                match (count, unknown) {
                    (0, _) => {
                        if self.eval(r) != 0 {
                            return self.fail(filled);
                        }
                    }
                    (1, Some(s)) => {
                        let occ: Vec<usize> = (0..r.syl.len()).filter(|&k| r.syl[k].0 == s).collect();
                        if occ.len() != 1 || r.syl[occ[0]].1.abs() != 1 {
                            continue;
                        }
                        let k = occ[0];
                        let prod = |range: core::ops::Range<usize>| {
                            r.syl[range]
                                .iter()
                                .fold(0, |acc, &(q, e)| self.g.mul(acc, self.g.pow(self.assign[q].expect("known"), e)))
                        };
                        // A s^e B = 1  =>  s^e = A^{-1} B^{-1}.
                        let a = prod(0..k);
                        let b = prod(k + 1..r.syl.len());
                        let se = self.g.mul(self.g.inv(a), self.g.inv(b));
                        let val = if r.syl[k].1 == 1 { se } else { self.g.inv(se) };
                        self.assign[s] = Some(val);
                        filled.push(s);
                        if self.v_slots.contains(&s) && !self.consistent_v(s) {
                            return self.fail(filled);
                        }
                        progress = true;
                    }
                    _ => {}
                }
            }
            if !progress {
                return Some(filled);
            }
        }
    }

    fn fail(&mut self, filled: Vec<usize>) -> Option<Vec<usize>> {
        for s in filled {
            self.assign[s] = None;
        }
        None
    }

    /// Next generator to branch on: lowest slot in the relator with fewest unknowns,
    /// otherwise the first unassigned slot in the fixed order.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for r in &self.rels {
            let unknown: Vec<usize> = r.slots.iter().copied().filter(|&s| self.assign[s].is_none()).collect();
            if let Some(&lowest) = unknown.iter().min() {
                if best.is_none_or(|(c, s)| (unknown.len(), lowest) < (c, s)) {
                    best = Some((unknown.len(), lowest));
                }
            }
        }
        if let Some(v) = self.order.iter().copied().find(|&s| self.v_slots.contains(&s) && self.assign[s].is_none()) {
            return Some(v);
        }
        best.map(|(_, s)| s).or_else(|| self.order.iter().copied().find(|&s| self.assign[s].is_none()))
    }

    fn run(&mut self) -> Result<u64> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::SearchLimit { limit: self.limit });
        }
        let Some(filled) = self.propagate() else { return Ok(0) };
        let total = match self.pick() {
            None => {
                if let Some(visit) = self.visit.as_mut() {
                    let images: Vec<u32> = self.assign.iter().map(|a| a.expect("assigned")).collect();
                    if !visit(&images) {
                        self.stopped = true;
                    }
                }
                1
            }
            Some(s) => {
                let split = !self.split_done;
                self.split_done = true;
                let mut total = 0;
                for val in 0..self.g.order() as u32 {
                    if split && val as usize % self.parts != self.part {
                        continue;
                    }
                    self.assign[s] = Some(val);
                    if self.v_slots.contains(&s) && !self.consistent_v(s) {
                        continue;
                    }
                    total += self.run()?;
                    if self.stopped {
                        break;
                    }
                }
                self.assign[s] = None;
                total
            }
        };
        for s in filled {
            self.assign[s] = None;
        }
        Ok(total)
    }
}

/// Number of homomorphisms from `p` to `g`, with `v`-generator images commuting.
pub fn hom_count(p: &Presentation, g: &FiniteGroup) -> Result<u64> {
    hom_count_part(p, g, 0, 1, DEFAULT_SEARCH_LIMIT)
}

/// The share of `hom_count` whose first branching choice is `≡ part (mod parts)`.
///
/// Summing over `part in 0..parts` gives the full count. `limit` bounds the
/// number of search nodes visited.
pub fn hom_count_part(p: &Presentation, g: &FiniteGroup, part: usize, parts: usize, limit: u64) -> Result<u64> {
    let (mut search, free) = Search::new(p, g, limit, true, None);
    search.part = part;
    search.parts = parts.max(1);
    let mut count = search.run()?;
    // If the search never branched, only part 0 owns the single leaf.
    if !search.split_done && part != 0 {
        count = 0;
    }
    for _ in 0..free {
        count = count.checked_mul(g.order() as u64).ok_or(Error::SearchLimit { limit })?;
    }
    Ok(count)
}

/// Call `visit` with the images (indexed by generator slot) of every
/// homomorphism `p -> g`, until it returns `false`.
///
/// Returns `true` if the enumeration ran to completion.
pub fn for_each_hom(
    p: &Presentation,
    g: &FiniteGroup,
    limit: u64,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> Result<bool> {
    let (mut search, _) = Search::new(p, g, limit, false, Some(visit));
    search.run()?;
    Ok(!search.stopped)
}

impl<'a> Search<'a> {
    fn new(
        p: &Presentation,
        g: &'a FiniteGroup,
        limit: u64,
        skip_free: bool,
        visit: Option<&'a mut dyn FnMut(&[u32]) -> bool>,
    ) -> (Self, u32) {
        let ctx = p.context();
        let n = ctx.generator_count();
        let rels: Vec<Rel> = p
            .relators()
            .iter()
            .map(|w| {
                let syl: Vec<(usize, i64)> = w.syllables().map(|s| (ctx.slot(s.gen), s.exp)).collect();
                let mut slots: Vec<usize> = syl.iter().map(|&(s, _)| s).collect();
                slots.sort_unstable();
                slots.dedup();
                Rel { syl, slots }
            })
            .collect();
        let mut used = alloc::vec![false; n];
        for r in &rels {
            for &s in &r.slots {
                used[s] = true;
            }
        }
        let v_slots: Vec<usize> = (0..n).filter(|&s| ctx.generator_at(s).is_v()).collect();
        // Unconstrained x-generators contribute a factor |G| each and are not searched.
        let mut free = 0u32;
        let order: Vec<usize> = v_slots
            .iter()
            .copied()
            .chain((0..n).filter(|&s| {
                let gen: Generator = ctx.generator_at(s);
                if skip_free && gen.is_x() && !used[s] {
                    free += 1;
                    false
                } else {
                    gen.is_x()
                }
            }))
            .collect();
        let search = Search {
            g,
            visit,
            stopped: false,
            rels,
            v_slots,
            assign: alloc::vec![None; n],
            order,
            nodes: 0,
            limit,
            part: 0,
            parts: 1,
            split_done: false,
        };
        (search, free)
    }
}
