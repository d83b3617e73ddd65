//! Marked Gauss diagrams: circles carrying signed arrows and signed nodes.

mod moves;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub use moves::{apply_move, move_instances, MoveKind, MoveSpec, SHIPPED_MOVES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    Tail(u32),
    Head(u32),
    Node(Sign),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub sign: Sign,
    pub tail_circle: usize,
    pub head_circle: usize,
}

/// Position of an event: circle index and index in that circle's sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub circle: usize,
    pub index: usize,
}

/// Circles are read anticlockwise starting at the base point, which sits just
/// before the first stored event.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedGaussDiagram {
    circles: Vec<Vec<Event>>,
    arrows: BTreeMap<u32, Arrow>,
}

impl MarkedGaussDiagram {
    /// Build and validate a diagram; arrow circles are inferred from the events.
    pub fn new(circles: Vec<Vec<Event>>, signs: BTreeMap<u32, Sign>) -> Result<Self> {
        if circles.is_empty() {
            return Err(Error::InvalidDiagram("a diagram needs at least one circle".into()));
        }
        let mut tails: BTreeMap<u32, usize> = BTreeMap::new();
        let mut heads: BTreeMap<u32, usize> = BTreeMap::new();
        for (c, events) in circles.iter().enumerate() {
            for e in events {
                let (slot, what) = match *e {
                    Event::Tail(id) => (tails.insert(id, c), ("tail", id)),
                    Event::Head(id) => (heads.insert(id, c), ("head", id)),
                    Event::Node(_) => continue,
                };
                if slot.is_some() {
                    return Err(Error::InvalidDiagram(format!("arrow {} has more than one {}", what.1, what.0)));
                }
            }
        }
        let mut arrows = BTreeMap::new();
        for (&id, &tc) in &tails {
            let hc = *heads.get(&id).ok_or_else(|| Error::InvalidDiagram(format!("arrow {id} has no head")))?;
            let sign = *signs.get(&id).ok_or_else(|| Error::InvalidDiagram(format!("arrow {id} has no sign")))?;
            arrows.insert(id, Arrow { sign, tail_circle: tc, head_circle: hc });
        }
        if let Some(id) = heads.keys().find(|id| !tails.contains_key(id)) {
            return Err(Error::InvalidDiagram(format!("arrow {id} has no tail")));
        }
        if let Some(id) = signs.keys().find(|id| !tails.contains_key(id)) {
            return Err(Error::InvalidDiagram(format!("arrow {id} does not occur")));
        }
        Ok(MarkedGaussDiagram { circles, arrows })
    }

    /// `m` event-free circles.
    pub fn trivial(m: usize) -> Self {
        MarkedGaussDiagram { circles: alloc::vec![Vec::new(); m.max(1)], arrows: BTreeMap::new() }
    }

    pub fn circles(&self) -> &[Vec<Event>] {
        &self.circles
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn arrows(&self) -> &BTreeMap<u32, Arrow> {
        &self.arrows
    }

    pub fn arrow(&self, id: u32) -> Option<&Arrow> {
        self.arrows.get(&id)
    }

    pub fn event_count(&self) -> usize {
        self.circles.iter().map(Vec::len).sum()
    }

    pub fn signs(&self) -> BTreeMap<u32, Sign> {
        self.arrows.iter().map(|(&id, a)| (id, a.sign)).collect()
    }

    /// Number of arcs on circle `c`: one per event, and one for an empty circle.
    pub fn arc_count_on(&self, c: usize) -> usize {
        self.circles[c].len().max(1)
    }

    pub fn arc_count(&self) -> usize {
        (0..self.circles.len()).map(|c| self.arc_count_on(c)).sum()
    }

    /// Index (0-based, global) of the first arc of circle `c`.
    pub fn arc_offset(&self, c: usize) -> usize {
        (0..c).map(|k| self.arc_count_on(k)).sum()
    }

    /// Global 0-based arc just before event `index` on circle `c`.
    pub fn arc_before(&self, c: usize, index: usize) -> usize {
        self.arc_offset(c) + index
    }

    /// Global 0-based arc just after event `index` on circle `c`.
    pub fn arc_after(&self, c: usize, index: usize) -> usize {
        self.arc_offset(c) + (index + 1) % self.arc_count_on(c)
    }

    /// Circle containing global arc `arc`.
    pub fn circle_of_arc(&self, arc: usize) -> Option<usize> {
        let mut acc = 0;
        for c in 0..self.circles.len() {
            acc += self.arc_count_on(c);
            if arc < acc {
                return Some(c);
            }
        }
        None
    }

    pub fn tail_position(&self, id: u32) -> Option<Position> {
        self.find(|e| e == Event::Tail(id))
    }

    pub fn head_position(&self, id: u32) -> Option<Position> {
        self.find(|e| e == Event::Head(id))
    }

    fn find(&self, pred: impl Fn(Event) -> bool) -> Option<Position> {
        self.circles
            .iter()
            .enumerate()
            .find_map(|(c, evs)| evs.iter().position(|&e| pred(e)).map(|index| Position { circle: c, index }))
    }

    /// `(count, sum of signs, product of signs)` of the nodes.
    pub fn node_invariants(&self) -> (i64, i64, i64) {
        let mut count = 0;
        let mut sum = 0;
        let mut prod = 1;
        for e in self.circles.iter().flatten() {
            if let Event::Node(s) = e {
                count += 1;
                sum += s.value();
                prod *= s.value();
            }
        }
        (count, sum, prod)
    }

    /// Reverse every circle and negate all arrow and node signs.
    pub fn reverse(&self) -> Self {
        let circles = self
            .circles
            .iter()
            .map(|evs| {
                evs.iter()
                    .rev()
                    .map(|&e| match e {
                        Event::Node(s) => Event::Node(s.negate()),
                        other => other,
                    })
                    .collect()
            })
            .collect();
        let arrows = self.arrows.iter().map(|(&id, a)| (id, Arrow { sign: a.sign.negate(), ..*a })).collect();
        MarkedGaussDiagram { circles, arrows }
    }

    /// Arc of the reversed diagram that runs along global arc `arc` of `self`.
    pub fn reversed_arc(&self, arc: usize) -> usize {
        let c = self.circle_of_arc(arc).expect("arc in range");
        let off = self.arc_offset(c);
        let k = self.arc_count_on(c);
        let local = arc - off;
        off + (k - local) % k
    }

    /// Renumber arrows `1..` in order of first appearance.
    pub fn canonical_ids(&self) -> Self {
        let mut map = BTreeMap::new();
        let mut next = 1u32;
        for e in self.circles.iter().flatten() {
            if let Event::Tail(id) | Event::Head(id) = *e {
                map.entry(id).or_insert_with(|| {
                    next += 1;
                    next - 1
                });
            }
        }
        self.relabel(|id| map[&id])
    }

    pub(crate) fn relabel(&self, f: impl Fn(u32) -> u32) -> Self {
        let circles = self
            .circles
            .iter()
            .map(|evs| {
                evs.iter()
                    .map(|&e| match e {
                        Event::Tail(id) => Event::Tail(f(id)),
                        Event::Head(id) => Event::Head(f(id)),
                        n => n,
                    })
                    .collect()
            })
            .collect();
        let arrows = self.arrows.iter().map(|(&id, &a)| (f(id), a)).collect();
        MarkedGaussDiagram { circles, arrows }
    }

    /// Equality after forgetting base points and arrow ids.
    pub fn same_up_to_base_points(&self, other: &Self) -> bool {
        if self.circles.len() != other.circles.len() {
            return false;
        }
        let target = other.canonical_ids();
        let mut rot = alloc::vec![0usize; self.circles.len()];
        // Odometer over rotations of every circle.
        loop {
            let rotated = self.rotate_circles(&rot).canonical_ids();
            if rotated == target {
                return true;
            }
            let mut k = 0;
            loop {
                if k == rot.len() {
                    return false;
                }
                rot[k] += 1;
                if rot[k] < self.circles[k].len().max(1) {
                    break;
                }
                rot[k] = 0;
                k += 1;
            }
        }
    }

    fn rotate_circles(&self, by: &[usize]) -> Self {
        let circles = self
            .circles
            .iter()
            .zip(by)
            .map(|(evs, &r)| {
                let mut v = evs.clone();
                if !v.is_empty() {
                    let len = v.len();
                    v.rotate_left(r % len);
                }
                v
            })
            .collect();
        MarkedGaussDiagram { circles, arrows: self.arrows.clone() }
    }

    /// Move the base point of circle `c` to just before event `gap`.
    pub fn rebase(&self, c: usize, gap: usize) -> Result<Self> {
        let evs = self.circles.get(c).ok_or(Error::InvalidPosition { circle: c, position: gap })?;
        if gap >= evs.len().max(1) {
            return Err(Error::InvalidPosition { circle: c, position: gap });
        }
        let mut by = alloc::vec![0; self.circles.len()];
        by[c] = gap;
        Ok(self.rotate_circles(&by))
    }

    /// Splice circle `c1` of `d1` at gap `g1` with circle `c2` of `d2` at gap `g2`.
    ///
    /// Gap `g` lies just before event `g`; gap 0 is on the base arc. The merged
    /// circle starts with `d1`'s events from `g1` and replaces `c1`; the other
    /// circles of `d2` are appended and its arrow ids shifted past those of `d1`.
    pub fn connected_sum(d1: &Self, c1: usize, g1: usize, d2: &Self, c2: usize, g2: usize) -> Result<Self> {
        let check = |d: &Self, c: usize, g: usize| -> Result<()> {
            match d.circles.get(c) {
                Some(evs) if g < evs.len().max(1) => Ok(()),
                _ => Err(Error::InvalidPosition { circle: c, position: g }),
            }
        };
        check(d1, c1, g1)?;
        check(d2, c2, g2)?;
        let shift = d1.arrows.keys().next_back().copied().unwrap_or(0);
        let d2 = d2.relabel(|id| id + shift);
        let mut merged = d1.circles[c1].clone();
        let len = merged.len();
        merged.rotate_left(g1.min(len));
        let mut second = d2.circles[c2].clone();
        let len = second.len();
        second.rotate_left(g2.min(len));
        merged.extend(second);

        let mut circles = d1.circles.clone();
        circles[c1] = merged;
        let mut d2_circle_map = alloc::vec![0usize; d2.circles.len()];
        for (k, evs) in d2.circles.iter().enumerate() {
            if k == c2 {
                d2_circle_map[k] = c1;
            } else {
                d2_circle_map[k] = circles.len();
                circles.push(evs.clone());
            }
        }
        let mut arrows = d1.arrows.clone();
        for (&id, a) in &d2.arrows {
            arrows.insert(
                id,
                Arrow {
                    sign: a.sign,
                    tail_circle: d2_circle_map[a.tail_circle],
                    head_circle: d2_circle_map[a.head_circle],
                },
            );
        }
        Ok(MarkedGaussDiagram { circles, arrows })
    }

    /// The id `apply_move` gives to the next arrow it inserts.
    pub fn next_arrow_id(&self) -> u32 {
        self.arrows.keys().next_back().map_or(1, |k| k + 1)
    }

    /// Recompute the arrow table's circle indices from the events.
    pub(crate) fn refresh_arrow_circles(&mut self) {
        for (c, evs) in self.circles.iter().enumerate() {
            for e in evs {
                match *e {
                    Event::Tail(id) => self.arrows.get_mut(&id).expect("arrow").tail_circle = c,
                    Event::Head(id) => self.arrows.get_mut(&id).expect("arrow").head_circle = c,
                    Event::Node(_) => {}
                }
            }
        }
    }
}

/// Canonical marked Gauss code, one `circle k:` line per circle.
impl fmt::Display for MarkedGaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, evs) in self.circles.iter().enumerate() {
            if c > 0 {
                f.write_str("\n")?;
            }
            write!(f, "circle {}:", c + 1)?;
            for e in evs {
                match *e {
                    Event::Tail(id) => write!(f, " T{id}{}", self.arrows[&id].sign)?,
                    Event::Head(id) => write!(f, " H{id}{}", self.arrows[&id].sign)?,
                    Event::Node(s) => write!(f, " N{s}")?,
                }
            }
        }
        Ok(())
    }
}
