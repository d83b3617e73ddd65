use alloc::format;
use alloc::vec::Vec;

use super::{Arrow, Event, MarkedGaussDiagram, Position, Sign};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
    NodeNodeSlide,
}

/// Moves that `apply_move` accepts; each is gated by the group-invariance tests.
pub const SHIPPED_MOVES: [MoveKind; 6] =
    [MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3, MoveKind::NodeNodeSlide];

/// A move together with its location.
///
/// Gaps index insertion points: gap `g` lies just before event `g`, and
/// `g = len` appends after the last event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveSpec {
    /// Insert a kink: a chord whose endpoints become adjacent.
    R1Add {
        circle: usize,
        gap: usize,
        sign: Sign,
        tail_first: bool,
    },
    R1Remove {
        arrow: u32,
    },
    /// Insert two opposite-signed arrows with adjacent tails and adjacent heads.
    R2Add {
        tail_circle: usize,
        tail_gap: usize,
        head_circle: usize,
        head_gap: usize,
        sign: Sign,
        heads_reversed: bool,
    },
    R2Remove {
        first: u32,
        second: u32,
    },
    /// Reverse the three adjacent endpoint pairs of a triangle of arrows.
    R3 {
        arrows: [u32; 3],
    },
    /// Swap the node at `index` with the node after it.
    NodeNodeSlide {
        circle: usize,
        index: usize,
    },
}

impl MoveSpec {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSpec::R1Add { .. } => MoveKind::R1Add,
            MoveSpec::R1Remove { .. } => MoveKind::R1Remove,
            MoveSpec::R2Add { .. } => MoveKind::R2Add,
            MoveSpec::R2Remove { .. } => MoveKind::R2Remove,
            MoveSpec::R3 { .. } => MoveKind::R3,
            MoveSpec::NodeNodeSlide { .. } => MoveKind::NodeNodeSlide,
        }
    }
}

fn mismatch(msg: impl Into<alloc::string::String>) -> Error {
    Error::MovePattern(msg.into())
}

/// `q` immediately follows `p` on the same circle.
fn follows(d: &MarkedGaussDiagram, p: Position, q: Position) -> bool {
    let len = d.circles[p.circle].len();
    p.circle == q.circle && len >= 2 && (p.index + 1) % len == q.index
}

fn adjacent(d: &MarkedGaussDiagram, p: Position, q: Position) -> bool {
    follows(d, p, q) || follows(d, q, p)
}

fn endpoints(d: &MarkedGaussDiagram, id: u32) -> Result<(Position, Position)> {
    match (d.tail_position(id), d.head_position(id)) {
        (Some(t), Some(h)) => Ok((t, h)),
        _ => Err(mismatch(format!("no arrow {id}"))),
    }
}

fn check_gap(d: &MarkedGaussDiagram, circle: usize, gap: usize) -> Result<()> {
    match d.circles.get(circle) {
        Some(evs) if gap <= evs.len() => Ok(()),
        _ => Err(Error::InvalidPosition { circle, position: gap }),
    }
}

fn remove_positions(d: &mut MarkedGaussDiagram, mut ps: Vec<Position>) {
    ps.sort();
    for p in ps.into_iter().rev() {
        d.circles[p.circle].remove(p.index);
    }
}

/// The triangle roles `(top-mid, top-bottom, mid-bottom)` of three arrows, if any.
///
/// Pairs: tails of the first two adjacent, head of the first next to the tail
/// of the third, heads of the last two adjacent.
pub(crate) fn r3_roles(d: &MarkedGaussDiagram, ids: [u32; 3]) -> Option<[u32; 3]> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    if ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2] {
        return None;
    }
    let ends: Vec<(Position, Position)> = ids.iter().map(|&id| endpoints(d, id)).collect::<Result<_>>().ok()?;
    PERMS.iter().find_map(|p| {
        let (a, b, c) = (ends[p[0]], ends[p[1]], ends[p[2]]);
        (adjacent(d, a.0, b.0) && adjacent(d, a.1, c.0) && adjacent(d, b.1, c.1))
            .then(|| [ids[p[0]], ids[p[1]], ids[p[2]]])
    })
}

/// Orientation data of an R3 triangle in role order: signs, then whether each
/// pair reads `(T_a, T_b)`, `(H_a, T_c)`, `(H_b, H_c)` in circle order.
pub(crate) fn r3_pattern(d: &MarkedGaussDiagram, roles: [u32; 3]) -> ([Sign; 3], [bool; 3]) {
    let e: Vec<(Position, Position)> = roles.iter().map(|&id| endpoints(d, id).expect("arrow")).collect();
    let signs = [d.arrows[&roles[0]].sign, d.arrows[&roles[1]].sign, d.arrows[&roles[2]].sign];
    let orders = [follows(d, e[0].0, e[1].0), follows(d, e[0].1, e[2].0), follows(d, e[1].1, e[2].1)];
    (signs, orders)
}

/// Sign/order patterns on which R3 is admitted.
///
/// The first pair's order fixes the others: the middle pair agrees with it iff
/// the second and third arrows have equal signs, the bottom pair iff the first
/// and third do. These are the sixteen patterns (two per sign triple) on which
/// reversing the three pairs preserves `Π_D`.
pub(crate) fn r3_admissible(signs: [Sign; 3], orders: [bool; 3]) -> bool {
    let [a, b, c] = signs;
    (orders[0] == orders[1]) == (b == c) && (orders[0] == orders[2]) == (a == c)
}

pub fn apply_move(d: &MarkedGaussDiagram, m: &MoveSpec) -> Result<MarkedGaussDiagram> {
    let mut out = d.clone();
    match *m {
        MoveSpec::R1Add { circle, gap, sign, tail_first } => {
            check_gap(d, circle, gap)?;
            let id = d.next_arrow_id();
            let pair = if tail_first { [Event::Tail(id), Event::Head(id)] } else { [Event::Head(id), Event::Tail(id)] };
            let evs = &mut out.circles[circle];
            evs.splice(gap..gap, pair);
            out.arrows.insert(id, Arrow { sign, tail_circle: circle, head_circle: circle });
        }
        MoveSpec::R1Remove { arrow } => {
            let (t, h) = endpoints(d, arrow)?;
            if !adjacent(d, t, h) {
                return Err(mismatch(format!("endpoints of arrow {arrow} are not adjacent")));
            }
            remove_positions(&mut out, alloc::vec![t, h]);
            out.arrows.remove(&arrow);
        }
        MoveSpec::R2Add { tail_circle, tail_gap, head_circle, head_gap, sign, heads_reversed } => {
            check_gap(d, tail_circle, tail_gap)?;
            check_gap(d, head_circle, head_gap)?;
            let a = d.next_arrow_id();
            let b = a + 1;
            let tails = [Event::Tail(a), Event::Tail(b)];
            let heads =
                if heads_reversed { [Event::Head(b), Event::Head(a)] } else { [Event::Head(a), Event::Head(b)] };
            if tail_circle == head_circle && tail_gap == head_gap {
                out.circles[tail_circle].splice(tail_gap..tail_gap, tails.into_iter().chain(heads));
            } else if tail_circle == head_circle && head_gap > tail_gap {
                out.circles[head_circle].splice(head_gap..head_gap, heads);
                out.circles[tail_circle].splice(tail_gap..tail_gap, tails);
            } else {
                out.circles[tail_circle].splice(tail_gap..tail_gap, tails);
                out.circles[head_circle].splice(head_gap..head_gap, heads);
            }
            out.arrows.insert(a, Arrow { sign, tail_circle, head_circle });
            out.arrows.insert(b, Arrow { sign: sign.negate(), tail_circle, head_circle });
        }
        MoveSpec::R2Remove { first, second } => {
            if first == second {
                return Err(mismatch("R2 needs two distinct arrows"));
            }
            let (ta, ha) = endpoints(d, first)?;
            let (tb, hb) = endpoints(d, second)?;
            if d.arrows[&first].sign == d.arrows[&second].sign {
                return Err(mismatch("R2 arrows must have opposite signs"));
            }
            if !adjacent(d, ta, tb) || !adjacent(d, ha, hb) {
                return Err(mismatch("R2 endpoints are not pairwise adjacent"));
            }
            remove_positions(&mut out, alloc::vec![ta, ha, tb, hb]);
            out.arrows.remove(&first);
            out.arrows.remove(&second);
        }
        MoveSpec::R3 { arrows } => {
            let roles = r3_roles(d, arrows).ok_or_else(|| mismatch("arrows do not form an R3 triangle"))?;
            let (signs, orders) = r3_pattern(d, roles);
            if !r3_admissible(signs, orders) {
                return Err(mismatch("R3 triangle has an inadmissible sign pattern"));
            }
            let e: Vec<(Position, Position)> = roles.iter().map(|&id| endpoints(d, id)).collect::<Result<_>>()?;
            for (p, q) in [(e[0].0, e[1].0), (e[0].1, e[2].0), (e[1].1, e[2].1)] {
                let evs = &mut out.circles[p.circle];
                evs.swap(p.index, q.index);
            }
        }
        MoveSpec::NodeNodeSlide { circle, index } => {
            let evs = d.circles.get(circle).ok_or(Error::InvalidPosition { circle, position: index })?;
            if evs.len() < 2 || index >= evs.len() {
                return Err(Error::InvalidPosition { circle, position: index });
            }
            let next = (index + 1) % evs.len();
            match (evs[index], evs[next]) {
                (Event::Node(_), Event::Node(_)) => out.circles[circle].swap(index, next),
                _ => return Err(mismatch("NodeNodeSlide needs two adjacent nodes")),
            }
        }
    }
    out.refresh_arrow_circles();
    Ok(out)
}

/// Every removal, R3 and slide instance that applies to `d`.
pub fn move_instances(d: &MarkedGaussDiagram) -> Vec<MoveSpec> {
    let mut out = Vec::new();
    let ids: Vec<u32> = d.arrows.keys().copied().collect();
    for &id in &ids {
        let m = MoveSpec::R1Remove { arrow: id };
        if apply_move(d, &m).is_ok() {
            out.push(m);
        }
    }
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            let m = MoveSpec::R2Remove { first: a, second: b };
            if apply_move(d, &m).is_ok() {
                out.push(m);
            }
        }
    }
    for (i, &a) in ids.iter().enumerate() {
        for (j, &b) in ids.iter().enumerate().skip(i + 1) {
            for &c in &ids[j + 1..] {
                let m = MoveSpec::R3 { arrows: [a, b, c] };
                if apply_move(d, &m).is_ok() {
                    out.push(m);
                }
            }
        }
    }
    for (c, evs) in d.circles.iter().enumerate() {
        for index in 0..evs.len() {
            let m = MoveSpec::NodeNodeSlide { circle: c, index };
            if apply_move(d, &m).is_ok() {
                out.push(m);
            }
        }
    }
    out
}
