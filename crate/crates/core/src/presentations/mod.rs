//! Finitely presented groups with a block of mutually commuting `v`-generators.

mod finite_group;
mod homs;
mod snf;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::braid_reps::{braid_image, BraidWord, RepresentationSpec};
use crate::diagrams::{Event, MarkedGaussDiagram, Sign};
use crate::error::{Error, Result};
use crate::words::{Generator, Word, WordContext};

pub use finite_group::{permutations, FiniteGroup};
pub use homs::{for_each_hom, hom_count, hom_count_part, DEFAULT_SEARCH_LIMIT};
pub use snf::smith_invariants;

/// `⟨x_1..x_n, v_1..v_m | R, [v_i, v_j]⟩`.
///
/// The `v`-commutators are implicit: words live in `F_n * Z^m`, so they
/// normalize away, and they are counted only by [`Presentation::deficiency`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    ctx: WordContext,
    x_names: Vec<String>,
    v_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(x_names: Vec<String>, v_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let ctx = WordContext::new(x_names.len() as u32, v_names.len() as u32);
        for r in &relators {
            ctx.check(r)?;
        }
        Ok(Presentation { ctx, x_names, v_names, relators })
    }

    /// Generators named `x1..xn`, `v1..vm`.
    pub fn with_default_names(x_count: u32, v_count: u32, relators: Vec<Word>) -> Result<Self> {
        Self::new(
            (1..=x_count).map(|i| format!("x{i}")).collect(),
            (1..=v_count).map(|i| format!("v{i}")).collect(),
            relators,
        )
    }

    pub fn context(&self) -> WordContext {
        self.ctx
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn x_names(&self) -> &[String] {
        &self.x_names
    }

    pub fn v_names(&self) -> &[String] {
        &self.v_names
    }

    pub fn x_count(&self) -> u32 {
        self.ctx.x_count
    }

    pub fn v_count(&self) -> u32 {
        self.ctx.v_count
    }

    pub fn name(&self, g: Generator) -> &str {
        if g.is_x() {
            &self.x_names[(g.index - 1) as usize]
        } else {
            &self.v_names[(g.index - 1) as usize]
        }
    }

    /// Number of implicit `[v_i, v_j]` relators.
    pub fn commutator_count(&self) -> usize {
        let m = self.ctx.v_count as usize;
        m * m.saturating_sub(1) / 2
    }

    /// Generators minus relators, counting the implicit commutators.
    pub fn deficiency(&self) -> i64 {
        self.ctx.generator_count() as i64 - (self.relators.len() + self.commutator_count()) as i64
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_identity() {
            return "1".into();
        }
        let parts: Vec<String> = w
            .syllables()
            .map(|s| match s.exp {
                1 => String::from(self.name(s.gen)),
                e => format!("{}^{e}", self.name(s.gen)),
            })
            .collect();
        parts.join(" ")
    }

    pub fn with_relators(&self, relators: Vec<Word>) -> Result<Self> {
        Self::new(self.x_names.clone(), self.v_names.clone(), relators)
    }

    /// Drop identity relators.
    pub fn without_trivial(&self) -> Self {
        Presentation { relators: self.relators.iter().filter(|r| !r.is_identity()).cloned().collect(), ..self.clone() }
    }
}

/// The `gens:`/`rel:` text format.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("gens:")?;
        for n in self.x_names.iter().chain(&self.v_names) {
            write!(f, " {n}")?;
        }
        for r in &self.relators {
            write!(f, "\nrel: {}", self.render_word(r))?;
        }
        Ok(())
    }
}

/// Conjugator read when passing event `index` on circle `c`.
pub(crate) fn event_conjugator(d: &MarkedGaussDiagram, c: usize, index: usize) -> Word {
    let vk = Word::v(c as u32 + 1);
    match d.circles()[c][index] {
        Event::Node(s) => vk.pow(s.value()),
        Event::Tail(id) => {
            let a = d.arrow(id).expect("arrow");
            Word::v(a.head_circle as u32 + 1).pow(a.sign.value())
        }
        Event::Head(id) => {
            let a = d.arrow(id).expect("arrow");
            let tail = d.tail_position(id).expect("tail");
            let b = Word::x(d.arc_before(tail.circle, tail.index) as u32 + 1);
            let vn = Word::v(a.tail_circle as u32 + 1);
            match a.sign {
                Sign::Plus => vn.inverse().mul(&b.conj_by(&vk.mul(&vn.inverse()))),
                Sign::Minus => vn.mul(&b.inverse()),
            }
        }
    }
}

/// `Π_D`: one `x` per arc (numbered circle by circle from each base arc), one
/// `v` per circle, and `x_{a'}^{-1} x_a^{w}` for every event between arcs `a`, `a'`.
pub fn presentation_of_diagram(d: &MarkedGaussDiagram) -> Presentation {
    let mut relators = Vec::new();
    for (c, evs) in d.circles().iter().enumerate() {
        for index in 0..evs.len() {
            let a = Word::x(d.arc_before(c, index) as u32 + 1);
            let a2 = Word::x(d.arc_after(c, index) as u32 + 1);
            let w = event_conjugator(d, c, index);
            relators.push(a2.inverse().mul(&a.conj_by(&w)));
        }
    }
    Presentation::with_default_names(d.arc_count() as u32, d.circle_count() as u32, relators)
        .expect("relators use diagram generators")
}

/// `G_φ(β)`: relators `g^{-1} φ(β)(g)` for every generator `g` (trivial ones dropped).
pub fn group_of_braid(spec: &RepresentationSpec, b: &BraidWord) -> Result<Presentation> {
    let image = braid_image(spec, b)?;
    let ctx = spec.context();
    let relators = image.images().map(|(g, w)| Word::gen(g).inverse().mul(w)).filter(|r| !r.is_identity()).collect();
    Presentation::with_default_names(ctx.x_count, ctx.v_count, relators)
}

/// `(free rank, invariant factors > 1)` of the abelianization.
pub fn abelianization(p: &Presentation) -> (usize, Vec<u64>) {
    let ctx = p.context();
    let cols = ctx.generator_count();
    let rows: Vec<Vec<i128>> =
        p.relators().iter().map(|r| ctx.generators().map(|g| i128::from(r.exponent_sum(g))).collect()).collect();
    let diag = smith_invariants(&rows, cols);
    let torsion = diag.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
    (cols - diag.len(), torsion)
}

/// Default growth bound for `simplify`, in letters.
pub const DEFAULT_SIMPLIFY_BOUND: u64 = 20_000;

/// Tietze reduction: drop trivial relators and eliminate `x`-generators that
/// occur exactly once (with exponent ±1) in some relator. Relators are kept
/// cyclically reduced.
pub fn simplify(p: &Presentation) -> Presentation {
    simplify_bounded(p, DEFAULT_SIMPLIFY_BOUND)
}

pub fn simplify_bounded(p: &Presentation, bound: u64) -> Presentation {
    simplify_tracked(p, bound).0
}

/// `simplify_bounded`, also returning the image of each original `x`-generator
/// as a word over the simplified generators (`v`'s are kept as they are).
pub fn simplify_tracked(p: &Presentation, bound: u64) -> (Presentation, Vec<Word>) {
    let reduced = p.relators().iter().map(Word::cyclically_reduced).filter(|r| !r.is_identity()).collect();
    let mut cur = p.with_relators(reduced).expect("same generators");
    let mut map: Vec<Word> = (1..=p.x_count()).map(Word::x).collect();
    loop {
        // Smallest net growth of the other relators, then short substitutions,
        // then `g^{-1} w` shapes, then low indices.
        let mut best: Option<((i64, u64, bool, u32), usize, Generator, Word)> = None;
        for (ri, r) in cur.relators.iter().enumerate() {
            let syl: Vec<_> = r.syllables().collect();
            for (k, s) in syl.iter().enumerate() {
                if !s.gen.is_x() || s.exp.abs() != 1 {
                    continue;
                }
                if syl.iter().enumerate().any(|(q, t)| q != k && t.gen == s.gen) {
                    continue;
                }
                let a = Word::from_raw(syl[..k].iter().map(|t| (t.gen, t.exp)));
                let b = Word::from_raw(syl[k + 1..].iter().map(|t| (t.gen, t.exp)));
                // A g B = 1 gives g = A^{-1} B^{-1}; A g^{-1} B = 1 gives g = B A.
                let val = if s.exp == 1 { a.inverse().mul(&b.inverse()) } else { b.mul(&a) };
                let mass: i64 = cur
                    .relators
                    .iter()
                    .flat_map(|r| r.syllables())
                    .filter(|t| t.gen == s.gen)
                    .map(|t| t.exp.abs())
                    .sum();
                let len = val.letter_length();
                let key = ((mass - 1) * len as i64 - mass, len, s.exp != -1, s.gen.index);
                if best.as_ref().is_none_or(|(k, ..)| key < *k) {
                    best = Some((key, ri, s.gen, val));
                }
            }
        }
        let Some((_, ri, g, val)) = best else { return (cur, map) };
        let mut relators: Vec<Word> = cur
            .relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != ri)
            .map(|(_, r)| r.substitute(|h| if h == g { val.clone() } else { Word::gen(h) }).cyclically_reduced())
            .collect();
        let total: u64 = relators.iter().map(Word::letter_length).sum();
        if total > bound {
            return (cur, map);
        }
        // Renumber the x-generators above g.
        let shift = |h: Generator| {
            if h.is_x() && h.index > g.index {
                Generator::x(h.index - 1)
            } else {
                h
            }
        };
        relators = relators.iter().map(|r| r.rename(shift).cyclically_reduced()).filter(|r| !r.is_identity()).collect();
        map = map
            .iter()
            .map(|w| w.substitute(|h| if h == g { val.clone() } else { Word::gen(h) }).rename(shift))
            .collect();
        let mut x_names = cur.x_names.clone();
        x_names.remove((g.index - 1) as usize);
        cur = Presentation::new(x_names, cur.v_names.clone(), relators).expect("renumbered");
    }
}

/// An edge of `Γ`: a relator of the shape `x_j^{-1} x_i^{w}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationRelator {
    pub source: u32,
    pub target: u32,
    pub conjugator: Word,
}

/// Read `r` as `x_j^{-1} w^{-1} x_i w`, allowing cyclic rotation and inversion.
pub fn as_conjugation(r: &Word) -> Option<ConjugationRelator> {
    for cand in [r.clone(), r.inverse()] {
        let letters: Vec<(Generator, i64)> = cand.letters().collect();
        let n = letters.len();
        for start in 0..n {
            let (g, e) = letters[start];
            if !g.is_x() || e != -1 {
                continue;
            }
            let rest = Word::from_raw((1..n).map(|k| letters[(start + k) % n]));
            let rl: Vec<(Generator, i64)> = rest.letters().collect();
            if rl.len().is_multiple_of(2) {
                continue;
            }
            let mid = rl.len() / 2;
            let (mg, me) = rl[mid];
            if !mg.is_x() || me != 1 {
                continue;
            }
            let w = Word::from_raw(rl[mid + 1..].iter().copied());
            let winv = Word::from_raw(rl[..mid].iter().copied());
            if winv == w.inverse() {
                return Some(ConjugationRelator { source: mg.index, target: g.index, conjugator: w });
            }
        }
    }
    None
}

/// `Γ` over the `x`-generators, one edge per conjugation relator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationGraph {
    pub vertices: u32,
    pub edges: Vec<(u32, u32)>,
}

impl RelationGraph {
    pub fn components(&self) -> usize {
        let n = self.vertices as usize;
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        let mut comps = n;
        for &(a, b) in &self.edges {
            let (ra, rb) = (root(&mut parent, a as usize - 1), root(&mut parent, b as usize - 1));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        comps
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmReport {
    pub is_cm: bool,
    pub m: u32,
    pub graph: RelationGraph,
    pub components: usize,
    pub is_m_irreducible: bool,
    pub deficiency: i64,
    /// Parsed relators, in order; `None` where the shape does not match.
    pub relators: Vec<Option<ConjugationRelator>>,
}

pub fn classify_cm(p: &Presentation) -> CmReport {
    let relators: Vec<Option<ConjugationRelator>> = p.relators().iter().map(as_conjugation).collect();
    let is_cm = relators.iter().all(Option::is_some);
    let graph = RelationGraph {
        vertices: p.x_count(),
        edges: relators.iter().flatten().map(|c| (c.source, c.target)).collect(),
    };
    let components = graph.components();
    CmReport {
        is_cm,
        m: p.v_count(),
        is_m_irreducible: is_cm && components == p.v_count() as usize,
        components,
        graph,
        deficiency: p.deficiency(),
        relators,
    }
}

/// Check a word in `F_n * Z^m` maps to the identity of `g` under `images`
/// (indexed by generator slot).
pub fn evaluate(g: &FiniteGroup, ctx: WordContext, images: &[u32], w: &Word) -> u32 {
    w.syllables().fold(0, |acc, s| g.mul(acc, g.pow(images[ctx.slot(s.gen)], s.exp)))
}

/// `images` defines a homomorphism from `p` to `g` (commuting `v`-images included).
pub fn is_homomorphism(p: &Presentation, g: &FiniteGroup, images: &[u32]) -> Result<bool> {
    let ctx = p.context();
    if images.len() != ctx.generator_count() {
        return Err(Error::SizeMismatch { left: images.len(), right: ctx.generator_count() });
    }
    let v: Vec<u32> = ctx.generators().filter(|g| g.is_v()).map(|h| images[ctx.slot(h)]).collect();
    let commuting = v.iter().all(|&a| v.iter().all(|&b| g.commute(a, b)));
    Ok(commuting && p.relators().iter().all(|r| evaluate(g, ctx, images, r) == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(raw: &[(Generator, i64)]) -> Word {
        Word::from_raw(raw.iter().copied())
    }

    #[test]
    fn d1_presentation() {
        let d = MarkedGaussDiagram::new(vec![vec![Event::Node(Sign::Minus)]], Default::default()).unwrap();
        let p = presentation_of_diagram(&d);
        assert_eq!(p.to_string(), "gens: x1 v1\nrel: x1^-1 v1 x1 v1^-1");
        assert_eq!(abelianization(&p), (2, vec![]));
        assert_eq!(hom_count(&p, &FiniteGroup::symmetric(3)).unwrap(), 18);
        let t = presentation_of_diagram(&MarkedGaussDiagram::trivial(1));
        assert_eq!(hom_count(&t, &FiniteGroup::symmetric(3)).unwrap(), 36);
    }

    #[test]
    fn abelianization_examples() {
        let x = Generator::x(1);
        let p = Presentation::with_default_names(1, 0, vec![w(&[(x, 2)])]).unwrap();
        assert_eq!(abelianization(&p), (0, vec![2]));
        assert_eq!(hom_count(&p, &FiniteGroup::symmetric(3)).unwrap(), 4);
        let (a, b) = (Generator::x(1), Generator::x(2));
        let q = Presentation::with_default_names(2, 0, vec![w(&[(a, 2), (b, 4)]), w(&[(a, 4), (b, 2)])]).unwrap();
        assert_eq!(abelianization(&q), (0, vec![2, 6]));
    }

    #[test]
    fn simplify_examples() {
        let (a, b, v) = (Generator::x(1), Generator::x(2), Generator::v(1));
        let p = Presentation::with_default_names(2, 1, vec![w(&[(b, -1), (v, -1), (a, 1), (v, 1)])]).unwrap();
        let s = simplify(&p);
        assert_eq!(s.to_string(), "gens: x1 v1");
        assert_eq!(simplify(&s), s);
        let q = Presentation::with_default_names(1, 0, vec![w(&[(a, 1), (a, -1)])]).unwrap();
        assert_eq!(simplify(&q).relators().len(), 0);
    }

    #[test]
    fn cm_classification() {
        let (x1, x2, v) = (Generator::x(1), Generator::x(2), Generator::v(1));
        let p = Presentation::with_default_names(2, 1, vec![w(&[(x2, -1), (v, -1), (x1, 1), (v, 1)])]).unwrap();
        let rep = classify_cm(&p);
        assert!(rep.is_cm && rep.is_m_irreducible);
        assert_eq!(rep.deficiency, 2);
        let c = rep.relators[0].clone().unwrap();
        assert_eq!((c.source, c.target), (1, 2));
        assert_eq!(c.conjugator, Word::v(1));
        let q = Presentation::with_default_names(1, 1, vec![w(&[(x1, 2)])]).unwrap();
        assert!(!classify_cm(&q).is_cm);
    }

    #[test]
    fn braid_groups() {
        use crate::braid_reps::{get_representation, BraidLetter, RepName};
        let s = get_representation(RepName::PhiS, 1).unwrap();
        let p = group_of_braid(&s, &BraidWord::empty(1)).unwrap();
        assert_eq!(p.to_string(), "gens: x1 v1");
        let s2 = get_representation(RepName::PhiS, 2).unwrap();
        let b = BraidWord::new(2, vec![BraidLetter::sigma(1)]).unwrap();
        let g = group_of_braid(&s2, &b).unwrap();
        assert_eq!(abelianization(&g), (2, vec![]));
        assert_eq!(x_to_string(&g), g.to_string());
    }

    fn x_to_string(p: &Presentation) -> alloc::string::String {
        p.to_string()
    }
}
