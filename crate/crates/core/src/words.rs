//! Words in free products `F_n * Z^m` and generator-image endomaps.
//!
//! `x`-generators are free, `v`-generators commute with each other. A [`Word`]
//! is always stored in normal form: alternating blocks of `x`-syllables and
//! `v`-runs, where a `v`-run lists each `v`-generator at most once, sorted by
//! index. Two words are equal as group elements iff their syllable vectors are
//! equal.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    X,
    V,
}

/// A generator `x_k` or `v_k` (indices start at 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub kind: GenKind,
    pub index: u32,
}

impl Generator {
    pub const fn x(index: u32) -> Self {
        Generator { kind: GenKind::X, index }
    }

    pub const fn v(index: u32) -> Self {
        Generator { kind: GenKind::V, index }
    }

    pub fn is_x(self) -> bool {
        self.kind == GenKind::X
    }

    pub fn is_v(self) -> bool {
        self.kind == GenKind::V
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::X => write!(f, "x{}", self.index),
            GenKind::V => write!(f, "v{}", self.index),
        }
    }
}

/// The ambient group `F_{x_count} * Z^{v_count}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WordContext {
    pub x_count: u32,
    pub v_count: u32,
}

impl WordContext {
    pub const fn new(x_count: u32, v_count: u32) -> Self {
        WordContext { x_count, v_count }
    }

    pub fn contains(&self, g: Generator) -> bool {
        g.index >= 1
            && match g.kind {
                GenKind::X => g.index <= self.x_count,
                GenKind::V => g.index <= self.v_count,
            }
    }

    pub fn generator_count(&self) -> usize {
        (self.x_count + self.v_count) as usize
    }

    /// All generators, `x`'s first.
    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (1..=self.x_count).map(Generator::x).chain((1..=self.v_count).map(Generator::v))
    }

    /// Position of `g` in [`WordContext::generators`].
    pub fn slot(&self, g: Generator) -> usize {
        match g.kind {
            GenKind::X => (g.index - 1) as usize,
            GenKind::V => (self.x_count + g.index - 1) as usize,
        }
    }

    pub fn generator_at(&self, slot: usize) -> Generator {
        let slot = slot as u32;
        if slot < self.x_count {
            Generator::x(slot + 1)
        } else {
            Generator::v(slot - self.x_count + 1)
        }
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        match w.syllables.iter().find(|s| !self.contains(s.0)) {
            Some(s) => Err(Error::GeneratorOutOfRange { gen: s.0, ctx: *self }),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: Generator,
    pub exp: i64,
}

/// A reduced element of `F_n * Z^m`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<SyllableKey>,
}

// Stored as a plain tuple so that `Word` can derive `Ord`.
type SyllableKey = (Generator, i64);

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(g: Generator) -> Self {
        Word { syllables: alloc::vec![(g, 1)] }
    }

    pub fn x(index: u32) -> Self {
        Word::gen(Generator::x(index))
    }

    pub fn v(index: u32) -> Self {
        Word::gen(Generator::v(index))
    }

    pub fn power_of(g: Generator, exp: i64) -> Self {
        if exp == 0 {
            Word::identity()
        } else {
            Word { syllables: alloc::vec![(g, exp)] }
        }
    }

    /// Normal form of a raw syllable sequence, without range checks.
    pub fn from_raw<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (Generator, i64)>,
    {
        let mut w = Word::identity();
        for (g, e) in raw {
            w.push(g, e);
        }
        w
    }

    /// Normal form of `raw`, checking every generator against `ctx`.
    pub fn normalize<I>(raw: I, ctx: &WordContext) -> Result<Self>
    where
        I: IntoIterator<Item = (Generator, i64)>,
    {
        let mut w = Word::identity();
        for (g, e) in raw {
            if !ctx.contains(g) {
                return Err(Error::GeneratorOutOfRange { gen: g, ctx: *ctx });
            }
            w.push(g, e);
        }
        Ok(w)
    }

    /// Multiply on the right by `g^e`, keeping normal form.
    fn push(&mut self, g: Generator, e: i64) {
        if e == 0 {
            return;
        }
        match g.kind {
            GenKind::X => match self.syllables.last_mut() {
                Some(last) if last.0 == g => {
                    last.1 += e;
                    if last.1 == 0 {
                        self.syllables.pop();
                    }
                }
                _ => self.syllables.push((g, e)),
            },
            GenKind::V => {
                let run_start = self.syllables.iter().rposition(|s| s.0.is_x()).map_or(0, |p| p + 1);
                let run = &self.syllables[run_start..];
                match run.binary_search_by(|s| s.0.index.cmp(&g.index)) {
                    Ok(pos) => {
                        let pos = run_start + pos;
                        self.syllables[pos].1 += e;
                        if self.syllables[pos].1 == 0 {
                            self.syllables.remove(pos);
                        }
                    }
                    Err(pos) => self.syllables.insert(run_start + pos, (g, e)),
                }
            }
        }
    }

    pub fn syllables(&self) -> impl DoubleEndedIterator<Item = Syllable> + ExactSizeIterator + '_ {
        self.syllables.iter().map(|&(gen, exp)| Syllable { gen, exp })
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    /// Length counted in letters `g^{±1}`.
    pub fn letter_length(&self) -> u64 {
        self.syllables.iter().map(|s| s.1.unsigned_abs()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// The word as a sequence of letters `g^{±1}`.
    pub fn letters(&self) -> impl Iterator<Item = (Generator, i64)> + '_ {
        self.syllables.iter().flat_map(|&(g, e)| core::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    /// `Some(g)` iff the word is the single letter `g`.
    pub fn as_generator(&self) -> Option<Generator> {
        match self.syllables.as_slice() {
            [(g, 1)] => Some(*g),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.syllables {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        // Reversing a normal form keeps every v-run contiguous, but runs must
        // be re-sorted, so go through `push`.
        Word::from_raw(self.syllables.iter().rev().map(|&(g, e)| (g, -e)))
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `b^{-1} a b`.
    pub fn conjugate(a: &Word, b: &Word) -> Word {
        b.inverse().mul(a).mul(b)
    }

    /// `self^b`.
    pub fn conj_by(&self, b: &Word) -> Word {
        Word::conjugate(self, b)
    }

    /// `[a, b] = a^{-1} b^{-1} a b`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Word {
        words.into_iter().fold(Word::identity(), |acc, w| acc.mul(w))
    }

    /// Total exponent of `g` in the word.
    pub fn exponent_sum(&self, g: Generator) -> i64 {
        self.syllables.iter().filter(|s| s.0 == g).map(|s| s.1).sum()
    }

    pub fn mentions(&self, g: Generator) -> bool {
        self.syllables.iter().any(|s| s.0 == g)
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.syllables.iter().map(|s| s.0)
    }

    /// Substitute each generator by a word and normalize.
    pub fn substitute<F>(&self, mut image: F) -> Word
    where
        F: FnMut(Generator) -> Word,
    {
        let mut out = Word::identity();
        for &(g, e) in &self.syllables {
            let img = image(g);
            out = out.mul(&img.pow(e));
        }
        out
    }

    /// Rename generators (each to a generator, exponent kept).
    pub fn rename<F>(&self, mut f: F) -> Word
    where
        F: FnMut(Generator) -> Generator,
    {
        Word::from_raw(self.syllables.iter().map(|&(g, e)| (f(g), e)))
    }

    /// Cyclically reduce: conjugate away matching blocks at both ends.
    pub fn cyclically_reduced(&self) -> Word {
        let mut w = self.clone();
        loop {
            let n = w.syllables.len();
            if n < 2 {
                return w;
            }
            // First block: one x-syllable or a whole v-run.
            let first_len =
                if w.syllables[0].0.is_x() { 1 } else { w.syllables.iter().take_while(|s| s.0.is_v()).count() };
            if first_len == n {
                return w;
            }
            let head = Word { syllables: w.syllables[..first_len].to_vec() };
            let rest = Word { syllables: w.syllables[first_len..].to_vec() };
            let rotated = rest.mul(&head);
            if rotated.letter_length() < w.letter_length() {
                w = rotated;
            } else {
                return w;
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, &(g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A total assignment generator → word on a fixed context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endomap {
    ctx: WordContext,
    images: Vec<Word>,
}

impl Endomap {
    pub fn identity(ctx: WordContext) -> Self {
        Endomap { ctx, images: ctx.generators().map(Word::gen).collect() }
    }

    /// Build from a function; generators for which `f` returns `None` are fixed.
    pub fn from_fn<F>(ctx: WordContext, mut f: F) -> Result<Self>
    where
        F: FnMut(Generator) -> Option<Word>,
    {
        let images = ctx.generators().map(|g| f(g).unwrap_or_else(|| Word::gen(g))).collect::<Vec<_>>();
        for w in &images {
            ctx.check(w)?;
        }
        Ok(Endomap { ctx, images })
    }

    pub fn context(&self) -> WordContext {
        self.ctx
    }

    pub fn image(&self, g: Generator) -> &Word {
        &self.images[self.ctx.slot(g)]
    }

    pub fn images(&self) -> impl Iterator<Item = (Generator, &Word)> + '_ {
        self.ctx.generators().zip(self.images.iter())
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.ctx.check(w)?;
        Ok(w.substitute(|g| self.image(g).clone()))
    }

    /// "Apply `self` first, then `then`".
    pub fn compose(&self, then: &Endomap) -> Result<Endomap> {
        self.same_context(then)?;
        let images = self.images.iter().map(|w| w.substitute(|g| then.image(g).clone())).collect();
        Ok(Endomap { ctx: self.ctx, images })
    }

    pub fn is_identity(&self) -> bool {
        self.images().all(|(g, w)| w.as_generator() == Some(g))
    }

    /// True iff every image is a single generator and the images are distinct.
    pub fn is_generator_permutation(&self) -> bool {
        let mut seen = alloc::vec![false; self.images.len()];
        for w in &self.images {
            match w.as_generator() {
                Some(g) if self.ctx.contains(g) => {
                    let slot = self.ctx.slot(g);
                    if seen[slot] {
                        return false;
                    }
                    seen[slot] = true;
                }
                _ => return false,
            }
        }
        true
    }

    fn same_context(&self, other: &Endomap) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch { left: self.ctx, right: other.ctx })
        }
    }
}

/// True iff `f` and `g` compose to the identity in both orders.
pub fn verify_inverse_pair(f: &Endomap, g: &Endomap) -> Result<bool> {
    Ok(f.compose(g)?.is_identity() && g.compose(f)?.is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn x(i: u32) -> Generator {
        Generator::x(i)
    }
    fn v(i: u32) -> Generator {
        Generator::v(i)
    }

    #[test]
    fn free_cancellation() {
        let w = Word::from_raw([(x(1), 1), (x(1), -1)]);
        assert!(w.is_identity());
    }

    #[test]
    fn v_run_is_sorted() {
        let w = Word::from_raw([(v(2), 1), (v(1), 1), (x(1), 1), (v(1), -1)]);
        assert_eq!(w.to_string(), "v1 v2 x1 v1^-1");
    }

    #[test]
    fn cancellation_inside_v_run() {
        let w = Word::from_raw([(v(1), 1), (v(1), -1), (x(2), 1)]);
        assert_eq!(w, Word::x(2));
    }

    #[test]
    fn x_blocks_merge_across_vanished_run() {
        let w = Word::from_raw([(x(1), 1), (v(1), 1), (v(1), -1), (x(1), 1)]);
        assert_eq!(w, Word::power_of(x(1), 2));
    }

    #[test]
    fn out_of_range_generator() {
        let ctx = WordContext::new(1, 1);
        assert!(matches!(Word::normalize([(x(2), 1)], &ctx), Err(Error::GeneratorOutOfRange { .. })));
    }

    #[test]
    fn conjugate_examples() {
        let c = Word::conjugate(&Word::x(1), &Word::v(1));
        assert_eq!(c.to_string(), "v1^-1 x1 v1");
        assert_eq!(Word::conjugate(&Word::x(1), &Word::identity()), Word::x(1));
        assert_eq!(Word::conjugate(&Word::v(1), &Word::v(2)), Word::v(1));
    }

    #[test]
    fn permutation_detection() {
        let ctx = WordContext::new(2, 2);
        assert!(Endomap::identity(ctx).is_generator_permutation());
        let swap = Endomap::from_fn(ctx, |g| match (g.kind, g.index) {
            (GenKind::X, 1) => Some(Word::x(2)),
            (GenKind::X, 2) => Some(Word::x(1)),
            _ => None,
        })
        .unwrap();
        assert!(swap.is_generator_permutation());
        let collapse = Endomap::from_fn(ctx, |g| (g == x(2)).then(|| Word::x(1))).unwrap();
        assert!(!collapse.is_generator_permutation());
    }

    #[test]
    fn cyclic_reduction() {
        let w = Word::from_raw([(x(1), 1), (v(1), 1), (x(2), 1), (x(1), -1)]);
        assert_eq!(w.cyclically_reduced().to_string(), "v1 x2");
        let w = Word::from_raw([(v(1), 1), (v(2), 1), (x(1), 1), (v(2), -1), (v(1), -1)]);
        assert_eq!(w.cyclically_reduced(), Word::x(1));
    }

    #[test]
    fn letters_expand_powers() {
        let w = Word::from_raw([(x(1), 2), (v(1), -1)]);
        assert_eq!(w.letters().collect::<Vec<_>>(), vec![(x(1), 1), (x(1), 1), (v(1), -1)]);
    }
}
