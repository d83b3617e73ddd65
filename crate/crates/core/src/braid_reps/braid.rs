use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    Sigma,
    Rho,
}

/// `σ_i^{±1}` or `ρ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub kind: LetterKind,
    pub index: u32,
    pub power: i8,
}

impl BraidLetter {
    pub const fn sigma(index: u32) -> Self {
        BraidLetter { kind: LetterKind::Sigma, index, power: 1 }
    }

    pub const fn sigma_inv(index: u32) -> Self {
        BraidLetter { kind: LetterKind::Sigma, index, power: -1 }
    }

    /// ρ_i is an involution, so its power is always +1.
    pub const fn rho(index: u32) -> Self {
        BraidLetter { kind: LetterKind::Rho, index, power: 1 }
    }

    pub fn inverse(self) -> Self {
        match self.kind {
            LetterKind::Sigma => BraidLetter { power: -self.power, ..self },
            LetterKind::Rho => self,
        }
    }

    pub fn is_virtual(self) -> bool {
        self.kind == LetterKind::Rho
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.power) {
            (LetterKind::Sigma, 1) => write!(f, "s{}", self.index),
            (LetterKind::Sigma, _) => write!(f, "s{}^-1", self.index),
            (LetterKind::Rho, _) => write!(f, "r{}", self.index),
        }
    }
}

/// A word in the generators of `VB_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::TooFewStrands { strands, required: 1 });
        }
        if let Some(l) = letters.iter().find(|l| l.index < 1 || l.index >= strands) {
            return Err(Error::BraidIndexOutOfRange { index: l.index, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: u32) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands.max(other.strands), letters }
    }

    /// Same letters viewed on more strands.
    pub fn with_strands(&self, strands: u32) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// `[a, b] = a^{-1} b^{-1} a b`, expanded letter by letter.
    pub fn commutator(a: &BraidWord, b: &BraidWord) -> BraidWord {
        a.inverse().concat(&b.inverse()).concat(a).concat(b)
    }

    pub fn is_classical(&self) -> bool {
        self.letters.iter().all(|l| !l.is_virtual())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Which family of `VB_n` relations a pair belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    BraidCubic,
    BraidFar,
    RhoSquare,
    RhoFar,
    RhoCubic,
    MixedFar,
    MixedCubic,
}

impl RelationKind {
    /// Relations of the classical braid group `B_n`.
    pub fn is_classical(self) -> bool {
        matches!(self, RelationKind::BraidCubic | RelationKind::BraidFar)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub kind: RelationKind,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Every defining relation of `VB_n`, as pairs of words with equal image.
pub fn vbn_relations(n: u32) -> Result<Vec<Relation>> {
    if n < 2 {
        return Err(Error::TooFewStrands { strands: n, required: 2 });
    }
    use BraidLetter as L;
    let mut out = Vec::new();
    let mut push = |kind, lhs: Vec<BraidLetter>, rhs: Vec<BraidLetter>| {
        out.push(Relation {
            kind,
            lhs: BraidWord { strands: n, letters: lhs },
            rhs: BraidWord { strands: n, letters: rhs },
        })
    };
    let last = n - 1;
    for i in 1..=last {
        if i < last {
            let j = i + 1;
            push(
                RelationKind::BraidCubic,
                alloc::vec![L::sigma(i), L::sigma(j), L::sigma(i)],
                alloc::vec![L::sigma(j), L::sigma(i), L::sigma(j)],
            );
        }
        for j in (i + 2)..=last {
            push(RelationKind::BraidFar, alloc::vec![L::sigma(i), L::sigma(j)], alloc::vec![L::sigma(j), L::sigma(i)]);
        }
    }
    for i in 1..=last {
        push(RelationKind::RhoSquare, alloc::vec![L::rho(i), L::rho(i)], alloc::vec![]);
    }
    for i in 1..=last {
        for j in (i + 2)..=last {
            push(RelationKind::RhoFar, alloc::vec![L::rho(i), L::rho(j)], alloc::vec![L::rho(j), L::rho(i)]);
        }
    }
    for i in 1..last {
        push(
            RelationKind::RhoCubic,
            alloc::vec![L::rho(i), L::rho(i + 1), L::rho(i)],
            alloc::vec![L::rho(i + 1), L::rho(i), L::rho(i + 1)],
        );
    }
    for i in 1..=last {
        for j in 1..=last {
            if i.abs_diff(j) >= 2 {
                push(RelationKind::MixedFar, alloc::vec![L::sigma(i), L::rho(j)], alloc::vec![L::rho(j), L::sigma(i)]);
            }
        }
    }
    for i in 1..last {
        push(
            RelationKind::MixedCubic,
            alloc::vec![L::rho(i), L::rho(i + 1), L::sigma(i)],
            alloc::vec![L::sigma(i + 1), L::rho(i), L::rho(i + 1)],
        );
    }
    Ok(out)
}
