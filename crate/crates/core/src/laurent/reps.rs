use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::matrix::LaurentMatrix;
use super::poly::{LaurentPoly, Var, Vars};
use crate::braid_reps::{BraidLetter, BraidWord, LetterKind};
use crate::error::{Error, Result};

/// The linear representations available as exact matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinearRep {
    /// Coloured Burau over `Z[t, t_1, ..., t_{n-1}]`; classical letters only.
    BurauLocal,
    /// Unreduced Burau over `Z[t]`; classical letters only.
    Burau,
    /// Local, non-homogeneous extension to `VB_n` over `Z[t, λ, t_1, ...]`.
    Psi,
    /// Bartholomew-Fenn representation over `Z[t, λ]`.
    Bf,
}

impl LinearRep {
    pub fn parse(name: &str) -> Result<LinearRep> {
        match name {
            "burau_local" => Ok(LinearRep::BurauLocal),
            "burau" => Ok(LinearRep::Burau),
            "psi" => Ok(LinearRep::Psi),
            "bf" => Ok(LinearRep::Bf),
            _ => Err(Error::UnknownRepresentation(name.into())),
        }
    }

    pub fn is_classical_only(self) -> bool {
        matches!(self, LinearRep::BurauLocal | LinearRep::Burau)
    }

    /// Variable list of the ring this representation is defined over.
    pub fn vars(self, n: u32) -> Vars {
        let mut v = alloc::vec![Var::T];
        if matches!(self, LinearRep::Psi | LinearRep::Bf) {
            v.push(Var::Lambda);
        }
        if matches!(self, LinearRep::Psi | LinearRep::BurauLocal) {
            v.extend((1..n).map(Var::Ti));
        }
        Arc::from(v)
    }
}

impl fmt::Display for LinearRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinearRep::BurauLocal => "burau_local",
            LinearRep::Burau => "burau",
            LinearRep::Psi => "psi",
            LinearRep::Bf => "bf",
        })
    }
}

fn mono(vars: &Vars, c: i64, powers: &[(Var, i64)]) -> LaurentPoly {
    let mut e = alloc::vec![0; vars.len()];
    for &(v, k) in powers {
        let slot = vars.iter().position(|&w| w == v).expect("variable in ring");
        e[slot] += k;
    }
    LaurentPoly::monomial(vars, c, e)
}

/// The 2x2 block of `σ_i` or `ρ_i` (power +1), column convention.
fn positive_block(rep: LinearRep, vars: &Vars, kind: LetterKind, i: u32) -> [[LaurentPoly; 2]; 2] {
    use Var::{Lambda as L, Ti, T};
    let one_minus_t = &LaurentPoly::one(vars) - &mono(vars, 1, &[(T, 1)]);
    let zero = LaurentPoly::zero(vars);
    match (rep, kind) {
        (LinearRep::BurauLocal, _) => {
            [[one_minus_t, mono(vars, 1, &[(T, 1), (Ti(i), 1)])], [mono(vars, 1, &[(Ti(i), -1)]), zero]]
        }
        (LinearRep::Burau, _) => [[one_minus_t, mono(vars, 1, &[(T, 1)])], [mono(vars, 1, &[]), zero]],
        (LinearRep::Psi, LetterKind::Sigma) => [
            [one_minus_t, mono(vars, 1, &[(T, 1), (Ti(i), 1), (L, -1)])],
            [mono(vars, 1, &[(L, 1), (Ti(i), -1)]), zero],
        ],
        (LinearRep::Psi, LetterKind::Rho) => {
            [[zero.clone(), mono(vars, 1, &[(Ti(i), 1)])], [mono(vars, 1, &[(Ti(i), -1)]), zero]]
        }
        (LinearRep::Bf, LetterKind::Sigma) => {
            [[one_minus_t, mono(vars, 1, &[(T, 1), (L, -1)])], [mono(vars, 1, &[(L, 1)]), zero]]
        }
        (LinearRep::Bf, LetterKind::Rho) => [[zero.clone(), mono(vars, 1, &[])], [mono(vars, 1, &[]), zero]],
    }
}

/// `[[a, b], [c, d]]^{-1} = det^{-1} [[d, -b], [-c, a]]` for a unit determinant.
fn invert_block(block: &[[LaurentPoly; 2]; 2]) -> Result<[[LaurentPoly; 2]; 2]> {
    let [[a, b], [c, d]] = block;
    let det = &(a * d) - &(b * c);
    let di = det.unit_inverse()?;
    Ok([[&di * d, &di * &-b], [&di * &-c, &di * a]])
}

/// Block matrix `I^{i-1} ⊕ M_i ⊕ I^{n-i-1}` for one letter.
pub fn matrix_of_letter(rep: LinearRep, letter: BraidLetter, n: u32) -> Result<LaurentMatrix> {
    if n < 2 {
        return Err(Error::TooFewStrands { strands: n, required: 2 });
    }
    if letter.index < 1 || letter.index >= n {
        return Err(Error::BraidIndexOutOfRange { index: letter.index, strands: n });
    }
    if rep.is_classical_only() && letter.is_virtual() {
        return Err(Error::VirtualLetter);
    }
    let vars = rep.vars(n);
    let block = positive_block(rep, &vars, letter.kind, letter.index);
    let block = if letter.kind == LetterKind::Sigma && letter.power < 0 {
        let inv = invert_block(&block)?;
        debug_assert!(block_product_is_identity(&block, &inv));
        inv
    } else {
        block
    };
    let mut m = LaurentMatrix::identity(&vars, n as usize);
    m.set_block((letter.index - 1) as usize, block);
    Ok(m)
}

fn block_product_is_identity(a: &[[LaurentPoly; 2]; 2], b: &[[LaurentPoly; 2]; 2]) -> bool {
    (0..2).all(|i| {
        (0..2).all(|j| {
            let e = &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
            if i == j {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    })
}

/// Ordered product of the letter matrices; the empty word gives the identity.
pub fn braid_matrix(rep: LinearRep, b: &BraidWord) -> Result<LaurentMatrix> {
    let n = b.strands();
    if n < 2 {
        return Err(Error::TooFewStrands { strands: n, required: 2 });
    }
    let mut acc = LaurentMatrix::identity(&rep.vars(n), n as usize);
    for &l in b.letters() {
        acc = acc.mul(&matrix_of_letter(rep, l, n)?)?;
    }
    Ok(acc)
}

/// `θ m θ^{-1}` with `θ = diag(1, t_1, t_1 t_2, ..., t_1 ... t_{n-1})`.
pub fn theta_conjugate(m: &LaurentMatrix, n: u32) -> Result<LaurentMatrix> {
    if m.size() != n as usize {
        return Err(Error::SizeMismatch { left: m.size(), right: n as usize });
    }
    let vars = m.vars().clone();
    let slots = (1..n)
        .map(|i| vars.iter().position(|&v| v == Var::Ti(i)).ok_or(Error::VariableMismatch))
        .collect::<Result<Vec<_>>>()?;
    // θ_k = t_1 ... t_k (k zero-based), as an exponent vector.
    let theta = |k: usize| {
        let mut e = alloc::vec![0i64; vars.len()];
        for &s in &slots[..k] {
            e[s] += 1;
        }
        e
    };
    let mut out = m.clone();
    for i in 0..m.size() {
        for j in 0..m.size() {
            let (a, b) = (theta(i), theta(j));
            let e: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
            let factor = LaurentPoly::monomial(&vars, 1, e);
            out.set(i, j, m.get(i, j).try_mul(&factor)?);
        }
    }
    Ok(out)
}

/// Which expansion of `[a, b]` to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommutatorConvention {
    /// `a^{-1} b^{-1} a b`
    InverseFirst,
    /// `a b a^{-1} b^{-1}`
    InverseLast,
}

fn commutator(a: &BraidWord, b: &BraidWord, c: CommutatorConvention) -> BraidWord {
    match c {
        CommutatorConvention::InverseFirst => BraidWord::commutator(a, b),
        CommutatorConvention::InverseLast => a.concat(b).concat(&a.inverse()).concat(&b.inverse()),
    }
}

fn word(strands: u32, spec: &[(u32, i32)]) -> BraidWord {
    let mut letters = Vec::new();
    for &(i, p) in spec {
        let l = if p > 0 { BraidLetter::sigma(i) } else { BraidLetter::sigma_inv(i) };
        letters.extend(core::iter::repeat_n(l, p.unsigned_abs() as usize));
    }
    BraidWord::new(strands, letters).expect("indices below strand count")
}

/// Bigelow's Burau-kernel elements `b_1 ∈ B_5`, `b_2 ∈ B_6`.
pub fn bigelow_words_with(c: CommutatorConvention) -> (BraidWord, BraidWord) {
    let c1 = word(5, &[(3, -1), (2, 1), (1, 2), (2, 1), (4, 3), (3, 1), (2, 1)]);
    let c2 = word(5, &[(4, -1), (3, 1), (2, 1), (1, -2), (2, 1), (1, 2), (2, 2), (1, 1), (4, 5)]);
    let mid = word(5, &[(4, 1), (3, 1), (2, 1), (1, 2), (2, 1), (3, 1), (4, 1)]);
    let s4 = word(5, &[(4, 1)]);
    let b1 = commutator(&c1.inverse().concat(&s4).concat(&c1), &c2.inverse().concat(&mid).concat(&c2), c);

    let d1 = word(6, &[(4, 1), (5, -1), (2, -1), (1, 1)]);
    let d2 = word(6, &[(4, -1), (5, 2), (2, 1), (1, -2)]);
    let s3 = word(6, &[(3, 1)]);
    let b2 = commutator(&d1.inverse().concat(&s3).concat(&d1), &d2.inverse().concat(&s3).concat(&d2), c);
    (b1, b2)
}

pub fn bigelow_words() -> (BraidWord, BraidWord) {
    bigelow_words_with(CommutatorConvention::InverseFirst)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub convention: CommutatorConvention,
    pub b1_identity: bool,
    pub b2_identity: bool,
    pub b1_letters: usize,
    pub b2_letters: usize,
}

impl KernelReport {
    pub fn both_identity(&self) -> bool {
        self.b1_identity && self.b2_identity
    }
}

pub fn kernel_check_with(c: CommutatorConvention) -> Result<KernelReport> {
    let (b1, b2) = bigelow_words_with(c);
    Ok(KernelReport {
        convention: c,
        b1_identity: braid_matrix(LinearRep::Burau, &b1)?.is_identity(),
        b2_identity: braid_matrix(LinearRep::Burau, &b2)?.is_identity(),
        b1_letters: b1.len(),
        b2_letters: b2.len(),
    })
}

/// Burau images of both Bigelow words, under `a^{-1} b^{-1} a b`, falling back
/// to the other convention only if the first fails.
pub fn kernel_check() -> Result<KernelReport> {
    let first = kernel_check_with(CommutatorConvention::InverseFirst)?;
    if first.both_identity() {
        return Ok(first);
    }
    let second = kernel_check_with(CommutatorConvention::InverseLast)?;
    Ok(if second.both_identity() { second } else { first })
}
