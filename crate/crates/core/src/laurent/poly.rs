use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    Lambda,
    /// `t_i`, one per adjacent strand pair.
    Ti(u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T => f.write_str("t"),
            Var::Lambda => f.write_str("l"),
            Var::Ti(i) => write!(f, "t{i}"),
        }
    }
}

/// Ordered variable list shared by the polynomials of one ring.
pub type Vars = Arc<[Var]>;

/// Element of `Z[v_1^{±1}, ..., v_k^{±1}]` over a declared variable list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::monomial(vars, 1, vec![0; vars.len()])
    }

    pub fn constant(vars: &Vars, c: i64) -> Self {
        Self::monomial(vars, c, vec![0; vars.len()])
    }

    /// `c * prod vars[k]^exps[k]`.
    ///
    /// # Panics
    /// If `exps` does not have one slot per variable.
    pub fn monomial(vars: &Vars, c: impl Into<BigInt>, exps: Vec<i64>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { vars: vars.clone(), terms }
    }

    /// `var^exp`, or an error if `var` is not in the list.
    pub fn var_power(vars: &Vars, var: Var, exp: i64) -> Result<Self> {
        let slot = vars.iter().position(|&v| v == var).ok_or(Error::VariableMismatch)?;
        let mut e = vec![0; vars.len()];
        e[slot] = exp;
        Ok(Self::monomial(vars, 1, e))
    }

    pub fn from_terms<I>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// Inverse of a unit, i.e. of `±` a monomial.
    pub fn unit_inverse(&self) -> Result<Self> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some((e, c)), None) if c.abs().is_one() => {
                Ok(Self::monomial(&self.vars, c.clone(), e.iter().map(|x| -x).collect()))
            }
            _ => Err(Error::NotInvertible),
        }
    }

    /// Substitute `value` for each variable that `f` maps to `Some`, moving to ring `target`.
    ///
    /// Variables kept by `f` returning `None` must appear in `target`.
    pub fn specialize<F>(&self, target: &Vars, mut f: F) -> Result<Self>
    where
        F: FnMut(Var) -> Option<i64>,
    {
        let mut slots = Vec::with_capacity(self.vars.len());
        for &v in self.vars.iter() {
            let mapped = match f(v) {
                Some(c) => Err(c),
                None => Ok(target.iter().position(|&w| w == v).ok_or(Error::VariableMismatch)?),
            };
            slots.push(mapped);
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            let mut coeff = c.clone();
            for (k, slot) in slots.iter().enumerate() {
                match *slot {
                    Ok(s) => ne[s] += e[k],
                    Err(value) => {
                        if e[k] != 0 {
                            coeff *= pow_int(value, e[k])?;
                        }
                    }
                }
            }
            out.add_term(ne, coeff);
        }
        Ok(out)
    }
}

fn pow_int(base: i64, exp: i64) -> Result<BigInt> {
    if exp >= 0 {
        Ok(num_traits::pow(BigInt::from(base), exp as usize))
    } else if base == 1 || base == -1 {
        Ok(num_traits::pow(BigInt::from(base), exp.unsigned_abs() as usize))
    } else {
        Err(Error::NotInvertible)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

// Operator forms panic on a ring mismatch; use `try_*` for fallible arithmetic.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("variable lists differ")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("variable lists differ")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("variable lists differ")
    }
}

/// Terms in ascending lexicographic order of exponent vectors.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut factors: Vec<alloc::string::String> = Vec::new();
            for (var, &x) in self.vars.iter().zip(e) {
                match x {
                    0 => {}
                    1 => factors.push(alloc::format!("{var}")),
                    _ => factors.push(alloc::format!("{var}^{x}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ring(vs: &[Var]) -> Vars {
        Arc::from(vs)
    }

    #[test]
    fn basic_arithmetic() {
        let r = ring(&[Var::T]);
        let t = LaurentPoly::var_power(&r, Var::T, 1).unwrap();
        let tinv = LaurentPoly::var_power(&r, Var::T, -1).unwrap();
        let one = LaurentPoly::one(&r);
        let p = &(&one - &t) * &tinv;
        assert_eq!(p.to_string(), "t^-1 - 1");
        assert_eq!(&p + &LaurentPoly::zero(&r), p);
    }

    #[test]
    fn mixed_monomials_cancel() {
        let r = ring(&[Var::T, Var::Ti(1)]);
        let a = LaurentPoly::monomial(&r, 1, alloc::vec![1, 1]);
        let b = LaurentPoly::var_power(&r, Var::Ti(1), -1).unwrap();
        assert_eq!((&a * &b).to_string(), "t");
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn ring_mismatch() {
        let a = LaurentPoly::one(&ring(&[Var::T]));
        let b = LaurentPoly::one(&ring(&[Var::T, Var::Lambda]));
        assert_eq!(a.try_add(&b), Err(Error::VariableMismatch));
    }

    #[test]
    fn units() {
        let r = ring(&[Var::T, Var::Lambda]);
        let u = LaurentPoly::monomial(&r, -1, alloc::vec![2, -1]);
        assert!((&u * &u.unit_inverse().unwrap()).is_one());
        assert!(LaurentPoly::constant(&r, 2).unit_inverse().is_err());
    }

    #[test]
    fn specialize_drops_variables() {
        let r = ring(&[Var::T, Var::Lambda, Var::Ti(1)]);
        let target = ring(&[Var::T, Var::Lambda]);
        let p = LaurentPoly::monomial(&r, 3, alloc::vec![1, -1, 4]);
        let q = p.specialize(&target, |v| matches!(v, Var::Ti(_)).then_some(1)).unwrap();
        assert_eq!(q.to_string(), "3*t*l^-1");
    }
}
