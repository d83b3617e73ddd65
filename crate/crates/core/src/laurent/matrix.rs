use alloc::vec::Vec;
use core::fmt;

use super::poly::{LaurentPoly, Vars};
use crate::error::{Error, Result};

/// Square matrix over a Laurent polynomial ring, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    size: usize,
    vars: Vars,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn identity(vars: &Vars, size: usize) -> Self {
        let mut m = Self::zeros(vars, size);
        for i in 0..size {
            m.entries[i * size + i] = LaurentPoly::one(vars);
        }
        m
    }

    pub fn zeros(vars: &Vars, size: usize) -> Self {
        LaurentMatrix { size, vars: vars.clone(), entries: alloc::vec![LaurentPoly::zero(vars); size * size] }
    }

    pub fn from_rows(vars: &Vars, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::SizeMismatch { left: size, right: row.len() });
            }
            for p in row {
                if p.vars() != vars {
                    return Err(Error::VariableMismatch);
                }
                entries.push(p);
            }
        }
        Ok(LaurentMatrix { size, vars: vars.clone(), entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, p: LaurentPoly) {
        self.entries[row * self.size + col] = p;
    }

    /// Overwrite the 2x2 block with top-left corner `(k, k)`.
    pub fn set_block(&mut self, k: usize, block: [[LaurentPoly; 2]; 2]) {
        let [[a, b], [c, d]] = block;
        self.set(k, k, a);
        self.set(k, k + 1, b);
        self.set(k + 1, k, c);
        self.set(k + 1, k + 1, d);
    }

    pub fn block(&self, k: usize) -> [[LaurentPoly; 2]; 2] {
        [
            [self.get(k, k).clone(), self.get(k, k + 1).clone()],
            [self.get(k + 1, k).clone(), self.get(k + 1, k + 1).clone()],
        ]
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.size != other.size {
            return Err(Error::SizeMismatch { left: self.size, right: other.size });
        }
        if self.vars != other.vars {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let n = self.size;
        let mut out = Self::zeros(&self.vars, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.entries[idx] = out.entries[idx].try_add(&a.try_mul(b)?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.size).all(|i| {
            (0..self.size).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> LaurentPoly {
        let idx: Vec<usize> = (0..self.size).collect();
        self.minor_det(&idx, 0)
    }

    fn minor_det(&self, cols: &[usize], row: usize) -> LaurentPoly {
        if cols.is_empty() {
            return LaurentPoly::one(&self.vars);
        }
        let mut acc = LaurentPoly::zero(&self.vars);
        for (k, &c) in cols.iter().enumerate() {
            let e = self.get(row, c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e * &self.minor_det(&rest, row + 1);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Apply `f` to every entry, moving to ring `vars`.
    pub fn map_entries<F>(&self, vars: &Vars, mut f: F) -> Result<Self>
    where
        F: FnMut(&LaurentPoly) -> Result<LaurentPoly>,
    {
        let entries = self.entries.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(LaurentMatrix { size: self.size, vars: vars.clone(), entries })
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            f.write_str("[")?;
            for j in 0..self.size {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
            if i + 1 < self.size {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}
