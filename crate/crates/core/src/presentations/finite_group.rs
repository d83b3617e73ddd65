use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite group given by its multiplication table; element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl FiniteGroup {
    /// Validate a Cayley table `table[a][b] = a*b` with identity at index 0.
    pub fn from_table(table: Vec<Vec<u32>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGroup("table is not square".into()));
        }
        if table.iter().flatten().any(|&x| x as usize >= n) {
            return Err(Error::InvalidGroup("entry out of range".into()));
        }
        for a in 0..n {
            if table[0][a] as usize != a || table[a][0] as usize != a {
                return Err(Error::InvalidGroup("element 0 is not the identity".into()));
            }
        }
        let mul: Vec<u32> = table.into_iter().flatten().collect();
        let at = |a: usize, b: usize| mul[a * n + b] as usize;
        let mut inv = alloc::vec![0u32; n];
        for a in 0..n {
            match (0..n).find(|&b| at(a, b) == 0) {
                Some(b) if at(b, a) == 0 => inv[a] = b as u32,
                _ => return Err(Error::InvalidGroup(format!("element {a} has no inverse"))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { order: n, mul, inv })
    }

    /// `S_k` with elements in lexicographic order of their one-line notation.
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let index = |p: &[u8]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("perm");
        let n = perms.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &perms {
            for b in &perms {
                // (a*b)(i) = b(a(i)): apply a first.
                let c: Vec<u8> = (0..k).map(|i| b[a[i] as usize]).collect();
                mul.push(index(&c) as u32);
            }
        }
        let inv = perms
            .iter()
            .map(|a| {
                let mut c = alloc::vec![0u8; k];
                for (i, &x) in a.iter().enumerate() {
                    c[x as usize] = i as u8;
                }
                index(&c) as u32
            })
            .collect();
        FiniteGroup { order: n, mul, inv }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u32, e: i64) -> u32 {
        let mut base = if e < 0 { self.inv(a) } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `b^{-1} a b`.
    pub fn conj(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn commute(&self, a: u32, b: u32) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// The Cayley table, row `a` holding `a*b`.
    pub fn table(&self) -> Vec<Vec<u32>> {
        self.mul.chunks(self.order).map(<[u32]>::to_vec).collect()
    }
}

/// Permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<u8>> {
    let mut cur: Vec<u8> = (0..k as u8).collect();
    let mut out = alloc::vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}
