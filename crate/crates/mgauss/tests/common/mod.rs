#![allow(dead_code)]

use std::collections::BTreeMap;

use mgauss_core::braid_reps::{BraidLetter, BraidWord};
use mgauss_core::diagrams::{Event, MarkedGaussDiagram, Sign};
use mgauss_core::presentations::{abelianization, classify_cm, hom_count, simplify, FiniteGroup, Presentation};
use mgauss_core::words::{Generator, Word};
use rand::prelude::*;

pub fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Random diagram with up to `circles` circles, `arrows` arrows and `nodes` nodes.
pub fn random_diagram(rng: &mut impl Rng, circles: usize, arrows: u32, nodes: usize) -> MarkedGaussDiagram {
    let m = rng.gen_range(1..=circles);
    let mut evs: Vec<Vec<Event>> = vec![Vec::new(); m];
    let mut signs = BTreeMap::new();
    for id in 1..=rng.gen_range(0..=arrows) {
        signs.insert(id, random_sign(rng));
        for e in [Event::Tail(id), Event::Head(id)] {
            let c = rng.gen_range(0..m);
            let at = rng.gen_range(0..=evs[c].len());
            evs[c].insert(at, e);
        }
    }
    for _ in 0..rng.gen_range(0..=nodes) {
        let c = rng.gen_range(0..m);
        let at = rng.gen_range(0..=evs[c].len());
        evs[c].insert(at, Event::Node(random_sign(rng)));
    }
    MarkedGaussDiagram::new(evs, signs).unwrap()
}

/// `(abelianization, |Hom(-, S_3)|, |Hom(-, S_4)|)`.
pub type Fingerprint = ((usize, Vec<u64>), u64, u64);

pub fn fingerprint(p: &Presentation, s3: &FiniteGroup, s4: &FiniteGroup) -> Fingerprint {
    let q = simplify(p);
    (abelianization(p), hom_count(&q, s3).unwrap(), hom_count(&q, s4).unwrap())
}

pub fn random_word(rng: &mut impl Rng, n: u32, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_raw((0..len).map(|_| {
        let e = if rng.gen() { 1 } else { -1 };
        if rng.gen_bool(0.4) {
            (Generator::v(1), e)
        } else {
            (Generator::x(rng.gen_range(1..=n)), e)
        }
    }))
}

/// A 1-irreducible `C_1`-presentation on up to `max_n` generators, of
/// deficiency 2 (a tree of conjugation relators) or 1 (one extra relator).
pub fn random_c1_presentation(rng: &mut impl Rng, max_n: u32, max_len: usize) -> Presentation {
    loop {
        let n = rng.gen_range(1..=max_n);
        let mut relators = Vec::new();
        let mut order: Vec<u32> = (1..=n).collect();
        order.shuffle(rng);
        for k in 1..n as usize {
            let a = order[rng.gen_range(0..k)];
            let b = order[k];
            let (a, b) = if rng.gen() { (a, b) } else { (b, a) };
            let u = random_word(rng, n, max_len);
            relators.push(Word::x(b).inverse().mul(&Word::x(a).conj_by(&u)));
        }
        if rng.gen() {
            let a = rng.gen_range(1..=n);
            let b = rng.gen_range(1..=n);
            let u = random_word(rng, n, max_len);
            relators.push(Word::x(b).inverse().mul(&Word::x(a).conj_by(&u)));
        }
        relators.shuffle(rng);
        let p = Presentation::with_default_names(n, 1, relators).unwrap();
        let rep = classify_cm(&p);
        if rep.is_cm && rep.is_m_irreducible && (1..=2).contains(&rep.deficiency) {
            return p;
        }
    }
}

/// Random virtual braid word on `n` strands with up to `max_len` letters.
pub fn random_braid(rng: &mut impl Rng, n: u32, max_len: usize) -> BraidWord {
    let len = if n < 2 { 0 } else { rng.gen_range(0..=max_len) };
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n);
            match rng.gen_range(0..3) {
                0 => BraidLetter::sigma(i),
                1 => BraidLetter::sigma_inv(i),
                _ => BraidLetter::rho(i),
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}
