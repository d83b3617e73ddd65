//! Automorphism-valued representations of `VB_n`.
//!
//! Each entry supplies the images of `σ_i`, `σ_i^{-1}` and `ρ_i`. Where only
//! `σ_i` is known in closed form, the inverse image was solved by hand and is
//! certified with [`verify_inverse_pair`] whenever a representation is built.
//!
//! Generator layout per entry:
//!
//! | entry                    | context            | `v`-generators            |
//! |--------------------------|--------------------|---------------------------|
//! | `phiM`, `phiS`, `w*`     | `F_n * Z^n`        | `v_1..v_n`                |
//! | `phi0`                   | `F_n`              | none                      |
//! | `phiA`, `phiA~`          | `F_n * Z`          | `v = v1`                  |
//! | `phiSW`                  | `F_n * Z^{n+1}`    | `u_i = v_i`, `v = v_{n+1}`|
//! | `phiBD`, `phiBD~`        | `F_n * Z^2`        | `u = v1`, `v = v2`        |

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::braid::{BraidLetter, BraidWord, LetterKind, Relation};
use crate::error::{Error, Result};
use crate::words::{verify_inverse_pair, Endomap, Generator, Word, WordContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepName {
    PhiM,
    PhiS,
    Phi0,
    PhiA,
    PhiATilde,
    PhiSW,
    PhiBD,
    PhiBDTilde,
    W1(i64),
    W1Tilde(i64),
    W2,
    W2Tilde,
    W3,
    W3Tilde,
}

/// `r` used for `w1` when none is given.
pub const DEFAULT_W1_PARAMETER: i64 = 1;

impl RepName {
    /// Parse a catalogue name. `w1`/`w1~` take `r` from `[r]` or `param`.
    pub fn parse(name: &str, param: Option<i64>) -> Result<RepName> {
        let (base, bracket) = match name.find('[') {
            Some(pos) => {
                let inner = name[pos..]
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| Error::UnknownRepresentation(name.into()))?;
                if inner.trim().is_empty() {
                    return Err(Error::MissingParameter("r"));
                }
                let r = inner.trim().parse::<i64>().map_err(|_| Error::UnknownRepresentation(name.into()))?;
                (&name[..pos], Some(r))
            }
            None => (name, None),
        };
        let r = match (bracket, param) {
            (Some(a), Some(b)) if a != b => return Err(Error::UnknownRepresentation(format!("{name} with r={b}"))),
            (Some(a), _) => Some(a),
            (None, p) => p,
        };
        let plain = |n: RepName| match r {
            Some(_) => Err(Error::UnexpectedParameter("r")),
            None => Ok(n),
        };
        match base {
            "phiM" => plain(RepName::PhiM),
            "phiS" => plain(RepName::PhiS),
            "phi0" => plain(RepName::Phi0),
            "phiA" => plain(RepName::PhiA),
            "phiA~" => plain(RepName::PhiATilde),
            "phiSW" => plain(RepName::PhiSW),
            "phiBD" => plain(RepName::PhiBD),
            "phiBD~" => plain(RepName::PhiBDTilde),
            "w1" => Ok(RepName::W1(r.unwrap_or(DEFAULT_W1_PARAMETER))),
            "w1~" => Ok(RepName::W1Tilde(r.unwrap_or(DEFAULT_W1_PARAMETER))),
            "w2" => plain(RepName::W2),
            "w2~" => plain(RepName::W2Tilde),
            "w3" => plain(RepName::W3),
            "w3~" => plain(RepName::W3Tilde),
            _ => Err(Error::UnknownRepresentation(name.into())),
        }
    }

    /// The fourteen catalogue entries, with `w1` at the default parameter.
    pub fn all() -> [RepName; 14] {
        [
            RepName::PhiM,
            RepName::PhiS,
            RepName::Phi0,
            RepName::PhiA,
            RepName::PhiATilde,
            RepName::PhiSW,
            RepName::PhiBD,
            RepName::PhiBDTilde,
            RepName::W1(DEFAULT_W1_PARAMETER),
            RepName::W1Tilde(DEFAULT_W1_PARAMETER),
            RepName::W2,
            RepName::W2Tilde,
            RepName::W3,
            RepName::W3Tilde,
        ]
    }

    pub fn context(self, n: u32) -> WordContext {
        match self {
            RepName::Phi0 => WordContext::new(n, 0),
            RepName::PhiA | RepName::PhiATilde => WordContext::new(n, 1),
            RepName::PhiSW => WordContext::new(n, n + 1),
            RepName::PhiBD | RepName::PhiBDTilde => WordContext::new(n, 2),
            _ => WordContext::new(n, n),
        }
    }

    /// The virtually symmetric form this entry is conjugated to, if any.
    pub fn tilde_partner(self) -> Option<RepName> {
        match self {
            RepName::PhiM => Some(RepName::PhiS),
            RepName::PhiA => Some(RepName::PhiATilde),
            RepName::PhiBD => Some(RepName::PhiBDTilde),
            RepName::W1(r) => Some(RepName::W1Tilde(r)),
            RepName::W2 => Some(RepName::W2Tilde),
            RepName::W3 => Some(RepName::W3Tilde),
            _ => None,
        }
    }
}

impl fmt::Display for RepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepName::PhiM => f.write_str("phiM"),
            RepName::PhiS => f.write_str("phiS"),
            RepName::Phi0 => f.write_str("phi0"),
            RepName::PhiA => f.write_str("phiA"),
            RepName::PhiATilde => f.write_str("phiA~"),
            RepName::PhiSW => f.write_str("phiSW"),
            RepName::PhiBD => f.write_str("phiBD"),
            RepName::PhiBDTilde => f.write_str("phiBD~"),
            RepName::W1(r) => write!(f, "w1[{r}]"),
            RepName::W1Tilde(r) => write!(f, "w1~[{r}]"),
            RepName::W2 => f.write_str("w2"),
            RepName::W2Tilde => f.write_str("w2~"),
            RepName::W3 => f.write_str("w3"),
            RepName::W3Tilde => f.write_str("w3~"),
        }
    }
}

/// A representation instantiated on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationSpec {
    label: String,
    strands: u32,
    ctx: WordContext,
    sigma: Vec<Endomap>,
    sigma_inv: Vec<Endomap>,
    rho: Vec<Endomap>,
}

fn x(i: u32) -> Word {
    Word::x(i)
}

fn v(i: u32) -> Word {
    Word::v(i)
}

fn inv(w: &Word) -> Word {
    w.inverse()
}

/// `a^b = b^{-1} a b`.
fn cj(a: &Word, b: &Word) -> Word {
    a.conj_by(b)
}

fn prod(ws: &[&Word]) -> Word {
    Word::product(ws.iter().copied())
}

type LocalImages = Vec<(Generator, Word)>;

/// Images of `σ_i`, `σ_i^{-1}`, `ρ_i` on the generators they move.
fn local_images(name: RepName, n: u32, i: u32) -> (LocalImages, LocalImages, LocalImages) {
    let j = i + 1;
    let (xi, xj) = (x(i), x(j));
    let gx = Generator::x;
    let gv = Generator::v;
    // v_i <-> v_j, used by the F_{n,n} families.
    let vswap = || alloc::vec![(gv(i), v(j)), (gv(j), v(i))];
    let with_vswap = |mut imgs: LocalImages| {
        imgs.extend(vswap());
        imgs
    };
    let artin = || alloc::vec![(gx(i), prod(&[&xi, &xj, &inv(&xi)])), (gx(j), xi.clone())];
    let artin_inv = || alloc::vec![(gx(i), xj.clone()), (gx(j), cj(&xi, &xj))];
    let xswap = || alloc::vec![(gx(i), xj.clone()), (gx(j), xi.clone())];
    // x_i -> x_j^{c^{-1}}, x_j -> x_i^{d}: the non-symmetric virtual letters.
    let twisted_rho = |c: &Word, d: &Word| alloc::vec![(gx(i), cj(&xj, &inv(c))), (gx(j), cj(&xi, d))];

    match name {
        RepName::PhiM => (with_vswap(artin()), with_vswap(artin_inv()), with_vswap(twisted_rho(&v(i), &v(j)))),
        RepName::PhiS => {
            let vi = v(i);
            let vj = v(j);
            let vij = prod(&[&vi, &inv(&vj)]);
            let sigma = alloc::vec![(gx(i), prod(&[&xi, &cj(&xj, &vi), &inv(&xi)])), (gx(j), cj(&xi, &inv(&vj))),];
            let sigma_inv = alloc::vec![
                (gx(i), cj(&xj, &vi)),
                (gx(j), prod(&[&cj(&inv(&xj), &vij), &cj(&xi, &inv(&vj)), &cj(&xj, &vij)]),),
            ];
            (with_vswap(sigma), with_vswap(sigma_inv), with_vswap(xswap()))
        }
        RepName::Phi0 => (artin(), artin_inv(), xswap()),
        RepName::PhiA => (artin(), artin_inv(), twisted_rho(&v(1), &v(1))),
        RepName::PhiATilde => {
            let vv = v(1);
            let sigma = alloc::vec![(gx(i), prod(&[&xi, &cj(&xj, &vv), &inv(&xi)])), (gx(j), cj(&xi, &inv(&vv))),];
            let sigma_inv = alloc::vec![(gx(i), cj(&xj, &vv)), (gx(j), cj(&xi, &prod(&[&inv(&vv), &xj]))),];
            (sigma, sigma_inv, xswap())
        }
        RepName::PhiSW => {
            let (ui, uj, vv) = (v(i), v(j), v(n + 1));
            let uswap = alloc::vec![(gv(i), uj.clone()), (gv(j), ui.clone())];
            let mut sigma = alloc::vec![
                (gx(i), prod(&[&xi, &cj(&xj, &ui), &cj(&inv(&xi), &prod(&[&vv, &uj]))]),),
                (gx(j), cj(&xi, &vv)),
            ];
            let a = cj(&xj, &inv(&vv));
            let mut sigma_inv = alloc::vec![
                (gx(i), a.clone()),
                (gx(j), cj(&prod(&[&inv(&a), &xi, &cj(&a, &prod(&[&vv, &ui]))]), &inv(&uj)),),
            ];
            let mut rho = xswap();
            sigma.extend(uswap.iter().cloned());
            sigma_inv.extend(uswap.iter().cloned());
            rho.extend(uswap);
            (sigma, sigma_inv, rho)
        }
        RepName::PhiBD => {
            let (u, vv) = (v(1), v(2));
            let sigma = alloc::vec![(gx(i), prod(&[&xi, &xj, &cj(&inv(&xi), &u)])), (gx(j), cj(&xi, &u)),];
            let a = cj(&xj, &inv(&u));
            let sigma_inv = alloc::vec![(gx(i), a.clone()), (gx(j), prod(&[&inv(&a), &xi, &cj(&a, &u)])),];
            (sigma, sigma_inv, twisted_rho(&vv, &vv))
        }
        RepName::PhiBDTilde => {
            let (u, vv) = (v(1), v(2));
            let sigma = alloc::vec![
                (gx(i), prod(&[&xi, &cj(&xj, &vv), &cj(&inv(&xi), &u)])),
                (gx(j), cj(&xi, &prod(&[&u, &inv(&vv)]))),
            ];
            let a = cj(&xj, &prod(&[&inv(&u), &vv]));
            let sigma_inv =
                alloc::vec![(gx(i), a.clone()), (gx(j), cj(&prod(&[&inv(&a), &xi, &cj(&a, &u)]), &inv(&vv))),];
            (sigma, sigma_inv, xswap())
        }
        RepName::W1(r) => {
            let xir = xi.pow(r);
            let xjr = xj.pow(r);
            let sigma = alloc::vec![(gx(i), cj(&xj, &inv(&xir))), (gx(j), xi.clone())];
            let sigma_inv = alloc::vec![(gx(i), xj.clone()), (gx(j), cj(&xi, &xjr))];
            (with_vswap(sigma), with_vswap(sigma_inv), with_vswap(twisted_rho(&v(i), &v(j))))
        }
        RepName::W1Tilde(r) => {
            let (vi, vj) = (v(i), v(j));
            let xir = xi.pow(r);
            let sigma = alloc::vec![(gx(i), cj(&cj(&xj, &vi), &inv(&xir))), (gx(j), cj(&xi, &inv(&vj))),];
            let a = cj(&xj, &vi);
            let sigma_inv = alloc::vec![(gx(i), a.clone()), (gx(j), cj(&cj(&xi, &a.pow(r)), &inv(&vj))),];
            (with_vswap(sigma), with_vswap(sigma_inv), with_vswap(xswap()))
        }
        RepName::W2 => {
            let sigma = alloc::vec![(gx(i), prod(&[&xi, &inv(&xj), &xi])), (gx(j), xi.clone())];
            let sigma_inv = alloc::vec![(gx(i), xj.clone()), (gx(j), prod(&[&xj, &inv(&xi), &xj]))];
            (with_vswap(sigma), with_vswap(sigma_inv), with_vswap(twisted_rho(&v(i), &v(j))))
        }
        RepName::W2Tilde => {
            let (vi, vj) = (v(i), v(j));
            let sigma = alloc::vec![(gx(i), prod(&[&xi, &cj(&inv(&xj), &vi), &xi])), (gx(j), cj(&xi, &inv(&vj))),];
            let a = cj(&xj, &vi);
            let sigma_inv = alloc::vec![(gx(i), a.clone()), (gx(j), cj(&prod(&[&a, &inv(&xi), &a]), &inv(&vj))),];
            (with_vswap(sigma), with_vswap(sigma_inv), with_vswap(xswap()))
        }
        RepName::W3 => {
            let sigma = alloc::vec![(gx(i), prod(&[&xi, &xi, &xj])), (gx(j), cj(&inv(&xi), &xj)),];
            let sigma_inv = alloc::vec![(gx(i), prod(&[&xi, &inv(&xj), &inv(&xi)])), (gx(j), prod(&[&xi, &xj, &xj])),];
            (with_vswap(sigma), with_vswap(sigma_inv), with_vswap(twisted_rho(&v(i), &v(j))))
        }
        RepName::W3Tilde => {
            let (vi, vj) = (v(i), v(j));
            let vij = prod(&[&vi, &inv(&vj)]);
            let sigma = alloc::vec![
                (gx(i), prod(&[&xi, &xi, &cj(&xj, &vi)])),
                (gx(j), prod(&[&cj(&inv(&xj), &vij), &cj(&inv(&xi), &inv(&vj)), &cj(&xj, &vij)]),),
            ];
            let xjv = cj(&xj, &vi);
            let a = prod(&[&xi, &inv(&xjv), &inv(&xi)]);
            let b = cj(&prod(&[&xi, &xjv, &xjv]), &inv(&vj));
            let sigma_inv = alloc::vec![(gx(i), a), (gx(j), b)];
            (with_vswap(sigma), with_vswap(sigma_inv), with_vswap(xswap()))
        }
    }
}

fn endomap_from(ctx: WordContext, images: LocalImages) -> Result<Endomap> {
    Endomap::from_fn(ctx, |g| images.iter().find(|(h, _)| *h == g).map(|(_, w)| w.clone()))
}

/// Instantiate a catalogue entry on `n` strands.
pub fn get_representation(name: RepName, n: u32) -> Result<RepresentationSpec> {
    if n < 1 {
        return Err(Error::TooFewStrands { strands: n, required: 1 });
    }
    let ctx = name.context(n);
    let mut sigma = Vec::new();
    let mut sigma_inv = Vec::new();
    let mut rho = Vec::new();
    for i in 1..n {
        let (s, si, r) = local_images(name, n, i);
        let s = endomap_from(ctx, s)?;
        let si = endomap_from(ctx, si)?;
        if !verify_inverse_pair(&s, &si)? {
            return Err(Error::NotInverse);
        }
        sigma.push(s);
        sigma_inv.push(si);
        rho.push(endomap_from(ctx, r)?);
    }
    Ok(RepresentationSpec { label: format!("{name}"), strands: n, ctx, sigma, sigma_inv, rho })
}

/// Parse a name such as `w1[2]` and instantiate it.
pub fn get_representation_by_name(name: &str, param: Option<i64>, n: u32) -> Result<RepresentationSpec> {
    get_representation(RepName::parse(name, param)?, n)
}

/// The conjugator `φ` (and its inverse) relating `name` to its tilde partner.
pub fn standard_conjugator(name: RepName, n: u32) -> Option<(Endomap, Endomap)> {
    let ctx = name.context(n);
    let build = |e: i64| -> Endomap {
        let conj = |i: u32| -> Word {
            match name {
                RepName::PhiA => Word::power_of(Generator::v(1), i64::from(n - i)),
                RepName::PhiBD => Word::power_of(Generator::v(2), i64::from(n - i)),
                _ => Word::from_raw((i..=n).map(|k| (Generator::v(k), 1))),
            }
        };
        Endomap::from_fn(ctx, |g| g.is_x().then(|| Word::gen(g).conj_by(&conj(g.index).pow(e))))
            .expect("conjugator images stay in context")
    };
    name.tilde_partner()?;
    Some((build(1), build(-1)))
}

impl RepresentationSpec {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn context(&self) -> WordContext {
        self.ctx
    }

    pub fn letter_image(&self, letter: BraidLetter) -> Result<&Endomap> {
        if letter.index < 1 || letter.index >= self.strands {
            return Err(Error::BraidIndexOutOfRange { index: letter.index, strands: self.strands });
        }
        let k = (letter.index - 1) as usize;
        Ok(match (letter.kind, letter.power) {
            (LetterKind::Sigma, p) if p > 0 => &self.sigma[k],
            (LetterKind::Sigma, _) => &self.sigma_inv[k],
            (LetterKind::Rho, _) => &self.rho[k],
        })
    }

    /// Replace one letter image; used to build deliberately broken variants.
    pub fn with_letter_image(mut self, letter: BraidLetter, image: Endomap) -> Result<Self> {
        if image.context() != self.ctx {
            return Err(Error::ContextMismatch { left: self.ctx, right: image.context() });
        }
        let k = (letter.index - 1) as usize;
        if letter.index < 1 || letter.index >= self.strands {
            return Err(Error::BraidIndexOutOfRange { index: letter.index, strands: self.strands });
        }
        match (letter.kind, letter.power) {
            (LetterKind::Sigma, p) if p > 0 => self.sigma[k] = image,
            (LetterKind::Sigma, _) => self.sigma_inv[k] = image,
            (LetterKind::Rho, _) => self.rho[k] = image,
        }
        self.label = format!("{}*", self.label);
        Ok(self)
    }

    /// All `(letter, image)` pairs, `σ`, `σ^{-1}`, `ρ` per index.
    pub fn letter_images(&self) -> impl Iterator<Item = (BraidLetter, &Endomap)> + '_ {
        (1..self.strands).flat_map(move |i| {
            let k = (i - 1) as usize;
            [
                (BraidLetter::sigma(i), &self.sigma[k]),
                (BraidLetter::sigma_inv(i), &self.sigma_inv[k]),
                (BraidLetter::rho(i), &self.rho[k]),
            ]
        })
    }

    /// Generator-wise equality of every letter image.
    pub fn same_images(&self, other: &RepresentationSpec) -> bool {
        self.strands == other.strands
            && self.ctx == other.ctx
            && self.letter_images().zip(other.letter_images()).all(|((_, a), (_, b))| a == b)
    }
}

/// Left-to-right composition of letter images; the empty word gives the identity.
pub fn braid_image(spec: &RepresentationSpec, b: &BraidWord) -> Result<Endomap> {
    if b.strands() != spec.strands {
        return Err(Error::Precondition(format!(
            "braid on {} strands, representation instantiated on {}",
            b.strands(),
            spec.strands
        )));
    }
    let mut acc = Endomap::identity(spec.ctx);
    for &l in b.letters() {
        acc = acc.compose(spec.letter_image(l)?)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: Relation,
    pub generator: Generator,
    pub lhs_image: Word,
    pub rhs_image: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub relations_checked: usize,
    pub failures: Vec<RelationFailure>,
}

/// Check every `VB_n` relation generator-wise.
pub fn verify_representation(spec: &RepresentationSpec) -> Result<VerifyReport> {
    let relations = super::braid::vbn_relations(spec.strands)?;
    let mut failures = Vec::new();
    for rel in &relations {
        let lhs = braid_image(spec, &rel.lhs)?;
        let rhs = braid_image(spec, &rel.rhs)?;
        for ((g, a), (_, b)) in lhs.images().zip(rhs.images()) {
            if a != b {
                failures.push(RelationFailure {
                    relation: rel.clone(),
                    generator: g,
                    lhs_image: a.clone(),
                    rhs_image: b.clone(),
                });
            }
        }
    }
    Ok(VerifyReport { ok: failures.is_empty(), relations_checked: relations.len(), failures })
}

/// The representation `β ↦ φ^{-1} ∘ image(β) ∘ φ` (apply `φ`, then the image, then `φ^{-1}`).
pub fn conjugate_representation(
    spec: &RepresentationSpec,
    phi: &Endomap,
    phi_inv: &Endomap,
) -> Result<RepresentationSpec> {
    if phi.context() != spec.ctx {
        return Err(Error::ContextMismatch { left: spec.ctx, right: phi.context() });
    }
    if !verify_inverse_pair(phi, phi_inv)? {
        return Err(Error::NotInverse);
    }
    let conj = |m: &Endomap| -> Result<Endomap> { phi.compose(m)?.compose(phi_inv) };
    Ok(RepresentationSpec {
        label: format!("{}^phi", spec.label),
        strands: spec.strands,
        ctx: spec.ctx,
        sigma: spec.sigma.iter().map(conj).collect::<Result<_>>()?,
        sigma_inv: spec.sigma_inv.iter().map(conj).collect::<Result<_>>()?,
        rho: spec.rho.iter().map(conj).collect::<Result<_>>()?,
    })
}

/// True iff every `ρ_i` acts as a permutation of the generators.
pub fn is_virtually_symmetric(spec: &RepresentationSpec) -> bool {
    spec.rho.iter().all(Endomap::is_generator_permutation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn img(spec: &RepresentationSpec, l: BraidLetter, g: Generator) -> String {
        spec.letter_image(l).unwrap().image(g).to_string()
    }

    #[test]
    fn phi_s_sigma_images() {
        let s = get_representation(RepName::PhiS, 2).unwrap();
        assert_eq!(img(&s, BraidLetter::sigma(1), Generator::x(1)), "x1 v1^-1 x2 v1 x1^-1");
        assert_eq!(img(&s, BraidLetter::sigma(1), Generator::v(1)), "v2");
        let s3 = get_representation(RepName::PhiS, 3).unwrap();
        assert_eq!(img(&s3, BraidLetter::sigma(1), Generator::x(3)), "x3");
    }

    #[test]
    fn phi_sw_sigma_image() {
        let s = get_representation(RepName::PhiSW, 2).unwrap();
        // x1 x2^{u1} x1^{-v u2} with u1 = v1, u2 = v2, v = v3.
        assert_eq!(img(&s, BraidLetter::sigma(1), Generator::x(1)), "x1 v1^-1 x2 v1 v2^-1 v3^-1 x1^-1 v2 v3");
    }

    #[test]
    fn phi_bd_rho_and_w3_sigma() {
        let bd = get_representation(RepName::PhiBD, 2).unwrap();
        assert_eq!(img(&bd, BraidLetter::rho(1), Generator::x(1)), "v2 x2 v2^-1");
        let w3 = get_representation(RepName::W3, 2).unwrap();
        assert_eq!(img(&w3, BraidLetter::sigma(1), Generator::x(1)), "x1^2 x2");
    }

    #[test]
    fn phi_m_rho_image() {
        let m = get_representation(RepName::PhiM, 2).unwrap();
        // x2 -> x1^{v2}
        assert_eq!(img(&m, BraidLetter::rho(1), Generator::x(2)), "v2^-1 x1 v2");
    }

    #[test]
    fn names_round_trip() {
        for name in RepName::all() {
            let shown = name.to_string();
            assert_eq!(RepName::parse(&shown, None).unwrap(), name);
        }
        assert_eq!(RepName::parse("w1", Some(-1)).unwrap(), RepName::W1(-1));
        assert_eq!(RepName::parse("w1~[2]", None).unwrap(), RepName::W1Tilde(2));
        assert!(matches!(RepName::parse("phiX", None), Err(Error::UnknownRepresentation(_))));
        assert!(matches!(RepName::parse("phiS", Some(1)), Err(Error::UnexpectedParameter(_))));
        assert!(matches!(RepName::parse("w1[]", None), Err(Error::MissingParameter(_))));
    }

    #[test]
    fn empty_braid_is_identity() {
        let s = get_representation(RepName::PhiS, 3).unwrap();
        assert!(braid_image(&s, &BraidWord::empty(3)).unwrap().is_identity());
    }

    #[test]
    fn every_entry_satisfies_vbn_relations() {
        let mut names = RepName::all().to_vec();
        names.extend([RepName::W1(2), RepName::W1(-3), RepName::W1Tilde(3), RepName::W1(0)]);
        for name in names {
            for n in 2..=5 {
                let spec = get_representation(name, n).unwrap();
                let report = verify_representation(&spec).unwrap();
                assert!(report.ok, "{name} n={n}: {:?}", report.failures.first());
            }
        }
    }

    #[test]
    fn tilde_partners_are_conjugate() {
        for name in RepName::all() {
            let Some(partner) = name.tilde_partner() else { continue };
            for n in 2..=5 {
                let spec = get_representation(name, n).unwrap();
                let (phi, phi_inv) = standard_conjugator(name, n).unwrap();
                let conj = conjugate_representation(&spec, &phi, &phi_inv).unwrap();
                let target = get_representation(partner, n).unwrap();
                for ((l, a), (_, b)) in conj.letter_images().zip(target.letter_images()) {
                    assert_eq!(a, b, "{name} -> {partner}, n={n}, letter {l}");
                }
            }
        }
    }

    #[test]
    fn virtual_symmetry() {
        let symmetric = [
            RepName::PhiS,
            RepName::Phi0,
            RepName::PhiATilde,
            RepName::PhiSW,
            RepName::PhiBDTilde,
            RepName::W1Tilde(1),
            RepName::W2Tilde,
            RepName::W3Tilde,
        ];
        for name in RepName::all() {
            let spec = get_representation(name, 4).unwrap();
            assert_eq!(is_virtually_symmetric(&spec), symmetric.contains(&name), "{name}");
        }
    }
}
