use mgauss_core::braid_reps::{vbn_relations, BraidLetter, BraidWord};
use mgauss_core::laurent::*;
use proptest::prelude::*;

const P: u64 = 1_000_000_007;

fn pw(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Unreduced Burau at `t = t0` over `Z/p`, written out independently.
fn burau_mod_p(b: &BraidWord, t0: u64) -> Vec<Vec<u64>> {
    let n = b.strands() as usize;
    let tinv = pw(t0, P - 2);
    let mut acc: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as u64).collect()).collect();
    for l in b.letters() {
        let k = (l.index - 1) as usize;
        let mut m: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as u64).collect()).collect();
        let blk = if l.power > 0 { [[(1 + P - t0) % P, t0], [1, 0]] } else { [[0, 1], [tinv, (1 + P - tinv) % P]] };
        for (a, row) in blk.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m[k + a][k + c] = v;
            }
        }
        let mut out = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[i][j] = (0..n).fold(0, |s, q| (s + acc[i][q] * m[q][j]) % P);
            }
        }
        acc = out;
    }
    acc
}

fn eval_mod_p(p: &LaurentPoly, t0: u64) -> u64 {
    let mut s = 0u64;
    for (e, c) in p.terms() {
        let tp = if e[0] >= 0 { pw(t0, e[0] as u64) } else { pw(pw(t0, P - 2), (-e[0]) as u64) };
        let c = c.to_string().parse::<i64>().unwrap();
        let cm = c.rem_euclid(P as i64) as u64;
        s = (s + cm * tp) % P;
    }
    s
}

#[test]
fn letter_matrices_from_the_displays() {
    let m = matrix_of_letter(LinearRep::BurauLocal, BraidLetter::sigma(1), 2).unwrap();
    assert_eq!(m.to_string(), "[1 - t, t*t1]\n[t1^-1, 0]");
    let r = matrix_of_letter(LinearRep::Psi, BraidLetter::rho(1), 2).unwrap();
    assert_eq!(r.to_string(), "[0, t1]\n[t1^-1, 0]");
    assert_eq!(matrix_of_letter(LinearRep::Burau, BraidLetter::rho(1), 3), Err(mgauss_core::Error::VirtualLetter));
}

#[test]
fn letter_inverses() {
    for rep in [LinearRep::BurauLocal, LinearRep::Burau, LinearRep::Psi, LinearRep::Bf] {
        for n in 2..=5 {
            for i in 1..n {
                let a = matrix_of_letter(rep, BraidLetter::sigma(i), n).unwrap();
                let b = matrix_of_letter(rep, BraidLetter::sigma_inv(i), n).unwrap();
                assert!(a.mul(&b).unwrap().is_identity());
                assert!(b.mul(&a).unwrap().is_identity());
            }
        }
    }
}

#[test]
fn relations_hold_exactly() {
    for rep in [LinearRep::BurauLocal, LinearRep::Burau, LinearRep::Psi, LinearRep::Bf] {
        for n in 2..=5 {
            for rel in vbn_relations(n).unwrap() {
                if rep.is_classical_only() && !rel.kind.is_classical() {
                    continue;
                }
                let l = braid_matrix(rep, &rel.lhs).unwrap();
                let r = braid_matrix(rep, &rel.rhs).unwrap();
                assert_eq!(l, r, "{rep} n={n}: {rel}");
            }
        }
    }
}

#[test]
fn theta_makes_psi_homogeneous_and_equal_to_bf() {
    for n in 2..=5 {
        let bf_vars = LinearRep::Bf.vars(n);
        for i in 1..n {
            for letter in [BraidLetter::sigma(i), BraidLetter::rho(i)] {
                let psi = matrix_of_letter(LinearRep::Psi, letter, n).unwrap();
                let conj = theta_conjugate(&psi, n).unwrap();
                let block = conj.block((i - 1) as usize);
                let shown: Vec<String> = block.iter().flatten().map(|p| p.to_string()).collect();
                match letter.kind {
                    mgauss_core::braid_reps::LetterKind::Sigma => {
                        assert_eq!(shown, ["1 - t", "t*l^-1", "l", "0"])
                    }
                    mgauss_core::braid_reps::LetterKind::Rho => {
                        assert_eq!(shown, ["0", "1", "1", "0"])
                    }
                }
                let dropped = conj
                    .map_entries(&bf_vars, |p| p.specialize(&bf_vars, |v| matches!(v, Var::Ti(_)).then_some(1)))
                    .unwrap();
                assert_eq!(dropped, matrix_of_letter(LinearRep::Bf, letter, n).unwrap());
            }
        }
    }
    let id = LaurentMatrix::identity(&LinearRep::Psi.vars(3), 3);
    assert_eq!(theta_conjugate(&id, 3).unwrap(), id);
}

#[test]
fn psi_specializes_to_bf() {
    for n in 2..=4 {
        let bf_vars = LinearRep::Bf.vars(n);
        for i in 1..n {
            for letter in [BraidLetter::sigma(i), BraidLetter::sigma_inv(i), BraidLetter::rho(i)] {
                let psi = matrix_of_letter(LinearRep::Psi, letter, n).unwrap();
                let s = psi
                    .map_entries(&bf_vars, |p| p.specialize(&bf_vars, |v| matches!(v, Var::Ti(_)).then_some(1)))
                    .unwrap();
                assert_eq!(s, matrix_of_letter(LinearRep::Bf, letter, n).unwrap());
            }
        }
    }
}

#[test]
fn bigelow_word_shapes() {
    let (b1, b2) = bigelow_words();
    // |c1| = 10, |c2| = 16, middle block 8 letters.
    assert_eq!(b1.len(), 2 * (10 + 1 + 10) + 2 * (16 + 8 + 16));
    assert_eq!(b1.strands(), 5);
    assert_eq!(b2.strands(), 6);
    assert!(b2.letters().iter().all(|l| (1..=5).contains(&l.index)));
    assert!(!b1.is_empty() && !b2.is_empty());
}

#[test]
fn bigelow_words_are_in_the_burau_kernel() {
    let report = kernel_check().unwrap();
    assert!(report.b1_identity && report.b2_identity, "{report:?}");
    assert_eq!(report.convention, CommutatorConvention::InverseFirst);
    let other = kernel_check_with(CommutatorConvention::InverseLast).unwrap();
    assert!(other.both_identity());
    // Independent check over Z/p at several points.
    let (b1, b2) = bigelow_words();
    for t0 in [2u64, 3, 12345, 987654321] {
        for b in [&b1, &b2] {
            let m = burau_mod_p(b, t0);
            for (i, row) in m.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    assert_eq!(x, (i == j) as u64);
                }
            }
        }
    }
    let s1 = BraidWord::new(5, vec![BraidLetter::sigma(1)]).unwrap();
    assert!(!braid_matrix(LinearRep::Burau, &s1).unwrap().is_identity());
}

fn classical_word(n: u32) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, any::<bool>()), 0..12).prop_map(move |ls| {
        let letters =
            ls.into_iter().map(|(i, p)| if p { BraidLetter::sigma(i) } else { BraidLetter::sigma_inv(i) }).collect();
        BraidWord::new(n, letters).unwrap()
    })
}

proptest! {
    #[test]
    fn burau_matches_modular_oracle(b in classical_word(4), t0 in 2u64..1000) {
        let m = braid_matrix(LinearRep::Burau, &b).unwrap();
        let o = burau_mod_p(&b, t0);
        for i in 0..4 {
            for j in 0..4 {
                prop_assert_eq!(eval_mod_p(m.get(i, j), t0), o[i][j]);
            }
        }
    }

    #[test]
    fn determinant_is_multiplicative(b in classical_word(4)) {
        let m = braid_matrix(LinearRep::Burau, &b).unwrap();
        let vars = LinearRep::Burau.vars(4);
        let expsum: i64 = b.letters().iter().map(|l| l.power as i64).sum();
        let sign = if expsum.rem_euclid(2) == 0 { 1 } else { -1 };
        let expected = LaurentPoly::monomial(&vars, sign, vec![expsum]);
        prop_assert_eq!(m.det(), expected);
    }

    #[test]
    fn inverse_word_gives_inverse_matrix(b in classical_word(5)) {
        let m = braid_matrix(LinearRep::BurauLocal, &b).unwrap();
        let mi = braid_matrix(LinearRep::BurauLocal, &b.inverse()).unwrap();
        prop_assert!(m.mul(&mi).unwrap().is_identity());
    }
}
