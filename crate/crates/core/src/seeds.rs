//! The eight explicit base modules over C_1..C_8, built from complex,
//! quaternion, and octonion multiplication.
//!
//! Octonion labeling: O = H + Hl by Cayley-Dickson doubling with
//! (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)), and units
//! i_1..i_4 = (l, il, jl, kl), i_5..i_7 = (i, j, k). With this labeling the
//! product of any two of i_1..i_4 lands in span{1, i_5, i_6, i_7}, which is
//! exactly the grading the C_4 seed needs. The table construction re-checks
//! that, the unit squares, and the Clifford relations of the seven left
//! multiplications, and aborts if any fail.

use crate::error::{Error, Result};
use crate::graded::{induce_graded, GradedRep};
use crate::perm::{verify_clifford, SignedPerm};

/// Multiplication table of a basis-closed algebra: the product of two basis
/// elements is plus or minus a basis element. Index 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraTable {
    n: usize,
    mul: Vec<Vec<(usize, i8)>>,
}

impl AlgebraTable {
    fn new(mul: Vec<Vec<(usize, i8)>>) -> Self {
        let n = mul.len();
        let table = AlgebraTable { n, mul };
        for b in 0..n {
            assert_eq!(table.product(0, b), (b, 1), "index 0 must be a left identity");
            assert_eq!(table.product(b, 0), (b, 1), "index 0 must be a right identity");
        }
        for a in 1..n {
            assert_eq!(table.product(a, a), (0, -1), "imaginary unit square must be -1");
        }
        table
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// (index, sign) of the product basis_a * basis_b.
    pub fn product(&self, a: usize, b: usize) -> (usize, i8) {
        self.mul[a][b]
    }

    /// Left multiplication by basis element `a` as a signed permutation.
    pub fn left_action(&self, a: usize) -> SignedPerm {
        let mut target = vec![0usize; self.n];
        let mut sign = vec![0i8; self.n];
        for b in 0..self.n {
            let (q, s) = self.product(a, b);
            target[b] = q;
            sign[b] = s;
        }
        SignedPerm::new(target, sign).expect("left multiplication permutes the basis")
    }
}

/// The standard quaternion table on basis (1, i, j, k):
/// ij = k, jk = i, ki = j.
pub fn quaternion_table() -> AlgebraTable {
    let p = |q: usize, s: i8| (q, s);
    AlgebraTable::new(vec![
        vec![p(0, 1), p(1, 1), p(2, 1), p(3, 1)],
        vec![p(1, 1), p(0, -1), p(3, 1), p(2, -1)],
        vec![p(2, 1), p(3, -1), p(0, -1), p(1, 1)],
        vec![p(3, 1), p(2, 1), p(1, -1), p(0, -1)],
    ])
}

/// Conjugation sign of a quaternion basis element.
fn conj_sign(a: usize) -> i8 {
    if a == 0 {
        1
    } else {
        -1
    }
}

/// Octonion table on basis (1, i_1, ..., i_7) via Cayley-Dickson doubling
/// of the quaternions. Panics if any of the construction checks fail.
pub fn octonion_table() -> AlgebraTable {
    let q = quaternion_table();
    // basis index -> (quaternion index, 0 for the H part / 1 for the Hl part)
    let unpack = |a: usize| -> (usize, usize) {
        match a {
            0 => (0, 0),
            1..=4 => (a - 1, 1), // i_1..i_4 = l, il, jl, kl
            _ => (a - 4, 0),     // i_5..i_7 = i, j, k
        }
    };
    let pack = |h: usize, part: usize| -> usize {
        if part == 0 {
            if h == 0 {
                0
            } else {
                h + 4
            }
        } else {
            h + 1
        }
    };

    let mut mul = vec![vec![(0usize, 0i8); 8]; 8];
    for (a, row) in mul.iter_mut().enumerate() {
        let (x, xp) = unpack(a);
        for (b, cell) in row.iter_mut().enumerate() {
            let (y, yp) = unpack(b);
            // (x, 0)(y, 0) = (xy, 0)          (x, 0)(0, y) = (0, yx)
            // (0, x)(y, 0) = (0, x conj(y))   (0, x)(0, y) = (-conj(y) x, 0)
            let (h, s, part) = match (xp, yp) {
                (0, 0) => {
                    let (h, s) = q.product(x, y);
                    (h, s, 0)
                }
                (0, 1) => {
                    let (h, s) = q.product(y, x);
                    (h, s, 1)
                }
                (1, 0) => {
                    let (h, s) = q.product(x, y);
                    (h, s * conj_sign(y), 1)
                }
                _ => {
                    let (h, s) = q.product(y, x);
                    (h, -s * conj_sign(y), 0)
                }
            };
            *cell = (pack(h, part), s);
        }
    }
    let table = AlgebraTable::new(mul);

    // the two properties the construction depends on, beyond the unit checks
    let actions: Vec<SignedPerm> = (1..8).map(|a| table.left_action(a)).collect();
    let report = verify_clifford(&actions);
    assert!(
        report.passed(),
        "octonion left multiplications must satisfy the Clifford relations: {report}"
    );
    for a in 1..=4 {
        for b in 1..=4 {
            let (idx, _) = table.product(a, b);
            assert!(
                idx == 0 || idx >= 5,
                "i_{a} i_{b} must land in span(1, i_5, i_6, i_7)"
            );
        }
    }
    table
}

/// Action of i on the complex plane with basis (1, i).
pub fn seed_complex_action() -> SignedPerm {
    SignedPerm::new(vec![1, 0], vec![1, -1]).unwrap()
}

/// Left multiplications by i, j, k on the quaternions.
pub fn quaternion_left_actions() -> (SignedPerm, SignedPerm, SignedPerm) {
    let t = quaternion_table();
    (t.left_action(1), t.left_action(2), t.left_action(3))
}

/// Left multiplications by i_1..i_k on the octonions, for k <= 7. These are
/// the generator actions of the ungraded C_k seed on an 8-dimensional space.
pub fn octonion_left_actions(k: usize) -> Vec<SignedPerm> {
    assert!((1..=7).contains(&k));
    let t = octonion_table();
    (1..=k).map(|a| t.left_action(a)).collect()
}

/// Double-product actions T_i = (action of e_i) . (action of e_k) for
/// i < k, read off an ungraded module by operator composition.
pub fn restriction_doubles(gens: &[SignedPerm]) -> Vec<SignedPerm> {
    let last = gens.last().expect("at least one generator");
    gens[..gens.len() - 1]
        .iter()
        .map(|g| g.compose(last))
        .collect()
}

/// Even-part action transported through the isomorphism
/// phi(x_0 + x_1) = x_0 + e_k x_1 of C_{k-1} onto the even part of C_k.
///
/// Since phi^{-1}(e_k e_j) = e_j, the double product e_j e_k = -(e_k e_j)
/// acts as minus the supplied action of e_j. The input family must satisfy
/// the Clifford relations.
pub fn phi_even_twist(gens: &[SignedPerm]) -> Result<Vec<SignedPerm>> {
    let report = verify_clifford(gens);
    if !report.passed() {
        return Err(Error::FailedCheck(report));
    }
    Ok(gens.iter().map(|g| g.negated()).collect())
}

/// The irreducible graded seed module over C_k for k = 1..8.
pub fn seed_graded(k: usize) -> Result<GradedRep> {
    let (mut rep, name) = match k {
        1 => {
            let rep = GradedRep::assemble(vec![0, 1], vec![seed_complex_action()], String::new())?;
            (rep, "seed:complex".to_string())
        }
        2 => {
            // H graded as span{1, k} + span{i, j}, acted on by L_i, L_j
            let (li, lj, _) = quaternion_left_actions();
            let rep = GradedRep::assemble(vec![0, 1, 1, 0], vec![li, lj], String::new())?;
            (rep, "seed:quaternion".to_string())
        }
        3 => {
            let (li, lj, lk) = quaternion_left_actions();
            let rep = induce_graded(&restriction_doubles(&[li, lj, lk]), 3)?;
            (rep, "induce(quaternion/C3)".to_string())
        }
        4 => {
            // O graded as H + Hl, acted on by L_{i_1}..L_{i_4}
            let t = octonion_table();
            let gens = (1..=4).map(|a| t.left_action(a)).collect();
            let parity = vec![0, 1, 1, 1, 1, 0, 0, 0];
            let rep = GradedRep::assemble(parity, gens, String::new())?;
            (rep, "seed:octonion".to_string())
        }
        5..=7 => {
            let rep = induce_graded(&restriction_doubles(&octonion_left_actions(k)), k)?;
            (rep, format!("induce(octonion/C{k})"))
        }
        8 => {
            let rep = induce_graded(&phi_even_twist(&octonion_left_actions(7))?, 8)?;
            (rep, "induce(twist(octonion/C7))".to_string())
        }
        0 => return Err(Error::InvalidK(0)),
        _ => return Err(Error::SeedOutOfRange(k)),
    };
    rep.set_provenance(name);
    Ok(rep)
}
