//! Signed permutations of a module basis and the exact relation checks
//! built on them.
//!
//! Every generator action in an integral Clifford module sends each basis
//! vector to plus or minus another basis vector, so the whole construction
//! runs on signed permutations and small integer sums. No floating point.

use std::fmt;

use serde::Serialize;

/// A map sending basis vector p to `sign[p] * basis[target[p]]`, with the
/// targets forming a permutation. As a matrix it is orthogonal, so the
/// transpose is the inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    target: Vec<usize>,
    sign: Vec<i8>,
}

impl SignedPerm {
    /// Validates bijectivity and signs.
    pub fn new(target: Vec<usize>, sign: Vec<i8>) -> Result<Self, String> {
        if target.len() != sign.len() {
            return Err(format!(
                "target/sign length mismatch: {} vs {}",
                target.len(),
                sign.len()
            ));
        }
        let n = target.len();
        let mut seen = vec![false; n];
        for (p, &q) in target.iter().enumerate() {
            if q >= n {
                return Err(format!("target {q} at index {p} out of range 0..{n}"));
            }
            if seen[q] {
                return Err(format!("target {q} hit twice; map is not a permutation"));
            }
            seen[q] = true;
        }
        for (p, &s) in sign.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(format!("sign {s} at index {p} must be +1 or -1"));
            }
        }
        Ok(SignedPerm { target, sign })
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm {
            target: (0..n).collect(),
            sign: vec![1; n],
        }
    }

    pub fn n(&self) -> usize {
        self.target.len()
    }

    /// Image of basis index p: (target index, sign).
    pub fn image(&self, p: usize) -> (usize, i8) {
        (self.target[p], self.sign[p])
    }

    pub fn targets(&self) -> &[usize] {
        &self.target
    }

    pub fn signs(&self) -> &[i8] {
        &self.sign
    }

    /// Matrix product self * other: `other` is applied first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.n(), other.n(), "composing signed perms of unequal size");
        let n = self.n();
        let mut target = vec![0usize; n];
        let mut sign = vec![0i8; n];
        for p in 0..n {
            let (r, s1) = other.image(p);
            let (q, s2) = self.image(r);
            target[p] = q;
            sign[p] = s1 * s2;
        }
        SignedPerm { target, sign }
    }

    /// Matrix transpose, which equals the inverse.
    pub fn transpose(&self) -> SignedPerm {
        let n = self.n();
        let mut target = vec![0usize; n];
        let mut sign = vec![0i8; n];
        for p in 0..n {
            let (q, s) = self.image(p);
            target[q] = p;
            sign[q] = s;
        }
        SignedPerm { target, sign }
    }

    pub fn negated(&self) -> SignedPerm {
        SignedPerm {
            target: self.target.clone(),
            sign: self.sign.iter().map(|s| -s).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.target.iter().enumerate().all(|(p, &q)| p == q) && self.sign.iter().all(|&s| s == 1)
    }

    /// True when self is skew-adjoint: transpose == negation.
    pub fn is_skew(&self) -> bool {
        self.transpose() == self.negated()
    }

    /// Dense n x n integer matrix with column p carrying the image of p.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let mut m = vec![vec![0i64; n]; n];
        for (p, (&q, &s)) in self.target.iter().zip(&self.sign).enumerate() {
            m[q][p] = s as i64;
        }
        m
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for p in 0..self.n() {
            if p > 0 {
                write!(f, " ")?;
            }
            let (q, s) = self.image(p);
            write!(f, "{}{}", if s < 0 { "-" } else { "+" }, q)?;
        }
        write!(f, "]")
    }
}

/// First violation found by a relation check: the generator pair and the
/// basis index where the identity failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub gen_a: usize,
    pub gen_b: usize,
    pub basis: usize,
    pub detail: String,
}

/// Outcome of an exact relation check. Failures are reported, not thrown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: &'static str,
    pub violation: Option<Violation>,
}

impl CheckReport {
    pub fn pass(check: &'static str) -> Self {
        CheckReport {
            check,
            violation: None,
        }
    }

    pub fn fail(check: &'static str, gen_a: usize, gen_b: usize, basis: usize, detail: String) -> Self {
        CheckReport {
            check,
            violation: Some(Violation {
                gen_a,
                gen_b,
                basis,
                detail,
            }),
        }
    }

    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "{}: ok", self.check),
            Some(v) => write!(
                f,
                "{}: FAIL at (a={}, b={}, basis={}): {}",
                self.check, v.gen_a, v.gen_b, v.basis, v.detail
            ),
        }
    }
}

/// Checks that `ab + ba == 0` entrywise for two signed perms, i.e. the two
/// composites land on the same targets with opposite signs.
fn anticommute_to_zero(ab: &SignedPerm, ba: &SignedPerm) -> Option<usize> {
    (0..ab.n()).find(|&p| {
        let (q1, s1) = ab.image(p);
        let (q2, s2) = ba.image(p);
        q1 != q2 || s1 != -s2
    })
}

/// Exact check of the Clifford relations and skew-adjointness:
/// g_a g_b + g_b g_a == -2 delta_ab I and g_a^T == -g_a.
///
/// Passing is equivalent, by bilinearity, to |J_z v| = |z||v| and
/// J_z J_z = -|z|^2 id for every real z.
pub fn verify_clifford(gens: &[SignedPerm]) -> CheckReport {
    const CHECK: &str = "clifford";
    for (a, g) in gens.iter().enumerate() {
        if g.n() != gens[0].n() {
            return CheckReport::fail(CHECK, a, a, 0, "generator sizes differ".into());
        }
        if !g.is_skew() {
            let p = (0..g.n())
                .find(|&p| {
                    let (q, s) = g.transpose().image(p);
                    g.image(p) != (q, -s)
                })
                .unwrap_or(0);
            return CheckReport::fail(CHECK, a, a, p, "generator is not skew-adjoint".into());
        }
    }
    for a in 0..gens.len() {
        let sq = gens[a].compose(&gens[a]);
        for p in 0..sq.n() {
            if sq.image(p) != (p, -1) {
                return CheckReport::fail(CHECK, a, a, p, "generator square is not -identity".into());
            }
        }
        for b in (a + 1)..gens.len() {
            let ab = gens[a].compose(&gens[b]);
            let ba = gens[b].compose(&gens[a]);
            if let Some(p) = anticommute_to_zero(&ab, &ba) {
                return CheckReport::fail(CHECK, a, b, p, "generator pair does not anticommute".into());
            }
        }
    }
    CheckReport::pass(CHECK)
}

/// Exact check of the integral even-module condition on the double-product
/// actions T_i (the action of e_i e_k for i < k).
///
/// The norm condition |(z e_k) w| = |z||w| over all real z polarizes to
/// T_i^T T_j + T_j^T T_i == 2 delta_ij I over the family extended by
/// T_k = -I; the pairs against T_k say exactly that each T_i is
/// skew-adjoint. Orthogonality (the i == j case) holds for any signed
/// permutation, so the content is the cross terms plus skewness.
pub fn verify_even_integral(doubles: &[SignedPerm]) -> CheckReport {
    const CHECK: &str = "even-integral";
    for (i, t) in doubles.iter().enumerate() {
        if t.n() != doubles[0].n() {
            return CheckReport::fail(CHECK, i, i, 0, "double-product actions differ in size".into());
        }
        if !t.is_skew() {
            return CheckReport::fail(CHECK, i, i, 0, "double-product action is not skew-adjoint".into());
        }
    }
    for i in 0..doubles.len() {
        for j in (i + 1)..doubles.len() {
            let titj = doubles[i].transpose().compose(&doubles[j]);
            let tjti = doubles[j].transpose().compose(&doubles[i]);
            if let Some(p) = anticommute_to_zero(&titj, &tjti) {
                return CheckReport::fail(
                    CHECK,
                    i,
                    j,
                    p,
                    "polarized norm condition fails for this pair".into(),
                );
            }
        }
    }
    CheckReport::pass(CHECK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds::{quaternion_left_actions, seed_complex_action};

    #[test]
    fn identity_composes_neutrally() {
        let (li, _, _) = quaternion_left_actions();
        let id = SignedPerm::identity(4);
        assert_eq!(id.compose(&li), li);
        assert_eq!(li.compose(&id), li);
    }

    #[test]
    fn complex_seed_squares_to_minus_identity() {
        // multiplication by i on basis (1, i)
        let j = seed_complex_action();
        let jj = j.compose(&j);
        assert_eq!(jj, SignedPerm::identity(2).negated());
    }

    #[test]
    fn quaternion_composition_matches_table() {
        // associativity of H: left mult by i then by j is left mult by k
        let (li, lj, lk) = quaternion_left_actions();
        assert_eq!(li.compose(&lj), lk);
    }

    #[test]
    fn transpose_is_involution_and_inverse() {
        let (li, lj, _) = quaternion_left_actions();
        let a = li.compose(&lj.transpose());
        assert_eq!(a.transpose().transpose(), a);
        assert!(a.compose(&a.transpose()).is_identity());
    }

    #[test]
    fn transpose_is_an_antihomomorphism() {
        let (li, lj, lk) = quaternion_left_actions();
        for a in [&li, &lj, &lk] {
            for b in [&li, &lj, &lk] {
                assert_eq!(
                    a.compose(b).transpose(),
                    b.transpose().compose(&a.transpose())
                );
            }
        }
    }

    #[test]
    fn seed_generators_are_skew() {
        let (li, lj, lk) = quaternion_left_actions();
        for g in [&li, &lj, &lk] {
            assert_eq!(g.transpose(), g.negated());
        }
        assert!(seed_complex_action().is_skew());
    }

    #[test]
    fn clifford_check_passes_on_seeds() {
        assert!(verify_clifford(&[seed_complex_action()]).passed());
        let (li, lj, lk) = quaternion_left_actions();
        assert!(verify_clifford(&[li, lj, lk]).passed());
    }

    #[test]
    fn clifford_check_catches_a_flipped_sign() {
        let (li, lj, lk) = quaternion_left_actions();
        let mut signs = li.signs().to_vec();
        signs[2] = -signs[2];
        let bad = SignedPerm::new(li.targets().to_vec(), signs).unwrap();
        let report = verify_clifford(&[bad, lj, lk]);
        assert!(!report.passed());
        let v = report.violation.unwrap();
        assert_eq!(v.gen_a, 0);
    }

    #[test]
    fn even_integral_on_quaternion_doubles() {
        // T_i = action of e_i e_3 on H: L_i L_k = -L_j and L_j L_k = L_i
        let (li, lj, lk) = quaternion_left_actions();
        let t1 = li.compose(&lk);
        let t2 = lj.compose(&lk);
        assert_eq!(t1, lj.negated());
        assert_eq!(t2, li);
        assert!(verify_even_integral(&[t1, t2]).passed());
    }

    #[test]
    fn even_integral_vacuous_on_empty_family() {
        assert!(verify_even_integral(&[]).passed());
    }

    #[test]
    fn even_integral_rejects_non_skew_member() {
        let id = SignedPerm::identity(4);
        let (li, _, _) = quaternion_left_actions();
        let report = verify_even_integral(&[id, li]);
        assert!(!report.passed());
    }

    #[test]
    fn non_permutation_is_rejected_at_construction() {
        assert!(SignedPerm::new(vec![0, 0], vec![1, 1]).is_err());
        assert!(SignedPerm::new(vec![0, 2], vec![1, 1]).is_err());
        assert!(SignedPerm::new(vec![0, 1], vec![1, 2]).is_err());
    }
}
