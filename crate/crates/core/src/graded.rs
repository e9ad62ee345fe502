//! Z_2-graded integral Clifford modules and the two inductive constructions:
//! inducing a graded module from the even-part action, and the graded tensor
//! product with Koszul signs. `build_graded` composes them for arbitrary k.

use crate::error::{Error, Result};
use crate::perm::{verify_clifford, verify_even_integral, CheckReport, SignedPerm};
use crate::seeds;

/// Default bound on k for the tower constructions; generator storage grows
/// like k * 2^(k/2) past the seed range.
pub const DEFAULT_K_CAP: usize = 24;

/// A Z_2-graded integral Clifford module: each generator action is a signed
/// permutation that exchanges the two parity classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRep {
    parity: Vec<u8>,
    gens: Vec<SignedPerm>,
    provenance: String,
}

impl GradedRep {
    /// Validates the full type invariant before handing the value out.
    pub fn assemble(parity: Vec<u8>, gens: Vec<SignedPerm>, provenance: String) -> Result<Self> {
        let rep = GradedRep {
            parity,
            gens,
            provenance,
        };
        let report = rep.validate();
        if !report.passed() {
            return Err(Error::FailedCheck(report));
        }
        Ok(rep)
    }

    pub fn k(&self) -> usize {
        self.gens.len()
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    pub fn gens(&self) -> &[SignedPerm] {
        &self.gens
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub(crate) fn set_provenance(&mut self, provenance: String) {
        self.provenance = provenance;
    }

    /// Indices of the parity-0 basis vectors, in basis order.
    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&p| self.parity[p] == 0).collect()
    }

    /// Clifford relations, skewness, parity flip, and the even/odd split.
    pub fn validate(&self) -> CheckReport {
        let n = self.dim();
        for (a, g) in self.gens.iter().enumerate() {
            if g.n() != n {
                return CheckReport::fail("graded", a, a, 0, "generator size differs from basis".into());
            }
            for p in 0..n {
                let (q, _) = g.image(p);
                if self.parity[q] == self.parity[p] {
                    return CheckReport::fail(
                        "graded",
                        a,
                        a,
                        p,
                        "generator action preserves parity".into(),
                    );
                }
            }
        }
        let even = self.parity.iter().filter(|&&p| p == 0).count();
        if 2 * even != n {
            return CheckReport::fail(
                "graded",
                0,
                0,
                0,
                format!("parity classes have sizes {} and {}", even, n - even),
            );
        }
        verify_clifford(&self.gens)
    }
}

/// Builds the graded module of dimension 2m induced from the even-part
/// action on m points. `doubles[i]` is the action of the double product
/// e_{i+1} e_k, for i < k-1.
///
/// Basis order is the parity-0 block followed by its image under e_k:
/// x_p = 1 (x) v_p at index p, y_p = e_k (x) v_p at index m + p. Then e_k
/// sends x_p to y_p and y_p to -x_p, and e_i acts through the supplied
/// double (e_i = e_k * (-e_k e_i), so the x/y blocks swap under T_i).
pub fn induce_graded(doubles: &[SignedPerm], k: usize) -> Result<GradedRep> {
    assert!(k >= 2, "induction needs k >= 2; seeds cover k = 1");
    assert_eq!(doubles.len(), k - 1, "expected k - 1 double-product actions");
    let report = verify_even_integral(doubles);
    if !report.passed() {
        return Err(Error::FailedCheck(report));
    }
    let m = doubles[0].n();
    let n = 2 * m;

    let mut gens = Vec::with_capacity(k);
    for t in doubles {
        let mut target = vec![0usize; n];
        let mut sign = vec![0i8; n];
        for p in 0..m {
            let (q, s) = t.image(p);
            target[p] = m + q;
            sign[p] = s;
            target[m + p] = q;
            sign[m + p] = s;
        }
        gens.push(SignedPerm::new(target, sign).expect("induced generator is a signed perm"));
    }
    let mut target = vec![0usize; n];
    let mut sign = vec![0i8; n];
    for p in 0..m {
        target[p] = m + p;
        sign[p] = 1;
        target[m + p] = p;
        sign[m + p] = -1;
    }
    gens.push(SignedPerm::new(target, sign).expect("e_k action is a signed perm"));

    let parity: Vec<u8> = (0..n).map(|p| u8::from(p >= m)).collect();
    GradedRep::assemble(parity, gens, format!("induce(k={k})"))
}

/// Graded tensor product over C_{k+l}. Basis is row-major over (a, b) pairs;
/// generators of the right factor pick up the Koszul sign (-1)^parity(a).
pub fn graded_tensor(a: &GradedRep, b: &GradedRep) -> GradedRep {
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let idx = |ia: usize, ib: usize| ia * nb + ib;

    let mut parity = vec![0u8; n];
    for ia in 0..na {
        for ib in 0..nb {
            parity[idx(ia, ib)] = (a.parity()[ia] + b.parity()[ib]) % 2;
        }
    }

    let mut gens = Vec::with_capacity(a.k() + b.k());
    for g in a.gens() {
        let mut target = vec![0usize; n];
        let mut sign = vec![0i8; n];
        for ia in 0..na {
            let (qa, s) = g.image(ia);
            for ib in 0..nb {
                target[idx(ia, ib)] = idx(qa, ib);
                sign[idx(ia, ib)] = s;
            }
        }
        gens.push(SignedPerm::new(target, sign).expect("tensor generator is a signed perm"));
    }
    for g in b.gens() {
        let mut target = vec![0usize; n];
        let mut sign = vec![0i8; n];
        for ia in 0..na {
            let koszul: i8 = if a.parity()[ia] == 1 { -1 } else { 1 };
            for ib in 0..nb {
                let (qb, s) = g.image(ib);
                target[idx(ia, ib)] = idx(ia, qb);
                sign[idx(ia, ib)] = s * koszul;
            }
        }
        gens.push(SignedPerm::new(target, sign).expect("tensor generator is a signed perm"));
    }

    let provenance = format!("tensor({}, {})", a.provenance(), b.provenance());
    GradedRep::assemble(parity, gens, provenance)
        .expect("graded tensor of valid modules satisfies the Clifford relations")
}

/// Irreducible graded module over C_k: the explicit seed for k <= 8,
/// otherwise the graded tensor of the k-8 tower with the C_8 seed.
pub fn build_graded(k: usize) -> Result<GradedRep> {
    build_graded_capped(k, DEFAULT_K_CAP)
}

pub fn build_graded_capped(k: usize, cap: usize) -> Result<GradedRep> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    if k > cap {
        return Err(Error::CapExceeded { k, cap });
    }
    if k <= 8 {
        return seeds::seed_graded(k);
    }
    let lower = build_graded_capped(k - 8, cap)?;
    Ok(graded_tensor(&lower, &seeds::seed_graded(8)?))
}
