//! Ungraded irreducible integral modules for every k, produced by residue
//! mod 8: forget the grading (k = 1, 2, 4, 0), split by the volume element
//! (k = 3, 7), or restrict from a larger algebra (k = 5, 6).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{build_graded_capped, GradedRep, DEFAULT_K_CAP};
use crate::perm::{verify_clifford, CheckReport, SignedPerm};

/// Which irreducible class a module realizes. `Plus` and `Minus` name the
/// two non-isomorphic classes for k = 3 (mod 4), distinguished by the sign
/// of the volume element; `Default` covers every other k (one class) and
/// selects `Plus` where two exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Default,
    Plus,
    Minus,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Default => write!(f, "default"),
            Variant::Plus => write!(f, "plus"),
            Variant::Minus => write!(f, "minus"),
        }
    }
}

/// An ungraded irreducible integral Clifford module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UngradedRep {
    k: usize,
    gens: Vec<SignedPerm>,
    variant: Variant,
    provenance: String,
}

impl UngradedRep {
    /// Validates the Clifford relations and the classification dimension.
    pub fn assemble(
        k: usize,
        gens: Vec<SignedPerm>,
        variant: Variant,
        provenance: String,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK(0));
        }
        if gens.len() != k {
            return Err(Error::FailedCheck(CheckReport::fail(
                "ungraded",
                gens.len(),
                k,
                0,
                format!("expected {k} generator actions, got {}", gens.len()),
            )));
        }
        let report = verify_clifford(&gens);
        if !report.passed() {
            return Err(Error::FailedCheck(report));
        }
        let n = gens[0].n();
        let want = expected_ungraded_dim(k);
        if n != want {
            return Err(Error::FailedCheck(CheckReport::fail(
                "ungraded",
                0,
                0,
                n,
                format!("dimension {n} does not match the classification value {want}"),
            )));
        }
        Ok(UngradedRep {
            k,
            gens,
            variant,
            provenance,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.gens[0].n()
    }

    pub fn gens(&self) -> &[SignedPerm] {
        &self.gens
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }
}

/// Dimension of an irreducible graded module over C_k.
pub fn expected_graded_dim(k: usize) -> usize {
    const BASE: [usize; 8] = [2, 4, 8, 8, 16, 16, 16, 16];
    assert!(k >= 1);
    if k <= 8 {
        BASE[k - 1]
    } else {
        16 * expected_graded_dim(k - 8)
    }
}

/// Dimension of an irreducible ungraded module over C_k, by residue mod 8.
pub fn expected_ungraded_dim(k: usize) -> usize {
    assert!(k >= 1);
    match k % 8 {
        1 | 2 | 4 | 0 => expected_graded_dim(k),
        3 | 7 => expected_graded_dim(k) / 2,
        5 => expected_graded_dim(k + 2) / 2,
        _ => expected_graded_dim(k + 1) / 2,
    }
}

/// Composite action of the volume element e_1 e_2 ... e_k, defined here for
/// k = 3 (mod 4) where it is central with square one.
pub fn omega_action(gens: &[SignedPerm]) -> Result<SignedPerm> {
    let k = gens.len();
    if k % 4 != 3 {
        return Err(Error::WrongResidue(k));
    }
    let mut acc = SignedPerm::identity(gens[0].n());
    for g in gens {
        acc = acc.compose(g);
    }
    Ok(acc)
}

/// Splits a graded module over C_k, k = 3 (mod 4), into the two ungraded
/// eigenmodules of the volume element.
///
/// Both halves are indexed by the parity-0 basis in order. On the plus
/// module e_i acts as the even element omega e_i restricted to that block
/// (the 1/sqrt(2) normalization of the eigenbasis cancels from every
/// structure constant, so the arithmetic stays integral); the minus module
/// carries the negated actions.
pub fn split_by_omega(w: &GradedRep) -> Result<(UngradedRep, UngradedRep)> {
    let k = w.k();
    if k % 4 != 3 {
        return Err(Error::WrongResidue(k));
    }
    let omega = omega_action(w.gens())?;
    let even = w.even_indices();
    let mut pos = vec![usize::MAX; w.dim()];
    for (local, &global) in even.iter().enumerate() {
        pos[global] = local;
    }

    let mut plus_gens = Vec::with_capacity(k);
    for g in w.gens() {
        let h = omega.compose(g);
        let mut target = vec![0usize; even.len()];
        let mut sign = vec![0i8; even.len()];
        for (local, &global) in even.iter().enumerate() {
            let (gq, s) = h.image(global);
            debug_assert_eq!(w.parity()[gq], 0, "omega e_i must preserve the even block");
            target[local] = pos[gq];
            sign[local] = s;
        }
        plus_gens.push(SignedPerm::new(target, sign).expect("restricted action is a signed perm"));
    }
    let minus_gens: Vec<SignedPerm> = plus_gens.iter().map(|g| g.negated()).collect();

    let plus = UngradedRep::assemble(
        k,
        plus_gens,
        Variant::Plus,
        format!("omega_split:+({})", w.provenance()),
    )?;
    let minus = UngradedRep::assemble(
        k,
        minus_gens,
        Variant::Minus,
        format!("omega_split:-({})", w.provenance()),
    )?;
    Ok((plus, minus))
}

/// Irreducible ungraded integral module over C_k.
///
/// `variant` selects the class for k = 3 (mod 4) (`Default` means `Plus`)
/// and must be `Default` for every other k.
pub fn extract_irreducible(k: usize, variant: Variant) -> Result<UngradedRep> {
    extract_irreducible_capped(k, variant, DEFAULT_K_CAP)
}

pub fn extract_irreducible_capped(k: usize, variant: Variant, cap: usize) -> Result<UngradedRep> {
    if k == 0 {
        return Err(Error::InvalidK(0));
    }
    if k > cap {
        return Err(Error::CapExceeded { k, cap });
    }
    let r = k % 8;
    if !matches!(r, 3 | 7) && variant != Variant::Default {
        return Err(Error::VariantNotApplicable { k, variant });
    }
    match r {
        1 | 2 | 4 | 0 => {
            let w = build_graded_capped(k, cap)?;
            let provenance = format!("forget({})", w.provenance());
            let gens = w.gens().to_vec();
            UngradedRep::assemble(k, gens, Variant::Default, provenance)
        }
        3 | 7 => {
            let w = build_graded_capped(k, cap)?;
            let (plus, minus) = split_by_omega(&w)?;
            Ok(match variant {
                Variant::Minus => minus,
                _ => plus,
            })
        }
        _ => {
            // k = 5, 6 (mod 8): the first k generators of the plus module
            // over C_{k'} with k' = k + (7 - r); the cap widens so the
            // internal detour never trips it for an in-range k.
            let k_prime = k + (7 - r);
            let inner = extract_irreducible_capped(k_prime, Variant::Plus, cap.max(k_prime))?;
            let gens = inner.gens()[..k].to_vec();
            let provenance = format!("restrict(k={k}, {})", inner.provenance());
            UngradedRep::assemble(k, gens, Variant::Default, provenance)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::build_graded;
    use crate::seeds::quaternion_left_actions;

    #[test]
    fn omega_on_quaternion_module_is_minus_identity() {
        let (li, lj, lk) = quaternion_left_actions();
        let omega = omega_action(&[li, lj, lk]).unwrap();
        assert_eq!(omega, SignedPerm::identity(4).negated());
    }

    #[test]
    fn omega_squares_to_identity_and_is_symmetric() {
        for k in [3usize, 7, 11] {
            let w = build_graded(k).unwrap();
            let omega = omega_action(w.gens()).unwrap();
            assert!(omega.compose(&omega).is_identity(), "omega^2 at k={k}");
            assert_eq!(omega.transpose(), omega, "omega symmetric at k={k}");
            for g in w.gens() {
                assert_eq!(omega.compose(g), g.compose(&omega), "omega central at k={k}");
            }
        }
    }

    #[test]
    fn omega_rejects_wrong_residue() {
        let w = build_graded(2).unwrap();
        assert!(matches!(omega_action(w.gens()), Err(Error::WrongResidue(2))));
    }

    #[test]
    fn split_dimensions_halve() {
        let w = build_graded(3).unwrap();
        let (plus, minus) = split_by_omega(&w).unwrap();
        assert_eq!(plus.dim(), 4);
        assert_eq!(minus.dim(), 4);
        assert_eq!(plus.variant(), Variant::Plus);
        assert_eq!(minus.variant(), Variant::Minus);
    }

    #[test]
    fn minus_actions_are_negated_plus_actions() {
        for k in [3usize, 7] {
            let (plus, minus) = split_by_omega(&build_graded(k).unwrap()).unwrap();
            for (p, m) in plus.gens().iter().zip(minus.gens()) {
                assert_eq!(&p.negated(), m);
            }
        }
    }

    #[test]
    fn omega_evaluates_to_plus_minus_identity_on_the_halves() {
        for k in [3usize, 7, 11] {
            let (plus, minus) = split_by_omega(&build_graded(k).unwrap()).unwrap();
            let id = SignedPerm::identity(plus.dim());
            assert_eq!(omega_action(plus.gens()).unwrap(), id);
            assert_eq!(omega_action(minus.gens()).unwrap(), id.negated());
        }
    }

    #[test]
    fn extracted_dimensions_match_classification() {
        let expect = [2usize, 4, 4, 8, 8, 8, 8, 16];
        for k in 1..=8 {
            let rep = extract_irreducible(k, Variant::Default).unwrap();
            assert_eq!(rep.dim(), expect[k - 1], "a_{k}");
            assert_eq!(rep.dim(), expected_ungraded_dim(k));
        }
    }

    #[test]
    fn periodicity_of_expected_dims() {
        for k in 1..=8 {
            assert_eq!(expected_ungraded_dim(k + 8), 16 * expected_ungraded_dim(k));
            assert_eq!(expected_graded_dim(k + 8), 16 * expected_graded_dim(k));
        }
    }

    #[test]
    fn restriction_cases_keep_first_k_generators() {
        let rep5 = extract_irreducible(5, Variant::Default).unwrap();
        assert_eq!(rep5.dim(), 8);
        assert_eq!(rep5.k(), 5);
        let rep6 = extract_irreducible(6, Variant::Default).unwrap();
        assert_eq!(rep6.dim(), 8);
        // the restricted family is the head of the C_7 plus module family
        let plus7 = extract_irreducible(7, Variant::Plus).unwrap();
        assert_eq!(rep6.gens(), &plus7.gens()[..6]);
    }

    #[test]
    fn variant_rejected_off_residue() {
        assert!(matches!(
            extract_irreducible(2, Variant::Plus),
            Err(Error::VariantNotApplicable { k: 2, .. })
        ));
        assert!(extract_irreducible(11, Variant::Plus).is_ok());
    }

    #[test]
    fn default_variant_means_plus_on_split_residues() {
        let d = extract_irreducible(3, Variant::Default).unwrap();
        let p = extract_irreducible(3, Variant::Plus).unwrap();
        assert_eq!(d.gens(), p.gens());
        assert_eq!(d.variant(), Variant::Plus);
    }

    #[test]
    fn k11_plus_has_dim_64() {
        let rep = extract_irreducible(11, Variant::Plus).unwrap();
        assert_eq!(rep.dim(), 64);
    }
}
