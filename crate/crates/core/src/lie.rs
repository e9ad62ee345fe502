//! H-type Lie algebra data assembled from an integral module: the sparse
//! structure tensor with entries in {+1, -1}, the bracket, and the relation
//! checks that certify the orthogonal-multiplication identities.

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::perm::{verify_clifford, CheckReport};
use crate::ungraded::{extract_irreducible, UngradedRep, Variant};

/// Sparse tensor A^a_{pq} with [v_p, v_q] = sum_a A^a_{pq} z_a.
///
/// A^a_{pq} = (z_a v_p, v_q), so row (a, p) holds exactly the image of p
/// under generator a: one nonzero slot with value +1 or -1. Antisymmetry in
/// (p, q) is skew-adjointness of the generator actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructTensor {
    m: usize,
    n: usize,
    target: Vec<Vec<usize>>,
    sign: Vec<Vec<i8>>,
}

impl StructTensor {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// A^a_{pq}, zero unless q is the image of p under generator a.
    pub fn entry(&self, a: usize, p: usize, q: usize) -> i8 {
        if self.target[a][p] == q {
            self.sign[a][p]
        } else {
            0
        }
    }

    /// The single nonzero slot in row (a, p): (q, sign).
    pub fn image(&self, a: usize, p: usize) -> (usize, i8) {
        (self.target[a][p], self.sign[a][p])
    }

    /// All nonzero slots as (a, p, q, sign), one per (a, p), in row order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize, i8)> + '_ {
        (0..self.m).flat_map(move |a| {
            (0..self.n).map(move |p| (a, p, self.target[a][p], self.sign[a][p]))
        })
    }

    /// [v, w] as an integer vector in U.
    pub fn bracket(&self, v: &[i64], w: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n, "bracket argument dimension mismatch");
        assert_eq!(w.len(), self.n, "bracket argument dimension mismatch");
        let mut out = vec![0i64; self.m];
        for a in 0..self.m {
            let mut acc = 0i64;
            for p in 0..self.n {
                if v[p] != 0 {
                    acc += self.sign[a][p] as i64 * v[p] * w[self.target[a][p]];
                }
            }
            out[a] = acc;
        }
        out
    }

    /// Bracket with exact dyadic coordinates.
    pub fn bracket_dyadic(&self, v: &[Dyadic], w: &[Dyadic]) -> Vec<Dyadic> {
        assert_eq!(v.len(), self.n, "bracket argument dimension mismatch");
        assert_eq!(w.len(), self.n, "bracket argument dimension mismatch");
        let mut out = vec![Dyadic::ZERO; self.m];
        for a in 0..self.m {
            let mut acc = Dyadic::ZERO;
            for p in 0..self.n {
                let term = v[p] * w[self.target[a][p]];
                acc = if self.sign[a][p] > 0 { acc + term } else { acc - term };
            }
            out[a] = acc;
        }
        out
    }

    /// Rebuilds a tensor from raw (a, p, q, sign) slots, enforcing the type
    /// invariants: exactly one slot per (a, p), signs in {+1, -1}, no
    /// diagonal slots, and antisymmetry in (p, q).
    pub fn from_triples(
        m: usize,
        n: usize,
        triples: impl IntoIterator<Item = (usize, usize, usize, i8)>,
    ) -> Result<Self> {
        let mut target = vec![vec![usize::MAX; n]; m];
        let mut sign = vec![vec![0i8; n]; m];
        for (a, p, q, s) in triples {
            if a >= m || p >= n || q >= n {
                return Err(Error::InvalidRecord(format!(
                    "slot ({a}, {p}, {q}) out of bounds for {m} x {n} x {n}"
                )));
            }
            if s != 1 && s != -1 {
                return Err(Error::InvalidRecord(format!(
                    "slot ({a}, {p}, {q}) carries value {s}, expected +1 or -1"
                )));
            }
            if p == q {
                return Err(Error::InvalidRecord(format!(
                    "diagonal slot ({a}, {p}, {p}) violates antisymmetry"
                )));
            }
            if target[a][p] != usize::MAX {
                return Err(Error::InvalidRecord(format!(
                    "rows ({a}, {p}) carries two nonzero slots"
                )));
            }
            target[a][p] = q;
            sign[a][p] = s;
        }
        for (a, row) in target.iter().enumerate() {
            if let Some(p) = row.iter().position(|&q| q == usize::MAX) {
                return Err(Error::InvalidRecord(format!(
                    "row ({a}, {p}) has no nonzero slot"
                )));
            }
        }
        let tensor = StructTensor { m, n, target, sign };
        let report = tensor.validate();
        if !report.passed() {
            return Err(Error::InvalidRecord(report.to_string()));
        }
        Ok(tensor)
    }

    /// Antisymmetry and bijectivity of every generator slice.
    pub fn validate(&self) -> CheckReport {
        const CHECK: &str = "struct-tensor";
        for a in 0..self.m {
            let mut seen = vec![false; self.n];
            for p in 0..self.n {
                let q = self.target[a][p];
                let s = self.sign[a][p];
                if q == p {
                    return CheckReport::fail(CHECK, a, a, p, "diagonal entry".into());
                }
                if seen[q] {
                    return CheckReport::fail(CHECK, a, a, q, "two rows share a target".into());
                }
                seen[q] = true;
                if self.target[a][q] != p || self.sign[a][q] != -s {
                    return CheckReport::fail(
                        CHECK,
                        a,
                        a,
                        p,
                        format!("entry ({a}, {q}, {p}) is not the negation of ({a}, {p}, {q})"),
                    );
                }
            }
        }
        CheckReport::pass(CHECK)
    }
}

/// Reads the structure constants directly off the generator actions:
/// A^a_{pq} = s exactly when generator a maps v_p to s v_q.
pub fn structure_constants(rep: &UngradedRep) -> StructTensor {
    let m = rep.k();
    let n = rep.dim();
    let target: Vec<Vec<usize>> = rep.gens().iter().map(|g| g.targets().to_vec()).collect();
    let sign: Vec<Vec<i8>> = rep.gens().iter().map(|g| g.signs().to_vec()).collect();
    let tensor = StructTensor { m, n, target, sign };
    debug_assert!(tensor.validate().passed());
    tensor
}

/// Certifies the H-type identities for the module: the generator family
/// satisfies the Clifford relations and skew-adjointness, which by
/// polarization gives |J_z v| = |z||v| and J_z J_z = -|z|^2 for all real z.
pub fn verify_htype(rep: &UngradedRep) -> CheckReport {
    verify_clifford(rep.gens())
}

/// True when the structure tensor of the minus module, written against the
/// negated center basis (-e_1, ..., -e_k), equals the tensor of the plus
/// module entrywise — the witness that the two H-type algebras are
/// isomorphic.
pub fn check_plus_minus_iso(k: usize) -> Result<bool> {
    if k % 4 != 3 {
        return Err(Error::WrongResidue(k));
    }
    let plus = extract_irreducible(k, Variant::Plus)?;
    let minus = extract_irreducible(k, Variant::Minus)?;
    let a_plus = structure_constants(&plus);
    let a_minus = structure_constants(&minus);
    // flipping e_a to -e_a negates every A^a_{pq}
    let renamed: Vec<_> = a_minus.triples().map(|(a, p, q, s)| (a, p, q, -s)).collect();
    let flipped = StructTensor::from_triples(a_minus.m(), a_minus.n(), renamed)?;
    Ok(flipped == a_plus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ungraded::{extract_irreducible, Variant};

    fn rep(k: usize) -> UngradedRep {
        extract_irreducible(k, Variant::Default).unwrap()
    }

    #[test]
    fn k1_tensor_matches_complex_multiplication() {
        let t = structure_constants(&rep(1));
        assert_eq!(t.m(), 1);
        assert_eq!(t.n(), 2);
        assert_eq!(t.entry(0, 0, 1), 1);
        assert_eq!(t.entry(0, 1, 0), -1);
        assert_eq!(t.entry(0, 0, 0), 0);
        let triples: Vec<_> = t.triples().collect();
        assert_eq!(triples, vec![(0, 0, 1, 1), (0, 1, 0, -1)]);
    }

    #[test]
    fn all_nonzero_slots_are_unit() {
        for k in 1..=8 {
            let t = structure_constants(&rep(k));
            assert!(t.triples().all(|(_, _, _, s)| s == 1 || s == -1));
            assert!(t.validate().passed(), "antisymmetry at k={k}");
        }
    }

    #[test]
    fn k1_bracket_of_basis_vectors_is_z1() {
        let t = structure_constants(&rep(1));
        assert_eq!(t.bracket(&[1, 0], &[0, 1]), vec![1]);
        assert_eq!(t.bracket(&[0, 1], &[1, 0]), vec![-1]);
    }

    #[test]
    fn bracket_is_alternating_and_bilinear() {
        let t = structure_constants(&rep(3));
        let v = vec![3, -1, 4, 1];
        let w = vec![-5, 9, 2, 6];
        let x = vec![2, 7, -1, 8];
        assert_eq!(t.bracket(&v, &v), vec![0; 3]);
        let vw = t.bracket(&v, &w);
        let wv = t.bracket(&w, &v);
        let neg: Vec<i64> = wv.iter().map(|c| -c).collect();
        assert_eq!(vw, neg);
        let vpx: Vec<i64> = v.iter().zip(&x).map(|(a, b)| a + b).collect();
        let lhs = t.bracket(&vpx, &w);
        let rhs: Vec<i64> = vw.iter().zip(t.bracket(&x, &w)).map(|(a, b)| a + b).collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_norm_bound_holds() {
        // |[v, w]|^2 <= |v|^2 |w|^2, exact integers
        let t = structure_constants(&rep(7));
        let v: Vec<i64> = (0..8).map(|i| (i * i) as i64 % 5 - 2).collect();
        let w: Vec<i64> = (0..8).map(|i| (3 * i + 1) as i64 % 7 - 3).collect();
        let b = t.bracket(&v, &w);
        let sq = |xs: &[i64]| xs.iter().map(|x| x * x).sum::<i64>();
        assert!(sq(&b) <= sq(&v) * sq(&w));
    }

    #[test]
    fn bracket_pairs_with_generator_action() {
        // (z_a, [v, w]) == (J_{z_a} v, w) for every basis choice of z, v, w
        for k in 1..=8 {
            let r = rep(k);
            let t = structure_constants(&r);
            for a in 0..t.m() {
                for p in 0..t.n() {
                    for q in 0..t.n() {
                        let mut v = vec![0i64; t.n()];
                        let mut w = vec![0i64; t.n()];
                        v[p] = 1;
                        w[q] = 1;
                        let (gq, s) = r.gens()[a].image(p);
                        let pairing = if gq == q { s as i64 } else { 0 };
                        assert_eq!(t.bracket(&v, &w)[a], pairing, "k={k} ({a},{p},{q})");
                    }
                }
            }
        }
    }

    #[test]
    fn htype_check_passes_for_all_constructed_modules() {
        for k in 1..=12 {
            assert!(verify_htype(&rep(k)).passed(), "k={k}");
        }
    }

    #[test]
    fn corrupted_tensor_is_rejected() {
        let t = structure_constants(&rep(3));
        let mut triples: Vec<_> = t.triples().collect();
        triples[0].3 = -triples[0].3;
        assert!(StructTensor::from_triples(t.m(), t.n(), triples).is_err());
    }

    #[test]
    fn plus_minus_algebras_share_structure_constants() {
        assert!(check_plus_minus_iso(3).unwrap());
        assert!(check_plus_minus_iso(7).unwrap());
        assert!(matches!(check_plus_minus_iso(4), Err(Error::WrongResidue(4))));
    }
}
