//! The simply connected group N = U + V with product X.Y = X + Y + [X,Y]/2,
//! its cocompact lattice L = (1/2)U_Z + V_Z, fundamental-domain reduction,
//! and the commutator witnesses that identify [L, L] with U_Z.

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::lie::StructTensor;

/// A point of N with exact dyadic coordinates: u in the center, v in the
/// bracket-generating part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    pub u: Vec<Dyadic>,
    pub v: Vec<Dyadic>,
}

impl GroupElement {
    pub fn identity(m: usize, n: usize) -> Self {
        GroupElement {
            u: vec![Dyadic::ZERO; m],
            v: vec![Dyadic::ZERO; n],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.u.iter().all(Dyadic::is_zero) && self.v.iter().all(Dyadic::is_zero)
    }

    /// True when the point lies in the lattice: u in (1/2)Z, v in Z.
    pub fn in_lattice(&self) -> bool {
        self.u.iter().all(Dyadic::is_half_integer) && self.v.iter().all(Dyadic::is_integer)
    }
}

/// A lattice point, stored with doubled center coordinates so everything is
/// an integer: u = u2 / 2, v as is.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeElement {
    pub u2: Vec<i64>,
    pub v: Vec<i64>,
}

impl LatticeElement {
    pub fn identity(m: usize, n: usize) -> Self {
        LatticeElement {
            u2: vec![0; m],
            v: vec![0; n],
        }
    }

    pub fn inverse(&self) -> Self {
        LatticeElement {
            u2: self.u2.iter().map(|c| -c).collect(),
            v: self.v.iter().map(|c| -c).collect(),
        }
    }

    pub fn to_group(&self) -> GroupElement {
        GroupElement {
            u: self.u2.iter().map(|&c| Dyadic::new(c, 1)).collect(),
            v: self.v.iter().map(|&c| Dyadic::from_int(c)).collect(),
        }
    }
}

/// X.Y = X + Y + [X, Y]/2 in exact arithmetic. Only the v-parts bracket;
/// the center translates.
pub fn group_mul(x: &GroupElement, y: &GroupElement, t: &StructTensor) -> GroupElement {
    assert_eq!(x.u.len(), t.m(), "group element dimension mismatch");
    assert_eq!(y.u.len(), t.m(), "group element dimension mismatch");
    let half_bracket = t.bracket_dyadic(&x.v, &y.v);
    let u = x
        .u
        .iter()
        .zip(&y.u)
        .zip(&half_bracket)
        .map(|((&a, &b), &c)| a + b + c.halved())
        .collect();
    let v = x.v.iter().zip(&y.v).map(|(&a, &b)| a + b).collect();
    GroupElement { u, v }
}

pub fn group_inverse(x: &GroupElement) -> GroupElement {
    GroupElement {
        u: x.u.iter().map(|&c| -c).collect(),
        v: x.v.iter().map(|&c| -c).collect(),
    }
}

/// X Y X^-1 Y^-1; equals ([X.v, Y.v], 0) because the group is two-step.
pub fn group_commutator(x: &GroupElement, y: &GroupElement, t: &StructTensor) -> GroupElement {
    let xy = group_mul(x, y, t);
    let xyx = group_mul(&xy, &group_inverse(x), t);
    group_mul(&xyx, &group_inverse(y), t)
}

/// Lattice product without leaving integers: the doubled center coordinate
/// absorbs the 1/2 in front of the bracket.
pub fn lattice_mul(x: &LatticeElement, y: &LatticeElement, t: &StructTensor) -> LatticeElement {
    let b = t.bracket(&x.v, &y.v);
    let u2 = x
        .u2
        .iter()
        .zip(&y.u2)
        .zip(&b)
        .map(|((&a, &c), &d)| a + c + d)
        .collect();
    let v = x.v.iter().zip(&y.v).map(|(&a, &b)| a + b).collect();
    LatticeElement { u2, v }
}

/// For each center index a, a pair (p, q) of basis indices and a sign with
/// [v_p, v_q] = sign * e_a and no other nonzero component.
///
/// Existence: q is the image of p under generator a, and the bracket norm
/// bound |[v, w]| <= |v||w| forces all other components to vanish. The scan
/// re-verifies that instead of assuming it.
pub fn commutator_basis(t: &StructTensor) -> Result<Vec<(usize, usize, i8)>> {
    let check = |a: usize, p: usize, q: usize| -> Option<(usize, usize, i8)> {
        let mut vp = vec![0i64; t.n()];
        let mut vq = vec![0i64; t.n()];
        vp[p] = 1;
        vq[q] = 1;
        let b = t.bracket(&vp, &vq);
        let clean = b[a].abs() == 1 && b.iter().enumerate().all(|(i, &c)| i == a || c == 0);
        clean.then(|| (p, q, b[a] as i8))
    };
    let mut witnesses = Vec::with_capacity(t.m());
    for a in 0..t.m() {
        // q must be the image of p under generator a; scan p and re-verify
        // rather than trusting the argument
        let guided = (0..t.n()).find_map(|p| check(a, p, t.image(a, p).0));
        let found = guided.or_else(|| {
            (0..t.n())
                .flat_map(|p| (0..t.n()).map(move |q| (p, q)))
                .filter(|(p, q)| p != q)
                .find_map(|(p, q)| check(a, p, q))
        });
        match found {
            Some(w) => witnesses.push(w),
            None => return Err(Error::NoCommutatorWitness { a }),
        }
    }
    Ok(witnesses)
}

/// Translates X on the right by a lattice element l so that r = X . l has
/// every v-coordinate in [0, 1) and every u-coordinate in [0, 1/2).
///
/// First w = -floor(v) brings the v-part into the unit cube, then a central
/// half-integer translation reduces the u-part.
pub fn reduce_to_fundamental(
    x: &GroupElement,
    t: &StructTensor,
) -> (LatticeElement, GroupElement) {
    let w: Vec<i64> = x.v.iter().map(|c| -c.floor()).collect();
    let w_dyadic: Vec<Dyadic> = w.iter().map(|&c| Dyadic::from_int(c)).collect();
    let half_bracket: Vec<Dyadic> = t
        .bracket_dyadic(&x.v, &w_dyadic)
        .into_iter()
        .map(|c| c.halved())
        .collect();
    // center coordinate after the v-translation, before the central shift
    let c: Vec<Dyadic> = x
        .u
        .iter()
        .zip(&half_bracket)
        .map(|(&u, &b)| u + b)
        .collect();
    let u2: Vec<i64> = c.iter().map(|ci| -ci.doubled().floor()).collect();
    let l = LatticeElement { u2, v: w };
    let r = group_mul(x, &l.to_group(), t);
    debug_assert!(r
        .v
        .iter()
        .all(|c| *c >= Dyadic::ZERO && *c < Dyadic::ONE));
    debug_assert!(r
        .u
        .iter()
        .all(|c| *c >= Dyadic::ZERO && *c < Dyadic::HALF));
    (l, r)
}

/// Polynomial growth degree of the lattice: dim V + 2 dim U.
pub fn growth_degree(m: usize, n: usize) -> usize {
    n + 2 * m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::structure_constants;
    use crate::ungraded::{extract_irreducible, Variant};

    fn tensor(k: usize) -> StructTensor {
        structure_constants(&extract_irreducible(k, Variant::Default).unwrap())
    }

    // basis translation v_p of the k = 1 Heisenberg group
    fn basis_v(p: usize) -> GroupElement {
        let mut v = vec![Dyadic::ZERO; 2];
        v[p] = Dyadic::ONE;
        GroupElement {
            u: vec![Dyadic::ZERO],
            v,
        }
    }

    #[test]
    fn inverse_is_negation() {
        let t = tensor(1);
        let x = GroupElement {
            u: vec![Dyadic::new(3, 1)],
            v: vec![Dyadic::new(-1, 2), Dyadic::from_int(2)],
        };
        let prod = group_mul(&x, &group_inverse(&x), &t);
        assert!(prod.is_identity());
    }

    #[test]
    fn heisenberg_products_pick_up_half_brackets() {
        let t = tensor(1);
        let v1 = basis_v(0);
        let v2 = basis_v(1);
        let p12 = group_mul(&v1, &v2, &t);
        assert_eq!(p12.u, vec![Dyadic::HALF]);
        assert_eq!(p12.v, vec![Dyadic::ONE, Dyadic::ONE]);
        let p21 = group_mul(&v2, &v1, &t);
        assert_eq!(p21.u, vec![-Dyadic::HALF]);
        assert_eq!(p21.v, vec![Dyadic::ONE, Dyadic::ONE]);
    }

    #[test]
    fn central_elements_translate() {
        let t = tensor(1);
        let a = GroupElement {
            u: vec![Dyadic::new(1, 1)],
            v: vec![Dyadic::ZERO; 2],
        };
        let b = GroupElement {
            u: vec![Dyadic::new(5, 2)],
            v: vec![Dyadic::ZERO; 2],
        };
        let p = group_mul(&a, &b, &t);
        assert_eq!(p.u, vec![Dyadic::new(7, 2)]);
        assert!(p.v.iter().all(Dyadic::is_zero));
        let c = group_commutator(&a, &basis_v(0), &t);
        assert!(c.is_identity());
    }

    #[test]
    fn commutator_equals_bracket() {
        let t = tensor(2);
        let x = GroupElement {
            u: vec![Dyadic::new(1, 1), Dyadic::from_int(-2)],
            v: vec![3, -1, 0, 2].into_iter().map(Dyadic::from_int).collect(),
        };
        let y = GroupElement {
            u: vec![Dyadic::ZERO, Dyadic::new(3, 1)],
            v: vec![-1, 4, 1, -2].into_iter().map(Dyadic::from_int).collect(),
        };
        let c = group_commutator(&x, &y, &t);
        let vx: Vec<i64> = x.v.iter().map(|d| d.to_int()).collect();
        let vy: Vec<i64> = y.v.iter().map(|d| d.to_int()).collect();
        let b = t.bracket(&vx, &vy);
        assert!(c.v.iter().all(Dyadic::is_zero));
        let expect: Vec<Dyadic> = b.into_iter().map(Dyadic::from_int).collect();
        assert_eq!(c.u, expect);
    }

    #[test]
    fn commutator_of_element_with_itself_vanishes() {
        let t = tensor(1);
        let x = basis_v(0);
        assert!(group_commutator(&x, &x, &t).is_identity());
    }

    #[test]
    fn lattice_mul_agrees_with_group_mul() {
        let t = tensor(2);
        let x = LatticeElement {
            u2: vec![3, -1],
            v: vec![1, 0, -2, 5],
        };
        let y = LatticeElement {
            u2: vec![0, 7],
            v: vec![-4, 2, 2, -1],
        };
        let fast = lattice_mul(&x, &y, &t);
        let slow = group_mul(&x.to_group(), &y.to_group(), &t);
        assert_eq!(fast.to_group(), slow);
        assert!(slow.in_lattice());
    }

    #[test]
    fn heisenberg_commutator_witnesses() {
        let t = tensor(1);
        assert_eq!(commutator_basis(&t).unwrap(), vec![(0, 1, 1)]);
    }

    #[test]
    fn commutator_witnesses_exist_up_to_k8() {
        for k in 1..=8 {
            let t = tensor(k);
            let ws = commutator_basis(&t).unwrap();
            assert_eq!(ws.len(), t.m());
            for (a, &(p, q, s)) in ws.iter().enumerate() {
                let mut vp = vec![0i64; t.n()];
                let mut vq = vec![0i64; t.n()];
                vp[p] = 1;
                vq[q] = 1;
                let b = t.bracket(&vp, &vq);
                for (i, &c) in b.iter().enumerate() {
                    assert_eq!(c, if i == a { s as i64 } else { 0 });
                }
            }
        }
    }

    #[test]
    fn reduce_lattice_point_to_identity() {
        let t = tensor(1);
        let x = LatticeElement {
            u2: vec![-7],
            v: vec![3, -2],
        }
        .to_group();
        let (l, r) = reduce_to_fundamental(&x, &t);
        assert!(r.is_identity());
        assert_eq!(group_mul(&x, &l.to_group(), &t), r);
    }

    #[test]
    fn reduce_pure_central_point() {
        let t = tensor(1);
        let x = GroupElement {
            u: vec![Dyadic::new(13, 3)], // 13/8 = 1/2 + 1/2 + 1/2 + 1/8
            v: vec![Dyadic::ZERO; 2],
        };
        let (l, r) = reduce_to_fundamental(&x, &t);
        assert!(l.v.iter().all(|&c| c == 0));
        assert_eq!(r.u, vec![Dyadic::new(1, 3)]);
        assert!(r.v.iter().all(Dyadic::is_zero));
    }

    #[test]
    fn reduce_bounds_hold_on_dyadic_points() {
        let t = tensor(2);
        // a deterministic sweep of dyadic inputs with denominators up to 16
        for seed in 0i64..200 {
            let coord = |i: i64| Dyadic::new((seed * 7 + i * 13) % 33 - 16, (i % 5) as u32);
            let x = GroupElement {
                u: (0..2).map(coord).collect(),
                v: (2..6).map(coord).collect(),
            };
            let (l, r) = reduce_to_fundamental(&x, &t);
            assert_eq!(group_mul(&x, &l.to_group(), &t), r);
            for c in &r.v {
                assert!(*c >= Dyadic::ZERO && *c < Dyadic::ONE, "v bound at {c}");
            }
            for c in &r.u {
                assert!(*c >= Dyadic::ZERO && *c < Dyadic::HALF, "u bound at {c}");
            }
        }
    }

    #[test]
    fn growth_degrees() {
        assert_eq!(growth_degree(1, 2), 4);
        assert_eq!(growth_degree(2, 4), 8);
        assert_eq!(growth_degree(3, 4), 10);
    }
}
