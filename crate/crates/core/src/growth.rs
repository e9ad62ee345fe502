//! Word-metric ball counts of the lattice by breadth-first search over the
//! Cayley graph, plus the log-log slope fit used to compare the observed
//! growth against the polynomial degree dim V + 2 dim U.

use std::collections::HashSet;

use crate::lattice::{lattice_mul, LatticeElement};
use crate::lie::StructTensor;

/// Which symmetric generating set to walk.
///
/// `Exact` is {±v_p} with {±e_a/2} and generates the whole lattice.
/// `IntegralBasis` is the basis itself, {±v_p} with {±e_a}; the subgroup
/// it generates has finite index, so the growth exponent is the same, but
/// the half-integer center translations are not all reachable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenSet {
    Exact,
    IntegralBasis,
}

/// The symmetric generating set for an m + n dimensional lattice.
pub fn generating_set(m: usize, n: usize, mode: GenSet) -> Vec<LatticeElement> {
    let mut gens = Vec::with_capacity(2 * (m + n));
    for p in 0..n {
        for s in [1i64, -1] {
            let mut e = LatticeElement::identity(m, n);
            e.v[p] = s;
            gens.push(e);
        }
    }
    let center_step = match mode {
        GenSet::Exact => 1,         // e_a / 2, in doubled coordinates
        GenSet::IntegralBasis => 2, // e_a
    };
    for a in 0..m {
        for s in [center_step, -center_step] {
            let mut e = LatticeElement::identity(m, n);
            e.u2[a] = s;
            gens.push(e);
        }
    }
    gens
}

/// Cumulative ball counts g(0..=R), with a guard on the number of visited
/// elements. `truncated` marks a run that hit the guard; `counts` then
/// stops at the last fully expanded radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthSeries {
    pub counts: Vec<u64>,
    pub truncated: bool,
}

impl GrowthSeries {
    /// Largest radius with a complete count.
    pub fn max_radius(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("R,g\n");
        for (r, g) in self.counts.iter().enumerate() {
            out.push_str(&format!("{r},{g}\n"));
        }
        out
    }
}

fn encode(x: &LatticeElement) -> Vec<i16> {
    x.u2.iter()
        .chain(&x.v)
        .map(|&c| i16::try_from(c).expect("coordinate exceeds BFS encoding range"))
        .collect()
}

fn bfs(
    t: &StructTensor,
    gens: &[LatticeElement],
    radius: usize,
    max_elements: usize,
) -> (HashSet<Vec<i16>>, GrowthSeries) {
    let identity = LatticeElement::identity(t.m(), t.n());
    let mut visited: HashSet<Vec<i16>> = HashSet::new();
    visited.insert(encode(&identity));
    let mut frontier = vec![identity];
    let mut counts = vec![1u64];

    for _ in 1..=radius {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = lattice_mul(x, g, t);
                if visited.insert(encode(&y)) {
                    next.push(y);
                }
            }
            if visited.len() > max_elements {
                return (
                    visited,
                    GrowthSeries {
                        counts,
                        truncated: true,
                    },
                );
            }
        }
        counts.push(visited.len() as u64);
        frontier = next;
    }
    (
        visited,
        GrowthSeries {
            counts,
            truncated: false,
        },
    )
}

/// Breadth-first search from the identity over right multiplication by the
/// generating set. Deterministic: counts depend only on the set of visited
/// elements per layer.
pub fn ball_count(
    t: &StructTensor,
    gens: &[LatticeElement],
    radius: usize,
    max_elements: usize,
) -> GrowthSeries {
    bfs(t, gens, radius, max_elements).1
}

/// For each center index a, whether the half translation e_a / 2 lies in
/// the ball of the given radius. With the exact set these are generators;
/// with the integral-basis set they stay unreachable, which exhibits the
/// generated subgroup as proper.
pub fn half_center_reachable(
    t: &StructTensor,
    gens: &[LatticeElement],
    radius: usize,
    max_elements: usize,
) -> Vec<bool> {
    let (visited, _) = bfs(t, gens, radius, max_elements);
    (0..t.m())
        .map(|a| {
            let mut half = LatticeElement::identity(t.m(), t.n());
            half.u2[a] = 1;
            visited.contains(&encode(&half))
        })
        .collect()
}

/// Least-squares slope of ln g(R) against ln R over radii r_min..=r_max.
pub fn log_log_slope(series: &GrowthSeries, r_min: usize, r_max: usize) -> f64 {
    assert!(r_min >= 1 && r_min < r_max, "need at least two radii from 1 up");
    assert!(r_max <= series.max_radius(), "slope window exceeds computed radii");
    let points: Vec<(f64, f64)> = (r_min..=r_max)
        .map(|r| ((r as f64).ln(), (series.counts[r] as f64).ln()))
        .collect();
    let len = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::structure_constants;
    use crate::ungraded::{extract_irreducible, Variant};

    fn tensor(k: usize) -> StructTensor {
        structure_constants(&extract_irreducible(k, Variant::Default).unwrap())
    }

    #[test]
    fn ball_of_radius_zero_is_the_identity() {
        let t = tensor(1);
        let gens = generating_set(1, 2, GenSet::Exact);
        let series = ball_count(&t, &gens, 0, 1 << 20);
        assert_eq!(series.counts, vec![1]);
        assert!(!series.truncated);
    }

    #[test]
    fn heisenberg_first_ball_has_seven_elements() {
        // identity plus six distinct generators
        let t = tensor(1);
        let gens = generating_set(1, 2, GenSet::Exact);
        assert_eq!(gens.len(), 6);
        let series = ball_count(&t, &gens, 1, 1 << 20);
        assert_eq!(series.counts, vec![1, 7]);
    }

    #[test]
    fn counts_are_nondecreasing_and_branch_bounded() {
        let t = tensor(1);
        let gens = generating_set(1, 2, GenSet::Exact);
        let series = ball_count(&t, &gens, 8, 1 << 20);
        for r in 1..series.counts.len() {
            assert!(series.counts[r] >= series.counts[r - 1]);
            assert!(series.counts[r] <= series.counts[r - 1] * (gens.len() as u64 + 1));
        }
    }

    #[test]
    fn guard_truncates_and_flags() {
        let t = tensor(1);
        let gens = generating_set(1, 2, GenSet::Exact);
        let series = ball_count(&t, &gens, 10, 50);
        assert!(series.truncated);
        assert!(series.max_radius() < 10);
    }

    #[test]
    fn integral_basis_set_reaches_fewer_center_points() {
        let t = tensor(1);
        let exact = ball_count(&t, &generating_set(1, 2, GenSet::Exact), 4, 1 << 20);
        let basis = ball_count(&t, &generating_set(1, 2, GenSet::IntegralBasis), 4, 1 << 20);
        assert!(basis.counts[4] < exact.counts[4]);
    }

    #[test]
    fn half_center_translation_reachability_by_set() {
        let t = tensor(1);
        let exact = generating_set(1, 2, GenSet::Exact);
        let basis = generating_set(1, 2, GenSet::IntegralBasis);
        assert_eq!(half_center_reachable(&t, &exact, 1, 1 << 20), vec![true]);
        assert_eq!(half_center_reachable(&t, &basis, 8, 1 << 20), vec![false]);
    }

    #[test]
    fn slope_of_exact_power_law_is_recovered() {
        let series = GrowthSeries {
            counts: (0..16).map(|r| (r as u64).pow(4).max(1)).collect(),
            truncated: false,
        };
        let slope = log_log_slope(&series, 8, 15);
        assert!((slope - 4.0).abs() < 1e-9, "slope {slope}");
    }

    #[test]
    fn csv_has_header_and_one_row_per_radius() {
        let series = GrowthSeries {
            counts: vec![1, 7, 25],
            truncated: false,
        };
        assert_eq!(series.to_csv(), "R,g\n0,1\n1,7\n2,25\n");
    }
}
