//! The invariant suite behind `htype verify`: every check the construction
//! promises, run per k, with one report line per check. Randomized spot
//! checks use a fixed seed so output is identical across runs.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use htype_core::*;

const SEED: u64 = 0x5eed_0001;
const RANDOM_PAIRS: usize = 500;
const RANDOM_POINTS: usize = 200;

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub k: usize,
    pub variant: String,
    pub check: String,
    pub pass: bool,
    /// Locates the first violation when the check fails.
    pub witness: Option<String>,
}

impl CheckLine {
    fn ok(k: usize, variant: &str, check: &str) -> Self {
        CheckLine {
            k,
            variant: variant.into(),
            check: check.into(),
            pass: true,
            witness: None,
        }
    }

    fn fail(k: usize, variant: &str, check: &str, witness: String) -> Self {
        CheckLine {
            k,
            variant: variant.into(),
            check: check.into(),
            pass: false,
            witness: Some(witness),
        }
    }

    pub fn render(&self) -> String {
        let status = if self.pass { "ok" } else { "FAIL" };
        let mut line = format!("k={:<2} {:<8} {:<28} {}", self.k, self.variant, self.check, status);
        if let Some(w) = &self.witness {
            line.push_str(&format!("  ({w})"));
        }
        line
    }
}

fn report_line(k: usize, variant: &str, check: &str, report: &CheckReport) -> CheckLine {
    if report.passed() {
        CheckLine::ok(k, variant, check)
    } else {
        CheckLine::fail(k, variant, check, report.to_string())
    }
}

fn bool_line(k: usize, variant: &str, check: &str, pass: bool, witness: &str) -> CheckLine {
    if pass {
        CheckLine::ok(k, variant, check)
    } else {
        CheckLine::fail(k, variant, check, witness.to_string())
    }
}

fn random_lattice(rng: &mut StdRng, m: usize, n: usize) -> LatticeElement {
    LatticeElement {
        u2: (0..m).map(|_| rng.gen_range(-8..=8)).collect(),
        v: (0..n).map(|_| rng.gen_range(-8..=8)).collect(),
    }
}

fn random_dyadic_point(rng: &mut StdRng, m: usize, n: usize) -> GroupElement {
    let mut coord = |_| Dyadic::new(rng.gen_range(-64..=64), rng.gen_range(0..=4));
    GroupElement {
        u: (0..m).map(&mut coord).collect(),
        v: (0..n).map(&mut coord).collect(),
    }
}

fn lattice_checks(k: usize, tensor: &StructTensor, out: &mut Vec<CheckLine>) {
    let mut rng = StdRng::seed_from_u64(SEED ^ k as u64);
    let (m, n) = (tensor.m(), tensor.n());

    let mut closure_witness = None;
    let mut commutator_witness = None;
    for _ in 0..RANDOM_PAIRS {
        let x = random_lattice(&mut rng, m, n);
        let y = random_lattice(&mut rng, m, n);
        let prod = group_mul(&x.to_group(), &y.to_group(), tensor);
        if !prod.in_lattice() || !group_inverse(&prod).in_lattice() {
            closure_witness = Some(format!("product of {:?} and {:?} leaves the lattice", x, y));
            break;
        }
        let c = group_commutator(&x.to_group(), &y.to_group(), tensor);
        let expect: Vec<Dyadic> = tensor
            .bracket(&x.v, &y.v)
            .into_iter()
            .map(Dyadic::from_int)
            .collect();
        if c.u != expect || !c.v.iter().all(Dyadic::is_zero) {
            commutator_witness = Some(format!("commutator of {:?} and {:?}", x, y));
            break;
        }
    }
    out.push(bool_line(
        k,
        "default",
        "lattice/closure",
        closure_witness.is_none(),
        closure_witness.as_deref().unwrap_or(""),
    ));
    out.push(bool_line(
        k,
        "default",
        "lattice/commutator-bracket",
        commutator_witness.is_none(),
        commutator_witness.as_deref().unwrap_or(""),
    ));

    match commutator_basis(tensor) {
        Ok(_) => out.push(CheckLine::ok(k, "default", "lattice/commutator-basis")),
        Err(e) => out.push(CheckLine::fail(k, "default", "lattice/commutator-basis", e.to_string())),
    }

    let mut reduce_witness = None;
    for _ in 0..RANDOM_POINTS {
        let x = random_dyadic_point(&mut rng, m, n);
        let (l, r) = reduce_to_fundamental(&x, tensor);
        let v_ok = r.v.iter().all(|c| *c >= Dyadic::ZERO && *c < Dyadic::ONE);
        let u_ok = r.u.iter().all(|c| *c >= Dyadic::ZERO && *c < Dyadic::HALF);
        let consistent = group_mul(&x, &l.to_group(), tensor) == r;
        if !(v_ok && u_ok && consistent) {
            reduce_witness = Some(format!("reduction of {x:?}"));
            break;
        }
    }
    out.push(bool_line(
        k,
        "default",
        "lattice/reduce-bounds",
        reduce_witness.is_none(),
        reduce_witness.as_deref().unwrap_or(""),
    ));
}

fn omega_checks(k: usize, w: &GradedRep, out: &mut Vec<CheckLine>) {
    let omega = match omega_action(w.gens()) {
        Ok(o) => o,
        Err(e) => {
            out.push(CheckLine::fail(k, "graded", "ungraded/omega", e.to_string()));
            return;
        }
    };
    out.push(bool_line(
        k,
        "graded",
        "ungraded/omega-square",
        omega.compose(&omega).is_identity(),
        "omega^2 is not the identity",
    ));
    out.push(bool_line(
        k,
        "graded",
        "ungraded/omega-symmetric",
        omega.transpose() == omega,
        "omega is not symmetric",
    ));
    let central = w.gens().iter().all(|g| omega.compose(g) == g.compose(&omega));
    out.push(bool_line(
        k,
        "graded",
        "ungraded/omega-central",
        central,
        "omega does not commute with a generator",
    ));

    match split_by_omega(w) {
        Ok((plus, minus)) => {
            let id = SignedPerm::identity(plus.dim());
            let eig = omega_action(plus.gens()).map(|o| o == id).unwrap_or(false)
                && omega_action(minus.gens()).map(|o| o == id.negated()).unwrap_or(false);
            out.push(bool_line(
                k,
                "plus/minus",
                "ungraded/omega-eigenvalue",
                eig,
                "omega is not +-identity on the split halves",
            ));
            let negated = plus
                .gens()
                .iter()
                .zip(minus.gens())
                .all(|(p, m)| &p.negated() == m);
            out.push(bool_line(
                k,
                "plus/minus",
                "ungraded/minus-negation",
                negated,
                "minus actions are not the negated plus actions",
            ));
        }
        Err(e) => out.push(CheckLine::fail(k, "plus/minus", "ungraded/split", e.to_string())),
    }

    match check_plus_minus_iso(k) {
        Ok(iso) => out.push(bool_line(
            k,
            "plus/minus",
            "lie/plus-minus-iso",
            iso,
            "structure constants differ after recentering",
        )),
        Err(e) => out.push(CheckLine::fail(k, "plus/minus", "lie/plus-minus-iso", e.to_string())),
    }
}

/// Runs the full suite for each k in the inclusive range.
pub fn run_range(k_lo: usize, k_hi: usize, cap: usize) -> Vec<CheckLine> {
    let mut out = Vec::new();
    for k in k_lo..=k_hi {
        let w = match build_graded_capped(k, cap) {
            Ok(w) => w,
            Err(e) => {
                out.push(CheckLine::fail(k, "graded", "graded/build", e.to_string()));
                continue;
            }
        };
        out.push(bool_line(
            k,
            "graded",
            "graded/dims",
            w.dim() == expected_graded_dim(k),
            &format!("dim {} expected {}", w.dim(), expected_graded_dim(k)),
        ));
        out.push(report_line(k, "graded", "graded/invariants", &w.validate()));

        let variants: &[Variant] = if k % 4 == 3 {
            &[Variant::Plus, Variant::Minus]
        } else {
            &[Variant::Default]
        };
        let mut default_tensor = None;
        for &variant in variants {
            let label = variant.to_string();
            match extract_irreducible_capped(k, variant, cap) {
                Ok(rep) => {
                    out.push(report_line(k, &label, "ungraded/clifford", &verify_htype(&rep)));
                    out.push(bool_line(
                        k,
                        &label,
                        "ungraded/dims",
                        rep.dim() == expected_ungraded_dim(k),
                        &format!("dim {} expected {}", rep.dim(), expected_ungraded_dim(k)),
                    ));
                    let tensor = structure_constants(&rep);
                    out.push(report_line(k, &label, "lie/tensor", &tensor.validate()));
                    if default_tensor.is_none() {
                        default_tensor = Some(tensor);
                    }
                }
                Err(e) => out.push(CheckLine::fail(k, &label, "ungraded/build", e.to_string())),
            }
        }

        if k % 4 == 3 {
            omega_checks(k, &w, &mut out);
        }
        if let Some(tensor) = &default_tensor {
            lattice_checks(k, tensor, &mut out);
        }
    }
    out
}

/// Verifies a previously exported record: load-time validation plus the
/// relation checks on the rebuilt module.
pub fn run_record(record: &ExportRecord) -> Vec<CheckLine> {
    let k = record.k;
    let label = record.variant.to_string();
    match record.to_rep() {
        Ok((rep, tensor)) => {
            let mut out = vec![
                report_line(k, &label, "ungraded/clifford", &verify_htype(&rep)),
                report_line(k, &label, "lie/tensor", &tensor.validate()),
                bool_line(
                    k,
                    &label,
                    "ungraded/dims",
                    rep.dim() == expected_ungraded_dim(k),
                    &format!("dim {} expected {}", rep.dim(), expected_ungraded_dim(k)),
                ),
            ];
            lattice_checks(k, &tensor, &mut out);
            out
        }
        Err(e) => vec![CheckLine::fail(k, &label, "export/load", e.to_string())],
    }
}
