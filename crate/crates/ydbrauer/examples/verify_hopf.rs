//! Verify the Hopf axioms for the bundled standard algebras, then break a
//! single structure constant of the four-dimensional algebra and watch the
//! verifier name the failing axiom.

use std::sync::Arc;

use ydbrauer::hopf::{build_standard, verify_hopf, HopfAlgebra, StandardAlgebra};
use ydbrauer::Result;

fn check(name: &str, h: &Arc<HopfAlgebra>) {
    let report = verify_hopf(h);
    let status = if report.passed() { "ok" } else { "FAILED" };
    println!("{name} (dim {}): {status}", h.dim());
    for c in &report.checks {
        println!("  {:<24} {}", c.name, if c.ok { "ok" } else { "violated" });
    }
}

fn main() -> Result<()> {
    let specs = [
        ("group algebra kC2 over GF(5)", StandardAlgebra::GroupAlgebra {
            field: ydbrauer::linalg::FieldSpec::prime(5)?,
            table: ydbrauer::hopf::cyclic_group_table(2),
            labels: Some(ydbrauer::hopf::cyclic_labels(2)),
        }),
        ("Sweedler algebra over GF(5)", StandardAlgebra::Sweedler { p: 5 }),
        ("Taft algebra T_3(2) over GF(7)", StandardAlgebra::Taft { n: 3, q: 2, p: 7 }),
    ];
    for (name, spec) in &specs {
        check(name, &build_standard(spec)?);
    }

    // Bump mult[x (x) g -> x] by one; several axioms notice at once.
    let h = build_standard(&StandardAlgebra::Sweedler { p: 5 })?;
    let mut mult = h.mult().matrix().clone();
    let f = h.field();
    let (i, j, k) = (2, 1, 2);
    let bumped = f.add(&mult.get(k, i * 4 + j), &f.one())?;
    mult.set(k, i * 4 + j, bumped)?;
    let broken = HopfAlgebra::new(
        f,
        mult,
        h.unit().matrix().clone(),
        h.comult().matrix().clone(),
        h.counit().matrix().clone(),
        h.antipode().matrix().clone(),
        Some(h.antipode_inv().matrix().clone()),
        h.basis_labels().to_vec(),
    )?;
    println!();
    check("Sweedler with one constant bumped", &broken);
    let report = verify_hopf(&broken);
    if let Some(failure) = report.first_failure() {
        let at = failure
            .witness
            .as_ref()
            .map(|w| broken.witness_string(w))
            .unwrap_or_default();
        println!("first failure: {} at {at}", failure.name);
    }
    Ok(())
}
