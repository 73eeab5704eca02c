//! Scan the twisted regular modules H_{alpha,beta} over the Sweedler
//! algebra for every pair of diagonal automorphisms, then show a module
//! that satisfies the plain module and comodule axioms but fails the
//! compatibility between them.

use std::sync::Arc;

use ydbrauer::hopf::{sweedler, sweedler_phi, AutPair};
use ydbrauer::yd::{build_h_alpha_beta, check_yd, YDModule};
use ydbrauer::Result;

fn main() -> Result<()> {
    let h = sweedler(5)?;
    let phis: Vec<_> = (1..5).map(|l| sweedler_phi(&h, l)).collect::<Result<_>>()?;

    println!("H_{{phi_l, phi_m}} over the Sweedler algebra, GF(5):");
    for (l, alpha) in phis.iter().enumerate() {
        for (m, beta) in phis.iter().enumerate() {
            let pair = AutPair::new(alpha.clone(), beta.clone())?;
            let module = build_h_alpha_beta(&pair)?;
            let report = check_yd(&module)?;
            println!(
                "  (phi_{}, phi_{}): ab {}, abn {}",
                l + 1,
                m + 1,
                verdict(report.ab.ok),
                verdict(report.abn.ok)
            );
        }
    }

    // The regular action paired with the coproduct is a module and a
    // comodule, but the two structures are not compatible.
    let naive = YDModule::new(
        Arc::clone(&h),
        h.mult().matrix().clone(),
        h.comult().matrix().clone(),
        AutPair::identity(Arc::clone(&h)),
    )?;
    println!();
    println!("regular action + coproduct coaction, identity pair:");
    println!("  module axioms:   {}", verdict(naive.module_axioms().passed()));
    println!("  comodule axioms: {}", verdict(naive.comodule_axioms().passed()));
    let report = check_yd(&naive)?;
    println!("  compatibility:   {}", verdict(report.ab.ok));
    if let Some(w) = &report.ab.witness {
        println!("  first violation at {}", h.witness_string(w));
    }
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "violated"
    }
}
