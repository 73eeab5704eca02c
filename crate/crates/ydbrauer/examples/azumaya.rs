//! An algebra A is H-Azumaya when the canonical maps F: A # Abar -> End(A)
//! and G: Abar # A -> End(A)^op are bijective. End algebras of modules are
//! always H-Azumaya; the split algebra k x k never is. Triviality in the
//! Brauer sense follows for End algebras of identity-pair modules.

use std::sync::Arc;

use ydbrauer::algebra::diagonal_algebra;
use ydbrauer::endo::{
    azumaya_maps, azumaya_ranks, brauer_trivial_forward, end_algebra, is_h_azumaya, p5_iso,
};
use ydbrauer::hopf::{
    sweedler, sweedler_phi, AutPair, Character, GroupLikeElement, HopfAutomorphism,
};
use ydbrauer::linalg::MatrixExact;
use ydbrauer::yd::{build_fvg, build_h_alpha_beta, trivial_module};
use ydbrauer::Result;

fn main() -> Result<()> {
    let h = sweedler(5)?;
    let f = h.field();
    let s2 = {
        let map = h.antipode().compose(h.antipode())?;
        HopfAutomorphism::new(Arc::clone(&h), map.into_matrix())?
    };
    let id = HopfAutomorphism::identity(Arc::clone(&h));
    let s2_pair = AutPair::new(s2, id.clone())?;

    let eps = Character::counit(Arc::clone(&h));
    let g_vec = MatrixExact::from_fn(f, h.dim(), 1, |i, _| {
        if i == 1 { f.one() } else { f.zero() }
    })?;
    let g = GroupLikeElement::new(Arc::clone(&h), g_vec)?;

    let modules = [
        ("k_triv", trivial_module(&h, 1)),
        ("_eps k^g", build_fvg(&s2_pair, &eps, &g, 1)?),
        ("H_{id}", build_h_alpha_beta(&AutPair::identity(Arc::clone(&h)))?),
        ("H_{S^2, id}", build_h_alpha_beta(&s2_pair)?),
    ];
    for (name, m) in &modules {
        let end = end_algebra(m)?;
        let v = azumaya_ranks(&end)?;
        let full = v.dim * v.dim;
        println!(
            "End({name}): F rank {}/{full}, G rank {}/{full}, H-Azumaya: {}",
            v.f_rank,
            v.g_rank,
            if v.is_azumaya() { "yes" } else { "no" }
        );
    }

    // Full verification on one case: both canonical maps with all the
    // algebra morphism flags, not just ranks.
    let end = end_algebra(&modules[3].1)?;
    let maps = azumaya_maps(&end)?;
    println!();
    println!("F is an algebra isomorphism: {}", maps.f_map.is_isomorphism());
    println!("G is an algebra isomorphism: {}", maps.g_map.is_isomorphism());

    let kxk = diagonal_algebra(&h, 2)?;
    println!("k x k is H-Azumaya: {}", is_h_azumaya(&kxk)?);

    // The braiding conjugates the two smash decompositions of the End
    // algebra of a product into each other.
    let m = build_h_alpha_beta(&AutPair::new(sweedler_phi(&h, 2)?, sweedler_phi(&h, 3)?)?)?;
    let n = build_h_alpha_beta(&AutPair::new(sweedler_phi(&h, 3)?, sweedler_phi(&h, 4)?)?)?;
    let conj = p5_iso(&m, &n)?;
    println!();
    println!("p5 conjugation is an isomorphism: {}", conj.is_isomorphism());

    // Brauer triviality, forward direction: End(_fk^g (x) N) collapses to
    // k # End(N) and then to End(N) for any identity-pair N.
    for (name, n) in [
        ("k_triv", trivial_module(&h, 1)),
        ("H_{id}", build_h_alpha_beta(&AutPair::identity(Arc::clone(&h)))?),
    ] {
        let ok = brauer_trivial_forward(&eps, &g, &s2_pair, &n)?;
        println!("brauer_trivial_forward with N = {name}: {ok}");
    }
    Ok(())
}
