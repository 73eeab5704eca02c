//! A pair (alpha, beta) is "in involution" through a character f and a
//! group-like g when alpha(h) = g^-1 f(h_1) beta(h_2) f(S(h_3)) g holds for
//! every h. On the Sweedler algebra the square of the antipode is not the
//! identity, yet (S^2, id) is in involution through the counit and g.

use std::sync::Arc;

use ydbrauer::hopf::{
    sweedler, AutPair, Character, GroupLikeElement, HopfAutomorphism,
};
use ydbrauer::linalg::MatrixExact;
use ydbrauer::yd::{build_fvg, build_h_alpha_beta, check_pair_in_involution, check_yd};
use ydbrauer::Result;

fn main() -> Result<()> {
    let h = sweedler(5)?;
    let f = h.field();

    let s2_map = h.antipode().compose(h.antipode())?;
    let s2 = HopfAutomorphism::new(Arc::clone(&h), s2_map.into_matrix())?;
    println!("S^2 = id: {}", s2.is_identity());
    for i in 0..h.dim() {
        let col = s2.matrix().matrix().column(i);
        let image: Vec<String> = (0..h.dim())
            .filter(|&j| !col.get(j, 0).is_zero())
            .map(|j| {
                let c = col.get(j, 0);
                if c.is_one() {
                    h.label(j).to_string()
                } else {
                    format!("{c} {}", h.label(j))
                }
            })
            .collect();
        println!("  S^2({}) = {}", h.label(i), image.join(" + "));
    }

    let pair = AutPair::new(s2.clone(), HopfAutomorphism::identity(Arc::clone(&h)))?;
    let regular = build_h_alpha_beta(&pair)?;
    println!("H_{{S^2, id}} satisfies the compatibility: {}", check_yd(&regular)?.passed());

    let eps = Character::counit(Arc::clone(&h));
    let one = GroupLikeElement::unit(Arc::clone(&h));
    let g_vec = MatrixExact::from_fn(f, h.dim(), 1, |i, _| {
        if i == 1 { f.one() } else { f.zero() }
    })?;
    let g = GroupLikeElement::new(Arc::clone(&h), g_vec)?;

    for (label, grouplike) in [("(eps, g)", &g), ("(eps, 1)", &one)] {
        let check = check_pair_in_involution(&pair, &eps, grouplike)?;
        print!("{label} puts (S^2, id) in involution: {}", check.ok);
        match &check.witness {
            Some(w) => println!("  (fails at {})", h.witness_string(w)),
            None => println!(),
        }
    }

    // The witnessing pair yields a one-dimensional module: f twists the
    // action, g the coaction.
    let fkg = build_fvg(&pair, &eps, &g, 1)?;
    println!(
        "_eps k^g: dim {}, compatibility {}",
        fkg.dim(),
        check_yd(&fkg)?.passed()
    );
    Ok(())
}
