//! End(M) on the matrix units E_ij: the twisted conjugation action and the
//! two-sided coaction make it a Yetter-Drinfeld algebra over the identity
//! pair, whatever pair M itself lives over. The maps tau, iota and phi
//! relate End algebras across opposites, duals and tensor products.

use ydbrauer::algebra::{opposite, smash, verify_yd_algebra, OppositeKind};
use ydbrauer::endo::{
    end_algebra, end_op_algebra, evaluation_colinearity_check, iota, phi, tau,
};
use ydbrauer::hopf::{sweedler, sweedler_phi, AutPair};
use ydbrauer::yd::build_h_alpha_beta;
use ydbrauer::Result;

fn main() -> Result<()> {
    let h = sweedler(5)?;
    let pair = AutPair::new(sweedler_phi(&h, 2)?, sweedler_phi(&h, 3)?)?;
    let m = build_h_alpha_beta(&pair)?;

    let end_m = end_algebra(&m)?;
    let end_m_op = end_op_algebra(&m)?;
    println!(
        "End(M): dim {}, pair is identity: {}",
        end_m.dim(),
        end_m.module().pair().is_identity()
    );
    println!("End(M) algebra axioms:     {}", verify_yd_algebra(&end_m)?.passed());
    println!("End^op(M) algebra axioms:  {}", verify_yd_algebra(&end_m_op)?.passed());
    let eval = evaluation_colinearity_check(&m)?;
    println!("evaluation is colinear:    {}", eval.ok);

    // tau: the braided opposite of End(M) is the opposite structure on
    // End(M'), with an inverse given in closed form.
    let t = tau(&m)?;
    println!();
    println!("tau is an isomorphism of algebras: {}", t.is_isomorphism());
    println!("closed-formula inverse agrees:     {}", t.inverse_matches());
    println!("twisted evaluation identity:       {}", t.twisted_evaluation().ok);
    let source_is_braided_op =
        t.morphism().source() == &opposite(&end_algebra(&m)?, OppositeKind::HOpposite)?;
    println!("tau source is the braided opposite: {source_is_braided_op}");

    // iota: transposition identifies End^op(M) with End of the right dual.
    let i = iota(&m)?;
    println!();
    println!("iota is an isomorphism:            {}", i.is_isomorphism());
    println!("both right duals give one End:     {}", i.star_match());

    // phi: End(M) # End(N) = End(M hat(x) N) as algebras in the category.
    let n = build_h_alpha_beta(&AutPair::new(sweedler_phi(&h, 3)?, sweedler_phi(&h, 4)?)?)?;
    let morphism = phi(&m, &n)?;
    println!();
    println!(
        "phi: End(M) # End(N) -> End(M (x) N), {}x{}",
        morphism.map().codomain_dim(),
        morphism.map().domain_dim()
    );
    println!("phi respects the products:         {}", morphism.report().is_algebra_map());
    println!("phi is an isomorphism:             {}", morphism.is_isomorphism());
    let sm = smash(&end_algebra(&m)?, &end_algebra(&n)?)?;
    println!("smash source built independently:  {}", morphism.source() == &sm);
    Ok(())
}
