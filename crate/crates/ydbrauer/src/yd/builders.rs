//! Stock compatible modules: the regular module for a pair, its variant
//! built from a single automorphism, and the one-sided modules cut out by
//! a character and a group-like element.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::algebra::{check_identities, AxiomCheck, HopfAlgebra};
use crate::hopf::morphism::{AutPair, Character, GroupLikeElement, HopfAutomorphism};
use crate::linalg::{LinearMapExact, MatrixExact, TensorExact};
use crate::yd::module::YDModule;

/// H itself with action h . h' = beta(h_2) h' alpha(S^-1(h_1)) and the
/// coproduct as coaction. Compatible for the declared pair (alpha, beta).
pub fn build_h_alpha_beta(pair: &AutPair) -> Result<YDModule> {
    let h = pair.parent();
    let alpha_sinv = pair.alpha().matrix().compose(h.antipode_inv())?;
    let action = sandwich_action(h, pair.beta().matrix(), &alpha_sinv)?;
    YDModule::new(
        Arc::clone(h),
        action,
        h.comult().matrix().clone(),
        pair.clone(),
    )
}

/// H with action h . h' = beta(h_2) h' S^-1(h_1) and coaction
/// h -> h_1 (x) beta^-1(h_2). Compatible for the pair (beta^-1, id).
pub fn build_h_prime_beta(beta: &HopfAutomorphism) -> Result<YDModule> {
    let h = beta.parent();
    let action = sandwich_action(h, beta.matrix(), h.antipode_inv())?;
    let idh = h.identity_map();
    let coaction = idh
        .tensor_map(beta.inverse_matrix())
        .compose(h.comult())?;
    let pair = AutPair::new(beta.inverse(), HopfAutomorphism::identity(Arc::clone(h)))?;
    YDModule::new(Arc::clone(h), action, coaction.into_matrix(), pair)
}

/// Action matrix for h . h' = left(h_2) h' right(h_1), where `left` and
/// `right` are linear maps on H folded against the coproduct legs.
fn sandwich_action(
    h: &Arc<HopfAlgebra>,
    left: &LinearMapExact,
    right: &LinearMapExact,
) -> Result<MatrixExact> {
    let n = h.dim();
    let triple = h
        .mult_three()
        .compose(&left.tensor_map(&h.identity_map()).tensor_map(right))?;
    // triple[k, (h2, j, h1)]; fold Delta over h1, h2
    let triple_t = TensorExact::from_matrix(triple.matrix(), &[n], &[n, n, n]);
    let delta_t = TensorExact::from_matrix(h.comult().matrix(), &[n, n], &[n]);
    let act = TensorExact::tensordot(&triple_t, &[1, 3], &delta_t, &[1, 0]) // [k, j, h]
        .permute(&[0, 2, 1])
        .into_matrix(1);
    Ok(act)
}

/// Check whether (f, g) places the pair in involution:
/// alpha(h) = g^-1 f(h_1) beta(h_2) f(S(h_3)) g for every h.
pub fn check_pair_in_involution(
    pair: &AutPair,
    f: &Character,
    g: &GroupLikeElement,
) -> Result<AxiomCheck> {
    let h = pair.parent();
    crate::hopf::algebra::ensure_same_parent(h, f.parent(), "involution data")?;
    crate::hopf::algebra::ensure_same_parent(h, g.parent(), "involution data")?;
    let n = h.dim();
    // conj[t, k]: coefficient of b_t in g^-1 b_k g
    let ginv = LinearMapExact::new(g.inverse_vector().into_matrix());
    let conj = h
        .mult_three()
        .compose(&ginv.tensor_map(&h.identity_map()).tensor_map(g.vector()))?;
    let f_s = f.row().compose(h.antipode())?;
    let mid = conj.compose(pair.beta().matrix())?;
    let rhs = f.row().tensor_map(&mid).tensor_map(&f_s).compose(&h.comult2())?;
    Ok(check_identities(
        "pair_in_involution",
        &[(pair.alpha().matrix().matrix(), rhs.matrix(), &[n])],
    ))
}

/// The module with underlying space k^dim, action h . v = f(h) v and
/// coaction v -> v (x) g. Requires (f, g) to put the pair in involution.
pub fn build_fvg(
    pair: &AutPair,
    f: &Character,
    g: &GroupLikeElement,
    dim: usize,
) -> Result<YDModule> {
    let check = check_pair_in_involution(pair, f, g)?;
    if !check.ok {
        let at = check
            .witness
            .as_ref()
            .map(|w| format!(" at {}", pair.parent().witness_string(w)))
            .unwrap_or_default();
        return Err(Error::Involution(format!(
            "(f, g) does not put the pair in involution{at}"
        )));
    }
    let h = pair.parent();
    let idm = MatrixExact::identity(h.field(), dim);
    let action = f.row().matrix().kron(&idm);
    let coaction = idm.kron(g.vector().matrix());
    YDModule::new(Arc::clone(h), action, coaction, pair.clone())
}

/// k^dim with the counit action and unit coaction, compatible for the
/// identity pair. This is `build_fvg` at (eps, 1).
pub fn trivial_module(h: &Arc<HopfAlgebra>, dim: usize) -> YDModule {
    let pair = AutPair::identity(Arc::clone(h));
    build_fvg(
        &pair,
        &Character::counit(Arc::clone(h)),
        &GroupLikeElement::unit(Arc::clone(h)),
        dim,
    )
    .expect("(eps, 1) always puts the identity pair in involution")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::standard::{
        cyclic_group_table, cyclic_labels, cyclic_power_automorphism, group_algebra, sweedler,
        sweedler_phi, taft, taft_phi,
    };
    use crate::linalg::{FieldElement, FieldSpec};
    use crate::yd::module::check_yd;

    #[test]
    fn regular_pair_modules_are_compatible() {
        let h4 = sweedler(5).unwrap();
        for (a, b) in [(1, 1), (2, 3), (4, 2), (3, 3)] {
            let pair = AutPair::new(
                sweedler_phi(&h4, a).unwrap(),
                sweedler_phi(&h4, b).unwrap(),
            )
            .unwrap();
            let m = build_h_alpha_beta(&pair).unwrap();
            assert_eq!(m.dim(), 4);
            let r = check_yd(&m).unwrap();
            assert!(r.passed(), "pair ({a}, {b}): {:?}", r.ab);
        }
    }

    #[test]
    fn regular_pair_module_on_taft3() {
        let h = taft(3, 2, 7).unwrap();
        let pair = AutPair::new(taft_phi(&h, 3, 2).unwrap(), taft_phi(&h, 3, 4).unwrap()).unwrap();
        let m = build_h_alpha_beta(&pair).unwrap();
        let r = check_yd(&m).unwrap();
        assert!(r.passed(), "{:?}", r.ab);
    }

    #[test]
    fn prime_variant_is_compatible_with_declared_pair() {
        let h4 = sweedler(5).unwrap();
        let beta = sweedler_phi(&h4, 2).unwrap();
        let m = build_h_prime_beta(&beta).unwrap();
        assert_eq!(m.pair().alpha(), &beta.inverse());
        assert!(m.pair().beta().is_identity());
        let r = check_yd(&m).unwrap();
        assert!(r.passed(), "{:?}", r.ab);
    }

    #[test]
    fn counit_and_unit_put_equal_pairs_in_involution() {
        let h4 = sweedler(5).unwrap();
        let eps = Character::counit(Arc::clone(&h4));
        let one = GroupLikeElement::unit(Arc::clone(&h4));
        let phi = sweedler_phi(&h4, 3).unwrap();
        let same = AutPair::new(phi.clone(), phi.clone()).unwrap();
        assert!(check_pair_in_involution(&same, &eps, &one).unwrap().ok);
        // alpha != beta is not fixed by (eps, 1)
        let diff = AutPair::new(sweedler_phi(&h4, 2).unwrap(), phi).unwrap();
        let c = check_pair_in_involution(&diff, &eps, &one).unwrap();
        assert!(!c.ok);
        assert_eq!(c.witness, Some(vec![2]));
    }

    #[test]
    fn sign_character_shifts_the_involution_condition() {
        // for the character f with f(g) = -1, f(x) = 0 and g-part 1, the
        // condition picks out alpha = phi_{-1} . beta
        let h4 = sweedler(5).unwrap();
        let f = h4.field();
        let mut row = MatrixExact::zeros(f, 1, 4);
        row.set(0, 0, FieldElement::Fp(1)).unwrap();
        row.set(0, 1, FieldElement::Fp(4)).unwrap();
        let sign = Character::new(Arc::clone(&h4), row).unwrap();
        let one = GroupLikeElement::unit(Arc::clone(&h4));
        let beta = sweedler_phi(&h4, 2).unwrap();
        let good = AutPair::new(sweedler_phi(&h4, 3).unwrap(), beta.clone()).unwrap();
        assert!(check_pair_in_involution(&good, &sign, &one).unwrap().ok);
        let bad = AutPair::new(beta.clone(), beta).unwrap();
        assert!(!check_pair_in_involution(&bad, &sign, &one).unwrap().ok);
    }

    #[test]
    fn fvg_builds_compatible_modules_or_refuses() {
        let h4 = sweedler(5).unwrap();
        let eps = Character::counit(Arc::clone(&h4));
        let one = GroupLikeElement::unit(Arc::clone(&h4));
        let phi = sweedler_phi(&h4, 2).unwrap();
        let same = AutPair::new(phi.clone(), phi.clone()).unwrap();
        let v = build_fvg(&same, &eps, &one, 3).unwrap();
        assert_eq!(v.dim(), 3);
        assert!(check_yd(&v).unwrap().passed());

        let diff = AutPair::new(sweedler_phi(&h4, 3).unwrap(), phi).unwrap();
        assert!(matches!(build_fvg(&diff, &eps, &one, 3), Err(Error::Involution(_))));
    }

    #[test]
    fn trivial_module_over_group_algebra() {
        let f = FieldSpec::rationals();
        let c3 = group_algebra(f, &cyclic_group_table(3), Some(cyclic_labels(3))).unwrap();
        let v = trivial_module(&c3, 2);
        assert!(check_yd(&v).unwrap().passed());
        // nontrivial pair on c3: both automorphisms g -> g^2
        let sq = cyclic_power_automorphism(&c3, 2).unwrap();
        let pair = AutPair::new(sq.clone(), sq).unwrap();
        let m = build_h_alpha_beta(&pair).unwrap();
        assert!(check_yd(&m).unwrap().passed());
    }
}
