//! Functors that move modules between pairs: shifting the action by an
//! automorphism, conjugating the pair, and the coaction twist written M'.
//! Also morphism verification between modules.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::algebra::{check_identities, ensure_same_parent, AxiomCheck, AxiomReport};
use crate::hopf::morphism::{AutPair, HopfAutomorphism};
use crate::linalg::{LinearMapExact, MatrixExact};
use crate::yd::module::YDModule;

/// Direction of the action shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftDirection {
    /// New action h . m = old action of beta^-1(h); sends a module for
    /// (a . beta, c . beta) to one for (a, c).
    F,
    /// Inverse of `F`: new action uses beta(h).
    G,
}

/// Precompose the action with an automorphism (or its inverse), adjusting
/// the declared pair accordingly. The coaction is untouched.
pub fn shift(m: &YDModule, beta: &HopfAutomorphism, dir: ShiftDirection) -> Result<YDModule> {
    ensure_same_parent(m.hopf(), beta.parent(), "shift")?;
    let idm = LinearMapExact::identity(m.hopf().field(), m.dim());
    let twist = match dir {
        ShiftDirection::F => beta.inverse_matrix(),
        ShiftDirection::G => beta.matrix(),
    };
    let action = m.action().compose(&twist.tensor_map(&idm))?;
    let adjust = match dir {
        ShiftDirection::F => beta.inverse(),
        ShiftDirection::G => beta.clone(),
    };
    let pair = AutPair::new(
        m.pair().alpha().compose(&adjust)?,
        m.pair().beta().compose(&adjust)?,
    )?;
    YDModule::new(
        Arc::clone(m.hopf()),
        action.into_matrix(),
        m.coaction().matrix().clone(),
        pair,
    )
}

/// The conjugate module for a pair (alpha, beta) applied to a module with
/// pair (gamma, delta): action h . n = (gamma^-1 beta gamma alpha^-1)(h) . n,
/// coaction n_(0) (x) (alpha beta^-1)(n_(1)), declared pair
/// (alpha, beta) * (gamma, delta) * (alpha, beta)^-1.
pub fn conjugate_twist(n: &YDModule, by: &AutPair) -> Result<YDModule> {
    ensure_same_parent(n.hopf(), by.parent(), "conjugate twist")?;
    let gamma = n.pair().alpha();
    let pre = gamma
        .inverse()
        .compose(by.beta())?
        .compose(gamma)?
        .compose(&by.alpha().inverse())?;
    let idm = LinearMapExact::identity(n.hopf().field(), n.dim());
    let action = n.action().compose(&pre.matrix().tensor_map(&idm))?;
    let post = by.alpha().compose(&by.beta().inverse())?;
    let coaction = idm.tensor_map(post.matrix()).compose(n.coaction())?;
    let pair = by.multiply(n.pair())?.multiply(&by.inverse())?;
    YDModule::new(
        Arc::clone(n.hopf()),
        action.into_matrix(),
        coaction.into_matrix(),
        pair,
    )
}

/// The twist M' of a module with pair (alpha, beta): same action, coaction
/// m_(0) (x) (alpha beta^-1)(m_(1)), declared pair (alpha beta^-1 alpha, alpha).
pub fn prime(m: &YDModule) -> Result<YDModule> {
    let alpha = m.pair().alpha();
    let beta = m.pair().beta();
    let post = alpha.compose(&beta.inverse())?;
    let idm = LinearMapExact::identity(m.hopf().field(), m.dim());
    let coaction = idm.tensor_map(post.matrix()).compose(m.coaction())?;
    let new_alpha = alpha.compose(&beta.inverse())?.compose(alpha)?;
    let pair = AutPair::new(new_alpha, alpha.clone())?;
    YDModule::new(
        Arc::clone(m.hopf()),
        m.action().matrix().clone(),
        coaction.into_matrix(),
        pair,
    )
}

/// Outcome of checking a candidate morphism between two modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub pair_match: bool,
    pub linear: AxiomCheck,
    pub colinear: AxiomCheck,
    pub bijective: bool,
}

impl MorphismReport {
    pub fn is_morphism(&self) -> bool {
        self.pair_match && self.linear.ok && self.colinear.ok
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_morphism() && self.bijective
    }

    pub fn as_report(&self) -> AxiomReport {
        AxiomReport {
            checks: vec![
                AxiomCheck {
                    name: "pair_match".into(),
                    ok: self.pair_match,
                    witness: None,
                },
                self.linear.clone(),
                self.colinear.clone(),
                AxiomCheck { name: "bijective".into(), ok: self.bijective, witness: None },
            ],
        }
    }
}

/// Check H-linearity, H-colinearity, matching declared pairs, and exact
/// bijectivity of `map` as a candidate morphism from `source` to `target`.
pub fn verify_morphism(
    source: &YDModule,
    target: &YDModule,
    map: &MatrixExact,
) -> Result<MorphismReport> {
    ensure_same_parent(source.hopf(), target.hopf(), "morphism")?;
    if (map.rows(), map.cols()) != (target.dim(), source.dim()) {
        return Err(Error::Dimension(format!(
            "morphism matrix must be {}x{}, got {}x{}",
            target.dim(),
            source.dim(),
            map.rows(),
            map.cols()
        )));
    }
    if map.field() != source.hopf().field() {
        return Err(Error::FieldMismatch("morphism matrix is over the wrong field".into()));
    }
    let n = source.hopf().dim();
    let f = LinearMapExact::new(map.clone());
    let idh = source.hopf().identity_map();
    let lin_l = f.compose(source.action())?;
    let lin_r = target.action().compose(&idh.tensor_map(&f))?;
    let col_l = target.coaction().compose(&f)?;
    let col_r = f.tensor_map(&idh).compose(source.coaction())?;
    Ok(MorphismReport {
        pair_match: source.pair() == target.pair(),
        linear: check_identities(
            "h_linear",
            &[(lin_l.matrix(), lin_r.matrix(), &[n, source.dim()])],
        ),
        colinear: check_identities("h_colinear", &[(col_l.matrix(), col_r.matrix(), &[source.dim()])]),
        bijective: map.rows() == map.cols() && map.rank() == map.rows(),
    })
}

/// A candidate morphism bundled with its verification outcome.
#[derive(Clone, Debug)]
pub struct YDMorphism {
    source: YDModule,
    target: YDModule,
    map: LinearMapExact,
    report: MorphismReport,
}

impl YDMorphism {
    pub fn new(source: YDModule, target: YDModule, map: MatrixExact) -> Result<Self> {
        let report = verify_morphism(&source, &target, &map)?;
        Ok(YDMorphism { source, target, map: LinearMapExact::new(map), report })
    }

    pub fn source(&self) -> &YDModule {
        &self.source
    }

    pub fn target(&self) -> &YDModule {
        &self.target
    }

    pub fn map(&self) -> &LinearMapExact {
        &self.map
    }

    pub fn report(&self) -> &MorphismReport {
        &self.report
    }

    pub fn is_morphism(&self) -> bool {
        self.report.is_morphism()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.report.is_isomorphism()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::standard::{sweedler, sweedler_phi};
    use crate::yd::builders::{build_h_alpha_beta, build_h_prime_beta};
    use crate::yd::module::check_yd;

    fn h4_pair(a: u64, b: u64) -> (Arc<crate::hopf::HopfAlgebra>, AutPair) {
        let h = sweedler(5).unwrap();
        let pair =
            AutPair::new(sweedler_phi(&h, a).unwrap(), sweedler_phi(&h, b).unwrap()).unwrap();
        (h, pair)
    }

    #[test]
    fn shift_f_then_g_round_trips() {
        let (h, pair) = h4_pair(2, 3);
        let m = build_h_alpha_beta(&pair).unwrap();
        let phi = sweedler_phi(&h, 4).unwrap();
        let shifted = shift(&m, &phi, ShiftDirection::F).unwrap();
        assert!(check_yd(&shifted).unwrap().passed());
        let back = shift(&shifted, &phi, ShiftDirection::G).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn shifting_the_regular_module_by_alpha_normalizes_it() {
        // the regular module for (alpha, beta), shifted by alpha, is the
        // regular module for (id, beta . alpha^-1), matrix for matrix
        let (h, pair) = h4_pair(2, 4);
        let m = build_h_alpha_beta(&pair).unwrap();
        let shifted = shift(&m, pair.alpha(), ShiftDirection::F).unwrap();
        let normalized = AutPair::new(
            HopfAutomorphism::identity(Arc::clone(&h)),
            pair.beta().compose(&pair.alpha().inverse()).unwrap(),
        )
        .unwrap();
        let expect = build_h_alpha_beta(&normalized).unwrap();
        assert_eq!(shifted, expect);
    }

    #[test]
    fn conjugate_twist_by_identity_is_identity() {
        let (h, pair) = h4_pair(3, 2);
        let m = build_h_alpha_beta(&pair).unwrap();
        let tw = conjugate_twist(&m, &AutPair::identity(Arc::clone(&h))).unwrap();
        assert_eq!(tw, m);
    }

    #[test]
    fn conjugate_twist_stays_compatible() {
        let (_, pair) = h4_pair(3, 2);
        let (_, by) = h4_pair(2, 2);
        let m = build_h_alpha_beta(&pair).unwrap();
        let tw = conjugate_twist(&m, &by).unwrap();
        assert!(check_yd(&tw).unwrap().passed());
        let expect_pair = by.multiply(&pair).unwrap().multiply(&by.inverse()).unwrap();
        assert_eq!(tw.pair(), &expect_pair);
    }

    #[test]
    fn prime_twist_is_compatible_for_its_pair() {
        let (h, pair) = h4_pair(4, 2);
        let m = build_h_alpha_beta(&pair).unwrap();
        let mp = prime(&m).unwrap();
        assert!(check_yd(&mp).unwrap().passed());
        // pair is (alpha beta^-1 alpha, alpha)
        let expect = AutPair::new(
            pair.alpha()
                .compose(&pair.beta().inverse())
                .unwrap()
                .compose(pair.alpha())
                .unwrap(),
            pair.alpha().clone(),
        )
        .unwrap();
        assert_eq!(mp.pair(), &expect);
        let beta = sweedler_phi(&h, 2).unwrap();
        let hp = build_h_prime_beta(&beta).unwrap();
        assert!(check_yd(&prime(&hp).unwrap()).unwrap().passed());
    }

    #[test]
    fn identity_is_an_isomorphism_and_scaling_is_not_colinear_breaking() {
        let (h, pair) = h4_pair(2, 3);
        let m = build_h_alpha_beta(&pair).unwrap();
        let id = MatrixExact::identity(h.field(), 4);
        let mor = YDMorphism::new(m.clone(), m.clone(), id).unwrap();
        assert!(mor.is_isomorphism());
        // scalar multiples are still morphisms
        let f = h.field();
        let two = MatrixExact::identity(f, 4).scale(&f.from_i64(2)).unwrap();
        let r = verify_morphism(&m, &m, &two).unwrap();
        assert!(r.is_isomorphism());
        // the zero map is a morphism but not an isomorphism
        let z = MatrixExact::zeros(f, 4, 4);
        let r = verify_morphism(&m, &m, &z).unwrap();
        assert!(r.is_morphism());
        assert!(!r.is_isomorphism());
    }

    #[test]
    fn non_linear_map_is_flagged_with_witness() {
        let (h, pair) = h4_pair(2, 3);
        let other = AutPair::new(
            sweedler_phi(&h, 3).unwrap(),
            sweedler_phi(&h, 3).unwrap(),
        )
        .unwrap();
        let m = build_h_alpha_beta(&pair).unwrap();
        let m2 = build_h_alpha_beta(&other).unwrap();
        let id = MatrixExact::identity(h.field(), 4);
        let r = verify_morphism(&m, &m2, &id).unwrap();
        assert!(!r.pair_match);
        assert!(!r.linear.ok);
        assert!(r.linear.witness.is_some());
        // different Hopf algebras are an error, not a verdict
        let h7 = sweedler(7).unwrap();
        let pair7 = AutPair::identity(Arc::clone(&h7));
        let m7 = build_h_alpha_beta(&pair7).unwrap();
        assert!(matches!(
            verify_morphism(&m, &m7, &MatrixExact::identity(h.field(), 4)),
            Err(Error::Parent(_))
        ));
    }
}
