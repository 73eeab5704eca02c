//! Tensor products, duals and the braiding for compatible modules.
//!
//! Three tensor products are implemented. Writing (alpha, beta) for the
//! pair of the left factor and (gamma, delta) for the right:
//!
//! * type one: h . (m (x) n) = h_1 m (x) h_2 n, needs beta = gamma,
//!   result pair (alpha, delta);
//! * type two: h . (m (x) n) = h_2 m (x) h_1 n, needs alpha = delta,
//!   result pair (gamma, beta);
//! * hat: h . (m (x) n) = gamma(h_1) m (x) (gamma^-1 beta gamma)(h_2) n,
//!   always defined, result pair (alpha, beta) * (gamma, delta).
//!
//! All three use the coaction leg n_(1) m_(1) except type two, which uses
//! m_(1) n_(1). Duals share one dual-basis convention and differ only in
//! the maps theta (inside the action) and sigma (on the coaction leg).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::algebra::ensure_same_parent;
use crate::hopf::morphism::AutPair;
use crate::linalg::{LinearMapExact, MatrixExact, TensorExact};
use crate::yd::module::YDModule;
use crate::yd::transform::{conjugate_twist, shift, ShiftDirection, YDMorphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorKind {
    One,
    Two,
    Hat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualFlavor {
    DiamondLeft,
    DiamondRight,
    StarLeft,
    StarRight,
}

/// Action matrix of a tensor product module. `lm` and `ln` are applied to
/// the coproduct leg feeding the left and right factor; `swap_legs` feeds
/// h_2 to the left factor instead of h_1.
fn tensor_action(
    m: &YDModule,
    n: &YDModule,
    lm: Option<&LinearMapExact>,
    ln: Option<&LinearMapExact>,
    swap_legs: bool,
) -> Result<MatrixExact> {
    let h = m.hopf();
    let nh = h.dim();
    let f = h.field();
    let idm = LinearMapExact::identity(f, m.dim());
    let idn = LinearMapExact::identity(f, n.dim());
    let am = match lm {
        Some(t) => m.action().compose(&t.tensor_map(&idm))?,
        None => m.action().clone(),
    };
    let an = match ln {
        Some(t) => n.action().compose(&t.tensor_map(&idn))?,
        None => n.action().clone(),
    };
    let am_t = TensorExact::from_matrix(am.matrix(), &[m.dim()], &[nh, m.dim()]);
    let an_t = TensorExact::from_matrix(an.matrix(), &[n.dim()], &[nh, n.dim()]);
    let delta_t = TensorExact::from_matrix(h.comult().matrix(), &[nh, nh], &[nh]);
    let leg_m = usize::from(swap_legs);
    let x = TensorExact::tensordot(&am_t, &[1], &delta_t, &[leg_m]); // [k1, j1, other, h]
    let y = TensorExact::tensordot(&x, &[2], &an_t, &[1]); // [k1, j1, h, k2, j2]
    Ok(y.permute(&[0, 3, 2, 1, 4]).into_matrix(2))
}

/// Coaction matrix of a tensor product; the H leg is n_(1) m_(1), or
/// m_(1) n_(1) when `m_leg_first` is set.
fn tensor_coaction(m: &YDModule, n: &YDModule, m_leg_first: bool) -> MatrixExact {
    let h = m.hopf();
    let nh = h.dim();
    let mult_t = TensorExact::from_matrix(h.mult().matrix(), &[nh], &[nh, nh]);
    let ax_m = if m_leg_first { 1 } else { 2 };
    let z = TensorExact::tensordot(&mult_t, &[ax_m], &m.coact_tensor(), &[1]); // [t, other, k1, j1]
    let w = TensorExact::tensordot(&z, &[1], &n.coact_tensor(), &[1]); // [t, k1, j1, k2, j2]
    w.permute(&[1, 3, 0, 2, 4]).into_matrix(3)
}

/// Tensor product of compatible modules. Type one and two require the
/// matching automorphism to agree and report a pair mismatch otherwise.
pub fn tensor(m: &YDModule, n: &YDModule, kind: TensorKind) -> Result<YDModule> {
    ensure_same_parent(m.hopf(), n.hopf(), "tensor product")?;
    let (action, coaction, pair) = match kind {
        TensorKind::One => {
            if m.pair().beta() != n.pair().alpha() {
                return Err(Error::PairMismatch(
                    "type one tensor needs the left beta to equal the right alpha".into(),
                ));
            }
            let pair = AutPair::new(m.pair().alpha().clone(), n.pair().beta().clone())?;
            (tensor_action(m, n, None, None, false)?, tensor_coaction(m, n, false), pair)
        }
        TensorKind::Two => {
            if m.pair().alpha() != n.pair().beta() {
                return Err(Error::PairMismatch(
                    "type two tensor needs the left alpha to equal the right beta".into(),
                ));
            }
            let pair = AutPair::new(n.pair().alpha().clone(), m.pair().beta().clone())?;
            (tensor_action(m, n, None, None, true)?, tensor_coaction(m, n, true), pair)
        }
        TensorKind::Hat => {
            let gamma = n.pair().alpha();
            let beta = m.pair().beta();
            let inner = gamma.inverse().compose(beta)?.compose(gamma)?;
            let pair = m.pair().multiply(n.pair())?;
            (
                tensor_action(m, n, Some(gamma.matrix()), Some(inner.matrix()), false)?,
                tensor_coaction(m, n, false),
                pair,
            )
        }
    };
    YDModule::new(Arc::clone(m.hopf()), action, coaction, pair)
}

/// The shifted hat product: the hat tensor followed by the action shift
/// along the right factor's alpha.
pub fn tensor_tilde(m: &YDModule, n: &YDModule) -> Result<YDModule> {
    let hat = tensor(m, n, TensorKind::Hat)?;
    shift(&hat, n.pair().alpha(), ShiftDirection::F)
}

/// Dual module on the dual basis: action (h . f)(v) = f(theta(h) . v) and
/// coaction leg transported through sigma.
pub fn dual(m: &YDModule, flavor: DualFlavor) -> Result<YDModule> {
    let h = m.hopf();
    let nh = h.dim();
    let alpha = m.pair().alpha();
    let beta = m.pair().beta();
    let swapped = AutPair::new(beta.clone(), alpha.clone())?;
    let ab_inv = beta.inverse_matrix().compose(alpha.inverse_matrix())?;
    let (theta, sigma, pair) = match flavor {
        DualFlavor::DiamondLeft => (h.antipode().clone(), h.antipode_inv().clone(), swapped),
        DualFlavor::DiamondRight => (h.antipode_inv().clone(), h.antipode().clone(), swapped),
        DualFlavor::StarLeft => {
            (ab_inv.compose(h.antipode())?, h.antipode_inv().clone(), m.pair().inverse())
        }
        DualFlavor::StarRight => {
            (ab_inv.compose(h.antipode_inv())?, h.antipode().clone(), m.pair().inverse())
        }
    };
    let theta_t = TensorExact::from_matrix(theta.matrix(), &[nh], &[nh]);
    let sigma_t = TensorExact::from_matrix(sigma.matrix(), &[nh], &[nh]);
    // act[u, (h, w)] = sum_s theta[s, h] act_M[w, (s, u)]
    let action = TensorExact::tensordot(&m.act_tensor(), &[1], &theta_t, &[0]) // [w, u, h]
        .permute(&[1, 2, 0])
        .into_matrix(1);
    // coact[(u, t'), w] = sum_t coact_M[(w, t), u] sigma[t', t]
    let coaction = TensorExact::tensordot(&m.coact_tensor(), &[1], &sigma_t, &[1]) // [w, u, t']
        .permute(&[1, 2, 0])
        .into_matrix(2);
    YDModule::new(Arc::clone(h), action, coaction, pair)
}

/// The braiding c : M hat(x) N -> (conjugate of N) hat(x) M together with
/// its inverse. When M sits over the identity pair the inverse has the
/// closed form S(n_(1)) . m (x) n_(0); otherwise the matrix is inverted
/// numerically (it is always invertible for compatible modules).
pub struct Braiding {
    morphism: YDMorphism,
    inverse: LinearMapExact,
}

impl Braiding {
    pub fn morphism(&self) -> &YDMorphism {
        &self.morphism
    }

    pub fn map(&self) -> &LinearMapExact {
        self.morphism.map()
    }

    pub fn inverse(&self) -> &LinearMapExact {
        &self.inverse
    }

    pub fn source(&self) -> &YDModule {
        self.morphism.source()
    }

    pub fn target(&self) -> &YDModule {
        self.morphism.target()
    }
}

/// c(m (x) n) = n_(0) (x) beta^-1(n_(1)) . m, from M hat(x) N to
/// ^M N hat(x) M.
pub fn braiding(m: &YDModule, n: &YDModule) -> Result<Braiding> {
    ensure_same_parent(m.hopf(), n.hopf(), "braiding")?;
    let source = tensor(m, n, TensorKind::Hat)?;
    let twisted = conjugate_twist(n, m.pair())?;
    let target = tensor(&twisted, m, TensorKind::Hat)?;
    let h = m.hopf();
    let nh = h.dim();
    let binv_t =
        TensorExact::from_matrix(m.pair().beta().inverse_matrix().matrix(), &[nh], &[nh]);
    let a1 = TensorExact::tensordot(&n.coact_tensor(), &[1], &binv_t, &[1]); // [j2, i2, s]
    let a2 = TensorExact::tensordot(&a1, &[2], &m.act_tensor(), &[1]); // [j2, i2, k1, i1]
    let cmat = a2.permute(&[0, 2, 3, 1]).into_matrix(2);
    let inverse = if m.pair().is_identity() {
        let s_t = TensorExact::from_matrix(h.antipode().matrix(), &[nh], &[nh]);
        let b1 = TensorExact::tensordot(&n.coact_tensor(), &[1], &s_t, &[1]); // [k2, j2, s]
        let b2 = TensorExact::tensordot(&b1, &[2], &m.act_tensor(), &[1]); // [k2, j2, k1, j1]
        b2.permute(&[2, 0, 1, 3]).into_matrix(2)
    } else {
        cmat.invert()?
    };
    let morphism = YDMorphism::new(source, target, cmat)?;
    Ok(Braiding { morphism, inverse: LinearMapExact::new(inverse) })
}

/// The comparison map N* hat(x) M* -> (M hat(x) N)*, a permutation of
/// basis vectors sending e^j (x) e^i to the functional dual to e_i (x) e_j.
pub fn psi(m: &YDModule, n: &YDModule) -> Result<YDMorphism> {
    ensure_same_parent(m.hopf(), n.hopf(), "dual comparison")?;
    let source = tensor(
        &dual(n, DualFlavor::StarLeft)?,
        &dual(m, DualFlavor::StarLeft)?,
        TensorKind::Hat,
    )?;
    let target = dual(&tensor(m, n, TensorKind::Hat)?, DualFlavor::StarLeft)?;
    let (dm, dn) = (m.dim(), n.dim());
    let mut perm = vec![0usize; dm * dn];
    for j in 0..dn {
        for i in 0..dm {
            perm[j * dm + i] = i * dn + j;
        }
    }
    let mat = MatrixExact::permutation(m.hopf().field(), &perm);
    YDMorphism::new(source, target, mat)
}
