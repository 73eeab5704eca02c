//! Hopf algebra automorphisms, automorphism pairs, characters and
//! group-like elements.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::algebra::{check_identities, ensure_same_parent, AxiomReport, HopfAlgebra};
use crate::linalg::{FieldElement, LinearMapExact, MatrixExact};

/// Check whether `map` is a Hopf algebra automorphism of `h`: invertible,
/// multiplicative, unital, comultiplicative, counital. Commuting with the
/// antipode follows from the rest but is verified anyway since it is cheap.
pub fn is_hopf_automorphism(h: &HopfAlgebra, map: &MatrixExact) -> Result<AxiomReport> {
    let n = h.dim();
    if (map.rows(), map.cols()) != (n, n) {
        return Err(Error::Dimension(format!(
            "automorphism candidate must be {n}x{n}, got {}x{}",
            map.rows(),
            map.cols()
        )));
    }
    if map.field() != h.field() {
        return Err(Error::FieldMismatch(format!("candidate is not over {}", h.field())));
    }
    let f = LinearMapExact::new(map.clone());
    let ff = f.tensor_map(&f);
    let cp = |a: &LinearMapExact, b: &LinearMapExact| a.compose(b).expect("verified shapes");

    let mut checks = Vec::new();
    let full_rank = map.rank() == n;
    checks.push(super::algebra::AxiomCheck {
        name: "invertible".to_string(),
        ok: full_rank,
        witness: None,
    });

    let mul_l = cp(&f, h.mult());
    let mul_r = cp(h.mult(), &ff);
    checks.push(check_identities("multiplicative", &[(mul_l.matrix(), mul_r.matrix(), &[n, n])]));

    let unit_l = cp(&f, h.unit());
    checks.push(check_identities("unital", &[(unit_l.matrix(), h.unit().matrix(), &[1])]));

    let co_l = cp(h.comult(), &f);
    let co_r = cp(&ff, h.comult());
    checks.push(check_identities("comultiplicative", &[(co_l.matrix(), co_r.matrix(), &[n])]));

    let eps_l = cp(h.counit(), &f);
    checks.push(check_identities("counital", &[(eps_l.matrix(), h.counit().matrix(), &[n])]));

    let anti_l = cp(&f, h.antipode());
    let anti_r = cp(h.antipode(), &f);
    checks.push(check_identities(
        "antipode_commuting",
        &[(anti_l.matrix(), anti_r.matrix(), &[n])],
    ));

    Ok(AxiomReport { checks })
}

/// A verified Hopf algebra automorphism. The inverse matrix is computed at
/// construction and carried along so that pair arithmetic never has to
/// re-invert.
#[derive(Clone, Debug)]
pub struct HopfAutomorphism {
    parent: Arc<HopfAlgebra>,
    map: LinearMapExact,
    inv: LinearMapExact,
}

impl PartialEq for HopfAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.map == other.map
    }
}

impl HopfAutomorphism {
    pub fn new(parent: Arc<HopfAlgebra>, map: MatrixExact) -> Result<Self> {
        let report = is_hopf_automorphism(&parent, &map)?;
        if let Some(fail) = report.first_failure() {
            let detail = match &fail.witness {
                Some(w) => format!(" at {}", parent.witness_string(w)),
                None => String::new(),
            };
            return Err(Error::Axiom(format!(
                "not a Hopf algebra automorphism: {} fails{detail}",
                fail.name
            )));
        }
        let inv = map.invert()?;
        Ok(HopfAutomorphism {
            parent,
            map: LinearMapExact::new(map),
            inv: LinearMapExact::new(inv),
        })
    }

    pub fn identity(parent: Arc<HopfAlgebra>) -> Self {
        let id = parent.identity_map();
        HopfAutomorphism { parent, map: id.clone(), inv: id }
    }

    pub fn parent(&self) -> &Arc<HopfAlgebra> {
        &self.parent
    }

    pub fn matrix(&self) -> &LinearMapExact {
        &self.map
    }

    pub fn inverse_matrix(&self) -> &LinearMapExact {
        &self.inv
    }

    pub fn inverse(&self) -> HopfAutomorphism {
        HopfAutomorphism {
            parent: Arc::clone(&self.parent),
            map: self.inv.clone(),
            inv: self.map.clone(),
        }
    }

    /// self . other, apply `other` first.
    pub fn compose(&self, other: &HopfAutomorphism) -> Result<HopfAutomorphism> {
        ensure_same_parent(&self.parent, &other.parent, "automorphism composition")?;
        Ok(HopfAutomorphism {
            parent: Arc::clone(&self.parent),
            map: self.map.compose(&other.map)?,
            inv: other.inv.compose(&self.inv)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }
}

/// An ordered pair of Hopf algebra automorphisms with the group structure
/// (a, b) * (c, d) = (a . c, d . c^-1 . b . c).
#[derive(Clone, Debug, PartialEq)]
pub struct AutPair {
    alpha: HopfAutomorphism,
    beta: HopfAutomorphism,
}

impl AutPair {
    pub fn new(alpha: HopfAutomorphism, beta: HopfAutomorphism) -> Result<Self> {
        ensure_same_parent(alpha.parent(), beta.parent(), "automorphism pair")?;
        Ok(AutPair { alpha, beta })
    }

    pub fn identity(parent: Arc<HopfAlgebra>) -> Self {
        AutPair {
            alpha: HopfAutomorphism::identity(Arc::clone(&parent)),
            beta: HopfAutomorphism::identity(parent),
        }
    }

    pub fn parent(&self) -> &Arc<HopfAlgebra> {
        self.alpha.parent()
    }

    pub fn alpha(&self) -> &HopfAutomorphism {
        &self.alpha
    }

    pub fn beta(&self) -> &HopfAutomorphism {
        &self.beta
    }

    pub fn multiply(&self, other: &AutPair) -> Result<AutPair> {
        ensure_same_parent(self.parent(), other.parent(), "pair multiplication")?;
        let alpha = self.alpha.compose(&other.alpha)?;
        let beta = other
            .beta
            .compose(&other.alpha.inverse())?
            .compose(&self.beta)?
            .compose(&other.alpha)?;
        Ok(AutPair { alpha, beta })
    }

    pub fn inverse(&self) -> AutPair {
        let alpha = self.alpha.inverse();
        let beta = self
            .alpha
            .compose(&self.beta.inverse())
            .and_then(|m| m.compose(&self.alpha.inverse()))
            .expect("same parent by construction");
        AutPair { alpha, beta }
    }

    /// The assignment (a, b) -> b . a^-1, an anti-homomorphism of groups.
    pub fn to_automorphism(&self) -> HopfAutomorphism {
        self.beta
            .compose(&self.alpha.inverse())
            .expect("same parent by construction")
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity()
    }
}

/// An algebra map H -> k, stored as a 1 x dim row.
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    parent: Arc<HopfAlgebra>,
    row: LinearMapExact,
}

impl Character {
    pub fn new(parent: Arc<HopfAlgebra>, row: MatrixExact) -> Result<Self> {
        let n = parent.dim();
        if (row.rows(), row.cols()) != (1, n) {
            return Err(Error::Dimension(format!(
                "character must be 1x{n}, got {}x{}",
                row.rows(),
                row.cols()
            )));
        }
        if row.field() != parent.field() {
            return Err(Error::FieldMismatch(format!("character is not over {}", parent.field())));
        }
        let f = LinearMapExact::new(row);
        let mul_l = f.compose(parent.mult())?;
        let mul_r = f.tensor_map(&f);
        if let Some((col, _)) = mul_l.matrix().first_mismatch(mul_r.matrix()) {
            let w = super::algebra::decode_index(col, &[n, n]);
            return Err(Error::Axiom(format!(
                "not multiplicative at {}",
                parent.witness_string(&w)
            )));
        }
        let unit_l = f.compose(parent.unit())?;
        if !unit_l.matrix().is_identity() {
            return Err(Error::Axiom("character does not send 1 to 1".to_string()));
        }
        Ok(Character { parent, row: f })
    }

    /// The counit, which is a character of every Hopf algebra.
    pub fn counit(parent: Arc<HopfAlgebra>) -> Self {
        let row = parent.counit().clone();
        Character { parent, row }
    }

    pub fn parent(&self) -> &Arc<HopfAlgebra> {
        &self.parent
    }

    pub fn row(&self) -> &LinearMapExact {
        &self.row
    }

    pub fn value(&self, basis_index: usize) -> FieldElement {
        self.row.matrix().get(0, basis_index)
    }

    /// The convolution inverse, which for a character is f . S.
    pub fn convolution_inverse(&self) -> Character {
        let row = self
            .row
            .compose(self.parent.antipode())
            .expect("shapes agree by construction");
        Character { parent: Arc::clone(&self.parent), row }
    }
}

/// A group-like element: Delta(g) = g (x) g and eps(g) = 1.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupLikeElement {
    parent: Arc<HopfAlgebra>,
    vector: LinearMapExact,
}

impl GroupLikeElement {
    pub fn new(parent: Arc<HopfAlgebra>, vector: MatrixExact) -> Result<Self> {
        let n = parent.dim();
        if (vector.rows(), vector.cols()) != (n, 1) {
            return Err(Error::Dimension(format!(
                "group-like element must be {n}x1, got {}x{}",
                vector.rows(),
                vector.cols()
            )));
        }
        if vector.field() != parent.field() {
            return Err(Error::FieldMismatch(format!(
                "group-like element is not over {}",
                parent.field()
            )));
        }
        let g = LinearMapExact::new(vector);
        let dl = parent.comult().compose(&g)?;
        let dr = g.tensor_map(&g);
        if dl != dr {
            return Err(Error::Axiom("element is not group-like: Delta(g) != g (x) g".into()));
        }
        let eps = parent.counit().compose(&g)?;
        if !eps.matrix().is_identity() {
            return Err(Error::Axiom("element is not group-like: eps(g) != 1".into()));
        }
        // sanity: S(g) is a two-sided inverse of g
        let sg = parent.antipode().compose(&g)?;
        let prod = parent.mult().compose(&g.tensor_map(&sg))?;
        if prod != *parent.unit() {
            return Err(Error::Axiom("group-like element is not invertible via S".into()));
        }
        Ok(GroupLikeElement { parent, vector: g })
    }

    /// The unit element 1_H.
    pub fn unit(parent: Arc<HopfAlgebra>) -> Self {
        let vector = parent.unit().clone();
        GroupLikeElement { parent, vector }
    }

    pub fn parent(&self) -> &Arc<HopfAlgebra> {
        &self.parent
    }

    pub fn vector(&self) -> &LinearMapExact {
        &self.vector
    }

    /// g^-1 = S(g).
    pub fn inverse_vector(&self) -> LinearMapExact {
        self.parent
            .antipode()
            .compose(&self.vector)
            .expect("shapes agree by construction")
    }
}
