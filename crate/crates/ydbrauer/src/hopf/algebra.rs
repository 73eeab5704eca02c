//! Hopf algebras as explicit structure constants, plus full axiom checking.
//!
//! All structure maps are stored as matrices over one exact field with the
//! tensor basis convention (i, j) -> i * dim + j:
//!
//! * `mult`:     dim x dim^2, column (i, j) is the product b_i b_j
//! * `unit`:     dim x 1, the element 1_H
//! * `comult`:   dim^2 x dim, column i is Delta(b_i)
//! * `counit`:   1 x dim
//! * `antipode` and its inverse: dim x dim
//!
//! Axioms are verified at the level of whole matrices, so a failure report
//! can name the first offending basis tuple exactly.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, LinearMapExact, MatrixExact};

#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebra {
    field: FieldSpec,
    dim: usize,
    mult: LinearMapExact,
    unit: LinearMapExact,
    comult: LinearMapExact,
    counit: LinearMapExact,
    antipode: LinearMapExact,
    antipode_inv: LinearMapExact,
    basis_labels: Vec<String>,
}

impl HopfAlgebra {
    /// Assemble a Hopf algebra from its structure maps. Shapes and fields
    /// are validated here; the axioms themselves are checked separately by
    /// [`verify_hopf`]. When `antipode_inv` is absent it is computed by
    /// exact matrix inversion.
    pub fn new(
        field: FieldSpec,
        mult: MatrixExact,
        unit: MatrixExact,
        comult: MatrixExact,
        counit: MatrixExact,
        antipode: MatrixExact,
        antipode_inv: Option<MatrixExact>,
        basis_labels: Vec<String>,
    ) -> Result<Arc<Self>> {
        let dim = unit.rows();
        let shapes = [
            ("mult", &mult, dim, dim * dim),
            ("unit", &unit, dim, 1),
            ("comult", &comult, dim * dim, dim),
            ("counit", &counit, 1, dim),
            ("antipode", &antipode, dim, dim),
        ];
        for (name, m, r, c) in shapes {
            if (m.rows(), m.cols()) != (r, c) {
                return Err(Error::Dimension(format!(
                    "{name} must be {r}x{c}, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch(format!("{name} is not over {field}")));
            }
        }
        if basis_labels.len() != dim {
            return Err(Error::Dimension(format!(
                "{} basis labels for dimension {dim}",
                basis_labels.len()
            )));
        }
        let antipode_inv = match antipode_inv {
            Some(m) => {
                if (m.rows(), m.cols()) != (dim, dim) || m.field() != field {
                    return Err(Error::Dimension("antipode inverse has the wrong shape".into()));
                }
                m
            }
            None => antipode.invert()?,
        };
        Ok(Arc::new(HopfAlgebra {
            field,
            dim,
            mult: LinearMapExact::new(mult),
            unit: LinearMapExact::new(unit),
            comult: LinearMapExact::new(comult),
            counit: LinearMapExact::new(counit),
            antipode: LinearMapExact::new(antipode),
            antipode_inv: LinearMapExact::new(antipode_inv),
            basis_labels,
        }))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &LinearMapExact {
        &self.mult
    }

    pub fn unit(&self) -> &LinearMapExact {
        &self.unit
    }

    pub fn comult(&self) -> &LinearMapExact {
        &self.comult
    }

    pub fn counit(&self) -> &LinearMapExact {
        &self.counit
    }

    pub fn antipode(&self) -> &LinearMapExact {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &LinearMapExact {
        &self.antipode_inv
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis_labels[i]
    }

    pub fn identity_map(&self) -> LinearMapExact {
        LinearMapExact::identity(self.field, self.dim)
    }

    /// The iterated coproduct (Delta (x) id) . Delta : H -> H (x) H (x) H.
    pub fn comult2(&self) -> LinearMapExact {
        let id = self.identity_map();
        self.comult
            .tensor_map(&id)
            .compose(&self.comult)
            .expect("shapes agree by construction")
    }

    /// The iterated product m . (m (x) id) : H (x) H (x) H -> H.
    pub fn mult_three(&self) -> LinearMapExact {
        let id = self.identity_map();
        self.mult
            .compose(&self.mult.tensor_map(&id))
            .expect("shapes agree by construction")
    }

    /// Format a basis index tuple like `(g, x)` using the stored labels.
    pub fn witness_string(&self, indices: &[usize]) -> String {
        let parts: Vec<&str> = indices.iter().map(|&i| self.label(i)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Objects built over two different Hopf algebra values cannot be combined.
pub fn ensure_same_parent(a: &Arc<HopfAlgebra>, b: &Arc<HopfAlgebra>, what: &str) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::Parent(format!("{what}: operands live over different Hopf algebras")))
    }
}

/// Result of checking one named identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub ok: bool,
    /// Basis indices of the first failing input tuple, scanned in
    /// lexicographic order.
    pub witness: Option<Vec<usize>>,
}

/// A bundle of axiom checks for one object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.ok)
    }
}

/// Decode a flat column index into per-factor basis indices, most
/// significant factor first (matching (i, j) -> i * dim2 + j).
pub(crate) fn decode_index(mut idx: usize, radices: &[usize]) -> Vec<usize> {
    let mut out = vec![0usize; radices.len()];
    for i in (0..radices.len()).rev() {
        if radices[i] > 0 {
            out[i] = idx % radices[i];
            idx /= radices[i];
        }
    }
    out
}

/// Compare candidate identities; the check fails on the first pair of
/// matrices that differ, with the witness decoded from the column index.
pub(crate) fn check_identities(
    name: &str,
    sides: &[(&MatrixExact, &MatrixExact, &[usize])],
) -> AxiomCheck {
    for (lhs, rhs, radices) in sides {
        if let Some((col, _row)) = lhs.first_mismatch(rhs) {
            return AxiomCheck {
                name: name.to_string(),
                ok: false,
                witness: Some(decode_index(col, radices)),
            };
        }
    }
    AxiomCheck { name: name.to_string(), ok: true, witness: None }
}

/// Verify every Hopf algebra axiom and report per-identity outcomes.
pub fn verify_hopf(h: &HopfAlgebra) -> AxiomReport {
    let n = h.dim();
    let f = h.field();
    let id = h.identity_map();
    let m = h.mult();
    let u = h.unit();
    let d = h.comult();
    let e = h.counit();
    let s = h.antipode();
    let cp = |a: &LinearMapExact, b: &LinearMapExact| a.compose(b).expect("verified shapes");

    let mut checks = Vec::new();

    // m . (m (x) id) = m . (id (x) m)
    let assoc_l = cp(m, &m.tensor_map(&id));
    let assoc_r = cp(m, &id.tensor_map(m));
    checks.push(check_identities(
        "associativity",
        &[(assoc_l.matrix(), assoc_r.matrix(), &[n, n, n])],
    ));

    // m . (u (x) id) = id = m . (id (x) u)
    let unit_l = cp(m, &u.tensor_map(&id));
    let unit_r = cp(m, &id.tensor_map(u));
    checks.push(check_identities(
        "unit",
        &[(unit_l.matrix(), id.matrix(), &[n]), (unit_r.matrix(), id.matrix(), &[n])],
    ));

    // (Delta (x) id) . Delta = (id (x) Delta) . Delta
    let coassoc_l = cp(&d.tensor_map(&id), d);
    let coassoc_r = cp(&id.tensor_map(d), d);
    checks.push(check_identities(
        "coassociativity",
        &[(coassoc_l.matrix(), coassoc_r.matrix(), &[n])],
    ));

    // (eps (x) id) . Delta = id = (id (x) eps) . Delta
    let counit_l = cp(&e.tensor_map(&id), d);
    let counit_r = cp(&id.tensor_map(e), d);
    checks.push(check_identities(
        "counit",
        &[(counit_l.matrix(), id.matrix(), &[n]), (counit_r.matrix(), id.matrix(), &[n])],
    ));

    // Delta . m = (m (x) m) . (id (x) swap (x) id) . (Delta (x) Delta)
    let swap = LinearMapExact::new(MatrixExact::swap_factors(f, n, n));
    let mid = id.tensor_map(&swap).tensor_map(&id);
    let bial_l = cp(d, m);
    let bial_r = cp(&cp(&m.tensor_map(m), &mid), &d.tensor_map(d));
    checks.push(check_identities(
        "bialgebra_mult",
        &[(bial_l.matrix(), bial_r.matrix(), &[n, n])],
    ));

    // eps . m = eps (x) eps
    let bc_l = cp(e, m);
    let bc_r = e.tensor_map(e);
    checks.push(check_identities("bialgebra_counit", &[(bc_l.matrix(), bc_r.matrix(), &[n, n])]));

    // Delta . u = u (x) u and eps . u = 1
    let bu_l = cp(d, u);
    let bu_r = u.tensor_map(u);
    let scalar_l = cp(e, u);
    let scalar_r = LinearMapExact::identity(f, 1);
    checks.push(check_identities(
        "bialgebra_unit",
        &[(bu_l.matrix(), bu_r.matrix(), &[1]), (scalar_l.matrix(), scalar_r.matrix(), &[1])],
    ));

    // m . (S (x) id) . Delta = u . eps = m . (id (x) S) . Delta
    let ue = cp(u, e);
    let anti_l = cp(&cp(m, &s.tensor_map(&id)), d);
    let anti_r = cp(&cp(m, &id.tensor_map(s)), d);
    checks.push(check_identities(
        "antipode",
        &[(anti_l.matrix(), ue.matrix(), &[n]), (anti_r.matrix(), ue.matrix(), &[n])],
    ));

    // the stored inverse really is a two-sided inverse of S
    let si = h.antipode_inv();
    let inv_l = cp(si, s);
    let inv_r = cp(s, si);
    checks.push(check_identities(
        "antipode_inverse",
        &[(inv_l.matrix(), id.matrix(), &[n]), (inv_r.matrix(), id.matrix(), &[n])],
    ));

    AxiomReport { checks }
}

/// Compute the inverse of the antipode by exact matrix inversion.
pub fn antipode_inverse(h: &HopfAlgebra) -> Result<LinearMapExact> {
    h.antipode().invert()
}
