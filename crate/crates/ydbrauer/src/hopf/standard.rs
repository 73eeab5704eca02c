//! Builders for the standard test bed: group algebras, the 4-dimensional
//! algebra with a group-like g and a skew-primitive x, and its n^2
//! dimensional generalizations.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::algebra::HopfAlgebra;
use crate::hopf::morphism::HopfAutomorphism;
use crate::linalg::field::pow_mod;
use crate::linalg::{FieldElement, FieldSpec, MatrixExact};

/// Recipes accepted by [`build_standard`].
#[derive(Clone, Debug)]
pub enum StandardAlgebra {
    /// Group algebra k[G] from a Cayley table: `table[i][j]` is the index
    /// of g_i g_j. The table is validated to be a group.
    GroupAlgebra { field: FieldSpec, table: Vec<Vec<usize>>, labels: Option<Vec<String>> },
    /// The 4-dimensional algebra k<g, x | g^2 = 1, x^2 = 0, xg = -gx>
    /// over GF(p), basis [1, g, x, gx].
    Sweedler { p: u64 },
    /// The n^2 dimensional algebra k<g, x | g^n = 1, x^n = 0, xg = q gx>
    /// over GF(p), where q is a primitive n-th root of unity mod p.
    /// Basis g^a x^b at index a*n + b.
    Taft { n: usize, q: u64, p: u64 },
}

pub fn build_standard(spec: &StandardAlgebra) -> Result<Arc<HopfAlgebra>> {
    match spec {
        StandardAlgebra::GroupAlgebra { field, table, labels } => {
            group_algebra(*field, table, labels.clone())
        }
        StandardAlgebra::Sweedler { p } => sweedler(*p),
        StandardAlgebra::Taft { n, q, p } => taft(*n, *q, *p),
    }
}

fn validate_group_table(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return Err(Error::BadParameter("empty Cayley table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::BadParameter(format!("Cayley table row {i} has length {}", row.len())));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= n) {
            return Err(Error::BadParameter(format!("Cayley table entry {bad} out of range")));
        }
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j)) else {
        return Err(Error::BadParameter("Cayley table has no identity element".into()));
    };
    for i in 0..n {
        if !(0..n).any(|j| table[i][j] == e && table[j][i] == e) {
            return Err(Error::BadParameter(format!("element {i} has no inverse")));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(Error::BadParameter(format!(
                        "Cayley table is not associative at ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    Ok(e)
}

/// Group algebra k[G] with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1.
pub fn group_algebra(
    field: FieldSpec,
    table: &[Vec<usize>],
    labels: Option<Vec<String>>,
) -> Result<Arc<HopfAlgebra>> {
    let e = validate_group_table(table)?;
    let n = table.len();
    let one = field.one();
    let mut mult = MatrixExact::zeros(field, n, n * n);
    for i in 0..n {
        for j in 0..n {
            mult.set(table[i][j], i * n + j, one.clone())?;
        }
    }
    let mut comult = MatrixExact::zeros(field, n * n, n);
    let mut counit = MatrixExact::zeros(field, 1, n);
    let mut antipode = MatrixExact::zeros(field, n, n);
    for i in 0..n {
        comult.set(i * n + i, i, one.clone())?;
        counit.set(0, i, one.clone())?;
        let inv = (0..n).find(|&j| table[i][j] == e).expect("validated above");
        antipode.set(inv, i, one.clone())?;
    }
    let mut unit = MatrixExact::zeros(field, n, 1);
    unit.set(e, 0, one)?;
    let labels = match labels {
        Some(l) => {
            if l.len() != n {
                return Err(Error::BadParameter(format!("{} labels for a group of order {n}", l.len())));
            }
            l
        }
        None => (0..n).map(|i| format!("g{i}")).collect(),
    };
    let antipode_inv = antipode.clone();
    HopfAlgebra::new(field, mult, unit, comult, counit, antipode, Some(antipode_inv), labels)
}

/// Cayley table of the cyclic group of order n.
pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Standard labels 1, g, g^2, ... for a cyclic group algebra.
pub fn cyclic_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect()
}

/// The 4-dimensional algebra over GF(p), p an odd prime, with basis
/// [1, g, x, gx]. Structure constants are written out directly; the
/// agreement with [`taft`] at n = 2 is covered by tests.
pub fn sweedler(p: u64) -> Result<Arc<HopfAlgebra>> {
    let field = FieldSpec::prime(p)?;
    if p == 2 {
        return Err(Error::BadParameter("the 4-dimensional algebra needs -1 != 1, take p odd".into()));
    }
    let neg = p - 1;
    let one = 1u64;
    // (target index, coefficient) of b_i b_j, or None when the product is 0
    let prod: [[Option<(usize, u64)>; 4]; 4] = [
        [Some((0, one)), Some((1, one)), Some((2, one)), Some((3, one))],
        [Some((1, one)), Some((0, one)), Some((3, one)), Some((2, one))],
        [Some((2, one)), Some((3, neg)), None, None],
        [Some((3, one)), Some((2, neg)), None, None],
    ];
    let mut mult = MatrixExact::zeros(field, 4, 16);
    for i in 0..4 {
        for j in 0..4 {
            if let Some((k, c)) = prod[i][j] {
                mult.set(k, i * 4 + j, FieldElement::Fp(c))?;
            }
        }
    }
    let mut unit = MatrixExact::zeros(field, 4, 1);
    unit.set(0, 0, FieldElement::Fp(1))?;
    // Delta(1) = 1 (x) 1, Delta(g) = g (x) g,
    // Delta(x) = x (x) 1 + g (x) x, Delta(gx) = gx (x) g + 1 (x) gx
    let mut comult = MatrixExact::zeros(field, 16, 4);
    comult.set(0, 0, FieldElement::Fp(1))?;
    comult.set(5, 1, FieldElement::Fp(1))?;
    comult.set(8, 2, FieldElement::Fp(1))?;
    comult.set(6, 2, FieldElement::Fp(1))?;
    comult.set(13, 3, FieldElement::Fp(1))?;
    comult.set(3, 3, FieldElement::Fp(1))?;
    let mut counit = MatrixExact::zeros(field, 1, 4);
    counit.set(0, 0, FieldElement::Fp(1))?;
    counit.set(0, 1, FieldElement::Fp(1))?;
    // S(x) = -gx, S(gx) = x, so S has order 4
    let mut antipode = MatrixExact::zeros(field, 4, 4);
    antipode.set(0, 0, FieldElement::Fp(1))?;
    antipode.set(1, 1, FieldElement::Fp(1))?;
    antipode.set(3, 2, FieldElement::Fp(neg))?;
    antipode.set(2, 3, FieldElement::Fp(1))?;
    let mut antipode_inv = MatrixExact::zeros(field, 4, 4);
    antipode_inv.set(0, 0, FieldElement::Fp(1))?;
    antipode_inv.set(1, 1, FieldElement::Fp(1))?;
    antipode_inv.set(3, 2, FieldElement::Fp(1))?;
    antipode_inv.set(2, 3, FieldElement::Fp(neg))?;
    let labels = vec!["1".into(), "g".into(), "x".into(), "gx".into()];
    HopfAlgebra::new(field, mult, unit, comult, counit, antipode, Some(antipode_inv), labels)
}

/// Multiplicative order of q mod p, or None if q is 0 mod p.
fn mult_order(q: u64, p: u64) -> Option<usize> {
    let q = q % p;
    if q == 0 {
        return None;
    }
    let mut acc = q;
    let mut k = 1usize;
    while acc != 1 {
        acc = acc * q % p;
        k += 1;
    }
    Some(k)
}

/// The n^2 dimensional algebra over GF(p) on generators g (group-like) and
/// x with Delta(x) = x (x) 1 + g (x) x, relations g^n = 1, x^n = 0 and
/// xg = q gx. The coproduct and antipode are assembled multiplicatively
/// from the generator values rather than from closed formulas.
pub fn taft(n: usize, q: u64, p: u64) -> Result<Arc<HopfAlgebra>> {
    let field = FieldSpec::prime(p)?;
    if n < 2 {
        return Err(Error::BadParameter("need n >= 2".into()));
    }
    let qr = q % p;
    if mult_order(qr, p) != Some(n) {
        return Err(Error::BadParameter(format!(
            "{q} is not a primitive root of unity of order {n} mod {p}"
        )));
    }
    let d = n * n;
    let idx = |a: usize, b: usize| a * n + b;
    // b_i b_j for monomials g^a x^b: one target index and one coefficient
    let prod = |i: usize, j: usize| -> Option<(usize, u64)> {
        let (a, b) = (i / n, i % n);
        let (c, e) = (j / n, j % n);
        if b + e >= n {
            return None;
        }
        Some((idx((a + c) % n, b + e), pow_mod(qr, (b * c) as u64, p)))
    };
    let mut mult = MatrixExact::zeros(field, d, d * d);
    for i in 0..d {
        for j in 0..d {
            if let Some((k, c)) = prod(i, j) {
                mult.set(k, i * d + j, FieldElement::Fp(c))?;
            }
        }
    }
    // products of sparse vectors in H and in H (x) H
    let h_mul = |u: &[u64], v: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; d];
        for (i, &uc) in u.iter().enumerate() {
            if uc == 0 {
                continue;
            }
            for (j, &vc) in v.iter().enumerate() {
                if vc == 0 {
                    continue;
                }
                if let Some((k, c)) = prod(i, j) {
                    out[k] = (out[k] + uc * vc % p * c) % p;
                }
            }
        }
        out
    };
    let hh_mul = |u: &[u64], v: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; d * d];
        for (iu, &uc) in u.iter().enumerate() {
            if uc == 0 {
                continue;
            }
            let (i1, i2) = (iu / d, iu % d);
            for (jv, &vc) in v.iter().enumerate() {
                if vc == 0 {
                    continue;
                }
                let (j1, j2) = (jv / d, jv % d);
                if let (Some((k1, c1)), Some((k2, c2))) = (prod(i1, j1), prod(i2, j2)) {
                    let t = uc * vc % p * c1 % p * c2 % p;
                    out[k1 * d + k2] = (out[k1 * d + k2] + t) % p;
                }
            }
        }
        out
    };
    // Delta on generators, then monomials multiplicatively
    let mut delta_one = vec![0u64; d * d];
    delta_one[0] = 1;
    let mut dg = vec![0u64; d * d];
    dg[idx(1, 0) * d + idx(1, 0)] = 1;
    let mut dx = vec![0u64; d * d];
    dx[idx(0, 1) * d] = 1;
    dx[idx(1, 0) * d + idx(0, 1)] = 1;
    let mut dg_pow = vec![delta_one.clone()];
    for a in 1..n {
        dg_pow.push(hh_mul(&dg_pow[a - 1], &dg));
    }
    let mut dx_pow = vec![delta_one];
    for b in 1..n {
        dx_pow.push(hh_mul(&dx_pow[b - 1], &dx));
    }
    let mut comult = MatrixExact::zeros(field, d * d, d);
    for a in 0..n {
        for b in 0..n {
            let col = hh_mul(&dg_pow[a], &dx_pow[b]);
            for (r, &c) in col.iter().enumerate() {
                if c != 0 {
                    comult.set(r, idx(a, b), FieldElement::Fp(c))?;
                }
            }
        }
    }
    // S(g) = g^{n-1}, S(x) = -g^{n-1} x, extended anti-multiplicatively:
    // S(g^a x^b) = S(x)^b S(g)^a
    let mut one_vec = vec![0u64; d];
    one_vec[0] = 1;
    let mut sg = vec![0u64; d];
    sg[idx(n - 1, 0)] = 1;
    let mut sx = vec![0u64; d];
    sx[idx(n - 1, 1)] = p - 1;
    let mut sg_pow = vec![one_vec.clone()];
    for a in 1..n {
        sg_pow.push(h_mul(&sg_pow[a - 1], &sg));
    }
    let mut sx_pow = vec![one_vec];
    for b in 1..n {
        sx_pow.push(h_mul(&sx_pow[b - 1], &sx));
    }
    let mut antipode = MatrixExact::zeros(field, d, d);
    for a in 0..n {
        for b in 0..n {
            let col = h_mul(&sx_pow[b], &sg_pow[a]);
            for (r, &c) in col.iter().enumerate() {
                if c != 0 {
                    antipode.set(r, idx(a, b), FieldElement::Fp(c))?;
                }
            }
        }
    }
    let mut unit = MatrixExact::zeros(field, d, 1);
    unit.set(0, 0, FieldElement::Fp(1))?;
    let mut counit = MatrixExact::zeros(field, 1, d);
    for a in 0..n {
        counit.set(0, idx(a, 0), FieldElement::Fp(1))?;
    }
    let labels = (0..n)
        .flat_map(|a| {
            (0..n).map(move |b| {
                let gs = match a {
                    0 => String::new(),
                    1 => "g".to_string(),
                    _ => format!("g^{a}"),
                };
                let xs = match b {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{b}"),
                };
                if gs.is_empty() && xs.is_empty() {
                    "1".to_string()
                } else {
                    format!("{gs}{xs}")
                }
            })
        })
        .collect();
    HopfAlgebra::new(field, mult, unit, comult, counit, antipode, None, labels)
}

/// Conjugate every structure map by the basis permutation sigma
/// (new_basis[sigma[i]] = old_basis[i]) and attach fresh labels.
pub fn relabel(h: &HopfAlgebra, sigma: &[usize], labels: Vec<String>) -> Result<Arc<HopfAlgebra>> {
    let n = h.dim();
    if sigma.len() != n || labels.len() != n {
        return Err(Error::Dimension(format!("permutation and labels must have length {n}")));
    }
    let field = h.field();
    let pm = MatrixExact::permutation(field, sigma);
    let pi = pm.transpose();
    let pm2 = pm.kron(&pm);
    let pi2 = pi.kron(&pi);
    let mult = pm.mul(h.mult().matrix())?.mul(&pi2)?;
    let comult = pm2.mul(h.comult().matrix())?.mul(&pi)?;
    let unit = pm.mul(h.unit().matrix())?;
    let counit = h.counit().matrix().mul(&pi)?;
    let antipode = pm.mul(h.antipode().matrix())?.mul(&pi)?;
    let antipode_inv = pm.mul(h.antipode_inv().matrix())?.mul(&pi)?;
    HopfAlgebra::new(field, mult, unit, comult, counit, antipode, Some(antipode_inv), labels)
}

/// The automorphism g -> g, x -> lambda x of the 4-dimensional algebra.
pub fn sweedler_phi(h: &Arc<HopfAlgebra>, lambda: u64) -> Result<HopfAutomorphism> {
    let field = h.field();
    let Some(p) = field.modulus() else {
        return Err(Error::BadParameter("expected a prime field".into()));
    };
    if lambda % p == 0 {
        return Err(Error::BadParameter("lambda must be nonzero".into()));
    }
    let l = lambda % p;
    let diag = [1, 1, l, l];
    let m = MatrixExact::from_fn(field, 4, 4, |i, j| {
        FieldElement::Fp(if i == j { diag[i] } else { 0 })
    })?;
    HopfAutomorphism::new(Arc::clone(h), m)
}

/// The automorphism g -> g, x -> lambda x of the n^2 dimensional algebra,
/// acting on g^a x^b by lambda^b.
pub fn taft_phi(h: &Arc<HopfAlgebra>, n: usize, lambda: u64) -> Result<HopfAutomorphism> {
    let field = h.field();
    let Some(p) = field.modulus() else {
        return Err(Error::BadParameter("expected a prime field".into()));
    };
    if h.dim() != n * n {
        return Err(Error::Dimension(format!("expected dimension {}, got {}", n * n, h.dim())));
    }
    if lambda % p == 0 {
        return Err(Error::BadParameter("lambda must be nonzero".into()));
    }
    let m = MatrixExact::from_fn(field, n * n, n * n, |i, j| {
        if i == j {
            FieldElement::Fp(pow_mod(lambda % p, (i % n) as u64, p))
        } else {
            FieldElement::Fp(0)
        }
    })?;
    HopfAutomorphism::new(Arc::clone(h), m)
}

/// The automorphism g -> g^k of a cyclic group algebra with basis g^i.
pub fn cyclic_power_automorphism(h: &Arc<HopfAlgebra>, k: usize) -> Result<HopfAutomorphism> {
    let n = h.dim();
    let perm: Vec<usize> = (0..n).map(|i| i * k % n).collect();
    let mut seen = vec![false; n];
    for &v in &perm {
        if seen[v] {
            return Err(Error::BadParameter(format!("g -> g^{k} is not invertible on C{n}")));
        }
        seen[v] = true;
    }
    let m = MatrixExact::permutation(h.field(), &perm);
    HopfAutomorphism::new(Arc::clone(h), m)
}
