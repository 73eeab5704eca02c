//! Built-in demo corpora, so every command can run without input files.
//!
//! Each demo is a [`Corpus`] over one Hopf algebra with a handful of
//! named automorphisms, characters, grouplikes, modules and algebras.
//! The field characteristic can be overridden per run; each demo
//! validates that its structure constants still make sense there.

use std::sync::Arc;

use crate::algebra::{diagonal_algebra, YDAlgebra};
use crate::error::{Error, Result};
use crate::hopf::standard::{
    build_standard, cyclic_group_table, cyclic_labels, cyclic_power_automorphism, sweedler_phi,
    StandardAlgebra,
};
use crate::hopf::{AutPair, Character, GroupLikeElement, HopfAlgebra, HopfAutomorphism};
use crate::io::Corpus;
use crate::linalg::{FieldSpec, LinearMapExact, MatrixExact};
use crate::yd::{build_fvg, build_h_alpha_beta, trivial_module};

pub const DEMO_NAMES: [&str; 4] = ["c2", "c3", "sweedler", "taft3"];

pub fn default_p(demo: &str) -> Option<u64> {
    match demo {
        "c2" => Some(5),
        "c3" => Some(7),
        "sweedler" => Some(5),
        "taft3" => Some(7),
        _ => None,
    }
}

pub fn build_demo(demo: &str, p: Option<u64>) -> Result<Corpus> {
    let p = match p.or_else(|| default_p(demo)) {
        Some(p) => p,
        None => {
            return Err(Error::BadParameter(format!(
                "unknown demo {demo:?}; available: {}",
                DEMO_NAMES.join(", ")
            )))
        }
    };
    match demo {
        "c2" => c2(p),
        "c3" => c3(p),
        "sweedler" => sweedler_demo(p),
        "taft3" => taft3(p),
        other => Err(Error::BadParameter(format!(
            "unknown demo {other:?}; available: {}",
            DEMO_NAMES.join(", ")
        ))),
    }
}

/// One line per demo for `demo list`, deterministic by construction.
pub fn describe_corpus(corpus: &Corpus) -> String {
    let names = |it: Vec<String>| {
        if it.is_empty() {
            "-".to_string()
        } else {
            it.join(", ")
        }
    };
    let (hopf_name, h) = corpus.hopfs.iter().next().expect("demo corpora carry one algebra");
    format!(
        "hopf {hopf_name}: dim {} over {}; automorphisms: {}; characters: {}; grouplikes: {}; modules: {}; algebras: {}",
        h.dim(),
        h.field(),
        names(corpus.automorphisms.keys().cloned().collect()),
        names(corpus.characters.keys().cloned().collect()),
        names(corpus.grouplikes.keys().cloned().collect()),
        names(corpus.modules.keys().cloned().collect()),
        names(corpus.algebras.keys().cloned().collect()),
    )
}

fn basis_grouplike(h: &Arc<HopfAlgebra>, index: usize) -> Result<GroupLikeElement> {
    let mut v = MatrixExact::zeros(h.field(), h.dim(), 1);
    v.set(index, 0, h.field().one())?;
    GroupLikeElement::new(h.clone(), v)
}

fn character_from_values(h: &Arc<HopfAlgebra>, values: &[i64]) -> Result<Character> {
    let f = h.field();
    let mut row = MatrixExact::zeros(f, 1, h.dim());
    for (i, v) in values.iter().enumerate() {
        row.set(0, i, f.from_i64(*v))?;
    }
    Character::new(h.clone(), row)
}

fn s_squared(h: &Arc<HopfAlgebra>) -> Result<HopfAutomorphism> {
    let m = h.antipode().compose(h.antipode())?;
    HopfAutomorphism::new(h.clone(), m.into_matrix())
}

fn smallest_cube_root(p: u64) -> Option<u64> {
    (2..p).find(|q| crate::linalg::field::pow_mod(*q, 3, p) == 1)
}

/// 2-dimensional graded algebra k[x]/(x^2 - 1) with x in degree g: the
/// group acts by the grading sign and the coaction records the degree.
/// H-Azumaya over kC2 in odd characteristic.
fn graded_clifford(h: &Arc<HopfAlgebra>) -> Result<YDAlgebra> {
    let f = h.field();
    let one = f.one();
    let mut action = MatrixExact::zeros(f, 2, 4);
    action.set(0, 0, one.clone())?;
    action.set(1, 1, one.clone())?;
    action.set(0, 2, one.clone())?;
    action.set(1, 3, f.from_i64(-1))?;
    let mut coaction = MatrixExact::zeros(f, 4, 2);
    coaction.set(0, 0, one.clone())?;
    coaction.set(3, 1, one.clone())?;
    let module = crate::yd::YDModule::new(h.clone(), action, coaction, AutPair::identity(h.clone()))?;
    let mut mult = MatrixExact::zeros(f, 2, 4);
    mult.set(0, 0, one.clone())?;
    mult.set(1, 1, one.clone())?;
    mult.set(1, 2, one.clone())?;
    mult.set(0, 3, one)?;
    let mut unit = MatrixExact::zeros(f, 2, 1);
    unit.set(0, 0, f.one())?;
    YDAlgebra::new(module, LinearMapExact::new(mult), LinearMapExact::new(unit))
}

fn group_demo(name: &str, order: usize, p: u64) -> Result<(Corpus, Arc<HopfAlgebra>)> {
    let h = build_standard(&StandardAlgebra::GroupAlgebra {
        field: FieldSpec::prime(p)?,
        table: cyclic_group_table(order),
        labels: Some(cyclic_labels(order)),
    })?;
    let mut corpus = Corpus::default();
    corpus.hopfs.insert(name.to_string(), h.clone());
    corpus.characters.insert("eps".into(), Character::counit(h.clone()));
    corpus.grouplikes.insert("one".into(), GroupLikeElement::unit(h.clone()));
    corpus.grouplikes.insert("g".into(), basis_grouplike(&h, 1)?);
    corpus
        .modules
        .insert("k_triv".into(), trivial_module(&h, 1));
    corpus
        .modules
        .insert("h_id".into(), build_h_alpha_beta(&AutPair::identity(h.clone()))?);
    corpus.algebras.insert("k".into(), diagonal_algebra(&h, 1)?);
    corpus.algebras.insert("kxk".into(), diagonal_algebra(&h, 2)?);
    Ok((corpus, h))
}

fn c2(p: u64) -> Result<Corpus> {
    let (mut corpus, h) = group_demo("c2", 2, p)?;
    if p != 2 {
        corpus
            .characters
            .insert("sign".into(), character_from_values(&h, &[1, -1])?);
        corpus.algebras.insert("graded".into(), graded_clifford(&h)?);
    }
    Ok(corpus)
}

fn c3(p: u64) -> Result<Corpus> {
    let (mut corpus, h) = group_demo("c3", 3, p)?;
    corpus.grouplikes.insert("g2".into(), basis_grouplike(&h, 2)?);
    corpus
        .automorphisms
        .insert("inv".into(), cyclic_power_automorphism(&h, 2)?);
    if let Some(q) = smallest_cube_root(p) {
        let q = q as i64;
        corpus
            .characters
            .insert("omega".into(), character_from_values(&h, &[1, q, q * q])?);
    }
    Ok(corpus)
}

fn sweedler_demo(p: u64) -> Result<Corpus> {
    if p == 2 {
        return Err(Error::BadParameter(
            "the sweedler demo needs characteristic different from 2".into(),
        ));
    }
    let h = build_standard(&StandardAlgebra::Sweedler { p })?;
    let mut corpus = Corpus::default();
    corpus.hopfs.insert("sweedler".to_string(), h.clone());

    let s2 = s_squared(&h)?;
    corpus.automorphisms.insert("s2".into(), s2.clone());
    corpus
        .automorphisms
        .insert("phi2".into(), sweedler_phi(&h, 2 % p)?);
    if p != 3 {
        corpus
            .automorphisms
            .insert("phi3".into(), sweedler_phi(&h, 3 % p)?);
    }

    let eps = Character::counit(h.clone());
    corpus.characters.insert("eps".into(), eps.clone());
    corpus
        .characters
        .insert("sign".into(), character_from_values(&h, &[1, -1, 0, 0])?);

    let g = basis_grouplike(&h, 1)?;
    corpus.grouplikes.insert("one".into(), GroupLikeElement::unit(h.clone()));
    corpus.grouplikes.insert("g".into(), g.clone());

    let id = HopfAutomorphism::identity(h.clone());
    let anti_pair = AutPair::new(s2.clone(), id.clone())?;
    corpus.modules.insert("k_triv".into(), trivial_module(&h, 1));
    corpus
        .modules
        .insert("h_id".into(), build_h_alpha_beta(&AutPair::identity(h.clone()))?);
    corpus
        .modules
        .insert("h_s2_id".into(), build_h_alpha_beta(&anti_pair)?);
    if p != 3 {
        let pair = AutPair::new(
            corpus.automorphisms["phi2"].clone(),
            corpus.automorphisms["phi3"].clone(),
        )?;
        corpus
            .modules
            .insert("h_phi2_phi3".into(), build_h_alpha_beta(&pair)?);
    }
    corpus
        .modules
        .insert("fkg".into(), build_fvg(&anti_pair, &eps, &g, 1)?);

    corpus.algebras.insert("k".into(), diagonal_algebra(&h, 1)?);
    corpus.algebras.insert("kxk".into(), diagonal_algebra(&h, 2)?);
    Ok(corpus)
}

fn taft3(p: u64) -> Result<Corpus> {
    let q = smallest_cube_root(p).ok_or_else(|| {
        Error::BadParameter(format!(
            "the taft3 demo needs a primitive cube root of unity mod {p}; pick p = 1 (mod 3)"
        ))
    })?;
    let h = build_standard(&StandardAlgebra::Taft { n: 3, q, p })?;
    let mut corpus = Corpus::default();
    corpus.hopfs.insert("taft3".to_string(), h.clone());

    let s2 = s_squared(&h)?;
    corpus.automorphisms.insert("s2".into(), s2.clone());
    corpus.characters.insert("eps".into(), Character::counit(h.clone()));
    corpus.grouplikes.insert("one".into(), GroupLikeElement::unit(h.clone()));
    corpus.grouplikes.insert("g".into(), basis_grouplike(&h, 3)?);
    corpus.grouplikes.insert("g2".into(), basis_grouplike(&h, 6)?);

    corpus.modules.insert("k_triv".into(), trivial_module(&h, 1));
    corpus
        .modules
        .insert("h_id".into(), build_h_alpha_beta(&AutPair::identity(h.clone()))?);
    let id = HopfAutomorphism::identity(h.clone());
    corpus
        .modules
        .insert("h_s2_id".into(), build_h_alpha_beta(&AutPair::new(s2, id)?)?);

    corpus.algebras.insert("k".into(), diagonal_algebra(&h, 1)?);
    corpus.algebras.insert("kxk".into(), diagonal_algebra(&h, 2)?);
    Ok(corpus)
}
