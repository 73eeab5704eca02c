//! Definition files: a json schema for shipping algebras, automorphisms
//! and modules as structure constants.
//!
//! All coefficient arrays are indexed inputs-first, outputs-last, with
//! scalars as decimal strings ("3", "-1/2") so the same document works
//! over GF(p) and over the rationals:
//!
//! - `mult[i][j][k]`: coefficient of b_k in b_i b_j
//! - `comult[i][j][k]`: coefficient of b_j (x) b_k in Delta(b_i)
//! - `antipode[i][k]` and automorphism `matrix[i][k]`: coefficient of
//!   b_k in the image of b_i
//! - module `action[h][i][j]`: coefficient of e_j in b_h . e_i
//! - module `coaction[i][j][t]`: coefficient of e_j (x) b_t in rho(e_i)
//!
//! Objects refer to each other by name; names resolve in order of
//! appearance. The automorphism name "id" is reserved and always
//! available. Parsing validates shapes, scalars and references, and
//! constructs every object once; it does not decide mathematical
//! verdicts (a module violating the compatibility law still parses, so
//! the verifier can report its witness).

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::YDAlgebra;
use crate::error::{Error, Result};
use crate::hopf::{AutPair, Character, GroupLikeElement, HopfAlgebra, HopfAutomorphism};
use crate::linalg::{FieldSpec, LinearMapExact, MatrixExact};
use crate::yd::YDModule;

type Cube = Vec<Vec<Vec<String>>>;
type Square = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldDef {
    Prime { p: u64 },
    Rational,
}

impl FieldDef {
    pub fn to_spec(&self) -> Result<FieldSpec> {
        match self {
            FieldDef::Prime { p } => FieldSpec::prime(*p),
            FieldDef::Rational => Ok(FieldSpec::rationals()),
        }
    }

    pub fn from_spec(field: FieldSpec) -> FieldDef {
        match field.modulus() {
            Some(p) => FieldDef::Prime { p },
            None => FieldDef::Rational,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum ObjectDef {
    Hopf {
        name: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        basis_labels: Option<Vec<String>>,
        mult: Cube,
        unit: Vec<String>,
        comult: Cube,
        counit: Vec<String>,
        antipode: Square,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        antipode_inv: Option<Square>,
    },
    Automorphism {
        name: String,
        hopf: String,
        matrix: Square,
    },
    Character {
        name: String,
        hopf: String,
        values: Vec<String>,
    },
    Grouplike {
        name: String,
        hopf: String,
        vector: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        inverse_vector: Option<Vec<String>>,
    },
    YdModule {
        name: String,
        hopf: String,
        alpha: String,
        beta: String,
        action: Cube,
        coaction: Cube,
    },
    YdAlgebra {
        name: String,
        module: String,
        mult: Cube,
        unit: Vec<String>,
    },
}

impl ObjectDef {
    pub fn name(&self) -> &str {
        match self {
            ObjectDef::Hopf { name, .. }
            | ObjectDef::Automorphism { name, .. }
            | ObjectDef::Character { name, .. }
            | ObjectDef::Grouplike { name, .. }
            | ObjectDef::YdModule { name, .. }
            | ObjectDef::YdAlgebra { name, .. } => name,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            ObjectDef::Hopf { .. } => "hopf",
            ObjectDef::Automorphism { .. } => "automorphism",
            ObjectDef::Character { .. } => "character",
            ObjectDef::Grouplike { .. } => "grouplike",
            ObjectDef::YdModule { .. } => "yd_module",
            ObjectDef::YdAlgebra { .. } => "yd_algebra",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefinitionFile {
    pub field: FieldDef,
    pub objects: Vec<ObjectDef>,
}

/// All objects of one document or demo, resolved by name and ready to
/// compute with.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub hopfs: BTreeMap<String, Arc<HopfAlgebra>>,
    pub automorphisms: BTreeMap<String, HopfAutomorphism>,
    pub characters: BTreeMap<String, Character>,
    pub grouplikes: BTreeMap<String, GroupLikeElement>,
    pub modules: BTreeMap<String, YDModule>,
    pub algebras: BTreeMap<String, YDAlgebra>,
}

/// Pick an object by name, or the unique one when no name was given.
pub fn pick<'a, T>(
    map: &'a BTreeMap<String, T>,
    name: Option<&str>,
    what: &str,
) -> Result<(&'a str, &'a T)> {
    let available = || map.keys().cloned().collect::<Vec<_>>().join(", ");
    match name {
        Some(n) => match map.get_key_value(n) {
            Some((k, v)) => Ok((k.as_str(), v)),
            None => Err(Error::BadParameter(format!(
                "no {what} named {n:?}; available: {}",
                available()
            ))),
        },
        None => {
            let mut it = map.iter();
            match (it.next(), it.next()) {
                (Some((k, v)), None) => Ok((k.as_str(), v)),
                (None, _) => Err(Error::BadParameter(format!("no {what} objects available"))),
                _ => Err(Error::BadParameter(format!(
                    "several {what} objects; pick one of: {}",
                    available()
                ))),
            }
        }
    }
}

impl Corpus {
    /// Look up an automorphism of the given parent; "id" is built in.
    pub fn automorphism(&self, parent: &Arc<HopfAlgebra>, name: &str) -> Result<HopfAutomorphism> {
        if name == "id" {
            return Ok(HopfAutomorphism::identity(parent.clone()));
        }
        let (_, a) = pick(&self.automorphisms, Some(name), "automorphism")?;
        crate::hopf::algebra::ensure_same_parent(parent, a.parent(), "automorphism lookup")?;
        Ok(a.clone())
    }

    pub fn pair(&self, parent: &Arc<HopfAlgebra>, alpha: &str, beta: &str) -> Result<AutPair> {
        AutPair::new(self.automorphism(parent, alpha)?, self.automorphism(parent, beta)?)
    }
}

fn loc(index: usize, kind: &str, name: &str) -> String {
    format!("objects[{index}] ({kind} {name:?})")
}

fn reloc(location: &str, e: Error) -> Error {
    match e {
        Error::Parse { message, .. } | Error::Validation { message, .. } => {
            Error::validation(location.to_string(), message)
        }
        other => Error::validation(location.to_string(), other.to_string()),
    }
}

fn entry(field: FieldSpec, s: &str, location: &str, what: &str) -> Result<crate::linalg::FieldElement> {
    field
        .parse_scalar(s)
        .map_err(|e| Error::validation(location.to_string(), format!("{what}: {e}")))
}

fn rect3(cube: &Cube, a: usize, b: usize, c: usize, location: &str, what: &str) -> Result<()> {
    let bad = |detail: String| Error::validation(location.to_string(), format!("{what}: {detail}"));
    if cube.len() != a {
        return Err(bad(format!("expected {a} outer entries, got {}", cube.len())));
    }
    for (i, plane) in cube.iter().enumerate() {
        if plane.len() != b {
            return Err(bad(format!("row {i} has {} entries, expected {b}", plane.len())));
        }
        for (j, row) in plane.iter().enumerate() {
            if row.len() != c {
                return Err(bad(format!(
                    "entry [{i}][{j}] has {} coefficients, expected {c}",
                    row.len()
                )));
            }
        }
    }
    Ok(())
}

fn rect2(sq: &Square, a: usize, b: usize, location: &str, what: &str) -> Result<()> {
    let bad = |detail: String| Error::validation(location.to_string(), format!("{what}: {detail}"));
    if sq.len() != a {
        return Err(bad(format!("expected {a} rows, got {}", sq.len())));
    }
    for (i, row) in sq.iter().enumerate() {
        if row.len() != b {
            return Err(bad(format!("row {i} has {} entries, expected {b}", row.len())));
        }
    }
    Ok(())
}

fn vec_len(v: &[String], n: usize, location: &str, what: &str) -> Result<()> {
    if v.len() != n {
        return Err(Error::validation(
            location.to_string(),
            format!("{what}: expected {n} entries, got {}", v.len()),
        ));
    }
    Ok(())
}

/// mult[i][j][k] -> matrix [k, (i, j)].
fn product_matrix(f: FieldSpec, cube: &Cube, d: usize, location: &str, what: &str) -> Result<MatrixExact> {
    rect3(cube, d, d, d, location, what)?;
    let mut m = MatrixExact::zeros(f, d, d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                m.set(k, i * d + j, entry(f, &cube[i][j][k], location, what)?)?;
            }
        }
    }
    Ok(m)
}

/// comult[i][j][k] -> matrix [(j, k), i].
fn coproduct_matrix(f: FieldSpec, cube: &Cube, d: usize, location: &str, what: &str) -> Result<MatrixExact> {
    rect3(cube, d, d, d, location, what)?;
    let mut m = MatrixExact::zeros(f, d * d, d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                m.set(j * d + k, i, entry(f, &cube[i][j][k], location, what)?)?;
            }
        }
    }
    Ok(m)
}

/// rows[i][k] (image of b_i) -> matrix [k, i].
fn image_matrix(f: FieldSpec, sq: &Square, d: usize, location: &str, what: &str) -> Result<MatrixExact> {
    rect2(sq, d, d, location, what)?;
    let mut m = MatrixExact::zeros(f, d, d);
    for i in 0..d {
        for k in 0..d {
            m.set(k, i, entry(f, &sq[i][k], location, what)?)?;
        }
    }
    Ok(m)
}

fn column_vector(f: FieldSpec, v: &[String], location: &str, what: &str) -> Result<MatrixExact> {
    let mut m = MatrixExact::zeros(f, v.len(), 1);
    for (k, s) in v.iter().enumerate() {
        m.set(k, 0, entry(f, s, location, what)?)?;
    }
    Ok(m)
}

fn row_vector(f: FieldSpec, v: &[String], location: &str, what: &str) -> Result<MatrixExact> {
    let mut m = MatrixExact::zeros(f, 1, v.len());
    for (i, s) in v.iter().enumerate() {
        m.set(0, i, entry(f, s, location, what)?)?;
    }
    Ok(m)
}

/// action[h][i][j] -> matrix [j, (h, i)].
fn action_matrix(
    f: FieldSpec,
    cube: &Cube,
    n: usize,
    d: usize,
    location: &str,
) -> Result<MatrixExact> {
    rect3(cube, n, d, d, location, "action")?;
    let mut m = MatrixExact::zeros(f, d, n * d);
    for h in 0..n {
        for i in 0..d {
            for j in 0..d {
                m.set(j, h * d + i, entry(f, &cube[h][i][j], location, "action")?)?;
            }
        }
    }
    Ok(m)
}

/// coaction[i][j][t] -> matrix [(j, t), i].
fn coaction_matrix(
    f: FieldSpec,
    cube: &Cube,
    n: usize,
    d: usize,
    location: &str,
) -> Result<MatrixExact> {
    rect3(cube, d, d, n, location, "coaction")?;
    let mut m = MatrixExact::zeros(f, d * n, d);
    for i in 0..d {
        for j in 0..d {
            for t in 0..n {
                m.set(j * n + t, i, entry(f, &cube[i][j][t], location, "coaction")?)?;
            }
        }
    }
    Ok(m)
}

/// Resolve a definition into live objects, enforcing every invariant
/// the constructors carry. Objects must be defined before use.
pub fn resolve(def: &DefinitionFile) -> Result<Corpus> {
    let field = def.field.to_spec()?;
    let mut corpus = Corpus::default();
    for (index, obj) in def.objects.iter().enumerate() {
        let location = loc(index, obj.kind(), obj.name());
        let taken = match obj {
            ObjectDef::Hopf { name, .. } => corpus.hopfs.contains_key(name),
            ObjectDef::Automorphism { name, .. } => corpus.automorphisms.contains_key(name),
            ObjectDef::Character { name, .. } => corpus.characters.contains_key(name),
            ObjectDef::Grouplike { name, .. } => corpus.grouplikes.contains_key(name),
            ObjectDef::YdModule { name, .. } => corpus.modules.contains_key(name),
            ObjectDef::YdAlgebra { name, .. } => corpus.algebras.contains_key(name),
        };
        if taken {
            return Err(Error::validation(
                location,
                format!("name {:?} is already taken", obj.name()),
            ));
        }
        match obj {
            ObjectDef::Hopf {
                name,
                basis_labels,
                mult,
                unit,
                comult,
                counit,
                antipode,
                antipode_inv,
            } => {
                let d = mult.len();
                let mult = product_matrix(field, mult, d, &location, "mult")?;
                vec_len(unit, d, &location, "unit")?;
                let unit = column_vector(field, unit, &location, "unit")?;
                let comult = coproduct_matrix(field, comult, d, &location, "comult")?;
                vec_len(counit, d, &location, "counit")?;
                let counit = row_vector(field, counit, &location, "counit")?;
                let antipode = image_matrix(field, antipode, d, &location, "antipode")?;
                let antipode_inv = antipode_inv
                    .as_ref()
                    .map(|s| image_matrix(field, s, d, &location, "antipode_inv"))
                    .transpose()?;
                let labels = match basis_labels {
                    Some(l) => {
                        vec_len(l, d, &location, "basis_labels")?;
                        l.clone()
                    }
                    None => (0..d).map(|i| format!("b{i}")).collect(),
                };
                let h = HopfAlgebra::new(
                    field, mult, unit, comult, counit, antipode, antipode_inv, labels,
                )
                .map_err(|e| reloc(&location, e))?;
                corpus.hopfs.insert(name.clone(), h);
            }
            ObjectDef::Automorphism { name, hopf, matrix } => {
                if name == "id" {
                    return Err(Error::validation(
                        location,
                        "the automorphism name \"id\" is reserved".to_string(),
                    ));
                }
                let (_, parent) =
                    pick(&corpus.hopfs, Some(hopf), "hopf").map_err(|e| reloc(&location, e))?;
                let m = image_matrix(field, matrix, parent.dim(), &location, "matrix")?;
                let a = HopfAutomorphism::new(parent.clone(), m)
                    .map_err(|e| reloc(&location, e))?;
                corpus.automorphisms.insert(name.clone(), a);
            }
            ObjectDef::Character { name, hopf, values } => {
                let (_, parent) =
                    pick(&corpus.hopfs, Some(hopf), "hopf").map_err(|e| reloc(&location, e))?;
                vec_len(values, parent.dim(), &location, "values")?;
                let row = row_vector(field, values, &location, "values")?;
                let c = Character::new(parent.clone(), row).map_err(|e| reloc(&location, e))?;
                corpus.characters.insert(name.clone(), c);
            }
            ObjectDef::Grouplike { name, hopf, vector, inverse_vector } => {
                let (_, parent) =
                    pick(&corpus.hopfs, Some(hopf), "hopf").map_err(|e| reloc(&location, e))?;
                vec_len(vector, parent.dim(), &location, "vector")?;
                let v = column_vector(field, vector, &location, "vector")?;
                let g = GroupLikeElement::new(parent.clone(), v)
                    .map_err(|e| reloc(&location, e))?;
                if let Some(iv) = inverse_vector {
                    vec_len(iv, parent.dim(), &location, "inverse_vector")?;
                    let stated = column_vector(field, iv, &location, "inverse_vector")?;
                    if stated != *g.inverse_vector().matrix() {
                        return Err(Error::validation(
                            location,
                            "inverse_vector: does not invert the grouplike".to_string(),
                        ));
                    }
                }
                corpus.grouplikes.insert(name.clone(), g);
            }
            ObjectDef::YdModule { name, hopf, alpha, beta, action, coaction } => {
                let (_, parent) =
                    pick(&corpus.hopfs, Some(hopf), "hopf").map_err(|e| reloc(&location, e))?;
                let parent = parent.clone();
                let n = parent.dim();
                let d = action.first().map_or(0, Vec::len);
                let act = action_matrix(field, action, n, d, &location)?;
                let coact = coaction_matrix(field, coaction, n, d, &location)?;
                let pair = corpus
                    .pair(&parent, alpha, beta)
                    .map_err(|e| reloc(&location, e))?;
                let m = YDModule::new(parent, act, coact, pair)
                    .map_err(|e| reloc(&location, e))?;
                corpus.modules.insert(name.clone(), m);
            }
            ObjectDef::YdAlgebra { name, module, mult, unit } => {
                let (_, m) = pick(&corpus.modules, Some(module), "yd_module")
                    .map_err(|e| reloc(&location, e))?;
                let d = m.dim();
                let mult = product_matrix(field, mult, d, &location, "mult")?;
                vec_len(unit, d, &location, "unit")?;
                let unit = column_vector(field, unit, &location, "unit")?;
                let a = YDAlgebra::new(
                    m.clone(),
                    LinearMapExact::new(mult),
                    LinearMapExact::new(unit),
                )
                .map_err(|e| reloc(&location, e))?;
                corpus.algebras.insert(name.clone(), a);
            }
        }
    }
    Ok(corpus)
}

/// Parse and fully validate a definition document.
pub fn parse_definition(text: &str) -> Result<DefinitionFile> {
    let def: DefinitionFile = serde_json::from_str(text)
        .map_err(|e| Error::parse("definition document".to_string(), e.to_string()))?;
    resolve(&def)?;
    Ok(def)
}

pub fn read_definition(path: &Path) -> Result<DefinitionFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    parse_definition(&text)
}

/// Canonical serialization: pretty json with a trailing newline,
/// byte-identical for equal inputs.
pub fn serialize_definition(def: &DefinitionFile) -> String {
    let mut s = serde_json::to_string_pretty(def).expect("definition serialization is infallible");
    s.push('\n');
    s
}

pub fn write_definition(path: &Path, def: &DefinitionFile) -> Result<()> {
    std::fs::write(path, serialize_definition(def))
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))
}

fn matrix_to_product_cube(m: &MatrixExact, d: usize) -> Cube {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| m.get(k, i * d + j).to_string()).collect())
                .collect()
        })
        .collect()
}

fn matrix_to_coproduct_cube(m: &MatrixExact, d: usize) -> Cube {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| m.get(j * d + k, i).to_string()).collect())
                .collect()
        })
        .collect()
}

fn matrix_to_image_rows(m: &MatrixExact) -> Square {
    (0..m.cols())
        .map(|i| (0..m.rows()).map(|k| m.get(k, i).to_string()).collect())
        .collect()
}

fn column_to_vec(m: &MatrixExact) -> Vec<String> {
    (0..m.rows()).map(|k| m.get(k, 0).to_string()).collect()
}

fn row_to_vec(m: &MatrixExact) -> Vec<String> {
    (0..m.cols()).map(|i| m.get(0, i).to_string()).collect()
}

pub fn hopf_to_def(name: &str, h: &HopfAlgebra) -> ObjectDef {
    let d = h.dim();
    ObjectDef::Hopf {
        name: name.to_string(),
        basis_labels: Some(h.basis_labels().to_vec()),
        mult: matrix_to_product_cube(h.mult().matrix(), d),
        unit: column_to_vec(h.unit().matrix()),
        comult: matrix_to_coproduct_cube(h.comult().matrix(), d),
        counit: row_to_vec(h.counit().matrix()),
        antipode: matrix_to_image_rows(h.antipode().matrix()),
        antipode_inv: Some(matrix_to_image_rows(h.antipode_inv().matrix())),
    }
}

pub fn automorphism_to_def(name: &str, hopf: &str, a: &HopfAutomorphism) -> ObjectDef {
    ObjectDef::Automorphism {
        name: name.to_string(),
        hopf: hopf.to_string(),
        matrix: matrix_to_image_rows(a.matrix().matrix()),
    }
}

pub fn character_to_def(name: &str, hopf: &str, c: &Character) -> ObjectDef {
    ObjectDef::Character {
        name: name.to_string(),
        hopf: hopf.to_string(),
        values: row_to_vec(c.row().matrix()),
    }
}

pub fn grouplike_to_def(name: &str, hopf: &str, g: &GroupLikeElement) -> ObjectDef {
    ObjectDef::Grouplike {
        name: name.to_string(),
        hopf: hopf.to_string(),
        vector: column_to_vec(g.vector().matrix()),
        inverse_vector: Some(column_to_vec(g.inverse_vector().matrix())),
    }
}

/// `alpha`/`beta` are the names the module's pair goes by in the same
/// document ("id" for the identity).
pub fn module_to_def(
    name: &str,
    hopf: &str,
    alpha: &str,
    beta: &str,
    m: &YDModule,
) -> ObjectDef {
    let n = m.hopf().dim();
    let d = m.dim();
    let act = m.action().matrix();
    let coact = m.coaction().matrix();
    ObjectDef::YdModule {
        name: name.to_string(),
        hopf: hopf.to_string(),
        alpha: alpha.to_string(),
        beta: beta.to_string(),
        action: (0..n)
            .map(|h| {
                (0..d)
                    .map(|i| (0..d).map(|j| act.get(j, h * d + i).to_string()).collect())
                    .collect()
            })
            .collect(),
        coaction: (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..n).map(|t| coact.get(j * n + t, i).to_string()).collect())
                    .collect()
            })
            .collect(),
    }
}

pub fn algebra_to_def(name: &str, module: &str, a: &YDAlgebra) -> ObjectDef {
    ObjectDef::YdAlgebra {
        name: name.to_string(),
        module: module.to_string(),
        mult: matrix_to_product_cube(a.mult().matrix(), a.dim()),
        unit: column_to_vec(a.unit().matrix()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::standard::{build_standard, sweedler_phi, StandardAlgebra};
    use crate::hopf::verify_hopf;
    use crate::yd::{build_h_alpha_beta, check_yd};

    fn sweedler_def() -> DefinitionFile {
        let h = build_standard(&StandardAlgebra::Sweedler { p: 5 }).unwrap();
        let phi2 = sweedler_phi(&h, 2).unwrap();
        let pair = AutPair::new(phi2.clone(), HopfAutomorphism::identity(h.clone())).unwrap();
        let m = build_h_alpha_beta(&pair).unwrap();
        DefinitionFile {
            field: FieldDef::Prime { p: 5 },
            objects: vec![
                hopf_to_def("h4", &h),
                automorphism_to_def("phi2", "h4", &phi2),
                character_to_def("eps", "h4", &Character::counit(h.clone())),
                module_to_def("h_phi2_id", "h4", "phi2", "id", &m),
            ],
        }
    }

    #[test]
    fn serialize_parse_round_trips_and_objects_verify() {
        let def = sweedler_def();
        let text = serialize_definition(&def);
        let back = parse_definition(&text).unwrap();
        assert_eq!(back, def);
        assert_eq!(serialize_definition(&back), text);

        let corpus = resolve(&back).unwrap();
        let h = &corpus.hopfs["h4"];
        assert!(verify_hopf(h).passed());
        assert!(check_yd(&corpus.modules["h_phi2_id"]).unwrap().passed());
    }

    #[test]
    fn three_entry_unit_vector_is_a_validation_error_naming_the_field() {
        let mut def = sweedler_def();
        if let ObjectDef::Hopf { unit, .. } = &mut def.objects[0] {
            unit.pop();
        }
        let err = resolve(&def).unwrap_err();
        match err {
            Error::Validation { location, message } => {
                assert!(location.contains("hopf"), "{location}");
                assert!(message.contains("unit"), "{message}");
            }
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn empty_object_list_is_valid() {
        let def = parse_definition(r#"{"field": {"kind": "prime", "p": 5}, "objects": []}"#)
            .unwrap();
        assert!(def.objects.is_empty());
        let corpus = resolve(&def).unwrap();
        assert!(corpus.hopfs.is_empty());
    }

    #[test]
    fn malformed_document_is_a_parse_error() {
        let err = parse_definition("{ this is not json").unwrap_err();
        match err {
            Error::Parse { location, message } => {
                assert_eq!(location, "definition document");
                assert!(message.contains("line"), "{message}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn unresolved_and_duplicate_names_are_rejected() {
        let mut def = sweedler_def();
        if let ObjectDef::Automorphism { hopf, .. } = &mut def.objects[1] {
            *hopf = "missing".to_string();
        }
        let err = resolve(&def).unwrap_err();
        assert!(matches!(err, Error::Validation { .. }), "{err:?}");
        assert!(err.to_string().contains("missing"), "{err}");

        let mut def = sweedler_def();
        let dup = def.objects[0].clone();
        def.objects.push(dup);
        let err = resolve(&def).unwrap_err();
        assert!(err.to_string().contains("already taken"), "{err}");

        let mut def = sweedler_def();
        if let ObjectDef::Automorphism { name, .. } = &mut def.objects[1] {
            *name = "id".to_string();
        }
        let err = resolve(&def).unwrap_err();
        assert!(err.to_string().contains("reserved"), "{err}");
    }

    #[test]
    fn bad_scalars_and_bad_inverse_vectors_are_rejected() {
        let mut def = sweedler_def();
        if let ObjectDef::Hopf { counit, .. } = &mut def.objects[0] {
            counit[0] = "banana".to_string();
        }
        let err = resolve(&def).unwrap_err();
        assert!(err.to_string().contains("counit"), "{err}");

        // A fractional scalar reduces into GF(5): 3/3 = 3 * 3^{-1} = 1.
        let mut def = sweedler_def();
        if let ObjectDef::Character { values, .. } = &mut def.objects[2] {
            values[0] = "3/3".to_string();
        }
        let corpus = resolve(&def).unwrap();
        assert!(corpus.characters["eps"].value(0).is_one());

        let h = build_standard(&StandardAlgebra::Sweedler { p: 5 }).unwrap();
        let mut v = MatrixExact::zeros(h.field(), 4, 1);
        v.set(1, 0, h.field().one()).unwrap();
        let g = GroupLikeElement::new(h.clone(), v).unwrap();
        let mut def = sweedler_def();
        let mut gd = grouplike_to_def("g", "h4", &g);
        if let ObjectDef::Grouplike { inverse_vector, .. } = &mut gd {
            *inverse_vector = Some(vec!["1".into(), "1".into(), "0".into(), "0".into()]);
        }
        def.objects.push(gd);
        let err = resolve(&def).unwrap_err();
        assert!(err.to_string().contains("inverse_vector"), "{err}");
    }

    #[test]
    fn incompatible_module_parses_and_keeps_its_witness() {
        // Plain left regular action with the regular coaction is not
        // compatible over the identity pair; the checker, not the
        // parser, must say so.
        let h = build_standard(&StandardAlgebra::Sweedler { p: 5 }).unwrap();
        let hd = hopf_to_def("h4", &h);
        let (mult, comult) = match &hd {
            ObjectDef::Hopf { mult, comult, .. } => (mult.clone(), comult.clone()),
            _ => unreachable!(),
        };
        let def = DefinitionFile {
            field: FieldDef::Prime { p: 5 },
            objects: vec![
                hd,
                ObjectDef::YdModule {
                    name: "broken".to_string(),
                    hopf: "h4".to_string(),
                    alpha: "id".to_string(),
                    beta: "id".to_string(),
                    action: mult,
                    coaction: comult,
                },
            ],
        };
        let corpus = resolve(&def).unwrap();
        let report = check_yd(&corpus.modules["broken"]).unwrap();
        assert!(!report.passed());
        assert_eq!(report.ab.witness, Some(vec![1, 0]));
    }

    #[test]
    fn rational_field_documents_parse() {
        let h = crate::hopf::standard::group_algebra(
            FieldSpec::rationals(),
            &crate::hopf::standard::cyclic_group_table(2),
            None,
        )
        .unwrap();
        let def = DefinitionFile {
            field: FieldDef::Rational,
            objects: vec![hopf_to_def("c2", &h)],
        };
        let text = serialize_definition(&def);
        let back = parse_definition(&text).unwrap();
        assert_eq!(back, def);
        assert!(verify_hopf(&resolve(&back).unwrap().hopfs["c2"]).passed());
    }
}
