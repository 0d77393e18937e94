//! JSON interchange formats: algebra files, extension triples, isoclinism
//! witnesses, and matrix blocks. All coefficients travel as canonical
//! strings so both field kinds share one schema.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Homomorphism};
use crate::error::Error;
use crate::extensions::Extension;
use crate::isoclinism::{self, IsoclinismWitness};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::FieldSpec;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldFile {
    Q,
    Fp { p: u64 },
}

impl From<FieldSpec> for FieldFile {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Q => FieldFile::Q,
            FieldSpec::Fp(p) => FieldFile::Fp { p },
        }
    }
}

impl From<FieldFile> for FieldSpec {
    fn from(f: FieldFile) -> Self {
        match f {
            FieldFile::Q => FieldSpec::Q,
            FieldFile::Fp { p } => FieldSpec::Fp(p),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketTerm {
    pub basis: usize,
    pub coef: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub args: Vec<usize>,
    pub value: Vec<BracketTerm>,
}

/// The on-disk algebra format. Unlisted bracket tuples are zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub schema_version: u32,
    pub name: String,
    pub arity: usize,
    pub dim: usize,
    pub basis: Vec<String>,
    pub field: FieldFile,
    pub brackets: Vec<BracketEntry>,
}

pub fn algebra_to_file(a: &Algebra) -> AlgebraFile {
    let brackets = a
        .tensor()
        .iter()
        .map(|(args, v)| BracketEntry {
            args: args.clone(),
            value: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| BracketTerm {
                    basis: i,
                    coef: c.to_string(),
                })
                .collect(),
        })
        .collect();
    AlgebraFile {
        schema_version: SCHEMA_VERSION,
        name: a.name().to_string(),
        arity: a.arity(),
        dim: a.dim(),
        basis: a.basis_labels().to_vec(),
        field: a.field().into(),
        brackets,
    }
}

pub fn algebra_from_file(f: &AlgebraFile) -> Result<Algebra, Error> {
    if f.schema_version != SCHEMA_VERSION {
        return Err(Error::BadFile(format!(
            "unsupported schema_version {} (expected {SCHEMA_VERSION})",
            f.schema_version
        )));
    }
    let field: FieldSpec = f.field.into();
    let mut tensor: BTreeMap<Vec<usize>, Vector> = BTreeMap::new();
    for entry in &f.brackets {
        if tensor.contains_key(&entry.args) {
            return Err(Error::BadFile(format!(
                "duplicate bracket tuple {:?}",
                entry.args
            )));
        }
        let mut v = vec![field.zero(); f.dim];
        for term in &entry.value {
            if term.basis >= f.dim {
                return Err(Error::BadFile(format!(
                    "basis index {} out of range in value for {:?}",
                    term.basis, entry.args
                )));
            }
            v[term.basis] = field.parse(&term.coef)?;
        }
        tensor.insert(entry.args.clone(), v);
    }
    Algebra::new(f.name.clone(), f.arity, f.dim, field, f.basis.clone(), tensor)
}

pub fn algebra_to_json(a: &Algebra, pretty: bool) -> String {
    let f = algebra_to_file(a);
    if pretty {
        serde_json::to_string_pretty(&f).unwrap()
    } else {
        serde_json::to_string(&f).unwrap()
    }
}

pub fn algebra_from_json(s: &str) -> Result<Algebra, Error> {
    let f: AlgebraFile =
        serde_json::from_str(s).map_err(|e| Error::BadFile(e.to_string()))?;
    algebra_from_file(&f)
}

/// Dense matrix block with string entries, row-major.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

pub fn matrix_to_file(m: &Matrix) -> MatrixFile {
    MatrixFile {
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|r| m.row(r).iter().map(|c| c.to_string()).collect())
            .collect(),
    }
}

pub fn matrix_from_file(field: FieldSpec, f: &MatrixFile) -> Result<Matrix, Error> {
    if f.entries.len() != f.rows {
        return Err(Error::BadFile(format!(
            "matrix declares {} rows but has {}",
            f.rows,
            f.entries.len()
        )));
    }
    let mut rows = Vec::with_capacity(f.rows);
    for row in &f.entries {
        if row.len() != f.cols {
            return Err(Error::BadFile(format!(
                "matrix declares {} cols but a row has {}",
                f.cols,
                row.len()
            )));
        }
        let mut v = Vec::with_capacity(f.cols);
        for s in row {
            v.push(field.parse(s)?);
        }
        rows.push(v);
    }
    Ok(Matrix::from_rows(field, f.cols, rows))
}

/// Witness file: the two matrices plus the coordinate conventions (pivot
/// lists) they are written against, for both algebras.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessFile {
    pub schema_version: u32,
    pub eta: MatrixFile,
    pub xi: MatrixFile,
    pub left_factor_reps: Vec<usize>,
    pub left_commutator_pivots: Vec<usize>,
    pub right_factor_reps: Vec<usize>,
    pub right_commutator_pivots: Vec<usize>,
}

pub fn witness_to_file(qa: &Algebra, pa: &Algebra, w: &IsoclinismWitness) -> WitnessFile {
    let fq = isoclinism::factor_data(qa);
    let fp = isoclinism::factor_data(pa);
    WitnessFile {
        schema_version: SCHEMA_VERSION,
        eta: matrix_to_file(&w.eta),
        xi: matrix_to_file(&w.xi),
        left_factor_reps: fq.factor.rep_indices.clone(),
        left_commutator_pivots: fq.commutator.pivots(),
        right_factor_reps: fp.factor.rep_indices.clone(),
        right_commutator_pivots: fp.commutator.pivots(),
    }
}

/// Rebuilds a witness and cross-checks the recorded coordinate conventions
/// against the ones this code computes for the two algebras.
pub fn witness_from_file(
    qa: &Algebra,
    pa: &Algebra,
    f: &WitnessFile,
) -> Result<IsoclinismWitness, Error> {
    if f.schema_version != SCHEMA_VERSION {
        return Err(Error::BadFile(format!(
            "unsupported schema_version {} (expected {SCHEMA_VERSION})",
            f.schema_version
        )));
    }
    let fq = isoclinism::factor_data(qa);
    let fp = isoclinism::factor_data(pa);
    if f.left_factor_reps != fq.factor.rep_indices
        || f.left_commutator_pivots != fq.commutator.pivots()
        || f.right_factor_reps != fp.factor.rep_indices
        || f.right_commutator_pivots != fp.commutator.pivots()
    {
        return Err(Error::WitnessShape(
            "recorded pivot lists do not match the computed subspaces".into(),
        ));
    }
    Ok(IsoclinismWitness {
        eta: matrix_from_file(qa.field(), &f.eta)?,
        xi: matrix_from_file(qa.field(), &f.xi)?,
    })
}

/// Extension triple: total algebra, kernel basis rows, projection matrix.
/// The quotient is reconstructed canonically from total and kernel on load.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtensionFile {
    pub schema_version: u32,
    pub total: AlgebraFile,
    pub kernel_basis: Vec<Vec<String>>,
    pub projection: MatrixFile,
}

pub fn extension_to_file(e: &Extension) -> ExtensionFile {
    ExtensionFile {
        schema_version: SCHEMA_VERSION,
        total: algebra_to_file(e.total()),
        kernel_basis: e
            .kernel_ideal()
            .basis_vectors()
            .iter()
            .map(|v| v.iter().map(|c| c.to_string()).collect())
            .collect(),
        projection: matrix_to_file(e.projection().matrix()),
    }
}

pub fn extension_from_file(f: &ExtensionFile) -> Result<Extension, Error> {
    let total = algebra_from_file(&f.total)?;
    let field = total.field();
    let mut gens = Vec::new();
    for row in &f.kernel_basis {
        if row.len() != total.dim() {
            return Err(Error::BadFile(format!(
                "kernel vector length {} != dim {}",
                row.len(),
                total.dim()
            )));
        }
        let mut v = Vec::with_capacity(row.len());
        for s in row {
            v.push(field.parse(s)?);
        }
        gens.push(v);
    }
    let kernel = Subspace::from_generators(field, total.dim(), gens);
    let canonical = Extension::from_quotient(&total, &kernel)?;
    let proj_matrix = matrix_from_file(field, &f.projection)?;
    let proj = Homomorphism::new(total.clone(), canonical.quotient().clone(), proj_matrix)?;
    Extension::new(total, kernel, proj)
}

pub fn extension_to_json(e: &Extension, pretty: bool) -> String {
    let f = extension_to_file(e);
    if pretty {
        serde_json::to_string_pretty(&f).unwrap()
    } else {
        serde_json::to_string(&f).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::extensions;

    #[test]
    fn round_trip_all_catalog_entries() {
        for id in catalog::list() {
            let a = catalog::get(&id).unwrap().algebra;
            let back = algebra_from_json(&algebra_to_json(&a, false)).unwrap();
            assert_eq!(a, back, "{id}");
            let back_pretty = algebra_from_json(&algebra_to_json(&a, true)).unwrap();
            assert_eq!(a, back_pretty, "{id}");
        }
    }

    #[test]
    fn round_trip_over_fp() {
        let a = catalog::get_over("paper-ex-1", FieldSpec::Fp(7))
            .unwrap()
            .algebra;
        let back = algebra_from_json(&algebra_to_json(&a, false)).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn rejects_duplicate_tuples() {
        let a = catalog::get("sq(1)").unwrap().algebra;
        let mut f = algebra_to_file(&a);
        let dup = f.brackets[0].clone();
        f.brackets.push(dup);
        assert!(matches!(algebra_from_file(&f), Err(Error::BadFile(_))));
    }

    #[test]
    fn rejects_wrong_schema_version() {
        let a = catalog::get("sq(1)").unwrap().algebra;
        let mut f = algebra_to_file(&a);
        f.schema_version = 99;
        assert!(algebra_from_file(&f).is_err());
    }

    #[test]
    fn rejects_malformed_json_with_position() {
        let err = algebra_from_json("{ not json").unwrap_err();
        let msg = format!("{err}");
        assert!(msg.contains("line"), "{msg}");
    }

    #[test]
    fn rejects_bad_coefficient() {
        let a = catalog::get("sq(1)").unwrap().algebra;
        let mut f = algebra_to_file(&a);
        f.brackets[0].value[0].coef = "1/0".into();
        assert!(matches!(algebra_from_file(&f), Err(Error::BadScalar(_))));
    }

    #[test]
    fn matrix_round_trip() {
        let m = Matrix::from_rows(
            FieldSpec::Q,
            2,
            vec![
                vec![FieldSpec::Q.parse("1/2").unwrap(), FieldSpec::Q.from_i64(-3)],
                vec![FieldSpec::Q.zero(), FieldSpec::Q.one()],
            ],
        );
        let f = matrix_to_file(&m);
        let back = matrix_from_file(FieldSpec::Q, &f).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn witness_round_trip_identity() {
        let a = catalog::get("sq(1)").unwrap().algebra;
        let w = IsoclinismWitness::identity(&a);
        let f = witness_to_file(&a, &a, &w);
        let s = serde_json::to_string(&f).unwrap();
        let f2: WitnessFile = serde_json::from_str(&s).unwrap();
        let back = witness_from_file(&a, &a, &f2).unwrap();
        assert_eq!(back.eta, w.eta);
        assert_eq!(back.xi, w.xi);
    }

    #[test]
    fn witness_pivot_mismatch_rejected() {
        let a = catalog::get("sq(1)").unwrap().algebra;
        let b = catalog::get("abelian(2,2)").unwrap().algebra;
        let w = IsoclinismWitness::identity(&a);
        let f = witness_to_file(&a, &a, &w);
        assert!(matches!(
            witness_from_file(&b, &b, &f),
            Err(Error::WitnessShape(_))
        ));
    }

    #[test]
    fn extension_round_trip() {
        let e = extensions::abelian_cover(FieldSpec::Q, 2);
        let s = extension_to_json(&e, false);
        let f: ExtensionFile = serde_json::from_str(&s).unwrap();
        let back = extension_from_file(&f).unwrap();
        assert_eq!(back.total(), e.total());
        assert_eq!(back.kernel_ideal(), e.kernel_ideal());
        assert_eq!(back.projection().matrix(), e.projection().matrix());
    }
}
