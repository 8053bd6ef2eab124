//! JSON interchange for algebras, extended structures, Hopf data and
//! classification reports. Scalars travel as polynomial strings in `z`
//! against the declared conductor; round-trips are bit-exact.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{FrobexError, Result};
use crate::extended::{Classification, ExtFrobAlgebra};
use crate::frobenius::{AlgebraData, CoalgebraData, FrobAlgebra};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, Vector};
use crate::scalars::{CycField, CycScalar};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FieldJson {
    pub conductor: u64,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct AlgebraJson {
    pub field: FieldJson,
    pub dim: usize,
    pub labels: Vec<String>,
    /// d rows of d^2 scalar strings.
    pub m: Vec<Vec<String>>,
    pub u: Vec<String>,
    /// d^2 rows of d scalar strings.
    pub delta: Vec<Vec<String>>,
    pub eps: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ExtendedJson {
    #[serde(flatten)]
    pub algebra: AlgebraJson,
    pub phi: Vec<Vec<String>>,
    pub theta: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct HopfJson {
    pub field: FieldJson,
    pub dim: usize,
    pub labels: Vec<String>,
    pub m: Vec<Vec<String>>,
    pub u: Vec<String>,
    pub delta_h: Vec<Vec<String>>,
    pub eps_h: Vec<String>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<String>>,
    #[serde(rename = "S_inv")]
    pub s_inv: Vec<Vec<String>>,
    #[serde(rename = "Lambda")]
    pub integral: Vec<String>,
    pub lambda: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ClassificationJson {
    pub structures: Vec<StructureJson>,
    pub classes: Vec<Vec<usize>>,
    pub unresolved: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct StructureJson {
    pub phi: Vec<Vec<String>>,
    pub theta: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub free_directions: Vec<Vec<String>>,
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_row_strings()
}

fn vector_strings(v: &Vector) -> Vec<String> {
    v.to_strings()
}

pub fn parse_matrix(
    field: &Arc<CycField>,
    rows: &[Vec<String>],
    expect_rows: usize,
    expect_cols: usize,
) -> Result<Matrix> {
    if rows.len() != expect_rows || rows.iter().any(|r| r.len() != expect_cols) {
        return Err(FrobexError::ShapeMismatch {
            what: format!("expected {expect_rows} x {expect_cols} scalar strings"),
        });
    }
    let mut m = Matrix::zeros(field, expect_rows, expect_cols);
    for (r, row) in rows.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            m.set(r, c, CycScalar::parse_poly(field, s)?);
        }
    }
    Ok(m)
}

pub fn parse_vector(field: &Arc<CycField>, items: &[String], expect: usize) -> Result<Vector> {
    if items.len() != expect {
        return Err(FrobexError::ShapeMismatch {
            what: format!("expected {expect} scalar strings"),
        });
    }
    let entries = items
        .iter()
        .map(|s| CycScalar::parse_poly(field, s))
        .collect::<Result<Vec<_>>>()?;
    Vector::new(field, entries)
}

pub fn frob_to_json(fa: &FrobAlgebra) -> AlgebraJson {
    AlgebraJson {
        field: FieldJson {
            conductor: fa.field().conductor(),
        },
        dim: fa.dim(),
        labels: fa.labels().to_vec(),
        m: matrix_strings(fa.m()),
        u: vector_strings(fa.u()),
        delta: matrix_strings(fa.delta()),
        eps: fa.eps().to_row_strings().remove(0),
    }
}

pub fn frob_from_json(j: &AlgebraJson) -> Result<FrobAlgebra> {
    let field = CycField::new(j.field.conductor)?;
    let d = j.dim;
    if j.labels.len() != d {
        return Err(FrobexError::ShapeMismatch {
            what: "label count must equal dim".into(),
        });
    }
    let m = parse_matrix(&field, &j.m, d, d * d)?;
    let u = parse_vector(&field, &j.u, d)?;
    let algebra = AlgebraData::new(&field, j.labels.clone(), m, u)?;
    let delta = parse_matrix(&field, &j.delta, d * d, d)?;
    let eps = parse_matrix(&field, &[j.eps.clone()], 1, d)?;
    let coalgebra = CoalgebraData::new(&field, d, delta, eps)?;
    FrobAlgebra::new(algebra, coalgebra)
}

pub fn ext_to_json(e: &ExtFrobAlgebra) -> ExtendedJson {
    ExtendedJson {
        algebra: frob_to_json(&e.frob),
        phi: matrix_strings(e.phi()),
        theta: vector_strings(e.theta()),
    }
}

pub fn ext_from_json(j: &ExtendedJson) -> Result<ExtFrobAlgebra> {
    let frob = frob_from_json(&j.algebra)?;
    let field = frob.field().clone();
    let d = frob.dim();
    let phi = parse_matrix(&field, &j.phi, d, d)?;
    let theta = parse_vector(&field, &j.theta, d)?;
    ExtFrobAlgebra::new(frob, phi, theta)
}

pub fn hopf_to_json(h: &HopfAlgebra) -> HopfJson {
    HopfJson {
        field: FieldJson {
            conductor: h.field().conductor(),
        },
        dim: h.dim(),
        labels: h.labels().to_vec(),
        m: matrix_strings(&h.m),
        u: vector_strings(&h.u),
        delta_h: matrix_strings(&h.delta_h),
        eps_h: h.eps_h.to_row_strings().remove(0),
        s: matrix_strings(&h.s),
        s_inv: matrix_strings(&h.s_inv),
        integral: vector_strings(&h.integral),
        lambda: h.cointegral.to_row_strings().remove(0),
    }
}

pub fn hopf_from_json(j: &HopfJson) -> Result<HopfAlgebra> {
    let field = CycField::new(j.field.conductor)?;
    let d = j.dim;
    HopfAlgebra::new(
        &field,
        j.labels.clone(),
        parse_matrix(&field, &j.m, d, d * d)?,
        parse_vector(&field, &j.u, d)?,
        parse_matrix(&field, &j.delta_h, d * d, d)?,
        parse_matrix(&field, &[j.eps_h.clone()], 1, d)?,
        parse_matrix(&field, &j.s, d, d)?,
        parse_matrix(&field, &j.s_inv, d, d)?,
        parse_vector(&field, &j.integral, d)?,
        parse_matrix(&field, &[j.lambda.clone()], 1, d)?,
    )
}

pub fn classification_to_json(c: &Classification) -> ClassificationJson {
    ClassificationJson {
        structures: c
            .structures
            .iter()
            .map(|s| StructureJson {
                phi: matrix_strings(&s.phi),
                theta: vector_strings(&s.theta),
                free_directions: s.free_directions.iter().map(vector_strings).collect(),
            })
            .collect(),
        classes: c.classes.clone(),
        unresolved: c.unresolved.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn algebra_json_round_trip_is_bit_exact() {
        let field = CycField::new(8).unwrap();
        let g = catalog::GroupTable::cyclic(2).unwrap();
        let fa = catalog::group_algebra(&g, &field).unwrap();
        let j = frob_to_json(&fa);
        let text = serde_json::to_string_pretty(&j).unwrap();
        let back: AlgebraJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        let fa2 = frob_from_json(&back).unwrap();
        assert_eq!(fa2, fa);
        // serializing again yields identical bytes
        assert_eq!(serde_json::to_string_pretty(&frob_to_json(&fa2)).unwrap(), text);
    }

    #[test]
    fn extended_json_round_trip() {
        let field = CycField::new(8).unwrap();
        let e = catalog::family_structures("kC2", &field)
            .unwrap()
            .unwrap()
            .remove(0);
        let j = ext_to_json(&e);
        let text = serde_json::to_string_pretty(&j).unwrap();
        let back: ExtendedJson = serde_json::from_str(&text).unwrap();
        let e2 = ext_from_json(&back).unwrap();
        assert_eq!(e2, e);
    }

    #[test]
    fn hopf_json_round_trip() {
        let field = CycField::new(1).unwrap();
        let g = catalog::GroupTable::cyclic(3).unwrap();
        let h = crate::hopf::group_hopf(&g, &field).unwrap();
        let j = hopf_to_json(&h);
        let text = serde_json::to_string_pretty(&j).unwrap();
        let back: HopfJson = serde_json::from_str(&text).unwrap();
        let h2 = hopf_from_json(&back).unwrap();
        assert_eq!(h2, h);
    }
}
