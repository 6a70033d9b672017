//! JSON documents for algebras and automorphisms.
//!
//! Scalars are written in the `cyc(N)[c0,...]` form; plain rationals are also accepted
//! on input and normalized.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::automorphisms::{family_arc, AutError, AutMorphism, Generator};
use crate::exactfield::CycScalar;
use crate::families::grassmann::Mask;
use crate::families::{Family, FamilySpec, GrassmannPoly, LambdaMap};
use crate::linalg::Matrix;
use crate::superalgebra::{LieSuperalgebra, Parity};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{field}: {reason}")]
    Field { field: String, reason: String },
    #[error(transparent)]
    Aut(#[from] AutError),
}

fn field_err(field: impl Into<String>, reason: impl ToString) -> IoError {
    IoError::Field { field: field.into(), reason: reason.to_string() }
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldRecord {
    pub conductor: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisRecord {
    pub name: String,
    pub parity: u8,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermRecord {
    pub k: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermRecord>,
}

/// Brackets `[b_i, b_j]` for `i ≤ j`; the rest follow from super-skew symmetry.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub field: FieldRecord,
    pub basis: Vec<BasisRecord>,
    pub brackets: Vec<BracketRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonomialRecord {
    pub monomial: String,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "gen")]
pub enum GeneratorRecord {
    #[serde(rename = "Ad")]
    Ad {
        #[serde(rename = "X")]
        x: Vec<Vec<String>>,
        #[serde(rename = "Y")]
        y: Vec<Vec<String>>,
    },
    #[serde(rename = "j")]
    J { lambda: String },
    #[serde(rename = "rho")]
    Rho {
        #[serde(rename = "Z")]
        z: Vec<Vec<String>>,
    },
    #[serde(rename = "tau")]
    Tau,
    #[serde(rename = "pi")]
    Pi,
    #[serde(rename = "sigma_q")]
    SigmaQ,
    #[serde(rename = "r")]
    R,
    #[serde(rename = "theta")]
    Theta { perm: [usize; 3], lambda: String },
    #[serde(rename = "AdD")]
    AdD {
        #[serde(rename = "X1")]
        x1: Vec<Vec<String>>,
        #[serde(rename = "X2")]
        x2: Vec<Vec<String>>,
        #[serde(rename = "X3")]
        x3: Vec<Vec<String>>,
    },
    #[serde(rename = "autlambda")]
    AutLambda { images: Vec<Vec<MonomialRecord>> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AutomorphismDocument {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<GeneratorRecord>>,
}

fn scalar_text(c: &CycScalar) -> String {
    c.to_cyc_string()
}

fn parse_scalar(field: &str, s: &str) -> Result<CycScalar, IoError> {
    s.parse().map_err(|e| field_err(field, e))
}

fn matrix_text(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(scalar_text).collect()).collect()
}

fn parse_matrix(field: &str, rows: &[Vec<String>]) -> Result<Matrix, IoError> {
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, s)| parse_scalar(&format!("{field}[{i}][{j}]"), s))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows).map_err(|e| field_err(field, e))
}

fn parse_monomial(field: &str, s: &str) -> Result<Mask, IoError> {
    let s = s.trim();
    if s == "1" {
        return Ok(0);
    }
    let mut mask: Mask = 0;
    for part in s.split('x').skip_while(|p| p.is_empty()) {
        let i: u32 = part.parse().map_err(|_| field_err(field, format!("invalid monomial `{s}`")))?;
        if i == 0 || i > 32 || mask & (1 << (i - 1)) != 0 {
            return Err(field_err(field, format!("invalid monomial `{s}`")));
        }
        mask |= 1 << (i - 1);
    }
    if mask == 0 {
        return Err(field_err(field, format!("invalid monomial `{s}`")));
    }
    Ok(mask)
}

fn monomial_text(mask: Mask) -> String {
    crate::families::grassmann::monomial_name(mask)
}

impl AlgebraDocument {
    pub fn from_algebra(g: &LieSuperalgebra, family: Option<&FamilySpec>) -> Self {
        let basis = g
            .names()
            .iter()
            .zip(g.parities())
            .map(|(name, p)| BasisRecord { name: name.clone(), parity: p.bit() })
            .collect();
        let mut brackets = Vec::new();
        for i in 0..g.dim() {
            for j in i..g.dim() {
                let terms = g.structure(i, j);
                if !terms.is_empty() {
                    let terms = terms.iter().map(|(k, c)| TermRecord { k: *k, coeff: scalar_text(c) }).collect();
                    brackets.push(BracketRecord { i, j, terms });
                }
            }
        }
        AlgebraDocument {
            family: family.map(|s| s.to_string()),
            field: FieldRecord { conductor: g.conductor() },
            basis,
            brackets,
        }
    }

    pub fn to_algebra(&self) -> Result<LieSuperalgebra, IoError> {
        let names = self.basis.iter().map(|b| b.name.clone()).collect();
        let parity = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| match b.parity {
                0 | 1 => Ok(Parity::from_bit(b.parity)),
                p => Err(field_err(format!("basis[{i}].parity"), format!("expected 0 or 1, got {p}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut g = LieSuperalgebra::new(names, parity, self.field.conductor).map_err(|e| field_err("basis", e))?;
        for (b, rec) in self.brackets.iter().enumerate() {
            let at = format!("brackets[{b}]");
            if rec.i > rec.j {
                return Err(field_err(&at, format!("listed with i = {} > j = {}", rec.i, rec.j)));
            }
            let terms = rec
                .terms
                .iter()
                .enumerate()
                .map(|(t, term)| Ok((term.k, parse_scalar(&format!("{at}.terms[{t}].coeff"), &term.coeff)?)))
                .collect::<Result<Vec<_>, IoError>>()?;
            g.set_bracket(rec.i, rec.j, terms).map_err(|e| field_err(&at, e))?;
        }
        Ok(g)
    }

    pub fn family_spec(&self) -> Result<Option<FamilySpec>, IoError> {
        self.family.as_deref().map(|s| s.parse().map_err(|e| field_err("family", e))).transpose()
    }

    /// The catalog family named by the document, checked against its structure constants.
    pub fn to_family(&self) -> Result<Arc<Family>, IoError> {
        let spec = self.family_spec()?.ok_or_else(|| field_err("family", "missing; a catalog family is required"))?;
        let family = family_arc(&spec)?;
        if self.to_algebra()? != family.algebra {
            return Err(field_err("brackets", format!("structure constants differ from the catalog {spec}")));
        }
        Ok(family)
    }
}

impl GeneratorRecord {
    pub fn from_generator(g: &Generator) -> Self {
        match g {
            Generator::Ad { x, y } => GeneratorRecord::Ad { x: matrix_text(x), y: matrix_text(y) },
            Generator::J(l) => GeneratorRecord::J { lambda: scalar_text(l) },
            Generator::Rho(z) => GeneratorRecord::Rho { z: matrix_text(z) },
            Generator::Tau => GeneratorRecord::Tau,
            Generator::Pi => GeneratorRecord::Pi,
            Generator::SigmaQ => GeneratorRecord::SigmaQ,
            Generator::R => GeneratorRecord::R,
            Generator::Theta { perm, lambda } => GeneratorRecord::Theta { perm: *perm, lambda: scalar_text(lambda) },
            Generator::AdD([a, b, c]) => {
                GeneratorRecord::AdD { x1: matrix_text(a), x2: matrix_text(b), x3: matrix_text(c) }
            }
            Generator::AutLambda(phi) => GeneratorRecord::AutLambda {
                images: phi
                    .images()
                    .iter()
                    .map(|p| {
                        p.terms()
                            .iter()
                            .map(|(m, c)| MonomialRecord { monomial: monomial_text(*m), coeff: scalar_text(c) })
                            .collect()
                    })
                    .collect(),
            },
        }
    }

    pub fn to_generator(&self, field: &str) -> Result<Generator, IoError> {
        let sub = |name: &str| format!("{field}.{name}");
        Ok(match self {
            GeneratorRecord::Ad { x, y } => {
                Generator::Ad { x: parse_matrix(&sub("X"), x)?, y: parse_matrix(&sub("Y"), y)? }
            }
            GeneratorRecord::J { lambda } => Generator::J(parse_scalar(&sub("lambda"), lambda)?),
            GeneratorRecord::Rho { z } => Generator::Rho(parse_matrix(&sub("Z"), z)?),
            GeneratorRecord::Tau => Generator::Tau,
            GeneratorRecord::Pi => Generator::Pi,
            GeneratorRecord::SigmaQ => Generator::SigmaQ,
            GeneratorRecord::R => Generator::R,
            GeneratorRecord::Theta { perm, lambda } => {
                let mut seen = *perm;
                seen.sort_unstable();
                if seen != [0, 1, 2] {
                    return Err(field_err(sub("perm"), "expected a permutation of 0, 1, 2"));
                }
                Generator::Theta { perm: *perm, lambda: parse_scalar(&sub("lambda"), lambda)? }
            }
            GeneratorRecord::AdD { x1, x2, x3 } => Generator::AdD([
                parse_matrix(&sub("X1"), x1)?,
                parse_matrix(&sub("X2"), x2)?,
                parse_matrix(&sub("X3"), x3)?,
            ]),
            GeneratorRecord::AutLambda { images } => {
                let n = images.len();
                let polys = images
                    .iter()
                    .enumerate()
                    .map(|(i, terms)| {
                        let mut p = GrassmannPoly::zero(n);
                        for (t, rec) in terms.iter().enumerate() {
                            let at = sub(&format!("images[{i}][{t}]"));
                            let mask = parse_monomial(&format!("{at}.monomial"), &rec.monomial)?;
                            if mask >> n != 0 {
                                return Err(field_err(
                                    format!("{at}.monomial"),
                                    format!("uses a generator beyond x{n}"),
                                ));
                            }
                            p.add_term(mask, parse_scalar(&format!("{at}.coeff"), &rec.coeff)?);
                        }
                        Ok(p)
                    })
                    .collect::<Result<Vec<_>, IoError>>()?;
                Generator::AutLambda(LambdaMap::new(polys).map_err(|e| field_err(sub("images"), e))?)
            }
        })
    }
}

impl AutomorphismDocument {
    /// Writes the witness when there is one, the matrix otherwise.
    pub fn from_automorphism(s: &AutMorphism) -> Self {
        let witness: Option<Vec<GeneratorRecord>> =
            s.witness().map(|w| w.iter().map(GeneratorRecord::from_generator).collect());
        AutomorphismDocument {
            family: s.spec().to_string(),
            matrix: if witness.is_some() { None } else { Some(matrix_text(s.matrix())) },
            witness,
        }
    }

    pub fn family_spec(&self) -> Result<FamilySpec, IoError> {
        self.family.parse().map_err(|e| field_err("family", e))
    }

    /// Rebuilds the automorphism over `family`, which must be the family the document names.
    pub fn to_automorphism(&self, family: &Arc<Family>) -> Result<AutMorphism, IoError> {
        let spec = self.family_spec()?;
        if spec != family.spec {
            return Err(field_err("family", format!("names {spec}, but the algebra is {}", family.spec)));
        }
        let from_witness = match &self.witness {
            Some(w) => {
                let gens = w
                    .iter()
                    .enumerate()
                    .map(|(i, r)| r.to_generator(&format!("witness[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(AutMorphism::from_witness(family, gens).map_err(|e| field_err("witness", e))?)
            }
            None => None,
        };
        let matrix = self.matrix.as_ref().map(|m| parse_matrix("matrix", m)).transpose()?;
        match (from_witness, matrix) {
            (Some(s), Some(m)) if s.matrix() != &m => Err(field_err("matrix", "disagrees with the expanded witness")),
            (Some(s), _) => Ok(s),
            (None, Some(m)) => Ok(AutMorphism::from_matrix(family, m).map_err(|e| field_err("matrix", e))?),
            (None, None) => Err(field_err("matrix", "either `matrix` or `witness` is required")),
        }
    }
}

fn read(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::File { path: path.display().to_string(), source })
}

fn write(path: &Path, text: &str) -> Result<(), IoError> {
    std::fs::write(path, text).map_err(|source| IoError::File { path: path.display().to_string(), source })
}

pub fn algebra_to_json(g: &LieSuperalgebra, family: Option<&FamilySpec>) -> String {
    serde_json::to_string_pretty(&AlgebraDocument::from_algebra(g, family)).expect("plain data serializes")
}

pub fn algebra_from_json(text: &str) -> Result<AlgebraDocument, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn automorphism_to_json(s: &AutMorphism) -> String {
    serde_json::to_string_pretty(&AutomorphismDocument::from_automorphism(s)).expect("plain data serializes")
}

pub fn automorphism_from_json(text: &str) -> Result<AutomorphismDocument, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn write_algebra(path: &Path, g: &LieSuperalgebra, family: Option<&FamilySpec>) -> Result<(), IoError> {
    write(path, &algebra_to_json(g, family))
}

pub fn read_algebra(path: &Path) -> Result<AlgebraDocument, IoError> {
    algebra_from_json(&read(path)?)
}

pub fn write_automorphism(path: &Path, s: &AutMorphism) -> Result<(), IoError> {
    write(path, &automorphism_to_json(s))
}

pub fn read_automorphism(path: &Path) -> Result<AutomorphismDocument, IoError> {
    automorphism_from_json(&read(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphisms::random::{random_inner, seeded};
    use crate::families::build;

    #[test]
    fn algebra_round_trip() {
        for s in ["sl(2|1)", "D(cyc(3)[0,1])", "H(4)", "psq(3)"] {
            let spec: FamilySpec = s.parse().unwrap();
            let g = build(&spec).unwrap();
            let doc = algebra_from_json(&algebra_to_json(&g, Some(&spec))).unwrap();
            assert_eq!(doc.to_algebra().unwrap(), g, "{s}");
            assert_eq!(doc.to_family().unwrap().spec, spec);
        }
    }

    #[test]
    fn automorphism_round_trip_keeps_witness() {
        for s in ["psl(2|2)", "D(2)", "W(3)", "osp(4|2)"] {
            let family = family_arc(&s.parse().unwrap()).unwrap();
            let sigma = random_inner(&family, &mut seeded(3)).unwrap();
            let doc = automorphism_from_json(&automorphism_to_json(&sigma)).unwrap();
            let back = doc.to_automorphism(&family).unwrap();
            assert_eq!(back, sigma, "{s}");
            assert_eq!(back.witness(), sigma.witness());
        }
        let family = family_arc(&"sl(2|1)".parse().unwrap()).unwrap();
        let tau = AutMorphism::from_matrix(&family, Generator::Tau.matrix(&family).unwrap()).unwrap();
        let back = automorphism_from_json(&automorphism_to_json(&tau)).unwrap().to_automorphism(&family).unwrap();
        assert_eq!(back, tau);
        assert!(back.witness().is_none());
    }

    #[test]
    fn rationals_are_normalized_on_load() {
        let text = r#"{"field":{"conductor":1},"basis":[{"name":"h","parity":0},{"name":"e","parity":0}],
            "brackets":[{"i":0,"j":1,"terms":[{"k":1,"coeff":"4/2"}]}]}"#;
        let g = algebra_from_json(text).unwrap().to_algebra().unwrap();
        assert_eq!(g.structure(0, 1), &[(1, CycScalar::from_int(2))]);
        assert_eq!(algebra_to_json(&g, None).matches("cyc(1)[2]").count(), 1);
    }

    #[test]
    fn errors_name_the_field() {
        let text = r#"{"field":{"conductor":1},"basis":[{"name":"h","parity":0}],
            "brackets":[{"i":0,"j":0,"terms":[{"k":0,"coeff":"1/0x"}]}]}"#;
        let e = algebra_from_json(text).unwrap().to_algebra().unwrap_err().to_string();
        assert!(e.starts_with("brackets[0].terms[0].coeff"), "{e}");
        let e = algebra_from_json("{\"field\": {}}").unwrap_err();
        assert!(matches!(e, IoError::Syntax { line: 1, .. }), "{e}");
        let e = automorphism_from_json(r#"{"family":"D(1)","witness":[{"gen":"theta","perm":[0,0,1],"lambda":"1"}]}"#)
            .unwrap()
            .to_automorphism(&family_arc(&"D(1)".parse().unwrap()).unwrap())
            .unwrap_err()
            .to_string();
        assert!(e.starts_with("witness[0].perm"), "{e}");
    }
}
