//! Explicit constructions of the simple Lie superalgebra families.

mod cartan;
mod dalpha;
pub mod grassmann;
mod matrix;

use std::fmt;
use std::str::FromStr;

use crate::exactfield::CycScalar;
use crate::superalgebra::LieSuperalgebra;

pub use cartan::{ad_lambda_matrix, divergence_kernel, lambda_exp, s_spanning_set, CartanRealization, LambdaMap};
pub use dalpha::{d_alpha_canonical, d_alpha_orbit, d_alpha_slots, odd_index, odd_tensor, DAlphaRealization};
pub use grassmann::{derivation_bracket, divergence, hamiltonian_field, poisson, GrassmannPoly, Mask, PolyDerivation};
pub use matrix::MatrixRealization;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("invalid family `{0}`")]
    Parse(String),
    #[error("{0}: parameters out of range ({1})")]
    Range(String, String),
    #[error("{0}")]
    Precondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    Gl,
    Sl,
    Psl,
    P,
    SpQuotient,
    Q,
    Sq,
    Psq,
    Osp,
    DAlpha,
    Lambda,
    W,
    S,
    Sprime,
    Htilde,
    H,
}

impl FamilyTag {
    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Gl => "gl",
            FamilyTag::Sl => "sl",
            FamilyTag::Psl => "psl",
            FamilyTag::P => "p",
            FamilyTag::SpQuotient => "sp_quotient",
            FamilyTag::Q => "q",
            FamilyTag::Sq => "sq",
            FamilyTag::Psq => "psq",
            FamilyTag::Osp => "osp",
            FamilyTag::DAlpha => "D",
            FamilyTag::Lambda => "Lambda",
            FamilyTag::W => "W",
            FamilyTag::S => "S",
            FamilyTag::Sprime => "Sprime",
            FamilyTag::Htilde => "Htilde",
            FamilyTag::H => "H",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "gl" => FamilyTag::Gl,
            "sl" => FamilyTag::Sl,
            "psl" => FamilyTag::Psl,
            "p" => FamilyTag::P,
            "sp_quotient" | "s-p" => FamilyTag::SpQuotient,
            "q" => FamilyTag::Q,
            "sq" => FamilyTag::Sq,
            "psq" => FamilyTag::Psq,
            "osp" => FamilyTag::Osp,
            "D" | "Dalpha" => FamilyTag::DAlpha,
            "Lambda" => FamilyTag::Lambda,
            "W" => FamilyTag::W,
            "S" => FamilyTag::S,
            "Sprime" | "S'" => FamilyTag::Sprime,
            "Htilde" => FamilyTag::Htilde,
            "H" => FamilyTag::H,
            _ => return None,
        })
    }

    pub fn is_cartan(self) -> bool {
        matches!(self, FamilyTag::W | FamilyTag::S | FamilyTag::Sprime | FamilyTag::H | FamilyTag::Htilde)
    }
}

/// A member of a family: `sl(m|n)` has params `[m, n]`, `osp(m|2n)` has `[m, n]`,
/// single-index families have `[n]`, and `D(α)` carries `alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub tag: FamilyTag,
    pub params: Vec<usize>,
    pub alpha: Option<CycScalar>,
}

impl FamilySpec {
    pub fn new(tag: FamilyTag, params: Vec<usize>) -> Self {
        FamilySpec { tag, params, alpha: None }
    }

    pub fn sl(m: usize, n: usize) -> Self {
        Self::new(FamilyTag::Sl, vec![m, n])
    }

    pub fn psl(n: usize) -> Self {
        Self::new(FamilyTag::Psl, vec![n, n])
    }

    pub fn psq(n: usize) -> Self {
        Self::new(FamilyTag::Psq, vec![n])
    }

    pub fn sp_quotient(n: usize) -> Self {
        Self::new(FamilyTag::SpQuotient, vec![n])
    }

    /// `osp(m|2n)`.
    pub fn osp(m: usize, n: usize) -> Self {
        Self::new(FamilyTag::Osp, vec![m, n])
    }

    pub fn d_alpha(alpha: CycScalar) -> Self {
        FamilySpec { tag: FamilyTag::DAlpha, params: Vec::new(), alpha: Some(alpha) }
    }

    pub fn cartan(tag: FamilyTag, n: usize) -> Self {
        Self::new(tag, vec![n])
    }

    pub fn param(&self, i: usize) -> usize {
        self.params[i]
    }

    pub fn alpha(&self) -> Option<&CycScalar> {
        self.alpha.as_ref()
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let range = |why: &str| Err(FamilyError::Range(self.to_string(), why.to_string()));
        let want = match self.tag {
            FamilyTag::Gl | FamilyTag::Sl | FamilyTag::Psl | FamilyTag::Osp => 2,
            FamilyTag::DAlpha => 0,
            _ => 1,
        };
        if self.params.len() != want {
            return Err(FamilyError::Range(self.to_string(), format!("expected {want} integer parameters")));
        }
        if (self.tag == FamilyTag::DAlpha) != self.alpha.is_some() {
            return range("α is given exactly for D(α)");
        }
        let p = &self.params;
        match self.tag {
            FamilyTag::Gl if p[0] + p[1] == 0 => range("m + n ≥ 1"),
            FamilyTag::Sl if !(p[0] > p[1] && p[1] >= 1) => range("m > n ≥ 1"),
            FamilyTag::Psl if !(p[0] == p[1] && p[0] >= 2) => range("psl(n|n) with n ≥ 2"),
            FamilyTag::P | FamilyTag::Q | FamilyTag::Sq if p[0] < 1 => range("n ≥ 1"),
            FamilyTag::SpQuotient | FamilyTag::Psq if p[0] < 3 => range("n ≥ 3"),
            FamilyTag::Osp if p[0] < 1 || p[1] < 1 => range("m ≥ 1 and n ≥ 1"),
            FamilyTag::DAlpha => {
                let a = self.alpha.as_ref().expect("checked above");
                if a.is_zero() || (a + &CycScalar::one()).is_zero() {
                    range("α ∉ {0, −1}")
                } else {
                    Ok(())
                }
            }
            FamilyTag::Lambda if p[0] < 1 => range("n ≥ 1"),
            FamilyTag::W if p[0] < 2 => range("n ≥ 2"),
            FamilyTag::S if p[0] < 3 => range("n ≥ 3"),
            FamilyTag::Sprime if p[0] < 4 || !p[0].is_multiple_of(2) => range("n even and n ≥ 4"),
            FamilyTag::H if p[0] < 4 => range("n ≥ 4"),
            FamilyTag::Htilde if p[0] < 2 => range("n ≥ 2"),
            _ if p.iter().any(|&x| x > 12) => range("parameters above 12 are not supported"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.tag.name();
        match self.tag {
            FamilyTag::DAlpha => match &self.alpha {
                Some(a) => write!(f, "D({a})"),
                None => write!(f, "D(?)"),
            },
            FamilyTag::Osp if self.params.len() == 2 => write!(f, "osp({}|{})", self.params[0], 2 * self.params[1]),
            FamilyTag::Gl | FamilyTag::Sl | FamilyTag::Psl if self.params.len() == 2 => {
                write!(f, "{name}({}|{})", self.params[0], self.params[1])
            }
            _ => {
                let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
                write!(f, "{name}({})", ps.join(","))
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::Parse(s.to_string());
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        let body = s[open + 1..].strip_suffix(')').ok_or_else(bad)?.trim();
        let tag = FamilyTag::from_name(s[..open].trim()).ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let spec = match tag {
            FamilyTag::DAlpha => FamilySpec::d_alpha(body.parse::<CycScalar>().map_err(|_| bad())?),
            FamilyTag::Gl | FamilyTag::Sl | FamilyTag::Psl | FamilyTag::Osp => {
                let (a, b) = body.split_once('|').ok_or_else(bad)?;
                let (m, n) = (num(a)?, num(b)?);
                if tag == FamilyTag::Osp {
                    if n % 2 != 0 {
                        return Err(FamilyError::Range(s.to_string(), "osp(m|2n) needs an even second entry".into()));
                    }
                    FamilySpec::osp(m, n / 2)
                } else {
                    FamilySpec::new(tag, vec![m, n])
                }
            }
            _ => FamilySpec::new(tag, vec![num(body)?]),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// How the abstract basis sits inside a concrete model.
#[derive(Debug, Clone)]
pub enum Realization {
    Matrix(MatrixRealization),
    DAlpha(DAlphaRealization),
    Cartan(CartanRealization),
}

#[derive(Debug, Clone)]
pub struct Family {
    pub spec: FamilySpec,
    pub algebra: LieSuperalgebra,
    pub realization: Realization,
}

impl Family {
    pub fn matrix_realization(&self) -> Option<&MatrixRealization> {
        match &self.realization {
            Realization::Matrix(m) => Some(m),
            _ => None,
        }
    }

    pub fn cartan_realization(&self) -> Option<&CartanRealization> {
        match &self.realization {
            Realization::Cartan(c) => Some(c),
            _ => None,
        }
    }

    /// Degree of each basis element in the principal `Z`-grading, when the model has one.
    pub fn degrees(&self) -> Option<Vec<i32>> {
        match &self.realization {
            Realization::Cartan(c) => c.degrees(),
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Builds the algebra together with its concrete model.
pub fn build_family(spec: &FamilySpec) -> Result<Family, FamilyError> {
    spec.validate()?;
    let (algebra, realization) = match spec.tag {
        FamilyTag::DAlpha => {
            let r = DAlphaRealization::new(spec.alpha.clone().expect("validated"));
            (r.algebra(), Realization::DAlpha(r))
        }
        t if t.is_cartan() || t == FamilyTag::Lambda => {
            let r = CartanRealization::new(spec)?;
            (r.algebra(), Realization::Cartan(r))
        }
        _ => {
            let r = MatrixRealization::new(spec)?;
            (r.algebra(), Realization::Matrix(r))
        }
    };
    Ok(Family { spec: spec.clone(), algebra, realization })
}

pub fn build(spec: &FamilySpec) -> Result<LieSuperalgebra, FamilyError> {
    Ok(build_family(spec)?.algebra)
}

/// Closed-form dimension `(even, odd)` of each family.
pub fn expected_superdimension(spec: &FamilySpec) -> (usize, usize) {
    let p = &spec.params;
    let pow2 = |n: usize| 1usize << n;
    match spec.tag {
        FamilyTag::Gl => (p[0] * p[0] + p[1] * p[1], 2 * p[0] * p[1]),
        FamilyTag::Sl => (p[0] * p[0] + p[1] * p[1] - 1, 2 * p[0] * p[1]),
        FamilyTag::Psl => (2 * p[0] * p[0] - 2, 2 * p[0] * p[0]),
        FamilyTag::P => (p[0] * p[0], p[0] * p[0]),
        FamilyTag::SpQuotient => (p[0] * p[0] - 1, p[0] * p[0]),
        FamilyTag::Q => (p[0] * p[0], p[0] * p[0]),
        FamilyTag::Sq => (p[0] * p[0], p[0] * p[0] - 1),
        FamilyTag::Psq => (p[0] * p[0] - 1, p[0] * p[0] - 1),
        FamilyTag::Osp => (p[0] * (p[0] - 1) / 2 + p[1] * (2 * p[1] + 1), 2 * p[0] * p[1]),
        FamilyTag::DAlpha => (9, 8),
        FamilyTag::Lambda => (pow2(p[0]) / 2, pow2(p[0]) / 2),
        FamilyTag::W => (p[0] * pow2(p[0]) / 2, p[0] * pow2(p[0]) / 2),
        FamilyTag::S | FamilyTag::Sprime => {
            let n = p[0];
            let even_top = usize::from(n.is_multiple_of(2));
            ((n - 1) * pow2(n) / 2 + even_top, (n - 1) * pow2(n) / 2 + 1 - even_top)
        }
        FamilyTag::H => {
            let n = p[0];
            let even_top = usize::from(n.is_multiple_of(2));
            (pow2(n) / 2 - 1 - even_top, pow2(n) / 2 - 1 + even_top)
        }
        FamilyTag::Htilde => (pow2(p[0]) / 2 - 1, pow2(p[0]) / 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["sl(2|1)", "psl(3|3)", "psq(3)", "osp(4|2)", "W(3)", "S(3)", "Sprime(4)", "H(4)", "sp_quotient(3)"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("osp(4|2)".parse::<FamilySpec>().unwrap().params, vec![4, 1]);
        let d: FamilySpec = "D(cyc(3)[0,1])".parse().unwrap();
        assert_eq!(d.alpha.unwrap(), CycScalar::primitive_root(3).unwrap());
        assert_eq!("D(2)".parse::<FamilySpec>().unwrap().alpha.unwrap(), CycScalar::from_int(2));
    }

    #[test]
    fn rejects_out_of_range() {
        for s in [
            "sl(1|1)",
            "sl(1|2)",
            "psl(1|1)",
            "psq(2)",
            "osp(3|3)",
            "D(0)",
            "D(-1)",
            "W(1)",
            "S(2)",
            "Sprime(5)",
            "H(3)",
            "foo(2)",
            "sl(2,1)",
        ] {
            assert!(s.parse::<FamilySpec>().is_err(), "{s}");
        }
    }
}
