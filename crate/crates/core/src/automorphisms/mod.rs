//! Automorphisms of the catalog algebras, the finite outer group `F = Aut g / G⁰`
//! of each family, and the classifier sending an automorphism to its class in `F`.

mod classify;
mod generators;
pub mod random;
mod relations;

use std::fmt;
use std::sync::Arc;

use crate::exactfield::CycScalar;
use crate::families::{
    build_family, d_alpha_canonical, d_alpha_slots, Family, FamilyError, FamilySpec, FamilyTag, LambdaMap,
};
use crate::families::{lambda_exp, PolyDerivation};
use crate::linalg::{eigenspace, Matrix, SubspaceBasis};
use crate::superalgebra::{ElementVector, LieSuperalgebra, DEFAULT_ORDER_BOUND};

pub use classify::outer_class;
pub use generators::{psi, symplectic_form, Generator};
pub use relations::{check_standard_relations, RelationReport, RelationResult};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{generator} on {family}: {reason}")]
    Generator { generator: String, family: String, reason: String },
    #[error("the map is not an automorphism of {0}")]
    NotAutomorphism(String),
    #[error("{0}")]
    NotInner(String),
    #[error("automorphisms of {0} and {1} cannot be combined")]
    Mismatch(String, String),
    #[error("σ^{period} is not the identity")]
    Period { period: u64 },
    #[error("{0}: witness required (classification of raw matrices is not available for this family)")]
    WitnessRequired(String),
    #[error("{0} has no entry in the automorphism table")]
    NotInTable(String),
    #[error("invalid class {element} for F = {group}")]
    InvalidClass { element: u32, group: String },
    #[error("{family}: {reason}")]
    Classify { family: String, reason: String },
}

/// A parity-preserving invertible map respecting the bracket.
#[derive(Debug, Clone)]
pub struct AutMorphism {
    family: Arc<Family>,
    matrix: Matrix,
    witness: Option<Vec<Generator>>,
}

pub fn family_arc(spec: &FamilySpec) -> Result<Arc<Family>, AutError> {
    Ok(Arc::new(build_family(spec)?))
}

fn word_matrix(family: &Family, word: &[Generator]) -> Result<Matrix, AutError> {
    let mut m = Matrix::identity(family.dim());
    for g in word {
        m = &m * &g.matrix(family)?;
    }
    Ok(m)
}

impl AutMorphism {
    pub fn identity(family: &Arc<Family>) -> Self {
        AutMorphism { family: family.clone(), matrix: Matrix::identity(family.dim()), witness: Some(Vec::new()) }
    }

    pub fn from_matrix(family: &Arc<Family>, matrix: Matrix) -> Result<Self, AutError> {
        if !family.algebra.is_automorphism(&matrix) {
            return Err(AutError::NotAutomorphism(family.spec.to_string()));
        }
        Ok(AutMorphism { family: family.clone(), matrix, witness: None })
    }

    /// Expands the word and checks the result.
    pub fn from_witness(family: &Arc<Family>, witness: Vec<Generator>) -> Result<Self, AutError> {
        let matrix = word_matrix(family, &witness)?;
        if !family.algebra.is_automorphism(&matrix) {
            return Err(AutError::NotAutomorphism(family.spec.to_string()));
        }
        Ok(AutMorphism { family: family.clone(), matrix, witness: Some(witness) })
    }

    pub fn generator(family: &Arc<Family>, g: Generator) -> Result<Self, AutError> {
        Self::from_witness(family, vec![g])
    }

    pub fn family(&self) -> &Arc<Family> {
        &self.family
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.family.spec
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.family.algebra
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn witness(&self) -> Option<&[Generator]> {
        self.witness.as_deref()
    }

    /// Whether the stored witness expands to the stored matrix.
    pub fn witness_consistent(&self) -> bool {
        match &self.witness {
            None => true,
            Some(w) => word_matrix(&self.family, w).map(|m| m == self.matrix).unwrap_or(false),
        }
    }

    pub fn apply(&self, v: &[CycScalar]) -> ElementVector {
        self.matrix.mul_vec(v)
    }

    fn same_family(&self, other: &AutMorphism) -> Result<(), AutError> {
        if Arc::ptr_eq(&self.family, &other.family) || self.family.spec == other.family.spec {
            Ok(())
        } else {
            Err(AutError::Mismatch(self.family.spec.to_string(), other.family.spec.to_string()))
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AutMorphism) -> Result<AutMorphism, AutError> {
        self.same_family(other)?;
        let witness = match (&self.witness, &other.witness) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Ok(AutMorphism { family: self.family.clone(), matrix: &self.matrix * &other.matrix, witness })
    }

    pub fn inverse(&self) -> AutMorphism {
        let matrix = self.matrix.inverse().expect("automorphisms are invertible");
        let witness = self.witness.as_ref().map(|w| w.iter().rev().flat_map(Generator::inverse).collect());
        AutMorphism { family: self.family.clone(), matrix, witness }
    }

    pub fn pow(&self, k: u64) -> AutMorphism {
        let witness = self.witness.as_ref().map(|w| {
            let mut out = Vec::new();
            for _ in 0..k {
                out.extend(w.iter().cloned());
            }
            out
        });
        AutMorphism { family: self.family.clone(), matrix: self.matrix.pow(k), witness }
    }

    /// `g σ g⁻¹`.
    pub fn conjugate_by(&self, g: &AutMorphism) -> Result<AutMorphism, AutError> {
        g.compose(self)?.compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn order(&self) -> Option<u64> {
        self.algebra().automorphism_order(&self.matrix, DEFAULT_ORDER_BOUND)
    }

    /// The composite Grassmann automorphism when the witness consists of `AutΛ` factors.
    pub fn lambda_witness(&self) -> Option<LambdaMap> {
        let w = self.witness.as_ref()?;
        let n = self.family.cartan_realization()?.n();
        let mut phi = LambdaMap::identity(n);
        for g in w {
            match g {
                Generator::AutLambda(p) => phi = phi.compose(p),
                _ => return None,
            }
        }
        Some(phi)
    }
}

impl PartialEq for AutMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.family.spec == other.family.spec && self.matrix == other.matrix
    }
}

/// Shape of the outer group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FKind {
    Trivial,
    Z2,
    Z2xZ2,
    Z3,
    Z4,
}

impl FKind {
    pub fn order(self) -> u32 {
        match self {
            FKind::Trivial => 1,
            FKind::Z2 => 2,
            FKind::Z2xZ2 | FKind::Z4 => 4,
            FKind::Z3 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FKind::Trivial => "1",
            FKind::Z2 => "Z2",
            FKind::Z2xZ2 => "Z2xZ2",
            FKind::Z3 => "Z3",
            FKind::Z4 => "Z4",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FGroup {
    pub kind: FKind,
    pub family: FamilySpec,
}

impl FGroup {
    pub fn identity(&self) -> FClass {
        FClass { group: self.clone(), element: 0 }
    }

    pub fn element(&self, element: u32) -> Result<FClass, AutError> {
        if element >= self.kind.order() {
            return Err(AutError::InvalidClass { element, group: self.kind.name().to_string() });
        }
        Ok(FClass { group: self.clone(), element })
    }

    pub fn elements(&self) -> Vec<FClass> {
        (0..self.kind.order()).map(|e| FClass { group: self.clone(), element: e }).collect()
    }
}

impl fmt::Display for FGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())
    }
}

/// An element of `F`. For `Z_n` the element is the residue; for `Z2xZ2` it packs
/// the bits `(π, τ)` as `2π + τ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FClass {
    pub group: FGroup,
    pub element: u32,
}

impl FClass {
    pub fn is_identity(&self) -> bool {
        self.element == 0
    }

    pub fn bits(&self) -> (u32, u32) {
        (self.element >> 1, self.element & 1)
    }

    pub fn mul(&self, other: &FClass) -> FClass {
        let element = match self.group.kind {
            FKind::Z2xZ2 => self.element ^ other.element,
            k => (self.element + other.element) % k.order(),
        };
        FClass { group: self.group.clone(), element }
    }

    pub fn inverse(&self) -> FClass {
        let element = match self.group.kind {
            FKind::Z2xZ2 => self.element,
            k => (k.order() - self.element) % k.order(),
        };
        FClass { group: self.group.clone(), element }
    }

    pub fn order(&self) -> u32 {
        let mut c = self.clone();
        let mut k = 1;
        while !c.is_identity() {
            c = c.mul(self);
            k += 1;
        }
        k
    }
}

impl fmt::Display for FClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.group.kind.name();
        match self.group.kind {
            _ if self.is_identity() => write!(f, "identity"),
            FKind::Z2 => write!(f, "generator of {g}"),
            FKind::Z2xZ2 => {
                let (p, t) = self.bits();
                write!(f, "({p},{t}) in {g}")
            }
            _ => write!(f, "{} in {g}", self.element),
        }
    }
}

/// The `F` column of the automorphism table.
pub fn f_group(spec: &FamilySpec) -> Result<FGroup, AutError> {
    let p = &spec.params;
    let kind = match spec.tag {
        FamilyTag::Sl => FKind::Z2,
        FamilyTag::Psl if p[0] == 2 => FKind::Z2,
        FamilyTag::Psl => FKind::Z2xZ2,
        FamilyTag::SpQuotient => FKind::Trivial,
        FamilyTag::Psq => FKind::Z4,
        FamilyTag::Osp if p[0].is_multiple_of(2) => FKind::Z2,
        FamilyTag::Osp => FKind::Trivial,
        FamilyTag::DAlpha => {
            let a = d_alpha_canonical(spec.alpha.as_ref().expect("D(α) carries α"));
            if a == d_alpha_canonical(&CycScalar::one()) {
                FKind::Z2
            } else if a.pow(3).is_one() {
                FKind::Z3
            } else {
                FKind::Trivial
            }
        }
        FamilyTag::W | FamilyTag::S | FamilyTag::Sprime => FKind::Trivial,
        FamilyTag::H if p[0].is_multiple_of(2) => FKind::Z2,
        FamilyTag::H => FKind::Trivial,
        _ => return Err(AutError::NotInTable(spec.to_string())),
    };
    Ok(FGroup { kind, family: spec.clone() })
}

/// A fixed lift of each class.
pub fn representative(family: &Arc<Family>, c: &FClass) -> Result<AutMorphism, AutError> {
    let g = f_group(&family.spec)?;
    if g != c.group {
        return Err(AutError::Mismatch(c.group.family.to_string(), family.spec.to_string()));
    }
    let e = c.element;
    let word: Vec<Generator> = match family.spec.tag {
        _ if e == 0 => Vec::new(),
        FamilyTag::Sl => vec![Generator::Tau],
        FamilyTag::Psl if g.kind == FKind::Z2 => vec![Generator::Pi],
        FamilyTag::Psl => {
            let (p, t) = c.bits();
            let mut w = Vec::new();
            if p == 1 {
                w.push(Generator::Pi);
            }
            if t == 1 {
                w.push(Generator::Tau);
            }
            w
        }
        FamilyTag::Psq => vec![Generator::SigmaQ; e as usize],
        FamilyTag::Osp => vec![Generator::R],
        FamilyTag::H => {
            let n = family.spec.params[0];
            let mut r = Matrix::identity(n);
            r[(0, 0)] = CycScalar::from_int(-1);
            vec![Generator::AutLambda(LambdaMap::linear(&r)?)]
        }
        FamilyTag::DAlpha => {
            let theta = d_alpha_outer_generator(family.spec.alpha.as_ref().expect("D(α) carries α"), g.kind)?;
            vec![theta; e as usize]
        }
        _ => unreachable!("trivial groups only have the identity"),
    };
    AutMorphism::from_witness(family, word)
}

/// `θ` realizing the nontrivial permutations of the slots: a transposition of two
/// slots with equal weight, or the 3-cycle `θ((1,2,3), λ)` with `λ² = 1/α`, taking
/// the root with the lexicographically smaller coefficient tuple.
fn d_alpha_outer_generator(alpha: &CycScalar, kind: FKind) -> Result<Generator, AutError> {
    let w = d_alpha_slots(alpha);
    match kind {
        FKind::Z2 => {
            let (s, t) = [(0, 1), (1, 2), (0, 2)].into_iter().find(|&(s, t)| w[s] == w[t]).ok_or_else(|| {
                AutError::Classify { family: format!("D({alpha})"), reason: "no equal slot weights".into() }
            })?;
            let mut perm = [0, 1, 2];
            perm.swap(s, t);
            Ok(Generator::Theta { perm, lambda: CycScalar::one() })
        }
        FKind::Z3 => {
            let target = alpha.inv().expect("α ≠ 0");
            let z3 = CycScalar::primitive_root(3).expect("conductor 3");
            let mut roots: Vec<CycScalar> =
                (0..3).map(|k| z3.pow(k)).flat_map(|r| [r.clone(), -r]).filter(|r| r.pow(2) == target).collect();
            roots.sort_by(|a, b| a.lex_cmp(b));
            let lambda = roots.into_iter().next().ok_or_else(|| AutError::Classify {
                family: format!("D({alpha})"),
                reason: "1/α has no square root among the sixth roots of unity".into(),
            })?;
            Ok(Generator::Theta { perm: [1, 2, 0], lambda })
        }
        _ => Err(AutError::Classify { family: format!("D({alpha})"), reason: "no outer generator".into() }),
    }
}

/// `D ↦ φ D φ⁻¹` on a Cartan type family.
pub fn ad_lambda(family: &Arc<Family>, phi: LambdaMap) -> Result<AutMorphism, AutError> {
    AutMorphism::generator(family, Generator::AutLambda(phi))
}

/// `ad(e^D)` for an even derivation `D` of `Λ(n)` raising degrees by at least 2.
pub fn exp_nilpotent(family: &Arc<Family>, d: &PolyDerivation) -> Result<AutMorphism, AutError> {
    ad_lambda(family, lambda_exp(d)?)
}

/// Builds an automorphism from a word of identity-component generators, rejecting
/// generators that are outer or whose data violates the required properties.
pub fn inner(family: &Arc<Family>, witness: Vec<Generator>) -> Result<AutMorphism, AutError> {
    for g in &witness {
        g.validate(family)?;
        if !g.is_inner(family) {
            return Err(AutError::NotInner(format!("{g} is not in the identity component of Aut {}", family.spec)));
        }
    }
    AutMorphism::from_witness(family, witness)
}

/// The eigenspaces `g_i = {x : σ(x) = ζ_m^i x}` for `i = 0..m`.
pub fn eigen_decomposition(sigma: &AutMorphism, m: u64) -> Result<Vec<SubspaceBasis>, AutError> {
    if m == 0 || !sigma.matrix.pow(m).is_identity() {
        return Err(AutError::Period { period: m });
    }
    let zeta = CycScalar::primitive_root(m as u32)
        .map_err(|e| AutError::Classify { family: sigma.spec().to_string(), reason: e.to_string() })?;
    let d = sigma.algebra().dim();
    let mut spaces = Vec::with_capacity(m as usize);
    let mut power = CycScalar::one();
    for _ in 0..m {
        spaces.push(eigenspace(&sigma.matrix, &power).expect("square"));
        power = &power * &zeta;
    }
    let total: usize = spaces.iter().map(SubspaceBasis::dim).sum();
    assert_eq!(total, d, "a finite-order map is diagonalizable over Q(ζ_m)");
    let g = sigma.algebra();
    for (i, a) in spaces.iter().enumerate() {
        for (j, b) in spaces.iter().enumerate() {
            let target = &spaces[(i + j) % m as usize];
            for x in a.vectors() {
                for y in b.vectors() {
                    let z = g.bracket(x, y).expect("dimensions agree");
                    assert!(target.contains(&z), "eigenspaces form a grading");
                }
            }
        }
    }
    Ok(spaces)
}

#[cfg(test)]
mod tests;
