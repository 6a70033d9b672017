//! Cartan type families inside `W(n) = Der Λ(n)`, and automorphisms of `Λ(n)`.

use crate::exactfield::CycScalar;
use crate::linalg::{CoordMap, Echelon, Matrix, SubspaceBasis};
use crate::superalgebra::{ElementVector, LieSuperalgebra, Parity, Terms};

use super::grassmann::{
    derivation_bracket, divergence, full_mask, hamiltonian_field, monomial_name, GrassmannPoly, Mask, PolyDerivation,
};
use super::{FamilyError, FamilySpec, FamilyTag};

/// Masks of `{1..n}` ordered by size, then numerically.
fn masks_by_degree(n: usize) -> Vec<Mask> {
    let mut v: Vec<Mask> = (0..=full_mask(n)).collect();
    v.sort_by_key(|m| (m.count_ones(), *m));
    v
}

/// `∂_i f ∂_j + ∂_j f ∂_i` for monomials `f` and `i ≤ j` (1-based), skipping zeros.
pub fn s_spanning_set(n: usize) -> Vec<PolyDerivation> {
    let mut out = Vec::new();
    for mask in masks_by_degree(n) {
        let f = GrassmannPoly::monomial(n, mask, CycScalar::one());
        for i in 1..=n {
            for j in i..=n {
                let d = PolyDerivation::single(f.partial(i), j).add(&PolyDerivation::single(f.partial(j), i));
                if !d.is_zero() {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// `{D ∈ W(n) : div D = 0}` in the coordinates of [`PolyDerivation::to_vector`].
pub fn divergence_kernel(n: usize) -> SubspaceBasis {
    let ambient = n << n;
    let mut e = Echelon::new(ambient);
    // row for each monomial of div D, column for each ξ_S ∂_i
    let mut rows: Vec<Vec<(usize, CycScalar)>> = vec![Vec::new(); 1 << n];
    for idx in 0..ambient {
        let d = PolyDerivation::basis_element(n, (idx / n) as Mask, idx % n + 1);
        for (m, c) in divergence(&d).terms() {
            rows[*m as usize].push((idx, c.clone()));
        }
    }
    for r in rows.iter().filter(|r| !r.is_empty()) {
        e.insert(r);
    }
    SubspaceBasis::span(ambient, e.nullspace())
}

/// An even automorphism of `Λ(n)` given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaMap {
    n: usize,
    images: Vec<GrassmannPoly>,
}

impl LambdaMap {
    pub fn new(images: Vec<GrassmannPoly>) -> Result<Self, FamilyError> {
        let n = images.len();
        for (i, f) in images.iter().enumerate() {
            if f.n() != n {
                return Err(FamilyError::Precondition(format!("image of x{} lives in Λ({})", i + 1, f.n())));
            }
            if f.parity() != Some(Parity::Odd) {
                return Err(FamilyError::Precondition(format!("image of x{} is not odd", i + 1)));
            }
        }
        let phi = LambdaMap { n, images };
        if !phi.linear_part().is_invertible() {
            return Err(FamilyError::Precondition("linear part of the map is singular".into()));
        }
        Ok(phi)
    }

    pub fn identity(n: usize) -> Self {
        LambdaMap { n, images: (1..=n).map(|i| GrassmannPoly::generator(n, i)).collect() }
    }

    /// `ξ_i ↦ Σ_j a_{ji} ξ_j`.
    pub fn linear(a: &Matrix) -> Result<Self, FamilyError> {
        let n = a.rows();
        let images =
            (0..n).map(|i| GrassmannPoly::from_terms(n, (0..n).map(|j| (1 << j, a[(j, i)].clone())))).collect();
        Self::new(images)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[GrassmannPoly] {
        &self.images
    }

    /// Column `i` holds the degree-one part of the image of `ξ_{i+1}`.
    pub fn linear_part(&self) -> Matrix {
        let mut a = Matrix::zeros(self.n, self.n);
        for (i, f) in self.images.iter().enumerate() {
            for j in 0..self.n {
                a[(j, i)] = f.coeff(1 << j);
            }
        }
        a
    }

    pub fn apply(&self, f: &GrassmannPoly) -> GrassmannPoly {
        let mut out = GrassmannPoly::zero(self.n);
        for (mask, c) in f.terms() {
            let mut prod = GrassmannPoly::constant(self.n, c.clone());
            for i in 0..self.n {
                if mask & (1 << i) != 0 {
                    prod = prod.mul(&self.images[i]);
                }
            }
            out = out.add(&prod);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LambdaMap) -> LambdaMap {
        LambdaMap { n: self.n, images: other.images.iter().map(|f| self.apply(f)).collect() }
    }

    /// Matrix on `Λ(n)` in the monomial basis indexed by mask.
    pub fn full_matrix(&self) -> Matrix {
        let cols: Vec<Vec<CycScalar>> = (0..=full_mask(self.n))
            .map(|m| self.apply(&GrassmannPoly::monomial(self.n, m, CycScalar::one())).to_dense())
            .collect();
        Matrix::from_columns(&cols)
    }

    pub fn inverse(&self) -> LambdaMap {
        let inv = self.full_matrix().inverse().expect("automorphisms of Λ(n) are invertible");
        let images = (0..self.n).map(|i| GrassmannPoly::from_dense(self.n, &inv.column(1 << i))).collect();
        LambdaMap { n: self.n, images }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// `φ D φ⁻¹`, given `φ⁻¹`.
    pub fn conjugate(&self, inverse: &LambdaMap, d: &PolyDerivation) -> PolyDerivation {
        let comps =
            (1..=self.n).map(|j| self.apply(&d.apply(&inverse.apply(&GrassmannPoly::generator(self.n, j))))).collect();
        PolyDerivation::new(comps)
    }
}

/// `e^D = Σ D^k / k!` on the generators, for an even `D` whose components only
/// involve monomials of odd degree at least 3.
pub fn lambda_exp(d: &PolyDerivation) -> Result<LambdaMap, FamilyError> {
    for (i, p) in d.components().iter().enumerate() {
        if let Some(m) = p.terms().keys().find(|m| m.count_ones() < 3 || m.count_ones() % 2 == 0) {
            return Err(FamilyError::Precondition(format!(
                "component {} has the monomial {}; nilpotent even derivations need odd degree ≥ 3",
                i + 1,
                monomial_name(*m)
            )));
        }
    }
    let n = d.n();
    let images = (1..=n)
        .map(|i| {
            let mut term = GrassmannPoly::generator(n, i);
            let mut sum = term.clone();
            let mut k = 1i64;
            loop {
                term = d.apply(&term).scale(&CycScalar::frac(1, k));
                if term.is_zero() {
                    break sum;
                }
                sum = sum.add(&term);
                k += 1;
            }
        })
        .collect();
    LambdaMap::new(images)
}

#[derive(Debug, Clone)]
pub struct CartanRealization {
    tag: FamilyTag,
    n: usize,
    names: Vec<String>,
    /// Basis vectors in `W(n)` (or `Λ(n)` for the abelian family).
    basis: Vec<Vec<CycScalar>>,
    degrees: Option<Vec<i32>>,
    coords: CoordMap,
}

impl CartanRealization {
    pub fn new(spec: &FamilySpec) -> Result<Self, FamilyError> {
        let n = spec.params[0];
        let tag = spec.tag;
        let (names, derivs): (Vec<String>, Vec<PolyDerivation>) = match tag {
            FamilyTag::Lambda => {
                let masks = masks_by_degree(n);
                let names = masks.iter().map(|m| monomial_name(*m)).collect();
                let basis: Vec<Vec<CycScalar>> =
                    masks.iter().map(|m| GrassmannPoly::monomial(n, *m, CycScalar::one()).to_dense()).collect();
                let degrees = masks.iter().map(|m| m.count_ones() as i32).collect();
                let coords = CoordMap::new(1 << n, &basis).expect("monomials are independent");
                return Ok(CartanRealization { tag, n, names, basis, degrees: Some(degrees), coords });
            }
            FamilyTag::W => masks_by_degree(n)
                .into_iter()
                .flat_map(|m| {
                    (1..=n).map(move |i| (format!("{}d{i}", monomial_name(m)), PolyDerivation::basis_element(n, m, i)))
                })
                .unzip(),
            FamilyTag::S | FamilyTag::Sprime => {
                let s = special_basis(n);
                if tag == FamilyTag::S {
                    s
                } else {
                    let twist = GrassmannPoly::one(n).sub(&GrassmannPoly::top(n));
                    s.0.into_iter().map(|nm| format!("(1-top){nm}")).zip(s.1.iter().map(|d| d.left_mul(&twist))).unzip()
                }
            }
            FamilyTag::H | FamilyTag::Htilde => {
                let max = if tag == FamilyTag::H { n - 1 } else { n };
                masks_by_degree(n)
                    .into_iter()
                    .filter(|m| (1..=max as u32).contains(&m.count_ones()))
                    .map(|m| {
                        let f = GrassmannPoly::monomial(n, m, CycScalar::one());
                        (format!("D[{}]", monomial_name(m)), hamiltonian_field(&f))
                    })
                    .unzip()
            }
            t => return Err(FamilyError::Precondition(format!("{} is not a Cartan type family", t.name()))),
        };
        let degrees = if tag == FamilyTag::Sprime {
            None
        } else {
            Some(derivs.iter().map(|d| d.degree().expect("homogeneous basis")).collect())
        };
        let basis: Vec<Vec<CycScalar>> = derivs.iter().map(PolyDerivation::to_vector).collect();
        let coords = CoordMap::new(n << n, &basis)
            .map_err(|_| FamilyError::Precondition(format!("basis of {spec} is dependent")))?;
        Ok(CartanRealization { tag, n, names, basis, degrees, coords })
    }

    pub fn tag(&self) -> FamilyTag {
        self.tag
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degrees(&self) -> Option<Vec<i32>> {
        self.degrees.clone()
    }

    pub fn is_abelian_model(&self) -> bool {
        self.tag == FamilyTag::Lambda
    }

    pub fn derivation(&self, k: usize) -> PolyDerivation {
        PolyDerivation::from_vector(self.n, &self.basis[k])
    }

    /// The derivation `Σ v_k b_k`.
    pub fn element_derivation(&self, v: &[CycScalar]) -> PolyDerivation {
        let mut w = vec![CycScalar::zero(); self.n << self.n];
        for (c, b) in v.iter().zip(&self.basis) {
            if !c.is_zero() {
                for (x, y) in w.iter_mut().zip(b) {
                    *x += &(c * y);
                }
            }
        }
        PolyDerivation::from_vector(self.n, &w)
    }

    pub fn coords_of_derivation(&self, d: &PolyDerivation) -> Option<ElementVector> {
        self.coords.coords(&d.to_vector())
    }

    /// Name of the form whose stabilizer acts on the family.
    pub fn defining_form(&self) -> Option<&'static str> {
        match self.tag {
            FamilyTag::S => Some("the volume form Δ_n"),
            FamilyTag::Sprime => Some("the twisted volume form Δ′_n"),
            FamilyTag::H | FamilyTag::Htilde => Some("the Hamiltonian form ω_n"),
            _ => None,
        }
    }

    pub fn algebra(&self) -> LieSuperalgebra {
        let d = self.dim();
        if self.is_abelian_model() {
            let parity = masks_by_degree(self.n).iter().map(|m| Parity::from_bit((m.count_ones() & 1) as u8)).collect();
            return LieSuperalgebra::new(self.names.clone(), parity, 1).expect("lengths agree");
        }
        let derivs: Vec<PolyDerivation> = (0..d).map(|k| self.derivation(k)).collect();
        let parity: Vec<Parity> = derivs.iter().map(|x| x.parity().expect("homogeneous basis")).collect();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i..d {
                let b = derivation_bracket(&derivs[i], &derivs[j]);
                let c = self.coords_of_derivation(&b).expect("bracket stays in the family");
                let terms: Terms = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                brackets.push((i, j, terms));
            }
        }
        LieSuperalgebra::from_upper_table(self.names.clone(), parity, 1, brackets).expect("indices in range")
    }
}

/// Independent elements of the spanning set of `S(n)`, in degree order.
fn special_basis(n: usize) -> (Vec<String>, Vec<PolyDerivation>) {
    let mut e = Echelon::new(n << n);
    let mut names = Vec::new();
    let mut out = Vec::new();
    for mask in masks_by_degree(n) {
        let f = GrassmannPoly::monomial(n, mask, CycScalar::one());
        for i in 1..=n {
            for j in i..=n {
                let d = PolyDerivation::single(f.partial(i), j).add(&PolyDerivation::single(f.partial(j), i));
                if !d.is_zero() && e.insert_dense(&d.to_vector()) {
                    names.push(format!("D{i}{j}[{}]", monomial_name(mask)));
                    out.push(d);
                }
            }
        }
    }
    (names, out)
}

/// The automorphism of the family induced by `φ ∈ Aut Λ(n)`, as a matrix on its basis.
pub fn ad_lambda_matrix(family: &CartanRealization, phi: &LambdaMap) -> Result<Matrix, FamilyError> {
    if phi.n() != family.n() {
        return Err(FamilyError::Precondition(format!(
            "map on Λ({}) applied to a family over Λ({})",
            phi.n(),
            family.n()
        )));
    }
    if family.is_abelian_model() {
        let full = phi.full_matrix();
        let order = masks_by_degree(family.n());
        let mut m = Matrix::zeros(full.rows(), full.cols());
        for (a, &ma) in order.iter().enumerate() {
            for (b, &mb) in order.iter().enumerate() {
                m[(a, b)] = full[(ma as usize, mb as usize)].clone();
            }
        }
        return Ok(m);
    }
    let inv = phi.inverse();
    let mut cols = Vec::with_capacity(family.dim());
    for k in 0..family.dim() {
        let image = phi.conjugate(&inv, &family.derivation(k));
        let c = family.coords_of_derivation(&image).ok_or_else(|| {
            FamilyError::Precondition(format!(
                "the map does not preserve {}",
                family.defining_form().unwrap_or("the family")
            ))
        })?;
        cols.push(c);
    }
    Ok(Matrix::from_columns(&cols))
}
