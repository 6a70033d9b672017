use crate::exactfield::CycScalar;

use super::echelon::Echelon;
use super::matrix::Matrix;
use super::LinalgError;

/// A subspace of `k^n` stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<CycScalar>>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis { ambient_dim, vectors: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, Matrix::identity(ambient_dim).to_rows())
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: impl IntoIterator<Item = Vec<CycScalar>>) -> Self {
        let mut e = Echelon::new(ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length differs from ambient dimension");
            e.insert_dense(&v);
        }
        Self::from_echelon(&e)
    }

    pub fn from_echelon(e: &Echelon) -> Self {
        SubspaceBasis { ambient_dim: e.ncols(), vectors: e.rref_dense() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<CycScalar>] {
        &self.vectors
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient_dim);
        for v in &self.vectors {
            e.insert_dense(v);
        }
        e
    }

    pub fn contains(&self, v: &[CycScalar]) -> bool {
        self.echelon().contains_dense(v)
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        let e = self.echelon();
        other.vectors.iter().all(|v| e.contains_dense(v))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Self::span(self.ambient_dim, self.vectors.iter().chain(&other.vectors).cloned())
    }

    pub fn intersection(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Self::zero(self.ambient_dim);
        }
        // Σ a_i u_i − Σ b_j v_j = 0
        let mut cols: Vec<Vec<CycScalar>> = self.vectors.clone();
        cols.extend(other.vectors.iter().map(|v| v.iter().map(|x| -x).collect()));
        let ns = Matrix::from_columns(&cols).nullspace();
        let vecs = ns.vectors().iter().map(|c| {
            let mut w = vec![CycScalar::zero(); self.ambient_dim];
            for (a, u) in c[..k].iter().zip(&self.vectors) {
                if !a.is_zero() {
                    for (wi, ui) in w.iter_mut().zip(u) {
                        *wi += &(a * ui);
                    }
                }
            }
            w
        });
        Self::span(self.ambient_dim, vecs.collect::<Vec<_>>())
    }

    /// Image under a linear map given by its matrix.
    pub fn image(&self, m: &Matrix) -> SubspaceBasis {
        Self::span(m.rows(), self.vectors.iter().map(|v| m.mul_vec(v)).collect::<Vec<_>>())
    }
}

/// Coordinates with respect to a fixed, linearly independent family of vectors.
#[derive(Debug, Clone)]
pub struct CoordMap {
    ambient_dim: usize,
    basis_len: usize,
    /// RREF of the basis rows, and the transform T with R = T·B.
    reduced: Vec<Vec<(usize, CycScalar)>>,
    pivots: Vec<usize>,
    transform: Vec<Vec<CycScalar>>,
}

impl CoordMap {
    pub fn new(ambient_dim: usize, basis: &[Vec<CycScalar>]) -> Result<Self, LinalgError> {
        let k = basis.len();
        let mut aug = Matrix::zeros(k, ambient_dim + k);
        for (i, b) in basis.iter().enumerate() {
            if b.len() != ambient_dim {
                return Err(LinalgError::Shape("basis vector length differs from ambient dimension".into()));
            }
            for (j, x) in b.iter().enumerate() {
                aug[(i, j)] = x.clone();
            }
            aug[(i, ambient_dim + i)] = CycScalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < k || (k > 0 && pivots[k - 1] >= ambient_dim) {
            return Err(LinalgError::Dependent);
        }
        let reduced = (0..k)
            .map(|i| (0..ambient_dim).filter(|&j| !r[(i, j)].is_zero()).map(|j| (j, r[(i, j)].clone())).collect())
            .collect();
        let transform = (0..k).map(|i| (0..k).map(|j| r[(i, ambient_dim + j)].clone()).collect()).collect();
        Ok(CoordMap { ambient_dim, basis_len: k, reduced, pivots, transform })
    }

    pub fn basis_len(&self) -> usize {
        self.basis_len
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[CycScalar]) -> Option<Vec<CycScalar>> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut residual = v.to_vec();
        for (row, &p) in self.reduced.iter().zip(&self.pivots) {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (j, x) in row {
                residual[*j] -= &(&f * x);
            }
        }
        if residual.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut c = vec![CycScalar::zero(); self.basis_len];
        for (i, &p) in self.pivots.iter().enumerate() {
            let f = &v[p];
            if f.is_zero() {
                continue;
            }
            for (cj, t) in c.iter_mut().zip(&self.transform[i]) {
                if !t.is_zero() {
                    *cj += &(f * t);
                }
            }
        }
        Some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> Vec<CycScalar> {
        v.iter().map(|&x| CycScalar::from_int(x)).collect()
    }

    #[test]
    fn canonical_representation() {
        let a = SubspaceBasis::span(3, vec![r(&[1, 1, 0]), r(&[0, 1, 1])]);
        let b = SubspaceBasis::span(3, vec![r(&[1, 2, 1]), r(&[1, 0, -1]), r(&[2, 2, 0])]);
        assert_eq!(a, b);
        assert!(a.contains(&r(&[1, 0, -1])));
        assert!(!a.contains(&r(&[0, 0, 1])));
    }

    #[test]
    fn sum_and_intersection() {
        let xy = SubspaceBasis::span(3, vec![r(&[1, 0, 0]), r(&[0, 1, 0])]);
        let yz = SubspaceBasis::span(3, vec![r(&[0, 1, 0]), r(&[0, 0, 1])]);
        assert_eq!(xy.sum(&yz), SubspaceBasis::full(3));
        assert_eq!(xy.intersection(&yz), SubspaceBasis::span(3, vec![r(&[0, 1, 0])]));
        assert_eq!(xy.intersection(&SubspaceBasis::zero(3)).dim(), 0);
    }

    #[test]
    fn coordinates_in_a_skew_basis() {
        let basis = vec![r(&[1, 1, 0, 0]), r(&[0, 1, 1, 0]), r(&[1, 0, 0, 1])];
        let cm = CoordMap::new(4, &basis).unwrap();
        let v: Vec<CycScalar> = r(&[8, 1, -2, 5]);
        let c = cm.coords(&v).unwrap();
        let mut rebuilt = vec![CycScalar::zero(); 4];
        for (ci, b) in c.iter().zip(&basis) {
            for (w, x) in rebuilt.iter_mut().zip(b) {
                *w += &(ci * x);
            }
        }
        assert_eq!(rebuilt, v);
        assert!(cm.coords(&r(&[1, 0, 0, 0])).is_none());
        assert_eq!(CoordMap::new(2, &[r(&[1, 2]), r(&[2, 4])]).unwrap_err(), LinalgError::Dependent);
    }
}
