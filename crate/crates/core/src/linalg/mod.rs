//! Exact linear algebra over [`CycScalar`](crate::exactfield::CycScalar).

mod echelon;
mod matrix;
mod subspace;

pub use echelon::{Echelon, SparseRow};
pub use matrix::{Matrix, Solution};
pub use subspace::{CoordMap, SubspaceBasis};

use crate::exactfield::CycScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("vectors are linearly dependent")]
    Dependent,
}

pub fn nullspace(m: &Matrix) -> SubspaceBasis {
    m.nullspace()
}

pub fn solve_linear(a: &Matrix, b: &[CycScalar]) -> Result<Solution, LinalgError> {
    a.solve(b)
}

/// `ker(M − λI)`.
pub fn eigenspace(m: &Matrix, lambda: &CycScalar) -> Result<SubspaceBasis, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::Shape("eigenspace of a non-square matrix".into()));
    }
    let shifted = m - &Matrix::identity(m.rows()).scale(lambda);
    Ok(shifted.nullspace())
}

/// Writes `t` (size `ab × ab`, index pairing `i·b + j`) as `A ⊗ B` if possible.
///
/// `t` is reshuffled into the `a² × b²` matrix `R[(i,i′),(j,j′)] = T[(i,j),(i′,j′)]`,
/// which equals `vec(A)·vec(B)ᵗ` exactly when `t = A ⊗ B`. The returned `A` has
/// its first nonzero entry equal to 1.
pub fn rank_one_factor(t: &Matrix, a: usize, b: usize) -> Result<Option<(Matrix, Matrix)>, LinalgError> {
    if t.rows() != a * b || t.cols() != a * b {
        return Err(LinalgError::Shape(format!("expected a {0}x{0} matrix", a * b)));
    }
    let r = |ai: usize, aj: usize, bi: usize, bj: usize| &t[(ai * b + bi, aj * b + bj)];
    let Some(pos) = t.entries().iter().position(|x| !x.is_zero()) else {
        return Ok(None);
    };
    let (row, col) = (pos / (a * b), pos % (a * b));
    let (i0, j0, i1, j1) = (row / b, row % b, col / b, col % b);
    // column (j0, j1) of R gives vec(A) up to scale, row (i0, i1) gives vec(B)
    let mut am = Matrix::zeros(a, a);
    for i in 0..a {
        for ip in 0..a {
            am[(i, ip)] = r(i, ip, j0, j1).clone();
        }
    }
    let pivot = r(i0, i1, j0, j1).clone();
    let pinv = pivot.inv().expect("nonzero");
    let mut bm = Matrix::zeros(b, b);
    for j in 0..b {
        for jp in 0..b {
            bm[(j, jp)] = r(i0, i1, j, jp) * &pinv;
        }
    }
    let lead = am.entries().iter().find(|x| !x.is_zero()).expect("column contains the pivot").clone();
    let am = am.scale(&lead.inv().expect("nonzero"));
    let bm = bm.scale(&lead);
    if &am.kron(&bm) == t {
        Ok(Some((am, bm)))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zeta(m: u32) -> CycScalar {
        CycScalar::primitive_root(m).unwrap()
    }

    #[test]
    fn eigenspaces_of_a_diagonal_matrix() {
        let i = zeta(4);
        let m = Matrix::diagonal(&[CycScalar::one(), i.clone(), CycScalar::from_int(-1), i.pow(3)]);
        assert_eq!(eigenspace(&m, &i).unwrap().dim(), 1);
        assert_eq!(eigenspace(&Matrix::identity(3), &CycScalar::one()).unwrap().dim(), 3);
        let total: usize = (0..4).map(|k| eigenspace(&m, &i.pow(k)).unwrap().dim()).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn rank_one_cases() {
        let (a, b) = rank_one_factor(&Matrix::identity(6), 2, 3).unwrap().unwrap();
        assert!(a.is_identity() && b.is_identity());

        let a = Matrix::from_int_rows(&[&[2, 1], &[-1, 3]]);
        let b = Matrix::from_int_rows(&[&[1, 0, 2], &[0, 5, -1], &[3, 1, 1]]);
        let t = a.kron(&b);
        let (a2, b2) = rank_one_factor(&t, 2, 3).unwrap().unwrap();
        assert_eq!(a2.kron(&b2), t);
        assert!(a2[(0, 0)].is_one());
        let scaled = t.scale(&zeta(3));
        assert!(rank_one_factor(&scaled, 2, 3).unwrap().is_some());

        let mut swap = Matrix::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                swap[(j * 2 + i, i * 2 + j)] = CycScalar::one();
            }
        }
        assert!(rank_one_factor(&swap, 2, 2).unwrap().is_none());
        assert!(rank_one_factor(&Matrix::zeros(4, 4), 2, 2).unwrap().is_none());
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec(prop::collection::vec((-3i64..=3, 0u32..3), cols), rows).prop_map(|rs| {
            let z = zeta(3);
            Matrix::from_rows(
                rs.into_iter()
                    .map(|r| r.into_iter().map(|(c, k)| &CycScalar::from_int(c) * &z.pow(k)).collect())
                    .collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn rank_nullity(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| small_matrix(r, c))) {
            let ns = m.nullspace();
            prop_assert_eq!(m.rank() + ns.dim(), m.cols());
            for v in ns.vectors() {
                prop_assert!(m.mul_vec(v).iter().all(CycScalar::is_zero));
            }
        }

        #[test]
        fn kronecker_round_trip(a in small_matrix(2, 2), b in small_matrix(3, 3)) {
            let t = a.kron(&b);
            match rank_one_factor(&t, 2, 3).unwrap() {
                Some((a2, b2)) => prop_assert_eq!(a2.kron(&b2), t),
                None => prop_assert!(t.is_zero()),
            }
        }

        #[test]
        fn finite_order_eigenspaces_fill_the_space(p in prop::sample::subsequence(vec![0usize, 1, 2, 3], 4).prop_shuffle(),
                                                     c in small_matrix(4, 4)) {
            // σ = C·P·C⁻¹ has order dividing 12 when P is a 4×4 permutation matrix
            prop_assume!(c.is_invertible());
            let mut perm = Matrix::zeros(4, 4);
            for (i, &j) in p.iter().enumerate() {
                perm[(i, j)] = CycScalar::one();
            }
            let sigma = &(&c * &perm) * &c.inverse().unwrap();
            prop_assert!(sigma.pow(12).is_identity());
            let z = zeta(12);
            let total: usize = (0..12).map(|k| eigenspace(&sigma, &z.pow(k)).unwrap().dim()).sum();
            prop_assert_eq!(total, 4);
        }
    }
}
