//! Families realized by supermatrices of size `(p|q)` under the supercommutator.

use crate::exactfield::CycScalar;
use crate::linalg::{CoordMap, Matrix};
use crate::superalgebra::{ElementVector, LieSuperalgebra, Parity, Terms};

use super::{FamilyError, FamilySpec, FamilyTag};

#[derive(Debug, Clone)]
pub struct MatrixRealization {
    even_block: usize,
    odd_block: usize,
    names: Vec<String>,
    basis: Vec<Matrix>,
    /// Spans the ideal divided out for the projective families.
    central: Option<Matrix>,
    coords: CoordMap,
}

fn vec_of(m: &Matrix) -> Vec<CycScalar> {
    m.entries().to_vec()
}

struct Builder {
    size: usize,
    names: Vec<String>,
    basis: Vec<Matrix>,
}

impl Builder {
    fn new(size: usize) -> Self {
        Builder { size, names: Vec::new(), basis: Vec::new() }
    }

    /// `Σ c E_ij` over the given triples.
    fn push(&mut self, name: String, entries: &[(usize, usize, i64)]) {
        let mut m = Matrix::zeros(self.size, self.size);
        for &(i, j, c) in entries {
            m[(i, j)] = &m[(i, j)] + &CycScalar::from_int(c);
        }
        self.names.push(name);
        self.basis.push(m);
    }
}

impl MatrixRealization {
    pub fn new(spec: &FamilySpec) -> Result<Self, FamilyError> {
        let p = &spec.params;
        let (even_block, odd_block, b, central) = match spec.tag {
            FamilyTag::Gl => (p[0], p[1], general_linear(p[0], p[1]), None),
            FamilyTag::Sl => (p[0], p[1], special_linear(p[0], p[1], false), None),
            FamilyTag::Psl => (p[0], p[1], special_linear(p[0], p[1], true), Some(Matrix::identity(p[0] + p[1]))),
            FamilyTag::P => (p[0], p[0], periplectic(p[0], false), None),
            FamilyTag::SpQuotient => (p[0], p[0], periplectic(p[0], true), None),
            FamilyTag::Q => (p[0], p[0], queer(p[0], false, false), None),
            FamilyTag::Sq => (p[0], p[0], queer(p[0], true, false), None),
            FamilyTag::Psq => (p[0], p[0], queer(p[0], true, true), Some(Matrix::identity(2 * p[0]))),
            FamilyTag::Osp => (p[0], 2 * p[1], orthosymplectic(p[0], p[1]), None),
            t => return Err(FamilyError::Precondition(format!("{} is not a matrix family", t.name()))),
        };
        let mut vecs: Vec<Vec<CycScalar>> = b.basis.iter().map(vec_of).collect();
        if let Some(c) = &central {
            vecs.push(vec_of(c));
        }
        let size = even_block + odd_block;
        let coords = CoordMap::new(size * size, &vecs)
            .map_err(|_| FamilyError::Precondition(format!("basis of {spec} is dependent")))?;
        Ok(MatrixRealization { even_block, odd_block, names: b.names, basis: b.basis, central, coords })
    }

    pub fn blocks(&self) -> (usize, usize) {
        (self.even_block, self.odd_block)
    }

    pub fn size(&self) -> usize {
        self.even_block + self.odd_block
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn central(&self) -> Option<&Matrix> {
        self.central.as_ref()
    }

    pub fn is_quotient(&self) -> bool {
        self.central.is_some()
    }

    fn index_parity(&self, i: usize) -> Parity {
        Parity::from_bit(u8::from(i >= self.even_block))
    }

    /// Parity of a homogeneous supermatrix.
    pub fn matrix_parity(&self, m: &Matrix) -> Option<Parity> {
        let n = self.size();
        let mut seen = None;
        for i in 0..n {
            for j in 0..n {
                if !m[(i, j)].is_zero() {
                    let p = self.index_parity(i) + self.index_parity(j);
                    match seen {
                        None => seen = Some(p),
                        Some(q) if q != p => return None,
                        _ => {}
                    }
                }
            }
        }
        seen
    }

    /// `XY − (−1)^{|X||Y|} YX`, extended bilinearly over parity parts.
    pub fn supercommutator(&self, x: &Matrix, y: &Matrix) -> Matrix {
        let (x0, x1) = self.split(x);
        let (y0, y1) = self.split(y);
        let mut out = Matrix::zeros(self.size(), self.size());
        for (a, pa) in [(&x0, false), (&x1, true)] {
            for (b, pb) in [(&y0, false), (&y1, true)] {
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let ab = a * b;
                let ba = b * a;
                out = if pa && pb { &(&out + &ab) + &ba } else { &(&out + &ab) - &ba };
            }
        }
        out
    }

    fn split(&self, m: &Matrix) -> (Matrix, Matrix) {
        let n = self.size();
        let (mut even, mut odd) = (Matrix::zeros(n, n), Matrix::zeros(n, n));
        for i in 0..n {
            for j in 0..n {
                if (self.index_parity(i) + self.index_parity(j)).is_odd() {
                    odd[(i, j)] = m[(i, j)].clone();
                } else {
                    even[(i, j)] = m[(i, j)].clone();
                }
            }
        }
        (even, odd)
    }

    /// `Σ v_i B_i`.
    pub fn element_matrix(&self, v: &[CycScalar]) -> Matrix {
        let n = self.size();
        let mut out = Matrix::zeros(n, n);
        for (c, b) in v.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = &out + &b.scale(c);
            }
        }
        out
    }

    /// Coordinates of a matrix in the basis, modulo the central ideal for quotients.
    pub fn coords_of(&self, m: &Matrix) -> Option<ElementVector> {
        let mut c = self.coords.coords(m.entries())?;
        c.truncate(self.basis.len());
        Some(c)
    }

    /// Matrix of the linear map induced on the algebra by `f` acting on supermatrices.
    pub fn induced_map(&self, f: impl Fn(&Matrix) -> Matrix) -> Option<Matrix> {
        let cols: Option<Vec<ElementVector>> = self.basis.iter().map(|b| self.coords_of(&f(b))).collect();
        Some(Matrix::from_columns(&cols?))
    }

    pub fn algebra(&self) -> LieSuperalgebra {
        let d = self.basis.len();
        let parity: Vec<Parity> =
            self.basis.iter().map(|b| self.matrix_parity(b).expect("basis matrices are homogeneous")).collect();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i..d {
                let c = self.supercommutator(&self.basis[i], &self.basis[j]);
                let coords = self.coords_of(&c).expect("supercommutator stays in the algebra");
                let terms: Terms = coords.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                brackets.push((i, j, terms));
            }
        }
        LieSuperalgebra::from_upper_table(self.names.clone(), parity, 1, brackets).expect("indices in range")
    }
}

fn general_linear(m: usize, n: usize) -> Builder {
    let size = m + n;
    let mut b = Builder::new(size);
    let odd = |i: usize, j: usize| (i >= m) != (j >= m);
    for parity in [false, true] {
        for i in 0..size {
            for j in 0..size {
                if odd(i, j) == parity {
                    b.push(format!("E{}_{}", i + 1, j + 1), &[(i, j, 1)]);
                }
            }
        }
    }
    b
}

/// Supertraceless matrices; for `projective` the last diagonal generator is left
/// out so that the basis is a complement of the identity.
fn special_linear(m: usize, n: usize, projective: bool) -> Builder {
    let size = m + n;
    let mut b = Builder::new(size);
    let odd = |i: usize, j: usize| (i >= m) != (j >= m);
    for i in 0..size {
        for j in 0..size {
            if i != j && !odd(i, j) {
                b.push(format!("E{}_{}", i + 1, j + 1), &[(i, j, 1)]);
            }
        }
    }
    let s = |i: usize| if i < m { 1 } else { -1 };
    let diag = if projective { size - 2 } else { size - 1 };
    for i in 0..diag {
        // E_ii − (s_i/s_{i+1}) E_{i+1,i+1}
        b.push(format!("h{}", i + 1), &[(i, i, 1), (i + 1, i + 1, -s(i) * s(i + 1))]);
    }
    for i in 0..size {
        for j in 0..size {
            if odd(i, j) {
                b.push(format!("E{}_{}", i + 1, j + 1), &[(i, j, 1)]);
            }
        }
    }
    b
}

/// `(A B; C −Aᵗ)` with `B = Bᵗ`, `C = −Cᵗ`; `traceless` imposes `tr A = 0`.
fn periplectic(n: usize, traceless: bool) -> Builder {
    let mut b = Builder::new(2 * n);
    for i in 0..n {
        for j in 0..n {
            if i != j || !traceless {
                b.push(format!("A{}_{}", i + 1, j + 1), &[(i, j, 1), (n + j, n + i, -1)]);
            }
        }
    }
    if traceless {
        for i in 0..n - 1 {
            b.push(
                format!("hA{}", i + 1),
                &[(i, i, 1), (n + i, n + i, -1), (i + 1, i + 1, -1), (n + i + 1, n + i + 1, 1)],
            );
        }
    }
    for i in 0..n {
        for j in i..n {
            if i == j {
                b.push(format!("B{}_{}", i + 1, j + 1), &[(i, n + i, 1)]);
            } else {
                b.push(format!("B{}_{}", i + 1, j + 1), &[(i, n + j, 1), (j, n + i, 1)]);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            b.push(format!("C{}_{}", i + 1, j + 1), &[(n + i, j, 1), (n + j, i, -1)]);
        }
    }
    b
}

/// `(A B; B A)`; `odd_traceless` imposes `tr B = 0`, `projective` drops one diagonal
/// even generator so that the basis complements the identity.
fn queer(n: usize, odd_traceless: bool, projective: bool) -> Builder {
    let mut b = Builder::new(2 * n);
    for i in 0..n {
        for j in 0..n {
            if i == j && projective && i == n - 1 {
                continue;
            }
            b.push(format!("A{}_{}", i + 1, j + 1), &[(i, j, 1), (n + i, n + j, 1)]);
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j && odd_traceless {
                continue;
            }
            b.push(format!("B{}_{}", i + 1, j + 1), &[(i, n + j, 1), (n + i, j, 1)]);
        }
    }
    if odd_traceless {
        for i in 0..n - 1 {
            b.push(
                format!("hB{}", i + 1),
                &[(i, n + i, 1), (n + i, i, 1), (i + 1, n + i + 1, -1), (n + i + 1, i + 1, -1)],
            );
        }
    }
    b
}

/// `osp(m|2n)`: `(A B; J Bᵗ D)` with `A ∈ so_m`, `D ∈ sp_2n` for `J = (0 I; −I 0)`.
fn orthosymplectic(m: usize, n: usize) -> Builder {
    let mut b = Builder::new(m + 2 * n);
    for i in 0..m {
        for j in i + 1..m {
            b.push(format!("so{}_{}", i + 1, j + 1), &[(i, j, 1), (j, i, -1)]);
        }
    }
    let o = m;
    for i in 0..n {
        for j in 0..n {
            b.push(format!("spA{}_{}", i + 1, j + 1), &[(o + i, o + j, 1), (o + n + j, o + n + i, -1)]);
        }
    }
    for i in 0..n {
        for j in i..n {
            if i == j {
                b.push(format!("spB{}_{}", i + 1, j + 1), &[(o + i, o + n + i, 1)]);
                b.push(format!("spC{}_{}", i + 1, j + 1), &[(o + n + i, o + i, 1)]);
            } else {
                b.push(format!("spB{}_{}", i + 1, j + 1), &[(o + i, o + n + j, 1), (o + j, o + n + i, 1)]);
                b.push(format!("spC{}_{}", i + 1, j + 1), &[(o + n + i, o + j, 1), (o + n + j, o + i, 1)]);
            }
        }
    }
    // B = E_{i,a}; the lower-left block J Bᵗ has column i equal to column a of J
    for i in 0..m {
        for a in 0..2 * n {
            let (row, sign) = if a < n { (n + a, -1) } else { (a - n, 1) };
            b.push(format!("X{}_{}", i + 1, a + 1), &[(i, o + a, 1), (o + row, i, sign)]);
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::expected_superdimension;

    fn unit(n: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        m[(i, j)] = CycScalar::one();
        m
    }

    fn check(spec: FamilySpec) -> LieSuperalgebra {
        let g = MatrixRealization::new(&spec).unwrap().algebra();
        assert_eq!((g.even_dim(), g.odd_dim()), expected_superdimension(&spec), "{spec}");
        assert!(g.verify_structure().is_empty(), "{spec}");
        g
    }

    #[test]
    fn small_instances_have_the_hand_counted_dimensions() {
        // sl(2|1): 2·2 + 1 − 1 even, 2·2·1 odd
        let g = check(FamilySpec::sl(2, 1));
        assert_eq!((g.even_dim(), g.odd_dim()), (4, 4));
        let g = check(FamilySpec::osp(3, 1));
        assert_eq!((g.even_dim(), g.odd_dim()), (6, 6));
        let g = check(FamilySpec::psl(2));
        assert_eq!(g.dim(), 14);
        check(FamilySpec::new(FamilyTag::Gl, vec![2, 1]));
        check(FamilySpec::new(FamilyTag::P, vec![2]));
        check(FamilySpec::new(FamilyTag::Q, vec![2]));
        check(FamilySpec::new(FamilyTag::Sq, vec![2]));
        check(FamilySpec::osp(2, 1));
        check(FamilySpec::osp(1, 2));
    }

    #[test]
    fn simple_members() {
        for spec in [FamilySpec::sl(2, 1), FamilySpec::psl(2), FamilySpec::osp(1, 1), FamilySpec::osp(3, 1)] {
            assert!(check(spec.clone()).is_simple(), "{spec}");
        }
        assert!(!check(FamilySpec::new(FamilyTag::Gl, vec![2, 1])).is_simple());
    }

    #[test]
    fn supercommutator_of_odd_elements_is_symmetric() {
        let r = MatrixRealization::new(&FamilySpec::sl(2, 1)).unwrap();
        let x = unit(3, 0, 2);
        let y = unit(3, 2, 1);
        assert_eq!(r.supercommutator(&x, &y), unit(3, 0, 1));
        assert_eq!(r.supercommutator(&y, &x), unit(3, 0, 1));
    }
}
