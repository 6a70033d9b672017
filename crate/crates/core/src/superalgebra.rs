//! Finite-dimensional Lie superalgebras given by structure constants.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactfield::CycScalar;
use crate::linalg::{Echelon, Matrix, SparseRow, SubspaceBasis};

/// Upper bound used by [`LieSuperalgebra::automorphism_order`] when none is given.
pub const DEFAULT_ORDER_BOUND: u64 = 360;

pub type ElementVector = Vec<CycScalar>;

/// Sparse expansion `Σ c_k b_k`, sorted by `k`, zero coefficients absent.
pub type Terms = Vec<(usize, CycScalar)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Self {
        if b & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("basis index {0} out of range")]
    Index(usize),
    #[error("{0}")]
    Usage(String),
}

/// A failed axiom on specific basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `[b_j, b_i] ≠ −(−1)^{|i||j|} [b_i, b_j]`
    SuperSkew {
        i: usize,
        j: usize,
    },
    /// `[b_i, b_j]` has a `b_k` component of the wrong parity.
    Parity {
        i: usize,
        j: usize,
        k: usize,
    },
    SuperJacobi {
        i: usize,
        j: usize,
        k: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SuperSkew { i, j } => write!(f, "super-skew fails on ({i}, {j})"),
            Violation::Parity { i, j, k } => write!(f, "parity fails: [b{i}, b{j}] has a b{k} component"),
            Violation::SuperJacobi { i, j, k } => write!(f, "super-Jacobi fails on ({i}, {j}, {k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSuperalgebra {
    names: Vec<String>,
    parity: Vec<Parity>,
    /// `table[i * dim + j]` = `[b_i, b_j]`
    table: Vec<Terms>,
    conductor: u32,
}

fn normalize_terms(terms: impl IntoIterator<Item = (usize, CycScalar)>) -> Terms {
    let mut acc: BTreeMap<usize, CycScalar> = BTreeMap::new();
    for (k, c) in terms {
        *acc.entry(k).or_insert_with(CycScalar::zero) += &c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn add_scaled(acc: &mut [CycScalar], terms: &[(usize, CycScalar)], s: &CycScalar) {
    for (k, c) in terms {
        acc[*k] += &(s * c);
    }
}

/// Sign `(−1)^{|a||b|}`.
fn sign(a: Parity, b: Parity) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

impl LieSuperalgebra {
    /// An algebra with the given basis and all brackets zero.
    pub fn new(names: Vec<String>, parity: Vec<Parity>, conductor: u32) -> Result<Self, AlgebraError> {
        if names.len() != parity.len() {
            return Err(AlgebraError::Dimension { expected: names.len(), got: parity.len() });
        }
        let dim = names.len();
        Ok(LieSuperalgebra { names, parity, table: vec![Vec::new(); dim * dim], conductor })
    }

    pub fn abelian(parity: Vec<Parity>) -> Self {
        let names = (0..parity.len()).map(|i| format!("b{i}")).collect();
        Self::new(names, parity, 1).expect("lengths agree")
    }

    /// Builds an algebra from the brackets `[b_i, b_j]` with `i ≤ j`; the rest follow
    /// from super-skew symmetry.
    pub fn from_upper_table(
        names: Vec<String>,
        parity: Vec<Parity>,
        conductor: u32,
        brackets: impl IntoIterator<Item = (usize, usize, Terms)>,
    ) -> Result<Self, AlgebraError> {
        let mut g = Self::new(names, parity, conductor)?;
        for (i, j, terms) in brackets {
            if i > j {
                return Err(AlgebraError::Usage(format!("bracket ({i}, {j}) listed with i > j")));
            }
            g.set_bracket(i, j, terms)?;
        }
        Ok(g)
    }

    /// Sets `[b_i, b_j]` and the super-skew partner `[b_j, b_i]`.
    pub fn set_bracket(&mut self, i: usize, j: usize, terms: Terms) -> Result<(), AlgebraError> {
        self.check_index(i)?;
        self.check_index(j)?;
        for (k, _) in &terms {
            self.check_index(*k)?;
        }
        let terms = normalize_terms(terms);
        let s = CycScalar::from_int(-sign(self.parity[i], self.parity[j]));
        let partner: Terms = terms.iter().map(|(k, c)| (*k, c * &s)).collect();
        let d = self.dim();
        self.table[i * d + j] = terms;
        if i != j {
            self.table[j * d + i] = partner;
        }
        Ok(())
    }

    /// Sets only `[b_i, b_j]`, leaving `[b_j, b_i]` untouched.
    pub fn set_bracket_unchecked(&mut self, i: usize, j: usize, terms: Terms) {
        let d = self.dim();
        self.table[i * d + j] = normalize_terms(terms);
    }

    fn check_index(&self, i: usize) -> Result<(), AlgebraError> {
        if i < self.dim() {
            Ok(())
        } else {
            Err(AlgebraError::Index(i))
        }
    }

    fn check_len(&self, v: &[CycScalar]) -> Result<(), AlgebraError> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(AlgebraError::Dimension { expected: self.dim(), got: v.len() })
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|p| !p.is_odd()).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn indices_of(&self, p: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity[i] == p).collect()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn set_conductor(&mut self, n: u32) {
        self.conductor = n;
    }

    pub fn structure(&self, i: usize, j: usize) -> &[(usize, CycScalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> ElementVector {
        let mut v = vec![CycScalar::zero(); self.dim()];
        v[i] = CycScalar::one();
        v
    }

    /// Parity of a nonzero homogeneous vector, `None` for zero or mixed vectors.
    pub fn parity_of(&self, v: &[CycScalar]) -> Option<Parity> {
        let mut seen = None;
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                match seen {
                    None => seen = Some(self.parity[i]),
                    Some(p) if p != self.parity[i] => return None,
                    _ => {}
                }
            }
        }
        seen
    }

    pub fn bracket(&self, x: &[CycScalar], y: &[CycScalar]) -> Result<ElementVector, AlgebraError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[CycScalar], y: &[CycScalar]) -> ElementVector {
        let d = self.dim();
        let mut out = vec![CycScalar::zero(); d];
        let ys: Vec<(usize, &CycScalar)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &(j, yj) in &ys {
                let t = &self.table[i * d + j];
                if !t.is_empty() {
                    add_scaled(&mut out, t, &(xi * yj));
                }
            }
        }
        out
    }

    /// Bracket of sparse vectors.
    pub fn bracket_sparse(&self, x: &[(usize, CycScalar)], y: &[(usize, CycScalar)]) -> SparseRow {
        let d = self.dim();
        let mut acc: BTreeMap<usize, CycScalar> = BTreeMap::new();
        for (i, xi) in x {
            for (j, yj) in y {
                let t = &self.table[i * d + j];
                if t.is_empty() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in t {
                    *acc.entry(*k).or_insert_with(CycScalar::zero) += &(&s * c);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Matrix of `ad_x = [x, ·]`.
    pub fn ad_matrix(&self, x: &[CycScalar]) -> Result<Matrix, AlgebraError> {
        self.check_len(x)?;
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, c) in &self.table[i * d + j] {
                    m[(*k, j)] = &m[(*k, j)] + &(xi * c);
                }
            }
        }
        Ok(m)
    }

    /// Exhaustive check of super-skew symmetry, parity additivity and super-Jacobi
    /// over all basis pairs and triples. An empty list means the table is valid.
    pub fn verify_structure(&self) -> Vec<Violation> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let pij = self.parity[i] + self.parity[j];
                for (k, _) in self.structure(i, j) {
                    if self.parity[*k] != pij {
                        out.push(Violation::Parity { i, j, k: *k });
                    }
                }
                if i <= j {
                    let s = CycScalar::from_int(-sign(self.parity[i], self.parity[j]));
                    let expected: Terms = self.structure(i, j).iter().map(|(k, c)| (*k, c * &s)).collect();
                    if expected != self.structure(j, i) {
                        out.push(Violation::SuperSkew { i, j });
                    }
                }
            }
        }
        let mut acc = vec![CycScalar::zero(); d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (pi, pj, pk) = (self.parity[i], self.parity[j], self.parity[k]);
                    // [x,[y,z]] + (−1)^{x(y+z)}[y,[z,x]] + (−1)^{z(x+y)}[z,[x,y]]
                    let s2 = CycScalar::from_int(sign(pi, pj + pk));
                    let s3 = CycScalar::from_int(sign(pk, pi + pj));
                    for (m, c) in self.structure(j, k) {
                        add_scaled(&mut acc, self.structure(i, *m), c);
                    }
                    for (m, c) in self.structure(k, i) {
                        add_scaled(&mut acc, self.structure(j, *m), &(c * &s2));
                    }
                    for (m, c) in self.structure(i, j) {
                        add_scaled(&mut acc, self.structure(k, *m), &(c * &s3));
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        out.push(Violation::SuperJacobi { i, j, k });
                        acc.iter_mut().for_each(|x| *x = CycScalar::zero());
                    }
                }
            }
        }
        out
    }

    /// Span of all brackets `[b_i, b_j]`.
    pub fn derived_algebra(&self) -> SubspaceBasis {
        let mut e = Echelon::new(self.dim());
        for t in &self.table {
            if !t.is_empty() && e.rank() < self.dim() {
                e.insert(t);
            }
        }
        SubspaceBasis::from_echelon(&e)
    }

    /// `{x : [b_i, x] = 0 for all i}`.
    pub fn center(&self) -> SubspaceBasis {
        let d = self.dim();
        let mut e = Echelon::new(d);
        for i in 0..d {
            // coefficient of b_k in [b_i, x] is Σ_a x_a c_{ia}^k
            let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
            for a in 0..d {
                for (k, c) in self.structure(i, a) {
                    rows.entry(*k).or_default().push((a, c.clone()));
                }
            }
            for row in rows.values() {
                e.insert(row);
            }
        }
        SubspaceBasis::span(d, e.nullspace())
    }

    /// Smallest graded ideal containing the given homogeneous vectors.
    pub fn ideal_closure(&self, seeds: &[ElementVector]) -> SubspaceBasis {
        let d = self.dim();
        let mut e = Echelon::new(d);
        let mut queue: Vec<SparseRow> = Vec::new();
        for s in seeds {
            let sparse: SparseRow =
                s.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
            if e.insert(&sparse) {
                queue.push(sparse);
            }
        }
        let mut next = 0;
        while next < queue.len() && e.rank() < d {
            let v = queue[next].clone();
            next += 1;
            for i in 0..d {
                let w = self.bracket_sparse(&[(i, CycScalar::one())], &v);
                if !w.is_empty() && e.insert(&w) {
                    queue.push(w);
                    if e.rank() == d {
                        break;
                    }
                }
            }
        }
        SubspaceBasis::from_echelon(&e)
    }

    /// `[g,g] = g`, zero center, and every basis vector generates all of `g` as an ideal.
    pub fn is_simple(&self) -> bool {
        let d = self.dim();
        if d == 0 || !self.derived_algebra().is_full() || self.center().dim() != 0 {
            return false;
        }
        (0..d).all(|i| self.ideal_closure(&[self.basis_vector(i)]).is_full())
    }

    /// Basis indices generating `g` as an algebra, chosen greedily (odd first).
    pub fn generating_set(&self) -> Vec<usize> {
        let d = self.dim();
        let mut order: Vec<usize> = self.indices_of(Parity::Odd);
        order.extend(self.indices_of(Parity::Even));
        let mut gens = Vec::new();
        let mut e = Echelon::new(d);
        let mut elems: Vec<SparseRow> = Vec::new();
        let mut done = 0usize;
        for &cand in &order {
            if e.rank() == d {
                break;
            }
            let v: SparseRow = vec![(cand, CycScalar::one())];
            if !e.insert(&v) {
                continue;
            }
            gens.push(cand);
            elems.push(v);
            // close under brackets
            while done < elems.len() && e.rank() < d {
                for other in 0..=done {
                    let w = self.bracket_sparse(&elems[other], &elems[done]);
                    if !w.is_empty() && e.insert(&w) {
                        elems.push(w);
                    }
                }
                done += 1;
            }
        }
        gens
    }

    fn parity_unknowns(&self) -> (Vec<Option<usize>>, Vec<(usize, usize)>) {
        let d = self.dim();
        let mut col = vec![None; d * d];
        let mut cells = Vec::new();
        for k in 0..d {
            for a in 0..d {
                if self.parity[k] == self.parity[a] {
                    col[k * d + a] = Some(cells.len());
                    cells.push((k, a));
                }
            }
        }
        (col, cells)
    }

    fn to_map_space(&self, cells: &[(usize, usize)], v: &[CycScalar]) -> Vec<CycScalar> {
        let d = self.dim();
        let mut out = vec![CycScalar::zero(); d * d];
        for (x, &(k, a)) in v.iter().zip(cells) {
            out[k * d + a] = x.clone();
        }
        out
    }

    /// Parity-preserving `χ` with `χ([x,y]) = [χ(x), y]`, as vectors of length
    /// `dim²` (entry `k·dim + a` is the `b_k` coefficient of `χ(b_a)`).
    pub fn centroid(&self) -> SubspaceBasis {
        let d = self.dim();
        let (col, cells) = self.parity_unknowns();
        let n = cells.len();
        let mut e = Echelon::new(n);
        // the maps satisfying the identity for all x form a subalgebra in y,
        // so generators suffice for y; the identity map always solves it
        'outer: for y in self.generating_set() {
            for x in 0..d {
                let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
                // Σ_a c_xy^a χ_ka
                for (a, c) in self.structure(x, y) {
                    for k in 0..d {
                        if let Some(cc) = col[k * d + a] {
                            rows.entry(k).or_default().push((cc, c.clone()));
                        }
                    }
                }
                // − Σ_a χ_ax c_ay^k
                for a in 0..d {
                    if let Some(cc) = col[a * d + x] {
                        for (k, c) in self.structure(a, y) {
                            rows.entry(*k).or_default().push((cc, -c));
                        }
                    }
                }
                for row in rows.into_values() {
                    e.insert(&normalize_terms(row));
                    if e.rank() + 1 == n {
                        break 'outer;
                    }
                }
            }
        }
        let vecs: Vec<Vec<CycScalar>> = e.nullspace().iter().map(|v| self.to_map_space(&cells, v)).collect();
        SubspaceBasis::span(d * d, vecs)
    }

    /// Even derivations, as vectors of length `dim²` (same layout as [`Self::centroid`]).
    pub fn even_derivations(&self) -> SubspaceBasis {
        let d = self.dim();
        let (col, cells) = self.parity_unknowns();
        let mut e = Echelon::new(cells.len());
        // the Leibniz rule holding for fixed x and all y defines a subalgebra in x
        for x in self.generating_set() {
            for y in 0..d {
                let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
                // Σ_a c_xy^a D_ka
                for (a, c) in self.structure(x, y) {
                    for k in 0..d {
                        if let Some(cc) = col[k * d + a] {
                            rows.entry(k).or_default().push((cc, c.clone()));
                        }
                    }
                }
                // − Σ_a D_ax c_ay^k − Σ_a D_ay c_xa^k
                for a in 0..d {
                    if let Some(cc) = col[a * d + x] {
                        for (k, c) in self.structure(a, y) {
                            rows.entry(*k).or_default().push((cc, -c));
                        }
                    }
                    if let Some(cc) = col[a * d + y] {
                        for (k, c) in self.structure(x, a) {
                            rows.entry(*k).or_default().push((cc, -c));
                        }
                    }
                }
                for row in rows.into_values() {
                    e.insert(&normalize_terms(row));
                }
            }
        }
        let vecs: Vec<Vec<CycScalar>> = e.nullspace().iter().map(|v| self.to_map_space(&cells, v)).collect();
        SubspaceBasis::span(d * d, vecs)
    }

    /// Whether the `dim²` vector (layout of [`Self::centroid`]) is an even derivation.
    pub fn is_even_derivation(&self, v: &[CycScalar]) -> bool {
        let d = self.dim();
        let m = map_matrix(d, v);
        if !self.preserves_parity(&m) {
            return false;
        }
        let cols: Vec<ElementVector> = (0..d).map(|i| m.column(i)).collect();
        for i in 0..d {
            for j in 0..d {
                let mut lhs = vec![CycScalar::zero(); d];
                for (k, c) in self.structure(i, j) {
                    for (a, x) in cols[*k].iter().enumerate() {
                        if !x.is_zero() {
                            lhs[a] += &(c * x);
                        }
                    }
                }
                let r1 = self.bracket_unchecked(&cols[i], &self.basis_vector(j));
                let r2 = self.bracket_unchecked(&self.basis_vector(i), &cols[j]);
                if lhs.iter().zip(r1.iter().zip(&r2)).any(|(l, (a, b))| l != &(a + b)) {
                    return false;
                }
            }
        }
        true
    }

    fn preserves_parity(&self, m: &Matrix) -> bool {
        let d = self.dim();
        (0..d).all(|k| (0..d).all(|a| self.parity[k] == self.parity[a] || m[(k, a)].is_zero()))
    }

    /// Invertible, parity-preserving, and `M[b_i, b_j] = [M b_i, M b_j]` for all pairs.
    pub fn is_automorphism(&self, m: &Matrix) -> bool {
        let d = self.dim();
        if m.rows() != d || m.cols() != d || !self.preserves_parity(m) || !m.is_invertible() {
            return false;
        }
        self.is_bracket_equivariant(m)
    }

    pub(crate) fn is_bracket_equivariant(&self, m: &Matrix) -> bool {
        let d = self.dim();
        let images: Vec<SparseRow> = (0..d)
            .map(|i| (0..d).filter(|&k| !m[(k, i)].is_zero()).map(|k| (k, m[(k, i)].clone())).collect())
            .collect();
        for i in 0..d {
            for j in i..d {
                let mut lhs: BTreeMap<usize, CycScalar> = BTreeMap::new();
                for (k, c) in self.structure(i, j) {
                    for (a, x) in &images[*k] {
                        *lhs.entry(*a).or_insert_with(CycScalar::zero) += &(c * x);
                    }
                }
                let lhs: SparseRow = lhs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if lhs != self.bracket_sparse(&images[i], &images[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Least `m ≤ bound` with `M^m = I`.
    pub fn automorphism_order(&self, m: &Matrix, bound: u64) -> Option<u64> {
        matrix_order(m, bound)
    }

    /// `g ⊕ h` with the basis of `g` first.
    pub fn direct_sum(&self, other: &LieSuperalgebra) -> LieSuperalgebra {
        let (d1, d2) = (self.dim(), other.dim());
        let names = self.names.iter().cloned().chain(other.names.iter().map(|n| format!("{n}'"))).collect();
        let parity = self.parity.iter().chain(&other.parity).copied().collect();
        let mut g = LieSuperalgebra::new(names, parity, self.conductor.max(other.conductor)).expect("lengths agree");
        for i in 0..d1 {
            for j in 0..d1 {
                g.table[i * (d1 + d2) + j] = self.structure(i, j).to_vec();
            }
        }
        for i in 0..d2 {
            for j in 0..d2 {
                g.table[(d1 + i) * (d1 + d2) + d1 + j] =
                    other.structure(i, j).iter().map(|(k, c)| (d1 + k, c.clone())).collect();
            }
        }
        g
    }
}

/// The `dim × dim` matrix stored in a `dim²` vector (entry `k·dim + a` at `(k, a)`).
pub fn map_matrix(d: usize, v: &[CycScalar]) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    for k in 0..d {
        for a in 0..d {
            m[(k, a)] = v[k * d + a].clone();
        }
    }
    m
}

/// Least `m ≤ bound` with `M^m = I`.
pub fn matrix_order(m: &Matrix, bound: u64) -> Option<u64> {
    if !m.is_square() {
        return None;
    }
    let mut p = m.clone();
    for k in 1..=bound {
        if p.is_identity() {
            return Some(k);
        }
        p = &p * m;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> CycScalar {
        CycScalar::from_int(n)
    }

    /// sl2 with basis e, h, f.
    fn sl2() -> LieSuperalgebra {
        let names = ["e", "h", "f"].iter().map(|s| s.to_string()).collect();
        LieSuperalgebra::from_upper_table(
            names,
            vec![Parity::Even; 3],
            1,
            vec![(0, 1, vec![(0, c(-2))]), (0, 2, vec![(1, c(1))]), (1, 2, vec![(2, c(-2))])],
        )
        .unwrap()
    }

    /// osp(1|2): even e, h, f; odd x, y.
    fn osp12() -> LieSuperalgebra {
        let names = ["e", "h", "f", "x", "y"].iter().map(|s| s.to_string()).collect();
        let (ev, od) = (Parity::Even, Parity::Odd);
        LieSuperalgebra::from_upper_table(
            names,
            vec![ev, ev, ev, od, od],
            1,
            vec![
                (0, 1, vec![(0, c(-2))]),
                (0, 2, vec![(1, c(1))]),
                (1, 2, vec![(2, c(-2))]),
                (1, 3, vec![(3, c(1))]),
                (1, 4, vec![(4, c(-1))]),
                (0, 4, vec![(3, c(-1))]),
                (2, 3, vec![(4, c(-1))]),
                (3, 3, vec![(0, c(2))]),
                (4, 4, vec![(2, c(-2))]),
                (3, 4, vec![(1, c(1))]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn small_algebras_verify() {
        for g in [sl2(), osp12()] {
            assert_eq!(g.verify_structure(), vec![]);
            assert!(g.is_simple());
            assert_eq!(g.centroid().dim(), 1);
            assert_eq!(g.even_derivations().dim(), 3);
        }
    }

    #[test]
    fn perturbation_is_reported() {
        let mut g = osp12();
        g.set_bracket_unchecked(0, 2, vec![(1, c(2))]);
        assert!(!g.verify_structure().is_empty());
        let mut g = osp12();
        g.set_bracket(3, 4, vec![(1, c(2))]).unwrap();
        assert!(g.verify_structure().iter().any(|v| matches!(v, Violation::SuperJacobi { .. })));
    }

    #[test]
    fn even_self_bracket_vanishes() {
        let g = osp12();
        let x = vec![c(1), c(2), c(-3), c(0), c(0)];
        assert!(g.bracket(&x, &x).unwrap().iter().all(CycScalar::is_zero));
        assert!(g.bracket(&x, &[c(1)]).is_err());
    }

    #[test]
    fn non_simple_examples() {
        assert!(!LieSuperalgebra::abelian(vec![Parity::Even, Parity::Odd]).is_simple());
        let g = sl2().direct_sum(&sl2());
        assert_eq!(g.verify_structure(), vec![]);
        assert!(!g.is_simple());
        assert_eq!(g.centroid().dim(), 2);
    }

    #[test]
    fn automorphisms_of_sl2() {
        let g = sl2();
        assert!(g.is_automorphism(&Matrix::identity(3)));
        // Chevalley involution e ↦ −f, h ↦ −h, f ↦ −e
        let w = Matrix::from_int_rows(&[&[0, 0, -1], &[0, -1, 0], &[-1, 0, 0]]);
        assert!(g.is_automorphism(&w));
        assert_eq!(g.automorphism_order(&w, DEFAULT_ORDER_BOUND), Some(2));
        assert!(!g.is_automorphism(&Matrix::diagonal(&[c(2), c(1), c(1)])));
        let derivs = g.even_derivations();
        assert!(derivs.vectors().iter().all(|v| g.is_even_derivation(v)));
    }

    #[test]
    fn odd_involution_of_osp12() {
        let g = osp12();
        let s = Matrix::diagonal(&[c(1), c(1), c(1), c(-1), c(-1)]);
        assert!(g.is_automorphism(&s));
        assert_eq!(g.automorphism_order(&s, 10), Some(2));
        assert_eq!(g.automorphism_order(&Matrix::identity(5).scale(&c(2)), 10), None);
    }
}
