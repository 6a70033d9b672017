//! Incremental sparse row echelon form.
//!
//! Rows are fed one at a time and reduced against the pivots seen so far;
//! only independent rows are kept. This backs the large homogeneous systems
//! (centroid, derivations, intertwiners) and subspace saturation, where the
//! equations are sparse and most of them turn out to be redundant.

use std::collections::BTreeMap;

use crate::exactfield::CycScalar;

pub type SparseRow = Vec<(usize, CycScalar)>;

#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    /// Rows with leading entry 1; `pivot_of[c]` indexes the row leading at column c.
    rows: Vec<SparseRow>,
    pivot_of: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_of: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_of[c].is_some()).collect()
    }

    fn reduce_map(&self, mut row: BTreeMap<usize, CycScalar>) -> BTreeMap<usize, CycScalar> {
        let mut cursor = 0usize;
        loop {
            let hit = row.range(cursor..).find(|(c, _)| self.pivot_of[**c].is_some()).map(|(c, v)| (*c, v.clone()));
            let Some((c, factor)) = hit else { break };
            let prow = &self.rows[self.pivot_of[c].unwrap()];
            for (j, v) in prow {
                let t = &factor * v;
                let slot = row.entry(*j).or_insert_with(CycScalar::zero);
                *slot -= &t;
                if slot.is_zero() {
                    row.remove(j);
                }
            }
            cursor = c + 1;
        }
        row
    }

    /// Reduces `row` against the current pivots; returns the remainder.
    pub fn reduce(&self, row: &[(usize, CycScalar)]) -> SparseRow {
        let map: BTreeMap<usize, CycScalar> =
            row.iter().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (*c, v.clone())).collect();
        self.reduce_map(map).into_iter().collect()
    }

    /// Adds a row; returns `true` when it was independent of the rows so far.
    pub fn insert(&mut self, row: &[(usize, CycScalar)]) -> bool {
        let rem = self.reduce(row);
        let Some((lead, lead_val)) = rem.first().cloned() else { return false };
        let inv = lead_val.inv().expect("nonzero leading entry");
        let normalized: SparseRow = rem.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
        self.pivot_of[lead] = Some(self.rows.len());
        self.rows.push(normalized);
        true
    }

    pub fn insert_dense(&mut self, row: &[CycScalar]) -> bool {
        let sparse: SparseRow =
            row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (c, v.clone())).collect();
        self.insert(&sparse)
    }

    pub fn contains_dense(&self, row: &[CycScalar]) -> bool {
        let sparse: SparseRow =
            row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (c, v.clone())).collect();
        self.reduce(&sparse).is_empty()
    }

    /// Reduced row echelon rows, ordered by pivot column.
    pub fn rref_rows(&self) -> Vec<SparseRow> {
        let pivots = self.pivot_columns();
        let mut reduced: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for &c in pivots.iter().rev() {
            let row = &self.rows[self.pivot_of[c].unwrap()];
            let mut map: BTreeMap<usize, CycScalar> = row.iter().cloned().collect();
            // eliminate every later pivot column using the already reduced rows
            let later: Vec<usize> = map.keys().copied().filter(|&j| j != c && reduced.contains_key(&j)).collect();
            for j in later {
                let Some(factor) = map.get(&j).cloned() else { continue };
                for (k, v) in &reduced[&j] {
                    let t = &factor * v;
                    let slot = map.entry(*k).or_insert_with(CycScalar::zero);
                    *slot -= &t;
                    if slot.is_zero() {
                        map.remove(k);
                    }
                }
            }
            reduced.insert(c, map.into_iter().collect());
        }
        reduced.into_values().collect()
    }

    pub fn rref_dense(&self) -> Vec<Vec<CycScalar>> {
        self.rref_rows()
            .into_iter()
            .map(|r| {
                let mut v = vec![CycScalar::zero(); self.ncols];
                for (c, x) in r {
                    v[c] = x;
                }
                v
            })
            .collect()
    }

    /// Basis of the solution space of the homogeneous system given by the rows.
    /// One vector per free column, with a 1 in that column.
    pub fn nullspace(&self) -> Vec<Vec<CycScalar>> {
        let rref = self.rref_rows();
        let free: Vec<usize> = (0..self.ncols).filter(|&c| self.pivot_of[c].is_none()).collect();
        let mut col_index = vec![usize::MAX; self.ncols];
        for (i, &c) in free.iter().enumerate() {
            col_index[c] = i;
        }
        let mut out = vec![vec![CycScalar::zero(); self.ncols]; free.len()];
        for (i, &c) in free.iter().enumerate() {
            out[i][c] = CycScalar::one();
        }
        for row in &rref {
            let pivot = row[0].0;
            for (c, v) in &row[1..] {
                let i = col_index[*c];
                debug_assert!(i != usize::MAX);
                out[i][pivot] = -v;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> Vec<CycScalar> {
        v.iter().map(|&x| CycScalar::from_int(x)).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let mut e = Echelon::new(3);
        assert!(e.insert_dense(&r(&[1, 2, 3])));
        assert!(!e.insert_dense(&r(&[2, 4, 6])));
        assert!(e.insert_dense(&r(&[0, 1, 1])));
        assert_eq!(e.rank(), 2);
        let ns = e.nullspace();
        assert_eq!(ns.len(), 1);
        // x + 2y + 3z = 0, y + z = 0  =>  (-1, -1, 1)
        assert_eq!(ns[0], r(&[-1, -1, 1]));
        assert!(e.contains_dense(&r(&[1, 3, 4])));
        assert!(!e.contains_dense(&r(&[0, 0, 1])));
    }

    #[test]
    fn rref_is_reduced() {
        let mut e = Echelon::new(3);
        e.insert_dense(&r(&[0, 1, 2]));
        e.insert_dense(&r(&[1, 1, 1]));
        let rows = e.rref_dense();
        assert_eq!(rows, vec![r(&[1, 0, -1]), r(&[0, 1, 2])]);
    }
}
