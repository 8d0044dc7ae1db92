//! Exact dense row reduction over a [`Scalar`] field.
//!
//! Pivoting is purely positional (leftmost nonzero entry, topmost row) so
//! results are deterministic; there is no numerical pivot selection because
//! all arithmetic is exact.

use crate::field::Scalar;


#[derive(Clone, Debug)]
pub struct Mat<K> {
    pub rows: usize,
    pub cols: usize,
    a: Vec<K>,
}

impl<K: Scalar> Mat<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, a: vec![K::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut a = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            a.extend(row);
        }
        Mat { rows: r, cols: c, a }
    }

    pub fn at(&self, i: usize, j: usize) -> &K {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.a[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    /// In-place reduced row echelon form. Returns the pivot columns in
    /// increasing order; the rank is their count.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // find a row at or below r with a nonzero entry in column c
            let mut sel = None;
            for i in r..self.rows {
                if !self.at(i, c).is_zero() {
                    sel = Some(i);
                    break;
                }
            }
            let Some(i) = sel else { continue };
            self.swap_rows(r, i);
            // normalize pivot row
            let inv = self.at(r, c).inv();
            for j in c..self.cols {
                let v = self.at(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            // eliminate the column everywhere else
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let f = self.at(i, c).clone();
                for j in c..self.cols {
                    let v = self.at(i, j).clone() - f.clone() * self.at(r, j).clone();
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }

    /// Basis of the right kernel { x : A x = 0 }, one vector per free
    /// column, in increasing free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[f] = K::one();
            for (ri, &p) in pivots.iter().enumerate() {
                v[p] = -m.at(ri, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

/// A row space kept in reduced echelon form, used to reduce vectors modulo
/// the span and to read off quotient coordinates.
#[derive(Clone, Debug)]
pub struct RowSpace<K> {
    mat: Mat<K>,
    pivots: Vec<usize>,
}

impl<K: Scalar> RowSpace<K> {
    pub fn new(mut mat: Mat<K>) -> Self {
        let pivots = mat.rref();
        RowSpace { mat, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.mat.cols
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.binary_search(&col).is_ok()
    }

    /// Canonical representative of v modulo the row space: pivot
    /// coordinates are eliminated, free coordinates are untouched.
    pub fn reduce(&self, mut v: Vec<K>) -> Vec<K> {
        assert_eq!(v.len(), self.mat.cols);
        for (ri, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for j in 0..self.mat.cols {
                let d = f.clone() * self.mat.at(ri, j).clone();
                v[j] = v[j].clone() - d;
            }
        }
        v
    }

    pub fn contains(&self, v: Vec<K>) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, rint, Rat};

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rint(x)).collect()).collect())
    }

    #[test]
    fn rank_and_pivots() {
        let mut a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let p = a.rref();
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn kernel_annihilates() {
        let a = m(&[&[1, 2, 3, 1], &[0, 1, 1, -1]]);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in ker {
            for i in 0..a.rows {
                let mut s = rat(0, 1);
                for j in 0..a.cols {
                    s += a.at(i, j) * &v[j];
                }
                assert!(s == rint(0));
            }
        }
    }

    #[test]
    fn rowspace_reduce() {
        let rs = RowSpace::new(m(&[&[1, 0, 2], &[0, 1, -1]]));
        let red = rs.reduce(vec![rint(3), rint(4), rint(0)]);
        // 3*(1,0,2) + 4*(0,1,-1) removed: residue only on the free column
        assert_eq!(red, vec![rint(0), rint(0), rint(-2)]);
        assert!(rs.contains(vec![rint(1), rint(1), rint(1)]));
    }
}
