//! Dense matrices: generic storage, Laurent-polynomial matrices with exact
//! minors, and ranks over a field.

use std::collections::HashMap;

use serde::Serialize;

use super::field::Field;
use super::laurent::LaurentPoly;
use super::AlgebraError;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Mat {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Mat { rows: r, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// Matrix of Laurent polynomials with row and column labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    nvars: usize,
    entries: Mat<LaurentPoly>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

/// Generators of a Fitting ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FittingIdeal {
    Zero,
    Unit,
    Minors(Vec<LaurentPoly>),
}

impl FittingIdeal {
    /// Whether every generator vanishes at `point`.
    pub fn vanishes_at<F: Field>(&self, field: &F, point: &[F::Elem]) -> Result<bool, AlgebraError> {
        match self {
            FittingIdeal::Zero => Ok(true),
            FittingIdeal::Unit => Ok(false),
            FittingIdeal::Minors(gens) => {
                for g in gens {
                    if !field.is_zero(&g.eval(field, point)?) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// True if all listed generators are the zero polynomial (the ideal is 0).
    pub fn is_zero_ideal(&self) -> bool {
        match self {
            FittingIdeal::Zero => true,
            FittingIdeal::Unit => false,
            FittingIdeal::Minors(g) => g.iter().all(LaurentPoly::is_zero),
        }
    }
}

impl PolyMatrix {
    pub fn new(
        nvars: usize,
        entries: Mat<LaurentPoly>,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
    ) -> Self {
        assert!(
            entries.data.iter().all(|p| p.nvars() == nvars),
            "entries share the variable count"
        );
        assert_eq!(row_labels.len(), entries.rows());
        assert_eq!(col_labels.len(), entries.cols());
        PolyMatrix {
            nvars,
            entries,
            row_labels,
            col_labels,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.entries.rows()
    }

    pub fn cols(&self) -> usize {
        self.entries.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        self.entries.get(i, j)
    }

    pub fn entries(&self) -> &Mat<LaurentPoly> {
        &self.entries
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<LaurentPoly> {
        (0..self.rows()).map(|i| self.get(i, j).clone()).collect()
    }

    /// Appends a column.
    pub fn with_column(&self, col: Vec<LaurentPoly>, label: String) -> PolyMatrix {
        assert_eq!(col.len(), self.rows());
        let cols = self.cols() + 1;
        let entries = Mat::from_fn(self.rows(), cols, |i, j| {
            if j + 1 == cols {
                col[i].clone()
            } else {
                self.get(i, j).clone()
            }
        });
        let mut col_labels = self.col_labels.clone();
        col_labels.push(label);
        PolyMatrix::new(self.nvars, entries, self.row_labels.clone(), col_labels)
    }

    /// Substitutes `t_i = 1` in every entry.
    pub fn specialize_to_one(&self, i: usize) -> PolyMatrix {
        PolyMatrix {
            nvars: self.nvars - 1,
            entries: self.entries.map(|p| p.specialize_to_one(i)),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
    }

    pub fn evaluate<F: Field>(&self, field: &F, point: &[F::Elem]) -> Result<Mat<F::Elem>, AlgebraError> {
        let mut data = Vec::with_capacity(self.rows() * self.cols());
        for p in &self.entries.data {
            data.push(p.eval(field, point)?);
        }
        Ok(Mat {
            rows: self.rows(),
            cols: self.cols(),
            data,
        })
    }

    /// All `order x order` minors, row subsets outer and column subsets
    /// inner, both in lexicographic order.
    pub fn minors(&self, order: usize) -> Result<Vec<LaurentPoly>, AlgebraError> {
        let (r, c) = (self.rows(), self.cols());
        if order == 0 || order > r.min(c) {
            return Err(AlgebraError::MinorOrder {
                order,
                rows: r,
                cols: c,
            });
        }
        let mut memo = HashMap::new();
        let mut out = Vec::new();
        for rs in subsets(r, order) {
            for cs in subsets(c, order) {
                out.push(self.det(&rs, &cs, &mut memo));
            }
        }
        Ok(out)
    }

    fn det(
        &self,
        rows: &[usize],
        cols: &[usize],
        memo: &mut HashMap<(Vec<usize>, Vec<usize>), LaurentPoly>,
    ) -> LaurentPoly {
        if rows.len() == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let key = (rows.to_vec(), cols.to_vec());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut acc = LaurentPoly::zero(self.nvars);
        let sub_rows = &rows[1..];
        for (k, &cj) in cols.iter().enumerate() {
            let a = self.get(rows[0], cj);
            if a.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != cj).collect();
            let m = self.det(sub_rows, &sub_cols, memo);
            let term = a * &m;
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        memo.insert(key, acc.clone());
        acc
    }

    /// Fitting ideal `F_k` of the module with `rows` generators and `cols`
    /// relations: `0` for `k <= max(0, n - m)`, `1` for `k > n`, otherwise the
    /// minors of order `n - k + 1`.
    pub fn fitting_generators(&self, k: usize) -> FittingIdeal {
        let n = self.rows();
        let m = self.cols();
        if k <= n.saturating_sub(m) {
            return FittingIdeal::Zero;
        }
        if k > n {
            return FittingIdeal::Unit;
        }
        FittingIdeal::Minors(self.minors(n - k + 1).expect("order within range"))
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Rank by Gaussian elimination over the field.
pub fn matrix_rank<F: Field>(field: &F, m: &Mat<F::Elem>) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| !field.is_zero(a.get(i, col))) else {
            continue;
        };
        a.swap_rows(rank, piv);
        let inv = field.inv(a.get(rank, col)).expect("nonzero pivot");
        for i in rank + 1..rows {
            if field.is_zero(a.get(i, col)) {
                continue;
            }
            let f = field.mul(a.get(i, col), &inv);
            for j in col..cols {
                let v = field.sub(a.get(i, j), &field.mul(&f, a.get(rank, j)));
                a.set(i, j, v);
            }
        }
        rank += 1;
    }
    rank
}

/// Dense JSON form of a [`PolyMatrix`].
#[derive(Clone, Debug, Serialize)]
pub struct PolyMatrixJson {
    pub variables: Vec<String>,
    pub rows: usize,
    pub cols: usize,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub entries: Vec<Vec<Vec<(Vec<i64>, String)>>>,
}

impl PolyMatrix {
    pub fn to_json(&self, variables: Vec<String>) -> PolyMatrixJson {
        PolyMatrixJson {
            variables,
            rows: self.rows(),
            cols: self.cols(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            entries: (0..self.rows())
                .map(|i| (0..self.cols()).map(|j| self.get(i, j).to_pairs()).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{CyclotomicField, GaloisField};

    fn labels(n: usize, p: &str) -> Vec<String> {
        (1..=n).map(|i| format!("{p}{i}")).collect()
    }

    fn proportional_rows() -> PolyMatrix {
        let t1 = LaurentPoly::var(2, 0);
        let t2 = LaurentPoly::var(2, 1);
        let one = LaurentPoly::one(2);
        let a = &t1 + &one;
        let b = &(&t1 * &t2) + &one;
        let u = &t2 - &one;
        let v = &one - &t1;
        let entries = Mat::from_rows(2, vec![vec![&u * &a, &u * &b], vec![&v * &a, &v * &b]]);
        PolyMatrix::new(2, entries, labels(2, "e"), labels(2, "r"))
    }

    #[test]
    fn proportional_rows_have_vanishing_determinant() {
        let m = proportional_rows();
        let dets = m.minors(2).unwrap();
        assert_eq!(dets.len(), 1);
        assert!(dets[0].is_zero());
        assert_eq!(m.minors(1).unwrap().len(), 4);
        assert!(m.minors(3).is_err());
    }

    #[test]
    fn fitting_piecewise_cases() {
        let m = proportional_rows();
        assert_eq!(m.fitting_generators(0), FittingIdeal::Zero);
        assert_eq!(m.fitting_generators(3), FittingIdeal::Unit);
        assert!(m.fitting_generators(1).is_zero_ideal());
        assert!(!m.fitting_generators(2).is_zero_ideal());
    }

    #[test]
    fn evaluated_rank() {
        let m = proportional_rows();
        let q = CyclotomicField::rationals();
        let at = m.evaluate(&q, &[q.from_i64(-1), q.one()]).unwrap();
        assert_eq!(matrix_rank(&q, &at), 0);
        let at = m.evaluate(&q, &[q.from_i64(2), q.from_i64(3)]).unwrap();
        assert_eq!(matrix_rank(&q, &at), 1);
        let f = GaloisField::new(5).unwrap();
        let z = Mat::filled(3, 4, f.zero());
        assert_eq!(matrix_rank(&f, &z), 0);
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(
            subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
