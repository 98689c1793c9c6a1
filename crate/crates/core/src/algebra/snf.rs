//! Smith normal form over Euclidean domains: the integers and univariate
//! Laurent polynomials `K[t^{±1}]` over a field.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::laurent::LaurentPoly;
use super::matrix::Mat;

pub trait EuclideanDomain {
    type Elem: Clone + PartialEq + fmt::Debug;
    type Size: Ord;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Euclidean size of a nonzero element.
    fn size(&self, a: &Self::Elem) -> Self::Size;
    /// `a = q*b + r` with `r = 0` or `size(r) < size(b)`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// A unit `u` such that `u*a` is the canonical associate of `a`.
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;
    fn is_unit(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        if self.is_zero(a) {
            return self.is_zero(b);
        }
        self.is_zero(&self.div_rem(b, a).1)
    }
}

/// The ring of integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl EuclideanDomain for Integers {
    type Elem = BigInt;
    type Size = BigUint;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn size(&self, a: &BigInt) -> BigUint {
        a.magnitude().clone()
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        a.div_rem(b)
    }
    fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
}

/// Element of `K[t^{±1}]`: `t^low * (c_0 + c_1 t + ...)` with `c_0` and the
/// last coefficient nonzero; zero is the empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent1<E> {
    pub low: i64,
    pub coeffs: Vec<E>,
}

/// `K[t^{±1}]` for a field `K`.
#[derive(Clone, Debug)]
pub struct LaurentRing<F: Field> {
    field: F,
}

impl<F: Field> LaurentRing<F> {
    pub fn new(field: F) -> Self {
        LaurentRing { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    fn normalize(&self, low: i64, mut coeffs: Vec<F::Elem>) -> Laurent1<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| self.field.is_zero(c)).count();
        if lead_zeros == coeffs.len() {
            return Laurent1 {
                low: 0,
                coeffs: Vec::new(),
            };
        }
        coeffs.drain(..lead_zeros);
        Laurent1 {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn from_coeffs(&self, low: i64, coeffs: Vec<F::Elem>) -> Laurent1<F::Elem> {
        self.normalize(low, coeffs)
    }

    /// `t^k`.
    pub fn monomial(&self, k: i64, c: F::Elem) -> Laurent1<F::Elem> {
        self.normalize(k, vec![c])
    }

    /// Image of a one-variable integer Laurent polynomial.
    pub fn from_laurent(&self, p: &LaurentPoly) -> Laurent1<F::Elem> {
        let terms = p.univariate_terms().expect("univariate polynomial");
        let Some(low) = terms.first().map(|t| t.0) else {
            return self.zero();
        };
        let high = terms.last().expect("nonempty").0;
        let mut coeffs = vec![self.field.zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] = self.field.from_int(&c);
        }
        self.normalize(low, coeffs)
    }

    pub fn format(&self, a: &Laurent1<F::Elem>) -> String {
        if a.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in a.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            let e = a.low + i as i64;
            let mono = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            let cs = self.field.format(c);
            // plain numbers print bare, anything else in parentheses
            let plain = cs.trim_start_matches('-').chars().all(|ch| ch.is_ascii_digit() || ch == '/');
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if plain => (true, rest.to_string()),
                _ if plain => (false, cs.clone()),
                _ => (false, format!("({cs})")),
            };
            let term = match (mono.is_empty(), body == "1") {
                (true, _) => body,
                (false, true) => mono,
                (false, false) => format!("{body}*{mono}"),
            };
            out.push_str(match (out.is_empty(), neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            });
            out.push_str(&term);
        }
        out
    }
}

impl<F: Field> EuclideanDomain for LaurentRing<F> {
    type Elem = Laurent1<F::Elem>;
    type Size = usize;

    fn zero(&self) -> Self::Elem {
        Laurent1 {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    fn one(&self) -> Self::Elem {
        self.monomial(0, self.field.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.coeffs.is_empty() {
            return b.clone();
        }
        if b.coeffs.is_empty() {
            return a.clone();
        }
        let low = a.low.min(b.low);
        let high = (a.low + a.coeffs.len() as i64).max(b.low + b.coeffs.len() as i64);
        let mut coeffs = vec![self.field.zero(); (high - low) as usize];
        for (i, c) in a.coeffs.iter().enumerate() {
            let k = (a.low - low) as usize + i;
            coeffs[k] = self.field.add(&coeffs[k], c);
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            let k = (b.low - low) as usize + i;
            coeffs[k] = self.field.add(&coeffs[k], c);
        }
        self.normalize(low, coeffs)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Laurent1 {
            low: a.low,
            coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return self.zero();
        }
        let mut coeffs = vec![self.field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = self.field.add(&coeffs[i + j], &self.field.mul(x, y));
            }
        }
        self.normalize(a.low + b.low, coeffs)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }

    fn size(&self, a: &Self::Elem) -> usize {
        a.coeffs.len().saturating_sub(1)
    }

    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        assert!(!b.coeffs.is_empty(), "division by zero");
        if a.coeffs.is_empty() {
            return (self.zero(), self.zero());
        }
        // polynomial division of the shifted parts
        let f = &self.field;
        let db = b.coeffs.len() - 1;
        let lead_inv = f.inv(&b.coeffs[db]).expect("nonzero leading coefficient");
        let mut r = a.coeffs.clone();
        let mut q = vec![f.zero(); r.len().saturating_sub(db).max(1)];
        while r.len() > db {
            let top = r.last().expect("nonempty").clone();
            if !f.is_zero(&top) {
                let c = f.mul(&top, &lead_inv);
                let shift = r.len() - 1 - db;
                for (i, bc) in b.coeffs.iter().enumerate() {
                    r[shift + i] = f.sub(&r[shift + i], &f.mul(&c, bc));
                }
                q[shift] = c;
            }
            r.pop();
        }
        let quotient = self.normalize(a.low - b.low, q);
        let remainder = self.normalize(a.low, r);
        (quotient, remainder)
    }

    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem {
        match a.coeffs.last() {
            None => self.one(),
            Some(lead) => self.monomial(-a.low, self.field.inv(lead).expect("nonzero")),
        }
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        a.coeffs.len() == 1
    }
}

/// `U * A * V = D`, `D` diagonal with each diagonal entry dividing the next,
/// `U` and `V` invertible.
#[derive(Clone, Debug)]
pub struct SnfResult<E> {
    pub u: Mat<E>,
    pub v: Mat<E>,
    pub d: Mat<E>,
    pub diagonal: Vec<E>,
}

pub fn identity<R: EuclideanDomain>(ring: &R, n: usize) -> Mat<R::Elem> {
    Mat::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
}

pub fn mat_mul<R: EuclideanDomain>(ring: &R, a: &Mat<R::Elem>, b: &Mat<R::Elem>) -> Mat<R::Elem> {
    assert_eq!(a.cols(), b.rows(), "dimension mismatch");
    Mat::from_fn(a.rows(), b.cols(), |i, j| {
        let mut acc = ring.zero();
        for k in 0..a.cols() {
            acc = ring.add(&acc, &ring.mul(a.get(i, k), b.get(k, j)));
        }
        acc
    })
}

/// Determinant by cofactor expansion; intended for small matrices.
pub fn determinant<R: EuclideanDomain>(ring: &R, a: &Mat<R::Elem>) -> R::Elem {
    assert_eq!(a.rows(), a.cols(), "square matrix");
    let n = a.rows();
    fn rec<R: EuclideanDomain>(ring: &R, a: &Mat<R::Elem>, row: usize, cols: &[usize]) -> R::Elem {
        if cols.is_empty() {
            return ring.one();
        }
        let mut acc = ring.zero();
        for (k, &c) in cols.iter().enumerate() {
            let x = a.get(row, c);
            if ring.is_zero(x) {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&y| y != c).collect();
            let term = ring.mul(x, &rec(ring, a, row + 1, &rest));
            acc = if k % 2 == 0 {
                ring.add(&acc, &term)
            } else {
                ring.sub(&acc, &term)
            };
        }
        acc
    }
    let cols: Vec<usize> = (0..n).collect();
    rec(ring, a, 0, &cols)
}

struct Work<'r, R: EuclideanDomain> {
    ring: &'r R,
    d: Mat<R::Elem>,
    u: Mat<R::Elem>,
    v: Mat<R::Elem>,
}

impl<R: EuclideanDomain> Work<'_, R> {
    // row_i += c * row_j
    fn row_axpy(&mut self, i: usize, j: usize, c: &R::Elem) {
        for m in [&mut self.d, &mut self.u] {
            for k in 0..m.cols() {
                let v = self.ring.add(m.get(i, k), &self.ring.mul(c, m.get(j, k)));
                m.set(i, k, v);
            }
        }
    }

    // col_i += c * col_j
    fn col_axpy(&mut self, i: usize, j: usize, c: &R::Elem) {
        for m in [&mut self.d, &mut self.v] {
            for k in 0..m.rows() {
                let v = self.ring.add(m.get(k, i), &self.ring.mul(c, m.get(k, j)));
                m.set(k, i, v);
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    fn scale_row(&mut self, i: usize, c: &R::Elem) {
        for m in [&mut self.d, &mut self.u] {
            for k in 0..m.cols() {
                let v = self.ring.mul(c, m.get(i, k));
                m.set(i, k, v);
            }
        }
    }

    fn smallest_in(&self, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), R::Size)> = None;
        for (i, j) in cells {
            let x = self.d.get(i, j);
            if self.ring.is_zero(x) {
                continue;
            }
            let s = self.ring.size(x);
            let better = match &best {
                None => true,
                Some((_, bs)) => s.cmp(bs) == Ordering::Less,
            };
            if better {
                best = Some(((i, j), s));
            }
        }
        best.map(|b| b.0)
    }
}

pub fn smith_normal_form<R: EuclideanDomain>(ring: &R, a: &Mat<R::Elem>) -> SnfResult<R::Elem> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = Work {
        ring,
        d: a.clone(),
        u: identity(ring, rows),
        v: identity(ring, cols),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let cells = (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)));
        let Some((pi, pj)) = w.smallest_in(cells) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            for i in t + 1..rows {
                if !ring.is_zero(w.d.get(i, t)) {
                    let (q, _) = ring.div_rem(w.d.get(i, t), w.d.get(t, t));
                    w.row_axpy(i, t, &ring.neg(&q));
                }
            }
            for j in t + 1..cols {
                if !ring.is_zero(w.d.get(t, j)) {
                    let (q, _) = ring.div_rem(w.d.get(t, j), w.d.get(t, t));
                    w.col_axpy(j, t, &ring.neg(&q));
                }
            }
            let line = (t + 1..rows)
                .map(|i| (i, t))
                .chain((t + 1..cols).map(|j| (t, j)));
            if let Some((i, j)) = w.smallest_in(line) {
                // a remainder smaller than the pivot survived
                w.swap_rows(t, i);
                w.swap_cols(t, j);
                continue;
            }
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !ring.divides(w.d.get(t, t), w.d.get(i, j)));
            match bad {
                Some((i, _)) => {
                    let one = ring.one();
                    w.row_axpy(t, i, &one);
                }
                None => break,
            }
        }
        let unit = ring.normalizing_unit(w.d.get(t, t));
        w.scale_row(t, &unit);
        t += 1;
    }
    let diagonal = (0..rows.min(cols)).map(|i| w.d.get(i, i).clone()).collect();
    SnfResult {
        u: w.u,
        v: w.v,
        d: w.d,
        diagonal,
    }
}

impl<E: Clone> SnfResult<E> {
    /// Diagonal entries that are not zero.
    pub fn nonzero_diagonal<R: EuclideanDomain<Elem = E>>(&self, ring: &R) -> Vec<E> {
        self.diagonal
            .iter()
            .filter(|x| !ring.is_zero(x))
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::CyclotomicField;

    fn int_mat(rows: Vec<Vec<i64>>) -> Mat<BigInt> {
        let cols = rows.first().map_or(0, Vec::len);
        Mat::from_rows(
            cols,
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    fn check<R: EuclideanDomain>(ring: &R, a: &Mat<R::Elem>, s: &SnfResult<R::Elem>) {
        assert_eq!(mat_mul(ring, &mat_mul(ring, &s.u, a), &s.v), s.d);
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(ring.is_zero(s.d.get(i, j)));
                }
            }
        }
        for w in s.diagonal.windows(2) {
            assert!(ring.divides(&w[0], &w[1]));
        }
        assert!(ring.is_unit(&determinant(ring, &s.u)));
        assert!(ring.is_unit(&determinant(ring, &s.v)));
    }

    #[test]
    fn single_row_gcd() {
        let a = int_mat(vec![vec![4, 2]]);
        let s = smith_normal_form(&Integers, &a);
        check(&Integers, &a, &s);
        assert_eq!(s.diagonal, vec![BigInt::from(2)]);
    }

    #[test]
    fn identity_is_fixed() {
        let a = identity(&Integers, 3);
        let s = smith_normal_form(&Integers, &a);
        assert_eq!(s.d, a);
    }

    #[test]
    fn bidegree_relations() {
        let a = int_mat(vec![vec![1, 3, 1, 1], vec![1, 1, 3, 1]]);
        let s = smith_normal_form(&Integers, &a);
        check(&Integers, &a, &s);
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(2)]);
        let a = int_mat(vec![vec![1, 2, 2, 1], vec![1, 2, 2, 1]]);
        let s = smith_normal_form(&Integers, &a);
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(0)]);
    }

    #[test]
    fn divisibility_fix_up() {
        let a = int_mat(vec![vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&Integers, &a);
        check(&Integers, &a, &s);
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn laurent_invariant_factors_are_monic_from_degree_zero() {
        let q = CyclotomicField::rationals();
        let ring = LaurentRing::new(q.clone());
        // t^2 - 1 twice in one row, zero second row
        let f = ring.from_coeffs(0, vec![q.from_i64(-1), q.zero(), q.one()]);
        let shifted = ring.mul(&f, &ring.monomial(-3, q.from_i64(-2)));
        let a = Mat::from_rows(2, vec![vec![shifted, f.clone()], vec![ring.zero(), ring.zero()]]);
        let s = smith_normal_form(&ring, &a);
        check(&ring, &a, &s);
        assert_eq!(s.nonzero_diagonal(&ring), vec![f]);
    }
}
