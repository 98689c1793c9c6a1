//! Multivariate Laurent polynomials with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::AlgebraError;

/// An element of `Z[t_1^{±1}, ..., t_r^{±1}]`. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, vec![0; nvars], BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, vec![0; nvars], c.into())
    }

    /// `c * t^exps`.
    pub fn monomial(nvars: usize, exps: Vec<i64>, c: BigInt) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// The variable `t_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigInt::one())
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: &BigInt) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiply by the monomial `t^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Sum of coefficients, i.e. the value at the all-ones point.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `±t^v` for some `v`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// If `self = ±t^v · other`, returns `(sign, v)`.
    pub fn unit_ratio(&self, other: &LaurentPoly) -> Option<(i8, Vec<i64>)> {
        if self.nvars != other.nvars || self.terms.len() != other.terms.len() {
            return None;
        }
        if self.is_zero() {
            return Some((1, vec![0; self.nvars]));
        }
        let (e0, c0) = self.terms.iter().next()?;
        let (f0, d0) = other.terms.iter().next()?;
        let sign: i8 = if c0 == d0 {
            1
        } else if *c0 == -d0 {
            -1
        } else {
            return None;
        };
        let v: Vec<i64> = e0.iter().zip(f0).map(|(a, b)| a - b).collect();
        let candidate = other.shift(&v).scale(&BigInt::from(sign));
        (candidate == *self).then_some((sign, v))
    }

    /// `t^e`, e may be negative. Only meaningful in the ring; used for the
    /// abelian images inside Fox derivatives.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Ring-homomorphic evaluation at a point of `(K^*)^r`.
    pub fn eval<F: Field>(&self, field: &F, point: &[F::Elem]) -> Result<F::Elem, AlgebraError> {
        if point.len() != self.nvars {
            return Err(AlgebraError::VariableCount {
                expected: self.nvars,
                got: point.len(),
            });
        }
        if point.iter().any(|x| field.is_zero(x)) {
            return Err(AlgebraError::ZeroCoordinate);
        }
        let mut acc = field.zero();
        for (e, c) in &self.terms {
            let mut term = field.from_int(c);
            for (x, &k) in point.iter().zip(e) {
                if k != 0 {
                    term = field.mul(&term, &field.pow(x, k));
                }
            }
            acc = field.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Substitute `t_i = 1` and drop the variable.
    pub fn specialize_to_one(&self, i: usize) -> LaurentPoly {
        let mut out = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f.remove(i);
            out.add_term(f, c);
        }
        out
    }

    /// Rename variables: variable `j` of `self` becomes `map[j]` in a ring
    /// with `nvars` variables.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> LaurentPoly {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; nvars];
            for (j, &k) in e.iter().enumerate() {
                f[map[j]] += k;
            }
            out.add_term(f, c);
        }
        out
    }

    /// Exponents of the single variable of a univariate polynomial together
    /// with coefficients, lowest first.
    pub fn univariate_terms(&self) -> Option<Vec<(i64, BigInt)>> {
        (self.nvars == 1).then(|| self.terms.iter().map(|(e, c)| (e[0], c.clone())).collect())
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "Laurent polynomials over different rings");
    }

    /// Terms as `(exponents, decimal coefficient)` pairs, for serialization.
    pub fn to_pairs(&self) -> Vec<(Vec<i64>, String)> {
        self.terms
            .iter()
            .map(|(e, c)| (e.clone(), c.to_string()))
            .collect()
    }

    /// Formats with the given variable names.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        names[j].clone()
                    } else {
                        format!("{}^{}", names[j], k)
                    }
                })
                .collect();
            let mag = c.abs();
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono.join("*"),
                (false, false) => format!("{}*{}", mag, mono.join("*")),
            };
            if c.is_negative() {
                out.push_str(if idx == 0 { "-" } else { " - " });
            } else if idx > 0 {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("t{i}")).collect();
        f.write_str(&self.format_with(&names))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(&-BigInt::one())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                let g = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(g, &(c * d));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{CyclotomicField, GaloisField, Gf};

    fn t(i: usize) -> LaurentPoly {
        LaurentPoly::var(2, i)
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one(2)
    }

    #[test]
    fn factored_entry_vanishes_at_char_point() {
        let p = (&t(0) - &one()) * (&t(0) + &one());
        let q = CyclotomicField::rationals();
        let pt = [q.from_i64(-1), q.from_i64(1)];
        assert!(q.is_zero(&p.eval(&q, &pt).unwrap()));
    }

    #[test]
    fn evaluation_at_ones_is_coefficient_sum() {
        let p = LaurentPoly::from_terms(
            2,
            [
                (vec![1, -2], BigInt::from(3)),
                (vec![0, 0], BigInt::from(-7)),
                (vec![-1, 4], BigInt::from(2)),
            ],
        );
        let f = GaloisField::new(101).unwrap();
        let v = p.eval(&f, &[f.one(), f.one()]).unwrap();
        assert_eq!(v, f.from_int(&p.augmentation()));
    }

    #[test]
    fn evaluation_over_f3() {
        let p = (&t(0) - &one()) * (&(&t(0) * &t(1)) + &one());
        let f = GaloisField::new(3).unwrap();
        assert_eq!(p.eval(&f, &[Gf(2), Gf(1)]).unwrap(), Gf(0));
        assert!(matches!(
            p.eval(&f, &[Gf(2)]),
            Err(AlgebraError::VariableCount { .. })
        ));
    }

    #[test]
    fn unit_ratio_detects_signed_monomial_multiples() {
        let p = &(&t(0) - &one()) * &(&t(1) + &one());
        let q = (-&p).shift(&[2, -1]);
        assert_eq!(q.unit_ratio(&p), Some((-1, vec![2, -1])));
        assert_eq!(p.unit_ratio(&(&p + &one())), None);
    }

    #[test]
    fn specialization_drops_variable() {
        let p = &(&t(0) * &t(0)) - &(&t(1) * &t(0));
        let s = p.specialize_to_one(1);
        assert_eq!(s.nvars(), 1);
        let x = LaurentPoly::var(1, 0);
        assert_eq!(s, &(&x * &x) - &x);
    }

    #[test]
    fn display() {
        let p = &(&t(0) - &one()) * &(&t(1) + &one());
        assert_eq!(p.to_string(), "t1*t2 + t1 - t2 - 1");
    }
}
