//! Exact coefficient fields.
//!
//! Two concrete families are provided: [`GaloisField`] covers `F_p` and
//! `F_{p^k}` (elements encoded as base-`p` digit strings, multiplication through
//! discrete-log tables), and [`CyclotomicField`] covers `Q(zeta_N)` as
//! `Q[x]/Phi_N(x)`, with `N = 1` giving the rationals.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// Largest finite field order we build tables for.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

/// A field with exact arithmetic. Elements are plain values; all operations go
/// through the field object, which carries the modulus.
pub trait Field: Clone + Send + Sync + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + Hash + Ord + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn characteristic(&self) -> u64;
    /// Short name such as `F3`, `F4`, `Q`, `Q(zeta6)`.
    fn name(&self) -> String;
    /// Canonical string form of an element.
    fn format(&self, a: &Self::Elem) -> String;
    /// A primitive `n`-th root of unity, chosen canonically, if the field has one.
    fn primitive_root_of_unity(&self, n: u64) -> Option<Self::Elem>;
    /// A multiple of the order of every root of unity in the field.
    fn torsion_exponent(&self) -> u64;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    /// `a^e`; negative exponents invert. Panics on `0^e` with `e < 0`.
    fn pow(&self, a: &Self::Elem, e: i64) -> Self::Elem {
        let base = if e < 0 {
            self.inv(a).expect("negative power of zero")
        } else {
            a.clone()
        };
        let mut exp = e.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// Multiplicative order of `a`, searched up to `bound`.
    fn multiplicative_order(&self, a: &Self::Elem, bound: u64) -> Option<u64> {
        if self.is_zero(a) {
            return None;
        }
        let mut acc = a.clone();
        for k in 1..=bound {
            if self.is_one(&acc) {
                return Some(k);
            }
            acc = self.mul(&acc, a);
        }
        None
    }
}

/// Finite fields additionally expose their unit group.
pub trait FiniteField: Field {
    fn order(&self) -> u64;
    /// All nonzero elements in canonical order.
    fn units(&self) -> Vec<Self::Elem>;
}

/// Serializable description of a coefficient field, parsed from strings such
/// as `F3`, `F4`, `Q`, `Q(zeta6)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Galois(u64),
    Rationals,
    Cyclotomic(u64),
}

impl FieldSpec {
    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Galois(_))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Galois(q) => write!(f, "F{q}"),
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Cyclotomic(n) => write!(f, "Q(zeta{n})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || AlgebraError::BadField(s.to_string());
        if t == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = t.strip_prefix('F') {
            let q: u64 = rest.parse().map_err(|_| bad())?;
            prime_power(q).ok_or_else(bad)?;
            return Ok(FieldSpec::Galois(q));
        }
        let inner = t
            .strip_prefix("Q(zeta")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("cyclotomic:"));
        if let Some(n) = inner {
            let n: u64 = n.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            return Ok(FieldSpec::Cyclotomic(n));
        }
        Err(bad())
    }
}

/// Returns `(p, k)` with `q = p^k`, `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if q % p != 0 {
        return Some((q, 1));
    }
    let mut k = 0;
    let mut m = q;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

pub fn is_prime(n: u64) -> bool {
    matches!(prime_power(n), Some((_, 1)))
}

/// Element of a [`GaloisField`]: the base-`p` encoding of its residue
/// polynomial, least significant digit = constant term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gf(pub u32);

#[derive(Debug)]
struct GfTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// `F_q` with `q = p^k`. The modulus is the lexicographically smallest monic
/// irreducible polynomial of degree `k` and the table generator is the
/// smallest primitive element.
#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u64,
    k: u32,
    q: u64,
    modulus: Vec<u64>,
    tables: Arc<GfTables>,
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self, AlgebraError> {
        let (p, k) = prime_power(q).ok_or_else(|| AlgebraError::BadField(format!("F{q}")))?;
        if q > MAX_FIELD_ORDER {
            return Err(AlgebraError::FieldTooLarge(q));
        }
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, k)
        };
        let mut field = GaloisField {
            p,
            k,
            q,
            modulus,
            tables: Arc::new(GfTables {
                exp: Vec::new(),
                log: Vec::new(),
            }),
        };
        field.build_tables();
        Ok(field)
    }

    /// Smallest extension of `F_p` containing the `n`-th roots of unity.
    pub fn with_roots_of_unity(p: u64, n: u64) -> Result<Self, AlgebraError> {
        if !is_prime(p) || n % p == 0 {
            return Err(AlgebraError::NoRootsOfUnity {
                field: format!("F{p}^k"),
                order: n,
            });
        }
        let mut k = 1u32;
        let mut acc = p % n;
        while acc != 1 % n {
            acc = acc * p % n;
            k += 1;
        }
        let q = p
            .checked_pow(k)
            .ok_or(AlgebraError::FieldTooLarge(u64::MAX))?;
        GaloisField::new(q)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn digits(&self, a: u32) -> Vec<u64> {
        let mut v = vec![0; self.k as usize];
        let mut a = a as u64;
        for d in v.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        v
    }

    fn encode(&self, digits: &[u64]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.p + d) as u32
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let da = self.digits(a);
        let db = self.digits(b);
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for i in 0..k {
                let sub = c * self.modulus[i] % self.p;
                prod[deg - k + i] = (prod[deg - k + i] + self.p - sub) % self.p;
            }
        }
        self.encode(&prod[..k])
    }

    fn build_tables(&mut self) {
        let n = (self.q - 1) as usize;
        let mut chosen = None;
        for g in 1..self.q as u32 {
            // order check through repeated multiplication
            let mut pows = vec![0u32; n];
            let mut acc = 1u32;
            let mut ok = true;
            for (i, slot) in pows.iter_mut().enumerate() {
                *slot = acc;
                if i > 0 && acc == 1 {
                    ok = false;
                    break;
                }
                acc = self.slow_mul(acc, g);
            }
            if ok && acc == 1 {
                chosen = Some(pows);
                break;
            }
        }
        let exp = chosen.expect("finite field has a primitive element");
        let mut log = vec![0u32; self.q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        self.tables = Arc::new(GfTables { exp, log });
    }

    /// The table generator of the unit group.
    pub fn generator(&self) -> Gf {
        Gf(self.tables.exp.get(1).copied().unwrap_or(1))
    }

    /// Discrete log with respect to [`GaloisField::generator`].
    pub fn log(&self, a: Gf) -> Option<u64> {
        (a.0 != 0).then(|| self.tables.log[a.0 as usize] as u64)
    }

    pub fn exp(&self, e: i64) -> Gf {
        let n = (self.q - 1) as i64;
        Gf(self.tables.exp[e.rem_euclid(n) as usize])
    }
}

fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    let total = p.pow(k as u32);
    for code in 0..total {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut c = code;
        for _ in 0..k {
            coeffs.push(c % p);
            c /= p;
        }
        coeffs.push(1);
        if is_irreducible_mod_p(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn poly_rem_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db && !r.is_empty() {
        let top = *r.last().unwrap();
        if top == 0 {
            r.pop();
            continue;
        }
        let c = top * lead_inv % p;
        let shift = r.len() - 1 - db;
        for i in 0..=db {
            r[shift + i] = (r[shift + i] + p - c * b[i] % p) % p;
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            if poly_rem_mod_p(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Field for GaloisField {
    type Elem = Gf;

    fn zero(&self) -> Gf {
        Gf(0)
    }

    fn one(&self) -> Gf {
        Gf(1)
    }

    fn add(&self, a: &Gf, b: &Gf) -> Gf {
        if self.k == 1 {
            return Gf(((a.0 as u64 + b.0 as u64) % self.p) as u32);
        }
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.k {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        Gf(out as u32)
    }

    fn neg(&self, a: &Gf) -> Gf {
        if self.k == 1 {
            return Gf(((self.p - a.0 as u64) % self.p) as u32);
        }
        let mut x = a.0 as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.k {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        Gf(out as u32)
    }

    fn mul(&self, a: &Gf, b: &Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf(0);
        }
        let n = self.q - 1;
        let la = self.tables.log[a.0 as usize] as u64;
        let lb = self.tables.log[b.0 as usize] as u64;
        Gf(self.tables.exp[((la + lb) % n) as usize])
    }

    fn inv(&self, a: &Gf) -> Option<Gf> {
        if a.0 == 0 {
            return None;
        }
        let n = self.q - 1;
        let la = self.tables.log[a.0 as usize] as u64;
        Some(Gf(self.tables.exp[((n - la) % n) as usize]))
    }

    fn pow(&self, a: &Gf, e: i64) -> Gf {
        if a.0 == 0 {
            assert!(e >= 0, "negative power of zero");
            return if e == 0 { Gf(1) } else { Gf(0) };
        }
        let n = (self.q - 1) as i128;
        let la = self.tables.log[a.0 as usize] as i128;
        Gf(self.tables.exp[(la * e as i128).rem_euclid(n) as usize])
    }

    fn from_int(&self, n: &BigInt) -> Gf {
        let r = n.mod_floor(&BigInt::from(self.p));
        Gf(r.to_u32().expect("reduced residue fits"))
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn name(&self) -> String {
        format!("F{}", self.q)
    }

    fn format(&self, a: &Gf) -> String {
        if self.k == 1 {
            return a.0.to_string();
        }
        let digits = self.digits(a.0);
        let mut parts = Vec::new();
        for (i, &d) in digits.iter().enumerate().rev() {
            if d == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            parts.push(match (d, i) {
                (_, 0) => d.to_string(),
                (1, _) => mono,
                _ => format!("{d}{mono}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    fn primitive_root_of_unity(&self, n: u64) -> Option<Gf> {
        let m = self.q - 1;
        (n > 0 && m % n == 0).then(|| self.exp((m / n) as i64))
    }

    fn torsion_exponent(&self) -> u64 {
        self.q - 1
    }

    fn multiplicative_order(&self, a: &Gf, _bound: u64) -> Option<u64> {
        let l = self.log(*a)?;
        let m = self.q - 1;
        Some(m / l.gcd(&m))
    }
}

impl FiniteField for GaloisField {
    fn order(&self) -> u64 {
        self.q
    }

    fn units(&self) -> Vec<Gf> {
        (1..self.q as u32).map(Gf).collect()
    }
}

// ---------------------------------------------------------------------------
// cyclotomic fields

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term
/// first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = exact_div_int_poly(&num, &phi_d);
        }
    }
    num
}

fn exact_div_int_poly(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    // b monic
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone();
        q[i] = c.clone();
        for j in 0..=db {
            r[i + j] -= &c * &b[j];
        }
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

/// Element of a [`CyclotomicField`]: coefficients in the power basis
/// `1, z, ..., z^(d-1)`, always of length `d = phi(N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyc(pub Vec<BigRational>);

/// `Q(zeta_N) = Q[z]/Phi_N(z)`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    n: u64,
    modulus: Arc<Vec<BigRational>>,
}

impl CyclotomicField {
    pub fn new(n: u64) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::BadField("Q(zeta0)".into()));
        }
        let modulus = cyclotomic_polynomial(n)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        Ok(CyclotomicField {
            n,
            modulus: Arc::new(modulus),
        })
    }

    pub fn rationals() -> Self {
        CyclotomicField::new(1).expect("Q(zeta1) = Q")
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// The class of `z`.
    pub fn zeta(&self) -> Cyc {
        self.reduce(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_rational(&self, r: BigRational) -> Cyc {
        self.reduce(vec![r])
    }

    fn reduce(&self, mut p: Vec<BigRational>) -> Cyc {
        let d = self.degree();
        while p.len() > d {
            let top = p.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for i in 0..d {
                p[shift + i] -= &top * &self.modulus[i];
            }
        }
        p.resize(d, BigRational::zero());
        Cyc(p)
    }
}

fn trim_q(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn q_poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim_q(b.to_vec());
    let mut r = trim_q(a.to_vec());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    let lead = b[db].clone();
    while r.len() >= b.len() {
        let c = r.last().unwrap() / &lead;
        let shift = r.len() - 1 - db;
        for i in 0..=db {
            r[shift + i] -= &c * &b[i];
        }
        q[shift] = c;
        r.pop();
        r = trim_q(r);
    }
    (q, r)
}

fn q_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn q_poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim_q(out)
}

impl Field for CyclotomicField {
    type Elem = Cyc;

    fn zero(&self) -> Cyc {
        Cyc(vec![BigRational::zero(); self.degree()])
    }

    fn one(&self) -> Cyc {
        self.from_rational(BigRational::one())
    }

    fn add(&self, a: &Cyc, b: &Cyc) -> Cyc {
        Cyc(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    fn neg(&self, a: &Cyc) -> Cyc {
        Cyc(a.0.iter().map(|x| -x).collect())
    }

    fn mul(&self, a: &Cyc, b: &Cyc) -> Cyc {
        self.reduce(q_poly_mul(&a.0, &b.0))
    }

    fn inv(&self, a: &Cyc) -> Option<Cyc> {
        let a_poly = trim_q(a.0.clone());
        if a_poly.is_empty() {
            return None;
        }
        // extended Euclid: s*a + t*m = g, g constant
        let m = self.modulus.to_vec();
        let (mut r0, mut r1) = (m, a_poly);
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
            (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = q_poly_divrem(&r0, &r1);
            let s2 = q_poly_sub(&s0, &q_poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is the gcd, a nonzero constant since the modulus is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].clone();
        let scaled = s0.into_iter().map(|x| x / &c).collect();
        Some(self.reduce(scaled))
    }

    fn from_int(&self, n: &BigInt) -> Cyc {
        self.from_rational(BigRational::from_integer(n.clone()))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn name(&self) -> String {
        if self.n == 1 {
            return "Q".to_string();
        }
        format!("Q(zeta{})", self.n)
    }

    fn format(&self, a: &Cyc) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in a.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            let mag = c.abs();
            let body = if i == 0 {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            parts.push(format!("{sign}{body}"));
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut s = parts.concat();
        if s.starts_with('+') {
            s.remove(0);
        }
        s
    }

    fn torsion_exponent(&self) -> u64 {
        if self.n % 2 == 0 {
            self.n
        } else {
            2 * self.n
        }
    }

    fn primitive_root_of_unity(&self, m: u64) -> Option<Cyc> {
        if m == 0 {
            return None;
        }
        let n = self.n;
        if n % m == 0 {
            return Some(self.pow(&self.zeta(), (n / m) as i64));
        }
        // for odd n, -zeta has order 2n
        if n % 2 == 1 && (2 * n) % m == 0 {
            let minus_zeta = self.neg(&self.zeta());
            return Some(self.pow(&minus_zeta, (2 * n / m) as i64));
        }
        None
    }
}
