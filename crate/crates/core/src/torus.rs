//! Finite unions of torsion-translated subtori, cut out by monomial
//! equations `t^v = zeta_N^c`, and their images under lattice automorphisms.
//!
//! Set DSL:
//!
//! ```text
//! coords: r1 r2 r3 l1 l2 l3 q
//! global: t[q]=1
//! piece: t[l1]*t[l2]*t[l3]=1, t[r1]=t[r2]=t[r3]=1
//! piece: t[a]^2=zeta(3,1), t[b]=-1
//! ```
//!
//! Chains `x = y = z` give one equation per `=`; a side is `1`, `-1`,
//! `zeta(N,c)` or a product of `t[name]^k`. A set is the union of its pieces
//! intersected with the global equations; a set without pieces is the locus
//! of the global equations.
//!
//! Map DSL (columns are images of source coordinates):
//!
//! ```text
//! source: r1 r2 r3 l1 l2 l3 q
//! target: e1 e2 e3 l1 l2 l3 inf
//! r1 -> inf - l1 - e2 - e3
//! ```
//!
//! Source coordinates without a line map to the target coordinate of the same
//! name.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::snf::determinant;
use crate::algebra::{smith_normal_form, Field, FiniteField, Integers, Mat};
use crate::charvar::Character;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unknown coordinate `{0}`")]
    UnknownCoordinate(String),
    #[error("dimension mismatch: set has {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("lattice map has determinant {0}, expected ±1")]
    NotUnimodular(String),
    #[error("enumeration needs {required} points, budget is {budget}")]
    Budget { required: u128, budget: u64 },
}

/// `t^v = zeta_N^c` with `0 <= c < N`, `gcd(c, N) = 1` unless `c = 0`, in
/// which case `N = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialEquation {
    pub v: Vec<i64>,
    pub n: u64,
    pub c: u64,
}

impl MonomialEquation {
    pub fn new(v: Vec<i64>, n: u64, c: i64) -> Self {
        let n = n.max(1);
        let c = c.rem_euclid(n as i64) as u64;
        let g = c.gcd(&n);
        let (n, c) = if c == 0 { (1, 0) } else { (n / g, c / g) };
        MonomialEquation { v, n, c }
    }

    pub fn is_vacuous(&self) -> bool {
        self.c == 0 && self.v.iter().all(|&x| x == 0)
    }

    /// Phase `c/N` in `Q/Z`.
    pub fn phase(&self) -> BigRational {
        BigRational::new(BigInt::from(self.c), BigInt::from(self.n))
    }

    pub fn holds<F: Field>(&self, field: &F, xi: &[F::Elem]) -> bool {
        let mut lhs = field.one();
        for (x, &e) in xi.iter().zip(&self.v) {
            if e != 0 {
                lhs = field.mul(&lhs, &field.pow(x, e));
            }
        }
        let rhs = if self.n == 1 {
            field.one()
        } else {
            match field.primitive_root_of_unity(self.n) {
                Some(z) => field.pow(&z, self.c as i64),
                None => return false,
            }
        };
        lhs == rhs
    }

    pub fn format(&self, names: &[String]) -> String {
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (i, &e) in self.v.iter().enumerate() {
            let t = |k: i64| {
                if k == 1 {
                    format!("t[{}]", names[i])
                } else {
                    format!("t[{}]^{}", names[i], k)
                }
            };
            if e > 0 {
                num.push(t(e));
            } else if e < 0 {
                den.push(t(-e));
            }
        }
        let side = |s: Vec<String>| if s.is_empty() { "1".to_string() } else { s.join("*") };
        let rhs = match (self.n, self.c) {
            (1, _) => side(den),
            (2, 1) if den.is_empty() => "-1".to_string(),
            _ => {
                let z = format!("zeta({},{})", self.n, self.c);
                if den.is_empty() {
                    z
                } else {
                    format!("{z}*{}", den.join("*"))
                }
            }
        };
        format!("{}={}", side(num), rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionSubtorusSet {
    pub names: Vec<String>,
    pub global: Vec<MonomialEquation>,
    pub pieces: Vec<Vec<MonomialEquation>>,
}

impl TorsionSubtorusSet {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Pieces with the global equations prepended; a set with no pieces is
    /// one piece made of the global equations.
    pub fn effective_pieces(&self) -> Vec<Vec<MonomialEquation>> {
        if self.pieces.is_empty() {
            return vec![self.global.clone()];
        }
        self.pieces
            .iter()
            .map(|p| self.global.iter().chain(p).cloned().collect())
            .collect()
    }

    pub fn member<F: Field>(&self, field: &F, xi: &Character<F::Elem>) -> Result<bool, TorusError> {
        if xi.values.len() != self.dim() {
            return Err(TorusError::Dimension {
                expected: self.dim(),
                got: xi.values.len(),
            });
        }
        let global = self.global.iter().all(|e| e.holds(field, &xi.values));
        if !global {
            return Ok(false);
        }
        if self.pieces.is_empty() {
            return Ok(true);
        }
        Ok(self
            .pieces
            .iter()
            .any(|p| p.iter().all(|e| e.holds(field, &xi.values))))
    }

    /// Point set over a finite field, sorted.
    pub fn enumerate<F: FiniteField>(&self, field: &F, budget: u64) -> Result<Vec<Character<F::Elem>>, TorusError> {
        let units = field.units();
        let base = units.len() as u128;
        let r = self.dim();
        let total = base.pow(r as u32);
        if total > budget as u128 {
            return Err(TorusError::Budget {
                required: total,
                budget,
            });
        }
        let mut pts: Vec<Character<F::Elem>> = (0..total as u64)
            .into_par_iter()
            .map(|mut idx| {
                let mut coords = Vec::with_capacity(r);
                for _ in 0..r {
                    coords.push(units[(idx % base as u64) as usize].clone());
                    idx /= base as u64;
                }
                coords.reverse();
                Character::new(coords)
            })
            .filter(|xi| self.member(field, xi).unwrap_or(false))
            .collect();
        pts.sort();
        Ok(pts)
    }

    /// Equations pushed forward along an integer matrix (rows indexed by
    /// `target` coordinates, columns by `self.names`), with no unimodularity
    /// check.
    pub fn substitute(&self, matrix: &[Vec<i64>], target: &[String]) -> TorsionSubtorusSet {
        let push = |e: &MonomialEquation| {
            let v = matrix
                .iter()
                .map(|row| row.iter().zip(&e.v).map(|(a, b)| a * b).sum())
                .collect();
            MonomialEquation::new(v, e.n, e.c as i64)
        };
        TorsionSubtorusSet {
            names: target.to_vec(),
            global: self.global.iter().map(push).collect(),
            pieces: self.pieces.iter().map(|p| p.iter().map(push).collect()).collect(),
        }
    }

    /// The set `{xi o A^-1 : xi in S}`.
    pub fn image(&self, a: &LatticeAuto) -> Result<TorsionSubtorusSet, TorusError> {
        if a.source != self.names {
            return Err(TorusError::Dimension {
                expected: self.dim(),
                got: a.source.len(),
            });
        }
        Ok(self.substitute(&a.matrix, &a.target))
    }

    pub fn to_dsl(&self) -> String {
        let mut out = format!("coords: {}\n", self.names.join(" "));
        for e in &self.global {
            out.push_str(&format!("global: {}\n", e.format(&self.names)));
        }
        for p in &self.pieces {
            let eqs: Vec<String> = p.iter().map(|e| e.format(&self.names)).collect();
            out.push_str(&format!("piece: {}\n", eqs.join(", ")));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// coordinate detection

/// What the equations of one piece force.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceReport {
    pub piece: usize,
    /// No character over an algebraically closed field satisfies the piece.
    pub empty: bool,
    /// Dimension of the translated subtorus.
    pub dimension: usize,
    /// Coordinates forced to equal 1.
    pub forced_one: Vec<usize>,
    /// Coordinates forced to another root of unity, with the phase `c/N`.
    pub forced_other: Vec<(usize, String)>,
}

impl PieceReport {
    pub fn is_coordinate(&self) -> bool {
        !self.empty && !self.forced_one.is_empty()
    }
}

fn frac_mod1(x: BigRational) -> BigRational {
    let f = x.floor();
    x - f
}

/// Exact analysis of a conjunction of equations over `r` coordinates: write
/// `xi = exp(2 pi i x)` and solve `V x = theta (mod Z^k)` through the Smith
/// form `U V W = D`.
pub fn analyze_piece(r: usize, eqs: &[MonomialEquation]) -> (bool, usize, Vec<Option<BigRational>>) {
    let eqs: Vec<&MonomialEquation> = eqs.iter().filter(|e| !e.is_vacuous()).collect();
    if eqs.is_empty() {
        return (false, r, vec![None; r]);
    }
    let v = Mat::from_rows(
        r,
        eqs.iter()
            .map(|e| e.v.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    );
    let theta: Vec<BigRational> = eqs.iter().map(|e| e.phase()).collect();
    let snf = smith_normal_form(&Integers, &v);
    let k = eqs.len();
    let u_theta: Vec<BigRational> = (0..k)
        .map(|i| {
            (0..k).fold(BigRational::zero(), |acc, j| {
                acc + BigRational::from_integer(snf.u.get(i, j).clone()) * &theta[j]
            })
        })
        .collect();
    let mut empty = false;
    let mut free = Vec::new();
    let mut fixed = Vec::new();
    for i in 0..k.max(r) {
        let d = if i < k.min(r) {
            snf.diagonal[i].clone()
        } else {
            BigInt::zero()
        };
        if i < k && d.is_zero() {
            if !frac_mod1(u_theta[i].clone()).is_zero() {
                empty = true;
            }
            if i < r {
                free.push(i);
            }
        } else if i < k {
            fixed.push((i, d));
        } else {
            free.push(i);
        }
    }
    let dimension = free.len();
    let forced = (0..r)
        .map(|j| {
            if free.iter().any(|&i| !snf.v.get(j, i).is_zero()) {
                return None;
            }
            let mut x = BigRational::zero();
            for (i, d) in &fixed {
                let w = snf.v.get(j, *i);
                if !(w % d).is_zero() {
                    return None;
                }
                x += BigRational::from_integer(w.clone()) * &u_theta[*i] / BigRational::from_integer(d.clone());
            }
            Some(frac_mod1(x))
        })
        .collect();
    (empty, dimension, forced)
}

/// Which pieces force a coordinate to be trivial.
pub fn coordinate_pieces(s: &TorsionSubtorusSet) -> Vec<PieceReport> {
    s.effective_pieces()
        .iter()
        .enumerate()
        .map(|(idx, eqs)| {
            let (empty, dimension, forced) = analyze_piece(s.dim(), eqs);
            let mut forced_one = Vec::new();
            let mut forced_other = Vec::new();
            for (j, f) in forced.into_iter().enumerate() {
                match f {
                    Some(x) if x.is_zero() => forced_one.push(j),
                    Some(x) => forced_other.push((j, x.to_string())),
                    None => {}
                }
            }
            PieceReport {
                piece: idx,
                empty,
                dimension,
                forced_one,
                forced_other,
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// lattice automorphisms

/// An automorphism of `Z^r`: `matrix[i][j]` is the coefficient of target
/// coordinate `i` in the image of source coordinate `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeAuto {
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
    inverse: Vec<Vec<i64>>,
    pub description: Option<String>,
}

fn to_mat(m: &[Vec<i64>], r: usize) -> Mat<BigInt> {
    Mat::from_rows(r, m.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect())
}

/// Determinant of a square integer matrix.
pub fn integer_determinant(m: &[Vec<i64>]) -> BigInt {
    determinant(&Integers, &to_mat(m, m.len()))
}

impl LatticeAuto {
    pub fn new(source: Vec<String>, target: Vec<String>, matrix: Vec<Vec<i64>>) -> Result<Self, TorusError> {
        let r = source.len();
        if target.len() != r || matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(TorusError::Dimension {
                expected: r,
                got: matrix.len(),
            });
        }
        let det = integer_determinant(&matrix);
        if !det.abs().is_one() {
            return Err(TorusError::NotUnimodular(det.to_string()));
        }
        let snf = smith_normal_form(&Integers, &to_mat(&matrix, r));
        // U A V = I with the signs folded into U, so A^-1 = V U
        let inv = crate::algebra::snf::mat_mul(&Integers, &snf.v, &snf.u);
        let inverse = (0..r)
            .map(|i| (0..r).map(|j| inv.get(i, j).to_i64().expect("small inverse")).collect())
            .collect();
        Ok(LatticeAuto {
            source,
            target,
            matrix,
            inverse,
            description: None,
        })
    }

    pub fn identity(names: Vec<String>) -> Self {
        let r = names.len();
        let m: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as i64).collect()).collect();
        LatticeAuto::new(names.clone(), names, m).expect("identity is unimodular")
    }

    pub fn inverse(&self) -> LatticeAuto {
        LatticeAuto {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
            description: self.description.clone(),
        }
    }

    /// `xi o A^-1` in target coordinates.
    pub fn transform_point<F: Field>(&self, field: &F, xi: &Character<F::Elem>) -> Character<F::Elem> {
        let r = self.source.len();
        let values = (0..r)
            .map(|j| {
                (0..r).fold(field.one(), |acc, i| {
                    let e = self.inverse[i][j];
                    if e == 0 {
                        acc
                    } else {
                        field.mul(&acc, &field.pow(&xi.values[i], e))
                    }
                })
            })
            .collect();
        Character::new(values)
    }
}

/// Parses the map DSL into `(source, target, matrix)` without checking the
/// determinant.
pub fn parse_map_matrix(text: &str) -> Result<(Vec<String>, Vec<String>, Vec<Vec<i64>>), TorusError> {
    let mut source: Option<Vec<String>> = None;
    let mut target: Option<Vec<String>> = None;
    let mut lines = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("source:") {
            source = Some(rest.split_whitespace().map(String::from).collect());
        } else if let Some(rest) = line.strip_prefix("target:") {
            target = Some(rest.split_whitespace().map(String::from).collect());
        } else if line.starts_with("description:") {
            continue;
        } else {
            lines.push((ln + 1, line));
        }
    }
    let syntax = |line, msg: String| TorusError::Syntax { line, msg };
    let source = source.ok_or_else(|| syntax(0, "missing `source:`".into()))?;
    let target = target.ok_or_else(|| syntax(0, "missing `target:`".into()))?;
    let r = source.len();
    let mut cols: Vec<Option<Vec<i64>>> = vec![None; r];
    for (ln, line) in lines {
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| syntax(ln, format!("expected `coord -> combination`, got `{line}`")))?;
        let j = source
            .iter()
            .position(|s| s == lhs.trim())
            .ok_or_else(|| TorusError::UnknownCoordinate(lhs.trim().to_string()))?;
        cols[j] = Some(parse_combination(rhs, &target).map_err(|m| syntax(ln, m))?);
    }
    let mut matrix = vec![vec![0i64; r]; target.len()];
    for (j, col) in cols.into_iter().enumerate() {
        let col = match col {
            Some(c) => c,
            None => {
                let i = target
                    .iter()
                    .position(|t| *t == source[j])
                    .ok_or_else(|| TorusError::UnknownCoordinate(source[j].clone()))?;
                let mut c = vec![0; target.len()];
                c[i] = 1;
                c
            }
        };
        for (i, x) in col.into_iter().enumerate() {
            matrix[i][j] = x;
        }
    }
    Ok((source, target, matrix))
}

pub fn parse_map(text: &str) -> Result<LatticeAuto, TorusError> {
    let (s, t, m) = parse_map_matrix(text)?;
    let mut a = LatticeAuto::new(s, t, m)?;
    a.description = text
        .lines()
        .find_map(|l| l.trim().strip_prefix("description:").map(|d| d.trim().to_string()));
    Ok(a)
}

/// `a - 2*b + c` style integer combinations.
fn parse_combination(text: &str, names: &[String]) -> Result<Vec<i64>, String> {
    let mut out = vec![0i64; names.len()];
    let cleaned = text.replace('-', " - ").replace('+', " + ");
    let mut sign = 1i64;
    let mut coef: Option<i64> = None;
    let mut any = false;
    for tok in cleaned.split_whitespace() {
        match tok {
            "+" => sign = 1,
            "-" => sign = -sign,
            _ => {
                let (c, name) = match tok.split_once('*') {
                    Some((c, n)) => (Some(c), n),
                    None => (None, tok),
                };
                if let Ok(n) = tok.parse::<i64>() {
                    coef = Some(n);
                    continue;
                }
                let k = match c {
                    Some(c) => c.parse::<i64>().map_err(|_| format!("bad coefficient `{c}`"))?,
                    None => coef.take().unwrap_or(1),
                };
                let i = names
                    .iter()
                    .position(|s| s == name)
                    .ok_or_else(|| format!("unknown coordinate `{name}`"))?;
                out[i] += sign * k;
                sign = 1;
                any = true;
            }
        }
    }
    if !any {
        return Err(format!("empty combination `{}`", text.trim()));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// set parsing

fn parse_side(text: &str, names: &[String], line: usize) -> Result<(Vec<i64>, u64, i64), TorusError> {
    let syntax = |msg: String| TorusError::Syntax { line, msg };
    let mut v = vec![0i64; names.len()];
    let (mut n, mut c) = (1u64, 0i64);
    for factor in text.split('*') {
        let f = factor.trim();
        if f == "1" {
            continue;
        }
        if f == "-1" {
            // combine with an existing root: zeta(n,c) * zeta(2,1)
            let l = n.lcm(&2);
            c = c * (l / n) as i64 + (l / 2) as i64;
            n = l;
            continue;
        }
        if let Some(args) = f.strip_prefix("zeta(").and_then(|r| r.strip_suffix(')')) {
            let (a, b) = args
                .split_once(',')
                .ok_or_else(|| syntax(format!("expected zeta(N,c), got `{f}`")))?;
            let zn: u64 = a.trim().parse().map_err(|_| syntax(format!("bad N in `{f}`")))?;
            let zc: i64 = b.trim().parse().map_err(|_| syntax(format!("bad c in `{f}`")))?;
            if zn == 0 {
                return Err(syntax("zeta order must be positive".into()));
            }
            let l = n.lcm(&zn);
            c = c * (l / n) as i64 + zc * (l / zn) as i64;
            n = l;
            continue;
        }
        let rest = f
            .strip_prefix("t[")
            .ok_or_else(|| syntax(format!("expected `t[name]`, got `{f}`")))?;
        let (name, pow) = rest
            .split_once(']')
            .ok_or_else(|| syntax(format!("unclosed `[` in `{f}`")))?;
        let k: i64 = match pow.trim() {
            "" => 1,
            p => p
                .strip_prefix('^')
                .and_then(|x| x.trim().parse().ok())
                .ok_or_else(|| syntax(format!("bad exponent in `{f}`")))?,
        };
        let i = names
            .iter()
            .position(|s| s == name.trim())
            .ok_or_else(|| TorusError::UnknownCoordinate(name.trim().to_string()))?;
        v[i] += k;
    }
    Ok((v, n, c))
}

fn split_top(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

fn parse_conjunction(text: &str, names: &[String], line: usize) -> Result<Vec<MonomialEquation>, TorusError> {
    let mut out = Vec::new();
    for chain in split_top(text) {
        let chain = chain.trim();
        if chain.is_empty() {
            continue;
        }
        let sides = chain
            .split('=')
            .map(|s| parse_side(s, names, line))
            .collect::<Result<Vec<_>, _>>()?;
        if sides.len() < 2 {
            return Err(TorusError::Syntax {
                line,
                msg: format!("expected an equation, got `{chain}`"),
            });
        }
        for w in sides.windows(2) {
            // t^a z1 = t^b z2  <=>  t^(a-b) = z2/z1
            let (a, n1, c1) = &w[0];
            let (b, n2, c2) = &w[1];
            let v = a.iter().zip(b).map(|(x, y)| x - y).collect();
            let l = n1.lcm(n2);
            let c = c2 * (l / n2) as i64 - c1 * (l / n1) as i64;
            let eq = MonomialEquation::new(v, l, c);
            if !eq.is_vacuous() {
                out.push(eq);
            }
        }
    }
    Ok(out)
}

pub fn parse_set(text: &str) -> Result<TorsionSubtorusSet, TorusError> {
    let mut names: Option<Vec<String>> = None;
    let mut global = Vec::new();
    let mut pieces = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let ln = ln + 1;
        let (key, rest) = line.split_once(':').ok_or_else(|| TorusError::Syntax {
            line: ln,
            msg: format!("expected `key: value`, got `{line}`"),
        })?;
        let need = || {
            names.clone().ok_or(TorusError::Syntax {
                line: ln,
                msg: "`coords:` must come first".into(),
            })
        };
        match key.trim() {
            "coords" => names = Some(rest.split_whitespace().map(String::from).collect()),
            "global" => global.extend(parse_conjunction(rest, &need()?, ln)?),
            "piece" => pieces.push(parse_conjunction(rest, &need()?, ln)?),
            other => {
                return Err(TorusError::Syntax {
                    line: ln,
                    msg: format!("unknown key `{other}`"),
                })
            }
        }
    }
    let names = names.ok_or(TorusError::Syntax {
        line: 0,
        msg: "missing `coords:`".into(),
    })?;
    Ok(TorsionSubtorusSet {
        names,
        global,
        pieces,
    })
}
