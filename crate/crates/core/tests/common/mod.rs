#![allow(dead_code)]

use std::path::PathBuf;

use charvar::algebra::snf::{determinant, mat_mul};
use charvar::algebra::{
    matrix_rank, smith_normal_form, CyclotomicField, EuclideanDomain, Field, FiniteField, LaurentPoly, Mat,
};
use charvar::braid::{braid_act, parse_monodromy, zvk_presentation, ArtinConvention, BraidWord};
use charvar::charvar::{char_of_deletion, depth, enumerate_char, fitting_membership, Character};
use charvar::fox::{fox_derivative_with, AlexMatrix};
use charvar::words::{parse_presentation, FreeWord, GroupPresentation};
use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn read(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn pres(name: &str) -> GroupPresentation {
    parse_presentation(&read(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn zvk(name: &str, conv: ArtinConvention) -> GroupPresentation {
    zvk_presentation(&parse_monodromy(&read(name)).unwrap(), conv).unwrap()
}

/// Every presentation the repository ships, including the generated ones.
pub fn corpus() -> Vec<(String, GroupPresentation)> {
    let mut out: Vec<(String, GroupPresentation)> = ["g1.pres", "g2.pres", "free2.pres", "sextic1.pres", "sextic2.pres"]
        .iter()
        .map(|n| (n.to_string(), pres(n)))
        .collect();
    for t in ["table1.mono", "table2.mono"] {
        out.push((format!("{t} standard"), zvk(t, ArtinConvention::Standard)));
        out.push((format!("{t} mirrored"), zvk(t, ArtinConvention::Mirrored)));
    }
    out
}

// ---------------------------------------------------------------------------
// the two printed Alexander matrices, t1 for the conic and t2 for the quartic

fn t(i: usize) -> LaurentPoly {
    LaurentPoly::var(2, i)
}

fn c(k: i64) -> LaurentPoly {
    LaurentPoly::constant(2, k)
}

pub fn printed_phi(with_third_column: bool) -> Vec<Vec<LaurentPoly>> {
    let t1m = &t(0) - &c(1);
    let t2m = &t(1) - &c(1);
    let a = &t(0) + &c(1);
    let b = &(&t(0) * &t(1)) + &c(1);
    let d = &t(1) + &c(1);
    let mut rows = vec![vec![&t1m * &a, &t1m * &b], vec![&t2m * &a, &t2m * &b]];
    if with_third_column {
        rows[0].push(&t1m * &d);
        rows[1].push(&t2m * &d);
    }
    rows
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn transpose(m: &[Vec<LaurentPoly>]) -> Vec<Vec<LaurentPoly>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Whether `a` equals `b` after transposition, row and column permutations
/// and unit factors `±t^v` on rows and columns.
pub fn equivalent_up_to_units(a: &[Vec<LaurentPoly>], b: &[Vec<LaurentPoly>]) -> bool {
    let bt = transpose(b);
    [b.to_vec(), bt].iter().any(|b| {
        if a.len() != b.len() || a.iter().zip(b).any(|(x, y)| x.len() != y.len()) {
            return false;
        }
        let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
        permutations(rows).iter().any(|pr| {
            permutations(cols).iter().any(|pc| {
                // ratio(i,j) must factor as r_i * c_j in the unit group
                let mut ratio = vec![vec![None; cols]; rows];
                for i in 0..rows {
                    for j in 0..cols {
                        let (x, y) = (&a[i][j], &b[pr[i]][pc[j]]);
                        if x.is_zero() != y.is_zero() {
                            return false;
                        }
                        if x.is_zero() {
                            continue;
                        }
                        match x.unit_ratio(y) {
                            Some(u) => ratio[i][j] = Some(u),
                            None => return false,
                        }
                    }
                }
                units_factor(&ratio)
            })
        })
    })
}

fn units_factor(ratio: &[Vec<Option<(i8, Vec<i64>)>>]) -> bool {
    let mul = |x: &(i8, Vec<i64>), y: &(i8, Vec<i64>)| {
        (x.0 * y.0, x.1.iter().zip(&y.1).map(|(a, b)| a + b).collect::<Vec<_>>())
    };
    for i in 0..ratio.len() {
        for j in 0..ratio[i].len() {
            for k in 0..ratio.len() {
                for l in 0..ratio[i].len() {
                    if let (Some(a), Some(b), Some(c), Some(d)) =
                        (&ratio[i][j], &ratio[k][l], &ratio[i][l], &ratio[k][j])
                    {
                        if mul(a, b) != mul(c, d) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

pub fn polys_of(a: &AlexMatrix) -> Vec<Vec<LaurentPoly>> {
    let m = a.matrix();
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect()
}

pub fn rank_of<F: Field>(field: &F, m: &[Vec<LaurentPoly>], point: &[F::Elem]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let rows = m
        .iter()
        .map(|r| r.iter().map(|p| p.eval(field, point).unwrap()).collect())
        .collect();
    matrix_rank(field, &Mat::from_rows(cols, rows))
}

/// A random nonzero element `a + b z + c z^2` of `Q(zeta_6)`.
pub fn random_cyclotomic(rng: &mut impl Rng, f: &CyclotomicField) -> <CyclotomicField as Field>::Elem {
    loop {
        let z = f.zeta();
        let mut x = f.zero();
        for k in 0..f.degree() as i64 {
            let coef = f.from_i64(rng.gen_range(-3..=3));
            x = f.add(&x, &f.mul(&coef, &f.pow(&z, k)));
        }
        if !f.is_zero(&x) {
            return x;
        }
    }
}

// ---------------------------------------------------------------------------
// checks shared by the acceptance run and the property suites

/// `sum_i dw/dx_i (t_i - 1) = t^{ab(w)} - 1` in `Z[Z^n]`, one variable per
/// generator.
pub fn fox_identity(w: &FreeWord, n: usize) -> bool {
    let vars: Vec<Option<usize>> = (0..n).map(Some).collect();
    let mut lhs = LaurentPoly::zero(n);
    for i in 0..n {
        let d = fox_derivative_with(w, i, &vars, n);
        lhs = &lhs + &(&d * &(&LaurentPoly::var(n, i) - &LaurentPoly::one(n)));
    }
    let rhs = &LaurentPoly::monomial(n, w.exponent_vector(n), BigInt::one()) - &LaurentPoly::one(n);
    lhs == rhs
}

pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<(usize, i32)> = (0..len)
        .map(|_| (rng.gen_range(0..n), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    FreeWord::from_letters(&letters)
}

pub fn random_braid(rng: &mut impl Rng, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    (0..len).fold(BraidWord::identity(strands), |b, _| {
        let i = rng.gen_range(1..strands);
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        b.mul(&BraidWord::sigma(strands, i, e).unwrap())
    })
}

/// Braid relations, the fixed product `a_1 ... a_n`, inverses and
/// composition for the Artin action, on one test word.
pub fn artin_checks(strands: usize, w: &FreeWord, beta: &BraidWord, gamma: &BraidWord) -> Result<(), String> {
    for conv in [ArtinConvention::Standard, ArtinConvention::Mirrored] {
        let act = |b: &BraidWord, x: &FreeWord| braid_act(b, x, conv);
        let s = |i: usize, e: i32| BraidWord::sigma(strands, i, e).unwrap();
        for i in 1..strands {
            if i + 1 < strands {
                let l = s(i, 1).mul(&s(i + 1, 1)).mul(&s(i, 1));
                let r = s(i + 1, 1).mul(&s(i, 1)).mul(&s(i + 1, 1));
                if act(&l, w) != act(&r, w) {
                    return Err(format!("{conv:?}: braid relation at {i}"));
                }
            }
            for j in i + 2..strands {
                if act(&s(i, 1).mul(&s(j, 1)), w) != act(&s(j, 1).mul(&s(i, 1)), w) {
                    return Err(format!("{conv:?}: far commutation {i},{j}"));
                }
            }
        }
        let product = FreeWord::from_letters(&(0..strands).map(|g| (g, 1)).collect::<Vec<_>>());
        if act(beta, &product) != product {
            return Err(format!("{conv:?}: product not fixed by {beta}"));
        }
        if act(&beta.inverse(), &act(beta, w)) != *w {
            return Err(format!("{conv:?}: inverse of {beta}"));
        }
        if act(&beta.mul(gamma), w) != act(gamma, &act(beta, w)) {
            return Err(format!("{conv:?}: composition {beta} then {gamma}"));
        }
    }
    Ok(())
}

/// `U A V = D`, `D` diagonal with a divisibility chain, `U` and `V`
/// invertible.
pub fn snf_checks<R: EuclideanDomain>(ring: &R, a: &Mat<R::Elem>) -> Result<(), String> {
    let r = smith_normal_form(ring, a);
    let uav = mat_mul(ring, &mat_mul(ring, &r.u, a), &r.v);
    if uav != r.d {
        return Err("U A V != D".into());
    }
    for i in 0..r.d.rows() {
        for j in 0..r.d.cols() {
            if i != j && !ring.is_zero(r.d.get(i, j)) {
                return Err(format!("off-diagonal entry at ({i},{j})"));
            }
        }
    }
    for w in r.diagonal.windows(2) {
        if !ring.divides(&w[0], &w[1]) {
            return Err(format!("{:?} does not divide {:?}", w[0], w[1]));
        }
    }
    if !ring.is_unit(&determinant(ring, &r.u)) || !ring.is_unit(&determinant(ring, &r.v)) {
        return Err("transform not invertible".into());
    }
    Ok(())
}

/// Fitting membership for `F_{k+1}` agrees with `depth >= k` on every
/// non-trivial character of the finite field.
pub fn fitting_agrees<F: FiniteField>(field: &F, a: &AlexMatrix) -> Result<usize, String> {
    let units = field.units();
    let r = a.nvars();
    let mut checked = 0;
    let total = units.len().pow(r as u32);
    for mut idx in 0..total {
        let mut v = Vec::with_capacity(r);
        for _ in 0..r {
            v.push(units[idx % units.len()].clone());
            idx /= units.len();
        }
        let xi = Character::new(v);
        if xi.is_origin(field) || a.check_point(field, &xi.values).is_err() {
            continue;
        }
        let d = depth(field, a, &xi).map_err(|e| e.to_string())?;
        for k in 0..=a.n_gens() + 1 {
            let m = fitting_membership(field, a, &xi, k).map_err(|e| e.to_string())?;
            if m != (d >= k) {
                return Err(format!("{:?}: depth {d}, F_{} membership {m}", xi.format(field), k + 1));
            }
        }
        checked += 1;
    }
    Ok(checked)
}

/// Embedded `Char*_k` of every deletion lies in `Char*_k ∩ {t_i = 1}`.
pub fn lemma_inclusion<F: FiniteField>(field: &F, a: &AlexMatrix, k: usize) -> Result<usize, String> {
    let ambient = enumerate_char(field, a, k, u64::MAX).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for &comp in a.variables() {
        let (d, emb) = char_of_deletion(a, comp).map_err(|e| e.to_string())?;
        let deleted = enumerate_char(field, &d, k, u64::MAX).map_err(|e| e.to_string())?;
        for xi in &deleted.points {
            let up = emb.embed(field, xi);
            if !ambient.contains(&up) {
                return Err(format!("deleting {comp}: {:?} missing", up.format(field)));
            }
            checked += 1;
        }
    }
    Ok(checked)
}
