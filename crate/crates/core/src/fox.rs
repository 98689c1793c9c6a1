//! Fox calculus abelianized through component labels, Alexander matrices and
//! deletion matrices.
//!
//! Generator `g` maps to the Laurent variable of its component, so
//! `d(x_i)/d(x_i) = 1`, `d(x_i^-1)/d(x_i) = -t_{c(i)}^-1` and
//! `d(uv) = du + u^ab dv`. The matrix has one row per generator and one
//! column per relator.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::algebra::{AlgebraError, Field, LaurentPoly, Mat, PolyMatrix};
use crate::words::{abelianize, AbelianStructure, FreeWord, GroupPresentation, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoxError {
    #[error("generator index {index} out of range ({n} generators)")]
    Undeclared { index: usize, n: usize },
    #[error("component `{0}` has no meridian generator in this presentation")]
    NoMeridian(String),
    #[error("generator `{gen}` is not a meridian of component `{component}`")]
    NotMeridianOf { gen: String, component: String },
    #[error("component `{0}` was already deleted")]
    AlreadyDeleted(String),
    #[error("character does not vanish on relator {0}")]
    InconsistentCharacter(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Fox derivative `d(w)/d(x_gen)` in `Z[Z^r]`, where generator `g` maps to
/// variable `var_of_gen[g]` (or to 1 if `None`).
pub fn fox_derivative_with(
    w: &FreeWord,
    gen: usize,
    var_of_gen: &[Option<usize>],
    nvars: usize,
) -> LaurentPoly {
    let mut out = LaurentPoly::zero(nvars);
    let mut prefix = vec![0i64; nvars];
    let one = BigInt::one();
    for (g, s) in w.syllables() {
        let v = var_of_gen[g];
        if s > 0 {
            if g == gen {
                out.add_term(prefix.clone(), &one);
            }
            if let Some(v) = v {
                prefix[v] += 1;
            }
        } else {
            if let Some(v) = v {
                prefix[v] -= 1;
            }
            if g == gen {
                out.add_term(prefix.clone(), &-&one);
            }
        }
    }
    out
}

/// Fox derivative of `w` with respect to generator `i`, one Laurent variable
/// per component of `p`.
pub fn fox_derivative(p: &GroupPresentation, w: &FreeWord, i: usize) -> Result<LaurentPoly, FoxError> {
    let n = p.n_gens();
    if i >= n {
        return Err(FoxError::Undeclared { index: i, n });
    }
    if let Some(m) = w.max_generator().filter(|&m| m >= n) {
        return Err(FoxError::Undeclared { index: m, n });
    }
    let map: Vec<Option<usize>> = (0..n).map(|g| Some(p.component_of(g))).collect();
    Ok(fox_derivative_with(w, i, &map, p.n_components()))
}

/// Direct evaluation of `d(w)/d(x_i)` at the character sending generator `g`
/// to `values[component(g)]`.
pub fn fox_eval<F: Field>(
    field: &F,
    p: &GroupPresentation,
    w: &FreeWord,
    i: usize,
    values: &[F::Elem],
) -> Result<F::Elem, FoxError> {
    check_character(field, p, values)?;
    let n = p.n_gens();
    if let Some(m) = w.max_generator().filter(|&m| m >= n) {
        return Err(FoxError::Undeclared { index: m, n });
    }
    let gen_val: Vec<F::Elem> = (0..n).map(|g| values[p.component_of(g)].clone()).collect();
    let gen_inv: Vec<F::Elem> = gen_val
        .iter()
        .map(|x| field.inv(x).ok_or(AlgebraError::ZeroCoordinate))
        .collect::<Result<_, _>>()?;
    let mut acc = field.zero();
    let mut prefix = field.one();
    for (g, s) in w.syllables() {
        if s > 0 {
            if g == i {
                acc = field.add(&acc, &prefix);
            }
            prefix = field.mul(&prefix, &gen_val[g]);
        } else {
            prefix = field.mul(&prefix, &gen_inv[g]);
            if g == i {
                acc = field.sub(&acc, &prefix);
            }
        }
    }
    Ok(acc)
}

/// Value of a word under the character given per component.
pub fn word_value<F: Field>(field: &F, p: &GroupPresentation, w: &FreeWord, values: &[F::Elem]) -> F::Elem {
    let mut acc = field.one();
    for (c, e) in p.component_exponents(w).into_iter().enumerate() {
        if e != 0 {
            acc = field.mul(&acc, &field.pow(&values[c], e));
        }
    }
    acc
}

/// The character (one value per component) kills every relator.
pub fn check_character<F: Field>(field: &F, p: &GroupPresentation, values: &[F::Elem]) -> Result<(), FoxError> {
    if values.len() != p.n_components() {
        return Err(AlgebraError::VariableCount {
            expected: p.n_components(),
            got: values.len(),
        }
        .into());
    }
    if values.iter().any(|x| field.is_zero(x)) {
        return Err(AlgebraError::ZeroCoordinate.into());
    }
    for (r, w) in p.relators().iter().enumerate() {
        if !field.is_one(&word_value(field, p, w, values)) {
            return Err(FoxError::InconsistentCharacter(r));
        }
    }
    Ok(())
}

/// Alexander matrix of a presentation, possibly after deleting components.
#[derive(Clone, Debug)]
pub struct AlexMatrix {
    presentation: GroupPresentation,
    variables: Vec<usize>,
    deleted: Vec<usize>,
    matrix: PolyMatrix,
    abelian: AbelianStructure,
}

pub fn alexander_matrix(p: &GroupPresentation) -> AlexMatrix {
    let n = p.n_gens();
    let r = p.n_components();
    let map: Vec<Option<usize>> = (0..n).map(|g| Some(p.component_of(g))).collect();
    let entries = Mat::from_fn(n, p.n_rels(), |i, j| {
        fox_derivative_with(&p.relators()[j], i, &map, r)
    });
    let col_labels = (1..=p.n_rels()).map(|j| format!("r{j}")).collect();
    AlexMatrix {
        presentation: p.clone(),
        variables: (0..r).collect(),
        deleted: Vec::new(),
        matrix: PolyMatrix::new(r, entries, p.generator_names(), col_labels),
        abelian: abelianize(p),
    }
}

impl AlexMatrix {
    /// The presentation; after deletions it carries the extra meridian
    /// relators.
    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn abelian(&self) -> &AbelianStructure {
        &self.abelian
    }

    pub fn n_gens(&self) -> usize {
        self.matrix.rows()
    }

    pub fn n_rels(&self) -> usize {
        self.matrix.cols()
    }

    /// Number of Laurent variables.
    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    /// Component index of each Laurent variable.
    pub fn variables(&self) -> &[usize] {
        &self.variables
    }

    pub fn variable_names(&self) -> Vec<String> {
        self.variables
            .iter()
            .map(|&c| self.presentation.components()[c].clone())
            .collect()
    }

    /// Deleted components, in deletion order.
    pub fn deleted(&self) -> &[usize] {
        &self.deleted
    }

    pub fn variable_of_component(&self, c: usize) -> Option<usize> {
        self.variables.iter().position(|&x| x == c)
    }

    /// Values per component of the underlying presentation, deleted
    /// components set to 1.
    pub fn full_character<F: Field>(&self, field: &F, point: &[F::Elem]) -> Vec<F::Elem> {
        let mut full = vec![field.one(); self.presentation.n_components()];
        for (v, &c) in self.variables.iter().enumerate() {
            full[c] = point[v].clone();
        }
        full
    }

    /// Checks that `point` (one value per variable) is a character of `H_1`.
    pub fn check_point<F: Field>(&self, field: &F, point: &[F::Elem]) -> Result<(), FoxError> {
        if point.len() != self.nvars() {
            return Err(AlgebraError::VariableCount {
                expected: self.nvars(),
                got: point.len(),
            }
            .into());
        }
        check_character(field, &self.presentation, &self.full_character(field, point))
    }

    /// Every relator is trivial on the component lattice, so every point of the
    /// torus is a character.
    pub fn torus_is_character_group(&self) -> bool {
        self.presentation.is_meridian_presentation()
    }

    pub fn evaluate<F: Field>(&self, field: &F, point: &[F::Elem]) -> Result<Mat<F::Elem>, FoxError> {
        Ok(self.matrix.evaluate(field, point)?)
    }

    /// Column identity `sum_i d(r)/d(x_i) (t_{c(i)} - 1) = t^{ab(r)} - 1` for
    /// every relator, checked in the ring of the undeleted presentation.
    pub fn fundamental_identity_holds(&self) -> bool {
        let p = &self.presentation;
        let r = p.n_components();
        let m = alexander_matrix(p);
        (0..p.n_rels()).all(|j| {
            let mut lhs = LaurentPoly::zero(r);
            for i in 0..p.n_gens() {
                let t = LaurentPoly::var(r, p.component_of(i));
                let d = &t - &LaurentPoly::one(r);
                lhs = &lhs + &(m.matrix.get(i, j) * &d);
            }
            let ab = p.component_exponents(&p.relators()[j]);
            let rhs = &LaurentPoly::monomial(r, ab, BigInt::one()) - &LaurentPoly::one(r);
            lhs == rhs
        })
    }
}

/// Deletion of component `i` through meridian generator `g`: substitute
/// `t_i = 1` and append a column that is 1 at row `g` and 0 elsewhere.
pub fn deletion_matrix(a: &AlexMatrix, i: usize, g: usize) -> Result<AlexMatrix, FoxError> {
    let p = &a.presentation;
    let comp_name = |c: usize| {
        p.components()
            .get(c)
            .cloned()
            .unwrap_or_else(|| c.to_string())
    };
    if i >= p.n_components() {
        return Err(FoxError::NoMeridian(comp_name(i)));
    }
    if g >= p.n_gens() {
        return Err(FoxError::Undeclared {
            index: g,
            n: p.n_gens(),
        });
    }
    if p.component_of(g) != i {
        return Err(FoxError::NotMeridianOf {
            gen: p.generators()[g].name.clone(),
            component: comp_name(i),
        });
    }
    let v = a
        .variable_of_component(i)
        .ok_or_else(|| FoxError::AlreadyDeleted(comp_name(i)))?;
    let specialized = a.matrix.specialize_to_one(v);
    let nv = specialized.nvars();
    let col = (0..a.n_gens())
        .map(|row| {
            if row == g {
                LaurentPoly::one(nv)
            } else {
                LaurentPoly::zero(nv)
            }
        })
        .collect();
    let label = format!("del({})", p.generators()[g].name);
    let matrix = specialized.with_column(col, label);
    let presentation = p.with_relator(FreeWord::gen(g))?;
    let mut variables = a.variables.clone();
    variables.remove(v);
    let mut deleted = a.deleted.clone();
    deleted.push(i);
    Ok(AlexMatrix {
        abelian: abelianize(&presentation),
        presentation,
        variables,
        deleted,
        matrix,
    })
}

/// Deletion of component `i` through its first meridian generator.
pub fn delete_component(a: &AlexMatrix, i: usize) -> Result<AlexMatrix, FoxError> {
    let p = &a.presentation;
    let g = p.meridian_of(i).ok_or_else(|| {
        FoxError::NoMeridian(
            p.components()
                .get(i)
                .cloned()
                .unwrap_or_else(|| i.to_string()),
        )
    })?;
    deletion_matrix(a, i, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_rank, CyclotomicField, GaloisField};
    use crate::words::parse_presentation;

    fn g(text: &str) -> GroupPresentation {
        parse_presentation(text).unwrap()
    }

    fn g2() -> GroupPresentation {
        g("gens: e1@conic e2@quartic\nrel: [e2,e1^2]\nrel: (e1 e2)^2 = (e2 e1)^2")
    }

    fn poly(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            2,
            terms.iter().map(|&(a, b, c)| (vec![a, b], BigInt::from(c))),
        )
    }

    #[test]
    fn commutator_derivative() {
        let p = g2();
        let d = fox_derivative(&p, &p.relators()[0], 0).unwrap();
        // t2 + t1 t2 - t1 - 1
        assert_eq!(d, poly(&[(0, 1, 1), (1, 1, 1), (1, 0, -1), (0, 0, -1)]));
    }

    #[test]
    fn generator_derivatives() {
        let p = g2();
        let e1 = FreeWord::gen(0);
        assert_eq!(fox_derivative(&p, &e1, 0).unwrap(), LaurentPoly::one(2));
        assert!(fox_derivative(&p, &e1, 1).unwrap().is_zero());
        assert!(fox_derivative(&p, &e1, 2).is_err());
    }

    #[test]
    fn second_relator_is_unit_multiple_of_factored_form() {
        let p = g2();
        let d = fox_derivative(&p, &p.relators()[1], 0).unwrap();
        let t1 = LaurentPoly::var(2, 0);
        let t2 = LaurentPoly::var(2, 1);
        let one = LaurentPoly::one(2);
        let expected = &(&t2 - &one) * &(&(&t1 * &t2) + &one);
        assert_eq!(d.unit_ratio(&expected), Some((-1, vec![0, 0])));
        let d = fox_derivative(&p, &p.relators()[1], 1).unwrap();
        let expected = &(&t1 - &one) * &(&(&t1 * &t2) + &one);
        assert_eq!(d.unit_ratio(&expected), Some((1, vec![0, 0])));
    }

    #[test]
    fn fundamental_identity_on_sextic_group() {
        assert!(alexander_matrix(&g2()).fundamental_identity_holds());
    }

    #[test]
    fn free_group_matrix_is_empty() {
        let a = alexander_matrix(&GroupPresentation::free(&["a", "b"]));
        assert_eq!((a.n_gens(), a.n_rels()), (2, 0));
    }

    #[test]
    fn direct_evaluation_matches_symbolic() {
        let p = g2();
        let f = GaloisField::new(7).unwrap();
        let pt = [f.from_i64(3), f.from_i64(5)];
        for r in p.relators() {
            for i in 0..2 {
                let sym = fox_derivative(&p, r, i).unwrap().eval(&f, &pt).unwrap();
                assert_eq!(fox_eval(&f, &p, r, i, &pt).unwrap(), sym);
            }
        }
        let q = CyclotomicField::rationals();
        let pt = [q.from_i64(-1), q.one()];
        let v = fox_eval(&q, &p, &p.relators()[0], 0, &pt).unwrap();
        assert!(q.is_zero(&v));
    }

    #[test]
    fn torsion_character_consistency() {
        let p = g("gens: a1@quartic a3@conic\nrel: a3 a1 a3 a1^3");
        let f = GaloisField::new(5).unwrap();
        // quartic^4 conic^2 = 1
        let ok = [f.from_i64(2), f.from_i64(4)];
        assert!(fox_eval(&f, &p, &p.relators()[0], 0, &ok).is_ok());
        let bad = [f.from_i64(2), f.from_i64(2)];
        assert!(matches!(
            fox_eval(&f, &p, &p.relators()[0], 0, &bad),
            Err(FoxError::InconsistentCharacter(0))
        ));
    }

    #[test]
    fn deletion_of_quartic() {
        let a = alexander_matrix(&g2());
        let d = delete_component(&a, 1).unwrap();
        assert_eq!((d.n_gens(), d.n_rels()), (2, 3));
        assert_eq!(d.nvars(), 1);
        let t = LaurentPoly::var(1, 0);
        let sq_minus_one = &(&t * &t) - &LaurentPoly::one(1);
        // the e1 row carried the factor t2 - 1 and vanishes
        for j in 0..3 {
            assert!(d.matrix().get(0, j).is_zero());
        }
        for j in 0..2 {
            assert!(d.matrix().get(1, j).unit_ratio(&sq_minus_one).is_some());
        }
        assert_eq!(*d.matrix().get(1, 2), LaurentPoly::one(1));
        // same as the Fox matrix of the presentation with the meridian killed
        let direct = alexander_matrix(&g2().with_relator(FreeWord::gen(1)).unwrap());
        assert_eq!(direct.matrix().specialize_to_one(1).entries(), d.matrix().entries());
        assert!(matches!(delete_component(&d, 1), Err(FoxError::AlreadyDeleted(_))));
        assert!(matches!(
            deletion_matrix(&a, 1, 0),
            Err(FoxError::NotMeridianOf { .. })
        ));
    }

    #[test]
    fn deletion_from_free_group_is_unit_column() {
        let a = alexander_matrix(&GroupPresentation::free(&["a", "b"]));
        let d = delete_component(&a, 0).unwrap();
        assert_eq!(d.n_rels(), 1);
        let q = CyclotomicField::rationals();
        let m = d.evaluate(&q, &[q.from_i64(3)]).unwrap();
        assert_eq!(matrix_rank(&q, &m), 1);
    }
}
