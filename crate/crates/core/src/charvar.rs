//! Characteristic varieties as point sets.
//!
//! For a character `xi != 1` the depth is `n_gens - 1 - rank A(xi)`;
//! `Char*_k` is the set of non-trivial characters of depth at least `k`.
//! Over a finite field the whole torus is enumerated, over `Q(zeta_N)` the
//! `N`-torsion points are scanned.

use num_integer::Integer;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{matrix_rank, AlgebraError, CyclotomicField, Field, FiniteField};
use crate::fox::{delete_component, AlexMatrix, FoxError};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Enumeration budget, `CHARVAR_BUDGET` if set and valid.
pub fn budget_from_env() -> u64 {
    std::env::var("CHARVAR_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharVarError {
    #[error("the trivial character has no depth")]
    Origin,
    #[error("enumeration needs {required} evaluations, budget is {budget}")]
    Budget { required: u128, budget: u64 },
    #[error(transparent)]
    Fox(#[from] FoxError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A point of the character torus: one value per Laurent variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character<E> {
    pub values: Vec<E>,
}

impl<E: Clone> Character<E> {
    pub fn new(values: Vec<E>) -> Self {
        Character { values }
    }

    pub fn is_origin<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.values.iter().all(|x| field.is_one(x))
    }

    /// Variables whose coordinate is 1.
    pub fn trivial_coordinates<F: Field<Elem = E>>(&self, field: &F) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&i| field.is_one(&self.values[i]))
            .collect()
    }

    /// Least `N` with `xi^N = 1`, if the character has finite order.
    pub fn order<F: Field<Elem = E>>(&self, field: &F) -> Option<u64> {
        let bound = field.torsion_exponent();
        self.values.iter().try_fold(1u64, |acc, x| {
            field.multiplicative_order(x, bound).map(|o| acc.lcm(&o))
        })
    }

    pub fn format<F: Field<Elem = E>>(&self, field: &F) -> Vec<String> {
        self.values.iter().map(|x| field.format(x)).collect()
    }

    /// Drops coordinate `i`.
    pub fn restrict(&self, i: usize) -> Self {
        let mut values = self.values.clone();
        values.remove(i);
        Character { values }
    }

    /// Inserts `1` at coordinate `i`.
    pub fn embed<F: Field<Elem = E>>(&self, field: &F, i: usize) -> Self {
        let mut values = self.values.clone();
        values.insert(i, field.one());
        Character { values }
    }
}

/// A level-`k` slice `Char*_k` over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSlice<E> {
    pub field: String,
    pub k: usize,
    pub variables: Vec<String>,
    pub points: Vec<Character<E>>,
    pub provenance: String,
}

impl<E: Clone + Ord> CharSlice<E> {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, xi: &Character<E>) -> bool {
        self.points.binary_search(xi).is_ok()
    }

    pub fn formatted<F: Field<Elem = E>>(&self, field: &F) -> Vec<Vec<String>> {
        self.points.iter().map(|p| p.format(field)).collect()
    }
}

/// Rank of the Alexander matrix at `xi`.
pub fn rank_at<F: Field>(field: &F, a: &AlexMatrix, xi: &Character<F::Elem>) -> Result<usize, CharVarError> {
    a.check_point(field, &xi.values)?;
    Ok(matrix_rank(field, &a.evaluate(field, &xi.values)?))
}

/// `n_gens - 1 - rank A(xi)` for a non-trivial character.
pub fn depth<F: Field>(field: &F, a: &AlexMatrix, xi: &Character<F::Elem>) -> Result<usize, CharVarError> {
    if xi.is_origin(field) {
        return Err(CharVarError::Origin);
    }
    let rank = rank_at(field, a, xi)?;
    Ok(a.n_gens().saturating_sub(1).saturating_sub(rank))
}

/// Whether every generator of `F_{k+1}` vanishes at `xi`.
pub fn fitting_membership<F: Field>(
    field: &F,
    a: &AlexMatrix,
    xi: &Character<F::Elem>,
    k: usize,
) -> Result<bool, CharVarError> {
    a.check_point(field, &xi.values)?;
    Ok(a.matrix()
        .fitting_generators(k + 1)
        .vanishes_at(field, &xi.values)?)
}

fn check_budget(required: u128, budget: u64) -> Result<(), CharVarError> {
    if required > budget as u128 {
        Err(CharVarError::Budget { required, budget })
    } else {
        Ok(())
    }
}

/// Characters with coordinates drawn from `values`, of depth at least `k`.
fn scan<F: Field>(
    field: &F,
    a: &AlexMatrix,
    values: &[F::Elem],
    k: usize,
) -> Result<Vec<Character<F::Elem>>, CharVarError> {
    let r = a.nvars();
    if r == 0 {
        return Ok(Vec::new());
    }
    let base = values.len() as u128;
    let total = base.pow(r as u32);
    let mut points: Vec<Character<F::Elem>> = (0..total as u64)
        .into_par_iter()
        .map(|mut idx| {
            let mut coords = Vec::with_capacity(r);
            for _ in 0..r {
                coords.push(values[(idx % base as u64) as usize].clone());
                idx /= base as u64;
            }
            coords.reverse();
            Character::new(coords)
        })
        .filter(|xi| !xi.is_origin(field) && a.check_point(field, &xi.values).is_ok())
        .map(|xi| depth(field, a, &xi).map(|d| (xi, d)))
        .filter_map(|res| match res {
            Ok((xi, d)) if d >= k => Some(Ok(xi)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_, _>>()?;
    points.sort();
    points.dedup();
    Ok(points)
}

/// `Char*_k` over a finite field by exhaustive enumeration of `(F^*)^r`.
pub fn enumerate_char<F: FiniteField>(
    field: &F,
    a: &AlexMatrix,
    k: usize,
    budget: u64,
) -> Result<CharSlice<F::Elem>, CharVarError> {
    let units = field.units();
    check_budget((units.len() as u128).pow(a.nvars() as u32), budget)?;
    Ok(CharSlice {
        field: field.name(),
        k,
        variables: a.variable_names(),
        points: scan(field, a, &units, k)?,
        provenance: provenance(a, "enumeration"),
    })
}

/// `Char*_k` restricted to `N`-torsion points, in exact arithmetic over
/// `Q(zeta_N)`.
pub fn torsion_scan(
    a: &AlexMatrix,
    n: u64,
    k: usize,
    budget: u64,
) -> Result<(CyclotomicField, CharSlice<<CyclotomicField as Field>::Elem>), CharVarError> {
    let field = CyclotomicField::new(n)?;
    let degree = field.degree() as u128;
    check_budget(degree * (n as u128).pow(a.nvars() as u32), budget)?;
    let zeta = field.zeta();
    let roots: Vec<_> = (0..n as i64).map(|j| field.pow(&zeta, j)).collect();
    let points = scan(&field, a, &roots, k)?;
    let slice = CharSlice {
        field: field.name(),
        k,
        variables: a.variable_names(),
        points,
        provenance: provenance(a, &format!("{n}-torsion scan")),
    };
    Ok((field, slice))
}

fn provenance(a: &AlexMatrix, how: &str) -> String {
    let comps = a.presentation().components();
    if a.deleted().is_empty() {
        format!("{how} of the Alexander matrix")
    } else {
        let names: Vec<&str> = a.deleted().iter().map(|&c| comps[c].as_str()).collect();
        format!("{how} of the deletion matrix without {}", names.join(", "))
    }
}

/// Inserting `1` at variable `position` maps the characters of the deletion
/// into the coordinate subtorus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeletionEmbedding {
    pub position: usize,
}

impl DeletionEmbedding {
    pub fn embed<F: Field>(&self, field: &F, xi: &Character<F::Elem>) -> Character<F::Elem> {
        xi.embed(field, self.position)
    }

    pub fn restrict<E: Clone>(&self, xi: &Character<E>) -> Character<E> {
        xi.restrict(self.position)
    }
}

/// Deletion matrix of component `i` with its embedding.
pub fn char_of_deletion(a: &AlexMatrix, i: usize) -> Result<(AlexMatrix, DeletionEmbedding), CharVarError> {
    let name = || {
        a.presentation()
            .components()
            .get(i)
            .cloned()
            .unwrap_or_else(|| i.to_string())
    };
    let position = a
        .variable_of_component(i)
        .ok_or_else(|| FoxError::AlreadyDeleted(name()))?;
    Ok((delete_component(a, i)?, DeletionEmbedding { position }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedPoint<E> {
    pub point: Character<E>,
    pub is_coordinate: bool,
    /// Variables whose coordinate is 1.
    pub vanishing: Vec<usize>,
    pub is_essential: bool,
    /// Variables `i` with the point in the embedded `Char*_k` of the
    /// deletion of `i`.
    pub witnesses: Vec<usize>,
}

/// Coordinate and essential labels for every point of a slice.
pub fn classify<F: Field>(
    field: &F,
    a: &AlexMatrix,
    slice: &CharSlice<F::Elem>,
) -> Result<Vec<ClassifiedPoint<F::Elem>>, CharVarError> {
    let mut deletions: Vec<Option<AlexMatrix>> = vec![None; a.nvars()];
    let mut out = Vec::with_capacity(slice.points.len());
    for xi in &slice.points {
        let vanishing = xi.trivial_coordinates(field);
        let mut witnesses = Vec::new();
        for &v in &vanishing {
            if deletions[v].is_none() {
                deletions[v] = Some(char_of_deletion(a, a.variables()[v])?.0);
            }
            let d = deletions[v].as_ref().expect("just built");
            let restricted = xi.restrict(v);
            if restricted.is_origin(field) || d.check_point(field, &restricted.values).is_err() {
                continue;
            }
            if depth(field, d, &restricted)? >= slice.k {
                witnesses.push(v);
            }
        }
        out.push(ClassifiedPoint {
            point: xi.clone(),
            is_coordinate: !vanishing.is_empty(),
            vanishing,
            is_essential: witnesses.is_empty(),
            witnesses,
        });
    }
    Ok(out)
}

/// Points of `(Char*_k ∩ T_i)` missing from the embedded `Char*_k` of the
/// deletion of variable `v`.
pub fn essential_in_subtorus<E: Clone + Ord, F: Field<Elem = E>>(
    field: &F,
    ambient: &CharSlice<E>,
    deleted: &CharSlice<E>,
    embedding: DeletionEmbedding,
) -> Vec<Character<E>> {
    ambient
        .points
        .iter()
        .filter(|xi| field.is_one(&xi.values[embedding.position]))
        .filter(|xi| !deleted.contains(&embedding.restrict(xi)))
        .cloned()
        .collect()
}

/// Whether `Char*_k ∩ T_i` has points outside the embedded deletion variety;
/// the witnesses are those points.
pub fn has_essential_coordinate<F: FiniteField>(
    field: &F,
    a: &AlexMatrix,
    i: usize,
    k: usize,
    budget: u64,
) -> Result<(bool, Vec<Character<F::Elem>>), CharVarError> {
    let ambient = enumerate_char(field, a, k, budget)?;
    let (d, emb) = char_of_deletion(a, i)?;
    let deleted = enumerate_char(field, &d, k, budget)?;
    let w = essential_in_subtorus(field, &ambient, &deleted, emb);
    Ok((!w.is_empty(), w))
}

/// The torsion-scan version of [`has_essential_coordinate`].
pub fn has_essential_coordinate_torsion(
    a: &AlexMatrix,
    i: usize,
    n: u64,
    k: usize,
    budget: u64,
) -> Result<(bool, Vec<Character<<CyclotomicField as Field>::Elem>>), CharVarError> {
    let (field, ambient) = torsion_scan(a, n, k, budget)?;
    let (d, emb) = char_of_deletion(a, i)?;
    let (_, deleted) = torsion_scan(&d, n, k, budget)?;
    let w = essential_in_subtorus(&field, &ambient, &deleted, emb);
    Ok((!w.is_empty(), w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GaloisField, Gf};
    use crate::fox::alexander_matrix;
    use crate::words::{parse_presentation, GroupPresentation};

    fn g1() -> AlexMatrix {
        alexander_matrix(
            &parse_presentation(
                "gens: e1@conic e2@quartic\nrel: [e2,e1^2]\nrel: (e1 e2)^2 = (e2 e1)^2\nrel: [e1,e2^2]",
            )
            .unwrap(),
        )
    }

    fn g2() -> AlexMatrix {
        alexander_matrix(
            &parse_presentation("gens: e1@conic e2@quartic\nrel: [e2,e1^2]\nrel: (e1 e2)^2 = (e2 e1)^2")
                .unwrap(),
        )
    }

    #[test]
    fn depth_at_the_double_point() {
        let q = CyclotomicField::rationals();
        let xi = Character::new(vec![q.from_i64(-1), q.one()]);
        assert_eq!(depth(&q, &g2(), &xi).unwrap(), 1);
        assert_eq!(depth(&q, &g1(), &xi).unwrap(), 0);
        let origin = Character::new(vec![q.one(), q.one()]);
        assert_eq!(depth(&q, &g2(), &origin), Err(CharVarError::Origin));
    }

    #[test]
    fn free_group_depth() {
        let a = alexander_matrix(&GroupPresentation::free(&["a", "b", "c"]));
        let f = GaloisField::new(3).unwrap();
        let xi = Character::new(vec![Gf(2), Gf(1), Gf(1)]);
        assert_eq!(depth(&f, &a, &xi).unwrap(), 2);
    }

    #[test]
    fn sextic_slices_over_small_fields() {
        let f3 = GaloisField::new(3).unwrap();
        let s = enumerate_char(&f3, &g2(), 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.formatted(&f3), vec![vec!["2", "1"]]);
        for q in [2, 4] {
            let f = GaloisField::new(q).unwrap();
            assert!(enumerate_char(&f, &g2(), 1, DEFAULT_BUDGET).unwrap().is_empty());
        }
        let f5 = GaloisField::new(5).unwrap();
        assert!(enumerate_char(&f5, &g1(), 1, DEFAULT_BUDGET).unwrap().is_empty());
    }

    #[test]
    fn torsion_scans() {
        let (q, s) = torsion_scan(&g2(), 2, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.formatted(&q), vec![vec!["-1", "1"]]);
        assert!(torsion_scan(&g1(), 2, 1, DEFAULT_BUDGET).unwrap().1.is_empty());
        assert!(torsion_scan(&g2(), 1, 1, DEFAULT_BUDGET).unwrap().1.is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let f = GaloisField::new(101).unwrap();
        match enumerate_char(&f, &g2(), 1, 100) {
            Err(CharVarError::Budget { required, budget }) => {
                assert_eq!((required, budget), (10_000, 100));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn deletion_slices_are_empty() {
        let f3 = GaloisField::new(3).unwrap();
        let (d, emb) = char_of_deletion(&g2(), 1).unwrap();
        assert_eq!(emb.position, 1);
        assert!(enumerate_char(&f3, &d, 1, DEFAULT_BUDGET).unwrap().is_empty());
        let f5 = GaloisField::new(5).unwrap();
        let (d, _) = char_of_deletion(&g1(), 0).unwrap();
        assert!(enumerate_char(&f5, &d, 1, DEFAULT_BUDGET).unwrap().is_empty());
        let single = alexander_matrix(&GroupPresentation::free(&["a"]));
        let (d, _) = char_of_deletion(&single, 0).unwrap();
        assert_eq!(d.nvars(), 0);
        assert!(enumerate_char(&f5, &d, 1, DEFAULT_BUDGET).unwrap().is_empty());
    }

    #[test]
    fn classification_of_the_double_point() {
        let f3 = GaloisField::new(3).unwrap();
        let a = g2();
        let s = enumerate_char(&f3, &a, 1, DEFAULT_BUDGET).unwrap();
        let c = classify(&f3, &a, &s).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].is_coordinate && c[0].is_essential);
        assert_eq!(c[0].vanishing, vec![1]);
        let (yes, w) = has_essential_coordinate(&f3, &a, 1, 1, DEFAULT_BUDGET).unwrap();
        assert!(yes);
        assert_eq!(w[0].values, vec![Gf(2), Gf(1)]);
        assert!(!has_essential_coordinate(&f3, &g1(), 1, 1, DEFAULT_BUDGET).unwrap().0);
        let f2 = GaloisField::new(2).unwrap();
        assert!(!has_essential_coordinate(&f2, &a, 1, 1, DEFAULT_BUDGET).unwrap().0);
    }

    #[test]
    fn non_coordinate_points_are_reported_essential() {
        let a = alexander_matrix(&GroupPresentation::free(&["a", "b"]));
        let f = GaloisField::new(3).unwrap();
        let s = CharSlice {
            field: f.name(),
            k: 1,
            variables: a.variable_names(),
            points: vec![Character::new(vec![Gf(2), Gf(2)])],
            provenance: String::new(),
        };
        let c = classify(&f, &a, &s).unwrap();
        assert!(!c[0].is_coordinate && c[0].is_essential);
    }

    #[test]
    fn fitting_examples() {
        let q = CyclotomicField::rationals();
        let xi = Character::new(vec![q.from_i64(-1), q.one()]);
        assert!(fitting_membership(&q, &g2(), &xi, 1).unwrap());
        assert!(!fitting_membership(&q, &g1(), &xi, 1).unwrap());
        assert!(!fitting_membership(&q, &g2(), &xi, 3).unwrap());
    }

    #[test]
    fn character_order() {
        let f = GaloisField::new(7).unwrap();
        let xi = Character::new(vec![f.from_i64(2), f.from_i64(6)]);
        assert_eq!(xi.order(&f), Some(6));
        let q = CyclotomicField::new(6).unwrap();
        let xi = Character::new(vec![q.zeta(), q.from_i64(-1)]);
        assert_eq!(xi.order(&q), Some(6));
        let xi = Character::new(vec![q.from_i64(2)]);
        assert_eq!(xi.order(&q), None);
    }
}
