//! Finite abelian covers: their characters, Sakuma's Betti-number sums, and a
//! Reidemeister-Schreier presentation of the kernel as an independent check.
//!
//! Cover DSL:
//!
//! ```text
//! cover: Z/2 ; map: conic -> 1, quartic -> 0
//! cover: Z/2 x Z/2 ; map: conic -> (1,0), quartic -> (0,1)
//! ```
//!
//! and the shorthand `conic:Z/2` (listed components go to the generator,
//! all others to 0). Components not mentioned map to 0.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{CyclotomicField, Field};
use crate::charvar::{depth, CharVarError, Character};
use crate::fox::{alexander_matrix, delete_component, AlexMatrix};
use crate::words::{abelianize, FreeWord, Generator, GroupPresentation, WordError};

pub const DEFAULT_INDEX_BOUND: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("cover syntax: {0}")]
    Syntax(String),
    #[error("invariant factors must be at least 2 and each divide the next: {0:?}")]
    BadTarget(Vec<u64>),
    #[error("unknown component `{0}` in cover map")]
    UnknownComponent(String),
    #[error("image of `{component}` has {got} coordinates, target has {expected}")]
    ImageArity { component: String, expected: usize, got: usize },
    #[error("cover map is not surjective")]
    NotSurjective,
    #[error("cover map does not kill relator {0}")]
    NotHomomorphism(usize),
    #[error("{field} lacks roots of unity of order {order}")]
    MissingRoots { field: String, order: u64 },
    #[error("index {index} exceeds the bound {bound}")]
    IndexBound { index: u64, bound: u64 },
    #[error(transparent)]
    CharVar(#[from] CharVarError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A surjection from the component lattice onto `Z/n_1 x ... x Z/n_s`,
/// components given by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSpec {
    pub target: Vec<u64>,
    pub images: Vec<(String, Vec<i64>)>,
}

impl CoverSpec {
    pub fn cyclic(n: u64, images: &[(&str, i64)]) -> Self {
        CoverSpec {
            target: vec![n],
            images: images.iter().map(|(c, a)| (c.to_string(), vec![*a])).collect(),
        }
    }

    pub fn trivial() -> Self {
        CoverSpec {
            target: Vec::new(),
            images: Vec::new(),
        }
    }

    pub fn order(&self) -> u64 {
        self.target.iter().product()
    }

    /// Exponent of the target group.
    pub fn exponent(&self) -> u64 {
        self.target.last().copied().unwrap_or(1)
    }

    /// Checks against `p` and returns one image per component.
    pub fn resolve(&self, p: &GroupPresentation) -> Result<ResolvedCover, CoverError> {
        check_target(&self.target)?;
        let s = self.target.len();
        let mut images = vec![vec![0i64; s]; p.n_components()];
        for (name, img) in &self.images {
            let c = p
                .component_index(name)
                .ok_or_else(|| CoverError::UnknownComponent(name.clone()))?;
            if img.len() != s {
                return Err(CoverError::ImageArity {
                    component: name.clone(),
                    expected: s,
                    got: img.len(),
                });
            }
            images[c] = img
                .iter()
                .zip(&self.target)
                .map(|(&a, &n)| a.rem_euclid(n as i64))
                .collect();
        }
        let cover = ResolvedCover {
            target: self.target.clone(),
            images,
        };
        for (r, w) in p.relators().iter().enumerate() {
            let v = cover.image_of_exponents(&p.component_exponents(w));
            if v.iter().any(|&x| x != 0) {
                return Err(CoverError::NotHomomorphism(r));
            }
        }
        if cover.generated_subgroup_order() != self.order() {
            return Err(CoverError::NotSurjective);
        }
        Ok(cover)
    }
}

fn check_target(t: &[u64]) -> Result<(), CoverError> {
    let chain = t.windows(2).all(|w| w[1] % w[0] == 0);
    if t.iter().any(|&n| n < 2) || !chain {
        return Err(CoverError::BadTarget(t.to_vec()));
    }
    Ok(())
}

fn parse_target(s: &str) -> Result<Vec<u64>, CoverError> {
    let s = s.trim();
    if s == "1" || s == "0" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(['x', '+', '×'])
        .map(|f| {
            let f = f.trim();
            f.strip_prefix("Z/")
                .and_then(|n| n.trim().parse().ok())
                .ok_or_else(|| CoverError::Syntax(format!("bad cyclic factor `{f}`")))
        })
        .collect()
}

fn parse_image(s: &str) -> Result<Vec<i64>, CoverError> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(s);
    inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| CoverError::Syntax(format!("bad image `{s}`")))
        })
        .collect()
}

impl FromStr for CoverSpec {
    type Err = CoverError;

    fn from_str(text: &str) -> Result<Self, CoverError> {
        let text = text.trim();
        if !text.contains("cover:") {
            // shorthand comp[,comp...]:Z/n
            let (comps, target) = text
                .rsplit_once(':')
                .ok_or_else(|| CoverError::Syntax(format!("expected `comp:Z/n`, got `{text}`")))?;
            let target = parse_target(target)?;
            if target.len() != 1 {
                return Err(CoverError::Syntax("shorthand takes one cyclic factor".into()));
            }
            let images = comps
                .split(',')
                .map(|c| (c.trim().to_string(), vec![1]))
                .collect();
            return Ok(CoverSpec { target, images });
        }
        let mut target = None;
        let mut images = Vec::new();
        let mut depth = 0i32;
        let mut stmts = Vec::new();
        let mut cur = String::new();
        for ch in text.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                ';' | '\n' if depth == 0 => {
                    stmts.push(std::mem::take(&mut cur));
                    continue;
                }
                _ => {}
            }
            cur.push(ch);
        }
        stmts.push(cur);
        for stmt in stmts {
            let stmt = stmt.split('#').next().unwrap_or("").trim();
            if stmt.is_empty() {
                continue;
            }
            let (key, rest) = stmt
                .split_once(':')
                .ok_or_else(|| CoverError::Syntax(format!("bad statement `{stmt}`")))?;
            match key.trim() {
                "cover" => target = Some(parse_target(rest)?),
                "map" => {
                    let mut depth = 0i32;
                    let mut start = 0;
                    let mut items = Vec::new();
                    for (i, ch) in rest.char_indices() {
                        match ch {
                            '(' => depth += 1,
                            ')' => depth -= 1,
                            ',' if depth == 0 => {
                                items.push(&rest[start..i]);
                                start = i + 1;
                            }
                            _ => {}
                        }
                    }
                    items.push(&rest[start..]);
                    for item in items.into_iter().filter(|i| !i.trim().is_empty()) {
                        let (c, img) = item
                            .split_once("->")
                            .ok_or_else(|| CoverError::Syntax(format!("expected `comp -> image` in `{item}`")))?;
                        images.push((c.trim().to_string(), parse_image(img)?));
                    }
                }
                other => return Err(CoverError::Syntax(format!("unknown key `{other}`"))),
            }
        }
        let target = target.ok_or_else(|| CoverError::Syntax("missing `cover:`".into()))?;
        Ok(CoverSpec { target, images })
    }
}

impl fmt::Display for CoverSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.target.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "cover: {}", if t.is_empty() { "1".into() } else { t.join(" x ") })?;
        let m: Vec<String> = self
            .images
            .iter()
            .map(|(c, v)| {
                let v: Vec<String> = v.iter().map(i64::to_string).collect();
                if v.len() == 1 {
                    format!("{c} -> {}", v[0])
                } else {
                    format!("{c} -> ({})", v.join(","))
                }
            })
            .collect();
        write!(f, " ; map: {}", m.join(", "))
    }
}

/// A cover checked against a presentation: one target image per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedCover {
    pub target: Vec<u64>,
    pub images: Vec<Vec<i64>>,
}

impl ResolvedCover {
    pub fn order(&self) -> u64 {
        self.target.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.target.last().copied().unwrap_or(1)
    }

    fn image_of_exponents(&self, v: &[i64]) -> Vec<i64> {
        self.target
            .iter()
            .enumerate()
            .map(|(j, &n)| {
                v.iter()
                    .zip(&self.images)
                    .map(|(&e, img)| e * img[j])
                    .sum::<i64>()
                    .rem_euclid(n as i64)
            })
            .collect()
    }

    /// Mixed-radix code of a target element.
    pub fn encode(&self, x: &[i64]) -> usize {
        x.iter()
            .zip(&self.target)
            .fold(0usize, |acc, (&a, &n)| acc * n as usize + a as usize)
    }

    pub fn decode(&self, mut code: usize) -> Vec<i64> {
        let mut out = vec![0; self.target.len()];
        for (j, &n) in self.target.iter().enumerate().rev() {
            out[j] = (code % n as usize) as i64;
            code /= n as usize;
        }
        out
    }

    fn add(&self, x: &[i64], y: &[i64], sign: i64) -> Vec<i64> {
        x.iter()
            .zip(y)
            .zip(&self.target)
            .map(|((&a, &b), &n)| (a + sign * b).rem_euclid(n as i64))
            .collect()
    }

    fn generated_subgroup_order(&self) -> u64 {
        let n = self.order() as usize;
        let mut seen = vec![false; n];
        let zero = vec![0; self.target.len()];
        seen[self.encode(&zero)] = true;
        let mut queue = VecDeque::from([zero]);
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for img in &self.images {
                let y = self.add(&x, img, 1);
                let code = self.encode(&y);
                if !seen[code] {
                    seen[code] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count
    }

    /// Dual elements `a` of the target in lexicographic order; the character
    /// sends component `c` to `zeta_e^(sum_j a_j m_jc e/n_j)`.
    pub fn character_exponents(&self) -> Vec<Vec<i64>> {
        let e = self.exponent() as i64;
        (0..self.order() as usize)
            .map(|code| {
                let a = self.decode(code);
                self.images
                    .iter()
                    .map(|img| {
                        a.iter()
                            .zip(img)
                            .zip(&self.target)
                            .map(|((&aj, &m), &n)| aj * m * (e / n as i64))
                            .sum::<i64>()
                            .rem_euclid(e)
                    })
                    .collect()
            })
            .collect()
    }
}

/// Characters of the torus factoring through the cover, trivial one first,
/// with a flag marking it.
pub fn cover_characters<F: Field>(
    field: &F,
    cover: &ResolvedCover,
) -> Result<Vec<(Character<F::Elem>, bool)>, CoverError> {
    let e = cover.exponent();
    let zeta = field
        .primitive_root_of_unity(e)
        .ok_or_else(|| CoverError::MissingRoots {
            field: field.name(),
            order: e,
        })?;
    Ok(cover
        .character_exponents()
        .into_iter()
        .map(|ex| {
            let trivial = ex.iter().all(|&x| x == 0);
            let values = ex.iter().map(|&x| field.pow(&zeta, x)).collect();
            (Character::new(values), trivial)
        })
        .collect())
}

/// Result of a Sakuma sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SakumaReport {
    pub b1: usize,
    /// `b1` of the base (rank of `H_1`) for the unbranched formula, 0 for the
    /// branched one.
    pub base: usize,
    pub field: String,
    /// `(character, components deleted, depth)` for each non-trivial
    /// character.
    pub per_character: Vec<(Vec<String>, Vec<String>, usize)>,
}

/// `b1` of the unbranched cover: `rank H_1 + sum of depths` over the
/// non-trivial cover characters.
pub fn b1_unbranched(p: &GroupPresentation, spec: &CoverSpec) -> Result<SakumaReport, CoverError> {
    let cover = spec.resolve(p)?;
    let field = CyclotomicField::new(cover.exponent())?;
    let a = alexander_matrix(p);
    let base = a.abelian().rank;
    let mut per_character = Vec::new();
    let mut sum = 0;
    for (xi, trivial) in cover_characters(&field, &cover)? {
        if trivial {
            continue;
        }
        let d = depth(&field, &a, &xi)?;
        sum += d;
        per_character.push((xi.format(&field), Vec::new(), d));
    }
    Ok(SakumaReport {
        b1: base + sum,
        base,
        field: field.name(),
        per_character,
    })
}

impl From<crate::algebra::AlgebraError> for CoverError {
    fn from(e: crate::algebra::AlgebraError) -> Self {
        CoverError::CharVar(e.into())
    }
}

impl From<crate::fox::FoxError> for CoverError {
    fn from(e: crate::fox::FoxError) -> Self {
        CoverError::CharVar(e.into())
    }
}

/// Iterated deletion of the components on which `xi` is trivial; returns the
/// matrix and `xi` restricted to the survivors.
pub fn restrict_to_support<F: Field>(
    field: &F,
    a: &AlexMatrix,
    xi: &Character<F::Elem>,
) -> Result<(AlexMatrix, Character<F::Elem>), CoverError> {
    let trivial: Vec<usize> = xi
        .trivial_coordinates(field)
        .into_iter()
        .map(|v| a.variables()[v])
        .collect();
    let mut m = a.clone();
    for c in trivial {
        m = delete_component(&m, c)?;
    }
    let values = m
        .variables()
        .iter()
        .map(|&c| xi.values[a.variable_of_component(c).expect("surviving variable")].clone())
        .collect();
    Ok((m, Character::new(values)))
}

/// `b1` of the branched cover: the sum over non-trivial characters of the
/// depth on the curve made of the components where the character is
/// non-trivial.
pub fn b1_branched(p: &GroupPresentation, spec: &CoverSpec) -> Result<SakumaReport, CoverError> {
    let cover = spec.resolve(p)?;
    let field = CyclotomicField::new(cover.exponent())?;
    let a = alexander_matrix(p);
    let mut per_character = Vec::new();
    let mut sum = 0;
    for (xi, trivial) in cover_characters(&field, &cover)? {
        if trivial {
            continue;
        }
        let (m, restricted) = restrict_to_support(&field, &a, &xi)?;
        let d = depth(&field, &m, &restricted)?;
        sum += d;
        let deleted = m
            .deleted()
            .iter()
            .map(|&c| p.components()[c].clone())
            .collect();
        per_character.push((xi.format(&field), deleted, d));
    }
    Ok(SakumaReport {
        b1: sum,
        base: 0,
        field: field.name(),
        per_character,
    })
}

/// How coset representatives are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transversal {
    /// Breadth first over the coset graph, generators in order.
    BreadthFirst,
    /// Depth first over the coset graph, generators in order.
    DepthFirst,
}

/// Presentation of the kernel of the cover map.
#[derive(Clone, Debug)]
pub struct SubgroupPresentation {
    pub presentation: GroupPresentation,
    /// Coset representatives, words in the original generators, indexed by
    /// the mixed-radix code of the coset.
    pub transversal: Vec<FreeWord>,
    pub index: usize,
    /// Number of Schreier generators, `index * n - index + 1`.
    pub schreier_generators: usize,
}

pub fn rs_subgroup(
    p: &GroupPresentation,
    spec: &CoverSpec,
    how: Transversal,
    index_bound: u64,
) -> Result<SubgroupPresentation, CoverError> {
    let cover = spec.resolve(p)?;
    let index = cover.order();
    if index > index_bound {
        return Err(CoverError::IndexBound {
            index,
            bound: index_bound,
        });
    }
    let index = index as usize;
    let n = p.n_gens();
    let step: Vec<Vec<i64>> = (0..n).map(|g| cover.images[p.component_of(g)].clone()).collect();
    let act: Vec<Vec<usize>> = (0..index)
        .map(|c| {
            let x = cover.decode(c);
            (0..n).map(|g| cover.encode(&cover.add(&x, &step[g], 1))).collect()
        })
        .collect();

    // spanning tree of the coset graph
    let mut rep: Vec<Option<FreeWord>> = vec![None; index];
    let mut tree = vec![vec![false; n]; index];
    rep[0] = Some(FreeWord::identity());
    match how {
        Transversal::BreadthFirst => {
            let mut queue = VecDeque::from([0usize]);
            while let Some(c) = queue.pop_front() {
                for g in 0..n {
                    let d = act[c][g];
                    if rep[d].is_none() {
                        rep[d] = Some(rep[c].as_ref().expect("visited").mul(&FreeWord::gen(g)));
                        tree[c][g] = true;
                        queue.push_back(d);
                    }
                }
            }
        }
        Transversal::DepthFirst => {
            fn visit(
                c: usize,
                act: &[Vec<usize>],
                rep: &mut [Option<FreeWord>],
                tree: &mut [Vec<bool>],
            ) {
                for g in 0..act[c].len() {
                    let d = act[c][g];
                    if rep[d].is_none() {
                        rep[d] = Some(rep[c].as_ref().expect("visited").mul(&FreeWord::gen(g)));
                        tree[c][g] = true;
                        visit(d, act, rep, tree);
                    }
                }
            }
            visit(0, &act, &mut rep, &mut tree);
        }
    }
    let transversal: Vec<FreeWord> = rep
        .into_iter()
        .map(|r| r.expect("surjective cover map reaches every coset"))
        .collect();

    // Schreier generators s_{c,g} = u_c g u_{cg}^-1 off the tree
    let mut sgen = vec![vec![None; n]; index];
    let mut gens = Vec::new();
    let orig = p.generators();
    for c in 0..index {
        for g in 0..n {
            if !tree[c][g] {
                sgen[c][g] = Some(gens.len());
                gens.push(Generator {
                    name: format!("{}_{}", orig[g].name, c),
                    component: orig[g].component,
                });
            }
        }
    }
    let mut relators = Vec::new();
    for start in 0..index {
        for r in p.relators() {
            let mut c = start;
            let mut raw = Vec::new();
            for (g, s) in r.syllables() {
                if s > 0 {
                    if let Some(k) = sgen[c][g] {
                        raw.push((k, 1));
                    }
                    c = act[c][g];
                } else {
                    let prev = (0..index).find(|&d| act[d][g] == c).expect("permutation");
                    if let Some(k) = sgen[prev][g] {
                        raw.push((k, -1));
                    }
                    c = prev;
                }
            }
            debug_assert_eq!(c, start, "relators lie in the kernel");
            let w = FreeWord::from_letters(&raw);
            if !w.is_identity() {
                relators.push(w);
            }
        }
    }
    let schreier_generators = gens.len();
    let presentation = GroupPresentation::with_components(gens, p.components().to_vec(), relators)?;
    Ok(SubgroupPresentation {
        presentation,
        transversal,
        index,
        schreier_generators,
    })
}

/// `(betti number, torsion invariant factors)` of the subgroup.
pub fn abelianization_invariants(sp: &SubgroupPresentation) -> (usize, Vec<BigInt>) {
    let a = abelianize(&sp.presentation);
    (a.rank, a.torsion)
}
