//! Free-group words, finite presentations with component-labelled
//! generators, a presentation DSL, and abelianization.
//!
//! Presentation DSL, line oriented, `#` starts a comment and `;` separates
//! statements on one line:
//!
//! ```text
//! gens: e1@conic e2@quartic
//! rel: [e2,e1^2]
//! rel: (e1 e2)^2 = (e2 e1)^2
//! rels: (none)
//! ```
//!
//! Words are products by juxtaposition of generators, `1` (the identity),
//! parenthesised words, commutators `[u,v] = u v u^-1 v^-1` and powers.
//! `u^n` with an integer `n` is a power, `u^v` with a word `v` is the
//! conjugate `v u v^-1`. An equation `u = v` stands for the relator `u v^-1`.
//! A generator listed without `@component` is its own component.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{smith_normal_form, Integers, Mat};

/// A freely reduced word: `(generator, exponent)` letters, exponents nonzero,
/// adjacent generators distinct.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<(usize, i32)>,
}

/// Free reduction of an arbitrary letter sequence.
pub fn reduce(raw: &[(usize, i32)]) -> FreeWord {
    let mut out: Vec<(usize, i32)> = Vec::with_capacity(raw.len());
    for &(g, e) in raw {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    FreeWord { letters: out }
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn gen(g: usize) -> Self {
        FreeWord {
            letters: vec![(g, 1)],
        }
    }

    pub fn from_letters(raw: &[(usize, i32)]) -> Self {
        reduce(raw)
    }

    pub fn letters(&self) -> &[(usize, i32)] {
        &self.letters
    }

    /// Letters expanded to unit exponents.
    pub fn syllables(&self) -> impl Iterator<Item = (usize, i32)> + '_ {
        self.letters
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Length counted with multiplicity.
    pub fn len(&self) -> usize {
        self.letters.iter().map(|l| l.1.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.0).max()
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> Self {
        let mut raw = self.letters.clone();
        raw.extend_from_slice(&other.letters);
        reduce(&raw)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut raw = Vec::new();
        for _ in 0..n.unsigned_abs() {
            raw.extend_from_slice(&base.letters);
        }
        reduce(&raw)
    }

    /// `y self y^-1`.
    pub fn conjugate_by(&self, y: &FreeWord) -> Self {
        y.mul(self).mul(&y.inverse())
    }

    /// `x y x^-1 y^-1`.
    pub fn commutator(x: &FreeWord, y: &FreeWord) -> Self {
        x.mul(y).mul(&x.inverse()).mul(&y.inverse())
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.0 == g)
            .map(|l| l.1 as i64)
            .sum()
    }

    pub fn exponent_vector(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        for &(g, e) in &self.letters {
            v[g] += e as i64;
        }
        v
    }

    /// Image under the homomorphism sending generator `g` to `images[g]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut raw = Vec::new();
        for &(g, e) in &self.letters {
            let img = if e < 0 {
                images[g].inverse()
            } else {
                images[g].clone()
            };
            for _ in 0..e.unsigned_abs() {
                raw.extend_from_slice(&img.letters);
            }
        }
        reduce(&raw)
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    names[g].clone()
                } else {
                    format!("{}^{}", names[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.max_generator().map_or(0, |m| m + 1);
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        f.write_str(&self.format_with(&names))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub component: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: undeclared generator `{name}`")]
    Undeclared { line: usize, col: usize, name: String },
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("relator {relator} references generator index {index}, only {n} declared")]
    OutOfRange { relator: usize, index: usize, n: usize },
    #[error("unknown component `{0}`")]
    UnknownComponent(String),
    #[error("relator {0} does not abelianize to zero on the component lattice")]
    NotMeridian(usize),
}

/// Generators labelled by curve components, with relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<Generator>,
    components: Vec<String>,
    relators: Vec<FreeWord>,
}

impl GroupPresentation {
    /// `generators` are `(name, component name)`; components are numbered in
    /// order of first appearance.
    pub fn new(
        generators: Vec<(String, String)>,
        relators: Vec<FreeWord>,
    ) -> Result<Self, WordError> {
        let mut components: Vec<String> = Vec::new();
        let mut gens = Vec::new();
        for (name, comp) in generators {
            if gens.iter().any(|g: &Generator| g.name == name) {
                return Err(WordError::DuplicateGenerator(name));
            }
            let c = match components.iter().position(|c| *c == comp) {
                Some(c) => c,
                None => {
                    components.push(comp);
                    components.len() - 1
                }
            };
            gens.push(Generator { name, component: c });
        }
        Self::with_components(gens, components, relators)
    }

    /// Explicit component table, allowing components without generators.
    pub fn with_components(
        generators: Vec<Generator>,
        components: Vec<String>,
        relators: Vec<FreeWord>,
    ) -> Result<Self, WordError> {
        let n = generators.len();
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(WordError::DuplicateGenerator(g.name.clone()));
            }
            if g.component >= components.len() {
                return Err(WordError::UnknownComponent(g.component.to_string()));
            }
        }
        for (r, w) in relators.iter().enumerate() {
            if let Some(m) = w.max_generator().filter(|&m| m >= n) {
                return Err(WordError::OutOfRange {
                    relator: r,
                    index: m,
                    n,
                });
            }
        }
        let relators = relators
            .into_iter()
            .map(|w| reduce(w.letters()))
            .collect();
        Ok(GroupPresentation {
            generators,
            components,
            relators,
        })
    }

    /// Free group on the named generators, each its own component.
    pub fn free(names: &[&str]) -> Self {
        let gens = names
            .iter()
            .map(|n| (n.to_string(), n.to_string()))
            .collect();
        GroupPresentation::new(gens, Vec::new()).expect("distinct names")
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn components(&self) -> &[String] {
        &self.components
    }

    pub fn component_index(&self, name: &str) -> Option<usize> {
        self.components.iter().position(|c| c == name)
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn n_gens(&self) -> usize {
        self.generators.len()
    }

    pub fn n_rels(&self) -> usize {
        self.relators.len()
    }

    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, g: usize) -> usize {
        self.generators[g].component
    }

    /// The first generator labelled by component `c`.
    pub fn meridian_of(&self, c: usize) -> Option<usize> {
        self.generators.iter().position(|g| g.component == c)
    }

    /// Image of a word in the component lattice `Z^r`.
    pub fn component_exponents(&self, w: &FreeWord) -> Vec<i64> {
        let mut v = vec![0; self.n_components()];
        for &(g, e) in w.letters() {
            v[self.component_of(g)] += e as i64;
        }
        v
    }

    /// Every relator is trivial on the component lattice.
    pub fn check_meridian(&self) -> Result<(), WordError> {
        for (r, w) in self.relators.iter().enumerate() {
            if self.component_exponents(w).iter().any(|&x| x != 0) {
                return Err(WordError::NotMeridian(r));
            }
        }
        Ok(())
    }

    pub fn is_meridian_presentation(&self) -> bool {
        self.check_meridian().is_ok()
    }

    pub fn with_relator(&self, w: FreeWord) -> Result<Self, WordError> {
        let mut rels = self.relators.clone();
        rels.push(w);
        Self::with_components(self.generators.clone(), self.components.clone(), rels)
    }

    pub fn format_word(&self, w: &FreeWord) -> String {
        w.format_with(&self.generator_names())
    }

    /// Text in the presentation DSL that parses back to `self`.
    pub fn to_dsl(&self) -> String {
        let mut out = String::from("gens:");
        for g in &self.generators {
            out.push_str(&format!(" {}@{}", g.name, self.components[g.component]));
        }
        out.push('\n');
        if self.relators.is_empty() {
            out.push_str("rels: (none)\n");
        }
        for r in &self.relators {
            out.push_str(&format!("rel: {}\n", self.format_word(r)));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// parsing

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(char),
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>, WordError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[s..i].iter().collect()), col));
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = chars[s..i].iter().collect();
            let n = lit.parse().map_err(|_| WordError::Syntax {
                line,
                col,
                msg: format!("integer `{lit}` out of range"),
            })?;
            out.push((Tok::Int(n), col));
        } else if "()[],^=-".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(WordError::Syntax {
                line,
                col,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

/// Resolves identifiers to words; generators for presentations, and the same
/// parser is reused by the braid DSL for conjugator words.
pub(crate) struct WordParser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    lookup: &'a dyn Fn(&str) -> Option<usize>,
}

impl<'a> WordParser<'a> {
    pub(crate) fn new(
        text: &str,
        line: usize,
        col0: usize,
        lookup: &'a dyn Fn(&str) -> Option<usize>,
    ) -> Result<Self, WordError> {
        Ok(WordParser {
            toks: tokenize(text, line, col0)?,
            pos: 0,
            line,
            end_col: col0 + text.chars().count(),
            lookup,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn err(&self, msg: impl Into<String>) -> WordError {
        WordError::Syntax {
            line: self.line,
            col: self.col(),
            msg: msg.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), WordError> {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    /// `word ('=' word)*`, giving one relator per `=`.
    pub(crate) fn relators(mut self) -> Result<Vec<FreeWord>, WordError> {
        let first = self.word()?;
        let mut sides = vec![first];
        while self.peek() == Some(&Tok::Sym('=')) {
            self.pos += 1;
            sides.push(self.word()?);
        }
        if self.pos != self.toks.len() {
            return Err(self.err("unexpected trailing input"));
        }
        if sides.len() == 1 {
            return Ok(sides);
        }
        Ok(sides
            .windows(2)
            .map(|w| w[0].mul(&w[1].inverse()))
            .collect())
    }

    /// A complete single word.
    pub(crate) fn whole_word(mut self) -> Result<FreeWord, WordError> {
        let w = self.word()?;
        if self.pos != self.toks.len() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(w)
    }

    fn word(&mut self) -> Result<FreeWord, WordError> {
        let mut acc = FreeWord::identity();
        let mut any = false;
        while matches!(
            self.peek(),
            Some(Tok::Ident(_)) | Some(Tok::Int(1)) | Some(Tok::Sym('(')) | Some(Tok::Sym('['))
        ) {
            acc = acc.mul(&self.factor()?);
            any = true;
        }
        if !any {
            return Err(self.err("expected a word"));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<FreeWord, WordError> {
        let mut base = self.primary()?;
        while self.peek() == Some(&Tok::Sym('^')) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Sym('-')) => {
                    self.pos += 1;
                    match self.peek() {
                        Some(&Tok::Int(n)) => {
                            self.pos += 1;
                            base = base.pow(-n);
                        }
                        _ => return Err(self.err("expected an integer exponent")),
                    }
                }
                Some(&Tok::Int(n)) => {
                    self.pos += 1;
                    base = base.pow(n);
                }
                _ => {
                    let y = self.primary()?;
                    base = base.conjugate_by(&y);
                }
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<FreeWord, WordError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let g = (self.lookup)(&name).ok_or(WordError::Undeclared {
                    line: self.line,
                    col,
                    name,
                })?;
                Ok(FreeWord::gen(g))
            }
            Some(Tok::Int(1)) => {
                self.pos += 1;
                Ok(FreeWord::identity())
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let x = self.word()?;
                self.expect(',')?;
                let y = self.word()?;
                self.expect(']')?;
                Ok(FreeWord::commutator(&x, &y))
            }
            _ => Err(self.err("expected a generator, `1`, `(` or `[`")),
        }
    }
}

/// Splits text into `(line number, column offset, statement)` triples, with
/// comments removed and `;` separating statements.
pub(crate) fn statements(text: &str) -> Vec<(usize, usize, &str)> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        for part in line.split(';') {
            let lead = part.len() - part.trim_start().len();
            let stmt = part.trim();
            if !stmt.is_empty() {
                out.push((ln + 1, offset + lead + 1, stmt));
            }
            offset += part.len() + 1;
        }
    }
    out
}

pub fn parse_presentation(text: &str) -> Result<GroupPresentation, WordError> {
    let mut gens: Vec<(String, String)> = Vec::new();
    let mut pending: Vec<(usize, usize, &str)> = Vec::new();
    for (line, col, stmt) in statements(text) {
        let Some((key, rest)) = stmt.split_once(':') else {
            return Err(WordError::Syntax {
                line,
                col,
                msg: "expected `gens:`, `rel:` or `rels:`".into(),
            });
        };
        let rest_col = col + key.len() + 1;
        match key.trim() {
            "gens" => {
                for item in rest.split_whitespace() {
                    let (name, comp) = item.split_once('@').unwrap_or((item, item));
                    let valid = |s: &str| {
                        !s.is_empty()
                            && s.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                            && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    };
                    if !valid(name) || comp.is_empty() {
                        return Err(WordError::Syntax {
                            line,
                            col: rest_col,
                            msg: format!("bad generator declaration `{item}`"),
                        });
                    }
                    if gens.iter().any(|g| g.0 == name) {
                        return Err(WordError::DuplicateGenerator(name.to_string()));
                    }
                    gens.push((name.to_string(), comp.to_string()));
                }
            }
            "rel" => pending.push((line, rest_col, rest)),
            "rels" => {
                if rest.trim() == "(none)" {
                    continue;
                }
                // comma separated, commas inside brackets belong to commutators
                let mut depth = 0i32;
                let mut start = 0;
                for (i, ch) in rest.char_indices() {
                    match ch {
                        '[' | '(' => depth += 1,
                        ']' | ')' => depth -= 1,
                        ',' if depth == 0 => {
                            pending.push((line, rest_col + start, &rest[start..i]));
                            start = i + 1;
                        }
                        _ => {}
                    }
                }
                pending.push((line, rest_col + start, &rest[start..]));
            }
            other => {
                return Err(WordError::Syntax {
                    line,
                    col,
                    msg: format!("unknown statement `{other}`"),
                })
            }
        }
    }
    let names: HashMap<String, usize> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| (g.0.clone(), i))
        .collect();
    let lookup = |s: &str| names.get(s).copied();
    let mut relators = Vec::new();
    for (line, col, text) in pending {
        if text.trim().is_empty() {
            return Err(WordError::Syntax {
                line,
                col,
                msg: "empty relator".into(),
            });
        }
        relators.extend(WordParser::new(text, line, col, &lookup)?.relators()?);
    }
    GroupPresentation::new(gens, relators)
}

// ---------------------------------------------------------------------------
// abelianization

/// `H_1 = Z^n / <relator exponent vectors>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianStructure {
    /// Free rank.
    pub rank: usize,
    /// Invariant factors `>= 2`, each dividing the next.
    pub torsion: Vec<BigInt>,
    /// Rows are `H_1` coordinates (torsion coordinates first, then free ones),
    /// columns are generators. Torsion rows are reduced modulo their order.
    pub projection: Mat<BigInt>,
}

impl AbelianStructure {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Coordinates of a word in `H_1`.
    pub fn image(&self, w: &FreeWord) -> Vec<BigInt> {
        let n = self.projection.cols();
        let v = w.exponent_vector(n);
        let mut out = Vec::with_capacity(self.projection.rows());
        for i in 0..self.projection.rows() {
            let mut acc = BigInt::zero();
            for (j, &x) in v.iter().enumerate() {
                acc += self.projection.get(i, j) * BigInt::from(x);
            }
            if let Some(d) = self.torsion.get(i) {
                acc = ((acc % d) + d) % d;
            }
            out.push(acc);
        }
        out
    }
}

/// Relator exponent vectors as the rows of an integer matrix.
pub fn relation_matrix(p: &GroupPresentation) -> Mat<BigInt> {
    let n = p.n_gens();
    Mat::from_rows(
        n,
        p.relators()
            .iter()
            .map(|r| r.exponent_vector(n).into_iter().map(BigInt::from).collect())
            .collect(),
    )
}

pub fn abelianize(p: &GroupPresentation) -> AbelianStructure {
    abelianize_matrix(&relation_matrix(p), p.n_gens())
}

pub(crate) fn abelianize_matrix(rel: &Mat<BigInt>, n: usize) -> AbelianStructure {
    if rel.rows() == 0 {
        let projection = Mat::from_fn(n, n, |i, j| BigInt::from((i == j) as i64));
        return AbelianStructure {
            rank: n,
            torsion: Vec::new(),
            projection,
        };
    }
    let snf = smith_normal_form(&Integers, rel);
    // rows of V are generator coordinates after the base change
    let diag = &snf.diagonal;
    let mut torsion = Vec::new();
    let mut coords = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        let d = d.abs();
        if d.is_zero() {
            coords.push((i, None));
        } else if d > BigInt::from(1) {
            torsion.push(d.clone());
            coords.push((i, Some(d)));
        }
    }
    let free_from = diag.len();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, d) in coords.iter().filter(|c| c.1.is_some()) {
        let d = d.as_ref().expect("torsion coordinate");
        rows.push(
            (0..n)
                .map(|g| ((snf.v.get(g, *i) % d) + d) % d)
                .collect(),
        );
    }
    let mut rank = 0;
    for (i, _) in coords.iter().filter(|c| c.1.is_none()) {
        rows.push((0..n).map(|g| snf.v.get(g, *i).clone()).collect());
        rank += 1;
    }
    for i in free_from..n {
        rows.push((0..n).map(|g| snf.v.get(g, i).clone()).collect());
        rank += 1;
    }
    AbelianStructure {
        rank,
        torsion,
        projection: Mat::from_rows(n, rows),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const G2: &str = "gens: e1@conic e2@quartic\nrel: [e2,e1^2]\nrel: (e1 e2)^2 = (e2 e1)^2\n";

    fn w(letters: &[(usize, i32)]) -> FreeWord {
        FreeWord::from_letters(letters)
    }

    #[test]
    fn reduction_examples() {
        assert!(w(&[(0, 1), (0, -1)]).is_identity());
        assert_eq!(
            w(&[(1, 1), (0, 2), (1, -1), (1, 1), (0, 1)]),
            w(&[(1, 1), (0, 3)])
        );
    }

    #[test]
    fn parses_sextic_group() {
        let p = parse_presentation(G2).unwrap();
        assert_eq!(p.n_gens(), 2);
        assert_eq!(p.n_rels(), 2);
        assert_eq!(p.components(), ["conic", "quartic"]);
        // [e2,e1^2] = e2 e1^2 e2^-1 e1^-2
        assert_eq!(p.relators()[0], w(&[(1, 1), (0, 2), (1, -1), (0, -2)]));
        let a = abelianize(&p);
        assert_eq!(a.rank, 2);
        assert!(a.torsion.is_empty());
    }

    #[test]
    fn free_group_from_dsl() {
        let p = parse_presentation("gens: a; rels: (none)").unwrap();
        assert_eq!(p.n_gens(), 1);
        assert_eq!(p.n_rels(), 0);
        assert_eq!(p.components(), ["a"]);
        let a = abelianize(&p);
        assert_eq!((a.rank, a.torsion.len()), (1, 0));
    }

    #[test]
    fn conjugation_sugar() {
        let p = parse_presentation("gens: x y\nrel: x^y").unwrap();
        assert_eq!(p.relators()[0], w(&[(1, 1), (0, 1), (1, -1)]));
        let p = parse_presentation("gens: x y\nrel: x^(y x)").unwrap();
        assert_eq!(p.relators()[0], w(&[(1, 1), (0, 1), (1, -1)]));
        let p = parse_presentation("gens: x y\nrel: x^-2 y^1").unwrap();
        assert_eq!(p.relators()[0], w(&[(0, -2), (1, 1)]));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_presentation("gens: a b\nrel: a c") {
            Err(WordError::Undeclared { line, col, name }) => {
                assert_eq!((line, col, name.as_str()), (2, 8, "c"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_presentation("gens: a\nrel: (a"),
            Err(WordError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_presentation("gens: a a"),
            Err(WordError::DuplicateGenerator(_))
        ));
    }

    #[test]
    fn torsion_abelianization() {
        let p = parse_presentation("gens: a1@q a3@c\nrel: a3 a1 a3 a1^3").unwrap();
        let a = abelianize(&p);
        assert_eq!(a.rank, 1);
        assert_eq!(a.torsion, vec![BigInt::from(2)]);
        for r in p.relators() {
            assert!(a.image(r).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn dsl_round_trip() {
        let p = parse_presentation(G2).unwrap();
        assert_eq!(parse_presentation(&p.to_dsl()).unwrap(), p);
    }
}
