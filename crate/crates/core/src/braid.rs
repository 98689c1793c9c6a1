//! Braid words, the Artin action on free groups, and Zariski-van Kampen
//! presentations from braid monodromy.
//!
//! Monodromy DSL:
//!
//! ```text
//! strands: 3; labels: a1=quartic a2=quartic a3=conic
//! braid: s2^12
//! braid: s2^6 * s1
//! braid: (s2^4 s1 s2^2) * (s2 s1^2 s2)^-1
//! asymptote 4: conj = a3^(a2 a3 a2 a1)
//! infinity: 4
//! ```
//!
//! `s<i>` is the Artin generator, `*` the conjugation combinator
//! `x * y = x y x^-1` (right associative, lowest precedence). `infinity: j`
//! appends the meridian of the line at infinity built from the conjugator of
//! asymptote `j`; `infinity: word <w>` appends the word `w` verbatim, and
//! `rel: <w>` any extra relator.

use thiserror::Error;

use crate::words::{statements, FreeWord, GroupPresentation, WordError, WordParser};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("braid generator s{index} out of range for {strands} strands")]
    IndexRange { index: usize, strands: usize },
    #[error("the line-at-infinity word is only known for 3 strands; supply it with `infinity: word ...`")]
    InfinityStrands,
    #[error("no asymptote conjugator for braid {0}")]
    NoAsymptote(usize),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A braid on `strands` strands: letters `(i, ±1)` standing for `s_{i+1}^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i32)>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// `s_i^{e}` with `1 <= i < strands`.
    pub fn sigma(strands: usize, i: usize, e: i32) -> Result<Self, BraidError> {
        if i == 0 || i >= strands {
            return Err(BraidError::IndexRange { index: i, strands });
        }
        let s = e.signum();
        Ok(BraidWord {
            strands,
            letters: std::iter::repeat_n((i - 1, s), e.unsigned_abs() as usize).collect(),
        }
        .reduced())
    }

    fn reduced(mut self) -> Self {
        let mut out: Vec<(usize, i32)> = Vec::with_capacity(self.letters.len());
        for l in self.letters {
            match out.last() {
                Some(&(i, e)) if i == l.0 && e == -l.1 => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        self.letters = out;
        self
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Letters as `(index starting at 1, ±1)`.
    pub fn letters(&self) -> Vec<(usize, i32)> {
        self.letters.iter().map(|&(i, e)| (i + 1, e)).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "braids on different strand counts");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
        .reduced()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> BraidWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = BraidWord::identity(self.strands);
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// The combinator `self * tau = self tau self^-1`.
    pub fn star(&self, tau: &BraidWord) -> BraidWord {
        self.mul(tau).mul(&self.inverse())
    }

    pub fn parse(text: &str, strands: usize) -> Result<BraidWord, BraidError> {
        let toks = braid_tokens(text)?;
        let mut p = BraidParser {
            toks,
            pos: 0,
            strands,
        };
        let b = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(BraidError::Syntax {
                line: 0,
                msg: format!("trailing input in braid `{text}`"),
            });
        }
        Ok(b)
    }
}

impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, e)| {
                if e > 0 {
                    format!("s{}", i + 1)
                } else {
                    format!("s{}^-1", i + 1)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum BTok {
    Gen(usize),
    Int(i64),
    Sym(char),
}

fn braid_tokens(text: &str) -> Result<Vec<BTok>, BraidError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |msg: String| BraidError::Syntax { line: 0, msg };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == 's' || c == 'σ' {
            i += 1;
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let idx: usize = chars[s..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| err(format!("expected generator index in `{text}`")))?;
            out.push(BTok::Gen(idx));
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let n = chars[s..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| err("integer out of range".into()))?;
            out.push(BTok::Int(n));
        } else if "()*^-".contains(c) {
            out.push(BTok::Sym(c));
            i += 1;
        } else {
            return Err(err(format!("unexpected character `{c}` in braid")));
        }
    }
    Ok(out)
}

struct BraidParser {
    toks: Vec<BTok>,
    pos: usize,
    strands: usize,
}

impl BraidParser {
    fn err(&self, msg: &str) -> BraidError {
        BraidError::Syntax {
            line: 0,
            msg: format!("{msg} at token {}", self.pos + 1),
        }
    }

    fn expr(&mut self) -> Result<BraidWord, BraidError> {
        let lhs = self.product()?;
        if self.toks.get(self.pos) == Some(&BTok::Sym('*')) {
            self.pos += 1;
            let rhs = self.expr()?;
            return Ok(lhs.star(&rhs));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<BraidWord, BraidError> {
        let mut acc = BraidWord::identity(self.strands);
        let mut any = false;
        while matches!(
            self.toks.get(self.pos),
            Some(BTok::Gen(_)) | Some(BTok::Sym('(')) | Some(BTok::Int(1))
        ) {
            acc = acc.mul(&self.factor()?);
            any = true;
        }
        if !any {
            return Err(self.err("expected a braid"));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BraidWord, BraidError> {
        let mut base = match self.toks.get(self.pos).cloned() {
            Some(BTok::Gen(i)) => {
                self.pos += 1;
                BraidWord::sigma(self.strands, i, 1)?
            }
            Some(BTok::Int(1)) => {
                self.pos += 1;
                BraidWord::identity(self.strands)
            }
            Some(BTok::Sym('(')) => {
                self.pos += 1;
                let b = self.expr()?;
                if self.toks.get(self.pos) != Some(&BTok::Sym(')')) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                b
            }
            _ => return Err(self.err("expected `s<i>`, `1` or `(`")),
        };
        while self.toks.get(self.pos) == Some(&BTok::Sym('^')) {
            self.pos += 1;
            let neg = self.toks.get(self.pos) == Some(&BTok::Sym('-'));
            if neg {
                self.pos += 1;
            }
            match self.toks.get(self.pos) {
                Some(&BTok::Int(n)) => {
                    self.pos += 1;
                    base = base.pow(if neg { -n } else { n });
                }
                _ => return Err(self.err("expected an integer exponent")),
            }
        }
        Ok(base)
    }
}

/// Which automorphism `s_i` induces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ArtinConvention {
    /// `a_i -> a_i a_{i+1} a_i^-1`, `a_{i+1} -> a_i`.
    #[default]
    Standard,
    /// The inverse automorphism: `a_i -> a_{i+1}`,
    /// `a_{i+1} -> a_{i+1}^-1 a_i a_{i+1}`.
    Mirrored,
}

/// Images of the free generators under one letter `s_{i+1}^e`.
fn letter_images(n: usize, i: usize, e: i32, conv: ArtinConvention) -> Vec<FreeWord> {
    let mut img: Vec<FreeWord> = (0..n).map(FreeWord::gen).collect();
    let positive = (e > 0) == (conv == ArtinConvention::Standard);
    let (a, b) = (FreeWord::gen(i), FreeWord::gen(i + 1));
    if positive {
        img[i] = a.mul(&b).mul(&a.inverse());
        img[i + 1] = a;
    } else {
        img[i] = b.clone();
        img[i + 1] = b.inverse().mul(&a).mul(&b);
    }
    img
}

/// `w^beta`: the letters of `beta` act one after the other, leftmost first.
pub fn braid_act(beta: &BraidWord, w: &FreeWord, conv: ArtinConvention) -> FreeWord {
    let mut out = w.clone();
    for &(i, e) in &beta.letters {
        out = out.substitute(&letter_images(beta.strands, i, e, conv));
    }
    out
}

/// How the line at infinity enters the presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfinityRelator {
    /// `(b_j a2 a1 a3 a2 a1)^-1` for the conjugator of asymptote `j`.
    FromAsymptote(usize),
    /// A word given explicitly.
    Word(FreeWord),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyData {
    pub strands: usize,
    /// Component of each strand.
    pub labels: Vec<String>,
    pub braids: Vec<BraidWord>,
    /// `(braid number starting at 1, conjugator b)`.
    pub asymptotes: Vec<(usize, FreeWord)>,
    pub infinity: Option<InfinityRelator>,
    pub extra: Vec<FreeWord>,
}

impl MonodromyData {
    pub fn generator_names(&self) -> Vec<String> {
        (1..=self.strands).map(|i| format!("a{i}")).collect()
    }

    pub fn conjugator(&self, braid: usize) -> Option<&FreeWord> {
        self.asymptotes.iter().find(|a| a.0 == braid).map(|a| &a.1)
    }
}

pub fn parse_monodromy(text: &str) -> Result<MonodromyData, BraidError> {
    let mut strands = None;
    let mut labels: Option<Vec<String>> = None;
    let mut braids = Vec::new();
    let mut asymptotes = Vec::new();
    let mut infinity = None;
    let mut extra = Vec::new();
    let syntax = |line: usize, msg: String| BraidError::Syntax { line, msg };
    for (line, col, stmt) in statements(text) {
        let (key, rest) = stmt
            .split_once(':')
            .ok_or_else(|| syntax(line, format!("expected `key: value`, got `{stmt}`")))?;
        let key = key.trim();
        let rest_col = col + key.len() + 1;
        let n = || strands.ok_or_else(|| syntax(line, "`strands:` must come first".into()));
        let lookup_names = |n: usize| -> Vec<String> { (1..=n).map(|i| format!("a{i}")).collect() };
        if key == "strands" {
            let s: usize = rest
                .trim()
                .parse()
                .map_err(|_| syntax(line, format!("bad strand count `{}`", rest.trim())))?;
            if s < 1 {
                return Err(syntax(line, "need at least one strand".into()));
            }
            strands = Some(s);
        } else if key == "labels" {
            let n = n()?;
            let mut l: Vec<Option<String>> = vec![None; n];
            for item in rest.split_whitespace() {
                let (g, c) = item
                    .split_once('=')
                    .ok_or_else(|| syntax(line, format!("expected `a<i>=component`, got `{item}`")))?;
                let idx = g
                    .strip_prefix('a')
                    .and_then(|x| x.parse::<usize>().ok())
                    .filter(|&i| i >= 1 && i <= n)
                    .ok_or_else(|| syntax(line, format!("bad strand `{g}`")))?;
                l[idx - 1] = Some(c.to_string());
            }
            labels = Some(
                l.into_iter()
                    .enumerate()
                    .map(|(i, c)| c.unwrap_or_else(|| format!("a{}", i + 1)))
                    .collect(),
            );
        } else if key == "braid" {
            let b = BraidWord::parse(rest, n()?).map_err(|e| match e {
                BraidError::Syntax { msg, .. } => BraidError::Syntax { line, msg },
                other => other,
            })?;
            braids.push(b);
        } else if let Some(idx) = key.strip_prefix("asymptote") {
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|_| syntax(line, format!("bad asymptote index in `{key}`")))?;
            let body = rest.trim_start();
            let word = body
                .strip_prefix("conj")
                .map(str::trim_start)
                .and_then(|b| b.strip_prefix('='))
                .ok_or_else(|| syntax(line, "expected `conj = <word>`".into()))?;
            let names = lookup_names(n()?);
            let lookup = |s: &str| names.iter().position(|x| x == s);
            let offset = rest_col + (rest.len() - word.len());
            asymptotes.push((idx, WordParser::new(word, line, offset, &lookup)?.whole_word()?));
        } else if key == "infinity" {
            let body = rest.trim();
            if let Some(w) = body.strip_prefix("word") {
                let names = lookup_names(n()?);
                let lookup = |s: &str| names.iter().position(|x| x == s);
                let offset = rest_col + (rest.len() - w.len());
                infinity = Some(InfinityRelator::Word(
                    WordParser::new(w, line, offset, &lookup)?.whole_word()?,
                ));
            } else {
                let j = body
                    .parse()
                    .map_err(|_| syntax(line, format!("bad infinity spec `{body}`")))?;
                infinity = Some(InfinityRelator::FromAsymptote(j));
            }
        } else if key == "rel" {
            let names = lookup_names(n()?);
            let lookup = |s: &str| names.iter().position(|x| x == s);
            extra.extend(WordParser::new(rest, line, rest_col, &lookup)?.relators()?);
        } else {
            return Err(syntax(line, format!("unknown key `{key}`")));
        }
    }
    let strands = strands.ok_or_else(|| syntax(0, "missing `strands:`".into()))?;
    let labels = labels.unwrap_or_else(|| (1..=strands).map(|i| format!("a{i}")).collect());
    Ok(MonodromyData {
        strands,
        labels,
        braids,
        asymptotes,
        infinity,
        extra,
    })
}

/// `(b_j a2 a1 a3 a2 a1)^-1`, or the user-supplied word.
pub fn infinity_meridian(m: &MonodromyData, spec: &InfinityRelator) -> Result<FreeWord, BraidError> {
    match spec {
        InfinityRelator::Word(w) => Ok(w.clone()),
        InfinityRelator::FromAsymptote(j) => {
            if m.strands != 3 {
                return Err(BraidError::InfinityStrands);
            }
            let b = m.conjugator(*j).ok_or(BraidError::NoAsymptote(*j))?;
            let tail = FreeWord::from_letters(&[(1, 1), (0, 1), (2, 1), (1, 1), (0, 1)]);
            Ok(b.mul(&tail).inverse())
        }
    }
}

/// Relators `a_j^-1 a_j^tau` for every braid, `(a_j^b)^-1 a_j^tau` with
/// `a_j^b = b a_j b^-1` at asymptotes, then the line at infinity and extras.
pub fn zvk_presentation(m: &MonodromyData, conv: ArtinConvention) -> Result<GroupPresentation, BraidError> {
    let n = m.strands;
    let mut relators = Vec::new();
    for (k, tau) in m.braids.iter().enumerate() {
        let conj = m.conjugator(k + 1);
        for j in 0..n {
            let a = FreeWord::gen(j);
            let lhs = match conj {
                Some(b) => a.conjugate_by(b),
                None => a.clone(),
            };
            let r = lhs.inverse().mul(&braid_act(tau, &a, conv));
            if !r.is_identity() {
                relators.push(r);
            }
        }
    }
    if let Some(spec) = &m.infinity {
        relators.push(infinity_meridian(m, spec)?);
    }
    relators.extend(m.extra.iter().cloned());
    let gens = m
        .generator_names()
        .into_iter()
        .zip(m.labels.iter().cloned())
        .collect();
    Ok(GroupPresentation::new(gens, relators)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[(usize, i32)]) -> FreeWord {
        FreeWord::from_letters(l)
    }

    #[test]
    fn product_is_fixed() {
        let prod = w(&[(0, 1), (1, 1), (2, 1)]);
        for conv in [ArtinConvention::Standard, ArtinConvention::Mirrored] {
            for i in 1..3 {
                for e in [1, -1] {
                    let b = BraidWord::sigma(3, i, e).unwrap();
                    assert_eq!(braid_act(&b, &prod, conv), prod);
                }
            }
        }
    }

    #[test]
    fn mirrored_is_inverse() {
        let s = BraidWord::sigma(3, 1, 1).unwrap();
        let x = w(&[(0, 2), (2, -1), (1, 1)]);
        let y = braid_act(&s, &x, ArtinConvention::Standard);
        assert_eq!(braid_act(&s, &y, ArtinConvention::Mirrored), x);
        assert_eq!(braid_act(&s.inverse(), &y, ArtinConvention::Standard), x);
    }

    #[test]
    fn standard_images() {
        let s = BraidWord::sigma(3, 1, 1).unwrap();
        let c = ArtinConvention::Standard;
        assert_eq!(braid_act(&s, &FreeWord::gen(0), c), w(&[(0, 1), (1, 1), (0, -1)]));
        assert_eq!(braid_act(&s, &FreeWord::gen(1), c), FreeWord::gen(0));
        assert_eq!(braid_act(&s, &FreeWord::gen(2), c), FreeWord::gen(2));
    }

    #[test]
    fn braid_parsing() {
        let b = BraidWord::parse("s2^6 * s1", 3).unwrap();
        let s1 = BraidWord::sigma(3, 1, 1).unwrap();
        let s2 = BraidWord::sigma(3, 2, 1).unwrap();
        assert_eq!(b, s2.pow(6).star(&s1));
        let b = BraidWord::parse("(s2^4 s1 s2^2) * (s2 s1^2 s2)^-1", 3).unwrap();
        let x = s2.pow(4).mul(&s1).mul(&s2.pow(2));
        let y = s2.mul(&s1.pow(2)).mul(&s2).inverse();
        assert_eq!(b, x.star(&y));
        assert!(BraidWord::parse("s3", 3).is_err());
        assert!(BraidWord::parse("s1 ^", 3).is_err());
    }

    #[test]
    fn empty_monodromy_gives_free_group() {
        let m = parse_monodromy("strands: 3").unwrap();
        let p = zvk_presentation(&m, ArtinConvention::Standard).unwrap();
        assert_eq!((p.n_gens(), p.n_rels()), (3, 0));
    }

    #[test]
    fn monodromy_file() {
        let text = "strands: 3; labels: a1=quartic a2=quartic a3=conic\n\
                    braid: s2^12\nbraid: s2^6 * s1\n\
                    asymptote 2: conj = a3^(a2 a3 a2 a1)\ninfinity: 2\n";
        let m = parse_monodromy(text).unwrap();
        assert_eq!(m.braids.len(), 2);
        let b = m.conjugator(2).unwrap();
        let c = w(&[(1, 1), (2, 1), (1, 1), (0, 1)]);
        assert_eq!(*b, FreeWord::gen(2).conjugate_by(&c));
        let inf = infinity_meridian(&m, &InfinityRelator::FromAsymptote(2)).unwrap();
        let tail = w(&[(1, 1), (0, 1), (2, 1), (1, 1), (0, 1)]);
        assert_eq!(inf, b.mul(&tail).inverse());
        let p = zvk_presentation(&m, ArtinConvention::Standard).unwrap();
        assert_eq!(p.components(), ["quartic", "conic"]);
        let own = FreeWord::gen(0);
        assert_eq!(infinity_meridian(&m, &InfinityRelator::Word(own.clone())).unwrap(), own);
        let m4 = parse_monodromy("strands: 4\ninfinity: 1").unwrap();
        assert!(matches!(
            zvk_presentation(&m4, ArtinConvention::Standard),
            Err(BraidError::InfinityStrands)
        ));
    }
}
