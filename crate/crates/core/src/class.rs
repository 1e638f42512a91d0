//! Symbolic function classes.
//!
//! A [`ClassExpr`] is a tree of atoms (value conditions, alternation bounds,
//! structural predicates, range² classes, named clones) combined by union,
//! intersection, outer negation `{¬}K` and duality. Membership is decided by
//! structural recursion.
//!
//! The text syntax is ASCII: `|` for union, `&` for intersection, `~X` for
//! `{¬}X`, `dual(X)`, parentheses, and a suffix `_ab` with `a, b ∈ {0,1,x}`
//! restricting `f(0…0) = a`, `f(1…1) = b`. Examples: `Smaj_01 | C1`,
//! `A<=2_11 | C`, `~Mc`, `F^{0,01}_{01}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boolfn::{BoolFn, R2Set, Rank};
use crate::error::{Error, Result};
use crate::postlattice::CloneId;

/// An elementary class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassAtom {
    /// Constant functions with the given value.
    ConstVal(bool),
    /// `f(0…0) = a`.
    ValueAt0(bool),
    /// `f(1…1) = b`.
    ValueAt1(bool),
    AltExactly(u32),
    AltAtMost(u32),
    Monotone,
    SelfDual,
    Reflexive,
    Smin,
    Smaj,
    Linear,
    /// `f⁻¹(a)` is `a`-separating of the given rank.
    Separating {
        value: bool,
        rank: Rank,
    },
    /// `F^R_{ab}`; `None` leaves the endpoint value free.
    Range2Class {
        r: R2Set,
        a: Option<bool>,
        b: Option<bool>,
    },
    NamedClone(CloneId),
}

/// A class of Boolean functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassExpr {
    All,
    Empty,
    Atom(ClassAtom),
    Union(Vec<ClassExpr>),
    Intersect(Vec<ClassExpr>),
    /// `{¬}K`: outer negations of members.
    NegCompose(Box<ClassExpr>),
    /// `K^d`: duals of members.
    Dual(Box<ClassExpr>),
}

impl ClassAtom {
    pub fn contains(&self, f: &BoolFn) -> bool {
        match *self {
            ClassAtom::ConstVal(a) => f.is_constant() && f.at_zero() == a,
            ClassAtom::ValueAt0(a) => f.at_zero() == a,
            ClassAtom::ValueAt1(b) => f.at_one() == b,
            ClassAtom::AltExactly(k) => f.alt() == k as usize,
            ClassAtom::AltAtMost(k) => f.alt() <= k as usize,
            ClassAtom::Monotone => f.is_monotone(),
            ClassAtom::SelfDual => f.is_self_dual(),
            ClassAtom::Reflexive => f.is_reflexive(),
            ClassAtom::Smin => f.is_smin(),
            ClassAtom::Smaj => f.is_smaj(),
            ClassAtom::Linear => f.is_linear(),
            ClassAtom::Separating { value, rank } => f.is_separating(value, rank),
            ClassAtom::Range2Class { r, a, b } => {
                let sig = f.range2();
                sig.r == r && a.is_none_or(|a| a == sig.a) && b.is_none_or(|b| b == sig.b)
            }
            ClassAtom::NamedClone(c) => c.contains(f),
        }
    }
}

impl ClassExpr {
    pub fn atom(a: ClassAtom) -> Self {
        ClassExpr::Atom(a)
    }

    /// Union, collapsing trivial cases.
    pub fn union(mut parts: Vec<ClassExpr>) -> Self {
        parts.retain(|p| *p != ClassExpr::Empty);
        match parts.len() {
            0 => ClassExpr::Empty,
            1 => parts.pop().unwrap(),
            _ => ClassExpr::Union(parts),
        }
    }

    /// Intersection, collapsing trivial cases.
    pub fn intersect(mut parts: Vec<ClassExpr>) -> Self {
        parts.retain(|p| *p != ClassExpr::All);
        match parts.len() {
            0 => ClassExpr::All,
            1 => parts.pop().unwrap(),
            _ => ClassExpr::Intersect(parts),
        }
    }

    pub fn neg(self) -> Self {
        ClassExpr::NegCompose(Box::new(self))
    }

    pub fn dual(self) -> Self {
        ClassExpr::Dual(Box::new(self))
    }

    pub fn clone_class(c: CloneId) -> Self {
        ClassExpr::Atom(ClassAtom::NamedClone(c))
    }

    /// `Ω_{ab}` with `None` meaning unrestricted.
    pub fn values(a: Option<bool>, b: Option<bool>) -> Self {
        let mut parts = Vec::new();
        if let Some(a) = a {
            parts.push(ClassExpr::Atom(ClassAtom::ValueAt0(a)));
        }
        if let Some(b) = b {
            parts.push(ClassExpr::Atom(ClassAtom::ValueAt1(b)));
        }
        ClassExpr::intersect(parts)
    }

    /// `self ∩ Ω_{ab}`.
    pub fn restrict(self, a: Option<bool>, b: Option<bool>) -> Self {
        let mut parts = vec![self];
        if let ClassExpr::Intersect(v) = ClassExpr::values(a, b) {
            parts.extend(v);
        } else {
            parts.push(ClassExpr::values(a, b));
        }
        ClassExpr::intersect(parts)
    }

    pub fn contains(&self, f: &BoolFn) -> bool {
        match self {
            ClassExpr::All => true,
            ClassExpr::Empty => false,
            ClassExpr::Atom(a) => a.contains(f),
            ClassExpr::Union(v) => v.iter().any(|e| e.contains(f)),
            ClassExpr::Intersect(v) => v.iter().all(|e| e.contains(f)),
            ClassExpr::NegCompose(e) => e.contains(&f.negate()),
            ClassExpr::Dual(e) => e.contains(&f.dual()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser {
            src: text,
            pos: 0,
            depth: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(Error::Parse(format!(
                "unexpected `{}` at offset {} in `{text}`",
                &text[p.pos..],
                p.pos
            )));
        }
        Ok(e)
    }
}

/// `f ∈ e`.
pub fn satisfies(f: &BoolFn, e: &ClassExpr) -> bool {
    e.contains(f)
}

impl FromStr for ClassExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClassExpr::parse(s)
    }
}

// ---------------------------------------------------------------------------
// printing

fn bit(b: bool) -> char {
    if b {
        '1'
    } else {
        '0'
    }
}

fn opt_bit(b: Option<bool>) -> char {
    b.map_or('x', bit)
}

fn atom_name(a: &ClassAtom) -> String {
    match *a {
        ClassAtom::ConstVal(v) => format!("C{}", bit(v)),
        ClassAtom::ValueAt0(v) => format!("Om{}x", bit(v)),
        ClassAtom::ValueAt1(v) => format!("Omx{}", bit(v)),
        ClassAtom::AltExactly(k) => format!("A{k}"),
        ClassAtom::AltAtMost(k) => format!("A<={k}"),
        ClassAtom::Monotone => "Mon".into(),
        ClassAtom::SelfDual => "SelfDual".into(),
        ClassAtom::Reflexive => "Refl".into(),
        ClassAtom::Smin => "Smin".into(),
        ClassAtom::Smaj => "Smaj".into(),
        ClassAtom::Linear => "Lin".into(),
        ClassAtom::Separating { value, rank } => format!("Sep{}r{rank}", bit(value)),
        ClassAtom::Range2Class {
            r,
            a: None,
            b: None,
        } => format!("F^{{{}}}", r.name()),
        ClassAtom::Range2Class { r, a, b } => {
            format!("F^{{{}}}_{{{}{}}}", r.name(), opt_bit(a), opt_bit(b))
        }
        ClassAtom::NamedClone(c) => c.name().to_string(),
    }
}

/// Splits `[X, ValueAt0?, ValueAt1?]` into `X` and the endpoint restriction.
fn as_restriction(v: &[ClassExpr]) -> Option<(Option<&ClassExpr>, Option<bool>, Option<bool>)> {
    let mut rest = v;
    let mut base = None;
    if let Some(first) = rest.first() {
        if !matches!(
            first,
            ClassExpr::Atom(ClassAtom::ValueAt0(_) | ClassAtom::ValueAt1(_))
        ) {
            base = Some(first);
            rest = &rest[1..];
        }
    }
    let mut a = None;
    let mut b = None;
    match rest {
        [ClassExpr::Atom(ClassAtom::ValueAt0(x))] => a = Some(*x),
        [ClassExpr::Atom(ClassAtom::ValueAt1(y))] => b = Some(*y),
        [ClassExpr::Atom(ClassAtom::ValueAt0(x)), ClassExpr::Atom(ClassAtom::ValueAt1(y))] => {
            a = Some(*x);
            b = Some(*y);
        }
        _ => return None,
    }
    if base.is_none() && (a.is_none() || b.is_none()) {
        return None;
    }
    Some((base, a, b))
}

impl ClassExpr {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        // prec: 0 = union context, 1 = intersection operand, 2 = prefix operand
        match self {
            ClassExpr::All => f.write_str("Omega"),
            ClassExpr::Empty => f.write_str("Empty"),
            ClassExpr::Atom(a) => f.write_str(&atom_name(a)),
            ClassExpr::Union(v) => {
                if prec > 0 {
                    f.write_str("(")?;
                }
                for (i, e) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" | ")?;
                    }
                    e.fmt_prec(f, 1)?;
                }
                if prec > 0 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            ClassExpr::Intersect(v) => {
                if let Some((base, a, b)) = as_restriction(v) {
                    match base {
                        None => write!(f, "Om{}{}", opt_bit(a), opt_bit(b)),
                        Some(x) => {
                            x.fmt_prec(f, 3)?;
                            write!(f, "_{}{}", opt_bit(a), opt_bit(b))
                        }
                    }
                } else {
                    if prec > 1 {
                        f.write_str("(")?;
                    }
                    for (i, e) in v.iter().enumerate() {
                        if i > 0 {
                            f.write_str(" & ")?;
                        }
                        e.fmt_prec(f, 2)?;
                    }
                    if prec > 1 {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
            }
            ClassExpr::NegCompose(e) => {
                if prec > 2 {
                    f.write_str("(")?;
                }
                f.write_str("~")?;
                e.fmt_prec(f, 2)?;
                if prec > 2 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            ClassExpr::Dual(e) => {
                f.write_str("dual(")?;
                e.fmt_prec(f, 0)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

// ---------------------------------------------------------------------------
// parsing

/// Abbreviations that expand to class expressions.
const MACROS: &[(&str, &str)] = &[
    ("C", "C0 | C1"),
    ("OX", "Om0x"),
    ("XO", "Omx0"),
    ("IX", "Om1x"),
    ("XI", "Omx1"),
    ("OO", "Om00"),
    ("OI", "Om01"),
    ("IO", "Om10"),
    ("II", "Om11"),
    ("Eq", "Om00 | Om11"),
    ("Neq", "Om01 | Om10"),
    ("Leq", "Om00 | Om01 | Om11"),
    ("Geq", "Om00 | Om10 | Om11"),
    ("NotOm11", "Om00 | Om01 | Om10"),
    ("NotOm00", "Om01 | Om10 | Om11"),
    ("Eiio", "Om00 | Om01 | Om11"),
    ("Eioi", "Om00 | Om10 | Om11"),
    ("Eiii", "Om00 | Om01 | Om10"),
    ("Eioo", "Om01 | Om10 | Om11"),
    ("OXCI", "Om0x | C1"),
    ("XOCI", "Omx0 | C1"),
    ("IXCO", "Om1x | C0"),
    ("XICO", "Omx1 | C0"),
    ("OIC", "Om01 | C0 | C1"),
    ("OICO", "Om01 | C0"),
    ("OICI", "Om01 | C1"),
    ("IOC", "Om10 | C0 | C1"),
    ("IOCO", "Om10 | C0"),
    ("IOCI", "Om10 | C1"),
    ("OOCI", "Om00 | C1"),
    ("IICO", "Om11 | C0"),
    ("SminOX", "Smin_0x"),
    ("SmajIX", "Smaj_1x"),
    ("SminXO", "Smin_x0"),
    ("SmajXI", "Smaj_x1"),
    ("SminOICO", "Smin_01 | C0"),
    ("SmajIOCI", "Smaj_10 | C1"),
    ("SminIOCO", "Smin_10 | C0"),
    ("SmajOICI", "Smaj_01 | C1"),
    ("ReflOOC", "Refl_00 | C0 | C1"),
    ("ReflIIC", "Refl_11 | C0 | C1"),
];

/// Every name accepted as a class atom or abbreviation.
pub fn known_class_names() -> Vec<String> {
    let mut v: Vec<String> = [
        "Omega",
        "Empty",
        "C0",
        "C1",
        "Om0x",
        "Om1x",
        "Omx0",
        "Omx1",
        "Om00",
        "Om01",
        "Om10",
        "Om11",
        "Mon",
        "SelfDual",
        "Refl",
        "Smin",
        "Smaj",
        "Lin",
        "A<k>",
        "A<=<k>",
        "Sep<a>r<m>",
        "F^{R}",
        "F^{R}_{ab}",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    v.extend(MACROS.iter().map(|(n, _)| n.to_string()));
    v.extend(CloneId::inventory().iter().map(|c| c.name().to_string()));
    v
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!(
            "{what} at offset {} in `{}`",
            self.pos, self.src
        )))
    }

    fn expr(&mut self) -> Result<ClassExpr> {
        self.depth += 1;
        if self.depth > 64 {
            return self.err("expression nested too deeply");
        }
        let mut parts = vec![self.term()?];
        while self.eat("|") {
            parts.push(self.term()?);
        }
        self.depth -= 1;
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            ClassExpr::Union(parts)
        })
    }

    fn term(&mut self) -> Result<ClassExpr> {
        let mut parts = vec![self.factor()?];
        while self.eat("&") {
            parts.push(self.factor()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            ClassExpr::Intersect(parts)
        })
    }

    fn factor(&mut self) -> Result<ClassExpr> {
        if self.eat("~") {
            return Ok(ClassExpr::NegCompose(Box::new(self.factor()?)));
        }
        let base = if self.eat("(") {
            let e = self.expr()?;
            if !self.eat(")") {
                return self.err("expected `)`");
            }
            e
        } else if self.eat("dual(") {
            let e = self.expr()?;
            if !self.eat(")") {
                return self.err("expected `)`");
            }
            ClassExpr::Dual(Box::new(e))
        } else {
            self.atom()?
        };
        self.suffix(base)
    }

    /// Optional `_ab` restriction.
    fn suffix(&mut self, mut base: ClassExpr) -> Result<ClassExpr> {
        loop {
            let b = self.rest().as_bytes();
            if b.len() >= 3 && b[0] == b'_' && is_endpoint(b[1]) && is_endpoint(b[2]) {
                let follows = b.get(3).copied();
                if follows.is_none_or(|c| !c.is_ascii_alphanumeric()) {
                    let (a, v) = (endpoint(b[1]), endpoint(b[2]));
                    self.pos += 3;
                    base = base.restrict(a, v);
                    continue;
                }
            }
            return Ok(base);
        }
    }

    fn atom(&mut self) -> Result<ClassExpr> {
        self.skip_ws();
        let r = self.rest();
        if r.starts_with("F^{") {
            return self.range2_atom();
        }
        let len = r
            .char_indices()
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '<' || c == '='))
            .map_or(r.len(), |(i, _)| i);
        if len == 0 {
            return self.err("expected a class name");
        }
        let word = &r[..len];
        let e = word_to_expr(word).ok_or_else(|| Error::UnknownName {
            name: word.to_string(),
            valid: known_class_names().join(", "),
        })?;
        self.pos += len;
        Ok(e)
    }

    fn range2_atom(&mut self) -> Result<ClassExpr> {
        self.pos += 3;
        let r = self.rest();
        let Some(close) = r.find('}') else {
            return self.err("unterminated `F^{`");
        };
        let set = R2Set::parse(&r[..close])?;
        self.pos += close + 1;
        let r = self.rest();
        let (a, b) = if let Some(tail) = r.strip_prefix("_{") {
            let tb = tail.as_bytes();
            if tb.len() < 3 || tb[2] != b'}' || !is_endpoint(tb[0]) || !is_endpoint(tb[1]) {
                return self.err("bad endpoint subscript");
            }
            self.pos += 5;
            (endpoint(tb[0]), endpoint(tb[1]))
        } else {
            (None, None)
        };
        Ok(ClassExpr::Atom(ClassAtom::Range2Class { r: set, a, b }))
    }
}

fn is_endpoint(c: u8) -> bool {
    matches!(c, b'0' | b'1' | b'x')
}

fn endpoint(c: u8) -> Option<bool> {
    match c {
        b'0' => Some(false),
        b'1' => Some(true),
        _ => None,
    }
}

fn word_to_expr(word: &str) -> Option<ClassExpr> {
    use ClassAtom::*;
    let atom = |a| Some(ClassExpr::Atom(a));
    match word {
        "Omega" => return Some(ClassExpr::All),
        "Empty" => return Some(ClassExpr::Empty),
        "C0" => return atom(ConstVal(false)),
        "C1" => return atom(ConstVal(true)),
        "Mon" => return atom(Monotone),
        "SelfDual" => return atom(SelfDual),
        "Refl" => return atom(Reflexive),
        "Smin" => return atom(Smin),
        "Smaj" => return atom(Smaj),
        "Lin" => return atom(Linear),
        _ => {}
    }
    if let Some(code) = word.strip_prefix("Om") {
        let b = code.as_bytes();
        if b.len() == 2 && is_endpoint(b[0]) && is_endpoint(b[1]) && code != "xx" {
            return Some(ClassExpr::values(endpoint(b[0]), endpoint(b[1])));
        }
    }
    if let Some(k) = word.strip_prefix("A<=") {
        return k.parse().ok().map(|k| ClassExpr::Atom(AltAtMost(k)));
    }
    if let Some(k) = word.strip_prefix('A') {
        if !k.is_empty() && k.bytes().all(|c| c.is_ascii_digit()) {
            return k.parse().ok().map(|k| ClassExpr::Atom(AltExactly(k)));
        }
    }
    if let Some(rest) = word.strip_prefix("Sep") {
        let (v, rank) = rest.split_once('r')?;
        let value = match v {
            "0" => false,
            "1" => true,
            _ => return None,
        };
        let rank = if rank == "inf" {
            Rank::Inf
        } else {
            Rank::Fin(rank.parse().ok()?)
        };
        return atom(Separating { value, rank });
    }
    if let Some((_, body)) = MACROS.iter().find(|(n, _)| *n == word) {
        return Some(ClassExpr::parse(body).expect("macro bodies parse"));
    }
    CloneId::from_name(word).map(ClassExpr::clone_class)
}
