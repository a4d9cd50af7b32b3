//! Text grammars for every value the command line accepts.
//!
//! Parsers skip whitespace between tokens. Printers emit the canonical form,
//! which parses back to the same value.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use wqo_core::ack_terms::AckTerm;
use wqo_core::algebra::AlgebraSignature;
use wqo_core::exp_terms::ExpTerm;
use wqo_core::hl_dl::{BinaryString01, PosTuple};
use wqo_core::orders::FiniteQo;
use wqo_core::ordinals::CnfOrdinal;
use wqo_core::trees::Tree;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at {line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

type Parsed<T> = Result<T, ParseError>;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Parsed<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn ident(&mut self) -> Parsed<&'a str> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_alphanumeric()).unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a name"));
        }
        let out = &self.rest()[..len];
        self.pos += len;
        Ok(out)
    }

    /// `[1-9][0-9]*`.
    fn posint(&mut self) -> Parsed<BigUint> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        let digits = &self.rest()[..len];
        if digits.is_empty() || digits.starts_with('0') {
            return Err(self.error("expected a positive integer"));
        }
        self.pos += len;
        Ok(digits.parse().expect("ascii digits"))
    }

    fn finish(&mut self) -> Parsed<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        error_at(self.src, self.pos, msg)
    }
}

fn error_at(src: &str, pos: usize, msg: impl Into<String>) -> ParseError {
    let before = &src[..pos];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    ParseError { line, col, msg: msg.into() }
}

/// Interned element names; ids are assigned in first-seen order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Names {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    frozen: bool,
}

impl Names {
    pub fn new() -> Self {
        Names::default()
    }

    /// A table that rejects names it does not already hold.
    pub fn frozen(names: impl IntoIterator<Item = impl Into<String>>) -> Self {
        let mut out = Names::new();
        for n in names {
            out.intern(&n.into());
        }
        out.frozen = true;
        out
    }

    pub fn freeze(mut self) -> Self {
        self.frozen = true;
        self
    }

    pub fn intern(&mut self, name: &str) -> Option<usize> {
        if let Some(&id) = self.index.get(name) {
            return Some(id);
        }
        if self.frozen {
            return None;
        }
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), self.names.len() - 1);
        Some(self.names.len() - 1)
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }
}

/// `tree := ident | ident '[' (tree (',' tree)*)? ']'`.
pub fn parse_tree(text: &str, names: &mut Names) -> Parsed<Tree> {
    let mut c = Cursor::new(text);
    let t = tree(&mut c, names)?;
    c.finish()?;
    Ok(t)
}

fn tree(c: &mut Cursor<'_>, names: &mut Names) -> Parsed<Tree> {
    c.skip_ws();
    let at = c.pos;
    let name = c.ident()?;
    let label = names.intern(name).ok_or_else(|| error_at(c.src, at, format!("unknown label `{name}`")))?;
    let mut children = Vec::new();
    if c.eat("[") && !c.eat("]") {
        loop {
            children.push(tree(c, names)?);
            if c.eat("]") {
                break;
            }
            c.expect(",")?;
        }
    }
    Ok(Tree::node(label, children))
}

/// Canonical tree text with labels spelled through `names`.
pub struct TreeText<'a>(pub &'a Tree, pub &'a Names);

impl fmt::Display for TreeText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let TreeText(t, names) = *self;
        f.write_str(names.name(t.label))?;
        f.write_str("[")?;
        for (i, child) in t.children.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", TreeText(child, names))?;
        }
        f.write_str("]")
    }
}

/// `exp := '0' | 'x^(' exp ')+(' exp ')'`.
pub fn parse_exp(text: &str) -> Parsed<ExpTerm> {
    let mut c = Cursor::new(text);
    let e = exp(&mut c)?;
    c.finish()?;
    Ok(e)
}

fn exp(c: &mut Cursor<'_>) -> Parsed<ExpTerm> {
    if c.eat("0") {
        return Ok(ExpTerm::Zero);
    }
    if !c.eat("x") {
        return Err(c.error("expected `0` or `x^(`"));
    }
    c.expect("^")?;
    c.expect("(")?;
    let exponent = exp(c)?;
    c.expect(")")?;
    c.expect("+")?;
    c.expect("(")?;
    let rest = exp(c)?;
    c.expect(")")?;
    Ok(ExpTerm::node(exponent, rest))
}

/// `t := '1' | '(' t '+' t ')' | 'A(' t ',' t ')'`.
pub fn parse_ack(text: &str) -> Parsed<AckTerm> {
    let mut c = Cursor::new(text);
    let t = ack(&mut c)?;
    c.finish()?;
    Ok(t)
}

fn ack(c: &mut Cursor<'_>) -> Parsed<AckTerm> {
    if c.eat("1") {
        Ok(AckTerm::One)
    } else if c.eat("(") {
        let a = ack(c)?;
        c.expect("+")?;
        let b = ack(c)?;
        c.expect(")")?;
        Ok(AckTerm::plus(a, b))
    } else if c.eat("A") {
        c.expect("(")?;
        let a = ack(c)?;
        c.expect(",")?;
        let b = ack(c)?;
        c.expect(")")?;
        Ok(AckTerm::app(a, b))
    } else {
        Err(c.error("expected `1`, `(` or `A(`"))
    }
}

/// `ord := '0' | sum`, `sum := term ('+' term)*`,
/// `term := 'w' ('^' '(' ord ')')? ('*' posint)? | posint`.
///
/// Exponents must strictly decrease from left to right.
pub fn parse_ord(text: &str) -> Parsed<CnfOrdinal> {
    let mut c = Cursor::new(text);
    let o = ord(&mut c)?;
    c.finish()?;
    Ok(o)
}

fn ord(c: &mut Cursor<'_>) -> Parsed<CnfOrdinal> {
    if c.peek() == Some('0') {
        c.eat("0");
        return Ok(CnfOrdinal::zero());
    }
    let mut terms: Vec<(CnfOrdinal, BigUint)> = Vec::new();
    loop {
        c.skip_ws();
        let at = c.pos;
        let term = if c.eat("w") {
            let e = if c.eat("^") {
                c.expect("(")?;
                let e = ord(c)?;
                c.expect(")")?;
                e
            } else {
                CnfOrdinal::one()
            };
            let coef = if c.eat("*") { c.posint()? } else { BigUint::from(1u32) };
            (e, coef)
        } else {
            (CnfOrdinal::zero(), c.posint()?)
        };
        if terms.last().is_some_and(|(prev, _)| prev <= &term.0) {
            return Err(error_at(c.src, at, "exponents must strictly decrease"));
        }
        terms.push(term);
        if !c.eat("+") {
            break;
        }
    }
    Ok(CnfOrdinal::from_terms(terms).expect("checked decreasing"))
}

/// ASCII `0`/`1` text starting with `0`.
pub fn parse_string01(text: &str) -> Parsed<BinaryString01> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let mut letters = Vec::with_capacity(trimmed.len());
    for (i, ch) in trimmed.char_indices() {
        match ch {
            '0' => letters.push(0),
            '1' => letters.push(1),
            _ => return Err(error_at(text, lead + i, "expected `0` or `1`")),
        }
    }
    BinaryString01::new(letters).map_err(|e| error_at(text, lead, e.to_string()))
}

/// `(k₁,…,k_n)` with positive entries.
pub fn parse_tuple(text: &str) -> Parsed<PosTuple> {
    let mut c = Cursor::new(text);
    c.expect("(")?;
    let mut entries = Vec::new();
    loop {
        c.skip_ws();
        let at = c.pos;
        let k = c.posint()?;
        entries.push(u64::try_from(k).map_err(|_| error_at(text, at, "entry too large"))?);
        if c.eat(")") {
            break;
        }
        c.expect(",")?;
    }
    c.finish()?;
    Ok(PosTuple::new(entries).expect("nonempty, positive"))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn line_error(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, col: 1, msg: msg.into() }
}

/// Parses `a <= b` against `names`.
fn order_line(line_no: usize, line: &str, names: &Names) -> Parsed<(usize, usize)> {
    let (a, b) = line.split_once("<=").ok_or_else(|| line_error(line_no, "expected `a <= b`"))?;
    let lookup = |s: &str| {
        let s = s.trim();
        names.get(s).ok_or_else(|| line_error(line_no, format!("unknown element `{s}`")))
    };
    Ok((lookup(a)?, lookup(b)?))
}

fn name_list(line_no: usize, body: &str) -> Parsed<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for n in body.split_whitespace() {
        if !n.chars().all(char::is_alphanumeric) {
            return Err(line_error(line_no, format!("bad name `{n}`")));
        }
        if out.iter().any(|m| m == n) {
            return Err(line_error(line_no, format!("duplicate name `{n}`")));
        }
        out.push(n.to_owned());
    }
    Ok(out)
}

/// A finite quasi-order file: an `elements:` line, then `a <= b` lines.
/// The result is the reflexive-transitive closure of the listed pairs.
pub fn parse_qo(text: &str) -> Parsed<(Names, FiniteQo)> {
    let mut lines = content_lines(text);
    let (first_no, first) = lines.next().ok_or_else(|| line_error(1, "missing `elements:` line"))?;
    let body = first.strip_prefix("elements:").ok_or_else(|| line_error(first_no, "expected `elements:`"))?;
    let names = Names::frozen(name_list(first_no, body)?);
    let pairs = lines.map(|(no, l)| order_line(no, l, &names)).collect::<Parsed<Vec<_>>>()?;
    let qo = FiniteQo::generated_by(names.len(), pairs).expect("ids come from names");
    Ok((names, qo))
}

/// Canonical qo text: every related pair other than the diagonal.
pub fn print_qo(names: &Names, qo: &FiniteQo) -> String {
    let mut out = format!("elements: {}\n", names.iter().collect::<Vec<_>>().join(" "));
    for (a, b) in qo.pairs().filter(|(a, b)| a != b) {
        out.push_str(&format!("{} <= {}\n", names.name(a), names.name(b)));
    }
    out
}

/// A signature file: `gens: a b`, `ops: mu/2 la/1`, then `x <= y` lines
/// relating two generators or two operation symbols.
///
/// Label names are generators first, then operations, matching the label
/// layout of [`AlgebraSignature`].
pub fn parse_signature(text: &str) -> Parsed<(Names, AlgebraSignature)> {
    let mut gens = None;
    let mut ops: Option<Vec<(String, usize)>> = None;
    let mut order_lines = Vec::new();
    for (no, line) in content_lines(text) {
        if let Some(body) = line.strip_prefix("gens:") {
            gens = Some(name_list(no, body)?);
        } else if let Some(body) = line.strip_prefix("ops:") {
            let mut list = Vec::new();
            for item in body.split_whitespace() {
                let (name, arity) = item
                    .split_once('/')
                    .ok_or_else(|| line_error(no, format!("expected `name/arity`, got `{item}`")))?;
                let arity: usize = arity.parse().map_err(|_| line_error(no, format!("bad arity in `{item}`")))?;
                if arity == 0 {
                    return Err(line_error(no, format!("arity of `{name}` must be positive")));
                }
                list.push((name_list(no, name)?.pop().unwrap_or_default(), arity));
            }
            ops = Some(list);
        } else {
            order_lines.push((no, line));
        }
    }
    let gens = gens.ok_or_else(|| line_error(1, "missing `gens:` line"))?;
    let ops = ops.ok_or_else(|| line_error(1, "missing `ops:` line"))?;
    let mut names = Names::new();
    for g in &gens {
        names.intern(g);
    }
    for (o, _) in &ops {
        if names.get(o).is_some() {
            return Err(line_error(1, format!("duplicate name `{o}`")));
        }
        names.intern(o);
    }
    let names = names.freeze();
    let c = gens.len();
    let (mut gen_pairs, mut op_pairs) = (Vec::new(), Vec::new());
    for (no, line) in order_lines {
        let (a, b) = order_line(no, line, &names)?;
        match (a < c, b < c) {
            (true, true) => gen_pairs.push((a, b)),
            (false, false) => op_pairs.push((a - c, b - c)),
            _ => return Err(line_error(no, "generators and operations are incomparable")),
        }
    }
    let generators = FiniteQo::generated_by(c, gen_pairs).expect("ids come from names");
    let opsyms = FiniteQo::generated_by(ops.len(), op_pairs).expect("ids come from names");
    let sig = AlgebraSignature::new(generators, opsyms, ops.iter().map(|(_, a)| *a).collect())
        .map_err(|e| line_error(1, e.to_string()))?;
    Ok((names, sig))
}

/// Space-separated element names, resolved against `names`.
pub fn parse_elements(text: &str, names: &mut Names) -> Parsed<Vec<usize>> {
    let mut c = Cursor::new(text);
    let mut out = Vec::new();
    while c.peek().is_some() {
        let at = c.pos;
        let name = c.ident()?;
        out.push(names.intern(name).ok_or_else(|| error_at(text, at, format!("unknown element `{name}`")))?);
        c.eat(",");
    }
    Ok(out)
}
