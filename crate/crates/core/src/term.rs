//! Closed combinatory-logic terms over `S`, `K`, `I` and opaque named
//! constants.
//!
//! Terms are immutable and structurally shared, so duplicating a subterm
//! during reduction is O(1). Every node caches its leaf count and a
//! structural hash, which keeps equality tests on large shared terms cheap
//! in the common (unequal) case.
//!
//! Concrete syntax: `S`, `K`, `I`, lowercase names (`a`, `foo1`),
//! juxtaposition for left-associative application, and parentheses.
//! Adjacent uppercase combinators need no separating space (`SKK`).

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    S,
    K,
    I,
    /// Opaque constant with no reduction rule.
    Named(Arc<str>),
}

impl Atom {
    fn tag(&self) -> u64 {
        match self {
            Atom::S => 1,
            Atom::K => 2,
            Atom::I => 3,
            Atom::Named(n) => {
                let mut h: u64 = 0xcbf2_9ce4_8422_2325;
                for b in n.bytes() {
                    h ^= b as u64;
                    h = h.wrapping_mul(0x100_0000_01b3);
                }
                h | 4
            }
        }
    }
}

#[derive(Debug)]
struct Node {
    kind: Kind,
    hash: u64,
    size: u64,
}

#[derive(Debug)]
enum Kind {
    Atom(Atom),
    App(Term, Term),
}

impl Drop for Node {
    // Iterative teardown; deep terms would otherwise overflow the stack.
    fn drop(&mut self) {
        let Kind::App(..) = self.kind else { return };
        let mut todo: Vec<Arc<Node>> = Vec::new();
        if let Kind::App(f, x) = core::mem::replace(&mut self.kind, Kind::Atom(Atom::S)) {
            todo.push(f.0);
            todo.push(x.0);
        }
        while let Some(n) = todo.pop() {
            if let Ok(mut node) = Arc::try_unwrap(n) {
                if let Kind::App(f, x) = core::mem::replace(&mut node.kind, Kind::Atom(Atom::S)) {
                    todo.push(f.0);
                    todo.push(x.0);
                }
            }
        }
    }
}

/// A combinatory term.
#[derive(Clone)]
pub struct Term(Arc<Node>);

/// Borrowed view of the top constructor of a term.
pub enum View<'a> {
    Atom(&'a Atom),
    App(&'a Term, &'a Term),
}

fn mix(a: u64, b: u64) -> u64 {
    let x = a.rotate_left(23) ^ b.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    x.wrapping_mul(0xff51_afd7_ed55_8ccd) ^ (x >> 29)
}

impl Term {
    pub fn atom(atom: Atom) -> Term {
        let hash = atom.tag();
        Term(Arc::new(Node {
            kind: Kind::Atom(atom),
            hash,
            size: 1,
        }))
    }

    pub fn s() -> Term {
        Term::atom(Atom::S)
    }

    pub fn k() -> Term {
        Term::atom(Atom::K)
    }

    pub fn i() -> Term {
        Term::atom(Atom::I)
    }

    pub fn named(name: &str) -> Term {
        Term::atom(Atom::Named(Arc::from(name)))
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        let hash = mix(fun.0.hash, arg.0.hash);
        let size = fun.0.size.saturating_add(arg.0.size);
        Term(Arc::new(Node {
            kind: Kind::App(fun, arg),
            hash,
            size,
        }))
    }

    /// `self arg`.
    pub fn apply(&self, arg: &Term) -> Term {
        Term::app(self.clone(), arg.clone())
    }

    /// `head a1 … an`.
    pub fn apply_all<'a>(&self, args: impl IntoIterator<Item = &'a Term>) -> Term {
        args.into_iter().fold(self.clone(), |acc, a| acc.apply(a))
    }

    pub fn view(&self) -> View<'_> {
        match &self.0.kind {
            Kind::Atom(a) => View::Atom(a),
            Kind::App(f, x) => View::App(f, x),
        }
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match &self.0.kind {
            Kind::Atom(a) => Some(a),
            Kind::App(..) => None,
        }
    }

    /// Number of atom occurrences (leaves), saturating.
    pub fn size(&self) -> u64 {
        self.0.size
    }

    pub fn structural_hash(&self) -> u64 {
        self.0.hash
    }

    pub fn ptr_eq(&self, other: &Term) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub(crate) fn addr(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    /// Splits `h a1 … an` into `h` (an atom) and `[a1, …, an]`.
    pub fn spine(&self) -> (Term, Vec<Term>) {
        let mut args = Vec::new();
        let mut cur = self.clone();
        loop {
            let next = match &cur.0.kind {
                Kind::Atom(_) => break,
                Kind::App(f, x) => {
                    args.push(x.clone());
                    f.clone()
                }
            };
            cur = next;
        }
        args.reverse();
        (cur, args)
    }

    /// True when no subterm is a redex `K a b`, `S a b c` or `I a`.
    pub fn is_normal(&self) -> bool {
        let mut todo = alloc::vec![self.clone()];
        while let Some(t) = todo.pop() {
            let (head, args) = t.spine();
            let arity = match head.as_atom() {
                Some(Atom::S) => 3,
                Some(Atom::K) => 2,
                Some(Atom::I) => 1,
                _ => usize::MAX,
            };
            if args.len() >= arity {
                return false;
            }
            todo.extend(args);
        }
        true
    }

    /// Replaces every `I` by `S K K`.
    pub fn expand_i(&self) -> Term {
        self.rebuild(&mut |a| match a {
            Atom::I => Some(Term::s().apply(&Term::k()).apply(&Term::k())),
            _ => None,
        })
    }

    pub fn has_named(&self) -> bool {
        let mut todo = alloc::vec![self];
        while let Some(t) = todo.pop() {
            match &t.0.kind {
                Kind::Atom(Atom::Named(_)) => return true,
                Kind::Atom(_) => {}
                Kind::App(f, x) => {
                    todo.push(f);
                    todo.push(x);
                }
            }
        }
        false
    }

    fn rebuild(&self, subst: &mut impl FnMut(&Atom) -> Option<Term>) -> Term {
        match &self.0.kind {
            Kind::Atom(a) => subst(a).unwrap_or_else(|| self.clone()),
            Kind::App(f, x) => {
                let f2 = f.rebuild(subst);
                let x2 = x.rebuild(subst);
                if f2.ptr_eq(f) && x2.ptr_eq(x) {
                    self.clone()
                } else {
                    Term::app(f2, x2)
                }
            }
        }
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Term) -> bool {
        let mut todo = alloc::vec![(self, other)];
        while let Some((a, b)) = todo.pop() {
            if a.ptr_eq(b) {
                continue;
            }
            if a.0.hash != b.0.hash || a.0.size != b.0.size {
                return false;
            }
            match (&a.0.kind, &b.0.kind) {
                (Kind::Atom(x), Kind::Atom(y)) => {
                    if x != y {
                        return false;
                    }
                }
                (Kind::App(f1, x1), Kind::App(f2, x2)) => {
                    todo.push((x1, x2));
                    todo.push((f1, f2));
                }
                _ => return false,
            }
        }
        true
    }
}

impl Eq for Term {}

impl Hash for Term {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl Ord for Term {
    /// Size first, then a structural order; consistent with `Eq`.
    fn cmp(&self, other: &Term) -> Ordering {
        let mut todo = alloc::vec![(self, other)];
        while let Some((a, b)) = todo.pop() {
            if a.ptr_eq(b) {
                continue;
            }
            match a.0.size.cmp(&b.0.size) {
                Ordering::Equal => {}
                o => return o,
            }
            match (&a.0.kind, &b.0.kind) {
                (Kind::Atom(x), Kind::Atom(y)) => match x.cmp(y) {
                    Ordering::Equal => {}
                    o => return o,
                },
                (Kind::Atom(_), Kind::App(..)) => return Ordering::Less,
                (Kind::App(..), Kind::Atom(_)) => return Ordering::Greater,
                (Kind::App(f1, x1), Kind::App(f2, x2)) => {
                    todo.push((x1, x2));
                    todo.push((f1, f2));
                }
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Term) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::S => f.write_str("S"),
            Atom::K => f.write_str("K"),
            Atom::I => f.write_str("I"),
            Atom::Named(n) => f.write_str(n),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (head, args) = self.spine();
        write!(f, "{}", head.as_atom().expect("spine head is an atom"))?;
        for a in &args {
            match a.view() {
                View::Atom(at) => write!(f, " {at}")?,
                View::App(..) => write!(f, " ({a})")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

/// Parse failure with a 1-based column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Token {
    Atom(Atom),
    /// `x<digits>`; only meaningful in polynomial syntax.
    Var(usize),
    Open,
    Close,
    /// `[c:`
    ConstOpen,
    /// `]`
    ConstClose,
}

pub(crate) fn lex(src: &str, poly: bool) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            c if c.is_whitespace() => i += 1,
            '(' => {
                out.push((col, Token::Open));
                i += 1;
            }
            ')' => {
                out.push((col, Token::Close));
                i += 1;
            }
            'S' => {
                out.push((col, Token::Atom(Atom::S)));
                i += 1;
            }
            'K' => {
                out.push((col, Token::Atom(Atom::K)));
                i += 1;
            }
            'I' => {
                out.push((col, Token::Atom(Atom::I)));
                i += 1;
            }
            '[' if poly => {
                if chars.get(i + 1) == Some(&'c') && chars.get(i + 2) == Some(&':') {
                    out.push((col, Token::ConstOpen));
                    i += 3;
                } else {
                    return Err(ParseError {
                        column: col,
                        message: "expected `[c:`".to_string(),
                    });
                }
            }
            ']' if poly => {
                out.push((col, Token::ConstClose));
                i += 1;
            }
            c if c.is_ascii_lowercase() => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_lowercase()
                        || chars[i].is_ascii_digit()
                        || chars[i] == '_')
                {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let is_var = poly
                    && word.len() > 1
                    && word.starts_with('x')
                    && word[1..].bytes().all(|b| b.is_ascii_digit());
                if is_var {
                    let idx: usize = word[1..].parse().map_err(|_| ParseError {
                        column: col,
                        message: "variable index out of range".to_string(),
                    })?;
                    if idx == 0 {
                        return Err(ParseError {
                            column: col,
                            message: "variables are numbered from x1".to_string(),
                        });
                    }
                    out.push((col, Token::Var(idx)));
                } else {
                    out.push((col, Token::Atom(Atom::Named(Arc::from(word.as_str())))));
                }
            }
            other => {
                return Err(ParseError {
                    column: col,
                    message: alloc::format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct TermParser<'a> {
    toks: &'a [(usize, Token)],
    pos: usize,
    end_col: usize,
}

impl TermParser<'_> {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end_col)
    }

    fn seq(&mut self) -> Result<Term, ParseError> {
        let mut acc: Option<Term> = None;
        while let Some((_, tok)) = self.toks.get(self.pos) {
            let item = match tok {
                Token::Atom(a) => {
                    self.pos += 1;
                    Term::atom(a.clone())
                }
                Token::Open => {
                    self.pos += 1;
                    let inner = self.seq()?;
                    match self.toks.get(self.pos) {
                        Some((_, Token::Close)) => self.pos += 1,
                        _ => {
                            return Err(ParseError {
                                column: self.col(),
                                message: "expected `)`".to_string(),
                            })
                        }
                    }
                    inner
                }
                Token::Close => break,
                _ => {
                    return Err(ParseError {
                        column: self.col(),
                        message: "unexpected token".to_string(),
                    })
                }
            };
            acc = Some(match acc {
                None => item,
                Some(f) => Term::app(f, item),
            });
        }
        acc.ok_or_else(|| ParseError {
            column: self.col(),
            message: "expected a term".to_string(),
        })
    }
}

impl core::str::FromStr for Term {
    type Err = ParseError;

    fn from_str(src: &str) -> Result<Term, ParseError> {
        let toks = lex(src, false)?;
        let mut p = TermParser {
            toks: &toks,
            pos: 0,
            end_col: src.chars().count() + 1,
        };
        let t = p.seq()?;
        if p.pos != toks.len() {
            return Err(ParseError {
                column: p.col(),
                message: "unbalanced `)`".to_string(),
            });
        }
        Ok(t)
    }
}
