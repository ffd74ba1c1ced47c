//! Polynomials over a carrier: terms built from variables `x1 … xn`,
//! carrier constants and application, together with bracket abstraction.
//!
//! Bracket abstraction only uses the `K` rule on atoms. A compound body
//! that happens not to mention the abstracted variable still goes through
//! the `S` rule. Abstracting `x` out of `u v` as `K (u v)` would evaluate
//! `u v` too early: with `u = v = x1` and `x1 := S I I` the compiled term
//! would diverge on its first argument, even though the polynomial only
//! needs it once all arguments are present.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::pca::Pca;
use crate::term::{lex, ParseError, Term, Token};
use crate::verdict::{Error, Fuel, Result, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Expr<E> {
    /// 1-based variable index.
    Var(usize),
    Const(E),
    App(Box<Expr<E>>, Box<Expr<E>>),
}

impl<E> Expr<E> {
    pub fn app(f: Expr<E>, x: Expr<E>) -> Expr<E> {
        Expr::App(Box::new(f), Box::new(x))
    }

    pub fn max_var(&self) -> usize {
        match self {
            Expr::Var(i) => *i,
            Expr::Const(_) => 0,
            Expr::App(f, x) => f.max_var().max(x.max_var()),
        }
    }

    pub fn mentions(&self, var: usize) -> bool {
        match self {
            Expr::Var(i) => *i == var,
            Expr::Const(_) => false,
            Expr::App(f, x) => f.mentions(var) || x.mentions(var),
        }
    }

    /// Number of leaves.
    pub fn size(&self) -> usize {
        match self {
            Expr::App(f, x) => f.size() + x.size(),
            _ => 1,
        }
    }

    pub fn map_consts<F, G: FnMut(&E) -> Result<F>>(&self, g: &mut G) -> Result<Expr<F>> {
        Ok(match self {
            Expr::Var(i) => Expr::Var(*i),
            Expr::Const(c) => Expr::Const(g(c)?),
            Expr::App(f, x) => Expr::app(f.map_consts(g)?, x.map_consts(g)?),
        })
    }
}

/// A polynomial `t[x1, …, xn]` of fixed arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<E> {
    arity: usize,
    body: Expr<E>,
}

impl<E: Clone> Polynomial<E> {
    pub fn new(arity: usize, body: Expr<E>) -> Result<Polynomial<E>> {
        if body.max_var() > arity {
            return Err(Error::Invalid(alloc::format!(
                "variable x{} exceeds arity {arity}",
                body.max_var()
            )));
        }
        Ok(Polynomial { arity, body })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn body(&self) -> &Expr<E> {
        &self.body
    }

    /// `λ*x_n. t`, an arity `n − 1` polynomial.
    pub fn abstract_last(&self, s: &E, k: &E, i: &E) -> Result<Polynomial<E>> {
        if self.arity == 0 {
            return Err(Error::Invalid("cannot abstract from arity 0".to_string()));
        }
        Ok(Polynomial {
            arity: self.arity - 1,
            body: abstract_var(&self.body, self.arity, s, k, i),
        })
    }

    /// Abstracts every variable, leaving a closed polynomial.
    pub fn abstract_all(&self, s: &E, k: &E, i: &E) -> Polynomial<E> {
        let mut p = self.clone();
        while p.arity > 0 {
            p = p.abstract_last(s, k, i).expect("arity positive");
        }
        p
    }

    pub fn map_consts<F, G: FnMut(&E) -> Result<F>>(&self, mut g: G) -> Result<Polynomial<F>> {
        Ok(Polynomial {
            arity: self.arity,
            body: self.body.map_consts(&mut g)?,
        })
    }
}

fn abstract_var<E: Clone>(t: &Expr<E>, x: usize, s: &E, k: &E, i: &E) -> Expr<E> {
    match t {
        Expr::Var(v) if *v == x => Expr::Const(i.clone()),
        Expr::Var(_) | Expr::Const(_) => Expr::app(Expr::Const(k.clone()), t.clone()),
        Expr::App(u, v) => Expr::app(
            Expr::app(Expr::Const(s.clone()), abstract_var(u, x, s, k, i)),
            abstract_var(v, x, s, k, i),
        ),
    }
}

/// `t[a1, …, an]`, evaluated strictly with the algebra's application.
pub fn instantiate<P: Pca>(
    pca: &P,
    t: &Polynomial<P::Elem>,
    args: &[P::Elem],
    fuel: Fuel,
) -> Verdict<P::Elem> {
    assert_eq!(args.len(), t.arity, "argument count must match arity");
    eval_expr(pca, &t.body, args, fuel)
}

fn eval_expr<P: Pca>(pca: &P, t: &Expr<P::Elem>, args: &[P::Elem], fuel: Fuel) -> Verdict<P::Elem> {
    match t {
        Expr::Var(v) => Verdict::Value(args[v - 1].clone()),
        Expr::Const(c) => Verdict::Value(c.clone()),
        Expr::App(f, x) => eval_expr(pca, f, args, fuel)
            .and_then(|fv| eval_expr(pca, x, args, fuel).and_then(|xv| pca.apply(&fv, &xv, fuel))),
    }
}

/// The combinatory-completeness element: `e` with
/// `t[a1, …, an] ⪯ e · a1 · … · an`.
pub fn compile<P: Pca>(pca: &P, t: &Polynomial<P::Elem>, fuel: Fuel) -> Verdict<P::Elem> {
    let closed = t.abstract_all(&pca.s(), &pca.k(), &pca.i());
    instantiate(pca, &closed, &[], fuel)
}

/// `e · a1 · … · an`.
pub fn apply_all<P: Pca>(pca: &P, e: &P::Elem, args: &[P::Elem], fuel: Fuel) -> Verdict<P::Elem> {
    let mut acc = Verdict::Value(e.clone());
    for a in args {
        acc = acc.and_then(|f| pca.apply(&f, a, fuel));
    }
    acc
}

impl Polynomial<Term> {
    /// Parses `x<i>`, `[c:<term>]`, `S`, `K`, `I`, names and parentheses.
    /// The arity defaults to the largest variable index.
    pub fn parse(src: &str, arity: Option<usize>) -> core::result::Result<Self, ParseError> {
        let toks = lex(src, true)?;
        let mut p = PolyParser {
            toks: &toks,
            pos: 0,
            end_col: src.chars().count() + 1,
        };
        let body = p.seq(false)?;
        if p.pos != toks.len() {
            return Err(ParseError {
                column: p.col(),
                message: "unbalanced input".to_string(),
            });
        }
        let needed = body.max_var();
        let arity = arity.unwrap_or(needed);
        if needed > arity {
            return Err(ParseError {
                column: 1,
                message: alloc::format!("variable x{needed} exceeds arity {arity}"),
            });
        }
        Ok(Polynomial { arity, body })
    }
}

struct PolyParser<'a> {
    toks: &'a [(usize, Token)],
    pos: usize,
    end_col: usize,
}

impl PolyParser<'_> {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end_col)
    }

    fn err<T>(&self, msg: &str) -> core::result::Result<T, ParseError> {
        Err(ParseError {
            column: self.col(),
            message: msg.to_string(),
        })
    }

    /// Parses an application sequence; inside `[c:…]` variables are refused.
    fn seq(&mut self, closed: bool) -> core::result::Result<Expr<Term>, ParseError> {
        let mut acc: Option<Expr<Term>> = None;
        while let Some((_, tok)) = self.toks.get(self.pos) {
            let item = match tok {
                Token::Atom(a) => {
                    self.pos += 1;
                    Expr::Const(Term::atom(a.clone()))
                }
                Token::Var(i) => {
                    if closed {
                        return self.err("variables are not allowed inside constants");
                    }
                    self.pos += 1;
                    Expr::Var(*i)
                }
                Token::Open => {
                    self.pos += 1;
                    let inner = self.seq(closed)?;
                    if self.toks.get(self.pos).map(|t| &t.1) != Some(&Token::Close) {
                        return self.err("expected `)`");
                    }
                    self.pos += 1;
                    inner
                }
                Token::ConstOpen => {
                    if closed {
                        return self.err("nested constant");
                    }
                    self.pos += 1;
                    let inner = self.seq(true)?;
                    if self.toks.get(self.pos).map(|t| &t.1) != Some(&Token::ConstClose) {
                        return self.err("expected `]`");
                    }
                    self.pos += 1;
                    Expr::Const(flatten(&inner))
                }
                Token::Close | Token::ConstClose => break,
            };
            acc = Some(match acc {
                None => item,
                Some(f) => Expr::app(f, item),
            });
        }
        match acc {
            Some(e) => Ok(e),
            None => self.err("expected a term"),
        }
    }
}

fn flatten(e: &Expr<Term>) -> Term {
    match e {
        Expr::Const(t) => t.clone(),
        Expr::App(f, x) => Term::app(flatten(f), flatten(x)),
        Expr::Var(_) => unreachable!("constants are closed"),
    }
}

struct Shown<'a>(&'a Expr<Term>);

impl fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut spine = Vec::new();
        let mut cur = self.0;
        while let Expr::App(g, x) = cur {
            spine.push(&**x);
            cur = g;
        }
        spine.reverse();
        write_leaf(f, cur)?;
        for a in spine {
            f.write_str(" ")?;
            match a {
                Expr::App(..) => write!(f, "({})", Shown(a))?,
                _ => write_leaf(f, a)?,
            }
        }
        Ok(())
    }
}

fn write_leaf(f: &mut fmt::Formatter<'_>, e: &Expr<Term>) -> fmt::Result {
    match e {
        Expr::Var(i) => write!(f, "x{i}"),
        Expr::Const(t) => match t.as_atom() {
            Some(a) => write!(f, "{a}"),
            None => write!(f, "[c:{t}]"),
        },
        Expr::App(..) => unreachable!("leaves only"),
    }
}

impl fmt::Display for Polynomial<Term> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Shown(&self.body))
    }
}

impl Polynomial<Term> {
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pca::SkPca;
    use crate::reduce::evaluate;

    fn sk() -> (Term, Term, Term) {
        (Term::s(), Term::k(), Term::i())
    }

    fn closed(p: &Polynomial<Term>) -> Term {
        flatten(p.body())
    }

    #[test]
    fn abstraction_examples() {
        let (s, k, i) = sk();
        let x = Polynomial::parse("x1", None).unwrap();
        assert_eq!(closed(&x.abstract_last(&s, &k, &i).unwrap()), Term::i());
        let c = Polynomial::parse("c", Some(1)).unwrap();
        assert_eq!(
            closed(&c.abstract_last(&s, &k, &i).unwrap()).to_string(),
            "K c"
        );
        let xx = Polynomial::parse("x1 x1", None).unwrap();
        assert_eq!(
            closed(&xx.abstract_last(&s, &k, &i).unwrap()).to_string(),
            "S I I"
        );
    }

    #[test]
    fn compound_bodies_stay_lazy() {
        let (s, k, i) = sk();
        // λx2. x1 x1 must not reduce x1 x1 when x1 is supplied.
        let p = Polynomial::parse("x1 x1", Some(2)).unwrap();
        let e = closed(&p.abstract_all(&s, &k, &i));
        let omega_half = Term::s().apply(&Term::i()).apply(&Term::i());
        assert!(evaluate(&e.apply(&omega_half), 1000).is_value());
    }

    #[test]
    fn compile_first_projection_behaves_as_k() {
        let pca = SkPca;
        let p = Polynomial::parse("x1", Some(2)).unwrap();
        let e = compile(&pca, &p, 1000).value().unwrap();
        let a: Term = "a".parse().unwrap();
        let b: Term = "S b".parse().unwrap();
        assert_eq!(
            apply_all(&pca, &e, &[a.clone(), b], 1000),
            Verdict::Value(a)
        );
    }

    #[test]
    fn parse_print_round_trip() {
        for src in ["x1", "x3 x1 (x2 x1)", "[c:S K] x1 K", "S (K x2) (a x1)"] {
            let p = Polynomial::parse(src, None).unwrap();
            assert_eq!(p.to_string(), src);
            assert_eq!(Polynomial::parse(&p.to_string(), None).unwrap(), p);
        }
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Polynomial::parse("x0", None).is_err());
        assert!(Polynomial::parse("[c:x1]", None).is_err());
        assert!(Polynomial::parse("x2", Some(1)).is_err());
        assert!(Polynomial::parse("(x1", None).is_err());
    }
}
