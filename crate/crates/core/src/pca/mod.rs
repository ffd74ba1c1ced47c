//! Partial combinatory algebras.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::enumerate::normal_forms_up_to;
use crate::poly::{compile, Expr, Polynomial};
use crate::reduce::evaluate;
use crate::term::{Atom, Term, View};
use crate::verdict::{Error, Fuel, Result, Verdict};

mod nat;

pub use nat::NatPca;

/// A carrier with fuel-bounded partial application and combinators `k`, `s`.
pub trait Pca {
    type Elem: Clone + Ord + Debug;

    fn apply(&self, a: &Self::Elem, b: &Self::Elem, fuel: Fuel) -> Verdict<Self::Elem>;

    fn k(&self) -> Self::Elem;

    fn s(&self) -> Self::Elem;

    fn i(&self) -> Self::Elem;

    /// Value of a closed `S`/`K`/`I` term in this algebra.
    fn interpret(&self, t: &Term, fuel: Fuel) -> Result<Self::Elem> {
        match t.view() {
            View::Atom(Atom::S) => Ok(self.s()),
            View::Atom(Atom::K) => Ok(self.k()),
            View::Atom(Atom::I) => Ok(self.i()),
            View::Atom(Atom::Named(n)) => Err(Error::Invalid(format!(
                "named constant `{n}` has no meaning here"
            ))),
            View::App(f, x) => {
                let f = self.interpret(f, fuel)?;
                let x = self.interpret(x, fuel)?;
                self.apply(&f, &x, fuel).require("application")
            }
        }
    }

    fn show(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }

    /// Distinct values of the closed `S`/`K` normal forms with at most
    /// `depth` leaves, in canonical order. Used as the search space for
    /// realizers and as a sample pool.
    fn candidates(&self, depth: usize, fuel: Fuel) -> Vec<Self::Elem> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for t in normal_forms_up_to(depth) {
            if let Ok(e) = self.interpret(&t, fuel) {
                if seen.insert(e.clone()) {
                    out.push(e);
                }
            }
        }
        out
    }
}

/// Closed combinatory terms in normal form; application normalizes.
/// Opaque named constants are admitted as extra inert elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SkPca;

impl Pca for SkPca {
    type Elem = Term;

    fn apply(&self, a: &Term, b: &Term, fuel: Fuel) -> Verdict<Term> {
        evaluate(&a.apply(b), fuel)
    }

    fn k(&self) -> Term {
        Term::k()
    }

    fn s(&self) -> Term {
        Term::s()
    }

    fn i(&self) -> Term {
        Term::i()
    }

    fn interpret(&self, t: &Term, fuel: Fuel) -> Result<Term> {
        evaluate(t, fuel).require("term")
    }

    fn show(&self, a: &Term) -> String {
        a.to_string()
    }

    fn candidates(&self, depth: usize, _fuel: Fuel) -> Vec<Term> {
        normal_forms_up_to(depth)
    }
}

/// The distinguished elements of a PCA.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combinators<E> {
    pub k: E,
    pub s: E,
    pub i: E,
    pub p: E,
    pub p0: E,
    pub p1: E,
}

/// `p = λxyz. z x y`, `p0 = λu. u k`, `p1 = λu. u (k i)`.
pub fn standard_combinators<P: Pca>(pca: &P, fuel: Fuel) -> Result<Combinators<P::Elem>> {
    let (k, s, i) = (pca.k(), pca.s(), pca.i());
    let pair = Polynomial::new(
        3,
        Expr::app(Expr::app(Expr::Var(3), Expr::Var(1)), Expr::Var(2)),
    )?;
    let first = Polynomial::new(1, Expr::app(Expr::Var(1), Expr::Const(k.clone())))?;
    let second = Polynomial::new(
        1,
        Expr::app(
            Expr::Var(1),
            Expr::app(Expr::Const(k.clone()), Expr::Const(i.clone())),
        ),
    )?;
    Ok(Combinators {
        p: compile(pca, &pair, fuel).require("p")?,
        p0: compile(pca, &first, fuel).require("p0")?,
        p1: compile(pca, &second, fuel).require("p1")?,
        k,
        s,
        i,
    })
}

impl<E: Clone> Combinators<E> {
    /// `p · a · b`.
    pub fn pair<P: Pca<Elem = E>>(&self, pca: &P, a: &E, b: &E, fuel: Fuel) -> Verdict<E> {
        pca.apply(&self.p, a, fuel)
            .and_then(|pa| pca.apply(&pa, b, fuel))
    }
}

/// Parses a term and interprets it in `pca`.
pub fn element<P: Pca>(pca: &P, src: &str, fuel: Fuel) -> Result<P::Elem> {
    let t: Term = src
        .parse()
        .map_err(|e: crate::term::ParseError| Error::Invalid(e.to_string()))?;
    pca.interpret(&t, fuel)
}
