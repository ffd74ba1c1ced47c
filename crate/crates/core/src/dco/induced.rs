//! The DCO `{φ_a}` induced by a PCA, with compiled witnesses.

use alloc::string::String;
use alloc::vec::Vec;

use super::{conflict, Dco};
use crate::pca::{standard_combinators, Combinators, Pca};
use crate::poly::{compile, Expr, Polynomial};
use crate::verdict::{Fuel, Result, Search, Status, Verdict};

/// Bound on realizer search: candidate terms have at most `depth` leaves
/// and each candidate application gets `fuel` steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub depth: usize,
    pub fuel: Fuel,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget {
            depth: 6,
            fuel: 1_000,
        }
    }
}

pub struct InducedDco<P: Pca> {
    pca: P,
    comb: Combinators<P::Elem>,
    universal: P::Elem,
    fuel: Fuel,
    budget: SearchBudget,
    pool: Vec<P::Elem>,
}

impl<P: Pca> InducedDco<P> {
    /// Compiles the combinators and `@ = compile((p0 · u) · (p1 · u))`;
    /// `fuel` bounds each construction step.
    pub fn new(pca: P, fuel: Fuel) -> Result<InducedDco<P>> {
        InducedDco::with_budget(pca, fuel, SearchBudget::default())
    }

    pub fn with_budget(pca: P, fuel: Fuel, budget: SearchBudget) -> Result<InducedDco<P>> {
        let comb = standard_combinators(&pca, fuel)?;
        let u = Polynomial::new(
            1,
            Expr::app(
                Expr::app(Expr::Const(comb.p0.clone()), Expr::Var(1)),
                Expr::app(Expr::Const(comb.p1.clone()), Expr::Var(1)),
            ),
        )?;
        let universal = compile(&pca, &u, fuel).require("universal function")?;
        let pool = pca.candidates(budget.depth, budget.fuel);
        Ok(InducedDco {
            pca,
            comb,
            universal,
            fuel,
            budget,
            pool,
        })
    }

    pub fn pca(&self) -> &P {
        &self.pca
    }

    pub fn combinators(&self) -> &Combinators<P::Elem> {
        &self.comb
    }

    pub fn budget(&self) -> SearchBudget {
        self.budget
    }

    pub fn construction_fuel(&self) -> Fuel {
        self.fuel
    }

    fn compile(
        &self,
        arity: usize,
        body: Expr<P::Elem>,
        fuel: Fuel,
        what: &str,
    ) -> Result<P::Elem> {
        let p = Polynomial::new(arity, body)?;
        compile(&self.pca, &p, fuel.max(self.fuel)).require(what)
    }

    fn c(&self, e: &P::Elem) -> Expr<P::Elem> {
        Expr::Const(e.clone())
    }

    fn check(&self, m: &P::Elem, pairs: &[(P::Elem, P::Elem)]) -> Status {
        super::realizes(self, m, pairs, self.budget.fuel)
    }
}

impl<P: Pca> Dco for InducedDco<P> {
    type Elem = P::Elem;
    type Member = P::Elem;

    fn eval(&self, m: &P::Elem, a: &P::Elem, fuel: Fuel) -> Verdict<P::Elem> {
        self.pca.apply(m, a, fuel)
    }

    fn identity(&self) -> Result<P::Elem> {
        Ok(self.comb.i.clone())
    }

    /// `compile(b · (a · x))`.
    fn compose(&self, first: &P::Elem, then: &P::Elem, fuel: Fuel) -> Result<P::Elem> {
        let body = Expr::app(self.c(then), Expr::app(self.c(first), Expr::Var(1)));
        self.compile(1, body, fuel, "composition witness")
    }

    /// Identity and constant seeds first, then small terms in canonical
    /// order. Never refutes unless the pairs are not functional.
    fn find_realizer(&self, pairs: &[(P::Elem, P::Elem)]) -> Search<P::Elem> {
        if conflict(pairs).is_some() {
            return Search::Refuted;
        }
        let id = &self.comb.i;
        if self.check(id, pairs) == Status::Pass {
            return Search::Found(id.clone());
        }
        if let Some((_, c)) = pairs.first() {
            if let Verdict::Value(kc) = self.pca.apply(&self.comb.k, c, self.fuel) {
                if self.check(&kc, pairs) == Status::Pass {
                    return Search::Found(kc);
                }
            }
        }
        for cand in &self.pool {
            if self.check(cand, pairs) == Status::Pass {
                return Search::Found(cand.clone());
            }
        }
        Search::Exhausted
    }

    fn carrier(&self) -> Option<Vec<P::Elem>> {
        None
    }

    fn show_elem(&self, a: &P::Elem) -> String {
        self.pca.show(a)
    }

    fn show_member(&self, m: &P::Elem) -> String {
        self.pca.show(m)
    }

    fn top(&self) -> Result<P::Elem> {
        Ok(self.comb.i.clone())
    }

    fn meet(&self, a: &P::Elem, b: &P::Elem, fuel: Fuel) -> Result<P::Elem> {
        self.comb.pair(&self.pca, a, b, fuel).require("pairing")
    }

    fn fst(&self) -> Result<P::Elem> {
        Ok(self.comb.p0.clone())
    }

    fn snd(&self) -> Result<P::Elem> {
        Ok(self.comb.p1.clone())
    }

    /// `compile(p · (a · x) · (b · x))`.
    fn pair(&self, a: &P::Elem, b: &P::Elem, fuel: Fuel) -> Result<P::Elem> {
        let body = Expr::app(
            Expr::app(self.c(&self.comb.p), Expr::app(self.c(a), Expr::Var(1))),
            Expr::app(self.c(b), Expr::Var(1)),
        );
        self.compile(1, body, fuel, "pairing witness")
    }

    fn constant(&self, c: &P::Elem, fuel: Fuel) -> Result<P::Elem> {
        self.pca
            .apply(&self.comb.k, c, fuel.max(self.fuel))
            .require("k · c")
    }

    fn universal(&self) -> Result<P::Elem> {
        Ok(self.universal.clone())
    }

    /// `compile(r · (p · x · y))` as a function of `x` and `y`.
    fn tilde(&self, r: &P::Elem, fuel: Fuel) -> Result<P::Elem> {
        let body = Expr::app(
            self.c(r),
            Expr::app(Expr::app(self.c(&self.comb.p), Expr::Var(1)), Expr::Var(2)),
        );
        self.compile(2, body, fuel, "tilde")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pca::SkPca;
    use crate::reduce::evaluate;
    use crate::term::Term;

    const FUEL: Fuel = 100_000;

    fn t(s: &str) -> Term {
        s.parse().unwrap()
    }

    fn dco() -> InducedDco<SkPca> {
        InducedDco::new(SkPca, FUEL).unwrap()
    }

    #[test]
    fn identity_and_k() {
        let d = dco();
        let id = d.identity().unwrap();
        for b in ["a", "S K", "K (S S)"] {
            assert_eq!(d.eval(&id, &t(b), FUEL), Verdict::Value(t(b)));
            assert!(d.eval(&Term::k(), &t(b), FUEL).is_value());
        }
    }

    #[test]
    fn composition_witness_of_identities() {
        let d = dco();
        let id = d.identity().unwrap();
        let g = d.compose(&id, &id, FUEL).unwrap();
        for b in ["a", "S K", "K (S S)", "S (K a) b"] {
            // Oracle: evaluate i (i x) directly.
            let direct = evaluate(&t(&alloc::format!("I (I ({b}))")), FUEL);
            assert_eq!(d.eval(&g, &t(b), FUEL), direct);
        }
    }

    #[test]
    fn realizer_search_finds_seeds_and_refutes_conflicts() {
        let d = dco();
        let pairs = [(t("a"), t("a")), (t("b"), t("b"))];
        assert_eq!(d.find_realizer(&pairs), Search::Found(Term::i()));
        let pairs = [(t("a"), t("c")), (t("b"), t("c"))];
        assert_eq!(d.find_realizer(&pairs), Search::Found(t("K c")));
        let pairs = [(t("a"), t("b")), (t("a"), t("c"))];
        assert_eq!(d.find_realizer(&pairs), Search::Refuted);
        // Needs a real search: x ↦ x S on S and K.
        let pairs = [(t("K"), t("K S")), (t("S"), t("S S"))];
        let found = d.find_realizer(&pairs).found().unwrap();
        assert_eq!(
            super::super::realizes(&d, &found, &pairs, FUEL),
            Status::Pass
        );
    }

    #[test]
    fn cartesian_laws_on_a_few_pairs() {
        let d = dco();
        for (a, b) in [("a", "b"), ("S K", "K"), ("K a", "S (K b)")] {
            let m = d.meet(&t(a), &t(b), FUEL).unwrap();
            assert_eq!(d.eval(&d.fst().unwrap(), &m, FUEL), Verdict::Value(t(a)));
            assert_eq!(d.eval(&d.snd().unwrap(), &m, FUEL), Verdict::Value(t(b)));
        }
    }
}
