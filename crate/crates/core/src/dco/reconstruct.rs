//! From a shallow cartesian functionally complete DCO back to a PCA:
//! `a · b = @(a ∧ b)`, with combinators obtained by turning polynomials
//! into family members and members into elements.

use alloc::format;
use alloc::string::String;

use super::Dco;
use crate::pca::Pca;
use crate::poly::{Expr, Polynomial};
use crate::report::Report;
use crate::verdict::{kleene_le, Error, Fuel, Result, Status, Verdict};

fn to_verdict<T>(r: Result<T>) -> Verdict<T> {
    match r {
        Ok(v) => Verdict::Value(v),
        Err(Error::Exhausted { spent }) => Verdict::Exhausted { spent },
        Err(_) => Verdict::Undefined,
    }
}

/// `λ^k` followed by `ρ`, or just `λ^k` when `then_rho` is false.
fn strip<D: Dco>(d: &D, k: usize, then_rho: bool, fuel: Fuel) -> Result<D::Member> {
    let lambda = d.fst()?;
    let mut acc: Option<D::Member> = None;
    for _ in 0..k {
        acc = Some(match acc {
            None => lambda.clone(),
            Some(a) => d.compose(&a, &lambda, fuel)?,
        });
    }
    if !then_rho {
        return match acc {
            Some(a) => Ok(a),
            None => d.identity(),
        };
    }
    let rho = d.snd()?;
    match acc {
        None => Ok(rho),
        Some(a) => d.compose(&a, &rho, fuel),
    }
}

/// A member `α` with `t[a1, …, an] ⪯ α(⊤ ∧ a1 ∧ … ∧ an)`, the meets
/// nested to the left. Variables become `ρ ∘ λ^(n−i)`, constants become
/// constant members and applications become `@ ∘ γ` with `γ` a pairing
/// witness.
pub fn poly_to_realizer<D: Dco>(d: &D, t: &Polynomial<D::Elem>, fuel: Fuel) -> Result<D::Member> {
    fn go<D: Dco>(d: &D, e: &Expr<D::Elem>, n: usize, fuel: Fuel) -> Result<D::Member> {
        match e {
            Expr::Var(i) => strip(d, n - i, true, fuel),
            Expr::Const(c) => d.constant(c, fuel),
            Expr::App(u, v) => {
                let a = go(d, u, n, fuel)?;
                let b = go(d, v, n, fuel)?;
                let g = d.pair(&a, &b, fuel)?;
                d.compose(&g, &d.universal()?, fuel)
            }
        }
    }
    go(d, t.body(), t.arity(), fuel)
}

/// `α_n(⊤)` where `α_0 = α` and `α_(i+1) = α̃_i`; then
/// `α(⊤ ∧ a1 ∧ … ∧ an) ⪯ e · a1 · … · an`.
pub fn realizer_to_element<D: Dco>(
    d: &D,
    alpha: &D::Member,
    n: usize,
    fuel: Fuel,
) -> Result<D::Elem> {
    if n == 0 {
        return Err(Error::Invalid(String::from("arity must be positive")));
    }
    let mut a = alpha.clone();
    for _ in 0..n {
        a = d.tilde(&a, fuel)?;
    }
    d.eval(&a, &d.top()?, fuel).require("α_n(⊤)")
}

/// `⊤ ∧ a1 ∧ … ∧ an`.
pub fn meet_all<D: Dco>(d: &D, args: &[D::Elem], fuel: Fuel) -> Result<D::Elem> {
    let mut acc = d.top()?;
    for a in args {
        acc = d.meet(&acc, a, fuel)?;
    }
    Ok(acc)
}

/// The PCA with `a · b = @(a ∧ b)`.
pub struct ReconstructedPca<'a, D: Dco> {
    d: &'a D,
    universal: D::Member,
    k: D::Elem,
    s: D::Elem,
    i: D::Elem,
}

impl<'a, D: Dco> ReconstructedPca<'a, D> {
    pub fn new(d: &'a D, fuel: Fuel) -> Result<ReconstructedPca<'a, D>> {
        let element = |arity: usize, body: Expr<D::Elem>| -> Result<D::Elem> {
            let p = Polynomial::new(arity, body)?;
            let alpha = poly_to_realizer(d, &p, fuel)?;
            realizer_to_element(d, &alpha, arity, fuel)
        };
        let k = element(2, Expr::Var(1))?;
        let s = element(
            3,
            Expr::app(
                Expr::app(Expr::Var(1), Expr::Var(3)),
                Expr::app(Expr::Var(2), Expr::Var(3)),
            ),
        )?;
        let i = element(1, Expr::Var(1))?;
        Ok(ReconstructedPca {
            d,
            universal: d.universal()?,
            k,
            s,
            i,
        })
    }

    pub fn dco(&self) -> &D {
        self.d
    }
}

impl<D: Dco> Pca for ReconstructedPca<'_, D> {
    type Elem = D::Elem;

    fn apply(&self, a: &D::Elem, b: &D::Elem, fuel: Fuel) -> Verdict<D::Elem> {
        to_verdict(self.d.meet(a, b, fuel)).and_then(|m| self.d.eval(&self.universal, &m, fuel))
    }

    fn k(&self) -> D::Elem {
        self.k.clone()
    }

    fn s(&self) -> D::Elem {
        self.s.clone()
    }

    fn i(&self) -> D::Elem {
        self.i.clone()
    }

    fn show(&self, a: &D::Elem) -> String {
        self.d.show_elem(a)
    }
}

/// The comparison between the DCO and the one induced by its
/// reconstructed PCA, on probes: each `α ⊆ φ_e` with `e = (α ∘ ρ)~(⊤)`,
/// and each such `φ_e` is contained in `@ ∘ ⟨c_e, id⟩`.
pub fn check_reconstruction_iso<D: Dco>(
    d: &D,
    probes: &[D::Member],
    samples: &[D::Elem],
    fuel: Fuel,
) -> Report {
    let mut r = Report::new();
    let pca = match ReconstructedPca::new(d, fuel) {
        Ok(p) => p,
        Err(e) => {
            r.push("reconstruct", Status::Fail, format!("{e}"));
            return r;
        }
    };
    for (idx, alpha) in probes.iter().enumerate() {
        let built = (|| -> Result<(D::Elem, D::Member)> {
            let rho = d.snd()?;
            let ar = d.compose(&rho, alpha, fuel)?;
            let e = d.eval(&d.tilde(&ar, fuel)?, &d.top()?, fuel).require("e")?;
            let ce = d.constant(&e, fuel)?;
            let paired = d.pair(&ce, &d.identity()?, fuel)?;
            let rep = d.compose(&paired, &d.universal()?, fuel)?;
            Ok((e, rep))
        })();
        let (e, rep) = match built {
            Ok(x) => x,
            Err(Error::Exhausted { .. }) => {
                r.push(
                    format!("probe{idx}"),
                    Status::Unknown,
                    "construction ran out of fuel",
                );
                continue;
            }
            Err(err) => {
                r.push(format!("probe{idx}"), Status::Fail, format!("{err}"));
                continue;
            }
        };
        let mut inside = Status::Pass;
        let mut represented = Status::Pass;
        for a in samples {
            let lhs = d.eval(alpha, a, fuel);
            let phi = pca.apply(&e, a, fuel);
            inside = inside.and(kleene_le(&lhs, &phi));
            represented = represented.and(kleene_le(&phi, &d.eval(&rep, a, fuel)));
        }
        r.push(
            format!("probe{idx}/contained"),
            inside,
            format!("e = {}", d.show_elem(&e)),
        );
        r.push(format!("probe{idx}/represented"), represented, "");
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dco::{catalog, InducedDco};
    use crate::pca::SkPca;
    use crate::poly::apply_all;
    use crate::term::Term;

    const FUEL: Fuel = 100_000;

    fn t(s: &str) -> Term {
        s.parse().unwrap()
    }

    fn samples() -> alloc::vec::Vec<Term> {
        ["a", "b", "S K", "K (S K)", "S (K a)", "K K"]
            .iter()
            .map(|s| t(s))
            .collect()
    }

    #[test]
    fn variable_realizers() {
        let d = InducedDco::new(SkPca, FUEL).unwrap();
        let x = Polynomial::new(1, Expr::Var(1)).unwrap();
        let alpha = poly_to_realizer(&d, &x, FUEL).unwrap();
        assert_eq!(alpha, d.snd().unwrap());
        let first = Polynomial::new(2, Expr::Var(1)).unwrap();
        let alpha = poly_to_realizer(&d, &first, FUEL).unwrap();
        for a in samples() {
            let m = meet_all(&d, &[a.clone(), t("q")], FUEL).unwrap();
            assert_eq!(d.eval(&alpha, &m, FUEL), Verdict::Value(a));
        }
    }

    #[test]
    fn element_from_swap_polynomial() {
        let d = InducedDco::new(SkPca, FUEL).unwrap();
        let p = Polynomial::new(2, Expr::app(Expr::Var(2), Expr::Var(1))).unwrap();
        let alpha = poly_to_realizer(&d, &p, FUEL).unwrap();
        let e = realizer_to_element(&d, &alpha, 2, FUEL).unwrap();
        for a in samples() {
            for b in samples() {
                // Oracle: direct application b · a.
                let direct = SkPca.apply(&b, &a, FUEL);
                let got = apply_all(&SkPca, &e, &[a.clone(), b.clone()], FUEL);
                assert_eq!(kleene_le(&direct, &got), Status::Pass);
            }
        }
    }

    #[test]
    fn reconstructed_k_and_application() {
        let d = InducedDco::new(SkPca, FUEL).unwrap();
        let pca = ReconstructedPca::new(&d, FUEL).unwrap();
        for a in samples() {
            for b in samples() {
                let kab = apply_all(&pca, &pca.k(), &[a.clone(), b.clone()], FUEL);
                assert_eq!(kab, Verdict::Value(a.clone()));
                let orig = SkPca.apply(&a, &b, FUEL);
                assert_eq!(pca.apply(&a, &b, FUEL), orig);
            }
        }
    }

    #[test]
    fn trivial_dco_gives_one_point_pca() {
        let d = catalog::trivial();
        let pca = ReconstructedPca::new(&d, 10).unwrap();
        assert_eq!(pca.k(), 0);
        assert_eq!(pca.apply(&0, &0, 10), Verdict::Value(0));
        let r = check_reconstruction_iso(&d, &[0], &[0], 10);
        assert_eq!(r.overall(), Status::Pass);
    }

    #[test]
    fn iso_check_on_sk() {
        let d = InducedDco::new(SkPca, FUEL).unwrap();
        let probes = [Term::i(), t("K a"), t("S K K"), t("K")];
        let r = check_reconstruction_iso(&d, &probes, &samples(), FUEL);
        assert_eq!(r.overall(), Status::Pass, "{r:?}");
    }
}
