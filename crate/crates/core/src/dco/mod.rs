//! Discrete combinatory objects: a carrier with a family of partial
//! endofunctions that contains the identity and is weakly closed under
//! composition.
//!
//! Two presentations are supported. [`FiniteDco`] lists its family
//! explicitly and answers every question by exhaustive search.
//! [`InducedDco`] is the family `{φ_a}` of a PCA, where `φ_a(b) = a · b`;
//! witnesses are compiled, and realizer search enumerates small terms
//! under a budget.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::verdict::{Error, Fuel, Result, Search, Status, Verdict};

pub mod catalog;
mod finite;
mod induced;
pub mod primrec;
mod reconstruct;

pub use finite::{
    all_functions, all_partial_functions, check_cartesian_shallow, check_dco_axioms,
    check_functional_completeness, check_product_universal, check_saturation, compose_graphs,
    constant_graph, contains_graph, graph_show, identity_graph, is_morphism, is_shallow,
    leq_morphisms, product, saturated_contains, Cartesian, Completeness, FiniteDco, Graph,
};
pub use induced::{InducedDco, SearchBudget};
pub use reconstruct::{
    check_reconstruction_iso, meet_all, poly_to_realizer, realizer_to_element, ReconstructedPca,
};

/// A DCO with decidable or semi-decidable family operations.
pub trait Dco {
    type Elem: Clone + Ord + Debug;
    /// Names a member of the family.
    type Member: Clone + PartialEq + Debug;

    fn eval(&self, m: &Self::Member, a: &Self::Elem, fuel: Fuel) -> Verdict<Self::Elem>;

    fn identity(&self) -> Result<Self::Member>;

    /// A member containing `then ∘ first`.
    fn compose(
        &self,
        first: &Self::Member,
        then: &Self::Member,
        fuel: Fuel,
    ) -> Result<Self::Member>;

    /// A member `β` with `β(x) = y` for every pair. Conflicting pairs are
    /// refuted outright.
    fn find_realizer(&self, pairs: &[(Self::Elem, Self::Elem)]) -> Search<Self::Member>;

    /// The carrier, when finite.
    fn carrier(&self) -> Option<Vec<Self::Elem>>;

    fn show_elem(&self, a: &Self::Elem) -> String {
        alloc::format!("{a:?}")
    }

    fn show_member(&self, m: &Self::Member) -> String {
        alloc::format!("{m:?}")
    }

    /// Whether definedness is decidable, so `Undefined` and refutations
    /// are trustworthy.
    fn is_finite(&self) -> bool {
        self.carrier().is_some()
    }

    fn top(&self) -> Result<Self::Elem> {
        Err(not_cartesian())
    }

    fn meet(&self, _a: &Self::Elem, _b: &Self::Elem, _fuel: Fuel) -> Result<Self::Elem> {
        Err(not_cartesian())
    }

    /// `λ` with `λ(a ∧ b) = a`.
    fn fst(&self) -> Result<Self::Member> {
        Err(not_cartesian())
    }

    /// `ρ` with `ρ(a ∧ b) = b`.
    fn snd(&self) -> Result<Self::Member> {
        Err(not_cartesian())
    }

    /// A member containing `∧ ∘ ⟨α, β⟩`.
    fn pair(&self, _a: &Self::Member, _b: &Self::Member, _fuel: Fuel) -> Result<Self::Member> {
        Err(not_cartesian())
    }

    /// A member containing the constant function at `c`.
    fn constant(&self, _c: &Self::Elem, _fuel: Fuel) -> Result<Self::Member> {
        Err(not_cartesian())
    }

    /// The universal function `@`.
    fn universal(&self) -> Result<Self::Member> {
        Err(not_complete())
    }

    /// The total `α̃` with `α(a ∧ b) ⪯ @(α̃(a) ∧ b)`.
    fn tilde(&self, _a: &Self::Member, _fuel: Fuel) -> Result<Self::Member> {
        Err(not_complete())
    }
}

fn not_cartesian() -> Error {
    Error::NotApplicable(String::from("no cartesian structure"))
}

fn not_complete() -> Error {
    Error::NotApplicable(String::from("no functional-completeness data"))
}

/// Checks `m(x) = y` for every pair. Exhaustion gives `Unknown`.
pub fn realizes<D: Dco>(d: &D, m: &D::Member, pairs: &[(D::Elem, D::Elem)], fuel: Fuel) -> Status {
    let mut st = Status::Pass;
    for (x, y) in pairs {
        st = st.and(match d.eval(m, x, fuel) {
            Verdict::Value(v) if &v == y => Status::Pass,
            Verdict::Exhausted { .. } => Status::Unknown,
            _ => Status::Fail,
        });
        if st == Status::Fail {
            break;
        }
    }
    st
}

/// First index where two pairs disagree on the output for one input.
pub fn conflict<E: PartialEq>(pairs: &[(E, E)]) -> Option<(usize, usize)> {
    for (i, (x, y)) in pairs.iter().enumerate() {
        for (j, (x2, y2)) in pairs.iter().enumerate().skip(i + 1) {
            if x == x2 && y != y2 {
                return Some((i, j));
            }
        }
    }
    None
}

/// `f ≤ g` for carrier-valued families over the same index set: a member
/// `β` with `β ∘ f = g`.
pub fn leq<D: Dco>(d: &D, f: &[D::Elem], g: &[D::Elem]) -> Search<D::Member> {
    assert_eq!(f.len(), g.len(), "predicates over different index sets");
    let pairs: Vec<_> = f.iter().cloned().zip(g.iter().cloned()).collect();
    d.find_realizer(&pairs)
}
