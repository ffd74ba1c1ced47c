//! Primitive-recursive programs as a shallow cartesian DCO on ℕ.
//!
//! The family is the unary programs; `a ∧ b` is Cantor pairing and the
//! projections are programs as well. There is no universal function.
//!
//! Evaluation counts one step per basic operation. Arithmetic overflow of
//! `u64` is reported as exhaustion, since it is a resource limit of the
//! interpreter rather than a property of the function.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{conflict, Dco};
use crate::verdict::{Fuel, Result, Search, Status, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Program {
    /// The zero function of the given arity.
    Zero(usize),
    Succ,
    /// `Proj(n, i)` returns the `i`-th (0-based) of `n` arguments.
    Proj(usize, usize),
    /// `h(g1(x⃗), …, gm(x⃗))`; the arity is given explicitly so that
    /// `m = 0` is meaningful.
    Comp(usize, Box<Program>, Vec<Program>),
    /// `f(0, y⃗) = g(y⃗)`, `f(n + 1, y⃗) = h(n, f(n, y⃗), y⃗)`.
    Rec(Box<Program>, Box<Program>),
}

use Program::*;

fn comp(h: Program, gs: Vec<Program>) -> Program {
    let arity = gs.first().map(Program::arity).unwrap_or(0);
    Comp(arity, Box::new(h), gs)
}

fn rec(g: Program, h: Program) -> Program {
    Rec(Box::new(g), Box::new(h))
}

impl Program {
    pub fn arity(&self) -> usize {
        match self {
            Zero(n) => *n,
            Succ => 1,
            Proj(n, _) => *n,
            Comp(n, _, _) => *n,
            Rec(g, _) => g.arity() + 1,
        }
    }

    /// Arity consistency of every node.
    pub fn well_formed(&self) -> bool {
        match self {
            Zero(_) | Succ => true,
            Proj(n, i) => i < n,
            Comp(n, h, gs) => {
                h.arity() == gs.len()
                    && h.well_formed()
                    && gs.iter().all(|g| g.arity() == *n && g.well_formed())
            }
            Rec(g, h) => h.arity() == g.arity() + 2 && g.well_formed() && h.well_formed(),
        }
    }

    /// Runs the program; `Exhausted` when out of steps or on overflow.
    pub fn run(&self, args: &[u64], fuel: Fuel) -> Verdict<u64> {
        let mut spent = 0;
        match self.go(args, fuel, &mut spent) {
            Some(v) => Verdict::Value(v),
            None => Verdict::Exhausted { spent },
        }
    }

    fn go(&self, args: &[u64], fuel: Fuel, spent: &mut Fuel) -> Option<u64> {
        if *spent >= fuel {
            return None;
        }
        *spent += 1;
        match self {
            Zero(_) => Some(0),
            Succ => args[0].checked_add(1),
            Proj(_, i) => Some(args[*i]),
            Comp(_, h, gs) => {
                let mut inner = Vec::with_capacity(gs.len());
                for g in gs {
                    inner.push(g.go(args, fuel, spent)?);
                }
                h.go(&inner, fuel, spent)
            }
            Rec(g, h) => {
                let n = args[0];
                let ys = &args[1..];
                let mut acc = g.go(ys, fuel, spent)?;
                let mut buf = vec![0u64; args.len() + 1];
                buf[2..].copy_from_slice(ys);
                for k in 0..n {
                    buf[0] = k;
                    buf[1] = acc;
                    acc = h.go(&buf, fuel, spent)?;
                }
                Some(acc)
            }
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Zero(n) => write!(f, "Z{n}"),
            Succ => write!(f, "S"),
            Proj(n, i) => write!(f, "P{n}.{i}"),
            Comp(_, h, gs) => {
                write!(f, "{h}(")?;
                for (i, g) in gs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, ")")
            }
            Rec(g, h) => write!(f, "R[{g}; {h}]"),
        }
    }
}

/// The unary identity.
pub fn id() -> Program {
    Proj(1, 0)
}

/// Unary constant `c`.
pub fn constant(c: u64) -> Program {
    let mut p = Zero(1);
    for _ in 0..c {
        p = comp(Succ, vec![p]);
    }
    p
}

/// `x + y`, recursing on `x`.
pub fn add() -> Program {
    rec(Proj(1, 0), comp(Succ, vec![Proj(3, 1)]))
}

/// `x · y`, recursing on `x`.
pub fn mul() -> Program {
    rec(Zero(1), comp(add(), vec![Proj(3, 2), Proj(3, 1)]))
}

pub fn pred() -> Program {
    rec(Zero(0), Proj(2, 0))
}

/// `x ∸ y`.
pub fn monus() -> Program {
    // sub(y, x) = x ∸ y recursing on y.
    let sub = rec(Proj(1, 0), comp(pred(), vec![Proj(3, 1)]));
    comp(sub, vec![Proj(2, 1), Proj(2, 0)])
}

/// `n (n + 1) / 2`.
pub fn triangle() -> Program {
    rec(
        Zero(0),
        comp(add(), vec![comp(Succ, vec![Proj(2, 0)]), Proj(2, 1)]),
    )
}

/// `1` if `x ≤ y`, else `0`.
fn leq_indicator() -> Program {
    let one = comp(Succ, vec![Zero(2)]);
    comp(monus(), vec![one, monus()])
}

/// Cantor pairing `T(a + b) + b`.
pub fn cantor() -> Program {
    comp(add(), vec![Proj(2, 1), comp(triangle(), vec![add()])])
}

/// `w(z) = max { w | T(w) ≤ z }`.
fn diagonal() -> Program {
    // w(n + 1) = w(n) + [T(w(n) + 1) ≤ n + 1]
    let next_t = comp(triangle(), vec![comp(Succ, vec![Proj(2, 1)])]);
    let step = comp(leq_indicator(), vec![next_t, comp(Succ, vec![Proj(2, 0)])]);
    rec(Zero(0), comp(add(), vec![step, Proj(2, 1)]))
}

/// Second component of the Cantor pair: `z ∸ T(w(z))`.
pub fn unpair_snd() -> Program {
    comp(monus(), vec![id(), comp(triangle(), vec![diagonal()])])
}

/// First component: `w(z) ∸ snd(z)`.
pub fn unpair_fst() -> Program {
    comp(monus(), vec![diagonal(), unpair_snd()])
}

/// Arithmetic reference for Cantor pairing.
pub fn cantor_arith(a: u64, b: u64) -> Option<u64> {
    let s = a.checked_add(b)?;
    s.checked_mul(s.checked_add(1)?)?
        .checked_div(2)?
        .checked_add(b)
}

/// The DCO of unary programs.
#[derive(Clone, Debug)]
pub struct PrimrecDco {
    /// Extra candidates tried by realizer search after the seeds.
    library: Vec<Program>,
    search_fuel: Fuel,
}

impl Default for PrimrecDco {
    fn default() -> PrimrecDco {
        PrimrecDco::new()
    }
}

impl PrimrecDco {
    pub fn new() -> PrimrecDco {
        PrimrecDco {
            library: vec![
                id(),
                Succ,
                comp(pred(), vec![id()]),
                comp(add(), vec![id(), id()]),
                comp(mul(), vec![id(), id()]),
                comp(triangle(), vec![id()]),
                unpair_fst(),
                unpair_snd(),
            ],
            search_fuel: 100_000,
        }
    }
}

impl Dco for PrimrecDco {
    type Elem = u64;
    type Member = Program;

    fn eval(&self, m: &Program, a: &u64, fuel: Fuel) -> Verdict<u64> {
        m.run(&[*a], fuel)
    }

    fn identity(&self) -> Result<Program> {
        Ok(id())
    }

    fn compose(&self, first: &Program, then: &Program, _fuel: Fuel) -> Result<Program> {
        Ok(comp(then.clone(), vec![first.clone()]))
    }

    fn find_realizer(&self, pairs: &[(u64, u64)]) -> Search<Program> {
        if conflict(pairs).is_some() {
            return Search::Refuted;
        }
        let mut seeds = Vec::new();
        if let Some(&(_, c)) = pairs.first() {
            seeds.push(constant(c));
        }
        for cand in seeds.iter().chain(&self.library) {
            if super::realizes(self, cand, pairs, self.search_fuel) == Status::Pass {
                return Search::Found(cand.clone());
            }
        }
        Search::Exhausted
    }

    fn carrier(&self) -> Option<Vec<u64>> {
        None
    }

    fn show_member(&self, m: &Program) -> String {
        alloc::format!("{m}")
    }

    fn top(&self) -> Result<u64> {
        Ok(0)
    }

    fn meet(&self, a: &u64, b: &u64, fuel: Fuel) -> Result<u64> {
        cantor().run(&[*a, *b], fuel).require("pairing")
    }

    fn fst(&self) -> Result<Program> {
        Ok(unpair_fst())
    }

    fn snd(&self) -> Result<Program> {
        Ok(unpair_snd())
    }

    fn pair(&self, a: &Program, b: &Program, _fuel: Fuel) -> Result<Program> {
        Ok(comp(cantor(), vec![a.clone(), b.clone()]))
    }

    fn constant(&self, c: &u64, _fuel: Fuel) -> Result<Program> {
        Ok(constant(*c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FUEL: Fuel = 50_000_000;

    #[test]
    fn library_is_well_formed() {
        for p in [
            add(),
            mul(),
            pred(),
            monus(),
            triangle(),
            cantor(),
            unpair_fst(),
            unpair_snd(),
        ] {
            assert!(p.well_formed(), "{p}");
        }
    }

    #[test]
    fn arithmetic_against_native() {
        for x in 0..12u64 {
            for y in 0..12u64 {
                assert_eq!(add().run(&[x, y], FUEL), Verdict::Value(x + y));
                assert_eq!(mul().run(&[x, y], FUEL), Verdict::Value(x * y));
                assert_eq!(
                    monus().run(&[x, y], FUEL),
                    Verdict::Value(x.saturating_sub(y))
                );
                assert_eq!(
                    cantor().run(&[x, y], FUEL),
                    Verdict::Value(cantor_arith(x, y).unwrap())
                );
            }
            assert_eq!(triangle().run(&[x], FUEL), Verdict::Value(x * (x + 1) / 2));
        }
    }

    #[test]
    fn unpairing_inverts_pairing() {
        let d = PrimrecDco::new();
        for a in 0..8u64 {
            for b in 0..8u64 {
                let z = d.meet(&a, &b, FUEL).unwrap();
                assert_eq!(d.eval(&d.fst().unwrap(), &z, FUEL), Verdict::Value(a));
                assert_eq!(d.eval(&d.snd().unwrap(), &z, FUEL), Verdict::Value(b));
            }
        }
    }

    #[test]
    fn constants_and_composition() {
        let d = PrimrecDco::new();
        assert_eq!(d.eval(&constant(5), &17, FUEL), Verdict::Value(5));
        assert_eq!(d.eval(&id(), &17, FUEL), Verdict::Value(17));
        let f = comp(add(), vec![id(), id()]);
        let g = Succ;
        let h = d.compose(&f, &g, FUEL).unwrap();
        for x in 0..20 {
            assert_eq!(d.eval(&h, &x, FUEL), Verdict::Value(2 * x + 1));
        }
    }

    #[test]
    fn out_of_fuel_is_exhausted() {
        assert!(mul().run(&[1000, 1000], 100).is_exhausted());
    }
}
