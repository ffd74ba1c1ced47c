//! Fuel-bounded weak normalization, leftmost-outermost.
//!
//! The normalizer works on the shared term graph with an explicit stack,
//! so neither deep spines nor deep argument nesting touch the call stack.
//! A subterm that is normalized twice (because `S` duplicated it) is
//! looked up by node identity and reduced only once; fuel therefore
//! counts contractions on the graph, which never exceeds the tree count.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::term::{Atom, Term, View};
use crate::verdict::{Fuel, Verdict};

/// Normal form of `t`, or `Exhausted` if more than `fuel` contractions
/// would be needed.
pub fn evaluate(t: &Term, fuel: Fuel) -> Verdict<Term> {
    Normalizer {
        fuel,
        spent: 0,
        memo: BTreeMap::new(),
        keep: Vec::new(),
    }
    .run(t)
}

/// Applies `f` to `x` and normalizes.
pub fn apply(f: &Term, x: &Term, fuel: Fuel) -> Verdict<Term> {
    evaluate(&f.apply(x), fuel)
}

struct Normalizer {
    fuel: Fuel,
    spent: Fuel,
    memo: BTreeMap<usize, Term>,
    // Keeps memo keys alive so their addresses are never reused.
    keep: Vec<Term>,
}

struct Frame {
    origin: Term,
    head: Term,
    args: Vec<Term>,
    done: Vec<Term>,
}

struct OutOfFuel;

impl Normalizer {
    fn remember(&mut self, origin: &Term, nf: &Term) {
        self.memo.insert(origin.addr(), nf.clone());
        self.keep.push(origin.clone());
    }

    fn run(mut self, t: &Term) -> Verdict<Term> {
        let mut stack: Vec<Frame> = Vec::new();
        let mut current = t.clone();
        loop {
            let mut result = match self.memo.get(&current.addr()) {
                Some(nf) => nf.clone(),
                None => {
                    let (head, args) = match self.whnf(&current) {
                        Ok(x) => x,
                        Err(OutOfFuel) => return Verdict::Exhausted { spent: self.spent },
                    };
                    if args.is_empty() {
                        self.remember(&current, &head);
                        head
                    } else {
                        let first = args[0].clone();
                        stack.push(Frame {
                            origin: current.clone(),
                            head,
                            args,
                            done: Vec::new(),
                        });
                        current = first;
                        continue;
                    }
                }
            };
            loop {
                let Some(top) = stack.last_mut() else {
                    return Verdict::Value(result);
                };
                top.done.push(result);
                if top.done.len() < top.args.len() {
                    current = top.args[top.done.len()].clone();
                    break;
                }
                let frame = stack.pop().expect("non-empty");
                let nf = frame
                    .done
                    .iter()
                    .fold(frame.head.clone(), |acc, a| Term::app(acc, a.clone()));
                self.remember(&frame.origin, &nf);
                result = nf;
            }
        }
    }

    /// Reduces head redexes until the head atom is under-applied.
    /// Returns the head atom and its arguments in order.
    fn whnf(&mut self, t: &Term) -> Result<(Term, Vec<Term>), OutOfFuel> {
        // Arguments stored last-first, so the next argument is at the end.
        let mut rev: Vec<Term> = Vec::new();
        let mut head = t.clone();
        loop {
            head = unwind(head, &mut rev);
            let need = match head.as_atom() {
                Some(Atom::S) => 3,
                Some(Atom::K) => 2,
                Some(Atom::I) => 1,
                _ => usize::MAX,
            };
            if rev.len() < need {
                break;
            }
            if self.spent >= self.fuel {
                return Err(OutOfFuel);
            }
            self.spent += 1;
            match need {
                1 => {
                    head = rev.pop().expect("arity checked");
                }
                2 => {
                    let x = rev.pop().expect("arity checked");
                    rev.pop();
                    head = x;
                }
                _ => {
                    let x = rev.pop().expect("arity checked");
                    let y = rev.pop().expect("arity checked");
                    let z = rev.pop().expect("arity checked");
                    rev.push(Term::app(y, z.clone()));
                    rev.push(z);
                    head = x;
                }
            }
        }
        rev.reverse();
        Ok((head, rev))
    }
}

fn unwind(mut t: Term, rev: &mut Vec<Term>) -> Term {
    loop {
        let next = match t.view() {
            View::Atom(_) => return t,
            View::App(f, x) => {
                rev.push(x.clone());
                f.clone()
            }
        };
        t = next;
    }
}
