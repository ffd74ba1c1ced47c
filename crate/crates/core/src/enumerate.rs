//! Canonical enumeration of closed `S`/`K` normal forms and the
//! size-then-lexicographic bijection with ℕ.
//!
//! Normal forms of leaf count `n` are, in order: `S`, `K` (only for
//! `n = 1`); then `K a`; then `S a`; then `S a b` grouped by the size of
//! `a`. Within a group, subterms are compared by their own rank. The
//! number of normal forms is `N(1) = 2` and, for `n ≥ 2`,
//! `N(n) = 2 N(n−1) + Σ_{i+j=n−1} N(i) N(j)`.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::term::{Atom, Term};

/// `N(0..=n)` with `N(0) = 0`.
pub fn counts(n: usize) -> Vec<BigUint> {
    let mut c: Vec<BigUint> = vec![BigUint::zero(); n.max(1) + 1];
    if n >= 1 {
        c[1] = BigUint::from(2u32);
    }
    for m in 2..=n {
        let mut total = &c[m - 1] * 2u32;
        for i in 1..m - 1 {
            total += &c[i] * &c[m - 1 - i];
        }
        c[m] = total;
    }
    c
}

enum Shape {
    S,
    K,
    Ka(Term),
    Sa(Term),
    Sab(Term, Term),
}

fn shape(t: &Term) -> Option<Shape> {
    let (head, args) = t.spine();
    match (head.as_atom()?, args.len()) {
        (Atom::S, 0) => Some(Shape::S),
        (Atom::K, 0) => Some(Shape::K),
        (Atom::K, 1) => Some(Shape::Ka(args[0].clone())),
        (Atom::S, 1) => Some(Shape::Sa(args[0].clone())),
        (Atom::S, 2) => Some(Shape::Sab(args[0].clone(), args[1].clone())),
        _ => None,
    }
}

fn size_of(t: &Term) -> Option<usize> {
    usize::try_from(t.size()).ok()
}

fn rank_within(t: &Term, c: &[BigUint]) -> Option<BigUint> {
    let m = size_of(t)?;
    Some(match shape(t)? {
        Shape::S => BigUint::zero(),
        Shape::K => BigUint::one(),
        Shape::Ka(a) => rank_within(&a, c)?,
        Shape::Sa(a) => &c[m - 1] + rank_within(&a, c)?,
        Shape::Sab(a, b) => {
            let sa = size_of(&a)?;
            let sb = size_of(&b)?;
            let mut r = &c[m - 1] * 2u32;
            for i in 1..sa {
                r += &c[i] * &c[m - 1 - i];
            }
            r + rank_within(&a, c)? * &c[sb] + rank_within(&b, c)?
        }
    })
}

/// Gödel number of an `S`/`K` normal form; `None` for anything else.
pub fn encode(t: &Term) -> Option<BigUint> {
    let m = size_of(t)?;
    let c = counts(m);
    let offset: BigUint = c[..m].iter().sum();
    Some(offset + rank_within(t, &c)?)
}

/// Inverse of [`encode`].
pub fn decode(n: &BigUint) -> Term {
    let mut c = counts(1);
    let mut rest = n.clone();
    let mut m = 1;
    loop {
        if rest < c[m] {
            break;
        }
        rest -= &c[m];
        m += 1;
        c = counts(m);
    }
    unrank(m, rest, &c)
}

fn unrank(m: usize, mut r: BigUint, c: &[BigUint]) -> Term {
    if m == 1 {
        return if r.is_zero() { Term::s() } else { Term::k() };
    }
    if r < c[m - 1] {
        return Term::k().apply(&unrank(m - 1, r, c));
    }
    r -= &c[m - 1];
    if r < c[m - 1] {
        return Term::s().apply(&unrank(m - 1, r, c));
    }
    r -= &c[m - 1];
    for i in 1..m - 1 {
        let j = m - 1 - i;
        let block = &c[i] * &c[j];
        if r < block {
            let a = &r / &c[j];
            let b = &r % &c[j];
            return Term::s().apply(&unrank(i, a, c)).apply(&unrank(j, b, c));
        }
        r -= block;
    }
    unreachable!("rank below N(m)")
}

/// All normal forms of exactly `n` leaves, in canonical order.
pub fn normal_forms_of_size(n: usize) -> Vec<Term> {
    let mut table: Vec<Vec<Term>> = vec![Vec::new()];
    for m in 1..=n {
        let mut row = Vec::new();
        if m == 1 {
            row.push(Term::s());
            row.push(Term::k());
        } else {
            for a in &table[m - 1] {
                row.push(Term::k().apply(a));
            }
            for a in &table[m - 1] {
                row.push(Term::s().apply(a));
            }
            for i in 1..m - 1 {
                for a in &table[i] {
                    for b in &table[m - 1 - i] {
                        row.push(Term::s().apply(a).apply(b));
                    }
                }
            }
        }
        table.push(row);
    }
    table.pop().unwrap_or_default()
}

/// All normal forms with at most `n` leaves, in canonical order.
pub fn normal_forms_up_to(n: usize) -> Vec<Term> {
    let mut out = Vec::new();
    for m in 1..=n {
        out.extend(normal_forms_of_size(m));
    }
    out
}

/// `encode` as a `u64`, when it fits.
pub fn encode_u64(t: &Term) -> Option<u64> {
    encode(t)?.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::cmp::Ordering;
    use std::vec::Vec;

    fn all_trees(n: usize) -> Vec<Term> {
        if n == 1 {
            return vec![Term::s(), Term::k()];
        }
        let mut out = Vec::new();
        for i in 1..n {
            for f in all_trees(i) {
                for x in all_trees(n - i) {
                    out.push(Term::app(f.clone(), x));
                }
            }
        }
        out
    }

    fn tag(t: &Term) -> u8 {
        match shape(t).unwrap() {
            Shape::S => 0,
            Shape::K => 1,
            Shape::Ka(_) => 2,
            Shape::Sa(_) => 3,
            Shape::Sab(..) => 4,
        }
    }

    fn canon(a: &Term, b: &Term) -> Ordering {
        a.size()
            .cmp(&b.size())
            .then(tag(a).cmp(&tag(b)))
            .then_with(|| match (shape(a).unwrap(), shape(b).unwrap()) {
                (Shape::Ka(x), Shape::Ka(y)) | (Shape::Sa(x), Shape::Sa(y)) => canon(&x, &y),
                (Shape::Sab(x1, y1), Shape::Sab(x2, y2)) => x1
                    .size()
                    .cmp(&x2.size())
                    .then_with(|| canon(&x1, &x2))
                    .then_with(|| canon(&y1, &y2)),
                _ => Ordering::Equal,
            })
    }

    #[test]
    fn counts_match_brute_force() {
        let c = counts(6);
        for n in 1..=6 {
            let brute = all_trees(n).into_iter().filter(|t| t.is_normal()).count();
            assert_eq!(c[n], BigUint::from(brute), "size {n}");
        }
    }

    #[test]
    fn encoding_matches_sorted_brute_force() {
        let mut all: Vec<Term> = (1..=5)
            .flat_map(all_trees)
            .filter(|t| t.is_normal())
            .collect();
        all.sort_by(canon);
        for (idx, t) in all.iter().enumerate() {
            assert_eq!(encode(t), Some(BigUint::from(idx)), "{t}");
            assert_eq!(&decode(&BigUint::from(idx)), t);
        }
        assert_eq!(normal_forms_up_to(5), all);
    }

    #[test]
    fn non_normal_terms_have_no_code() {
        assert_eq!(encode(&"K S K".parse().unwrap()), None);
        assert_eq!(encode(&"I".parse().unwrap()), None);
    }

    #[test]
    fn large_codes_round_trip() {
        let n = BigUint::from(10u32).pow(30);
        assert_eq!(encode(&decode(&n)), Some(n));
    }
}
