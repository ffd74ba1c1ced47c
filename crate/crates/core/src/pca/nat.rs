//! The Gödel-numbered copy of the `S`/`K` algebra on ℕ.

use alloc::string::String;
use alloc::vec::Vec;
use num_bigint::BigUint;

use super::Pca;
use crate::enumerate::{decode, encode, normal_forms_up_to};
use crate::reduce::evaluate;
use crate::term::Term;
use crate::verdict::{Error, Fuel, Result, Verdict};

/// Application is decode, normalize, encode.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NatPca;

impl NatPca {
    pub fn encode(&self, t: &Term) -> Option<BigUint> {
        encode(&t.expand_i())
    }

    pub fn decode(&self, n: &BigUint) -> Term {
        decode(n)
    }
}

impl Pca for NatPca {
    type Elem = BigUint;

    fn apply(&self, a: &BigUint, b: &BigUint, fuel: Fuel) -> Verdict<BigUint> {
        evaluate(&decode(a).apply(&decode(b)), fuel)
            .map(|nf| encode(&nf).expect("normal forms of S/K terms are encodable"))
    }

    fn k(&self) -> BigUint {
        encode(&Term::k()).expect("normal")
    }

    fn s(&self) -> BigUint {
        encode(&Term::s()).expect("normal")
    }

    fn i(&self) -> BigUint {
        self.encode(&Term::i()).expect("normal")
    }

    fn interpret(&self, t: &Term, fuel: Fuel) -> Result<BigUint> {
        if t.has_named() {
            return Err(Error::Invalid(String::from(
                "named constants have no Gödel number",
            )));
        }
        let nf = evaluate(&t.expand_i(), fuel).require("term")?;
        Ok(encode(&nf).expect("normal"))
    }

    fn show(&self, a: &BigUint) -> String {
        alloc::format!("{a}")
    }

    fn candidates(&self, depth: usize, _fuel: Fuel) -> Vec<BigUint> {
        normal_forms_up_to(depth)
            .iter()
            .map(|t| encode(t).expect("normal"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_fixes_seven() {
        let pca = NatPca;
        let seven = BigUint::from(7u32);
        assert_eq!(pca.apply(&pca.i(), &seven, 100), Verdict::Value(seven));
    }

    #[test]
    fn k_is_total_on_small_numbers() {
        let pca = NatPca;
        for n in 0u32..200 {
            assert!(pca.apply(&pca.k(), &BigUint::from(n), 100).is_value());
        }
    }

    #[test]
    fn small_codes() {
        let pca = NatPca;
        assert_eq!(pca.s(), BigUint::from(0u32));
        assert_eq!(pca.k(), BigUint::from(1u32));
        // K K is the first size-2 form: offset 2 plus rank 1.
        assert_eq!(
            pca.encode(&"K K".parse().unwrap()),
            Some(BigUint::from(3u32))
        );
    }
}
