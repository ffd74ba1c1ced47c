use proptest::prelude::*;

use realizability_core::dco::{
    catalog, check_dco_axioms, leq, product, Dco, FiniteDco, InducedDco,
};
use realizability_core::enumerate::{decode, encode};
use realizability_core::fam::{fiber_leq, reindex};
use realizability_core::pasm::PAsm;
use realizability_core::pca::standard_combinators;
use realizability_core::poly::{apply_all, compile, instantiate, Expr};
use realizability_core::term::View;
use realizability_core::{evaluate, kleene_le, Pca, Polynomial, SkPca, Status, Term, Verdict};

fn leaf() -> impl Strategy<Value = Term> {
    prop_oneof![
        Just(Term::s()),
        Just(Term::k()),
        Just(Term::i()),
        Just(Term::named("a")),
        Just(Term::named("b")),
    ]
}

fn term() -> impl Strategy<Value = Term> {
    leaf().prop_recursive(5, 12, 2, |inner| {
        (inner.clone(), inner).prop_map(|(f, x)| Term::app(f, x))
    })
}

fn normal_arg() -> impl Strategy<Value = Term> {
    term().prop_filter_map("needs a normal form", |t| evaluate(&t, 2_000).value())
}

/// Innermost reduction on trees, written independently of the library.
fn innermost(t: &Term, fuel: &mut u64) -> Option<Term> {
    let (head, args) = t.spine();
    let mut args: Vec<Term> = args
        .iter()
        .map(|a| innermost(a, fuel))
        .collect::<Option<_>>()?;
    let mut head = head;
    loop {
        let name = match head.view() {
            View::Atom(a) => a.to_string(),
            View::App(..) => unreachable!("spine heads are atoms"),
        };
        let need = match name.as_str() {
            "I" => 1,
            "K" => 2,
            "S" => 3,
            _ => usize::MAX,
        };
        if args.len() < need {
            return Some(head.apply_all(&args));
        }
        if *fuel == 0 {
            return None;
        }
        *fuel -= 1;
        let rest = args.split_off(need);
        let redex = match name.as_str() {
            "I" => args[0].clone(),
            "K" => args[0].clone(),
            _ => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let xz = innermost(&x.apply(z), fuel)?;
                let yz = innermost(&y.apply(z), fuel)?;
                innermost(&xz.apply(&yz), fuel)?
            }
        };
        let (h, a) = redex.spine();
        head = h;
        args = a;
        args.extend(rest);
    }
}

fn poly() -> impl Strategy<Value = Polynomial<Term>> {
    let leaf = prop_oneof![
        (1usize..=3).prop_map(Expr::Var),
        leaf().prop_map(Expr::Const),
    ];
    leaf.prop_recursive(3, 8, 2, |inner| {
        (inner.clone(), inner).prop_map(|(f, x)| Expr::app(f, x))
    })
    .prop_map(|body| Polynomial::new(3, body).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_forms_agree_with_innermost_reduction(t in term()) {
        let mut fuel = 20_000;
        if let (Verdict::Value(a), Some(b)) = (evaluate(&t, 20_000), innermost(&t, &mut fuel)) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn innermost_value_implies_normal_order_value(t in term()) {
        let mut fuel = 5_000;
        if innermost(&t, &mut fuel).is_some() {
            prop_assert!(evaluate(&t, 1_000_000).is_value());
        }
    }

    #[test]
    fn evaluation_is_idempotent(t in term()) {
        if let Verdict::Value(n) = evaluate(&t, 20_000) {
            prop_assert!(n.is_normal());
            prop_assert_eq!(evaluate(&n, 0), Verdict::Value(n.clone()));
        }
    }

    #[test]
    fn printing_round_trips(t in term()) {
        let back: Term = t.to_string().parse().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn normal_form_codes_round_trip(t in term()) {
        if let Verdict::Value(n) = evaluate(&t, 20_000) {
            if !n.has_named() {
                let n = n.expand_i();
                let code = encode(&n).unwrap();
                prop_assert_eq!(decode(&code), n);
            }
        }
    }

    #[test]
    fn compiled_polynomials_dominate_instances(
        t in poly(),
        a in normal_arg(),
        b in normal_arg(),
        c in normal_arg(),
    ) {
        let e = compile(&SkPca, &t, 10_000).value().unwrap();
        let args = [a, b, c];
        prop_assert!(apply_all(&SkPca, &e, &args[..2], 10_000).is_value());
        let direct = instantiate(&SkPca, &t, &args, 10_000);
        if direct.is_value() {
            prop_assert_eq!(kleene_le(&direct, &apply_all(&SkPca, &e, &args, 100_000)), Status::Pass);
        }
    }

    #[test]
    fn pairing_and_projections(a in normal_arg(), b in normal_arg()) {
        let c = standard_combinators(&SkPca, 1_000).unwrap();
        let p = c.pair(&SkPca, &a, &b, 1_000).value().unwrap();
        prop_assert_eq!(SkPca.apply(&c.p0, &p, 1_000), Verdict::Value(a.clone()));
        prop_assert_eq!(SkPca.apply(&c.p1, &p, 1_000), Verdict::Value(b.clone()));
        prop_assert_eq!(apply_all(&SkPca, &c.k, &[a.clone(), b], 1_000), Verdict::Value(a));
    }

    #[test]
    fn induced_meet_projects(a in normal_arg(), b in normal_arg()) {
        let d = InducedDco::new(SkPca, 10_000).unwrap();
        let m = d.meet(&a, &b, 10_000).unwrap();
        prop_assert_eq!(d.eval(&d.fst().unwrap(), &m, 10_000), Verdict::Value(a));
        prop_assert_eq!(d.eval(&d.snd().unwrap(), &m, 10_000), Verdict::Value(b));
    }
}

fn family() -> Vec<FiniteDco> {
    catalog::generated_family()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // The fiber order is reflexive and transitive and stable under reindexing.
    #[test]
    fn fiber_order_is_a_preorder(
        k in 0usize..1000,
        raw in proptest::collection::vec((0usize..3, 0usize..3, 0usize..3), 0..=3),
        f in proptest::collection::vec(0usize..3, 0..=3),
    ) {
        let fam = family();
        let d = &fam[k % fam.len()];
        let n = d.size();
        let phi: Vec<usize> = raw.iter().map(|x| x.0 % n).collect();
        let psi: Vec<usize> = raw.iter().map(|x| x.1 % n).collect();
        let chi: Vec<usize> = raw.iter().map(|x| x.2 % n).collect();
        prop_assert!(fiber_leq(d, &phi, &phi).is_found());
        if fiber_leq(d, &phi, &psi).is_found() && fiber_leq(d, &psi, &chi).is_found() {
            prop_assert!(fiber_leq(d, &phi, &chi).is_found());
        }
        if !phi.is_empty() && fiber_leq(d, &phi, &psi).is_found() {
            let f: Vec<usize> = f.iter().map(|&i| i % phi.len()).collect();
            prop_assert!(fiber_leq(d, &reindex(&phi, &f), &reindex(&psi, &f)).is_found());
        }
        prop_assert_eq!(leq(d, &phi, &psi).is_found(), fiber_leq(d, &phi, &psi).is_found());
    }

    #[test]
    fn composition_is_associative(k in 0usize..1000, seed in any::<u64>()) {
        let fam = family();
        let d = &fam[k % fam.len()];
        let c = PAsm::new(d, 10);
        let ms = c.morphisms(2);
        let f = &ms[(seed % ms.len() as u64) as usize];
        let after = |m: &realizability_core::pasm::Mor<usize, usize>, s: u64| {
            let next: Vec<_> = ms.iter().filter(|n| n.src == m.tgt).collect();
            next[(s % next.len() as u64) as usize].clone()
        };
        let g = after(f, seed.rotate_left(21));
        let h = after(&g, seed.rotate_left(42));
        {
            let left = c.compose(&c.compose(f, &g).unwrap(), &h).unwrap();
            let right = c.compose(f, &c.compose(&g, &h).unwrap()).unwrap();
            prop_assert_eq!(&left.map, &right.map);
            prop_assert_eq!(c.check_realizer(&left), Status::Pass);
        }
    }
}

#[test]
fn products_of_small_dcos_are_dcos() {
    let small: Vec<FiniteDco> = family()
        .into_iter()
        .filter(|d| d.size() <= 2)
        .take(6)
        .collect();
    for a in &small {
        for b in &small {
            assert_eq!(check_dco_axioms(&product(a, b)).overall(), Status::Pass);
        }
    }
}
