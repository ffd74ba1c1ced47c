use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::dco::{catalog, InducedDco};
use crate::pasm::{generic_object, Obj, PAsm};
use crate::pca::SkPca;
use crate::term::Term;
use crate::verdict::Status;

fn trivial_pasm(d: &crate::dco::FiniteDco) -> PAsm<'_, crate::dco::FiniteDco> {
    PAsm::new(d, 1000)
}

#[test]
fn partitions_are_bell_numbers() {
    let counts: Vec<usize> = (0..6).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 5, 15, 52]);
}

#[test]
fn completion_over_trivial_counts_like_finite_sets() {
    let d = catalog::trivial();
    let c = trivial_pasm(&d);
    let ex = Ex::new(&c);
    let objs = ex.objects(2);
    assert_eq!(objs.len(), 4);
    for x in &objs {
        assert_eq!(ex.verify_obj(x), Status::Pass);
        for y in &objs {
            let (nx, ny) = (gamma(&ex, x), gamma(&ex, y));
            let h = ex.hom(x, y);
            assert_eq!(h.unknown, 0);
            assert_eq!(
                h.classes.len(),
                ny.pow(nx as u32),
                "{} → {}",
                ex.show_obj(x),
                ex.show_obj(y)
            );
        }
    }
}

#[test]
fn unit_is_full_and_faithful() {
    for d in [catalog::trivial(), catalog::trivial_with_empty()] {
        let c = trivial_pasm(&d);
        let ex = Ex::new(&c);
        assert_eq!(check_unit_full_faithful(&ex, 2).overall(), Status::Pass);
    }
}

#[test]
fn embedded_terminal_is_terminal() {
    let d = catalog::trivial();
    let c = trivial_pasm(&d);
    let ex = Ex::new(&c);
    let one = ex.terminal().unwrap();
    for x in ex.objects(2) {
        assert_eq!(ex.hom(&x, &one).classes.len(), 1);
    }
}

#[test]
fn embedding_preserves_products() {
    let d = catalog::trivial();
    let c = trivial_pasm(&d);
    let ex = Ex::new(&c);
    for x in c.objects(2) {
        for y in c.objects(2) {
            let (p, _, _) = ex
                .product(&ex.embed(&x).unwrap(), &ex.embed(&y).unwrap())
                .unwrap();
            let q = ex.embed(&c.product(&x, &y).unwrap().obj).unwrap();
            assert_eq!(p.base, q.base);
            let id = c.id(&p.base).unwrap();
            let there = ex.mor(&p, &q, id.clone()).found().unwrap();
            let back = ex.mor(&q, &p, id).found().unwrap();
            assert_eq!(is_mono(&ex, &there), Status::Pass);
            assert_eq!(is_regular_epi(&ex, &there), Status::Pass);
            assert_eq!(is_mono(&ex, &back), Status::Pass);
        }
    }
}

#[test]
fn factorizations() {
    let d = catalog::trivial();
    let c = trivial_pasm(&d);
    let ex = Ex::new(&c);
    let two = ex.embed(&Obj::new(vec![0, 0])).unwrap();
    let id = ex.id(&two).unwrap();
    let fz = factorize_regular(&ex, &id).unwrap();
    for m in [&fz.epi, &fz.mono] {
        assert_eq!(is_mono(&ex, m), Status::Pass);
        assert_eq!(is_regular_epi(&ex, m), Status::Pass);
    }

    // 2 → 3 collapsing both points: image has one point.
    let three = ex.embed(&Obj::new(vec![0, 0, 0])).unwrap();
    let f = ex
        .mor(
            &two,
            &three,
            c.mor(&two.base, &three.base, vec![1, 1]).unwrap(),
        )
        .found()
        .unwrap();
    let fz = factorize_regular(&ex, &f).unwrap();
    assert_eq!(gamma(&ex, &fz.image), 1);
    assert_eq!(is_regular_epi(&ex, &fz.epi), Status::Pass);
    assert_eq!(is_mono(&ex, &fz.mono), Status::Pass);
    assert_eq!(is_mono(&ex, &f), Status::Fail);
    assert_eq!(is_regular_epi(&ex, &f), Status::Fail);
    assert_eq!(
        ex.same(&ex.compose(&fz.epi, &fz.mono).unwrap(), &f),
        Status::Pass
    );
}

#[test]
fn projectives_over_trivial() {
    let d = catalog::trivial();
    let c = trivial_pasm(&d);
    let ex = Ex::new(&c);
    let r = enough_projectives(&ex, 2);
    assert_eq!(r.overall(), Status::Pass, "{r:?}");
    // The full quotient of two points is covered by its presentation.
    let q = canonical_relation(&c, &Obj::new(vec![0, 0]), &[0, 0]).unwrap();
    let cover = ex.cover(&q).unwrap();
    assert_eq!(is_regular_epi(&ex, &cover), Status::Pass);
    assert_eq!(is_mono(&ex, &cover), Status::Fail);
}

#[test]
fn exactness_over_trivial() {
    let d = catalog::trivial();
    let c = trivial_pasm(&d);
    let ex = Ex::new(&c);
    let r = check_exactness(&ex, 2);
    assert_eq!(r.overall(), Status::Pass, "{r:?}");
    for name in [
        "factorization",
        "pullback-stable",
        "pushout",
        "kernel-pairs",
    ] {
        assert_eq!(r.status_of(name), Some(Status::Pass), "{name}");
    }
}

#[test]
fn base_has_an_equivalence_relation_that_is_no_kernel_pair() {
    let d = InducedDco::new(SkPca, 10_000).unwrap();
    let r = kernel_pair_counterexample(&d, 10_000).unwrap();
    assert_eq!(
        r.status_of("equivalence-relation"),
        Some(Status::Pass),
        "{r:?}"
    );
    assert_eq!(r.status_of("kernel-pair"), Some(Status::Fail));
}

#[test]
fn gamma_and_nabla_over_trivial() {
    let d = catalog::trivial();
    let c = trivial_pasm(&d);
    let ex = Ex::new(&c);
    let r = gamma_nabla_completion(&ex, 2);
    assert_eq!(r.overall(), Status::Pass, "{r:?}");
    let q = canonical_relation(&c, &Obj::new(vec![0, 0]), &[0, 0]).unwrap();
    assert_eq!(gamma(&ex, &q), 1);
    assert_eq!(global_sections(&ex, &q).unwrap(), (1, true));
}

#[test]
fn discreteness_over_trivial() {
    let d = catalog::trivial();
    let c = trivial_pasm(&d);
    // The generic object has one point and stays discrete.
    let r = discrete_lift_check(&c, &generic_object(&d), 2);
    assert_eq!(r.status_of("completion"), Some(Status::Pass));
    assert_eq!(r.status_of("agree"), Some(Status::Pass));
    // Two points: the surjection 2 → 1 is closed and admits no mediator
    // for the identity, in both categories.
    let r = discrete_lift_check(&c, &Obj::new(vec![0, 0]), 2);
    assert_eq!(r.status_of("pasm"), Some(Status::Fail));
    assert_eq!(r.status_of("completion"), Some(Status::Fail));
    assert_eq!(r.status_of("agree"), Some(Status::Pass));
    let r = discrete_lift_check(&c, &Obj::new(vec![]), 2);
    assert_eq!(r.status_of("completion"), Some(Status::Pass));
}

#[test]
fn closed_maps_in_completion_over_trivial() {
    let d = catalog::trivial();
    let c = trivial_pasm(&d);
    let ex = Ex::new(&c);
    for x in ex.objects(2) {
        for y in ex.objects(2) {
            for f in ex.hom(&x, &y).classes {
                assert_eq!(closed_in_completion(&ex, &f), Status::Pass);
            }
        }
    }
}

#[test]
fn topos_conditions_audit() {
    let r = audit_topos_conditions(&catalog::trivial(), 1000, 2);
    for name in ["exact-lcc", "projectives", "gamma-nabla", "generic-object"] {
        assert_eq!(r.status_of(name), Some(Status::Pass), "{name}: {r:?}");
    }
    let r = audit_topos_conditions(&catalog::two_identity(), 1000, 2);
    assert_eq!(r.status_of("exact-lcc"), Some(Status::Fail));
    assert!(r.records.iter().all(|rec| !rec.detail.is_empty()));
}

#[test]
fn lex_bases_are_one_point() {
    assert!(lex_base(&catalog::trivial()).is_some());
    assert!(lex_base(&catalog::const_zero()).is_none());
    let n = catalog::generated_family()
        .iter()
        .filter(|d| lex_base(d).is_some())
        .count();
    assert!(n >= 2);
}

#[test]
fn rt_queries() {
    let d = InducedDco::new(SkPca, 10_000).unwrap();
    let rt = Rt::new(&d, 10_000);
    let one = rt.terminal().unwrap();
    let h = rt.hom(&one, &one);
    assert_eq!((h.classes.len(), h.unknown), (1, 0));
    let n2 = rt.nabla(2).unwrap();
    assert_eq!(rt.global_sections(&n2).unwrap(), (2, true));
    assert_eq!(rt.gamma(&n2), 2);
    let x = rt.object(vec![Term::k(), Term::s()]);
    let q = rt.quotient(&x, &[0, 0]).unwrap();
    assert_eq!(rt.gamma(&q), 1);
    assert_eq!(rt.global_sections(&q).unwrap(), (1, true));
}
