//! Small finite DCOs used as examples, fixtures and test families.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::finite::{
    all_partial_functions, check_dco_axioms, constant_graph, identity_graph, Cartesian,
    Completeness, FiniteDco, Graph,
};
use crate::verdict::Status;

/// Attaches the unique cartesian and completeness data of a one-atom DCO.
/// Panics on more atoms.
pub fn one_point_structure(d: FiniteDco) -> FiniteDco {
    assert_eq!(d.size(), 1, "one-point data needs exactly one atom");
    let tilde = vec![0; d.member_count()];
    d.with_cartesian(Cartesian {
        top: 0,
        meet: vec![vec![0]],
        lambda: 0,
        rho: 0,
        gamma: BTreeMap::new(),
    })
    .and_then(|d| {
        d.with_completeness(Completeness {
            universal: 0,
            tilde,
        })
    })
    .expect("one-point data is well formed")
}

/// `({•}, {id})` with its (unique) cartesian and completeness data.
pub fn trivial() -> FiniteDco {
    let d = FiniteDco::new(
        vec![String::from("*")],
        vec![(String::from("id"), vec![Some(0)])],
    )
    .expect("valid");
    one_point_structure(d)
}

/// `({•}, {id, ∅})`.
pub fn trivial_with_empty() -> FiniteDco {
    let d = FiniteDco::new(
        vec![String::from("*")],
        vec![
            (String::from("id"), vec![Some(0)]),
            (String::from("empty"), vec![None]),
        ],
    )
    .expect("valid");
    one_point_structure(d)
}

/// `({0, 1}, {id, c0})`.
pub fn const_zero() -> FiniteDco {
    FiniteDco::numbered(
        2,
        vec![("id", identity_graph(2)), ("c0", constant_graph(2, 0))],
    )
    .expect("valid")
}

/// `({0, 1}, {id})`.
pub fn two_identity() -> FiniteDco {
    FiniteDco::numbered(2, vec![("id", identity_graph(2))]).expect("valid")
}

/// `({0, 1}, {id, c0, c1})`, shallow but not cartesian.
pub fn two_constants() -> FiniteDco {
    FiniteDco::numbered(
        2,
        vec![
            ("id", identity_graph(2)),
            ("c0", constant_graph(2, 0)),
            ("c1", constant_graph(2, 1)),
        ],
    )
    .expect("valid")
}

/// `({0, 1}, {id, swap})`.
pub fn swap() -> FiniteDco {
    FiniteDco::numbered(
        2,
        vec![("id", identity_graph(2)), ("swap", vec![Some(1), Some(0)])],
    )
    .expect("valid")
}

/// `({0, 1}, {swap})`: no identity.
pub fn swap_only() -> FiniteDco {
    FiniteDco::numbered(2, vec![("swap", vec![Some(1), Some(0)])]).expect("valid")
}

/// `({0, 1, 2}, {id, c0, r})` with `r` the partial map `1 ↦ 2`.
pub fn three() -> FiniteDco {
    FiniteDco::numbered(
        3,
        vec![
            ("id", identity_graph(3)),
            ("c0", constant_graph(3, 0)),
            ("r", vec![None, Some(2), None]),
        ],
    )
    .expect("valid")
}

/// Every partial function on `n` atoms.
pub fn all_functions_dco(n: usize) -> FiniteDco {
    let members: Vec<(String, Graph)> = all_partial_functions(n)
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("f{i}"), g))
        .collect();
    FiniteDco::new((0..n).map(|i| format!("{i}")).collect(), members).expect("valid")
}

/// The named examples.
pub fn shipped() -> Vec<(&'static str, FiniteDco)> {
    vec![
        ("trivial", trivial()),
        ("trivial-empty", trivial_with_empty()),
        ("const-zero", const_zero()),
        ("two-identity", two_identity()),
        ("two-constants", two_constants()),
        ("swap", swap()),
        ("three", three()),
    ]
}

/// The fixed generators on `n` atoms: `id`, `∅`, every constant, the
/// cyclic shift (n ≥ 2) and the restriction of `id` to `{0}` (n ≥ 2).
pub fn generators(n: usize) -> Vec<(String, Graph)> {
    let mut g = vec![
        (String::from("id"), identity_graph(n)),
        (String::from("empty"), vec![None; n]),
    ];
    for c in 0..n {
        g.push((format!("c{c}"), constant_graph(n, c)));
    }
    if n >= 2 {
        g.push((
            String::from("cyc"),
            (0..n).map(|x| Some((x + 1) % n)).collect(),
        ));
        let mut r = vec![None; n];
        r[0] = Some(0);
        g.push((String::from("id0"), r));
    }
    g
}

/// Every DCO on 1 to 3 atoms whose family is `id` plus at most three
/// other generators and that satisfies the axioms.
pub fn generated_family() -> Vec<FiniteDco> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let gens = generators(n);
        let rest = &gens[1..];
        for mask in 0u32..(1 << rest.len()) {
            if mask.count_ones() > 3 {
                continue;
            }
            let mut members = vec![gens[0].clone()];
            for (i, g) in rest.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    members.push(g.clone());
                }
            }
            let d = FiniteDco::new((0..n).map(|i| format!("{i}")).collect(), members)
                .expect("generators are valid");
            if check_dco_axioms(&d).overall() == Status::Pass {
                out.push(d);
            }
        }
    }
    out
}
