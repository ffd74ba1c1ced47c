//! The family fibration: predicates `φ : I → A` on finite index sets,
//! ordered by `φ ≤ ψ` iff some family member `α` has `α ∘ φ = ψ`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::dco::{
    all_functions, all_partial_functions, leq, saturated_contains, Dco, FiniteDco, Graph,
};
use crate::report::Report;
use crate::verdict::{Search, Status};

/// `φ ≤ ψ` over the same index set.
pub fn fiber_leq<D: Dco>(d: &D, phi: &[D::Elem], psi: &[D::Elem]) -> Search<D::Member> {
    leq(d, phi, psi)
}

/// `φ ≅ ψ`: realizers in both directions.
pub fn equivalent<D: Dco>(
    d: &D,
    phi: &[D::Elem],
    psi: &[D::Elem],
) -> Search<(D::Member, D::Member)> {
    match (fiber_leq(d, phi, psi), fiber_leq(d, psi, phi)) {
        (Search::Found(a), Search::Found(b)) => Search::Found((a, b)),
        (Search::Refuted, _) | (_, Search::Refuted) => Search::Refuted,
        _ => Search::Exhausted,
    }
}

/// `f*φ = φ ∘ f`.
pub fn reindex<E: Clone>(phi: &[E], f: &[usize]) -> Vec<E> {
    f.iter().map(|&i| phi[i].clone()).collect()
}

/// All predicates `0..n → carrier`.
pub fn predicates<E: Clone>(carrier: &[E], n: usize) -> Vec<Vec<E>> {
    all_functions(n, carrier.len())
        .into_iter()
        .map(|f| reindex(carrier, &f))
        .collect()
}

/// A span `I ←e– J –f→ M` with `e` surjective, stored as the multiset of
/// pairs `(e j, f j)`; relabelings of `J` give the same span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    pub index: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl Span {
    pub fn e(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn f(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.1).collect()
    }
}

/// Spans with `|I|, |J| ≤ bound` into a set of size `m`, up to
/// relabeling of `J`.
pub fn spans(m: usize, bound: usize) -> Vec<Span> {
    let mut out = Vec::new();
    for i in 0..=bound {
        let cells: Vec<(usize, usize)> = (0..i).flat_map(|a| (0..m).map(move |b| (a, b))).collect();
        for j in i..=bound {
            if i == 0 && j > 0 {
                break;
            }
            // Non-decreasing index sequences of length j into `cells`.
            let mut idx = vec![0usize; j];
            loop {
                if j == 0 || !cells.is_empty() {
                    let pairs: Vec<(usize, usize)> = idx.iter().map(|&k| cells[k]).collect();
                    if (0..i).all(|a| pairs.iter().any(|p| p.0 == a)) {
                        out.push(Span { index: i, pairs });
                    }
                }
                if j == 0 || cells.is_empty() {
                    break;
                }
                let mut pos = j;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    if idx[pos] + 1 < cells.len() {
                        idx[pos] += 1;
                        for q in pos + 1..j {
                            idx[q] = idx[pos];
                        }
                        pos = usize::MAX;
                        break;
                    }
                }
                if pos != usize::MAX {
                    break;
                }
            }
        }
    }
    out
}

fn need_carrier<D: Dco>(d: &D, r: &mut Report, name: &str) -> Option<Vec<D::Elem>> {
    let c = d.carrier();
    if c.is_none() {
        r.push(name, Status::Fail, "needs a finite carrier");
    }
    c
}

/// The mediator `h` with `h ∘ e = f`, when `f` is constant on the fibers
/// of `e`.
pub fn mediator(span: &Span) -> Option<Vec<usize>> {
    let mut h: Vec<Option<usize>> = vec![None; span.index];
    for &(i, m) in &span.pairs {
        match h[i] {
            None => h[i] = Some(m),
            Some(prev) if prev != m => return None,
            _ => {}
        }
    }
    h.into_iter().collect()
}

/// Discreteness of `μ : M → A` against all spans and predicates at
/// `bound`: whenever `e*φ ≤ f*μ` the mediator exists and `φ ≤ h*μ`.
pub fn check_discrete<D: Dco>(d: &D, mu: &[D::Elem], bound: usize) -> Report {
    let mut r = Report::new();
    let Some(carrier) = need_carrier(d, &mut r, "discrete") else {
        return r;
    };
    let mut checked = 0usize;
    for span in spans(mu.len(), bound) {
        let e = span.e();
        let fmu = reindex(mu, &span.f());
        for phi in predicates(&carrier, span.index) {
            let lhs = fiber_leq(d, &reindex(&phi, &e), &fmu);
            if !lhs.is_found() {
                continue;
            }
            checked += 1;
            let ok = match mediator(&span) {
                Some(h) => fiber_leq(d, &phi, &reindex(mu, &h)).is_found(),
                None => false,
            };
            if !ok {
                r.push(
                    "discrete",
                    Status::Fail,
                    format!(
                        "span {:?} with predicate {}",
                        span.pairs,
                        show_pred(d, &phi)
                    ),
                );
                return r;
            }
        }
    }
    r.push("discrete", Status::Pass, format!("{checked} instances"));
    r
}

/// Every predicate at `bound` is `≅ f*μ` for some `f`.
pub fn check_generic<D: Dco>(d: &D, mu: &[D::Elem], bound: usize) -> Report {
    let mut r = Report::new();
    let Some(carrier) = need_carrier(d, &mut r, "generic") else {
        return r;
    };
    for n in 0..=bound {
        for phi in predicates(&carrier, n) {
            let found = all_functions(n, mu.len())
                .into_iter()
                .any(|f| equivalent(d, &phi, &reindex(mu, &f)).is_found());
            if !found {
                r.push(
                    "generic",
                    Status::Fail,
                    format!("no f with {} ≅ f*μ", show_pred(d, &phi)),
                );
                return r;
            }
        }
    }
    r.push("generic", Status::Pass, "");
    r
}

pub fn show_pred<D: Dco>(d: &D, phi: &[D::Elem]) -> String {
    let parts: Vec<String> = phi.iter().map(|a| d.show_elem(a)).collect();
    format!("({})", parts.join(","))
}

/// The DCO recovered from the indexed preorder `fam(d)` and its generic
/// predicate `μ = id_A`: a partial `α` belongs to it when, reading `α` as
/// the span `A ← dom α → A`, the two reindexings of `μ` compare.
pub struct IndexedDco<'a> {
    d: &'a FiniteDco,
}

pub fn dco_from_indexed(d: &FiniteDco) -> IndexedDco<'_> {
    IndexedDco { d }
}

impl IndexedDco<'_> {
    pub fn contains(&self, alpha: &Graph) -> bool {
        let mu: Vec<usize> = (0..self.d.size()).collect();
        let dom: Vec<usize> = (0..alpha.len()).filter(|&x| alpha[x].is_some()).collect();
        let image: Vec<usize> = dom.iter().map(|&x| alpha[x].expect("in domain")).collect();
        fiber_leq(self.d, &reindex(&mu, &dom), &reindex(&mu, &image)).is_found()
    }
}

/// Membership in the recovered DCO agrees with saturation, on every
/// partial function.
pub fn check_roundtrip(d: &FiniteDco) -> Report {
    let mut r = Report::new();
    let rec = dco_from_indexed(d);
    let mut disagreements = 0;
    let mut first = None;
    for g in all_partial_functions(d.size()) {
        if rec.contains(&g) != saturated_contains(d, &g) {
            disagreements += 1;
            first.get_or_insert(g);
        }
    }
    match first {
        None => r.push("roundtrip", Status::Pass, "0 discrepancies"),
        Some(g) => r.push(
            "roundtrip",
            Status::Fail,
            format!("{disagreements} discrepancies, first {g:?}"),
        ),
    }
    r
}

/// `f : A1 → A2` is a DCO morphism iff postcomposition with `f` is
/// monotone on every fiber at `bound`.
pub fn check_local_equivalence(d1: &FiniteDco, d2: &FiniteDco, bound: usize) -> Report {
    let mut r = Report::new();
    let carrier: Vec<usize> = (0..d1.size()).collect();
    let mut checked = 0;
    for f in all_functions(d1.size(), d2.size()) {
        let morphism = crate::dco::is_morphism(d1, d2, &f).is_some();
        let mut monotone = true;
        'outer: for n in 0..=bound {
            let preds = predicates(&carrier, n);
            for phi in &preds {
                for psi in &preds {
                    if fiber_leq(d1, phi, psi).is_found()
                        && !fiber_leq(d2, &reindex(&f, phi), &reindex(&f, psi)).is_found()
                    {
                        monotone = false;
                        break 'outer;
                    }
                }
            }
        }
        checked += 1;
        if morphism != monotone {
            r.push(
                "local-equivalence",
                Status::Fail,
                format!("f = {f:?}: morphism {morphism}, monotone {monotone}"),
            );
            return r;
        }
    }
    r.push(
        "local-equivalence",
        Status::Pass,
        format!("{checked} functions"),
    );
    r
}

/// When `f ≤ g` over `μ = id_A`, the span `A ←f– I –g→ A` is a partial
/// function in the saturation realizing `f ≤ g`.
pub fn check_order_reflection(d: &FiniteDco, bound: usize) -> Report {
    let mut r = Report::new();
    let carrier: Vec<usize> = (0..d.size()).collect();
    for n in 0..=bound {
        let preds = predicates(&carrier, n);
        for f in &preds {
            for g in &preds {
                if !fiber_leq(d, f, g).is_found() {
                    continue;
                }
                let mut sigma: Graph = vec![None; d.size()];
                let mut functional = true;
                for (&x, &y) in f.iter().zip(g) {
                    match sigma[x] {
                        Some(prev) if prev != y => functional = false,
                        _ => sigma[x] = Some(y),
                    }
                }
                let realizes = f.iter().zip(g).all(|(&x, &y)| sigma[x] == Some(y));
                if !(functional && realizes && saturated_contains(d, &sigma)) {
                    r.push(
                        "order-reflection",
                        Status::Fail,
                        format!("f = {f:?}, g = {g:?}"),
                    );
                    return r;
                }
            }
        }
    }
    r.push("order-reflection", Status::Pass, "");
    r
}
