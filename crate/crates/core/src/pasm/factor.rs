//! Dense and closed maps, the dense-closed factorization, and
//! enumeration-based categorical tests (mono, epi, pullback squares).

use alloc::format;
use alloc::vec::Vec;

use super::{Mor, MorOf, Obj, PAsm};
use crate::dco::Dco;
use crate::fam::{equivalent, reindex};
use crate::report::Report;
use crate::verdict::{Result, Search, Status};

/// Dense: the underlying function is a bijection.
pub fn is_dense<E, M>(m: &Mor<E, M>) -> bool {
    let n = m.tgt.len();
    if m.map.len() != n {
        return false;
    }
    let mut seen = alloc::vec![false; n];
    for &j in &m.map {
        if seen[j] {
            return false;
        }
        seen[j] = true;
    }
    true
}

/// Closed: `φ ≅ f*ψ`.
pub fn is_closed<D: Dco>(c: &PAsm<'_, D>, m: &MorOf<D>) -> Status {
    match equivalent(c.dco(), &m.src.pred, &reindex(&m.tgt.pred, &m.map)) {
        Search::Found(_) => Status::Pass,
        Search::Refuted => Status::Fail,
        Search::Exhausted => Status::Unknown,
    }
}

#[derive(Clone, Debug)]
pub struct Factorization<E, M> {
    pub dense: Mor<E, M>,
    pub closed: Mor<E, M>,
}

/// `(I, φ) → (I, f*ψ) → (J, ψ)`.
pub fn factorize<D: Dco>(
    c: &PAsm<'_, D>,
    m: &MorOf<D>,
) -> Result<Factorization<D::Elem, D::Member>> {
    let mid = Obj::new(reindex(&m.tgt.pred, &m.map));
    let dense = Mor {
        src: m.src.clone(),
        tgt: mid.clone(),
        map: (0..m.src.len()).collect(),
        realizer: m.realizer.clone(),
    };
    let closed = Mor {
        src: mid,
        tgt: m.tgt.clone(),
        map: m.map.clone(),
        realizer: c.dco().identity()?,
    };
    Ok(Factorization { dense, closed })
}

fn then(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&i| g[i]).collect()
}

/// `m ∘ a = m ∘ b ⇒ a = b` for all `a, b : W → X` with `W` at `bound`.
pub fn is_mono<D: Dco>(c: &PAsm<'_, D>, m: &MorOf<D>, bound: usize) -> Status {
    let mut st = Status::Pass;
    for w in c.objects(bound) {
        let homs = c.hom(&w, &m.src);
        if !homs.complete() {
            st = Status::Unknown;
        }
        for a in &homs.found {
            for b in &homs.found {
                if a.map != b.map && then(&a.map, &m.map) == then(&b.map, &m.map) {
                    return Status::Fail;
                }
            }
        }
    }
    st
}

/// `a ∘ e = b ∘ e ⇒ a = b` for all `a, b : Y → Z` with `Z` at `bound`.
pub fn is_epi<D: Dco>(c: &PAsm<'_, D>, e: &MorOf<D>, bound: usize) -> Status {
    let mut st = Status::Pass;
    for z in c.objects(bound) {
        let homs = c.hom(&e.tgt, &z);
        if !homs.complete() {
            st = Status::Unknown;
        }
        for a in &homs.found {
            for b in &homs.found {
                if a.map != b.map && then(&e.map, &a.map) == then(&e.map, &b.map) {
                    return Status::Fail;
                }
            }
        }
    }
    st
}

/// The square `f ∘ pa = g ∘ pb` is a pullback against every cone from an
/// object at `bound`.
pub fn is_pullback_square<D: Dco>(
    c: &PAsm<'_, D>,
    pa: &MorOf<D>,
    pb: &MorOf<D>,
    f: &MorOf<D>,
    g: &MorOf<D>,
    bound: usize,
) -> Status {
    if then(&pa.map, &f.map) != then(&pb.map, &g.map) {
        return Status::Fail;
    }
    let mut st = Status::Pass;
    for w in c.objects(bound) {
        let hx = c.hom(&w, &f.src);
        let hy = c.hom(&w, &g.src);
        let hp = c.hom(&w, &pa.src);
        if !(hx.complete() && hy.complete() && hp.complete()) {
            st = Status::Unknown;
        }
        for x in &hx.found {
            for y in &hy.found {
                if then(&x.map, &f.map) != then(&y.map, &g.map) {
                    continue;
                }
                let n = hp
                    .found
                    .iter()
                    .filter(|u| then(&u.map, &pa.map) == x.map && then(&u.map, &pb.map) == y.map)
                    .count();
                if n != 1 {
                    return Status::Fail;
                }
            }
        }
    }
    st
}

/// Closedness as the pullback condition on the naturality square of `η`.
pub fn closed_by_pullback<D: Dco>(c: &PAsm<'_, D>, m: &MorOf<D>, bound: usize) -> Result<Status> {
    let ex = c.eta(&m.src)?;
    let ey = c.eta(&m.tgt)?;
    let nm = c.nabla_map(m.src.len(), m.tgt.len(), m.map.clone())?;
    Ok(is_pullback_square(c, m, &ex, &ey, &nm, bound))
}

/// Factorizations, both characterizations, 3-for-2 and pullback
/// stability of dense maps, over all morphisms at `bound`.
pub fn check_factorization<D: Dco>(c: &PAsm<'_, D>, bound: usize) -> Report {
    let mut r = Report::new();
    let mors = c.morphisms(bound);
    let d = c.dco();

    let mut fact = Status::Pass;
    let mut detail = format!("{} morphisms", mors.len());
    for m in &mors {
        let ok = match factorize(c, m) {
            Ok(fz) => {
                let composite = c.compose(&fz.dense, &fz.closed);
                let composite_ok = composite.as_ref().map(|k| k == m).unwrap_or(false);
                composite_ok
                    && is_dense(&fz.dense)
                    && is_closed(c, &fz.closed) == Status::Pass
                    && c.check_realizer(&fz.dense) == Status::Pass
                    && c.check_realizer(&fz.closed) == Status::Pass
            }
            Err(_) => false,
        };
        if !ok {
            fact = Status::Fail;
            detail = c.show_mor(m);
            break;
        }
    }
    r.push("factorization", fact, detail);

    // Γ = hom(1, −) agrees with the underlying set only with a terminal
    // object whose points reach every index.
    if let Ok(one) = c.terminal() {
        let shallow_points = c
            .objects(bound)
            .iter()
            .all(|x| c.hom(&one, x).found.len() == x.len());
        if shallow_points {
            let mut st = Status::Pass;
            let mut detail = alloc::string::String::new();
            for m in &mors {
                let pts_x = c.hom(&one, &m.src).found;
                let pts_y = c.hom(&one, &m.tgt).found;
                let image: Vec<usize> = pts_x.iter().map(|p| m.map[p.map[0]]).collect();
                let mut hit: Vec<usize> = image.clone();
                hit.sort_unstable();
                hit.dedup();
                let bij = hit.len() == image.len() && hit.len() == pts_y.len();
                if bij != is_dense(m) {
                    st = Status::Fail;
                    detail = c.show_mor(m);
                    break;
                }
            }
            r.push("dense-iff-gamma-bijective", st, detail);
        }
    }

    if c.eta(&Obj::new(Vec::new())).is_ok() {
        let mut st = Status::Pass;
        let mut detail = alloc::string::String::new();
        for m in &mors {
            let by_pred = is_closed(c, m);
            let by_square = closed_by_pullback(c, m, bound).unwrap_or(Status::Unknown);
            if by_pred != by_square {
                st = st.and(
                    if by_pred == Status::Unknown || by_square == Status::Unknown {
                        Status::Unknown
                    } else {
                        Status::Fail
                    },
                );
                if st == Status::Fail {
                    detail = c.show_mor(m);
                    break;
                }
            }
        }
        r.push("closed-iff-pullback", st, detail);
    }

    let mut st = Status::Pass;
    let mut detail = alloc::string::String::new();
    let mut triangles = 0usize;
    'outer: for f in &mors {
        for g in mors.iter().filter(|g| g.src == f.tgt) {
            triangles += 1;
            let gf = then(&f.map, &g.map);
            let gf_dense = is_dense(&Mor {
                src: f.src.clone(),
                tgt: g.tgt.clone(),
                map: gf,
                realizer: (),
            });
            let count = [is_dense(f), is_dense(g), gf_dense]
                .iter()
                .filter(|&&b| b)
                .count();
            if count == 2 {
                st = Status::Fail;
                detail = format!("{} then {}", c.show_mor(f), c.show_mor(g));
                break 'outer;
            }
        }
    }
    if st == Status::Pass {
        detail = format!("{triangles} triangles");
    }
    r.push("dense-three-for-two", st, detail);

    if d.top().and_then(|t| d.meet(&t, &t, c.fuel())).is_ok() {
        let mut st = Status::Pass;
        let mut detail = alloc::string::String::new();
        'stable: for m in mors.iter().filter(|m| is_dense(m)) {
            for g in mors.iter().filter(|g| g.tgt == m.tgt) {
                match c.pullback(m, g) {
                    Ok(pb) if is_dense(&pb.snd) => {}
                    _ => {
                        st = Status::Fail;
                        detail = format!("{} along {}", c.show_mor(m), c.show_mor(g));
                        break 'stable;
                    }
                }
            }
        }
        r.push("dense-pullback-stable", st, detail);
    }
    r
}
