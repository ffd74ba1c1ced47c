//! Universal properties of the chosen limits, checked by counting
//! mediating maps against every cone from an object at a bound.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{MorOf, ObjOf, PAsm};
use crate::dco::Dco;
use crate::report::Report;
use crate::verdict::Status;

fn then(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&i| g[i]).collect()
}

/// Every cone `(a, b)` from `w` has exactly one mediator `u` with
/// `la ∘ u = a` and `lb ∘ u = b`; `cone` filters the admissible pairs.
fn unique_mediators<D: Dco>(
    c: &PAsm<'_, D>,
    w: &ObjOf<D>,
    apex: &ObjOf<D>,
    la: &MorOf<D>,
    lb: &MorOf<D>,
    cone: impl Fn(&[usize], &[usize]) -> bool,
) -> Status {
    let mut seen: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
    let hu = c.hom(w, apex);
    for u in &hu.found {
        *seen
            .entry((then(&u.map, &la.map), then(&u.map, &lb.map)))
            .or_default() += 1;
    }
    let ha = c.hom(w, &la.tgt);
    let hb = c.hom(w, &lb.tgt);
    let mut st = if hu.complete() && ha.complete() && hb.complete() {
        Status::Pass
    } else {
        Status::Unknown
    };
    for a in &ha.found {
        for b in &hb.found {
            if !cone(&a.map, &b.map) {
                continue;
            }
            if seen.get(&(a.map.clone(), b.map.clone())) != Some(&1) {
                st = Status::Fail;
            }
        }
    }
    st
}

/// Terminal object, binary products, equalizers and pullbacks over
/// objects at `bound`: set-level shape against direct computation, and
/// uniqueness of mediating maps.
pub fn check_limits<D: Dco>(c: &PAsm<'_, D>, bound: usize) -> Report {
    let mut r = Report::new();
    let objs = c.objects(bound);

    let st = match c.terminal() {
        Ok(one) => Status::from_bool(objs.iter().all(|x| c.hom(x, &one).found.len() == 1)),
        Err(e) => {
            r.push("terminal", Status::Fail, format!("{e}"));
            return r;
        }
    };
    r.push("terminal", st, format!("{} objects", objs.len()));

    let mut st = Status::Pass;
    let mut detail = String::new();
    'prod: for x in &objs {
        for y in &objs {
            let p = match c.product(x, y) {
                Ok(p) => p,
                Err(e) => {
                    st = Status::Fail;
                    detail = format!("{e}");
                    break 'prod;
                }
            };
            if p.obj.len() != x.len() * y.len() {
                st = Status::Fail;
                detail = format!(
                    "{} × {} has {} points",
                    c.show_obj(x),
                    c.show_obj(y),
                    p.obj.len()
                );
                break 'prod;
            }
            for w in &objs {
                st = st.and(unique_mediators(c, w, &p.obj, &p.fst, &p.snd, |_, _| true));
                if st == Status::Fail {
                    detail = format!(
                        "{} × {} from {}",
                        c.show_obj(x),
                        c.show_obj(y),
                        c.show_obj(w)
                    );
                    break 'prod;
                }
            }
        }
    }
    r.push("product", st, detail);

    let mut st = Status::Pass;
    let mut detail = String::new();
    'eq: for x in &objs {
        for y in &objs {
            let hs = c.hom(x, y).found;
            for f in &hs {
                for g in &hs {
                    let e = match c.equalizer(f, g) {
                        Ok(e) => e,
                        Err(err) => {
                            st = Status::Fail;
                            detail = format!("{err}");
                            break 'eq;
                        }
                    };
                    let oracle: Vec<usize> =
                        (0..x.len()).filter(|&i| f.map[i] == g.map[i]).collect();
                    if e.map != oracle {
                        st = Status::Fail;
                        detail = format!("equalizer of {:?} and {:?}", f.map, g.map);
                        break 'eq;
                    }
                    for w in &objs {
                        // Pair the inclusion with itself: a cone is any `h`
                        // with `f h = g h`, and mediators are maps into E.
                        let ok = unique_mediators(c, w, &e.src, &e, &e, |a, b| {
                            a == b && then(a, &f.map) == then(a, &g.map)
                        });
                        st = st.and(ok);
                        if st == Status::Fail {
                            detail = format!(
                                "equalizer of {:?} and {:?} from {}",
                                f.map,
                                g.map,
                                c.show_obj(w)
                            );
                            break 'eq;
                        }
                    }
                }
            }
        }
    }
    r.push("equalizer", st, detail);

    let mut st = Status::Pass;
    let mut detail = String::new();
    'pb: for z in &objs {
        for x in &objs {
            let fs = c.hom(x, z).found;
            for y in &objs {
                let gs = c.hom(y, z).found;
                for f in &fs {
                    for g in &gs {
                        let p = match c.pullback(f, g) {
                            Ok(p) => p,
                            Err(err) => {
                                st = Status::Fail;
                                detail = format!("{err}");
                                break 'pb;
                            }
                        };
                        let oracle = f
                            .map
                            .iter()
                            .map(|a| g.map.iter().filter(|&b| a == b).count())
                            .sum::<usize>();
                        if p.obj.len() != oracle {
                            st = Status::Fail;
                            detail = format!("pullback of {:?} and {:?}", f.map, g.map);
                            break 'pb;
                        }
                        for w in &objs {
                            let ok = unique_mediators(c, w, &p.obj, &p.fst, &p.snd, |a, b| {
                                then(a, &f.map) == then(b, &g.map)
                            });
                            st = st.and(ok);
                            if st == Status::Fail {
                                detail = format!(
                                    "pullback of {:?} and {:?} from {}",
                                    f.map,
                                    g.map,
                                    c.show_obj(w)
                                );
                                break 'pb;
                            }
                        }
                    }
                }
            }
        }
    }
    r.push("pullback", st, detail);
    r
}
