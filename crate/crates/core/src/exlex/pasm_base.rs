//! Partitioned assemblies as a base for the completion.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::checks::{
    check_exactness, closed_in_completion, discrete_in_completion, enough_projectives,
    gamma_nabla_completion, is_mono, is_projective,
};
use super::{Ex, ExObj, LexCategory};
use crate::dco::catalog::one_point_structure;
use crate::dco::{Dco, FiniteDco, InducedDco};
use crate::pasm::{
    check_wlcc, classify_object, generic_object, is_discrete, Mor, MorOf, Obj, ObjOf, PAsm,
};
use crate::pca::Pca;
use crate::poly::Expr;
use crate::report::Report;
use crate::verdict::{Error, Result, Search, Status};

impl<D: Dco> LexCategory for PAsm<'_, D> {
    type Obj = ObjOf<D>;
    type Mor = MorOf<D>;

    fn dom(&self, f: &MorOf<D>) -> ObjOf<D> {
        f.src.clone()
    }

    fn cod(&self, f: &MorOf<D>) -> ObjOf<D> {
        f.tgt.clone()
    }

    fn id(&self, x: &ObjOf<D>) -> Result<MorOf<D>> {
        PAsm::id(self, x)
    }

    fn compose(&self, f: &MorOf<D>, g: &MorOf<D>) -> Result<MorOf<D>> {
        PAsm::compose(self, f, g)
    }

    fn same(&self, f: &MorOf<D>, g: &MorOf<D>) -> bool {
        f == g
    }

    fn hom(&self, x: &ObjOf<D>, y: &ObjOf<D>) -> (Vec<MorOf<D>>, bool) {
        let h = PAsm::hom(self, x, y);
        let complete = h.complete();
        (h.found, complete)
    }

    /// Tries every choice of preimages pointwise, in order.
    fn lift(&self, w: &ObjOf<D>, r: &ObjOf<D>, legs: &[(MorOf<D>, MorOf<D>)]) -> Search<MorOf<D>> {
        let cands: Vec<Vec<usize>> = (0..w.len())
            .map(|p| {
                (0..r.len())
                    .filter(|&k| legs.iter().all(|(leg, t)| leg.map[k] == t.map[p]))
                    .collect()
            })
            .collect();
        if cands.iter().any(|c| c.is_empty()) {
            return Search::Refuted;
        }
        let mut choice = vec![0usize; w.len()];
        let mut exhausted = false;
        loop {
            let map: Vec<usize> = choice.iter().zip(&cands).map(|(&c, ks)| ks[c]).collect();
            match self.track(w, r, &map) {
                Search::Found(realizer) => {
                    return Search::Found(Mor {
                        src: w.clone(),
                        tgt: r.clone(),
                        map,
                        realizer,
                    })
                }
                Search::Exhausted => exhausted = true,
                Search::Refuted => {}
            }
            let mut k = 0;
            loop {
                if k == choice.len() {
                    return if exhausted {
                        Search::Exhausted
                    } else {
                        Search::Refuted
                    };
                }
                choice[k] += 1;
                if choice[k] < cands[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }

    fn terminal(&self) -> Result<ObjOf<D>> {
        PAsm::terminal(self)
    }

    fn bang(&self, x: &ObjOf<D>) -> Result<MorOf<D>> {
        PAsm::bang(self, x)
    }

    fn product(&self, x: &ObjOf<D>, y: &ObjOf<D>) -> Result<(ObjOf<D>, MorOf<D>, MorOf<D>)> {
        let p = PAsm::product(self, x, y)?;
        Ok((p.obj, p.fst, p.snd))
    }

    fn pairing(&self, f: &MorOf<D>, g: &MorOf<D>) -> Result<MorOf<D>> {
        let p = PAsm::product(self, &f.tgt, &g.tgt)?;
        PAsm::pairing(self, f, g, &p)
    }

    fn pullback(&self, f: &MorOf<D>, g: &MorOf<D>) -> Result<(ObjOf<D>, MorOf<D>, MorOf<D>)> {
        let p = PAsm::pullback(self, f, g)?;
        Ok((p.obj, p.fst, p.snd))
    }

    fn equalizer(&self, f: &MorOf<D>, g: &MorOf<D>) -> Result<MorOf<D>> {
        PAsm::equalizer(self, f, g)
    }

    fn objects(&self, bound: usize) -> Vec<ObjOf<D>> {
        PAsm::objects(self, bound)
    }

    fn relations(&self, x: &ObjOf<D>) -> Vec<ExObj<ObjOf<D>, MorOf<D>>> {
        partitions(x.len())
            .iter()
            .filter_map(|cl| canonical_relation(self, x, cl).ok())
            .collect()
    }

    fn gamma(&self, x: &ObjOf<D>) -> usize {
        x.len()
    }

    fn gamma_map(&self, f: &MorOf<D>) -> Vec<usize> {
        f.map.clone()
    }

    fn nabla(&self, n: usize) -> Result<ObjOf<D>> {
        PAsm::nabla(self, n)
    }

    fn realize(&self, x: &ObjOf<D>, y: &ObjOf<D>, map: Vec<usize>) -> Search<MorOf<D>> {
        self.track(x, y, &map).map(|realizer| Mor {
            src: x.clone(),
            tgt: y.clone(),
            map,
            realizer,
        })
    }

    fn show_obj(&self, x: &ObjOf<D>) -> String {
        PAsm::show_obj(self, x)
    }

    fn show_mor(&self, f: &MorOf<D>) -> String {
        PAsm::show_mor(self, f)
    }
}

/// Set partitions of `0..n` as class labels numbered by first occurrence.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let next = cur.iter().max().map_or(0, |m| m + 1);
        for c in 0..=next {
            cur.push(c);
            go(n, cur, out);
            cur.pop();
        }
    }
    go(n, &mut cur, &mut out);
    out
}

/// The equivalence relation with the given classes, as the pairs `(i, j)`
/// in one class with predicate `φi ∧ φj`; witnesses come from the
/// cartesian operations of the DCO.
pub fn canonical_relation<D: Dco>(
    c: &PAsm<'_, D>,
    x: &ObjOf<D>,
    classes: &[usize],
) -> Result<ExObj<ObjOf<D>, MorOf<D>>> {
    let d = c.dco();
    let fuel = c.fuel();
    let n = x.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| classes[i] == classes[j])
        .collect();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).expect("related");
    let mut pred = Vec::with_capacity(pairs.len());
    for &(i, j) in &pairs {
        pred.push(d.meet(&x.pred[i], &x.pred[j], fuel)?);
    }
    let rel = Obj::new(pred);
    let (fst, snd, id) = (d.fst()?, d.snd()?, d.identity()?);
    let r1 = c.mor_with(&rel, x, pairs.iter().map(|p| p.0).collect(), fst.clone())?;
    let r2 = c.mor_with(&rel, x, pairs.iter().map(|p| p.1).collect(), snd.clone())?;
    let refl = c.mor_with(
        x,
        &rel,
        (0..n).map(|i| index(i, i)).collect(),
        d.pair(&id, &id, fuel)?,
    )?;
    let sym = c.mor_with(
        &rel,
        &rel,
        pairs.iter().map(|&(i, j)| index(j, i)).collect(),
        d.pair(&snd, &fst, fuel)?,
    )?;
    let p = c.pullback(&r2, &r1)?;
    let map = (0..p.obj.len())
        .map(|k| index(r1.map[p.fst.map[k]], r2.map[p.snd.map[k]]))
        .collect();
    let realizer = d.pair(
        &d.compose(&fst, &fst, fuel)?,
        &d.compose(&snd, &snd, fuel)?,
        fuel,
    )?;
    let trans = c.mor_with(&p.obj, &rel, map, realizer)?;
    Ok(ExObj {
        base: x.clone(),
        rel,
        r1,
        r2,
        refl,
        sym,
        trans,
    })
}

/// The DCO with chosen finite limits for its partitioned assemblies, if
/// it has or admits them: declared cartesian data, or the unique data on
/// one atom.
pub fn lex_base(d: &FiniteDco) -> Option<FiniteDco> {
    if d.cartesian().is_some() {
        Some(d.clone())
    } else if d.size() == 1 {
        Some(one_point_structure(d.clone()))
    } else {
        None
    }
}

/// Discreteness of `d` in partitioned assemblies and of `embed(d)` in the
/// completion; the two verdicts must agree.
pub fn discrete_lift_check<D: Dco>(c: &PAsm<'_, D>, d: &ObjOf<D>, bound: usize) -> Report {
    let mut r = Report::new();
    let ex = Ex::new(c);
    let base = is_discrete(c, d, bound);
    let completion = match ex.embed(d) {
        Ok(e) => discrete_in_completion(&ex, &e, bound),
        Err(_) => Status::Unknown,
    };
    r.push("pasm", base, c.show_obj(d));
    r.push("completion", completion, "");
    let agree = if base == Status::Unknown || completion == Status::Unknown {
        Status::Unknown
    } else {
        Status::from_bool(base == completion)
    };
    r.push("agree", agree, format!("{base} / {completion}"));
    r
}

/// The four conditions characterizing realizability toposes, checked on
/// the completion of partitioned assemblies over a finite DCO.
pub fn audit_topos_conditions(d: &FiniteDco, fuel: u64, bound: usize) -> Report {
    let mut r = Report::new();
    let names = ["exact-lcc", "projectives", "gamma-nabla", "generic-object"];
    let Some(lex) = lex_base(d) else {
        let why = "partitioned assemblies have no chosen finite limits (no cartesian structure)";
        for n in names {
            r.push(n, Status::Fail, why);
        }
        return r;
    };
    let c = PAsm::new(&lex, fuel);
    let ex = Ex::new(&c);

    let exact = check_exactness(&ex, bound);
    let (wlcc, wdetail) = check_wlcc(&c, bound);
    r.push(
        "exact-lcc",
        exact.overall().and(wlcc),
        format!(
            "exactness {}, weak dependent products {wlcc} ({wdetail})",
            exact.overall()
        ),
    );
    r.extend_prefixed("exact-lcc", exact);

    let proj = enough_projectives(&ex, bound);
    r.push("projectives", proj.overall(), "");
    r.extend_prefixed("projectives", proj);

    let gn = gamma_nabla_completion(&ex, bound);
    let mut nabla_proj = Status::Pass;
    for n in 0..=bound {
        let st = match c.nabla(n).and_then(|x| ex.embed(&x)) {
            Ok(e) => is_projective(&ex, &e, bound),
            Err(_) => Status::Fail,
        };
        nabla_proj = nabla_proj.and(st);
    }
    r.push(
        "gamma-nabla",
        gn.overall().and(nabla_proj),
        format!("∇ lands in projectives: {nabla_proj}"),
    );
    r.extend_prefixed("gamma-nabla", gn);

    let g = generic_object(&lex);
    let cl = classify_object(&c, &g, bound);
    let mut st = cl.separated.and(cl.generic);
    let mut detail = format!("separated {}, generic {}", cl.separated, cl.generic);
    match ex.embed(&g) {
        Ok(eg) => {
            let dl = discrete_lift_check(&c, &g, bound);
            let disc = dl.status_of("completion").unwrap_or(Status::Unknown);
            let proj = is_projective(&ex, &eg, bound);
            let sep = match c.eta(&g).and_then(|eta| {
                let n = c.nabla(g.len())?;
                let en = ex.embed(&n)?;
                ex.mor(&eg, &en, eta)
                    .found()
                    .ok_or_else(|| Error::MissingWitness(String::from("η")))
            }) {
                Ok(eta) => is_mono(&ex, &eta),
                Err(_) => Status::Fail,
            };
            let mut closed_from_projectives = Status::Pass;
            for x in c.objects(bound) {
                let Ok(ex_x) = ex.embed(&x) else { continue };
                let mut best = Status::Fail;
                for m in ex.hom(&ex_x, &eg).classes {
                    match closed_in_completion(&ex, &m) {
                        Status::Pass => {
                            best = Status::Pass;
                            break;
                        }
                        Status::Unknown => best = Status::Unknown,
                        Status::Fail => {}
                    }
                }
                closed_from_projectives = closed_from_projectives.and(best);
            }
            st = st
                .and(disc)
                .and(dl.status_of("agree").unwrap_or(Status::Unknown))
                .and(proj)
                .and(sep)
                .and(closed_from_projectives);
            detail = format!(
                "{detail}, discrete {disc}, projective {proj}, separated in completion {sep}, \
                 closed maps from projectives {closed_from_projectives}"
            );
            r.extend_prefixed("generic-object/discrete", dl);
        }
        Err(e) => {
            st = Status::Fail;
            detail = format!("{detail}, embedding failed: {e}");
        }
    }
    r.push("generic-object", st, detail);
    r
}

/// Over a PCA: the full relation on `∇2` whose predicate records whether
/// the two points coincide. It is an equivalence relation and monic into
/// `∇2 × ∇2`, but its predicate cannot be realized from that of any
/// kernel pair, which on the full set is `⊤ ∧ ⊤` throughout.
pub fn kernel_pair_counterexample<P: Pca>(d: &InducedDco<P>, fuel: u64) -> Result<Report> {
    let c = PAsm::new(d, fuel);
    let pca = d.pca();
    let cb = d.combinators().clone();
    let (t, f) = (cb.k.clone(), pca.apply(&cb.k, &cb.i, fuel).require("k i")?);
    let top = d.top()?;
    let tt = d.meet(&top, &top, fuel)?;
    let x = c.nabla(2)?;
    let pairs = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let mut pred = Vec::new();
    for &(i, j) in &pairs {
        let b = if i == j { &t } else { &f };
        pred.push(d.meet(&tt, b, fuel)?);
    }
    let rel = Obj::new(pred);
    let (fst, snd) = (d.fst()?, d.snd()?);
    let r1 = c.mor_with(&rel, &x, vec![0, 0, 1, 1], d.compose(&fst, &fst, fuel)?)?;
    let r2 = c.mor_with(&rel, &x, vec![0, 1, 0, 1], d.compose(&fst, &snd, fuel)?)?;
    let index = |i: usize, j: usize| 2 * i + j;
    let k = Expr::Const;
    let refl = c.mor_with(&x, &rel, vec![0, 3], d.constant(&rel.pred[0], fuel)?)?;
    let sym = c.mor_with(&rel, &rel, vec![0, 2, 1, 3], d.identity()?)?;
    // z = (ρij, ρjk) ↦ p (p ⊤ ⊤) (xnor bij bjk), xnor x y = x y (y F T).
    let get =
        |first: &P::Elem| Expr::app(k(cb.p1.clone()), Expr::app(k(first.clone()), Expr::Var(1)));
    let (bij, bjk) = (get(&cb.p0), get(&cb.p1));
    let xnor = Expr::app(
        Expr::app(bij, bjk.clone()),
        Expr::app(Expr::app(bjk, k(f.clone())), k(t.clone())),
    );
    let body = Expr::app(Expr::app(k(cb.p.clone()), k(tt.clone())), xnor);
    let poly = crate::poly::Polynomial::new(1, body)?;
    let tr = crate::poly::compile(pca, &poly, fuel).require("transitivity")?;
    let pb = c.pullback(&r2, &r1)?;
    let map = (0..pb.obj.len())
        .map(|q| index(r1.map[pb.fst.map[q]], r2.map[pb.snd.map[q]]))
        .collect();
    let trans = c.mor_with(&pb.obj, &rel, map, tr)?;
    let obj = ExObj {
        base: x.clone(),
        rel: rel.clone(),
        r1,
        r2,
        refl,
        sym,
        trans,
    };
    let ex = Ex::new(&c);
    let mut r = Report::new();
    r.push(
        "equivalence-relation",
        ex.verify_obj(&obj),
        c.show_obj(&rel),
    );
    r.push("monic", Status::Pass, "injective on points");
    // Any kernel pair with this underlying set is X ×_Y X with a constant
    // map to Y, whose predicate is ⊤ ∧ ⊤ at every pair.
    let kernel = Obj::new(vec![tt; 4]);
    let iso = c.track(&kernel, &rel, &[0, 1, 2, 3]);
    r.push(
        "kernel-pair",
        match iso {
            Search::Found(_) => Status::Pass,
            Search::Refuted => Status::Fail,
            Search::Exhausted => Status::Unknown,
        },
        "no realizer from the kernel predicate to the relation",
    );
    Ok(r)
}
