//! The exact completion of a category with finite limits, presented by
//! pseudo-equivalence relations: an object is `r1, r2 : R ⇉ X` with
//! reflexivity, symmetry and transitivity witnesses; a morphism is a base
//! map `f : X → X'` admitting a tracking `R → R'`, and `f ~ g` when some
//! `h : X → R'` has `r1' h = f` and `r2' h = g`.

mod checks;
mod pasm_base;
mod rt;
#[cfg(test)]
mod tests_pasm;

pub use checks::{
    check_exactness, check_unit_full_faithful, closed_in_completion, discrete_in_completion,
    enough_projectives, factorize_regular, gamma, gamma_nabla_completion, global_sections, is_mono,
    is_projective, is_regular_epi, projectives_closed, RegularFactorization,
};
pub use pasm_base::{
    audit_topos_conditions, canonical_relation, discrete_lift_check, kernel_pair_counterexample,
    lex_base, partitions,
};
pub use rt::Rt;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::verdict::{Error, Result, Search, Status};

/// A category with chosen finite limits, points `Γ` and codiscrete
/// objects `∇`, as far as the completion needs them.
pub trait LexCategory {
    type Obj: Clone + PartialEq + Debug;
    type Mor: Clone + Debug;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn id(&self, x: &Self::Obj) -> Result<Self::Mor>;
    /// `g ∘ f`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn same(&self, f: &Self::Mor, g: &Self::Mor) -> bool;
    /// All morphisms, and whether the list is known to be complete.
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> (Vec<Self::Mor>, bool);
    /// Some `h : w → r` with `leg ∘ h = target` for every `(leg, target)`.
    fn lift(
        &self,
        w: &Self::Obj,
        r: &Self::Obj,
        legs: &[(Self::Mor, Self::Mor)],
    ) -> Search<Self::Mor>;

    fn terminal(&self) -> Result<Self::Obj>;
    fn bang(&self, x: &Self::Obj) -> Result<Self::Mor>;
    /// The chosen product with its projections.
    fn product(&self, x: &Self::Obj, y: &Self::Obj) -> Result<(Self::Obj, Self::Mor, Self::Mor)>;
    /// `⟨f, g⟩` into the chosen product of the codomains.
    fn pairing(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn pullback(&self, f: &Self::Mor, g: &Self::Mor) -> Result<(Self::Obj, Self::Mor, Self::Mor)>;
    /// The inclusion of the equalizer.
    fn equalizer(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    /// Objects at `bound`, in canonical order.
    fn objects(&self, bound: usize) -> Vec<Self::Obj>;
    /// Pseudo-equivalence relations on `x` used to enumerate completion
    /// objects at a bound.
    fn relations(&self, x: &Self::Obj) -> Vec<ExObj<Self::Obj, Self::Mor>>;

    /// `Γx` as `0..n`.
    fn gamma(&self, x: &Self::Obj) -> usize;
    fn gamma_map(&self, f: &Self::Mor) -> Vec<usize>;
    fn nabla(&self, n: usize) -> Result<Self::Obj>;
    /// A morphism with the given action on points.
    fn realize(&self, x: &Self::Obj, y: &Self::Obj, map: Vec<usize>) -> Search<Self::Mor>;

    fn show_obj(&self, x: &Self::Obj) -> String;
    fn show_mor(&self, f: &Self::Mor) -> String;
}

#[derive(Clone, Debug)]
pub struct ExObj<O, M> {
    pub base: O,
    pub rel: O,
    pub r1: M,
    pub r2: M,
    /// `X → R` with `r1 ∘ refl = r2 ∘ refl = id`.
    pub refl: M,
    /// `R → R` swapping the legs.
    pub sym: M,
    /// From the pullback of `r2` against `r1` into `R`.
    pub trans: M,
}

#[derive(Clone, Debug)]
pub struct ExMor<O, M> {
    pub src: ExObj<O, M>,
    pub tgt: ExObj<O, M>,
    pub base: M,
    /// `R → R'` commuting with both legs.
    pub track: M,
}

pub type ExObjOf<C> = ExObj<<C as LexCategory>::Obj, <C as LexCategory>::Mor>;
pub type ExMorOf<C> = ExMor<<C as LexCategory>::Obj, <C as LexCategory>::Mor>;

/// Representatives of the `~`-classes of morphisms; `unknown` counts
/// candidates whose tracking or comparison was not decided.
#[derive(Clone, Debug)]
pub struct ExHoms<O, M> {
    pub classes: Vec<ExMor<O, M>>,
    pub unknown: usize,
}

fn search_to_result<T>(s: Search<T>, what: &str) -> Result<T> {
    match s {
        Search::Found(t) => Ok(t),
        Search::Refuted => Err(Error::MissingWitness(String::from(what))),
        Search::Exhausted => Err(Error::Exhausted { spent: 0 }),
    }
}

pub struct Ex<'c, C: LexCategory> {
    base: &'c C,
}

impl<'c, C: LexCategory> Ex<'c, C> {
    pub fn new(base: &'c C) -> Ex<'c, C> {
        Ex { base }
    }

    pub fn base(&self) -> &'c C {
        self.base
    }

    fn c(&self, f: &C::Mor, g: &C::Mor) -> Result<C::Mor> {
        self.base.compose(f, g)
    }

    pub fn show_obj(&self, x: &ExObjOf<C>) -> String {
        format!(
            "{} / {}",
            self.base.show_obj(&x.base),
            self.base.show_obj(&x.rel)
        )
    }

    /// The three witness equations.
    pub fn verify_obj(&self, x: &ExObjOf<C>) -> Status {
        let b = self.base;
        let check = || -> Result<bool> {
            let id = b.id(&x.base)?;
            let mut ok =
                b.same(&self.c(&x.refl, &x.r1)?, &id) && b.same(&self.c(&x.refl, &x.r2)?, &id);
            ok &= b.same(&self.c(&x.sym, &x.r1)?, &x.r2) && b.same(&self.c(&x.sym, &x.r2)?, &x.r1);
            let (p, q1, q2) = b.pullback(&x.r2, &x.r1)?;
            ok &= b.dom(&x.trans) == p
                && b.same(&self.c(&x.trans, &x.r1)?, &self.c(&q1, &x.r1)?)
                && b.same(&self.c(&x.trans, &x.r2)?, &self.c(&q2, &x.r2)?);
            Ok(ok)
        };
        match check() {
            Ok(ok) => Status::from_bool(ok),
            Err(Error::Exhausted { .. }) => Status::Unknown,
            Err(_) => Status::Fail,
        }
    }

    /// Finds the three witnesses by lifting.
    pub fn build_obj(
        &self,
        base: C::Obj,
        rel: C::Obj,
        r1: C::Mor,
        r2: C::Mor,
    ) -> Result<ExObjOf<C>> {
        let b = self.base;
        let id = b.id(&base)?;
        let refl = search_to_result(
            b.lift(&base, &rel, &[(r1.clone(), id.clone()), (r2.clone(), id)]),
            "reflexivity",
        )?;
        let sym = search_to_result(
            b.lift(
                &rel,
                &rel,
                &[(r1.clone(), r2.clone()), (r2.clone(), r1.clone())],
            ),
            "symmetry",
        )?;
        let (p, q1, q2) = b.pullback(&r2, &r1)?;
        let legs = [
            (r1.clone(), self.c(&q1, &r1)?),
            (r2.clone(), self.c(&q2, &r2)?),
        ];
        let trans = search_to_result(b.lift(&p, &rel, &legs), "transitivity")?;
        Ok(ExObj {
            base,
            rel,
            r1,
            r2,
            refl,
            sym,
            trans,
        })
    }

    /// `X ↦ (X, X, id, id)`.
    pub fn embed(&self, x: &C::Obj) -> Result<ExObjOf<C>> {
        let b = self.base;
        let id = b.id(x)?;
        let (_, q1, _) = b.pullback(&id, &id)?;
        Ok(ExObj {
            base: x.clone(),
            rel: x.clone(),
            r1: id.clone(),
            r2: id.clone(),
            refl: id.clone(),
            sym: id,
            trans: q1,
        })
    }

    /// A tracking of `f` from `x` to `y`.
    pub fn track(&self, x: &ExObjOf<C>, y: &ExObjOf<C>, f: &C::Mor) -> Search<C::Mor> {
        let legs = match (self.c(&x.r1, f), self.c(&x.r2, f)) {
            (Ok(a), Ok(b)) => [(y.r1.clone(), a), (y.r2.clone(), b)],
            _ => return Search::Refuted,
        };
        self.base.lift(&x.rel, &y.rel, &legs)
    }

    pub fn mor(&self, x: &ExObjOf<C>, y: &ExObjOf<C>, f: C::Mor) -> Search<ExMorOf<C>> {
        self.track(x, y, &f).map(|track| ExMor {
            src: x.clone(),
            tgt: y.clone(),
            base: f,
            track,
        })
    }

    /// A witness for `f ~ g`.
    pub fn equiv(&self, f: &ExMorOf<C>, g: &ExMorOf<C>) -> Search<C::Mor> {
        let y = &f.tgt;
        self.base.lift(
            &f.src.base,
            &y.rel,
            &[
                (y.r1.clone(), f.base.clone()),
                (y.r2.clone(), g.base.clone()),
            ],
        )
    }

    pub fn same(&self, f: &ExMorOf<C>, g: &ExMorOf<C>) -> Status {
        self.equiv(f, g).status()
    }

    pub fn id(&self, x: &ExObjOf<C>) -> Result<ExMorOf<C>> {
        Ok(ExMor {
            src: x.clone(),
            tgt: x.clone(),
            base: self.base.id(&x.base)?,
            track: self.base.id(&x.rel)?,
        })
    }

    /// `g ∘ f`.
    pub fn compose(&self, f: &ExMorOf<C>, g: &ExMorOf<C>) -> Result<ExMorOf<C>> {
        Ok(ExMor {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            base: self.c(&f.base, &g.base)?,
            track: self.c(&f.track, &g.track)?,
        })
    }

    /// Representatives of `hom(x, y)/~`.
    pub fn hom(&self, x: &ExObjOf<C>, y: &ExObjOf<C>) -> ExHoms<C::Obj, C::Mor> {
        let (cands, complete) = self.base.hom(&x.base, &y.base);
        let mut out = ExHoms {
            classes: Vec::new(),
            unknown: usize::from(!complete),
        };
        for f in cands {
            let m = match self.mor(x, y, f) {
                Search::Found(m) => m,
                Search::Refuted => continue,
                Search::Exhausted => {
                    out.unknown += 1;
                    continue;
                }
            };
            let mut fresh = true;
            for c in &out.classes {
                match self.same(&m, c) {
                    Status::Pass => {
                        fresh = false;
                        break;
                    }
                    Status::Unknown => out.unknown += 1,
                    Status::Fail => {}
                }
            }
            if fresh {
                out.classes.push(m);
            }
        }
        out
    }

    pub fn terminal(&self) -> Result<ExObjOf<C>> {
        self.embed(&self.base.terminal()?)
    }

    /// The relation on `o` relating two points when every leg sends them
    /// to related points; returns the relation, its legs, and for each
    /// leg the tracking into that leg's relation.
    pub fn relation_on(
        &self,
        o: &C::Obj,
        legs: &[(C::Mor, &ExObjOf<C>)],
    ) -> Result<(C::Obj, C::Mor, C::Mor, Vec<C::Mor>)> {
        let b = self.base;
        let (q, q1, q2) = b.product(o, o)?;
        let mut cur = q.clone();
        let mut into_q = b.id(&q)?;
        let mut tracks: Vec<C::Mor> = Vec::new();
        for (h, x) in legs {
            let a = self.c(&self.c(&into_q, &q1)?, h)?;
            let bb = self.c(&self.c(&into_q, &q2)?, h)?;
            let m1 = b.pairing(&a, &bb)?;
            let m2 = b.pairing(&x.r1, &x.r2)?;
            let (n, n1, n2) = b.pullback(&m1, &m2)?;
            for t in tracks.iter_mut() {
                *t = self.c(&n1, t)?;
            }
            tracks.push(n2);
            into_q = self.c(&n1, &into_q)?;
            cur = n;
        }
        let e1 = self.c(&into_q, &q1)?;
        let e2 = self.c(&into_q, &q2)?;
        debug_assert!(b.dom(&e1) == cur);
        Ok((cur, e1, e2, tracks))
    }

    pub fn product(
        &self,
        x: &ExObjOf<C>,
        y: &ExObjOf<C>,
    ) -> Result<(ExObjOf<C>, ExMorOf<C>, ExMorOf<C>)> {
        let (p, p1, p2) = self.base.product(&x.base, &y.base)?;
        let (rel, e1, e2, tracks) = self.relation_on(&p, &[(p1.clone(), x), (p2.clone(), y)])?;
        let obj = self.build_obj(p, rel, e1, e2)?;
        let f1 = ExMor {
            src: obj.clone(),
            tgt: x.clone(),
            base: p1,
            track: tracks[0].clone(),
        };
        let f2 = ExMor {
            src: obj,
            tgt: y.clone(),
            base: p2,
            track: tracks[1].clone(),
        };
        Ok((f1.src.clone(), f1, f2))
    }

    /// `⟨f, g⟩` into `prod`, whose base is the chosen base product.
    pub fn pairing(&self, f: &ExMorOf<C>, g: &ExMorOf<C>, prod: &ExObjOf<C>) -> Search<ExMorOf<C>> {
        match self.base.pairing(&f.base, &g.base) {
            Ok(h) => self.mor(&f.src, prod, h),
            Err(_) => Search::Refuted,
        }
    }

    /// `P = X ×_Z T ×_Z Y` related componentwise in `X` and `Y`.
    pub fn pullback(
        &self,
        f: &ExMorOf<C>,
        g: &ExMorOf<C>,
    ) -> Result<(ExObjOf<C>, ExMorOf<C>, ExMorOf<C>)> {
        let b = self.base;
        let z = &f.tgt;
        let (_, a1, a2) = b.pullback(&f.base, &z.r1)?;
        let (p, b1, b2) = b.pullback(&self.c(&a2, &z.r2)?, &g.base)?;
        let px = self.c(&b1, &a1)?;
        let (rel, e1, e2, tracks) =
            self.relation_on(&p, &[(px.clone(), &f.src), (b2.clone(), &g.src)])?;
        let obj = self.build_obj(p, rel, e1, e2)?;
        let m1 = ExMor {
            src: obj.clone(),
            tgt: f.src.clone(),
            base: px,
            track: tracks[0].clone(),
        };
        let m2 = ExMor {
            src: obj.clone(),
            tgt: g.src.clone(),
            base: b2,
            track: tracks[1].clone(),
        };
        Ok((obj, m1, m2))
    }

    /// `{(x, s) | s relates f x and g x}` with the relation of the source.
    pub fn equalizer(&self, f: &ExMorOf<C>, g: &ExMorOf<C>) -> Result<ExMorOf<C>> {
        let b = self.base;
        let y = &f.tgt;
        let m1 = b.pairing(&f.base, &g.base)?;
        let m2 = b.pairing(&y.r1, &y.r2)?;
        let (e, i, _) = b.pullback(&m1, &m2)?;
        let (rel, e1, e2, tracks) = self.relation_on(&e, &[(i.clone(), &f.src)])?;
        let obj = self.build_obj(e, rel, e1, e2)?;
        Ok(ExMor {
            src: obj,
            tgt: f.src.clone(),
            base: i,
            track: tracks[0].clone(),
        })
    }

    /// Completion objects at `bound`: each base object with each of its
    /// enumerated relations.
    pub fn objects(&self, bound: usize) -> Vec<ExObjOf<C>> {
        self.base
            .objects(bound)
            .iter()
            .flat_map(|x| self.base.relations(x))
            .collect()
    }

    /// The cover `embed(X) → (X, R)` with identity base.
    pub fn cover(&self, x: &ExObjOf<C>) -> Result<ExMorOf<C>> {
        let e = self.embed(&x.base)?;
        Ok(ExMor {
            src: e,
            tgt: x.clone(),
            base: self.base.id(&x.base)?,
            track: x.refl.clone(),
        })
    }
}

/// Union-find classes of `0..n` under the given pairs, numbered by first
/// occurrence.
pub fn classes(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (a, b) in pairs {
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut out = Vec::with_capacity(n);
    for x in 0..n {
        let r = find(&mut parent, x);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        out.push(label[r]);
    }
    out
}

/// The one-object, one-morphism category.
#[derive(Clone, Copy, Debug, Default)]
pub struct PointCategory;

impl LexCategory for PointCategory {
    type Obj = ();
    type Mor = ();

    fn dom(&self, _f: &()) {}
    fn cod(&self, _f: &()) {}
    fn id(&self, _x: &()) -> Result<()> {
        Ok(())
    }
    fn compose(&self, _f: &(), _g: &()) -> Result<()> {
        Ok(())
    }
    fn same(&self, _f: &(), _g: &()) -> bool {
        true
    }
    fn hom(&self, _x: &(), _y: &()) -> (Vec<()>, bool) {
        (vec![()], true)
    }
    fn lift(&self, _w: &(), _r: &(), _legs: &[((), ())]) -> Search<()> {
        Search::Found(())
    }
    fn terminal(&self) -> Result<()> {
        Ok(())
    }
    fn bang(&self, _x: &()) -> Result<()> {
        Ok(())
    }
    fn product(&self, _x: &(), _y: &()) -> Result<((), (), ())> {
        Ok(((), (), ()))
    }
    fn pairing(&self, _f: &(), _g: &()) -> Result<()> {
        Ok(())
    }
    fn pullback(&self, _f: &(), _g: &()) -> Result<((), (), ())> {
        Ok(((), (), ()))
    }
    fn equalizer(&self, _f: &(), _g: &()) -> Result<()> {
        Ok(())
    }
    fn objects(&self, _bound: usize) -> Vec<()> {
        vec![()]
    }
    fn relations(&self, _x: &()) -> Vec<ExObj<(), ()>> {
        vec![ExObj {
            base: (),
            rel: (),
            r1: (),
            r2: (),
            refl: (),
            sym: (),
            trans: (),
        }]
    }
    fn gamma(&self, _x: &()) -> usize {
        1
    }
    fn gamma_map(&self, _f: &()) -> Vec<usize> {
        vec![0]
    }
    fn nabla(&self, n: usize) -> Result<()> {
        if n == 1 {
            Ok(())
        } else {
            Err(Error::NotApplicable(String::from("only ∇1 exists")))
        }
    }
    fn realize(&self, _x: &(), _y: &(), map: Vec<usize>) -> Search<()> {
        if map == [0] {
            Search::Found(())
        } else {
            Search::Refuted
        }
    }
    fn show_obj(&self, _x: &()) -> String {
        String::from("•")
    }
    fn show_mor(&self, _f: &()) -> String {
        String::from("id")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn completion_of_the_point() {
        let ex = Ex::new(&PointCategory);
        let objs = ex.objects(2);
        assert_eq!(objs.len(), 1);
        let t = ex.terminal().unwrap();
        assert_eq!(ex.verify_obj(&t), Status::Pass);
        assert_eq!(ex.hom(&t, &t).classes.len(), 1);
        let (p, _, _) = ex.product(&t, &t).unwrap();
        assert_eq!(ex.verify_obj(&p), Status::Pass);
    }

    #[test]
    fn union_find_classes() {
        assert_eq!(classes(4, [(1, 3)]), vec![0, 1, 2, 1]);
        assert_eq!(classes(3, [(2, 0), (0, 1)]), vec![0, 0, 0]);
        assert_eq!(classes(0, []), Vec::<usize>::new());
    }
}
