//! Partitioned assemblies over a DCO: objects `(I, φ)` with `I` a finite
//! index set `0..n` and `φ : I → A`; morphisms are functions `f` with
//! `φ ≤ f*ψ`, carrying the realizer found for that inequality.

mod audit;
mod factor;
mod limits;

pub use audit::{
    adjunction_check, audit_characterization, check_category_laws, check_wlcc, classify_object,
    dependent_product_oracle, generic_object, is_discrete, is_generic, is_separated,
    is_well_pointed, pointedness_equivalences, pointedness_equivalences_apply, reconstruct_fiber,
    wdp_universal_check, weak_dependent_product, Classification, DependentProduct,
};
pub use factor::{
    check_factorization, closed_by_pullback, factorize, is_closed, is_dense, is_epi, is_mono,
    is_pullback_square, Factorization,
};
pub use limits::check_limits;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::dco::{all_functions, leq, realizes, Dco};
use crate::fam::{predicates, reindex};
use crate::verdict::{Error, Fuel, Result, Search, Status};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Obj<E> {
    pub pred: Vec<E>,
}

impl<E> Obj<E> {
    pub fn new(pred: Vec<E>) -> Obj<E> {
        Obj { pred }
    }

    /// `|I|`, the underlying set, also `Γ` of the object.
    pub fn len(&self) -> usize {
        self.pred.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pred.is_empty()
    }
}

/// Equality ignores the realizer.
#[derive(Clone, Debug)]
pub struct Mor<E, M> {
    pub src: Obj<E>,
    pub tgt: Obj<E>,
    pub map: Vec<usize>,
    pub realizer: M,
}

impl<E: PartialEq, M> PartialEq for Mor<E, M> {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && self.src == other.src && self.tgt == other.tgt
    }
}

pub type ObjOf<D> = Obj<<D as Dco>::Elem>;
pub type MorOf<D> = Mor<<D as Dco>::Elem, <D as Dco>::Member>;

/// Morphisms found between two objects; `unknown` counts candidate
/// functions whose realizer search ran out of budget.
#[derive(Clone, Debug)]
pub struct Homs<M> {
    pub found: Vec<M>,
    pub unknown: usize,
}

impl<M> Homs<M> {
    pub fn complete(&self) -> bool {
        self.unknown == 0
    }
}

/// A product with its projections.
#[derive(Clone, Debug)]
pub struct Product<E, M> {
    pub obj: Obj<E>,
    pub fst: Mor<E, M>,
    pub snd: Mor<E, M>,
}

pub struct PAsm<'d, D: Dco> {
    d: &'d D,
    fuel: Fuel,
}

impl<'d, D: Dco> PAsm<'d, D> {
    pub fn new(d: &'d D, fuel: Fuel) -> PAsm<'d, D> {
        PAsm { d, fuel }
    }

    pub fn dco(&self) -> &'d D {
        self.d
    }

    pub fn fuel(&self) -> Fuel {
        self.fuel
    }

    pub fn show_obj(&self, x: &ObjOf<D>) -> String {
        crate::fam::show_pred(self.d, &x.pred)
    }

    pub fn show_mor(&self, m: &MorOf<D>) -> String {
        format!(
            "{} -{:?}-> {} by {}",
            self.show_obj(&m.src),
            m.map,
            self.show_obj(&m.tgt),
            self.d.show_member(&m.realizer)
        )
    }

    /// The realizer search for `f : X → Y`.
    pub fn track(&self, x: &ObjOf<D>, y: &ObjOf<D>, map: &[usize]) -> Search<D::Member> {
        assert_eq!(map.len(), x.len(), "map defined on the wrong index set");
        leq(self.d, &x.pred, &reindex(&y.pred, map))
    }

    pub fn mor(&self, x: &ObjOf<D>, y: &ObjOf<D>, map: Vec<usize>) -> Result<MorOf<D>> {
        match self.track(x, y, &map) {
            Search::Found(realizer) => Ok(Mor {
                src: x.clone(),
                tgt: y.clone(),
                map,
                realizer,
            }),
            Search::Refuted => Err(Error::MissingWitness(format!("{map:?} is not tracked"))),
            Search::Exhausted => Err(Error::Exhausted { spent: self.fuel }),
        }
    }

    /// A morphism with a realizer supplied by the caller, checked
    /// pointwise.
    pub fn mor_with(
        &self,
        x: &ObjOf<D>,
        y: &ObjOf<D>,
        map: Vec<usize>,
        realizer: D::Member,
    ) -> Result<MorOf<D>> {
        let pairs: Vec<_> = map
            .iter()
            .enumerate()
            .map(|(i, &j)| (x.pred[i].clone(), y.pred[j].clone()))
            .collect();
        match realizes(self.d, &realizer, &pairs, self.fuel) {
            Status::Pass => Ok(Mor {
                src: x.clone(),
                tgt: y.clone(),
                map,
                realizer,
            }),
            Status::Unknown => Err(Error::Exhausted { spent: self.fuel }),
            Status::Fail => Err(Error::Invalid(format!(
                "{} does not track {map:?}",
                self.d.show_member(&realizer)
            ))),
        }
    }

    /// Every function `I → J` with its realizer search.
    pub fn hom_candidates(
        &self,
        x: &ObjOf<D>,
        y: &ObjOf<D>,
    ) -> Vec<(Vec<usize>, Search<D::Member>)> {
        all_functions(x.len(), y.len())
            .into_iter()
            .map(|f| {
                let s = self.track(x, y, &f);
                (f, s)
            })
            .collect()
    }

    pub fn hom(&self, x: &ObjOf<D>, y: &ObjOf<D>) -> Homs<MorOf<D>> {
        let mut out = Homs {
            found: Vec::new(),
            unknown: 0,
        };
        for (map, s) in self.hom_candidates(x, y) {
            match s {
                Search::Found(realizer) => out.found.push(Mor {
                    src: x.clone(),
                    tgt: y.clone(),
                    map,
                    realizer,
                }),
                Search::Exhausted => out.unknown += 1,
                Search::Refuted => {}
            }
        }
        out
    }

    pub fn id(&self, x: &ObjOf<D>) -> Result<MorOf<D>> {
        Ok(Mor {
            src: x.clone(),
            tgt: x.clone(),
            map: (0..x.len()).collect(),
            realizer: self.d.identity()?,
        })
    }

    /// `g ∘ f`, with the composition witness of the DCO as realizer.
    pub fn compose(&self, f: &MorOf<D>, g: &MorOf<D>) -> Result<MorOf<D>> {
        if f.tgt != g.src {
            return Err(Error::Invalid(String::from("morphisms are not composable")));
        }
        Ok(Mor {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            map: f.map.iter().map(|&i| g.map[i]).collect(),
            realizer: self.d.compose(&f.realizer, &g.realizer, self.fuel)?,
        })
    }

    /// Whether the realizer really tracks the map.
    pub fn check_realizer(&self, m: &MorOf<D>) -> Status {
        let pairs: Vec<_> = m
            .map
            .iter()
            .enumerate()
            .map(|(i, &j)| (m.src.pred[i].clone(), m.tgt.pred[j].clone()))
            .collect();
        realizes(self.d, &m.realizer, &pairs, self.fuel)
    }

    pub fn terminal(&self) -> Result<ObjOf<D>> {
        Ok(Obj::new(vec![self.d.top()?]))
    }

    pub fn bang(&self, x: &ObjOf<D>) -> Result<MorOf<D>> {
        let top = self.terminal()?;
        let c = self.d.constant(&top.pred[0], self.fuel)?;
        self.mor_with(x, &top, vec![0; x.len()], c)
    }

    /// `∇(n) = (n, ⊤)`.
    pub fn nabla(&self, n: usize) -> Result<ObjOf<D>> {
        Ok(Obj::new(vec![self.d.top()?; n]))
    }

    /// The unit `η_X : X → ∇ΓX`.
    pub fn eta(&self, x: &ObjOf<D>) -> Result<MorOf<D>> {
        let nx = self.nabla(x.len())?;
        let c = self.d.constant(&self.d.top()?, self.fuel)?;
        self.mor_with(x, &nx, (0..x.len()).collect(), c)
    }

    /// `∇` on a function `f : m → n`.
    pub fn nabla_map(&self, m: usize, n: usize, f: Vec<usize>) -> Result<MorOf<D>> {
        let src = self.nabla(m)?;
        let tgt = self.nabla(n)?;
        self.mor_with(&src, &tgt, f, self.d.identity()?)
    }

    /// `(I × J, π₁*φ ∧ π₂*ψ)`; the pair `(i, j)` has index `i·|J| + j`.
    pub fn product(&self, x: &ObjOf<D>, y: &ObjOf<D>) -> Result<Product<D::Elem, D::Member>> {
        let mut pred = Vec::with_capacity(x.len() * y.len());
        for a in &x.pred {
            for b in &y.pred {
                pred.push(self.d.meet(a, b, self.fuel)?);
            }
        }
        let obj = Obj::new(pred);
        let n = y.len();
        let fst_map = (0..obj.len()).map(|k| k / n).collect();
        let snd_map = (0..obj.len()).map(|k| k % n).collect();
        Ok(Product {
            fst: self.mor_with(&obj, x, fst_map, self.d.fst()?)?,
            snd: self.mor_with(&obj, y, snd_map, self.d.snd()?)?,
            obj,
        })
    }

    /// `⟨f, g⟩ : Z → X × Y`.
    pub fn pairing(
        &self,
        f: &MorOf<D>,
        g: &MorOf<D>,
        prod: &Product<D::Elem, D::Member>,
    ) -> Result<MorOf<D>> {
        let n = g.tgt.len();
        let map = f.map.iter().zip(&g.map).map(|(&i, &j)| i * n + j).collect();
        let r = self.d.pair(&f.realizer, &g.realizer, self.fuel)?;
        self.mor_with(&f.src, &prod.obj, map, r)
    }

    /// The inclusion of `(U, m*φ)` with `U = {i | f i = g i}`.
    pub fn equalizer(&self, f: &MorOf<D>, g: &MorOf<D>) -> Result<MorOf<D>> {
        let u: Vec<usize> = (0..f.src.len()).filter(|&i| f.map[i] == g.map[i]).collect();
        let obj = Obj::new(reindex(&f.src.pred, &u));
        self.mor_with(&obj, &f.src, u, self.d.identity()?)
    }

    /// `{(i, j) | f i = g j}` in lexicographic order, with the meet
    /// predicate.
    pub fn pullback(&self, f: &MorOf<D>, g: &MorOf<D>) -> Result<Product<D::Elem, D::Member>> {
        let mut idx = Vec::new();
        let mut pred = Vec::new();
        for (i, &fi) in f.map.iter().enumerate() {
            for (j, &gj) in g.map.iter().enumerate() {
                if fi == gj {
                    idx.push((i, j));
                    pred.push(self.d.meet(&f.src.pred[i], &g.src.pred[j], self.fuel)?);
                }
            }
        }
        let obj = Obj::new(pred);
        Ok(Product {
            fst: self.mor_with(
                &obj,
                &f.src,
                idx.iter().map(|p| p.0).collect(),
                self.d.fst()?,
            )?,
            snd: self.mor_with(
                &obj,
                &g.src,
                idx.iter().map(|p| p.1).collect(),
                self.d.snd()?,
            )?,
            obj,
        })
    }

    /// All objects with `|I| ≤ bound` and every predicate, in canonical
    /// order; empty without a finite carrier.
    pub fn objects(&self, bound: usize) -> Vec<ObjOf<D>> {
        let Some(carrier) = self.d.carrier() else {
            return Vec::new();
        };
        (0..=bound)
            .flat_map(|n| predicates(&carrier, n))
            .map(Obj::new)
            .collect()
    }

    /// Every morphism between objects at `bound`.
    pub fn morphisms(&self, bound: usize) -> Vec<MorOf<D>> {
        let objs = self.objects(bound);
        let mut out = Vec::new();
        for x in &objs {
            for y in &objs {
                out.extend(self.hom(x, y).found);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dco::{catalog, InducedDco};
    use crate::pca::SkPca;
    use crate::term::Term;

    #[test]
    fn hom_examples() {
        let d = catalog::const_zero();
        let c = PAsm::new(&d, 10);
        let x = Obj::new(vec![0, 1]);
        let id = c.id(&x).unwrap();
        assert!(c.hom(&x, &x).found.contains(&id));
        assert!(c
            .hom(&Obj::new(vec![0]), &Obj::new(vec![1]))
            .found
            .is_empty());
        let t = catalog::trivial();
        let c = PAsm::new(&t, 10);
        assert_eq!(
            c.hom(&Obj::new(vec![0; 2]), &Obj::new(vec![0; 3]))
                .found
                .len(),
            9
        );
    }

    #[test]
    fn limits_over_trivial_match_sets() {
        let t = catalog::trivial();
        let c = PAsm::new(&t, 10);
        let x = Obj::new(vec![0; 2]);
        let y = Obj::new(vec![0; 3]);
        let p = c.product(&x, &y).unwrap();
        assert_eq!(p.obj.len(), 6);
        assert_eq!(p.fst.map, vec![0, 0, 0, 1, 1, 1]);
        assert_eq!(p.snd.map, vec![0, 1, 2, 0, 1, 2]);
        let f = c.mor(&y, &x, vec![0, 1, 0]).unwrap();
        let g = c.mor(&y, &x, vec![0, 0, 0]).unwrap();
        assert_eq!(c.equalizer(&f, &g).unwrap().map, vec![0, 2]);
        assert_eq!(c.equalizer(&f, &f).unwrap().map, vec![0, 1, 2]);
        let h = c.mor(&y, &x, vec![1, 0, 1]).unwrap();
        assert!(c.equalizer(&f, &h).unwrap().src.is_empty());
        let pb = c.pullback(&f, &g).unwrap();
        assert_eq!(pb.obj.len(), 6);
    }

    #[test]
    fn terminal_and_nabla() {
        let t = catalog::trivial();
        let c = PAsm::new(&t, 10);
        let one = c.terminal().unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(c.nabla(2).unwrap().len(), 2);
        let x = Obj::new(vec![0; 2]);
        assert_eq!(c.bang(&x).unwrap().map, vec![0, 0]);
        let d = catalog::two_identity();
        assert!(PAsm::new(&d, 10).terminal().is_err());
    }

    #[test]
    fn sk_product_realizers() {
        let d = InducedDco::new(SkPca, 100_000).unwrap();
        let c = PAsm::new(&d, 100_000);
        let t = |s: &str| -> Term { s.parse().unwrap() };
        let x = Obj::new(vec![t("a"), t("b")]);
        let y = Obj::new(vec![t("S K")]);
        let p = c.product(&x, &y).unwrap();
        assert_eq!(c.check_realizer(&p.fst), Status::Pass);
        assert_eq!(c.check_realizer(&p.snd), Status::Pass);
        let z = Obj::new(vec![t("c")]);
        let f = c
            .mor_with(&z, &x, vec![1], d.constant(&t("b"), 100_000).unwrap())
            .unwrap();
        let g = c
            .mor_with(&z, &y, vec![0], d.constant(&t("S K"), 100_000).unwrap())
            .unwrap();
        let h = c.pairing(&f, &g, &p).unwrap();
        assert_eq!(h.map, vec![1]);
        assert_eq!(c.compose(&h, &p.fst).unwrap(), f);
    }
}
