//! The completion of partitioned assemblies over a PCA, queried on
//! explicitly given small objects. Every answer is three-valued.

use alloc::vec::Vec;

use super::checks::{factorize_regular, gamma, global_sections, RegularFactorization};
use super::pasm_base::canonical_relation;
use super::{Ex, ExHoms, ExObj};
use crate::dco::{Dco, InducedDco};
use crate::pasm::{MorOf, Obj, ObjOf, PAsm};
use crate::pca::Pca;
use crate::verdict::{Fuel, Result};

type D<P> = InducedDco<P>;
pub type RtObj<P> = ExObj<ObjOf<D<P>>, MorOf<D<P>>>;
pub type RtMor<P> = super::ExMor<ObjOf<D<P>>, MorOf<D<P>>>;

pub struct Rt<'d, P: Pca> {
    pasm: PAsm<'d, D<P>>,
}

impl<'d, P: Pca> Rt<'d, P> {
    pub fn new(d: &'d D<P>, fuel: Fuel) -> Rt<'d, P> {
        Rt {
            pasm: PAsm::new(d, fuel),
        }
    }

    pub fn pasm(&self) -> &PAsm<'d, D<P>> {
        &self.pasm
    }

    fn ex(&self) -> Ex<'_, PAsm<'d, D<P>>> {
        Ex::new(&self.pasm)
    }

    /// `(n, φ)` from explicit elements.
    pub fn object(&self, pred: Vec<P::Elem>) -> ObjOf<D<P>> {
        Obj::new(pred)
    }

    pub fn embed(&self, x: &ObjOf<D<P>>) -> Result<RtObj<P>> {
        self.ex().embed(x)
    }

    /// `x` modulo the equivalence relation with the given class labels.
    pub fn quotient(&self, x: &ObjOf<D<P>>, classes: &[usize]) -> Result<RtObj<P>> {
        canonical_relation(&self.pasm, x, classes)
    }

    pub fn terminal(&self) -> Result<RtObj<P>> {
        self.ex().terminal()
    }

    pub fn nabla(&self, n: usize) -> Result<RtObj<P>> {
        self.embed(&self.pasm.nabla(n)?)
    }

    pub fn hom(&self, x: &RtObj<P>, y: &RtObj<P>) -> ExHoms<ObjOf<D<P>>, MorOf<D<P>>> {
        self.ex().hom(x, y)
    }

    /// `Γ` by the coequalizer presentation.
    pub fn gamma(&self, x: &RtObj<P>) -> usize {
        gamma(&self.ex(), x)
    }

    /// Points `1 → X` up to `~`, and whether the count is exact.
    pub fn global_sections(&self, x: &RtObj<P>) -> Result<(usize, bool)> {
        global_sections(&self.ex(), x)
    }

    pub fn factorize_regular(
        &self,
        f: &RtMor<P>,
    ) -> Result<RegularFactorization<ObjOf<D<P>>, MorOf<D<P>>>> {
        factorize_regular(&self.ex(), f)
    }

    pub fn top(&self) -> Result<P::Elem> {
        self.pasm.dco().top()
    }
}
