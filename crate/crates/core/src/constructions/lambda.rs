//! The functor `Λ: A → End(A)`, `A ↦ L^A`.
//!
//! `Λ̆_{A,B}` has components `𝓡_{A,B,X}`, `Λ̃_{A,B}` has components
//! `a⁻¹_{A,B,X}`, and the unit isomorphisms are `l_X` and `R̂^X`.

use super::end::{EndCat, EndMorOf, EndObOf, MorExpr};
use crate::ann::derive_zero_isos;
use crate::engine::{AnnStructure, CategoryOps, Op};
use crate::error::{ConstructionError, EvalError};
use crate::report::Report;
use crate::structures::{check_ac_functor, check_au_functor, check_faithful, MonoidalFunctor};
use std::collections::HashMap;
use std::sync::Arc;

type Ob<B> = <B as CategoryOps>::Ob;
type Mor<B> = <B as CategoryOps>::Mor;

pub struct Lambda<'e, 'b, B: AnnStructure> {
    end: &'e EndCat<'b, B>,
    rhat: Arc<HashMap<Ob<B>, Mor<B>>>,
}

/// Fails when the zero isomorphisms `R̂` cannot be derived on the base.
pub fn build_lambda<'e, 'b, B: AnnStructure>(end: &'e EndCat<'b, B>) -> Result<Lambda<'e, 'b, B>, ConstructionError> {
    let z = derive_zero_isos(end.base)?;
    Ok(Lambda { end, rhat: Arc::new(z.rhat) })
}

impl<'e, 'b, B: AnnStructure> Lambda<'e, 'b, B> {
    pub fn end(&self) -> &'e EndCat<'b, B> {
        self.end
    }
}

impl<'e, 'b, B: AnnStructure> MonoidalFunctor for Lambda<'e, 'b, B> {
    type Src = B;
    type Dst = EndCat<'b, B>;

    fn source(&self) -> &B {
        self.end.base
    }
    fn target(&self) -> &EndCat<'b, B> {
        self.end
    }
    fn ob(&self, a: &Ob<B>) -> Result<EndObOf<B>, EvalError> {
        self.end.left_mul(a.clone())
    }
    fn mor(&self, f: &Mor<B>) -> Result<EndMorOf<B>, EvalError> {
        let b = self.end.base;
        let (dom, cod) = (self.ob(&b.dom(f))?, self.ob(&b.cod(f))?);
        self.end.morphism(dom, cod, MorExpr::Scale(f.clone()))
    }
    fn compat(&self, op: Op, x: &Ob<B>, y: &Ob<B>) -> Result<EndMorOf<B>, EvalError> {
        let e = self.end;
        let whole = self.ob(&e.base.op_ob(op, x, y)?)?;
        let (lx, ly) = (self.ob(x)?, self.ob(y)?);
        let parts = e.op_ob(op, &lx, &ly)?;
        let expr = match op {
            Op::Plus => MorExpr::RDistAt(x.clone(), y.clone()),
            Op::Times => MorExpr::AssocInv(x.clone(), y.clone()),
        };
        e.morphism(whole, parts, expr)
    }
    fn unit_iso(&self, op: Op) -> Result<EndMorOf<B>, EvalError> {
        let e = self.end;
        match op {
            Op::Plus => e.morphism(self.ob(&e.base.unit(Op::Plus)?)?, e.zero()?, MorExpr::Explicit(self.rhat.clone())),
            Op::Times => e.morphism(self.ob(&e.base.unit(Op::Times)?)?, e.identity()?, MorExpr::LeftUnitAt),
        }
    }
}

/// `Λ` is faithful, a ⊕-AC functor and a ⊗-AU functor.
pub fn check_lambda<B: AnnStructure>(l: &Lambda<'_, '_, B>) -> Report {
    let mut r = Report::new();
    r.push(check_faithful(l));
    r.extend(check_ac_functor(l));
    r.extend(check_au_functor(l, Op::Times));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ann::check_ann_functor;
    use crate::constructions::build_end;
    use crate::models::*;

    #[test]
    fn lambda_on_z2() {
        let a = from_ring(&RingTable::zmod(2)).unwrap();
        let e = build_end(&a).unwrap();
        let l = build_lambda(&e).unwrap();
        let r = check_lambda(&l);
        assert!(r.passed(), "{}", r.render_text());
        assert!(check_ann_functor(&l).passed());
    }

    #[test]
    fn lambda_on_bimodule() {
        let a = from_bimodule(&BimoduleData::regular(RingTable::zmod(2)), &CochainSet::new()).unwrap();
        let e = build_end(&a).unwrap();
        let l = build_lambda(&e).unwrap();
        let mut r = check_lambda(&l);
        assert!(r.check("functor/faithful").unwrap().instances > 0);
        r.extend(check_ann_functor(&l));
        assert!(r.passed(), "{}", r.render_text());
    }
}
