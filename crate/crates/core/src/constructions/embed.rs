//! `A → Words(A) → End(Words(A))`: inclusion into the ⊕-strictification
//! followed by `Λ`.

use super::end::{build_end, verify_end_almost_strict};
use super::lambda::build_lambda;
use super::strictify::{strictify_plus, Inclusion};
use crate::ann::{check_ann_functor, AnnCat};
use crate::engine::{AnnStructure, CategoryOps, Op};
use crate::error::ConstructionError;
use crate::report::{Check, Report};
use crate::structures::{
    check_ac_functor, check_au_functor, check_faithful, check_identity_families, compose_monoidal_functors,
    MonoidalFunctor,
};
use crate::term::Name;

pub struct EmbedOutcome {
    /// Faithfulness and the Ann-functor checks of the composite.
    pub functor: Report,
    /// Families of the target that must be identities, on `θ`, `Id` and the image of `A`.
    pub strictness: Report,
    /// Whether `c*` and `𝓛*` happen to be identities there as well.
    pub loose: Vec<(Name, bool)>,
}

impl EmbedOutcome {
    pub fn passed(&self) -> bool {
        self.functor.passed() && self.strictness.passed()
    }
}

/// Runs the composite embedding on the objects of `a`. Everything inside
/// `End(Words)` is compared on words of length at most `depth`, so both
/// reports are marked bounded.
pub fn embed_almost_strict(a: &AnnCat, depth: usize) -> Result<EmbedOutcome, ConstructionError> {
    let words = strictify_plus(a, depth);
    let mut end = build_end(&words)?;
    let lambda = build_lambda(&end)?;
    let inclusion = Inclusion(&words);
    let f = compose_monoidal_functors(&lambda, &inclusion);
    let mut functor = Report::new();
    functor.push(check_faithful(&f));
    functor.extend(check_ac_functor(&f));
    functor.extend(check_au_functor(&f, Op::Times));
    functor.extend(check_ann_functor(&f));
    functor.mark_bounded();

    let mut collection = vec![end.zero()?, end.identity()?];
    for x in a.objects() {
        let fx = f.ob(&x)?;
        if !collection.contains(&fx) {
            collection.push(fx);
        }
    }
    drop(lambda);
    end.set_objects(collection);
    let mut strictness = verify_end_almost_strict(&end);
    strictness.mark_bounded();
    let loose =
        [Name::Comm, Name::LeftDist].into_iter().map(|n| (n, check_identity_families(&end, &[n]).passed())).collect();
    Ok(EmbedOutcome { functor, strictness, loose })
}

/// `c_{X,X} = id` for every object; failures name the offending `X`.
pub fn check_cxx_condition<S: AnnStructure + ?Sized>(s: &S) -> Check {
    let mut c = Check::new("cxx", "c(X,X) = id");
    for x in s.objects() {
        match s.constraint(Name::Comm, &[x.clone(), x.clone()]) {
            Ok(m) => c.expect(
                m == s.id(&s.op_ob(Op::Plus, &x, &x).expect("⊕ is total")),
                || vec![format!("X={}", s.show_ob(&x))],
                "c(X,X) is not the identity",
            ),
            Err(e) => c.fail(
                vec![format!("X={}", s.show_ob(&x))],
                format!("error: {e}"),
                String::new(),
                crate::report::FailureKind::IllTyped(e.to_string()),
            ),
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::*;

    #[test]
    fn embeds_z2() {
        let a = from_ring(&RingTable::zmod(2)).unwrap();
        let r = embed_almost_strict(&a, 3).unwrap();
        assert!(r.passed(), "{}{}", r.functor.render_text(), r.strictness.render_text());
        assert!(r.functor.checks.iter().all(|c| c.bounded));
    }

    #[test]
    fn embeds_bimodule() {
        let a = from_bimodule(&BimoduleData::regular(RingTable::zmod(2)), &CochainSet::new()).unwrap();
        let r = embed_almost_strict(&a, 3).unwrap();
        assert!(r.passed(), "{}{}", r.functor.render_text(), r.strictness.render_text());
        assert!(r.functor.check("functor/faithful").unwrap().instances > 0);
    }

    #[test]
    fn cxx_detects_symmetric_twist() {
        let a = from_ring(&RingTable::zmod(2)).unwrap();
        assert!(check_cxx_condition(&a).passed());
        let z2 = GroupTable::zmod(2);
        // c(x,y) = xy is bilinear and antisymmetric mod 2, but c(1,1) ≠ 0.
        let p = pic_from_cocycle(&z2, &z2, &[0; 8], &[0, 0, 0, 1]).unwrap();
        let c = check_cxx_condition(&p);
        assert_eq!(c.failures.len(), 1);
        assert_eq!(c.failures[0].binding, ["X=1"]);
    }
}
