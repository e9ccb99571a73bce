use anncat::ann::check_all;
use anncat::constructions::*;
use anncat::models::*;
use anncat::{AnnStructure, CategoryOps, Name, Op};

#[test]
fn identity_transfer_reproduces_constraints() {
    let a = from_bimodule(&BimoduleData::regular(RingTable::zmod(2)), &CochainSet::new()).unwrap();
    let (induced, _) = transfer_structure(&a.category, &a, &Equivalence::identity(&a.category)).unwrap();
    for n in Name::CONSTRAINTS {
        assert_eq!(induced.family(n), a.family(n), "{n}");
    }
}

#[test]
fn inflated_transfer_is_an_ann_category() {
    let a = from_ring(&RingTable::zmod(2)).unwrap();
    let inf = inflate(&a.category, 2).unwrap();
    assert_eq!(inf.category.object_count(), 4);
    let (induced, _) = transfer_structure(&inf.category, &a, &inf.equivalence).unwrap();
    assert!(check_all(&induced).unwrap().passed());
    assert!(matches!(inflate(&a.category, 0), Err(anncat::ConstructionError::InvalidMultiplicity(0))));
}

/// With `c(X,X) = id` the strictified commutativity is trivial on equal words.
#[test]
fn cxx_carries_over_to_strictification() {
    let a = from_ring(&RingTable::zmod(3)).unwrap();
    assert!(check_cxx_condition(&a).passed());
    let s = strictify_plus(&a, 2);
    for w in s.objects() {
        let c = s.constraint(Name::Comm, &[w.clone(), w.clone()]).unwrap();
        assert_eq!(c, s.id(&s.op_ob(Op::Plus, &w, &w).unwrap()), "{}", s.show_ob(&w));
    }
}

#[test]
fn end_tensor_is_strictly_associative_and_unital() {
    let a = from_bimodule(&BimoduleData::regular(RingTable::zmod(2)), &CochainSet::new()).unwrap();
    let e = build_end(&a).unwrap();
    let objs = enumerate_end(&e, 1 << 20).unwrap();
    let id = e.identity().unwrap();
    let t = |x: &EndOb<_, _>, y: &EndOb<_, _>| e.op_ob(Op::Times, x, y).unwrap();
    for f in objs.iter().step_by(3) {
        assert_eq!(t(&id, f), *f);
        assert_eq!(t(f, &id), *f);
        for g in objs.iter().step_by(5) {
            for h in objs.iter().step_by(7) {
                assert_eq!(t(&t(f, g), h), t(f, &t(g, h)));
            }
        }
    }
}

#[test]
fn embedding_pipeline_on_ring_and_bimodule() {
    for a in [
        from_ring(&RingTable::zmod(2)).unwrap(),
        from_bimodule(&BimoduleData::regular(RingTable::zmod(2)), &CochainSet::new()).unwrap(),
    ] {
        let out = embed_almost_strict(&a, 2).unwrap();
        assert!(out.passed(), "{}{}", out.functor.render_text(), out.strictness.render_text());
    }
}
