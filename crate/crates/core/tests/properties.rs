use anncat::ann::derive_zero_isos;
use anncat::models::{from_bimodule, BimoduleData, CochainSet, RingTable};
use anncat::structures::{check_ac_functor, sum_functors, LeftMul, RightMul};
use anncat::term::{MorTerm, ObjTerm};
use anncat::{parse_term, Name, ObjId};
use proptest::prelude::*;

const VARS: [&str; 4] = ["X", "Y", "Z", "W"];

fn obj_term() -> impl Strategy<Value = ObjTerm> {
    let leaf = prop_oneof![(0..4usize).prop_map(ObjTerm::Var), Just(ObjTerm::Zero), Just(ObjTerm::One)];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ObjTerm::oplus(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| ObjTerm::otimes(a, b)),
        ]
    })
}

fn mor_term() -> impl Strategy<Value = MorTerm> {
    let named = (0..Name::CONSTRAINTS.len(), proptest::collection::vec(obj_term(), 3)).prop_map(|(i, args)| {
        let n = Name::CONSTRAINTS[i];
        MorTerm::Named(n, args[..n.arity()].to_vec())
    });
    let leaf = prop_oneof![obj_term().prop_map(MorTerm::Id), named];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| MorTerm::Inv(Box::new(t))),
            (inner.clone(), inner.clone()).prop_map(|(g, f)| MorTerm::comp(g, f)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| MorTerm::Oplus(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| MorTerm::Otimes(Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #[test]
    fn printed_terms_parse_back(t in mor_term()) {
        let vars: Vec<String> = VARS.iter().map(|v| v.to_string()).collect();
        let printed = t.render(&vars);
        let parsed = parse_term(&printed).unwrap();
        prop_assert_eq!(parsed.to_string(), printed);
    }

    #[test]
    fn sums_of_multiplication_functors_are_ac(n in 2..5usize, a in 0..5u32, b in 0..5u32) {
        let ring = RingTable::zmod(n);
        let s = from_bimodule(&BimoduleData::regular(ring), &CochainSet::new()).unwrap();
        let z = derive_zero_isos(&s).unwrap();
        let (a, b) = (ObjId(a % n as u32), ObjId(b % n as u32));
        let l = LeftMul { structure: &s, a, zero: Some(z.lhat[&a]) };
        let r = RightMul { structure: &s, a: b, zero: Some(z.rhat[&b]) };
        let sum = sum_functors(&l, &r);
        let rep = check_ac_functor(&sum);
        prop_assert!(rep.passed(), "{}", rep.render_text());
    }
}
