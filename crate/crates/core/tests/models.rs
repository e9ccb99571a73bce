use anncat::ann::check_all;
use anncat::models::*;
use anncat::{CategoryOps, ModelError, Name, ObjId};

fn b_z2() -> anncat::AnnCat {
    from_bimodule(&BimoduleData::regular(RingTable::zmod(2)), &CochainSet::new()).unwrap()
}

#[test]
fn ring_models_pass_with_fourth_power_counts() {
    for (ring, n) in [(RingTable::zmod(2), 2u64), (RingTable::zmod(6), 6), (RingTable::f2_dual(), 4)] {
        let a = from_ring(&ring).unwrap();
        let r = check_all(&a).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        for id in ["2.10", "2.10'", "2.11", "2.12"] {
            assert_eq!(r.check(id).unwrap().instances, n.pow(4), "{id}");
        }
    }
}

#[test]
fn trivial_bimodules_pass() {
    for n in [2, 4] {
        let a = from_bimodule(&BimoduleData::regular(RingTable::zmod(n)), &CochainSet::new()).unwrap();
        assert!(check_all(&a).unwrap().passed());
    }
}

/// Every single-component change of every family in a sample is caught.
#[test]
fn mutations_are_detected() {
    let base = b_z2();
    let objs = base.objects();
    for name in Name::CONSTRAINTS {
        let arity = name.arity();
        for k in 0..objs.len().pow(arity as u32) {
            let args: Vec<ObjId> = (0..arity).map(|i| objs[(k / objs.len().pow(i as u32)) % objs.len()]).collect();
            let mut a = b_z2();
            let fam = a.family_mut(name).unwrap();
            let old = fam.component(&args);
            let other = *base.category.hom(base.dom(&old), base.cod(&old)).iter().find(|&&m| m != old).unwrap();
            fam.set_component(&args, other);
            let r = check_all(&a).unwrap();
            let (c, f) = r.first_failure().unwrap_or_else(|| panic!("{name} at {args:?} undetected"));
            assert!(!f.binding.is_empty() || c.id.contains('/'), "{name}: failure without witness");
        }
    }
}

#[test]
fn coboundary_twist_gives_valid_pic_data() {
    let z3 = GroupTable::zmod(3);
    let mut f = vec![0; 9];
    f[4] = 1;
    let (h, c) = coboundary(&z3, &z3, &f);
    assert!(h.iter().any(|&v| v != 0));
    let p = pic_from_cocycle(&z3, &z3, &h, &c).unwrap();
    assert!(check_all(&p).unwrap().passed());
    assert!(p.times.is_none());
}

#[test]
fn search_recovers_only_zero_cochains_for_c_and_l() {
    let b = BimoduleData::regular(RingTable::zmod(2));
    let found = search_constraint_families(&b, &[Name::Comm, Name::LeftDist], 1 << 20).unwrap();
    assert_eq!(found.len(), 1);
    assert!(found[0].is_zero(0));
    assert!(matches!(
        search_constraint_families(&b, &[Name::Aplus, Name::Assoc], 1000),
        Err(ModelError::BoundExceeded { .. })
    ));
}
