//! Equivalence quadruples `(F, F′, α, α′)`, condition (4.1), and transport
//! of an Ann-structure along `F: 𝒜 → 𝒜′`.

use crate::ann::AnnCat;
use crate::cat::{Bifunctor, FinCategory, FunctorData, MorId, NatFamily, ObjId};
use crate::engine::{path, AnnStructure, CategoryOps, Op};
use crate::error::{ConstructionError, EvalError};
use crate::report::{Check, Report};
use crate::structures::{check_items, MonoidalData, PicData};
use crate::term::{Name, ObjTerm};

/// Table form of an equivalence between finite categories:
/// `α_X: F′FX → X` indexed by source objects, `α′_Y: FF′Y → Y` by target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub f: FunctorData,
    pub f_prime: FunctorData,
    pub alpha: Vec<MorId>,
    pub alpha_prime: Vec<MorId>,
}

impl Equivalence {
    pub fn identity(c: &FinCategory) -> Equivalence {
        let ids: Vec<MorId> = c.objects().map(|x| c.identity(x)).collect();
        Equivalence {
            f: FunctorData::identity(c),
            f_prime: FunctorData::identity(c),
            alpha: ids.clone(),
            alpha_prime: ids,
        }
    }
}

/// The data (4.1) is stated over; implemented by table equivalences and by
/// the word strictification.
pub trait EquivalenceView: Sync {
    type A: CategoryOps;
    type B: CategoryOps;
    fn source(&self) -> &Self::A;
    fn target(&self) -> &Self::B;
    fn f_ob(&self, x: &<Self::A as CategoryOps>::Ob) -> <Self::B as CategoryOps>::Ob;
    fn f_mor(&self, u: &<Self::A as CategoryOps>::Mor) -> Result<<Self::B as CategoryOps>::Mor, EvalError>;
    fn fp_ob(&self, y: &<Self::B as CategoryOps>::Ob) -> <Self::A as CategoryOps>::Ob;
    fn fp_mor(&self, v: &<Self::B as CategoryOps>::Mor) -> Result<<Self::A as CategoryOps>::Mor, EvalError>;
    fn alpha(&self, x: &<Self::A as CategoryOps>::Ob) -> <Self::A as CategoryOps>::Mor;
    fn alpha_prime(&self, y: &<Self::B as CategoryOps>::Ob) -> <Self::B as CategoryOps>::Mor;
}

pub struct TableEquivalence<'a> {
    pub source: &'a FinCategory,
    pub target: &'a FinCategory,
    pub data: &'a Equivalence,
}

impl EquivalenceView for TableEquivalence<'_> {
    type A = FinCategory;
    type B = FinCategory;

    fn source(&self) -> &FinCategory {
        self.source
    }
    fn target(&self) -> &FinCategory {
        self.target
    }
    fn f_ob(&self, x: &ObjId) -> ObjId {
        self.data.f.ob(*x)
    }
    fn f_mor(&self, u: &MorId) -> Result<MorId, EvalError> {
        Ok(self.data.f.mor(*u))
    }
    fn fp_ob(&self, y: &ObjId) -> ObjId {
        self.data.f_prime.ob(*y)
    }
    fn fp_mor(&self, v: &MorId) -> Result<MorId, EvalError> {
        Ok(self.data.f_prime.mor(*v))
    }
    fn alpha(&self, x: &ObjId) -> MorId {
        self.data.alpha[x.index()]
    }
    fn alpha_prime(&self, y: &ObjId) -> MorId {
        self.data.alpha_prime[y.index()]
    }
}

/// Endpoints and invertibility of `α`, `α′`, and both identities of (4.1),
/// over the probe sets of source and target.
pub fn check_equivalence<E: EquivalenceView + ?Sized>(e: &E) -> Report {
    let (a, b) = (e.source(), e.target());
    let mut r = Report::new();
    let mut ends = Check::new("equivalence/alpha", "α: F′F → id and α′: FF′ → id are isomorphisms");
    for x in a.objects() {
        let m = e.alpha(&x);
        let ok = a.dom(&m) == e.fp_ob(&e.f_ob(&x)) && a.cod(&m) == x && a.inverse(&m).is_ok();
        ends.expect(ok, || vec![format!("X={}", a.show_ob(&x))], "α_X has wrong endpoints or no inverse");
    }
    for y in b.objects() {
        let m = e.alpha_prime(&y);
        let ok = b.dom(&m) == e.f_ob(&e.fp_ob(&y)) && b.cod(&m) == y && b.inverse(&m).is_ok();
        ends.expect(ok, || vec![format!("Y={}", b.show_ob(&y))], "α′_Y has wrong endpoints or no inverse");
    }
    r.push(ends);
    let xs: Vec<_> = a.objects();
    r.push(check_items(
        b,
        "4.1/F",
        "(4.1) F(α_A) = α′_{FA}",
        &xs,
        |x| vec![format!("A={}", a.show_ob(x))],
        |x| Ok((e.f_mor(&e.alpha(x))?, e.alpha_prime(&e.f_ob(x)))),
    ));
    let ys: Vec<_> = b.objects();
    r.push(check_items(
        a,
        "4.1/F'",
        "(4.1) F′(α′_A′) = α_{F′A′}",
        &ys,
        |y| vec![format!("A'={}", b.show_ob(y))],
        |y| Ok((e.fp_mor(&e.alpha_prime(y))?, e.alpha(&e.fp_ob(y)))),
    ));
    r
}

/// What transport needs: the target structure, `F` on objects, the induced
/// operations on source objects and `F`'s compatibility isomorphisms.
pub trait TransferFrame {
    type Src: Clone;
    type T: AnnStructure;
    fn structured(&self) -> &Self::T;
    fn ob(&self, x: &Self::Src) -> Result<<Self::T as CategoryOps>::Ob, EvalError>;
    fn op(&self, op: Op, x: &Self::Src, y: &Self::Src) -> Result<Self::Src, EvalError>;
    fn unit(&self, op: Op) -> Result<Self::Src, EvalError>;
    /// `F(X op Y) → FX op′ FY`.
    fn compat(&self, op: Op, x: &Self::Src, y: &Self::Src) -> Result<<Self::T as CategoryOps>::Mor, EvalError>;
    /// `F(unit) → unit′`.
    fn unit_iso(&self, op: Op) -> Result<<Self::T as CategoryOps>::Mor, EvalError>;
}

/// Evaluates a shape with the induced operations.
pub fn frame_obj<Fr: TransferFrame + ?Sized>(fr: &Fr, t: &ObjTerm, args: &[Fr::Src]) -> Result<Fr::Src, EvalError> {
    match t {
        ObjTerm::Var(i) => args.get(*i).cloned().ok_or(EvalError::Unbound(*i)),
        ObjTerm::Zero => fr.unit(Op::Plus),
        ObjTerm::One => fr.unit(Op::Times),
        ObjTerm::Oplus(a, b) => fr.op(Op::Plus, &frame_obj(fr, a, args)?, &frame_obj(fr, b, args)?),
        ObjTerm::Otimes(a, b) => fr.op(Op::Times, &frame_obj(fr, a, args)?, &frame_obj(fr, b, args)?),
    }
}

/// The image `F(κ)` forced on the induced constraint `κ = name[args]` by
/// (2.3), (2.4), (2.4′), (2.6), (2.15) and (2.15′).
pub fn required_image<Fr: TransferFrame + ?Sized>(
    fr: &Fr,
    name: Name,
    args: &[Fr::Src],
) -> Result<<Fr::T as CategoryOps>::Mor, EvalError> {
    let t = fr.structured();
    let img: Vec<_> = args.iter().map(|x| fr.ob(x)).collect::<Result<_, _>>()?;
    let inv = |m: <Fr::T as CategoryOps>::Mor| t.inverse(&m);
    let idf = |x: &Fr::Src| fr.ob(x).map(|o| t.id(&o));
    let op_of = |n: Name| match n {
        Name::Aplus | Name::PlusLeftUnit | Name::PlusRightUnit | Name::Comm => Op::Plus,
        _ => Op::Times,
    };
    match name {
        Name::Aplus | Name::Assoc => {
            let o = op_of(name);
            let (x, y, z) = (&args[0], &args[1], &args[2]);
            path(
                t,
                &[
                    fr.compat(o, x, &fr.op(o, y, z)?)?,
                    t.op_mor(o, &idf(x)?, &fr.compat(o, y, z)?)?,
                    t.constraint(name, &img)?,
                    inv(t.op_mor(o, &fr.compat(o, x, y)?, &idf(z)?)?)?,
                    inv(fr.compat(o, &fr.op(o, x, y)?, z)?)?,
                ],
            )
        }
        Name::PlusLeftUnit | Name::LeftUnit => {
            let o = op_of(name);
            let x = &args[0];
            path(
                t,
                &[fr.compat(o, &fr.unit(o)?, x)?, t.op_mor(o, &fr.unit_iso(o)?, &idf(x)?)?, t.constraint(name, &img)?],
            )
        }
        Name::PlusRightUnit | Name::RightUnit => {
            let o = op_of(name);
            let x = &args[0];
            path(
                t,
                &[fr.compat(o, x, &fr.unit(o)?)?, t.op_mor(o, &idf(x)?, &fr.unit_iso(o)?)?, t.constraint(name, &img)?],
            )
        }
        Name::Comm => {
            let (x, y) = (&args[0], &args[1]);
            path(t, &[fr.compat(Op::Plus, x, y)?, t.constraint(name, &img)?, inv(fr.compat(Op::Plus, y, x)?)?])
        }
        Name::LeftDist => {
            let (a, x, y) = (&args[0], &args[1], &args[2]);
            let (ax, ay) = (fr.op(Op::Times, a, x)?, fr.op(Op::Times, a, y)?);
            path(
                t,
                &[
                    fr.compat(Op::Times, a, &fr.op(Op::Plus, x, y)?)?,
                    t.op_mor(Op::Times, &idf(a)?, &fr.compat(Op::Plus, x, y)?)?,
                    t.constraint(name, &img)?,
                    inv(t.op_mor(Op::Plus, &fr.compat(Op::Times, a, x)?, &fr.compat(Op::Times, a, y)?)?)?,
                    inv(fr.compat(Op::Plus, &ax, &ay)?)?,
                ],
            )
        }
        Name::RightDist => {
            let (x, y, a) = (&args[0], &args[1], &args[2]);
            let (xa, ya) = (fr.op(Op::Times, x, a)?, fr.op(Op::Times, y, a)?);
            path(
                t,
                &[
                    fr.compat(Op::Times, &fr.op(Op::Plus, x, y)?, a)?,
                    t.op_mor(Op::Times, &fr.compat(Op::Plus, x, y)?, &idf(a)?)?,
                    t.constraint(name, &img)?,
                    inv(t.op_mor(Op::Plus, &fr.compat(Op::Times, x, a)?, &fr.compat(Op::Times, y, a)?)?)?,
                    inv(fr.compat(Op::Plus, &xa, &ya)?)?,
                ],
            )
        }
        other => Err(EvalError::Unavailable(other.to_string())),
    }
}

struct TableFrame<'a> {
    source: &'a FinCategory,
    target: &'a AnnCat,
    e: &'a Equivalence,
}

impl TransferFrame for TableFrame<'_> {
    type Src = ObjId;
    type T = AnnCat;

    fn structured(&self) -> &AnnCat {
        self.target
    }
    fn ob(&self, x: &ObjId) -> Result<ObjId, EvalError> {
        Ok(self.e.f.ob(*x))
    }
    fn op(&self, op: Op, x: &ObjId, y: &ObjId) -> Result<ObjId, EvalError> {
        Ok(self.e.f_prime.ob(self.target.op_ob(op, &self.e.f.ob(*x), &self.e.f.ob(*y))?))
    }
    fn unit(&self, op: Op) -> Result<ObjId, EvalError> {
        Ok(self.e.f_prime.ob(self.target.unit(op)?))
    }
    fn compat(&self, op: Op, x: &ObjId, y: &ObjId) -> Result<MorId, EvalError> {
        let z = self.target.op_ob(op, &self.e.f.ob(*x), &self.e.f.ob(*y))?;
        Ok(self.e.alpha_prime[z.index()])
    }
    fn unit_iso(&self, op: Op) -> Result<MorId, EvalError> {
        Ok(self.e.alpha_prime[self.target.unit(op)?.index()])
    }
}

impl TableFrame<'_> {
    /// The unique `u: dom → cod` with `F(u) = image`.
    fn lift(&self, dom: ObjId, cod: ObjId, image: MorId) -> Result<MorId, EvalError> {
        let found: Vec<MorId> =
            self.source.hom(dom, cod).iter().copied().filter(|&u| self.e.f.mor(u) == image).collect();
        let what = || self.target.category.morphism_name(image).to_string();
        match found.as_slice() {
            [u] => Ok(*u),
            [] => Err(EvalError::NoPreimage(what())),
            _ => Err(EvalError::AmbiguousPreimage(what())),
        }
    }

    fn bifunctor(&self, op: Op) -> Result<Bifunctor, EvalError> {
        let (t, e) = (self.target, self.e);
        let err = std::cell::RefCell::new(None);
        let keep = |r: Result<_, EvalError>, fallback| {
            r.unwrap_or_else(|er| {
                err.borrow_mut().get_or_insert(er);
                fallback
            })
        };
        let b = Bifunctor::from_fns(
            self.source,
            |x, y| ObjId(keep(self.op(op, &x, &y).map(|z| z.0), x.0)),
            |u, v| MorId(keep(t.op_mor(op, &e.f.mor(u), &e.f.mor(v)).map(|m| e.f_prime.mor(m).0), u.0)),
        );
        err.into_inner().map_or(Ok(b), Err)
    }

    fn family(&self, name: Name, ops: &crate::cat::Ops<'_>) -> Result<NatFamily, EvalError> {
        let (source, target) = name.shapes().expect("constraint shapes");
        let mut err = None;
        let fam = NatFamily::from_fn(
            name.as_str(),
            name.arity(),
            source.clone(),
            target.clone(),
            self.source.object_count(),
            |args| {
                let attempt = || -> Result<MorId, EvalError> {
                    let dom = ops.eval_obj(&source, args)?;
                    let cod = ops.eval_obj(&target, args)?;
                    self.lift(dom, cod, required_image(self, name, args)?)
                };
                attempt().unwrap_or_else(|er| {
                    err.get_or_insert(er);
                    MorId(0)
                })
            },
        );
        err.map_or(Ok(fam), Err)
    }
}

/// Transports the structure of `target` to `source` along `e`. Returns the
/// induced Ann-category and `F` with `F̆`, `F̃` and both unit isomorphisms.
pub fn transfer_structure(
    source: &FinCategory,
    target: &AnnCat,
    e: &Equivalence,
) -> Result<(AnnCat, FunctorData), ConstructionError> {
    let view = TableEquivalence { source, target: &target.category, data: e };
    let report = check_equivalence(&view);
    if !report.passed() {
        let (c, f) = report.first_failure().expect("a failure");
        return Err(ConstructionError::PreconditionFailed(format!("{} fails at {}", c.id, f.binding.join(", "))));
    }
    let fr = TableFrame { source, target, e };
    let plus = fr.bifunctor(Op::Plus)?;
    let times = target.times.as_ref().map(|_| fr.bifunctor(Op::Times)).transpose()?;
    let zero = fr.unit(Op::Plus)?;
    let one = target.one().map(|_| fr.unit(Op::Times)).transpose()?;
    let ops = crate::cat::Ops { plus: Some(&plus), times: times.as_ref(), zero: Some(zero), one };
    let has = |n: Name| target.family(n).is_some();
    let fam = |n: Name| fr.family(n, &ops);
    let pic = PicData {
        monoidal: MonoidalData {
            tensor: plus.clone(),
            unit: zero,
            assoc: fam(Name::Aplus)?,
            left: fam(Name::PlusLeftUnit)?,
            right: fam(Name::PlusRightUnit)?,
        },
        comm: fam(Name::Comm)?,
    };
    let mon = match (&times, one) {
        (Some(t), Some(u)) => Some(MonoidalData {
            tensor: t.clone(),
            unit: u,
            assoc: fam(Name::Assoc)?,
            left: fam(Name::LeftUnit)?,
            right: fam(Name::RightUnit)?,
        }),
        _ => None,
    };
    let ldist = if has(Name::LeftDist) { Some(fam(Name::LeftDist)?) } else { None };
    let rdist = if has(Name::RightDist) { Some(fam(Name::RightDist)?) } else { None };
    let induced = AnnCat { category: source.clone(), plus: pic, times: mon, ldist, rdist };

    let n = source.object_count();
    let pairs = |op: Op| -> Result<Vec<MorId>, EvalError> {
        (0..n * n).map(|i| fr.compat(op, &ObjId((i / n) as u32), &ObjId((i % n) as u32))).collect()
    };
    let mut f = e.f.clone();
    f.breve = Some(pairs(Op::Plus)?);
    f.zero_iso = Some(fr.unit_iso(Op::Plus)?);
    if induced.times.is_some() {
        f.tilde = Some(pairs(Op::Times)?);
        f.unit_iso = Some(fr.unit_iso(Op::Times)?);
    }
    Ok((induced, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ann::{check_all, check_ann_functor};
    use crate::constructions::inflate;
    use crate::models::{from_bimodule, from_ring, BimoduleData, CochainSet, RingTable};
    use crate::structures::{check_ac_functor, check_au_functor, TableFunctor};

    #[test]
    fn identity_transfer_reproduces_constraints() {
        let a = from_bimodule(&BimoduleData::regular(RingTable::zmod(2)), &CochainSet::new()).unwrap();
        let (induced, _) = transfer_structure(&a.category, &a, &Equivalence::identity(&a.category)).unwrap();
        assert_eq!(induced, a);
    }

    #[test]
    fn transfer_to_inflated_ring_category() {
        let a = from_ring(&RingTable::zmod(2)).unwrap();
        let inf = inflate(&a.category, 2).unwrap();
        assert_eq!(inf.category.object_count(), 4);
        let view = TableEquivalence { source: &inf.category, target: &a.category, data: &inf.equivalence };
        assert!(check_equivalence(&view).passed());
        let (induced, f) = transfer_structure(&inf.category, &a, &inf.equivalence).unwrap();
        assert!(check_all(&induced).unwrap().passed());
        let tf = TableFunctor::new(&induced, &a, &f);
        assert!(check_ann_functor(&tf).passed());
        assert!(check_ac_functor(&tf).passed());
        assert!(check_au_functor(&tf, Op::Times).passed());
        assert!(check_au_functor(&tf, Op::Plus).passed());
        let one = inf.equivalence.f_prime.ob(a.one().unwrap());
        assert_eq!(induced.one(), Some(one));
        assert_eq!(f.ob(one), a.one().unwrap());
    }

    #[test]
    fn perturbed_alpha_breaks_condition() {
        let a = from_ring(&RingTable::zmod(2)).unwrap();
        let mut inf = inflate(&a.category, 2).unwrap();
        let c = &inf.category;
        let x0 = c.object_by_name("1#0").unwrap();
        let x1 = c.object_by_name("1#1").unwrap();
        inf.equivalence.alpha[x0.index()] = c.hom(c.object_by_name("1#0").unwrap(), x1)[0];
        let view = TableEquivalence { source: c, target: &a.category, data: &inf.equivalence };
        let r = check_equivalence(&view);
        assert!(!r.passed());
        assert!(transfer_structure(c, &a, &inf.equivalence).is_err());
    }

    #[test]
    fn zero_multiplicity_is_rejected() {
        let a = from_ring(&RingTable::zmod(2)).unwrap();
        assert_eq!(inflate(&a.category, 0).unwrap_err(), ConstructionError::InvalidMultiplicity(0));
    }
}
