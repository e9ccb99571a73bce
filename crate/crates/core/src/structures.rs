//! Monoidal, symmetric and Pic structure: table bundles, their checkers,
//! monoidal functors and ⊕/⊗-morphisms, composition and sums of functors.

use crate::cat::{Bifunctor, FinCategory, FunctorData, MorId, NatFamily, ObjId};
use crate::catalog::{catalog, PLUS_MONOIDAL, SYMMETRY, TIMES_MONOIDAL};
use crate::engine::{path, shuffle, AnnStructure, CategoryOps, Context, Op};
use crate::error::EvalError;
use crate::report::{Check, Failure, FailureKind, Report};
use crate::term::Name;
use rayon::prelude::*;

/// A tensor with unit object and associativity/unit constraints.
/// For ⊕ the unit constraints are `g` (left) and `d` (right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalData {
    pub tensor: Bifunctor,
    pub unit: ObjId,
    pub assoc: NatFamily,
    pub left: NatFamily,
    pub right: NatFamily,
}

/// Monoidal data plus a commutativity constraint `c: X⊕Y → Y⊕X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricData {
    pub monoidal: MonoidalData,
    pub comm: NatFamily,
}

/// The ⊕-part of an Ann-category: zero object `0`, `a⁺`, `c`, `g`, `d`.
/// Whether it is a Pic-category is decided by [`check_pic`].
pub type PicData = SymmetricData;

/// Pentagon and triangle for `op`.
pub fn check_au<S: AnnStructure + ?Sized>(s: &S, op: Op) -> Report {
    let ids = match op {
        Op::Plus => PLUS_MONOIDAL,
        Op::Times => TIMES_MONOIDAL,
    };
    Context::new(s).check_all(catalog().group(ids), &s.objects())
}

/// Involution `c ∘ c = id` and the hexagon.
pub fn check_acu<S: AnnStructure + ?Sized>(s: &S) -> Report {
    Context::new(s).check_all(catalog().group(SYMMETRY), &s.objects())
}

/// For each object, the first object `Y` (in enumeration order) with an
/// isomorphism `X op Y → unit`, if any.
pub fn object_inverses<S: AnnStructure + ?Sized>(s: &S, op: Op) -> Result<Vec<(S::Ob, Option<S::Ob>)>, EvalError> {
    let unit = s.unit(op)?;
    let objs = s.objects();
    let iso_to_unit = |z: &S::Ob| -> bool {
        match s.hom(z, &unit) {
            Some(h) => h.iter().any(|f| s.inverse(f).is_ok()),
            None => *z == unit,
        }
    };
    objs.iter()
        .map(|x| {
            let mut found = None;
            for y in &objs {
                if iso_to_unit(&s.op_ob(op, x, y)?) {
                    found = Some(y.clone());
                    break;
                }
            }
            Ok((x.clone(), found))
        })
        .collect()
}

/// Object invertibility under `op` and invertibility of every morphism.
pub fn check_pic<S: AnnStructure + ?Sized>(s: &S, op: Op) -> Report {
    let mut report = Report::new();
    let mut inv = Check::new(format!("pic/inverse-objects[{}]", op.symbol()), "every object is invertible");
    match object_inverses(s, op) {
        Ok(list) => {
            for (x, y) in list {
                inv.expect(y.is_some(), || vec![s.show_ob(&x)], "no inverse object");
            }
        }
        Err(e) => {
            inv.instances += 1;
            inv.fail(vec![], String::new(), String::new(), FailureKind::IllTyped(e.to_string()));
        }
    }
    report.push(inv);

    let mut iso = Check::new("pic/morphisms-iso", "every morphism is an isomorphism");
    let objs = s.objects();
    for x in &objs {
        for y in &objs {
            for f in s.hom(x, y).unwrap_or_default() {
                iso.expect(s.inverse(&f).is_ok(), || vec![s.show_mor(&f)], "not invertible");
            }
        }
    }
    report.push(iso);
    report
}

/// Full ⊕ check: pentagon, triangle, symmetry and invertibility.
pub fn check_pic_category<S: AnnStructure + ?Sized>(s: &S) -> Report {
    let mut r = check_au(s, Op::Plus);
    r.extend(check_acu(s));
    r.extend(check_pic(s, Op::Plus));
    r
}

/// `strict/<name>`: every component over the probe set is an identity.
pub fn check_identity_families<S: AnnStructure + ?Sized>(s: &S, names: &[Name]) -> Report {
    let objs = s.objects();
    let mut r = Report::new();
    for &name in names {
        let tuples = object_tuples(&objs, name.arity());
        let show = |t: &Vec<S::Ob>| t.iter().map(|x| s.show_ob(x)).collect::<Vec<_>>();
        r.push(check_items(s, format!("strict/{name}"), format!("{name} is an identity family"), &tuples, show, |t| {
            let m = s.constraint(name, t)?;
            Ok((m.clone(), s.id(&s.dom(&m))))
        }));
    }
    r
}

/// A functor between two structures with optional compatibility data.
pub trait MonoidalFunctor: Sync {
    type Src: AnnStructure;
    type Dst: AnnStructure;

    fn source(&self) -> &Self::Src;
    fn target(&self) -> &Self::Dst;
    fn ob(&self, x: &<Self::Src as CategoryOps>::Ob) -> Result<<Self::Dst as CategoryOps>::Ob, EvalError>;
    fn mor(&self, f: &<Self::Src as CategoryOps>::Mor) -> Result<<Self::Dst as CategoryOps>::Mor, EvalError>;
    /// `F(X op Y) → FX op FY`: `F̆` for ⊕, `F̃` for ⊗.
    fn compat(
        &self,
        op: Op,
        x: &<Self::Src as CategoryOps>::Ob,
        y: &<Self::Src as CategoryOps>::Ob,
    ) -> Result<<Self::Dst as CategoryOps>::Mor, EvalError>;
    /// `F0 → 0'` for ⊕, `F1 → 1'` for ⊗.
    fn unit_iso(&self, op: Op) -> Result<<Self::Dst as CategoryOps>::Mor, EvalError>;
}

type SrcOb<F> = <<F as MonoidalFunctor>::Src as CategoryOps>::Ob;
type SrcMor<F> = <<F as MonoidalFunctor>::Src as CategoryOps>::Mor;
type DstMor<F> = <<F as MonoidalFunctor>::Dst as CategoryOps>::Mor;

/// Runs `f` on every item, comparing the two returned morphisms of `dst`.
pub fn check_items<D, T>(
    dst: &D,
    id: impl Into<String>,
    citation: impl Into<String>,
    items: &[T],
    show: impl Fn(&T) -> Vec<String> + Sync,
    f: impl Fn(&T) -> Result<(D::Mor, D::Mor), EvalError> + Sync,
) -> Check
where
    D: CategoryOps + ?Sized,
    T: Sync,
{
    let failures: Vec<Failure> = items
        .par_iter()
        .filter_map(|item| match f(item) {
            Err(e) => Some(Failure {
                binding: show(item),
                lhs: format!("error: {e}"),
                rhs: String::new(),
                kind: FailureKind::IllTyped(e.to_string()),
            }),
            Ok((l, r)) => {
                if dst.dom(&l) != dst.dom(&r) || dst.cod(&l) != dst.cod(&r) {
                    let ends = |m: &D::Mor| format!("{} → {}", dst.show_ob(&dst.dom(m)), dst.show_ob(&dst.cod(m)));
                    Some(Failure {
                        binding: show(item),
                        lhs: ends(&l),
                        rhs: ends(&r),
                        kind: FailureKind::EndpointMismatch,
                    })
                } else if l != r {
                    Some(Failure {
                        binding: show(item),
                        lhs: dst.show_mor(&l),
                        rhs: dst.show_mor(&r),
                        kind: FailureKind::Mismatch,
                    })
                } else {
                    None
                }
            }
        })
        .collect();
    let mut c = Check::new(id, citation);
    c.instances = items.len() as u64;
    c.failures = failures;
    c
}

/// All `k`-tuples over `objs` in lexicographic order.
pub fn object_tuples<O: Clone>(objs: &[O], k: usize) -> Vec<Vec<O>> {
    crate::cat::tuples(objs.len(), k).map(|t| t.into_iter().map(|i| objs[i].clone()).collect()).collect()
}

fn show_tuple<'a, S: CategoryOps + ?Sized>(
    s: &'a S,
    names: &'static [&'static str],
) -> impl Fn(&Vec<S::Ob>) -> Vec<String> + Sync + 'a {
    move |t| t.iter().zip(names).map(|(x, n)| format!("{n}={}", s.show_ob(x))).collect()
}

fn names_for(op: Op) -> (Name, Name, Name) {
    match op {
        Op::Plus => (Name::Aplus, Name::PlusLeftUnit, Name::PlusRightUnit),
        Op::Times => (Name::Assoc, Name::LeftUnit, Name::RightUnit),
    }
}

/// (2.3) for `op`: compatibility of `F(X op Y) → FX op FY` with the associators.
pub fn check_functor_assoc<F: MonoidalFunctor + ?Sized>(f: &F, op: Op) -> Check {
    let (src, dst) = (f.source(), f.target());
    let (assoc, _, _) = names_for(op);
    let triples = object_tuples(&src.objects(), 3);
    check_items(
        dst,
        format!("2.3[{}]", op.symbol()),
        "(2.3) F̃ vs associators",
        &triples,
        show_tuple(src, &["X", "Y", "Z"]),
        |t| {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            let (fx, fy, fz) = (f.ob(x)?, f.ob(y)?, f.ob(z)?);
            let yz = src.op_ob(op, y, z)?;
            let xy = src.op_ob(op, x, y)?;
            let lhs = path(
                dst,
                &[
                    f.compat(op, x, &yz)?,
                    dst.op_mor(op, &dst.id(&fx), &f.compat(op, y, z)?)?,
                    dst.constraint(assoc, &[fx.clone(), fy.clone(), fz.clone()])?,
                ],
            )?;
            let rhs = path(
                dst,
                &[
                    f.mor(&src.constraint(assoc, &[x.clone(), y.clone(), z.clone()])?)?,
                    f.compat(op, &xy, z)?,
                    dst.op_mor(op, &f.compat(op, x, y)?, &dst.id(&fz))?,
                ],
            )?;
            Ok((lhs, rhs))
        },
    )
}

/// (2.4) and (2.4′) for `op`.
pub fn check_functor_units<F: MonoidalFunctor + ?Sized>(f: &F, op: Op) -> Report {
    let (src, dst) = (f.source(), f.target());
    let (_, left, right) = names_for(op);
    let objs: Vec<Vec<_>> = object_tuples(&src.objects(), 1);
    let mut r = Report::new();
    r.push(check_items(dst, format!("2.4[{}]", op.symbol()), "(2.4) left unit", &objs, show_tuple(src, &["X"]), |t| {
        let x = &t[0];
        let u = src.unit(op)?;
        let fx = f.ob(x)?;
        let lhs = f.mor(&src.constraint(left, std::slice::from_ref(x))?)?;
        let rhs = path(
            dst,
            &[
                f.compat(op, &u, x)?,
                dst.op_mor(op, &f.unit_iso(op)?, &dst.id(&fx))?,
                dst.constraint(left, std::slice::from_ref(&fx))?,
            ],
        )?;
        Ok((lhs, rhs))
    }));
    r.push(check_items(
        dst,
        format!("2.4'[{}]", op.symbol()),
        "(2.4') right unit",
        &objs,
        show_tuple(src, &["X"]),
        |t| {
            let x = &t[0];
            let u = src.unit(op)?;
            let fx = f.ob(x)?;
            let lhs = f.mor(&src.constraint(right, std::slice::from_ref(x))?)?;
            let rhs = path(
                dst,
                &[
                    f.compat(op, x, &u)?,
                    dst.op_mor(op, &dst.id(&fx), &f.unit_iso(op)?)?,
                    dst.constraint(right, std::slice::from_ref(&fx))?,
                ],
            )?;
            Ok((lhs, rhs))
        },
    ));
    r
}

/// (2.6): `c' ∘ F̆_{X,Y} = F̆_{Y,X} ∘ F(c_{X,Y})`.
pub fn check_functor_comm<F: MonoidalFunctor + ?Sized>(f: &F) -> Check {
    let (src, dst) = (f.source(), f.target());
    let pairs = object_tuples(&src.objects(), 2);
    check_items(dst, "2.6", "(2.6) F̆ vs commutativity", &pairs, show_tuple(src, &["X", "Y"]), |t| {
        let (x, y) = (&t[0], &t[1]);
        let lhs = path(dst, &[f.compat(Op::Plus, x, y)?, dst.constraint(Name::Comm, &[f.ob(x)?, f.ob(y)?])?])?;
        let rhs =
            path(dst, &[f.mor(&src.constraint(Name::Comm, &[x.clone(), y.clone()])?)?, f.compat(Op::Plus, y, x)?])?;
        Ok((lhs, rhs))
    })
}

/// Every morphism between objects of the source probe set, when hom-sets
/// can be enumerated.
pub fn probe_morphisms<S: CategoryOps + ?Sized>(s: &S) -> Option<Vec<S::Mor>> {
    let objs = s.objects();
    let mut out = Vec::new();
    for x in &objs {
        for y in &objs {
            out.extend(s.hom(x, y)?);
        }
    }
    Some(out)
}

/// `F` separates parallel morphisms: `Fu = Fv` implies `u = v` on every
/// enumerable hom-set of the source.
pub fn check_faithful<F: MonoidalFunctor + ?Sized>(f: &F) -> Check {
    let src = f.source();
    let objs = src.objects();
    let pairs: Vec<(usize, usize)> = (0..objs.len()).flat_map(|i| (0..objs.len()).map(move |j| (i, j))).collect();
    let per_pair: Vec<Check> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let mut c = Check::new("", "");
            let Some(homs) = src.hom(&objs[i], &objs[j]) else {
                return c;
            };
            let images: Vec<_> = homs.iter().map(|u| f.mor(u)).collect();
            for (k, u) in homs.iter().enumerate() {
                for (m, v) in homs.iter().enumerate().skip(k + 1) {
                    let show = || vec![format!("u={}", src.show_mor(u)), format!("v={}", src.show_mor(v))];
                    match (&images[k], &images[m]) {
                        (Ok(fu), Ok(fv)) => c.expect(fu != fv, show, "Fu = Fv for distinct u, v"),
                        (Err(e), _) | (_, Err(e)) => {
                            c.instances += 1;
                            c.fail(show(), format!("error: {e}"), String::new(), FailureKind::IllTyped(e.to_string()));
                        }
                    }
                }
            }
            c
        })
        .collect();
    let mut out = Check::new("functor/faithful", "F is faithful");
    for c in per_pair {
        out.instances += c.instances;
        out.failures.extend(c.failures);
    }
    out
}

/// Functoriality of `F` and naturality of its `op`-compatibility family
/// over enumerable hom-sets. Skipped (zero instances) otherwise.
pub fn check_functor_naturality<F: MonoidalFunctor + ?Sized>(f: &F, op: Op) -> Report {
    let (src, dst) = (f.source(), f.target());
    let mut r = Report::new();
    let Some(mors) = probe_morphisms(src) else {
        return r;
    };
    let composable: Vec<(SrcMor<F>, SrcMor<F>)> = mors
        .iter()
        .flat_map(|a| mors.iter().filter(|b| src.dom(a) == src.cod(b)).map(move |b| (a.clone(), b.clone())))
        .collect();
    let show_pair = |p: &(SrcMor<F>, SrcMor<F>)| vec![src.show_mor(&p.0), src.show_mor(&p.1)];
    r.push(check_items(dst, "functor/composition", "F(g∘f) = Fg ∘ Ff", &composable, show_pair, |(g, h)| {
        Ok((f.mor(&src.compose(g, h)?)?, dst.compose(&f.mor(g)?, &f.mor(h)?)?))
    }));
    let objs: Vec<Vec<SrcOb<F>>> = object_tuples(&src.objects(), 1);
    r.push(check_items(dst, "functor/identity", "F(id) = id", &objs, show_tuple(src, &["X"]), |t| {
        Ok((f.mor(&src.id(&t[0]))?, dst.id(&f.ob(&t[0])?)))
    }));
    let pairs: Vec<(SrcMor<F>, SrcMor<F>)> =
        mors.iter().flat_map(|a| mors.iter().map(move |b| (a.clone(), b.clone()))).collect();
    r.push(check_items(
        dst,
        format!("naturality/compat[{}]", op.symbol()),
        "F(X op Y) → FX op FY is natural",
        &pairs,
        show_pair,
        |(u, w)| {
            let lhs = path(dst, &[f.mor(&src.op_mor(op, u, w)?)?, f.compat(op, &src.cod(u), &src.cod(w))?])?;
            let rhs = path(dst, &[f.compat(op, &src.dom(u), &src.dom(w))?, dst.op_mor(op, &f.mor(u)?, &f.mor(w)?)?])?;
            Ok((lhs, rhs))
        },
    ));
    r
}

/// (2.3), (2.4), (2.4′) for `op`.
pub fn check_au_functor<F: MonoidalFunctor + ?Sized>(f: &F, op: Op) -> Report {
    let mut r = Report::new();
    r.push(check_functor_assoc(f, op));
    r.extend(check_functor_units(f, op));
    r
}

/// (2.3) and (2.6) for ⊕, plus naturality of `F̆` where hom-sets are finite.
pub fn check_ac_functor<F: MonoidalFunctor + ?Sized>(f: &F) -> Report {
    let mut r = Report::new();
    r.push(check_functor_assoc(f, Op::Plus));
    r.push(check_functor_comm(f));
    r.extend(check_functor_naturality(f, Op::Plus));
    r
}

/// (2.9) for a family `α: F → G` of target morphisms, plus naturality of
/// `α` over enumerable source hom-sets.
pub fn check_monoidal_morphism<F, G, A>(f: &F, g: &G, alpha: A, op: Op) -> Report
where
    F: MonoidalFunctor + ?Sized,
    G: MonoidalFunctor<Src = F::Src, Dst = F::Dst> + ?Sized,
    A: Fn(&SrcOb<F>) -> Result<DstMor<F>, EvalError> + Sync,
{
    let (src, dst) = (f.source(), f.target());
    let mut r = Report::new();
    let pairs = object_tuples(&src.objects(), 2);
    r.push(check_items(
        dst,
        format!("2.9[{}]", op.symbol()),
        "(2.9) monoidal morphism",
        &pairs,
        show_tuple(src, &["X", "Y"]),
        |t| {
            let (x, y) = (&t[0], &t[1]);
            let lhs = path(dst, &[alpha(&src.op_ob(op, x, y)?)?, g.compat(op, x, y)?])?;
            let rhs = path(dst, &[f.compat(op, x, y)?, dst.op_mor(op, &alpha(x)?, &alpha(y)?)?])?;
            Ok((lhs, rhs))
        },
    ));
    if let Some(mors) = probe_morphisms(src) {
        r.push(check_items(
            dst,
            "naturality/morphism",
            "α natural",
            &mors,
            |m| vec![src.show_mor(m)],
            |u| {
                let lhs = path(dst, &[f.mor(u)?, alpha(&src.cod(u))?])?;
                let rhs = path(dst, &[alpha(&src.dom(u))?, g.mor(u)?])?;
                Ok((lhs, rhs))
            },
        ));
    }
    r
}

/// The identity functor with identity compatibility data.
pub struct IdentityFunctor<'a, S>(pub &'a S);

impl<S: AnnStructure> MonoidalFunctor for IdentityFunctor<'_, S> {
    type Src = S;
    type Dst = S;

    fn source(&self) -> &S {
        self.0
    }
    fn target(&self) -> &S {
        self.0
    }
    fn ob(&self, x: &S::Ob) -> Result<S::Ob, EvalError> {
        Ok(x.clone())
    }
    fn mor(&self, f: &S::Mor) -> Result<S::Mor, EvalError> {
        Ok(f.clone())
    }
    fn compat(&self, op: Op, x: &S::Ob, y: &S::Ob) -> Result<S::Mor, EvalError> {
        Ok(self.0.id(&self.0.op_ob(op, x, y)?))
    }
    fn unit_iso(&self, op: Op) -> Result<S::Mor, EvalError> {
        Ok(self.0.id(&self.0.unit(op)?))
    }
}

/// `L^A: X ↦ A⊗X`, `u ↦ id_A ⊗ u`, with `L̆^A_{X,Y} = L_{A,X,Y}`.
pub struct LeftMul<'a, S: AnnStructure> {
    pub structure: &'a S,
    pub a: S::Ob,
    /// `L̂^A: A⊗0 → 0`, when known.
    pub zero: Option<S::Mor>,
}

impl<S: AnnStructure> MonoidalFunctor for LeftMul<'_, S> {
    type Src = S;
    type Dst = S;

    fn source(&self) -> &S {
        self.structure
    }
    fn target(&self) -> &S {
        self.structure
    }
    fn ob(&self, x: &S::Ob) -> Result<S::Ob, EvalError> {
        self.structure.op_ob(Op::Times, &self.a, x)
    }
    fn mor(&self, f: &S::Mor) -> Result<S::Mor, EvalError> {
        self.structure.op_mor(Op::Times, &self.structure.id(&self.a), f)
    }
    fn compat(&self, op: Op, x: &S::Ob, y: &S::Ob) -> Result<S::Mor, EvalError> {
        match op {
            Op::Plus => self.structure.constraint(Name::LeftDist, &[self.a.clone(), x.clone(), y.clone()]),
            Op::Times => Err(EvalError::Unavailable("L̃^A".into())),
        }
    }
    fn unit_iso(&self, op: Op) -> Result<S::Mor, EvalError> {
        match op {
            Op::Plus => self.zero.clone().ok_or_else(|| EvalError::Unavailable("Lhat".into())),
            Op::Times => Err(EvalError::Unavailable("L^A_1".into())),
        }
    }
}

/// `R^A: X ↦ X⊗A`, `u ↦ u ⊗ id_A`, with `R̆^A_{X,Y} = R_{X,Y,A}`.
pub struct RightMul<'a, S: AnnStructure> {
    pub structure: &'a S,
    pub a: S::Ob,
    pub zero: Option<S::Mor>,
}

impl<S: AnnStructure> MonoidalFunctor for RightMul<'_, S> {
    type Src = S;
    type Dst = S;

    fn source(&self) -> &S {
        self.structure
    }
    fn target(&self) -> &S {
        self.structure
    }
    fn ob(&self, x: &S::Ob) -> Result<S::Ob, EvalError> {
        self.structure.op_ob(Op::Times, x, &self.a)
    }
    fn mor(&self, f: &S::Mor) -> Result<S::Mor, EvalError> {
        self.structure.op_mor(Op::Times, f, &self.structure.id(&self.a))
    }
    fn compat(&self, op: Op, x: &S::Ob, y: &S::Ob) -> Result<S::Mor, EvalError> {
        match op {
            Op::Plus => self.structure.constraint(Name::RightDist, &[x.clone(), y.clone(), self.a.clone()]),
            Op::Times => Err(EvalError::Unavailable("R̃^A".into())),
        }
    }
    fn unit_iso(&self, op: Op) -> Result<S::Mor, EvalError> {
        match op {
            Op::Plus => self.zero.clone().ok_or_else(|| EvalError::Unavailable("Rhat".into())),
            Op::Times => Err(EvalError::Unavailable("R^A_1".into())),
        }
    }
}

/// `θ: X ↦ 0` with `θ̆ = g_0⁻¹`.
pub struct ZeroFunctor<'a, S>(pub &'a S);

impl<S: AnnStructure> MonoidalFunctor for ZeroFunctor<'_, S> {
    type Src = S;
    type Dst = S;

    fn source(&self) -> &S {
        self.0
    }
    fn target(&self) -> &S {
        self.0
    }
    fn ob(&self, _: &S::Ob) -> Result<S::Ob, EvalError> {
        self.0.unit(Op::Plus)
    }
    fn mor(&self, _: &S::Mor) -> Result<S::Mor, EvalError> {
        Ok(self.0.id(&self.0.unit(Op::Plus)?))
    }
    fn compat(&self, op: Op, _: &S::Ob, _: &S::Ob) -> Result<S::Mor, EvalError> {
        match op {
            Op::Plus => {
                let z = self.0.unit(Op::Plus)?;
                self.0.inverse(&self.0.constraint(Name::PlusLeftUnit, &[z])?)
            }
            Op::Times => Err(EvalError::Unavailable("θ̃".into())),
        }
    }
    fn unit_iso(&self, op: Op) -> Result<S::Mor, EvalError> {
        match op {
            Op::Plus => Ok(self.0.id(&self.0.unit(Op::Plus)?)),
            Op::Times => Err(EvalError::Unavailable("θ_1".into())),
        }
    }
}

/// `G ∘ F` with `(G∘F)~ = G̃_{FX,FY} ∘ G(F̃_{X,Y})` and
/// `(G∘F)_1 = G_1 ∘ G(F_1)`.
pub struct Composite<'a, F: ?Sized, G: ?Sized> {
    pub first: &'a F,
    pub second: &'a G,
}

pub fn compose_monoidal_functors<'a, F, G>(second: &'a G, first: &'a F) -> Composite<'a, F, G>
where
    F: MonoidalFunctor + ?Sized,
    G: MonoidalFunctor<Src = F::Dst> + ?Sized,
{
    Composite { first, second }
}

impl<F, G> MonoidalFunctor for Composite<'_, F, G>
where
    F: MonoidalFunctor + ?Sized,
    G: MonoidalFunctor<Src = F::Dst> + ?Sized,
{
    type Src = F::Src;
    type Dst = G::Dst;

    fn source(&self) -> &F::Src {
        self.first.source()
    }
    fn target(&self) -> &G::Dst {
        self.second.target()
    }
    fn ob(&self, x: &SrcOb<F>) -> Result<<G::Dst as CategoryOps>::Ob, EvalError> {
        self.second.ob(&self.first.ob(x)?)
    }
    fn mor(&self, f: &SrcMor<F>) -> Result<<G::Dst as CategoryOps>::Mor, EvalError> {
        self.second.mor(&self.first.mor(f)?)
    }
    fn compat(&self, op: Op, x: &SrcOb<F>, y: &SrcOb<F>) -> Result<<G::Dst as CategoryOps>::Mor, EvalError> {
        let inner = self.second.mor(&self.first.compat(op, x, y)?)?;
        let outer = self.second.compat(op, &self.first.ob(x)?, &self.first.ob(y)?)?;
        self.second.target().compose(&outer, &inner)
    }
    fn unit_iso(&self, op: Op) -> Result<<G::Dst as CategoryOps>::Mor, EvalError> {
        let inner = self.second.mor(&self.first.unit_iso(op)?)?;
        self.second.target().compose(&self.second.unit_iso(op)?, &inner)
    }
}

/// `(F⊕G)X = FX⊕GX` with `(F⊕G)˘ = v ∘ (F̆ ⊕ Ğ)`.
pub struct SumFunctor<'a, F: ?Sized, G: ?Sized> {
    pub left: &'a F,
    pub right: &'a G,
}

pub fn sum_functors<'a, S, F, G>(left: &'a F, right: &'a G) -> SumFunctor<'a, F, G>
where
    S: AnnStructure,
    F: MonoidalFunctor<Src = S, Dst = S> + ?Sized,
    G: MonoidalFunctor<Src = S, Dst = S> + ?Sized,
{
    SumFunctor { left, right }
}

impl<S, F, G> MonoidalFunctor for SumFunctor<'_, F, G>
where
    S: AnnStructure,
    F: MonoidalFunctor<Src = S, Dst = S> + ?Sized,
    G: MonoidalFunctor<Src = S, Dst = S> + ?Sized,
{
    type Src = S;
    type Dst = S;

    fn source(&self) -> &S {
        self.left.source()
    }
    fn target(&self) -> &S {
        self.left.target()
    }
    fn ob(&self, x: &S::Ob) -> Result<S::Ob, EvalError> {
        self.target().op_ob(Op::Plus, &self.left.ob(x)?, &self.right.ob(x)?)
    }
    fn mor(&self, f: &S::Mor) -> Result<S::Mor, EvalError> {
        self.target().op_mor(Op::Plus, &self.left.mor(f)?, &self.right.mor(f)?)
    }
    fn compat(&self, op: Op, x: &S::Ob, y: &S::Ob) -> Result<S::Mor, EvalError> {
        if op == Op::Times {
            return Err(EvalError::Unavailable("(F⊕G)~".into()));
        }
        let t = self.target();
        let both = t.op_mor(Op::Plus, &self.left.compat(op, x, y)?, &self.right.compat(op, x, y)?)?;
        let v = shuffle(t, &self.left.ob(x)?, &self.left.ob(y)?, &self.right.ob(x)?, &self.right.ob(y)?)?;
        t.compose(&v, &both)
    }
    fn unit_iso(&self, op: Op) -> Result<S::Mor, EvalError> {
        if op == Op::Times {
            return Err(EvalError::Unavailable("(F⊕G)_1".into()));
        }
        let t = self.target();
        let z = t.unit(Op::Plus)?;
        let both = t.op_mor(Op::Plus, &self.left.unit_iso(op)?, &self.right.unit_iso(op)?)?;
        t.compose(&t.constraint(Name::PlusLeftUnit, &[z])?, &both)
    }
}

/// A table functor between two table structures.
pub struct TableFunctor<'a, S, D> {
    pub source: &'a S,
    pub target: &'a D,
    pub data: &'a FunctorData,
    pub source_objects: usize,
}

impl<'a, S, D> TableFunctor<'a, S, D>
where
    S: AnnStructure<Ob = ObjId, Mor = MorId>,
    D: AnnStructure<Ob = ObjId, Mor = MorId>,
{
    pub fn new(source: &'a S, target: &'a D, data: &'a FunctorData) -> Self {
        TableFunctor { source, target, data, source_objects: source.objects().len() }
    }
}

impl<S, D> MonoidalFunctor for TableFunctor<'_, S, D>
where
    S: AnnStructure<Ob = ObjId, Mor = MorId>,
    D: AnnStructure<Ob = ObjId, Mor = MorId>,
{
    type Src = S;
    type Dst = D;

    fn source(&self) -> &S {
        self.source
    }
    fn target(&self) -> &D {
        self.target
    }
    fn ob(&self, x: &ObjId) -> Result<ObjId, EvalError> {
        Ok(self.data.ob(*x))
    }
    fn mor(&self, f: &MorId) -> Result<MorId, EvalError> {
        Ok(self.data.mor(*f))
    }
    fn compat(&self, op: Op, x: &ObjId, y: &ObjId) -> Result<MorId, EvalError> {
        let table = match op {
            Op::Plus => self.data.breve.as_ref(),
            Op::Times => self.data.tilde.as_ref(),
        };
        table
            .map(|t| t[x.index() * self.source_objects + y.index()])
            .ok_or_else(|| EvalError::Unavailable(format!("compatibility for {}", op.symbol())))
    }
    fn unit_iso(&self, op: Op) -> Result<MorId, EvalError> {
        match op {
            Op::Plus => self.data.zero_iso,
            Op::Times => self.data.unit_iso,
        }
        .ok_or_else(|| EvalError::Unavailable(format!("unit isomorphism for {}", op.symbol())))
    }
}

/// `v` as a table family of arity 4 over a finite structure.
pub fn build_v<S>(s: &S, c: &FinCategory) -> Result<NatFamily, EvalError>
where
    S: AnnStructure<Ob = ObjId, Mor = MorId>,
{
    let (source, target) = Name::Shuffle.shapes().expect("v has shapes");
    let mut err = None;
    let fam = NatFamily::from_fn("v", 4, source, target, c.object_count(), |t| {
        shuffle(s, &t[0], &t[1], &t[2], &t[3]).unwrap_or_else(|e| {
            err.get_or_insert(e);
            c.identity(t[0])
        })
    });
    err.map_or(Ok(fam), Err)
}
