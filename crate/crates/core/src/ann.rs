//! Ann-categories given by tables, the axiom verifier, Ann-functor checks
//! and the zero isomorphisms `L̂^A: A⊗0 → 0`, `R̂^A: 0⊗A → 0`.

use crate::cat::{
    validate_bifunctor, validate_category, validate_nat_family, FinCategory, MorId, NatFamily, ObjId, Ops,
};
use crate::catalog::{catalog, ANN1, ANN2, ANN3, ZERO_PROPERTIES, ZERO_SQUARES};
use crate::engine::{path, AnnStructure, CategoryOps, Context, Op};
use crate::error::{CatError, ConstructionError, EvalError};
use crate::report::{AxiomReport, Check, FailureKind, Report};
use crate::structures::{
    check_acu, check_au, check_items, check_pic, object_tuples, probe_morphisms, MonoidalData, MonoidalFunctor, PicData,
};
use crate::term::Name;
use std::collections::HashMap;

/// A finite Ann-category candidate. `times`, `ldist` and `rdist` are
/// absent for bare Pic-categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnCat {
    pub category: FinCategory,
    pub plus: PicData,
    pub times: Option<MonoidalData>,
    pub ldist: Option<NatFamily>,
    pub rdist: Option<NatFamily>,
}

impl AnnCat {
    pub fn pic_only(category: FinCategory, plus: PicData) -> AnnCat {
        AnnCat { category, plus, times: None, ldist: None, rdist: None }
    }

    pub fn ops(&self) -> Ops<'_> {
        Ops {
            plus: Some(&self.plus.monoidal.tensor),
            times: self.times.as_ref().map(|t| &t.tensor),
            zero: Some(self.plus.monoidal.unit),
            one: self.times.as_ref().map(|t| t.unit),
        }
    }

    pub fn zero(&self) -> ObjId {
        self.plus.monoidal.unit
    }

    pub fn one(&self) -> Option<ObjId> {
        self.times.as_ref().map(|t| t.unit)
    }

    pub fn family(&self, name: Name) -> Option<&NatFamily> {
        let p = &self.plus;
        let t = self.times.as_ref();
        match name {
            Name::Aplus => Some(&p.monoidal.assoc),
            Name::PlusLeftUnit => Some(&p.monoidal.left),
            Name::PlusRightUnit => Some(&p.monoidal.right),
            Name::Comm => Some(&p.comm),
            Name::Assoc => t.map(|t| &t.assoc),
            Name::LeftUnit => t.map(|t| &t.left),
            Name::RightUnit => t.map(|t| &t.right),
            Name::LeftDist => self.ldist.as_ref(),
            Name::RightDist => self.rdist.as_ref(),
            _ => None,
        }
    }

    pub fn family_mut(&mut self, name: Name) -> Option<&mut NatFamily> {
        let t = self.times.as_mut();
        match name {
            Name::Aplus => Some(&mut self.plus.monoidal.assoc),
            Name::PlusLeftUnit => Some(&mut self.plus.monoidal.left),
            Name::PlusRightUnit => Some(&mut self.plus.monoidal.right),
            Name::Comm => Some(&mut self.plus.comm),
            Name::Assoc => t.map(|t| &mut t.assoc),
            Name::LeftUnit => t.map(|t| &mut t.left),
            Name::RightUnit => t.map(|t| &mut t.right),
            Name::LeftDist => self.ldist.as_mut(),
            Name::RightDist => self.rdist.as_mut(),
            _ => None,
        }
    }

    /// Names of the families present, in catalog order.
    pub fn present_families(&self) -> Vec<Name> {
        Name::CONSTRAINTS.iter().copied().filter(|&n| self.family(n).is_some()).collect()
    }

    /// Categorical well-formedness: category laws, bifunctors, and
    /// endpoints, naturality and invertibility of every family.
    pub fn check_tables(&self) -> Result<Report, CatError> {
        let c = &self.category;
        let mut r = validate_category(c);
        let mut tag = |rep: Report, prefix: &str| {
            for mut ch in rep.checks {
                ch.id = format!("{prefix}/{}", ch.id);
                r.push(ch);
            }
        };
        tag(validate_bifunctor(c, &self.plus.monoidal.tensor), "oplus");
        if let Some(t) = &self.times {
            tag(validate_bifunctor(c, &t.tensor), "otimes");
        }
        let ops = self.ops();
        for name in self.present_families() {
            let fam = self.family(name).expect("present");
            tag(validate_nat_family(c, fam, &ops)?, name.as_str());
        }
        Ok(r)
    }
}

impl CategoryOps for AnnCat {
    type Ob = ObjId;
    type Mor = MorId;

    fn dom(&self, f: &MorId) -> ObjId {
        self.category.dom(*f)
    }
    fn cod(&self, f: &MorId) -> ObjId {
        self.category.cod(*f)
    }
    fn id(&self, x: &ObjId) -> MorId {
        self.category.identity(*x)
    }
    fn compose(&self, g: &MorId, f: &MorId) -> Result<MorId, EvalError> {
        CategoryOps::compose(&self.category, g, f)
    }
    fn inverse(&self, f: &MorId) -> Result<MorId, EvalError> {
        CategoryOps::inverse(&self.category, f)
    }
    fn hom(&self, x: &ObjId, y: &ObjId) -> Option<Vec<MorId>> {
        Some(self.category.hom(*x, *y).to_vec())
    }
    fn objects(&self) -> Vec<ObjId> {
        self.category.objects().collect()
    }
    fn show_ob(&self, x: &ObjId) -> String {
        self.category.object_name(*x).to_string()
    }
    fn show_mor(&self, f: &MorId) -> String {
        self.category.morphism_name(*f).to_string()
    }
}

impl AnnStructure for AnnCat {
    fn unit(&self, op: Op) -> Result<ObjId, EvalError> {
        match op {
            Op::Plus => Ok(self.zero()),
            Op::Times => self.one().ok_or_else(|| EvalError::Unavailable("1".into())),
        }
    }

    fn op_ob(&self, op: Op, x: &ObjId, y: &ObjId) -> Result<ObjId, EvalError> {
        match op {
            Op::Plus => Ok(self.plus.monoidal.tensor.obj(*x, *y)),
            Op::Times => {
                Ok(self.times.as_ref().ok_or_else(|| EvalError::Unavailable("otimes".into()))?.tensor.obj(*x, *y))
            }
        }
    }

    fn op_mor(&self, op: Op, f: &MorId, g: &MorId) -> Result<MorId, EvalError> {
        match op {
            Op::Plus => Ok(self.plus.monoidal.tensor.mor(*f, *g)),
            Op::Times => {
                Ok(self.times.as_ref().ok_or_else(|| EvalError::Unavailable("otimes".into()))?.tensor.mor(*f, *g))
            }
        }
    }

    fn constraint(&self, name: Name, args: &[ObjId]) -> Result<MorId, EvalError> {
        self.family(name).map(|f| f.component(args)).ok_or_else(|| EvalError::Unavailable(name.to_string()))
    }
}

/// Ann-1, Ann-2 and Ann-3 over the probe set of `s`.
pub fn verify_ann<S: AnnStructure + ?Sized>(s: &S) -> AxiomReport {
    let probe = s.objects();
    let ctx = Context::new(s);
    let mut r = ctx.check_all(catalog().group(ANN1), &probe);
    r.extend(ctx.check_all(catalog().group(ANN2), &probe));
    r.extend(ctx.check_all(catalog().group(ANN3), &probe));
    r
}

/// Everything: table well-formedness, the Pic structure on ⊕, the monoidal
/// structure on ⊗ and the three Ann axioms.
pub fn check_all(a: &AnnCat) -> Result<Report, CatError> {
    let mut r = a.check_tables()?;
    r.extend(check_au(a, Op::Plus));
    r.extend(check_acu(a));
    r.extend(check_pic(a, Op::Plus));
    if a.times.is_some() {
        r.extend(check_au(a, Op::Times));
        r.extend(verify_ann(a));
    }
    Ok(r)
}

/// (2.15) and (2.15′): compatibility of `F̆`, `F̃` with the distributors.
pub fn check_ann_functor<F: MonoidalFunctor + ?Sized>(f: &F) -> Report {
    let (src, dst) = (f.source(), f.target());
    let triples = object_tuples(&src.objects(), 3);
    let show =
        |t: &Vec<_>| ["A", "X", "Y"].iter().zip(t).map(|(n, x)| format!("{n}={}", src.show_ob(x))).collect::<Vec<_>>();
    let mut r = Report::new();
    r.push(check_items(dst, "2.15", "(2.15) F̆, F̃ vs L", &triples, show, |t| {
        let (a, x, y) = (&t[0], &t[1], &t[2]);
        let (fa, fx, fy) = (f.ob(a)?, f.ob(x)?, f.ob(y)?);
        let xy = src.op_ob(Op::Plus, x, y)?;
        let ax = src.op_ob(Op::Times, a, x)?;
        let ay = src.op_ob(Op::Times, a, y)?;
        let lhs = path(
            dst,
            &[
                f.mor(&src.constraint(Name::LeftDist, &[a.clone(), x.clone(), y.clone()])?)?,
                f.compat(Op::Plus, &ax, &ay)?,
                dst.op_mor(Op::Plus, &f.compat(Op::Times, a, x)?, &f.compat(Op::Times, a, y)?)?,
            ],
        )?;
        let rhs = path(
            dst,
            &[
                f.compat(Op::Times, a, &xy)?,
                dst.op_mor(Op::Times, &dst.id(&fa), &f.compat(Op::Plus, x, y)?)?,
                dst.constraint(Name::LeftDist, &[fa, fx, fy])?,
            ],
        )?;
        Ok((lhs, rhs))
    }));
    let show =
        |t: &Vec<_>| ["X", "Y", "A"].iter().zip(t).map(|(n, x)| format!("{n}={}", src.show_ob(x))).collect::<Vec<_>>();
    r.push(check_items(dst, "2.15'", "(2.15') F̆, F̃ vs R", &triples, show, |t| {
        let (x, y, a) = (&t[0], &t[1], &t[2]);
        let (fa, fx, fy) = (f.ob(a)?, f.ob(x)?, f.ob(y)?);
        let xy = src.op_ob(Op::Plus, x, y)?;
        let xa = src.op_ob(Op::Times, x, a)?;
        let ya = src.op_ob(Op::Times, y, a)?;
        let lhs = path(
            dst,
            &[
                f.mor(&src.constraint(Name::RightDist, &[x.clone(), y.clone(), a.clone()])?)?,
                f.compat(Op::Plus, &xa, &ya)?,
                dst.op_mor(Op::Plus, &f.compat(Op::Times, x, a)?, &f.compat(Op::Times, y, a)?)?,
            ],
        )?;
        let rhs = path(
            dst,
            &[
                f.compat(Op::Times, &xy, a)?,
                dst.op_mor(Op::Times, &f.compat(Op::Plus, x, y)?, &dst.id(&fa))?,
                dst.constraint(Name::RightDist, &[fx, fy, fa])?,
            ],
        )?;
        Ok((lhs, rhs))
    }));
    r
}

/// `L̂^A: A⊗0 → 0` and `R̂^A: 0⊗A → 0`, one per probe object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroIsoPair<O: std::hash::Hash + Eq, M> {
    pub lhat: HashMap<O, M>,
    pub rhat: HashMap<O, M>,
}

impl<O: std::hash::Hash + Eq + Clone, M: Clone> ZeroIsoPair<O, M> {
    /// Lets terms mention `Lhat` and `Rhat`.
    pub fn lookup(&self, name: Name, args: &[O]) -> Option<Result<M, EvalError>> {
        let table = match name {
            Name::LeftZero => &self.lhat,
            Name::RightZero => &self.rhat,
            _ => return None,
        };
        Some(
            table.get(&args[0]).cloned().ok_or_else(|| EvalError::Unavailable(format!("{name} outside the probe set"))),
        )
    }
}

/// Solves the first defining square at `X = 1` for each side, scanning
/// `Hom(A⊗0, 0)` (resp. `Hom(0⊗A, 0)`); exactly one candidate must survive.
/// The remaining squares are verified by [`check_zero_properties`].
pub fn derive_zero_isos<S: AnnStructure + ?Sized>(s: &S) -> Result<ZeroIsoPair<S::Ob, S::Mor>, ConstructionError> {
    let zero = s.unit(Op::Plus)?;
    let one = s.unit(Op::Times)?;
    let solve = |left: bool, a: &S::Ob| -> Result<S::Mor, ConstructionError> {
        let (a0, ax, what) = if left {
            (s.op_ob(Op::Times, a, &zero)?, s.op_ob(Op::Times, a, &one)?, format!("Lhat[{}]", s.show_ob(a)))
        } else {
            (s.op_ob(Op::Times, &zero, a)?, s.op_ob(Op::Times, &one, a)?, format!("Rhat[{}]", s.show_ob(a)))
        };
        let g_one = s.constraint(Name::PlusLeftUnit, std::slice::from_ref(&one))?;
        let (target, dist) = if left {
            (
                s.op_mor(Op::Times, &s.id(a), &g_one)?,
                s.constraint(Name::LeftDist, &[a.clone(), zero.clone(), one.clone()])?,
            )
        } else {
            (
                s.op_mor(Op::Times, &g_one, &s.id(a))?,
                s.constraint(Name::RightDist, &[zero.clone(), one.clone(), a.clone()])?,
            )
        };
        let g_ax = s.constraint(Name::PlusLeftUnit, std::slice::from_ref(&ax))?;
        let candidates =
            s.hom(&a0, &zero).ok_or_else(|| EvalError::Unavailable(format!("Hom({}, 0)", s.show_ob(&a0))))?;
        let mut found = Vec::new();
        for f in candidates {
            let lhs = path(s, &[dist.clone(), s.op_mor(Op::Plus, &f, &s.id(&ax))?, g_ax.clone()])?;
            if lhs == target {
                found.push(f);
            }
        }
        match found.len() {
            0 => Err(ConstructionError::NoSolution(what)),
            1 => Ok(found.pop().expect("one")),
            count => Err(ConstructionError::MultipleSolutions { what, count }),
        }
    };
    let mut pair = ZeroIsoPair { lhat: HashMap::new(), rhat: HashMap::new() };
    for a in s.objects() {
        pair.lhat.insert(a.clone(), solve(true, &a)?);
        pair.rhat.insert(a.clone(), solve(false, &a)?);
    }
    Ok(pair)
}

/// The four defining squares and the listed properties of the zero
/// isomorphisms, including naturality in the object argument.
pub fn check_zero_properties<S: AnnStructure + ?Sized>(s: &S, z: &ZeroIsoPair<S::Ob, S::Mor>) -> Report {
    let probe = s.objects();
    let ext = |name: Name, args: &[S::Ob]| z.lookup(name, args);
    let ctx = Context::with_extension(s, &ext);
    let mut r = ctx.check_all(catalog().group(ZERO_SQUARES), &probe);
    r.extend(ctx.check_all(catalog().group(ZERO_PROPERTIES), &probe));

    let Some(mors) = probe_morphisms(s) else {
        return r;
    };
    let zero = match s.unit(Op::Plus) {
        Ok(z) => z,
        Err(e) => {
            let mut c = Check::new("3.2i/triangles", "zero isos natural");
            c.fail(vec![], String::new(), String::new(), FailureKind::IllTyped(e.to_string()));
            r.push(c);
            return r;
        }
    };
    let show = |f: &S::Mor| vec![format!("f={}", s.show_mor(f))];
    let get = |m: &HashMap<S::Ob, S::Mor>, x: &S::Ob| {
        m.get(x).cloned().ok_or_else(|| EvalError::Unavailable("zero iso outside the probe set".into()))
    };
    r.push(check_items(s, "3.2i/L-triangle", "Lhat[B] . (f ⊗ id_0) = Lhat[A]", &mors, show, |f| {
        let lhs = s.compose(&get(&z.lhat, &s.cod(f))?, &s.op_mor(Op::Times, f, &s.id(&zero))?)?;
        Ok((lhs, get(&z.lhat, &s.dom(f))?))
    }));
    r.push(check_items(s, "3.2i/R-triangle", "Rhat[B] . (id_0 ⊗ f) = Rhat[A]", &mors, show, |f| {
        let lhs = s.compose(&get(&z.rhat, &s.cod(f))?, &s.op_mor(Op::Times, &s.id(&zero), f)?)?;
        Ok((lhs, get(&z.rhat, &s.dom(f))?))
    }));
    r
}
