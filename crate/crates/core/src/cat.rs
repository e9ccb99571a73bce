//! Finite categories, bifunctors and indexed families as explicit tables.

use crate::engine::CategoryOps;
use crate::error::{CatError, EvalError};
use crate::report::{Check, FailureKind, Report};
use crate::term::ObjTerm;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorId(pub u32);

impl ObjId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl MorId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorRecord {
    pub name: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// A finite category given by its object, morphism, identity and
/// composition tables. Composition is stored densely; entries are absent
/// only for non-composable pairs (or when deliberately left out, which
/// [`validate_category`] reports).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<MorRecord>,
    identity: Vec<MorId>,
    composition: Vec<Option<MorId>>,
    homs: Vec<Vec<MorId>>,
    inverses: Vec<Option<MorId>>,
    object_index: HashMap<String, ObjId>,
    morphism_index: HashMap<String, MorId>,
}

#[derive(Debug, Default, Clone)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<MorRecord>,
    identity: Vec<Option<MorId>>,
    composites: Vec<(MorId, MorId, MorId)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: impl Into<String>) -> ObjId {
        self.objects.push(name.into());
        self.identity.push(None);
        ObjId(self.objects.len() as u32 - 1)
    }

    pub fn morphism(&mut self, name: impl Into<String>, dom: ObjId, cod: ObjId) -> MorId {
        self.morphisms.push(MorRecord { name: name.into(), dom, cod });
        MorId(self.morphisms.len() as u32 - 1)
    }

    /// Adds a morphism `x → x` and declares it the identity of `x`.
    pub fn identity(&mut self, name: impl Into<String>, x: ObjId) -> MorId {
        let f = self.morphism(name, x, x);
        self.identity[x.index()] = Some(f);
        f
    }

    pub fn set_identity(&mut self, x: ObjId, f: MorId) {
        self.identity[x.index()] = Some(f);
    }

    /// Records `g ∘ f = h`.
    pub fn composite(&mut self, g: MorId, f: MorId, h: MorId) {
        self.composites.push((g, f, h));
    }

    /// Checks references and fills composites that the unit laws determine.
    pub fn build(self) -> Result<FinCategory, CatError> {
        let n = self.objects.len();
        let m = self.morphisms.len();
        let mut object_index = HashMap::new();
        for (i, o) in self.objects.iter().enumerate() {
            if object_index.insert(o.clone(), ObjId(i as u32)).is_some() {
                return Err(CatError::Duplicate(o.clone()));
            }
        }
        let mut morphism_index = HashMap::new();
        for (i, r) in self.morphisms.iter().enumerate() {
            if r.dom.index() >= n {
                return Err(CatError::UnknownObject(format!("#{}", r.dom.0)));
            }
            if r.cod.index() >= n {
                return Err(CatError::UnknownObject(format!("#{}", r.cod.0)));
            }
            if morphism_index.insert(r.name.clone(), MorId(i as u32)).is_some() {
                return Err(CatError::Duplicate(r.name.clone()));
            }
        }
        let identity = self
            .identity
            .iter()
            .enumerate()
            .map(|(i, f)| f.ok_or_else(|| CatError::UnknownMorphism(format!("identity of {}", self.objects[i]))))
            .collect::<Result<Vec<_>, _>>()?;
        let mut composition = vec![None; m * m];
        for &(g, f, h) in &self.composites {
            for x in [g, f, h] {
                if x.index() >= m {
                    return Err(CatError::UnknownMorphism(format!("#{}", x.0)));
                }
            }
            if self.morphisms[f.index()].cod != self.morphisms[g.index()].dom {
                return Err(CatError::NotComposable {
                    g: self.morphisms[g.index()].name.clone(),
                    f: self.morphisms[f.index()].name.clone(),
                });
            }
            composition[g.index() * m + f.index()] = Some(h);
        }
        for (fi, r) in self.morphisms.iter().enumerate() {
            let f = MorId(fi as u32);
            let left = identity[r.cod.index()];
            let right = identity[r.dom.index()];
            composition[left.index() * m + fi].get_or_insert(f);
            composition[fi * m + right.index()].get_or_insert(f);
        }
        let mut homs = vec![Vec::new(); n * n];
        for (i, r) in self.morphisms.iter().enumerate() {
            homs[r.dom.index() * n + r.cod.index()].push(MorId(i as u32));
        }
        let mut cat = FinCategory {
            objects: self.objects,
            morphisms: self.morphisms,
            identity,
            composition,
            homs,
            inverses: Vec::new(),
            object_index,
            morphism_index,
        };
        cat.refresh_inverses();
        Ok(cat)
    }
}

impl FinCategory {
    fn refresh_inverses(&mut self) {
        self.inverses = (0..self.morphisms.len())
            .map(|i| {
                let f = MorId(i as u32);
                let r = &self.morphisms[i];
                self.hom(r.cod, r.dom).iter().copied().find(|&g| {
                    self.composite(g, f) == Some(self.identity[r.dom.index()])
                        && self.composite(f, g) == Some(self.identity[r.cod.index()])
                })
            })
            .collect();
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + '_ {
        (0..self.objects.len() as u32).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> + '_ {
        (0..self.morphisms.len() as u32).map(MorId)
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.index()]
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.morphisms[f.index()].name
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjId> {
        self.object_index.get(name).copied()
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<MorId> {
        self.morphism_index.get(name).copied()
    }

    pub fn dom(&self, f: MorId) -> ObjId {
        self.morphisms[f.index()].dom
    }

    pub fn cod(&self, f: MorId) -> ObjId {
        self.morphisms[f.index()].cod
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identity[x.index()]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identity[self.dom(f).index()] == f
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x.index() * self.objects.len() + y.index()]
    }

    /// Raw table entry for `g ∘ f`, without endpoint checks.
    pub fn composite(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.composition[g.index() * self.morphisms.len() + f.index()]
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: MorId, f: MorId) -> Result<MorId, CatError> {
        let not =
            || CatError::NotComposable { g: self.morphism_name(g).to_string(), f: self.morphism_name(f).to_string() };
        if self.cod(f) != self.dom(g) {
            return Err(not());
        }
        self.composite(g, f).ok_or_else(not)
    }

    pub fn inverse_of(&self, f: MorId) -> Option<MorId> {
        self.inverses[f.index()]
    }

    /// Overwrites one composition entry. Used to build corrupted fixtures.
    pub fn override_composite(&mut self, g: MorId, f: MorId, h: MorId) {
        let m = self.morphisms.len();
        self.composition[g.index() * m + f.index()] = Some(h);
        self.refresh_inverses();
    }

    pub fn all_isomorphisms(&self) -> bool {
        self.inverses.iter().all(Option::is_some)
    }
}

impl CategoryOps for FinCategory {
    type Ob = ObjId;
    type Mor = MorId;

    fn dom(&self, f: &MorId) -> ObjId {
        FinCategory::dom(self, *f)
    }

    fn cod(&self, f: &MorId) -> ObjId {
        FinCategory::cod(self, *f)
    }

    fn id(&self, x: &ObjId) -> MorId {
        self.identity(*x)
    }

    fn compose(&self, g: &MorId, f: &MorId) -> Result<MorId, EvalError> {
        FinCategory::compose(self, *g, *f).map_err(|_| EvalError::NotComposable {
            g: self.morphism_name(*g).to_string(),
            f: self.morphism_name(*f).to_string(),
        })
    }

    fn inverse(&self, f: &MorId) -> Result<MorId, EvalError> {
        self.inverse_of(*f).ok_or_else(|| EvalError::NoInverse(self.morphism_name(*f).to_string()))
    }

    fn hom(&self, x: &ObjId, y: &ObjId) -> Option<Vec<MorId>> {
        Some(FinCategory::hom(self, *x, *y).to_vec())
    }

    fn objects(&self) -> Vec<ObjId> {
        FinCategory::objects(self).collect()
    }

    fn show_ob(&self, x: &ObjId) -> String {
        self.object_name(*x).to_string()
    }

    fn show_mor(&self, f: &MorId) -> String {
        self.morphism_name(*f).to_string()
    }
}

/// Scans every category law; violations carry the first witnesses in
/// lexicographic order of morphism indices.
pub fn validate_category(c: &FinCategory) -> Report {
    let mut report = Report::new();
    let name = |f: MorId| c.morphism_name(f).to_string();

    let mut ids = Check::new("identity", "identity endpoints");
    for x in c.objects() {
        let i = c.identity(x);
        ids.expect(
            c.dom(i) == x && c.cod(i) == x,
            || vec![c.object_name(x).to_string()],
            "identity has wrong endpoints",
        );
    }
    report.push(ids);

    let mut total = Check::new("composition-total", "composites exist with correct endpoints");
    let mut units = Check::new("unit-law", "id ∘ f = f = f ∘ id");
    for f in c.morphisms() {
        units.expect(
            c.composite(c.identity(c.cod(f)), f) == Some(f) && c.composite(f, c.identity(c.dom(f))) == Some(f),
            || vec![name(f)],
            "unit law fails",
        );
        for g in c.objects().flat_map(|y| c.hom(c.cod(f), y).iter().copied()) {
            let ok = c.composite(g, f).is_some_and(|h| c.dom(h) == c.dom(f) && c.cod(h) == c.cod(g));
            total.expect(ok, || vec![name(g), name(f)], "composite missing or misplaced");
        }
    }
    report.push(total);
    report.push(units);

    let mut assoc = Check::new("associativity", "h ∘ (g ∘ f) = (h ∘ g) ∘ f");
    for f in c.morphisms() {
        for g in c.objects().flat_map(|y| c.hom(c.cod(f), y).iter().copied()) {
            for h in c.objects().flat_map(|z| c.hom(c.cod(g), z).iter().copied()) {
                let lhs = c.composite(g, f).and_then(|gf| c.composite(h, gf));
                let rhs = c.composite(h, g).and_then(|hg| c.composite(hg, f));
                assoc.instances += 1;
                if lhs != rhs || lhs.is_none() {
                    let show = |m: Option<MorId>| m.map_or("undefined".to_string(), name);
                    assoc.fail(vec![name(h), name(g), name(f)], show(lhs), show(rhs), FailureKind::Mismatch);
                }
            }
        }
    }
    report.push(assoc);
    report
}

/// A bifunctor `C × C → C` as dense object and morphism tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bifunctor {
    objects: usize,
    morphisms: usize,
    obj_map: Vec<ObjId>,
    mor_map: Vec<MorId>,
}

impl Bifunctor {
    pub fn from_fns(
        c: &FinCategory,
        obj: impl Fn(ObjId, ObjId) -> ObjId,
        mor: impl Fn(MorId, MorId) -> MorId,
    ) -> Bifunctor {
        let obj_map = c.objects().flat_map(|x| c.objects().map(move |y| (x, y))).map(|(x, y)| obj(x, y)).collect();
        let mor_map = c.morphisms().flat_map(|f| c.morphisms().map(move |g| (f, g))).map(|(f, g)| mor(f, g)).collect();
        Bifunctor { objects: c.object_count(), morphisms: c.morphism_count(), obj_map, mor_map }
    }

    pub fn from_tables(c: &FinCategory, obj_map: Vec<ObjId>, mor_map: Vec<MorId>) -> Result<Bifunctor, CatError> {
        let (n, m) = (c.object_count(), c.morphism_count());
        if obj_map.len() != n * n {
            return Err(CatError::TableSize { table: "object map".into(), expected: n * n, found: obj_map.len() });
        }
        if mor_map.len() != m * m {
            return Err(CatError::TableSize { table: "morphism map".into(), expected: m * m, found: mor_map.len() });
        }
        Ok(Bifunctor { objects: n, morphisms: m, obj_map, mor_map })
    }

    pub fn obj(&self, x: ObjId, y: ObjId) -> ObjId {
        self.obj_map[x.index() * self.objects + y.index()]
    }

    pub fn mor(&self, f: MorId, g: MorId) -> MorId {
        self.mor_map[f.index() * self.morphisms + g.index()]
    }

    pub fn set_mor(&mut self, f: MorId, g: MorId, h: MorId) {
        self.mor_map[f.index() * self.morphisms + g.index()] = h;
    }
}

/// Checks endpoints, identities and the interchange law of `t`.
pub fn validate_bifunctor(c: &FinCategory, t: &Bifunctor) -> Report {
    let mut report = Report::new();
    let name = |f: MorId| c.morphism_name(f).to_string();

    let mut ends = Check::new("bifunctor-endpoints", "T(f,g): T(A,C) → T(B,D)");
    for f in c.morphisms() {
        for g in c.morphisms() {
            let h = t.mor(f, g);
            ends.expect(
                c.dom(h) == t.obj(c.dom(f), c.dom(g)) && c.cod(h) == t.obj(c.cod(f), c.cod(g)),
                || vec![name(f), name(g)],
                "component has wrong endpoints",
            );
        }
    }
    report.push(ends);

    let mut ids = Check::new("bifunctor-identity", "T(id,id) = id");
    for x in c.objects() {
        for y in c.objects() {
            ids.expect(
                t.mor(c.identity(x), c.identity(y)) == c.identity(t.obj(x, y)),
                || vec![c.object_name(x).to_string(), c.object_name(y).to_string()],
                "identity not preserved",
            );
        }
    }
    report.push(ids);

    let pairs: Vec<(MorId, MorId)> = c
        .morphisms()
        .flat_map(|f| c.objects().flat_map(move |y| c.hom(c.cod(f), y).iter().map(move |&g| (g, f))))
        .collect();
    let mut inter = Check::new("bifunctor-interchange", "T(f'∘f, g'∘g) = T(f',g') ∘ T(f,g)");
    for &(f2, f1) in &pairs {
        for &(g2, g1) in &pairs {
            inter.instances += 1;
            let lhs = c.composite(f2, f1).zip(c.composite(g2, g1)).map(|(a, b)| t.mor(a, b));
            let rhs = c.composite(t.mor(f2, g2), t.mor(f1, g1));
            if lhs != rhs || lhs.is_none() {
                let show = |m: Option<MorId>| m.map_or("undefined".to_string(), name);
                inter.fail(vec![name(f2), name(f1), name(g2), name(g1)], show(lhs), show(rhs), FailureKind::Mismatch);
            }
        }
    }
    report.push(inter);
    report
}

/// The operations a shape term may mention.
#[derive(Debug, Clone, Copy, Default)]
pub struct Ops<'a> {
    pub plus: Option<&'a Bifunctor>,
    pub times: Option<&'a Bifunctor>,
    pub zero: Option<ObjId>,
    pub one: Option<ObjId>,
}

impl Ops<'_> {
    pub fn eval_obj(&self, t: &ObjTerm, args: &[ObjId]) -> Result<ObjId, EvalError> {
        Ok(match t {
            ObjTerm::Var(i) => *args.get(*i).ok_or(EvalError::Unbound(*i))?,
            ObjTerm::Zero => self.zero.ok_or_else(|| EvalError::Unavailable("0".into()))?,
            ObjTerm::One => self.one.ok_or_else(|| EvalError::Unavailable("1".into()))?,
            ObjTerm::Oplus(a, b) => {
                let p = self.plus.ok_or_else(|| EvalError::Unavailable("oplus".into()))?;
                p.obj(self.eval_obj(a, args)?, self.eval_obj(b, args)?)
            }
            ObjTerm::Otimes(a, b) => {
                let p = self.times.ok_or_else(|| EvalError::Unavailable("otimes".into()))?;
                p.obj(self.eval_obj(a, args)?, self.eval_obj(b, args)?)
            }
        })
    }

    /// Evaluates a shape as a functor on morphisms.
    pub fn eval_mor(&self, c: &FinCategory, t: &ObjTerm, args: &[MorId]) -> Result<MorId, EvalError> {
        Ok(match t {
            ObjTerm::Var(i) => *args.get(*i).ok_or(EvalError::Unbound(*i))?,
            ObjTerm::Zero | ObjTerm::One => c.identity(self.eval_obj(t, &[])?),
            ObjTerm::Oplus(a, b) => {
                let p = self.plus.ok_or_else(|| EvalError::Unavailable("oplus".into()))?;
                p.mor(self.eval_mor(c, a, args)?, self.eval_mor(c, b, args)?)
            }
            ObjTerm::Otimes(a, b) => {
                let p = self.times.ok_or_else(|| EvalError::Unavailable("otimes".into()))?;
                p.mor(self.eval_mor(c, a, args)?, self.eval_mor(c, b, args)?)
            }
        })
    }
}

/// An indexed family of morphisms `η_{X₁..X_k}: S(X) → T(X)`, one component
/// per object tuple, stored densely (first index most significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatFamily {
    pub name: String,
    pub arity: usize,
    pub source: ObjTerm,
    pub target: ObjTerm,
    pub iso: bool,
    objects: usize,
    components: Vec<MorId>,
}

/// Iterates over all `k`-tuples of `0..n` in lexicographic order.
pub fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(k as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut i| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = i % n;
            i /= n;
        }
        t
    })
}

impl NatFamily {
    pub fn from_fn(
        name: impl Into<String>,
        arity: usize,
        source: ObjTerm,
        target: ObjTerm,
        objects: usize,
        mut f: impl FnMut(&[ObjId]) -> MorId,
    ) -> NatFamily {
        let components = tuples(objects, arity)
            .map(|t| {
                let args: Vec<ObjId> = t.into_iter().map(|i| ObjId(i as u32)).collect();
                f(&args)
            })
            .collect();
        NatFamily { name: name.into(), arity, source, target, iso: true, objects, components }
    }

    /// The family whose every component is the identity of its source.
    pub fn identity(
        name: impl Into<String>,
        arity: usize,
        source: ObjTerm,
        target: ObjTerm,
        c: &FinCategory,
        ops: &Ops<'_>,
    ) -> Result<NatFamily, EvalError> {
        let mut err = None;
        let fam = NatFamily::from_fn(name, arity, source.clone(), target, c.object_count(), |args| {
            match ops.eval_obj(&source, args) {
                Ok(x) => c.identity(x),
                Err(e) => {
                    err.get_or_insert(e);
                    MorId(0)
                }
            }
        });
        err.map_or(Ok(fam), Err)
    }

    fn index(&self, args: &[ObjId]) -> usize {
        args.iter().fold(0, |acc, x| acc * self.objects + x.index())
    }

    pub fn component(&self, args: &[ObjId]) -> MorId {
        self.components[self.index(args)]
    }

    pub fn set_component(&mut self, args: &[ObjId], f: MorId) {
        let i = self.index(args);
        self.components[i] = f;
    }

    pub fn is_identity_family(&self, c: &FinCategory) -> bool {
        self.components.iter().all(|&f| c.is_identity(f))
    }
}

/// Endpoints (as an error), naturality and, when flagged, invertibility.
pub fn validate_nat_family(c: &FinCategory, eta: &NatFamily, ops: &Ops<'_>) -> Result<Report, CatError> {
    let n = c.object_count();
    let objs = |t: &[usize]| t.iter().map(|&i| ObjId(i as u32)).collect::<Vec<_>>();
    let shape_err = |at: String, detail: String| CatError::ShapeMismatch { family: eta.name.clone(), at, detail };
    for t in tuples(n, eta.arity) {
        let args = objs(&t);
        let at = || args.iter().map(|&x| c.object_name(x)).collect::<Vec<_>>().join(",");
        let s = ops.eval_obj(&eta.source, &args).map_err(|e| shape_err(at(), e.to_string()))?;
        let tg = ops.eval_obj(&eta.target, &args).map_err(|e| shape_err(at(), e.to_string()))?;
        let f = eta.component(&args);
        if c.dom(f) != s || c.cod(f) != tg {
            return Err(shape_err(
                at(),
                format!(
                    "component {} : {} → {}, expected {} → {}",
                    c.morphism_name(f),
                    c.object_name(c.dom(f)),
                    c.object_name(c.cod(f)),
                    c.object_name(s),
                    c.object_name(tg)
                ),
            ));
        }
    }

    let mut report = Report::new();
    let mut nat = Check::new(format!("naturality/{}", eta.name), "naturality square");
    let m = c.morphism_count();
    for t in tuples(m, eta.arity) {
        let fs: Vec<MorId> = t.iter().map(|&i| MorId(i as u32)).collect();
        let doms: Vec<ObjId> = fs.iter().map(|&f| c.dom(f)).collect();
        let cods: Vec<ObjId> = fs.iter().map(|&f| c.cod(f)).collect();
        nat.instances += 1;
        let lhs = ops.eval_mor(c, &eta.source, &fs).ok().and_then(|s| c.composite(eta.component(&cods), s));
        let rhs = ops.eval_mor(c, &eta.target, &fs).ok().and_then(|tf| c.composite(tf, eta.component(&doms)));
        if lhs != rhs || lhs.is_none() {
            let show = |x: Option<MorId>| x.map_or("undefined".into(), |f| c.morphism_name(f).to_string());
            nat.fail(
                fs.iter().map(|&f| c.morphism_name(f).to_string()).collect(),
                show(lhs),
                show(rhs),
                FailureKind::Mismatch,
            );
        }
    }
    report.push(nat);

    if eta.iso {
        let mut inv = Check::new(format!("invertible/{}", eta.name), "every component is an isomorphism");
        for t in tuples(n, eta.arity) {
            let args = objs(&t);
            inv.expect(
                c.inverse_of(eta.component(&args)).is_some(),
                || args.iter().map(|&x| c.object_name(x).to_string()).collect(),
                "component has no inverse",
            );
        }
        report.push(inv);
    }
    Ok(report)
}

/// A functor between two finite categories, with optional monoidal data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorData {
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
    /// `F̆_{X,Y}: F(X⊕Y) → FX⊕FY`, indexed `x * n + y`.
    pub breve: Option<Vec<MorId>>,
    /// `F̃_{X,Y}: F(X⊗Y) → FX⊗FY`, indexed `x * n + y`.
    pub tilde: Option<Vec<MorId>>,
    /// `F0 → 0'`.
    pub zero_iso: Option<MorId>,
    /// `F1 → 1'`.
    pub unit_iso: Option<MorId>,
}

impl FunctorData {
    pub fn plain(obj_map: Vec<ObjId>, mor_map: Vec<MorId>) -> FunctorData {
        FunctorData { obj_map, mor_map, breve: None, tilde: None, zero_iso: None, unit_iso: None }
    }

    pub fn identity(c: &FinCategory) -> FunctorData {
        FunctorData::plain(c.objects().collect(), c.morphisms().collect())
    }

    pub fn ob(&self, x: ObjId) -> ObjId {
        self.obj_map[x.index()]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.mor_map[f.index()]
    }
}

/// Functoriality of `f`: endpoints, identities, composites.
pub fn validate_functor(src: &FinCategory, dst: &FinCategory, f: &FunctorData) -> Report {
    let mut report = Report::new();
    let mut check = Check::new("functor", "F preserves endpoints, identities and composites");
    let name = |m: MorId| src.morphism_name(m).to_string();
    for x in src.objects() {
        check.expect(
            f.mor(src.identity(x)) == dst.identity(f.ob(x)),
            || vec![src.object_name(x).to_string()],
            "identity not preserved",
        );
    }
    for g in src.morphisms() {
        let h = f.mor(g);
        check.expect(
            dst.dom(h) == f.ob(src.dom(g)) && dst.cod(h) == f.ob(src.cod(g)),
            || vec![name(g)],
            "endpoints not preserved",
        );
        for y in src.objects() {
            for &k in src.hom(src.cod(g), y) {
                let lhs = src.composite(k, g).map(|kg| f.mor(kg));
                let rhs = dst.composite(f.mor(k), f.mor(g));
                check.expect(lhs == rhs && lhs.is_some(), || vec![name(k), name(g)], "composite not preserved");
            }
        }
    }
    report.push(check);
    report
}
