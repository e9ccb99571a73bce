//! Concrete candidates from finite algebra: discrete ring categories
//! `D(R)`, skeletal bimodule categories `B(R, M)` twisted by cochains,
//! skeletal Pic-categories from cocycles, and a brute-force search for
//! constraint families with the verifier as oracle.

use crate::ann::{check_all, AnnCat};
use crate::cat::{Bifunctor, CategoryBuilder, MorId, NatFamily, ObjId};
use crate::error::ModelError;
use crate::structures::{MonoidalData, PicData};
use crate::term::Name;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// A finite abelian group on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    pub elements: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub zero: usize,
}

impl GroupTable {
    pub fn zmod(n: usize) -> GroupTable {
        GroupTable {
            elements: (0..n).map(|i| i.to_string()).collect(),
            add: (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect(),
            neg: (0..n).map(|x| (n - x) % n).collect(),
            zero: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        let n = self.len();
        let bad = |m: String| Err(ModelError::InvalidGroup(m));
        if n == 0
            || self.zero >= n
            || self.neg.len() != n
            || self.add.len() != n
            || self.add.iter().any(|r| r.len() != n)
        {
            return bad("table sizes do not match the carrier".into());
        }
        if self.add.iter().flatten().chain(&self.neg).any(|&v| v >= n) {
            return bad("entry outside the carrier".into());
        }
        let e = &self.elements;
        for x in 0..n {
            if self.add[self.zero][x] != x {
                return bad(format!("0 + {} ≠ {}", e[x], e[x]));
            }
            if self.add[x][self.neg[x]] != self.zero {
                return bad(format!("{} + (-{}) ≠ 0", e[x], e[x]));
            }
            for y in 0..n {
                if self.add[x][y] != self.add[y][x] {
                    return bad(format!("{} + {} is not commutative", e[x], e[y]));
                }
                for z in 0..n {
                    if self.add[self.add[x][y]][z] != self.add[x][self.add[y][z]] {
                        return bad(format!("addition not associative at ({}, {}, {})", e[x], e[y], e[z]));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A finite ring with unit on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingTable {
    pub additive: GroupTable,
    pub mul: Vec<Vec<usize>>,
    pub one: usize,
}

impl RingTable {
    pub fn zmod(n: usize) -> RingTable {
        RingTable {
            additive: GroupTable::zmod(n),
            mul: (0..n).map(|x| (0..n).map(|y| (x * y) % n).collect()).collect(),
            one: 1 % n,
        }
    }

    /// `F₂[t]/(t²)` with elements `0, 1, t, 1+t` encoded as `a + b·t`.
    pub fn f2_dual() -> RingTable {
        let enc = |a: usize, b: usize| a + 2 * b;
        let dec = |x: usize| (x % 2, x / 2);
        let add = (0..4)
            .map(|x| {
                (0..4)
                    .map(|y| {
                        let ((a, b), (c, d)) = (dec(x), dec(y));
                        enc((a + c) % 2, (b + d) % 2)
                    })
                    .collect()
            })
            .collect();
        let mul = (0..4)
            .map(|x| {
                (0..4)
                    .map(|y| {
                        let ((a, b), (c, d)) = (dec(x), dec(y));
                        enc(a * c % 2, (a * d + b * c) % 2)
                    })
                    .collect()
            })
            .collect();
        RingTable {
            additive: GroupTable {
                elements: ["0", "1", "t", "1+t"].map(String::from).to_vec(),
                add,
                neg: (0..4).collect(),
                zero: 0,
            },
            mul,
            one: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.additive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.additive.is_empty()
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.additive.add[x][y]
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        self.additive.validate().map_err(|e| ModelError::InvalidRing(e.to_string()))?;
        let n = self.len();
        let bad = |m: String| Err(ModelError::InvalidRing(m));
        if self.one >= n || self.mul.len() != n || self.mul.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return bad("multiplication table does not match the carrier".into());
        }
        let e = &self.additive.elements;
        let m = &self.mul;
        for x in 0..n {
            if m[self.one][x] != x || m[x][self.one] != x {
                return bad(format!("1 is not a unit at {}", e[x]));
            }
            for y in 0..n {
                for z in 0..n {
                    if m[m[x][y]][z] != m[x][m[y][z]] {
                        return bad(format!("multiplication not associative at ({}, {}, {})", e[x], e[y], e[z]));
                    }
                    if m[x][self.add(y, z)] != self.add(m[x][y], m[x][z]) {
                        return bad(format!("left distributivity fails at ({}, {}, {})", e[x], e[y], e[z]));
                    }
                    if m[self.add(x, y)][z] != self.add(m[x][z], m[y][z]) {
                        return bad(format!("right distributivity fails at ({}, {}, {})", e[x], e[y], e[z]));
                    }
                }
            }
        }
        Ok(())
    }
}

/// An `R`-bimodule `M` given by action tables `left[r][m]`, `right[m][r]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleData {
    pub ring: RingTable,
    pub module: GroupTable,
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
}

impl BimoduleData {
    /// `R` acting on itself by multiplication.
    pub fn regular(ring: RingTable) -> BimoduleData {
        BimoduleData { module: ring.additive.clone(), left: ring.mul.clone(), right: ring.mul.clone(), ring }
    }

    /// The zero module; `from_bimodule` on it gives the discrete category.
    pub fn zero(ring: RingTable) -> BimoduleData {
        let n = ring.len();
        BimoduleData {
            module: GroupTable { elements: vec!["0".into()], add: vec![vec![0]], neg: vec![0], zero: 0 },
            left: vec![vec![0]; n],
            right: vec![vec![0; n]],
            ring,
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        self.ring.validate()?;
        self.module.validate().map_err(|e| ModelError::InvalidBimodule(e.to_string()))?;
        let (n, k) = (self.ring.len(), self.module.len());
        let bad = |m: &str| Err(ModelError::InvalidBimodule(m.to_string()));
        if self.left.len() != n || self.left.iter().any(|r| r.len() != k || r.iter().any(|&v| v >= k)) {
            return bad("left action table does not match");
        }
        if self.right.len() != k || self.right.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= k)) {
            return bad("right action table does not match");
        }
        let (r, ma) = (&self.ring, &self.module.add);
        let (l, rt) = (&self.left, &self.right);
        for m in 0..k {
            if l[r.one][m] != m || rt[m][r.one] != m {
                return bad("actions are not unital");
            }
            for x in 0..n {
                for m2 in 0..k {
                    if l[x][ma[m][m2]] != ma[l[x][m]][l[x][m2]] || rt[ma[m][m2]][x] != ma[rt[m][x]][rt[m2][x]] {
                        return bad("actions are not additive in the module");
                    }
                }
                for y in 0..n {
                    if l[r.add(x, y)][m] != ma[l[x][m]][l[y][m]] || rt[m][r.add(x, y)] != ma[rt[m][x]][rt[m][y]] {
                        return bad("actions are not additive in the ring");
                    }
                    if l[r.mul[x][y]][m] != l[x][l[y][m]] || rt[m][r.mul[x][y]] != rt[rt[m][x]][y] {
                        return bad("actions are not associative");
                    }
                    if rt[l[x][m]][y] != l[x][rt[m][y]] {
                        return bad("left and right actions do not commute");
                    }
                }
            }
        }
        Ok(())
    }
}

/// Module-valued functions on object tuples, one per constraint name,
/// stored densely in lexicographic tuple order. Absent names mean zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CochainSet {
    pub values: BTreeMap<Name, Vec<usize>>,
}

impl CochainSet {
    pub fn new() -> CochainSet {
        CochainSet::default()
    }

    pub fn with(mut self, name: Name, values: Vec<usize>) -> CochainSet {
        self.values.insert(name, values);
        self
    }

    /// The value at `tuple` (ring element indices), or `zero`.
    pub fn get(&self, name: Name, tuple: &[usize], objects: usize, zero: usize) -> usize {
        self.values.get(&name).map_or(zero, |v| v[tuple.iter().fold(0, |acc, &i| acc * objects + i)])
    }

    pub fn is_zero(&self, zero: usize) -> bool {
        self.values.values().flatten().all(|&v| v == zero)
    }
}

struct Skeleton<'a> {
    names: &'a [String],
    plus: &'a [Vec<usize>],
    zero: usize,
    /// `(mul, left action, right action, one)`.
    times: Option<(&'a [Vec<usize>], &'a [Vec<usize>], &'a [Vec<usize>], usize)>,
    module: &'a GroupTable,
    cochains: &'a CochainSet,
}

impl Skeleton<'_> {
    fn build(&self) -> Result<AnnCat, ModelError> {
        let (n, k) = (self.names.len(), self.module.len());
        let mut b = CategoryBuilder::new();
        for x in self.names {
            b.object(x.clone());
        }
        for x in 0..n {
            for m in 0..k {
                let name = if k == 1 {
                    format!("id_{}", self.names[x])
                } else {
                    format!("({},{})", self.names[x], self.module.elements[m])
                };
                if m == self.module.zero {
                    b.identity(name, ObjId(x as u32));
                } else {
                    b.morphism(name, ObjId(x as u32), ObjId(x as u32));
                }
            }
        }
        let mor = |x: usize, m: usize| MorId((x * k + m) as u32);
        let split = |f: MorId| (f.index() / k, f.index() % k);
        let madd = &self.module.add;
        for x in 0..n {
            for m in 0..k {
                for m2 in 0..k {
                    b.composite(mor(x, m), mor(x, m2), mor(x, madd[m][m2]));
                }
            }
        }
        let c = b.build()?;
        let plus = Bifunctor::from_fns(
            &c,
            |x, y| ObjId(self.plus[x.index()][y.index()] as u32),
            |f, g| {
                let ((x, m), (y, m2)) = (split(f), split(g));
                mor(self.plus[x][y], madd[m][m2])
            },
        );
        let times = self.times.map(|(mul, left, right, _)| {
            Bifunctor::from_fns(
                &c,
                |x, y| ObjId(mul[x.index()][y.index()] as u32),
                |f, g| {
                    let ((x, m), (y, m2)) = (split(f), split(g));
                    mor(mul[x][y], madd[left[x][m2]][right[m][y]])
                },
            )
        });
        let ops = crate::cat::Ops {
            plus: Some(&plus),
            times: times.as_ref(),
            zero: Some(ObjId(self.zero as u32)),
            one: self.times.map(|t| ObjId(t.3 as u32)),
        };
        let family = |name: Name| -> NatFamily {
            let (source, target) = name.shapes().expect("constraint shapes");
            NatFamily::from_fn(name.as_str(), name.arity(), source.clone(), target, n, |t| {
                let x = ops.eval_obj(&source, t).expect("operations present");
                let idx: Vec<usize> = t.iter().map(|o| o.index()).collect();
                mor(x.index(), self.cochains.get(name, &idx, n, self.module.zero))
            })
        };
        let pic = PicData {
            monoidal: MonoidalData {
                tensor: plus.clone(),
                unit: ObjId(self.zero as u32),
                assoc: family(Name::Aplus),
                left: family(Name::PlusLeftUnit),
                right: family(Name::PlusRightUnit),
            },
            comm: family(Name::Comm),
        };
        let Some(times) = times.as_ref() else {
            return Ok(AnnCat::pic_only(c, pic));
        };
        let mon = MonoidalData {
            tensor: times.clone(),
            unit: ObjId(self.times.expect("times").3 as u32),
            assoc: family(Name::Assoc),
            left: family(Name::LeftUnit),
            right: family(Name::RightUnit),
        };
        let (ldist, rdist) = (family(Name::LeftDist), family(Name::RightDist));
        Ok(AnnCat { category: c, plus: pic, times: Some(mon), ldist: Some(ldist), rdist: Some(rdist) })
    }
}

/// The discrete category `D(R)`: objects the elements, identities only,
/// every constraint an identity.
pub fn from_ring(r: &RingTable) -> Result<AnnCat, ModelError> {
    from_bimodule(&BimoduleData::zero(r.clone()), &CochainSet::new())
}

/// The skeletal category `B(R, M)` with constraint components twisted by
/// `t`. Whether it is an Ann-category is left to the verifier.
pub fn from_bimodule(b: &BimoduleData, t: &CochainSet) -> Result<AnnCat, ModelError> {
    b.validate()?;
    let n = b.ring.len();
    for (name, v) in &t.values {
        let want = n.pow(name.arity() as u32);
        if v.len() != want || v.iter().any(|&m| m >= b.module.len()) {
            return Err(ModelError::InvalidBimodule(format!("cochain for `{name}` must have {want} module values")));
        }
    }
    Skeleton {
        names: &b.ring.additive.elements,
        plus: &b.ring.additive.add,
        zero: b.ring.additive.zero,
        times: Some((&b.ring.mul, &b.left, &b.right, b.ring.one)),
        module: &b.module,
        cochains: t,
    }
    .build()
}

/// The skeletal Pic-category candidate with objects `m`, automorphisms
/// `n`, `a⁺` components `h` and `c` components `cc` (dense, lexicographic).
pub fn pic_from_cocycle(m: &GroupTable, n: &GroupTable, h: &[usize], cc: &[usize]) -> Result<AnnCat, ModelError> {
    m.validate()?;
    n.validate()?;
    let k = m.len();
    if h.len() != k.pow(3) || cc.len() != k * k || h.iter().chain(cc).any(|&v| v >= n.len()) {
        return Err(ModelError::InvalidGroup("cocycle tables do not match the groups".into()));
    }
    let t = CochainSet::new().with(Name::Aplus, h.to_vec()).with(Name::Comm, cc.to_vec());
    Skeleton { names: &m.elements, plus: &m.add, zero: m.zero, times: None, module: n, cochains: &t }.build()
}

/// `(h, cc)` obtained by twisting the trivial structure on `m` by a
/// 2-cochain `f: M² → N` with `f(0, _) = f(_, 0) = 0`:
/// `h(x,y,z) = f(y,z) − f(x+y,z) + f(x,y+z) − f(x,y)` and
/// `cc(x,y) = f(x,y) − f(y,x)`. The result always passes the Pic checks.
pub fn coboundary(m: &GroupTable, n: &GroupTable, f: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = m.len();
    let (add, sub) = (|a: usize, b: usize| n.add[a][b], |a: usize, b: usize| n.add[a][n.neg[b]]);
    let f2 = |x: usize, y: usize| f[x * k + y];
    let mut h = Vec::with_capacity(k * k * k);
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                let a = sub(f2(y, z), f2(m.add[x][y], z));
                h.push(sub(add(a, f2(x, m.add[y][z])), f2(x, y)));
            }
        }
    }
    let cc = (0..k).flat_map(|x| (0..k).map(move |y| (x, y))).map(|(x, y)| sub(f2(x, y), f2(y, x))).collect();
    (h, cc)
}

/// Every cochain assignment to `names` whose category passes all checks,
/// in lexicographic order of the value vectors. Fails fast when the
/// candidate count exceeds `bound`.
pub fn search_constraint_families(
    b: &BimoduleData,
    names: &[Name],
    bound: u128,
) -> Result<Vec<CochainSet>, ModelError> {
    b.validate()?;
    let (n, k) = (b.ring.len() as u128, b.module.len() as u128);
    let mut names = names.to_vec();
    names.sort();
    names.dedup();
    let slots: Vec<usize> = names.iter().map(|nm| n.pow(nm.arity() as u32) as usize).collect();
    let total_slots: u32 = slots.iter().sum::<usize>() as u32;
    let estimate = k.checked_pow(total_slots).unwrap_or(u128::MAX);
    if estimate > bound {
        return Err(ModelError::BoundExceeded { estimate, bound });
    }
    let decode = |mut i: u128| {
        let mut values = vec![0usize; total_slots as usize];
        for v in values.iter_mut().rev() {
            *v = (i % k) as usize;
            i /= k;
        }
        let mut set = CochainSet::new();
        let mut rest = &values[..];
        for (nm, &len) in names.iter().zip(&slots) {
            set = set.with(*nm, rest[..len].to_vec());
            rest = &rest[len..];
        }
        set
    };
    let found: Vec<CochainSet> = (0..estimate as u64)
        .into_par_iter()
        .filter_map(|i| {
            let set = decode(i as u128);
            let a = from_bimodule(b, &set).ok()?;
            check_all(&a).ok()?.passed().then_some(set)
        })
        .collect();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ann::{check_zero_properties, derive_zero_isos, verify_ann};
    use crate::engine::Op;
    use crate::structures::{check_acu, check_pic, object_inverses};

    fn passes(a: &AnnCat) -> bool {
        let r = check_all(a).unwrap();
        if !r.passed() {
            eprintln!("{}", r.render_text());
        }
        r.passed()
    }

    #[test]
    fn rings_validate() {
        for r in [RingTable::zmod(2), RingTable::zmod(6), RingTable::f2_dual()] {
            r.validate().unwrap();
        }
    }

    #[test]
    fn broken_distributivity_is_rejected() {
        let mut r = RingTable::zmod(3);
        r.mul[2][2] = 0;
        assert!(matches!(r.validate(), Err(ModelError::InvalidRing(_))));
    }

    #[test]
    fn discrete_rings_pass() {
        for r in [RingTable::zmod(2), RingTable::zmod(6), RingTable::f2_dual()] {
            let a = from_ring(&r).unwrap();
            assert!(passes(&a));
        }
    }

    #[test]
    fn z6_has_1296_instances_on_4_variable_diagrams() {
        let a = from_ring(&RingTable::zmod(6)).unwrap();
        let r = verify_ann(&a);
        for id in ["2.10", "2.10'", "2.11", "2.12"] {
            assert_eq!(r.check(id).unwrap().instances, 1296);
        }
    }

    #[test]
    fn trivial_bimodules_pass() {
        for n in [2, 4] {
            let a = from_bimodule(&BimoduleData::regular(RingTable::zmod(n)), &CochainSet::new()).unwrap();
            assert!(passes(&a), "B(Z/{n})");
        }
    }

    #[test]
    fn zero_isos_are_identities_on_trivial_models() {
        let a = from_bimodule(&BimoduleData::regular(RingTable::zmod(2)), &CochainSet::new()).unwrap();
        let z = derive_zero_isos(&a).unwrap();
        let zero = a.category.identity(a.zero());
        assert!(z.lhat.values().chain(z.rhat.values()).all(|&f| f == zero));
        assert!(check_zero_properties(&a, &z).passed());
    }

    #[test]
    fn pentagon_breaking_cochain_fails_the_plus_pentagon() {
        let b = BimoduleData::regular(RingTable::zmod(2));
        let mut h = vec![0; 8];
        h[7] = 1;
        let a = from_bimodule(&b, &CochainSet::new().with(Name::Aplus, h)).unwrap();
        assert!(!check_all(&a).unwrap().passed());
    }

    #[test]
    fn symmetric_pic_with_nontrivial_commutativity() {
        let z2 = GroupTable::zmod(2);
        let p = pic_from_cocycle(&z2, &z2, &[0; 8], &[0, 0, 0, 1]).unwrap();
        assert!(check_acu(&p).passed());
        assert!(check_pic(&p, Op::Plus).passed());
    }

    #[test]
    fn coboundary_twists_give_valid_pic_data() {
        let z3 = GroupTable::zmod(3);
        let mut f = vec![0; 9];
        f[4] = 1;
        f[5] = 2;
        let (h, cc) = coboundary(&z3, &z3, &f);
        assert!(h.iter().any(|&v| v != 0));
        let p = pic_from_cocycle(&z3, &z3, &h, &cc).unwrap();
        assert!(check_all(&p).unwrap().passed(), "{}", check_all(&p).unwrap().render_text());
    }

    #[test]
    fn inverse_objects_in_z6() {
        let a = from_ring(&RingTable::zmod(6)).unwrap();
        let inv = object_inverses(&a, Op::Plus).unwrap();
        assert_eq!(inv[2].1, Some(ObjId(4)));
    }

    #[test]
    fn search_respects_the_bound() {
        let b = BimoduleData::regular(RingTable::zmod(2));
        let e = search_constraint_families(&b, &[Name::Aplus, Name::Comm], 10).unwrap_err();
        assert_eq!(e, ModelError::BoundExceeded { estimate: 4096, bound: 10 });
    }

    #[test]
    fn search_includes_the_zero_cochain() {
        let b = BimoduleData::regular(RingTable::zmod(2));
        let found = search_constraint_families(&b, &[Name::Comm], 1 << 10).unwrap();
        assert!(found.iter().any(|t| t.is_zero(0)));
    }
}
