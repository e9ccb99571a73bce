//! ⊕-strictification: words over the objects of an Ann-category, with
//! concatenation as a strictly associative and unital sum.
//!
//! A word evaluates by left fold, `ev[] = 0`, `ev(w·z) = ev(w) ⊕ z`, and a
//! morphism `v → w` is a base morphism `ev v → ev w`. The remaining
//! structure is transported along `ev` with `ev˘ = φ⁻¹` and `ev~ = id`,
//! where `φ_{v,w}: ev v ⊕ ev w → ev(vw)` is the canonical isomorphism.

use super::transfer::{required_image, EquivalenceView, TransferFrame};
use crate::ann::AnnCat;
use crate::cat::{tuples, MorId, ObjId};
use crate::engine::{AnnStructure, CategoryOps, Op};
use crate::error::EvalError;
use crate::structures::MonoidalFunctor;
use crate::term::Name;

pub type Word = Vec<ObjId>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordMor {
    pub dom: Word,
    pub cod: Word,
    pub base: MorId,
}

/// The strictified category; `objects()` lists words of length at most
/// `depth`, which is what checks enumerate.
pub struct Strictified<'a> {
    pub base: &'a AnnCat,
    pub depth: usize,
}

pub fn strictify_plus(base: &AnnCat, depth: usize) -> Strictified<'_> {
    Strictified { base, depth }
}

impl<'a> Strictified<'a> {
    pub fn eval(&self, w: &[ObjId]) -> ObjId {
        let p = &self.base.plus.monoidal.tensor;
        match w.split_first() {
            None => self.base.zero(),
            Some((first, rest)) => rest.iter().fold(*first, |acc, &z| p.obj(acc, z)),
        }
    }

    /// `φ_{v,w}: ev v ⊕ ev w → ev(vw)`.
    pub fn phi(&self, v: &[ObjId], w: &[ObjId]) -> Result<MorId, EvalError> {
        let b = self.base;
        match (v.is_empty(), w) {
            (_, []) => b.constraint(Name::PlusRightUnit, &[self.eval(v)]),
            (true, _) => b.constraint(Name::PlusLeftUnit, &[self.eval(w)]),
            (false, [_]) => Ok(b.category.identity(b.op_ob(Op::Plus, &self.eval(v), &self.eval(w))?)),
            (false, [init @ .., z]) => {
                let assoc = b.constraint(Name::Aplus, &[self.eval(v), self.eval(init), *z])?;
                let step = b.op_mor(Op::Plus, &self.phi(v, init)?, &b.category.identity(*z))?;
                b.compose(&step, &assoc)
            }
        }
    }

    pub fn letter(&self, x: ObjId) -> Word {
        vec![x]
    }

    fn lift(&self, dom: Word, cod: Word, base: MorId) -> Result<WordMor, EvalError> {
        let c = &self.base.category;
        if c.dom(base) != self.eval(&dom) || c.cod(base) != self.eval(&cod) {
            return Err(EvalError::IllTyped(format!("{} does not lie over the given words", c.morphism_name(base))));
        }
        Ok(WordMor { dom, cod, base })
    }
}

impl CategoryOps for Strictified<'_> {
    type Ob = Word;
    type Mor = WordMor;

    fn dom(&self, f: &WordMor) -> Word {
        f.dom.clone()
    }
    fn cod(&self, f: &WordMor) -> Word {
        f.cod.clone()
    }
    fn id(&self, x: &Word) -> WordMor {
        WordMor { dom: x.clone(), cod: x.clone(), base: self.base.category.identity(self.eval(x)) }
    }
    fn compose(&self, g: &WordMor, f: &WordMor) -> Result<WordMor, EvalError> {
        if g.dom != f.cod {
            return Err(EvalError::NotComposable { g: self.show_mor(g), f: self.show_mor(f) });
        }
        Ok(WordMor { dom: f.dom.clone(), cod: g.cod.clone(), base: self.base.compose(&g.base, &f.base)? })
    }
    fn inverse(&self, f: &WordMor) -> Result<WordMor, EvalError> {
        Ok(WordMor { dom: f.cod.clone(), cod: f.dom.clone(), base: self.base.inverse(&f.base)? })
    }
    fn hom(&self, x: &Word, y: &Word) -> Option<Vec<WordMor>> {
        let h = self.base.category.hom(self.eval(x), self.eval(y));
        Some(h.iter().map(|&base| WordMor { dom: x.clone(), cod: y.clone(), base }).collect())
    }
    fn objects(&self) -> Vec<Word> {
        let n = self.base.category.object_count();
        (0..=self.depth)
            .flat_map(|len| tuples(n, len).map(|t| t.into_iter().map(|i| ObjId(i as u32)).collect()))
            .collect()
    }
    fn show_ob(&self, x: &Word) -> String {
        let names: Vec<&str> = x.iter().map(|&o| self.base.category.object_name(o)).collect();
        format!("[{}]", names.join(","))
    }
    fn show_mor(&self, f: &WordMor) -> String {
        format!("{}:{}→{}", self.base.category.morphism_name(f.base), self.show_ob(&f.dom), self.show_ob(&f.cod))
    }
}

impl TransferFrame for Strictified<'_> {
    type Src = Word;
    type T = AnnCat;

    fn structured(&self) -> &AnnCat {
        self.base
    }
    fn ob(&self, x: &Word) -> Result<ObjId, EvalError> {
        Ok(self.eval(x))
    }
    fn op(&self, op: Op, x: &Word, y: &Word) -> Result<Word, EvalError> {
        match op {
            Op::Plus => Ok([x.as_slice(), y.as_slice()].concat()),
            Op::Times => Ok(vec![self.base.op_ob(Op::Times, &self.eval(x), &self.eval(y))?]),
        }
    }
    fn unit(&self, op: Op) -> Result<Word, EvalError> {
        match op {
            Op::Plus => Ok(Vec::new()),
            Op::Times => Ok(vec![self.base.unit(Op::Times)?]),
        }
    }
    fn compat(&self, op: Op, x: &Word, y: &Word) -> Result<MorId, EvalError> {
        match op {
            Op::Plus => self.base.inverse(&self.phi(x, y)?),
            Op::Times => Ok(self.base.category.identity(self.eval(&self.op(op, x, y)?))),
        }
    }
    fn unit_iso(&self, op: Op) -> Result<MorId, EvalError> {
        Ok(self.base.category.identity(self.base.unit(op)?))
    }
}

impl AnnStructure for Strictified<'_> {
    fn unit(&self, op: Op) -> Result<Word, EvalError> {
        TransferFrame::unit(self, op)
    }
    fn op_ob(&self, op: Op, x: &Word, y: &Word) -> Result<Word, EvalError> {
        TransferFrame::op(self, op, x, y)
    }
    fn op_mor(&self, op: Op, f: &WordMor, g: &WordMor) -> Result<WordMor, EvalError> {
        let dom = TransferFrame::op(self, op, &f.dom, &g.dom)?;
        let cod = TransferFrame::op(self, op, &f.cod, &g.cod)?;
        let inner = self.base.op_mor(op, &f.base, &g.base)?;
        let base = match op {
            Op::Plus => {
                let pre = self.base.inverse(&self.phi(&f.dom, &g.dom)?)?;
                self.base.compose(&self.phi(&f.cod, &g.cod)?, &self.base.compose(&inner, &pre)?)?
            }
            Op::Times => inner,
        };
        self.lift(dom, cod, base)
    }
    fn constraint(&self, name: Name, args: &[Word]) -> Result<WordMor, EvalError> {
        let (source, target) = name.shapes().ok_or_else(|| EvalError::Unavailable(name.to_string()))?;
        let dom = super::transfer::frame_obj(self, &source, args)?;
        let cod = super::transfer::frame_obj(self, &target, args)?;
        match name {
            Name::Aplus | Name::PlusLeftUnit | Name::PlusRightUnit => Ok(self.id(&dom)),
            _ => {
                let base = required_image(self, name, args)?;
                self.lift(dom, cod, base)
            }
        }
    }
}

/// The canonical equivalence: `F = ev`, `F′ = x ↦ [x]`,
/// `α_w = id_{ev w}: [ev w] → w`, `α′ = id`.
impl<'a> EquivalenceView for Strictified<'a> {
    type A = Strictified<'a>;
    type B = AnnCat;

    fn source(&self) -> &Strictified<'a> {
        self
    }
    fn target(&self) -> &AnnCat {
        self.base
    }
    fn f_ob(&self, x: &Word) -> ObjId {
        self.eval(x)
    }
    fn f_mor(&self, u: &WordMor) -> Result<MorId, EvalError> {
        Ok(u.base)
    }
    fn fp_ob(&self, y: &ObjId) -> Word {
        vec![*y]
    }
    fn fp_mor(&self, v: &MorId) -> Result<WordMor, EvalError> {
        let c = &self.base.category;
        Ok(WordMor { dom: vec![c.dom(*v)], cod: vec![c.cod(*v)], base: *v })
    }
    fn alpha(&self, x: &Word) -> WordMor {
        WordMor { dom: vec![self.eval(x)], cod: x.clone(), base: self.base.category.identity(self.eval(x)) }
    }
    fn alpha_prime(&self, y: &ObjId) -> MorId {
        self.base.category.identity(*y)
    }
}

/// `ev` as an Ann-functor: `ev˘ = φ⁻¹`, `ev~ = id`, identity unit isos.
pub struct EvalFunctor<'s, 'a>(pub &'s Strictified<'a>);

impl<'a> MonoidalFunctor for EvalFunctor<'_, 'a> {
    type Src = Strictified<'a>;
    type Dst = AnnCat;

    fn source(&self) -> &Strictified<'a> {
        self.0
    }
    fn target(&self) -> &AnnCat {
        self.0.base
    }
    fn ob(&self, x: &Word) -> Result<ObjId, EvalError> {
        Ok(self.0.eval(x))
    }
    fn mor(&self, f: &WordMor) -> Result<MorId, EvalError> {
        Ok(f.base)
    }
    fn compat(&self, op: Op, x: &Word, y: &Word) -> Result<MorId, EvalError> {
        TransferFrame::compat(self.0, op, x, y)
    }
    fn unit_iso(&self, op: Op) -> Result<MorId, EvalError> {
        TransferFrame::unit_iso(self.0, op)
    }
}

/// `x ↦ [x]`; every compatibility isomorphism lies over an identity.
pub struct Inclusion<'s, 'a>(pub &'s Strictified<'a>);

impl<'a> MonoidalFunctor for Inclusion<'_, 'a> {
    type Src = AnnCat;
    type Dst = Strictified<'a>;

    fn source(&self) -> &AnnCat {
        self.0.base
    }
    fn target(&self) -> &Strictified<'a> {
        self.0
    }
    fn ob(&self, x: &ObjId) -> Result<Word, EvalError> {
        Ok(vec![*x])
    }
    fn mor(&self, f: &MorId) -> Result<WordMor, EvalError> {
        EquivalenceView::fp_mor(self.0, f)
    }
    fn compat(&self, op: Op, x: &ObjId, y: &ObjId) -> Result<WordMor, EvalError> {
        let s = self.0;
        let dom = vec![s.base.op_ob(op, x, y)?];
        let cod = s.op_ob(op, &vec![*x], &vec![*y])?;
        Ok(WordMor { base: s.base.category.identity(s.eval(&dom)), dom, cod })
    }
    fn unit_iso(&self, op: Op) -> Result<WordMor, EvalError> {
        let s = self.0;
        let u = s.base.unit(op)?;
        Ok(WordMor { dom: vec![u], cod: AnnStructure::unit(s, op)?, base: s.base.category.identity(u) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ann::{check_all, check_ann_functor, verify_ann};
    use crate::constructions::check_equivalence;
    use crate::models::{
        coboundary, from_bimodule, from_ring, pic_from_cocycle, BimoduleData, CochainSet, GroupTable, RingTable,
    };
    use crate::structures::{check_ac_functor, check_acu, check_au, check_au_functor, check_identity_families};

    #[test]
    fn hom_sets_follow_digit_sums() {
        let a = from_ring(&RingTable::zmod(2)).unwrap();
        let s = strictify_plus(&a, 3);
        assert_eq!(s.objects().len(), 15);
        for v in s.objects() {
            for w in s.objects() {
                let sum = |x: &Word| x.iter().map(|o| o.index()).sum::<usize>() % 2;
                assert_eq!(!s.hom(&v, &w).unwrap().is_empty(), sum(&v) == sum(&w));
            }
        }
    }

    #[test]
    fn strict_sum_over_a_twisted_pic() {
        let z3 = GroupTable::zmod(3);
        let mut f = vec![0; 9];
        f[4] = 1;
        let (h, cc) = coboundary(&z3, &z3, &f);
        let p = pic_from_cocycle(&z3, &z3, &h, &cc).unwrap();
        assert!(check_all(&p).unwrap().passed());
        assert!(!check_identity_families(&p, &[Name::Aplus]).passed());
        let s = strictify_plus(&p, 2);
        let strict = check_identity_families(&s, &[Name::Aplus, Name::PlusLeftUnit, Name::PlusRightUnit]);
        assert!(strict.passed());
        assert!(check_au(&s, Op::Plus).passed());
        assert!(check_acu(&s).passed());
        assert!(check_equivalence(&s).passed());
        assert!(check_ac_functor(&EvalFunctor(&s)).passed());
    }

    #[test]
    fn strictified_bimodule_is_an_ann_category_on_probes() {
        let a = from_bimodule(&BimoduleData::regular(RingTable::zmod(2)), &CochainSet::new()).unwrap();
        let s = strictify_plus(&a, 2);
        let r = verify_ann(&s);
        assert!(r.passed(), "{}", r.render_text());
        assert!(check_au(&s, Op::Times).passed());
        let inc = Inclusion(&s);
        assert!(check_ann_functor(&inc).passed());
        assert!(check_ac_functor(&inc).passed());
        assert!(check_au_functor(&inc, Op::Times).passed());
        assert!(check_au_functor(&EvalFunctor(&s), Op::Times).passed());
        assert!(check_ann_functor(&EvalFunctor(&s)).passed());
    }
}
