//! The evaluation engine: structure traits, term evaluation and the
//! exhaustive equation checker every coherence check runs on.

use crate::error::EvalError;
use crate::report::{Check, Failure, FailureKind, Report};
use crate::term::{parse_term, Equation, MorTerm, Name, ObjTerm, TermExpr};
use rayon::prelude::*;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::OnceLock;

/// A category whose morphisms can be composed, inverted and printed.
///
/// `objects` is the set checks enumerate over: every object for finite
/// tables, a probe set for lazily generated categories.
pub trait CategoryOps: Sync {
    type Ob: Clone + Eq + Hash + Debug + Send + Sync;
    type Mor: Clone + Eq + Hash + Debug + Send + Sync;

    fn dom(&self, f: &Self::Mor) -> Self::Ob;
    fn cod(&self, f: &Self::Mor) -> Self::Ob;
    fn id(&self, x: &Self::Ob) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, EvalError>;
    fn inverse(&self, f: &Self::Mor) -> Result<Self::Mor, EvalError>;
    /// The hom-set, when it can be enumerated.
    fn hom(&self, x: &Self::Ob, y: &Self::Ob) -> Option<Vec<Self::Mor>>;
    fn objects(&self) -> Vec<Self::Ob>;
    fn show_ob(&self, x: &Self::Ob) -> String;
    fn show_mor(&self, f: &Self::Mor) -> String;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Plus,
    Times,
}

impl Op {
    pub fn symbol(self) -> &'static str {
        match self {
            Op::Plus => "⊕",
            Op::Times => "⊗",
        }
    }
}

/// A category with ⊕ and ⊗ and (some of) the nine constraint families.
/// Missing parts answer [`EvalError::Unavailable`].
pub trait AnnStructure: CategoryOps {
    /// `0` for ⊕, `1` for ⊗.
    fn unit(&self, op: Op) -> Result<Self::Ob, EvalError>;
    fn op_ob(&self, op: Op, x: &Self::Ob, y: &Self::Ob) -> Result<Self::Ob, EvalError>;
    fn op_mor(&self, op: Op, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor, EvalError>;
    /// A component of one of the nine structural families.
    fn constraint(&self, name: Name, args: &[Self::Ob]) -> Result<Self::Mor, EvalError>;
}

/// Composes a path given in the order the arrows are traversed.
pub fn path<C: CategoryOps + ?Sized>(c: &C, arrows: &[C::Mor]) -> Result<C::Mor, EvalError> {
    let (first, rest) = arrows.split_first().expect("non-empty path");
    rest.iter().try_fold(first.clone(), |acc, g| c.compose(g, &acc))
}

type ExtFn<'a, O, M> = dyn Fn(Name, &[O]) -> Option<Result<M, EvalError>> + Sync + 'a;

/// A structure plus optional extra families (zero isomorphisms, functor
/// compatibility data) that terms may reference by name.
pub struct Context<'a, S: AnnStructure + ?Sized> {
    pub structure: &'a S,
    extension: Option<&'a ExtFn<'a, S::Ob, S::Mor>>,
}

impl<'a, S: AnnStructure + ?Sized> Clone for Context<'a, S> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<'a, S: AnnStructure + ?Sized> Copy for Context<'a, S> {}

impl<'a, S: AnnStructure + ?Sized> Context<'a, S> {
    pub fn new(structure: &'a S) -> Self {
        Context { structure, extension: None }
    }

    pub fn with_extension(structure: &'a S, extension: &'a ExtFn<'a, S::Ob, S::Mor>) -> Self {
        Context { structure, extension: Some(extension) }
    }

    pub fn eval_obj(&self, t: &ObjTerm, binding: &[S::Ob]) -> Result<S::Ob, EvalError> {
        let s = self.structure;
        match t {
            ObjTerm::Var(i) => binding.get(*i).cloned().ok_or(EvalError::Unbound(*i)),
            ObjTerm::Zero => s.unit(Op::Plus),
            ObjTerm::One => s.unit(Op::Times),
            ObjTerm::Oplus(a, b) => s.op_ob(Op::Plus, &self.eval_obj(a, binding)?, &self.eval_obj(b, binding)?),
            ObjTerm::Otimes(a, b) => s.op_ob(Op::Times, &self.eval_obj(a, binding)?, &self.eval_obj(b, binding)?),
        }
    }

    /// Looks up a named component, consulting the extension first.
    pub fn named(&self, name: Name, args: &[S::Ob]) -> Result<S::Mor, EvalError> {
        if args.len() != name.arity() {
            return Err(EvalError::Arity { name: name.to_string(), expected: name.arity(), found: args.len() });
        }
        if let Some(found) = self.extension.and_then(|ext| ext(name, args)) {
            return found;
        }
        match name {
            Name::Shuffle => {
                let t = shuffle_template();
                let binding: Vec<S::Ob> = t
                    .vars
                    .iter()
                    .map(|v| args[["A", "B", "C", "D"].iter().position(|x| x == v).expect("template var")].clone())
                    .collect();
                self.eval_term(&t.term, &binding)
            }
            Name::LeftZero | Name::RightZero | Name::Fbreve | Name::Ftilde => {
                Err(EvalError::Unavailable(name.to_string()))
            }
            _ => self.structure.constraint(name, args),
        }
    }

    pub fn eval_term(&self, t: &MorTerm, binding: &[S::Ob]) -> Result<S::Mor, EvalError> {
        let s = self.structure;
        match t {
            MorTerm::Id(o) => Ok(s.id(&self.eval_obj(o, binding)?)),
            MorTerm::Named(n, args) => {
                let objs = args.iter().map(|a| self.eval_obj(a, binding)).collect::<Result<Vec<_>, _>>()?;
                self.named(*n, &objs)
            }
            MorTerm::Inv(t) => s.inverse(&self.eval_term(t, binding)?),
            MorTerm::Comp(g, f) => s.compose(&self.eval_term(g, binding)?, &self.eval_term(f, binding)?),
            MorTerm::Oplus(f, g) => s.op_mor(Op::Plus, &self.eval_term(f, binding)?, &self.eval_term(g, binding)?),
            MorTerm::Otimes(f, g) => s.op_mor(Op::Times, &self.eval_term(f, binding)?, &self.eval_term(g, binding)?),
        }
    }

    /// Evaluates both sides at one binding; `None` when they agree.
    pub fn check_instance(&self, eq: &Equation, binding: &[S::Ob]) -> Option<Failure> {
        let s = self.structure;
        let show_binding =
            || eq.vars.iter().zip(binding).map(|(v, x)| format!("{v}={}", s.show_ob(x))).collect::<Vec<_>>();
        let lhs = self.eval_term(&eq.lhs, binding);
        let rhs = self.eval_term(&eq.rhs, binding);
        let (l, r) = match (lhs, rhs) {
            (Ok(l), Ok(r)) => (l, r),
            (l, r) => {
                let msg = |x: Result<S::Mor, EvalError>| match x {
                    Ok(m) => s.show_mor(&m),
                    Err(e) => format!("error: {e}"),
                };
                let (l, r) = (msg(l), msg(r));
                let what = if l.starts_with("error") { l.clone() } else { r.clone() };
                return Some(Failure { binding: show_binding(), lhs: l, rhs: r, kind: FailureKind::IllTyped(what) });
            }
        };
        if s.dom(&l) != s.dom(&r) || s.cod(&l) != s.cod(&r) {
            let ends = |m: &S::Mor| format!("{} → {}", s.show_ob(&s.dom(m)), s.show_ob(&s.cod(m)));
            return Some(Failure {
                binding: show_binding(),
                lhs: ends(&l),
                rhs: ends(&r),
                kind: FailureKind::EndpointMismatch,
            });
        }
        (l != r).then(|| Failure {
            binding: show_binding(),
            lhs: s.show_mor(&l),
            rhs: s.show_mor(&r),
            kind: FailureKind::Mismatch,
        })
    }

    /// Checks `eq` at every binding of its variables to `probe` objects.
    /// The instance count is `|probe|^k`; failures keep enumeration order
    /// regardless of how the work is split across threads.
    pub fn check_equation(&self, eq: &Equation, probe: &[S::Ob]) -> Check {
        let k = eq.vars.len();
        let n = probe.len();
        let total = n.checked_pow(k as u32).expect("binding space fits in usize");
        let failures: Vec<Failure> = (0..total)
            .into_par_iter()
            .filter_map(|mut i| {
                let mut binding = vec![None; k];
                for slot in binding.iter_mut().rev() {
                    *slot = Some(probe[i % n].clone());
                    i /= n;
                }
                let binding: Vec<S::Ob> = binding.into_iter().map(Option::unwrap).collect();
                self.check_instance(eq, &binding)
            })
            .collect();
        Check { id: eq.id.clone(), citation: eq.citation.clone(), instances: total as u64, failures, bounded: false }
    }

    pub fn check_all<'e>(&self, eqs: impl IntoIterator<Item = &'e Equation>, probe: &[S::Ob]) -> Report {
        let mut r = Report::new();
        for eq in eqs {
            r.push(self.check_equation(eq, probe));
        }
        r
    }
}

/// `v_{A,B,C,D}: (A⊕B)⊕(C⊕D) → (A⊕C)⊕(B⊕D)`, the fixed composite of
/// `a⁺`, `c` and identities.
pub fn shuffle_template() -> &'static TermExpr {
    static V: OnceLock<TermExpr> = OnceLock::new();
    V.get_or_init(|| {
        
        parse_term(
            "comp(aplus[A,C,oplus(B,D)],comp(oplus(id(A),inv(aplus[C,B,D])),\
             comp(oplus(id(A),oplus(c[B,C],id(D))),comp(oplus(id(A),aplus[B,C,D]),inv(aplus[A,B,oplus(C,D)])))))",
        )
        .expect("shuffle template parses")
    })
}

/// Evaluates `v` at `(A, B, C, D)`.
pub fn shuffle<S: AnnStructure + ?Sized>(
    s: &S,
    a: &S::Ob,
    b: &S::Ob,
    c: &S::Ob,
    d: &S::Ob,
) -> Result<S::Mor, EvalError> {
    Context::new(s).named(Name::Shuffle, &[a.clone(), b.clone(), c.clone(), d.clone()])
}
