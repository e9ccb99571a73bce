//! The diagram term language.
//!
//! Object terms are built from variables, `0`, `1`, `oplus` and `otimes`;
//! morphism terms from `id`, named constraint components, `inv`, `comp`,
//! `oplus` and `otimes`. The concrete syntax is
//!
//! ```text
//! objexpr  := VAR | "0" | "1" | "oplus(" objexpr "," objexpr ")" | "otimes(" objexpr "," objexpr ")"
//! term     := "id(" objexpr ")" | NAME "[" objexpr ("," objexpr)* "]" | "inv(" term ")"
//!           | "comp(" term "," term ")" | "oplus(" term "," term ")" | "otimes(" term "," term ")"
//! equation := "forall" VAR+ ":" term "=" term
//! ```
//!
//! `comp(g,f)` means `g` after `f`. Whitespace between tokens is ignored; the
//! printer emits the canonical spacing shown above.

use crate::error::ParseError;
use std::fmt;

/// A registered constraint or derived family name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Name {
    /// `aplus`: X⊕(Y⊕Z) → (X⊕Y)⊕Z
    Aplus,
    /// `c`: X⊕Y → Y⊕X
    Comm,
    /// `g`: 0⊕X → X
    PlusLeftUnit,
    /// `d`: X⊕0 → X
    PlusRightUnit,
    /// `a`: X⊗(Y⊗Z) → (X⊗Y)⊗Z
    Assoc,
    /// `l`: 1⊗X → X
    LeftUnit,
    /// `r`: X⊗1 → X
    RightUnit,
    /// `L`: A⊗(X⊕Y) → (A⊗X)⊕(A⊗Y)
    LeftDist,
    /// `R`: (X⊕Y)⊗A → (X⊗A)⊕(Y⊗A)
    RightDist,
    /// `v`: (A⊕B)⊕(C⊕D) → (A⊕C)⊕(B⊕D)
    Shuffle,
    /// `Lhat`: A⊗0 → 0
    LeftZero,
    /// `Rhat`: 0⊗A → 0
    RightZero,
    /// `Fbreve`: F(X⊕Y) → FX⊕FY, only inside functor contexts
    Fbreve,
    /// `Ftilde`: F(X⊗Y) → FX⊗FY, only inside functor contexts
    Ftilde,
}

impl Name {
    pub const ALL: [Name; 14] = [
        Name::Aplus,
        Name::Comm,
        Name::PlusLeftUnit,
        Name::PlusRightUnit,
        Name::Assoc,
        Name::LeftUnit,
        Name::RightUnit,
        Name::LeftDist,
        Name::RightDist,
        Name::Shuffle,
        Name::LeftZero,
        Name::RightZero,
        Name::Fbreve,
        Name::Ftilde,
    ];

    /// The nine structural constraint families of an Ann-category.
    pub const CONSTRAINTS: [Name; 9] = [
        Name::Aplus,
        Name::Comm,
        Name::PlusLeftUnit,
        Name::PlusRightUnit,
        Name::Assoc,
        Name::LeftUnit,
        Name::RightUnit,
        Name::LeftDist,
        Name::RightDist,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Name::Aplus => "aplus",
            Name::Comm => "c",
            Name::PlusLeftUnit => "g",
            Name::PlusRightUnit => "d",
            Name::Assoc => "a",
            Name::LeftUnit => "l",
            Name::RightUnit => "r",
            Name::LeftDist => "L",
            Name::RightDist => "R",
            Name::Shuffle => "v",
            Name::LeftZero => "Lhat",
            Name::RightZero => "Rhat",
            Name::Fbreve => "Fbreve",
            Name::Ftilde => "Ftilde",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Name::Aplus | Name::Assoc | Name::LeftDist | Name::RightDist => 3,
            Name::Comm | Name::Fbreve | Name::Ftilde => 2,
            Name::Shuffle => 4,
            _ => 1,
        }
    }

    pub fn parse(s: &str) -> Option<Name> {
        Name::ALL.iter().copied().find(|n| n.as_str() == s)
    }

    /// Source and target shapes of the family in the variables `0..arity`.
    /// `None` for functor-context names, whose shapes mention the functor.
    pub fn shapes(self) -> Option<(ObjTerm, ObjTerm)> {
        use ObjTerm as O;
        let v = O::Var;
        let p = O::oplus;
        let t = O::otimes;
        Some(match self {
            Name::Aplus => (p(v(0), p(v(1), v(2))), p(p(v(0), v(1)), v(2))),
            Name::Comm => (p(v(0), v(1)), p(v(1), v(0))),
            Name::PlusLeftUnit => (p(O::Zero, v(0)), v(0)),
            Name::PlusRightUnit => (p(v(0), O::Zero), v(0)),
            Name::Assoc => (t(v(0), t(v(1), v(2))), t(t(v(0), v(1)), v(2))),
            Name::LeftUnit => (t(O::One, v(0)), v(0)),
            Name::RightUnit => (t(v(0), O::One), v(0)),
            Name::LeftDist => (t(v(0), p(v(1), v(2))), p(t(v(0), v(1)), t(v(0), v(2)))),
            Name::RightDist => (t(p(v(0), v(1)), v(2)), p(t(v(0), v(2)), t(v(1), v(2)))),
            Name::Shuffle => (p(p(v(0), v(1)), p(v(2), v(3))), p(p(v(0), v(2)), p(v(1), v(3)))),
            Name::LeftZero => (t(v(0), O::Zero), O::Zero),
            Name::RightZero => (t(O::Zero, v(0)), O::Zero),
            Name::Fbreve | Name::Ftilde => return None,
        })
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ObjTerm {
    Var(usize),
    Zero,
    One,
    Oplus(Box<ObjTerm>, Box<ObjTerm>),
    Otimes(Box<ObjTerm>, Box<ObjTerm>),
}

impl ObjTerm {
    pub fn oplus(a: ObjTerm, b: ObjTerm) -> ObjTerm {
        ObjTerm::Oplus(Box::new(a), Box::new(b))
    }

    pub fn otimes(a: ObjTerm, b: ObjTerm) -> ObjTerm {
        ObjTerm::Otimes(Box::new(a), Box::new(b))
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            ObjTerm::Var(i) => Some(*i),
            ObjTerm::Zero | ObjTerm::One => None,
            ObjTerm::Oplus(a, b) | ObjTerm::Otimes(a, b) => a.max_var().max(b.max_var()),
        }
    }

    fn write(&self, vars: &[String], out: &mut String) {
        match self {
            ObjTerm::Var(i) => out.push_str(vars.get(*i).map_or("?", String::as_str)),
            ObjTerm::Zero => out.push('0'),
            ObjTerm::One => out.push('1'),
            ObjTerm::Oplus(a, b) | ObjTerm::Otimes(a, b) => {
                out.push_str(if matches!(self, ObjTerm::Oplus(..)) { "oplus(" } else { "otimes(" });
                a.write(vars, out);
                out.push(',');
                b.write(vars, out);
                out.push(')');
            }
        }
    }

    pub fn render(&self, vars: &[String]) -> String {
        let mut s = String::new();
        self.write(vars, &mut s);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MorTerm {
    Id(ObjTerm),
    Named(Name, Vec<ObjTerm>),
    Inv(Box<MorTerm>),
    /// `Comp(g, f)` is g after f.
    Comp(Box<MorTerm>, Box<MorTerm>),
    Oplus(Box<MorTerm>, Box<MorTerm>),
    Otimes(Box<MorTerm>, Box<MorTerm>),
}

impl MorTerm {
    pub fn comp(g: MorTerm, f: MorTerm) -> MorTerm {
        MorTerm::Comp(Box::new(g), Box::new(f))
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            MorTerm::Id(o) => o.max_var(),
            MorTerm::Named(_, args) => args.iter().filter_map(ObjTerm::max_var).max(),
            MorTerm::Inv(t) => t.max_var(),
            MorTerm::Comp(a, b) | MorTerm::Oplus(a, b) | MorTerm::Otimes(a, b) => a.max_var().max(b.max_var()),
        }
    }

    fn write(&self, vars: &[String], out: &mut String) {
        match self {
            MorTerm::Id(o) => {
                out.push_str("id(");
                o.write(vars, out);
                out.push(')');
            }
            MorTerm::Named(n, args) => {
                out.push_str(n.as_str());
                out.push('[');
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    a.write(vars, out);
                }
                out.push(']');
            }
            MorTerm::Inv(t) => {
                out.push_str("inv(");
                t.write(vars, out);
                out.push(')');
            }
            MorTerm::Comp(a, b) | MorTerm::Oplus(a, b) | MorTerm::Otimes(a, b) => {
                out.push_str(match self {
                    MorTerm::Comp(..) => "comp(",
                    MorTerm::Oplus(..) => "oplus(",
                    _ => "otimes(",
                });
                a.write(vars, out);
                out.push(',');
                b.write(vars, out);
                out.push(')');
            }
        }
    }

    pub fn render(&self, vars: &[String]) -> String {
        let mut s = String::new();
        self.write(vars, &mut s);
        s
    }
}

/// A morphism term together with its variable names, indexed by `ObjTerm::Var`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermExpr {
    pub vars: Vec<String>,
    pub term: MorTerm,
}

impl fmt::Display for TermExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.term.render(&self.vars))
    }
}

/// A universally quantified equation between two morphism terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub id: String,
    pub citation: String,
    pub vars: Vec<String>,
    pub lhs: MorTerm,
    pub rhs: MorTerm,
}

impl Equation {
    /// Parses `forall VAR+ : term = term` and attaches a catalog id.
    pub fn parse(id: &str, citation: &str, src: &str) -> Result<Equation, ParseError> {
        let (vars, lhs, rhs) = parse_equation(src)?;
        Ok(Equation { id: id.to_string(), citation: citation.to_string(), vars, lhs, rhs })
    }

    /// An equation with no free variables, checked once.
    pub fn closed(id: &str, citation: &str, lhs: &str, rhs: &str) -> Result<Equation, ParseError> {
        let l = parse_term(lhs)?;
        let r = parse_term(rhs)?;
        if !l.vars.is_empty() || !r.vars.is_empty() {
            return Err(ParseError::Syntax { pos: 0, msg: "closed equation mentions variables".into() });
        }
        Ok(Equation { id: id.to_string(), citation: citation.to_string(), vars: Vec::new(), lhs: l.term, rhs: r.term })
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "forall {} : {} = {}", self.vars.join(" "), self.lhs.render(&self.vars), self.rhs.render(&self.vars))
    }
}

/// Parses a morphism term; variables are numbered by first occurrence.
pub fn parse_term(src: &str) -> Result<TermExpr, ParseError> {
    let mut p = Parser::new(src, Vars::Open(Vec::new()));
    let term = p.term()?;
    p.end()?;
    Ok(TermExpr { vars: p.vars.into_names(), term })
}

/// Parses an object term; variables are numbered by first occurrence.
pub fn parse_obj(src: &str) -> Result<(Vec<String>, ObjTerm), ParseError> {
    let mut p = Parser::new(src, Vars::Open(Vec::new()));
    let o = p.obj()?;
    p.end()?;
    Ok((p.vars.into_names(), o))
}

pub fn parse_equation(src: &str) -> Result<(Vec<String>, MorTerm, MorTerm), ParseError> {
    let mut p = Parser::new(src, Vars::Open(Vec::new()));
    p.skip_ws();
    if !p.rest().starts_with("forall") {
        return p.err("expected `forall`");
    }
    p.pos += "forall".len();
    let mut vars = Vec::new();
    loop {
        p.skip_ws();
        if p.peek() == Some(b':') {
            p.pos += 1;
            break;
        }
        let start = p.pos;
        let ident = p.ident().ok_or(ParseError::Syntax { pos: start, msg: "expected a variable or `:`".into() })?;
        if vars.contains(&ident) {
            return Err(ParseError::Syntax { pos: start, msg: format!("variable `{ident}` declared twice") });
        }
        vars.push(ident);
    }
    if vars.is_empty() {
        return p.err("`forall` needs at least one variable");
    }
    p.vars = Vars::Closed(vars);
    let lhs = p.term()?;
    p.expect(b'=')?;
    let rhs = p.term()?;
    p.end()?;
    Ok((p.vars.into_names(), lhs, rhs))
}

enum Vars {
    Open(Vec<String>),
    Closed(Vec<String>),
}

impl Vars {
    fn into_names(self) -> Vec<String> {
        match self {
            Vars::Open(v) | Vars::Closed(v) => v,
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    vars: Vars,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: Vars) -> Self {
        Parser { src, pos: 0, vars }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos, msg: msg.to_string() })
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected `{}`", b as char))
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let bytes = self.src.as_bytes();
        let start = self.pos;
        if !bytes.get(start).is_some_and(u8::is_ascii_alphabetic) {
            return None;
        }
        let mut end = start + 1;
        while bytes.get(end).is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_' || *b == b'\'') {
            end += 1;
        }
        self.pos = end;
        Some(self.src[start..end].to_string())
    }

    fn next_is(&mut self, b: u8) -> bool {
        self.skip_ws();
        self.peek() == Some(b)
    }

    fn var(&mut self, name: String, pos: usize) -> Result<ObjTerm, ParseError> {
        match &mut self.vars {
            Vars::Open(v) => {
                let i = v.iter().position(|x| *x == name).unwrap_or_else(|| {
                    v.push(name);
                    v.len() - 1
                });
                Ok(ObjTerm::Var(i))
            }
            Vars::Closed(v) => v
                .iter()
                .position(|x| *x == name)
                .map(ObjTerm::Var)
                .ok_or(ParseError::Syntax { pos, msg: format!("undeclared variable `{name}`") }),
        }
    }

    fn obj(&mut self) -> Result<ObjTerm, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                return Ok(ObjTerm::Zero);
            }
            Some(b'1') => {
                self.pos += 1;
                return Ok(ObjTerm::One);
            }
            _ => {}
        }
        let start = self.pos;
        let Some(id) = self.ident() else {
            return self.err("expected an object term");
        };
        if (id == "oplus" || id == "otimes") && self.next_is(b'(') {
            self.pos += 1;
            let a = self.obj()?;
            self.expect(b',')?;
            let b = self.obj()?;
            self.expect(b')')?;
            return Ok(if id == "oplus" { ObjTerm::oplus(a, b) } else { ObjTerm::otimes(a, b) });
        }
        if self.next_is(b'(') || self.next_is(b'[') {
            return Err(ParseError::Syntax { pos: start, msg: format!("`{id}` is not an object constructor") });
        }
        self.var(id, start)
    }

    fn term(&mut self) -> Result<MorTerm, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let Some(id) = self.ident() else {
            return self.err("expected a morphism term");
        };
        if self.next_is(b'[') {
            self.pos += 1;
            let name = Name::parse(&id).ok_or(ParseError::UnknownName { pos: start, name: id.clone() })?;
            let mut args = vec![self.obj()?];
            while self.next_is(b',') {
                self.pos += 1;
                args.push(self.obj()?);
            }
            self.expect(b']')?;
            if args.len() != name.arity() {
                return Err(ParseError::Arity { pos: start, name: id, expected: name.arity(), found: args.len() });
            }
            return Ok(MorTerm::Named(name, args));
        }
        if !self.next_is(b'(') {
            return Err(ParseError::Syntax { pos: start, msg: format!("expected `(` or `[` after `{id}`") });
        }
        self.pos += 1;
        let t = match id.as_str() {
            "id" => MorTerm::Id(self.obj()?),
            "inv" => MorTerm::Inv(Box::new(self.term()?)),
            "comp" | "oplus" | "otimes" => {
                let a = self.term()?;
                self.expect(b',')?;
                let b = self.term()?;
                let (a, b) = (Box::new(a), Box::new(b));
                match id.as_str() {
                    "comp" => MorTerm::Comp(a, b),
                    "oplus" => MorTerm::Oplus(a, b),
                    _ => MorTerm::Otimes(a, b),
                }
            }
            _ => return Err(ParseError::UnknownName { pos: start, name: id }),
        };
        self.expect(b')')?;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_inverse_composite() {
        let src = "comp(aplus[X,Y,Z],inv(aplus[X,Y,Z]))";
        let t = parse_term(src).unwrap();
        assert_eq!(t.vars, ["X", "Y", "Z"]);
        assert_eq!(t.to_string(), src);
    }

    #[test]
    fn distributor_reference_has_arity_three() {
        let t = parse_term("L[A,X,Y]").unwrap();
        assert_eq!(t.term, MorTerm::Named(Name::LeftDist, vec![ObjTerm::Var(0), ObjTerm::Var(1), ObjTerm::Var(2)]));
    }

    #[test]
    fn wrong_arity_is_rejected() {
        let e = parse_term("comp(aplus[X,Y])").unwrap_err();
        assert!(matches!(e, ParseError::Arity { expected: 3, found: 2, .. }), "{e:?}");
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(parse_term("foo[X]"), Err(ParseError::UnknownName { .. })));
        assert!(matches!(parse_term("twist(id(X))"), Err(ParseError::UnknownName { .. })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_term("comp(id(X) id(Y))") {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 11),
            other => panic!("{other:?}"),
        }
        assert!(parse_term("id(X))").is_err());
    }

    #[test]
    fn equations_bind_declared_variables() {
        let (vars, lhs, rhs) = parse_equation("forall X Y : comp(c[X,Y], c[Y,X]) = id(oplus(Y,X))").unwrap();
        assert_eq!(vars, ["X", "Y"]);
        assert_eq!(lhs.max_var(), Some(1));
        assert_eq!(rhs, MorTerm::Id(ObjTerm::oplus(ObjTerm::Var(1), ObjTerm::Var(0))));
        assert!(parse_equation("forall X : id(Y) = id(X)").is_err());
        assert!(parse_equation("forall : id(0) = id(0)").is_err());
    }

    #[test]
    fn zero_and_one_are_constants() {
        let t = parse_term("l[oplus(0,1)]").unwrap();
        assert!(t.vars.is_empty());
        assert_eq!(t.to_string(), "l[oplus(0,1)]");
    }
}
