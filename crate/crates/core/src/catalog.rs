//! The diagram catalog: every coherence condition as a term equation.
//!
//! Ids are the diagram labels used in reports; each entry carries a short
//! citation string. Conventions: `comp(g,f)` is g after f, `aplus` is the
//! ⊕-associator X⊕(Y⊕Z) → (X⊕Y)⊕Z and `a` its ⊗ analogue.

use crate::term::Equation;
use std::sync::OnceLock;

const ENTRIES: &[(&str, &str, &str)] = &[
    // ⊗ monoidal structure
    ("2.1", "(2.1) pentagon for a",
     "forall X Y Z T : comp(a[otimes(X,Y),Z,T],a[X,Y,otimes(Z,T)]) = comp(otimes(a[X,Y,Z],id(T)),comp(a[X,otimes(Y,Z),T],otimes(id(X),a[Y,Z,T])))"),
    ("2.2", "(2.2) triangle for a, l, r",
     "forall X Y : comp(otimes(r[X],id(Y)),a[X,1,Y]) = otimes(id(X),l[Y])"),
    // ⊕ monoidal structure
    ("2.1+", "(2.1) pentagon for aplus",
     "forall X Y Z T : comp(aplus[oplus(X,Y),Z,T],aplus[X,Y,oplus(Z,T)]) = comp(oplus(aplus[X,Y,Z],id(T)),comp(aplus[X,oplus(Y,Z),T],oplus(id(X),aplus[Y,Z,T])))"),
    ("2.2+", "(2.2) triangle for aplus, g, d",
     "forall X Y : comp(oplus(d[X],id(Y)),aplus[X,0,Y]) = oplus(id(X),g[Y])"),
    // symmetry
    ("2.5/involution", "c(X,Y) . c(Y,X) = id",
     "forall X Y : comp(c[X,Y],c[Y,X]) = id(oplus(Y,X))"),
    ("2.5", "(2.5) hexagon",
     "forall X Y Z : comp(aplus[Z,X,Y],comp(c[oplus(X,Y),Z],aplus[X,Y,Z])) = comp(oplus(c[X,Z],id(Y)),comp(aplus[X,Z,Y],oplus(id(X),c[Y,Z])))"),
    // Ann-1: (L^A, L[A,-,-]) and (R^A, R[-,-,A]) are ⊕AC-functors
    ("Ann-1/L^A/2.3", "Ann-1, (2.3) for (L^A, L̆^A)",
     "forall A X Y Z : comp(oplus(L[A,X,Y],id(otimes(A,Z))),comp(L[A,oplus(X,Y),Z],otimes(id(A),aplus[X,Y,Z]))) = comp(aplus[otimes(A,X),otimes(A,Y),otimes(A,Z)],comp(oplus(id(otimes(A,X)),L[A,Y,Z]),L[A,X,oplus(Y,Z)]))"),
    ("Ann-1/L^A/2.6", "Ann-1, (2.6) for (L^A, L̆^A)",
     "forall A X Y : comp(c[otimes(A,X),otimes(A,Y)],L[A,X,Y]) = comp(L[A,Y,X],otimes(id(A),c[X,Y]))"),
    ("Ann-1/R^A/2.3", "Ann-1, (2.3) for (R^A, R̆^A)",
     "forall A X Y Z : comp(oplus(R[X,Y,A],id(otimes(Z,A))),comp(R[oplus(X,Y),Z,A],otimes(aplus[X,Y,Z],id(A)))) = comp(aplus[otimes(X,A),otimes(Y,A),otimes(Z,A)],comp(oplus(id(otimes(X,A)),R[Y,Z,A]),R[X,oplus(Y,Z),A]))"),
    ("Ann-1/R^A/2.6", "Ann-1, (2.6) for (R^A, R̆^A)",
     "forall A X Y : comp(c[otimes(X,A),otimes(Y,A)],R[X,Y,A]) = comp(R[Y,X,A],otimes(c[X,Y],id(A)))"),
    // Ann-2
    ("2.10", "(2.10) a vs L",
     "forall A B X Y : comp(L[otimes(A,B),X,Y],a[A,B,oplus(X,Y)]) = comp(oplus(a[A,B,X],a[A,B,Y]),comp(L[A,otimes(B,X),otimes(B,Y)],otimes(id(A),L[B,X,Y])))"),
    ("2.10'", "(2.10') a vs R",
     "forall A B X Y : comp(R[otimes(X,B),otimes(Y,B),A],comp(otimes(R[X,Y,B],id(A)),a[oplus(X,Y),B,A])) = comp(oplus(a[X,B,A],a[Y,B,A]),R[X,Y,otimes(B,A)])"),
    ("2.11", "(2.11) a vs L and R",
     "forall A X Y B : comp(oplus(a[A,X,B],a[A,Y,B]),comp(L[A,otimes(X,B),otimes(Y,B)],otimes(id(A),R[X,Y,B]))) = comp(R[otimes(A,X),otimes(A,Y),B],comp(otimes(L[A,X,Y],id(B)),a[A,oplus(X,Y),B]))"),
    ("2.12", "(2.12) L, R and v",
     "forall A B X Y : comp(v[otimes(A,X),otimes(B,X),otimes(A,Y),otimes(B,Y)],comp(oplus(R[A,B,X],R[A,B,Y]),L[oplus(A,B),X,Y])) = comp(oplus(L[A,X,Y],L[B,X,Y]),R[A,B,oplus(X,Y)])"),
    // Ann-3
    ("2.13", "(2.13) l vs L",
     "forall X Y : comp(oplus(l[X],l[Y]),L[1,X,Y]) = l[oplus(X,Y)]"),
    ("2.13'", "(2.13') r vs R",
     "forall X Y : comp(oplus(r[X],r[Y]),R[X,Y,1]) = r[oplus(X,Y)]"),
    // defining squares of the zero isomorphisms
    ("3.1/L-g", "zero iso square for L̂ and g",
     "forall A X : otimes(id(A),g[X]) = comp(g[otimes(A,X)],comp(oplus(Lhat[A],id(otimes(A,X))),L[A,0,X]))"),
    ("3.1/L-d", "zero iso square for L̂ and d",
     "forall A X : otimes(id(A),d[X]) = comp(d[otimes(A,X)],comp(oplus(id(otimes(A,X)),Lhat[A]),L[A,X,0]))"),
    ("3.1/R-g", "zero iso square for R̂ and g",
     "forall A X : otimes(g[X],id(A)) = comp(g[otimes(X,A)],comp(oplus(Rhat[A],id(otimes(X,A))),R[0,X,A]))"),
    ("3.1/R-d", "zero iso square for R̂ and d",
     "forall A X : otimes(d[X],id(A)) = comp(d[otimes(X,A)],comp(oplus(id(otimes(X,A)),Rhat[A]),R[X,0,A]))"),
    // properties of the zero isomorphisms
    ("3.2i/L-sum", "L̂ is a ⊕-morphism R^0 → θ",
     "forall X Y : Lhat[oplus(X,Y)] = comp(g[0],comp(oplus(Lhat[X],Lhat[Y]),R[X,Y,0]))"),
    ("3.2i/R-sum", "R̂ is a ⊕-morphism L^0 → θ",
     "forall X Y : Rhat[oplus(X,Y)] = comp(g[0],comp(oplus(Rhat[X],Rhat[Y]),L[0,X,Y]))"),
    ("3.2ii/L-assoc", "L̂ and a",
     "forall X Y : comp(Lhat[X],otimes(id(X),Lhat[Y])) = comp(Lhat[otimes(X,Y)],a[X,Y,0])"),
    ("3.2ii/R-assoc", "R̂ and a",
     "forall X Y : Rhat[otimes(X,Y)] = comp(Rhat[Y],comp(otimes(Rhat[X],id(Y)),a[0,X,Y]))"),
    ("3.2ii/mixed", "L̂, R̂ and a",
     "forall X Y : comp(Lhat[X],otimes(id(X),Rhat[Y])) = comp(Rhat[Y],comp(otimes(Lhat[X],id(Y)),a[X,0,Y]))"),
];

const CLOSED: &[(&str, &str, &str, &str)] = &[
    ("3.2i/g0=d0", "g_0 = d_0", "g[0]", "d[0]"),
    ("3.2iii/L", "L̂^1 = l_0", "Lhat[1]", "l[0]"),
    ("3.2iii/R", "R̂^1 = r_0", "Rhat[1]", "r[0]"),
];

pub struct Catalog {
    entries: Vec<Equation>,
}

impl Catalog {
    pub fn get(&self, id: &str) -> &Equation {
        self.entries.iter().find(|e| e.id == id).unwrap_or_else(|| panic!("no catalog entry `{id}`"))
    }

    pub fn entries(&self) -> &[Equation] {
        &self.entries
    }

    pub fn group(&self, ids: &[&str]) -> Vec<&Equation> {
        ids.iter().map(|id| self.get(id)).collect()
    }
}

pub const PLUS_MONOIDAL: &[&str] = &["2.1+", "2.2+"];
pub const TIMES_MONOIDAL: &[&str] = &["2.1", "2.2"];
pub const SYMMETRY: &[&str] = &["2.5/involution", "2.5"];
pub const ANN1: &[&str] = &["Ann-1/L^A/2.3", "Ann-1/L^A/2.6", "Ann-1/R^A/2.3", "Ann-1/R^A/2.6"];
pub const ANN2: &[&str] = &["2.10", "2.10'", "2.11", "2.12"];
pub const ANN3: &[&str] = &["2.13", "2.13'"];
pub const ZERO_SQUARES: &[&str] = &["3.1/L-g", "3.1/L-d", "3.1/R-g", "3.1/R-d"];
pub const ZERO_PROPERTIES: &[&str] = &[
    "3.2i/L-sum",
    "3.2i/R-sum",
    "3.2i/g0=d0",
    "3.2ii/L-assoc",
    "3.2ii/R-assoc",
    "3.2ii/mixed",
    "3.2iii/L",
    "3.2iii/R",
];

pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut entries: Vec<Equation> = ENTRIES
            .iter()
            .map(|(id, cite, src)| Equation::parse(id, cite, src).unwrap_or_else(|e| panic!("catalog {id}: {e}")))
            .collect();
        entries.extend(
            CLOSED.iter().map(|(id, cite, l, r)| {
                Equation::closed(id, cite, l, r).unwrap_or_else(|e| panic!("catalog {id}: {e}"))
            }),
        );
        Catalog { entries }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse_equation;

    #[test]
    fn every_entry_parses_and_round_trips() {
        for e in catalog().entries().iter().filter(|e| !e.vars.is_empty()) {
            let printed = e.to_string();
            let (vars, lhs, rhs) = parse_equation(&printed).unwrap();
            assert_eq!((vars, lhs, rhs), (e.vars.clone(), e.lhs.clone(), e.rhs.clone()), "{}", e.id);
        }
    }

    #[test]
    fn variable_counts() {
        let c = catalog();
        for id in ["2.1", "2.1+", "2.10", "2.10'", "2.11", "2.12", "Ann-1/L^A/2.3"] {
            assert_eq!(c.get(id).vars.len(), 4, "{id}");
        }
        for id in ["2.2", "2.13", "2.13'", "2.5/involution"] {
            assert_eq!(c.get(id).vars.len(), 2, "{id}");
        }
        assert_eq!(c.get("2.5").vars.len(), 3);
        assert!(c.get("3.2iii/L").vars.is_empty());
    }
}
