//! `k` isomorphic copies of every object, with the canonical equivalence
//! back onto the original category.

use super::transfer::Equivalence;
use crate::cat::{CategoryBuilder, FinCategory, FunctorData, MorId, ObjId};
use crate::error::ConstructionError;

#[derive(Debug, Clone)]
pub struct Inflated {
    pub category: FinCategory,
    /// `F` collapses copies, `F′` picks copy 0.
    pub equivalence: Equivalence,
}

/// Objects `x#i` for `i < k`; morphisms `u#i>j: x#i → y#j` for each
/// `u: x → y`, composing as `u` does.
pub fn inflate(base: &FinCategory, k: usize) -> Result<Inflated, ConstructionError> {
    if k < 1 {
        return Err(ConstructionError::InvalidMultiplicity(k));
    }
    let (n, m) = (base.object_count(), base.morphism_count());
    let obj = |x: ObjId, i: usize| ObjId((x.index() * k + i) as u32);
    let mor = |u: MorId, i: usize, j: usize| MorId(((u.index() * k + i) * k + j) as u32);
    let mut b = CategoryBuilder::new();
    for x in base.objects() {
        for i in 0..k {
            b.object(format!("{}#{i}", base.object_name(x)));
        }
    }
    for u in base.morphisms() {
        for i in 0..k {
            for j in 0..k {
                let name = format!("{}#{i}>{j}", base.morphism_name(u));
                let (d, c) = (obj(base.dom(u), i), obj(base.cod(u), j));
                if base.is_identity(u) && i == j {
                    b.identity(name, d);
                } else {
                    b.morphism(name, d, c);
                }
            }
        }
    }
    for u in base.morphisms() {
        for v in base.morphisms() {
            let Some(w) = base.composite(v, u) else {
                continue;
            };
            for i in 0..k {
                for j in 0..k {
                    for l in 0..k {
                        b.composite(mor(v, j, l), mor(u, i, j), mor(w, i, l));
                    }
                }
            }
        }
    }
    let category = b.build()?;
    let f = FunctorData::plain(
        (0..n * k).map(|x| ObjId((x / k) as u32)).collect(),
        (0..m * k * k).map(|u| MorId((u / (k * k)) as u32)).collect(),
    );
    let f_prime = FunctorData::plain(
        base.objects().map(|x| obj(x, 0)).collect(),
        base.morphisms().map(|u| mor(u, 0, 0)).collect(),
    );
    let alpha = category
        .objects()
        .map(|x| {
            let (bx, i) = (ObjId((x.index() / k) as u32), x.index() % k);
            mor(base.identity(bx), 0, i)
        })
        .collect();
    let alpha_prime = base.objects().map(|x| base.identity(x)).collect();
    Ok(Inflated { category, equivalence: Equivalence { f, f_prime, alpha, alpha_prime } })
}
