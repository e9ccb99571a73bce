//! The `.cat` input format: TOML with either raw tables or a `generator`.

use anncat::cat::{Bifunctor, CategoryBuilder, NatFamily};
use anncat::models::{from_bimodule, from_ring, pic_from_cocycle, BimoduleData, CochainSet, GroupTable, RingTable};
use anncat::structures::{MonoidalData, PicData};
use anncat::{AnnCat, FinCategory, MorId, Name, ObjId, Report};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    #[serde(default)]
    pub objects: Vec<String>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismDecl>,
    /// `[g, f, h]` declares `g ∘ f = h`.
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
    pub plus: Option<OpTable>,
    pub times: Option<OpTable>,
    #[serde(default)]
    pub constraints: BTreeMap<String, FamilySpec>,
    pub generator: Option<Generator>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDecl {
    pub dom: String,
    pub cod: String,
}

/// Entries `[x, y, x op y]`. Pairs of identities may be omitted.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpTable {
    pub unit: String,
    pub objects: Vec<[String; 3]>,
    #[serde(default)]
    pub morphisms: Vec<[String; 3]>,
}

/// `"identity"` or a complete table from comma-joined argument names to
/// morphism names.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum FamilySpec {
    Keyword(String),
    Table(BTreeMap<String, String>),
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Generator {
    Ring {
        ring: RingSpec,
    },
    Bimodule {
        ring: RingSpec,
        module: ModuleSpec,
        #[serde(default)]
        cochains: BTreeMap<String, Vec<usize>>,
    },
    Pic {
        group: GroupSpec,
        coefficients: GroupSpec,
        h: Vec<usize>,
        c: Vec<usize>,
    },
}

/// `"Z/n"`, `"F2[t]/(t^2)"` or explicit tables.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum RingSpec {
    Named(String),
    Tables {
        #[serde(default)]
        elements: Vec<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    },
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Named(String),
    Tables {
        #[serde(default)]
        elements: Vec<String>,
        add: Vec<Vec<usize>>,
        zero: usize,
    },
}

/// `"regular"`, `"zero"` or an abelian group with both actions.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum ModuleSpec {
    Named(String),
    Tables { group: GroupSpec, left: Vec<Vec<usize>>, right: Vec<Vec<usize>> },
}

#[derive(Debug)]
pub enum LoadError {
    Io(String),
    /// Unparseable input or a dangling reference. `position` is 1-based
    /// (line, column) when the TOML parser reports one.
    Schema {
        position: Option<(usize, usize)>,
        key: String,
        msg: String,
    },
    /// Tables parse but violate the category, bifunctor or family laws.
    Validation(Report),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Io(m) => write!(f, "cannot read input: {m}"),
            LoadError::Schema { position: Some((l, c)), key, msg } => {
                write!(f, "schema error at {l}:{c} ({key}): {msg}")
            }
            LoadError::Schema { position: None, key, msg } => write!(f, "schema error ({key}): {msg}"),
            LoadError::Validation(r) => write!(f, "tables are not well formed\n{}", r.render_text()),
        }
    }
}

fn schema(key: impl Into<String>, msg: impl Into<String>) -> LoadError {
    LoadError::Schema { position: None, key: key.into(), msg: msg.into() }
}

/// What a file describes.
pub enum Loaded {
    Ann(AnnCat),
    Category(FinCategory),
}

pub struct Input {
    pub loaded: Loaded,
    /// Set for ring and bimodule generators; `search` varies its cochains.
    pub bimodule: Option<BimoduleData>,
}

pub fn load(path: &Path) -> Result<Input, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io(format!("{}: {e}", path.display())))?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<Input, LoadError> {
    let file: CategoryFile = toml::from_str(text).map_err(|e| {
        let position = e.span().map(|s| line_col(text, s.start));
        LoadError::Schema { position, key: "document".into(), msg: e.message().to_string() }
    })?;
    let input = build(file)?;
    if let Loaded::Ann(a) = &input.loaded {
        let r = a.check_tables().map_err(|e| schema("constraints", e.to_string()))?;
        if !r.passed() {
            return Err(LoadError::Validation(r));
        }
    }
    Ok(input)
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, col)
}

fn build(file: CategoryFile) -> Result<Input, LoadError> {
    match file.generator {
        Some(g) => {
            let raw = !file.objects.is_empty()
                || !file.morphisms.is_empty()
                || !file.compose.is_empty()
                || file.plus.is_some()
                || file.times.is_some()
                || !file.constraints.is_empty();
            if raw {
                return Err(schema("generator", "a generator excludes raw table sections"));
            }
            let (a, bimodule) = generate(g)?;
            Ok(Input { loaded: Loaded::Ann(a), bimodule })
        }
        None => Ok(Input { loaded: build_raw(file)?, bimodule: None }),
    }
}

fn group_tables(elements: Vec<String>, add: Vec<Vec<usize>>, zero: usize) -> GroupTable {
    let n = add.len();
    let elements = if elements.is_empty() { (0..n).map(|i| i.to_string()).collect() } else { elements };
    let neg = (0..n).map(|x| (0..n).find(|&y| add[x].get(y) == Some(&zero)).unwrap_or(n)).collect();
    GroupTable { elements, add, neg, zero }
}

fn modulus(name: &str) -> Option<usize> {
    name.strip_prefix("Z/").and_then(|n| n.trim().parse().ok()).filter(|&n| n > 0)
}

fn group(spec: GroupSpec, key: &str) -> Result<GroupTable, LoadError> {
    let g = match spec {
        GroupSpec::Named(n) => {
            GroupTable::zmod(modulus(&n).ok_or_else(|| schema(key, format!("unknown group {n:?}")))?)
        }
        GroupSpec::Tables { elements, add, zero } => group_tables(elements, add, zero),
    };
    g.validate().map_err(|e| schema(key, e.to_string()))?;
    Ok(g)
}

fn ring(spec: RingSpec) -> Result<RingTable, LoadError> {
    let r = match spec {
        RingSpec::Named(n) if n == "F2[t]/(t^2)" => RingTable::f2_dual(),
        RingSpec::Named(n) => {
            RingTable::zmod(modulus(&n).ok_or_else(|| schema("generator.ring", format!("unknown ring {n:?}")))?)
        }
        RingSpec::Tables { elements, add, mul, zero, one } => {
            RingTable { additive: group_tables(elements, add, zero), mul, one }
        }
    };
    r.validate().map_err(|e| schema("generator.ring", e.to_string()))?;
    Ok(r)
}

fn generate(g: Generator) -> Result<(AnnCat, Option<BimoduleData>), LoadError> {
    let model = |e: anncat::ModelError| schema("generator", e.to_string());
    match g {
        Generator::Ring { ring: r } => {
            let r = ring(r)?;
            Ok((from_ring(&r).map_err(model)?, Some(BimoduleData::zero(r))))
        }
        Generator::Bimodule { ring: r, module, cochains } => {
            let r = ring(r)?;
            let b = match module {
                ModuleSpec::Named(m) if m == "regular" => BimoduleData::regular(r),
                ModuleSpec::Named(m) if m == "zero" => BimoduleData::zero(r),
                ModuleSpec::Named(m) => return Err(schema("generator.module", format!("unknown module {m:?}"))),
                ModuleSpec::Tables { group: gs, left, right } => {
                    BimoduleData { ring: r, module: group(gs, "generator.module.group")?, left, right }
                }
            };
            let mut t = CochainSet::new();
            for (name, values) in cochains {
                let n = Name::parse(&name)
                    .filter(|n| Name::CONSTRAINTS.contains(n))
                    .ok_or_else(|| schema(format!("generator.cochains.{name}"), "not a constraint family"))?;
                t = t.with(n, values);
            }
            Ok((from_bimodule(&b, &t).map_err(model)?, Some(b)))
        }
        Generator::Pic { group: m, coefficients: n, h, c } => {
            let (m, n) = (group(m, "generator.group")?, group(n, "generator.coefficients")?);
            Ok((pic_from_cocycle(&m, &n, &h, &c).map_err(model)?, None))
        }
    }
}

fn build_raw(file: CategoryFile) -> Result<Loaded, LoadError> {
    let mut b = CategoryBuilder::new();
    let mut objs = BTreeMap::new();
    for name in &file.objects {
        let x = b.object(name.clone());
        if objs.insert(name.clone(), x).is_some() {
            return Err(schema(format!("objects.{name}"), "declared twice"));
        }
        b.identity(format!("id_{name}"), x);
    }
    let ob = |key: &str, name: &str| -> Result<ObjId, LoadError> {
        objs.get(name).copied().ok_or_else(|| schema(key, format!("unknown object {name:?}")))
    };
    let mut mors: BTreeMap<String, MorId> =
        file.objects.iter().enumerate().map(|(i, n)| (format!("id_{n}"), MorId(i as u32))).collect();
    for (name, d) in &file.morphisms {
        let key = format!("morphisms.{name}");
        let f = b.morphism(name.clone(), ob(&key, &d.dom)?, ob(&key, &d.cod)?);
        if mors.insert(name.clone(), f).is_some() {
            return Err(schema(key, "declared twice"));
        }
    }
    let mor = |key: &str, name: &str| -> Result<MorId, LoadError> {
        mors.get(name).copied().ok_or_else(|| schema(key, format!("unknown morphism {name:?}")))
    };
    for (i, [g, f, h]) in file.compose.iter().enumerate() {
        let key = format!("compose[{i}]");
        b.composite(mor(&key, g)?, mor(&key, f)?, mor(&key, h)?);
    }
    let c = b.build().map_err(|e| schema("compose", e.to_string()))?;
    let Some(plus_table) = &file.plus else {
        if file.times.is_some() || !file.constraints.is_empty() {
            return Err(schema("plus", "required when times or constraints are given"));
        }
        return Ok(Loaded::Category(c));
    };
    let tensor = |t: &OpTable, key: &str| -> Result<Bifunctor, LoadError> {
        let (n, m) = (c.object_count(), c.morphism_count());
        let mut obj = vec![None; n * n];
        for [x, y, z] in &t.objects {
            obj[ob(key, x)?.index() * n + ob(key, y)?.index()] = Some(ob(key, z)?);
        }
        let obj: Vec<ObjId> = obj
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    let (x, y) = (ObjId((i / n) as u32), ObjId((i % n) as u32));
                    schema(key, format!("no entry for ({}, {})", c.object_name(x), c.object_name(y)))
                })
            })
            .collect::<Result<_, _>>()?;
        let mut mm = vec![None; m * m];
        for [f, g, h] in &t.morphisms {
            mm[mor(key, f)?.index() * m + mor(key, g)?.index()] = Some(mor(key, h)?);
        }
        let mm: Vec<MorId> = mm
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                let (f, g) = (MorId((i / m) as u32), MorId((i % m) as u32));
                v.or_else(|| {
                    (c.is_identity(f) && c.is_identity(g))
                        .then(|| c.identity(obj[c.dom(f).index() * n + c.dom(g).index()]))
                })
                .ok_or_else(|| schema(key, format!("no entry for ({}, {})", c.morphism_name(f), c.morphism_name(g))))
            })
            .collect::<Result<_, _>>()?;
        Bifunctor::from_tables(&c, obj, mm).map_err(|e| schema(key, e.to_string()))
    };
    let plus = tensor(plus_table, "plus")?;
    let times = file.times.as_ref().map(|t| tensor(t, "times")).transpose()?;
    let zero = ob("plus.unit", &plus_table.unit)?;
    let one = file.times.as_ref().map(|t| ob("times.unit", &t.unit)).transpose()?;
    let ops = anncat::cat::Ops { plus: Some(&plus), times: times.as_ref(), zero: Some(zero), one };

    let mut wanted: Vec<Name> = vec![Name::Aplus, Name::Comm, Name::PlusLeftUnit, Name::PlusRightUnit];
    if times.is_some() {
        wanted.extend([Name::Assoc, Name::LeftUnit, Name::RightUnit, Name::LeftDist, Name::RightDist]);
    }
    if let Some(extra) = file.constraints.keys().find(|k| !wanted.iter().any(|n| n.as_str() == k.as_str())) {
        return Err(schema(format!("constraints.{extra}"), "not a constraint family of this structure"));
    }
    let mut families = BTreeMap::new();
    for name in wanted {
        let key = format!("constraints.{name}");
        let spec = file.constraints.get(name.as_str()).ok_or_else(|| schema(&key, "missing"))?;
        let (source, target) = name.shapes().expect("constraint shapes");
        let fam = match spec {
            FamilySpec::Keyword(k) if k == "identity" => {
                NatFamily::identity(name.as_str(), name.arity(), source, target, &c, &ops)
                    .map_err(|e| schema(&key, e.to_string()))?
            }
            FamilySpec::Keyword(k) => return Err(schema(&key, format!("expected \"identity\" or a table, got {k:?}"))),
            FamilySpec::Table(entries) => {
                let mut parsed = BTreeMap::new();
                for (args, m) in entries {
                    let xs = args.split(',').map(|a| ob(&key, a.trim())).collect::<Result<Vec<_>, _>>()?;
                    if xs.len() != name.arity() {
                        return Err(schema(&key, format!("{args:?} needs {} arguments", name.arity())));
                    }
                    parsed.insert(xs, mor(&key, m)?);
                }
                let mut missing = None;
                let fam = NatFamily::from_fn(name.as_str(), name.arity(), source, target, c.object_count(), |t| {
                    parsed.get(t).copied().unwrap_or_else(|| {
                        missing
                            .get_or_insert_with(|| t.iter().map(|x| c.object_name(*x)).collect::<Vec<_>>().join(","));
                        MorId(0)
                    })
                });
                if let Some(t) = missing {
                    return Err(schema(&key, format!("no entry for ({t})")));
                }
                fam
            }
        };
        families.insert(name, fam);
    }
    let mut take = |n: Name| families.remove(&n).expect("family built");
    let plus = PicData {
        monoidal: MonoidalData {
            tensor: plus,
            unit: zero,
            assoc: take(Name::Aplus),
            left: take(Name::PlusLeftUnit),
            right: take(Name::PlusRightUnit),
        },
        comm: take(Name::Comm),
    };
    let Some(times) = times else {
        return Ok(Loaded::Ann(AnnCat::pic_only(c, plus)));
    };
    let times = MonoidalData {
        tensor: times,
        unit: one.expect("times present"),
        assoc: take(Name::Assoc),
        left: take(Name::LeftUnit),
        right: take(Name::RightUnit),
    };
    let (ldist, rdist) = (Some(take(Name::LeftDist)), Some(take(Name::RightDist)));
    Ok(Loaded::Ann(AnnCat { category: c, plus, times: Some(times), ldist, rdist }))
}
