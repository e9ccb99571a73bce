//! Command dispatch. Every command yields a [`Outcome`]; `main` turns it
//! into output and an exit code.

use crate::file::{load, Input, LoadError, Loaded};
use anncat::ann::{check_all, check_zero_properties};
use anncat::catalog::{catalog, ANN1, ANN2, ANN3};
use anncat::constructions::*;
use anncat::models::{search_constraint_families, BimoduleData};
use anncat::structures::{
    check_ac_functor, check_acu, check_au, check_au_functor, check_identity_families, check_pic, IdentityFunctor,
    LeftMul, RightMul, TableFunctor,
};
use anncat::{check_ann_functor, derive_zero_isos, AnnCat, CategoryOps, ConstructionError, Context, Name, Op, Report};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "anncat", version, about = "Verify and construct finite Ann-categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    pub report: ReportFormat,
    /// Worker threads; output does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Longest ⊕-word used when probing strictified categories.
    #[arg(long, global = true, default_value_t = 3)]
    pub probe_depth: usize,
    /// Largest candidate count an enumeration may visit.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub bound: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Axioms {
    Pic,
    Au,
    Ann1,
    Ann2,
    Ann3,
    Functor,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run axiom checks.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Axioms::All)]
        axioms: Axioms,
    },
    /// Derive the zero isomorphisms and check their properties.
    Zero { file: PathBuf },
    /// Enumerate End(A) and verify it is almost strict.
    End { file: PathBuf },
    /// Check Λ: A → End(A).
    Lambda { file: PathBuf },
    /// Embed A into End of its ⊕-strictification.
    Embed { file: PathBuf },
    /// Transport the structure along an inflated copy of A.
    Transfer {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        multiplicity: usize,
    },
    /// Strictify ⊕ and check the canonical equivalence.
    Strictify { file: PathBuf },
    /// Enumerate cochains for the given families that yield Ann-categories.
    Search {
        file: PathBuf,
        /// Comma-separated family names, e.g. `c,L`.
        #[arg(long, value_delimiter = ',', required = true)]
        families: Vec<String>,
    },
}

/// Result of a command: informational lines for text output and the report.
pub struct Outcome {
    pub notes: Vec<String>,
    pub report: Report,
}

#[derive(Debug)]
pub enum RunError {
    /// Bad input: exit code 2.
    Input(String),
    /// A construction found the input does not satisfy the theory: exit code 1.
    Failed(String),
}

impl From<LoadError> for RunError {
    fn from(e: LoadError) -> Self {
        RunError::Input(e.to_string())
    }
}

impl From<ConstructionError> for RunError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::NoSolution(_) | ConstructionError::MultipleSolutions { .. } => {
                RunError::Failed(e.to_string())
            }
            _ => RunError::Input(e.to_string()),
        }
    }
}

impl From<anncat::EvalError> for RunError {
    fn from(e: anncat::EvalError) -> Self {
        RunError::Failed(e.to_string())
    }
}

fn ann(path: &Path) -> Result<(AnnCat, Option<BimoduleData>), RunError> {
    let Input { loaded, bimodule } = load(path)?;
    match loaded {
        Loaded::Ann(a) => Ok((a, bimodule)),
        Loaded::Category(_) => Err(RunError::Input(format!("{}: no ⊕ structure", path.display()))),
    }
}

fn ring(path: &Path) -> Result<AnnCat, RunError> {
    let (a, _) = ann(path)?;
    if a.times.is_none() {
        return Err(RunError::Input(format!("{}: no ⊗ structure", path.display())));
    }
    Ok(a)
}

pub fn run(cli: &Cli) -> Result<Outcome, RunError> {
    let mut notes = Vec::new();
    let report = match &cli.command {
        Command::Check { file, axioms } => {
            let (a, _) = ann(file)?;
            check(&a, *axioms)?
        }
        Command::Zero { file } => {
            let a = ring(file)?;
            let z = derive_zero_isos(&a)?;
            for x in a.objects() {
                notes.push(format!(
                    "Lhat[{0}] = {1}   Rhat[{0}] = {2}",
                    a.show_ob(&x),
                    a.show_mor(&z.lhat[&x]),
                    a.show_mor(&z.rhat[&x])
                ));
            }
            check_zero_properties(&a, &z)
        }
        Command::End { file } => {
            let a = ring(file)?;
            let mut e = build_end(&a)?;
            let objs = enumerate_end(&e, cli.bound)?;
            notes.push(format!("End has {} objects", objs.len()));
            notes.extend(objs.iter().map(|f| format!("  {}", e.show(f))));
            e.set_objects(objs);
            verify_end_almost_strict(&e)
        }
        Command::Lambda { file } => {
            let a = ring(file)?;
            let e = build_end(&a)?;
            let l = build_lambda(&e)?;
            let mut r = check_lambda(&l);
            r.extend(check_ann_functor(&l));
            r
        }
        Command::Embed { file } => {
            let a = ring(file)?;
            let out = embed_almost_strict(&a, cli.probe_depth)?;
            let faithful = out.functor.check("functor/faithful").is_some_and(|c| c.passed());
            notes.push(format!("faithful: {}", if faithful { "yes" } else { "no" }));
            notes.push("target constraint families on θ, Id and the image:".into());
            for c in out.strictness.section("strict/") {
                notes.push(format!(
                    "  {:<6} {}",
                    &c.id["strict/".len()..],
                    if c.passed() { "identity" } else { "not identity" }
                ));
            }
            for (n, id) in &out.loose {
                notes.push(format!("  {:<6} {}", format!("{n}*"), if *id { "identity" } else { "not identity" }));
            }
            let mut r = out.functor;
            r.extend(out.strictness);
            r
        }
        Command::Transfer { file, multiplicity } => {
            let a = ring(file)?;
            let inf = inflate(&a.category, *multiplicity)?;
            let (induced, f) = transfer_structure(&inf.category, &a, &inf.equivalence)?;
            notes.push(format!("inflated category has {} objects", induced.category.object_count()));
            let mut r = check_all(&induced).map_err(|e| RunError::Input(e.to_string()))?;
            let tf = TableFunctor::new(&induced, &a, &f);
            r.extend(check_ac_functor(&tf).prefixed("F/"));
            r.extend(check_au_functor(&tf, Op::Times).prefixed("F/"));
            r.extend(check_ann_functor(&tf).prefixed("F/"));
            r
        }
        Command::Strictify { file } => {
            let (a, _) = ann(file)?;
            let s = strictify_plus(&a, cli.probe_depth);
            notes.push(format!("{} probe words", s.objects().len()));
            let mut r = check_identity_families(&s, &[Name::Aplus, Name::PlusLeftUnit, Name::PlusRightUnit]);
            r.extend(check_equivalence(&s));
            r.mark_bounded();
            r
        }
        Command::Search { file, families } => {
            let (_, bimodule) = ann(file)?;
            let b = bimodule.ok_or_else(|| RunError::Input("search needs a ring or bimodule generator".into()))?;
            let names = families
                .iter()
                .map(|f| Name::parse(f).filter(|n| Name::CONSTRAINTS.contains(n)))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| RunError::Input(format!("unknown family in {families:?}")))?;
            let found =
                search_constraint_families(&b, &names, cli.bound).map_err(|e| RunError::Input(e.to_string()))?;
            notes.push(format!("{} solutions", found.len()));
            for t in &found {
                let parts: Vec<String> = t.values.iter().map(|(n, v)| format!("{n}={v:?}")).collect();
                notes.push(format!("  {}", parts.join(" ")));
            }
            let mut c = anncat::Check::new("search/solutions", "cochain assignments passing every check");
            c.instances = found.len() as u64;
            let mut r = Report::new();
            r.push(c);
            r
        }
    };
    Ok(Outcome { notes, report })
}

fn check(a: &AnnCat, axioms: Axioms) -> Result<Report, RunError> {
    let tables = |e: anncat::CatError| RunError::Input(e.to_string());
    let needs_times = |r: Report| {
        if a.times.is_none() {
            Err(RunError::Input("these axioms need a ⊗ structure".into()))
        } else {
            Ok(r)
        }
    };
    let group = |g| Context::new(a).check_all(catalog().group(g), &a.objects());
    Ok(match axioms {
        Axioms::All => check_all(a).map_err(tables)?,
        Axioms::Pic => {
            let mut r = check_au(a, Op::Plus);
            r.extend(check_acu(a));
            r.extend(check_pic(a, Op::Plus));
            r
        }
        Axioms::Au => {
            let mut r = check_au(a, Op::Plus);
            if a.times.is_some() {
                r.extend(check_au(a, Op::Times));
            }
            r
        }
        Axioms::Ann1 => needs_times(group(ANN1))?,
        Axioms::Ann2 => needs_times(group(ANN2))?,
        Axioms::Ann3 => needs_times(group(ANN3))?,
        Axioms::Functor => needs_times(functor_checks(a))?,
    })
}

/// The identity Ann-functor, and `L^A`, `R^A` as ⊕-AC functors.
fn functor_checks(a: &AnnCat) -> Report {
    let mut r = Report::new();
    if a.times.is_none() {
        return r;
    }
    let id = IdentityFunctor(a);
    r.extend(check_ac_functor(&id).prefixed("Id/"));
    r.extend(check_au_functor(&id, Op::Times).prefixed("Id/"));
    r.extend(check_ann_functor(&id).prefixed("Id/"));
    let zero = derive_zero_isos(a).ok();
    for x in a.objects() {
        let name = a.show_ob(&x);
        let l = LeftMul { structure: a, a: x, zero: zero.as_ref().map(|z| z.lhat[&x]) };
        r.extend(check_ac_functor(&l).prefixed(&format!("L^{name}/")));
        let rm = RightMul { structure: a, a: x, zero: zero.as_ref().map(|z| z.rhat[&x]) };
        r.extend(check_ac_functor(&rm).prefixed(&format!("R^{name}/")));
    }
    r
}

/// Exit code for a finished command.
pub fn exit_code(result: &Result<Outcome, RunError>) -> i32 {
    match result {
        Ok(o) if o.report.passed() => 0,
        Ok(_) | Err(RunError::Failed(_)) => 1,
        Err(RunError::Input(_)) => 2,
    }
}

/// Renders the outcome in the requested format.
pub fn render(o: &Outcome, format: ReportFormat) -> String {
    match format {
        ReportFormat::Machine => o.report.render_machine(),
        ReportFormat::Text => {
            let mut s = String::new();
            for n in &o.notes {
                s.push_str(n);
                s.push('\n');
            }
            s.push_str(&o.report.render_text());
            s
        }
    }
}
