//! One line per acceptance criterion; exits non-zero if any fails.

use anncat::ann::{check_all, check_zero_properties};
use anncat::constructions::*;
use anncat::models::*;
use anncat::structures::{check_identity_families, TableFunctor};
use anncat::{check_ann_functor, derive_zero_isos, verify_ann, AnnCat, AnnStructure, CategoryOps, Name, ObjId};
use anncat_cli::file::{load, Loaded};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn ann(name: &str) -> AnnCat {
    match load(&fixture(name)).expect("fixture loads").loaded {
        Loaded::Ann(a) => a,
        Loaded::Category(_) => panic!("{name} has no structure"),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn anncat(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_anncat")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

const RINGS: [(&str, u64); 3] = [("ring_z2.cat", 2), ("ring_z6.cat", 6), ("ring_f2_dual.cat", 4)];
const WITH_TIMES: [&str; 5] =
    ["ring_z2.cat", "ring_z6.cat", "ring_f2_dual.cat", "bimodule_z2_z2_trivial.cat", "bimodule_z4_z4_trivial.cat"];

fn ring_models() -> Outcome {
    let mut parts = Vec::new();
    for (file, n) in RINGS {
        let t = Instant::now();
        let (code, out) = anncat(&["check", fixture(file).to_str().unwrap(), "--axioms", "all", "--report", "machine"]);
        let elapsed = t.elapsed();
        ensure(code == 0, || format!("{file}: exit {code}"))?;
        let out = String::from_utf8(out).unwrap();
        for id in ["2.10", "2.10'", "2.11", "2.12"] {
            let needle = format!("\"diagram\":\"{id}\",");
            let line = out.lines().find(|l| l.contains(&needle)).ok_or(format!("{file}: no {id}"))?;
            let expect = format!("\"instances\":{},", n.pow(4));
            ensure(line.contains(&expect), || format!("{file}: {id} {line}"))?;
        }
        ensure(elapsed < Duration::from_secs(5), || format!("{file}: {elapsed:?}"))?;
        parts.push(format!("{file} {}ms", elapsed.as_millis()));
    }
    Ok(parts.join(", "))
}

fn bimodule_models() -> Outcome {
    let mut parts = Vec::new();
    for file in ["bimodule_z2_z2_trivial.cat", "bimodule_z4_z4_trivial.cat"] {
        let t = Instant::now();
        let r = verify_ann(&ann(file));
        let elapsed = t.elapsed();
        ensure(r.passed(), || format!("{file}\n{}", r.render_text()))?;
        ensure(elapsed < Duration::from_secs(30), || format!("{file}: {elapsed:?}"))?;
        parts.push(format!("{file} {} instances {}ms", r.instance_count(), elapsed.as_millis()));
    }
    Ok(parts.join(", "))
}

fn mutation_sensitivity() -> Outcome {
    let base = ann("bimodule_z2_z2_trivial.cat");
    let one = ObjId(1);
    let mut detected = 0;
    for name in Name::CONSTRAINTS {
        let args = vec![one; name.arity()];
        let mut a = base.clone();
        let fam = a.family_mut(name).ok_or(format!("{name} missing"))?;
        let old = fam.component(&args);
        let hom = base.category.hom(base.dom(&old), base.cod(&old));
        let other = *hom.iter().find(|&&m| m != old).ok_or(format!("{name}: no alternative"))?;
        fam.set_component(&args, other);
        let r = check_all(&a).map_err(|e| e.to_string())?;
        if let Some((_, f)) = r.first_failure() {
            if !f.binding.is_empty() {
                detected += 1;
            }
        }
    }
    ensure(detected == 9, || format!("{detected}/9 detected"))?;
    Ok("9/9 detected".into())
}

fn zero_theory() -> Outcome {
    for file in WITH_TIMES {
        let a = ann(file);
        let z = derive_zero_isos(&a).map_err(|e| format!("{file}: {e}"))?;
        let r = check_zero_properties(&a, &z);
        ensure(r.passed(), || format!("{file}\n{}", r.render_text()))?;
        let (zero, unit) = (a.zero(), a.one().unwrap());
        let l0 = a.constraint(Name::LeftUnit, &[zero]).unwrap();
        let r0 = a.constraint(Name::RightUnit, &[zero]).unwrap();
        ensure(z.lhat[&unit] == l0 && z.rhat[&unit] == r0, || format!("{file}: Lhat(1), Rhat(1)"))?;
    }
    Ok(format!("{} fixtures", WITH_TIMES.len()))
}

fn transference() -> Outcome {
    let a = ann("ring_z2.cat");
    let inf = inflate(&a.category, 2).map_err(|e| e.to_string())?;
    let (induced, f) = transfer_structure(&inf.category, &a, &inf.equivalence).map_err(|e| e.to_string())?;
    let r = verify_ann(&induced);
    ensure(r.passed(), || r.render_text())?;
    let tf = TableFunctor::new(&induced, &a, &f);
    let r = check_ann_functor(&tf);
    ensure(r.passed(), || r.render_text())?;

    let b = ann("bimodule_z2_z2_trivial.cat");
    let (same, _) =
        transfer_structure(&b.category, &b, &Equivalence::identity(&b.category)).map_err(|e| e.to_string())?;
    for n in Name::CONSTRAINTS {
        ensure(same.family(n) == b.family(n), || format!("identity transfer changed {n}"))?;
    }
    Ok("inflate(D(Z/2), 2) verified; identity transfer exact".into())
}

fn strictification() -> Outcome {
    let z3 = GroupTable::zmod(3);
    let mut f = vec![0; 9];
    f[4] = 1;
    let (h, c) = coboundary(&z3, &z3, &f);
    let twisted = pic_from_cocycle(&z3, &z3, &h, &c).map_err(|e| e.to_string())?;
    ensure(!check_identity_families(&twisted, &[Name::Aplus]).passed(), || "base aplus is already strict".into())?;
    let mut words = 0;
    for a in [&twisted, &ann("bimodule_z2_z2_trivial.cat")] {
        let s = strictify_plus(a, 3);
        let r = check_identity_families(&s, &[Name::Aplus, Name::PlusLeftUnit, Name::PlusRightUnit]);
        ensure(r.passed(), || r.render_text())?;
        let r = check_equivalence(&s);
        ensure(r.passed(), || r.render_text())?;
        words += s.objects().len();
    }
    Ok(format!("{words} probe words, twisted aplus strictified"))
}

fn end_category() -> Outcome {
    let a = ann("ring_z2.cat");
    let mut e = build_end(&a).map_err(|e| e.to_string())?;
    let objs = enumerate_end(&e, 1 << 20).map_err(|e| e.to_string())?;
    ensure(objs.len() == 2, || format!("D(Z/2): {} objects", objs.len()))?;
    e.set_objects(objs);
    let r = verify_end_almost_strict(&e);
    ensure(r.passed(), || r.render_text())?;
    let a3 = ann_ring(3);
    let e3 = build_end(&a3).map_err(|e| e.to_string())?;
    let n3 = enumerate_end(&e3, 1 << 20).map_err(|e| e.to_string())?.len();
    ensure(n3 == 3, || format!("D(Z/3): {n3} objects"))?;
    Ok("D(Z/2): 2 objects verified, D(Z/3): 3 objects".into())
}

fn ann_ring(n: usize) -> AnnCat {
    from_ring(&RingTable::zmod(n)).expect("ring model")
}

fn embedding() -> Outcome {
    let t = Instant::now();
    let mut pairs = 0;
    for file in ["ring_z2.cat", "bimodule_z2_z2_trivial.cat"] {
        let out = embed_almost_strict(&ann(file), 3).map_err(|e| e.to_string())?;
        let faithful = out.functor.check("functor/faithful").ok_or("no faithfulness check")?;
        ensure(faithful.passed(), || format!("{file}: not faithful"))?;
        pairs += faithful.instances;
        for id in ["2.15", "2.15'"] {
            ensure(out.functor.check(id).is_some_and(|c| c.passed()), || format!("{file}: {id}"))?;
        }
        ensure(out.passed(), || format!("{file}\n{}{}", out.functor.render_text(), out.strictness.render_text()))?;
    }
    ensure(t.elapsed() < Duration::from_secs(120), || format!("{:?}", t.elapsed()))?;
    Ok(format!("faithful on {pairs} parallel pairs, {}ms", t.elapsed().as_millis()))
}

fn cxx_condition() -> Outcome {
    for file in WITH_TIMES {
        ensure(check_cxx_condition(&ann(file)).passed(), || format!("{file}: c(X,X) ≠ id"))?;
    }
    let c = check_cxx_condition(&ann("pic_z2_cxy.cat"));
    ensure(c.failures.len() == 1 && c.failures[0].binding == ["X=1"], || format!("{:?}", c.failures))?;
    Ok("true on ring/bimodule fixtures, witness X=1 on c(x,y)=xy".into())
}

fn determinism() -> Outcome {
    let dir = fixture("");
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "cat"))
        .collect();
    files.sort();
    for f in &files {
        let path = f.to_str().unwrap();
        let (_, one) = anncat(&["check", path, "--report", "machine", "--jobs", "1"]);
        let (_, eight) = anncat(&["check", path, "--report", "machine", "--jobs", "8"]);
        ensure(!one.is_empty() && one == eight, || format!("{path} differs"))?;
    }
    let z2 = fixture("ring_z2.cat");
    let (_, one) = anncat(&["end", z2.to_str().unwrap(), "--report", "machine", "--jobs", "1"]);
    let (_, eight) = anncat(&["end", z2.to_str().unwrap(), "--report", "machine", "--jobs", "8"]);
    ensure(one == eight, || "end report differs".into())?;
    Ok(format!("{} fixtures byte-identical", files.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("ring models", ring_models),
        ("bimodule models", bimodule_models),
        ("mutation sensitivity", mutation_sensitivity),
        ("zero isomorphisms", zero_theory),
        ("transference", transference),
        ("strictification", strictification),
        ("End category", end_category),
        ("embedding", embedding),
        ("c(X,X) = id", cxx_condition),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("acceptance {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("acceptance {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{}/{} acceptance criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
