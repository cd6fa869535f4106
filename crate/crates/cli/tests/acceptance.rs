//! One line per acceptance criterion; exits nonzero if any fails.

use std::fs;
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use hopf_trace::hopf::{check_hopf, HopfAlgebra};
use hopf_trace::linalg::{Field, LinearMap};
use hopf_trace::report::{CheckReport, SuiteReport};
use hopf_trace::suite::{run, Execution, Subject, Suite};
use hopf_trace::zoo::{standard_test_family, ZooEntry};

type Outcome = Result<String, String>;

struct Entry {
    label: String,
    hopf: HopfAlgebra,
    report: SuiteReport,
}

fn zoo() -> Vec<(ZooEntry, Field)> {
    let q = Field::Rational;
    let gf5 = Field::prime(5).unwrap();
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((ZooEntry::GroupAlgebra(n), q));
        out.push((ZooEntry::GroupAlgebra(n), gf5));
    }
    out.push((ZooEntry::FunctionAlgebra(2), q));
    out.push((ZooEntry::FunctionAlgebra(3), q));
    out.push((ZooEntry::SweedlerH4, q));
    out.push((ZooEntry::SweedlerH4, gf5));
    out.push((ZooEntry::Taft { n: 3, q: 2, p: Some(7) }, q));
    out
}

fn label(entry: &ZooEntry, h: &HopfAlgebra) -> String {
    format!("{} over {}", entry.name(), h.field())
}

fn sections<'a>(r: &'a SuiteReport, prefix: &str) -> Vec<&'a CheckReport> {
    r.sections.iter().filter(|s| s.subject.starts_with(prefix)).collect()
}

fn all_pass(e: &Entry, secs: &[&CheckReport]) -> Result<usize, String> {
    let mut n = 0;
    for s in secs {
        if let Some(c) = s.failures().next() {
            return Err(format!("{}: {}: {} {}", e.label, s.subject, c.id, c.detail.clone().unwrap_or_default()));
        }
        n += s.checks.len();
    }
    Ok(n)
}

fn count(secs: &[&CheckReport], pred: impl Fn(&str) -> bool) -> usize {
    secs.iter().flat_map(|s| s.checks.iter()).filter(|c| c.passed && pred(&c.id)).count()
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn criterion_1(entries: &[Entry]) -> Outcome {
    let mut witnesses = 0;
    for e in entries {
        let r = check_hopf(e.hopf.data()).map_err(|x| x.to_string())?;
        require(r.passed(), || format!("{}: {:?}", e.label, r.failed_ids()))?;
        let f = e.hopf.field();
        let d = e.hopf.dim();
        let mut data = e.hopf.data().clone();
        data.antipode = data.antipode.add(&LinearMap::from_entries(f, d, d, [(d - 1, 0, f.one())]).unwrap()).unwrap();
        let r = check_hopf(&data).map_err(|x| x.to_string())?;
        let unit_counit = data.algebra.unit.compose(&data.coalgebra.counit).unwrap();
        let id = LinearMap::identity(f, d);
        let composites = [
            ("antipode left", data.antipode.kronecker(&id)),
            ("antipode right", id.kronecker(&data.antipode)),
        ];
        let mut failed = 0;
        for (name, inner) in composites {
            let map = LinearMap::chain(&[&data.algebra.mul, &inner, &data.coalgebra.comul]).unwrap();
            let check = r.get(name).ok_or_else(|| format!("{}: no check {name}", e.label))?;
            if check.passed {
                continue;
            }
            failed += 1;
            let w = check.witness.as_ref().ok_or_else(|| format!("{}: {name} without witness", e.label))?;
            let (row, col) = (w.indices[0], w.indices[1]);
            let (actual, expected) = (map.get(row, col), unit_counit.get(row, col));
            require(actual != expected && w.actual == actual.to_string() && w.expected == expected.to_string(), || {
                format!("{}: {name} witness {w:?} disagrees with the composite", e.label)
            })?;
            witnesses += 1;
        }
        require(failed > 0, || format!("{}: corrupted antipode passes", e.label))?;
    }
    Ok(format!("{} algebras exact; {} corrupted-antipode witnesses confirmed", entries.len(), witnesses))
}

fn criterion_2(entries: &[Entry]) -> Outcome {
    let mut total = 0;
    for e in entries {
        let secs = sections(&e.report, "coend:");
        total += all_pass(e, &secs)?;
        let family = standard_test_family(&e.hopf).map_err(|x| x.to_string())?;
        require(secs.iter().any(|s| s.subject == "coend: bicomodule algebra H̃"), || format!("{}: no H̃ check", e.label))?;
        for x in &family.comodules {
            let key = format!("coend: j at {}", x.name());
            require(secs.iter().any(|s| s.subject == key), || format!("{}: missing {key}", e.label))?;
        }
        require(secs.iter().any(|s| s.subject == "coend: j_H against the counit"), || format!("{}: no j_H check", e.label))?;
        let dinat = secs.iter().filter(|s| s.subject.starts_with("coend: dinaturality")).count();
        require(dinat > 0, || format!("{}: no dinaturality sections", e.label))?;
        let cowedge: Vec<&CheckReport> = secs.iter().copied().filter(|s| s.subject == "coend: co-wedge factorization").collect();
        let unique = count(&cowedge, |id| id.ends_with(": unique"));
        let recovered = count(&cowedge, |id| id.ends_with(": recovers u"));
        require(unique == 3 && recovered == 3, || format!("{}: {unique} unique, {recovered} recovered co-wedges", e.label))?;
        let mult = secs.iter().filter(|s| s.subject.starts_with("coend: multiplication")).count();
        require(mult > 0, || format!("{}: no multiplication sections", e.label))?;
    }
    Ok(format!("{total} checks; 3 co-wedges factor uniquely per algebra"))
}

fn criterion_3(entries: &[Entry]) -> Outcome {
    let mut total = 0;
    let mut non_involutive = Vec::new();
    for e in entries {
        let secs: Vec<&CheckReport> =
            sections(&e.report, "balancing:").into_iter().filter(|s| !s.subject.starts_with("balancing: adjunction")).collect();
        total += all_pass(e, &secs)?;
        for b in ["k", "Ĥ", "H̃"] {
            let suffix = format!(" over {b}");
            let objects = secs.iter().filter(|s| s.subject.ends_with(&suffix) && !s.subject.contains("naturality")).count();
            require(objects > 0, || format!("{}: no test objects over {b}", e.label))?;
            require(secs.iter().any(|s| s.subject == format!("balancing: naturality in M{suffix}")), || {
                format!("{}: no naturality in M over {b}", e.label)
            })?;
        }
        let inverses = count(&secs, |id| id.ends_with("inverse after beta"));
        let axioms = count(&secs, |id| id.ends_with("coherence square"));
        require(inverses > 0 && axioms > 0, || format!("{}: {inverses} inverses, {axioms} coherence squares", e.label))?;
        if e.hopf.antipode() != e.hopf.antipode_inv() {
            non_involutive.push(e.label.clone());
        }
    }
    require(non_involutive.iter().any(|l| l.starts_with("sweedler_h4")), || "S = S⁻¹ on sweedler_h4".into())?;
    Ok(format!("{total} checks; S ≠ S⁻¹ on {}", non_involutive.join(", ")))
}

fn criterion_4(entries: &[Entry]) -> Outcome {
    let mut total = 0;
    let mut corruptions = 0;
    for e in entries {
        let secs = sections(&e.report, "center:");
        total += all_pass(e, &secs)?;
        for s in secs.iter().filter(|s| s.subject.starts_with("center: induced")) {
            let one = [*s];
            require(count(&one, |id| id == "round trip ρ → γ → ρ") == 1, || format!("{}: {} has no round trip", e.label, s.subject))?;
            for law in ["associativity", "unitality", "intertwining"] {
                let detected = count(&one, |id| id == format!("corruption {law}: detected"));
                let exempt = e.hopf.dim() == 1 && law != "unitality";
                require(detected == 1 || exempt, || format!("{}: {} lacks {law} corruption", e.label, s.subject))?;
                corruptions += detected;
            }
            for kind in ["invertibility", "hexagon", "naturality"] {
                require(count(&one, |id| id.starts_with(kind)) > 0, || format!("{}: {} has no {kind} check", e.label, s.subject))?;
            }
        }
    }
    Ok(format!("{total} checks; {corruptions} corruptions detected"))
}

fn criterion_5(entries: &[Entry]) -> Outcome {
    let mut total = 0;
    for e in entries {
        let secs = sections(&e.report, "yd:");
        total += all_pass(e, &secs)?;
        require(secs.iter().any(|s| s.subject == "yd: Ĥ"), || format!("{}: no Ĥ check", e.label))?;
        let twisted: Vec<&CheckReport> = secs.iter().copied().filter(|s| s.subject == "yd: twisted condition").collect();
        require(count(&twisted, |id| id.ends_with(": twisted YD")) > 0, || format!("{}: no positive examples", e.label))?;
        let name = e.label.split(' ').next().unwrap();
        if name == "group_algebra(2)" || name == "sweedler_h4" {
            let n = standard_test_family(&e.hopf).map_err(|x| x.to_string())?.comodules.len();
            let pairs = secs.iter().filter(|s| s.subject.starts_with("yd: fully faithful")).count();
            require(pairs == n * n, || format!("{}: {pairs} of {} pairs checked for full faithfulness", e.label, n * n))?;
        }
        if name == "sweedler_h4" {
            require(count(&twisted, |id| id.starts_with("negative control")) == 1, || format!("{}: no negative control", e.label))?;
        }
        if name == "group_algebra(2)" {
            let agree = count(&twisted, |id| id.ends_with("twisted agrees with ordinary"));
            require(agree >= 3, || format!("{}: {agree} coincidence checks", e.label))?;
        }
    }
    Ok(format!("{total} checks; all family pairs fully faithful over ℤ/2 and H₄"))
}

fn criterion_6(entries: &[Entry]) -> Outcome {
    let mut pairs = 0;
    for e in entries {
        let secs = sections(&e.report, "balancing: adjunction");
        all_pass(e, &secs)?;
        require(secs.len() == 3, || format!("{}: {} adjunction sections", e.label, secs.len()))?;
        pairs += secs.iter().map(|s| s.checks.len()).sum::<usize>();
    }
    Ok(format!("{pairs} (M, N) pairs with equal Hom dimensions"))
}

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hopftrace"));
    c.env_remove("HOPFTRACE_FIELD");
    c
}

fn exit_code(args: &[&str]) -> Option<i32> {
    bin().args(args).output().ok()?.status.code()
}

fn criterion_7() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut files = 0;
    for (entry, field) in zoo() {
        let name = format!("zoo:{}", entry.name());
        let field = field.to_string().replace("Q", "rational");
        let first = bin().args(["export", &name, "--field", &field]).output().map_err(|e| e.to_string())?;
        let path = dir.join(format!("{}-{files}.json", entry.name()));
        fs::write(&path, &first.stdout).map_err(|e| e.to_string())?;
        let second = bin().args(["export", path.to_str().unwrap()]).output().map_err(|e| e.to_string())?;
        require(first.status.success() && first.stdout == second.stdout, || format!("{name} over {field} is not a fixed point"))?;
        files += 1;
    }
    let traced = dir.join("trace.json");
    let t = traced.to_str().unwrap();
    require(exit_code(&["trace", "zoo:sweedler_h4", "--algebra", "twisted", "--module", "H̃", "-o", t]) == Some(0), || {
        "trace failed".into()
    })?;
    let again = bin().args(["export", t]).output().map_err(|e| e.to_string())?;
    require(fs::read(&traced).map_err(|e| e.to_string())? == again.stdout, || "trace output is not canonical".into())?;
    files += 1;

    let text = String::from_utf8(bin().args(["export", "zoo:sweedler_h4"]).output().unwrap().stdout).unwrap();
    let bad = dir.join("bad.json");
    fs::write(&bad, text.replacen("[0, 0, \"1\"]", "[0, 0, \"2\"]", 1)).unwrap();
    let garbled = dir.join("garbled.json");
    fs::write(&garbled, &text[..text.len() / 2]).unwrap();
    let contract: [(&[&str], i32); 6] = [
        (&["verify", "zoo:sweedler_h4", "--suite", "hopf"], 0),
        (&["verify", t, "--suite", "balancing"], 0),
        (&["verify", bad.to_str().unwrap(), "--suite", "hopf"], 1),
        (&["verify", garbled.to_str().unwrap()], 2),
        (&["verify", "zoo:no_such_algebra"], 2),
        (&["verify", "zoo:sweedler_h4", "--suite", "nonsense"], 2),
    ];
    for (args, code) in contract {
        require(exit_code(args) == Some(code), || format!("{args:?} did not exit {code}"))?;
    }

    let subject = Subject::zoo(&ZooEntry::SweedlerH4, Field::Rational).map_err(|e| e.to_string())?;
    let a = run(&subject, Suite::All, Execution::Parallel).without_timing();
    let b = run(&subject, Suite::All, Execution::Parallel).without_timing();
    let c = run(&subject, Suite::All, Execution::Serial).without_timing();
    require(a == b, || "repeated parallel runs differ".into())?;
    require(a == c, || "parallel and serial runs differ".into())?;
    let json = |r: &SuiteReport| serde_json::to_string(r).unwrap();
    require(json(&a) == json(&c), || "serialized reports differ".into())?;
    Ok(format!("{files} canonical files fixed; {} exit codes honored; 3 identical runs", contract.len()))
}

fn main() {
    let start = Instant::now();
    let entries: Vec<Entry> = zoo()
        .into_iter()
        .map(|(entry, field)| {
            let subject = Subject::zoo(&entry, field).expect("zoo entry builds");
            let hopf = subject.hopf.clone().expect("zoo entries are Hopf algebras");
            let report = run(&subject, Suite::All, Execution::Parallel);
            Entry { label: label(&entry, &hopf), hopf, report }
        })
        .collect();
    let results: [(&str, Outcome); 7] = [
        ("axiom foundation", criterion_1(&entries)),
        ("coend and dinaturality", criterion_2(&entries)),
        ("balancing", criterion_3(&entries)),
        ("center round trip and corruptions", criterion_4(&entries)),
        ("Ĥ, induction and twisted YD", criterion_5(&entries)),
        ("free/forget adjunction", criterion_6(&entries)),
        ("round trip, exit codes, determinism", criterion_7()),
    ];
    let mut failed = 0;
    for (k, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {}/7 criteria passed in {:.1}s", 7 - failed, start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
