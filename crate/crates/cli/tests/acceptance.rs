//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::Instant;

use circlebundles::catalog;
use circlebundles::classifier::{
    complex_structure_counts, count_classes, enumerate_classes, enumerate_fiber_data,
    feasibility_check, model_presentation, Case,
};
use circlebundles::verify::{
    character_table_suite, extension_existence_suite, trichotomy_suite, Cell, SuiteReport,
};
use circlebundles::{ImageKind, RealType, Report};
use circlebundles_cli::{read_input, run_classify};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn inputs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../inputs")
}

fn shipped_inputs() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(inputs_dir())
        .expect("inputs directory")
        .map(|e| e.expect("directory entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    v.sort();
    v
}

fn stem(p: &Path) -> String {
    p.file_stem().unwrap().to_string_lossy().into_owned()
}

fn classify_file(name: &str, m_bound: usize) -> Result<Report, String> {
    let mut spec =
        read_input(&inputs_dir().join(format!("{name}.json"))).map_err(|e| e.to_string())?;
    spec.m_bound = m_bound;
    run_classify(&spec)
        .map(|(r, _)| r)
        .map_err(|e| e.to_string())
}

fn all_reports(m_bound: usize) -> Result<Vec<(String, Report)>, String> {
    shipped_inputs()
        .iter()
        .map(|p| Ok((stem(p), classify_file(&stem(p), m_bound)?)))
        .collect()
}

fn suite(report: SuiteReport) -> Outcome {
    if report.passed() {
        Ok(format!("{} checks, 0 violations", report.checks))
    } else {
        Err(report.to_string())
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn character_tables() -> Outcome {
    let start = Instant::now();
    let detail = suite(character_table_suite(&catalog::fast_suite()))?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.2}s"))?;
    Ok(format!("{detail}, {secs:.2}s"))
}

fn trichotomy() -> Outcome {
    suite(trichotomy_suite(&catalog::fast_suite()))
}

fn cell_of(class: &circlebundles::IsotypicalClass) -> Cell {
    (
        class.action.image().kind,
        class.chi.kind,
        class.e_one,
        class.e_mu,
    )
}

fn conformance() -> Outcome {
    let reports = all_reports(6)?;
    let mut cells: BTreeSet<(String, Cell)> = BTreeSet::new();
    for (name, r) in &reports {
        for c in &r.classes {
            let cell = cell_of(c);
            ensure(feasibility_check(cell.0, cell.1, cell.2, cell.3), || {
                format!(
                    "{name}: class {} lies in an empty cell {cell:?}",
                    c.chi_index
                )
            })?;
            cells.insert((name.clone(), cell));
        }
    }
    let required = [
        ("q8_over_d2", (ImageKind::Dihedral, RealType::Real, 0, 0)),
        ("s3_standard", (ImageKind::Dihedral, RealType::Real, 2, 2)),
        ("q8_half_turn", (ImageKind::Cyclic, RealType::Complex, 1, 1)),
        ("z4_half_turn", (ImageKind::Cyclic, RealType::Real, 1, 1)),
    ];
    for (name, cell) in required {
        ensure(cells.contains(&(name.to_string(), cell)), || {
            format!("{name} does not exhibit {cell:?}")
        })?;
    }
    let distinct: BTreeSet<&Cell> = cells.iter().map(|(_, c)| c).collect();
    Ok(format!(
        "{} classes over {} inputs in {} distinct feasible cells, all required cells exhibited",
        reports.iter().map(|(_, r)| r.classes.len()).sum::<usize>(),
        reports.len(),
        distinct.len()
    ))
}

fn counting() -> Outcome {
    let mut checks = 0;
    for (name, r) in all_reports(10)? {
        for c in &r.classes {
            for m in 1..=10 {
                let formula = count_classes(c.case, c.e_one, c.e_mu, m);
                let classes = enumerate_classes(&c.presentation, m);
                let fibers = enumerate_fiber_data(&c.presentation, m) * c.gamma_multiplicity();
                ensure(
                    formula == classes && formula == fibers && c.counts[m - 1] == formula,
                    || {
                        format!(
                        "{name} class {} m={m}: formula {formula}, classes {classes}, fibers x gamma {fibers}",
                        c.chi_index
                    )
                    },
                )?;
                checks += 1;
            }
        }
    }
    let s3 = classify_file("s3_standard", 10)?;
    let n3 = s3.classes[0].counts[2];
    ensure(n3 == 16, || format!("S3 N(3) = {n3}"))?;
    let model = model_presentation(0, 2).map_err(|e| e.to_string())?;
    let n4 = enumerate_classes(&model, 4);
    ensure(
        n4 == 5 && count_classes(Case::Generic, 0, 2, 4) == 5,
        || format!("model (0,2) N(4) = {n4}"),
    )?;
    Ok(format!(
        "{checks} (class, m) pairs agree; S3 N(3) = 16; model (0,2) N(4) = 5"
    ))
}

fn triviality() -> Outcome {
    let s3 = classify_file("s3_standard", 6)?;
    let quad = &s3.classes[0];
    let trivial: Vec<&str> = quad
        .presentation
        .generators
        .iter()
        .zip(&quad.trivial)
        .filter(|(_, &t)| t)
        .map(|(g, _)| g.name.as_str())
        .collect();
    ensure(
        trivial.len() == 2 && quad.presentation.generators.len() == 4,
        || format!("S3 trivial generators {trivial:?}"),
    )?;

    let one = classify_file("trivial", 6)?;
    let flags: Vec<bool> = one.line_bundles.iter().map(|l| l.trivial).collect();
    ensure(flags == [true, false], || {
        format!("trivial group line bundles {flags:?}")
    })?;

    let z4 = classify_file("z4_half_turn", 6)?;
    let sign = z4
        .classes
        .iter()
        .find(|c| c.chi.character.lifted() == [1, -1])
        .ok_or("Z4: no sign class")?;
    ensure(
        sign.case == Case::CaseA && sign.trivial == [false, false],
        || format!("Z4 sign class {:?} {:?}", sign.case, sign.trivial),
    )?;

    let q8 = classify_file("q8_over_d2", 6)?;
    let centre = q8
        .classes
        .iter()
        .find(|c| c.chi.character.lifted() == [1, -1])
        .ok_or("Q8: no sign-of-centre class")?;
    ensure(
        centre.case == Case::CaseB && centre.trivial == [false, false],
        || {
            format!(
                "Q8 sign-of-centre class {:?} {:?}",
                centre.case, centre.trivial
            )
        },
    )?;

    let z2 = classify_file("z2_reflection", 6)?;
    let count = z2.line_bundles.iter().filter(|l| l.trivial).count();
    ensure(z2.line_bundles.len() == 4 && count == 2, || {
        format!("Z2 reflection: {count} trivial line bundles")
    })?;

    Ok(format!(
        "S3 trivial {trivial:?}; trivial group (trivial, nontrivial); Z4 sign case A both nontrivial; \
         Q8 sign-of-centre case B both nontrivial; Z2 reflection 2 of 4 trivial"
    ))
}

fn complex_structures() -> Outcome {
    let want: [(i64, &[usize]); 3] = [(1, &[2]), (2, &[4, 5]), (3, &[8])];
    for (k, values) in want {
        let got = complex_structure_counts(k).map_err(|e| e.to_string())?;
        ensure(got.cs_values == values, || {
            format!("k = {k}: {:?}", got.cs_values)
        })?;
    }
    Ok("k=1 {2}, k=2 {4, 5}, k=3 {8}".into())
}

fn run_binary(path: &Path, json: bool) -> Result<Vec<u8>, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_circlebundles"));
    cmd.arg("classify").arg(path);
    if json {
        cmd.args(["--format", "json"]);
    }
    let out = cmd.output().map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("{} exited with {}", path.display(), out.status)
    })?;
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    let inputs = shipped_inputs();
    for path in &inputs {
        for json in [false, true] {
            let (a, b) = (run_binary(path, json)?, run_binary(path, json)?);
            ensure(a == b, || {
                format!("{} differs between runs (json: {json})", stem(path))
            })?;
        }
    }
    Ok(format!(
        "{} inputs, text and json, identical bytes",
        inputs.len()
    ))
}

fn extension_existence() -> Outcome {
    suite(extension_existence_suite(&catalog::fast_suite()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("character tables", character_tables),
        ("index-2 extension trichotomy", trichotomy),
        ("feasibility conformance", conformance),
        ("counting versus enumeration", counting),
        ("triviality", triviality),
        ("complex-structure counts", complex_structures),
        ("determinism", determinism),
        ("extension existence and uniqueness", extension_existence),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
