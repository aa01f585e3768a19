use circlebundles::verify::{run, Scope};

#[test]
fn fast_scope_passes() {
    let summary = run(Scope::Fast);
    for s in &summary.suites {
        println!("{s}");
    }
    assert!(summary.passed());
}

#[test]
fn full_scope_passes() {
    let summary = run(Scope::Full);
    for s in &summary.suites {
        println!("{s}");
    }
    for c in &summary.cells {
        println!("{c:?}");
    }
    assert!(summary.passed());
}
