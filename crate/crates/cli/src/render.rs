//! Plain-text renderings. JSON output is `serde_json::to_string_pretty` of the
//! same documents.

use std::fmt::Write;

use circlebundles::verify::CheckSummary;

use crate::document::{
    ChartableDocument, ClassInfo, EnumerationDocument, ReportDocument, TableDoc,
};

fn perm(images: &[usize]) -> String {
    let parts: Vec<String> = images.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

fn class_lines(out: &mut String, classes: &[ClassInfo]) {
    for (i, c) in classes.iter().enumerate() {
        let _ = writeln!(
            out,
            "  c{i}: size {}, order {}, representative {}",
            c.size,
            c.element_order,
            perm(&c.representative)
        );
    }
}

fn row(values: &[String]) -> String {
    format!("({})", values.join(", "))
}

pub fn report_text(doc: &ReportDocument) -> String {
    let h = &doc.header;
    let mut out = String::new();
    let _ = writeln!(out, "group: order {} on {} points", h.group_order, h.degree);
    let _ = writeln!(
        out,
        "action: {} image, n = {}, kernel order {}, offset {}",
        h.image_kind, h.image_n, h.kernel_order, h.offset
    );
    match h.stab_mu_order {
        Some(mu) => {
            let _ = writeln!(
                out,
                "stabilizers: K1 order {}, Kmu order {mu}",
                h.stab_one_order
            );
        }
        None => {
            let _ = writeln!(out, "stabilizers: K1 = H, no reflection point");
        }
    }
    let _ = writeln!(out, "\nkernel classes");
    class_lines(&mut out, &doc.h_classes);

    let _ = writeln!(out, "\nline bundles");
    for l in &doc.line_bundles {
        let _ = writeln!(
            out,
            "  {:<4} {}",
            l.name,
            if l.trivial { "trivial" } else { "nontrivial" }
        );
    }

    for c in &doc.classes {
        let _ = writeln!(out, "\nclass {}: chi = {}", c.chi_index, row(&c.chi_values));
        let _ = writeln!(out, "  type {}, real degree {}", c.chi_type, c.real_degree);
        let orbit: Vec<String> = c.orbit.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(
            out,
            "  orbit {{{}}}, isotropy order {}, {} image with n = {}",
            orbit.join(", "),
            c.isotropy_order,
            c.image_kind,
            c.image_n
        );
        let _ = writeln!(
            out,
            "  (e1, emu) = ({}, {}), case {}, gamma multiplicity {}",
            c.e_one, c.e_mu, c.case, c.gamma_multiplicity
        );
        let _ = writeln!(out, "  basis at 1");
        for b in &c.basis_one {
            let _ = writeln!(out, "    {:<3} x{} {}", b.label, b.mult, row(&b.values));
        }
        if let Some(mu) = &c.basis_mu {
            let _ = writeln!(out, "  basis at mu");
            for b in mu {
                let _ = writeln!(out, "    {:<3} x{} {}", b.label, b.mult, row(&b.values));
            }
        }
        let _ = writeln!(out, "  generators ({})", c.structure);
        for g in &c.generators {
            let mu = g
                .fiber_mu
                .as_deref()
                .map(|m| format!(", at mu {m}"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "    {:<4} rank {}, at 1 {}{mu}, {}",
                g.name,
                g.real_dim,
                g.fiber_one,
                if g.trivial { "trivial" } else { "nontrivial" }
            );
        }
        if !c.relations.is_empty() {
            let _ = writeln!(out, "  relations");
            for r in &c.relations {
                let _ = writeln!(out, "    {}", r.text);
            }
        }
        let counts: Vec<String> = c
            .counts
            .iter()
            .map(|x| format!("{}:{}", x.m, x.n))
            .collect();
        let _ = writeln!(out, "  N(m) {}", counts.join(" "));
    }

    if !doc.warnings.is_empty() {
        let _ = writeln!(out, "\nwarnings");
        for w in &doc.warnings {
            let _ = writeln!(out, "  {w}");
        }
    }
    out
}

fn table_text(out: &mut String, title: &str, t: &TableDoc) {
    let _ = writeln!(out, "{title}: order {}", t.order);
    class_lines(out, &t.classes);
    let _ = writeln!(out, "  complex irreducibles");
    for (i, c) in t.complex.iter().enumerate() {
        let _ = writeln!(
            out,
            "    X{i}: degree {}, indicator {:+}, {}",
            c.degree,
            c.indicator,
            row(&c.values)
        );
    }
    let _ = writeln!(out, "  real irreducibles");
    for (i, r) in t.real.iter().enumerate() {
        let _ = writeln!(
            out,
            "    U{i}: {} type, real degree {}, {}",
            r.kind,
            r.real_degree,
            row(&r.values)
        );
    }
}

pub fn chartable_text(doc: &ChartableDocument) -> String {
    let mut out = String::new();
    table_text(&mut out, "G", &doc.group);
    out.push('\n');
    table_text(&mut out, "H", &doc.kernel);
    out
}

pub fn enumeration_text(doc: &EnumerationDocument) -> String {
    let mut out = String::new();
    for c in &doc.classes {
        let _ = writeln!(
            out,
            "class {}: case {}, (e1, emu) = ({}, {}), gamma multiplicity {}",
            c.chi_index, c.case, c.e_one, c.e_mu, c.gamma_multiplicity
        );
        let _ = writeln!(
            out,
            "  {:>3} {:>8} {:>10} {:>10}",
            "m", "formula", "classes", "fibers"
        );
        for r in &c.rows {
            let _ = writeln!(
                out,
                "  {:>3} {:>8} {:>10} {:>10}{}",
                r.m,
                r.formula,
                r.classes,
                r.fiber_data,
                if r.agree { "" } else { "  MISMATCH" }
            );
        }
    }
    let _ = writeln!(
        out,
        "{}",
        if doc.agree {
            "all counts agree"
        } else {
            "counts disagree"
        }
    );
    out
}

pub fn check_text(summary: &CheckSummary) -> String {
    let mut out = String::new();
    for s in &summary.suites {
        let _ = writeln!(out, "{s}");
    }
    let _ = writeln!(out, "cells observed");
    for (kind, t, e1, emu) in &summary.cells {
        let _ = writeln!(out, "  {} {} ({e1}, {emu})", kind.name(), t.name());
    }
    out
}
