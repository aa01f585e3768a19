//! Serializable documents built from classifier output. Every value is an
//! integer or a string; optional sections serialize as `null`.

use std::sync::Arc;

use circlebundles::classifier::{
    count_classes, enumerate_classes, enumerate_fiber_data, BasicModule, SemigroupPresentation,
};
use circlebundles::{CharacterTable, FiniteGroup, Report, TableCache};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub header: Header,
    pub h_classes: Vec<ClassInfo>,
    pub line_bundles: Vec<LineBundleDoc>,
    pub classes: Vec<ClassDoc>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub group_order: usize,
    pub degree: usize,
    pub image_kind: String,
    pub image_n: usize,
    pub kernel_order: usize,
    pub offset: String,
    pub stab_one_order: usize,
    pub stab_mu_order: Option<usize>,
    pub m_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub size: usize,
    pub element_order: usize,
    pub representative: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBundleDoc {
    pub name: String,
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub chi_index: usize,
    pub chi_values: Vec<String>,
    pub chi_type: String,
    pub real_degree: usize,
    pub orbit: Vec<usize>,
    pub isotropy_order: usize,
    pub image_kind: String,
    pub image_n: usize,
    pub e_one: usize,
    pub e_mu: usize,
    pub case: String,
    pub gamma_multiplicity: usize,
    pub structure: String,
    pub basis_one: Vec<BasisDoc>,
    pub basis_mu: Option<Vec<BasisDoc>>,
    pub generators: Vec<GeneratorDoc>,
    pub relations: Vec<RelationDoc>,
    pub counts: Vec<CountDoc>,
}

/// A basic module at a special point, as a character of its stabilizer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDoc {
    pub label: String,
    pub mult: usize,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub name: String,
    pub fiber_mult: usize,
    pub real_dim: usize,
    pub at_one: Vec<usize>,
    pub at_mu: Option<Vec<usize>>,
    pub fiber_one: String,
    pub fiber_mu: Option<String>,
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountDoc {
    pub m: usize,
    pub n: usize,
}

fn class_infos(g: &FiniteGroup) -> Vec<ClassInfo> {
    g.classes()
        .iter()
        .map(|c| ClassInfo {
            size: c.size(),
            element_order: g.element_order(c.representative),
            representative: g.element(c.representative).one_based(),
        })
        .collect()
}

/// `2R+ + R-` style sums; `0` when every coefficient vanishes.
pub fn render_fiber(labels: &[String], coeffs: &[usize]) -> String {
    let parts: Vec<String> = labels
        .iter()
        .zip(coeffs)
        .filter(|(_, &c)| c > 0)
        .map(|(l, &c)| if c == 1 { l.clone() } else { format!("{c}{l}") })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn basis_docs(cache: &TableCache, basis: &[BasicModule]) -> Result<Vec<BasisDoc>, CliError> {
    basis
        .iter()
        .map(|b| {
            let table = cache.table(b.character.group())?;
            Ok(BasisDoc {
                label: b.label.to_string(),
                mult: b.mult,
                values: table.render_character(&b.character)?,
            })
        })
        .collect()
}

fn generator_docs(pres: &SemigroupPresentation, trivial: &[bool]) -> Vec<GeneratorDoc> {
    let one: Vec<String> = pres.basis_one.iter().map(|b| b.label.to_string()).collect();
    let mu: Option<Vec<String>> = pres
        .basis_mu
        .as_ref()
        .map(|b| b.iter().map(|x| x.label.to_string()).collect());
    pres.generators
        .iter()
        .zip(trivial)
        .map(|(g, &t)| GeneratorDoc {
            name: g.name.clone(),
            fiber_mult: g.fiber_mult,
            real_dim: g.real_dim,
            at_one: g.at_one.clone(),
            at_mu: g.at_mu.clone(),
            fiber_one: render_fiber(&one, &g.at_one),
            fiber_mu: match (&mu, &g.at_mu) {
                (Some(l), Some(c)) => Some(render_fiber(l, c)),
                _ => None,
            },
            trivial: t,
        })
        .collect()
}

pub fn structure_name(pres: &SemigroupPresentation) -> String {
    format!("{:?}", pres.structure).to_lowercase()
}

impl ReportDocument {
    pub fn from_report(report: &Report) -> Result<ReportDocument, CliError> {
        let action = &report.action;
        let g = report.group();
        let image = action.image();
        let header = Header {
            group_order: g.order(),
            degree: g.degree(),
            image_kind: image.kind.name().to_string(),
            image_n: image.n,
            kernel_order: action.kernel().order(),
            offset: action.offset().to_string(),
            stab_one_order: action.stab_one().order(),
            stab_mu_order: action.stab_mu().map(|s| s.order()),
            m_bound: report.m_bound,
        };
        let mut classes = Vec::new();
        for c in &report.classes {
            let pres = &c.presentation;
            let names: Vec<String> = pres.generators.iter().map(|g| g.name.clone()).collect();
            classes.push(ClassDoc {
                chi_index: c.chi_index,
                chi_values: report.h_table.render_character(&c.chi.character)?,
                chi_type: c.chi.kind.name().to_string(),
                real_degree: c.chi.real_degree,
                orbit: c.orbit.clone(),
                isotropy_order: c.isotropy.order(),
                image_kind: c.action.image().kind.name().to_string(),
                image_n: c.image_n(),
                e_one: c.e_one,
                e_mu: c.e_mu,
                case: c.case.name().to_string(),
                gamma_multiplicity: c.gamma_multiplicity(),
                structure: structure_name(pres),
                basis_one: basis_docs(&report.tables, &pres.basis_one)?,
                basis_mu: pres
                    .basis_mu
                    .as_ref()
                    .map(|b| basis_docs(&report.tables, b))
                    .transpose()?,
                generators: generator_docs(pres, &c.trivial),
                relations: pres
                    .relations
                    .iter()
                    .map(|r| RelationDoc {
                        lhs: r.lhs.clone(),
                        rhs: r.rhs.clone(),
                        text: format!(
                            "{} = {}",
                            render_fiber(&names, &r.lhs),
                            render_fiber(&names, &r.rhs)
                        ),
                    })
                    .collect(),
                counts: c
                    .counts
                    .iter()
                    .enumerate()
                    .map(|(i, &n)| CountDoc { m: i + 1, n })
                    .collect(),
            });
        }
        Ok(ReportDocument {
            header,
            h_classes: class_infos(action.kernel().group()),
            line_bundles: report
                .line_bundles
                .iter()
                .map(|l| LineBundleDoc {
                    name: l.name.clone(),
                    trivial: l.trivial,
                })
                .collect(),
            classes,
            warnings: report.warnings.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartableDocument {
    pub group: TableDoc,
    pub kernel: TableDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub order: usize,
    pub classes: Vec<ClassInfo>,
    pub complex: Vec<ComplexDoc>,
    pub real: Vec<RealDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub degree: usize,
    pub indicator: i8,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealDoc {
    pub kind: String,
    pub real_degree: usize,
    pub values: Vec<String>,
}

impl TableDoc {
    pub fn from_table(table: &CharacterTable) -> TableDoc {
        let g = table.group();
        let complex = table
            .characters()
            .iter()
            .enumerate()
            .map(|(i, c)| ComplexDoc {
                degree: c.degree,
                indicator: table.frobenius_schur(i),
                values: (0..g.class_count())
                    .map(|k| table.render_value(&c.values, &c.lift[k], k))
                    .collect(),
            })
            .collect();
        let real = table
            .real_irreducibles()
            .iter()
            .map(|r| RealDoc {
                kind: r.kind.name().to_string(),
                real_degree: r.real_degree,
                values: (0..g.class_count())
                    .map(|k| table.render_value(r.character.values(), &r.lift[k], k))
                    .collect(),
            })
            .collect();
        TableDoc {
            order: g.order(),
            classes: class_infos(g),
            complex,
            real,
        }
    }
}

impl ChartableDocument {
    pub fn build(
        cache: &TableCache,
        group: &Arc<FiniteGroup>,
        kernel: &Arc<FiniteGroup>,
    ) -> Result<Self, CliError> {
        let (g, h) = (cache.table(group)?, cache.table(kernel)?);
        Ok(ChartableDocument {
            group: TableDoc::from_table(&g),
            kernel: TableDoc::from_table(&h),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationDocument {
    pub classes: Vec<EnumerationClass>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationClass {
    pub chi_index: usize,
    pub case: String,
    pub e_one: usize,
    pub e_mu: usize,
    pub gamma_multiplicity: usize,
    pub rows: Vec<EnumerationRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRow {
    pub m: usize,
    pub formula: usize,
    pub classes: usize,
    pub fiber_data: usize,
    pub agree: bool,
}

impl EnumerationDocument {
    /// Compares the closed-form count with brute-force enumeration of
    /// presentation elements for every `1 ≤ m ≤ bound`.
    pub fn build(report: &Report, bound: usize) -> EnumerationDocument {
        let classes: Vec<EnumerationClass> = report
            .classes
            .iter()
            .map(|c| {
                let gamma = c.gamma_multiplicity();
                let rows = (1..=bound)
                    .map(|m| {
                        let formula = count_classes(c.case, c.e_one, c.e_mu, m);
                        let classes = enumerate_classes(&c.presentation, m);
                        let fiber_data = enumerate_fiber_data(&c.presentation, m);
                        EnumerationRow {
                            m,
                            formula,
                            classes,
                            fiber_data,
                            agree: formula == classes && formula == fiber_data * gamma,
                        }
                    })
                    .collect();
                EnumerationClass {
                    chi_index: c.chi_index,
                    case: c.case.name().to_string(),
                    e_one: c.e_one,
                    e_mu: c.e_mu,
                    gamma_multiplicity: gamma,
                    rows,
                }
            })
            .collect();
        let agree = classes.iter().all(|c| c.rows.iter().all(|r| r.agree));
        EnumerationDocument { classes, agree }
    }
}
