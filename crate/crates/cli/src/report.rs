//! JSON and text renderings of code, admissibility, extension, and
//! verification reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::anyhow;
use serde::Serialize;

use fusion_atlas::codes::{AdmissibilityReport, BinaryCode};
use fusion_atlas::extension::ExtensionCategory;
use fusion_atlas::verify::VerifyReport;
use fusion_atlas::HomDim;

use crate::schema::{sum_to_map, LabelValue, RationalPair};

#[derive(Serialize)]
pub struct CodeJson {
    pub d: usize,
    pub generators: Vec<Vec<usize>>,
    pub codewords: Vec<Vec<usize>>,
}

impl CodeJson {
    pub fn from_code(code: &BinaryCode) -> CodeJson {
        CodeJson {
            d: code.dimension(),
            generators: code.generators(),
            codewords: code.codewords(),
        }
    }
}

#[derive(Serialize)]
pub struct AdmissibilityJson {
    pub even: bool,
    pub four_div: bool,
    pub integral_weights: bool,
    pub admissible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<ViolationJson>,
}

#[derive(Serialize)]
pub struct ViolationJson {
    pub check: String,
    pub codeword: Vec<usize>,
}

impl AdmissibilityJson {
    pub fn from_report(report: &AdmissibilityReport) -> AdmissibilityJson {
        AdmissibilityJson {
            even: report.even,
            four_div: report.four_div,
            integral_weights: report.integral_weights,
            admissible: report.admissible(),
            violation: report
                .violation
                .as_ref()
                .map(|(check, word)| ViolationJson {
                    check: check.name().to_string(),
                    codeword: word.clone(),
                }),
        }
    }
}

pub fn admissibility_text(p: &[i64], code: &BinaryCode, report: &AdmissibilityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "code: d={} codewords={:?}",
        code.dimension(),
        code.codewords()
    );
    let _ = writeln!(out, "p: {p:?}");
    let _ = writeln!(out, "even: {}", report.even);
    let _ = writeln!(out, "four-divisibility: {}", report.four_div);
    let _ = writeln!(out, "integral-weights: {}", report.integral_weights);
    let _ = writeln!(out, "verdict: {}", report.summary());
    out
}

#[derive(Serialize)]
pub struct ClauseJson {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub passed: bool,
    pub clauses: Vec<ClauseJson>,
}

impl VerifyJson {
    pub fn from_report(report: &VerifyReport) -> VerifyJson {
        VerifyJson {
            target: report.target.clone(),
            seed: report.seed,
            passed: report.passed(),
            clauses: report
                .clauses
                .iter()
                .map(|c| ClauseJson {
                    name: c.name.clone(),
                    expected: c.expected.clone(),
                    computed: c.computed.clone(),
                    pass: c.pass,
                })
                .collect(),
        }
    }
}

pub fn verify_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "target: {}", report.target);
    if let Some(seed) = report.seed {
        let _ = writeln!(out, "seed: {seed}");
    }
    for line in report.lines() {
        let _ = writeln!(out, "{line}");
    }
    let _ = writeln!(
        out,
        "result: {} ({} clauses)",
        if report.passed() { "PASS" } else { "FAIL" },
        report.clauses.len()
    );
    out
}

#[derive(Serialize)]
pub struct ExtensionSimpleJson {
    pub label: LabelValue,
    pub twist: RationalPair,
    pub orbit: Vec<LabelValue>,
}

#[derive(Serialize)]
pub struct ExtensionCoverJson {
    pub label: LabelValue,
    pub cover_of: LabelValue,
    pub length: u64,
    pub factors: BTreeMap<String, u64>,
}

#[derive(Serialize)]
pub struct ExtensionFusionJson {
    pub a: LabelValue,
    pub b: LabelValue,
    pub result: BTreeMap<String, u64>,
}

#[derive(Serialize)]
pub struct ExtensionHomJson {
    pub a: LabelValue,
    pub b: LabelValue,
    pub dim: String,
}

#[derive(Serialize)]
pub struct ExtensionReportJson {
    pub name: String,
    pub base: String,
    pub code: CodeJson,
    pub alg_dimension: u64,
    pub simples: Vec<ExtensionSimpleJson>,
    pub projective_covers: Vec<ExtensionCoverJson>,
    pub fusion: Vec<ExtensionFusionJson>,
    pub hom: Vec<ExtensionHomJson>,
    pub verification: VerifyJson,
}

/// Assembles the full extension report: simples with twists, covers with
/// lengths and factor counts, the fusion and Frobenius hom tables, and the
/// verification block.
pub fn extension_report(ext: &ExtensionCategory) -> anyhow::Result<ExtensionReportJson> {
    let cat = ext.category();
    let family = ext.family();
    let err = |e: fusion_atlas::Error| anyhow!("{e}");

    let mut simples = Vec::new();
    let mut covers = Vec::new();
    for data in cat.indecomposables() {
        if data.is_simple {
            let rep = ext.rep_of(&data.label).map_err(err)?;
            let orbit = family.orbit(rep).map_err(err)?;
            simples.push(ExtensionSimpleJson {
                label: LabelValue::from_label(&data.label),
                twist: RationalPair::from_phase(data.twist.expect("simples carry twists")),
                orbit: orbit.iter().map(LabelValue::from_label).collect(),
            });
        }
        if let Some(covered) = &data.cover_of {
            covers.push(ExtensionCoverJson {
                label: LabelValue::from_label(&data.label),
                cover_of: LabelValue::from_label(covered),
                length: data.length(),
                factors: data
                    .composition
                    .iter()
                    .map(|(l, m)| (l.name().to_string(), *m))
                    .collect(),
            });
        }
    }

    let fusion = cat
        .materialized_fusion()
        .map_err(err)?
        .into_iter()
        .map(|((a, b), sum)| ExtensionFusionJson {
            a: LabelValue::from_label(&a),
            b: LabelValue::from_label(&b),
            result: sum_to_map(&sum),
        })
        .collect();

    // Frobenius hom dimensions from every cover and simple into every
    // simple; unsupported pairs are reported as such.
    let mut hom = Vec::new();
    let sources: Vec<_> = cat
        .indecomposables()
        .filter(|d| d.is_simple || d.cover_of.is_some())
        .map(|d| d.label.clone())
        .collect();
    for a in &sources {
        for b in cat.simple_labels() {
            let dim = ext
                .frobenius_hom(
                    &fusion_atlas::ObjectSum::from_label(a.clone()),
                    &fusion_atlas::ObjectSum::from_label(b.clone()),
                )
                .map_err(err)?;
            hom.push(ExtensionHomJson {
                a: LabelValue::from_label(a),
                b: LabelValue::from_label(b),
                dim: match dim {
                    HomDim::Known(k) => k.to_string(),
                    HomDim::Unsupported => String::from("unsupported"),
                },
            });
        }
    }

    let verification = fusion_atlas::verify::verify_extension(ext).map_err(err)?;
    Ok(ExtensionReportJson {
        name: cat.name().to_string(),
        base: family.base().name().to_string(),
        code: CodeJson::from_code(family.code()),
        alg_dimension: ext.alg_dimension(),
        simples,
        projective_covers: covers,
        fusion,
        hom,
        verification: VerifyJson::from_report(&verification),
    })
}

pub fn extension_text(report: &ExtensionReportJson) -> String {
    let render = |l: &LabelValue| match l {
        LabelValue::Atom(s) => s.clone(),
        LabelValue::Tuple(parts) => format!("({})", parts.join(",")),
    };
    let render_map = |m: &BTreeMap<String, u64>| {
        if m.is_empty() {
            return String::from("0");
        }
        m.iter()
            .map(|(l, k)| {
                if *k == 1 {
                    l.clone()
                } else {
                    format!("{k}*{l}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    let mut out = String::new();
    let _ = writeln!(out, "extension: {}", report.name);
    let _ = writeln!(out, "base: {}", report.base);
    let _ = writeln!(
        out,
        "code: d={} codewords={:?}",
        report.code.d, report.code.codewords
    );
    let _ = writeln!(out, "algebra dimension: {}", report.alg_dimension);
    let _ = writeln!(out, "simples:");
    for s in &report.simples {
        let _ = writeln!(
            out,
            "  {}  twist={}/{}  orbit=[{}]",
            render(&s.label),
            s.twist.num,
            s.twist.den,
            s.orbit.iter().map(&render).collect::<Vec<_>>().join(", ")
        );
    }
    let _ = writeln!(out, "projective covers:");
    for c in &report.projective_covers {
        let _ = writeln!(
            out,
            "  {}  covers={}  length={}  factors: {}",
            render(&c.label),
            render(&c.cover_of),
            c.length,
            render_map(&c.factors)
        );
    }
    let _ = writeln!(out, "fusion:");
    for f in &report.fusion {
        let _ = writeln!(
            out,
            "  {} * {} = {}",
            render(&f.a),
            render(&f.b),
            render_map(&f.result)
        );
    }
    let _ = writeln!(out, "hom:");
    for h in &report.hom {
        let _ = writeln!(out, "  hom({}, {}) = {}", render(&h.a), render(&h.b), h.dim);
    }
    let _ = writeln!(out, "verification:");
    for c in &report.verification.clauses {
        let _ = writeln!(
            out,
            "  {}: {} expected={} computed={}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.expected,
            c.computed
        );
    }
    let _ = writeln!(
        out,
        "result: {}",
        if report.verification.passed {
            "PASS"
        } else {
            "FAIL"
        }
    );
    out
}
