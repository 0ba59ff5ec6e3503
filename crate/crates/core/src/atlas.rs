//! Shipped category data: the W_2 triplet atlas and the even symplectic
//! fermion pipeline built on top of it.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::category::{CategoryData, FusionRule, IndecompData};
use crate::codes::{admissible, AdmissibilityReport, BinaryCode};
use crate::deligne::power;
use crate::error::{Error, Result};
use crate::extension::{build_extension, current_family, ExtensionCategory};
use crate::object::{Label, ObjectSum};
use crate::phase::{Phase, Rational};

/// Largest `d` for which the full `SF_d^+` extension is built; beyond it
/// only admissibility reporting is offered.
pub const DEFAULT_BUILD_BOUND: usize = 4;

fn sign_name(kind: char, index: usize, sign: i8) -> String {
    format!("{}_{}^{}", kind, index, if sign > 0 { '+' } else { '-' })
}

/// The six-label fusion atlas of the triplet algebra W_2.
///
/// Simples `X_1^+` (the unit), `X_1^-`, and the projective `X_2^+`,
/// `X_2^-`; projective covers `P_1^+`, `P_1^-` of length four with two
/// composition factors of each `X_1` sign. All labels are self-dual. Twist
/// phases come from the lowest conformal weights `h_i^e = (i-3)(i-3+2e)/8`
/// reduced modulo 1, so `X_1^-` (weight 1) carries phase 0 like the unit,
/// while `X_2^+` and `X_2^-` carry 7/8 and 3/8.
pub fn w2() -> CategoryData {
    let x1 = |s: i8| Label::atom(&sign_name('X', 1, s)).unwrap();
    let x2 = |s: i8| Label::atom(&sign_name('X', 2, s)).unwrap();
    let p1 = |s: i8| Label::atom(&sign_name('P', 1, s)).unwrap();

    let mut indecomposables = Vec::new();
    for s in [1i8, -1] {
        // h_1^+ = 0 and h_1^- = 1 both reduce to phase 0.
        indecomposables.push(IndecompData::simple(x1(s), Phase::zero(), false));
    }
    indecomposables.push(IndecompData::simple(x2(1), Phase::new(7, 8).unwrap(), true));
    indecomposables.push(IndecompData::simple(
        x2(-1),
        Phase::new(3, 8).unwrap(),
        true,
    ));
    for s in [1i8, -1] {
        let mut composition = BTreeMap::new();
        composition.insert(x1(1), 2);
        composition.insert(x1(-1), 2);
        indecomposables.push(IndecompData::cover(p1(s), x1(s), composition));
    }

    let mut table = BTreeMap::new();
    let mut insert = |a: Label, b: Label, sum: ObjectSum| {
        let key = if a <= b { (a, b) } else { (b, a) };
        table.insert(key, sum);
    };
    let pair = |l: Label, m: u64, r: Label, n: u64| -> ObjectSum {
        let mut sum = ObjectSum::zero();
        sum.insert(l, m);
        sum.insert(r, n);
        sum
    };
    for a in [1i8, -1] {
        for b in [1i8, -1] {
            insert(x1(a), x1(b), ObjectSum::from_label(x1(a * b)));
            insert(x1(a), x2(b), ObjectSum::from_label(x2(a * b)));
            insert(x1(a), p1(b), ObjectSum::from_label(p1(a * b)));
            insert(x2(a), x2(b), ObjectSum::from_label(p1(a * b)));
            insert(x2(a), p1(b), pair(x2(1), 2, x2(-1), 2));
            insert(p1(a), p1(b), pair(p1(1), 2, p1(-1), 2));
        }
    }

    CategoryData::new(
        "W_2",
        x1(1),
        indecomposables,
        FusionRule::Table(table),
        vec![
            String::from("rigid"),
            String::from("non-semisimple modular tensor category"),
        ],
    )
    .expect("the W_2 atlas is well-formed")
}

/// Lowest conformal weight `(3p - 2)/4` of the simple current `X_1^-` over
/// the triplet algebra `W_p`.
pub fn x1_minus_weight(p: i64) -> Result<Rational> {
    if p < 2 {
        return Err(Error::BadParameter(format!("triplet parameter {p} < 2")));
    }
    Ok(Rational::new(3 * p - 2, 4))
}

/// The canonical renaming of the `SF_d^+` extension labels: the orbit of
/// `X_i^e x X_i^+ x ... x X_i^+` becomes `X_i^e`, and the orbit of
/// `P_1^e x P_1^+ x ... x P_1^+` becomes `P_1^e`.
fn sf_rename_map(ext: &ExtensionCategory, d: usize) -> Result<BTreeMap<Label, Label>> {
    let mut map = BTreeMap::new();
    let mut assign = |lead: String, rest: String, target: &str| -> Result<()> {
        let mut parts = vec![lead];
        parts.extend(core::iter::repeat_n(rest, d - 1));
        let tuple = Label::tuple(parts)?;
        let ext_label = ext
            .ext_label_of(&tuple)
            .ok_or_else(|| Error::DomainEscape(format!("{tuple} has no induced label")))?;
        map.insert(ext_label.clone(), Label::atom(target)?);
        Ok(())
    };
    for i in [1usize, 2] {
        for s in [1i8, -1] {
            assign(
                sign_name('X', i, s),
                sign_name('X', i, 1),
                &sign_name('X', i, s),
            )?;
        }
    }
    for s in [1i8, -1] {
        assign(
            sign_name('P', 1, s),
            sign_name('P', 1, 1),
            &sign_name('P', 1, s),
        )?;
    }
    Ok(map)
}

/// The even symplectic fermion extension `SF_d^+`: the simple-current
/// extension of the `d`-th power of W_2 along the even code `E(d)`, with
/// labels renamed to `X_1^±`, `X_2^±`, `P_1^±`.
pub fn sf_plus(d: usize) -> Result<ExtensionCategory> {
    sf_plus_bounded(d, DEFAULT_BUILD_BOUND)
}

/// [`sf_plus`] with an explicit build bound.
pub fn sf_plus_bounded(d: usize, bound: usize) -> Result<ExtensionCategory> {
    if d == 0 {
        return Err(Error::ZeroPower);
    }
    if d > bound {
        return Err(Error::OverBound {
            what: "symplectic fermion build dimension",
            requested: d,
            limit: bound,
        });
    }
    let base = power(&w2(), d)?;
    let family = current_family(&base, &BinaryCode::even(d)?)?;
    let ext = build_extension(family)?;
    let map = sf_rename_map(&ext, d)?;
    ext.rename(&map, &format!("SF_{d}^+"))
}

/// Outcome of the general extension pipeline: a full extension datum when
/// the fusion data exists, otherwise the admissibility report alone.
#[derive(Clone, Debug)]
pub enum WCodeOutcome {
    /// All `p_i = 2`, the code is admissible, and the build bound allows
    /// the full extension.
    Extension(alloc::boxed::Box<ExtensionCategory>),
    /// Admissibility verdict only; `note` records why no extension was
    /// built (inadmissible, `p != 2` factors, or over the build bound).
    Report {
        admissibility: AdmissibilityReport,
        facts: Vec<String>,
        note: String,
    },
}

/// The extension algebra `W^C_{p_1..p_d}` pipeline. Full fusion data is
/// shipped only for the all-2 case; for general `p` the pipeline stops
/// after admissibility, attaching the recorded modularity fact when the
/// conditions hold.
pub fn w_code(p: &[i64], code: &BinaryCode) -> Result<WCodeOutcome> {
    let report = admissible(code, p)?;
    let all_two = p.iter().all(|&pi| pi == 2);
    if report.admissible() && all_two && code.dimension() <= DEFAULT_BUILD_BOUND {
        let base = power(&w2(), code.dimension())?;
        let family = current_family(&base, code)?;
        let ext = build_extension(family)?;
        return Ok(WCodeOutcome::Extension(alloc::boxed::Box::new(ext)));
    }
    let mut facts = Vec::new();
    let note = if !report.admissible() {
        String::from("inadmissible: no extension algebra exists")
    } else {
        facts.push(String::from("non-semisimple modular tensor category"));
        if all_two {
            format!("admissible, but d exceeds the build bound {DEFAULT_BUILD_BOUND}")
        } else {
            String::from("admissible; general-p fusion data unavailable")
        }
    };
    Ok(WCodeOutcome::Report {
        admissibility: report,
        facts,
        note,
    })
}

/// A keyed atlas entry with provenance strings, as exported by the CLI.
#[derive(Clone, Debug)]
pub struct AtlasEntry {
    pub key: String,
    pub provenance: Vec<String>,
    pub datum: AtlasDatum,
}

/// The datum carried by an [`AtlasEntry`].
#[derive(Clone, Debug)]
pub enum AtlasDatum {
    Category(CategoryData),
    Extension(alloc::boxed::Box<ExtensionCategory>),
}

impl AtlasEntry {
    /// The category data of the entry (the extension's atlas for extension
    /// entries).
    pub fn category(&self) -> &CategoryData {
        match &self.datum {
            AtlasDatum::Category(c) => c,
            AtlasDatum::Extension(e) => e.category(),
        }
    }
}

/// Looks up a shipped atlas entry: `w2`, `sf_plus:D`, or `power:D`.
pub fn atlas_entry(key: &str) -> Result<AtlasEntry> {
    if key == "w2" {
        return Ok(AtlasEntry {
            key: key.to_string(),
            provenance: vec![String::from("triplet algebra fusion atlas")],
            datum: AtlasDatum::Category(w2()),
        });
    }
    if let Some(d) = key.strip_prefix("sf_plus:") {
        let d: usize = d
            .parse()
            .map_err(|_| Error::BadParameter(format!("bad atlas key `{key}`")))?;
        return Ok(AtlasEntry {
            key: key.to_string(),
            provenance: vec![format!(
                "even symplectic fermion extension over the triplet atlas, d={d}"
            )],
            datum: AtlasDatum::Extension(alloc::boxed::Box::new(sf_plus(d)?)),
        });
    }
    if let Some(d) = key.strip_prefix("power:") {
        let d: usize = d
            .parse()
            .map_err(|_| Error::BadParameter(format!("bad atlas key `{key}`")))?;
        return Ok(AtlasEntry {
            key: key.to_string(),
            provenance: vec![format!("tensor power of the triplet atlas, d={d}")],
            datum: AtlasDatum::Category(power(&w2(), d)?),
        });
    }
    Err(Error::BadParameter(format!("unknown atlas key `{key}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::{validate, ValidationOptions};

    fn lab(s: &str) -> Label {
        Label::parse(s).unwrap()
    }

    #[test]
    fn w2_fusion_list() {
        let cat = w2();
        let fused = cat.fuse_labels(&lab("X_1^-"), &lab("X_2^+")).unwrap();
        assert_eq!(fused.as_single_label(), Some(&lab("X_2^-")));
        assert_eq!(
            cat.twist_phase(&lab("X_2^-")).unwrap(),
            Phase::new(3, 8).unwrap()
        );
        for s in ["X_2^+", "X_2^-"] {
            assert!(cat.indecomposable(&lab(s)).unwrap().is_projective);
        }
        for (p, x) in [("P_1^+", "X_1^+"), ("P_1^-", "X_1^-")] {
            assert_eq!(cat.indecomposable(&lab(p)).unwrap().cover_of, Some(lab(x)));
        }
        for l in cat.labels() {
            assert_eq!(cat.dual_label(l).unwrap(), l.clone());
        }
    }

    #[test]
    fn w2_validates() {
        let report = validate(&w2(), &ValidationOptions::default());
        assert!(report.passed());
    }

    #[test]
    fn x1_minus_weights() {
        assert_eq!(x1_minus_weight(2).unwrap(), Rational::from_integer(1));
        assert_eq!(x1_minus_weight(6).unwrap(), Rational::from_integer(4));
        assert_eq!(x1_minus_weight(3).unwrap(), Rational::new(7, 4));
        assert!(x1_minus_weight(1).is_err());
        // Reduced mod 1, the p = 2 weight matches the stored twist phase.
        assert_eq!(
            Phase::from_rational(x1_minus_weight(2).unwrap()),
            w2().twist_phase(&lab("X_1^-")).unwrap()
        );
    }

    #[test]
    fn sf1_is_w2_up_to_renaming() {
        let sf1 = sf_plus(1).unwrap();
        let cat = sf1.category();
        let base = w2();
        assert_eq!(cat.len(), base.len());
        assert_eq!(cat.unit(), base.unit());
        for d in base.indecomposables() {
            let e = cat.indecomposable(&d.label).unwrap();
            assert_eq!(e, d, "{}", d.label);
        }
        for ((a, b), sum) in base.materialized_fusion().unwrap() {
            assert_eq!(cat.fuse_labels(&a, &b).unwrap(), sum);
        }
    }

    #[test]
    fn sf2_renamed_fusion() {
        let sf2 = sf_plus(2).unwrap();
        let cat = sf2.category();
        assert_eq!(cat.name(), "SF_2^+");
        let fused = cat.fuse_labels(&lab("P_1^+"), &lab("P_1^-")).unwrap();
        assert_eq!(alloc::format!("{fused}"), "8*P_1^+ + 8*P_1^-");
        let fused = cat.fuse_labels(&lab("X_2^-"), &lab("X_2^-")).unwrap();
        assert_eq!(fused.as_single_label(), Some(&lab("P_1^+")));
    }

    #[test]
    fn sf3_cover_length() {
        let sf3 = sf_plus(3).unwrap();
        let p = sf3.category().indecomposable(&lab("P_1^+")).unwrap();
        assert_eq!(p.length(), 64);
        assert_eq!(p.cover_of, Some(lab("X_1^+")));
    }

    #[test]
    fn sf_build_bound() {
        assert!(matches!(sf_plus(5), Err(Error::OverBound { .. })));
        assert!(matches!(sf_plus(0), Err(Error::ZeroPower)));
    }

    #[test]
    fn w_code_outcomes() {
        let e2 = BinaryCode::even(2).unwrap();
        match w_code(&[2, 2], &e2).unwrap() {
            WCodeOutcome::Extension(ext) => {
                assert_eq!(ext.category().len(), 6);
                assert_eq!(ext.alg_dimension(), 2);
            }
            WCodeOutcome::Report { .. } => panic!("expected a full extension"),
        }

        match w_code(&[2, 4], &e2).unwrap() {
            WCodeOutcome::Report {
                admissibility,
                facts,
                ..
            } => {
                assert!(!admissibility.four_div);
                assert!(facts.is_empty());
            }
            WCodeOutcome::Extension(_) => panic!("expected a report"),
        }

        // Admissible but with general p: report only, fact attached.
        match w_code(&[2, 6], &e2).unwrap() {
            WCodeOutcome::Report {
                admissibility,
                facts,
                note,
            } => {
                assert!(admissibility.admissible());
                assert_eq!(facts.len(), 1);
                assert!(note.contains("general-p"));
            }
            WCodeOutcome::Extension(_) => panic!("expected a report"),
        }

        let single = BinaryCode::span(4, &[[1, 2, 3, 4].into_iter().collect()]).unwrap();
        match w_code(&[4, 4, 4, 4], &single).unwrap() {
            WCodeOutcome::Report { admissibility, .. } => {
                assert!(admissibility.admissible());
            }
            WCodeOutcome::Extension(_) => panic!("expected a report"),
        }

        assert!(matches!(
            w_code(&[2], &e2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn atlas_entries_resolve() {
        assert_eq!(atlas_entry("w2").unwrap().category().len(), 6);
        assert_eq!(atlas_entry("sf_plus:2").unwrap().category().len(), 6);
        assert_eq!(atlas_entry("power:2").unwrap().category().len(), 36);
        assert!(atlas_entry("nosuch").is_err());
    }
}
