//! Canonical JSON category-file schema.
//!
//! Labels serialize as strings; tuple labels appearing as JSON values
//! serialize as arrays of component names, and as map keys they use the
//! canonical rendered form `(a,b)`. Rationals are `{num, den}` pairs in
//! lowest terms with `0 <= num < den` or `num = 0, den = 1`. Fusion
//! entries are stored once per unordered pair, `a <= b`; `(b, a)` is
//! implied. Export is deterministic: identical data produce identical
//! bytes.

use std::collections::BTreeMap;

use anyhow::{anyhow, Context};
use serde::{Deserialize, Serialize};

use fusion_atlas::{CategoryData, FusionRule, IndecompData, Label, ObjectSum, Phase};

/// A label as a JSON value: a bare string for atoms, an array of component
/// names for tuples.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelValue {
    Atom(String),
    Tuple(Vec<String>),
}

impl LabelValue {
    pub fn from_label(label: &Label) -> LabelValue {
        if label.arity() == 1 {
            LabelValue::Atom(label.name().to_string())
        } else {
            LabelValue::Tuple(label.parts().to_vec())
        }
    }

    pub fn to_label(&self) -> anyhow::Result<Label> {
        let label = match self {
            LabelValue::Atom(s) => Label::parse(s),
            LabelValue::Tuple(parts) => Label::tuple(parts.clone()),
        };
        label.map_err(|e| anyhow!("{e}"))
    }
}

/// An exact rational as an integer pair.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RationalPair {
    pub num: i64,
    pub den: i64,
}

impl RationalPair {
    pub fn from_phase(p: Phase) -> RationalPair {
        RationalPair {
            num: p.numer(),
            den: p.denom(),
        }
    }

    pub fn to_phase(self) -> anyhow::Result<Phase> {
        Phase::new(self.num, self.den).map_err(|e| anyhow!("{e}"))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IndecompEntry {
    pub label: LabelValue,
    pub simple: bool,
    pub projective: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover_of: Option<LabelValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<RationalPair>,
    pub dual: LabelValue,
    pub composition: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FusionEntry {
    pub a: LabelValue,
    pub b: LabelValue,
    pub result: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CategoryFile {
    pub name: String,
    pub unit: LabelValue,
    pub indecomposables: Vec<IndecompEntry>,
    pub fusion: Vec<FusionEntry>,
    pub facts: Vec<String>,
}

/// Renders a decomposition as a `{label: multiplicity}` map keyed by
/// canonical label names.
pub fn sum_to_map(sum: &ObjectSum) -> BTreeMap<String, u64> {
    sum.terms()
        .map(|(l, m)| (l.name().to_string(), m))
        .collect()
}

fn map_to_sum(map: &BTreeMap<String, u64>) -> anyhow::Result<ObjectSum> {
    let mut sum = ObjectSum::zero();
    for (name, mult) in map {
        let label = Label::parse(name).map_err(|e| anyhow!("{e}"))?;
        sum.insert(label, *mult);
    }
    Ok(sum)
}

/// Exports a category datum, materializing the full fusion table into
/// canonical unordered entries.
pub fn export(cat: &CategoryData) -> anyhow::Result<CategoryFile> {
    let indecomposables = cat
        .indecomposables()
        .map(|d| IndecompEntry {
            label: LabelValue::from_label(&d.label),
            simple: d.is_simple,
            projective: d.is_projective,
            cover_of: d.cover_of.as_ref().map(LabelValue::from_label),
            twist: d.twist.map(RationalPair::from_phase),
            dual: LabelValue::from_label(&d.dual),
            composition: d
                .composition
                .iter()
                .map(|(l, m)| (l.name().to_string(), *m))
                .collect(),
        })
        .collect();
    let fusion = cat
        .materialized_fusion()
        .map_err(|e| anyhow!("{e}"))?
        .into_iter()
        .map(|((a, b), result)| FusionEntry {
            a: LabelValue::from_label(&a),
            b: LabelValue::from_label(&b),
            result: sum_to_map(&result),
        })
        .collect();
    Ok(CategoryFile {
        name: cat.name().to_string(),
        unit: LabelValue::from_label(cat.unit()),
        indecomposables,
        fusion,
        facts: cat.facts().to_vec(),
    })
}

/// Rebuilds a category datum from a file. Structural problems (duplicate
/// or dangling labels) are reported here; deeper invariants are left to
/// the `verify` command.
pub fn import(file: &CategoryFile) -> anyhow::Result<CategoryData> {
    let mut indecomposables = Vec::with_capacity(file.indecomposables.len());
    for entry in &file.indecomposables {
        let label = entry.label.to_label()?;
        let composition = entry
            .composition
            .iter()
            .map(|(name, mult)| {
                Label::parse(name)
                    .map(|l| (l, *mult))
                    .map_err(|e| anyhow!("{e}"))
            })
            .collect::<anyhow::Result<BTreeMap<Label, u64>>>()?;
        indecomposables.push(IndecompData {
            label: label.clone(),
            composition,
            is_simple: entry.simple,
            is_projective: entry.projective,
            cover_of: entry.cover_of.as_ref().map(|l| l.to_label()).transpose()?,
            twist: entry.twist.map(RationalPair::to_phase).transpose()?,
            dual: entry.dual.to_label()?,
        });
    }
    let mut table = BTreeMap::new();
    for entry in &file.fusion {
        let a = entry.a.to_label()?;
        let b = entry.b.to_label()?;
        let result = map_to_sum(&entry.result)?;
        table.insert((a, b), result);
    }
    let cat = CategoryData::new(
        &file.name,
        file.unit.to_label()?,
        indecomposables,
        FusionRule::Table(table),
        file.facts.clone(),
    )
    .map_err(|e| anyhow!("{e}"))?;
    cat.check_wellformed().map_err(|e| anyhow!("{e}"))?;
    Ok(cat)
}

/// Deterministic pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Reads and imports a category file.
pub fn load_category(path: &std::path::Path) -> anyhow::Result<CategoryData> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: CategoryFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    import(&file)
}
