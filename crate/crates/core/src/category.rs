//! The Krull-Schmidt fusion datum and the object algebra over it.
//!
//! A [`CategoryData`] records a finite braided tensor category at the level
//! of direct-sum decompositions: indecomposable labels with composition
//! series, twist phases on simples, duals, a unit, and a fusion table. No
//! associativity or braiding isomorphisms are stored, only the identities
//! they induce on decompositions.
//!
//! A `CategoryData` is immutable after construction and free of interior
//! mutability, so it is `Send + Sync` and can be shared read-only across
//! concurrent workers. No operation mutates its inputs.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::object::{Label, ObjectSum};
use crate::phase::Phase;

/// One indecomposable object: its composition factors, simplicity and
/// projectivity flags, the simple it covers (if it is a projective cover of
/// a non-projective simple), its twist phase (simples only), and its dual.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndecompData {
    pub label: Label,
    /// Composition-factor multiplicities over simple labels.
    pub composition: BTreeMap<Label, u64>,
    pub is_simple: bool,
    pub is_projective: bool,
    /// Set iff this object is the projective cover of a non-projective
    /// simple. Projective simples are their own covers and leave this unset.
    pub cover_of: Option<Label>,
    /// `h mod 1` with twist scalar `e^{2*pi*i*h}`; present iff simple.
    pub twist: Option<Phase>,
    pub dual: Label,
}

impl IndecompData {
    /// A simple object with the given twist; self-dual unless overridden.
    pub fn simple(label: Label, twist: Phase, projective: bool) -> IndecompData {
        let mut composition = BTreeMap::new();
        composition.insert(label.clone(), 1);
        IndecompData {
            dual: label.clone(),
            label,
            composition,
            is_simple: true,
            is_projective: projective,
            cover_of: None,
            twist: Some(twist),
        }
    }

    /// A projective cover of `covers` with the given composition series.
    pub fn cover(label: Label, covers: Label, composition: BTreeMap<Label, u64>) -> IndecompData {
        IndecompData {
            dual: label.clone(),
            label,
            composition,
            is_simple: false,
            is_projective: true,
            cover_of: Some(covers),
            twist: None,
        }
    }

    /// Replaces the dual (labels are self-dual by default).
    pub fn with_dual(mut self, dual: Label) -> IndecompData {
        self.dual = dual;
        self
    }

    /// Total composition-series length.
    pub fn length(&self) -> u64 {
        self.composition.values().sum()
    }
}

/// How fusion of labels is evaluated.
///
/// Small atlases carry an explicit table. Product data fuse componentwise
/// on demand: the computation is a pure function of immutable inputs, so
/// repeated lookups always return the identical canonical [`ObjectSum`]
/// without any cache. Callers that need a full table (export, exhaustive
/// validation of a pair set) materialize one explicitly.
#[derive(Clone, Debug)]
pub enum FusionRule {
    /// Explicit entries; `(b, a)` may be omitted when `(a, b)` is present.
    Table(BTreeMap<(Label, Label), ObjectSum>),
    /// Componentwise fusion in a product datum: the first `split` parts of
    /// each label fuse in `left`, the rest in `right`, and the results
    /// expand bilinearly into flat tuple labels.
    Product {
        left: Arc<CategoryData>,
        right: Arc<CategoryData>,
        split: usize,
    },
}

/// A hom-space dimension, or the marker that the pair is outside the
/// engine's supported domain. `Unsupported` is a value, not a fault.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HomDim {
    Known(u64),
    Unsupported,
}

impl HomDim {
    fn add(self, rhs: HomDim) -> HomDim {
        match (self, rhs) {
            (HomDim::Known(a), HomDim::Known(b)) => HomDim::Known(a + b),
            _ => HomDim::Unsupported,
        }
    }

    fn mul_scalar(self, k: u64) -> HomDim {
        match self {
            HomDim::Known(a) => HomDim::Known(a * k),
            HomDim::Unsupported => HomDim::Unsupported,
        }
    }

    /// Componentwise product; a known zero factor annihilates regardless of
    /// the other side.
    fn mul(self, rhs: HomDim) -> HomDim {
        match (self, rhs) {
            (HomDim::Known(0), _) | (_, HomDim::Known(0)) => HomDim::Known(0),
            (HomDim::Known(a), HomDim::Known(b)) => HomDim::Known(a * b),
            _ => HomDim::Unsupported,
        }
    }
}

/// A validated finite fusion datum: labels, unit, fusion, composition
/// series, twist phases, duals, and recorded boolean facts.
#[derive(Clone, Debug)]
pub struct CategoryData {
    name: String,
    unit: Label,
    indecomposables: BTreeMap<Label, IndecompData>,
    fusion: FusionRule,
    facts: Vec<String>,
}

impl CategoryData {
    /// Builds a datum from parts. Rejects duplicate labels and a unit that
    /// is not among the indecomposables; everything else is left to
    /// [`crate::validate::validate`], which reports rather than aborts.
    pub fn new(
        name: &str,
        unit: Label,
        indecomposables: Vec<IndecompData>,
        fusion: FusionRule,
        facts: Vec<String>,
    ) -> Result<CategoryData> {
        let mut map = BTreeMap::new();
        for data in indecomposables {
            let label = data.label.clone();
            if map.insert(label.clone(), data).is_some() {
                return Err(Error::DuplicateLabel(label.name().to_string()));
            }
        }
        if !map.contains_key(&unit) {
            return Err(Error::UnknownLabel {
                category: name.to_string(),
                label: unit.name().to_string(),
            });
        }
        Ok(CategoryData {
            name: name.to_string(),
            unit,
            indecomposables: map,
            fusion,
            facts,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn unit(&self) -> &Label {
        &self.unit
    }

    pub fn facts(&self) -> &[String] {
        &self.facts
    }

    pub fn fusion_rule(&self) -> &FusionRule {
        &self.fusion
    }

    /// Number of indecomposable labels.
    pub fn len(&self) -> usize {
        self.indecomposables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecomposables.is_empty()
    }

    /// Labels in canonical order.
    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.indecomposables.keys()
    }

    /// Simple labels in canonical order.
    pub fn simple_labels(&self) -> impl Iterator<Item = &Label> {
        self.indecomposables
            .values()
            .filter(|d| d.is_simple)
            .map(|d| &d.label)
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.indecomposables.contains_key(label)
    }

    /// Structure record of one label.
    pub fn indecomposable(&self, label: &Label) -> Result<&IndecompData> {
        self.indecomposables
            .get(label)
            .ok_or_else(|| Error::UnknownLabel {
                category: self.name.clone(),
                label: label.name().to_string(),
            })
    }

    /// All structure records in canonical label order.
    pub fn indecomposables(&self) -> impl Iterator<Item = &IndecompData> {
        self.indecomposables.values()
    }

    /// Common arity of this datum's labels (taken from the unit).
    pub fn label_arity(&self) -> usize {
        self.unit.arity()
    }

    /// Fusion of two labels.
    pub fn fuse_labels(&self, a: &Label, b: &Label) -> Result<ObjectSum> {
        self.indecomposable(a)?;
        self.indecomposable(b)?;
        match &self.fusion {
            FusionRule::Table(table) => table
                .get(&(a.clone(), b.clone()))
                .or_else(|| table.get(&(b.clone(), a.clone())))
                .cloned()
                .ok_or_else(|| Error::MissingFusionEntry {
                    a: a.name().to_string(),
                    b: b.name().to_string(),
                }),
            FusionRule::Product { left, right, split } => {
                let (al, ar) = a.split(*split)?;
                let (bl, br) = b.split(*split)?;
                let ls = left.fuse_labels(&al, &bl)?;
                let rs = right.fuse_labels(&ar, &br)?;
                let mut out = ObjectSum::zero();
                for (ll, lm) in ls.terms() {
                    for (rl, rm) in rs.terms() {
                        out.insert(Label::concat(ll, rl), lm * rm);
                    }
                }
                Ok(out)
            }
        }
    }

    /// Bilinear extension of label fusion to direct sums; fusion with the
    /// zero object is zero.
    pub fn fuse(&self, a: &ObjectSum, b: &ObjectSum) -> Result<ObjectSum> {
        let mut out = ObjectSum::zero();
        for (la, ma) in a.terms() {
            for (lb, mb) in b.terms() {
                out += self.fuse_labels(la, lb)?.scaled(ma * mb);
            }
        }
        Ok(out)
    }

    /// Composition-factor image of a label: its composition series as a sum
    /// of simples.
    pub fn gr_label(&self, label: &Label) -> Result<ObjectSum> {
        let data = self.indecomposable(label)?;
        Ok(data
            .composition
            .iter()
            .map(|(l, m)| (l.clone(), *m))
            .collect())
    }

    /// Composition-factor image of a sum; total multiplicity of the result
    /// is the length of the argument.
    pub fn gr(&self, a: &ObjectSum) -> Result<ObjectSum> {
        let mut out = ObjectSum::zero();
        for (l, m) in a.terms() {
            out += self.gr_label(l)?.scaled(m);
        }
        Ok(out)
    }

    /// Composition-series length of a sum.
    pub fn length(&self, a: &ObjectSum) -> Result<u64> {
        let mut total = 0;
        for (l, m) in a.terms() {
            total += self.indecomposable(l)?.length() * m;
        }
        Ok(total)
    }

    /// Dual of one label.
    pub fn dual_label(&self, label: &Label) -> Result<Label> {
        Ok(self.indecomposable(label)?.dual.clone())
    }

    /// Term-by-term dual; an involution on valid data.
    pub fn dual(&self, a: &ObjectSum) -> Result<ObjectSum> {
        let mut out = ObjectSum::zero();
        for (l, m) in a.terms() {
            out.insert(self.dual_label(l)?, m);
        }
        Ok(out)
    }

    /// Twist phase `h mod 1` of a simple label.
    pub fn twist_phase(&self, label: &Label) -> Result<Phase> {
        let data = self.indecomposable(label)?;
        match data.twist {
            Some(p) if data.is_simple => Ok(p),
            _ => Err(Error::NotSimple(label.name().to_string())),
        }
    }

    /// True iff `fuse(s, dual(s))` is exactly the unit.
    pub fn is_invertible(&self, label: &Label) -> Result<bool> {
        let data = self.indecomposable(label)?;
        if !data.is_simple {
            return Err(Error::NotSimple(label.name().to_string()));
        }
        let product = self.fuse_labels(label, &data.dual)?;
        Ok(product.as_single_label() == Some(&self.unit))
    }

    /// Monodromy (double-braiding) phase of an invertible simple `g`
    /// against a simple `s`: the balancing identity gives the scalar
    /// `e^{2*pi*i*mu}` with `mu = twist(g x s) - twist(g) - twist(s)`.
    pub fn monodromy(&self, g: &Label, s: &Label) -> Result<Phase> {
        if !self.is_invertible(g)? {
            return Err(Error::NotInvertible(g.name().to_string()));
        }
        let ts = self.twist_phase(s)?;
        let tg = self.twist_phase(g)?;
        let product = self.fuse_labels(g, s)?;
        let gs = product
            .as_single_label()
            .ok_or_else(|| Error::NotSingleSimple {
                a: g.name().to_string(),
                b: s.name().to_string(),
            })?;
        let tgs = self.twist_phase(gs)?;
        Ok(tgs - tg - ts)
    }

    /// Hom-space dimension for the supported pairs, additive in both
    /// arguments; [`HomDim::Unsupported`] for anything outside the domain
    /// (for example hom between two projective covers).
    pub fn hom_dim(&self, a: &ObjectSum, b: &ObjectSum) -> Result<HomDim> {
        let mut total = HomDim::Known(0);
        for (la, ma) in a.terms() {
            for (lb, mb) in b.terms() {
                let h = self.hom_labels(la, lb)?.mul_scalar(ma * mb);
                total = total.add(h);
            }
        }
        Ok(total)
    }

    /// Hom dimension between two labels. Supported pairs: simple to simple
    /// (Kronecker delta), projective cover to simple (cover-of indicator),
    /// and componentwise products thereof in product data.
    pub fn hom_labels(&self, a: &Label, b: &Label) -> Result<HomDim> {
        let da = self.indecomposable(a)?;
        let db = self.indecomposable(b)?;
        if let FusionRule::Product { left, right, split } = &self.fusion {
            let (al, ar) = a.split(*split)?;
            let (bl, br) = b.split(*split)?;
            let hl = left.hom_labels(&al, &bl)?;
            let hr = right.hom_labels(&ar, &br)?;
            return Ok(hl.mul(hr));
        }
        if da.is_simple && db.is_simple {
            return Ok(HomDim::Known(u64::from(a == b)));
        }
        if db.is_simple {
            if let Some(covered) = &da.cover_of {
                return Ok(HomDim::Known(u64::from(covered == b)));
            }
        }
        Ok(HomDim::Unsupported)
    }

    /// Grothendieck exactness of the fusion table on one pair: the
    /// composition image of `fuse(a, b)` must equal the bilinear expansion
    /// over the composition factors of `a` and `b`.
    pub fn gr_consistent_pair(&self, a: &Label, b: &Label) -> Result<bool> {
        let lhs = self.gr(&self.fuse_labels(a, b)?)?;
        let mut rhs = ObjectSum::zero();
        for (s, ms) in self.gr_label(a)?.terms() {
            for (t, mt) in self.gr_label(b)?.terms() {
                rhs += self.gr(&self.fuse_labels(s, t)?)?.scaled(ms * mt);
            }
        }
        Ok(lhs == rhs)
    }

    /// Exact Grothendieck-exactness sweep over all label pairs. Intended
    /// for small atlases; large product data are covered by the sampled
    /// sweep in [`crate::validate::validate`].
    pub fn gr_consistency(&self) -> Result<bool> {
        let labels: Vec<&Label> = self.labels().collect();
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i..] {
                if !self.gr_consistent_pair(a, b)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Materializes the full fusion table as canonical unordered entries
    /// `(a, b)` with `a <= b`.
    pub fn materialized_fusion(&self) -> Result<Vec<((Label, Label), ObjectSum)>> {
        let labels: Vec<&Label> = self.labels().collect();
        let mut out = Vec::with_capacity(labels.len() * (labels.len() + 1) / 2);
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i..] {
                let sum = self.fuse_labels(a, b)?;
                out.push((((*a).clone(), (*b).clone()), sum));
            }
        }
        Ok(out)
    }

    /// Applies a bijective label renaming to every structure field,
    /// materializing the fusion table first. Labels absent from the map
    /// keep their names.
    pub fn relabel(&self, map: &BTreeMap<Label, Label>, new_name: &str) -> Result<CategoryData> {
        let rename = |l: &Label| -> Label { map.get(l).cloned().unwrap_or_else(|| l.clone()) };
        let mut seen = BTreeMap::new();
        for old in self.labels() {
            let new = rename(old);
            if let Some(prev) = seen.insert(new.clone(), old.clone()) {
                return Err(Error::Relabel(alloc::format!(
                    "`{}` and `{}` both map to `{}`",
                    prev.name(),
                    old.name(),
                    new.name()
                )));
            }
        }
        let table = self
            .materialized_fusion()?
            .into_iter()
            .map(|((a, b), sum)| {
                let renamed: ObjectSum = sum.terms().map(|(l, m)| (rename(l), m)).collect();
                let (a2, b2) = (rename(&a), rename(&b));
                if a2 <= b2 {
                    ((a2, b2), renamed)
                } else {
                    ((b2, a2), renamed)
                }
            })
            .collect();
        let indecomposables = self
            .indecomposables
            .values()
            .map(|d| IndecompData {
                label: rename(&d.label),
                composition: d.composition.iter().map(|(l, m)| (rename(l), *m)).collect(),
                is_simple: d.is_simple,
                is_projective: d.is_projective,
                cover_of: d.cover_of.as_ref().map(&rename),
                twist: d.twist,
                dual: rename(&d.dual),
            })
            .collect();
        CategoryData::new(
            new_name,
            rename(&self.unit),
            indecomposables,
            FusionRule::Table(table),
            self.facts.clone(),
        )
    }

    /// Cheap structural well-formedness: every referenced label resolves.
    /// Full invariant checking is [`crate::validate::validate`]'s job.
    pub fn check_wellformed(&self) -> Result<()> {
        for data in self.indecomposables.values() {
            for key in data.composition.keys() {
                self.indecomposable(key)?;
            }
            self.indecomposable(&data.dual)?;
            if let Some(c) = &data.cover_of {
                self.indecomposable(c)?;
            }
        }
        if let FusionRule::Table(table) = &self.fusion {
            for ((a, b), sum) in table {
                self.indecomposable(a)?;
                self.indecomposable(b)?;
                for (l, _) in sum.terms() {
                    self.indecomposable(l)?;
                }
            }
        }
        Ok(())
    }
}
