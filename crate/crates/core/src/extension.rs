//! Simple-current extensions indexed by binary linear codes.
//!
//! Given the `d`-th tensor power of the W_2 atlas and an even binary linear
//! code `C`, the family of invertible simples `g_S` (the tuple with `X_1^-`
//! in the coordinates of `S` and `X_1^+` elsewhere) spans an extension
//! algebra `A = sum_{S in C} g_S`. Induction `F(W) = A x W` is defined on
//! *local* objects: those whose double braiding with every `g_S` is
//! trivial. Two base objects induce isomorphic extension objects iff they
//! lie in the same code orbit, so induced objects are identified by the
//! lexicographic minimum of their orbit.
//!
//! Locality of a non-simple object is defined as locality of all its
//! composition factors. Monodromy with an invertible object acts on an
//! indecomposable by the common scalar of its factors, so this criterion
//! agrees with every instance treated in the shipped families; it is the
//! module's single extrapolation beyond simples and projective covers.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::atlas;
use crate::category::{CategoryData, FusionRule, HomDim, IndecompData};
use crate::codes::{admissible, BinaryCode};
use crate::deligne::power;
use crate::error::{Error, Result};
use crate::object::{Label, ObjectSum};
use crate::validate::{validate, ValidationOptions};

/// Bound on the label count of a built extension datum.
pub const DEFAULT_EXTENSION_LABEL_BOUND: usize = 512;

/// A family of invertible simple currents `g_S` indexed by the codewords of
/// a binary linear code, over a fixed base datum.
#[derive(Clone, Debug)]
pub struct CurrentFamily {
    base: Arc<CategoryData>,
    code: BinaryCode,
    /// Codeword mask -> invertible simple label.
    currents: BTreeMap<u32, Label>,
}

/// Builds the current family `g_S` over the `d`-th power of the W_2 atlas.
/// Requires the code to be admissible for `p = (2,...,2)` and the base to
/// carry exactly the structure of `power(w2(), d)`.
pub fn current_family(base: &CategoryData, code: &BinaryCode) -> Result<CurrentFamily> {
    let d = code.dimension();
    let p = vec![2i64; d];
    let report = admissible(code, &p)?;
    if !report.admissible() {
        return Err(Error::InadmissibleCode(report.summary()));
    }

    let expected = power(&atlas::w2(), d)?;
    if base.label_arity() != d {
        return Err(Error::WrongBase(format!(
            "labels have arity {}, expected {d}",
            base.label_arity()
        )));
    }
    if base.len() != expected.len() {
        return Err(Error::WrongBase(format!(
            "{} labels, expected {}",
            base.len(),
            expected.len()
        )));
    }
    for e in expected.indecomposables() {
        match base.indecomposable(&e.label) {
            Ok(b) if b == e => {}
            Ok(_) => {
                return Err(Error::WrongBase(format!(
                    "structure of {} differs from the W_2 power datum",
                    e.label
                )))
            }
            Err(_) => {
                return Err(Error::WrongBase(format!(
                    "missing label {} of the W_2 power datum",
                    e.label
                )))
            }
        }
    }

    let mut currents = BTreeMap::new();
    for &mask in code.codeword_masks() {
        let parts: Vec<String> = (0..d)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    String::from("X_1^-")
                } else {
                    String::from("X_1^+")
                }
            })
            .collect();
        let label = Label::tuple(parts)?;
        if !base.is_invertible(&label)? {
            return Err(Error::NotInvertible(label.name().to_string()));
        }
        if base.dual_label(&label)? != label {
            return Err(Error::WrongBase(format!(
                "current {label} is not self-dual"
            )));
        }
        currents.insert(mask, label);
    }
    if currents.get(&0) != Some(base.unit()) {
        return Err(Error::WrongBase(String::from(
            "empty codeword does not map to the unit",
        )));
    }

    // Group law under symmetric difference.
    for (&s, gs) in &currents {
        for (&t, gt) in &currents {
            let product = base.fuse_labels(gs, gt)?;
            let expected = &currents[&(s ^ t)];
            if product.as_single_label() != Some(expected) {
                return Err(Error::WrongBase(format!(
                    "group law fails: {gs} x {gt} != {expected}"
                )));
            }
        }
    }

    Ok(CurrentFamily {
        base: Arc::new(base.clone()),
        code: code.clone(),
        currents,
    })
}

impl CurrentFamily {
    pub fn base(&self) -> &CategoryData {
        &self.base
    }

    pub fn code(&self) -> &BinaryCode {
        &self.code
    }

    /// The currents in codeword order.
    pub fn currents(&self) -> impl Iterator<Item = &Label> {
        self.currents.values()
    }

    /// True iff every composition factor of `m` has trivial monodromy with
    /// every current.
    pub fn is_local_label(&self, m: &Label) -> Result<bool> {
        let data = self.base.indecomposable(m)?;
        for factor in data.composition.keys() {
            for g in self.currents.values() {
                if !self.base.monodromy(g, factor)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff every label of the sum is local.
    pub fn is_local(&self, a: &ObjectSum) -> Result<bool> {
        for (l, _) in a.terms() {
            if !self.is_local_label(l)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The code orbit `{g_S x m}` of an indecomposable, sorted. Errors when
    /// some `g_S x m` is not a single label.
    pub fn orbit(&self, m: &Label) -> Result<Vec<Label>> {
        let mut out = BTreeSet::new();
        for g in self.currents.values() {
            let product = self.base.fuse_labels(g, m)?;
            let l = product
                .as_single_label()
                .ok_or_else(|| Error::NotSingleSimple {
                    a: g.name().to_string(),
                    b: m.name().to_string(),
                })?;
            out.insert(l.clone());
        }
        Ok(out.into_iter().collect())
    }

    /// Canonical orbit representative: the lexicographic minimum.
    pub fn orbit_rep(&self, m: &Label) -> Result<Label> {
        Ok(self.orbit(m)?.remove(0))
    }

    /// Induction on a local sum: each term is replaced by its orbit
    /// representative, multiplicities preserved. Non-local input is an
    /// error; non-local modules land outside the extension category.
    pub fn induce(&self, a: &ObjectSum) -> Result<ObjectSum> {
        if !self.is_local(a)? {
            return Err(Error::NonLocal(format!("{a}")));
        }
        let mut out = ObjectSum::zero();
        for (m, mult) in a.terms() {
            out.insert(self.orbit_rep(m)?, mult);
        }
        Ok(out)
    }

    /// Extension-side fusion of induced objects, written on orbit
    /// representatives: fuse in the base and induce the result.
    pub fn fuse_induced(&self, a: &ObjectSum, b: &ObjectSum) -> Result<ObjectSum> {
        let mut out = ObjectSum::zero();
        for (la, ma) in a.terms() {
            for (lb, mb) in b.terms() {
                let f = self.base.fuse_labels(la, lb)?;
                out += self.induce(&f)?.scaled(ma * mb);
            }
        }
        Ok(out)
    }

    /// The underlying base object of `F(m)`: the sum of `g_S x m` over all
    /// codewords.
    pub fn restrict_rep(&self, m: &Label) -> Result<ObjectSum> {
        let mut out = ObjectSum::zero();
        for g in self.currents.values() {
            out += self.base.fuse_labels(g, m)?;
        }
        Ok(out)
    }

    /// Frobenius reciprocity: `hom(F(a), F(b)) = hom_base(a, restrict F(b))`,
    /// additive in both arguments; `Unsupported` propagates from the base.
    pub fn frobenius_hom(&self, a: &ObjectSum, b: &ObjectSum) -> Result<HomDim> {
        let mut restricted = ObjectSum::zero();
        for (lb, mb) in b.terms() {
            restricted += self.restrict_rep(lb)?.scaled(mb);
        }
        self.base.hom_dim(a, &restricted)
    }
}

/// Orbit representatives of the local base simples, sorted. The output
/// depends only on the codeword set, not on the generator presentation.
pub fn classify_simples(family: &CurrentFamily) -> Result<Vec<Label>> {
    let mut reps = BTreeSet::new();
    for s in family.base().simple_labels() {
        if family.is_local_label(s)? {
            reps.insert(family.orbit_rep(s)?);
        }
    }
    Ok(reps.into_iter().collect())
}

/// Closed-form locality over the W_2 power atlas: a simple tuple
/// `X_{i_1}^{e_1} x ... x X_{i_d}^{e_d}` is local iff
/// `sum_{k in S} e_k * i_k` is even for every codeword `S`. This is an
/// independent arithmetic route around the monodromy computation of
/// [`CurrentFamily::is_local_label`].
pub fn w2_locality_closed_form(code: &BinaryCode, simple: &Label) -> Result<bool> {
    let signed: Vec<i64> = simple
        .parts()
        .iter()
        .map(|p| match p.as_str() {
            "X_1^+" => Ok(1),
            "X_1^-" => Ok(-1),
            "X_2^+" => Ok(2),
            "X_2^-" => Ok(-2),
            other => Err(Error::NotSimple(other.to_string())),
        })
        .collect::<Result<_>>()?;
    if signed.len() != code.dimension() {
        return Err(Error::ArityMismatch {
            label: simple.name().to_string(),
            expected: code.dimension(),
            found: signed.len(),
        });
    }
    for &mask in code.codeword_masks() {
        let sum: i64 = (0..signed.len())
            .filter(|k| mask & (1 << k) != 0)
            .map(|k| signed[k])
            .sum();
        if sum.rem_euclid(2) != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The category datum of a simple-current extension: the atlas of induced
/// objects, the restriction of each back to the base, and the orbit map
/// identifying induced labels.
#[derive(Clone, Debug)]
pub struct ExtensionCategory {
    family: CurrentFamily,
    category: CategoryData,
    /// Extension label -> underlying base object.
    restrict: BTreeMap<Label, ObjectSum>,
    /// Every member of every atlas orbit -> extension label.
    base_to_ext: BTreeMap<Label, Label>,
    /// Extension label -> orbit representative.
    rep_of_ext: BTreeMap<Label, Label>,
    alg_dimension: u64,
}

impl ExtensionCategory {
    pub fn family(&self) -> &CurrentFamily {
        &self.family
    }

    pub fn category(&self) -> &CategoryData {
        &self.category
    }

    /// Dimension of the extension algebra: the number of codewords.
    pub fn alg_dimension(&self) -> u64 {
        self.alg_dimension
    }

    /// The underlying base object of an extension label.
    pub fn restriction(&self, ext: &Label) -> Result<&ObjectSum> {
        self.restrict.get(ext).ok_or_else(|| Error::UnknownLabel {
            category: self.category.name().to_string(),
            label: ext.name().to_string(),
        })
    }

    /// Extension label induced from a base label, when its orbit belongs to
    /// this atlas.
    pub fn ext_label_of(&self, base: &Label) -> Option<&Label> {
        self.base_to_ext.get(base)
    }

    /// Orbit representative of an extension label.
    pub fn rep_of(&self, ext: &Label) -> Result<&Label> {
        self.rep_of_ext.get(ext).ok_or_else(|| Error::UnknownLabel {
            category: self.category.name().to_string(),
            label: ext.name().to_string(),
        })
    }

    /// Induction expressed in this atlas's labels. Errors when a term's
    /// orbit is a valid induced object that falls outside the stored atlas.
    pub fn induce(&self, a: &ObjectSum) -> Result<ObjectSum> {
        let induced = self.family.induce(a)?;
        let mut out = ObjectSum::zero();
        for (rep, mult) in induced.terms() {
            let ext = self.base_to_ext.get(rep).ok_or_else(|| {
                Error::DomainEscape(format!("orbit of {rep} is not an atlas label"))
            })?;
            out.insert(ext.clone(), mult);
        }
        Ok(out)
    }

    /// Frobenius hom dimensions between sums of extension labels.
    pub fn frobenius_hom(&self, a: &ObjectSum, b: &ObjectSum) -> Result<HomDim> {
        let to_reps = |sum: &ObjectSum| -> Result<ObjectSum> {
            let mut out = ObjectSum::zero();
            for (l, m) in sum.terms() {
                out.insert(self.rep_of(l)?.clone(), m);
            }
            Ok(out)
        };
        self.family.frobenius_hom(&to_reps(a)?, &to_reps(b)?)
    }

    /// Applies a bijective renaming to the extension labels.
    pub fn rename(self, map: &BTreeMap<Label, Label>, new_name: &str) -> Result<ExtensionCategory> {
        let rename = |l: &Label| -> Label { map.get(l).cloned().unwrap_or_else(|| l.clone()) };
        let category = self.category.relabel(map, new_name)?;
        Ok(ExtensionCategory {
            family: self.family,
            category,
            restrict: self
                .restrict
                .into_iter()
                .map(|(k, v)| (rename(&k), v))
                .collect(),
            base_to_ext: self
                .base_to_ext
                .into_iter()
                .map(|(k, v)| (k, rename(&v)))
                .collect(),
            rep_of_ext: self
                .rep_of_ext
                .into_iter()
                .map(|(k, v)| (rename(&k), v))
                .collect(),
            alg_dimension: self.alg_dimension,
        })
    }
}

/// Builds the extension datum of a current family with the default label
/// bound.
pub fn build_extension(family: CurrentFamily) -> Result<ExtensionCategory> {
    build_extension_bounded(family, DEFAULT_EXTENSION_LABEL_BOUND)
}

/// Builds the extension datum: atlas labels are the code orbits of the
/// local simples and local projective covers, closed under fusion. The
/// closure rejects any non-local fusion output (a modeling error), and the
/// construction fails loudly when a twist is non-constant on an orbit or a
/// projective cover's Frobenius hom pattern does not single out exactly one
/// simple.
pub fn build_extension_bounded(
    family: CurrentFamily,
    max_labels: usize,
) -> Result<ExtensionCategory> {
    let base = family.base().clone();

    // Seed the atlas with the orbits of local simples and local covers.
    let mut reps: BTreeSet<Label> = BTreeSet::new();
    for data in base.indecomposables() {
        if (data.is_simple || data.cover_of.is_some()) && family.is_local_label(&data.label)? {
            reps.insert(family.orbit_rep(&data.label)?);
        }
    }

    // Fusion closure over orbit representatives.
    loop {
        let snapshot: Vec<Label> = reps.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in snapshot.iter().enumerate() {
            for b in &snapshot[i..] {
                let f = base.fuse_labels(a, b)?;
                for (m, _) in f.terms() {
                    if !family.is_local_label(m)? {
                        return Err(Error::NonLocal(format!(
                            "fusion {a} x {b} contains non-local {m}"
                        )));
                    }
                    if reps.insert(family.orbit_rep(m)?) {
                        grew = true;
                        if reps.len() > max_labels {
                            return Err(Error::OverBound {
                                what: "extension labels",
                                requested: reps.len(),
                                limit: max_labels,
                            });
                        }
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }

    let code_size = family.code().len() as u64;
    let ext_name = |rep: &Label| -> Result<Label> { Label::atom(&format!("F({})", rep.name())) };

    // Orbit maps and per-orbit consistency.
    let mut base_to_ext = BTreeMap::new();
    let mut rep_of_ext = BTreeMap::new();
    let mut restrict = BTreeMap::new();
    for rep in &reps {
        let ext = ext_name(rep)?;
        let orbit = family.orbit(rep)?;
        if orbit.len() as u64 != code_size {
            return Err(Error::DomainEscape(format!(
                "orbit of {rep} has size {} != |C| = {code_size}; induction would decompose",
                orbit.len()
            )));
        }
        let rep_data = base.indecomposable(rep)?;
        for member in &orbit {
            let member_data = base.indecomposable(member)?;
            if member_data.is_simple != rep_data.is_simple
                || member_data.is_projective != rep_data.is_projective
            {
                return Err(Error::DomainEscape(format!(
                    "orbit of {rep} mixes structure flags at {member}"
                )));
            }
            if rep_data.is_simple && member_data.twist != rep_data.twist {
                return Err(Error::TwistInconsistent(format!(
                    "orbit of {rep}: twist differs at {member}"
                )));
            }
            base_to_ext.insert(member.clone(), ext.clone());
        }
        let restricted = family.restrict_rep(rep)?;
        if base.length(&restricted)? != code_size * rep_data.length() {
            return Err(Error::DomainEscape(format!(
                "restriction of F({rep}) does not have length |C| * length({rep})"
            )));
        }
        restrict.insert(ext.clone(), restricted);
        rep_of_ext.insert(ext, rep.clone());
    }

    let unit_rep = family.orbit_rep(base.unit())?;
    let ext_unit = ext_name(&unit_rep)?;

    // The unit of the extension restricts to the algebra object itself.
    {
        let algebra: ObjectSum = family.currents().map(|g| (g.clone(), 1)).collect();
        if restrict.get(&ext_unit) != Some(&algebra) {
            return Err(Error::DomainEscape(String::from(
                "extension unit does not restrict to the algebra object",
            )));
        }
    }

    let simple_reps: Vec<Label> = reps
        .iter()
        .filter(|r| base.indecomposable(r).map(|d| d.is_simple).unwrap_or(false))
        .cloned()
        .collect();

    // Indecomposable records.
    let mut indecomposables = Vec::with_capacity(reps.len());
    for rep in &reps {
        let rep_data = base.indecomposable(rep)?;
        let ext = ext_name(rep)?;

        let mut composition = BTreeMap::new();
        for (factor, mult) in &rep_data.composition {
            let factor_ext = base_to_ext.get(factor).ok_or_else(|| {
                Error::DomainEscape(format!("composition factor {factor} outside the atlas"))
            })?;
            *composition.entry(factor_ext.clone()).or_insert(0) += mult;
        }

        let dual_rep = family.orbit_rep(&base.dual_label(rep)?)?;
        let dual = base_to_ext
            .get(&dual_rep)
            .ok_or_else(|| Error::DomainEscape(format!("dual of {rep} outside the atlas")))?
            .clone();

        // A cover's covered simple is pinned by the Frobenius hom pattern:
        // exactly one simple must receive dimension one.
        let cover_of = if rep_data.cover_of.is_some() {
            let mut covered: Option<Label> = None;
            for s in &simple_reps {
                let h = family.frobenius_hom(
                    &ObjectSum::from_label(rep.clone()),
                    &ObjectSum::from_label(s.clone()),
                )?;
                match h {
                    HomDim::Known(0) => {}
                    HomDim::Known(1) => {
                        if covered.is_some() {
                            return Err(Error::HomPattern(format!(
                                "F({rep}) maps onto more than one simple"
                            )));
                        }
                        covered = Some(ext_name(s)?);
                    }
                    _ => {
                        return Err(Error::HomPattern(format!(
                            "hom(F({rep}), F({s})) is not 0 or 1"
                        )))
                    }
                }
            }
            Some(
                covered
                    .ok_or_else(|| Error::HomPattern(format!("F({rep}) maps onto no simple")))?,
            )
        } else {
            None
        };

        indecomposables.push(IndecompData {
            label: ext,
            composition,
            is_simple: rep_data.is_simple,
            is_projective: rep_data.is_projective,
            cover_of,
            twist: if rep_data.is_simple {
                rep_data.twist
            } else {
                None
            },
            dual,
        });
    }

    // Extension fusion: induce the base fusion of representatives.
    let rep_list: Vec<Label> = reps.iter().cloned().collect();
    let mut table = BTreeMap::new();
    for (i, a) in rep_list.iter().enumerate() {
        for b in &rep_list[i..] {
            let induced = family.induce(&base.fuse_labels(a, b)?)?;
            let mut sum = ObjectSum::zero();
            for (m, mult) in induced.terms() {
                let ext = base_to_ext.get(m).ok_or_else(|| {
                    Error::DomainEscape(format!("fusion output {m} outside the atlas"))
                })?;
                sum.insert(ext.clone(), mult);
            }
            let (ka, kb) = (ext_name(a)?, ext_name(b)?);
            let key = if ka <= kb { (ka, kb) } else { (kb, ka) };
            table.insert(key, sum);
        }
    }

    let mut facts: Vec<String> = base.facts().to_vec();
    for fact in [
        "simple-current extension",
        "non-semisimple modular tensor category",
    ] {
        if !facts.iter().any(|f| f == fact) {
            facts.push(String::from(fact));
        }
    }

    let category = CategoryData::new(
        &format!("ext({})", base.name()),
        ext_unit,
        indecomposables,
        FusionRule::Table(table),
        facts,
    )?;

    let report = validate(&category, &ValidationOptions::default());
    if !report.passed() {
        return Err(Error::InvalidCategory(format!(
            "extension datum failed validation: {:?}",
            report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.class.name())
                .collect::<Vec<_>>()
        )));
    }

    Ok(ExtensionCategory {
        family,
        category,
        restrict,
        base_to_ext,
        rep_of_ext,
        alg_dimension: code_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::w2;
    use crate::phase::Phase;

    fn e_family(d: usize) -> CurrentFamily {
        let base = power(&w2(), d).unwrap();
        current_family(&base, &BinaryCode::even(d).unwrap()).unwrap()
    }

    fn lab(s: &str) -> Label {
        Label::parse(s).unwrap()
    }

    fn sum(s: &str) -> ObjectSum {
        ObjectSum::from_label(lab(s))
    }

    #[test]
    fn currents_are_sign_tuples() {
        let fam = e_family(2);
        let gs: Vec<&Label> = fam.currents().collect();
        assert_eq!(gs, vec![&lab("(X_1^+,X_1^+)"), &lab("(X_1^-,X_1^-)")]);
        let g = &lab("(X_1^-,X_1^-)");
        let sq = fam.base().fuse_labels(g, g).unwrap();
        assert_eq!(sq.as_single_label(), Some(fam.base().unit()));
    }

    #[test]
    fn inadmissible_or_wrong_base_is_rejected() {
        let base = power(&w2(), 1).unwrap();
        let odd = BinaryCode::span(1, &[[1].into_iter().collect()]).unwrap();
        assert!(matches!(
            current_family(&base, &odd),
            Err(Error::InadmissibleCode(_))
        ));
        // Base/code dimension disagreement surfaces as a wrong base.
        let e2 = BinaryCode::even(2).unwrap();
        assert!(matches!(
            current_family(&base, &e2),
            Err(Error::WrongBase(_))
        ));
    }

    #[test]
    fn locality_examples() {
        let fam = e_family(2);
        assert!(!fam.is_local_label(&lab("(X_2^+,X_1^+)")).unwrap());
        assert!(fam.is_local_label(fam.base().unit()).unwrap());
        assert!(fam.is_local_label(&lab("(P_1^-,P_1^+)")).unwrap());
        assert!(fam.is_local_label(&lab("(X_2^-,X_2^+)")).unwrap());
        assert!(!fam.is_local_label(&lab("(P_1^+,X_2^+)")).unwrap());
        assert!(fam.is_local(&ObjectSum::zero()).unwrap());
    }

    #[test]
    fn closed_form_agrees_with_monodromy_on_simples() {
        for d in [2usize, 3] {
            let fam = e_family(d);
            for s in fam.base().simple_labels() {
                let monodromy_route = fam.is_local_label(s).unwrap();
                let arithmetic_route = w2_locality_closed_form(fam.code(), s).unwrap();
                assert_eq!(monodromy_route, arithmetic_route, "{s}");
            }
        }
    }

    #[test]
    fn induction_identifies_orbits() {
        let fam = e_family(2);
        let induced = fam.induce(&sum("(X_1^-,X_1^-)")).unwrap();
        assert_eq!(induced.as_single_label(), Some(fam.base().unit()));

        let two = sum("(X_2^+,X_2^-)") + sum("(X_2^-,X_2^+)");
        let induced = fam.induce(&two).unwrap();
        assert_eq!(induced, sum("(X_2^+,X_2^-)").scaled(2));

        assert!(fam.induce(&ObjectSum::zero()).unwrap().is_zero());
        assert!(matches!(
            fam.induce(&sum("(X_2^+,X_1^+)")),
            Err(Error::NonLocal(_))
        ));
    }

    #[test]
    fn classify_counts() {
        for (d, expected) in [(1usize, 4usize), (2, 4), (3, 4)] {
            let fam = e_family(d);
            assert_eq!(classify_simples(&fam).unwrap().len(), expected, "d={d}");
        }
        // Trivial code on W_2 itself: the four simples, unchanged.
        let base = w2();
        let fam = current_family(&base, &BinaryCode::trivial(1).unwrap()).unwrap();
        let simples = classify_simples(&fam).unwrap();
        assert_eq!(simples.len(), 4);
        for s in &simples {
            assert!(base.indecomposable(s).unwrap().is_simple);
        }
    }

    #[test]
    fn orbit_sizes_for_cube() {
        let fam = e_family(3);
        for rep in classify_simples(&fam).unwrap() {
            assert_eq!(fam.orbit(&rep).unwrap().len(), 4);
        }
    }

    #[test]
    fn classification_ignores_generator_presentation() {
        let base = power(&w2(), 3).unwrap();
        let set = |e: &[usize]| e.iter().copied().collect::<BTreeSet<usize>>();
        let a = BinaryCode::span(3, &[set(&[1, 2]), set(&[2, 3])]).unwrap();
        let b = BinaryCode::span(3, &[set(&[1, 3]), set(&[2, 3])]).unwrap();
        assert_eq!(a.codewords(), b.codewords());
        let fa = current_family(&base, &a).unwrap();
        let fb = current_family(&base, &b).unwrap();
        assert_eq!(
            classify_simples(&fa).unwrap(),
            classify_simples(&fb).unwrap()
        );
    }

    #[test]
    fn sf2_extension_structure() {
        let ext = build_extension(e_family(2)).unwrap();
        let cat = ext.category();
        assert_eq!(cat.len(), 6);
        assert_eq!(ext.alg_dimension(), 2);

        let p = lab("F((P_1^+,P_1^+))");
        let data = cat.indecomposable(&p).unwrap();
        assert_eq!(data.length(), 16);
        assert_eq!(data.composition.len(), 2);
        for m in data.composition.values() {
            assert_eq!(*m, 8);
        }
        assert_eq!(data.cover_of, Some(lab("F((X_1^+,X_1^+))")));

        // X_2-type inductions are projective simples.
        let x2 = cat.indecomposable(&lab("F((X_2^+,X_2^+))")).unwrap();
        assert!(x2.is_simple && x2.is_projective);

        let fused = cat.fuse_labels(&lab("F((X_2^+,X_2^+))"), &p).unwrap();
        assert_eq!(fused.total_multiplicity(), 16);
        assert_eq!(fused.support_len(), 2);
    }

    #[test]
    fn sf2_frobenius_hom_pattern() {
        let ext = build_extension(e_family(2)).unwrap();
        let p_plus = sum("F((P_1^+,P_1^+))");
        let x1_plus = sum("F((X_1^+,X_1^+))");
        let x1_minus = sum("F((X_1^+,X_1^-))");
        let x2_plus = sum("F((X_2^+,X_2^+))");
        assert_eq!(
            ext.frobenius_hom(&p_plus, &x1_plus).unwrap(),
            HomDim::Known(1)
        );
        assert_eq!(
            ext.frobenius_hom(&p_plus, &x1_minus).unwrap(),
            HomDim::Known(0)
        );
        assert_eq!(
            ext.frobenius_hom(&p_plus, &x2_plus).unwrap(),
            HomDim::Known(0)
        );
        let unit = sum("F((X_1^+,X_1^+))");
        assert_eq!(ext.frobenius_hom(&unit, &unit).unwrap(), HomDim::Known(1));
    }

    #[test]
    fn sf2_twists_are_constant_on_orbits() {
        let ext = build_extension(e_family(2)).unwrap();
        let cat = ext.category();
        assert_eq!(
            cat.twist_phase(&lab("F((X_2^+,X_2^+))")).unwrap(),
            Phase::new(3, 4).unwrap()
        );
        assert_eq!(
            cat.twist_phase(&lab("F((X_1^+,X_1^-))")).unwrap(),
            Phase::zero()
        );
    }

    #[test]
    fn extension_unit_restricts_to_algebra() {
        let ext = build_extension(e_family(3)).unwrap();
        let unit = ext.category().unit().clone();
        let restricted = ext.restriction(&unit).unwrap();
        assert_eq!(restricted.total_multiplicity(), 4);
        for g in ext.family().currents() {
            assert_eq!(restricted.multiplicity(g), 1);
        }
    }

    #[test]
    fn trivial_code_extension_recovers_the_base() {
        // Along the trivial code every object is local, every orbit is a
        // singleton, and the fusion closure regrows the full 36-label base.
        let base = power(&w2(), 2).unwrap();
        let fam = current_family(&base, &BinaryCode::trivial(2).unwrap()).unwrap();
        let ext = build_extension(fam).unwrap();
        let cat = ext.category();
        assert_eq!(cat.len(), 36);
        assert_eq!(ext.alg_dimension(), 1);
        for d in base.indecomposables() {
            let ext_label = ext.ext_label_of(&d.label).unwrap().clone();
            let e = cat.indecomposable(&ext_label).unwrap();
            assert_eq!(e.is_simple, d.is_simple);
            assert_eq!(e.is_projective, d.is_projective);
            assert_eq!(e.twist, d.twist);
            assert_eq!(e.length(), d.length());
            assert_eq!(e.cover_of.is_some(), d.cover_of.is_some(), "{}", d.label);
        }
    }

    #[test]
    fn two_path_fusion_on_mixed_locals() {
        // Orbit invariance: fusing then inducing agrees with fusing the
        // induced representatives, including locals outside the atlas
        // (mixed X_1/P tuples).
        let fam = e_family(2);
        let a = lab("(X_1^+,P_1^+)");
        let b = lab("(P_1^-,X_1^+)");
        assert!(fam.is_local_label(&a).unwrap());
        assert!(fam.is_local_label(&b).unwrap());
        let direct = fam
            .induce(&fam.base().fuse_labels(&a, &b).unwrap())
            .unwrap();
        let via_reps = fam
            .fuse_induced(
                &fam.induce(&ObjectSum::from_label(a)).unwrap(),
                &fam.induce(&ObjectSum::from_label(b)).unwrap(),
            )
            .unwrap();
        assert_eq!(direct, via_reps);
    }
}
