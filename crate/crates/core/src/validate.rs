//! Invariant checking for category data.
//!
//! [`validate`] runs every invariant class and reports pass/fail per class;
//! it never aborts on a failure. Malformed tables (dangling labels) are a
//! distinct class from violated axioms. Pair and triple sweeps are
//! exhaustive below a label-count threshold and seed-controlled samples
//! above it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::{CategoryData, FusionRule};
use crate::object::{Label, ObjectSum};

/// Label-count threshold below which associativity and exactness sweeps
/// are exhaustive.
pub const DEFAULT_EXHAUSTIVE_THRESHOLD: usize = 64;
/// Minimum sampled triples for large atlases.
pub const DEFAULT_SAMPLE_TRIPLES: usize = 500;
/// Minimum sampled pairs for large atlases.
pub const DEFAULT_SAMPLE_PAIRS: usize = 500;
/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 7;

/// Sweep sizes and sampling controls.
#[derive(Clone, Copy, Debug)]
pub struct ValidationOptions {
    /// Exhaustive sweeps whenever the atlas has at most this many labels.
    pub exhaustive_threshold: usize,
    /// Sampled associativity triples above the threshold.
    pub sample_triples: usize,
    /// Sampled exactness/closure/symmetry pairs above the threshold.
    pub sample_pairs: usize,
    /// Seed for the sampled sweeps.
    pub seed: u64,
}

impl Default for ValidationOptions {
    fn default() -> ValidationOptions {
        ValidationOptions {
            exhaustive_threshold: DEFAULT_EXHAUSTIVE_THRESHOLD,
            sample_triples: DEFAULT_SAMPLE_TRIPLES,
            sample_pairs: DEFAULT_SAMPLE_PAIRS,
            seed: DEFAULT_SEED,
        }
    }
}

/// Invariant classes reported by [`validate`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckClass {
    /// Every referenced label resolves (malformed-table class).
    DanglingLabels,
    /// Per-object structure: simplicity vs composition, cover flags, length.
    Structure,
    /// Unit is simple with twist 0 and self-dual.
    UnitData,
    /// Twist present exactly on simples.
    TwistPresence,
    /// Fusion with the unit is the identity, both sides.
    UnitLaws,
    /// Every fusion result stays inside the atlas.
    Closure,
    /// Fusion is symmetric in its arguments.
    Symmetry,
    /// Fusion is associative on label triples.
    Associativity,
    /// Dual is an involution preserving simplicity/projectivity, and the
    /// unit occurs in `gr(s x dual(s))` for every simple `s`.
    DualInvolution,
    /// Composition image of fusion is bilinear in composition factors.
    GrConsistency,
}

impl CheckClass {
    pub fn name(&self) -> &'static str {
        match self {
            CheckClass::DanglingLabels => "dangling-labels",
            CheckClass::Structure => "structure",
            CheckClass::UnitData => "unit-data",
            CheckClass::TwistPresence => "twist-presence",
            CheckClass::UnitLaws => "unit-laws",
            CheckClass::Closure => "closure",
            CheckClass::Symmetry => "symmetry",
            CheckClass::Associativity => "associativity",
            CheckClass::DualInvolution => "dual-involution",
            CheckClass::GrConsistency => "gr-consistency",
        }
    }
}

/// Outcome of one invariant class.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub class: CheckClass,
    pub passed: bool,
    /// Number of instances checked (labels, pairs, or triples).
    pub checked: u64,
    /// True when the sweep sampled instead of enumerating.
    pub sampled: bool,
    /// First few failure descriptions.
    pub failures: Vec<String>,
}

const MAX_RECORDED_FAILURES: usize = 5;

impl CheckResult {
    fn new(class: CheckClass) -> CheckResult {
        CheckResult {
            class,
            passed: true,
            checked: 0,
            sampled: false,
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, msg: String) {
        self.passed = false;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(msg);
        }
    }
}

/// Full validation outcome.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub category: String,
    pub label_count: usize,
    /// Seed actually used, present iff some sweep sampled.
    pub seed: Option<u64>,
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    /// True iff every class passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, class: CheckClass) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.class == class)
    }

    /// Triples examined by the associativity sweep.
    pub fn associativity_triples(&self) -> u64 {
        self.check(CheckClass::Associativity)
            .map_or(0, |c| c.checked)
    }
}

fn sum_of(label: &Label) -> ObjectSum {
    ObjectSum::from_label(label.clone())
}

/// Runs every invariant class on `cat` and reports per-class results.
pub fn validate(cat: &CategoryData, opts: &ValidationOptions) -> ValidationReport {
    let labels: Vec<Label> = cat.labels().cloned().collect();
    let n = labels.len();
    let exhaustive = n <= opts.exhaustive_threshold;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut checks = Vec::new();

    // Malformed tables first: dangling references are their own class.
    let mut dangling = CheckResult::new(CheckClass::DanglingLabels);
    dangling.checked = n as u64;
    if let Err(e) = cat.check_wellformed() {
        dangling.fail(format!("{e}"));
    }
    if let FusionRule::Product { split, .. } = cat.fusion_rule() {
        for l in &labels {
            if l.arity() <= *split {
                dangling.fail(format!(
                    "label {l} cannot split into factors at arity {split}"
                ));
            }
        }
    }
    checks.push(dangling);

    let mut structure = CheckResult::new(CheckClass::Structure);
    for data in cat.indecomposables() {
        structure.checked += 1;
        let self_only =
            data.composition.len() == 1 && data.composition.get(&data.label) == Some(&1);
        if data.is_simple != self_only {
            structure.fail(format!(
                "{}: is_simple={} but composition {} self-multiplicity",
                data.label,
                data.is_simple,
                if self_only { "is" } else { "is not" }
            ));
        }
        if data.length() == 0 {
            structure.fail(format!("{}: empty composition series", data.label));
        }
        if let Some(covered) = &data.cover_of {
            if !data.is_projective {
                structure.fail(format!("{}: cover_of set but not projective", data.label));
            }
            if data.composition.get(covered).copied().unwrap_or(0) == 0 {
                structure.fail(format!(
                    "{}: covered simple {covered} missing from composition",
                    data.label
                ));
            }
            match cat.indecomposable(covered) {
                Ok(c) if !c.is_simple => {
                    structure.fail(format!(
                        "{}: cover_of target {covered} is not simple",
                        data.label
                    ));
                }
                _ => {}
            }
        }
    }
    checks.push(structure);

    let mut unit_data = CheckResult::new(CheckClass::UnitData);
    unit_data.checked = 1;
    match cat.indecomposable(cat.unit()) {
        Ok(u) => {
            if !u.is_simple {
                unit_data.fail(format!("unit {} is not simple", u.label));
            }
            if u.twist.is_none_or(|t| !t.is_zero()) {
                unit_data.fail(format!("unit {} has non-zero twist", u.label));
            }
            if &u.dual != cat.unit() {
                unit_data.fail(format!("unit {} is not self-dual", u.label));
            }
        }
        Err(e) => unit_data.fail(format!("{e}")),
    }
    checks.push(unit_data);

    let mut twists = CheckResult::new(CheckClass::TwistPresence);
    for data in cat.indecomposables() {
        twists.checked += 1;
        if data.is_simple != data.twist.is_some() {
            twists.fail(format!(
                "{}: twist {} but label {} simple",
                data.label,
                if data.twist.is_some() {
                    "present"
                } else {
                    "absent"
                },
                if data.is_simple { "is" } else { "is not" }
            ));
        }
    }
    checks.push(twists);

    let mut unit_laws = CheckResult::new(CheckClass::UnitLaws);
    for a in &labels {
        unit_laws.checked += 1;
        let expect = sum_of(a);
        match cat.fuse_labels(cat.unit(), a) {
            Ok(s) if s == expect => {}
            Ok(s) => unit_laws.fail(format!("1 x {a} = {s}")),
            Err(e) => unit_laws.fail(format!("1 x {a}: {e}")),
        }
        match cat.fuse_labels(a, cat.unit()) {
            Ok(s) if s == expect => {}
            Ok(s) => unit_laws.fail(format!("{a} x 1 = {s}")),
            Err(e) => unit_laws.fail(format!("{a} x 1: {e}")),
        }
    }
    checks.push(unit_laws);

    // Pair sweeps: closure, symmetry, and Grothendieck exactness.
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
    } else {
        (0..opts.sample_pairs)
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
            .collect()
    };

    let mut closure = CheckResult::new(CheckClass::Closure);
    let mut symmetry = CheckResult::new(CheckClass::Symmetry);
    let mut gr_consistency = CheckResult::new(CheckClass::GrConsistency);
    closure.sampled = !exhaustive;
    symmetry.sampled = !exhaustive;
    gr_consistency.sampled = !exhaustive;
    for &(i, j) in &pairs {
        let (a, b) = (&labels[i], &labels[j]);
        closure.checked += 1;
        match cat.fuse_labels(a, b) {
            Ok(sum) => {
                for (l, _) in sum.terms() {
                    if !cat.contains(l) {
                        closure.fail(format!("{a} x {b} contains unknown {l}"));
                    }
                }
            }
            Err(e) => closure.fail(format!("{a} x {b}: {e}")),
        }
        symmetry.checked += 1;
        match (cat.fuse_labels(a, b), cat.fuse_labels(b, a)) {
            (Ok(ab), Ok(ba)) if ab == ba => {}
            (Ok(ab), Ok(ba)) => symmetry.fail(format!("{a} x {b} = {ab} but {b} x {a} = {ba}")),
            (Err(e), _) | (_, Err(e)) => symmetry.fail(format!("{a} x {b}: {e}")),
        }
        gr_consistency.checked += 1;
        match cat.gr_consistent_pair(a, b) {
            Ok(true) => {}
            Ok(false) => gr_consistency.fail(format!("gr mismatch on {a} x {b}")),
            Err(e) => gr_consistency.fail(format!("{a} x {b}: {e}")),
        }
    }
    checks.push(closure);
    checks.push(symmetry);

    let mut assoc = CheckResult::new(CheckClass::Associativity);
    assoc.sampled = !exhaustive;
    let triples: Vec<(usize, usize, usize)> = if exhaustive {
        (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .collect()
    } else {
        (0..opts.sample_triples)
            .map(|_| {
                (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                )
            })
            .collect()
    };
    for &(i, j, k) in &triples {
        let (a, b, c) = (&labels[i], &labels[j], &labels[k]);
        assoc.checked += 1;
        let left = cat
            .fuse_labels(a, b)
            .and_then(|ab| cat.fuse(&ab, &sum_of(c)));
        let right = cat
            .fuse_labels(b, c)
            .and_then(|bc| cat.fuse(&sum_of(a), &bc));
        match (left, right) {
            (Ok(l), Ok(r)) if l == r => {}
            (Ok(l), Ok(r)) => assoc.fail(format!(
                "({a} x {b}) x {c} = {l} != {a} x ({b} x {c}) = {r}"
            )),
            (Err(e), _) | (_, Err(e)) => assoc.fail(format!("({a},{b},{c}): {e}")),
        }
    }
    checks.push(assoc);

    let mut duals = CheckResult::new(CheckClass::DualInvolution);
    for data in cat.indecomposables() {
        duals.checked += 1;
        match cat.indecomposable(&data.dual) {
            Ok(d) => {
                if d.dual != data.label {
                    duals.fail(format!("dual(dual({})) = {}", data.label, d.dual));
                }
                if d.is_simple != data.is_simple || d.is_projective != data.is_projective {
                    duals.fail(format!(
                        "dual of {} does not preserve simplicity/projectivity",
                        data.label
                    ));
                }
            }
            Err(e) => duals.fail(format!("{e}")),
        }
        if data.is_simple {
            match cat
                .fuse_labels(&data.label, &data.dual)
                .and_then(|s| cat.gr(&s))
            {
                Ok(g) => {
                    if g.multiplicity(cat.unit()) == 0 {
                        duals.fail(format!(
                            "unit absent from gr({} x {})",
                            data.label, data.dual
                        ));
                    }
                }
                Err(e) => duals.fail(format!("{} x dual: {e}", data.label)),
            }
        }
    }
    checks.push(duals);
    checks.push(gr_consistency);

    let sampled_any = checks.iter().any(|c| c.sampled);
    ValidationReport {
        category: String::from(cat.name()),
        label_count: n,
        seed: sampled_any.then_some(opts.seed),
        checks,
    }
}
