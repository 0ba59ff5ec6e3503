//! Binary linear codes and extension-algebra admissibility.
//!
//! The power set of `{1..d}` is an F_2-vector space under symmetric
//! difference; a binary linear code is a subspace. Codewords are stored as
//! `d`-bit masks internally (`d <= 16`); the public surface speaks in
//! sorted element sets, and masks are never serialized.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::phase::Rational;

/// Largest supported ambient dimension.
pub const MAX_DIMENSION: usize = 16;
/// Default bound for exhaustive subspace enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 5;

/// An F_2-subspace of the power set of `{1..d}` under symmetric
/// difference. Stores the generators as given plus the full codeword set in
/// canonical sorted order. Equality and ordering compare the subspace (the
/// codeword set), not the generator presentation.
#[derive(Clone, Debug)]
pub struct BinaryCode {
    d: usize,
    generators: Vec<u32>,
    codewords: Vec<u32>,
}

impl PartialEq for BinaryCode {
    fn eq(&self, other: &BinaryCode) -> bool {
        self.d == other.d && self.codewords == other.codewords
    }
}

impl Eq for BinaryCode {}

impl PartialOrd for BinaryCode {
    fn partial_cmp(&self, other: &BinaryCode) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BinaryCode {
    fn cmp(&self, other: &BinaryCode) -> core::cmp::Ordering {
        (self.d, &self.codewords).cmp(&(other.d, &other.codewords))
    }
}

fn mask_from_set(d: usize, set: &BTreeSet<usize>) -> Result<u32> {
    let mut mask = 0u32;
    for &e in set {
        if e == 0 || e > d {
            return Err(Error::ElementOutOfRange { element: e, d });
        }
        mask |= 1 << (e - 1);
    }
    Ok(mask)
}

fn set_from_mask(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| i + 1)
        .collect()
}

/// Closes a generator list under XOR: inserts each generator into a
/// triangular basis by leading bit, then spans all combinations.
fn span_masks(generators: &[u32]) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for &g in generators {
        let mut v = g;
        for &b in &basis {
            let lead = 31 - b.leading_zeros();
            if v & (1 << lead) != 0 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
            basis.sort_by_key(|m| core::cmp::Reverse(*m));
        }
    }
    let rank = basis.len();
    let mut words: Vec<u32> = (0..1u32 << rank)
        .map(|combo| {
            basis
                .iter()
                .enumerate()
                .filter(|(i, _)| combo & (1 << i) != 0)
                .fold(0, |acc, (_, b)| acc ^ b)
        })
        .collect();
    words.sort_unstable();
    words.dedup();
    words
}

impl BinaryCode {
    /// Spans a generator list into the full codeword set.
    pub fn span(d: usize, generators: &[BTreeSet<usize>]) -> Result<BinaryCode> {
        if d == 0 || d > MAX_DIMENSION {
            return Err(Error::OverBound {
                what: "code dimension",
                requested: d,
                limit: MAX_DIMENSION,
            });
        }
        let masks: Vec<u32> = generators
            .iter()
            .map(|s| mask_from_set(d, s))
            .collect::<Result<_>>()?;
        let codewords = span_masks(&masks);
        Ok(BinaryCode {
            d,
            generators: masks,
            codewords,
        })
    }

    /// The zero code `{empty set}`.
    pub fn trivial(d: usize) -> Result<BinaryCode> {
        BinaryCode::span(d, &[])
    }

    /// The even code `E(d)`: all subsets of even cardinality, of size
    /// `2^(d-1)`. Generated by the pairs `{1, i}`.
    pub fn even(d: usize) -> Result<BinaryCode> {
        let generators: Vec<BTreeSet<usize>> =
            (2..=d).map(|i| [1, i].into_iter().collect()).collect();
        BinaryCode::span(d, &generators)
    }

    /// Ambient dimension `d`.
    pub fn dimension(&self) -> usize {
        self.d
    }

    /// F_2-rank of the code.
    pub fn rank(&self) -> usize {
        self.codewords.len().trailing_zeros() as usize
    }

    /// Number of codewords, `2^rank`.
    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        false // every code contains the empty word
    }

    /// Codeword masks in sorted order (internal representation).
    pub(crate) fn codeword_masks(&self) -> &[u32] {
        &self.codewords
    }

    /// Codewords as sorted element lists, in canonical order.
    pub fn codewords(&self) -> Vec<Vec<usize>> {
        self.codewords.iter().map(|&m| set_from_mask(m)).collect()
    }

    /// Generators as given, as sorted element lists.
    pub fn generators(&self) -> Vec<Vec<usize>> {
        self.generators.iter().map(|&m| set_from_mask(m)).collect()
    }

    /// True iff `set` is a codeword.
    pub fn contains(&self, set: &BTreeSet<usize>) -> Result<bool> {
        let mask = mask_from_set(self.d, set)?;
        Ok(self.codewords.binary_search(&mask).is_ok())
    }

    /// True iff every codeword has even cardinality.
    pub fn is_even(&self) -> bool {
        self.codewords.iter().all(|m| m.count_ones() % 2 == 0)
    }
}

/// Lowest conformal weight of the simple current indexed by `s` over the
/// triplet factors `W_{p_i}`: the exact rational `sum_{i in s} (3 p_i - 2)/4`.
pub fn lowest_weight_x1s(p: &[i64], s: &BTreeSet<usize>) -> Result<Rational> {
    let mut total = Rational::from_integer(0);
    for &i in s {
        if i == 0 || i > p.len() {
            return Err(Error::ElementOutOfRange {
                element: i,
                d: p.len(),
            });
        }
        total += Rational::new(3 * p[i - 1] - 2, 4);
    }
    Ok(total)
}

/// Which admissibility condition a codeword violates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AdmissibilityCheck {
    /// Codeword of odd cardinality (breaks N-grading).
    Even,
    /// `sum_{i in S} p_i` not divisible by 4 (breaks lattice evenness).
    FourDivisibility,
    /// Lowest weight of `X_1^S` not an integer.
    IntegralWeights,
}

impl AdmissibilityCheck {
    pub fn name(&self) -> &'static str {
        match self {
            AdmissibilityCheck::Even => "even",
            AdmissibilityCheck::FourDivisibility => "four-divisibility",
            AdmissibilityCheck::IntegralWeights => "integral-weights",
        }
    }
}

/// Outcome of the three admissibility conditions, with the first violating
/// codeword when any fails.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibilityReport {
    /// Every codeword has even cardinality.
    pub even: bool,
    /// `sum_{i in S} p_i` is divisible by 4 for every codeword `S`.
    pub four_div: bool,
    /// The lowest weight of `X_1^S` is an integer for every codeword
    /// (implied by the first two conditions; checked independently).
    pub integral_weights: bool,
    /// First failing check and the codeword that witnesses it.
    pub violation: Option<(AdmissibilityCheck, Vec<usize>)>,
}

impl AdmissibilityReport {
    /// True iff all three conditions hold.
    pub fn admissible(&self) -> bool {
        self.even && self.four_div && self.integral_weights
    }

    /// One-line human-readable verdict.
    pub fn summary(&self) -> String {
        match &self.violation {
            None => String::from("admissible"),
            Some((check, word)) => format!(
                "inadmissible: {} fails on codeword {:?}",
                check.name(),
                word
            ),
        }
    }
}

/// Evaluates the admissibility conditions of the extension algebra
/// `W^C_{p_1..p_d}`: the code must be even and every codeword's weight sum
/// must lie in `4Z`; integrality of the `X_1^S` weights is re-derived as a
/// cross-check.
pub fn admissible(code: &BinaryCode, p: &[i64]) -> Result<AdmissibilityReport> {
    if code.dimension() != p.len() {
        return Err(Error::DimensionMismatch {
            code_dim: code.dimension(),
            p_len: p.len(),
        });
    }
    if let Some(bad) = p.iter().find(|&&pi| pi < 2) {
        return Err(Error::BadParameter(format!("triplet parameter {bad} < 2")));
    }
    let mut report = AdmissibilityReport {
        even: true,
        four_div: true,
        integral_weights: true,
        violation: None,
    };
    let record = |report: &mut AdmissibilityReport, check, mask: u32| {
        if report.violation.is_none() {
            report.violation = Some((check, set_from_mask(mask)));
        }
    };
    for &mask in code.codeword_masks() {
        if mask.count_ones() % 2 != 0 && report.even {
            report.even = false;
            record(&mut report, AdmissibilityCheck::Even, mask);
        }
    }
    for &mask in code.codeword_masks() {
        let sum: i64 = set_from_mask(mask).iter().map(|&i| p[i - 1]).sum();
        if sum % 4 != 0 && report.four_div {
            report.four_div = false;
            record(&mut report, AdmissibilityCheck::FourDivisibility, mask);
        }
    }
    for &mask in code.codeword_masks() {
        let set: BTreeSet<usize> = set_from_mask(mask).into_iter().collect();
        let w = lowest_weight_x1s(p, &set)?;
        if !w.is_integer() && report.integral_weights {
            report.integral_weights = false;
            record(&mut report, AdmissibilityCheck::IntegralWeights, mask);
        }
    }
    Ok(report)
}

/// Enumerates every subspace of the power set of `{1..d}` exactly once via
/// canonical reduced-row-echelon generator matrices. Order: rank ascending,
/// then pivot choice, then free-entry assignment.
pub fn enumerate_subspaces(d: usize) -> Result<Vec<BinaryCode>> {
    if d == 0 || d > MAX_DIMENSION {
        return Err(Error::OverBound {
            what: "code dimension",
            requested: d,
            limit: MAX_DIMENSION,
        });
    }
    let mut out = Vec::new();
    for rank in 0..=d {
        let mut pivots = first_combination(rank);
        loop {
            // Free positions: row i may carry arbitrary bits in non-pivot
            // columns to the right of its pivot.
            let mut free: Vec<(usize, usize)> = Vec::new(); // (row, column)
            for (row, &pc) in pivots.iter().enumerate() {
                for col in (pc + 1)..d {
                    if !pivots.contains(&col) {
                        free.push((row, col));
                    }
                }
            }
            for assignment in 0..(1u64 << free.len()) {
                let mut rows: Vec<u32> = pivots.iter().map(|&c| 1 << c).collect();
                for (bit, &(row, col)) in free.iter().enumerate() {
                    if assignment & (1 << bit) != 0 {
                        rows[row] |= 1 << col;
                    }
                }
                let codewords = span_masks(&rows);
                out.push(BinaryCode {
                    d,
                    generators: rows,
                    codewords,
                });
            }
            if !next_combination(&mut pivots, d) {
                break;
            }
        }
    }
    Ok(out)
}

fn first_combination(k: usize) -> Vec<usize> {
    (0..k).collect()
}

/// Advances a sorted k-combination of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - (k - i) {
            combo[i] += 1;
            for j in (i + 1)..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All subspaces of the power set of `{1..d}` passing [`admissible`], in
/// the deterministic order of [`enumerate_subspaces`]. `d` is bounded to
/// keep the sweep at desk scale.
pub fn enumerate_admissible(d: usize, p: &[i64], bound: usize) -> Result<Vec<BinaryCode>> {
    if d > bound {
        return Err(Error::OverBound {
            what: "enumeration dimension",
            requested: d,
            limit: bound,
        });
    }
    let mut out = Vec::new();
    for code in enumerate_subspaces(d)? {
        if admissible(&code, p)?.admissible() {
            out.push(code);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(elems: &[usize]) -> BTreeSet<usize> {
        elems.iter().copied().collect()
    }

    #[test]
    fn span_closes_under_symmetric_difference() {
        let code = BinaryCode::span(3, &[set(&[1, 2]), set(&[2, 3])]).unwrap();
        assert_eq!(
            code.codewords(),
            vec![vec![], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(code.rank(), 2);
        assert_eq!(code, BinaryCode::even(3).unwrap());
    }

    #[test]
    fn span_of_empty_and_single_generator() {
        let zero = BinaryCode::span(2, &[]).unwrap();
        assert_eq!(zero.codewords(), vec![Vec::<usize>::new()]);
        let one = BinaryCode::span(2, &[set(&[1, 2])]).unwrap();
        assert_eq!(one.codewords(), vec![vec![], vec![1, 2]]);
    }

    #[test]
    fn span_is_idempotent() {
        let code = BinaryCode::span(4, &[set(&[1, 2]), set(&[3, 4]), set(&[1, 4])]).unwrap();
        let regenerated = BinaryCode::span(
            4,
            &code
                .codewords()
                .into_iter()
                .map(|w| w.into_iter().collect())
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(code.codewords(), regenerated.codewords());
    }

    #[test]
    fn even_code_sizes() {
        assert_eq!(BinaryCode::even(1).unwrap().len(), 1);
        assert_eq!(
            BinaryCode::even(2).unwrap().codewords(),
            vec![vec![], vec![1, 2]]
        );
        assert_eq!(BinaryCode::even(4).unwrap().len(), 8);
        for d in 1..=6 {
            let e = BinaryCode::even(d).unwrap();
            assert_eq!(e.len(), 1 << (d - 1));
            assert!(e.is_even());
        }
    }

    #[test]
    fn evenness_detects_odd_words() {
        assert!(!BinaryCode::span(2, &[set(&[1])]).unwrap().is_even());
        assert!(BinaryCode::span(4, &[set(&[1, 2]), set(&[3, 4])])
            .unwrap()
            .is_even());
    }

    #[test]
    fn element_out_of_range() {
        assert!(matches!(
            BinaryCode::span(2, &[set(&[3])]),
            Err(Error::ElementOutOfRange { element: 3, d: 2 })
        ));
    }

    #[test]
    fn lowest_weights() {
        assert_eq!(
            lowest_weight_x1s(&[2, 2], &set(&[1, 2])).unwrap(),
            Rational::from_integer(2)
        );
        assert_eq!(
            lowest_weight_x1s(&[2, 6], &set(&[2])).unwrap(),
            Rational::from_integer(4)
        );
        assert_eq!(
            lowest_weight_x1s(&[2, 2], &set(&[])).unwrap(),
            Rational::from_integer(0)
        );
        assert_eq!(
            lowest_weight_x1s(&[3], &set(&[1])).unwrap(),
            Rational::new(7, 4)
        );
        assert!(lowest_weight_x1s(&[2], &set(&[2])).is_err());
    }

    #[test]
    fn lowest_weight_additive_over_disjoint_sets() {
        let p = [2, 3, 4, 5];
        let a = set(&[1, 3]);
        let b = set(&[2, 4]);
        let ab = set(&[1, 2, 3, 4]);
        let wa = lowest_weight_x1s(&p, &a).unwrap();
        let wb = lowest_weight_x1s(&p, &b).unwrap();
        assert_eq!(wa + wb, lowest_weight_x1s(&p, &ab).unwrap());
    }

    #[test]
    fn admissibility_verdicts() {
        let e2 = BinaryCode::even(2).unwrap();
        assert!(admissible(&e2, &[2, 2]).unwrap().admissible());

        let odd = BinaryCode::span(1, &[set(&[1])]).unwrap();
        let r = admissible(&odd, &[2]).unwrap();
        assert!(!r.even);
        assert_eq!(r.violation, Some((AdmissibilityCheck::Even, vec![1])));

        let r = admissible(&e2, &[2, 4]).unwrap();
        assert!(r.even);
        assert!(!r.four_div);
        assert!(!r.integral_weights);
        assert_eq!(
            r.violation,
            Some((AdmissibilityCheck::FourDivisibility, vec![1, 2]))
        );

        // (2, 6) along E(2): 2 + 6 = 8 is divisible by 4, so it passes.
        assert!(admissible(&e2, &[2, 6]).unwrap().admissible());

        let single = BinaryCode::span(4, &[set(&[1, 2, 3, 4])]).unwrap();
        assert!(admissible(&single, &[4, 4, 4, 4]).unwrap().admissible());

        assert!(matches!(
            admissible(&e2, &[2]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(admissible(&e2, &[2, 1]).is_err());
    }

    #[test]
    fn admissibility_for_all_two_parameters_reduces_to_evenness() {
        // Two code paths: the full admissibility report versus plain
        // codeword-parity evenness.
        for code in enumerate_subspaces(4).unwrap() {
            let p = vec![2; 4];
            let report = admissible(&code, &p).unwrap();
            assert_eq!(
                report.admissible(),
                code.is_even(),
                "{:?}",
                code.codewords()
            );
        }
    }

    #[test]
    fn subspace_enumeration_counts() {
        // Gaussian binomial totals: 2, 5, 16, 67, 374 subspaces.
        let totals: Vec<usize> = (1..=5)
            .map(|d| enumerate_subspaces(d).unwrap().len())
            .collect();
        assert_eq!(totals, vec![2, 5, 16, 67, 374]);
    }

    #[test]
    fn subspace_enumeration_is_duplicate_free() {
        let mut seen: Vec<Vec<u32>> = enumerate_subspaces(4)
            .unwrap()
            .into_iter()
            .map(|c| c.codewords.clone())
            .collect();
        let before = seen.len();
        seen.sort();
        seen.dedup();
        assert_eq!(before, seen.len());
    }

    #[test]
    fn enumerate_admissible_small_cases() {
        let found = enumerate_admissible(2, &[2, 2], DEFAULT_ENUMERATION_BOUND).unwrap();
        assert_eq!(found.len(), 2);
        assert_eq!(found[0].codewords(), vec![Vec::<usize>::new()]);
        assert_eq!(found[1].codewords(), vec![vec![], vec![1, 2]]);

        let found = enumerate_admissible(1, &[2], DEFAULT_ENUMERATION_BOUND).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].len(), 1);

        for code in enumerate_admissible(3, &[2, 2, 2], DEFAULT_ENUMERATION_BOUND).unwrap() {
            assert!(code.contains(&set(&[])).unwrap());
        }

        assert!(matches!(
            enumerate_admissible(6, &[2; 6], DEFAULT_ENUMERATION_BOUND),
            Err(Error::OverBound { .. })
        ));
    }

    #[test]
    fn evenness_closed_under_joint_span() {
        let a = BinaryCode::even(4).unwrap();
        let b = BinaryCode::span(4, &[set(&[1, 2]), set(&[1, 3])]).unwrap();
        let mut gens: Vec<BTreeSet<usize>> = a
            .codewords()
            .into_iter()
            .map(|w| w.into_iter().collect())
            .collect();
        gens.extend(
            b.codewords()
                .into_iter()
                .map(|w| w.into_iter().collect::<BTreeSet<usize>>()),
        );
        let joint = BinaryCode::span(4, &gens).unwrap();
        assert!(joint.is_even());
    }
}
