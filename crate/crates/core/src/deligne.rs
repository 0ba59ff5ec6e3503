//! Product category data.
//!
//! [`product`] builds the fusion datum of a tensor product of two validated
//! data: labels are flat tuples pairing the factors' labels, and every
//! structure field is computed componentwise. A pair of indecomposables is
//! treated as indecomposable in the product: endomorphism algebras
//! multiply, and a tensor product of local rings whose residue fields are
//! one-dimensional is local. In particular a pair is simple iff both
//! components are, projective iff both are, and a pair of projective covers
//! covers the pair of covered simples. Twist phases add modulo 1 and hom
//! dimensions multiply componentwise.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::category::{CategoryData, FusionRule, IndecompData};
use crate::error::{Error, Result};
use crate::object::Label;

/// Pairs two category data into their product datum. Inputs must be
/// well-formed (callers normally validate them first; the cheap structural
/// check runs here and rejects data with dangling references).
pub fn product(left: &CategoryData, right: &CategoryData) -> Result<CategoryData> {
    left.check_wellformed()
        .map_err(|e| Error::InvalidCategory(format!("left factor: {e}")))?;
    right
        .check_wellformed()
        .map_err(|e| Error::InvalidCategory(format!("right factor: {e}")))?;

    let mut indecomposables = Vec::with_capacity(left.len() * right.len());
    for ld in left.indecomposables() {
        for rd in right.indecomposables() {
            let label = Label::concat(&ld.label, &rd.label);
            let mut composition = BTreeMap::new();
            for (lf, lm) in &ld.composition {
                for (rf, rm) in &rd.composition {
                    composition.insert(Label::concat(lf, rf), lm * rm);
                }
            }
            let twist = match (ld.twist, rd.twist) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            };
            let cover_of = match (&ld.cover_of, &rd.cover_of) {
                (Some(lc), Some(rc)) => Some(Label::concat(lc, rc)),
                _ => None,
            };
            indecomposables.push(IndecompData {
                label,
                composition,
                is_simple: ld.is_simple && rd.is_simple,
                is_projective: ld.is_projective && rd.is_projective,
                cover_of,
                twist,
                dual: Label::concat(&ld.dual, &rd.dual),
            });
        }
    }

    // Facts shared by both factors survive the product (rigidity and
    // modularity are preserved by Deligne products).
    let facts: Vec<_> = left
        .facts()
        .iter()
        .filter(|f| right.facts().contains(f))
        .cloned()
        .collect();

    let split = left.label_arity();
    let name = format!("{}x{}", left.name(), right.name());
    let unit = Label::concat(left.unit(), right.unit());
    CategoryData::new(
        &name,
        unit,
        indecomposables,
        FusionRule::Product {
            left: Arc::new(left.clone()),
            right: Arc::new(right.clone()),
            split,
        },
        facts,
    )
}

/// Left-nested iterated product with flat tuple labels; `power(cat, 1)`
/// is the input unchanged.
pub fn power(cat: &CategoryData, d: usize) -> Result<CategoryData> {
    if d == 0 {
        return Err(Error::ZeroPower);
    }
    let mut acc = cat.clone();
    for _ in 1..d {
        acc = product(&acc, cat)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::w2;
    use crate::category::HomDim;
    use crate::object::ObjectSum;
    use crate::phase::Phase;
    use crate::validate::{validate, ValidationOptions};

    fn pair(a: &str, b: &str) -> Label {
        Label::parse(&alloc::format!("({a},{b})")).unwrap()
    }

    #[test]
    fn w2_square_counts() {
        let cat = product(&w2(), &w2()).unwrap();
        assert_eq!(cat.len(), 36);
        assert_eq!(cat.simple_labels().count(), 16);
        let covers = cat
            .indecomposables()
            .filter(|d| d.cover_of.is_some())
            .count();
        assert_eq!(covers, 4);
        assert_eq!(cat.unit(), &pair("X_1^+", "X_1^+"));
        for d in cat.indecomposables() {
            if let Some(c) = &d.cover_of {
                assert!(c.name().starts_with("(X_1^"));
                assert!(d.label.name().starts_with("(P_1^"));
            }
        }
    }

    #[test]
    fn product_twist_adds_mod_one() {
        let cat = product(&w2(), &w2()).unwrap();
        let t = cat.twist_phase(&pair("X_2^+", "X_2^+")).unwrap();
        assert_eq!(t, Phase::new(3, 4).unwrap());
    }

    #[test]
    fn componentwise_fusion() {
        let cat = product(&w2(), &w2()).unwrap();
        let out = cat
            .fuse_labels(&pair("X_2^+", "X_1^+"), &pair("X_2^+", "X_1^+"))
            .unwrap();
        assert_eq!(out.as_single_label(), Some(&pair("P_1^+", "X_1^+")));
    }

    #[test]
    fn componentwise_hom_and_gr() {
        let cat = product(&w2(), &w2()).unwrap();
        let pp = ObjectSum::from_label(pair("P_1^+", "P_1^+"));
        let mixed = ObjectSum::from_label(pair("X_1^+", "X_1^-"));
        assert_eq!(cat.hom_dim(&pp, &mixed).unwrap(), HomDim::Known(0));
        let same = ObjectSum::from_label(pair("X_1^+", "X_1^+"));
        assert_eq!(cat.hom_dim(&pp, &same).unwrap(), HomDim::Known(1));

        let g = cat.gr(&pp).unwrap();
        assert_eq!(g.support_len(), 4);
        assert_eq!(g.total_multiplicity(), 16);
        assert_eq!(g.multiplicity(&pair("X_1^+", "X_1^-")), 4);
    }

    #[test]
    fn length_multiplies() {
        let cat = product(&w2(), &w2()).unwrap();
        for d in cat.indecomposables() {
            let (l, r) = d.label.split(1).unwrap();
            let ll = w2().indecomposable(&l).unwrap().length();
            let rl = w2().indecomposable(&r).unwrap().length();
            assert_eq!(d.length(), ll * rl, "{}", d.label);
        }
    }

    #[test]
    fn power_one_is_identity_and_zero_errors() {
        let cat = w2();
        let p1 = power(&cat, 1).unwrap();
        assert_eq!(p1.len(), cat.len());
        assert_eq!(p1.name(), cat.name());
        assert!(matches!(power(&cat, 0), Err(Error::ZeroPower)));
    }

    #[test]
    fn cube_counts_and_cover_length() {
        let cube = power(&w2(), 3).unwrap();
        assert_eq!(cube.len(), 216);
        assert_eq!(cube.simple_labels().count(), 64);
        let p3 = Label::parse("(P_1^+,P_1^+,P_1^+)").unwrap();
        assert_eq!(cube.indecomposable(&p3).unwrap().length(), 64);
    }

    #[test]
    fn square_validates() {
        let cat = product(&w2(), &w2()).unwrap();
        let report = validate(&cat, &ValidationOptions::default());
        assert!(report.passed(), "{:?}", report.checks);
        assert_eq!(report.seed, None);
    }

    #[test]
    fn exchange_symmetry_under_component_swap() {
        // product(A, B) and product(B, A) agree under (l, r) -> (r, l).
        // With A = W_2 and B = W_2 x W_2 the swap moves one component past
        // two, so the relabeling is non-trivial.
        let a = w2();
        let b = product(&w2(), &w2()).unwrap();
        let ab = product(&a, &b).unwrap();
        let ba = product(&b, &a).unwrap();
        let swap = |l: &Label| -> Label {
            let (x, yz) = l.split(1).unwrap();
            Label::concat(&yz, &x)
        };
        assert_eq!(swap(ab.unit()), ba.unit().clone());
        for d in ab.indecomposables() {
            let other = ba.indecomposable(&swap(&d.label)).unwrap();
            assert_eq!(d.is_simple, other.is_simple);
            assert_eq!(d.is_projective, other.is_projective);
            assert_eq!(d.twist, other.twist);
            assert_eq!(swap(&d.dual), other.dual);
            assert_eq!(d.cover_of.as_ref().map(swap), other.cover_of);
            let comp: alloc::collections::BTreeMap<Label, u64> =
                d.composition.iter().map(|(l, m)| (swap(l), *m)).collect();
            assert_eq!(comp, other.composition);
        }
        // Spot-check fusion through the swap on a mixed pair.
        let x = Label::parse("(X_2^+,P_1^-,X_1^-)").unwrap();
        let y = Label::parse("(P_1^+,X_2^-,X_2^+)").unwrap();
        let lhs: ObjectSum = ab
            .fuse_labels(&x, &y)
            .unwrap()
            .terms()
            .map(|(l, m)| (swap(l), m))
            .collect();
        let rhs = ba.fuse_labels(&swap(&x), &swap(&y)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn invertibles_multiply() {
        let cat = product(&w2(), &w2()).unwrap();
        for s in cat.simple_labels() {
            let (l, r) = s.split(1).unwrap();
            let expect = w2().is_invertible(&l).unwrap() && w2().is_invertible(&r).unwrap();
            assert_eq!(cat.is_invertible(s).unwrap(), expect, "{s}");
        }
    }
}
