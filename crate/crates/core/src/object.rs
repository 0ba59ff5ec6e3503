//! Labels of indecomposable objects and formal direct sums over them.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};

/// Name of one indecomposable object in a category's Krull-Schmidt atlas.
///
/// A label is an ordered tuple of atomic component names. Single-component
/// labels render as the bare name; tuples render as `(a,b,...)`. Tensor
/// powers keep labels flat: the product of a `j`-tuple and a `k`-tuple is a
/// `(j+k)`-tuple, never a nested pair. Labels are totally ordered by their
/// canonical rendered name, and every emitted decomposition lists labels in
/// this order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Label {
    name: String,
    parts: Vec<String>,
}

/// Checks an atomic component name: non-empty, no whitespace, balanced
/// parentheses, no leading `(`, and no comma outside parentheses. These
/// rules keep the tuple rendering `(a,b)` unambiguous.
fn check_atom(name: &str) -> Result<()> {
    if name.is_empty() || name.starts_with('(') {
        return Err(Error::BadLabelName(name.to_string()));
    }
    let mut depth: i64 = 0;
    for c in name.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::BadLabelName(name.to_string()));
                }
            }
            ',' if depth == 0 => return Err(Error::BadLabelName(name.to_string())),
            c if c.is_whitespace() => return Err(Error::BadLabelName(name.to_string())),
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::BadLabelName(name.to_string()));
    }
    Ok(())
}

fn render(parts: &[String]) -> String {
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        let mut s = String::from("(");
        for (i, p) in parts.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(p);
        }
        s.push(')');
        s
    }
}

impl Label {
    /// A single-component label.
    pub fn atom(name: &str) -> Result<Label> {
        check_atom(name)?;
        Ok(Label {
            name: name.to_string(),
            parts: vec![name.to_string()],
        })
    }

    /// A tuple label from atomic component names.
    pub fn tuple(parts: Vec<String>) -> Result<Label> {
        if parts.is_empty() {
            return Err(Error::BadLabelName(String::new()));
        }
        for p in &parts {
            check_atom(p)?;
        }
        Ok(Label {
            name: render(&parts),
            parts,
        })
    }

    /// Concatenates two labels into one flat tuple.
    pub fn concat(left: &Label, right: &Label) -> Label {
        let mut parts = left.parts.clone();
        parts.extend(right.parts.iter().cloned());
        Label {
            name: render(&parts),
            parts,
        }
    }

    /// Parses a canonical rendering: either an atom or `(a,b,...)` split at
    /// commas outside nested parentheses.
    pub fn parse(s: &str) -> Result<Label> {
        if !s.starts_with('(') {
            return Label::atom(s);
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::BadLabelName(s.to_string()))?;
        let mut parts = Vec::new();
        let mut depth: i64 = 0;
        let mut cur = String::new();
        for c in inner.chars() {
            match c {
                '(' => {
                    depth += 1;
                    cur.push(c);
                }
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(Error::BadLabelName(s.to_string()));
                    }
                    cur.push(c);
                }
                ',' if depth == 0 => {
                    parts.push(core::mem::take(&mut cur));
                }
                c => cur.push(c),
            }
        }
        if depth != 0 {
            return Err(Error::BadLabelName(s.to_string()));
        }
        parts.push(cur);
        if parts.len() < 2 {
            return Err(Error::BadLabelName(s.to_string()));
        }
        Label::tuple(parts)
    }

    /// Canonical rendered name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Atomic component names, left to right.
    pub fn parts(&self) -> &[String] {
        &self.parts
    }

    /// Number of atomic components.
    pub fn arity(&self) -> usize {
        self.parts.len()
    }

    /// Splits a tuple label after the first `k` components.
    pub fn split(&self, k: usize) -> Result<(Label, Label)> {
        if k == 0 || k >= self.parts.len() {
            return Err(Error::ArityMismatch {
                label: self.name.clone(),
                expected: k + 1,
                found: self.parts.len(),
            });
        }
        let left = self.parts[..k].to_vec();
        let right = self.parts[k..].to_vec();
        Ok((
            Label {
                name: render(&left),
                parts: left,
            },
            Label {
                name: render(&right),
                parts: right,
            },
        ))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A formal direct-sum decomposition: nonnegative-integer multiplicities
/// of labels. The empty sum is the zero object; zero multiplicities are
/// never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ObjectSum {
    terms: BTreeMap<Label, u64>,
}

impl ObjectSum {
    /// The zero object.
    pub fn zero() -> ObjectSum {
        ObjectSum::default()
    }

    /// A single label with multiplicity one.
    pub fn from_label(label: Label) -> ObjectSum {
        let mut terms = BTreeMap::new();
        terms.insert(label, 1);
        ObjectSum { terms }
    }

    /// Adds `mult` copies of `label`; adding zero copies is a no-op.
    pub fn insert(&mut self, label: Label, mult: u64) {
        if mult > 0 {
            *self.terms.entry(label).or_insert(0) += mult;
        }
    }

    /// Terms in canonical label order.
    pub fn terms(&self) -> impl Iterator<Item = (&Label, u64)> {
        self.terms.iter().map(|(l, m)| (l, *m))
    }

    /// Multiplicity of one label (zero if absent).
    pub fn multiplicity(&self, label: &Label) -> u64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    /// True for the zero object.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct labels.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all multiplicities.
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    /// If the sum is exactly one label with multiplicity one, returns it.
    pub fn as_single_label(&self) -> Option<&Label> {
        if self.terms.len() == 1 {
            let (l, m) = self.terms.iter().next().unwrap();
            if *m == 1 {
                return Some(l);
            }
        }
        None
    }

    /// Scales every multiplicity.
    pub fn scaled(&self, k: u64) -> ObjectSum {
        if k == 0 {
            return ObjectSum::zero();
        }
        ObjectSum {
            terms: self.terms.iter().map(|(l, m)| (l.clone(), m * k)).collect(),
        }
    }
}

impl FromIterator<(Label, u64)> for ObjectSum {
    fn from_iter<T: IntoIterator<Item = (Label, u64)>>(iter: T) -> ObjectSum {
        let mut sum = ObjectSum::zero();
        for (l, m) in iter {
            sum.insert(l, m);
        }
        sum
    }
}

impl Add for ObjectSum {
    type Output = ObjectSum;
    fn add(mut self, rhs: ObjectSum) -> ObjectSum {
        self += rhs;
        self
    }
}

impl AddAssign for ObjectSum {
    fn add_assign(&mut self, rhs: ObjectSum) {
        for (l, m) in rhs.terms {
            self.insert(l, m);
        }
    }
}

impl Mul<u64> for &ObjectSum {
    type Output = ObjectSum;
    fn mul(self, k: u64) -> ObjectSum {
        self.scaled(k)
    }
}

impl fmt::Display for ObjectSum {
    /// Canonical text form, e.g. `2*X_2^+ + 2*X_2^-`; the zero object
    /// renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{m}*{l}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_rules() {
        assert!(Label::atom("X_1^+").is_ok());
        assert!(Label::atom("F((X_1^+,X_1^-))").is_ok());
        assert!(Label::atom("").is_err());
        assert!(Label::atom("(a").is_err());
        assert!(Label::atom("a,b").is_err());
        assert!(Label::atom("a b").is_err());
        assert!(Label::atom("a(").is_err());
    }

    #[test]
    fn tuple_rendering_and_parse_round_trip() {
        let l = Label::tuple(vec!["X_1^+".into(), "P_1^-".into()]).unwrap();
        assert_eq!(l.name(), "(X_1^+,P_1^-)");
        assert_eq!(Label::parse("(X_1^+,P_1^-)").unwrap(), l);

        let nested_atom = Label::tuple(vec!["F((a,b))".into(), "c".into()]).unwrap();
        assert_eq!(nested_atom.name(), "(F((a,b)),c)");
        let parsed = Label::parse("(F((a,b)),c)").unwrap();
        assert_eq!(parsed.parts(), nested_atom.parts());
    }

    #[test]
    fn concat_flattens() {
        let a = Label::tuple(vec!["x".into(), "y".into()]).unwrap();
        let b = Label::atom("z").unwrap();
        let c = Label::concat(&a, &b);
        assert_eq!(c.name(), "(x,y,z)");
        assert_eq!(c.arity(), 3);
        let (l, r) = c.split(2).unwrap();
        assert_eq!(l, a);
        assert_eq!(r, b);
    }

    #[test]
    fn sums_drop_zeros_and_render_canonically() {
        let x = Label::atom("X_2^+").unwrap();
        let y = Label::atom("X_2^-").unwrap();
        let mut s = ObjectSum::zero();
        s.insert(y.clone(), 2);
        s.insert(x.clone(), 2);
        s.insert(x.clone(), 0);
        assert_eq!(alloc::format!("{s}"), "2*X_2^+ + 2*X_2^-");
        assert_eq!(s.total_multiplicity(), 4);
        assert_eq!(alloc::format!("{}", ObjectSum::zero()), "0");
        assert!(s.scaled(0).is_zero());
    }

    #[test]
    fn single_label_detection() {
        let x = Label::atom("u").unwrap();
        assert_eq!(ObjectSum::from_label(x.clone()).as_single_label(), Some(&x));
        assert_eq!(
            ObjectSum::from_label(x.clone()).scaled(2).as_single_label(),
            None
        );
        assert_eq!(ObjectSum::zero().as_single_label(), None);
    }
}
