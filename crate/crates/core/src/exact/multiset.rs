use std::fmt;

use serde::{Deserialize, Serialize};

use super::half::{Half, Scalar};

/// A finite multiset of half-integers, kept sorted in decreasing order so
/// that equality ignores the order entries were supplied in.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Half<S>>", into = "Vec<Half<S>>", bound = "S: Scalar")]
pub struct Multiset<S: Scalar> {
    entries: Vec<Half<S>>,
}

impl<S: Scalar> Multiset<S> {
    pub fn new(mut entries: Vec<Half<S>>) -> Self {
        entries.sort_unstable_by(|p, q| q.cmp(p));
        Self { entries }
    }

    /// Entries in decreasing order.
    pub fn entries(&self) -> &[Half<S>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn shift(&self, c: Half<S>) -> Self {
        Self {
            entries: self.entries.iter().map(|&v| v + c).collect(),
        }
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        Self::new(self.entries.iter().chain(&other.entries).copied().collect())
    }
}

impl<S: Scalar> From<Vec<Half<S>>> for Multiset<S> {
    fn from(v: Vec<Half<S>>) -> Self {
        Self::new(v)
    }
}

impl<S: Scalar> From<Multiset<S>> for Vec<Half<S>> {
    fn from(m: Multiset<S>) -> Self {
        m.entries
    }
}

impl<S: Scalar> FromIterator<Half<S>> for Multiset<S> {
    fn from_iter<I: IntoIterator<Item = Half<S>>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl<S: Scalar> fmt::Display for Multiset<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl<S: Scalar> fmt::Debug for Multiset<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_multiplicity() {
        let h = Half::<i64>::integer;
        let p: Multiset<i64> = vec![h(1), h(0), h(0)].into();
        let q: Multiset<i64> = vec![h(0), h(1), h(0)].into();
        let r: Multiset<i64> = vec![h(0), h(1), h(1)].into();
        assert_eq!(p, q);
        assert_ne!(p, r);
        assert_eq!(p.to_string(), "{1, 0, 0}");
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["1","0","0"]"#);
    }
}
