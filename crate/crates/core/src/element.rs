//! Sortable records and key types.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// A key with an opaque payload. Ordering helpers consult only the key.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Element<K, P = ()> {
    pub key: K,
    pub payload: P,
}

impl<K, P> Element<K, P> {
    pub fn new(key: K, payload: P) -> Self {
        Element { key, payload }
    }
}

impl<K: Ord, P> Element<K, P> {
    pub fn cmp_key(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

/// Builds `Element`s from keys, tagging each with its input position.
pub fn tagged<K, I: IntoIterator<Item = K>>(keys: I) -> Vec<Element<K, usize>> {
    keys.into_iter()
        .enumerate()
        .map(|(tag, key)| Element::new(key, tag))
        .collect()
}

/// Ascending or descending. Descending reverses the comparator, so equal keys
/// still keep their input order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum SortOrder {
    #[default]
    Ascending,
    Descending,
}

impl SortOrder {
    pub fn apply(self, ordering: Ordering) -> Ordering {
        match self {
            SortOrder::Ascending => ordering,
            SortOrder::Descending => ordering.reverse(),
        }
    }
}

/// `f64` with a total order: numbers compare numerically (`-0.0 == 0.0`),
/// every NaN sorts after every number and all NaNs are equal.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FloatKey(pub f64);

impl Ord for FloatKey {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.0.is_nan(), other.0.is_nan()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => self.0.partial_cmp(&other.0).unwrap_or(Ordering::Equal),
        }
    }
}

impl PartialOrd for FloatKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for FloatKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for FloatKey {}
