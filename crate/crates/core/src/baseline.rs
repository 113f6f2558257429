//! Classical sorts with comparison counting, used as benchmark baselines.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::twin::twin_sort_by;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Twin,
    Insertion,
    Merge,
    Quick,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Twin,
        Algorithm::Insertion,
        Algorithm::Merge,
        Algorithm::Quick,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Twin => "twin",
            Algorithm::Insertion => "insertion",
            Algorithm::Merge => "merge",
            Algorithm::Quick => "quick",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm `{0}` (expected twin, insertion, merge or quick)")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let normalized = s.trim().to_ascii_lowercase();
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == normalized)
            .ok_or_else(|| UnknownAlgorithm(s.to_string()))
    }
}

/// Comparison and data-movement counts of one baseline run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub comparisons: u64,
    /// Swaps for twin and quick, element moves for insertion and merge.
    pub moves: u64,
}

struct Counting<F> {
    compare: F,
    counts: OpCounts,
}

impl<F> Counting<F> {
    fn cmp<T>(&mut self, a: &T, b: &T) -> Ordering
    where
        F: FnMut(&T, &T) -> Ordering,
    {
        self.counts.comparisons += 1;
        (self.compare)(a, b)
    }
}

/// Runs `algo` over `elements` in place and returns its counters.
pub fn sort_with<T: Clone, F>(algo: Algorithm, elements: &mut [T], compare: F) -> OpCounts
where
    F: FnMut(&T, &T) -> Ordering,
{
    match algo {
        Algorithm::Twin => {
            let stats = twin_sort_by(elements, compare);
            OpCounts {
                comparisons: stats.comparisons,
                moves: stats.swaps,
            }
        }
        Algorithm::Insertion => insertion_sort_by(elements, compare),
        Algorithm::Merge => merge_sort_by(elements, compare),
        Algorithm::Quick => quick_sort_by(elements, compare),
    }
}

/// Stable insertion sort; `moves` counts element shifts.
pub fn insertion_sort_by<T, F>(elements: &mut [T], compare: F) -> OpCounts
where
    F: FnMut(&T, &T) -> Ordering,
{
    let mut c = Counting {
        compare,
        counts: OpCounts::default(),
    };
    for i in 1..elements.len() {
        let mut j = i;
        while j > 0 && c.cmp(&elements[j - 1], &elements[j]) == Ordering::Greater {
            elements.swap(j - 1, j);
            c.counts.moves += 1;
            j -= 1;
        }
    }
    c.counts
}

/// Stable top-down merge sort with one scratch buffer; `moves` counts
/// elements written back during merges.
pub fn merge_sort_by<T: Clone, F>(elements: &mut [T], compare: F) -> OpCounts
where
    F: FnMut(&T, &T) -> Ordering,
{
    let mut c = Counting {
        compare,
        counts: OpCounts::default(),
    };
    let mut scratch = Vec::with_capacity(elements.len());
    merge_rec(elements, &mut scratch, &mut c);
    c.counts
}

fn merge_rec<T: Clone, F>(v: &mut [T], scratch: &mut Vec<T>, c: &mut Counting<F>)
where
    F: FnMut(&T, &T) -> Ordering,
{
    let len = v.len();
    if len < 2 {
        return;
    }
    let mid = len / 2;
    merge_rec(&mut v[..mid], scratch, c);
    merge_rec(&mut v[mid..], scratch, c);

    scratch.clear();
    scratch.extend_from_slice(&v[..mid]);
    let (mut left, mut right, mut out) = (0, mid, 0);
    while left < scratch.len() && right < len {
        // Take from the right run only when strictly smaller.
        if c.cmp(&v[right], &scratch[left]) == Ordering::Less {
            v[out] = v[right].clone();
            right += 1;
        } else {
            v[out] = scratch[left].clone();
            left += 1;
        }
        out += 1;
        c.counts.moves += 1;
    }
    while left < scratch.len() {
        v[out] = scratch[left].clone();
        left += 1;
        out += 1;
        c.counts.moves += 1;
    }
}

/// Quicksort with a median-of-three pivot and Hoare-style in-place
/// partitioning. Not stable.
pub fn quick_sort_by<T, F>(elements: &mut [T], compare: F) -> OpCounts
where
    F: FnMut(&T, &T) -> Ordering,
{
    let mut c = Counting {
        compare,
        counts: OpCounts::default(),
    };
    quick_rec(elements, &mut c);
    c.counts
}

fn quick_rec<T, F>(mut v: &mut [T], c: &mut Counting<F>)
where
    F: FnMut(&T, &T) -> Ordering,
{
    loop {
        let len = v.len();
        if len < 2 {
            return;
        }
        if len == 2 {
            if c.cmp(&v[0], &v[1]) == Ordering::Greater {
                v.swap(0, 1);
                c.counts.moves += 1;
            }
            return;
        }

        // Order v[0], v[mid], v[last]; the median lands in v[mid].
        let mid = len / 2;
        let last = len - 1;
        for (a, b) in [(0, mid), (mid, last), (0, mid)] {
            if c.cmp(&v[a], &v[b]) == Ordering::Greater {
                v.swap(a, b);
                c.counts.moves += 1;
            }
        }
        if len == 3 {
            return;
        }
        // Park the pivot at index 1; v[0] <= pivot <= v[last] act as sentinels.
        v.swap(1, mid);
        c.counts.moves += 1;

        let (mut i, mut j) = (1, last);
        loop {
            i += 1;
            while c.cmp(&v[i], &v[1]) == Ordering::Less {
                i += 1;
            }
            j -= 1;
            while c.cmp(&v[j], &v[1]) == Ordering::Greater {
                j -= 1;
            }
            if i >= j {
                break;
            }
            v.swap(i, j);
            c.counts.moves += 1;
        }
        v.swap(1, j);
        c.counts.moves += 1;

        // Recurse into the smaller side, loop on the larger one.
        let (left, rest) = v.split_at_mut(j);
        let right = &mut rest[1..];
        if left.len() < right.len() {
            quick_rec(left, c);
            v = right;
        } else {
            quick_rec(right, c);
            v = left;
        }
    }
}
