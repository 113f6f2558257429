//! Twin Sort: alternating even/odd pair passes with an early-exit counter.
//!
//! A pass compares adjacent "twins" of a single parity. Even passes pair
//! `(0,1), (2,3), ...` and odd passes pair `(1,2), (3,4), ...`. A twin is
//! swapped only when its left element strictly exceeds its right element,
//! which makes the sort stable.
//!
//! The sort keeps a run length of consecutive comparisons that did not swap
//! (FALSE conditions). The run resets on every swap and carries across pass
//! boundaries. Once it reaches `n - 1` the comparisons in the run have covered
//! every adjacent pair of an unchanged array, so the array is sorted and the
//! sort exits, possibly in the middle of a pass. Independently of the counter,
//! at most `n` passes are run, which is enough for odd-even transposition to
//! sort any input.
//!
//! Everything here works on the caller's slice in place; the only storage the
//! traced variant allocates is the trace itself.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Which set of twins a pass compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PassParity {
    Even,
    Odd,
}

impl PassParity {
    /// Parity of the pass with the given zero-based index.
    pub fn of_pass(index: usize) -> Self {
        if index.is_multiple_of(2) {
            PassParity::Even
        } else {
            PassParity::Odd
        }
    }

    fn first_index(self) -> usize {
        match self {
            PassParity::Even => 0,
            PassParity::Odd => 1,
        }
    }
}

/// Index pairs compared by a pass of `parity` over `n` elements, in order.
///
/// Even passes yield `⌊n/2⌋` pairs and odd passes `⌊(n-1)/2⌋`.
pub fn pairs_for_pass(parity: PassParity, n: usize) -> impl Iterator<Item = (usize, usize)> {
    (parity.first_index()..n.saturating_sub(1))
        .step_by(2)
        .map(|i| (i, i + 1))
}

/// Counters accumulated over one sort run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SortStats {
    pub n: usize,
    pub comparisons: u64,
    pub swaps: u64,
    /// Passes started, including one cut short by early termination.
    pub passes: u64,
    pub terminated_early: bool,
    /// Current length of the run of consecutive no-swap comparisons.
    pub false_run: u64,
}

impl SortStats {
    pub fn new(n: usize) -> Self {
        SortStats {
            n,
            ..Default::default()
        }
    }

    fn termination_threshold(&self) -> u64 {
        self.n.saturating_sub(1) as u64
    }
}

/// What a single pass did.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PassOutcome {
    pub comparisons: u64,
    pub swaps: u64,
    pub terminated: bool,
}

/// Post-pass state of the array for one pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassSnapshot<T> {
    pub pass: usize,
    pub parity: PassParity,
    pub elements: Vec<T>,
    pub comparisons: u64,
    pub swaps: u64,
}

/// Array snapshots taken after every pass of a traced sort.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassTrace<T> {
    pub initial: Vec<T>,
    pub snapshots: Vec<PassSnapshot<T>>,
}

/// How the FALSE-condition run reacts to a swap.
///
/// Only [`CounterReset::OnSwap`] is sound. `Never` counts every FALSE
/// condition of the whole run and exists so the verification suite can show
/// it catches an unsound counter.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum CounterReset {
    #[default]
    OnSwap,
    Never,
}

/// Runs one pass of `parity` over `elements`, updating `stats`.
///
/// Stops right after the comparison that brings `stats.false_run` to
/// `n - 1` and reports `terminated`.
pub fn run_pass<T, F>(
    elements: &mut [T],
    parity: PassParity,
    stats: &mut SortStats,
    compare: &mut F,
) -> PassOutcome
where
    F: FnMut(&T, &T) -> Ordering,
{
    run_pass_with(elements, parity, stats, compare, CounterReset::OnSwap)
}

fn run_pass_with<T, F>(
    elements: &mut [T],
    parity: PassParity,
    stats: &mut SortStats,
    compare: &mut F,
    reset: CounterReset,
) -> PassOutcome
where
    F: FnMut(&T, &T) -> Ordering,
{
    debug_assert_eq!(stats.n, elements.len());
    let threshold = stats.termination_threshold();
    let mut outcome = PassOutcome::default();
    stats.passes += 1;

    for (i, j) in pairs_for_pass(parity, elements.len()) {
        outcome.comparisons += 1;
        stats.comparisons += 1;
        if compare(&elements[i], &elements[j]) == Ordering::Greater {
            elements.swap(i, j);
            outcome.swaps += 1;
            stats.swaps += 1;
            if reset == CounterReset::OnSwap {
                stats.false_run = 0;
            }
        } else {
            stats.false_run += 1;
        }
        if stats.false_run == threshold {
            stats.terminated_early = true;
            outcome.terminated = true;
            break;
        }
    }
    outcome
}

/// Sorts `elements` ascending in place.
pub fn twin_sort<T: Ord>(elements: &mut [T]) -> SortStats {
    twin_sort_by(elements, T::cmp)
}

/// Sorts `elements` in place so that `compare` never reports a later element
/// as less than an earlier one. Equal elements keep their relative order.
pub fn twin_sort_by<T, F>(elements: &mut [T], compare: F) -> SortStats
where
    F: FnMut(&T, &T) -> Ordering,
{
    twin_sort_by_with(elements, compare, CounterReset::OnSwap)
}

/// [`twin_sort_by`] with a selectable counter policy.
#[doc(hidden)]
pub fn twin_sort_by_with<T, F>(elements: &mut [T], mut compare: F, reset: CounterReset) -> SortStats
where
    F: FnMut(&T, &T) -> Ordering,
{
    let n = elements.len();
    let mut stats = SortStats::new(n);
    if n < 2 {
        return stats;
    }
    for pass in 0..n {
        let outcome = run_pass_with(
            elements,
            PassParity::of_pass(pass),
            &mut stats,
            &mut compare,
            reset,
        );
        if outcome.terminated {
            break;
        }
    }
    stats
}

/// Sorts like [`twin_sort`] and also records every pass.
pub fn twin_sort_traced<T: Ord + Clone>(elements: &mut [T]) -> (SortStats, PassTrace<T>) {
    twin_sort_traced_by(elements, T::cmp)
}

/// Sorts like [`twin_sort_by`] and also records every pass, including one
/// cut short by early termination.
pub fn twin_sort_traced_by<T, F>(elements: &mut [T], mut compare: F) -> (SortStats, PassTrace<T>)
where
    T: Clone,
    F: FnMut(&T, &T) -> Ordering,
{
    let n = elements.len();
    let mut stats = SortStats::new(n);
    let mut trace = PassTrace {
        initial: elements.to_vec(),
        snapshots: Vec::new(),
    };
    if n < 2 {
        return (stats, trace);
    }
    for pass in 0..n {
        let parity = PassParity::of_pass(pass);
        let outcome = run_pass(elements, parity, &mut stats, &mut compare);
        trace.snapshots.push(PassSnapshot {
            pass,
            parity,
            elements: elements.to_vec(),
            comparisons: outcome.comparisons,
            swaps: outcome.swaps,
        });
        if outcome.terminated {
            break;
        }
    }
    (stats, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pairs(parity: PassParity, n: usize) -> Vec<(usize, usize)> {
        pairs_for_pass(parity, n).collect()
    }

    fn is_sorted<T: Ord>(v: &[T]) -> bool {
        v.windows(2).all(|w| w[0] <= w[1])
    }

    #[test]
    fn pair_schedule() {
        assert_eq!(pairs(PassParity::Even, 5), vec![(0, 1), (2, 3)]);
        assert_eq!(pairs(PassParity::Odd, 5), vec![(1, 2), (3, 4)]);
        assert_eq!(pairs(PassParity::Odd, 2), vec![]);
        assert_eq!(pairs(PassParity::Even, 0), vec![]);
        assert_eq!(pairs(PassParity::Even, 1), vec![]);
        assert_eq!(pairs(PassParity::Odd, 1), vec![]);
        assert_eq!(pairs(PassParity::Even, 6), vec![(0, 1), (2, 3), (4, 5)]);
        assert_eq!(pairs(PassParity::Odd, 6), vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn pair_counts() {
        for n in 0..40 {
            assert_eq!(pairs_for_pass(PassParity::Even, n).count(), n / 2);
            assert_eq!(
                pairs_for_pass(PassParity::Odd, n).count(),
                n.saturating_sub(1) / 2
            );
        }
    }

    #[test]
    fn first_two_passes_of_reversed_five() {
        let mut v = [5, 4, 3, 2, 1];
        let mut stats = SortStats::new(5);
        let out = run_pass(&mut v, PassParity::Even, &mut stats, &mut i32::cmp);
        assert_eq!(v, [4, 5, 2, 3, 1]);
        assert_eq!((out.comparisons, out.swaps, out.terminated), (2, 2, false));

        let out = run_pass(&mut v, PassParity::Odd, &mut stats, &mut i32::cmp);
        assert_eq!(v, [4, 2, 5, 1, 3]);
        assert_eq!((out.comparisons, out.swaps, out.terminated), (2, 2, false));
        assert_eq!(stats.passes, 2);
    }

    #[test]
    fn sorted_pair_terminates_in_first_pass() {
        let mut v = [1, 2];
        let mut stats = SortStats::new(2);
        let out = run_pass(&mut v, PassParity::Even, &mut stats, &mut i32::cmp);
        assert_eq!(v, [1, 2]);
        assert_eq!((out.comparisons, out.swaps, out.terminated), (1, 0, true));
        assert!(stats.terminated_early);
    }

    #[test]
    fn false_run_carries_across_passes() {
        // Even pass over [1,2,3] sees one FALSE, the odd pass completes the run.
        let mut v = [1, 2, 3];
        let mut stats = SortStats::new(3);
        let out = run_pass(&mut v, PassParity::Even, &mut stats, &mut i32::cmp);
        assert!(!out.terminated);
        assert_eq!(stats.false_run, 1);
        let out = run_pass(&mut v, PassParity::Odd, &mut stats, &mut i32::cmp);
        assert!(out.terminated);
        assert_eq!(stats.false_run, 2);
    }

    #[test]
    fn mid_pass_termination() {
        // The odd pass swaps (1,2); the next even pass then sees (0,1) and
        // (2,3) as FALSE, and the following odd pass reaches n-1 = 5 on its
        // first comparison without finishing the pass.
        let mut v = [1, 3, 2, 4, 5, 6];
        let stats = twin_sort(&mut v);
        assert_eq!(v, [1, 2, 3, 4, 5, 6]);
        assert!(stats.terminated_early);
        // Pass 0: 3 FALSE. Pass 1: swap, FALSE. Pass 2: 3 FALSE (run 4).
        // Pass 3: first comparison makes the run 5.
        assert_eq!(stats.passes, 4);
        assert_eq!(stats.comparisons, 3 + 2 + 3 + 1);
    }

    #[test]
    fn reversed_five() {
        let mut v = [5, 4, 3, 2, 1];
        let stats = twin_sort(&mut v);
        assert_eq!(v, [1, 2, 3, 4, 5]);
        assert_eq!(stats.comparisons, 10);
        assert_eq!(stats.swaps, 10);
        assert_eq!(stats.passes, 5);
        assert!(!stats.terminated_early);
    }

    #[test]
    fn empty_and_single() {
        let mut v: [i32; 0] = [];
        let stats = twin_sort(&mut v);
        assert_eq!(
            (stats.comparisons, stats.passes, stats.terminated_early),
            (0, 0, false)
        );

        let mut v = [7];
        let (stats, trace) = twin_sort_traced(&mut v);
        assert_eq!((stats.comparisons, stats.passes), (0, 0));
        assert!(trace.snapshots.is_empty());
        assert_eq!(trace.initial, vec![7]);
    }

    #[test]
    fn sorted_five_is_best_case() {
        let mut v = [1, 2, 3, 4, 5];
        let stats = twin_sort(&mut v);
        assert_eq!(v, [1, 2, 3, 4, 5]);
        assert_eq!((stats.comparisons, stats.swaps, stats.passes), (4, 0, 2));
        assert!(stats.terminated_early);
    }

    #[test]
    fn traced_reversed_five() {
        let mut v = [5, 4, 3, 2, 1];
        let (stats, trace) = twin_sort_traced(&mut v);
        let snaps: Vec<Vec<i32>> = trace.snapshots.iter().map(|s| s.elements.clone()).collect();
        assert_eq!(
            snaps,
            vec![
                vec![4, 5, 2, 3, 1],
                vec![4, 2, 5, 1, 3],
                vec![2, 4, 1, 5, 3],
                vec![2, 1, 4, 3, 5],
                vec![1, 2, 3, 4, 5],
            ]
        );
        let parities: Vec<PassParity> = trace.snapshots.iter().map(|s| s.parity).collect();
        assert_eq!(
            parities,
            [
                PassParity::Even,
                PassParity::Odd,
                PassParity::Even,
                PassParity::Odd,
                PassParity::Even
            ]
        );
        assert_eq!(stats.comparisons, 10);
        assert_eq!(stats.swaps, 10);
    }

    #[test]
    fn traced_sorted_three() {
        let mut v = [1, 2, 3];
        let (stats, trace) = twin_sort_traced(&mut v);
        assert_eq!(trace.snapshots.len(), 2);
        assert!(trace.snapshots.iter().all(|s| s.elements == vec![1, 2, 3]));
        assert_eq!(stats.comparisons, 2);
        assert!(stats.terminated_early);
    }

    #[test]
    fn descending_by_inverted_comparator() {
        let mut v = [(2, 'a'), (1, 'b'), (2, 'c'), (3, 'd')];
        twin_sort_by(&mut v, |a, b| b.0.cmp(&a.0));
        assert_eq!(v, [(3, 'd'), (2, 'a'), (2, 'c'), (1, 'b')]);
    }

    #[test]
    fn never_reset_counter_exits_unsorted() {
        let mut v = [1, 4, 2, 3];
        let stats = twin_sort_by_with(&mut v, i32::cmp, CounterReset::Never);
        assert!(stats.terminated_early);
        assert_eq!(v, [1, 2, 4, 3]);
    }

    proptest! {
        #[test]
        fn sorts_and_respects_bounds(mut v in proptest::collection::vec(-20i32..20, 0..60)) {
            let mut expected = v.clone();
            expected.sort();
            let n = v.len() as u64;
            let stats = twin_sort(&mut v);
            prop_assert_eq!(&v, &expected);
            prop_assert!(stats.swaps <= stats.comparisons);
            prop_assert!(stats.comparisons <= n.saturating_sub(1) * n / 2);
            prop_assert!(stats.passes <= n);
            if stats.terminated_early {
                prop_assert_eq!(stats.false_run, n - 1);
            }
        }

        #[test]
        fn trace_snapshots_are_permutations(v in proptest::collection::vec(0u8..8, 0..24)) {
            let mut work = v.clone();
            let (stats, trace) = twin_sort_traced(&mut work);
            let mut sorted_input = v.clone();
            sorted_input.sort();
            prop_assert_eq!(trace.snapshots.len() as u64, stats.passes);
            for (i, snap) in trace.snapshots.iter().enumerate() {
                prop_assert_eq!(snap.pass, i);
                let mut s = snap.elements.clone();
                s.sort();
                prop_assert_eq!(&s, &sorted_input);
            }
            prop_assert!(is_sorted(&work));
        }

        #[test]
        fn full_passes_have_fixed_comparison_counts(v in proptest::collection::vec(0u8..50, 2..30)) {
            let mut work = v.clone();
            let (_, trace) = twin_sort_traced(&mut work);
            let n = v.len() as u64;
            let last = trace.snapshots.len() - 1;
            for snap in &trace.snapshots[..last] {
                let expected = match snap.parity {
                    PassParity::Even => n / 2,
                    PassParity::Odd => (n - 1) / 2,
                };
                prop_assert_eq!(snap.comparisons, expected);
            }
        }
    }
}
