//! Coverage and packing verification.
//!
//! A t-subset X of the alphabet is *covered* by a sequence when X appears
//! inside some window of k+1 consecutive positions. Windows at the tail
//! of a sequence shorter than k+1 are truncated rather than dropped: for
//! t = 2 this is exactly the |i-j| <= k distance formulation, and for
//! longer sequences every truncated trailing window is a suffix of the
//! last full window, so the rule only changes anything when the whole
//! sequence is shorter than one window. Reports carry a flag for that
//! case.

use std::collections::HashMap;

use crate::combin::{for_each_combination, SubsetBitmap, SubsetRanker};
use crate::error::{Error, Result};
use crate::sequence::{RadiusSpec, Sequence};

/// The set of covered t-subsets of {0, …, n-1}, stored as a bitmap over
/// colex ranks.
#[derive(Debug, Clone)]
pub struct CoverSet {
    ranker: SubsetRanker,
    bitmap: SubsetBitmap,
    truncated_rule_fired: bool,
}

impl CoverSet {
    fn new(n: u32, t: u32) -> Result<Self> {
        let ranker = SubsetRanker::new(n, t)?;
        let bitmap = SubsetBitmap::new(ranker.total());
        Ok(Self {
            ranker,
            bitmap,
            truncated_rule_fired: false,
        })
    }

    pub fn total(&self) -> u64 {
        self.ranker.total()
    }

    pub fn covered_count(&self) -> u64 {
        self.bitmap.ones()
    }

    pub fn is_full(&self) -> bool {
        self.bitmap.is_full()
    }

    pub fn contains(&self, subset: &[u32]) -> bool {
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        self.bitmap.contains(self.ranker.rank(subset))
    }

    /// True when coverage was obtained from a sequence shorter than one
    /// window (m <= k) at t >= 3, where the window definition is a
    /// deliberate extension of the full-window rule.
    pub fn truncated_rule_fired(&self) -> bool {
        self.truncated_rule_fired
    }

    /// Covered subsets as sorted tuples, in lexicographic order.
    pub fn covered_subsets(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(self.bitmap.ones() as usize);
        let mut buf = Vec::new();
        for rank in 0..self.bitmap.len() {
            if self.bitmap.contains(rank) {
                self.ranker.unrank(rank, &mut buf);
                out.push(buf.clone());
            }
        }
        out.sort();
        out
    }

    /// Uncovered subsets as sorted tuples, in lexicographic order.
    pub fn uncovered_subsets(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(self.bitmap.zeros() as usize);
        let mut buf = Vec::new();
        self.bitmap.for_each_zero(|rank| {
            self.ranker.unrank(rank, &mut buf);
            out.push(buf.clone());
        });
        out.sort();
        out
    }
}

/// Marks every t-subset of a window of the symbol slice in the bitmap.
///
/// Window length is min(m, k+1); with m >= k+1 only full windows are
/// scanned (trailing truncated windows are suffixes of the last full one
/// and add nothing).
pub(crate) fn scan_windows(
    symbols: &[u32],
    k: u32,
    t: u32,
    ranker: &SubsetRanker,
    bitmap: &mut SubsetBitmap,
) {
    let m = symbols.len();
    if m == 0 || (t as usize) > m {
        return;
    }
    let wlen = (k as usize + 1).min(m);
    let mut wbuf: Vec<u32> = Vec::with_capacity(wlen);
    for start in 0..=(m - wlen) {
        wbuf.clear();
        wbuf.extend_from_slice(&symbols[start..start + wlen]);
        wbuf.sort_unstable();
        wbuf.dedup();
        for_each_combination(&wbuf, t as usize, |comb| {
            bitmap.set(ranker.rank(comb));
        });
    }
}

/// Enumerates the covered t-subsets of `seq` (alphabet = seq's own).
pub fn enumerate_covered_subsets(seq: &Sequence, k: u32, t: u32) -> Result<CoverSet> {
    if k < 1 || t < 1 {
        return Err(Error::InvalidParameters(format!(
            "need k >= 1 and t >= 1, got k={k} t={t}"
        )));
    }
    cover_set(seq.symbols(), seq.alphabet_size(), k, t)
}

pub(crate) fn cover_set(symbols: &[u32], n: u32, k: u32, t: u32) -> Result<CoverSet> {
    let mut cs = CoverSet::new(n, t)?;
    scan_windows(symbols, k, t, &cs.ranker, &mut cs.bitmap);
    cs.truncated_rule_fired = t >= 3 && symbols.len() <= k as usize && cs.covered_count() > 0;
    Ok(cs)
}

/// Verification verdict plus the uncovered subsets.
///
/// Invariant: `valid` ⇔ `uncovered` is empty ⇔ `covered_count == total`.
/// The degenerate n = 1, t = 2 case reads the pair condition at x = y,
/// i.e. the single symbol must occur; it is encoded as a one-element
/// universe whose "subset" is the 1-tuple `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CoverageReport {
    pub valid: bool,
    pub covered_count: u64,
    pub total: u64,
    pub uncovered: Vec<Vec<u32>>,
    pub truncated_window_rule_fired: bool,
}

/// Checks whether `seq` covers every t-subset of {0, …, spec.n-1}.
pub fn verify_radius(seq: &Sequence, spec: &RadiusSpec) -> Result<CoverageReport> {
    if let Some(&bad) = seq.symbols().iter().find(|&&s| s >= spec.n) {
        return Err(Error::SymbolOutOfRange {
            symbol: bad as u64,
            n: spec.n as u64,
        });
    }
    if spec.n == 1 && spec.t == 2 {
        let occupied = !seq.is_empty();
        return Ok(CoverageReport {
            valid: occupied,
            covered_count: occupied as u64,
            total: 1,
            uncovered: if occupied { vec![] } else { vec![vec![0]] },
            truncated_window_rule_fired: false,
        });
    }
    let cs = cover_set(seq.symbols(), spec.n, spec.k, spec.t)?;
    Ok(CoverageReport {
        valid: cs.is_full(),
        covered_count: cs.covered_count(),
        total: cs.total(),
        uncovered: cs.uncovered_subsets(),
        truncated_window_rule_fired: cs.truncated_rule_fired(),
    })
}

/// The uncovered t-subsets, in lexicographic order. Constructors use this
/// to drive greedy completion.
pub fn coverage_deficit(seq: &Sequence, spec: &RadiusSpec) -> Result<Vec<Vec<u32>>> {
    Ok(verify_radius(seq, spec)?.uncovered)
}

/// Packing verdict; `witness` is a t-subset occurring in more than one
/// position when the check fails.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PackingReport {
    pub valid: bool,
    pub witness: Option<Vec<u32>>,
}

/// Checks the packing property: every t-subset X occurs as the value set
/// of an increasing index tuple z_1 < … < z_t with z_t - z_1 <= k at most
/// once.
pub fn verify_packing(seq: &Sequence, k: u32, t: u32) -> Result<PackingReport> {
    if k < 1 || t < 2 {
        return Err(Error::InvalidParameters(format!(
            "need k >= 1 and t >= 2, got k={k} t={t}"
        )));
    }
    let symbols = seq.symbols();
    let m = symbols.len();
    let mut counts: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut witness: Option<Vec<u32>> = None;

    'outer: for p in 0..m {
        let hi = (p + k as usize).min(m.saturating_sub(1));
        if hi <= p {
            continue;
        }
        let tail: Vec<usize> = (p + 1..=hi).collect();
        if tail.len() + 1 < t as usize {
            continue;
        }
        let mut dup: Option<Vec<u32>> = None;
        for_each_combination(&tail, t as usize - 1, |rest| {
            if dup.is_some() {
                return;
            }
            let mut values: Vec<u32> = Vec::with_capacity(t as usize);
            values.push(symbols[p]);
            values.extend(rest.iter().map(|&z| symbols[z]));
            values.sort_unstable();
            let distinct = values.windows(2).all(|w| w[0] != w[1]);
            if !distinct {
                return; // not a t-subset occurrence
            }
            let c = counts.entry(values.clone()).or_insert(0);
            *c += 1;
            if *c == 2 {
                dup = Some(values);
            }
        });
        if let Some(w) = dup {
            witness = Some(w);
            break 'outer;
        }
    }

    Ok(PackingReport {
        valid: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::example_8ary_3radius;
    use itertools::Itertools;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    // Independent window-scan oracle: collect subsets from every window
    // start, including truncated ones, via itertools.
    fn oracle_covered(symbols: &[u32], k: u32, t: u32) -> BTreeSet<Vec<u32>> {
        let mut out = BTreeSet::new();
        let m = symbols.len();
        for start in 0..m {
            let end = (start + k as usize + 1).min(m);
            let distinct: BTreeSet<u32> = symbols[start..end].iter().copied().collect();
            for comb in distinct.into_iter().combinations(t as usize) {
                out.insert(comb);
            }
        }
        out
    }

    // Independent pair oracle: the |i-j| <= k distance formulation.
    fn oracle_pairs(symbols: &[u32], k: u32) -> BTreeSet<Vec<u32>> {
        let mut out = BTreeSet::new();
        for i in 0..symbols.len() {
            for j in i + 1..(i + k as usize + 1).min(symbols.len()) {
                if symbols[i] != symbols[j] {
                    let mut p = vec![symbols[i], symbols[j]];
                    p.sort_unstable();
                    out.insert(p);
                }
            }
        }
        out
    }

    // Independent packing oracle: count every increasing index tuple.
    fn oracle_packing(symbols: &[u32], k: u32, t: u32) -> (bool, Option<Vec<u32>>) {
        let m = symbols.len();
        let mut counts: HashMap<Vec<u32>, u32> = HashMap::new();
        for tuple in (0..m).combinations(t as usize) {
            if tuple[t as usize - 1] - tuple[0] > k as usize {
                continue;
            }
            let mut values: Vec<u32> = tuple.iter().map(|&z| symbols[z]).collect();
            values.sort_unstable();
            if values.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let c = counts.entry(values.clone()).or_insert(0);
            *c += 1;
            if *c == 2 {
                return (false, Some(values));
            }
        }
        (true, None)
    }

    #[test]
    fn paper_example_covers_all_28_pairs() {
        let seq = example_8ary_3radius();
        let cs = enumerate_covered_subsets(&seq, 3, 2).unwrap();
        assert_eq!(cs.total(), 28);
        assert_eq!(cs.covered_count(), 28);
        let report = verify_radius(&seq, &RadiusSpec::pairs(8, 3).unwrap()).unwrap();
        assert!(report.valid);
        assert!(report.uncovered.is_empty());
    }

    #[test]
    fn empty_sequence_covers_nothing() {
        let seq = Sequence::new(4, vec![]).unwrap();
        let cs = enumerate_covered_subsets(&seq, 2, 2).unwrap();
        assert_eq!(cs.covered_count(), 0);
    }

    #[test]
    fn adjacent_pairs_only_at_k1() {
        let seq = Sequence::new(3, vec![0, 1, 2]).unwrap();
        let cs = enumerate_covered_subsets(&seq, 1, 2).unwrap();
        assert_eq!(cs.covered_subsets(), vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn invalid_sequence_lists_uncovered_lexicographically() {
        let seq = Sequence::new(4, vec![0, 1, 2, 3]).unwrap();
        let report = verify_radius(&seq, &RadiusSpec::pairs(4, 1).unwrap()).unwrap();
        assert!(!report.valid);
        assert_eq!(report.uncovered, vec![vec![0, 2], vec![0, 3], vec![1, 3]]);
        assert_eq!(report.covered_count, 3);
        assert_eq!(report.total, 6);
    }

    #[test]
    fn single_symbol_alphabet_is_an_occupancy_check() {
        let spec = RadiusSpec { n: 1, k: 2, t: 2 };
        let occupied = Sequence::new(1, vec![0]).unwrap();
        let report = verify_radius(&occupied, &spec).unwrap();
        assert!(report.valid);
        let empty = Sequence::new(1, vec![]).unwrap();
        let report = verify_radius(&empty, &spec).unwrap();
        assert!(!report.valid);
        assert_eq!(report.uncovered, vec![vec![0]]);
        assert_eq!(report.covered_count, 0);
        assert_eq!(report.total, 1);
    }

    #[test]
    fn out_of_range_symbol_is_an_input_error() {
        let seq = Sequence::new(8, vec![0, 7]).unwrap();
        let err = verify_radius(&seq, &RadiusSpec::pairs(4, 1).unwrap()).unwrap_err();
        assert!(matches!(err, Error::SymbolOutOfRange { symbol: 7, n: 4 }));
    }

    #[test]
    fn truncated_rule_flagged_only_below_one_window() {
        // m = 3 <= k = 5 at t = 3: the whole sequence is one truncated window
        let seq = Sequence::new(3, vec![0, 1, 2]).unwrap();
        let report = verify_radius(&seq, &RadiusSpec::new(3, 5, 3).unwrap()).unwrap();
        assert!(report.valid);
        assert!(report.truncated_window_rule_fired);
        // same coverage with m >= k+1 does not flag
        let seq = Sequence::new(3, vec![0, 1, 2, 0]).unwrap();
        let report = verify_radius(&seq, &RadiusSpec::new(3, 2, 3).unwrap()).unwrap();
        assert!(report.valid);
        assert!(!report.truncated_window_rule_fired);
    }

    #[test]
    fn coverage_deficit_examples() {
        let seq = example_8ary_3radius();
        assert!(coverage_deficit(&seq, &RadiusSpec::pairs(8, 3).unwrap())
            .unwrap()
            .is_empty());
        let seq = Sequence::new(4, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(
            coverage_deficit(&seq, &RadiusSpec::pairs(4, 1).unwrap()).unwrap(),
            vec![vec![0, 2], vec![0, 3], vec![1, 3]]
        );
    }

    #[test]
    fn window_scan_matches_oracle_on_random_sequences() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..60 {
            let n = rng.random_range(2..9u32);
            let m = rng.random_range(0..24usize);
            let k = rng.random_range(1..5u32);
            let t = rng.random_range(2..=(k + 1).min(n.max(2)));
            let symbols: Vec<u32> = (0..m).map(|_| rng.random_range(0..n)).collect();
            let seq = Sequence::new(n, symbols.clone()).unwrap();
            let cs = enumerate_covered_subsets(&seq, k, t).unwrap();
            let got: BTreeSet<Vec<u32>> = cs.covered_subsets().into_iter().collect();
            assert_eq!(got, oracle_covered(&symbols, k, t), "n={n} k={k} t={t}");
        }
    }

    #[test]
    fn packing_examples() {
        let seq = Sequence::new(3, vec![0, 1, 2, 0]).unwrap();
        assert!(verify_packing(&seq, 1, 2).unwrap().valid);

        let seq = Sequence::new(2, vec![0, 1, 0, 1]).unwrap();
        let report = verify_packing(&seq, 1, 2).unwrap();
        assert!(!report.valid);
        assert_eq!(report.witness, Some(vec![0, 1]));
    }

    #[test]
    fn packing_matches_bruteforce_on_random_sequences() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let symbols: Vec<u32> = (0..30).map(|_| rng.random_range(0..10u32)).collect();
            let seq = Sequence::new(10, symbols.clone()).unwrap();
            let got = verify_packing(&seq, 2, 3).unwrap();
            let (valid, witness) = oracle_packing(&symbols, 2, 3);
            assert_eq!(got.valid, valid);
            assert_eq!(got.witness, witness);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn pair_coverage_equals_distance_formulation(
            symbols in proptest::collection::vec(0u32..6, 0..30),
            k in 1u32..5,
        ) {
            let seq = Sequence::new(6, symbols.clone()).unwrap();
            let cs = enumerate_covered_subsets(&seq, k, 2).unwrap();
            let got: BTreeSet<Vec<u32>> = cs.covered_subsets().into_iter().collect();
            prop_assert_eq!(got, oracle_pairs(&symbols, k));
        }

        #[test]
        fn coverage_monotone_in_k_and_suffix(
            symbols in proptest::collection::vec(0u32..6, 0..24),
            suffix in proptest::collection::vec(0u32..6, 0..8),
            k in 1u32..4,
            t in 2u32..4,
        ) {
            let seq = Sequence::new(6, symbols.clone()).unwrap();
            let base: BTreeSet<Vec<u32>> =
                enumerate_covered_subsets(&seq, k, t).unwrap().covered_subsets().into_iter().collect();

            let wider: BTreeSet<Vec<u32>> =
                enumerate_covered_subsets(&seq, k + 1, t).unwrap().covered_subsets().into_iter().collect();
            prop_assert!(base.is_subset(&wider));

            let mut extended = symbols.clone();
            extended.extend_from_slice(&suffix);
            let longer_seq = Sequence::new(6, extended).unwrap();
            let longer: BTreeSet<Vec<u32>> =
                enumerate_covered_subsets(&longer_seq, k, t).unwrap().covered_subsets().into_iter().collect();
            prop_assert!(base.is_subset(&longer));
        }

        #[test]
        fn validity_is_monotone_in_k(
            symbols in proptest::collection::vec(0u32..5, 1..40),
            k in 1u32..4,
        ) {
            let seq = Sequence::new(5, symbols).unwrap();
            let narrow = verify_radius(&seq, &RadiusSpec::pairs(5, k).unwrap()).unwrap();
            let wide = verify_radius(&seq, &RadiusSpec::pairs(5, k + 1).unwrap()).unwrap();
            prop_assert!(!narrow.valid || wide.valid);
        }

        #[test]
        fn packing_agrees_with_bruteforce_short(
            symbols in proptest::collection::vec(0u32..5, 0..20),
            k in 1u32..4,
            t in 2u32..4,
        ) {
            let seq = Sequence::new(5, symbols.clone()).unwrap();
            let got = verify_packing(&seq, k, t).unwrap();
            let (valid, witness) = oracle_packing(&symbols, k, t);
            prop_assert_eq!(got.valid, valid);
            prop_assert_eq!(got.witness, witness);
        }
    }
}
