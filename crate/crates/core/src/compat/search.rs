//! Exact depth-first decision of `(m, n) ∈ D̃`.
//!
//! A witness is a multiset of row pairs `(v, w)` with `|v| = |w| ≥ 1` whose
//! column sums are `m` and `n` and which together meet every
//! (V-column, W-column) pair. Zero rows are dropped. The search works on the
//! sorted tuples and only emits rows in strictly decreasing lexicographic
//! order of `v‖w`, each of which must meet some pair not met by the rows
//! before it. Once every pair is met, the leftover column demand is paired
//! off in unit rows, which never disturbs what has been met.

use crate::bmatrix::BinaryMatrix;
use crate::tuples::IntTuple;

use super::{OracleOutcome, OracleStatus, WitnessPair};

/// Largest `k·ℓ` the search handles (pairs are tracked in a `u128`).
pub const MAX_PAIR_CELLS: usize = 128;
/// Largest number of distinct candidate rows, `C(k+ℓ, k) - 1`.
pub const MAX_CANDIDATES: u128 = 1 << 21;

#[derive(Debug, Clone, Copy)]
struct Candidate {
    v: u64,
    w: u64,
    cover: u128,
}

struct Search {
    k: usize,
    l: usize,
    cands: Vec<Candidate>,
    suffix_cover: Vec<u128>,
    col_masks: Vec<u128>,
    row_block: u128,
    full: u128,
    a: Vec<u32>,
    b: Vec<u32>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
        if acc > MAX_CANDIDATES * 4 {
            return u128::MAX;
        }
    }
    acc
}

/// All `size`-subsets of `0..n` as bitmasks.
fn subsets(n: usize, size: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, left: usize, cur: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for i in start..=n - left {
            rec(i + 1, n, left - 1, cur | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, size, 0, &mut out);
    out
}

/// Reverse the low `len` bits so that column 0 is the most significant.
fn lex_bits(mask: u64, len: usize) -> u128 {
    (0..len)
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| 1u128 << (len - 1 - i))
        .sum()
}

/// Returns `None` when the instance exceeds the supported size.
fn build(ms: &[u32], ns: &[u32], budget: u64) -> Option<Search> {
    let (k, l) = (ms.len(), ns.len());
    if k > 63 || l > 63 || k * l > MAX_PAIR_CELLS {
        return None;
    }
    if binomial((k + l) as u128, k as u128) > MAX_CANDIDATES {
        return None;
    }
    let mut keyed = Vec::new();
    for size in 1..=k.min(l) {
        let vs = subsets(k, size);
        let ws = subsets(l, size);
        for &v in &vs {
            for &w in &ws {
                let cover = (0..k)
                    .filter(|&i| v >> i & 1 == 1)
                    .fold(0u128, |acc, i| acc | (w as u128) << (i * l));
                let key = lex_bits(v, k) << l | lex_bits(w, l);
                keyed.push((key, Candidate { v, w, cover }));
            }
        }
    }
    keyed.sort_by(|x, y| y.0.cmp(&x.0));
    let cands: Vec<Candidate> = keyed.into_iter().map(|(_, c)| c).collect();
    let mut suffix_cover = vec![0u128; cands.len() + 1];
    for idx in (0..cands.len()).rev() {
        suffix_cover[idx] = suffix_cover[idx + 1] | cands[idx].cover;
    }
    let row_block = if l == 128 { u128::MAX } else { (1u128 << l) - 1 };
    let full = if k * l == 128 { u128::MAX } else { (1u128 << (k * l)) - 1 };
    let col_masks = (0..l)
        .map(|j| (0..k).fold(0u128, |acc, i| acc | 1u128 << (i * l + j)))
        .collect();
    Some(Search {
        k,
        l,
        cands,
        suffix_cover,
        col_masks,
        row_block,
        full,
        a: ms.to_vec(),
        b: ns.to_vec(),
        chosen: Vec::new(),
        nodes: 0,
        budget,
    })
}

impl Search {
    fn active(demand: &[u32]) -> u64 {
        demand
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .fold(0u64, |acc, (i, _)| acc | 1 << i)
    }

    /// Exact feasibility tests on the uncovered pairs.
    fn hopeless(&self, uncovered: u128, start: usize, act_v: u64, act_w: u64) -> bool {
        if uncovered & !self.suffix_cover[start] != 0 {
            return true;
        }
        let mut coverable = 0u128;
        for i in 0..self.k {
            if act_v >> i & 1 == 1 {
                coverable |= (act_w as u128) << (i * self.l);
            }
        }
        if uncovered & !coverable != 0 {
            return true;
        }
        // a future row has at most this many ones on either side
        let widest = act_v.count_ones().min(act_w.count_ones());
        for i in 0..self.k {
            let missing = ((uncovered >> (i * self.l)) & self.row_block).count_ones();
            if missing > self.a[i].saturating_mul(widest) {
                return true;
            }
        }
        for j in 0..self.l {
            let missing = (uncovered & self.col_masks[j]).count_ones();
            if missing > self.b[j].saturating_mul(widest) {
                return true;
            }
        }
        false
    }

    fn apply(&mut self, c: Candidate, sign: bool) {
        for i in 0..self.k {
            if c.v >> i & 1 == 1 {
                if sign {
                    self.a[i] -= 1;
                } else {
                    self.a[i] += 1;
                }
            }
        }
        for j in 0..self.l {
            if c.w >> j & 1 == 1 {
                if sign {
                    self.b[j] -= 1;
                } else {
                    self.b[j] += 1;
                }
            }
        }
    }

    fn dfs(&mut self, start: usize, covered: u128) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        if covered == self.full {
            return Step::Found;
        }
        let uncovered = self.full & !covered;
        let act_v = Self::active(&self.a);
        let act_w = Self::active(&self.b);
        if self.hopeless(uncovered, start, act_v, act_w) {
            return Step::Dead;
        }
        for idx in start..self.cands.len() {
            if uncovered & !self.suffix_cover[idx] != 0 {
                break;
            }
            let c = self.cands[idx];
            if c.cover & uncovered == 0 || c.v & !act_v != 0 || c.w & !act_w != 0 {
                continue;
            }
            self.apply(c, true);
            self.chosen.push(idx);
            match self.dfs(idx + 1, covered | c.cover) {
                Step::Dead => {}
                other => return other,
            }
            self.chosen.pop();
            self.apply(c, false);
        }
        Step::Dead
    }

    /// Chosen rows followed by unit rows pairing off the residual demand.
    fn witness_rows(&self) -> (Vec<u64>, Vec<u64>) {
        let mut vrows: Vec<u64> = self.chosen.iter().map(|&i| self.cands[i].v).collect();
        let mut wrows: Vec<u64> = self.chosen.iter().map(|&i| self.cands[i].w).collect();
        let units = |d: &[u32]| -> Vec<usize> {
            d.iter()
                .enumerate()
                .flat_map(|(i, &c)| std::iter::repeat_n(i, c as usize))
                .collect()
        };
        for (i, j) in units(&self.a).into_iter().zip(units(&self.b)) {
            vrows.push(1 << i);
            wrows.push(1 << j);
        }
        (vrows, wrows)
    }
}

/// Exact membership test for `D̃`. The node budget bounds the number of
/// search nodes; instances beyond the supported size report
/// `BudgetExceeded` without searching.
pub fn dtilde_exact(m: &IntTuple, n: &IntTuple, budget: u64) -> OracleOutcome {
    let non_member = OracleOutcome {
        status: OracleStatus::NonMember,
        witness: None,
        nodes_explored: 0,
    };
    if m.is_empty() || n.is_empty() || m.total() != n.total() {
        return non_member;
    }
    if m.parts().contains(&0) || n.parts().contains(&0) {
        return non_member;
    }
    let pm = m.sorting_permutation();
    let pn = n.sorting_permutation();
    let Some(mut search) = build(m.sorted(), n.sorted(), budget) else {
        return OracleOutcome {
            status: OracleStatus::BudgetExceeded,
            witness: None,
            nodes_explored: 0,
        };
    };
    let step = search.dfs(0, 0);
    let nodes_explored = search.nodes.min(budget);
    match step {
        Step::Found => {
            let (vrows, wrows) = search.witness_rows();
            let v = BinaryMatrix::from_masks(&vrows, m.len()).scatter_columns(&pm);
            let w = BinaryMatrix::from_masks(&wrows, n.len()).scatter_columns(&pn);
            let witness = WitnessPair::dtilde(v, w);
            debug_assert!(witness.is_valid());
            OracleOutcome {
                status: OracleStatus::Member,
                witness: Some(witness),
                nodes_explored,
            }
        }
        Step::Dead => OracleOutcome {
            nodes_explored,
            ..non_member
        },
        Step::OutOfBudget => OracleOutcome {
            status: OracleStatus::BudgetExceeded,
            witness: None,
            nodes_explored,
        },
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::compat::validate_witness;

    fn t(v: &[u32]) -> IntTuple {
        IntTuple::from(v)
    }

    /// Unpruned reference: explores every sequence of nonzero row pairs that
    /// fits the demands, memoising dead states, and accepts only when all
    /// demand is used and every pair is met.
    fn brute_force_member(m: &[u32], n: &[u32]) -> bool {
        let (k, l) = (m.len(), n.len());
        if m.iter().sum::<u32>() != n.iter().sum::<u32>() {
            return false;
        }
        let mut rows = Vec::new();
        for v in 1u64..1 << k {
            for w in 1u64..1 << l {
                if v.count_ones() == w.count_ones() {
                    rows.push((v, w));
                }
            }
        }
        let full: u128 = (1u128 << (k * l)) - 1;
        fn rec(
            a: &mut Vec<u32>,
            b: &mut Vec<u32>,
            covered: u128,
            rows: &[(u64, u64)],
            l: usize,
            full: u128,
            dead: &mut HashSet<(Vec<u32>, Vec<u32>, u128)>,
        ) -> bool {
            if a.iter().all(|&x| x == 0) {
                return b.iter().all(|&x| x == 0) && covered == full;
            }
            let key = (a.clone(), b.clone(), covered);
            if dead.contains(&key) {
                return false;
            }
            for &(v, w) in rows {
                let fits_v = (0..a.len()).all(|i| v >> i & 1 == 0 || a[i] > 0);
                let fits_w = (0..b.len()).all(|j| w >> j & 1 == 0 || b[j] > 0);
                if !fits_v || !fits_w {
                    continue;
                }
                let mut cov = covered;
                for i in 0..a.len() {
                    if v >> i & 1 == 1 {
                        a[i] -= 1;
                        cov |= (w as u128) << (i * l);
                    }
                }
                for j in 0..b.len() {
                    if w >> j & 1 == 1 {
                        b[j] -= 1;
                    }
                }
                let ok = rec(a, b, cov, rows, l, full, dead);
                for i in 0..a.len() {
                    if v >> i & 1 == 1 {
                        a[i] += 1;
                    }
                }
                for j in 0..b.len() {
                    if w >> j & 1 == 1 {
                        b[j] += 1;
                    }
                }
                if ok {
                    return true;
                }
            }
            dead.insert(key);
            false
        }
        rec(
            &mut m.to_vec(),
            &mut n.to_vec(),
            0,
            &rows,
            l,
            full,
            &mut HashSet::new(),
        )
    }

    #[test]
    fn displayed_example_is_member() {
        let out = dtilde_exact(&t(&[2, 2, 2]), &t(&[3, 1, 1, 1]), u64::MAX);
        assert_eq!(out.status, OracleStatus::Member);
        assert_eq!(validate_witness(out.witness.as_ref().unwrap()), Ok(()));
    }

    #[test]
    fn known_non_members() {
        let out = dtilde_exact(&t(&[2, 2, 2, 2]), &t(&[3, 1, 1, 1, 1, 1]), u64::MAX);
        assert_eq!(out.status, OracleStatus::NonMember);
        let out = dtilde_exact(&t(&[3, 2]), &t(&[1, 1, 1, 1, 1]), u64::MAX);
        assert_eq!(out.status, OracleStatus::NonMember);
        let out = dtilde_exact(&t(&[2, 2]), &t(&[2, 1]), u64::MAX);
        assert_eq!(out.status, OracleStatus::NonMember);
        assert_eq!(out.nodes_explored, 0);
    }

    #[test]
    fn witness_respects_caller_column_order() {
        let m = t(&[1, 3, 2]);
        let n = t(&[2, 1, 3]);
        let out = dtilde_exact(&m, &n, u64::MAX);
        if let Some(w) = out.witness {
            assert_eq!(w.m, m);
            assert_eq!(w.n, n);
            assert_eq!(validate_witness(&w), Ok(()));
        }
    }

    #[test]
    fn tiny_budget_is_reported() {
        let out = dtilde_exact(&t(&[2, 2, 2, 2]), &t(&[3, 1, 1, 1, 1, 1]), 1);
        assert_eq!(out.status, OracleStatus::BudgetExceeded);
        assert!(out.witness.is_none());
    }

    #[test]
    fn oversized_instances_are_not_searched() {
        let out = dtilde_exact(&IntTuple::repeat(1, 12), &IntTuple::repeat(1, 12), u64::MAX);
        assert_eq!(out.status, OracleStatus::BudgetExceeded);
        assert_eq!(out.nodes_explored, 0);
    }

    #[test]
    fn agrees_with_unpruned_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut checked = 0;
        let mut members = 0;
        let mut seen = HashSet::new();
        while checked < 250 {
            let total = rng.gen_range(1..=8u32);
            let l = rng.gen_range(1..=5usize.min(total as usize));
            let k = rng.gen_range(1..=l);
            if k as u32 > total {
                continue;
            }
            let random_composition = |len: usize, rng: &mut ChaCha8Rng| {
                let mut parts = vec![1u32; len];
                for _ in 0..total - len as u32 {
                    let i = rng.gen_range(0..len);
                    parts[i] += 1;
                }
                parts
            };
            let m = random_composition(k, &mut rng);
            let n = random_composition(l, &mut rng);
            if !seen.insert((m.clone(), n.clone())) {
                continue;
            }
            let expected = brute_force_member(&m, &n);
            let out = dtilde_exact(&IntTuple::new(m.clone()), &IntTuple::new(n.clone()), u64::MAX);
            assert_eq!(
                out.status == OracleStatus::Member,
                expected,
                "m={m:?} n={n:?}"
            );
            if let Some(w) = out.witness {
                assert_eq!(validate_witness(&w), Ok(()));
                members += 1;
            }
            checked += 1;
        }
        assert!(members > 20, "sample should contain members, got {members}");
    }
}
