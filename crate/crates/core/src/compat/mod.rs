//! Compatible 0-1 matrix pairs and membership in `D̃(k,ℓ)` and `D(k,ℓ)`.
//!
//! `(m, n) ∈ D̃` when 0-1 matrices `V`, `W` share a row-sum vector, have
//! column sums `m` and `n`, and `VᵀW` has no zero entry. `(m, n) ∈ D` when
//! `(m - δ, n - ε) ∈ D̃` for some `δ ∈ {0,1,2}^k`, `ε ∈ {0,1,2}^ℓ`; the
//! certificates for `D` are compatible matrices whose first and last rows
//! carry `δ` and `ε`.

mod search;
mod witness;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bmatrix::{gale_ryser_construct, BinaryMatrix, MatrixError};
use crate::suitability;
use crate::tuples::IntTuple;

pub use search::{dtilde_exact, MAX_CANDIDATES, MAX_PAIR_CELLS};
pub use witness::{
    extend_pair, is_compatible, lemma_extend_rows, trim, validate_witness, WitnessMode,
    WitnessPair,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompatError {
    #[error("matrix has {0} rows, at least 3 are needed")]
    TooFewRows(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("increment {0} has an entry outside {{0,1,2}}")]
    BadIncrement(IntTuple),
    #[error("increments {p} and {q} have different totals")]
    UnequalTotals { p: IntTuple, q: IntTuple },
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OracleStatus {
    Member,
    NonMember,
    BudgetExceeded,
}

#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub status: OracleStatus,
    pub witness: Option<WitnessPair>,
    pub nodes_explored: u64,
}

impl OracleOutcome {
    pub fn is_member(&self) -> bool {
        self.status == OracleStatus::Member
    }
}

/// All `x ∈ {0,1,2}^len` with `base - x ≥ 1` entrywise, ordered by total
/// and then lexicographically.
fn increments(base: &IntTuple) -> Vec<IntTuple> {
    let mut out = vec![Vec::new()];
    for &b in base.parts() {
        let top = b.saturating_sub(1).min(2);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=top).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    let mut out: Vec<IntTuple> = out.into_iter().map(IntTuple::new).collect();
    out.sort_by(|x, y| x.total().cmp(&y.total()).then_with(|| x.cmp(y)));
    out
}

/// Exact membership test for `D`: tries every `(δ, ε)` and asks the `D̃`
/// search about `(m - δ, n - ε)`. Pairs with the same sorted residual are
/// searched once. Each inner search gets the full `budget`.
pub fn d_exact(m: &IntTuple, n: &IntTuple, budget: u64) -> OracleOutcome {
    let deltas = increments(m);
    let epsilons = increments(n);
    let mut tried: HashSet<(Vec<u32>, Vec<u32>)> = HashSet::new();
    let mut nodes = 0u64;
    let mut exhausted = false;
    for delta in &deltas {
        let m_res = m.checked_sub(delta).expect("increment fits");
        for eps in &epsilons {
            let n_res = n.checked_sub(eps).expect("increment fits");
            if m_res.total() != n_res.total() {
                continue;
            }
            if !tried.insert((m_res.sorted().to_vec(), n_res.sorted().to_vec())) {
                continue;
            }
            let inner = dtilde_exact(&m_res, &n_res, budget);
            nodes = nodes.saturating_add(inner.nodes_explored);
            match inner.status {
                OracleStatus::Member => {
                    let base = inner.witness.expect("member carries a witness");
                    let witness = extend_pair(&base, delta, eps).expect("increments are in range");
                    return OracleOutcome {
                        status: OracleStatus::Member,
                        witness: Some(witness),
                        nodes_explored: nodes,
                    };
                }
                OracleStatus::BudgetExceeded => exhausted = true,
                OracleStatus::NonMember => {}
            }
        }
    }
    OracleOutcome {
        status: if exhausted {
            OracleStatus::BudgetExceeded
        } else {
            OracleStatus::NonMember
        },
        witness: None,
        nodes_explored: nodes,
    }
}

/// Lower entries of `d`, largest first and never below 1, until the total
/// is `target`.
fn shave_to_total(mut d: Vec<u32>, target: u64) -> Vec<u32> {
    let mut excess = d.iter().map(|&x| u64::from(x)).sum::<u64>() - target;
    while excess > 0 {
        let (idx, _) = d
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 1)
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .expect("room to shave");
        d[idx] -= 1;
        excess -= 1;
    }
    d
}

/// Witness for a strongly suitable pair: an all-ones `ψ×k` block against a
/// Gale-Ryser realisation of `((k^ψ), c)`, grown by unit rows to
/// `(m - δ, n - ε)` and then bordered by `δ` and `ε`. `None` when the pair
/// is not strongly suitable.
pub fn dtilde_constructive(m: &IntTuple, n: &IntTuple) -> Option<WitnessPair> {
    if m.len() > n.len() {
        return dtilde_constructive(n, m).map(WitnessPair::swap_sides);
    }
    let report = suitability::assess(m, n);
    if !report.strong {
        return None;
    }
    let (k, psi) = (m.len(), report.psi);
    let delta = report.delta.expect("strong report carries delta");
    let eps = report.eps.expect("strong report carries eps");
    let m_res = m.checked_sub(&delta)?;
    let n_res = n.checked_sub(&eps)?;
    let d: Vec<u32> = n_res.parts().iter().map(|&x| x.min(psi)).collect();
    let c = IntTuple::new(shave_to_total(d, k as u64 * u64::from(psi)));
    let w0 = gale_ryser_construct(&IntTuple::repeat(k as u32, psi as usize), &c).ok()?;
    let v0 = BinaryMatrix::ones(psi as usize, k);
    let base = WitnessPair::dtilde(v0, w0);
    let p = m_res.checked_sub(&IntTuple::repeat(psi, k))?;
    let q = n_res.checked_sub(&c)?;
    let grown = lemma_extend_rows(&base, &p, &q).ok()?;
    let witness = extend_pair(&grown, &delta, &eps).ok()?;
    debug_assert!(witness.is_valid());
    Some(witness)
}

/// Try to reach `(m, n)` from a known `D̃` witness `base` (on sorted tuples)
/// by unit-row growth and a `(δ, ε)` border. Used for the `(3,4)` family.
pub fn extend_from_base(m: &IntTuple, n: &IntTuple, base: &WitnessPair) -> Option<WitnessPair> {
    if m.len() != base.m.len() || n.len() != base.n.len() {
        return None;
    }
    let ms = m.sorted_tuple();
    let ns = n.sorted_tuple();
    let bm = base.m.sorted_tuple();
    let bn = base.n.sorted_tuple();
    if base.m != bm || base.n != bn {
        return None;
    }
    let deltas: Vec<IntTuple> = increments(&ms)
        .into_iter()
        .filter(|d| ms.checked_sub(d).is_some_and(|x| x.dominates(&bm)))
        .collect();
    for eps in increments(&ns) {
        let Some(n_res) = ns.checked_sub(&eps) else { continue };
        let Some(q) = n_res.checked_sub(&bn) else { continue };
        for delta in &deltas {
            let p = ms.checked_sub(delta).and_then(|x| x.checked_sub(&bm)).unwrap();
            if p.total() != q.total() {
                continue;
            }
            let grown = lemma_extend_rows(base, &p, &q).ok()?;
            let sorted = extend_pair(&grown, delta, &eps).ok()?;
            let witness = WitnessPair {
                mode: sorted.mode,
                r: sorted.r,
                v: sorted.v.scatter_columns(&m.sorting_permutation()),
                w: sorted.w.scatter_columns(&n.sorting_permutation()),
                m: m.clone(),
                n: n.clone(),
            };
            debug_assert!(witness.is_valid());
            return Some(witness);
        }
    }
    None
}

/// The two `D̃(3,4)` seeds `((2^3),(3,1^3))` and `((2^3),(2^2,1^2))`.
pub fn case34_bases() -> [WitnessPair; 2] {
    let v = BinaryMatrix::from_rows(&[[1u8, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]], 3).unwrap();
    let w = BinaryMatrix::from_rows(
        &[[0u8, 1, 1, 1], [1, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 0]],
        4,
    )
    .unwrap();
    let first = WitnessPair::dtilde(v, w);
    let v = BinaryMatrix::ones(2, 3);
    let w = BinaryMatrix::from_rows(&[[1u8, 1, 1, 0], [1, 1, 0, 1]], 4).unwrap();
    let second = WitnessPair::dtilde(v, w);
    [first, second]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[u32]) -> IntTuple {
        IntTuple::from(v)
    }

    #[test]
    fn increment_order() {
        let incs = increments(&t(&[3, 1, 2]));
        let first: Vec<Vec<u32>> = incs.iter().take(4).map(|x| x.parts().to_vec()).collect();
        assert_eq!(first, vec![vec![0, 0, 0], vec![0, 0, 1], vec![1, 0, 0], vec![1, 0, 1]]);
        assert_eq!(incs.len(), 3 * 2);
    }

    #[test]
    fn d_membership_examples() {
        let out = d_exact(&t(&[3, 2]), &t(&[2, 2]), u64::MAX);
        assert!(out.is_member());
        let w = out.witness.unwrap();
        assert_eq!(w.mode, WitnessMode::D);
        assert_eq!(validate_witness(&w), Ok(()));

        let out = d_exact(&IntTuple::repeat(2, 5), &t(&[3, 2, 1, 1, 1, 1, 1]), u64::MAX);
        assert_eq!(out.status, OracleStatus::NonMember);

        let out = d_exact(&t(&[2, 1]), &t(&[2, 1, 1]), u64::MAX);
        assert_eq!(out.status, OracleStatus::NonMember);
    }

    #[test]
    fn constructive_examples() {
        let w = dtilde_constructive(&t(&[2, 2]), &t(&[2, 1, 1])).unwrap();
        assert_eq!(validate_witness(&w), Ok(()));
        assert_eq!(w.m, t(&[2, 2]));
        assert_eq!(w.n, t(&[2, 1, 1]));

        assert!(dtilde_constructive(&t(&[2, 2, 2]), &t(&[3, 1, 1, 1])).is_none());

        let w = dtilde_constructive(&t(&[1]), &t(&[1])).unwrap();
        assert_eq!(validate_witness(&w), Ok(()));
        assert_eq!(w.v.rows(), vec![vec![0], vec![1], vec![0]]);

        // swapped orientation
        let w = dtilde_constructive(&t(&[2, 1, 1]), &t(&[2, 2])).unwrap();
        assert_eq!(w.m, t(&[2, 1, 1]));
        assert_eq!(validate_witness(&w), Ok(()));
    }

    #[test]
    fn case34_seeds_are_valid() {
        for base in case34_bases() {
            assert_eq!(validate_witness(&base), Ok(()));
        }
        let [seed, _] = case34_bases();
        let w = extend_from_base(&t(&[2, 3, 2]), &t(&[1, 3, 1, 1, 1]), &seed);
        assert!(w.is_none(), "length mismatch");
        let w = extend_from_base(&t(&[2, 3, 2]), &t(&[1, 3, 2, 1]), &seed).unwrap();
        assert_eq!(w.m, t(&[2, 3, 2]));
        assert_eq!(validate_witness(&w), Ok(()));
    }
}
