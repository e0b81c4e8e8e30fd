//! Weak and strong suitability, the isolated-vertex bound `ι_max`, and the
//! arithmetic conditions that bracket always join-orthogonalisability.
//!
//! Every function taking a pair of tuples accepts them in either order and
//! works with the shorter tuple as `m` (length `k`) and the longer as `n`
//! (length `ℓ`). Conjugates are read from the sorted views.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tuples::{weakly_majorized, IntTuple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuitabilityError {
    #[error("expected k <= l (k < l for iota_max), got k = {k}, l = {l}")]
    Order { k: usize, l: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Outcome of the closed-form suitability tests.
///
/// `delta` and `eps` illustrate weak suitability (and strong suitability
/// when `strong` holds). They refer to the shorter and the longer tuple
/// respectively; `swapped` records that the caller passed the longer first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuitabilityReport {
    pub psi: u32,
    pub weak: bool,
    pub strong: bool,
    pub delta: Option<IntTuple>,
    pub eps: Option<IntTuple>,
    pub swapped: bool,
}

/// `⌈l/k⌉`.
pub fn psi(k: usize, l: usize) -> Result<u32, SuitabilityError> {
    if k == 0 || k > l {
        return Err(SuitabilityError::Order { k, l });
    }
    Ok(l.div_ceil(k) as u32)
}

/// `max{(ψ-1)k, ψ(ℓ-k)/(ψ-1)}` rounded down, for `k < ℓ`.
pub fn iota_max(k: usize, l: usize) -> Result<u64, SuitabilityError> {
    if k == 0 || k >= l {
        return Err(SuitabilityError::Order { k, l });
    }
    let p = u64::from(psi(k, l)?);
    let (k, l) = (k as u64, l as u64);
    Ok(((p - 1) * k).max(p * (l - k) / (p - 1)))
}

fn oriented<'a>(m: &'a IntTuple, n: &'a IntTuple) -> (&'a IntTuple, &'a IntTuple, bool) {
    if m.len() > n.len() {
        (n, m, true)
    } else {
        (m, n, false)
    }
}

fn psi_of(m: &IntTuple, n: &IntTuple) -> u32 {
    psi(m.len(), n.len()).expect("non-empty oriented pair")
}

fn star(x: &IntTuple, j: u32) -> i64 {
    i64::from(x.conjugate_at(j))
}

/// `|n| - n*_2 - n*_3 <= |m| <= |n| + m*_{ψ+1} + m*_{ψ+2}`.
fn two_sided(m: &IntTuple, n: &IntTuple, p: u32) -> bool {
    let (tm, tn) = (m.total() as i64, n.total() as i64);
    tn - star(n, 2) - star(n, 3) <= tm && tm <= tn + star(m, p + 1) + star(m, p + 2)
}

/// Spread `amount` over coordinates with the given capacities, largest
/// capacity first and lowest index on ties. `None` if capacity runs out.
fn spread(caps: &[u32], mut amount: u64) -> Option<Vec<u32>> {
    let mut order: Vec<usize> = (0..caps.len()).collect();
    order.sort_by(|&a, &b| caps[b].cmp(&caps[a]));
    let mut out = vec![0u32; caps.len()];
    for i in order {
        let take = amount.min(u64::from(caps[i]));
        out[i] = take as u32;
        amount -= take;
    }
    (amount == 0).then_some(out)
}

/// Closed-form suitability with an illustrating `(δ, ε)`.
///
/// Only the heavier side is reduced. When `|n| > |m|` the reduction of `n`
/// is charged to parts above `ψ` before parts at or below it, which keeps
/// `Σ_{j≤ψ} (n-ε)*_j` as large as possible; strong suitability is then read
/// off that single `ε`.
pub fn assess(m: &IntTuple, n: &IntTuple) -> SuitabilityReport {
    let (m, n, swapped) = oriented(m, n);
    let p = psi_of(m, n);
    let (k, l) = (m.len(), n.len());
    let mut report = SuitabilityReport {
        psi: p,
        weak: false,
        strong: false,
        delta: None,
        eps: None,
        swapped,
    };
    if !m.all_at_least(p) {
        return report;
    }
    let (tm, tn) = (m.total(), n.total());
    let (delta, eps) = if tm >= tn {
        let caps: Vec<u32> = m.parts().iter().map(|&x| (x - p).min(2)).collect();
        match spread(&caps, tm - tn) {
            Some(d) => (IntTuple::new(d), IntTuple::repeat(0, l)),
            None => return report,
        }
    } else {
        let above: Vec<u32> = n.parts().iter().map(|&x| x.saturating_sub(p).min(2)).collect();
        let room: Vec<u32> = n.parts().iter().map(|&x| x.saturating_sub(1).min(2)).collect();
        let excess = tn - tm;
        let first_pass = excess.min(above.iter().map(|&x| u64::from(x)).sum());
        let mut e = spread(&above, first_pass).expect("within capacity");
        let rest: Vec<u32> = room.iter().zip(&e).map(|(r, x)| r - x).collect();
        match spread(&rest, excess - first_pass) {
            Some(extra) => e.iter_mut().zip(extra).for_each(|(x, y)| *x += y),
            None => return report,
        }
        (IntTuple::repeat(0, k), IntTuple::new(e))
    };
    let reduced: u64 = n
        .parts()
        .iter()
        .zip(eps.parts())
        .map(|(&x, &e)| u64::from((x - e).min(p)))
        .sum();
    report.weak = true;
    report.strong = reduced >= k as u64 * u64::from(p);
    report.delta = Some(delta);
    report.eps = Some(eps);
    report
}

pub fn weakly_suitable(m: &IntTuple, n: &IntTuple) -> bool {
    assess(m, n).weak
}

pub fn strongly_suitable(m: &IntTuple, n: &IntTuple) -> bool {
    assess(m, n).strong
}

/// Reductions `x ∈ {0,1,2}^len` of `base` keeping every entry at least
/// `floor`, each with its total, in lexicographic order.
fn reductions(base: &IntTuple, floor: u32) -> Vec<(Vec<u32>, u64)> {
    let mut out = vec![(Vec::new(), 0u64)];
    for &b in base.parts() {
        let top = b.saturating_sub(floor).min(2);
        if b < floor {
            return Vec::new();
        }
        out = out
            .into_iter()
            .flat_map(|(prefix, s)| {
                (0..=top).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    (v, s + u64::from(x))
                })
            })
            .collect();
    }
    out
}

/// Suitability straight from the definition, by scanning every `(δ, ε)`.
///
/// The reported pair is the lexicographically first one (by `δ`, then `ε`)
/// that illustrates strong suitability when `strong` is requested and such
/// a pair exists, and otherwise the first that illustrates weak suitability.
pub fn suitable_by_definition(m: &IntTuple, n: &IntTuple, strong: bool) -> SuitabilityReport {
    let (m, n, swapped) = oriented(m, n);
    let p = psi_of(m, n);
    let target = m.len() as u64 * u64::from(p);
    let (tm, tn) = (m.total(), n.total());
    let deltas = reductions(m, p);
    let epsilons: Vec<(Vec<u32>, u64, bool)> = reductions(n, 1)
        .into_iter()
        .map(|(e, s)| {
            let reduced = IntTuple::new(n.parts().iter().zip(&e).map(|(x, y)| x - y).collect());
            let ok = reduced.conjugate_prefix_sum(p) >= target;
            (e, s, ok)
        })
        .collect();
    let mut weak_pair = None;
    let mut strong_pair = None;
    'outer: for (d, ds) in &deltas {
        for (e, es, ok) in &epsilons {
            if tm - ds != tn - es {
                continue;
            }
            if weak_pair.is_none() {
                weak_pair = Some((d.clone(), e.clone()));
            }
            if *ok && strong_pair.is_none() {
                strong_pair = Some((d.clone(), e.clone()));
                break 'outer;
            }
        }
    }
    let chosen = if strong && strong_pair.is_some() {
        strong_pair.clone()
    } else {
        weak_pair.clone()
    };
    SuitabilityReport {
        psi: p,
        weak: weak_pair.is_some(),
        strong: strong_pair.is_some(),
        delta: chosen.as_ref().map(|(d, _)| IntTuple::new(d.clone())),
        eps: chosen.map(|(_, e)| IntTuple::new(e)),
        swapped,
    }
}

/// `n ⪯_w (3+|m|-ℓ, 3^{ℓ-1})` and `|n| >= |m| - m*_{ψ+1} - m*_{ψ+2}`.
/// False when `|m| < ℓ`, where the bound tuple is not defined.
pub fn majorization_form(m: &IntTuple, n: &IntTuple) -> bool {
    let (m, n, _) = oriented(m, n);
    let p = psi_of(m, n);
    let l = n.len() as u64;
    if m.total() < l {
        return false;
    }
    let mut bound = vec![3u32; n.len()];
    bound[0] = (3 + m.total() - l) as u32;
    weakly_majorized(n, &IntTuple::new(bound))
        && n.total() as i64 >= m.total() as i64 - star(m, p + 1) - star(m, p + 2)
}

/// The complete-graph criterion for sometimes join-orthogonalisability.
pub fn sometimes_jo(m: &IntTuple, n: &IntTuple) -> bool {
    let (m, n, _) = oriented(m, n);
    let (k, l) = (m.len() as u64, n.len() as u64);
    let (tm, tn) = (m.total(), n.total());
    let (im, inn) = (m.iota() as u64, n.iota() as u64);
    let case_i = im == 0 && inn == 0 && l <= tm;
    let case_ii = im != 0 && k + l <= tm + im;
    let case_iii =
        im == 0 && inn != 0 && (k + l <= tm || (2 * k <= l && l <= tm) || (l <= 2 * k && 2 * k <= tn));
    case_i || case_ii || case_iii
}

/// The sufficient condition: the two-sided inequality, `m >= (ψ^k)` and
/// `Σ_{j≤ψ} n*_j >= kψ + max{0, |n|-|m|-n*_{ψ+1}-n*_{ψ+2}}`.
pub fn thm1_condition_i(m: &IntTuple, n: &IntTuple) -> bool {
    let (m, n, _) = oriented(m, n);
    let p = psi_of(m, n);
    let kp = m.len() as i64 * i64::from(p);
    let slack = n.total() as i64 - m.total() as i64 - star(n, p + 1) - star(n, p + 2);
    two_sided(m, n, p) && m.all_at_least(p) && n.conjugate_prefix_sum(p) as i64 >= kp + slack.max(0)
}

/// The necessary condition: the two-sided inequality, `m >= (ψ^k)` and,
/// when `k < ℓ`, `ι(n) <= ι_max(k, ℓ)`.
pub fn thm1_condition_iv(m: &IntTuple, n: &IntTuple) -> bool {
    let (m, n, _) = oriented(m, n);
    let (k, l) = (m.len(), n.len());
    let p = psi_of(m, n);
    let iota_ok = k == l || n.iota() as u64 <= iota_max(k, l).expect("k < l");
    two_sided(m, n, p) && m.all_at_least(p) && iota_ok
}

/// The exact criterion for `(k, ℓ) = (3, 4)`: `m >= (2^3)`,
/// `|n| - n*_2 - n*_3 <= |m| <= |n| + m*_3 + m*_4` and `ι(n) <= 3`.
pub fn case34_condition(m: &IntTuple, n: &IntTuple) -> Result<bool, SuitabilityError> {
    let (m, n, _) = oriented(m, n);
    if (m.len(), n.len()) != (3, 4) {
        return Err(SuitabilityError::Dimension(format!(
            "expected lengths 3 and 4, got {} and {}",
            m.len(),
            n.len()
        )));
    }
    Ok(m.all_at_least(2) && two_sided(m, n, 2) && n.iota() <= 3)
}
