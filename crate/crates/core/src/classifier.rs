//! One sound verdict per pair: necessary conditions reject, sufficient
//! conditions and the special-case equivalences accept, and the exact
//! oracle settles what is left unless its node budget runs out.

use serde::{Deserialize, Serialize};

use crate::compat::{
    case34_bases, d_exact, dtilde_constructive, extend_from_base, OracleOutcome, OracleStatus,
    WitnessPair,
};
use crate::suitability::{
    assess, case34_condition, iota_max, sometimes_jo, thm1_condition_iv, SuitabilityReport,
};
use crate::tuples::IntTuple;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AjoStatus {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AjoRule {
    StrongSuitability,
    WeakFail,
    IotaFail,
    CondIvFail,
    KDividesEquiv,
    #[serde(rename = "CASE_3_4")]
    Case34,
    Oracle,
    Budget,
}

impl AjoStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            AjoStatus::Yes => "yes",
            AjoStatus::No => "no",
            AjoStatus::Unknown => "unknown",
        }
    }
}

impl AjoRule {
    pub fn as_str(self) -> &'static str {
        match self {
            AjoRule::StrongSuitability => "STRONG_SUITABILITY",
            AjoRule::WeakFail => "WEAK_FAIL",
            AjoRule::IotaFail => "IOTA_FAIL",
            AjoRule::CondIvFail => "COND_IV_FAIL",
            AjoRule::KDividesEquiv => "K_DIVIDES_EQUIV",
            AjoRule::Case34 => "CASE_3_4",
            AjoRule::Oracle => "ORACLE",
            AjoRule::Budget => "BUDGET",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub m: IntTuple,
    pub n: IntTuple,
    pub ajo: AjoStatus,
    pub rule: AjoRule,
    pub sjo: bool,
    pub witness: Option<WitnessPair>,
    pub report: SuitabilityReport,
}

/// Classification settings. With `verify` set, the exact oracle also runs
/// whenever an arithmetic rule decided the pair, and any disagreement
/// panics with the offending pair.
#[derive(Debug, Clone, Copy)]
pub struct Classifier {
    pub budget: u64,
    pub verify: bool,
}

impl Default for Classifier {
    fn default() -> Self {
        Classifier {
            budget: DEFAULT_BUDGET,
            verify: false,
        }
    }
}

impl Classifier {
    pub fn new(budget: u64) -> Self {
        Classifier {
            budget,
            verify: false,
        }
    }

    pub fn verifying(budget: u64) -> Self {
        Classifier {
            budget,
            verify: true,
        }
    }

    pub fn classify(&self, m: &IntTuple, n: &IntTuple) -> Verdict {
        let report = assess(m, n);
        let sjo = sometimes_jo(m, n);
        let (a, b) = if report.swapped { (n, m) } else { (m, n) };
        let (k, l) = (a.len(), b.len());
        let verdict = |ajo, rule, witness| Verdict {
            m: m.clone(),
            n: n.clone(),
            ajo,
            rule,
            sjo,
            witness,
            report: report.clone(),
        };

        let decided = if !report.weak {
            Some(verdict(AjoStatus::No, AjoRule::WeakFail, None))
        } else if k < l && b.iota() as u64 > iota_max(k, l).expect("k < l") {
            Some(verdict(AjoStatus::No, AjoRule::IotaFail, None))
        } else if !thm1_condition_iv(a, b) {
            Some(verdict(AjoStatus::No, AjoRule::CondIvFail, None))
        } else if report.strong {
            let witness = dtilde_constructive(m, n).expect("strongly suitable pairs are constructible");
            Some(verdict(AjoStatus::Yes, AjoRule::StrongSuitability, Some(witness)))
        } else {
            None
        };
        if let Some(v) = decided {
            if self.verify {
                self.cross_check(&v);
            }
            return v;
        }

        if l % k == 0 || (l + 1) % k == 0 {
            // weak suitability already holds at this point
            let outcome = d_exact(m, n, self.budget);
            return match outcome.status {
                OracleStatus::Member => {
                    verdict(AjoStatus::Yes, AjoRule::KDividesEquiv, outcome.witness)
                }
                OracleStatus::BudgetExceeded => verdict(AjoStatus::Unknown, AjoRule::Budget, None),
                OracleStatus::NonMember => {
                    panic!("weakly suitable pair ({m}, {n}) with k | l or k | l+1 is not in D")
                }
            };
        }

        if (k, l) == (3, 4) {
            let v = if case34_condition(a, b).expect("lengths are 3 and 4") {
                let witness = case34_witness(a, b)
                    .map(|w| if report.swapped { w.swap_sides() } else { w })
                    .or_else(|| d_exact(m, n, self.budget).witness);
                match witness {
                    Some(w) => verdict(AjoStatus::Yes, AjoRule::Case34, Some(w)),
                    None => verdict(AjoStatus::Unknown, AjoRule::Budget, None),
                }
            } else {
                verdict(AjoStatus::No, AjoRule::Case34, None)
            };
            if self.verify {
                self.cross_check(&v);
            }
            return v;
        }

        let outcome = d_exact(m, n, self.budget);
        from_oracle(outcome, verdict)
    }

    fn cross_check(&self, v: &Verdict) {
        let oracle = d_exact(&v.m, &v.n, self.budget);
        let agrees = match (v.ajo, oracle.status) {
            (_, OracleStatus::BudgetExceeded) => true,
            (AjoStatus::Yes, s) => s == OracleStatus::Member,
            (AjoStatus::No, s) => s == OracleStatus::NonMember,
            (AjoStatus::Unknown, _) => true,
        };
        assert!(
            agrees,
            "rule {} says {} for ({}, {}) but the oracle says {:?}",
            v.rule.as_str(),
            v.ajo.as_str(),
            v.m,
            v.n,
            oracle.status
        );
        assert!(v.ajo != AjoStatus::Yes || v.sjo, "AJO but not SJO: ({}, {})", v.m, v.n);
    }

    pub fn classify_paths(&self, m: &IntTuple, n: &IntTuple) -> Verdict {
        self.classify(m, n)
    }
}

fn from_oracle(
    outcome: OracleOutcome,
    verdict: impl Fn(AjoStatus, AjoRule, Option<WitnessPair>) -> Verdict,
) -> Verdict {
    match outcome.status {
        OracleStatus::Member => verdict(AjoStatus::Yes, AjoRule::Oracle, outcome.witness),
        OracleStatus::NonMember => verdict(AjoStatus::No, AjoRule::Oracle, None),
        OracleStatus::BudgetExceeded => verdict(AjoStatus::Unknown, AjoRule::Budget, None),
    }
}

fn case34_witness(m: &IntTuple, n: &IntTuple) -> Option<WitnessPair> {
    case34_bases()
        .iter()
        .find_map(|base| extend_from_base(m, n, base))
}

/// Sometimes join-orthogonalisability, which for unions of complete graphs
/// is exactly the question whether the join has two distinct eigenvalues.
pub fn classify_complete_graphs(m: &IntTuple, n: &IntTuple) -> bool {
    sometimes_jo(m, n)
}

pub fn classify(m: &IntTuple, n: &IntTuple, budget: u64) -> Verdict {
    Classifier::new(budget).classify(m, n)
}

/// Always join-orthogonalisability, which for unions of paths is exactly
/// the question whether the join has two distinct eigenvalues.
pub fn classify_paths(m: &IntTuple, n: &IntTuple, budget: u64) -> Verdict {
    Classifier::new(budget).classify_paths(m, n)
}
