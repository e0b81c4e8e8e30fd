//! Command implementations behind the `joinortho` binary.
//!
//! Each command returns its complete output together with the exit code
//! instead of printing, so that output can be compared byte for byte.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classifier::{AjoStatus, Classifier, Verdict};
use crate::compat::{d_exact, dtilde_constructive, validate_witness, OracleStatus, WitnessPair};
use crate::suitability::{
    assess, case34_condition, suitable_by_definition, thm1_condition_i, thm1_condition_iv,
    sometimes_jo,
};
use crate::tuples::{partitions, IntTuple};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("missing --{0}")]
    Missing(&'static str),
    #[error("{0}")]
    Usage(String),
    #[error("pair ({m}, {n}) is not always join-orthogonalisable")]
    NotAjo { m: IntTuple, n: IntTuple },
    #[error("node budget exhausted before ({m}, {n}) was decided")]
    BudgetExceeded { m: IntTuple, n: IntTuple },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Missing(_) | CliError::Usage(_) | CliError::Pool(_) => EXIT_USAGE,
            CliError::NotAjo { .. } => EXIT_NO,
            CliError::BudgetExceeded { .. } => EXIT_UNKNOWN,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(format!("unknown format '{other}' (expected json, csv or text)")),
        }
    }
}

/// Parse a node budget: a positive integer or `unlimited`.
pub fn parse_budget(s: &str) -> Result<u64, String> {
    if s.eq_ignore_ascii_case("unlimited") {
        return Ok(u64::MAX);
    }
    match s.replace('_', "").parse::<u64>() {
        Ok(0) => Err("budget must be at least 1".to_string()),
        Ok(b) => Ok(b),
        Err(e) => Err(format!("invalid budget '{s}': {e}")),
    }
}

/// Limits of an exhaustive run. Tuples are non-increasing, `k <= l`, and
/// `k` and `l` can be pinned to single values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_total: u32,
    pub max_k: usize,
    pub max_l: usize,
    pub k: Option<usize>,
    pub l: Option<usize>,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_total: 7,
            max_k: 5,
            max_l: 5,
            k: None,
            l: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub m: Option<IntTuple>,
    pub n: Option<IntTuple>,
    pub bounds: Bounds,
    pub budget: u64,
    pub format: OutputFormat,
    /// Worker threads; 0 means one per available core.
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            m: None,
            n: None,
            bounds: Bounds::default(),
            budget: crate::classifier::DEFAULT_BUDGET,
            format: OutputFormat::Json,
            jobs: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmdOutput {
    pub stdout: String,
    pub exit_code: i32,
}

impl RunConfig {
    fn pair(&self) -> Result<(&IntTuple, &IntTuple), CliError> {
        let m = self.m.as_ref().ok_or(CliError::Missing("m"))?;
        let n = self.n.as_ref().ok_or(CliError::Missing("n"))?;
        Ok((m, n))
    }

    fn check_bounds(&self) -> Result<(), CliError> {
        let b = &self.bounds;
        if b.max_total == 0 || b.max_k == 0 || b.max_l == 0 {
            return Err(CliError::Usage("bounds must be at least 1".into()));
        }
        Ok(())
    }

    /// Map `f` over `items` on the configured number of workers, keeping
    /// input order in the result.
    fn par_map<T, R, F>(&self, items: &[T], f: F) -> Result<Vec<R>, CliError>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| CliError::Pool(e.to_string()))?;
        Ok(pool.install(|| items.par_iter().map(f).collect()))
    }
}

/// Every pair of non-increasing tuples within `bounds`, ordered by
/// `(|m|, |n|, m, n)`.
pub fn enumerate_pairs(bounds: &Bounds) -> Vec<(IntTuple, IntTuple)> {
    let ks = |len: usize| len <= bounds.max_k && bounds.k.is_none_or(|k| k == len);
    let ls = |len: usize| len <= bounds.max_l && bounds.l.is_none_or(|l| l == len);
    let by_total: Vec<Vec<IntTuple>> = (0..=bounds.max_total)
        .map(|t| {
            if t == 0 {
                Vec::new()
            } else {
                partitions(t, bounds.max_k.max(bounds.max_l))
            }
        })
        .collect();
    let mut out = Vec::new();
    for tm in 1..=bounds.max_total as usize {
        for tn in 1..=bounds.max_total as usize {
            for m in by_total[tm].iter().filter(|m| ks(m.len())) {
                for n in by_total[tn].iter().filter(|n| ls(n.len()) && n.len() >= m.len()) {
                    out.push((m.clone(), n.clone()));
                }
            }
        }
    }
    out
}

fn plain(x: &IntTuple) -> String {
    x.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn json_line<T: Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string(value).expect("serialisable"));
    out.push('\n');
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().from_writer(Vec::new())
}

fn csv_finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

fn exit_for(ajo: AjoStatus) -> i32 {
    match ajo {
        AjoStatus::Yes => EXIT_YES,
        AjoStatus::No => EXIT_NO,
        AjoStatus::Unknown => EXIT_UNKNOWN,
    }
}

fn render_witness_text(w: &WitnessPair, out: &mut String) {
    let mode = match w.mode {
        crate::compat::WitnessMode::DTilde => "DTILDE",
        crate::compat::WitnessMode::D => "D",
    };
    let _ = writeln!(out, "witness ({mode}), r = {}", w.r);
    let _ = writeln!(out, "V:\n{}", w.v.render_text().trim_end());
    let _ = writeln!(out, "W:\n{}", w.w.render_text().trim_end());
}

fn render_verdict_text(v: &Verdict, out: &mut String) {
    let _ = writeln!(out, "m = {}  n = {}", v.m, v.n);
    let _ = writeln!(out, "ajo: {} ({})", v.ajo.as_str(), v.rule.as_str());
    let _ = writeln!(out, "sjo: {}", yes_no(v.sjo));
    let _ = writeln!(
        out,
        "psi: {}  weak: {}  strong: {}",
        v.report.psi,
        yes_no(v.report.weak),
        yes_no(v.report.strong)
    );
    if let Some(w) = &v.witness {
        render_witness_text(w, out);
    }
}

const CSV_HEADER: [&str; 9] = ["k", "l", "m", "n", "weak", "strong", "ajo", "rule", "sjo"];

fn csv_record(v: &Verdict) -> [String; 9] {
    let (k, l) = if v.report.swapped {
        (v.n.len(), v.m.len())
    } else {
        (v.m.len(), v.n.len())
    };
    [
        k.to_string(),
        l.to_string(),
        plain(&v.m),
        plain(&v.n),
        v.report.weak.to_string(),
        v.report.strong.to_string(),
        v.ajo.as_str().to_string(),
        v.rule.as_str().to_string(),
        v.sjo.to_string(),
    ]
}

fn render_verdicts(verdicts: &[Verdict], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut out = String::new();
            verdicts.iter().for_each(|v| json_line(&mut out, v));
            out
        }
        OutputFormat::Csv => {
            let mut w = csv_writer();
            w.write_record(CSV_HEADER).expect("in-memory");
            for v in verdicts {
                w.write_record(csv_record(v)).expect("in-memory");
            }
            csv_finish(w)
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for v in verdicts {
                let _ = writeln!(
                    out,
                    "{} {} ajo={} rule={} sjo={}",
                    v.m,
                    v.n,
                    v.ajo.as_str(),
                    v.rule.as_str(),
                    yes_no(v.sjo)
                );
            }
            out
        }
    }
}

pub fn cmd_classify(config: &RunConfig) -> Result<CmdOutput, CliError> {
    let (m, n) = config.pair()?;
    let v = Classifier::new(config.budget).classify(m, n);
    let stdout = match config.format {
        OutputFormat::Text => {
            let mut out = String::new();
            render_verdict_text(&v, &mut out);
            out
        }
        f => render_verdicts(std::slice::from_ref(&v), f),
    };
    Ok(CmdOutput {
        stdout,
        exit_code: exit_for(v.ajo),
    })
}

pub fn cmd_witness(config: &RunConfig) -> Result<CmdOutput, CliError> {
    let (m, n) = config.pair()?;
    let v = Classifier::new(config.budget).classify(m, n);
    let witness = match v.ajo {
        AjoStatus::Yes => v.witness.expect("yes carries a witness"),
        AjoStatus::No => return Err(CliError::NotAjo { m: m.clone(), n: n.clone() }),
        AjoStatus::Unknown => {
            return Err(CliError::BudgetExceeded { m: m.clone(), n: n.clone() })
        }
    };
    validate_witness(&witness).expect("emitted witnesses are valid");
    let stdout = match config.format {
        OutputFormat::Text => {
            let mut out = String::new();
            render_witness_text(&witness, &mut out);
            out
        }
        _ => format!("{}\n", witness.to_json()),
    };
    Ok(CmdOutput {
        stdout,
        exit_code: EXIT_YES,
    })
}

pub fn cmd_enumerate(config: &RunConfig) -> Result<CmdOutput, CliError> {
    config.check_bounds()?;
    let pairs = enumerate_pairs(&config.bounds);
    let classifier = Classifier::new(config.budget);
    let verdicts = config.par_map(&pairs, |(m, n)| classifier.classify(m, n))?;
    Ok(CmdOutput {
        stdout: render_verdicts(&verdicts, config.format),
        exit_code: EXIT_YES,
    })
}

/// One broken implication, with the pair that breaks it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub m: IntTuple,
    pub n: IntTuple,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ChainSummary {
    pub pairs: usize,
    pub members: usize,
    pub strong: usize,
    pub weak: usize,
    pub sjo: usize,
    pub inconclusive: usize,
    pub violations: usize,
}

struct PairCheck {
    member: Option<bool>,
    strong: bool,
    weak: bool,
    sjo: bool,
    failed: Vec<&'static str>,
}

fn check_pair(m: &IntTuple, n: &IntTuple, budget: u64) -> PairCheck {
    let report = assess(m, n);
    let (weak, strong) = (report.weak, report.strong);
    let sjo = sometimes_jo(m, n);
    let definition = suitable_by_definition(m, n, true);
    let oracle = d_exact(m, n, budget);
    let member = match oracle.status {
        OracleStatus::Member => Some(true),
        OracleStatus::NonMember => Some(false),
        OracleStatus::BudgetExceeded => None,
    };
    let (k, l) = (m.len().min(n.len()), m.len().max(n.len()));
    let mut failed = Vec::new();
    let mut require = |ok: bool, name: &'static str| {
        if !ok {
            failed.push(name);
        }
    };
    require(!weak || sjo, "weak => sjo");
    require(weak == definition.weak, "weak closed form = definition");
    require(strong == definition.strong, "strong closed form = definition");
    require(thm1_condition_i(m, n) == strong, "condition (i) = strong");
    if let Some(w) = oracle.witness.as_ref() {
        require(validate_witness(w).is_ok(), "oracle witness valid");
    }
    if strong {
        let built = dtilde_constructive(m, n);
        require(built.is_some_and(|w| w.is_valid()), "constructive witness valid");
    }
    if let Some(member) = member {
        require(!strong || member, "strong => member");
        require(!member || weak, "member => weak");
        require(!member || thm1_condition_iv(m, n), "member => condition (iv)");
        if l % k == 0 || (l + 1) % k == 0 {
            require(weak == member, "k | l or k | l+1: weak <=> member");
        }
        if (k, l) == (3, 4) {
            let c = case34_condition(m, n).expect("lengths 3 and 4");
            require(c == member, "(3,4): case condition <=> member");
        }
        let v = Classifier::new(budget).classify(m, n);
        let cascade_ok = match v.ajo {
            AjoStatus::Yes => member && v.witness.as_ref().is_some_and(WitnessPair::is_valid),
            AjoStatus::No => !member,
            AjoStatus::Unknown => true,
        };
        require(cascade_ok, "cascade = oracle");
        require(v.ajo != AjoStatus::Yes || v.sjo, "ajo => sjo");
    }
    PairCheck {
        member,
        strong,
        weak,
        sjo,
        failed,
    }
}

pub fn cmd_verify_chain(config: &RunConfig) -> Result<CmdOutput, CliError> {
    config.check_bounds()?;
    let pairs = enumerate_pairs(&config.bounds);
    let budget = config.budget;
    let checks = config.par_map(&pairs, |(m, n)| check_pair(m, n, budget))?;
    let mut summary = ChainSummary {
        pairs: pairs.len(),
        ..ChainSummary::default()
    };
    let mut violations = Vec::new();
    let mut undecided = Vec::new();
    for ((m, n), c) in pairs.iter().zip(&checks) {
        summary.members += usize::from(c.member == Some(true));
        summary.strong += usize::from(c.strong);
        summary.weak += usize::from(c.weak);
        summary.sjo += usize::from(c.sjo);
        if c.member.is_none() {
            summary.inconclusive += 1;
            undecided.push((m, n));
        }
        for &check in &c.failed {
            violations.push(Violation {
                check,
                m: m.clone(),
                n: n.clone(),
            });
        }
    }
    summary.violations = violations.len();
    let mut out = String::new();
    match config.format {
        OutputFormat::Json => {
            violations.iter().for_each(|v| json_line(&mut out, v));
            json_line(&mut out, &summary);
        }
        OutputFormat::Csv => {
            let mut w = csv_writer();
            w.write_record(["check", "m", "n"]).expect("in-memory");
            for v in &violations {
                w.write_record([v.check.to_string(), plain(&v.m), plain(&v.n)])
                    .expect("in-memory");
            }
            out = csv_finish(w);
        }
        OutputFormat::Text => {
            for v in &violations {
                let _ = writeln!(out, "VIOLATION {}: m = {} n = {}", v.check, v.m, v.n);
            }
            for (m, n) in &undecided {
                let _ = writeln!(out, "INCONCLUSIVE m = {m} n = {n}");
            }
            let s = &summary;
            let _ = writeln!(
                out,
                "pairs {}  members {}  strong {}  weak {}  sjo {}  inconclusive {}  violations {}",
                s.pairs, s.members, s.strong, s.weak, s.sjo, s.inconclusive, s.violations
            );
        }
    }
    let exit_code = if summary.violations > 0 {
        EXIT_NO
    } else if summary.inconclusive > 0 {
        EXIT_UNKNOWN
    } else {
        EXIT_YES
    };
    Ok(CmdOutput {
        stdout: out,
        exit_code,
    })
}

/// A pair separating two of the conditions. Class `a` satisfies the
/// necessary condition (iv) yet is not always join-orthogonalisable; class
/// `b` is always join-orthogonalisable but not strongly suitable; class
/// `undecided` needed more than the node budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapPair {
    pub k: usize,
    pub l: usize,
    pub class: &'static str,
    pub m: IntTuple,
    pub n: IntTuple,
}

fn gap_class(m: &IntTuple, n: &IntTuple, budget: u64) -> Option<&'static str> {
    if !thm1_condition_iv(m, n) || assess(m, n).strong {
        return None;
    }
    match d_exact(m, n, budget).status {
        OracleStatus::Member => Some("b"),
        OracleStatus::NonMember => Some("a"),
        OracleStatus::BudgetExceeded => Some("undecided"),
    }
}

pub fn cmd_gap_hunt(config: &RunConfig) -> Result<CmdOutput, CliError> {
    config.check_bounds()?;
    let pairs = enumerate_pairs(&config.bounds);
    let budget = config.budget;
    let classes = config.par_map(&pairs, |(m, n)| gap_class(m, n, budget))?;
    let mut found: Vec<GapPair> = pairs
        .iter()
        .zip(classes)
        .filter_map(|((m, n), class)| {
            class.map(|class| GapPair {
                k: m.len(),
                l: n.len(),
                class,
                m: m.clone(),
                n: n.clone(),
            })
        })
        .collect();
    found.sort_by_key(|g| (g.k, g.l));
    let mut out = String::new();
    match config.format {
        OutputFormat::Json => found.iter().for_each(|g| json_line(&mut out, g)),
        OutputFormat::Csv => {
            let mut w = csv_writer();
            w.write_record(["k", "l", "class", "m", "n"]).expect("in-memory");
            for g in &found {
                w.write_record([
                    g.k.to_string(),
                    g.l.to_string(),
                    g.class.to_string(),
                    plain(&g.m),
                    plain(&g.n),
                ])
                .expect("in-memory");
            }
            out = csv_finish(w);
        }
        OutputFormat::Text => {
            let mut current = None;
            for g in &found {
                if current != Some((g.k, g.l)) {
                    current = Some((g.k, g.l));
                    let _ = writeln!(out, "(k, l) = ({}, {})", g.k, g.l);
                }
                let _ = writeln!(out, "  {} {} {}", g.class, g.m, g.n);
            }
        }
    }
    Ok(CmdOutput {
        stdout: out,
        exit_code: EXIT_YES,
    })
}

/// Rows `m = 1..=8` of the path table: for each `|n| ∈ {1,2,3}`, the tuples
/// `n` (non-increasing) with `P_m ∨ ⋃ P_{n_j}` of two distinct eigenvalues.
pub fn pm_join_paths_table(budget: u64) -> Vec<(u32, Vec<Vec<IntTuple>>)> {
    let classifier = Classifier::new(budget);
    (1..=8u32)
        .map(|m| {
            let m_tuple = IntTuple::new(vec![m]);
            let cells = (1..=3u32)
                .map(|size| {
                    partitions(size, size as usize)
                        .into_iter()
                        .filter(|n| classifier.classify_paths(&m_tuple, n).ajo == AjoStatus::Yes)
                        .collect()
                })
                .collect();
            (m, cells)
        })
        .collect()
}

#[derive(Serialize)]
struct TableCell<'a> {
    m: u32,
    size: usize,
    n: &'a [IntTuple],
}

pub fn cmd_table(id: &str, config: &RunConfig) -> Result<CmdOutput, CliError> {
    if id != "pm-join-paths" {
        return Err(CliError::Usage(format!(
            "unknown table '{id}' (available: pm-join-paths)"
        )));
    }
    let rows = pm_join_paths_table(config.budget);
    let mut out = String::new();
    match config.format {
        OutputFormat::Json => {
            for (m, cells) in &rows {
                for (i, cell) in cells.iter().enumerate() {
                    json_line(&mut out, &TableCell { m: *m, size: i + 1, n: cell });
                }
            }
        }
        OutputFormat::Csv => {
            let mut w = csv_writer();
            w.write_record(["m", "size", "n"]).expect("in-memory");
            for (m, cells) in &rows {
                for (i, cell) in cells.iter().enumerate() {
                    for n in cell {
                        w.write_record([m.to_string(), (i + 1).to_string(), plain(n)])
                            .expect("in-memory");
                    }
                }
            }
            out = csv_finish(w);
        }
        OutputFormat::Text => {
            let _ = writeln!(out, "{:<5}| {:<22}| {:<22}| {:<22}", "", "|n|=1", "|n|=2", "|n|=3");
            for (m, cells) in &rows {
                let shown: Vec<String> = cells
                    .iter()
                    .map(|c| {
                        if c.is_empty() {
                            "-".to_string()
                        } else {
                            c.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(" ")
                        }
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "{:<5}| {:<22}| {:<22}| {:<22}",
                    format!("m={m}"),
                    shown[0],
                    shown[1],
                    shown[2]
                );
            }
        }
    }
    Ok(CmdOutput {
        stdout: out,
        exit_code: EXIT_YES,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(m: &str, n: &str) -> RunConfig {
        RunConfig {
            m: Some(m.parse().unwrap()),
            n: Some(n.parse().unwrap()),
            jobs: 1,
            ..RunConfig::default()
        }
    }

    #[test]
    fn budget_parsing() {
        assert_eq!(parse_budget("unlimited"), Ok(u64::MAX));
        assert_eq!(parse_budget("10_000"), Ok(10_000));
        assert!(parse_budget("0").is_err());
        assert!(parse_budget("lots").is_err());
    }

    #[test]
    fn classify_exit_codes() {
        assert_eq!(cmd_classify(&cfg("2,2", "2,1,1")).unwrap().exit_code, EXIT_YES);
        assert_eq!(cmd_classify(&cfg("2,1", "2,1,1")).unwrap().exit_code, EXIT_NO);
        let mut c = cfg("2^5", "3,2,1^5");
        c.budget = 1;
        assert_eq!(cmd_classify(&c).unwrap().exit_code, EXIT_UNKNOWN);
        let missing = RunConfig::default();
        assert_eq!(cmd_classify(&missing).unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn witness_errors() {
        let err = cmd_witness(&cfg("2,1", "2,1,1")).unwrap_err();
        assert!(matches!(err, CliError::NotAjo { .. }));
        assert_eq!(err.exit_code(), EXIT_NO);
        let out = cmd_witness(&cfg("2^3", "3,1^3")).unwrap();
        let w: WitnessPair = serde_json::from_str(out.stdout.trim()).unwrap();
        assert_eq!(validate_witness(&w), Ok(()));
    }

    #[test]
    fn enumeration_order_and_filters() {
        let b = Bounds {
            max_total: 4,
            max_l: 3,
            ..Bounds::default()
        };
        let pairs = enumerate_pairs(&b);
        let keys: Vec<_> = pairs.iter().map(|(m, n)| (m.total(), n.total(), m.clone(), n.clone())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        sorted.dedup();
        assert_eq!(sorted.len(), keys.len());
        assert!(pairs.iter().all(|(m, n)| m.len() <= n.len() && n.len() <= 3));
        let pinned = Bounds {
            max_total: 3,
            k: Some(1),
            ..Bounds::default()
        };
        assert!(enumerate_pairs(&pinned).iter().all(|(m, _)| m.len() == 1));
    }

    #[test]
    fn csv_header_and_quoting() {
        let mut c = RunConfig {
            bounds: Bounds {
                max_total: 2,
                ..Bounds::default()
            },
            jobs: 1,
            ..RunConfig::default()
        };
        c.format = OutputFormat::Csv;
        let out = cmd_enumerate(&c).unwrap().stdout;
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("k,l,m,n,weak,strong,ajo,rule,sjo"));
        assert_eq!(lines.next(), Some("1,1,1,1,true,true,yes,STRONG_SUITABILITY,true"));
        assert!(out.contains("\"1,1\""));
    }

    #[test]
    fn unknown_table() {
        let err = cmd_table("nope", &RunConfig::default()).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_USAGE);
    }
}
