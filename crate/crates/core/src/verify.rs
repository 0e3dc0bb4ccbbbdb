//! Batch verification of every closed form against the oracle, and the
//! exploration report for the general-`p` candidate formulas.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::composition::{compositions_up_to, norm_ratio, partitions_of_weight, Composition};
use crate::error::{Error, Result};
use crate::jack::JackTable;
use crate::oracle::{brute_elementary, brute_pieri, brute_symmetric, eigen_audit, BasisExpansion};
use crate::pieri::complement::{expand_complement, expand_en1};
use crate::pieri::conjecture::{conjecture_rows, ConjectureRecord};
use crate::pieri::kernel::kernel;
use crate::pieri::recurrence::RecurrenceEngine;
use crate::pieri::single::{expand_e1, expand_z_i};
use crate::pieri::symmetric::expand_ep_p;
use crate::scalar::{format_scalar, Scalar};
use crate::subsets::maximal_sets;

/// At most this many failure descriptions are kept per check.
const MAX_REPORTED: usize = 5;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub examples: Vec<String>,
}

impl CheckResult {
    fn new(name: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < MAX_REPORTED {
                self.examples.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Outcome of a full verification run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name.as_str())
            .collect()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {}  ({} checked, {} failed)", c.name, c.checked, c.failed)?;
            for e in &c.examples {
                writeln!(f, "      {e}")?;
            }
        }
        Ok(())
    }
}

/// Parameters of one verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n: usize,
    pub alpha: Scalar,
    pub max_weight: u32,
    /// Negates every kernel-based closed-form coefficient before comparing.
    pub inject_fault: bool,
}

struct Suite {
    table: JackTable,
    oracle: HashMap<(Composition, Vec<usize>), BasisExpansion>,
}

impl Suite {
    fn product(&mut self, eta: &Composition, set: Vec<usize>) -> Result<&BasisExpansion> {
        let key = (eta.clone(), set);
        if !self.oracle.contains_key(&key) {
            let exp = brute_pieri(eta, &key.1, &mut self.table)?;
            self.oracle.insert(key.clone(), exp);
        }
        Ok(&self.oracle[&key])
    }
}

fn describe(eta: &Composition, what: &str, got: &[(Composition, Scalar)], want: &[(Composition, Scalar)]) -> String {
    let show = |t: &[(Composition, Scalar)]| {
        t.iter()
            .map(|(c, x)| format!("{c}:{}", format_scalar(x)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!("{what} E{eta}: closed form [{}] vs oracle [{}]", show(got), show(want))
}

fn tamper(mut terms: Vec<(Composition, Scalar)>, on: bool) -> Vec<(Composition, Scalar)> {
    if on {
        for (_, c) in &mut terms {
            *c = -c.clone();
        }
    }
    terms
}

/// Runs every identity on all `|η| ≤ max_weight`.
pub fn run_suite(config: &VerifyConfig) -> Result<VerifyReport> {
    let n = config.n;
    let alpha = &config.alpha;
    let fault = config.inject_fault;
    let mut suite = Suite {
        table: JackTable::new(n, alpha.clone())?,
        oracle: HashMap::new(),
    };
    suite.table.generate_up_to(config.max_weight)?;
    let etas = compositions_up_to(n, config.max_weight);
    let mut checks = Vec::new();

    let audit = eigen_audit(&suite.table);
    let mut eigen = CheckResult::new("eigenrelation xi_i E_eta = eta_bar_i E_eta");
    eigen.checked = audit.checked;
    eigen.failed = audit.failures.len();
    eigen.examples = audit
        .failures
        .iter()
        .take(MAX_REPORTED)
        .map(|(eta, i)| format!("E{eta}, i = {}", i + 1))
        .collect();
    checks.push(eigen);

    let mut single = CheckResult::new("single-variable closed form z_i E_eta");
    for eta in &etas {
        for i in 0..n {
            let got = tamper(expand_z_i(eta, i, alpha)?.terms, fault);
            let want = suite.product(eta, vec![i])?.terms.clone();
            single.record(got == want, || describe(eta, &format!("z_{}", i + 1), &got, &want));
        }
    }
    checks.push(single);

    let mut e1 = CheckResult::new("e_1 closed form");
    let mut sum_rule = CheckResult::new("sum rule: chi_tilde sums to -alpha, e_1 = sum of z_i");
    for eta in &etas {
        let got = tamper(expand_e1(eta, alpha)?.terms, fault);
        let want = brute_elementary(eta, 1, &mut suite.table)?.terms;
        e1.record(got == want, || describe(eta, "e_1", &got, &want));
        for set in maximal_sets(eta) {
            let k = kernel(eta, &set, alpha)?;
            let total: Scalar = k.chi_tilde.values().sum();
            sum_rule.record(total == -alpha.clone(), || format!("E{eta}, I = {set}"));
        }
        let mut summed: Vec<(Composition, Scalar)> = Vec::new();
        for i in 0..n {
            for (nu, c) in tamper(expand_z_i(eta, i, alpha)?.terms, fault) {
                match summed.iter_mut().find(|(m, _)| *m == nu) {
                    Some((_, x)) => *x += c,
                    None => summed.push((nu, c)),
                }
            }
        }
        crate::oracle::sort_terms(&mut summed);
        sum_rule.record(summed == got, || describe(eta, "sum of z_i vs e_1", &summed, &got));
    }
    checks.push(e1);
    checks.push(sum_rule);

    if n >= 2 {
        let mut comp = CheckResult::new("complement closed form z^1/z_j E_eta and e_{N-1}");
        for eta in &etas {
            for j1 in 0..n {
                let got = tamper(expand_complement(eta, j1, alpha)?.terms, fault);
                let others: Vec<usize> = (0..n).filter(|&k| k != j1).collect();
                let want = suite.product(eta, others)?.terms.clone();
                comp.record(got == want, || describe(eta, &format!("z^1/z_{}", j1 + 1), &got, &want));
            }
            let got = tamper(expand_en1(eta, alpha)?.terms, fault);
            let want = brute_elementary(eta, n - 1, &mut suite.table)?.terms;
            comp.record(got == want, || describe(eta, "e_{N-1}", &got, &want));
        }
        checks.push(comp);
    }

    let mut full = CheckResult::new("full product e_N E_eta = E_{eta+(1^N)}");
    for eta in &etas {
        let want = vec![(eta.plus_ones(), Scalar::from_integer(1.into()))];
        let got = suite.product(eta, (0..n).collect())?.terms.clone();
        full.record(got == want, || describe(eta, "e_N", &want, &got));
    }
    checks.push(full);

    let mut rec = CheckResult::new("recurrence engine equals closed form");
    let mut engine = RecurrenceEngine::new(n, alpha.clone())?;
    for eta in &etas {
        for i in 0..n {
            let mut from_engine: Vec<(Composition, Scalar)> = engine.coefficients(eta)?[i]
                .iter()
                .map(|(nu, c)| (nu.clone(), c.clone()))
                .collect();
            crate::oracle::sort_terms(&mut from_engine);
            let closed = tamper(expand_z_i(eta, i, alpha)?.terms, fault);
            rec.record(from_engine == closed, || describe(eta, &format!("engine z_{}", i + 1), &closed, &from_engine));
        }
    }
    checks.push(rec);

    let mut dual = CheckResult::new("duality with norm ratios, p = 1 and p = N-1");
    let dual_weight = config.max_weight.saturating_sub(1);
    let mut ps = vec![1];
    if n > 2 {
        ps.push(n - 1);
    }
    for eta in compositions_up_to(n, dual_weight) {
        let top = eta.plus_ones();
        let norm_eta = norm_ratio(&eta, alpha)?;
        for &p in &ps {
            for set in subsets_of_size(n, p) {
                let complement: Vec<usize> = (0..n).filter(|k| !set.contains(k)).collect();
                let forward = suite.product(&eta, set.clone())?.terms.clone();
                for (nu, c) in forward {
                    let back = suite.product(&nu, complement.clone())?.coefficient(&top);
                    let lhs = &c * norm_ratio(&nu, alpha)?;
                    let rhs = back * &norm_eta;
                    dual.record(lhs == rhs, || format!("E{eta} -> E{nu}, rows {set:?}"));
                }
            }
        }
    }
    checks.push(dual);

    let mut sym = CheckResult::new("symmetric Pieri rule e_p P_kappa");
    for w in 0..=config.max_weight {
        for kappa in partitions_of_weight(n, w) {
            for p in 0..=n {
                let got = expand_ep_p(&kappa, p, alpha)?;
                let want = brute_symmetric(&kappa, p, &mut suite.table)?;
                sym.record(got == want, || describe(&kappa, &format!("e_{p} P"), &got, &want));
            }
        }
    }
    checks.push(sym);

    Ok(VerifyReport { checks })
}

fn subsets_of_size(n: usize, p: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == p)
        .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect()
}

/// Candidate-formula records for every `|η| ≤ max_weight` and every `ν` in
/// the `e_p` support.
pub fn explore(n: usize, p: usize, alpha: &Scalar, max_weight: u32) -> Result<Vec<ConjectureRecord>> {
    if p == 0 || p > n {
        return Err(Error::InvalidArgument(format!("p must lie in 1..={n}")));
    }
    let mut table = JackTable::new(n, alpha.clone())?;
    let mut out = Vec::new();
    for eta in compositions_up_to(n, max_weight) {
        out.extend(conjecture_rows(&eta, p, &mut table)?);
    }
    Ok(out)
}

fn opt(x: &Option<Scalar>) -> String {
    x.as_ref().map(format_scalar).unwrap_or_else(|| "singular".into())
}

fn comp(c: &Composition) -> String {
    c.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// CSV text with a header row; rationals are exact strings.
pub fn explore_csv(records: &[ConjectureRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record([
        "eta",
        "nu",
        "p",
        "a_oracle",
        "b_from_a",
        "b_swa",
        "b_extended_all_rows",
        "b_extended_moved_rows",
        "m_star",
        "single_box",
        "at_most_one_down",
        "swa_match",
        "extended_all_rows_match",
        "extended_moved_rows_match",
    ])
    .map_err(io)?;
    for r in records {
        w.write_record([
            comp(&r.eta),
            comp(&r.nu),
            r.p.to_string(),
            format_scalar(&r.a_oracle),
            format_scalar(&r.b_from_a),
            opt(&r.b_swa),
            opt(&r.b_extended_all),
            opt(&r.b_extended_moved),
            r.is_m_star.to_string(),
            r.single_box.to_string(),
            r.at_most_one_down.to_string(),
            r.swa_matches().to_string(),
            r.extended_all_matches().to_string(),
            r.extended_moved_matches().to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// Match counts for one class of rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSummary {
    pub class: &'static str,
    pub rows: usize,
    pub nonzero: usize,
    pub swa: usize,
    pub extended_all: usize,
    pub extended_moved: usize,
}

impl fmt::Display for ClassSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rate = |k: usize| {
            if self.rows == 0 {
                "n/a".to_string()
            } else {
                format!("{k}/{} ({:.1}%)", self.rows, 100.0 * k as f64 / self.rows as f64)
            }
        };
        write!(
            f,
            "{:<18} rows {:>5}  nonzero A {:>5}  swa {}  extended(all rows) {}  extended(moved rows) {}",
            self.class,
            self.rows,
            self.nonzero,
            rate(self.swa),
            rate(self.extended_all),
            rate(self.extended_moved)
        )
    }
}

pub fn summarize(records: &[ConjectureRecord]) -> Vec<ClassSummary> {
    let class = |name: &'static str, keep: &dyn Fn(&ConjectureRecord) -> bool| {
        let rows: Vec<_> = records.iter().filter(|r| keep(r)).collect();
        ClassSummary {
            class: name,
            rows: rows.len(),
            nonzero: rows.iter().filter(|r| !r.a_oracle.is_zero()).count(),
            swa: rows.iter().filter(|r| r.swa_matches()).count(),
            extended_all: rows.iter().filter(|r| r.extended_all_matches()).count(),
            extended_moved: rows.iter().filter(|r| r.extended_moved_matches()).count(),
        }
    };
    vec![
        class("all", &|_| true),
        class("m_star", &|r| r.is_m_star),
        class("single_box", &|r| r.single_box),
        class("at_most_one_down", &|r| r.at_most_one_down),
    ]
}
