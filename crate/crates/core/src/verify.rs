//! Named cross-check suites. Each suite compares two independent computations over every
//! element of a small window and reports the items that disagree.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::json;

use crate::invdream::{
    fd_oracle, fd_set, fpf_outer_corners, fpf_transition_bijection_check, id_oracle, id_set, inv_outer_corners,
    transition_bijection_check,
};
use crate::invwords::{FpfInvolution, Involution};
use crate::partition::Partition;
use crate::pipedream::{pd_oracle, pd_set};
use crate::poly::ratio;
use crate::rpp::{rpp_brute_force, rpp_proposition, rpp_transfer};
use crate::schubert::{
    dominant_product_check, fpf_macdonald_check, fpf_schubert, fpf_schubert_pd, fpf_staircase_report,
    inv_macdonald_check, inv_schubert, inv_schubert_pd, inv_staircase_report, lex_max_reduced_word, macdonald_check,
    schubert, schubert_dd, schubert_dd_with_word, verify_fpf_transition, verify_inv_transition, weighted_count,
};
use crate::symgroup::{demazure, Permutation};

/// Suite names in report order.
pub const SUITES: &[&str] = &[
    "pd-oracle",
    "id-oracle",
    "fd-oracle",
    "atoms-oracle",
    "schubert-dd",
    "inv-main",
    "fpf-main",
    "transition",
    "fpf-transition",
    "macdonald",
    "weighted-count",
    "dominant-product",
    "rpp",
    "conjecture-pp",
];

/// Suites whose failures are findings rather than errors.
pub const NON_BLOCKING: &[&str] = &["conjecture-pp"];

/// Only this many failures are kept per suite.
const MAX_LISTED: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: String,
    pub blocking: bool,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    /// Extra observations, in a fixed order.
    pub notes: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn from_outcomes(name: &str, outcomes: Vec<Option<String>>) -> Self {
        let checked = outcomes.len();
        let failures: Vec<String> = outcomes.into_iter().flatten().collect();
        SuiteResult {
            name: name.to_string(),
            blocking: !NON_BLOCKING.contains(&name),
            checked,
            failed: failures.len(),
            failures: failures.into_iter().take(MAX_LISTED).collect(),
            notes: vec![],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub n: usize,
    pub suites: Vec<SuiteResult>,
}

impl SuiteReport {
    /// True when every blocking suite passed.
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed() || !s.blocking)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "passed": self.passed(),
            "suites": self.suites.iter().map(|s| json!({
                "name": s.name,
                "blocking": s.blocking,
                "checked": s.checked,
                "failed": s.failed,
                "passed": s.passed(),
                "failures": s.failures,
                "notes": s.notes,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let width = self.suites.iter().map(|s| s.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for s in &self.suites {
            let status = match (s.passed(), s.blocking) {
                (true, _) => "pass",
                (false, true) => "FAIL",
                (false, false) => "differs (non-blocking)",
            };
            out.push_str(&format!("{:width$}  {}/{} ok  {status}\n", s.name, s.checked - s.failed, s.checked));
            for f in &s.failures {
                out.push_str(&format!("    {f}\n"));
            }
            for note in &s.notes {
                out.push_str(&format!("    note: {note}\n"));
            }
        }
        let blocking_failures = self.suites.iter().filter(|s| s.blocking && !s.passed()).count();
        out.push_str(&format!(
            "{} suites, {} blocking failures, window {}\n",
            self.suites.len(),
            blocking_failures,
            self.n
        ));
        out
    }
}

fn involutions_up_to(n: usize) -> Vec<Involution> {
    Involution::all(n)
}

fn fpf_up_to(n: usize) -> Vec<FpfInvolution> {
    FpfInvolution::all(n - n % 2)
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(what)
}

/// Runs one suite by name with window bound `n`; `None` for an unknown name.
pub fn run_suite(name: &str, n: usize) -> Option<SuiteResult> {
    let outcomes: Vec<Option<String>> = match name {
        "pd-oracle" => Permutation::all(n)
            .par_iter()
            .map(|w| check(pd_set(w) == pd_oracle(w), || format!("PD({w}) differs from compatible sequences")))
            .collect(),
        "id-oracle" => involutions_up_to(n)
            .par_iter()
            .map(|y| check(id_set(y) == id_oracle(y), || format!("ID({y}) differs from atom dreams")))
            .collect(),
        "fd-oracle" => fpf_up_to(n)
            .par_iter()
            .map(|z| check(fd_set(z) == fd_oracle(z), || format!("FD({z}) differs from fpf-atom dreams")))
            .collect(),
        "atoms-oracle" => atoms_oracle(n),
        "schubert-dd" => Permutation::all(n)
            .par_iter()
            .map(|w| {
                let pd = schubert(w);
                let top = w.inverse().compose(&Permutation::longest(w.window().max(1)));
                let alt = schubert_dd_with_word(w, &lex_max_reduced_word(&top));
                check(pd == schubert_dd(w) && Some(&pd) == alt.as_ref(), || format!("S_{w} differs between routes"))
            })
            .collect(),
        "inv-main" => involutions_up_to(n)
            .par_iter()
            .map(|y| match inv_schubert_pd(y) {
                Ok(p) => check(p == inv_schubert(y), || format!("atom sum and dream sum differ for {y}")),
                Err(e) => Some(format!("{y}: {e}")),
            })
            .collect(),
        "fpf-main" => fpf_up_to(n)
            .par_iter()
            .map(|z| {
                let a = fpf_schubert(z);
                let stable = a == fpf_schubert(&z.in_window(z.window() + 2));
                check(a == fpf_schubert_pd(z) && stable, || format!("fpf atom sum and dream sum differ for {z}"))
            })
            .collect(),
        "transition" => involutions_up_to(n)
            .par_iter()
            .flat_map_iter(|y| inv_outer_corners(y).into_iter().map(move |c| (y.clone(), c)))
            .map(|(y, c)| {
                if let Err(diff) = verify_inv_transition(&y, c) {
                    return Some(format!("{y} at {c}: polynomial sides differ by {diff}"));
                }
                transition_bijection_check(&y, c).err().map(|e| format!("{y} at {c}: {e}"))
            })
            .collect(),
        "fpf-transition" => fpf_up_to(n)
            .par_iter()
            .flat_map_iter(|z| fpf_outer_corners(z).into_iter().map(move |c| (z.clone(), c)))
            .map(|(z, c)| {
                if let Err(diff) = verify_fpf_transition(&z, c) {
                    return Some(format!("{z} at {c}: polynomial sides differ by {diff}"));
                }
                fpf_transition_bijection_check(&z, c).err().map(|e| format!("{z} at {c}: {e}"))
            })
            .collect(),
        "macdonald" => {
            let mut out: Vec<Option<String>> = Permutation::all(n)
                .par_iter()
                .map(|w| {
                    let r = macdonald_check(w);
                    check(r.holds(), || format!("{w}: {r:?}"))
                })
                .collect();
            out.extend(involutions_up_to(n).par_iter().map(|y| {
                let r = inv_macdonald_check(y);
                check(r.holds(), || format!("{y}: {r:?}"))
            }).collect::<Vec<_>>());
            out.extend(fpf_up_to(n).par_iter().map(|z| {
                let r = fpf_macdonald_check(z);
                check(r.holds(), || format!("{z}: {r:?}"))
            }).collect::<Vec<_>>());
            out
        }
        "weighted-count" => involutions_up_to(n)
            .par_iter()
            .map(|y| {
                let dreams = weighted_count(y);
                let half = inv_schubert_pd(y).map(|p| p.principal_specialization(&ratio(1, 2)));
                let scaled = half.map(|h| h * num_traits::pow(BigRational::from_integer(2.into()), y.kappa()));
                check(scaled.as_ref() == Ok(&dreams), || format!("{y}: weighted count {dreams}, specialization {scaled:?}"))
            })
            .collect(),
        "dominant-product" => (1..=n)
            .into_par_iter()
            .map(|m| check(dominant_product_check(m), || format!("product formula fails for the reverse of S_{m}")))
            .collect(),
        "rpp" => {
            let mut out: Vec<Option<String>> = (1..=(n / 2).clamp(1, 3))
                .flat_map(|m| (0..=4).map(move |k| (m, k)))
                .collect::<Vec<_>>()
                .par_iter()
                .map(|&(m, k)| {
                    let (dreams, fillings) = rpp_proposition(m, k);
                    check(dreams == fillings, || format!("g_{m} shifted by {k}: {dreams} dreams, {fillings} fillings"))
                })
                .collect();
            out.extend((1..=n + 1).flat_map(|m| (0..=3).map(move |k| (m, k))).map(|(m, k)| {
                let shape = Partition::staircase(m).ferrers();
                let (a, b) = (rpp_brute_force(&shape, k), rpp_transfer(&shape, k));
                check(a == b, || format!("staircase {m}, bound {k}: filling {a}, transfer {b}"))
            }));
            out
        }
        "conjecture-pp" => return Some(conjecture_pp(n)),
        _ => return None,
    };
    Some(SuiteResult::from_outcomes(name, outcomes))
}

fn atoms_oracle(n: usize) -> Vec<Option<String>> {
    let mut inv: BTreeMap<Permutation, (usize, Vec<Permutation>)> = BTreeMap::new();
    let base = (n >= 2).then(|| FpfInvolution::standard(n - n % 2).expect("even window").as_perm());
    let mut fpf: BTreeMap<Permutation, (usize, Vec<Permutation>)> = BTreeMap::new();
    let keep = |map: &mut BTreeMap<Permutation, (usize, Vec<Permutation>)>, key: Permutation, w: &Permutation| {
        let entry = map.entry(key).or_insert((usize::MAX, vec![]));
        let l = w.length();
        if l < entry.0 {
            *entry = (l, vec![]);
        }
        if l == entry.0 {
            entry.1.push(w.clone());
        }
    };
    for w in Permutation::all(n) {
        keep(&mut inv, demazure(&w.inverse(), &w), &w);
        if let Some(base) = &base {
            if n % 2 == 0 {
                keep(&mut fpf, w.inverse().compose(base).compose(&w), &w);
            }
        }
    }
    let mut out = Vec::new();
    for (y, (_, mut brute)) in inv {
        brute.sort();
        let y = Involution::new(y).expect("Demazure square is an involution");
        out.push(check(y.atoms() == brute, || format!("atoms of {y} differ from brute force")));
    }
    for (z, (_, mut brute)) in fpf {
        brute.sort();
        let z = FpfInvolution::new(&z).expect("conjugate of 1^fpf is fpf");
        let mut atoms: Vec<Permutation> = z.fpf_atoms();
        atoms.sort();
        out.push(check(atoms == brute, || format!("fpf-atoms of {z} differ from brute force")));
    }
    out
}

fn conjecture_pp(n: usize) -> SuiteResult {
    let mut outcomes = Vec::new();
    let mut notes = Vec::new();
    let mut weighted_ok = true;
    for m in 1..=n {
        for k in 0..=3 {
            let r = inv_staircase_report(m, k);
            weighted_ok &= r.weighted_matches();
            outcomes.push(check(r.count_matches(), || {
                format!("|ID(1^{k} x w0_{m})| = {} but the product is {} (weighted count {})", r.count, r.product, r.weighted)
            }));
        }
    }
    if weighted_ok {
        notes.push(format!("weighted counts ||ID(1^k x w0_m)|| equal the product for all m <= {n}, k <= 3"));
    }
    for m in 1..=(n / 2).max(1) {
        for k in 0..=2 {
            let r = fpf_staircase_report(m, k);
            outcomes.push(check(r.count_matches(), || {
                format!("|FD(1^fpf_{} x w0_{})| = {} but the product is {}", 2 * k, 2 * m, r.count, r.product)
            }));
        }
    }
    let mut s = SuiteResult::from_outcomes("conjecture-pp", outcomes);
    s.notes = notes;
    s
}

/// Runs the named suites in registry order; `all` expands to every suite.
pub fn run(names: &[&str], n: usize) -> Result<SuiteReport, String> {
    let wanted: Vec<&str> = if names.contains(&"all") {
        SUITES.to_vec()
    } else {
        if let Some(bad) = names.iter().find(|s| !SUITES.contains(s)) {
            return Err(format!("unknown suite {bad:?}; expected one of {} or all", SUITES.join(", ")));
        }
        SUITES.iter().copied().filter(|s| names.contains(s)).collect()
    };
    let suites = wanted.iter().map(|s| run_suite(s, n).expect("registered suite")).collect();
    Ok(SuiteReport { n, suites })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_four() {
        let report = run(&["all"], 4).unwrap();
        assert_eq!(report.suites.len(), SUITES.len());
        for s in &report.suites {
            assert!(s.checked > 0, "{} checked nothing", s.name);
            if s.blocking {
                assert!(s.passed(), "{}: {:?}", s.name, s.failures);
            }
        }
        assert!(report.passed());
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run(&["nope"], 3).is_err());
        assert!(run_suite("nope", 3).is_none());
    }

    #[test]
    fn report_is_deterministic() {
        let a = run(&["inv-main", "pd-oracle"], 4).unwrap();
        let b = run(&["pd-oracle", "inv-main"], 4).unwrap();
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.suites[0].name, "pd-oracle");
    }

    #[test]
    fn staircase_conjecture_is_reported_not_blocking() {
        let s = run_suite("conjecture-pp", 3).unwrap();
        assert!(!s.blocking);
        assert!(s.failed > 0);
        assert!(!s.notes.is_empty());
    }
}
