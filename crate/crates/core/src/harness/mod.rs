//! Exhaustive theorem verification over the built-in catalog.
//!
//! Every check runs per (theorem, ring) pair and yields pass, vacuous,
//! or counterexample with a replayable witness. The report is a
//! deterministic ordered reduction: results sorted by theorem id, then
//! ring name.

pub mod catalog;
pub mod checks;
pub mod context;

use serde::Serialize;
use serde_json::Value;

pub use catalog::{builtin_catalog, Catalog, CatalogEntry, Limits, Provenance};
pub use checks::{registry, Check, CheckResult};
pub use context::{build_suite_ctx, HarnessError, Mode, RingCtx, SuiteCtx};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Vacuous,
    Counterexample,
}

impl Outcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Vacuous => "vacuous",
            Outcome::Counterexample => "counterexample",
        }
    }
}

/// One (theorem, ring) result. Field order is the report contract.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremVerdict {
    pub theorem: String,
    pub ring: String,
    pub outcome: Outcome,
    pub witness: Option<Value>,
    pub instances: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub mode: String,
    pub results: Vec<TheoremVerdict>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &TheoremVerdict> {
        self.results
            .iter()
            .filter(|v| v.outcome == Outcome::Counterexample)
    }

    pub fn vacuous(&self) -> impl Iterator<Item = &TheoremVerdict> {
        self.results.iter().filter(|v| v.outcome == Outcome::Vacuous)
    }

    /// Human-readable fixed-width table with a closing summary line.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let wide = self
            .results
            .iter()
            .map(|v| v.ring.len())
            .max()
            .unwrap_or(4)
            .max(4);
        let mut pass = 0usize;
        let mut vacuous = 0usize;
        let mut bad = 0usize;
        for v in &self.results {
            match v.outcome {
                Outcome::Pass => pass += 1,
                Outcome::Vacuous => vacuous += 1,
                Outcome::Counterexample => bad += 1,
            }
            out.push_str(&format!(
                "{:<16} {:<wide$} {:<15} {:>6}\n",
                v.theorem,
                v.ring,
                v.outcome.as_str(),
                v.instances,
            ));
            if let Some(w) = &v.witness {
                out.push_str(&format!("{:16} witness: {w}\n", ""));
            }
        }
        out.push_str(&format!(
            "mode={} checks={} pass={} vacuous={} counterexamples={}\n",
            self.mode,
            self.results.len(),
            pass,
            vacuous,
            bad,
        ));
        out
    }
}

/// Does a check id match a `--only` selector? Selectors name either a
/// full id or a prefix covering its directed parts (`T5.CHAR` selects
/// `T5.CHAR.fwd` and `T5.CHAR.rev`).
fn id_matches(id: &str, selector: &str) -> bool {
    id == selector || id.starts_with(&format!("{selector}."))
}

pub fn theorem_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

/// Run the suite over prebuilt contexts.
pub fn run_suite_with(
    suite: &SuiteCtx,
    only: Option<&[String]>,
    mode: Mode,
) -> Result<SuiteReport, HarnessError> {
    if let Some(selectors) = only {
        for sel in selectors {
            if !registry().iter().any(|c| id_matches(c.id, sel)) {
                return Err(HarnessError::UnknownTheorem(sel.clone()));
            }
        }
    }
    let mut results = Vec::new();
    for check in registry() {
        if let Some(selectors) = only {
            if !selectors.iter().any(|sel| id_matches(check.id, sel)) {
                continue;
            }
        }
        for ctx in suite.contexts.values() {
            let res = (check.run)(ctx, mode, suite)?;
            let outcome = match (&res.witness, res.instances) {
                (Some(_), _) => Outcome::Counterexample,
                (None, 0) => Outcome::Vacuous,
                (None, _) => Outcome::Pass,
            };
            results.push(TheoremVerdict {
                theorem: check.id.to_string(),
                ring: ctx.name.clone(),
                outcome,
                witness: res.witness,
                instances: res.instances,
            });
        }
    }
    Ok(SuiteReport { mode: mode.as_str().to_string(), results })
}

/// Build contexts from a catalog and run the suite.
pub fn run_theorem_suite(
    catalog: &Catalog,
    only: Option<&[String]>,
    mode: Mode,
) -> Result<SuiteReport, HarnessError> {
    let suite = build_suite_ctx(catalog)?;
    run_suite_with(&suite, only, mode)
}

/// Re-run a single (theorem, ring) pair and confirm the recorded verdict
/// reproduces exactly: same outcome, same witness, same instance count.
pub fn replay_verdict(
    suite: &SuiteCtx,
    mode: Mode,
    verdict: &TheoremVerdict,
) -> Result<bool, HarnessError> {
    let check = registry()
        .into_iter()
        .find(|c| c.id == verdict.theorem)
        .ok_or_else(|| HarnessError::UnknownTheorem(verdict.theorem.clone()))?;
    let ctx = suite
        .contexts
        .get(&verdict.ring)
        .ok_or_else(|| HarnessError::UnknownRing(verdict.ring.clone()))?;
    let res = (check.run)(ctx, mode, suite)?;
    Ok(res.witness == verdict.witness && res.instances == verdict.instances)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_catalog() -> Catalog {
        builtin_catalog(&Limits { template_max_n: 6, product_cap: 16 }).unwrap()
    }

    #[test]
    fn suite_runs_and_is_deterministic() {
        let cat = small_catalog();
        let only = vec!["T5.NOPROD".to_string(), "T5.EXIST".to_string()];
        let a = run_theorem_suite(&cat, Some(&only), Mode::COnly).unwrap();
        let b = run_theorem_suite(&cat, Some(&only), Mode::COnly).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(!a.results.is_empty());
    }

    #[test]
    fn noprod_passes_on_products_in_all_mode() {
        let cat = small_catalog();
        let only = vec!["T5.NOPROD".to_string()];
        let rep = run_theorem_suite(&cat, Some(&only), Mode::All).unwrap();
        let on_product = rep
            .results
            .iter()
            .find(|v| v.ring == "z4h x z4h")
            .unwrap();
        assert_eq!(on_product.outcome, Outcome::Pass);
        // Every proper ideal of the product was checked.
        assert_eq!(on_product.instances, 8);
        // Non-product rings are out of the theorem's scope.
        let elsewhere = rep.results.iter().find(|v| v.ring == "z4h").unwrap();
        assert_eq!(elsewhere.outcome, Outcome::Vacuous);
    }

    #[test]
    fn locallem_vacuous_without_unit_nonunit_pairs() {
        use crate::construct::zn_template;
        use crate::harness::catalog::{CatalogEntry, Provenance, SubringFixture};
        // A one-element ring has no nonunit/unit pairs at all.
        let trivial = zn_template(1, &[1]).unwrap();
        let cat = Catalog {
            entries: vec![CatalogEntry {
                name: trivial.name.clone(),
                ring: trivial,
                provenance: Provenance::Template { n: 1, a: vec![1] },
                factors: None,
            }],
            subrings: Vec::<SubringFixture>::new(),
        };
        let only = vec!["T3.LOCALLEM".to_string()];
        let rep = run_theorem_suite(&cat, Some(&only), Mode::All).unwrap();
        assert_eq!(rep.results.len(), 1);
        assert_eq!(rep.results[0].outcome, Outcome::Vacuous);
    }

    #[test]
    fn char_split_passes_on_the_example_ring() {
        // The maximal ideal satisfies the local branch of the
        // characterization: M = √I with M² ⊆ I.
        let cat = small_catalog();
        let only = vec!["T5.CHAR".to_string()];
        let rep = run_theorem_suite(&cat, Some(&only), Mode::All).unwrap();
        for v in rep.results.iter().filter(|v| v.ring == "z4h") {
            assert_eq!(v.outcome, Outcome::Pass, "{} on z4h", v.theorem);
            assert_eq!(v.instances, 2, "{} on z4h", v.theorem);
        }
    }

    #[test]
    fn unknown_selector_is_an_error() {
        let cat = small_catalog();
        let only = vec!["T9.NOPE".to_string()];
        assert!(matches!(
            run_theorem_suite(&cat, Some(&only), Mode::All),
            Err(HarnessError::UnknownTheorem(_))
        ));
    }

    #[test]
    fn counterexamples_replay() {
        let cat = small_catalog();
        let suite = build_suite_ctx(&cat).unwrap();
        let rep = run_suite_with(&suite, None, Mode::All).unwrap();
        for v in rep.counterexamples() {
            assert!(
                replay_verdict(&suite, Mode::All, v).unwrap(),
                "witness did not replay: {} on {}",
                v.theorem,
                v.ring
            );
        }
    }
}
