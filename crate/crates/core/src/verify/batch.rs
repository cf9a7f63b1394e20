//! Seeded batch runs with order-preserving parallel evaluation.

use rayon::prelude::*;
use serde::Serialize;

use super::abc::{abc_trichotomy, AbcParameters};
use super::bm::{brownawell_masser, proximity_bound};
use super::campana_gap::campana_truncation_gap;
use super::generators::{abc_curated, bm_instance, instance_rng, proximity_instance, truncation_gap_instance, Generated};
use super::report::{InequalityReport, Status};
use crate::toric::{Component, Fan, HypersurfaceDivisor, OrbifoldDatum};
use crate::{Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BatchKind {
    Bm,
    Proximity,
    TruncationGap,
    AbcCurated,
}

impl std::str::FromStr for BatchKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bm" => Ok(BatchKind::Bm),
            "proximity" => Ok(BatchKind::Proximity),
            "truncation-gap" | "truncation_gap" => Ok(BatchKind::TruncationGap),
            "abc" | "abc-curated" | "abc_curated" => Ok(BatchKind::AbcCurated),
            other => Err(Error::InvalidArgument(format!("unknown batch kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatchConfig {
    pub kind: BatchKind,
    pub seed: u64,
    pub count: usize,
    pub deg_max: usize,
    /// Number of variables or summands minus one; cycles when `None`.
    pub n: Option<usize>,
}

impl BatchConfig {
    pub fn new(kind: BatchKind, seed: u64, count: usize) -> Self {
        let deg_max = match kind {
            BatchKind::Bm => 30,
            BatchKind::Proximity => 2,
            BatchKind::TruncationGap => 6,
            BatchKind::AbcCurated => 2,
        };
        BatchConfig {
            kind,
            seed,
            count,
            deg_max,
            n: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceOutcome {
    pub index: usize,
    pub rejected: u32,
    pub instance: Option<serde_json::Value>,
    pub reports: Vec<InequalityReport>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    pub reported_pass: usize,
    pub reported_fail: usize,
    pub degenerate: usize,
    pub precondition_failed: usize,
    /// Instances for which the retry budget ran out.
    pub exhausted: usize,
    /// Degenerate draws discarded by the generators.
    pub rejected: u64,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatchReport {
    pub metadata: BatchConfig,
    pub tally: Tally,
    pub instances: Vec<InstanceOutcome>,
}

impl BatchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("batch reports serialize")
    }

    /// Whether every asserted inequality held.
    pub fn all_asserted_hold(&self) -> bool {
        self.tally.fail == 0 && self.tally.errors == 0
    }
}

fn outcome<T: Serialize>(index: usize, generated: std::result::Result<Generated<T>, u32>, check: impl FnOnce(&T) -> Result<Vec<InequalityReport>>) -> InstanceOutcome {
    match generated {
        Err(rejected) => InstanceOutcome {
            index,
            rejected,
            instance: None,
            reports: Vec::new(),
            error: None,
        },
        Ok(g) => {
            let (reports, error) = match check(&g.instance) {
                Ok(r) => (r, None),
                Err(e) => (Vec::new(), Some(e.to_string())),
            };
            InstanceOutcome {
                index,
                rejected: g.rejected,
                instance: Some(serde_json::to_value(&g.instance).expect("instances serialize")),
                reports,
                error,
            }
        }
    }
}

fn run_one(cfg: &BatchConfig, index: usize, p2: &Fan) -> InstanceOutcome {
    let mut rng = instance_rng(cfg.seed, index as u64);
    match cfg.kind {
        BatchKind::Bm => {
            let n = cfg.n.unwrap_or(1 + index % 3);
            outcome(index, bm_instance(&mut rng, n, cfg.deg_max), |inst| Ok(vec![brownawell_masser(&inst.fs, &inst.s)?]))
        }
        BatchKind::Proximity => {
            let (n, d) = match cfg.n {
                Some(n) => (n, 1 + (index % 2) as u32),
                None => [(1, 1), (2, 1), (2, 2)][index % 3],
            };
            outcome(index, proximity_instance(&mut rng, n, d), |inst| Ok(vec![proximity_bound(&inst.f, &inst.g, &inst.s)?]))
        }
        BatchKind::TruncationGap => outcome(index, truncation_gap_instance(&mut rng, cfg.deg_max), |inst| {
            let a = HypersurfaceDivisor::homogeneous(p2, inst.a.clone())?;
            let half = Rational::new(1.into(), 2.into());
            let delta = OrbifoldDatum::new(vec![(Component::Hypersurface(a.clone()), half)])?;
            let eps = Rational::new(1.into(), 3.into());
            let r = campana_truncation_gap(p2, &a, &delta, &inst.point, &inst.s, &eps)?;
            Ok(vec![r.half, r.lower])
        }),
        BatchKind::AbcCurated => {
            let ell = 4 + (index % 3) as u32;
            outcome(index, abc_curated(&mut rng, ell, cfg.deg_max), |inst| {
                let r = abc_trichotomy(&inst.g, &inst.point, &inst.s, &AbcParameters::default())?;
                let mut out = vec![r.clause_a];
                out.extend(r.clause_b);
                Ok(out)
            })
        }
    }
}

fn tally(outcomes: &[InstanceOutcome]) -> Tally {
    let mut t = Tally {
        instances: outcomes.len(),
        ..Tally::default()
    };
    for o in outcomes {
        t.rejected += o.rejected as u64;
        if o.instance.is_none() {
            t.exhausted += 1;
        }
        if o.error.is_some() {
            t.errors += 1;
        }
        for r in &o.reports {
            match (r.status, r.holds) {
                (Status::Asserted, true) => t.pass += 1,
                (Status::Asserted, false) => t.fail += 1,
                (Status::Reported, true) => t.reported_pass += 1,
                (Status::Reported, false) => t.reported_fail += 1,
                (Status::Degenerate, _) => t.degenerate += 1,
                (Status::PreconditionFailed, _) => t.precondition_failed += 1,
            }
        }
    }
    t
}

/// Generates and checks `count` instances. Output depends only on the
/// configuration, never on scheduling.
pub fn run_batch(cfg: &BatchConfig) -> Result<BatchReport> {
    let p2 = Fan::projective(2)?;
    let instances: Vec<InstanceOutcome> = (0..cfg.count).into_par_iter().map(|i| run_one(cfg, i, &p2)).collect();
    Ok(BatchReport {
        metadata: cfg.clone(),
        tally: tally(&instances),
        instances,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_batches_pass_and_repeat() {
        for kind in [BatchKind::Bm, BatchKind::Proximity, BatchKind::TruncationGap, BatchKind::AbcCurated] {
            let mut cfg = BatchConfig::new(kind, 9, 6);
            cfg.deg_max = cfg.deg_max.min(6);
            let a = run_batch(&cfg).unwrap();
            assert!(a.all_asserted_hold(), "{kind:?}: {:?}", a.tally);
            assert_eq!(a.to_json(), run_batch(&cfg).unwrap().to_json());
        }
    }

    #[test]
    fn kind_names() {
        assert_eq!("truncation-gap".parse::<BatchKind>().unwrap(), BatchKind::TruncationGap);
        assert!("nope".parse::<BatchKind>().is_err());
    }
}
