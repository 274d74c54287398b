use std::time::Instant;

use rayon::prelude::*;

use crate::check::{Check, Registry, Subject, TaskOptions, Tally};
use crate::report::{ReportConfig, Status, TaskConfig, TheoremReport, VerificationReport};
use crate::VerifyError;

/// One theorem id checked over an inclusive range of integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationTask {
    pub theorem_id: String,
    pub lo: u64,
    pub hi: u64,
    pub options: TaskOptions,
}

impl VerificationTask {
    pub fn new(theorem_id: impl Into<String>, lo: u64, hi: u64) -> Self {
        Self {
            theorem_id: theorem_id.into(),
            lo,
            hi,
            options: TaskOptions::default(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.options.seed = seed;
        self
    }

    fn contains(&self, n: u64) -> bool {
        self.lo <= n && n <= self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub tasks: Vec<VerificationTask>,
    /// Worker threads; 0 means the available parallelism.
    pub jobs: usize,
}

/// Upper ends of the default ranges, per theorem id.
pub const DEFAULT_RANGES: [(&str, u64); 14] = [
    ("T1.5", 2000),
    ("T1.6", 2000),
    ("T1.7", 50_000),
    ("T1.8", 5000),
    ("T1.9", 3000),
    ("Corollary", 4096),
    ("GaussCai", 50_000),
    ("L2.1", 500),
    ("L2.2", 2000),
    ("L2.3", 10_000),
    ("L2.4", 2000),
    ("L2.5", 10_000),
    ("CountSqrt1", 5000),
    ("CountClass", 2000),
];

pub const DEFAULT_SEED: u64 = 0x1d5e_ed00;

impl SuiteConfig {
    /// Every theorem id over its default range.
    pub fn default_suite(seed: u64) -> Self {
        Self {
            tasks: DEFAULT_RANGES
                .iter()
                .map(|&(id, hi)| VerificationTask::new(id, 1, hi).with_seed(seed))
                .collect(),
            jobs: 0,
        }
    }

    /// The given ids, all over `[1, max]`.
    pub fn uniform<S: AsRef<str>>(ids: &[S], max: u64, seed: u64) -> Self {
        Self {
            tasks: ids
                .iter()
                .map(|id| VerificationTask::new(id.as_ref(), 1, max).with_seed(seed))
                .collect(),
            jobs: 0,
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }
}

/// Runs a single task with the default registry on all available cores.
pub fn verify_theorem(task: &VerificationTask) -> Result<VerificationReport, VerifyError> {
    run_suite(
        &SuiteConfig {
            tasks: vec![task.clone()],
            jobs: 0,
        },
        &crate::default_registry(),
    )
}

/// Runs every task, sharing one oracle profile per integer across tasks.
///
/// Integers are processed in parallel and their tallies merged in
/// increasing order, so the report does not depend on the worker count.
pub fn run_suite(config: &SuiteConfig, registry: &Registry) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let mut checks: Vec<(VerificationTask, Box<dyn Check>)> = Vec::with_capacity(config.tasks.len());
    for task in &config.tasks {
        if task.lo == 0 {
            return Err(VerifyError::InvalidRange(task.lo, task.hi));
        }
        let id = registry.resolve(&task.theorem_id)?;
        let mut task = task.clone();
        task.theorem_id = id.as_str().to_owned();
        let check = registry.build(id.as_str(), &task.options)?;
        checks.push((task, check));
    }

    let lo = checks.iter().map(|(t, _)| t.lo).min().unwrap_or(1);
    let hi = checks.iter().map(|(t, _)| t.hi).max().unwrap_or(0);
    let run_one = |n: u64| -> Vec<(usize, Tally)> {
        let keep = checks
            .iter()
            .any(|(t, c)| t.options.include_elements && t.contains(n) && c.applies_to(n));
        let subject = Subject::new(n, keep);
        checks
            .iter()
            .enumerate()
            .filter(|(_, (t, c))| t.contains(n) && c.applies_to(n))
            .map(|(i, (_, c))| {
                let mut tally = Tally::default();
                c.run(&subject, &mut tally);
                (i, tally)
            })
            .collect()
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| VerifyError::ThreadPool(e.to_string()))?;
    let per_subject: Vec<Vec<(usize, Tally)>> =
        pool.install(|| (lo..=hi).into_par_iter().map(run_one).collect());

    let mut totals: Vec<Tally> = vec![Tally::default(); checks.len()];
    for results in per_subject {
        for (i, tally) in results {
            totals[i].merge(tally);
        }
    }

    let per_theorem: Vec<TheoremReport> = checks
        .iter()
        .zip(totals)
        .map(|((task, _), t)| TheoremReport {
            theorem_id: task.theorem_id.clone(),
            cases: t.cases,
            skips: t.skip_count(),
            skip_reasons: t.skips,
            mismatches: t.mismatches,
            scope_notes: t.scope_notes,
        })
        .collect();
    let status = if per_theorem.iter().all(TheoremReport::passed) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerificationReport {
        version: crate::VERSION.to_owned(),
        config: ReportConfig {
            tasks: checks
                .iter()
                .map(|(t, _)| TaskConfig {
                    theorem_id: t.theorem_id.clone(),
                    range: [t.lo, t.hi],
                    seed: t.options.seed,
                    include_elements: t.options.include_elements,
                })
                .collect(),
        },
        per_theorem,
        status,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
