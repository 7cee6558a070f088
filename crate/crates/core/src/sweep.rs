//! Batch verification over a desk-scale grid of highest weights and
//! groups, with a data-parallel driver and a sequential fallback.

use crate::error::Result;
use crate::group::{ClassicalFamily, GroupInstance};
use crate::minaff::{verify_main, verify_stable, VerificationReport};
use crate::partitions::{partitions_up_to, Partition};
use crate::universal::Family;

/// How the sweep tasks are executed. `Parallel` falls back to sequential
/// execution when the crate is built without the `parallel` feature.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

/// Bounds for the verification grid. The defaults cover every finite-rank
/// instance with `|lambda| <= 5`, `l(lambda) <= 3` over types B, C, D at
/// ranks `base .. base + 2`, and every stable instance with
/// `|lambda| <= 6`, `l(lambda) <= 4`.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_size: u32,
    pub max_len: usize,
    pub max_rank_excess: usize,
    pub stable_max_size: u32,
    pub stable_max_len: usize,
    pub mode: ExecMode,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_size: 5,
            max_len: 3,
            max_rank_excess: 2,
            stable_max_size: 6,
            stable_max_len: 4,
            mode: ExecMode::Parallel,
        }
    }
}

#[derive(Clone, Debug)]
enum Task {
    Finite(Partition, GroupInstance),
    Stable(Partition, Family),
}

/// All reports from a sweep, in deterministic task order regardless of
/// execution mode.
#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub reports: Vec<VerificationReport>,
    pub ok: bool,
}

fn task_list(cfg: &SweepConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for lambda in partitions_up_to(cfg.max_size) {
        if lambda.len() > cfg.max_len {
            continue;
        }
        for family in [ClassicalFamily::B, ClassicalFamily::C, ClassicalFamily::D] {
            let base = lambda.len().max(family.min_rank());
            for rank in base..=base + cfg.max_rank_excess {
                let g = GroupInstance::new(family, rank).expect("rank above minimum");
                tasks.push(Task::Finite(lambda.clone(), g));
            }
        }
    }
    for lambda in partitions_up_to(cfg.stable_max_size) {
        if lambda.len() > cfg.stable_max_len {
            continue;
        }
        for family in [Family::O, Family::Sp] {
            tasks.push(Task::Stable(lambda.clone(), family));
        }
    }
    tasks
}

fn run_task(task: &Task) -> Result<VerificationReport> {
    match task {
        Task::Finite(lambda, g) => verify_main(lambda, g),
        Task::Stable(lambda, family) => Ok(verify_stable(lambda, *family)),
    }
}

#[cfg(feature = "parallel")]
fn run_parallel(tasks: &[Task]) -> Result<Vec<VerificationReport>> {
    use rayon::prelude::*;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var("JTCHAR_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        builder = builder.num_threads(n);
    }
    match builder.build() {
        Ok(pool) => pool.install(|| tasks.par_iter().map(run_task).collect()),
        Err(_) => tasks.iter().map(run_task).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_parallel(tasks: &[Task]) -> Result<Vec<VerificationReport>> {
    tasks.iter().map(run_task).collect()
}

/// Runs the whole grid and collects the reports. Results are ordered by
/// task, so sequential and parallel runs produce identical output.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutcome> {
    let tasks = task_list(cfg);
    let reports = match cfg.mode {
        ExecMode::Sequential => tasks.iter().map(run_task).collect::<Result<Vec<_>>>()?,
        ExecMode::Parallel => run_parallel(&tasks)?,
    };
    let ok = reports.iter().all(|r| r.ok);
    Ok(SweepOutcome { reports, ok })
}
