//! Multi-threaded enumeration with an optional wall-clock budget.
//!
//! The search forest is cut into [`SearchTask`]s (one per root vertex and
//! first expansion choice); each worker tallies its own tasks and the
//! per-task counts are summed, so the result does not depend on scheduling.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use strong_alliance::enumerate::{
    compute_polynomial_oracle, Engine, EnumerationError, EnumerationStats, SearchTask, Tally,
    ORACLE_MAX_VERTICES, UNBUDGETED_MAX_VERTICES,
};
use strong_alliance::graph::MAX_VERTICES;
use strong_alliance::{AlliancePolynomial, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EngineChoice {
    /// The connected engine.
    #[default]
    Auto,
    Oracle,
    Connected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest order accepted.
    pub max_n: usize,
    /// Abandon the computation after this long.
    pub budget: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: UNBUDGETED_MAX_VERTICES,
            budget: None,
        }
    }
}

impl Limits {
    /// Limits implied by the command-line flags: without either flag graphs
    /// above the default size are refused; a budget alone lifts the size
    /// limit to the engine maximum.
    pub fn from_flags(max_n: Option<usize>, budget: Option<Duration>) -> Limits {
        let max_n = match (max_n, budget) {
            (Some(n), _) => n,
            (None, Some(_)) => MAX_VERTICES,
            (None, None) => UNBUDGETED_MAX_VERTICES,
        };
        Limits { max_n, budget }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub engine: EngineChoice,
    /// Worker threads; 0 uses every available core.
    pub workers: usize,
    pub limits: Limits,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            engine: EngineChoice::Auto,
            workers: 0,
            limits: Limits::default(),
        }
    }
}

pub fn compute(g: &Graph, opts: &Options) -> Result<(AlliancePolynomial, EnumerationStats), EnumerationError> {
    let started = Instant::now();
    let n = g.order();
    let engine = match opts.engine {
        EngineChoice::Oracle => Engine::Oracle,
        EngineChoice::Auto | EngineChoice::Connected => Engine::Connected,
    };
    let cap = match engine {
        Engine::Oracle => ORACLE_MAX_VERTICES.min(opts.limits.max_n),
        Engine::Connected => MAX_VERTICES.min(opts.limits.max_n),
    };
    if n > cap {
        return Err(EnumerationError::TooLarge { n, max: cap, engine });
    }
    let (polynomial, mut stats) = match engine {
        Engine::Oracle => {
            let p = compute_polynomial_oracle(g)?;
            let stats = EnumerationStats {
                subsets_visited: (1u64 << n) - 1,
                alliances_found: u64::try_from(p.evaluate_at_one()).expect("below 2^24"),
                elapsed: Duration::ZERO,
                engine,
            };
            (p, stats)
        }
        Engine::Connected => connected(g, opts.workers, opts.limits.budget.map(|b| started + b))?,
    };
    stats.elapsed = started.elapsed();
    Ok((polynomial, stats))
}

fn connected(
    g: &Graph,
    workers: usize,
    deadline: Option<Instant>,
) -> Result<(AlliancePolynomial, EnumerationStats), EnumerationError> {
    let stop = AtomicBool::new(false);
    let run = || {
        SearchTask::split(g)
            .par_iter()
            .map(|task| {
                let mut interrupt = |_| {
                    if deadline.is_some_and(|d| Instant::now() >= d) {
                        stop.store(true, Ordering::Relaxed);
                    }
                    stop.load(Ordering::Relaxed)
                };
                if interrupt(0) {
                    return Err(EnumerationError::Interrupted { visited: 0 });
                }
                task.tally(g, &mut interrupt)
            })
            .try_reduce(Tally::default, |mut a, b| {
                a.merge(&b);
                Ok(a)
            })
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let total = pool.install(run)?;
    let stats = EnumerationStats {
        subsets_visited: total.visited,
        alliances_found: total.alliances(),
        elapsed: Duration::ZERO,
        engine: Engine::Connected,
    };
    Ok((total.to_polynomial(), stats))
}
