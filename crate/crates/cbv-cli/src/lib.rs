//! Verification suites over the combinatorial library, with JSON-friendly
//! reports. Each suite sweeps a parameter box, checks an exact identity at
//! every point, and returns the violations verbatim.

pub mod suites;

use serde::Serialize;
use std::time::Instant;

/// One failed case inside a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub case: String,
    pub detail: String,
}

/// Machine-readable outcome of one verification suite.
#[derive(Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: String,
    pub cases_checked: u64,
    pub violations: Vec<Violation>,
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Collects cases and violations while a suite runs.
pub struct SuiteRun {
    suite: String,
    parameters: String,
    cases: u64,
    violations: Vec<Violation>,
    started: Instant,
}

impl SuiteRun {
    pub fn new(suite: &str, parameters: String) -> Self {
        SuiteRun {
            suite: suite.to_string(),
            parameters,
            cases: 0,
            violations: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn check(&mut self, case: impl Fn() -> String, ok: bool, detail: impl Fn() -> String) {
        self.cases += 1;
        if !ok {
            self.violations.push(Violation { case: case(), detail: detail() });
        }
    }

    pub fn case_ok(&mut self) {
        self.cases += 1;
    }

    pub fn violation(&mut self, case: String, detail: String) {
        self.cases += 1;
        self.violations.push(Violation { case, detail });
    }

    pub fn merge(&mut self, other: SuiteRun) {
        self.cases += other.cases;
        self.violations.extend(other.violations);
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            suite: self.suite,
            parameters: self.parameters,
            cases_checked: self.cases,
            violations: self.violations,
            wall_time_ms: self.started.elapsed().as_millis(),
        }
    }
}

/// Runs closures over a worker pool and merges their outputs in input
/// order, so reports stay deterministic regardless of the job count.
pub fn parallel_map<T, F>(jobs: usize, tasks: Vec<T>, f: F) -> Vec<SuiteRun>
where
    T: Send,
    F: Fn(&T) -> SuiteRun + Sync,
{
    let jobs = jobs.max(1);
    if jobs == 1 || tasks.len() <= 1 {
        return tasks.iter().map(&f).collect();
    }
    let mut slots: Vec<Option<SuiteRun>> = Vec::new();
    slots.resize_with(tasks.len(), || None);
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots_mutex = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(tasks.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= tasks.len() {
                    break;
                }
                let run = f(&tasks[i]);
                slots_mutex.lock().unwrap()[i] = Some(run);
            });
        }
    });
    slots.into_iter().map(|s| s.expect("task completed")).collect()
}
