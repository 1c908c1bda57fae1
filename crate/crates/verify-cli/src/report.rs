use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

/// One reproducible failure: the offending input (graph6 string or parameter
/// tuple), what the property demanded, and what was observed.
#[derive(Clone, Debug, Serialize)]
pub struct FailureRecord {
    pub input: String,
    pub expected: String,
    pub observed: String,
}

/// Aggregated outcome of one verification suite. `cases` always equals
/// `passes + failures.len() + skipped`, and an empty failure list is the
/// exit-code-zero condition.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub suite: String,
    pub cases: usize,
    pub passes: usize,
    pub failures: Vec<FailureRecord>,
    pub skipped: usize,
    pub skipped_reasons: BTreeMap<String, usize>,
    pub wall_time: f64,
}

impl VerificationReport {
    pub fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            0
        } else {
            1
        }
    }
}

/// Order-independent accumulator for suite outcomes; merging two builders is
/// associative, so shards produced by a worker pool can be combined freely.
#[derive(Clone, Debug, Default)]
pub struct ReportBuilder {
    passes: usize,
    failures: Vec<FailureRecord>,
    skipped: BTreeMap<String, usize>,
}

impl ReportBuilder {
    pub fn new() -> ReportBuilder {
        ReportBuilder::default()
    }

    pub fn pass(&mut self) {
        self.passes += 1;
    }

    pub fn fail(&mut self, input: String, expected: String, observed: String) {
        self.failures.push(FailureRecord { input, expected, observed });
    }

    pub fn skip(&mut self, reason: String) {
        *self.skipped.entry(reason).or_insert(0) += 1;
    }

    /// Records a boolean check in one call.
    pub fn check(&mut self, ok: bool, input: &str, expected: &str, observed: &str) {
        if ok {
            self.pass();
        } else {
            self.fail(input.to_owned(), expected.to_owned(), observed.to_owned());
        }
    }

    pub fn merge(mut self, other: ReportBuilder) -> ReportBuilder {
        self.passes += other.passes;
        self.failures.extend(other.failures);
        for (reason, count) in other.skipped {
            *self.skipped.entry(reason).or_insert(0) += count;
        }
        self
    }

    pub fn failure_count(&self) -> usize {
        self.failures.len()
    }

    pub fn pass_count(&self) -> usize {
        self.passes
    }

    pub fn skip_count(&self) -> usize {
        self.skipped.values().sum()
    }

    pub fn finish(self, suite: &str, started: Instant) -> VerificationReport {
        let skipped: usize = self.skipped.values().sum();
        VerificationReport {
            suite: suite.to_owned(),
            cases: self.passes + self.failures.len() + skipped,
            passes: self.passes,
            failures: self.failures,
            skipped,
            skipped_reasons: self.skipped,
            wall_time: started.elapsed().as_secs_f64(),
        }
    }
}
