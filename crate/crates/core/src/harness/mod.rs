//! Conjecture verdicts per graph and resumable scans over graph collections.

pub mod scan;
pub mod verdict;

pub use scan::{load_source, scan, Mode, ScanOptions, ScanReport, Source, Tally};
pub use verdict::{check_hadwiger, check_weak_hadwiger, evaluate, validate_record, VerdictRecord};
