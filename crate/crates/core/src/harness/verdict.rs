use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::coloring::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minors::{
    find_clique_minor_with_budget, hadwiger_search, verify_clique_minor, MinorCertificate, SearchBudget, SearchOutcome,
};

/// Per-graph verdict for Hadwiger's conjecture (`K_chi` minor) and its weak
/// form (`K_{chi-1}` minor).
///
/// `None` in `hadwiger`, `weak_holds` or `full_holds` means the minor search
/// ran out of budget before deciding; it is never a counterexample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    pub hadwiger: Option<usize>,
    pub weak_holds: Option<bool>,
    pub full_holds: Option<bool>,
    /// Branch sets of the largest clique minor found.
    pub minor_cert: Option<MinorCertificate>,
    /// Wall time of the evaluation. Not serialized, so record files stay
    /// byte-identical across runs.
    #[serde(skip)]
    pub elapsed_ms: f64,
}

impl VerdictRecord {
    pub fn is_weak_counterexample(&self) -> bool {
        self.weak_holds == Some(false)
    }

    pub fn is_full_counterexample(&self) -> bool {
        self.full_holds == Some(false)
    }

    pub fn is_unknown(&self) -> bool {
        self.weak_holds.is_none() || self.full_holds.is_none()
    }
}

/// Computes the full verdict record; budget exhaustion yields unknown fields.
pub fn evaluate(g: &Graph, budget: SearchBudget) -> Result<VerdictRecord> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let start = Instant::now();
    let (chi, _) = chromatic_number(g)?;
    let found = hadwiger_search(g, budget)?;
    let decide = |target: usize| {
        if found.order >= target {
            Some(true)
        } else if found.exact {
            Some(false)
        } else {
            None
        }
    };
    // No coloring with chi-1 colors exists, so the weak form asks for K_{chi-1};
    // chi <= 1 holds vacuously.
    let weak_holds = if chi <= 1 { Some(true) } else { decide(chi - 1) };
    Ok(VerdictRecord {
        graph6: g.to_graph6()?,
        n: g.n(),
        m: g.edge_count(),
        chi,
        hadwiger: found.exact.then_some(found.order),
        weak_holds,
        full_holds: decide(chi),
        minor_cert: Some(found.certificate),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Verdict record whose weak verdict is decided, or `SearchExhausted`.
pub fn check_weak_hadwiger(g: &Graph) -> Result<VerdictRecord> {
    let budget = SearchBudget::default_for(g);
    let rec = evaluate(g, budget)?;
    match rec.weak_holds {
        Some(_) => Ok(rec),
        None => Err(Error::SearchExhausted(budget.cap().unwrap_or(0))),
    }
}

/// Verdict record whose full verdict is decided, or `SearchExhausted`.
pub fn check_hadwiger(g: &Graph) -> Result<VerdictRecord> {
    let budget = SearchBudget::default_for(g);
    let rec = evaluate(g, budget)?;
    match rec.full_holds {
        Some(_) => Ok(rec),
        None => Err(Error::SearchExhausted(budget.cap().unwrap_or(0))),
    }
}

/// Re-checks a record against its own graph: the certificate is valid and
/// has order `hadwiger`, `weak_holds` agrees with an independent search for
/// `K_{chi-1}`, and `full_holds` implies `weak_holds`.
pub fn validate_record(rec: &VerdictRecord) -> std::result::Result<(), String> {
    let g = Graph::from_graph6(&rec.graph6).map_err(|e| e.to_string())?;
    if (g.n(), g.edge_count()) != (rec.n, rec.m) {
        return Err("n/m disagree with graph6".into());
    }
    if rec.full_holds == Some(true) && rec.weak_holds != Some(true) {
        return Err("full verdict holds but weak verdict does not".into());
    }
    if let Some(cert) = &rec.minor_cert {
        let verdict = verify_clique_minor(&g, cert);
        if !verdict.is_valid() {
            return Err(format!("certificate {verdict}"));
        }
        if rec.hadwiger.is_some_and(|h| h != cert.order()) {
            return Err("certificate order differs from hadwiger".into());
        }
    }
    if let Some(weak) = rec.weak_holds {
        let expected = rec.chi <= 1
            || matches!(
                find_clique_minor_with_budget(&g, rec.chi - 1, SearchBudget::unlimited()),
                Ok(SearchOutcome::Found(_))
            );
        if weak != expected {
            return Err(format!(
                "weak_holds = {weak} but K_{} search says {expected}",
                rec.chi - 1
            ));
        }
    }
    Ok(())
}
