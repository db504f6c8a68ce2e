//! Search campaigns, table targets and the code archive.

mod archive;
mod record;
mod search;
pub mod table;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::group;

pub use archive::{
    archive_verify, archive_write, load_record, ArchiveReport, RecordIssue, CERTIFICATE_FILE,
    ENUMERATOR_FILE, GENERATOR_FILE, INDEX_FILE, PROVENANCE_FILE,
};
pub use record::CodeRecord;
pub use search::{
    iteration_rng, run_search, run_search_outcome, Construction, Sampling, SearchOutcome, SearchSpec,
    DEFAULT_DIFFUSION_FACTORS,
};
pub use table::{Cell, Target};

/// Orthogonal groups up to this order are walked in full instead of sampled.
pub const EXHAUST_GROUP_LIMIT: u64 = 50_000;

/// One construction tried for a cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellAttempt {
    pub construction: Construction,
    pub sampling: Sampling,
    pub samples: u64,
    pub best: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellReport {
    pub cell: Cell,
    pub achieved: Option<usize>,
    pub met: bool,
    pub record: Option<CodeRecord>,
    pub attempts: Vec<CellAttempt>,
}

impl CellReport {
    /// Every attempted construction walked its whole group, so `achieved`
    /// is the best those constructions can give.
    pub fn exhaustive(&self) -> bool {
        !self.attempts.is_empty() && self.attempts.iter().all(|a| a.sampling == Sampling::ExhaustiveGroup)
    }

    pub fn to_key_values(&self) -> String {
        let mut out = format!(
            "q={}\nlength={}\ntarget={}\ntarget_d={}\nachieved={}\nmet={}\nexhaustive={}\n",
            self.cell.q,
            self.cell.length,
            self.cell.target,
            self.cell.target_distance(),
            self.achieved.map_or("none".to_string(), |d| d.to_string()),
            self.met,
            self.exhaustive(),
        );
        for a in &self.attempts {
            out.push_str(&format!(
                "attempt={} samples={} best={}\n",
                a.construction,
                a.samples,
                a.best.map_or("none".to_string(), |d| d.to_string())
            ));
        }
        out
    }
}

/// Seed constructions applicable to `(q, n)`, in the order they are tried.
pub fn cell_constructions(q: u32, n: usize) -> Vec<Construction> {
    [Construction::Eq1, Construction::Eq2, Construction::Eq3]
        .into_iter()
        .filter(|&c| SearchSpec::new(q, n, c).validate().is_ok())
        .collect()
}

fn sampling_for(spec: &SearchSpec, field: PrimeField, budget: u64) -> Sampling {
    let m = spec.factor_size();
    let order = group::orthogonal_group_order_formula(m, field)
        .ok()
        .and_then(|o| u64::try_from(o).ok());
    match order {
        Some(o) if o <= EXHAUST_GROUP_LIMIT.min(budget) => Sampling::ExhaustiveGroup,
        _ => Sampling::Uniform,
    }
}

/// Tries the seed constructions for a table cell with `budget` samples each
/// until the target distance is reached.
pub fn reproduce_cell(q: u32, length: usize, budget: u64, seed: u64) -> Result<CellReport> {
    let cell = table::lookup(q, length)?;
    let n = cell.half_length();
    let target = cell.target_distance();
    let constructions = cell_constructions(q, n);
    if constructions.is_empty() {
        return Err(Error::InvalidSpec(format!(
            "no construction applies to q = {q}, length {length}"
        )));
    }
    let field = PrimeField::new(q as u64)?;
    let mut report = CellReport {
        cell,
        achieved: None,
        met: false,
        record: None,
        attempts: Vec::new(),
    };
    for construction in constructions {
        let mut spec = SearchSpec::new(q, n, construction);
        spec.iterations = budget;
        spec.seed = seed;
        spec.stop_at = Some(target);
        spec.sampling = sampling_for(&spec, field, budget);
        let (best, samples) = match run_search_outcome(&spec) {
            Ok(out) => {
                let d = out.record.d;
                if report.achieved.is_none_or(|a| d > a) {
                    report.achieved = Some(d);
                    report.record = Some(out.record);
                }
                (Some(d), out.samples)
            }
            Err(Error::NoCandidate) => (None, budget),
            Err(e) => return Err(e),
        };
        report.attempts.push(CellAttempt {
            construction,
            sampling: spec.sampling,
            samples,
            best,
        });
        if report.achieved.is_some_and(|d| d >= target) {
            break;
        }
    }
    report.met = report.achieved.is_some_and(|d| d >= target);
    Ok(report)
}
