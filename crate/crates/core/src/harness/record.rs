use crate::code::{
    macwilliams_transform, message_space_size, Classification, DistanceRequest, DistanceVerdict, Engine,
    LinearCode, WeightEnumerator,
};
use crate::construct::Provenance;
use crate::error::{Error, Result};
use crate::matrix::FqMatrix;

/// A self-dual `[2n, n, d]` code with the evidence for its distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeRecord {
    pub q: u32,
    pub half_length: usize,
    pub d: usize,
    pub classification: Classification,
    pub generator: FqMatrix,
    pub enumerator: Option<WeightEnumerator>,
    /// `d` rests on the all-minors-nonsingular test alone.
    pub mds_certificate: bool,
    pub provenance: Provenance,
    /// Seconds since the Unix epoch, set when the record is archived.
    pub timestamp: Option<u64>,
}

impl CodeRecord {
    /// Certifies `code` with the given engine and records the result.
    pub fn from_code(
        code: &LinearCode,
        engine: Engine,
        max_enum: u128,
        bz_budget: Option<u64>,
        provenance: Provenance,
    ) -> Result<Self> {
        if !code.is_self_dual() {
            return Err(Error::NotSelfDual);
        }
        let q = code.field().q();
        let k = code.dimension();
        let enumerator = if message_space_size(q, k) <= max_enum {
            let w = code.weight_enumerator(max_enum)?;
            if macwilliams_transform(&w, q, k)? != w {
                return Err(Error::InconsistentEnumerator(
                    "self-dual code is not a MacWilliams fixed point".into(),
                ));
            }
            Some(w)
        } else {
            None
        };
        let (d, mds_certificate) = match &enumerator {
            Some(w) if engine == Engine::Auto || engine == Engine::Exhaustive => {
                (w.min_distance().ok_or(Error::ZeroCode)?, false)
            }
            _ => {
                let req = DistanceRequest {
                    engine,
                    exhaustive_cap: max_enum,
                    bz_budget,
                    floor: None,
                };
                match code.evaluate_distance(&req)? {
                    DistanceVerdict::Exact { d, .. } => (d, false),
                    DistanceVerdict::MdsCertified { d } => (d, true),
                    _ => return Err(Error::NoCandidate),
                }
            }
        };
        Ok(CodeRecord {
            q,
            half_length: k,
            d,
            classification: Classification::of(k, d)?,
            generator: code.generator().clone(),
            enumerator,
            mds_certificate,
            provenance,
            timestamp: None,
        })
    }

    pub fn length(&self) -> usize {
        2 * self.half_length
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        LinearCode::new(self.generator.clone())
    }

    /// Archive directory name `q{q}_n{2n}_k{n}_d{d}`.
    pub fn name(&self) -> String {
        format!(
            "q{}_n{}_k{}_d{}",
            self.q,
            self.length(),
            self.half_length,
            self.d
        )
    }

    /// Summary fields followed by the provenance, as `key=value` lines.
    pub fn to_key_values(&self) -> String {
        let mut p = Provenance::default()
            .with("q", self.q)
            .with("length", self.length())
            .with("dimension", self.half_length)
            .with("d", self.d)
            .with("classification", self.classification.class)
            .with("mds_certificate", self.mds_certificate);
        p.extend(&self.provenance);
        if let Some(t) = self.timestamp {
            p.set("timestamp", t);
        }
        p.to_text()
    }
}
