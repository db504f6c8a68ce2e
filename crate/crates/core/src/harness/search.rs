//! Seeded best-of searches over one construction.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::{
    DistanceRequest, DistanceVerdict, Engine, LinearCode, DEFAULT_BZ_BUDGET, DEFAULT_EXHAUSTIVE_CAP,
};
use crate::construct::{self, NegOrthogonalWitness, Provenance};
use crate::error::{Error, Result};
use crate::extend::{self, ExtensionPattern};
use crate::field::{Elem, PrimeField};
use crate::group::{self, GeneratorSet};
use crate::matrix::FqMatrix;

use super::record::CodeRecord;

/// Default number of extra orthogonal factors for diffusion.
pub const DEFAULT_DIFFUSION_FACTORS: usize = 2;

const BATCH: u64 = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Eq1,
    Eq2,
    Eq3,
    Eq4Diffuse,
    ExtendTwo,
    ExtendFour,
    ExtendTwoPlusTwo,
    Split,
}

impl Construction {
    pub const ALL: [Construction; 8] = [
        Construction::Eq1,
        Construction::Eq2,
        Construction::Eq3,
        Construction::Eq4Diffuse,
        Construction::ExtendTwo,
        Construction::ExtendFour,
        Construction::ExtendTwoPlusTwo,
        Construction::Split,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::Eq1 => "eq1",
            Construction::Eq2 => "eq2",
            Construction::Eq3 => "eq3",
            Construction::Eq4Diffuse => "eq4-diffuse",
            Construction::ExtendTwo => "extend-two",
            Construction::ExtendFour => "extend-four",
            Construction::ExtendTwoPlusTwo => "extend-2+2",
            Construction::Split => "split",
        }
    }

    /// Number of coordinates added on top of the base code.
    fn extension(self) -> usize {
        match self {
            Construction::ExtendTwo | Construction::Split => 1,
            Construction::ExtendFour | Construction::ExtendTwoPlusTwo => 2,
            _ => 0,
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Construction::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown construction {s:?}")))
    }
}

/// How orthogonal matrices are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Sampling {
    /// Uniform elements of O_m(q).
    #[default]
    Uniform,
    /// Random words in the generators of K_u.
    KuWords,
    /// Every element of O_m(q) in turn; the iteration count is capped by the group order.
    ExhaustiveGroup,
}

impl Sampling {
    pub fn name(self) -> &'static str {
        match self {
            Sampling::Uniform => "uniform",
            Sampling::KuWords => "ku-words",
            Sampling::ExhaustiveGroup => "whole-group",
        }
    }
}

impl fmt::Display for Sampling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sampling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Sampling::Uniform, Sampling::KuWords, Sampling::ExhaustiveGroup]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown sampling mode {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub q: u32,
    pub half_length: usize,
    pub construction: Construction,
    pub iterations: u64,
    /// Defaults to `8m` for `m x m` factors.
    pub word_length: Option<usize>,
    pub seed: u64,
    pub engine: Engine,
    /// Cap on `q^k` for exhaustive enumeration and archived enumerators.
    pub max_enum: u128,
    pub bz_budget: Option<u64>,
    /// Stop after the batch in which this distance is reached.
    pub stop_at: Option<usize>,
    pub diffusion_factors: usize,
    pub sampling: Sampling,
}

impl SearchSpec {
    pub fn new(q: u32, half_length: usize, construction: Construction) -> Self {
        SearchSpec {
            q,
            half_length,
            construction,
            iterations: 1000,
            word_length: None,
            seed: 0,
            engine: Engine::Auto,
            max_enum: DEFAULT_EXHAUSTIVE_CAP,
            bz_budget: Some(DEFAULT_BZ_BUDGET),
            stop_at: None,
            diffusion_factors: DEFAULT_DIFFUSION_FACTORS,
            sampling: Sampling::Uniform,
        }
    }

    /// Half-length of the code the orthogonal matrices act on.
    fn base_half_length(&self) -> usize {
        self.half_length - self.construction.extension()
    }

    /// Which seed construction builds the `[2m, m]` base code.
    fn base_construction(&self) -> Construction {
        match self.construction {
            Construction::Eq1 | Construction::Eq2 | Construction::Eq3 => self.construction,
            _ if self.q % 4 == 1 => Construction::Eq1,
            _ => Construction::Eq2,
        }
    }

    /// Size of the orthogonal factors.
    pub fn factor_size(&self) -> usize {
        match self.base_construction() {
            Construction::Eq3 => self.base_half_length() / 2,
            _ => self.base_half_length(),
        }
    }

    pub fn word_length(&self) -> usize {
        self.word_length
            .unwrap_or_else(|| group::default_word_length(self.factor_size()))
    }

    /// Checks the spec against the construction's preconditions.
    pub fn validate(&self) -> Result<PrimeField> {
        let field = PrimeField::new(self.q as u64).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        if !field.is_odd() {
            return bad("q must be odd".into());
        }
        if self.iterations == 0 {
            return bad("iteration budget must be at least 1".into());
        }
        if self.word_length == Some(0) {
            return bad("word length must be at least 1".into());
        }
        let c = self.construction;
        let one_mod_four = self.q % 4 == 1;
        if self.half_length <= c.extension() {
            return bad(format!("{c} needs n > {}", c.extension()));
        }
        let m = self.base_half_length();
        let needs_one_mod_four = matches!(
            c,
            Construction::Eq1
                | Construction::ExtendTwo
                | Construction::Split
                | Construction::ExtendTwoPlusTwo
        );
        if needs_one_mod_four && !one_mod_four {
            return bad(format!("{c} needs q = 1 mod 4, got q = {}", self.q));
        }
        if matches!(self.base_construction(), Construction::Eq2 | Construction::Eq3) && m % 2 != 0 {
            return bad(format!("{c} needs an even base half-length, got {m}"));
        }
        if self.engine == Engine::Exhaustive {
            let size = (self.q as u128)
                .checked_pow(self.half_length as u32)
                .unwrap_or(u128::MAX);
            if size > self.max_enum {
                return bad(format!("q^n = {size} exceeds the enumeration cap {}", self.max_enum));
            }
        }
        if self.sampling == Sampling::ExhaustiveGroup && c == Construction::Eq4Diffuse {
            return bad("diffusion needs random sampling".into());
        }
        Ok(field)
    }

    fn provenance(&self) -> Provenance {
        let mut p = Provenance::new(self.construction.name())
            .with("seed", self.seed)
            .with("iterations", self.iterations)
            .with("sampling", self.sampling)
            .with("engine", self.engine)
            .with("max_enum", self.max_enum);
        if self.sampling == Sampling::KuWords {
            p.set("word_length", self.word_length());
        }
        if self.construction == Construction::Eq4Diffuse {
            p.set("diffusion_factors", self.diffusion_factors);
        }
        p
    }
}

/// RNG for iteration `i`: the spec seed with stream `i`.
pub fn iteration_rng(seed: u64, iteration: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(iteration);
    rng
}

struct Sampler {
    field: PrimeField,
    spec: SearchSpec,
    gens: GeneratorSet,
    group: Option<Vec<FqMatrix>>,
}

impl Sampler {
    fn new(spec: &SearchSpec, field: PrimeField) -> Result<Self> {
        let m = spec.factor_size();
        let gens = GeneratorSet::ku(m, field, None)?;
        let group = match spec.sampling {
            Sampling::Uniform | Sampling::KuWords => None,
            Sampling::ExhaustiveGroup => {
                let cap = usize::try_from(spec.iterations).unwrap_or(usize::MAX);
                Some(group::enumerate_orthogonal(m, field, cap)?)
            }
        };
        Ok(Sampler {
            field,
            spec: spec.clone(),
            gens,
            group,
        })
    }

    fn iterations(&self) -> u64 {
        match &self.group {
            Some(g) => self.spec.iterations.min(g.len() as u64),
            None => self.spec.iterations,
        }
    }

    fn random_factor(&self, rng: &mut ChaCha8Rng) -> Result<FqMatrix> {
        match self.spec.sampling {
            Sampling::KuWords => self.gens.random_word(self.spec.word_length(), rng),
            _ => group::random_orthogonal_uniform(self.spec.factor_size(), self.field, rng),
        }
    }

    fn factor(&self, i: u64, rng: &mut ChaCha8Rng) -> Result<FqMatrix> {
        match &self.group {
            Some(g) => Ok(g[i as usize].clone()),
            None => self.random_factor(rng),
        }
    }

    fn witness(&self, construction: Construction, l: &FqMatrix) -> Result<NegOrthogonalWitness> {
        match construction {
            Construction::Eq1 => construct::build_eq1(l, self.field),
            Construction::Eq2 => construct::build_eq2(l, self.field),
            Construction::Eq3 => construct::build_eq3(l, self.field),
            _ => unreachable!("not a seed construction"),
        }
    }

    fn lambdas(&self, rows: usize, rng: &mut ChaCha8Rng) -> Vec<Elem> {
        (0..rows).map(|_| rng.gen_range(0..self.field.q())).collect()
    }

    fn sample(&self, i: u64) -> Result<LinearCode> {
        let spec = &self.spec;
        let f = self.field;
        let mut rng = iteration_rng(spec.seed, i);
        let l = self.factor(i, &mut rng)?;
        let mut w = self.witness(spec.base_construction(), &l)?;
        if spec.construction == Construction::Eq4Diffuse {
            let factors = (0..spec.diffusion_factors)
                .map(|_| self.random_factor(&mut rng))
                .collect::<Result<Vec<_>>>()?;
            w = construct::diffuse_eq4(&w, &factors)?;
        }
        let base = construct::from_witness(&w)?;
        let m = base.dimension();
        let code = match spec.construction {
            Construction::Eq1 | Construction::Eq2 | Construction::Eq3 | Construction::Eq4Diffuse => base,
            Construction::ExtendTwo => {
                let p = ExtensionPattern::default_two(f, m)?.with_lambdas(self.lambdas(m, &mut rng))?;
                extend::complete_once(&extend::extend_two(&base, &p)?, &mut rng)?
            }
            Construction::Split => {
                let p = ExtensionPattern::default_two(f, m)?.with_lambdas(self.lambdas(m, &mut rng))?;
                let stage = extend::split_or_extend_two(&base, &p, spec.max_enum)?;
                extend::complete_once(&stage, &mut rng)?
            }
            Construction::ExtendFour => {
                let p = ExtensionPattern::default_four(f, m)?.with_lambdas(self.lambdas(m, &mut rng))?;
                let stage = extend::extend_four_rows(&base, &p)?;
                let x = extend::random_isotropic_extension(&stage, &mut rng)?;
                let e = extend::extend_four(&base, &p, &x)?;
                extend::complete_once(&e, &mut rng)?
            }
            Construction::ExtendTwoPlusTwo => {
                let p = ExtensionPattern::default_two_plus_two(f, m + 1)?
                    .with_lambdas(self.lambdas(m + 1, &mut rng))?;
                let x = extend::random_two_plus_two_vector(&base, &p, &mut rng)?;
                extend::complete_once(&extend::extend_two_plus_two(&base, &p, &x)?, &mut rng)?
            }
        };
        if !code.is_self_dual() {
            return Err(Error::NotSelfDual);
        }
        Ok(code)
    }
}

/// Distance request used while scanning samples: codes below `floor` are
/// abandoned early.
fn sample_request(spec: &SearchSpec, floor: usize) -> DistanceRequest {
    let engine = match spec.engine {
        Engine::Auto => Engine::Bz,
        e => e,
    };
    DistanceRequest {
        engine,
        exhaustive_cap: spec.max_enum,
        bz_budget: spec.bz_budget,
        floor: (floor > 0).then_some(floor),
    }
}

fn sample_distance(code: &LinearCode, spec: &SearchSpec, floor: usize) -> Result<Option<usize>> {
    let verdict = code.evaluate_distance(&sample_request(spec, floor))?;
    Ok(match verdict {
        DistanceVerdict::Unknown { .. } if spec.engine == Engine::Auto => {
            code.is_mds_systematic().then_some(code.length() - code.dimension() + 1)
        }
        v => v.distance(),
    })
}

/// Higher distance wins, then the smaller generator entries.
fn better(a: &(usize, u64, LinearCode), b: &(usize, u64, LinearCode)) -> bool {
    a.0 > b.0 || (a.0 == b.0 && a.2.generator().as_slice() < b.2.generator().as_slice())
}

/// Result of a search: the best record and how many samples were drawn.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub record: CodeRecord,
    pub samples: u64,
}

/// Runs the search and returns the best code found. Identical specs give
/// identical records regardless of thread count.
pub fn run_search(spec: &SearchSpec) -> Result<CodeRecord> {
    Ok(run_search_outcome(spec)?.record)
}

pub fn run_search_outcome(spec: &SearchSpec) -> Result<SearchOutcome> {
    let field = spec.validate()?;
    let sampler = Sampler::new(spec, field)?;
    let total = sampler.iterations();
    let floor = AtomicUsize::new(0);
    let mut best: Option<(usize, u64, LinearCode)> = None;
    let mut start = 0;
    while start < total {
        let end = (start + BATCH).min(total);
        let found: Vec<(usize, u64, LinearCode)> = (start..end)
            .into_par_iter()
            .map(|i| -> Result<Option<(usize, u64, LinearCode)>> {
                let code = sampler.sample(i)?;
                // codes strictly below the best so far can never win
                let d = sample_distance(&code, spec, floor.load(AtomicOrdering::Relaxed))?;
                Ok(d.map(|d| {
                    floor.fetch_max(d, AtomicOrdering::Relaxed);
                    (d, i, code)
                }))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        for cand in found {
            if best.as_ref().is_none_or(|b| better(&cand, b)) {
                best = Some(cand);
            }
        }
        start = end;
        if let (Some(stop), Some((d, _, _))) = (spec.stop_at, &best) {
            if *d >= stop {
                break;
            }
        }
    }
    let (_, iteration, code) = best.ok_or(Error::NoCandidate)?;
    let provenance = spec
        .provenance()
        .with("iteration", iteration)
        .with("stream", iteration);
    let record = CodeRecord::from_code(&code, spec.engine, spec.max_enum, spec.bz_budget, provenance)?;
    Ok(SearchOutcome {
        record,
        samples: start,
    })
}
