//! Growing self-dual codes by two or four coordinates.
//!
//! Each extension appends a short pattern to every generator row so that the
//! result stays self-orthogonal. The four-coordinate variants then adjoin one
//! extra isotropic row, and [`complete_to_self_dual`] fills the remaining
//! dimensions with random isotropic vectors.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::{DistanceRequest, DistanceVerdict, LinearCode, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};
use crate::matrix::FqMatrix;

/// Constants of an extension pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternConstants {
    /// `a^2 = -1`; rows get `(λa, λ)` and `(-λ, λa)`.
    Two { a: Elem },
    /// `a^2 + b^2 + c^2 + d^2 = 0`; rows get `λ(a, b, c, d)` and `λ(-b, a, -d, c)`.
    Four { a: Elem, b: Elem, c: Elem, d: Elem },
    /// `a^2 = c^2 = -1`; rows get `(λa, λ, λc, λ)` and `(-λ, λa, -λ, λc)`.
    TwoPlusTwo { a: Elem, c: Elem },
}

/// Pattern constants plus one scalar per extended row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionPattern {
    field: PrimeField,
    constants: PatternConstants,
    lambdas: Vec<Elem>,
}

impl ExtensionPattern {
    pub fn two(field: PrimeField, a: Elem, lambdas: Vec<Elem>) -> Result<Self> {
        Self::new(field, PatternConstants::Two { a }, lambdas)
    }

    pub fn four(field: PrimeField, abcd: (Elem, Elem, Elem, Elem), lambdas: Vec<Elem>) -> Result<Self> {
        let (a, b, c, d) = abcd;
        Self::new(field, PatternConstants::Four { a, b, c, d }, lambdas)
    }

    pub fn two_plus_two(field: PrimeField, a: Elem, c: Elem, lambdas: Vec<Elem>) -> Result<Self> {
        Self::new(field, PatternConstants::TwoPlusTwo { a, c }, lambdas)
    }

    pub fn new(field: PrimeField, constants: PatternConstants, lambdas: Vec<Elem>) -> Result<Self> {
        let f = field;
        let sq = |x: Elem| f.mul(x, x);
        for &x in match constants {
            PatternConstants::Two { a } => vec![a],
            PatternConstants::Four { a, b, c, d } => vec![a, b, c, d],
            PatternConstants::TwoPlusTwo { a, c } => vec![a, c],
        }
        .iter()
        .chain(&lambdas)
        {
            f.check(x as u64)?;
        }
        let ok = match constants {
            PatternConstants::Two { a } => sq(a) == f.minus_one(),
            PatternConstants::Four { a, b, c, d } => {
                f.add(f.add(sq(a), sq(b)), f.add(sq(c), sq(d))) == 0 && (a, b, c, d) != (0, 0, 0, 0)
            }
            PatternConstants::TwoPlusTwo { a, c } => sq(a) == f.minus_one() && sq(c) == f.minus_one(),
        };
        if !ok {
            return Err(Error::InvalidSpec(format!(
                "pattern constants {constants:?} do not satisfy their square condition over {field}"
            )));
        }
        Ok(ExtensionPattern {
            field,
            constants,
            lambdas,
        })
    }

    /// `a = sqrt(-1)`, all `λ = 1`.
    pub fn default_two(field: PrimeField, rows: usize) -> Result<Self> {
        Self::two(field, field.sqrt_minus_one()?, vec![1; rows])
    }

    /// The smallest `(α, β, 1, 0)` quadruple, all `λ = 1`.
    pub fn default_four(field: PrimeField, rows: usize) -> Result<Self> {
        Self::four(field, field.four_squares_zero()?, vec![1; rows])
    }

    /// `a = c = sqrt(-1)`, all `λ = 1`.
    pub fn default_two_plus_two(field: PrimeField, rows: usize) -> Result<Self> {
        let a = field.sqrt_minus_one()?;
        Self::two_plus_two(field, a, a, vec![1; rows])
    }

    /// Same constants, new scalars.
    pub fn with_lambdas(&self, lambdas: Vec<Elem>) -> Result<Self> {
        Self::new(self.field, self.constants, lambdas)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn constants(&self) -> PatternConstants {
        self.constants
    }

    pub fn lambdas(&self) -> &[Elem] {
        &self.lambdas
    }

    /// Number of appended coordinates.
    pub fn width(&self) -> usize {
        match self.constants {
            PatternConstants::Two { .. } => 2,
            _ => 4,
        }
    }

    /// Appended coordinates for zero-based row `i` (row `i + 1` in the
    /// one-based convention, so even `i` takes the first pattern).
    fn columns(&self, i: usize) -> Vec<Elem> {
        let f = self.field;
        let l = self.lambdas[i];
        let odd = i % 2 == 0;
        let raw = match (self.constants, odd) {
            (PatternConstants::Two { a }, true) => vec![a, 1],
            (PatternConstants::Two { a }, false) => vec![f.minus_one(), a],
            (PatternConstants::Four { a, b, c, d }, true) => vec![a, b, c, d],
            (PatternConstants::Four { a, b, c, d }, false) => vec![f.neg(b), a, f.neg(d), c],
            (PatternConstants::TwoPlusTwo { a, c }, true) => vec![a, 1, c, 1],
            (PatternConstants::TwoPlusTwo { a, c }, false) => {
                vec![f.minus_one(), a, f.minus_one(), c]
            }
        };
        raw.into_iter().map(|x| f.mul(l, x)).collect()
    }

    fn check_rows(&self, rows: usize, field: PrimeField) -> Result<()> {
        if field != self.field {
            return Err(Error::FieldMismatch(field.q(), self.field.q()));
        }
        if self.lambdas.len() != rows {
            return Err(Error::DimensionMismatch(format!(
                "{} lambdas for {rows} rows",
                self.lambdas.len()
            )));
        }
        Ok(())
    }
}

fn require_self_dual(c: &LinearCode) -> Result<()> {
    if c.is_self_dual() {
        Ok(())
    } else {
        Err(Error::NotSelfDual)
    }
}

/// Appends the pattern columns to every row of `g`.
fn append_pattern(g: &FqMatrix, pattern: &ExtensionPattern) -> Result<FqMatrix> {
    pattern.check_rows(g.rows(), g.field())?;
    let rows: Vec<Vec<Elem>> = (0..g.rows())
        .map(|i| {
            let mut r = g.row(i).to_vec();
            r.extend(pattern.columns(i));
            r
        })
        .collect();
    FqMatrix::from_elem_rows(g.field(), g.cols() + pattern.width(), &rows)
}

fn self_orthogonal(g: FqMatrix) -> Result<LinearCode> {
    let code = LinearCode::new(g)?;
    debug_assert!(code.is_self_orthogonal());
    Ok(code)
}

/// Self-orthogonal `[2n + 2, n]` code from a self-dual `[2n, n]` code.
pub fn extend_two(c: &LinearCode, pattern: &ExtensionPattern) -> Result<LinearCode> {
    require_self_dual(c)?;
    if !matches!(pattern.constants, PatternConstants::Two { .. }) {
        return Err(Error::InvalidSpec("extend_two needs a two-column pattern".into()));
    }
    self_orthogonal(append_pattern(c.generator(), pattern)?)
}

/// The `[2n + 4, n]` stage of the four-column extension, before `x` is adjoined.
pub fn extend_four_rows(c: &LinearCode, pattern: &ExtensionPattern) -> Result<LinearCode> {
    require_self_dual(c)?;
    if !matches!(pattern.constants, PatternConstants::Four { .. }) {
        return Err(Error::InvalidSpec("extend_four needs a four-column pattern".into()));
    }
    self_orthogonal(append_pattern(c.generator(), pattern)?)
}

/// Adjoins `x` to `stage`, checking that it is orthogonal to the stage,
/// isotropic and outside it.
fn adjoin_isotropic(stage: &LinearCode, x: &[Elem]) -> Result<LinearCode> {
    let f = stage.field();
    if x.len() != stage.length() {
        return Err(Error::InvalidExtensionVector(format!(
            "length {} instead of {}",
            x.len(),
            stage.length()
        )));
    }
    if stage.generator().row_iter().any(|r| f.dot(r, x) != 0) {
        return Err(Error::InvalidExtensionVector("not in the dual of the extended code".into()));
    }
    if f.dot(x, x) != 0 {
        return Err(Error::InvalidExtensionVector("not isotropic".into()));
    }
    if stage.contains(x) {
        return Err(Error::InvalidExtensionVector("dependent on the extended rows".into()));
    }
    let row = FqMatrix::from_elem_rows(f, x.len(), &[x.to_vec()])?;
    self_orthogonal(stage.generator().vstack(&row)?)
}

/// Self-orthogonal `[2n + 4, n + 1]` code: the four-column stage plus `x`.
pub fn extend_four(c: &LinearCode, pattern: &ExtensionPattern, x: &[Elem]) -> Result<LinearCode> {
    adjoin_isotropic(&extend_four_rows(c, pattern)?, x)
}

/// Block matrix rows `(e_i | A_i, p_i)` of the two-plus-two extension, with
/// `p_i` the four pattern columns of row `i`.
fn two_plus_two_rows(c: &LinearCode, pattern: &ExtensionPattern) -> Result<FqMatrix> {
    require_self_dual(c)?;
    if !matches!(pattern.constants, PatternConstants::TwoPlusTwo { .. }) {
        return Err(Error::InvalidSpec("extend_two_plus_two needs an (a, c) pattern".into()));
    }
    let g = c.generator();
    let n = g.rows();
    if g.cols() != 2 * n || !g.select(&(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>()).is_identity() {
        return Err(Error::NotSystematic);
    }
    pattern.check_rows(n + 1, g.field())?;
    let rows: Vec<Vec<Elem>> = (0..n)
        .map(|i| {
            let mut r = g.row(i).to_vec();
            r.extend(pattern.columns(i));
            r
        })
        .collect();
    FqMatrix::from_elem_rows(g.field(), 2 * n + 4, &rows)
}

/// Basis of the vectors `x` of length `n + 2` orthogonal to every row
/// `(A_i, p_i1, p_i2)`; the isotropic ones are the valid final-row choices.
pub fn two_plus_two_candidates(c: &LinearCode, pattern: &ExtensionPattern) -> Result<FqMatrix> {
    let rows = two_plus_two_rows(c, pattern)?;
    let n = rows.rows();
    let all: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (n..2 * n + 2).collect();
    Ok(rows.select(&all, &cols).null_space())
}

/// Self-orthogonal `[2n + 4, n + 1]` code from a systematic self-dual
/// `(I_n | A)`; the last row is `(0 | x | -λ, λc)` with `λ` the final scalar.
pub fn extend_two_plus_two(c: &LinearCode, pattern: &ExtensionPattern, x: &[Elem]) -> Result<LinearCode> {
    let rows = two_plus_two_rows(c, pattern)?;
    let f = rows.field();
    let n = rows.rows();
    if x.len() != n + 2 {
        return Err(Error::InvalidExtensionVector(format!("length {} instead of {}", x.len(), n + 2)));
    }
    let PatternConstants::TwoPlusTwo { c: cc, .. } = pattern.constants else {
        unreachable!()
    };
    let l = pattern.lambdas[n];
    let mut last = vec![0; n];
    last.extend_from_slice(x);
    last.push(f.neg(l));
    last.push(f.mul(l, cc));
    if last.iter().all(|&v| v == 0) {
        return Err(Error::InvalidExtensionVector("final row is zero".into()));
    }
    if rows.row_iter().any(|r| f.dot(&r[n..2 * n + 2], x) != 0) {
        return Err(Error::InvalidExtensionVector("not orthogonal to the extended rows".into()));
    }
    if f.dot(x, x) != 0 {
        return Err(Error::InvalidExtensionVector("not isotropic".into()));
    }
    let last = FqMatrix::from_elem_rows(f, 2 * n + 4, &[last])?;
    self_orthogonal(rows.vstack(&last)?)
}

/// `C = D + E` with `D` spanned by the minimum-weight codewords.
#[derive(Clone, Debug)]
pub struct SplitDecomposition {
    pub distance: usize,
    /// Basis of `D`.
    pub minimum_part: FqMatrix,
    /// Rows of the original generator completing `D` to the whole code.
    pub rest: FqMatrix,
}

/// Splits a self-dual code along the span of its minimum-weight codewords.
/// Fails with [`Error::DegenerateSplit`] when that span is the whole code.
pub fn split_decomposition(c: &LinearCode, cap: u128) -> Result<SplitDecomposition> {
    require_self_dual(c)?;
    let (distance, minimum_part) = c.minimum_weight_span(cap)?;
    if minimum_part.rows() == c.dimension() {
        return Err(Error::DegenerateSplit);
    }
    let mut span = LinearCode::new(minimum_part.clone())?;
    let mut rest = Vec::new();
    for r in c.generator().row_iter() {
        if !span.contains(r) {
            rest.push(r.to_vec());
            let row = FqMatrix::from_elem_rows(c.field(), c.length(), &[r.to_vec()])?;
            span = LinearCode::new(span.generator().vstack(&row)?)?;
        }
    }
    Ok(SplitDecomposition {
        distance,
        minimum_part,
        rest: FqMatrix::from_elem_rows(c.field(), c.length(), &rest)?,
    })
}

/// Self-orthogonal `[2n + 2, n]` code: `D` padded with zeros, `E` extended by
/// the two-column pattern (one scalar per row of `E`).
pub fn split_extend(split: &SplitDecomposition, pattern: &ExtensionPattern) -> Result<LinearCode> {
    if !matches!(pattern.constants, PatternConstants::Two { .. }) {
        return Err(Error::InvalidSpec("split_extend needs a two-column pattern".into()));
    }
    let f = split.minimum_part.field();
    let padded = split
        .minimum_part
        .hstack(&FqMatrix::zeros(f, split.minimum_part.rows(), 2))?;
    let extended = append_pattern(&split.rest, pattern)?;
    self_orthogonal(padded.vstack(&extended)?)
}

/// Split when possible, otherwise the plain two-column extension with the
/// same constants and all scalars taken from the front of `lambdas`.
pub fn split_or_extend_two(c: &LinearCode, pattern: &ExtensionPattern, cap: u128) -> Result<LinearCode> {
    match split_decomposition(c, cap) {
        Ok(split) => {
            let rows = split.rest.rows();
            let p = pattern.with_lambdas(pattern.lambdas.iter().copied().take(rows).collect())?;
            split_extend(&split, &p)
        }
        Err(Error::DegenerateSplit) => extend_two(c, pattern),
        Err(e) => Err(e),
    }
}

const ISOTROPIC_ATTEMPTS: usize = 256;
const ISOTROPIC_SCAN_CAP: u128 = 1_000_000;

fn combine(f: PrimeField, basis: &FqMatrix, coeffs: &[Elem]) -> Vec<Elem> {
    let mut v = vec![0; basis.cols()];
    for (row, &c) in basis.row_iter().zip(coeffs) {
        if c != 0 {
            for (x, &r) in v.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(c, r));
            }
        }
    }
    v
}

/// A random nonzero vector in the span of `basis` accepted by `ok`.
/// Falls back to a full scan of the span when it is small.
fn random_in_span<R, F>(basis: &FqMatrix, rng: &mut R, ok: F) -> Result<Vec<Elem>>
where
    R: Rng + ?Sized,
    F: Fn(&[Elem]) -> bool,
{
    let f = basis.field();
    let q = f.q();
    let dim = basis.rows();
    if dim == 0 {
        return Err(Error::CompletionFailed("candidate space is zero".into()));
    }
    let attempts = ISOTROPIC_ATTEMPTS.max(64 * q as usize);
    for _ in 0..attempts {
        let coeffs: Vec<Elem> = (0..dim).map(|_| rng.gen_range(0..q)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        let v = combine(f, basis, &coeffs);
        if ok(&v) {
            return Ok(v);
        }
    }
    let size = (q as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
    if size <= ISOTROPIC_SCAN_CAP {
        let mut coeffs = vec![0; dim];
        for _ in 1..size {
            for c in coeffs.iter_mut() {
                *c += 1;
                if *c < q {
                    break;
                }
                *c = 0;
            }
            let v = combine(f, basis, &coeffs);
            if ok(&v) {
                return Ok(v);
            }
        }
        return Err(Error::CompletionFailed("no admissible vector in the candidate space".into()));
    }
    Err(Error::CompletionFailed(format!(
        "no admissible vector after {attempts} random draws"
    )))
}

/// A random isotropic vector of `dual(c)` outside `c`.
pub fn random_isotropic_extension<R: Rng + ?Sized>(c: &LinearCode, rng: &mut R) -> Result<Vec<Elem>> {
    let f = c.field();
    let dual = c.generator().null_space();
    random_in_span(&dual, rng, |v| f.dot(v, v) == 0 && !c.contains(v))
}

/// One random completion of a self-orthogonal code of even length.
pub fn complete_once<R: Rng + ?Sized>(c: &LinearCode, rng: &mut R) -> Result<LinearCode> {
    let half = c.length() / 2;
    let mut current = c.clone();
    while current.dimension() < half {
        let x = random_isotropic_extension(&current, rng)?;
        current = adjoin_isotropic(&current, &x)?;
    }
    Ok(current)
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Distance used for ranking: exact value, or the proven lower bound.
fn score(code: &LinearCode, req: &DistanceRequest) -> Result<usize> {
    Ok(match code.evaluate_distance(req)? {
        DistanceVerdict::Unknown { lower, .. } => lower,
        DistanceVerdict::BelowFloor => 0,
        v => v.distance().unwrap_or(0),
    })
}

/// Higher score first, then the smaller generator entries.
fn better(a: &(usize, LinearCode), b: &(usize, LinearCode)) -> Ordering {
    b.0.cmp(&a.0)
        .then_with(|| a.1.generator().as_slice().cmp(b.1.generator().as_slice()))
}

/// Runs `trials` seeded attempts in parallel and keeps the best code.
fn best_of<F>(trials: usize, seed: u64, req: &DistanceRequest, attempt: F) -> Result<LinearCode>
where
    F: Fn(&mut ChaCha8Rng) -> Result<LinearCode> + Sync,
{
    let results: Vec<Result<(usize, LinearCode)>> = (0..trials.max(1))
        .into_par_iter()
        .map(|t| {
            let code = attempt(&mut trial_rng(seed, t))?;
            Ok((score(&code, req)?, code))
        })
        .collect();
    let mut first_err = None;
    let mut best: Option<(usize, LinearCode)> = None;
    for r in results {
        match r {
            Ok(cand) => {
                if best.as_ref().is_none_or(|b| better(&cand, b) == Ordering::Less) {
                    best = Some(cand);
                }
            }
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    match best {
        Some((_, code)) => Ok(code),
        None => Err(first_err.expect("at least one trial")),
    }
}

/// Completes a self-orthogonal code to a self-dual one, keeping the best of
/// `trials` random completions.
pub fn complete_to_self_dual(c: &LinearCode, trials: usize, seed: u64) -> Result<LinearCode> {
    complete_to_self_dual_with(c, trials, seed, &DistanceRequest::default())
}

pub fn complete_to_self_dual_with(
    c: &LinearCode,
    trials: usize,
    seed: u64,
    req: &DistanceRequest,
) -> Result<LinearCode> {
    if c.length() % 2 != 0 {
        return Err(Error::InvalidSpec(format!("odd length {}", c.length())));
    }
    if !c.is_self_orthogonal() {
        return Err(Error::CompletionFailed("input is not self-orthogonal".into()));
    }
    if c.dimension() == c.length() / 2 {
        return Ok(c.clone());
    }
    best_of(trials, seed, req, |rng| complete_once(c, rng))
}

/// Four-column extension with `x` chosen at random, then completed; the
/// best of `trials` self-dual `[2n + 4, n + 2]` results.
pub fn extend_four_completed(
    c: &LinearCode,
    pattern: &ExtensionPattern,
    trials: usize,
    seed: u64,
    req: &DistanceRequest,
) -> Result<LinearCode> {
    let stage = extend_four_rows(c, pattern)?;
    best_of(trials, seed, req, |rng| {
        let x = random_isotropic_extension(&stage, rng)?;
        complete_once(&adjoin_isotropic(&stage, &x)?, rng)
    })
}

/// A random isotropic final-row vector for the two-plus-two extension.
pub fn random_two_plus_two_vector<R: Rng + ?Sized>(
    c: &LinearCode,
    pattern: &ExtensionPattern,
    rng: &mut R,
) -> Result<Vec<Elem>> {
    let basis = two_plus_two_candidates(c, pattern)?;
    let f = c.field();
    random_in_span(&basis, rng, |v| f.dot(v, v) == 0)
}

/// Two-plus-two extension with `x` chosen at random, then completed.
pub fn extend_two_plus_two_completed(
    c: &LinearCode,
    pattern: &ExtensionPattern,
    trials: usize,
    seed: u64,
    req: &DistanceRequest,
) -> Result<LinearCode> {
    best_of(trials, seed, req, |rng| {
        let x = random_two_plus_two_vector(c, pattern, rng)?;
        complete_once(&extend_two_plus_two(c, pattern, &x)?, rng)
    })
}

/// Two-column (or split) extension, then completed.
pub fn extend_two_completed(
    c: &LinearCode,
    pattern: &ExtensionPattern,
    split: bool,
    trials: usize,
    seed: u64,
    req: &DistanceRequest,
) -> Result<LinearCode> {
    let stage = if split {
        split_or_extend_two(c, pattern, DEFAULT_ENUMERATION_CAP)?
    } else {
        extend_two(c, pattern)?
    };
    complete_to_self_dual_with(&stage, trials, seed, req)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn code(q: u64, rows: &[&[i64]]) -> LinearCode {
        LinearCode::new(FqMatrix::from_rows(gf(q), rows).unwrap()).unwrap()
    }

    fn distance(c: &LinearCode) -> usize {
        c.min_distance_exhaustive(DEFAULT_ENUMERATION_CAP).unwrap()
    }

    #[test]
    fn pattern_validation() {
        let f = gf(5);
        assert!(ExtensionPattern::two(f, 2, vec![1]).is_ok());
        assert!(ExtensionPattern::two(f, 1, vec![1]).is_err());
        assert!(ExtensionPattern::four(f, (1, 2, 0, 0), vec![]).is_ok());
        assert!(ExtensionPattern::four(f, (0, 0, 0, 0), vec![]).is_err());
        assert!(ExtensionPattern::two_plus_two(f, 2, 3, vec![1]).is_ok());
        assert!(ExtensionPattern::default_two(gf(7), 1).is_err());
    }

    #[test]
    fn two_column_example() {
        let c = code(5, &[&[1, 2]]);
        let p = ExtensionPattern::two(gf(5), 2, vec![1]).unwrap();
        let e = extend_two(&c, &p).unwrap();
        assert_eq!(e.generator().row(0), &[1, 2, 2, 1]);
        assert!(e.is_self_orthogonal());
    }

    #[test]
    fn zero_lambdas_pad_with_zeros() {
        let f = gf(13);
        let c = code(13, &[&[1, 0, 0, 5, 0, 0], &[0, 1, 0, 0, 10, 4], &[0, 0, 1, 0, 9, 10]]);
        assert!(c.is_self_dual());
        let p = ExtensionPattern::two(f, 5, vec![0; 3]).unwrap();
        let e = extend_two(&c, &p).unwrap();
        assert!(e.is_self_orthogonal());
        assert_eq!(distance(&e), distance(&c));
    }

    #[test]
    fn non_self_dual_rejected() {
        let c = code(5, &[&[1, 1]]);
        let p = ExtensionPattern::two(gf(5), 2, vec![1]).unwrap();
        assert!(matches!(extend_two(&c, &p), Err(Error::NotSelfDual)));
    }

    #[test]
    fn four_column_ternary() {
        let f = gf(3);
        let c = code(3, &[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        assert!(c.is_self_dual());
        assert_eq!(distance(&c), 3);
        let p = ExtensionPattern::four(f, (1, 1, 1, 0), vec![1, 1]).unwrap();
        let stage = extend_four_rows(&c, &p).unwrap();
        let mut rng = trial_rng(7, 0);
        let x = random_isotropic_extension(&stage, &mut rng).unwrap();
        let e = extend_four(&c, &p, &x).unwrap();
        assert_eq!((e.length(), e.dimension()), (8, 3));
        assert!(e.is_self_orthogonal());

        // x inside the stage code is refused
        let inside = stage.generator().row(0).to_vec();
        assert!(matches!(
            extend_four(&c, &p, &inside),
            Err(Error::InvalidExtensionVector(_))
        ));

        let full = complete_to_self_dual(&e, 8, 1).unwrap();
        assert!(full.is_self_dual());
        assert!(full.contains_code(&e));
    }

    #[test]
    fn two_plus_two_example() {
        let f = gf(5);
        let c = code(5, &[&[1, 2]]);
        let p = ExtensionPattern::two_plus_two(f, 2, 2, vec![1, 1]).unwrap();
        let basis = two_plus_two_candidates(&c, &p).unwrap();
        let mut rng = trial_rng(3, 0);
        let x = random_in_span(&basis, &mut rng, |v| f.dot(v, v) == 0).unwrap();
        let e = extend_two_plus_two(&c, &p, &x).unwrap();
        assert_eq!((e.length(), e.dimension()), (6, 2));
        assert!(e.is_self_orthogonal());
        let full = complete_to_self_dual(&e, 4, 0).unwrap();
        assert_eq!(full.dimension(), 3);
        assert!(full.is_self_dual());
    }

    #[test]
    fn two_plus_two_needs_systematic_input() {
        let f = gf(5);
        let c = code(5, &[&[2, 1]]);
        let p = ExtensionPattern::default_two_plus_two(f, 2).unwrap();
        assert!(matches!(two_plus_two_candidates(&c, &p), Err(Error::NotSystematic)));
    }

    #[test]
    fn mds_split_is_degenerate() {
        let f = gf(13);
        // an MDS [6, 3, 4] code: its weight-4 words span everything
        let c = crate::group::enumerate_orthogonal(3, f, 10_000)
            .unwrap()
            .iter()
            .map(|l| crate::construct::from_witness(&crate::construct::build_eq1(l, f).unwrap()).unwrap())
            .find(LinearCode::is_mds_systematic)
            .unwrap();
        assert_eq!(distance(&c), 4);
        assert!(matches!(
            split_decomposition(&c, DEFAULT_ENUMERATION_CAP),
            Err(Error::DegenerateSplit)
        ));
        let p = ExtensionPattern::default_two(f, 3).unwrap();
        assert_eq!(
            split_or_extend_two(&c, &p, DEFAULT_ENUMERATION_CAP).unwrap(),
            extend_two(&c, &p).unwrap()
        );
    }

    #[test]
    fn proper_split() {
        let f = gf(13);
        let c = code(13, &[&[1, 0, 0, 5, 0, 0], &[0, 1, 0, 0, 10, 4], &[0, 0, 1, 0, 9, 10]]);
        let s = split_decomposition(&c, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(s.distance, 2);
        assert_eq!(s.minimum_part.rows(), 1);
        assert_eq!(s.rest.rows(), 2);
        let p = ExtensionPattern::two(f, 5, vec![1, 1]).unwrap();
        let e = split_extend(&s, &p).unwrap();
        assert_eq!((e.length(), e.dimension()), (8, 3));
        assert!(e.is_self_orthogonal());
        assert_eq!(e.generator().row(0), &[1, 0, 0, 5, 0, 0, 0, 0]);
        assert!(distance(&e) >= 2);
    }

    #[test]
    fn completion_of_small_code() {
        let c = code(5, &[&[1, 2]]);
        let p = ExtensionPattern::two(gf(5), 2, vec![1]).unwrap();
        let e = extend_two(&c, &p).unwrap();
        let full = complete_to_self_dual(&e, 4, 9).unwrap();
        assert_eq!((full.length(), full.dimension()), (4, 2));
        assert!(full.is_self_dual());
        assert!(full.contains_code(&e));
        assert_eq!(full, complete_to_self_dual(&e, 4, 9).unwrap());
    }

    #[test]
    fn self_dual_input_unchanged() {
        let c = code(5, &[&[1, 2]]);
        assert_eq!(complete_to_self_dual(&c, 3, 0).unwrap(), c);
    }
}
