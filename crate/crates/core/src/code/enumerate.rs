//! Exhaustive codeword enumeration, weight enumerators and the MacWilliams
//! transform.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::matrix::{parse_numbers, FqMatrix};

/// Default cap on `q^k` for full enumeration.
pub const DEFAULT_ENUMERATION_CAP: u128 = 100_000_000;

const CHUNK: u64 = 1 << 14;

/// Weight distribution `(A_0, ..., A_n)` of a linear code.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    coefficients: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn new(coefficients: Vec<BigUint>) -> Self {
        WeightEnumerator { coefficients }
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        WeightEnumerator {
            coefficients: counts.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    /// Code length `n`.
    pub fn length(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn total(&self) -> BigUint {
        self.coefficients.iter().sum()
    }

    /// Smallest nonzero weight that occurs, if any.
    pub fn min_distance(&self) -> Option<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, a)| !a.is_zero())
            .map(|(i, _)| i)
    }

    /// File form: `q n k` header, then the `n + 1` coefficients.
    pub fn to_text(&self, q: u32, k: usize) -> String {
        let coeffs: Vec<String> = self.coefficients.iter().map(BigUint::to_string).collect();
        format!("{} {} {}\n{}\n", q, self.length(), k, coeffs.join(" "))
    }

    /// Parses the file form, returning `(q, k, enumerator)`.
    pub fn from_text(text: &str) -> Result<(u32, usize, WeightEnumerator)> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty enumerator file".into()))?;
        let [q, n, k] = parse_numbers(header)?[..] else {
            return Err(Error::Parse(format!("bad enumerator header {header:?}")));
        };
        let body = lines
            .next()
            .ok_or_else(|| Error::Parse("missing coefficient line".into()))?;
        let coefficients = body
            .split_whitespace()
            .map(|t| {
                t.parse::<BigUint>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coefficients.len() as u64 != n + 1 {
            return Err(Error::Parse(format!(
                "{} coefficients for length {n}",
                coefficients.len()
            )));
        }
        Ok((q as u32, k as usize, WeightEnumerator { coefficients }))
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.coefficients.iter().map(BigUint::to_string).collect();
        write!(f, "[{}]", coeffs.join(", "))
    }
}

pub(crate) fn message_space_size(q: u32, k: usize) -> u128 {
    (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

pub(crate) fn check_cap(q: u32, k: usize, cap: u128) -> Result<()> {
    let size = message_space_size(q, k);
    if size > cap {
        Err(Error::EnumerationTooLarge { size, cap })
    } else {
        Ok(())
    }
}

/// Weight histogram over the codewords whose last nonzero message
/// coordinate is 1, i.e. one representative per projective point.
///
/// Messages are walked in modular q-ary Gray order, so each step adds a
/// single generator row. Work is split into fixed chunks and summed, so the
/// result does not depend on the thread count.
pub(crate) fn projective_weight_histogram(g: &FqMatrix) -> Vec<u64> {
    let f = g.field();
    let q = f.q() as u64;
    let (k, n) = (g.rows(), g.cols());
    let mut tasks = Vec::new();
    for lead in 0..k {
        let span = q.pow(lead as u32);
        let mut start = 0;
        while start < span {
            let end = (start + CHUNK).min(span);
            tasks.push((lead, start, end));
            start = end;
        }
    }
    tasks
        .par_iter()
        .map(|&(lead, start, end)| {
            let mut hist = vec![0u64; n + 1];
            // digits of `start`, then the Gray word g_i = t_i - t_{i+1}
            let mut t = start;
            let digits: Vec<u64> = (0..lead)
                .map(|_| {
                    let d = t % q;
                    t /= q;
                    d
                })
                .collect();
            let mut word: Vec<Elem> = g.row(lead).to_vec();
            for i in 0..lead {
                let next = if i + 1 < lead { digits[i + 1] } else { 0 };
                let gi = ((digits[i] + q - next) % q) as Elem;
                if gi != 0 {
                    for (w, &r) in word.iter_mut().zip(g.row(i)) {
                        *w = f.add(*w, f.mul(gi, r));
                    }
                }
            }
            hist[word.iter().filter(|&&x| x != 0).count()] += 1;
            for t in start + 1..end {
                let mut j = 0;
                let mut v = t;
                while v % q == 0 {
                    v /= q;
                    j += 1;
                }
                let mut weight = 0;
                for (w, &r) in word.iter_mut().zip(g.row(j)) {
                    *w = f.add(*w, r);
                    weight += usize::from(*w != 0);
                }
                hist[weight] += 1;
            }
            hist
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

pub(crate) fn weight_enumerator(g: &FqMatrix, cap: u128) -> Result<WeightEnumerator> {
    let q = g.field().q();
    check_cap(q, g.rows(), cap)?;
    let hist = projective_weight_histogram(g);
    let mut counts: Vec<u64> = hist.iter().map(|&c| c * (q as u64 - 1)).collect();
    counts[0] += 1;
    Ok(WeightEnumerator::from_counts(&counts))
}

pub(crate) fn min_distance_exhaustive(g: &FqMatrix, cap: u128) -> Result<usize> {
    check_cap(g.field().q(), g.rows(), cap)?;
    if g.rows() == 0 {
        return Err(Error::ZeroCode);
    }
    let hist = projective_weight_histogram(g);
    hist.iter()
        .enumerate()
        .skip(1)
        .find(|(_, &c)| c > 0)
        .map(|(i, _)| i)
        .ok_or(Error::ZeroCode)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Weight enumerator of the dual of an `[n, k]` code over GF(q):
/// `B_j = q^{-k} sum_i A_i K_j(i)` with Krawtchouk polynomials `K_j`.
pub fn macwilliams_transform(w: &WeightEnumerator, q: u32, k: usize) -> Result<WeightEnumerator> {
    let n = w.length();
    let size = BigUint::from(q).pow(k as u32);
    if w.total() != size {
        return Err(Error::InconsistentEnumerator(format!(
            "coefficients sum to {}, expected q^k = {size}",
            w.total()
        )));
    }
    let qm1 = BigInt::from(q - 1);
    let binom: Vec<Vec<BigInt>> = (0..=n)
        .map(|a| (0..=n).map(|b| binomial(a, b)).collect())
        .collect();
    let size = BigInt::from(size);
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut sum = BigInt::zero();
        for (i, a) in w.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut kraw = BigInt::zero();
            for s in 0..=j.min(i) {
                if j - s > n - i {
                    continue;
                }
                let term = qm1.pow((j - s) as u32) * &binom[i][s] * &binom[n - i][j - s];
                if s % 2 == 0 {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            sum += BigInt::from(a.clone()) * kraw;
        }
        if !(&sum % &size).is_zero() || sum.is_negative() {
            return Err(Error::InconsistentEnumerator(format!(
                "dual coefficient {j} is {sum}/{size}"
            )));
        }
        out.push((sum / &size).to_biguint().expect("non-negative"));
    }
    Ok(WeightEnumerator::new(out))
}

impl WeightEnumerator {
    /// Coefficients as `u64`, when they all fit.
    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.coefficients.iter().map(ToPrimitive::to_u64).collect()
    }
}

/// Row space kept in echelon form, grown one vector at a time.
#[derive(Clone, Debug)]
pub(crate) struct IncrementalBasis {
    field: crate::field::PrimeField,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl IncrementalBasis {
    pub(crate) fn new(field: crate::field::PrimeField) -> Self {
        IncrementalBasis {
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the current rows; returns whether it was.
    pub(crate) fn insert(&mut self, v: &[Elem]) -> bool {
        let f = self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[p]).expect("nonzero");
        v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        // keep earlier rows reduced against the new pivot
        for row in &mut self.rows {
            let c = row[p];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<Elem>> {
        self.rows
    }
}

/// Span of all codewords of weight exactly `w`, as independent rows.
pub(crate) fn span_of_weight(g: &FqMatrix, w: usize, cap: u128) -> Result<Vec<Vec<Elem>>> {
    let f = g.field();
    check_cap(f.q(), g.rows(), cap)?;
    let q = f.q() as u64;
    let k = g.rows();
    let mut tasks = Vec::new();
    for lead in 0..k {
        let span = q.pow(lead as u32);
        let mut start = 0;
        while start < span {
            let end = (start + CHUNK).min(span);
            tasks.push((lead, start, end));
            start = end;
        }
    }
    let partial: Vec<Vec<Vec<Elem>>> = tasks
        .par_iter()
        .map(|&(lead, start, end)| {
            let mut basis = IncrementalBasis::new(f);
            // plain (non-Gray) walk: rebuild each codeword from its digits
            for t in start..end {
                let mut word = g.row(lead).to_vec();
                let mut v = t;
                for i in 0..lead {
                    let d = (v % q) as Elem;
                    v /= q;
                    if d != 0 {
                        for (x, &r) in word.iter_mut().zip(g.row(i)) {
                            *x = f.add(*x, f.mul(d, r));
                        }
                    }
                }
                if word.iter().filter(|&&x| x != 0).count() == w && basis.rank() < k {
                    basis.insert(&word);
                }
            }
            basis.into_rows()
        })
        .collect();
    let mut basis = IncrementalBasis::new(f);
    for rows in partial {
        for r in rows {
            basis.insert(&r);
        }
    }
    Ok(basis.into_rows())
}
