//! The orthogonal group O_n(q) and its subgroup K_u generated by all
//! permutation matrices and one weight-4 transvection.

mod schreier;

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};
use crate::matrix::{BinaryVector4, FqMatrix};

pub use schreier::StabilizerChain;

/// Default cap on `q^n` for the vector action used by [`group_order`].
pub const DEFAULT_POINT_CAP: u128 = 1 << 24;

/// Default random word length for a dimension-`n` sample.
pub fn default_word_length(n: usize) -> usize {
    8 * n
}

/// Orthogonal generators of a matrix group: the permutation generators of
/// P_n and, for `n >= 4`, the transvection T_{u, theta}.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    field: PrimeField,
    n: usize,
    u: Option<BinaryVector4>,
    generators: Vec<FqMatrix>,
}

fn permutation_generators(n: usize, field: PrimeField) -> Result<Vec<FqMatrix>> {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(FqMatrix::permutation(&swap, field)?);
    }
    if n >= 3 {
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        gens.push(FqMatrix::permutation(&cycle, field)?);
    }
    Ok(gens)
}

impl GeneratorSet {
    /// Generators of K_u. `u` defaults to support {0,1,2,3} when `n >= 4`;
    /// for `n <= 3` only permutation generators are used and `u` must be `None`.
    pub fn ku(n: usize, field: PrimeField, u: Option<BinaryVector4>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch("dimension must be at least 1".into()));
        }
        let mut generators = permutation_generators(n, field)?;
        let u = if n >= 4 {
            let u = match u {
                Some(u) if u.len() != n => {
                    return Err(Error::InvalidSupport(format!(
                        "support vector has length {}, expected {n}",
                        u.len()
                    )))
                }
                Some(u) => u,
                None => BinaryVector4::leading(n)?,
            };
            generators.push(FqMatrix::transvection(&u, field)?);
            Some(u)
        } else {
            if let Some(u) = u {
                return Err(Error::InvalidSupport(format!(
                    "{:?} does not fit in length {n}",
                    u.support()
                )));
            }
            None
        };
        Ok(GeneratorSet {
            field,
            n,
            u,
            generators,
        })
    }

    /// Generators of the permutation matrices P_n alone.
    pub fn permutations(n: usize, field: PrimeField) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch("dimension must be at least 1".into()));
        }
        Ok(GeneratorSet {
            field,
            n,
            u: None,
            generators: permutation_generators(n, field)?,
        })
    }

    /// Arbitrary orthogonal generators.
    pub fn from_matrices(field: PrimeField, n: usize, generators: Vec<FqMatrix>) -> Result<Self> {
        for g in &generators {
            if g.field() != field || g.rows() != n || !g.is_orthogonal()? {
                return Err(Error::DimensionMismatch(
                    "generators must be orthogonal n x n matrices over the field".into(),
                ));
            }
        }
        Ok(GeneratorSet {
            field,
            n,
            u: None,
            generators,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> Option<&BinaryVector4> {
        self.u.as_ref()
    }

    pub fn generators(&self) -> &[FqMatrix] {
        &self.generators
    }

    /// Product of `word_length` generators drawn uniformly with replacement.
    pub fn random_word<R: Rng + ?Sized>(&self, word_length: usize, rng: &mut R) -> Result<FqMatrix> {
        if word_length == 0 {
            return Err(Error::EmptyWord);
        }
        let mut m = FqMatrix::identity(self.field, self.n);
        if self.generators.is_empty() {
            return Ok(m);
        }
        for _ in 0..word_length {
            let g = &self.generators[rng.gen_range(0..self.generators.len())];
            m = m.mul_unchecked(g);
        }
        Ok(m)
    }
}

/// Seeded random element of the group generated by `gens`.
pub fn random_orthogonal(gens: &GeneratorSet, word_length: usize, seed: u64) -> Result<FqMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gens.random_word(word_length, &mut rng)
}

/// Uniformly random element of O_n(q) for odd q.
///
/// Rows are drawn one at a time as uniform norm-1 vectors in the orthogonal
/// complement of the rows chosen so far.
pub fn random_orthogonal_uniform<R: Rng + ?Sized>(n: usize, field: PrimeField, rng: &mut R) -> Result<FqMatrix> {
    if !field.is_odd() {
        return Err(Error::EvenCharacteristic(field.q()));
    }
    let q = field.q();
    let mut rows: Vec<Vec<Elem>> = Vec::with_capacity(n);
    for _ in 0..n {
        let basis = if rows.is_empty() {
            FqMatrix::identity(field, n)
        } else {
            FqMatrix::from_elem_rows(field, n, &rows)?.null_space()
        };
        let row = loop {
            let mut v = vec![0; n];
            for b in basis.row_iter() {
                let c = rng.gen_range(0..q);
                if c != 0 {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = field.add(*x, field.mul(c, y));
                    }
                }
            }
            if field.dot(&v, &v) == 1 {
                break v;
            }
        };
        rows.push(row);
    }
    FqMatrix::from_elem_rows(field, n, &rows)
}

fn check_point_cap(q: u32, n: usize, cap: u128) -> Result<u128> {
    let points = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if points > cap {
        Err(Error::ActionTooLarge { points, cap })
    } else {
        Ok(points)
    }
}

/// Orbit of the row vector `v` under right multiplication by the generators.
pub fn orbit(v: &[Elem], gens: &GeneratorSet, cap: usize) -> Result<BTreeSet<Vec<Elem>>> {
    if v.len() != gens.n {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} in dimension {}",
            v.len(),
            gens.n
        )));
    }
    let f = gens.field;
    let start: Vec<Elem> = v.iter().map(|&x| f.reduce(x as u64)).collect();
    let mut seen: HashSet<Vec<Elem>> = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for g in &gens.generators {
                let image = g.vec_mul(p);
                if !seen.contains(&image) {
                    if seen.len() >= cap {
                        return Err(Error::OrbitExceedsCap(cap));
                    }
                    seen.insert(image.clone());
                    next.push(image);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

/// Exact order of the group generated by `gens`, with the default point cap.
pub fn group_order(gens: &GeneratorSet) -> Result<BigUint> {
    group_order_with_cap(gens, DEFAULT_POINT_CAP)
}

pub fn group_order_with_cap(gens: &GeneratorSet, cap: u128) -> Result<BigUint> {
    Ok(stabilizer_chain(gens, cap)?.order())
}

pub fn stabilizer_chain(gens: &GeneratorSet, cap: u128) -> Result<StabilizerChain> {
    check_point_cap(gens.field.q(), gens.n, cap)?;
    Ok(StabilizerChain::build(&gens.generators, gens.n, gens.field))
}

/// |O_n(q)| for odd q and the identity form.
pub fn orthogonal_group_order_formula(n: usize, field: PrimeField) -> Result<BigUint> {
    if !field.is_odd() {
        return Err(Error::EvenCharacteristic(field.q()));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    let q = BigUint::from(field.q());
    let one = BigUint::one();
    let m = n / 2;
    let two = BigUint::from(2u32);
    let factors = |upto: usize| -> BigUint {
        (1..=upto)
            .map(|i| q.pow(2 * i as u32) - &one)
            .product::<BigUint>()
    };
    if n % 2 == 1 {
        return Ok(two * q.pow((m * m) as u32) * factors(m));
    }
    let minus_one_pow = if m % 2 == 0 { 1 } else { field.minus_one() };
    let eps = field.legendre_symbol(minus_one_pow)?;
    let qm = q.pow(m as u32);
    let middle = if eps == 1 { qm - &one } else { qm + &one };
    Ok(two * q.pow((m * (m - 1)) as u32) * middle * factors(m - 1))
}

/// Orders of K_u and O_n(q) and the exact index between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupOrderReport {
    pub n: usize,
    pub q: u32,
    pub ku_order: BigUint,
    pub on_order: BigUint,
    pub index: BigUint,
}

impl GroupOrderReport {
    pub fn to_key_values(&self) -> String {
        format!(
            "n={}\nq={}\nku_order={}\non_order={}\nindex={}\n",
            self.n, self.q, self.ku_order, self.on_order, self.index
        )
    }
}

pub fn conjecture_probe(n: usize, field: PrimeField) -> Result<GroupOrderReport> {
    conjecture_probe_with_cap(n, field, DEFAULT_POINT_CAP)
}

pub fn conjecture_probe_with_cap(n: usize, field: PrimeField, cap: u128) -> Result<GroupOrderReport> {
    let on_order = orthogonal_group_order_formula(n, field)?;
    let ku_order = group_order_with_cap(&GeneratorSet::ku(n, field, None)?, cap)?;
    if ku_order.is_zero() || !(&on_order % &ku_order).is_zero() {
        return Err(Error::IndexNotIntegral(format!("{on_order} / {ku_order}")));
    }
    Ok(GroupOrderReport {
        n,
        q: field.q(),
        index: &on_order / &ku_order,
        ku_order,
        on_order,
    })
}

/// Every element of O_n(q), built row by row. Fails with
/// [`Error::EnumerationTooLarge`] when more than `cap` matrices would result.
pub fn enumerate_orthogonal(n: usize, field: PrimeField, cap: usize) -> Result<Vec<FqMatrix>> {
    check_point_cap(field.q(), n, 1 << 24)?;
    let q = field.q();
    let total = (q as u64).pow(n as u32);
    let unit: Vec<Vec<Elem>> = (0..total)
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let d = (code % q as u64) as Elem;
                    code /= q as u64;
                    d
                })
                .collect::<Vec<_>>()
        })
        .filter(|v| field.dot(v, v) == 1)
        .collect();

    fn extend(
        field: PrimeField,
        n: usize,
        unit: &[Vec<Elem>],
        rows: &mut Vec<usize>,
        out: &mut Vec<FqMatrix>,
        cap: usize,
    ) -> Result<()> {
        if rows.len() == n {
            if out.len() >= cap {
                return Err(Error::EnumerationTooLarge {
                    size: out.len() as u128 + 1,
                    cap: cap as u128,
                });
            }
            let data = rows.iter().flat_map(|&r| unit[r].iter().copied()).collect();
            out.push(FqMatrix::from_vec(field, n, n, data)?);
            return Ok(());
        }
        for (i, v) in unit.iter().enumerate() {
            if rows.iter().all(|&r| field.dot(&unit[r], v) == 0) {
                rows.push(i);
                extend(field, n, unit, rows, out, cap)?;
                rows.pop();
            }
        }
        Ok(())
    }

    let mut out = Vec::new();
    extend(field, n, &unit, &mut Vec::new(), &mut out, cap)?;
    Ok(out)
}
