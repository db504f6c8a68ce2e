//! Linear codes over GF(q): duality, self-duality, weight enumeration,
//! minimum distance and MDS classification.

mod bz;
mod enumerate;
mod mds;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};
use crate::matrix::FqMatrix;

pub use bz::{BzOptions, DistanceOutcome};
pub(crate) use enumerate::message_space_size;
pub use enumerate::{macwilliams_transform, WeightEnumerator, DEFAULT_ENUMERATION_CAP};

/// Default cap on `q^k` below which the exhaustive engine is preferred.
pub const DEFAULT_EXHAUSTIVE_CAP: u128 = 10_000_000;

/// Default codeword budget for the Brouwer–Zimmermann engine.
pub const DEFAULT_BZ_BUDGET: u64 = 200_000_000;

/// A linear `[n, k]` code given by a full-rank `k x n` generator matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCode {
    generator: FqMatrix,
}

/// A code in systematic form `(I_k | A)` together with the column order used:
/// column `j` of the systematic generator is column `permutation[j]` of the
/// original code.
#[derive(Clone, Debug)]
pub struct SystematicForm {
    pub code: LinearCode,
    pub permutation: Vec<usize>,
}

impl SystematicForm {
    pub fn is_identity_permutation(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// The redundancy block `A`.
    pub fn redundancy(&self) -> FqMatrix {
        let g = self.code.generator();
        let k = g.rows();
        let rows: Vec<usize> = (0..k).collect();
        let cols: Vec<usize> = (k..g.cols()).collect();
        g.select(&rows, &cols)
    }
}

impl LinearCode {
    pub fn new(generator: FqMatrix) -> Result<Self> {
        let rank = generator.rank();
        if rank < generator.rows() {
            return Err(Error::RankDeficient {
                rank,
                rows: generator.rows(),
            });
        }
        Ok(LinearCode { generator })
    }

    /// The code spanned by the rows of `m`, which need not be independent.
    pub fn from_spanning_set(m: &FqMatrix) -> Self {
        let ech = m.echelon();
        let rows: Vec<usize> = (0..ech.rank()).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        LinearCode {
            generator: ech.matrix.select(&rows, &cols),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.generator.field()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &FqMatrix {
        &self.generator
    }

    pub fn into_generator(self) -> FqMatrix {
        self.generator
    }

    pub fn systematic_form(&self) -> SystematicForm {
        let ech = self.generator.echelon();
        let k = self.dimension();
        let mut permutation = ech.pivots.clone();
        permutation.extend((0..self.length()).filter(|c| !ech.pivots.contains(c)));
        let rows: Vec<usize> = (0..k).collect();
        SystematicForm {
            code: LinearCode {
                generator: ech.matrix.select(&rows, &permutation),
            },
            permutation,
        }
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode {
            generator: self.generator.null_space(),
        }
    }

    /// `G * G^T = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        let f = self.field();
        let g = &self.generator;
        (0..g.rows()).all(|i| (i..g.rows()).all(|j| f.dot(g.row(i), g.row(j)) == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.length() && self.is_self_orthogonal()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        if v.len() != self.length() {
            return false;
        }
        let row = FqMatrix::from_elem_rows(self.field(), v.len(), &[v.to_vec()]);
        match row.and_then(|r| self.generator.vstack(&r)) {
            Ok(stacked) => stacked.rank() == self.dimension(),
            Err(_) => false,
        }
    }

    /// Row-space inclusion `other ⊆ self`.
    pub fn contains_code(&self, other: &LinearCode) -> bool {
        self.field() == other.field()
            && self.length() == other.length()
            && self
                .generator
                .vstack(&other.generator)
                .is_ok_and(|m| m.rank() == self.dimension())
    }

    /// Equality as row spaces.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.dimension() == other.dimension() && self.contains_code(other)
    }

    pub fn weight_enumerator(&self, cap: u128) -> Result<WeightEnumerator> {
        enumerate::weight_enumerator(&self.generator, cap)
    }

    pub fn min_distance_exhaustive(&self, cap: u128) -> Result<usize> {
        enumerate::min_distance_exhaustive(&self.generator, cap)
    }

    /// Exact minimum distance by Brouwer–Zimmermann, without a budget.
    pub fn min_distance_bz(&self) -> Result<usize> {
        match bz::min_distance_bz(&self.generator, BzOptions::default())? {
            DistanceOutcome::Exact(d) => Ok(d),
            other => unreachable!("unbounded search returned {other:?}"),
        }
    }

    pub fn min_distance_bz_with(&self, opts: BzOptions) -> Result<DistanceOutcome> {
        bz::min_distance_bz(&self.generator, opts)
    }

    /// Minimum distance `d` and a basis of the span of the weight-`d`
    /// codewords, by full enumeration.
    pub fn minimum_weight_span(&self, cap: u128) -> Result<(usize, FqMatrix)> {
        let d = self.min_distance_exhaustive(cap)?;
        let rows = enumerate::span_of_weight(&self.generator, d, cap)?;
        let basis = FqMatrix::from_elem_rows(self.field(), self.length(), &rows)?;
        Ok((d, basis))
    }

    /// True iff the code meets the Singleton bound, checked through the
    /// nonsingularity of every square submatrix of `A` in `(I_k | A)`.
    pub fn is_mds_systematic(&self) -> bool {
        mds::all_minors_nonsingular(&self.systematic_form().redundancy())
    }

    /// Classification of a self-dual `[2n, n, d]` code.
    pub fn classify(&self, d: usize) -> Result<Classification> {
        if !self.is_self_dual() {
            return Err(Error::NotSelfDual);
        }
        Classification::of(self.dimension(), d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeClass {
    Mds,
    AlmostMds,
    Other,
}

impl fmt::Display for CodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeClass::Mds => "MDS",
            CodeClass::AlmostMds => "almost-MDS",
            CodeClass::Other => "other",
        })
    }
}

impl FromStr for CodeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "MDS" => Ok(CodeClass::Mds),
            "almost-MDS" => Ok(CodeClass::AlmostMds),
            "other" => Ok(CodeClass::Other),
            _ => Err(Error::Parse(format!("unknown classification {s:?}"))),
        }
    }
}

/// Where a self-dual `[2n, n, d]` code sits relative to the Singleton bound
/// `d <= n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub class: CodeClass,
    /// `n + 1 - d`.
    pub slack: usize,
}

impl Classification {
    pub fn of(half_length: usize, d: usize) -> Result<Self> {
        let bound = half_length + 1;
        if d > bound {
            return Err(Error::SingletonViolation { d, bound });
        }
        let class = match bound - d {
            0 => CodeClass::Mds,
            1 => CodeClass::AlmostMds,
            _ => CodeClass::Other,
        };
        Ok(Classification {
            class,
            slack: bound - d,
        })
    }
}

/// Minimum-distance engine selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Engine {
    /// Exhaustive when `q^k` is within the cap, else Brouwer–Zimmermann,
    /// else the MDS certificate.
    #[default]
    Auto,
    Exhaustive,
    Bz,
    MdsCert,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Auto => "auto",
            Engine::Exhaustive => "exhaustive",
            Engine::Bz => "bz",
            Engine::MdsCert => "mds-cert",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Engine::Auto),
            "exhaustive" => Ok(Engine::Exhaustive),
            "bz" => Ok(Engine::Bz),
            "mds-cert" => Ok(Engine::MdsCert),
            _ => Err(Error::Parse(format!("unknown engine {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DistanceRequest {
    pub engine: Engine,
    pub exhaustive_cap: u128,
    pub bz_budget: Option<u64>,
    /// Codes known to be below this distance may be abandoned early.
    pub floor: Option<usize>,
}

impl Default for DistanceRequest {
    fn default() -> Self {
        DistanceRequest {
            engine: Engine::Auto,
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
            bz_budget: Some(DEFAULT_BZ_BUDGET),
            floor: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceVerdict {
    Exact { d: usize, engine: Engine },
    /// Meets the Singleton bound, certified by the submatrix test.
    MdsCertified { d: usize },
    BelowFloor,
    Unknown { lower: usize, upper: usize },
}

impl DistanceVerdict {
    pub fn distance(&self) -> Option<usize> {
        match *self {
            DistanceVerdict::Exact { d, .. } | DistanceVerdict::MdsCertified { d } => Some(d),
            _ => None,
        }
    }
}

impl LinearCode {
    pub fn evaluate_distance(&self, req: &DistanceRequest) -> Result<DistanceVerdict> {
        let k = self.dimension();
        let singleton = self.length() - k + 1;
        let bz = |budget| -> Result<DistanceVerdict> {
            let outcome = self.min_distance_bz_with(BzOptions {
                work_budget: budget,
                floor: req.floor,
            })?;
            Ok(match outcome {
                DistanceOutcome::Exact(d) => DistanceVerdict::Exact { d, engine: Engine::Bz },
                DistanceOutcome::BelowFloor { .. } => DistanceVerdict::BelowFloor,
                DistanceOutcome::Aborted { lower, upper } => DistanceVerdict::Unknown { lower, upper },
            })
        };
        let cert = || {
            if self.is_mds_systematic() {
                DistanceVerdict::MdsCertified { d: singleton }
            } else {
                DistanceVerdict::Unknown {
                    lower: 1,
                    upper: singleton - 1,
                }
            }
        };
        match req.engine {
            Engine::Exhaustive => Ok(DistanceVerdict::Exact {
                d: self.min_distance_exhaustive(req.exhaustive_cap)?,
                engine: Engine::Exhaustive,
            }),
            Engine::Bz => bz(req.bz_budget),
            Engine::MdsCert => Ok(cert()),
            Engine::Auto => {
                if enumerate::message_space_size(self.field().q(), k) <= req.exhaustive_cap {
                    return Ok(DistanceVerdict::Exact {
                        d: self.min_distance_exhaustive(req.exhaustive_cap)?,
                        engine: Engine::Exhaustive,
                    });
                }
                match bz(req.bz_budget)? {
                    DistanceVerdict::Unknown { lower, upper } => match cert() {
                        DistanceVerdict::Unknown { .. } => Ok(DistanceVerdict::Unknown {
                            lower,
                            upper: upper.min(singleton - 1),
                        }),
                        certified => Ok(certified),
                    },
                    v => Ok(v),
                }
            }
        }
    }
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

    fn counts(w: &WeightEnumerator) -> Vec<u64> {
        w.to_u64().unwrap()
    }

    #[test]
    fn rank_deficient_generator_rejected() {
        let m = FqMatrix::from_rows(gf(3), &[[1, 1, 0], [2, 2, 0]]).unwrap();
        assert!(matches!(
            LinearCode::new(m),
            Err(Error::RankDeficient { rank: 1, rows: 2 })
        ));
    }

    #[test]
    fn systematic_examples() {
        let c = code(5, &[&[1, 0, 2, 3], &[0, 1, 4, 1]]);
        let s = c.systematic_form();
        assert!(s.is_identity_permutation());
        assert_eq!(s.code.generator(), c.generator());

        let c = code(2, &[&[0, 1, 1], &[1, 0, 1]]);
        let s = c.systematic_form();
        assert!(s.is_identity_permutation());
        assert_eq!(
            s.code.generator(),
            &FqMatrix::from_rows(gf(2), &[[1, 0, 1], [0, 1, 1]]).unwrap()
        );
        assert!(s.code.same_code(&c));
    }

    #[test]
    fn systematic_with_column_swap() {
        // the first two columns are dependent, so pivots land on columns 0 and 2
        let c = code(7, &[&[1, 2, 0, 3], &[0, 0, 1, 4]]);
        let s = c.systematic_form();
        assert!(!s.is_identity_permutation());
        assert_eq!(s.permutation, vec![0, 2, 1, 3]);
        let g = s.code.generator();
        assert_eq!((g.get(0, 0), g.get(0, 1), g.get(1, 0), g.get(1, 1)), (1, 0, 0, 1));
        // undoing the reported permutation recovers the original row space
        let mut inverse = vec![0; 4];
        for (j, &p) in s.permutation.iter().enumerate() {
            inverse[p] = j;
        }
        let back = LinearCode::new(g.permute_columns(&inverse)).unwrap();
        assert!(back.same_code(&c));
    }

    #[test]
    fn duals() {
        let c = code(5, &[&[1, 2]]);
        assert!(c.dual().same_code(&c));
        let full = LinearCode::new(FqMatrix::identity(gf(3), 3)).unwrap();
        assert_eq!(full.dual().dimension(), 0);
        let c = code(7, &[&[1, 2, 3, 4, 5], &[0, 1, 1, 0, 6]]);
        let d = c.dual();
        assert_eq!(d.dimension(), 3);
        assert!(c.generator().mul(&d.generator().transpose()).unwrap().is_zero());
        assert!(d.dual().same_code(&c));
    }

    #[test]
    fn self_duality_predicates() {
        let c = code(5, &[&[1, 2]]);
        assert!(c.is_self_dual());
        let c = code(5, &[&[1, 1]]);
        assert!(!c.is_self_orthogonal());
        let c = code(3, &[&[1, 1, 1, 0]]);
        assert!(c.is_self_orthogonal());
        assert!(!c.is_self_dual());
    }

    #[test]
    fn weight_enumerator_examples() {
        let c = code(5, &[&[1, 2]]);
        assert_eq!(counts(&c.weight_enumerator(DEFAULT_ENUMERATION_CAP).unwrap()), vec![1, 0, 4]);
        let zero = LinearCode::new(FqMatrix::zeros(gf(3), 0, 3)).unwrap();
        assert_eq!(counts(&zero.weight_enumerator(10).unwrap()), vec![1, 0, 0, 0]);
        let c = code(3, &[&[1, 0, 1, 1], &[0, 1, 2, 1]]);
        assert_eq!(counts(&c.weight_enumerator(100).unwrap()), vec![1, 0, 0, 8, 0]);
        assert!(matches!(
            c.weight_enumerator(8),
            Err(Error::EnumerationTooLarge { size: 9, cap: 8 })
        ));
    }

    #[test]
    fn macwilliams_examples() {
        let w = WeightEnumerator::from_counts(&[1, 0, 4]);
        assert_eq!(macwilliams_transform(&w, 5, 1).unwrap(), w);
        let full = WeightEnumerator::from_counts(&[1, 4, 4]);
        assert_eq!(
            macwilliams_transform(&full, 3, 2).unwrap(),
            WeightEnumerator::from_counts(&[1, 0, 0])
        );
        let bad = WeightEnumerator::from_counts(&[1, 1, 4]);
        assert!(matches!(
            macwilliams_transform(&bad, 5, 1),
            Err(Error::InconsistentEnumerator(_))
        ));
        // right total, but the transform goes negative
        let bad = WeightEnumerator::from_counts(&[0, 3]);
        assert!(macwilliams_transform(&bad, 3, 1).is_err());
    }

    #[test]
    fn distance_examples() {
        let c = code(5, &[&[1, 2]]);
        assert_eq!(c.min_distance_exhaustive(100).unwrap(), 2);
        assert_eq!(c.min_distance_bz().unwrap(), 2);
        let c = code(3, &[&[1, 0, 1, 1], &[0, 1, 2, 1]]);
        assert_eq!(c.min_distance_exhaustive(100).unwrap(), 3);
        assert_eq!(c.min_distance_bz().unwrap(), 3);
        let id = LinearCode::new(FqMatrix::identity(gf(7), 4)).unwrap();
        assert_eq!(id.min_distance_exhaustive(1 << 20).unwrap(), 1);
        assert_eq!(id.min_distance_bz().unwrap(), 1);
        let zero = LinearCode::new(FqMatrix::zeros(gf(3), 0, 3)).unwrap();
        assert!(matches!(zero.min_distance_exhaustive(10), Err(Error::ZeroCode)));
    }

    #[test]
    fn bz_budget_and_floor() {
        let c = code(7, &[&[1, 0, 0, 1, 2, 3], &[0, 1, 0, 4, 5, 6], &[0, 0, 1, 1, 1, 1]]);
        let d = c.min_distance_exhaustive(1000).unwrap();
        let out = c
            .min_distance_bz_with(BzOptions {
                work_budget: Some(1),
                floor: None,
            })
            .unwrap();
        assert!(matches!(out, DistanceOutcome::Aborted { .. } | DistanceOutcome::Exact(_)));
        if let DistanceOutcome::Aborted { lower, upper } = out {
            assert!(lower <= d && d <= upper);
        }
        let out = c
            .min_distance_bz_with(BzOptions {
                work_budget: None,
                floor: Some(d + 1),
            })
            .unwrap();
        assert!(matches!(out, DistanceOutcome::BelowFloor { upper } if upper == d));
    }

    #[test]
    fn mds_examples() {
        let c = code(5, &[&[1, 2]]);
        assert!(c.is_mds_systematic());
        let c = code(5, &[&[1, 0, 2, 0], &[0, 1, 0, 2]]);
        assert!(!c.is_mds_systematic());
        assert_eq!(c.min_distance_exhaustive(100).unwrap(), 2);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(Classification::of(4, 5).unwrap().class, CodeClass::Mds);
        let c = Classification::of(6, 6).unwrap();
        assert_eq!((c.class, c.slack), (CodeClass::AlmostMds, 1));
        assert_eq!(Classification::of(2, 2).unwrap().class, CodeClass::AlmostMds);
        assert_eq!(Classification::of(6, 4).unwrap().class, CodeClass::Other);
        assert!(matches!(
            Classification::of(4, 6),
            Err(Error::SingletonViolation { d: 6, bound: 5 })
        ));
        let c = code(5, &[&[1, 1]]);
        assert!(matches!(c.classify(1), Err(Error::NotSelfDual)));
    }

    #[test]
    fn dispatcher() {
        let c = code(5, &[&[1, 0, 2, 0], &[0, 1, 0, 2]]);
        let mut req = DistanceRequest::default();
        assert_eq!(
            c.evaluate_distance(&req).unwrap(),
            DistanceVerdict::Exact { d: 2, engine: Engine::Exhaustive }
        );
        req.exhaustive_cap = 1;
        assert_eq!(
            c.evaluate_distance(&req).unwrap(),
            DistanceVerdict::Exact { d: 2, engine: Engine::Bz }
        );
        req.engine = Engine::MdsCert;
        assert!(matches!(c.evaluate_distance(&req).unwrap(), DistanceVerdict::Unknown { .. }));
        let c = code(5, &[&[1, 2]]);
        assert_eq!(
            c.evaluate_distance(&req).unwrap(),
            DistanceVerdict::MdsCertified { d: 2 }
        );
        req.engine = Engine::Exhaustive;
        assert!(c.evaluate_distance(&req).is_err());
    }

    #[test]
    fn enumerator_text_round_trip() {
        let w = WeightEnumerator::from_counts(&[1, 0, 0, 8, 0]);
        let text = w.to_text(3, 2);
        assert_eq!(text, "3 4 2\n1 0 0 8 0\n");
        assert_eq!(WeightEnumerator::from_text(&text).unwrap(), (3, 2, w));
        assert!(WeightEnumerator::from_text("3 4 2\n1 0 0 8\n").is_err());
    }
}
