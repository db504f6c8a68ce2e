//! Best known minimum distances of self-dual `[2n, n]` codes reached by the
//! orthogonal-matrix constructions, indexed by `(q, 2n)`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// `d = n + 1`.
    Mds,
    /// `d = n`.
    AlmostMds,
    Distance(usize),
}

impl Target {
    pub fn distance(self, half_length: usize) -> usize {
        match self {
            Target::Mds => half_length + 1,
            Target::AlmostMds => half_length,
            Target::Distance(d) => d,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Mds => f.write_str("M"),
            Target::AlmostMds => f.write_str("A"),
            Target::Distance(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub q: u32,
    pub length: usize,
    pub target: Target,
    /// Parameters not previously known to exist.
    pub new: bool,
}

impl Cell {
    pub fn half_length(&self) -> usize {
        self.length / 2
    }

    pub fn target_distance(&self) -> usize {
        self.target.distance(self.half_length())
    }
}

use Target::{AlmostMds as A, Distance as D, Mds as M};

const fn c(length: usize, q: u32, target: Target, new: bool) -> Cell {
    Cell {
        q,
        length,
        target,
        new,
    }
}

#[rustfmt::skip]
static CELLS: &[Cell] = &[
    c(4, 3, M, false), c(4, 5, A, false), c(4, 7, M, false), c(4, 11, M, false),
    c(4, 13, M, false), c(4, 17, M, false), c(4, 19, M, false), c(4, 23, M, false),
    c(4, 29, M, false), c(4, 31, M, false), c(4, 37, M, false), c(4, 41, M, false),
    c(4, 43, M, false), c(4, 47, M, false), c(4, 53, M, true), c(4, 59, M, true),
    c(4, 61, M, true), c(4, 67, M, true), c(4, 71, M, true), c(4, 73, M, true),
    c(4, 79, M, false), c(4, 83, M, true), c(4, 89, M, true), c(4, 97, M, false),
    c(4, 101, M, true), c(4, 103, M, true), c(4, 107, M, true), c(4, 109, M, true),

    c(6, 5, M, false), c(6, 13, M, false), c(6, 17, M, false), c(6, 29, M, false),
    c(6, 37, M, false), c(6, 41, M, false), c(6, 53, M, false), c(6, 61, M, false),
    c(6, 73, M, false), c(6, 89, M, true), c(6, 97, M, true), c(6, 101, M, true),
    c(6, 109, M, true),

    c(8, 7, M, false), c(8, 11, M, false), c(8, 13, M, false), c(8, 17, M, false),
    c(8, 19, M, false), c(8, 23, M, false), c(8, 29, M, false), c(8, 31, M, false),
    c(8, 37, M, false), c(8, 41, M, false), c(8, 43, M, false), c(8, 47, M, false),
    c(8, 53, M, true), c(8, 59, M, true), c(8, 61, M, true), c(8, 67, M, true),
    c(8, 71, M, true), c(8, 73, M, true), c(8, 79, M, true), c(8, 83, M, true),
    c(8, 89, M, true), c(8, 97, M, true), c(8, 101, M, true), c(8, 103, M, true),
    c(8, 107, M, true), c(8, 109, M, true),

    c(10, 13, M, false), c(10, 17, M, false), c(10, 29, M, false), c(10, 37, M, false),
    c(10, 41, M, false), c(10, 53, M, true), c(10, 61, M, true), c(10, 73, M, true),
    c(10, 89, M, true), c(10, 97, M, true), c(10, 101, M, true), c(10, 109, M, true),

    c(12, 5, A, false), c(12, 7, A, false), c(12, 11, M, false), c(12, 13, A, false),
    c(12, 17, D(6), false), c(12, 19, M, false), c(12, 23, M, false), c(12, 29, M, false),
    c(12, 31, M, false), c(12, 37, M, false), c(12, 41, M, false), c(12, 43, M, false),
    c(12, 47, M, false), c(12, 53, M, true), c(12, 59, M, true), c(12, 61, M, true),
    c(12, 67, M, true), c(12, 71, M, true), c(12, 73, M, true), c(12, 79, M, true),
    c(12, 83, M, true), c(12, 89, M, true), c(12, 97, M, true), c(12, 101, M, true),
    c(12, 103, M, true), c(12, 107, M, true), c(12, 109, M, true),

    c(14, 13, D(7), false), c(14, 17, D(7), false), c(14, 37, D(7), false),
    c(14, 109, D(7), false),

    c(16, 17, D(8), false), c(16, 19, D(8), false), c(16, 29, D(8), false),
    c(16, 31, D(8), false), c(16, 37, D(8), false), c(16, 41, D(8), false),
    c(16, 43, D(8), false), c(16, 47, D(8), false), c(16, 109, D(8), false),

    c(18, 37, D(8), false), c(18, 109, D(9), false),
    c(20, 37, D(9), false), c(20, 109, D(9), false),
    c(22, 37, D(10), false), c(22, 109, D(10), false),
    c(24, 19, D(10), false),
];

pub fn cells() -> &'static [Cell] {
    CELLS
}

/// The cell for `(q, length)`; blank cells have no target.
pub fn lookup(q: u32, length: usize) -> Result<Cell> {
    CELLS
        .iter()
        .find(|c| c.q == q && c.length == length)
        .copied()
        .ok_or(Error::NoTarget { q, length })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_checks() {
        assert_eq!(lookup(3, 4).unwrap().target_distance(), 3);
        assert_eq!(lookup(5, 4).unwrap().target_distance(), 2);
        assert_eq!(lookup(11, 8).unwrap().target_distance(), 5);
        assert_eq!(lookup(17, 12).unwrap().target_distance(), 6);
        assert_eq!(lookup(37, 18).unwrap().target_distance(), 8);
        assert_eq!(lookup(13, 12).unwrap().target, Target::AlmostMds);
        assert!(lookup(53, 4).unwrap().new);
        assert!(matches!(lookup(7, 6), Err(Error::NoTarget { q: 7, length: 6 })));
    }

    #[test]
    fn targets_respect_singleton() {
        let mut seen = std::collections::HashSet::new();
        for c in cells() {
            assert!(c.length % 2 == 0);
            assert!(c.target_distance() <= c.half_length() + 1);
            assert!(seen.insert((c.q, c.length)), "duplicate {c:?}");
        }
    }
}
