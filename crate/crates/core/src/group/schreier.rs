//! Schreier–Sims on the action of an orthogonal matrix group on row vectors.
//!
//! Points are vectors of GF(q)^n, encoded base q. The base is the standard
//! basis e_1, ..., e_n, whose pointwise stabilizer in GL(n, q) is trivial, so
//! the chain never needs extending. Group elements stay as n x n matrices and
//! every element is orthogonal, so inverses are transposes.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::field::Elem;
use crate::matrix::FqMatrix;

pub(crate) fn encode(v: &[Elem], q: u32) -> u64 {
    v.iter().rev().fold(0u64, |acc, &x| acc * q as u64 + x as u64)
}

struct Level {
    base: Vec<Elem>,
    gens: Vec<FqMatrix>,
    index: HashMap<u64, usize>,
    points: Vec<Vec<Elem>>,
    /// `transversal[i]` maps `base` to `points[i]`.
    transversal: Vec<FqMatrix>,
    /// Next (point, generator) Schreier pair to check, flattened.
    cursor: usize,
}

impl Level {
    fn new(base: Vec<Elem>, identity: &FqMatrix) -> Self {
        let q = identity.field().q();
        let mut index = HashMap::new();
        index.insert(encode(&base, q), 0);
        Level {
            points: vec![base.clone()],
            base,
            gens: Vec::new(),
            index,
            transversal: vec![identity.clone()],
            cursor: 0,
        }
    }

    fn rebuild_orbit(&mut self, identity: &FqMatrix) {
        let q = identity.field().q();
        self.index.clear();
        self.points = vec![self.base.clone()];
        self.transversal = vec![identity.clone()];
        self.index.insert(encode(&self.base, q), 0);
        let mut head = 0;
        while head < self.points.len() {
            for g in &self.gens {
                let image = g.vec_mul(&self.points[head]);
                let key = encode(&image, q);
                if let std::collections::hash_map::Entry::Vacant(e) = self.index.entry(key) {
                    e.insert(self.points.len());
                    self.points.push(image);
                    self.transversal.push(self.transversal[head].mul_unchecked(g));
                }
            }
            head += 1;
        }
        self.cursor = 0;
    }

    fn pairs(&self) -> usize {
        self.points.len() * self.gens.len()
    }
}

/// Stabilizer chain for a group of orthogonal matrices.
pub struct StabilizerChain {
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn build(generators: &[FqMatrix], n: usize, field: crate::field::PrimeField) -> Self {
        let identity = FqMatrix::identity(field, n);
        let q = field.q();
        let mut levels: Vec<Level> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                Level::new(e, &identity)
            })
            .collect();
        // each input generator joins every level whose earlier base points it fixes
        for g in generators.iter().filter(|g| !g.is_identity()) {
            for (i, level) in levels.iter_mut().enumerate() {
                level.gens.push(g.clone());
                let fixes = g.row(i).iter().enumerate().all(|(j, &x)| x == u32::from(i == j));
                if !fixes {
                    break;
                }
            }
        }
        for level in &mut levels {
            level.rebuild_orbit(&identity);
        }

        let mut chain = StabilizerChain { levels };
        let mut i = n as isize - 1;
        while i >= 0 {
            let li = i as usize;
            match chain.check_level(li, q) {
                Some((y, j)) => {
                    for l in li + 1..=j {
                        chain.levels[l].gens.push(y.clone());
                        chain.levels[l].rebuild_orbit(&identity);
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        chain
    }

    /// Tests Schreier generators of level `li` from its cursor on. Returns
    /// the first one that fails to sift, with the level where it dropped out.
    fn check_level(&mut self, li: usize, q: u32) -> Option<(FqMatrix, usize)> {
        let ngens = self.levels[li].gens.len();
        while self.levels[li].cursor < self.levels[li].pairs() {
            let level = &self.levels[li];
            let c = level.cursor;
            let (p, s) = (c / ngens, c % ngens);
            let g = &level.gens[s];
            let image = g.vec_mul(&level.points[p]);
            let target = level.index[&encode(&image, q)];
            let h = level.transversal[p]
                .mul_unchecked(g)
                .mul_unchecked(&level.transversal[target].transpose());
            self.levels[li].cursor += 1;
            if h.is_identity() {
                continue;
            }
            let (y, j) = self.sift(h, li + 1, q);
            if j < self.levels.len() {
                return Some((y, j));
            }
            debug_assert!(y.is_identity());
        }
        None
    }

    fn sift(&self, mut h: FqMatrix, from: usize, q: u32) -> (FqMatrix, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let image = h.vec_mul(&level.base);
            match level.index.get(&encode(&image, q)) {
                Some(&t) => h = h.mul_unchecked(&level.transversal[t].transpose()),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    /// Orbit sizes along the base e_1, e_2, ....
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.points.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .map(|l| BigUint::from(l.points.len()))
            .product()
    }

    /// Membership test by sifting.
    pub fn contains(&self, m: &FqMatrix) -> bool {
        let q = m.field().q();
        let (y, j) = self.sift(m.clone(), 0, q);
        j == self.levels.len() && y.is_identity()
    }
}
