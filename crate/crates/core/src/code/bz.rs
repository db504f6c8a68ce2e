//! Brouwer–Zimmermann minimum distance.
//!
//! The generator is brought into systematic form on a sequence of disjoint
//! column sets (information sets, the later ones possibly rank deficient).
//! Round `w` enumerates every message of weight `w` in each of these forms.
//! A codeword missed by all rounds up to `w` has weight at least
//! `w + 1 - (k - r_j)` on the `j`-th column set, which gives the lower bound.

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::matrix::FqMatrix;

/// Outcome of a bounded minimum-distance computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceOutcome {
    Exact(usize),
    /// The work budget ran out before the bounds met.
    Aborted { lower: usize, upper: usize },
    /// A codeword lighter than the requested floor was found.
    BelowFloor { upper: usize },
}

impl DistanceOutcome {
    pub fn exact(self) -> Option<usize> {
        match self {
            DistanceOutcome::Exact(d) => Some(d),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BzOptions {
    /// Maximum number of codewords to examine.
    pub work_budget: Option<u64>,
    /// Stop as soon as the distance is known to be below this value.
    pub floor: Option<usize>,
}

struct InfoForm {
    /// `multiples[row][c - 1]` is `c * row`.
    multiples: Vec<Vec<Vec<Elem>>>,
    rank: usize,
}

fn info_forms(g: &FqMatrix) -> Vec<InfoForm> {
    let f = g.field();
    let k = g.rows();
    let mut remaining: Vec<usize> = (0..g.cols()).collect();
    let mut current = g.clone();
    let mut forms = Vec::new();
    while !remaining.is_empty() {
        let ech = current.echelon_on(&remaining);
        let rank = ech.rank();
        if rank == 0 {
            break;
        }
        let multiples = (0..k)
            .map(|r| {
                (1..f.q())
                    .map(|c| ech.matrix.row(r).iter().map(|&x| f.mul(c, x)).collect())
                    .collect()
            })
            .collect();
        forms.push(InfoForm { multiples, rank });
        remaining.retain(|c| !ech.pivots.contains(c));
        current = ech.matrix;
    }
    forms
}

struct Walker<'a> {
    q: u32,
    budget: Option<u64>,
    floor: Option<usize>,
    work: u64,
    upper: usize,
    form: &'a InfoForm,
}

enum Stop {
    Budget,
    Floor,
}

impl Walker<'_> {
    /// Visits every message of weight exactly `w` whose first nonzero
    /// coefficient is 1.
    fn run(&mut self, w: usize, n: usize) -> std::result::Result<(), Stop> {
        let k = self.form.multiples.len();
        let mut acc = vec![vec![0 as Elem; n]; w + 1];
        self.recurse(0, 0, w, k, &mut acc)
    }

    fn recurse(
        &mut self,
        depth: usize,
        from: usize,
        w: usize,
        k: usize,
        acc: &mut [Vec<Elem>],
    ) -> std::result::Result<(), Stop> {
        if depth == w {
            self.work += 1;
            let weight = acc[depth].iter().filter(|&&x| x != 0).count();
            if weight > 0 && weight < self.upper {
                self.upper = weight;
                if self.floor.is_some_and(|fl| weight < fl) {
                    return Err(Stop::Floor);
                }
            }
            if self.budget.is_some_and(|b| self.work >= b) {
                return Err(Stop::Budget);
            }
            return Ok(());
        }
        let q = self.q;
        // leave room for the remaining w - depth - 1 rows
        for r in from..=k - (w - depth) {
            let coeffs = if depth == 0 { 1..2 } else { 1..q };
            for c in coeffs {
                let (head, tail) = acc.split_at_mut(depth + 1);
                let prev = &head[depth];
                let next = &mut tail[0];
                let mult = &self.form.multiples[r][c as usize - 1];
                for ((o, &a), &b) in next.iter_mut().zip(prev).zip(mult) {
                    let s = a + b;
                    *o = if s >= q { s - q } else { s };
                }
                self.recurse(depth + 1, r + 1, w, k, acc)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn min_distance_bz(g: &FqMatrix, opts: BzOptions) -> Result<DistanceOutcome> {
    let (k, n) = (g.rows(), g.cols());
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let forms = info_forms(g);
    let deficiency: Vec<usize> = forms.iter().map(|f| k - f.rank).collect();
    let bound = |w_done: usize, forms_done: usize| -> usize {
        deficiency
            .iter()
            .enumerate()
            .map(|(j, &def)| {
                let w = if j < forms_done { w_done + 1 } else { w_done };
                w.saturating_sub(def)
            })
            .sum()
    };
    let mut upper = n + 1;
    let mut work = 0u64;
    for w in 1..=k {
        for (j, form) in forms.iter().enumerate() {
            // a form with deficiency above w contributes nothing yet
            if deficiency[j] > w {
                continue;
            }
            let mut walker = Walker {
                q: g.field().q(),
                budget: opts.work_budget.map(|b| b.saturating_sub(work)),
                floor: opts.floor,
                work: 0,
                upper,
                form,
            };
            let res = walker.run(w, n);
            upper = walker.upper;
            work += walker.work;
            match res {
                Ok(()) => {}
                Err(Stop::Floor) => return Ok(DistanceOutcome::BelowFloor { upper }),
                Err(Stop::Budget) => {
                    let lower = bound(w - 1, j).max(1);
                    return Ok(if lower >= upper {
                        DistanceOutcome::Exact(upper)
                    } else {
                        DistanceOutcome::Aborted { lower, upper }
                    });
                }
            }
            if bound(w - 1, j + 1) >= upper {
                return Ok(DistanceOutcome::Exact(upper));
            }
        }
    }
    // every message has been enumerated in the first (full-rank) form
    Ok(DistanceOutcome::Exact(upper))
}
