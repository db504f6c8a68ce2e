//! Dense matrices over GF(q).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};

/// Row-major dense matrix over a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Result of reducing a matrix to reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: FqMatrix,
    /// Pivot column of each nonzero row, in row order.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl FqMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FqMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Scalar multiple of the identity.
    pub fn scalar(field: PrimeField, n: usize, s: Elem) -> Self {
        let mut m = Self::zeros(field, n, n);
        let s = s % field.q();
        for i in 0..n {
            m.data[i * n + i] = s;
        }
        m
    }

    /// Builds from a flat row-major buffer, checking every entry is reduced.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        for &x in &data {
            field.check(x as u64)?;
        }
        Ok(FqMatrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds from rows of signed integers, reducing modulo q.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            data.extend(r.iter().map(|&x| field.from_i64(x)));
        }
        Ok(FqMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds from rows of reduced elements.
    pub fn from_elem_rows(field: PrimeField, cols: usize, rows: &[Vec<Elem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            data.extend_from_slice(r);
        }
        Self::from_vec(field, rows.len(), cols, data)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v % self.field.q();
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Elem]> {
        // chunks_exact panics on a zero chunk size
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        self.row_iter().map(<[Elem]>::to_vec).collect()
    }

    fn same_field(&self, other: &FqMatrix) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch(self.field.q(), other.field.q()))
        } else {
            Ok(())
        }
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &FqMatrix) -> Result<FqMatrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &FqMatrix) -> FqMatrix {
        let q = self.field.q() as u64;
        let (n, m, p) = (self.rows, self.cols, other.cols);
        let mut out = vec![0u64; n * p];
        for i in 0..n {
            let acc = &mut out[i * p..(i + 1) * p];
            for k in 0..m {
                let a = self.data[i * m + k] as u64;
                if a == 0 {
                    continue;
                }
                let row = &other.data[k * p..(k + 1) * p];
                for (slot, &b) in acc.iter_mut().zip(row) {
                    *slot += a * b as u64;
                }
                if k % 1024 == 1023 {
                    acc.iter_mut().for_each(|s| *s %= q);
                }
            }
        }
        FqMatrix {
            field: self.field,
            rows: n,
            cols: p,
            data: out.into_iter().map(|x| (x % q) as Elem).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        debug_assert_eq!(v.len(), self.rows);
        let q = self.field.q() as u64;
        let mut acc = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, &b) in acc.iter_mut().zip(self.row(k)) {
                *slot += a as u64 * b as u64;
            }
        }
        acc.into_iter().map(|x| (x % q) as Elem).collect()
    }

    pub fn scale(&self, s: Elem) -> FqMatrix {
        let f = self.field;
        FqMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.mul(x, s)).collect(),
        }
    }

    pub fn add(&self, other: &FqMatrix) -> Result<FqMatrix> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let f = self.field;
        Ok(FqMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        })
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &FqMatrix) -> Result<FqMatrix> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts".into()));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(FqMatrix {
            field: self.field,
            rows: self.rows,
            cols,
            data,
        })
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &FqMatrix) -> Result<FqMatrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FqMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Block-diagonal matrix from square or rectangular blocks.
    pub fn block_diag(field: PrimeField, blocks: &[FqMatrix]) -> Result<FqMatrix> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            if b.field != field {
                return Err(Error::FieldMismatch(field.q(), b.field.q()));
            }
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.data[(r0 + r) * cols + c0 + c] = b.get(r, c);
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(m)
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> FqMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            data.extend(cols.iter().map(|&c| self.get(r, c)));
        }
        FqMatrix {
            field: self.field,
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Reorders columns so that column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> FqMatrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, perm)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, &x)| x == u32::from(i / self.cols == i % self.cols))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Reduced row echelon form. Pivots are chosen column by column in the
    /// order given, taking the first nonzero entry from the top.
    pub fn echelon_on(&self, column_order: &[usize]) -> Echelon {
        let f = self.field;
        let mut m = self.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for &c in column_order {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.data[i * cols + c] != 0) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m.data[r * cols + c]).expect("pivot is nonzero");
            for j in 0..cols {
                m.data[r * cols + j] = f.mul(m.data[r * cols + j], inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in 0..cols {
                    let sub = f.mul(factor, m.data[r * cols + j]);
                    m.data[i * cols + j] = f.sub(m.data[i * cols + j], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn echelon(&self) -> Echelon {
        let order: Vec<usize> = (0..self.cols).collect();
        self.echelon_on(&order)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Determinant of a square matrix by elimination.
    pub fn determinant(&self) -> Result<Elem> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(det_in_place(self.field, &mut self.data.clone(), self.rows))
    }

    pub fn inverse(&self) -> Result<FqMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(self.field, n))?;
        let order: Vec<usize> = (0..n).collect();
        let ech = aug.echelon_on(&order);
        if ech.rank() < n {
            return Err(Error::Singular);
        }
        let right: Vec<usize> = (n..2 * n).collect();
        Ok(ech.matrix.select(&order, &right))
    }

    /// Basis of the right null space `{x : self * x^T = 0}` as rows.
    pub fn null_space(&self) -> FqMatrix {
        let f = self.field;
        let ech = self.echelon();
        let pivots = &ech.pivots;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Self::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.data[b * self.cols + fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                basis.data[b * self.cols + pc] = f.neg(ech.matrix.get(r, fc));
            }
        }
        basis
    }

    fn gram_equals(&self, diag: Elem) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let f = self.field;
        for i in 0..self.rows {
            for j in i..self.rows {
                let want = if i == j { diag } else { 0 };
                if f.dot(self.row(i), self.row(j)) != want {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `A * A^T == I`.
    pub fn is_orthogonal(&self) -> Result<bool> {
        self.gram_equals(1)
    }

    /// `A * A^T == -I`.
    pub fn is_neg_orthogonal(&self) -> Result<bool> {
        self.gram_equals(self.field.minus_one())
    }

    /// Permutation matrix sending basis row `e_i` to `e_{perm[i]}`, so that
    /// `v * P` moves coordinate `i` of `v` to position `perm[i]`.
    pub fn permutation(perm: &[usize], field: PrimeField) -> Result<FqMatrix> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        let mut m = Self::zeros(field, n, n);
        for (i, &p) in perm.iter().enumerate() {
            m.data[i * n + p] = 1;
        }
        Ok(m)
    }

    /// The matrix of the weight-4 transvection `x -> x + theta (x.u) u`
    /// (`theta = 1` over GF(2)).
    pub fn transvection(u: &BinaryVector4, field: PrimeField) -> Result<FqMatrix> {
        let n = u.len();
        if n < 4 {
            return Err(Error::InvalidSupport(format!("length {n} < 4")));
        }
        let theta = if field.is_odd() { field.theta()? } else { 1 };
        let mut t = Self::identity(field, n);
        for &i in u.support() {
            for &j in u.support() {
                let cur = t.get(i, j);
                t.set(i, j, field.add(cur, theta));
            }
        }
        Ok(t)
    }

    /// Text form: a `q rows cols` header, then one line per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.field.q(), self.rows, self.cols);
        for r in self.row_iter() {
            let line: Vec<String> = r.iter().map(u32::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<FqMatrix> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let nums = parse_numbers(header)?;
        let [q, rows, cols] = nums[..] else {
            return Err(Error::Parse(format!("bad matrix header {header:?}")));
        };
        let field = PrimeField::new(q)?;
        let (rows, cols) = (rows as usize, cols as usize);
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {r}")))?;
            let vals = parse_numbers(line)?;
            if vals.len() != cols {
                return Err(Error::Parse(format!("row {r} has {} entries", vals.len())));
            }
            for v in vals {
                data.push(field.check(v)?);
            }
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing data after matrix".into()));
        }
        Self::from_vec(field, rows, cols, data)
    }
}

pub(crate) fn parse_numbers(line: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

/// Determinant of an `n x n` row-major buffer, destroying it.
pub(crate) fn det_in_place(f: PrimeField, a: &mut [Elem], n: usize) -> Elem {
    let mut det: Elem = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| a[r * n + c] != 0) else {
            return 0;
        };
        if p != c {
            for j in c..n {
                a.swap(p * n + j, c * n + j);
            }
            det = f.neg(det);
        }
        let pivot = a[c * n + c];
        det = f.mul(det, pivot);
        let inv = f.inv(pivot).expect("nonzero pivot");
        for r in c + 1..n {
            let factor = f.mul(a[r * n + c], inv);
            if factor == 0 {
                continue;
            }
            for j in c..n {
                let sub = f.mul(factor, a[c * n + j]);
                a[r * n + j] = f.sub(a[r * n + j], sub);
            }
        }
    }
    det
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for FqMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_text(s)
    }
}

/// A {0,1}-vector of length `n` with exactly four ones, given by its support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BinaryVector4 {
    n: usize,
    support: [usize; 4],
}

impl BinaryVector4 {
    pub fn new(n: usize, support: [usize; 4]) -> Result<Self> {
        let mut s = support;
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSupport(format!("repeated index in {support:?}")));
        }
        if s[3] >= n {
            return Err(Error::InvalidSupport(format!(
                "{support:?} does not fit in length {n}"
            )));
        }
        Ok(BinaryVector4 { n, support: s })
    }

    /// Support `{0, 1, 2, 3}`.
    pub fn leading(n: usize) -> Result<Self> {
        Self::new(n, [0, 1, 2, 3])
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn support(&self) -> &[usize; 4] {
        &self.support
    }

    pub fn to_vector(&self) -> Vec<Elem> {
        let mut v = vec![0; self.n];
        for &i in &self.support {
            v[i] = 1;
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    #[test]
    fn transvection_examples() {
        let u = BinaryVector4::leading(4).unwrap();
        let t3 = FqMatrix::transvection(&u, gf(3)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(t3.get(i, j), if i == j { 2 } else { 1 });
            }
        }
        let t5 = FqMatrix::transvection(&u, gf(5)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(t5.get(i, j), if i == j { 3 } else { 2 });
            }
        }
        let u5 = BinaryVector4::leading(5).unwrap();
        let t2 = FqMatrix::transvection(&u5, gf(2)).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let want = match (i < 4, j < 4) {
                    (true, true) => u32::from(i != j),
                    _ => u32::from(i == j),
                };
                assert_eq!(t2.get(i, j), want, "({i},{j})");
            }
        }
    }

    #[test]
    fn support_validation() {
        assert!(BinaryVector4::new(4, [0, 1, 1, 2]).is_err());
        assert!(BinaryVector4::new(4, [0, 1, 2, 4]).is_err());
        assert!(BinaryVector4::leading(3).is_err());
        assert_eq!(
            BinaryVector4::new(6, [5, 0, 3, 1]).unwrap().support(),
            &[0, 1, 3, 5]
        );
    }

    #[test]
    fn orthogonality_examples() {
        assert!(FqMatrix::identity(gf(7), 3).is_orthogonal().unwrap());
        let t = FqMatrix::transvection(&BinaryVector4::leading(4).unwrap(), gf(3)).unwrap();
        assert!(t.is_orthogonal().unwrap());
        let d = FqMatrix::from_rows(gf(5), &[[2, 0], [0, 1]]).unwrap();
        assert!(!d.is_orthogonal().unwrap());
        let rect = FqMatrix::zeros(gf(5), 2, 3);
        assert!(matches!(rect.is_orthogonal(), Err(Error::NotSquare { .. })));
        assert!(matches!(rect.is_neg_orthogonal(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn neg_orthogonality_examples() {
        let f = gf(5);
        assert!(FqMatrix::from_rows(f, &[[2]]).unwrap().is_neg_orthogonal().unwrap());
        assert!(FqMatrix::scalar(f, 2, 2).is_neg_orthogonal().unwrap());
        assert!(!FqMatrix::identity(f, 2).is_neg_orthogonal().unwrap());
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(
            FqMatrix::permutation(&[0, 1, 2], gf(3)).unwrap(),
            FqMatrix::identity(gf(3), 3)
        );
        assert_eq!(
            FqMatrix::permutation(&[1, 0], gf(5)).unwrap(),
            FqMatrix::from_rows(gf(5), &[[0, 1], [1, 0]]).unwrap()
        );
        let c = FqMatrix::permutation(&[1, 2, 0], gf(3)).unwrap();
        assert_eq!(
            c,
            FqMatrix::from_rows(gf(3), &[[0, 1, 0], [0, 0, 1], [1, 0, 0]]).unwrap()
        );
        assert_eq!(c.vec_mul(&[1, 2, 0]), vec![0, 1, 2]);
        assert!(FqMatrix::permutation(&[0, 0, 1], gf(3)).is_err());
        assert!(FqMatrix::permutation(&[0, 3, 1], gf(3)).is_err());
    }

    #[test]
    fn toolkit_examples() {
        assert_eq!(FqMatrix::identity(gf(3), 4).rank(), 4);
        let two = FqMatrix::from_rows(gf(5), &[[2]]).unwrap();
        assert_eq!(two.inverse().unwrap(), FqMatrix::from_rows(gf(5), &[[3]]).unwrap());
        let p = FqMatrix::permutation(&[2, 0, 3, 1], gf(7)).unwrap();
        assert!(p.mul(&p.transpose()).unwrap().is_identity());
        let singular = FqMatrix::from_rows(gf(7), &[[1, 2], [2, 4]]).unwrap();
        assert!(matches!(singular.inverse(), Err(Error::Singular)));
        assert_eq!(singular.determinant().unwrap(), 0);
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn null_space_is_orthogonal() {
        let f = gf(7);
        let m = FqMatrix::from_rows(f, &[[1, 2, 3, 4], [0, 1, 5, 6]]).unwrap();
        let ns = m.null_space();
        assert_eq!(ns.rows(), 2);
        assert!(m.mul(&ns.transpose()).unwrap().is_zero());
        assert_eq!(ns.rank(), 2);
    }

    #[test]
    fn text_format_is_exact() {
        let m = FqMatrix::from_rows(gf(11), &[[1, 10, 0], [3, 4, 5]]).unwrap();
        let text = m.to_text();
        assert_eq!(text, "11 2 3\n1 10 0\n3 4 5\n");
        assert_eq!(FqMatrix::from_text(&text).unwrap(), m);
        assert!(FqMatrix::from_text("11 2 3\n1 10 0\n").is_err());
        assert!(FqMatrix::from_text("11 1 2\n1 11\n").is_err());
        assert!(FqMatrix::from_text("10 1 1\n1\n").is_err());
    }

    #[test]
    fn block_structures() {
        let f = gf(7);
        let a = FqMatrix::from_rows(f, &[[1, 2], [3, 4]]).unwrap();
        let b = FqMatrix::from_rows(f, &[[5]]).unwrap();
        let d = FqMatrix::block_diag(f, &[a.clone(), b]).unwrap();
        assert_eq!(d, FqMatrix::from_rows(f, &[[1, 2, 0], [3, 4, 0], [0, 0, 5]]).unwrap());
        let h = a.hstack(&a).unwrap();
        assert_eq!(h.row(1), &[3, 4, 3, 4]);
        assert_eq!(a.vstack(&a).unwrap().rows(), 4);
        assert_eq!(h.permute_columns(&[3, 0]).row(0), &[2, 1]);
    }
}
