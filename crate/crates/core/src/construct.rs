//! Self-dual codes `(I_n | A)` from matrices with `A * A^T = -I`.
//!
//! Such `A` form a one-sided coset of the orthogonal group, so every
//! construction here is a fixed "seed" matrix times orthogonal matrices.

use std::fmt;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};
use crate::matrix::FqMatrix;

/// Ordered `key=value` metadata describing how an artifact was produced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Provenance {
    entries: Vec<(String, String)>,
}

impl Provenance {
    pub fn new(construction: &str) -> Self {
        let mut p = Provenance::default();
        p.set("construction", construction);
        p
    }

    /// Sets `key`, replacing an earlier value in place.
    pub fn set(&mut self, key: &str, value: impl ToString) {
        let value = value.to_string();
        match self.entries.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.entries.push((key.to_string(), value)),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.set(key, value);
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn extend(&mut self, other: &Provenance) {
        for (k, v) in &other.entries {
            self.set(k, v);
        }
    }

    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect()
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut p = Provenance::default();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("not a key=value line: {line:?}")))?;
            p.set(k, v);
        }
        Ok(p)
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A square matrix `A` with `A * A^T = -I`, and where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegOrthogonalWitness {
    a: FqMatrix,
    provenance: Provenance,
}

impl NegOrthogonalWitness {
    /// Checks `A * A^T = -I` before accepting the matrix.
    pub fn new(a: FqMatrix, provenance: Provenance) -> Result<Self> {
        if !a.is_neg_orthogonal()? {
            return Err(Error::WitnessCheck(
                provenance.get("construction").unwrap_or("unknown").to_string(),
            ));
        }
        Ok(NegOrthogonalWitness { a, provenance })
    }

    pub fn matrix(&self) -> &FqMatrix {
        &self.a
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn provenance_mut(&mut self) -> &mut Provenance {
        &mut self.provenance
    }

    pub fn field(&self) -> PrimeField {
        self.a.field()
    }

    pub fn size(&self) -> usize {
        self.a.rows()
    }
}

/// The self-dual code generated by `(I_n | A)`.
pub fn from_witness(w: &NegOrthogonalWitness) -> Result<LinearCode> {
    let n = w.size();
    let g = FqMatrix::identity(w.field(), n).hstack(&w.a)?;
    let code = LinearCode::new(g)?;
    if !code.is_self_dual() {
        return Err(Error::WitnessCheck("generator (I | A) is not self-dual".into()));
    }
    Ok(code)
}

fn require_orthogonal(l: &FqMatrix, field: PrimeField) -> Result<()> {
    if l.field() != field {
        return Err(Error::FieldMismatch(l.field().q(), field.q()));
    }
    if !l.is_orthogonal()? {
        return Err(Error::DimensionMismatch("L must be orthogonal".into()));
    }
    Ok(())
}

/// `A = alpha L` with `alpha^2 = -1`, using the smallest such `alpha`.
pub fn build_eq1(l: &FqMatrix, field: PrimeField) -> Result<NegOrthogonalWitness> {
    build_eq1_with(l, field.sqrt_minus_one()?)
}

pub fn build_eq1_with(l: &FqMatrix, alpha: Elem) -> Result<NegOrthogonalWitness> {
    let field = l.field();
    if field.q() % 4 != 1 {
        return Err(Error::NoSquareRootOfMinusOne(field.q()));
    }
    require_orthogonal(l, field)?;
    NegOrthogonalWitness::new(
        l.scale(alpha),
        Provenance::new("eq1").with("alpha", alpha),
    )
}

/// The 2x2 block `D_0 = [[alpha, beta], [-beta, alpha]]`.
pub fn d_block(field: PrimeField, alpha: Elem, beta: Elem) -> FqMatrix {
    FqMatrix::from_elem_rows(
        field,
        2,
        &[vec![alpha, beta], vec![field.neg(beta), alpha]],
    )
    .expect("2x2 block")
}

/// `D_m = diag(D_0, ..., D_0)` with `m` blocks.
pub fn d_matrix(field: PrimeField, blocks: usize, alpha: Elem, beta: Elem) -> FqMatrix {
    let d0 = d_block(field, alpha, beta);
    FqMatrix::block_diag(field, &vec![d0; blocks]).expect("same field")
}

/// `A = D_m L` for an orthogonal `L` of even size `2m`.
pub fn build_eq2(l: &FqMatrix, field: PrimeField) -> Result<NegOrthogonalWitness> {
    let (alpha, beta) = field.two_squares_minus_one()?;
    build_eq2_with(l, alpha, beta)
}

pub fn build_eq2_with(l: &FqMatrix, alpha: Elem, beta: Elem) -> Result<NegOrthogonalWitness> {
    let field = l.field();
    if !field.is_odd() {
        return Err(Error::EvenCharacteristic(field.q()));
    }
    if l.rows() % 2 != 0 {
        return Err(Error::DimensionMismatch(format!(
            "L must have even size, got {}",
            l.rows()
        )));
    }
    require_orthogonal(l, field)?;
    let d = d_matrix(field, l.rows() / 2, alpha, beta);
    NegOrthogonalWitness::new(
        d.mul(l)?,
        Provenance::new("eq2").with("alpha", alpha).with("beta", beta),
    )
}

/// `A = [[alpha L, beta L], [-beta L^T, alpha L^T]]` for an orthogonal `L`.
pub fn build_eq3(l: &FqMatrix, field: PrimeField) -> Result<NegOrthogonalWitness> {
    let (alpha, beta) = field.two_squares_minus_one()?;
    build_eq3_with(l, alpha, beta)
}

pub fn build_eq3_with(l: &FqMatrix, alpha: Elem, beta: Elem) -> Result<NegOrthogonalWitness> {
    let field = l.field();
    if !field.is_odd() {
        return Err(Error::EvenCharacteristic(field.q()));
    }
    require_orthogonal(l, field)?;
    let lt = l.transpose();
    let top = l.scale(alpha).hstack(&l.scale(beta))?;
    let bottom = lt.scale(field.neg(beta)).hstack(&lt.scale(alpha))?;
    NegOrthogonalWitness::new(
        top.vstack(&bottom)?,
        Provenance::new("eq3").with("alpha", alpha).with("beta", beta),
    )
}

/// `A' = A L_1 ... L_r`.
pub fn diffuse_eq4(w: &NegOrthogonalWitness, factors: &[FqMatrix]) -> Result<NegOrthogonalWitness> {
    let field = w.field();
    let mut a = w.a.clone();
    for l in factors {
        require_orthogonal(l, field)?;
        a = a.mul(l)?;
    }
    let mut provenance = w.provenance.clone();
    provenance.set("diffusion_factors", factors.len());
    NegOrthogonalWitness::new(a, provenance)
}
