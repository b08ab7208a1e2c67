use num_traits::Zero;

use crate::field::{FieldSpec, Rational};
use crate::ExactError;

/// A linear map between based spaces: `rows` is the codomain dimension,
/// `cols` the domain dimension, entries dense row-major.
///
/// Tensor legs use the global row-major order: the basis vector
/// `e_i ⊗ e_j` of a product of spaces of dimensions `m`, `n` has index
/// `i*n + j`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Rational>,
}

impl std::fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "LinearMap {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| crate::field::format_scalar(&self.field, self.at(r, c)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl LinearMap {
    pub fn new(
        rows: usize,
        cols: usize,
        field: FieldSpec,
        entries: Vec<Rational>,
    ) -> Result<Self, ExactError> {
        if entries.len() != rows * cols {
            return Err(ExactError::BadEntryCount {
                rows,
                cols,
                found: entries.len(),
            });
        }
        let entries = entries.into_iter().map(|e| field.reduce(e)).collect();
        Ok(LinearMap {
            rows,
            cols,
            field,
            entries,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldSpec,
        mut f: impl FnMut(usize, usize) -> Rational,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(field.reduce(f(r, c)));
            }
        }
        LinearMap {
            rows,
            cols,
            field,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Self {
        LinearMap {
            rows,
            cols,
            field,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Self::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// The symmetry map `X ⊗ Y → Y ⊗ X` for `dim X = m`, `dim Y = n`:
    /// sends index `i*n + j` to `j*m + i`.
    pub fn tensor_swap(m: usize, n: usize, field: FieldSpec) -> Self {
        let mut s = Self::zero(m * n, m * n, field);
        for i in 0..m {
            for j in 0..n {
                s.set(j * m + i, i * n + j, field.one());
            }
        }
        s
    }

    /// Builds a map from its columns (images of the domain basis vectors).
    pub fn from_cols(rows: usize, field: FieldSpec, cols: &[Vec<Rational>]) -> Self {
        let mut m = Self::zero(rows, cols.len(), field);
        for (c, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = self.field.reduce(v);
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows, self.field)
    }

    fn check_field(&self, other: &Self) -> Result<(), ExactError> {
        if self.field != other.field {
            return Err(ExactError::FieldMismatch);
        }
        Ok(())
    }

    /// Composition `self ∘ g` (matrix product), for `g` into `self`'s domain.
    pub fn compose(&self, g: &Self) -> Result<Self, ExactError> {
        self.check_field(g)?;
        if self.cols != g.rows {
            return Err(ExactError::DimMismatch(format!(
                "compose: {}x{} with {}x{}",
                self.rows, self.cols, g.rows, g.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zero(self.rows, g.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..g.cols {
                    let b = g.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * g.cols + j;
                    out.entries[idx] = f.add(&out.entries[idx], &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::DimMismatch(format!(
                "add: {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                if b.is_zero() {
                    a.clone()
                } else if a.is_zero() {
                    b.clone()
                } else {
                    f.add(a, b)
                }
            })
            .collect();
        Ok(LinearMap {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::DimMismatch(format!(
                "sub: {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                if b.is_zero() {
                    a.clone()
                } else if a.is_zero() {
                    f.neg(b)
                } else {
                    f.sub(a, b)
                }
            })
            .collect();
        Ok(LinearMap {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self
                .entries
                .iter()
                .map(|e| if e.is_zero() { e.clone() } else { f.neg(e) })
                .collect(),
        }
    }

    /// Iterates the nonzero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(idx, v)| (idx / self.cols, idx % self.cols, v))
    }

    /// Adds `v` into the entry at `(r, c)`.
    pub fn accumulate(&mut self, r: usize, c: usize, v: &Rational) {
        let idx = r * self.cols + c;
        let current = &self.entries[idx];
        self.entries[idx] = if current.is_zero() {
            self.field.reduce(v.clone())
        } else {
            self.field.add(current, v)
        };
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let f = &self.field;
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|e| f.mul(e, s)).collect(),
        }
    }

    /// Kronecker product in the global row-major index order.
    pub fn tensor(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_field(other)?;
        let f = &self.field;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zero(rows, cols, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.field, |r, c| {
            self.at(c, r).clone()
        })
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::DimMismatch(format!(
                "apply: {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let f = &self.field;
        let mut out = vec![Rational::zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] = f.add(&out[r], &f.mul(a, &v[c]));
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(ExactError::DimMismatch("hstack row mismatch".into()));
        }
        Ok(Self::from_fn(
            self.rows,
            self.cols + other.cols,
            self.field,
            |r, c| {
                if c < self.cols {
                    self.at(r, c).clone()
                } else {
                    other.at(r, c - self.cols).clone()
                }
            },
        ))
    }

    /// Vertical concatenation, `self` on top.
    pub fn vstack(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(ExactError::DimMismatch("vstack column mismatch".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(LinearMap {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    /// The first position at which the two maps differ, as a witness.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.at(r, c) != other.at(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }
}
