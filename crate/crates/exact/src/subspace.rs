use num_traits::Zero;

use crate::field::{FieldSpec, Rational};
use crate::matrix::LinearMap;
use crate::rref::{canonicalize_rows, kernel_rows};
use crate::ExactError;

/// A subspace of `k^ambient`, stored as the unique reduced row-echelon basis
/// of its span. Two subspaces are equal iff their canonical bases agree, so
/// derived `PartialEq` is span equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    field: FieldSpec,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_span(
        ambient: usize,
        field: FieldSpec,
        vectors: Vec<Vec<Rational>>,
    ) -> Result<Self, ExactError> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(ExactError::DimMismatch(format!(
                    "span vector of length {} in ambient {}",
                    v.len(),
                    ambient
                )));
            }
        }
        let vectors = vectors
            .into_iter()
            .map(|v| v.into_iter().map(|e| field.reduce(e)).collect())
            .collect();
        let basis = canonicalize_rows(vectors, ambient, &field);
        Ok(Self::from_canonical(ambient, field, basis))
    }

    fn from_canonical(ambient: usize, field: FieldSpec, basis: Vec<Vec<Rational>>) -> Self {
        let pivots = basis
            .iter()
            .map(|row| row.iter().position(|e| !e.is_zero()).expect("nonzero row"))
            .collect();
        Subspace {
            ambient,
            field,
            basis,
            pivots,
        }
    }

    /// The kernel `{v : f v = 0}`.
    pub fn kernel_of(f: &LinearMap) -> Self {
        let basis = kernel_rows(f);
        Self::from_canonical(f.cols(), f.field(), basis)
    }

    pub fn zero(ambient: usize, field: FieldSpec) -> Self {
        Subspace {
            ambient,
            field,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize, field: FieldSpec) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Self::from_canonical(ambient, field, basis)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// The inclusion map `k^dim → k^ambient` whose columns are the basis.
    pub fn inclusion(&self) -> LinearMap {
        LinearMap::from_fn(self.ambient, self.dim(), self.field, |r, c| {
            self.basis[c][r].clone()
        })
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside
    /// the subspace. Because the basis is in RREF, coordinates are read off
    /// at the pivot positions and verified by a residual check.
    pub fn coords_of(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient {
            return None;
        }
        let f = &self.field;
        let coords: Vec<Rational> = self.pivots.iter().map(|p| v[*p].clone()).collect();
        // residual = v - sum coords_i * basis_i
        let mut residual: Vec<Rational> = v.to_vec();
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (j, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    residual[j] = f.sub(&residual[j], &f.mul(c, e));
                }
            }
        }
        if residual.iter().all(|e| e.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coords_of(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Expresses each column of `m` in the subspace basis, failing if any
    /// column falls outside. This is the corestriction of `m` through the
    /// inclusion.
    pub fn corestrict(&self, m: &LinearMap) -> Result<LinearMap, ExactError> {
        if m.rows() != self.ambient {
            return Err(ExactError::DimMismatch(format!(
                "corestrict: map into {} vs ambient {}",
                m.rows(),
                self.ambient
            )));
        }
        let mut cols = Vec::with_capacity(m.cols());
        for c in 0..m.cols() {
            let col = m.column(c);
            let coords = self
                .coords_of(&col)
                .ok_or_else(|| ExactError::NotInSubspace { column: c })?;
            cols.push(coords);
        }
        Ok(LinearMap::from_cols(self.dim(), self.field, &cols))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        if self.ambient != other.ambient {
            return Err(ExactError::DimMismatch(format!(
                "intersection in ambients {} and {}",
                self.ambient, other.ambient
            )));
        }
        if self.field != other.field {
            return Err(ExactError::FieldMismatch);
        }
        // v in U cap W  <=>  v = U x = W y; solve [U | -W] (x;y) = 0
        let stacked = self.inclusion().hstack(&other.inclusion().neg())?;
        let joint = Subspace::kernel_of(&stacked);
        let vectors = joint
            .basis()
            .iter()
            .map(|xy| {
                let f = &self.field;
                let mut v = vec![Rational::zero(); self.ambient];
                for (i, row) in self.basis.iter().enumerate() {
                    if xy[i].is_zero() {
                        continue;
                    }
                    for (j, e) in row.iter().enumerate() {
                        if !e.is_zero() {
                            v[j] = f.add(&v[j], &f.mul(&xy[i], e));
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::from_span(self.ambient, self.field, vectors)
    }
}

/// Quotient of the codomain of `f` by its image: the quotient dimension and
/// a surjective projection with `projection ∘ f = 0`.
pub fn cokernel_projection(f: &LinearMap) -> (usize, LinearMap) {
    let field = f.field();
    let m = f.rows();
    let image_vectors: Vec<Vec<Rational>> = (0..f.cols()).map(|c| f.column(c)).collect();
    let image = Subspace::from_span(m, field, image_vectors).expect("column span");
    let pivot_set: std::collections::BTreeSet<usize> = image.pivots.iter().copied().collect();
    let free: Vec<usize> = (0..m).filter(|i| !pivot_set.contains(i)).collect();
    let q = free.len();
    let mut proj = LinearMap::zero(q, m, field);
    for (k_idx, &k) in free.iter().enumerate() {
        proj.set(k_idx, k, field.one());
        for (j_idx, &j) in image.pivots.iter().enumerate() {
            let corr = field.neg(&image.basis[j_idx][k]);
            if !corr.is_zero() {
                proj.set(k_idx, j, corr);
            }
        }
    }
    (q, proj)
}
