use exact_kernel::{FieldSpec, LinearMap, Subspace};

/// Matrix of a linear operator on the space of `rows x cols` maps, in the
/// row-major basis `E_{rc} |-> r*cols + c`.
pub(crate) fn map_space_matrix(
    rows: usize,
    cols: usize,
    field: FieldSpec,
    eval: impl Fn(&LinearMap) -> LinearMap,
) -> LinearMap {
    let probe = eval(&LinearMap::zero(rows, cols, field));
    let out_dim = probe.rows() * probe.cols();
    let mut columns = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let mut e = LinearMap::zero(rows, cols, field);
            e.set(r, c, field.one());
            columns.push(eval(&e).entries().to_vec());
        }
    }
    LinearMap::from_cols(out_dim, field, &columns)
}

/// Flattens a map to the column vector of its row-major entries.
pub(crate) fn vec_of(m: &LinearMap) -> LinearMap {
    LinearMap::new(m.rows() * m.cols(), 1, m.field(), m.entries().to_vec()).unwrap()
}

pub(crate) fn unvec(rows: usize, cols: usize, v: &LinearMap) -> LinearMap {
    LinearMap::new(rows, cols, v.field(), v.entries().to_vec()).unwrap()
}

/// The permutation of a product of legs that swaps legs `i` and `i+1`.
pub(crate) fn swap_adjacent_legs(dims: &[usize], i: usize, field: FieldSpec) -> LinearMap {
    let before: usize = dims[..i].iter().product();
    let after: usize = dims[i + 2..].iter().product();
    let swap = LinearMap::tensor_swap(dims[i], dims[i + 1], field);
    LinearMap::identity(before, field)
        .tensor(&swap)
        .unwrap()
        .tensor(&LinearMap::identity(after, field))
        .unwrap()
}

/// Row index permutation for swapping legs `i` and `i+1` of a leg product.
fn swap_row_index(dims: &[usize], i: usize, row: usize) -> usize {
    let after: usize = dims[i + 2..].iter().product();
    let di = dims[i];
    let dj = dims[i + 1];
    let tail = row % after;
    let rest = row / after;
    let b = rest % dj;
    let rest = rest / dj;
    let a = rest % di;
    let head = rest / di;
    ((head * dj + b) * di + a) * after + tail
}

/// Computes `swap_{i,i+1} ∘ m` by permuting the rows of `m` in place of
/// materializing the permutation matrix.
pub(crate) fn apply_swap_rows(dims: &[usize], i: usize, m: &LinearMap) -> LinearMap {
    debug_assert_eq!(m.rows(), dims.iter().product::<usize>());
    let mut out = LinearMap::zero(m.rows(), m.cols(), m.field());
    for (r, c, v) in m.nonzeros() {
        out.set(swap_row_index(dims, i, r), c, v.clone());
    }
    out
}

/// Computes `(f ⊗ id_k) ∘ m` without materializing the Kronecker factor.
pub(crate) fn apply_left_kron(f: &LinearMap, k: usize, m: &LinearMap) -> LinearMap {
    debug_assert_eq!(m.rows(), f.cols() * k);
    let mut out = LinearMap::zero(f.rows() * k, m.cols(), m.field());
    for (r, c, v) in f.nonzeros() {
        for j in 0..k {
            let src_row = c * k + j;
            for col in 0..m.cols() {
                let e = m.at(src_row, col);
                if !e.is_zero() {
                    let prod = m.field().mul(v, e);
                    out.accumulate(r * k + j, col, &prod);
                }
            }
        }
    }
    out
}

/// Computes `(id_k ⊗ f) ∘ m` without materializing the Kronecker factor.
pub(crate) fn apply_right_kron(k: usize, f: &LinearMap, m: &LinearMap) -> LinearMap {
    debug_assert_eq!(m.rows(), k * f.cols());
    let mut out = LinearMap::zero(k * f.rows(), m.cols(), m.field());
    for (r, c, v) in f.nonzeros() {
        for a in 0..k {
            let src_row = a * f.cols() + c;
            for col in 0..m.cols() {
                let e = m.at(src_row, col);
                if !e.is_zero() {
                    let prod = m.field().mul(v, e);
                    out.accumulate(a * f.rows() + r, col, &prod);
                }
            }
        }
    }
    out
}

/// Kernel basis of several stacked linear conditions on a map space:
/// the maps `f` with `eval_k(f) = 0` for every condition.
pub(crate) fn map_space_kernel(
    rows: usize,
    cols: usize,
    field: FieldSpec,
    conditions: &[&dyn Fn(&LinearMap) -> LinearMap],
) -> Vec<LinearMap> {
    let mut stacked: Option<LinearMap> = None;
    for cond in conditions {
        let m = map_space_matrix(rows, cols, field, cond);
        stacked = Some(match stacked {
            None => m,
            Some(s) => s.vstack(&m).unwrap(),
        });
    }
    let stacked = stacked.expect("at least one condition");
    exact_kernel::kernel_basis(&stacked)
        .basis()
        .iter()
        .map(|v| LinearMap::new(rows, cols, field, v.clone()).unwrap())
        .collect()
}

/// Corestricts a vector of `k^blocks ⊗ k^ambient` through `blocks` copies of
/// a subspace of `k^ambient`: slices per block, takes coordinates, and fails
/// if any slice falls outside.
pub(crate) fn coords_block_left(
    sub: &Subspace,
    v: &[exact_kernel::Rational],
    blocks: usize,
) -> Option<Vec<exact_kernel::Rational>> {
    let amb = sub.ambient();
    debug_assert_eq!(v.len(), blocks * amb);
    let mut out = Vec::with_capacity(blocks * sub.dim());
    for b in 0..blocks {
        let coords = sub.coords_of(&v[b * amb..(b + 1) * amb])?;
        out.extend(coords);
    }
    Some(out)
}

/// As `coords_block_left`, for vectors of `k^ambient ⊗ k^blocks`.
pub(crate) fn coords_block_right(
    sub: &Subspace,
    v: &[exact_kernel::Rational],
    blocks: usize,
) -> Option<Vec<exact_kernel::Rational>> {
    let amb = sub.ambient();
    debug_assert_eq!(v.len(), blocks * amb);
    let d = sub.dim();
    let mut out = vec![exact_kernel::Rational::from_integer(0.into()); d * blocks];
    for b in 0..blocks {
        let slice: Vec<_> = (0..amb).map(|j| v[j * blocks + b].clone()).collect();
        let coords = sub.coords_of(&slice)?;
        for (i, c) in coords.into_iter().enumerate() {
            out[i * blocks + b] = c;
        }
    }
    Some(out)
}

/// Applies `coords_block_left` columnwise to a map into `k^blocks ⊗ k^ambient`.
pub(crate) fn corestrict_block_left(
    sub: &Subspace,
    m: &LinearMap,
    blocks: usize,
) -> Option<LinearMap> {
    let mut cols = Vec::with_capacity(m.cols());
    for c in 0..m.cols() {
        cols.push(coords_block_left(sub, &m.column(c), blocks)?);
    }
    Some(LinearMap::from_cols(
        blocks * sub.dim(),
        m.field(),
        &cols,
    ))
}

/// Applies `coords_block_right` columnwise to a map into `k^ambient ⊗ k^blocks`.
pub(crate) fn corestrict_block_right(
    sub: &Subspace,
    m: &LinearMap,
    blocks: usize,
) -> Option<LinearMap> {
    let mut cols = Vec::with_capacity(m.cols());
    for c in 0..m.cols() {
        cols.push(coords_block_right(sub, &m.column(c), blocks)?);
    }
    Some(LinearMap::from_cols(
        sub.dim() * blocks,
        m.field(),
        &cols,
    ))
}
