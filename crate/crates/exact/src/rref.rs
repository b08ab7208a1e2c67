use num_traits::Zero;

use crate::field::{FieldSpec, Rational};
use crate::matrix::LinearMap;
use crate::ExactError;

/// Reduced row echelon form in place. Returns the pivot columns in order.
/// The result is the unique RREF of the row span, so it is deterministic
/// regardless of pivot-row choices.
pub fn rref_rows(rows: &mut Vec<Vec<Rational>>, ncols: usize, field: &FieldSpec) -> Vec<usize> {
    let mut nnz: Vec<usize> = rows
        .iter()
        .map(|row| row.iter().filter(|e| !e.is_zero()).count())
        .collect();
    let mut pivots = Vec::new();
    let mut next_row = 0usize;
    for col in 0..ncols {
        // pick the sparsest candidate row to limit fill-in
        let mut best: Option<(usize, usize)> = None;
        for r in next_row..rows.len() {
            if !rows[r][col].is_zero() && best.map(|(_, b)| nnz[r] < b).unwrap_or(true) {
                best = Some((r, nnz[r]));
            }
        }
        let Some((pr, _)) = best else { continue };
        rows.swap(next_row, pr);
        nnz.swap(next_row, pr);
        let inv = field.inv(&rows[next_row][col]).expect("nonzero pivot");
        for e in rows[next_row].iter_mut() {
            if !e.is_zero() {
                *e = field.mul(e, &inv);
            }
        }
        let pivot_row = rows[next_row].clone();
        let pivot_support: Vec<usize> = pivot_row
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(c, _)| c)
            .collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &c in &pivot_support {
                let was_zero = row[c].is_zero();
                row[c] = field.sub(&row[c], &field.mul(&factor, &pivot_row[c]));
                match (was_zero, row[c].is_zero()) {
                    (true, false) => nnz[r] += 1,
                    (false, true) => nnz[r] -= 1,
                    _ => {}
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    rows.truncate(next_row);
    pivots
}

/// Sparse row with strictly increasing column indices.
type SparseRow = Vec<(u32, Rational)>;

fn sparse_axpy(dst: &SparseRow, src: &SparseRow, factor: &Rational, field: &FieldSpec) -> SparseRow {
    // dst - factor * src, merged
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < dst.len() || j < src.len() {
        let ci = dst.get(i).map(|e| e.0).unwrap_or(u32::MAX);
        let cj = src.get(j).map(|e| e.0).unwrap_or(u32::MAX);
        if ci < cj {
            out.push(dst[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, field.neg(&field.mul(factor, &src[j].1))));
            j += 1;
        } else {
            let v = field.sub(&dst[i].1, &field.mul(factor, &src[j].1));
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Gauss–Jordan elimination on a sparse matrix with free pivot order
/// (greedy Markowitz-style selection). Returns the reduced rows together
/// with the pivot column of each remaining row.
fn sparse_eliminate(
    mut rows: Vec<SparseRow>,
    ncols: usize,
    field: &FieldSpec,
) -> (Vec<SparseRow>, Vec<u32>) {
    rows.retain(|r| !r.is_empty());
    let mut col_count = vec![0u32; ncols];
    for row in &rows {
        for (c, _) in row {
            col_count[*c as usize] += 1;
        }
    }
    let n = rows.len();
    let mut pivot_of: Vec<Option<u32>> = vec![None; n];
    let mut done = vec![false; n];
    loop {
        // choose the unpivoted row with fewest entries; among its entries,
        // the column shared with fewest other rows
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            if done[r] || row.is_empty() {
                continue;
            }
            if best.map(|(_, len)| row.len() < len).unwrap_or(true) {
                best = Some((r, row.len()));
            }
        }
        let Some((pr, _)) = best else { break };
        let pc = rows[pr]
            .iter()
            .min_by_key(|(c, _)| col_count[*c as usize])
            .map(|(c, _)| *c)
            .expect("nonempty row");
        // normalize the pivot row
        let pv = rows[pr]
            .iter()
            .find(|(c, _)| *c == pc)
            .map(|(_, v)| v.clone())
            .expect("pivot entry");
        let inv = field.inv(&pv).expect("nonzero pivot");
        for (_, v) in rows[pr].iter_mut() {
            *v = field.mul(v, &inv);
        }
        let pivot_row = rows[pr].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pr {
                continue;
            }
            let Some(pos) = row.iter().position(|(c, _)| *c == pc) else {
                continue;
            };
            let factor = row[pos].1.clone();
            for (c, _) in row.iter() {
                col_count[*c as usize] -= 1;
            }
            *row = sparse_axpy(row, &pivot_row, &factor, field);
            for (c, _) in row.iter() {
                col_count[*c as usize] += 1;
            }
        }
        pivot_of[pr] = Some(pc);
        done[pr] = true;
    }
    let mut out_rows = Vec::new();
    let mut out_pivots = Vec::new();
    for (r, row) in rows.into_iter().enumerate() {
        if let Some(pc) = pivot_of[r] {
            out_rows.push(row);
            out_pivots.push(pc);
        }
    }
    (out_rows, out_pivots)
}

fn to_sparse_rows(m: &LinearMap) -> Vec<SparseRow> {
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c as u32, v.clone()))
                .collect()
        })
        .collect()
}

/// When a matrix gets large we switch from dense RREF to sparse
/// Gauss–Jordan; the kernel basis is canonicalized afterwards either way.
const SPARSE_THRESHOLD: usize = 1 << 16;

/// A basis of `{v : m v = 0}`, as rows, canonicalized to RREF form.
pub fn kernel_rows(m: &LinearMap) -> Vec<Vec<Rational>> {
    let field = m.field();
    let ncols = m.cols();
    let (reduced, pivots): (Vec<SparseRow>, Vec<u32>) =
        if m.rows() * m.cols() > SPARSE_THRESHOLD {
            sparse_eliminate(to_sparse_rows(m), ncols, &field)
        } else {
            let mut rows: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
            let piv = rref_rows(&mut rows, ncols, &field);
            let sparse = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(c, v)| (c as u32, v.clone()))
                        .collect()
                })
                .collect();
            (sparse, piv.into_iter().map(|c| c as u32).collect())
        };
    let mut is_pivot = vec![false; ncols];
    let mut row_of_pivot = vec![usize::MAX; ncols];
    for (r, pc) in pivots.iter().enumerate() {
        is_pivot[*pc as usize] = true;
        row_of_pivot[*pc as usize] = r;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rational::zero(); ncols];
        v[free] = field.one();
        // each reduced row reads: x_pivot + sum_{free f} a_f x_f = 0
        for (r, pc) in pivots.iter().enumerate() {
            if let Ok(pos) = reduced[r].binary_search_by(|(c, _)| (*c as usize).cmp(&free)) {
                v[*pc as usize] = field.neg(&reduced[r][pos].1);
            }
        }
        basis.push(v);
    }
    let _ = row_of_pivot;
    canonicalize_rows(basis, ncols, &field)
}

/// RREF-canonical form of a spanning set; the unique reduced basis of the span.
pub fn canonicalize_rows(
    mut rows: Vec<Vec<Rational>>,
    ncols: usize,
    field: &FieldSpec,
) -> Vec<Vec<Rational>> {
    rref_rows(&mut rows, ncols, field);
    rows
}

pub fn rank(m: &LinearMap) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    if m.rows() * m.cols() > SPARSE_THRESHOLD {
        let (_, pivots) = sparse_eliminate(to_sparse_rows(m), m.cols(), &m.field());
        pivots.len()
    } else {
        let mut rows: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
        rref_rows(&mut rows, m.cols(), &m.field()).len()
    }
}

/// Solves `a · x = b` for a matrix `x`, returning the canonical particular
/// solution (free coordinates set to zero), or `None` when inconsistent.
pub fn solve(a: &LinearMap, b: &LinearMap) -> Result<Option<LinearMap>, ExactError> {
    if a.field() != b.field() {
        return Err(ExactError::FieldMismatch);
    }
    if a.rows() != b.rows() {
        return Err(ExactError::DimMismatch(format!(
            "solve: coefficient {}x{} vs rhs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let field = a.field();
    let aug = a.hstack(b)?;
    let mut rows: Vec<Vec<Rational>> = (0..aug.rows()).map(|r| aug.row(r).to_vec()).collect();
    let pivots = rref_rows(&mut rows, aug.cols(), &field);
    // inconsistent iff some pivot falls in the rhs block
    if pivots.iter().any(|p| *p >= a.cols()) {
        return Ok(None);
    }
    let mut x = LinearMap::zero(a.cols(), b.cols(), field);
    for (r, pc) in pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(*pc, j, rows[r][a.cols() + j].clone());
        }
    }
    Ok(Some(x))
}

/// A right inverse `g` with `f ∘ g = id`, when `f` is surjective.
pub fn solve_right_inverse(f: &LinearMap) -> Result<Option<LinearMap>, ExactError> {
    solve(f, &LinearMap::identity(f.rows(), f.field()))
}

/// Certificate data for an inconsistent system: ranks of the coefficient
/// matrix and of the augmented matrix.
pub struct RankCertificate {
    pub coefficient_rank: usize,
    pub augmented_rank: usize,
}

pub fn solve_with_certificate(
    a: &LinearMap,
    b: &LinearMap,
) -> Result<(Option<LinearMap>, RankCertificate), ExactError> {
    let sol = solve(a, b)?;
    let coefficient_rank = rank(a);
    let augmented_rank = if sol.is_some() {
        coefficient_rank
    } else {
        rank(&a.hstack(b)?)
    };
    Ok((
        sol,
        RankCertificate {
            coefficient_rank,
            augmented_rank,
        },
    ))
}
