use exact_kernel::field::{FieldSpec, Rational};
use exact_kernel::{
    cokernel_projection, kernel_basis, solve_right_inverse, subspace_intersection, tensor_map,
    LinearMap, Subspace,
};
use num_traits::Zero;
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn map_from_i64(rows: usize, cols: usize, field: FieldSpec, data: &[i64]) -> LinearMap {
    LinearMap::new(
        rows,
        cols,
        field,
        data.iter().map(|&n| field.integer(n)).collect(),
    )
    .unwrap()
}

/// Independent row-reduction oracle: textbook Gauss-Jordan, first nonzero
/// pivot in each column, no sparsity tricks. Returns the rank.
fn oracle_rank(m: &LinearMap) -> usize {
    let field = m.field();
    let mut rows: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut rank = 0usize;
    for col in 0..m.cols() {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let inv = field.inv(&rows[rank][col]).unwrap();
        for c in 0..m.cols() {
            rows[rank][c] = field.mul(&rows[rank][c], &inv);
        }
        for r in 0..rows.len() {
            if r == rank && rank < rows.len() {
                continue;
            }
            let f = rows[r][col].clone();
            if f.is_zero() {
                continue;
            }
            for c in 0..m.cols() {
                let t = field.mul(&f, &rows[rank][c]);
                rows[r][c] = field.sub(&rows[r][c], &t);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[test]
fn kernel_of_zero_map_is_everything() {
    let z = LinearMap::zero(2, 2, Q);
    assert_eq!(kernel_basis(&z).dim(), 2);
}

#[test]
fn kernel_of_identity_is_zero() {
    let id = LinearMap::identity(3, Q);
    let k = kernel_basis(&id);
    assert_eq!(k.dim(), 0);
    assert!(id.compose(&k.inclusion()).unwrap().is_zero());
}

#[test]
fn galois_map_of_two_element_monoid_has_one_dim_kernel() {
    // S = {e, s}, s^2 = s; Galois map z (x) w -> zw (x) z on k[S] (x) k[S],
    // assembled by enumerating the images of the four basis vectors.
    let table = [[0usize, 1], [1, 1]];
    let mut cols = Vec::new();
    for z in 0..2 {
        for w in 0..2 {
            let mut img = vec![Rational::zero(); 4];
            img[table[z][w] * 2 + z] = Q.one();
            cols.push(img);
        }
    }
    let galois = LinearMap::from_cols(4, Q, &cols);
    let kernel = kernel_basis(&galois);
    assert_eq!(kernel.dim(), 1);
    assert_eq!(oracle_rank(&galois), 3);
    // inclusion composed with the map is zero
    assert!(galois.compose(&kernel.inclusion()).unwrap().is_zero());
}

#[test]
fn cokernel_of_zero_map_is_identity_projection() {
    let z = LinearMap::zero(2, 3, Q);
    let (q, proj) = cokernel_projection(&z);
    assert_eq!(q, 2);
    assert!(proj.is_identity());
}

#[test]
fn cokernel_of_surjection_is_zero() {
    let f = map_from_i64(2, 3, Q, &[1, 0, 2, 0, 1, 5]);
    let (q, proj) = cokernel_projection(&f);
    assert_eq!(q, 0);
    assert_eq!(proj.rows(), 0);
}

#[test]
fn tensor_of_identities() {
    let t = tensor_map(&LinearMap::identity(2, Q), &LinearMap::identity(3, Q)).unwrap();
    assert!(t.is_identity());
    assert_eq!(t.rows(), 6);
}

#[test]
fn tensor_with_trivial_leg_is_reindexing() {
    // comultiplication of k[Z/2]: e -> e(x)e, g -> g(x)g
    let comul = map_from_i64(4, 2, Q, &[1, 0, 0, 0, 0, 0, 0, 1]);
    let t = tensor_map(&comul, &LinearMap::identity(1, Q)).unwrap();
    assert_eq!(t, comul);
}

#[test]
fn intersection_trivial_cases() {
    let u = Subspace::from_span(
        3,
        Q,
        vec![
            vec![Q.integer(1), Q.integer(2), Q.integer(0)],
            vec![Q.integer(0), Q.integer(1), Q.integer(1)],
        ],
    )
    .unwrap();
    assert_eq!(subspace_intersection(&u, &u).unwrap(), u);
    let x = Subspace::from_span(2, Q, vec![vec![Q.one(), Q.zero()]]).unwrap();
    let y = Subspace::from_span(2, Q, vec![vec![Q.zero(), Q.one()]]).unwrap();
    assert_eq!(subspace_intersection(&x, &y).unwrap().dim(), 0);
}

#[test]
fn right_inverse_cases() {
    let id = LinearMap::identity(4, Q);
    assert_eq!(solve_right_inverse(&id).unwrap().unwrap(), id);
    // not surjective: 2x1
    let f = map_from_i64(2, 1, Q, &[1, 1]);
    assert!(solve_right_inverse(&f).unwrap().is_none());
}

#[test]
fn prime_field_arithmetic_round_trip() {
    let f5 = FieldSpec::from_characteristic(5).unwrap();
    let m = map_from_i64(2, 2, f5, &[2, 3, 4, 1]);
    let k = kernel_basis(&m);
    // det = 2 - 12 = -10 = 0 mod 5, so the kernel is 1-dimensional
    assert_eq!(k.dim(), 1);
    assert_eq!(oracle_rank(&m), 1);
    assert!(FieldSpec::from_characteristic(6).is_err());
}

fn small_matrix() -> impl Strategy<Value = LinearMap> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-4i64..5, r * c)
            .prop_map(move |data| map_from_i64(r, c, Q, &data))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity_against_oracle(m in small_matrix()) {
        let kernel = kernel_basis(&m);
        prop_assert_eq!(kernel.dim() + oracle_rank(&m), m.cols());
        prop_assert!(m.compose(&kernel.inclusion()).unwrap().is_zero());
    }

    #[test]
    fn tensor_is_associative(a in small_matrix(), b in small_matrix(), c in small_matrix()) {
        let left = tensor_map(&tensor_map(&a, &b).unwrap(), &c).unwrap();
        let right = tensor_map(&a, &tensor_map(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tensor_rank_is_multiplicative(a in small_matrix(), b in small_matrix()) {
        let t = tensor_map(&a, &b).unwrap();
        prop_assert_eq!(oracle_rank(&t), oracle_rank(&a) * oracle_rank(&b));
    }

    #[test]
    fn cokernel_section_composes_to_identity(m in small_matrix()) {
        let (q, proj) = cokernel_projection(&m);
        prop_assert!(proj.compose(&m).unwrap().is_zero());
        prop_assert_eq!(oracle_rank(&proj), q);
        prop_assert_eq!(q + oracle_rank(&m), m.rows());
        if let Some(section) = solve_right_inverse(&proj).unwrap() {
            prop_assert!(proj.compose(&section).unwrap().is_identity());
        } else {
            prop_assert!(q > 0, "projection must be surjective");
            panic!("no section found for a surjective projection");
        }
    }

    #[test]
    fn intersection_is_commutative(a in small_matrix(), b in small_matrix()) {
        prop_assume!(a.cols() == b.cols());
        let u = Subspace::from_span(a.cols(), Q, (0..a.rows()).map(|r| a.row(r).to_vec()).collect()).unwrap();
        let w = Subspace::from_span(b.cols(), Q, (0..b.rows()).map(|r| b.row(r).to_vec()).collect()).unwrap();
        prop_assert_eq!(u.intersect(&w).unwrap(), w.intersect(&u).unwrap());
    }
}
