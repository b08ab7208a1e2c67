use std::sync::Arc;

use exact_kernel::subspace::cokernel_projection;
use exact_kernel::{FieldSpec, LinearMap, Rational, Subspace};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bialgebra::{is_semisimple_algebra, AlgebraFD, BialgebraFD};
use crate::comodule::{comodule_hom_space, cotensor, CotensorSpace, LeftComoduleFD};
use crate::trimodule_algebra::{
    cotensor_lift, coords_in_map_basis, descend_along, free_module, module_hom_space, monad_unit,
    TrimoduleAlgebraFD,
};
use crate::util::vec_of;
use crate::HopfError;

/// The dual algebra `B*` with the convolution product: multiplication is
/// the transpose of the comultiplication, the unit is the counit.
pub fn dual_algebra(b: &BialgebraFD) -> AlgebraFD {
    AlgebraFD::new(
        b.dim(),
        b.comul().transpose(),
        b.counit().transpose(),
    )
    .expect("transposed structure constants have the right shapes")
}

/// The right action `- ◁ e_l*` of the `l`-th dual basis functional on a left
/// comodule: `m ◁ f = f(m_(-1)) m_(0)`.
fn dual_action(m: &LeftComoduleFD, l: usize) -> LinearMap {
    let md = m.dim();
    LinearMap::from_fn(md, md, m.field(), |i, j| {
        m.coaction().at(l * md + i, j).clone()
    })
}

/// The comodule whose underlying right `B*`-module is free of rank one:
/// `λ(e_l*) = Σ_{j,k} Δ_k^{lj} e_j ⊗ e_k*`. This is a projective generator
/// of the finite-dimensional comodule category.
pub fn coregular_comodule(base: Arc<BialgebraFD>) -> LeftComoduleFD {
    let n = base.dim();
    let field = base.field();
    let coaction = LinearMap::from_fn(n * n, n, field, |row, l| {
        let (j, k) = (row / n, row % n);
        base.comul().at(l * n + j, k).clone()
    });
    LeftComoduleFD::new(base, n, coaction).expect("coregular shapes")
}

/// The canonical surjection from `dim M` copies of the coregular comodule
/// onto `M`: the `(l, i)` basis vector maps to `m_i ◁ e_l*`.
pub fn canonical_cover(m: &LeftComoduleFD) -> (LeftComoduleFD, LinearMap) {
    let base = m.base().clone();
    let n = base.dim();
    let d = m.dim();
    let field = m.field();
    let coreg = coregular_comodule(base.clone());
    let id_d = LinearMap::identity(d, field);
    let source = LeftComoduleFD::new(
        base,
        n * d,
        coreg.coaction().tensor(&id_d).unwrap(),
    )
    .expect("sum of coregulars");
    let cover = LinearMap::from_fn(d, n * d, field, |j, col| {
        let (l, i) = (col / d, col % d);
        m.coaction().at(l * d + j, i).clone()
    });
    (source, cover)
}

/// A computed cohom value `cohom(A, M) = M ⊗_{B*} A*` together with the
/// quotient projection it was built from.
pub struct CohomResult {
    pub comodule: LeftComoduleFD,
    /// `M ⊗ A* → cohom(A, M)` in coordinates
    pub projection: LinearMap,
}

/// The left adjoint of `A □ -`, computed by the dual-algebra route: tensor
/// with the dual bimodule `A*` over `B*`.
pub fn cohom(a: &TrimoduleAlgebraFD, m: &LeftComoduleFD) -> Result<CohomResult, HopfError> {
    crate::comodule::require_same_base(a.base(), m.base())?;
    let base = a.base().clone();
    let field = base.field();
    let n = base.dim();
    let d = a.dim();
    let md = m.dim();
    let carrier = a.carrier();
    // right action of e_l* on A* = transpose of the left action on A (from ρ_A)
    let left_on_a: Vec<LinearMap> = (0..n)
        .map(|l| {
            LinearMap::from_fn(d, d, field, |i, k| carrier.rho().at(i * n + l, k).clone())
        })
        .collect();
    // left action of e_l* on A* = transpose of the right action on A (from λ_A)
    let right_on_a: Vec<LinearMap> = (0..n)
        .map(|l| {
            LinearMap::from_fn(d, d, field, |i, k| carrier.lambda().at(l * d + i, k).clone())
        })
        .collect();
    let act_m: Vec<LinearMap> = (0..n).map(|l| dual_action(m, l)).collect();
    // relation map M ⊗ B* ⊗ A* → M ⊗ A*: m⊗f⊗φ ↦ (m◁f)⊗φ - m⊗(f⇀φ)
    let mut columns = Vec::with_capacity(md * n * d);
    for m_idx in 0..md {
        for l in 0..n {
            for phi in 0..d {
                let mut col = vec![field.zero(); md * d];
                for j in 0..md {
                    let c = act_m[l].at(j, m_idx);
                    if !c.is_zero() {
                        col[j * d + phi] = field.add(&col[j * d + phi], c);
                    }
                }
                for psi in 0..d {
                    // (f ⇀ φ)(a) = φ(a ◁ f): transpose of the right action on A
                    let c = right_on_a[l].at(phi, psi);
                    if !c.is_zero() {
                        col[m_idx * d + psi] = field.sub(&col[m_idx * d + psi], c);
                    }
                }
                columns.push(col);
            }
        }
    }
    let relation = LinearMap::from_cols(md * d, field, &columns);
    let (qdim, projection) = cokernel_projection(&relation);
    // right B*-action on the quotient descends from - ⊗ (↼ e_l*)
    let id_m = LinearMap::identity(md, field);
    let mut coaction = LinearMap::zero(n * qdim, qdim, field);
    for l in 0..n {
        let on_dual = left_on_a[l].transpose();
        let raw = projection.compose(&id_m.tensor(&on_dual)?)?;
        let descended = descend_along(&projection, &raw)?;
        for i in 0..qdim {
            for w in 0..qdim {
                coaction.set(l * qdim + i, w, descended.at(i, w).clone());
            }
        }
    }
    let comodule = LeftComoduleFD::new(base, qdim, coaction)?;
    Ok(CohomResult {
        comodule,
        projection,
    })
}

/// The functorial action of `cohom(A, -)` on a comodule morphism.
pub fn cohom_map(
    a: &TrimoduleAlgebraFD,
    src: &CohomResult,
    dst: &CohomResult,
    f: &LinearMap,
) -> Result<LinearMap, HopfError> {
    let field = f.field();
    let id_dual = LinearMap::identity(a.dim(), field);
    let raw = dst.projection.compose(&f.tensor(&id_dual)?)?;
    descend_along(&src.projection, &raw)
}

/// The adjunction counit `cohom(A, A □ V) → V` on representatives:
/// `t ⊗ φ ↦ (φ ⊗ V)(t)`.
pub fn cohom_counit(
    a: &TrimoduleAlgebraFD,
    v_dim: usize,
    fv: &CotensorSpace,
    kfv: &CohomResult,
) -> Result<LinearMap, HopfError> {
    let field = a.base().field();
    let d = a.dim();
    let incl = fv.inclusion();
    let s = fv.dim();
    let pairing = LinearMap::from_fn(v_dim, s * d, field, |v, col| {
        let (t, i) = (col / d, col % d);
        incl.at(i * v_dim + v, t).clone()
    });
    descend_along(&kfv.projection, &pairing)
}

/// The adjunction unit `M → A □ cohom(A, M)` in cotensor coordinates:
/// `m ↦ Σ_i a_i ⊗ [m ⊗ a_i*]`.
pub fn cohom_unit(
    a: &TrimoduleAlgebraFD,
    m: &LeftComoduleFD,
    km: &CohomResult,
    target: &CotensorSpace,
) -> Result<LinearMap, HopfError> {
    let field = a.base().field();
    let d = a.dim();
    let q = km.comodule.dim();
    let raw = LinearMap::from_fn(d * q, m.dim(), field, |row, m_idx| {
        let (i, t) = (row / q, row % q);
        km.projection.at(t, m_idx * d + i).clone()
    });
    target.subspace().corestrict(&raw).map_err(|_| {
        HopfError::Corestriction("cohom unit escapes the cotensor subspace".into())
    })
}

/// The comonad comultiplication `δ_M : cohom(A,M) → cohom(A, cohom(A,M))`,
/// induced contravariantly by the multiplication of `A`.
pub fn cohom_comul(
    a: &TrimoduleAlgebraFD,
    m: &LeftComoduleFD,
    km: &CohomResult,
    kkm: &CohomResult,
) -> Result<LinearMap, HopfError> {
    let base = a.base();
    let field = base.field();
    let d = a.dim();
    let md = m.dim();
    let q = km.comodule.dim();
    // lift each φ ∘ μ through the surjection (A* ⊗ A*) → (A □ A)*
    let incl_sq_t = a.square().inclusion().transpose();
    let mul_t = a.mul().transpose();
    let lifts = exact_kernel::solve(&incl_sq_t, &mul_t)?
        .ok_or_else(|| HopfError::Corestriction("mul* does not lift to A* ⊗ A*".into()))?;
    // on representatives: m ⊗ a_l* ↦ Σ_{ij} lift_l[i,j] · [[m ⊗ a_i*] ⊗ a_j*]
    let mut columns = Vec::with_capacity(md * d);
    for m_idx in 0..md {
        for l in 0..d {
            let mut col = vec![field.zero(); kkm.comodule.dim()];
            for i in 0..d {
                for j in 0..d {
                    let c = lifts.at(i * d + j, l);
                    if c.is_zero() {
                        continue;
                    }
                    // q(m ⊗ a_i*) gives K(M)-coordinates; pair with a_j*
                    for t in 0..q {
                        let w = km.projection.at(t, m_idx * d + i).clone();
                        if w.is_zero() {
                            continue;
                        }
                        let coeff = field.mul(c, &w);
                        for (out, acc) in col.iter_mut().enumerate() {
                            let v = kkm.projection.at(out, t * d + j);
                            if !v.is_zero() {
                                *acc = field.add(acc, &field.mul(&coeff, v));
                            }
                        }
                    }
                }
            }
            columns.push(col);
        }
    }
    let on_reps = LinearMap::from_cols(kkm.comodule.dim(), field, &columns);
    descend_along(&km.projection, &on_reps)
}

/// The comonad counit `cohom(A, M) → M`: the adjunct of the monad unit.
pub fn cohom_counit_at(
    a: &Arc<TrimoduleAlgebraFD>,
    m: &LeftComoduleFD,
    km: &CohomResult,
) -> Result<LinearMap, HopfError> {
    let fm = cotensor(a.carrier().view(), m.view())?;
    let eta = monad_unit(a, m, &fm)?;
    let kfm = cohom(a, &fm.to_left_comodule()?)?;
    let k_eta = cohom_map(a, km, &kfm, &eta)?;
    let counit = cohom_counit(a, m.dim(), &fm, &kfm)?;
    Ok(counit.compose(&k_eta)?)
}

/// A contramodule: a comodule with a coaction over the comonad
/// `cohom(A, -)`.
#[derive(Clone, Debug)]
pub struct ContramoduleFD {
    pub algebra: Arc<TrimoduleAlgebraFD>,
    pub carrier: LeftComoduleFD,
    pub coact: LinearMap,
}

/// The free contramodule on `M`: carrier `cohom(A, M)` with the comonad
/// comultiplication as its coaction.
pub fn free_contramodule(
    a: &Arc<TrimoduleAlgebraFD>,
    m: &LeftComoduleFD,
) -> Result<ContramoduleFD, HopfError> {
    let km = cohom(a, m)?;
    let kkm = cohom(a, &km.comodule)?;
    let coact = cohom_comul(a, m, &km, &kkm)?;
    Ok(ContramoduleFD {
        algebra: a.clone(),
        carrier: km.comodule,
        coact,
    })
}

/// Checks the contramodule laws: the coaction is a comodule morphism,
/// counital, and coassociative against the comonad structure.
pub fn contramodule_validate(c: &ContramoduleFD) -> Result<crate::Report, HopfError> {
    let mut report = crate::Report::new();
    let a = &c.algebra;
    let base = a.base();
    let id_b = base.id();
    let km = cohom(a, &c.carrier)?;
    if c.coact.rows() != km.comodule.dim() || c.coact.cols() != c.carrier.dim() {
        return Err(HopfError::Shape(format!(
            "contramodule coaction must be {}x{}, got {}x{}",
            km.comodule.dim(),
            c.carrier.dim(),
            c.coact.rows(),
            c.coact.cols()
        )));
    }
    let lhs = km.comodule.coaction().compose(&c.coact)?;
    let rhs = id_b.tensor(&c.coact)?.compose(c.carrier.coaction())?;
    report.push_eq("coact-colinear", &lhs, &rhs);
    let counit = cohom_counit_at(a, &c.carrier, &km)?;
    report.push_eq(
        "coact-counit",
        &counit.compose(&c.coact)?,
        &LinearMap::identity(c.carrier.dim(), base.field()),
    );
    if report.all_pass() {
        let kkm = cohom(a, &km.comodule)?;
        let delta = cohom_comul(a, &c.carrier, &km, &kkm)?;
        let k_coact = cohom_map(a, &km, &kkm, &c.coact)?;
        let lhs = k_coact.compose(&c.coact)?;
        let rhs = delta.compose(&c.coact)?;
        report.push_eq("coact-coassoc", &lhs, &rhs);
    } else {
        report.push(
            "coact-coassoc",
            false,
            Some("skipped: coaction is not a comodule morphism".into()),
        );
    }
    Ok(report)
}

/// Certifies the cohom adjunction for one `(A, M)` and a pool of test
/// comodules: dimensions, elementwise round trips, and naturality squares.
pub fn certify_cohom(
    a: &Arc<TrimoduleAlgebraFD>,
    m: &LeftComoduleFD,
    pool: &[LeftComoduleFD],
) -> Result<crate::Report, HopfError> {
    let mut report = crate::Report::new();
    let km = cohom(a, m)?;
    for (vi, v) in pool.iter().enumerate() {
        let fv = cotensor(a.carrier().view(), v.view())?;
        let fv_com = fv.to_left_comodule()?;
        let kfv = cohom(a, &fv_com)?;
        let counit = cohom_counit(a, v.dim(), &fv, &kfv)?;
        let target = cotensor(a.carrier().view(), km.comodule.view())?;
        let unit = cohom_unit(a, m, &km, &target)?;
        let homs_left = comodule_hom_space(&km.comodule, v)?;
        let homs_right = comodule_hom_space(m, &fv_com)?;
        report.push(
            format!("cohom-dim-match-v{vi}"),
            homs_left.len() == homs_right.len(),
            Some(format!("{} vs {}", homs_left.len(), homs_right.len())),
        );
        let forward = |g: &LinearMap| -> Result<LinearMap, HopfError> {
            let lifted = cotensor_lift(&target, &fv, g)?;
            Ok(lifted.compose(&unit)?)
        };
        let backward = |f: &LinearMap| -> Result<LinearMap, HopfError> {
            let kf = cohom_map(a, &km, &kfv, f)?;
            Ok(counit.compose(&kf)?)
        };
        let mut round = true;
        for g in &homs_left {
            let f = forward(g)?;
            let g_back = backward(&f)?;
            if &g_back != g {
                round = false;
            }
        }
        for f in &homs_right {
            let g = backward(f)?;
            let f_fwd = forward(&g)?;
            if &f_fwd != f {
                round = false;
            }
        }
        report.push(format!("cohom-round-trip-v{vi}"), round, None);
    }
    // naturality squares on morphisms between pool comodules
    let mut checked = 0usize;
    let mut natural = true;
    'outer: for v in pool {
        for w in pool {
            let morphisms = comodule_hom_space(v, w)?;
            for s in morphisms.iter().take(2) {
                let fv = cotensor(a.carrier().view(), v.view())?;
                let fw = cotensor(a.carrier().view(), w.view())?;
                let fs = cotensor_lift(&fv, &fw, s)?;
                let target = cotensor(a.carrier().view(), km.comodule.view())?;
                let unit = cohom_unit(a, m, &km, &target)?;
                for g in comodule_hom_space(&km.comodule, v)? {
                    // forward(s ∘ g) = (A □ s) ∘ forward(g)
                    let lhs = cotensor_lift(&target, &fw, &s.compose(&g)?)?.compose(&unit)?;
                    let rhs = fs.compose(&cotensor_lift(&target, &fv, &g)?)?.compose(&unit)?;
                    if lhs != rhs {
                        natural = false;
                    }
                    checked += 1;
                    if checked >= 10 {
                        break 'outer;
                    }
                }
            }
        }
    }
    report.push("cohom-naturality", natural, Some(format!("{checked} squares")));
    if !report.all_pass() {
        return Err(HopfError::Certification(report.summary()));
    }
    Ok(report)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Minimal polynomial of a square map, monic, coefficients low to high.
pub fn minimal_polynomial(m: &LinearMap) -> Result<Vec<Rational>, HopfError> {
    let field = m.field();
    let n = m.rows();
    let mut power = LinearMap::identity(n, field);
    let mut stack: Vec<Vec<Rational>> = Vec::new();
    for _ in 0..=n {
        let candidate = vec_of(&power);
        let basis = LinearMap::from_cols(n * n, field, &stack);
        if !stack.is_empty() {
            if let Some(sol) = exact_kernel::solve(&basis, &candidate)? {
                let mut coeffs: Vec<Rational> =
                    sol.entries().iter().map(|c| field.neg(c)).collect();
                coeffs.push(field.one());
                return Ok(coeffs);
            }
        }
        stack.push(candidate.entries().to_vec());
        power = m.compose(&power)?;
    }
    Err(HopfError::Shape("minimal polynomial not found".into()))
}

/// All rational roots of a polynomial, with multiplicity, via deflation.
/// Returns `Ok(None)` when the polynomial does not split over the
/// rationals; errs when the coefficients are too large to factor.
pub fn rational_roots(coeffs: &[Rational]) -> Result<Option<Vec<Rational>>, HopfError> {
    let mut poly: Vec<Rational> = coeffs.to_vec();
    while poly.last().map(|c| c.is_zero()).unwrap_or(false) {
        poly.pop();
    }
    if poly.len() <= 1 {
        return Ok(Some(Vec::new()));
    }
    let mut roots = Vec::new();
    loop {
        if poly.len() == 1 {
            return Ok(Some(roots));
        }
        if poly.len() == 2 {
            // linear: c0 + c1 x
            let root = -(poly[0].clone() / poly[1].clone());
            roots.push(root);
            return Ok(Some(roots));
        }
        // clear denominators to integer coefficients
        let mut denom_lcm = BigInt::one();
        for c in &poly {
            denom_lcm = num_integer::Integer::lcm(&denom_lcm, c.denom());
        }
        let ints: Vec<BigInt> = poly
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        // strip zero roots
        if ints[0].is_zero() {
            roots.push(Rational::zero());
            poly.remove(0);
            continue;
        }
        let to_u64 = |b: &BigInt| -> Result<u64, HopfError> {
            b.abs().try_into().map_err(|_| {
                HopfError::UnsupportedField(
                    "polynomial coefficients too large for rational root search".into(),
                )
            })
        };
        let a0 = to_u64(&ints[0])?;
        let lead = to_u64(ints.last().unwrap())?;
        let mut found = None;
        'search: for p in divisors(a0) {
            for q in divisors(lead) {
                for sign in [1i64, -1] {
                    let candidate = Rational::new(
                        BigInt::from(sign) * BigInt::from(p),
                        BigInt::from(q),
                    );
                    let mut value = Rational::zero();
                    for c in poly.iter().rev() {
                        value = value * &candidate + c;
                    }
                    if value.is_zero() {
                        found = Some(candidate);
                        break 'search;
                    }
                }
            }
        }
        let Some(root) = found else {
            return Ok(None);
        };
        // synthetic division by (x - root)
        let mut quotient = vec![Rational::zero(); poly.len() - 1];
        let mut carry = Rational::zero();
        for i in (1..poly.len()).rev() {
            let q = poly[i].clone() + carry;
            carry = q.clone() * &root;
            quotient[i - 1] = q;
        }
        roots.push(root);
        poly = quotient;
    }
}

/// Number of simple factors of a semisimple algebra whose center splits
/// over the rationals: the center dimension, after verifying splitness by
/// diagonalizability of every central multiplication operator.
pub fn count_simple_factors(alg: &AlgebraFD) -> Result<usize, HopfError> {
    let n = alg.dim();
    let field = alg.field();
    if field.characteristic() != 0 {
        return Err(HopfError::UnsupportedField(
            "simple-factor count requires characteristic 0".into(),
        ));
    }
    let mut conditions: Option<LinearMap> = None;
    for i in 0..n {
        let left = alg.left_mul(i);
        let right = LinearMap::from_fn(n, n, field, |k, j| alg.mul().at(k, j * n + i).clone());
        let diff = left.sub(&right)?;
        conditions = Some(match conditions {
            None => diff,
            Some(c) => c.vstack(&diff)?,
        });
    }
    let center = exact_kernel::kernel_basis(&conditions.expect("nonzero dimension"));
    let incl = center.inclusion();
    for z in center.basis() {
        // multiplication by z restricted to the center
        let mut on_ambient = LinearMap::zero(n, n, field);
        for (i, c) in z.iter().enumerate() {
            if !c.is_zero() {
                on_ambient = on_ambient.add(&alg.left_mul(i).scale(c))?;
            }
        }
        let restricted = center
            .corestrict(&on_ambient.compose(&incl)?)
            .map_err(|_| HopfError::Shape("center not closed under multiplication".into()))?;
        let poly = minimal_polynomial(&restricted)?;
        let roots = rational_roots(&poly)?.ok_or_else(|| {
            HopfError::UnsupportedField("center does not split over the rationals".into())
        })?;
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != poly.len() - 1 {
            return Err(HopfError::UnsupportedField(
                "central element is not semisimple".into(),
            ));
        }
    }
    Ok(center.dim())
}

/// Packages a basis of endomorphisms as an abstract algebra under
/// composition; `opposite` reverses the multiplication.
pub fn endomorphism_algebra(
    basis: &[LinearMap],
    field: FieldSpec,
    opposite: bool,
) -> Result<AlgebraFD, HopfError> {
    let k = basis.len();
    if k == 0 {
        return Err(HopfError::Shape("empty endomorphism basis".into()));
    }
    let dim = basis[0].rows();
    let mut mul = LinearMap::zero(k, k * k, field);
    for i in 0..k {
        for j in 0..k {
            let prod = if opposite {
                basis[j].compose(&basis[i])?
            } else {
                basis[i].compose(&basis[j])?
            };
            let coords = coords_in_map_basis(basis, &prod)?;
            for (t, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    mul.set(t, i * k + j, c.clone());
                }
            }
        }
    }
    let unit_coords = coords_in_map_basis(basis, &LinearMap::identity(dim, field))?;
    let unit = LinearMap::new(k, 1, field, unit_coords)?;
    AlgebraFD::new(k, mul, unit)
}

/// Semisimplicity of the monad `A □ -`: checks that the monad preserves the
/// canonical covers of the pool (right exactness witness), then tests the
/// opposite endomorphism algebra of the free module on the projective
/// generator of the comodule category.
pub fn is_semisimple_trimodule_algebra(
    a: &Arc<TrimoduleAlgebraFD>,
    pool: &[LeftComoduleFD],
) -> Result<bool, HopfError> {
    let base = a.base().clone();
    let field = base.field();
    if field.characteristic() != 0 {
        return Err(HopfError::UnsupportedField(
            "semisimplicity test requires characteristic 0".into(),
        ));
    }
    for (i, m) in pool.iter().enumerate() {
        let (source, cover) = canonical_cover(m);
        if exact_kernel::rank(&cover) != m.dim() {
            return Err(HopfError::Precondition(format!(
                "canonical cover of pool comodule {i} is not surjective"
            )));
        }
        let src_cot = cotensor(a.carrier().view(), source.view())?;
        let dst_cot = cotensor(a.carrier().view(), m.view())?;
        let lifted = cotensor_lift(&src_cot, &dst_cot, &cover)?;
        if exact_kernel::rank(&lifted) != dst_cot.dim() {
            return Err(HopfError::Precondition(format!(
                "A □ - does not preserve the cokernel of the cover of pool comodule {i}"
            )));
        }
    }
    let generator = coregular_comodule(base);
    let free = free_module(a, &generator)?;
    let endos = module_hom_space(&free, &free)?;
    let e_op = endomorphism_algebra(&endos, field, true)?;
    is_semisimple_algebra(&e_op)
}

/// Endomorphisms of the free contramodule on the regular comodule, as maps
/// commuting with the comonad coaction.
fn contramodule_endos(a: &Arc<TrimoduleAlgebraFD>) -> Result<Vec<LinearMap>, HopfError> {
    let base = a.base().clone();
    let field = base.field();
    let regular = LeftComoduleFD::regular(base);
    let free = free_contramodule(a, &regular)?;
    let km = cohom(a, &regular)?;
    let kkm = cohom(a, &km.comodule)?;
    let colinear = comodule_hom_space(&free.carrier, &free.carrier)?;
    if colinear.is_empty() {
        return Ok(Vec::new());
    }
    let mut columns = Vec::with_capacity(colinear.len());
    for g in &colinear {
        let kg = cohom_map(a, &km, &kkm, g)?;
        let defect = free
            .coact
            .compose(g)?
            .sub(&kg.compose(&free.coact)?)?;
        columns.push(vec_of(&defect).entries().to_vec());
    }
    let condition = LinearMap::from_cols(columns[0].len(), field, &columns);
    let coeffs = exact_kernel::kernel_basis(&condition);
    let mut out = Vec::new();
    for coeff in coeffs.basis() {
        let mut acc = LinearMap::zero(free.carrier.dim(), free.carrier.dim(), field);
        for (c, g) in coeff.iter().zip(&colinear) {
            if !c.is_zero() {
                acc = acc.add(&g.scale(c))?;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Counts simple objects on the module side and on the contramodule side of
/// a semisimple trimodule algebra; the two counts agree in that case.
pub fn contra_vs_modules_count(
    a: &Arc<TrimoduleAlgebraFD>,
    pool: &[LeftComoduleFD],
) -> Result<(usize, usize), HopfError> {
    if !is_semisimple_trimodule_algebra(a, pool)? {
        return Err(HopfError::Precondition(
            "module/contramodule counting requires a semisimple algebra".into(),
        ));
    }
    let base = a.base().clone();
    let field = base.field();
    let generator = coregular_comodule(base.clone());
    let free = free_module(a, &generator)?;
    let endos = module_hom_space(&free, &free)?;
    let module_side = count_simple_factors(&endomorphism_algebra(&endos, field, true)?)?;
    let contra_endos = contramodule_endos(a)?;
    let contra_side = count_simple_factors(&endomorphism_algebra(&contra_endos, field, true)?)?;
    Ok((module_side, contra_side))
}

/// Injectivity of the carrier as a right comodule, via the splitting of the
/// right coaction: the coflatness witness used before cohom computations.
pub fn right_injective_carrier(a: &TrimoduleAlgebraFD) -> Result<bool, HopfError> {
    let base = a.base();
    let field = base.field();
    let n = base.dim();
    let d = a.dim();
    let id_d = LinearMap::identity(d, field);
    let id_b = base.id();
    let cofree_coaction = id_d.tensor(base.comul())?;
    let retraction = crate::util::map_space_matrix(d, d * n, field, |r| {
        r.compose(a.carrier().rho()).unwrap()
    });
    let colinear = crate::util::map_space_matrix(d, d * n, field, |r| {
        r.tensor(&id_b)
            .unwrap()
            .compose(&cofree_coaction)
            .unwrap()
            .sub(&a.carrier().rho().compose(r).unwrap())
            .unwrap()
    });
    let stacked = retraction.vstack(&colinear)?;
    let rhs = vec_of(&id_d).vstack(&LinearMap::zero(colinear.rows(), 1, field))?;
    Ok(exact_kernel::solve(&stacked, &rhs)?.is_some())
}

/// Membership data for subspace-based checks in tests.
pub fn subspace_from_maps(maps: &[LinearMap]) -> Result<Subspace, HopfError> {
    if maps.is_empty() {
        return Err(HopfError::Shape("empty map list".into()));
    }
    let field = maps[0].field();
    let dim = maps[0].rows() * maps[0].cols();
    let vectors = maps
        .iter()
        .map(|m| m.entries().to_vec())
        .collect::<Vec<_>>();
    Ok(Subspace::from_span(dim, field, vectors)?)
}
