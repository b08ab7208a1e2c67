use std::sync::Arc;

use exact_kernel::{solve, FieldSpec, LinearMap, Rational};
use num_traits::Zero;

use crate::bialgebra::{factor_through, monoid_bialgebra, BialgebraFD, MonoidTable};
use crate::comodule::{
    comodule_hom_space, cotensor, tensor_comodules, BicomoduleFD, CotensorSpace, LeftComoduleFD,
};
use crate::report::Report;
use crate::trimodule::{
    canonical_triple, embed_nested_left, embed_nested_right, invert, trimodule_cotensor,
    validate_trimodule, HopfTrimoduleFD,
};
use crate::util::vec_of;
use crate::HopfError;

/// An algebra object in the monoidal category of Hopf trimodules under the
/// cotensor product: a carrier trimodule `A`, a multiplication on the
/// explicit subspace `A □ A`, and a unit out of the base bialgebra.
#[derive(Clone, Debug)]
pub struct TrimoduleAlgebraFD {
    carrier: HopfTrimoduleFD,
    square: CotensorSpace,
    mul: LinearMap,
    unit: LinearMap,
}

impl TrimoduleAlgebraFD {
    pub fn new(
        carrier: HopfTrimoduleFD,
        mul: LinearMap,
        unit: LinearMap,
    ) -> Result<Self, HopfError> {
        let square = cotensor(carrier.view(), carrier.view())?;
        if mul.rows() != carrier.dim() || mul.cols() != square.dim() {
            return Err(HopfError::Shape(format!(
                "mul must be {}x{}, got {}x{}",
                carrier.dim(),
                square.dim(),
                mul.rows(),
                mul.cols()
            )));
        }
        let n = carrier.base().dim();
        if unit.rows() != carrier.dim() || unit.cols() != n {
            return Err(HopfError::Shape(format!(
                "unit must be {}x{}, got {}x{}",
                carrier.dim(),
                n,
                unit.rows(),
                unit.cols()
            )));
        }
        Ok(TrimoduleAlgebraFD {
            carrier,
            square,
            mul,
            unit,
        })
    }

    /// The monoidal unit `B` as an algebra over itself: multiplication is
    /// the counit unitor on `B □ B`, the unit is the identity.
    pub fn unit_algebra(base: Arc<BialgebraFD>) -> Result<Self, HopfError> {
        let carrier = HopfTrimoduleFD::regular(base.clone());
        let square = cotensor(carrier.view(), carrier.view())?;
        let id_b = base.id();
        let mul = base.counit().tensor(&id_b)?.compose(&square.inclusion())?;
        Self::new(carrier, mul, id_b)
    }

    pub fn carrier(&self) -> &HopfTrimoduleFD {
        &self.carrier
    }

    pub fn base(&self) -> &Arc<BialgebraFD> {
        self.carrier.base()
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn square(&self) -> &CotensorSpace {
        &self.square
    }

    pub fn mul(&self) -> &LinearMap {
        &self.mul
    }

    pub fn unit(&self) -> &LinearMap {
        &self.unit
    }
}

/// Provenance of a free module: its generator and the defining cotensor.
#[derive(Clone, Debug)]
pub struct FreeModuleData {
    pub generator: LeftComoduleFD,
    pub presentation: CotensorSpace,
}

/// A left module over a trimodule algebra: a comodule `M` with an action
/// `A □ M → M` given on the explicit cotensor subspace.
#[derive(Clone, Debug)]
pub struct TrimoduleModuleFD {
    algebra: Arc<TrimoduleAlgebraFD>,
    comodule: LeftComoduleFD,
    act_domain: CotensorSpace,
    act: LinearMap,
    free_data: Option<FreeModuleData>,
}

impl TrimoduleModuleFD {
    pub fn new(
        algebra: Arc<TrimoduleAlgebraFD>,
        comodule: LeftComoduleFD,
        act: LinearMap,
    ) -> Result<Self, HopfError> {
        let act_domain = cotensor(algebra.carrier.view(), comodule.view())?;
        if act.rows() != comodule.dim() || act.cols() != act_domain.dim() {
            return Err(HopfError::Shape(format!(
                "module action must be {}x{}, got {}x{}",
                comodule.dim(),
                act_domain.dim(),
                act.rows(),
                act.cols()
            )));
        }
        Ok(TrimoduleModuleFD {
            algebra,
            comodule,
            act_domain,
            act,
            free_data: None,
        })
    }

    pub fn algebra(&self) -> &Arc<TrimoduleAlgebraFD> {
        &self.algebra
    }

    pub fn comodule(&self) -> &LeftComoduleFD {
        &self.comodule
    }

    pub fn dim(&self) -> usize {
        self.comodule.dim()
    }

    pub fn act_domain(&self) -> &CotensorSpace {
        &self.act_domain
    }

    pub fn act(&self) -> &LinearMap {
        &self.act
    }

    pub fn free_data(&self) -> Option<&FreeModuleData> {
        self.free_data.as_ref()
    }
}

/// Corestricts `id_A ⊗ f` through the cotensor subspaces: the functorial
/// action of `A □ -` on a comodule morphism `f`.
pub fn cotensor_lift(
    src: &CotensorSpace,
    dst: &CotensorSpace,
    f: &LinearMap,
) -> Result<LinearMap, HopfError> {
    let field = f.field();
    let id_a = LinearMap::identity(src.left_dim(), field);
    let raw = id_a.tensor(f)?.compose(&src.inclusion())?;
    dst.subspace()
        .corestrict(&raw)
        .map_err(|_| HopfError::Corestriction("lifted morphism escapes the cotensor".into()))
}

/// The two associativity routes on the canonical triple subspace of
/// `A ⊗ A ⊗ A`: `mul ∘ (mul □ id)` against `mul ∘ (id □ mul)`.
fn algebra_assoc_sides(a: &TrimoduleAlgebraFD) -> Result<(LinearMap, LinearMap), HopfError> {
    let field = a.base().field();
    let id_a = LinearMap::identity(a.dim(), field);
    let square_bicom = a.square.to_bicomodule()?;
    let left_nested = cotensor(square_bicom.view(), a.carrier.view())?;
    let right_nested = cotensor(a.carrier.view(), square_bicom.view())?;
    let (triple, change_left) = canonical_triple(&embed_nested_left(&left_nested, &a.square))?;
    let change_right = triple.corestrict(&embed_nested_right(&right_nested, &a.square))?;
    let raw_left = a.mul.tensor(&id_a)?.compose(&left_nested.inclusion())?;
    let collapsed_left = a
        .square
        .subspace()
        .corestrict(&raw_left)
        .map_err(|_| HopfError::Corestriction("mul □ id escapes the cotensor subspace".into()))?;
    let side_left = a
        .mul
        .compose(&collapsed_left)?
        .compose(&invert(&change_left)?)?;
    let raw_right = id_a.tensor(&a.mul)?.compose(&right_nested.inclusion())?;
    let collapsed_right = a
        .square
        .subspace()
        .corestrict(&raw_right)
        .map_err(|_| HopfError::Corestriction("id □ mul escapes the cotensor subspace".into()))?;
    let side_right = a
        .mul
        .compose(&collapsed_right)?
        .compose(&invert(&change_right)?)?;
    Ok((side_left, side_right))
}

fn trimodule_morphism_checks(
    report: &mut Report,
    prefix: &str,
    f: &LinearMap,
    src: (&LinearMap, &LinearMap, &LinearMap),
    dst: (&LinearMap, &LinearMap, &LinearMap),
    id_b: &LinearMap,
) {
    let (src_lambda, src_rho, src_act) = src;
    let (dst_lambda, dst_rho, dst_act) = dst;
    let lhs = id_b.tensor(f).unwrap().compose(src_lambda).unwrap();
    let rhs = dst_lambda.compose(f).unwrap();
    report.push_eq(format!("{prefix}-left-colinear"), &lhs, &rhs);
    let lhs = f.tensor(id_b).unwrap().compose(src_rho).unwrap();
    let rhs = dst_rho.compose(f).unwrap();
    report.push_eq(format!("{prefix}-right-colinear"), &lhs, &rhs);
    let lhs = f.compose(src_act).unwrap();
    let rhs = dst_act.compose(&id_b.tensor(f).unwrap()).unwrap();
    report.push_eq(format!("{prefix}-module-morphism"), &lhs, &rhs);
}

/// Named checks for a trimodule algebra: mul and unit are trimodule
/// morphisms, associativity on the triple cotensor subspace, and unitality
/// against both counit unitors.
pub fn validate_trimodule_algebra(a: &TrimoduleAlgebraFD) -> Report {
    let mut report = Report::new();
    let base = a.base();
    let field = base.field();
    let id_b = base.id();
    let id_a = LinearMap::identity(a.dim(), field);
    report.merge("carrier-", validate_trimodule(&a.carrier));
    match trimodule_cotensor(&a.carrier, &a.carrier) {
        Ok(sq) => {
            trimodule_morphism_checks(
                &mut report,
                "mul",
                &a.mul,
                (
                    sq.trimodule.lambda(),
                    sq.trimodule.rho(),
                    sq.trimodule.action(),
                ),
                (a.carrier.lambda(), a.carrier.rho(), a.carrier.action()),
                &id_b,
            );
        }
        Err(e) => report.push("mul-trimodule-morphism", false, Some(e.to_string())),
    }
    let regular = HopfTrimoduleFD::regular(base.clone());
    trimodule_morphism_checks(
        &mut report,
        "unit",
        &a.unit,
        (regular.lambda(), regular.rho(), regular.action()),
        (a.carrier.lambda(), a.carrier.rho(), a.carrier.action()),
        &id_b,
    );
    match algebra_assoc_sides(a) {
        Ok((left, right)) => report.push_eq("assoc", &left, &right),
        Err(e) => report.push("assoc", false, Some(e.to_string())),
    }
    match (|| -> Result<(LinearMap, LinearMap), HopfError> {
        let b_reg = BicomoduleFD::regular(base.clone());
        let ba = cotensor(b_reg.view(), a.carrier.view())?;
        let raw = a.unit.tensor(&id_a)?.compose(&ba.inclusion())?;
        let into_square = a.square.subspace().corestrict(&raw).map_err(|_| {
            HopfError::Corestriction("unit □ id escapes the cotensor subspace".into())
        })?;
        let lhs = a.mul.compose(&into_square)?;
        let rhs = base.counit().tensor(&id_a)?.compose(&ba.inclusion())?;
        Ok((lhs, rhs))
    })() {
        Ok((lhs, rhs)) => report.push_eq("unit-left", &lhs, &rhs),
        Err(e) => report.push("unit-left", false, Some(e.to_string())),
    }
    match (|| -> Result<(LinearMap, LinearMap), HopfError> {
        let b_reg = BicomoduleFD::regular(base.clone());
        let ab = cotensor(a.carrier.view(), b_reg.view())?;
        let raw = id_a.tensor(&a.unit)?.compose(&ab.inclusion())?;
        let into_square = a.square.subspace().corestrict(&raw).map_err(|_| {
            HopfError::Corestriction("id □ unit escapes the cotensor subspace".into())
        })?;
        let lhs = a.mul.compose(&into_square)?;
        let rhs = id_a.tensor(base.counit())?.compose(&ab.inclusion())?;
        Ok((lhs, rhs))
    })() {
        Ok((lhs, rhs)) => report.push_eq("unit-right", &lhs, &rhs),
        Err(e) => report.push("unit-right", false, Some(e.to_string())),
    }
    report
}

/// The Hopf trimodule algebra `B • B`: the space `B ⊗ B` with coactions
/// `b⊗c ↦ b_(1)⊗b_(2)⊗c` and `b⊗c ↦ b⊗c_(1)⊗c_(2)`, action
/// `x⊗b⊗c ↦ x_(1)b ⊗ x_(2)c`, unit `Δ`, and multiplication
/// `(b⊗c) □ (x⊗y) ↦ b·ε(c)·ε(x) ⊗ y`.
pub fn b_dot_b(base: Arc<BialgebraFD>) -> Result<TrimoduleAlgebraFD, HopfError> {
    let n = base.dim();
    let field = base.field();
    let id_b = base.id();
    let lambda = base.comul().tensor(&id_b)?;
    let rho = id_b.tensor(base.comul())?;
    let action = {
        let spread = base.comul().tensor(&id_b)?.tensor(&id_b)?;
        let swap = crate::util::swap_adjacent_legs(&[n, n, n, n], 1, field);
        base.mul()
            .tensor(base.mul())?
            .compose(&swap)?
            .compose(&spread)?
    };
    let carrier =
        HopfTrimoduleFD::new(BicomoduleFD::new(base.clone(), n * n, lambda, rho)?, action)?;
    let square = cotensor(carrier.view(), carrier.view())?;
    let mul_raw = id_b
        .tensor(base.counit())?
        .tensor(&base.counit().tensor(&id_b)?)?;
    let mul = mul_raw.compose(&square.inclusion())?;
    let unit = base.comul().clone();
    TrimoduleAlgebraFD::new(carrier, mul, unit)
}

/// The free module `A □ M` with action `mul □ M` transported through the
/// associativity identification.
pub fn free_module(
    algebra: &Arc<TrimoduleAlgebraFD>,
    m: &LeftComoduleFD,
) -> Result<TrimoduleModuleFD, HopfError> {
    let a = algebra.as_ref();
    let field = a.base().field();
    let presentation = cotensor(a.carrier.view(), m.view())?;
    let comodule = presentation.to_left_comodule()?;
    let act_domain = cotensor(a.carrier.view(), comodule.view())?;
    // A □ (A □ M) embeds into A ⊗ A ⊗ M; collapse the first two legs with mul
    let embedded = embed_nested_right(&act_domain, &presentation);
    let id_m = LinearMap::identity(m.dim(), field);
    let blocked = crate::util::corestrict_block_right(a.square.subspace(), &embedded, m.dim())
        .ok_or_else(|| {
            HopfError::Corestriction("free-module action does not factor through A □ A".into())
        })?;
    let collapsed = a.mul.tensor(&id_m)?.compose(&blocked)?;
    let act = presentation.subspace().corestrict(&collapsed).map_err(|_| {
        HopfError::Corestriction("free-module action escapes the cotensor subspace".into())
    })?;
    Ok(TrimoduleModuleFD {
        algebra: algebra.clone(),
        comodule,
        act_domain,
        act,
        free_data: Some(FreeModuleData {
            generator: m.clone(),
            presentation,
        }),
    })
}

/// Module-law checks: the action is a comodule morphism, unital against the
/// counit unitor, and associative on the triple subspace.
pub fn validate_module(m: &TrimoduleModuleFD) -> Report {
    let mut report = Report::new();
    let a = m.algebra.as_ref();
    let base = a.base();
    let field = base.field();
    let id_b = base.id();
    let id_a = LinearMap::identity(a.dim(), field);
    let src = m
        .act_domain
        .to_left_comodule()
        .expect("cotensor with a trimodule on the left has a left coaction");
    let lhs = m.comodule.coaction().compose(&m.act).unwrap();
    let rhs = id_b
        .tensor(&m.act)
        .unwrap()
        .compose(src.coaction())
        .unwrap();
    report.push_eq("act-colinear", &lhs, &rhs);
    match (|| -> Result<(LinearMap, LinearMap), HopfError> {
        let b_reg = BicomoduleFD::regular(base.clone());
        let bm = cotensor(b_reg.view(), m.comodule.view())?;
        let id_w = LinearMap::identity(m.dim(), field);
        let raw = a.unit.tensor(&id_w)?.compose(&bm.inclusion())?;
        let into_domain = m
            .act_domain
            .subspace()
            .corestrict(&raw)
            .map_err(|_| HopfError::Corestriction("unit □ id escapes the action domain".into()))?;
        let lhs = m.act.compose(&into_domain)?;
        let rhs = base.counit().tensor(&id_w)?.compose(&bm.inclusion())?;
        Ok((lhs, rhs))
    })() {
        Ok((lhs, rhs)) => report.push_eq("act-unit", &lhs, &rhs),
        Err(e) => report.push("act-unit", false, Some(e.to_string())),
    }
    match (|| -> Result<(LinearMap, LinearMap), HopfError> {
        let square_bicom = a.square.to_bicomodule()?;
        let left_nested = cotensor(square_bicom.view(), m.comodule.view())?;
        let right_nested = cotensor(a.carrier.view(), m.act_domain.to_left_comodule()?.view())?;
        let (triple, change_left) = canonical_triple(&embed_nested_left(&left_nested, &a.square))?;
        let change_right = triple.corestrict(&embed_nested_right(&right_nested, &m.act_domain))?;
        let id_w = LinearMap::identity(m.dim(), field);
        let raw_left = a.mul.tensor(&id_w)?.compose(&left_nested.inclusion())?;
        let collapsed_left = m
            .act_domain
            .subspace()
            .corestrict(&raw_left)
            .map_err(|_| HopfError::Corestriction("mul □ id escapes the action domain".into()))?;
        let side_left = m
            .act
            .compose(&collapsed_left)?
            .compose(&invert(&change_left)?)?;
        let raw_right = id_a.tensor(&m.act)?.compose(&right_nested.inclusion())?;
        let collapsed_right = m
            .act_domain
            .subspace()
            .corestrict(&raw_right)
            .map_err(|_| HopfError::Corestriction("id □ act escapes the action domain".into()))?;
        let side_right = m
            .act
            .compose(&collapsed_right)?
            .compose(&invert(&change_right)?)?;
        Ok((side_left, side_right))
    })() {
        Ok((lhs, rhs)) => report.push_eq("act-assoc", &lhs, &rhs),
        Err(e) => report.push("act-assoc", false, Some(e.to_string())),
    }
    report
}

/// `V ▷ (A □ M) = A □ (V ⊗ M)`: the comodule action on free modules.
pub fn act_on_free(
    v: &LeftComoduleFD,
    free: &TrimoduleModuleFD,
) -> Result<TrimoduleModuleFD, HopfError> {
    let data = free.free_data.as_ref().ok_or_else(|| {
        HopfError::Precondition("act_on_free requires a free module with its generator".into())
    })?;
    free_module(&free.algebra, &tensor_comodules(v, &data.generator)?)
}

/// Basis of module morphisms between modules over the same algebra:
/// comodule morphisms intertwining the actions.
pub fn module_hom_space(
    m1: &TrimoduleModuleFD,
    m2: &TrimoduleModuleFD,
) -> Result<Vec<LinearMap>, HopfError> {
    let field = m1.comodule.field();
    let colinear = comodule_hom_space(&m1.comodule, &m2.comodule)?;
    if colinear.is_empty() {
        return Ok(Vec::new());
    }
    // impose the intertwining condition inside the colinear subspace
    let mut columns = Vec::with_capacity(colinear.len());
    for g in &colinear {
        let lifted = cotensor_lift(&m1.act_domain, &m2.act_domain, g)?;
        let defect = g.compose(&m1.act)?.sub(&m2.act.compose(&lifted)?)?;
        columns.push(vec_of(&defect).entries().to_vec());
    }
    let condition = LinearMap::from_cols(columns[0].len(), field, &columns);
    let coeffs = exact_kernel::kernel_basis(&condition);
    let mut out = Vec::new();
    for coeff in coeffs.basis() {
        let mut acc = LinearMap::zero(m2.dim(), m1.dim(), field);
        for (c, g) in coeff.iter().zip(&colinear) {
            if !c.is_zero() {
                acc = acc.add(&g.scale(c))?;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// The monad unit `η_M : M → A □ M` in subspace coordinates:
/// the corestriction of `(unit ⊗ M) ∘ λ`.
pub fn monad_unit(
    algebra: &Arc<TrimoduleAlgebraFD>,
    m: &LeftComoduleFD,
    target: &CotensorSpace,
) -> Result<LinearMap, HopfError> {
    let id_m = LinearMap::identity(m.dim(), m.field());
    let raw = algebra.unit().tensor(&id_m)?.compose(m.coaction())?;
    target
        .subspace()
        .corestrict(&raw)
        .map_err(|_| HopfError::Corestriction("monad unit escapes the cotensor subspace".into()))
}

/// The bijection data of the `J` equivalence for `B • B`: free-module
/// morphisms `(B•B) □ M → (B•B) □ P` against plain linear maps `M → P`,
/// realized as the composite of three isomorphisms: precompose with the
/// unit, postcompose with `B ⊗ ε □ P`, postcompose with `ε ⊗ P`.
pub struct JEquivalence {
    pub algebra: Arc<TrimoduleAlgebraFD>,
    pub free_m: TrimoduleModuleFD,
    pub free_p: TrimoduleModuleFD,
    m: LeftComoduleFD,
    unit_m: LinearMap,
    squeeze_p: LinearMap,
    squeeze_p_inv: LinearMap,
}

pub fn j_equivalence(
    base: Arc<BialgebraFD>,
    m: &LeftComoduleFD,
    p: &LeftComoduleFD,
) -> Result<JEquivalence, HopfError> {
    let algebra = Arc::new(b_dot_b(base.clone())?);
    let free_m = free_module(&algebra, m)?;
    let free_p = free_module(&algebra, p)?;
    let n = base.dim();
    let field = base.field();
    let pres_m = &free_m.free_data.as_ref().unwrap().presentation;
    let unit_m = monad_unit(&algebra, m, pres_m)?;
    // (B ⊗ ε □ P): S_{A,P} ⊆ B⊗B⊗P → B⊗P, an isomorphism
    let id_b = base.id();
    let id_p = LinearMap::identity(p.dim(), field);
    let pres_p = &free_p.free_data.as_ref().unwrap().presentation;
    let squeeze_raw = id_b.tensor(base.counit())?.tensor(&id_p)?;
    let squeeze_p = squeeze_raw.compose(&pres_p.inclusion())?;
    if squeeze_p.rows() != n * p.dim() || squeeze_p.cols() != squeeze_p.rows() {
        return Err(HopfError::Shape(format!(
            "B ⊗ ε □ P is {}x{}, expected square of size {}",
            squeeze_p.rows(),
            squeeze_p.cols(),
            n * p.dim()
        )));
    }
    let squeeze_p_inv = invert(&squeeze_p)?;
    Ok(JEquivalence {
        algebra,
        free_m,
        free_p,
        m: m.clone(),
        unit_m,
        squeeze_p,
        squeeze_p_inv,
    })
}

impl JEquivalence {
    /// `J(σ) = (ε ⊗ P) ∘ (B ⊗ ε □ P) ∘ σ ∘ η_M`.
    pub fn apply(&self, sigma: &LinearMap) -> Result<LinearMap, HopfError> {
        let base = self.algebra.base();
        let p_dim = self.free_p.dim() / base.dim();
        let id_p = LinearMap::identity(p_dim, base.field());
        let counit_front = base.counit().tensor(&id_p)?;
        Ok(counit_front
            .compose(&self.squeeze_p)?
            .compose(sigma)?
            .compose(&self.unit_m)?)
    }

    /// The inverse bijection: a plain map `g: M → P` induces the free-module
    /// morphism `∇ ∘ T(f)` where `f = (B ⊗ ε □ P)^{-1} ∘ (B ⊗ g) ∘ λ_M`.
    pub fn unapply(&self, g: &LinearMap) -> Result<LinearMap, HopfError> {
        let base = self.algebra.base();
        let id_b = base.id();
        let cofree_lift = id_b.tensor(g)?.compose(self.m.coaction())?;
        let f = self.squeeze_p_inv.compose(&cofree_lift)?;
        let pres_m = &self.free_m.free_data.as_ref().unwrap().presentation;
        let lifted = cotensor_lift(pres_m, &self.free_p.act_domain, &f)?;
        Ok(self.free_p.act().compose(&lifted)?)
    }
}

/// Reconstructs the trimodule algebra of a rank-one pointed module category
/// determined by a multiplicative {0,1}-character `eps` on a finite monoid.
pub fn reconstruct_pointed(
    table: &MonoidTable,
    eps: &[u8],
    field: FieldSpec,
) -> Result<TrimoduleAlgebraFD, HopfError> {
    let order = table.order();
    if eps.len() != order {
        return Err(HopfError::Shape(format!(
            "eps has {} values for a monoid of order {order}",
            eps.len()
        )));
    }
    if eps.iter().any(|&v| v > 1) {
        return Err(HopfError::Precondition("eps values must be 0 or 1".into()));
    }
    let e = table.identity_index()?;
    if eps[e] != 1 {
        return Err(HopfError::Precondition("eps(identity) must be 1".into()));
    }
    for x in 0..order {
        for y in 0..order {
            if eps[table.table[x][y]] != eps[x] * eps[y] {
                return Err(HopfError::Precondition(format!(
                    "eps is not multiplicative at ({x},{y})"
                )));
            }
        }
    }
    let base = Arc::new(monoid_bialgebra(table, field)?);
    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|w| (0..order).map(move |z| (w, z)))
        .filter(|&(w, z)| eps[w] == 1 && eps[z] == 1)
        .collect();
    let dim = pairs.len();
    let n = base.dim();
    let index_of = |w: usize, z: usize| pairs.iter().position(|&pair| pair == (w, z));
    let mut lambda = LinearMap::zero(n * dim, dim, field);
    let mut rho = LinearMap::zero(dim * n, dim, field);
    for (i, &(w, z)) in pairs.iter().enumerate() {
        lambda.set(w * dim + i, i, field.one());
        rho.set(i * n + z, i, field.one());
    }
    let mut action = LinearMap::zero(dim, n * dim, field);
    for u in 0..order {
        if eps[u] == 0 {
            continue;
        }
        for (i, &(w, z)) in pairs.iter().enumerate() {
            let target = index_of(table.table[u][w], table.table[u][z])
                .expect("eps-multiplicativity keeps the orbit in the basis");
            action.set(target, u * dim + i, field.one());
        }
    }
    let carrier = HopfTrimoduleFD::new(BicomoduleFD::new(base.clone(), dim, lambda, rho)?, action)?;
    let square = cotensor(carrier.view(), carrier.view())?;
    // (w,z) ⊗ (x,z') ↦ δ_{z,x} (w,z') on the ambient, restricted to A □ A
    let mut mul_raw = LinearMap::zero(dim, dim * dim, field);
    for (i, &(w, z)) in pairs.iter().enumerate() {
        for (j, &(x, zp)) in pairs.iter().enumerate() {
            if z == x {
                let target = index_of(w, zp).expect("pairs closed under splicing");
                mul_raw.set(target, i * dim + j, field.one());
            }
        }
    }
    let mul = mul_raw.compose(&square.inclusion())?;
    let mut unit = LinearMap::zero(dim, n, field);
    for u in 0..order {
        if eps[u] == 1 {
            let target = index_of(u, u).expect("diagonal pair present");
            unit.set(target, u, field.one());
        }
    }
    TrimoduleAlgebraFD::new(carrier, mul, unit)
}

/// Solves `x ∘ epi = rhs` for `x`: descent of a map along a surjection.
pub fn descend_along(epi: &LinearMap, rhs: &LinearMap) -> Result<LinearMap, HopfError> {
    let solved = solve(&epi.transpose(), &rhs.transpose())?
        .ok_or_else(|| HopfError::Descent("map does not descend along the projection".into()))?;
    Ok(solved.transpose())
}

/// Expresses `target` in the span of `basis` (all maps of one shape).
pub fn coords_in_map_basis(
    basis: &[LinearMap],
    target: &LinearMap,
) -> Result<Vec<Rational>, HopfError> {
    let field = target.field();
    let columns: Vec<Vec<Rational>> = basis.iter().map(|b| vec_of(b).entries().to_vec()).collect();
    let stacked = LinearMap::from_cols(target.rows() * target.cols(), field, &columns);
    let sol = factor_through(&stacked, &vec_of(target))?;
    Ok(sol.entries().to_vec())
}
