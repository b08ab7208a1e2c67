use std::sync::Arc;

use exact_kernel::{kernel_basis, FieldSpec, LinearMap, Subspace};

use crate::bialgebra::{monoid_structure, BialgebraFD};
use crate::report::Report;
use crate::util::{
    corestrict_block_left, corestrict_block_right, map_space_kernel, map_space_matrix, vec_of,
};
use crate::HopfError;

pub(crate) fn same_base(a: &Arc<BialgebraFD>, b: &Arc<BialgebraFD>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn require_same_base(
    a: &Arc<BialgebraFD>,
    b: &Arc<BialgebraFD>,
) -> Result<(), HopfError> {
    if same_base(a, b) {
        Ok(())
    } else {
        Err(HopfError::BaseMismatch)
    }
}

/// A left comodule `λ: M → B ⊗ M` over a shared base bialgebra.
#[derive(Clone, PartialEq, Debug)]
pub struct LeftComoduleFD {
    base: Arc<BialgebraFD>,
    dim: usize,
    coaction: LinearMap,
}

impl LeftComoduleFD {
    pub fn new(
        base: Arc<BialgebraFD>,
        dim: usize,
        coaction: LinearMap,
    ) -> Result<Self, HopfError> {
        if coaction.rows() != base.dim() * dim || coaction.cols() != dim {
            return Err(HopfError::Shape(format!(
                "left coaction must be {}x{}, got {}x{}",
                base.dim() * dim,
                dim,
                coaction.rows(),
                coaction.cols()
            )));
        }
        if coaction.field() != base.field() {
            return Err(HopfError::Shape("coaction field mismatch".into()));
        }
        Ok(LeftComoduleFD {
            base,
            dim,
            coaction,
        })
    }

    /// The trivial comodule: `v ↦ 1 ⊗ v`.
    pub fn trivial(base: Arc<BialgebraFD>) -> Self {
        let coaction = base.unit().clone();
        LeftComoduleFD {
            base,
            dim: 1,
            coaction,
        }
    }

    /// The regular comodule: `B` with `λ = Δ`.
    pub fn regular(base: Arc<BialgebraFD>) -> Self {
        let coaction = base.comul().clone();
        let dim = base.dim();
        LeftComoduleFD {
            base,
            dim,
            coaction,
        }
    }

    pub fn zero(base: Arc<BialgebraFD>) -> Self {
        let field = base.field();
        LeftComoduleFD {
            base,
            dim: 0,
            coaction: LinearMap::zero(0, 0, field),
        }
    }

    pub fn base(&self) -> &Arc<BialgebraFD> {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.coaction.field()
    }

    pub fn coaction(&self) -> &LinearMap {
        &self.coaction
    }

    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let b = &self.base;
        let id_m = LinearMap::identity(self.dim, self.field());
        let id_b = b.id();
        let lhs = b
            .comul()
            .tensor(&id_m)
            .unwrap()
            .compose(&self.coaction)
            .unwrap();
        let rhs = id_b
            .tensor(&self.coaction)
            .unwrap()
            .compose(&self.coaction)
            .unwrap();
        report.push_eq("left-coassoc", &lhs, &rhs);
        let counit = b
            .counit()
            .tensor(&id_m)
            .unwrap()
            .compose(&self.coaction)
            .unwrap();
        report.push_eq("left-counit", &counit, &id_m);
        report
    }

    pub fn view(&self) -> ComoduleView<'_> {
        ComoduleView {
            base: &self.base,
            dim: self.dim,
            lambda: Some(&self.coaction),
            rho: None,
        }
    }
}

/// A right comodule `ρ: M → M ⊗ B`.
#[derive(Clone, PartialEq, Debug)]
pub struct RightComoduleFD {
    base: Arc<BialgebraFD>,
    dim: usize,
    coaction: LinearMap,
}

impl RightComoduleFD {
    pub fn new(
        base: Arc<BialgebraFD>,
        dim: usize,
        coaction: LinearMap,
    ) -> Result<Self, HopfError> {
        if coaction.rows() != dim * base.dim() || coaction.cols() != dim {
            return Err(HopfError::Shape(format!(
                "right coaction must be {}x{}, got {}x{}",
                dim * base.dim(),
                dim,
                coaction.rows(),
                coaction.cols()
            )));
        }
        if coaction.field() != base.field() {
            return Err(HopfError::Shape("coaction field mismatch".into()));
        }
        Ok(RightComoduleFD {
            base,
            dim,
            coaction,
        })
    }

    pub fn regular(base: Arc<BialgebraFD>) -> Self {
        let coaction = base.comul().clone();
        let dim = base.dim();
        RightComoduleFD {
            base,
            dim,
            coaction,
        }
    }

    pub fn base(&self) -> &Arc<BialgebraFD> {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coaction(&self) -> &LinearMap {
        &self.coaction
    }

    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let b = &self.base;
        let id_m = LinearMap::identity(self.dim, b.field());
        let id_b = b.id();
        let lhs = self
            .coaction
            .tensor(&id_b)
            .unwrap()
            .compose(&self.coaction)
            .unwrap();
        let rhs = id_m
            .tensor(b.comul())
            .unwrap()
            .compose(&self.coaction)
            .unwrap();
        report.push_eq("right-coassoc", &lhs, &rhs);
        let counit = id_m
            .tensor(b.counit())
            .unwrap()
            .compose(&self.coaction)
            .unwrap();
        report.push_eq("right-counit", &counit, &id_m);
        report
    }

    pub fn view(&self) -> ComoduleView<'_> {
        ComoduleView {
            base: &self.base,
            dim: self.dim,
            lambda: None,
            rho: Some(&self.coaction),
        }
    }
}

/// A bicomodule: compatible left and right coactions (Eq. between
/// `(B ⊗ ρ) ∘ λ` and `(λ ⊗ B) ∘ ρ`).
#[derive(Clone, PartialEq, Debug)]
pub struct BicomoduleFD {
    base: Arc<BialgebraFD>,
    dim: usize,
    lambda: LinearMap,
    rho: LinearMap,
}

impl BicomoduleFD {
    pub fn new(
        base: Arc<BialgebraFD>,
        dim: usize,
        lambda: LinearMap,
        rho: LinearMap,
    ) -> Result<Self, HopfError> {
        LeftComoduleFD::new(base.clone(), dim, lambda.clone())?;
        RightComoduleFD::new(base.clone(), dim, rho.clone())?;
        Ok(BicomoduleFD {
            base,
            dim,
            lambda,
            rho,
        })
    }

    /// The regular bicomodule: `B` with `λ = ρ = Δ`.
    pub fn regular(base: Arc<BialgebraFD>) -> Self {
        let comul = base.comul().clone();
        let dim = base.dim();
        BicomoduleFD {
            base,
            dim,
            lambda: comul.clone(),
            rho: comul,
        }
    }

    pub fn base(&self) -> &Arc<BialgebraFD> {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.lambda.field()
    }

    pub fn lambda(&self) -> &LinearMap {
        &self.lambda
    }

    pub fn rho(&self) -> &LinearMap {
        &self.rho
    }

    pub fn left_comodule(&self) -> LeftComoduleFD {
        LeftComoduleFD {
            base: self.base.clone(),
            dim: self.dim,
            coaction: self.lambda.clone(),
        }
    }

    pub fn right_comodule(&self) -> RightComoduleFD {
        RightComoduleFD {
            base: self.base.clone(),
            dim: self.dim,
            coaction: self.rho.clone(),
        }
    }

    pub fn view(&self) -> ComoduleView<'_> {
        ComoduleView {
            base: &self.base,
            dim: self.dim,
            lambda: Some(&self.lambda),
            rho: Some(&self.rho),
        }
    }
}

/// Checks both comodule laws and the bicomodule compatibility square.
pub fn validate_bicomodule(x: &BicomoduleFD) -> Report {
    let mut report = Report::new();
    report.merge("", x.left_comodule().validate());
    report.merge("", x.right_comodule().validate());
    let id_b = x.base.id();
    let lhs = id_b
        .tensor(&x.rho)
        .unwrap()
        .compose(&x.lambda)
        .unwrap();
    let rhs = x
        .lambda
        .tensor(&id_b)
        .unwrap()
        .compose(&x.rho)
        .unwrap();
    report.push_eq("bicomodule-compat", &lhs, &rhs);
    report
}

/// A borrowed view of any comodule-like value: carries whichever coactions
/// exist. Cotensor products and coinvariants work on views so that left,
/// right, bi-, and cotensor comodules share one code path.
#[derive(Clone, Copy)]
pub struct ComoduleView<'a> {
    pub base: &'a Arc<BialgebraFD>,
    pub dim: usize,
    pub lambda: Option<&'a LinearMap>,
    pub rho: Option<&'a LinearMap>,
}

/// The cotensor product `X □ Y`: the equalizer subspace of `X ⊗ Y` cut out
/// by `ρ^X ⊗ Y - X ⊗ λ^Y`, with the outer coactions restricted to it.
#[derive(Clone, Debug)]
pub struct CotensorSpace {
    base: Arc<BialgebraFD>,
    left_dim: usize,
    right_dim: usize,
    subspace: Subspace,
    lambda: Option<LinearMap>,
    rho: Option<LinearMap>,
}

impl CotensorSpace {
    pub fn base(&self) -> &Arc<BialgebraFD> {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn inclusion(&self) -> LinearMap {
        self.subspace.inclusion()
    }

    pub fn lambda(&self) -> Option<&LinearMap> {
        self.lambda.as_ref()
    }

    pub fn rho(&self) -> Option<&LinearMap> {
        self.rho.as_ref()
    }

    pub fn to_left_comodule(&self) -> Result<LeftComoduleFD, HopfError> {
        let lambda = self
            .lambda
            .clone()
            .ok_or_else(|| HopfError::Shape("cotensor has no left coaction".into()))?;
        LeftComoduleFD::new(self.base.clone(), self.dim(), lambda)
    }

    pub fn to_bicomodule(&self) -> Result<BicomoduleFD, HopfError> {
        let lambda = self
            .lambda
            .clone()
            .ok_or_else(|| HopfError::Shape("cotensor has no left coaction".into()))?;
        let rho = self
            .rho
            .clone()
            .ok_or_else(|| HopfError::Shape("cotensor has no right coaction".into()))?;
        BicomoduleFD::new(self.base.clone(), self.dim(), lambda, rho)
    }
}

/// Computes `X □ Y` for any `x` with a right coaction and `y` with a left
/// coaction over the same base.
pub fn cotensor(x: ComoduleView<'_>, y: ComoduleView<'_>) -> Result<CotensorSpace, HopfError> {
    require_same_base(x.base, y.base)?;
    let base = x.base.clone();
    let field = base.field();
    let rho_x = x
        .rho
        .ok_or_else(|| HopfError::Shape("left cotensor factor lacks a right coaction".into()))?;
    let lambda_y = y
        .lambda
        .ok_or_else(|| HopfError::Shape("right cotensor factor lacks a left coaction".into()))?;
    let id_x = LinearMap::identity(x.dim, field);
    let id_y = LinearMap::identity(y.dim, field);
    let condition = rho_x
        .tensor(&id_y)?
        .sub(&id_x.tensor(lambda_y)?)?;
    let subspace = kernel_basis(&condition);
    let incl = subspace.inclusion();
    let lambda = match x.lambda {
        None => None,
        Some(lx) => {
            let raw = lx.tensor(&id_y)?.compose(&incl)?;
            Some(
                corestrict_block_left(&subspace, &raw, base.dim()).ok_or_else(|| {
                    HopfError::Corestriction(
                        "left coaction does not restrict to the cotensor subspace".into(),
                    )
                })?,
            )
        }
    };
    let rho = match y.rho {
        None => None,
        Some(ry) => {
            let raw = id_x.tensor(ry)?.compose(&incl)?;
            Some(
                corestrict_block_right(&subspace, &raw, base.dim()).ok_or_else(|| {
                    HopfError::Corestriction(
                        "right coaction does not restrict to the cotensor subspace".into(),
                    )
                })?,
            )
        }
    };
    Ok(CotensorSpace {
        base,
        left_dim: x.dim,
        right_dim: y.dim,
        subspace,
        lambda,
        rho,
    })
}

/// Basis of comodule morphisms `{f : (B ⊗ f) ∘ λ_m = λ_p ∘ f}`.
pub fn comodule_hom_space(
    m: &LeftComoduleFD,
    p: &LeftComoduleFD,
) -> Result<Vec<LinearMap>, HopfError> {
    require_same_base(&m.base, &p.base)?;
    let id_b = m.base.id();
    let cond = |f: &LinearMap| {
        id_b.tensor(f)
            .unwrap()
            .compose(&m.coaction)
            .unwrap()
            .sub(&p.coaction.compose(f).unwrap())
            .unwrap()
    };
    Ok(map_space_kernel(p.dim, m.dim, m.field(), &[&cond]))
}

/// The diagonal coaction on `M ⊗ P`:
/// `v ⊗ w ↦ v_(-1) w_(-1) ⊗ v_(0) ⊗ w_(0)`.
pub fn tensor_comodules(
    m: &LeftComoduleFD,
    p: &LeftComoduleFD,
) -> Result<LeftComoduleFD, HopfError> {
    require_same_base(&m.base, &p.base)?;
    let base = m.base.clone();
    let field = base.field();
    let n = base.dim();
    let id_b = base.id();
    let id_m = LinearMap::identity(m.dim, field);
    let id_p = LinearMap::identity(p.dim, field);
    // M⊗P → (B⊗M)⊗(B⊗P) → B⊗B⊗M⊗P → B⊗M⊗P
    let both = m.coaction.tensor(&p.coaction)?;
    let swap_mb = LinearMap::tensor_swap(m.dim, n, field);
    let rearrange = id_b.tensor(&swap_mb)?.tensor(&id_p)?;
    let mul_front = base.mul().tensor(&id_m)?.tensor(&id_p)?;
    let coaction = mul_front.compose(&rearrange)?.compose(&both)?;
    LeftComoduleFD::new(base, m.dim * p.dim, coaction)
}

/// The cofree comodule `B ⊗ V` with coaction `Δ ⊗ id`.
pub fn cofree_comodule(base: Arc<BialgebraFD>, d: usize) -> LeftComoduleFD {
    let field = base.field();
    let coaction = base
        .comul()
        .tensor(&LinearMap::identity(d, field))
        .unwrap();
    LeftComoduleFD {
        dim: base.dim() * d,
        base,
        coaction,
    }
}

/// Injectivity via the splitting criterion: `λ` admits a retraction that is
/// itself a comodule morphism from the cofree comodule on the underlying
/// space.
pub fn is_injective_comodule(m: &LeftComoduleFD) -> Result<bool, HopfError> {
    let base = &m.base;
    let field = base.field();
    let n = base.dim();
    let id_m = LinearMap::identity(m.dim, field);
    let id_b = base.id();
    let cofree_coaction = base.comul().tensor(&id_m)?;
    // unknown r : B⊗M → M with r∘λ = id and (B⊗r)∘(Δ⊗M) = λ∘r
    let retraction_cond = map_space_matrix(m.dim, n * m.dim, field, |r| {
        r.compose(&m.coaction).unwrap()
    });
    let colinear_cond = map_space_matrix(m.dim, n * m.dim, field, |r| {
        id_b.tensor(r)
            .unwrap()
            .compose(&cofree_coaction)
            .unwrap()
            .sub(&m.coaction.compose(r).unwrap())
            .unwrap()
    });
    let stacked = retraction_cond.vstack(&colinear_cond)?;
    let zero_rhs = LinearMap::zero(colinear_cond.rows(), 1, field);
    let rhs = vec_of(&id_m).vstack(&zero_rhs)?;
    Ok(exact_kernel::solve(&stacked, &rhs)?.is_some())
}

/// Right coinvariants `{v : ρ(v) = v ⊗ 1}`, as a subspace.
pub fn right_coinvariants(x: ComoduleView<'_>) -> Result<Subspace, HopfError> {
    let rho = x
        .rho
        .ok_or_else(|| HopfError::Shape("coinvariants need a right coaction".into()))?;
    let field = x.base.field();
    let id_x = LinearMap::identity(x.dim, field);
    let unitize = id_x.tensor(x.base.unit())?;
    Ok(kernel_basis(&rho.sub(&unitize)?))
}

/// The simple graded comodule `δ_z` of a monoid bialgebra: `λ(v) = z ⊗ v`.
pub fn simple_graded_comodule(
    base: Arc<BialgebraFD>,
    z: usize,
) -> Result<LeftComoduleFD, HopfError> {
    let table = monoid_structure(&base).ok_or(HopfError::NotPointed)?;
    if z >= table.order() {
        return Err(HopfError::Shape(format!(
            "grading element {z} out of range for monoid of order {}",
            table.order()
        )));
    }
    let field = base.field();
    let mut coaction = LinearMap::zero(base.dim(), 1, field);
    coaction.set(z, 0, field.one());
    LeftComoduleFD::new(base, 1, coaction)
}

/// The simple graded bicomodule `δ_{z,w}`: degree `z` on the left, `w` on
/// the right.
pub fn simple_graded_bicomodule(
    base: Arc<BialgebraFD>,
    z: usize,
    w: usize,
) -> Result<BicomoduleFD, HopfError> {
    let table = monoid_structure(&base).ok_or(HopfError::NotPointed)?;
    if z >= table.order() || w >= table.order() {
        return Err(HopfError::Shape("grading element out of range".into()));
    }
    let field = base.field();
    let mut lambda = LinearMap::zero(base.dim(), 1, field);
    lambda.set(z, 0, field.one());
    let mut rho = LinearMap::zero(base.dim(), 1, field);
    rho.set(w, 0, field.one());
    BicomoduleFD::new(base, 1, lambda, rho)
}
