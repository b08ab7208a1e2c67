use std::sync::Arc;

use exact_kernel::subspace::cokernel_projection;
use exact_kernel::LinearMap;

use crate::bialgebra::{find_antipode, BialgebraFD};
use crate::comodule::{comodule_hom_space, cotensor, tensor_comodules, CotensorSpace, LeftComoduleFD};
use crate::report::Report;
use crate::trimodule::{interchange, invert, HopfTrimoduleFD};
use crate::trimodule_algebra::{
    cotensor_lift, descend_along, free_module, module_hom_space, monad_unit, TrimoduleAlgebraFD,
    TrimoduleModuleFD,
};
use crate::util::swap_adjacent_legs;
use crate::HopfError;

/// The lax module monad `A □ -` of a trimodule algebra, materialized per
/// argument comodule: unit and multiplication come from the algebra, the
/// module coherence is the interchange family.
pub struct MonadInstanceFD {
    pub algebra: Arc<TrimoduleAlgebraFD>,
}

impl MonadInstanceFD {
    pub fn new(algebra: Arc<TrimoduleAlgebraFD>) -> Self {
        MonadInstanceFD { algebra }
    }

    pub fn carrier(&self) -> &HopfTrimoduleFD {
        self.algebra.carrier()
    }

    pub fn base(&self) -> &Arc<BialgebraFD> {
        self.algebra.base()
    }

    /// `T(M) = A □ M` with its subspace presentation.
    pub fn apply(&self, m: &LeftComoduleFD) -> Result<CotensorSpace, HopfError> {
        cotensor(self.carrier().view(), m.view())
    }

    /// The monad unit at `M` in subspace coordinates.
    pub fn unit_at(
        &self,
        m: &LeftComoduleFD,
        target: &CotensorSpace,
    ) -> Result<LinearMap, HopfError> {
        monad_unit(&self.algebra, m, target)
    }

    /// The free module on `M`; its action is the monad multiplication at `M`.
    pub fn free(&self, m: &LeftComoduleFD) -> Result<TrimoduleModuleFD, HopfError> {
        free_module(&self.algebra, m)
    }
}

/// Monad laws at every pool comodule, as exact matrix identities.
pub fn check_monad_laws(t: &MonadInstanceFD, pool: &[LeftComoduleFD]) -> Report {
    let mut report = Report::new();
    for (i, m) in pool.iter().enumerate() {
        let result = (|| -> Result<(), HopfError> {
            let free_m = t.free(m)?;
            let tm_space = &free_m.free_data().unwrap().presentation;
            let tm_com = free_m.comodule().clone();
            let mu = free_m.act();
            let id_tm = LinearMap::identity(tm_com.dim(), m.field());
            // μ ∘ η_{T(M)} = id
            let eta_tm = t.unit_at(&tm_com, free_m.act_domain())?;
            report.push_eq(format!("monad-unit-left-m{i}"), &mu.compose(&eta_tm)?, &id_tm);
            // μ ∘ T(η_M) = id
            let eta_m = t.unit_at(m, tm_space)?;
            let t_eta = cotensor_lift(tm_space, free_m.act_domain(), &eta_m)?;
            report.push_eq(format!("monad-unit-right-m{i}"), &mu.compose(&t_eta)?, &id_tm);
            // μ ∘ T(μ) = μ ∘ μ_T on T³(M)
            let free_tm = t.free(&tm_com)?;
            let t_mu = cotensor_lift(free_tm.act_domain(), free_m.act_domain(), mu)?;
            let lhs = mu.compose(&t_mu)?;
            let rhs = mu.compose(free_tm.act())?;
            report.push_eq(format!("monad-assoc-m{i}"), &lhs, &rhs);
            Ok(())
        })();
        if let Err(e) = result {
            report.push(format!("monad-laws-m{i}"), false, Some(e.to_string()));
        }
    }
    report
}

/// Lax module-monad compatibility of the unit and multiplication with the
/// interchange family, at sampled pairs `(V, M)`.
pub fn check_lax_module_compat(
    t: &MonadInstanceFD,
    samples: &[(LeftComoduleFD, LeftComoduleFD)],
) -> Report {
    let mut report = Report::new();
    for (i, (v, m)) in samples.iter().enumerate() {
        let result = (|| -> Result<(), HopfError> {
            let field = m.field();
            let id_v = LinearMap::identity(v.dim(), field);
            let chi = interchange(t.carrier(), v, m)?;
            let vm = tensor_comodules(v, m)?;
            // χ ∘ (V ⊗ η_M) = η_{V⊗M}
            let eta_m = t.unit_at(m, &chi.source)?;
            let lhs = chi.matrix.compose(&id_v.tensor(&eta_m)?)?;
            let rhs = t.unit_at(&vm, &chi.target)?;
            report.push_eq(format!("lax-unit-s{i}"), &lhs, &rhs);
            // μ_{V⊗M} ∘ T(χ) ∘ χ_{V,T(M)} = χ ∘ (V ⊗ μ_M)
            let free_m = t.free(m)?;
            let tm_com = free_m.comodule().clone();
            let chi_tm = interchange(t.carrier(), v, &tm_com)?;
            let free_vm = t.free(&vm)?;
            let t_chi = cotensor_lift(&chi_tm.target, free_vm.act_domain(), &chi.matrix)?;
            let lhs = free_vm
                .act()
                .compose(&t_chi)?
                .compose(&chi_tm.matrix)?;
            let rhs = chi.matrix.compose(&id_v.tensor(free_m.act())?)?;
            report.push_eq(format!("lax-mult-s{i}"), &lhs, &rhs);
            Ok(())
        })();
        if let Err(e) = result {
            report.push(format!("lax-compat-s{i}"), false, Some(e.to_string()));
        }
    }
    report
}

/// The free–forgetful bijection at `(X, Y)`: module maps `T(X) → Y` against
/// comodule maps `X → Y`, with both directions and round-trip verdicts.
pub struct FreeForgetful {
    pub module_homs: Vec<LinearMap>,
    pub comodule_homs: Vec<LinearMap>,
    pub report: Report,
}

pub fn free_forgetful_iso(
    t: &MonadInstanceFD,
    x: &LeftComoduleFD,
    y: &TrimoduleModuleFD,
) -> Result<FreeForgetful, HopfError> {
    let mut report = Report::new();
    let free_x = t.free(x)?;
    let pres = &free_x.free_data().unwrap().presentation;
    let eta = t.unit_at(x, pres)?;
    let module_homs = module_hom_space(&free_x, y)?;
    let comodule_homs = comodule_hom_space(x, y.comodule())?;
    report.push(
        "dimension-match",
        module_homs.len() == comodule_homs.len(),
        Some(format!(
            "{} module maps vs {} comodule maps",
            module_homs.len(),
            comodule_homs.len()
        )),
    );
    let forward = |f: &LinearMap| f.compose(&eta).unwrap();
    let backward = |g: &LinearMap| -> Result<LinearMap, HopfError> {
        let lifted = cotensor_lift(pres, y.act_domain(), g)?;
        Ok(y.act().compose(&lifted)?)
    };
    let mut round = true;
    for f in &module_homs {
        if &backward(&forward(f))? != f {
            round = false;
        }
    }
    for g in &comodule_homs {
        if &forward(&backward(g)?) != g {
            round = false;
        }
    }
    report.push("round-trips", round, None);
    Ok(FreeForgetful {
        module_homs,
        comodule_homs,
        report,
    })
}

/// A Linton coequalizer `V ▶ M`: the cokernel of the two parallel maps
/// `T(V ▷ T(M)) ⇉ T(V ▷ M)` with the descended module structure.
pub struct LintonResult {
    pub module: TrimoduleModuleFD,
    /// `T(V ⊗ M) → V ▶ M` in subspace coordinates
    pub projection: LinearMap,
    pub map_free_action: LinearMap,
    pub map_mu_chi: LinearMap,
    pub domain: CotensorSpace,
    pub codomain: CotensorSpace,
}

pub fn linton_action(
    t: &MonadInstanceFD,
    v: &LeftComoduleFD,
    m: &TrimoduleModuleFD,
) -> Result<LintonResult, HopfError> {
    let field = v.field();
    let id_v = LinearMap::identity(v.dim(), field);
    let w = m.comodule();
    let tw_com = m.act_domain().to_left_comodule()?;
    let vw = tensor_comodules(v, w)?;
    let vtw = tensor_comodules(v, &tw_com)?;
    let domain = t.apply(&vtw)?;
    let codomain = t.apply(&vw)?;
    // first map: T(V ⊗ ∇)
    let map_free_action = cotensor_lift(&domain, &codomain, &id_v.tensor(m.act())?)?;
    // second map: μ_{V⊗M} ∘ T(χ_{V,M})
    let chi = interchange(t.carrier(), v, w)?;
    let free_vw = t.free(&vw)?;
    let t_chi = cotensor_lift(&domain, free_vw.act_domain(), &chi.matrix)?;
    let map_mu_chi = free_vw.act().compose(&t_chi)?;
    let diff = map_free_action.sub(&map_mu_chi)?;
    let (qdim, projection) = cokernel_projection(&diff);
    // quotient comodule structure descends along the projection
    let id_b = t.base().id();
    let codomain_com = codomain.to_left_comodule()?;
    let lambda_rhs = id_b.tensor(&projection)?.compose(codomain_com.coaction())?;
    let lambda_q = descend_along(&projection, &lambda_rhs)?;
    let q_com = LeftComoduleFD::new(t.base().clone(), qdim, lambda_q)?;
    // quotient action descends along A □ projection
    let tq = t.apply(&q_com)?;
    let lifted_proj = cotensor_lift(free_vw.act_domain(), &tq, &projection)?;
    let act_rhs = projection.compose(free_vw.act())?;
    let act_q = descend_along(&lifted_proj, &act_rhs)?;
    let module = TrimoduleModuleFD::new(t.algebra.clone(), q_com, act_q)?;
    Ok(LintonResult {
        module,
        projection,
        map_free_action,
        map_mu_chi,
        domain,
        codomain,
    })
}

/// Functorial action of `V ▶ -` on a module morphism, by descent.
pub fn linton_map(
    _t: &MonadInstanceFD,
    v: &LeftComoduleFD,
    src: &LintonResult,
    dst: &LintonResult,
    f: &LinearMap,
) -> Result<LinearMap, HopfError> {
    let field = v.field();
    let id_v = LinearMap::identity(v.dim(), field);
    let lifted = cotensor_lift(&src.codomain, &dst.codomain, &id_v.tensor(f)?)?;
    descend_along(&src.projection, &dst.projection.compose(&lifted)?)
}

fn is_module_morphism(
    f: &LinearMap,
    src: &TrimoduleModuleFD,
    dst: &TrimoduleModuleFD,
) -> Result<bool, HopfError> {
    let id_b = src.algebra().base().id();
    let colinear = id_b
        .tensor(f)?
        .compose(src.comodule().coaction())?
        == dst.comodule().coaction().compose(f)?;
    let lifted = cotensor_lift(src.act_domain(), dst.act_domain(), f)?;
    let intertwines = f.compose(src.act())? == dst.act().compose(&lifted)?;
    Ok(colinear && intertwines)
}

/// The unit isomorphism `1 ▶ M ≅ M` of the Linton structure, verified by
/// exhibiting the comparison map and checking it is a module isomorphism.
pub fn linton_unit_check(t: &MonadInstanceFD, m: &TrimoduleModuleFD) -> Report {
    let mut report = Report::new();
    let result = (|| -> Result<(), HopfError> {
        let triv = LeftComoduleFD::trivial(t.base().clone());
        let lr = linton_action(t, &triv, m)?;
        let j = descend_along(&lr.projection, m.act())?;
        report.push(
            "unit-iso-dims",
            lr.module.dim() == m.dim(),
            Some(format!("{} vs {}", lr.module.dim(), m.dim())),
        );
        let invertible = invert(&j).is_ok();
        report.push("unit-iso-invertible", invertible, None);
        report.push(
            "unit-iso-module-morphism",
            is_module_morphism(&j, &lr.module, m)?,
            None,
        );
        Ok(())
    })();
    if let Err(e) = result {
        report.push("unit-iso", false, Some(e.to_string()));
    }
    report
}

/// The split free case `V ▶ T(X) ≅ T(V ▷ X)`, with the canonical
/// coequalizing map `μ ∘ T(χ)` inducing the isomorphism; this is also the
/// strength of the Kleisli embedding.
pub fn linton_free_check(
    t: &MonadInstanceFD,
    v: &LeftComoduleFD,
    x: &LeftComoduleFD,
) -> Report {
    let mut report = Report::new();
    let result = (|| -> Result<(), HopfError> {
        let free_x = t.free(x)?;
        let lr = linton_action(t, v, &free_x)?;
        let vx = tensor_comodules(v, x)?;
        let free_vx = t.free(&vx)?;
        let chi = interchange(t.carrier(), v, x)?;
        let t_chi = cotensor_lift(&lr.codomain, free_vx.act_domain(), &chi.matrix)?;
        let q = free_vx.act().compose(&t_chi)?;
        let j = descend_along(&lr.projection, &q)?;
        report.push(
            "free-case-dims",
            lr.module.dim() == free_vx.dim(),
            Some(format!("{} vs {}", lr.module.dim(), free_vx.dim())),
        );
        report.push("free-case-invertible", invert(&j).is_ok(), None);
        report.push(
            "free-case-module-morphism",
            is_module_morphism(&j, &lr.module, &free_vx)?,
            None,
        );
        Ok(())
    })();
    if let Err(e) = result {
        report.push("free-case", false, Some(e.to_string()));
    }
    report
}

/// The associator `(V ⊗ W) ▶ M → V ▶ (W ▶ M)`, found explicitly by descent
/// of the canonical comparison.
pub struct LintonAssociator {
    pub combined: LintonResult,
    pub inner: LintonResult,
    pub outer: LintonResult,
    pub map: LinearMap,
}

pub fn linton_associator(
    t: &MonadInstanceFD,
    v: &LeftComoduleFD,
    w: &LeftComoduleFD,
    m: &TrimoduleModuleFD,
) -> Result<LintonAssociator, HopfError> {
    let field = v.field();
    let inner = linton_action(t, w, m)?;
    let outer = linton_action(t, v, &inner.module)?;
    let vw = tensor_comodules(v, w)?;
    let combined = linton_action(t, &vw, m)?;
    // u : W ▷ U(M) → U(W ▶ M), the unit followed by the projection
    let wm = tensor_comodules(w, m.comodule())?;
    let eta_wm = t.unit_at(&wm, &inner.codomain)?;
    let u = inner.projection.compose(&eta_wm)?;
    let id_v = LinearMap::identity(v.dim(), field);
    let lifted_u = cotensor_lift(&combined.codomain, &outer.codomain, &id_v.tensor(&u)?)?;
    let h = outer.projection.compose(&lifted_u)?;
    // h must coequalize the combined parallel pair
    let coeq = h.compose(&combined.map_free_action)? == h.compose(&combined.map_mu_chi)?;
    if !coeq {
        return Err(HopfError::Descent(
            "comparison map does not coequalize the Linton pair".into(),
        ));
    }
    let map = descend_along(&combined.projection, &h)?;
    Ok(LintonAssociator {
        combined,
        inner,
        outer,
        map,
    })
}

/// Pentagon and triangle coherence for the Linton action, plus the two
/// structural isomorphism checks, at one sampled triple `(V, W, M)`.
pub fn check_linton_coherence_sample(
    t: &MonadInstanceFD,
    v: &LeftComoduleFD,
    w: &LeftComoduleFD,
    m: &TrimoduleModuleFD,
) -> Report {
    let mut report = Report::new();
    report.merge("", linton_unit_check(t, m));
    report.merge("", linton_free_check(t, v, m.comodule()));
    let result = (|| -> Result<(), HopfError> {
        let assoc = linton_associator(t, v, w, m)?;
        report.push("associator-invertible", invert(&assoc.map).is_ok(), None);
        report.push(
            "associator-module-morphism",
            is_module_morphism(&assoc.map, &assoc.combined.module, &assoc.outer.module)?,
            None,
        );
        // pentagon with U = V: ((V⊗V)⊗W) ▶ M two ways
        let vv = tensor_comodules(v, v)?;
        let alpha_vv_w = linton_associator(t, &vv, w, m)?;
        let alpha_v_v = linton_associator(t, v, v, &alpha_vv_w.inner.module)?;
        let route1 = alpha_v_v.map.compose(&alpha_vv_w.map)?;
        let vw = tensor_comodules(v, w)?;
        let alpha_v_vw = linton_associator(t, v, &vw, m)?;
        let inner_v = linton_action(t, v, &assoc.combined.module)?;
        let inner_tgt = linton_action(t, v, &assoc.outer.module)?;
        let lifted = linton_map(t, v, &inner_v, &inner_tgt, &assoc.map)?;
        let route2 = lifted.compose(&alpha_v_vw.map)?;
        report.push_eq("pentagon", &route1, &route2);
        // triangle: V ▶ (unit iso) ∘ α_{V,1,M} = id on V ▶ M
        let triv = LeftComoduleFD::trivial(t.base().clone());
        let alpha_v_1 = linton_associator(t, v, &triv, m)?;
        let unit_lr = linton_action(t, &triv, m)?;
        let j = descend_along(&unit_lr.projection, m.act())?;
        let v_m = linton_action(t, v, m)?;
        let v_j = linton_map(t, v, &alpha_v_1.outer, &v_m, &j)?;
        let composite = v_j.compose(&alpha_v_1.map)?;
        let id_q = LinearMap::identity(v_m.module.dim(), v.field());
        report.push_eq("triangle", &composite, &id_q);
        Ok(())
    })();
    if let Err(e) = result {
        report.push("linton-coherence", false, Some(e.to_string()));
    }
    report
}

/// Verifies the reconstruction identity: with `X` the free module on the
/// trivial comodule, `Hom(V ▶ X, M) ≅ Hom(V, U(M))` naturally, exhibiting
/// the internal hom from `X` as the forgetful functor.
pub fn reconstruction_identity(
    t: &MonadInstanceFD,
    pool: &[LeftComoduleFD],
) -> Result<Report, HopfError> {
    let mut report = Report::new();
    let triv = LeftComoduleFD::trivial(t.base().clone());
    let x = t.free(&triv)?;
    let ux = x.comodule().clone();
    let field = triv.field();
    let modules: Vec<TrimoduleModuleFD> = pool
        .iter()
        .map(|p| t.free(p))
        .collect::<Result<_, _>>()?;
    for (vi, v) in pool.iter().enumerate() {
        let lr = linton_action(t, v, &x)?;
        // u_V : V → U(V ▶ X)
        let id_v = LinearMap::identity(v.dim(), field);
        let eta_triv = t.unit_at(&triv, &x.free_data().unwrap().presentation)?;
        let v_ux = tensor_comodules(v, &ux)?;
        let eta_vux = t.unit_at(&v_ux, &lr.codomain)?;
        let u_v = lr
            .projection
            .compose(&eta_vux)?
            .compose(&id_v.tensor(&eta_triv)?)?;
        for (mi, m) in modules.iter().enumerate() {
            let module_homs = module_hom_space(&lr.module, m)?;
            let comodule_homs = comodule_hom_space(v, m.comodule())?;
            report.push(
                format!("dims-v{vi}-m{mi}"),
                module_homs.len() == comodule_homs.len(),
                Some(format!(
                    "{} vs {}",
                    module_homs.len(),
                    comodule_homs.len()
                )),
            );
            let forward = |f: &LinearMap| f.compose(&u_v).unwrap();
            let backward = |g: &LinearMap| -> Result<LinearMap, HopfError> {
                // φ_g = ∇_M ∘ T(g) ∘ χ_{V,1}; then descend ∇_M ∘ T(φ_g)
                let chi = interchange(t.carrier(), v, &triv)?;
                let t_g = cotensor_lift(&chi.target, m.act_domain(), g)?;
                let phi = m.act().compose(&t_g)?.compose(&chi.matrix)?;
                let t_phi = cotensor_lift(&lr.codomain, m.act_domain(), &phi)?;
                let h = m.act().compose(&t_phi)?;
                descend_along(&lr.projection, &h)
            };
            let mut round = true;
            for f in &module_homs {
                if &backward(&forward(f))? != f {
                    round = false;
                }
            }
            for g in &comodule_homs {
                if &forward(&backward(g)?) != g {
                    round = false;
                }
            }
            report.push(format!("round-trips-v{vi}-m{mi}"), round, None);
        }
    }
    // naturality in V on sampled morphisms
    let mut natural = true;
    let mut checked = 0usize;
    'outer: for (vi, v) in pool.iter().enumerate() {
        for (wi, w) in pool.iter().enumerate() {
            if vi == wi {
                continue;
            }
            for s in comodule_hom_space(v, w)?.iter().take(2) {
                let lr_v = linton_action(t, v, &x)?;
                let lr_w = linton_action(t, w, &x)?;
                let s_x = {
                    let id_ux = LinearMap::identity(ux.dim(), field);
                    let lifted =
                        cotensor_lift(&lr_v.codomain, &lr_w.codomain, &s.tensor(&id_ux)?)?;
                    descend_along(&lr_v.projection, &lr_w.projection.compose(&lifted)?)?
                };
                let id_v = LinearMap::identity(v.dim(), field);
                let eta_triv = t.unit_at(&triv, &x.free_data().unwrap().presentation)?;
                let v_ux = tensor_comodules(v, &ux)?;
                let eta_vux = t.unit_at(&v_ux, &lr_v.codomain)?;
                let u_v = lr_v
                    .projection
                    .compose(&eta_vux)?
                    .compose(&id_v.tensor(&eta_triv)?)?;
                let id_w = LinearMap::identity(w.dim(), field);
                let w_ux = tensor_comodules(w, &ux)?;
                let eta_wux = t.unit_at(&w_ux, &lr_w.codomain)?;
                let u_w = lr_w
                    .projection
                    .compose(&eta_wux)?
                    .compose(&id_w.tensor(&eta_triv)?)?;
                // u_W ∘ s = U(s ▶ X) ∘ u_V
                if u_w.compose(s)? != s_x.compose(&u_v)? {
                    natural = false;
                }
                checked += 1;
                if checked >= 10 {
                    break 'outer;
                }
            }
        }
    }
    report.push("naturality", natural, Some(format!("{checked} squares")));
    Ok(report)
}

/// The underlying comodule of `V ▶ X` for `X` the free module on the
/// trivial comodule: the componentwise internal-hom readout.
pub fn internal_hom_readout(
    t: &MonadInstanceFD,
    v: &LeftComoduleFD,
) -> Result<LeftComoduleFD, HopfError> {
    let triv = LeftComoduleFD::trivial(t.base().clone());
    let x = t.free(&triv)?;
    Ok(linton_action(t, v, &x)?.module.comodule().clone())
}

/// The right fusion operator of the opmonoidal monad `H ⊗ -` on plain
/// spaces: `h ⊗ h' ⊗ v ⊗ w ↦ h_(1) h' ⊗ v ⊗ h_(2) ⊗ w`.
pub fn fusion_operator(
    h: &BialgebraFD,
    v_dim: usize,
    w_dim: usize,
) -> Result<LinearMap, HopfError> {
    let n = h.dim();
    let field = h.field();
    let id_rest = LinearMap::identity(n * v_dim * w_dim, field);
    let spread = h.comul().tensor(&id_rest)?;
    // legs (h1, h2, h', v, w) → (h1, h', v, h2, w)
    let swap1 = swap_adjacent_legs(&[n, n, n, v_dim, w_dim], 1, field);
    let swap2 = swap_adjacent_legs(&[n, n, n, v_dim, w_dim], 2, field);
    let id_v = LinearMap::identity(v_dim, field);
    let id_hw = LinearMap::identity(n * w_dim, field);
    let collapse = h.mul().tensor(&id_v)?.tensor(&id_hw)?;
    Ok(collapse.compose(&swap2.compose(&swap1)?)?.compose(&spread)?)
}

/// Right-Hopf test: invertibility of the Galois map, cross-checked against
/// antipode presence.
pub fn is_right_hopf(h: &BialgebraFD) -> Result<bool, HopfError> {
    let galois = fusion_operator(h, 1, 1)?;
    let invertible = exact_kernel::rank(&galois) == galois.rows();
    let antipode = find_antipode(h)?.antipode.is_some();
    if invertible != antipode {
        return Err(HopfError::Certification(format!(
            "fusion invertibility ({invertible}) disagrees with antipode presence ({antipode})"
        )));
    }
    Ok(invertible)
}
