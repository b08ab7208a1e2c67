use num_traits::Zero;
use exact_kernel::{FieldSpec, LinearMap};
use hopf_core::bialgebra::{
    convolution, convolution_unit, find_antipode, find_twisted_antipode, grouplike_basis_elements,
    is_semisimple_algebra, monoid_bialgebra, monoid_structure, op_cop, sweedler_h4,
    validate_bialgebra, MonoidTable,
};
use hopf_core::fixtures::{ks, sweedler, trivial_bialgebra, zmod2, Q};

#[test]
fn one_dimensional_bialgebra_passes() {
    let b = trivial_bialgebra();
    assert!(validate_bialgebra(&b).all_pass());
}

#[test]
fn group_bialgebra_passes_and_perturbation_fails() {
    let b = zmod2();
    assert!(validate_bialgebra(&b).all_pass());
    // increment one comultiplication entry
    let mut comul = b.comul().clone();
    let bumped = Q.add(comul.at(0, 0), &Q.one());
    comul.set(0, 0, bumped);
    let broken = hopf_core::BialgebraFD::new(
        b.algebra().clone(),
        hopf_core::CoalgebraFD::new(2, comul, b.counit().clone()).unwrap(),
    )
    .unwrap();
    let report = validate_bialgebra(&broken);
    assert!(!report.all_pass());
    assert!(report
        .failures()
        .iter()
        .any(|c| c.name.contains("coassoc") || c.name.contains("counit")));
}

#[test]
fn monoid_builders() {
    let trivial = monoid_bialgebra(&MonoidTable::trivial(), Q).unwrap();
    assert_eq!(trivial.dim(), 1);
    let ks = ks();
    assert!(validate_bialgebra(&ks).all_pass());
    let z2 = zmod2();
    assert!(validate_bialgebra(&z2).all_pass());
    assert!(monoid_structure(&ks).is_some());
    assert!(monoid_structure(&sweedler()).is_none());
    // a non-associative table is rejected
    let bad = MonoidTable::new(
        vec!["e".into(), "a".into(), "b".into()],
        vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 1, 0]],
    );
    assert!(bad.is_err());
}

#[test]
fn sweedler_h4_structure() {
    let h = sweedler();
    assert_eq!(h.dim(), 4);
    assert!(validate_bialgebra(&h).all_pass());
    // ε(gx) = 0
    assert!(h.counit().at(0, 3).is_zero());
    // Δ(gx) = gx⊗g + 1⊗gx
    let col: Vec<_> = (0..16).filter(|&r| !h.comul().at(r, 3).is_zero()).collect();
    assert_eq!(col, vec![0 * 4 + 3, 3 * 4 + 1]);
    assert!(sweedler_h4(FieldSpec::Prime(2)).is_err());
}

#[test]
fn convolution_unit_is_two_sided_identity() {
    let b = ks();
    let e = convolution_unit(&b);
    let g = LinearMap::from_fn(2, 2, Q, |r, c| Q.integer(((r + 2 * c) % 3) as i64));
    let left = convolution(&e, &g, b.coalgebra(), b.algebra()).unwrap();
    let right = convolution(&g, &e, b.coalgebra(), b.algebra()).unwrap();
    assert_eq!(left, g);
    assert_eq!(right, g);
}

#[test]
fn convolution_of_identity_squares_grouplikes() {
    let b = zmod2();
    let conv = convolution(&b.id(), &b.id(), b.coalgebra(), b.algebra()).unwrap();
    // e ↦ e² = e, g ↦ g² = e
    let expected = LinearMap::new(2, 2, Q, vec![Q.one(), Q.one(), Q.zero(), Q.zero()]).unwrap();
    assert_eq!(conv, expected);
}

#[test]
fn convolution_is_associative() {
    let b = ks();
    let maps: Vec<LinearMap> = (0..3)
        .map(|k| LinearMap::from_fn(2, 2, Q, |r, c| Q.integer(((r + c + k) % 4) as i64 - 1)))
        .collect();
    let ab = convolution(&maps[0], &maps[1], b.coalgebra(), b.algebra()).unwrap();
    let bc = convolution(&maps[1], &maps[2], b.coalgebra(), b.algebra()).unwrap();
    let left = convolution(&ab, &maps[2], b.coalgebra(), b.algebra()).unwrap();
    let right = convolution(&maps[0], &bc, b.coalgebra(), b.algebra()).unwrap();
    assert_eq!(left, right);
}

#[test]
fn antipode_of_zmod2_is_identity() {
    let b = zmod2();
    let found = find_antipode(&b).unwrap();
    let s = found.antipode.expect("group algebra has an antipode");
    assert!(s.is_identity());
    let e = convolution_unit(&b);
    assert_eq!(convolution(&s, &b.id(), b.coalgebra(), b.algebra()).unwrap(), e);
}

#[test]
fn ks_has_no_antipode_with_certificate() {
    let b = ks();
    let found = find_antipode(&b).unwrap();
    assert!(found.antipode.is_none());
    assert!(found.certificate.augmented_rank > found.certificate.coefficient_rank);
    assert!(find_twisted_antipode(&b).unwrap().antipode.is_none());
}

#[test]
fn sweedler_antipode_has_order_four() {
    let h = sweedler();
    let s = find_antipode(&h).unwrap().antipode.expect("Hopf");
    let s2 = s.compose(&s).unwrap();
    assert!(!s2.is_identity());
    assert!(s2.compose(&s2).unwrap().is_identity());
    // twisted antipode is the cube of the antipode
    let twisted = find_twisted_antipode(&h).unwrap().antipode.unwrap();
    let s3 = s2.compose(&s).unwrap();
    assert_eq!(twisted, s3);
    // grouplikes map to grouplikes
    for z in grouplike_basis_elements(&h) {
        let image = s.column(z);
        let nonzero: Vec<_> = image.iter().filter(|v| !v.is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
    }
}

#[test]
fn twisted_antipode_of_cocommutative_equals_antipode() {
    let b = zmod2();
    let s = find_antipode(&b).unwrap().antipode.unwrap();
    let t = find_twisted_antipode(&b).unwrap().antipode.unwrap();
    assert_eq!(s, t);
}

#[test]
fn op_cop_involution_and_effects() {
    let h = sweedler();
    assert_eq!(op_cop(&h, false, false), *h);
    let cop = op_cop(&h, false, true);
    assert_ne!(cop.comul(), h.comul());
    assert_eq!(op_cop(&cop, false, true), *h);
    let z2 = zmod2();
    assert_eq!(op_cop(&z2, false, true), *z2);
    // twisted antipode presence matches antipode presence on the co-opposite
    let twisted = find_twisted_antipode(&h).unwrap().antipode;
    let via_cop = find_antipode(&op_cop(&h, false, true)).unwrap().antipode;
    assert_eq!(twisted.is_some(), via_cop.is_some());
}

#[test]
fn semisimplicity_by_trace_form() {
    assert!(is_semisimple_algebra(zmod2().algebra()).unwrap());
    assert!(is_semisimple_algebra(ks().algebra()).unwrap());
    assert!(!is_semisimple_algebra(sweedler().algebra()).unwrap());
    let fp = monoid_bialgebra(&MonoidTable::cyclic(2), FieldSpec::Prime(3)).unwrap();
    assert!(is_semisimple_algebra(fp.algebra()).is_err());
}

#[test]
fn prime_field_bialgebra_validates() {
    let f3 = FieldSpec::Prime(3);
    let b = monoid_bialgebra(&MonoidTable::cyclic(3), f3).unwrap();
    assert!(validate_bialgebra(&b).all_pass());
    let s = find_antipode(&b).unwrap().antipode.expect("group algebra");
    // antipode sends g^i to g^{-i}
    assert!(s.compose(&s).unwrap().is_identity());
}
