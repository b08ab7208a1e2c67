use exact_kernel::field::{format_scalar, parse_scalar, FieldSpec, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn rejects_non_canonical_spellings() {
    let q = FieldSpec::Rationals;
    for bad in ["2/4", "1/1", "-0", "03", "1/-2", "1/0", "", "a", "+1", "0/3"] {
        assert!(parse_scalar(&q, bad).is_err(), "accepted {bad:?}");
    }
    let f7 = FieldSpec::Prime(7);
    for bad in ["-1", "7", "12", "1/2", "00"] {
        assert!(parse_scalar(&f7, bad).is_err(), "accepted {bad:?}");
    }
    assert_eq!(parse_scalar(&f7, "6").unwrap(), f7.integer(6));
}

proptest! {
    #[test]
    fn parse_then_serialize_is_identity(n in -1000i64..1000, d in 1i64..1000) {
        let q = FieldSpec::Rationals;
        let x = Rational::new(BigInt::from(n), BigInt::from(d));
        let s = format_scalar(&q, &x);
        let back = parse_scalar(&q, &s).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn prime_field_round_trip(n in 0i64..97) {
        let f = FieldSpec::Prime(97);
        let x = f.integer(n);
        prop_assert_eq!(parse_scalar(&f, &format_scalar(&f, &x)).unwrap(), x);
    }
}
