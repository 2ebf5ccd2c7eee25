use mereon::goldfield::{GoldenNum, OrderedField, Sign, Sqrt2Num, PHI_F64};
use proptest::prelude::*;

fn golden() -> impl Strategy<Value = GoldenNum> {
    (-40i64..40, 1i64..12, -40i64..40, 1i64..12).prop_map(|(a, ad, b, bd)| GoldenNum::from_ratios(a, ad, b, bd))
}

fn sqrt2() -> impl Strategy<Value = Sqrt2Num> {
    (-30i64..30, 1i64..9, -30i64..30, 1i64..9).prop_map(|(a, ad, b, bd)| {
        Sqrt2Num::from_ratio(a, ad) + &(Sqrt2Num::root() * &Sqrt2Num::from_ratio(b, bd))
    })
}

fn float_sign(x: f64) -> Sign {
    if x > 0.0 {
        Sign::Positive
    } else if x < 0.0 {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

#[test]
fn phi_satisfies_its_minimal_polynomial() {
    let phi = GoldenNum::phi();
    assert_eq!(phi.square(), phi.clone() + &GoldenNum::one());
    assert_eq!(phi.clone() * &GoldenNum::phi_inv(), GoldenNum::one());
    assert_eq!(GoldenNum::sqrt5(), phi.clone() + &phi - &GoldenNum::one());
    assert!((GoldenNum::phi_pow(4).to_f64() - PHI_F64.powi(4)).abs() < 1e-12);
}

#[test]
fn inverse_of_two_phi_plus_one_is_phi_to_minus_three() {
    let x = GoldenNum::from_ints(1, 2);
    let inv = x.inverse().unwrap();
    assert_eq!(inv, GoldenNum::from_ints(-3, 2));
    assert_eq!(inv, GoldenNum::phi_pow(-3));
    assert!(GoldenNum::zero().inverse().is_err());
}

#[test]
fn display_form() {
    assert_eq!(GoldenNum::from_ratios(-1, 2, 1, 2).to_string(), "-1/2 + (1/2)·phi");
}

proptest! {
    #[test]
    fn field_axioms(a in golden(), b in golden(), c in golden()) {
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() - &a, GoldenNum::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * &a.inverse().unwrap(), GoldenNum::one());
        }
    }

    #[test]
    fn sign_agrees_with_float(a in golden(), b in golden()) {
        let d = a.clone() - &b;
        let f = a.to_f64() - b.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(d.sign(), float_sign(f));
            prop_assert_eq!(a.cmp(&b), b.to_f64().partial_cmp(&a.to_f64()).unwrap().reverse());
        }
    }

    #[test]
    fn norm_is_multiplicative(a in golden(), b in golden()) {
        prop_assert_eq!((a.clone() * &b).norm(), a.norm() * b.norm());
        prop_assert_eq!(a.clone() * &a.conj(), GoldenNum::from_rational(a.norm()));
    }

    #[test]
    fn squares_have_field_roots(a in golden()) {
        let s = a.square().sqrt_in_field().unwrap().expect("square has a root");
        prop_assert_eq!(s.clone(), a.abs());
        prop_assert!(s.sign() != Sign::Negative);
    }

    #[test]
    fn display_parses_back(a in golden()) {
        let back: GoldenNum = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn sqrt2_field_axioms(a in sqrt2(), b in sqrt2()) {
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert!(((a.clone() * &b).to_f64() - a.to_f64() * b.to_f64()).abs() < 1e-9);
        let f = a.to_f64() - b.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!((a.clone() - &b).sign(), float_sign(f));
        }
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * &a.inverse().unwrap(), Sqrt2Num::one());
        }
    }
}
