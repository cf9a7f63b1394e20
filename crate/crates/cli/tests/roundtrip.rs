use ffd_core::parse::{parse_affine, parse_ratfun};
use ffd_core::{ExponentVector, MPoly, RatFun, Rational, UniPoly};
use proptest::prelude::*;

fn unipoly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec((-20i64..=20, 1i64..=5), 0..5).prop_map(|c| {
        UniPoly::from_coeffs(c.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect())
    })
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (unipoly(), unipoly()).prop_filter_map("nonzero denominator", |(n, d)| RatFun::new(n, d).ok())
}

fn mpoly() -> impl Strategy<Value = MPoly> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec((prop::collection::vec(0u32..4, n), ratfun()), 0..5).prop_map(move |terms| {
            MPoly::from_terms(n, terms.into_iter().map(|(e, c)| (ExponentVector::new(e), c))).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn ratfun_round_trip(f in ratfun()) {
        prop_assert_eq!(parse_ratfun(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn mpoly_round_trip(f in mpoly()) {
        prop_assert_eq!(parse_affine(&f.to_string(), f.nvars()).unwrap(), f);
    }
}
