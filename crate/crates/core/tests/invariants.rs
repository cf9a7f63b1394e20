use ffd_core::factor::is_irreducible;
use ffd_core::funfield::counting_value;
use ffd_core::toric::{boundary_weil, Fan, TorusPoint};
use ffd_core::verify::generators::instance_rng;
use ffd_core::verify::{brownawell_masser, generators, Status};
use ffd_core::{counting, factor, height, places_of, squarefree_decomposition, CountMode, Place, PlaceSet, RatFun, Truncation, UniPoly};
use proptest::prelude::*;

fn unipoly(max_len: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-12i64..=12, 1..=max_len).prop_map(|c| UniPoly::from_ints(&c))
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = UniPoly> {
    unipoly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (nonzero_poly(6), nonzero_poly(6), 0u32..3, -2i64..=2).prop_map(|(n, d, k, a)| {
        let shift = UniPoly::from_ints(&[-a, 1]).pow(k);
        RatFun::new(&n * &shift, d).unwrap()
    })
}

fn place_set() -> impl Strategy<Value = PlaceSet> {
    prop::sample::subsequence(vec!["0", "1", "-1", "2", "inf", "irr:t^2+1", "irr:t^2-2"], 0..=4)
        .prop_map(|xs| PlaceSet::parse_list(&xs.join(",")).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn divisor_has_degree_zero(f in ratfun()) {
        let places = places_of(&f).unwrap();
        let total: i64 = places.iter().map(|(p, v)| v * p.degree() as i64).sum();
        prop_assert_eq!(total, 0);
        let poles: i64 = places.iter().map(|(p, v)| (-v).max(0) * p.degree() as i64).sum();
        prop_assert_eq!(poles as u64, height(&f).unwrap());
    }

    #[test]
    fn counting_routes_agree(f in ratfun(), s in place_set(), m in 1u32..4) {
        for mode in [CountMode::Zeros, CountMode::Poles] {
            let rep = counting(&f, &s, mode, Truncation::At(m)).unwrap();
            let full: u64 = rep.per_place.iter().map(|(p, v)| v * p.degree()).sum();
            let cut: u64 = rep.per_place.iter().map(|(p, v)| (*v).min(m as u64) * p.degree()).sum();
            prop_assert_eq!(rep.total, full);
            prop_assert_eq!(rep.truncated[&m], cut);
            prop_assert!(rep.truncated[&1] <= rep.truncated[&m] && rep.truncated[&m] <= rep.total);
        }
    }

    #[test]
    fn factorizations_expand(f in nonzero_poly(7)) {
        let fac = factor(&f);
        prop_assert_eq!(fac.expand(), f.clone());
        for (q, _) in &fac.factors {
            prop_assert!(is_irreducible(q));
        }
        let parts = squarefree_decomposition(&f);
        let lc = f.leading().cloned().unwrap();
        let rebuilt = parts.iter().fold(UniPoly::constant(lc), |acc, (p, e)| &acc * &p.pow(*e));
        prop_assert_eq!(rebuilt, f);
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(5), b in nonzero_poly(5), c in nonzero_poly(3)) {
        let (x, y) = (&a * &c, &b * &c);
        let g = x.gcd(&y);
        prop_assert!(x.div_exact(&g).is_some() && y.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c.monic()).is_some());
    }

    #[test]
    fn cone_decomposition_recovers_valuations(n in 2usize..=3, seed in 0u64..1000) {
        let fan = Fan::projective(n).unwrap();
        let mut rng = instance_rng(seed, 0);
        let fs: Vec<RatFun> = (0..=n).map(|_| RatFun::from_poly(generators::random_poly(&mut rng, 3))).collect();
        let u = TorusPoint::from_homogeneous(&fs).unwrap();
        for p in [Place::int(0), Place::int(1), Place::Infinity] {
            let w = u.valuations(&p).unwrap();
            let mut sum = vec![0i64; n];
            for (j, ray) in fan.rays().iter().enumerate() {
                let lam = boundary_weil(&fan, j, &u, &p).unwrap() as i64;
                for k in 0..n {
                    sum[k] += lam * ray[k];
                }
            }
            prop_assert_eq!(sum, w);
        }
    }
}

#[test]
fn generated_bm_instances_hold() {
    for i in 0..60 {
        let inst = generators::bm_instance(&mut instance_rng(17, i), 1 + (i as usize % 3), 12).unwrap().instance;
        let r = brownawell_masser(&inst.fs, &inst.s).unwrap();
        assert_eq!(r.status, Status::Asserted);
        assert!(r.holds, "instance {i}: {r:?}");
    }
}

#[test]
fn truncation_is_monotone_in_s() {
    let f = ffd_core::parse::parse_ratfun("t^3*(t-1)^2*(t^2+1)/(t+2)").unwrap();
    let small = PlaceSet::parse_list("0").unwrap();
    let large = PlaceSet::parse_list("0,1,irr:t^2+1").unwrap();
    let a = counting_value(&f, &small, CountMode::Zeros, Truncation::Unbounded).unwrap();
    let b = counting_value(&f, &large, CountMode::Zeros, Truncation::Unbounded).unwrap();
    assert_eq!((a, b), (4, 0));
}
