//! Seeded instance generators.
//!
//! All randomness derives from one 64-bit seed; instance `i` draws from its
//! own ChaCha stream, so instances are independent of evaluation order.
//! Degenerate draws are resampled up to [`RETRY_BUDGET`] times and counted.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::mpoly::{homogeneous_vars, vanishing_subsets};
use crate::parse::parse_mpoly;
use crate::toric::TorusPoint;
use crate::{ExponentVector, MPoly, Place, PlaceSet, RatFun, Rational, UniPoly};

pub const RETRY_BUDGET: u32 = 64;
const COEFF_BOUND: i64 = 9;

/// The generator for instance `index` under `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// An instance together with the number of degenerate draws rejected
/// before it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generated<T> {
    pub instance: T,
    pub rejected: u32,
}

fn retry<T>(rng: &mut ChaCha8Rng, mut draw: impl FnMut(&mut ChaCha8Rng) -> Option<T>) -> Result<Generated<T>, u32> {
    for rejected in 0..RETRY_BUDGET {
        if let Some(instance) = draw(rng) {
            return Ok(Generated { instance, rejected });
        }
    }
    Err(RETRY_BUDGET)
}

fn nonzero_int(rng: &mut impl Rng, bound: i64) -> i64 {
    let v = rng.random_range(1..=bound);
    if rng.random_bool(0.5) {
        -v
    } else {
        v
    }
}

/// Random polynomial of degree exactly `deg` with small integer coefficients.
pub fn poly_of_degree(rng: &mut impl Rng, deg: usize) -> UniPoly {
    let mut c: Vec<i64> = (0..deg).map(|_| rng.random_range(-COEFF_BOUND..=COEFF_BOUND)).collect();
    c.push(nonzero_int(rng, COEFF_BOUND));
    UniPoly::from_ints(&c)
}

/// Random nonzero polynomial of degree at most `deg_max`.
pub fn random_poly(rng: &mut impl Rng, deg_max: usize) -> UniPoly {
    let d = rng.random_range(0..=deg_max);
    poly_of_degree(rng, d)
}

/// Random polynomial of degree between 1 and `deg_max`.
pub fn random_nonconstant_poly(rng: &mut impl Rng, deg_max: usize) -> UniPoly {
    let d = rng.random_range(1..=deg_max.max(1));
    poly_of_degree(rng, d)
}

/// `c q^k` with `deg <= deg_max`, a factor with a repeated root.
fn high_multiplicity_poly(rng: &mut impl Rng, deg_max: usize) -> UniPoly {
    let q = random_nonconstant_poly(rng, deg_max.clamp(1, 3));
    let qd = q.deg().max(1);
    let kmax = (deg_max / qd).clamp(1, 6) as u32;
    let k = rng.random_range(1..=kmax);
    let c = Rational::from_integer(nonzero_int(rng, COEFF_BOUND).into());
    q.pow(k).scale(&c)
}

fn place_pool() -> Vec<Place> {
    let irr = Place::conjugacy_class(UniPoly::from_ints(&[1, 0, 1])).expect("t^2 + 1 is irreducible");
    vec![Place::int(0), Place::int(1), Place::int(-1), Place::int(2), Place::Infinity, irr]
}

/// A random subset of a fixed pool of six places, of size in `min..=max`.
pub fn random_place_set(rng: &mut impl Rng, min: usize, max: usize) -> PlaceSet {
    let mut pool = place_pool();
    pool.shuffle(rng);
    let k = rng.random_range(min.min(pool.len())..=max.min(pool.len()));
    pool.into_iter().take(k).collect()
}

/// `f_0 + ... + f_n = 1` with no vanishing proper subsum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BmInstance {
    pub fs: Vec<RatFun>,
    pub s: PlaceSet,
}

/// `f_i = A_i / C` for `i < n` and `f_n = (C - sum A_i) / C`; half of the
/// draws use high-multiplicity numerators so that truncation matters.
pub fn bm_instance(rng: &mut ChaCha8Rng, n: usize, deg_max: usize) -> Result<Generated<BmInstance>, u32> {
    let s = random_place_set(rng, 0, 6);
    retry(rng, |rng| {
        let powers = rng.random_bool(0.5);
        let draw = |rng: &mut ChaCha8Rng| if powers { high_multiplicity_poly(rng, deg_max) } else { random_poly(rng, deg_max) };
        let c = if rng.random_bool(0.3) { UniPoly::one() } else { draw(rng) };
        let a: Vec<UniPoly> = (0..n).map(|_| draw(rng)).collect();
        let last = a.iter().fold(c.clone(), |acc, x| &acc - x);
        let cf = RatFun::from_poly(c);
        let mut fs = Vec::with_capacity(n + 1);
        for p in a.into_iter().chain(std::iter::once(last)) {
            let f = RatFun::from_poly(p).checked_div(&cf).ok()?;
            if f.is_zero() {
                return None;
            }
            fs.push(f);
        }
        vanishing_subsets(&fs).ok()?.is_empty().then(|| BmInstance { fs, s: s.clone() })
    })
}

/// `n` random `S`-units: `c prod_p q_p^{a_p}` over the finite places of `S`,
/// with total degree 0 when infinity is not in `S`.
pub fn s_unit_tuple(rng: &mut impl Rng, s: &PlaceSet, n: usize) -> Vec<RatFun> {
    let finite: Vec<(UniPoly, i64)> = s
        .iter()
        .filter_map(|p| p.local_polynomial().map(|q| (q, p.degree() as i64)))
        .collect();
    let free_degree = s.contains(&Place::Infinity);
    (0..n)
        .map(|_| {
            let mut exps = vec![0i64; finite.len()];
            for _ in 0..RETRY_BUDGET {
                let trial: Vec<i64> = finite.iter().map(|_| rng.random_range(-3..=3)).collect();
                let deg: i64 = trial.iter().zip(&finite).map(|(a, (_, d))| a * d).sum();
                if free_degree || deg == 0 {
                    exps = trial;
                    break;
                }
            }
            let c = Rational::from_integer(nonzero_int(rng, 5).into());
            let mut u = RatFun::constant(c);
            for ((q, _), a) in finite.iter().zip(exps) {
                let f = RatFun::from_poly(q.clone()).pow(a).expect("local polynomial is nonzero");
                u = &u * &f;
            }
            u
        })
        .collect()
}

/// `F` of degree `d` in `n` variables, `S`-units `g` and `S`, off the
/// subsum-vanishing locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProximityInstance {
    pub f: MPoly,
    pub g: Vec<RatFun>,
    pub s: PlaceSet,
}

fn monomials(n: usize, d: u32) -> Vec<ExponentVector> {
    fn rec(i: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if i == n {
            out.push(ExponentVector::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(i + 1, n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, d, &mut Vec::new(), &mut out);
    out
}

fn small_ratfun(rng: &mut impl Rng) -> RatFun {
    let num = random_poly(rng, 2);
    if rng.random_bool(0.25) {
        RatFun::new(num, random_nonconstant_poly(rng, 1)).expect("nonzero denominator")
    } else {
        RatFun::from_poly(num)
    }
}

/// Half of the draws tune the constant term so that `F(g)` vanishes at a
/// rational place of `S`, which makes the left side positive.
pub fn proximity_instance(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Result<Generated<ProximityInstance>, u32> {
    retry(rng, |rng| {
        let s = random_place_set(rng, 2, 5);
        let g = s_unit_tuple(rng, &s, n);
        let mut terms: Vec<(ExponentVector, RatFun)> = Vec::new();
        for e in monomials(n, d) {
            let top = e.total_degree() == d;
            if e.is_zero() || (top && terms.iter().all(|(t, _)| t.total_degree() < d)) || rng.random_bool(0.6) {
                terms.push((e, small_ratfun(rng)));
            }
        }
        let mut f = MPoly::from_terms(n, terms).ok()?;
        if rng.random_bool(0.5) {
            let target = s.iter().find_map(|p| match p {
                Place::Rational(a) => Some(a.clone()),
                _ => None,
            })?;
            let rest = &f - &MPoly::constant(n, f.constant_term());
            let value = rest.evaluate(&g).ok()?;
            let den = value.den().eval(&target);
            if den.is_zero() {
                return None;
            }
            let at = value.num().eval(&target) / den;
            if at.is_zero() {
                return None;
            }
            f = &rest + &MPoly::constant(n, RatFun::constant(-at));
        }
        if f.constant_term().is_zero() || f.total_degree() != Some(d) {
            return None;
        }
        if f.normalize_at_origin().ok()?.vanishing_subsums(&g).ok()?.degenerate {
            return None;
        }
        Some(ProximityInstance { f, g, s })
    })
}

/// A torus point `(f_1^l, ..., f_n^l)`, so every valuation is a multiple of `l`.
pub fn campana_point(rng: &mut impl Rng, ell: u32, n: usize, deg_max: usize) -> TorusPoint {
    let coords = (0..n).map(|_| RatFun::from_poly(random_nonconstant_poly(rng, deg_max).pow(ell))).collect();
    TorusPoint::new(coords).expect("powers of nonzero polynomials are nonzero")
}

/// A line `A` in general position on `P^2` and a point meeting it only with
/// even multiplicity away from infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncationGapInstance {
    pub a: MPoly,
    pub point: TorusPoint,
    pub s: PlaceSet,
}

/// `A = a0 x0 + a1 x1 + a2 x2` with all `a_i` nonzero, `u_1` random and
/// `u_2 = (c^2 - a0 - a1 u_1) / a2`, so that `A(1, u) = c^2`.
pub fn truncation_gap_instance(rng: &mut ChaCha8Rng, deg_max: usize) -> Result<Generated<TruncationGapInstance>, u32> {
    retry(rng, |rng| {
        let alpha: Vec<i64> = (0..3).map(|_| nonzero_int(rng, 5)).collect();
        let text = format!("{}*x0 + {}*x1 + {}*x2", alpha[0], alpha[1], alpha[2]);
        let a = parse_mpoly(&text, &homogeneous_vars(2)).ok()?;
        let u1 = random_nonconstant_poly(rng, deg_max);
        let c = if rng.random_bool(0.3) { high_multiplicity_poly(rng, deg_max) } else { random_nonconstant_poly(rng, deg_max) };
        let q = |v: i64| Rational::from_integer(v.into());
        let num = &(&c * &c) - &(&UniPoly::constant(q(alpha[0])) + &u1.scale(&q(alpha[1])));
        let u2 = num.scale(&q(alpha[2]).recip());
        if u2.is_zero() {
            return None;
        }
        let point = TorusPoint::new(vec![RatFun::from_poly(u1), RatFun::from_poly(u2)]).ok()?;
        let s: PlaceSet = std::iter::once(Place::Infinity).collect();
        Some(TruncationGapInstance { a, point, s })
    })
}

/// `G = x^3 + y^3 + 1` at `(f_1^l, f_2^l)` with `S = {inf}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbcInstance {
    pub g: MPoly,
    pub point: Vec<RatFun>,
    pub s: PlaceSet,
}

/// Curated member of the cubic family. Included only if `f_1, f_2` are
/// coprime, `P = G(g)` is squarefree (`gcd(P, P') = 1`) and no leading
/// terms cancel; both clauses then hold by a direct count.
pub fn abc_curated(rng: &mut ChaCha8Rng, ell: u32, deg_max: usize) -> Result<Generated<AbcInstance>, u32> {
    let g = parse_mpoly("x^3 + y^3 + 1", &["x".to_string(), "y".to_string()]).expect("fixed polynomial");
    retry(rng, |rng| {
        let f1 = random_nonconstant_poly(rng, deg_max);
        let f2 = random_nonconstant_poly(rng, deg_max);
        if !f1.gcd(&f2).is_constant() {
            return None;
        }
        let p = &(&f1.pow(3 * ell) + &f2.pow(3 * ell)) + &UniPoly::one();
        let top = 3 * ell as usize * f1.deg().max(f2.deg());
        if p.deg() != top || !p.gcd(&p.derivative()).is_constant() {
            return None;
        }
        let point = vec![RatFun::from_poly(f1.pow(ell)), RatFun::from_poly(f2.pow(ell))];
        let s: PlaceSet = std::iter::once(Place::Infinity).collect();
        Some(AbcInstance { g: g.clone(), point, s })
    })
}

/// Pairwise coprime `(f_0, f_1, f_2)` of degree at most `deg_bound`, not all
/// constant.
pub fn coprime_triple(rng: &mut impl Rng, deg_bound: usize) -> [UniPoly; 3] {
    for _ in 0..RETRY_BUDGET {
        let t = [random_poly(rng, deg_bound), random_poly(rng, deg_bound), random_poly(rng, deg_bound)];
        let coprime = (0..3).all(|i| t[i].gcd(&t[(i + 1) % 3]).is_constant());
        if coprime && t.iter().any(|f| !f.is_constant()) {
            return t;
        }
    }
    [UniPoly::t(), UniPoly::from_ints(&[1, 1]), UniPoly::one()]
}

/// A coprime triple with exponents in `m .. m + window`.
pub fn power_tuple(rng: &mut impl Rng, deg_bound: usize, m: u32, window: u32) -> ([UniPoly; 3], [u32; 3]) {
    let triple = coprime_triple(rng, deg_bound);
    let e = [0; 3].map(|_: u32| rng.random_range(m..m + window.max(1)));
    (triple, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funfield::is_s_unit;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: u64 = instance_rng(5, 3).random();
        let b: u64 = instance_rng(5, 3).random();
        let c: u64 = instance_rng(5, 4).random();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn bm_instances_sum_to_one() {
        for i in 0..20 {
            let g = bm_instance(&mut instance_rng(1, i), 1 + (i as usize % 3), 5).unwrap();
            let sum = g.instance.fs.iter().fold(RatFun::zero(), |acc, f| &acc + f);
            assert!(sum.is_one());
            assert!(g.instance.s.len() <= 6);
        }
        let a = bm_instance(&mut instance_rng(1, 0), 1, 5).unwrap();
        let b = bm_instance(&mut instance_rng(1, 0), 1, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.instance.fs.len(), 2);
    }

    #[test]
    fn units_over_zero_and_infinity_are_monomials() {
        let s = PlaceSet::parse_list("0,inf").unwrap();
        for u in s_unit_tuple(&mut instance_rng(7, 0), &s, 2) {
            assert!(is_s_unit(&u, &s).unwrap());
            assert_eq!(u.num().coeffs().iter().filter(|c| !c.is_zero()).count(), 1);
        }
        let s = PlaceSet::parse_list("1,2,irr:t^2+1").unwrap();
        for u in s_unit_tuple(&mut instance_rng(7, 1), &s, 3) {
            assert!(is_s_unit(&u, &s).unwrap());
        }
    }

    #[test]
    fn campana_points_are_powers() {
        let u = campana_point(&mut instance_rng(3, 0), 4, 2, 3);
        for c in u.coords() {
            for (_, e) in crate::factor::squarefree_decomposition(c.num()) {
                assert_eq!(e % 4, 0);
            }
        }
    }

    #[test]
    fn proximity_instances_are_units() {
        for i in 0..10 {
            let g = proximity_instance(&mut instance_rng(2, i), 2, 2).unwrap().instance;
            assert_eq!(g.f.total_degree(), Some(2));
            for gi in &g.g {
                assert!(is_s_unit(gi, &g.s).unwrap());
            }
        }
    }

    #[test]
    fn monomial_count() {
        assert_eq!(monomials(2, 2).len(), 6);
        assert_eq!(monomials(1, 1).len(), 2);
    }
}
