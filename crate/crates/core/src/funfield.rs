//! Valuations, heights and (truncated) counting functions on `K = k(t)`.
//!
//! Totals are computed from squarefree decompositions; per-place breakdowns
//! come from a full factorization. The two routes are independent and the
//! tests compare them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::factor::{factor, squarefree_decomposition};
use crate::{Error, PlaceSet, Place, RatFun, Result, UniPoly};

/// Which side of the divisor of `f` to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMode {
    Zeros,
    Poles,
}

/// Truncation level `m` for `N^(m)`, or no truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Truncation {
    At(u32),
    Unbounded,
}

impl Truncation {
    fn cap(self, v: u64) -> u64 {
        match self {
            Truncation::At(m) => v.min(m as u64),
            Truncation::Unbounded => v,
        }
    }
}

/// Counting function values for one function, set of places and side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountingReport {
    pub mode: CountMode,
    /// `N_S`, multiplicities counted in full.
    pub total: u64,
    /// `N_S^(m)` for `m = 1` and the requested level.
    pub truncated: BTreeMap<u32, u64>,
    /// Places outside `S` with their multiplicity.
    pub per_place: Vec<(Place, u64)>,
}

fn nonzero(f: &RatFun) -> Result<()> {
    if f.is_zero() {
        Err(Error::ZeroValuation)
    } else {
        Ok(())
    }
}

/// Multiplicity of the conjugacy class of `q` in `poly`, rejecting
/// polynomials that meet the class only partially.
fn class_multiplicity(poly: &UniPoly, q: &UniPoly) -> Result<u64> {
    let k = poly.multiplicity_of(q);
    let rest = poly.div_exact(&q.pow(k as u32)).expect("q^k divides poly");
    if !rest.gcd(q).is_constant() {
        return Err(Error::PlaceSetIncompatible(format!(
            "irr:{} splits a factor of {}",
            q.compact(),
            poly
        )));
    }
    Ok(k)
}

/// Multiplicity of a finite place as a root of `poly`.
fn finite_multiplicity(poly: &UniPoly, p: &Place) -> Result<u64> {
    match p {
        Place::Rational(a) => Ok(poly.root_multiplicity(a)),
        Place::ConjugacyClass(q) => class_multiplicity(poly, q),
        Place::Infinity => unreachable!("infinity is not a finite place"),
    }
}

/// `v_p(f)`, the normalized order of `f` at `p`.
pub fn order_at(f: &RatFun, p: &Place) -> Result<i64> {
    nonzero(f)?;
    match p {
        Place::Infinity => Ok(f.den().deg() as i64 - f.num().deg() as i64),
        _ => Ok(finite_multiplicity(f.num(), p)? as i64 - finite_multiplicity(f.den(), p)? as i64),
    }
}

/// `h(f)`: the number of poles of `f` counted with multiplicity over the
/// algebraic closure, which equals `max(deg num, deg den)`.
pub fn height(f: &RatFun) -> Result<u64> {
    nonzero(f)?;
    Ok(f.max_degree() as u64)
}

/// The divisor of `f`: every place where `v_p(f) != 0`, in canonical order.
pub fn places_of(f: &RatFun) -> Result<Vec<(Place, i64)>> {
    nonzero(f)?;
    let mut out: Vec<(Place, i64)> = Vec::new();
    for (q, e) in factor(f.num()).factors {
        out.push((Place::from_irreducible(q), e as i64));
    }
    for (q, e) in factor(f.den()).factors {
        out.push((Place::from_irreducible(q), -(e as i64)));
    }
    let at_inf = f.den().deg() as i64 - f.num().deg() as i64;
    if at_inf != 0 {
        out.push((Place::Infinity, at_inf));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Zeros of a nonzero polynomial as places with multiplicity (finite places only).
pub fn zero_places(poly: &UniPoly) -> Vec<(Place, u64)> {
    let mut out: Vec<(Place, u64)> = factor(poly)
        .factors
        .into_iter()
        .map(|(q, e)| (Place::from_irreducible(q), e as u64))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn side(f: &RatFun, mode: CountMode) -> (&UniPoly, u64) {
    let (poly, other) = match mode {
        CountMode::Zeros => (f.num(), f.den()),
        CountMode::Poles => (f.den(), f.num()),
    };
    let at_inf = other.deg().saturating_sub(poly.deg()) as u64;
    (poly, at_inf)
}

fn check_compatible(poly: &UniPoly, s: &PlaceSet) -> Result<()> {
    for q in s.conjugacy_classes() {
        class_multiplicity(poly, q)?;
    }
    Ok(())
}

/// `N_{0,S}(f)` / `N_{inf,S}(f)` and their truncations, computed from the
/// squarefree decomposition without factoring.
pub fn counting_value(f: &RatFun, s: &PlaceSet, mode: CountMode, trunc: Truncation) -> Result<u64> {
    nonzero(f)?;
    let (poly, at_inf) = side(f, mode);
    check_compatible(poly, s)?;
    let mut total: u64 = squarefree_decomposition(poly)
        .iter()
        .map(|(part, e)| trunc.cap(*e as u64) * part.deg() as u64)
        .sum();
    total += trunc.cap(at_inf);
    let mut inside = 0;
    for p in s {
        let mult = match p {
            Place::Infinity => at_inf,
            _ => finite_multiplicity(poly, p)?,
        };
        inside += trunc.cap(mult) * p.degree();
    }
    Ok(total - inside)
}

/// Full counting report: `N_S`, `N_S^(1)`, `N_S^(m)` and the places outside
/// `S` that contribute.
pub fn counting(f: &RatFun, s: &PlaceSet, mode: CountMode, m: Truncation) -> Result<CountingReport> {
    let total = counting_value(f, s, mode, Truncation::Unbounded)?;
    let mut truncated = BTreeMap::new();
    truncated.insert(1, counting_value(f, s, mode, Truncation::At(1))?);
    if let Truncation::At(level) = m {
        if level == 0 {
            return Err(Error::InvalidArgument("truncation level must be positive".into()));
        }
        truncated.insert(level, counting_value(f, s, mode, m)?);
    }
    let (poly, at_inf) = side(f, mode);
    let mut per_place: Vec<(Place, u64)> = zero_places(poly);
    if at_inf > 0 {
        per_place.push((Place::Infinity, at_inf));
    }
    per_place.retain(|(p, _)| !s.contains(p));
    Ok(CountingReport {
        mode,
        total,
        truncated,
        per_place,
    })
}

/// `h(f_0, ..., f_n)`: the height of the point `[f_0 : ... : f_n]`, i.e.
/// `sum_p -min_i v_p(f_i) deg p`. Zero entries are ignored.
pub fn projective_height(fs: &[RatFun]) -> Result<u64> {
    let nonzero: Vec<&RatFun> = fs.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::ZeroInput("projective_height"));
    }
    // Clear denominators: with P_i = L f_i coprime-free integral, the height
    // is max deg P_i - deg gcd(P_i).
    let lcm = nonzero.iter().fold(UniPoly::one(), |acc, f| {
        let g = acc.gcd(f.den());
        (&acc * f.den()).div_exact(&g).expect("gcd divides product")
    });
    let polys: Vec<UniPoly> = nonzero
        .iter()
        .map(|f| &(f.num() * &lcm).div_exact(f.den()).expect("den divides lcm") * &UniPoly::one())
        .collect();
    let g = polys.iter().fold(UniPoly::zero(), |acc, p| acc.gcd(p));
    let max_deg = polys.iter().map(UniPoly::deg).max().unwrap_or(0);
    Ok((max_deg - g.deg()) as u64)
}

/// `chi_S^+ = max(0, 2g - 2 + |S|)` with genus 0.
pub fn chi_plus(s: &PlaceSet) -> u64 {
    s.chi().max(0) as u64
}

/// Whether `v_p(f) = 0` for every place outside `S`.
pub fn is_s_unit(f: &RatFun, s: &PlaceSet) -> Result<bool> {
    Ok(counting_value(f, s, CountMode::Zeros, Truncation::Unbounded)? == 0
        && counting_value(f, s, CountMode::Poles, Truncation::Unbounded)? == 0)
}

/// Whether `v_p(f) >= 0` for every place outside `S`.
pub fn is_s_integer(f: &RatFun, s: &PlaceSet) -> Result<bool> {
    Ok(counting_value(f, s, CountMode::Poles, Truncation::Unbounded)? == 0)
}

/// `S` together with every zero and pole of the `g_i`; each `g_i` is a unit
/// for the returned set.
pub fn enlarge_places(gs: &[RatFun], s: &PlaceSet) -> Result<PlaceSet> {
    let mut out = s.clone();
    for g in gs {
        if g.is_zero() {
            return Err(Error::ZeroInput("enlarge_places"));
        }
        for (p, _) in places_of(g)? {
            out.insert(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ratfun;

    fn rf(s: &str) -> RatFun {
        parse_ratfun(s).unwrap()
    }

    fn set(s: &str) -> PlaceSet {
        PlaceSet::parse_list(s).unwrap()
    }

    /// Oracle: sum over enumerated places of the divisor.
    fn place_sum(f: &RatFun, sign: i64) -> u64 {
        places_of(f)
            .unwrap()
            .iter()
            .map(|(p, v)| ((v * sign).max(0) as u64) * p.degree())
            .sum()
    }

    #[test]
    fn order_examples() {
        let f = rf("t^2/(t-1)");
        assert_eq!(order_at(&f, &Place::int(0)).unwrap(), 2);
        assert_eq!(order_at(&f, &Place::Infinity).unwrap(), -1);
        let g = rf("(t^2+1)^2");
        assert_eq!(order_at(&g, &"irr:t^2+1".parse().unwrap()).unwrap(), 2);
        assert_eq!(order_at(&RatFun::zero(), &Place::Infinity), Err(Error::ZeroValuation));
    }

    #[test]
    fn degree_zero_for_examples() {
        let f = rf("t^2/(t-1)");
        let total: i64 = places_of(&f)
            .unwrap()
            .iter()
            .map(|(p, v)| v * p.degree() as i64)
            .sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn height_examples() {
        let f = rf("t^2/(t-1)");
        assert_eq!(height(&f).unwrap(), 2);
        assert_eq!(place_sum(&f, -1), 2);
        assert_eq!(height(&rf("5")).unwrap(), 0);
        let g = rf("(t-1)/t^2");
        assert_eq!(height(&g).unwrap(), 2);
        assert_eq!(place_sum(&g, -1), 2);
        assert_eq!(height(&g.recip().unwrap()).unwrap(), 2);
        assert!(height(&RatFun::zero()).is_err());
    }

    #[test]
    fn counting_examples() {
        let f = rf("t^3*(t-1)/(t-2)^2");
        let r = counting(&f, &set("inf"), CountMode::Zeros, Truncation::At(1)).unwrap();
        assert_eq!(r.total, 4);
        assert_eq!(r.truncated[&1], 2);

        let g = rf("(t^2+1)^2");
        let r = counting(&g, &set(""), CountMode::Zeros, Truncation::At(1)).unwrap();
        assert_eq!(r.total, 4);
        assert_eq!(r.truncated[&1], 2);
        assert_eq!(r.per_place, vec![("irr:t^2+1".parse().unwrap(), 2)]);

        let r = counting(&rf("t"), &set("0,inf"), CountMode::Zeros, Truncation::Unbounded).unwrap();
        assert_eq!(r.total, 0);
        assert!(r.per_place.is_empty());
    }

    #[test]
    fn counting_poles_includes_infinity() {
        let f = rf("t^5/(t+1)");
        let r = counting(&f, &set(""), CountMode::Poles, Truncation::At(2)).unwrap();
        // pole of order 1 at -1 and order 4 at infinity
        assert_eq!(r.total, 5);
        assert_eq!(r.truncated[&1], 2);
        assert_eq!(r.truncated[&2], 3);
    }

    #[test]
    fn incompatible_class_rejected() {
        // a directly constructed, reducible "class"
        let bad = Place::ConjugacyClass(UniPoly::from_ints(&[-1, 0, 1]));
        let s: PlaceSet = [bad].into_iter().collect();
        let err = counting_value(&rf("t-1"), &s, CountMode::Zeros, Truncation::Unbounded);
        assert!(matches!(err, Err(Error::PlaceSetIncompatible(_))));
    }

    #[test]
    fn projective_height_examples() {
        assert_eq!(projective_height(&[rf("1"), rf("t^2"), rf("1/t")]).unwrap(), 3);
        assert_eq!(projective_height(&[rf("1"), rf("7")]).unwrap(), 0);
        assert_eq!(projective_height(&[rf("1"), rf("t^6"), rf("t^3")]).unwrap(), 6);
        assert!(projective_height(&[RatFun::zero()]).is_err());
    }

    #[test]
    fn chi_plus_examples() {
        assert_eq!(chi_plus(&set("0,1,inf")), 1);
        assert_eq!(chi_plus(&set("")), 0);
        assert_eq!(chi_plus(&set("inf,irr:t^2+1")), 1);
    }

    #[test]
    fn unit_and_integer_examples() {
        let s = set("0,inf");
        assert!(is_s_unit(&rf("t"), &s).unwrap());
        assert!(!is_s_unit(&rf("t-1"), &s).unwrap());
        assert!(is_s_integer(&rf("t-1"), &s).unwrap());
        assert!(!is_s_integer(&rf("1/(t-1)"), &set("inf")).unwrap());
    }

    #[test]
    fn enlarge_examples() {
        assert_eq!(enlarge_places(&[rf("t")], &set("")).unwrap(), set("0,inf"));
        assert_eq!(
            enlarge_places(&[rf("t^2+1")], &set("inf")).unwrap(),
            set("inf,irr:t^2+1")
        );
        assert_eq!(enlarge_places(&[rf("2")], &set("")).unwrap(), set(""));
    }
}
