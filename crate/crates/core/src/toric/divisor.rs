//! Torus points, charts and Weil functions of boundary and hypersurface
//! divisors on the constant model `C x X`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::Fan;
use crate::funfield::{order_at, places_of};
use crate::mpoly::ExponentVector;
use crate::{Error, MPoly, Place, PlaceSet, RatFun, Result, Truncation};

/// A point `(u_1, ..., u_n)` of the torus over `K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TorusPoint(Vec<RatFun>);

impl TorusPoint {
    pub fn new(coords: Vec<RatFun>) -> Result<Self> {
        if coords.iter().any(RatFun::is_zero) {
            return Err(Error::ZeroInput("torus point coordinate"));
        }
        Ok(TorusPoint(coords))
    }

    /// `[f_0 : ... : f_n]` with every `f_i` nonzero, as `u_i = f_i / f_0`.
    pub fn from_homogeneous(fs: &[RatFun]) -> Result<Self> {
        let (f0, rest) = fs.split_first().ok_or(Error::ZeroInput("homogeneous point"))?;
        if f0.is_zero() {
            return Err(Error::ZeroInput("homogeneous point coordinate"));
        }
        Self::new(rest.iter().map(|f| f / f0).collect())
    }

    pub fn coords(&self) -> &[RatFun] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// `w = (v_p(u_1), ..., v_p(u_n))`.
    pub fn valuations(&self, p: &Place) -> Result<Vec<i64>> {
        self.0.iter().map(|u| order_at(u, p)).collect()
    }

    /// Every place where some coordinate has a zero or pole.
    pub fn support_places(&self) -> Result<BTreeSet<Place>> {
        let mut out = BTreeSet::new();
        for u in &self.0 {
            for (p, _) in places_of(u)? {
                out.insert(p);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn check_dim(fan: &Fan, u: &TorusPoint) -> Result<()> {
    if u.dim() != fan.dim() {
        return Err(Error::ArityMismatch {
            expected: fan.dim(),
            got: u.dim(),
        });
    }
    Ok(())
}

/// `i_sigma(u) = (u^{m_1}, ..., u^{m_n})` for the dual basis of the cone.
pub fn chart_coordinates(fan: &Fan, cone: usize, u: &TorusPoint) -> Result<Vec<RatFun>> {
    check_dim(fan, u)?;
    let duals = fan.dual_basis(cone)?;
    duals
        .iter()
        .map(|m| {
            let mut acc = RatFun::one();
            for (mk, uk) in m.iter().zip(u.coords()) {
                let e = mk
                    .to_integer()
                    .to_i64()
                    .filter(|_| mk.is_integer())
                    .ok_or_else(|| Error::Unsupported(format!("cone {cone} is not smooth")))?;
                if e != 0 {
                    acc = &acc * &uk.pow(e)?;
                }
            }
            Ok(acc)
        })
        .collect()
}

/// The first maximal cone whose chart coordinates are all integral at `p`.
pub fn admissible_cone(fan: &Fan, u: &TorusPoint, p: &Place) -> Result<usize> {
    check_dim(fan, u)?;
    let w = u.valuations(p)?;
    fan.locate(&w)
        .ok_or_else(|| Error::MalformedFan(format!("valuation vector {w:?} lies outside the fan")))
}

/// `lambda_{D_rho, p}(u)`: the coefficient of the ray in the decomposition
/// of `w = (v_p(u_i))` over the generators of a cone containing it.
pub fn boundary_weil(fan: &Fan, ray: usize, u: &TorusPoint, p: &Place) -> Result<u64> {
    if ray >= fan.rays().len() {
        return Err(Error::RayNotInFan(ray.to_string()));
    }
    let cone = admissible_cone(fan, u, p)?;
    let w = u.valuations(p)?;
    Ok(match fan.cones()[cone].iter().position(|&j| j == ray) {
        Some(k) => fan.cone_coordinates(cone, &w)[k]
            .to_integer()
            .to_u64()
            .expect("coordinates in a smooth cone are nonnegative integers"),
        None => 0,
    })
}

/// Resolves a ray given as an integer vector.
pub fn ray_by_vector(fan: &Fan, ray: &[i64]) -> Result<usize> {
    fan.ray_index(ray)
        .ok_or_else(|| Error::RayNotInFan(format!("{ray:?}")))
}

/// How a hypersurface divisor was specified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisorSource {
    /// Homogeneous `F` in `x_0, ..., x_n` on the standard fan of `P^n`.
    Homogeneous(MPoly),
    /// One polynomial `f_sigma` per maximal cone.
    PerChart,
    /// Closure of `{L = 0}` for a polynomial `L` on the torus.
    Torus(MPoly),
}

/// A divisor not supported on the boundary, given by its local equations
/// `f_sigma` in every chart, normalized to `f_sigma(0) = 1` where possible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceDivisor {
    source: DivisorSource,
    charts: Vec<MPoly>,
}

fn normalized(f: MPoly) -> MPoly {
    f.normalize_at_origin().unwrap_or(f)
}

impl HypersurfaceDivisor {
    pub fn homogeneous(fan: &Fan, f: MPoly) -> Result<Self> {
        let n = fan
            .projective_dimension()
            .ok_or_else(|| Error::Unsupported("homogeneous divisors need the standard projective fan".into()))?;
        if f.nvars() != n + 1 {
            return Err(Error::ArityMismatch {
                expected: n + 1,
                got: f.nvars(),
            });
        }
        if f.is_zero() || !f.is_homogeneous() {
            return Err(Error::InvalidArgument(format!("{} is not a nonzero homogeneous polynomial", f.render(&crate::mpoly::homogeneous_vars(n)))));
        }
        let charts = fan
            .cones()
            .iter()
            .enumerate()
            .map(|(i, cone)| {
                let subs: Vec<MPoly> = (0..=n)
                    .map(|j| match cone.iter().position(|&r| r == j) {
                        Some(k) => MPoly::var(n, k),
                        None => MPoly::one(n),
                    })
                    .collect();
                debug_assert!(!cone.contains(&i));
                f.compose(&subs).map(normalized)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HypersurfaceDivisor {
            source: DivisorSource::Homogeneous(f),
            charts,
        })
    }

    pub fn per_chart(fan: &Fan, charts: Vec<MPoly>) -> Result<Self> {
        if charts.len() != fan.cones().len() {
            return Err(Error::ArityMismatch {
                expected: fan.cones().len(),
                got: charts.len(),
            });
        }
        if let Some(bad) = charts.iter().find(|f| f.nvars() != fan.dim()) {
            return Err(Error::ArityMismatch {
                expected: fan.dim(),
                got: bad.nvars(),
            });
        }
        if charts.iter().any(MPoly::is_zero) {
            return Err(Error::ZeroInput("chart polynomial"));
        }
        Ok(HypersurfaceDivisor {
            source: DivisorSource::PerChart,
            charts: charts.into_iter().map(normalized).collect(),
        })
    }

    /// Builds every `f_sigma` from a torus polynomial `L(u)` by substituting
    /// `u_k = prod_j y_j^{(v_j)_k}` and clearing the monomial denominator.
    pub fn from_torus_polynomial(fan: &Fan, l: MPoly) -> Result<Self> {
        if l.nvars() != fan.dim() {
            return Err(Error::ArityMismatch {
                expected: fan.dim(),
                got: l.nvars(),
            });
        }
        if l.is_zero() {
            return Err(Error::ZeroInput("torus polynomial"));
        }
        let n = fan.dim();
        let mut charts = Vec::with_capacity(fan.cones().len());
        for cone in fan.cones() {
            let images: Vec<(Vec<i64>, RatFun)> = l
                .terms()
                .map(|(a, c)| {
                    let e = cone
                        .iter()
                        .map(|&j| fan.rays()[j].iter().zip(a.as_slice()).map(|(v, &ak)| v * ak as i64).sum())
                        .collect();
                    (e, c.clone())
                })
                .collect();
            let shift: Vec<i64> = (0..n).map(|j| images.iter().map(|(e, _)| e[j]).min().unwrap_or(0)).collect();
            let terms = images.into_iter().map(|(e, c)| {
                let exps = e.iter().zip(&shift).map(|(x, s)| (x - s) as u32).collect();
                (ExponentVector::new(exps), c)
            });
            charts.push(normalized(MPoly::from_terms(n, terms)?));
        }
        Ok(HypersurfaceDivisor {
            source: DivisorSource::Torus(l),
            charts,
        })
    }

    pub fn source(&self) -> &DivisorSource {
        &self.source
    }

    pub fn charts(&self) -> &[MPoly] {
        &self.charts
    }

    pub fn chart(&self, cone: usize) -> Result<&MPoly> {
        self.charts.get(cone).ok_or(Error::NonMaximalCone(cone))
    }

    /// Whether every chart polynomial has nonzero constant term, i.e. the
    /// divisor misses every torus-fixed point.
    pub fn general_position(&self) -> bool {
        self.charts.iter().all(|f| !f.constant_term().is_zero())
    }

    pub fn label(&self) -> String {
        match &self.source {
            DivisorSource::Homogeneous(f) => f.render(&crate::mpoly::homogeneous_vars(f.nvars() - 1)),
            DivisorSource::Torus(l) => format!("torus:{l}"),
            DivisorSource::PerChart => "per-chart".into(),
        }
    }
}

/// Free-function form of [`HypersurfaceDivisor::general_position`].
pub fn general_position_check(d: &HypersurfaceDivisor) -> bool {
    d.general_position()
}

/// Local Weil value of a hypersurface divisor, with the chart used and the
/// bound `0 <= c_{sigma,p} <= -v_p(f_sigma)` on the ambiguity coming from
/// non-constant coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeilValue {
    pub value: u64,
    pub cone: usize,
    pub correction_bound: u64,
}

/// `lambda_{D,p}(u) = v_p^0(f_sigma(i_sigma(u)))` in the first admissible chart.
pub fn hypersurface_weil(fan: &Fan, d: &HypersurfaceDivisor, u: &TorusPoint, p: &Place) -> Result<WeilValue> {
    let cone = admissible_cone(fan, u, p)?;
    hypersurface_weil_in(fan, d, u, p, cone)
}

/// The same quantity computed in a chosen chart, which must be admissible at `p`.
pub fn hypersurface_weil_in(fan: &Fan, d: &HypersurfaceDivisor, u: &TorusPoint, p: &Place, cone: usize) -> Result<WeilValue> {
    let f = d.chart(cone)?;
    let y = chart_coordinates(fan, cone, u)?;
    let value = f.evaluate(&y)?;
    if value.is_zero() {
        return Err(Error::OnSupport);
    }
    Ok(WeilValue {
        value: order_at(&value, p)?.max(0) as u64,
        cone,
        correction_bound: (-f.gauss_order(p)?).max(0) as u64,
    })
}

/// A component of a divisor: a boundary ray or a hypersurface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Ray(usize),
    Hypersurface(HypersurfaceDivisor),
}

impl Component {
    pub fn label(&self, fan: &Fan) -> String {
        match self {
            Component::Ray(j) => {
                let r: Vec<String> = fan.rays().get(*j).map_or_else(Vec::new, |v| v.iter().map(ToString::to_string).collect());
                format!("ray:{}", r.join(","))
            }
            Component::Hypersurface(d) => d.label(),
        }
    }

    pub fn weil(&self, fan: &Fan, u: &TorusPoint, p: &Place) -> Result<u64> {
        match self {
            Component::Ray(j) => boundary_weil(fan, *j, u, p),
            Component::Hypersurface(d) => Ok(hypersurface_weil(fan, d, u, p)?.value),
        }
    }

    /// Every place where the Weil function can be nonzero at `u`, with its
    /// value there; places with value 0 are dropped.
    pub fn local_values(&self, fan: &Fan, u: &TorusPoint) -> Result<Vec<(Place, u64)>> {
        check_dim(fan, u)?;
        let mut candidates = u.support_places()?;
        candidates.insert(Place::Infinity);
        if let Component::Hypersurface(d) = self {
            // where w = 0 the first cone is used; its zeros are the rest
            let y = chart_coordinates(fan, 0, u)?;
            let g = d.chart(0)?.evaluate(&y)?;
            if g.is_zero() {
                return Err(Error::OnSupport);
            }
            for (p, _) in places_of(&g)? {
                candidates.insert(p);
            }
        }
        let mut out = Vec::new();
        for p in candidates {
            let v = self.weil(fan, u, &p)?;
            if v > 0 {
                out.push((p, v));
            }
        }
        Ok(out)
    }
}

/// `m_{D,S}`, `N_{D,S}`, its truncation and `h_D = m_{D,S} + N_{D,S}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorCounting {
    pub proximity: u64,
    pub counting: u64,
    pub truncated: u64,
    pub height: u64,
    /// Places with nonzero Weil value.
    pub per_place: Vec<(Place, u64)>,
}

pub fn divisor_counting(fan: &Fan, comp: &Component, u: &TorusPoint, s: &PlaceSet, m: Truncation) -> Result<DivisorCounting> {
    let per_place = comp.local_values(fan, u)?;
    let mut proximity = 0;
    let mut counting = 0;
    let mut truncated = 0;
    for (p, v) in &per_place {
        let d = p.degree();
        if s.contains(p) {
            proximity += v * d;
        } else {
            counting += v * d;
            truncated += match m {
                Truncation::At(k) => (*v).min(k as u64),
                Truncation::Unbounded => *v,
            } * d;
        }
    }
    Ok(DivisorCounting {
        proximity,
        counting,
        truncated,
        height: proximity + counting,
        per_place,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::homogeneous_vars;
    use crate::parse::{parse_affine, parse_mpoly, parse_ratfun};

    fn rf(s: &str) -> RatFun {
        parse_ratfun(s).unwrap()
    }

    fn pt(xs: &[&str]) -> TorusPoint {
        TorusPoint::new(xs.iter().map(|s| rf(s)).collect()).unwrap()
    }

    fn hom(fan: &Fan, s: &str) -> HypersurfaceDivisor {
        let n = fan.dim();
        HypersurfaceDivisor::homogeneous(fan, parse_mpoly(s, &homogeneous_vars(n)).unwrap()).unwrap()
    }

    #[test]
    fn chart_examples() {
        let p2 = Fan::projective(2).unwrap();
        assert_eq!(chart_coordinates(&p2, 0, &pt(&["t", "t^2"])).unwrap(), vec![rf("t"), rf("t^2")]);
        let u = pt(&["t+2", "t^3-1"]);
        assert_eq!(
            chart_coordinates(&p2, 1, &u).unwrap(),
            vec![rf("(t^3-1)/(t+2)"), rf("1/(t+2)")]
        );
        assert_eq!(chart_coordinates(&p2, 2, &pt(&["1", "1"])).unwrap(), vec![rf("1"), rf("1")]);
        assert!(matches!(chart_coordinates(&p2, 3, &u), Err(Error::NonMaximalCone(3))));
    }

    #[test]
    fn boundary_examples() {
        let p2 = Fan::projective(2).unwrap();
        let u = pt(&["t", "t"]);
        let r0 = ray_by_vector(&p2, &[-1, -1]).unwrap();
        assert_eq!(boundary_weil(&p2, r0, &u, &Place::Infinity).unwrap(), 1);
        let r1 = ray_by_vector(&p2, &[1, 0]).unwrap();
        assert_eq!(boundary_weil(&p2, r1, &u, &Place::int(0)).unwrap(), 1);
        assert_eq!(boundary_weil(&p2, r1, &pt(&["2", "t+1"]), &Place::int(0)).unwrap(), 0);
        assert!(matches!(ray_by_vector(&p2, &[1, 1]), Err(Error::RayNotInFan(_))));
    }

    #[test]
    fn hypersurface_examples() {
        let p2 = Fan::projective(2).unwrap();
        let line = hom(&p2, "x0 + x1 + x2");
        let u = TorusPoint::from_homogeneous(&[rf("1"), rf("t^2"), rf("t^3-t^2-1")]).unwrap();
        assert_eq!(hypersurface_weil(&p2, &line, &u, &Place::int(0)).unwrap().value, 3);

        let x0 = hom(&p2, "x0");
        let u = pt(&["t", "t"]);
        assert_eq!(hypersurface_weil(&p2, &x0, &u, &Place::Infinity).unwrap().value, 1);
        assert_eq!(hypersurface_weil(&p2, &x0, &u, &Place::int(0)).unwrap().value, 0);
    }

    #[test]
    fn on_support_rejected() {
        let p2 = Fan::projective(2).unwrap();
        let line = hom(&p2, "x0 + x1 + x2");
        let u = pt(&["t", "-1-t"]);
        assert_eq!(hypersurface_weil(&p2, &line, &u, &Place::int(0)), Err(Error::OnSupport));
    }

    #[test]
    fn torus_polynomial_matches_homogeneous() {
        let p2 = Fan::projective(2).unwrap();
        let a = hom(&p2, "x0^2 + 3*x1*x2 - x1^2 + x2^2");
        let b = HypersurfaceDivisor::from_torus_polynomial(&p2, parse_affine("1 + 3*x*y - x^2 + y^2", 2).unwrap()).unwrap();
        assert_eq!(a.charts(), b.charts());
    }

    #[test]
    fn general_position_examples() {
        let p2 = Fan::projective(2).unwrap();
        assert!(general_position_check(&hom(&p2, "x0 + x1 + x2")));
        assert!(!general_position_check(&hom(&p2, "x0*x1 + x2^2")));
        let f = parse_affine("1 + x + y", 2).unwrap();
        let d = HypersurfaceDivisor::per_chart(&p2, vec![f.clone(), f.clone(), f]).unwrap();
        assert!(general_position_check(&d));
    }

    #[test]
    fn counting_examples() {
        let p2 = Fan::projective(2).unwrap();
        let x0 = Component::Hypersurface(hom(&p2, "x0"));
        let u = pt(&["t", "t"]);
        let c = divisor_counting(&p2, &x0, &u, &PlaceSet::new(), Truncation::Unbounded).unwrap();
        assert_eq!(c.height, 1);
        assert_eq!(c.per_place, vec![(Place::Infinity, 1)]);

        let e1 = Component::Ray(1);
        let s = PlaceSet::parse_list("0").unwrap();
        let c = divisor_counting(&p2, &e1, &u, &s, Truncation::Unbounded).unwrap();
        assert_eq!((c.counting, c.proximity), (0, 1));

        let c = divisor_counting(&p2, &e1, &pt(&["3", "5"]), &s, Truncation::At(1)).unwrap();
        assert_eq!((c.proximity, c.counting, c.truncated, c.height), (0, 0, 0, 0));
    }
}
