//! Campana orbifold data and the `(Delta, S)`-integrality check.

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{Component, Fan, TorusPoint};
use crate::upoly::fmt_rational;
use crate::{Error, Place, PlaceSet, Rational, Result};

/// `Delta = sum eps_a D_a` with `eps_a` in `{1 - 1/m : m >= 2}` or `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbifoldDatum {
    components: Vec<(Component, Rational)>,
}

/// `m = 1 / (1 - eps)`, or `None` when `eps = 1`.
pub fn multiplicity(eps: &Rational) -> Result<Option<u64>> {
    if eps.is_one() {
        return Ok(None);
    }
    let gap = Rational::one() - eps;
    if !gap.is_positive() || gap >= Rational::one() {
        return Err(Error::InvalidEpsilon(fmt_rational(eps)));
    }
    let m = gap.recip();
    match m.is_integer().then(|| m.to_integer().to_u64()).flatten() {
        Some(m) if m >= 2 => Ok(Some(m)),
        _ => Err(Error::InvalidEpsilon(fmt_rational(eps))),
    }
}

impl OrbifoldDatum {
    pub fn new(components: Vec<(Component, Rational)>) -> Result<Self> {
        for (_, eps) in &components {
            multiplicity(eps)?;
        }
        Ok(OrbifoldDatum { components })
    }

    pub fn components(&self) -> &[(Component, Rational)] {
        &self.components
    }
}

/// A place off `S` where a component is met with too small a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub component: usize,
    pub label: String,
    pub place: Place,
    pub lambda: u64,
    /// `m` for a fractional component, 0 for a component with `eps = 1`.
    pub required: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampanaVerdict {
    pub integral: bool,
    pub violations: Vec<Violation>,
}

/// Checks `lambda = 0` off `S` for components with `eps = 1`, and
/// `lambda >= m` wherever `lambda > 0` off `S` for the others.
pub fn is_campana_integral(fan: &Fan, delta: &OrbifoldDatum, u: &TorusPoint, s: &PlaceSet) -> Result<CampanaVerdict> {
    let mut violations = Vec::new();
    for (idx, (comp, eps)) in delta.components.iter().enumerate() {
        let m = multiplicity(eps)?;
        for (place, lambda) in comp.local_values(fan, u)? {
            if s.contains(&place) || lambda.is_zero() {
                continue;
            }
            let bad = match m {
                None => true,
                Some(m) => lambda < m,
            };
            if bad {
                violations.push(Violation {
                    component: idx,
                    label: comp.label(fan),
                    place,
                    lambda,
                    required: m.unwrap_or(0),
                });
            }
        }
    }
    Ok(CampanaVerdict {
        integral: violations.is_empty(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::homogeneous_vars;
    use crate::parse::{parse_mpoly, parse_ratfun, parse_rational};
    use crate::toric::HypersurfaceDivisor;
    use crate::RatFun;

    fn eps(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn hyp(fan: &Fan, s: &str) -> Component {
        Component::Hypersurface(HypersurfaceDivisor::homogeneous(fan, parse_mpoly(s, &homogeneous_vars(2)).unwrap()).unwrap())
    }

    fn point(fs: &[&str]) -> TorusPoint {
        let v: Vec<RatFun> = fs.iter().map(|s| parse_ratfun(s).unwrap()).collect();
        TorusPoint::from_homogeneous(&v).unwrap()
    }

    #[test]
    fn epsilon_validation() {
        assert_eq!(multiplicity(&eps("1/2")).unwrap(), Some(2));
        assert_eq!(multiplicity(&eps("2/3")).unwrap(), Some(3));
        assert_eq!(multiplicity(&eps("1")).unwrap(), None);
        for bad in ["0", "1/3", "3/5", "2", "-1/2"] {
            assert!(matches!(multiplicity(&eps(bad)), Err(Error::InvalidEpsilon(_))), "{bad}");
        }
    }

    fn example_delta(p2: &Fan) -> OrbifoldDatum {
        OrbifoldDatum::new(vec![
            (hyp(p2, "x0"), eps("1")),
            (hyp(p2, "x1"), eps("1/2")),
            (hyp(p2, "x0 + x1 + x2"), eps("2/3")),
        ])
        .unwrap()
    }

    #[test]
    fn witness_is_integral() {
        let p2 = Fan::projective(2).unwrap();
        let s = PlaceSet::parse_list("inf").unwrap();
        let v = is_campana_integral(&p2, &example_delta(&p2), &point(&["1", "t^2", "t^3-t^2-1"]), &s).unwrap();
        assert!(v.integral, "{v:?}");
    }

    #[test]
    fn perturbation_is_rejected() {
        let p2 = Fan::projective(2).unwrap();
        let s = PlaceSet::parse_list("inf").unwrap();
        let v = is_campana_integral(&p2, &example_delta(&p2), &point(&["1", "t", "t^3"]), &s).unwrap();
        assert!(!v.integral);
        assert!(v.violations.iter().any(|x| x.component == 1 && x.place == Place::int(0) && x.lambda == 1 && x.required == 2));
    }

    #[test]
    fn all_boundary_unit_point() {
        let p2 = Fan::projective(2).unwrap();
        let delta = OrbifoldDatum::new((0..3).map(|j| (Component::Ray(j), eps("1"))).collect()).unwrap();
        let v = is_campana_integral(&p2, &delta, &point(&["1", "3", "-2"]), &PlaceSet::new()).unwrap();
        assert!(v.integral);
    }
}
