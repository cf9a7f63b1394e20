//! Clause-by-clause evaluation of the abc-type trichotomy for a polynomial
//! `G` at a point `g` of the torus.
//!
//! The theorem only asserts its conclusion outside an exceptional set that
//! cannot be constructed here, so every clause is reported, never asserted.

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::report::{int, InequalityReport, Precondition, Relation, Status};
use crate::funfield::{counting_value, height, order_at, places_of, projective_height, CountMode, Truncation};
use crate::toric::linalg::rank;
use crate::upoly::fmt_rational;
use crate::{DegreeProfile, Error, MPoly, Place, PlaceSet, RatFun, Rational, Result};

/// User-supplied constants; the theorem only proves that some exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcParameters {
    pub epsilon: Rational,
    pub ell: u64,
    pub c0: u64,
}

impl Default for AbcParameters {
    fn default() -> Self {
        AbcParameters {
            epsilon: Rational::new(1.into(), 3.into()),
            ell: 6,
            c0: 100,
        }
    }
}

impl AbcParameters {
    pub fn new(epsilon: Rational, ell: u64, c0: u64) -> Result<Self> {
        if epsilon <= Rational::zero() || epsilon > Rational::one() {
            return Err(Error::InvalidArgument(format!("epsilon must lie in (0, 1], got {}", fmt_rational(&epsilon))));
        }
        if ell == 0 || c0 == 0 {
            return Err(Error::InvalidArgument("ell and c0 must be positive".into()));
        }
        Ok(AbcParameters { epsilon, ell, c0 })
    }
}

impl Serialize for AbcParameters {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("AbcParameters", 3)?;
        st.serialize_field("epsilon", &fmt_rational(&self.epsilon))?;
        st.serialize_field("ell", &self.ell)?;
        st.serialize_field("c0", &self.c0)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrichotomyReport {
    pub parameters: AbcParameters,
    pub profile: DegreeProfile,
    /// `N^(1)_{0,S}(g_i) + N^(1)_{inf,S}(g_i) <= h(g_i) / ell` for every `i`.
    pub hypothesis_ok: bool,
    pub hypotheses: Vec<Precondition>,
    pub height_bounded: bool,
    pub height_bound: InequalityReport,
    pub clause_a: InequalityReport,
    /// Only when every `deg_{x_i} G` equals `deg G`.
    pub clause_b: Option<InequalityReport>,
    pub notes: Vec<String>,
}

fn profile_violations(p: &DegreeProfile) -> Vec<&'static str> {
    let mut bad = Vec::new();
    if p.has_monomial_factor {
        bad.push("monomial factor");
    }
    if !p.is_squarefree {
        bad.push("repeated factor");
    }
    if !p.nonzero_at_origin {
        bad.push("vanishes at the origin");
    }
    bad
}

/// Whether the valuation vectors of `g` span less than full rank, i.e. `g`
/// lies in a translate of a proper subtorus.
fn valuations_degenerate(g: &[RatFun]) -> Result<bool> {
    let mut places: Vec<Place> = Vec::new();
    for gi in g {
        for (p, _) in places_of(gi)? {
            if !places.contains(&p) {
                places.push(p);
            }
        }
    }
    let mut rows = Vec::with_capacity(places.len());
    for p in &places {
        let row: Result<Vec<Rational>> = g.iter().map(|gi| Ok(int_signed(order_at(gi, p)?))).collect();
        rows.push(row?);
    }
    Ok(rank(&rows) < g.len())
}

fn int_signed(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Evaluates the hypothesis, the height bound and both clauses at `g`.
pub fn abc_trichotomy(gpoly: &MPoly, g: &[RatFun], s: &PlaceSet, params: &AbcParameters) -> Result<TrichotomyReport> {
    let n = gpoly.nvars();
    if g.len() != n {
        return Err(Error::ArityMismatch { expected: n, got: g.len() });
    }
    if g.iter().any(RatFun::is_zero) {
        return Err(Error::ZeroInput("abc_trichotomy"));
    }
    let profile = gpoly.degree_profile()?;
    let bad = profile_violations(&profile);
    if !bad.is_empty() {
        return Err(Error::Hypothesis(bad.join(", ")));
    }
    let eps = &params.epsilon;
    let ell = int(params.ell);

    let mut hypotheses = Vec::with_capacity(n);
    let mut heights = Vec::with_capacity(n);
    for (i, gi) in g.iter().enumerate() {
        let count = counting_value(gi, s, CountMode::Zeros, Truncation::At(1))?
            + counting_value(gi, s, CountMode::Poles, Truncation::At(1))?;
        let h = height(gi)?;
        heights.push(h);
        let bound = int(h) / &ell;
        hypotheses.push(Precondition::new(
            format!("truncated_count[{}]", i + 1),
            int(count) <= bound,
            format!("{count} <= {}", fmt_rational(&bound)),
        ));
    }
    let hypothesis_ok = hypotheses.iter().all(|p| p.satisfied);
    let max_h = heights.iter().copied().max().unwrap_or(0);

    let (_, h_tilde) = gpoly.poly_heights()?;
    let euler = s.chi().max(1) as u64;
    let height_bound = InequalityReport::new(
        "height_bound",
        Status::Reported,
        Relation::Le,
        int(max_h),
        int(params.c0) * int(h_tilde + euler),
    );

    let value = gpoly.evaluate(g)?;
    if value.is_zero() {
        return Err(Error::Hypothesis("G vanishes at the point".into()));
    }
    let full = counting_value(&value, s, CountMode::Zeros, Truncation::Unbounded)?;
    let reduced = counting_value(&value, s, CountMode::Zeros, Truncation::At(1))?;
    let clause_a = InequalityReport::new("clause_a", Status::Reported, Relation::Le, int(full - reduced), eps * int(max_h));

    let deg = profile.total_degree;
    let clause_b = if profile.per_variable.iter().all(|&d| d == deg) {
        let mut coords = vec![RatFun::one()];
        coords.extend(g.iter().cloned());
        let hp = projective_height(&coords)?;
        let rhs = int(deg as u64) * (Rational::one() - eps) * int(hp);
        Some(InequalityReport::new("clause_b", Status::Reported, Relation::Ge, int(reduced), rhs))
    } else {
        None
    };

    let mut notes = Vec::new();
    if valuations_degenerate(g)? {
        notes.push("valuation vectors of g have rank below n; the point lies on a translate of a proper subtorus and may belong to the exceptional set".to_string());
    }
    if !hypothesis_ok {
        notes.push("truncated-count hypothesis fails; clauses are reported for information only".to_string());
    }
    Ok(TrichotomyReport {
        parameters: params.clone(),
        profile,
        hypothesis_ok,
        hypotheses,
        height_bounded: height_bound.holds,
        height_bound,
        clause_a,
        clause_b,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_affine, parse_ratfun};

    fn rf(s: &str) -> RatFun {
        parse_ratfun(s).unwrap()
    }

    fn run(gp: &str, g: &[&str], s: &str, params: &AbcParameters) -> Result<TrichotomyReport> {
        let gs: Vec<RatFun> = g.iter().map(|x| rf(x)).collect();
        abc_trichotomy(&parse_affine(gp, gs.len()).unwrap(), &gs, &PlaceSet::parse_list(s).unwrap(), params)
    }

    #[test]
    fn worked_linear_example() {
        let r = run("x+y+1", &["t^6", "t^3"], "0,inf", &AbcParameters::default()).unwrap();
        assert!(r.hypothesis_ok && r.height_bounded);
        assert_eq!((r.clause_a.lhs.clone(), r.clause_a.rhs.clone()), (int(0), int(2)));
        let b = r.clause_b.unwrap();
        assert_eq!((b.lhs.clone(), b.rhs.clone(), b.holds), (int(6), int(4), true));
    }

    #[test]
    fn cubic_at_the_same_point() {
        let r = run("x^3+y^3+1", &["t^6", "t^3"], "0,inf", &AbcParameters::default()).unwrap();
        assert_eq!(r.clause_a.lhs, int(0));
        let b = r.clause_b.unwrap();
        assert_eq!((b.lhs.clone(), b.rhs.clone()), (int(18), int(12)));
    }

    #[test]
    fn diagonal_point_is_flagged() {
        let r = run("x+y+1", &["t", "t"], "0,inf", &AbcParameters::default()).unwrap();
        assert_eq!(r.clause_a.lhs, int(0));
        assert!(r.clause_a.holds);
        assert!(r.notes.iter().any(|n| n.contains("subtorus")));
    }

    #[test]
    fn hypothesis_failure() {
        let params = AbcParameters::new(Rational::new(1.into(), 3.into()), 10, 100).unwrap();
        let r = run("x+y+1", &["t+1", "t"], "0,inf", &params).unwrap();
        assert!(!r.hypothesis_ok);
        assert!(!r.hypotheses[0].satisfied && r.hypotheses[1].satisfied);
    }

    #[test]
    fn profile_violation_is_an_error() {
        let e = run("x*y+x", &["t", "t^2"], "0,inf", &AbcParameters::default()).unwrap_err();
        assert!(matches!(e, Error::Hypothesis(m) if m.contains("monomial factor") && m.contains("origin")));
        let e = run("(x+1)^2", &["t"], "0,inf", &AbcParameters::default()).unwrap_err();
        assert!(matches!(e, Error::Hypothesis(m) if m.contains("repeated")));
    }

    #[test]
    fn clause_b_needs_full_per_variable_degree() {
        let r = run("x^2+y+1", &["t^2", "t^3"], "0,inf", &AbcParameters::default()).unwrap();
        assert!(r.clause_b.is_none());
    }
}
