//! Brownawell-Masser and the affine proximity bound.

use num_traits::Zero;
use serde::Serialize;

use super::report::{int, InequalityReport, Precondition, Relation, Status};
use crate::funfield::{chi_plus, counting_value, height, is_s_unit, order_at, CountMode, Truncation};
use crate::mpoly::vanishing_subsets;
use crate::{Error, MPoly, PlaceSet, RatFun, Rational, Result};

/// Explicit constants of the affine proximity bound for `n` variables and
/// degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BmConstants {
    /// `binomial(n + d, n)`, the number of monomials of degree at most `d`.
    pub b: u64,
    pub c1_tilde: u64,
    pub c2_tilde: u64,
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// `B = C(n+d, n)`, `c1 = B(B+1)/2`, `c2 = 2(B-1) c1`.
pub fn bm_constants(n: u64, d: u64) -> Result<BmConstants> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("bm_constants needs n >= 1 and d >= 1".into()));
    }
    let overflow = || Error::InvalidArgument(format!("constants for (n, d) = ({n}, {d}) overflow u64"));
    let b = n.checked_add(d).and_then(|nd| binomial(nd, n)).ok_or_else(overflow)?;
    let c1_tilde = b.checked_mul(b + 1).ok_or_else(overflow)? / 2;
    let c2_tilde = (b - 1).checked_mul(2).and_then(|x| x.checked_mul(c1_tilde)).ok_or_else(overflow)?;
    Ok(BmConstants { b, c1_tilde, c2_tilde })
}

fn render_subsets(subsets: &[Vec<usize>]) -> String {
    subsets
        .iter()
        .map(|s| s.iter().map(|i| format!("f{i}")).collect::<Vec<_>>().join("+"))
        .collect::<Vec<_>>()
        .join("; ")
}

/// `max h(f_i) <= sum_i (N^(n)_{0,S}(f_i) + N^(n)_{inf,S}(f_i)) + n(n+1)/2 chi_S^+`
/// for `f_0 + ... + f_n = 1` with no vanishing proper subsum.
pub fn brownawell_masser(fs: &[RatFun], s: &PlaceSet) -> Result<InequalityReport> {
    if fs.len() < 2 {
        return Err(Error::InvalidArgument("need at least two summands".into()));
    }
    if fs.iter().any(RatFun::is_zero) {
        return Err(Error::ZeroInput("brownawell_masser"));
    }
    let sum = fs.iter().fold(RatFun::zero(), |acc, f| &acc + f);
    if !sum.is_one() {
        return Err(Error::SumNotOne);
    }
    let n = (fs.len() - 1) as u64;
    let subsets = vanishing_subsets(fs)?;
    let no_subsum = Precondition::new(
        "no_vanishing_subsum",
        subsets.is_empty(),
        if subsets.is_empty() { "none".to_string() } else { render_subsets(&subsets) },
    );
    let pre = vec![Precondition::new("sum_is_one", true, "1"), no_subsum];

    let mut lhs = 0;
    let mut counts = 0;
    for f in fs {
        lhs = lhs.max(height(f)?);
        let trunc = Truncation::At(n as u32);
        counts += counting_value(f, s, CountMode::Zeros, trunc)? + counting_value(f, s, CountMode::Poles, trunc)?;
    }
    let rhs = counts + n * (n + 1) / 2 * chi_plus(s);
    let status = if subsets.is_empty() { Status::Asserted } else { Status::Degenerate };
    let mut report = InequalityReport::new("brownawell_masser", status, Relation::Le, int(lhs), int(rhs)).with_preconditions(pre);
    if !subsets.is_empty() {
        report = report.note("a proper subsum vanishes; the inequality is not asserted");
    }
    Ok(report)
}

/// `sum_{p in S} v_p^0(F(g)) deg p <= c1 chi_S^+ + c2 h(F)` for `S`-units `g`
/// off the subsum-vanishing locus.
///
/// `F` is rescaled to `F(0) = 1` before evaluation. The left side is not
/// invariant under scaling, and the bound is stated for that normalization.
pub fn proximity_bound(f: &MPoly, g: &[RatFun], s: &PlaceSet) -> Result<InequalityReport> {
    if g.len() != f.nvars() {
        return Err(Error::ArityMismatch {
            expected: f.nvars(),
            got: g.len(),
        });
    }
    let d = f.total_degree().unwrap_or(0) as u64;
    if d == 0 {
        return Err(Error::InvalidArgument("proximity bound needs a nonconstant polynomial".into()));
    }
    let consts = bm_constants(f.nvars() as u64, d)?;
    let (hf, _) = f.poly_heights()?;
    let rhs = consts.c1_tilde * chi_plus(s) + consts.c2_tilde * hf;

    let origin_ok = !f.constant_term().is_zero();
    let mut pre = vec![Precondition::new("nonzero_at_origin", origin_ok, f.constant_term().to_string())];
    let mut units_ok = true;
    for (i, gi) in g.iter().enumerate() {
        let ok = !gi.is_zero() && is_s_unit(gi, s)?;
        units_ok &= ok;
        pre.push(Precondition::new(format!("s_unit[{}]", i + 1), ok, gi.to_string()));
    }
    if !origin_ok || !units_ok {
        return Ok(InequalityReport::new("proximity_bound", Status::PreconditionFailed, Relation::Le, Rational::zero(), int(rhs))
            .with_preconditions(pre));
    }

    let normalized = f.normalize_at_origin()?;
    let subsums = normalized.vanishing_subsums(g)?;
    let witness = if subsums.degenerate {
        subsums
            .witnesses
            .iter()
            .map(|w| w.iter().map(|e| e.render(&crate::mpoly::affine_vars(f.nvars()))).collect::<Vec<_>>().join("+"))
            .collect::<Vec<_>>()
            .join("; ")
    } else {
        "none".to_string()
    };
    pre.push(Precondition::new("no_vanishing_subsum", !subsums.degenerate, witness));
    if subsums.degenerate {
        return Ok(InequalityReport::new("proximity_bound", Status::Degenerate, Relation::Le, Rational::zero(), int(rhs))
            .with_preconditions(pre)
            .note("point lies on the subsum-vanishing locus; not asserted"));
    }

    let value = normalized.evaluate(g)?;
    let mut lhs = 0u64;
    for p in s {
        let v = order_at(&value, p)?;
        if v > 0 {
            lhs += v as u64 * p.degree();
        }
    }
    Ok(InequalityReport::new("proximity_bound", Status::Asserted, Relation::Le, int(lhs), int(rhs))
        .with_preconditions(pre)
        .note(format!(
            "B = {}, c1 = {}, c2 = {}, h(F) = {hf}; F rescaled so that F(0) = 1",
            consts.b, consts.c1_tilde, consts.c2_tilde
        )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_affine, parse_ratfun};

    fn rf(s: &str) -> RatFun {
        parse_ratfun(s).unwrap()
    }

    fn fs(xs: &[&str]) -> Vec<RatFun> {
        xs.iter().map(|s| rf(s)).collect()
    }

    fn places(s: &str) -> PlaceSet {
        PlaceSet::parse_list(s).unwrap()
    }

    #[test]
    fn constants() {
        let c = |n, d| {
            let k = bm_constants(n, d).unwrap();
            (k.b, k.c1_tilde, k.c2_tilde)
        };
        assert_eq!(c(2, 2), (6, 21, 210));
        assert_eq!(c(2, 1), (3, 6, 24));
        assert_eq!(c(1, 1), (2, 3, 6));
        assert!(bm_constants(0, 1).is_err());
    }

    #[test]
    fn linear_pair() {
        let r = brownawell_masser(&fs(&["t", "1-t"]), &PlaceSet::new()).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(1), int(4)));
        assert!(r.holds && r.status == Status::Asserted);
    }

    #[test]
    fn fifth_power_pair() {
        let r = brownawell_masser(&fs(&["t^5", "1-t^5"]), &PlaceSet::new()).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(5), int(8)));
        assert!(r.holds);
    }

    #[test]
    fn degenerate_and_rejected() {
        let r = brownawell_masser(&fs(&["t", "-t", "1"]), &PlaceSet::new()).unwrap();
        assert_eq!(r.status, Status::Degenerate);
        assert_eq!(r.preconditions[1].witness, "f0+f1");
        assert_eq!(r.exit_code(), 2);
        assert_eq!(brownawell_masser(&fs(&["t", "t"]), &PlaceSet::new()), Err(Error::SumNotOne));
    }

    #[test]
    fn proximity_examples() {
        let s = places("0,inf");
        let r = proximity_bound(&parse_affine("1+x+y", 2).unwrap(), &fs(&["t", "t^2"]), &s).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone(), r.status), (int(0), int(0), Status::Asserted));

        let r = proximity_bound(&parse_affine("1+t*x", 1).unwrap(), &fs(&["1/t"]), &s).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(0), int(6)));
        assert!(r.holds);

        let r = proximity_bound(&parse_affine("1+x", 1).unwrap(), &fs(&["-1+t"]), &s).unwrap();
        assert_eq!(r.status, Status::PreconditionFailed);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn proximity_counts_s_zeros() {
        let s = places("0,2,inf");
        let r = proximity_bound(&parse_affine("2 - x", 1).unwrap(), &fs(&["t/(t-2)"]), &s).unwrap();
        // F/F(0) = 1 - x/2 at t/(t-2) gives (t - 4)/(2(t - 2)): no zero in S
        assert_eq!(r.lhs, int(0));
        let r = proximity_bound(&parse_affine("1 - x", 1).unwrap(), &fs(&["t^2"]), &places("1,-1,0,inf")).unwrap();
        assert_eq!(r.lhs, int(2));
        assert!(r.holds);
    }

    #[test]
    fn proximity_subsum_degenerate() {
        let s = places("0,inf");
        let r = proximity_bound(&parse_affine("1+x-y", 2).unwrap(), &fs(&["t", "t"]), &s).unwrap();
        assert_eq!(r.status, Status::Degenerate);
    }
}
