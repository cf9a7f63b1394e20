//! Perfect powers in `k[t]` and the scan over `F(f0^n0, f1^n1, f2^n2)`.

use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::generators::{coprime_triple, instance_rng};
use crate::factor::squarefree_decomposition;
use crate::{Error, MPoly, RatFun, Result, UniPoly};

/// Largest `e` with `f = c g^e`; constants are `e`-th powers for every `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerExponent {
    Finite(u32),
    Unbounded,
}

impl Serialize for PowerExponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PowerExponent::Finite(e) => serializer.serialize_u32(*e),
            PowerExponent::Unbounded => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerReport {
    pub is_power: bool,
    pub exponent: PowerExponent,
    /// Monic `g` with `f = c g^e`.
    pub base: UniPoly,
}

/// Whether `f = c g^e` with `e >= 2`, up to a constant factor.
pub fn perfect_power(f: &RatFun) -> Result<PowerReport> {
    if f.is_zero() {
        return Err(Error::ZeroInput("perfect_power"));
    }
    if !f.is_polynomial() {
        return Err(Error::InvalidArgument(format!("{f} is not a polynomial")));
    }
    let parts = squarefree_decomposition(f.num());
    if parts.is_empty() {
        return Ok(PowerReport {
            is_power: true,
            exponent: PowerExponent::Unbounded,
            base: UniPoly::one(),
        });
    }
    let e = parts.iter().fold(0u32, |acc, (_, k)| acc.gcd(k));
    let base = parts
        .iter()
        .fold(UniPoly::one(), |acc, (p, k)| &acc * &p.pow(k / e));
    Ok(PowerReport {
        is_power: e >= 2,
        exponent: PowerExponent::Finite(e),
        base,
    })
}

/// Bounds and seed of an [`example1_scan`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanParameters {
    pub deg_bound: usize,
    /// Smallest exponent `n_i`.
    pub m: u32,
    /// Exponents range over `m .. m + window`.
    pub window: u32,
    pub seed: u64,
    /// Number of triples, the first being `(1, 1, 1)`.
    pub samples: usize,
}

/// Hypotheses on `F` that the caller is expected to check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanHypotheses {
    pub ternary: bool,
    pub homogeneous: bool,
    pub constant_coefficients: bool,
    pub squarefree: bool,
    /// `F` nonzero at each of `(1:0:0)`, `(0:1:0)`, `(0:0:1)`.
    pub nonzero_at_coordinate_points: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanHit {
    pub triple: usize,
    pub f: [RatFun; 3],
    pub exponents: [u32; 3],
    pub power: PowerReport,
    /// The value is constant, e.g. the trivial triple.
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub parameters: ScanParameters,
    pub hypotheses: ScanHypotheses,
    pub tuples_scanned: u64,
    /// Tuples at which `F` vanished identically.
    pub vanishing: u64,
    pub hits: Vec<ScanHit>,
    pub nondegenerate_hits: usize,
    pub notes: Vec<String>,
}

fn hypotheses(f: &MPoly) -> Result<ScanHypotheses> {
    let ternary = f.nvars() == 3;
    let at = |i: usize| -> Result<bool> {
        let pt: Vec<RatFun> = (0..3).map(|j| if i == j { RatFun::one() } else { RatFun::zero() }).collect();
        Ok(!f.evaluate(&pt)?.is_zero())
    };
    Ok(ScanHypotheses {
        ternary,
        homogeneous: f.is_homogeneous(),
        constant_coefficients: f.has_constant_coefficients(),
        squarefree: f.degree_profile()?.is_squarefree,
        nonzero_at_coordinate_points: ternary && at(0)? && at(1)? && at(2)?,
    })
}

/// Records every tuple `(f_i, n_i)` for which `F(f0^n0, f1^n1, f2^n2)` is a
/// perfect power. Triples are coprime polynomials of degree at most
/// `deg_bound`, the first being `(1, 1, 1)`.
pub fn example1_scan(f: &MPoly, params: &ScanParameters) -> Result<ScanReport> {
    let hyp = hypotheses(f)?;
    if !hyp.ternary {
        return Err(Error::ArityMismatch { expected: 3, got: f.nvars() });
    }
    if params.window == 0 || params.m == 0 {
        return Err(Error::InvalidArgument("scan needs m >= 1 and a nonempty window".into()));
    }
    let mut hits = Vec::new();
    let mut tuples = 0u64;
    let mut vanishing = 0u64;
    let exps: Vec<u32> = (params.m..params.m + params.window).collect();
    for idx in 0..params.samples {
        let triple: [RatFun; 3] = if idx == 0 {
            [RatFun::one(), RatFun::one(), RatFun::one()]
        } else {
            let mut rng = instance_rng(params.seed, idx as u64);
            coprime_triple(&mut rng, params.deg_bound).map(RatFun::from_poly)
        };
        for &n0 in &exps {
            for &n1 in &exps {
                for &n2 in &exps {
                    tuples += 1;
                    let pt = [triple[0].pow(n0 as i64)?, triple[1].pow(n1 as i64)?, triple[2].pow(n2 as i64)?];
                    let value = f.evaluate(&pt)?;
                    if value.is_zero() {
                        vanishing += 1;
                        continue;
                    }
                    let power = perfect_power(&value)?;
                    if power.is_power {
                        hits.push(ScanHit {
                            triple: idx,
                            f: triple.clone(),
                            exponents: [n0, n1, n2],
                            degenerate: value.is_constant(),
                            power,
                        });
                    }
                }
            }
        }
    }
    let nondegenerate_hits = hits.iter().filter(|h| !h.degenerate).count();
    let mut notes = Vec::new();
    if nondegenerate_hits == 0 {
        notes.push("no nondegenerate hits".to_string());
    }
    Ok(ScanReport {
        parameters: params.clone(),
        hypotheses: hyp,
        tuples_scanned: tuples,
        vanishing,
        hits,
        nondegenerate_hits,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::homogeneous_vars;
    use crate::parse::{parse_mpoly, parse_ratfun};

    fn pp(s: &str) -> PowerReport {
        perfect_power(&parse_ratfun(s).unwrap()).unwrap()
    }

    #[test]
    fn powers() {
        let r = pp("t^2*(t-1)^2");
        assert!(r.is_power);
        assert_eq!(r.exponent, PowerExponent::Finite(2));
        assert_eq!(r.base, UniPoly::from_ints(&[0, -1, 1]));
        assert!(!pp("t*(t-1)^2").is_power);
        let c = pp("5");
        assert!(c.is_power && c.exponent == PowerExponent::Unbounded);
        assert_eq!(pp("4*(t+1)^6").exponent, PowerExponent::Finite(6));
        assert!(perfect_power(&parse_ratfun("1/t").unwrap()).is_err());
    }

    #[test]
    fn trivial_triple_is_a_degenerate_hit() {
        let f = parse_mpoly("x0^2+x1^2+x2^2", &homogeneous_vars(2)).unwrap();
        let params = ScanParameters {
            deg_bound: 2,
            m: 3,
            window: 1,
            seed: 11,
            samples: 4,
        };
        let r = example1_scan(&f, &params).unwrap();
        assert!(r.hypotheses.homogeneous && r.hypotheses.nonzero_at_coordinate_points);
        assert_eq!(r.tuples_scanned, 4);
        let first = &r.hits[0];
        assert_eq!((first.triple, first.degenerate), (0, true));
        assert_eq!(r, example1_scan(&f, &params).unwrap());
    }
}
