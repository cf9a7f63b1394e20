//! Polytopes of torus-invariant divisors and their bigness.

use num_traits::Signed;
use serde::{Serialize, Serializer};

use super::linalg::{dot, q, rank, solve};
use super::Fan;
use crate::upoly::fmt_rational;
use crate::{Error, Rational, Result};

/// Convex hull of finitely many rational points, stored by its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<Rational>>,
}

impl LatticePolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension of the affine hull; `None` for the empty polytope.
    pub fn affine_dimension(&self) -> Option<usize> {
        let (first, rest) = self.vertices.split_first()?;
        let diffs: Vec<Vec<Rational>> = rest
            .iter()
            .map(|v| v.iter().zip(first).map(|(a, b)| a - b).collect())
            .collect();
        Some(rank(&diffs))
    }

    /// A torus-invariant divisor is big iff its polytope is full-dimensional.
    pub fn is_big(&self) -> bool {
        self.affine_dimension() == Some(self.dim)
    }
}

impl Serialize for LatticePolytope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rendered: Vec<Vec<String>> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(fmt_rational).collect())
            .collect();
        serializer.collect_seq(rendered)
    }
}

/// `P_D = {m : <m, rho> >= -a_rho for every ray}` for `D = sum a_rho D_rho`.
///
/// Vertices are found by solving every `n`-subset of the constraints as
/// equalities and keeping the feasible solutions.
pub fn invariant_divisor_polytope(fan: &Fan, a: &[Rational]) -> Result<LatticePolytope> {
    let rays = fan.rays();
    if a.len() != rays.len() {
        return Err(Error::ArityMismatch {
            expected: rays.len(),
            got: a.len(),
        });
    }
    let n = fan.dim();
    let feasible = |m: &[Rational]| rays.iter().zip(a).all(|(r, ar)| !(dot(m, r) + ar).is_negative());
    let mut vertices: Vec<Vec<Rational>> = Vec::new();
    for subset in combinations(rays.len(), n) {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&j| rays[j].iter().map(|&x| q(x)).collect()).collect();
        let rhs: Vec<Rational> = subset.iter().map(|&j| -a[j].clone()).collect();
        if let Some(m) = solve(&rows, &rhs) {
            if feasible(&m) && !vertices.contains(&m) {
                vertices.push(m);
            }
        }
    }
    vertices.sort();
    Ok(LatticePolytope { dim: n, vertices })
}

/// Coefficients of `D_0 = sum_rho D_rho`, the boundary divisor.
pub fn boundary_coefficients(fan: &Fan) -> Vec<Rational> {
    vec![q(1); fan.rays().len()]
}

/// Coefficients of the canonical divisor `K_X = -D_0`.
pub fn canonical(fan: &Fan) -> Vec<Rational> {
    vec![q(-1); fan.rays().len()]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// `P_D` for integer coefficients, a convenience for callers and tests.
pub fn polytope_of(fan: &Fan, a: &[i64]) -> Result<LatticePolytope> {
    let a: Vec<Rational> = a.iter().map(|&x| q(x)).collect();
    invariant_divisor_polytope(fan, &a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_plane_triangle() {
        let p2 = Fan::projective(2).unwrap();
        let p = invariant_divisor_polytope(&p2, &boundary_coefficients(&p2)).unwrap();
        assert_eq!(
            p.vertices(),
            &[vec![q(-1), q(-1)], vec![q(-1), q(2)], vec![q(2), q(-1)]]
        );
        assert!(p.is_big());
    }

    #[test]
    fn canonical_is_empty() {
        let p2 = Fan::projective(2).unwrap();
        let p = invariant_divisor_polytope(&p2, &canonical(&p2)).unwrap();
        assert!(p.is_empty() && !p.is_big());
        assert_eq!(p.affine_dimension(), None);
    }

    #[test]
    fn zero_divisor_is_a_point() {
        let p2 = Fan::projective(2).unwrap();
        let p = polytope_of(&p2, &[0, 0, 0]).unwrap();
        assert_eq!(p.vertices(), &[vec![q(0), q(0)]]);
        assert_eq!(p.affine_dimension(), Some(0));
        assert!(!p.is_big());
    }

    #[test]
    fn combination_count() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }
}
