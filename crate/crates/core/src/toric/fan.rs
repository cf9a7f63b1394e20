//! Complete smooth fans: construction, built-ins, file format and validation.

use std::collections::BTreeMap;
use std::path::Path;

use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::linalg::{det, inverse, q};
use crate::{Error, Rational, Result};

/// Rays and maximal cones of a simplicial fan in `Z^n`.
///
/// Cone order matters: chart selection picks the first admissible cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    name: String,
    dim: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
    /// Per cone, the dual basis `m_j` with `<m_j, v_k> = delta_jk`.
    duals: Vec<Vec<Vec<Rational>>>,
}

/// Result of [`Fan::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanVerdict {
    pub smooth: bool,
    pub complete: bool,
    pub non_smooth_cones: Vec<usize>,
    pub rays_used: bool,
    pub walls_paired: bool,
    pub probes_covered: bool,
    /// Smooth and complete; the boundary is then normal crossings.
    pub admissible: bool,
    /// Admissibility in dimension above 2 is taken as a hypothesis rather
    /// than proved from the fan.
    pub admissibility_assumed: bool,
}

#[derive(Deserialize)]
struct FanFile {
    name: Option<String>,
    dim: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

impl Fan {
    pub fn new(name: impl Into<String>, dim: usize, rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::MalformedFan("dimension must be positive".into()));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::MalformedFan(format!("ray {i} has length {} but dim is {dim}", r.len())));
            }
            if r.iter().all(|&x| x == 0) {
                return Err(Error::MalformedFan(format!("ray {i} is the zero vector")));
            }
            if gcd_all(r) != 1 {
                return Err(Error::MalformedFan(format!("ray {i} is not primitive")));
            }
        }
        let mut duals = Vec::with_capacity(cones.len());
        for (c, cone) in cones.iter().enumerate() {
            if cone.len() != dim {
                return Err(Error::MalformedFan(format!("cone {c} has {} rays; maximal cones need {dim}", cone.len())));
            }
            if let Some(&bad) = cone.iter().find(|&&j| j >= rays.len()) {
                return Err(Error::MalformedFan(format!("cone {c} refers to missing ray {bad}")));
            }
            let mut sorted = cone.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != dim {
                return Err(Error::MalformedFan(format!("cone {c} repeats a ray")));
            }
            let rows: Vec<Vec<Rational>> = cone.iter().map(|&j| rays[j].iter().map(|&x| q(x)).collect()).collect();
            let inv = inverse(&rows)
                .ok_or_else(|| Error::MalformedFan(format!("cone {c} is not full-dimensional")))?;
            // m_j is column j of the inverse of the generator-row matrix
            duals.push((0..dim).map(|j| (0..dim).map(|i| inv[i][j].clone()).collect()).collect());
        }
        Ok(Fan {
            name: name.into(),
            dim,
            rays,
            cones,
            duals,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn ray_index(&self, ray: &[i64]) -> Option<usize> {
        self.rays.iter().position(|r| r == ray)
    }

    pub(crate) fn check_cone(&self, cone: usize) -> Result<()> {
        if cone < self.cones.len() {
            Ok(())
        } else {
            Err(Error::NonMaximalCone(cone))
        }
    }

    /// Dual basis `m_1, ..., m_n` of a maximal cone; integral when the
    /// cone is smooth.
    pub fn dual_basis(&self, cone: usize) -> Result<&[Vec<Rational>]> {
        self.check_cone(cone)?;
        Ok(&self.duals[cone])
    }

    /// Coordinates of `w` in the generators of a cone: `<m_j, w>`.
    pub fn cone_coordinates(&self, cone: usize, w: &[i64]) -> Vec<Rational> {
        self.duals[cone].iter().map(|m| super::linalg::dot(m, w)).collect()
    }

    /// First maximal cone containing `w`.
    pub fn locate(&self, w: &[i64]) -> Option<usize> {
        (0..self.cones.len()).find(|&c| self.cone_coordinates(c, w).iter().all(|x| !x.is_negative()))
    }

    /// `n` if this is the standard fan of `P^n` as built by [`Fan::projective`].
    pub fn projective_dimension(&self) -> Option<usize> {
        let std = Fan::projective(self.dim).ok()?;
        (std.rays == self.rays && std.cones == self.cones).then_some(self.dim)
    }

    /// The fan of `P^n`: ray 0 is `-(e_1 + ... + e_n)`, ray `j` is `e_j`,
    /// and cone `i` omits ray `i`, listing the others cyclically from `i+1`.
    /// Cone `i` is the chart `x_i != 0`.
    pub fn projective(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedFan("P^0 has no fan".into()));
        }
        let mut rays = vec![vec![-1; n]];
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            rays.push(e);
        }
        let cones = (0..=n).map(|i| (1..=n).map(|k| (i + k) % (n + 1)).collect()).collect();
        Fan::new(format!("P{n}"), n, rays, cones)
    }

    /// Hirzebruch surface `F_a`: rays `(1,0), (0,1), (-1,a), (0,-1)`.
    pub fn hirzebruch(a: i64) -> Result<Self> {
        Fan::new(
            format!("F{a}"),
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
    }

    /// Product fan; cones are listed with the first factor varying slowest.
    pub fn product(a: &Fan, b: &Fan) -> Result<Self> {
        let dim = a.dim + b.dim;
        let mut rays = Vec::new();
        for r in &a.rays {
            let mut v = r.clone();
            v.extend(std::iter::repeat(0).take(b.dim));
            rays.push(v);
        }
        for r in &b.rays {
            let mut v = vec![0; a.dim];
            v.extend(r);
            rays.push(v);
        }
        let off = a.rays.len();
        let mut cones = Vec::new();
        for ca in &a.cones {
            for cb in &b.cones {
                let mut c = ca.clone();
                c.extend(cb.iter().map(|j| j + off));
                cones.push(c);
            }
        }
        Fan::new(format!("{}x{}", a.name, b.name), dim, rays, cones)
    }

    /// Built-in fans: `P1`..`P4`, `F0`..`F3`, and `x`-joined products such
    /// as `P1xP1` or `P1xF2`.
    pub fn builtin(name: &str) -> Result<Self> {
        let mut out: Option<Fan> = None;
        for part in name.split('x') {
            let factor = match (part.get(..1), part.get(1..).unwrap_or("")) {
                (Some("P"), k) => match k.parse::<usize>() {
                    Ok(n @ 1..=4) => Fan::projective(n)?,
                    _ => return Err(Error::MalformedFan(format!("unknown built-in fan '{name}'"))),
                },
                (Some("F"), k) => match k.parse::<i64>() {
                    Ok(a @ 0..=3) => Fan::hirzebruch(a)?,
                    _ => return Err(Error::MalformedFan(format!("unknown built-in fan '{name}'"))),
                },
                _ => return Err(Error::MalformedFan(format!("unknown built-in fan '{name}'"))),
            };
            out = Some(match out {
                None => factor,
                Some(prev) => Fan::product(&prev, &factor)?,
            });
        }
        out.ok_or_else(|| Error::MalformedFan("empty fan name".into()))
    }

    /// Parses the TOML fan format: `dim`, `rays` and `cones`, with an
    /// optional `name`.
    pub fn from_toml(text: &str) -> Result<Self> {
        let file: FanFile = toml::from_str(text).map_err(|e| Error::MalformedFan(e.to_string()))?;
        Fan::new(file.name.unwrap_or_else(|| "custom".into()), file.dim, file.rays, file.cones)
    }

    /// A built-in name, or else a path to a fan file.
    pub fn load(spec: &str) -> Result<Self> {
        match Fan::builtin(spec) {
            Ok(f) => Ok(f),
            Err(builtin_err) => {
                let path = Path::new(spec);
                if !path.exists() {
                    return Err(builtin_err);
                }
                let text = std::fs::read_to_string(path).map_err(|e| Error::MalformedFan(format!("{spec}: {e}")))?;
                Fan::from_toml(&text)
            }
        }
    }

    /// Smoothness from the cone determinants; completeness from the wall
    /// pairing certificate together with coverage of a fixed probe set.
    pub fn validate(&self) -> FanVerdict {
        let non_smooth_cones: Vec<usize> = self
            .cones
            .iter()
            .enumerate()
            .filter(|(_, c)| det(&self.generator_rows(c)).abs() != 1)
            .map(|(i, _)| i)
            .collect();
        let rays_used = (0..self.rays.len()).all(|j| self.cones.iter().any(|c| c.contains(&j)));
        let walls_paired = self.walls_paired();
        let probes_covered = self.probes().all(|w| self.locate(&w).is_some());
        let smooth = non_smooth_cones.is_empty();
        let complete = rays_used && walls_paired && probes_covered;
        FanVerdict {
            smooth,
            complete,
            non_smooth_cones,
            rays_used,
            walls_paired,
            probes_covered,
            admissible: smooth && complete,
            admissibility_assumed: self.dim > 2,
        }
    }

    fn generator_rows(&self, cone: &[usize]) -> Vec<Vec<i64>> {
        cone.iter().map(|&j| self.rays[j].clone()).collect()
    }

    /// Every facet lies in exactly two maximal cones, on opposite sides.
    fn walls_paired(&self) -> bool {
        let mut walls: BTreeMap<Vec<usize>, Vec<i64>> = BTreeMap::new();
        for cone in &self.cones {
            for k in 0..self.dim {
                let mut facet: Vec<usize> = cone.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, &j)| j).collect();
                facet.sort_unstable();
                let normal = self.facet_normal(&facet);
                let side: i64 = normal.iter().zip(&self.rays[cone[k]]).map(|(a, b)| a * b).sum();
                walls.entry(facet).or_default().push(side.signum());
            }
        }
        walls.values().all(|sides| sides.len() == 2 && sides[0] * sides[1] == -1)
    }

    /// A normal to the hyperplane spanned by the facet rays, by cofactors.
    fn facet_normal(&self, facet: &[usize]) -> Vec<i64> {
        let rows = self.generator_rows(facet);
        (0..self.dim)
            .map(|i| {
                let minor: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != i).map(|(_, &x)| x).collect())
                    .collect();
                let d = det(&minor) as i64;
                if i % 2 == 0 {
                    d
                } else {
                    -d
                }
            })
            .collect()
    }

    /// Probe vectors: `{-2..2}^n` for `n <= 4`, `{-1..1}^n` above.
    fn probes(&self) -> impl Iterator<Item = Vec<i64>> {
        let r: i64 = if self.dim <= 4 { 2 } else { 1 };
        let base = (2 * r + 1) as usize;
        let n = self.dim;
        (0..base.pow(n as u32)).map(move |mut k| {
            (0..n)
                .map(|_| {
                    let d = (k % base) as i64 - r;
                    k /= base;
                    d
                })
                .collect()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_plane_is_smooth_and_complete() {
        let v = Fan::projective(2).unwrap().validate();
        assert!(v.smooth && v.complete && v.admissible && !v.admissibility_assumed);
    }

    #[test]
    fn single_non_unimodular_cone() {
        let f = Fan::new("bad", 2, vec![vec![1, 0], vec![1, 2]], vec![vec![0, 1]]).unwrap();
        let v = f.validate();
        assert!(!v.smooth);
        assert_eq!(v.non_smooth_cones, vec![0]);
        assert!(!v.complete);
    }

    #[test]
    fn builtins_validate() {
        for name in ["P1", "P2", "P3", "P4", "P1xP1", "F0", "F1", "F2", "F3", "P1xP2", "P1xP1xP1", "P1xF1"] {
            let v = Fan::builtin(name).unwrap().validate();
            assert!(v.smooth && v.complete, "{name}: {v:?}");
        }
        assert!(Fan::builtin("P7").is_err());
        assert!(Fan::builtin("Q2").is_err());
    }

    #[test]
    fn missing_cone_breaks_completeness() {
        let p2 = Fan::projective(2).unwrap();
        let f = Fan::new("cut", 2, p2.rays().to_vec(), p2.cones()[..2].to_vec()).unwrap();
        let v = f.validate();
        assert!(v.smooth && !v.complete && !v.walls_paired);
    }

    #[test]
    fn malformed_rays_rejected() {
        assert!(matches!(Fan::new("z", 2, vec![vec![0, 0]], vec![]), Err(Error::MalformedFan(_))));
        assert!(matches!(Fan::new("np", 1, vec![vec![2]], vec![]), Err(Error::MalformedFan(_))));
    }

    #[test]
    fn dual_basis_matches_homogeneous_chart() {
        // cone 1 of P2 is (e2, -e1-e2): chart x1 != 0 with coordinates
        // x2/x1 = u2/u1 and x0/x1 = 1/u1
        let p2 = Fan::projective(2).unwrap();
        assert_eq!(p2.cones()[1], vec![2, 0]);
        let m = p2.dual_basis(1).unwrap();
        assert_eq!(m, &[vec![q(-1), q(1)], vec![q(-1), q(0)]]);
    }

    #[test]
    fn toml_round() {
        let f = Fan::from_toml("dim = 2\nrays = [[1,0],[0,1],[-1,-1]]\ncones = [[1,2],[2,0],[0,1]]\n").unwrap();
        assert!(f.validate().complete);
        assert!(Fan::from_toml("dim = 2\nrays = [[1,0]]").is_err());
    }
}
