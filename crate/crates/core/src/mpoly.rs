//! Sparse multivariate polynomials over `K = k(t)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::funfield::{order_at, places_of};
use crate::upoly::fmt_rational;
use crate::{Error, Place, RatFun, Result, UniPoly};

/// Largest support for which [`MPoly::vanishing_subsums`] enumerates subsets.
pub const SUBSUM_CAP: usize = 20;

/// An exponent vector `i = (i_1, ..., i_n)`; ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` if nonnegative componentwise.
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    fn with(&self, i: usize, e: u32) -> Self {
        let mut v = self.0.clone();
        v[i] = e;
        ExponentVector(v)
    }

    /// Renders `x1^2*x3` style monomials with the given variable names;
    /// empty for the zero vector.
    pub fn render(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        parts.join("*")
    }
}

/// Default affine variable names `x1, ..., xn`.
pub fn affine_vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Homogeneous variable names `x0, ..., xn`.
pub fn homogeneous_vars(n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("x{i}")).collect()
}

/// `F = sum a_i x^i` with nonzero coefficients `a_i` in `K`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, RatFun>,
}

/// Degree data and the hypotheses on `G` used by the abc-type checker.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub total_degree: u32,
    pub per_variable: Vec<u32>,
    pub has_monomial_factor: bool,
    pub is_squarefree: bool,
    pub nonzero_at_origin: bool,
}

/// Nonempty support subsets whose evaluated subsum vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsumReport {
    pub degenerate: bool,
    pub witnesses: Vec<Vec<ExponentVector>>,
    pub subsets_checked: u64,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: RatFun) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, RatFun::one())
    }

    /// The variable `x_{i+1}` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(nvars, i), RatFun::one())
    }

    pub fn monomial(e: ExponentVector, c: RatFun) -> Self {
        let nvars = e.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MPoly { nvars, terms }
    }

    /// Sums the given terms; repeated exponents are combined.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (ExponentVector, RatFun)>) -> Result<Self> {
        let mut out = MPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    got: e.len(),
                });
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, e: ExponentVector, c: RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &RatFun)> {
        self.terms.iter()
    }

    /// The support `I_F`.
    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff(&self, e: &ExponentVector) -> Option<&RatFun> {
        self.terms.get(e)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> RatFun {
        self.terms
            .get(&ExponentVector::zero(self.nvars))
            .cloned()
            .unwrap_or_else(RatFun::zero)
    }

    /// The coefficient if `F` is constant in the `x_i`.
    pub fn as_constant(&self) -> Option<RatFun> {
        match self.terms.len() {
            0 => Some(RatFun::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::total_degree).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e.0[i]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(ExponentVector::total_degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Whether every coefficient lies in the ground field.
    pub fn has_constant_coefficients(&self) -> bool {
        self.terms.values().all(RatFun::is_constant)
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = MPoly::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn partial_derivative(&self, i: usize) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.0[i];
            if k > 0 {
                out.add_term(e.with(i, k - 1), c.scale(&crate::Rational::from_integer(k.into())));
            }
        }
        out
    }

    fn check_arity(&self, got: usize) -> Result<()> {
        if got != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got,
            });
        }
        Ok(())
    }

    /// Value of each term `a_i g^i` at the point `g`, in support order.
    pub fn term_values(&self, g: &[RatFun]) -> Result<Vec<RatFun>> {
        self.check_arity(g.len())?;
        let mut cache: BTreeMap<(usize, u32), RatFun> = BTreeMap::new();
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (j, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = cache
                    .entry((j, k))
                    .or_insert_with(|| g[j].pow(k as i64).expect("nonnegative power"));
                v = &v * p;
            }
            out.push(v);
        }
        Ok(out)
    }

    /// `F(g_1, ..., g_n)`.
    pub fn evaluate(&self, g: &[RatFun]) -> Result<RatFun> {
        let values = self.term_values(g)?;
        Ok(sum_ratfuns(&values))
    }

    /// `F(G_1, ..., G_n)` for polynomials `G_j` in a common set of variables.
    pub fn compose(&self, gs: &[MPoly]) -> Result<MPoly> {
        self.check_arity(gs.len())?;
        let m = gs.first().map_or(0, MPoly::nvars);
        if gs.iter().any(|g| g.nvars != m) {
            return Err(Error::InvalidArgument("substituted polynomials disagree on variable count".into()));
        }
        let mut out = MPoly::zero(m);
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(m, c.clone());
            for (j, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    term = &term * &gs[j].pow(k);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `v_p(F) = min_i v_p(a_i)`.
    pub fn gauss_order(&self, p: &Place) -> Result<i64> {
        let mut best: Option<i64> = None;
        for c in self.terms.values() {
            let v = order_at(c, p)?;
            best = Some(best.map_or(v, |b| b.min(v)));
        }
        best.ok_or(Error::ZeroInput("gauss_order"))
    }

    /// Every place where some coefficient has a zero or pole, plus infinity.
    fn coefficient_places(&self) -> Result<BTreeSet<Place>> {
        let mut places = BTreeSet::new();
        places.insert(Place::Infinity);
        for c in self.terms.values() {
            for (p, _) in places_of(c)? {
                places.insert(p);
            }
        }
        Ok(places)
    }

    /// `(h(F), h~(F))` with `h(F) = sum -v_p(F)` and
    /// `h~(F) = sum -min(0, v_p(F))`, both weighted by place degree.
    pub fn poly_heights(&self) -> Result<(u64, u64)> {
        if self.is_zero() {
            return Err(Error::ZeroInput("poly_heights"));
        }
        let mut h: i64 = 0;
        let mut h_tilde: i64 = 0;
        for p in self.coefficient_places()? {
            let v = self.gauss_order(&p)?;
            let d = p.degree() as i64;
            h -= v * d;
            h_tilde -= v.min(0) * d;
        }
        debug_assert!(h >= 0);
        Ok((h as u64, h_tilde as u64))
    }

    /// Lists every nonempty subset of the support whose subsum vanishes at
    /// `g`. Subsets are walked in Gray-code order over residues modulo two
    /// primes; candidates are confirmed exactly.
    pub fn vanishing_subsums(&self, g: &[RatFun]) -> Result<SubsumReport> {
        let values = self.term_values(g)?;
        let support = self.support();
        let subsets = vanishing_subsets(&values)?;
        let mut witnesses: Vec<Vec<ExponentVector>> = subsets
            .iter()
            .map(|members| members.iter().map(|&i| support[i].clone()).collect())
            .collect();
        witnesses.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(SubsumReport {
            degenerate: !witnesses.is_empty(),
            witnesses,
            subsets_checked: (1u64 << values.len()) - 1,
        })
    }

    /// Degree data, monomial-factor and squarefreeness flags.
    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        if self.is_zero() {
            return Err(Error::ZeroInput("degree_profile"));
        }
        let per_variable: Vec<u32> = (0..self.nvars).map(|i| self.degree_in(i)).collect();
        let has_monomial_factor = (0..self.nvars).any(|i| self.terms.keys().all(|e| e.0[i] > 0));
        let is_squarefree = (0..self.nvars).all(|i| {
            per_variable[i] == 0 || gcd(self, &self.partial_derivative(i)).degree_in(i) == 0
        });
        Ok(DegreeProfile {
            total_degree: self.total_degree().unwrap_or(0),
            per_variable,
            has_monomial_factor,
            is_squarefree,
            nonzero_at_origin: !self.constant_term().is_zero(),
        })
    }

    /// `F / F(0)`, so that the constant term becomes 1.
    pub fn normalize_at_origin(&self) -> Result<MPoly> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::Hypothesis("polynomial vanishes at the origin".into()));
        }
        Ok(self.scale(&c.recip()?))
    }

    /// Divides by the lex-leading coefficient.
    fn monic(&self) -> MPoly {
        match self.terms.iter().next_back() {
            Some((_, c)) => self.scale(&c.recip().expect("stored coefficients are nonzero")),
            None => self.clone(),
        }
    }

    /// Exact quotient `self / d` if `d` divides `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (de, dc) = d.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        while let Some((re, rc)) = rem.terms.iter().next_back() {
            let e = re.checked_sub(de)?;
            let c = rc / dc;
            let step = MPoly::monomial(e.clone(), c.clone());
            rem = &rem - &(&step * d);
            quot.add_term(e, c);
        }
        Some(quot)
    }

    /// Writes `F` as a polynomial in `x_v`: coefficient `k` collects the
    /// terms of `x_v`-degree `k`, with that variable removed.
    fn coefficients_in(&self, v: usize) -> Vec<MPoly> {
        let mut out = vec![MPoly::zero(self.nvars); self.degree_in(v) as usize + 1];
        for (e, c) in &self.terms {
            out[e.0[v] as usize].add_term(e.with(v, 0), c.clone());
        }
        out
    }

    fn shift_in(&self, v: usize, k: u32) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.with(v, e.0[v] + k), c.clone()))
                .collect(),
        }
    }

    fn involves(&self, v: usize) -> bool {
        self.terms.keys().any(|e| e.0[v] > 0)
    }

    pub fn render(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = e.render(vars);
            let (negative, body) = match c.as_constant() {
                Some(q) => {
                    let a = q.abs();
                    let body = if mono.is_empty() {
                        fmt_rational(&a)
                    } else if a == crate::Rational::from_integer(1.into()) {
                        mono
                    } else {
                        format!("{}*{}", fmt_rational(&a), mono)
                    };
                    (q.is_negative(), body)
                }
                None if mono.is_empty() => (false, format!("({c})")),
                None => (false, format!("({c})*{mono}")),
            };
            match (idx, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

/// Every nonempty set of indices whose values sum to zero, in Gray-code
/// visiting order. At most [`SUBSUM_CAP`] values.
pub fn vanishing_subsets(values: &[RatFun]) -> Result<Vec<Vec<usize>>> {
    let k = values.len();
    if k > SUBSUM_CAP {
        return Err(Error::SubsumInfeasible {
            terms: k,
            cap: SUBSUM_CAP,
        });
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    let numerators = common_numerators(values);
    let residues: Vec<Vec<[u64; 2]>> = numerators.iter().map(residue_vector).collect();
    let width = residues.iter().map(Vec::len).max().unwrap_or(0);

    let mut acc = vec![[0u64; 2]; width];
    let mut mask: u64 = 0;
    let mut out = Vec::new();
    for step in 1..(1u64 << k) {
        let bit = step.trailing_zeros() as usize;
        let adding = mask & (1 << bit) == 0;
        mask ^= 1 << bit;
        for (slot, r) in acc.iter_mut().zip(&residues[bit]) {
            for j in 0..2 {
                let term = if adding { r[j] } else { PRIMES[j] - r[j] };
                slot[j] = add_mod(slot[j], term, PRIMES[j]);
            }
        }
        if acc.iter().all(|s| s[0] == 0 && s[1] == 0) {
            let members: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
            let exact = members.iter().fold(UniPoly::zero(), |s, &i| &s + &numerators[i]);
            if exact.is_zero() {
                out.push(members);
            }
        }
    }
    Ok(out)
}

/// Sum of rational functions over a single common denominator.
fn sum_ratfuns(values: &[RatFun]) -> RatFun {
    if values.is_empty() {
        return RatFun::zero();
    }
    let (numerators, lcm) = numerators_over_lcm(values);
    let num = numerators.iter().fold(UniPoly::zero(), |s, p| &s + p);
    RatFun::new(num, lcm).expect("lcm is nonzero")
}

fn numerators_over_lcm(values: &[RatFun]) -> (Vec<UniPoly>, UniPoly) {
    let lcm = values.iter().fold(UniPoly::one(), |acc, f| {
        let g = acc.gcd(f.den());
        (&acc * f.den()).div_exact(&g).expect("gcd divides product")
    });
    let nums = values
        .iter()
        .map(|f| &lcm.div_exact(f.den()).expect("den divides lcm") * f.num())
        .collect();
    (nums, lcm)
}

/// Numerators of the values over their common denominator, so that a subsum
/// vanishes iff the corresponding numerators sum to zero.
fn common_numerators(values: &[RatFun]) -> Vec<UniPoly> {
    numerators_over_lcm(values).0
}

const PRIMES: [u64; 2] = [2_305_843_009_213_693_951, 4_611_686_018_427_387_847];

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn residue(c: &crate::Rational, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let n = c.numer().mod_floor(&pb).to_u64().expect("reduced below p");
    let d = c.denom().mod_floor(&pb).to_u64().expect("reduced below p");
    // A denominator divisible by p makes the residue meaningless; any value
    // works since candidate subsets are confirmed exactly.
    if d == 0 {
        return 1;
    }
    let inv = pow_mod(d, p - 2, p);
    ((n as u128 * inv as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r: u64 = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn residue_vector(p: &UniPoly) -> Vec<[u64; 2]> {
    p.coeffs()
        .iter()
        .map(|c| [residue(c, PRIMES[0]), residue(c, PRIMES[1])])
        .collect()
}

/// Monic gcd over `K` by recursive content and primitive pseudo-remainder
/// sequences, eliminating the highest-index variable first.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    let vars: Vec<usize> = (0..a.nvars).collect();
    gcd_in(a, b, &vars).monic()
}

fn gcd_in(a: &MPoly, b: &MPoly, vars: &[usize]) -> MPoly {
    let n = a.nvars;
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let Some((&v, rest)) = vars.split_last() else {
        return MPoly::one(n);
    };
    if !a.involves(v) && !b.involves(v) {
        return gcd_in(a, b, rest);
    }
    let (ca, pa) = content_split(a, v, rest);
    let (cb, pb) = content_split(b, v, rest);
    let c = gcd_in(&ca, &cb, rest);
    let (mut x, mut y) = if pa.degree_in(v) >= pb.degree_in(v) { (pa, pb) } else { (pb, pa) };
    while !y.is_zero() {
        let r = pseudo_remainder(&x, &y, v);
        x = y;
        y = if r.is_zero() { r } else { content_split(&r, v, rest).1 };
    }
    (&c * &x).monic()
}

/// `(content, primitive part)` of `f` viewed in `x_v` over the other variables.
fn content_split(f: &MPoly, v: usize, rest: &[usize]) -> (MPoly, MPoly) {
    let coeffs = f.coefficients_in(v);
    let mut cont = MPoly::zero(f.nvars);
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        cont = gcd_in(&cont, c, rest);
        if cont.as_constant().is_some() {
            break;
        }
    }
    let cont = cont.monic();
    let prim = f.div_exact(&cont).expect("content divides polynomial").monic();
    (cont, prim)
}

fn pseudo_remainder(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    let db = b.degree_in(v);
    if db == 0 {
        return MPoly::zero(a.nvars);
    }
    let lb = b.coefficients_in(v).pop().expect("nonzero divisor");
    let mut r = a.clone();
    while !r.is_zero() && r.involves(v) && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.coefficients_in(v).pop().expect("nonzero remainder");
        r = &(&lb * &r) - &(&lr * &b.shift_in(v, dr - db));
    }
    r
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars.max(rhs.nvars));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// Uses the affine names `x1, ..., xn`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&affine_vars(self.nvars)))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({self})", self.nvars)
    }
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_mpoly, parse_ratfun};

    fn mp(s: &str, n: usize) -> MPoly {
        parse_mpoly(s, &affine_vars(n)).unwrap()
    }

    fn rf(s: &str) -> RatFun {
        parse_ratfun(s).unwrap()
    }

    #[test]
    fn gauss_order_examples() {
        assert_eq!(mp("1 + t*x", 1).gauss_order(&Place::Infinity).unwrap(), -1);
        assert_eq!(mp("x + y", 2).gauss_order(&Place::int(0)).unwrap(), 0);
        assert_eq!(mp("(1/t)*x + t*y", 2).gauss_order(&Place::int(0)).unwrap(), -1);
        assert!(MPoly::zero(2).gauss_order(&Place::int(0)).is_err());
    }

    #[test]
    fn height_examples() {
        assert_eq!(mp("1 + t*x", 1).poly_heights().unwrap(), (1, 1));
        assert_eq!(mp("3 + 2*x - y", 2).poly_heights().unwrap(), (0, 0));
        // v_0 = 1 and v_inf = -1: the signed sum cancels, the relevant
        // height keeps only the pole at infinity.
        assert_eq!(mp("t + t*x", 1).poly_heights().unwrap(), (0, 1));
    }

    #[test]
    fn height_is_scaling_invariant() {
        let f = mp("(t^2+1)*x + 1/(t-3)*y + t", 2);
        let h = f.poly_heights().unwrap().0;
        for l in ["t", "1/(t^2+t+1)", "(t-1)^3/(t+2)", "7"] {
            assert_eq!(f.scale(&rf(l)).poly_heights().unwrap().0, h, "scaled by {l}");
        }
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(mp("x + y + 1", 2).evaluate(&[rf("t^6"), rf("t^3")]).unwrap(), rf("t^6 + t^3 + 1"));
        assert!(mp("x*y - 1", 2).evaluate(&[rf("t"), rf("1/t")]).unwrap().is_zero());
        assert_eq!(mp("x^2", 1).evaluate(&[rf("t-1")]).unwrap(), rf("(t-1)^2"));
        assert!(matches!(
            mp("x", 1).evaluate(&[]),
            Err(Error::ArityMismatch { expected: 1, got: 0 })
        ));
    }

    #[test]
    fn subsum_examples() {
        let f = mp("x + y + 1", 2);
        let r = f.vanishing_subsums(&[rf("t"), rf("-t")]).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.witnesses, vec![vec![ExponentVector::new(vec![0, 1]), ExponentVector::new(vec![1, 0])]]);
        assert!(!f.vanishing_subsums(&[rf("t"), rf("t^2")]).unwrap().degenerate);
        let g = mp("x - y", 2);
        let r = g.vanishing_subsums(&[rf("t"), rf("t")]).unwrap();
        assert_eq!(r.witnesses, vec![g.support()]);
    }

    #[test]
    fn subsum_cap_enforced() {
        let terms = (0..21).map(|k| (ExponentVector::new(vec![k]), RatFun::one()));
        let f = MPoly::from_terms(1, terms).unwrap();
        assert!(matches!(
            f.vanishing_subsums(&[rf("t")]),
            Err(Error::SubsumInfeasible { terms: 21, cap: 20 })
        ));
    }

    #[test]
    fn profile_examples() {
        let p = mp("x^3 + y^3 + 1", 2).degree_profile().unwrap();
        assert_eq!(
            p,
            DegreeProfile {
                total_degree: 3,
                per_variable: vec![3, 3],
                has_monomial_factor: false,
                is_squarefree: true,
                nonzero_at_origin: true,
            }
        );
        let p = mp("x^2*y", 2).degree_profile().unwrap();
        assert!(p.has_monomial_factor && !p.is_squarefree && !p.nonzero_at_origin);
        assert!(!mp("(x+1)^2", 2).degree_profile().unwrap().is_squarefree);
        assert!(!mp("(x + t*y)^2*(y+1)", 2).degree_profile().unwrap().is_squarefree);
        assert!(mp("(x + t*y)*(x - y + 1)", 2).degree_profile().unwrap().is_squarefree);
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let a = mp("x + t*y + 1", 2);
        let b = mp("x - y", 2);
        let c = mp("y^2 + 1/t", 2);
        let g = gcd(&(&a * &b), &(&a * &c));
        assert_eq!(g, a.monic());
    }

    #[test]
    fn exact_division() {
        let a = mp("x^2 - y^2", 2);
        assert_eq!(a.div_exact(&mp("x - y", 2)).unwrap(), mp("x + y", 2));
        assert!(a.div_exact(&mp("x - 2*y", 2)).is_none());
    }

    #[test]
    fn render_shapes() {
        assert_eq!(mp("1 + t*x", 1).to_string(), "(t)*x1 + 1");
        assert_eq!(mp("x^3 + y^3 + 1", 2).to_string(), "x1^3 + x2^3 + 1");
        assert_eq!(mp("-x + 2/3*y - 1", 2).to_string(), "-x1 + 2/3*x2 - 1");
    }
}
