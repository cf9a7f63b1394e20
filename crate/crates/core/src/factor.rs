//! Squarefree decomposition and irreducible factorization over the rationals.
//!
//! Factorization follows the classical Zassenhaus route: factor a squarefree
//! primitive integer polynomial modulo a small prime (distinct-degree then
//! Cantor-Zassenhaus equal-degree splitting), Hensel-lift the modular factors
//! past the Mignotte bound, and recombine subsets by trial division.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Rational, UniPoly};

/// Yun's squarefree decomposition: pairs `(part, exponent)` with monic,
/// squarefree, pairwise coprime parts such that `f = lc(f) * prod part^exponent`.
/// Parts are listed by increasing exponent. Constants yield an empty list.
pub fn squarefree_decomposition(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let f = f.monic();
    let df = f.derivative();
    let g = f.gcd(&df);
    let mut c = f.div_exact(&g).expect("gcd divides f");
    let mut d = &df.div_exact(&g).expect("gcd divides f'") - &c.derivative();
    let mut i = 1u32;
    while !c.is_one() {
        let a = c.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        c = c.div_exact(&a).expect("a divides c");
        d = &d.div_exact(&a).expect("a divides d") - &c.derivative();
        i += 1;
    }
    out
}

/// Complete factorization `f = unit * prod factor^multiplicity` into monic
/// irreducible factors over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (p, e)| {
                &acc * &p.pow(*e)
            })
    }
}

/// Factors a nonzero polynomial into monic irreducibles. Factors are sorted
/// by degree, then coefficients.
pub fn factor(f: &UniPoly) -> Factorization {
    let unit = f.leading().cloned().unwrap_or_else(Rational::zero);
    let mut factors = Vec::new();
    for (part, e) in squarefree_decomposition(f) {
        for irr in factor_squarefree(&part) {
            factors.push((irr, e));
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Factorization { unit, factors }
}

/// Irreducibility over the rationals; constants are not irreducible.
pub fn is_irreducible(f: &UniPoly) -> bool {
    if f.is_constant() {
        return false;
    }
    let fac = factor(f);
    fac.factors.len() == 1 && fac.factors[0].1 == 1
}

/// Monic irreducible factors of a squarefree polynomial.
fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    match f.degree() {
        None | Some(0) => Vec::new(),
        Some(1) => vec![f.monic()],
        Some(_) => {
            let (_, prim) = f.integer_primitive();
            factor_squarefree_integer(prim)
                .into_iter()
                .map(|p| UniPoly::from_integer_coeffs(&p).monic())
                .collect()
        }
    }
}

// ---------------------------------------------------------------------------
// integer polynomial helpers (constant term first)

type ZPoly = Vec<BigInt>;

fn z_trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn z_content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn z_primitive(a: ZPoly) -> ZPoly {
    let mut g = z_content(&a);
    if g.is_zero() {
        return a;
    }
    if a.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    a.into_iter().map(|c| c / &g).collect()
}

/// Exact division over the integers, `None` if not exact.
fn z_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return if a.iter().all(Zero::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let lb = &b[db];
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + db];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[k + j] -= &c * bc;
        }
        quot[k] = c;
    }
    rem.iter().all(Zero::is_zero).then(|| z_trim(quot))
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b` over the integers.
fn z_prem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut rem = a.to_vec();
    while rem.len() > db && !rem.is_empty() {
        let k = rem.len() - 1 - db;
        let top = rem.last().expect("nonempty").clone();
        for c in rem.iter_mut() {
            *c *= lc;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[k + j] -= &top * bc;
        }
        rem = z_trim(rem);
    }
    rem
}

/// Primitive gcd of two nonzero integer polynomials: a modular degree test
/// settles the coprime case, otherwise a primitive remainder sequence.
pub(crate) fn z_gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    for p in [(1u64 << 61) - 1, 4_611_686_018_427_387_847] {
        let field = Fp { p };
        let (ra, rb) = (field.trim(a.iter().map(|c| field.reduce(c)).collect()), field.trim(b.iter().map(|c| field.reduce(c)).collect()));
        if ra.len() == a.len() && rb.len() == b.len() {
            if field.gcd(&ra, &rb).len() == 1 {
                return vec![BigInt::one()];
            }
            break;
        }
    }
    let (mut x, mut y) = (z_primitive(a.to_vec()), z_primitive(b.to_vec()));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = z_primitive(z_prem(&x, &y));
        x = y;
        y = r;
    }
    x
}

// ---------------------------------------------------------------------------
// polynomials over Z/p for a word-sized prime p (constant term first)

type FPoly = Vec<u64>;

#[derive(Clone, Copy)]
struct Fp {
    p: u64,
}

impl Fp {
    fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod p");
        self.pow(a, self.p - 2)
    }

    fn reduce(self, a: &BigInt) -> u64 {
        a.mod_floor(&BigInt::from(self.p)).to_u64().expect("reduced below p")
    }

    fn trim(self, mut a: FPoly) -> FPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn poly_sub(self, a: &[u64], b: &[u64]) -> FPoly {
        let n = a.len().max(b.len());
        self.trim(
            (0..n)
                .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
                .collect(),
        )
    }

    fn poly_mul(self, a: &[u64], b: &[u64]) -> FPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        self.trim(out)
    }

    fn poly_divrem(self, a: &[u64], b: &[u64]) -> (FPoly, FPoly) {
        let db = b.len() - 1;
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let inv = self.inv(b[db]);
        let mut rem = a.to_vec();
        let mut quot = vec![0u64; a.len() - db];
        for k in (0..quot.len()).rev() {
            let c = self.mul(rem[k + db], inv);
            if c != 0 {
                for (j, &bc) in b.iter().enumerate() {
                    rem[k + j] = self.sub(rem[k + j], self.mul(c, bc));
                }
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (self.trim(quot), self.trim(rem))
    }

    fn poly_rem(self, a: &[u64], b: &[u64]) -> FPoly {
        self.poly_divrem(a, b).1
    }

    fn monic(self, a: &[u64]) -> FPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => {
                let inv = self.inv(lc);
                a.iter().map(|&c| self.mul(c, inv)).collect()
            }
        }
    }

    fn gcd(self, a: &[u64], b: &[u64]) -> FPoly {
        let mut a = self.monic(a);
        let mut b = self.monic(b);
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = self.monic(&r);
        }
        a
    }

    /// `(s, t)` with `s a + t b = 1`, `deg s < deg b`, `deg t < deg a`,
    /// for coprime `a`, `b`.
    fn bezout(self, a: &[u64], b: &[u64]) -> (FPoly, FPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant
        let inv = self.inv(r0[0]);
        let s: FPoly = s0.iter().map(|&c| self.mul(c, inv)).collect();
        let s = self.poly_rem(&self.trim(s), b);
        let one_minus = self.poly_sub(&[1], &self.poly_mul(&s, a));
        let (t, r) = self.poly_divrem(&one_minus, b);
        debug_assert!(r.is_empty());
        (s, t)
    }

    fn powmod(self, base: &[u64], e: &BigUint, m: &[u64]) -> FPoly {
        let mut result = vec![1u64];
        let base = self.poly_rem(base, m);
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = self.poly_rem(&self.poly_mul(&result, &result), m);
            if e.bit(i) {
                result = self.poly_rem(&self.poly_mul(&result, &base), m);
            }
        }
        result
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    fn distinct_degree(self, f: &[u64]) -> Vec<(FPoly, usize)> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let x = vec![0u64, 1];
        let p = BigUint::from(self.p);
        let mut h = self.poly_rem(&x, &rest);
        let mut d = 0;
        while rest.len() > 2 * (d + 1) {
            d += 1;
            h = self.powmod(&h, &p, &rest);
            let g = self.gcd(&rest, &self.poly_sub(&h, &x));
            if g.len() > 1 {
                rest = self.poly_divrem(&rest, &g).0;
                h = self.poly_rem(&h, &rest);
                out.push((g, d));
            }
        }
        if rest.len() > 1 {
            let deg = rest.len() - 1;
            out.push((rest, deg));
        }
        out
    }

    /// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
    /// degree `d`.
    fn equal_degree(self, f: &[u64], d: usize, rng: &mut SplitMix) -> Vec<FPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: FPoly = self.trim((0..n).map(|_| rng.next() % self.p).collect());
            if a.len() < 2 {
                continue;
            }
            let mut g = self.gcd(&a, f);
            if g.len() == 1 {
                let b = self.powmod(&a, &exp, f);
                g = self.gcd(&self.poly_sub(&b, &[1]), f);
            }
            if g.len() > 1 && g.len() < f.len() {
                let other = self.monic(&self.poly_divrem(f, &g).0);
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&other, d, rng));
                return out;
            }
        }
    }

    fn factor_monic_squarefree(self, f: &[u64], rng: &mut SplitMix) -> Vec<FPoly> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out
    }
}

struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        const LIMIT: usize = 40_000;
        let mut sieve = vec![true; LIMIT];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..LIMIT {
            if sieve[i] {
                let mut j = i * i;
                while j < LIMIT {
                    sieve[j] = false;
                    j += i;
                }
            }
        }
        (3..LIMIT as u64).filter(|&i| sieve[i as usize]).collect()
    })
}

// ---------------------------------------------------------------------------
// arithmetic modulo a big modulus M (coefficients kept in [0, M))

fn m_reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    z_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn m_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    z_trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero)).mod_floor(m))
            .collect(),
    )
}

fn m_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    z_trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).mod_floor(m))
            .collect(),
    )
}

fn m_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    m_reduce(&out, m)
}

/// Division by a monic polynomial modulo `m`.
fn m_divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].mod_floor(m);
        if !c.is_zero() {
            for (j, bc) in b.iter().enumerate() {
                rem[k + j] = (&rem[k + j] - &c * bc).mod_floor(m);
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (m_reduce(&quot, m), m_reduce(&rem, m))
}

fn m_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

fn to_big(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f = g h (mod m)` and `s g + t h = 1 (mod m)`
/// to the same relations modulo `m^2`. `h` is monic.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m2: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let e = m_sub(f, &m_mul(g, h, m2), m2);
    let (q, r) = m_divrem_monic(&m_mul(s, &e, m2), h, m2);
    let g_new = m_add(&m_add(g, &m_mul(t, &e, m2), m2), &m_mul(&q, g, m2), m2);
    let h_new = m_add(h, &r, m2);
    let b = m_sub(
        &m_add(&m_mul(s, &g_new, m2), &m_mul(t, &h_new, m2), m2),
        &[BigInt::one()],
        m2,
    );
    let (c, d) = m_divrem_monic(&m_mul(s, &b, m2), &h_new, m2);
    let s_new = m_sub(s, &d, m2);
    let t_new = m_sub(
        &m_sub(t, &m_mul(t, &b, m2), m2),
        &m_mul(&c, &g_new, m2),
        m2,
    );
    (g_new, h_new, s_new, t_new)
}

/// Lifts monic modular factors of `f` (with `f = lc * prod factors mod p`) to
/// monic factors modulo `p^(2^k) = big_m`.
fn lift_tree(f: &[BigInt], factors: &[FPoly], field: Fp, big_m: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let lc = f.last().expect("nonzero").clone();
        let inv = m_inverse(&lc, big_m);
        return vec![m_reduce(
            &f.iter().map(|c| c * &inv).collect::<Vec<_>>(),
            big_m,
        )];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc_p = field.reduce(f.last().expect("nonzero"));
    let g0 = left
        .iter()
        .fold(vec![lc_p], |acc, u| field.poly_mul(&acc, u));
    let h0 = right.iter().fold(vec![1u64], |acc, u| field.poly_mul(&acc, u));
    let (s0, t0) = field.bezout(&g0, &h0);
    let (mut g, mut h, mut s, mut t) = (to_big(&g0), to_big(&h0), to_big(&s0), to_big(&t0));
    let mut m = BigInt::from(field.p);
    while &m < big_m {
        let m2 = &m * &m;
        let fm = m_reduce(f, &m2);
        (g, h, s, t) = hensel_step(&fm, &g, &h, &s, &t, &m2);
        m = m2;
    }
    let mut out = lift_tree(&g, left, field, big_m);
    out.extend(lift_tree(&h, right, field, big_m));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half: BigInt = m >> 1;
    z_trim(
        a.iter()
            .map(|c| {
                let c = c.mod_floor(m);
                if c > half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// Irreducible primitive factors of a squarefree primitive integer
/// polynomial of degree at least 2.
fn factor_squarefree_integer(f: ZPoly) -> Vec<ZPoly> {
    let f = z_primitive(f);
    let n = f.len() - 1;
    let lc = f[n].clone();
    let df: ZPoly = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();

    let mut rng = SplitMix(0x5EED_F00D);
    let mut best: Option<(Fp, Vec<FPoly>)> = None;
    let mut tried = 0;
    for &p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let field = Fp { p };
        let fp = field.trim(f.iter().map(|c| field.reduce(c)).collect());
        let dfp = field.trim(df.iter().map(|c| field.reduce(c)).collect());
        if field.gcd(&fp, &dfp).len() != 1 {
            continue;
        }
        let facs = field.factor_monic_squarefree(&field.monic(&fp), &mut rng);
        if facs.len() == 1 {
            return vec![f];
        }
        if best.as_ref().map_or(true, |(_, b)| facs.len() < b.len()) {
            best = Some((field, facs));
        }
        tried += 1;
        if tried >= 3 {
            break;
        }
    }
    let (field, modular) = best.expect("some prime keeps f squarefree");

    // Mignotte: coefficients of lc(f) * (monic factor) are bounded by
    // |lc| * 2^n * ||f||_2; lift until the modulus exceeds twice that.
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound_sq: BigInt = BigInt::from(4) * &lc * &lc * &lc * &lc * (BigInt::one() << (2 * n)) * norm2;
    let p = BigInt::from(field.p);
    let mut big_m = p.clone();
    while &big_m * &big_m <= bound_sq {
        big_m = &big_m * &big_m;
    }
    let lifted = lift_tree(&f, &modular, field, &big_m);
    recombine(f, lifted, &big_m)
}

fn recombine(mut f: ZPoly, mut pool: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut hit = None;
        for subset in combinations(pool.len(), size) {
            let lc = f.last().expect("nonzero").clone();
            let prod = subset
                .iter()
                .fold(vec![lc.clone()], |acc, &i| m_mul(&acc, &pool[i], m));
            let cand = z_primitive(symmetric(&prod, m));
            if cand.len() < 2 {
                continue;
            }
            if !f[0].is_zero() && !cand[0].is_zero() && !(&f[0] % &cand[0]).is_zero() {
                continue;
            }
            if let Some(q) = z_div_exact(&f, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                f = z_primitive(q);
                pool = pool
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, u)| u)
                    .collect();
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        found.push(f);
    }
    found
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn yun_examples() {
        // t^3 (t - 1)
        let f = p(&[0, 0, 0, -1, 1]);
        assert_eq!(
            squarefree_decomposition(&f),
            vec![(p(&[-1, 1]), 1), (p(&[0, 1]), 3)]
        );
        // (t^2 + 1)^2
        let f = p(&[1, 0, 1]).pow(2);
        assert_eq!(squarefree_decomposition(&f), vec![(p(&[1, 0, 1]), 2)]);
        // t^6 + t^3 + 1 is squarefree: gcd with derivative is 1
        let f = p(&[1, 0, 0, 1, 0, 0, 1]);
        assert!(f.gcd(&f.derivative()).is_one());
        assert_eq!(squarefree_decomposition(&f), vec![(f.clone(), 1)]);
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(5, 1).len(), 5);
    }

    #[test]
    fn factors_cyclotomic_product() {
        // t^8 - 1 = (t-1)(t+1)(t^2+1)(t^4+1)
        let f = p(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fac = factor(&f);
        let parts: Vec<_> = fac.factors.iter().map(|(q, _)| q.clone()).collect();
        assert_eq!(
            parts,
            vec![p(&[-1, 1]), p(&[1, 1]), p(&[1, 0, 1]), p(&[1, 0, 0, 0, 1])]
        );
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn swinnerton_dyer_like_quartic_is_irreducible() {
        // t^4 - 10 t^2 + 1 splits into quadratics modulo every prime
        let f = p(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&f));
    }

    #[test]
    fn non_monic_factorization() {
        // (2t + 3)(3t^2 - 5)(t - 7)^2 * 4
        let a = p(&[3, 2]);
        let b = p(&[-5, 0, 3]);
        let c = p(&[-7, 1]);
        let f = (&(&a * &b) * &c.pow(2)).scale(&Rational::from_integer(4.into()));
        let fac = factor(&f);
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.factors.len(), 3);
        assert!(fac.factors.iter().any(|(q, e)| *q == c && *e == 2));
    }
}
