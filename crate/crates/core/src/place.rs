//! Closed points of `P^1` over the rationals and finite sets of them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::factor::is_irreducible;
use crate::upoly::fmt_rational;
use crate::{parse, Error, Rational, Result, UniPoly};

/// A place of `K = k(t)`.
///
/// Geometric points that are not defined over the rationals are grouped
/// into Galois orbits: `ConjugacyClass(q)` stands for the `deg q` roots of
/// the monic irreducible `q`, all of which share the same valuations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Place {
    /// The point `t = a`.
    Rational(Rational),
    Infinity,
    /// Roots of a monic irreducible polynomial of degree at least 2.
    ConjugacyClass(UniPoly),
}

impl Place {
    pub fn rational(a: Rational) -> Self {
        Place::Rational(a)
    }

    pub fn int(a: i64) -> Self {
        Place::Rational(Rational::from_integer(a.into()))
    }

    /// Validated constructor for a conjugacy class.
    pub fn conjugacy_class(q: UniPoly) -> Result<Self> {
        if !q.is_monic() {
            return Err(Error::InvalidPlace(format!("{q} is not monic")));
        }
        if q.deg() < 2 {
            return Err(Error::InvalidPlace(format!(
                "{q} has degree < 2; use a rational place"
            )));
        }
        if !is_irreducible(&q) {
            return Err(Error::InvalidPlace(format!(
                "{q} is not irreducible over the rationals"
            )));
        }
        Ok(Place::ConjugacyClass(q))
    }

    /// The place cut out by a monic irreducible factor: rational for linear
    /// factors, a conjugacy class otherwise.
    pub(crate) fn from_irreducible(q: UniPoly) -> Self {
        debug_assert!(q.is_monic());
        if q.deg() == 1 {
            Place::Rational(-q.coeff(0))
        } else {
            Place::ConjugacyClass(q)
        }
    }

    /// Number of geometric points in the class.
    pub fn degree(&self) -> u64 {
        match self {
            Place::Rational(_) | Place::Infinity => 1,
            Place::ConjugacyClass(q) => q.deg() as u64,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    /// The monic polynomial whose zero locus is this place; `None` at infinity.
    pub fn local_polynomial(&self) -> Option<UniPoly> {
        match self {
            Place::Rational(a) => Some(UniPoly::linear_root(a)),
            Place::Infinity => None,
            Place::ConjugacyClass(q) => Some(q.clone()),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Place::Rational(_) => 0,
            Place::ConjugacyClass(_) => 1,
            Place::Infinity => 2,
        }
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Rational(a), Place::Rational(b)) => a.cmp(b),
            (Place::ConjugacyClass(p), Place::ConjugacyClass(q)) => p.canonical_cmp(q),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Text encoding: `inf`, a decimal or fraction `a` for `t = a`, or
/// `irr:<monic polynomial in t>`.
impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Rational(a) => write!(f, "{}", fmt_rational(a)),
            Place::Infinity => write!(f, "inf"),
            Place::ConjugacyClass(q) => write!(f, "irr:{}", q.compact()),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Place::Infinity);
        }
        if let Some(rest) = s.strip_prefix("irr:") {
            let q = parse::parse_unipoly(rest)
                .map_err(|e| Error::InvalidPlace(format!("{s}: {e}")))?;
            return Place::conjugacy_class(q);
        }
        parse::parse_rational(s)
            .map(Place::Rational)
            .map_err(|e| Error::InvalidPlace(format!("{s}: {e}")))
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A finite set `S` of places on the genus-0 curve `P^1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PlaceSet {
    places: BTreeSet<Place>,
}

impl PlaceSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: Place) -> bool {
        self.places.insert(p)
    }

    pub fn contains(&self, p: &Place) -> bool {
        self.places.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Place> {
        self.places.iter()
    }

    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }

    pub fn genus(&self) -> u64 {
        0
    }

    /// `|S|` counted over the algebraic closure.
    pub fn geometric_size(&self) -> u64 {
        self.places.iter().map(Place::degree).sum()
    }

    /// `2g - 2 + |S|` with `g = 0`.
    pub fn chi(&self) -> i64 {
        self.geometric_size() as i64 - 2
    }

    pub fn union(&self, other: &PlaceSet) -> PlaceSet {
        PlaceSet {
            places: self.places.union(&other.places).cloned().collect(),
        }
    }

    /// Conjugacy classes in the set, used for compatibility checks.
    pub(crate) fn conjugacy_classes(&self) -> impl Iterator<Item = &UniPoly> {
        self.places.iter().filter_map(|p| match p {
            Place::ConjugacyClass(q) => Some(q),
            _ => None,
        })
    }

    /// Parses a comma-separated list of place encodings; empty means the
    /// empty set.
    pub fn parse_list(s: &str) -> Result<Self> {
        let mut set = PlaceSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            set.insert(part.parse()?);
        }
        Ok(set)
    }
}

impl FromIterator<Place> for PlaceSet {
    fn from_iter<I: IntoIterator<Item = Place>>(iter: I) -> Self {
        PlaceSet {
            places: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a PlaceSet {
    type Item = &'a Place;
    type IntoIter = std::collections::btree_set::Iter<'a, Place>;
    fn into_iter(self) -> Self::IntoIter {
        self.places.iter()
    }
}

impl fmt::Display for PlaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.places.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for PlaceSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.places.iter())
    }
}

impl FromStr for PlaceSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_list(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_puts_infinity_last() {
        let set = PlaceSet::parse_list("inf,irr:t^2+1,3,-1/2,irr:t^2+2,0").unwrap();
        let rendered: Vec<String> = set.iter().map(ToString::to_string).collect();
        assert_eq!(rendered, ["-1/2", "0", "3", "irr:t^2+1", "irr:t^2+2", "inf"]);
    }

    #[test]
    fn geometric_size_weights_degree() {
        let set = PlaceSet::parse_list("inf,irr:t^2+1").unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(set.geometric_size(), 3);
        assert_eq!(PlaceSet::parse_list("").unwrap().geometric_size(), 0);
    }

    #[test]
    fn rejects_reducible_classes() {
        assert!(matches!("irr:t^2-1".parse::<Place>(), Err(Error::InvalidPlace(_))));
        assert!(matches!("irr:t+1".parse::<Place>(), Err(Error::InvalidPlace(_))));
        assert!(matches!("irr:2*t^2+1".parse::<Place>(), Err(Error::InvalidPlace(_))));
        assert!(matches!("irr:t^4+4".parse::<Place>(), Err(Error::InvalidPlace(_))));
    }

    #[test]
    fn decimal_and_fraction_encodings() {
        assert_eq!("0.5".parse::<Place>().unwrap(), "1/2".parse::<Place>().unwrap());
        assert_eq!("-3".parse::<Place>().unwrap(), Place::int(-3));
        assert_eq!(Place::int(-3).to_string(), "-3");
    }
}
