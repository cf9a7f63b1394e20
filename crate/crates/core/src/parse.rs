//! Text grammar for rational functions in `t` and polynomials over `K`.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' exponent)?
//! atom  := number | identifier | '(' expr ')'
//! ```
//!
//! Numbers are integers or decimals (`0.25` is exactly `1/4`); fractions are
//! written with `/`. The identifier `t` is the function-field variable; the
//! remaining identifiers must be declared variables, with `x`, `y`, `z`
//! accepted as aliases for the first three. Division is only allowed by
//! expressions that do not involve the declared variables.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::mpoly::affine_vars;
use crate::{Error, MPoly, RatFun, Rational, Result, UniPoly};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '.') {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Num(decimal(&text).ok_or_else(|| Error::parse(pos, format!("bad number '{text}'")))?)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|(_, c)| c).collect())));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else if c == '\u{2212}' {
            out.push((pos, Tok::Op('-')));
            i += 1;
        } else {
            return Err(Error::parse(pos, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

/// Exact value of an unsigned decimal literal such as `12`, `0.5` or `.25`.
fn decimal(text: &str) -> Option<Rational> {
    let (int, frac) = match text.split_once('.') {
        Some((a, b)) => (a, b),
        None => (text, ""),
    };
    if (int.is_empty() && frac.is_empty()) || frac.contains('.') {
        return None;
    }
    let digits = format!("{int}{frac}");
    let n: BigInt = digits.parse().ok()?;
    let d = num_traits::pow(BigInt::from(10), frac.len());
    Some(Rational::new(n, d))
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let pos = self.pos() + 1;
                self.at += 1;
                let rhs = self.unary()?;
                let c = rhs
                    .as_constant()
                    .ok_or_else(|| Error::parse(pos, "division by an expression in the polynomial variables"))?;
                let inv = c.recip().map_err(|_| Error::parse(pos, "division by zero"))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let paren = self.eat('(');
        let e = match self.peek() {
            Some(Tok::Num(q)) if q.is_integer() => q.to_integer(),
            Some(Tok::Op('-')) => return Err(Error::parse(pos, "exponents must be nonnegative integers")),
            _ => return Err(Error::parse(pos, "expected an integer exponent")),
        };
        self.at += 1;
        if paren && !self.eat(')') {
            return Err(Error::parse(self.pos(), "expected ')'"));
        }
        let e: u32 = e
            .try_into()
            .map_err(|_| Error::parse(pos, "exponent too large"))?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<MPoly> {
        let pos = self.pos();
        match self.toks.get(self.at).map(|(_, t)| t.clone()) {
            Some(Tok::Num(q)) => {
                self.at += 1;
                Ok(MPoly::constant(self.n(), RatFun::constant(q)))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "t" {
                    return Ok(MPoly::constant(self.n(), RatFun::t()));
                }
                let i = self
                    .resolve(&name)
                    .ok_or_else(|| Error::parse(pos, format!("unknown variable '{name}'")))?;
                Ok(MPoly::var(self.n(), i))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::parse(self.pos(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(Tok::Op(c)) => Err(Error::parse(pos, format!("unexpected '{c}'"))),
            None => Err(Error::parse(pos, "unexpected end of input")),
        }
    }

    fn resolve(&self, name: &str) -> Option<usize> {
        if let Some(i) = self.vars.iter().position(|v| v == name) {
            return Some(i);
        }
        let alias = ["x", "y", "z"].iter().position(|a| *a == name)?;
        (alias < self.n()).then_some(alias)
    }
}

/// Parses a polynomial in the named variables with coefficients in `K`.
pub fn parse_mpoly(text: &str, vars: &[String]) -> Result<MPoly> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        vars,
    };
    let out = p.expr()?;
    if p.at < p.toks.len() {
        return Err(Error::parse(p.pos(), "unexpected trailing input"));
    }
    Ok(out)
}

/// Parses a polynomial in `x1, ..., xn` (aliases `x`, `y`, `z`).
pub fn parse_affine(text: &str, n: usize) -> Result<MPoly> {
    parse_mpoly(text, &affine_vars(n))
}

/// Parses an element of `K = k(t)`.
pub fn parse_ratfun(text: &str) -> Result<RatFun> {
    let p = parse_mpoly(text, &[])?;
    Ok(p.as_constant().expect("no polynomial variables declared"))
}

/// Parses a polynomial in `t`.
pub fn parse_unipoly(text: &str) -> Result<UniPoly> {
    let f = parse_ratfun(text)?;
    if !f.is_polynomial() {
        return Err(Error::parse(0, format!("'{text}' is not a polynomial in t")));
    }
    Ok(f.num().clone())
}

/// Parses a rational constant: an optionally signed integer, decimal, or
/// fraction `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let value = match body.split_once('/') {
        Some((a, b)) => {
            let n = decimal(a.trim()).ok_or_else(|| Error::parse(0, format!("bad number '{s}'")))?;
            let d = decimal(b.trim()).ok_or_else(|| Error::parse(0, format!("bad number '{s}'")))?;
            if d.is_zero() {
                return Err(Error::parse(0, "zero denominator"));
            }
            n / d
        }
        None => decimal(body).ok_or_else(|| Error::parse(0, format!("bad number '{s}'")))?,
    };
    Ok(if neg { -value } else { value })
}

/// Parses `a,b,...` into rationals (used for exponent and ray lists).
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_rational)
        .collect()
}

/// Parses `a,b,...` into integers.
pub fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        out.push(part.parse().map_err(|_| Error::parse(0, format!("bad integer '{part}'")))?);
    }
    Ok(out)
}

/// Splits a comma-separated list of expressions at top-level commas.
pub fn split_top_level(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn ratfun_examples() {
        let f = parse_ratfun("t^2/(t-1)").unwrap();
        assert_eq!(f, RatFun::new(UniPoly::from_ints(&[0, 0, 1]), UniPoly::from_ints(&[-1, 1])).unwrap());
        assert_eq!(parse_ratfun("-t^2").unwrap().num(), &UniPoly::from_ints(&[0, 0, -1]));
        assert_eq!(parse_ratfun("2/3*t").unwrap().num().coeff(1), r(2, 3));
        assert_eq!(parse_ratfun("0.25").unwrap().as_constant().unwrap(), r(1, 4));
    }

    #[test]
    fn mpoly_examples() {
        let f = parse_affine("1 + t*x", 1).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.coeff(&crate::ExponentVector::new(vec![1])).unwrap(), &RatFun::t());
        let g = parse_affine("x^3 + y^3 + 1", 2).unwrap();
        assert_eq!(g, parse_affine("x1^3 + x2^3 + 1", 2).unwrap());
        let h = parse_mpoly("x0 + x1 + x2", &crate::mpoly::homogeneous_vars(2)).unwrap();
        assert!(h.is_homogeneous());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_ratfun("t + * 2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_affine("1/x", 1), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_ratfun("t^-1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ratfun("1/(t-t)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ratfun("s"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_ratfun("(t"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ratfun(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_affine("w", 3), Err(Error::Parse { .. })));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), r(-1, 2));
        assert_eq!(parse_rational("1.5").unwrap(), r(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn top_level_split() {
        assert_eq!(split_top_level("t, (t+1)/(t-1), 3"), ["t", "(t+1)/(t-1)", "3"]);
        assert!(split_top_level("").is_empty());
    }
}
