use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::{Field, FieldScalar};
use crate::error::{Error, Result};
use crate::exactlin::IntVector;
use crate::monoids::Monoid;

/// An element of `k[C]`: a finite sum of monomials `c·X^e` with `e ∈ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    monoid: Monoid,
    field: Field,
    terms: BTreeMap<IntVector, FieldScalar>,
}

impl RingElement {
    pub fn new(monoid: &Monoid, field: Field, terms: Vec<(IntVector, FieldScalar)>) -> Result<Self> {
        let mut out = RingElement::zero(monoid, field);
        for (e, c) in terms {
            e.check_dim(monoid.dim())?;
            if !monoid.contains(&e) {
                return Err(Error::NotInMonoid(e.to_string()));
            }
            if c.field() != field {
                return Err(Error::RingMismatch);
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    pub fn zero(monoid: &Monoid, field: Field) -> Self {
        RingElement {
            monoid: monoid.clone(),
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(monoid: &Monoid, field: Field) -> Self {
        Self::monomial(monoid, field, IntVector::zero(monoid.dim())).expect("0 is in every monoid")
    }

    /// `X^e`.
    pub fn monomial(monoid: &Monoid, field: Field, e: IntVector) -> Result<Self> {
        Self::new(monoid, field, vec![(e, field.one())])
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IntVector, &FieldScalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &IntVector> {
        self.terms.keys()
    }

    pub fn coefficient(&self, e: &IntVector) -> FieldScalar {
        self.terms.get(e).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// The exponent when the element is a single monomial with coefficient 1.
    pub fn as_monomial(&self) -> Option<&IntVector> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        c.is_one().then_some(e)
    }

    fn add_term(&mut self, e: IntVector, c: FieldScalar) {
        let sum = match self.terms.get(&e) {
            Some(old) => old.add(&c),
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    fn check_same(&self, other: &RingElement) -> Result<()> {
        if self.monoid != other.monoid || self.field != other.field {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> RingElement {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same(other)?;
        let mut out = RingElement::zero(&self.monoid, self.field);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &FieldScalar) -> Result<RingElement> {
        if c.field() != self.field {
            return Err(Error::RingMismatch);
        }
        let mut out = RingElement::zero(&self.monoid, self.field);
        if c.is_zero() {
            return Ok(out);
        }
        for (e, x) in &self.terms {
            out.terms.insert(e.clone(), x.mul(c));
        }
        Ok(out)
    }

    /// Parse a sum of terms `c*t[a,b,…]`; a bare coefficient is a multiple
    /// of `X^0`, and a bare `t[…]` has coefficient 1.
    pub fn parse(text: &str, monoid: &Monoid, field: Field) -> Result<RingElement> {
        let bad = |why: &str| Error::Parse(format!("{why} in element {text:?}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad("empty input"));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        let mut negative = false;
        for ch in s.chars() {
            match ch {
                '[' => depth += 1,
                ']' => depth -= 1,
                _ => {}
            }
            if (ch == '+' || ch == '-') && depth == 0 && !cur.ends_with('*') {
                if !cur.is_empty() {
                    pieces.push((negative, std::mem::take(&mut cur)));
                } else if !pieces.is_empty() || negative {
                    return Err(bad("dangling sign"));
                }
                negative = ch == '-';
                continue;
            }
            cur.push(ch);
        }
        if depth != 0 {
            return Err(bad("unbalanced brackets"));
        }
        if cur.is_empty() {
            return Err(bad("dangling sign"));
        }
        pieces.push((negative, cur));
        let mut terms = Vec::new();
        for (neg, p) in pieces {
            let (coef, exp) = match p.find("t[") {
                Some(pos) => {
                    let head = &p[..pos];
                    let tail = &p[pos..];
                    let coef = match head.strip_suffix('*') {
                        Some(c) => parse_rational(c).ok_or_else(|| bad("bad coefficient"))?,
                        None if head.is_empty() => BigRational::from_integer(BigInt::from(1)),
                        None => return Err(bad("missing '*'")),
                    };
                    let inner = tail
                        .strip_prefix("t[")
                        .and_then(|t| t.strip_suffix(']'))
                        .ok_or_else(|| bad("bad monomial"))?;
                    let coords = inner
                        .split(',')
                        .map(|x| x.parse::<i64>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|_| bad("bad exponent"))?;
                    (coef, IntVector::new(coords))
                }
                None => (
                    parse_rational(&p).ok_or_else(|| bad("bad coefficient"))?,
                    IntVector::zero(monoid.dim()),
                ),
            };
            let coef = if neg { -coef } else { coef };
            terms.push((exp, field.from_rational(&coef)?));
        }
        RingElement::new(monoid, field, terms)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let coords: Vec<String> = e.coords().iter().map(|x| x.to_string()).collect();
            write!(f, "{c}*t[{}]", coords.join(","))?;
        }
        Ok(())
    }
}
