use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactlin::IntVector;
use crate::monoids::Monoid;

/// Longest sequence the subset-indexed complexes accept.
pub const MAX_SEQUENCE_LEN: usize = 6;

/// Nonzero exponents `c_1, …, c_ℓ` of the monomials `X^{c_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSequence {
    exponents: Vec<IntVector>,
}

impl MonomialSequence {
    pub fn new(monoid: &Monoid, exponents: Vec<IntVector>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::EmptySequence);
        }
        if exponents.len() > MAX_SEQUENCE_LEN {
            return Err(Error::Unsupported(format!(
                "sequences longer than {MAX_SEQUENCE_LEN}"
            )));
        }
        for c in &exponents {
            c.check_dim(monoid.dim())?;
            if c.is_zero() {
                return Err(Error::ZeroGenerator);
            }
            if !monoid.contains(c) {
                return Err(Error::NotInMonoid(c.to_string()));
            }
        }
        Ok(MonomialSequence { exponents })
    }

    /// Parse `t[1,0],t[1,1]`; commas inside brackets belong to a monomial.
    pub fn parse(text: &str, monoid: &Monoid) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut items = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        for ch in s.chars() {
            match ch {
                '[' => depth += 1,
                ']' => depth -= 1,
                ',' if depth == 0 => {
                    items.push(std::mem::take(&mut cur));
                    continue;
                }
                _ => {}
            }
            cur.push(ch);
        }
        items.push(cur);
        let bad = |item: &str| Error::Parse(format!("bad monomial {item:?} in sequence {text:?}"));
        let mut exps = Vec::new();
        for item in &items {
            let inner = item
                .strip_prefix("t[")
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| bad(item))?;
            let coords = inner
                .split(',')
                .map(|x| x.parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad(item))?;
            exps.push(IntVector::new(coords));
        }
        MonomialSequence::new(monoid, exps)
    }

    pub fn exponents(&self) -> &[IntVector] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.exponents[0].dim()
    }

    /// `Σ_{i∈S} c_i` for the subset encoded by `mask`.
    pub fn subset_sum(&self, mask: u32) -> IntVector {
        let mut out = IntVector::zero(self.dim());
        for (i, c) in self.exponents.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out = &out + c;
            }
        }
        out
    }

    /// Sum of all exponents, the degree of `∏ X^{c_i}`.
    pub fn product(&self) -> IntVector {
        self.subset_sum((1u32 << self.len()) - 1)
    }
}

impl fmt::Display for MonomialSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let coords: Vec<String> = c.coords().iter().map(|x| x.to_string()).collect();
            write!(f, "t[{}]", coords.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for MonomialSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string().serialize(s)
    }
}
