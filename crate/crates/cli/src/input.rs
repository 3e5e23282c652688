use std::io::Read;

use limitcm::exactlin::DegreeBox;
use limitcm::lab::{MonoidDoc, RingDoc};
use limitcm::monoids::Monoid;
use limitcm::ring::{Field, QuotientRing};
use limitcm::IntVector;

use crate::{MonoidIn, RingIn};

pub fn read(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

pub fn monoid_doc(path: &str) -> Result<MonoidDoc, String> {
    MonoidDoc::from_json(&read(path)?).map_err(|e| e.to_string())
}

pub fn monoid(m: &MonoidIn) -> Result<Monoid, String> {
    monoid_doc(&m.input)?.build().map_err(|e| e.to_string())
}

/// `Q`, `p`, `Fp` or `F_p`.
pub fn field(text: &str) -> Result<Field, String> {
    let t = text.trim();
    if t == "Q" || t == "QQ" {
        return Ok(Field::Rationals);
    }
    let digits = t.trim_start_matches(['F', 'f', '_', 'p']);
    let p: u32 = digits.parse().map_err(|_| format!("bad field {text:?}"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

pub fn ring_doc(r: &RingIn) -> Result<RingDoc, String> {
    let mut doc = RingDoc::from_json(&read(&r.input)?).map_err(|e| e.to_string())?;
    if let Some(f) = &r.field {
        doc.field = field(f)?;
    }
    Ok(doc)
}

pub fn ring(r: &RingIn) -> Result<QuotientRing, String> {
    ring_doc(r)?.ring().map_err(|e| e.to_string())
}

pub fn degree_box(text: Option<&str>, dim: usize) -> Result<Option<DegreeBox>, String> {
    let Some(t) = text else {
        return Ok(None);
    };
    let b: DegreeBox = t.parse().map_err(|e: limitcm::Error| e.to_string())?;
    b.for_dim(dim).map(Some).map_err(|e| e.to_string())
}

/// `a,b,…` or `t[a,b,…]`.
pub fn degree(text: &str) -> Result<IntVector, String> {
    let t = text.trim();
    let inner = t.strip_prefix("t[").and_then(|s| s.strip_suffix(']')).unwrap_or(t);
    let coords = inner
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| format!("bad degree {text:?}"))?;
    Ok(IntVector::new(coords))
}

/// Comma-separated monomials `t[…],t[…]`.
pub fn monomials(text: &str) -> Result<Vec<IntVector>, String> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let start = rest.find("t[").ok_or_else(|| format!("bad monomial list {text:?}"))?;
        if !rest[..start].trim().trim_matches(',').trim().is_empty() {
            return Err(format!("bad monomial list {text:?}"));
        }
        let end = rest[start..].find(']').ok_or_else(|| format!("bad monomial list {text:?}"))? + start;
        out.push(degree(&rest[start..=end])?);
        rest = rest[end + 1..].trim_start_matches([',', ' ']);
    }
    if out.is_empty() {
        return Err("empty monomial list".into());
    }
    Ok(out)
}

/// Comma-separated integers.
pub fn list<T: std::str::FromStr>(text: &str) -> Result<Vec<T>, String> {
    text.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| format!("bad list {text:?}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(field("Q").unwrap(), Field::Rationals);
        assert_eq!(field("F_5").unwrap(), Field::Prime(5));
        assert_eq!(field("7").unwrap(), Field::Prime(7));
        assert!(field("F4").is_err());
        assert_eq!(monomials("t[1,0], t[1,2]").unwrap(), vec![IntVector::new(vec![1, 0]), IntVector::new(vec![1, 2])]);
        assert!(monomials("t[1,0],x").is_err());
        assert_eq!(degree("2,-1").unwrap(), IntVector::new(vec![2, -1]));
        assert_eq!(list::<u32>("4,6,8").unwrap(), vec![4, 6, 8]);
        assert_eq!(degree_box(Some("-3..3"), 2).unwrap().unwrap().len(), 49);
    }
}
