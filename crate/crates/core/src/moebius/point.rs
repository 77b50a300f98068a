use std::fmt;

use crate::error::{Error, Result};
use crate::gfq::{Embedding, Field, FqElem};

/// A point of the projective line: [x : 1] or [1 : 0]. Sorted with every
/// affine point (canonical element order) before infinity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PP1 {
    Affine(FqElem),
    Infinity,
}

impl PP1 {
    pub fn field(&self) -> Option<&Field> {
        match self {
            PP1::Affine(x) => Some(x.field()),
            PP1::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, PP1::Infinity)
    }

    /// All points of P1 over `field`, sorted.
    pub fn all(field: &Field) -> Vec<PP1> {
        field
            .elements()
            .map(PP1::Affine)
            .chain(std::iter::once(PP1::Infinity))
            .collect()
    }

    pub fn embed(&self, e: &Embedding) -> Result<PP1> {
        match self {
            PP1::Affine(x) => Ok(PP1::Affine(e.map(x)?)),
            PP1::Infinity => Ok(PP1::Infinity),
        }
    }

    /// Whether the point is defined over the field (infinity always is).
    pub fn lies_in(&self, field: &Field) -> bool {
        self.field().is_none_or(|f| f.same(field))
    }

    pub fn parse(field: &Field, s: &str) -> Result<PP1> {
        let s = s.trim();
        if s == "inf" {
            Ok(PP1::Infinity)
        } else {
            Ok(PP1::Affine(field.parse_elem(s)?))
        }
    }

    /// Parses a comma-separated stream of points: each affine point takes
    /// exactly `degree` numeric tokens, and `inf` is a single token.
    pub fn parse_list(field: &Field, s: &str) -> Result<Vec<PP1>> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Vec::new());
        }
        let n = field.degree() as usize;
        let toks: Vec<&str> = s.split(',').map(str::trim).collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < toks.len() {
            if toks[i] == "inf" {
                out.push(PP1::Infinity);
                i += 1;
                continue;
            }
            if i + n > toks.len() || toks[i..i + n].contains(&"inf") {
                return Err(Error::Parse(format!(
                    "point list {s:?}: affine points need {n} coefficients each"
                )));
            }
            out.push(PP1::Affine(field.parse_elem(&toks[i..i + n].join(","))?));
            i += n;
        }
        Ok(out)
    }
}

impl fmt::Display for PP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PP1::Affine(x) => write!(f, "{x}"),
            PP1::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for PP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PP1::Affine(x) => write!(f, "({x})"),
            PP1::Infinity => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_lists() {
        let f5 = Field::auto(5, 1).unwrap();
        let pts = PP1::parse_list(&f5, "0,inf").unwrap();
        assert_eq!(pts, vec![PP1::Affine(f5.zero()), PP1::Infinity]);
        let f25 = Field::auto(5, 2).unwrap();
        let pts = PP1::parse_list(&f25, "1,0,inf,0,1").unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[0], PP1::Affine(f25.one()));
        assert!(PP1::parse_list(&f25, "1,inf").is_err());
        assert!(PP1::parse_list(&f25, "").unwrap().is_empty());
    }

    #[test]
    fn infinity_sorts_last() {
        let f3 = Field::auto(3, 1).unwrap();
        let mut v = vec![PP1::Infinity, PP1::Affine(f3.from_int(2)), PP1::Affine(f3.zero())];
        v.sort();
        assert_eq!(v, PP1::all(&f3).into_iter().filter(|p| *p != PP1::Affine(f3.one())).collect::<Vec<_>>());
    }
}
