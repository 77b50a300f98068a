use std::fmt;

use super::embed::Embedding;
use super::field::{Field, FqElem};
use crate::error::{Error, Result};

/// A univariate polynomial over a finite field, constant term first, trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(coeffs: &[FqElem]) -> Result<Poly> {
        let field = coeffs
            .first()
            .map(|c| c.field().clone())
            .ok_or_else(|| Error::Parse("polynomial needs at least one coefficient".into()))?;
        for c in coeffs {
            field.check_same(c.field())?;
        }
        Ok(Poly::from_raw(&field, coeffs.iter().map(|c| c.index()).collect()))
    }

    /// Polynomial with integer coefficients taken in the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::from_raw(field, coeffs.iter().map(|&c| field.from_int(c).index()).collect())
    }

    pub(crate) fn from_raw(field: &Field, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> Vec<FqElem> {
        self.coeffs.iter().map(|&v| self.field.wrap(v)).collect()
    }

    pub(crate) fn eval_raw(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.radd(f.rmul(acc, x), c))
    }

    pub fn eval(&self, x: &FqElem) -> Result<FqElem> {
        self.field.check_same(x.field())?;
        Ok(self.field.wrap(self.eval_raw(x.index())))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let d = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.rmul(f.raw_prime((i as u64 % f.characteristic() as u64) as u32), c))
            .collect();
        Poly::from_raw(f, d)
    }

    pub fn sub_constant(&self, c: &FqElem) -> Result<Poly> {
        self.field.check_same(c.field())?;
        let mut v = self.coeffs.clone();
        if v.is_empty() {
            v.push(0);
        }
        v[0] = self.field.rsub(v[0], c.index());
        Ok(Poly::from_raw(&self.field, v))
    }

    /// Image of the coefficients under an embedding.
    pub fn embed(&self, e: &Embedding) -> Result<Poly> {
        self.field.check_same(e.source())?;
        Ok(Poly::from_raw(
            e.target(),
            self.coeffs.iter().map(|&v| e.map_raw(v)).collect(),
        ))
    }

    /// Synthetic division by (x - a); returns (quotient, remainder).
    pub(crate) fn div_linear_raw(&self, a: u32) -> (Poly, u32) {
        let f = &self.field;
        if self.coeffs.is_empty() {
            return (self.clone(), 0);
        }
        let mut out = vec![0u32; self.coeffs.len() - 1];
        let mut carry = 0u32;
        for i in (0..self.coeffs.len()).rev() {
            let cur = f.radd(self.coeffs[i], f.rmul(carry, a));
            if i == 0 {
                return (Poly::from_raw(f, out), cur);
            }
            out[i - 1] = cur;
            carry = cur;
        }
        unreachable!()
    }

    /// Multiplicity of `a` as a root (0 if not a root). Panics on the zero polynomial.
    pub(crate) fn root_multiplicity_raw(&self, a: u32) -> usize {
        assert!(!self.is_zero());
        let mut cur = self.clone();
        let mut mult = 0;
        loop {
            let (q, r) = cur.div_linear_raw(a);
            if r != 0 {
                return mult;
            }
            mult += 1;
            cur = q;
        }
    }

    /// All roots in F_{q^r} with multiplicities, by exhaustive evaluation.
    pub fn roots(&self, r: u32) -> Result<Vec<(FqElem, usize)>> {
        let e = Embedding::tower(&self.field, r)?;
        self.roots_in(&e)
    }

    /// All roots in the target of `e` with multiplicities, sorted canonically.
    pub fn roots_in(&self, e: &Embedding) -> Result<Vec<(FqElem, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.embed(e)?;
        let t = e.target();
        Ok((0..t.order())
            .filter(|&x| g.eval_raw(x) == 0)
            .map(|x| (t.wrap(x), g.root_multiplicity_raw(x)))
            .collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| format!("({})x^{}", self.field.wrap(c), i))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_examples() {
        let f5 = Field::auto(5, 1).unwrap();
        let r = Poly::from_ints(&f5, &[1, 0, 1]).roots(1).unwrap();
        let got: Vec<_> = r.iter().map(|(x, m)| (x.coeffs()[0], *m)).collect();
        assert_eq!(got, vec![(2, 1), (3, 1)]);

        let r = Poly::from_ints(&f5, &[0, 0, 1]).roots(1).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].0.is_zero());
        assert_eq!(r[0].1, 2);

        let f2 = Field::auto(2, 1).unwrap();
        let g = Poly::from_ints(&f2, &[1, 1, 1]);
        assert!(g.roots(1).unwrap().is_empty());
        let r2 = g.roots(2).unwrap();
        assert_eq!(r2.len(), 2);
        let f4 = f2.extension(2).unwrap();
        let t = f4.generator();
        let mut want = vec![t.clone(), &t + &f4.one()];
        want.sort();
        assert_eq!(r2.iter().map(|(x, _)| x.clone()).collect::<Vec<_>>(), want);

        assert_eq!(Poly::from_ints(&f5, &[0]).roots(1).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn derivative_in_characteristic() {
        let f3 = Field::auto(3, 1).unwrap();
        assert!(Poly::from_ints(&f3, &[0, 0, 0, 1]).derivative().is_zero());
        let d = Poly::from_ints(&f3, &[1, 1, 0, 0, 0, 1]).derivative();
        assert_eq!(d, Poly::from_ints(&f3, &[1, 0, 0, 0, 2]));
    }
}
