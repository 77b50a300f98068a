use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::prime_poly;
use crate::error::{Error, Result};

/// Largest field order the engine will tabulate.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

pub(crate) fn pow_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Modulus choice when building a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Modulus {
    /// Lexicographically smallest irreducible monic polynomial of the degree.
    Auto,
    /// Explicit coefficients, constant term first, `n + 1` entries, monic.
    Explicit(Vec<u32>),
}

struct FieldData {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    /// place[i] is the weight of coefficient i in an element index.
    place: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The finite field F_{p^n}, presented as F_p[t] / (modulus).
///
/// Elements are addressed by an index in `0..q` whose natural order is the
/// lexicographic order on coefficient vectors `(c0, c1, ..., c_{n-1})`, so
/// sorting indices sorts elements canonically. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl Field {
    pub fn new(p: u32, n: u32, modulus: Modulus) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64)
            .checked_pow(n)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge {
                p,
                n,
                max: MAX_FIELD_ORDER,
            })? as u32;
        let modulus = match modulus {
            Modulus::Auto => auto_modulus(p, n, q),
            Modulus::Explicit(m) => {
                if m.len() != n as usize + 1 || m[n as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus { expected: n });
                }
                if !prime_poly::is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus(format_poly(&m)));
                }
                m
            }
        };
        let mut place = vec![1u32; n as usize];
        for i in (0..n as usize - 1).rev() {
            place[i] = place[i + 1] * p;
        }
        let mut data = FieldData {
            p,
            n,
            q,
            modulus,
            place,
            exp: Vec::new(),
            log: Vec::new(),
        };
        build_tables(&mut data);
        Ok(Field(Arc::new(data)))
    }

    /// Shorthand for a field with the automatically chosen modulus.
    pub fn auto(p: u32, n: u32) -> Result<Field> {
        static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.lock().unwrap().get(&(p, n)) {
            return Ok(f.clone());
        }
        let f = Field::new(p, n, Modulus::Auto)?;
        cache.lock().unwrap().insert((p, n), f.clone());
        Ok(f)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.n
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn same(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.n == other.0.n && self.0.modulus == other.0.modulus)
    }

    pub(crate) fn check_same(&self, other: &Field) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }

    // ---- raw index arithmetic ----

    pub(crate) fn coeffs_of(&self, v: u32) -> Vec<u32> {
        let d = &self.0;
        d.place.iter().map(|&w| (v / w) % d.p).collect()
    }

    pub(crate) fn index_of(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().zip(&self.0.place).map(|(&c, &w)| c * w).sum()
    }

    pub(crate) fn raw_one(&self) -> u32 {
        self.0.place[0]
    }

    pub(crate) fn raw_prime(&self, c: u32) -> u32 {
        (c % self.0.p) * self.0.place[0]
    }

    pub(crate) fn radd(&self, a: u32, b: u32) -> u32 {
        let d = &self.0;
        if d.p == 2 {
            return a ^ b;
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let mut out = 0;
        let (mut a, mut b) = (a, b);
        let mut w = 1;
        for _ in 0..d.n {
            let s = (a % d.p + b % d.p) % d.p;
            out += s * w;
            a /= d.p;
            b /= d.p;
            w *= d.p;
        }
        out
    }

    pub(crate) fn rneg(&self, a: u32) -> u32 {
        let d = &self.0;
        if d.p == 2 || a == 0 {
            return a;
        }
        let mut out = 0;
        let mut a = a;
        let mut w = 1;
        for _ in 0..d.n {
            let c = a % d.p;
            out += ((d.p - c) % d.p) * w;
            a /= d.p;
            w *= d.p;
        }
        out
    }

    pub(crate) fn rsub(&self, a: u32, b: u32) -> u32 {
        self.radd(a, self.rneg(b))
    }

    pub(crate) fn rmul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = &self.0;
        let m = d.q as u64 - 1;
        let k = (d.log[a as usize] as u64 + d.log[b as usize] as u64) % m;
        d.exp[k as usize]
    }

    pub(crate) fn rinv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let d = &self.0;
        let m = d.q - 1;
        let k = (m - d.log[a as usize] % m) % m;
        Some(d.exp[k as usize])
    }

    pub(crate) fn rpow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return self.raw_one();
        }
        if a == 0 {
            return 0;
        }
        let d = &self.0;
        let m = d.q as u64 - 1;
        let k = (d.log[a as usize] as u64 % m) * (e % m) % m;
        d.exp[k as usize]
    }

    /// A square root of a raw element, if one exists.
    pub(crate) fn rsqrt(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return Some(0);
        }
        let d = &self.0;
        if d.p == 2 {
            return Some(self.rpow(a, d.q as u64 / 2));
        }
        let l = d.log[a as usize];
        l.is_multiple_of(2).then(|| d.exp[(l / 2) as usize])
    }

    /// Multiplicative order of a nonzero raw element.
    pub(crate) fn rorder(&self, a: u32) -> u64 {
        let m = self.0.q as u64 - 1;
        m / gcd(self.0.log[a as usize] as u64, m)
    }

    // ---- element-level API ----

    pub fn zero(&self) -> FqElem {
        self.wrap(0)
    }

    pub fn one(&self) -> FqElem {
        self.wrap(self.raw_one())
    }

    /// The class of `t`, i.e. the chosen generator of the extension.
    pub fn generator(&self) -> FqElem {
        let mut c = vec![0u32; self.0.n as usize];
        if self.0.n == 1 {
            // t = -c0 in the prime field
            let c0 = self.0.modulus[0];
            c[0] = (self.0.p - c0) % self.0.p;
        } else {
            c[1] = 1;
        }
        self.wrap(self.index_of(&c))
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, c: i64) -> FqElem {
        let p = self.0.p as i64;
        self.wrap(self.raw_prime(c.rem_euclid(p) as u32))
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FqElem> {
        if coeffs.len() != self.0.n as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::Parse(format!(
                "element needs {} coefficients in [0, {})",
                self.0.n, self.0.p
            )));
        }
        Ok(self.wrap(self.index_of(coeffs)))
    }

    pub fn from_index(&self, v: u32) -> FqElem {
        assert!(v < self.0.q, "element index out of range");
        self.wrap(v)
    }

    pub(crate) fn wrap(&self, v: u32) -> FqElem {
        FqElem {
            field: self.clone(),
            v,
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.0.q).map(move |v| self.wrap(v))
    }

    /// A primitive element (generator of the multiplicative group).
    pub fn primitive_element(&self) -> FqElem {
        if self.0.q == 2 {
            return self.one();
        }
        self.wrap(self.0.exp[1])
    }

    /// Parses an element in the comma-joined coefficient format.
    pub fn parse_elem(&self, s: &str) -> Result<FqElem> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_coeffs(&coeffs)
    }

    /// The field F_{q^r} with the automatic modulus (this field itself when r = 1).
    pub fn extension(&self, r: u32) -> Result<Field> {
        match r {
            0 => Err(Error::ZeroDegree),
            1 => Ok(self.clone()),
            _ => Field::auto(self.0.p, self.0.n * r),
        }
    }

    /// Elements of the subfield F_{p^d}; `d` must divide the degree.
    pub fn subfield_elements(&self, d: u32) -> Result<Vec<FqElem>> {
        if d == 0 || !self.0.n.is_multiple_of(d) {
            return Err(Error::DegreeNotDividing {
                p: self.0.p,
                from: d,
                to: self.0.n,
            });
        }
        let pd = (self.0.p as u64).pow(d);
        Ok((0..self.0.q)
            .filter(|&v| self.rpow(v, pd) == v)
            .map(|v| self.wrap(v))
            .collect())
    }

    /// Smallest r with n | q^r - 1, or `None` when p | n.
    pub fn min_degree_for_root_of_unity(&self, n: u64) -> Option<u32> {
        if n == 0 || n.is_multiple_of(self.0.p as u64) {
            return None;
        }
        let q = self.0.q as u64 % n;
        let mut acc = q;
        for r in 1..=n as u32 {
            if acc % n == 1 % n {
                return Some(r);
            }
            acc = acc * q % n;
        }
        None
    }

    /// μ_n(F_q), sorted canonically, with the canonically first primitive
    /// n-th root when one exists (n | q - 1).
    pub fn roots_of_unity(&self, n: u64) -> Result<RootsOfUnity> {
        if n == 0 {
            return Err(Error::ZeroRootOrder);
        }
        let m = self.0.q as u64 - 1;
        let g = gcd(n, m);
        let step = m / g;
        let mut roots: Vec<u32> = (0..g).map(|k| self.0.exp[(k * step) as usize % m.max(1) as usize]).collect();
        if m == 1 {
            roots = vec![self.raw_one()];
        }
        roots.sort_unstable();
        let primitive = if m.is_multiple_of(n) {
            roots.iter().copied().find(|&v| self.rorder(v) == n)
        } else {
            None
        };
        Ok(RootsOfUnity {
            roots: roots.into_iter().map(|v| self.wrap(v)).collect(),
            primitive: primitive.map(|v| self.wrap(v)),
        })
    }

    /// A primitive n-th root of unity, or the error naming the minimal degree.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<FqElem> {
        let r = self.roots_of_unity(n)?;
        r.primitive.ok_or_else(|| Error::MissingRootOfUnity {
            n,
            p: self.0.p,
            degree: self.0.n,
            minimal_degree: self
                .min_degree_for_root_of_unity(n)
                .map(|r| r * self.0.n)
                .unwrap_or(0),
        })
    }

    /// Text form `p^n` when the modulus is the automatic one, else `p^n/c0,..,cn`.
    pub fn spec_string(&self) -> String {
        format!("{}", self)
    }

    pub fn parse(s: &str) -> Result<Field> {
        let (head, modulus) = match s.split_once('/') {
            Some((h, m)) => (h, Some(m)),
            None => (s, None),
        };
        let (p, n) = head
            .split_once('^')
            .ok_or_else(|| Error::Parse(format!("field spec {s:?} is not of the form p^n")))?;
        let p: u32 = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad characteristic in {s:?}")))?;
        let n: u32 = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree in {s:?}")))?;
        let modulus = match modulus {
            None => Modulus::Auto,
            Some(m) => Modulus::Explicit(
                m.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad modulus coefficient {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        Field::new(p, n, modulus)
    }
}

fn auto_modulus(p: u32, n: u32, q: u32) -> Vec<u32> {
    if n == 1 {
        return vec![0, 1];
    }
    // candidate k decodes with c0 as the most significant digit, which is
    // exactly lexicographic order on (c0, ..., c_{n-1}).
    for k in 0..q {
        let mut c = vec![0u32; n as usize];
        let mut x = k;
        for i in (0..n as usize).rev() {
            c[i] = x % p;
            x /= p;
        }
        if c[0] == 0 {
            continue;
        }
        c.push(1);
        if prime_poly::is_irreducible(&c, p) {
            return c;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn build_tables(d: &mut FieldData) {
    let q = d.q as u64;
    let p = d.p;
    let to_index = |poly: &[u32], place: &[u32]| -> u32 {
        poly.iter().zip(place).map(|(&c, &w)| c * w).sum()
    };
    let from_index = |v: u32, place: &[u32]| -> Vec<u32> {
        let mut c: Vec<u32> = place.iter().map(|&w| (v / w) % p).collect();
        prime_poly::trim(&mut c);
        c
    };
    let mut exp = Vec::with_capacity(q as usize - 1);
    let mut log = vec![0u32; q as usize];
    if q == 2 {
        exp.push(d.place[0]);
        log[d.place[0] as usize] = 0;
        d.exp = exp;
        d.log = log;
        return;
    }
    let factors = prime_factors(q - 1);
    let generator = (1..d.q)
        .map(|v| from_index(v, &d.place))
        .find(|g| {
            factors
                .iter()
                .all(|&l| prime_poly::pow_mod(g, (q - 1) / l, &d.modulus, p) != [1])
        })
        .expect("multiplicative group is cyclic");
    let mut cur = vec![1u32];
    for k in 0..q - 1 {
        let v = to_index(&cur, &d.place);
        exp.push(v);
        log[v as usize] = k as u32;
        cur = prime_poly::mul_mod(&cur, &generator, &d.modulus, p);
    }
    d.exp = exp;
    d.log = log;
}

fn format_poly(m: &[u32]) -> String {
    m.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.n.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}/{}", self.0.p, self.0.n, format_poly(&self.0.modulus))
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}[{}]", self.0.p, self.0.n, format_poly(&self.0.modulus))
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Field> {
        Field::parse(s)
    }
}

/// Output of [`Field::roots_of_unity`].
#[derive(Debug, Clone)]
pub struct RootsOfUnity {
    pub roots: Vec<FqElem>,
    pub primitive: Option<FqElem>,
}

/// An element of a finite field.
#[derive(Clone)]
pub struct FqElem {
    field: Field,
    v: u32,
}

impl FqElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Position in the canonical ordering.
    pub fn index(&self) -> u32 {
        self.v
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs_of(self.v)
    }

    pub fn is_zero(&self) -> bool {
        self.v == 0
    }

    pub fn is_one(&self) -> bool {
        self.v == self.field.raw_one()
    }

    pub fn checked_add(&self, rhs: &FqElem) -> Result<FqElem> {
        self.field.check_same(&rhs.field)?;
        Ok(self.field.wrap(self.field.radd(self.v, rhs.v)))
    }

    pub fn checked_sub(&self, rhs: &FqElem) -> Result<FqElem> {
        self.field.check_same(&rhs.field)?;
        Ok(self.field.wrap(self.field.rsub(self.v, rhs.v)))
    }

    pub fn checked_mul(&self, rhs: &FqElem) -> Result<FqElem> {
        self.field.check_same(&rhs.field)?;
        Ok(self.field.wrap(self.field.rmul(self.v, rhs.v)))
    }

    pub fn inv(&self) -> Result<FqElem> {
        self.field
            .rinv(self.v)
            .map(|v| self.field.wrap(v))
            .ok_or(Error::ZeroInverse)
    }

    /// Inverse by the extended Euclidean algorithm on representing
    /// polynomials; agrees with [`FqElem::inv`].
    pub fn inv_euclid(&self) -> Result<FqElem> {
        let f = &self.field;
        let mut c = self.coeffs();
        prime_poly::trim(&mut c);
        let s = prime_poly::inverse_mod(&c, f.modulus(), f.characteristic()).ok_or(Error::ZeroInverse)?;
        let mut full = s;
        full.resize(f.degree() as usize, 0);
        Ok(f.wrap(f.index_of(&full)))
    }

    /// Product by schoolbook multiplication and reduction modulo the modulus;
    /// agrees with `*`.
    pub fn mul_reduce(&self, rhs: &FqElem) -> Result<FqElem> {
        self.field.check_same(&rhs.field)?;
        let f = &self.field;
        let mut a = self.coeffs();
        let mut b = rhs.coeffs();
        prime_poly::trim(&mut a);
        prime_poly::trim(&mut b);
        let mut c = prime_poly::mul_mod(&a, &b, f.modulus(), f.characteristic());
        c.resize(f.degree() as usize, 0);
        Ok(f.wrap(f.index_of(&c)))
    }

    pub fn pow(&self, e: u64) -> FqElem {
        self.field.wrap(self.field.rpow(self.v, e))
    }

    pub fn frobenius(&self) -> FqElem {
        self.pow(self.field.characteristic() as u64)
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(&self) -> Option<u64> {
        (self.v != 0).then(|| self.field.rorder(self.v))
    }
}

impl PartialEq for FqElem {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.field.same(&other.field)
    }
}

impl Eq for FqElem {}

impl Hash for FqElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.v.hash(state);
    }
}

impl PartialOrd for FqElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FqElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.v.cmp(&other.v).then_with(|| {
            (self.field.degree(), self.field.modulus()).cmp(&(other.field.degree(), other.field.modulus()))
        })
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coeffs();
        write!(f, "{}", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&FqElem> for &FqElem {
            type Output = FqElem;
            fn $m(self, rhs: &FqElem) -> FqElem {
                self.$checked(rhs).expect("field mismatch in arithmetic")
            }
        }
        impl $tr<FqElem> for FqElem {
            type Output = FqElem;
            fn $m(self, rhs: FqElem) -> FqElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FqElem> for FqElem {
            type Output = FqElem;
            fn $m(self, rhs: &FqElem) -> FqElem {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &FqElem {
    type Output = FqElem;
    fn neg(self) -> FqElem {
        self.field.wrap(self.field.rneg(self.v))
    }
}

impl Neg for FqElem {
    type Output = FqElem;
    fn neg(self) -> FqElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        Field::new(2, 2, Modulus::Explicit(vec![1, 1, 1])).unwrap()
    }

    #[test]
    fn construction_examples() {
        let f2 = Field::auto(2, 1).unwrap();
        assert_eq!(f2.modulus(), &[0, 1]);
        assert_eq!(f2.order(), 2);
        assert!(Field::new(2, 2, Modulus::Explicit(vec![1, 1, 1])).is_ok());
        assert!(matches!(
            Field::new(2, 2, Modulus::Explicit(vec![0, 0, 1])),
            Err(Error::ReducibleModulus(_))
        ));
        assert_eq!(Field::auto(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::auto(3, 0).unwrap_err(), Error::ZeroDegree);
        // auto picks t^2+t+1 for F_4 and t^2+1 for F_9
        assert_eq!(Field::auto(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::auto(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn f4_arithmetic() {
        let f = f4();
        let t = f.generator();
        let one = f.one();
        assert!((&t + &t).is_zero());
        let t1 = &t + &one;
        assert_eq!(t1.coeffs(), vec![1, 1]);
        assert!((&t * &t1).is_one());
        assert_eq!(&t * &t, t1);
        assert_eq!(t.inv().unwrap(), t1);
        assert_eq!(one.inv().unwrap(), one);
        assert_eq!(f.zero().inv().unwrap_err(), Error::ZeroInverse);
    }

    #[test]
    fn f5_arithmetic() {
        let f = Field::auto(5, 1).unwrap();
        assert_eq!(f.from_int(3) + f.from_int(4), f.from_int(2));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = Field::auto(5, 1).unwrap().one();
        let b = Field::auto(7, 1).unwrap().one();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn roots_of_unity_examples() {
        let f = f4();
        let r = f.roots_of_unity(3).unwrap();
        assert_eq!(r.roots.len(), 3);
        assert!(r.roots.iter().all(|x| x.pow(3).is_one()));
        assert!(r.primitive.is_some());
        let f5 = Field::auto(5, 1).unwrap();
        let r = f5.roots_of_unity(4).unwrap();
        let got: Vec<_> = r.roots.iter().map(|x| x.coeffs()[0]).collect();
        assert_eq!(got, vec![1, 2, 3, 4]);
        assert_eq!(f5.roots_of_unity(1).unwrap().roots, vec![f5.one()]);
        assert_eq!(f5.roots_of_unity(0).unwrap_err(), Error::ZeroRootOrder);
        assert!(f5.roots_of_unity(3).unwrap().primitive.is_none());
        assert_eq!(f5.min_degree_for_root_of_unity(3), Some(2));
    }

    #[test]
    fn parse_and_display() {
        let f = Field::parse("2^2/1,1,1").unwrap();
        assert_eq!(f, f4());
        assert_eq!(f.to_string(), "2^2/1,1,1");
        assert_eq!(Field::parse("2^2").unwrap(), f);
        assert_eq!(f.parse_elem("1,1").unwrap().to_string(), "1,1");
        assert!(f.parse_elem("1").is_err());
        assert!(Field::parse("6^1").is_err());
        assert!(Field::parse("banana").is_err());
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let f = f4();
        let listed: Vec<Vec<u32>> = f.elements().map(|x| x.coeffs()).collect();
        let mut sorted = listed.clone();
        sorted.sort();
        assert_eq!(listed, sorted);
    }
}
