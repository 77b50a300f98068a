//! Elements of PGL2(F_q) acting on the projective line, their fixed points,
//! three-point interpolation, and ramification of polynomial self-maps.

mod point;
mod ramification;
mod verify;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::gfq::{Embedding, Field, FqElem};

pub use point::PP1;
pub use ramification::{poly_map_ramification, poly_map_ramification_in, RamPoint, RamPointRecord};
pub use verify::{verify_p1fp, P1fpReport};

/// A fractional linear transformation x -> (ax + b)/(cx + d), stored as the
/// canonical representative of its class in PGL2: the first nonzero entry in
/// the scan order a, b, c, d equals 1.
#[derive(Clone)]
pub struct Moebius {
    field: Field,
    m: [u32; 4],
}

impl Moebius {
    pub fn new(a: &FqElem, b: &FqElem, c: &FqElem, d: &FqElem) -> Result<Moebius> {
        let field = a.field().clone();
        for x in [b, c, d] {
            field.check_same(x.field())?;
        }
        Moebius::from_raw(&field, [a.index(), b.index(), c.index(), d.index()]).ok_or(Error::Singular)
    }

    /// Matrix with integer entries read in the prime subfield.
    pub fn from_ints(field: &Field, a: i64, b: i64, c: i64, d: i64) -> Result<Moebius> {
        Moebius::new(&field.from_int(a), &field.from_int(b), &field.from_int(c), &field.from_int(d))
    }

    pub(crate) fn from_raw(field: &Field, m: [u32; 4]) -> Option<Moebius> {
        let det = field.rsub(field.rmul(m[0], m[3]), field.rmul(m[1], m[2]));
        if det == 0 {
            return None;
        }
        let lead = *m.iter().find(|&&x| x != 0)?;
        let s = field.rinv(lead)?;
        Some(Moebius {
            field: field.clone(),
            m: m.map(|x| field.rmul(x, s)),
        })
    }

    pub fn identity(field: &Field) -> Moebius {
        let one = field.raw_one();
        Moebius {
            field: field.clone(),
            m: [one, 0, 0, one],
        }
    }

    /// x -> x + b.
    pub fn translation(b: &FqElem) -> Moebius {
        let f = b.field();
        Moebius {
            field: f.clone(),
            m: [f.raw_one(), b.index(), 0, f.raw_one()],
        }
    }

    /// x -> a x (the class of diag(a, 1)); `a` must be nonzero.
    pub fn scaling(a: &FqElem) -> Result<Moebius> {
        let f = a.field();
        Moebius::from_raw(f, [a.index(), 0, 0, f.raw_one()]).ok_or(Error::Singular)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn entries(&self) -> [FqElem; 4] {
        self.m.map(|v| self.field.wrap(v))
    }

    pub fn is_identity(&self) -> bool {
        let one = self.field.raw_one();
        self.m == [one, 0, 0, one]
    }

    /// True when the map is x -> x + b for some b.
    pub fn is_translation(&self) -> bool {
        let one = self.field.raw_one();
        self.m[0] == one && self.m[2] == 0 && self.m[3] == one
    }

    pub fn compose(&self, other: &Moebius) -> Result<Moebius> {
        self.field.check_same(&other.field)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Moebius) -> Moebius {
        let f = &self.field;
        let [a, b, c, d] = self.m;
        let [e, g, h, k] = other.m;
        let m = [
            f.radd(f.rmul(a, e), f.rmul(b, h)),
            f.radd(f.rmul(a, g), f.rmul(b, k)),
            f.radd(f.rmul(c, e), f.rmul(d, h)),
            f.radd(f.rmul(c, g), f.rmul(d, k)),
        ];
        Moebius::from_raw(f, m).expect("product of invertible matrices is invertible")
    }

    pub fn inverse(&self) -> Moebius {
        let f = &self.field;
        let [a, b, c, d] = self.m;
        Moebius::from_raw(f, [d, f.rneg(b), f.rneg(c), a]).expect("adjugate of an invertible matrix")
    }

    /// g * self * g^-1.
    pub fn conjugate_by(&self, g: &Moebius) -> Result<Moebius> {
        Ok(g.compose(self)?.compose_unchecked(&g.inverse()))
    }

    pub fn pow(&self, mut e: u64) -> Moebius {
        let mut result = Moebius::identity(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        result
    }

    /// Least k >= 1 with self^k = identity, by iterated composition.
    pub fn order(&self) -> u64 {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.compose_unchecked(self);
            k += 1;
        }
        k
    }

    pub fn apply(&self, point: &PP1) -> Result<PP1> {
        match point.field() {
            None => Ok(self.apply_unchecked(point)),
            Some(pf) if pf.same(&self.field) => Ok(self.apply_unchecked(point)),
            Some(pf) => {
                let e = Embedding::new(&self.field, pf)?;
                Ok(self.lift(&e)?.apply_unchecked(point))
            }
        }
    }

    pub(crate) fn apply_unchecked(&self, point: &PP1) -> PP1 {
        let f = &self.field;
        let [a, b, c, d] = self.m;
        let (x, y) = match point {
            PP1::Affine(x) => (x.index(), f.raw_one()),
            PP1::Infinity => (f.raw_one(), 0),
        };
        let nx = f.radd(f.rmul(a, x), f.rmul(b, y));
        let ny = f.radd(f.rmul(c, x), f.rmul(d, y));
        if ny == 0 {
            PP1::Infinity
        } else {
            PP1::Affine(f.wrap(f.rmul(nx, f.rinv(ny).unwrap())))
        }
    }

    /// The same map over the target of an embedding of its field.
    pub fn lift(&self, e: &Embedding) -> Result<Moebius> {
        self.field.check_same(e.source())?;
        if e.is_identity() {
            return Ok(self.clone());
        }
        Ok(Moebius {
            field: e.target().clone(),
            m: self.m.map(|v| e.map_raw(v)),
        })
    }

    /// The map over the source of `e`, if all (normalized) entries descend.
    pub fn descend(&self, e: &Embedding) -> Result<Option<Moebius>> {
        self.field.check_same(e.target())?;
        let mut out = [0u32; 4];
        for (o, &v) in out.iter_mut().zip(&self.m) {
            match e.preimage_raw(v) {
                Some(x) => *o = x,
                None => return Ok(None),
            }
        }
        Ok(Moebius::from_raw(e.source(), out))
    }

    /// Fixed points over F_{q^r}.
    pub fn fixed_points(&self, r: u32) -> Result<Vec<PP1>> {
        let e = Embedding::tower(&self.field, r)?;
        self.fixed_points_in(&e)
    }

    /// Fixed points over the target of `e`: the affine roots of
    /// c x^2 + (d - a) x - b together with infinity when c = 0.
    pub fn fixed_points_in(&self, e: &Embedding) -> Result<Vec<PP1>> {
        if self.is_identity() {
            return Err(Error::IdentityFixesAll);
        }
        let m = self.lift(e)?;
        let f = e.target();
        let [a, b, c, d] = m.m;
        let mut roots = if c == 0 {
            // (d - a) x = b
            match f.rinv(f.rsub(d, a)) {
                Some(i) => vec![f.rmul(b, i)],
                None => vec![],
            }
        } else {
            let ci = f.rinv(c).unwrap();
            // x^2 + beta x + gamma
            let beta = f.rmul(f.rsub(d, a), ci);
            let gamma = f.rneg(f.rmul(b, ci));
            monic_quadratic_roots(f, beta, gamma)
        };
        roots.sort_unstable();
        roots.dedup();
        let mut pts: Vec<PP1> = roots.into_iter().map(|x| PP1::Affine(f.wrap(x))).collect();
        if c == 0 {
            pts.push(PP1::Infinity);
        }
        Ok(pts)
    }

    /// The map sending the three distinct points of `src` to those of `dst`, in order.
    pub fn from_three_points(src: [&PP1; 3], dst: [&PP1; 3]) -> Result<Moebius> {
        let field = src
            .iter()
            .chain(dst.iter())
            .find_map(|p| p.field().cloned())
            .ok_or(Error::RepeatedPoint)?;
        for p in src.iter().chain(dst.iter()) {
            if let Some(pf) = p.field() {
                field.check_same(pf)?;
            }
        }
        let s = standard_frame(&field, src)?;
        let t = standard_frame(&field, dst)?;
        Ok(t.inverse().compose_unchecked(&s))
    }

    pub fn parse(field: &Field, s: &str) -> Result<Moebius> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("Moebius map {s:?} must look like [a,b;c,d]")))?;
        let (top, bottom) = inner
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing ';' in {s:?}")))?;
        let n = field.degree() as usize;
        let row = |r: &str| -> Result<Vec<FqElem>> {
            let toks: Vec<u32> = r
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
                })
                .collect::<Result<_>>()?;
            if toks.len() != 2 * n {
                return Err(Error::Parse(format!("row {r:?} needs {} coefficients", 2 * n)));
            }
            toks.chunks(n).map(|c| field.from_coeffs(c)).collect()
        };
        let (t, b) = (row(top)?, row(bottom)?);
        Moebius::new(&t[0], &t[1], &b[0], &b[1])
    }
}

fn monic_quadratic_roots(f: &Field, beta: u32, gamma: u32) -> Vec<u32> {
    if f.characteristic() != 2 {
        let two_inv = f.rinv(f.raw_prime(2)).unwrap();
        let disc = f.rsub(f.rmul(beta, beta), f.rmul(f.raw_prime(4), gamma));
        return match f.rsqrt(disc) {
            Some(s) => {
                let mb = f.rneg(beta);
                vec![f.rmul(f.radd(mb, s), two_inv), f.rmul(f.rsub(mb, s), two_inv)]
            }
            None => vec![],
        };
    }
    if beta == 0 {
        return vec![f.rsqrt(gamma).unwrap()];
    }
    // x = beta y turns this into y^2 + y = gamma / beta^2
    let delta = f.rmul(gamma, f.rinv(f.rmul(beta, beta)).unwrap());
    match (0..f.order()).find(|&y| f.radd(f.rmul(y, y), y) == delta) {
        Some(y) => vec![f.rmul(beta, y), f.rmul(beta, f.radd(y, f.raw_one()))],
        None => vec![],
    }
}

/// The map sending (P1, P2, P3) to (0, 1, infinity).
fn standard_frame(field: &Field, pts: [&PP1; 3]) -> Result<Moebius> {
    if pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2] {
        return Err(Error::RepeatedPoint);
    }
    let f = field;
    let proj = |p: &PP1| match p {
        PP1::Affine(x) => (x.index(), f.raw_one()),
        PP1::Infinity => (f.raw_one(), 0),
    };
    let det = |u: (u32, u32), v: (u32, u32)| f.rsub(f.rmul(u.0, v.1), f.rmul(u.1, v.0));
    let (p1, p2, p3) = (proj(pts[0]), proj(pts[1]), proj(pts[2]));
    let alpha = det(p2, p3);
    let beta = det(p2, p1);
    let m = [
        f.rmul(alpha, p1.1),
        f.rneg(f.rmul(alpha, p1.0)),
        f.rmul(beta, p3.1),
        f.rneg(f.rmul(beta, p3.0)),
    ];
    Moebius::from_raw(f, m).ok_or(Error::RepeatedPoint)
}

/// Every element of PGL2 over `field`, in canonical order.
pub fn pgl2_elements(field: &Field) -> Vec<Moebius> {
    let q = field.order();
    let one = field.raw_one();
    let mut out = Vec::with_capacity((q as usize).pow(3) - q as usize);
    // with the first nonzero entry normalized to 1 the classes are: a = 1 with
    // d != bc, or a = 0, b = 1, c != 0.
    let mut push = |m: [u32; 4]| {
        if field.rsub(field.rmul(m[0], m[3]), field.rmul(m[1], m[2])) != 0 {
            out.push(Moebius {
                field: field.clone(),
                m,
            });
        }
    };
    for c in 1..q {
        for d in 0..q {
            push([0, one, c, d]);
        }
    }
    for b in 0..q {
        for c in 0..q {
            for d in 0..q {
                push([one, b, c, d]);
            }
        }
    }
    out.sort();
    out
}

/// |PGL2(F_q)| = q^3 - q.
pub fn pgl2_order(q: u64) -> u64 {
    q * q * q - q
}

impl PartialEq for Moebius {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.field.same(&other.field)
    }
}

impl Eq for Moebius {}

impl Hash for Moebius {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.m.hash(state);
    }
}

impl PartialOrd for Moebius {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Moebius {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m.cmp(&other.m)
    }
}

impl fmt::Display for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries();
        write!(f, "[{a},{b};{c},{d}]")
    }
}

impl fmt::Debug for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32, n: u32) -> Field {
        Field::auto(p, n).unwrap()
    }

    fn aff(field: &Field, x: i64) -> PP1 {
        PP1::Affine(field.from_int(x))
    }

    #[test]
    fn make_normalizes() {
        let f5 = f(5, 1);
        let id = Moebius::from_ints(&f5, 1, 0, 0, 1).unwrap();
        assert!(id.is_identity());
        let m = Moebius::from_ints(&f5, 2, 0, 0, 1).unwrap();
        assert_eq!(m, Moebius::from_ints(&f5, 1, 0, 0, 3).unwrap());
        assert_eq!(m.to_string(), "[1,0;0,3]");
        assert_eq!(Moebius::from_ints(&f5, 1, 1, 1, 1).unwrap_err(), Error::Singular);
    }

    #[test]
    fn apply_examples() {
        let f2 = f(2, 1);
        let t = Moebius::from_ints(&f2, 1, 1, 0, 1).unwrap();
        assert_eq!(t.apply(&PP1::Infinity).unwrap(), PP1::Infinity);
        let inv = Moebius::from_ints(&f2, 0, 1, 1, 0).unwrap();
        assert_eq!(inv.apply(&aff(&f2, 0)).unwrap(), PP1::Infinity);
        let id = Moebius::identity(&f2);
        for p in PP1::all(&f2) {
            assert_eq!(id.apply(&p).unwrap(), p);
        }
    }

    #[test]
    fn compose_and_inverse_examples() {
        let f5 = f(5, 1);
        let m = Moebius::from_ints(&f5, 1, 1, 0, 1).unwrap();
        assert_eq!(m.inverse(), Moebius::from_ints(&f5, 1, 4, 0, 1).unwrap());
        assert!(m.compose(&m.inverse()).unwrap().is_identity());
        assert_eq!(Moebius::identity(&f5).compose(&m).unwrap(), m);
        let d2 = Moebius::from_ints(&f5, 1, 0, 0, 2).unwrap();
        let d3 = Moebius::from_ints(&f5, 1, 0, 0, 3).unwrap();
        assert!(d2.compose(&d3).unwrap().is_identity());
        let f7 = f(7, 1);
        assert!(matches!(
            m.compose(&Moebius::identity(&f7)),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn order_examples() {
        for p in [2u32, 3, 5, 7] {
            let fp = f(p, 1);
            assert_eq!(Moebius::identity(&fp).order(), 1);
            assert_eq!(Moebius::from_ints(&fp, 1, 1, 0, 1).unwrap().order(), p as u64);
        }
        let f5 = f(5, 1);
        let zeta = f5.primitive_root_of_unity(4).unwrap();
        assert_eq!(Moebius::scaling(&zeta).unwrap().order(), 4);
    }

    #[test]
    fn fixed_point_examples() {
        let f5 = f(5, 1);
        let zeta = f5.primitive_root_of_unity(4).unwrap();
        let d = Moebius::scaling(&zeta).unwrap();
        let fp = d.fixed_points(1).unwrap();
        assert_eq!(fp, vec![aff(&f5, 0), PP1::Infinity]);
        let t = Moebius::from_ints(&f5, 1, 1, 0, 1).unwrap();
        assert_eq!(t.fixed_points(2).unwrap(), vec![PP1::Infinity]);
        let w = Moebius::from_ints(&f5, 0, 1, -1, 0).unwrap();
        assert_eq!(w.fixed_points(1).unwrap(), vec![aff(&f5, 2), aff(&f5, 3)]);
        assert_eq!(
            Moebius::identity(&f5).fixed_points(2).unwrap_err(),
            Error::IdentityFixesAll
        );
    }

    #[test]
    fn fixed_points_match_scan() {
        for (p, n) in [(2, 2), (3, 1), (3, 2), (5, 1), (7, 1)] {
            let fld = f(p, n);
            let e = Embedding::tower(&fld, 2).unwrap();
            let all = PP1::all(e.target());
            for g in pgl2_elements(&fld).into_iter().filter(|g| !g.is_identity()) {
                let big = g.lift(&e).unwrap();
                let scan: Vec<PP1> = all
                    .iter()
                    .filter(|x| big.apply(x).unwrap() == **x)
                    .cloned()
                    .collect();
                assert_eq!(g.fixed_points_in(&e).unwrap(), scan, "{g}");
            }
        }
    }

    #[test]
    fn three_point_examples() {
        let f5 = f(5, 1);
        let (z, o, inf) = (aff(&f5, 0), aff(&f5, 1), PP1::Infinity);
        let id = Moebius::from_three_points([&z, &o, &inf], [&z, &o, &inf]).unwrap();
        assert!(id.is_identity());
        let m = Moebius::from_three_points([&z, &o, &inf], [&inf, &o, &z]).unwrap();
        assert_eq!(m, Moebius::from_ints(&f5, 0, 1, 1, 0).unwrap());
        assert_eq!(m.apply(&z).unwrap(), inf);
        assert_eq!(m.apply(&o).unwrap(), o);
        assert_eq!(m.apply(&inf).unwrap(), z);
        assert_eq!(
            Moebius::from_three_points([&z, &o, &inf], [&o, &o, &inf]).unwrap_err(),
            Error::RepeatedPoint
        );
    }

    #[test]
    fn three_point_map_is_a_bijection() {
        // exhaustive for q <= 5: (g(0), g(1), g(inf)) is injective on PGL2 and
        // hits every ordered distinct triple; interpolation inverts it.
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let fld = f(p, n);
            let (z, o, inf) = (PP1::Affine(fld.zero()), PP1::Affine(fld.one()), PP1::Infinity);
            let all = pgl2_elements(&fld);
            let mut seen = std::collections::HashSet::new();
            for g in &all {
                let tri = (g.apply(&z).unwrap(), g.apply(&o).unwrap(), g.apply(&inf).unwrap());
                let back = Moebius::from_three_points([&z, &o, &inf], [&tri.0, &tri.1, &tri.2]).unwrap();
                assert_eq!(&back, g);
                assert!(seen.insert(tri));
            }
            let pts = PP1::all(&fld);
            let k = pts.len() as u64;
            assert_eq!(seen.len() as u64, k * (k - 1) * (k - 2));
        }
    }

    #[test]
    fn pgl2_enumeration_sizes() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1)] {
            let fld = f(p, n);
            let q = fld.order() as u64;
            let all = pgl2_elements(&fld);
            assert_eq!(all.len() as u64, pgl2_order(q));
        }
    }

    #[test]
    fn parse_round_trip() {
        let f4 = f(2, 2);
        let m = Moebius::parse(&f4, "[1,0,0,1;1,1,0,0]").unwrap();
        assert_eq!(Moebius::parse(&f4, &m.to_string()).unwrap(), m);
        assert!(Moebius::parse(&f4, "[1,0;1,1]").is_err());
    }
}
