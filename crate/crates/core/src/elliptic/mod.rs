//! Automorphisms of elliptic curves y^2 = x^3 + a x + b over F_q (p > 3),
//! written as (P, u) in translations ⋊ Aut0, with u acting by
//! (x, y) -> (u^2 x, u^3 y).

mod verify;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::gfq::{Embedding, Field, FqElem};

pub use verify::{
    abelian_subgroup_count, verify_genus1_finiteness, verify_pointless_dichotomy, DichotomyReport, Genus1Report,
    TranslationFilter,
};

/// Short Weierstrass curve over F_q.
#[derive(Clone, PartialEq, Eq)]
pub struct ECurve {
    field: Field,
    a: FqElem,
    b: FqElem,
}

/// A point over the curve's field; `O` is the point at infinity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ECPoint {
    O,
    Affine(FqElem, FqElem),
}

impl ECurve {
    pub fn new(a: &FqElem, b: &FqElem) -> Result<ECurve> {
        let field = a.field().clone();
        field.check_same(b.field())?;
        let p = field.characteristic();
        if p <= 3 {
            return Err(Error::SmallCharacteristic(p));
        }
        let disc = &(&field.from_int(4) * &a.pow(3)) + &(&field.from_int(27) * &b.pow(2));
        if disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(ECurve {
            field,
            a: a.clone(),
            b: b.clone(),
        })
    }

    pub fn from_ints(field: &Field, a: i64, b: i64) -> Result<ECurve> {
        ECurve::new(&field.from_int(a), &field.from_int(b))
    }

    /// Parses `p^n:a=...,b=...` (field spec, then coefficients in element format).
    pub fn parse(s: &str) -> Result<ECurve> {
        let bad = || Error::Parse(format!("curve {s:?} must look like p^n:a=...,b=..."));
        let (field, coeffs) = s.trim().split_once(':').ok_or_else(bad)?;
        let field = Field::parse(field)?;
        let rest = coeffs.trim().strip_prefix("a=").ok_or_else(bad)?;
        let (a, b) = rest.split_once(",b=").ok_or_else(bad)?;
        ECurve::new(&field.parse_elem(a)?, &field.parse_elem(b)?)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn a(&self) -> &FqElem {
        &self.a
    }

    pub fn b(&self) -> &FqElem {
        &self.b
    }

    /// The same curve over the target of `e`.
    pub fn lift(&self, e: &Embedding) -> Result<ECurve> {
        Ok(ECurve {
            field: e.target().clone(),
            a: e.map(&self.a)?,
            b: e.map(&self.b)?,
        })
    }

    /// The same curve over F_{q^r}.
    pub fn at(&self, r: u32) -> Result<ECurve> {
        self.lift(&Embedding::tower(&self.field, r)?)
    }

    fn rhs(&self, x: &FqElem) -> FqElem {
        &(&(x * x) * x) + &(&(&self.a * x) + &self.b)
    }

    fn check_point(&self, pt: &ECPoint) -> Result<()> {
        match pt {
            ECPoint::O => Ok(()),
            ECPoint::Affine(x, y) => {
                self.field.check_same(x.field())?;
                if y * y == self.rhs(x) {
                    Ok(())
                } else {
                    Err(Error::NotOnCurve)
                }
            }
        }
    }

    pub fn contains(&self, pt: &ECPoint) -> bool {
        self.check_point(pt).is_ok()
    }

    pub fn neg(&self, pt: &ECPoint) -> Result<ECPoint> {
        self.check_point(pt)?;
        Ok(self.neg_unchecked(pt))
    }

    fn neg_unchecked(&self, pt: &ECPoint) -> ECPoint {
        match pt {
            ECPoint::O => ECPoint::O,
            ECPoint::Affine(x, y) => ECPoint::Affine(x.clone(), -y),
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p1: &ECPoint, p2: &ECPoint) -> Result<ECPoint> {
        self.check_point(p1)?;
        self.check_point(p2)?;
        Ok(self.add_unchecked(p1, p2))
    }

    fn add_unchecked(&self, p1: &ECPoint, p2: &ECPoint) -> ECPoint {
        let (x1, y1, x2, y2) = match (p1, p2) {
            (ECPoint::O, q) | (q, ECPoint::O) => return q.clone(),
            (ECPoint::Affine(x1, y1), ECPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return ECPoint::O;
            }
            let f = &self.field;
            let num = &(&f.from_int(3) * &(x1 * x1)) + &self.a;
            &num * &(&f.from_int(2) * y1).inv().expect("y1 != 0 here")
        } else {
            &(y2 - y1) * &(x2 - x1).inv().expect("x1 != x2")
        };
        let x3 = &(&(&lambda * &lambda) - x1) - x2;
        let y3 = &(&lambda * &(x1 - &x3)) - y1;
        ECPoint::Affine(x3, y3)
    }

    pub fn sub(&self, p1: &ECPoint, p2: &ECPoint) -> Result<ECPoint> {
        self.add(p1, &self.neg(p2)?)
    }

    /// k * P by double-and-add.
    pub fn mul(&self, k: u64, pt: &ECPoint) -> Result<ECPoint> {
        self.check_point(pt)?;
        Ok(self.mul_unchecked(k, pt))
    }

    fn mul_unchecked(&self, mut k: u64, pt: &ECPoint) -> ECPoint {
        let mut acc = ECPoint::O;
        let mut base = pt.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// Order of a point in the group.
    pub fn point_order(&self, pt: &ECPoint) -> Result<u64> {
        self.check_point(pt)?;
        let mut k = 1;
        let mut cur = pt.clone();
        while cur != ECPoint::O {
            cur = self.add_unchecked(&cur, pt);
            k += 1;
        }
        Ok(k)
    }

    /// Every point over the curve's field, O first, then affine points in
    /// canonical order.
    pub fn points(&self) -> Vec<ECPoint> {
        let f = &self.field;
        let mut out = vec![ECPoint::O];
        for x in f.elements() {
            let r = self.rhs(&x);
            if let Some(y) = f.rsqrt(r.index()) {
                let y = f.wrap(y);
                let ny = -&y;
                if y == ny {
                    out.push(ECPoint::Affine(x.clone(), y));
                } else {
                    let (lo, hi) = if y < ny { (y, ny) } else { (ny, y) };
                    out.push(ECPoint::Affine(x.clone(), lo));
                    out.push(ECPoint::Affine(x, hi));
                }
            }
        }
        out
    }

    /// E(F_{q^r}); refuses levels above `cap` field elements.
    pub fn points_at(&self, r: u32, cap: u64) -> Result<Vec<ECPoint>> {
        let size = (self.field.order() as u64).saturating_pow(r);
        if size > cap {
            return Err(Error::CapExceeded { size, cap });
        }
        Ok(self.at(r)?.points())
    }

    /// Aut0 over the curve's field: u with u^4 a = a and u^6 b = b.
    pub fn aut0(&self) -> Vec<FqElem> {
        // either a or b is nonzero, so u^12 = 1
        let mu12 = self.field.roots_of_unity(12).expect("12 > 0").roots;
        mu12.into_iter()
            .filter(|u| &u.pow(4) * &self.a == self.a && &u.pow(6) * &self.b == self.b)
            .collect()
    }

    /// sigma_u(x, y) = (u^2 x, u^3 y).
    pub fn sigma(&self, u: &FqElem, pt: &ECPoint) -> ECPoint {
        match pt {
            ECPoint::O => ECPoint::O,
            ECPoint::Affine(x, y) => ECPoint::Affine(&u.pow(2) * x, &u.pow(3) * y),
        }
    }

    /// {Q : Q - sigma_u(Q) = O} over the curve's field.
    pub fn kernel_one_minus_sigma(&self, u: &FqElem) -> Result<Vec<ECPoint>> {
        self.field.check_same(u.field())?;
        if u.is_one() {
            return Err(Error::TrivialSigma);
        }
        Ok(self.points().into_iter().filter(|q| self.sigma(u, q) == *q).collect())
    }

    /// Fixed points of an automorphism over the curve's field.
    pub fn aut_fixed_points(&self, phi: &ECAut) -> Result<FixedLocus> {
        self.check_aut(phi)?;
        if phi.is_identity() {
            return Ok(FixedLocus::Everything);
        }
        Ok(FixedLocus::Points(
            self.points()
                .into_iter()
                .filter(|q| self.apply_unchecked(phi, q) == *q)
                .collect(),
        ))
    }

    fn check_aut(&self, phi: &ECAut) -> Result<()> {
        self.check_point(&phi.p)?;
        self.field.check_same(phi.u.field())?;
        let u = &phi.u;
        if u.is_zero() || &u.pow(4) * &self.a != self.a || &u.pow(6) * &self.b != self.b {
            return Err(Error::Precondition(format!("{u} is not in Aut0 of this curve")));
        }
        Ok(())
    }

    pub fn apply(&self, phi: &ECAut, q: &ECPoint) -> Result<ECPoint> {
        self.check_aut(phi)?;
        self.check_point(q)?;
        Ok(self.apply_unchecked(phi, q))
    }

    fn apply_unchecked(&self, phi: &ECAut, q: &ECPoint) -> ECPoint {
        self.add_unchecked(&self.sigma(&phi.u, q), &phi.p)
    }

    /// (P, u) . (Q, v) = (P + sigma_u(Q), u v).
    pub fn compose(&self, phi: &ECAut, psi: &ECAut) -> Result<ECAut> {
        self.check_aut(phi)?;
        self.check_aut(psi)?;
        Ok(ECAut {
            p: self.add_unchecked(&phi.p, &self.sigma(&phi.u, &psi.p)),
            u: &phi.u * &psi.u,
        })
    }

    /// (P, u)^-1 = (-sigma_u^-1(P), u^-1).
    pub fn inverse(&self, phi: &ECAut) -> Result<ECAut> {
        self.check_aut(phi)?;
        let ui = phi.u.inv()?;
        Ok(ECAut {
            p: self.neg_unchecked(&self.sigma(&ui, &phi.p)),
            u: ui,
        })
    }

    /// All (P, u) fixing Q, by scan of E(F) x Aut0, alongside the closed
    /// form (Q - sigma_u(Q), u).
    pub fn count_auts_fixing(&self, q: &ECPoint) -> Result<AutCount> {
        self.check_point(q)?;
        let aut0 = self.aut0();
        let mut scan = Vec::new();
        for p in self.points() {
            for u in &aut0 {
                let phi = ECAut { p: p.clone(), u: u.clone() };
                if self.apply_unchecked(&phi, q) == *q {
                    scan.push(phi);
                }
            }
        }
        let mut closed_form: Vec<ECAut> = aut0
            .iter()
            .map(|u| ECAut {
                p: self.add_unchecked(q, &self.neg_unchecked(&self.sigma(u, q))),
                u: u.clone(),
            })
            .collect();
        scan.sort();
        closed_form.sort();
        Ok(AutCount {
            count: scan.len(),
            aut0_order: aut0.len(),
            scan,
            closed_form,
        })
    }

    /// E(F)[n].
    pub fn torsion(&self, n: u64) -> Vec<ECPoint> {
        self.points()
            .into_iter()
            .filter(|p| self.mul_unchecked(n, p) == ECPoint::O)
            .collect()
    }

    /// Subgroups of order n of the translation group by E(F)[n], each as a
    /// sorted point list; these are the actions of order n without
    /// stabilized points at this level.
    pub fn enum_spf_actions(&self, n: u64) -> Vec<Vec<ECPoint>> {
        let tors = self.torsion(n);
        let mut found: BTreeSet<Vec<ECPoint>> = BTreeSet::new();
        for (i, g) in tors.iter().enumerate() {
            for h in &tors[i..] {
                let sub = self.span(&[g.clone(), h.clone()]);
                if sub.len() as u64 == n {
                    found.insert(sub);
                }
            }
        }
        found.into_iter().collect()
    }

    fn span(&self, gens: &[ECPoint]) -> Vec<ECPoint> {
        let mut seen: HashSet<ECPoint> = HashSet::from([ECPoint::O]);
        let mut stack = vec![ECPoint::O];
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = self.add_unchecked(&x, g);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }
}

impl fmt::Display for ECurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:a={},b={}", self.field, self.a, self.b)
    }
}

impl fmt::Debug for ECurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl ECPoint {
    /// Whether the coordinates live in `field` (O always does).
    pub fn lies_over(&self, field: &Field) -> bool {
        match self {
            ECPoint::O => true,
            ECPoint::Affine(x, _) => x.field().same(field),
        }
    }

    pub fn lift(&self, e: &Embedding) -> Result<ECPoint> {
        match self {
            ECPoint::O => Ok(ECPoint::O),
            ECPoint::Affine(x, y) => Ok(ECPoint::Affine(e.map(x)?, e.map(y)?)),
        }
    }

    /// Parses `O` or `(x,y)` with each coordinate taking `degree` tokens.
    pub fn parse(field: &Field, s: &str) -> Result<ECPoint> {
        let s = s.trim();
        if s == "O" {
            return Ok(ECPoint::O);
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("point {s:?} must be O or (x,y)")))?;
        let toks: Vec<&str> = inner.split(',').map(str::trim).collect();
        let n = field.degree() as usize;
        if toks.len() != 2 * n {
            return Err(Error::Parse(format!("point {s:?} needs {} coefficients", 2 * n)));
        }
        Ok(ECPoint::Affine(
            field.parse_elem(&toks[..n].join(","))?,
            field.parse_elem(&toks[n..].join(","))?,
        ))
    }
}

impl fmt::Display for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::O => write!(f, "O"),
            ECPoint::Affine(x, y) => write!(f, "({x},{y})"),
        }
    }
}

impl fmt::Debug for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The automorphism Q -> sigma_u(Q) + P.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ECAut {
    pub p: ECPoint,
    pub u: FqElem,
}

impl ECAut {
    pub fn new(p: ECPoint, u: FqElem) -> ECAut {
        ECAut { p, u }
    }

    pub fn identity(field: &Field) -> ECAut {
        ECAut {
            p: ECPoint::O,
            u: field.one(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.p == ECPoint::O && self.u.is_one()
    }

    pub fn is_translation(&self) -> bool {
        self.u.is_one()
    }

    pub fn lift(&self, e: &Embedding) -> Result<ECAut> {
        Ok(ECAut {
            p: self.p.lift(e)?,
            u: e.map(&self.u)?,
        })
    }
}

impl fmt::Display for ECAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{}]", self.p, self.u)
    }
}

impl fmt::Debug for ECAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedLocus {
    /// The identity.
    Everything,
    Points(Vec<ECPoint>),
}

#[derive(Clone, Debug)]
pub struct AutCount {
    pub count: usize,
    pub aut0_order: usize,
    pub scan: Vec<ECAut>,
    pub closed_form: Vec<ECAut>,
}

/// Fixed points of `phi` (given over the curve's field) over F_{q^r}.
pub fn aut_fixed_points(curve: &ECurve, phi: &ECAut, r: u32) -> Result<FixedLocus> {
    let e = Embedding::tower(curve.field(), r)?;
    curve.lift(&e)?.aut_fixed_points(&phi.lift(&e)?)
}

pub fn kernel_one_minus_sigma(curve: &ECurve, u: &FqElem, r: u32) -> Result<Vec<ECPoint>> {
    let e = Embedding::tower(curve.field(), r)?;
    curve.lift(&e)?.kernel_one_minus_sigma(&e.map(u)?)
}

pub fn count_auts_fixing(curve: &ECurve, q: &ECPoint, r: u32) -> Result<AutCount> {
    curve.at(r)?.count_auts_fixing(q)
}

pub fn enum_spf_actions(curve: &ECurve, n: u64, r: u32) -> Result<Vec<Vec<ECPoint>>> {
    Ok(curve.at(r)?.enum_spf_actions(n))
}

/// The versioned test curves: y^2 = x^3 + x over F_5 and F_13, y^2 = x^3 + 1
/// over F_7 and y^2 = x^3 + x + 1 over F_5.
pub fn test_curves() -> Vec<ECurve> {
    [(5, 1, 0), (13, 1, 0), (7, 0, 1), (5, 1, 1)]
        .into_iter()
        .map(|(p, a, b)| ECurve::from_ints(&Field::auto(p, 1).unwrap(), a, b).unwrap())
        .collect()
}
