//! Enumeration of G-actions on the projective line with a prescribed
//! stabilized locus, and the additive-subgroup description of the
//! elementary abelian p-groups with one stabilized point.
//!
//! A match is a subgroup H of PGL2(F_{q^r}) of the requested type whose
//! stabilized locus, computed over F_{q^{2r}} where every fixed point of
//! an element of PGL2(F_{q^r}) lives, is exactly the queried set S.
//! Matches are distinct subgroups; conjugate subgroups with the same locus
//! count separately, since each is a separate cover class.

mod additive;
mod oracle;
mod verify;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gfq::{gaussian_binomial, Embedding, Field, MAX_FIELD_ORDER};
use crate::groups::{
    std_a4, std_a5, std_a5_char3, std_cyclic, std_dihedral, std_dihedral_char2, std_pgl2, std_psl2, std_s4,
    Fingerprint, SubgroupPGL2, Tag,
};
use crate::groups::{frame_one, frame_two};
use crate::moebius::{Moebius, PP1};

pub use additive::{enum_additive_subgroups, gamma_to_unipotent, scale_subgroup, unipotent_to_gamma, AdditiveSubgroup};
pub use oracle::{oracle_enum_elem_abelian, ORACLE_CAP};
pub use verify::{
    default_bounded_queries, verify_main_theorem, BoundedCheck, BoundedQuery, ExtensionImage, GrowthCheck,
    LevelCounts, MainTheoremReport,
};

/// Isomorphism type requested by a census query.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Cyclic(u64),
    Dihedral(u64),
    A4,
    S4,
    A5,
    Psl2(u32),
    Pgl2(u32),
    /// (Z/pZ)^m.
    ElemAbelian(u32),
    /// (Z/pZ)^m extended by a cyclic group of order n prime to p.
    Semidirect { m: u32, n: u64 },
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupKind::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupKind::A4 => write!(f, "A4"),
            GroupKind::S4 => write!(f, "S4"),
            GroupKind::A5 => write!(f, "A5"),
            GroupKind::Psl2(d) => write!(f, "PSL2:{d}"),
            GroupKind::Pgl2(d) => write!(f, "PGL2:{d}"),
            GroupKind::ElemAbelian(m) => write!(f, "Zp^{m}"),
            GroupKind::Semidirect { m, n } => write!(f, "semidirect:{m}:{n}"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupKind> {
        let bad = || Error::Parse(format!("unknown group {s:?}"));
        let s = s.trim();
        match s {
            "A4" => return Ok(GroupKind::A4),
            "S4" => return Ok(GroupKind::S4),
            "A5" => return Ok(GroupKind::A5),
            _ => {}
        }
        if let Some(m) = s.strip_prefix("Zp^") {
            return m.parse().map(GroupKind::ElemAbelian).map_err(|_| bad());
        }
        let parts: Vec<&str> = s.split(':').collect();
        let num = |x: &str| x.parse::<u64>().map_err(|_| bad());
        match parts.as_slice() {
            ["cyclic", n] => Ok(GroupKind::Cyclic(num(n)?)),
            ["dihedral", n] => Ok(GroupKind::Dihedral(num(n)?)),
            ["PSL2", d] => Ok(GroupKind::Psl2(num(d)? as u32)),
            ["PGL2", d] => Ok(GroupKind::Pgl2(num(d)? as u32)),
            ["semidirect", m, n] => Ok(GroupKind::Semidirect {
                m: num(m)? as u32,
                n: num(n)?,
            }),
            _ => Err(bad()),
        }
    }
}

/// The shape a kind takes in characteristic p, after identifying the
/// coincidences of small groups.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Shape {
    Trivial,
    /// Cyclic of order prime to p: diagonalizable, two stabilized points.
    Tame(u64),
    /// (Z/p)^m ⋊ mu_n with m >= 1.
    Wild { m: u32, n: u64 },
    /// Anything with at least three stabilized points, found by transport.
    Transport(GroupKind),
    /// No subgroup of PGL2 in this characteristic has this type.
    Absent(String),
}

impl GroupKind {
    /// Group order in characteristic p.
    pub fn order(&self, p: u64) -> u64 {
        match self {
            GroupKind::Cyclic(n) => *n,
            GroupKind::Dihedral(n) => 2 * n,
            GroupKind::A4 => 12,
            GroupKind::S4 => 24,
            GroupKind::A5 => 60,
            GroupKind::Psl2(d) => {
                let q0 = p.pow(*d);
                (q0 * q0 * q0 - q0) / crate::gfq::gcd(2, q0 - 1)
            }
            GroupKind::Pgl2(d) => {
                let q0 = p.pow(*d);
                q0 * q0 * q0 - q0
            }
            GroupKind::ElemAbelian(m) => p.pow(*m),
            GroupKind::Semidirect { m, n } => n * p.pow(*m),
        }
    }

    fn shape(&self, p: u64) -> Shape {
        let absent = |why: &str| Shape::Absent(format!("{self} does not embed in PGL2 in characteristic {p}: {why}"));
        match *self {
            GroupKind::Cyclic(1) | GroupKind::ElemAbelian(0) => Shape::Trivial,
            GroupKind::Cyclic(n) if n % p != 0 => Shape::Tame(n),
            GroupKind::Cyclic(n) if n == p => Shape::Wild { m: 1, n: 1 },
            GroupKind::Cyclic(_) => absent("p-parts of cyclic subgroups have exponent p"),
            GroupKind::ElemAbelian(m) => Shape::Wild { m, n: 1 },
            GroupKind::Semidirect { m: 0, n } => GroupKind::Cyclic(n).shape(p),
            GroupKind::Semidirect { n, .. } if n == 0 || n % p == 0 => absent("n must be prime to p"),
            GroupKind::Semidirect { m, n } => Shape::Wild { m, n },
            GroupKind::Dihedral(0) => absent("n must be positive"),
            GroupKind::Dihedral(1) => GroupKind::Cyclic(2).shape(p),
            GroupKind::Dihedral(2) if p == 2 => Shape::Wild { m: 2, n: 1 },
            GroupKind::Dihedral(n) if n == p => Shape::Wild { m: 1, n: 2 },
            GroupKind::Dihedral(n) if n % p == 0 || (p == 2 && n % 2 == 0) => {
                absent("the rotation subgroup must be of order prime to p or equal to p")
            }
            GroupKind::A4 if p == 2 => Shape::Wild { m: 2, n: 3 },
            GroupKind::S4 if p == 2 => absent("S4 is not on the characteristic 2 list"),
            _ => Shape::Transport(self.clone()),
        }
    }

    /// Whether a fingerprint could be that of a group of this kind.
    pub fn consistent_with(&self, fp: &Fingerprint, p: u64) -> bool {
        if fp.order != self.order(p) {
            return false;
        }
        let of_order_p = fp.element_orders.get(&p).copied().unwrap_or(0);
        match self.shape(p) {
            Shape::Trivial => true,
            Shape::Wild { m, n } => {
                let ok = of_order_p == p.pow(m) - 1;
                if n == 1 {
                    ok && fp.abelian
                } else {
                    ok
                }
            }
            Shape::Tame(n) => Tag::Cyclic(n).consistent_with(fp, p),
            Shape::Absent(_) => false,
            Shape::Transport(kind) => {
                let tag = match kind {
                    GroupKind::Dihedral(n) => Tag::Dihedral(n),
                    GroupKind::A4 if p == 3 => Tag::Psl2(1),
                    GroupKind::A4 => Tag::A4,
                    GroupKind::S4 if p == 3 => Tag::Pgl2(1),
                    GroupKind::S4 => Tag::S4,
                    GroupKind::A5 => Tag::A5,
                    GroupKind::Psl2(d) => Tag::Psl2(d),
                    GroupKind::Pgl2(d) => Tag::Pgl2(d),
                    _ => Tag::Unclassified,
                };
                tag.consistent_with(fp, p)
            }
        }
    }
}

/// A census question: subgroups of PGL2(F_{q^ext}) of type `group` whose
/// stabilized locus is exactly `locus`.
#[derive(Clone, Debug)]
pub struct CensusQuery {
    pub field: Field,
    pub ext: u32,
    pub group: GroupKind,
    /// Sorted, deduplicated, in F_{q^ext}.
    pub locus: Vec<PP1>,
}

impl CensusQuery {
    /// Points defined over a subfield of F_{q^ext} are embedded; points of
    /// larger fields are rejected.
    pub fn new(field: &Field, ext: u32, group: GroupKind, locus: Vec<PP1>) -> Result<CensusQuery> {
        let work = field.extension(ext)?;
        let mut pts = Vec::with_capacity(locus.len());
        for pt in locus {
            match pt.field() {
                None => pts.push(pt),
                Some(f) if f.same(&work) => pts.push(pt),
                Some(f) => {
                    let e = Embedding::new(f, &work).map_err(|_| Error::PointOutsideField(pt.to_string()))?;
                    pts.push(pt.embed(&e)?);
                }
            }
        }
        pts.sort();
        pts.dedup();
        Ok(CensusQuery {
            field: field.clone(),
            ext,
            group,
            locus: pts,
        })
    }

    /// F_{q^ext}, where the matches live.
    pub fn working_field(&self) -> Result<Field> {
        self.field.extension(self.ext)
    }
}

/// Finite or growing, in the sense of the finite-level dichotomy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The count is at most `bound` at every level of the tower.
    Finite { bound: u64 },
    /// Counts at increasing levels (degree over F_p, count).
    GrowsWithField { counts: Vec<(u32, u64)> },
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub query: CensusQuery,
    /// Sorted by element list, pairwise distinct.
    pub matches: Vec<SubgroupPGL2>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl CensusReport {
    pub fn count(&self) -> usize {
        self.matches.len()
    }
}

fn collect<T, F>(items: Vec<T>, parallel: bool, f: F) -> Result<Vec<SubgroupPGL2>>
where
    T: Send + Sync,
    F: Fn(&T) -> Result<Option<SubgroupPGL2>> + Send + Sync,
{
    let out: Vec<Result<Option<SubgroupPGL2>>> = if parallel {
        items.par_iter().map(&f).collect()
    } else {
        items.iter().map(&f).collect()
    };
    let mut groups = Vec::new();
    for r in out {
        if let Some(g) = r? {
            groups.push(g);
        }
    }
    Ok(groups)
}

/// All subgroups of PGL2(F_{q^ext}) of the queried type with stabilized
/// locus exactly S. With `parallel` the candidates are processed on the
/// rayon pool; the result is identical to the serial run.
pub fn enum_actions(query: &CensusQuery, parallel: bool) -> Result<CensusReport> {
    let work = query.working_field()?;
    let p = work.characteristic() as u64;
    let s = &query.locus;
    let mut notes = Vec::new();
    let shape = query.group.shape(p);
    let (candidates, verdict) = match &shape {
        Shape::Trivial => {
            let found = if s.is_empty() {
                vec![SubgroupPGL2::trivial(&work)]
            } else {
                vec![]
            };
            (found, Verdict::Finite { bound: s.is_empty() as u64 })
        }
        Shape::Absent(why) => {
            notes.push(why.clone());
            (vec![], Verdict::Finite { bound: 0 })
        }
        Shape::Tame(n) => {
            if s.len() != 2 {
                notes.push(format!("a cyclic group of order {n} has exactly two stabilized points"));
                (vec![], Verdict::Finite { bound: 0 })
            } else {
                (tame_cyclic(&work, *n, s, &mut notes)?, Verdict::Finite { bound: 1 })
            }
        }
        Shape::Wild { m, n: 1 } => {
            if s.len() != 1 {
                notes.push("an elementary abelian p-group has exactly one stabilized point".into());
                (vec![], Verdict::Finite { bound: 0 })
            } else {
                let base = work.degree();
                let counts = (1..=3)
                    .map(|k| (base * k, gaussian_binomial(base * k, *m, p) as u64))
                    .collect();
                (
                    elementary_abelian(&work, *m, &s[0], parallel, &mut notes)?,
                    Verdict::GrowsWithField { counts },
                )
            }
        }
        Shape::Wild { m, n } => {
            let expected = p.pow(*m) as usize + 1;
            if s.len() != expected {
                notes.push(format!("this group has exactly {expected} stabilized points"));
                (vec![], Verdict::Finite { bound: 0 })
            } else {
                (wild_semidirect(&work, *m, *n, s, &mut notes)?, Verdict::Finite { bound: s.len() as u64 })
            }
        }
        Shape::Transport(kind) => {
            if s.len() < 3 {
                notes.push("this group has at least three stabilized points".into());
                (vec![], Verdict::Finite { bound: 0 })
            } else {
                let k = s.len() as u64;
                (
                    transported(&work, kind, s, parallel, &mut notes)?,
                    Verdict::Finite { bound: k * (k - 1) * (k - 2) },
                )
            }
        }
    };

    // every candidate is rechecked against the query before it is reported
    let quad = Embedding::tower(&work, 2)?;
    let target: Vec<PP1> = s.iter().map(|x| x.embed(&quad)).collect::<Result<_>>()?;
    let mut target = target;
    target.sort();
    let check = |h: &SubgroupPGL2| -> Result<Option<SubgroupPGL2>> {
        if !query.group.consistent_with(&h.fingerprint(), p) {
            return Ok(None);
        }
        let locus = h.stabilized_locus_in(&quad)?;
        Ok((locus == target).then(|| h.clone()))
    };
    let mut matches = collect(candidates, parallel, check)?;
    matches.sort();
    matches.dedup();
    Ok(CensusReport {
        query: query.clone(),
        matches,
        verdict,
        notes,
    })
}

fn tame_cyclic(work: &Field, n: u64, s: &[PP1], notes: &mut Vec<String>) -> Result<Vec<SubgroupPGL2>> {
    let model = match std_cyclic(work, n) {
        Ok(m) => m,
        Err(Error::MissingRootOfUnity { .. }) => {
            notes.push(format!(
                "no primitive {n}-th root of unity at this level, so no cyclic group of order {n} fixes two rational points"
            ));
            return Ok(vec![]);
        }
        Err(e) => return Err(e),
    };
    // swapping the two points conjugates the diagonal group to itself
    let t = frame_two(work, &s[0], &s[1])?;
    Ok(vec![model.conjugate_by(&t)?])
}

fn elementary_abelian(
    work: &Field,
    m: u32,
    point: &PP1,
    parallel: bool,
    notes: &mut Vec<String>,
) -> Result<Vec<SubgroupPGL2>> {
    if m > work.degree() {
        notes.push(format!("rank {m} exceeds the degree {} of the working field", work.degree()));
        return Ok(vec![]);
    }
    let t = frame_one(work, point);
    let gammas = AdditiveSubgroup::enumerate(work, m)?;
    collect(gammas, parallel, |g| Ok(Some(g.to_unipotent().conjugate_by(&t)?)))
}

/// (Z/p)^m ⋊ mu_n with locus S: the wild point P is moved to infinity, where
/// the group is {x -> z x + (1 - z) c + g : z in mu_n, g in Gamma} and its
/// affine stabilized points form the coset c + Gamma.
fn wild_semidirect(work: &Field, m: u32, n: u64, s: &[PP1], notes: &mut Vec<String>) -> Result<Vec<SubgroupPGL2>> {
    let mu = work.roots_of_unity(n)?;
    if mu.primitive.is_none() {
        notes.push(format!("no primitive {n}-th root of unity at this level"));
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    for wild in s {
        let t = frame_one(work, wild);
        let ti = t.inverse();
        let coset: Vec<_> = s
            .iter()
            .filter(|x| *x != wild)
            .filter_map(|x| match ti.apply_unchecked(x) {
                PP1::Affine(y) => Some(y),
                PP1::Infinity => None,
            })
            .collect();
        let c = coset.iter().min().expect("locus has p^m + 1 >= 2 points").clone();
        let diffs: Vec<_> = coset.iter().map(|y| y - &c).collect();
        let gamma = AdditiveSubgroup::span(work, &diffs)?;
        if gamma.rank() != m || gamma.order() as usize != coset.len() {
            continue;
        }
        let members = gamma.elements();
        if mu.roots.iter().any(|z| members.iter().any(|g| !gamma.contains(&(z * g)))) {
            continue;
        }
        let one = work.one();
        let mut elements = Vec::with_capacity(mu.roots.len() * members.len());
        for z in &mu.roots {
            let shift = &(&one - z) * &c;
            for g in &members {
                elements.push(Moebius::new(z, &(&shift + g), &work.zero(), &one)?);
            }
        }
        let zeta = mu.primitive.clone().unwrap();
        let mut gens: Vec<Moebius> = gamma.basis().iter().map(Moebius::translation).collect();
        gens.push(Moebius::new(&zeta, &(&(&one - &zeta) * &c), &work.zero(), &one)?);
        let h = SubgroupPGL2::from_parts(work, elements, gens, Tag::GammaSemidirect { gamma, n });
        out.push(h.conjugate_by(&t)?);
    }
    Ok(out)
}

/// The standard subgroup of PGL2(field) of the given kind, using the
/// characteristic-specific form where the generic one degenerates. The
/// (Z/p)^m kinds need a choice of Gamma and are built from it directly.
pub fn standard_model(kind: &GroupKind, field: &Field) -> Result<SubgroupPGL2> {
    let p = field.characteristic();
    match *kind {
        GroupKind::Cyclic(n) => std_cyclic(field, n),
        GroupKind::Dihedral(n) if p == 2 => std_dihedral_char2(field, n),
        GroupKind::Dihedral(n) => std_dihedral(field, n),
        GroupKind::A4 if p == 3 => std_psl2(field, 1),
        GroupKind::A4 => std_a4(field),
        GroupKind::S4 if p == 3 => std_pgl2(field, 1),
        GroupKind::S4 => std_s4(field),
        GroupKind::A5 if p == 2 => std_psl2(field, 2),
        GroupKind::A5 if p == 3 => std_a5_char3(field),
        GroupKind::A5 if p == 5 => std_psl2(field, 1),
        GroupKind::A5 => std_a5(field),
        GroupKind::Psl2(d) => std_psl2(field, d),
        GroupKind::Pgl2(d) => std_pgl2(field, d),
        GroupKind::ElemAbelian(_) | GroupKind::Semidirect { .. } => {
            Err(Error::Precondition(format!("{kind} is built from a choice of Gamma")))
        }
    }
}

/// Groups with three or more stabilized points: a standard model M is built
/// over F_{q^{2r}} (every finite subgroup of PGL2(F_{q^r}) has the roots of
/// unity it needs there), and any H with locus S equals g M g^-1 for a g
/// sending a fixed triple of M's locus to an ordered triple of S.
fn transported(
    work: &Field,
    kind: &GroupKind,
    s: &[PP1],
    parallel: bool,
    notes: &mut Vec<String>,
) -> Result<Vec<SubgroupPGL2>> {
    let up = Embedding::tower(work, 2)?;
    let model = match standard_model(kind, up.target()) {
        Ok(m) => m,
        Err(e @ (Error::MissingRootOfUnity { .. } | Error::DegreeNotDividing { .. })) => {
            notes.push(format!("no model over F_{{q^2r}}, so none over the working field: {e}"));
            return Ok(vec![]);
        }
        Err(e) => return Err(e),
    };
    // look for three visible points of the model's locus, one level up if needed
    let mut model = model;
    let mut frame_up = up.clone();
    let mut src = model.stabilized_locus_in(&Embedding::new(up.target(), up.target())?)?;
    if src.len() < 3 {
        let q4 = (up.target().order() as u64).pow(2);
        if q4 > MAX_FIELD_ORDER {
            notes.push("the model's locus is not visible at the supported field sizes".into());
            return Ok(vec![]);
        }
        frame_up = Embedding::tower(work, 4)?;
        let lift = Embedding::new(up.target(), frame_up.target())?;
        model = model.lift(&lift)?;
        src = model.stabilized_locus_in(&Embedding::new(frame_up.target(), frame_up.target())?)?;
        if src.len() < 3 {
            notes.push("the model has fewer than three stabilized points".into());
            return Ok(vec![]);
        }
    }
    let s_up: Vec<PP1> = s.iter().map(|x| x.embed(&frame_up)).collect::<Result<_>>()?;
    let mut triples = Vec::new();
    for a in &s_up {
        for b in &s_up {
            for c in &s_up {
                if a != b && a != c && b != c {
                    triples.push([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    let src3 = [&src[0], &src[1], &src[2]];
    collect(triples, parallel, |[a, b, c]| {
        let g = Moebius::from_three_points(src3, [a, b, c])?;
        model.conjugate_by(&g)?.descend(&frame_up)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::pgl2_elements;

    fn pts(field: &Field, s: &str) -> Vec<PP1> {
        PP1::parse_list(field, s).unwrap()
    }

    fn run(field: &Field, ext: u32, group: &str, locus: &str) -> CensusReport {
        let work = field.extension(ext).unwrap();
        let q = CensusQuery::new(field, ext, group.parse().unwrap(), pts(&work, locus)).unwrap();
        enum_actions(&q, false).unwrap()
    }

    #[test]
    fn kind_text_round_trip() {
        for s in ["cyclic:4", "dihedral:3", "A4", "S4", "A5", "PSL2:1", "PGL2:2", "Zp^2", "semidirect:1:2"] {
            assert_eq!(s.parse::<GroupKind>().unwrap().to_string(), s);
        }
        assert!("cyclic".parse::<GroupKind>().is_err());
        assert!("Zp^x".parse::<GroupKind>().is_err());
    }

    #[test]
    fn spec_examples() {
        let f8 = Field::auto(2, 3).unwrap();
        let r = run(&f8, 1, "Zp^1", "inf");
        assert_eq!(r.count(), 7);
        assert!(matches!(r.verdict, Verdict::GrowsWithField { .. }));
        let f5 = Field::auto(5, 1).unwrap();
        let r = run(&f5, 1, "cyclic:4", "0,inf");
        assert_eq!(r.count(), 1);
        assert_eq!(r.verdict, Verdict::Finite { bound: 1 });
        assert_eq!(run(&f5, 1, "cyclic:4", "0,1,inf").count(), 0);
    }

    #[test]
    fn matches_have_exact_locus_and_type() {
        let f5 = Field::auto(5, 1).unwrap();
        let q = f5.extension(2).unwrap();
        let a4 = std_a4(&f5).unwrap();
        let locus = a4.stabilized_locus(2).unwrap();
        assert_eq!(locus.len(), 14);
        // the locus leaves F_5, so the census runs over F_25
        let query = CensusQuery::new(&f5, 2, GroupKind::A4, locus).unwrap();
        let r = enum_actions(&query, false).unwrap();
        assert!(r.count() >= 1);
        let lifted = a4.lift(&Embedding::new(&f5, &q).unwrap()).unwrap();
        assert!(r.matches.contains(&lifted));
        let e = Embedding::tower(&q, 2).unwrap();
        for h in &r.matches {
            let mut s: Vec<PP1> = query.locus.iter().map(|x| x.embed(&e).unwrap()).collect();
            s.sort();
            assert_eq!(h.stabilized_locus_in(&e).unwrap(), s);
            assert_eq!(h.order(), 12);
        }
        if let Verdict::Finite { bound } = r.verdict {
            assert!(r.count() as u64 <= bound);
        } else {
            panic!("A4 census must be finite");
        }
    }

    #[test]
    fn parallel_equals_serial() {
        let f9 = Field::auto(3, 2).unwrap();
        for (g, s) in [("Zp^1", "inf"), ("cyclic:4", "0,0,inf"), ("PGL2:1", "")] {
            let locus = if g == "PGL2:1" {
                std_pgl2(&f9, 1).unwrap().stabilized_locus(1).unwrap()
            } else {
                pts(&f9, s)
            };
            let q = CensusQuery::new(&f9, 1, g.parse().unwrap(), locus).unwrap();
            let a = enum_actions(&q, false).unwrap();
            let b = enum_actions(&q, true).unwrap();
            assert_eq!(a.matches, b.matches);
            let gens = |r: &CensusReport| r.matches.iter().map(|h| h.generators().to_vec()).collect::<Vec<_>>();
            assert_eq!(gens(&a), gens(&b));
        }
    }

    #[test]
    fn conjugation_transport() {
        // g H g^-1 appears in the census of g(S), exhaustively over F_4 and F_9
        for (p, n, group) in [(2u32, 2u32, "Zp^1"), (3, 2, "cyclic:2"), (3, 2, "Zp^1")] {
            let f = Field::auto(p, n).unwrap();
            let zero = PP1::Affine(f.zero());
            let base = if group == "Zp^1" {
                vec![PP1::Infinity]
            } else {
                vec![zero, PP1::Infinity]
            };
            let kind: GroupKind = group.parse().unwrap();
            let r = enum_actions(&CensusQuery::new(&f, 1, kind.clone(), base.clone()).unwrap(), false).unwrap();
            assert!(r.count() > 0);
            for g in pgl2_elements(&f).iter().step_by(5) {
                let moved: Vec<PP1> = base.iter().map(|x| g.apply(x).unwrap()).collect();
                let other = enum_actions(&CensusQuery::new(&f, 1, kind.clone(), moved).unwrap(), false).unwrap();
                assert_eq!(other.count(), r.count());
                for h in &r.matches {
                    assert!(other.matches.contains(&h.conjugate_by(g).unwrap()));
                }
            }
        }
    }

    #[test]
    fn wild_semidirect_census() {
        // F_4: x -> z x + g over all of F_4, z in mu_3, is the affine group
        let f4 = Field::auto(2, 2).unwrap();
        let all = PP1::all(&f4);
        let r = enum_actions(&CensusQuery::new(&f4, 1, "semidirect:2:3".parse().unwrap(), all.clone()).unwrap(), false).unwrap();
        // one group per choice of wild point
        assert_eq!(r.count(), 5);
        assert!(r.matches.iter().all(|h| h.order() == 12));
        // A4 in characteristic 2 is the same census
        let a4 = enum_actions(&CensusQuery::new(&f4, 1, GroupKind::A4, all).unwrap(), false).unwrap();
        assert_eq!(a4.matches, r.matches);
    }

    #[test]
    fn tame_finiteness_small() {
        let f5 = Field::auto(5, 1).unwrap();
        for s in ["0", "1", "inf", "0,1,inf", "1,2,3"] {
            assert_eq!(run(&f5, 1, "cyclic:4", s).count(), 0, "locus {s}");
        }
        assert_eq!(run(&f5, 1, "cyclic:4", "1,3").count(), 1);
        // no mu_3 in F_5
        assert_eq!(run(&f5, 1, "cyclic:3", "0,inf").count(), 0);
    }

    #[test]
    fn empty_and_trivial() {
        let f3 = Field::auto(3, 1).unwrap();
        assert_eq!(run(&f3, 1, "cyclic:1", "").count(), 1);
        assert_eq!(run(&f3, 1, "cyclic:1", "0").count(), 0);
        assert_eq!(run(&f3, 1, "Zp^1", "").count(), 0);
        assert_eq!(run(&f3, 1, "S4", "").count(), 0);
    }
}
