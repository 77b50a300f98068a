//! Finite subgroups of PGL2(F_q): closure from generators, fingerprints,
//! the standard models of the p-regular and p-irregular classification
//! lists, stabilized loci and conjugacy.

mod conjugacy;
mod standard;

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::census::AdditiveSubgroup;
use crate::error::{Error, Result};
use crate::gfq::{gcd, Embedding, Field};
use crate::moebius::{Moebius, PP1};

pub use conjugacy::{conjugate_brute_force, is_conjugate, BRUTE_FORCE_CAP};
pub(crate) use conjugacy::{frame_one, frame_two};
pub use standard::{
    std_a4, std_a5, std_a5_char3, std_cyclic, std_dihedral, std_dihedral_char2, std_gamma_semidirect,
    std_pgl2, std_psl2, std_s4,
};

/// Isomorphism type attached to a subgroup by its constructor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Cyclic(u64),
    Dihedral(u64),
    A4,
    S4,
    A5,
    /// PSL2 of the subfield of the given degree.
    Psl2(u32),
    /// PGL2 of the subfield of the given degree.
    Pgl2(u32),
    /// Translations by Gamma extended by the diagonal mu_n.
    GammaSemidirect { gamma: AdditiveSubgroup, n: u64 },
    Unclassified,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Cyclic(n) => write!(f, "cyclic:{n}"),
            Tag::Dihedral(n) => write!(f, "dihedral:{n}"),
            Tag::A4 => write!(f, "A4"),
            Tag::S4 => write!(f, "S4"),
            Tag::A5 => write!(f, "A5"),
            Tag::Psl2(d) => write!(f, "PSL2:{d}"),
            Tag::Pgl2(d) => write!(f, "PGL2:{d}"),
            Tag::GammaSemidirect { gamma, n } => write!(f, "semidirect:{n}:{}", gamma.basis_string()),
            Tag::Unclassified => write!(f, "unclassified"),
        }
    }
}

impl Tag {
    pub fn parse(field: &Field, s: &str) -> Result<Tag> {
        let bad = || Error::Parse(format!("unknown group tag {s:?}"));
        let num = |x: &str| x.trim().parse::<u64>().map_err(|_| bad());
        Ok(match s.trim() {
            "A4" => Tag::A4,
            "S4" => Tag::S4,
            "A5" => Tag::A5,
            "unclassified" => Tag::Unclassified,
            other => {
                let (head, rest) = other.split_once(':').ok_or_else(bad)?;
                match head {
                    "cyclic" => Tag::Cyclic(num(rest)?),
                    "dihedral" => Tag::Dihedral(num(rest)?),
                    "PSL2" => Tag::Psl2(num(rest)? as u32),
                    "PGL2" => Tag::Pgl2(num(rest)? as u32),
                    "semidirect" => {
                        let (n, basis) = rest.split_once(':').unwrap_or((rest, ""));
                        Tag::GammaSemidirect {
                            gamma: AdditiveSubgroup::parse_basis(field, basis)?,
                            n: num(n)?,
                        }
                    }
                    _ => return Err(bad()),
                }
            }
        })
    }

    /// Whether a fingerprint is compatible with this tag in characteristic p.
    pub fn consistent_with(&self, fp: &Fingerprint, p: u64) -> bool {
        let expect_counts = |counts: BTreeMap<u64, u64>| fp.element_orders == counts;
        match self {
            Tag::Unclassified => true,
            Tag::Cyclic(n) => fp.abelian && expect_counts(cyclic_counts(*n)),
            Tag::Dihedral(n) => {
                let mut c = cyclic_counts(*n);
                *c.entry(2).or_insert(0) += n;
                fp.abelian == (*n <= 2) && expect_counts(c)
            }
            Tag::A4 => expect_counts(BTreeMap::from([(1, 1), (2, 3), (3, 8)])),
            Tag::S4 => expect_counts(BTreeMap::from([(1, 1), (2, 9), (3, 8), (4, 6)])),
            Tag::A5 => expect_counts(BTreeMap::from([(1, 1), (2, 15), (3, 20), (5, 24)])),
            Tag::Psl2(d) => {
                let q0 = p.pow(*d);
                fp.order == (q0 * q0 * q0 - q0) / gcd(2, q0 - 1)
            }
            Tag::Pgl2(d) => {
                let q0 = p.pow(*d);
                fp.order == q0 * q0 * q0 - q0
            }
            Tag::GammaSemidirect { gamma, n } => {
                let ok = fp.order == n * gamma.order();
                if *n == 1 {
                    let all_p = fp.element_orders.keys().all(|&o| o == 1 || o == p);
                    ok && fp.abelian && all_p
                } else {
                    ok
                }
            }
        }
    }
}

fn cyclic_counts(n: u64) -> BTreeMap<u64, u64> {
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| (d, (1..=d).filter(|&k| gcd(k, d) == 1).count() as u64))
        .collect()
}

/// Isomorphism-type discriminator: order, element-order statistics,
/// commutativity and p-regularity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: u64,
    pub element_orders: BTreeMap<u64, u64>,
    pub abelian: bool,
    pub p_regular: bool,
}

/// A finite subgroup of PGL2 over a finite field: a canonically sorted
/// element list, the generators it was built from, and a tag.
#[derive(Clone)]
pub struct SubgroupPGL2 {
    field: Field,
    elements: Vec<Moebius>,
    generators: Vec<Moebius>,
    tag: Tag,
}

impl SubgroupPGL2 {
    pub(crate) fn from_parts(field: &Field, mut elements: Vec<Moebius>, generators: Vec<Moebius>, tag: Tag) -> Self {
        elements.sort();
        elements.dedup();
        SubgroupPGL2 {
            field: field.clone(),
            elements,
            generators,
            tag,
        }
    }

    pub fn trivial(field: &Field) -> Self {
        SubgroupPGL2::from_parts(field, vec![Moebius::identity(field)], Vec::new(), Tag::Cyclic(1))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn elements(&self) -> &[Moebius] {
        &self.elements
    }

    pub fn generators(&self) -> &[Moebius] {
        &self.generators
    }

    pub fn tag(&self) -> &Tag {
        &self.tag
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Moebius) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub(crate) fn with_tag(mut self, tag: Tag) -> Self {
        self.tag = tag;
        self
    }

    /// Replaces the tag with `Unclassified` if the fingerprint contradicts it.
    pub(crate) fn checked_tag(self) -> Self {
        let fp = self.fingerprint();
        if self.tag.consistent_with(&fp, self.field.characteristic() as u64) {
            self
        } else {
            self.with_tag(Tag::Unclassified)
        }
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut element_orders = BTreeMap::new();
        for m in &self.elements {
            *element_orders.entry(m.order()).or_insert(0) += 1;
        }
        // commuting generators suffice; with no generators recorded every
        // pair is checked
        let gens: &[Moebius] = if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        };
        let abelian = gens
            .iter()
            .all(|g| self.elements.iter().all(|h| g.compose_unchecked(h) == h.compose_unchecked(g)));
        let order = self.elements.len() as u64;
        Fingerprint {
            order,
            element_orders,
            abelian,
            p_regular: !order.is_multiple_of(self.field.characteristic() as u64),
        }
    }

    /// Union of the fixed points of the non-identity elements over F_{q^r}.
    pub fn stabilized_locus(&self, r: u32) -> Result<Vec<PP1>> {
        let e = Embedding::tower(&self.field, r)?;
        self.stabilized_locus_in(&e)
    }

    pub fn stabilized_locus_in(&self, e: &Embedding) -> Result<Vec<PP1>> {
        let mut pts = std::collections::BTreeSet::new();
        for m in self.elements.iter().filter(|m| !m.is_identity()) {
            pts.extend(m.fixed_points_in(e)?);
        }
        Ok(pts.into_iter().collect())
    }

    /// g H g^-1, computed over the field of `g` (H is lifted if needed).
    pub fn conjugate_by(&self, g: &Moebius) -> Result<SubgroupPGL2> {
        let h = if g.field().same(&self.field) {
            self.clone()
        } else {
            self.lift(&Embedding::new(&self.field, g.field())?)?
        };
        let gi = g.inverse();
        let conj = |m: &Moebius| g.compose_unchecked(m).compose_unchecked(&gi);
        Ok(SubgroupPGL2::from_parts(
            g.field(),
            h.elements.iter().map(conj).collect(),
            h.generators.iter().map(conj).collect(),
            h.tag.clone(),
        ))
    }

    pub fn lift(&self, e: &Embedding) -> Result<SubgroupPGL2> {
        let tag = match &self.tag {
            // Gamma lives in the base field; the lifted group keeps its type
            // but not the literal subspace
            Tag::GammaSemidirect { .. } if !e.is_identity() => Tag::Unclassified,
            t => t.clone(),
        };
        Ok(SubgroupPGL2::from_parts(
            e.target(),
            self.elements.iter().map(|m| m.lift(e)).collect::<Result<_>>()?,
            self.generators.iter().map(|m| m.lift(e)).collect::<Result<_>>()?,
            tag,
        ))
    }

    /// The group over the source of `e`, if every element descends.
    pub fn descend(&self, e: &Embedding) -> Result<Option<SubgroupPGL2>> {
        let mut elements = Vec::with_capacity(self.elements.len());
        for m in &self.elements {
            match m.descend(e)? {
                Some(x) => elements.push(x),
                None => return Ok(None),
            }
        }
        let mut generators = Vec::with_capacity(self.generators.len());
        for m in &self.generators {
            match m.descend(e)? {
                Some(x) => generators.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(SubgroupPGL2::from_parts(e.source(), elements, generators, self.tag.clone())))
    }
}

impl PartialEq for SubgroupPGL2 {
    fn eq(&self, other: &Self) -> bool {
        self.field.same(&other.field) && self.elements == other.elements
    }
}

impl Eq for SubgroupPGL2 {}

impl std::hash::Hash for SubgroupPGL2 {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for SubgroupPGL2 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubgroupPGL2 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements.cmp(&other.elements)
    }
}

impl fmt::Debug for SubgroupPGL2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | order {} over {:?}>", self.tag, self.elements.len(), self.field)
    }
}

/// Default closure cap: |PGL2(F_q)|.
pub fn default_cap(field: &Field) -> usize {
    let q = field.order() as usize;
    q * q * q - q
}

/// Breadth-first closure of `gens` under composition.
pub fn close_generators(gens: &[Moebius], cap: usize) -> Result<SubgroupPGL2> {
    let field = gens
        .first()
        .map(|g| g.field().clone())
        .ok_or_else(|| Error::Precondition("generator list must be nonempty".into()))?;
    for g in gens {
        field.check_same(g.field())?;
    }
    let id = Moebius::identity(&field);
    let mut seen: HashSet<Moebius> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose_unchecked(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::ClosureCap(cap));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(SubgroupPGL2::from_parts(
        &field,
        seen.into_iter().collect(),
        gens.to_vec(),
        Tag::Unclassified,
    ))
}
