use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::{ECAut, ECPoint, ECurve, FixedLocus};
use crate::error::{Error, Result};
use crate::gfq::Embedding;

/// Number of subgroups of order n in Z/d1 x Z/d2, by closing every pair of
/// generators in integer arithmetic.
pub fn abelian_subgroup_count(d1: u64, d2: u64, n: u64) -> u64 {
    let elems: Vec<(u64, u64)> = (0..d1).flat_map(|i| (0..d2).map(move |j| (i, j))).collect();
    let span = |g: (u64, u64), h: (u64, u64)| -> Vec<(u64, u64)> {
        let mut seen = BTreeSet::new();
        for a in 0..d1.max(d2) {
            for b in 0..d1.max(d2) {
                seen.insert(((a * g.0 + b * h.0) % d1, (a * g.1 + b * h.1) % d2));
            }
        }
        seen.into_iter().collect()
    };
    let mut found = HashSet::new();
    for (i, &g) in elems.iter().enumerate() {
        for &h in &elems[i..] {
            let s = span(g, h);
            if s.len() as u64 == n {
                found.insert(s);
            }
        }
    }
    found.len() as u64
}

/// Translations compatible with one admissible automorphism (P, sigma):
/// those Q whose composite (P + Q, sigma) has a nonempty fixed locus inside S.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationFilter {
    pub automorphism: String,
    pub translations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Genus1Report {
    pub schema: String,
    pub curve: String,
    pub level: u32,
    pub s: Vec<String>,
    pub points: u64,
    pub aut0_order: u64,
    /// Automorphisms fixing some point of S (the identity included).
    pub fixing: Vec<String>,
    /// Non-identity automorphisms whose fixed locus is nonempty and inside S.
    pub admissible: Vec<String>,
    pub translation_filters: Vec<TranslationFilter>,
    /// Number of distinct automorphisms (P + Q, sigma) surviving both filters.
    pub certified_bound: u64,
    /// |E(F_{q^r})| * |Aut0|, the trivial ceiling.
    pub ceiling: u64,
    pub finite: bool,
}

/// The two filters behind the finiteness of actions with nonempty
/// stabilized locus inside S, at level r.
pub fn verify_genus1_finiteness(curve: &ECurve, s: &[ECPoint], r: u32) -> Result<Genus1Report> {
    if s.is_empty() {
        return Err(Error::EmptyLocus);
    }
    let e = Embedding::tower(curve.field(), r)?;
    let big = curve.lift(&e)?;
    let s: BTreeSet<ECPoint> = s
        .iter()
        .map(|q| {
            let q = if q.lies_over(big.field()) { q.clone() } else { q.lift(&e)? };
            big.check_point(&q)?;
            Ok(q)
        })
        .collect::<Result<_>>()?;
    let points = big.points();
    let aut0 = big.aut0();

    let mut fixing = BTreeSet::new();
    for q in &s {
        fixing.extend(big.count_auts_fixing(q)?.scan);
    }
    let fixed_inside = |phi: &ECAut| -> Result<bool> {
        Ok(match big.aut_fixed_points(phi)? {
            FixedLocus::Everything => false,
            FixedLocus::Points(v) => !v.is_empty() && v.iter().all(|x| s.contains(x)),
        })
    };
    let mut admissible = Vec::new();
    for phi in &fixing {
        if fixed_inside(phi)? {
            admissible.push(phi.clone());
        }
    }
    let mut survivors = BTreeSet::new();
    let mut translation_filters = Vec::new();
    for phi in &admissible {
        let mut ok = Vec::new();
        for q in &points {
            let comp = ECAut::new(big.add_unchecked(&phi.p, q), phi.u.clone());
            if fixed_inside(&comp)? {
                ok.push(q.to_string());
                survivors.insert(comp);
            }
        }
        translation_filters.push(TranslationFilter {
            automorphism: phi.to_string(),
            translations: ok,
        });
    }
    let ceiling = (points.len() * aut0.len()) as u64;
    let certified_bound = survivors.len() as u64;
    Ok(Genus1Report {
        schema: "covercensus.genus1/1".into(),
        curve: curve.to_string(),
        level: r,
        s: s.iter().map(|x| x.to_string()).collect(),
        points: points.len() as u64,
        aut0_order: aut0.len() as u64,
        fixing: fixing.iter().map(|x| x.to_string()).collect(),
        admissible: admissible.iter().map(|x| x.to_string()).collect(),
        translation_filters,
        certified_bound,
        ceiling,
        finite: certified_bound <= ceiling,
    })
}

/// Outcome of the fixed-point-free check over levels 1..=max_level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DichotomyReport {
    pub curve: String,
    pub levels: Vec<u32>,
    pub checked: u64,
    /// (P, u) that contradict "free at every level iff u = 1 and P != O".
    pub exceptions: Vec<String>,
    /// (P, u != 1) whose fixed set at some level is neither empty nor a
    /// coset of the kernel of 1 - sigma.
    pub fibre_exceptions: Vec<String>,
    /// |ker(1 - sigma_u)| per u != 1 and level, for inspection.
    pub kernel_sizes: Vec<(String, u32, u64)>,
}

/// For every (P, u) with P in E(F_q) and u in Aut0(F_q): free at every level
/// up to `max_level` iff u = 1 and P != O, and for u != 1 the fixed set at
/// each level is empty or has the size of ker(1 - sigma_u).
pub fn verify_pointless_dichotomy(curve: &ECurve, max_level: u32) -> Result<DichotomyReport> {
    let levels: Vec<u32> = (1..=max_level).collect();
    let mut lifted = Vec::new();
    for &r in &levels {
        let e = Embedding::tower(curve.field(), r)?;
        lifted.push((r, e.clone(), curve.lift(&e)?));
    }
    let aut0 = curve.aut0();
    let mut kernel_sizes = Vec::new();
    let mut kernels = Vec::new();
    for u in aut0.iter().filter(|u| !u.is_one()) {
        let mut per_level = Vec::new();
        for (r, e, c) in &lifted {
            let k = c.kernel_one_minus_sigma(&e.map(u)?)?.len() as u64;
            kernel_sizes.push((u.to_string(), *r, k));
            per_level.push(k);
        }
        kernels.push((u.clone(), per_level));
    }
    let mut exceptions = Vec::new();
    let mut fibre_exceptions = Vec::new();
    let mut checked = 0;
    for p in curve.points() {
        for u in &aut0 {
            checked += 1;
            let phi = ECAut::new(p.clone(), u.clone());
            let mut free_everywhere = true;
            for (i, (_, e, c)) in lifted.iter().enumerate() {
                match c.aut_fixed_points(&phi.lift(e)?)? {
                    FixedLocus::Everything => free_everywhere = false,
                    FixedLocus::Points(v) => {
                        if !v.is_empty() {
                            free_everywhere = false;
                        }
                        if !u.is_one() {
                            let k = kernels.iter().find(|(w, _)| w == u).unwrap().1[i];
                            if !v.is_empty() && v.len() as u64 != k {
                                fibre_exceptions.push(format!("{phi} at level {}", i + 1));
                            }
                        }
                    }
                }
            }
            let predicted = u.is_one() && p != ECPoint::O;
            if free_everywhere != predicted {
                exceptions.push(phi.to_string());
            }
        }
    }
    Ok(DichotomyReport {
        curve: curve.to_string(),
        levels,
        checked,
        exceptions,
        fibre_exceptions,
        kernel_sizes,
    })
}
