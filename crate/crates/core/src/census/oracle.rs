use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gfq::{Embedding, Field};
use crate::groups::{close_generators, SubgroupPGL2};
use crate::moebius::{pgl2_elements, pgl2_order, Moebius, PP1};

/// Largest PGL2 the oracle scans.
pub const ORACLE_CAP: u64 = 100_000;

/// Independent count of the (Z/p)^m-actions fixing `point`: scans all of
/// PGL2(F_{q^r}) for elements of order p fixing the point, then grows
/// elementary abelian subgroups one generator at a time by closure.
pub fn oracle_enum_elem_abelian(field: &Field, m: u32, point: &PP1, r: u32, cap: u64) -> Result<Vec<SubgroupPGL2>> {
    let work = field.extension(r)?;
    let point = match point.field() {
        Some(f) if !f.same(&work) => {
            let e = Embedding::new(f, &work).map_err(|_| Error::PointOutsideField(point.to_string()))?;
            point.embed(&e)?
        }
        _ => point.clone(),
    };
    let size = pgl2_order(work.order() as u64);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let p = work.characteristic() as u64;
    let order_p: Vec<Moebius> = pgl2_elements(&work)
        .into_iter()
        .filter(|g| g.apply_unchecked(&point) == point && g.order() == p)
        .collect();

    let mut gens_of: Vec<(Vec<Moebius>, Vec<Moebius>)> = vec![(vec![Moebius::identity(&work)], vec![])];
    for k in 0..m {
        let want = p.pow(k + 1) as usize;
        let mut next = BTreeSet::new();
        let mut next_gens = Vec::new();
        for (elems, gens) in &gens_of {
            for x in &order_p {
                if elems.binary_search(x).is_ok() {
                    continue;
                }
                let mut g = gens.clone();
                g.push(x.clone());
                let h = match close_generators(&g, want) {
                    Ok(h) => h,
                    Err(Error::ClosureCap(_)) => continue,
                    Err(e) => return Err(e),
                };
                let fp = h.fingerprint();
                let exponent_p = fp.element_orders.keys().all(|&o| o == 1 || o == p);
                if h.order() == want && fp.abelian && exponent_p && next.insert(h.elements().to_vec()) {
                    next_gens.push((h.elements().to_vec(), g));
                }
            }
        }
        gens_of = next_gens;
    }
    let mut out: Vec<SubgroupPGL2> = gens_of
        .into_iter()
        .map(|(_, g)| {
            if g.is_empty() {
                Ok(SubgroupPGL2::trivial(&work))
            } else {
                close_generators(&g, p.pow(m) as usize)
            }
        })
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let f2 = Field::auto(2, 1).unwrap();
        assert_eq!(oracle_enum_elem_abelian(&f2, 1, &PP1::Infinity, 1, ORACLE_CAP).unwrap().len(), 1);
        let f4 = Field::auto(2, 2).unwrap();
        assert_eq!(oracle_enum_elem_abelian(&f4, 1, &PP1::Infinity, 1, ORACLE_CAP).unwrap().len(), 3);
        let full = oracle_enum_elem_abelian(&f4, 2, &PP1::Infinity, 1, ORACLE_CAP).unwrap();
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].order(), 4);
    }

    #[test]
    fn other_points_and_cap() {
        let f3 = Field::auto(3, 1).unwrap();
        let zero = PP1::Affine(f3.zero());
        assert_eq!(oracle_enum_elem_abelian(&f3, 1, &zero, 2, ORACLE_CAP).unwrap().len(), 4);
        assert!(matches!(
            oracle_enum_elem_abelian(&f3, 1, &zero, 2, 10),
            Err(Error::CapExceeded { size: 720, cap: 10 })
        ));
    }
}
