use super::SubgroupPGL2;
use crate::census::AdditiveSubgroup;
use crate::error::{Error, Result};
use crate::gfq::{Embedding, Field};
use crate::moebius::{pgl2_elements, pgl2_order, Moebius, PP1};

/// Largest PGL2 the brute-force conjugacy oracle will scan.
pub const BRUTE_FORCE_CAP: u64 = 100_000;

fn conjugates_onto(g: &Moebius, h1: &SubgroupPGL2, h2: &SubgroupPGL2) -> bool {
    let gi = g.inverse();
    h1.elements()
        .iter()
        .all(|m| h2.contains(&g.compose_unchecked(m).compose_unchecked(&gi)))
}

/// Some point of P1(field) outside `avoid`.
fn point_outside(field: &Field, avoid: &[&PP1]) -> PP1 {
    PP1::all(field)
        .into_iter()
        .find(|p| !avoid.contains(&p))
        .expect("P1 has at least three points")
}

/// A map sending 0 to `a` and infinity to `b`.
pub(crate) fn frame_two(field: &Field, a: &PP1, b: &PP1) -> Result<Moebius> {
    let zero = PP1::Affine(field.zero());
    let one = PP1::Affine(field.one());
    let third = point_outside(field, &[a, b]);
    Moebius::from_three_points([&zero, &one, &PP1::Infinity], [a, &third, b])
}

/// A map sending infinity to `a`.
pub(crate) fn frame_one(field: &Field, a: &PP1) -> Moebius {
    match a {
        PP1::Infinity => Moebius::identity(field),
        PP1::Affine(x) => Moebius::new(x, &field.one(), &field.one(), &field.zero())
            .expect("[x,1;1,0] is invertible"),
    }
}

/// Searches for g in PGL2(F_{q^r}) with g H1 g^-1 = H2, using the loci of
/// the two groups over F_{q^r} to restrict the candidates:
/// three or more points fix g by an ordered triple, two points leave a torus
/// of transporters, and a single point reduces to comparing additive
/// subgroups up to a scalar. The returned witness is verified.
pub fn is_conjugate(h1: &SubgroupPGL2, h2: &SubgroupPGL2, r: u32) -> Result<Option<Moebius>> {
    h1.field().check_same(h2.field())?;
    if h1.order() != h2.order() {
        return Ok(None);
    }
    let e = Embedding::tower(h1.field(), r)?;
    let (g1, g2) = (h1.lift(&e)?, h2.lift(&e)?);
    let field = e.target().clone();
    let id = Embedding::new(&field, &field)?;
    let (l1, l2) = (g1.stabilized_locus_in(&id)?, g2.stabilized_locus_in(&id)?);
    if l1.len() != l2.len() {
        return Ok(None);
    }
    let found = match l1.len() {
        0 => {
            if g1.order() == 1 {
                Some(Moebius::identity(&field))
            } else {
                // loci not visible at this level; fall back to a scan
                return conjugate_brute_force(&g1, &g2, BRUTE_FORCE_CAP);
            }
        }
        1 => {
            let t1 = frame_one(&field, &l1[0]);
            let t2 = frame_one(&field, &l2[0]);
            let k1 = g1.conjugate_by(&t1.inverse())?;
            let k2 = g2.conjugate_by(&t2.inverse())?;
            let (Ok(gamma1), Ok(gamma2)) = (
                AdditiveSubgroup::from_unipotent(&k1),
                AdditiveSubgroup::from_unipotent(&k2),
            ) else {
                return conjugate_brute_force(&g1, &g2, BRUTE_FORCE_CAP);
            };
            field
                .elements()
                .filter(|a| !a.is_zero())
                .find(|a| gamma1.scale(a).map(|s| s == gamma2).unwrap_or(false))
                .map(|a| {
                    t2.compose_unchecked(&Moebius::scaling(&a).expect("nonzero"))
                        .compose_unchecked(&t1.inverse())
                })
        }
        2 => {
            let t1 = frame_two(&field, &l1[0], &l1[1])?;
            let mut cands = Vec::new();
            for (a, b) in [(&l2[0], &l2[1]), (&l2[1], &l2[0])] {
                let t2 = frame_two(&field, a, b)?;
                for alpha in field.elements().filter(|x| !x.is_zero()) {
                    let d = Moebius::scaling(&alpha)?;
                    cands.push(t2.compose_unchecked(&d).compose_unchecked(&t1.inverse()));
                }
            }
            cands.into_iter().find(|g| conjugates_onto(g, &g1, &g2))
        }
        _ => {
            let src = [&l1[0], &l1[1], &l1[2]];
            let mut found = None;
            'outer: for a in &l2 {
                for b in &l2 {
                    for c in &l2 {
                        if a == b || a == c || b == c {
                            continue;
                        }
                        let g = Moebius::from_three_points(src, [a, b, c])?;
                        if conjugates_onto(&g, &g1, &g2) {
                            found = Some(g);
                            break 'outer;
                        }
                    }
                }
            }
            found
        }
    };
    Ok(found.filter(|g| conjugates_onto(g, &g1, &g2)))
}

/// Oracle: scan all of PGL2 over the groups' field for a conjugator.
pub fn conjugate_brute_force(h1: &SubgroupPGL2, h2: &SubgroupPGL2, cap: u64) -> Result<Option<Moebius>> {
    h1.field().check_same(h2.field())?;
    if h1.order() != h2.order() {
        return Ok(None);
    }
    let size = pgl2_order(h1.field().order() as u64);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(pgl2_elements(h1.field())
        .into_iter()
        .find(|g| conjugates_onto(g, h1, h2)))
}
