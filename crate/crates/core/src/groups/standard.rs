//! Standard models of the finite subgroups of PGL2 in characteristic p, one
//! per conjugacy type of the p-regular and p-irregular classification lists.

use super::{close_generators, default_cap, SubgroupPGL2, Tag};
use crate::census::AdditiveSubgroup;
use crate::error::{Error, Result};
use crate::gfq::{Field, FqElem};
use crate::moebius::Moebius;

fn require_p_coprime(field: &Field, n: u64, group: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition(format!("{group}: n must be positive")));
    }
    let p = field.characteristic() as u64;
    if n.is_multiple_of(p) {
        return Err(Error::Precondition(format!("{group}: p = {p} divides n = {n}")));
    }
    Ok(())
}

fn exclude(field: &Field, excluded: &[u32], group: &str) -> Result<()> {
    let p = field.characteristic();
    if excluded.contains(&p) {
        return Err(Error::ExcludedCharacteristic {
            p,
            group: group.into(),
        });
    }
    Ok(())
}

fn build(gens: Vec<Moebius>, tag: Tag) -> Result<SubgroupPGL2> {
    let cap = default_cap(gens[0].field());
    Ok(close_generators(&gens, cap)?.with_tag(tag).checked_tag())
}

fn mat(a: &FqElem, b: &FqElem, c: &FqElem, d: &FqElem) -> Moebius {
    Moebius::new(a, b, c, d).expect("standard generators are invertible")
}

fn swap(field: &Field) -> Moebius {
    mat(&field.zero(), &field.one(), &field.one(), &field.zero())
}

/// The diagonal group {diag(zeta, 1) : zeta in mu_n}.
pub fn std_cyclic(field: &Field, n: u64) -> Result<SubgroupPGL2> {
    require_p_coprime(field, n, "cyclic")?;
    let zeta = field.primitive_root_of_unity(n)?;
    let roots = field.roots_of_unity(n)?.roots;
    let elements = roots
        .iter()
        .map(Moebius::scaling)
        .collect::<Result<Vec<_>>>()?;
    let gens = vec![Moebius::scaling(&zeta)?];
    Ok(SubgroupPGL2::from_parts(field, elements, gens, Tag::Cyclic(n)).checked_tag())
}

/// mu_n extended by x -> 1/x, for p != 2.
pub fn std_dihedral(field: &Field, n: u64) -> Result<SubgroupPGL2> {
    exclude(field, &[2], "dihedral (use the characteristic 2 form)")?;
    require_p_coprime(field, n, "dihedral")?;
    let zeta = field.primitive_root_of_unity(n)?;
    build(vec![Moebius::scaling(&zeta)?, swap(field)], Tag::Dihedral(n))
}

/// The characteristic 2 dihedral group of order 2n, n odd and greater than one.
pub fn std_dihedral_char2(field: &Field, n: u64) -> Result<SubgroupPGL2> {
    if field.characteristic() != 2 {
        return Err(Error::Precondition("the characteristic 2 dihedral form needs p = 2".into()));
    }
    if n <= 1 || n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "characteristic 2 dihedral: n must be odd and greater than one, got {n}"
        )));
    }
    let zeta = field.primitive_root_of_unity(n)?;
    build(vec![Moebius::scaling(&zeta)?, swap(field)], Tag::Dihedral(n))
}

fn a4_generators(field: &Field) -> Result<(Vec<Moebius>, FqElem)> {
    exclude(field, &[2, 3], "A4/S4")?;
    let z4 = field.primitive_root_of_unity(4)?;
    let (zero, one) = (field.zero(), field.one());
    let gens = vec![
        mat(&zero, &-&one, &one, &zero),
        mat(&zero, &one, &one, &zero),
        mat(&one, &z4, &one, &-&z4),
    ];
    Ok((gens, z4))
}

pub fn std_a4(field: &Field) -> Result<SubgroupPGL2> {
    let (gens, _) = a4_generators(field)?;
    build(gens, Tag::A4)
}

pub fn std_s4(field: &Field) -> Result<SubgroupPGL2> {
    let (mut gens, z4) = a4_generators(field)?;
    gens.push(Moebius::scaling(&z4)?);
    build(gens, Tag::S4)
}

fn a5_generators(field: &Field) -> Result<Vec<Moebius>> {
    let z5 = field.primitive_root_of_unity(5)?;
    let one = field.one();
    let corner = &(&one - &z5) - &z5.inv()?;
    Ok(vec![Moebius::scaling(&z5)?, mat(&one, &corner, &one, &-&one)])
}

/// The icosahedral group for p not in {2, 3, 5}.
pub fn std_a5(field: &Field) -> Result<SubgroupPGL2> {
    exclude(field, &[2, 3, 5], "A5 (tame)")?;
    build(a5_generators(field)?, Tag::A5)
}

/// The icosahedral group in characteristic 3, where it is p-irregular.
pub fn std_a5_char3(field: &Field) -> Result<SubgroupPGL2> {
    if field.characteristic() != 3 {
        return Err(Error::Precondition("the characteristic 3 A5 form needs p = 3".into()));
    }
    build(a5_generators(field)?, Tag::A5)
}

/// An F_p-basis of the subfield of degree d, in echelon form.
fn subfield_basis(field: &Field, d: u32) -> Result<(Vec<FqElem>, Vec<FqElem>)> {
    let elems = field.subfield_elements(d)?;
    let basis = AdditiveSubgroup::span(field, &elems)?.basis();
    Ok((basis, elems))
}

fn transvections(field: &Field, basis: &[FqElem]) -> Vec<Moebius> {
    let (zero, one) = (field.zero(), field.one());
    basis
        .iter()
        .flat_map(|g| [mat(&one, g, &zero, &one), mat(&one, &zero, g, &one)])
        .collect()
}

/// PSL2 of the subfield F_{p^d}, generated by elementary transvections over
/// an F_p-basis of the subfield.
pub fn std_psl2(field: &Field, d: u32) -> Result<SubgroupPGL2> {
    let (basis, _) = subfield_basis(field, d)?;
    build(transvections(field, &basis), Tag::Psl2(d))
}

/// PGL2 of the subfield F_{p^d}: the PSL2 generators plus diag(delta, 1) for a
/// generator delta of the subfield's multiplicative group.
pub fn std_pgl2(field: &Field, d: u32) -> Result<SubgroupPGL2> {
    let (basis, elems) = subfield_basis(field, d)?;
    let q0 = (field.characteristic() as u64).pow(d);
    let delta = elems
        .iter()
        .find(|x| x.multiplicative_order() == Some(q0 - 1))
        .cloned()
        .expect("finite subfields have cyclic unit groups");
    let mut gens = transvections(field, &basis);
    gens.push(Moebius::scaling(&delta)?);
    build(gens, Tag::Pgl2(d))
}

/// {x -> zeta x + g : zeta in mu_n, g in Gamma}, for Gamma stable under
/// mu_n and containing it.
pub fn std_gamma_semidirect(gamma: &AdditiveSubgroup, n: u64) -> Result<SubgroupPGL2> {
    let field = gamma.field();
    require_p_coprime(field, n, "Gamma semidirect")?;
    let zeta = field.primitive_root_of_unity(n)?;
    let mu = field.roots_of_unity(n)?.roots;
    if let Some(z) = mu.iter().find(|z| !gamma.contains(z)) {
        return Err(Error::Precondition(format!("mu_{n} is not contained in Gamma ({z} missing)")));
    }
    let members = gamma.elements();
    for z in &mu {
        for g in &members {
            if !gamma.contains(&(z * g)) {
                return Err(Error::Precondition(format!("mu_{n} * Gamma is not contained in Gamma")));
            }
        }
    }
    let one = field.one();
    let zero = field.zero();
    let mut elements = Vec::with_capacity(mu.len() * members.len());
    for z in &mu {
        for g in &members {
            elements.push(mat(z, g, &zero, &one));
        }
    }
    let mut gens: Vec<Moebius> = gamma.basis().iter().map(Moebius::translation).collect();
    if n > 1 {
        gens.push(Moebius::scaling(&zeta)?);
    }
    Ok(SubgroupPGL2::from_parts(
        field,
        elements,
        gens,
        Tag::GammaSemidirect {
            gamma: gamma.clone(),
            n,
        },
    )
    .checked_tag())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::Embedding;
    use crate::moebius::PP1;
    use std::collections::BTreeMap;

    fn f(p: u32, n: u32) -> Field {
        Field::auto(p, n).unwrap()
    }

    #[test]
    fn cyclic_examples() {
        let f5 = f(5, 1);
        let c = std_cyclic(&f5, 4).unwrap();
        assert_eq!(c.order(), 4);
        assert_eq!(c.tag(), &Tag::Cyclic(4));
        for m in c.elements() {
            let [_, b, cc, d] = m.entries();
            assert!(b.is_zero() && cc.is_zero() && !d.is_zero());
        }
        assert!(matches!(std_cyclic(&f5, 5), Err(Error::Precondition(_))));
        assert!(matches!(
            std_cyclic(&f5, 3),
            Err(Error::MissingRootOfUnity { minimal_degree: 2, .. })
        ));
        assert_eq!(std_cyclic(&f(2, 2), 3).unwrap().order(), 3);
    }

    #[test]
    fn dihedral_examples() {
        let d = std_dihedral(&f(5, 1), 4).unwrap();
        assert_eq!(d.order(), 8);
        assert_eq!(d.tag(), &Tag::Dihedral(4));
        assert!(!d.fingerprint().abelian);
        let d2 = std_dihedral_char2(&f(2, 2), 3).unwrap();
        assert_eq!(d2.order(), 6);
        assert_eq!(d2.tag(), &Tag::Dihedral(3));
        assert!(std_dihedral_char2(&f(2, 2), 2).is_err());
        assert!(std_dihedral(&f(2, 2), 3).is_err());
    }

    #[test]
    fn polyhedral_examples() {
        let f5 = f(5, 1);
        let a4 = std_a4(&f5).unwrap();
        assert_eq!(a4.tag(), &Tag::A4);
        assert_eq!(
            a4.fingerprint().element_orders,
            BTreeMap::from([(1, 1), (2, 3), (3, 8)])
        );
        let s4 = std_s4(&f5).unwrap();
        assert_eq!((s4.order(), s4.tag()), (24, &Tag::S4));
        let a5 = std_a5_char3(&f(3, 4)).unwrap();
        assert_eq!((a5.order(), a5.tag()), (60, &Tag::A5));
        let a5 = std_a5(&f(11, 1)).unwrap();
        assert_eq!((a5.order(), a5.tag()), (60, &Tag::A5));
        assert!(matches!(std_a4(&f(3, 2)), Err(Error::ExcludedCharacteristic { .. })));
        assert!(matches!(std_a5(&f(5, 2)), Err(Error::ExcludedCharacteristic { .. })));
        // 7 = 3 mod 4, so zeta_4 needs F_49
        assert!(matches!(
            std_a4(&f(7, 1)),
            Err(Error::MissingRootOfUnity { minimal_degree: 2, .. })
        ));
    }

    #[test]
    fn linear_group_examples() {
        assert_eq!(std_pgl2(&f(3, 1), 1).unwrap().order(), 24);
        assert_eq!(std_psl2(&f(5, 1), 1).unwrap().order(), 60);
        let f2 = f(2, 1);
        assert_eq!(std_pgl2(&f2, 1).unwrap(), std_psl2(&f2, 1).unwrap());
        assert_eq!(std_pgl2(&f2, 1).unwrap().order(), 6);
        // subfield F_4 inside F_16
        let f16 = f(2, 4);
        assert_eq!(std_psl2(&f16, 2).unwrap().order(), 60);
        assert_eq!(std_pgl2(&f(3, 2), 1).unwrap().order(), 24);
        assert!(std_psl2(&f(2, 3), 2).is_err());
    }

    #[test]
    fn gamma_semidirect_examples() {
        let f9 = f(3, 2);
        let g = std_gamma_semidirect(&AdditiveSubgroup::prime_field(&f9), 2).unwrap();
        assert_eq!(g.order(), 6);
        let f4 = f(2, 2);
        let g = std_gamma_semidirect(&AdditiveSubgroup::prime_field(&f4), 1).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.contains(&Moebius::from_ints(&f4, 1, 1, 0, 1).unwrap()));
        let span_t = AdditiveSubgroup::span(&f4, &[f4.generator()]).unwrap();
        assert!(matches!(std_gamma_semidirect(&span_t, 3), Err(Error::Precondition(_))));
        let full = AdditiveSubgroup::span(&f4, &[f4.one(), f4.generator()]).unwrap();
        let g = std_gamma_semidirect(&full, 3).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.tag().to_string(), format!("semidirect:3:{}", full.basis_string()));
    }

    #[test]
    fn semidirect_locus_contains_shifted_fixed_points() {
        // for g in Gamma nonzero, x -> zeta x + g fixes g / (1 - zeta)
        let f16 = f(2, 4);
        let full = AdditiveSubgroup::span(&f16, &f16.elements().collect::<Vec<_>>()).unwrap();
        let e = Embedding::tower(&f16, 2).unwrap();
        for n in [3u64, 5, 15] {
            let g = std_gamma_semidirect(&full, n).unwrap();
            let locus = g.stabilized_locus_in(&e).unwrap();
            let zeta = f16.primitive_root_of_unity(n).unwrap();
            let denom = (&f16.one() - &zeta).inv().unwrap();
            assert!(locus.contains(&PP1::Infinity));
            assert!(locus.contains(&PP1::Affine(e.target().zero())));
            for x in full.elements().iter().filter(|x| !x.is_zero()) {
                let pt = e.map(&(x * &denom)).unwrap();
                assert!(locus.contains(&PP1::Affine(pt)));
            }
        }
    }
}
