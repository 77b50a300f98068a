use serde::{Deserialize, Serialize};

use super::PP1;
use crate::error::{Error, Result};
use crate::gfq::{Embedding, Poly};

/// A ramification point of a polynomial self-map of the line.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RamPoint {
    pub point: PP1,
    pub index: u32,
    pub tame: bool,
}

/// Text view of a [`RamPoint`] for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamPointRecord {
    pub point: String,
    pub index: u32,
    pub tame: bool,
}

impl From<&RamPoint> for RamPointRecord {
    fn from(r: &RamPoint) -> Self {
        RamPointRecord {
            point: r.point.to_string(),
            index: r.index,
            tame: r.tame,
        }
    }
}

/// Ramification of x -> f(x) over F_{q^r}.
pub fn poly_map_ramification(f: &Poly, r: u32) -> Result<Vec<RamPoint>> {
    let e = Embedding::tower(f.field(), r)?;
    poly_map_ramification_in(f, &e)
}

/// Ramification over the target of `e`. The index at a finite point x0 is
/// the multiplicity of x0 as a root of f(x) - f(x0), which stays correct for
/// wild ramification; the index at infinity is deg f.
pub fn poly_map_ramification_in(f: &Poly, e: &Embedding) -> Result<Vec<RamPoint>> {
    let deg = f.degree().unwrap_or(0);
    if deg < 2 {
        return Err(Error::DegreeTooSmall(deg));
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        return Err(Error::Inseparable);
    }
    let g = f.embed(e)?;
    let dg = deriv.embed(e)?;
    let field = e.target();
    let p = field.characteristic();
    let mut out = Vec::new();
    for x in 0..field.order() {
        // e >= 2 exactly when the derivative vanishes
        if dg.eval_raw(x) != 0 {
            continue;
        }
        let fx = field.wrap(g.eval_raw(x));
        let shifted = g.sub_constant(&fx)?;
        let index = shifted.root_multiplicity_raw(x) as u32;
        if index >= 2 {
            out.push(RamPoint {
                point: PP1::Affine(field.wrap(x)),
                index,
                tame: !index.is_multiple_of(p),
            });
        }
    }
    out.push(RamPoint {
        point: PP1::Infinity,
        index: deg as u32,
        tame: !(deg as u32).is_multiple_of(p),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::Field;

    #[test]
    fn tame_family_member_t0_char3() {
        let f3 = Field::auto(3, 1).unwrap();
        let f = Poly::from_ints(&f3, &[0, 1, 0, 0, 0, 1]);
        let ram = poly_map_ramification(&f, 2).unwrap();
        assert_eq!(ram.len(), 5);
        let inf = ram.last().unwrap();
        assert_eq!((inf.point.clone(), inf.index, inf.tame), (PP1::Infinity, 5, true));
        for r in &ram[..4] {
            let PP1::Affine(x) = &r.point else { panic!() };
            assert!(x.pow(4).is_one());
            assert_eq!(r.index, 2);
            assert!(r.tame);
        }
    }

    #[test]
    fn squaring_map() {
        let f5 = Field::auto(5, 1).unwrap();
        let ram = poly_map_ramification(&Poly::from_ints(&f5, &[0, 0, 1]), 1).unwrap();
        assert_eq!(
            ram,
            vec![
                RamPoint { point: PP1::Affine(f5.zero()), index: 2, tame: true },
                RamPoint { point: PP1::Infinity, index: 2, tame: true },
            ]
        );
    }

    #[test]
    fn wild_index_uses_multiplicity() {
        // x^p + x^(p+1) over F_3: at 0 the fibre multiplicity is 3 (wild)
        // even though 1 + ord_0(f') = 1 + 3 = 4
        let f3 = Field::auto(3, 1).unwrap();
        let ram = poly_map_ramification(&Poly::from_ints(&f3, &[0, 0, 0, 1, 1]), 1).unwrap();
        let zero = ram.iter().find(|r| r.point == PP1::Affine(f3.zero())).unwrap();
        assert_eq!(zero.index, 3);
        assert!(!zero.tame);
    }

    #[test]
    fn errors() {
        let f3 = Field::auto(3, 1).unwrap();
        assert_eq!(
            poly_map_ramification(&Poly::from_ints(&f3, &[0, 0, 0, 1]), 1).unwrap_err(),
            Error::Inseparable
        );
        assert_eq!(
            poly_map_ramification(&Poly::from_ints(&f3, &[1, 1]), 1).unwrap_err(),
            Error::DegreeTooSmall(1)
        );
    }
}
