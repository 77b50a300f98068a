use std::fmt;

use crate::error::{Error, Result};
use crate::gfq::{Field, FqElem};
use crate::groups::{SubgroupPGL2, Tag};
use crate::moebius::Moebius;

/// An F_p-subspace of F_{p^n}, held as a reduced row-echelon basis of the
/// coefficient vectors. Equal subspaces have identical bases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdditiveSubgroup {
    field: Field,
    rows: Vec<Vec<u32>>,
}

fn reduce_rows(mut rows: Vec<Vec<u32>>, p: u32) -> Vec<Vec<u32>> {
    let n = rows.first().map_or(0, |r| r.len());
    let inv = |x: u32| -> u32 {
        (1..p).find(|&y| (x as u64 * y as u64) % p as u64 == 1).unwrap()
    };
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let s = inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = (*x as u64 * s as u64 % p as u64) as u32;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let c = rows[i][col] as u64;
                let pivot_row = rows[rank].clone();
                for (x, &y) in rows[i].iter_mut().zip(&pivot_row) {
                    let sub = c * y as u64 % p as u64;
                    *x = ((*x as u64 + p as u64 - sub) % p as u64) as u32;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

impl AdditiveSubgroup {
    /// The F_p-span of `gens`.
    pub fn span(field: &Field, gens: &[FqElem]) -> Result<AdditiveSubgroup> {
        for g in gens {
            field.check_same(g.field())?;
        }
        let rows = gens.iter().map(|g| g.coeffs()).collect();
        Ok(AdditiveSubgroup {
            field: field.clone(),
            rows: reduce_rows(rows, field.characteristic()),
        })
    }

    pub fn zero(field: &Field) -> AdditiveSubgroup {
        AdditiveSubgroup {
            field: field.clone(),
            rows: Vec::new(),
        }
    }

    /// The prime subfield F_p.
    pub fn prime_field(field: &Field) -> AdditiveSubgroup {
        AdditiveSubgroup::span(field, &[field.one()]).expect("same field")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rank(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn order(&self) -> u64 {
        (self.field.characteristic() as u64).pow(self.rank())
    }

    pub fn basis(&self) -> Vec<FqElem> {
        self.rows
            .iter()
            .map(|r| self.field.wrap(self.field.index_of(r)))
            .collect()
    }

    /// All elements, sorted canonically.
    pub fn elements(&self) -> Vec<FqElem> {
        let f = &self.field;
        let mut out = vec![0u32];
        for b in self.basis() {
            let mut next = Vec::with_capacity(out.len() * f.characteristic() as usize);
            for &x in &out {
                let mut cur = x;
                for _ in 0..f.characteristic() {
                    next.push(cur);
                    cur = f.radd(cur, b.index());
                }
            }
            out = next;
        }
        out.sort_unstable();
        out.into_iter().map(|v| f.wrap(v)).collect()
    }

    pub fn contains(&self, x: &FqElem) -> bool {
        if !self.field.same(x.field()) {
            return false;
        }
        let mut rows = self.rows.clone();
        rows.push(x.coeffs());
        reduce_rows(rows, self.field.characteristic()).len() == self.rows.len()
    }

    pub fn is_subset_of(&self, other: &AdditiveSubgroup) -> bool {
        self.basis().iter().all(|b| other.contains(b))
    }

    /// {alpha * g : g in self}; alpha must be nonzero.
    pub fn scale(&self, alpha: &FqElem) -> Result<AdditiveSubgroup> {
        self.field.check_same(alpha.field())?;
        if alpha.is_zero() {
            return Err(Error::ZeroScale);
        }
        let scaled: Vec<FqElem> = self.basis().iter().map(|b| alpha * b).collect();
        AdditiveSubgroup::span(&self.field, &scaled)
    }

    /// Every rank-m subspace of the field, sorted by basis.
    pub fn enumerate(field: &Field, m: u32) -> Result<Vec<AdditiveSubgroup>> {
        let n = field.degree();
        if m > n {
            return Err(Error::RankTooLarge { m, n });
        }
        let p = field.characteristic();
        let mut out = Vec::new();
        for pivots in combinations(n as usize, m as usize) {
            // free slots: row i, column j > pivot_i that is not itself a pivot
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(i, &c)| {
                    ((c + 1)..n as usize)
                        .filter(|j| !pivots.contains(j))
                        .map(move |j| (i, j))
                })
                .collect();
            let total = (p as u64).pow(free.len() as u32);
            for k in 0..total {
                let mut rows = vec![vec![0u32; n as usize]; m as usize];
                for (i, &c) in pivots.iter().enumerate() {
                    rows[i][c] = 1;
                }
                let mut x = k;
                for &(i, j) in &free {
                    rows[i][j] = (x % p as u64) as u32;
                    x /= p as u64;
                }
                out.push(AdditiveSubgroup {
                    field: field.clone(),
                    rows,
                });
            }
        }
        out.sort_by(|a, b| a.rows.cmp(&b.rows));
        Ok(out)
    }

    /// The group {x -> x + g : g in self}.
    pub fn to_unipotent(&self) -> SubgroupPGL2 {
        let elements = self.elements().iter().map(Moebius::translation).collect();
        let generators = self.basis().iter().map(Moebius::translation).collect();
        SubgroupPGL2::from_parts(
            &self.field,
            elements,
            generators,
            Tag::GammaSemidirect {
                gamma: self.clone(),
                n: 1,
            },
        )
    }

    /// Inverse of [`AdditiveSubgroup::to_unipotent`]: requires every element to be a translation.
    pub fn from_unipotent(h: &SubgroupPGL2) -> Result<AdditiveSubgroup> {
        let mut shifts = Vec::new();
        for m in h.elements() {
            if !m.is_translation() {
                return Err(Error::NotUnipotent(m.to_string()));
            }
            shifts.push(m.entries()[1].clone());
        }
        let g = AdditiveSubgroup::span(h.field(), &shifts)?;
        // the translations must exhaust the span, not just generate it
        if g.order() != h.order() as u64 {
            return Err(Error::NotUnipotent(format!("group of order {}", h.order())));
        }
        Ok(g)
    }

    /// Basis text `b1;b2;...` with elements in coefficient format.
    pub fn basis_string(&self) -> String {
        self.basis()
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn parse_basis(field: &Field, s: &str) -> Result<AdditiveSubgroup> {
        let gens = s
            .split(';')
            .filter(|t| !t.trim().is_empty())
            .map(|t| field.parse_elem(t))
            .collect::<Result<Vec<_>>>()?;
        AdditiveSubgroup::span(field, &gens)
    }
}

impl PartialOrd for AdditiveSubgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AdditiveSubgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rows.cmp(&other.rows)
    }
}

impl fmt::Debug for AdditiveSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{{}}}", self.basis_string())
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All rank-m additive subgroups of the field.
pub fn enum_additive_subgroups(field: &Field, m: u32) -> Result<Vec<AdditiveSubgroup>> {
    AdditiveSubgroup::enumerate(field, m)
}

pub fn gamma_to_unipotent(gamma: &AdditiveSubgroup) -> SubgroupPGL2 {
    gamma.to_unipotent()
}

pub fn unipotent_to_gamma(h: &SubgroupPGL2) -> Result<AdditiveSubgroup> {
    AdditiveSubgroup::from_unipotent(h)
}

pub fn scale_subgroup(gamma: &AdditiveSubgroup, alpha: &FqElem) -> Result<AdditiveSubgroup> {
    gamma.scale(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::gaussian_binomial;
    use std::collections::BTreeSet;

    /// Oracle: distinct spans of every m-tuple of elements.
    fn brute_force_count(field: &Field, m: u32) -> usize {
        let elems: Vec<FqElem> = field.elements().collect();
        let mut seen = BTreeSet::new();
        let mut stack = vec![(0usize, Vec::<FqElem>::new())];
        while let Some((start, gens)) = stack.pop() {
            if gens.len() == m as usize {
                let s = AdditiveSubgroup::span(field, &gens).unwrap();
                if s.rank() == m {
                    seen.insert(s.elements().iter().map(|x| x.index()).collect::<Vec<_>>());
                }
                continue;
            }
            for (i, x) in elems.iter().enumerate().skip(start) {
                let mut g = gens.clone();
                g.push(x.clone());
                stack.push((i + 1, g));
            }
        }
        seen.len()
    }

    #[test]
    fn enumeration_counts() {
        let f8 = Field::auto(2, 3).unwrap();
        assert_eq!(enum_additive_subgroups(&f8, 1).unwrap().len(), 7);
        let f9 = Field::auto(3, 2).unwrap();
        assert_eq!(enum_additive_subgroups(&f9, 1).unwrap().len(), 4);
        assert_eq!(enum_additive_subgroups(&f9, 2).unwrap().len(), 1);
        assert!(matches!(
            enum_additive_subgroups(&f9, 3),
            Err(Error::RankTooLarge { .. })
        ));
        for (p, n) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (3, 3)] {
            let f = Field::auto(p, n).unwrap();
            for m in 0..=n {
                let got = enum_additive_subgroups(&f, m).unwrap();
                assert_eq!(got.len() as u128, gaussian_binomial(n, m, p as u64));
                if f.order() <= 27 {
                    assert_eq!(got.len(), brute_force_count(&f, m));
                }
                let distinct: BTreeSet<_> = got.iter().cloned().collect();
                assert_eq!(distinct.len(), got.len());
            }
        }
    }

    #[test]
    fn scaling_examples() {
        let f4 = Field::auto(2, 2).unwrap();
        let t = f4.generator();
        let g = AdditiveSubgroup::prime_field(&f4);
        assert_eq!(g.scale(&f4.one()).unwrap(), g);
        assert_eq!(g.scale(&t).unwrap(), AdditiveSubgroup::span(&f4, std::slice::from_ref(&t)).unwrap());
        assert_eq!(g.scale(&f4.zero()).unwrap_err(), Error::ZeroScale);
        // gamma^-1 * Gamma contains F_p for any nonzero gamma in Gamma
        let f8 = Field::auto(2, 3).unwrap();
        for gamma in enum_additive_subgroups(&f8, 2).unwrap() {
            for x in gamma.elements().iter().filter(|x| !x.is_zero()) {
                let s = gamma.scale(&x.inv().unwrap()).unwrap();
                assert!(s.contains(&f8.one()));
                assert_eq!(s.rank(), gamma.rank());
            }
        }
    }

    #[test]
    fn unipotent_round_trip() {
        let f4 = Field::auto(2, 2).unwrap();
        let zero = AdditiveSubgroup::zero(&f4);
        assert_eq!(zero.to_unipotent().order(), 1);
        let g = AdditiveSubgroup::prime_field(&f4).to_unipotent();
        assert_eq!(g.order(), 2);
        let f8 = Field::auto(2, 3).unwrap();
        for gamma in enum_additive_subgroups(&f8, 1).unwrap() {
            let h = gamma_to_unipotent(&gamma);
            assert_eq!(h.order() as u64, gamma.order());
            assert_eq!(unipotent_to_gamma(&h).unwrap(), gamma);
        }
        let f5 = Field::auto(5, 1).unwrap();
        let cyc = crate::groups::std_cyclic(&f5, 4).unwrap();
        assert!(matches!(unipotent_to_gamma(&cyc), Err(Error::NotUnipotent(_))));
    }

    #[test]
    fn basis_text_round_trip() {
        let f9 = Field::auto(3, 2).unwrap();
        for g in enum_additive_subgroups(&f9, 1).unwrap() {
            assert_eq!(AdditiveSubgroup::parse_basis(&f9, &g.basis_string()).unwrap(), g);
        }
    }
}
