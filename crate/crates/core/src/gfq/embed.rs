use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::field::{Field, FqElem};
use crate::error::{Error, Result};

type EmbedKey = (u32, Vec<u32>, Vec<u32>);

fn image_cache() -> &'static Mutex<HashMap<EmbedKey, Arc<Vec<u32>>>> {
    static CACHE: OnceLock<Mutex<HashMap<EmbedKey, Arc<Vec<u32>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// A field homomorphism F_{p^m} -> F_{p^n}, m | n, sending the source
/// generator `t` to the canonically first root of the source modulus in the
/// target. Stored as a full image table.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    image: Arc<Vec<u32>>,
}

impl Embedding {
    pub fn new(source: &Field, target: &Field) -> Result<Embedding> {
        let (p, m, n) = (source.characteristic(), source.degree(), target.degree());
        if p != target.characteristic() {
            return Err(Error::CharacteristicMismatch {
                from: p,
                to: target.characteristic(),
            });
        }
        if n % m != 0 {
            return Err(Error::DegreeNotDividing { p, from: m, to: n });
        }
        if source.same(target) {
            return Ok(Embedding {
                source: source.clone(),
                target: target.clone(),
                image: Arc::new((0..source.order()).collect()),
            });
        }
        let key = (p, source.modulus().to_vec(), target.modulus().to_vec());
        if let Some(image) = image_cache().lock().unwrap().get(&key) {
            return Ok(Embedding {
                source: source.clone(),
                target: target.clone(),
                image: image.clone(),
            });
        }
        let modulus: Vec<u32> = source.modulus().iter().map(|&c| target.raw_prime(c)).collect();
        let eval = |x: u32| {
            modulus
                .iter()
                .rev()
                .fold(0u32, |acc, &c| target.radd(target.rmul(acc, x), c))
        };
        let root = (0..target.order())
            .find(|&x| eval(x) == 0)
            .expect("an irreducible polynomial of degree m splits in F_{p^n} when m | n");
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = target.raw_one();
        for _ in 0..m {
            powers.push(cur);
            cur = target.rmul(cur, root);
        }
        let image: Vec<u32> = (0..source.order())
            .map(|v| {
                source
                    .coeffs_of(v)
                    .iter()
                    .zip(&powers)
                    .fold(0u32, |acc, (&c, &pw)| target.radd(acc, target.rmul(target.raw_prime(c), pw)))
            })
            .collect();
        let image = Arc::new(image);
        image_cache().lock().unwrap().insert(key, image.clone());
        Ok(Embedding {
            source: source.clone(),
            target: target.clone(),
            image,
        })
    }

    /// The embedding of `base` into its degree-r extension with automatic modulus.
    pub fn tower(base: &Field, r: u32) -> Result<Embedding> {
        let target = base.extension(r)?;
        Embedding::new(base, &target)
    }

    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn is_identity(&self) -> bool {
        self.source.same(&self.target)
    }

    pub fn map(&self, a: &FqElem) -> Result<FqElem> {
        self.source.check_same(a.field())?;
        Ok(self.target.wrap(self.image[a.index() as usize]))
    }

    pub(crate) fn map_raw(&self, v: u32) -> u32 {
        self.image[v as usize]
    }

    /// Preimage of a target element, if it lies in the image.
    pub fn preimage(&self, b: &FqElem) -> Result<Option<FqElem>> {
        self.target.check_same(b.field())?;
        Ok(self.preimage_raw(b.index()).map(|v| self.source.wrap(v)))
    }

    pub(crate) fn preimage_raw(&self, v: u32) -> Option<u32> {
        // image tables are small; a linear scan keeps the struct plain
        self.image.iter().position(|&x| x == v).map(|i| i as u32)
    }
}

impl FqElem {
    /// Image of this element in `target` under the canonical embedding.
    pub fn embed(&self, target: &Field) -> Result<FqElem> {
        Embedding::new(self.field(), target)?.map(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::field::Modulus;

    #[test]
    fn prime_subfield() {
        let f2 = Field::auto(2, 1).unwrap();
        let f4 = Field::auto(2, 2).unwrap();
        assert!(f2.one().embed(&f4).unwrap().is_one());
    }

    #[test]
    fn f4_generator_into_f16_is_first_root() {
        let f4 = Field::new(2, 2, Modulus::Explicit(vec![1, 1, 1])).unwrap();
        let f16 = Field::auto(2, 4).unwrap();
        let img = f4.generator().embed(&f16).unwrap();
        // oracle: scan F_16 in canonical order for the first root of t^2+t+1
        let first = f16
            .elements()
            .find(|x| (x * x + x.clone() + f16.one()).is_zero())
            .unwrap();
        assert_eq!(img, first);
    }

    #[test]
    fn non_dividing_degree() {
        let f4 = Field::auto(2, 2).unwrap();
        let f8 = Field::auto(2, 3).unwrap();
        assert!(matches!(
            f4.one().embed(&f8),
            Err(Error::DegreeNotDividing { .. })
        ));
        let f9 = Field::auto(3, 2).unwrap();
        assert!(matches!(
            f4.one().embed(&f9),
            Err(Error::CharacteristicMismatch { .. })
        ));
    }

    #[test]
    fn embedding_is_a_ring_map() {
        for (src, dst) in [((2, 2), (2, 4)), ((3, 1), (3, 2)), ((2, 1), (2, 3)), ((2, 2), (2, 2))] {
            let s = Field::auto(src.0, src.1).unwrap();
            let t = Field::auto(dst.0, dst.1).unwrap();
            let e = Embedding::new(&s, &t).unwrap();
            for a in s.elements() {
                for b in s.elements() {
                    let ea = e.map(&a).unwrap();
                    let eb = e.map(&b).unwrap();
                    assert_eq!(e.map(&(&a * &b)).unwrap(), &ea * &eb);
                    assert_eq!(e.map(&(&a + &b)).unwrap(), &ea + &eb);
                }
            }
            assert!(e.map(&s.one()).unwrap().is_one());
        }
    }
}
