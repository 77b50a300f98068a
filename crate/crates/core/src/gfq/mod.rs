//! Exact arithmetic in F_{p^n}: fields, elements, embeddings into extension
//! towers, roots of unity and polynomial roots.

mod embed;
mod field;
mod poly;
mod prime_poly;

pub use embed::Embedding;
pub use field::{is_prime, Field, FqElem, Modulus, RootsOfUnity, MAX_FIELD_ORDER};
pub(crate) use field::gcd;
pub use poly::Poly;

/// Number of m-dimensional subspaces of an n-dimensional F_p-space.
pub fn gaussian_binomial(n: u32, m: u32, p: u64) -> u128 {
    if m > n {
        return 0;
    }
    let p = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..m {
        num *= p.pow(n - i) - 1;
        den *= p.pow(i + 1) - 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(gaussian_binomial(2, 1, 3), 4);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(4, 1, 2), 15);
        assert_eq!(gaussian_binomial(4, 0, 2), 1);
        assert_eq!(gaussian_binomial(4, 4, 2), 1);
        assert_eq!(gaussian_binomial(2, 3, 2), 0);
    }
}
