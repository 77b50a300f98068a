//! Dense polynomial arithmetic over the prime field F_p, used while a field is
//! being constructed (irreducibility checks, table generation). Coefficient
//! vectors are constant term first and kept trimmed.

pub(crate) fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p64 = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub(crate) fn rem_monic(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let sub = lead * c as u64 % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    rem_monic(&mul(a, b, p), m, p)
}

pub(crate) fn pow_mod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut b = rem_monic(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(&result, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    rem_monic(&result, m, p)
}

/// Irreducibility by trial division against every monic polynomial of degree
/// at most deg(m)/2.
pub(crate) fn is_irreducible(m: &[u32], p: u32) -> bool {
    let n = m.len() - 1;
    if n <= 1 {
        return n == 1;
    }
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for k in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut x = k;
            for _ in 0..d {
                cand.push((x % p as u64) as u32);
                x /= p as u64;
            }
            cand.push(1);
            if rem_monic(m, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Extended Euclid over F_p: returns `s` with `a * s == 1 (mod m)`, or `None`
/// when `a` shares a factor with `m`.
pub(crate) fn inverse_mod(a: &[u32], m: &[u32], p: u32) -> Option<Vec<u32>> {
    let inv_p = |x: u32| -> u32 { crate::gfq::field::pow_u64(x as u64, p as u64 - 2, p as u64) as u32 };
    let mut r0 = m.to_vec();
    let mut r1 = rem_monic(a, m, p);
    let mut s0: Vec<u32> = Vec::new();
    let mut s1: Vec<u32> = vec![1];
    while !r1.is_empty() {
        // q, r = divmod(r0, r1)
        let lead_inv = inv_p(*r1.last().unwrap()) as u64;
        let mut r = r0.clone();
        let mut quot = vec![0u32; r0.len().saturating_sub(r1.len()) + 1];
        while r.len() >= r1.len() && !r.is_empty() {
            let shift = r.len() - r1.len();
            let coef = (*r.last().unwrap() as u64 * lead_inv % p as u64) as u32;
            quot[shift] = coef;
            for (i, &c) in r1.iter().enumerate() {
                let sub = coef as u64 * c as u64 % p as u64;
                r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
            }
            trim(&mut r);
        }
        trim(&mut quot);
        let qs = mul(&quot, &s1, p);
        let mut s2 = s0.clone();
        s2.resize(s2.len().max(qs.len()), 0);
        for (i, &c) in qs.iter().enumerate() {
            s2[i] = (s2[i] + p - c) % p;
        }
        trim(&mut s2);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = inv_p(r0[0]) as u64;
    let mut s: Vec<u32> = s0.iter().map(|&x| (x as u64 * c % p as u64) as u32).collect();
    trim(&mut s);
    Some(rem_monic(&s, m, p))
}
