//! Polynomials over the prime field `F_p` (coefficients in `[0, p)`), and
//! their factorization by distinct-degree and Cantor-Zassenhaus splitting.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub(crate) type Fp = Vec<u64>;

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn trim(a: &mut Fp) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn deg(a: &Fp) -> isize {
    a.len() as isize - 1
}

pub(crate) fn sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    let mut out: Fp = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    let mut out: Fp = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulm(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    assert!(!b.is_empty());
    let mut r = a.clone();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let li = inv(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = mulm(r[k + db], li, p);
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + p - mulm(c, bj, p)) % p;
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub(crate) fn rem(a: &Fp, b: &Fp, p: u64) -> Fp {
    divrem(a, b, p).1
}

pub(crate) fn monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => {
            let li = inv(lc, p);
            a.iter().map(|&c| mulm(c, li, p)).collect()
        }
    }
}

pub(crate) fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = core::mem::replace(&mut b, r);
    }
    monic(&a, p)
}

/// `(g, s, t)` with `s a + t b = g` monic.
pub(crate) fn ext_gcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s);
        t0 = core::mem::replace(&mut t1, t);
    }
    let li = inv(*r0.last().expect("not both zero"), p);
    let sc = |v: &Fp| -> Fp { v.iter().map(|&c| mulm(c, li, p)).collect() };
    (sc(&r0), sc(&s0), sc(&t0))
}

pub(crate) fn derivative(a: &Fp, p: u64) -> Fp {
    let mut out: Fp = a.iter().enumerate().skip(1).map(|(i, &c)| mulm(c, i as u64 % p, p)).collect();
    trim(&mut out);
    out
}

fn powmod(base: &Fp, mut e: u64, m: &Fp, p: u64) -> Fp {
    let mut acc: Fp = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        e >>= 1;
        if e > 0 {
            b = rem(&mul(&b, &b, p), m, p);
        }
    }
    acc
}

pub(crate) fn is_squarefree(a: &Fp, p: u64) -> bool {
    deg(&gcd(a, &derivative(a, p), p)) == 0
}

/// Monic irreducible factors of a monic squarefree polynomial, `p` odd.
pub(crate) fn factor_squarefree(f: &Fp, p: u64) -> Vec<Fp> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        equal_degree(&g, d, p, &mut rng, &mut out);
    }
    out.sort();
    out
}

fn distinct_degree(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut res = Vec::new();
    let mut f = f.clone();
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    let mut d = 1usize;
    while deg(&f) >= 2 * d as isize {
        h = powmod(&h, p, &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        if deg(&g) > 0 {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            res.push((g, d));
        }
        d += 1;
    }
    if deg(&f) > 0 {
        let n = deg(&f) as usize;
        res.push((monic(&f, p), n));
    }
    res
}

fn equal_degree(g: &Fp, d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Fp>) {
    let n = deg(g) as usize;
    if n == d {
        out.push(g.clone());
        return;
    }
    loop {
        let mut a: Fp = (0..n).map(|_| rng.next_u64() % p).collect();
        trim(&mut a);
        if deg(&a) < 1 {
            continue;
        }
        // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
        let mut t = a.clone();
        let mut acc = a.clone();
        for _ in 1..d {
            t = powmod(&t, p, g, p);
            acc = rem(&mul(&acc, &t, p), g, p);
        }
        let b = powmod(&acc, (p - 1) / 2, g, p);
        let c = gcd(g, &sub(&b, &vec![1], p), p);
        let dc = deg(&c);
        if dc > 0 && (dc as usize) < n {
            let rest = divrem(g, &c, p).0;
            equal_degree(&c, d, p, rng, out);
            equal_degree(&monic(&rest, p), d, p, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x6_minus_1_mod_7_splits() {
        // 7 = 1 mod 6, so x^6 - 1 splits into linear factors over F_7
        let f: Fp = vec![6, 0, 0, 0, 0, 0, 1];
        let fs = factor_squarefree(&f, 7);
        assert_eq!(fs.len(), 6);
        let prod = fs.iter().fold(vec![1u64], |acc, g| mul(&acc, g, 7));
        assert_eq!(prod, f);
    }

    #[test]
    fn irreducible_quadratic_mod_5() {
        // x^2 - 2 is irreducible mod 5 (2 is not a square)
        let fs = factor_squarefree(&vec![3, 0, 1], 5);
        assert_eq!(fs, vec![vec![3, 0, 1]]);
    }

    #[test]
    fn ext_gcd_identity() {
        let p = 11;
        let a: Fp = vec![1, 2, 3];
        let b: Fp = vec![1, 1];
        let (g, s, t) = ext_gcd(&a, &b, p);
        assert_eq!(g, vec![1]);
        assert_eq!(add(&mul(&s, &a, p), &mul(&t, &b, p), p), vec![1]);
    }
}
