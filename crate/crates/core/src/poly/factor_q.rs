//! Factorization over Q: squarefree decomposition, factorization modulo a
//! small prime, Hensel lifting and recombination of lifted factors.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::{self, Fp};
use super::Poly;
use crate::field::{qpoly, NumberField, Rational};

/// Factorization of a nonzero rational polynomial (constant term first) into
/// monic irreducible factors with multiplicities, sorted by degree and then
/// coefficients. Constants have no factors.
pub fn factor_rational(f: &[Rational]) -> Vec<(Vec<Rational>, usize)> {
    let q = NumberField::rationals();
    let p = Poly::from_rationals(&q, f);
    assert!(!p.is_zero(), "factorization of zero");
    let mut out = Vec::new();
    for (s, m) in p.squarefree() {
        let coeffs = s.rational_coeffs().expect("rational input");
        for g in factor_squarefree_integer(primitive_integer(&coeffs)) {
            out.push((monic_rational(&g), m));
        }
    }
    out.sort_by(|a, b| {
        a.0.len().cmp(&b.0.len()).then_with(|| a.0.iter().rev().cmp(b.0.iter().rev()))
    });
    out
}

/// Primitive integer multiple with positive leading coefficient.
fn primitive_integer(f: &[Rational]) -> Vec<BigInt> {
    let den = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut v: Vec<BigInt> = f.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    if v.last().is_some_and(Signed::is_negative) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

fn monic_rational(f: &[BigInt]) -> Vec<Rational> {
    let lc = f.last().expect("nonzero").clone();
    f.iter().map(|c| Rational::new(c.clone(), lc.clone())).collect()
}

fn to_rationals(f: &[BigInt]) -> Vec<Rational> {
    f.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

/// Exact quotient `f / g` in Z[x] when `g` divides `f`.
fn int_div(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let (q, r) = qpoly::divrem(&to_rationals(f), &to_rationals(g));
    if !r.is_empty() || q.iter().any(|c| !c.denom().is_one()) {
        return None;
    }
    Some(q.into_iter().map(|c| c.to_integer()).collect())
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce(f: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    let mut v: Fp = f.iter().map(|c| c.mod_floor(&pb).to_u64().expect("small residue")).collect();
    modp::trim(&mut v);
    v
}

fn factor_squarefree_integer(f: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    if f[0].is_zero() {
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree_integer(f[1..].to_vec()));
        return out;
    }
    let lc = f[n].clone();

    // pick the good prime (among a few) with the fewest modular factors
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    let mut p = 3u64;
    while tried < 5 {
        if is_prime(p) && !(&lc % BigInt::from(p)).is_zero() {
            let fp = reduce(&f, p);
            if modp::is_squarefree(&fp, p) {
                tried += 1;
                let fs = modp::factor_squarefree(&modp::monic(&fp, p), p);
                if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
                    best = Some((p, fs));
                }
                if best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
                    break;
                }
            }
        }
        p += 2;
    }
    let (p, modular) = best.expect("a good prime exists");
    if modular.len() == 1 {
        return vec![f];
    }

    // coefficient bound for factors of lc * f
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (norm2.sqrt() + BigInt::one()) * lc.abs();
    let target = bound * 2 + 1;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= target {
        pk *= &pb;
        k += 1;
    }

    let lc_p = reduce(core::slice::from_ref(&lc), p);
    let lifted: Vec<Vec<BigInt>> = (0..modular.len())
        .map(|i| {
            let cofactor = modular
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(lc_p.clone(), |acc, (_, g)| modp::mul(&acc, g, p));
            hensel_lift(&f, &modular[i], &cofactor, p, k)
        })
        .collect();

    recombine(f, lifted, &pk)
}

/// Lifts `f = g h (mod p)` with `g` monic to `f = G H (mod p^k)`, returning `G`.
fn hensel_lift(f: &[BigInt], g: &Fp, h: &Fp, p: u64, k: u32) -> Vec<BigInt> {
    let (one, s, t) = modp::ext_gcd(g, h, p);
    debug_assert_eq!(one, vec![1]);
    let pb = BigInt::from(p);
    let to_int = |v: &Fp| -> Vec<BigInt> { v.iter().map(|&c| BigInt::from(c)).collect() };
    let mut big_g = to_int(g);
    let mut big_h = to_int(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let prod = int_mul(&big_g, &big_h);
        let diff: Vec<BigInt> = (0..f.len().max(prod.len()))
            .map(|i| f.get(i).cloned().unwrap_or_default() - prod.get(i).cloned().unwrap_or_default())
            .collect();
        let e: Vec<BigInt> = diff.iter().map(|c| {
            debug_assert!((c % &pj).is_zero());
            c / &pj
        }).collect();
        let ep = reduce(&e, p);
        let (quo, dg) = modp::divrem(&modp::mul(&t, &ep, p), g, p);
        let dh = modp::add(&modp::mul(&s, &ep, p), &modp::mul(&quo, h, p), p);
        let next = &pj * &pb;
        add_scaled(&mut big_g, &dg, &pj, &next);
        add_scaled(&mut big_h, &dh, &pj, &next);
        pj = next;
    }
    big_g
}

fn add_scaled(target: &mut Vec<BigInt>, delta: &Fp, scale: &BigInt, modulus: &BigInt) {
    if target.len() < delta.len() {
        target.resize(delta.len(), BigInt::zero());
    }
    for (i, &d) in delta.iter().enumerate() {
        target[i] += scale * BigInt::from(d);
    }
    for c in target.iter_mut() {
        *c = c.mod_floor(modulus);
    }
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn symmetric(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    let mut out: Vec<BigInt> = v
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let r: Vec<Rational> = to_rationals(&v);
    primitive_integer(&r)
}

/// Zassenhaus recombination: tries products of lifted factors in increasing
/// subset size.
fn recombine(mut f: Vec<BigInt>, lifted: Vec<Vec<BigInt>>, pk: &BigInt) -> Vec<Vec<BigInt>> {
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let lc = f.last().expect("nonzero").clone();
            let subset: Vec<usize> = idx.iter().map(|&i| remaining[i]).collect();
            let mut cand = vec![lc];
            for &i in &subset {
                cand = int_mul(&cand, &lifted[i]);
                cand = cand.iter().map(|c| c.mod_floor(pk)).collect();
            }
            let g = primitive(symmetric(&cand, pk));
            if g.len() > 1 {
                if let Some(q) = int_div(&f, &g) {
                    out.push(g);
                    f = q;
                    remaining.retain(|i| !subset.contains(i));
                    continue 'outer;
                }
            }
            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    size += 1;
                    continue 'outer;
                }
                i -= 1;
                if idx[i] < remaining.len() - size + i {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    out.push(primitive(f));
    out
}
