//! Factorization of squarefree rational polynomials: Cantor-Zassenhaus modulo
//! a word-sized prime, linear Hensel lifting, and exhaustive recombination.

use crate::Rational;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::OnceLock;

type ModPoly = Vec<u64>;

fn primes() -> &'static [u64] {
    static P: OnceLock<Vec<u64>> = OnceLock::new();
    P.get_or_init(|| {
        let mut out = Vec::new();
        let mut n: u64 = (1 << 31) - 1;
        while out.len() < 12 {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn trim(mut a: ModPoly) -> ModPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn padd(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p).collect())
}

fn psub(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

fn pdivrem(a: &[u64], b: &[u64], p: u64) -> (ModPoly, ModPoly) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let li = invmod(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    while r.len() >= b.len() {
        let i = r.len() - 1;
        let c = mulmod(r[i], li, p);
        let sh = i - db;
        for (j, &bj) in b.iter().enumerate() {
            r[sh + j] = (r[sh + j] + p - mulmod(c, bj, p)) % p;
        }
        q[sh] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(a: &[u64], p: u64) -> ModPoly {
    let li = invmod(*a.last().unwrap(), p);
    a.iter().map(|&c| mulmod(c, li, p)).collect()
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = pdivrem(&a, &b, p);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic(&a, p)
    }
}

/// `(s, t)` with `s a + t b = 1` for coprime `a`, `b`.
fn pext_gcd(a: &[u64], b: &[u64], p: u64) -> (ModPoly, ModPoly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1): (ModPoly, ModPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (ModPoly, ModPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = pdivrem(&r0, &r1, p);
        let s2 = psub(&s0, &pmul(&q, &s1, p), p);
        let t2 = psub(&t0, &pmul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let li = invmod(r0[0], p);
    let sc = |v: &[u64]| v.iter().map(|&c| mulmod(c, li, p)).collect::<ModPoly>();
    (sc(&s0), sc(&t0))
}

fn pderiv(a: &[u64], p: u64) -> ModPoly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| mulmod(c, i as u64 % p, p)).collect())
}

fn ppow_mod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> ModPoly {
    let mut result: ModPoly = vec![1];
    let mut b = pdivrem(base, m, p).1;
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            result = pdivrem(&pmul(&result, &b, p), m, p).1;
        }
        if i + 1 < bits {
            b = pdivrem(&pmul(&b, &b, p), m, p).1;
        }
    }
    result
}

struct Lcg(u64);

impl Lcg {
    fn next(&mut self, p: u64) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 17) % p
    }
}

/// Distinct-degree then equal-degree factorization of a monic squarefree
/// polynomial modulo `p`.
fn factor_mod(f: &[u64], p: u64) -> Vec<ModPoly> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let x: ModPoly = vec![0, 1];
    let mut h = x.clone();
    let mut d = 1usize;
    let pb = BigUint::from(p);
    while rest.len() - 1 >= 2 * d {
        h = ppow_mod(&h, &pb, &rest, p);
        let g = pgcd(&rest, &psub(&h, &x, p), p);
        if g.len() > 1 {
            rest = pdivrem(&rest, &g, p).0;
            h = pdivrem(&h, &rest, p).1;
            let mut rng = Lcg(0x9e3779b97f4a7c15 ^ d as u64);
            equal_degree(&g, d, p, &mut rng, &mut out);
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out
}

fn equal_degree(g: &[u64], d: usize, p: u64, rng: &mut Lcg, out: &mut Vec<ModPoly>) {
    let n = g.len() - 1;
    if n == d {
        out.push(g.to_vec());
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a: ModPoly = trim((0..n).map(|_| rng.next(p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = psub(&ppow_mod(&a, &e, g, p), &[1], p);
        let h = pgcd(g, &b, p);
        if h.len() > 1 && h.len() < g.len() {
            let q = pdivrem(g, &h, p).0;
            equal_degree(&h, d, p, rng, out);
            equal_degree(&monic(&q, p), d, p, rng, out);
            return;
        }
    }
}

fn to_mod(f: &[BigInt], p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn from_mod(f: &[u64]) -> Vec<BigInt> {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
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

fn zmod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Lifts `f = g0 h0 (mod p)` with `f` monic modulo `p^k` to a factorization
/// modulo `p^k` with monic `g`, `h`.
fn lift_two(f: &[BigInt], g0: &[u64], h0: &[u64], p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (s, t) = pext_gcd(g0, h0, p);
    let pb = BigInt::from(p);
    let m = pb.pow(k);
    let mut g = from_mod(g0);
    let mut h = from_mod(h0);
    let mut pe = pb.clone();
    for _ in 1..k {
        let gh = zmul(&g, &h);
        let n = f.len().max(gh.len());
        let diff: Vec<BigInt> = (0..n)
            .map(|i| f.get(i).cloned().unwrap_or_default() - gh.get(i).cloned().unwrap_or_default())
            .collect();
        let c: Vec<BigInt> = diff.iter().map(|d| d / &pe).collect();
        let cm = to_mod(&c, p);
        let (q, r) = pdivrem(&pmul(&t, &cm, p), g0, p);
        let sigma = padd(&pmul(&s, &cm, p), &pmul(&q, h0, p), p);
        for (i, v) in r.iter().enumerate() {
            g[i] += &pe * BigInt::from(*v);
        }
        for (i, v) in sigma.iter().enumerate() {
            if i < h.len() {
                h[i] += &pe * BigInt::from(*v);
            } else {
                h.push(&pe * BigInt::from(*v));
            }
        }
        pe *= &pb;
        g = zmod(&g, &m);
        h = zmod(&h, &m);
    }
    (zmod(&g, &m), zmod(&h, &m))
}

fn symmetric(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    a.iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect()
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(a: &[BigInt]) -> Vec<BigInt> {
    let mut c = content(a);
    if a.last().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

/// Exact division over the integers; `None` if `b` does not divide `a`.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return None;
    }
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() >= b.len() {
        let i = r.len() - 1;
        let (c, rem) = r[i].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let sh = i - db;
        for (j, bj) in b.iter().enumerate() {
            r[sh + j] -= &c * bj;
        }
        q[sh] = c;
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    if r.is_empty() {
        Some(q)
    } else {
        None
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Irreducible factors of a primitive squarefree integer polynomial.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![primitive(f)];
    }
    if f[0].is_zero() {
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(zassenhaus(&f[1..]));
        return out;
    }
    let lc = f[n].clone();
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    for &p in primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = monic(&to_mod(f, p), p);
        if pgcd(&fp, &pderiv(&fp, p), p).len() != 1 {
            continue;
        }
        let facs = factor_mod(&fp, p);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried == 3 {
            break;
        }
    }
    let (p, local) = best.expect("no suitable prime");
    if local.len() == 1 {
        return vec![primitive(f)];
    }
    // Mignotte-style bound on coefficients of lc-scaled factors.
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (norm2.sqrt() + 1) * lc.abs();
    let pb = BigInt::from(p);
    let mut k = 1u32;
    while pb.pow(k) <= &bound * 2 {
        k += 1;
    }
    let m = pb.pow(k);
    let lc_inv = lc.modinv(&m).expect("lc invertible modulo p^k");
    let fmon = zmod(&f.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(), &m);

    let mut lifted = Vec::new();
    let mut cur = fmon;
    for i in 0..local.len() - 1 {
        let mut h0: ModPoly = vec![1];
        for other in &local[i + 1..] {
            h0 = pmul(&h0, other, p);
        }
        let (g, h) = lift_two(&cur, &local[i], &h0, p, k);
        lifted.push(g);
        cur = h;
    }
    lifted.push(cur);

    let mut factors = Vec::new();
    let mut fcur = f.to_vec();
    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut found = None;
        for combo in combinations(remaining.len(), s) {
            let lcur = fcur.last().unwrap().clone();
            let mut g = vec![lcur];
            for &i in &combo {
                g = zmod(&zmul(&g, &remaining[i]), &m);
            }
            let g = primitive(&symmetric(&g, &m));
            if let Some(q) = zdiv_exact(&fcur, &g) {
                found = Some((combo, g, q));
                break;
            }
        }
        match found {
            Some((combo, g, q)) => {
                factors.push(g);
                fcur = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v)
                    .collect();
            }
            None => s += 1,
        }
    }
    factors.push(primitive(&fcur));
    factors
}

/// Monic irreducible factors over Q of a squarefree rational polynomial of
/// degree at least one.
pub(crate) fn factor_q(p: &[Rational]) -> Vec<Vec<Rational>> {
    let den = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let z: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let z = primitive(&z);
    let mut out: Vec<Vec<Rational>> = zassenhaus(&z)
        .into_iter()
        .map(|f| {
            let l = f.last().unwrap().clone();
            f.into_iter().map(|c| Rational::new(c, l.clone())).collect()
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
