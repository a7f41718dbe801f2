//! Certified complex root isolation for rational polynomials and
//! center/radius disk arithmetic with rational endpoints.
//!
//! Inclusion uses the classical bound: for a degree `n` polynomial `p`, some
//! root lies within `n |p(z)/p'(z)|` of `z`. Pairwise disjoint disks, one per
//! root, therefore isolate every root exactly once.

use crate::tower::Region;
use crate::Rational;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct CQ {
    pub(crate) re: Rational,
    pub(crate) im: Rational,
}

impl CQ {
    pub(crate) fn new(re: Rational, im: Rational) -> CQ {
        CQ { re, im }
    }

    pub(crate) fn real(re: Rational) -> CQ {
        CQ { re, im: Rational::zero() }
    }

    fn from_f64(re: f64, im: f64) -> CQ {
        let cv = |v: f64| Rational::from_float(v).unwrap_or_else(Rational::zero);
        CQ::new(cv(re), cv(im))
    }

    pub(crate) fn add(&self, o: &CQ) -> CQ {
        CQ::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub(crate) fn sub(&self, o: &CQ) -> CQ {
        CQ::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub(crate) fn mul(&self, o: &CQ) -> CQ {
        CQ::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub(crate) fn norm2(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    fn div(&self, o: &CQ) -> Option<CQ> {
        let n = o.norm2();
        if n.is_zero() {
            return None;
        }
        let num = CQ::new(
            &self.re * &o.re + &self.im * &o.im,
            &self.im * &o.re - &self.re * &o.im,
        );
        Some(CQ::new(num.re / &n, num.im / n))
    }

    fn round(&self, prec: u32) -> CQ {
        CQ::new(round_down(&self.re, prec), round_down(&self.im, prec))
    }
}

fn round_down(q: &Rational, prec: u32) -> Rational {
    let s = BigInt::one() << prec;
    Rational::new((q * &s).floor().to_integer(), s)
}

fn round_up(q: &Rational, prec: u32) -> Rational {
    let s = BigInt::one() << prec;
    Rational::new((q * &s).ceil().to_integer(), s)
}

/// Some `s >= sqrt(q)`, tight to about 64 bits.
pub(crate) fn sqrt_upper(q: &Rational) -> Rational {
    if !q.is_positive() {
        return Rational::zero();
    }
    let scale = BigInt::one() << 64u32;
    let n = q.numer() * q.denom() * &scale * &scale;
    let s = n.sqrt() + BigInt::one();
    Rational::new(s, q.denom() * scale)
}

pub(crate) fn abs_upper(z: &CQ) -> Rational {
    if z.im.is_zero() {
        return z.re.abs();
    }
    sqrt_upper(&z.norm2())
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Disk {
    pub(crate) c: CQ,
    pub(crate) r: Rational,
}

impl Disk {
    pub(crate) fn point(c: CQ) -> Disk {
        Disk { c, r: Rational::zero() }
    }

    pub(crate) fn add(&self, o: &Disk) -> Disk {
        Disk { c: self.c.add(&o.c), r: &self.r + &o.r }
    }

    pub(crate) fn mul(&self, o: &Disk) -> Disk {
        let r = abs_upper(&self.c) * &o.r + abs_upper(&o.c) * &self.r + &self.r * &o.r;
        Disk { c: self.c.mul(&o.c), r }
    }

    pub(crate) fn contains_zero(&self) -> bool {
        self.c.norm2() <= &self.r * &self.r
    }

    pub(crate) fn excludes_real_axis(&self) -> bool {
        self.c.im.abs() > self.r
    }

    pub(crate) fn inside(&self, o: &Disk) -> bool {
        abs_upper(&self.c.sub(&o.c)) + &self.r <= o.r
    }

    fn disjoint(&self, o: &Disk) -> bool {
        let s = &self.r + &o.r;
        self.c.sub(&o.c).norm2() > &s * &s
    }

    pub(crate) fn bounding_box(&self) -> Region {
        Region {
            re_lo: &self.c.re - &self.r,
            re_hi: &self.c.re + &self.r,
            im_lo: &self.c.im - &self.r,
            im_hi: &self.c.im + &self.r,
        }
    }

    fn boxes_disjoint(&self, o: &Disk) -> bool {
        let (a, b) = (self.bounding_box(), o.bounding_box());
        a.re_hi < b.re_lo || b.re_hi < a.re_lo || a.im_hi < b.im_lo || b.im_hi < a.im_lo
    }
}

pub(crate) fn cmp_disks(a: &Disk, b: &Disk) -> std::cmp::Ordering {
    a.c.re.cmp(&b.c.re).then(a.c.im.cmp(&b.c.im))
}

pub(crate) fn peval(p: &[Rational], z: &CQ) -> CQ {
    let mut acc = CQ::real(Rational::zero());
    for c in p.iter().rev() {
        acc = acc.mul(z);
        acc.re += c;
    }
    acc
}

pub(crate) fn deriv(p: &[Rational]) -> Vec<Rational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
        .collect()
}

fn incl_radius(p: &[Rational], dp: &[Rational], z: &CQ, prec: u32) -> Option<Rational> {
    let v = peval(p, z);
    if v.re.is_zero() && v.im.is_zero() {
        return Some(Rational::zero());
    }
    let d2 = peval(dp, z).norm2();
    if d2.is_zero() {
        return None;
    }
    let n = Rational::from_integer(BigInt::from(p.len() - 1));
    let r2 = &n * &n * v.norm2() / d2;
    Some(round_up(&sqrt_upper(&r2), prec + 64))
}

fn newton(p: &[Rational], dp: &[Rational], z: &CQ, prec: u32) -> CQ {
    match peval(p, z).div(&peval(dp, z)) {
        Some(step) => z.sub(&step).round(prec),
        None => z.clone(),
    }
}

/// Durand-Kerner in double precision; `None` when coefficients overflow or
/// the iteration does not settle.
fn dk_f64(p: &[Rational]) -> Option<Vec<Complex64>> {
    let n = p.len() - 1;
    let lc = &p[n];
    let a: Vec<f64> = p.iter().map(|c| (c / lc).to_f64()).collect::<Option<_>>()?;
    if a.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let bound = 1.0 + a[..n].iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(bound * 0.8, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    let eval = |x: Complex64| a.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c);
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(1e-300, 0.0);
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm() / (1.0 + z[i].norm()));
        }
        if !delta.is_finite() {
            return None;
        }
        if delta < 1e-15 {
            return Some(z);
        }
    }
    Some(z)
}

/// Durand-Kerner in rounded rational arithmetic, the fallback for ill-scaled
/// inputs.
fn dk_rational(p: &[Rational], prec: u32, seed: u32) -> Vec<CQ> {
    let n = p.len() - 1;
    let lc = p[n].clone();
    let a: Vec<Rational> = p.iter().map(|c| c / &lc).collect();
    let bound: Rational = Rational::one()
        + a[..n].iter().fold(Rational::zero(), |m, v| if v.abs() > m { v.abs() } else { m });
    let bf = bound.to_f64().unwrap_or(1e6).min(1e300);
    let mut z: Vec<CQ> = (0..n)
        .map(|k| {
            let c = Complex64::from_polar(bf * 0.8, 0.4 + 0.1 * seed as f64 + std::f64::consts::TAU * k as f64 / n as f64);
            CQ::from_f64(c.re, c.im).round(prec)
        })
        .collect();
    let tol = Rational::new(BigInt::one(), BigInt::one() << (prec / 2));
    for _ in 0..(400 + 20 * n) {
        let mut done = true;
        for i in 0..n {
            let mut den = CQ::real(Rational::one());
            for j in 0..n {
                if i != j {
                    den = den.mul(&z[i].sub(&z[j])).round(prec);
                }
            }
            if let Some(step) = peval(&a, &z[i]).div(&den) {
                if abs_upper(&step) > tol {
                    done = false;
                }
                z[i] = z[i].sub(&step).round(prec);
            }
        }
        if done {
            break;
        }
    }
    z
}

fn certify(p: &[Rational], dp: &[Rational], approx: &[CQ], prec: u32) -> Option<Vec<Disk>> {
    let mut disks = Vec::with_capacity(approx.len());
    for z in approx {
        let r = incl_radius(p, dp, z, prec)?;
        let mut d = Disk { c: z.clone(), r };
        if !d.c.im.is_zero() && d.c.im.abs() <= d.r {
            let zr = CQ::real(z.re.clone());
            let rr = incl_radius(p, dp, &zr, prec)?;
            d = Disk { c: zr, r: rr };
        }
        if !d.c.im.is_zero() && !d.excludes_real_axis() {
            return None;
        }
        disks.push(d);
    }
    for i in 0..disks.len() {
        for j in (i + 1)..disks.len() {
            if !disks[i].disjoint(&disks[j]) || !disks[i].boxes_disjoint(&disks[j]) {
                return None;
            }
        }
    }
    disks.sort_by(cmp_disks);
    Some(disks)
}

/// Isolating disks for every complex root of a squarefree rational
/// polynomial of degree at least one. Each disk is either centered on the
/// real axis (a real root) or disjoint from it, and the bounding boxes are
/// pairwise disjoint.
pub(crate) fn isolate_q(p: &[Rational]) -> Vec<Disk> {
    let n = p.len() - 1;
    assert!(n >= 1, "isolate_q needs a nonconstant polynomial");
    if n == 1 {
        return vec![Disk::point(CQ::real(-&p[0] / &p[1]))];
    }
    let dp = deriv(p);
    let mut approx: Vec<CQ> = match dk_f64(p) {
        Some(z) => z.into_iter().map(|c| CQ::from_f64(c.re, c.im)).collect(),
        None => dk_rational(p, 128, 0),
    };
    let mut prec = 64u32;
    let mut restarts = 0u32;
    loop {
        for z in approx.iter_mut() {
            for _ in 0..4 {
                *z = newton(p, &dp, z, prec);
            }
        }
        if let Some(d) = certify(p, &dp, &approx, prec) {
            return d;
        }
        prec *= 2;
        if prec > 2048 {
            restarts += 1;
            assert!(restarts < 8, "root isolation failed to converge");
            prec = 128 * (1 << restarts.min(4));
            approx = dk_rational(p, prec, restarts);
        }
    }
}

/// A disk inside `disk` around the same root, tightened toward `2^-prec/2`.
pub(crate) fn refine_root(p: &[Rational], disk: &Disk, prec: u32) -> Disk {
    if disk.r.is_zero() {
        return disk.clone();
    }
    let dp = deriv(p);
    let target = Rational::new(BigInt::one(), BigInt::one() << (prec / 2));
    let mut best = disk.clone();
    let mut z = disk.c.clone();
    for _ in 0..64 {
        z = newton(p, &dp, &z, prec);
        if disk.c.im.is_zero() {
            z.im = Rational::zero();
        }
        if let Some(r) = incl_radius(p, &dp, &z, prec) {
            let d = Disk { c: z.clone(), r };
            if d.inside(disk) && d.r < best.r {
                best = d;
                if best.r <= target {
                    break;
                }
            }
        }
    }
    best
}
