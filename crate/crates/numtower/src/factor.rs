//! Factorization over towers (norm/resultant reduction to Q), certified root
//! location, and adjoining roots.

use crate::error::TowerError;
use crate::isolate::{cmp_disks, isolate_q, refine_root, Disk};
use crate::qfactor::factor_q;
use crate::tower::{eval_disk, generator_disks, Level, Region, Tower, TowerElem};
use crate::upoly::{cmp_upoly, UPoly};
use crate::Rational;
use num_traits::Zero;

/// Rebases every coefficient onto `t`.
fn over(t: &Tower, p: &UPoly) -> Result<UPoly, TowerError> {
    Ok(UPoly::new(p.coeffs().iter().map(|c| c.in_tower(t)).collect::<Result<_, _>>()?))
}

/// The tower a polynomial's coefficients jointly live in.
fn common_tower(p: &UPoly) -> Result<Tower, TowerError> {
    let t = p.tower();
    for c in p.coeffs() {
        c.in_tower(&t)?;
    }
    Ok(t)
}

fn max_level(p: &UPoly) -> usize {
    p.coeffs().iter().map(TowerElem::level).max().unwrap_or(0)
}

/// Norm of `f` (coefficients in K_h) down to K_{h-1}, computed by
/// evaluation at integer points and interpolation.
fn norm_down(t: &Tower, h: usize, f: &UPoly) -> UPoly {
    let m = UPoly::new(t.minpoly(h));
    let n = f.degree().expect("nonzero polynomial");
    let total = n * t.level_degree(h);
    let mut xs = Vec::with_capacity(total + 1);
    let mut ys = Vec::with_capacity(total + 1);
    for i in 0..=total {
        let x0 = TowerElem::from_int(i as i64);
        let alpha = f.eval(&x0);
        let a = UPoly::new(alpha.coeffs_at_level(h));
        ys.push(m.resultant(&a));
        xs.push(x0);
    }
    UPoly::interpolate(&xs, &ys)
}

/// A rational polynomial divisible by `f` (the full norm down to Q).
pub(crate) fn rational_norm(t: &Tower, f: &UPoly) -> Vec<Rational> {
    let mut g = f.clone();
    for k in (1..=max_level(f)).rev() {
        g = norm_down(t, k, &g);
    }
    g.to_rationals().expect("norm lands in Q")
}

/// Monic irreducible factors over K_h of a squarefree `f` with coefficients
/// in K_h.
fn factor_sqfree_at(t: &Tower, h: usize, f: &UPoly) -> Vec<UPoly> {
    let deg = f.degree().unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![f.monic()];
    }
    if h == 0 {
        let q = f.monic().to_rationals().expect("rational coefficients at level 0");
        return factor_q(&q).iter().map(|g| UPoly::from_rationals(g)).collect();
    }
    let theta = t.generator(h);
    let mut shift = 0i64;
    let mut tries = 0;
    let (s, n) = loop {
        let s = TowerElem::from_int(shift);
        let g = f.shift(&(-&(&s * &theta)));
        let n = norm_down(t, h, &g);
        if n.gcd(&n.derivative()).degree() == Some(0) {
            break (s, n);
        }
        tries += 1;
        assert!(tries < 200, "no squarefree norm found");
        shift = if shift <= 0 { 1 - shift } else { -shift };
    };
    let facs = factor_sqfree_at(t, h - 1, &n);
    if facs.len() <= 1 {
        return vec![f.monic()];
    }
    let back = &s * &theta;
    let mut out: Vec<UPoly> = facs
        .iter()
        .map(|phi| f.gcd(&phi.shift(&back)))
        .filter(|g| g.degree().unwrap_or(0) > 0)
        .collect();
    out.sort_by(cmp_upoly);
    out
}

/// Factorization over the full tower `t`: monic irreducible factors with
/// multiplicities, product equal to `p` up to its leading coefficient.
pub fn factor_over(t: &Tower, p: &UPoly) -> Result<Vec<(UPoly, usize)>, TowerError> {
    if p.is_zero() {
        return Err(TowerError::ZeroInput);
    }
    let p = over(t, p)?;
    let mut out = Vec::new();
    for (a, i) in p.squarefree_decomposition() {
        for f in factor_sqfree_at(t, t.height(), &a) {
            out.push((f, i));
        }
    }
    out.sort_by(|a, b| cmp_upoly(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// Factorization over the tower the coefficients live in.
pub fn factor_univariate(p: &UPoly) -> Result<Vec<(UPoly, usize)>, TowerError> {
    let t = common_tower(p)?;
    factor_over(&t, p)
}

/// A root of a tower polynomial with the data certifying where it is.
#[derive(Clone, Debug)]
pub(crate) struct RootCert {
    pub(crate) disk: Disk,
    pub(crate) qpoly: Vec<Rational>,
}

fn eval_upoly_disk(f: &UPoly, z: &Disk, gens: &[Disk]) -> Disk {
    let mut acc = Disk::point(crate::isolate::CQ::real(Rational::zero()));
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(z).add(&eval_disk(&c.val, gens));
    }
    acc
}

fn boxes_pairwise_disjoint(ds: &[&Disk]) -> bool {
    for i in 0..ds.len() {
        for j in (i + 1)..ds.len() {
            let (a, b) = (ds[i].bounding_box(), ds[j].bounding_box());
            let sep = a.re_hi < b.re_lo || b.re_hi < a.re_lo || a.im_hi < b.im_lo || b.im_hi < a.im_lo;
            if !sep {
                return false;
            }
        }
    }
    true
}

/// Certified enclosures of the `deg f` complex roots of a squarefree `f`
/// under the embedding fixed by the tower's regions, refined at least to
/// `min_prec` bits.
pub(crate) fn isolate_roots(t: &Tower, f: &UPoly, min_prec: u32) -> Vec<RootCert> {
    let n = f.degree().expect("nonzero polynomial");
    let norm = UPoly::from_rationals(&rational_norm(t, f)).squarefree_part();
    let qfacs = factor_q(&norm.to_rationals().unwrap());
    let mut cands: Vec<(usize, Disk)> = Vec::new();
    for (i, g) in qfacs.iter().enumerate() {
        for d in isolate_q(g) {
            cands.push((i, d));
        }
    }
    let lvl = max_level(f);
    let mut prec = 64u32;
    loop {
        if prec >= min_prec {
            let refs: Vec<&Disk> = cands.iter().map(|(_, d)| d).collect();
            if boxes_pairwise_disjoint(&refs) {
                let gens = generator_disks(t, lvl, prec);
                let hits: Vec<&(usize, Disk)> =
                    cands.iter().filter(|(_, d)| eval_upoly_disk(f, d, &gens).contains_zero()).collect();
                if hits.len() == n {
                    let mut out: Vec<RootCert> = hits
                        .into_iter()
                        .map(|(i, d)| RootCert { disk: d.clone(), qpoly: qfacs[*i].clone() })
                        .collect();
                    out.sort_by(|a, b| cmp_disks(&a.disk, &b.disk));
                    return out;
                }
            }
        }
        prec *= 2;
        assert!(prec <= 1 << 16, "root isolation over the tower did not converge");
        for (i, d) in cands.iter_mut() {
            *d = refine_root(&qfacs[*i], d, prec);
        }
    }
}

/// Isolating rectangles for the roots of a squarefree polynomial, in
/// canonical (real part, imaginary part) order.
pub fn isolating_regions(p: &UPoly) -> Result<Vec<Region>, TowerError> {
    if p.is_zero() {
        return Err(TowerError::ZeroInput);
    }
    let t = common_tower(p)?;
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let f = over(&t, &p.squarefree_part())?;
    Ok(isolate_roots(&t, &f, 64).iter().map(|r| r.disk.bounding_box()).collect())
}

fn region_contains(reg: &Region, d: &Disk) -> bool {
    let b = d.bounding_box();
    if reg.im_lo == reg.im_hi {
        d.c.im.is_zero() && reg.im_lo.is_zero() && reg.re_lo <= b.re_lo && b.re_hi <= reg.re_hi
    } else {
        reg.re_lo <= b.re_lo && b.re_hi <= reg.re_hi && reg.im_lo <= b.im_lo && b.im_hi <= reg.im_hi
    }
}

fn region_misses(reg: &Region, d: &Disk) -> bool {
    let b = d.bounding_box();
    b.re_hi < reg.re_lo || reg.re_hi < b.re_lo || b.im_hi < reg.im_lo || reg.im_hi < b.im_lo
}

/// Adjoins the root of `p` inside `region`. A degree-one `p` returns its
/// root without growing the tower.
pub fn adjoin_root(t: &Tower, p: &UPoly, region: &Region) -> Result<(Tower, TowerElem), TowerError> {
    let p = over(t, p)?;
    let deg = p.degree().ok_or(TowerError::ZeroInput)?;
    if deg == 0 {
        return Err(TowerError::ZeroInput);
    }
    if deg == 1 {
        let root = -&(&p.coeff(0) / &p.coeff(1));
        return Ok((t.clone(), root));
    }
    let needed = t.degree() * deg;
    if needed > t.cap() {
        return Err(TowerError::DegreeCapExceeded { cap: t.cap(), needed });
    }
    let facs = factor_over(t, &p)?;
    if facs.len() != 1 || facs[0].1 != 1 {
        return Err(TowerError::ReduciblePolynomial);
    }
    let p = p.monic();
    let mut prec = 64u32;
    loop {
        let roots = isolate_roots(t, &p, prec);
        let inside: Vec<&RootCert> = roots.iter().filter(|r| region_contains(region, &r.disk)).collect();
        let missed = roots.iter().filter(|r| region_misses(region, &r.disk)).count();
        if inside.len() == 1 && inside.len() + missed == roots.len() {
            let cert = inside[0].clone();
            return Ok(push_level(t, &p, region.clone(), cert));
        }
        if inside.len() > 1 {
            return Err(TowerError::AmbiguousRegion);
        }
        prec *= 2;
        if prec > 1 << 12 {
            return Err(TowerError::AmbiguousRegion);
        }
    }
}

fn push_level(t: &Tower, p: &UPoly, region: Region, cert: RootCert) -> (Tower, TowerElem) {
    push_named_level(t, p, region, cert, None)
}

pub(crate) fn push_named_level(
    t: &Tower,
    p: &UPoly,
    region: Region,
    cert: RootCert,
    name: Option<&str>,
) -> (Tower, TowerElem) {
    let k = t.height() + 1;
    let real = cert.disk.c.im.is_zero();
    let level = Level {
        minpoly: p.coeffs().iter().map(|c| c.val.clone()).collect(),
        region,
        qpoly: cert.qpoly,
        disk: cert.disk,
        real,
        name: name.map_or_else(|| format!("t{k}"), str::to_string),
    };
    let nt = t.extended(level);
    let g = nt.generator(k);
    (nt, g)
}

/// Every root of `q` (nonzero, nonconstant allowed to be any degree),
/// extending the tower as needed. Roots are listed without multiplicity in
/// a deterministic order.
pub fn all_roots(t: &Tower, q: &UPoly) -> Result<(Tower, Vec<TowerElem>), TowerError> {
    if q.is_zero() {
        return Err(TowerError::ZeroInput);
    }
    let mut t = t.clone();
    let mut roots = Vec::new();
    let mut work: std::collections::VecDeque<UPoly> =
        factor_over(&t, q)?.into_iter().map(|(f, _)| f).collect();
    while let Some(f) = work.pop_front() {
        let f = over(&t, &f)?;
        match f.degree() {
            Some(0) | None => {}
            Some(1) => roots.push(-&(&f.coeff(0) / &f.coeff(1))),
            Some(d) => {
                let needed = t.degree() * d;
                if needed > t.cap() {
                    return Err(TowerError::DegreeCapExceeded { cap: t.cap(), needed });
                }
                let cert = isolate_roots(&t, &f, 64).remove(0);
                let region = cert.disk.bounding_box();
                let (nt, theta) = push_level(&t, &f.monic(), region, cert);
                t = nt;
                let lin = UPoly::new(vec![-&theta, TowerElem::one()]);
                let cof = over(&t, &f)?.exact_div(&lin);
                roots.push(theta);
                if cof.degree().unwrap_or(0) > 0 {
                    for (g, _) in factor_over(&t, &cof)? {
                        work.push_back(g);
                    }
                }
            }
        }
    }
    let roots = roots.into_iter().map(|r| r.in_tower(&t)).collect::<Result<Vec<_>, _>>()?;
    Ok((t, roots))
}


/// [`adjoin_root`] for a known-good input, with a display name for the
/// generator.
pub(crate) fn adjoin_named(t: &Tower, p: &UPoly, region: &Region, name: &str) -> Tower {
    let p = over(t, p).expect("compatible polynomial").monic();
    let cert = isolate_roots(t, &p, 64)
        .into_iter()
        .find(|r| region_contains(region, &r.disk))
        .expect("region holds a root");
    push_named_level(t, &p, region.clone(), cert, Some(name)).0
}
