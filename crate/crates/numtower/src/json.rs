//! JSON form of a tower element: the full tower (minimal polynomial and
//! isolating rectangle per level) plus dense nested coordinates, every
//! rational written as a `"p/q"` string.

use crate::error::TowerError;
use crate::factor::adjoin_root;
use crate::rat::{format_pq, parse_rational};
use crate::tower::{Region, Tower, TowerElem};
use crate::upoly::UPoly;
use crate::val::Val;
use serde_json::{json, Value};

fn coords_json(t: &Tower, v: &Val, k: usize) -> Value {
    if k == 0 {
        return match v {
            Val::Q(q) => Value::String(format_pq(q)),
            Val::E(..) => unreachable!("value above the requested level"),
        };
    }
    let c = v.coeffs_at(k);
    let zero = Val::zero();
    Value::Array((0..t.level_degree(k)).map(|i| coords_json(t, c.get(i).unwrap_or(&zero), k - 1)).collect())
}

fn region_json(r: &Region) -> Value {
    json!([format_pq(&r.re_lo), format_pq(&r.re_hi), format_pq(&r.im_lo), format_pq(&r.im_hi)])
}

/// Encodes `a` together with its whole tower.
pub fn to_json(a: &TowerElem) -> Value {
    let t = a.tower();
    let levels: Vec<Value> = (1..=t.height())
        .map(|k| {
            let mp: Vec<Value> = t.minpoly(k).iter().map(|c| coords_json(t, &c.val, k - 1)).collect();
            json!([mp, region_json(t.region(k))])
        })
        .collect();
    json!({ "tower": levels, "coords": coords_json(t, &a.val, t.height()) })
}

fn err(msg: &str) -> TowerError {
    TowerError::Json(msg.to_string())
}

fn rat(v: &Value) -> Result<crate::Rational, TowerError> {
    v.as_str().and_then(parse_rational).ok_or_else(|| err("expected a \"p/q\" string"))
}

fn coords_from(t: &Tower, v: &Value, k: usize) -> Result<TowerElem, TowerError> {
    if k == 0 {
        return Ok(TowerElem::rational(rat(v)?).in_tower(t)?);
    }
    let arr = v.as_array().ok_or_else(|| err("expected a coordinate array"))?;
    if arr.len() != t.level_degree(k) {
        return Err(err("coordinate array has the wrong length"));
    }
    let cs = arr.iter().map(|c| coords_from(t, c, k - 1)).collect::<Result<Vec<_>, _>>()?;
    Ok(TowerElem::from_level_coeffs(t, k, &cs))
}

fn region_from(v: &Value) -> Result<Region, TowerError> {
    let a = v.as_array().filter(|a| a.len() == 4).ok_or_else(|| err("region needs four bounds"))?;
    let r = Region::new(rat(&a[0])?, rat(&a[1])?, rat(&a[2])?, rat(&a[3])?);
    if r.re_lo > r.re_hi || r.im_lo > r.im_hi {
        return Err(err("empty region"));
    }
    Ok(r)
}

/// Decodes an element. Levels that coincide with a prefix of `ctx` (or of the
/// shared Gaussian tower) reuse those levels, so elements read against the
/// same context can be combined; anything else is rebuilt and re-validated.
pub fn from_json_in(ctx: &Tower, v: &Value) -> Result<TowerElem, TowerError> {
    let obj = v.as_object().ok_or_else(|| err("expected an object"))?;
    let levels = obj.get("tower").and_then(Value::as_array).ok_or_else(|| err("missing tower"))?;
    let coords = obj.get("coords").ok_or_else(|| err("missing coords"))?;
    let mut t = Tower::with_cap(ctx.cap());
    for (i, lv) in levels.iter().enumerate() {
        let k = i + 1;
        let pair = lv.as_array().filter(|a| a.len() == 2).ok_or_else(|| err("level must be [minpoly, region]"))?;
        let mp_raw = pair[0].as_array().ok_or_else(|| err("minpoly must be an array"))?;
        if mp_raw.len() < 3 {
            return Err(err("minimal polynomial must have degree at least two"));
        }
        let mp = UPoly::new(mp_raw.iter().map(|c| coords_from(&t, c, k - 1)).collect::<Result<_, _>>()?);
        if mp.degree() != Some(mp_raw.len() - 1) || !mp.lc().is_one() {
            return Err(err("minimal polynomial must be monic"));
        }
        let region = region_from(&pair[1])?;
        let matches = |cand: &Tower| {
            cand.height() >= k
                && t.is_prefix_of(cand)
                && cand.region(k) == &region
                && cand.minpoly(k).iter().zip(mp.coeffs()).all(|(a, b)| a.val == b.val)
                && cand.level_degree(k) + 1 == mp_raw.len()
        };
        let gauss = crate::gaussian_tower().recapped(ctx.cap());
        t = if matches(ctx) {
            ctx.truncated(k)
        } else if matches(&gauss) {
            gauss.truncated(k)
        } else {
            adjoin_root(&t, &mp, &region)?.0
        };
    }
    coords_from(&t, coords, t.height())
}

pub fn from_json(v: &Value) -> Result<TowerElem, TowerError> {
    from_json_in(&Tower::rationals(), v)
}

pub fn from_json_str(s: &str) -> Result<TowerElem, TowerError> {
    let v: Value = serde_json::from_str(s).map_err(|e| TowerError::Json(e.to_string()))?;
    from_json(&v)
}
