//! Exact Gaussian elimination over tower elements.

use numtower::TowerElem;

/// Reduced row echelon form and pivot columns.
fn rref(m: &[Vec<TowerElem>]) -> (Vec<Vec<TowerElem>>, Vec<usize>) {
    let mut a = m.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        a[r] = a[r].iter().map(|x| x * &inv).collect();
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &[Vec<TowerElem>]) -> usize {
    rref(m).1.len()
}

/// A basis of `{v : m v = 0}`.
pub fn nullspace(m: &[Vec<TowerElem>]) -> Vec<Vec<TowerElem>> {
    let cols = m.first().map_or(0, Vec::len);
    let (a, pivots) = rref(m);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![TowerElem::zero(); cols];
        v[free] = TowerElem::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -&a[r][free];
        }
        out.push(v);
    }
    out
}

/// Determinant of a square matrix (1 for the empty matrix).
pub fn det(m: &[Vec<TowerElem>]) -> TowerElem {
    let mut a = m.to_vec();
    let n = a.len();
    let mut d = TowerElem::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return TowerElem::zero() };
        if p != c {
            a.swap(p, c);
            d = -&d;
        }
        d = &d * &a[c][c];
        let inv = a[c][c].inv().unwrap();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= &t;
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<TowerElem>> {
        rows.iter().map(|r| r.iter().map(|&x| TowerElem::from_int(x)).collect()).collect()
    }

    #[test]
    fn small_matrices() {
        let a = m(&[&[-1, 1], &[1, -1]]);
        assert_eq!(rank(&a), 1);
        assert_eq!(nullspace(&a), m(&[&[1, 1]]));
        assert_eq!(det(&m(&[&[2, 1], &[1, 3]])), TowerElem::from_int(5));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), TowerElem::from_int(-1));
        assert_eq!(det(&[]), TowerElem::one());
    }
}
