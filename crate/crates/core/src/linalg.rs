//! Small exact linear algebra over `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::Q;

pub fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| Q::from_integer(BigInt::from(x))).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_i(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

pub fn dot_iq(a: &[i64], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (&x, y)| acc + y * Q::from_integer(BigInt::from(x)))
}

/// Reduced row echelon form. Returns the nonzero rows and pivot columns.
pub fn rref(mut rows: Vec<Vec<Q>>, ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    rref(rows.to_vec(), ncols).1.len()
}

/// Basis of `{ x : rows . x = 0 }`.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(rows.to_vec(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// A solution of `sum_j x_j * columns[j] = target`, if one exists.
pub fn solve(columns: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let m = target.len();
    let k = columns.len();
    let rows: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut r: Vec<Q> = columns.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let (red, pivots) = rref(rows, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = vec![Q::zero(); k];
    for (row, &p) in red.iter().zip(&pivots) {
        x[p] = row[k].clone();
    }
    Some(x)
}

/// Reduces `v` modulo the row space of `basis` (given in echelon form with
/// the listed pivots), eliminating the pivot coordinates.
pub fn reduce_mod_rows(v: &[Q], basis: &[Vec<Q>], pivots: &[usize]) -> Vec<Q> {
    let mut out = v.to_vec();
    for (row, &p) in basis.iter().zip(pivots) {
        if !out[p].is_zero() {
            let f = out[p].clone() / &row[p];
            for j in 0..out.len() {
                let t = &row[j] * &f;
                out[j] -= t;
            }
        }
    }
    out
}

/// Scales a rational vector to a primitive integer vector with the same
/// direction. The zero vector maps to zeros.
pub fn primitive_integer(v: &[Q]) -> Vec<i64> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return vec![0; v.len()];
    }
    ints.iter().map(|x| (x / &g).to_i64().expect("primitive vector entry exceeds i64 range")).collect()
}

pub fn primitive_i64(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|&x| x / g.abs()).collect()
}

/// True when `v` is a nonzero vector whose first nonzero entry is positive.
pub fn leading_positive(v: &[Q]) -> bool {
    v.iter().find(|x| !x.is_zero()).map(|x| x.is_positive()).unwrap_or(false)
}
