//! Brute-force and classical cross-checks: box staircases, global min-twice
//! loci, Newton polygons of plane curves, homogeneity along cone rays, and
//! seeded random instance generators.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Exponent, Polynomial, Series, Q};
use crate::error::{Error, Result};
use crate::linalg::primitive_i64;
use crate::polyhedra::RationalCone;
use crate::staircase::Staircase;

/// Parameters of the rational sample grids used by the checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub max_denominator: u32,
    /// Coordinates range over `[0, box_degree]`.
    pub box_degree: u32,
    pub sample_count: usize,
    pub seed: u64,
}

impl GridSpec {
    pub fn new(max_denominator: u32, box_degree: u32, sample_count: usize, seed: u64) -> Result<Self> {
        if max_denominator == 0 || box_degree == 0 || sample_count == 0 {
            return Err(Error::Parse("grid parameters must be positive".into()));
        }
        Ok(GridSpec { max_denominator, box_degree, sample_count, seed })
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// A random nonnegative rational with denominator at most `max_den`, zero
/// with probability about one quarter.
pub fn random_coordinate<R: Rng>(rng: &mut R, max_den: u32, box_degree: u32) -> Q {
    if rng.gen_range(0..4) == 0 {
        return Q::zero();
    }
    let d = rng.gen_range(1..=max_den) as i64;
    let n = rng.gen_range(1..=(box_degree as i64 * d));
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// The 0/1 corner points of the box followed by `sample_count` random grid
/// points; deterministic given the seed.
pub fn grid_points(spec: &GridSpec, n: usize) -> Vec<Vec<Q>> {
    let mut pts: Vec<Vec<Q>> =
        (0..(1u32 << n)).map(|mask| (0..n).map(|i| Q::from_integer(BigInt::from((mask >> i) & 1))).collect()).collect();
    let mut rng = spec.rng();
    for _ in 0..spec.sample_count {
        pts.push((0..n).map(|_| random_coordinate(&mut rng, spec.max_denominator, spec.box_degree)).collect());
    }
    pts
}

/// The minimal staircase of `s` by exhaustive search over `[0, box]^n`: the
/// lattice points of `s + N^n` none of whose lower neighbours belong to it.
pub fn brute_staircase(s: &[Exponent], bx: u32) -> Staircase {
    let n = s.first().map(|e| e.nvars()).unwrap_or(0);
    let in_upset = |p: &[u32]| s.iter().any(|a| a.0.iter().zip(p).all(|(x, y)| x <= y));
    let mut gens = Vec::new();
    let mut p = vec![0u32; n];
    loop {
        if in_upset(&p) {
            let minimal = (0..n).all(|i| {
                if p[i] == 0 {
                    return true;
                }
                let mut q = p.clone();
                q[i] -= 1;
                !in_upset(&q)
            });
            if minimal {
                gens.push(Exponent(p.clone()));
            }
        }
        let mut i = 0;
        while i < n && p[i] == bx {
            p[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        p[i] += 1;
    }
    gens.sort();
    Staircase { generators: gens, ambient: (0..n).collect() }
}

/// Min-plus minimum attained at least twice over the full support.
pub fn global_min_twice(f: &Polynomial, w: &[Q]) -> bool {
    let mut vals: Vec<Q> = f
        .exponents()
        .map(|e| e.0.iter().zip(w).fold(Q::zero(), |acc, (&a, x)| acc + x * Q::from_integer(BigInt::from(a))))
        .collect();
    vals.sort();
    vals.len() >= 2 && vals[0] == vals[1]
}

/// Inner normals of the compact lower edges of the Newton polygon that lie in
/// the open positive quadrant, as sorted primitive vectors.
pub fn newton_polygon_rays(f: &Polynomial) -> Result<Vec<Vec<i64>>> {
    if f.nvars() != 2 {
        return Err(Error::NotBivariate);
    }
    let pts: Vec<(i64, i64)> = f.exponents().map(|e| (e.0[0] as i64, e.0[1] as i64)).collect();
    let mut rays = BTreeSet::new();
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            let (dx, dy) = (q.0 - p.0, q.1 - p.1);
            if dx * dy >= 0 {
                continue;
            }
            let u = primitive_i64(&[dy.abs(), dx.abs()]);
            let val = |s: &(i64, i64)| u[0] * s.0 + u[1] * s.1;
            let min = pts.iter().map(val).min().expect("nonempty");
            if val(p) == min && val(q) == min {
                rays.insert(u);
            }
        }
    }
    Ok(rays.into_iter().collect())
}

/// True iff every ray generator of the cone assigns one common weight to all
/// exponents of `h`.
pub fn homogeneity_check(h: &Polynomial, cone: &RationalCone) -> bool {
    cone.rays().iter().all(|r| {
        let vals: BTreeSet<i128> = h.exponents().map(|e| e.dot_i64(r)).collect();
        vals.len() <= 1
    })
}

/// Coefficients of the edge polynomial of the lower edge with normal `u`,
/// read along the edge from the end with the larger `y` exponent.
fn edge_polynomial(f: &Polynomial, u: &[i64]) -> Vec<Q> {
    let pts: Vec<(Exponent, Q)> = f.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    let min = pts.iter().map(|(e, _)| e.dot_i64(u)).min().expect("nonempty");
    let mut on: Vec<(u32, Q)> =
        pts.iter().filter(|(e, _)| e.dot_i64(u) == min).map(|(e, c)| (e.0[0], c.clone())).collect();
    on.sort_by_key(|(a, _)| *a);
    let step = u[1] as u32;
    let start = on[0].0;
    let len = ((on.last().expect("edge").0 - start) / step) as usize;
    let mut coeffs = vec![Q::zero(); len + 1];
    for (a, c) in on {
        coeffs[((a - start) / step) as usize] = c;
    }
    coeffs
}

fn poly_rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut r = a.to_vec();
    while r.len() >= b.len() && !r.is_empty() {
        let f = r.last().expect("nonempty") / b.last().expect("nonempty");
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        r.pop();
        while r.last().map(|x| x.is_zero()).unwrap_or(false) {
            r.pop();
        }
    }
    r
}

/// True when the univariate polynomial has no repeated root.
pub fn squarefree(p: &[Q]) -> bool {
    let mut a: Vec<Q> = p.to_vec();
    while a.last().map(|x| x.is_zero()).unwrap_or(false) {
        a.pop();
    }
    let mut b: Vec<Q> = a.iter().enumerate().skip(1).map(|(i, c)| c * Q::from_integer(BigInt::from(i))).collect();
    while b.last().map(|x| x.is_zero()).unwrap_or(false) {
        b.pop();
    }
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len() <= 1
}

/// Every edge polynomial of the lower Newton boundary is squarefree.
pub fn newton_generic(f: &Polynomial) -> bool {
    newton_polygon_rays(f).map(|rays| rays.iter().all(|u| squarefree(&edge_polynomial(f, u)))).unwrap_or(false)
}

fn random_coefficient<R: Rng>(rng: &mut R) -> Q {
    let v = rng.gen_range(1..=9i64);
    Q::from_integer(BigInt::from(if rng.gen_bool(0.5) { v } else { -v }))
}

/// A random polynomial with `terms` distinct exponents of total degree in
/// `min_degree..=degree`, coefficients in `{±1, ..., ±9}`.
pub fn random_polynomial<R: Rng>(rng: &mut R, n: usize, min_degree: u32, degree: u32, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    let mut guard = 0;
    while p.len() < terms && guard < 1000 {
        guard += 1;
        let e = random_exponent(rng, n, degree);
        if (e.degree() as u32) < min_degree || !p.coeff(&e).is_zero() {
            continue;
        }
        p.add_term(random_coefficient(rng), e);
    }
    p
}

pub fn random_exponent<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Exponent {
    let mut left = degree;
    let mut v = vec![0u32; n];
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    for &i in &order {
        let a = rng.gen_range(0..=left);
        v[i] = a;
        left -= a;
    }
    Exponent(v)
}

/// A random truncated series without constant term.
pub fn random_series<R: Rng>(rng: &mut R, n: usize, degree: u32, terms: usize) -> Series {
    let p = random_polynomial(rng, n, 1, degree, terms);
    Series::truncated(p, degree).expect("terms within degree")
}

/// A bivariate polynomial through the origin with squarefree edge
/// polynomials; returns it with the number of rejected draws.
pub fn random_generic_curve<R: Rng>(rng: &mut R, degree: u32, terms: usize) -> (Polynomial, usize) {
    let mut rejected = 0;
    loop {
        let p = random_polynomial(rng, 2, 1, degree, terms);
        if newton_generic(&p) && !newton_polygon_rays(&p).expect("bivariate").is_empty() {
            return (p, rejected);
        }
        rejected += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;
    use crate::staircase::minimal_staircase;

    fn e(v: &[u32]) -> Exponent {
        Exponent(v.to_vec())
    }

    #[test]
    fn brute_staircase_matches_examples() {
        let supp = [e(&[1, 1]), e(&[2, 0]), e(&[2, 1]), e(&[3, 1])];
        assert_eq!(brute_staircase(&supp, 6).generators, vec![e(&[1, 1]), e(&[2, 0])]);
        assert_eq!(brute_staircase(&[e(&[4, 2])], 6).generators, vec![e(&[4, 2])]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let s: Vec<Exponent> =
                (0..10).map(|_| Exponent(vec![rng.gen_range(0..=8), rng.gen_range(0..=8)])).collect();
            assert_eq!(brute_staircase(&s, 8).generators, minimal_staircase(&s).generators);
        }
    }

    #[test]
    fn min_twice_examples() {
        let f = Polynomial::from_ints(2, &[(1, 1, &[1, 1]), (-1, 1, &[2, 0])]);
        assert!(global_min_twice(&f, &[q(1), q(1)]));
        let g = Polynomial::from_ints(2, &[(1, 1, &[3, 0]), (1, 1, &[1, 1]), (1, 1, &[0, 4])]);
        assert!(!global_min_twice(&g, &[q(2), q(1)]));
        assert!(!global_min_twice(&Polynomial::from_ints(2, &[(1, 1, &[1, 3])]), &[q(0), q(0)]));
    }

    #[test]
    fn newton_rays() {
        let p = |t: &[(i64, i64, &[u32])]| Polynomial::from_ints(2, t);
        assert_eq!(newton_polygon_rays(&p(&[(1, 1, &[1, 1]), (-1, 1, &[2, 0])])).unwrap(), vec![vec![1, 1]]);
        let node = p(&[(1, 1, &[0, 2]), (-1, 1, &[3, 0]), (-1, 1, &[2, 0])]);
        assert_eq!(newton_polygon_rays(&node).unwrap(), vec![vec![1, 1]]);
        let cusp = p(&[(1, 1, &[0, 2]), (-1, 1, &[3, 0])]);
        assert_eq!(newton_polygon_rays(&cusp).unwrap(), vec![vec![2, 3]]);
        assert!(newton_generic(&cusp));
        let square = p(&[(1, 1, &[0, 2]), (-2, 1, &[1, 1]), (1, 1, &[2, 0])]);
        assert!(!newton_generic(&square));
        assert_eq!(newton_polygon_rays(&Polynomial::one(3)), Err(Error::NotBivariate));
    }

    #[test]
    fn homogeneity() {
        let f = Polynomial::from_ints(2, &[(1, 1, &[1, 1]), (-1, 1, &[2, 0])]);
        assert!(homogeneity_check(&f, &RationalCone::ray(&[1, 1])));
        assert!(!homogeneity_check(&f, &RationalCone::orthant(2)));
        assert!(homogeneity_check(&Polynomial::from_ints(2, &[(1, 1, &[2, 5])]), &RationalCone::orthant(2)));
    }

    #[test]
    fn grids_are_deterministic() {
        let spec = GridSpec::new(8, 2, 20, 7).unwrap();
        assert_eq!(grid_points(&spec, 2), grid_points(&spec, 2));
        assert_eq!(grid_points(&spec, 3).len(), 28);
    }
}
