//! Exponents, polynomials, truncated power series, local weights and strata.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational coefficients.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// An exponent vector `alpha` in `N^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Exponent(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` when `other` does not divide `self`.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        if !other.divides(self) {
            return None;
        }
        Some(Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn dot(&self, u: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (a, w) in self.0.iter().zip(u) {
            if *a != 0 {
                acc += w * Q::from_integer(BigInt::from(*a));
            }
        }
        acc
    }

    pub fn dot_i64(&self, u: &[i64]) -> i128 {
        self.0.iter().zip(u).map(|(&a, &w)| a as i128 * w as i128).sum()
    }

    /// Keep only the listed coordinates, in order.
    pub fn project(&self, keep: &[usize]) -> Exponent {
        Exponent(keep.iter().map(|&i| self.0[i]).collect())
    }

    /// Extend by one trailing coordinate.
    pub fn extend(&self, last: u32) -> Exponent {
        let mut v = self.0.clone();
        v.push(last);
        Exponent(v)
    }

    pub fn format(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
                if a == 1 {
                    name
                } else {
                    format!("{name}^{a}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A term `coeff * x^exp` with nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: Q,
    pub exp: Exponent,
}

/// Default variable names `x, y, z, w` for small `n`, `x1..xn` otherwise.
pub fn default_names(n: usize) -> Vec<String> {
    if n <= 4 {
        ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// A polynomial with exact rational coefficients, terms kept in lexicographic
/// exponent order.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, Q>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(Q::one(), Exponent::zero(nvars))
    }

    pub fn monomial(coeff: Q, exp: Exponent) -> Self {
        let mut p = Polynomial::zero(exp.nvars());
        if !coeff.is_zero() {
            p.terms.insert(exp, coeff);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Q::one(), Exponent::unit(nvars, i))
    }

    /// Builds a polynomial, summing repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Q, Exponent)>>(nvars: usize, terms: I) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (c, e) in terms {
            assert_eq!(e.nvars(), nvars, "exponent length mismatch");
            p.add_term(c, e);
        }
        p
    }

    /// Convenience constructor from integer numerators/denominators.
    pub fn from_ints(nvars: usize, terms: &[(i64, i64, &[u32])]) -> Self {
        Self::from_terms(nvars, terms.iter().map(|(n, d, e)| (qf(*n, *d), Exponent(e.to_vec()))))
    }

    pub fn add_term(&mut self, c: Q, e: Exponent) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponent, Q)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, e: &Exponent) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn support(&self) -> BTreeSet<Exponent> {
        self.terms.keys().cloned().collect()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|e| e.degree()).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&Exponent::zero(self.nvars))
    }

    pub fn filter<F: Fn(&Exponent) -> bool>(&self, keep: F) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul_term(&self, c: &Q, m: &Exponent) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.add(m), v * c)).collect() }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(c.clone(), e.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(-c.clone(), e.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Q::one())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(c1 * c2, e1.add(e2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Adds a trailing variable that does not occur.
    pub fn extend_vars(&self) -> Polynomial {
        Polynomial { nvars: self.nvars + 1, terms: self.terms.iter().map(|(e, c)| (e.extend(0), c.clone())).collect() }
    }

    /// Substitutes 1 for the last variable and drops it.
    pub fn drop_last_var(&self) -> Polynomial {
        let n = self.nvars - 1;
        Polynomial::from_terms(n, self.terms.iter().map(|(e, c)| (c.clone(), Exponent(e.0[..n].to_vec()))))
    }

    /// Normalises so that the coefficient at `lead` is one.
    pub fn make_monic_at(&self, lead: &Exponent) -> Polynomial {
        let c = self.coeff(lead);
        assert!(!c.is_zero(), "leading coefficient must be nonzero");
        self.scale(&c.recip())
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = e.format(names);
            if e.is_zero() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{abs}*{mono}"));
            }
        }
        s
    }
}

/// Serialised as a list of `{"c": "p/q", "e": [..]}` terms, the same shape as
/// the input format.
impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&serde_json::json!({ "c": c.to_string(), "e": e.0 }))?;
        }
        seq.end()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(&default_names(self.nvars)))
    }
}

/// Whether a finite term list is the whole series or a truncation of it.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
pub enum Truncation {
    Exact,
    Degree(u32),
}

/// An element of `Q[[x]]` given by finitely many terms.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Series {
    poly: Polynomial,
    truncation: Truncation,
}

impl Series {
    pub fn exact(poly: Polynomial) -> Self {
        Series { poly, truncation: Truncation::Exact }
    }

    /// A truncation at total degree `degree`; every term must respect it.
    pub fn truncated(poly: Polynomial, degree: u32) -> Result<Self> {
        if let Some(e) = poly.exponents().find(|e| e.degree() > degree as u64) {
            return Err(Error::Parse(format!("term {e} exceeds truncation degree {degree}")));
        }
        Ok(Series { poly, truncation: Truncation::Degree(degree) })
    }

    pub fn new(poly: Polynomial, truncation: Truncation) -> Result<Self> {
        match truncation {
            Truncation::Exact => Ok(Series::exact(poly)),
            Truncation::Degree(d) => Series::truncated(poly, d),
        }
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    pub fn is_exact(&self) -> bool {
        self.truncation == Truncation::Exact
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Same truncation metadata, different terms.
    pub fn with_poly(&self, poly: Polynomial) -> Series {
        Series { poly, truncation: self.truncation }
    }
}

/// A local weight `u` with nonnegative rational entries.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<Q>);

impl WeightVector {
    pub fn new(entries: Vec<Q>) -> Result<Self> {
        if let Some(i) = entries.iter().position(|x| x.is_negative()) {
            return Err(Error::NegativeEntry(i));
        }
        Ok(WeightVector(entries))
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| q(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        WeightVector(vec![Q::zero(); n])
    }

    pub fn entries(&self) -> &[Q] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|x| x.is_positive())
    }

    pub fn dot(&self, e: &Exponent) -> Q {
        e.dot(&self.0)
    }

    pub fn stratum(&self) -> Stratum {
        Stratum::from_zero_set(self.0.len(), self.0.iter().enumerate().filter(|(_, x)| x.is_zero()).map(|(i, _)| i))
    }

    /// Positive integer multiple of the vector (denominators cleared).
    pub fn to_integer_direction(&self) -> Vec<i64> {
        crate::linalg::primitive_integer(&self.0)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The coordinate set `lambda` forced to zero; indexes the strata of the
/// local weight space. Indices are 0-based internally and printed 1-based.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Stratum {
    n: usize,
    zero_set: BTreeSet<usize>,
}

impl Stratum {
    pub fn from_zero_set<I: IntoIterator<Item = usize>>(n: usize, zeros: I) -> Self {
        let zero_set: BTreeSet<usize> = zeros.into_iter().collect();
        assert!(zero_set.iter().all(|&i| i < n), "stratum index out of range");
        Stratum { n, zero_set }
    }

    pub fn maximal(n: usize) -> Self {
        Self::from_zero_set(n, [])
    }

    pub fn origin(n: usize) -> Self {
        Self::from_zero_set(n, 0..n)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn zero_set(&self) -> &BTreeSet<usize> {
        &self.zero_set
    }

    pub fn is_zero(&self, i: usize) -> bool {
        self.zero_set.contains(&i)
    }

    pub fn is_origin(&self) -> bool {
        self.zero_set.len() == self.n
    }

    pub fn is_maximal(&self) -> bool {
        self.zero_set.is_empty()
    }

    /// Coordinates with positive weight on the stratum.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|i| !self.zero_set.contains(i)).collect()
    }

    /// Open-stratum membership: zero exactly on `lambda`, positive elsewhere.
    pub fn contains(&self, u: &[Q]) -> bool {
        u.len() == self.n
            && u.iter().enumerate().all(|(i, x)| if self.zero_set.contains(&i) { x.is_zero() } else { x.is_positive() })
    }

    /// Label in the `0, 1, 2, 12, ...` style (1-based coordinates).
    pub fn label(&self) -> String {
        if self.zero_set.is_empty() {
            "0".to_string()
        } else {
            self.zero_set.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero_set.is_empty() {
            write!(f, "{{}}")
        } else {
            let parts: Vec<String> = self.zero_set.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

/// Nonzero-coefficient exponents of `f`.
pub fn support(f: &Series) -> BTreeSet<Exponent> {
    f.poly().support()
}

/// `min { u . alpha : alpha in Supp(f) }`.
pub fn weight_of(f: &Polynomial, u: &WeightVector) -> Result<Q> {
    f.exponents().map(|e| u.dot(e)).min().ok_or(Error::ZeroSeries)
}

/// The initial form `in_u(f)` as an element of the graded ring tagged by the
/// stratum of `u`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InitialForm {
    pub body: Series,
    pub weight: WeightVector,
    pub value: Q,
    pub ring_tag: Stratum,
    /// Set when `f` is truncated and `u` has a zero entry: terms beyond the
    /// truncation in zero-weight variables could still be minimal.
    pub truncation_warning: bool,
}

pub fn initial_form(f: &Series, u: &WeightVector) -> Result<InitialForm> {
    if u.len() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), found: u.len() });
    }
    let value = weight_of(f.poly(), u)?;
    let body = f.poly().filter(|e| u.dot(e) == value);
    let ring_tag = u.stratum();
    let truncation_warning = !f.is_exact() && !ring_tag.is_maximal();
    Ok(InitialForm { body: f.with_poly(body), weight: u.clone(), value, ring_tag, truncation_warning })
}

/// Initial form of a polynomial (no truncation metadata).
pub fn initial_poly(f: &Polynomial, u: &[Q]) -> Polynomial {
    let Some(min) = f.exponents().map(|e| e.dot(u)).min() else {
        return f.clone();
    };
    f.filter(|e| e.dot(u) == min)
}

/// Stratum of a raw weight; rejects negative entries.
pub fn stratum_of(u: &[Q]) -> Result<Stratum> {
    Ok(WeightVector::new(u.to_vec())?.stratum())
}

/// All `2^n` strata, ordered by cardinality of the zero set and then
/// lexicographically.
pub fn enumerate_strata(n: usize) -> Vec<Stratum> {
    let mut subsets: Vec<Vec<usize>> =
        (0u32..(1u32 << n)).map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect()).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets.into_iter().map(|s| Stratum::from_zero_set(n, s)).collect()
}

/// Parses a rational literal such as `-3/4`, `+2` or `5`. Floats are rejected.
pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    if t.is_empty() || t.contains(['.', 'e', 'E', ' ']) {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() || den.is_negative() {
        return Err(bad());
    }
    Ok(Q::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The worked example truncated at degree 4.
    pub(crate) fn sample_p() -> Series {
        let p = Polynomial::from_ints(2, &[(1, 1, &[1, 1]), (-1, 1, &[2, 0]), (1, 2, &[2, 1]), (1, 6, &[3, 1])]);
        Series::truncated(p, 4).unwrap()
    }

    fn w(v: &[i64]) -> WeightVector {
        WeightVector::from_ints(v).unwrap()
    }

    #[test]
    fn support_of_example() {
        let s: Vec<_> = support(&sample_p()).into_iter().map(|e| e.0).collect();
        assert_eq!(s, vec![vec![1, 1], vec![2, 0], vec![2, 1], vec![3, 1]]);
        assert!(support(&Series::exact(Polynomial::zero(2))).is_empty());
        let g = Polynomial::from_ints(2, &[(1, 1, &[3, 0]), (1, 1, &[1, 1]), (1, 1, &[0, 4])]);
        assert_eq!(support(&Series::exact(g)).len(), 3);
    }

    #[test]
    fn weights() {
        assert_eq!(weight_of(sample_p().poly(), &w(&[1, 1])).unwrap(), q(2));
        assert_eq!(weight_of(sample_p().poly(), &w(&[0, 0])).unwrap(), q(0));
        let g = Polynomial::from_ints(2, &[(1, 1, &[3, 0]), (1, 1, &[1, 1]), (1, 1, &[0, 4])]);
        assert_eq!(weight_of(&g, &w(&[1, 2])).unwrap(), q(3));
        assert_eq!(weight_of(&Polynomial::zero(2), &w(&[1, 1])), Err(Error::ZeroSeries));
    }

    #[test]
    fn initial_forms_of_example() {
        let p = sample_p();
        let f = initial_form(&p, &w(&[1, 0])).unwrap();
        assert_eq!(f.body.poly(), &Polynomial::from_ints(2, &[(1, 1, &[1, 1])]));
        assert!(f.truncation_warning);
        let f = initial_form(&p, &w(&[0, 1])).unwrap();
        assert_eq!(f.body.poly(), &Polynomial::from_ints(2, &[(-1, 1, &[2, 0])]));
        assert!(f.truncation_warning);
        assert_eq!(f.ring_tag, Stratum::from_zero_set(2, [0]));
        let f = initial_form(&p, &w(&[1, 1])).unwrap();
        assert_eq!(f.body.poly(), &Polynomial::from_ints(2, &[(1, 1, &[1, 1]), (-1, 1, &[2, 0])]));
        assert!(!f.truncation_warning);
        assert_eq!(f.value, q(2));
    }

    #[test]
    fn strata() {
        assert!(stratum_of(&[q(1), q(1)]).unwrap().is_maximal());
        assert_eq!(stratum_of(&[q(0), qf(3, 2)]).unwrap(), Stratum::from_zero_set(2, [0]));
        assert!(stratum_of(&[q(0), q(0)]).unwrap().is_origin());
        assert_eq!(stratum_of(&[q(1), q(-1)]), Err(Error::NegativeEntry(1)));

        let labels: Vec<String> = enumerate_strata(2).iter().map(|s| s.label()).collect();
        assert_eq!(labels, vec!["0", "1", "2", "1,2"]);
        assert_eq!(enumerate_strata(1).len(), 2);
        assert_eq!(enumerate_strata(3).len(), 8);
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-3/4").unwrap(), qf(-3, 4));
        assert_eq!(parse_rational("+2").unwrap(), q(2));
        assert_eq!(parse_rational("6/4").unwrap(), qf(3, 2));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(sample_p().poly().to_string(), "x*y - x^2 + 1/2*x^2*y + 1/6*x^3*y");
    }
}
