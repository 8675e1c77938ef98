//! Monomial orders given by stacked weight vectors with a degree tie-break.
//!
//! Local orders prefer small weights (so `1` is the largest monomial) and
//! break ties with negative degree reverse lexicographic (`ds`); global orders
//! prefer large weights and break ties with degree reverse lexicographic
//! (`dp`).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::algebra::{Exponent, Polynomial, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    nvars: usize,
    rows: Vec<Vec<i64>>,
    local: bool,
}

/// Scales a rational weight to an integer vector with the same order on
/// exponents.
pub fn integer_row(w: &[Q]) -> Vec<i64> {
    let mut l = BigInt::one();
    for x in w {
        l = l.lcm(x.denom());
    }
    w.iter()
        .map(|x| (x * Q::from_integer(l.clone())).to_integer().to_i64().expect("weight entry exceeds i64 range"))
        .collect()
}

impl MonomialOrder {
    pub fn local(nvars: usize, weights: &[Vec<Q>]) -> Self {
        Self::build(nvars, weights, true)
    }

    pub fn global(nvars: usize, weights: &[Vec<Q>]) -> Self {
        Self::build(nvars, weights, false)
    }

    fn build(nvars: usize, weights: &[Vec<Q>], local: bool) -> Self {
        let rows = weights
            .iter()
            .map(|w| {
                assert_eq!(w.len(), nvars, "weight length mismatch");
                integer_row(w)
            })
            .collect();
        MonomialOrder { nvars, rows, local }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<i64>>, local: bool) -> Self {
        MonomialOrder { nvars, rows, local }
    }

    /// Negative degree reverse lexicographic order.
    pub fn ds(nvars: usize) -> Self {
        Self::from_rows(nvars, vec![], true)
    }

    /// Degree reverse lexicographic order.
    pub fn dp(nvars: usize) -> Self {
        Self::from_rows(nvars, vec![], false)
    }

    /// Global order eliminating the last variable.
    pub fn eliminate_last(nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[nvars - 1] = 1;
        Self::from_rows(nvars, vec![e], false)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_local(&self) -> bool {
        self.local
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// The same order with `w` placed in front of the existing weights.
    pub fn refined_by(&self, w: &[Q]) -> Self {
        let mut rows = vec![integer_row(w)];
        rows.extend(self.rows.iter().cloned());
        Self::from_rows(self.nvars, rows, self.local)
    }

    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        for r in &self.rows {
            let (wa, wb) = (a.dot_i64(r), b.dot_i64(r));
            if wa != wb {
                let o = wa.cmp(&wb);
                return if self.local { o.reverse() } else { o };
            }
        }
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            let o = da.cmp(&db);
            return if self.local { o.reverse() } else { o };
        }
        for (x, y) in a.0.iter().zip(&b.0).rev() {
            if x != y {
                // last differing coordinate smaller means larger monomial
                return y.cmp(x);
            }
        }
        Ordering::Equal
    }

    /// Leading exponent and coefficient.
    pub fn leading<'a>(&self, p: &'a Polynomial) -> Option<(&'a Exponent, &'a Q)> {
        p.terms().max_by(|a, b| self.cmp(a.0, b.0))
    }

    pub fn leading_exp(&self, p: &Polynomial) -> Option<Exponent> {
        self.leading(p).map(|(e, _)| e.clone())
    }

    /// Terms sorted from largest to smallest.
    pub fn sorted_terms(&self, p: &Polynomial) -> Vec<(Exponent, Q)> {
        let mut v: Vec<(Exponent, Q)> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        v.sort_by(|a, b| self.cmp(&b.0, &a.0));
        v
    }

    /// Ecart: total degree minus degree of the leading monomial.
    pub fn ecart(&self, p: &Polynomial) -> u64 {
        match self.leading(p) {
            Some((e, _)) => p.total_degree() - e.degree(),
            None => 0,
        }
    }

    /// `p` divided by its leading coefficient.
    pub fn monic(&self, p: &Polynomial) -> Polynomial {
        match self.leading(p) {
            Some((_, c)) => p.scale(&c.recip()),
            None => p.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    fn e(v: &[u32]) -> Exponent {
        Exponent(v.to_vec())
    }

    #[test]
    fn local_orders_put_one_first() {
        let ds = MonomialOrder::ds(2);
        assert_eq!(ds.cmp(&e(&[0, 0]), &e(&[1, 0])), Ordering::Greater);
        assert_eq!(ds.cmp(&e(&[1, 0]), &e(&[0, 1])), Ordering::Greater);
        assert_eq!(ds.cmp(&e(&[1, 1]), &e(&[2, 0])), Ordering::Less);
        let w = MonomialOrder::local(2, &[vec![q(1), q(2)]]);
        assert_eq!(w.cmp(&e(&[2, 0]), &e(&[0, 1])), Ordering::Less);
        assert_eq!(w.cmp(&e(&[1, 0]), &e(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn global_orders() {
        let dp = MonomialOrder::dp(3);
        assert_eq!(dp.cmp(&e(&[1, 0, 0]), &e(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(dp.cmp(&e(&[0, 0, 2]), &e(&[1, 0, 0])), Ordering::Greater);
        assert_eq!(dp.cmp(&e(&[1, 0, 1]), &e(&[0, 2, 0])), Ordering::Less);
        let el = MonomialOrder::eliminate_last(2);
        assert_eq!(el.cmp(&e(&[0, 1]), &e(&[5, 0])), Ordering::Greater);
    }

    #[test]
    fn ecart_and_leading() {
        let p = Polynomial::from_ints(2, &[(2, 1, &[1, 0]), (1, 1, &[2, 3])]);
        let ds = MonomialOrder::ds(2);
        assert_eq!(ds.leading_exp(&p), Some(e(&[1, 0])));
        assert_eq!(ds.ecart(&p), 4);
        assert_eq!(ds.monic(&p).coeff(&e(&[1, 0])), q(1));
    }
}
