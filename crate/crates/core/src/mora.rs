//! Mora's tangent cone algorithm: weak normal forms and standard bases in the
//! localisation of `Q[x]` at the origin, for local monomial orders.
//!
//! A weak normal form satisfies `u * f = sum q_i g_i + r` with `u` a unit
//! (constant term 1) and `r` either zero or with a leading monomial outside
//! the leading ideal of `g`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::algebra::{Exponent, Polynomial, Q};
use crate::linalg::solve;
use crate::order::MonomialOrder;
use crate::staircase::minimal_staircase;

/// A weak normal form together with the representation that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub unit: Polynomial,
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

struct Entry {
    poly: Polynomial,
    lead: Exponent,
    lead_c: Q,
    ecart: u64,
    unit: Polynomial,
    quotients: Vec<Polynomial>,
}

fn entry(poly: Polynomial, order: &MonomialOrder, unit: Polynomial, quotients: Vec<Polynomial>) -> Entry {
    let (lead, lead_c) = order.leading(&poly).map(|(e, c)| (e.clone(), c.clone())).expect("nonzero reducer");
    let ecart = order.ecart(&poly);
    Entry { poly, lead, lead_c, ecart, unit, quotients }
}

fn run(f: &Polynomial, g: &[Polynomial], order: &MonomialOrder, track: bool) -> Reduction {
    let n = f.nvars();
    let k = g.len();
    let zero = Polynomial::zero(n);
    let mut t: Vec<Entry> = g
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(i, p)| {
            let mut q = vec![zero.clone(); if track { k } else { 0 }];
            if track {
                q[i] = Polynomial::one(n);
            }
            entry(p.clone(), order, zero.clone(), q)
        })
        .collect();
    let mut h = f.clone();
    let mut unit = Polynomial::one(n);
    let mut quotients = vec![zero.clone(); if track { k } else { 0 }];
    while let Some((lh, ch)) = order.leading(&h).map(|(e, c)| (e.clone(), c.clone())) {
        let best = t
            .iter()
            .enumerate()
            .filter(|(_, e)| e.lead.divides(&lh))
            .min_by_key(|(i, e)| (e.ecart, *i))
            .map(|(i, _)| i);
        let Some(i) = best else { break };
        let eh = order.ecart(&h);
        if t[i].ecart > eh {
            t.push(entry(h.clone(), order, unit.clone(), quotients.clone()));
        }
        let r = &t[i];
        let m = lh.checked_sub(&r.lead).expect("divisible");
        let factor = &ch / &r.lead_c;
        h = h.sub(&r.poly.mul_term(&factor, &m));
        if track {
            unit = unit.sub(&r.unit.mul_term(&factor, &m));
            for (qj, rj) in quotients.iter_mut().zip(&r.quotients) {
                if !rj.is_zero() {
                    *qj = qj.sub(&rj.mul_term(&factor, &m));
                }
            }
        }
    }
    // h = unit * f + sum quotients_j g_j
    Reduction { unit, quotients: quotients.iter().map(|q| q.neg()).collect(), remainder: h }
}

pub fn weak_normal_form(f: &Polynomial, g: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    run(f, g, order, false).remainder
}

/// Weak normal form with the representation `unit * f = sum q_i g_i + r`.
pub fn reduce_with_trace(f: &Polynomial, g: &[Polynomial], order: &MonomialOrder) -> Reduction {
    run(f, g, order, true)
}

fn spoly(a: &Polynomial, b: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (ea, ca) = order.leading(a).expect("nonzero");
    let (eb, cb) = order.leading(b).expect("nonzero");
    let l = ea.lcm(eb);
    a.mul_term(&ca.recip(), &l.checked_sub(ea).expect("lcm"))
        .sub(&b.mul_term(&cb.recip(), &l.checked_sub(eb).expect("lcm")))
}

/// Minimal standard basis, monic, sorted by leading monomial (largest
/// first). The zero ideal gives an empty basis.
pub fn standard_basis(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let mut s: Vec<Polynomial> = Vec::new();
    for g in gens {
        let r = weak_normal_form(g, &s, order);
        if !r.is_zero() {
            s.push(order.monic(&r));
        }
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..s.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    let leads = |s: &Vec<Polynomial>, i: usize| order.leading_exp(&s[i]).expect("nonzero");
    while let Some(&(i, j)) = pairs.iter().min_by_key(|(i, j)| (leads(&s, *i).lcm(&leads(&s, *j)).degree(), *i, *j)) {
        pairs.remove(&(i, j));
        let r = weak_normal_form(&spoly(&s[i], &s[j], order), &s, order);
        if !r.is_zero() {
            let k = s.len();
            s.push(order.monic(&r));
            for i in 0..k {
                pairs.insert((i, k));
            }
        }
    }
    let all: Vec<Exponent> = (0..s.len()).map(|i| leads(&s, i)).collect();
    let mut out: Vec<Polynomial> = Vec::new();
    let mut seen: Vec<Exponent> = Vec::new();
    let mut idx: Vec<usize> = (0..s.len()).collect();
    // prefer short elements of low ecart among equal leading monomials
    idx.sort_by_key(|&i| (order.ecart(&s[i]), s[i].len()));
    for i in idx {
        let e = &all[i];
        let strictly_divisible = all.iter().any(|l| l != e && l.divides(e));
        if strictly_divisible || seen.contains(e) {
            continue;
        }
        seen.push(e.clone());
        out.push(s[i].clone());
    }
    out.sort_by(|a, b| order.cmp(&order.leading_exp(b).expect("nonzero"), &order.leading_exp(a).expect("nonzero")));
    out
}

/// Minimal generators of the leading ideal, sorted lexicographically.
pub fn leading_ideal(basis: &[Polynomial], order: &MonomialOrder) -> Vec<Exponent> {
    let leads: Vec<Exponent> = basis.iter().filter_map(|p| order.leading_exp(p)).collect();
    minimal_staircase(&leads).generators
}

pub fn is_member(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> bool {
    weak_normal_form(f, basis, order).is_zero()
}

/// Equality of the ideals generated in the local ring.
pub fn ideals_equal(a: &[Polynomial], b: &[Polynomial], order: &MonomialOrder) -> bool {
    let sa = standard_basis(a, order);
    let sb = standard_basis(b, order);
    leading_ideal(&sa, order) == leading_ideal(&sb, order)
        && a.iter().all(|f| is_member(f, &sb, order))
        && b.iter().all(|f| is_member(f, &sa, order))
}

/// Tail-reduces a standard basis so that no tail term lies in the leading
/// ideal, dropping terms whose first-weight exceeds `max_weight`. The order
/// must have a positive first weight row.
pub fn reduced_truncated(basis: &[Polynomial], order: &MonomialOrder, max_weight: i128) -> Vec<Polynomial> {
    let row = order.rows().first().expect("weighted order").clone();
    let monic: Vec<Polynomial> = basis.iter().map(|g| order.monic(g)).collect();
    let leads: Vec<Exponent> = monic.iter().map(|g| order.leading_exp(g).expect("nonzero")).collect();
    monic
        .iter()
        .zip(&leads)
        .map(|(g, lead)| {
            let mut out = Polynomial::monomial(Q::one(), lead.clone());
            let mut work = g.filter(|e| e != lead);
            while let Some((b, c)) = order.leading(&work).map(|(e, c)| (e.clone(), c.clone())) {
                if b.dot_i64(&row) > max_weight {
                    break;
                }
                match leads.iter().position(|a| a.divides(&b)) {
                    Some(k) => {
                        let m = b.checked_sub(&leads[k]).expect("divisible");
                        work = work.sub(&monic[k].mul_term(&c, &m));
                    }
                    None => {
                        out.add_term(c.clone(), b.clone());
                        work.add_term(-c, b);
                    }
                }
            }
            out
        })
        .collect()
}

/// Polynomials `a_i` with total degree at most `max_degree` and
/// `target = sum a_i gens_i`, found by linear algebra.
pub fn express_in_ideal(target: &Polynomial, gens: &[Polynomial], max_degree: u32) -> Option<Vec<Polynomial>> {
    let n = target.nvars();
    let monos = monomials_up_to(n, max_degree);
    let mut unknowns: Vec<(usize, Exponent)> = Vec::new();
    let mut products: Vec<Polynomial> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        for m in &monos {
            unknowns.push((i, m.clone()));
            products.push(g.mul_term(&Q::one(), m));
        }
    }
    let mut rows: BTreeSet<Exponent> = target.support();
    for p in &products {
        rows.extend(p.exponents().cloned());
    }
    let rows: Vec<Exponent> = rows.into_iter().collect();
    let columns: Vec<Vec<Q>> = products.iter().map(|p| rows.iter().map(|e| p.coeff(e)).collect()).collect();
    let rhs: Vec<Q> = rows.iter().map(|e| target.coeff(e)).collect();
    let x = solve(&columns, &rhs)?;
    let mut out = vec![Polynomial::zero(n); gens.len()];
    for ((i, m), c) in unknowns.into_iter().zip(x) {
        if !c.is_zero() {
            out[i].add_term(c, m);
        }
    }
    Some(out)
}

/// All exponents of total degree at most `d`, lexicographically sorted.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Exponent> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if cur.len() == n {
            out.push(Exponent(cur.clone()));
            return;
        }
        for a in 0..=left {
            cur.push(a);
            rec(n, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}
