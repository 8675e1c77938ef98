//! Buchberger's algorithm for global monomial orders, used for saturations
//! and ideal membership in the polynomial ring.

use std::collections::BTreeSet;

use crate::algebra::{Exponent, Polynomial, Q};
use crate::order::MonomialOrder;

/// Full normal form of `f` modulo `g` (every term is reduced).
pub fn normal_form(f: &Polynomial, g: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let leads: Vec<(Exponent, Q)> = g
        .iter()
        .map(|p| {
            let (e, c) = order.leading(p).expect("nonzero basis element");
            (e.clone(), c.clone())
        })
        .collect();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(f.nvars());
    while let Some((e, c)) = order.leading(&p).map(|(e, c)| (e.clone(), c.clone())) {
        match leads.iter().position(|(l, _)| l.divides(&e)) {
            Some(i) => {
                let m = e.checked_sub(&leads[i].0).expect("divisible");
                let factor = &c / &leads[i].1;
                p = p.sub(&g[i].mul_term(&factor, &m));
            }
            None => {
                rem.add_term(c.clone(), e.clone());
                p.add_term(-c, e);
            }
        }
    }
    rem
}

fn s_poly(a: &Polynomial, b: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (ea, ca) = order.leading(a).expect("nonzero");
    let (eb, cb) = order.leading(b).expect("nonzero");
    let l = ea.lcm(eb);
    let ma = l.checked_sub(ea).expect("lcm");
    let mb = l.checked_sub(eb).expect("lcm");
    a.mul_term(&ca.recip(), &ma).sub(&b.mul_term(&cb.recip(), &mb))
}

/// Reduced Groebner basis, monic and sorted by leading monomial (largest
/// first). The zero ideal gives an empty basis.
pub fn groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let r = normal_form(g, &basis, order);
        if !r.is_zero() {
            basis.push(order.monic(&r));
        }
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    while let Some(&(i, j)) = pairs.iter().min_by_key(|(i, j)| {
        let a = order.leading_exp(&basis[*i]).expect("nonzero");
        let b = order.leading_exp(&basis[*j]).expect("nonzero");
        (a.lcm(&b).degree(), *i, *j)
    }) {
        pairs.remove(&(i, j));
        let a = order.leading_exp(&basis[i]).expect("nonzero");
        let b = order.leading_exp(&basis[j]).expect("nonzero");
        if a.is_coprime(&b) {
            continue;
        }
        let r = normal_form(&s_poly(&basis[i], &basis[j], order), &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(order.monic(&r));
            for i in 0..k {
                pairs.insert((i, k));
            }
        }
    }
    reduce_basis(basis, order)
}

fn reduce_basis(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    let leads: Vec<Exponent> = basis.iter().map(|p| order.leading_exp(p).expect("nonzero")).collect();
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let redundant =
            leads.iter().enumerate().any(|(j, l)| j != i && l.divides(&leads[i]) && (l != &leads[i] || j < i));
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut out: Vec<Polynomial> = Vec::new();
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
        let lead = order.leading(&minimal[i]).map(|(e, c)| (e.clone(), c.clone()));
        let (e, c) = lead.expect("nonzero");
        let tail = minimal[i].filter(|x| x != &e);
        let mut r = normal_form(&tail, &others, order);
        r.add_term(c, e);
        out.push(order.monic(&r));
    }
    out.sort_by(|a, b| order.cmp(&order.leading_exp(b).expect("nonzero"), &order.leading_exp(a).expect("nonzero")));
    out
}

pub fn is_unit_ideal(basis: &[Polynomial]) -> bool {
    basis.iter().any(|p| p.len() == 1 && p.terms().next().map(|(e, _)| e.is_zero()).unwrap_or(false))
}

/// Generators of `<gens> : (x_1 ... x_n)^infinity` in `Q[x]`.
pub fn saturate_by_product(gens: &[Polynomial]) -> Vec<Polynomial> {
    let n = gens.first().map(|g| g.nvars()).unwrap_or(0);
    let mut ext: Vec<Polynomial> = gens.iter().map(|g| g.extend_vars()).collect();
    let mut rab = Polynomial::one(n + 1);
    let mut all = vec![1u32; n];
    all.push(1);
    rab.add_term(-Q::from_integer(1.into()), Exponent(all));
    ext.push(rab);
    let order = MonomialOrder::eliminate_last(n + 1);
    let gb = groebner_basis(&ext, &order);
    let free: Vec<Polynomial> =
        gb.into_iter().filter(|p| p.exponents().all(|e| e.0[n] == 0)).map(|p| p.drop_last_var()).collect();
    groebner_basis(&free, &MonomialOrder::dp(n))
}

pub fn contains(basis: &[Polynomial], f: &Polynomial, order: &MonomialOrder) -> bool {
    normal_form(f, basis, order).is_zero()
}
