//! Local standard bases, local Groebner cones and fans, monomial verdicts for
//! initial ideals, the local tropical variety of an ideal, and tropical
//! finite sets.
//!
//! Orders are `[w, ds]`: compare by `w`-weight (smaller is larger), then by
//! negative degree reverse lexicographic order. Reduced standard bases are
//! power series in general; they are tail-reduced up to a degree bound and
//! the resulting Groebner cones are verified at their rays, doubling the
//! bound when verification fails.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{initial_poly, stratum_of, Exponent, Polynomial, Series, Stratum, Q};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, is_unit_ideal, normal_form, saturate_by_product};
use crate::linalg::to_q;
use crate::mora::{
    express_in_ideal, ideals_equal, is_member, leading_ideal, monomials_up_to, reduce_with_trace, reduced_truncated,
    standard_basis as mora_basis,
};
use crate::order::MonomialOrder;
use crate::polyhedra::{maximal_only, validate_fan, Fan, RationalCone};
use crate::staircase::minimal_staircase;
use crate::tropical::{Certificate, OriginSemantics, ResultKind, TropicalVarietyResult};

/// Tuning knobs shared by the fan computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LgfOptions {
    /// Total-degree bound for the monomial search.
    pub bound: u32,
    /// First degree up to which reduced bases are tail-reduced.
    pub initial_degree: u32,
    /// Give up once the tail-reduction degree exceeds this.
    pub max_degree: u32,
    /// Give up once this many maximal cones have been found.
    pub max_cones: usize,
}

impl Default for LgfOptions {
    fn default() -> Self {
        LgfOptions { bound: 40, initial_degree: 8, max_degree: 512, max_cones: 2000 }
    }
}

/// The order `[w, ds]`.
pub fn local_order(w: &[Q]) -> MonomialOrder {
    let n = w.len();
    if w.iter().all(|x| x.is_zero()) {
        MonomialOrder::ds(n)
    } else {
        MonomialOrder::local(n, &[w.to_vec()])
    }
}

/// Rejects truncated series; the ideal algorithms need exact polynomials.
pub fn require_exact(gens: &[Series]) -> Result<Vec<Polynomial>> {
    if gens.is_empty() {
        return Err(Error::NoGenerators);
    }
    if gens.iter().any(|g| !g.is_exact()) {
        return Err(Error::TruncatedInput);
    }
    let n = gens[0].nvars();
    if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: g.nvars() });
    }
    let polys: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.poly().clone()).collect();
    if polys.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    Ok(polys)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasis {
    pub elements: Vec<Polynomial>,
    pub order: MonomialOrder,
    /// True when the elements are the (polynomial) reduced standard basis.
    pub reduced: bool,
    pub leading_exponents: Vec<Exponent>,
}

/// Standard basis for `[w, ds]`; tail-reduced (up to total degree
/// `degree`) when `w` is positive.
pub fn standard_basis(gens: &[Polynomial], w: &[Q], degree: u32) -> StandardBasis {
    let order = local_order(w);
    basis_for_order(gens, &order, w.iter().all(|x| x > &Q::zero()), degree)
}

fn basis_for_order(gens: &[Polynomial], order: &MonomialOrder, reduce: bool, degree: u32) -> StandardBasis {
    let sb = mora_basis(gens, order);
    let leading_exponents: Vec<Exponent> = sb.iter().map(|g| order.leading_exp(g).expect("nonzero")).collect();
    if reduce {
        let red = truncated_reduction(&sb, order, degree);
        let exact = red
            .iter()
            .zip(&leading_exponents)
            .all(|(r, e)| order.leading_exp(r).as_ref() == Some(e) && is_member(r, &sb, order));
        if exact {
            return StandardBasis { elements: red, order: order.clone(), reduced: true, leading_exponents };
        }
    }
    StandardBasis { elements: sb, order: order.clone(), reduced: false, leading_exponents }
}

fn truncated_reduction(sb: &[Polynomial], order: &MonomialOrder, degree: u32) -> Vec<Polynomial> {
    let row = &order.rows()[0];
    let max = row.iter().copied().max().unwrap_or(1).max(1) as i128;
    reduced_truncated(sb, order, max * degree as i128)
}

/// `in_w` of every standard-basis element.
pub fn initial_forms(basis: &StandardBasis, w: &[Q]) -> Vec<Polynomial> {
    basis.elements.iter().map(|g| initial_poly(g, w)).collect()
}

/// Initial forms of the standard basis for `[w, ds]`, made monic.
pub fn initial_ideal(gens: &[Polynomial], w: &[Q]) -> Vec<Polynomial> {
    let sb = standard_basis(gens, w, LgfOptions::default().initial_degree);
    initial_forms(&sb, w).iter().map(|h| sb.order.monic(h)).collect()
}

/// How a found monomial is certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Membership {
    /// The monomial reduces to zero against this Groebner basis (degree
    /// reverse lexicographic) of the initial ideal.
    InitialIdeal { basis: Vec<Polynomial> },
    /// The standard basis contains a unit, so the ideal is the whole ring.
    UnitIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum MonomialVerdict {
    Found {
        monomial: Exponent,
        certificate: Membership,
    },
    /// The saturation of the initial ideal by the product of all variables
    /// is proper; its generators are kept.
    Free {
        saturation: Vec<Polynomial>,
    },
    /// The saturation is the unit ideal but no monomial was found within the
    /// degree bound.
    Unknown {
        bound: u32,
    },
}

impl MonomialVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            MonomialVerdict::Found { .. } => "monomial",
            MonomialVerdict::Free { .. } => "free",
            MonomialVerdict::Unknown { .. } => "unknown",
        }
    }

    pub fn is_free(&self) -> bool {
        matches!(self, MonomialVerdict::Free { .. })
    }

    /// Re-checks the certificate from scratch.
    pub fn replay(&self, basis: &StandardBasis) -> bool {
        match self {
            MonomialVerdict::Found { monomial, certificate: Membership::InitialIdeal { basis: gb } } => {
                let m = Polynomial::monomial(Q::one(), monomial.clone());
                normal_form(&m, gb, &MonomialOrder::dp(m.nvars())).is_zero()
            }
            MonomialVerdict::Found { certificate: Membership::UnitIdeal, .. } => {
                basis.leading_exponents.iter().any(|e| e.is_zero())
            }
            MonomialVerdict::Free { saturation } => !is_unit_ideal(saturation),
            MonomialVerdict::Unknown { .. } => true,
        }
    }
}

/// Whether `in_w(I)` contains a monomial.
pub fn monomial_freeness(gens: &[Polynomial], w: &[Q], bound: u32) -> MonomialVerdict {
    let sb = standard_basis(gens, w, LgfOptions::default().initial_degree);
    verdict_for(gens, &sb, w, bound)
}

fn homogenize(f: &Polynomial) -> Polynomial {
    let d = f.total_degree();
    Polynomial::from_terms(f.nvars() + 1, f.terms().map(|(e, c)| (c.clone(), e.extend((d - e.degree()) as u32))))
}

/// Elements of the polynomial ideal `<gens>` whose `w`-initial forms
/// generate its initial ideal, computed from a Groebner basis of the
/// homogenization. Needed when `w` has zero entries, where the local
/// standard basis only generates the ideal up to units.
fn polynomial_initial(gens: &[Polynomial], w: &[Q]) -> (Vec<Polynomial>, Vec<Polynomial>) {
    let n = w.len();
    let top = w.iter().max().cloned().unwrap_or_else(Q::zero);
    let mut v: Vec<Q> = w.iter().map(|x| &top - x).collect();
    v.push(top);
    let hom: Vec<Polynomial> = gens.iter().map(homogenize).collect();
    let gb = groebner_basis(&hom, &MonomialOrder::global(n + 1, &[v.clone()]));
    let neg: Vec<Q> = v.iter().map(|x| -x).collect();
    let elements = gb.iter().map(|g| g.drop_last_var()).collect();
    let initial = gb.iter().map(|g| initial_poly(g, &neg).drop_last_var()).collect();
    (elements, initial)
}

fn on_boundary(w: &[Q]) -> bool {
    w.iter().any(|x| x.is_zero())
}

fn verdict_for(gens: &[Polynomial], sb: &StandardBasis, w: &[Q], bound: u32) -> MonomialVerdict {
    let n = w.len();
    if sb.leading_exponents.iter().any(|e| e.is_zero()) {
        return MonomialVerdict::Found { monomial: Exponent::zero(n), certificate: Membership::UnitIdeal };
    }
    let h = if on_boundary(w) { polynomial_initial(gens, w).1 } else { initial_forms(sb, w) };
    let saturation = saturate_by_product(&h);
    if !is_unit_ideal(&saturation) {
        return MonomialVerdict::Free { saturation };
    }
    let dp = MonomialOrder::dp(n);
    let gb = groebner_basis(&h, &dp);
    let inside = |e: &Exponent| normal_form(&Polynomial::monomial(Q::one(), e.clone()), &gb, &dp).is_zero();
    let mut k = 0u32;
    while (n as u32) * k <= bound {
        let mut m = Exponent(vec![k; n]);
        if inside(&m) {
            for i in (0..n).rev() {
                while m.0[i] > 0 {
                    let mut smaller = m.clone();
                    smaller.0[i] -= 1;
                    if !inside(&smaller) {
                        break;
                    }
                    m = smaller;
                }
            }
            return MonomialVerdict::Found { monomial: m, certificate: Membership::InitialIdeal { basis: gb } };
        }
        k += 1;
    }
    MonomialVerdict::Unknown { bound }
}

/// A maximal cone found by the traversal, with the data that produced it.
#[derive(Clone, Debug)]
struct Chamber {
    cone: RationalCone,
    leading: Vec<Exponent>,
}

fn cone_of(reduced: &[Polynomial], order: &MonomialOrder, n: usize) -> RationalCone {
    let mut ineqs: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    for r in reduced {
        let lead = order.leading_exp(r).expect("nonzero");
        let tails: Vec<Exponent> = r.exponents().filter(|e| **e != lead).cloned().collect();
        for g in minimal_staircase(&tails).generators {
            ineqs.push(g.0.iter().zip(&lead.0).map(|(&a, &b)| a as i64 - b as i64).collect());
        }
    }
    RationalCone::new(n, vec![], ineqs)
}

/// The closed maximal cone whose interior orders refine to `order`.
fn chamber(gens: &[Polynomial], order: &MonomialOrder, opts: &LgfOptions) -> Result<Chamber> {
    let n = order.nvars();
    let sb = mora_basis(gens, order);
    let leading = leading_ideal(&sb, order);
    let mut degree = opts.initial_degree.max(1);
    loop {
        let red = truncated_reduction(&sb, order, degree);
        let cone = cone_of(&red, order, n);
        let verified = cone.rays().iter().all(|r| {
            let o = order.refined_by(&to_q(r));
            leading_ideal(&mora_basis(gens, &o), &o) == leading
        });
        if verified {
            return Ok(Chamber { cone, leading });
        }
        degree *= 2;
        if degree > opts.max_degree {
            return Err(Error::PrecisionExhausted(opts.max_degree));
        }
    }
}

fn is_coordinate(a: &[i64]) -> bool {
    a.iter().filter(|&&x| x != 0).count() == 1 && a.iter().all(|&x| x >= 0)
}

fn format_point(p: &[Q]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Per-cone data of the local Groebner fan.
#[derive(Clone, Debug)]
pub struct GroebnerCone {
    pub cone: RationalCone,
    pub stratum: Stratum,
    /// The relative interior point the data was computed at.
    pub sample: Vec<Q>,
    pub basis: StandardBasis,
    pub initial_forms: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct LocalGroebnerFan {
    pub fan: Fan,
    /// Aligned with `fan.cones()`.
    pub cones: Vec<GroebnerCone>,
    pub verdicts: Vec<MonomialVerdict>,
    /// Minimal generators of the leading ideal of each maximal cone.
    pub leading_ideals: Vec<(usize, Vec<Exponent>)>,
    pub warnings: Vec<String>,
}

impl LocalGroebnerFan {
    pub fn maximal(&self) -> Vec<usize> {
        let n = self.fan.ambient();
        (0..self.fan.len()).filter(|&i| self.fan.cones()[i].dim() == n).collect()
    }

    /// Index of the cone whose relative interior contains `w`.
    pub fn locate(&self, w: &[Q]) -> Option<usize> {
        if w.iter().all(|x| x.is_zero()) {
            return self.fan.cones().iter().position(|c| c.is_origin());
        }
        self.fan.cones().iter().position(|c| !c.is_origin() && c.relint_contains(w))
    }
}

fn cone_data(gens: &[Polynomial], cone: &RationalCone, degree: u32) -> GroebnerCone {
    let sample = cone.interior_point_or_origin();
    let basis = standard_basis(gens, &sample, degree);
    let initial_forms = initial_forms(&basis, &sample);
    GroebnerCone { cone: cone.clone(), stratum: cone.stratum(), sample, basis, initial_forms }
}

fn traverse(gens: &[Polynomial], n: usize, opts: &LgfOptions) -> Result<Vec<Chamber>> {
    let mut chambers: Vec<Chamber> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(MonomialOrder::local(n, &[vec![Q::one(); n]]));
    while let Some(order) = queue.pop_front() {
        let ch = chamber(gens, &order, opts)?;
        if chambers.iter().any(|c| c.cone == ch.cone) {
            continue;
        }
        for (a, facet) in ch.cone.facets() {
            if is_coordinate(&a) || chambers.iter().any(|c| facet.is_face_of(&c.cone)) {
                continue;
            }
            let q = facet.relative_interior_point()?;
            let away: Vec<Q> = a.iter().map(|&x| Q::from_integer((-x).into())).collect();
            queue.push_back(MonomialOrder::local(n, &[q, away]));
        }
        chambers.push(ch);
        if chambers.len() > opts.max_cones {
            return Err(Error::TraversalIncomplete(format!("more than {} cones", opts.max_cones)));
        }
    }
    for ch in &chambers {
        for (a, facet) in ch.cone.facets() {
            if is_coordinate(&a) {
                continue;
            }
            let sharing = chambers.iter().filter(|c| facet.is_face_of(&c.cone)).count();
            if sharing != 2 {
                let p = facet.interior_point_or_origin();
                return Err(Error::TraversalIncomplete(format_point(&p)));
            }
        }
    }
    Ok(chambers)
}

/// Every facet of a maximal cone lies in a coordinate hyperplane or is shared
/// by exactly two maximal cones.
pub fn covering_test(lgf: &LocalGroebnerFan) -> bool {
    let maximal: Vec<&RationalCone> = lgf.maximal().into_iter().map(|i| &lgf.fan.cones()[i]).collect();
    maximal.iter().all(|c| {
        c.facets().iter().all(|(a, f)| is_coordinate(a) || maximal.iter().filter(|d| f.is_face_of(d)).count() == 2)
    })
}

/// The reduced standard basis for `[w, ds]` (`w` positive), keeping the
/// terms of total degree at most `degree`; these terms are exact.
pub fn truncated_reduced_basis(gens: &[Polynomial], w: &[Q], degree: u32) -> Vec<Polynomial> {
    let order = local_order(w);
    let sb = mora_basis(gens, &order);
    let mut out: Vec<Polynomial> =
        truncated_reduction(&sb, &order, degree).iter().map(|r| r.filter(|e| e.degree() <= degree as u64)).collect();
    out.sort_by(|a, b| a.terms().map(|t| t.0).cmp(b.terms().map(|t| t.0)));
    out
}

/// The local Groebner fan: maximal cones by facet-crossing traversal of the
/// orthant, closed under faces, with per-cone bases and monomial verdicts.
pub fn local_groebner_fan(gens: &[Polynomial], opts: &LgfOptions) -> Result<LocalGroebnerFan> {
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let n = gens.first().ok_or(Error::ZeroIdeal)?.nvars();
    let chambers = traverse(&gens, n, opts)?;
    let maximal: Vec<RationalCone> = chambers.iter().map(|c| c.cone.clone()).collect();
    let fan = validate_fan(n, &maximal)?;
    let cones: Vec<GroebnerCone> = fan.cones().iter().map(|c| cone_data(&gens, c, opts.initial_degree)).collect();
    let verdicts: Vec<MonomialVerdict> =
        cones.iter().map(|c| verdict_for(&gens, &c.basis, &c.sample, opts.bound)).collect();
    let leading_ideals =
        chambers.iter().map(|c| (fan.index_of(&c.cone).expect("maximal cone in fan"), c.leading.clone())).collect();
    let mut warnings = Vec::new();
    if verdicts.iter().any(|v| matches!(v, MonomialVerdict::Found { certificate: Membership::UnitIdeal, .. })) {
        warnings.push("unit ideal".to_string());
    }
    Ok(LocalGroebnerFan { fan, cones, verdicts, leading_ideals, warnings })
}

/// The Groebner cone of `w`: the closed cone of weights with the same
/// support and the same initial ideal.
pub fn groebner_cone(gens: &[Polynomial], w: &[Q], opts: &LgfOptions) -> Result<GroebnerCone> {
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    stratum_of(w)?;
    let cone = if w.iter().all(|x| x > &Q::zero()) {
        let ch = chamber(&gens, &local_order(w), opts)?;
        ch.cone.face_containing(w).expect("weight lies in its chamber")
    } else {
        let lgf = local_groebner_fan(&gens, opts)?;
        let i = lgf.locate(w).ok_or_else(|| Error::TraversalIncomplete(format_point(w)))?;
        lgf.fan.cones()[i].clone()
    };
    let basis = standard_basis(&gens, w, opts.initial_degree);
    let initial_forms = initial_forms(&basis, w);
    Ok(GroebnerCone { stratum: cone.stratum(), cone, sample: w.to_vec(), basis, initial_forms })
}

/// The local tropical variety as the subfan of monomial-free cones of the
/// local Groebner fan. The origin is included iff `I = in_0(I)` is
/// monomial-free.
pub fn tropvar_general(gens: &[Polynomial], opts: &LgfOptions) -> Result<(TropicalVarietyResult, LocalGroebnerFan)> {
    let lgf = local_groebner_fan(gens, opts)?;
    let result = variety_of_fan(&lgf)?;
    Ok((result, lgf))
}

/// The monomial-free subfan of an already computed local Groebner fan.
pub fn variety_of_fan(lgf: &LocalGroebnerFan) -> Result<TropicalVarietyResult> {
    let n = lgf.fan.ambient();
    let mut warnings = lgf.warnings.clone();
    for (i, v) in lgf.verdicts.iter().enumerate() {
        if let MonomialVerdict::Unknown { bound } = v {
            warnings.push(format!(
                "cone {i}: no monomial found up to degree {bound} although the saturation is the unit ideal"
            ));
        }
    }
    let free: Vec<RationalCone> =
        lgf.verdicts.iter().enumerate().filter(|(_, v)| v.is_free()).map(|(i, _)| lgf.fan.cones()[i].clone()).collect();
    let kept = maximal_only(free);
    let fan = if kept.is_empty() { Fan::empty(n) } else { validate_fan(n, &kept)? };
    let mut certificates = Vec::new();
    for c in fan.cones() {
        let id = lgf.fan.index_of(c).ok_or(Error::NotAFan(0, 0))?;
        if !lgf.verdicts[id].is_free() {
            warnings
                .push(format!("cone {id} is a face of a monomial-free cone but its initial ideal contains a monomial"));
        }
        certificates.push(Certificate::GroebnerCone { id });
    }
    let strata: BTreeSet<Stratum> = fan.cones().iter().map(|c| c.stratum()).collect();
    let mut strata_touched: Vec<Stratum> = strata.into_iter().collect();
    strata_touched.sort_by(|a, b| b.zero_set().len().cmp(&a.zero_set().len()).then(a.cmp(b)));
    let result = TropicalVarietyResult {
        kind: ResultKind::Variety,
        fan,
        certificates,
        strata_touched,
        origin_semantics: OriginSemantics::MonomialTest,
        soundness: crate::staircase::Soundness::Exact,
        warnings,
    };
    Ok(result)
}

/// Compares `in_{w'+eps w}(I)` with `in_w(in_{w'}(I))`.
pub fn twin_check(gens: &[Polynomial], w_prime: &[Q], w: &[Q]) -> bool {
    let n = w.len();
    let stacked = MonomialOrder::local(n, &[w_prime.to_vec(), w.to_vec()]);
    let direct: Vec<Polynomial> =
        mora_basis(gens, &stacked).iter().map(|g| initial_poly(&initial_poly(g, w_prime), w)).collect();
    let first = local_order(w_prime);
    let outer: Vec<Polynomial> = mora_basis(gens, &first).iter().map(|g| initial_poly(g, w_prime)).collect();
    let inner_order = local_order(w).refined_by(w_prime);
    let two_step: Vec<Polynomial> = mora_basis(&outer, &inner_order).iter().map(|g| initial_poly(g, w)).collect();
    ideals_equal(&direct, &two_step, &MonomialOrder::ds(n))
}

/// An element of the ideal whose initial form is a fixed monomial on the
/// whole relative interior of one cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub cone_id: usize,
    pub monomial: Exponent,
    pub element: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalFiniteSet {
    /// Distinct lifted elements up to scaling (monic for `dp`), in order of
    /// first appearance.
    pub elements: Vec<Polynomial>,
    pub lifts: Vec<Lift>,
    /// Cones whose monomial could not be lifted.
    pub failures: Vec<usize>,
}

/// Checks that `in_u(f)` is the single term `m` for every `u` in the
/// relative interior of `cone`.
pub fn certifies(f: &Polynomial, m: &Exponent, cone: &RationalCone) -> bool {
    if f.coeff(m).is_zero() {
        return false;
    }
    let rays = cone.rays();
    let p = cone.interior_point_or_origin();
    f.exponents().filter(|g| *g != m).all(|g| strictly_above(g, m, &rays, &p))
}

/// `g` has larger weight than `m` on the relative interior of the cone
/// spanned by `rays` (with relative interior point `p`).
fn strictly_above(g: &Exponent, m: &Exponent, rays: &[Vec<i64>], p: &[Q]) -> bool {
    let d: Vec<i64> = g.0.iter().zip(&m.0).map(|(&a, &b)| a as i64 - b as i64).collect();
    rays.iter().all(|r| d.iter().zip(r).map(|(a, b)| a * b).sum::<i64>() >= 0)
        && crate::linalg::dot(&to_q(&d), p) > Q::zero()
}

/// Searches `f = sum a_i g_i` with `deg a_i <= degree` whose only term not
/// strictly above `m` on the cone is `m` itself.
fn lift_by_search(gens: &[Polynomial], m: &Exponent, cone: &RationalCone, degree: u32) -> Option<Polynomial> {
    let n = m.nvars();
    let rays = cone.rays();
    let p = cone.interior_point_or_origin();
    let products: Vec<Polynomial> = gens
        .iter()
        .flat_map(|g| monomials_up_to(n, degree).into_iter().map(move |e| g.mul_term(&Q::one(), &e)))
        .collect();
    let mut rows: BTreeSet<Exponent> = products
        .iter()
        .flat_map(|f| f.exponents().cloned().collect::<Vec<_>>())
        .filter(|g| !strictly_above(g, m, &rays, &p))
        .collect();
    rows.insert(m.clone());
    let rows: Vec<Exponent> = rows.into_iter().collect();
    let columns: Vec<Vec<Q>> = products.iter().map(|f| rows.iter().map(|e| f.coeff(e)).collect()).collect();
    let target: Vec<Q> = rows.iter().map(|e| if e == m { Q::one() } else { Q::zero() }).collect();
    let x = crate::linalg::solve(&columns, &target)?;
    let mut f = Polynomial::zero(n);
    for (c, g) in x.iter().zip(&products) {
        if !c.is_zero() {
            f = f.add(&g.scale(c));
        }
    }
    Some(f)
}

/// Keeps the part of each coefficient polynomial that makes `a_i * h_i`
/// homogeneous of the weight of `m`.
fn homogeneous_combination(
    coeffs: &[Polynomial],
    h: &[Polynomial],
    basis: &[Polynomial],
    m: &Exponent,
    w: &[Q],
) -> Polynomial {
    let target = m.dot(w);
    let mut f = Polynomial::zero(m.nvars());
    for ((a, hi), g) in coeffs.iter().zip(h).zip(basis) {
        let Some(e) = hi.exponents().next() else { continue };
        let need = &target - e.dot(w);
        let part = a.filter(|x| x.dot(w) == need);
        if !part.is_zero() {
            f = f.add(&part.mul(g));
        }
    }
    f
}

/// Lifts are built from a standard basis whose elements are polynomial
/// combinations of the generators, so every lift lies in the polynomial
/// ideal as well as in its localisation.
fn lift_monomial(
    gens: &[Polynomial],
    global: &[Polynomial],
    gc: &GroebnerCone,
    m: &Exponent,
    bound: u32,
) -> Option<Polynomial> {
    let n = m.nvars();
    let mono = Polynomial::monomial(Q::one(), m.clone());
    if normal_form(&mono, global, &MonomialOrder::dp(n)).is_zero() {
        return Some(mono);
    }
    let w = &gc.sample;
    let order = &gc.basis.order;
    let sb = mora_basis(gens, order);
    let h: Vec<Polynomial> = sb.iter().map(|g| initial_poly(g, w)).collect();
    let mut candidates = vec![(sb, h)];
    if on_boundary(w) {
        candidates.push(polynomial_initial(gens, w));
    }
    for (basis, h) in &candidates {
        let trace = reduce_with_trace(&mono, h, order);
        if trace.remainder.is_zero() {
            let f = homogeneous_combination(&trace.quotients, h, basis, m, w);
            if certifies(&f, m, &gc.cone) {
                return Some(f);
            }
        }
        for d in 0..=bound.min(m.degree() as u32 + 4) {
            if let Some(a) = express_in_ideal(&mono, h, d) {
                let f = homogeneous_combination(&a, h, basis, m, w);
                if certifies(&f, m, &gc.cone) {
                    return Some(f);
                }
            }
        }
    }
    (0..=bound.min(4)).find_map(|d| lift_by_search(gens, m, &gc.cone, d))
}

/// For every cone of the fan whose initial ideal contains a monomial, an
/// element of `I` with that monomial as initial form across the cone.
pub fn tropical_finite_set(gens: &[Polynomial], lgf: &LocalGroebnerFan, bound: u32) -> TropicalFiniteSet {
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let global = groebner_basis(&gens, &MonomialOrder::dp(lgf.fan.ambient()));
    let mut lifts = Vec::new();
    let mut failures = Vec::new();
    for (id, (gc, v)) in lgf.cones.iter().zip(&lgf.verdicts).enumerate() {
        let MonomialVerdict::Found { monomial, .. } = v else { continue };
        match lift_monomial(&gens, &global, gc, monomial, bound) {
            Some(f) => lifts.push(Lift { cone_id: id, monomial: monomial.clone(), element: f }),
            None => failures.push(id),
        }
    }
    let dp = MonomialOrder::dp(lgf.fan.ambient());
    let mut elements: Vec<Polynomial> = Vec::new();
    for l in &lifts {
        let scaled = dp.monic(&l.element);
        if !elements.contains(&scaled) {
            elements.push(scaled);
        }
    }
    TropicalFiniteSet { elements, lifts, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qf};

    fn p2(t: &[(i64, i64, &[u32])]) -> Polynomial {
        Polynomial::from_ints(2, t)
    }

    fn sample_p() -> Polynomial {
        p2(&[(1, 1, &[1, 1]), (-1, 1, &[2, 0]), (1, 2, &[2, 1]), (1, 6, &[3, 1])])
    }

    fn e(v: &[u32]) -> Exponent {
        Exponent(v.to_vec())
    }

    fn w(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn standard_bases() {
        let one = vec![Polynomial::from_ints(1, &[(1, 1, &[1]), (-1, 1, &[2])])];
        let sb = standard_basis(&one, &w(&[1]), 8);
        assert!(sb.reduced);
        assert_eq!(sb.elements, vec![Polynomial::from_ints(1, &[(1, 1, &[1])])]);
        let g = vec![p2(&[(1, 1, &[2, 0]), (-1, 1, &[0, 3])]), p2(&[(1, 1, &[1, 1])])];
        let sb = standard_basis(&g, &w(&[1, 1]), 8);
        let mut lead = sb.leading_exponents.clone();
        lead.sort();
        assert_eq!(lead, vec![e(&[0, 4]), e(&[1, 1]), e(&[2, 0])]);
    }

    #[test]
    fn initial_ideals_of_example() {
        let i = initial_ideal(&[sample_p()], &w(&[1, 1]));
        assert_eq!(i, vec![p2(&[(1, 1, &[2, 0]), (-1, 1, &[1, 1])])]);
        assert_eq!(initial_ideal(&[sample_p()], &w(&[2, 1])), vec![p2(&[(1, 1, &[1, 1])])]);
    }

    #[test]
    fn cones_of_example() {
        let o = LgfOptions::default();
        let c = groebner_cone(&[sample_p()], &w(&[1, 1]), &o).unwrap();
        assert_eq!(c.cone, RationalCone::ray(&[1, 1]));
        let c = groebner_cone(&[sample_p()], &w(&[2, 1]), &o).unwrap();
        assert_eq!(c.cone, RationalCone::new(2, vec![], vec![vec![0, 1], vec![1, -1]]));
        let x = vec![p2(&[(1, 1, &[1, 0])])];
        assert_eq!(groebner_cone(&x, &w(&[1, 1]), &o).unwrap().cone, RationalCone::orthant(2));
    }

    #[test]
    fn fan_and_variety_of_example() {
        let o = LgfOptions::default();
        let (t, lgf) = tropvar_general(&[sample_p()], &o).unwrap();
        assert_eq!(lgf.maximal().len(), 2);
        assert_eq!(t.fan.cones(), &[RationalCone::origin(2), RationalCone::ray(&[1, 1])]);
        let h = tropical_finite_set(&[sample_p()], &lgf, o.bound);
        assert!(h.failures.is_empty());
        assert!(h.elements.contains(&MonomialOrder::dp(2).monic(&sample_p())));
    }

    #[test]
    fn verdicts() {
        assert!(monomial_freeness(&[sample_p()], &w(&[1, 1]), 20).is_free());
        let g = vec![p2(&[(1, 1, &[1, 0]), (-1, 1, &[0, 1])]), p2(&[(1, 1, &[1, 0]), (1, 1, &[0, 1])])];
        match monomial_freeness(&g, &w(&[1, 1]), 20) {
            MonomialVerdict::Found { monomial, .. } => assert_eq!(monomial, e(&[1, 0])),
            v => panic!("unexpected {v:?}"),
        }
        match monomial_freeness(&[Polynomial::one(2)], &[qf(1, 2), q(0)], 20) {
            MonomialVerdict::Found { monomial, .. } => assert!(monomial.is_zero()),
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn twins() {
        assert!(twin_check(&[sample_p()], &w(&[0, 0]), &w(&[1, 1])));
        assert!(twin_check(&[sample_p()], &w(&[1, 1]), &w(&[2, 1])));
        assert!(twin_check(&[p2(&[(1, 1, &[1, 2])])], &w(&[1, 0]), &w(&[1, 1])));
    }

    #[test]
    fn unit_and_monomial_ideals() {
        let o = LgfOptions::default();
        let (t, lgf) = tropvar_general(&[Polynomial::one(2)], &o).unwrap();
        assert!(t.fan.is_empty());
        assert_eq!(lgf.maximal().len(), 1);
        assert!(t.warnings.iter().any(|w| w == "unit ideal"));
        let x = vec![p2(&[(1, 1, &[1, 0])])];
        let (t, lgf) = tropvar_general(&x, &o).unwrap();
        assert!(t.fan.is_empty());
        assert_eq!(tropical_finite_set(&x, &lgf, o.bound).elements, x);
    }
}
