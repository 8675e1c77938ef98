//! Min-plus evaluation, tropical hypersurface fans on strata, local tropical
//! hypersurfaces of series and tropical prevarieties of generator lists.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{enumerate_strata, Exponent, Polynomial, Series, Stratum, WeightVector, Q};
use crate::error::{Error, Result};
use crate::linalg::primitive_integer;
use crate::polyhedra::{maximal_only, validate_fan, Fan, RationalCone};
use crate::staircase::{hat_poly, Soundness};

/// A finite min-plus polynomial `min_i (c_i + a_i . w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalPolynomial {
    nvars: usize,
    monomials: Vec<(Q, Exponent)>,
}

impl TropicalPolynomial {
    pub fn new(nvars: usize, monomials: Vec<(Q, Exponent)>) -> Self {
        TropicalPolynomial { nvars, monomials }
    }

    /// The tropicalisation of a polynomial with constant coefficients: every
    /// coefficient is zero.
    pub fn of_polynomial(p: &Polynomial) -> Self {
        Self::new(p.nvars(), p.exponents().map(|e| (Q::zero(), e.clone())).collect())
    }

    pub fn of_series(f: &Series) -> Self {
        Self::of_polynomial(f.poly())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn monomials(&self) -> &[(Q, Exponent)] {
        &self.monomials
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    fn values(&self, w: &[Q]) -> Result<Vec<Q>> {
        if self.monomials.is_empty() {
            return Err(Error::EmptyTropicalPolynomial);
        }
        if w.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: w.len() });
        }
        Ok(self.monomials.iter().map(|(c, a)| c + a.dot(w)).collect())
    }

    /// Minimum over the monomials at an arbitrary rational point.
    pub fn eval_at(&self, w: &[Q]) -> Result<Q> {
        let v = self.values(w)?;
        Ok(v.into_iter().min().expect("nonempty"))
    }

    /// Indices of the monomials attaining the minimum.
    pub fn argmin(&self, w: &[Q]) -> Result<Vec<usize>> {
        let v = self.values(w)?;
        let m = v.iter().min().expect("nonempty").clone();
        Ok((0..v.len()).filter(|&i| v[i] == m).collect())
    }

    pub fn min_twice_at(&self, w: &[Q]) -> bool {
        self.argmin(w).map(|a| a.len() >= 2).unwrap_or(false)
    }

    /// Two lexicographically smallest exponents attaining the minimum.
    pub fn witness_at(&self, w: &[Q]) -> Option<(Exponent, Exponent)> {
        let mut e: Vec<Exponent> = self.argmin(w).ok()?.into_iter().map(|i| self.monomials[i].1.clone()).collect();
        e.sort();
        e.dedup();
        if e.len() < 2 {
            return None;
        }
        Some((e[0].clone(), e[1].clone()))
    }
}

pub fn trop_eval(f: &TropicalPolynomial, w: &WeightVector) -> Result<Q> {
    f.eval_at(w.entries())
}

pub fn min_twice(f: &TropicalPolynomial, w: &WeightVector) -> bool {
    f.min_twice_at(w.entries())
}

fn diff(a: &Exponent, b: &Exponent) -> Vec<i64> {
    a.0.iter().zip(&b.0).map(|(&x, &y)| x as i64 - y as i64).collect()
}

/// Tie cones of `f` inside the closure of the stratum whose relative interior
/// lies in the open stratum, keeping only the inclusion-maximal ones.
pub fn hypersurface_fan(f: &TropicalPolynomial, stratum: &Stratum) -> Result<Vec<RationalCone>> {
    if f.monomials.iter().any(|(c, _)| !c.is_zero()) {
        return Err(Error::NonConstantCoefficients);
    }
    if stratum.nvars() != f.nvars {
        return Err(Error::DimensionMismatch { expected: f.nvars, found: stratum.nvars() });
    }
    let exps: Vec<Exponent> = f.monomials.iter().map(|(_, e)| e.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    let closure = RationalCone::stratum_closure(stratum);
    let mut cones = Vec::new();
    for i in 0..exps.len() {
        for j in (i + 1)..exps.len() {
            let (a, b) = (&exps[i], &exps[j]);
            let ineqs: Vec<Vec<i64>> = exps.iter().filter(|g| *g != a && *g != b).map(|g| diff(g, a)).collect();
            let tie = RationalCone::raw(f.nvars, vec![diff(a, b)], ineqs);
            let cone = closure.intersect(&tie);
            if stratum.contains(&cone.interior_point_or_origin()) {
                cones.push(cone);
            }
        }
    }
    Ok(maximal_only(cones))
}

/// How the origin stratum is treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OriginSemantics {
    /// The surrogate polynomial on the origin stratum is zero, so the origin
    /// always belongs to the variety.
    #[serde(rename = "definition")]
    Definition,
    /// The origin belongs to the variety iff the ideal contains no monomial.
    #[serde(rename = "monomial-test")]
    MonomialTest,
}

impl OriginSemantics {
    pub fn name(&self) -> &'static str {
        match self {
            OriginSemantics::Definition => "definition",
            OriginSemantics::MonomialTest => "monomial-test",
        }
    }
}

/// Why a cone belongs to a result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Two exponents attaining the minimum at the relative interior point.
    WitnessPair { alpha: Exponent, beta: Exponent },
    /// One witness pair per generator.
    WitnessPairs { pairs: Vec<(Exponent, Exponent)> },
    /// Index of the local Groebner fan cone with a monomial-free initial ideal.
    GroebnerCone { id: usize },
    /// Included by the origin-stratum convention.
    OriginConvention,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultKind {
    Hypersurface,
    Prevariety,
    Variety,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalVarietyResult {
    pub kind: ResultKind,
    pub fan: Fan,
    /// Aligned with `fan.cones()`.
    pub certificates: Vec<Certificate>,
    pub strata_touched: Vec<Stratum>,
    pub origin_semantics: OriginSemantics,
    pub soundness: Soundness,
    pub warnings: Vec<String>,
}

impl TropicalVarietyResult {
    /// Membership of a point in the union of the cones.
    pub fn contains(&self, w: &[Q]) -> bool {
        self.fan.contains_point(w)
    }

    /// Primitive generators of the one-dimensional cones.
    pub fn ray_directions(&self) -> Vec<Vec<i64>> {
        self.fan
            .cones()
            .iter()
            .filter(|c| c.dim() == 1)
            .map(|c| primitive_integer(&c.interior_point_or_origin()))
            .collect()
    }
}

fn is_unit(f: &Series) -> bool {
    !f.poly().constant_term().is_zero()
}

fn strata_of(fan: &Fan) -> Vec<Stratum> {
    let set: BTreeSet<Stratum> = fan.cones().iter().map(|c| c.stratum()).collect();
    let mut v: Vec<Stratum> = set.into_iter().collect();
    v.sort_by(|a, b| b.zero_set().len().cmp(&a.zero_set().len()).then(a.cmp(b)));
    v
}

fn witness_for(f: &Series, p: &[Q]) -> Option<(Exponent, Exponent)> {
    let stratum = crate::algebra::stratum_of(p).ok()?;
    let surrogate = if stratum.is_origin() { f.clone() } else { hat_poly(f, &stratum) };
    TropicalPolynomial::of_series(&surrogate).witness_at(p)
}

/// Origin membership under the chosen semantics for a list of generators.
fn origin_included(gens: &[Series], semantics: OriginSemantics) -> bool {
    match semantics {
        OriginSemantics::Definition => true,
        OriginSemantics::MonomialTest => gens.iter().all(|g| !is_unit(g) && g.poly().len() >= 2),
    }
}

fn empty_result(
    kind: ResultKind,
    n: usize,
    semantics: OriginSemantics,
    soundness: Soundness,
    warnings: Vec<String>,
) -> TropicalVarietyResult {
    TropicalVarietyResult {
        kind,
        fan: Fan::empty(n),
        certificates: vec![],
        strata_touched: vec![],
        origin_semantics: semantics,
        soundness,
        warnings,
    }
}

/// Cones of one stratum: common refinement of the generators' hat
/// hypersurface fans, kept where the relative interior meets the stratum.
fn stratum_cones(gens: &[Series], stratum: &Stratum) -> Result<Vec<RationalCone>> {
    let mut acc = vec![RationalCone::stratum_closure(stratum)];
    for g in gens {
        let hat = hat_poly(g, stratum);
        let cones = hypersurface_fan(&TropicalPolynomial::of_series(&hat), stratum)?;
        let mut next = Vec::new();
        for a in &acc {
            for c in &cones {
                let m = a.intersect(c);
                if stratum.contains(&m.interior_point_or_origin()) {
                    next.push(m);
                }
            }
        }
        acc = maximal_only(next);
        if acc.is_empty() {
            break;
        }
    }
    Ok(acc)
}

fn assemble(gens: &[Series], kind: ResultKind, semantics: OriginSemantics) -> Result<TropicalVarietyResult> {
    let n = gens[0].nvars();
    let soundness =
        if gens.iter().all(|g| g.is_exact()) { Soundness::Exact } else { Soundness::CompleteIfTailDominated };
    let mut warnings = Vec::new();
    if gens.iter().any(is_unit) {
        warnings.push("unit ideal: a generator has a nonzero constant term".to_string());
        if semantics == OriginSemantics::MonomialTest {
            return Ok(empty_result(kind, n, semantics, soundness, warnings));
        }
    }
    let mut strata = enumerate_strata(n);
    strata.sort_by_key(|s| s.zero_set().len());
    let mut cones = Vec::new();
    for s in strata.iter().filter(|s| !s.is_origin()) {
        cones.extend(stratum_cones(gens, s)?);
    }
    let with_origin = origin_included(gens, semantics);
    if with_origin {
        cones.push(RationalCone::origin(n));
    }
    if cones.is_empty() {
        return Ok(empty_result(kind, n, semantics, soundness, warnings));
    }
    let fan = validate_fan(n, &cones)?;
    let certificates = fan
        .cones()
        .iter()
        .map(|c| {
            let p = c.interior_point_or_origin();
            let pairs: Option<Vec<(Exponent, Exponent)>> = gens.iter().map(|g| witness_for(g, &p)).collect();
            match pairs {
                Some(mut v) if v.len() == 1 => {
                    let (alpha, beta) = v.remove(0);
                    Certificate::WitnessPair { alpha, beta }
                }
                Some(v) => Certificate::WitnessPairs { pairs: v },
                None => Certificate::OriginConvention,
            }
        })
        .collect();
    let strata_touched = strata_of(&fan);
    Ok(TropicalVarietyResult {
        kind,
        fan,
        certificates,
        strata_touched,
        origin_semantics: semantics,
        soundness,
        warnings,
    })
}

/// The local tropical hypersurface of a series: on every stratum the tie
/// cones of the hat polynomial, glued by closure.
pub fn local_trop_hypersurface(f: &Series, semantics: OriginSemantics) -> Result<TropicalVarietyResult> {
    if f.is_zero() {
        return Err(Error::ZeroSeries);
    }
    assemble(std::slice::from_ref(f), ResultKind::Hypersurface, semantics)
}

/// Intersection of the generators' local tropical hypersurfaces. This is a
/// prevariety and may strictly contain the tropical variety.
pub fn prevariety(gens: &[Series], semantics: OriginSemantics) -> Result<TropicalVarietyResult> {
    if gens.is_empty() {
        return Err(Error::NoGenerators);
    }
    let n = gens[0].nvars();
    if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: g.nvars() });
    }
    let nonzero: Vec<Series> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    assemble(&nonzero, ResultKind::Prevariety, semantics)
}
