//! Minimal staircases of supports and the per-stratum surrogate polynomials.
//!
//! For a stratum `lambda` the coordinates in `lambda` carry weight zero, so the
//! support is projected onto the remaining coordinates, the minimal staircase
//! of the projection is taken, and its fibers ("classes") are the exponents
//! that can attain the minimal weight anywhere on the open stratum.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{Exponent, Polynomial, Series, Stratum};
use crate::error::{Error, Result};

/// Whether a staircase is known to be complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Soundness {
    /// Computed from an exact polynomial.
    #[serde(rename = "EXACT")]
    Exact,
    /// Computed from a truncation; correct provided every omitted term lies
    /// in `E + N^n`.
    #[serde(rename = "COMPLETE-IF-TAIL-DOMINATED")]
    CompleteIfTailDominated,
}

impl Soundness {
    pub fn of(f: &Series) -> Self {
        if f.is_exact() {
            Soundness::Exact
        } else {
            Soundness::CompleteIfTailDominated
        }
    }
}

/// A finite antichain of exponents generating `S + N^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    /// Sorted lexicographically.
    pub generators: Vec<Exponent>,
    /// Coordinates of the ambient space that were retained.
    pub ambient: Vec<usize>,
}

impl Staircase {
    /// True if some generator divides `e`.
    pub fn covers(&self, e: &Exponent) -> bool {
        self.generators.iter().any(|g| g.divides(e))
    }
}

/// Componentwise-minimal elements of a finite exponent set.
pub fn minimal_staircase<'a, I>(set: I) -> Staircase
where
    I: IntoIterator<Item = &'a Exponent>,
{
    let mut pts: Vec<&Exponent> = set.into_iter().collect();
    let n = pts.first().map(|e| e.nvars()).unwrap_or(0);
    pts.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    pts.dedup();
    let mut kept: Vec<Exponent> = Vec::new();
    for p in pts {
        // a dominating element has strictly smaller degree or is equal
        if !kept.iter().any(|g| g.divides(p)) {
            kept.push(p.clone());
        }
    }
    kept.sort();
    Staircase { generators: kept, ambient: (0..n).collect() }
}

/// The fibers of the projected minimal staircase on a stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumClasses {
    pub stratum: Stratum,
    /// Minimal staircase of the projected support.
    pub projected: Staircase,
    /// One class per projected generator, in the same order; each class
    /// sorted lexicographically.
    pub classes: Vec<Vec<Exponent>>,
    pub soundness: Soundness,
}

impl StratumClasses {
    /// `E_lambda(f)`: the union of all classes.
    pub fn exponents(&self) -> Vec<Exponent> {
        let mut v: Vec<Exponent> = self.classes.iter().flatten().cloned().collect();
        v.sort();
        v
    }
}

pub fn stratum_staircase(f: &Series, stratum: &Stratum) -> Result<StratumClasses> {
    if f.is_zero() {
        return Err(Error::ZeroSeries);
    }
    if stratum.nvars() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), found: stratum.nvars() });
    }
    let keep = stratum.support();
    let mut fibers: BTreeMap<Exponent, Vec<Exponent>> = BTreeMap::new();
    for e in f.poly().exponents() {
        fibers.entry(e.project(&keep)).or_default().push(e.clone());
    }
    let mut projected = minimal_staircase(fibers.keys());
    projected.ambient = keep;
    let classes = projected
        .generators
        .iter()
        .map(|b| {
            let mut c = fibers[b].clone();
            c.sort();
            c
        })
        .collect();
    Ok(StratumClasses { stratum: stratum.clone(), projected, classes, soundness: Soundness::of(f) })
}

/// `f~^lambda`: the terms of `f` with exponents in `E_lambda(f)`; zero on the
/// origin stratum by convention.
pub fn tilde_poly(f: &Series, stratum: &Stratum) -> Series {
    if f.is_zero() || stratum.is_origin() {
        return f.with_poly(Polynomial::zero(f.nvars()));
    }
    let classes = stratum_staircase(f, stratum).expect("nonzero series");
    let keep = classes.exponents();
    f.with_poly(f.poly().filter(|e| keep.binary_search(e).is_ok()))
}

/// The exponents kept by `hat_poly`: the two lexicographically smallest of
/// each class, or the whole class when it is a singleton.
pub fn hat_selection(classes: &StratumClasses) -> Vec<Vec<Exponent>> {
    classes.classes.iter().map(|c| c.iter().take(2).cloned().collect()).collect()
}

/// `f^^lambda`: at most two terms per class; zero on the origin stratum.
pub fn hat_poly(f: &Series, stratum: &Stratum) -> Series {
    if f.is_zero() || stratum.is_origin() {
        return f.with_poly(Polynomial::zero(f.nvars()));
    }
    let classes = stratum_staircase(f, stratum).expect("nonzero series");
    let mut keep: Vec<Exponent> = hat_selection(&classes).into_iter().flatten().collect();
    keep.sort();
    f.with_poly(f.poly().filter(|e| keep.binary_search(e).is_ok()))
}
