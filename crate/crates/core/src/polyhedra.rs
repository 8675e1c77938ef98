//! Exact rational polyhedral cones in H-representation and fans built from them.
//!
//! Canonical form: the equality space is the orthogonal complement of the
//! cone's linear span, stored as a sign-normalised primitive integer basis in
//! reduced echelon form; every remaining inequality is facet defining, reduced
//! modulo the equality space and scaled to a primitive integer vector.
//! Two cones are equal as sets iff their canonical forms are identical.
//!
//! Facets and rays come from exhaustive enumeration of tight constraint
//! subsets, which is fine for the small ambient dimensions used here.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::algebra::{Stratum, Q};
use crate::error::{Error, Result};
use crate::linalg::{dot, dot_iq, leading_positive, nullspace, primitive_integer, rank, reduce_mod_rows, rref, to_q};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RationalCone {
    ambient: usize,
    equalities: Vec<Vec<i64>>,
    inequalities: Vec<Vec<i64>>,
}

/// V-representation: extreme rays plus a basis of the lineality space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators {
    pub rays: Vec<Vec<i64>>,
    pub lineality: Vec<Vec<Q>>,
}

impl RationalCone {
    /// Builds the canonical cone `{ u : E u = 0, A u >= 0 }`.
    pub fn new(ambient: usize, equalities: Vec<Vec<i64>>, inequalities: Vec<Vec<i64>>) -> Self {
        Self::raw(ambient, equalities, inequalities).canonicalize()
    }

    /// Builds a cone without canonicalising it.
    pub fn raw(ambient: usize, equalities: Vec<Vec<i64>>, inequalities: Vec<Vec<i64>>) -> Self {
        for v in equalities.iter().chain(&inequalities) {
            assert_eq!(v.len(), ambient, "constraint length mismatch");
        }
        RationalCone { ambient, equalities, inequalities }
    }

    /// Rational-normal constructor; normals are scaled to integers.
    pub fn from_rational(ambient: usize, equalities: &[Vec<Q>], inequalities: &[Vec<Q>]) -> Self {
        Self::new(
            ambient,
            equalities.iter().map(|v| primitive_integer(v)).collect(),
            inequalities.iter().map(|v| primitive_integer(v)).collect(),
        )
    }

    /// The closed nonnegative orthant.
    pub fn orthant(n: usize) -> Self {
        Self::new(n, vec![], unit_rows(n))
    }

    /// Closure of an open stratum: `u_i = 0` on `lambda`, `u_i >= 0` elsewhere.
    pub fn stratum_closure(stratum: &Stratum) -> Self {
        let n = stratum.nvars();
        let rows = unit_rows(n);
        let (eq, ineq): (Vec<_>, Vec<_>) = (0..n).partition(|&i| stratum.is_zero(i));
        Self::new(
            n,
            eq.into_iter().map(|i| rows[i].clone()).collect(),
            ineq.into_iter().map(|i| rows[i].clone()).collect(),
        )
    }

    /// The closed ray spanned by `r`.
    pub fn ray(r: &[i64]) -> Self {
        let n = r.len();
        let eqs = nullspace(&[to_q(r)], n).iter().map(|v| primitive_integer(v)).collect();
        Self::new(n, eqs, vec![r.to_vec()])
    }

    pub fn origin(n: usize) -> Self {
        Self::new(n, unit_rows(n), vec![])
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn equalities(&self) -> &[Vec<i64>] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[Vec<i64>] {
        &self.inequalities
    }

    fn rows_q(&self) -> (Vec<Vec<Q>>, Vec<Vec<Q>>) {
        (self.equalities.iter().map(|v| to_q(v)).collect(), self.inequalities.iter().map(|v| to_q(v)).collect())
    }

    /// Extreme rays (primitive integer, sorted) and lineality basis.
    pub fn generators(&self) -> Generators {
        let n = self.ambient;
        let (eqs, ineqs) = self.rows_q();
        let all: Vec<Vec<Q>> = eqs.iter().chain(&ineqs).cloned().collect();
        let lineality = nullspace(&all, n);
        let mut base: Vec<Vec<Q>> = eqs.clone();
        base.extend(lineality.iter().cloned());
        let d = n - rank(&base, n);
        let mut rays: BTreeSet<Vec<i64>> = BTreeSet::new();
        if d > 0 {
            for subset in combinations(ineqs.len(), d - 1) {
                let mut rows = base.clone();
                rows.extend(subset.iter().map(|&i| ineqs[i].clone()));
                let ns = nullspace(&rows, n);
                if ns.len() != 1 {
                    continue;
                }
                let v = &ns[0];
                let vals: Vec<Q> = ineqs.iter().map(|a| dot(a, v)).collect();
                let cand = if vals.iter().all(|x| !x.is_negative()) {
                    v.clone()
                } else if vals.iter().all(|x| !x.is_positive()) {
                    v.iter().map(|x| -x).collect()
                } else {
                    continue;
                };
                rays.insert(primitive_integer(&cand));
            }
        }
        Generators { rays: rays.into_iter().collect(), lineality }
    }

    pub fn rays(&self) -> Vec<Vec<i64>> {
        self.generators().rays
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.ambient - self.equalities.len()
    }

    pub fn is_origin(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical form; idempotent.
    pub fn canonicalize(&self) -> RationalCone {
        let n = self.ambient;
        let g = self.generators();
        let mut span: Vec<Vec<Q>> = g.rays.iter().map(|r| to_q(r)).collect();
        span.extend(g.lineality.iter().cloned());
        let dim = rank(&span, n);

        // equality space in reduced echelon form, pivots taken from the right
        let complement = nullspace(&span, n);
        let reversed: Vec<Vec<Q>> = complement.iter().map(|v| v.iter().rev().cloned().collect()).collect();
        let (red, rev_pivots) = rref(reversed, n);
        let eq_rows: Vec<Vec<Q>> = red.iter().map(|v| v.iter().rev().cloned().collect()).collect();
        let pivots: Vec<usize> = rev_pivots.iter().map(|p| n - 1 - p).collect();
        let mut equalities: Vec<Vec<i64>> = eq_rows
            .iter()
            .map(|v| {
                let p = primitive_integer(v);
                if leading_positive(&to_q(&p)) {
                    p
                } else {
                    p.iter().map(|x| -x).collect()
                }
            })
            .collect();
        equalities.sort();

        let ray_q: Vec<Vec<Q>> = g.rays.iter().map(|r| to_q(r)).collect();
        let mut facets: BTreeSet<Vec<i64>> = BTreeSet::new();
        if dim > 0 {
            for a in &self.inequalities {
                let aq = to_q(a);
                let mut tight: Vec<Vec<Q>> = ray_q.iter().filter(|r| dot(&aq, r).is_zero()).cloned().collect();
                if tight.len() == ray_q.len() {
                    continue; // implied equality
                }
                tight.extend(g.lineality.iter().cloned());
                if rank(&tight, n) + 1 != dim {
                    continue; // redundant
                }
                let reduced = reduce_mod_rows(&aq, &eq_rows, &pivots);
                facets.insert(primitive_integer(&reduced));
            }
        }
        RationalCone { ambient: n, equalities, inequalities: facets.into_iter().collect() }
    }

    pub fn contains(&self, p: &[Q]) -> bool {
        self.equalities.iter().all(|a| dot_iq(a, p).is_zero())
            && self.inequalities.iter().all(|a| !dot_iq(a, p).is_negative())
    }

    /// Relative interior membership; assumes canonical form.
    pub fn relint_contains(&self, p: &[Q]) -> bool {
        self.equalities.iter().all(|a| dot_iq(a, p).is_zero())
            && self.inequalities.iter().all(|a| dot_iq(a, p).is_positive())
    }

    /// A point strictly satisfying every non-implied inequality: the sum of
    /// the primitive extreme rays.
    pub fn relative_interior_point(&self) -> Result<Vec<Q>> {
        let g = self.generators();
        if g.rays.is_empty() {
            return g.lineality.first().cloned().ok_or(Error::OriginOnly);
        }
        let mut sum = vec![0i64; self.ambient];
        for r in &g.rays {
            for (s, x) in sum.iter_mut().zip(r) {
                *s += x;
            }
        }
        Ok(to_q(&sum))
    }

    /// Relative interior point, or the origin for the zero cone.
    pub fn interior_point_or_origin(&self) -> Vec<Q> {
        self.relative_interior_point().unwrap_or_else(|_| vec![Q::zero(); self.ambient])
    }

    pub fn intersect(&self, other: &RationalCone) -> RationalCone {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut eq = self.equalities.clone();
        eq.extend(other.equalities.iter().cloned());
        let mut ineq = self.inequalities.clone();
        ineq.extend(other.inequalities.iter().cloned());
        RationalCone::new(self.ambient, eq, ineq)
    }

    /// Adds one inequality as an equality.
    pub fn restrict_to(&self, normal: &[i64]) -> RationalCone {
        let mut eq = self.equalities.clone();
        eq.push(normal.to_vec());
        RationalCone::new(self.ambient, eq, self.inequalities.clone())
    }

    /// The facets as cones, paired with their defining inequality.
    pub fn facets(&self) -> Vec<(Vec<i64>, RationalCone)> {
        self.inequalities.iter().map(|a| (a.clone(), self.restrict_to(a))).collect()
    }

    /// All faces including the cone itself and the origin face.
    pub fn faces(&self) -> BTreeSet<RationalCone> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self.clone()];
        while let Some(c) = stack.pop() {
            if out.contains(&c) {
                continue;
            }
            for (_, f) in c.facets() {
                if !out.contains(&f) {
                    stack.push(f);
                }
            }
            out.insert(c);
        }
        out
    }

    /// The smallest face of `self` containing `p`, if `p` lies in the cone.
    pub fn face_containing(&self, p: &[Q]) -> Option<RationalCone> {
        if !self.contains(p) {
            return None;
        }
        let mut eq = self.equalities.clone();
        let mut ineq = Vec::new();
        for a in &self.inequalities {
            if dot_iq(a, p).is_zero() {
                eq.push(a.clone());
            } else {
                ineq.push(a.clone());
            }
        }
        Some(RationalCone::new(self.ambient, eq, ineq))
    }

    pub fn is_face_of(&self, other: &RationalCone) -> bool {
        let p = self.interior_point_or_origin();
        other.face_containing(&p).as_ref() == Some(self)
    }

    pub fn contains_cone(&self, other: &RationalCone) -> bool {
        other.rays().iter().all(|r| self.contains(&to_q(r)))
            && other
                .generators()
                .lineality
                .iter()
                .all(|l| self.contains(l) && self.contains(&l.iter().map(|x| -x).collect::<Vec<_>>()))
    }

    /// True if the cone lies inside the closed nonnegative orthant.
    pub fn in_orthant(&self) -> bool {
        let g = self.generators();
        g.lineality.is_empty() && g.rays.iter().all(|r| r.iter().all(|&x| x >= 0))
    }

    /// Stratum of the relative interior (constant over it for cones inside the
    /// orthant).
    pub fn stratum(&self) -> Stratum {
        let p = self.interior_point_or_origin();
        Stratum::from_zero_set(self.ambient, p.iter().enumerate().filter(|(_, x)| x.is_zero()).map(|(i, _)| i))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ambient": self.ambient,
            "rays": self.rays(),
            "equalities": self.equalities,
            "inequalities": self.inequalities,
            "dim": self.dim(),
        })
    }
}

fn unit_rows(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect()
}

/// All `k`-subsets of `0..m` in lexicographic order.
pub fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= m {
        rec(0, m, k, &mut Vec::new(), &mut out);
    }
    out
}

/// A fan: canonical cones closed under faces, sorted by dimension and then by
/// their ray indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<RationalCone>,
    cone_rays: Vec<Vec<usize>>,
    /// `(i, j)` when cone `i` is a facet of cone `j`.
    incidence: Vec<(usize, usize)>,
}

impl Fan {
    fn assemble(ambient: usize, cones: BTreeSet<RationalCone>) -> Fan {
        let per_cone: Vec<(RationalCone, Vec<Vec<i64>>)> = cones
            .into_iter()
            .map(|c| {
                let r = c.rays();
                (c, r)
            })
            .collect();
        let rays: Vec<Vec<i64>> =
            per_cone.iter().flat_map(|(_, r)| r.iter().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
        let index: BTreeMap<&Vec<i64>, usize> = rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let mut entries: Vec<(usize, Vec<usize>, RationalCone)> = per_cone
            .iter()
            .map(|(c, r)| {
                let mut idx: Vec<usize> = r.iter().map(|x| index[x]).collect();
                idx.sort();
                (c.dim(), idx, c.clone())
            })
            .collect();
        entries.sort();
        let cones: Vec<RationalCone> = entries.iter().map(|e| e.2.clone()).collect();
        let cone_rays: Vec<Vec<usize>> = entries.iter().map(|e| e.1.clone()).collect();
        let mut incidence = Vec::new();
        for (j, c) in cones.iter().enumerate() {
            for (_, f) in c.facets() {
                if let Some(i) = cones.iter().position(|x| x == &f) {
                    incidence.push((i, j));
                }
            }
        }
        incidence.sort();
        Fan { ambient, rays, cones, cone_rays, incidence }
    }

    pub fn empty(ambient: usize) -> Fan {
        Fan::assemble(ambient, BTreeSet::new())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn cones(&self) -> &[RationalCone] {
        &self.cones
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn cone_rays(&self, i: usize) -> &[usize] {
        &self.cone_rays[i]
    }

    pub fn incidence(&self) -> &[(usize, usize)] {
        &self.incidence
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn index_of(&self, c: &RationalCone) -> Option<usize> {
        self.cones.iter().position(|x| x == c)
    }

    /// Cones that are not a proper face of another cone.
    pub fn maximal_cones(&self) -> Vec<usize> {
        let covered: BTreeSet<usize> = self.incidence.iter().map(|(i, _)| *i).collect();
        (0..self.cones.len()).filter(|i| !covered.contains(i)).collect()
    }

    /// True if some cone contains `p`.
    pub fn contains_point(&self, p: &[Q]) -> bool {
        self.cones.iter().any(|c| c.contains(p))
    }

    pub fn to_json(&self) -> Value {
        self.to_json_with(|_| None)
    }

    /// Fan JSON with optional per-cone extension fields.
    pub fn to_json_with<F>(&self, extra: F) -> Value
    where
        F: Fn(usize) -> Option<serde_json::Map<String, Value>>,
    {
        let cones: Vec<Value> = self
            .cones
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut m = serde_json::Map::new();
                m.insert("rays".into(), json!(self.cone_rays[i]));
                m.insert("equalities".into(), json!(c.equalities()));
                m.insert("inequalities".into(), json!(c.inequalities()));
                m.insert("dim".into(), json!(c.dim()));
                if let Some(ext) = extra(i) {
                    m.extend(ext);
                }
                Value::Object(m)
            })
            .collect();
        json!({
            "ambient": self.ambient,
            "rays": self.rays,
            "cones": cones,
        })
    }
}

/// Closes the input under faces and checks that every pairwise intersection
/// is a face of both cones.
pub fn validate_fan(ambient: usize, cones: &[RationalCone]) -> Result<Fan> {
    let mut closed: BTreeSet<RationalCone> = BTreeSet::new();
    for c in cones {
        if c.ambient() != ambient {
            return Err(Error::DimensionMismatch { expected: ambient, found: c.ambient() });
        }
        closed.extend(c.canonicalize().faces());
    }
    let list: Vec<RationalCone> = closed.iter().cloned().collect();
    for i in 0..list.len() {
        for j in (i + 1)..list.len() {
            let meet = list[i].intersect(&list[j]);
            if !meet.is_face_of(&list[i]) || !meet.is_face_of(&list[j]) {
                let fan = Fan::assemble(ambient, closed.clone());
                let a = fan.index_of(&list[i]).unwrap_or(i);
                let b = fan.index_of(&list[j]).unwrap_or(j);
                return Err(Error::NotAFan(a.min(b), a.max(b)));
            }
        }
    }
    Ok(Fan::assemble(ambient, closed))
}

/// Drops cones that are contained in another cone of the list; deduplicates.
pub fn maximal_only(cones: Vec<RationalCone>) -> Vec<RationalCone> {
    let set: BTreeSet<RationalCone> = cones.into_iter().collect();
    let list: Vec<RationalCone> = set.into_iter().collect();
    list.iter()
        .enumerate()
        .filter(|(i, c)| !list.iter().enumerate().any(|(j, d)| *i != j && d.dim() > c.dim() && d.contains_cone(c)))
        .map(|(_, c)| c.clone())
        .collect()
}
