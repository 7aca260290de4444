//! Finite T0 spaces presented by their specialization preorder.
//!
//! A space is a finite point set with a reflexive, transitive, antisymmetric
//! relation `x -> y` read as "y is a specialization of x" (y lies in the
//! closure of x). Closed subsets are exactly the specialization-stable ones,
//! so all topology at this scale is order theory. Antisymmetry is enforced at
//! construction: a two-way strict relation would collapse points in any T0
//! quotient and is rejected as a cycle.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default point budget for the exhaustive closed-subset scan in
/// [`SpectralSpace::check_uip`]; `2^15` subsets is the comfortable limit.
pub const UIP_POINT_BUDGET: usize = 15;

/// A finite spectral space: points plus the full reflexive-transitive
/// specialization relation. Immutable after construction, so references can
/// be shared freely.
#[derive(Debug, Clone)]
pub struct SpectralSpace {
    name: String,
    points: Vec<String>,
    index: HashMap<String, usize>,
    /// Row-major `n * n` matrix; `spec[x * n + y]` iff `x -> y`.
    spec: Vec<bool>,
}

/// A subset of the points of one space, kept in canonical index order.
#[derive(Debug, Clone)]
pub struct PointSet<'a> {
    space: &'a SpectralSpace,
    members: Vec<usize>,
}

impl SpectralSpace {
    /// Validates points and specialization pairs, closes the relation
    /// reflexively and transitively, and rejects antisymmetry violations.
    pub fn build<S: AsRef<str>, P: AsRef<str>>(
        name: &str,
        points: &[S],
        pairs: &[(P, P)],
    ) -> Result<Self> {
        let mut index = HashMap::new();
        let mut names = Vec::with_capacity(points.len());
        for p in points {
            let p = p.as_ref().to_owned();
            if index.insert(p.clone(), names.len()).is_some() {
                return Err(Error::DuplicatePoint(p));
            }
            names.push(p);
        }
        let n = names.len();
        let mut spec = vec![false; n * n];
        for i in 0..n {
            spec[i * n + i] = true;
        }
        for (a, b) in pairs {
            let a = a.as_ref();
            let b = b.as_ref();
            let i = *index
                .get(a)
                .ok_or_else(|| Error::UnknownPoint(a.to_owned()))?;
            let j = *index
                .get(b)
                .ok_or_else(|| Error::UnknownPoint(b.to_owned()))?;
            spec[i * n + j] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if spec[i * n + k] {
                    for j in 0..n {
                        if spec[k * n + j] {
                            spec[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if spec[i * n + j] && spec[j * n + i] {
                    return Err(Error::CycleViolation {
                        a: names[i].clone(),
                        b: names[j].clone(),
                    });
                }
            }
        }
        Ok(SpectralSpace {
            name: name.to_owned(),
            points: names,
            index,
            spec,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point_names(&self) -> &[String] {
        &self.points
    }

    pub fn point_name(&self, x: usize) -> &str {
        &self.points[x]
    }

    pub fn point_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownPoint(name.to_owned()))
    }

    /// `x -> y`: y is a specialization of x.
    pub fn specializes(&self, x: usize, y: usize) -> bool {
        self.spec[x * self.len() + y]
    }

    pub fn strictly_specializes(&self, x: usize, y: usize) -> bool {
        x != y && self.specializes(x, y)
    }

    /// Two points are Sp-connected when they are comparable either way.
    pub fn sp_connected(&self, x: usize, y: usize) -> bool {
        self.specializes(x, y) || self.specializes(y, x)
    }

    /// Sp(x): the closure of `x`, i.e. all of its specializations.
    pub fn sp_closure(&self, x: usize) -> PointSet<'_> {
        let members = (0..self.len()).filter(|&y| self.specializes(x, y)).collect();
        PointSet {
            space: self,
            members,
        }
    }

    /// The whole space as a point set.
    pub fn full_set(&self) -> PointSet<'_> {
        PointSet {
            space: self,
            members: (0..self.len()).collect(),
        }
    }

    /// A subset given by point names, in canonical order.
    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<PointSet<'_>> {
        let mut members: Vec<usize> = names
            .iter()
            .map(|s| self.point_index(s.as_ref()))
            .collect::<Result<_>>()?;
        members.sort_unstable();
        members.dedup();
        Ok(PointSet {
            space: self,
            members,
        })
    }

    /// Points with no strict specialization: the closed points.
    pub fn closed_points(&self) -> PointSet<'_> {
        let members = (0..self.len())
            .filter(|&x| (0..self.len()).all(|y| !self.strictly_specializes(x, y)))
            .collect();
        PointSet {
            space: self,
            members,
        }
    }

    /// True when `x -> y` is strict and admits no interior point. At this
    /// scale "closest specialization" coincides with the cover relation.
    pub fn is_closest_specialization(&self, x: usize, y: usize) -> Result<bool> {
        if x == y || !self.specializes(x, y) {
            return Err(Error::NotASpecialization {
                from: self.points[x].clone(),
                to: self.points[y].clone(),
            });
        }
        Ok((0..self.len())
            .all(|z| z == x || z == y || !(self.specializes(x, z) && self.specializes(z, y))))
    }

    /// Strict cover pairs in canonical order; the transitive reduction of the
    /// strict specialization relation.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for x in 0..self.len() {
            for y in 0..self.len() {
                if self.strictly_specializes(x, y)
                    && (0..self.len()).all(|z| {
                        z == x || z == y || !(self.specializes(x, z) && self.specializes(z, y))
                    })
                {
                    covers.push((x, y));
                }
            }
        }
        covers
    }

    /// A space is irreducible exactly when it has a point whose closure is
    /// everything; for finite T0 spaces that is a unique minimal point.
    pub fn generic_point(&self) -> Option<usize> {
        (0..self.len()).find(|&x| (0..self.len()).all(|y| self.specializes(x, y)))
    }

    pub fn is_irreducible(&self) -> bool {
        self.generic_point().is_some()
    }

    /// Structural identity ignoring the display name: same points in the same
    /// order with the same relation.
    pub fn same_structure(&self, other: &SpectralSpace) -> bool {
        self.points == other.points && self.spec == other.spec
    }

    pub fn check_uip(&self) -> Result<UipReport> {
        self.check_uip_with_budget(UIP_POINT_BUDGET)
    }

    /// Scans every specialization-stable subset, classifies it as reducible
    /// or irreducible by decomposition into proper closed subsets, and checks
    /// that generic points of irreducible closed subsets exist, are unique,
    /// and are shared by no two distinct subsets.
    pub fn check_uip_with_budget(&self, budget: usize) -> Result<UipReport> {
        let n = self.len();
        if n > budget {
            return Err(Error::BudgetExceeded {
                what: "closed-subset scan".into(),
                detail: format!("{n} points exceeds budget {budget}"),
            });
        }
        let up: Vec<u32> = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| self.specializes(x, y))
                    .fold(0u32, |m, y| m | (1 << y))
            })
            .collect();
        let mut closed_subsets = 0u64;
        let mut irreducible = Vec::new();
        let mut violations = Vec::new();
        for mask in 0..(1u32 << n) {
            let is_closed = (0..n).all(|x| mask & (1 << x) == 0 || up[x] & !mask == 0);
            if !is_closed {
                continue;
            }
            closed_subsets += 1;
            if mask == 0 {
                continue;
            }
            // A decomposition into proper closed subsets, if one exists, can
            // always be enlarged to maximal proper closed subsets, and those
            // are exactly the subset minus one of its minimal points. So the
            // subset is reducible iff removing two different minimal points
            // covers it.
            let minimal: Vec<usize> = (0..n)
                .filter(|&x| {
                    mask & (1 << x) != 0
                        && (0..n).all(|z| {
                            mask & (1 << z) == 0 || !self.strictly_specializes(z, x)
                        })
                })
                .collect();
            let reducible = minimal.len() >= 2;
            if !reducible {
                if minimal.is_empty() {
                    violations.push(format!(
                        "irreducible closed subset {} has no generic point",
                        self.mask_names(mask)
                    ));
                }
                irreducible.push((mask, minimal));
            }
        }
        // Distinct irreducible closed subsets must not share a generic point.
        for i in 0..irreducible.len() {
            for j in i + 1..irreducible.len() {
                let shared: Vec<usize> = irreducible[i]
                    .1
                    .iter()
                    .filter(|x| irreducible[j].1.contains(x))
                    .copied()
                    .collect();
                if !shared.is_empty() {
                    violations.push(format!(
                        "{} and {} share generic point {:?}",
                        self.mask_names(irreducible[i].0),
                        self.mask_names(irreducible[j].0),
                        self.points[shared[0]]
                    ));
                }
            }
        }
        Ok(UipReport {
            points: n,
            closed_subsets,
            irreducible_closed_subsets: irreducible.len() as u64,
            holds: violations.is_empty(),
            violations,
        })
    }

    fn mask_names(&self, mask: u32) -> String {
        let names: Vec<&str> = (0..self.len())
            .filter(|&x| mask & (1 << x) != 0)
            .map(|x| self.points[x].as_str())
            .collect();
        format!("{{{}}}", names.join(", "))
    }
}

impl<'a> PointSet<'a> {
    pub fn space(&self) -> &'a SpectralSpace {
        self.space
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn names(&self) -> Vec<&'a str> {
        self.members
            .iter()
            .map(|&x| self.space.points[x].as_str())
            .collect()
    }

    /// IP(W): the generic points of the subset, i.e. members with no strict
    /// generalization inside the subset.
    pub fn generic_points(&self) -> Result<PointSet<'a>> {
        if self.members.is_empty() {
            return Err(Error::EmptySubset);
        }
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&x| {
                self.members
                    .iter()
                    .all(|&z| !self.space.strictly_specializes(z, x))
            })
            .collect();
        Ok(PointSet {
            space: self.space,
            members,
        })
    }
}

/// Outcome of the exhaustive unique-generic-point scan.
#[derive(Debug, Clone, Serialize)]
pub struct UipReport {
    pub points: usize,
    pub closed_subsets: u64,
    pub irreducible_closed_subsets: u64,
    pub holds: bool,
    pub violations: Vec<String>,
}
