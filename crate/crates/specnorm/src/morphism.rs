//! Morphisms between spectral spaces and their analysis.
//!
//! A morphism is a total, specialization-preserving (monotone) point map;
//! monotonicity is enforced at construction. Analysis covers the exact
//! rational norm, the longitudinal flags (null, asymptotic,
//! length-preserving), the latitudinal classification of behavior on
//! incomparable same-length pairs, the Sp-proper/Sp-connected/Sp-type
//! predicates, and chain lifting. Predicates that are meaningful for
//! arbitrary total maps are also exposed as free functions over raw image
//! tuples so sweeps can quantify beyond monotone maps.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lengths::{Lengths, BRUTE_FORCE_POINT_BUDGET};
use crate::ratio::Ratio;
use crate::space::SpectralSpace;

/// A validated monotone map between two borrowed spaces.
#[derive(Debug, Clone)]
pub struct SchemeMorphism<'a> {
    source: &'a SpectralSpace,
    target: &'a SpectralSpace,
    map: Vec<usize>,
}

/// A morphism that owns its endpoint spaces; used for fixtures and JSON
/// documents that carry their spaces inline.
#[derive(Debug, Clone)]
pub struct OwnedMorphism {
    pub name: String,
    source: SpectralSpace,
    target: SpectralSpace,
    map: Vec<usize>,
}

impl OwnedMorphism {
    pub fn build<S: AsRef<str>>(
        name: &str,
        source: SpectralSpace,
        target: SpectralSpace,
        assignments: &[(S, S)],
    ) -> Result<Self> {
        let map = resolve_assignments(&source, &target, assignments)?;
        SchemeMorphism::from_map(&source, &target, map.clone())?;
        Ok(OwnedMorphism {
            name: name.to_owned(),
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &SpectralSpace {
        &self.source
    }

    pub fn target(&self) -> &SpectralSpace {
        &self.target
    }

    pub fn as_morphism(&self) -> SchemeMorphism<'_> {
        SchemeMorphism {
            source: &self.source,
            target: &self.target,
            map: self.map.clone(),
        }
    }
}

fn resolve_assignments<S: AsRef<str>>(
    source: &SpectralSpace,
    target: &SpectralSpace,
    assignments: &[(S, S)],
) -> Result<Vec<usize>> {
    let mut map: Vec<Option<usize>> = vec![None; source.len()];
    for (from, to) in assignments {
        let x = source.point_index(from.as_ref())?;
        let y = target.point_index(to.as_ref())?;
        if map[x].replace(y).is_some() {
            return Err(Error::Schema(format!(
                "point {} is assigned two images",
                from.as_ref()
            )));
        }
    }
    map.into_iter()
        .enumerate()
        .map(|(x, img)| {
            img.ok_or_else(|| {
                Error::Schema(format!("point {} has no image", source.point_name(x)))
            })
        })
        .collect()
}

impl<'a> SchemeMorphism<'a> {
    /// Builds from name pairs; the map must be total and monotone.
    pub fn build<S: AsRef<str>>(
        source: &'a SpectralSpace,
        target: &'a SpectralSpace,
        assignments: &[(S, S)],
    ) -> Result<Self> {
        let map = resolve_assignments(source, target, assignments)?;
        Self::from_map(source, target, map)
    }

    /// Builds from an image tuple over canonical indices.
    pub fn from_map(
        source: &'a SpectralSpace,
        target: &'a SpectralSpace,
        map: Vec<usize>,
    ) -> Result<Self> {
        if map.len() != source.len() || map.iter().any(|&y| y >= target.len()) {
            return Err(Error::Schema(format!(
                "map must assign one of {} target points to each of {} source points",
                target.len(),
                source.len()
            )));
        }
        for x in 0..source.len() {
            for y in 0..source.len() {
                if source.specializes(x, y) && !target.specializes(map[x], map[y]) {
                    return Err(Error::NotMonotone {
                        from: source.point_name(x).to_owned(),
                        to: source.point_name(y).to_owned(),
                    });
                }
            }
        }
        Ok(SchemeMorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(space: &'a SpectralSpace) -> Self {
        SchemeMorphism {
            source: space,
            target: space,
            map: (0..space.len()).collect(),
        }
    }

    pub fn source(&self) -> &'a SpectralSpace {
        self.source
    }

    pub fn target(&self) -> &'a SpectralSpace {
        self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// `‖f‖` with one maximizing pair; no witness when the source has
    /// dimension zero and the norm is zero by definition.
    pub fn norm(&self) -> NormResult {
        self.norm_with(&Lengths::new(self.source), &Lengths::new(self.target))
    }

    pub fn norm_with(&self, source_lengths: &Lengths, target_lengths: &Lengths) -> NormResult {
        if source_lengths.dim() == 0 {
            return NormResult {
                value: Ratio::ZERO,
                witness: None,
            };
        }
        let mut best = Ratio::ZERO;
        let mut witness = None;
        for x1 in 0..self.source.len() {
            for x2 in 0..self.source.len() {
                if !self.source.strictly_specializes(x1, x2) {
                    continue;
                }
                let down = source_lengths.between(x1, x2).unwrap();
                let up = target_lengths
                    .between(self.map[x1], self.map[x2])
                    .expect("monotone image pair is comparable");
                let ratio = Ratio::new(up as u64, down as u64);
                if witness.is_none() || ratio > best {
                    best = ratio;
                    witness = Some((x1, x2));
                }
            }
        }
        NormResult {
            value: best,
            witness,
        }
    }

    /// `l(f(x), f(y)) = l(x, y)` on every specialization.
    pub fn is_length_preserving(&self) -> bool {
        self.is_length_preserving_with(&Lengths::new(self.source), &Lengths::new(self.target))
    }

    pub fn is_length_preserving_with(
        &self,
        source_lengths: &Lengths,
        target_lengths: &Lengths,
    ) -> bool {
        for x in 0..self.source.len() {
            for y in 0..self.source.len() {
                if let Some(down) = source_lengths.between(x, y) {
                    let up = target_lengths.between(self.map[x], self.map[y]).unwrap();
                    if up != down {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn longitudinal(&self) -> LongitudinalFlags {
        let source_lengths = Lengths::new(self.source);
        let target_lengths = Lengths::new(self.target);
        self.longitudinal_with(&source_lengths, &target_lengths)
    }

    pub fn longitudinal_with(
        &self,
        source_lengths: &Lengths,
        target_lengths: &Lengths,
    ) -> LongitudinalFlags {
        let norm = self.norm_with(source_lengths, target_lengths).value;
        LongitudinalFlags {
            null: norm == Ratio::ZERO,
            asymptotic: norm == Ratio::ONE,
            length_preserving: self.is_length_preserving_with(source_lengths, target_lengths),
        }
    }

    /// Behavior on pairs that are incomparable yet have equal point length:
    /// do their images stay incomparable, always collapse into a chain, or
    /// both? With no such pair the classification is vacuous.
    pub fn latitudinal(&self) -> LatitudinalClass {
        self.latitudinal_with(&Lengths::new(self.source))
    }

    pub fn latitudinal_with(&self, source_lengths: &Lengths) -> LatitudinalClass {
        let mut any_separated = false;
        let mut any_connected = false;
        for x in 0..self.source.len() {
            for y in x + 1..self.source.len() {
                if self.source.sp_connected(x, y)
                    || source_lengths.of_point(x) != source_lengths.of_point(y)
                {
                    continue;
                }
                if self.target.sp_connected(self.map[x], self.map[y]) {
                    any_connected = true;
                } else {
                    any_separated = true;
                }
            }
        }
        match (any_separated, any_connected) {
            (false, false) => LatitudinalClass::Vacuous,
            (true, false) => LatitudinalClass::LevelSeparated,
            (false, true) => LatitudinalClass::LevelReduced,
            (true, true) => LatitudinalClass::LevelMixed,
        }
    }

    /// `f^{-1}(Sp(f(x0)))` as canonical indices.
    pub fn sp_preimage(&self, x0: usize) -> Vec<usize> {
        let fx0 = self.map[x0];
        (0..self.source.len())
            .filter(|&x| self.target.specializes(fx0, self.map[x]))
            .collect()
    }

    /// The preimage of `Sp(f(x0))` is exactly `Sp(x0)`. Monotonicity gives
    /// one inclusion, so only the converse is tested.
    pub fn is_sp_proper_at(&self, x0: usize) -> bool {
        self.sp_preimage(x0)
            .into_iter()
            .all(|x| self.source.specializes(x0, x))
    }

    /// The preimage of `Sp(f(x0))` is pairwise comparable.
    pub fn is_sp_connected_at(&self, x0: usize) -> bool {
        let pre = self.sp_preimage(x0);
        pre.iter()
            .all(|&x| pre.iter().all(|&y| self.source.sp_connected(x, y)))
    }

    /// Sp-proper or Sp-connected at every point.
    pub fn is_sp_type(&self) -> bool {
        (0..self.source.len())
            .all(|x0| self.is_sp_proper_at(x0) || self.is_sp_connected_at(x0))
    }

    pub fn sp_diagnosis(&self) -> Vec<SpPointDiagnosis> {
        (0..self.source.len())
            .map(|x0| SpPointDiagnosis {
                point: self.source.point_name(x0).to_owned(),
                sp_proper: self.is_sp_proper_at(x0),
                sp_connected: self.is_sp_connected_at(x0),
            })
            .collect()
    }

    /// Every restrict chain in the target starting at an image point lifts
    /// pointwise to the source. A single strict step suffices to test: step
    /// lifts concatenate into lifts of arbitrary chains, and a chain lift
    /// restricts to a lift of each step.
    pub fn has_chain_lifting(&self) -> bool {
        for x in 0..self.source.len() {
            for y in 0..self.target.len() {
                if !self.target.strictly_specializes(self.map[x], y) {
                    continue;
                }
                let liftable = (0..self.source.len()).any(|x1| {
                    self.source.strictly_specializes(x, x1) && self.map[x1] == y
                });
                if !liftable {
                    return false;
                }
            }
        }
        true
    }

    /// Oracle form of [`has_chain_lifting`]: enumerates every restrict chain
    /// in the target from every image point and searches for a lift by
    /// backtracking.
    pub fn chain_lifting_by_enumeration(&self) -> Result<bool> {
        for space in [self.source, self.target] {
            if space.len() > BRUTE_FORCE_POINT_BUDGET {
                return Err(Error::BudgetExceeded {
                    what: "chain lift enumeration".into(),
                    detail: format!(
                        "{} points exceeds budget {}",
                        space.len(),
                        BRUTE_FORCE_POINT_BUDGET
                    ),
                });
            }
        }
        fn lift_exists(f: &SchemeMorphism<'_>, x: usize, chain: &[usize]) -> bool {
            let Some(&y) = chain.first() else { return true };
            (0..f.source.len()).any(|x1| {
                f.source.strictly_specializes(x, x1)
                    && f.map[x1] == y
                    && lift_exists(f, x1, &chain[1..])
            })
        }
        fn chains_lift(f: &SchemeMorphism<'_>, x0: usize, chain: &mut Vec<usize>) -> bool {
            if !lift_exists(f, x0, &chain[1..]) {
                return false;
            }
            let last = *chain.last().unwrap();
            for y in 0..f.target.len() {
                if f.target.strictly_specializes(last, y) {
                    chain.push(y);
                    let ok = chains_lift(f, x0, chain);
                    chain.pop();
                    if !ok {
                        return false;
                    }
                }
            }
            true
        }
        Ok((0..self.source.len())
            .all(|x0| chains_lift(self, x0, &mut vec![self.map[x0]])))
    }
}

/// True when every specialization maps to a specialization; defined for
/// arbitrary total image tuples.
pub fn map_preserves_specialization(
    source: &SpectralSpace,
    target: &SpectralSpace,
    map: &[usize],
) -> bool {
    for x in 0..source.len() {
        for y in 0..source.len() {
            if source.specializes(x, y) && !target.specializes(map[x], map[y]) {
                return false;
            }
        }
    }
    true
}

/// True when the image of each point is a generic point of the closure of
/// the image of its own closure: that closure must equal `Sp(f(x0))`, not
/// merely avoid generalizing past `f(x0)`. A closed set admits `x0` as a
/// generic point only when it equals `Sp(x0)`, so quantifying over point
/// closures exhausts the defining condition.
pub fn map_preserves_generic_points(
    source: &SpectralSpace,
    target: &SpectralSpace,
    map: &[usize],
) -> bool {
    for x0 in 0..source.len() {
        // The closure of the image of Sp(x0) always contains Sp(f(x0)), so
        // genericity reduces to reaching each member by specialization.
        for z in 0..target.len() {
            let in_closure = (0..source.len())
                .any(|x| source.specializes(x0, x) && target.specializes(map[x], z));
            if in_closure && !target.specializes(map[x0], z) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormResult {
    pub value: Ratio,
    pub witness: Option<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LongitudinalFlags {
    pub null: bool,
    pub asymptotic: bool,
    pub length_preserving: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LatitudinalClass {
    LevelSeparated,
    LevelReduced,
    LevelMixed,
    Vacuous,
}

impl LatitudinalClass {
    /// The reading used by hypothesis checks: no incomparable same-length
    /// pair is ever collapsed, including the case of no such pair at all.
    pub fn is_level_separated(self) -> bool {
        matches!(self, LatitudinalClass::LevelSeparated | LatitudinalClass::Vacuous)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpPointDiagnosis {
    pub point: String,
    pub sp_proper: bool,
    pub sp_connected: bool,
}

/// Everything the analyzers can say about one morphism.
#[derive(Debug, Clone, Serialize)]
pub struct MorphismProfile {
    pub source: String,
    pub target: String,
    pub norm: Ratio,
    pub norm_witness: Option<(String, String)>,
    pub longitudinal: LongitudinalFlags,
    pub latitudinal: LatitudinalClass,
    pub sp_type: bool,
    pub sp_diagnosis: Vec<SpPointDiagnosis>,
    pub injective: bool,
    pub chain_lifting: bool,
}

impl MorphismProfile {
    pub fn compute(f: &SchemeMorphism<'_>) -> Self {
        Self::compute_with(f, &Lengths::new(f.source()), &Lengths::new(f.target()))
    }

    pub fn compute_with(
        f: &SchemeMorphism<'_>,
        source_lengths: &Lengths,
        target_lengths: &Lengths,
    ) -> Self {
        let norm = f.norm_with(source_lengths, target_lengths);
        MorphismProfile {
            source: f.source().name().to_owned(),
            target: f.target().name().to_owned(),
            norm: norm.value,
            norm_witness: norm.witness.map(|(x1, x2)| {
                (
                    f.source().point_name(x1).to_owned(),
                    f.source().point_name(x2).to_owned(),
                )
            }),
            longitudinal: f.longitudinal_with(source_lengths, target_lengths),
            latitudinal: f.latitudinal_with(source_lengths),
            sp_type: f.is_sp_type(),
            sp_diagnosis: f.sp_diagnosis(),
            injective: f.is_injective(),
            chain_lifting: f.has_chain_lifting(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_poset_masks, poset_from_mask, TotalMaps};

    fn two_chain() -> SpectralSpace {
        SpectralSpace::build("2chain", &["a", "b"], &[("a", "b")]).unwrap()
    }

    fn three_chain() -> SpectralSpace {
        SpectralSpace::build("3chain", &["y0", "y1", "y2"], &[("y0", "y1"), ("y1", "y2")])
            .unwrap()
    }

    /// 2-chain into 3-chain skipping the middle point.
    fn gap_map<'a>(x: &'a SpectralSpace, y: &'a SpectralSpace) -> SchemeMorphism<'a> {
        SchemeMorphism::from_map(x, y, vec![0, 2]).unwrap()
    }

    #[test]
    fn rejects_order_reversal() {
        let c = two_chain();
        let err = SchemeMorphism::build(&c, &c, &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::NotMonotone { .. }));
    }

    #[test]
    fn rejects_partial_maps() {
        let c = two_chain();
        let err = SchemeMorphism::build(&c, &c, &[("a", "a")]).unwrap_err();
        assert!(matches!(err, Error::Schema(_)));
    }

    #[test]
    fn constant_maps_are_valid() {
        let c = three_chain();
        let f = SchemeMorphism::from_map(&c, &c, vec![2, 2, 2]).unwrap();
        assert!(!f.is_injective());
    }

    #[test]
    fn specialization_preservation_on_raw_maps() {
        let c = two_chain();
        assert!(map_preserves_specialization(&c, &c, &[0, 1]));
        assert!(!map_preserves_specialization(&c, &c, &[1, 0]));
        let disc = SpectralSpace::build("d", &["a", "b"], &[] as &[(&str, &str)]).unwrap();
        assert!(map_preserves_specialization(&disc, &c, &[1, 0]));
    }

    #[test]
    fn generic_point_preservation_on_raw_maps() {
        let c = two_chain();
        assert!(map_preserves_generic_points(&c, &c, &[0, 1]), "identity");
        assert!(!map_preserves_generic_points(&c, &c, &[1, 0]), "reversal");
    }

    #[test]
    fn genericity_is_stronger_than_minimality() {
        // Sending the 2-chain onto the two sources of a V keeps each image
        // minimal in its image closure, but the closure {u, v, w} has no
        // generic point at all, so the map fails the genericity check just
        // as it fails monotonicity.
        let c = two_chain();
        let v = SpectralSpace::build("v", &["u", "v", "w"], &[("u", "w"), ("v", "w")]).unwrap();
        let map = [0usize, 1];
        assert!(!map_preserves_generic_points(&c, &v, &map));
        assert!(!map_preserves_specialization(&c, &v, &map));
    }

    #[test]
    fn generic_point_preservation_is_equivalent_to_monotonicity() {
        for nx in 1..=3usize {
            for ny in 1..=3usize {
                for &mx in &all_poset_masks(nx) {
                    for &my in &all_poset_masks(ny) {
                        let x = poset_from_mask(nx, mx);
                        let y = poset_from_mask(ny, my);
                        for map in TotalMaps::new(nx, ny) {
                            assert_eq!(
                                map_preserves_specialization(&x, &y, &map),
                                map_preserves_generic_points(&x, &y, &map),
                                "nx={nx} mx={mx} ny={ny} my={my} map={map:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn norm_of_zero_dimensional_source_is_zero_without_witness() {
        let disc = SpectralSpace::build("d", &["a", "b"], &[] as &[(&str, &str)]).unwrap();
        let c = two_chain();
        let f = SchemeMorphism::from_map(&disc, &c, vec![1, 1]).unwrap();
        let n = f.norm();
        assert_eq!(n.value, Ratio::ZERO);
        assert!(n.witness.is_none());
    }

    #[test]
    fn constant_map_from_chain_has_norm_zero() {
        let c = three_chain();
        let f = SchemeMorphism::from_map(&c, &c, vec![2, 2, 2]).unwrap();
        let n = f.norm();
        assert_eq!(n.value, Ratio::ZERO);
        assert!(n.witness.is_some(), "positive-dimensional source");
        assert!(f.longitudinal().null);
    }

    #[test]
    fn identity_on_chain_has_norm_one_with_first_pair_witness() {
        let c = three_chain();
        let f = SchemeMorphism::identity(&c);
        let n = f.norm();
        assert_eq!(n.value, Ratio::ONE);
        assert_eq!(n.witness, Some((0, 1)));
        let flags = f.longitudinal();
        assert!(flags.asymptotic && flags.length_preserving && !flags.null);
    }

    #[test]
    fn gap_map_has_norm_two() {
        let x = two_chain();
        let y = three_chain();
        let f = gap_map(&x, &y);
        let n = f.norm();
        assert_eq!(n.value, Ratio::from_integer(2));
        assert_eq!(n.witness, Some((0, 1)));
        assert!(!f.is_length_preserving());
        assert!(f.is_injective());
    }

    #[test]
    fn fold_of_two_chains_is_length_preserving_not_injective() {
        let x = SpectralSpace::build(
            "two2chains",
            &["a1", "b1", "a2", "b2"],
            &[("a1", "b1"), ("a2", "b2")],
        )
        .unwrap();
        let y = two_chain();
        let f = SchemeMorphism::from_map(&x, &y, vec![0, 1, 0, 1]).unwrap();
        let flags = f.longitudinal();
        assert!(flags.length_preserving && flags.asymptotic);
        assert!(!f.is_injective());
    }

    #[test]
    fn latitudinal_identity_on_antichain_is_level_separated() {
        let a = SpectralSpace::build("anti", &["p", "q"], &[] as &[(&str, &str)]).unwrap();
        assert_eq!(
            SchemeMorphism::identity(&a).latitudinal(),
            LatitudinalClass::LevelSeparated
        );
    }

    #[test]
    fn latitudinal_constant_from_antichain_is_level_reduced() {
        let a = SpectralSpace::build("anti", &["p", "q"], &[] as &[(&str, &str)]).unwrap();
        let f = SchemeMorphism::from_map(&a, &a, vec![0, 0]).unwrap();
        assert_eq!(f.latitudinal(), LatitudinalClass::LevelReduced);
    }

    #[test]
    fn latitudinal_mixed_example() {
        let a3 = SpectralSpace::build("a3", &["p", "q", "r"], &[] as &[(&str, &str)]).unwrap();
        let a2 = SpectralSpace::build("a2", &["u", "v"], &[] as &[(&str, &str)]).unwrap();
        let f = SchemeMorphism::from_map(&a3, &a2, vec![0, 0, 1]).unwrap();
        assert_eq!(f.latitudinal(), LatitudinalClass::LevelMixed);
    }

    #[test]
    fn latitudinal_on_chain_source_is_vacuous() {
        let c = three_chain();
        let f = SchemeMorphism::identity(&c);
        assert_eq!(f.latitudinal(), LatitudinalClass::Vacuous);
        assert!(f.latitudinal().is_level_separated());
    }

    #[test]
    fn identity_is_sp_proper_everywhere() {
        let c = three_chain();
        let f = SchemeMorphism::identity(&c);
        assert!((0..3).all(|x| f.is_sp_proper_at(x)));
        assert!(f.is_sp_type());
    }

    #[test]
    fn gap_map_is_sp_type_with_norm_two() {
        // The designated stress instance: Sp-proper at both points, so
        // Sp-type holds, while the norm is 2.
        let x = two_chain();
        let y = three_chain();
        let f = gap_map(&x, &y);
        assert_eq!(f.sp_preimage(0), vec![0, 1]);
        assert!(f.is_sp_proper_at(0));
        assert!(f.is_sp_proper_at(1));
        assert!(f.is_sp_type());
        assert_eq!(f.norm().value, Ratio::from_integer(2));
    }

    #[test]
    fn constant_from_antichain_is_not_sp_type() {
        let a = SpectralSpace::build("anti", &["p", "q"], &[] as &[(&str, &str)]).unwrap();
        let pt = SpectralSpace::build("pt", &["o"], &[] as &[(&str, &str)]).unwrap();
        let f = SchemeMorphism::from_map(&a, &pt, vec![0, 0]).unwrap();
        assert!(!f.is_sp_proper_at(0) && !f.is_sp_connected_at(0));
        assert!(!f.is_sp_type());
    }

    #[test]
    fn chain_lifting_examples() {
        let c = three_chain();
        assert!(SchemeMorphism::identity(&c).has_chain_lifting());
        let x = two_chain();
        let f = gap_map(&x, &c);
        assert!(!f.has_chain_lifting(), "middle point has no preimage step");
    }

    #[test]
    fn chain_lifting_agrees_with_enumeration_oracle() {
        for nx in 1..=3usize {
            for ny in 1..=3usize {
                for &mx in &all_poset_masks(nx) {
                    for &my in &all_poset_masks(ny) {
                        let x = poset_from_mask(nx, mx);
                        let y = poset_from_mask(ny, my);
                        for map in TotalMaps::new(nx, ny) {
                            let Ok(f) = SchemeMorphism::from_map(&x, &y, map) else {
                                continue;
                            };
                            assert_eq!(
                                f.has_chain_lifting(),
                                f.chain_lifting_by_enumeration().unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn profile_of_gap_map() {
        let x = two_chain();
        let y = three_chain();
        let p = MorphismProfile::compute(&gap_map(&x, &y));
        assert_eq!(p.norm, Ratio::from_integer(2));
        assert_eq!(p.norm_witness, Some(("a".into(), "b".into())));
        assert!(p.sp_type && p.injective && !p.chain_lifting);
        assert!(!p.longitudinal.length_preserving);
        assert_eq!(p.latitudinal, LatitudinalClass::Vacuous);
    }
}
