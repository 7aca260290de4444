//! Exhaustive minimal-witness search for the documented non-implications
//! between injectivity, length preservation, and norm one.
//!
//! Instances are scanned by total point count, then source size, then
//! relation masks, then map order, so the first hit has the fewest total
//! points and is lexicographically least among witnesses of that size.
//! Zero-dimensional sources are skipped: every norm there is 0 by
//! definition and the claims degenerate.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::budget::Deadline;
use crate::enumerate::{all_poset_masks, map_is_monotone, poset_from_mask, TotalMaps};
use crate::error::{Error, Result};
use crate::jsonio::SpaceDoc;
use crate::lengths::Lengths;
use crate::morphism::SchemeMorphism;
use crate::ratio::Ratio;

/// Default total-point budget; the documented witnesses appear well inside.
pub const SEARCH_DEFAULT_TOTAL_POINTS: usize = 8;

/// Per-side cap inherited from the poset enumerator.
pub const SEARCH_SIDE_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SearchClaim {
    #[serde(rename = "length-preserving-not-injective")]
    LengthPreservingNotInjective,
    #[serde(rename = "injective-not-length-preserving")]
    InjectiveNotLengthPreserving,
    #[serde(rename = "norm-one-not-injective")]
    NormOneNotInjective,
    #[serde(rename = "injective-norm-not-one")]
    InjectiveNormNotOne,
}

impl SearchClaim {
    pub const ALL: [SearchClaim; 4] = [
        SearchClaim::LengthPreservingNotInjective,
        SearchClaim::InjectiveNotLengthPreserving,
        SearchClaim::NormOneNotInjective,
        SearchClaim::InjectiveNormNotOne,
    ];

    pub fn token(self) -> &'static str {
        match self {
            SearchClaim::LengthPreservingNotInjective => "length-preserving-not-injective",
            SearchClaim::InjectiveNotLengthPreserving => "injective-not-length-preserving",
            SearchClaim::NormOneNotInjective => "norm-one-not-injective",
            SearchClaim::InjectiveNormNotOne => "injective-norm-not-one",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            SearchClaim::LengthPreservingNotInjective => {
                "a length-preserving morphism that is not injective"
            }
            SearchClaim::InjectiveNotLengthPreserving => {
                "an injective morphism that is not length-preserving"
            }
            SearchClaim::NormOneNotInjective => "a norm-one morphism that is not injective",
            SearchClaim::InjectiveNormNotOne => "an injective morphism whose norm is not 1",
        }
    }
}

impl fmt::Display for SearchClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for SearchClaim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SearchClaim::ALL
            .into_iter()
            .find(|c| c.token() == s)
            .ok_or_else(|| {
                let tokens: Vec<&str> = SearchClaim::ALL.iter().map(|c| c.token()).collect();
                Error::InvalidConfig(format!(
                    "unknown claim {s:?}; expected one of {}",
                    tokens.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchWitness {
    pub claim: SearchClaim,
    pub total_points: usize,
    pub source: SpaceDoc,
    pub target: SpaceDoc,
    pub map: Vec<(String, String)>,
    pub norm: Ratio,
    pub injective: bool,
    pub length_preserving: bool,
}

/// True when the given accepted morphism exhibits the claim. A source of
/// dimension 0 never does: with no strict chain to preserve, length
/// preservation holds vacuously and the norm is 0 by convention, so such
/// morphisms say nothing about the implications under test.
pub fn claim_holds(claim: SearchClaim, f: &SchemeMorphism<'_>) -> bool {
    claim_holds_with(
        claim,
        f,
        &Lengths::new(f.source()),
        &Lengths::new(f.target()),
    )
}

fn claim_holds_with(
    claim: SearchClaim,
    f: &SchemeMorphism<'_>,
    source_lengths: &Lengths,
    target_lengths: &Lengths,
) -> bool {
    if source_lengths.dim() == 0 {
        return false;
    }
    match claim {
        SearchClaim::LengthPreservingNotInjective => {
            !f.is_injective() && f.is_length_preserving_with(source_lengths, target_lengths)
        }
        SearchClaim::InjectiveNotLengthPreserving => {
            f.is_injective() && !f.is_length_preserving_with(source_lengths, target_lengths)
        }
        SearchClaim::NormOneNotInjective => {
            !f.is_injective()
                && f.norm_with(source_lengths, target_lengths).value == Ratio::ONE
        }
        SearchClaim::InjectiveNormNotOne => {
            f.is_injective()
                && f.norm_with(source_lengths, target_lengths).value != Ratio::ONE
        }
    }
}

pub fn search_counterexample(
    claim: SearchClaim,
    max_total_points: usize,
) -> Result<SearchWitness> {
    let deadline = Deadline::from_env()?;
    let side_cap = max_total_points.saturating_sub(1).min(SEARCH_SIDE_CAP);
    // Mask lists are built on first use: most witnesses appear well before
    // the large sides are ever reached.
    let mut mask_cache: Vec<Option<Vec<u64>>> = vec![None; side_cap + 1];
    for total in 2..=max_total_points {
        for nx in 1..=side_cap {
            let Some(ny) = total.checked_sub(nx) else { continue };
            if ny < 1 || ny > side_cap {
                continue;
            }
            let source_masks = mask_cache[nx]
                .get_or_insert_with(|| all_poset_masks(nx))
                .clone();
            for mx in source_masks {
                let x = poset_from_mask(nx, mx);
                let source_lengths = Lengths::new(&x);
                // Flat sources exhibit no claim; skip before enumerating maps.
                if source_lengths.dim() == 0 {
                    continue;
                }
                let target_masks = mask_cache[ny]
                    .get_or_insert_with(|| all_poset_masks(ny))
                    .clone();
                for my in target_masks {
                    deadline.check("counterexample search")?;
                    let y = poset_from_mask(ny, my);
                    let target_lengths = Lengths::new(&y);
                    for map in TotalMaps::new(nx, ny) {
                        if !map_is_monotone(&x, &y, &map) {
                            continue;
                        }
                        let f = SchemeMorphism::from_map(&x, &y, map)
                            .expect("monotone by construction");
                        if claim_holds_with(claim, &f, &source_lengths, &target_lengths) {
                            return Ok(witness(claim, &f, &source_lengths, &target_lengths));
                        }
                    }
                }
            }
        }
    }
    Err(Error::NotFound)
}

fn witness(
    claim: SearchClaim,
    f: &SchemeMorphism<'_>,
    source_lengths: &Lengths,
    target_lengths: &Lengths,
) -> SearchWitness {
    SearchWitness {
        claim,
        total_points: f.source().len() + f.target().len(),
        source: SpaceDoc::from_space(f.source()),
        target: SpaceDoc::from_space(f.target()),
        map: (0..f.source().len())
            .map(|a| {
                (
                    f.source().point_name(a).to_owned(),
                    f.target().point_name(f.apply(a)).to_owned(),
                )
            })
            .collect(),
        norm: f.norm_with(source_lengths, target_lengths).value,
        injective: f.is_injective(),
        length_preserving: f.is_length_preserving_with(source_lengths, target_lengths),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_tokens_round_trip() {
        for claim in SearchClaim::ALL {
            assert_eq!(claim.token().parse::<SearchClaim>().unwrap(), claim);
        }
        assert!("nonsense".parse::<SearchClaim>().is_err());
    }

    #[test]
    fn collapsing_witness_is_minimal_for_both_non_injective_claims() {
        // Five points: a 2-chain plus an isolated point folded onto one
        // 2-chain. Length-preserving, norm one, not injective; no instance
        // with four total points qualifies.
        for claim in [
            SearchClaim::LengthPreservingNotInjective,
            SearchClaim::NormOneNotInjective,
        ] {
            let w = search_counterexample(claim, 6).unwrap();
            assert_eq!(w.total_points, 5, "{claim}");
            assert_eq!(w.source.points.len(), 3);
            assert_eq!(w.target.points.len(), 2);
            assert_eq!(
                w.map,
                vec![
                    ("p0".to_owned(), "p0".to_owned()),
                    ("p1".to_owned(), "p1".to_owned()),
                    ("p2".to_owned(), "p0".to_owned()),
                ],
                "{claim}"
            );
            assert_eq!(w.norm, Ratio::ONE);
            assert!(w.length_preserving);
            assert!(!w.injective);
        }
    }

    #[test]
    fn gap_witness_is_minimal_for_both_injective_claims() {
        for claim in [
            SearchClaim::InjectiveNotLengthPreserving,
            SearchClaim::InjectiveNormNotOne,
        ] {
            let w = search_counterexample(claim, 6).unwrap();
            assert_eq!(w.total_points, 5, "{claim}");
            assert_eq!(w.source.points.len(), 2);
            assert_eq!(w.target.points.len(), 3);
            assert_eq!(
                w.map,
                vec![
                    ("p0".to_owned(), "p0".to_owned()),
                    ("p1".to_owned(), "p2".to_owned()),
                ],
                "{claim}"
            );
            assert_eq!(w.norm, Ratio::new(2, 1));
            assert!(w.injective);
            assert!(!w.length_preserving);
        }
    }

    #[test]
    fn tight_budget_reports_not_found() {
        assert!(matches!(
            search_counterexample(SearchClaim::NormOneNotInjective, 4),
            Err(Error::NotFound)
        ));
    }

    #[test]
    fn chain_fold_exhibits_the_collapse_claims() {
        // The documented six-point witness: two 2-chains folded onto one.
        let x = crate::space::SpectralSpace::build(
            "fold-source",
            &["a1", "b1", "a2", "b2"],
            &[("a1", "b1"), ("a2", "b2")],
        )
        .unwrap();
        let y = crate::space::SpectralSpace::build("fold-target", &["a", "b"], &[("a", "b")])
            .unwrap();
        let f = SchemeMorphism::from_map(&x, &y, vec![0, 1, 0, 1]).unwrap();
        assert!(claim_holds(SearchClaim::LengthPreservingNotInjective, &f));
        assert!(claim_holds(SearchClaim::NormOneNotInjective, &f));
    }
}
