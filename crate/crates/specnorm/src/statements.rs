//! The checkable statement catalog.
//!
//! Each entry pairs a hypothesis predicate with a conclusion over morphisms
//! or spaces. Checkers evaluate hypotheses first and report `vacuous` when
//! they are unmet, otherwise `pass` or `fail` with a witness string, so
//! sweeps can separate genuine counterexamples from out-of-scope instances.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lengths::{is_catenaire_with, Lengths};
use crate::morphism::{MorphismProfile, SchemeMorphism};
use crate::ratio::Ratio;
use crate::space::SpectralSpace;

/// Catalog labels, used verbatim in configuration and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StatementId {
    #[serde(rename = "P1.4")]
    P14,
    #[serde(rename = "L1.5")]
    L15,
    #[serde(rename = "T1.6")]
    T16,
    #[serde(rename = "T2.7")]
    T27,
    #[serde(rename = "T2.8f")]
    T28Forward,
    #[serde(rename = "T2.8c")]
    T28Converse,
    #[serde(rename = "P2.6")]
    P26,
    #[serde(rename = "C2.9")]
    C29,
    #[serde(rename = "C2.10")]
    C210,
}

impl StatementId {
    pub const ALL: [StatementId; 9] = [
        StatementId::P14,
        StatementId::L15,
        StatementId::T16,
        StatementId::T27,
        StatementId::T28Forward,
        StatementId::T28Converse,
        StatementId::P26,
        StatementId::C29,
        StatementId::C210,
    ];

    pub fn token(self) -> &'static str {
        match self {
            StatementId::P14 => "P1.4",
            StatementId::L15 => "L1.5",
            StatementId::T16 => "T1.6",
            StatementId::T27 => "T2.7",
            StatementId::T28Forward => "T2.8f",
            StatementId::T28Converse => "T2.8c",
            StatementId::P26 => "P2.6",
            StatementId::C29 => "C2.9",
            StatementId::C210 => "C2.10",
        }
    }

    /// What the checker asserts, for human-readable summaries.
    pub fn description(self) -> &'static str {
        match self {
            StatementId::P14 => {
                "specialization preservation and generic-point preservation coincide"
            }
            StatementId::L15 => "accepted morphisms preserve every specialization",
            StatementId::T16 => "the graph functor preserves identities and composition",
            StatementId::T27 => "Sp-type morphisms have norm at most 1",
            StatementId::T28Forward => {
                "injective Sp-type morphisms between irreducible spaces are \
                 length-preserving and level-separated"
            }
            StatementId::T28Converse => {
                "length-preserving level-separated morphisms out of an irreducible \
                 catenaire space are injective"
            }
            StatementId::P26 => {
                "length-preserving chain-lifting morphisms between irreducible spaces \
                 preserve dimension"
            }
            StatementId::C29 => {
                "in catenaire irreducible spaces lengths add along factorizations and \
                 the length from the generic point is the corank"
            }
            StatementId::C210 => {
                "injective Sp-type morphisms with positive-dimensional source have norm 1"
            }
        }
    }

    /// Statements evaluated per morphism by [`verify_theorems`].
    pub fn is_morphism_statement(self) -> bool {
        matches!(
            self,
            StatementId::T27
                | StatementId::T28Forward
                | StatementId::T28Converse
                | StatementId::P26
                | StatementId::C210
        )
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.token() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown statement {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

#[derive(Debug, Clone, Serialize)]
pub struct StatementCheck {
    pub statement: StatementId,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl StatementCheck {
    fn vacuous(statement: StatementId) -> Self {
        StatementCheck {
            statement,
            status: Status::Vacuous,
            witness: None,
        }
    }

    fn pass(statement: StatementId) -> Self {
        StatementCheck {
            statement,
            status: Status::Pass,
            witness: None,
        }
    }

    fn fail(statement: StatementId, witness: String) -> Self {
        StatementCheck {
            statement,
            status: Status::Fail,
            witness: Some(witness),
        }
    }
}

/// Space-level hypotheses shared by several statements, computed once per
/// space during sweeps.
#[derive(Debug, Clone)]
pub struct SpaceFacts {
    pub irreducible: bool,
    pub catenaire: bool,
    pub lengths: Lengths,
}

impl SpaceFacts {
    pub fn new(space: &SpectralSpace) -> Self {
        let lengths = Lengths::new(space);
        SpaceFacts {
            irreducible: space.is_irreducible(),
            catenaire: is_catenaire_with(space, &lengths),
            lengths,
        }
    }
}

/// Per-statement verdicts for one morphism.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub source: String,
    pub target: String,
    pub map: Vec<(String, String)>,
    pub checks: Vec<StatementCheck>,
}

pub fn verify_theorems(f: &SchemeMorphism<'_>) -> TheoremReport {
    let source_facts = SpaceFacts::new(f.source());
    let target_facts = SpaceFacts::new(f.target());
    let profile = MorphismProfile::compute_with(f, &source_facts.lengths, &target_facts.lengths);
    let checks = StatementId::ALL
        .into_iter()
        .filter(|id| id.is_morphism_statement())
        .map(|id| check_morphism_statement(id, f, &profile, &source_facts, &target_facts))
        .collect();
    TheoremReport {
        source: f.source().name().to_owned(),
        target: f.target().name().to_owned(),
        map: (0..f.source().len())
            .map(|x| {
                (
                    f.source().point_name(x).to_owned(),
                    f.target().point_name(f.apply(x)).to_owned(),
                )
            })
            .collect(),
        checks,
    }
}

/// Evaluates one morphism-level statement against a precomputed profile.
///
/// # Panics
/// Panics when `id` is not a morphism statement.
pub fn check_morphism_statement(
    id: StatementId,
    f: &SchemeMorphism<'_>,
    profile: &MorphismProfile,
    source_facts: &SpaceFacts,
    target_facts: &SpaceFacts,
) -> StatementCheck {
    let witness_pair = || {
        profile
            .norm_witness
            .clone()
            .map(|(a, b)| format!(" at ({a}, {b})"))
            .unwrap_or_default()
    };
    match id {
        StatementId::T27 => {
            if !profile.sp_type {
                return StatementCheck::vacuous(id);
            }
            if profile.norm <= Ratio::ONE {
                StatementCheck::pass(id)
            } else {
                StatementCheck::fail(id, format!("norm {}{}", profile.norm, witness_pair()))
            }
        }
        StatementId::T28Forward => {
            if !(source_facts.irreducible
                && target_facts.irreducible
                && profile.injective
                && profile.sp_type)
            {
                return StatementCheck::vacuous(id);
            }
            if !profile.longitudinal.length_preserving {
                StatementCheck::fail(
                    id,
                    format!("not length-preserving, norm {}{}", profile.norm, witness_pair()),
                )
            } else if !profile.latitudinal.is_level_separated() {
                StatementCheck::fail(id, format!("latitudinal class {:?}", profile.latitudinal))
            } else {
                StatementCheck::pass(id)
            }
        }
        StatementId::T28Converse => {
            if !(source_facts.irreducible
                && source_facts.catenaire
                && profile.longitudinal.length_preserving
                && profile.latitudinal.is_level_separated())
            {
                return StatementCheck::vacuous(id);
            }
            if profile.injective {
                StatementCheck::pass(id)
            } else {
                let collision = first_collision(f).expect("non-injective map has a collision");
                StatementCheck::fail(
                    id,
                    format!(
                        "{} and {} share image {}",
                        f.source().point_name(collision.0),
                        f.source().point_name(collision.1),
                        f.target().point_name(f.apply(collision.0)),
                    ),
                )
            }
        }
        StatementId::P26 => {
            if !(source_facts.irreducible
                && target_facts.irreducible
                && profile.longitudinal.length_preserving
                && profile.chain_lifting)
            {
                return StatementCheck::vacuous(id);
            }
            let (dx, dy) = (source_facts.lengths.dim(), target_facts.lengths.dim());
            if dx == dy {
                StatementCheck::pass(id)
            } else {
                StatementCheck::fail(id, format!("source dimension {dx}, target dimension {dy}"))
            }
        }
        StatementId::C210 => {
            if !(profile.injective && profile.sp_type && source_facts.lengths.dim() > 0) {
                return StatementCheck::vacuous(id);
            }
            if profile.norm == Ratio::ONE {
                StatementCheck::pass(id)
            } else {
                StatementCheck::fail(id, format!("norm {}{}", profile.norm, witness_pair()))
            }
        }
        other => panic!("{other} is not a morphism statement"),
    }
}

fn first_collision(f: &SchemeMorphism<'_>) -> Option<(usize, usize)> {
    for x in 0..f.source().len() {
        for y in x + 1..f.source().len() {
            if f.apply(x) == f.apply(y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// The space-level statement: on a catenaire irreducible space, lengths add
/// along factorizations and the length from the generic point to any point
/// is the dimension minus that point's length. Vacuous elsewhere.
pub fn check_space_statement(space: &SpectralSpace, facts: &SpaceFacts) -> StatementCheck {
    let id = StatementId::C29;
    if space.is_empty() || !(facts.irreducible && facts.catenaire) {
        return StatementCheck::vacuous(id);
    }
    let n = space.len();
    for x in 0..n {
        for y in 0..n {
            if !space.strictly_specializes(x, y) {
                continue;
            }
            for z in 0..n {
                if !space.strictly_specializes(y, z) {
                    continue;
                }
                let (xz, xy, yz) = (
                    facts.lengths.between(x, z).unwrap(),
                    facts.lengths.between(x, y).unwrap(),
                    facts.lengths.between(y, z).unwrap(),
                );
                if xz != xy + yz {
                    return StatementCheck::fail(
                        id,
                        format!(
                            "l({x}, {z}) = {xz} but l({x}, {y}) + l({y}, {z}) = {}",
                            xy + yz,
                            x = space.point_name(x),
                            y = space.point_name(y),
                            z = space.point_name(z),
                        ),
                    );
                }
            }
        }
    }
    let generic = space.generic_point().expect("irreducible space");
    let dim = facts.lengths.dim();
    for x in 0..n {
        let forward = facts.lengths.between(generic, x).unwrap();
        let corank = dim - facts.lengths.of_point(x);
        if forward != corank {
            return StatementCheck::fail(
                id,
                format!(
                    "l({g}, {x}) = {forward} but dim {dim} - l({x}) = {corank}",
                    g = space.point_name(generic),
                    x = space.point_name(x),
                ),
            );
        }
    }
    StatementCheck::pass(id)
}
