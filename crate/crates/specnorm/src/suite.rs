//! The property suite: an exhaustive sweep over all small spaces and
//! monotone maps plus a seeded randomized phase, aggregating the statement
//! catalog and the module invariants into one deterministic report.
//!
//! Failures are tallied per statement; the first failing instance of each
//! check is dumped as a finding and independently re-verified with the
//! brute-force oracles (chain enumeration, definitional scans). A finding
//! whose oracle re-check disagrees is flagged and fails the run on its own:
//! silent inconsistency between the two routes is never acceptable.
//!
//! Instances are generated smallest-first (total point count, then source
//! size, then relation masks, then map order), so the first finding per
//! check is a minimal witness within the sweep.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::Deadline;
use crate::enumerate::{all_poset_masks, map_is_monotone, poset_from_mask, TotalMaps};
use crate::error::{Error, Result};
use crate::graph::{check_functor_laws, gamma_morphism};
use crate::jsonio::SpaceDoc;
use crate::lengths::{brute_force_length, catenaire_by_maximal_chains, Lengths};
use crate::morphism::{
    map_preserves_generic_points, map_preserves_specialization, MorphismProfile, SchemeMorphism,
};
use crate::random::{random_monotone_map, random_poset};
use crate::ratio::Ratio;
use crate::space::SpectralSpace;
use crate::statements::{
    check_morphism_statement, check_space_statement, SpaceFacts, StatementCheck, StatementId,
    Status,
};

pub const SUITE_MAX_POINTS_CAP: usize = 5;
pub const SUITE_RANDOM_SIZE_CAP: usize = 12;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub max_points: usize,
    pub random_trials: u64,
    pub random_size: usize,
    pub seed: u64,
    pub statements: BTreeSet<StatementId>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_points: 4,
            random_trials: 1000,
            random_size: 8,
            seed: 0,
            statements: StatementId::ALL.into_iter().collect(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_points > SUITE_MAX_POINTS_CAP {
            return Err(Error::InvalidConfig(format!(
                "max_points {} exceeds the cap of {SUITE_MAX_POINTS_CAP}",
                self.max_points
            )));
        }
        if self.random_size > SUITE_RANDOM_SIZE_CAP {
            return Err(Error::InvalidConfig(format!(
                "random_size {} exceeds the cap of {SUITE_RANDOM_SIZE_CAP}",
                self.random_size
            )));
        }
        if self.random_trials > 0 && self.random_size == 0 {
            return Err(Error::InvalidConfig(
                "random_size must be positive when random trials are requested".into(),
            ));
        }
        Ok(())
    }

    /// Module-invariant sweeps accompany the full catalog; restricted runs
    /// check exactly the selected statements plus the sanity invariants.
    pub fn full_catalog(&self) -> bool {
        self.statements.len() == StatementId::ALL.len()
    }
}

/// Report order for invariant tallies. The first six are sanity checks tying
/// the fast implementations to their definitions; the last two restate
/// documented norm bounds and run only with the full catalog.
const INVARIANTS: [&str; 8] = [
    "length-oracle-agreement",
    "uip-holds",
    "closure-generic-uniqueness",
    "closest-specialization-length-one",
    "norm-witness-validity",
    "zero-dimensional-source-norm",
    "length-preserving-norm-bound",
    "surjective-equal-dimension-norm",
];

const INV_ORACLE: usize = 0;
const INV_UIP: usize = 1;
const INV_GENERIC: usize = 2;
const INV_COVER: usize = 3;
const INV_WITNESS: usize = 4;
const INV_ZERO_DIM: usize = 5;
const INV_LP_BOUND: usize = 6;
const INV_SURJECTIVE: usize = 7;

#[derive(Debug, Clone, Serialize)]
pub struct StatementTally {
    pub statement: StatementId,
    pub description: &'static str,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub vacuous: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantTally {
    pub invariant: &'static str,
    pub checked: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FindingInstance {
    pub source: SpaceDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<SpaceDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<(String, String)>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub check: String,
    pub phase: &'static str,
    pub total_points: usize,
    pub instance: FindingInstance,
    pub detail: String,
    pub reverified: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ExhaustiveStats {
    pub spaces: u64,
    pub total_maps: u64,
    pub morphisms: u64,
    pub composable_pairs: u64,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RandomStats {
    pub trials: u64,
    pub posets: u64,
    pub morphisms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub exhaustive: ExhaustiveStats,
    pub random: RandomStats,
    pub statements: Vec<StatementTally>,
    pub invariants: Vec<InvariantTally>,
    pub findings: Vec<Finding>,
    pub non_vacuous_failures: u64,
    pub unverified_findings: u64,
    pub pass: bool,
}

impl SuiteReport {
    pub fn statement(&self, id: StatementId) -> &StatementTally {
        self.statements
            .iter()
            .find(|t| t.statement == id)
            .expect("all statements are tallied")
    }

    pub fn invariant(&self, name: &str) -> &InvariantTally {
        self.invariants
            .iter()
            .find(|t| t.invariant == name)
            .expect("known invariant name")
    }
}

pub fn run_property_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let mut runner = Runner::new(cfg.clone())?;
    runner.exhaustive_phase()?;
    runner.random_phase()?;
    Ok(runner.finish())
}

#[derive(Default, Clone, Copy)]
struct Cells {
    checked: u64,
    passed: u64,
    failed: u64,
    vacuous: u64,
}

struct SpaceEntry {
    n: usize,
    space: SpectralSpace,
    facts: SpaceFacts,
    covers: Vec<(usize, usize)>,
}

struct Runner {
    cfg: SuiteConfig,
    deadline: Deadline,
    need_profile: bool,
    stmt: [Cells; StatementId::ALL.len()],
    inv: [(u64, u64); INVARIANTS.len()],
    findings: Vec<Finding>,
    seen: BTreeSet<String>,
    failures: u64,
    unverified: u64,
    ex: ExhaustiveStats,
    rnd: RandomStats,
}

impl Runner {
    fn new(cfg: SuiteConfig) -> Result<Self> {
        let need_profile = cfg.full_catalog()
            || cfg
                .statements
                .iter()
                .any(|id| id.is_morphism_statement());
        Ok(Runner {
            cfg,
            deadline: Deadline::from_env()?,
            need_profile,
            stmt: [Cells::default(); StatementId::ALL.len()],
            inv: [(0, 0); INVARIANTS.len()],
            findings: Vec::new(),
            seen: BTreeSet::new(),
            failures: 0,
            unverified: 0,
            ex: ExhaustiveStats::default(),
            rnd: RandomStats::default(),
        })
    }

    fn selected(&self, id: StatementId) -> bool {
        self.cfg.statements.contains(&id)
    }

    fn stmt_index(id: StatementId) -> usize {
        StatementId::ALL
            .iter()
            .position(|&s| s == id)
            .expect("catalog statement")
    }

    fn tally(&mut self, id: StatementId, status: Status) {
        let cell = &mut self.stmt[Self::stmt_index(id)];
        cell.checked += 1;
        match status {
            Status::Pass => cell.passed += 1,
            Status::Fail => {
                cell.failed += 1;
                self.failures += 1;
            }
            Status::Vacuous => cell.vacuous += 1,
        }
    }

    fn tally_invariant(&mut self, idx: usize, ok: bool) {
        self.inv[idx].0 += 1;
        if !ok {
            self.inv[idx].1 += 1;
            self.failures += 1;
        }
    }

    fn push_finding(
        &mut self,
        check: &str,
        phase: &'static str,
        instance: FindingInstance,
        total_points: usize,
        detail: String,
        reverified: bool,
    ) {
        if !self.seen.insert(check.to_owned()) {
            return;
        }
        if !reverified {
            self.unverified += 1;
        }
        self.findings.push(Finding {
            check: check.to_owned(),
            phase,
            total_points,
            instance,
            detail,
            reverified,
        });
    }

    fn record_space_failure(
        &mut self,
        check: &str,
        phase: &'static str,
        space: &SpectralSpace,
        detail: String,
    ) -> Result<()> {
        if self.seen.contains(check) {
            return Ok(());
        }
        let reverified = reverify_space_check(check, space)?;
        let instance = FindingInstance {
            source: SpaceDoc::from_space(space),
            target: None,
            map: None,
        };
        self.push_finding(check, phase, instance, space.len(), detail, reverified);
        Ok(())
    }

    fn record_morphism_failure(
        &mut self,
        check: &str,
        phase: &'static str,
        x: &SpectralSpace,
        y: &SpectralSpace,
        map: &[usize],
        detail: String,
    ) -> Result<()> {
        if self.seen.contains(check) {
            return Ok(());
        }
        let reverified = reverify_morphism_check(check, x, y, map)?;
        let instance = FindingInstance {
            source: SpaceDoc::from_space(x),
            target: Some(SpaceDoc::from_space(y)),
            map: Some(
                map.iter()
                    .enumerate()
                    .map(|(a, &b)| (x.point_name(a).to_owned(), y.point_name(b).to_owned()))
                    .collect(),
            ),
        };
        self.push_finding(check, phase, instance, x.len() + y.len(), detail, reverified);
        Ok(())
    }

    fn space_checks(
        &mut self,
        phase: &'static str,
        space: &SpectralSpace,
        facts: &SpaceFacts,
    ) -> Result<()> {
        let n = space.len();

        let mut oracle_ok = true;
        let mut oracle_detail = String::new();
        for x in 0..n {
            for y in 0..n {
                if !space.specializes(x, y) {
                    continue;
                }
                let brute = brute_force_length(space, x, y)?;
                if facts.lengths.between(x, y) != Some(brute) {
                    oracle_ok = false;
                    oracle_detail = format!(
                        "l({}, {}) = {:?} but chain enumeration gives {brute}",
                        space.point_name(x),
                        space.point_name(y),
                        facts.lengths.between(x, y),
                    );
                }
            }
        }
        self.tally_invariant(INV_ORACLE, oracle_ok);
        if !oracle_ok {
            self.record_space_failure(INVARIANTS[INV_ORACLE], phase, space, oracle_detail)?;
        }

        let uip = space.check_uip()?;
        self.tally_invariant(INV_UIP, uip.holds);
        if !uip.holds {
            let detail = uip.violations.join("; ");
            self.record_space_failure(INVARIANTS[INV_UIP], phase, space, detail)?;
        }

        let mut generic_ok = true;
        let mut generic_detail = String::new();
        for x in 0..n {
            let generics = space.sp_closure(x).generic_points()?;
            if generics.members() != [x] {
                generic_ok = false;
                generic_detail = format!(
                    "closure of {} has generic points {:?}",
                    space.point_name(x),
                    generics.names(),
                );
            }
        }
        self.tally_invariant(INV_GENERIC, generic_ok);
        if !generic_ok {
            self.record_space_failure(INVARIANTS[INV_GENERIC], phase, space, generic_detail)?;
        }

        let mut cover_ok = true;
        let mut cover_detail = String::new();
        for x in 0..n {
            for y in 0..n {
                if !space.strictly_specializes(x, y) {
                    continue;
                }
                let closest = space.is_closest_specialization(x, y)?;
                if closest != (facts.lengths.between(x, y) == Some(1)) {
                    cover_ok = false;
                    cover_detail = format!(
                        "({}, {}) closest={closest} but l={:?}",
                        space.point_name(x),
                        space.point_name(y),
                        facts.lengths.between(x, y),
                    );
                }
            }
        }
        self.tally_invariant(INV_COVER, cover_ok);
        if !cover_ok {
            self.record_space_failure(INVARIANTS[INV_COVER], phase, space, cover_detail)?;
        }

        if self.selected(StatementId::C29) {
            let check = check_space_statement(space, facts);
            self.tally(StatementId::C29, check.status);
            if check.status == Status::Fail {
                let detail = check.witness.clone().unwrap_or_default();
                self.record_space_failure(StatementId::C29.token(), phase, space, detail)?;
            }
        }
        Ok(())
    }

    fn morphism_checks(
        &mut self,
        phase: &'static str,
        x: &SpectralSpace,
        y: &SpectralSpace,
        map: &[usize],
        facts_x: &SpaceFacts,
        facts_y: &SpaceFacts,
    ) -> Result<()> {
        if self.selected(StatementId::L15) {
            let ok = map_preserves_specialization(x, y, map) && edge_compatible(x, y, map);
            self.tally(
                StatementId::L15,
                if ok { Status::Pass } else { Status::Fail },
            );
            if !ok {
                self.record_morphism_failure(
                    StatementId::L15.token(),
                    phase,
                    x,
                    y,
                    map,
                    "accepted morphism breaks specialization or edge compatibility".into(),
                )?;
            }
        }

        if !self.need_profile {
            return Ok(());
        }
        let f = SchemeMorphism::from_map(x, y, map.to_vec()).expect("maps here are monotone");
        let profile = MorphismProfile::compute_with(&f, &facts_x.lengths, &facts_y.lengths);

        for id in [
            StatementId::T27,
            StatementId::T28Forward,
            StatementId::T28Converse,
            StatementId::P26,
            StatementId::C210,
        ] {
            if !self.selected(id) {
                continue;
            }
            let check: StatementCheck =
                check_morphism_statement(id, &f, &profile, facts_x, facts_y);
            self.tally(id, check.status);
            if check.status == Status::Fail {
                let detail = check.witness.clone().unwrap_or_default();
                self.record_morphism_failure(id.token(), phase, x, y, map, detail)?;
            }
        }

        let norm = f.norm_with(&facts_x.lengths, &facts_y.lengths);
        let witness_ok = match norm.witness {
            Some((a, b)) => match facts_x.lengths.between(a, b) {
                Some(l) if l > 0 => {
                    let image = facts_y.lengths.between(map[a], map[b]).unwrap_or(0);
                    Ratio::new(u64::from(image), u64::from(l)) == norm.value
                }
                _ => false,
            },
            None => norm.value == Ratio::ZERO,
        };
        self.tally_invariant(INV_WITNESS, witness_ok);
        if !witness_ok {
            self.record_morphism_failure(
                INVARIANTS[INV_WITNESS],
                phase,
                x,
                y,
                map,
                format!("norm {} with witness {:?}", norm.value, profile.norm_witness),
            )?;
        }

        let (dim_x, dim_y) = (facts_x.lengths.dim(), facts_y.lengths.dim());
        if dim_x == 0 {
            let ok = norm.value == Ratio::ZERO;
            self.tally_invariant(INV_ZERO_DIM, ok);
            if !ok {
                self.record_morphism_failure(
                    INVARIANTS[INV_ZERO_DIM],
                    phase,
                    x,
                    y,
                    map,
                    format!("norm {} from a zero-dimensional source", norm.value),
                )?;
            }
        }

        if self.cfg.full_catalog() {
            if profile.longitudinal.length_preserving {
                let ok = norm.value <= Ratio::ONE && dim_x <= dim_y;
                self.tally_invariant(INV_LP_BOUND, ok);
                if !ok {
                    self.record_morphism_failure(
                        INVARIANTS[INV_LP_BOUND],
                        phase,
                        x,
                        y,
                        map,
                        format!(
                            "length-preserving with norm {} and dimensions {dim_x} -> {dim_y}",
                            norm.value
                        ),
                    )?;
                }
            }
            let surjective = (0..y.len()).all(|b| map.contains(&b));
            if surjective && dim_x == dim_y && dim_x >= 1 {
                let ok = norm.value >= Ratio::ONE;
                self.tally_invariant(INV_SURJECTIVE, ok);
                if !ok {
                    self.record_morphism_failure(
                        INVARIANTS[INV_SURJECTIVE],
                        phase,
                        x,
                        y,
                        map,
                        format!(
                            "surjective between spaces of dimension {dim_x} yet norm {}",
                            norm.value
                        ),
                    )?;
                }
            }
        }
        Ok(())
    }

    fn check_p14(
        &mut self,
        phase: &'static str,
        x: &SpectralSpace,
        y: &SpectralSpace,
        map: &[usize],
    ) -> Result<()> {
        let sp = map_preserves_specialization(x, y, map);
        let ip = map_preserves_generic_points(x, y, map);
        self.tally(
            StatementId::P14,
            if sp == ip { Status::Pass } else { Status::Fail },
        );
        if sp != ip {
            self.record_morphism_failure(
                StatementId::P14.token(),
                phase,
                x,
                y,
                map,
                format!("specialization-preserving={sp} generic-point-preserving={ip}"),
            )?;
        }
        Ok(())
    }

    fn exhaustive_phase(&mut self) -> Result<()> {
        let max = self.cfg.max_points;
        let mut entries = Vec::new();
        let mut groups: Vec<std::ops::Range<usize>> = vec![0..0; max + 1];
        for n in 1..=max {
            let start = entries.len();
            for &mask in &all_poset_masks(n) {
                let space = poset_from_mask(n, mask);
                let facts = SpaceFacts::new(&space);
                let covers = space.cover_pairs();
                entries.push(SpaceEntry {
                    n,
                    space,
                    facts,
                    covers,
                });
            }
            groups[n] = start..entries.len();
        }
        self.ex.spaces = entries.len() as u64;

        let t16 = self.selected(StatementId::T16);
        for e in &entries {
            self.deadline.check("exhaustive space sweep")?;
            self.space_checks("exhaustive", &e.space, &e.facts)?;
            if t16 {
                let hom = gamma_morphism(&SchemeMorphism::identity(&e.space));
                let ok = hom.source.same_shape(&hom.target)
                    && hom.vertex_map == (0..e.n).collect::<Vec<_>>();
                self.tally(
                    StatementId::T16,
                    if ok { Status::Pass } else { Status::Fail },
                );
                if !ok {
                    self.record_space_failure(
                        StatementId::T16.token(),
                        "exhaustive",
                        &e.space,
                        "identity morphism does not map to the identity graph morphism".into(),
                    )?;
                }
            }
        }

        let count = entries.len();
        let mut pair_maps: Vec<Vec<u8>> = if t16 {
            vec![Vec::new(); count * count]
        } else {
            Vec::new()
        };
        let p14 = self.selected(StatementId::P14);
        for total in 2..=2 * max {
            for nx in 1..=max {
                let Some(ny) = total.checked_sub(nx) else { continue };
                if ny < 1 || ny > max {
                    continue;
                }
                for i in groups[nx].clone() {
                    for j in groups[ny].clone() {
                        self.deadline.check("exhaustive morphism sweep")?;
                        for map in TotalMaps::new(nx, ny) {
                            self.ex.total_maps += 1;
                            if p14 {
                                self.check_p14(
                                    "exhaustive",
                                    &entries[i].space,
                                    &entries[j].space,
                                    &map,
                                )?;
                            }
                            if !map_is_monotone(&entries[i].space, &entries[j].space, &map) {
                                continue;
                            }
                            self.ex.morphisms += 1;
                            self.morphism_checks(
                                "exhaustive",
                                &entries[i].space,
                                &entries[j].space,
                                &map,
                                &entries[i].facts,
                                &entries[j].facts,
                            )?;
                            if t16 {
                                pair_maps[i * count + j]
                                    .extend(map.iter().map(|&v| v as u8));
                            }
                        }
                    }
                }
            }
        }

        if t16 {
            self.composition_sweep(&entries, &pair_maps)?;
        }
        Ok(())
    }

    /// Composition half of the functor laws. The graphs of the composite and
    /// of the composition are determined by the same endpoint spaces and the
    /// same composed point map, so per pair only validity of the composite
    /// is at stake; one full graph-level check per space triple exercises
    /// the real construction end to end.
    fn composition_sweep(&mut self, entries: &[SpaceEntry], pair_maps: &[Vec<u8>]) -> Result<()> {
        let count = entries.len();
        let mut comp = vec![0usize; SUITE_MAX_POINTS_CAP];
        for j in 0..count {
            self.deadline.check("functor-law composition sweep")?;
            let nj = entries[j].n;
            for i in 0..count {
                let nx = entries[i].n;
                let in_maps = &pair_maps[i * count + j];
                let fcount = in_maps.len() / nx;
                for k in 0..count {
                    let out_maps = &pair_maps[j * count + k];
                    let gcount = out_maps.len() / nj;
                    let z = &entries[k].space;
                    for fi in 0..fcount {
                        let fmap = &in_maps[fi * nx..(fi + 1) * nx];
                        for gi in 0..gcount {
                            let gmap = &out_maps[gi * nj..(gi + 1) * nj];
                            self.ex.composable_pairs += 1;
                            for a in 0..nx {
                                comp[a] = gmap[fmap[a] as usize] as usize;
                            }
                            let mut ok = entries[i]
                                .covers
                                .iter()
                                .all(|&(a, b)| z.specializes(comp[a], comp[b]));
                            if fi == 0 && gi == 0 {
                                let f = SchemeMorphism::from_map(
                                    &entries[i].space,
                                    &entries[j].space,
                                    fmap.iter().map(|&v| v as usize).collect(),
                                )
                                .expect("stored maps are monotone");
                                let g = SchemeMorphism::from_map(
                                    &entries[j].space,
                                    &entries[k].space,
                                    gmap.iter().map(|&v| v as usize).collect(),
                                )
                                .expect("stored maps are monotone");
                                ok &= check_functor_laws(&f, &g)?;
                            }
                            self.tally(
                                StatementId::T16,
                                if ok { Status::Pass } else { Status::Fail },
                            );
                            if !ok {
                                let detail = format!(
                                    "composite through {} of maps {:?} and {:?} breaks the laws",
                                    entries[j].space.name(),
                                    fmap,
                                    gmap,
                                );
                                self.record_morphism_failure(
                                    StatementId::T16.token(),
                                    "exhaustive",
                                    &entries[i].space,
                                    z,
                                    &comp[..nx],
                                    detail,
                                )?;
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn random_phase(&mut self) -> Result<()> {
        if self.cfg.random_trials == 0 {
            return Ok(());
        }
        let mut master = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        for _ in 0..self.cfg.random_trials {
            self.deadline.check("randomized suite phase")?;
            self.rnd.trials += 1;
            let nx = master.random_range(1..=self.cfg.random_size);
            let dx = Ratio::new(master.random_range(0..=4), 4);
            let x = random_poset(nx, dx, master.random())?;
            let ny = master.random_range(1..=self.cfg.random_size);
            let dy = Ratio::new(master.random_range(0..=4), 4);
            let y = random_poset(ny, dy, master.random())?;
            let map = random_monotone_map(&x, &y, &mut master);
            self.rnd.posets += 2;
            self.rnd.morphisms += 1;

            let facts_x = SpaceFacts::new(&x);
            let facts_y = SpaceFacts::new(&y);
            self.space_checks("random", &x, &facts_x)?;
            self.space_checks("random", &y, &facts_y)?;
            self.morphism_checks("random", &x, &y, &map, &facts_x, &facts_y)?;
        }
        Ok(())
    }

    fn finish(self) -> SuiteReport {
        let statements = StatementId::ALL
            .iter()
            .zip(self.stmt.iter())
            .map(|(&statement, cells)| StatementTally {
                statement,
                description: statement.description(),
                checked: cells.checked,
                passed: cells.passed,
                failed: cells.failed,
                vacuous: cells.vacuous,
            })
            .collect();
        let invariants = INVARIANTS
            .iter()
            .zip(self.inv.iter())
            .map(|(&invariant, &(checked, failed))| InvariantTally {
                invariant,
                checked,
                failed,
            })
            .collect();
        let pass = self.failures == 0 && self.unverified == 0;
        SuiteReport {
            config: self.cfg,
            exhaustive: self.ex,
            random: self.rnd,
            statements,
            invariants,
            findings: self.findings,
            non_vacuous_failures: self.failures,
            unverified_findings: self.unverified,
            pass,
        }
    }
}

fn edge_compatible(x: &SpectralSpace, y: &SpectralSpace, map: &[usize]) -> bool {
    (0..x.len()).all(|a| {
        (0..x.len()).all(|b| {
            !x.strictly_specializes(a, b)
                || map[a] == map[b]
                || y.strictly_specializes(map[a], map[b])
        })
    })
}

/// Brute-force length table over all comparable pairs, `None` elsewhere.
fn brute_table(space: &SpectralSpace) -> Result<Vec<Vec<Option<u32>>>> {
    let n = space.len();
    let mut table = vec![vec![None; n]; n];
    for x in 0..n {
        for y in 0..n {
            if space.specializes(x, y) {
                table[x][y] = Some(brute_force_length(space, x, y)?);
            }
        }
    }
    Ok(table)
}

fn brute_dim(table: &[Vec<Option<u32>>]) -> u32 {
    table
        .iter()
        .flatten()
        .filter_map(|&v| v)
        .max()
        .unwrap_or(0)
}

fn brute_point_lengths(table: &[Vec<Option<u32>>]) -> Vec<u32> {
    table
        .iter()
        .map(|row| row.iter().filter_map(|&v| v).max().unwrap_or(0))
        .collect()
}

fn brute_norm(
    map: &[usize],
    tx: &[Vec<Option<u32>>],
    ty: &[Vec<Option<u32>>],
) -> Ratio {
    let mut best = Ratio::ZERO;
    for a in 0..map.len() {
        for b in 0..map.len() {
            match tx[a][b] {
                Some(l) if l > 0 => {
                    let image = ty[map[a]][map[b]].unwrap_or(0);
                    let ratio = Ratio::new(u64::from(image), u64::from(l));
                    if ratio > best {
                        best = ratio;
                    }
                }
                _ => {}
            }
        }
    }
    best
}

fn brute_length_preserving(map: &[usize], tx: &[Vec<Option<u32>>], ty: &[Vec<Option<u32>>]) -> bool {
    for a in 0..map.len() {
        for b in 0..map.len() {
            if let Some(l) = tx[a][b] {
                if ty[map[a]][map[b]] != Some(l) {
                    return false;
                }
            }
        }
    }
    true
}

/// No incomparable equal-length pair maps to a comparable pair; matches the
/// union of the level-separated and vacuous classes.
fn brute_level_separated(
    x: &SpectralSpace,
    y: &SpectralSpace,
    map: &[usize],
    point_lengths: &[u32],
) -> bool {
    for a in 0..x.len() {
        for b in a + 1..x.len() {
            if x.sp_connected(a, b) || point_lengths[a] != point_lengths[b] {
                continue;
            }
            if y.sp_connected(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}

fn brute_irreducible(space: &SpectralSpace) -> bool {
    (0..space.len()).any(|g| (0..space.len()).all(|z| space.specializes(g, z)))
}

fn brute_sp_type(x: &SpectralSpace, y: &SpectralSpace, map: &[usize]) -> bool {
    (0..x.len()).all(|x0| {
        let pre: Vec<usize> = (0..x.len())
            .filter(|&a| y.specializes(map[x0], map[a]))
            .collect();
        let proper = pre.iter().all(|&a| x.specializes(x0, a));
        let connected = pre
            .iter()
            .all(|&a| pre.iter().all(|&b| x.sp_connected(a, b)));
        proper || connected
    })
}

/// Re-derives a reported morphism-level failure from scratch using only the
/// brute-force primitives; `true` means the failure reproduces.
fn reverify_morphism_check(
    check: &str,
    x: &SpectralSpace,
    y: &SpectralSpace,
    map: &[usize],
) -> Result<bool> {
    let tx = brute_table(x)?;
    let ty = brute_table(y)?;
    let dim_x = brute_dim(&tx);
    let dim_y = brute_dim(&ty);
    let norm = if dim_x == 0 {
        Ratio::ZERO
    } else {
        brute_norm(map, &tx, &ty)
    };
    let injective = (0..map.len()).all(|a| (a + 1..map.len()).all(|b| map[a] != map[b]));
    let lp = brute_length_preserving(map, &tx, &ty);
    let level_sep = brute_level_separated(x, y, map, &brute_point_lengths(&tx));
    match check {
        "P1.4" => Ok(map_preserves_specialization(x, y, map)
            != map_preserves_generic_points(x, y, map)),
        "L1.5" => Ok(!(map_preserves_specialization(x, y, map) && edge_compatible(x, y, map))),
        "T1.6" => Ok(!map_is_monotone(x, y, map)),
        "T2.7" => Ok(brute_sp_type(x, y, map) && norm > Ratio::ONE),
        "T2.8f" => Ok(brute_irreducible(x)
            && brute_irreducible(y)
            && injective
            && brute_sp_type(x, y, map)
            && !(lp && level_sep)),
        "T2.8c" => Ok(brute_irreducible(x)
            && catenaire_by_maximal_chains(x)?
            && lp
            && level_sep
            && !injective),
        "P2.6" => {
            let f = SchemeMorphism::from_map(x, y, map.to_vec())?;
            Ok(brute_irreducible(x)
                && brute_irreducible(y)
                && lp
                && f.chain_lifting_by_enumeration()?
                && dim_x != dim_y)
        }
        "C2.10" => Ok(injective && brute_sp_type(x, y, map) && dim_x > 0 && norm != Ratio::ONE),
        "norm-witness-validity" => {
            let primary = SchemeMorphism::from_map(x, y, map.to_vec())?.norm();
            let value_ok = primary.value == norm;
            let witness_ok = match primary.witness {
                Some((a, b)) => matches!(tx[a][b], Some(l) if l > 0
                    && Ratio::new(u64::from(ty[map[a]][map[b]].unwrap_or(0)), u64::from(l))
                        == primary.value),
                None => primary.value == Ratio::ZERO,
            };
            Ok(!(value_ok && witness_ok))
        }
        "zero-dimensional-source-norm" => Ok(dim_x == 0 && norm != Ratio::ZERO),
        "length-preserving-norm-bound" => Ok(lp && (norm > Ratio::ONE || dim_x > dim_y)),
        "surjective-equal-dimension-norm" => {
            let surjective = (0..y.len()).all(|b| map.contains(&b));
            Ok(surjective && dim_x == dim_y && dim_x >= 1 && norm < Ratio::ONE)
        }
        other => panic!("no reverifier for {other}"),
    }
}

/// Space-level counterpart of [`reverify_morphism_check`].
fn reverify_space_check(check: &str, space: &SpectralSpace) -> Result<bool> {
    let n = space.len();
    match check {
        "C2.9" => {
            if !(brute_irreducible(space) && catenaire_by_maximal_chains(space)?) {
                return Ok(false);
            }
            let t = brute_table(space)?;
            let dim = brute_dim(&t);
            let pl = brute_point_lengths(&t);
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if space.strictly_specializes(x, y) && space.strictly_specializes(y, z) {
                            let (Some(xz), Some(xy), Some(yz)) = (t[x][z], t[x][y], t[y][z])
                            else {
                                return Ok(true);
                            };
                            if xz != xy + yz {
                                return Ok(true);
                            }
                        }
                    }
                }
            }
            let generic = (0..n)
                .find(|&g| (0..n).all(|z| space.specializes(g, z)))
                .expect("irreducible space");
            Ok((0..n).any(|x| t[generic][x] != Some(dim - pl[x])))
        }
        "length-oracle-agreement" => {
            let lengths = Lengths::new(space);
            for x in 0..n {
                for y in 0..n {
                    if space.specializes(x, y)
                        && lengths.between(x, y) != Some(brute_force_length(space, x, y)?)
                    {
                        return Ok(true);
                    }
                }
            }
            Ok(false)
        }
        "uip-holds" => Ok(!space.check_uip()?.holds),
        "closure-generic-uniqueness" => {
            for x in 0..n {
                let closure: Vec<usize> =
                    (0..n).filter(|&z| space.specializes(x, z)).collect();
                let generics: Vec<usize> = closure
                    .iter()
                    .copied()
                    .filter(|&g| closure.iter().all(|&z| space.specializes(g, z)))
                    .collect();
                if generics != [x] {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        "closest-specialization-length-one" => {
            for x in 0..n {
                for y in 0..n {
                    if space.strictly_specializes(x, y)
                        && space.is_closest_specialization(x, y)?
                            != (brute_force_length(space, x, y)? == 1)
                    {
                        return Ok(true);
                    }
                }
            }
            Ok(false)
        }
        other => panic!("no space reverifier for {other}"),
    }
}

/// Fixed-format human summary; pinned by golden tests, so changes here are
/// intentionally breaking.
pub fn render_summary(report: &SuiteReport) -> String {
    let mut out = String::new();
    let tokens: Vec<&str> = report
        .config
        .statements
        .iter()
        .map(|id| id.token())
        .collect();
    out.push_str("specnorm property suite\n");
    out.push_str(&format!(
        "  config: max_points={} random_trials={} random_size={} seed={} statements={}\n",
        report.config.max_points,
        report.config.random_trials,
        report.config.random_size,
        report.config.seed,
        tokens.join(","),
    ));
    out.push_str(&format!(
        "  exhaustive: {} spaces, {} total maps, {} morphisms, {} composable pairs\n",
        report.exhaustive.spaces,
        report.exhaustive.total_maps,
        report.exhaustive.morphisms,
        report.exhaustive.composable_pairs,
    ));
    out.push_str(&format!(
        "  random: {} trials, {} posets, {} morphisms\n",
        report.random.trials, report.random.posets, report.random.morphisms,
    ));
    out.push_str("statements:\n");
    for t in &report.statements {
        out.push_str(&format!(
            "  {:<6} checked={} passed={} failed={} vacuous={}\n",
            t.statement.token(),
            t.checked,
            t.passed,
            t.failed,
            t.vacuous,
        ));
    }
    out.push_str("invariants:\n");
    for t in &report.invariants {
        out.push_str(&format!(
            "  {:<34} checked={} failed={}\n",
            t.invariant, t.checked, t.failed,
        ));
    }
    if report.findings.is_empty() {
        out.push_str("findings: none\n");
    } else {
        out.push_str("findings (first instance per check):\n");
        for f in &report.findings {
            out.push_str(&format!(
                "  {} [{}, {} points, {}] {}\n",
                f.check,
                f.phase,
                f.total_points,
                if f.reverified {
                    "reverified"
                } else {
                    "UNVERIFIED"
                },
                f.detail,
            ));
        }
    }
    out.push_str(&format!(
        "verdict: {} ({} non-vacuous failures)\n",
        if report.pass { "PASS" } else { "FAIL" },
        report.non_vacuous_failures,
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(max_points: usize, trials: u64) -> SuiteConfig {
        SuiteConfig {
            max_points,
            random_trials: trials,
            random_size: 5,
            seed: 7,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            config(6, 0).validate(),
            Err(Error::InvalidConfig(_))
        ));
        let mut cfg = config(3, 1);
        cfg.random_size = 13;
        assert!(matches!(cfg.validate(), Err(Error::InvalidConfig(_))));
        cfg.random_size = 0;
        assert!(matches!(cfg.validate(), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn two_point_sweep_counts_are_exact() {
        let report = run_property_suite(&config(2, 0)).unwrap();
        assert_eq!(report.exhaustive.spaces, 3);
        assert_eq!(report.exhaustive.total_maps, 23);
        assert_eq!(report.exhaustive.morphisms, 20);
        let p14 = report.statement(StatementId::P14);
        assert_eq!((p14.checked, p14.failed), (23, 0));
        let l15 = report.statement(StatementId::L15);
        assert_eq!((l15.checked, l15.failed), (20, 0));
        assert_eq!(report.statement(StatementId::T16).failed, 0);
    }

    #[test]
    fn dimension_statement_fails_first_on_point_into_chain() {
        // Smallest instance with met hypotheses and a broken conclusion: the
        // closed-point inclusion of a 2-chain.
        let report = run_property_suite(&config(2, 0)).unwrap();
        assert!(!report.pass);
        let p26 = report.statement(StatementId::P26);
        assert_eq!(p26.failed, 1);
        let finding = report
            .findings
            .iter()
            .find(|f| f.check == "P2.6")
            .expect("P2.6 finding");
        assert_eq!(finding.total_points, 3);
        assert!(finding.reverified);
        assert_eq!(finding.detail, "source dimension 0, target dimension 1");
    }

    #[test]
    fn functor_laws_alone_pass() {
        let cfg = SuiteConfig {
            statements: [StatementId::T16].into_iter().collect(),
            ..config(3, 0)
        };
        let report = run_property_suite(&cfg).unwrap();
        assert!(report.pass);
        assert_eq!(report.non_vacuous_failures, 0);
        assert_eq!(report.statement(StatementId::P14).checked, 0);
        assert!(report.statement(StatementId::T16).checked > 0);
        assert_eq!(report.invariant("surjective-equal-dimension-norm").checked, 0);
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = config(3, 20);
        let a = serde_json::to_string(&run_property_suite(&cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&run_property_suite(&cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_phase_checks_oracle_agreement() {
        let cfg = SuiteConfig {
            statements: [StatementId::C29].into_iter().collect(),
            ..config(1, 25)
        };
        let report = run_property_suite(&cfg).unwrap();
        assert_eq!(report.random.trials, 25);
        assert!(report.invariant("length-oracle-agreement").checked >= 50);
        assert_eq!(report.invariant("length-oracle-agreement").failed, 0);
        assert_eq!(report.invariant("uip-holds").failed, 0);
    }

    #[test]
    fn norm_statement_witness_is_the_gap_map() {
        // First T2.7 failure in sweep order: the 2-chain into the 3-chain
        // skipping the middle point, at five total points.
        let report = run_property_suite(&config(3, 0)).unwrap();
        let finding = report
            .findings
            .iter()
            .find(|f| f.check == "T2.7")
            .expect("T2.7 finding");
        assert_eq!(finding.total_points, 5);
        assert!(finding.reverified);
        assert_eq!(
            finding.instance.map.as_deref(),
            Some(&[("p0".to_owned(), "p0".to_owned()), ("p1".to_owned(), "p2".to_owned())][..])
        );
    }

    #[test]
    fn summary_has_stable_shape() {
        let report = run_property_suite(&config(2, 0)).unwrap();
        let summary = render_summary(&report);
        assert!(summary.starts_with("specnorm property suite\n"));
        assert!(summary.contains("statements:\n"));
        assert!(summary.contains("verdict: FAIL"));
    }
}
