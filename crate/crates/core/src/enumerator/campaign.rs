//! Verification campaigns: the path-free edge bounds, the small-k shadow
//! bounds with their equality cases, and the cycle-structure checks.
//!
//! All bound comparisons are exact integer inequalities.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{canonical_form, canonical_with_rep, enumerate_par, random_instance, Candidates, EnumerateError, Instance, Uniformity, Visit, DEFAULT_ISO_CAP};
use crate::constructions::{matching_k2, star_k3};
use crate::cycle_structure::{ClaimKind, CycleContext, Violation};
use crate::hg;
use crate::hypergraph::LinearHypergraph;
use crate::solver::Solver;

/// Witness lists in a report are truncated to this many entries.
pub const MAX_REPORTED: usize = 16;
/// Below this many vertices the claims campaign checks every longest cycle.
pub const ALL_CYCLES_BELOW: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Mode {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dedup {
    Labeled,
    Isomorphism,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Campaign {
    TheoremUniform,
    TheoremShadow,
    Remark,
    Claims,
}

impl Campaign {
    pub fn uniformity(self) -> Uniformity {
        match self {
            Campaign::TheoremUniform => Uniformity::Three,
            _ => Uniformity::TwoThree,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignParams {
    pub n: usize,
    /// Forbidden Berge path length. Optional only for the claims campaign,
    /// where it restricts the scope to path-free instances.
    pub k: Option<usize>,
    pub uniformity: Uniformity,
    pub mode: Mode,
    pub dedup: Dedup,
    /// Exhaustive-mode vertex cap.
    pub cap: usize,
}

impl CampaignParams {
    pub fn exhaustive(n: usize, k: Option<usize>, uniformity: Uniformity) -> Self {
        CampaignParams { n, k, uniformity, mode: Mode::Exhaustive, dedup: Dedup::Labeled, cap: uniformity.default_cap() }
    }

    pub fn random(n: usize, k: Option<usize>, uniformity: Uniformity, samples: u64, seed: u64) -> Self {
        CampaignParams { mode: Mode::Random { samples, seed }, ..Self::exhaustive(n, k, uniformity) }
    }

    fn validate(&self, campaign: Campaign) -> Result<(), EnumerateError> {
        let bad = |m: String| Err(EnumerateError::InvalidParams(m));
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        if self.k == Some(0) {
            return bad("k must be at least 1".into());
        }
        match (campaign, self.k) {
            (Campaign::TheoremUniform | Campaign::TheoremShadow, Some(k)) if k < 4 => {
                return bad(format!("this campaign needs k >= 4, got {k}"));
            }
            (Campaign::Remark, Some(k)) if k > 3 => return bad(format!("the small-k campaign needs k in 1..=3, got {k}")),
            (Campaign::Claims, _) | (_, Some(_)) => {}
            (_, None) => return bad("k is required".into()),
        }
        if campaign != Campaign::Claims && self.uniformity != campaign.uniformity() {
            return bad(format!("{campaign:?} runs over {:?} hypergraphs", campaign.uniformity()));
        }
        match self.mode {
            Mode::Exhaustive if self.n > self.cap => Err(EnumerateError::CapExceeded { n: self.n, cap: self.cap }),
            Mode::Random { .. } if campaign == Campaign::Remark => {
                bad("the equality cases need exhaustive mode".into())
            }
            _ if self.n > super::MAX_GENERATOR_N => {
                Err(EnumerateError::CapExceeded { n: self.n, cap: super::MAX_GENERATOR_N })
            }
            _ if self.dedup == Dedup::Isomorphism && self.n > DEFAULT_ISO_CAP => {
                Err(EnumerateError::CapExceeded { n: self.n, cap: DEFAULT_ISO_CAP })
            }
            _ => Ok(()),
        }
    }
}

/// Non-negative rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Rational {
    pub num: u64,
    pub den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Self {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        let g = gcd(num, den).max(1);
        Rational { num: num / g, den: den / g }
    }

    /// `x ≤ self`, exactly.
    pub fn admits(&self, x: u64) -> bool {
        x * self.den <= self.num
    }

    /// `x == self`, exactly.
    pub fn equals(&self, x: u64) -> bool {
        x * self.den == self.num
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 { write!(f, "{}", self.num) } else { write!(f, "{}/{}", self.num, self.den) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// The measured quantity exceeds the bound.
    Bound,
    /// The bound is not attained where it should be (or is attained where it should not).
    Equality,
    /// An extremal hypergraph outside the expected isomorphism class.
    Uniqueness,
    /// A cycle-structure check failed.
    Claim,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportViolation {
    pub kind: ViolationKind,
    pub detail: String,
    /// The offending hypergraph in `.hg` format.
    pub witness: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim: Option<Violation>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimStats {
    pub cyclic_instances: u64,
    pub skipped_acyclic: u64,
    pub cycles_checked: u64,
    pub checked_vertices: u64,
    pub checked_triples: u64,
    pub checked_pairs: u64,
    pub plus_violations: u64,
    pub plus_plus_violations: u64,
    pub triple_violations: u64,
    pub s_bound_violations: u64,
    /// Longest-cycle length → number of instances.
    pub circumference_histogram: BTreeMap<usize, u64>,
}

impl ClaimStats {
    fn merge(&mut self, o: ClaimStats) {
        self.cyclic_instances += o.cyclic_instances;
        self.skipped_acyclic += o.skipped_acyclic;
        self.cycles_checked += o.cycles_checked;
        self.checked_vertices += o.checked_vertices;
        self.checked_triples += o.checked_triples;
        self.checked_pairs += o.checked_pairs;
        self.plus_violations += o.plus_violations;
        self.plus_plus_violations += o.plus_plus_violations;
        self.triple_violations += o.triple_violations;
        self.s_bound_violations += o.s_bound_violations;
        for (l, c) in o.circumference_histogram {
            *self.circumference_histogram.entry(l).or_default() += c;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub campaign: Campaign,
    pub params: CampaignParams,
    /// Instances examined. Pruned exhaustive runs skip every superset of an
    /// instance that already contains the forbidden path.
    pub instances_checked: u64,
    /// Instances without a Berge path of length `k` (all instances when `k` is absent).
    pub bp_free_count: u64,
    /// Largest hyperedge count among path-free instances (3-uniform campaigns).
    pub max_hyperedges: Option<usize>,
    pub max_shadow_edges: Option<usize>,
    pub bound_value: Option<Rational>,
    /// Labeled path-free instances attaining the maximum.
    pub extremal_count: u64,
    /// `.hg` payloads: the first labeled extremal instances, or one
    /// canonical representative per class under isomorphism dedup.
    pub extremal_witnesses: Vec<String>,
    pub extremal_classes: Option<usize>,
    /// Whether every extremal instance lies in the expected class (small-k campaign, where asserted).
    pub extremal_class_expected: Option<bool>,
    pub claims: Option<ClaimStats>,
    pub violations: Vec<ReportViolation>,
    pub violations_total: u64,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.violations_total == 0
    }
}

/// Per-work-unit accumulator. Merging is associative, and all "first N" lists
/// keep the earlier unit's entries first, so merged results do not depend on
/// how the work was split.
#[derive(Default)]
struct Tally {
    instances: u64,
    bp_free: u64,
    best: Option<usize>,
    best_m: Option<usize>,
    extremal_count: u64,
    witnesses: Vec<LinearHypergraph>,
    classes: BTreeMap<Vec<u8>, LinearHypergraph>,
    violations: Vec<ReportViolation>,
    violations_total: u64,
    claims: ClaimStats,
}

fn push_capped<T>(v: &mut Vec<T>, extra: impl IntoIterator<Item = T>) {
    let room = MAX_REPORTED.saturating_sub(v.len());
    v.extend(extra.into_iter().take(room));
}

impl Tally {
    fn merge(mut self, o: Tally) -> Tally {
        self.instances += o.instances;
        self.bp_free += o.bp_free;
        self.best_m = self.best_m.max(o.best_m);
        match self.best.cmp(&o.best) {
            std::cmp::Ordering::Less => {
                self.best = o.best;
                self.extremal_count = o.extremal_count;
                self.witnesses = o.witnesses;
                self.classes = o.classes;
            }
            std::cmp::Ordering::Equal => {
                self.extremal_count += o.extremal_count;
                push_capped(&mut self.witnesses, o.witnesses);
                for (code, rep) in o.classes {
                    self.classes.entry(code).or_insert(rep);
                }
            }
            std::cmp::Ordering::Greater => {}
        }
        push_capped(&mut self.violations, o.violations);
        self.violations_total += o.violations_total;
        self.claims.merge(o.claims);
        self
    }

    fn violation(&mut self, v: ReportViolation) {
        self.violations_total += 1;
        push_capped(&mut self.violations, [v]);
    }

    /// Records a path-free instance with measured value `value`.
    fn observe(&mut self, h: impl FnOnce() -> LinearHypergraph, value: usize, m: usize, track_classes: bool) {
        self.best_m = self.best_m.max(Some(m));
        if Some(value) < self.best {
            return;
        }
        if Some(value) > self.best {
            self.best = Some(value);
            self.extremal_count = 0;
            self.witnesses.clear();
            self.classes.clear();
        }
        self.extremal_count += 1;
        let h = h();
        if track_classes {
            let (code, rep) = canonical_with_rep(&h, DEFAULT_ISO_CAP).expect("campaign validated against the isomorphism cap");
            self.classes.entry(code).or_insert(rep);
        }
        if self.witnesses.len() < MAX_REPORTED {
            self.witnesses.push(h);
        }
    }
}

/// Shared driver: feeds every in-scope instance to `check`, which returns
/// whether the instance's supersets should still be explored.
fn drive<F>(params: &CampaignParams, check: F) -> Tally
where
    F: Fn(&mut Tally, &Instance<'_>) -> Visit + Sync,
{
    let cands = Candidates::new(params.n, params.uniformity).expect("validated");
    match params.mode {
        Mode::Exhaustive => enumerate_par(&cands, Tally::default, check, Tally::merge),
        Mode::Random { samples, seed } => (0..samples)
            .into_par_iter()
            .map(|i| {
                let h = random_instance(&cands, seed, i);
                let triples = h.count_triples();
                let ids: Vec<usize> = Vec::new();
                let mut t = Tally::default();
                check(&mut t, &Instance { n: h.n(), edges: h.edges(), ids: &ids, triples });
                t
            })
            .reduce(Tally::default, Tally::merge),
    }
}

/// `true` when the instance contains a Berge path of length `k`.
fn has_forbidden_path(inst: &Instance<'_>, k: usize) -> bool {
    // a path of length k needs k distinct hyperedges and k+1 vertices
    if inst.m() < k || k >= inst.n {
        return false;
    }
    Solver::from_parts(inst.n, inst.edges).has_path(k)
}

fn bound_for(campaign: Campaign, n: usize, k: usize) -> Rational {
    let (n, k) = (n as u64, k as u64);
    match (campaign, k) {
        (Campaign::TheoremUniform, _) => Rational::new((k - 1) * n, 6),
        (Campaign::TheoremShadow, _) => Rational::new((k - 1) * n, 2),
        (_, 1) => Rational::new(0, 1),
        (_, 2) => Rational::new(n, 1),
        _ => Rational::new(3 * n.saturating_sub(1), 2),
    }
}

fn finish(campaign: Campaign, params: &CampaignParams, t: &Tally) -> VerificationReport {
    let classes = (params.dedup == Dedup::Isomorphism || campaign == Campaign::Remark).then_some(t.classes.len());
    let witnesses: Vec<String> = if params.dedup == Dedup::Isomorphism {
        t.classes.values().take(MAX_REPORTED).map(hg::to_string).collect()
    } else {
        t.witnesses.iter().map(hg::to_string).collect()
    };
    let (max_hyperedges, max_shadow) = match campaign {
        Campaign::TheoremUniform => (t.best, t.best.map(|m| 3 * m)),
        Campaign::Claims => (None, None),
        _ => (None, t.best),
    };
    VerificationReport {
        campaign,
        params: *params,
        instances_checked: t.instances,
        bp_free_count: t.bp_free,
        max_hyperedges,
        max_shadow_edges: max_shadow,
        bound_value: params.k.filter(|_| campaign != Campaign::Claims).map(|k| bound_for(campaign, params.n, k)),
        extremal_count: t.extremal_count,
        extremal_witnesses: witnesses,
        extremal_classes: classes,
        extremal_class_expected: None,
        claims: (campaign == Campaign::Claims).then(|| t.claims.clone()),
        violations: t.violations.clone(),
        violations_total: t.violations_total,
    }
}

fn bound_campaign(campaign: Campaign, params: &CampaignParams) -> Result<(VerificationReport, Tally), EnumerateError> {
    params.validate(campaign)?;
    let k = params.k.expect("validated");
    let bound = bound_for(campaign, params.n, k);
    let track = params.dedup == Dedup::Isomorphism || campaign == Campaign::Remark;
    let t = drive(params, |t, inst| {
        t.instances += 1;
        if has_forbidden_path(inst, k) {
            return Visit::Prune;
        }
        t.bp_free += 1;
        let value = if campaign == Campaign::TheoremUniform { inst.m() } else { inst.shadow_edges() };
        if !bound.admits(value as u64) {
            t.violation(ReportViolation {
                kind: ViolationKind::Bound,
                detail: format!("value {value} exceeds bound {bound}"),
                witness: hg::to_string(&inst.to_hypergraph()),
                claim: None,
            });
        }
        t.observe(|| inst.to_hypergraph(), value, inst.m(), track);
        Visit::Descend
    });
    Ok((finish(campaign, params, &t), t))
}

/// Maximum hyperedge count of 3-uniform linear hypergraphs without a Berge
/// path of length `k`, checked against `6·e ≤ (k−1)·n`.
pub fn verify_theorem_uniform(params: &CampaignParams) -> Result<VerificationReport, EnumerateError> {
    bound_campaign(Campaign::TheoremUniform, params).map(|r| r.0)
}

/// Maximum shadow size of {2,3}-uniform linear hypergraphs without a Berge
/// path of length `k`, checked against `2·e(∂H) ≤ (k−1)·n`.
pub fn verify_theorem_shadow(params: &CampaignParams) -> Result<VerificationReport, EnumerateError> {
    bound_campaign(Campaign::TheoremShadow, params).map(|r| r.0)
}

/// Small `k`: `e(∂H) = 0` for `k = 1`; `e(∂H) ≤ n` for `k = 2`, attained exactly
/// by perfect triple matchings; `e(∂H) ≤ 3(n−1)/2` for `k = 3`, attained for odd
/// `n` exactly by triples sharing one vertex. Even `n` at `k = 3` only gets the
/// bound checked; its maximum is reported as is.
pub fn verify_remark(params: &CampaignParams) -> Result<VerificationReport, EnumerateError> {
    let (mut report, tally) = bound_campaign(Campaign::Remark, params)?;
    let (n, k) = (params.n, params.k.expect("validated"));
    let bound = report.bound_value.expect("set for bound campaigns");
    let max = report.max_shadow_edges.unwrap_or(0) as u64;
    let witness = report.extremal_witnesses.first().cloned().unwrap_or_default();
    let expected = match k {
        2 if n % 3 == 0 => Some(matching_k2(n).expect("3 | n")),
        3 if n % 2 == 1 => Some(star_k3(n).expect("odd n")),
        _ => None,
    };
    let attained = bound.equals(max);
    let must_attain = k == 1 || expected.is_some();
    // for k = 2 the bound is attained only when 3 | n
    let must_not_attain = k == 2 && n % 3 != 0;
    let mut flag = |kind, detail: String, witness: &str| {
        report.violations_total += 1;
        if report.violations.len() < MAX_REPORTED {
            report.violations.push(ReportViolation { kind, detail, witness: witness.to_string(), claim: None });
        }
    };
    if must_attain && !attained {
        flag(ViolationKind::Equality, format!("maximum {max} differs from {bound}"), &witness);
    }
    if must_not_attain && attained {
        flag(ViolationKind::Equality, format!("maximum {max} attains {bound} although 3 does not divide n"), &witness);
    }
    if let Some(e) = expected {
        let code = canonical_form(&e, DEFAULT_ISO_CAP)?;
        let reps = &tally.classes;
        let ok = reps.len() == 1 && reps.contains_key(&code);
        report.extremal_class_expected = Some(ok);
        for (c, rep) in reps {
            if *c != code {
                flag(ViolationKind::Uniqueness, format!("extremal hypergraph outside the expected class of {}", hg::to_string(&e).trim_end().replace('\n', "; ")), &hg::to_string(rep));
            }
        }
    }
    Ok(report)
}

fn record_claims(t: &mut Tally, inst: &Instance<'_>) {
    let n = inst.n;
    let solver = Solver::from_parts(n, inst.edges);
    let cycles = if n < ALL_CYCLES_BELOW { solver.longest_cycles() } else { solver.longest_cycle().into_iter().collect() };
    let Some(first) = cycles.first() else {
        t.claims.skipped_acyclic += 1;
        return;
    };
    let l = first.len();
    t.claims.cyclic_instances += 1;
    *t.claims.circumference_histogram.entry(l).or_default() += 1;
    if l == n {
        // nothing lies off the cycle
        t.claims.cycles_checked += cycles.len() as u64;
        return;
    }
    for c in cycles {
        t.claims.cycles_checked += 1;
        let ctx = CycleContext::from_solver(n, inst.edges, &solver, c);
        let s = ctx.check_all();
        t.claims.checked_vertices += s.checked_vertices;
        t.claims.checked_triples += s.checked_triples;
        t.claims.checked_pairs += s.checked_pairs;
        for v in s.violations {
            match v.claim {
                ClaimKind::Plus => t.claims.plus_violations += 1,
                ClaimKind::PlusPlus => t.claims.plus_plus_violations += 1,
                ClaimKind::Triple => t.claims.triple_violations += 1,
                ClaimKind::SBound => t.claims.s_bound_violations += 1,
            }
            t.violation(ReportViolation {
                kind: ViolationKind::Claim,
                detail: format!("{:?}: {}", v.claim, v.condition),
                witness: hg::to_string(&inst.to_hypergraph()),
                claim: Some(v),
            });
        }
    }
}

/// Runs the cycle-structure checks on every in-scope instance that has a
/// Berge cycle. Below `ALL_CYCLES_BELOW` vertices every longest cycle is
/// checked, otherwise the solver's first one.
pub fn verify_claims_campaign(params: &CampaignParams) -> Result<VerificationReport, EnumerateError> {
    params.validate(Campaign::Claims)?;
    let t = drive(params, |t, inst| {
        t.instances += 1;
        if let Some(k) = params.k {
            if has_forbidden_path(inst, k) {
                return Visit::Prune;
            }
        }
        t.bp_free += 1;
        record_claims(t, inst);
        Visit::Descend
    });
    Ok(finish(Campaign::Claims, params, &t))
}

pub fn run_campaign(campaign: Campaign, params: &CampaignParams) -> Result<VerificationReport, EnumerateError> {
    match campaign {
        Campaign::TheoremUniform => verify_theorem_uniform(params),
        Campaign::TheoremShadow => verify_theorem_shadow(params),
        Campaign::Remark => verify_remark(params),
        Campaign::Claims => verify_claims_campaign(params),
    }
}
