//! Exhaustive search for fixed point data that pass the necessary conditions.
//!
//! Points are generated as nondecreasing sequences of indices into the
//! lexicographically sorted list of weight multisets, so every candidate is
//! produced once and already in canonical form. Partial candidates are cut
//! when weight pairing or N-vector symmetry can no longer be completed; the
//! remaining filters run on complete candidates, cheapest first, with the
//! exact localization check last.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fpdata::{gen_cpn, gen_s2, gen_s6, product, FixedPoint, FixedPointDatum, NVector};
use crate::verify::{
    self, check_crowded, check_kosniowski, check_dim6_crowding, check_middle_range,
    check_rigidity, chi_vector, theorem_scope, ChiVector, CheckReport, TheoremScope, Witness,
};

pub const DEFAULT_CANDIDATE_CEILING: u64 = 1_000_000_000;
pub const BRUTE_FORCE_CEILING: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("candidate space exceeds the ceiling of {ceiling} (at least {generated} candidates); narrow the query")]
    ResourceLimit { generated: u128, ceiling: u64 },
    #[error("invalid query: {0}")]
    InvalidQuery(String),
}

/// Validity filters. Only necessary conditions are selectable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    WeightPairing,
    SmallestWeightPairing,
    Rigidity,
}

impl Filter {
    pub const ALL: [Filter; 3] = [
        Filter::WeightPairing,
        Filter::SmallestWeightPairing,
        Filter::Rigidity,
    ];
}

fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationQuery {
    pub half_dim: usize,
    pub point_count: usize,
    pub max_weight: i64,
    pub effective_only: bool,
    pub dedup_sign_flip: bool,
    pub filters: BTreeSet<Filter>,
    /// Not serialized: reports must not depend on it.
    #[serde(skip, default = "default_workers")]
    pub worker_count: usize,
    pub candidate_ceiling: u64,
}

impl EnumerationQuery {
    /// Defaults: effective only, no sign-flip dedup, all filters, one worker
    /// per available core.
    pub fn new(half_dim: usize, point_count: usize, max_weight: i64) -> Self {
        Self {
            half_dim,
            point_count,
            max_weight,
            effective_only: true,
            dedup_sign_flip: false,
            filters: Filter::ALL.into_iter().collect(),
            worker_count: default_workers(),
            candidate_ceiling: DEFAULT_CANDIDATE_CEILING,
        }
    }

    pub fn effective(mut self, yes: bool) -> Self {
        self.effective_only = yes;
        self
    }

    pub fn dedup_sign_flip(mut self, yes: bool) -> Self {
        self.dedup_sign_flip = yes;
        self
    }

    pub fn workers(mut self, n: usize) -> Self {
        self.worker_count = n;
        self
    }

    pub fn filters(mut self, f: impl IntoIterator<Item = Filter>) -> Self {
        self.filters = f.into_iter().collect();
        self
    }

    pub fn validate(&self) -> Result<(), EnumerateError> {
        let bad = |m: &str| Err(EnumerateError::InvalidQuery(m.into()));
        if self.point_count == 0 {
            return bad("point count must be at least 1");
        }
        if self.max_weight < 1 {
            return bad("weight bound must be at least 1");
        }
        if self.worker_count == 0 {
            return bad("worker count must be at least 1");
        }
        Ok(())
    }

    fn has(&self, f: Filter) -> bool {
        self.filters.contains(&f)
    }

    /// Number of unordered candidates, `C(M + k - 1, k)` with `M` the number
    /// of weight multisets per point.
    pub fn candidate_space(&self) -> u128 {
        let values = 2 * self.max_weight as u128;
        let per_point = multichoose(values, self.half_dim as u128);
        multichoose(per_point, self.point_count as u128)
    }
}

/// `C(m + k - 1, k)`, saturating.
fn multichoose(m: u128, k: u128) -> u128 {
    if m == 0 {
        return u128::from(k == 0);
    }
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = match acc.checked_mul(m + j) {
            Some(v) => v / (j + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Everything the report records about one admissible datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumDiagnostics {
    pub chi: ChiVector,
    pub weight_pairing: bool,
    pub smallest_weight_pairing: bool,
    pub rigidity: bool,
    pub n_vector: NVector,
    pub weight_types: Vec<i64>,
    pub weight_gcd: i64,
    pub scope: TheoremScope,
    pub kosniowski: bool,
    pub crowded: bool,
    pub middle_range: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim6_crowding: Option<bool>,
}

impl DatumDiagnostics {
    pub fn of(d: &FixedPointDatum) -> Self {
        let rigidity = check_rigidity(d);
        let chi = match rigidity.witness {
            Some(Witness::Chi { ref chi }) => chi.clone(),
            _ => chi_vector(d).unwrap_or_else(|_| ChiVector(Vec::new())),
        };
        Self {
            chi,
            weight_pairing: verify::passes_weight_pairing(d),
            smallest_weight_pairing: verify::passes_smallest_weight_pairing(d),
            rigidity: rigidity.passed,
            n_vector: d.n_vector(),
            weight_types: d.weight_types().into_iter().collect(),
            weight_gcd: d.weight_gcd(),
            scope: theorem_scope(d),
            kosniowski: check_kosniowski(d).passed,
            crowded: check_crowded(d).passed,
            middle_range: check_middle_range(d).passed,
            dim6_crowding: check_dim6_crowding(d).ok().map(|r| r.passed),
        }
    }
}

/// Search counters. `pruned` is keyed by pruning stage.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub candidates: u64,
    pub partial_nodes: u64,
    pub pruned: BTreeMap<String, u64>,
}

impl Counters {
    fn bump(&mut self, stage: &str) {
        *self.pruned.entry(stage.to_string()).or_insert(0) += 1;
    }

    fn merge(&mut self, other: Counters) {
        self.candidates += other.candidates;
        self.partial_nodes += other.partial_nodes;
        for (k, v) in other.pruned {
            *self.pruned.entry(k).or_insert(0) += v;
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub query: EnumerationQuery,
    /// Emptiness and completeness claims hold only up to this bound.
    pub weight_bound: i64,
    pub admissible: Vec<FixedPointDatum>,
    pub diagnostics: Vec<DatumDiagnostics>,
    pub counters: Counters,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl EnumerationReport {
    /// Admissible data violating `k >= floor(dim/4) + 1`.
    pub fn bound_violations(&self) -> Vec<&FixedPointDatum> {
        self.admissible
            .iter()
            .zip(&self.diagnostics)
            .filter(|(_, g)| !g.kosniowski)
            .map(|(d, _)| d)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// All sorted weight multisets of size `n` over `[-w, w] \ {0}`, in
/// lexicographic order.
pub fn weight_multisets(n: usize, w: i64) -> Vec<FixedPoint> {
    let values: Vec<i64> = (-w..=w).filter(|&x| x != 0).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(values: &[i64], start: usize, n: usize, cur: &mut Vec<i64>, out: &mut Vec<FixedPoint>) {
        if cur.len() == n {
            out.push(FixedPoint::new(cur.clone()));
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            rec(values, i, n, cur, out);
            cur.pop();
        }
    }
    rec(&values, 0, n, &mut cur, &mut out);
    out
}

struct Search<'a> {
    q: &'a EnumerationQuery,
    multisets: &'a [FixedPoint],
    generated: &'a AtomicU64,
    abort: &'a AtomicBool,
}

struct State {
    chosen: Vec<usize>,
    weight_counts: Vec<u32>,
    np_counts: Vec<usize>,
}

impl State {
    fn push(&mut self, idx: usize, p: &FixedPoint, offset: i64) {
        self.chosen.push(idx);
        for &w in p.weights() {
            self.weight_counts[(w + offset) as usize] += 1;
        }
        self.np_counts[p.n_p()] += 1;
    }

    fn pop(&mut self, p: &FixedPoint, offset: i64) {
        self.chosen.pop();
        for &w in p.weights() {
            self.weight_counts[(w + offset) as usize] -= 1;
        }
        self.np_counts[p.n_p()] -= 1;
    }
}

impl Search<'_> {
    fn offset(&self) -> i64 {
        self.q.max_weight
    }

    fn occurs(&self, st: &State, w: i64) -> bool {
        st.weight_counts[(w + self.offset()) as usize] > 0
    }

    /// Whether some completion of the partial candidate can still satisfy
    /// the selected filters. Remaining points are lexicographically at least
    /// the last one, so all their weights are at least its first weight.
    fn feasible(&self, st: &State, ctr: &mut Counters) -> bool {
        let k = self.q.point_count;
        let n = self.q.half_dim;
        let remaining = k - st.chosen.len();
        let last = &self.multisets[*st.chosen.last().unwrap()];
        let floor = last.weights().first().copied();

        if self.q.has(Filter::WeightPairing) && n > 0 {
            let mut missing = 0usize;
            for v in 1..=self.q.max_weight {
                for w in [v, -v] {
                    if self.occurs(st, w) && !self.occurs(st, -w) {
                        missing += 1;
                        if floor.is_some_and(|f| -w < f) {
                            ctr.bump("pairing_feasibility");
                            return false;
                        }
                    }
                }
            }
            if missing > remaining * n {
                ctr.bump("pairing_feasibility");
                return false;
            }
        }

        if self.q.has(Filter::Rigidity) && n > 0 {
            let c = &st.np_counts;
            let ok = if floor.is_some_and(|f| f > 0) {
                // every remaining point has n_p = 0
                c[0] + remaining == c[n] && (1..n).all(|i| c[i] == c[n - i])
            } else {
                let deficit: usize = (0..n)
                    .filter(|&i| i < n - i)
                    .map(|i| c[i].abs_diff(c[n - i]))
                    .sum();
                // without a middle index, leftovers come in symmetric pairs
                deficit <= remaining && (n.is_multiple_of(2) || (remaining - deficit).is_multiple_of(2))
            };
            if !ok {
                ctr.bump("symmetry_feasibility");
                return false;
            }
        }
        true
    }

    fn complete(&self, st: &State, ctr: &mut Counters) -> Option<FixedPointDatum> {
        ctr.candidates += 1;
        let total = self.generated.fetch_add(1, Ordering::Relaxed) + 1;
        if total > self.q.candidate_ceiling {
            self.abort.store(true, Ordering::Relaxed);
            return None;
        }
        let q = self.q;
        let n = q.half_dim;
        if q.effective_only {
            let g = (1..=q.max_weight)
                .filter(|&v| self.occurs(st, v) || self.occurs(st, -v))
                .fold(0i64, |g, v| g.gcd(&v));
            if g > 1 {
                ctr.bump("effective");
                return None;
            }
        }
        if q.has(Filter::WeightPairing)
            && (1..=q.max_weight).any(|v| self.occurs(st, v) != self.occurs(st, -v))
        {
            ctr.bump("weight_pairing");
            return None;
        }
        if q.has(Filter::Rigidity) && !(0..=n).all(|i| st.np_counts[i] == st.np_counts[n - i]) {
            ctr.bump("symmetry");
            return None;
        }
        let d = FixedPointDatum::from_points(
            n,
            st.chosen.iter().map(|&i| self.multisets[i].clone()).collect(),
        );
        if q.has(Filter::SmallestWeightPairing) && !verify::passes_smallest_weight_pairing(&d) {
            ctr.bump("smallest_weight_pairing");
            return None;
        }
        if q.has(Filter::Rigidity) {
            if !verify::rigidity_screen(&d) {
                ctr.bump("rigidity_screen");
                return None;
            }
            if !check_rigidity(&d).passed {
                ctr.bump("rigidity");
                return None;
            }
        }
        if q.dedup_sign_flip && d.sign_flip().canonicalize().points() < d.points() {
            ctr.bump("sign_flip_duplicate");
            return None;
        }
        Some(d)
    }

    fn dfs(&self, st: &mut State, out: &mut Vec<FixedPointDatum>, ctr: &mut Counters) {
        if self.abort.load(Ordering::Relaxed) {
            return;
        }
        if st.chosen.len() == self.q.point_count {
            if let Some(d) = self.complete(st, ctr) {
                out.push(d);
            }
            return;
        }
        ctr.partial_nodes += 1;
        if !st.chosen.is_empty() && !self.feasible(st, ctr) {
            return;
        }
        let start = st.chosen.last().copied().unwrap_or(0);
        let offset = self.offset();
        for idx in start..self.multisets.len() {
            st.push(idx, &self.multisets[idx], offset);
            self.dfs(st, out, ctr);
            st.pop(&self.multisets[idx], offset);
        }
    }

    fn subtree(&self, first: usize) -> (Vec<FixedPointDatum>, Counters) {
        let mut st = State {
            chosen: Vec::with_capacity(self.q.point_count),
            weight_counts: vec![0; 2 * self.q.max_weight as usize + 1],
            np_counts: vec![0; self.q.half_dim + 1],
        };
        let mut out = Vec::new();
        let mut ctr = Counters::default();
        st.push(first, &self.multisets[first], self.offset());
        self.dfs(&mut st, &mut out, &mut ctr);
        (out, ctr)
    }
}

fn finish(
    q: &EnumerationQuery,
    mut admissible: Vec<FixedPointDatum>,
    counters: Counters,
    started: Instant,
) -> EnumerationReport {
    admissible.sort_by(|a, b| a.points().cmp(b.points()));
    admissible.dedup();
    let diagnostics = admissible.par_iter().map(DatumDiagnostics::of).collect();
    EnumerationReport {
        query: q.clone(),
        weight_bound: q.max_weight,
        admissible,
        diagnostics,
        counters,
        wall_time: started.elapsed(),
    }
}

/// All canonical data with `k` points, weights in `[-W, W] \ {0}`, passing
/// the selected filters (and effectiveness when requested).
///
/// The search tree is split on the first point and the subtrees run on
/// `worker_count` threads; the result does not depend on the thread count.
pub fn enumerate_admissible(q: &EnumerationQuery) -> Result<EnumerationReport, EnumerateError> {
    q.validate()?;
    let started = Instant::now();
    let multisets = weight_multisets(q.half_dim, q.max_weight);
    let generated = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let search = Search {
        q,
        multisets: &multisets,
        generated: &generated,
        abort: &abort,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(q.worker_count)
        .build()
        .map_err(|e| EnumerateError::InvalidQuery(format!("thread pool: {e}")))?;
    let parts: Vec<(Vec<FixedPointDatum>, Counters)> = pool.install(|| {
        (0..multisets.len())
            .into_par_iter()
            .map(|first| search.subtree(first))
            .collect()
    });
    if abort.load(Ordering::Relaxed) {
        return Err(EnumerateError::ResourceLimit {
            generated: generated.load(Ordering::Relaxed) as u128,
            ceiling: q.candidate_ceiling,
        });
    }
    let mut admissible = Vec::new();
    let mut counters = Counters::default();
    for (data, c) in parts {
        admissible.extend(data);
        counters.merge(c);
    }
    Ok(pool.install(|| finish(q, admissible, counters, started)))
}

/// Reference enumeration: every multiset of `k` points, filters applied to
/// complete candidates only, through the public checks.
pub fn brute_force_admissible(q: &EnumerationQuery) -> Result<EnumerationReport, EnumerateError> {
    q.validate()?;
    let space = q.candidate_space();
    let ceiling = q.candidate_ceiling.min(BRUTE_FORCE_CEILING);
    if space > ceiling as u128 {
        return Err(EnumerateError::ResourceLimit {
            generated: space,
            ceiling,
        });
    }
    let started = Instant::now();
    let multisets = weight_multisets(q.half_dim, q.max_weight);
    let k = q.point_count;
    let mut counters = Counters::default();
    let mut admissible = Vec::new();
    let mut idx = vec![0usize; k];
    'outer: loop {
        counters.candidates += 1;
        let d = FixedPointDatum::from_points(
            q.half_dim,
            idx.iter().map(|&i| multisets[i].clone()).collect(),
        );
        if passes(q, &d, &mut counters) {
            admissible.push(d);
        }
        // next nondecreasing index tuple
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] + 1 < multisets.len() {
                let v = idx[pos] + 1;
                for slot in &mut idx[pos..] {
                    *slot = v;
                }
                continue 'outer;
            }
        }
        break;
    }
    Ok(finish(q, admissible, counters, started))
}

fn passes(q: &EnumerationQuery, d: &FixedPointDatum, ctr: &mut Counters) -> bool {
    if q.effective_only && !d.is_effective() {
        ctr.bump("effective");
        return false;
    }
    if q.has(Filter::WeightPairing) && !verify::check_weight_pairing(d).passed {
        ctr.bump("weight_pairing");
        return false;
    }
    if q.has(Filter::SmallestWeightPairing) && !verify::check_smallest_weight_pairing(d).passed {
        ctr.bump("smallest_weight_pairing");
        return false;
    }
    if q.has(Filter::Rigidity) && !check_rigidity(d).passed {
        ctr.bump("rigidity");
        return false;
    }
    if q.dedup_sign_flip && d.sign_flip().canonicalize().points() < d.points() {
        ctr.bump("sign_flip_duplicate");
        return false;
    }
    true
}

/// One half-dimension of a classification run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassificationRow {
    pub half_dim: usize,
    pub admissible: Vec<FixedPointDatum>,
    /// Whether this half-dimension is one where data are expected at all.
    pub expected_nonempty: bool,
    /// Admissible data that do not have the expected form.
    pub unexpected: Vec<FixedPointDatum>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Classification {
    pub point_count: usize,
    pub max_weight: i64,
    pub rows: Vec<ClassificationRow>,
    /// Every row is empty where expected and every datum has the expected form.
    pub consistent: bool,
}

/// `{-w}, {w}` for some `w >= 1`.
pub fn is_s2_form(d: &FixedPointDatum) -> bool {
    d.half_dim() == 1
        && d.len() == 2
        && d.points()[0].weights()[0] < 0
        && d.points()[0].weights()[0] == -d.points()[1].weights()[0]
}

/// Equal up to point order to the weights of the `S^6` action for some `a, b`.
pub fn is_s6_form(d: &FixedPointDatum) -> bool {
    if d.half_dim() != 3 || d.len() != 2 {
        return false;
    }
    let Some(p) = d.points().iter().find(|p| p.n_p() == 1) else {
        return false;
    };
    let (a, b) = (p.weights()[1], p.weights()[2]);
    gen_s6(a, b).is_ok_and(|s| s.canonicalize() == d.canonicalize())
}

/// Equal up to point order to the `CP^2` action with exponents `0, c, c+d`,
/// after dividing all weights by their gcd.
pub fn is_cp2_form(d: &FixedPointDatum) -> bool {
    if d.half_dim() != 2 || d.len() != 3 {
        return false;
    }
    let g = d.weight_gcd();
    if g == 0 {
        return false;
    }
    let reduced = FixedPointDatum::new(
        2,
        d.points()
            .iter()
            .map(|p| p.weights().iter().map(|w| w / g).collect())
            .collect(),
    )
    .expect("dividing by the gcd keeps weights nonzero");
    let Some(p) = reduced.points().iter().find(|p| p.n_p() == 0) else {
        return false;
    };
    let (c, e) = (p.weights()[0], p.weights()[1]);
    c < e && gen_cpn(&[0, c, e]).is_ok_and(|m| m.canonicalize() == reduced.canonicalize())
}

fn classify(
    k: usize,
    max_weight: i64,
    half_dims: &[usize],
    workers: Option<usize>,
    expected: impl Fn(usize) -> Option<fn(&FixedPointDatum) -> bool>,
) -> Result<Classification, EnumerateError> {
    let mut rows = Vec::new();
    let mut consistent = true;
    for &n in half_dims {
        let mut q = EnumerationQuery::new(n, k, max_weight);
        if let Some(w) = workers {
            q.worker_count = w;
        }
        let report = enumerate_admissible(&q)?;
        let form = expected(n);
        let unexpected: Vec<FixedPointDatum> = report
            .admissible
            .iter()
            .filter(|d| !form.is_some_and(|f| f(d)))
            .cloned()
            .collect();
        consistent &= unexpected.is_empty();
        rows.push(ClassificationRow {
            half_dim: n,
            admissible: report.admissible,
            expected_nonempty: form.is_some(),
            unexpected,
        });
    }
    Ok(Classification {
        point_count: k,
        max_weight,
        rows,
        consistent,
    })
}

/// Two fixed points: data only in half-dimension 1 (`S^2` form) and 3
/// (`S^6` form).
pub fn classify_two_points(
    max_weight: i64,
    half_dims: &[usize],
) -> Result<Classification, EnumerateError> {
    classify(2, max_weight, half_dims, None, |n| match n {
        1 => Some(is_s2_form as fn(&FixedPointDatum) -> bool),
        3 => Some(is_s6_form),
        _ => None,
    })
}

/// Three fixed points: data only in half-dimension 2, of `CP^2` form.
pub fn classify_three_points(
    max_weight: i64,
    half_dims: &[usize],
) -> Result<Classification, EnumerateError> {
    classify(3, max_weight, half_dims, None, |n| match n {
        2 => Some(is_cp2_form as fn(&FixedPointDatum) -> bool),
        _ => None,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Violator {
    pub datum: FixedPointDatum,
    pub failed: Vec<CheckReport>,
    pub diagnostics: DatumDiagnostics,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OpenQuestionReport {
    pub query: EnumerationQuery,
    pub admissible_count: usize,
    pub violators: Vec<Violator>,
}

/// Runs the crowdedness and middle-range checks over every admissible datum
/// of `q`. Violators are findings, not errors.
pub fn experiment_open_questions(
    q: &EnumerationQuery,
) -> Result<OpenQuestionReport, EnumerateError> {
    Ok(open_questions_of(&enumerate_admissible(q)?))
}

/// The open-question experiment on an already computed report.
pub fn open_questions_of(report: &EnumerationReport) -> OpenQuestionReport {
    let violators = report
        .admissible
        .iter()
        .zip(&report.diagnostics)
        .filter_map(|(d, g)| {
            let failed: Vec<CheckReport> = [check_crowded(d), check_middle_range(d)]
                .into_iter()
                .filter(|r| !r.passed)
                .collect();
            (!failed.is_empty()).then(|| Violator {
                datum: d.clone(),
                failed,
                diagnostics: g.clone(),
            })
        })
        .collect();
    OpenQuestionReport {
        query: report.query.clone(),
        admissible_count: report.admissible.len(),
        violators,
    }
}

/// Building blocks for the known-minimum column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    S2,
    S6,
    /// `CP^m`, `m >= 2`.
    Cp(usize),
}

impl Family {
    fn half_dim(self) -> usize {
        match self {
            Family::S2 => 1,
            Family::S6 => 3,
            Family::Cp(m) => m,
        }
    }

    fn points(self) -> usize {
        match self {
            Family::S2 | Family::S6 => 2,
            Family::Cp(m) => m + 1,
        }
    }

    fn datum(self) -> FixedPointDatum {
        match self {
            Family::S2 => gen_s2(1).unwrap(),
            Family::S6 => gen_s6(1, 2).unwrap(),
            Family::Cp(m) => gen_cpn(&(0..=m as i64).collect::<Vec<_>>()).unwrap(),
        }
    }

    fn name(self) -> String {
        match self {
            Family::S2 => "S^2".into(),
            Family::S6 => "S^6".into(),
            Family::Cp(m) => format!("CP^{m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub dim: usize,
    pub kosniowski_bound: usize,
    pub known_minimum: usize,
    pub known_manifold: String,
    pub factors: Vec<Family>,
}

impl BoundRow {
    /// The product of the factor generators; it has `known_minimum` points.
    pub fn witness(&self) -> FixedPointDatum {
        self.factors
            .iter()
            .fold(FixedPointDatum::point(), |acc, f| product(&acc, &f.datum()))
    }
}

/// Kosniowski bound and the fewest fixed points among products of `S^2`,
/// `S^6` and `CP^m`, for dimensions `2, 4, ..., 2 max_n`.
pub fn bound_table(max_n: usize) -> Vec<BoundRow> {
    // best[h]: fewest points in half-dimension h, with the factors achieving it
    let mut best: Vec<Option<(usize, Vec<Family>)>> = vec![None; max_n + 1];
    for h in 1..=max_n {
        let mut cands: Vec<(usize, Vec<Family>)> = Vec::new();
        let single = if h == 1 { Family::S2 } else { Family::Cp(h) };
        cands.push((single.points(), vec![single]));
        if h == 3 {
            cands.push((Family::S6.points(), vec![Family::S6]));
        }
        for a in 1..=h / 2 {
            let (Some((pa, fa)), Some((pb, fb))) = (&best[a], &best[h - a]) else {
                continue;
            };
            let mut f = fa.clone();
            f.extend(fb.iter().copied());
            f.sort_by_key(|x| x.half_dim());
            cands.push((pa * pb, f));
        }
        // fewest points, then fewest factors
        best[h] = cands.into_iter().min_by_key(|(p, f)| (*p, f.len()));
    }
    (1..=max_n)
        .map(|h| {
            let (points, factors) = best[h].clone().unwrap();
            BoundRow {
                dim: 2 * h,
                kosniowski_bound: h / 2 + 1,
                known_minimum: points,
                known_manifold: factors
                    .iter()
                    .map(|f| f.name())
                    .collect::<Vec<_>>()
                    .join(" x "),
                factors,
            }
        })
        .collect()
}
