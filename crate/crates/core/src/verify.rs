//! Necessary conditions, bounds and structure checks on fixed point data.
//!
//! The central computation is [`chi_vector`]: for each `0 <= i <= n` the sum
//! over fixed points of `sigma_i(t^{w_p1}, ..., t^{w_pn}) / prod_j (1 - t^{w_pj})`
//! is formed exactly and certified to be an integer constant. All other
//! checks are counting predicates on the weights and the N-vector.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fpdata::{DataError, FixedPointDatum, NVector};
use crate::poly::{
    cyclotomic, elementary_symmetric_all, one_minus_t_pow, Constancy, LaurentPolynomial,
    RationalFunction,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("datum has no fixed points")]
    Empty,
    #[error("degree-{degree} localization sum is not an integer constant: {residual}{}",
        non_integer.as_ref().map(|v| format!(" (constant {v} is not an integer)")).unwrap_or_default())]
    NotConstant {
        degree: usize,
        residual: String,
        non_integer: Option<String>,
    },
    #[error("degree-{degree} constant does not fit in 64 bits")]
    Overflow { degree: usize },
    #[error("expected exactly one weight type, found {0:?}")]
    NotSingleType(Vec<i64>),
    #[error("dimension {0} is odd")]
    OddDimension(usize),
    #[error("half-dimension {0} exceeds 3")]
    DimensionTooLarge(usize),
    #[error(transparent)]
    Data(#[from] DataError),
}

/// `chi^0, ..., chi^n`, the coefficients of the chi_y genus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChiVector(pub Vec<i64>);

impl ChiVector {
    pub fn convolve(&self, other: &ChiVector) -> ChiVector {
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ChiVector(out)
    }
}

fn cyclotomics_up_to(m: u64) -> Vec<LaurentPolynomial> {
    let mut out = vec![LaurentPolynomial::one()];
    for d in 1..=m {
        out.push(cyclotomic(d));
    }
    out
}

fn pow(p: &LaurentPolynomial, e: u32) -> LaurentPolynomial {
    (0..e).fold(LaurentPolynomial::one(), |acc, _| &acc * p)
}

/// Computes the chi-vector by summing the localization contributions over
/// the least common denominator.
///
/// With `1 - t^a = -prod_{d | a} Phi_d(t)` every denominator is a product of
/// cyclotomic polynomials, so the lcm `L` and each cofactor are formed
/// directly without polynomial division. The degree-`i` sum is constant iff
/// its numerator over `L` is `c * L`.
pub fn chi_vector(d: &FixedPointDatum) -> Result<ChiVector, VerifyError> {
    if d.is_empty() {
        return Err(VerifyError::Empty);
    }
    let n = d.half_dim();
    let max_w = d.weights().map(|w| w.unsigned_abs()).max().unwrap_or(0);
    let phis = cyclotomics_up_to(max_w);

    // exps[p][k]: number of weights at point p whose magnitude is divisible by k
    let exps: Vec<Vec<u32>> = d
        .points()
        .iter()
        .map(|p| {
            let mut e = vec![0u32; max_w as usize + 1];
            for w in p.weights() {
                let a = w.unsigned_abs();
                for k in 1..=a {
                    if a % k == 0 {
                        e[k as usize] += 1;
                    }
                }
            }
            e
        })
        .collect();
    let lcm_exp: Vec<u32> = (0..=max_w as usize)
        .map(|k| exps.iter().map(|e| e[k]).max().unwrap_or(0))
        .collect();
    let lcm = (1..=max_w as usize).fold(LaurentPolynomial::one(), |acc, k| {
        &acc * &pow(&phis[k], lcm_exp[k])
    });

    let mut totals = vec![LaurentPolynomial::zero(); n + 1];
    for (p, e) in d.points().iter().zip(&exps) {
        let cofactor = (1..=max_w as usize).fold(LaurentPolynomial::one(), |acc, k| {
            &acc * &pow(&phis[k], lcm_exp[k] - e[k])
        });
        let neg_sum: i64 = p.weights().iter().filter(|&&w| w < 0).map(|w| -w).sum();
        let sign = if (n + p.n_p()).is_multiple_of(2) { 1 } else { -1 };
        let factor = cofactor.shift(neg_sum).scale(&BigInt::from(sign));
        for (i, sigma) in elementary_symmetric_all(p.weights()).iter().enumerate() {
            totals[i] = &totals[i] + &(sigma * &factor);
        }
    }

    let l0 = lcm.coeff(0);
    debug_assert!(l0 == BigInt::one() || l0 == -BigInt::one());
    let mut chi = Vec::with_capacity(n + 1);
    for (i, total) in totals.into_iter().enumerate() {
        let c = total.coeff(0) * &l0;
        if total != lcm.scale(&c) {
            let residual = RationalFunction::new(total, lcm.clone())
                .expect("lcm is nonzero")
                .simplify();
            let non_integer = match residual.constancy() {
                Constancy::NonInteger { numer, denom } => Some(format!("{numer}/{denom}")),
                _ => None,
            };
            return Err(VerifyError::NotConstant {
                degree: i,
                residual: residual.to_string(),
                non_integer,
            });
        }
        chi.push(c.to_i64().ok_or(VerifyError::Overflow { degree: i })?);
    }
    Ok(ChiVector(chi))
}

/// The degree-`i` localization sum, accumulated one fixed point at a time
/// with rational function addition.
pub fn localization_sum(d: &FixedPointDatum, i: usize) -> Result<RationalFunction, VerifyError> {
    let mut acc = RationalFunction::zero();
    for p in d.points() {
        let sigma = crate::poly::elementary_symmetric(i, p.weights()).map_err(|_| {
            VerifyError::Data(DataError::InvalidParameter(format!(
                "degree {i} exceeds half-dimension {}",
                d.half_dim()
            )))
        })?;
        let denom = p
            .weights()
            .iter()
            .map(|&w| one_minus_t_pow(w).expect("weights are nonzero"))
            .fold(LaurentPolynomial::one(), |acc, f| &acc * &f);
        let term = RationalFunction::new(sigma, denom).expect("nonzero denominator");
        acc = &acc + &term;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckName {
    WeightPairing,
    StrictWeightPairing,
    Rigidity,
    SmallestWeightPairing,
    SingleWeightStructure,
    SmallestWeightDominance,
    KosniowskiBound,
    TheoremScope,
    Crowded,
    MiddleRange,
    Dim6Crowding,
}

impl CheckName {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::WeightPairing => "weight_pairing",
            CheckName::StrictWeightPairing => "strict_weight_pairing",
            CheckName::Rigidity => "rigidity",
            CheckName::SmallestWeightPairing => "smallest_weight_pairing",
            CheckName::SingleWeightStructure => "single_weight_structure",
            CheckName::SmallestWeightDominance => "smallest_weight_dominance",
            CheckName::KosniowskiBound => "kosniowski_bound",
            CheckName::TheoremScope => "theorem_scope",
            CheckName::Crowded => "crowded",
            CheckName::MiddleRange => "middle_range",
            CheckName::Dim6Crowding => "dim6_crowding",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The check is an implication whose hypothesis does not hold.
    NotApplicable,
    /// A precondition failed; nothing was evaluated.
    Skipped,
}

/// Which of the structure theorems keyed on weight types cover a datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremScope {
    pub weight_types: Vec<i64>,
    /// Every weight is `+w` or `-w`.
    pub single_type: bool,
    /// Exactly two types `a`, `b`.
    pub two_types: bool,
    /// `l` pairwise coprime types, all `> 1`, with `dim < 4 * 2^(dim / 2l)`.
    pub coprime_types: bool,
    /// Exactly three pairwise coprime types, all `> 1`.
    pub three_coprime_types: bool,
    pub points: usize,
    pub bound: usize,
    pub bound_holds: bool,
}

impl TheoremScope {
    pub fn any_applies(&self) -> bool {
        self.single_type || self.two_types || self.coprime_types || self.three_coprime_types
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    EmptyDatum,
    NotConstant {
        degree: usize,
        sum: String,
        non_integer_value: Option<String>,
    },
    ChiMismatch {
        degree: usize,
        chi: i64,
        expected: i64,
    },
    Asymmetric {
        index: usize,
        count: usize,
        mirror_count: usize,
    },
    Chi {
        chi: ChiVector,
    },
    MissingOpposite {
        weight: i64,
    },
    MultiplicityImbalance {
        weight: i64,
        count: usize,
        opposite_count: usize,
    },
    PairingImbalance {
        weight: i64,
        negatives: usize,
        plus_count: usize,
        minus_count: usize,
    },
    NoPositiveWeight,
    NotSingleType {
        weight_types: Vec<i64>,
    },
    PointCount {
        points: usize,
        half_dim: usize,
    },
    BinomialMismatch {
        index: usize,
        count: usize,
        expected: usize,
    },
    Multiple {
        multiple: usize,
    },
    HypothesisFails {
        point: usize,
        occurrences: usize,
        required_times_four: usize,
    },
    MissingNegativeCount {
        index: usize,
    },
    Gap {
        index: usize,
    },
    Dichotomy {
        branch: u8,
    },
    DichotomyViolated {
        n_vector: NVector,
    },
    TooFewPoints {
        points: usize,
        bound: usize,
    },
    Scope(TheoremScope),
    DimensionTooLarge {
        half_dim: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: CheckName,
    pub passed: bool,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    fn pass(check: CheckName) -> Self {
        Self {
            check,
            passed: true,
            outcome: Outcome::Pass,
            witness: None,
            note: None,
        }
    }

    fn pass_with(check: CheckName, witness: Witness) -> Self {
        Self {
            witness: Some(witness),
            ..Self::pass(check)
        }
    }

    fn fail(check: CheckName, witness: Witness) -> Self {
        Self {
            check,
            passed: false,
            outcome: Outcome::Fail,
            witness: Some(witness),
            note: None,
        }
    }

    fn vacuous(check: CheckName, outcome: Outcome, note: impl Into<String>) -> Self {
        Self {
            check,
            passed: true,
            outcome,
            witness: None,
            note: Some(note.into()),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Passes iff `chi_vector` succeeds, `chi^i = (-1)^i N^i` and `N^i = N^{n-i}`.
pub fn check_rigidity(d: &FixedPointDatum) -> CheckReport {
    const NAME: CheckName = CheckName::Rigidity;
    if d.is_empty() {
        return CheckReport::vacuous(NAME, Outcome::Skipped, "no fixed points");
    }
    let chi = match chi_vector(d) {
        Ok(c) => c,
        Err(VerifyError::NotConstant {
            degree,
            residual,
            non_integer,
        }) => {
            return CheckReport::fail(
                NAME,
                Witness::NotConstant {
                    degree,
                    sum: residual,
                    non_integer_value: non_integer,
                },
            )
        }
        Err(VerifyError::Overflow { degree }) => {
            return CheckReport::fail(
                NAME,
                Witness::NotConstant {
                    degree,
                    sum: "constant out of 64-bit range".into(),
                    non_integer_value: None,
                },
            )
        }
        Err(e) => unreachable!("chi_vector on a nonempty datum: {e}"),
    };
    let nv = d.n_vector();
    for (i, &c) in chi.0.iter().enumerate() {
        let expected = if i % 2 == 0 { nv.0[i] as i64 } else { -(nv.0[i] as i64) };
        if c != expected {
            return CheckReport::fail(
                NAME,
                Witness::ChiMismatch {
                    degree: i,
                    chi: c,
                    expected,
                },
            );
        }
    }
    if let Some(w) = asymmetry(&nv) {
        return CheckReport::fail(NAME, w);
    }
    CheckReport::pass_with(NAME, Witness::Chi { chi })
}

fn asymmetry(nv: &NVector) -> Option<Witness> {
    let n = nv.len() - 1;
    (0..=n / 2).find_map(|i| {
        (nv.0[i] != nv.0[n - i]).then(|| Witness::Asymmetric {
            index: i,
            count: nv.0[i],
            mirror_count: nv.0[n - i],
        })
    })
}

/// Totals `sum_p N_p(w)` over all points.
fn weight_totals(d: &FixedPointDatum) -> BTreeMap<i64, usize> {
    let mut m = BTreeMap::new();
    for w in d.weights() {
        *m.entry(w).or_insert(0) += 1;
    }
    m
}

/// Every occurring weight `w` has `-w` occurring at some point.
pub fn check_weight_pairing(d: &FixedPointDatum) -> CheckReport {
    let totals = weight_totals(d);
    match totals.keys().find(|w| !totals.contains_key(&-**w)) {
        Some(&w) => CheckReport::fail(CheckName::WeightPairing, Witness::MissingOpposite { weight: w }),
        None => CheckReport::pass(CheckName::WeightPairing),
    }
}

/// `sum_p N_p(w) = sum_p N_p(-w)` for every `w`. Stronger than existence of
/// an opposite weight; reported as an additional check.
pub fn check_strict_weight_pairing(d: &FixedPointDatum) -> CheckReport {
    const NAME: CheckName = CheckName::StrictWeightPairing;
    let totals = weight_totals(d);
    for (&w, &count) in totals.iter().filter(|(w, _)| **w > 0) {
        let opposite = totals.get(&-w).copied().unwrap_or(0);
        if count != opposite {
            return CheckReport::fail(
                NAME,
                Witness::MultiplicityImbalance {
                    weight: w,
                    count,
                    opposite_count: opposite,
                },
            );
        }
    }
    if let Some((&w, &count)) = totals.iter().find(|(w, _)| **w < 0 && !totals.contains_key(&-**w)) {
        return CheckReport::fail(
            NAME,
            Witness::MultiplicityImbalance {
                weight: -w,
                count: 0,
                opposite_count: count,
            },
        );
    }
    CheckReport::pass(NAME).with_note("multiplicity equality is stronger than the existence statement")
}

/// With `w` the smallest positive weight: for each `0 <= i < n`, the number of
/// `+w` at points with `i` negative weights equals the number of `-w` at
/// points with `i + 1` negative weights.
pub fn check_smallest_weight_pairing(d: &FixedPointDatum) -> CheckReport {
    const NAME: CheckName = CheckName::SmallestWeightPairing;
    if d.weights().next().is_none() {
        return CheckReport::vacuous(NAME, Outcome::NotApplicable, "no weights occur");
    }
    let Ok(w) = d.smallest_positive_weight() else {
        return CheckReport::fail(NAME, Witness::NoPositiveWeight);
    };
    let n = d.half_dim();
    let mut plus = vec![0usize; n + 1];
    let mut minus = vec![0usize; n + 1];
    for p in d.points() {
        plus[p.n_p()] += p.count(w);
        minus[p.n_p()] += p.count(-w);
    }
    for i in 0..n {
        if plus[i] != minus[i + 1] {
            return CheckReport::fail(
                NAME,
                Witness::PairingImbalance {
                    weight: w,
                    negatives: i,
                    plus_count: plus[i],
                    minus_count: minus[i + 1],
                },
            );
        }
    }
    CheckReport::pass(NAME)
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    let mut acc: u128 = 1;
    for j in 0..k.min(n - k) {
        acc = acc.checked_mul((n - j) as u128)? / (j as u128 + 1);
    }
    usize::try_from(acc).ok()
}

/// For a datum whose weights are all `+-w`: `l * 2^n` points with
/// `N^i = l * C(n, i)`.
pub fn check_single_weight_structure(d: &FixedPointDatum) -> Result<CheckReport, VerifyError> {
    const NAME: CheckName = CheckName::SingleWeightStructure;
    let types = d.weight_types();
    if types.len() != 1 {
        return Err(VerifyError::NotSingleType(types.into_iter().collect()));
    }
    let n = d.half_dim();
    let k = d.len();
    let block = u32::try_from(n)
        .ok()
        .and_then(|n| 1usize.checked_shl(n))
        .filter(|&b| b != 0);
    let l = match block {
        Some(b) if k.is_multiple_of(b) && k > 0 => k / b,
        _ => {
            return Ok(CheckReport::fail(NAME, Witness::PointCount { points: k, half_dim: n }))
        }
    };
    let nv = d.n_vector();
    for i in 0..=n {
        let expected = binomial(n, i).and_then(|c| c.checked_mul(l));
        if expected != Some(nv.0[i]) {
            return Ok(CheckReport::fail(
                NAME,
                Witness::BinomialMismatch {
                    index: i,
                    count: nv.0[i],
                    expected: expected.unwrap_or(usize::MAX),
                },
            ));
        }
    }
    Ok(CheckReport::pass_with(NAME, Witness::Multiple { multiple: l }))
}

/// If every point has at least `3 dim / 8` weights equal to `+-w` (`w` the
/// smallest positive weight), then every negative-weight count between
/// `floor(n/4)` and `ceil(3n/4)` occurs.
pub fn check_smallest_weight_dominance(d: &FixedPointDatum) -> CheckReport {
    const NAME: CheckName = CheckName::SmallestWeightDominance;
    let Ok(w) = d.smallest_positive_weight() else {
        return CheckReport::vacuous(NAME, Outcome::NotApplicable, "no positive weight occurs");
    };
    let n = d.half_dim();
    // N_p(w) + N_p(-w) >= 3 * (2n) / 8  <=>  4 * (N_p(w) + N_p(-w)) >= 3n
    for (idx, p) in d.points().iter().enumerate() {
        let occ = p.count(w) + p.count(-w);
        if 4 * occ < 3 * n {
            return CheckReport {
                witness: Some(Witness::HypothesisFails {
                    point: idx,
                    occurrences: occ,
                    required_times_four: 3 * n,
                }),
                ..CheckReport::vacuous(NAME, Outcome::NotApplicable, "hypothesis does not hold")
            };
        }
    }
    let present: BTreeSet<usize> = d.points().iter().map(|p| p.n_p()).collect();
    for i in n / 4..=(3 * n).div_ceil(4) {
        if !present.contains(&i) {
            return CheckReport::fail(NAME, Witness::MissingNegativeCount { index: i });
        }
    }
    CheckReport::pass(NAME)
}

/// `floor(dim / 4) + 1`.
pub fn kosniowski_bound(dim: usize) -> Result<usize, VerifyError> {
    if dim % 2 == 1 {
        return Err(VerifyError::OddDimension(dim));
    }
    Ok(dim / 4 + 1)
}

pub fn check_kosniowski(d: &FixedPointDatum) -> CheckReport {
    const NAME: CheckName = CheckName::KosniowskiBound;
    if d.is_empty() {
        return CheckReport::vacuous(NAME, Outcome::Skipped, "no fixed points");
    }
    let bound = d.half_dim() / 2 + 1;
    if d.len() >= bound {
        CheckReport::pass(NAME)
    } else {
        CheckReport::fail(
            NAME,
            Witness::TooFewPoints {
                points: d.len(),
                bound,
            },
        )
    }
}

/// `dim < 4 * 2^(dim / (2 l))`, decided as `dim^(2l) < 2^(dim + 4l)`.
pub fn coprime_types_inequality(dim: usize, l: usize) -> bool {
    if l == 0 || dim == 0 {
        return false;
    }
    let lhs = num_traits::pow(BigInt::from(dim), 2 * l);
    let rhs = BigInt::one() << (dim + 4 * l);
    lhs < rhs
}

fn pairwise_coprime(types: &[i64]) -> bool {
    types
        .iter()
        .enumerate()
        .all(|(i, a)| types[i + 1..].iter().all(|b| a.gcd(b) == 1))
}

pub fn theorem_scope(d: &FixedPointDatum) -> TheoremScope {
    let types: Vec<i64> = d.weight_types().into_iter().collect();
    let l = types.len();
    let coprime_gt1 = l > 0 && types.iter().all(|&t| t > 1) && pairwise_coprime(&types);
    let bound = d.half_dim() / 2 + 1;
    TheoremScope {
        single_type: l == 1,
        two_types: l == 2,
        coprime_types: coprime_gt1 && coprime_types_inequality(d.dim(), l),
        three_coprime_types: coprime_gt1 && l == 3,
        points: d.len(),
        bound,
        bound_holds: d.len() >= bound,
        weight_types: types,
    }
}

/// Fails only when some structure theorem applies and the bound still fails.
pub fn check_theorem_scope(d: &FixedPointDatum) -> CheckReport {
    let scope = theorem_scope(d);
    if scope.any_applies() && !scope.bound_holds {
        CheckReport::fail(CheckName::TheoremScope, Witness::Scope(scope))
    } else {
        CheckReport::pass_with(CheckName::TheoremScope, Witness::Scope(scope))
    }
}

/// First index inside the support of `nv` where it vanishes.
pub fn crowding_gap(nv: &NVector) -> Option<usize> {
    let first = nv.0.iter().position(|&c| c > 0)?;
    let last = nv.0.iter().rposition(|&c| c > 0)?;
    (first..=last).find(|&i| nv.0[i] == 0)
}

/// `{i : N^i != 0}` is an interval.
pub fn check_crowded(d: &FixedPointDatum) -> CheckReport {
    match crowding_gap(&d.n_vector()) {
        Some(index) => CheckReport::fail(CheckName::Crowded, Witness::Gap { index }),
        None => CheckReport::pass(CheckName::Crowded),
    }
}

/// `N^i > 0` for all `floor(n/3) <= i <= ceil(2n/3)`.
pub fn check_middle_range(d: &FixedPointDatum) -> CheckReport {
    const NAME: CheckName = CheckName::MiddleRange;
    if d.is_empty() {
        return CheckReport::vacuous(NAME, Outcome::Skipped, "no fixed points");
    }
    let n = d.half_dim();
    let nv = d.n_vector();
    match (n / 3..=(2 * n).div_ceil(3)).find(|&i| nv.0[i] == 0) {
        Some(index) => CheckReport::fail(NAME, Witness::MissingNegativeCount { index }),
        None => CheckReport::pass(NAME),
    }
}

/// Crowdedness in half-dimension at most 3, which always holds for valid
/// data; for `n = 3` also the dichotomy `N = (0, m, m, 0)` or all `N^i > 0`.
pub fn check_dim6_crowding(d: &FixedPointDatum) -> Result<CheckReport, VerifyError> {
    const NAME: CheckName = CheckName::Dim6Crowding;
    let n = d.half_dim();
    if n > 3 {
        return Err(VerifyError::DimensionTooLarge(n));
    }
    let nv = d.n_vector();
    if let Some(index) = crowding_gap(&nv) {
        return Ok(CheckReport::fail(NAME, Witness::Gap { index }));
    }
    if n == 3 && !d.is_empty() {
        let v = &nv.0;
        let branch = if v[0] == 0 && v[3] == 0 && v[1] == v[2] && v[1] > 0 {
            1
        } else if v.iter().all(|&c| c > 0) {
            2
        } else {
            return Ok(CheckReport::fail(NAME, Witness::DichotomyViolated { n_vector: nv }));
        };
        return Ok(CheckReport::pass_with(NAME, Witness::Dichotomy { branch }));
    }
    Ok(CheckReport::pass(NAME))
}

/// For each point, the weights divisible by `b`.
pub fn restrict_to_divisor(d: &FixedPointDatum, b: i64) -> Result<Vec<Vec<i64>>, VerifyError> {
    Ok(d.restrict_to_divisor(b)?)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// Also run [`check_strict_weight_pairing`].
    pub strict_pairing: bool,
}

/// Every check in a fixed order: weight pairing, strict pairing (if
/// requested), rigidity, smallest-weight pairing, single-weight structure,
/// smallest-weight dominance, Kosniowski bound, theorem scope, crowded,
/// middle range, dim-6 crowding.
pub fn run_all_checks(d: &FixedPointDatum, opts: &CheckOptions) -> Vec<CheckReport> {
    let mut out = vec![check_weight_pairing(d)];
    if opts.strict_pairing {
        out.push(check_strict_weight_pairing(d));
    }
    let rigidity = check_rigidity(d);
    let rigid = rigidity.outcome == Outcome::Pass;
    out.push(rigidity);
    out.push(check_smallest_weight_pairing(d));
    out.push(match check_single_weight_structure(d) {
        Ok(r) => r,
        Err(_) => CheckReport::vacuous(
            CheckName::SingleWeightStructure,
            Outcome::Skipped,
            "weights are not of a single type",
        ),
    });
    out.push(check_smallest_weight_dominance(d));
    out.push(check_kosniowski(d));
    out.push(check_theorem_scope(d));

    let skip = |name: CheckName, why: &str| CheckReport::vacuous(name, Outcome::Skipped, why);
    if d.is_empty() {
        out.push(skip(CheckName::Crowded, "no fixed points"));
        out.push(skip(CheckName::MiddleRange, "no fixed points"));
        out.push(skip(CheckName::Dim6Crowding, "no fixed points"));
    } else if !rigid {
        out.push(skip(CheckName::Crowded, "rigidity failed"));
        out.push(skip(CheckName::MiddleRange, "rigidity failed"));
        out.push(skip(CheckName::Dim6Crowding, "rigidity failed"));
    } else {
        out.push(check_crowded(d));
        out.push(check_middle_range(d));
        out.push(match check_dim6_crowding(d) {
            Ok(r) => r,
            Err(_) => skip(CheckName::Dim6Crowding, "half-dimension exceeds 3"),
        });
    }
    out
}

// Modular screening for the enumerator.

const MODULUS: u64 = (1 << 61) - 1;
const SCREEN_BASES: [u64; 2] = [3, 7];

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b);
        }
        b = mul_mod(b, b);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, MODULUS - 2)
}

/// `t^w mod p` for a possibly negative `w`.
fn t_pow(t: u64, w: i64) -> u64 {
    let x = pow_mod(t, w.unsigned_abs());
    if w < 0 {
        inv_mod(x)
    } else {
        x
    }
}

/// Cheap necessary test for [`check_rigidity`]: evaluates every localization
/// sum at a few points modulo a prime and compares with `(-1)^i N^i`.
///
/// Returns `false` only when rigidity certainly fails. A `true` result says
/// nothing; the exact check must still run.
pub fn rigidity_screen(d: &FixedPointDatum) -> bool {
    if d.is_empty() {
        return true;
    }
    let n = d.half_dim();
    let nv = d.n_vector();
    if !nv.is_symmetric() {
        return false;
    }
    'base: for &t in &SCREEN_BASES {
        let mut sums = vec![0u64; n + 1];
        for p in d.points() {
            let mut denom = 1u64;
            let mut sigma = vec![0u64; n + 1];
            sigma[0] = 1;
            for (k, &w) in p.weights().iter().enumerate() {
                let x = t_pow(t, w);
                let one_minus = (1 + MODULUS - x) % MODULUS;
                if one_minus == 0 {
                    continue 'base;
                }
                denom = mul_mod(denom, one_minus);
                for j in (1..=k + 1).rev() {
                    sigma[j] = (sigma[j] + mul_mod(sigma[j - 1], x)) % MODULUS;
                }
            }
            let inv = inv_mod(denom);
            for (s, sg) in sums.iter_mut().zip(&sigma) {
                *s = (*s + mul_mod(*sg, inv)) % MODULUS;
            }
        }
        for (i, &s) in sums.iter().enumerate() {
            let c = nv.0[i] as u64 % MODULUS;
            let expected = if i % 2 == 0 || c == 0 { c } else { MODULUS - c };
            if s != expected {
                return false;
            }
        }
    }
    true
}

pub(crate) fn passes_smallest_weight_pairing(d: &FixedPointDatum) -> bool {
    check_smallest_weight_pairing(d).passed
}

pub(crate) fn passes_weight_pairing(d: &FixedPointDatum) -> bool {
    let totals: BTreeSet<i64> = d.weights().collect();
    totals.iter().all(|w| totals.contains(&-w))
}
