//! Fixed point data: for each isolated fixed point of a circle action on a
//! `2n`-dimensional almost complex manifold, the multiset of its `n` weights.
//!
//! Everything here is purely combinatorial. Generators cover the standard
//! model families: rotations of `S^2`, the two-fixed-point action on `S^6`,
//! linear actions on `CP^n`, and their products and disjoint unions.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DataError {
    #[error("fixed point {point} has {found} weights, expected {expected}")]
    WrongArity {
        point: usize,
        expected: usize,
        found: usize,
    },
    #[error("fixed point {point} has a zero weight")]
    ZeroWeight { point: usize },
    #[error("weight 0 is not a valid weight")]
    ZeroQuery,
    #[error("no positive weight occurs")]
    NoPositiveWeight,
    #[error("exponents must be strictly increasing, got {0:?}")]
    DuplicateExponent(Vec<i64>),
    #[error("half-dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
}

/// Weights at one fixed point, stored sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FixedPoint {
    weights: Vec<i64>,
}

impl FixedPoint {
    /// Panics on a zero weight; use [`FixedPointDatum::new`] for validated input.
    pub fn new(mut weights: Vec<i64>) -> Self {
        assert!(!weights.contains(&0), "zero weight at a fixed point");
        weights.sort_unstable();
        Self { weights }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Number of negative weights.
    pub fn n_p(&self) -> usize {
        self.weights.partition_point(|&w| w < 0)
    }

    /// Multiplicity of `w` at this point.
    pub fn multiplicity(&self, w: i64) -> Result<usize, DataError> {
        if w == 0 {
            return Err(DataError::ZeroQuery);
        }
        Ok(self.count(w))
    }

    pub(crate) fn count(&self, w: i64) -> usize {
        let lo = self.weights.partition_point(|&x| x < w);
        let hi = self.weights.partition_point(|&x| x <= w);
        hi - lo
    }

    pub fn negated(&self) -> Self {
        Self::new(self.weights.iter().map(|w| -w).collect())
    }
}

impl fmt::Display for FixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

/// `N^0, ..., N^n`: how many fixed points carry exactly `i` negative weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NVector(pub Vec<usize>);

impl NVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Convolution, the N-vector of a product.
    pub fn convolve(&self, other: &NVector) -> NVector {
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        NVector(out)
    }
}

/// An abstract fixed point datum: half-dimension `n` and the fixed points.
///
/// Serializes as `{"dim": 2n, "fixed_points": [{"weights": [...]}, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "crate::cli::DatumDocument", try_from = "crate::cli::DatumDocument")]
pub struct FixedPointDatum {
    half_dim: usize,
    points: Vec<FixedPoint>,
}

impl FixedPointDatum {
    /// Validates and stores the points with each weight list sorted.
    pub fn new(half_dim: usize, points: Vec<Vec<i64>>) -> Result<Self, DataError> {
        let mut out = Vec::with_capacity(points.len());
        for (idx, weights) in points.into_iter().enumerate() {
            if weights.len() != half_dim {
                return Err(DataError::WrongArity {
                    point: idx,
                    expected: half_dim,
                    found: weights.len(),
                });
            }
            if weights.contains(&0) {
                return Err(DataError::ZeroWeight { point: idx });
            }
            out.push(FixedPoint::new(weights));
        }
        Ok(Self {
            half_dim,
            points: out,
        })
    }

    pub(crate) fn from_points(half_dim: usize, points: Vec<FixedPoint>) -> Self {
        debug_assert!(points.iter().all(|p| p.weights.len() == half_dim));
        Self { half_dim, points }
    }

    /// A datum with no fixed points.
    pub fn empty(half_dim: usize) -> Self {
        Self {
            half_dim,
            points: Vec::new(),
        }
    }

    /// The single fixed point of a point manifold.
    pub fn point() -> Self {
        Self {
            half_dim: 0,
            points: vec![FixedPoint { weights: vec![] }],
        }
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn dim(&self) -> usize {
        2 * self.half_dim
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn weights(&self) -> impl Iterator<Item = i64> + '_ {
        self.points.iter().flat_map(|p| p.weights.iter().copied())
    }

    pub fn n_vector(&self) -> NVector {
        let mut counts = vec![0; self.half_dim + 1];
        for p in &self.points {
            counts[p.n_p()] += 1;
        }
        NVector(counts)
    }

    pub fn smallest_positive_weight(&self) -> Result<i64, DataError> {
        self.weights()
            .filter(|&w| w > 0)
            .min()
            .ok_or(DataError::NoPositiveWeight)
    }

    /// Absolute values of all occurring weights.
    pub fn weight_types(&self) -> BTreeSet<i64> {
        self.weights().map(i64::abs).collect()
    }

    /// gcd of all `|w|`, or 0 when no weight occurs.
    pub fn weight_gcd(&self) -> i64 {
        self.weights().fold(0, |g, w| g.gcd(&w))
    }

    pub fn is_effective(&self) -> bool {
        matches!(self.weight_gcd(), 0 | 1)
    }

    /// Points sorted lexicographically (weights are already sorted).
    pub fn canonicalize(&self) -> Self {
        let mut points = self.points.clone();
        points.sort();
        Self {
            half_dim: self.half_dim,
            points,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.points.windows(2).all(|w| w[0] <= w[1])
    }

    /// Every weight at every point negated.
    pub fn sign_flip(&self) -> Self {
        Self {
            half_dim: self.half_dim,
            points: self.points.iter().map(FixedPoint::negated).collect(),
        }
    }

    /// Every weight multiplied by `c`.
    pub fn scale(&self, c: i64) -> Result<Self, DataError> {
        if c == 0 {
            return Err(DataError::InvalidParameter("scale factor 0".into()));
        }
        Ok(Self {
            half_dim: self.half_dim,
            points: self
                .points
                .iter()
                .map(|p| FixedPoint::new(p.weights.iter().map(|w| w * c).collect()))
                .collect(),
        })
    }

    /// For each point, its weights divisible by `b`.
    pub fn restrict_to_divisor(&self, b: i64) -> Result<Vec<Vec<i64>>, DataError> {
        if b < 2 {
            return Err(DataError::InvalidParameter(format!(
                "divisor must be at least 2, got {b}"
            )));
        }
        Ok(self
            .points
            .iter()
            .map(|p| p.weights.iter().copied().filter(|w| w % b == 0).collect())
            .collect())
    }
}

impl fmt::Display for FixedPointDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}: [", self.dim())?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Two-point action on `S^6`: `{-a-b, a, b}` and `{-a, -b, a+b}`.
pub fn gen_s6(a: i64, b: i64) -> Result<FixedPointDatum, DataError> {
    if a < 1 || b < 1 {
        return Err(DataError::InvalidParameter(format!(
            "S^6 speeds must be positive, got a={a}, b={b}"
        )));
    }
    FixedPointDatum::new(3, vec![vec![-a - b, a, b], vec![-a, -b, a + b]])
}

/// Linear action on `CP^n` with exponents `a_0 < ... < a_n`; point `i` has
/// weights `a_j - a_i` for `j != i`.
pub fn gen_cpn(exponents: &[i64]) -> Result<FixedPointDatum, DataError> {
    if exponents.is_empty() {
        return Err(DataError::InvalidParameter("CP^n needs at least one exponent".into()));
    }
    if exponents.iter().any(|&a| a < 0) {
        return Err(DataError::InvalidParameter(format!(
            "exponents must be non-negative, got {exponents:?}"
        )));
    }
    if exponents.windows(2).any(|w| w[0] >= w[1]) {
        return Err(DataError::DuplicateExponent(exponents.to_vec()));
    }
    let n = exponents.len() - 1;
    let points = exponents
        .iter()
        .enumerate()
        .map(|(i, ai)| {
            exponents
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, aj)| aj - ai)
                .collect()
        })
        .collect();
    FixedPointDatum::new(n, points)
}

/// Rotation of `S^2` at speed `w`.
pub fn gen_s2(w: i64) -> Result<FixedPointDatum, DataError> {
    if w < 1 {
        return Err(DataError::InvalidParameter(format!(
            "S^2 speed must be positive, got {w}"
        )));
    }
    FixedPointDatum::new(1, vec![vec![w], vec![-w]])
}

/// Diagonal action on a product: one point per pair, weights concatenated.
pub fn product(d1: &FixedPointDatum, d2: &FixedPointDatum) -> FixedPointDatum {
    let mut points = Vec::with_capacity(d1.len() * d2.len());
    for p in &d1.points {
        for q in &d2.points {
            let mut w = p.weights.clone();
            w.extend_from_slice(&q.weights);
            points.push(FixedPoint::new(w));
        }
    }
    FixedPointDatum::from_points(d1.half_dim + d2.half_dim, points)
}

/// Disjoint union of two data of the same dimension. A datum without points
/// acts as the identity regardless of its recorded dimension.
pub fn disjoint_union(
    d1: &FixedPointDatum,
    d2: &FixedPointDatum,
) -> Result<FixedPointDatum, DataError> {
    if d2.is_empty() {
        return Ok(d1.clone());
    }
    if d1.is_empty() {
        return Ok(d2.clone());
    }
    if d1.half_dim != d2.half_dim {
        return Err(DataError::DimensionMismatch(d1.half_dim, d2.half_dim));
    }
    let mut points = d1.points.clone();
    points.extend(d2.points.iter().cloned());
    Ok(FixedPointDatum::from_points(d1.half_dim, points))
}

/// `d` multiplied with itself `copies` times (`copies = 0` gives a point).
pub fn product_power(d: &FixedPointDatum, copies: usize) -> FixedPointDatum {
    (0..copies).fold(FixedPointDatum::point(), |acc, _| product(&acc, d))
}

/// `copies` disjoint copies of `d`.
pub fn union_power(d: &FixedPointDatum, copies: usize) -> FixedPointDatum {
    let mut points = Vec::with_capacity(d.len() * copies);
    for _ in 0..copies {
        points.extend(d.points.iter().cloned());
    }
    FixedPointDatum::from_points(d.half_dim, points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pts(d: &FixedPointDatum) -> Vec<Vec<i64>> {
        d.points().iter().map(|p| p.weights().to_vec()).collect()
    }

    #[test]
    fn new_datum_examples() {
        let d = FixedPointDatum::new(3, vec![vec![-3, 1, 2], vec![-1, -2, 3]]).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.dim(), 6);
        let p = FixedPointDatum::new(0, vec![vec![]]).unwrap();
        assert_eq!(p, FixedPointDatum::point());
        assert_eq!(
            FixedPointDatum::new(2, vec![vec![1, 0]]),
            Err(DataError::ZeroWeight { point: 0 })
        );
        assert_eq!(
            FixedPointDatum::new(3, vec![vec![1, 2]]),
            Err(DataError::WrongArity {
                point: 0,
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn n_p_and_multiplicity() {
        assert_eq!(FixedPoint::new(vec![-3, 1, 2]).n_p(), 1);
        assert_eq!(FixedPoint::new(vec![-1, -2, 3]).n_p(), 2);
        assert_eq!(FixedPoint::new(vec![]).n_p(), 0);
        assert_eq!(FixedPoint::new(vec![-1, -1, 2]).multiplicity(-1), Ok(2));
        assert_eq!(FixedPoint::new(vec![-3, 1, 2]).multiplicity(1), Ok(1));
        assert_eq!(FixedPoint::new(vec![-3, 1, 2]).multiplicity(5), Ok(0));
        assert_eq!(FixedPoint::new(vec![1]).multiplicity(0), Err(DataError::ZeroQuery));
    }

    #[test]
    fn n_vector_examples() {
        assert_eq!(gen_s6(1, 2).unwrap().n_vector(), NVector(vec![0, 1, 1, 0]));
        assert_eq!(gen_cpn(&[0, 1, 3]).unwrap().n_vector(), NVector(vec![1, 1, 1]));
        assert_eq!(FixedPointDatum::point().n_vector(), NVector(vec![1]));
    }

    #[test]
    fn smallest_positive_weight_examples() {
        assert_eq!(gen_s6(2, 3).unwrap().smallest_positive_weight(), Ok(2));
        assert_eq!(gen_s2(4).unwrap().smallest_positive_weight(), Ok(4));
        let d = FixedPointDatum::new(1, vec![vec![-1], vec![-2]]).unwrap();
        assert_eq!(d.smallest_positive_weight(), Err(DataError::NoPositiveWeight));
    }

    #[test]
    fn weight_types_and_effectiveness() {
        assert_eq!(
            gen_s6(1, 2).unwrap().weight_types(),
            BTreeSet::from([1, 2, 3])
        );
        assert_eq!(gen_s2(7).unwrap().weight_types(), BTreeSet::from([7]));
        assert!(FixedPointDatum::empty(2).weight_types().is_empty());

        let d = FixedPointDatum::new(2, vec![vec![2, 4], vec![-4, -2]]).unwrap();
        assert!(!d.is_effective());
        assert!(gen_s6(1, 2).unwrap().is_effective());
        assert!(!gen_s2(3).unwrap().is_effective());
        assert!(FixedPointDatum::point().is_effective());
    }

    #[test]
    fn generators() {
        assert_eq!(pts(&gen_s6(1, 1).unwrap()), vec![vec![-2, 1, 1], vec![-1, -1, 2]]);
        assert_eq!(pts(&gen_s6(1, 2).unwrap()), vec![vec![-3, 1, 2], vec![-2, -1, 3]]);
        assert_eq!(pts(&gen_s6(2, 3).unwrap()), vec![vec![-5, 2, 3], vec![-3, -2, 5]]);

        assert_eq!(pts(&gen_cpn(&[0, 1]).unwrap()), vec![vec![1], vec![-1]]);
        assert_eq!(
            pts(&gen_cpn(&[0, 1, 3]).unwrap()),
            vec![vec![1, 3], vec![-1, 2], vec![-3, -2]]
        );
        assert_eq!(
            gen_cpn(&[0, 1, 1]),
            Err(DataError::DuplicateExponent(vec![0, 1, 1]))
        );

        assert_eq!(pts(&gen_s2(1).unwrap()), vec![vec![1], vec![-1]]);
        assert_eq!(pts(&gen_s2(5).unwrap()), vec![vec![5], vec![-5]]);
        assert!(gen_s2(0).is_err());
        assert!(gen_s6(0, 1).is_err());
    }

    #[test]
    fn product_examples() {
        let s2 = gen_s2(1).unwrap();
        let sq = product(&s2, &s2);
        assert_eq!(pts(&sq), vec![vec![1, 1], vec![-1, 1], vec![-1, 1], vec![-1, -1]]);
        assert_eq!(sq.n_vector(), NVector(vec![1, 2, 1]));

        let s6 = gen_s6(1, 1).unwrap();
        assert_eq!(product(&s6, &FixedPointDatum::point()), s6);

        let m = product(&s6, &s2);
        assert_eq!(m.len(), 4);
        assert_eq!(m.half_dim(), 4);
    }

    #[test]
    fn union_examples() {
        let s2 = gen_s2(1).unwrap();
        let u = disjoint_union(&s2, &s2).unwrap();
        assert_eq!(u.len(), 4);
        assert_eq!(u.half_dim(), 1);
        let sq = product(&s2, &s2);
        assert_eq!(disjoint_union(&s2, &sq), Err(DataError::DimensionMismatch(1, 2)));
        assert_eq!(disjoint_union(&s2, &FixedPointDatum::empty(1)).unwrap(), s2);
    }

    #[test]
    fn canonicalize_examples() {
        let d = FixedPointDatum::new(3, vec![vec![2, -3, 1], vec![3, -1, -2]]).unwrap();
        let c = d.canonicalize();
        assert_eq!(pts(&c), vec![vec![-3, 1, 2], vec![-2, -1, 3]]);
        assert_eq!(c.canonicalize(), c);
        let a = FixedPointDatum::new(1, vec![vec![1], vec![-1]]).unwrap();
        let b = FixedPointDatum::new(1, vec![vec![-1], vec![1]]).unwrap();
        assert_eq!(a.canonicalize(), b.canonicalize());
    }

    #[test]
    fn restrict_to_divisor_examples() {
        let d = gen_s6(2, 3).unwrap();
        assert_eq!(d.restrict_to_divisor(3).unwrap(), vec![vec![3], vec![-3]]);
        assert_eq!(d.restrict_to_divisor(6).unwrap(), vec![Vec::<i64>::new(), vec![]]);
        let p = product(&gen_s2(2).unwrap(), &gen_s2(3).unwrap());
        assert_eq!(
            p.restrict_to_divisor(2).unwrap(),
            vec![vec![2], vec![2], vec![-2], vec![-2]]
        );
        assert!(d.restrict_to_divisor(1).is_err());
    }

    fn arb_generator() -> impl Strategy<Value = FixedPointDatum> {
        prop_oneof![
            (1i64..=5).prop_map(|w| gen_s2(w).unwrap()),
            (1i64..=5, 1i64..=5).prop_map(|(a, b)| gen_s6(a, b).unwrap()),
            prop::collection::btree_set(0i64..=10, 2..=4)
                .prop_map(|s| gen_cpn(&s.into_iter().collect::<Vec<_>>()).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn canonicalize_permutation_invariant(d in arb_generator(), e in arb_generator(), seed in any::<u64>()) {
            let prod = product(&d, &e);
            let mut pts = prod.points().to_vec();
            // deterministic shuffle
            let mut s = seed;
            for i in (1..pts.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                pts.swap(i, (s >> 33) as usize % (i + 1));
            }
            let shuffled = FixedPointDatum::from_points(prod.half_dim(), pts);
            prop_assert_eq!(shuffled.canonicalize(), prod.canonicalize());
            prop_assert_eq!(prod.canonicalize().canonicalize(), prod.canonicalize());
        }

        #[test]
        fn product_statistics(d in arb_generator(), e in arb_generator()) {
            let p = product(&d, &e);
            prop_assert_eq!(p.n_vector(), d.n_vector().convolve(&e.n_vector()));
            let mut types = d.weight_types();
            types.extend(e.weight_types());
            prop_assert_eq!(p.weight_types(), types);
        }

        #[test]
        fn cpn_has_flat_n_vector(s in prop::collection::btree_set(0i64..=10, 1..=8)) {
            let exps: Vec<i64> = s.into_iter().collect();
            let d = gen_cpn(&exps).unwrap();
            for (i, p) in d.points().iter().enumerate() {
                prop_assert_eq!(p.n_p(), i);
            }
            prop_assert_eq!(d.n_vector(), NVector(vec![1; exps.len()]));
        }

        #[test]
        fn union_adds_n_vectors(d in arb_generator(), e in arb_generator()) {
            prop_assume!(d.half_dim() == e.half_dim());
            let u = disjoint_union(&d, &e).unwrap();
            let sum: Vec<usize> = d.n_vector().0.iter().zip(&e.n_vector().0).map(|(a, b)| a + b).collect();
            prop_assert_eq!(u.n_vector(), NVector(sum));
        }
    }
}
