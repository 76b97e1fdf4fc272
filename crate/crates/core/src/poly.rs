//! Exact Laurent polynomials and rational functions in one indeterminate `t`.
//!
//! Coefficients are arbitrary-precision integers. A [`RationalFunction`] is
//! kept in a normal form where numerator and denominator are ordinary
//! polynomials, the shared integer content is divided out and the lowest
//! coefficient of the denominator is positive. Full polynomial GCD reduction
//! only runs when the operands grow past [`GCD_TERM_THRESHOLD`] terms, or on
//! an explicit [`RationalFunction::simplify`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Term count above which [`RationalFunction`] addition reduces by the
/// polynomial GCD of numerator and denominator.
pub const GCD_TERM_THRESHOLD: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("weight 0 is not allowed: 1 - t^0 vanishes identically")]
    ZeroWeight,
    #[error("elementary symmetric degree {degree} exceeds the number of variables {len}")]
    DegreeOutOfRange { degree: usize, len: usize },
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
}

/// Sparse Laurent polynomial with integer coefficients.
///
/// No zero coefficient is ever stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, accumulating
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest-degree term.
    pub fn lowest(&self) -> Option<(i64, &BigInt)> {
        self.terms.iter().next().map(|(&e, c)| (e, c))
    }

    /// Highest-degree term.
    pub fn leading(&self) -> Option<(i64, &BigInt)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    /// The constant value if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, x)| (e, x / c)).collect(),
        }
    }

    /// Evaluates at an integer point (exponents must be nonnegative).
    pub fn eval_ordinary(&self, t: &BigInt) -> Option<BigInt> {
        if self.min_exponent().is_some_and(|e| e < 0) {
            return None;
        }
        let mut acc = BigInt::zero();
        let mut last = self.max_exponent().unwrap_or(0);
        for (&e, c) in self.terms.iter().rev() {
            acc *= num_traits::pow(t.clone(), (last - e) as usize);
            acc += c;
            last = e;
        }
        acc *= num_traits::pow(t.clone(), last.max(0) as usize);
        Some(acc)
    }

    /// Exact division in the Laurent ring: returns `q` with `self = q * divisor`
    /// when such a Laurent polynomial with integer coefficients exists.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a_shift, a) = to_dense(self);
        let (b_shift, b) = to_dense(divisor);
        let q = dense_div_exact(&a, &b)?;
        Some(from_dense(&q, a_shift - b_shift))
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            if e == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

/// `1 - t^w` for a nonzero weight `w`.
pub fn one_minus_t_pow(w: i64) -> Result<LaurentPolynomial, PolyError> {
    if w == 0 {
        return Err(PolyError::ZeroWeight);
    }
    Ok(LaurentPolynomial::from_terms([(0, 1), (w, -1)]))
}

/// `sigma_i(t^{w_1}, ..., t^{w_n})`.
pub fn elementary_symmetric(i: usize, weights: &[i64]) -> Result<LaurentPolynomial, PolyError> {
    if i > weights.len() {
        return Err(PolyError::DegreeOutOfRange {
            degree: i,
            len: weights.len(),
        });
    }
    if weights.contains(&0) {
        return Err(PolyError::ZeroWeight);
    }
    Ok(elementary_symmetric_all(weights).swap_remove(i))
}

/// All of `sigma_0, ..., sigma_n` at the monomials `t^{w_j}`, read off
/// `prod_j (1 + y t^{w_j})`.
pub fn elementary_symmetric_all(weights: &[i64]) -> Vec<LaurentPolynomial> {
    let mut e = vec![LaurentPolynomial::zero(); weights.len() + 1];
    e[0] = LaurentPolynomial::one();
    for (k, &w) in weights.iter().enumerate() {
        for j in (1..=k + 1).rev() {
            let shifted = e[j - 1].shift(w);
            e[j] = &e[j] + &shifted;
        }
    }
    e
}

/// The `d`-th cyclotomic polynomial.
pub fn cyclotomic(d: u64) -> LaurentPolynomial {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut p = LaurentPolynomial::from_terms([(0, -1), (d as i64, 1)]);
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p
                .div_exact(&cyclotomic(e))
                .expect("cyclotomic factors divide t^d - 1");
        }
    }
    p
}

// Dense helpers over ordinary polynomials, coefficient vectors low to high.

fn to_dense(p: &LaurentPolynomial) -> (i64, Vec<BigInt>) {
    let lo = p.min_exponent().unwrap_or(0);
    let hi = p.max_exponent().unwrap_or(0);
    let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in p.terms() {
        v[(e - lo) as usize] = c.clone();
    }
    (lo, v)
}

fn from_dense(v: &[BigInt], shift: i64) -> LaurentPolynomial {
    LaurentPolynomial {
        terms: v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 + shift, c.clone()))
            .collect(),
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let lc = b.last()?.clone();
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &r[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(&lc);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

fn dense_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let c = dense_content(v);
    if c.is_zero() || c.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lc = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let off = r.len() - b.len();
        for x in r.iter_mut() {
            *x *= &lc;
        }
        for (j, bj) in b.iter().enumerate() {
            r[off + j] -= &lr * bj;
        }
        trim(&mut r);
    }
    r
}

/// Primitive-PRS gcd over Z[t], normalized to positive leading coefficient.
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let content = dense_content(&a).gcd(&dense_content(&b));
    let mut a = primitive_part(&a);
    let mut b = primitive_part(&b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        a.iter_mut().for_each(|c| *c = -&*c);
    }
    a.iter().map(|c| c * &content).collect()
}

/// Outcome of testing a rational function for constancy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constancy {
    Integer(BigInt),
    /// Constant `numer / denom` in lowest terms with `denom > 1`.
    NonInteger { numer: BigInt, denom: BigInt },
    NotConstant,
}

/// Quotient of two Laurent polynomials in normal form.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    numer: LaurentPolynomial,
    denom: LaurentPolynomial,
}

impl RationalFunction {
    pub fn new(
        numer: LaurentPolynomial,
        denom: LaurentPolynomial,
    ) -> Result<Self, PolyError> {
        if denom.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::normalized(numer, denom))
    }

    pub fn zero() -> Self {
        Self {
            numer: LaurentPolynomial::zero(),
            denom: LaurentPolynomial::one(),
        }
    }

    pub fn from_polynomial(p: LaurentPolynomial) -> Self {
        Self::normalized(p, LaurentPolynomial::one())
    }

    pub fn numer(&self) -> &LaurentPolynomial {
        &self.numer
    }

    pub fn denom(&self) -> &LaurentPolynomial {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    fn normalized(numer: LaurentPolynomial, denom: LaurentPolynomial) -> Self {
        debug_assert!(!denom.is_zero());
        if numer.is_zero() {
            return Self::zero();
        }
        // Strip the t-power from each side, then put the net power back on
        // whichever side keeps both ordinary.
        let a = numer.min_exponent().unwrap();
        let b = denom.min_exponent().unwrap();
        let (numer, denom) = if a >= b {
            (numer.shift(-b), denom.shift(-b))
        } else {
            (numer.shift(-a), denom.shift(-a))
        };
        let g = numer.content().gcd(&denom.content());
        let (mut numer, mut denom) = if g.is_one() {
            (numer, denom)
        } else {
            (numer.div_scalar_exact(&g), denom.div_scalar_exact(&g))
        };
        if denom.lowest().unwrap().1.is_negative() {
            numer = -numer;
            denom = -denom;
        }
        Self { numer, denom }
    }

    /// Cancels the polynomial gcd of numerator and denominator.
    pub fn simplify(&self) -> Self {
        if self.numer.is_zero() {
            return Self::zero();
        }
        let (_, a) = to_dense(&self.numer);
        let (_, b) = to_dense(&self.denom);
        let g = primitive_part(&dense_gcd(&a, &b));
        if g.len() <= 1 {
            return self.clone();
        }
        let g = from_dense(&g, 0);
        let numer = self.numer.div_exact(&g).expect("gcd divides numerator");
        let denom = self.denom.div_exact(&g).expect("gcd divides denominator");
        Self::normalized(numer, denom)
    }

    fn maybe_simplify(self) -> Self {
        if self.numer.len() + self.denom.len() > GCD_TERM_THRESHOLD {
            self.simplify()
        } else {
            self
        }
    }

    /// Returns the constant value when `numer = c * denom` with `c` an integer.
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.constancy() {
            Constancy::Integer(c) => Some(c),
            _ => None,
        }
    }

    pub fn constancy(&self) -> Constancy {
        if self.numer.is_zero() {
            return Constancy::Integer(BigInt::zero());
        }
        let (ea, la) = self.numer.leading().unwrap();
        let (eb, lb) = self.denom.leading().unwrap();
        if ea != eb || self.numer.len() != self.denom.len() {
            return Constancy::NotConstant;
        }
        // numer * lb == denom * la  <=>  numer / denom == la / lb
        if self.numer.scale(lb) != self.denom.scale(la) {
            return Constancy::NotConstant;
        }
        let g = la.gcd(lb);
        let (mut p, mut q) = (la / &g, lb / &g);
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        if q.is_one() {
            Constancy::Integer(p)
        } else {
            Constancy::NonInteger { numer: p, denom: q }
        }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.numer * &other.denom == &other.numer * &self.denom
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numer, self.denom)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let sum = if self.denom == rhs.denom {
            RationalFunction::normalized(&self.numer + &rhs.numer, self.denom.clone())
        } else {
            RationalFunction::normalized(
                &(&self.numer * &rhs.denom) + &(&rhs.numer * &self.denom),
                &self.denom * &rhs.denom,
            )
        };
        sum.maybe_simplify()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.numer * &rhs.numer, &self.denom * &rhs.denom)
            .maybe_simplify()
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}
