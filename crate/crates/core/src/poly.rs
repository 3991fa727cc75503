//! Sparse multivariate polynomials over the rationals in the variables
//! `x1..xn, y1..yn`, together with the two-sided integer grading of the
//! oscillator module.
//!
//! Monomials keep their exponents in one flat vector laid out as
//! `[x1, .., xn, y1, .., yn]`. Exponents are signed so that Laurent
//! intermediates can be represented; [`Monomial::is_proper`] tells whether a
//! monomial actually lives in the polynomial ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub use crate::rational::Rational;

pub fn rat(num: i64) -> Rational {
    Rational::from_i64(num)
}

pub fn ratio(num: i64, den: i64) -> Rational {
    &Rational::from_i64(num) / &Rational::from_i64(den)
}

/// The triple `(n, n1, n2)` selecting which variables get Fourier-swapped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RepConfig {
    n: usize,
    n1: usize,
    n2: usize,
}

impl RepConfig {
    pub fn new(n: usize, n1: usize, n2: usize) -> Result<Self> {
        if n < 2 || n1 < 1 || n1 > n2 || n2 > n {
            return Err(Error::InvalidConfig {
                n: n as i64,
                n1: n1 as i64,
                n2: n2 as i64,
            });
        }
        Ok(RepConfig { n, n1, n2 })
    }

    /// Validating constructor for signed command-line input.
    pub fn from_signed(n: i64, n1: i64, n2: i64) -> Result<Self> {
        if n < 2 || n1 < 1 || n1 > n2 || n2 > n {
            return Err(Error::InvalidConfig { n, n1, n2 });
        }
        Self::new(n as usize, n1 as usize, n2 as usize)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    /// Every admissible configuration for a given `n`, in lexicographic order.
    pub fn all_for(n: usize) -> Vec<RepConfig> {
        let mut out = Vec::new();
        for n1 in 1..=n {
            for n2 in n1..=n {
                out.push(RepConfig { n, n1, n2 });
            }
        }
        out
    }
}

impl fmt::Display for RepConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, n1={}, n2={})", self.n, self.n1, self.n2)
    }
}

/// The bidegree `<l1, l2>`.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct GradedPair {
    pub l1: i64,
    pub l2: i64,
}

impl GradedPair {
    pub fn new(l1: i64, l2: i64) -> Self {
        GradedPair { l1, l2 }
    }
}

impl Add for GradedPair {
    type Output = GradedPair;
    fn add(self, rhs: GradedPair) -> GradedPair {
        GradedPair::new(self.l1 + rhs.l1, self.l2 + rhs.l2)
    }
}

impl fmt::Display for GradedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.l1, self.l2)
    }
}

pub(crate) type Exps = SmallVec<[i32; 12]>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    /// Cached total degree, compared first.
    deg: i64,
}

impl Monomial {
    pub fn new(xexp: &[i32], yexp: &[i32]) -> Self {
        assert_eq!(
            xexp.len(),
            yexp.len(),
            "x and y exponent vectors differ in length"
        );
        let mut exps = Exps::with_capacity(2 * xexp.len());
        exps.extend_from_slice(xexp);
        exps.extend_from_slice(yexp);
        Self::from_exps(exps)
    }

    pub(crate) fn from_exps(exps: Exps) -> Self {
        debug_assert!(exps.len().is_multiple_of(2));
        let deg = exps.iter().map(|&e| e as i64).sum();
        Monomial { exps, deg }
    }

    pub fn one(n: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, 2 * n),
            deg: 0,
        }
    }

    /// `x_i^e` with a 1-based index.
    pub fn x_pow(n: usize, i: usize, e: i32) -> Self {
        assert!((1..=n).contains(&i));
        let mut exps: Exps = SmallVec::from_elem(0, 2 * n);
        exps[i - 1] = e;
        Self::from_exps(exps)
    }

    /// `y_i^e` with a 1-based index.
    pub fn y_pow(n: usize, i: usize, e: i32) -> Self {
        assert!((1..=n).contains(&i));
        let mut exps: Exps = SmallVec::from_elem(0, 2 * n);
        exps[n + i - 1] = e;
        Self::from_exps(exps)
    }

    pub fn n(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn xexp(&self) -> &[i32] {
        &self.exps[..self.n()]
    }

    pub fn yexp(&self) -> &[i32] {
        &self.exps[self.n()..]
    }

    /// All `2n` exponents, x block first.
    pub fn exps(&self) -> &[i32] {
        &self.exps
    }

    pub fn is_proper(&self) -> bool {
        self.exps.iter().all(|&e| e >= 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.deg
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            deg: self.deg + other.deg,
        }
    }

    fn var_name(n: usize, idx: usize) -> String {
        if idx < n {
            format!("x{}", idx + 1)
        } else {
            format!("y{}", idx - n + 1)
        }
    }
}

/// Graded lexicographic order: total degree first, then the exponent vectors
/// `(x1..xn, y1..yn)` compared left to right, larger exponent wins.
pub fn compare_monomials(a: &Monomial, b: &Monomial) -> Ordering {
    a.deg.cmp(&b.deg).then_with(|| a.exps[..].cmp(&b.exps[..]))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_monomials(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut first = true;
        for (idx, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(&Self::var_name(n, idx))?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Bidegree of a monomial under `cfg`.
pub fn grading(m: &Monomial, cfg: &RepConfig) -> Result<GradedPair> {
    if m.n() != cfg.n() {
        return Err(Error::DimensionMismatch {
            expected: cfg.n(),
            found: m.n(),
        });
    }
    let x = m.xexp();
    let y = m.yexp();
    let sum = |s: &[i32]| s.iter().map(|&e| e as i64).sum::<i64>();
    let l1 = sum(&x[cfg.n1()..]) - sum(&x[..cfg.n1()]);
    let l2 = sum(&y[..cfg.n2()]) - sum(&y[cfg.n2()..]);
    Ok(GradedPair::new(l1, l2))
}

/// Common bidegree of all terms, `None` if they disagree. The zero
/// polynomial reports `<0,0>`.
pub fn is_graded_homogeneous(p: &Poly, cfg: &RepConfig) -> Result<Option<GradedPair>> {
    let mut common = None;
    for m in p.terms.keys() {
        let g = grading(m, cfg)?;
        match common {
            None => common = Some(g),
            Some(c) if c != g => return Ok(None),
            _ => {}
        }
    }
    Ok(Some(common.unwrap_or_default()))
}

/// A polynomial, stored as a sorted map from monomial to nonzero coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(Monomial::one(n), Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(n), c)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    /// `x_i` with a 1-based index.
    pub fn x(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::x_pow(n, i, 1), Rational::one())
    }

    /// `y_i` with a 1-based index.
    pub fn y(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::y_pow(n, i, 1), Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut v: Vec<(Monomial, Rational)> = terms.into_iter().collect();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Monomial, Rational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Poly {
            terms: merged.into_iter().collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest monomial under [`compare_monomials`] with its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &Monomial> + '_ {
        self.terms.keys()
    }

    pub fn is_proper(&self) -> bool {
        self.terms.keys().all(Monomial::is_proper)
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Poly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32, n: usize) -> Poly {
        let mut acc = Poly::one(n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by the leading coefficient's inverse.
    pub fn make_monic(&mut self) {
        if let Some((_, c)) = self.leading() {
            let inv = c.recip();
            for v in self.terms.values_mut() {
                *v *= &inv;
            }
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, a) in &self.terms {
            for (k, b) in &rhs.terms {
                out.add_term(m.mul(k), a * b);
            }
        }
        out
    }
}

fn fmt_rational(c: &Rational) -> String {
    c.to_string()
}

/// Canonical rendering: descending monomial order, coefficients as `p/q`,
/// e.g. `-1 x1^2 y2 + 3/2 y1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let shown = if idx == 0 {
                fmt_rational(c)
            } else if c.is_negative() {
                f.write_str(" - ")?;
                fmt_rational(&-c)
            } else {
                f.write_str(" + ")?;
                fmt_rational(c)
            };
            f.write_str(&shown)?;
            if m.exps.iter().any(|&e| e != 0) {
                write!(f, " {m}")?;
            }
        }
        Ok(())
    }
}
