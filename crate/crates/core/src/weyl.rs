//! Normal-ordered differential operators with polynomial coefficients in
//! `x1..xn, y1..yn`.
//!
//! A term `c * x^a * d^b` acts by first applying the partial derivatives `d^b`
//! and then multiplying by `x^a`. Keeping every operator in this form makes
//! equality of operators a comparison of term maps.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::poly::{rat, Exps, Monomial, Poly, Rational};

pub(crate) type OpExps = SmallVec<[u32; 12]>;

/// A polynomial-ring generator, 1-based like `x_1..x_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X(usize),
    Y(usize),
}

impl Var {
    fn flat(self, n: usize) -> usize {
        match self {
            Var::X(i) => {
                assert!((1..=n).contains(&i), "x{i} out of range for n={n}");
                i - 1
            }
            Var::Y(i) => {
                assert!((1..=n).contains(&i), "y{i} out of range for n={n}");
                n + i - 1
            }
        }
    }
}

/// Borrowed view of one normal-ordered term.
#[derive(Debug, Clone, Copy)]
pub struct WeylTerm<'a> {
    pub coeff: &'a Rational,
    pub mult: &'a [u32],
    pub diff: &'a [u32],
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylOp {
    n: usize,
    terms: BTreeMap<(OpExps, OpExps), Rational>,
}

fn falling(e: i64, d: u32) -> i64 {
    (0..d as i64).map(|t| e - t).product()
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k as i64).fold(1, |acc, t| acc * (n as i64 - t) / (t + 1))
}

impl WeylOp {
    pub fn zero(n: usize) -> Self {
        WeylOp {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut op = Self::zero(n);
        op.add_term(
            SmallVec::from_elem(0, 2 * n),
            SmallVec::from_elem(0, 2 * n),
            c,
        );
        op
    }

    pub fn identity(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    /// Multiplication by a generator.
    pub fn mul_by(n: usize, v: Var) -> Self {
        let mut mult: OpExps = SmallVec::from_elem(0, 2 * n);
        mult[v.flat(n)] = 1;
        let mut op = Self::zero(n);
        op.add_term(mult, SmallVec::from_elem(0, 2 * n), Rational::one());
        op
    }

    /// Partial derivative with respect to a generator.
    pub fn partial(n: usize, v: Var) -> Self {
        let mut diff: OpExps = SmallVec::from_elem(0, 2 * n);
        diff[v.flat(n)] = 1;
        let mut op = Self::zero(n);
        op.add_term(SmallVec::from_elem(0, 2 * n), diff, Rational::one());
        op
    }

    /// A single term `c * prod(mults) * prod(partials)`.
    pub fn term(n: usize, c: Rational, mults: &[Var], partials: &[Var]) -> Self {
        let mut mult: OpExps = SmallVec::from_elem(0, 2 * n);
        let mut diff: OpExps = SmallVec::from_elem(0, 2 * n);
        for v in mults {
            mult[v.flat(n)] += 1;
        }
        for v in partials {
            diff[v.flat(n)] += 1;
        }
        let mut op = Self::zero(n);
        op.add_term(mult, diff, c);
        op
    }

    pub fn n(&self) -> usize {
        self.n
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

    pub fn terms(&self) -> impl Iterator<Item = WeylTerm<'_>> + '_ {
        self.terms.iter().map(|((mult, diff), coeff)| WeylTerm {
            coeff,
            mult: mult.as_slice(),
            diff: diff.as_slice(),
        })
    }

    fn add_term(&mut self, mult: OpExps, diff: OpExps, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (mult, diff);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> WeylOp {
        let mut out = WeylOp::zero(self.n);
        for (k, v) in &self.terms {
            out.add_term(k.0.clone(), k.1.clone(), v * c);
        }
        out
    }

    /// Every term multiplies and differentiates the same variables equally,
    /// so the operator scales each monomial.
    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(|(m, d)| m == d)
    }

    /// Largest `|mult| - |diff|` over terms; bounds the degree increase of [`apply`](Self::apply).
    pub fn degree_shift(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|(m, d)| {
                m.iter().map(|&e| e as i64).sum::<i64>() - d.iter().map(|&e| e as i64).sum::<i64>()
            })
            .max()
    }

    /// Scalar by which a diagonal operator acts on `m`.
    pub fn diagonal_eigenvalue(&self, m: &Monomial) -> Option<Rational> {
        if !self.is_diagonal() {
            return None;
        }
        let mut acc = Rational::zero();
        for ((_, diff), c) in &self.terms {
            let f: i64 = m
                .exps()
                .iter()
                .zip(diff)
                .map(|(&e, &d)| falling(e as i64, d))
                .product();
            if f != 0 {
                acc += c * rat(f);
            }
        }
        Some(acc)
    }

    /// Accumulate `self(c * m)` into `out`.
    pub fn apply_monomial_into(&self, m: &Monomial, c: &Rational, out: &mut Poly) {
        let mut buf = Vec::new();
        self.apply_monomial_collect(m, c, &mut buf);
        for (m, c) in buf {
            out.add_term(m, c);
        }
    }

    fn apply_monomial_collect(
        &self,
        m: &Monomial,
        c: &Rational,
        out: &mut Vec<(Monomial, Rational)>,
    ) {
        debug_assert_eq!(m.n(), self.n);
        'terms: for ((mult, diff), k) in &self.terms {
            let mut factor: i64 = 1;
            let mut exps: Exps = SmallVec::with_capacity(2 * self.n);
            for ((&e, &d), &a) in m.exps().iter().zip(diff).zip(mult) {
                if d > 0 {
                    let f = falling(e as i64, d);
                    if f == 0 {
                        continue 'terms;
                    }
                    factor *= f;
                }
                exps.push(e - d as i32 + a as i32);
            }
            out.push((Monomial::from_exps(exps), c * &(k * rat(factor))));
        }
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        let mut buf = Vec::with_capacity(p.len() * self.terms.len());
        for (m, c) in p.terms() {
            self.apply_monomial_collect(m, c, &mut buf);
        }
        Poly::from_terms(buf)
    }

    /// Normal-ordered product `self ∘ other`, moving each derivative of
    /// `self` across the multiplications of `other` with the Leibniz rule.
    pub fn compose(&self, other: &WeylOp) -> WeylOp {
        assert_eq!(self.n, other.n);
        let nv = 2 * self.n;
        let mut out = WeylOp::zero(self.n);
        for ((alpha, beta), ca) in &self.terms {
            for ((gamma, delta), cb) in &other.terms {
                let base = ca * cb;
                // Enumerate kappa with 0 <= kappa_v <= min(beta_v, gamma_v).
                let bounds: Vec<u32> = (0..nv).map(|v| beta[v].min(gamma[v])).collect();
                let mut kappa = vec![0u32; nv];
                loop {
                    let mut coeff: i64 = 1;
                    for v in 0..nv {
                        if kappa[v] > 0 {
                            coeff *=
                                binomial(beta[v], kappa[v]) * falling(gamma[v] as i64, kappa[v]);
                        }
                    }
                    let mult: OpExps = (0..nv).map(|v| alpha[v] + gamma[v] - kappa[v]).collect();
                    let diff: OpExps = (0..nv).map(|v| beta[v] - kappa[v] + delta[v]).collect();
                    out.add_term(mult, diff, &base * rat(coeff));

                    let mut v = 0;
                    while v < nv {
                        if kappa[v] < bounds[v] {
                            kappa[v] += 1;
                            break;
                        }
                        kappa[v] = 0;
                        v += 1;
                    }
                    if v == nv {
                        break;
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &WeylOp) -> WeylOp {
        &self.compose(other) - &other.compose(self)
    }

    fn var_name(&self, v: usize) -> String {
        if v < self.n {
            format!("x{}", v + 1)
        } else {
            format!("y{}", v - self.n + 1)
        }
    }
}

pub fn commutator(a: &WeylOp, b: &WeylOp) -> WeylOp {
    a.commutator(b)
}

impl Add for &WeylOp {
    type Output = WeylOp;
    fn add(self, rhs: &WeylOp) -> WeylOp {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.0.clone(), k.1.clone(), v.clone());
        }
        out
    }
}

impl Sub for &WeylOp {
    type Output = WeylOp;
    fn sub(self, rhs: &WeylOp) -> WeylOp {
        self + &(-rhs)
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        self.scale(&-Rational::one())
    }
}

impl Mul for &WeylOp {
    type Output = WeylOp;
    fn mul(self, rhs: &WeylOp) -> WeylOp {
        self.compose(rhs)
    }
}

/// Renders like `-x1*x2 + y1*y2` or `d/dx1 d/dx2`.
impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, ((mult, diff), c)) in self.terms.iter().rev().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            for (v, &e) in mult.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.var_name(v)),
                    _ => factors.push(format!("{}^{}", self.var_name(v), e)),
                }
            }
            let mut body = factors.join("*");
            let partials: Vec<String> = diff
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("d/d{}", self.var_name(v))
                    } else {
                        format!("d^{e}/d{}^{e}", self.var_name(v))
                    }
                })
                .collect();
            if !partials.is_empty() {
                if !body.is_empty() {
                    body.push(' ');
                }
                body.push_str(&partials.join(" "));
            }

            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let mag_str = mag.to_string();
            if body.is_empty() {
                f.write_str(&mag_str)?;
            } else if mag.is_one() {
                f.write_str(&body)?;
            } else {
                write!(f, "{mag_str}*{body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn x(n: usize, i: usize) -> WeylOp {
        WeylOp::mul_by(n, Var::X(i))
    }
    fn dx(n: usize, i: usize) -> WeylOp {
        WeylOp::partial(n, Var::X(i))
    }

    #[test]
    fn apply_examples() {
        let p = Poly::monomial(Monomial::x_pow(1, 1, 3), rat(1));
        assert_eq!(
            dx(1, 1).apply(&p),
            Poly::monomial(Monomial::x_pow(1, 1, 2), rat(3))
        );

        let e21 = &WeylOp::term(2, rat(-1), &[Var::X(1), Var::X(2)], &[])
            + &WeylOp::term(2, rat(1), &[Var::Y(1), Var::Y(2)], &[]);
        let expected =
            &(&Poly::x(2, 1) * &Poly::x(2, 2)).scale(&rat(-1)) + &(&Poly::y(2, 1) * &Poly::y(2, 2));
        assert_eq!(e21.apply(&Poly::one(2)), expected);

        let euler = &x(1, 1) * &dx(1, 1);
        let laurent = Poly::monomial(Monomial::x_pow(1, 1, -2), rat(1));
        assert_eq!(euler.apply(&laurent), laurent.scale(&rat(-2)));
    }

    #[test]
    fn compose_examples() {
        let n = 1;
        let lhs = dx(n, 1).compose(&x(n, 1));
        let expected = &WeylOp::term(n, rat(1), &[Var::X(1)], &[Var::X(1)]) + &WeylOp::identity(n);
        assert_eq!(lhs, expected);

        let normal = x(n, 1).compose(&dx(n, 1));
        assert_eq!(normal, WeylOp::term(n, rat(1), &[Var::X(1)], &[Var::X(1)]));

        let d2 = WeylOp::term(n, rat(1), &[], &[Var::X(1), Var::X(1)]);
        let m2 = WeylOp::term(n, rat(1), &[Var::X(1), Var::X(1)], &[]);
        let got = d2.compose(&m2);
        let want = &(&WeylOp::term(n, rat(1), &[Var::X(1), Var::X(1)], &[Var::X(1), Var::X(1)])
            + &WeylOp::term(n, rat(4), &[Var::X(1)], &[Var::X(1)]))
            + &WeylOp::constant(n, rat(2));
        assert_eq!(got, want);
        // Pointwise cross-check on x^k for k <= 4.
        for k in 0..=4 {
            let p = Poly::monomial(Monomial::x_pow(1, 1, k), rat(1));
            assert_eq!(got.apply(&p), d2.apply(&m2.apply(&p)));
        }
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(dx(1, 1).commutator(&x(1, 1)), WeylOp::identity(1));
        let a = &x(2, 1) * &dx(2, 1);
        let b = &x(2, 2) * &dx(2, 2);
        assert!(a.commutator(&b).is_zero());
    }

    #[test]
    fn diagonal_detection() {
        let a = &(&x(2, 1) * &dx(2, 1)) + &WeylOp::constant(2, rat(-1));
        assert!(a.is_diagonal());
        let m = Monomial::x_pow(2, 1, 3);
        assert_eq!(a.diagonal_eigenvalue(&m), Some(rat(2)));
        assert!(!x(2, 1).is_diagonal());
        assert_eq!(x(2, 1).diagonal_eigenvalue(&m), None);
    }

    #[test]
    fn rendering() {
        let e21 = &WeylOp::term(2, rat(-1), &[Var::X(1), Var::X(2)], &[])
            + &WeylOp::term(2, rat(1), &[Var::Y(1), Var::Y(2)], &[]);
        assert_eq!(e21.to_string(), "-x1*x2 + y1*y2");
        let dd = WeylOp::term(2, rat(1), &[], &[Var::X(1), Var::X(2)]);
        assert_eq!(dd.to_string(), "d/dx1 d/dx2");
        let e11 = &(&WeylOp::term(2, rat(-1), &[Var::X(1)], &[Var::X(1)])
            - &WeylOp::term(2, rat(1), &[Var::Y(1)], &[Var::Y(1)]))
            - &WeylOp::identity(2);
        assert_eq!(e11.to_string(), "-x1 d/dx1 - y1 d/dy1 - 1");
        assert_eq!(WeylOp::zero(2).to_string(), "0");
    }
}
