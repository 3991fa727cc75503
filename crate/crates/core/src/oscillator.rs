//! The non-canonical oscillator representation of `gl(n)` on
//! `F[x1..xn, y1..yn]`, the deformed Laplacian and its dual, and checks of the
//! homomorphism and module properties.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{grading, is_graded_homogeneous, rat, Monomial, Poly, Rational, RepConfig};
use crate::weyl::{Var, WeylOp};

/// Coordinates of a weight in the fundamental-weight basis `λ1..λ_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    pub coeffs: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coeffs: vec![0; rank],
        }
    }

    /// Build from `(index, coefficient)` pairs, 1-based, summing repeated
    /// indices and dropping indices that fall outside `1..=rank` (the
    /// nonexistent `λ0` and `λn`).
    pub fn from_terms(rank: usize, terms: &[(i64, i64)]) -> Self {
        let mut w = Self::zero(rank);
        for &(idx, c) in terms {
            if idx >= 1 && (idx as usize) <= rank {
                w.coeffs[idx as usize - 1] += c;
            }
        }
        w
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `E^x_{i,j}` on the x-variables, 1-based indices.
pub(crate) fn e_x(i: usize, j: usize, n: usize, n1: usize) -> WeylOp {
    let lo = |k: usize| k <= n1;
    match (lo(i), lo(j)) {
        (true, true) => {
            let mut op = WeylOp::term(n, rat(-1), &[Var::X(j)], &[Var::X(i)]);
            if i == j {
                op = &op - &WeylOp::identity(n);
            }
            op
        }
        (true, false) => WeylOp::term(n, rat(1), &[], &[Var::X(i), Var::X(j)]),
        (false, true) => WeylOp::term(n, rat(-1), &[Var::X(i), Var::X(j)], &[]),
        (false, false) => WeylOp::term(n, rat(1), &[Var::X(i)], &[Var::X(j)]),
    }
}

/// `E^y_{i,j}` on the y-variables, 1-based indices.
fn e_y(i: usize, j: usize, n: usize, n2: usize) -> WeylOp {
    let lo = |k: usize| k <= n2;
    match (lo(i), lo(j)) {
        (true, true) => WeylOp::term(n, rat(1), &[Var::Y(i)], &[Var::Y(j)]),
        (true, false) => WeylOp::term(n, rat(-1), &[Var::Y(i), Var::Y(j)], &[]),
        (false, true) => WeylOp::term(n, rat(1), &[], &[Var::Y(i), Var::Y(j)]),
        (false, false) => {
            let mut op = WeylOp::term(n, rat(-1), &[Var::Y(j)], &[Var::Y(i)]);
            if i == j {
                op = &op - &WeylOp::identity(n);
            }
            op
        }
    }
}

/// The operator representing the matrix unit `E_{i,j}` (1-based).
pub fn e_op(i: usize, j: usize, cfg: &RepConfig) -> Result<WeylOp> {
    let n = cfg.n();
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::IndexOutOfRange { i, j, n });
    }
    Ok(&e_x(i, j, n, cfg.n1()) - &e_y(j, i, n, cfg.n2()))
}

/// All `n^2` operators, row-major: entry `(i-1)*n + (j-1)` is `E_{i,j}`.
pub fn all_e_ops(cfg: &RepConfig) -> Vec<WeylOp> {
    let n = cfg.n();
    (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| e_op(i, j, cfg).expect("indices in range"))
        .collect()
}

/// The deformed Laplacian.
pub fn laplacian(cfg: &RepConfig) -> WeylOp {
    let n = cfg.n();
    let mut op = WeylOp::zero(n);
    for i in 1..=cfg.n1() {
        op = &op + &WeylOp::term(n, rat(-1), &[Var::X(i)], &[Var::Y(i)]);
    }
    for r in cfg.n1() + 1..=cfg.n2() {
        op = &op + &WeylOp::term(n, rat(1), &[], &[Var::X(r), Var::Y(r)]);
    }
    for s in cfg.n2() + 1..=n {
        op = &op + &WeylOp::term(n, rat(-1), &[Var::Y(s)], &[Var::X(s)]);
    }
    op
}

/// The dual of the Laplacian, raising the bidegree by `<1,1>`.
pub fn eta(cfg: &RepConfig) -> WeylOp {
    let n = cfg.n();
    let mut op = WeylOp::zero(n);
    for i in 1..=cfg.n1() {
        op = &op + &WeylOp::term(n, rat(1), &[Var::Y(i)], &[Var::X(i)]);
    }
    for r in cfg.n1() + 1..=cfg.n2() {
        op = &op + &WeylOp::term(n, rat(1), &[Var::X(r), Var::Y(r)], &[]);
    }
    for s in cfg.n2() + 1..=n {
        op = &op + &WeylOp::term(n, rat(1), &[Var::X(s)], &[Var::Y(s)]);
    }
    op
}

#[derive(Debug, Clone)]
pub struct RootVector {
    pub i: usize,
    pub j: usize,
    pub op: WeylOp,
}

#[derive(Debug, Clone)]
pub struct RootVectorSet {
    /// `E_{i,j}` for `i < j`.
    pub positive: Vec<RootVector>,
    /// `E_{j,i}` for `i < j`, stored with `(i, j)` = row and column of the matrix unit.
    pub negative: Vec<RootVector>,
    /// `h_k = E_{k,k} - E_{k+1,k+1}` for `k = 1..n-1`.
    pub cartan: Vec<WeylOp>,
}

impl RootVectorSet {
    /// Assemble from any family of matrix-unit operators (row-major, `n^2` entries).
    pub fn from_family(n: usize, ops: &[WeylOp]) -> Self {
        let at = |i: usize, j: usize| ops[(i - 1) * n + (j - 1)].clone();
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                positive.push(RootVector { i, j, op: at(i, j) });
                negative.push(RootVector {
                    i: j,
                    j: i,
                    op: at(j, i),
                });
            }
        }
        let cartan = (1..n).map(|k| &at(k, k) - &at(k + 1, k + 1)).collect();
        RootVectorSet {
            positive,
            negative,
            cartan,
        }
    }

    pub fn negative_ops(&self) -> Vec<WeylOp> {
        self.negative.iter().map(|r| r.op.clone()).collect()
    }
}

pub fn root_vectors(cfg: &RepConfig) -> RootVectorSet {
    RootVectorSet::from_family(cfg.n(), &all_e_ops(cfg))
}

fn integer_of(q: &Rational) -> Option<i64> {
    q.to_i64()
}

/// Weight of a single monomial under diagonal Cartan operators.
pub fn monomial_weight(cartan: &[WeylOp], m: &Monomial) -> Result<Weight> {
    let mut coeffs = Vec::with_capacity(cartan.len());
    for h in cartan {
        let ev = h
            .diagonal_eigenvalue(m)
            .ok_or_else(|| Error::NotWeightVector("Cartan operator is not diagonal".into()))?;
        coeffs.push(
            integer_of(&ev)
                .ok_or_else(|| Error::NotWeightVector(format!("non-integral eigenvalue {ev}")))?,
        );
    }
    Ok(Weight { coeffs })
}

/// Weight of `p` under the given Cartan operators; every term must share it.
pub fn weight_under(cartan: &[WeylOp], p: &Poly) -> Result<Weight> {
    let mut monos = p.monomials();
    let first = monos
        .next()
        .ok_or_else(|| Error::NotWeightVector("zero polynomial".into()))?;
    let w = monomial_weight(cartan, first)?;
    for m in monos {
        let other = monomial_weight(cartan, m)?;
        if other != w {
            return Err(Error::NotWeightVector(format!(
                "terms {first} and {m} have weights {w} and {other}"
            )));
        }
    }
    Ok(w)
}

pub fn weight_of(p: &Poly, cfg: &RepConfig) -> Result<Weight> {
    weight_under(&root_vectors(cfg).cartan, p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketReport {
    pub config: RepConfig,
    pub checked_pairs: usize,
    pub violations: Vec<BracketViolation>,
}

impl BracketReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj` over a row-major operator family.
pub fn verify_brackets_for(n: usize, ops: &[WeylOp]) -> (usize, Vec<BracketViolation>) {
    assert_eq!(ops.len(), n * n);
    let at = |i: usize, j: usize| &ops[(i - 1) * n + (j - 1)];
    let zero = WeylOp::zero(ops.first().map_or(n, WeylOp::n));
    let mut checked = 0;
    let mut violations = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let lhs = at(i, j).commutator(at(k, l));
                    let mut rhs = zero.clone();
                    if j == k {
                        rhs = &rhs + at(i, l);
                    }
                    if l == i {
                        rhs = &rhs - at(k, j);
                    }
                    checked += 1;
                    if lhs != rhs {
                        violations.push(BracketViolation {
                            i,
                            j,
                            k,
                            l,
                            lhs: lhs.to_string(),
                            rhs: rhs.to_string(),
                        });
                    }
                }
            }
        }
    }
    (checked, violations)
}

pub fn verify_brackets(cfg: &RepConfig) -> BracketReport {
    let (checked_pairs, violations) = verify_brackets_for(cfg.n(), &all_e_ops(cfg));
    BracketReport {
        config: *cfg,
        checked_pairs,
        violations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceViolation {
    pub sample: String,
    pub i: usize,
    pub j: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub config: RepConfig,
    pub samples: usize,
    pub harmonic_samples: usize,
    pub checked: usize,
    pub violations: Vec<InvarianceViolation>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every `E_{i,j}` preserves the bidegree of each sample, and on harmonic
/// samples `D(E f) = E(D f)`, so harmonic vectors stay harmonic.
pub fn verify_module_invariance(cfg: &RepConfig, samples: &[Poly]) -> Result<InvarianceReport> {
    let n = cfg.n();
    let ops = all_e_ops(cfg);
    let lap = laplacian(cfg);
    let mut report = InvarianceReport {
        config: *cfg,
        samples: samples.len(),
        harmonic_samples: 0,
        checked: 0,
        violations: Vec::new(),
    };
    for f in samples {
        let g = is_graded_homogeneous(f, cfg)?.ok_or_else(|| {
            Error::InvalidArgument(format!("sample {f} is not graded-homogeneous"))
        })?;
        let df = lap.apply(f);
        let harmonic = df.is_zero();
        if harmonic {
            report.harmonic_samples += 1;
        }
        for i in 1..=n {
            for j in 1..=n {
                let op = &ops[(i - 1) * n + (j - 1)];
                let ef = op.apply(f);
                report.checked += 1;
                for m in ef.monomials() {
                    if grading(m, cfg)? != g {
                        report.violations.push(InvarianceViolation {
                            sample: f.to_string(),
                            i,
                            j,
                            reason: format!("term {m} leaves bidegree {g}"),
                        });
                        break;
                    }
                }
                if harmonic && lap.apply(&ef) != op.apply(&df) {
                    report.violations.push(InvarianceViolation {
                        sample: f.to_string(),
                        i,
                        j,
                        reason: "image is not harmonic".into(),
                    });
                }
            }
        }
    }
    Ok(report)
}
