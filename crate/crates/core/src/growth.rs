//! Filtration growth `phi(k) = dim U_k(g_-) v`, degree fitting by finite
//! differences, the closed-form GK dimension and the counting oracles.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::catalog::{pointed_expected, validate_hwv, HwModuleSpec};
use crate::error::{Error, Result};
use crate::oscillator::{monomial_weight, Weight};
use crate::parallel::{map_slice, map_slice_mut, ExecMode};
use crate::poly::{GradedPair, Monomial, Poly, Rational, RepConfig};
use crate::span::EchelonBasis;
use crate::weyl::{Var, WeylOp};

pub const DEFAULT_WINDOW: usize = 3;

/// Wall-clock and basis-size limits for one sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Budget {
    pub max_seconds: f64,
    pub max_rows: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_seconds: 300.0,
            max_rows: 500_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    /// Depth `K`; `None` means `gk_formula + 4`.
    pub max_k: Option<usize>,
    pub window: usize,
    pub budget: Budget,
    pub mode: ExecMode,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_k: None,
            window: DEFAULT_WINDOW,
            budget: Budget::default(),
            mode: ExecMode::default(),
        }
    }
}

/// How polynomials are split into independent blocks. Blocks must have
/// pairwise disjoint monomial supports, so that ranks add up.
#[derive(Clone, Copy)]
pub enum BlockKey<'a> {
    /// Weight under the given Cartan operators (taken from the leading term).
    Weight(&'a [WeylOp]),
    /// Exponent vector `a_i + b_i` of `x_i` and `y_i` together.
    PairedDegree,
    Single,
}

impl BlockKey<'_> {
    fn key(&self, p: &Poly) -> Result<Vec<i64>> {
        let Some((m, _)) = p.leading() else {
            return Ok(Vec::new());
        };
        Ok(match self {
            BlockKey::Weight(cartan) => monomial_weight(cartan, m)?.coeffs,
            BlockKey::PairedDegree => paired_degree(m),
            BlockKey::Single => Vec::new(),
        })
    }
}

fn paired_degree(m: &Monomial) -> Vec<i64> {
    m.xexp()
        .iter()
        .zip(m.yexp())
        .map(|(&a, &b)| (a + b) as i64)
        .collect()
}

/// Independent echelon bases, one per block key.
#[derive(Debug, Default)]
struct BlockedSpan {
    blocks: FxHashMap<Vec<i64>, EchelonBasis>,
    rank: usize,
}

struct BatchOutcome {
    added: Vec<(Vec<i64>, Vec<Poly>)>,
    timed_out: bool,
}

impl BlockedSpan {
    /// Insert grouped polynomials, each group into its own block. Groups run
    /// in parallel under [`ExecMode::Parallel`]; the result is identical.
    fn insert_groups(
        &mut self,
        groups: BTreeMap<Vec<i64>, Vec<Poly>>,
        mode: ExecMode,
        deadline: Instant,
    ) -> BatchOutcome {
        let mut work: Vec<(Vec<i64>, EchelonBasis, Vec<Poly>)> = groups
            .into_iter()
            .map(|(k, ps)| {
                let b = self.blocks.remove(&k).unwrap_or_default();
                (k, b, ps)
            })
            .collect();
        let results = map_slice_mut(mode, &mut work, |(_, basis, polys)| {
            let before = basis.rank();
            for (idx, p) in std::mem::take(polys).into_iter().enumerate() {
                if idx % 16 == 0 && Instant::now() > deadline {
                    return (basis.rows_since(before).to_vec(), true);
                }
                basis.insert(p);
            }
            (basis.rows_since(before).to_vec(), false)
        });
        let mut added = Vec::with_capacity(work.len());
        let mut timed_out = false;
        for ((key, basis, _), (rows, to)) in work.into_iter().zip(results) {
            timed_out |= to;
            self.rank += rows.len();
            added.push((key.clone(), rows));
            self.blocks.insert(key, basis);
        }
        BatchOutcome { added, timed_out }
    }

    fn max_block(&self) -> Option<(&Vec<i64>, usize)> {
        self.blocks
            .iter()
            .map(|(k, b)| (k, b.rank()))
            .max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(a.0)))
    }
}

/// A polynomial tagged with its block key.
type Keyed = (Vec<i64>, Poly);

/// Raw result of a breadth-first closure.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepData {
    /// `phi[k]` for every completed layer `k`.
    pub phi: Vec<usize>,
    /// False when the budget stopped the sweep before `max_k`.
    pub complete: bool,
    pub stop_reason: Option<String>,
    /// First layer at which some block holds two or more rows, with that
    /// block's key and size.
    pub first_multiplicity: Option<(Vec<i64>, usize, usize)>,
    /// Block sizes after the last completed layer.
    pub block_ranks: BTreeMap<Vec<i64>, usize>,
    pub elapsed: Duration,
}

/// `M_0 = span{seed}`, `M_k = M_{k-1} + sum_g g(new rows of M_{k-1})`.
pub fn sweep(
    generators: &[WeylOp],
    seed: &Poly,
    key: BlockKey<'_>,
    max_k: usize,
    budget: Budget,
    mode: ExecMode,
) -> Result<SweepData> {
    let start = Instant::now();
    let deadline = start + Duration::from_secs_f64(budget.max_seconds.max(0.0));
    let mut span = BlockedSpan::default();
    let mut phi = Vec::with_capacity(max_k + 1);
    let mut first_multiplicity = None;
    let mut stop_reason = None;

    let mut groups = BTreeMap::new();
    if !seed.is_zero() {
        groups.insert(key.key(seed)?, vec![seed.clone()]);
    }
    let mut frontier = span.insert_groups(groups, mode, deadline).added;
    phi.push(span.rank);

    for k in 1..=max_k {
        if frontier.iter().all(|(_, rows)| rows.is_empty()) {
            // Closed under the generators: the sequence is constant from here.
            for _ in k..=max_k {
                phi.push(span.rank);
            }
            break;
        }
        let flat: Vec<&Poly> = frontier.iter().flat_map(|(_, rows)| rows.iter()).collect();
        let images: Vec<Result<Vec<Keyed>>> = map_slice(mode, &flat, |f| {
            let mut out = Vec::with_capacity(generators.len());
            for g in generators {
                let img = g.apply(f);
                if !img.is_zero() {
                    out.push((key.key(&img)?, img));
                }
            }
            Ok(out)
        });
        let mut groups: BTreeMap<Vec<i64>, Vec<Poly>> = BTreeMap::new();
        for batch in images {
            for (kk, p) in batch? {
                groups.entry(kk).or_default().push(p);
            }
        }
        drop(flat);
        let outcome = span.insert_groups(groups, mode, deadline);
        if outcome.timed_out {
            stop_reason = Some(format!(
                "time budget of {}s exhausted in layer {k}",
                budget.max_seconds
            ));
            break;
        }
        frontier = outcome.added;
        phi.push(span.rank);
        if first_multiplicity.is_none() {
            if let Some((kk, c)) = span.max_block() {
                if c >= 2 {
                    first_multiplicity = Some((kk.clone(), c, k));
                }
            }
        }
        if span.rank > budget.max_rows && k < max_k {
            stop_reason = Some(format!(
                "row budget of {} exceeded after layer {k}",
                budget.max_rows
            ));
            break;
        }
        if Instant::now() > deadline && k < max_k {
            stop_reason = Some(format!(
                "time budget of {}s exhausted after layer {k}",
                budget.max_seconds
            ));
            break;
        }
    }
    if first_multiplicity.is_none() {
        if let Some((kk, c)) = span.max_block() {
            if c >= 2 {
                first_multiplicity = Some((kk.clone(), c, 0));
            }
        }
    }
    let block_ranks = span
        .blocks
        .iter()
        .map(|(k, b)| (k.clone(), b.rank()))
        .collect();
    Ok(SweepData {
        complete: stop_reason.is_none(),
        phi,
        stop_reason,
        first_multiplicity,
        block_ranks,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DegreeEstimate {
    Degree(usize),
    Inconclusive,
}

impl DegreeEstimate {
    pub fn degree(self) -> Option<usize> {
        match self {
            DegreeEstimate::Degree(d) => Some(d),
            DegreeEstimate::Inconclusive => None,
        }
    }
}

impl fmt::Display for DegreeEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeEstimate::Degree(d) => write!(f, "{d}"),
            DegreeEstimate::Inconclusive => f.write_str("Inconclusive"),
        }
    }
}

/// Rows `Δ^0 s, Δ^1 s, ...` down to a single entry.
pub fn difference_table(seq: &[usize]) -> Vec<Vec<i128>> {
    let mut table = Vec::new();
    let mut row: Vec<i128> = seq.iter().map(|&v| v as i128).collect();
    while !row.is_empty() {
        let next: Vec<i128> = row.windows(2).map(|w| w[1] - w[0]).collect();
        table.push(row);
        row = next;
    }
    table
}

/// Least `d` such that `Δ^{d+1}` vanishes on the last `window` entries while
/// `Δ^d` is positive there.
pub fn estimate_degree(phi: &[usize], window: usize) -> Result<DegreeEstimate> {
    if window < 2 {
        return Err(Error::InvalidArgument("window must be at least 2".into()));
    }
    if phi.len() < window {
        return Err(Error::SequenceTooShort {
            len: phi.len(),
            window,
        });
    }
    let table = difference_table(phi);
    for d in 0.. {
        if phi.len() < d + 1 + window {
            break;
        }
        let next = &table[d + 1];
        let cur = &table[d];
        let vanishes = next[next.len() - window..].iter().all(|&v| v == 0);
        if vanishes && *cur.last().expect("nonempty") > 0 {
            return Ok(DegreeEstimate::Degree(d));
        }
    }
    Ok(DegreeEstimate::Inconclusive)
}

/// `Δ^d phi / d!` at the tail, the leading coefficient of the fitted polynomial.
pub fn leading_coefficient(phi: &[usize], d: usize) -> Option<Rational> {
    let table = difference_table(phi);
    let last = *table.get(d)?.last()?;
    let fact: BigInt = (1..=d as u64).map(BigInt::from).product();
    Some(Rational::new(BigInt::from(last), fact))
}

/// Closed-form GK dimension of every `H<l1,l2>` for the configuration; the
/// branches are tried top to bottom.
pub fn gk_formula(cfg: &RepConfig) -> Result<usize> {
    let (n, n1, n2) = (cfg.n(), cfg.n1(), cfg.n2());
    if n1 == n2 && n2 == n {
        return Ok(0);
    }
    let v = if (1 < n1 && n1 < n2 && n2 + 1 < n) || (3 <= n1 && n1 == n2 && n1 + 3 <= n && n >= 7) {
        2 * n - 2
    } else if (n1 == 1 && n1 < n2 && n2 < n)
        || (n1 < n2 && n2 + 1 == n)
        || (n1 == 3 && n2 == 3 && n == 6)
    {
        2 * n - 3
    } else if (n1 == 2 && n2 == 2 && 2 + 1 < n) || (1 < n1 && n1 == n2 && n1 + 2 == n) {
        2 * n - 4
    } else if 1 < n1 && n1 == n2 && n1 + 1 < n {
        n
    } else {
        n - 1
    };
    Ok(v)
}

pub fn minimal_gk(cfg: &RepConfig) -> usize {
    cfg.n() - 1
}

pub fn is_minimal_case(cfg: &RepConfig) -> bool {
    let (n, n1, n2) = (cfg.n(), cfg.n1(), cfg.n2());
    (n1 < n2 && n2 == n) || (n1 == 1 && n2 == 1) || (n1 == n2 && n1 + 1 == n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Match,
    Mismatch,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "Match",
            Verdict::Mismatch => "Mismatch",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub case: String,
    pub cfg: RepConfig,
    pub m1: i64,
    pub m2: i64,
    pub grading: GradedPair,
    pub phi: Vec<usize>,
    pub diffs: Vec<Vec<i128>>,
    pub degree_estimate: DegreeEstimate,
    pub leading_coeff_estimate: Option<Rational>,
    pub formula_value: usize,
    pub verdict: Verdict,
    pub max_k: usize,
    pub complete: bool,
    pub stop_reason: Option<String>,
    pub elapsed: Duration,
}

/// JSON shape of a [`GrowthReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthRecord {
    pub case: String,
    pub n: usize,
    pub n1: usize,
    pub n2: usize,
    pub m1: i64,
    pub m2: i64,
    pub l1: i64,
    pub l2: i64,
    pub phi: Vec<usize>,
    pub degree_estimate: Option<usize>,
    pub formula: usize,
    pub verdict: Verdict,
    pub elapsed_ms: u64,
}

pub const CSV_HEADER: &str =
    "case,n,n1,n2,m1,m2,l1,l2,phi,degree_estimate,formula,verdict,elapsed_ms";

impl GrowthRecord {
    /// One CSV row; `phi` is `;`-separated and an inconclusive degree is empty.
    pub fn csv_row(&self) -> String {
        let phi: Vec<String> = self.phi.iter().map(usize::to_string).collect();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.case,
            self.n,
            self.n1,
            self.n2,
            self.m1,
            self.m2,
            self.l1,
            self.l2,
            phi.join(";"),
            self.degree_estimate
                .map(|d| d.to_string())
                .unwrap_or_default(),
            self.formula,
            self.verdict,
            self.elapsed_ms
        )
    }
}

impl GrowthReport {
    pub fn to_record(&self) -> GrowthRecord {
        GrowthRecord {
            case: self.case.clone(),
            n: self.cfg.n(),
            n1: self.cfg.n1(),
            n2: self.cfg.n2(),
            m1: self.m1,
            m2: self.m2,
            l1: self.grading.l1,
            l2: self.grading.l2,
            phi: self.phi.clone(),
            degree_estimate: self.degree_estimate.degree(),
            formula: self.formula_value,
            verdict: self.verdict,
            elapsed_ms: self.elapsed.as_millis() as u64,
        }
    }
}

fn ensure_valid(spec: &HwModuleSpec) -> Result<()> {
    let report = validate_hwv(spec);
    if report.passed() {
        Ok(())
    } else {
        Err(Error::InvalidHighestWeightVector(format!(
            "{spec}: {}",
            report.details.join("; ")
        )))
    }
}

fn depth_for(spec: &HwModuleSpec, opts: &SweepOptions) -> Result<usize> {
    let k = opts.max_k.unwrap_or(spec.expected_gk + 4);
    if k == 0 {
        return Err(Error::InvalidArgument("max_k must be >= 1".into()));
    }
    Ok(k)
}

fn report_from(
    spec: &HwModuleSpec,
    data: SweepData,
    max_k: usize,
    window: usize,
) -> Result<GrowthReport> {
    let degree_estimate = if data.phi.len() >= window {
        estimate_degree(&data.phi, window)?
    } else {
        DegreeEstimate::Inconclusive
    };
    let leading_coeff_estimate = degree_estimate
        .degree()
        .and_then(|d| leading_coefficient(&data.phi, d));
    let verdict = match (data.complete, degree_estimate) {
        (true, DegreeEstimate::Degree(d)) if d == spec.expected_gk => Verdict::Match,
        (true, DegreeEstimate::Degree(_)) => Verdict::Mismatch,
        _ => Verdict::Inconclusive,
    };
    Ok(GrowthReport {
        case: spec.family.label().to_string(),
        cfg: spec.cfg,
        m1: spec.m1,
        m2: spec.m2,
        grading: spec.expected_grading,
        diffs: difference_table(&data.phi),
        phi: data.phi,
        degree_estimate,
        leading_coeff_estimate,
        formula_value: spec.expected_gk,
        verdict,
        max_k,
        complete: data.complete,
        stop_reason: data.stop_reason,
        elapsed: data.elapsed,
    })
}

/// Sweep `U(g_-) v` for the catalogued vector and compare the fitted degree
/// with the expected GK dimension.
pub fn filtration_sweep(spec: &HwModuleSpec, opts: &SweepOptions) -> Result<GrowthReport> {
    ensure_valid(spec)?;
    let max_k = depth_for(spec, opts)?;
    let rv = spec.root_vectors();
    let data = sweep(
        &rv.negative_ops(),
        &spec.hwv,
        BlockKey::Weight(&rv.cartan),
        max_k,
        opts.budget,
        opts.mode,
    )?;
    report_from(spec, data, max_k, opts.window)
}

/// Same as [`filtration_sweep`] but closing under every `E_{i,j}`, not only
/// the negative root vectors.
pub fn filtration_sweep_full(spec: &HwModuleSpec, opts: &SweepOptions) -> Result<GrowthReport> {
    ensure_valid(spec)?;
    let max_k = depth_for(spec, opts)?;
    let rv = spec.root_vectors();
    let data = sweep(
        &spec.operators(),
        &spec.hwv,
        BlockKey::Weight(&rv.cartan),
        max_k,
        opts.budget,
        opts.mode,
    )?;
    report_from(spec, data, max_k, opts.window)
}

/// Sweep many specs; specs run in parallel under [`ExecMode::Parallel`].
pub fn sweep_all(specs: &[HwModuleSpec], opts: &SweepOptions) -> Vec<Result<GrowthReport>> {
    map_slice(opts.mode, specs, |s| filtration_sweep(s, opts))
}

/// `phi` for the free module `F[x1..xj]` generated by `1` under
/// multiplication by `x1..xj`.
pub fn free_module_phi(j: usize, max_k: usize, mode: ExecMode) -> Result<Vec<usize>> {
    if j == 0 {
        return Err(Error::InvalidArgument("need j >= 1".into()));
    }
    let gens: Vec<WeylOp> = (1..=j).map(|i| WeylOp::mul_by(j, Var::X(i))).collect();
    let data = sweep(
        &gens,
        &Poly::one(j),
        BlockKey::PairedDegree,
        max_k,
        Budget::default(),
        mode,
    )?;
    Ok(data.phi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleKind {
    #[serde(rename = "A_K")]
    AK,
    #[serde(rename = "D_K")]
    DK,
    #[serde(rename = "DPRIME_K")]
    DPrimeK,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub which: OracleKind,
    pub k: usize,
    #[serde(rename = "brute")]
    pub brute_value: usize,
    #[serde(rename = "closed")]
    pub closed_value: Option<usize>,
    pub agree: bool,
}

impl OracleReport {
    fn new(which: OracleKind, k: usize, brute_value: usize, closed_value: Option<usize>) -> Self {
        OracleReport {
            which,
            k,
            brute_value,
            closed_value,
            agree: closed_value == Some(brute_value),
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All multisets of size `k` from `0..m`, as nondecreasing index lists.
fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..m {
            cur.push(i);
            rec(m, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

fn require_split(cfg: &RepConfig) -> Result<()> {
    if cfg.n1() >= cfg.n() {
        return Err(Error::InvalidArgument("oracle needs 1 <= n1 < n".into()));
    }
    Ok(())
}

/// Distinct monomials `prod (x_i x_t)^{p_it}`, `i <= n1 < t`, `sum p = k`,
/// against `C(n1+k-1,k) C(n-n1+k-1,k)`.
pub fn oracle_a_k(cfg: &RepConfig, k: usize) -> Result<OracleReport> {
    require_split(cfg)?;
    let (n, n1) = (cfg.n(), cfg.n1());
    let pairs: Vec<Monomial> = (1..=n1)
        .flat_map(|i| {
            (n1 + 1..=n).map(move |t| Monomial::x_pow(n, i, 1).mul(&Monomial::x_pow(n, t, 1)))
        })
        .collect();
    let mut layer = std::collections::BTreeSet::from([Monomial::one(n)]);
    for _ in 0..k {
        layer = layer
            .iter()
            .flat_map(|m| pairs.iter().map(move |p| m.mul(p)))
            .collect();
    }
    let closed = binomial(n1 + k - 1, k) * binomial(n - n1 + k - 1, k);
    Ok(OracleReport::new(
        OracleKind::AK,
        k,
        layer.len(),
        Some(closed),
    ))
}

/// Rank of all products of `k` factors drawn (with repetition) from `factors`.
pub fn product_span_rank(factors: &[Poly], k: usize, n: usize, mode: ExecMode) -> Result<usize> {
    let mut groups: BTreeMap<Vec<i64>, Vec<Poly>> = BTreeMap::new();
    let combos = multisets(factors.len(), k);
    let products = map_slice(mode, &combos, |c| {
        c.iter().fold(Poly::one(n), |acc, &i| &acc * &factors[i])
    });
    let key = BlockKey::PairedDegree;
    for p in products {
        if !p.is_zero() {
            groups.entry(key.key(&p)?).or_default().push(p);
        }
    }
    let mut span = BlockedSpan::default();
    let far = Instant::now() + Duration::from_secs(365 * 24 * 3600);
    span.insert_groups(groups, mode, far);
    Ok(span.rank)
}

fn xx(n: usize, i: usize, t: usize) -> Poly {
    &Poly::x(n, i) * &Poly::x(n, t)
}

fn yy(n: usize, i: usize, t: usize) -> Poly {
    &Poly::y(n, i) * &Poly::y(n, t)
}

/// The factors `x_i x_t - y_i y_t`, `i <= n1 < t`.
pub fn dk_factors(cfg: &RepConfig) -> Vec<Poly> {
    let (n, n1) = (cfg.n(), cfg.n1());
    (1..=n1)
        .flat_map(|i| (n1 + 1..=n).map(move |t| &xx(n, i, t) - &yy(n, i, t)))
        .collect()
}

pub fn oracle_d_k(cfg: &RepConfig, k: usize) -> Result<OracleReport> {
    require_split(cfg)?;
    let brute = product_span_rank(&dk_factors(cfg), k, cfg.n(), ExecMode::default())?;
    let closed = (cfg.n1() == 1 || cfg.n1() + 1 == cfg.n()).then(|| binomial(cfg.n() - 2 + k, k));
    Ok(OracleReport::new(OracleKind::DK, k, brute, closed))
}

/// The three factor families `x_i x_s`, `y_s y_t`, `x_i x_t - y_i y_t` with
/// `i <= n1 < s <= n2 < t`.
pub fn dprime_factors(cfg: &RepConfig) -> Result<Vec<Poly>> {
    let (n, n1, n2) = (cfg.n(), cfg.n1(), cfg.n2());
    if !(2 < n1 + 1 && n1 < n2 && n2 + 1 < n) {
        return Err(Error::InvalidArgument(
            "oracle needs 2 < n1+1 <= n2 < n-1".into(),
        ));
    }
    let mut out = Vec::new();
    for i in 1..=n1 {
        for s in n1 + 1..=n2 {
            out.push(xx(n, i, s));
        }
    }
    for s in n1 + 1..=n2 {
        for t in n2 + 1..=n {
            out.push(yy(n, s, t));
        }
    }
    for i in 1..=n1 {
        for t in n2 + 1..=n {
            out.push(&xx(n, i, t) - &yy(n, i, t));
        }
    }
    Ok(out)
}

pub fn oracle_dprime_k(cfg: &RepConfig, k: usize) -> Result<OracleReport> {
    let factors = dprime_factors(cfg)?;
    let brute = product_span_rank(&factors, k, cfg.n(), ExecMode::default())?;
    Ok(OracleReport::new(OracleKind::DPrimeK, k, brute, None))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PointedVerdict {
    AllOne,
    MultiplicityAt {
        weight: Weight,
        depth: usize,
        count: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointedReport {
    pub case: String,
    pub depth: usize,
    pub verdict: PointedVerdict,
    pub expected_pointed: bool,
    pub agree: bool,
    pub complete: bool,
}

/// Sweep to depth `k` and look for a weight of multiplicity at least two.
pub fn pointed_check(spec: &HwModuleSpec, k: usize, opts: &SweepOptions) -> Result<PointedReport> {
    ensure_valid(spec)?;
    let rv = spec.root_vectors();
    let data = sweep(
        &rv.negative_ops(),
        &spec.hwv,
        BlockKey::Weight(&rv.cartan),
        k,
        opts.budget,
        opts.mode,
    )?;
    let verdict = match data.first_multiplicity {
        Some((w, count, depth)) => PointedVerdict::MultiplicityAt {
            weight: Weight { coeffs: w },
            depth,
            count,
        },
        None => PointedVerdict::AllOne,
    };
    let expected_pointed = pointed_expected(spec);
    let agree = (verdict == PointedVerdict::AllOne) == expected_pointed;
    Ok(PointedReport {
        case: spec.family.label().to_string(),
        depth: k,
        verdict,
        expected_pointed,
        agree,
        complete: data.complete,
    })
}
