//! Catalogue of the highest-weight modules `H<l1,l2>` (cases 1-7) and the
//! Howe modules `A<k>`, with validation of each highest-weight vector.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::growth::gk_formula;
use crate::oscillator::{
    all_e_ops, e_x, eta, laplacian, root_vectors, weight_under, RootVectorSet, Weight,
};
use crate::poly::{grading, is_graded_homogeneous, rat, GradedPair, Monomial, Poly, RepConfig};
use crate::weyl::WeylOp;

/// Which of the seven structural cases (or the Howe family) a module falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    #[serde(rename = "HOWE")]
    Howe,
}

impl CaseId {
    /// Case determined by the position of `n1 <= n2` relative to `n`.
    pub fn of(cfg: &RepConfig) -> CaseId {
        let (n, n1, n2) = (cfg.n(), cfg.n1(), cfg.n2());
        if n1 == n2 {
            if n1 == n {
                CaseId::C7
            } else if n1 == n - 1 {
                CaseId::C6
            } else {
                CaseId::C5
            }
        } else if n1 + 1 == n2 {
            if n2 == n {
                CaseId::C4
            } else {
                CaseId::C3
            }
        } else if n2 == n {
            CaseId::C2
        } else {
            CaseId::C1
        }
    }
}

/// One parametrised family of highest-weight vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `H<-m1,-m2>`, `x_{n1}^m1 y_{n2+1}^m2`.
    C1a,
    /// `H<m1,-m2>`, `x_{n1+1}^m1 y_{n2+1}^m2`.
    C1b,
    /// `H<-m1,m2>`, `x_{n1}^m1 y_{n2}^m2`.
    C1c,
    /// `H<m1,m2>`, `x_{n1+1}^m1 y_n^m2`.
    C2a,
    /// `H<-m1,m2>`, `x_{n1}^m1 y_n^m2`.
    C2b,
    /// `H<-m1,-m2>`, `x_{n1}^m1 y_{n1+2}^m2`.
    C3a,
    /// `H<m1,-m2>`, `x_{n1+1}^m1 y_{n1+2}^m2`.
    C3b,
    /// `H<-m1,m2>`, `x_{n1}^m1 y_{n1+1}^m2`.
    C3c,
    /// `H<-m1,m2>`, `x_{n-1}^m1 y_n^m2`.
    C4a,
    /// The single-parameter line with vector `x_{n-1}^m` (parameter in `m1`).
    C4b,
    /// `H<m1,m2>`, `eta^{m1+m2}(x_{n-1}^m2 y_n^-m1)`.
    C4c,
    /// `H<-m1,-m2>`, `x_{n1}^m1 y_{n1+1}^m2`.
    C5a,
    /// `H<m1+1,-m2-m1-1>`, `y_{n1+1}^m2 zeta2^{m1+1}`.
    C5b,
    /// `H<-m1-m2-1,m2+1>`, `x_{n1}^m1 zeta1^{m2+1}`.
    C5c,
    /// `H<-m1,-m2>`, `x_{n1}^m1 y_{n1+1}^m2`.
    C6a,
    /// `H<-m1-m2-1,m2+1>`, `x_{n1}^m1 zeta1^{m2+1}`.
    C6b,
    /// `H<-m1-m2,m2>`, `x_n^m1 zeta1^m2`, finite-dimensional.
    C7,
    /// `A<-m1>`, `x_{n1}^m1`, `m1 >= 1`.
    HoweMinus,
    /// `A<m2>`, `x_{n1+1}^m2`.
    HowePlus,
}

impl Family {
    pub fn case(self) -> CaseId {
        use Family::*;
        match self {
            C1a | C1b | C1c => CaseId::C1,
            C2a | C2b => CaseId::C2,
            C3a | C3b | C3c => CaseId::C3,
            C4a | C4b | C4c => CaseId::C4,
            C5a | C5b | C5c => CaseId::C5,
            C6a | C6b => CaseId::C6,
            C7 => CaseId::C7,
            HoweMinus | HowePlus => CaseId::Howe,
        }
    }

    pub fn label(self) -> &'static str {
        use Family::*;
        match self {
            C1a => "C1a",
            C1b => "C1b",
            C1c => "C1c",
            C2a => "C2a",
            C2b => "C2b",
            C3a => "C3a",
            C3b => "C3b",
            C3c => "C3c",
            C4a => "C4a",
            C4b => "C4b",
            C4c => "C4c",
            C5a => "C5a",
            C5b => "C5b",
            C5c => "C5c",
            C6a => "C6a",
            C6b => "C6b",
            C7 => "C7",
            HoweMinus => "HOWE-",
            HowePlus => "HOWE+",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Self::all()
            .into_iter()
            .find(|f| f.label().eq_ignore_ascii_case(s))
    }

    pub fn all() -> Vec<Family> {
        use Family::*;
        vec![
            C1a, C1b, C1c, C2a, C2b, C3a, C3b, C3c, C4a, C4b, C4c, C5a, C5b, C5c, C6a, C6b, C7,
            HoweMinus, HowePlus,
        ]
    }

    /// The single-parameter families use only `m1`.
    pub fn single_parameter(self) -> bool {
        matches!(self, Family::C4b | Family::HoweMinus | Family::HowePlus)
    }

    /// Families whose vectors live in the x-only algebra `F[x1..xn]`.
    pub fn is_howe(self) -> bool {
        self.case() == CaseId::Howe
    }

    /// Families attached to `cfg`. Howe families depend only on `n1` and are
    /// attached to the representative configuration `n2 = n`.
    pub fn for_config(cfg: &RepConfig) -> Vec<Family> {
        use Family::*;
        let mut fams = match CaseId::of(cfg) {
            CaseId::C1 => vec![C1a, C1b, C1c],
            CaseId::C2 => vec![C2a, C2b],
            CaseId::C3 => vec![C3a, C3b, C3c],
            CaseId::C4 => vec![C4a, C4b, C4c],
            CaseId::C5 => {
                let mut v = vec![C5a];
                if cfg.n1() + 2 <= cfg.n() {
                    v.push(C5b);
                }
                if cfg.n1() >= 2 {
                    v.push(C5c);
                }
                v
            }
            CaseId::C6 => {
                let mut v = vec![C6a];
                if cfg.n() >= 3 {
                    v.push(C6b);
                }
                v
            }
            CaseId::C7 => vec![C7],
            CaseId::Howe => unreachable!(),
        };
        if cfg.n1() < cfg.n() && cfg.n2() == cfg.n() {
            fams.push(HoweMinus);
            fams.push(HowePlus);
        }
        fams
    }

    /// Parameter constraint under which the module is irreducible and
    /// infinite-dimensional (or, for case 7, finite-dimensional).
    pub fn admits(self, cfg: &RepConfig, m1: i64, m2: i64) -> bool {
        use Family::*;
        let (n, n1, n2) = (cfg.n() as i64, cfg.n1() as i64, cfg.n2() as i64);
        if m1 < 0 || m2 < 0 {
            return false;
        }
        match self {
            C1a => m1 + m2 >= n2 - n1 - 1,
            C1b => m2 - m1 >= n2 - n1 - 1,
            C1c => m1 - m2 >= n2 - n1 - 1,
            C2a => true,
            C2b => m1 <= n - n1 - 2 || m2 - m1 <= n1 - n + 1,
            C3a => true,
            C3b => m2 >= m1,
            C3c => m1 >= m2,
            C4a => m2 <= m1,
            C4b => m2 == 0,
            C4c => m1 >= 1 && m2 >= 1,
            C5a | C5b | C6a | C7 => true,
            C5c => n1 >= 2,
            C6b => n >= 3,
            HoweMinus => m1 >= 1 && m2 == 0,
            HowePlus => m2 == 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `x_{n1-1} y_{n1} - x_{n1} y_{n1-1}`.
pub fn zeta1(cfg: &RepConfig) -> Result<Poly> {
    let (n, n1) = (cfg.n(), cfg.n1());
    if n1 < 2 {
        return Err(Error::IndexUnavailable("zeta1 needs n1 >= 2"));
    }
    Ok(&(&Poly::x(n, n1 - 1) * &Poly::y(n, n1)) - &(&Poly::x(n, n1) * &Poly::y(n, n1 - 1)))
}

/// `x_{n1+1} y_{n1+2} - x_{n1+2} y_{n1+1}`.
pub fn zeta2(cfg: &RepConfig) -> Result<Poly> {
    let (n, n1) = (cfg.n(), cfg.n1());
    if n1 + 2 > n {
        return Err(Error::IndexUnavailable("zeta2 needs n1 + 2 <= n"));
    }
    Ok(&(&Poly::x(n, n1 + 1) * &Poly::y(n, n1 + 2)) - &(&Poly::x(n, n1 + 2) * &Poly::y(n, n1 + 1)))
}

fn xy(n: usize, xi: usize, a: i64, yi: usize, b: i64) -> Poly {
    let m = Monomial::x_pow(n, xi, a as i32).mul(&Monomial::y_pow(n, yi, b as i32));
    Poly::monomial(m, rat(1))
}

fn delta(a: i64, b: i64) -> i64 {
    (a == b) as i64
}

/// The `eta`-power construction of the case-4 vector, passing through Laurent
/// polynomials. Fails if negative powers of `y_n` survive.
pub fn case4_eta_vector(cfg: &RepConfig, m1: i64, m2: i64) -> Result<Poly> {
    let n = cfg.n();
    let mut v = xy(n, n - 1, m2, n, -m1);
    let op = eta(cfg);
    for _ in 0..(m1 + m2) {
        v = op.apply(&v);
    }
    if !v.is_proper() || v.is_zero() {
        return Err(Error::LaurentResidue(v.to_string()));
    }
    Ok(v)
}

fn highest_weight_vector(family: Family, cfg: &RepConfig, m1: i64, m2: i64) -> Result<Poly> {
    use Family::*;
    let (n, n1, n2) = (cfg.n(), cfg.n1(), cfg.n2());
    let m1u = m1 as u32;
    let m2u = m2 as u32;
    let x = |i: usize, e: i64| xy(n, i, e, 1, 0);
    Ok(match family {
        C1a => xy(n, n1, m1, n2 + 1, m2),
        C1b => xy(n, n1 + 1, m1, n2 + 1, m2),
        C1c => xy(n, n1, m1, n2, m2),
        C2a => xy(n, n1 + 1, m1, n, m2),
        C2b => xy(n, n1, m1, n, m2),
        C3a => xy(n, n1, m1, n1 + 2, m2),
        C3b => xy(n, n1 + 1, m1, n1 + 2, m2),
        C3c => xy(n, n1, m1, n1 + 1, m2),
        C4a => xy(n, n - 1, m1, n, m2),
        C4b => x(n - 1, m1),
        C4c => case4_eta_vector(cfg, m1, m2)?,
        C5a | C6a => xy(n, n1, m1, n1 + 1, m2),
        C5b => &xy(n, 1, 0, n1 + 1, m2) * &zeta2(cfg)?.pow(m1u + 1, n),
        C5c | C6b => &x(n1, m1) * &zeta1(cfg)?.pow(m2u + 1, n),
        C7 => &x(n, m1) * &zeta1(cfg)?.pow(m2u, n),
        HoweMinus => x(n1, m1),
        HowePlus => x(n1 + 1, m1),
    })
}

fn expected_grading(family: Family, m1: i64, m2: i64) -> GradedPair {
    use Family::*;
    let (l1, l2) = match family {
        C1a | C3a | C5a | C6a => (-m1, -m2),
        C1b | C3b => (m1, -m2),
        C1c | C2b | C3c | C4a => (-m1, m2),
        C2a | C4c => (m1, m2),
        C4b => (-m1, 0),
        C5b => (m1 + 1, -m2 - m1 - 1),
        C5c | C6b => (-m1 - m2 - 1, m2 + 1),
        C7 => (-m1 - m2, m2),
        HoweMinus => (-m1, 0),
        HowePlus => (m1, 0),
    };
    GradedPair::new(l1, l2)
}

/// Highest weight in fundamental-weight coordinates. `(index, coeff)` pairs
/// with indices outside `1..n-1` are dropped by [`Weight::from_terms`].
pub fn expected_weight(family: Family, cfg: &RepConfig, m1: i64, m2: i64) -> Weight {
    use Family::*;
    let (n, n1, n2) = (cfg.n() as i64, cfg.n1() as i64, cfg.n2() as i64);
    let terms: Vec<(i64, i64)> = match family {
        C1a => vec![
            (n1 - 1, m1),
            (n1, -(m1 + 1)),
            (n2, -(m2 + 1)),
            (n2 + 1, m2 * (1 - delta(n2, n - 1))),
        ],
        C1b => vec![
            (n1, -(m1 + 1)),
            (n1 + 1, m1),
            (n2, -(m2 + 1)),
            (n2 + 1, m2 * (1 - delta(n2, n - 1))),
        ],
        C1c => vec![(n1 - 1, m1), (n1, -(m1 + 1)), (n2 - 1, m2), (n2, -(m2 + 1))],
        C2a => vec![(n1, -(m1 + 1)), (n1 + 1, m1), (n - 1, m2)],
        C2b => vec![(n1 - 1, m1), (n1, -(m1 + 1)), (n - 1, m2)],
        C3a => vec![
            (n1 - 1, m1),
            (n1, -(m1 + 1)),
            (n1 + 1, -(m2 + 1)),
            (n1 + 2, m2 * (1 - delta(n1, n - 2))),
        ],
        C3b => vec![
            (n1, -(m1 + 1)),
            (n1 + 1, m1 - m2 - 1),
            (n1 + 2, m2 * (1 - delta(n1, n - 2))),
        ],
        C3c => vec![(n1 - 1, m1), (n1, m2 - m1 - 1), (n1 + 1, -(m2 + 1))],
        C4a => vec![(n - 2, m1), (n - 1, m2 - m1 - 1)],
        C4b => vec![(n - 2, m1), (n - 1, -(m1 + 1))],
        C4c => vec![(n - 2, m2), (n - 1, -(m1 + m2 + 1))],
        C5a => vec![
            (n1 - 1, m1 * (1 - delta(1, n1))),
            (n1, -(m1 + m2 + 2)),
            (n1 + 1, m2),
        ],
        C5b => vec![
            (n1, -(m1 + m2 + 3)),
            (n1 + 1, m2),
            (n1 + 2, (m1 + 1) * (1 - delta(n1, n - 2))),
        ],
        C5c => vec![(n1 - 2, m2 + 1), (n1 - 1, m1), (n1, -(m1 + m2 + 3))],
        C6a => vec![(n - 2, m1 * (1 - delta(n, 2))), (n - 1, -(m1 + m2 + 2))],
        C6b => vec![
            (n - 3, (m2 + 1) * (1 - delta(n, 3))),
            (n - 2, m1),
            (n - 1, -(m1 + m2 + 3)),
        ],
        C7 => vec![(n - 2, m2 * (1 - delta(n, 2))), (n - 1, m1)],
        HoweMinus => vec![(n1 - 1, m1), (n1, -(m1 + 1))],
        HowePlus => vec![(n1, -(m1 + 1)), (n1 + 1, m1 * (1 - delta(n1, n - 1)))],
    };
    let _ = n2;
    Weight::from_terms(cfg.n() - 1, &terms)
}

/// One catalogued module with everything needed to validate and sweep it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HwModuleSpec {
    pub family: Family,
    pub cfg: RepConfig,
    pub m1: i64,
    pub m2: i64,
    pub hwv: Poly,
    pub expected_grading: GradedPair,
    pub expected_weight: Weight,
    pub expected_gk: usize,
}

impl HwModuleSpec {
    pub fn new(family: Family, cfg: RepConfig, m1: i64, m2: i64) -> Result<Self> {
        if !Family::for_config(&cfg).contains(&family) {
            return Err(Error::InvalidArgument(format!(
                "family {family} does not apply to {cfg}"
            )));
        }
        if !family.admits(&cfg, m1, m2) {
            return Err(Error::InvalidArgument(format!(
                "parameters m1={m1}, m2={m2} outside the range of family {family}"
            )));
        }
        let hwv = highest_weight_vector(family, &cfg, m1, m2)?;
        let expected_gk = match family.case() {
            CaseId::C7 => 0,
            CaseId::Howe => cfg.n() - 1,
            _ => gk_formula(&cfg)?,
        };
        Ok(HwModuleSpec {
            family,
            cfg,
            m1,
            m2,
            hwv,
            expected_grading: expected_grading(family, m1, m2),
            expected_weight: expected_weight(family, &cfg, m1, m2),
            expected_gk,
        })
    }

    pub fn case(&self) -> CaseId {
        self.family.case()
    }

    /// The operator family the module is a representation under.
    pub fn operators(&self) -> Vec<WeylOp> {
        if self.family.is_howe() {
            howe_rep(&self.cfg).expect("howe family only attached when n1 < n")
        } else {
            all_e_ops(&self.cfg)
        }
    }

    pub fn root_vectors(&self) -> RootVectorSet {
        if self.family.is_howe() {
            RootVectorSet::from_family(self.cfg.n(), &self.operators())
        } else {
            root_vectors(&self.cfg)
        }
    }

    pub fn to_record(&self) -> CatalogRecord {
        CatalogRecord {
            case: self.family.label().to_string(),
            n: self.cfg.n(),
            n1: self.cfg.n1(),
            n2: self.cfg.n2(),
            m1: self.m1,
            m2: self.m2,
            l1: self.expected_grading.l1,
            l2: self.expected_grading.l2,
            hwv: self.hwv.to_string(),
            weight: self.expected_weight.coeffs.clone(),
            gk_expected: self.expected_gk,
        }
    }
}

impl fmt::Display for HwModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} m=({},{}) {}",
            self.family, self.cfg, self.m1, self.m2, self.expected_grading
        )
    }
}

/// Catalogue export row; field order is the JSON-lines column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub case: String,
    pub n: usize,
    pub n1: usize,
    pub n2: usize,
    pub m1: i64,
    pub m2: i64,
    pub l1: i64,
    pub l2: i64,
    pub hwv: String,
    pub weight: Vec<i64>,
    pub gk_expected: usize,
}

/// All catalogued modules for `cfg` with parameters in `0..=param_bound`,
/// ordered by family, then `m1`, then `m2`.
pub fn catalog(cfg: &RepConfig, param_bound: i64) -> Result<Vec<HwModuleSpec>> {
    if param_bound < 0 {
        return Err(Error::InvalidArgument("param_bound must be >= 0".into()));
    }
    let mut out = Vec::new();
    for family in Family::for_config(cfg) {
        for m1 in 0..=param_bound {
            let m2_range = if family.single_parameter() {
                0..=0
            } else {
                0..=param_bound
            };
            for m2 in m2_range {
                if family.admits(cfg, m1, m2) {
                    out.push(HwModuleSpec::new(family, *cfg, m1, m2)?);
                }
            }
        }
    }
    Ok(out)
}

pub fn catalog_jsonl(specs: &[HwModuleSpec]) -> String {
    let mut s = String::new();
    for spec in specs {
        s.push_str(&serde_json::to_string(&spec.to_record()).expect("serializable"));
        s.push('\n');
    }
    s
}

/// The x-only oscillator representation on `F[x1..xn]`, row-major `E_{i,j}`.
pub fn howe_rep(cfg: &RepConfig) -> Result<Vec<WeylOp>> {
    let (n, n1) = (cfg.n(), cfg.n1());
    if n1 >= n {
        return Err(Error::InvalidArgument(
            "Howe representation needs n1 < n".into(),
        ));
    }
    Ok((1..=n)
        .flat_map(|i| (1..=n).map(move |j| e_x(i, j, n, n1)))
        .collect())
}

/// Grading of the Howe modules: `sum_{r>n1} a_r - sum_{i<=n1} a_i`.
pub fn howe_grading(p: &Poly, cfg: &RepConfig) -> Result<Option<i64>> {
    if p.monomials().any(|m| m.yexp().iter().any(|&e| e != 0)) {
        return Ok(None);
    }
    Ok(is_graded_homogeneous(p, cfg)?.map(|g| g.l1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HwValidationReport {
    pub annihilated_by_positive: bool,
    pub harmonic: bool,
    pub harmonic_checked: bool,
    pub grading_ok: bool,
    pub weight_ok: bool,
    pub details: Vec<String>,
}

impl HwValidationReport {
    pub fn passed(&self) -> bool {
        self.annihilated_by_positive && self.harmonic && self.grading_ok && self.weight_ok
    }
}

pub fn validate_hwv(spec: &HwModuleSpec) -> HwValidationReport {
    validate_vector(spec, &spec.hwv)
}

/// Run the four highest-weight checks of `spec` against an arbitrary vector,
/// used for negative controls.
pub fn validate_vector(spec: &HwModuleSpec, v: &Poly) -> HwValidationReport {
    let mut details = Vec::new();
    let rv = spec.root_vectors();

    let mut annihilated = !v.is_zero();
    if v.is_zero() {
        details.push("vector is zero".into());
    }
    for r in &rv.positive {
        let img = r.op.apply(v);
        if !img.is_zero() {
            annihilated = false;
            details.push(format!("E_{},{} v = {}", r.i, r.j, img));
        }
    }

    let harmonic_checked = !spec.family.is_howe();
    let mut harmonic = true;
    if harmonic_checked {
        let dv = laplacian(&spec.cfg).apply(v);
        if !dv.is_zero() {
            harmonic = false;
            details.push(format!("D v = {dv}"));
        }
    }

    let mut grading_ok = v.is_proper();
    if !grading_ok {
        details.push("vector has negative exponents".into());
    }
    for m in v.monomials() {
        match grading(m, &spec.cfg) {
            Ok(g) if g == spec.expected_grading => {}
            Ok(g) => {
                grading_ok = false;
                details.push(format!(
                    "term {m} has bidegree {g}, expected {}",
                    spec.expected_grading
                ));
                break;
            }
            Err(e) => {
                grading_ok = false;
                details.push(e.to_string());
                break;
            }
        }
    }

    let weight_ok = match weight_under(&rv.cartan, v) {
        Ok(w) if w == spec.expected_weight => true,
        Ok(w) => {
            details.push(format!("weight {w}, expected {}", spec.expected_weight));
            false
        }
        Err(e) => {
            details.push(e.to_string());
            false
        }
    };

    HwValidationReport {
        annihilated_by_positive: annihilated,
        harmonic,
        harmonic_checked,
        grading_ok,
        weight_ok,
        details,
    }
}

/// Whether the module appears in the list of completely pointed modules.
/// Howe modules fall outside that list and report `false`.
pub fn pointed_expected(spec: &HwModuleSpec) -> bool {
    use Family::*;
    let (n, n1, n2) = (spec.cfg.n(), spec.cfg.n1(), spec.cfg.n2());
    let (m1, m2) = (spec.m1, spec.m2);
    // (1) n1 + 1 < n2 = n: x_{n1+1}^m1 or x_{n1}^m1 (either range of m1).
    if n1 + 1 < n2 && n2 == n && matches!(spec.family, C2a | C2b) && m2 == 0 {
        return true;
    }
    // (2) n1 + 1 = n2 = n.
    if n1 + 1 == n2 && n2 == n {
        match spec.family {
            C4a if n == 2 => return true,
            C4a if m2 == 0 => return true,
            C4b => return true,
            _ => {}
        }
    }
    // (3) n1 = n2 = 1: x_1^m1, or zeta2^{m1+1} when n = 3.
    if n1 == 1 && n2 == 1 {
        match spec.family {
            C5a | C6a if m2 == 0 => return true,
            C5b if m2 == 0 && n == 3 => return true,
            _ => {}
        }
    }
    // (4) n1 = n2 = n - 1: y_n^m2, or zeta1^{m2+1} when n = 3.
    if n1 == n2 && n1 + 1 == n {
        match spec.family {
            C6a if m1 == 0 => return true,
            C6b if m1 == 0 && n == 3 => return true,
            _ => {}
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, n1: usize, n2: usize) -> RepConfig {
        RepConfig::new(n, n1, n2).unwrap()
    }

    #[test]
    fn zeta_examples() {
        let c = cfg(3, 2, 2);
        let want = &(&Poly::x(3, 1) * &Poly::y(3, 2)) - &(&Poly::x(3, 2) * &Poly::y(3, 1));
        assert_eq!(zeta1(&c).unwrap(), want);
        let c = cfg(3, 1, 1);
        let want = &(&Poly::x(3, 2) * &Poly::y(3, 3)) - &(&Poly::x(3, 3) * &Poly::y(3, 2));
        assert_eq!(zeta2(&c).unwrap(), want);
        assert!(matches!(
            zeta1(&cfg(2, 1, 1)),
            Err(Error::IndexUnavailable(_))
        ));
        assert!(matches!(
            zeta2(&cfg(3, 2, 2)),
            Err(Error::IndexUnavailable(_))
        ));
    }

    #[test]
    fn zetas_are_harmonic() {
        for n in 2..=6 {
            for c in RepConfig::all_for(n)
                .into_iter()
                .filter(|c| c.n1() == c.n2())
            {
                let d = laplacian(&c);
                if let Ok(z) = zeta1(&c) {
                    assert!(d.apply(&z).is_zero(), "zeta1 {c}");
                }
                if let Ok(z) = zeta2(&c) {
                    assert!(d.apply(&z).is_zero(), "zeta2 {c}");
                }
            }
        }
    }

    #[test]
    fn catalog_case_one_example() {
        let c = cfg(4, 1, 3);
        let specs = catalog(&c, 2).unwrap();
        let s = specs
            .iter()
            .find(|s| s.family == Family::C1a && s.m1 == 2 && s.m2 == 0)
            .unwrap();
        assert_eq!(s.hwv, xy(4, 1, 2, 1, 0));
        assert_eq!(s.expected_grading, GradedPair::new(-2, 0));
        assert_eq!(
            s.expected_weight,
            Weight {
                coeffs: vec![-3, 0, -1]
            }
        );
        assert!(validate_hwv(s).passed());
    }

    #[test]
    fn case4_laurent_example() {
        let c = cfg(2, 1, 2);
        let s = HwModuleSpec::new(Family::C4c, c, 1, 1).unwrap();
        // eta^2(x1 y2^-1) = 2 x2 y1 + x1 x2^2 y2
        let want = Poly::from_terms([
            (Monomial::new(&[0, 1], &[1, 0]), rat(2)),
            (Monomial::new(&[1, 2], &[0, 1]), rat(1)),
        ]);
        assert_eq!(s.hwv, want);
        assert!(s.hwv.is_proper());
        assert_eq!(s.expected_weight, Weight { coeffs: vec![-3] });
        let r = validate_hwv(&s);
        assert!(r.passed(), "{:?}", r.details);
    }

    #[test]
    fn case4_laurent_construction_is_proper() {
        for n in 2..=4 {
            let c = cfg(n, n - 1, n);
            for m1 in 1..=4 {
                for m2 in 1..=4 {
                    let v = case4_eta_vector(&c, m1, m2).unwrap();
                    assert!(v.is_proper());
                }
            }
        }
    }

    #[test]
    fn zeta_family_weights() {
        let s = HwModuleSpec::new(Family::C5b, cfg(5, 1, 1), 0, 0).unwrap();
        assert_eq!(
            weight_under(&s.root_vectors().cartan, &s.hwv)
                .unwrap()
                .coeffs,
            vec![-3, 0, 1, 0]
        );
        assert_eq!(s.expected_weight.coeffs, vec![-3, 0, 1, 0]);
        let s = HwModuleSpec::new(Family::C5c, cfg(5, 3, 3), 2, 0).unwrap();
        assert_eq!(s.expected_weight.coeffs, vec![1, 2, -5, 0]);
        let s = HwModuleSpec::new(Family::C6b, cfg(6, 5, 5), 3, 1).unwrap();
        assert_eq!(s.expected_weight.coeffs, vec![0, 0, 2, 3, -7]);
        assert!(validate_hwv(&s).passed());
    }

    #[test]
    fn case7_only_for_full_config() {
        let c = cfg(3, 3, 3);
        let specs = catalog(&c, 2).unwrap();
        assert!(!specs.is_empty());
        assert!(specs
            .iter()
            .all(|s| s.family == Family::C7 && s.expected_gk == 0));
        for s in &specs {
            assert!(validate_hwv(s).passed(), "{s}");
        }
    }

    #[test]
    fn validation_examples() {
        let c = cfg(4, 1, 4);
        let s = HwModuleSpec::new(Family::C2a, c, 1, 1).unwrap();
        assert_eq!(s.hwv, xy(4, 2, 1, 4, 1));
        let r = validate_hwv(&s);
        assert!(r.passed(), "{:?}", r.details);
        assert_eq!(
            s.expected_weight,
            Weight {
                coeffs: vec![-2, 1, 1]
            }
        );

        let c = cfg(3, 1, 1);
        let s = HwModuleSpec::new(Family::C5b, c, 0, 0).unwrap();
        assert_eq!(s.hwv, zeta2(&c).unwrap());
        let r = validate_hwv(&s);
        assert!(r.passed(), "{:?}", r.details);

        let bad = &Poly::x(3, 2) * &Poly::x(3, 3);
        let r = validate_vector(&s, &bad);
        assert!(!r.annihilated_by_positive);
        assert!(!r.passed());
    }

    #[test]
    fn howe_operators() {
        let c = cfg(2, 1, 2);
        let ops = howe_rep(&c).unwrap();
        let want = WeylOp::term(
            2,
            rat(-1),
            &[crate::weyl::Var::X(1), crate::weyl::Var::X(2)],
            &[],
        );
        assert_eq!(ops[2], want);
        for n in 2..=5 {
            for n1 in 1..n {
                let c = cfg(n, n1, n);
                let (_, v) = crate::oscillator::verify_brackets_for(n, &howe_rep(&c).unwrap());
                assert!(v.is_empty(), "howe brackets n={n} n1={n1}");
            }
        }
        assert!(howe_rep(&cfg(3, 3, 3)).is_err());
    }

    #[test]
    fn howe_weights_and_grading() {
        let c = cfg(4, 2, 4);
        let s = HwModuleSpec::new(Family::HoweMinus, c, 2, 0).unwrap();
        assert_eq!(
            s.expected_weight,
            Weight {
                coeffs: vec![2, -3, 0]
            }
        );
        assert_eq!(howe_grading(&s.hwv, &c).unwrap(), Some(-2));
        assert!(validate_hwv(&s).passed());
        assert!(!validate_hwv(&s).harmonic_checked);
    }

    #[test]
    fn pointed_examples() {
        let s = HwModuleSpec::new(Family::C2a, cfg(4, 2, 4), 3, 0).unwrap();
        assert_eq!(s.hwv, xy(4, 3, 3, 1, 0));
        assert!(pointed_expected(&s));
        let s = HwModuleSpec::new(Family::C5a, cfg(3, 1, 1), 2, 0).unwrap();
        assert_eq!(
            s.expected_weight,
            Weight {
                coeffs: vec![-4, 0]
            }
        );
        assert!(pointed_expected(&s));
        let s = HwModuleSpec::new(Family::C5a, cfg(3, 1, 1), 1, 1).unwrap();
        assert!(!pointed_expected(&s));
    }

    #[test]
    fn catalog_is_deterministic_and_respects_constraints() {
        for n in 2..=5 {
            for c in RepConfig::all_for(n) {
                let a = catalog(&c, 3).unwrap();
                let b = catalog(&c, 3).unwrap();
                assert_eq!(a, b);
                for s in &a {
                    assert!(s.family.admits(&c, s.m1, s.m2));
                    assert!(s.hwv.is_proper());
                }
            }
        }
        assert!(catalog(&cfg(3, 1, 2), -1).is_err());
        assert!(HwModuleSpec::new(Family::C1a, cfg(3, 1, 1), 0, 0).is_err());
    }

    #[test]
    fn jsonl_field_order() {
        let specs = catalog(&cfg(2, 1, 1), 0).unwrap();
        let line = catalog_jsonl(&specs);
        let first = line.lines().next().unwrap();
        let keys = [
            "case",
            "n",
            "n1",
            "n2",
            "m1",
            "m2",
            "l1",
            "l2",
            "hwv",
            "weight",
            "gk_expected",
        ];
        let mut pos = 0;
        for k in keys {
            let at = first[pos..].find(&format!("\"{k}\":")).expect(k) + pos;
            pos = at;
        }
    }
}
