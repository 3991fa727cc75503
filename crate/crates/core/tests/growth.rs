use oscgk::growth::{
    binomial, dk_factors, estimate_degree, free_module_phi, product_span_rank, sweep_all,
    DegreeEstimate,
};
use oscgk::{catalog, filtration_sweep, Family, HwModuleSpec, RepConfig};
use oscgk::{ExecMode, SweepOptions, Verdict};

fn cfg(n: usize, n1: usize, n2: usize) -> RepConfig {
    RepConfig::new(n, n1, n2).unwrap()
}

fn with_mode(mode: ExecMode) -> SweepOptions {
    SweepOptions {
        mode,
        ..SweepOptions::default()
    }
}

#[test]
fn phi_is_nondecreasing_and_starts_at_one() {
    for c in [cfg(3, 1, 2), cfg(3, 1, 1), cfg(3, 2, 3), cfg(4, 2, 2)] {
        for spec in catalog(&c, 1).unwrap() {
            let r = filtration_sweep(&spec, &SweepOptions::default()).unwrap();
            assert_eq!(r.phi[0], 1, "{spec}");
            assert!(
                r.phi.windows(2).all(|w| w[0] <= w[1]),
                "{spec}: {:?}",
                r.phi
            );
            assert_eq!(r.phi.len(), r.max_k + 1);
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let specs: Vec<HwModuleSpec> = [cfg(3, 1, 2), cfg(4, 1, 3), cfg(4, 2, 2)]
        .iter()
        .flat_map(|c| catalog(c, 1).unwrap())
        .collect();
    let seq = sweep_all(&specs, &with_mode(ExecMode::Sequential));
    let par = sweep_all(&specs, &with_mode(ExecMode::Parallel));
    for (a, b) in seq.into_iter().zip(par) {
        let (a, b) = (a.unwrap(), b.unwrap());
        assert_eq!(a.phi, b.phi);
        assert_eq!(a.degree_estimate, b.degree_estimate);
    }
    let factors = dk_factors(&cfg(4, 2, 2));
    for k in 0..=5 {
        assert_eq!(
            product_span_rank(&factors, k, 4, ExecMode::Sequential).unwrap(),
            product_span_rank(&factors, k, 4, ExecMode::Parallel).unwrap()
        );
    }
}

#[test]
fn case_one_example() {
    // x1^2 for (4,1,3) generates a module of GK dimension 2n - 3 = 5.
    let spec = HwModuleSpec::new(Family::C1a, cfg(4, 1, 3), 2, 0).unwrap();
    let r = filtration_sweep(&spec, &SweepOptions::default()).unwrap();
    assert_eq!(r.formula_value, 5);
    assert_eq!(r.verdict, Verdict::Match);
    assert_eq!(r.degree_estimate, DegreeEstimate::Degree(5));
}

#[test]
fn finite_dimensional_case_stabilises() {
    let c = cfg(3, 3, 3);
    let deep = SweepOptions {
        max_k: Some(10),
        ..SweepOptions::default()
    };
    for spec in catalog(&c, 2).unwrap() {
        let r = filtration_sweep(&spec, &deep).unwrap();
        assert_eq!(r.degree_estimate, DegreeEstimate::Degree(0), "{spec}");
        assert!(r.complete);
    }
    // Symmetric powers: the module for m = (2, 0) is S^2 of the standard one.
    let spec = catalog(&c, 2)
        .unwrap()
        .into_iter()
        .find(|s| s.m1 == 2 && s.m2 == 0)
        .unwrap();
    let r = filtration_sweep(&spec, &deep).unwrap();
    assert_eq!(*r.phi.last().unwrap(), 6);
}

#[test]
fn free_module_matches_binomials() {
    let phi = free_module_phi(3, 7, ExecMode::Sequential).unwrap();
    assert_eq!(phi, (0..=7).map(|k| binomial(k + 3, 3)).collect::<Vec<_>>());
    assert_eq!(estimate_degree(&phi, 3).unwrap(), DegreeEstimate::Degree(3));
    assert!(free_module_phi(0, 3, ExecMode::Sequential).is_err());
}

#[test]
fn zero_budget_is_inconclusive() {
    let spec = HwModuleSpec::new(Family::C1a, cfg(4, 1, 3), 2, 0).unwrap();
    let mut opts = SweepOptions::default();
    opts.budget.max_rows = 10;
    let r = filtration_sweep(&spec, &opts).unwrap();
    assert!(!r.complete);
    assert_eq!(r.verdict, Verdict::Inconclusive);
    assert!(r.stop_reason.is_some());
}
