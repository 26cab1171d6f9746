use normdyn_core::collaboration::{
    failure_report, norm_comparison_grid, preference_grid, refusal_regions, Axis, GridSpec,
};
use normdyn_core::priors::derive_contribution_stats;
use normdyn_core::{BetaPrior, Norm, WjMode};
use proptest::prelude::*;

fn stats(mu: f64) -> normdyn_core::ContributionStats {
    derive_contribution_stats(&BetaPrior::from_mean(mu, 7.0).unwrap(), WjMode::Exact).unwrap()
}

fn spec(mu_steps: usize, c_steps: usize) -> GridSpec {
    GridSpec {
        mu: Axis {
            min: 0.05,
            max: 0.95,
            steps: mu_steps,
        },
        c_hat: Axis {
            min: 0.0,
            max: 0.5,
            steps: c_steps,
        },
        shape_sum: 7.0,
        wj_mode: WjMode::Exact,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn success_and_refusal_partition_the_unit_interval(mu in 0.1..0.9f64, c_hat in 0.0..2.0f64) {
        let s = stats(mu);
        for norm in Norm::BOTH {
            let r = failure_report(norm, &s, c_hat).unwrap();
            let refused = r.junior_refuses.union(&r.senior_refuses);
            prop_assert!((refused.length() + r.success.length() - 1.0).abs() < 1e-12);
            let total = refused.mass(s.prior().unwrap()).unwrap() + r.success.mass(s.prior().unwrap()).unwrap();
            prop_assert!((total - 1.0).abs() < 1e-9);
            prop_assert!((r.public_good_loss - c_hat * r.failure_probability).abs() < 1e-15);
        }
    }

    #[test]
    fn failure_falls_as_surplus_grows(mu in 0.1..0.9f64, c_hat in 0.0..1.0f64, dc in 0.001..0.5f64) {
        let s = stats(mu);
        for norm in Norm::BOTH {
            let a = failure_report(norm, &s, c_hat).unwrap().failure_probability;
            let b = failure_report(norm, &s, c_hat + dc).unwrap().failure_probability;
            prop_assert!(b <= a + 1e-12, "{norm}: {a} -> {b}");
        }
    }

    #[test]
    fn inorm_success_is_one_interval_around_the_mean(mu in 0.1..0.9f64, c_hat in 0.001..2.0f64) {
        let s = stats(mu);
        let success = refusal_regions(Norm::I, &s, c_hat).unwrap().union().complement();
        prop_assert_eq!(success.intervals().len(), 1);
        prop_assert!(success.contains(s.mu_j()));
    }
}

#[test]
fn limits() {
    let s = stats(0.5);
    for norm in Norm::BOTH {
        let r = failure_report(norm, &s, 0.0).unwrap();
        assert_eq!(r.failure_probability, 1.0);
        assert_eq!(r.public_good_loss, 0.0);
    }
    let prior = BetaPrior::new(2.0, 2.0).unwrap();
    let s = derive_contribution_stats(&prior, WjMode::Exact).unwrap();
    assert_eq!(failure_report(Norm::I, &s, 10.0).unwrap().failure_probability, 0.0);
}

#[test]
fn comparison_grid_behaviour() {
    let cells = norm_comparison_grid(&spec(7, 5)).unwrap();
    assert_eq!(cells.len(), 35);
    for cell in &cells {
        let v = cell.value.expect("no degenerate cells");
        assert!((v.loss_diff() - cell.c_hat * v.fail_diff()).abs() < 1e-12);
        if cell.c_hat == 0.0 {
            assert_eq!(v.fail_diff(), 0.0);
            assert_eq!(v.loss_diff(), 0.0);
        }
    }
}

#[test]
fn preference_grid_behaviour() {
    let cells = preference_grid(&spec(9, 6)).unwrap();
    let mut opposite = 0;
    for cell in &cells {
        let v = cell.value.expect("no degenerate cells");
        if cell.c_hat == 0.0 {
            assert!(v.junior_pref.abs() < 1e-9 && v.senior_pref.abs() < 1e-9);
        }
        if (cell.mu_j - 0.5).abs() < 1e-12 {
            assert!((v.junior_pref - v.senior_pref).abs() < 1e-9, "{cell:?}");
        }
        if v.junior_pref * v.senior_pref < 0.0 {
            opposite += 1;
        }
    }
    assert!(opposite > 0);
}
