//! Dimensionless validity ratios for the two elimination stages.

use serde::Serialize;

use crate::model::PhysicalParams;

use super::params::EffectiveParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Flag {
    Pass,
    Warn,
    Fail,
}

impl std::fmt::Display for Flag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Flag::Pass => write!(f, "PASS"),
            Flag::Warn => write!(f, "WARN"),
            Flag::Fail => write!(f, "FAIL"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ValidityThresholds {
    /// Ratios at or above this pass.
    pub pass_at: f64,
    /// Ratios at or above this (but below `pass_at`) warn; below fails.
    pub warn_at: f64,
}

impl Default for ValidityThresholds {
    fn default() -> Self {
        ValidityThresholds {
            pass_at: 10.0,
            warn_at: 3.0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidityRow {
    pub name: String,
    pub ratio: f64,
    pub flag: Flag,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidityReport {
    pub thresholds: ValidityThresholds,
    pub rows: Vec<ValidityRow>,
}

impl ValidityReport {
    pub fn worst_flag(&self) -> Flag {
        let mut worst = Flag::Pass;
        for row in &self.rows {
            worst = match (worst, row.flag) {
                (_, Flag::Fail) | (Flag::Fail, _) => Flag::Fail,
                (_, Flag::Warn) | (Flag::Warn, _) => Flag::Warn,
                _ => Flag::Pass,
            };
        }
        worst
    }

    pub fn min_ratio(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| r.ratio)
            .fold(f64::INFINITY, f64::min)
    }
}

fn classify(ratio: f64, th: &ValidityThresholds) -> Flag {
    // an unconstrained ratio (zero coupling) passes trivially
    if ratio.is_nan() || ratio >= th.pass_at {
        Flag::Pass
    } else if ratio >= th.warn_at {
        Flag::Warn
    } else {
        Flag::Fail
    }
}

/// Reports every hierarchy inequality as a ratio with a PASS/WARN/FAIL flag:
/// the first-stage conditions (each detuning against the couplings, the
/// normal-mode splitting and the Zeeman scales) and the second-stage
/// conditions (each slow frequency against the couplings it must dominate).
pub fn validity_report(
    p: &PhysicalParams,
    e: &EffectiveParams,
    thresholds: ValidityThresholds,
) -> ValidityReport {
    let r2nu = p.root2_nu();
    let mut rows = Vec::new();
    let mut push = |name: String, num: f64, den: f64| {
        let ratio = num.abs() / den.abs();
        rows.push(ValidityRow {
            name,
            ratio,
            flag: classify(ratio, &thresholds),
        });
    };

    for (tag, detuning, g, omega) in [
        ("delta1", p.delta1, p.g1, p.omega1),
        ("delta2", p.delta2, p.g2, p.omega2),
    ] {
        push(format!("{tag}/g"), detuning, g);
        push(format!("{tag}/omega"), detuning, omega);
        push(format!("{tag}/sqrt2_nu"), detuning, r2nu);
        push(format!("{tag}/delta"), detuning, p.delta_small);
        push(format!("{tag}/Delta"), detuning, p.delta_total());
    }

    let dl = p.delta_small;
    push(
        "|delta-sqrt2_nu|/lambda_1".into(),
        dl - r2nu,
        e.max_lambda_for_mode(1),
    );
    push(
        "(delta+sqrt2_nu)/lambda_2".into(),
        dl + r2nu,
        e.max_lambda_for_mode(2),
    );
    push("delta/lambda_0".into(), dl, e.max_lambda_for_mode(0));
    push(
        "2sqrt2_nu/kappa_1".into(),
        2.0 * r2nu,
        e.max_kappa_for_set(1),
    );
    push(
        "sqrt2_nu/kappa_20".into(),
        r2nu,
        e.max_kappa_for_set(2).max(e.max_kappa_for_set(0)),
    );

    ValidityReport { thresholds, rows }
}
