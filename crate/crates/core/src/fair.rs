//! Single-sided fair solutions: the per-type argmax user-fair policy and
//! item-fair policies obtained by maximizing a social welfare function over
//! item outcomes, plus direct SWF evaluation.
//!
//! Every item-fair LP is solved in two lexicographic stages: stage 1
//! optimizes the welfare objective, stage 2 pins that value (within 1e-8)
//! and maximizes the total outcome `sum L_{i,j} x_{i,j}`. This makes the
//! returned policy deterministic and scale-invariant; any residual
//! non-uniqueness is broken by the solver's Bland rule.

use ndarray::Array2;

use crate::instance::{Policy, SwfKind};
use crate::lp::{solve_lp, LinearProgram, LpStatus};
use crate::{Error, Result};

/// Slack allowed when pinning the stage-1 welfare value in stage 2.
const LEX_TOL: f64 = 1e-8;

/// The user-fair solution: each user type deterministically receives its
/// highest-utility item, ties going to the lowest item index.
pub fn user_fair_solution(u: &Array2<f64>) -> Policy {
    let (n, m) = (u.nrows(), u.ncols());
    let mut x = Array2::zeros((n, m));
    for j in 0..m {
        let col = u.column(j);
        let mut best = 0usize;
        for i in 1..n {
            if col[i] > col[best] {
                best = i;
            }
        }
        x[[best, j]] = 1.0;
    }
    Policy::from_matrix_unchecked(x)
}

/// Dispatches to the item-fair solver for the configured welfare function.
pub fn item_fair(l: &Array2<f64>, swf: &SwfKind) -> Result<Policy> {
    match swf {
        SwfKind::Maxmin => item_fair_maxmin(l),
        SwfKind::Ks => item_fair_ks(l),
        SwfKind::HookerWilliams { delta } => item_fair_hw(l, *delta),
        SwfKind::DemographicParity { subset } => item_fair_parity(l, subset),
    }
}

/// Variables `x` flattened row-major, plus `extra` auxiliary variables
/// appended after them. Adds the per-type simplex columns.
fn policy_lp(n: usize, m: usize, extra: usize) -> LinearProgram {
    let nv = n * m + extra;
    let mut lp = LinearProgram::new(nv);
    for j in 0..m {
        let mut row = vec![0.0; nv];
        for i in 0..n {
            row[i * m + j] = 1.0;
        }
        lp.add_eq(row, 1.0);
    }
    lp
}

fn outcome_row(l: &Array2<f64>, i: usize, nv: usize) -> Vec<f64> {
    let m = l.ncols();
    let mut row = vec![0.0; nv];
    for j in 0..m {
        row[i * m + j] = l[[i, j]];
    }
    row
}

fn total_outcome_objective(l: &Array2<f64>, nv: usize) -> Vec<f64> {
    let (n, m) = (l.nrows(), l.ncols());
    let mut c = vec![0.0; nv];
    for i in 0..n {
        for j in 0..m {
            c[i * m + j] = l[[i, j]];
        }
    }
    c
}

fn extract_policy(x: &[f64], n: usize, m: usize) -> Result<Policy> {
    let mut mat = Array2::zeros((n, m));
    for i in 0..n {
        for j in 0..m {
            mat[[i, j]] = x[i * m + j].max(0.0);
        }
    }
    // Solver tolerances can leave column sums off by ~1e-9; renormalize.
    for j in 0..m {
        let s: f64 = mat.column(j).sum();
        if (s - 1.0).abs() > 1e-12 && s > 0.0 {
            for i in 0..n {
                mat[[i, j]] /= s;
            }
        }
    }
    Policy::new(mat)
}

fn expect_optimal(lp: &LinearProgram, what: &str) -> Result<Vec<f64>> {
    let sol = solve_lp(lp)?;
    match sol.status {
        LpStatus::Optimal => Ok(sol.x),
        other => Err(Error::NumericalInstability(format!(
            "{what} LP ended {other:?}"
        ))),
    }
}

/// Item-fair solution under maxmin welfare: maximize the minimum item
/// outcome, then the total outcome.
pub fn item_fair_maxmin(l: &Array2<f64>) -> Result<Policy> {
    check_outcome_matrix(l)?;
    let (n, m) = (l.nrows(), l.ncols());
    let nv = n * m + 1; // x then z
    let z = nv - 1;

    let mut stage1 = policy_lp(n, m, 1);
    let mut c = vec![0.0; nv];
    c[z] = 1.0;
    stage1.set_objective(c);
    for i in 0..n {
        let mut row = outcome_row(l, i, nv);
        row[z] = -1.0;
        stage1.add_ge(row, 0.0);
    }
    let x1 = expect_optimal(&stage1, "maxmin stage 1")?;
    let z_star = x1[z];

    let mut stage2 = policy_lp(n, m, 0);
    stage2.set_objective(total_outcome_objective(l, n * m));
    for i in 0..n {
        stage2.add_ge(outcome_row(l, i, n * m), z_star - LEX_TOL);
    }
    let x2 = expect_optimal(&stage2, "maxmin stage 2")?;
    extract_policy(&x2, n, m)
}

/// Item-fair solution under Kalai-Smorodinsky welfare: maximize the common
/// fraction `beta` of each item's maximum attainable outcome `L*_i = sum_j L_{i,j}`.
pub fn item_fair_ks(l: &Array2<f64>) -> Result<Policy> {
    check_outcome_matrix(l)?;
    let (n, m) = (l.nrows(), l.ncols());
    let l_star: Vec<f64> = (0..n).map(|i| l.row(i).sum()).collect();
    if let Some(i) = l_star.iter().position(|&v| v <= 0.0) {
        return Err(Error::InvalidInput(format!(
            "item {i} has zero attainable outcome; K-S undefined"
        )));
    }
    let nv = n * m + 1;
    let beta = nv - 1;

    let mut stage1 = policy_lp(n, m, 1);
    let mut c = vec![0.0; nv];
    c[beta] = 1.0;
    stage1.set_objective(c);
    stage1.set_bounds(beta, 0.0, 1.0);
    for i in 0..n {
        let mut row = outcome_row(l, i, nv);
        for v in row.iter_mut() {
            *v /= l_star[i];
        }
        row[beta] = -1.0;
        stage1.add_ge(row, 0.0);
    }
    let x1 = expect_optimal(&stage1, "K-S stage 1")?;
    let beta_star = x1[beta];

    let mut stage2 = policy_lp(n, m, 0);
    stage2.set_objective(total_outcome_objective(l, n * m));
    for i in 0..n {
        let mut row = outcome_row(l, i, n * m);
        for v in row.iter_mut() {
            *v /= l_star[i];
        }
        stage2.add_ge(row, beta_star - LEX_TOL);
    }
    let x2 = expect_optimal(&stage2, "K-S stage 2")?;
    extract_policy(&x2, n, m)
}

/// Item-fair solution under Hooker-Williams welfare with tradeoff
/// parameter `delta`.
///
/// Solves the LP relaxation of the equity/efficiency program: auxiliary
/// variables `v_i` take value `max(O_i - delta, w)` with `w` at the minimum
/// outcome, so small `delta` recovers the utilitarian solution and large
/// `delta` the maxmin one.
pub fn item_fair_hw(l: &Array2<f64>, delta: f64) -> Result<Policy> {
    check_outcome_matrix(l)?;
    if !(delta > 0.0) {
        return Err(Error::InvalidInput(format!("delta = {delta} must be > 0")));
    }
    let (n, m) = (l.nrows(), l.ncols());
    let l_bar = l.iter().fold(0.0f64, |a, &v| a.max(v.abs()));
    let gamma = 2.0 * m as f64 * l_bar + delta;

    // Variables: x (n*m), z, v_0..v_{n-1}, w, d_0..d_{n-1} in [0,1].
    let nv = n * m + 1 + n + 1 + n;
    let z = n * m;
    let v0 = n * m + 1;
    let w = v0 + n;
    let d0 = w + 1;

    let build = |objective: Vec<f64>, z_floor: Option<f64>| -> LinearProgram {
        let mut lp = policy_lp(n, m, 1 + n + 1 + n);
        lp.set_objective(objective);
        for i in 0..n {
            lp.set_bounds(d0 + i, 0.0, 1.0);
        }
        // (N-1) delta + sum_i v_i >= z
        let mut row = vec![0.0; nv];
        for i in 0..n {
            row[v0 + i] = 1.0;
        }
        row[z] = -1.0;
        lp.add_ge(row, -((n as f64 - 1.0) * delta));
        for i in 0..n {
            // O_i - delta <= v_i
            let mut lo = outcome_row(l, i, nv);
            lo[v0 + i] = -1.0;
            lp.add_le(lo, delta);
            // v_i <= O_i - delta * d_i
            let mut hi = outcome_row(l, i, nv);
            for c in hi.iter_mut() {
                *c = -*c;
            }
            hi[v0 + i] = 1.0;
            hi[d0 + i] = delta;
            lp.add_le(hi, 0.0);
            // w <= v_i
            let mut wl = vec![0.0; nv];
            wl[w] = 1.0;
            wl[v0 + i] = -1.0;
            lp.add_le(wl, 0.0);
            // v_i <= w + (gamma - delta) d_i
            let mut wh = vec![0.0; nv];
            wh[v0 + i] = 1.0;
            wh[w] = -1.0;
            wh[d0 + i] = -(gamma - delta);
            lp.add_le(wh, 0.0);
        }
        if let Some(floor) = z_floor {
            let mut row = vec![0.0; nv];
            row[z] = 1.0;
            lp.add_ge(row, floor);
        }
        lp
    };

    let mut c1 = vec![0.0; nv];
    c1[z] = 1.0;
    let x1 = expect_optimal(&build(c1, None), "Hooker-Williams stage 1")?;
    let z_star = x1[z];

    let c2 = total_outcome_objective(l, nv);
    let x2 = expect_optimal(
        &build(c2, Some(z_star - LEX_TOL)),
        "Hooker-Williams stage 2",
    )?;
    extract_policy(&x2, n, m)
}

/// Item-fair solution under demographic parity: minimize the absolute gap
/// between the mean outcome of `subset` and of its complement, then
/// maximize total outcome.
pub fn item_fair_parity(l: &Array2<f64>, subset: &[usize]) -> Result<Policy> {
    check_outcome_matrix(l)?;
    let (n, m) = (l.nrows(), l.ncols());
    if subset.is_empty() || subset.len() >= n || subset.iter().any(|&i| i >= n) {
        return Err(Error::InvalidInput(format!(
            "parity subset must be a nonempty proper subset of 0..{n}"
        )));
    }
    let in_subset = |i: usize| subset.contains(&i);
    let s_w = 1.0 / subset.len() as f64;
    let c_w = 1.0 / (n - subset.len()) as f64;

    // Variables: x, gap (the |difference| majorant).
    let nv = n * m + 1;
    let gap = nv - 1;
    let diff_row = |sign: f64| -> Vec<f64> {
        // sign * (mean_S O - mean_Sc O) - gap <= 0
        let mut row = vec![0.0; nv];
        for i in 0..n {
            let wgt = if in_subset(i) { s_w } else { -c_w };
            for j in 0..m {
                row[i * m + j] = sign * wgt * l[[i, j]];
            }
        }
        row[gap] = -1.0;
        row
    };

    let mut stage1 = policy_lp(n, m, 1);
    let mut c = vec![0.0; nv];
    c[gap] = -1.0; // maximize 1 - gap  <=>  minimize gap
    stage1.set_objective(c);
    stage1.add_le(diff_row(1.0), 0.0);
    stage1.add_le(diff_row(-1.0), 0.0);
    let x1 = expect_optimal(&stage1, "parity stage 1")?;
    let gap_star = x1[gap];

    let mut stage2 = policy_lp(n, m, 1);
    stage2.set_objective(total_outcome_objective(l, nv));
    stage2.add_le(diff_row(1.0), 0.0);
    stage2.add_le(diff_row(-1.0), 0.0);
    let mut cap = vec![0.0; nv];
    cap[gap] = 1.0;
    stage2.add_le(cap, gap_star + LEX_TOL);
    let x2 = expect_optimal(&stage2, "parity stage 2")?;
    extract_policy(&x2, n, m)
}

fn check_outcome_matrix(l: &Array2<f64>) -> Result<()> {
    if l.nrows() == 0 || l.ncols() == 0 {
        return Err(Error::InvalidInput("empty outcome matrix".into()));
    }
    if l.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput(
            "outcome matrix has non-finite entries".into(),
        ));
    }
    Ok(())
}

/// Social welfare functional evaluated on a vector of stakeholder outcomes.
#[derive(Debug, Clone, PartialEq)]
pub enum SwfValue {
    /// `min_s O_s`.
    Maxmin,
    /// Proportional-share indicator: returns `sum O_s` when every outcome is
    /// the same fraction of its supplied maximum, `-inf` otherwise.
    /// Diagnostic only; optimization goes through [`item_fair_ks`].
    Ks { max_outcomes: Vec<f64> },
    /// `sum_s max(O_s - delta, min_s O_s)`.
    HookerWilliams { delta: f64 },
    /// `sum_s log O_s`; requires strictly positive outcomes.
    Nash,
    /// `1 - |mean over subset - mean over complement|`.
    DemographicParity { subset: Vec<usize> },
}

/// Evaluates a social welfare function on nonnegative outcomes.
pub fn swf_value(outcomes: &[f64], kind: &SwfValue) -> Result<f64> {
    if outcomes.is_empty() {
        return Err(Error::InvalidInput("empty outcome vector".into()));
    }
    if outcomes.iter().any(|&o| !o.is_finite() || o < 0.0) {
        return Err(Error::InvalidInput("outcomes must be finite and >= 0".into()));
    }
    let min = outcomes.iter().cloned().fold(f64::INFINITY, f64::min);
    match kind {
        SwfValue::Maxmin => Ok(min),
        SwfValue::Ks { max_outcomes } => {
            if max_outcomes.len() != outcomes.len() {
                return Err(Error::DimensionMismatch("K-S max outcomes length".into()));
            }
            if max_outcomes.iter().any(|&v| v <= 0.0) {
                return Err(Error::InvalidInput("K-S maxima must be > 0".into()));
            }
            let fracs: Vec<f64> = outcomes
                .iter()
                .zip(max_outcomes)
                .map(|(o, mx)| o / mx)
                .collect();
            let proportional = fracs.iter().all(|f| (f - fracs[0]).abs() <= 1e-9);
            if proportional {
                Ok(outcomes.iter().sum())
            } else {
                Ok(f64::NEG_INFINITY)
            }
        }
        SwfValue::HookerWilliams { delta } => {
            if !(*delta >= 0.0) {
                return Err(Error::InvalidInput("delta must be >= 0".into()));
            }
            Ok(outcomes.iter().map(|&o| (o - delta).max(min)).sum())
        }
        SwfValue::Nash => {
            if outcomes.iter().any(|&o| o <= 0.0) {
                return Err(Error::InvalidInput(
                    "Nash welfare undefined for zero outcomes".into(),
                ));
            }
            Ok(outcomes.iter().map(|o| o.ln()).sum())
        }
        SwfValue::DemographicParity { subset } => {
            let s = outcomes.len();
            if subset.is_empty() || subset.len() >= s || subset.iter().any(|&i| i >= s) {
                return Err(Error::InvalidInput("invalid parity subset".into()));
            }
            let in_sum: f64 = subset.iter().map(|&i| outcomes[i]).sum();
            let total: f64 = outcomes.iter().sum();
            let mean_in = in_sum / subset.len() as f64;
            let mean_out = (total - in_sum) / (s - subset.len()) as f64;
            Ok(1.0 - (mean_in - mean_out).abs())
        }
    }
}

/// Item outcomes `O_i = L_{i,:} . x_{i,:}` of a policy.
pub fn item_outcomes(l: &Array2<f64>, policy: &Policy) -> Vec<f64> {
    let (n, m) = (l.nrows(), l.ncols());
    (0..n)
        .map(|i| (0..m).map(|j| l[[i, j]] * policy.matrix()[[i, j]]).sum())
        .collect()
}

/// User outcomes `O_j = U_{:,j} . x_{:,j}` of a policy.
pub fn user_outcomes(u: &Array2<f64>, policy: &Policy) -> Vec<f64> {
    let (n, m) = (u.nrows(), u.ncols());
    (0..m)
        .map(|j| (0..n).map(|i| u[[i, j]] * policy.matrix()[[i, j]]).sum())
        .collect()
}
