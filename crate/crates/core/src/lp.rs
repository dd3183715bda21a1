//! Generic linear programs, a deterministic dense simplex solver, and the
//! brute-force Hoffman constant for small inequality systems.
//!
//! The solver is intentionally simple: two-phase primal simplex on a dense
//! tableau with Bland's anti-cycling rule. Every tie is broken by lowest
//! index, so identical inputs produce identical outputs. This is plenty for
//! the few-hundred-variable problems built elsewhere in the crate.

use ndarray::Array2;

use crate::{Error, Result};

/// Row sense of a linear constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `maximize c . x  s.t.  rows, lower <= x <= upper` (defaults `0 <= x`).
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub n_vars: usize,
    pub objective: Vec<f64>,
    pub rows: Vec<(Vec<f64>, Relation, f64)>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl LinearProgram {
    pub fn new(n_vars: usize) -> Self {
        Self {
            n_vars,
            objective: vec![0.0; n_vars],
            rows: Vec::new(),
            lower: vec![0.0; n_vars],
            upper: vec![f64::INFINITY; n_vars],
        }
    }

    pub fn set_objective(&mut self, c: Vec<f64>) {
        assert_eq!(c.len(), self.n_vars);
        self.objective = c;
    }

    pub fn add_row(&mut self, coeffs: Vec<f64>, rel: Relation, rhs: f64) {
        assert_eq!(coeffs.len(), self.n_vars);
        self.rows.push((coeffs, rel, rhs));
    }

    pub fn add_le(&mut self, coeffs: Vec<f64>, rhs: f64) {
        self.add_row(coeffs, Relation::Le, rhs);
    }

    pub fn add_ge(&mut self, coeffs: Vec<f64>, rhs: f64) {
        self.add_row(coeffs, Relation::Ge, rhs);
    }

    pub fn add_eq(&mut self, coeffs: Vec<f64>, rhs: f64) {
        self.add_row(coeffs, Relation::Eq, rhs);
    }

    pub fn set_bounds(&mut self, var: usize, lower: f64, upper: f64) {
        self.lower[var] = lower;
        self.upper[var] = upper;
    }

    fn validate(&self) -> Result<()> {
        if self.objective.len() != self.n_vars {
            return Err(Error::DimensionMismatch("objective length".into()));
        }
        if self.objective.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidInput("objective has non-finite entries".into()));
        }
        for (k, (a, _, b)) in self.rows.iter().enumerate() {
            if a.len() != self.n_vars {
                return Err(Error::DimensionMismatch(format!("row {k} length")));
            }
            if a.iter().any(|v| !v.is_finite()) || !b.is_finite() {
                return Err(Error::InvalidInput(format!("row {k} has non-finite entries")));
            }
        }
        Ok(())
    }

    /// Plain-text inequality dump for debugging.
    pub fn dump(&self) -> String {
        use std::fmt::Write;
        let term = |a: &[f64]| {
            a.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0.0)
                .map(|(i, v)| format!("{v} x{i}"))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        let mut s = String::new();
        writeln!(s, "max {}", term(&self.objective)).unwrap();
        writeln!(s, "s.t.").unwrap();
        for (a, rel, b) in &self.rows {
            let op = match rel {
                Relation::Le => "<=",
                Relation::Ge => ">=",
                Relation::Eq => "=",
            };
            writeln!(s, "  {} {op} {b}", term(a)).unwrap();
        }
        for i in 0..self.n_vars {
            if self.lower[i] != 0.0 || self.upper[i].is_finite() {
                writeln!(s, "  {} <= x{i} <= {}", self.lower[i], self.upper[i]).unwrap();
            }
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Variable values when optimal, empty otherwise.
    pub x: Vec<f64>,
    pub objective_value: f64,
}

const RC_TOL: f64 = 1e-9;
const PIVOT_TOL: f64 = 1e-9;
const PIVOT_HARD_MIN: f64 = 1e-12;
const FEAS_TOL: f64 = 1e-7;

/// Solves `lp` with a two-phase dense simplex.
///
/// Equality rows are expanded into paired inequalities, variables with
/// finite lower bounds are shifted, and free variables are split. Bland's
/// rule (lowest eligible index everywhere) keeps the pivot sequence
/// deterministic and cycle-free.
pub fn solve_lp(lp: &LinearProgram) -> Result<LpSolution> {
    lp.validate()?;
    let std = Standardized::build(lp);
    let mut tab = Tableau::new(&std);
    match tab.solve(&std.c)? {
        LpStatus::Optimal => {
            let x = std.recover(&tab);
            let objective_value: f64 =
                lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
            check_feasible(lp, &x)?;
            Ok(LpSolution {
                status: LpStatus::Optimal,
                x,
                objective_value,
            })
        }
        status => Ok(LpSolution {
            status,
            x: Vec::new(),
            objective_value: f64::NAN,
        }),
    }
}

fn check_feasible(lp: &LinearProgram, x: &[f64]) -> Result<()> {
    for (k, (a, rel, b)) in lp.rows.iter().enumerate() {
        let lhs: f64 = a.iter().zip(x).map(|(ai, xi)| ai * xi).sum();
        let violated = match rel {
            Relation::Le => lhs > b + FEAS_TOL,
            Relation::Ge => lhs < b - FEAS_TOL,
            Relation::Eq => (lhs - b).abs() > FEAS_TOL,
        };
        if violated {
            return Err(Error::NumericalInstability(format!(
                "row {k} residual {lhs} vs rhs {b} after solve"
            )));
        }
    }
    for i in 0..lp.n_vars {
        if x[i] < lp.lower[i] - FEAS_TOL || x[i] > lp.upper[i] + FEAS_TOL {
            return Err(Error::NumericalInstability(format!(
                "variable {i} = {} outside bounds after solve",
                x[i]
            )));
        }
    }
    Ok(())
}

/// `max c . x  s.t.  A x <= b, x >= 0` plus the bookkeeping to map back.
struct Standardized {
    n_std: usize,
    c: Vec<f64>,
    rows: Vec<(Vec<f64>, f64)>,
    /// Per original variable: (std index of positive part, optional index of
    /// negative part for free variables, shift).
    var_map: Vec<(usize, Option<usize>, f64)>,
    n_orig: usize,
}

impl Standardized {
    fn build(lp: &LinearProgram) -> Self {
        let mut var_map = Vec::with_capacity(lp.n_vars);
        let mut n_std = 0;
        for i in 0..lp.n_vars {
            if lp.lower[i].is_finite() {
                var_map.push((n_std, None, lp.lower[i]));
                n_std += 1;
            } else {
                var_map.push((n_std, Some(n_std + 1), 0.0));
                n_std += 2;
            }
        }
        let to_std = |a: &[f64]| {
            let mut row = vec![0.0; n_std];
            for (i, &ai) in a.iter().enumerate() {
                let (pos, neg, _) = var_map[i];
                row[pos] += ai;
                if let Some(neg) = neg {
                    row[neg] -= ai;
                }
            }
            row
        };
        let shift_of = |a: &[f64]| -> f64 {
            a.iter()
                .enumerate()
                .map(|(i, &ai)| ai * var_map[i].2)
                .sum()
        };

        let c = to_std(&lp.objective);

        let mut rows: Vec<(Vec<f64>, f64)> = Vec::new();
        for (a, rel, b) in &lp.rows {
            let sa = to_std(a);
            let sb = b - shift_of(a);
            match rel {
                Relation::Le => rows.push((sa, sb)),
                Relation::Ge => rows.push((sa.iter().map(|v| -v).collect(), -sb)),
                Relation::Eq => {
                    rows.push((sa.clone(), sb));
                    rows.push((sa.iter().map(|v| -v).collect(), -sb));
                }
            }
        }
        for i in 0..lp.n_vars {
            if lp.upper[i].is_finite() {
                let mut a = vec![0.0; lp.n_vars];
                a[i] = 1.0;
                let sa = to_std(&a);
                rows.push((sa, lp.upper[i] - var_map[i].2));
            }
        }

        Self {
            n_std,
            c,
            rows,
            var_map,
            n_orig: lp.n_vars,
        }
    }

    fn recover(&self, tab: &Tableau) -> Vec<f64> {
        let std_x = tab.std_values(self.n_std);
        (0..self.n_orig)
            .map(|i| {
                let (pos, neg, shift) = self.var_map[i];
                shift + std_x[pos] - neg.map_or(0.0, |k| std_x[k])
            })
            .collect()
    }
}

enum IterEnd {
    Optimal,
    Unbounded,
}

struct Tableau {
    /// `rows x (n_cols + 1)`; last column is the rhs.
    t: Vec<Vec<f64>>,
    basis: Vec<usize>,
    n_cols: usize,
    artificial_start: usize,
}

impl Tableau {
    fn new(std: &Standardized) -> Self {
        let m = std.rows.len();
        let n = std.n_std;
        let n_real = n + m; // structural + slack
        let mut artificial_of_row: Vec<Option<usize>> = vec![None; m];
        let mut n_art = 0;
        for (i, (_, b)) in std.rows.iter().enumerate() {
            if *b < 0.0 {
                artificial_of_row[i] = Some(n_art);
                n_art += 1;
            }
        }
        let n_cols = n_real + n_art;
        let mut t = vec![vec![0.0; n_cols + 1]; m];
        let mut basis = vec![0usize; m];
        for (i, (a, b)) in std.rows.iter().enumerate() {
            let sign = if *b < 0.0 { -1.0 } else { 1.0 };
            for (j, &aj) in a.iter().enumerate() {
                t[i][j] = sign * aj;
            }
            t[i][n + i] = sign; // slack
            t[i][n_cols] = sign * b;
            if let Some(k) = artificial_of_row[i] {
                t[i][n_real + k] = 1.0;
                basis[i] = n_real + k;
            } else {
                basis[i] = n + i;
            }
        }
        Self {
            t,
            basis,
            n_cols,
            artificial_start: n_real,
        }
    }

    fn solve(&mut self, struct_costs: &[f64]) -> Result<LpStatus> {
        // Phase 1: drive the artificial variables to zero.
        if self.n_cols > self.artificial_start {
            let mut cost = vec![0.0; self.n_cols];
            for j in self.artificial_start..self.n_cols {
                cost[j] = -1.0;
            }
            self.price_out(&mut cost);
            match self.iterate(&mut cost, self.n_cols)? {
                IterEnd::Optimal => {}
                IterEnd::Unbounded => {
                    return Err(Error::NumericalInstability(
                        "phase 1 claims unbounded".into(),
                    ))
                }
            }
            let art_sum: f64 = (0..self.t.len())
                .filter(|&i| self.basis[i] >= self.artificial_start)
                .map(|i| self.t[i][self.n_cols])
                .sum();
            if art_sum > 1e-7 {
                return Ok(LpStatus::Infeasible);
            }
            self.evict_artificials();
        }
        // Phase 2 over structural and slack columns only.
        let mut cost = vec![0.0; self.n_cols];
        cost[..struct_costs.len()].copy_from_slice(struct_costs);
        self.price_out(&mut cost);
        match self.iterate(&mut cost, self.artificial_start)? {
            IterEnd::Optimal => Ok(LpStatus::Optimal),
            IterEnd::Unbounded => Ok(LpStatus::Unbounded),
        }
    }

    fn std_values(&self, n_std: usize) -> Vec<f64> {
        let mut x = vec![0.0; n_std];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n_std {
                x[b] = self.t[i][self.n_cols];
            }
        }
        x
    }

    /// Makes `cost` consistent with the current basis (reduced costs of
    /// basic variables become zero).
    fn price_out(&self, cost: &mut [f64]) {
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost[b];
            if cb != 0.0 {
                let row = &self.t[i];
                for (cv, rv) in cost.iter_mut().zip(row.iter()) {
                    *cv -= cb * rv;
                }
            }
        }
    }

    /// Bland-rule simplex iterations on the current tableau.
    fn iterate(&mut self, cost: &mut [f64], col_limit: usize) -> Result<IterEnd> {
        let max_iter = 20_000 + 200 * (self.t.len() + self.n_cols);
        for _ in 0..max_iter {
            // Entering: lowest index with positive reduced cost.
            let Some(enter) = (0..col_limit).find(|&j| cost[j] > RC_TOL) else {
                return Ok(IterEnd::Optimal);
            };
            // Leaving: min ratio; ties broken by lowest basic-variable index.
            let mut best: Option<(f64, usize, usize)> = None; // (ratio, basisvar, row)
            let mut seen_tiny_pivot = false;
            for i in 0..self.t.len() {
                let a = self.t[i][enter];
                if a > PIVOT_TOL {
                    let ratio = self.t[i][self.n_cols] / a;
                    if best.map_or(true, |(br, bv, _)| {
                        ratio < br - 1e-12
                            || ((ratio - br).abs() <= 1e-12 && self.basis[i] < bv)
                    }) {
                        best = Some((ratio, self.basis[i], i));
                    }
                } else if a > PIVOT_HARD_MIN {
                    seen_tiny_pivot = true;
                }
            }
            let Some((_, _, leave)) = best else {
                if seen_tiny_pivot {
                    return Err(Error::NumericalInstability(format!(
                        "only pivots below {PIVOT_TOL} available in column {enter}"
                    )));
                }
                return Ok(IterEnd::Unbounded);
            };
            self.pivot(leave, enter, cost);
        }
        Err(Error::NumericalInstability("simplex iteration limit".into()))
    }

    fn pivot(&mut self, row: usize, col: usize, cost: &mut [f64]) {
        let piv = self.t[row][col];
        for v in self.t[row].iter_mut() {
            *v /= piv;
        }
        let pivot_row = self.t[row].clone();
        for (i, cur) in self.t.iter_mut().enumerate() {
            if i != row {
                let f = cur[col];
                if f != 0.0 {
                    for (cv, pv) in cur.iter_mut().zip(pivot_row.iter()) {
                        *cv -= f * pv;
                    }
                }
            }
        }
        let f = cost[col];
        if f != 0.0 {
            for (cv, pv) in cost.iter_mut().zip(pivot_row.iter()) {
                *cv -= f * pv;
            }
        }
        self.basis[row] = col;
    }

    /// After phase 1, pivots remaining zero-level artificials out of the
    /// basis, dropping rows that turn out redundant.
    fn evict_artificials(&mut self) {
        let mut i = 0;
        while i < self.t.len() {
            if self.basis[i] >= self.artificial_start {
                let col =
                    (0..self.artificial_start).find(|&j| self.t[i][j].abs() > PIVOT_TOL);
                match col {
                    Some(j) => {
                        let mut dummy = vec![0.0; self.n_cols];
                        self.pivot(i, j, &mut dummy);
                        i += 1;
                    }
                    None => {
                        // Redundant row.
                        self.t.remove(i);
                        self.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }
}

/// Maximum positive violation `||(A x - b)^+||_inf` of an inequality system.
pub fn max_violation(a: &Array2<f64>, b: &[f64], x: &[f64]) -> Result<f64> {
    if a.nrows() != b.len() || a.ncols() != x.len() {
        return Err(Error::DimensionMismatch(format!(
            "A is {}x{}, b has {}, x has {}",
            a.nrows(),
            a.ncols(),
            b.len(),
            x.len()
        )));
    }
    let mut worst: f64 = 0.0;
    for (i, bi) in b.iter().enumerate() {
        let lhs: f64 = a.row(i).iter().zip(x).map(|(ai, xi)| ai * xi).sum();
        worst = worst.max(lhs - bi);
    }
    Ok(worst.max(0.0))
}

/// Largest subset size handled by [`hoffman_constant`].
pub const HOFFMAN_ROW_CAP: usize = 12;

/// Brute-force Hoffman constant of the system `A x <= b`:
/// the maximum over full-row-rank row subsets `J` of
/// `1 / min { ||A_J^T v||_1 : v >= 0, ||v||_1 = 1 }`.
pub fn hoffman_constant(a: &Array2<f64>) -> Result<f64> {
    let m = a.nrows();
    let n = a.ncols();
    if m == 0 || n == 0 || a.iter().all(|&v| v == 0.0) {
        return Err(Error::InvalidInput("Hoffman constant needs a nonzero matrix".into()));
    }
    if m > HOFFMAN_ROW_CAP {
        return Err(Error::HoffmanCapExceeded {
            rows: m,
            cap: HOFFMAN_ROW_CAP,
        });
    }
    let mut best = 0.0f64;
    for mask in 1u32..(1 << m) {
        let rows: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        if rows.len() > n || !full_row_rank(a, &rows) {
            continue;
        }
        let d = min_l1_of_combination(a, &rows)?;
        if d > 1e-12 {
            best = best.max(1.0 / d);
        } else {
            return Err(Error::NumericalInstability(format!(
                "degenerate subset {rows:?} with l1 minimum {d}"
            )));
        }
    }
    Ok(best)
}

/// `min ||A_J^T v||_1 over v >= 0, sum v = 1`, as a small LP with
/// per-coordinate absolute-value variables.
fn min_l1_of_combination(a: &Array2<f64>, rows: &[usize]) -> Result<f64> {
    let k = rows.len();
    let n = a.ncols();
    // Variables: v_0..v_{k-1}, u_0..u_{n-1}.
    let mut lp = LinearProgram::new(k + n);
    let mut c = vec![0.0; k + n];
    for u in c.iter_mut().skip(k) {
        *u = -1.0;
    }
    lp.set_objective(c);
    for col in 0..n {
        let mut pos = vec![0.0; k + n];
        let mut neg = vec![0.0; k + n];
        for (r, &row) in rows.iter().enumerate() {
            pos[r] = a[[row, col]];
            neg[r] = -a[[row, col]];
        }
        pos[k + col] = -1.0;
        neg[k + col] = -1.0;
        lp.add_le(pos, 0.0);
        lp.add_le(neg, 0.0);
    }
    let mut simplex = vec![0.0; k + n];
    for s in simplex.iter_mut().take(k) {
        *s = 1.0;
    }
    lp.add_eq(simplex, 1.0);
    let sol = solve_lp(&lp)?;
    if sol.status != LpStatus::Optimal {
        return Err(Error::NumericalInstability(format!(
            "inner Hoffman LP ended {:?}",
            sol.status
        )));
    }
    Ok(-sol.objective_value)
}

fn full_row_rank(a: &Array2<f64>, rows: &[usize]) -> bool {
    let k = rows.len();
    let n = a.ncols();
    let mut m: Vec<Vec<f64>> = rows.iter().map(|&r| a.row(r).to_vec()).collect();
    let scale = m
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
        .max(1.0);
    let tol = 1e-9 * scale;
    let mut rank = 0;
    let mut col = 0;
    while rank < k && col < n {
        let piv = (rank..k).max_by(|&i, &j| {
            m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap()
        });
        let piv = piv.unwrap();
        if m[piv][col].abs() <= tol {
            col += 1;
            continue;
        }
        m.swap(rank, piv);
        for i in rank + 1..k {
            let f = m[i][col] / m[rank][col];
            for j in col..n {
                m[i][j] -= f * m[rank][j];
            }
        }
        rank += 1;
        col += 1;
    }
    rank == k
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    #[test]
    fn one_var_box() {
        let mut lp = LinearProgram::new(1);
        lp.set_objective(vec![1.0]);
        lp.add_le(vec![1.0], 1.0);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_abs_diff_eq!(sol.x[0], 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(sol.objective_value, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn infeasible_box() {
        let mut lp = LinearProgram::new(1);
        lp.set_objective(vec![1.0]);
        lp.add_le(vec![1.0], -1.0);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Infeasible);
    }

    #[test]
    fn two_var_with_lower_bounds() {
        // Hand enumeration of vertices: (0.75, 0.25) wins.
        let mut lp = LinearProgram::new(2);
        lp.set_objective(vec![0.8, 0.6]);
        lp.add_eq(vec![1.0, 1.0], 1.0);
        lp.set_bounds(0, 0.25, f64::INFINITY);
        lp.set_bounds(1, 0.25, f64::INFINITY);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_abs_diff_eq!(sol.x[0], 0.75, epsilon = 1e-8);
        assert_abs_diff_eq!(sol.x[1], 0.25, epsilon = 1e-8);
        assert_abs_diff_eq!(sol.objective_value, 0.75, epsilon = 1e-8);
    }

    #[test]
    fn unbounded_detected() {
        let mut lp = LinearProgram::new(2);
        lp.set_objective(vec![1.0, 0.0]);
        lp.add_ge(vec![1.0, 1.0], 1.0);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Unbounded);
    }

    #[test]
    fn free_variable_split() {
        // max -x with x free and x >= -5  => x = -5, value 5.
        let mut lp = LinearProgram::new(1);
        lp.set_objective(vec![-1.0]);
        lp.set_bounds(0, f64::NEG_INFINITY, f64::INFINITY);
        lp.add_ge(vec![1.0], -5.0);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_abs_diff_eq!(sol.x[0], -5.0, epsilon = 1e-8);
        assert_abs_diff_eq!(sol.objective_value, 5.0, epsilon = 1e-8);
    }

    #[test]
    fn upper_bounds_respected() {
        let mut lp = LinearProgram::new(2);
        lp.set_objective(vec![1.0, 1.0]);
        lp.set_bounds(0, 0.0, 0.3);
        lp.set_bounds(1, 0.0, 0.4);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_abs_diff_eq!(sol.objective_value, 0.7, epsilon = 1e-8);
    }

    #[test]
    fn degenerate_equalities_terminate() {
        // Paired inequalities make every vertex degenerate; Bland must exit.
        let mut lp = LinearProgram::new(3);
        lp.set_objective(vec![1.0, 2.0, 3.0]);
        lp.add_eq(vec![1.0, 1.0, 1.0], 1.0);
        lp.add_eq(vec![1.0, -1.0, 0.0], 0.0);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_abs_diff_eq!(sol.objective_value, 3.0, epsilon = 1e-8);
    }

    #[test]
    fn deterministic_resolve() {
        let mut lp = LinearProgram::new(4);
        lp.set_objective(vec![0.3, 1.1, 0.7, 0.2]);
        lp.add_le(vec![1.0, 2.0, 1.0, 0.5], 2.0);
        lp.add_le(vec![0.5, 0.1, 2.0, 1.0], 1.5);
        lp.add_eq(vec![1.0, 1.0, 1.0, 1.0], 1.0);
        let a = solve_lp(&lp).unwrap();
        let b = solve_lp(&lp).unwrap();
        assert_eq!(a.status, b.status);
        assert_eq!(a.x, b.x);
        assert_eq!(a.objective_value.to_bits(), b.objective_value.to_bits());
    }

    #[test]
    fn hoffman_small_matrices() {
        assert_abs_diff_eq!(hoffman_constant(&array![[1.0]]).unwrap(), 1.0, epsilon = 1e-8);
        // Subsets {1}, {2} each give 1; {1,2} is rank deficient.
        assert_abs_diff_eq!(
            hoffman_constant(&array![[1.0], [-1.0]]).unwrap(),
            1.0,
            epsilon = 1e-8
        );
        assert_abs_diff_eq!(hoffman_constant(&array![[2.0]]).unwrap(), 0.5, epsilon = 1e-8);
    }

    #[test]
    fn hoffman_cap_enforced() {
        let a = Array2::from_elem((13, 2), 1.0);
        assert!(matches!(
            hoffman_constant(&a),
            Err(Error::HoffmanCapExceeded { rows: 13, .. })
        ));
    }

    #[test]
    fn violation_examples() {
        let a = array![[1.0, 1.0], [-1.0, 0.0]];
        // Feasible point.
        assert_eq!(max_violation(&a, &[1.0, 0.0], &[0.2, 0.3]).unwrap(), 0.0);
        assert_abs_diff_eq!(
            max_violation(&array![[1.0]], &[0.0], &[3.0]).unwrap(),
            3.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            max_violation(&a, &[1.0, 0.0], &[1.0, 1.0]).unwrap(),
            1.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn dump_mentions_rows() {
        let mut lp = LinearProgram::new(2);
        lp.set_objective(vec![1.0, 0.0]);
        lp.add_le(vec![1.0, 1.0], 1.0);
        let text = lp.dump();
        assert!(text.contains("max 1 x0"));
        assert!(text.contains("<= 1"));
    }
}
