//! Dense bounded-variable primal simplex.
//!
//! Solves `maximize c·x  s.t.  A x {<=,>=,=} b,  l <= x <= u` exactly, with a
//! deterministic pivot order: Dantzig pricing, falling back to Bland's rule
//! after a degenerate streak so the method cannot cycle. Phase 1 is the
//! composite variant (minimize total bound violation of the basic variables),
//! which needs no artificial columns.
//!
//! The tableau is a flat row-major `Vec<f64>` over structural variables plus
//! one logical (slack) column per row. Everything at desk scale fits in a few
//! tens of megabytes, and the dominant cost per pivot is one pass over the
//! tableau.

use thiserror::Error;

/// Feasibility tolerance on constraint/bound residuals.
pub const FEAS_TOL: f64 = 1e-9;
/// Reduced-cost (dual) tolerance.
pub const DUAL_TOL: f64 = 1e-9;
/// Pivot magnitudes below this are a numerical failure.
pub const MIN_PIVOT: f64 = 1e-12;

const RATE_EPS: f64 = 1e-11;
const DEGEN_STEP: f64 = 1e-10;
const BLAND_STREAK: usize = 40;
const REFRESH_EVERY: usize = 400;
// Phase-1 optima below this are treated as feasible; above it, infeasible.
const INFEAS_DECLARE: f64 = 1e-7;

/// Index of a variable in a [`LinearProgram`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Row {
    pub terms: Vec<(VarId, f64)>,
    pub rel: Relation,
    pub rhs: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Solver outcome. `x` and `objective` are meaningful only for `Optimal`;
/// on `Infeasible`/`Unbounded` the assignment is empty and the objective 0.
#[derive(Debug, Clone)]
pub struct LpSolution {
    pub status: LpStatus,
    pub x: Vec<f64>,
    pub objective: f64,
}

#[derive(Debug, Error)]
pub enum LpError {
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}

/// A linear program with bounded variables, maximization sense.
#[derive(Debug, Clone, Default)]
pub struct LinearProgram {
    bounds: Vec<(f64, f64)>,
    objective: Vec<f64>,
    rows: Vec<Row>,
}

impl LinearProgram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declare a variable with bounds `[lo, hi]` (infinities allowed).
    pub fn add_var(&mut self, lo: f64, hi: f64) -> VarId {
        assert!(!lo.is_nan() && !hi.is_nan(), "NaN bound");
        assert!(lo <= hi, "lower bound {lo} exceeds upper bound {hi}");
        self.bounds.push((lo, hi));
        self.objective.push(0.0);
        VarId(self.bounds.len() - 1)
    }

    pub fn set_objective(&mut self, var: VarId, coeff: f64) {
        assert!(coeff.is_finite(), "non-finite objective coefficient");
        self.objective[var.0] = coeff;
    }

    pub fn add_row(&mut self, terms: Vec<(VarId, f64)>, rel: Relation, rhs: f64) {
        assert!(rhs.is_finite(), "non-finite rhs");
        for &(v, c) in &terms {
            assert!(v.0 < self.bounds.len(), "row references undeclared variable");
            assert!(c.is_finite(), "non-finite row coefficient");
        }
        self.rows.push(Row { terms, rel, rhs });
    }

    pub fn num_vars(&self) -> usize {
        self.bounds.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn bounds(&self, var: VarId) -> (f64, f64) {
        self.bounds[var.0]
    }

    pub fn set_bounds(&mut self, var: VarId, lo: f64, hi: f64) {
        assert!(lo <= hi, "lower bound {lo} exceeds upper bound {hi}");
        self.bounds[var.0] = (lo, hi);
    }

    pub fn objective_coeff(&self, var: VarId) -> f64 {
        self.objective[var.0]
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Evaluate `c·x` for an assignment over the structural variables.
    pub fn objective_value(&self, x: &[f64]) -> f64 {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    /// Largest constraint/bound violation of an assignment. Used by callers
    /// that re-check solutions independently of the simplex internals.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let mut worst: f64 = 0.0;
        for (j, &(lo, hi)) in self.bounds.iter().enumerate() {
            worst = worst.max(lo - x[j]).max(x[j] - hi);
        }
        for row in &self.rows {
            let lhs: f64 = row.terms.iter().map(|&(v, c)| c * x[v.0]).sum();
            let r = match row.rel {
                Relation::Le => lhs - row.rhs,
                Relation::Ge => row.rhs - lhs,
                Relation::Eq => (lhs - row.rhs).abs(),
            };
            worst = worst.max(r);
        }
        worst
    }

    /// Exact optimum via bounded-variable primal simplex. Deterministic:
    /// identical inputs produce identical solutions.
    pub fn solve(&self) -> Result<LpSolution, LpError> {
        Simplex::new(self).run()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum NbState {
    AtLower,
    AtUpper,
    /// Free variable parked at zero.
    AtZero,
    Basic,
}

struct Simplex<'a> {
    lp: &'a LinearProgram,
    m: usize,
    n_struct: usize,
    ncols: usize,
    lo: Vec<f64>,
    hi: Vec<f64>,
    obj: Vec<f64>,
    /// Row-major tableau, `m x ncols`: current B^-1 A.
    w: Vec<f64>,
    rhs: Vec<f64>,
    basis: Vec<usize>,
    state: Vec<NbState>,
    /// Current values of nonbasic variables (basics tracked in `beta`).
    x: Vec<f64>,
    beta: Vec<f64>,
    zrow: Vec<f64>,
    iters: usize,
    degen_streak: usize,
}

enum Pricing {
    Dantzig,
    Bland,
}

impl<'a> Simplex<'a> {
    fn new(lp: &'a LinearProgram) -> Self {
        let m = lp.rows.len();
        let n_struct = lp.bounds.len();
        let ncols = n_struct + m;
        let mut lo = Vec::with_capacity(ncols);
        let mut hi = Vec::with_capacity(ncols);
        for &(l, h) in &lp.bounds {
            lo.push(l);
            hi.push(h);
        }
        for row in &lp.rows {
            // slack s with  a.x + s = b
            let (l, h) = match row.rel {
                Relation::Le => (0.0, f64::INFINITY),
                Relation::Ge => (f64::NEG_INFINITY, 0.0),
                Relation::Eq => (0.0, 0.0),
            };
            lo.push(l);
            hi.push(h);
        }
        let mut obj = vec![0.0; ncols];
        obj[..n_struct].copy_from_slice(&lp.objective);

        let mut w = vec![0.0; m * ncols];
        let mut rhs = vec![0.0; m];
        for (i, row) in lp.rows.iter().enumerate() {
            let base = i * ncols;
            for &(v, c) in &row.terms {
                w[base + v.0] += c;
            }
            w[base + n_struct + i] = 1.0;
            rhs[i] = row.rhs;
        }

        let mut state = vec![NbState::Basic; ncols];
        let mut x = vec![0.0; ncols];
        for j in 0..n_struct {
            let (s, v) = start_bound(lo[j], hi[j]);
            state[j] = s;
            x[j] = v;
        }
        let basis: Vec<usize> = (0..m).map(|i| n_struct + i).collect();
        let mut beta = vec![0.0; m];
        for i in 0..m {
            let base = i * ncols;
            let mut v = rhs[i];
            for j in 0..n_struct {
                if x[j] != 0.0 {
                    v -= w[base + j] * x[j];
                }
            }
            beta[i] = v;
        }

        Simplex {
            lp,
            m,
            n_struct,
            ncols,
            lo,
            hi,
            obj,
            w,
            rhs,
            basis,
            state,
            x,
            beta,
            zrow: vec![0.0; ncols],
            iters: 0,
            degen_streak: 0,
        }
    }

    fn run(mut self) -> Result<LpSolution, LpError> {
        let max_iters = 20_000 + 40 * (self.m + self.ncols);

        // Phase 1: drive basic variables inside their bounds.
        loop {
            let f = self.infeasibility();
            if f <= FEAS_TOL {
                break;
            }
            if self.iters >= max_iters {
                return Err(LpError::NumericalFailure(format!(
                    "phase-1 iteration limit ({max_iters}) reached"
                )));
            }
            let d1 = self.phase1_costs();
            let pricing = self.pricing_mode();
            let Some((jc, dir)) = self.pick_entering_phase1(&d1, pricing) else {
                if f > INFEAS_DECLARE {
                    return Ok(LpSolution {
                        status: LpStatus::Infeasible,
                        x: Vec::new(),
                        objective: 0.0,
                    });
                }
                break; // tiny residual infeasibility: accept and move on
            };
            self.step(jc, dir, true)?;
        }

        // Phase 2: optimize.
        self.refresh_zrow();
        loop {
            if self.iters >= max_iters {
                return Err(LpError::NumericalFailure(format!(
                    "phase-2 iteration limit ({max_iters}) reached"
                )));
            }
            if self.iters % REFRESH_EVERY == REFRESH_EVERY - 1 {
                self.refresh_beta();
                self.refresh_zrow();
            }
            let pricing = self.pricing_mode();
            let Some((jc, dir)) = self.pick_entering_phase2(pricing) else {
                return self.extract();
            };
            match self.step(jc, dir, false)? {
                StepOutcome::Moved => {}
                StepOutcome::Unbounded => {
                    return Ok(LpSolution {
                        status: LpStatus::Unbounded,
                        x: Vec::new(),
                        objective: 0.0,
                    });
                }
            }
        }
    }

    fn pricing_mode(&self) -> Pricing {
        if self.degen_streak > BLAND_STREAK {
            Pricing::Bland
        } else {
            Pricing::Dantzig
        }
    }

    fn infeasibility(&self) -> f64 {
        let mut f = 0.0;
        for i in 0..self.m {
            let v = self.beta[i];
            let b = self.basis[i];
            if v < self.lo[b] {
                f += self.lo[b] - v;
            } else if v > self.hi[b] {
                f += v - self.hi[b];
            }
        }
        f
    }

    /// Phase-1 reduced costs: d1[j] = -sum_i sigma_i W[i][j], the derivative
    /// of total infeasibility per unit increase of x_j.
    fn phase1_costs(&self) -> Vec<f64> {
        let mut d1 = vec![0.0; self.ncols];
        for i in 0..self.m {
            let b = self.basis[i];
            let sigma = if self.beta[i] < self.lo[b] - FEAS_TOL {
                -1.0
            } else if self.beta[i] > self.hi[b] + FEAS_TOL {
                1.0
            } else {
                continue;
            };
            let base = i * self.ncols;
            let row = &self.w[base..base + self.ncols];
            if sigma > 0.0 {
                for (j, wv) in row.iter().enumerate() {
                    d1[j] -= wv;
                }
            } else {
                for (j, wv) in row.iter().enumerate() {
                    d1[j] += wv;
                }
            }
        }
        d1
    }

    fn pick_entering_phase1(&self, d1: &[f64], pricing: Pricing) -> Option<(usize, i8)> {
        let mut best: Option<(usize, i8, f64)> = None;
        for j in 0..self.ncols {
            let dir = match self.state[j] {
                NbState::Basic => continue,
                NbState::AtLower => {
                    if self.lo[j] == self.hi[j] {
                        continue;
                    }
                    if d1[j] < -DUAL_TOL {
                        1
                    } else {
                        continue;
                    }
                }
                NbState::AtUpper => {
                    if d1[j] > DUAL_TOL {
                        -1
                    } else {
                        continue;
                    }
                }
                NbState::AtZero => {
                    if d1[j] < -DUAL_TOL {
                        1
                    } else if d1[j] > DUAL_TOL {
                        -1
                    } else {
                        continue;
                    }
                }
            };
            match pricing {
                Pricing::Bland => return Some((j, dir)),
                Pricing::Dantzig => {
                    let score = d1[j].abs();
                    if best.map_or(true, |(_, _, s)| score > s) {
                        best = Some((j, dir, score));
                    }
                }
            }
        }
        best.map(|(j, d, _)| (j, d))
    }

    fn pick_entering_phase2(&self, pricing: Pricing) -> Option<(usize, i8)> {
        let mut best: Option<(usize, i8, f64)> = None;
        for j in 0..self.ncols {
            let d = self.zrow[j];
            let dir = match self.state[j] {
                NbState::Basic => continue,
                NbState::AtLower => {
                    if self.lo[j] == self.hi[j] {
                        continue;
                    }
                    if d > DUAL_TOL {
                        1
                    } else {
                        continue;
                    }
                }
                NbState::AtUpper => {
                    if d < -DUAL_TOL {
                        -1
                    } else {
                        continue;
                    }
                }
                NbState::AtZero => {
                    if d > DUAL_TOL {
                        1
                    } else if d < -DUAL_TOL {
                        -1
                    } else {
                        continue;
                    }
                }
            };
            match pricing {
                Pricing::Bland => return Some((j, dir)),
                Pricing::Dantzig => {
                    let score = d.abs();
                    if best.map_or(true, |(_, _, s)| score > s) {
                        best = Some((j, dir, score));
                    }
                }
            }
        }
        best.map(|(j, d, _)| (j, d))
    }

    /// Ratio test + pivot (or bound flip). `phase1` relaxes blocking so that
    /// infeasible basics block at the bound they are approaching.
    fn step(&mut self, jc: usize, dir: i8, phase1: bool) -> Result<StepOutcome, LpError> {
        self.iters += 1;
        let dirf = dir as f64;
        // Own-span limit (bound flip distance).
        let span = match self.state[jc] {
            NbState::AtLower => self.hi[jc] - self.lo[jc],
            NbState::AtUpper => self.hi[jc] - self.lo[jc],
            NbState::AtZero => f64::INFINITY,
            NbState::Basic => unreachable!(),
        };

        let mut best_delta = span;
        let mut best_row: Option<usize> = None;
        let mut best_pivot = 0.0f64;
        for i in 0..self.m {
            let wv = self.w[i * self.ncols + jc];
            let rate = -wv * dirf; // d beta_i / d delta
            if rate.abs() <= RATE_EPS {
                continue;
            }
            let b = self.basis[i];
            let (bl, bh) = (self.lo[b], self.hi[b]);
            let v = self.beta[i];
            let delta_i = if phase1 && v < bl - FEAS_TOL {
                // Below its lower bound: blocks when it reaches that bound.
                if rate > 0.0 {
                    (bl - v) / rate
                } else {
                    continue;
                }
            } else if phase1 && v > bh + FEAS_TOL {
                if rate < 0.0 {
                    (v - bh) / -rate
                } else {
                    continue;
                }
            } else if rate > 0.0 {
                if bh.is_finite() {
                    (bh - v) / rate
                } else {
                    continue;
                }
            } else if bl.is_finite() {
                (v - bl) / -rate
            } else {
                continue;
            };
            let delta_i = delta_i.max(0.0);
            let tie = 1e-9 * (1.0 + best_delta.min(delta_i).abs());
            if delta_i < best_delta - tie {
                best_delta = delta_i;
                best_row = Some(i);
                best_pivot = wv.abs();
            } else if best_row.is_some() && delta_i <= best_delta + tie && wv.abs() > best_pivot {
                // Among ties prefer the numerically safest pivot.
                best_row = Some(i);
                best_pivot = wv.abs();
                best_delta = best_delta.min(delta_i);
            }
        }

        match best_row {
            None => {
                if !span.is_finite() {
                    return Ok(StepOutcome::Unbounded);
                }
                self.bound_flip(jc, dir, span);
                self.degen_streak = 0;
                Ok(StepOutcome::Moved)
            }
            Some(r) => {
                if best_delta > span {
                    // own bound reached first
                    self.bound_flip(jc, dir, span);
                    self.degen_streak = 0;
                    return Ok(StepOutcome::Moved);
                }
                let pivot = self.w[r * self.ncols + jc];
                if pivot.abs() < MIN_PIVOT {
                    return Err(LpError::NumericalFailure(format!(
                        "pivot magnitude {:.3e} below {MIN_PIVOT:.0e}",
                        pivot.abs()
                    )));
                }
                if best_delta <= DEGEN_STEP {
                    self.degen_streak += 1;
                } else {
                    self.degen_streak = 0;
                }
                self.pivot(r, jc, dir, best_delta);
                Ok(StepOutcome::Moved)
            }
        }
    }

    fn bound_flip(&mut self, jc: usize, dir: i8, span: f64) {
        let dirf = dir as f64;
        for i in 0..self.m {
            let wv = self.w[i * self.ncols + jc];
            if wv != 0.0 {
                self.beta[i] -= wv * dirf * span;
            }
        }
        self.state[jc] = match dir {
            1 => NbState::AtUpper,
            _ => NbState::AtLower,
        };
        self.x[jc] = if dir == 1 { self.hi[jc] } else { self.lo[jc] };
    }

    fn pivot(&mut self, r: usize, jc: usize, dir: i8, delta: f64) {
        let dirf = dir as f64;
        let entering_val = self.x[jc] + dirf * delta;
        // Move all basics, then install the entering variable in row r.
        for i in 0..self.m {
            let wv = self.w[i * self.ncols + jc];
            if wv != 0.0 {
                self.beta[i] -= wv * dirf * delta;
            }
        }
        let leaving = self.basis[r];
        // Snap the leaving variable onto the bound it hit.
        let lv = self.beta[r];
        let (bl, bh) = (self.lo[leaving], self.hi[leaving]);
        let (snap, st) = if (lv - bl).abs() <= (lv - bh).abs() {
            (bl, NbState::AtLower)
        } else {
            (bh, NbState::AtUpper)
        };
        let st = if bl.is_infinite() && bh.is_infinite() {
            self.x[leaving] = lv;
            NbState::AtZero
        } else {
            self.x[leaving] = snap;
            st
        };
        self.state[leaving] = st;

        // Eliminate column jc from every other row.
        let p = self.w[r * self.ncols + jc];
        let (before, rest) = self.w.split_at_mut(r * self.ncols);
        let (prow, after) = rest.split_at_mut(self.ncols);
        let inv = 1.0 / p;
        for v in prow.iter_mut() {
            *v *= inv;
        }
        let rrhs = self.rhs[r] * inv;
        self.rhs[r] = rrhs;
        let elim = |rows: &mut [f64], rhs: &mut [f64], off: usize| {
            for (bi, chunk) in rows.chunks_exact_mut(prow.len()).enumerate() {
                let f = chunk[jc];
                if f != 0.0 {
                    for (cv, pv) in chunk.iter_mut().zip(prow.iter()) {
                        *cv -= f * pv;
                    }
                    chunk[jc] = 0.0;
                    rhs[off + bi] -= f * rrhs;
                }
            }
        };
        elim(before, &mut self.rhs, 0);
        elim(after, &mut self.rhs, r + 1);
        let zf = self.zrow[jc];
        if zf != 0.0 {
            for (zv, pv) in self.zrow.iter_mut().zip(prow.iter()) {
                *zv -= zf * pv;
            }
            self.zrow[jc] = 0.0;
        }

        self.basis[r] = jc;
        self.state[jc] = NbState::Basic;
        self.beta[r] = entering_val;
    }

    fn refresh_zrow(&mut self) {
        self.zrow.copy_from_slice(&self.obj);
        for i in 0..self.m {
            let cb = self.obj[self.basis[i]];
            if cb != 0.0 {
                let base = i * self.ncols;
                for j in 0..self.ncols {
                    self.zrow[j] -= cb * self.w[base + j];
                }
            }
        }
        for i in 0..self.m {
            self.zrow[self.basis[i]] = 0.0;
        }
    }

    fn refresh_beta(&mut self) {
        // beta = (current rhs) - sum over nonbasic j of W_j x_j
        for i in 0..self.m {
            let base = i * self.ncols;
            let mut v = self.rhs[i];
            for j in 0..self.ncols {
                if self.state[j] != NbState::Basic && self.x[j] != 0.0 {
                    v -= self.w[base + j] * self.x[j];
                }
            }
            self.beta[i] = v;
        }
    }

    fn extract(mut self) -> Result<LpSolution, LpError> {
        self.refresh_beta();
        for i in 0..self.m {
            self.x[self.basis[i]] = self.beta[i];
        }
        let x: Vec<f64> = self.x[..self.n_struct].to_vec();
        let worst = self.lp.max_violation(&x);
        if worst > 1e-6 {
            return Err(LpError::NumericalFailure(format!(
                "optimal basis violates constraints by {worst:.3e}"
            )));
        }
        let objective = self.lp.objective_value(&x);
        Ok(LpSolution {
            status: LpStatus::Optimal,
            x,
            objective,
        })
    }
}

enum StepOutcome {
    Moved,
    Unbounded,
}

fn start_bound(lo: f64, hi: f64) -> (NbState, f64) {
    match (lo.is_finite(), hi.is_finite()) {
        (true, true) => {
            if lo.abs() <= hi.abs() {
                (NbState::AtLower, lo)
            } else {
                (NbState::AtUpper, hi)
            }
        }
        (true, false) => (NbState::AtLower, lo),
        (false, true) => (NbState::AtUpper, hi),
        (false, false) => (NbState::AtZero, 0.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(lp: &LinearProgram) -> LpSolution {
        lp.solve().expect("solver failed")
    }

    #[test]
    fn single_var_upper_row() {
        let mut lp = LinearProgram::new();
        let x = lp.add_var(0.0, 10.0);
        lp.set_objective(x, 1.0);
        lp.add_row(vec![(x, 1.0)], Relation::Le, 3.0);
        let s = solve(&lp);
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.x[0] - 3.0).abs() < 1e-9);
        assert!((s.objective - 3.0).abs() < 1e-9);
    }

    #[test]
    fn contradictory_rows_infeasible() {
        let mut lp = LinearProgram::new();
        let x = lp.add_var(0.0, 10.0);
        lp.set_objective(x, 1.0);
        lp.add_row(vec![(x, 1.0)], Relation::Ge, 2.0);
        lp.add_row(vec![(x, 1.0)], Relation::Le, 1.0);
        let s = solve(&lp);
        assert_eq!(s.status, LpStatus::Infeasible);
    }

    #[test]
    fn two_var_vertex() {
        // maximize x+y s.t. x+2y <= 4, 3x+y <= 6, x,y >= 0 -> 14/5 at (8/5, 6/5)
        let mut lp = LinearProgram::new();
        let x = lp.add_var(0.0, f64::INFINITY);
        let y = lp.add_var(0.0, f64::INFINITY);
        lp.set_objective(x, 1.0);
        lp.set_objective(y, 1.0);
        lp.add_row(vec![(x, 1.0), (y, 2.0)], Relation::Le, 4.0);
        lp.add_row(vec![(x, 3.0), (y, 1.0)], Relation::Le, 6.0);
        let s = solve(&lp);
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.objective - 14.0 / 5.0).abs() < 1e-9);
        assert!((s.x[0] - 8.0 / 5.0).abs() < 1e-9);
        assert!((s.x[1] - 6.0 / 5.0).abs() < 1e-9);
    }

    #[test]
    fn unbounded_detected() {
        let mut lp = LinearProgram::new();
        let x = lp.add_var(0.0, f64::INFINITY);
        let y = lp.add_var(0.0, f64::INFINITY);
        lp.set_objective(x, 1.0);
        lp.add_row(vec![(x, 1.0), (y, -1.0)], Relation::Le, 1.0);
        let s = solve(&lp);
        assert_eq!(s.status, LpStatus::Unbounded);
    }

    #[test]
    fn equality_rows_and_negative_bounds() {
        // maximize x - y s.t. x + y = 1, x - y >= -2, x in [-5, 5], y in [-5, 5]
        let mut lp = LinearProgram::new();
        let x = lp.add_var(-5.0, 5.0);
        let y = lp.add_var(-5.0, 5.0);
        lp.set_objective(x, 1.0);
        lp.set_objective(y, -1.0);
        lp.add_row(vec![(x, 1.0), (y, 1.0)], Relation::Eq, 1.0);
        lp.add_row(vec![(x, 1.0), (y, -1.0)], Relation::Ge, -2.0);
        let s = solve(&lp);
        assert_eq!(s.status, LpStatus::Optimal);
        // best: x = 5, y = -4 -> obj 9
        assert!((s.objective - 9.0).abs() < 1e-9);
    }

    #[test]
    fn fixed_variables_respected() {
        let mut lp = LinearProgram::new();
        let x = lp.add_var(2.0, 2.0);
        let y = lp.add_var(0.0, 10.0);
        lp.set_objective(y, 1.0);
        lp.add_row(vec![(x, 1.0), (y, 1.0)], Relation::Le, 5.0);
        let s = solve(&lp);
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.x[0] - 2.0).abs() < 1e-12);
        assert!((s.x[1] - 3.0).abs() < 1e-9);
    }

    #[test]
    fn deterministic_resolve() {
        let mut lp = LinearProgram::new();
        let vars: Vec<_> = (0..6).map(|_| lp.add_var(0.0, 3.0)).collect();
        for (k, &v) in vars.iter().enumerate() {
            lp.set_objective(v, 1.0 + 0.1 * k as f64);
        }
        lp.add_row(vars.iter().map(|&v| (v, 1.0)).collect(), Relation::Le, 7.0);
        lp.add_row(
            vars.iter().enumerate().map(|(k, &v)| (v, (k % 3) as f64)).collect(),
            Relation::Le,
            5.0,
        );
        let a = solve(&lp);
        let b = solve(&lp);
        assert_eq!(a.status, b.status);
        assert_eq!(a.objective.to_bits(), b.objective.to_bits());
        for (u, v) in a.x.iter().zip(&b.x) {
            assert_eq!(u.to_bits(), v.to_bits());
        }
    }

    #[test]
    fn no_rows_picks_best_bounds() {
        let mut lp = LinearProgram::new();
        let x = lp.add_var(-1.0, 2.0);
        let y = lp.add_var(-3.0, 1.0);
        lp.set_objective(x, 2.0);
        lp.set_objective(y, -1.0);
        let s = solve(&lp);
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.objective - (2.0 * 2.0 + 3.0)).abs() < 1e-12);
    }
}
