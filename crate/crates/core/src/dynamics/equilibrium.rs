use crate::credit::{pure_strategy_payoffs, GameParams, PayoffMode, PopulationState};

const SEEDS_PER_AXIS: usize = 9;
const MAX_NEWTON_ITERS: usize = 100;
const ROOT_TOL: f64 = 1e-9;
/// Roots closer than this to an edge are boundary equilibria, not interior ones.
const EDGE_MARGIN: f64 = 1e-6;
/// Below this Jacobian determinant the root is not isolated.
const MIN_JACOBIAN_DET: f64 = 1e-10;
const FD_STEP: f64 = 1e-6;

/// Payoff advantage of the I-norm for each population,
/// `(pi_j(I) - pi_j(C), pi_s(I) - pi_s(C))`.
pub fn payoff_advantage(state: PopulationState, params: &GameParams, mode: PayoffMode) -> (f64, f64) {
    let p = pure_strategy_payoffs(state, params, mode);
    (p.junior_advantage(), p.senior_advantage())
}

fn jacobian(state: PopulationState, params: &GameParams, mode: PayoffMode) -> [[f64; 2]; 2] {
    let g = |p_j: f64, p_s: f64| payoff_advantage(PopulationState::clamped(p_j, p_s), params, mode);
    let h = FD_STEP;
    let (jp, jm) = (g(state.p_j + h, state.p_s), g(state.p_j - h, state.p_s));
    let (sp, sm) = (g(state.p_j, state.p_s + h), g(state.p_j, state.p_s - h));
    [
        [(jp.0 - jm.0) / (2.0 * h), (sp.0 - sm.0) / (2.0 * h)],
        [(jp.1 - jm.1) / (2.0 * h), (sp.1 - sm.1) / (2.0 * h)],
    ]
}

fn newton(seed: PopulationState, params: &GameParams, mode: PayoffMode) -> Option<PopulationState> {
    let residual = |s: PopulationState| {
        let (a, b) = payoff_advantage(s, params, mode);
        a.hypot(b)
    };
    let mut state = seed;
    let mut r = residual(state);
    for _ in 0..MAX_NEWTON_ITERS {
        if r < ROOT_TOL * 1e-3 {
            break;
        }
        let (g0, g1) = payoff_advantage(state, params, mode);
        let j = jacobian(state, params, mode);
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det.abs() < 1e-300 {
            return None;
        }
        let dj = (j[1][1] * g0 - j[0][1] * g1) / det;
        let ds = (j[0][0] * g1 - j[1][0] * g0) / det;

        // backtrack until the residual decreases
        let mut lambda = 1.0;
        let mut improved = false;
        while lambda > 1e-6 {
            let trial = PopulationState::clamped(state.p_j - lambda * dj, state.p_s - lambda * ds);
            let rt = residual(trial);
            if rt < r {
                state = trial;
                r = rt;
                improved = true;
                break;
            }
            lambda *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (r <= ROOT_TOL).then_some(state)
}

/// Isolated root of the payoff-advantage system strictly inside the unit
/// square, located by damped Newton from a grid of seeds.
///
/// Returns `None` when no isolated interior root exists. Without community
/// bias the equilibria form continua along `p_j = 0` and `p_s = 1`, so that
/// regime yields `None`.
pub fn find_interior_equilibrium(params: &GameParams, mode: PayoffMode) -> Option<PopulationState> {
    let mut roots: Vec<PopulationState> = Vec::new();
    for i in 0..SEEDS_PER_AXIS {
        for k in 0..SEEDS_PER_AXIS {
            let seed = PopulationState {
                p_j: (i as f64 + 0.5) / SEEDS_PER_AXIS as f64,
                p_s: (k as f64 + 0.5) / SEEDS_PER_AXIS as f64,
            };
            let Some(root) = newton(seed, params, mode) else {
                continue;
            };
            let inside = |x: f64| x > EDGE_MARGIN && x < 1.0 - EDGE_MARGIN;
            if !(inside(root.p_j) && inside(root.p_s)) {
                continue;
            }
            let j = jacobian(root, params, mode);
            if (j[0][0] * j[1][1] - j[0][1] * j[1][0]).abs() < MIN_JACOBIAN_DET {
                continue;
            }
            if !roots
                .iter()
                .any(|r| (r.p_j - root.p_j).abs() < 1e-6 && (r.p_s - root.p_s).abs() < 1e-6)
            {
                roots.push(root);
            }
        }
    }
    roots.sort_by(|a, b| a.p_j.total_cmp(&b.p_j).then(a.p_s.total_cmp(&b.p_s)));
    roots.into_iter().next()
}
