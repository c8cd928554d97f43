//! Small dense Gauss–Newton solver with a forward-difference Jacobian.

/// Minimises `Σ r_i(x)^2` starting from `x0`. Returns the final point and the
/// largest absolute residual there.
pub(crate) fn gauss_newton<F>(mut x: Vec<f64>, residuals: F, iterations: usize) -> (Vec<f64>, f64)
where
    F: Fn(&[f64]) -> Option<Vec<f64>>,
{
    let n = x.len();
    let worst = |r: &[f64]| r.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut r = match residuals(&x) {
        Some(r) => r,
        None => return (x, f64::INFINITY),
    };
    for _ in 0..iterations {
        if worst(&r) < 1e-14 {
            break;
        }
        let m = r.len();
        let mut jac = vec![vec![0.0; n]; m];
        for j in 0..n {
            let h = 1e-7 * (1.0 + x[j].abs());
            let mut xp = x.clone();
            xp[j] += h;
            let rp = match residuals(&xp) {
                Some(v) => v,
                None => {
                    xp[j] = x[j] - h;
                    match residuals(&xp) {
                        Some(v) => v,
                        None => return (x, worst(&r)),
                    }
                }
            };
            let dx = xp[j] - x[j];
            for i in 0..m {
                jac[i][j] = (rp[i] - r[i]) / dx;
            }
        }
        // normal equations JᵀJ δ = -Jᵀr
        let mut a = vec![vec![0.0; n + 1]; n];
        for p in 0..n {
            for q in 0..n {
                a[p][q] = (0..m).map(|i| jac[i][p] * jac[i][q]).sum();
            }
            a[p][n] = -(0..m).map(|i| jac[i][p] * r[i]).sum::<f64>();
        }
        let delta = match solve_linear(a) {
            Some(d) => d,
            None => break,
        };
        // backtracking so that every step reduces the residual
        let current = r.iter().map(|v| v * v).sum::<f64>();
        let mut step = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let trial: Vec<f64> = x.iter().zip(&delta).map(|(a, d)| a + step * d).collect();
            if let Some(rt) = residuals(&trial) {
                if rt.iter().map(|v| v * v).sum::<f64>() < current {
                    x = trial;
                    r = rt;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    let w = worst(&r);
    (x, w)
}

/// Gaussian elimination with partial pivoting on an augmented `n × (n+1)` matrix.
pub(crate) fn solve_linear(mut a: Vec<Vec<f64>>) -> Option<Vec<f64>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..=n {
                a[row][k] -= f * a[col][k];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (a[row][n] - s) / a[row][row];
    }
    Some(x)
}
