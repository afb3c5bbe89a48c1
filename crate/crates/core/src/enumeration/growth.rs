use super::EnumerationError;

/// Maximizer of the exponential base of the dominant one-foldable term for
/// `m = 2`, where `x` and `y` are the limiting densities of degree-3 and
/// degree-4 vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthPoint {
    pub x: f64,
    pub y: f64,
    pub base: f64,
    pub tolerance: f64,
}

/// `ln g(x, y)` where
/// `g = 3/s · (2s²/(3x(x+2y)))^x · (2s³/(9y(x+2y)²))^y` and `s = 1-2x-3y`.
/// Negative infinity outside the open region `x, y > 0`, `2x + 3y < 1`.
pub fn ln_growth_objective(x: f64, y: f64) -> f64 {
    let s = 1.0 - 2.0 * x - 3.0 * y;
    if !(x > 0.0 && y > 0.0 && s > 0.0) {
        return f64::NEG_INFINITY;
    }
    let ln = libm::log;
    let xy = x + 2.0 * y;
    ln(3.0) - ln(s)
        + x * (ln(2.0) + 2.0 * ln(s) - ln(3.0) - ln(x) - ln(xy))
        + y * (ln(2.0) + 3.0 * ln(s) - ln(9.0) - ln(y) - 2.0 * ln(xy))
}

pub fn growth_objective(x: f64, y: f64) -> f64 {
    libm::exp(ln_growth_objective(x, y))
}

const GRID: usize = 400;
const MAX_SWEEPS: usize = 100_000;
const LINE_TOL: f64 = 1e-15;

/// Maximizes [`growth_objective`]: the best point of a 400×400 grid over the
/// feasible region seeds `y`, then golden-section searches along `x` and `y`
/// alternate until a full sweep moves the base by less than `tolerance · 2^-20`.
pub fn one_fold_growth_rate(tolerance: f64) -> Result<GrowthPoint, EnumerationError> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(EnumerationError::InvalidTolerance(tolerance));
    }
    let mut x;
    let mut y = 0.0;
    let mut best = f64::NEG_INFINITY;
    for i in 0..GRID {
        for j in 0..GRID {
            let gx = 0.5 * (i as f64 + 0.5) / GRID as f64;
            let gy = (j as f64 + 0.5) / (3.0 * GRID as f64);
            let v = ln_growth_objective(gx, gy);
            if v > best {
                best = v;
                y = gy;
            }
        }
    }

    let stop = tolerance * libm::exp2(-20.0);
    let mut base = libm::exp(best);
    for _ in 0..MAX_SWEEPS {
        let x_hi = (1.0 - 3.0 * y) / 2.0;
        x = golden_max(|t| ln_growth_objective(t, y), 0.0, x_hi);
        let y_hi = (1.0 - 2.0 * x) / 3.0;
        y = golden_max(|t| ln_growth_objective(x, t), 0.0, y_hi);
        let next = growth_objective(x, y);
        let gain = next - base;
        base = next;
        if gain.abs() < stop {
            return Ok(GrowthPoint {
                x,
                y,
                base,
                tolerance,
            });
        }
    }
    Err(EnumerationError::NonConvergence {
        iterations: MAX_SWEEPS,
    })
}

/// Golden-section search for the maximizer of a unimodal `f` on `(lo, hi)`.
fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let inv_phi = (libm::sqrt(5.0) - 1.0) / 2.0;
    let mut a = hi - inv_phi * (hi - lo);
    let mut b = lo + inv_phi * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    while hi - lo > LINE_TOL {
        if fa < fb {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = f(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = f(a);
        }
    }
    (lo + hi) / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn objective_outside_region() {
        assert_eq!(ln_growth_objective(0.0, 0.1), f64::NEG_INFINITY);
        assert_eq!(ln_growth_objective(0.3, 0.2), f64::NEG_INFINITY);
    }

    #[test]
    fn optimum_beats_other_points() {
        let p = one_fold_growth_rate(libm::exp2(-25.0)).unwrap();
        assert!(growth_objective(0.1, 0.1) < p.base);
        assert!(growth_objective(0.2, 0.07) < p.base);
        assert!(p.x > 0.0 && p.y > 0.0 && 2.0 * p.x + 3.0 * p.y < 1.0);
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert!(one_fold_growth_rate(0.0).is_err());
        assert!(one_fold_growth_rate(f64::NAN).is_err());
    }
}
