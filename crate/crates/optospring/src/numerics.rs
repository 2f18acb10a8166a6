//! Small numeric utilities: bracketed bisection and a ternary minimum search.

/// Bisection iteration cap.
pub const BISECT_MAX_ITER: usize = 80;
/// Relative x-tolerance for bisection.
pub const BISECT_REL_TOL: f64 = 1e-12;
/// Bracket-scan density, points per decade.
pub const SCAN_PER_DECADE: usize = 256;

/// Root of `f` inside `[lo, hi]` by bisection; requires a sign change over
/// the bracket. Returns `None` when the bracket does not straddle a root.
pub fn bisect_root<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, rel_tol: f64) -> Option<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if flo.signum() == fhi.signum() {
        return None;
    }
    for _ in 0..BISECT_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 || (hi - lo) <= rel_tol * mid.abs() {
            return Some(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Geometric scan grid over `[lo, hi]` at `SCAN_PER_DECADE` points per decade.
pub fn geometric_scan(lo: f64, hi: f64) -> Vec<f64> {
    let decades = (hi / lo).log10().max(1e-9);
    let n = ((decades * SCAN_PER_DECADE as f64).ceil() as usize).max(8) + 1;
    let (l0, l1) = (lo.ln(), hi.ln());
    let step = (l1 - l0) / (n - 1) as f64;
    (0..n).map(|i| (l0 + step * i as f64).exp()).collect()
}

/// Ternary search for a local minimum of a unimodal `f` on `[lo, hi]`.
pub fn ternary_min<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> (f64, f64) {
    for _ in 0..200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1) <= f(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
        if (hi - lo) <= 1e-14 * hi.abs() {
            break;
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}
