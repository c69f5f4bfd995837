//! Independent numerical checks for the kernel's closed forms.
//!
//! Every oracle here recomputes a quantity by quadrature, ODE integration
//! or finite differences, without calling the closed-form function it is
//! meant to validate. The suite pairs each oracle with its closed form and
//! reports agreement; the binary exposes it as the `verify` subcommand.
//!
//! Error control: curvature estimates carry a truncation bound obtained by
//! Richardson comparison of two step sizes plus a rounding floor for the
//! second difference; quadratures are run at two node counts. An oracle
//! whose own bound exceeds the requested tolerance refuses to answer
//! (`Error::Inconclusive`) instead of returning a number it cannot back.

use crate::estimates::hyperbolic_ball_area;
use crate::hyperbolic::{
    collar_area, equidistant_point, equidistant_total_curvature, geodesic, parallel_transport,
    BoundaryCurve, HyperbolicPoint, LorentzVector, TangentVector,
};
use crate::{Error, Result};

/// Value together with the oracle's own bound on its numerical error.
#[derive(Clone, Copy, Debug)]
pub struct OracleEstimate {
    pub value: f64,
    pub error_bound: f64,
}

// ---------------------------------------------------------------------------
// Gauss-Legendre quadrature
// ---------------------------------------------------------------------------

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// by Newton iteration on the Legendre recurrence.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            // Legendre value p and derivative dp at x.
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0, x);
        for k in 2..=n {
            let k = k as f64;
            let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn integrate_gl(n: usize, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
    let (nodes, weights) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    nodes
        .iter()
        .zip(&weights)
        .map(|(x, w)| w * f(mid + half * x))
        .sum::<f64>()
        * half
}

// ---------------------------------------------------------------------------
// Constant-curvature arcs by Frenet integration
// ---------------------------------------------------------------------------

/// Frenet frame along a unit-speed curve on the hyperboloid: position,
/// unit tangent, unit normal.
#[derive(Clone, Copy)]
struct Frame {
    alpha: LorentzVector,
    tan: LorentzVector,
    nor: LorentzVector,
}

/// System `alpha' = T`, `T' = alpha + kappa N`, `N' = -kappa T`.
fn frame_derivative(f: &Frame, kappa: f64) -> Frame {
    Frame {
        alpha: f.tan,
        tan: f.alpha + f.nor * kappa,
        nor: f.tan * (-kappa),
    }
}

fn frame_axpy(f: &Frame, d: &Frame, h: f64) -> Frame {
    Frame {
        alpha: f.alpha + d.alpha * h,
        tan: f.tan + d.tan * h,
        nor: f.nor + d.nor * h,
    }
}

fn rk4_step(f: &Frame, kappa: f64, h: f64) -> Frame {
    let k1 = frame_derivative(f, kappa);
    let k2 = frame_derivative(&frame_axpy(f, &k1, h / 2.0), kappa);
    let k3 = frame_derivative(&frame_axpy(f, &k2, h / 2.0), kappa);
    let k4 = frame_derivative(&frame_axpy(f, &k3, h), kappa);
    let mut out = frame_axpy(f, &k1, h / 6.0);
    out = frame_axpy(&out, &k2, h / 3.0);
    out = frame_axpy(&out, &k3, h / 3.0);
    frame_axpy(&out, &k4, h / 6.0)
}

/// Integrates the constant-curvature Frenet system from the sheet vertex to
/// arc length `s` (either sign) with steps no larger than `step`.
fn constant_curvature_frame(kappa: f64, s: f64, step: f64) -> Frame {
    let mut frame = Frame {
        alpha: LorentzVector::new(0.0, 0.0, 1.0),
        tan: LorentzVector::new(1.0, 0.0, 0.0),
        nor: LorentzVector::new(0.0, 1.0, 0.0),
    };
    if s == 0.0 {
        return frame;
    }
    let n = (s.abs() / step).ceil().max(1.0) as usize;
    let h = s / n as f64;
    for _ in 0..n {
        frame = rk4_step(&frame, kappa, h);
    }
    frame
}

/// Pushes the arc point at arc length `s` to distance `r` along the frame
/// normal.
fn pushed_arc_point(kappa: f64, s: f64, r: f64, step: f64) -> Result<LorentzVector> {
    let frame = constant_curvature_frame(kappa, s, step);
    let base = HyperbolicPoint::renormalized(frame.alpha)?;
    let tan_unit = frame.tan * (1.0 / frame.tan.lorentz_norm_sq().sqrt());
    let tangent = TangentVector::new(base, tan_unit)?;
    Ok(equidistant_point(&tangent, r)?.position())
}

/// Signed geodesic curvature of a parameterized hyperboloid curve from
/// three samples at parameter spacing `h`, by central differences:
/// project the second difference to the tangent plane and pair with the
/// quarter-turn normal of the velocity.
fn curvature_from_samples(qm: &LorentzVector, q0: &LorentzVector, qp: &LorentzVector, h: f64) -> f64 {
    let vel = (*qp - *qm) * (1.0 / (2.0 * h));
    let acc = (*qp - *q0 * 2.0 + *qm) * (1.0 / (h * h));
    let acc_tangent = acc + *q0 * q0.lorentz_dot(&acc);
    let normal = q0.lorentz_cross(&vel);
    let speed_sq = vel.lorentz_norm_sq();
    acc_tangent.lorentz_dot(&normal) / (speed_sq * speed_sq.sqrt())
}

/// Finite-difference estimate of the curvature of the equidistant push of a
/// constant-curvature arc, with an error bound.
///
/// The arc is produced by Frenet integration (never from the closed-form
/// equidistant curvature), pushed pointwise, and differentiated centrally
/// at spacing `step`. The bound combines a Richardson comparison against
/// spacing `2 step` with a rounding floor for the second difference.
pub fn estimate_equidistant_curvature(kappa: f64, r: f64, step: f64) -> Result<OracleEstimate> {
    if !(kappa < 0.0) {
        return Err(Error::domain("oracle needs kappa < 0"));
    }
    if !(r >= 0.0) {
        return Err(Error::domain("oracle needs r >= 0"));
    }
    if !(step > 0.0 && step <= 0.01) {
        return Err(Error::domain("step must lie in (0, 0.01]"));
    }

    let estimate_at = |h: f64| -> Result<f64> {
        let qm = pushed_arc_point(kappa, -h, r, step)?;
        let q0 = pushed_arc_point(kappa, 0.0, r, step)?;
        let qp = pushed_arc_point(kappa, h, r, step)?;
        Ok(curvature_from_samples(&qm, &q0, &qp, h))
    };

    let fine = estimate_at(step)?;
    let coarse = estimate_at(2.0 * step)?;
    // Second-order differences: the h -> 2h comparison overestimates the
    // truncation of the fine value by a factor 3.
    let truncation = (fine - coarse).abs() / 3.0;

    let q0 = pushed_arc_point(kappa, 0.0, r, step)?;
    let scale = q0.euclidean_norm();
    let speed = jacobi_speed(kappa, r);
    let rounding = 64.0 * f64::EPSILON * scale / (step * step * speed * speed);

    Ok(OracleEstimate {
        value: fine,
        error_bound: truncation + rounding,
    })
}

/// Speed of the pushed curve in the base arc-length parameter. Used only
/// to scale the rounding floor; the estimate itself never consumes it.
fn jacobi_speed(kappa: f64, r: f64) -> f64 {
    (r.cosh() - kappa * r.sinh()).max(1.0)
}

/// Richardson-extrapolated variant of [`estimate_equidistant_curvature`]:
/// combines the spacings `step` and `2 step` to cancel the leading
/// second-order truncation, which otherwise collides with the rounding
/// floor near sharp corners of the (kappa, r) domain (large |kappa|,
/// small r). The remaining fourth-order truncation is bounded by
/// re-extrapolating at doubled scale, which overestimates it by a factor
/// of about fifteen.
pub fn estimate_equidistant_curvature_extrapolated(
    kappa: f64,
    r: f64,
    step: f64,
) -> Result<OracleEstimate> {
    if !(kappa < 0.0) {
        return Err(Error::domain("oracle needs kappa < 0"));
    }
    if !(r >= 0.0) {
        return Err(Error::domain("oracle needs r >= 0"));
    }
    if !(step > 0.0 && step <= 0.0025) {
        return Err(Error::domain("step must lie in (0, 0.0025]"));
    }

    let sample = |h: f64| -> Result<f64> {
        let qm = pushed_arc_point(kappa, -h, r, step)?;
        let q0 = pushed_arc_point(kappa, 0.0, r, step)?;
        let qp = pushed_arc_point(kappa, h, r, step)?;
        Ok(curvature_from_samples(&qm, &q0, &qp, h))
    };
    let f1 = sample(step)?;
    let f2 = sample(2.0 * step)?;
    let f4 = sample(4.0 * step)?;
    let fine = (4.0 * f1 - f2) / 3.0;
    let coarse = (4.0 * f2 - f4) / 3.0;

    let q0 = pushed_arc_point(kappa, 0.0, r, step)?;
    let scale = q0.euclidean_norm();
    let speed = jacobi_speed(kappa, r);
    let rounding_fine = 64.0 * f64::EPSILON * scale / (step * step * speed * speed);
    // The combination (4 f1 - f2) / 3 carries 4/3 of the fine rounding
    // plus 1/3 of the (4x smaller) coarse rounding.
    let rounding = (4.0 * rounding_fine + rounding_fine / 4.0) / 3.0;

    Ok(OracleEstimate {
        value: fine,
        error_bound: (fine - coarse).abs() + rounding,
    })
}

/// Curvature oracle that refuses to answer when its own error bound
/// exceeds `tol`.
pub fn oracle_equidistant_curvature(kappa: f64, r: f64, step: f64, tol: f64) -> Result<f64> {
    let est = estimate_equidistant_curvature(kappa, r, step)?;
    if est.error_bound > tol {
        return Err(Error::Inconclusive(format!(
            "step {step} too coarse: error bound {:.3e} exceeds tolerance {tol:.3e}",
            est.error_bound
        )));
    }
    Ok(est.value)
}

// ---------------------------------------------------------------------------
// Area oracles by quadrature
// ---------------------------------------------------------------------------

/// Collar area recomputed as the double integral of the Jacobi factor,
/// `integral over s of integral over t in [0,r] of
/// (cosh(b t) - kappa(s)/b * sinh(b t)) dt ds`, `b = sqrt(-k1)`,
/// by composite Gauss-Legendre: per-sample panels in `s` (where the
/// curvature model is linear) and `quad_n` nodes in `t`.
pub fn oracle_collar_area(curve: &BoundaryCurve, r: f64, k1: f64, quad_n: usize) -> Result<f64> {
    if !(k1 < 0.0) {
        return Err(Error::domain("ambient curvature must be negative"));
    }
    if !(r >= 0.0) {
        return Err(Error::domain("push distance must be nonnegative"));
    }
    if quad_n < 2 {
        return Err(Error::domain("need at least two quadrature nodes"));
    }
    let b = (-k1).sqrt();
    let (s_nodes, s_weights) = gauss_legendre(4);
    let mut area = 0.0;
    for panel in curve.samples().windows(2) {
        let (s0, s1) = (panel[0].s, panel[1].s);
        let (ka, kb) = (panel[0].kappa, panel[1].kappa);
        let mid = 0.5 * (s0 + s1);
        let half = 0.5 * (s1 - s0);
        for (x, w) in s_nodes.iter().zip(&s_weights) {
            let s = mid + half * x;
            let frac = (s - s0) / (s1 - s0);
            let kappa = ka + (kb - ka) * frac;
            let fiber = integrate_gl(quad_n, 0.0, r, |t| (b * t).cosh() - kappa / b * (b * t).sinh());
            area += w * half * fiber;
        }
    }
    Ok(area)
}

/// Gauss-Bonnet closure residual for the collar rectangle:
/// `|-(quadrature area) + integral kappa ds - equidistant total curvature|`
/// in the curvature -1 model. Small residuals certify that the area and
/// boundary-curvature closed forms are mutually consistent.
pub fn oracle_gauss_bonnet_rectangle(curve: &BoundaryCurve, r: f64, quad_n: usize) -> Result<f64> {
    let area = oracle_collar_area(curve, r, -1.0, quad_n)?;
    let start = curve.total_curvature_integral();
    let end = equidistant_total_curvature(curve, r)?;
    Ok((-area + start - end).abs())
}

/// Area of the geodesic ball of radius `r` in constant curvature `k1 < 0`,
/// by Gauss-Legendre quadrature of the circumference:
/// `integral over t in [0,r] of 2 pi sinh(b t)/b dt`, `b = sqrt(-k1)`.
pub fn oracle_hyperbolic_ball_area(r: f64, k1: f64, quad_n: usize) -> Result<f64> {
    if !(k1 < 0.0) {
        return Err(Error::domain("ambient curvature must be negative"));
    }
    if !(r >= 0.0) {
        return Err(Error::domain("radius must be nonnegative"));
    }
    let b = (-k1).sqrt();
    Ok(integrate_gl(
        quad_n.max(2),
        0.0,
        r,
        |t| 2.0 * std::f64::consts::PI * (b * t).sinh() / b,
    ))
}

// ---------------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------------

/// One oracle-versus-closed-form comparison.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct OracleReport {
    pub case: String,
    pub closed_form: f64,
    pub oracle: f64,
    pub abs_error: f64,
    pub rel_error: f64,
    pub tolerance: f64,
    /// Oracle's own error bound where it computes one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_bound: Option<f64>,
    pub passed: bool,
}

/// Result of the full validation suite.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct OracleSuite {
    pub cases: Vec<OracleReport>,
    pub passed: bool,
}

fn report_abs(case: String, closed: f64, oracle: f64, tol: f64, bound: Option<f64>) -> OracleReport {
    let abs = (closed - oracle).abs();
    let rel = abs / closed.abs().max(f64::MIN_POSITIVE);
    OracleReport {
        case,
        closed_form: closed,
        oracle,
        abs_error: abs,
        rel_error: rel,
        tolerance: tol,
        error_bound: bound,
        passed: abs <= tol,
    }
}

fn report_rel(case: String, closed: f64, oracle: f64, tol: f64) -> OracleReport {
    let abs = (closed - oracle).abs();
    let rel = abs / closed.abs().max(f64::MIN_POSITIVE);
    OracleReport {
        case,
        closed_form: closed,
        oracle,
        abs_error: abs,
        rel_error: rel,
        tolerance: tol,
        error_bound: None,
        passed: rel <= tol,
    }
}

/// Runs every oracle against its closed form. `extra_curve` adds the
/// collar and Gauss-Bonnet cases for a user-supplied boundary curve.
pub fn run_suite(extra_curve: Option<&BoundaryCurve>) -> Result<OracleSuite> {
    let mut cases = Vec::new();

    // Equidistant curvature across a small grid.
    for &kappa in &[-0.5, -1.0, -2.0, -5.0] {
        for &r in &[0.25, 1.0, 2.0] {
            let est = estimate_equidistant_curvature(kappa, r, 1e-4)?;
            let closed = crate::hyperbolic::equidistant_curvature(kappa, r)?;
            cases.push(report_abs(
                format!("equidistant curvature (kappa = {kappa}, r = {r})"),
                closed,
                est.value,
                1e-6,
                Some(est.error_bound),
            ));
        }
    }

    // Collar areas for representative curves and ambient curvatures.
    let constant = BoundaryCurve::constant(-1.0, 1.0, 9)?;
    let wavy = BoundaryCurve::from_fn(2.0, 41, |s| -1.3 - 0.5 * (1.7 * s).sin())?;
    let steep = BoundaryCurve::from_fn(0.8, 17, |s| -4.0 - s)?;
    let curve_cases: [(&BoundaryCurve, &str); 3] =
        [(&constant, "constant"), (&wavy, "wavy"), (&steep, "steep")];
    for (curve, name) in curve_cases {
        for &(r, k1) in &[(1.0, -1.0), (0.5, -1.5), (2.0, -6.0)] {
            let closed = collar_area(curve, r, k1)?;
            let oracle = oracle_collar_area(curve, r, k1, 24)?;
            cases.push(report_rel(
                format!("collar area ({name} curve, r = {r}, k1 = {k1})"),
                closed,
                oracle,
                1e-8,
            ));
        }
    }

    // Gauss-Bonnet closure of the collar rectangle.
    for (curve, name) in curve_cases {
        for &r in &[0.5, 2.0] {
            let residual = oracle_gauss_bonnet_rectangle(curve, r, 24)?;
            cases.push(report_abs(
                format!("Gauss-Bonnet collar residual ({name} curve, r = {r})"),
                0.0,
                residual,
                1e-7,
                None,
            ));
        }
    }

    // Ball areas.
    for &(r, k1) in &[(1.0, -1.0), (0.8, -1.5), (2.0, -6.0), (0.3, -20.739)] {
        let closed = hyperbolic_ball_area(r, k1)?;
        let oracle = oracle_hyperbolic_ball_area(r, k1, 32)?;
        cases.push(report_rel(
            format!("hyperbolic ball area (r = {r}, k1 = {k1})"),
            closed,
            oracle,
            1e-10,
        ));
    }

    // Geodesic closed form against blind RK4 integration of gamma'' = |v|^2 gamma.
    cases.push(geodesic_ode_case()?);

    // Parallel transport is an isometry.
    cases.push(transport_isometry_case()?);

    if let Some(curve) = extra_curve {
        for &r in &[0.5, 1.0, 2.0] {
            let closed = collar_area(curve, r, -1.0)?;
            let oracle = oracle_collar_area(curve, r, -1.0, 24)?;
            cases.push(report_rel(
                format!("collar area (user curve, r = {r}, k1 = -1)"),
                closed,
                oracle,
                1e-8,
            ));
            let residual = oracle_gauss_bonnet_rectangle(curve, r, 24)?;
            cases.push(report_abs(
                format!("Gauss-Bonnet collar residual (user curve, r = {r})"),
                0.0,
                residual,
                1e-7,
                None,
            ));
        }
    }

    let passed = cases.iter().all(|c| c.passed);
    Ok(OracleSuite { cases, passed })
}

fn geodesic_ode_case() -> Result<OracleReport> {
    let x = geodesic(
        &HyperbolicPoint::origin(),
        &LorentzVector::new(1.0, 0.0, 0.0),
        0.4,
    )?;
    let raw = LorentzVector::new(-0.3, 1.1, 0.0);
    let v = raw + x.position() * x.position().lorentz_dot(&raw);
    let speed_sq = v.lorentz_norm_sq();

    let t_end = 2.0_f64;
    let n = 4000;
    let h = t_end / n as f64;
    let (mut pos, mut vel) = (x.position(), v);
    for _ in 0..n {
        let k1 = (vel, pos * speed_sq);
        let k2 = (vel + k1.1 * (h / 2.0), (pos + k1.0 * (h / 2.0)) * speed_sq);
        let k3 = (vel + k2.1 * (h / 2.0), (pos + k2.0 * (h / 2.0)) * speed_sq);
        let k4 = (vel + k3.1 * h, (pos + k3.0 * h) * speed_sq);
        pos = pos + (k1.0 + k2.0 * 2.0 + k3.0 * 2.0 + k4.0) * (h / 6.0);
        vel = vel + (k1.1 + k2.1 * 2.0 + k3.1 * 2.0 + k4.1) * (h / 6.0);
    }
    let closed = geodesic(&x, &v, t_end)?.position();
    let deviation = (closed - pos).euclidean_norm() / closed.euclidean_norm();
    Ok(report_abs(
        "geodesic closed form vs RK4 integration (relative deviation)".into(),
        0.0,
        deviation,
        1e-8,
        None,
    ))
}

fn transport_isometry_case() -> Result<OracleReport> {
    let x = geodesic(
        &HyperbolicPoint::origin(),
        &LorentzVector::new(0.0, 1.0, 0.0),
        0.9,
    )?;
    let raw_v = LorentzVector::new(0.8, 0.3, 0.0);
    let v = raw_v + x.position() * x.position().lorentz_dot(&raw_v);
    let raw_w = LorentzVector::new(-0.4, 1.0, 0.0);
    let w = raw_w + x.position() * x.position().lorentz_dot(&raw_w);
    let moved = parallel_transport(&x, &v, &w, 3.0)?;
    let deviation = (moved.direction().lorentz_norm_sq() - w.lorentz_norm_sq()).abs()
        / w.lorentz_norm_sq();
    Ok(report_abs(
        "parallel transport norm preservation (relative deviation)".into(),
        0.0,
        deviation,
        1e-10,
        None,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbolic::equidistant_curvature;
    use approx::assert_relative_eq;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        // 5-point rule is exact through degree 9.
        let val = integrate_gl(5, 0.0, 1.0, |x| x.powi(9));
        assert_relative_eq!(val, 0.1, max_relative = 1e-13);
        let val = integrate_gl(16, -1.0, 2.5, |x| x.exp());
        assert_relative_eq!(val, 2.5_f64.exp() - (-1.0_f64).exp(), max_relative = 1e-14);
    }

    #[test]
    fn frenet_arc_stays_on_sheet_and_unit_speed() {
        let f = constant_curvature_frame(-2.0, 0.5, 1e-4);
        assert_relative_eq!(f.alpha.lorentz_norm_sq(), -1.0, epsilon = 1e-10);
        assert_relative_eq!(f.tan.lorentz_norm_sq(), 1.0, epsilon = 1e-10);
        assert_relative_eq!(f.nor.lorentz_norm_sq(), 1.0, epsilon = 1e-10);
        assert!(f.alpha.lorentz_dot(&f.tan).abs() < 1e-10);
    }

    /// A constant-curvature arc with |kappa| > 1 is a circle; its
    /// circumnavigation length is 2 pi sinh(rho) with coth(rho) = |kappa|.
    /// Check a quarter period against the frame integration.
    #[test]
    fn frenet_arc_matches_circle_geometry() {
        let kappa = -2.0_f64;
        let rho = (1.0 / kappa.abs()).atanh(); // tanh(rho) = 1/|kappa|
        let circumference = 2.0 * std::f64::consts::PI * rho.sinh();
        let f = constant_curvature_frame(kappa, circumference, 1e-4);
        // Full loop returns to the start.
        assert!(
            (f.alpha - LorentzVector::new(0.0, 0.0, 1.0)).euclidean_norm() < 1e-6,
            "circle did not close: {:?}",
            f.alpha
        );
    }

    #[test]
    fn curvature_oracle_matches_closed_form_at_reference_point() {
        let est = estimate_equidistant_curvature(-2.0, 1.0, 1e-4).unwrap();
        let closed = equidistant_curvature(-2.0, 1.0).unwrap();
        assert!(
            (est.value - closed).abs() <= 1e-6,
            "oracle {} vs closed {closed}",
            est.value
        );
        assert!(est.error_bound <= 1e-6, "bound too fat: {}", est.error_bound);
    }

    #[test]
    fn curvature_oracle_bound_dominates_true_error() {
        for &kappa in &[-0.5, -1.0, -3.0] {
            for &r in &[0.2, 1.0, 1.8] {
                let est = estimate_equidistant_curvature(kappa, r, 1e-4).unwrap();
                let closed = equidistant_curvature(kappa, r).unwrap();
                let err = (est.value - closed).abs();
                assert!(
                    err <= est.error_bound,
                    "kappa {kappa} r {r}: error {err:.3e} above bound {:.3e}",
                    est.error_bound
                );
            }
        }
    }

    #[test]
    fn inconclusive_when_step_cannot_support_tolerance() {
        let result = oracle_equidistant_curvature(-2.0, 1.0, 1e-2, 1e-12);
        assert!(matches!(result, Err(Error::Inconclusive(_))));
    }

    #[test]
    fn extrapolated_oracle_certifies_the_sharp_corner() {
        // Large |kappa| at small r squeezes the plain estimator between
        // truncation and rounding; extrapolation has to get under 5e-7.
        let est = estimate_equidistant_curvature_extrapolated(-5.0, 0.05, 5e-4).unwrap();
        let closed = equidistant_curvature(-5.0, 0.05).unwrap();
        assert!(
            est.error_bound < 5e-7,
            "extrapolated bound still fat: {:.3e}",
            est.error_bound
        );
        assert!((est.value - closed).abs() <= est.error_bound);
    }

    #[test]
    fn extrapolated_bound_dominates_true_error() {
        for &kappa in &[-0.5, -1.0, -3.0, -5.0] {
            for &r in &[0.05, 0.2, 1.0, 1.8] {
                let est = estimate_equidistant_curvature_extrapolated(kappa, r, 5e-4).unwrap();
                let closed = equidistant_curvature(kappa, r).unwrap();
                let err = (est.value - closed).abs();
                assert!(
                    err <= est.error_bound,
                    "kappa {kappa} r {r}: error {err:.3e} above bound {:.3e}",
                    est.error_bound
                );
            }
        }
    }

    #[test]
    fn collar_area_oracle_agrees_on_constant_curve() {
        let curve = BoundaryCurve::constant(-1.0, 1.0, 5).unwrap();
        let oracle = oracle_collar_area(&curve, 1.0, -1.0, 24).unwrap();
        assert_relative_eq!(oracle, 1.0_f64.exp() - 1.0, epsilon = 1e-10);
    }

    #[test]
    fn suite_passes() {
        let suite = run_suite(None).unwrap();
        for case in &suite.cases {
            assert!(
                case.passed,
                "{}: closed {} oracle {} (abs {:.3e}, rel {:.3e}, tol {:.3e})",
                case.case, case.closed_form, case.oracle, case.abs_error, case.rel_error,
                case.tolerance
            );
        }
        assert!(suite.passed);
    }
}
