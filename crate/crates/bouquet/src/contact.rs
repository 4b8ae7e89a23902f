//! Numerical verification of explicit contact structures.
//!
//! A small catalog of structures given by closed-form tensors on a
//! coordinate chart: the tight structures on the three-torus, the
//! torus-equivariant family on the three-sphere containing the standard and
//! the overtwisted structures, and the unit cotangent sphere bundle of a
//! torus. For each entry the defining identities of a contact metric
//! structure are checked at seeded sample points:
//!
//!   (a) eta(xi) = 1
//!   (b) xi is in the kernel of d(eta)
//!   (c) Phi(xi) = 0
//!   (d) Phi^2 = -Id + xi (x) eta
//!   (e) d(eta) is Phi-invariant and d(eta)(Phi X, X) > 0 on ker(eta)
//!   (f) g = d(eta) o (Phi (x) 1) + eta (x) eta is a symmetric positive
//!       definite metric with g(Phi X, Phi Y) = g(X, Y) - eta(X) eta(Y)
//!
//! The exterior derivative is hand-coded from the closed forms; central
//! finite differences of eta serve as an independent cross-check at a looser
//! tolerance. Wedge convention throughout, with no one-half factor:
//! (a ^ b)(X, Y) = a(X) b(Y) - a(Y) b(X).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;
use thiserror::Error;

/// Step for the finite-difference cross-check of d(eta).
const FD_STEP: f64 = 1e-6;
/// Tolerance for the finite-difference agreement.
pub const FD_TOLERANCE: f64 = 1e-4;
/// Fibre radius bound for sphere-bundle samples, clear of the chart edge.
const SPHERE_SAMPLE_RADIUS: f64 = 0.9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ContactError {
    #[error("tolerance must be positive, got {0}")]
    NonPositiveTolerance(f64),
    #[error("sample count must be positive")]
    ZeroSamples,
    #[error("{0}")]
    InvalidParameter(String),
    #[error("point has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point is outside the chart: {0}")]
    ChartViolation(String),
    #[error("generator index {index} is not a torus direction of this entry")]
    GeneratorMismatch { index: usize },
}

/// A catalog entry with closed-form chart tensors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "id")]
pub enum CatalogId {
    /// Tight structures on T^3: eta_k = cos(k theta) dx1 + sin(k theta) dx2
    /// on chart (x1, x2, theta); k >= 1.
    #[serde(rename = "t3")]
    T3 { k: u32 },
    /// The T^2-equivariant family on S^3 with
    /// eta_k = cos((2k+1/2) pi t) dtheta1 + sin((2k+1/2) pi t) dtheta2 on
    /// chart (theta1, theta2, t); k = 0 is the standard tight structure,
    /// k >= 1 are overtwisted.
    #[serde(rename = "overtwisted_s3")]
    OvertwistedS3 { k: u32 },
    /// Unit sphere bundle S(T^* T^{n+1}) with the restricted canonical form,
    /// in the chart (x^0..x^n, p_1..p_n) with p_0 = sqrt(1 - |p|^2).
    #[serde(rename = "unit_sphere_bundle")]
    UnitSphereBundle { n: u32 },
}

impl std::fmt::Display for CatalogId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogId::T3 { k } => write!(f, "t3(k={k})"),
            CatalogId::OvertwistedS3 { k } => write!(f, "overtwisted_s3(k={k})"),
            CatalogId::UnitSphereBundle { n } => write!(f, "unit_sphere_bundle(n={n})"),
        }
    }
}

/// Chart tensors at a point: components in the coordinate basis.
struct Tensors {
    eta: Vec<f64>,
    xi: Vec<f64>,
    /// phi[i][j] = component i of Phi(e_j).
    phi: Vec<Vec<f64>>,
    /// deta[i][j] = d(eta)(e_i, e_j).
    deta: Vec<Vec<f64>>,
    /// A basis of ker(eta).
    d_basis: Vec<Vec<f64>>,
}

impl CatalogId {
    pub fn validate(&self) -> Result<(), ContactError> {
        match self {
            CatalogId::T3 { k } if *k == 0 => Err(ContactError::InvalidParameter(
                "t3 needs k >= 1: eta_0 is not a contact form".into(),
            )),
            CatalogId::UnitSphereBundle { n } if *n == 0 => Err(ContactError::InvalidParameter(
                "unit_sphere_bundle needs n >= 1".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn chart_dim(&self) -> usize {
        match self {
            CatalogId::T3 { .. } | CatalogId::OvertwistedS3 { .. } => 3,
            CatalogId::UnitSphereBundle { n } => 2 * *n as usize + 1,
        }
    }

    /// Frequency of the rotating coframe for the two three-dimensional
    /// families.
    fn frequency(&self) -> f64 {
        match self {
            CatalogId::T3 { k } => *k as f64,
            CatalogId::OvertwistedS3 { k } => (2.0 * *k as f64 + 0.5) * PI,
            CatalogId::UnitSphereBundle { .. } => unreachable!("no single frequency"),
        }
    }

    pub fn check_point(&self, x: &[f64]) -> Result<(), ContactError> {
        let dim = self.chart_dim();
        if x.len() != dim {
            return Err(ContactError::DimensionMismatch {
                expected: dim,
                got: x.len(),
            });
        }
        if let CatalogId::UnitSphereBundle { n } = self {
            let n = *n as usize;
            let p2: f64 = x[n + 1..].iter().map(|p| p * p).sum();
            if p2 >= 1.0 {
                return Err(ContactError::ChartViolation(format!(
                    "|p|^2 = {p2} >= 1 leaves the chart"
                )));
            }
        }
        Ok(())
    }

    /// Contact form components at a point.
    pub fn eta(&self, x: &[f64]) -> Vec<f64> {
        match self {
            CatalogId::T3 { .. } | CatalogId::OvertwistedS3 { .. } => {
                let f = self.frequency();
                let angle = f * x[2];
                vec![angle.cos(), angle.sin(), 0.0]
            }
            CatalogId::UnitSphereBundle { n } => {
                let n = *n as usize;
                let p = &x[n + 1..];
                let p0 = (1.0 - p.iter().map(|v| v * v).sum::<f64>()).sqrt();
                let mut eta = Vec::with_capacity(2 * n + 1);
                eta.push(p0);
                eta.extend_from_slice(p);
                eta.extend(std::iter::repeat_n(0.0, n));
                eta
            }
        }
    }

    /// Chart indices of the torus generator fields.
    pub fn torus_generators(&self) -> Vec<usize> {
        match self {
            CatalogId::T3 { .. } | CatalogId::OvertwistedS3 { .. } => vec![0, 1],
            CatalogId::UnitSphereBundle { n } => (0..=*n as usize).collect(),
        }
    }

    fn tensors(&self, x: &[f64]) -> Tensors {
        match self {
            CatalogId::T3 { .. } | CatalogId::OvertwistedS3 { .. } => {
                let f = self.frequency();
                let angle = f * x[2];
                let (s, c) = angle.sin_cos();
                let eta = vec![c, s, 0.0];
                let xi = vec![c, s, 0.0];
                // Columns are the images of (e_0, e_1, e_theta).
                let phi = vec![
                    vec![0.0, 0.0, f * s],
                    vec![0.0, 0.0, -f * c],
                    vec![-s / f, c / f, 0.0],
                ];
                let mut deta = vec![vec![0.0; 3]; 3];
                deta[0][2] = f * s; // d(eta)(e_0, e_theta)
                deta[2][0] = -f * s;
                deta[1][2] = -f * c;
                deta[2][1] = f * c;
                let d_basis = vec![vec![0.0, 0.0, 1.0], vec![s, -c, 0.0]];
                Tensors {
                    eta,
                    xi,
                    phi,
                    deta,
                    d_basis,
                }
            }
            CatalogId::UnitSphereBundle { n } => {
                let n = *n as usize;
                let dim = 2 * n + 1;
                let p = x[n + 1..].to_vec();
                let p0 = (1.0 - p.iter().map(|v| v * v).sum::<f64>()).sqrt();
                let eta = self.eta(x);
                // Reeb field: the geodesic flow p_a d/dx^a.
                let mut xi = vec![0.0; dim];
                xi[0] = p0;
                xi[1..=n].copy_from_slice(&p);

                // d(eta) = sum_i dp_i ^ (dx^i - (p_i/p0) dx^0).
                let mut deta = vec![vec![0.0; dim]; dim];
                for i in 0..n {
                    let pi = n + 1 + i;
                    deta[pi][1 + i] = 1.0;
                    deta[1 + i][pi] = -1.0;
                    deta[pi][0] = -p[i] / p0;
                    deta[0][pi] = p[i] / p0;
                }

                // Phi(d/dx^0) = -p0 * sum p_j d/dp_j
                // Phi(d/dx^i) = d/dp_i - p_i * sum p_j d/dp_j
                // Phi(d/dp_i) = (p_i/p0) d/dx^0 - d/dx^i
                let mut phi = vec![vec![0.0; dim]; dim];
                for j in 0..n {
                    phi[n + 1 + j][0] = -p0 * p[j];
                }
                for i in 0..n {
                    phi[n + 1 + i][1 + i] += 1.0;
                    for j in 0..n {
                        phi[n + 1 + j][1 + i] -= p[i] * p[j];
                    }
                    phi[0][n + 1 + i] = p[i] / p0;
                    phi[1 + i][n + 1 + i] = -1.0;
                }

                // ker(eta) basis: R_i = d/dx^i - (p_i/p0) d/dx^0 and d/dp_i.
                let mut d_basis = Vec::with_capacity(2 * n);
                for i in 0..n {
                    let mut v = vec![0.0; dim];
                    v[1 + i] = 1.0;
                    v[0] = -p[i] / p0;
                    d_basis.push(v);
                }
                for i in 0..n {
                    let mut v = vec![0.0; dim];
                    v[n + 1 + i] = 1.0;
                    d_basis.push(v);
                }
                Tensors {
                    eta,
                    xi,
                    phi,
                    deta,
                    d_basis,
                }
            }
        }
    }

    /// Draws a chart point; the sphere-bundle fibre stays inside radius 0.9.
    fn sample(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        match self {
            CatalogId::T3 { .. } | CatalogId::OvertwistedS3 { .. } => {
                (0..3).map(|_| rng.gen::<f64>() * 2.0 * PI).collect()
            }
            CatalogId::UnitSphereBundle { n } => {
                let n = *n as usize;
                let mut x: Vec<f64> = (0..=n).map(|_| rng.gen::<f64>() * 2.0 * PI).collect();
                loop {
                    let p: Vec<f64> = (0..n)
                        .map(|_| (rng.gen::<f64>() * 2.0 - 1.0) * SPHERE_SAMPLE_RADIUS)
                        .collect();
                    if p.iter().map(|v| v * v).sum::<f64>() <= SPHERE_SAMPLE_RADIUS.powi(2) {
                        x.extend(p);
                        return x;
                    }
                }
            }
        }
    }
}

// -- small dense float helpers ------------------------------------------------

fn mat_vec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// d(eta)(u, v) from the component matrix.
fn two_form(deta: &[Vec<f64>], u: &[f64], v: &[f64]) -> f64 {
    dot(u, &mat_vec(deta, v))
}

fn determinant(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for i in col + 1..n {
            let f = m[i][col] / m[col][col];
            for j in col..n {
                m[i][j] -= f * m[col][j];
            }
        }
    }
    det
}

/// Penalty that is zero when every leading principal minor is positive and
/// exceeds any reasonable tolerance otherwise.
fn positivity_penalty(g: &[Vec<f64>]) -> f64 {
    let n = g.len();
    let mut worst = f64::INFINITY;
    for k in 1..=n {
        let sub: Vec<Vec<f64>> = (0..k).map(|i| g[i][..k].to_vec()).collect();
        worst = worst.min(determinant(sub));
    }
    if worst > 0.0 {
        0.0
    } else {
        1.0 + worst.abs()
    }
}

// -- the identity suite -------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub entry: String,
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub checks: Vec<IdentityCheck>,
    pub all_passed: bool,
}

const CHECK_NAMES: [&str; 9] = [
    "eta_of_reeb_is_one",
    "reeb_in_kernel_of_deta",
    "phi_kills_reeb",
    "phi_squares_to_reflection",
    "deta_phi_invariance",
    "deta_phi_positivity",
    "metric_symmetric_positive_definite",
    "metric_compatibility",
    "deta_finite_difference",
];

/// Runs the full identity suite on seeded sample points.
pub fn verify_identities(
    entry: &CatalogId,
    sample_count: usize,
    seed: u64,
    tol: f64,
) -> Result<IdentityReport, ContactError> {
    entry.validate()?;
    if tol <= 0.0 {
        return Err(ContactError::NonPositiveTolerance(tol));
    }
    if sample_count == 0 {
        return Err(ContactError::ZeroSamples);
    }
    let dim = entry.chart_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut residuals = [0.0f64; 9];

    for _ in 0..sample_count {
        let x = entry.sample(&mut rng);
        let t = entry.tensors(&x);
        let mut track = |idx: usize, r: f64| {
            residuals[idx] = residuals[idx].max(r.abs());
        };

        // (a) eta(xi) = 1
        track(0, dot(&t.eta, &t.xi) - 1.0);

        // (b) d(eta)(xi, e_i) = 0
        for i in 0..dim {
            let mut e = vec![0.0; dim];
            e[i] = 1.0;
            track(1, two_form(&t.deta, &t.xi, &e));
        }

        // (c) Phi(xi) = 0
        for v in mat_vec(&t.phi, &t.xi) {
            track(2, v);
        }

        // (d) Phi^2 = -Id + xi (x) eta
        for j in 0..dim {
            let mut e = vec![0.0; dim];
            e[j] = 1.0;
            let phi2 = mat_vec(&t.phi, &mat_vec(&t.phi, &e));
            for i in 0..dim {
                let expected = -e[i] + t.xi[i] * t.eta[j];
                track(3, phi2[i] - expected);
            }
        }

        // (e) invariance and positivity on ker(eta)
        let images: Vec<Vec<f64>> = t.d_basis.iter().map(|v| mat_vec(&t.phi, v)).collect();
        for (a, xa) in t.d_basis.iter().enumerate() {
            for (b, xb) in t.d_basis.iter().enumerate() {
                track(
                    4,
                    two_form(&t.deta, &images[a], &images[b]) - two_form(&t.deta, xa, xb),
                );
            }
        }
        let k = t.d_basis.len();
        let mut gram = vec![vec![0.0; k]; k];
        for a in 0..k {
            for b in 0..k {
                gram[a][b] = two_form(&t.deta, &images[a], &t.d_basis[b]);
            }
        }
        let mut asym: f64 = 0.0;
        for a in 0..k {
            for b in 0..k {
                asym = asym.max((gram[a][b] - gram[b][a]).abs());
            }
        }
        track(5, asym.max(positivity_penalty(&gram)));

        // (f) the metric and its compatibility identity
        let mut g = vec![vec![0.0; dim]; dim];
        for i in 0..dim {
            let mut e = vec![0.0; dim];
            e[i] = 1.0;
            let phi_e = mat_vec(&t.phi, &e);
            for j in 0..dim {
                let mut ej = vec![0.0; dim];
                ej[j] = 1.0;
                g[i][j] = two_form(&t.deta, &phi_e, &ej) + t.eta[i] * t.eta[j];
            }
        }
        let mut gsym: f64 = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                gsym = gsym.max((g[i][j] - g[j][i]).abs());
            }
        }
        track(6, gsym.max(positivity_penalty(&g)));
        for i in 0..dim {
            for j in 0..dim {
                let mut ei = vec![0.0; dim];
                ei[i] = 1.0;
                let mut ej = vec![0.0; dim];
                ej[j] = 1.0;
                let phi_i = mat_vec(&t.phi, &ei);
                let phi_j = mat_vec(&t.phi, &ej);
                let g_phi = dot(&phi_i, &mat_vec(&g, &phi_j));
                let expected = g[i][j] - t.eta[i] * t.eta[j];
                track(7, g_phi - expected);
            }
        }

        // Finite-difference cross-check of the hand-coded d(eta).
        for i in 0..dim {
            for j in 0..dim {
                let fd = fd_deta(entry, &x, i, j);
                track(8, fd - t.deta[i][j]);
            }
        }
    }

    let checks: Vec<IdentityCheck> = CHECK_NAMES
        .iter()
        .zip(residuals)
        .map(|(name, max_residual)| {
            let tolerance = if *name == "deta_finite_difference" {
                FD_TOLERANCE
            } else {
                tol
            };
            IdentityCheck {
                name: (*name).to_string(),
                max_residual,
                tolerance,
                pass: max_residual <= tolerance,
            }
        })
        .collect();
    let all_passed = checks.iter().all(|c| c.pass);
    Ok(IdentityReport {
        entry: entry.to_string(),
        samples: sample_count,
        seed,
        tolerance: tol,
        checks,
        all_passed,
    })
}

/// d(eta)(e_i, e_j) by central differences: d_i eta_j - d_j eta_i.
fn fd_deta(entry: &CatalogId, x: &[f64], i: usize, j: usize) -> f64 {
    let partial = |wrt: usize, component: usize| -> f64 {
        let mut plus = x.to_vec();
        plus[wrt] += FD_STEP;
        let mut minus = x.to_vec();
        minus[wrt] -= FD_STEP;
        (entry.eta(&plus)[component] - entry.eta(&minus)[component]) / (2.0 * FD_STEP)
    };
    partial(i, j) - partial(j, i)
}

/// Gram matrix of the metric in the chart basis at a point.
pub fn metric_matrix(entry: &CatalogId, point: &[f64]) -> Result<Vec<Vec<f64>>, ContactError> {
    entry.validate()?;
    entry.check_point(point)?;
    let dim = entry.chart_dim();
    let t = entry.tensors(point);
    let mut g = vec![vec![0.0; dim]; dim];
    for i in 0..dim {
        let mut e = vec![0.0; dim];
        e[i] = 1.0;
        let phi_e = mat_vec(&t.phi, &e);
        for j in 0..dim {
            let mut ej = vec![0.0; dim];
            ej[j] = 1.0;
            g[i][j] = two_form(&t.deta, &phi_e, &ej) + t.eta[i] * t.eta[j];
        }
    }
    Ok(g)
}

/// Values of eta on the chosen torus generators: the moment map of the torus
/// action at the point.
pub fn moment_eval(
    entry: &CatalogId,
    generators: &[usize],
    point: &[f64],
) -> Result<Vec<f64>, ContactError> {
    entry.validate()?;
    entry.check_point(point)?;
    let allowed = entry.torus_generators();
    for &g in generators {
        if !allowed.contains(&g) {
            return Err(ContactError::GeneratorMismatch { index: g });
        }
    }
    let eta = entry.eta(point);
    Ok(generators.iter().map(|&g| eta[g]).collect())
}

/// Minimum euclidean norm of the moment map over seeded samples; the image
/// avoids zero for every toric catalog entry.
pub fn moment_min_norm(
    entry: &CatalogId,
    sample_count: usize,
    seed: u64,
) -> Result<f64, ContactError> {
    entry.validate()?;
    if sample_count == 0 {
        return Err(ContactError::ZeroSamples);
    }
    let generators = entry.torus_generators();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min = f64::INFINITY;
    for _ in 0..sample_count {
        let x = entry.sample(&mut rng);
        let mu = moment_eval(entry, &generators, &x)?;
        min = min.min(dot(&mu, &mu).sqrt());
    }
    Ok(min)
}
