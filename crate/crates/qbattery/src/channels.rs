//! Qubit noise channels acting on battery cells.
//!
//! Three families, all expressed in the energy basis `{|0>, |1>}`:
//!
//! * amplitude damping `adc(gamma)` — self-discharging toward the ground
//!   state (zero-temperature environment);
//! * generalized amplitude damping `gadc(gamma, eta)` — partial
//!   thermalization toward a finite positive temperature, `eta` in `[0, 1/2]`;
//! * dephased amplitude damping `dephadc(kappa, gamma)` — amplitude damping
//!   composed with extra dephasing that scales coherences by `sqrt(1-kappa)`.
//!
//! Each family commutes with the Hamiltonian evolution generated by
//! `h = |1><1|`, so output spectra of the coherent input states
//! `|psi_e> = sqrt(1-e)|0> + e^{i phi} sqrt(e)|1>` are phase independent and
//! admit the closed forms in [`QubitChannel::output_eigenvalues`].

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::hermitian::{DensityMatrix, HermitianMatrix, Superoperator};
use crate::{Error, Result};

/// Entropy unit selector for [`QubitChannel::output_entropy`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntropyBase {
    Nats,
    Bits,
}

/// One of the three supported single-qubit noise channels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QubitChannel {
    AmplitudeDamping { gamma: f64 },
    GeneralizedAmplitudeDamping { gamma: f64, eta: f64 },
    DephasedAmplitudeDamping { kappa: f64, gamma: f64 },
}

fn check_range(name: &'static str, value: f64, lo: f64, hi: f64) -> Result<f64> {
    if !(lo..=hi).contains(&value) || value.is_nan() {
        return Err(Error::ParameterOutOfRange {
            name,
            value,
            lo,
            hi,
        });
    }
    Ok(value)
}

impl QubitChannel {
    /// Amplitude damping with decay probability `gamma` in `[0, 1]`.
    pub fn adc(gamma: f64) -> Result<Self> {
        Ok(Self::AmplitudeDamping {
            gamma: check_range("gamma", gamma, 0.0, 1.0)?,
        })
    }

    /// Generalized amplitude damping; `eta` in `[0, 1/2]` keeps the bath at a
    /// finite positive temperature.
    pub fn gadc(gamma: f64, eta: f64) -> Result<Self> {
        Ok(Self::GeneralizedAmplitudeDamping {
            gamma: check_range("gamma", gamma, 0.0, 1.0)?,
            eta: check_range("eta", eta, 0.0, 0.5)?,
        })
    }

    /// Amplitude damping `gamma` composed with dephasing strength `kappa`.
    pub fn dephadc(kappa: f64, gamma: f64) -> Result<Self> {
        Ok(Self::DephasedAmplitudeDamping {
            kappa: check_range("kappa", kappa, 0.0, 1.0)?,
            gamma: check_range("gamma", gamma, 0.0, 1.0)?,
        })
    }

    pub fn gamma(&self) -> f64 {
        match *self {
            Self::AmplitudeDamping { gamma }
            | Self::GeneralizedAmplitudeDamping { gamma, .. }
            | Self::DephasedAmplitudeDamping { gamma, .. } => gamma,
        }
    }

    /// Linear action on an arbitrary 2x2 matrix (the channel's linear
    /// extension; used to build the superoperator from matrix units).
    fn apply_linear(&self, m: &HermitianMatrix) -> HermitianMatrix {
        let (m00, m01, m10, m11) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
        let (out00, out01, out10, out11) = match *self {
            Self::AmplitudeDamping { gamma } => {
                let coh = (1.0 - gamma).sqrt();
                (
                    m00 + gamma * m11,
                    coh * m01,
                    coh * m10,
                    (1.0 - gamma) * m11,
                )
            }
            Self::GeneralizedAmplitudeDamping { gamma, eta } => {
                let coh = (1.0 - gamma).sqrt();
                (
                    (1.0 - gamma * eta) * m00 + gamma * (1.0 - eta) * m11,
                    coh * m01,
                    coh * m10,
                    gamma * eta * m00 + (1.0 - gamma * (1.0 - eta)) * m11,
                )
            }
            Self::DephasedAmplitudeDamping { kappa, gamma } => {
                let coh = (1.0 - kappa).sqrt() * (1.0 - gamma).sqrt();
                (
                    m00 + gamma * m11,
                    coh * m01,
                    coh * m10,
                    (1.0 - gamma) * m11,
                )
            }
        };
        let mut out = HermitianMatrix::zeros(2);
        out.set(0, 0, out00);
        out.set(0, 1, out01);
        out.set(1, 0, out10);
        out.set(1, 1, out11);
        out
    }

    /// Applies the channel to a qubit density matrix.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if rho.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: rho.dim(),
            });
        }
        rho.validate_hermitian()?;
        Ok(self.apply_linear(rho))
    }

    /// Dense 4x4 superoperator (column-stacking convention).
    pub fn superoperator(&self) -> Superoperator {
        Superoperator::from_basis_action(2, |m| self.apply_linear(m))
    }

    /// Mean output energy as a function of the mean input energy.
    pub fn output_energy(&self, e_in: f64) -> f64 {
        match *self {
            Self::AmplitudeDamping { gamma } | Self::DephasedAmplitudeDamping { gamma, .. } => {
                (1.0 - gamma) * e_in
            }
            Self::GeneralizedAmplitudeDamping { gamma, eta } => (1.0 - gamma) * e_in + gamma * eta,
        }
    }

    /// Eigenvalues `(lambda_plus, lambda_minus)` of the channel output on the
    /// coherent input state of energy `e` (any phase).
    pub fn output_eigenvalues(&self, e: f64) -> (f64, f64) {
        let disc = match *self {
            Self::AmplitudeDamping { gamma } => 1.0 - 4.0 * e * e * gamma * (1.0 - gamma),
            Self::GeneralizedAmplitudeDamping { gamma, eta } => {
                let base = 1.0 - 2.0 * eta * gamma;
                base * base + 4.0 * gamma * (1.0 - gamma) * (2.0 * eta - e) * e
            }
            Self::DephasedAmplitudeDamping { kappa, gamma } => {
                1.0 - 4.0 * (1.0 - gamma) * e * (e * (gamma - kappa) + kappa)
            }
        };
        let root = disc.max(0.0).sqrt();
        (0.5 * (1.0 + root), 0.5 * (1.0 - root))
    }

    /// Output entropy of the coherent input state of energy `e`.
    pub fn output_entropy(&self, e: f64, base: EntropyBase) -> f64 {
        let (hi, lo) = self.output_eigenvalues(e);
        let nats = crate::ergotropy::entropy_from_populations(&[hi, lo]);
        match base {
            EntropyBase::Nats => nats,
            EntropyBase::Bits => nats / std::f64::consts::LN_2,
        }
    }

    /// Inverse temperature of the thermal state the channel maps the ground
    /// state into (generalized amplitude damping; infinite otherwise).
    pub fn ground_image_beta(&self) -> f64 {
        match *self {
            Self::GeneralizedAmplitudeDamping { gamma, eta } => {
                let p = gamma * eta;
                if p <= 0.0 {
                    f64::INFINITY
                } else {
                    -(p / (1.0 - p)).ln()
                }
            }
            _ => f64::INFINITY,
        }
    }
}

/// Pure dephasing: scales the off-diagonal elements by `sqrt(1-kappa)`.
pub fn pure_dephasing_superoperator(kappa: f64) -> Result<Superoperator> {
    check_range("kappa", kappa, 0.0, 1.0)?;
    let coh = (1.0 - kappa).sqrt();
    Ok(Superoperator::from_basis_action(2, |m| {
        let mut out = m.clone();
        out.set(0, 1, coh * m.get(0, 1));
        out.set(1, 0, coh * m.get(1, 0));
        out
    }))
}

/// Coherent single-cell input `sqrt(1-e)|0> + e^{i phi} sqrt(e)|1>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentInputState {
    pub energy: f64,
    pub phase: f64,
}

impl CoherentInputState {
    pub fn new(energy: f64) -> Result<Self> {
        Ok(Self {
            energy: check_range("energy", energy, 0.0, 1.0)?,
            phase: 0.0,
        })
    }

    pub fn with_phase(energy: f64, phase: f64) -> Result<Self> {
        Ok(Self {
            energy: check_range("energy", energy, 0.0, 1.0)?,
            phase,
        })
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        [
            Complex64::new((1.0 - self.energy).sqrt(), 0.0),
            Complex64::from_polar(self.energy.sqrt(), self.phase),
        ]
    }

    pub fn projector(&self) -> DensityMatrix {
        HermitianMatrix::from_pure_state(&self.amplitudes())
    }
}

impl fmt::Display for QubitChannel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::AmplitudeDamping { gamma } => write!(f, "adc:gamma={gamma}"),
            Self::GeneralizedAmplitudeDamping { gamma, eta } => {
                write!(f, "gadc:gamma={gamma},eta={eta}")
            }
            Self::DephasedAmplitudeDamping { kappa, gamma } => {
                write!(f, "dephadc:kappa={kappa},gamma={gamma}")
            }
        }
    }
}

impl FromStr for QubitChannel {
    type Err = Error;

    /// Parses the CLI channel grammar: `adc:gamma=0.5`,
    /// `gadc:gamma=0.5,eta=0.3`, `dephadc:kappa=0.2,gamma=0.5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::BadChannelSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (kind, params) = s.split_once(':').ok_or_else(|| bad("missing `:`"))?;
        let mut gamma = None;
        let mut eta = None;
        let mut kappa = None;
        for pair in params.split(',') {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| bad("parameters must be key=value"))?;
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| bad(&format!("`{value}` is not a number")))?;
            match key.trim() {
                "gamma" => gamma = Some(value),
                "eta" => eta = Some(value),
                "kappa" => kappa = Some(value),
                other => return Err(bad(&format!("unknown parameter `{other}`"))),
            }
        }
        let require = |name: &str, v: Option<f64>| v.ok_or_else(|| bad(&format!("missing {name}")));
        match kind.trim() {
            "adc" => {
                if eta.is_some() || kappa.is_some() {
                    return Err(bad("adc takes only gamma"));
                }
                Self::adc(require("gamma", gamma)?)
            }
            "gadc" => {
                if kappa.is_some() {
                    return Err(bad("gadc takes gamma and eta"));
                }
                Self::gadc(require("gamma", gamma)?, require("eta", eta)?)
            }
            "dephadc" => {
                if eta.is_some() {
                    return Err(bad("dephadc takes kappa and gamma"));
                }
                Self::dephadc(require("kappa", kappa)?, require("gamma", gamma)?)
            }
            other => Err(bad(&format!("unknown channel kind `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ergotropy::{gibbs_state, EnergySpectrum};
    use crate::hermitian::eigvalsh;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ground() -> DensityMatrix {
        HermitianMatrix::diagonal(&[1.0, 0.0])
    }

    /// Random qubit density matrix with a prescribed mean energy.
    fn random_state_with_energy<R: Rng>(e: f64, rng: &mut R) -> DensityMatrix {
        let max_coh = ((1.0 - e) * e).sqrt();
        let c = Complex64::from_polar(
            rng.gen_range(0.0..=1.0) * max_coh,
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        let mut m = HermitianMatrix::diagonal(&[1.0 - e, e]);
        m.set(0, 1, c);
        m.set(1, 0, c.conj());
        m
    }

    #[test]
    fn parameter_validation() {
        assert!(QubitChannel::adc(1.2).is_err());
        assert!(QubitChannel::adc(-0.1).is_err());
        assert!(QubitChannel::gadc(0.5, 0.6).is_err());
        assert!(QubitChannel::dephadc(1.1, 0.5).is_err());
        assert!(QubitChannel::gadc(0.5, 0.5).is_ok());
    }

    #[test]
    fn adc_fixes_ground_state() {
        for gamma in [0.0, 0.3, 0.7, 1.0] {
            let ch = QubitChannel::adc(gamma).unwrap();
            let out = ch.apply(&ground()).unwrap();
            assert!(out.max_abs_diff(&ground()) < 1e-15);
        }
    }

    #[test]
    fn gadc_sends_ground_to_thermal_state() {
        let (gamma, eta) = (0.6, 0.4);
        let ch = QubitChannel::gadc(gamma, eta).unwrap();
        let out = ch.apply(&ground()).unwrap();
        let p1 = gamma * eta;
        assert!(out.max_abs_diff(&HermitianMatrix::diagonal(&[1.0 - p1, p1])) < 1e-15);

        // image is the Gibbs state at beta_{gamma,eta}
        let beta = ch.ground_image_beta();
        assert!((beta - -(p1 / (1.0 - p1)).ln()).abs() < 1e-15);
        let gibbs = gibbs_state(beta, &EnergySpectrum::qubit());
        assert!((gibbs.populations[1] - p1).abs() < 1e-14);
    }

    #[test]
    fn gadc_stationary_state_is_bath_thermal() {
        // the map's fixed point carries excited population eta (gamma*eta is
        // only the one-step image of the ground state)
        let (gamma, eta) = (0.37, 0.21);
        let ch = QubitChannel::gadc(gamma, eta).unwrap();
        let fixed = HermitianMatrix::diagonal(&[1.0 - eta, eta]);
        assert!(ch.apply(&fixed).unwrap().max_abs_diff(&fixed) < 1e-15);
    }

    #[test]
    fn complete_dephasing_kills_coherences() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let ch = QubitChannel::dephadc(1.0, 0.4).unwrap();
        let rho = random_state_with_energy(0.55, &mut rng);
        let out = ch.apply(&rho).unwrap();
        assert!(out.get(0, 1).norm() < 1e-15);
        assert!(out.get(1, 0).norm() < 1e-15);
    }

    #[test]
    fn trace_preserved_on_random_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let channels = [
            QubitChannel::adc(0.35).unwrap(),
            QubitChannel::gadc(0.6, 0.25).unwrap(),
            QubitChannel::dephadc(0.4, 0.7).unwrap(),
        ];
        for ch in channels {
            for _ in 0..50 {
                let rho = crate::hermitian::random_density(2, &mut rng);
                let out = ch.apply(&rho).unwrap();
                assert!((out.trace().re - 1.0).abs() < 1e-12);
                out.validate_density().unwrap();
            }
        }
    }

    #[test]
    fn superoperator_matches_direct_application() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let channels = [
            QubitChannel::adc(0.15).unwrap(),
            QubitChannel::gadc(0.8, 0.45).unwrap(),
            QubitChannel::dephadc(0.55, 0.3).unwrap(),
        ];
        for ch in channels {
            let sop = ch.superoperator();
            for _ in 0..334 {
                let rho = crate::hermitian::random_density(2, &mut rng);
                let via_sop = sop.apply(&rho).unwrap();
                let direct = ch.apply(&rho).unwrap();
                assert!(via_sop.max_abs_diff(&direct) < 1e-12);
            }
        }
    }

    #[test]
    fn superoperator_limits() {
        let id = QubitChannel::adc(0.0).unwrap().superoperator();
        let deph0 = QubitChannel::dephadc(0.0, 0.0).unwrap().superoperator();
        let reference = Superoperator::identity(2);
        for row in 0..4 {
            for col in 0..4 {
                assert!((id.entry(row, col) - reference.entry(row, col)).norm() < 1e-15);
                assert!((deph0.entry(row, col) - reference.entry(row, col)).norm() < 1e-15);
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let full = QubitChannel::adc(1.0).unwrap();
        for _ in 0..10 {
            let rho = crate::hermitian::random_density(2, &mut rng);
            let out = full.apply(&rho).unwrap();
            assert!(out.max_abs_diff(&ground()) < 1e-12);
        }
    }

    #[test]
    fn choi_positivity_across_parameter_grid() {
        // complete positivity checked through the eigensolver on a 20x20 grid
        for i in 0..20 {
            for j in 0..20 {
                let a = i as f64 / 19.0;
                let b = j as f64 / 19.0;
                let channels = [
                    QubitChannel::adc(a).unwrap(),
                    QubitChannel::gadc(a, 0.5 * b).unwrap(),
                    QubitChannel::dephadc(b, a).unwrap(),
                ];
                for ch in channels {
                    let choi = ch.superoperator().choi();
                    let eigs = eigvalsh(&choi).unwrap();
                    assert!(
                        eigs[0] > -1e-10,
                        "Choi not PSD for {ch}: min eig {}",
                        eigs[0]
                    );
                }
            }
        }
    }

    #[test]
    fn output_energy_examples() {
        let adc = QubitChannel::adc(0.3).unwrap();
        assert!((adc.output_energy(1.0) - 0.7).abs() < 1e-15);

        let gadc = QubitChannel::gadc(0.5, 0.5).unwrap();
        assert!((gadc.output_energy(0.0) - 0.25).abs() < 1e-15);

        for kappa in [0.0, 0.4, 1.0] {
            let deph = QubitChannel::dephadc(kappa, 0.3).unwrap();
            assert!((deph.output_energy(0.5) - 0.35).abs() < 1e-15);
        }
    }

    #[test]
    fn output_energy_matches_applied_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        let h = crate::ergotropy::cell_hamiltonian();
        let channels = [
            QubitChannel::adc(0.45).unwrap(),
            QubitChannel::gadc(0.3, 0.4).unwrap(),
            QubitChannel::dephadc(0.6, 0.2).unwrap(),
        ];
        for ch in channels {
            for _ in 0..20 {
                let e = rng.gen_range(0.0..=1.0);
                let rho = random_state_with_energy(e, &mut rng);
                let out = ch.apply(&rho).unwrap();
                assert!((out.expectation(&h) - ch.output_energy(e)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn output_eigenvalue_examples() {
        let (hi, lo) = QubitChannel::adc(0.5).unwrap().output_eigenvalues(1.0);
        assert!((hi - 0.5).abs() < 1e-12 && (lo - 0.5).abs() < 1e-12);

        let (hi, lo) = QubitChannel::gadc(0.36, 0.5)
            .unwrap()
            .output_eigenvalues(0.5);
        assert!((hi - 0.9).abs() < 1e-12 && (lo - 0.1).abs() < 1e-12);

        // ground input is a pure fixed point for adc/dephadc
        for ch in [
            QubitChannel::adc(0.8).unwrap(),
            QubitChannel::dephadc(0.33, 0.8).unwrap(),
        ] {
            let (hi, lo) = ch.output_eigenvalues(0.0);
            assert!((hi - 1.0).abs() < 1e-15 && lo.abs() < 1e-15);
        }
    }

    #[test]
    fn output_eigenvalues_match_eigensolver_and_ignore_phase() {
        let channels = [
            QubitChannel::adc(0.62).unwrap(),
            QubitChannel::gadc(0.41, 0.18).unwrap(),
            QubitChannel::dephadc(0.27, 0.73).unwrap(),
        ];
        for ch in channels {
            for step in 0..=10 {
                let e = step as f64 / 10.0;
                let (hi, lo) = ch.output_eigenvalues(e);
                assert!((hi + lo - 1.0).abs() < 1e-14);
                for phase in [0.0, 0.9, 2.4, -1.3] {
                    let input = CoherentInputState::with_phase(e, phase).unwrap();
                    let out = ch.apply(&input.projector()).unwrap();
                    let eigs = eigvalsh(&out).unwrap();
                    assert!((eigs[0] - lo).abs() < 1e-12);
                    assert!((eigs[1] - hi).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn output_entropy_examples() {
        let noiseless = QubitChannel::gadc(0.0, 0.3).unwrap();
        for step in 0..=8 {
            let e = step as f64 / 8.0;
            assert!(noiseless.output_entropy(e, EntropyBase::Nats).abs() < 1e-12);
        }

        let scrambling = QubitChannel::gadc(1.0, 0.5).unwrap();
        assert!(
            (scrambling.output_entropy(0.37, EntropyBase::Nats) - std::f64::consts::LN_2).abs()
                < 1e-12
        );
        assert!((scrambling.output_entropy(0.37, EntropyBase::Bits) - 1.0).abs() < 1e-12);

        let ch = QubitChannel::gadc(0.5, 0.4).unwrap();
        let expected = -(0.2f64 * 0.2f64.ln() + 0.8 * 0.8f64.ln());
        assert!((ch.output_entropy(0.0, EntropyBase::Nats) - expected).abs() < 1e-12);
    }

    #[test]
    fn output_entropy_is_convex_in_energy() {
        let grid = 101usize;
        for &(gamma, eta) in &[(0.3, 0.1), (0.3, 0.4), (0.7, 0.1), (0.7, 0.4), (0.5, 0.0)] {
            let ch = QubitChannel::gadc(gamma, eta).unwrap();
            let values: Vec<f64> = (0..grid)
                .map(|i| ch.output_entropy(i as f64 / (grid - 1) as f64, EntropyBase::Bits))
                .collect();
            for w in values.windows(3) {
                let second_diff = w[0] - 2.0 * w[1] + w[2];
                assert!(second_diff >= -1e-8, "entropy not convex at ({gamma},{eta})");
            }
        }
    }

    #[test]
    fn hamiltonian_covariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(26);
        let channels = [
            QubitChannel::adc(0.52).unwrap(),
            QubitChannel::gadc(0.36, 0.31).unwrap(),
            QubitChannel::dephadc(0.48, 0.17).unwrap(),
        ];
        for ch in channels {
            for _ in 0..20 {
                let rho = crate::hermitian::random_density(2, &mut rng);
                let t = rng.gen_range(0.0..std::f64::consts::TAU);
                let u = HermitianMatrix::from_fn(2, |i, j| {
                    if i != j {
                        Complex64::ZERO
                    } else if i == 0 {
                        Complex64::ONE
                    } else {
                        Complex64::from_polar(1.0, -t)
                    }
                });
                let rotated = u.matmul(&rho).matmul(&u.adjoint());
                let lhs = ch.apply(&rotated).unwrap();
                let rhs = u.matmul(&ch.apply(&rho).unwrap()).matmul(&u.adjoint());
                assert!(lhs.max_abs_diff(&rhs) < 1e-10);
            }
        }
    }

    #[test]
    fn dephadc_is_dephasing_composed_with_adc() {
        for &(kappa, gamma) in &[(0.0, 0.4), (0.3, 0.0), (0.25, 0.65), (1.0, 0.8)] {
            let composed = pure_dephasing_superoperator(kappa)
                .unwrap()
                .compose(&QubitChannel::adc(gamma).unwrap().superoperator());
            let direct = QubitChannel::dephadc(kappa, gamma).unwrap().superoperator();
            for row in 0..4 {
                for col in 0..4 {
                    assert!((composed.entry(row, col) - direct.entry(row, col)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn degenerate_families_reduce_to_adc() {
        let mut rng = ChaCha8Rng::seed_from_u64(27);
        for gamma in [0.0, 0.33, 0.91] {
            let adc = QubitChannel::adc(gamma).unwrap();
            let gadc0 = QubitChannel::gadc(gamma, 0.0).unwrap();
            let deph0 = QubitChannel::dephadc(0.0, gamma).unwrap();
            for _ in 0..20 {
                let rho = crate::hermitian::random_density(2, &mut rng);
                let reference = adc.apply(&rho).unwrap();
                assert!(gadc0.apply(&rho).unwrap().max_abs_diff(&reference) < 1e-12);
                assert!(deph0.apply(&rho).unwrap().max_abs_diff(&reference) < 1e-12);
            }
        }
    }

    #[test]
    fn channel_spec_grammar() {
        assert_eq!(
            "adc:gamma=0.5".parse::<QubitChannel>().unwrap(),
            QubitChannel::adc(0.5).unwrap()
        );
        assert_eq!(
            "gadc:gamma=0.5,eta=0.3".parse::<QubitChannel>().unwrap(),
            QubitChannel::gadc(0.5, 0.3).unwrap()
        );
        assert_eq!(
            "dephadc:kappa=0.2,gamma=0.5"
                .parse::<QubitChannel>()
                .unwrap(),
            QubitChannel::dephadc(0.2, 0.5).unwrap()
        );
        // round-trips through Display
        let ch = QubitChannel::gadc(0.125, 0.25).unwrap();
        assert_eq!(ch.to_string().parse::<QubitChannel>().unwrap(), ch);

        assert!("adc".parse::<QubitChannel>().is_err());
        assert!("adc:gamma=oops".parse::<QubitChannel>().is_err());
        assert!("adc:gamma=0.5,eta=0.1".parse::<QubitChannel>().is_err());
        assert!("gadc:gamma=0.5".parse::<QubitChannel>().is_err());
        assert!("foo:gamma=0.5".parse::<QubitChannel>().is_err());
        assert!("gadc:gamma=0.5,eta=0.7".parse::<QubitChannel>().is_err());
    }
}
