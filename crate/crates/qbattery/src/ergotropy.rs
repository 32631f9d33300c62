//! Ergotropy-family functionals.
//!
//! Ergotropy is the maximum work extractable from a state by unitary
//! operations: mean energy minus the energy of the passive counterpart, the
//! state whose eigenvalues (descending) sit on the Hamiltonian levels
//! (ascending). Total ergotropy is its many-copy regularization, computed via
//! the Gibbs state whose entropy matches the input. All entropies are in nats.

use num_complex::Complex64;

use crate::hermitian::{eigvalsh, partial_trace, DensityMatrix, HermitianMatrix};
use crate::{Error, Result};

/// Sorted energy levels with the ground level shifted to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergySpectrum {
    energies: Vec<f64>,
}

impl EnergySpectrum {
    /// Sorts ascending and shifts the minimum to 0.
    pub fn new(mut energies: Vec<f64>) -> Self {
        energies.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let ground = energies.first().copied().unwrap_or(0.0);
        for e in energies.iter_mut() {
            *e -= ground;
        }
        Self { energies }
    }

    /// Spectrum of a Hermitian Hamiltonian matrix.
    pub fn from_matrix(h: &HermitianMatrix) -> Result<Self> {
        Ok(Self::new(eigvalsh(h)?))
    }

    /// Single battery cell: levels (0, 1).
    pub fn qubit() -> Self {
        Self {
            energies: vec![0.0, 1.0],
        }
    }

    /// `n` non-interacting cells: Hamming-weight levels with binomial
    /// degeneracies, ascending.
    pub fn register(n: usize) -> Self {
        let mut energies: Vec<f64> = (0..1usize << n)
            .map(|x| x.count_ones() as f64)
            .collect();
        energies.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Self { energies }
    }

    pub fn levels(&self) -> &[f64] {
        &self.energies
    }

    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }
}

/// Single-cell Hamiltonian `|1><1|`.
pub fn cell_hamiltonian() -> HermitianMatrix {
    HermitianMatrix::diagonal(&[0.0, 1.0])
}

/// Non-interacting register Hamiltonian `sum_i h_i` on `n` qubits
/// (diagonal of Hamming weights).
pub fn register_hamiltonian(n: usize) -> HermitianMatrix {
    let weights: Vec<f64> = (0..1usize << n).map(|x| x.count_ones() as f64).collect();
    HermitianMatrix::diagonal(&weights)
}

/// Outcome of one ergotropy evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErgotropyReport {
    pub input_energy: f64,
    pub output_energy: f64,
    pub ergotropy: f64,
    pub passive_energy: f64,
    pub entropy_nats: f64,
}

/// Shannon entropy of a probability vector in nats, with `0 ln 0 = 0`.
pub fn entropy_from_populations(populations: &[f64]) -> f64 {
    populations
        .iter()
        .map(|&p| {
            let p = p.max(0.0);
            if p > 0.0 {
                -p * p.ln()
            } else {
                0.0
            }
        })
        .sum()
}

/// Von Neumann entropy of a state in nats (eigenvalues clipped at 0).
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    Ok(entropy_from_populations(&eigvalsh(rho)?))
}

/// Energy of the passive counterpart: state eigenvalues descending paired
/// against energy levels ascending. Invariant under permutations of either
/// input list.
pub fn passive_energy(state_spectrum: &[f64], hamiltonian: &EnergySpectrum) -> Result<f64> {
    if state_spectrum.len() != hamiltonian.len() {
        return Err(Error::DimensionMismatch {
            expected: hamiltonian.len(),
            got: state_spectrum.len(),
        });
    }
    let total: f64 = state_spectrum.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::NotDensityMatrix {
            reason: format!("spectrum sums to {total}"),
        });
    }
    let mut descending = state_spectrum.to_vec();
    descending.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(descending
        .iter()
        .zip(hamiltonian.levels())
        .map(|(p, e)| p * e)
        .sum())
}

/// Ergotropy of `rho` under `hamiltonian`; energies are measured relative to
/// the Hamiltonian's ground level.
pub fn ergotropy(rho: &DensityMatrix, hamiltonian: &HermitianMatrix) -> Result<ErgotropyReport> {
    if rho.dim() != hamiltonian.dim() {
        return Err(Error::DimensionMismatch {
            expected: hamiltonian.dim(),
            got: rho.dim(),
        });
    }
    let h_eigs = eigvalsh(hamiltonian)?;
    let ground = h_eigs.first().copied().unwrap_or(0.0);
    let spectrum = EnergySpectrum::new(h_eigs);
    let state_spectrum = eigvalsh(rho)?;
    let energy = rho.expectation(hamiltonian) - ground;
    let passive = passive_energy(&state_spectrum, &spectrum)?;
    Ok(ErgotropyReport {
        input_energy: energy,
        output_energy: energy,
        ergotropy: energy - passive,
        passive_energy: passive,
        entropy_nats: entropy_from_populations(&state_spectrum),
    })
}

/// Closed-form qubit ergotropy `rho_11 - lambda_min` for `h = |1><1|`.
pub fn ergotropy_qubit(rho11: f64, lambda_min: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&rho11) {
        return Err(Error::ParameterOutOfRange {
            name: "rho11",
            value: rho11,
            lo: 0.0,
            hi: 1.0,
        });
    }
    if !(0.0..=0.5).contains(&lambda_min) {
        return Err(Error::ParameterOutOfRange {
            name: "lambda_min",
            value: lambda_min,
            lo: 0.0,
            hi: 0.5,
        });
    }
    Ok(rho11 - lambda_min)
}

/// Thermal Gibbs state data at inverse temperature `beta`.
#[derive(Debug, Clone, PartialEq)]
pub struct GibbsState {
    pub populations: Vec<f64>,
    pub energy: f64,
    pub entropy_nats: f64,
}

/// Gibbs state over an energy spectrum; `beta = f64::INFINITY` selects the
/// ground manifold (uniform over degenerate ground levels).
pub fn gibbs_state(beta: f64, hamiltonian: &EnergySpectrum) -> GibbsState {
    let levels = hamiltonian.levels();
    let weights: Vec<f64> = if beta.is_infinite() {
        levels
            .iter()
            .map(|&e| if e <= 0.0 { 1.0 } else { 0.0 })
            .collect()
    } else {
        levels.iter().map(|&e| (-beta * e).exp()).collect()
    };
    let z: f64 = weights.iter().sum();
    let populations: Vec<f64> = weights.iter().map(|w| w / z).collect();
    let energy = populations.iter().zip(levels).map(|(p, e)| p * e).sum();
    GibbsState {
        entropy_nats: entropy_from_populations(&populations),
        populations,
        energy,
    }
}

/// Log partition function over a spectrum (finite `beta`).
pub fn log_partition(beta: f64, hamiltonian: &EnergySpectrum) -> f64 {
    hamiltonian
        .levels()
        .iter()
        .map(|&e| (-beta * e).exp())
        .sum::<f64>()
        .ln()
}

const BETA_STAR_ENTROPY_TOL: f64 = 1e-11;

/// Inverse temperature whose Gibbs state matches the entropy of `rho`;
/// `f64::INFINITY` when the state entropy is at (or below) the ground-manifold
/// entropy. Bisection is safe because the Gibbs entropy is strictly monotone
/// in `beta`.
pub fn entropy_matched_beta(rho: &DensityMatrix, hamiltonian: &HermitianMatrix) -> Result<f64> {
    let spectrum = EnergySpectrum::from_matrix(hamiltonian)?;
    let target = von_neumann_entropy(rho)?;
    Ok(match_entropy(target, &spectrum))
}

fn match_entropy(target: f64, spectrum: &EnergySpectrum) -> f64 {
    let ground_entropy = gibbs_state(f64::INFINITY, spectrum).entropy_nats;
    if target <= ground_entropy + BETA_STAR_ENTROPY_TOL {
        return f64::INFINITY;
    }
    let mut hi = 1.0;
    while gibbs_state(hi, spectrum).entropy_nats > target {
        hi *= 2.0;
        if hi > 1e18 {
            return f64::INFINITY;
        }
    }
    // Bisect to interval exhaustion rather than stopping at the entropy
    // tolerance: near beta* = 0 the Gibbs entropy is quadratically flat, so
    // an entropy-based exit would leave the Gibbs *energy* poorly pinned.
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let s = gibbs_state(mid, spectrum).entropy_nats;
        if s > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let beta = 0.5 * (lo + hi);
    debug_assert!((gibbs_state(beta, spectrum).entropy_nats - target).abs() < BETA_STAR_ENTROPY_TOL);
    beta
}

/// Total (regularized, many-copy) ergotropy: mean energy minus the energy of
/// the entropy-matched Gibbs state. Always at least the ergotropy; equal to
/// it for qubits.
pub fn total_ergotropy(rho: &DensityMatrix, hamiltonian: &HermitianMatrix) -> Result<f64> {
    if rho.dim() != hamiltonian.dim() {
        return Err(Error::DimensionMismatch {
            expected: hamiltonian.dim(),
            got: rho.dim(),
        });
    }
    let h_eigs = eigvalsh(hamiltonian)?;
    let ground = h_eigs.first().copied().unwrap_or(0.0);
    let spectrum = EnergySpectrum::new(h_eigs);
    let width = spectrum.levels().last().copied().unwrap_or(0.0);
    if width < 1e-14 {
        // fully degenerate Hamiltonian: nothing extractable
        return Ok(0.0);
    }
    let energy = rho.expectation(hamiltonian) - ground;
    let target = von_neumann_entropy(rho)?;
    let beta_star = match_entropy(target, &spectrum);
    let gibbs_energy = gibbs_state(beta_star, &spectrum).energy;
    Ok(energy - gibbs_energy)
}

/// Local ergotropy of an `n`-qubit state under the non-interacting register
/// Hamiltonian: sum of the marginal ergotropies against the single-site `h`.
pub fn local_ergotropy_product(
    rho: &DensityMatrix,
    site_hamiltonian: &HermitianMatrix,
) -> Result<f64> {
    let dim = rho.dim();
    if !dim.is_power_of_two() || dim < 2 {
        return Err(Error::DimensionMismatch {
            expected: dim.next_power_of_two().max(2),
            got: dim,
        });
    }
    let n = dim.trailing_zeros() as usize;
    let site_dims = vec![2usize; n];
    let mut total = 0.0;
    for site in 0..n {
        let marginal = partial_trace(rho, &site_dims, &[site])?;
        total += ergotropy(&marginal, site_hamiltonian)?.ergotropy;
    }
    Ok(total)
}

/// Work extractable with the assistance of a perfect thermal bath at inverse
/// temperature `beta > 0`: the free-energy gap to the bath's Gibbs state.
pub fn thermal_extractable_work(
    rho: &DensityMatrix,
    hamiltonian: &HermitianMatrix,
    beta: f64,
) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::ParameterOutOfRange {
            name: "beta",
            value: beta,
            lo: f64::MIN_POSITIVE,
            hi: f64::INFINITY,
        });
    }
    let h_eigs = eigvalsh(hamiltonian)?;
    let ground = h_eigs.first().copied().unwrap_or(0.0);
    let spectrum = EnergySpectrum::new(h_eigs);
    let energy = rho.expectation(hamiltonian) - ground;
    let entropy = von_neumann_entropy(rho)?;
    if beta.is_infinite() {
        return Ok(energy);
    }
    Ok(energy - (entropy - log_partition(beta, &spectrum)) / beta)
}

/// Ergotropy of an `n`-fold product of qubit states from their single-site
/// spectra, without building the `2^n` matrix: descending products of
/// per-site eigenvalues against ascending Hamming weights.
pub fn product_qubit_ergotropy(site_eigs: &[(f64, f64)], site_energies: &[f64]) -> f64 {
    let n = site_eigs.len();
    assert_eq!(n, site_energies.len());
    let mut eigs = vec![1.0f64];
    for &(hi, lo) in site_eigs {
        let mut next = Vec::with_capacity(eigs.len() * 2);
        for &e in &eigs {
            next.push(e * hi);
            next.push(e * lo);
        }
        eigs = next;
    }
    eigs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut weights: Vec<f64> = (0..1usize << n).map(|x| x.count_ones() as f64).collect();
    weights.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let passive: f64 = eigs.iter().zip(&weights).map(|(p, e)| p * e).sum();
    let energy: f64 = site_energies.iter().sum();
    energy - passive
}
