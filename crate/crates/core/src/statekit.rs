//! Pure states, density operators, partial trace and entropies.
//!
//! Basis index convention is big-endian: for `n` qubits the leftmost
//! character of a bitstring (qubit 0) is the most significant bit of the
//! amplitude index. Under a [`Bipartition`] the qubits of subsystem A come
//! first, so `|ij>` reads `|i>_A |j>_B`.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::{EIGEN_CUTOFF, MAX_QUBITS, SPECTRAL_TOL, STRUCTURAL_TOL};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Normalized amplitude vector over the `2^n` computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Builds a state, checking the length and that the norm is 1 within `1e-10`.
    pub fn new(n_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_qubits(n_qubits)?;
        let expected = 1usize << n_qubits;
        if amplitudes.len() != expected {
            return Err(Error::AmplitudeLength {
                expected,
                got: amplitudes.len(),
            });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > STRUCTURAL_TOL {
            return Err(Error::NotNormalized(norm_sqr));
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Builds a state after rescaling the amplitudes to unit norm.
    pub fn normalized(n_qubits: usize, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized(norm * norm));
        }
        for a in &mut amplitudes {
            *a /= norm;
        }
        Self::new(n_qubits, amplitudes)
    }

    /// Computational basis state `|index>`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        check_qubits(n_qubits)?;
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::BitPattern(format!("index {index} >= {dim}")));
        }
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Computational basis state from a bitstring such as `"0101"`.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let (n, index) = parse_bits(bits)?;
        Self::basis(n, index)
    }

    /// Normalized linear combination of equally sized states.
    pub fn superpose(terms: &[(Complex64, &PureState)]) -> Result<Self> {
        let first = terms
            .first()
            .ok_or_else(|| Error::Terms("empty superposition".into()))?;
        let n = first.1.n_qubits;
        let mut amplitudes = vec![ZERO; 1 << n];
        for (c, state) in terms {
            if state.n_qubits != n {
                return Err(Error::Arity {
                    expected: n,
                    got: state.n_qubits,
                });
            }
            for (acc, a) in amplitudes.iter_mut().zip(&state.amplitudes) {
                *acc += c * a;
            }
        }
        Self::normalized(n, amplitudes)
    }

    /// Tensor product `|self> ⊗ |other>`; `self` occupies the leading qubits.
    pub fn tensor(&self, other: &PureState) -> Result<Self> {
        let n = self.n_qubits + other.n_qubits;
        check_qubits(n)?;
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Self::new(n, amplitudes)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    /// `<self|other>`. Panics if the qubit counts differ.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        assert_eq!(self.n_qubits, other.n_qubits, "inner product arity");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Multiplies by a unit-modulus phase.
    pub fn with_phase(&self, phase: Complex64) -> Self {
        Self {
            n_qubits: self.n_qubits,
            amplitudes: self.amplitudes.iter().map(|a| a * phase).collect(),
        }
    }

    /// Largest entrywise distance to `other`.
    pub fn max_abs_diff(&self, other: &PureState) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &PureState, tol: f64) -> bool {
        self.n_qubits == other.n_qubits && self.max_abs_diff(other) <= tol
    }

    pub(crate) fn from_raw(n_qubits: usize, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << n_qubits);
        Self {
            n_qubits,
            amplitudes,
        }
    }
}

/// Parses a bitstring into `(n_qubits, big-endian index)`.
pub fn parse_bits(bits: &str) -> Result<(usize, usize)> {
    if bits.is_empty() || bits.len() > MAX_QUBITS {
        return Err(Error::BitPattern(bits.to_string()));
    }
    let mut index = 0usize;
    for ch in bits.chars() {
        index <<= 1;
        match ch {
            '0' => {}
            '1' => index |= 1,
            _ => return Err(Error::BitPattern(bits.to_string())),
        }
    }
    Ok((bits.len(), index))
}

/// Big-endian bitstring of `index` over `n` qubits.
pub fn format_bits(n: usize, index: usize) -> String {
    (0..n)
        .map(|q| {
            if index >> (n - 1 - q) & 1 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::QubitCount {
            got: n,
            max: MAX_QUBITS,
        });
    }
    Ok(())
}

/// Hermitian, unit-trace, positive semidefinite operator on `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOp {
    n_qubits: usize,
    matrix: DMatrix<Complex64>,
}

impl DensityOp {
    pub fn new(n_qubits: usize, matrix: DMatrix<Complex64>) -> Result<Self> {
        check_qubits(n_qubits)?;
        let dim = 1usize << n_qubits;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::BadShape {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        let herm = hermitian_deviation(&matrix);
        if herm > STRUCTURAL_TOL {
            return Err(Error::NotHermitian(herm));
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > STRUCTURAL_TOL || trace.im.abs() > STRUCTURAL_TOL {
            return Err(Error::BadTrace(trace.re));
        }
        let min = raw_eigenvalues(&matrix)
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min < -STRUCTURAL_TOL {
            return Err(Error::NotPositive(min));
        }
        Ok(Self { n_qubits, matrix })
    }

    /// Diagonal operator `Σ w_i |i><i|`.
    pub fn diagonal(n_qubits: usize, weights: &[f64]) -> Result<Self> {
        check_qubits(n_qubits)?;
        let dim = 1usize << n_qubits;
        if weights.len() != dim {
            return Err(Error::AmplitudeLength {
                expected: dim,
                got: weights.len(),
            });
        }
        let matrix = DMatrix::from_fn(dim, dim, |i, j| {
            if i == j {
                Complex64::new(weights[i], 0.0)
            } else {
                ZERO
            }
        });
        Self::new(n_qubits, matrix)
    }

    /// Weighted mixture `Σ p_k |ψ_k><ψ_k|`.
    pub fn mixture(terms: &[(f64, &PureState)]) -> Result<Self> {
        let first = terms
            .first()
            .ok_or_else(|| Error::Terms("empty mixture".into()))?;
        let n = first.1.n_qubits();
        let dim = 1usize << n;
        let mut matrix = DMatrix::from_element(dim, dim, ZERO);
        for (p, state) in terms {
            if state.n_qubits() != n {
                return Err(Error::Arity {
                    expected: n,
                    got: state.n_qubits(),
                });
            }
            matrix += outer(state) * Complex64::new(*p, 0.0);
        }
        Self::new(n, matrix)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    /// Eigenvalues in descending order; values in `[-1e-10, 0)` are clamped to 0.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut values: Vec<f64> = raw_eigenvalues(&self.matrix)
            .into_iter()
            .map(|v| v.max(0.0))
            .collect();
        values.sort_by(|a, b| b.total_cmp(a));
        values
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// `Tr(ρ²)`.
    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    pub fn max_abs_diff(&self, other: &DensityOp) -> f64 {
        max_abs(&(&self.matrix - &other.matrix))
    }

    pub(crate) fn from_raw(n_qubits: usize, matrix: DMatrix<Complex64>) -> Self {
        Self { n_qubits, matrix }
    }
}

fn outer(state: &PureState) -> DMatrix<Complex64> {
    let dim = state.dim();
    let a = state.amplitudes();
    DMatrix::from_fn(dim, dim, |i, j| a[i] * a[j].conj())
}

fn raw_eigenvalues(matrix: &DMatrix<Complex64>) -> Vec<f64> {
    SymmetricEigen::new(matrix.clone())
        .eigenvalues
        .iter()
        .copied()
        .collect()
}

fn hermitian_deviation(m: &DMatrix<Complex64>) -> f64 {
    max_abs(&(m - m.adjoint()))
}

pub(crate) fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Which side of a [`Bipartition`] to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Ordered split of the qubits `0..n` into two non-empty subsystems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    n_qubits: usize,
    a: Vec<usize>,
    b: Vec<usize>,
}

impl Bipartition {
    pub fn new(n_qubits: usize, a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::Bipartition("both sides must be non-empty".into()));
        }
        let mut seen = vec![false; n_qubits];
        for &q in a.iter().chain(&b) {
            if q >= n_qubits {
                return Err(Error::Bipartition(format!(
                    "qubit {q} out of range for {n_qubits} qubits"
                )));
            }
            if std::mem::replace(&mut seen[q], true) {
                return Err(Error::Bipartition(format!("qubit {q} listed twice")));
            }
        }
        if let Some(q) = seen.iter().position(|s| !s) {
            return Err(Error::Bipartition(format!("qubit {q} not assigned")));
        }
        Ok(Self { n_qubits, a, b })
    }

    /// A gets the listed qubits, B gets the rest in ascending order.
    pub fn with_a(n_qubits: usize, a: Vec<usize>) -> Result<Self> {
        let b = (0..n_qubits).filter(|q| !a.contains(q)).collect();
        Self::new(n_qubits, a, b)
    }

    /// First `⌊n/2⌋` qubits in A, the rest in B.
    pub fn halves(n_qubits: usize) -> Result<Self> {
        if n_qubits < 2 {
            return Err(Error::Bipartition(format!(
                "need at least 2 qubits to split, got {n_qubits}"
            )));
        }
        let mid = n_qubits / 2;
        Self::new(n_qubits, (0..mid).collect(), (mid..n_qubits).collect())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    fn side(&self, keep: Subsystem) -> (&[usize], &[usize]) {
        match keep {
            Subsystem::A => (&self.a, &self.b),
            Subsystem::B => (&self.b, &self.a),
        }
    }

    fn check(&self, n_qubits: usize) -> Result<()> {
        if n_qubits != self.n_qubits {
            return Err(Error::Bipartition(format!(
                "split covers {} qubits but the state has {n_qubits}",
                self.n_qubits
            )));
        }
        Ok(())
    }
}

/// Full-register index for kept bits `kept_idx` over `kept` and traced bits
/// `traced_idx` over `traced`.
fn compose(
    n: usize,
    kept: &[usize],
    kept_idx: usize,
    traced: &[usize],
    traced_idx: usize,
) -> usize {
    let mut index = 0;
    for (pos, &q) in kept.iter().enumerate() {
        let bit = kept_idx >> (kept.len() - 1 - pos) & 1;
        index |= bit << (n - 1 - q);
    }
    for (pos, &q) in traced.iter().enumerate() {
        let bit = traced_idx >> (traced.len() - 1 - pos) & 1;
        index |= bit << (n - 1 - q);
    }
    index
}

/// `ρ = |ψ><ψ|`.
pub fn density_of(state: &PureState) -> DensityOp {
    DensityOp::from_raw(state.n_qubits(), outer(state))
}

/// Outcome of [`purity_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Purity {
    pub pure: bool,
    /// `λ` with `ρ² = λρ` when ρ is proportional to a projector.
    pub projector_scale: Option<f64>,
}

pub fn purity_check(rho: &DensityOp) -> Purity {
    let m = rho.matrix();
    let square = m * m;
    let pure = max_abs(&(&square - m)) <= STRUCTURAL_TOL;
    let lambda = square.trace().re;
    let scaled = m * Complex64::new(lambda, 0.0);
    let projector_scale = (max_abs(&(&square - &scaled)) <= STRUCTURAL_TOL).then_some(lambda);
    Purity {
        pure,
        projector_scale,
    }
}

/// Reduced operator on the `keep` side of `part`.
pub fn partial_trace(rho: &DensityOp, part: &Bipartition, keep: Subsystem) -> Result<DensityOp> {
    part.check(rho.n_qubits())?;
    let n = rho.n_qubits();
    let (kept, traced) = part.side(keep);
    let kept_dim = 1usize << kept.len();
    let traced_dim = 1usize << traced.len();
    let m = rho.matrix();
    let reduced = DMatrix::from_fn(kept_dim, kept_dim, |i, j| {
        (0..traced_dim)
            .map(|t| {
                m[(
                    compose(n, kept, i, traced, t),
                    compose(n, kept, j, traced, t),
                )]
            })
            .sum()
    });
    Ok(DensityOp::from_raw(kept.len(), reduced))
}

/// Base of the logarithm used by [`von_neumann_entropy_in`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBase {
    Bits,
    Nats,
}

/// `-Σ λ log₂ λ` over the spectrum; eigenvalues below `1e-12` contribute 0.
pub fn von_neumann_entropy(rho: &DensityOp) -> f64 {
    von_neumann_entropy_in(rho, LogBase::Bits)
}

pub fn von_neumann_entropy_in(rho: &DensityOp, base: LogBase) -> f64 {
    spectrum_entropy(&rho.eigenvalues(), base)
}

pub fn spectrum_entropy(eigenvalues: &[f64], base: LogBase) -> f64 {
    let log = |x: f64| match base {
        LogBase::Bits => x.log2(),
        LogBase::Nats => x.ln(),
    };
    let s: f64 = eigenvalues
        .iter()
        .filter(|&&l| l > EIGEN_CUTOFF)
        .map(|&l| -l * log(l))
        .sum();
    s.max(0.0)
}

/// Entropy in bits of the A-side reduced state.
pub fn entanglement_entropy(state: &PureState, part: &Bipartition) -> Result<f64> {
    let reduced = partial_trace(&density_of(state), part, Subsystem::A)?;
    Ok(von_neumann_entropy(&reduced))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtResult {
    /// Non-increasing, non-negative.
    pub coefficients: Vec<f64>,
    /// Number of coefficients above `1e-10`.
    pub rank: usize,
}

/// Singular values of the `2^|A| × 2^|B|` amplitude matrix.
pub fn schmidt_decompose(state: &PureState, part: &Bipartition) -> Result<SchmidtResult> {
    part.check(state.n_qubits())?;
    let n = state.n_qubits();
    let rows = 1usize << part.a().len();
    let cols = 1usize << part.b().len();
    let amps = state.amplitudes();
    let matrix = DMatrix::from_fn(rows, cols, |i, j| {
        amps[compose(n, part.a(), i, part.b(), j)]
    });
    let mut coefficients: Vec<f64> = matrix.singular_values().iter().copied().collect();
    coefficients.sort_by(|a, b| b.total_cmp(a));
    let rank = coefficients
        .iter()
        .filter(|&&c| c > STRUCTURAL_TOL)
        .count()
        .max(1);
    Ok(SchmidtResult { coefficients, rank })
}

pub fn is_product(state: &PureState, part: &Bipartition) -> Result<bool> {
    Ok(schmidt_decompose(state, part)?.rank == 1)
}

/// Whether the two reduced spectra of a pure state agree within `1e-9`.
pub fn reduced_spectra_agree(state: &PureState, part: &Bipartition) -> Result<bool> {
    let rho = density_of(state);
    let a = partial_trace(&rho, part, Subsystem::A)?.eigenvalues();
    let b = partial_trace(&rho, part, Subsystem::B)?.eigenvalues();
    let len = a.len().max(b.len());
    let at = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
    Ok((0..len).all(|i| (at(&a, i) - at(&b, i)).abs() <= SPECTRAL_TOL))
}
