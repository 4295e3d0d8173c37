//! Discrete phase space of qubit registers: Hadamard pairing between site
//! states and their Bell-type superpositions, the bitwise translation
//! operator, diagram bases and the mixed-state block conjugation.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, Matrix2};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::statekit::{format_bits, parse_bits, DensityOp, PureState};
use crate::{MAX_QUBITS, STRUCTURAL_TOL};

const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Fixed-length register of bits, qubit 0 first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitPattern {
    len: usize,
    value: usize,
}

impl BitPattern {
    pub fn new(len: usize, value: usize) -> Result<Self> {
        if len == 0 || len > MAX_QUBITS || value >> len != 0 {
            return Err(Error::BitPattern(format!("{value} over {len} bits")));
        }
        Ok(Self { len, value })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Big-endian basis index.
    pub fn index(&self) -> usize {
        self.value
    }

    pub fn bit(&self, qubit: usize) -> bool {
        self.value >> (self.len - 1 - qubit) & 1 == 1
    }

    pub fn complement(&self) -> Self {
        Self {
            len: self.len,
            value: !self.value & ((1 << self.len) - 1),
        }
    }

    pub fn ket(&self) -> PureState {
        PureState::basis(self.len, self.value).expect("pattern is in range")
    }

    /// Concatenation `self ‖ other`.
    pub fn concat(&self, other: &BitPattern) -> Result<Self> {
        Self::new(self.len + other.len, self.value << other.len | other.value)
    }
}

impl FromStr for BitPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (len, value) = parse_bits(s)?;
        Self::new(len, value)
    }
}

impl fmt::Display for BitPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_bits(self.len, self.value))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Which way a [`hadamard_pair`] runs. The 2×2 Hadamard is its own inverse,
/// so both directions apply the same matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Site (Wannier) states to their entangled (Bloch) superpositions.
    ToBloch,
    /// Entangled superpositions back to site states.
    ToWannier,
}

/// `(1/√2)[[1, 1], [1, -1]]` applied to an orthonormal pair of states.
pub fn hadamard_pair(
    first: &PureState,
    second: &PureState,
    _direction: Direction,
) -> Result<(PureState, PureState)> {
    if first.n_qubits() != second.n_qubits() {
        return Err(Error::Arity {
            expected: first.n_qubits(),
            got: second.n_qubits(),
        });
    }
    let overlap = first.inner(second).norm();
    if overlap > STRUCTURAL_TOL {
        return Err(Error::NotOrthonormal { overlap });
    }
    let n = first.n_qubits();
    let combine = |s: f64| -> Vec<Complex64> {
        first
            .amplitudes()
            .iter()
            .zip(second.amplitudes())
            .map(|(a, b)| (a + b * s) * H)
            .collect()
    };
    Ok((
        PureState::new(n, combine(1.0))?,
        PureState::new(n, combine(-1.0))?,
    ))
}

/// The four Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bell {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl Bell {
    pub const ALL: [Bell; 4] = [Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus, Bell::PsiMinus];

    /// The two-qubit diagram state this Bell state is.
    pub fn diagram_state(self) -> DiagramState {
        let (bits, sign) = match self {
            Bell::PhiPlus => (0b00, Sign::Plus),
            Bell::PhiMinus => (0b00, Sign::Minus),
            Bell::PsiPlus => (0b01, Sign::Plus),
            Bell::PsiMinus => (0b01, Sign::Minus),
        };
        let base = BitPattern::new(2, bits).expect("two-qubit pattern");
        DiagramState {
            diagram: Diagram::new(base).expect("canonical"),
            sign,
        }
    }

    pub fn state(self) -> PureState {
        self.diagram_state().state()
    }

    pub fn label(self) -> &'static str {
        match self {
            Bell::PhiPlus => "Phi+",
            Bell::PhiMinus => "Phi-",
            Bell::PsiPlus => "Psi+",
            Bell::PsiMinus => "Psi-",
        }
    }
}

impl FromStr for Bell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Bell::ALL
            .into_iter()
            .find(|b| b.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Terms(format!("unknown Bell label {s:?}")))
    }
}

impl fmt::Display for Bell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `e₁..e₄ = Φ⁺, Φ⁻, Ψ⁺, Ψ⁻`.
pub fn bell_basis() -> [PureState; 4] {
    Bell::ALL.map(Bell::state)
}

/// Coordinates `β₁..β₄` of a two-qubit state over [`bell_basis`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellCoefficients {
    pub beta: [Complex64; 4],
}

impl BellCoefficients {
    /// `Σ βᵢ eᵢ`.
    pub fn reconstruct(&self) -> PureState {
        let basis = bell_basis();
        let mut amps = vec![Complex64::new(0.0, 0.0); 4];
        for (b, e) in self.beta.iter().zip(&basis) {
            for (acc, a) in amps.iter_mut().zip(e.amplitudes()) {
                *acc += b * a;
            }
        }
        PureState::from_raw(2, amps)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.beta.iter().map(|b| b.norm_sqr()).sum()
    }
}

pub fn expand_in_bell(state: &PureState) -> Result<BellCoefficients> {
    if state.n_qubits() != 2 {
        return Err(Error::Arity {
            expected: 2,
            got: state.n_qubits(),
        });
    }
    let basis = bell_basis();
    Ok(BellCoefficients {
        beta: std::array::from_fn(|i| basis[i].inner(state)),
    })
}

/// Shift every qubit by `shift (mod 2)`. A shift of 1 complements every bit.
pub fn translate(state: &PureState, shift: i64) -> PureState {
    if shift.rem_euclid(2) == 0 {
        return state.clone();
    }
    let mask = state.dim() - 1;
    let amps = (0..state.dim())
        .map(|i| state.amplitude(!i & mask))
        .collect();
    PureState::from_raw(state.n_qubits(), amps)
}

/// Result of [`translation_symmetry`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TranslationSymmetry {
    /// `T(+1)ψ = phase · ψ`.
    Invariant {
        phase: Complex64,
    },
    NotInvariant,
}

impl TranslationSymmetry {
    /// The phase as a sign, when it is real ±1 (always so for an invariant state).
    pub fn sign(&self) -> Option<Sign> {
        match *self {
            TranslationSymmetry::Invariant { phase }
                if (phase.re - 1.0).abs() <= STRUCTURAL_TOL =>
            {
                Some(Sign::Plus)
            }
            TranslationSymmetry::Invariant { phase }
                if (phase.re + 1.0).abs() <= STRUCTURAL_TOL =>
            {
                Some(Sign::Minus)
            }
            _ => None,
        }
    }
}

pub fn translation_symmetry(state: &PureState) -> TranslationSymmetry {
    translation_symmetry_of(state, &translate(state, 1))
}

/// Ray comparison of a state with an already translated copy.
pub fn translation_symmetry_of(state: &PureState, translated: &PureState) -> TranslationSymmetry {
    let phase = state.inner(translated);
    if (phase.norm() - 1.0).abs() <= STRUCTURAL_TOL {
        TranslationSymmetry::Invariant {
            phase: phase / phase.norm(),
        }
    } else {
        TranslationSymmetry::NotInvariant
    }
}

/// One inverter-chain diagram: the canonical pattern `p` (leading bit 0) of
/// the pair `{p, p̄}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    base: BitPattern,
}

impl Diagram {
    pub fn new(base: BitPattern) -> Result<Self> {
        if base.len() < 2 || base.bit(0) {
            return Err(Error::NonCanonical(base.to_string()));
        }
        Ok(Self { base })
    }

    pub fn base(&self) -> BitPattern {
        self.base
    }

    pub fn flipped(&self) -> BitPattern {
        self.base.complement()
    }

    pub fn n_qubits(&self) -> usize {
        self.base.len()
    }

    pub fn with_sign(self, sign: Sign) -> DiagramState {
        DiagramState {
            diagram: self,
            sign,
        }
    }
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Diagram::new(s.parse()?)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.base, self.flipped())
    }
}

/// A diagram with a sign: `(|p> + sign·|p̄>)/√2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramState {
    pub diagram: Diagram,
    pub sign: Sign,
}

impl DiagramState {
    pub fn state(&self) -> PureState {
        let (plus, minus) = diagram_basis_states(&self.diagram);
        match self.sign {
            Sign::Plus => plus,
            Sign::Minus => minus,
        }
    }
}

impl FromStr for DiagramState {
    type Err = Error;

    /// `p=<bits>,s=<+|->`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Terms(format!("bad diagram descriptor {s:?}"));
        let (p, sign) = s.split_once(',').ok_or_else(bad)?;
        let bits = p.trim().strip_prefix("p=").ok_or_else(bad)?;
        let sign = match sign.trim().strip_prefix("s=").ok_or_else(bad)? {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            _ => return Err(bad()),
        };
        Ok(DiagramState {
            diagram: bits.parse()?,
            sign,
        })
    }
}

impl fmt::Display for DiagramState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={},s={}", self.diagram.base, self.sign.symbol())
    }
}

/// `((|p>+|p̄>)/√2, (|p>-|p̄>)/√2)`.
pub fn diagram_basis_states(d: &Diagram) -> (PureState, PureState) {
    hadamard_pair(&d.base.ket(), &d.flipped().ket(), Direction::ToBloch)
        .expect("distinct basis kets are orthonormal")
}

/// All `2^(n-1)` canonical diagrams on `n` qubits, ascending by pattern.
pub fn enumerate_diagrams(n: usize) -> Result<Vec<Diagram>> {
    if !(2..=MAX_QUBITS).contains(&n) {
        return Err(Error::Range {
            got: n,
            min: 2,
            max: MAX_QUBITS,
        });
    }
    (0..1usize << (n - 1))
        .map(|v| Diagram::new(BitPattern::new(n, v)?))
        .collect()
}

/// `(e₀, e_x, e_y, e_z) = (Φ⁺, Ψ⁺, -iΨ⁻, Φ⁻)`.
pub fn pseudo_spin_basis() -> [PureState; 4] {
    [
        Bell::PhiPlus.state(),
        Bell::PsiPlus.state(),
        Bell::PsiMinus.state().with_phase(Complex64::new(0.0, -1.0)),
        Bell::PhiMinus.state(),
    ]
}

/// Two-dimensional block of the two-qubit space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    /// `{|00>, |11>}`, paired into `Φ±`.
    Triplet,
    /// `{|01>, |10>}`, paired into `Ψ±`.
    Singlet,
}

impl Block {
    fn sites(self) -> [usize; 2] {
        match self {
            Block::Triplet => [0b00, 0b11],
            Block::Singlet => [0b01, 0b10],
        }
    }

    /// The Bell pair `(plus, minus)` spanning this block.
    pub fn bell_pair(self) -> (Bell, Bell) {
        match self {
            Block::Triplet => (Bell::PhiPlus, Bell::PhiMinus),
            Block::Singlet => (Bell::PsiPlus, Bell::PsiMinus),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Block::Triplet => "triplet",
            Block::Singlet => "singlet",
        }
    }
}

/// Coefficients `c_ij` of `ρ = Σ c_ij |b_i><b_j|` over the block's Bell pair
/// `(b₁, b₂)`, obtained by Hadamard conjugation of the site-basis block.
pub fn bell_block_coefficients(rho: &DensityOp, block: Block) -> Result<Matrix2<Complex64>> {
    if rho.n_qubits() != 2 {
        return Err(Error::Arity {
            expected: 2,
            got: rho.n_qubits(),
        });
    }
    let sites = block.sites();
    for i in 0..4 {
        for j in 0..4 {
            if (!sites.contains(&i) || !sites.contains(&j))
                && rho.entry(i, j).norm() > STRUCTURAL_TOL
            {
                return Err(Error::OutsideBlock(block.name()));
            }
        }
    }
    let site_block = Matrix2::from_fn(|i, j| rho.entry(sites[i], sites[j]));
    let hadamard = Matrix2::new(1.0, 1.0, 1.0, -1.0).map(|x| Complex64::new(x * H, 0.0));
    Ok(hadamard * site_block * hadamard)
}

/// Rebuilds `ρ` from its Bell-pair coefficients on the chosen block.
pub fn conjugate_density_basis(rho: &DensityOp, block: Block) -> Result<DensityOp> {
    let coeffs = bell_block_coefficients(rho, block)?;
    let (b1, b2) = block.bell_pair();
    let pair = [b1.state(), b2.state()];
    let mut matrix = DMatrix::from_element(4, 4, Complex64::new(0.0, 0.0));
    for (i, bi) in pair.iter().enumerate() {
        for (j, bj) in pair.iter().enumerate() {
            let c = coeffs[(i, j)];
            for r in 0..4 {
                for s in 0..4 {
                    matrix[(r, s)] += c * bi.amplitude(r) * bj.amplitude(s).conj();
                }
            }
        }
    }
    DensityOp::new(2, matrix)
}
