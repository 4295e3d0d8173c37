//! Entanglement quantifiers.
//!
//! Two concurrences are offered. The translation concurrence is the overlap
//! `|<ψ|T(+1)ψ>|` with the bit-complemented state and is defined for any
//! register size. The Wootters concurrence `|<ψ|σ_y⊗σ_y|ψ*>|` is the
//! standard spin-flip quantity and only applies to two qubits. The two agree
//! on the `α|01> + β|10>` family and on diagram states but differ elsewhere,
//! e.g. on `|++>`.

use std::collections::HashSet;

use nalgebra::Matrix4;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::phasespace::{translate, translation_symmetry, DiagramState, Sign, TranslationSymmetry};
use crate::statekit::{entanglement_entropy, schmidt_decompose, Bipartition, PureState};
use crate::{EIGEN_CUTOFF, SPECTRAL_TOL, STRUCTURAL_TOL};

/// Rounds values within `1e-12` of the unit interval onto it.
fn clamp_unit(x: f64) -> f64 {
    if x < EIGEN_CUTOFF {
        0.0
    } else if x > 1.0 - EIGEN_CUTOFF {
        1.0
    } else {
        x
    }
}

fn check_unit(what: &'static str, x: f64) -> Result<f64> {
    if !(-EIGEN_CUTOFF..=1.0 + EIGEN_CUTOFF).contains(&x) || x.is_nan() {
        return Err(Error::OutOfRange { what, value: x });
    }
    Ok(x.clamp(0.0, 1.0))
}

/// `|<ψ|T(+1)ψ>|`.
pub fn concurrence_translation(state: &PureState) -> f64 {
    clamp_unit(state.inner(&translate(state, 1)).norm())
}

fn sigma_y_sigma_y() -> Matrix4<Complex64> {
    let i = Complex64::i();
    let zero = Complex64::new(0.0, 0.0);
    let sy = [[zero, -i], [i, zero]];
    Matrix4::from_fn(|r, c| sy[r >> 1][c >> 1] * sy[r & 1][c & 1])
}

/// `|<ψ|σ_y⊗σ_y|ψ*>|` for a two-qubit state.
pub fn concurrence_wootters(state: &PureState) -> Result<f64> {
    if state.n_qubits() != 2 {
        return Err(Error::Arity {
            expected: 2,
            got: state.n_qubits(),
        });
    }
    let flip = sigma_y_sigma_y();
    let amps = state.amplitudes();
    let overlap: Complex64 = (0..4)
        .map(|r| {
            let flipped: Complex64 = (0..4).map(|c| flip[(r, c)] * amps[c].conj()).sum();
            amps[r].conj() * flipped
        })
        .sum();
    Ok(clamp_unit(overlap.norm()))
}

/// `-p log₂ p - q log₂ q` with `0·log 0 = 0`; `p + q = 1` is assumed.
fn entropy_pair(p: f64, q: f64) -> f64 {
    let term = |x: f64| if x > 0.0 { -x * x.log2() } else { 0.0 };
    (term(p) + term(q)).max(0.0)
}

/// Binary Shannon entropy in bits.
pub fn binary_entropy(x: f64) -> Result<f64> {
    let x = check_unit("binary entropy argument", x)?;
    Ok(entropy_pair(x, 1.0 - x))
}

/// `E(C) = H(½ + ½√(1-C²))`.
pub fn formation_from_concurrence(c: f64) -> Result<f64> {
    let c = check_unit("concurrence", c)?;
    let root = (1.0 - c * c).max(0.0).sqrt();
    // Smaller weight written as C²/(2(1+√(1-C²))) to avoid cancellation near C = 0.
    let small = c * c / (2.0 * (1.0 + root));
    Ok(clamp_unit(entropy_pair(1.0 - small, small)))
}

/// Distance from maximal entanglement, `|E(C) - 1|`.
pub fn entropic_distance(c: f64) -> Result<f64> {
    Ok((formation_from_concurrence(c)? - 1.0).abs())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceReport {
    pub translation_c: f64,
    /// Present for two-qubit states only.
    pub wootters_c: Option<f64>,
    /// Both present and within `1e-9` of each other.
    pub agree: bool,
}

pub fn concurrence_report(state: &PureState) -> ConcurrenceReport {
    let translation_c = concurrence_translation(state);
    let wootters_c = concurrence_wootters(state).ok();
    let agree = wootters_c.is_some_and(|w| (w - translation_c).abs() <= SPECTRAL_TOL);
    ConcurrenceReport {
        translation_c,
        wootters_c,
        agree,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Schmidt rank 1 across the bipartition.
    Product,
    /// Schmidt rank above 1 and nonzero translation concurrence.
    Entangled,
    /// Schmidt rank above 1 but zero translation concurrence: entangled
    /// states the diagram construction cannot represent.
    PaperUnrepresentable,
}

impl Classification {
    pub fn label(self) -> &'static str {
        match self {
            Classification::Product => "product",
            Classification::Entangled => "entangled",
            Classification::PaperUnrepresentable => "paper-unrepresentable",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    pub entropy_bits: f64,
    pub schmidt_rank: usize,
    pub concurrence: ConcurrenceReport,
    /// `E` of the translation concurrence.
    pub formation_e: f64,
    /// `E` of the Wootters concurrence (two qubits only).
    pub formation_e_wootters: Option<f64>,
    pub entropic_distance: f64,
    pub translation_phase: Option<Sign>,
    pub classification: Classification,
}

pub fn measure_report(state: &PureState, part: &Bipartition) -> Result<MeasureReport> {
    let entropy_bits = entanglement_entropy(state, part)?;
    let schmidt_rank = schmidt_decompose(state, part)?.rank;
    let concurrence = concurrence_report(state);
    let formation_e = formation_from_concurrence(concurrence.translation_c)?;
    let formation_e_wootters = concurrence
        .wootters_c
        .map(formation_from_concurrence)
        .transpose()?;
    let entropic_distance = entropic_distance(concurrence.translation_c)?;
    let classification = if schmidt_rank == 1 {
        Classification::Product
    } else if concurrence.translation_c > STRUCTURAL_TOL {
        Classification::Entangled
    } else {
        Classification::PaperUnrepresentable
    };
    Ok(MeasureReport {
        entropy_bits,
        schmidt_rank,
        concurrence,
        formation_e,
        formation_e_wootters,
        entropic_distance,
        translation_phase: translation_symmetry(state).sign(),
        classification,
    })
}

/// Verdict of the even/odd superposition rule on diagram states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaperVerdict {
    /// All terms share one sign: the superposition stays in the even or odd
    /// space and is again an entangled diagram-type state.
    EntangledPair,
    /// Mixed signs within a single diagram: the Hadamard pair collapses back
    /// to a site state.
    Product,
    /// Mixed signs across different diagrams: no global sign under
    /// translation, not representable by a diagram.
    Unrepresentable,
}

impl PaperVerdict {
    pub fn label(self) -> &'static str {
        match self {
            PaperVerdict::EntangledPair => "entangled",
            PaperVerdict::Product => "product",
            PaperVerdict::Unrepresentable => "unrepresentable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchmidtVerdict {
    Product,
    Entangled,
}

impl SchmidtVerdict {
    pub fn label(self) -> &'static str {
        match self {
            SchmidtVerdict::Product => "product",
            SchmidtVerdict::Entangled => "entangled",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuperpositionVerdict {
    pub state: PureState,
    pub paper: PaperVerdict,
    pub schmidt: SchmidtVerdict,
    pub schmidt_rank: usize,
    pub translation: TranslationSymmetry,
    pub translation_c: f64,
}

/// Builds `Σ cᵢ dᵢ` and reports both the even/odd verdict and the Schmidt
/// verdict across the first-half/second-half split.
pub fn classify_bell_superposition(
    terms: &[(DiagramState, Complex64)],
) -> Result<SuperpositionVerdict> {
    let (first, _) = terms
        .first()
        .ok_or_else(|| Error::Terms("no terms".into()))?;
    let n = first.diagram.n_qubits();
    let mut seen = HashSet::new();
    for (d, _) in terms {
        if d.diagram.n_qubits() != n {
            return Err(Error::Arity {
                expected: n,
                got: d.diagram.n_qubits(),
            });
        }
        if !seen.insert(*d) {
            return Err(Error::Terms(format!("duplicate term {d}")));
        }
    }
    let weight: f64 = terms.iter().map(|(_, c)| c.norm_sqr()).sum();
    if (weight - 1.0).abs() > STRUCTURAL_TOL {
        return Err(Error::NotNormalized(weight));
    }

    let states: Vec<PureState> = terms.iter().map(|(d, _)| d.state()).collect();
    let weighted: Vec<(Complex64, &PureState)> =
        terms.iter().map(|(_, c)| *c).zip(&states).collect();
    let state = PureState::superpose(&weighted)?;

    let same_sign = terms.iter().all(|(d, _)| d.sign == first.sign);
    let same_diagram = terms.iter().all(|(d, _)| d.diagram == first.diagram);
    let paper = match (same_sign, same_diagram) {
        (true, _) => PaperVerdict::EntangledPair,
        (false, true) => PaperVerdict::Product,
        (false, false) => PaperVerdict::Unrepresentable,
    };

    let schmidt_rank = schmidt_decompose(&state, &Bipartition::halves(n)?)?.rank;
    let schmidt = if schmidt_rank == 1 {
        SchmidtVerdict::Product
    } else {
        SchmidtVerdict::Entangled
    };
    Ok(SuperpositionVerdict {
        paper,
        schmidt,
        schmidt_rank,
        translation: translation_symmetry(&state),
        translation_c: concurrence_translation(&state),
        state,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phasespace::Bell;
    use approx::assert_abs_diff_eq;

    const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn real_state(amps: [f64; 4]) -> PureState {
        PureState::new(2, amps.iter().map(|&a| Complex64::new(a, 0.0)).collect()).unwrap()
    }

    fn pair(a: Bell, b: Bell) -> Vec<(DiagramState, Complex64)> {
        vec![
            (a.diagram_state(), Complex64::new(H, 0.0)),
            (b.diagram_state(), Complex64::new(H, 0.0)),
        ]
    }

    #[test]
    fn translation_concurrence_examples() {
        assert_abs_diff_eq!(concurrence_translation(&Bell::PhiPlus.state()), 1.0);
        assert_abs_diff_eq!(
            concurrence_translation(&real_state([1.0, 0.0, 0.0, 0.0])),
            0.0
        );
        let (a, b) = (0.6, 0.8);
        let s = real_state([0.0, a, b, 0.0]);
        assert_abs_diff_eq!(concurrence_translation(&s), 2.0 * a * b, epsilon = 1e-15);
        assert_abs_diff_eq!(
            concurrence_translation(&real_state([0.5; 4])),
            1.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn wootters_examples() {
        assert_abs_diff_eq!(
            concurrence_wootters(&Bell::PhiPlus.state()).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            concurrence_wootters(&real_state([0.5; 4])).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        let s = real_state([0.0, 0.6, 0.8, 0.0]);
        assert_abs_diff_eq!(concurrence_wootters(&s).unwrap(), 0.96, epsilon = 1e-15);
        let three = PureState::from_bits("000").unwrap();
        assert!(matches!(
            concurrence_wootters(&three),
            Err(Error::Arity { .. })
        ));
    }

    #[test]
    fn binary_entropy_values() {
        assert_abs_diff_eq!(binary_entropy(0.5).unwrap(), 1.0, epsilon = 1e-15);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        // -¼log₂¼ - ¾log₂¾ = ½ + ¾(2 - log₂3)
        let oracle = 0.5 + 0.75 * (2.0 - 3f64.log2());
        assert_abs_diff_eq!(binary_entropy(0.25).unwrap(), oracle, epsilon = 1e-15);
        assert_abs_diff_eq!(
            binary_entropy(0.25).unwrap(),
            0.811_278_124_459_132_8,
            epsilon = 1e-12
        );
        assert!(binary_entropy(1.5).is_err());
        assert!(binary_entropy(-0.1).is_err());
        assert!(binary_entropy(f64::NAN).is_err());
    }

    #[test]
    fn formation_values() {
        assert_abs_diff_eq!(
            formation_from_concurrence(1.0).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        assert_eq!(formation_from_concurrence(0.0).unwrap(), 0.0);
        // C = 0.6: √(1 - 0.36) = 0.8, so E = H(0.9).
        let oracle = -0.9 * 0.9f64.log2() - 0.1 * 0.1f64.log2();
        assert_abs_diff_eq!(
            formation_from_concurrence(0.6).unwrap(),
            oracle,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            formation_from_concurrence(0.6).unwrap(),
            0.468_995_593_589_281_2,
            epsilon = 1e-12
        );
        assert!(formation_from_concurrence(1.2).is_err());
    }

    #[test]
    fn entropic_distance_values() {
        assert_eq!(entropic_distance(1.0).unwrap(), 0.0);
        assert_eq!(entropic_distance(0.0).unwrap(), 1.0);
        let e = formation_from_concurrence(0.6).unwrap();
        assert_abs_diff_eq!(entropic_distance(0.6).unwrap(), 1.0 - e, epsilon = 1e-15);
        assert!(entropic_distance(-2.0).is_err());
    }

    #[test]
    fn classification_examples() {
        let v = classify_bell_superposition(&pair(Bell::PhiPlus, Bell::PhiMinus)).unwrap();
        assert_eq!(v.paper, PaperVerdict::Product);
        assert_eq!(v.schmidt, SchmidtVerdict::Product);
        assert!(v
            .state
            .approx_eq(&PureState::from_bits("00").unwrap(), 1e-15));

        let v = classify_bell_superposition(&pair(Bell::PhiPlus, Bell::PsiPlus)).unwrap();
        assert_eq!(v.paper, PaperVerdict::EntangledPair);
        assert_eq!(v.schmidt, SchmidtVerdict::Product);
        assert_eq!(v.translation.sign(), Some(Sign::Plus));

        let v = classify_bell_superposition(&pair(Bell::PhiPlus, Bell::PsiMinus)).unwrap();
        assert_eq!(v.paper, PaperVerdict::Unrepresentable);
        assert_eq!(v.schmidt, SchmidtVerdict::Entangled);
        assert_eq!(v.translation, TranslationSymmetry::NotInvariant);
    }

    #[test]
    fn classification_errors() {
        assert!(classify_bell_superposition(&[]).is_err());
        let dup = pair(Bell::PhiPlus, Bell::PhiPlus);
        assert!(matches!(
            classify_bell_superposition(&dup),
            Err(Error::Terms(_))
        ));
        let unnormalized = vec![
            (Bell::PhiPlus.diagram_state(), Complex64::new(1.0, 0.0)),
            (Bell::PsiPlus.diagram_state(), Complex64::new(1.0, 0.0)),
        ];
        assert!(matches!(
            classify_bell_superposition(&unnormalized),
            Err(Error::NotNormalized(_))
        ));
        let mixed = vec![
            (Bell::PhiPlus.diagram_state(), Complex64::new(H, 0.0)),
            ("p=000,s=+".parse().unwrap(), Complex64::new(H, 0.0)),
        ];
        assert!(matches!(
            classify_bell_superposition(&mixed),
            Err(Error::Arity { .. })
        ));
    }

    #[test]
    fn report_examples() {
        let part = Bipartition::halves(2).unwrap();
        let r = measure_report(&Bell::PhiPlus.state(), &part).unwrap();
        assert_abs_diff_eq!(r.entropy_bits, 1.0, epsilon = 1e-12);
        assert_eq!(r.concurrence.translation_c, 1.0);
        assert_eq!(r.concurrence.wootters_c, Some(1.0));
        assert_abs_diff_eq!(r.formation_e, 1.0, epsilon = 1e-12);
        assert_eq!(r.entropic_distance, 0.0);
        assert_eq!(r.classification, Classification::Entangled);

        let r = measure_report(&PureState::from_bits("01").unwrap(), &part).unwrap();
        assert_eq!(r.entropy_bits, 0.0);
        assert_eq!(r.concurrence.translation_c, 0.0);
        assert_eq!(r.formation_e, 0.0);
        assert_eq!(r.entropic_distance, 1.0);
        assert_eq!(r.classification, Classification::Product);

        let r = measure_report(&real_state([0.0, 0.6, 0.8, 0.0]), &part).unwrap();
        assert_abs_diff_eq!(r.concurrence.translation_c, 0.96, epsilon = 1e-15);
        // Entropy oracle: -(9/25)log₂(9/25) - (16/25)log₂(16/25).
        let oracle = -(0.36f64) * 0.36f64.log2() - 0.64 * 0.64f64.log2();
        assert_abs_diff_eq!(r.formation_e, oracle, epsilon = 1e-9);
        assert_abs_diff_eq!(r.entropy_bits, oracle, epsilon = 1e-9);
        assert_abs_diff_eq!(r.formation_e, 0.942_683_189_255_492, epsilon = 1e-9);
    }
}
