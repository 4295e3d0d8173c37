//! Plain-text state files.
//!
//! Each non-comment line is `<re>[±<im>i] |<bits>>`. `#` starts a comment,
//! whitespace inside the amplitude is ignored, and every bitstring must have
//! the same length. Repeated kets accumulate.

use entangle_core::statekit::{format_bits, parse_bits, PureState};
use entangle_core::{Complex64, MAX_QUBITS};
use thiserror::Error;

/// Normalization tolerance for files read without `--normalize`.
pub const FILE_NORM_TOL: f64 = 1e-6;

#[derive(Debug, Error, PartialEq)]
pub enum StateFileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("state has squared norm {0}, expected 1 within 1e-6 (pass --normalize to rescale)")]
    NotNormalized(f64),
}

/// Parsed but not yet normalized amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateFile {
    pub n_qubits: usize,
    pub amplitudes: Vec<Complex64>,
}

impl StateFile {
    pub fn parse(text: &str) -> Result<Self, StateFileError> {
        let mut n_qubits = None;
        let mut amplitudes = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |message: String| StateFileError::Parse {
                line: line_no,
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (amp, ket) = line
                .split_once('|')
                .ok_or_else(|| err(format!("expected `<amplitude> |<bits>>`, got {line:?}")))?;
            let bits = ket
                .trim()
                .strip_suffix('>')
                .ok_or_else(|| err(format!("ket {ket:?} is not closed with '>'")))?
                .trim();
            let (n, index) =
                parse_bits(bits).map_err(|_| err(format!("bad bitstring {bits:?}")))?;
            match n_qubits {
                None => {
                    n_qubits = Some(n);
                    amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
                }
                Some(m) if m != n => {
                    return Err(err(format!(
                        "bitstring {bits:?} has {n} bits, expected {m}"
                    )));
                }
                Some(_) => {}
            }
            amplitudes[index] += parse_amplitude(amp).map_err(err)?;
        }
        let n_qubits = n_qubits.ok_or(StateFileError::Parse {
            line: 0,
            message: "no amplitudes".into(),
        })?;
        debug_assert!(n_qubits <= MAX_QUBITS);
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Checks the norm (unless `normalize`) and rescales to exactly unit norm.
    pub fn into_state(self, normalize: bool) -> Result<PureState, StateFileError> {
        let norm_sqr = self.norm_sqr();
        if !normalize && (norm_sqr - 1.0).abs() > FILE_NORM_TOL {
            return Err(StateFileError::NotNormalized(norm_sqr));
        }
        PureState::normalized(self.n_qubits, self.amplitudes)
            .map_err(|_| StateFileError::NotNormalized(norm_sqr))
    }
}

/// Parses `a`, `a+bi` or `a-bi`.
pub fn parse_amplitude(text: &str) -> Result<Complex64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("bad amplitude {text:?}");
    if s.is_empty() {
        return Err(bad());
    }
    let number = |t: &str| -> Result<f64, String> {
        let v: f64 = t.parse().map_err(|_| bad())?;
        v.is_finite().then_some(v).ok_or_else(bad)
    };
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(number(&s)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
        .ok_or_else(bad)?;
    let re = number(&body[..split])?;
    let im = number(&body[split..])?;
    Ok(Complex64::new(re, im))
}

pub fn format_amplitude(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Writes the nonzero amplitudes of `state` in file syntax.
pub fn emit(state: &PureState) -> String {
    let n = state.n_qubits();
    let mut out = format!("# {n} qubits\n");
    for (index, &z) in state.amplitudes().iter().enumerate() {
        if z.norm() != 0.0 {
            out.push_str(&format!(
                "{} |{}>\n",
                format_amplitude(z),
                format_bits(n, index)
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn amplitude_grammar() {
        assert_eq!(parse_amplitude("0.6").unwrap(), Complex64::new(0.6, 0.0));
        assert_eq!(
            parse_amplitude("0.5+0.5i").unwrap(),
            Complex64::new(0.5, 0.5)
        );
        assert_eq!(
            parse_amplitude(" -0.5 - 0.25 i ").unwrap(),
            Complex64::new(-0.5, -0.25)
        );
        assert_eq!(
            parse_amplitude("1e-3-2E+1i").unwrap(),
            Complex64::new(1e-3, -20.0)
        );
        for bad in ["", "abc", "0.5i", "1+i", "0.5+0.5", "inf", "1++2i"] {
            assert!(parse_amplitude(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn parses_bell_file() {
        let text = "# Bell pair\n0.70710678 |00>\n\n0.70710678 |11>  # trailing\n";
        let file = StateFile::parse(text).unwrap();
        assert_eq!(file.n_qubits, 2);
        assert!((file.norm_sqr() - 1.0).abs() < 1e-6);
        let state = file.into_state(false).unwrap();
        assert!((state.amplitude(3).re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn repeated_kets_accumulate() {
        let file = StateFile::parse("0.5 |1>\n0.5 |1>\n").unwrap();
        assert_eq!(file.amplitudes[1], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = StateFile::parse("1.0 |00>\n0.0 |000>\n").unwrap_err();
        assert!(matches!(err, StateFileError::Parse { line: 2, .. }));
        assert!(StateFile::parse("1.0 |02>").is_err());
        assert!(StateFile::parse("1.0 |00").is_err());
        assert!(StateFile::parse("1.0 00").is_err());
        assert!(StateFile::parse("# nothing\n").is_err());
    }

    #[test]
    fn normalization_gate() {
        let file = StateFile::parse("1 |0>\n1 |1>\n").unwrap();
        assert_eq!(
            file.clone().into_state(false),
            Err(StateFileError::NotNormalized(2.0))
        );
        let state = file.into_state(true).unwrap();
        assert!((state.amplitude(0).re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        let zero = StateFile::parse("0 |0>\n").unwrap();
        assert!(zero.into_state(true).is_err());
    }

    proptest! {
        #[test]
        fn emit_parse_round_trip(
            amps in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 8)
        ) {
            let amps: Vec<Complex64> = amps.into_iter().map(|(a, b)| Complex64::new(a, b)).collect();
            prop_assume!(amps.iter().any(|z| z.norm() > 1e-3));
            let state = PureState::normalized(3, amps).unwrap();
            let back = StateFile::parse(&emit(&state)).unwrap().into_state(false).unwrap();
            prop_assert!(back.max_abs_diff(&state) <= 1e-12);
        }
    }
}
