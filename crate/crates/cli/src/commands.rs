use std::path::Path;

use entangle_core::measures::{classify_bell_superposition, concurrence_wootters, measure_report};
use entangle_core::phasespace::{
    bell_basis, diagram_basis_states, enumerate_diagrams, pseudo_spin_basis, translation_symmetry,
    Bell, DiagramState, Sign,
};
use entangle_core::statekit::{format_bits, schmidt_decompose, Bipartition, PureState};
use entangle_core::Complex64;
use thiserror::Error;

use crate::claims::{claims_report, run_claims, Fault};
use crate::report::{Report, Section};
use crate::statefile::{StateFile, StateFileError};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CLAIM_FAILURE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const NORMALIZATION: i32 = 3;
    pub const RANGE: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error("{0}")]
    Label(String),

    #[error("{path}: {message}")]
    Normalization { path: String, message: String },

    #[error("bad bipartition: {0}")]
    Bipartition(String),

    #[error("{0}")]
    Range(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Label(_) => exit::PARSE,
            CliError::Normalization { .. } => exit::NORMALIZATION,
            CliError::Bipartition(_) | CliError::Range(_) => exit::RANGE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum BasisKind {
    Bell,
    Diagrams,
    Pseudospin,
}

/// Parses `a:0,2` (indices of subsystem A) or `b:1,3` (indices of B).
pub fn parse_split(spec: &str, n_qubits: usize) -> Result<Bipartition, CliError> {
    let bad = |m: String| CliError::Bipartition(m);
    let (side, list) = spec
        .split_once(':')
        .ok_or_else(|| bad(format!("expected `a:i,j,...`, got {spec:?}")))?;
    let indices = list
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad(format!("bad index list {list:?}")))?;
    let part = match side.trim() {
        "a" | "A" => Bipartition::with_a(n_qubits, indices),
        "b" | "B" => {
            let a = (0..n_qubits).filter(|q| !indices.contains(q)).collect();
            Bipartition::new(n_qubits, a, indices)
        }
        other => return Err(bad(format!("unknown side {other:?}"))),
    };
    part.map_err(|e| bad(e.to_string()))
}

fn split_for(split: Option<&str>, n_qubits: usize) -> Result<Bipartition, CliError> {
    match split {
        Some(spec) => parse_split(spec, n_qubits),
        None => Bipartition::halves(n_qubits).map_err(|e| CliError::Bipartition(e.to_string())),
    }
}

fn push_amplitudes(section: &mut Section, state: &PureState, source: &str) {
    let n = state.n_qubits();
    for (index, &z) in state.amplitudes().iter().enumerate() {
        if z.norm() > 1e-15 {
            section.push(format!("|{}>", format_bits(n, index)), z, source);
        }
    }
}

fn phase_value(state: &PureState) -> String {
    match translation_symmetry(state).sign() {
        Some(s) => format!("{}1", s.symbol()),
        None => "none".into(),
    }
}

pub fn load_state(path: &Path, normalize: bool) -> Result<PureState, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    let file = StateFile::parse(&text).map_err(|e| CliError::Parse {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    file.into_state(normalize).map_err(|e| match e {
        StateFileError::NotNormalized(_) => CliError::Normalization {
            path: shown,
            message: e.to_string(),
        },
        StateFileError::Parse { .. } => CliError::Parse {
            path: shown,
            message: e.to_string(),
        },
    })
}

pub fn analyze_state(
    state: &PureState,
    part: &Bipartition,
    title: &str,
) -> Result<Section, CliError> {
    let r = measure_report(state, part).map_err(|e| CliError::Bipartition(e.to_string()))?;
    let schmidt =
        schmidt_decompose(state, part).map_err(|e| CliError::Bipartition(e.to_string()))?;
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let mut s = Section::new(title)
        .field("n_qubits", state.n_qubits(), "statefile::parse")
        .field("split_a", list(part.a()), "cli::split")
        .field("split_b", list(part.b()), "cli::split")
        .field(
            "entropy_bits",
            r.entropy_bits,
            "statekit::entanglement_entropy",
        )
        .field(
            "schmidt_rank",
            r.schmidt_rank,
            "statekit::schmidt_decompose",
        );
    for (i, c) in schmidt.coefficients.iter().enumerate() {
        s.push(
            format!("schmidt_coefficient_{i}"),
            *c,
            "statekit::schmidt_decompose",
        );
    }
    s.push(
        "concurrence_translation",
        r.concurrence.translation_c,
        "measures::concurrence_translation",
    );
    s.push(
        "concurrence_wootters",
        r.concurrence.wootters_c,
        "measures::concurrence_wootters",
    );
    s.push(
        "concurrences_agree",
        r.concurrence.agree,
        "measures::concurrence_report",
    );
    s.push(
        "formation_e",
        r.formation_e,
        "measures::formation_from_concurrence",
    );
    s.push(
        "formation_e_wootters",
        r.formation_e_wootters,
        "measures::formation_from_concurrence",
    );
    s.push(
        "entropic_distance",
        r.entropic_distance,
        "measures::entropic_distance",
    );
    s.push(
        "translation_phase",
        r.translation_phase
            .map(|p| format!("{}1", p.symbol()))
            .unwrap_or_else(|| "none".into()),
        "phasespace::translation_symmetry",
    );
    s.push(
        "classification",
        r.classification.label(),
        "measures::measure_report",
    );
    Ok(s)
}

pub fn cmd_analyze<P: AsRef<Path>>(
    paths: &[P],
    split: Option<&str>,
    normalize: bool,
) -> Result<Report, CliError> {
    let mut report = Report::new("analyze");
    for path in paths {
        let path = path.as_ref();
        let state = load_state(path, normalize)?;
        let part = split_for(split, state.n_qubits())?;
        report
            .sections
            .push(analyze_state(&state, &part, &path.display().to_string())?);
    }
    Ok(report)
}

pub fn cmd_basis(kind: BasisKind, n: usize) -> Result<Report, CliError> {
    let mut report = Report::new("basis");
    let named: Vec<(String, PureState)> = match kind {
        BasisKind::Bell | BasisKind::Pseudospin if n != 2 => {
            return Err(CliError::Range(format!(
                "{kind:?} basis needs n = 2, got {n}"
            )));
        }
        BasisKind::Bell => {
            let names = Bell::ALL.map(|b| b.label());
            bell_basis()
                .into_iter()
                .enumerate()
                .map(|(i, s)| (format!("e{} = {}", i + 1, names[i]), s))
                .collect()
        }
        BasisKind::Pseudospin => ["e0", "ex", "ey", "ez"]
            .into_iter()
            .zip(pseudo_spin_basis())
            .map(|(name, s)| (name.to_string(), s))
            .collect(),
        BasisKind::Diagrams => {
            let diagrams = enumerate_diagrams(n).map_err(|e| CliError::Range(e.to_string()))?;
            diagrams
                .iter()
                .flat_map(|d| {
                    let (p, m) = diagram_basis_states(d);
                    [
                        (d.with_sign(Sign::Plus).to_string(), p),
                        (d.with_sign(Sign::Minus).to_string(), m),
                    ]
                })
                .collect()
        }
    };
    let source = match kind {
        BasisKind::Bell => "phasespace::bell_basis",
        BasisKind::Pseudospin => "phasespace::pseudo_spin_basis",
        BasisKind::Diagrams => "phasespace::diagram_basis_states",
    };
    let mut summary = Section::new("basis")
        .field("kind", format!("{kind:?}").to_lowercase(), "cli::basis")
        .field("n_qubits", n, "cli::basis")
        .field("states", named.len(), source);
    if kind == BasisKind::Diagrams {
        summary.push(
            "diagrams",
            named.len() / 2,
            "phasespace::enumerate_diagrams",
        );
    }
    report.sections.push(summary);
    for (name, state) in &named {
        let mut s = Section::new(name.clone());
        push_amplitudes(&mut s, state, source);
        s.push(
            "translation_phase",
            phase_value(state),
            "phasespace::translation_symmetry",
        );
        report.sections.push(s);
    }
    Ok(report)
}

pub fn parse_label(label: &str) -> Result<DiagramState, CliError> {
    if let Ok(bell) = label.parse::<Bell>() {
        return Ok(bell.diagram_state());
    }
    label.parse::<DiagramState>().map_err(|_| {
        CliError::Label(format!(
            "unknown label {label:?}; expected Phi+, Phi-, Psi+, Psi- or p=<bits>,s=<+|->"
        ))
    })
}

pub fn cmd_classify<S: AsRef<str>>(labels: &[S]) -> Result<Report, CliError> {
    let terms = labels
        .iter()
        .map(|l| parse_label(l.as_ref()))
        .collect::<Result<Vec<_>, _>>()?;
    if terms.is_empty() {
        return Err(CliError::Label("no labels given".into()));
    }
    let weight = Complex64::new(1.0 / (terms.len() as f64).sqrt(), 0.0);
    let weighted: Vec<(DiagramState, Complex64)> = terms.iter().map(|t| (*t, weight)).collect();
    let v = classify_bell_superposition(&weighted).map_err(|e| CliError::Label(e.to_string()))?;

    let mut report = Report::new("classify");
    let names: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
    let mut s = Section::new(names.join(" + "));
    s.push("terms", terms.len(), "cli::classify");
    s.push(
        "paper_verdict",
        v.paper.label(),
        "measures::classify_bell_superposition",
    );
    s.push(
        "schmidt_verdict",
        v.schmidt.label(),
        "statekit::schmidt_decompose",
    );
    s.push(
        "schmidt_rank",
        v.schmidt_rank,
        "statekit::schmidt_decompose",
    );
    s.push(
        "translation_phase",
        phase_value(&v.state),
        "phasespace::translation_symmetry",
    );
    s.push(
        "concurrence_translation",
        v.translation_c,
        "measures::concurrence_translation",
    );
    s.push(
        "concurrence_wootters",
        concurrence_wootters(&v.state).ok(),
        "measures::concurrence_wootters",
    );
    report.sections.push(s);
    let mut amps = Section::new("state");
    push_amplitudes(&mut amps, &v.state, "measures::classify_bell_superposition");
    report.sections.push(amps);
    Ok(report)
}

/// Runs the claim suite; the flag is true when every claim held.
pub fn cmd_verify_paper(fault: Option<Fault>) -> (Report, bool) {
    claims_report(&run_claims(fault))
}
