//! Reproduction suite: reruns every worked numeric example and acceptance
//! criterion against the library and reports one line per claim.
//!
//! A [`Fault`] swaps in a deliberately broken entropy or translation so the
//! suite can demonstrate that it notices.

use entangle_core::formation::{
    bipartite_formation_entropy, chain_superposition, emergent_sigma_x, formation_count,
    maximal_chain_state, verify_emergent_property, EmergentQubit, PartitionTree,
};
use entangle_core::measures::{
    binary_entropy, classify_bell_superposition, concurrence_translation, concurrence_wootters,
    entropic_distance, formation_from_concurrence, measure_report, PaperVerdict, SchmidtVerdict,
};
use entangle_core::phasespace::{
    bell_basis, conjugate_density_basis, diagram_basis_states, enumerate_diagrams, expand_in_bell,
    hadamard_pair, pseudo_spin_basis, translate, translation_symmetry_of, Bell, Block, Diagram,
    Direction, Sign, TranslationSymmetry,
};
use entangle_core::statekit::{
    density_of, partial_trace, purity_check, schmidt_decompose, von_neumann_entropy,
    von_neumann_entropy_in, Bipartition, DensityOp, LogBase, PureState, Subsystem,
};
use entangle_core::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::report::{Report, Section};

const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Seed for the random-state criterion.
pub const ORACLE_SEED: u64 = 0x5eed_0006;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    /// Entropies in nats instead of bits.
    NaturalLog,
    /// Translation returns `-T(+1)ψ`.
    TranslationSign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Two criteria disagree on this state as expected; not a failure.
    DocumentedDivergence,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Claim {
    pub id: String,
    pub criterion: Option<u8>,
    pub statement: String,
    pub expected: String,
    pub got: String,
    pub status: Status,
}

impl Claim {
    pub fn line(&self) -> String {
        match self.status {
            Status::Pass => "PASS".to_string(),
            Status::DocumentedDivergence => format!("DOCUMENTED DIVERGENCE {}", self.got),
            Status::Fail => format!("FAIL expected {} got {}", self.expected, self.got),
        }
    }
}

/// Library entry points the suite goes through; faults are injected here.
struct Engine {
    fault: Option<Fault>,
}

impl Engine {
    fn entropy(&self, rho: &DensityOp) -> f64 {
        match self.fault {
            Some(Fault::NaturalLog) => von_neumann_entropy_in(rho, LogBase::Nats),
            _ => von_neumann_entropy(rho),
        }
    }

    fn reduced(&self, state: &PureState, part: &Bipartition) -> DensityOp {
        partial_trace(&density_of(state), part, Subsystem::A).expect("split matches state")
    }

    fn reduced_entropy(&self, state: &PureState, part: &Bipartition) -> f64 {
        self.entropy(&self.reduced(state, part))
    }

    fn shift(&self, state: &PureState) -> PureState {
        let t = translate(state, 1);
        match self.fault {
            Some(Fault::TranslationSign) => t.with_phase(Complex64::new(-1.0, 0.0)),
            _ => t,
        }
    }

    fn phase(&self, state: &PureState) -> Option<f64> {
        match translation_symmetry_of(state, &self.shift(state)) {
            TranslationSymmetry::Invariant { phase } if phase.im.abs() <= 1e-12 => Some(phase.re),
            _ => None,
        }
    }
}

struct Suite {
    engine: Engine,
    claims: Vec<Claim>,
}

fn num(x: f64) -> String {
    format!("{x:?}")
}

impl Suite {
    fn check(
        &mut self,
        id: &str,
        criterion: Option<u8>,
        statement: &str,
        expected: String,
        got: String,
        ok: bool,
    ) {
        self.claims.push(Claim {
            id: id.to_string(),
            criterion,
            statement: statement.to_string(),
            expected,
            got,
            status: if ok { Status::Pass } else { Status::Fail },
        });
    }

    fn approx(
        &mut self,
        id: &str,
        criterion: Option<u8>,
        statement: &str,
        expected: f64,
        got: f64,
        tol: f64,
    ) {
        let ok = (got - expected).abs() <= tol;
        self.check(id, criterion, statement, num(expected), num(got), ok);
    }

    /// Passes when `error ≤ tol`.
    fn bounded(&mut self, id: &str, criterion: Option<u8>, statement: &str, error: f64, tol: f64) {
        let ok = error <= tol;
        self.check(
            id,
            criterion,
            statement,
            format!("error <= {tol:e}"),
            format!("error {error:e}"),
            ok,
        );
    }

    fn phase(
        &mut self,
        id: &str,
        criterion: Option<u8>,
        statement: &str,
        state: &PureState,
        expected: f64,
    ) {
        match self.engine.phase(state) {
            Some(p) => self.approx(id, criterion, statement, expected, p, 1e-12),
            None => self.check(
                id,
                criterion,
                statement,
                num(expected),
                "not invariant".into(),
                false,
            ),
        }
    }
}

fn ket(bits: &str) -> PureState {
    PureState::from_bits(bits).expect("valid bits")
}

fn diagram(bits: &str) -> Diagram {
    bits.parse().expect("canonical diagram")
}

fn halves(n: usize) -> Bipartition {
    Bipartition::halves(n).expect("n >= 2")
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn state_error(a: &PureState, b: &PureState) -> f64 {
    if a.n_qubits() == b.n_qubits() {
        a.max_abs_diff(b)
    } else {
        f64::INFINITY
    }
}

fn max_spectrum_gap(a: &DensityOp, b: &DensityOp) -> f64 {
    a.eigenvalues()
        .iter()
        .zip(b.eigenvalues())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// `(|00,00> + |01,01> ± |10,10> ± |11,11>)/2`.
fn chain4(sign: f64) -> PureState {
    let mut amps = vec![real(0.0); 16];
    amps[0b0000] = real(0.5);
    amps[0b0101] = real(0.5);
    amps[0b1010] = real(0.5 * sign);
    amps[0b1111] = real(0.5 * sign);
    PureState::new(4, amps).expect("normalized")
}

fn gram_error(states: &[PureState]) -> f64 {
    let mut worst = 0.0f64;
    for (i, x) in states.iter().enumerate() {
        for (j, y) in states.iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((x.inner(y) - real(want)).norm());
        }
    }
    worst
}

fn random_two_qubit(rng: &mut ChaCha8Rng) -> PureState {
    let amps = (0..4)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    PureState::normalized(2, amps).expect("nonzero")
}

/// Runs every claim, optionally with an injected fault.
pub fn run_claims(fault: Option<Fault>) -> Vec<Claim> {
    let mut s = Suite {
        engine: Engine { fault },
        claims: Vec::new(),
    };
    let [phi_p, phi_m, psi_p, psi_m] = bell_basis();
    let two = halves(2);

    // Criterion 1.
    let s_bell = s.engine.reduced_entropy(&phi_p, &two);
    s.approx(
        "c01.bell-entropy",
        Some(1),
        "S_A of (|00>+|11>)/sqrt2 is 1 bit",
        1.0,
        s_bell,
        1e-12,
    );

    // Criterion 2.
    let psi7 = chain4(1.0);
    let four = halves(4);
    let rho_a = s.engine.reduced(&psi7, &four);
    let eig_err = rho_a
        .eigenvalues()
        .iter()
        .map(|l| (l - 0.25).abs())
        .fold(0.0, f64::max);
    s.bounded(
        "c02.chain4-eigenvalues",
        Some(2),
        "reduced eigenvalues of the four-qubit chain are 1/4",
        eig_err,
        1e-10,
    );
    let s7 = s.engine.entropy(&rho_a);
    s.approx(
        "c02.chain4-entropy",
        Some(2),
        "S_A of the four-qubit chain is log 2^2",
        2.0,
        s7,
        1e-9,
    );
    let scale = purity_check(&rho_a).projector_scale.unwrap_or(f64::NAN);
    s.approx(
        "paper.chain4-projector-scale",
        None,
        "rho_A^2 = (1/4) rho_A",
        0.25,
        scale,
        1e-10,
    );
    let s8 = s.engine.reduced_entropy(&chain4(-1.0), &four);
    s.approx(
        "paper.chain4-minus-entropy",
        None,
        "S_A of the odd four-qubit chain is 2",
        2.0,
        s8,
        1e-9,
    );
    let rho7 = density_of(&psi7);
    let sb = s
        .engine
        .entropy(&partial_trace(&rho7, &four, Subsystem::B).expect("split"));
    s.approx("paper.chain4-S_A=S_B", None, "S_A = S_B", s7, sb, 1e-9);

    // Criterion 3.
    for (state, bell, want) in [
        (&phi_p, Bell::PhiPlus, 1.0),
        (&phi_m, Bell::PhiMinus, -1.0),
        (&psi_p, Bell::PsiPlus, 1.0),
        (&psi_m, Bell::PsiMinus, -1.0),
    ] {
        s.phase(
            &format!("c03.phase-{bell}"),
            Some(3),
            "T(+1) phase of a Bell state",
            state,
            want,
        );
    }
    let not_inv = s.engine.phase(&ket("00")).is_none();
    s.check(
        "paper.translation-00",
        None,
        "|00> is not translation invariant",
        "not invariant".into(),
        if not_inv {
            "not invariant".into()
        } else {
            "invariant".into()
        },
        not_inv,
    );

    // Criterion 4.
    let collapse = PureState::superpose(&[(real(H), &phi_p), (real(H), &phi_m)]).expect("pair");
    let err = state_error(&collapse, &ket("00"));
    let rank = schmidt_decompose(&collapse, &two).expect("split").rank;
    s.bounded(
        "c04.product-collapse-amplitudes",
        Some(4),
        "(Phi+ + Phi-)/sqrt2 = |00>",
        err,
        1e-12,
    );
    s.check(
        "c04.product-collapse-rank",
        Some(4),
        "(Phi+ + Phi-)/sqrt2 has Schmidt rank 1",
        "1".into(),
        rank.to_string(),
        rank == 1,
    );
    let minus = PureState::superpose(&[(real(H), &phi_p), (real(-H), &phi_m)]).expect("pair");
    s.bounded(
        "paper.product-collapse-11",
        None,
        "(Phi+ - Phi-)/sqrt2 = |11>",
        state_error(&minus, &ket("11")),
        1e-12,
    );

    // Criterion 5.
    let mut family_err = 0.0f64;
    for i in 0..=100 {
        let alpha = i as f64 / 100.0;
        let beta = (1.0 - alpha * alpha).sqrt();
        let state =
            PureState::new(2, vec![real(0.0), real(alpha), real(beta), real(0.0)]).expect("unit");
        let shifted = s.engine.shift(&state);
        let c_t = state.inner(&shifted).norm();
        let c_w = concurrence_wootters(&state).expect("two qubits");
        let want = 2.0 * alpha * beta;
        family_err = family_err.max((c_t - want).abs()).max((c_w - want).abs());
    }
    s.bounded(
        "c05.concurrence-family",
        Some(5),
        "C(a|01>+b|10>) = 2ab under both definitions",
        family_err,
        1e-12,
    );

    // Criterion 6.
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let mut oracle_err = 0.0f64;
    for _ in 0..1000 {
        let state = random_two_qubit(&mut rng);
        let e = formation_from_concurrence(concurrence_wootters(&state).expect("two qubits"))
            .expect("unit");
        oracle_err = oracle_err.max((e - s.engine.reduced_entropy(&state, &two)).abs());
    }
    s.bounded(
        "c06.wootters-oracle",
        Some(6),
        "E(C_wootters) equals the reduced entropy on 1000 random states",
        oracle_err,
        1e-9,
    );

    // Criterion 7.
    let e = |c: f64| formation_from_concurrence(c).expect("unit");
    let d = |c: f64| entropic_distance(c).expect("unit");
    s.approx("c07.formation-C1", Some(7), "E(1) = 1", 1.0, e(1.0), 1e-12);
    s.approx("c07.formation-C0", Some(7), "E(0) = 0", 0.0, e(0.0), 1e-12);
    s.approx(
        "c07.distance-C1",
        Some(7),
        "distance(1) = 0",
        0.0,
        d(1.0),
        1e-12,
    );
    s.approx(
        "c07.distance-C0",
        Some(7),
        "distance(0) = 1",
        1.0,
        d(0.0),
        1e-12,
    );
    s.approx(
        "paper.binary-entropy-half",
        None,
        "H(1/2) = 1",
        1.0,
        binary_entropy(0.5).expect("unit"),
        1e-12,
    );

    // Criterion 8.
    for (n, count) in [(2usize, 2usize), (3, 4), (4, 8)] {
        let diagrams = enumerate_diagrams(n).expect("range");
        let states: Vec<PureState> = diagrams
            .iter()
            .flat_map(|d| {
                let (p, m) = diagram_basis_states(d);
                [p, m]
            })
            .collect();
        s.check(
            &format!("c08.census-n{n}"),
            Some(8),
            "number of canonical diagrams",
            count.to_string(),
            diagrams.len().to_string(),
            diagrams.len() == count,
        );
        s.bounded(
            &format!("c08.gram-n{n}"),
            Some(8),
            "diagram states form an orthonormal basis",
            gram_error(&states),
            1e-12,
        );
    }

    // Criterion 9.
    let mut sigma_err = 0.0f64;
    let mut phase_mismatch = 0usize;
    for n in 2..=6 {
        for dgm in enumerate_diagrams(n).expect("range") {
            let q = EmergentQubit::new(dgm);
            for which in [Sign::Plus, Sign::Minus] {
                let sx = emergent_sigma_x(&q, which);
                sigma_err = sigma_err.max((sx - which.value()).abs());
                if s.engine.phase(q.state(which)) != Some(sx) {
                    phase_mismatch += 1;
                }
            }
        }
    }
    s.bounded(
        "c09.emergent-sigma-x",
        Some(9),
        "emergent sigma_x is exactly +-1 for every diagram state, n <= 6",
        sigma_err,
        0.0,
    );
    s.check(
        "c09.sigma-x-equals-phase",
        Some(9),
        "emergent sigma_x equals the translation phase",
        "0 mismatches".into(),
        format!("{phase_mismatch} mismatches"),
        phase_mismatch == 0,
    );
    let q = EmergentQubit::new(diagram("00"));
    s.approx(
        "paper.sigma-x-Phi+",
        None,
        "<Phi+|sigma_x|Phi+> = 1",
        1.0,
        emergent_sigma_x(&q, Sign::Plus),
        1e-12,
    );
    s.approx(
        "paper.sigma-x-Phi-",
        None,
        "<Phi-|sigma_x|Phi-> = -1",
        -1.0,
        emergent_sigma_x(&q, Sign::Minus),
        1e-12,
    );
    let singlet = EmergentQubit::new(diagram("01"));
    s.approx(
        "paper.sigma-x-singlet",
        None,
        "<Psi-|sigma_x|Psi-> = -1",
        -1.0,
        emergent_sigma_x(&singlet, Sign::Minus),
        1e-12,
    );

    // Criterion 10.
    for (n, want) in [(3usize, 2usize), (4, 3), (18, 17)] {
        let got = formation_count(&PartitionTree::flat(n)).expect("n >= 2");
        s.check(
            &format!("c10.formation-count-N{n}"),
            Some(10),
            "qubits of formation for an N-party chain",
            want.to_string(),
            got.to_string(),
            got == want,
        );
    }
    for k in 1..=3usize {
        let analytic = bipartite_formation_entropy(k).expect("k >= 1");
        let numeric = s
            .engine
            .reduced_entropy(&maximal_chain_state(k).expect("k <= 6"), &halves(2 * k));
        s.approx(
            &format!("c10.bipartite-entropy-k{k}"),
            Some(10),
            "log 2^k matches the reduced entropy of the maximal chain",
            analytic,
            numeric,
            1e-9,
        );
    }

    // Criterion 11.
    let pair = |a: Bell, b: Bell| {
        classify_bell_superposition(&[(a.diagram_state(), real(H)), (b.diagram_state(), real(H))])
            .expect("valid pair")
    };
    for (a, b, paper, schmidt, id) in [
        (
            Bell::PhiPlus,
            Bell::PsiPlus,
            PaperVerdict::EntangledPair,
            SchmidtVerdict::Product,
            "c11.divergence-Phi+Psi+",
        ),
        (
            Bell::PhiPlus,
            Bell::PsiMinus,
            PaperVerdict::Unrepresentable,
            SchmidtVerdict::Entangled,
            "c11.divergence-Phi+Psi-",
        ),
    ] {
        let v = pair(a, b);
        let expected = format!("paper {} / schmidt {}", paper.label(), schmidt.label());
        let got = format!("paper {} / schmidt {}", v.paper.label(), v.schmidt.label());
        let ok = v.paper == paper && v.schmidt == schmidt;
        s.claims.push(Claim {
            id: id.to_string(),
            criterion: Some(11),
            statement: format!("dual verdict for ({a} + {b})/sqrt2"),
            expected,
            got,
            status: if ok {
                Status::DocumentedDivergence
            } else {
                Status::Fail
            },
        });
    }
    let v = pair(Bell::PhiPlus, Bell::PhiMinus);
    s.check(
        "paper.classify-phi-sum",
        None,
        "(Phi+ + Phi-)/sqrt2 is a product state",
        "paper product / schmidt product".into(),
        format!("paper {} / schmidt {}", v.paper.label(), v.schmidt.label()),
        v.paper == PaperVerdict::Product && v.schmidt == SchmidtVerdict::Product,
    );

    // Criterion 12.
    for (block, w, id) in [
        (
            Block::Triplet,
            [0.5, 0.0, 0.0, 0.5],
            "c12.triplet-mixed-map",
        ),
        (
            Block::Singlet,
            [0.0, 0.5, 0.5, 0.0],
            "paper.singlet-mixed-map",
        ),
    ] {
        let crit = (block == Block::Triplet).then_some(12);
        let rho_w = DensityOp::diagonal(2, &w).expect("valid");
        let rho_b = conjugate_density_basis(&rho_w, block).expect("in block");
        let (b1, b2) = block.bell_pair();
        let expected =
            DensityOp::mixture(&[(0.5, &b1.state()), (0.5, &b2.state())]).expect("valid");
        s.bounded(
            id,
            crit,
            "half-half site mixture maps to the half-half Bell mixture",
            rho_b.max_abs_diff(&expected),
            1e-12,
        );
        s.bounded(
            &format!("{id}-spectrum"),
            crit,
            "block conjugation preserves the spectrum",
            max_spectrum_gap(&rho_w, &rho_b),
            1e-12,
        );
    }

    // Remaining worked examples.
    let rho_bell = density_of(&phi_p);
    let corners = [(0, 0), (0, 3), (3, 0), (3, 3)]
        .iter()
        .map(|&(i, j)| (rho_bell.entry(i, j) - real(0.5)).norm())
        .fold(0.0, f64::max);
    s.bounded(
        "paper.bell-density",
        None,
        "rho = 1/2 (|00>+|11>)(<00|+<11|)",
        corners,
        1e-12,
    );
    let rho_a_bell = s.engine.reduced(&phi_p, &two);
    let half = DensityOp::diagonal(1, &[0.5, 0.5]).expect("valid");
    s.bounded(
        "paper.reduced-bell",
        None,
        "rho_A = 1/2 (|0><0| + |1><1|)",
        rho_a_bell.max_abs_diff(&half),
        1e-12,
    );
    let scale = purity_check(&rho_a_bell)
        .projector_scale
        .unwrap_or(f64::NAN);
    s.approx(
        "paper.reduced-bell-scale",
        None,
        "rho_A^2 = 1/2 rho_A",
        0.5,
        scale,
        1e-10,
    );
    s.approx(
        "paper.entropy-qubit",
        None,
        "S(I/2) = log 2 = 1",
        1.0,
        s.engine.entropy(&half),
        1e-12,
    );
    let quarter = DensityOp::diagonal(2, &[0.25; 4]).expect("valid");
    s.approx(
        "paper.entropy-quarter",
        None,
        "S(I/4) = log 2^2 = 2",
        2.0,
        s.engine.entropy(&quarter),
        1e-12,
    );
    let omega8 = DensityOp::diagonal(3, &[0.125; 8]).expect("valid");
    s.approx(
        "paper.entropy-omega-8",
        None,
        "S = log Omega with Omega = 8",
        3.0,
        s.engine.entropy(&omega8),
        1e-12,
    );

    for (a, b, want_p, want_m, id) in [
        ("00", "11", &phi_p, &phi_m, "paper.hadamard-triplet"),
        ("01", "10", &psi_p, &psi_m, "paper.hadamard-singlet"),
    ] {
        let (p, m) = hadamard_pair(&ket(a), &ket(b), Direction::ToBloch).expect("orthonormal");
        let err = state_error(&p, want_p).max(state_error(&m, want_m));
        s.bounded(
            id,
            None,
            "Hadamard pairing of site states gives the Bell pair",
            err,
            1e-12,
        );
    }
    let (w0, w1) = hadamard_pair(&phi_p, &phi_m, Direction::ToWannier).expect("orthonormal");
    let err = state_error(&w0, &ket("00")).max(state_error(&w1, &ket("11")));
    s.bounded(
        "paper.hadamard-inverse",
        None,
        "H(Phi+, Phi-) = (|00>, |11>)",
        err,
        1e-12,
    );

    let e1 = PureState::new(2, vec![real(H), real(0.0), real(0.0), real(H)]).expect("unit");
    let e4 = PureState::new(2, vec![real(0.0), real(H), real(-H), real(0.0)]).expect("unit");
    s.bounded(
        "paper.bell-e1",
        None,
        "e1 = (|00>+|11>)/sqrt2",
        state_error(&phi_p, &e1),
        1e-15,
    );
    s.bounded(
        "paper.bell-e4",
        None,
        "e4 = (|01>-|10>)/sqrt2",
        state_error(&psi_m, &e4),
        1e-15,
    );

    for (bits, want, id) in [
        ("00", [H, H, 0.0, 0.0], "paper.expand-00"),
        ("10", [0.0, 0.0, H, -H], "paper.expand-10"),
    ] {
        let beta = expand_in_bell(&ket(bits)).expect("two qubits").beta;
        let err = beta
            .iter()
            .zip(want)
            .map(|(b, w)| (b - real(w)).norm())
            .fold(0.0, f64::max);
        s.bounded(
            id,
            None,
            "standard basis state in the Bell basis",
            err,
            1e-12,
        );
    }

    for (bits, plus_idx, minus_idx, id) in [
        ("0101", 0b0101, 0b1010, "paper.diagram-0101"),
        ("000", 0b000, 0b111, "paper.diagram-000"),
        ("011", 0b011, 0b100, "paper.diagram-011"),
    ] {
        let (p, m) = diagram_basis_states(&diagram(bits));
        let err = [
            (p.amplitude(plus_idx) - real(H)).norm(),
            (p.amplitude(minus_idx) - real(H)).norm(),
            (m.amplitude(plus_idx) - real(H)).norm(),
            (m.amplitude(minus_idx) - real(-H)).norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        s.bounded(id, None, "diagram pair H(|p>, |p-bar>)", err, 1e-12);
        s.phase(
            &format!("{id}-phase+"),
            None,
            "diagram plus state is translation even",
            &p,
            1.0,
        );
        s.phase(
            &format!("{id}-phase-"),
            None,
            "diagram minus state is translation odd",
            &m,
            -1.0,
        );
    }

    let [e0, _, ey, _] = pseudo_spin_basis();
    s.bounded(
        "paper.pseudo-spin-e0",
        None,
        "e0 = Phi+",
        state_error(&e0, &phi_p),
        1e-15,
    );
    let i_ey = ey.with_phase(Complex64::i());
    s.bounded(
        "paper.pseudo-spin-iey",
        None,
        "i e_y = (|01>-|10>)/sqrt2",
        state_error(&i_ey, &e4),
        1e-15,
    );

    s.approx(
        "paper.concurrence-max",
        None,
        "C = 1 for a maximally entangled state",
        1.0,
        concurrence_translation(&phi_p),
        1e-12,
    );
    let r = measure_report(&phi_p, &two).expect("split");
    let ok = (r.entropy_bits - 1.0).abs() <= 1e-12
        && r.concurrence.translation_c == 1.0
        && r.concurrence.wootters_c == Some(1.0)
        && (r.formation_e - 1.0).abs() <= 1e-12
        && r.entropic_distance.abs() <= 1e-12;
    s.check(
        "paper.report-bell",
        None,
        "measure report of Phi+",
        "S 1, C 1/1, E 1, distance 0".into(),
        format!(
            "S {}, C {}/{:?}, E {}, distance {}",
            r.entropy_bits,
            r.concurrence.translation_c,
            r.concurrence.wootters_c,
            r.formation_e,
            r.entropic_distance
        ),
        ok,
    );

    let chain_err = |diagrams: &[Diagram], sign: Sign, want: &PureState| {
        state_error(
            &chain_superposition(diagrams, sign).expect("valid chain"),
            want,
        )
    };
    let d4 = [diagram("0000"), diagram("0101")];
    s.bounded(
        "paper.chain4-plus-state",
        None,
        "(Phi1+ + Phi8+)/sqrt2",
        chain_err(&d4, Sign::Plus, &psi7),
        1e-12,
    );
    s.bounded(
        "paper.chain4-minus-state",
        None,
        "(Phi1- + Phi8-)/sqrt2",
        chain_err(&d4, Sign::Minus, &chain4(-1.0)),
        1e-12,
    );
    let psi4 = PureState::new(3, vec![real(1.0 / 8f64.sqrt()); 8]).expect("unit");
    let tri = [
        diagram("011"),
        diagram("000"),
        diagram("010"),
        diagram("001"),
    ];
    s.bounded(
        "paper.chain-psi4",
        None,
        "(Xi+ + Theta3+ + Omega+ + Gamma+)/2",
        chain_err(&tri, Sign::Plus, &psi4),
        1e-12,
    );

    for n in [2usize, 4] {
        let report =
            verify_emergent_property(&enumerate_diagrams(n).expect("range")).expect("valid");
        s.check(
            &format!("paper.emergent-n{n}"),
            None,
            "every diagram is an emergent qubit",
            "pass".into(),
            if report.passed() {
                "pass".into()
            } else {
                "fail".into()
            },
            report.passed(),
        );
    }

    s.claims
}

/// Renders claims as a report; the flag is true when nothing failed.
pub fn claims_report(claims: &[Claim]) -> (Report, bool) {
    let mut report = Report::new("verify-paper");
    let mut section = Section::new("claims");
    for claim in claims {
        let source = match claim.criterion {
            Some(c) => format!("criterion {c}: {}", claim.statement),
            None => claim.statement.clone(),
        };
        section.push(claim.id.clone(), claim.line(), &source);
    }
    let count = |st: Status| claims.iter().filter(|c| c.status == st).count();
    let failed = count(Status::Fail);
    let summary = Section::new("summary")
        .field("claims", claims.len(), "verify-paper")
        .field("passed", count(Status::Pass), "verify-paper")
        .field(
            "documented_divergences",
            count(Status::DocumentedDivergence),
            "verify-paper",
        )
        .field("failed", failed, "verify-paper");
    report.sections.push(section);
    report.sections.push(summary);
    (report, failed == 0)
}
