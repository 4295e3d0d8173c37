//! Multipartite structure built from diagram states: emergent qubits, chain
//! superpositions and the formation count of a maximally entangled chain.

use std::collections::HashSet;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::measures::{concurrence_translation, formation_from_concurrence};
use crate::phasespace::{diagram_basis_states, translate, BitPattern, Diagram, Sign};
use crate::statekit::PureState;
use crate::{MAX_QUBITS, STRUCTURAL_TOL};

/// The ± Hadamard partners of one diagram, viewed as a two-state system
/// spanned by `|p>` and `|p̄>`.
#[derive(Debug, Clone, PartialEq)]
pub struct EmergentQubit {
    diagram: Diagram,
    plus: PureState,
    minus: PureState,
}

impl EmergentQubit {
    pub fn new(diagram: Diagram) -> Self {
        let (plus, minus) = diagram_basis_states(&diagram);
        Self {
            diagram,
            plus,
            minus,
        }
    }

    pub fn diagram(&self) -> Diagram {
        self.diagram
    }

    pub fn state(&self, which: Sign) -> &PureState {
        match which {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    /// Coordinates of `state` over `(|p>, |p̄>)`.
    pub fn coordinates(&self, state: &PureState) -> [Complex64; 2] {
        [
            self.diagram.base().ket().inner(state),
            self.diagram.flipped().ket().inner(state),
        ]
    }
}

/// `<v|σ_x|v>` for the normalized two-dimensional representation `v`.
pub fn emergent_sigma_x(qubit: &EmergentQubit, which: Sign) -> f64 {
    let [a, b] = qubit.coordinates(qubit.state(which));
    (a.conj() * b + b.conj() * a).re / (a.norm_sqr() + b.norm_sqr())
}

/// Uniform same-sign superposition `(1/√m) Σ dᵢ^sign`.
pub fn chain_superposition(diagrams: &[Diagram], sign: Sign) -> Result<PureState> {
    let first = diagrams
        .first()
        .ok_or_else(|| Error::Terms("empty chain".into()))?;
    let n = first.n_qubits();
    let mut seen = HashSet::new();
    for d in diagrams {
        if d.n_qubits() != n {
            return Err(Error::Arity {
                expected: n,
                got: d.n_qubits(),
            });
        }
        if !seen.insert(*d) {
            return Err(Error::Terms(format!("duplicate diagram {d}")));
        }
    }
    let states: Vec<PureState> = diagrams.iter().map(|d| d.with_sign(sign).state()).collect();
    let weight = Complex64::new(1.0 / (diagrams.len() as f64).sqrt(), 0.0);
    let terms: Vec<(Complex64, &PureState)> = states.iter().map(|s| (weight, s)).collect();
    PureState::superpose(&terms)
}

/// `(1/√2^k) Σ_p |p, p>` on `2k` qubits: every `k`-bit pattern of A matched
/// with the same pattern on B.
pub fn maximal_chain_state(k: usize) -> Result<PureState> {
    if k == 0 || 2 * k > MAX_QUBITS {
        return Err(Error::Range {
            got: k,
            min: 1,
            max: MAX_QUBITS / 2,
        });
    }
    let diagrams = (0..1usize << (k - 1))
        .map(|v| {
            let p = BitPattern::new(k, v)?;
            Diagram::new(p.concat(&p)?)
        })
        .collect::<Result<Vec<_>>>()?;
    chain_superposition(&diagrams, Sign::Plus)
}

/// Maximal entanglement entropy `log₂ 2^k` between two `k`-qubit halves.
pub fn bipartite_formation_entropy(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::Range {
            got: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    Ok((k as f64) * 2f64.log2())
}

/// Grouping of parties in a multipartite chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionTree {
    Party,
    Group(Vec<PartitionTree>),
}

impl PartitionTree {
    /// `n` parties in a single flat group.
    pub fn flat(n: usize) -> Self {
        PartitionTree::Group(vec![PartitionTree::Party; n])
    }

    pub fn party_count(&self) -> usize {
        match self {
            PartitionTree::Party => 1,
            PartitionTree::Group(children) => children.iter().map(Self::party_count).sum(),
        }
    }

    fn validate(&self) -> Result<()> {
        if let PartitionTree::Group(children) = self {
            if children.len() < 2 {
                return Err(Error::PartitionTree(format!(
                    "group with {} member(s)",
                    children.len()
                )));
            }
            children.iter().try_for_each(Self::validate)?;
        }
        Ok(())
    }
}

/// One disentangling step: `peeled` parties separated from `remaining`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DisentanglingStep {
    pub peeled: usize,
    pub remaining: usize,
}

/// Steps that unentangle every party. Each group peels its members one at a
/// time until one is left, then each member is disentangled internally.
pub fn disentangling_steps(tree: &PartitionTree) -> Result<Vec<DisentanglingStep>> {
    if tree.party_count() < 2 {
        return Err(Error::PartitionTree("fewer than 2 parties".into()));
    }
    tree.validate()?;
    let mut steps = Vec::new();
    collect_steps(tree, &mut steps);
    Ok(steps)
}

fn collect_steps(tree: &PartitionTree, steps: &mut Vec<DisentanglingStep>) {
    if let PartitionTree::Group(children) = tree {
        let mut remaining: usize = children.iter().map(PartitionTree::party_count).sum();
        for child in &children[..children.len() - 1] {
            let peeled = child.party_count();
            remaining -= peeled;
            steps.push(DisentanglingStep { peeled, remaining });
        }
        for child in children {
            collect_steps(child, steps);
        }
    }
}

/// Qubits of formation: one emergent qubit per disentangling step.
pub fn formation_count(tree: &PartitionTree) -> Result<usize> {
    let per_step = bipartite_formation_entropy(1)?.round() as usize;
    Ok(disentangling_steps(tree)?.len() * per_step)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmergentCheck {
    pub diagram: Diagram,
    /// `T(+1)` maps span{plus, minus} into itself.
    pub closed_under_translation: bool,
    pub sigma_x: [f64; 2],
    pub translation_phase: [f64; 2],
    pub concurrence: [f64; 2],
    pub formation: [f64; 2],
}

impl EmergentCheck {
    pub fn passed(&self) -> bool {
        let near = |x: f64, y: f64| (x - y).abs() <= STRUCTURAL_TOL;
        self.closed_under_translation
            && near(self.sigma_x[0], 1.0)
            && near(self.sigma_x[1], -1.0)
            && near(self.translation_phase[0], 1.0)
            && near(self.translation_phase[1], -1.0)
            && self.concurrence.iter().all(|&c| near(c, 1.0))
            && self.formation.iter().all(|&e| near(e, 1.0))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmergentReport {
    pub checks: Vec<EmergentCheck>,
}

impl EmergentReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(EmergentCheck::passed)
    }
}

pub fn verify_emergent_property(diagrams: &[Diagram]) -> Result<EmergentReport> {
    let checks = diagrams
        .iter()
        .map(|&diagram| {
            let qubit = EmergentQubit::new(diagram);
            let mut closed = true;
            let mut sigma_x = [0.0; 2];
            let mut phase = [0.0; 2];
            let mut concurrence = [0.0; 2];
            let mut formation = [0.0; 2];
            for (slot, which) in [Sign::Plus, Sign::Minus].into_iter().enumerate() {
                let state = qubit.state(which);
                let shifted = translate(state, 1);
                let [a, b] = qubit.coordinates(&shifted);
                closed &= ((a.norm_sqr() + b.norm_sqr()) - 1.0).abs() <= STRUCTURAL_TOL;
                sigma_x[slot] = emergent_sigma_x(&qubit, which);
                phase[slot] = state.inner(&shifted).re;
                concurrence[slot] = concurrence_translation(state);
                formation[slot] = formation_from_concurrence(concurrence[slot])?;
            }
            Ok(EmergentCheck {
                diagram,
                closed_under_translation: closed,
                sigma_x,
                translation_phase: phase,
                concurrence,
                formation,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EmergentReport { checks })
}
