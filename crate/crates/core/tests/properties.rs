use entangle_core::formation::{
    chain_superposition, emergent_sigma_x, formation_count, EmergentQubit, PartitionTree,
};
use entangle_core::measures::{
    binary_entropy, classify_bell_superposition, concurrence_translation, concurrence_wootters,
    entropic_distance, formation_from_concurrence, SchmidtVerdict,
};
use entangle_core::phasespace::{
    bell_basis, bell_block_coefficients, conjugate_density_basis, diagram_basis_states,
    enumerate_diagrams, expand_in_bell, hadamard_pair, translate, translation_symmetry, Bell,
    Block, Diagram, DiagramState, Direction, Sign,
};
use entangle_core::statekit::{
    density_of, entanglement_entropy, is_product, partial_trace, purity_check,
    reduced_spectra_agree, schmidt_decompose, von_neumann_entropy, Bipartition, DensityOp,
    PureState, Subsystem,
};
use entangle_core::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

fn random_state(rng: &mut impl Rng, n: usize) -> PureState {
    let amps = (0..1 << n)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    PureState::normalized(n, amps).unwrap()
}

fn random_split(rng: &mut impl Rng, n: usize) -> Bipartition {
    loop {
        let a: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
        if !a.is_empty() && a.len() < n {
            return Bipartition::with_a(n, a).unwrap();
        }
    }
}

/// Product across `part` by construction: tensor a random A-state with a
/// random B-state, then scatter the qubits into the split's positions.
fn random_product(rng: &mut impl Rng, part: &Bipartition) -> PureState {
    let n = part.n_qubits();
    let a = random_state(rng, part.a().len());
    let b = random_state(rng, part.b().len());
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
    for (ia, &za) in a.amplitudes().iter().enumerate() {
        for (ib, &zb) in b.amplitudes().iter().enumerate() {
            let mut idx = 0;
            for (pos, &q) in part.a().iter().enumerate() {
                idx |= (ia >> (part.a().len() - 1 - pos) & 1) << (n - 1 - q);
            }
            for (pos, &q) in part.b().iter().enumerate() {
                idx |= (ib >> (part.b().len() - 1 - pos) & 1) << (n - 1 - q);
            }
            amps[idx] = za * zb;
        }
    }
    PureState::new(n, amps).unwrap()
}

fn state_strategy(n: usize) -> impl Strategy<Value = PureState> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << n)
        .prop_filter("non-zero", |v| {
            v.iter().any(|(a, b)| a.abs() + b.abs() > 1e-3)
        })
        .prop_map(move |v| {
            let amps = v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect();
            PureState::normalized(n, amps).unwrap()
        })
}

#[test]
fn reduced_entropies_agree_on_both_sides() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.random_range(2..=5);
        let state = random_state(&mut rng, n);
        let part = random_split(&mut rng, n);
        assert!(reduced_spectra_agree(&state, &part).unwrap());
        let rho = density_of(&state);
        let sa = von_neumann_entropy(&partial_trace(&rho, &part, Subsystem::A).unwrap());
        let sb = von_neumann_entropy(&partial_trace(&rho, &part, Subsystem::B).unwrap());
        assert!((sa - sb).abs() <= 1e-9, "{sa} vs {sb}");
        assert!(sa >= 0.0 && sa <= part.a().len().min(part.b().len()) as f64 + 1e-9);
    }
}

#[test]
fn pure_density_operators_have_zero_entropy() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let n = rng.random_range(1..=4);
        let rho = density_of(&random_state(&mut rng, n));
        let purity = purity_check(&rho);
        assert!(purity.pure);
        assert!((purity.projector_scale.unwrap() - 1.0).abs() <= 1e-10);
        assert!(von_neumann_entropy(&rho).abs() <= 1e-9);
        DensityOp::new(n, rho.matrix().clone()).unwrap();
    }
}

#[test]
fn schmidt_rank_one_iff_zero_entropy() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for i in 0..1000 {
        let n = rng.random_range(2..=4);
        let part = random_split(&mut rng, n);
        let state = if i % 2 == 0 {
            random_product(&mut rng, &part)
        } else {
            random_state(&mut rng, n)
        };
        let rank = schmidt_decompose(&state, &part).unwrap().rank;
        let entropy = entanglement_entropy(&state, &part).unwrap();
        assert_eq!(
            rank == 1,
            entropy.abs() <= 1e-9,
            "rank {rank}, entropy {entropy}"
        );
        assert_eq!(i % 2 == 0, rank == 1);
    }
}

#[test]
fn partial_trace_keeps_trace_and_hermiticity() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..200 {
        let n = rng.random_range(2..=5);
        let part = random_split(&mut rng, n);
        let rho = density_of(&random_state(&mut rng, n));
        for keep in [Subsystem::A, Subsystem::B] {
            let reduced = partial_trace(&rho, &part, keep).unwrap();
            DensityOp::new(reduced.n_qubits(), reduced.matrix().clone()).unwrap();
        }
    }
}

proptest! {
    #[test]
    fn entropy_ignores_order_within_subsystems(state in state_strategy(4)) {
        let forward = Bipartition::new(4, vec![0, 1], vec![2, 3]).unwrap();
        let shuffled = Bipartition::new(4, vec![1, 0], vec![3, 2]).unwrap();
        let s1 = entanglement_entropy(&state, &forward).unwrap();
        let s2 = entanglement_entropy(&state, &shuffled).unwrap();
        prop_assert!((s1 - s2).abs() <= 1e-9);
    }

    #[test]
    fn schmidt_weights_sum_to_one(state in state_strategy(3)) {
        let s = schmidt_decompose(&state, &Bipartition::with_a(3, vec![1]).unwrap()).unwrap();
        let total: f64 = s.coefficients.iter().map(|c| c * c).sum();
        prop_assert!((total - 1.0).abs() <= 1e-9);
        prop_assert!(s.coefficients.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn translation_is_unitary_involution(state in state_strategy(3)) {
        let once = translate(&state, 1);
        let norm: f64 = once.amplitudes().iter().map(|a| a.norm_sqr()).sum();
        prop_assert!((norm - 1.0).abs() <= 1e-12);
        prop_assert!(translate(&once, 1).approx_eq(&state, 0.0));
    }

    #[test]
    fn hadamard_pair_is_involution(a in state_strategy(2), b in state_strategy(2)) {
        // Gram-Schmidt a second state against the first.
        let overlap = a.inner(&b);
        let amps: Vec<Complex64> = b.amplitudes().iter().zip(a.amplitudes())
            .map(|(y, x)| y - x * overlap).collect();
        prop_assume!(amps.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-6);
        let b = PureState::normalized(2, amps).unwrap();
        let (p, m) = hadamard_pair(&a, &b, Direction::ToBloch).unwrap();
        let (a2, b2) = hadamard_pair(&p, &m, Direction::ToWannier).unwrap();
        prop_assert!(a2.approx_eq(&a, 1e-12));
        prop_assert!(b2.approx_eq(&b, 1e-12));
    }

    #[test]
    fn block_conjugation_preserves_spectrum(p in 0.0f64..1.0, re in -1.0f64..1.0, im in -1.0f64..1.0, singlet in any::<bool>()) {
        let block = if singlet { Block::Singlet } else { Block::Triplet };
        let (i, j) = if singlet { (1, 2) } else { (0, 3) };
        // Off-diagonal bounded by √(p(1-p)) keeps the block positive.
        let bound = (p * (1.0 - p)).sqrt();
        let off = Complex64::new(re, im) * (bound / 2.0);
        let mut m = nalgebra::DMatrix::from_element(4, 4, Complex64::new(0.0, 0.0));
        m[(i, i)] = Complex64::new(p, 0.0);
        m[(j, j)] = Complex64::new(1.0 - p, 0.0);
        m[(i, j)] = off;
        m[(j, i)] = off.conj();
        let rho = DensityOp::new(2, m).unwrap();
        let conj = conjugate_density_basis(&rho, block).unwrap();
        for (x, y) in rho.eigenvalues().iter().zip(conj.eigenvalues()) {
            prop_assert!((x - y).abs() <= 1e-10);
        }
        let coeffs = bell_block_coefficients(&rho, block).unwrap();
        let tr = coeffs[(0, 0)] + coeffs[(1, 1)];
        prop_assert!((tr.re - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn diagram_states_orthonormal_up_to_six_qubits() {
    for n in 2..=6 {
        let states: Vec<PureState> = enumerate_diagrams(n)
            .unwrap()
            .iter()
            .flat_map(|d| {
                let (p, m) = diagram_basis_states(d);
                [p, m]
            })
            .collect();
        assert_eq!(states.len(), 1 << n);
        for (i, x) in states.iter().enumerate() {
            for (j, y) in states.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((x.inner(y) - Complex64::new(want, 0.0)).norm() <= 1e-12);
            }
        }
    }
}

#[test]
fn translation_commutes_with_diagram_states() {
    for n in 2..=6 {
        for d in enumerate_diagrams(n).unwrap() {
            let (p, m) = diagram_basis_states(&d);
            assert!(translate(&p, 1).approx_eq(&p, 1e-15));
            assert!(translate(&m, 1).approx_eq(&m.with_phase(Complex64::new(-1.0, 0.0)), 1e-15));
        }
    }
}

#[test]
fn bell_expansion_round_trip_and_alpha_beta_relations() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    for _ in 0..1000 {
        let state = random_state(&mut rng, 2);
        let coeffs = expand_in_bell(&state).unwrap();
        assert!(coeffs.reconstruct().approx_eq(&state, 1e-10));
        assert!((coeffs.norm_sqr() - 1.0).abs() <= 1e-10);
        let [b1, b2, b3, b4] = coeffs.beta;
        let a = state.amplitudes();
        assert!((a[0] - (b1 + b2) * s).norm() <= 1e-12);
        assert!((a[1] - (b3 + b4) * s).norm() <= 1e-12);
        assert!((a[2] - (b3 - b4) * s).norm() <= 1e-12);
        assert!((a[3] - (b1 - b2) * s).norm() <= 1e-12);
    }
}

#[test]
fn bell_basis_gram_is_identity() {
    let basis = bell_basis();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((x.inner(y).re - want).abs() <= 1e-15 && x.inner(y).im == 0.0);
        }
    }
}

#[test]
fn wootters_formation_matches_reduced_entropy() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let part = Bipartition::halves(2).unwrap();
    for _ in 0..1000 {
        let state = random_state(&mut rng, 2);
        let e = formation_from_concurrence(concurrence_wootters(&state).unwrap()).unwrap();
        let s = entanglement_entropy(&state, &part).unwrap();
        assert!((e - s).abs() <= 1e-9, "E {e} vs S {s}");
    }
}

#[test]
fn diagram_states_are_maximally_concurrent() {
    for n in 2..=6 {
        for d in enumerate_diagrams(n).unwrap() {
            let (p, m) = diagram_basis_states(&d);
            for s in [p, m] {
                let c = concurrence_translation(&s);
                assert!((c - 1.0).abs() <= 1e-12);
                assert!((formation_from_concurrence(c).unwrap() - 1.0).abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn classifier_product_verdict_matches_schmidt() {
    let labels: Vec<DiagramState> = Bell::ALL.iter().map(|b| b.diagram_state()).collect();
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    for (i, x) in labels.iter().enumerate() {
        for y in &labels[i + 1..] {
            for phase in [h, -h, h * Complex64::i()] {
                let v = classify_bell_superposition(&[(*x, h), (*y, phase)]).unwrap();
                let product = is_product(&v.state, &Bipartition::halves(2).unwrap()).unwrap();
                assert_eq!(v.schmidt == SchmidtVerdict::Product, product);
            }
        }
    }
    let d4 = enumerate_diagrams(4).unwrap();
    for x in &d4 {
        for y in &d4 {
            for (sx, sy) in [(Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Minus)] {
                let (a, b) = (x.with_sign(sx), y.with_sign(sy));
                if a == b {
                    continue;
                }
                let v = classify_bell_superposition(&[(a, h), (b, h)]).unwrap();
                let product = is_product(&v.state, &Bipartition::halves(4).unwrap()).unwrap();
                assert_eq!(v.schmidt == SchmidtVerdict::Product, product);
            }
        }
    }
}

#[test]
fn formation_and_distance_sum_to_one() {
    for i in 0..=100 {
        let c = i as f64 / 100.0;
        let total = formation_from_concurrence(c).unwrap() + entropic_distance(c).unwrap();
        assert!((total - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn binary_entropy_is_symmetric() {
    for i in 0..=100 {
        let x = i as f64 / 100.0;
        let d = binary_entropy(x).unwrap() - binary_entropy(1.0 - x).unwrap();
        assert!(d.abs() <= 1e-12);
    }
}

#[test]
fn formation_is_monotone() {
    let values: Vec<f64> = (0..=100)
        .map(|i| formation_from_concurrence(i as f64 / 100.0).unwrap())
        .collect();
    assert!(values.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn same_sign_chains_are_translation_eigenstates() {
    let check = |subset: &[Diagram], sign: Sign| {
        let state = chain_superposition(subset, sign).unwrap();
        assert!((concurrence_translation(&state) - 1.0).abs() <= 1e-12);
        assert_eq!(translation_symmetry(&state).sign(), Some(sign));
    };
    // Every subset for n ≤ 4.
    for n in 2..=4 {
        let diagrams = enumerate_diagrams(n).unwrap();
        for mask in 1usize..1 << diagrams.len() {
            let subset: Vec<Diagram> = (0..diagrams.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| diagrams[i])
                .collect();
            check(&subset, Sign::Plus);
            check(&subset, Sign::Minus);
        }
    }
    // Seeded random subsets for n = 5, 6.
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 5..=6 {
        let diagrams = enumerate_diagrams(n).unwrap();
        for _ in 0..300 {
            let subset: Vec<Diagram> = diagrams
                .iter()
                .copied()
                .filter(|_| rng.random_bool(0.4))
                .collect();
            if subset.is_empty() {
                continue;
            }
            check(&subset, Sign::Plus);
            check(&subset, Sign::Minus);
        }
    }
}

#[test]
fn sigma_x_equals_translation_phase() {
    for n in 2..=6 {
        for d in enumerate_diagrams(n).unwrap() {
            let q = EmergentQubit::new(d);
            for which in [Sign::Plus, Sign::Minus] {
                let sx = emergent_sigma_x(&q, which);
                let phase = translation_symmetry(q.state(which)).sign().unwrap().value();
                assert_eq!(sx, phase);
            }
        }
    }
}

proptest! {
    #[test]
    fn formation_count_is_parties_minus_one(sizes in prop::collection::vec(1usize..5, 2..6)) {
        let tree = PartitionTree::Group(
            sizes.iter().map(|&s| if s == 1 { PartitionTree::Party } else { PartitionTree::flat(s) }).collect(),
        );
        let n = tree.party_count();
        prop_assert_eq!(formation_count(&tree).unwrap(), n - 1);
        prop_assert_eq!(formation_count(&PartitionTree::flat(n)).unwrap(), n - 1);
    }
}
