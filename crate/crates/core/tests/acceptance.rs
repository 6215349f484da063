//! Acceptance suite: one test per criterion, each printing a pass line.
//! Everything is exact — no tolerances anywhere.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use duplicial::constructions::{
    builtins, duchain_to_duplicial, simplex_chains, AlgebraSpec,
};
use duplicial::dk::{sequences, Dk};
use duplicial::duchain::DuchainComplex;
use duplicial::error::Error;
use duplicial::homology::{
    field_rank_oracle, hochschild_homology, mixed_complex_homology, normalized_vs_full_homology,
    ChainComplex, MixedFlavor,
};
use duplicial::linalg::invert;
use duplicial::matrix::Matrix;
use duplicial::module::{Element, TruncatedDuplicialModule};
use duplicial::ops::Ops;
use duplicial::ring::{CoefficientRing, Scalar};
use duplicial::suite::{
    check_identity_suite, classify_module, validate_relations, EntryClass, ModuleClass, Status,
};

const N_MAX: usize = 5;
const MODULES: &[&str] = &[
    "ground-ring",
    "simplex-0",
    "simplex-1",
    "simplex-2",
    "dual-numbers",
    "dual-numbers-twisted",
    "scalar-twisted-u",
];
const RINGS: &[CoefficientRing] = &[
    CoefficientRing::Rationals,
    CoefficientRing::Integers,
    CoefficientRing::Mod(7),
];

fn build(name: &str, ring: CoefficientRing) -> TruncatedDuplicialModule {
    builtins::by_name(name, ring, N_MAX, 2).unwrap()
}

fn all_modules(ring: CoefficientRing) -> Vec<(&'static str, TruncatedDuplicialModule)> {
    MODULES.iter().map(|&name| (name, build(name, ring))).collect()
}

fn pass(criterion: usize, text: &str) {
    println!("ACCEPTANCE {criterion:02}: PASS - {text}");
}

#[test]
fn criterion_01_relation_suite() {
    for &ring in RINGS {
        for (name, module) in all_modules(ring) {
            let report = validate_relations(&module);
            for failure in report.failures() {
                panic!(
                    "{name} over {ring}: relation {} fails at degree {} with witness {:?}",
                    failure.identity, failure.degree, failure.witness
                );
            }
            for entry in &report.entries {
                if entry.status == Status::Skipped {
                    assert!(
                        entry.degree + 1 >= module.n_max,
                        "{name} over {ring}: unexpected skip of {} at degree {}",
                        entry.identity,
                        entry.degree
                    );
                }
            }
        }
    }
    pass(1, "all structural relations hold for every builtin over Q, Z and Z/7 at N_max = 5");
}

#[test]
fn criterion_02_karoubi_identity() {
    for &ring in RINGS {
        for (name, module) in all_modules(ring) {
            let mut ops = Ops::new(&module);
            for n in 0..module.n_max {
                let kappa = ops.kappa(n).unwrap();
                assert_eq!(
                    kappa,
                    ops.kappa_via_differentials(n).unwrap(),
                    "{name} over {ring}: kappa != 1 - bd - db at degree {n}"
                );
                let one = ops.identity(n);
                let bd = ops.b(n + 1).unwrap().mul(&ops.d(n).unwrap());
                let db = if n == 0 {
                    Matrix::zeros(ring, module.ranks[0], module.ranks[0])
                } else {
                    ops.d(n - 1).unwrap().mul(&ops.b(n).unwrap())
                };
                assert_eq!(kappa, one.sub(&bd).mul(&one.sub(&db)), "{name} {ring} left");
                assert_eq!(kappa, one.sub(&db).mul(&one.sub(&bd)), "{name} {ring} right");
            }
        }
    }
    pass(2, "kappa = 1 - bd - db and both commuting factorizations, all modules, n < N_max");
}

#[test]
fn criterion_03_lemmas_sk_pk_and_decomposition() {
    for &ring in RINGS {
        for (name, module) in all_modules(ring) {
            let report = check_identity_suite(&module);
            for id in ["lemma-sk", "lemma-pk", "kappa-on-decomposition"] {
                let entries: Vec<_> = report
                    .entries
                    .iter()
                    .filter(|e| e.identity == id)
                    .collect();
                assert!(!entries.is_empty(), "{name} over {ring}: no {id} entries");
                for e in entries {
                    assert_ne!(
                        e.status,
                        Status::Fail,
                        "{name} over {ring}: {id} fails at degree {}",
                        e.degree
                    );
                    if e.identity == "kappa-on-decomposition"
                        && ring != CoefficientRing::Mod(7)
                        && e.degree <= 4
                    {
                        assert_eq!(e.status, Status::Pass);
                    }
                }
            }
        }
    }
    pass(3, "Lemmas for kappa against faces/degeneracies and the decomposition corollary, n <= 4");
}

#[test]
fn criterion_04_dwyer_kan_operator() {
    for &ring in RINGS {
        for (name, module) in all_modules(ring) {
            let mut ops = Ops::new(&module);
            for n in 0..module.n_max {
                let pi = ops.pi(n).unwrap();
                assert_eq!(pi, ops.pi_factored(n).unwrap(), "{name} {ring} factored {n}");
                if n + 1 < module.n_max {
                    assert_eq!(pi, ops.pi_via_definition(n).unwrap(), "{name} {ring} def {n}");
                }
                if n >= 1 {
                    let lhs = ops.b(n).unwrap().mul(&pi);
                    let rhs = ops.pi(n - 1).unwrap().mul(&ops.b(n).unwrap());
                    assert_eq!(lhs, rhs, "{name} {ring}: pi does not commute with b at {n}");
                }
                if n + 1 < module.n_max {
                    let lhs = ops.d(n).unwrap().mul(&pi);
                    let rhs = ops.pi(n + 1).unwrap().mul(&ops.d(n).unwrap());
                    assert_eq!(lhs, rhs, "{name} {ring}: pi does not commute with d at {n}");
                }
            }
        }
    }
    pass(4, "pi = kappa^n - b kappa^n d = (1-bd)^{n+1}(1-db)^n and commutes with b and d");
}

#[test]
fn criterion_05_main_theorem() {
    for &ring in RINGS {
        for (name, module) in all_modules(ring) {
            let mut ops = Ops::new(&module);
            for n in 0..module.n_max {
                let pi = ops.pi(n).unwrap();
                let p = ops.p(n).unwrap();
                let big_t = ops.big_t(n).unwrap();
                assert_eq!(pi, p.mul(&big_t), "{name} over {ring}: pi != p T at degree {n}");
                assert_eq!(pi, big_t.mul(&p), "{name} over {ring}: pi != T p at degree {n}");
            }
        }
    }
    pass(5, "main theorem pi = p∘T = T∘p exactly, all modules, n < N_max");
}

#[test]
fn criterion_06_cyclic_specialization() {
    for name in ["ground-ring", "simplex-0", "simplex-1", "simplex-2"] {
        for &ring in RINGS {
            let module = build(name, ring);
            let mut ops = Ops::new(&module);
            for n in 0..module.n_max {
                assert!(
                    ops.big_t(n).unwrap().is_identity(),
                    "{name} over {ring}: T != 1 at degree {n}"
                );
                assert_eq!(
                    ops.pi(n).unwrap(),
                    ops.p(n).unwrap(),
                    "{name} over {ring}: pi != p at degree {n}"
                );
            }
            let classification = classify_module(&module);
            assert_eq!(classification.class, ModuleClass::Cyclic, "{name} over {ring}");
            if ring != CoefficientRing::Mod(7) || ring.is_field() {
                for w in &classification.witnesses {
                    if let Some(id) = w.pi_identity_on_n {
                        assert!(id, "{name} over {ring}: pi|N != 1 at degree {}", w.degree);
                    }
                }
            }
        }
    }
    pass(6, "promoted simplicial modules are cyclic: T = 1, pi = p, pi restricted to N is 1");
}

#[test]
fn criterion_07_paracyclic_equivalence() {
    // forward direction: the u-twisted module over Q is paracyclic
    let module = build("scalar-twisted-u", CoefficientRing::Rationals);
    for n in 0..module.n_max {
        assert!(invert(&module.t_at(n).unwrap()).is_ok(), "t not invertible at {n}");
    }
    let classification = classify_module(&module);
    assert_eq!(classification.class, ModuleClass::Paracyclic);
    for w in &classification.witnesses {
        if w.degree < module.n_max {
            assert_eq!(w.kappa_invertible_on_n, Some(true), "kappa|N at {}", w.degree);
            assert_eq!(w.pi_invertible_on_n, Some(true), "pi|N at {}", w.degree);
            assert_eq!(w.pi_identity_on_n, Some(false), "not cyclic at {}", w.degree);
        }
    }

    // reverse direction: the duchain with b_1 = d_0 = 1 has kappa_0 = 0 on
    // N_0, so its reconstruction cannot be paracyclic
    let ring = CoefficientRing::Rationals;
    let one = Matrix::identity(ring, 1);
    let zero11 = Matrix::zeros(ring, 1, 1);
    let v = DuchainComplex::new(
        ring,
        2,
        vec![1, 1, 0],
        vec![one.clone(), Matrix::zeros(ring, 1, 0)],
        vec![one, Matrix::zeros(ring, 0, 1)],
    )
    .unwrap();
    let rec = duchain_to_duplicial(&v).unwrap();
    assert!(validate_relations(&rec).passed());
    let mut dk = Dk::new(Ops::new(&rec));
    let kappa0 = dk.ops.kappa(0).unwrap();
    // N_0 is all of M_0 here, and kappa_0 = 1 - b_1 d_0 = 0 on it
    assert_eq!(kappa0, Matrix::zeros(ring, 1, 1));
    let t0 = rec.t_at(0).unwrap();
    assert!(invert(&t0).is_err(), "t_0 should not be invertible");
    assert_eq!(t0, zero11);
    let classification = classify_module(&rec);
    assert_eq!(classification.class, ModuleClass::Duplicial);
    pass(7, "both directions of the paracyclicity criterion witnessed (u = 2 and b1 = d0 = 1)");
}

#[test]
fn criterion_08_homotopies() {
    for &ring in RINGS {
        for (name, module) in all_modules(ring) {
            let mut ops = Ops::new(&module);
            let n_max = module.n_max;
            for n in 0..n_max {
                // b phi + phi b = p - 1
                let mut lhs = ops.b(n + 1).unwrap().mul(&ops.phi(n).unwrap());
                if n >= 1 {
                    lhs = lhs.add(&ops.phi(n - 1).unwrap().mul(&ops.b(n).unwrap()));
                }
                let rhs = ops.p(n).unwrap().sub(&ops.identity(n));
                assert_eq!(lhs, rhs, "{name} over {ring}: phi homotopy at {n}");

                // b B + B b = 1 - pi
                let mut lhs = ops.b(n + 1).unwrap().mul(&ops.connes_b(n).unwrap());
                if n >= 1 {
                    lhs = lhs.add(&ops.connes_b(n - 1).unwrap().mul(&ops.b(n).unwrap()));
                }
                let rhs = ops.identity(n).sub(&ops.pi(n).unwrap());
                assert_eq!(lhs, rhs, "{name} over {ring}: B homotopy at {n}");

                if n + 1 < n_max {
                    let sq = ops.connes_b(n + 1).unwrap().mul(&ops.connes_b(n).unwrap());
                    assert!(sq.is_zero(), "{name} over {ring}: B^2 != 0 at {n}");

                    // d D + D d = 1 - pi (paper says only "similarly")
                    let mut lhs = ops.gs_d(n + 1).unwrap().mul(&ops.d(n).unwrap());
                    if n >= 1 {
                        lhs = lhs.add(&ops.d(n - 1).unwrap().mul(&ops.gs_d(n).unwrap()));
                    }
                    let rhs = ops.identity(n).sub(&ops.pi(n).unwrap());
                    assert_eq!(lhs, rhs, "{name} over {ring}: D homotopy at {n}");
                }
                if n >= 1 {
                    let sq = ops.gs_d(n - 1).unwrap().mul(&ops.gs_d(n).unwrap());
                    assert!(sq.is_zero(), "{name} over {ring}: D^2 != 0 at {n}");
                }
            }
            // the flagged entries carry their note in the report
            let report = check_identity_suite(&module);
            assert!(report
                .entries
                .iter()
                .filter(|e| e.identity.starts_with("gs-D"))
                .all(|e| e.note.is_some() || e.status == Status::Skipped));
        }
    }
    pass(8, "phi, B and D homotopies and both squares vanish, all modules, checkable degrees");
}

fn random_element(
    rng: &mut ChaCha8Rng,
    module: &TruncatedDuplicialModule,
    degree: usize,
) -> Element {
    let coords = (0..module.ranks[degree])
        .map(|_| module.ring.from_i64(rng.gen_range(-9i64..=9)))
        .collect();
    Element { degree, coords }
}

#[test]
fn criterion_09_dold_kan_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for &ring in &[CoefficientRing::Rationals, CoefficientRing::Integers] {
        for (name, module) in all_modules(ring) {
            let mut dk = Dk::new(Ops::new(&module));
            for n in 0..=4usize {
                // rank identity: sum_k C(n,k) rank N_{n-k} = rank M_n
                let total: usize = sequences(n)
                    .iter()
                    .map(|seq| dk.n_basis(n - seq.len()).unwrap().cols)
                    .sum();
                assert_eq!(total, module.ranks[n], "{name} over {ring}: rank identity at {n}");

                for _ in 0..100 {
                    let x = random_element(&mut rng, &module, n);
                    let decomposition = dk.decompose(&x).unwrap();
                    let back = dk.reconstruct(n, &decomposition).unwrap();
                    assert_eq!(back, x, "{name} over {ring}: reconstruct∘decompose at {n}");
                    let again = dk.decompose(&back).unwrap();
                    assert_eq!(again, decomposition, "{name} over {ring}: decompose∘reconstruct");
                }
            }
        }
    }
    pass(9, "decompose/reconstruct mutually inverse on 100 random elements per degree <= 4");
}

#[test]
fn criterion_10_reconstruction_equivalence() {
    for name in ["simplex-1", "dual-numbers"] {
        let module = builtins::by_name(name, CoefficientRing::Rationals, 4, 2).unwrap();
        let mut dk = Dk::new(Ops::new(&module));
        let v = dk.induced_duchain().unwrap();
        let rec = duchain_to_duplicial(&v).unwrap();
        assert!(validate_relations(&rec).passed(), "{name}: reconstruction relations");

        // the coordinate isomorphism: columns of phi are word * N-basis
        let phi: Vec<Matrix> = (0..=4).map(|n| dk.transition(n).unwrap()).collect();
        for n in 0..=4usize {
            assert_eq!(rec.ranks[n], module.ranks[n], "{name}: rank mismatch at {n}");
            for i in 0..=n.max(1) {
                if n >= 1 && i <= n {
                    let lhs = module.face[n][i].mul(&phi[n]);
                    let rhs = phi[n - 1].mul(&rec.face[n][i]);
                    assert_eq!(lhs, rhs, "{name}: face {i} at degree {n} not intertwined");
                }
            }
            if n < 4 {
                for i in 0..=n + 1 {
                    let lhs = module.degen[n][i].mul(&phi[n]);
                    let rhs = phi[n + 1].mul(&rec.degen[n][i]);
                    assert_eq!(lhs, rhs, "{name}: degeneracy {i} at degree {n} not intertwined");
                }
                let lhs = module.t_at(n).unwrap().mul(&phi[n]);
                let rhs = phi[n].mul(&rec.t_at(n).unwrap());
                assert_eq!(lhs, rhs, "{name}: t at degree {n} not intertwined");
            }
        }
    }

    // the worked example t_1(x + s_{0,0} x_0) = -x + s_{0,0}(b_1 x + x_0)
    // as a matrix identity on the promoted simplex
    let module = build("simplex-1", CoefficientRing::Rationals);
    let mut dk = Dk::new(Ops::new(&module));
    let n1 = dk.n_basis(1).unwrap();
    let n0 = dk.n_basis(0).unwrap();
    let s00 = module.degen[0][0].clone();
    let b1 = dk.ops.b(1).unwrap();
    let t1 = module.t_at(1).unwrap();
    let lhs = t1.mul(&n1.hstack(&s00.mul(&n0)));
    let rhs = n1.neg().add(&s00.mul(&b1).mul(&n1)).hstack(&s00.mul(&n0));
    assert_eq!(lhs, rhs, "t_1 worked example");

    pass(10, "duchain_to_duplicial(induced_duchain(M)) intertwines every operator; t_1 example");
}

#[test]
fn criterion_11_inversion_formula_resolution() {
    let module = build("scalar-twisted-u", CoefficientRing::Rationals);
    let report = check_identity_suite(&module);
    let variants = ["inv-pi-printed", "inv-pi-corrected", "inv-kappa-printed", "inv-kappa-corrected"];
    let mut printed_fails = 0;
    for id in variants {
        for n in 0..=4usize {
            let entry = report
                .entries
                .iter()
                .find(|e| e.identity == id && e.degree == n)
                .unwrap_or_else(|| panic!("missing {id} at degree {n}"));
            assert_eq!(entry.class, EntryClass::Variant);
            assert_ne!(
                entry.status,
                Status::Skipped,
                "{id} at degree {n} must resolve to holds/fails"
            );
            if id.ends_with("corrected") {
                assert_eq!(entry.status, Status::Pass, "{id} must hold at degree {n}");
            } else if entry.status == Status::Fail {
                printed_fails += 1;
            }
        }
    }
    // the printed formulas require (bd)^2 = (db)^2 = 0 on N, which fails
    // here, so the report must discriminate the two versions
    assert!(printed_fails > 0, "printed and corrected variants must differ somewhere");
    pass(11, "sign-corrected inversion formulas hold at every degree <= 4; printed ones fail where (db)^2 != 0");
}

#[test]
fn criterion_12_homology() {
    let z = CoefficientRing::Integers;
    let q = CoefficientRing::Rationals;

    // H of the simplex-1 chain complex over Z: (Z, 0, 0, 0)
    let chains = simplex_chains(1, 4, z).unwrap();
    let complex = ChainComplex::from_module(&chains).unwrap();
    let groups = complex.homology_range(3).unwrap();
    assert_eq!(groups[0].free_rank, 1);
    assert!(groups[0].torsion.is_empty());
    for g in &groups[1..] {
        assert_eq!((g.free_rank, g.torsion.len()), (0, 0), "H_{} of simplex-1", g.degree);
    }

    // reconstruction of (Z, Z; b = d = 0): (Z, Z, 0, ...)
    let v = DuchainComplex::new(
        z,
        4,
        vec![1, 1, 0, 0, 0],
        vec![
            Matrix::zeros(z, 1, 1),
            Matrix::zeros(z, 1, 0),
            Matrix::zeros(z, 0, 0),
            Matrix::zeros(z, 0, 0),
        ],
        vec![
            Matrix::zeros(z, 1, 1),
            Matrix::zeros(z, 0, 1),
            Matrix::zeros(z, 0, 0),
            Matrix::zeros(z, 0, 0),
        ],
    )
    .unwrap();
    let rec = duchain_to_duplicial(&v).unwrap();
    let complex = ChainComplex::from_module(&rec).unwrap();
    let groups = complex.homology_range(3).unwrap();
    assert_eq!(groups[0].free_rank, 1);
    assert_eq!(groups[1].free_rank, 1);
    assert_eq!(groups[2].free_rank, 0);
    assert_eq!(groups[3].free_rank, 0);
    assert!(groups.iter().all(|g| g.torsion.is_empty()));

    // Hochschild homology of the ground field and of the dual numbers
    let hh = hochschild_homology(&AlgebraSpec::ground(q), 3).unwrap();
    assert_eq!(hh[0].free_rank, 1);
    assert!(hh[1..].iter().all(|g| g.free_rank == 0));
    let hh = hochschild_homology(&AlgebraSpec::dual_numbers(q), 2).unwrap();
    assert_eq!(hh[0].free_rank, 2, "HH_0 of the dual numbers");
    assert_eq!(hh[1].free_rank, 1, "HH_1 of the dual numbers");

    // cross-check against the independent field rank oracle
    let dual = build("dual-numbers", q);
    let complex = ChainComplex::from_module(&dual).unwrap();
    for n in 0..dual.n_max {
        assert_eq!(
            complex.homology(n).unwrap().free_rank,
            field_rank_oracle(&complex, n).unwrap()
        );
    }

    // normalized vs full homology agree for every builtin
    for &ring in &[q, z] {
        for (name, module) in all_modules(ring) {
            let cmp = normalized_vs_full_homology(&module).unwrap();
            assert!(cmp.all_equal, "{name} over {ring}: normalized homology differs");
            assert!(cmp.homotopy_identity_holds, "{name} over {ring}: witness identity");
        }
    }

    // ground-ring mixed (b, B) truncation at W = 2 in its stable window
    let ground = builtins::ground_ring(q, 7).unwrap();
    let report = mixed_complex_homology(&ground, MixedFlavor::BB, 2).unwrap();
    let free: Vec<usize> = report.entries.iter().map(|e| e.group.free_rank).collect();
    assert!(free.len() >= 3, "window must reach degree 2");
    assert_eq!(&free[..3], &[1, 0, 1], "(b,B) truncation of the ground ring");

    pass(12, "all homology values match the SNF/rank oracles, including the mixed (b,B) window");
}

#[test]
fn criterion_13_negative_test() {
    // corrupt one degeneracy matrix and watch the relation checker name a
    // failing identity with a witness; the CLI exit-code side of this
    // criterion lives in the CLI integration tests
    let mut module = build("ground-ring", CoefficientRing::Rationals);
    module.degen[1][0] = module.degen[1][0].neg();
    let report = validate_relations(&module);
    assert!(!report.passed());
    let failure = report.failures().next().expect("a named failing identity");
    assert!(!failure.identity.is_empty());
    assert!(failure.witness.is_some(), "failure must carry a witness");

    let suite = check_identity_suite(&module);
    assert!(suite
        .failures()
        .any(|e| e.identity.starts_with("rel:")), "a structural relation must be among the failures");
    pass(13, "a corrupted structure matrix produces named failing identities with witnesses");
}

// ---------------------------------------------------------------------------
// smaller spec examples that belong with the acceptance data
// ---------------------------------------------------------------------------

#[test]
fn normalized_bases_of_the_builtins() {
    let q = CoefficientRing::Rationals;
    // degree 0: N_0 = M_0, D_0 = 0
    for (name, module) in all_modules(q) {
        let mut dk = Dk::new(Ops::new(&module));
        assert_eq!(dk.n_basis(0).unwrap().cols, module.ranks[0], "{name}");
        assert_eq!(dk.d_basis(0).unwrap().cols, 0, "{name}");
    }
    // ground ring: N_n = 0 for n >= 1
    let ground = build("ground-ring", q);
    let mut dk = Dk::new(Ops::new(&ground));
    for n in 1..=ground.n_max {
        assert_eq!(dk.n_basis(n).unwrap().cols, 0);
    }
    // simplex-1 chains: rank N_1 = 1
    let chains = simplex_chains(1, 4, q).unwrap();
    let mut dk = Dk::new(Ops::new(&chains));
    assert_eq!(dk.n_basis(1).unwrap().cols, 1);
}

#[test]
fn induced_duchain_examples() {
    let q = CoefficientRing::Rationals;
    // promotion kills the extra differential
    for name in ["simplex-0", "simplex-1", "simplex-2"] {
        let module = build(name, q);
        let mut dk = Dk::new(Ops::new(&module));
        let v = dk.induced_duchain().unwrap();
        for n in 0..v.n_max {
            assert!(v.d(n).is_zero(), "{name}: induced d at degree {n}");
        }
    }
    // simplex-1: the normalized b of the edge is the endpoint difference
    let chains = simplex_chains(1, 2, q).unwrap();
    let mut dk = Dk::new(Ops::new(&chains));
    let v = dk.induced_duchain().unwrap();
    let b1 = v.b(1);
    assert_eq!(b1.rows, 2);
    assert_eq!(b1.cols, 1);
    let entries: Vec<i64> = vec![
        if *b1.get(0, 0) == q.from_i64(1) { 1 } else { -1 },
        if *b1.get(1, 0) == q.from_i64(1) { 1 } else { -1 },
    ];
    assert_eq!(entries[0] + entries[1], 0, "edge boundary is a difference of endpoints");
}

#[test]
fn scalar_twist_has_unit_kappa_on_normalization() {
    // kappa acts on the normalization of the u-twist by multiplication by u
    let v = builtins::scalar_twisted_duchain(CoefficientRing::Rationals, 2, N_MAX).unwrap();
    for n in 0..N_MAX {
        let one = Matrix::identity(v.ring, 1);
        let bd = v.b(n + 1).mul(&v.d(n));
        let db = if n == 0 {
            Matrix::zeros(v.ring, 1, 1)
        } else {
            v.d(n - 1).mul(&v.b(n))
        };
        let kappa = one.sub(&bd).sub(&db);
        assert_eq!(kappa, one.scale(&v.ring.from_i64(2)));
    }
}

#[test]
fn mixed_complex_degenerate_cases() {
    let q = CoefficientRing::Rationals;
    // W = 0 reduces to the chain homology of (N, b), which matches (M, b)
    let module = builtins::ground_ring(q, 5).unwrap();
    let full = ChainComplex::from_module(&module).unwrap();
    let report = mixed_complex_homology(&module, MixedFlavor::BB, 0).unwrap();
    for entry in &report.entries {
        let expected = full.homology(entry.group.degree).unwrap();
        assert_eq!(entry.group.free_rank, expected.free_rank);
    }
    // a rank-zero module has zero mixed homology
    let zero = TruncatedDuplicialModule::new(
        q,
        5,
        vec![0; 6],
        vec![vec![], vec![Matrix::zeros(q, 0, 0); 2], vec![Matrix::zeros(q, 0, 0); 3],
             vec![Matrix::zeros(q, 0, 0); 4], vec![Matrix::zeros(q, 0, 0); 5],
             vec![Matrix::zeros(q, 0, 0); 6]],
        vec![vec![Matrix::zeros(q, 0, 0); 2], vec![Matrix::zeros(q, 0, 0); 3],
             vec![Matrix::zeros(q, 0, 0); 4], vec![Matrix::zeros(q, 0, 0); 5],
             vec![Matrix::zeros(q, 0, 0); 6], vec![]],
        vec![Some(Matrix::zeros(q, 0, 0)); 6],
        vec![None; 6],
    )
    .unwrap();
    assert!(validate_relations(&zero).passed());
    let report = mixed_complex_homology(&zero, MixedFlavor::BB, 1).unwrap();
    assert!(report.entries.iter().all(|e| e.group.free_rank == 0));
}

#[test]
fn torsion_shows_up_in_integer_homology() {
    // a two-term complex multiplying by 2 has H_0 = Z/2
    let z = CoefficientRing::Integers;
    let complex = ChainComplex::new(
        z,
        vec![1, 1],
        vec![Matrix::from_rows_i64(z, &[&[2]])],
    )
    .unwrap();
    let h0 = complex.homology(0).unwrap();
    assert_eq!(h0.free_rank, 0);
    assert_eq!(h0.torsion, vec![BigInt::from(2)]);
}

#[test]
fn euler_characteristics_agree_on_homology() {
    // alternating sums of homology ranks (not chain ranks, which truncation
    // skews) agree between (M, b) and (N(M), b)
    for (name, module) in all_modules(CoefficientRing::Rationals) {
        let cmp = normalized_vs_full_homology(&module).unwrap();
        let chi_full: i64 = cmp
            .degrees
            .iter()
            .enumerate()
            .map(|(n, (a, _))| (if n % 2 == 0 { 1 } else { -1 }) * a.free_rank as i64)
            .sum();
        let chi_normalized: i64 = cmp
            .degrees
            .iter()
            .enumerate()
            .map(|(n, (_, b))| (if n % 2 == 0 { 1 } else { -1 }) * b.free_rank as i64)
            .sum();
        assert_eq!(chi_full, chi_normalized, "{name}");
    }
}

#[test]
fn element_scalars_match_ring() {
    let module = build("dual-numbers", CoefficientRing::Mod(7));
    let e = module.element_from_i64(1, &[1, -1, 0, 3]);
    assert_eq!(e.coords[1], Scalar::Mod(6));
}

#[test]
fn relations_pass_vacuously_on_rank_zero() {
    let q = CoefficientRing::Rationals;
    let zero = TruncatedDuplicialModule::new(
        q,
        1,
        vec![0, 0],
        vec![vec![], vec![Matrix::zeros(q, 0, 0); 2]],
        vec![vec![Matrix::zeros(q, 0, 0); 2], vec![]],
        vec![Some(Matrix::zeros(q, 0, 0)), None],
        vec![None, None],
    )
    .unwrap();
    assert!(validate_relations(&zero).passed());
}

#[test]
fn composite_modulus_arithmetic_works_but_kernels_fail() {
    // matrix arithmetic and relation checking over Z/6 are fine; kernel
    // computations report the composite modulus
    let module = build("ground-ring", CoefficientRing::Mod(6));
    assert!(validate_relations(&module).passed());
    let m = Matrix::from_rows_i64(CoefficientRing::Mod(6), &[&[2, 4]]);
    match duplicial::linalg::kernel_basis(&m) {
        Err(Error::CompositeModulus { modulus: 6, .. }) => {}
        other => panic!("expected CompositeModulus, got {other:?}"),
    }
}
