use metric_lie::complex::AlmostComplexStructure;
use metric_lie::fidelity::{run_fidelity, FidelityOptions};
use metric_lie::generators::{random_basis_change, random_hermitian_j, random_lie_algebra, random_spd_metric};
use metric_lie::sampling;
use metric_lie::specfile::{Extras, SpecFile};
use metric_lie::{Geometry, InnerProduct, LieAlgebra, LiftedAlgebra, MatrixElement, Vector};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn setup(seed: u64, max_dim: usize) -> (ChaCha8Rng, Geometry) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alg = random_lie_algebra(&mut rng, max_dim);
    let g = random_spd_metric(&mut rng, alg.dim());
    let geom = Geometry::new(alg, g).unwrap();
    (rng, geom)
}

fn element(rng: &mut ChaCha8Rng, n: usize) -> MatrixElement {
    MatrixElement::from_slots(std::array::from_fn(|_| sampling::vector(rng, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn connection_is_torsion_free_and_metric(seed in any::<u64>()) {
        let (mut rng, geom) = setup(seed, 6);
        let n = geom.dim();
        for _ in 0..10 {
            let x = sampling::vector(&mut rng, n);
            let y = sampling::vector(&mut rng, n);
            let z = sampling::vector(&mut rng, n);
            let torsion = geom.nabla(&x, &y) - geom.nabla(&y, &x) - geom.bracket(&x, &y);
            let scale = 1.0 + geom.nabla(&x, &y).amax() + geom.bracket(&x, &y).amax();
            prop_assert!(torsion.amax() <= 1e-9 * scale);
            // left-invariant fields: X g(Y,Z) = 0
            let metric = geom.inner(&geom.nabla(&x, &y), &z) + geom.inner(&y, &geom.nabla(&x, &z));
            prop_assert!(metric.abs() <= 1e-9 * scale * (1.0 + geom.norm(&z) + geom.norm(&y)));
        }
    }

    #[test]
    fn curvature_symmetries(seed in any::<u64>()) {
        let (mut rng, geom) = setup(seed, 5);
        let n = geom.dim();
        let [x, y, z, w]: [Vector; 4] = std::array::from_fn(|_| sampling::vector(&mut rng, n));
        let r = |a: &Vector, b: &Vector, c: &Vector, d: &Vector| geom.curvature_4(a, b, c, d);
        let base = r(&x, &y, &z, &w);
        let scale = 1.0 + base.abs() + geom.curvature(&x, &y, &z).amax();
        prop_assert!((base + r(&y, &x, &z, &w)).abs() <= 1e-9 * scale);
        prop_assert!((base + r(&x, &y, &w, &z)).abs() <= 1e-9 * scale);
        prop_assert!((base - r(&z, &w, &x, &y)).abs() <= 1e-9 * scale);
        let bianchi = geom.curvature(&x, &y, &z) + geom.curvature(&y, &z, &x) + geom.curvature(&z, &x, &y);
        prop_assert!(bianchi.amax() <= 1e-9 * scale);
    }

    #[test]
    fn basis_change_keeps_jacobi(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = random_lie_algebra(&mut rng, 6);
        let p = random_basis_change(&mut rng, alg.dim());
        let changed = alg.change_basis(&p).unwrap();
        prop_assert!(changed.jacobi_defect() <= changed.jacobi_tolerance());
        prop_assert_eq!(changed.center().rank(), alg.center().rank());
        prop_assert_eq!(changed.lower_central_series().dims(), alg.lower_central_series().dims());
    }

    #[test]
    fn lift_is_a_slotwise_direct_sum(seed in any::<u64>()) {
        let (mut rng, geom) = setup(seed, 4);
        let n = geom.dim();
        let lift = LiftedAlgebra::new(geom);
        let flat = lift.to_geometry().unwrap();
        prop_assert_eq!(flat.dim(), 4 * n);
        prop_assert!(flat.alg().jacobi_defect() <= 1e-12 * (1.0 + flat.alg().max_constant().powi(2)));
        let a = element(&mut rng, n);
        let b = element(&mut rng, n);
        let direct = lift.connection(&a, &b);
        let computed = MatrixElement::from_flat(n, &flat.nabla(&a.to_flat(), &b.to_flat())).unwrap();
        prop_assert!((direct.clone() - computed).amax() <= 1e-10 * (1.0 + direct.amax()));
        prop_assert!((lift.inner(&a, &b) - flat.inner(&a.to_flat(), &b.to_flat())).abs() <= 1e-10 * (1.0 + lift.norm(&a) * lift.norm(&b)));
    }

    #[test]
    fn o_and_det_form_invariance(seed in any::<u64>()) {
        let (mut rng, geom) = setup(seed, 6);
        let n = geom.dim();
        let lift = LiftedAlgebra::new(geom);
        let a = element(&mut rng, n);
        let b = element(&mut rng, n);
        let o = lift.o_functional(&a);
        let scale = 1.0 + lift.norm(&a).powi(2);
        prop_assert!((o - lift.o_functional(&a.transpose())).abs() <= 1e-12 * scale);
        prop_assert!((o - lift.o_functional(&a.star())).abs() <= 1e-12 * scale);
        let d = lift.det_form(&a, &b);
        let dscale = 1.0 + (lift.norm(&a) * lift.norm(&b)).powi(2);
        for other in [lift.det_form(&b, &a), lift.det_form(&a.transpose(), &b.transpose()), lift.det_form(&a.star(), &b.star())] {
            prop_assert!((d - other).abs() <= 1e-12 * dscale);
        }
        prop_assert!((lift.inner(&a, &b) - lift.inner(&a.transpose(), &b.transpose())).abs() <= 1e-12 * scale * (1.0 + lift.norm(&b)));
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(a.star().star(), a);
    }

    #[test]
    fn hermitian_lift_preserves_o_and_inner(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 2 * rng.gen_range(1..=3);
        let g = random_spd_metric(&mut rng, n);
        let j = AlmostComplexStructure::new(&g, random_hermitian_j(&mut rng, &g).unwrap()).unwrap();
        let lift = LiftedAlgebra::lift(&LieAlgebra::abelian(n), &g).unwrap();
        let a = element(&mut rng, n);
        let b = element(&mut rng, n);
        let (ja, jb) = (j.lift(&a), j.lift(&b));
        let scale = 1.0 + lift.norm(&a) * lift.norm(&b) + lift.norm(&a).powi(2);
        prop_assert!((lift.o_functional(&ja) - lift.o_functional(&a)).abs() <= 1e-10 * scale);
        prop_assert!((lift.inner(&ja, &jb) - lift.inner(&a, &b)).abs() <= 1e-10 * scale);
        prop_assert!(lift.inner(&ja, &a).abs() <= 1e-10 * scale);
    }

    #[test]
    fn description_file_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = random_lie_algebra(&mut rng, 6);
        let g = random_spd_metric(&mut rng, alg.dim());
        let text = SpecFile::from_parts("random", &alg, &g, &Extras::default()).to_json();
        let loaded = SpecFile::parse(&text).unwrap().load().unwrap();
        prop_assert_eq!(loaded.alg.dim(), alg.dim());
        prop_assert_eq!(&loaded.metric, &g);
        prop_assert_eq!(loaded.alg.nonzero_constants(), alg.nonzero_constants());
        let again = SpecFile::from_parts(&loaded.name, &loaded.alg, &loaded.metric, &loaded.extras).to_json();
        prop_assert_eq!(again, text);
    }
}

#[test]
fn identity_reports_are_deterministic() {
    let alg = LieAlgebra::from_brackets(3, None, [(0, 1, 2, 1.0)]).unwrap();
    let text = SpecFile::from_parts("h3", &alg, &InnerProduct::identity(3), &Extras::default()).to_json();
    let loaded = SpecFile::parse(&text).unwrap().load().unwrap();
    let opts = FidelityOptions { trials: 50, seed: 9, ..FidelityOptions::default() };
    let a = run_fidelity(&loaded, &opts).unwrap().to_json();
    let b = run_fidelity(&loaded, &opts).unwrap().to_json();
    assert_eq!(a, b);
    let other = run_fidelity(&loaded, &FidelityOptions { seed: 10, ..opts }).unwrap().to_json();
    assert_ne!(a, other);
}
