//! Acceptance criteria 1-13. Each criterion prints one PASS/FAIL line; the
//! process exits nonzero if any criterion fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use metric_lie::complex::{slant_angle, AlmostComplexStructure};
use metric_lie::fidelity::{run_fidelity, FidelityOptions};
use metric_lie::generators::{
    random_abelian_subalgebra, random_hermitian_j, random_lie_algebra, random_spd_metric, random_subspace,
    random_two_step,
};
use metric_lie::geometry::{GaussOrientation, MeanCurvatureDivisor};
use metric_lie::linalg::unit;
use metric_lie::nilpotent::{gen_h_type, gen_heisenberg, is_h_type, CenterSplit, HTypePreset, HTypeStatus};
use metric_lie::report::{IdentityReport, Status};
use metric_lie::sampling;
use metric_lie::specfile::{load_algebra, Extras, Loaded};
use metric_lie::suites::Suite;
use metric_lie::{Geometry, InnerProduct, LieAlgebra, LiftedAlgebra, MatrixElement, SubmanifoldSplit, SubspaceBasis, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_metric-lie"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn h3() -> (LieAlgebra, InnerProduct) {
    gen_heisenberg(1).unwrap()
}

fn loaded(name: &str, alg: LieAlgebra, metric: InnerProduct, extras: Extras) -> Loaded {
    Loaded { name: name.into(), alg, metric, extras }
}

fn run(l: &Loaded, suite: Suite, trials: usize, seed: u64, tol: f64) -> IdentityReport {
    run_fidelity(l, &FidelityOptions { trials, seed, tol, suites: vec![suite] }).unwrap()
}

/// Every listed entry is PASS with every trial checked and residual within `tol`.
fn require_pass(report: &IdentityReport, ids: &[&str], tol: f64) -> Result<f64, String> {
    let mut worst = 0.0_f64;
    for id in ids {
        let e = report.entry(id).ok_or_else(|| format!("{}: no entry {id}", report.run.algebra))?;
        ensure(e.status == Status::Pass, || format!("{}: {id} is {}", report.run.algebra, e.status.label()))?;
        ensure(e.max_residual <= tol, || format!("{}: {id} residual {:.3e}", report.run.algebra, e.max_residual))?;
        worst = worst.max(e.max_residual);
    }
    Ok(worst)
}

/// Random algebras of dimension at most 6 with random SPD metrics.
fn corpus() -> Vec<Geometry> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..100)
        .map(|_| {
            let alg = random_lie_algebra(&mut rng, 6);
            let g = random_spd_metric(&mut rng, alg.dim());
            Geometry::new(alg, g).unwrap()
        })
        .collect()
}

fn c1_golden() -> Outcome {
    let start = Instant::now();
    let (alg, g) = h3();
    let geom = Geometry::new(alg, g).unwrap();
    let mut worst = 0.0_f64;
    for (i, j, want) in [(0, 1, -0.75), (0, 2, 0.25), (1, 2, 0.25)] {
        worst = worst.max((geom.sectional_basis(i, j).unwrap() - want).abs());
    }
    worst = worst.max((geom.nabla(&unit(3, 0), &unit(3, 1)) - unit(3, 2) * 0.5).amax());
    let t = start.elapsed();
    ensure(worst <= 1e-9, || format!("worst deviation {worst:.3e}"))?;
    ensure(t < Duration::from_secs(1), || format!("took {t:?}"))?;
    Ok(format!("max deviation {worst:.1e} in {t:?}"))
}

fn c2_connection(corpus: &[Geometry]) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut torsion, mut metric) = (0.0_f64, 0.0_f64);
    for geom in corpus {
        let n = geom.dim();
        for _ in 0..100 {
            let x = sampling::vector(&mut rng, n);
            let y = sampling::vector(&mut rng, n);
            let z = sampling::vector(&mut rng, n);
            let (nxy, nyx, b) = (geom.nabla(&x, &y), geom.nabla(&y, &x), geom.bracket(&x, &y));
            let t = (&nxy - &nyx - &b).amax() / (1.0 + nxy.amax() + nyx.amax() + b.amax());
            let (p, q) = (geom.inner(&nxy, &z), geom.inner(&y, &geom.nabla(&x, &z)));
            let m = (p + q).abs() / (1.0 + p.abs() + q.abs());
            torsion = torsion.max(t);
            metric = metric.max(m);
        }
    }
    let t = start.elapsed();
    ensure(torsion <= 1e-9 && metric <= 1e-9, || format!("torsion {torsion:.3e}, metric {metric:.3e}"))?;
    ensure(t < Duration::from_secs(10), || format!("took {t:?}"))?;
    Ok(format!("torsion {torsion:.1e}, metric {metric:.1e} over 100 algebras x 100 pairs in {t:?}"))
}

fn c3_curvature(corpus: &[Geometry]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0.0_f64;
    for geom in corpus {
        let n = geom.dim();
        for _ in 0..100 {
            let [x, y, z, w]: [Vector; 4] = std::array::from_fn(|_| sampling::vector(&mut rng, n));
            let r = |a: &Vector, b: &Vector, c: &Vector, d: &Vector| geom.curvature_4(a, b, c, d);
            let base = r(&x, &y, &z, &w);
            let others = [r(&y, &x, &z, &w), r(&x, &y, &w, &z), r(&z, &w, &x, &y)];
            let scale = 1.0 + base.abs() + others.iter().map(|v| v.abs()).fold(0.0, f64::max);
            worst = worst.max((base + others[0]).abs() / scale);
            worst = worst.max((base + others[1]).abs() / scale);
            worst = worst.max((base - others[2]).abs() / scale);
            let terms = [geom.curvature(&x, &y, &z), geom.curvature(&y, &z, &x), geom.curvature(&z, &x, &y)];
            let bscale = 1.0 + terms.iter().map(|v| v.amax()).fold(0.0, f64::max);
            worst = worst.max((&terms[0] + &terms[1] + &terms[2]).amax() / bscale);
        }
    }
    ensure(worst <= 1e-9, || format!("worst residual {worst:.3e}"))?;
    Ok(format!("worst residual {worst:.1e}"))
}

fn c4_lift() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut jacobi, mut conn) = (0.0_f64, 0.0_f64);
    for _ in 0..20 {
        let alg = random_lie_algebra(&mut rng, 6);
        let n = alg.dim();
        let g = random_spd_metric(&mut rng, n);
        let lift = LiftedAlgebra::lift(&alg, &g).unwrap();
        let flat = lift.to_geometry().unwrap();
        ensure(flat.dim() == 4 * n, || format!("lift of dim {n} has dim {}", flat.dim()))?;
        jacobi = jacobi.max(flat.alg().jacobi_defect());
        for a in 0..4 * n {
            for b in 0..4 * n {
                let (ea, eb) = (unit(4 * n, a), unit(4 * n, b));
                let direct = flat.nabla(&ea, &eb);
                let slotwise = lift.connection(
                    &MatrixElement::from_flat(n, &ea).unwrap(),
                    &MatrixElement::from_flat(n, &eb).unwrap(),
                );
                conn = conn.max((direct - slotwise.to_flat()).amax());
            }
        }
    }
    ensure(jacobi <= 1e-12, || format!("Jacobi defect {jacobi:.3e}"))?;
    ensure(conn <= 1e-10, || format!("connection mismatch {conn:.3e}"))?;
    Ok(format!("Jacobi {jacobi:.1e}, connection mismatch {conn:.1e} over 20 lifts"))
}

fn c5_matrix() -> Outcome {
    let ids = [
        "inner_self",
        "inner_transpose",
        "inner_transpose_equality",
        "orthogonal_transpose",
        "orthogonal_mixed_transpose",
        "offdiagonal_transpose_zero",
        "slotwise_orthogonal_implies_orthogonal",
        "o_transpose_star",
        "det_symmetric",
        "det_transpose_exchange",
        "det_star_exchange",
    ];
    let mut worst = 0.0_f64;
    for name in ["heisenberg3.json", "so3.json", "h3_plus_r.json"] {
        let l = load_algebra(fixture(name)).unwrap();
        let a = run(&l, Suite::Matrix, 1000, 5, 1e-10);
        worst = worst.max(require_pass(&a, &ids, 1e-10)?);
        for id in ids {
            let e = a.entry(id).unwrap();
            ensure(e.checked == 1000, || format!("{name}: {id} checked {} of 1000", e.checked))?;
        }
        let b = run(&l, Suite::Matrix, 1000, 5, 1e-10);
        ensure(a.to_json() == b.to_json(), || format!("{name}: rerun differs"))?;
    }
    Ok(format!("{} entries on 3 algebras, worst {worst:.1e}, reruns identical", ids.len()))
}

fn c6_recursion() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0_f64;
    let mut literal_seen = 0;
    for k in 0..10 {
        let alg = random_lie_algebra(&mut rng, 6);
        let g = random_spd_metric(&mut rng, alg.dim());
        let l = loaded(&format!("random{k}"), alg, g, Extras::default());
        let r = run(&l, Suite::Matrix, 1000, 6, 1e-9);
        worst = worst.max(require_pass(&r, &["connection_o_recursion"], 1e-9)?);
        let lit = r.entry("connection_o_recursion_literal").ok_or("no literal entry")?;
        ensure(lit.status != Status::Vacuous, || "literal entry vacuous".into())?;
        literal_seen += 1;
    }
    let h3 = load_algebra(fixture("heisenberg3.json")).unwrap();
    let r = run(&h3, Suite::Matrix, 1000, 6, 1e-9);
    worst = worst.max(require_pass(&r, &["connection_o_recursion"], 1e-9)?);
    let lit = r.entry("connection_o_recursion_literal").unwrap();
    Ok(format!(
        "standard convention worst {worst:.1e} on 11 algebras; literal sign reported separately ({} on H3, {literal_seen} random runs)",
        lit.status.label()
    ))
}

fn c7_hermitian() -> Outcome {
    let ids = ["j_lift_isometry", "j_lift_orthogonal", "j_lift_o_invariance"];
    let mut worst = require_pass(&run(&load_algebra(fixture("h3_plus_r.json")).unwrap(), Suite::Complex, 1000, 7, 1e-10), &ids, 1e-10)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut configs = 1;
    while configs < 6 {
        let alg = random_lie_algebra(&mut rng, 6);
        if alg.dim() % 2 != 0 {
            continue;
        }
        let g = random_spd_metric(&mut rng, alg.dim());
        let j = random_hermitian_j(&mut rng, &g).unwrap();
        let extras = Extras { complex_structure: Some(j), ..Extras::default() };
        let l = loaded("random_j", alg, g, extras);
        worst = worst.max(require_pass(&run(&l, Suite::Complex, 1000, 7, 1e-10), &ids, 1e-10)?);
        configs += 1;
    }
    Ok(format!("worst {worst:.1e} over {configs} (J, g) configurations"))
}

fn c8_h_type() -> Outcome {
    let verdict = |(alg, g): (LieAlgebra, InnerProduct)| {
        let geom = Geometry::new(alg, g).unwrap();
        is_h_type(&geom, &CenterSplit::of(&geom)).unwrap()
    };
    for m in 1..=3 {
        let v = verdict(gen_heisenberg(m).unwrap());
        ensure(v.status == HTypeStatus::Holds, || format!("heisenberg m={m}: {:?}", v.status))?;
    }
    let v = verdict(gen_h_type(&HTypePreset::Quaternion.maps()).unwrap());
    ensure(v.status == HTypeStatus::Holds, || format!("quaternionic preset: {:?}", v.status))?;
    let (alg, _) = h3();
    let v = verdict((alg, InnerProduct::diagonal(&[1.0, 1.0, 4.0]).unwrap()));
    ensure(v.status == HTypeStatus::Fails && v.defect > 0.0, || format!("scaled H3: {:?}", v.status))?;
    Ok(format!("holds for m = 1,2,3 and quaternionic; scaled H3 fails with defect {:.3}", v.defect))
}

fn c9_bracket_j() -> Outcome {
    let ids = ["bracket_j", "lifted_bracket_j", "anticommutator_entrywise"];
    let mut fixtures: Vec<Loaded> = (1..=3)
        .map(|m| {
            let (alg, g) = gen_heisenberg(m).unwrap();
            loaded(&format!("heisenberg{}", 2 * m + 1), alg, g, Extras::default())
        })
        .collect();
    for p in [HTypePreset::Complex, HTypePreset::Quaternion] {
        let (alg, g) = gen_h_type(&p.maps()).unwrap();
        fixtures.push(loaded("preset", alg, g, Extras::default()));
    }
    fixtures.push(load_algebra(fixture("quaternionic7.json")).unwrap());
    let mut worst = 0.0_f64;
    for l in &fixtures {
        let r = run(l, Suite::Nilpotent, 1000, 9, 1e-9);
        worst = worst.max(require_pass(&r, &ids, 1e-9)?);
    }
    Ok(format!("worst {worst:.1e} on {} H-type algebras", fixtures.len()))
}

fn c10_slant() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst = 0.0_f64;
    let mut configs = 0;
    while configs < 100 {
        let n = 2 * rng.gen_range(1..=4);
        let alg = random_lie_algebra(&mut rng, n);
        if alg.dim() != n {
            continue;
        }
        let g = random_spd_metric(&mut rng, n);
        let j = AlmostComplexStructure::new(&g, random_hermitian_j(&mut rng, &g).unwrap()).unwrap();
        let k = rng.gen_range(1..=n);
        let m = random_subspace(&mut rng, n, k);
        let lift = LiftedAlgebra::lift(&alg, &g).unwrap();
        let s = slant_angle(&lift, &j, &m, 50, &mut rng).unwrap();
        worst = worst.max(s.lifted_residual);
        configs += 1;
    }
    ensure(worst <= 1e-9, || format!("worst gap {worst:.3e}"))?;
    Ok(format!("worst lifted/base gap {worst:.1e} over {configs} configurations"))
}

fn c11_submanifold() -> Outcome {
    let (alg, g) = h3();
    let geom = Geometry::new(alg, g).unwrap();
    let split = SubmanifoldSplit::for_geometry(&geom, SubspaceBasis::coordinate(3, &[0, 2]).unwrap()).unwrap();
    let h = geom.mean_curvature(&split, MeanCurvatureDivisor::Submanifold).amax();
    ensure(h <= 1e-10, || format!("mean curvature {h:.3e}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst = 0.0_f64;
    let mut cases = 0;
    for k in 0..40u64 {
        let p = rng.gen_range(2..=4);
        let q = rng.gen_range(1..=p * (p - 1) / 2);
        let (alg, g) = random_two_step(p, q, 1000 + k).unwrap();
        let k = rng.gen_range(2..=3);
        let m = random_abelian_subalgebra(&mut rng, &alg, k);
        if m.rank() < 2 {
            continue;
        }
        let geom = Geometry::new(alg, g).unwrap();
        let split = SubmanifoldSplit::for_geometry(&geom, m).unwrap();
        for _ in 0..25 {
            let basis = split.tangent_orthonormal().to_vec();
            let [x, y, z, w]: [Vector; 4] = std::array::from_fn(|_| sampling::in_span(&mut rng, geom.dim(), &basis));
            let r = geom.gauss_residual(&split, &x, &y, &z, &w, GaussOrientation::AmbientEqualsIntrinsicPlusForm).unwrap();
            let scale = 1.0 + geom.curvature_4(&x, &y, &z, &w).abs();
            worst = worst.max(r / scale);
        }
        cases += 1;
    }
    ensure(cases >= 20, || format!("only {cases} subalgebras of rank >= 2"))?;
    ensure(worst <= 1e-9, || format!("Gauss residual {worst:.3e}"))?;
    Ok(format!("mean curvature {h:.1e}; Gauss residual {worst:.1e} on {cases} abelian subalgebras"))
}

fn verify_json(args: &[&str]) -> (Value, String, Duration) {
    let start = Instant::now();
    let out = bin().arg("verify").args(args).output().unwrap();
    let elapsed = start.elapsed();
    let text = String::from_utf8(out.stdout).unwrap();
    (serde_json::from_str(&text).unwrap(), text, elapsed)
}

fn c12_completeness() -> Outcome {
    let path = fixture("heisenberg3.json");
    let (report, _, elapsed) =
        verify_json(&[path.to_str().unwrap(), "--suite", "all", "--seed", "42", "--format", "json"]);
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    let entries = report["entries"].as_array().ok_or("no entries")?;
    let mut ids: Vec<&str> = entries.iter().map(|e| e["id"].as_str().unwrap()).collect();
    let total = ids.len();
    ids.sort_unstable();
    ids.dedup();
    ensure(ids.len() == total, || "duplicate entry ids".into())?;
    ensure(total >= 30, || format!("only {total} entries"))?;
    let expected = metric_lie::suites::Suite::ALL
        .iter()
        .map(|s| {
            let l = load_algebra(&path).unwrap();
            run(&l, *s, 1, 0, 1e-9).entries.len()
        })
        .sum::<usize>();
    ensure(total == expected, || format!("{total} entries, catalog has {expected}"))?;
    let by_id = |id: &str| entries.iter().find(|e| e["id"] == id).unwrap();
    for e in entries {
        let status = e["status"].as_str().unwrap();
        ensure(["PASS", "FAIL", "VACUOUS"].contains(&status), || format!("bad status {status}"))?;
        if status == "FAIL" {
            let cx = &e["counterexample"];
            ensure(cx["trial"].is_u64() && cx["values"].as_array().is_some_and(|v| !v.is_empty()), || {
                format!("{} has no replayable counterexample", e["id"])
            })?;
        }
    }
    ensure(by_id("parallel_diagonal_det_transpose")["status"] == "PASS", || "(A,Aᵗ) reading does not pass".into())?;
    let lit = by_id("symmetric_part_literal");
    let vals = &lit["counterexample"]["values"];
    ensure(
        lit["status"] == "FAIL"
            && vals[0]["coords"] == serde_json::json!([1.0, 0.0, 0.0])
            && vals[1]["coords"] == serde_json::json!([0.0, 1.0, 0.0]),
        || format!("literal symmetric part: {lit}"),
    )?;
    let k = by_id("k_contact");
    ensure(
        k["status"] == "FAIL" && (k["max_residual"].as_f64().unwrap() - 0.5).abs() <= 1e-9,
        || format!("k_contact: {k}"),
    )?;
    let count = |s: &str| entries.iter().filter(|e| e["status"] == s).count();
    Ok(format!(
        "{total} unique entries ({} PASS, {} FAIL, {} VACUOUS) in {elapsed:?}; known statuses hold",
        count("PASS"),
        count("FAIL"),
        count("VACUOUS")
    ))
}

fn c13_determinism() -> Outcome {
    let mut worst = String::new();
    for name in ["heisenberg3.json", "h3_plus_r.json"] {
        let path = fixture(name);
        let args = [path.to_str().unwrap(), "--seed", "42", "--trials", "200", "--format", "json"];
        let (_, a, _) = verify_json(&args);
        let (_, b, _) = verify_json(&args);
        ensure(a == b, || format!("{name}: reports differ"))?;
        worst = format!("{} bytes", a.len());
    }
    Ok(format!("byte-identical JSON on 2 fixtures (last report {worst})"))
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("H3 golden values", Box::new(c1_golden)),
        ("connection axioms", Box::new(|| c2_connection(&corpus))),
        ("curvature symmetries", Box::new(|| c3_curvature(&corpus))),
        ("lift soundness", Box::new(c4_lift)),
        ("matrix identity catalog", Box::new(c5_matrix)),
        ("connection recursion", Box::new(c6_recursion)),
        ("hermitian lift", Box::new(c7_hermitian)),
        ("Heisenberg type", Box::new(c8_h_type)),
        ("bracket and anticommutator identities", Box::new(c9_bracket_j)),
        ("slant equality", Box::new(c10_slant)),
        ("mean curvature and Gauss", Box::new(c11_submanifold)),
        ("report completeness", Box::new(c12_completeness)),
        ("determinism", Box::new(c13_determinism)),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
