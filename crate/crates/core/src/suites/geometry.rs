//! Connection, curvature and submanifold identities on the base algebra, plus
//! consistency of the lift with its own Levi-Civita connection.

use rand::Rng;

use super::{all_of, element, scalar, vector, Context, Vals};
use crate::generators::random_abelian_subalgebra;
use crate::geometry::{GaussOrientation, MeanCurvatureDivisor, SubmanifoldSplit};
use crate::lift::MatrixElement;
use crate::linalg::{self, Vector};
use crate::report::{Entry, Trial};
use crate::sampling;

pub fn entries(ctx: &Context) -> Vec<Entry<'_>> {
    let n = ctx.n();
    let geom = ctx.geom();
    let g = ctx.g();
    let rv = move |rng: &mut rand_chacha::ChaCha8Rng| sampling::vector(rng, n);
    let mut out = Vec::new();

    out.push(Entry::new("torsion_free", "∇_X Y - ∇_Y X = [X,Y]", move |rng, _| {
        let (x, y) = (rv(rng), rv(rng));
        let lhs = geom.nabla(&x, &y) - geom.nabla(&y, &x);
        all_of([vector(g, &lhs, &geom.bracket(&x, &y))], Vals::new().v("X", &x).v("Y", &y))
    }));

    out.push(Entry::new(
        "koszul_literal_torsion",
        "∇_X Y - ∇_Y X = [X,Y] for the Koszul formula with the sign of g([X,Y],Z) flipped",
        move |rng, _| {
            let (x, y) = (rv(rng), rv(rng));
            let lit = &ctx.literal;
            let lhs = lit.apply(&x, &y) - lit.apply(&y, &x);
            all_of([vector(g, &lhs, &geom.bracket(&x, &y))], Vals::new().v("X", &x).v("Y", &y))
        },
    ));

    out.push(Entry::new("metric_compatible", "g(∇_X Y, Z) + g(Y, ∇_X Z) = 0", move |rng, _| {
        let (x, y, z) = (rv(rng), rv(rng), rv(rng));
        let a = geom.inner(&geom.nabla(&x, &y), &z);
        let b = geom.inner(&y, &geom.nabla(&x, &z));
        all_of([scalar(a, -b)], Vals::new().v("X", &x).v("Y", &y).v("Z", &z))
    }));

    out.push(Entry::new("curvature_antisymmetric", "R(X,Y)Z = -R(Y,X)Z", move |rng, _| {
        let (x, y, z) = (rv(rng), rv(rng), rv(rng));
        let a = geom.curvature(&x, &y, &z);
        let b = -geom.curvature(&y, &x, &z);
        all_of([vector(g, &a, &b)], Vals::new().v("X", &x).v("Y", &y).v("Z", &z))
    }));

    out.push(Entry::new(
        "curvature_skew_last_pair",
        "g(R(X,Y)Z, W) = -g(R(X,Y)W, Z)",
        move |rng, _| {
            let (x, y, z, w) = (rv(rng), rv(rng), rv(rng), rv(rng));
            let a = geom.curvature_4(&x, &y, &z, &w);
            let b = -geom.curvature_4(&x, &y, &w, &z);
            all_of([scalar(a, b)], Vals::new().v("X", &x).v("Y", &y).v("Z", &z).v("W", &w))
        },
    ));

    out.push(Entry::new(
        "first_bianchi",
        "R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0",
        move |rng, _| {
            let (x, y, z) = (rv(rng), rv(rng), rv(rng));
            let terms = [geom.curvature(&x, &y, &z), geom.curvature(&y, &z, &x), geom.curvature(&z, &x, &y)];
            let sum = &terms[0] + &terms[1] + &terms[2];
            let scale: f64 = terms.iter().map(|t| geom.norm(t)).sum();
            Trial::checked(geom.norm(&sum), scale, Vals::new().v("X", &x).v("Y", &y).v("Z", &z))
        },
    ));

    out.push(Entry::new(
        "curvature_pair_symmetry",
        "g(R(X,Y)Z, W) = g(R(Z,W)X, Y)",
        move |rng, _| {
            let (x, y, z, w) = (rv(rng), rv(rng), rv(rng), rv(rng));
            let a = geom.curvature_4(&x, &y, &z, &w);
            let b = geom.curvature_4(&z, &w, &x, &y);
            all_of([scalar(a, b)], Vals::new().v("X", &x).v("Y", &y).v("Z", &z).v("W", &w))
        },
    ));

    out.push(Entry::new(
        "sectional_plane_invariance",
        "K(X,Y) = K(aX+bY, cX+dY) for ad - bc ≠ 0",
        move |rng, _| {
            let (x, y) = (rv(rng), rv(rng));
            let (a, b, c, d): (f64, f64, f64, f64) = loop {
                let m: (f64, f64, f64, f64) = (rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
                if (m.0 * m.3 - m.1 * m.2).abs() >= 0.1 {
                    break m;
                }
            };
            let (u, v) = (&x * a + &y * b, &x * c + &y * d);
            match (geom.sectional(&x, &y), geom.sectional(&u, &v)) {
                (Ok(k1), Ok(k2)) => all_of([scalar(k1, k2)], Vals::new().v("X", &x).v("Y", &y).v("U", &u).v("V", &v)),
                _ => Trial::Vacuous,
            }
        },
    ));

    match &ctx.dec_split {
        Some(split) => {
            let tangent = split.tangent_orthonormal();
            let normal = split.normal_orthonormal();
            out.push(Entry::new(
                "second_fundamental_form_symmetric",
                "h(X,Y) = h(Y,X) for X, Y tangent to a subalgebra",
                move |rng, _| {
                    let x = sampling::in_span(rng, n, tangent);
                    let y = sampling::in_span(rng, n, tangent);
                    match (geom.second_fundamental_form(split, &x, &y), geom.second_fundamental_form(split, &y, &x)) {
                        (Ok(a), Ok(b)) => all_of([vector(g, &a, &b)], Vals::new().v("X", &x).v("Y", &y)),
                        _ => Trial::Vacuous,
                    }
                },
            ));
            out.push(Entry::new(
                "weingarten_duality",
                "g(A_ξ X, Y) = g(h(X,Y), ξ)",
                move |rng, _| {
                    let Some(xi) = sampling::nonzero_in(rng, g, normal) else {
                        return Trial::Vacuous;
                    };
                    let x = sampling::in_span(rng, n, tangent);
                    match geom.weingarten_duality_residual(split, &xi, &x) {
                        Ok(r) => Trial::checked(r, geom.norm(&x) * geom.norm(&xi) * (1.0 + ctx.alg().max_constant()), Vals::new().v("X", &x).v("xi", &xi)),
                        Err(_) => Trial::Vacuous,
                    }
                },
            ));
            out.push(Entry::new(
                "mean_curvature_trace",
                "H = (1/k) Σ h(f_i, f_i) for any orthonormal frame f_1..f_k of the subalgebra",
                move |rng, _| {
                    let k = tangent.len();
                    let raw: Vec<Vector> = (0..k).map(|_| sampling::in_span(rng, n, tangent)).collect();
                    let frame = g.orthonormalize(&raw);
                    if frame.len() < k {
                        return Trial::Vacuous;
                    }
                    let mut trace = Vector::zeros(n);
                    for f in &frame {
                        trace += split.normal_part(g, &geom.nabla(f, f));
                    }
                    trace /= k as f64;
                    let h = geom.mean_curvature(split, MeanCurvatureDivisor::Submanifold);
                    let mut vals = Vals::new();
                    for (i, f) in frame.iter().enumerate() {
                        vals = vals.v(&format!("f{}", i + 1), f);
                    }
                    all_of([vector(g, &trace, &h)], vals)
                },
            ));
        }
        None => {
            let reason = "no proper subalgebra to split along";
            out.push(Entry::inapplicable("second_fundamental_form_symmetric", "h(X,Y) = h(Y,X) for X, Y tangent to a subalgebra", reason));
            out.push(Entry::inapplicable("weingarten_duality", "g(A_ξ X, Y) = g(h(X,Y), ξ)", reason));
            out.push(Entry::inapplicable(
                "mean_curvature_trace",
                "H = (1/k) Σ h(f_i, f_i) for any orthonormal frame f_1..f_k of the subalgebra",
                reason,
            ));
        }
    }

    out.push(Entry::new(
        "symmetric_part_literal",
        "∇_X Y + ∇_Y X = 2h(X,Y) for X, Y in the complement of the center",
        move |rng, t| {
            let Ok(split) = SubmanifoldSplit::center_complement(geom) else {
                return Trial::Vacuous;
            };
            let perp = split.tangent_orthonormal();
            if perp.is_empty() {
                return Trial::Vacuous;
            }
            let (x, y) = if t == 0 && n >= 2 {
                (split.tangent_part(g, &linalg::unit(n, 0)), split.tangent_part(g, &linalg::unit(n, 1)))
            } else {
                (sampling::in_span(rng, n, perp), sampling::in_span(rng, n, perp))
            };
            match geom.symmetric_part_residual(&split, &x, &y) {
                Ok(r) => {
                    let scale = geom.norm(&geom.nabla(&x, &y)) + geom.norm(&geom.nabla(&y, &x));
                    Trial::checked(r, scale, Vals::new().v("X", &x).v("Y", &y))
                }
                Err(_) => Trial::Vacuous,
            }
        },
    ));

    for (id, anchor, orientation) in [
        (
            "gauss_equation",
            "g(R(X,Y)Z,W) = g(R'(X,Y)Z,W) + g(h(X,Z),h(Y,W)) - g(h(X,W),h(Y,Z)) with R' intrinsic, on abelian subalgebras",
            GaussOrientation::AmbientEqualsIntrinsicPlusForm,
        ),
        (
            "gauss_equation_swapped",
            "g(R'(X,Y)Z,W) = g(R(X,Y)Z,W) + g(h(X,Z),h(Y,W)) - g(h(X,W),h(Y,Z)) with R' intrinsic, on abelian subalgebras",
            GaussOrientation::IntrinsicEqualsAmbientPlusForm,
        ),
    ] {
        out.push(Entry::new(id, anchor, move |rng, _| {
            let m = random_abelian_subalgebra(rng, ctx.alg(), 2);
            if m.rank() < 2 {
                return Trial::Vacuous;
            }
            let Ok(split) = SubmanifoldSplit::for_geometry(geom, m) else {
                return Trial::Vacuous;
            };
            let tb = split.tangent_orthonormal();
            let v: Vec<Vector> = (0..4).map(|_| sampling::in_span(rng, n, tb)).collect();
            let (x, y, z, w) = (&v[0], &v[1], &v[2], &v[3]);
            let (Ok(r), Ok(intrinsic)) = (
                geom.gauss_residual(&split, x, y, z, w, orientation),
                geom.intrinsic_curvature_4(&split, x, y, z, w),
            ) else {
                return Trial::Vacuous;
            };
            let scale = geom.curvature_4(x, y, z, w).abs() + intrinsic.abs();
            Trial::checked(r, scale, Vals::new().v("X", x).v("Y", y).v("Z", z).v("W", w))
        }));
    }

    out.push(
        Entry::new(
            "lift_koszul_consistency",
            "Levi-Civita connection of the 4n-dimensional lift = slot-wise connection",
            move |_, _| {
                let lg = &ctx.lift_geometry;
                let dim = lg.dim();
                let mut parts = Vec::with_capacity(dim * dim);
                let mut witness = (0, 0, 0.0_f64);
                for i in 0..dim {
                    for j in 0..dim {
                        let (ei, ej) = (linalg::unit(dim, i), linalg::unit(dim, j));
                        let direct = lg.nabla(&ei, &ej);
                        let a = MatrixElement::from_flat(n, &ei).expect("flat size");
                        let b = MatrixElement::from_flat(n, &ej).expect("flat size");
                        let slotwise = ctx.lift.connection(&a, &b).to_flat();
                        let d = (&direct - &slotwise).amax();
                        if d > witness.2 {
                            witness = (i, j, d);
                        }
                        parts.push((d, direct.amax() + slotwise.amax()));
                    }
                }
                let vals = Vals::new()
                    .v("E_i", &linalg::unit(dim, witness.0))
                    .v("E_j", &linalg::unit(dim, witness.1));
                all_of(parts, vals)
            },
        )
        .with_trials(1),
    );

    out.push(Entry::new(
        "lift_curvature_slotwise",
        "R̄(A,B)C = [[R(X,V)F, R(W,K)E], [R(Z,N)P, R(Y,M)S]]",
        move |rng, _| {
            let lg = &ctx.lift_geometry;
            let [a, b, c] = [0, 1, 2].map(|_| random_element(rng, n));
            let direct = lg.curvature(&a.to_flat(), &b.to_flat(), &c.to_flat());
            let direct = MatrixElement::from_flat(n, &direct).expect("flat size");
            let slotwise = ctx.lift.curvature(&a, &b, &c);
            all_of([element(&ctx.lift, &direct, &slotwise)], Vals::new().m("A", &a).m("B", &b).m("C", &c))
        },
    ));

    out.push(Entry::new(
        "lift_curvature_display",
        "R̄(A,B)C = [[R(X,V)F, R(W,K)F], [R(Z,N)P, R(Y,M)S]] with F in both top slots",
        move |rng, _| {
            let [a, b, c] = [0, 1, 2].map(|_| random_element(rng, n));
            let display = MatrixElement::new(
                geom.curvature(&a.x11, &b.x11, &c.x11),
                geom.curvature(&a.x12, &b.x12, &c.x11),
                geom.curvature(&a.x21, &b.x21, &c.x21),
                geom.curvature(&a.x22, &b.x22, &c.x22),
            );
            let actual = ctx.lift.curvature(&a, &b, &c);
            all_of([element(&ctx.lift, &display, &actual)], Vals::new().m("A", &a).m("B", &b).m("C", &c))
        },
    ));

    out
}

pub(crate) fn random_element<R: Rng + ?Sized>(rng: &mut R, n: usize) -> MatrixElement {
    MatrixElement::from_slots(std::array::from_fn(|_| sampling::vector(rng, n)))
}
