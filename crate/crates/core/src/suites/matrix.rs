//! Identities of the 2x2 lift: inner product, transpose and star, the
//! O-functional, the determinant form, and the C1/C2/C3 families.
//!
//! Slots are named `A = [[X, W], [Z, Y]]` and `B = [[V, K], [N, M]]`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::geometry::random_element;
use super::{all_of, element, scalar, vector, worst, Context, Vals};
use crate::generators::centralizer;
use crate::lift::{LiftType, MatrixElement, TypeDecomposition};
use crate::linalg::Vector;
use crate::report::{Entry, Trial};
use crate::sampling;

/// Nonzero scalar in `±[0.2, 2]`.
fn signed<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let t = rng.gen_range(0.2..2.0);
    if rng.gen_bool(0.5) {
        t
    } else {
        -t
    }
}

pub fn entries(ctx: &Context) -> Vec<Entry<'_>> {
    let n = ctx.n();
    let g = ctx.g();
    let lift = &ctx.lift;
    let geom = ctx.geom();
    let full: &[Vector] = &ctx.full;
    let rv = move |rng: &mut ChaCha8Rng| sampling::vector(rng, n);
    let re = move |rng: &mut ChaCha8Rng| random_element(rng, n);
    let ip = move |a: &Vector, b: &Vector| g.inner(a, b);
    let sq = move |a: &Vector| g.norm_sq(a);
    let nm = move |a: &Vector| g.norm(a);
    let mut out = Vec::new();

    out.push(Entry::new("lift_jacobi", "[A,[B,C]] + [B,[C,A]] + [C,[A,B]] = 0", move |rng, _| {
        let [a, b, c] = [0, 1, 2].map(|_| re(rng));
        let terms = [
            lift.bracket(&a, &lift.bracket(&b, &c)),
            lift.bracket(&b, &lift.bracket(&c, &a)),
            lift.bracket(&c, &lift.bracket(&a, &b)),
        ];
        let sum = &(&terms[0] + &terms[1]) + &terms[2];
        let scale: f64 = terms.iter().map(|t| lift.norm(t)).sum();
        Trial::checked(lift.norm(&sum), scale, Vals::new().m("A", &a).m("B", &b).m("C", &c))
    }));

    out.push(Entry::new("inner_self", "⟨A,A⟩ = |X|² + |W|² + |Z|² + |Y|²", move |rng, _| {
        let a = re(rng);
        let rhs = sq(&a.x11) + sq(&a.x12) + sq(&a.x21) + sq(&a.x22);
        Trial::eq(lift.inner(&a, &a), rhs, Vals::new().m("A", &a))
    }));

    out.push(Entry::new("inner_transpose", "⟨A,Aᵗ⟩ = |X|² + |Y|² + 2g(W,Z)", move |rng, _| {
        let a = re(rng);
        let rhs = sq(&a.x11) + sq(&a.x22) + 2.0 * ip(&a.x12, &a.x21);
        Trial::eq(lift.inner(&a, &a.transpose()), rhs, Vals::new().m("A", &a))
    }));

    out.push(Entry::new(
        "inner_transpose_equality",
        "⟨A,A⟩ = ⟨A,Aᵗ⟩ iff 2g(W,Z) = |W|² + |Z|²",
        move |rng, t| {
            let mut a = re(rng);
            if t % 2 == 0 {
                a.x21 = a.x12.clone();
            }
            let gap = lift.inner(&a, &a) - lift.inner(&a, &a.transpose());
            let rhs = sq(&a.x12) + sq(&a.x21) - 2.0 * ip(&a.x12, &a.x21);
            all_of([scalar(gap, rhs)], Vals::new().m("A", &a))
        },
    ));

    out.push(Entry::new("orthogonal_transpose", "⟨A,B⟩ = 0 ⇒ ⟨Aᵗ,Bᵗ⟩ = 0", move |rng, _| {
        let (a, b) = orthogonal_pair(ctx, rng);
        let r = lift.inner(&a.transpose(), &b.transpose());
        Trial::checked(r, lift.norm(&a) * lift.norm(&b), Vals::new().m("A", &a).m("B", &b))
    }));

    out.push(Entry::new("orthogonal_mixed_transpose", "⟨A,B⟩ = 0 ⇒ ⟨A,Bᵗ⟩ = ⟨Aᵗ,B⟩", move |rng, _| {
        let (a, b) = orthogonal_pair(ctx, rng);
        Trial::eq(lift.inner(&a, &b.transpose()), lift.inner(&a.transpose(), &b), Vals::new().m("A", &a).m("B", &b))
    }));

    out.push(Entry::new(
        "offdiagonal_transpose_zero",
        "X = Y = 0 and g(W,Z) = 0 ⇒ ⟨A,Aᵗ⟩ = 0",
        move |rng, _| {
            let w = rv(rng);
            let z = sampling::orthogonalize(g, &rv(rng), std::slice::from_ref(&w));
            let zero = Vector::zeros(n);
            let a = MatrixElement::new(zero.clone(), w, z, zero);
            Trial::checked(lift.inner(&a, &a.transpose()), lift.inner(&a, &a), Vals::new().m("A", &a))
        },
    ));

    out.push(Entry::new(
        "orthogonal_implies_slotwise",
        "⟨A,B⟩ = 0 ⇒ every slot of A is orthogonal to the matching slot of B",
        move |rng, _| {
            let (a, b) = orthogonal_pair(ctx, rng);
            let parts = (0..4).map(|s| (ip(a.slot(s), b.slot(s)), nm(a.slot(s)) * nm(b.slot(s))));
            all_of(parts, Vals::new().m("A", &a).m("B", &b))
        },
    ));

    out.push(Entry::new(
        "slotwise_orthogonal_implies_orthogonal",
        "g(A_s, B_s) = 0 for every slot ⇒ ⟨A,B⟩ = 0",
        move |rng, _| {
            let a = re(rng);
            let b = MatrixElement::from_slots(std::array::from_fn(|s| {
                sampling::orthogonalize(g, &rv(rng), std::slice::from_ref(a.slot(s)))
            }));
            Trial::checked(lift.inner(&a, &b), lift.norm(&a) * lift.norm(&b), Vals::new().m("A", &a).m("B", &b))
        },
    ));

    out.push(Entry::new(
        "diagonal_inner_equality",
        "⟨diag(X,Y), B⟩ = ⟨A,B⟩ ⇒ g(W,K) = g(Z,M) = 0",
        move |rng, _| {
            let a = re(rng);
            let mut b = re(rng);
            let c = -ip(&a.x12, &b.x12);
            let Some(nn) = sampling::with_pairing(rng, g, full, &a.x21, c) else {
                return Trial::Vacuous;
            };
            b.x21 = nn;
            let d = MatrixElement::diagonal(&a.x11, &a.x22);
            let hyp = scalar(lift.inner(&d, &b), lift.inner(&a, &b));
            let parts = [
                hyp,
                (ip(&a.x12, &b.x12), nm(&a.x12) * nm(&b.x12)),
                (ip(&a.x21, &b.x22), nm(&a.x21) * nm(&b.x22)),
            ];
            all_of(parts, Vals::new().m("A", &a).m("B", &b))
        },
    ));

    out.push(Entry::new("o_transpose_star", "O(A) = O(Aᵗ) = O(A*)", move |rng, _| {
        let a = re(rng);
        let o = lift.o_functional(&a);
        all_of(
            [scalar(o, lift.o_functional(&a.transpose())), scalar(o, lift.o_functional(&a.star()))],
            Vals::new().m("A", &a),
        )
    }));

    out.push(Entry::new("det_symmetric", "(A,B) = (B,A)", move |rng, _| {
        let (a, b) = (re(rng), re(rng));
        Trial::eq(lift.det_form(&a, &b), lift.det_form(&b, &a), Vals::new().m("A", &a).m("B", &b))
    }));

    out.push(Entry::new("det_transpose_exchange", "(Aᵗ,B) = (A,Bᵗ)", move |rng, _| {
        let (a, b) = (re(rng), re(rng));
        Trial::eq(lift.det_form(&a.transpose(), &b), lift.det_form(&a, &b.transpose()), Vals::new().m("A", &a).m("B", &b))
    }));

    out.push(Entry::new("det_star_exchange", "(A*,B) = (A,B*)", move |rng, _| {
        let (a, b) = (re(rng), re(rng));
        Trial::eq(lift.det_form(&a.star(), &b), lift.det_form(&a, &b.star()), Vals::new().m("A", &a).m("B", &b))
    }));

    out.push(Entry::new("orthogonal_implies_det_zero", "⟨A,B⟩ = 0 ⇒ (A,B) = 0", move |rng, _| {
        let (a, b) = orthogonal_pair(ctx, rng);
        let scale = lift.inner(&a, &a) * lift.inner(&b, &b);
        Trial::checked(lift.det_form(&a, &b), scale, Vals::new().m("A", &a).m("B", &b))
    }));

    out.push(Entry::new(
        "det_zero_row_or_column",
        "a zero row or column in A ⇒ (A,B) = 0",
        move |rng, t| {
            let mut a = re(rng);
            let b = re(rng);
            // rows (11,12), (21,22); columns (11,21), (12,22)
            let pairs = [(0, 1), (2, 3), (0, 2), (1, 3)];
            let (p, q) = pairs[t % 4];
            *a.slot_mut(p) = Vector::zeros(n);
            *a.slot_mut(q) = Vector::zeros(n);
            let scale = lift.inner(&a, &a) * lift.inner(&b, &b);
            Trial::checked(lift.det_form(&a, &b), scale, Vals::new().m("A", &a).m("B", &b))
        },
    ));

    out.push(Entry::new(
        "diagonal_det_values",
        "A diagonal ⇒ (A,A) = (A,Aᵗ) = |X|²|Y|² and (A,A*) = g(X,Y)²",
        move |rng, _| {
            let a = MatrixElement::diagonal(&rv(rng), &rv(rng));
            let (x, y) = (&a.x11, &a.x22);
            let xy = sq(x) * sq(y);
            all_of(
                [
                    scalar(lift.det_form(&a, &a), xy),
                    scalar(lift.det_form(&a, &a.transpose()), xy),
                    scalar(lift.det_form(&a, &a.star()), ip(x, y).powi(2)),
                ],
                Vals::new().m("A", &a),
            )
        },
    ));

    out.push(Entry::new(
        "diagonal_transpose_inner_nonzero",
        "A diagonal and nonzero ⇒ ⟨A,Aᵗ⟩ = |X|² + |Y|² > 0",
        move |rng, _| {
            let a = MatrixElement::diagonal(&rv(rng), &rv(rng));
            let v = lift.inner(&a, &a.transpose());
            let expected = sq(&a.x11) + sq(&a.x22);
            if expected == 0.0 {
                return Trial::Vacuous;
            }
            let positive = if v > 0.0 { 0.0 } else { 1.0 };
            all_of([scalar(v, expected), (positive, 0.0)], Vals::new().m("A", &a))
        },
    ));

    out.push(Entry::new(
        "diagonal_star_inner_iff_o_zero",
        "A diagonal ⇒ ⟨A,A*⟩ = 2O(A), so ⟨A,A*⟩ = 0 iff O(A) = 0",
        move |rng, t| {
            let x = rv(rng);
            let y = if t % 2 == 0 {
                sampling::orthogonalize(g, &rv(rng), std::slice::from_ref(&x))
            } else {
                rv(rng)
            };
            let a = MatrixElement::diagonal(&x, &y);
            Trial::eq(lift.inner(&a, &a.star()), 2.0 * lift.o_functional(&a), Vals::new().m("A", &a))
        },
    ));

    out.push(Entry::new(
        "transpose_inner_under_o_zero",
        "O(A) = 0 ⇒ ⟨A,Aᵗ⟩ = |X|² + 2g(X,Y) + |Y|²",
        move |rng, _| {
            let Some(a) = o_zero(ctx, rng) else { return Trial::Vacuous };
            let (x, y) = (&a.x11, &a.x22);
            let rhs = sq(x) + 2.0 * ip(x, y) + sq(y);
            all_of(
                [scalar(lift.o_functional(&a), 0.0), scalar(lift.inner(&a, &a.transpose()), rhs)],
                Vals::new().m("A", &a),
            )
        },
    ));

    out.push(Entry::new(
        "repeated_entry_equality",
        "A = [[X,V],[Y,Y]] with O(A) = 0 ⇒ X = V",
        move |rng, _| {
            let (x, y) = (rv(rng), rv(rng));
            let Some(v) = sampling::with_pairing(rng, g, full, &y, ip(&x, &y)) else {
                return Trial::Vacuous;
            };
            let a = MatrixElement::new(x.clone(), v.clone(), y.clone(), y.clone());
            let o = lift.o_functional(&a);
            all_of([scalar(o, 0.0), vector(g, &x, &v)], Vals::new().m("A", &a))
        },
    ));

    let recursion_anchor = "O([[∇_X Y, W],[V, Z]]) = O([[½[X,Y], W],[V, Z]]) + O([[½[Z,X], X],[½[Y,Z], Y]])";
    for (id, anchor, literal) in [
        ("connection_o_recursion", recursion_anchor, false),
        ("connection_o_recursion_literal", "same recursion with ∇ from the Koszul formula with the sign of g([X,Y],Z) flipped", true),
    ] {
        out.push(Entry::new(id, anchor, move |rng, _| {
            let [x, y, z, v, w] = [0, 1, 2, 3, 4].map(|_| rv(rng));
            let nabla = if literal { ctx.literal.apply(&x, &y) } else { geom.nabla(&x, &y) };
            let (lhs, rhs) = recursion(ctx, &nabla, &x, &y, &z, &v, &w);
            all_of([scalar(lhs, rhs)], Vals::new().v("X", &x).v("Y", &y).v("Z", &z).v("V", &v).v("W", &w))
        }));
    }

    out.push(Entry::new(
        "connection_o_commuting",
        "[X,Z] = [Y,Z] = 0 ⇒ O([[∇_X Y, W],[V, Z]]) = O([[½[X,Y], W],[V, Z]])",
        move |rng, _| {
            let z = rv(rng);
            let cz = centralizer(ctx.alg(), std::slice::from_ref(&z));
            let x = sampling::in_span(rng, n, &cz);
            let y = sampling::in_span(rng, n, &cz);
            let (v, w) = (rv(rng), rv(rng));
            let lhs = MatrixElement::new(geom.nabla(&x, &y), w.clone(), v.clone(), z.clone());
            let rhs = MatrixElement::new(geom.bracket(&x, &y) * 0.5, w.clone(), v.clone(), z.clone());
            let hyp = [geom.bracket(&x, &z), geom.bracket(&y, &z)];
            let mut parts = vec![scalar(lift.o_functional(&lhs), lift.o_functional(&rhs))];
            parts.extend(hyp.iter().map(|b| (geom.norm(b), nm(&z) * (nm(&x) + nm(&y)))));
            all_of(parts, Vals::new().v("X", &x).v("Y", &y).v("Z", &z).v("V", &v).v("W", &w))
        },
    ));

    out.push(Entry::new(
        "connection_o_bracket_free",
        "[X,Y] = 0 and g(V,W) = 0 ⇒ O([[∇_X Y, W],[V, Z]]) = O([[½[Z,X], X],[½[Y,Z], Y]])",
        move |rng, _| {
            let x = rv(rng);
            let cx = centralizer(ctx.alg(), std::slice::from_ref(&x));
            let y = sampling::in_span(rng, n, &cx);
            let (z, w) = (rv(rng), rv(rng));
            let v = sampling::orthogonalize(g, &rv(rng), std::slice::from_ref(&w));
            let lhs = MatrixElement::new(geom.nabla(&x, &y), w.clone(), v.clone(), z.clone());
            let rhs = MatrixElement::new(geom.bracket(&z, &x) * 0.5, x.clone(), geom.bracket(&y, &z) * 0.5, y.clone());
            all_of(
                [
                    scalar(lift.o_functional(&lhs), lift.o_functional(&rhs)),
                    (geom.norm(&geom.bracket(&x, &y)), nm(&x) * nm(&y)),
                ],
                Vals::new().v("X", &x).v("Y", &y).v("Z", &z).v("V", &v).v("W", &w),
            )
        },
    ));

    out.push(Entry::new("star_inner", "⟨A,A*⟩ = 2g(X,Y) - |W|² - |Z|²", move |rng, _| {
        let a = re(rng);
        let rhs = 2.0 * ip(&a.x11, &a.x22) - sq(&a.x12) - sq(&a.x21);
        Trial::eq(lift.inner(&a, &a.star()), rhs, Vals::new().m("A", &a))
    }));

    out.push(Entry::new(
        "star_orthogonal_forces_equality",
        "O(A) = 0 and ⟨A,A*⟩ = 0 ⇒ Z = W",
        move |rng, _| {
            let Some(a) = star_variety(ctx, rng) else { return Trial::Vacuous };
            all_of(
                [
                    scalar(lift.o_functional(&a), 0.0),
                    scalar(lift.inner(&a, &a.star()), 0.0),
                    vector(g, &a.x21, &a.x12),
                ],
                Vals::new().m("A", &a),
            )
        },
    ));

    let symmetric = move |rng: &mut ChaCha8Rng| {
        let mut a = re(rng);
        a.x21 = a.x12.clone();
        a
    };
    out.push(Entry::new("symmetric_transpose_of_star", "A = Aᵗ ⇒ ⟨Aᵗ,(A*)ᵗ⟩ = 2O(A)", move |rng, _| {
        let a = symmetric(rng);
        Trial::eq(lift.inner(&a.transpose(), &a.star().transpose()), 2.0 * lift.o_functional(&a), Vals::new().m("A", &a))
    }));
    out.push(Entry::new("symmetric_star_of_transpose", "A = Aᵗ ⇒ ⟨Aᵗ,(Aᵗ)*⟩ = ⟨A,A*⟩", move |rng, _| {
        let a = symmetric(rng);
        Trial::eq(lift.inner(&a.transpose(), &a.transpose().star()), lift.inner(&a, &a.star()), Vals::new().m("A", &a))
    }));
    out.push(Entry::new("symmetric_norms", "A = Aᵗ ⇒ ⟨A,A⟩ = ⟨A*,A*⟩ = ⟨Aᵗ,Aᵗ⟩", move |rng, _| {
        let a = symmetric(rng);
        let (s, t) = (a.star(), a.transpose());
        let aa = lift.inner(&a, &a);
        all_of([scalar(aa, lift.inner(&s, &s)), scalar(aa, lift.inner(&t, &t))], Vals::new().m("A", &a))
    }));

    out.push(Entry::new(
        "parallel_diagonal_det_transpose",
        "O(A) = 0 and (A,Aᵗ) = 0 ⇒ X and Y are parallel",
        move |rng, _| {
            let Some(a) = parallel_variety(ctx, rng) else { return Trial::Vacuous };
            let (x, y) = (&a.x11, &a.x22);
            let xy = nm(x) * nm(y);
            all_of(
                [
                    scalar(lift.o_functional(&a), 0.0),
                    (lift.det_form(&a, &a.transpose()), xy * xy),
                    (xy - ip(x, y).abs(), xy),
                ],
                Vals::new().m("A", &a),
            )
        },
    ));

    out.push(Entry::new(
        "parallel_diagonal_det",
        "O(A) = 0 and (A,A) = 0 ⇒ X and Y are parallel",
        move |rng, _| {
            let (x, y, w) = (rv(rng), rv(rng), rv(rng));
            let (nx, ny, nw) = (nm(&x), nm(&y), nm(&w));
            if nx * ny * nw < 1e-6 {
                return Trial::Vacuous;
            }
            let Some(z) = sampling::with_pairing_and_norm(rng, g, full, &w, ip(&x, &y), nx * ny / nw) else {
                return Trial::Vacuous;
            };
            let a = MatrixElement::new(x.clone(), w, z, y.clone());
            let hyp = worst([
                scalar(lift.o_functional(&a), 0.0),
                (lift.det_form(&a, &a), (nx * ny).powi(2)),
            ]);
            if hyp > 1e-9 {
                return Trial::Vacuous;
            }
            all_of([(nx * ny - ip(&x, &y).abs(), nx * ny)], Vals::new().m("A", &a))
        },
    ));

    let consequences: [(&'static str, &'static str, fn(&Context, &MatrixElement) -> (f64, f64)); 5] = [
        ("parallel_consequence_pairings", "O(A) = 0, (A,Aᵗ) = 0 ⇒ g(X,Y) ≠ 0 and g(Z,W) ≠ 0", |ctx, a| {
            let g = ctx.g();
            let holds = g.inner(&a.x11, &a.x22).abs() > 1e-12 && g.inner(&a.x21, &a.x12).abs() > 1e-12;
            (if holds { 0.0 } else { 1.0 }, 0.0)
        }),
        ("parallel_consequence_transpose_inner", "O(A) = 0, (A,Aᵗ) = 0 ⇒ ⟨A,Aᵗ⟩ = (|X| + |Y|)²", |ctx, a| {
            let g = ctx.g();
            scalar(ctx.lift.inner(a, &a.transpose()), (g.norm(&a.x11) + g.norm(&a.x22)).powi(2))
        }),
        ("parallel_consequence_star_inner", "O(A) = 0, (A,Aᵗ) = 0 ⇒ ⟨A,A*⟩ = 2|X||Y| - |W|² - |Z|²", |ctx, a| {
            let g = ctx.g();
            let rhs = 2.0 * g.norm(&a.x11) * g.norm(&a.x22) - g.norm_sq(&a.x12) - g.norm_sq(&a.x21);
            scalar(ctx.lift.inner(a, &a.star()), rhs)
        }),
        ("parallel_consequence_det_transpose", "O(A) = 0, (A,Aᵗ) = 0 ⇒ (A,Aᵗ) = 0", |ctx, a| {
            let g = ctx.g();
            (ctx.lift.det_form(a, &a.transpose()), g.norm_sq(&a.x11) * g.norm_sq(&a.x22))
        }),
        ("parallel_consequence_det_star", "O(A) = 0, (A,Aᵗ) = 0 ⇒ (A,A*) = |X|²|Y|² - |Z|²|W|²", |ctx, a| {
            let g = ctx.g();
            let rhs = g.norm_sq(&a.x11) * g.norm_sq(&a.x22) - g.norm_sq(&a.x21) * g.norm_sq(&a.x12);
            scalar(ctx.lift.det_form(a, &a.star()), rhs)
        }),
    ];
    for (id, anchor, check) in consequences {
        out.push(Entry::new(id, anchor, move |rng, _| {
            let Some(a) = parallel_variety(ctx, rng) else { return Trial::Vacuous };
            all_of([check(ctx, &a)], Vals::new().m("A", &a))
        }));
    }

    out.push(Entry::new(
        "star_conditions_force_equality",
        "⟨A,A*⟩ = 0, (A,A*) = 0 and O(A) = 0 ⇒ W = Z",
        move |rng, _| {
            let Some(a) = star_variety(ctx, rng) else { return Trial::Vacuous };
            let s = a.star();
            let (w, z) = (&a.x12, &a.x21);
            all_of(
                [
                    scalar(lift.inner(&a, &s), 0.0),
                    (lift.det_form(&a, &s), sq(w) * sq(z)),
                    scalar(lift.o_functional(&a), 0.0),
                    vector(g, w, z),
                ],
                Vals::new().m("A", &a),
            )
        },
    ));

    out.push(Entry::new(
        "norm_product_rearranged",
        "(A,A) = (B,B), O(A) = O(B) = 0 ⇒ |X|²|Y|² - |V|²|S|² = |Z|²|W|² - |N|²|M|² with B = [[V,M],[N,S]]",
        move |rng, _| {
            let Some((a, b)) = equal_det_pair(ctx, rng) else { return Trial::Vacuous };
            let lhs = sq(&a.x11) * sq(&a.x22) - sq(&b.x11) * sq(&b.x22);
            let rhs = sq(&a.x21) * sq(&a.x12) - sq(&b.x21) * sq(&b.x12);
            all_of([scalar(lhs, rhs)], Vals::new().m("A", &a).m("B", &b))
        },
    ));

    out.push(Entry::new(
        "o_prime_equal",
        "(A,A) = (B,B), O(A) = O(B) = 0 ⇒ O(A') = O(B') with A' = [[X,S],[V,Y]], B' = [[Z,M],[N,W]]",
        move |rng, _| {
            let Some((a, b)) = equal_det_pair(ctx, rng) else { return Trial::Vacuous };
            let (ap, bp) = primes(&a, &b);
            all_of([scalar(lift.o_functional(&ap), lift.o_functional(&bp))], Vals::new().m("A", &a).m("B", &b))
        },
    ));

    out.push(Entry::new(
        "o_prime_equals_norm_difference",
        "(A,A) = (B,B), O(A) = O(B) = 0 ⇒ O(A') = |X|²|Y|² - |V|²|S|²",
        move |rng, _| {
            let Some((a, b)) = equal_det_pair(ctx, rng) else { return Trial::Vacuous };
            let (ap, _) = primes(&a, &b);
            let rhs = sq(&a.x11) * sq(&a.x22) - sq(&b.x11) * sq(&b.x22);
            all_of([scalar(lift.o_functional(&ap), rhs)], Vals::new().m("A", &a).m("B", &b))
        },
    ));

    let abc: [(&'static str, &'static str, fn(&Context, &[MatrixElement; 3]) -> (f64, f64)); 3] = [
        ("abc_inner_transpose", "⟨A₂,A₃*⟩ = 0, O(A₂) = 0 ⇒ ⟨A₂,A₃⟩ = ⟨A₂,A₃ᵗ⟩", |ctx, [_, a2, a3]| {
            scalar(ctx.lift.inner(a2, a3), ctx.lift.inner(a2, &a3.transpose()))
        }),
        ("abc_star_inner", "⟨A₂,A₃*⟩ = 0, O(A₂) = 0 ⇒ ⟨A₁,A₁*⟩ = ⟨A₃,A₃*⟩", |ctx, [a1, _, a3]| {
            scalar(ctx.lift.inner(a1, &a1.star()), ctx.lift.inner(a3, &a3.star()))
        }),
        ("abc_transpose_inner", "⟨A₂,A₃*⟩ = 0, O(A₂) = 0 ⇒ ⟨A₁,A₁ᵗ⟩ = ⟨A₃,A₃ᵗ⟩", |ctx, [a1, _, a3]| {
            scalar(ctx.lift.inner(a1, &a1.transpose()), ctx.lift.inner(a3, &a3.transpose()))
        }),
    ];
    for (id, anchor, check) in abc {
        let anchor_full = anchor;
        match &ctx.dec {
            Some(_) => out.push(Entry::new(id, anchor_full, move |rng, _| {
                let Some(triple) = abc_triple(ctx, rng) else { return Trial::Vacuous };
                let [_, a2, a3] = &triple;
                let hyp = [scalar(lift.inner(a2, &a3.star()), 0.0), scalar(lift.o_functional(a2), 0.0)];
                let mut parts = hyp.to_vec();
                parts.push(check(ctx, &triple));
                all_of(parts, Vals::new().m("A1_", &triple[0]).m("A2_", a2).m("A3_", a3))
            })),
            None => out.push(Entry::inapplicable(id, anchor_full, "no proper subalgebra to split along")),
        }
    }

    let typed = |id: &'static str, anchor: &'static str, f: fn(&Context, &mut ChaCha8Rng, usize) -> Trial| match &ctx.dec {
        Some(_) => Entry::new(id, anchor, move |rng, t| f(ctx, rng, t)),
        None => Entry::inapplicable(id, anchor, "no proper subalgebra to split along"),
    };

    out.push(typed(
        "c_type_images",
        "A ∈ C1 ⇒ Aᵗ, A* ∈ C3; A ∈ C2 ⇒ Aᵗ, A* ∈ C2; A ∈ C3 ⇒ Aᵗ, A* ∈ C1 (either orientation)",
        |ctx, rng, t| {
            let dec = ctx.dec.as_ref().expect("gated");
            let (from, to): (LiftType, &[LiftType]) = match t % 3 {
                0 => (LiftType::C1, &[LiftType::C3, LiftType::C3Swapped]),
                1 => (LiftType::C2, &[LiftType::C2]),
                _ => (LiftType::C3, &[LiftType::C1, LiftType::C1Swapped]),
            };
            let a = typed_element(ctx, rng, from);
            let ok = |b: &MatrixElement| to.iter().any(|&k| ctx.lift.belongs_to(b, dec, k));
            Trial::claim(ok(&a.transpose()) && ok(&a.star()), Vals::new().m("A", &a))
        },
    ));

    out.push(typed("c_type_cross", "C1 and C3 consist of cross elements: g(X,Y) = g(Z,W) = 0", |ctx, rng, t| {
        let kind = if t % 2 == 0 { LiftType::C1 } else { LiftType::C3 };
        let a = typed_element(ctx, rng, kind);
        cross_residual(ctx, &a, Vals::new().m("A", &a))
    }));

    out.push(Entry::new("cross_transpose_star", "A cross ⇒ Aᵗ and A* cross", move |rng, _| {
        let (x, w) = (rv(rng), rv(rng));
        let y = sampling::orthogonalize(g, &rv(rng), std::slice::from_ref(&x));
        let z = sampling::orthogonalize(g, &rv(rng), std::slice::from_ref(&w));
        let a = MatrixElement::new(x, w, z, y);
        let r1 = worst([cross_parts(ctx, &a.transpose()), cross_parts(ctx, &a.star())].concat());
        let r0 = worst(cross_parts(ctx, &a));
        Trial::checked(r0.max(r1), 0.0, Vals::new().m("A", &a))
    }));

    for (id, kind) in [("c1_closure", LiftType::C1), ("c2_closure", LiftType::C2), ("c3_closure", LiftType::C3)] {
        let anchor = match kind {
            LiftType::C1 => "A, B ∈ C1 ⇒ [A,B] ∈ C1",
            LiftType::C2 => "A, B ∈ C2 ⇒ [A,B] ∈ C2",
            _ => "A, B ∈ C3 ⇒ [A,B] ∈ C3",
        };
        match &ctx.dec {
            Some(dec) => out.push(Entry::new(id, anchor, move |rng, _| {
                let a = typed_element(ctx, rng, kind);
                let b = typed_element(ctx, rng, kind);
                let c = lift.bracket(&a, &b);
                // distance of each slot from its required subspace
                let parts = (0..4).map(|s| {
                    let v = c.slot(s);
                    let off = if slot_in_h(kind, s) { dec.n_part(g, v) } else { dec.h_part(g, v) };
                    (nm(&off), nm(a.slot(s)) * nm(b.slot(s)))
                });
                all_of(parts, Vals::new().m("A", &a).m("B", &b))
            })),
            None => out.push(Entry::inapplicable(id, anchor, "no proper subalgebra to split along")),
        }
    }

    out.push(Entry::new("diagonal_subalgebra", "[diag(X,Y), diag(Z,W)] is diagonal", move |rng, _| {
        let a = MatrixElement::diagonal(&rv(rng), &rv(rng));
        let b = MatrixElement::diagonal(&rv(rng), &rv(rng));
        let c = lift.bracket(&a, &b);
        all_of([(nm(&c.x12) + nm(&c.x21), lift.norm(&a) * lift.norm(&b))], Vals::new().m("A", &a).m("B", &b))
    }));

    match &ctx.dec_split {
        Some(split) => {
            let tangent = split.tangent_orthonormal();
            out.push(Entry::new(
                "lifted_h_transpose",
                "h̄(Aᵗ,Bᵗ) = h̄(A,B)ᵗ for A, B over a subalgebra",
                move |rng, _| {
                    let mk = |rng: &mut ChaCha8Rng| {
                        MatrixElement::from_slots(std::array::from_fn(|_| sampling::in_span(rng, n, tangent)))
                    };
                    let (a, b) = (mk(rng), mk(rng));
                    match (lift.lifted_h(split, &a.transpose(), &b.transpose()), lift.lifted_h(split, &a, &b)) {
                        (Ok(l), Ok(r)) => all_of([element(lift, &l, &r.transpose())], Vals::new().m("A", &a).m("B", &b)),
                        _ => Trial::Vacuous,
                    }
                },
            ));
        }
        None => out.push(Entry::inapplicable(
            "lifted_h_transpose",
            "h̄(Aᵗ,Bᵗ) = h̄(A,B)ᵗ for A, B over a subalgebra",
            "no proper subalgebra to split along",
        )),
    }

    out.push(typed(
        "decomposition_parts",
        "A = h̄-part + n̄-part + c̄-part, mutually orthogonal, each over h, n or mixed",
        |ctx, rng, t| {
            let dec = ctx.dec.as_ref().expect("gated");
            let (g, lift, n) = (ctx.g(), &ctx.lift, ctx.n());
            let a = match t % 3 {
                0 => MatrixElement::from_slots(std::array::from_fn(|_| sampling::in_span(rng, n, dec.h_orthonormal()))),
                1 => MatrixElement::from_slots(std::array::from_fn(|_| sampling::in_span(rng, n, dec.n_orthonormal()))),
                _ => random_element(rng, n),
            };
            let p = lift.decompose(&a, dec);
            let sum = &(&p.h + &p.n) + &p.c;
            let scale = lift.inner(&a, &a);
            let mut parts = vec![
                element(lift, &sum, &a),
                (lift.inner(&p.h, &p.n), scale),
                (lift.inner(&p.h, &p.c), scale),
                (lift.inner(&p.n, &p.c), scale),
            ];
            for s in 0..4 {
                parts.push((g.norm(&dec.n_part(g, p.h.slot(s))), scale));
                parts.push((g.norm(&dec.h_part(g, p.n.slot(s))), scale));
            }
            all_of(parts, Vals::new().m("A", &a))
        },
    ));

    out
}

/// Random `A, B` with `B` projected so that `⟨A,B⟩ = 0`.
fn orthogonal_pair(ctx: &Context, rng: &mut ChaCha8Rng) -> (MatrixElement, MatrixElement) {
    let lift = &ctx.lift;
    let a = random_element(rng, ctx.n());
    let b = random_element(rng, ctx.n());
    let aa = lift.inner(&a, &a);
    let b = if aa > 0.0 { &b - &(&a * (lift.inner(&a, &b) / aa)) } else { b };
    (a, b)
}

/// Random `A` with `O(A) = 0`, solving for `Z`.
fn o_zero(ctx: &Context, rng: &mut ChaCha8Rng) -> Option<MatrixElement> {
    let (g, n) = (ctx.g(), ctx.n());
    let (x, y, w) = (sampling::vector(rng, n), sampling::vector(rng, n), sampling::vector(rng, n));
    let z = sampling::with_pairing(rng, g, &ctx.full, &w, g.inner(&x, &y))?;
    Some(MatrixElement::new(x, w, z, y))
}

/// `O(A) = 0` and `⟨A,A*⟩ = 0` force `Z = W` and `g(X,Y) = |W|²`; samples that set.
fn star_variety(ctx: &Context, rng: &mut ChaCha8Rng) -> Option<MatrixElement> {
    let (g, n) = (ctx.g(), ctx.n());
    let (x, w) = (sampling::vector(rng, n), sampling::vector(rng, n));
    let y = sampling::with_pairing(rng, g, &ctx.full, &x, g.norm_sq(&w))?;
    Some(MatrixElement::new(x, w.clone(), w, y))
}

/// `O(A) = 0` and `(A,Aᵗ) = 0` force `g(X,Y)² = |X|²|Y|²`: `Y = tX` with `t`
/// of either sign, `Z` paired so that `g(W,Z) = g(X,Y)`.
fn parallel_variety(ctx: &Context, rng: &mut ChaCha8Rng) -> Option<MatrixElement> {
    let (g, n) = (ctx.g(), ctx.n());
    let x = sampling::nonzero_in(rng, g, &ctx.full)?;
    let y = &x * signed(rng);
    let w = sampling::nonzero_in(rng, g, &ctx.full)?;
    let z = sampling::with_pairing(rng, g, &ctx.full, &w, g.inner(&x, &y))?;
    let _ = n;
    Some(MatrixElement::new(x, w, z, y))
}

/// `A = [[X,W],[Z,Y]]`, `B = [[V,M],[N,S]]` with `O(A) = O(B) = 0` and
/// `(A,A) = (B,B)`, obtained by rescaling `V` and `N`.
fn equal_det_pair(ctx: &Context, rng: &mut ChaCha8Rng) -> Option<(MatrixElement, MatrixElement)> {
    let lift = &ctx.lift;
    for _ in 0..64 {
        let a = o_zero(ctx, rng)?;
        let b = o_zero(ctx, rng)?;
        let (da, db) = (lift.det_form(&a, &a), lift.det_form(&b, &b));
        if da * db <= 0.0 || db.abs() < 1e-6 {
            continue;
        }
        let t = (da / db).sqrt();
        let mut b = b;
        b.x11 *= t;
        b.x21 *= t;
        return Some((a, b));
    }
    None
}

/// `A' = [[X,S],[V,Y]]`, `B' = [[Z,M],[N,W]]`.
fn primes(a: &MatrixElement, b: &MatrixElement) -> (MatrixElement, MatrixElement) {
    (
        MatrixElement::new(a.x11.clone(), b.x22.clone(), b.x11.clone(), a.x22.clone()),
        MatrixElement::new(a.x21.clone(), b.x12.clone(), b.x21.clone(), a.x12.clone()),
    )
}

/// `A₁ = [[X,Y],[Z,W]]`, `A₂ = [[X,W],[Z,Y]]`, `A₃ = [[X,W],[Y,Z]]` with
/// `X, Y ∈ h`, `Z, W ∈ n`, `⟨A₂,A₃*⟩ = 0` and `O(A₂) = 0`. These give
/// `g(X,Y) = |W|² = g(Z,W)`, so `Z = W + U` with `U ⊥ W` in `n`.
fn abc_triple(ctx: &Context, rng: &mut ChaCha8Rng) -> Option<[MatrixElement; 3]> {
    let dec = ctx.dec.as_ref()?;
    let g = ctx.g();
    let w = sampling::nonzero_in(rng, g, dec.n_orthonormal())?;
    let u = sampling::orthogonal_in(rng, g, dec.n_orthonormal(), std::slice::from_ref(&w))
        .unwrap_or_else(|| Vector::zeros(ctx.n()));
    let z = &w + &u;
    let x = sampling::nonzero_in(rng, g, dec.h_orthonormal())?;
    let y = sampling::with_pairing(rng, g, dec.h_orthonormal(), &x, g.norm_sq(&w))?;
    Some([
        MatrixElement::new(x.clone(), y.clone(), z.clone(), w.clone()),
        MatrixElement::new(x.clone(), w.clone(), z.clone(), y.clone()),
        MatrixElement::new(x, w, y, z),
    ])
}

/// Whether slot `s` of a type is required to lie in `h`.
fn slot_in_h(kind: LiftType, s: usize) -> bool {
    // slots: 0 = 11, 1 = 12, 2 = 21, 3 = 22
    match kind {
        LiftType::C1 => s < 2,
        LiftType::C1Swapped => s >= 2,
        LiftType::C2 => s == 0 || s == 3,
        LiftType::C3 => s == 0 || s == 2,
        LiftType::C3Swapped => s == 1 || s == 3,
        LiftType::None => false,
    }
}

fn typed_element(ctx: &Context, rng: &mut ChaCha8Rng, kind: LiftType) -> MatrixElement {
    let dec = ctx.dec.as_ref().expect("typed elements need a decomposition");
    element_of(dec, ctx.n(), rng, kind)
}

/// Random element of the given family over `dec`.
pub(crate) fn element_of(dec: &TypeDecomposition, n: usize, rng: &mut ChaCha8Rng, kind: LiftType) -> MatrixElement {
    MatrixElement::from_slots(std::array::from_fn(|s| {
        let basis = if slot_in_h(kind, s) { dec.h_orthonormal() } else { dec.n_orthonormal() };
        sampling::in_span(rng, n, basis)
    }))
}

fn cross_parts(ctx: &Context, a: &MatrixElement) -> Vec<(f64, f64)> {
    let g = ctx.g();
    vec![
        (g.inner(&a.x11, &a.x22), g.norm(&a.x11) * g.norm(&a.x22)),
        (g.inner(&a.x21, &a.x12), g.norm(&a.x21) * g.norm(&a.x12)),
    ]
}

fn cross_residual(ctx: &Context, a: &MatrixElement, vals: Vals) -> Trial {
    all_of(cross_parts(ctx, a), vals)
}

/// Both sides of the connection recursion for a given value of `∇_X Y`.
fn recursion(
    ctx: &Context,
    nabla_xy: &Vector,
    x: &Vector,
    y: &Vector,
    z: &Vector,
    v: &Vector,
    w: &Vector,
) -> (f64, f64) {
    let (lift, geom) = (&ctx.lift, ctx.geom());
    let lhs = lift.o_functional(&MatrixElement::new(nabla_xy.clone(), w.clone(), v.clone(), z.clone()));
    let first = MatrixElement::new(geom.bracket(x, y) * 0.5, w.clone(), v.clone(), z.clone());
    let second = MatrixElement::new(geom.bracket(z, x) * 0.5, x.clone(), geom.bracket(y, z) * 0.5, y.clone());
    (lhs, lift.o_functional(&first) + lift.o_functional(&second))
}
