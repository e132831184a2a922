//! Two-step nilpotent identities: the lifted connection on central and
//! non-central slots, the operators `j(Z)` and their slot-wise lift `j̄(B)`,
//! and the Heisenberg-type relations.
//!
//! Unless stated otherwise `A = [[X, Z*], [Z, Y]]` and `B = [[Z, X], [Y, Z*]]`
//! with `X, Y ∈ z^⊥` and `Z, Z* ∈ z`.

use rand_chacha::ChaCha8Rng;

use super::{all_of, element, scalar, Context, Vals};
use crate::lift::MatrixElement;
use crate::linalg::Vector;
use crate::nilpotent::{is_h_type, j_map, bracket_j_residual, lifted_j, two_step_connection, CenterSplit, HTypeStatus};
use crate::report::{Entry, Trial};
use crate::sampling;

const NOT_TWO_STEP: &str = "base is not 2-step nilpotent";
const NOT_H_TYPE: &str = "base is not of Heisenberg type";

pub fn entries(ctx: &Context) -> Vec<Entry<'_>> {
    let geom = ctx.geom();
    let lift = &ctx.lift;
    let split = &ctx.center;
    let mut out = Vec::new();

    out.push(
        Entry::new("lift_class_equivalence", "the lift is 2-step nilpotent iff the base is; classes agree", move |_, _| {
            let base = ctx.alg().lower_central_series().class;
            let lifted = lift.as_lie_algebra().lower_central_series().class;
            Trial::claim(base == lifted, Vals::new())
        })
        .with_trials(1),
    );
    out.push(
        Entry::new("lift_center_rank", "dim Z(ḡ) = 4 dim Z(g)", move |_, _| {
            let base = ctx.alg().center().rank() as f64;
            let lifted = lift.as_lie_algebra().center().rank() as f64;
            Trial::eq(lifted, 4.0 * base, Vals::new())
        })
        .with_trials(1),
    );

    let catalog = catalog();
    if !ctx.two_step {
        out.extend(catalog.into_iter().map(|(id, anchor, _, _)| Entry::inapplicable(id, anchor, NOT_TWO_STEP)));
        return out;
    }
    let h_type = matches!(&ctx.h_type, Some(v) if v.status == HTypeStatus::Holds);
    for (id, anchor, needs_h_type, f) in catalog {
        if needs_h_type && !h_type {
            out.push(Entry::inapplicable(id, anchor, NOT_H_TYPE));
        } else {
            out.push(Entry::new(id, anchor, move |rng, t| f(ctx, rng, t)));
        }
    }

    // single-shot checks
    let pos = out.iter().position(|e| e.id == "two_step_connection").expect("listed");
    out[pos] = Entry::new(out[pos].id, out[pos].anchor, move |_, _| match two_step_connection(geom, split) {
        Ok(c) => Trial::checked(c.max_difference(geom.connection()), 0.0, Vals::new()),
        Err(_) => Trial::Vacuous,
    })
    .with_trials(1);
    let pos = out.iter().position(|e| e.id == "h_type").expect("listed");
    out[pos] = Entry::new(out[pos].id, out[pos].anchor, move |_, _| match &ctx.h_type {
        Some(v) => match v.status {
            HTypeStatus::Holds => Trial::checked(v.defect, 0.0, Vals::new()),
            HTypeStatus::Fails => {
                let mut vals = Vals::new();
                if let Some(z) = &v.witness {
                    vals = vals.v("Z", z);
                }
                Trial::checked(v.defect, 0.0, vals)
            }
            HTypeStatus::Vacuous => Trial::Vacuous,
        },
        None => Trial::Vacuous,
    })
    .with_trials(1);
    if h_type {
        let pos = out.iter().position(|e| e.id == "lift_not_h_type").expect("listed");
        out[pos] = Entry::new(out[pos].id, out[pos].anchor, move |_, _| {
            let lg = &ctx.lift_geometry;
            match is_h_type(lg, &CenterSplit::of(lg)) {
                Ok(v) => Trial::claim(v.status == HTypeStatus::Fails, Vals::new()),
                Err(_) => Trial::Vacuous,
            }
        })
        .with_trials(1);
    }
    out
}

type Check = fn(&Context, &mut ChaCha8Rng, usize) -> Trial;

fn catalog() -> Vec<(&'static str, &'static str, bool, Check)> {
    vec![
        ("nabla_transpose_zero", "∇̄_{Aᵗ}A = ∇̄_A Aᵗ = 0", false, |ctx, rng, _| {
            let Some((a, _)) = layout(ctx, rng) else { return Trial::Vacuous };
            let lift = &ctx.lift;
            let s = lift.inner(&a, &a);
            all_of(
                [
                    (lift.norm(&lift.connection(&a.transpose(), &a)), s),
                    (lift.norm(&lift.connection(&a, &a.transpose())), s),
                ],
                Vals::new().m("A", &a),
            )
        }),
        ("nabla_b_transpose", "∇̄_{Bᵗ}B = ½[[0, [Y,X]], [[X,Y], 0]]", false, |ctx, rng, _| {
            let Some((_, b)) = layout(ctx, rng) else { return Trial::Vacuous };
            let (x, y) = (&b.x12, &b.x21);
            let geom = ctx.geom();
            let zero = Vector::zeros(ctx.n());
            let rhs = MatrixElement::new(zero.clone(), geom.bracket(y, x) * 0.5, geom.bracket(x, y) * 0.5, zero);
            all_of([element(&ctx.lift, &ctx.lift.connection(&b.transpose(), &b), &rhs)], Vals::new().m("B", &b))
        }),
        ("nabla_b_star_zero", "∇̄_{B*}B = 0", false, |ctx, rng, _| {
            let Some((_, b)) = layout(ctx, rng) else { return Trial::Vacuous };
            let lift = &ctx.lift;
            all_of([(lift.norm(&lift.connection(&b.star(), &b)), lift.inner(&b, &b))], Vals::new().m("B", &b))
        }),
        ("nabla_a_star", "∇̄_{A*}A = ½[[[Y,X], 0], [0, [X,Y]]]", false, |ctx, rng, _| {
            let Some((a, _)) = layout(ctx, rng) else { return Trial::Vacuous };
            let (x, y) = (&a.x11, &a.x22);
            let geom = ctx.geom();
            let zero = Vector::zeros(ctx.n());
            let rhs = MatrixElement::new(geom.bracket(y, x) * 0.5, zero.clone(), zero, geom.bracket(x, y) * 0.5);
            all_of([element(&ctx.lift, &ctx.lift.connection(&a.star(), &a), &rhs)], Vals::new().m("A", &a))
        }),
        ("nabla_orthogonality", "⟨∇̄_{A*}A, ∇̄_{Bᵗ}B⟩ = 0", false, |ctx, rng, _| {
            let Some((a, b)) = layout(ctx, rng) else { return Trial::Vacuous };
            let lift = &ctx.lift;
            let (p, q) = (lift.connection(&a.star(), &a), lift.connection(&b.transpose(), &b));
            Trial::checked(lift.inner(&p, &q), lift.norm(&p) * lift.norm(&q), Vals::new().m("A", &a).m("B", &b))
        }),
        ("bracket_central", "[A,B] ∈ Z(ḡ)", false, |ctx, rng, _| {
            let Some((a, b)) = layout(ctx, rng) else { return Trial::Vacuous };
            let (g, split) = (ctx.g(), &ctx.center);
            let c = ctx.lift.bracket(&a, &b);
            let scale = ctx.lift.norm(&a) * ctx.lift.norm(&b);
            all_of((0..4).map(|s| (g.norm(&split.complement_part(g, c.slot(s))), scale)), Vals::new().m("A", &a).m("B", &b))
        }),
        ("mixed_in_complement", "A, B ∈ Z(ḡ)^⊥", false, |ctx, rng, _| {
            let Some((a, b)) = layout(ctx, rng) else { return Trial::Vacuous };
            let (g, split) = (ctx.g(), &ctx.center);
            let parts = (0..4).flat_map(|s| {
                [a.slot(s), b.slot(s)].map(|v| (g.norm(&split.center_part(g, v)), g.norm(v)))
            });
            all_of(parts, Vals::new().m("A", &a).m("B", &b))
        }),
        ("connection_central_direction", "∇̄_B A = -½ j̄(B)A for A over z^⊥ and B over z", false, |ctx, rng, _| {
            let Some((a, b)) = split_pair(ctx, rng) else { return Trial::Vacuous };
            let Ok(jba) = lifted_j(ctx.geom(), &ctx.center, &b, &a) else { return Trial::Vacuous };
            all_of([element(&ctx.lift, &ctx.lift.connection(&b, &a), &(jba * -0.5))], Vals::new().m("A", &a).m("B", &b))
        }),
        (
            "c2_pair_orthogonality",
            "A over z^⊥, B over z ⇒ [A,B] = 0, ⟨A,B⟩ = 0, (A,B) = 0, ⟨A,Bᵗ⟩ = 0",
            false,
            |ctx, rng, _| {
                let Some((a, b)) = split_pair(ctx, rng) else { return Trial::Vacuous };
                let lift = &ctx.lift;
                let s = lift.norm(&a) * lift.norm(&b);
                all_of(
                    [
                        (lift.norm(&lift.bracket(&a, &b)), s),
                        (lift.inner(&a, &b), s),
                        (lift.det_form(&a, &b), s * s),
                        (lift.inner(&a, &b.transpose()), s),
                    ],
                    Vals::new().m("A", &a).m("B", &b),
                )
            },
        ),
        ("c2_transpose_connection", "(∇̄_{Bᵗ}A)ᵗ = ∇̄_{Aᵗ}B for A over z^⊥ and B over z", false, |ctx, rng, _| {
            let Some((a, b)) = split_pair(ctx, rng) else { return Trial::Vacuous };
            let lift = &ctx.lift;
            let lhs = lift.connection(&b.transpose(), &a).transpose();
            all_of([element(lift, &lhs, &lift.connection(&a.transpose(), &b))], Vals::new().m("A", &a).m("B", &b))
        }),
        ("star_bracket_half_connection", "[A*,A] = ½∇̄_{A*}A for A over z^⊥", false, |ctx, rng, _| {
            let Some(a) = over_complement(ctx, rng) else { return Trial::Vacuous };
            let lift = &ctx.lift;
            let lhs = lift.bracket(&a.star(), &a);
            let rhs = lift.connection(&a.star(), &a) * 0.5;
            all_of([element(lift, &lhs, &rhs)], Vals::new().m("A", &a))
        }),
        ("two_step_connection", "∇_X Y = ½[X,Y], ∇_X Z = ∇_Z X = -½ j(Z)X, ∇_Z Z' = 0", false, |_, _, _| {
            Trial::Vacuous
        }),
        ("h_type", "j(Z)² = -|Z|² Id for every Z ∈ z", false, |_, _, _| Trial::Vacuous),
        ("j_defining_relation", "g(j(Z)X, Y) = g([X,Y], Z)", false, |ctx, rng, _| {
            let Some((x, y, z)) = xyz(ctx, rng) else { return Trial::Vacuous };
            let (g, geom) = (ctx.g(), ctx.geom());
            let Ok(j) = j_map(geom, &ctx.center, &z) else { return Trial::Vacuous };
            Trial::eq(g.inner(&j.apply(g, &x), &y), g.inner(&geom.bracket(&x, &y), &z), Vals::new().v("X", &x).v("Y", &y).v("Z", &z))
        }),
        ("j_skew", "g(j(Z)X, X) = 0", false, |ctx, rng, _| {
            let Some((x, _, z)) = xyz(ctx, rng) else { return Trial::Vacuous };
            let g = ctx.g();
            let Ok(j) = j_map(ctx.geom(), &ctx.center, &z) else { return Trial::Vacuous };
            Trial::checked(g.inner(&j.apply(g, &x), &x), g.norm_sq(&x) * g.norm(&z), Vals::new().v("X", &x).v("Z", &z))
        }),
        ("second_derivative_entrywise", "∇̄_B ∇̄_B A = -¼ [|B_s|² A_s] for A over z^⊥ and B over z", true, |ctx, rng, _| {
            let Some((a, b)) = split_pair(ctx, rng) else { return Trial::Vacuous };
            let (lift, g) = (&ctx.lift, ctx.g());
            let lhs = lift.connection(&b, &lift.connection(&b, &a));
            let rhs = MatrixElement::from_slots(std::array::from_fn(|s| a.slot(s) * (-0.25 * g.norm_sq(b.slot(s)))));
            all_of([element(lift, &lhs, &rhs)], Vals::new().m("A", &a).m("B", &b))
        }),
        ("lift_not_h_type", "the lift of a Heisenberg-type algebra is not of Heisenberg type", true, |_, _, _| {
            Trial::Vacuous
        }),
        ("j_bar_pairing", "⟨j̄(B)A, j̄(B')A⟩ = Σ g(B_s,B'_s)|A_s|²", true, |ctx, rng, _| {
            let Some((a, b)) = split_pair(ctx, rng) else { return Trial::Vacuous };
            let b2 = over_center(ctx, rng);
            let (lift, g) = (&ctx.lift, ctx.g());
            let (Ok(p), Ok(q)) = (lifted_j(ctx.geom(), &ctx.center, &b, &a), lifted_j(ctx.geom(), &ctx.center, &b2, &a)) else {
                return Trial::Vacuous;
            };
            let rhs: f64 = (0..4).map(|s| g.inner(b.slot(s), b2.slot(s)) * g.norm_sq(a.slot(s))).sum();
            all_of([scalar(lift.inner(&p, &q), rhs)], Vals::new().m("A", &a).m("B", &b).m("B'", &b2))
        }),
        ("j_bar_bilinear", "⟨j̄(B)A, j̄(B)C⟩ = Σ |B_s|² g(A_s,C_s)", true, |ctx, rng, _| bilinear(ctx, rng, false)),
        (
            "j_bar_bilinear_literal",
            "⟨j̄(B)A, j̄(B)C⟩ = |B11|²g(A11,C11) + |B12|²g(A12,C12) + |B21|²g(A21,C21) + |B12|²g(A22,C22)",
            true,
            |ctx, rng, _| bilinear(ctx, rng, true),
        ),
        ("j_bar_norm_squared", "|j̄(B)A|² = Σ |A_s|²|B_s|²", true, |ctx, rng, _| {
            let Some((a, b)) = split_pair(ctx, rng) else { return Trial::Vacuous };
            let (lift, g) = (&ctx.lift, ctx.g());
            let Ok(p) = lifted_j(ctx.geom(), &ctx.center, &b, &a) else { return Trial::Vacuous };
            let rhs: f64 = (0..4).map(|s| g.norm_sq(a.slot(s)) * g.norm_sq(b.slot(s))).sum();
            all_of([scalar(lift.inner(&p, &p), rhs)], Vals::new().m("A", &a).m("B", &b))
        }),
        ("j_bar_norm_literal", "|j̄(B)A| = Σ |A_s||B_s|", true, |ctx, rng, _| {
            let Some((a, b)) = split_pair(ctx, rng) else { return Trial::Vacuous };
            let (lift, g) = (&ctx.lift, ctx.g());
            let Ok(p) = lifted_j(ctx.geom(), &ctx.center, &b, &a) else { return Trial::Vacuous };
            let rhs: f64 = (0..4).map(|s| g.norm(a.slot(s)) * g.norm(b.slot(s))).sum();
            all_of([scalar(lift.norm(&p), rhs)], Vals::new().m("A", &a).m("B", &b))
        }),
        (
            "anticommutator_entrywise",
            "(j̄(B)j̄(B') + j̄(B')j̄(B))A = [-2g(B_s,B'_s) A_s]",
            true,
            |ctx, rng, _| anticommutator(ctx, rng, false),
        ),
        (
            "anticommutator_literal",
            "(j̄(B)j̄(B') + j̄(B')j̄(B))A = -2(Σ g(B_s,B'_s)) A",
            true,
            |ctx, rng, _| anticommutator(ctx, rng, true),
        ),
        ("bracket_j", "[X, j(Z)X] = |X|² Z for X ∈ z^⊥, Z ∈ z", true, |ctx, rng, _| {
            let Some((x, _, z)) = xyz(ctx, rng) else { return Trial::Vacuous };
            let g = ctx.g();
            match bracket_j_residual(ctx.geom(), &ctx.center, &x, &z) {
                Ok(r) => Trial::checked(r, g.norm_sq(&x) * g.norm(&z), Vals::new().v("X", &x).v("Z", &z)),
                Err(_) => Trial::Vacuous,
            }
        }),
        ("lifted_bracket_j", "[A, j̄(B)A] = [|A_s|² B_s] for A over z^⊥ and B over z", true, |ctx, rng, _| {
            let Some((a, b)) = split_pair(ctx, rng) else { return Trial::Vacuous };
            lifted_bracket_j_check(ctx, &a, &b)
        }),
        ("lifted_bracket_j_unit", "[A, j̄(B)A] = B for A with unit slots over z^⊥ and B over z", true, |ctx, rng, _| {
            let Some((a, b)) = split_pair(ctx, rng) else { return Trial::Vacuous };
            let g = ctx.g();
            if (0..4).any(|s| g.norm(a.slot(s)) < 1e-6) {
                return Trial::Vacuous;
            }
            let a = a.map(|v| v / g.norm(v));
            lifted_bracket_j_check(ctx, &a, &b)
        }),
    ]
}

fn has_split(ctx: &Context) -> bool {
    ctx.center.center().rank() > 0 && ctx.center.complement().rank() > 0
}

fn perp(ctx: &Context, rng: &mut ChaCha8Rng) -> Vector {
    sampling::in_span(rng, ctx.n(), ctx.center.complement_orthonormal())
}

fn central(ctx: &Context, rng: &mut ChaCha8Rng) -> Vector {
    sampling::in_span(rng, ctx.n(), ctx.center.center_orthonormal())
}

fn xyz(ctx: &Context, rng: &mut ChaCha8Rng) -> Option<(Vector, Vector, Vector)> {
    has_split(ctx).then(|| (perp(ctx, rng), perp(ctx, rng), central(ctx, rng)))
}

/// `A = [[X, Z*], [Z, Y]]`, `B = [[Z, X], [Y, Z*]]`.
fn layout(ctx: &Context, rng: &mut ChaCha8Rng) -> Option<(MatrixElement, MatrixElement)> {
    let (x, y, z) = xyz(ctx, rng)?;
    let zs = central(ctx, rng);
    Some((
        MatrixElement::new(x.clone(), zs.clone(), z.clone(), y.clone()),
        MatrixElement::new(z, x, y, zs),
    ))
}

fn over_complement(ctx: &Context, rng: &mut ChaCha8Rng) -> Option<MatrixElement> {
    has_split(ctx).then(|| MatrixElement::from_slots(std::array::from_fn(|_| perp(ctx, rng))))
}

fn over_center(ctx: &Context, rng: &mut ChaCha8Rng) -> MatrixElement {
    MatrixElement::from_slots(std::array::from_fn(|_| central(ctx, rng)))
}

/// `A` over `z^⊥` and `B` over `z`.
fn split_pair(ctx: &Context, rng: &mut ChaCha8Rng) -> Option<(MatrixElement, MatrixElement)> {
    let a = over_complement(ctx, rng)?;
    Some((a, over_center(ctx, rng)))
}

fn bilinear(ctx: &Context, rng: &mut ChaCha8Rng, literal: bool) -> Trial {
    let Some((a, b)) = split_pair(ctx, rng) else { return Trial::Vacuous };
    let Some(c) = over_complement(ctx, rng) else { return Trial::Vacuous };
    let (lift, g) = (&ctx.lift, ctx.g());
    let (Ok(p), Ok(q)) = (lifted_j(ctx.geom(), &ctx.center, &b, &a), lifted_j(ctx.geom(), &ctx.center, &b, &c)) else {
        return Trial::Vacuous;
    };
    let weight = |s: usize| g.norm_sq(b.slot(if literal && s == 3 { 1 } else { s }));
    let rhs: f64 = (0..4).map(|s| weight(s) * g.inner(a.slot(s), c.slot(s))).sum();
    all_of([scalar(lift.inner(&p, &q), rhs)], Vals::new().m("A", &a).m("B", &b).m("C", &c))
}

fn anticommutator(ctx: &Context, rng: &mut ChaCha8Rng, literal: bool) -> Trial {
    let Some((a, b)) = split_pair(ctx, rng) else { return Trial::Vacuous };
    let b2 = over_center(ctx, rng);
    let (geom, split, g) = (ctx.geom(), &ctx.center, ctx.g());
    let lj = |x: &MatrixElement, y: &MatrixElement| lifted_j(geom, split, x, y);
    let (Ok(p), Ok(q)) = (lj(&b2, &a), lj(&b, &a)) else { return Trial::Vacuous };
    let (Ok(pp), Ok(qq)) = (lj(&b, &p), lj(&b2, &q)) else { return Trial::Vacuous };
    let lhs = &pp + &qq;
    let rhs = if literal {
        let total: f64 = (0..4).map(|s| g.inner(b.slot(s), b2.slot(s))).sum();
        &a * (-2.0 * total)
    } else {
        MatrixElement::from_slots(std::array::from_fn(|s| a.slot(s) * (-2.0 * g.inner(b.slot(s), b2.slot(s)))))
    };
    all_of([element(&ctx.lift, &lhs, &rhs)], Vals::new().m("A", &a).m("B", &b).m("B'", &b2))
}

fn lifted_bracket_j_check(ctx: &Context, a: &MatrixElement, b: &MatrixElement) -> Trial {
    let g = ctx.g();
    let Ok(jba) = lifted_j(ctx.geom(), &ctx.center, b, a) else { return Trial::Vacuous };
    let lhs = ctx.lift.bracket(a, &jba);
    let rhs = MatrixElement::from_slots(std::array::from_fn(|s| b.slot(s) * g.norm_sq(a.slot(s))));
    all_of([element(&ctx.lift, &lhs, &rhs)], Vals::new().m("A", a).m("B", b))
}
