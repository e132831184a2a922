//! Identities involving a Hermitian almost complex structure `J` and its
//! slot-wise lift `J̄`, the one-slot variants `A_C` (first column) and `A_R`
//! (first row), and almost contact data.
//!
//! Slots are named `A = [[X, W], [Z, Y]]`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::geometry::random_element;
use super::matrix::element_of;
use super::{all_of, element, scalar, Context, Vals};
use crate::algebra::SubspaceBasis;
use crate::complex::{hermitian_check, slant_angle, AlmostComplexStructure, ExteriorConvention};
use crate::generators::random_subspace;
use crate::lift::{LiftType, MatrixElement, TypeDecomposition};
use crate::linalg::{self, Vector};
use crate::report::{Entry, Trial};
use crate::sampling;

const NO_J: &str = "no Hermitian almost complex structure";
const NO_CONTACT: &str = "no almost contact structure";

fn with_j<'a>(
    ctx: &'a Context,
    id: &'static str,
    anchor: &'static str,
    f: impl Fn(&'a AlmostComplexStructure, &mut ChaCha8Rng, usize) -> Trial + Send + Sync + 'a,
) -> Entry<'a> {
    match &ctx.j {
        Some(j) => Entry::new(id, anchor, move |rng, t| f(j, rng, t)),
        None => Entry::inapplicable(id, anchor, NO_J),
    }
}

/// Family membership up to orientation.
fn in_family(ctx: &Context, a: &MatrixElement, dec: &TypeDecomposition, kind: LiftType) -> bool {
    let kinds: &[LiftType] = match kind {
        LiftType::C1 | LiftType::C1Swapped => &[LiftType::C1, LiftType::C1Swapped],
        LiftType::C3 | LiftType::C3Swapped => &[LiftType::C3, LiftType::C3Swapped],
        LiftType::C2 => &[LiftType::C2],
        LiftType::None => &[LiftType::None],
    };
    kinds.iter().any(|&k| ctx.lift.belongs_to(a, dec, k))
}

pub fn entries(ctx: &Context) -> Vec<Entry<'_>> {
    let n = ctx.n();
    let g = ctx.g();
    let lift = &ctx.lift;
    let full: &[Vector] = &ctx.full;
    let rv = move |rng: &mut ChaCha8Rng| sampling::vector(rng, n);
    let re = move |rng: &mut ChaCha8Rng| random_element(rng, n);
    let ip = move |a: &Vector, b: &Vector| g.inner(a, b);
    let sq = move |a: &Vector| g.norm_sq(a);
    let nm = move |a: &Vector| g.norm(a);
    let o = move |a: &MatrixElement| lift.o_functional(a);
    let mut out = Vec::new();

    out.push(with_j(ctx, "j_lift_isometry", "⟨J̄A,J̄B⟩ = ⟨A,B⟩", move |j, rng, _| {
        let (a, b) = (re(rng), re(rng));
        Trial::eq(lift.inner(&j.lift(&a), &j.lift(&b)), lift.inner(&a, &b), Vals::new().m("A", &a).m("B", &b))
    }));

    out.push(with_j(ctx, "j_lift_orthogonal", "⟨J̄A,A⟩ = 0", move |j, rng, _| {
        let a = re(rng);
        Trial::checked(lift.inner(&j.lift(&a), &a), lift.inner(&a, &a), Vals::new().m("A", &a))
    }));

    out.push(with_j(ctx, "j_lift_o_invariance", "O(J̄A) = O(A)", move |j, rng, _| {
        let a = re(rng);
        Trial::eq(o(&j.lift(&a)), o(&a), Vals::new().m("A", &a))
    }));

    out.push(with_j(
        ctx,
        "o_chain_first_second",
        "O([[JX,W],[Z,Y]]) = O([[X,W],[Z,-JY]])",
        move |j, rng, _| {
            let a = re(rng);
            let (x, w, z, y) = (&a.x11, &a.x12, &a.x21, &a.x22);
            let lhs = o(&MatrixElement::new(j.apply(x), w.clone(), z.clone(), y.clone()));
            let rhs = o(&MatrixElement::new(x.clone(), w.clone(), z.clone(), -j.apply(y)));
            Trial::eq(lhs, rhs, Vals::new().m("A", &a))
        },
    ));

    out.push(with_j(
        ctx,
        "o_chain_first_third",
        "O([[JX,W],[Z,Y]]) = O([[Z,JY],[X,W]])",
        move |j, rng, _| {
            let a = re(rng);
            let (x, w, z, y) = (&a.x11, &a.x12, &a.x21, &a.x22);
            let lhs = o(&MatrixElement::new(j.apply(x), w.clone(), z.clone(), y.clone()));
            let rhs = o(&MatrixElement::new(z.clone(), j.apply(y), x.clone(), w.clone()));
            Trial::eq(lhs, rhs, Vals::new().m("A", &a))
        },
    ));

    out.push(with_j(
        ctx,
        "o_chain_row",
        "O([[JX,JW],[Z,Y]]) = O([[X,W],[-JZ,-JY]]) = O([[JZ,JY],[X,W]])",
        move |j, rng, _| {
            let a = re(rng);
            let (x, w, z, y) = (&a.x11, &a.x12, &a.x21, &a.x22);
            let first = o(&MatrixElement::new(j.apply(x), j.apply(w), z.clone(), y.clone()));
            let second = o(&MatrixElement::new(x.clone(), w.clone(), -j.apply(z), -j.apply(y)));
            let third = o(&MatrixElement::new(j.apply(z), j.apply(y), x.clone(), w.clone()));
            all_of([scalar(first, second), scalar(first, third)], Vals::new().m("A", &a))
        },
    ));

    out.push(with_j(ctx, "j_bar_orthogonality", "⟨J̄A,Aᵗ⟩ = ⟨J̄A,A*⟩ = ⟨J̄Aᵗ,A*⟩ = 0", move |j, rng, _| {
        let a = re(rng);
        let (ja, jat) = (j.lift(&a), j.lift(&a.transpose()));
        let s = lift.inner(&a, &a);
        all_of(
            [
                (lift.inner(&ja, &a.transpose()), s),
                (lift.inner(&ja, &a.star()), s),
                (lift.inner(&jat, &a.star()), s),
            ],
            Vals::new().m("A", &a),
        )
    }));

    out.push(with_j(ctx, "j_bar_transpose", "J̄Aᵗ = (J̄A)ᵗ", move |j, rng, _| {
        let a = re(rng);
        all_of([element(lift, &j.lift(&a.transpose()), &j.lift(&a).transpose())], Vals::new().m("A", &a))
    }));

    out.push(with_j(ctx, "j_bar_star", "J̄A* = (J̄A)*", move |j, rng, _| {
        let a = re(rng);
        all_of([element(lift, &j.lift(&a.star()), &j.lift(&a).star())], Vals::new().m("A", &a))
    }));

    out.push(with_j(ctx, "j_bar_antisymmetric_transpose", "A = -Aᵗ ⇒ J̄Aᵗ = -(J̄A)ᵗ", move |j, rng, _| {
        let w = rv(rng);
        let zero = Vector::zeros(n);
        let a = MatrixElement::new(zero.clone(), w.clone(), -w, zero);
        all_of([element(lift, &j.lift(&a.transpose()), &-j.lift(&a).transpose())], Vals::new().m("A", &a))
    }));

    out.push(with_j(ctx, "j_bar_antisymmetric_star", "A = -A* ⇒ J̄A* = -(J̄A)*", move |j, rng, _| {
        let (x, w, z) = (rv(rng), rv(rng), rv(rng));
        let a = MatrixElement::new(x.clone(), w, z, -x);
        all_of([element(lift, &j.lift(&a.star()), &-j.lift(&a).star())], Vals::new().m("A", &a))
    }));

    out.push(with_j(ctx, "ac_transpose", "(A_R)ᵗ = (Aᵗ)_C", move |j, rng, _| {
        let a = re(rng);
        all_of([element(lift, &j.ac_row(&a).transpose(), &j.ac_col(&a.transpose()))], Vals::new().m("A", &a))
    }));

    out.push(with_j(ctx, "ac_norms", "⟨A_C,A_C⟩ = ⟨A_R,A_R⟩ = ⟨A,A⟩", move |j, rng, _| {
        let a = re(rng);
        let (c, r) = (j.ac_col(&a), j.ac_row(&a));
        let aa = lift.inner(&a, &a);
        all_of([scalar(lift.inner(&c, &c), aa), scalar(lift.inner(&r, &r), aa)], Vals::new().m("A", &a))
    }));

    out.push(with_j(ctx, "ac_col_inner", "⟨A_C,A⟩ = |W|² + |Y|²", move |j, rng, _| {
        let a = re(rng);
        Trial::eq(lift.inner(&j.ac_col(&a), &a), sq(&a.x12) + sq(&a.x22), Vals::new().m("A", &a))
    }));

    out.push(with_j(ctx, "ac_row_inner", "⟨A_R,A⟩ = |Z|² + |Y|²", move |j, rng, _| {
        let a = re(rng);
        Trial::eq(lift.inner(&j.ac_row(&a), &a), sq(&a.x21) + sq(&a.x22), Vals::new().m("A", &a))
    }));

    out.push(with_j(ctx, "ac_col_row_inner", "⟨A_C,A_R⟩ = |X|² + |Y|²", move |j, rng, _| {
        let a = re(rng);
        Trial::eq(lift.inner(&j.ac_col(&a), &j.ac_row(&a)), sq(&a.x11) + sq(&a.x22), Vals::new().m("A", &a))
    }));

    out.push(with_j(ctx, "ac_o_sum", "O(A_C) + O(A_R) = 2g(JX,Y)", move |j, rng, _| {
        let a = re(rng);
        let lhs = o(&j.ac_col(&a)) + o(&j.ac_row(&a));
        Trial::eq(lhs, 2.0 * ip(&j.apply(&a.x11), &a.x22), Vals::new().m("A", &a))
    }));

    out.push(with_j(ctx, "ac_o_equal", "O(A_C) = O(A_R) ⇒ g(JZ,W) = 0", move |j, rng, _| {
        let a = ac_equal_o(j, g, rng, n);
        let jz = j.apply(&a.x21);
        all_of(
            [scalar(o(&j.ac_col(&a)), o(&j.ac_row(&a))), (ip(&jz, &a.x12), nm(&jz) * nm(&a.x12))],
            Vals::new().m("A", &a),
        )
    }));

    out.push(with_j(
        ctx,
        "det_j_transpose_implies_o_ac",
        "(J̄Aᵗ,A*) = 0 ⇒ O(A_C) = 0",
        move |j, rng, t| {
            let (x, z, w) = (rv(rng), rv(rng), rv(rng));
            // (J̄Aᵗ,A*) = g(JZ,W)² - g(JX,Y)², so g(JX,Y) = ±g(JZ,W)
            let sign = if t % 2 == 0 { -1.0 } else { 1.0 };
            let target = sign * ip(&j.apply(&z), &w);
            let Some(y) = sampling::with_pairing(rng, g, full, &j.apply(&x), target) else {
                return Trial::Vacuous;
            };
            let a = MatrixElement::new(x, w, z, y);
            let det = lift.det_form(&j.lift(&a.transpose()), &a.star());
            let scale = sq(&a.x11) * sq(&a.x22) + sq(&a.x21) * sq(&a.x12);
            all_of([(det, scale), scalar(o(&j.ac_col(&a)), 0.0)], Vals::new().m("A", &a))
        },
    ));

    out.push(with_j(ctx, "ac_row_zero_col_value", "O(A_R) = 0 ⇒ O(A_C) = 2g(JW,Z)", move |j, rng, _| {
        let (x, z, w) = (rv(rng), rv(rng), rv(rng));
        // O(A_R) = g(JX,Y) + g(JZ,W)
        let Some(y) = sampling::with_pairing(rng, g, full, &j.apply(&x), -ip(&j.apply(&z), &w)) else {
            return Trial::Vacuous;
        };
        let a = MatrixElement::new(x, w, z, y);
        all_of(
            [
                scalar(o(&j.ac_row(&a)), 0.0),
                scalar(o(&j.ac_col(&a)), 2.0 * ip(&j.apply(&a.x12), &a.x21)),
            ],
            Vals::new().m("A", &a),
        )
    }));

    out.push(with_j(ctx, "ac_col_zero_row_value", "O(A_C) = 0 ⇒ O(A_R) = 2g(JZ,W)", move |j, rng, _| {
        let (x, z, w) = (rv(rng), rv(rng), rv(rng));
        // O(A_C) = g(JX,Y) - g(JZ,W)
        let Some(y) = sampling::with_pairing(rng, g, full, &j.apply(&x), ip(&j.apply(&z), &w)) else {
            return Trial::Vacuous;
        };
        let a = MatrixElement::new(x, w, z, y);
        all_of(
            [
                scalar(o(&j.ac_col(&a)), 0.0),
                scalar(o(&j.ac_row(&a)), 2.0 * ip(&j.apply(&a.x21), &a.x12)),
            ],
            Vals::new().m("A", &a),
        )
    }));

    out.push(with_j(ctx, "ac_o_equal_implies_jxy_zero", "O(A_C) = O(A_R) ⇒ g(JX,Y) = 0", move |j, rng, _| {
        let a = ac_equal_o(j, g, rng, n);
        let jx = j.apply(&a.x11);
        all_of(
            [scalar(o(&j.ac_col(&a)), o(&j.ac_row(&a))), (ip(&jx, &a.x22), nm(&jx) * nm(&a.x22))],
            Vals::new().m("A", &a),
        )
    }));

    out.push(with_j(ctx, "cross_ac_implies_o_ar", "A_C cross ⇒ O(A_R) = 0", move |j, rng, _| {
        let a = cross_sample(j, g, rng, n);
        let c = j.ac_col(&a);
        let hyp = [(ip(&c.x11, &c.x22), nm(&c.x11) * nm(&c.x22)), (ip(&c.x21, &c.x12), nm(&c.x21) * nm(&c.x12))];
        let mut parts = hyp.to_vec();
        parts.push((o(&j.ac_row(&a)), lift.inner(&a, &a)));
        all_of(parts, Vals::new().m("A", &a))
    }));

    out.push(with_j(ctx, "cross_ar_implies_o_ac", "A_R cross ⇒ O(A_C) = 0", move |j, rng, _| {
        let a = cross_sample(j, g, rng, n);
        let r = j.ac_row(&a);
        let hyp = [(ip(&r.x11, &r.x22), nm(&r.x11) * nm(&r.x22)), (ip(&r.x21, &r.x12), nm(&r.x21) * nm(&r.x12))];
        let mut parts = hyp.to_vec();
        parts.push((o(&j.ac_col(&a)), lift.inner(&a, &a)));
        all_of(parts, Vals::new().m("A", &a))
    }));

    let invariant = |id: &'static str, anchor: &'static str, f: fn(&Context, &AlmostComplexStructure, &TypeDecomposition, &mut ChaCha8Rng) -> Trial| {
        match (&ctx.j, &ctx.invariant_h) {
            (None, _) => Entry::inapplicable(id, anchor, NO_J),
            (Some(_), None) => Entry::inapplicable(id, anchor, "no proper J-invariant subalgebra"),
            (Some(j), Some((_, dec))) => Entry::new(id, anchor, move |rng, _| f(ctx, j, dec, rng)),
        }
    };

    out.push(invariant("c1_invariance_invariant_h", "Jh = h and A ∈ C1 ⇒ J̄A ∈ C1", |ctx, j, dec, rng| {
        let a = element_of(dec, ctx.n(), rng, LiftType::C1);
        Trial::claim(in_family(ctx, &j.lift(&a), dec, LiftType::C1), Vals::new().m("A", &a))
    }));

    out.push(invariant("c3_invariance_invariant_h", "Jh = h and A ∈ C3 ⇒ J̄A ∈ C3", |ctx, j, dec, rng| {
        let a = element_of(dec, ctx.n(), rng, LiftType::C3);
        Trial::claim(in_family(ctx, &j.lift(&a), dec, LiftType::C3), Vals::new().m("A", &a))
    }));

    out.push(invariant("invariant_h_ac_in_c1", "Jh = h and A ∈ C1 ⇒ A_R, A_C ∈ C1", |ctx, j, dec, rng| {
        let a = element_of(dec, ctx.n(), rng, LiftType::C1);
        let holds = ctx.lift.belongs_to(&j.ac_row(&a), dec, LiftType::C1)
            && ctx.lift.belongs_to(&j.ac_col(&a), dec, LiftType::C1);
        Trial::claim(holds, Vals::new().m("A", &a))
    }));

    out.push(with_j(
        ctx,
        "c1_invariance_anti_invariant",
        "Jh ⊥ h and A ∈ C1 ⇒ J̄A ∈ C1",
        move |j, rng, _| {
            let Some(x) = sampling::nonzero_in(rng, g, full) else { return Trial::Vacuous };
            // every line is an abelian subalgebra, and g(JX,X) = 0 makes it anti-invariant
            let Ok(dec) = TypeDecomposition::new(ctx.alg(), g, SubspaceBasis::span(n, std::slice::from_ref(&x))) else {
                return Trial::Vacuous;
            };
            let a = element_of(&dec, n, rng, LiftType::C1);
            Trial::claim(in_family(ctx, &j.lift(&a), &dec, LiftType::C1), Vals::new().v("h", &x).m("A", &a))
        },
    ));

    out.push(with_j(
        ctx,
        "slant_lifted_equality",
        "⟨J̄A,B⟩ / Σ|JA_s||B_s| = g(JX,Y) / |JX||Y| when every slot of A is along X and every slot of B along Y",
        move |j, rng, _| {
            let k = rng.gen_range(1..=n);
            let m = random_subspace(rng, n, k);
            match slant_angle(lift, j, &m, 4, rng) {
                Ok(stats) => Trial::checked(stats.lifted_residual, 0.0, m.vectors().iter().enumerate().map(|(i, v)| (format!("m{}", i + 1), v.clone()))),
                Err(_) => Trial::Vacuous,
            }
        },
    ));

    match (&ctx.j, &ctx.dec_split) {
        (Some(j), Some(split)) => {
            let tangent = split.tangent_orthonormal();
            out.push(Entry::new("pf_sum", "P̄A + F̄A = J̄A for A over a subalgebra", move |rng, _| {
                let a = MatrixElement::from_slots(std::array::from_fn(|_| sampling::in_span(rng, n, tangent)));
                match j.lifted_pf(g, split, &a) {
                    Ok((p, f)) => all_of([element(lift, &(&p + &f), &j.lift(&a))], Vals::new().m("A", &a)),
                    Err(_) => Trial::Vacuous,
                }
            }));
        }
        (None, _) => out.push(Entry::inapplicable("pf_sum", "P̄A + F̄A = J̄A for A over a subalgebra", NO_J)),
        (Some(_), None) => out.push(Entry::inapplicable(
            "pf_sum",
            "P̄A + F̄A = J̄A for A over a subalgebra",
            "no proper subalgebra to split along",
        )),
    }

    let hermitian_anchor = "J² = -Id and g(JX,JY) = g(X,Y)";
    match &ctx.j_matrix {
        Some(m) => out.push(
            Entry::new("hermitian", hermitian_anchor, move |_, _| match hermitian_check(g, m) {
                Ok(v) => Trial::checked(v.square_residual.max(v.compatibility_residual), 0.0, Vals::new()),
                Err(_) => Trial::claim(false, Vals::new()),
            })
            .with_trials(1),
        ),
        None => out.push(Entry::inapplicable("hermitian", hermitian_anchor, NO_J)),
    }

    contact_entries(ctx, &mut out);
    out
}

fn contact_entries<'a>(ctx: &'a Context, out: &mut Vec<Entry<'a>>) {
    let n = ctx.n();
    let geom = ctx.geom();
    let g = ctx.g();
    let specs: [(&'static str, &'static str); 5] = [
        ("contact_axioms", "φξ = 0, φ² = -Id + ξ⊗η, η(ξ) = 1, g(φX,φY) = g(X,Y) - η(X)η(Y)"),
        ("contact_metric_unit", "g(X,φY) = dη(X,Y) with dη(X,Y) = -η([X,Y])"),
        ("contact_metric_half", "g(X,φY) = dη(X,Y) with dη(X,Y) = -½η([X,Y])"),
        ("k_contact", "∇_X ξ = -φX"),
        ("contact_phi_isometry", "|φX|² = |X|² - η(X)²"),
    ];
    let Some(c) = &ctx.contact else {
        for (id, anchor) in specs {
            out.push(Entry::inapplicable(id, anchor, NO_CONTACT));
        }
        return;
    };
    let e = move |i: usize| linalg::unit(n, i);
    let verdict = move |conv| c.check(geom, conv);

    out.push(
        Entry::new(specs[0].0, specs[0].1, move |_, _| {
            Trial::checked(c.axioms(g).max(), 0.0, Vals::new().v("xi", &c.xi).v("eta", &c.eta))
        })
        .with_trials(1),
    );
    for (idx, conv) in [(1, ExteriorConvention::Unit), (2, ExteriorConvention::Half)] {
        out.push(
            Entry::new(specs[idx].0, specs[idx].1, move |_, _| match verdict(conv) {
                Ok(v) => {
                    let mut vals = Vals::new();
                    if let Some((i, j)) = v.contact_metric_witness {
                        vals = vals.v("X", &e(i)).v("Y", &e(j));
                    }
                    Trial::checked(v.contact_metric_residual, 0.0, vals)
                }
                Err(_) => Trial::Vacuous,
            })
            .with_trials(1),
        );
    }
    out.push(
        Entry::new(specs[3].0, specs[3].1, move |_, _| match verdict(ExteriorConvention::Unit) {
            Ok(v) => {
                let mut vals = Vals::new();
                if let Some(i) = v.k_contact_witness {
                    vals = vals.v("X", &e(i));
                }
                Trial::checked(v.k_contact_residual, 0.0, vals.v("xi", &c.xi))
            }
            Err(_) => Trial::Vacuous,
        })
        .with_trials(1),
    );
    out.push(Entry::new(specs[4].0, specs[4].1, move |rng, _| {
        let x = sampling::vector(rng, n);
        let eta_x = c.eta.dot(&x);
        Trial::eq(g.norm_sq(&(&c.phi * &x)), g.norm_sq(&x) - eta_x * eta_x, Vals::new().v("X", &x))
    }));
}

/// `A` with `W ⊥ JZ`, which is exactly `O(A_C) = O(A_R)`.
fn ac_equal_o(j: &AlmostComplexStructure, g: &crate::algebra::InnerProduct, rng: &mut ChaCha8Rng, n: usize) -> MatrixElement {
    let mut a = random_element(rng, n);
    a.x12 = sampling::orthogonalize(g, &a.x12, &[j.apply(&a.x21)]);
    a
}

/// `A` with `Y ⊥ JX` and `W ⊥ JZ`, so that both `A_C` and `A_R` are cross.
fn cross_sample(j: &AlmostComplexStructure, g: &crate::algebra::InnerProduct, rng: &mut ChaCha8Rng, n: usize) -> MatrixElement {
    let mut a = random_element(rng, n);
    a.x22 = sampling::orthogonalize(g, &a.x22, &[j.apply(&a.x11)]);
    a.x12 = sampling::orthogonalize(g, &a.x12, &[j.apply(&a.x21)]);
    a
}
