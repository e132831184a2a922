//! Runs the identity catalog against one algebra and collects the report.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{slant_angle, ExteriorConvention};
use crate::error::Result;
use crate::report::{run_entry, trial_seed, IdentityReport, RunInfo};
use crate::specfile::Loaded;
use crate::suites::{Context, Suite};

#[derive(Debug, Clone)]
pub struct FidelityOptions {
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
    pub suites: Vec<Suite>,
}

impl Default for FidelityOptions {
    fn default() -> Self {
        Self {
            trials: 1000,
            seed: 0,
            tol: 1e-9,
            suites: Suite::ALL.to_vec(),
        }
    }
}

pub fn run_fidelity(loaded: &Loaded, opts: &FidelityOptions) -> Result<IdentityReport> {
    let ctx = Context::new(&loaded.name, &loaded.alg, &loaded.metric, &loaded.extras)?;
    let mut entries = Vec::new();
    for &suite in &opts.suites {
        for entry in suite.entries(&ctx) {
            entries.push(run_entry(&entry, suite.name(), opts.seed, opts.trials, opts.tol));
        }
    }
    Ok(IdentityReport {
        run: RunInfo {
            algebra: loaded.name.clone(),
            dim: loaded.alg.dim(),
            seed: opts.seed,
            trials: opts.trials,
            tolerance: opts.tol,
            suites: opts.suites.iter().map(|s| s.name().to_string()).collect(),
        },
        entries,
        remarks: remarks(&ctx, opts),
    })
}

fn remarks(ctx: &Context, opts: &FidelityOptions) -> Vec<String> {
    let mut out = Vec::new();
    match &ctx.dec {
        Some(d) => out.push(format!(
            "type decomposition uses h = {} (rank {}), n its orthogonal complement (rank {})",
            ctx.dec_label,
            d.h().rank(),
            d.n().rank()
        )),
        None => out.push("no proper subalgebra available; type-decomposition entries are vacuous".into()),
    }
    if opts.suites.contains(&Suite::Matrix) {
        out.push(
            "not checked: a claim whose hypothesis is that a bracket lies in the algebra; \
             every bracket does, so the hypothesis carries no information"
                .into(),
        );
    }
    if opts.suites.contains(&Suite::Complex) {
        if let (Some(j), Some(d)) = (&ctx.j, &ctx.dec) {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(opts.seed, "slant_remark", 0));
            if let Ok(s) = slant_angle(&ctx.lift, j, d.h(), 200, &mut rng) {
                let (lo, hi) = s.angle_range();
                out.push(format!(
                    "slant of h = {} under J over {} samples: angle in [{:.4}, {:.4}] rad, mean cos {:.4}, lifted ratio gap {:.2e}",
                    ctx.dec_label,
                    s.samples,
                    lo,
                    hi,
                    s.mean_cos,
                    s.lifted_residual
                ));
            }
        }
        if let Some(c) = &ctx.contact {
            let holds = |conv| {
                c.check(ctx.geom(), conv)
                    .map(|v| v.contact_metric_residual <= opts.tol)
                    .unwrap_or(false)
            };
            let which = match (holds(ExteriorConvention::Unit), holds(ExteriorConvention::Half)) {
                (true, true) => "both dη = -η([X,Y]) and dη = -½η([X,Y])",
                (true, false) => "dη(X,Y) = -η([X,Y])",
                (false, true) => "dη(X,Y) = -½η([X,Y])",
                (false, false) => "neither exterior-derivative convention",
            };
            out.push(format!("fundamental form g(X,φY) matches dη under {which}"));
        }
    }
    out
}
