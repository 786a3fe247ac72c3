//! Stage execution: each subcommand runs a prefix (or selection) of the
//! full pipeline and assembles a [`Report`]. Randomized checks draw from a
//! ChaCha stream seeded by the configured seed plus a per-stage constant,
//! so identical configurations produce identical reports.

use crate::config::SessionConfig;
use crate::parse::{parse_polynomial, parse_rational};
use crate::report::*;
use logdiv::logarithmic::{
    adapted_basis, ann1_from_derivations, ann1_generators, annihilation_check,
    log_derivations, weight_inequalities, AdaptedBasis, LogarithmicError,
};
use logdiv::poly::Polynomial;
use logdiv::rational::{rat_int, Rational};
use logdiv::sample::random_polynomial;
use logdiv::spencer::{
    euler_solve, random_cochain, SpencerComplex, SpencerError, WedgeIndex, WitnessOutcome,
};
use logdiv::weights::{normalize_weight, WeightVector, WqhCheck};
use logdiv::weyl::euler_field;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// How a run fails: `Input` maps to exit code 2, `Math` to exit code 1.
#[derive(Debug)]
pub enum RunError {
    Input(String),
    Math(String),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Input(m) => write!(f, "input error: {m}"),
            RunError::Math(m) => write!(f, "inconsistency: {m}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Wqh,
    Logder,
    Basis,
    Spencer,
    Verify,
    ExtWitness,
    Annihilator,
    All,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Wqh => "wqh",
            Command::Logder => "logder",
            Command::Basis => "basis",
            Command::Spencer => "spencer",
            Command::Verify => "verify",
            Command::ExtWitness => "ext-witness",
            Command::Annihilator => "annihilator",
            Command::All => "all",
        }
    }
}

const DD_TRIALS_PER_COMPLEX: usize = 100;
const EULER_TRIALS: usize = 200;
const WITNESS_TRIALS: usize = 50;
const SLICE_MAX_WEIGHT: i64 = 3;

struct Context {
    vars: Vec<String>,
    f: Polynomial,
    given: WeightVector,
}

fn math(e: impl std::fmt::Display) -> RunError {
    RunError::Math(e.to_string())
}

fn load_context(cfg: &SessionConfig) -> Result<Context, RunError> {
    let f = parse_polynomial(&cfg.f, &cfg.vars)
        .map_err(|e| RunError::Input(format!("cannot parse f: {e}")))?;
    if f.is_zero() {
        return Err(RunError::Input("the divisor is the zero polynomial".into()));
    }
    let mut weights = Vec::new();
    for text in &cfg.weights {
        weights.push(
            parse_rational(text)
                .map_err(|e| RunError::Input(format!("cannot parse weight `{text}`: {e}")))?,
        );
    }
    let given = WeightVector::new(weights)
        .map_err(|e| RunError::Input(format!("bad weight vector: {e}")))?;
    Ok(Context { vars: cfg.vars.clone(), f, given })
}

/// Executes one subcommand against a resolved configuration.
pub fn run(command: Command, cfg: &SessionConfig) -> Result<Report, RunError> {
    let ctx = load_context(cfg)?;
    let mut stages = Vec::new();

    let needs_weights = command != Command::Logder;
    let normalized = if needs_weights {
        let (stage, w) = stage_wqh(&ctx)?;
        stages.push(stage);
        Some(w)
    } else {
        None
    };

    if matches!(command, Command::Logder | Command::All) {
        stages.push(stage_logder(&ctx)?);
    }

    let needs_basis = matches!(
        command,
        Command::Basis
            | Command::Spencer
            | Command::Verify
            | Command::ExtWitness
            | Command::Annihilator
            | Command::All
    );
    let basis = if needs_basis {
        let w = normalized.as_ref().expect("weights resolved before the basis");
        let (stage, basis) = stage_basis(&ctx, w)?;
        stages.push(stage);
        Some(basis)
    } else {
        None
    };

    if matches!(command, Command::Spencer | Command::Verify | Command::All) {
        let basis = basis.as_ref().expect("basis precedes the complexes");
        let (stage, complexes) = stage_spencer(basis, &cfg.k)?;
        stages.push(stage);
        if matches!(command, Command::Verify | Command::All) {
            stages.push(stage_verify(&complexes, cfg)?);
        }
    }

    if matches!(command, Command::ExtWitness | Command::All) {
        let basis = basis.as_ref().expect("basis precedes the witnesses");
        stages.push(stage_ext_witness(basis, cfg)?);
    }

    if matches!(command, Command::Annihilator | Command::All) {
        let basis = basis.as_ref().expect("basis precedes the annihilators");
        stages.push(stage_annihilator(&ctx, basis, &cfg.k)?);
    }

    Ok(Report {
        command: command.name().to_string(),
        vars: ctx.vars.clone(),
        f: ctx.f.render(&ctx.vars),
        weights: cfg.weights.clone(),
        k: cfg.k.clone(),
        degree_bound: cfg.degree_bound,
        seed: cfg.seed,
        stages,
    })
}

/// Weight-grading check; also normalizes the weights so `f` has weight one.
fn stage_wqh(ctx: &Context) -> Result<(Stage, WeightVector), RunError> {
    let parts: Vec<PartData> = ctx
        .f
        .wqh_decompose(&ctx.given)
        .into_iter()
        .map(|(nu, p)| PartData { weight: nu.to_string(), polynomial: p.render(&ctx.vars) })
        .collect();
    let weight = match ctx.f.is_wqh(&ctx.given) {
        WqhCheck::Homogeneous(nu) => nu,
        WqhCheck::Zero => return Err(RunError::Input("the divisor is zero".into())),
        WqhCheck::Mixed => {
            let seen: Vec<String> = parts.iter().map(|p| p.weight.clone()).collect();
            return Err(RunError::Math(format!(
                "the divisor is not weakly quasi-homogeneous under the given weights; \
                 its monomials have weights {}",
                seen.join(", ")
            )));
        }
    };
    let normalized = normalize_weight(&ctx.f, &ctx.given).map_err(math)?;
    let data = WqhData {
        homogeneous: true,
        weight: Some(weight.to_string()),
        parts,
        normalized_weights: Some(
            normalized.as_slice().iter().map(|w| w.to_string()).collect(),
        ),
    };
    let stage =
        Stage { name: "wqh".into(), status: "ok".into(), data: StageData::Wqh(data) };
    Ok((stage, normalized))
}

fn stage_logder(ctx: &Context) -> Result<Stage, RunError> {
    let set = log_derivations(&ctx.f).map_err(|e| match e {
        LogarithmicError::ConstantDivisor => RunError::Input(e.to_string()),
        other => math(other),
    })?;
    let generators = set
        .fields
        .iter()
        .zip(&set.cofactors)
        .map(|(d, a)| FieldData {
            field: d.render(&ctx.vars),
            cofactor: a.render(&ctx.vars),
        })
        .collect();
    Ok(Stage {
        name: "logder".into(),
        status: "ok".into(),
        data: StageData::Logder(LogderData { generators }),
    })
}

fn stage_basis(ctx: &Context, w: &WeightVector) -> Result<(Stage, AdaptedBasis), RunError> {
    let basis = adapted_basis(&ctx.f, w).map_err(|e| match e {
        LogarithmicError::ConstantDivisor => RunError::Input(e.to_string()),
        other => math(other),
    })?;
    let inequalities: Vec<InequalityData> = weight_inequalities(&basis)
        .into_iter()
        .map(|(subset, value)| InequalityData {
            positive: value.is_positive(),
            value: value.to_string(),
            subset,
        })
        .collect();
    let all_positive = inequalities.iter().all(|i| i.positive);
    if !all_positive {
        let bad = inequalities.iter().find(|i| !i.positive).expect("one failed");
        return Err(RunError::Math(format!(
            "weight inequality violated: 1 - sum(nu, J={:?}) = {} is not positive",
            bad.subset, bad.value
        )));
    }
    let brackets = basis
        .brackets()
        .iter()
        .map(|(&(i, j), coeffs)| BracketData {
            i,
            j,
            coefficients: coeffs.iter().map(|c| c.render(&ctx.vars)).collect(),
        })
        .collect();
    let status = if basis.germ_unit().is_some() { "ok (germ at 0)" } else { "ok" };
    let data = BasisData {
        chi: basis.chi().render(&ctx.vars),
        deltas: basis.deltas().iter().map(|d| d.render(&ctx.vars)).collect(),
        nus: basis.nus().iter().map(|n| n.to_string()).collect(),
        germ_unit: basis.germ_unit().map(|u| u.render(&ctx.vars)),
        brackets,
        inequalities,
        all_positive,
    };
    let stage =
        Stage { name: "basis".into(), status: status.into(), data: StageData::Basis(data) };
    Ok((stage, basis))
}

fn stage_spencer(
    basis: &AdaptedBasis,
    ks: &[u32],
) -> Result<(Stage, Vec<SpencerComplex>), RunError> {
    let n = basis.n();
    let mut complexes = Vec::new();
    let mut data = Vec::new();
    for &k in ks {
        let complex = SpencerComplex::build(basis, k);
        let complex_property = complex.verify_complex();
        if !complex_property {
            return Err(RunError::Math(format!(
                "the complex property fails at twist k = {k}"
            )));
        }
        let levels = (1..=n)
            .map(|l| {
                let lm = complex.level(l);
                LevelData {
                    level: l,
                    sources: lm.sources().len(),
                    targets: lm.targets().len(),
                    nonzero_entries: lm
                        .sources()
                        .iter()
                        .map(|s| lm.row(s).count())
                        .sum(),
                }
            })
            .collect();
        let mut diagonal_constants = Vec::new();
        for size in 1..=n {
            for wedge in WedgeIndex::all(n, size) {
                if wedge.contains(1) {
                    let value = complex.diagonal_constant(&wedge);
                    diagonal_constants.push(DiagonalData {
                        wedge: wedge.to_string(),
                        positive: value.is_positive(),
                        value: value.to_string(),
                    });
                }
            }
        }
        data.push(ComplexData { k, levels, diagonal_constants, complex_property });
        complexes.push(complex);
    }
    let stage = Stage {
        name: "spencer".into(),
        status: "ok".into(),
        data: StageData::Spencer(SpencerData { complexes: data }),
    };
    Ok((stage, complexes))
}

fn stage_verify(complexes: &[SpencerComplex], cfg: &SessionConfig) -> Result<Stage, RunError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(0x5645_5249));
    let mut dd_trials = 0;
    for complex in complexes {
        let n = complex.n();
        if n < 2 {
            continue;
        }
        for trial in 0..DD_TRIALS_PER_COMPLEX {
            let level = 1 + trial % (n - 1);
            let u = random_cochain(
                &mut rng,
                n,
                complex.nvars(),
                level - 1,
                cfg.degree_bound,
                3,
            );
            let z = complex.dual_apply(level, &u);
            if !complex.dual_apply(level + 1, &z).is_zero() {
                return Err(RunError::Math(format!(
                    "d(d(u)) != 0 at twist {} level {level}",
                    complex.k()
                )));
            }
            dd_trials += 1;
        }
    }

    // Euler round trips on the first complex's weights (all complexes share
    // them), with the documented constants.
    let Some(first) = complexes.first() else {
        return Err(RunError::Input("no twists configured".into()));
    };
    let w = first.basis().weight();
    let nvars = first.nvars();
    let chi = euler_field(w);
    let constants = [rat_int(1), Rational::new(1.into(), 2.into()), Rational::new(5.into(), 6.into())];
    for trial in 0..EULER_TRIALS {
        let c = &constants[trial % constants.len()];
        let psi = random_polynomial(&mut rng, nvars, cfg.degree_bound.min(12), 4);
        let h = euler_solve(c, &psi, w).map_err(math)?;
        if &chi.apply(&h) + &h.scale(c) != psi {
            return Err(RunError::Math("euler solve round trip failed".into()));
        }
        let image = &chi.apply(&psi) + &psi.scale(c);
        if euler_solve(c, &image, w).map_err(math)? != psi {
            return Err(RunError::Math("euler apply-then-solve round trip failed".into()));
        }
    }

    // A deliberately resonant probe must be rejected, naming the weight.
    let (index, wi) = w
        .as_slice()
        .iter()
        .enumerate()
        .find(|(_, v)| v.is_positive())
        .expect("weights have a positive entry");
    let probe = Polynomial::var(index, nvars);
    let resonance_rejected = match euler_solve(&-wi.clone(), &probe, w) {
        Err(SpencerError::Resonance { nu, .. }) => *nu == *wi,
        _ => false,
    };
    if !resonance_rejected {
        return Err(RunError::Math("resonant euler equation was not rejected".into()));
    }

    let data = VerifyData {
        dd_zero_trials: dd_trials,
        dd_zero_ok: true,
        euler_trials: EULER_TRIALS,
        euler_ok: true,
        resonance_rejected,
    };
    Ok(Stage {
        name: "verify".into(),
        status: "ok".into(),
        data: StageData::Verify(data),
    })
}

fn stage_ext_witness(basis: &AdaptedBasis, cfg: &SessionConfig) -> Result<Stage, RunError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(0x4558_5457));
    let n = basis.n();
    let mut runs = Vec::new();
    for &k in &cfg.k {
        let complex = SpencerComplex::build(basis, k);
        if k == 0 {
            let probe = logdiv::spencer::CochainTuple::zero(1, complex.nvars());
            let refused = match complex.ext_witness(&probe) {
                Err(e) => e.to_string(),
                Ok(_) => {
                    return Err(RunError::Math(
                        "twist zero was not refused by the witness construction".into(),
                    ))
                }
            };
            runs.push(WitnessRunData {
                k,
                level: 0,
                trials: 0,
                witnesses: 0,
                refused: Some(refused),
            });
            continue;
        }
        for level in 1..=n {
            let mut witnesses = 0;
            for _ in 0..WITNESS_TRIALS {
                let u = random_cochain(
                    &mut rng,
                    n,
                    complex.nvars(),
                    level - 1,
                    cfg.degree_bound,
                    3,
                );
                let z = complex.dual_apply(level, &u);
                match complex.ext_witness(&z).map_err(math)? {
                    WitnessOutcome::Witness(found) => {
                        if complex.dual_apply(level, &found) != z {
                            return Err(RunError::Math(format!(
                                "witness re-application failed at k = {k}, level {level}"
                            )));
                        }
                        witnesses += 1;
                    }
                    WitnessOutcome::NotACocycle { .. } => {
                        return Err(RunError::Math(format!(
                            "a coboundary failed the cocycle test at k = {k}, level {level}"
                        )));
                    }
                    WitnessOutcome::Unverified { .. } => {
                        return Err(RunError::Math(format!(
                            "witness verification failed at k = {k}, level {level}"
                        )));
                    }
                }
            }
            runs.push(WitnessRunData { k, level, trials: WITNESS_TRIALS, witnesses, refused: None });
        }
    }

    let slices = slice_sweep(basis, cfg)?;
    let data = ExtWitnessData { runs, slices };
    Ok(Stage {
        name: "ext-witness".into(),
        status: "ok".into(),
        data: StageData::ExtWitness(data),
    })
}

/// Exactness of all graded slices up to weight three, for every configured
/// positive twist. Only attempted for at most two variables with all
/// weights positive: slices grow quickly and the witness runs already cover
/// the larger examples.
fn slice_sweep(basis: &AdaptedBasis, cfg: &SessionConfig) -> Result<Option<SliceData>, RunError> {
    let n = basis.n();
    let w = basis.weight();
    if n > 2 || w.positive_count() != n {
        return Ok(None);
    }
    let mut denominator = BigInt::from(1);
    for v in w.as_slice() {
        denominator = denominator.lcm(v.denom());
    }
    for nu in basis.nus() {
        denominator = denominator.lcm(nu.denom());
    }
    let Some(q) = denominator.to_i64() else {
        return Ok(None);
    };
    let mut entries = Vec::new();
    let mut all_exact = true;
    for &k in &cfg.k {
        if k == 0 {
            continue;
        }
        let complex = SpencerComplex::build(basis, k);
        for m in 0..=(SLICE_MAX_WEIGHT * q) {
            let nu = Rational::new(BigInt::from(m), BigInt::from(q));
            for level in 0..=n {
                let (kernel, image) =
                    complex.graded_slice_oracle(level, &nu).map_err(math)?;
                all_exact &= kernel == image;
                entries.push(SliceEntry {
                    level,
                    weight: nu.to_string(),
                    kernel,
                    image,
                });
            }
        }
    }
    if entries.is_empty() {
        return Ok(None);
    }
    if !all_exact {
        return Err(RunError::Math(
            "a graded slice has kernel dimension different from image dimension".into(),
        ));
    }
    Ok(Some(SliceData {
        max_weight: SLICE_MAX_WEIGHT.to_string(),
        entries,
        all_exact,
    }))
}

fn stage_annihilator(
    ctx: &Context,
    basis: &AdaptedBasis,
    ks: &[u32],
) -> Result<Stage, RunError> {
    let raw = log_derivations(&ctx.f).map_err(math)?;
    let mut tables = Vec::new();
    for &k in ks {
        let adapted_ops = ann1_generators(basis, k);
        let raw_ops = ann1_from_derivations(&raw, k);
        let (adapted, from_derivations, note) = if k == 0 {
            // 1/f^0 = 1: applying the operators to the constant 1 is the
            // right check for the untwisted ideal.
            let one = Polynomial::one(ctx.f.nvars());
            let check_one = |ops: &[logdiv::weyl::DifferentialOperator]| {
                ops.iter()
                    .map(|op| AnnihilatorEntry {
                        operator: op.render(&ctx.vars),
                        annihilates: op.apply(&one).is_zero(),
                    })
                    .collect::<Vec<_>>()
            };
            (
                check_one(&adapted_ops),
                check_one(&raw_ops),
                Some("k = 0: operators are applied to 1/f^0 = 1".to_string()),
            )
        } else {
            let adapted_flags = annihilation_check(&adapted_ops, &ctx.f, k);
            let raw_flags = annihilation_check(&raw_ops, &ctx.f, k);
            let render = |ops: &[logdiv::weyl::DifferentialOperator], flags: &[bool]| {
                ops.iter()
                    .zip(flags)
                    .map(|(op, &ok)| AnnihilatorEntry {
                        operator: op.render(&ctx.vars),
                        annihilates: ok,
                    })
                    .collect::<Vec<_>>()
            };
            (render(&adapted_ops, &adapted_flags), render(&raw_ops, &raw_flags), None)
        };
        if adapted.iter().any(|e| !e.annihilates) || from_derivations.iter().any(|e| !e.annihilates)
        {
            return Err(RunError::Math(format!(
                "an order-one generator fails to annihilate 1/f^{k}"
            )));
        }
        tables.push(AnnihilatorTable { k, adapted, from_derivations, note });
    }
    Ok(Stage {
        name: "annihilator".into(),
        status: "ok".into(),
        data: StageData::Annihilator(AnnihilatorData { tables }),
    })
}
