//! Argument parsing, dispatch, and exit codes.
//!
//! Every invocation emits a single JSON document on standard output.
//! Exit codes: 0 success, 1 computational failure (solver stall, size
//! guards, overflow), 2 usage or input error (bad flags, missing or
//! malformed files, out-of-range indices). Errors print one line on
//! standard error. All randomness derives from `--seed`, so identical
//! invocations produce byte-identical output.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use curr_core::{
    check_shift_invariance, comass, cycle_basis, discretize_form, enumerate_ball,
    estimate_mean, flat_norm_integer, flat_norm_real, flat_norm_value, mass, normal_norm, pair,
    sample_ball, verify_gk_lipschitz, BallError, BallSampler, ChainError, Cochain, CycleSampler,
    FlatMode, FormError, FunctionSpec, IntChain, LpError, MassBall, MeanError, NormError,
    QuadratureOrder, ShiftFamily, ShiftProvenance, SimplicialComplex, Strategy,
};

use crate::formspec;
use crate::scx;
use crate::wire::{self, AnyChain, ChainDoc, FromTyped};

pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn compute(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

fn chain_error(e: ChainError) -> CliError {
    match e {
        ChainError::Overflow => CliError::compute(e.to_string()),
        _ => CliError::usage(e.to_string()),
    }
}

fn lp_error(e: LpError) -> CliError {
    CliError::compute(e.to_string())
}

fn norm_error(e: NormError) -> CliError {
    match e {
        NormError::Chain(inner) => chain_error(inner),
        NormError::Lp(inner) => lp_error(inner),
        NormError::IlpSizeGuard { .. } | NormError::SolverFailure { .. } => {
            CliError::compute(e.to_string())
        }
    }
}

fn ball_error(e: BallError) -> CliError {
    match e {
        BallError::Chain(inner) => chain_error(inner),
        BallError::SizeGuard { .. } | BallError::LowAcceptance { .. } => {
            CliError::compute(e.to_string())
        }
        BallError::BadCap { .. } | BallError::ZeroDimension | BallError::ZeroCount => {
            CliError::usage(e.to_string())
        }
    }
}

fn form_error(e: FormError) -> CliError {
    match e {
        FormError::Chain(inner) => chain_error(inner),
        FormError::Norm(inner) => norm_error(inner),
        FormError::Ball(inner) => ball_error(inner),
        FormError::DimensionMismatch { .. }
        | FormError::UnsupportedQuadrature { .. }
        | FormError::DegreeTooHigh { .. }
        | FormError::NoSimplices { .. }
        | FormError::NoTrials => CliError::usage(e.to_string()),
    }
}

fn mean_error(e: MeanError) -> CliError {
    match e {
        MeanError::Chain(inner) => chain_error(inner),
        MeanError::Form(inner) => form_error(inner),
        MeanError::Norm(inner) => norm_error(inner),
        MeanError::Lp(inner) => lp_error(inner),
        MeanError::EmptyShifts
        | MeanError::EmptyProbes
        | MeanError::DuplicateShift
        | MeanError::MissingZeroShift => CliError::usage(e.to_string()),
        MeanError::SolverFailure { .. } | MeanError::Certificate { .. } => {
            CliError::compute(e.to_string())
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Real,
    Integer,
}

impl From<ModeArg> for FlatMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Real => FlatMode::Real,
            ModeArg::Integer => FlatMode::Integer,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StrategyArg {
    Lp,
    Uniform,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Lp => Strategy::Lp,
            StrategyArg::Uniform => Strategy::Uniform,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "curr",
    version,
    about = "Integral currents on simplicial complexes: norms, forms, balls, invariant means"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Complex loading and validation
    Complex {
        #[command(subcommand)]
        cmd: ComplexCmd,
    },
    /// Chain operations: boundary, mass, flat norm
    Chain {
        #[command(subcommand)]
        cmd: ChainCmd,
    },
    /// Cochain operations: pairing, comass, discretization
    Form {
        #[command(subcommand)]
        cmd: FormCmd,
    },
    /// The unit-modulus functional g_k
    Gk {
        #[command(subcommand)]
        cmd: GkCmd,
    },
    /// Mass-ball enumeration and sampling
    Ball {
        #[command(subcommand)]
        cmd: BallCmd,
    },
    /// Integer cycle lattice
    Cycles {
        #[command(subcommand)]
        cmd: CyclesCmd,
    },
    /// Invariant-mean estimation
    Mean {
        #[command(subcommand)]
        cmd: MeanCmd,
    },
}

#[derive(Subcommand, Debug)]
enum ComplexCmd {
    /// Re-verify structural invariants (∂∂ = 0, volumes, face closure)
    Validate {
        #[arg(long)]
        complex: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum ChainCmd {
    /// Boundary ∂T, one dimension down
    Boundary {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        chain: PathBuf,
    },
    /// Mass Σ|c_σ|·vol(σ) and the normal norm M(T) + M(∂T)
    Mass {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        chain: PathBuf,
    },
    /// Flat norm with decomposition certificate T = R + ∂S
    Flatnorm {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        chain: PathBuf,
        #[arg(long, value_enum, default_value = "real")]
        mode: ModeArg,
    },
}

#[derive(Subcommand, Debug)]
enum FormCmd {
    /// Bilinear pairing ⟨k, T⟩
    Pair {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
        #[arg(long)]
        chain: PathBuf,
    },
    /// Discrete comass max|k(σ)|/vol(σ)
    Comass {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
    },
    /// Integrate a smooth form over every simplex of its degree
    Discretize {
        #[arg(long)]
        complex: PathBuf,
        /// Form spec: `const:<c,...>` or `linear:<c0,c1,..,cn;...>`
        #[arg(long)]
        form: String,
        /// Form degree m
        #[arg(long)]
        dim: usize,
        /// Quadrature order (1 = centroid, 2 = Gauss/symmetric)
        #[arg(long, default_value_t = 2)]
        order: u8,
    },
}

#[derive(Subcommand, Debug)]
enum GkCmd {
    /// g_k(X) = exp(i·(⟨k,X⟩ + ‖X‖_F))
    Eval {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
        #[arg(long)]
        chain: PathBuf,
        #[arg(long, value_enum, default_value = "real")]
        mode: ModeArg,
    },
    /// Sample triples from a mass ball and verify the Lipschitz bound
    Lipcheck {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
        #[arg(long)]
        cap: f64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "real")]
        mode: ModeArg,
    },
}

#[derive(Subcommand, Debug)]
enum BallCmd {
    /// Enumerate every integer chain with M(T) + M(∂T) ≤ cap
    Enum {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        cap: f64,
    },
    /// Draw chains i.i.d. from the ball by rejection sampling
    Sample {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        cap: f64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum CyclesCmd {
    /// Primitive integer basis of ker ∂_m
    Basis {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        dim: usize,
    },
}

#[derive(Subcommand, Debug)]
enum MeanCmd {
    /// Flatten f over sampled shifts; report ⟨f⟩ with certified ε
    Estimate {
        #[command(flatten)]
        common: MeanCommon,
    },
    /// Compare the means of f and f(·+Y)
    Shiftcheck {
        #[command(flatten)]
        common: MeanCommon,
        /// Chain JSON for the translation Y; drawn from the sample stream
        /// when omitted
        #[arg(long)]
        ychain: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(clap::Args, Debug)]
struct MeanCommon {
    #[arg(long)]
    complex: PathBuf,
    /// Chain dimension m
    #[arg(long)]
    dim: usize,
    /// Function spec: constant:<re[,im]>, parity, phase, gk
    #[arg(long)]
    function: String,
    /// Cochain JSON for phase/gk functions
    #[arg(long)]
    cochain: Option<PathBuf>,
    /// Number of shifts (the zero chain plus sampled distinct chains)
    #[arg(long, default_value_t = 4)]
    shifts: usize,
    /// Number of probe chains
    #[arg(long, default_value_t = 8)]
    probes: usize,
    /// Normal-norm cap for the sampling ball (mass cap in cycles-only mode)
    #[arg(long)]
    cap: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "lp")]
    strategy: StrategyArg,
    /// Restrict shifts, probes, and Y to chains with ∂T = 0
    #[arg(long)]
    cycles_only: bool,
    /// Flat-norm mode for gk functions
    #[arg(long, value_enum, default_value = "real")]
    mode: ModeArg,
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let rendered = e.to_string();
            let first = rendered
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("usage error");
            eprintln!("{first}");
            return 2;
        }
    };
    match execute(cli.command) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(e) => {
            eprintln!("curr: {}", e.message);
            e.code
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    let text = read_file(path)?;
    scx::parse_scx(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn load_chain(path: &Path, complex: &SimplicialComplex) -> Result<AnyChain, CliError> {
    let text = read_file(path)?;
    let chain = wire::chain_from_str(&text)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    chain
        .validate(complex)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    Ok(chain)
}

fn load_integer_chain(path: &Path, complex: &SimplicialComplex) -> Result<IntChain, CliError> {
    match load_chain(path, complex)? {
        AnyChain::Integer(chain) => Ok(chain),
        AnyChain::Real(_) => Err(CliError::usage(format!(
            "{}: integer-mode chain required",
            path.display()
        ))),
    }
}

fn load_cochain(path: &Path, complex: &SimplicialComplex) -> Result<Cochain, CliError> {
    let text = read_file(path)?;
    let k = wire::cochain_from_str(&text)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let count = complex.simplex_count(k.dim());
    for (index, _) in k.iter() {
        if index >= count {
            return Err(CliError::usage(format!(
                "{}: cochain index {index} out of range (complex has {count} simplices of dimension {})",
                path.display(),
                k.dim()
            )));
        }
    }
    Ok(k)
}

enum SampleStream<'a> {
    Ball(BallSampler<'a>),
    Cycles(CycleSampler<'a>),
}

impl SampleStream<'_> {
    fn draw(&mut self) -> Result<IntChain, CliError> {
        match self {
            SampleStream::Ball(s) => s.draw().map_err(ball_error),
            SampleStream::Cycles(s) => s.draw().map_err(ball_error),
        }
    }
}

/// Deterministic shift/probe assembly for the mean subcommands: the shift
/// family starts with the zero chain and grows with distinct draws; probes
/// are then taken from the same stream.
fn assemble_mean_inputs<'a>(
    complex: &'a SimplicialComplex,
    common: &MeanCommon,
    lattice: &'a Option<curr_core::CycleLattice>,
) -> Result<(ShiftFamily, Vec<IntChain>, SampleStream<'a>), CliError> {
    if common.shifts == 0 {
        return Err(CliError::usage("--shifts must be at least 1"));
    }
    if common.probes == 0 {
        return Err(CliError::usage("--probes must be at least 1"));
    }
    let mut stream = match lattice {
        Some(lattice) => SampleStream::Cycles(
            CycleSampler::new(complex, lattice, common.cap, common.seed).map_err(ball_error)?,
        ),
        None => SampleStream::Ball(
            BallSampler::new(
                complex,
                &MassBall {
                    dim: common.dim,
                    cap: common.cap,
                },
                common.seed,
            )
            .map_err(ball_error)?,
        ),
    };

    let mut shifts = vec![IntChain::zero(common.dim)];
    let mut attempts = 0usize;
    while shifts.len() < common.shifts {
        attempts += 1;
        if attempts > 10_000 + 1_000 * common.shifts {
            return Err(CliError::compute(format!(
                "could not assemble {} distinct shifts from the sampling ball; reduce --shifts or raise --cap",
                common.shifts
            )));
        }
        let candidate = stream.draw()?;
        if !shifts.contains(&candidate) {
            shifts.push(candidate);
        }
    }
    let shifts = ShiftFamily::new(
        shifts,
        ShiftProvenance::Sampled { seed: common.seed },
    )
    .map_err(mean_error)?;

    let probes: Vec<IntChain> = (0..common.probes)
        .map(|_| stream.draw())
        .collect::<Result<_, _>>()?;
    Ok((shifts, probes, stream))
}

fn mean_function(
    complex: &SimplicialComplex,
    common: &MeanCommon,
) -> Result<FunctionSpec, CliError> {
    let cochain = match &common.cochain {
        Some(path) => Some(load_cochain(path, complex)?),
        None => None,
    };
    formspec::parse_function(&common.function, cochain, common.mode.into())
        .map_err(CliError::usage)
}

fn execute(command: Command) -> Result<String, CliError> {
    match command {
        Command::Complex { cmd } => match cmd {
            ComplexCmd::Validate { complex } => {
                let cx = load_complex(&complex)?;
                let report = cx.validate();
                Ok(wire::render(&wire::validation_to_doc(&report)))
            }
        },
        Command::Chain { cmd } => match cmd {
            ChainCmd::Boundary { complex, chain } => {
                let cx = load_complex(&complex)?;
                let t = load_chain(&chain, &cx)?;
                let doc = match t {
                    AnyChain::Integer(t) => {
                        ChainDoc::from_typed(&cx.boundary(&t).map_err(chain_error)?)
                    }
                    AnyChain::Real(t) => {
                        ChainDoc::from_typed(&cx.boundary(&t).map_err(chain_error)?)
                    }
                }
                .map_err(|e| CliError::compute(e.to_string()))?;
                Ok(wire::render(&doc))
            }
            ChainCmd::Mass { complex, chain } => {
                let cx = load_complex(&complex)?;
                let t = load_chain(&chain, &cx)?;
                let (mass_value, normal_value) = match &t {
                    AnyChain::Integer(t) => (
                        mass(&cx, t).map_err(chain_error)?,
                        normal_norm(&cx, t).map_err(chain_error)?,
                    ),
                    AnyChain::Real(t) => (
                        mass(&cx, t).map_err(chain_error)?,
                        normal_norm(&cx, t).map_err(chain_error)?,
                    ),
                };
                Ok(wire::render(&json!({
                    "mass": mass_value,
                    "normal_norm": normal_value,
                })))
            }
            ChainCmd::Flatnorm {
                complex,
                chain,
                mode,
            } => {
                let cx = load_complex(&complex)?;
                let t = load_chain(&chain, &cx)?;
                let doc = match (FlatMode::from(mode), &t) {
                    (FlatMode::Real, AnyChain::Integer(t)) => {
                        let d = flat_norm_real(&cx, t).map_err(norm_error)?;
                        wire::flat_to_doc(&d, FlatMode::Real)
                    }
                    (FlatMode::Real, AnyChain::Real(t)) => {
                        let d = flat_norm_real(&cx, t).map_err(norm_error)?;
                        wire::flat_to_doc(&d, FlatMode::Real)
                    }
                    (FlatMode::Integer, AnyChain::Integer(t)) => {
                        let d = flat_norm_integer(&cx, t).map_err(norm_error)?;
                        wire::flat_to_doc(&d, FlatMode::Integer)
                    }
                    (FlatMode::Integer, AnyChain::Real(_)) => {
                        return Err(CliError::usage(
                            "integer-mode flat norm requires an integer-mode chain",
                        ));
                    }
                }
                .map_err(|e| CliError::compute(e.to_string()))?;
                Ok(wire::render(&doc))
            }
        },
        Command::Form { cmd } => match cmd {
            FormCmd::Pair {
                complex,
                cochain,
                chain,
            } => {
                let cx = load_complex(&complex)?;
                let k = load_cochain(&cochain, &cx)?;
                let t = load_chain(&chain, &cx)?;
                let value = match &t {
                    AnyChain::Integer(t) => pair(&cx, &k, t).map_err(form_error)?,
                    AnyChain::Real(t) => pair(&cx, &k, t).map_err(form_error)?,
                };
                Ok(wire::render(&json!({ "pair": value })))
            }
            FormCmd::Comass { complex, cochain } => {
                let cx = load_complex(&complex)?;
                let k = load_cochain(&cochain, &cx)?;
                let value = comass(&cx, &k).map_err(form_error)?;
                Ok(wire::render(&json!({ "comass": value })))
            }
            FormCmd::Discretize {
                complex,
                form,
                dim,
                order,
            } => {
                let cx = load_complex(&complex)?;
                let order = match order {
                    1 => QuadratureOrder::One,
                    2 => QuadratureOrder::Two,
                    other => {
                        return Err(CliError::usage(format!(
                            "--order must be 1 or 2, got {other}"
                        )));
                    }
                };
                let field =
                    formspec::parse_form(&form, dim, cx.ambient_dim()).map_err(CliError::usage)?;
                let k = discretize_form(&cx, field.as_ref(), order).map_err(form_error)?;
                Ok(wire::render(&wire::cochain_to_doc(&k)))
            }
        },
        Command::Gk { cmd } => match cmd {
            GkCmd::Eval {
                complex,
                cochain,
                chain,
                mode,
            } => {
                let cx = load_complex(&complex)?;
                let k = load_cochain(&cochain, &cx)?;
                let x = load_integer_chain(&chain, &cx)?;
                let mode = FlatMode::from(mode);
                let pairing = pair(&cx, &k, &x).map_err(form_error)?;
                let flat_value = flat_norm_value(&cx, &x, mode).map_err(norm_error)?;
                let value = curr_core::ComplexScalar::unit_phase(pairing + flat_value);
                Ok(wire::render(&wire::GkDoc {
                    re: value.re,
                    im: value.im,
                    phase: pairing + flat_value,
                    pairing,
                    flat_value,
                    mode: mode.to_string(),
                }))
            }
            GkCmd::Lipcheck {
                complex,
                cochain,
                cap,
                trials,
                seed,
                mode,
            } => {
                let cx = load_complex(&complex)?;
                let k = load_cochain(&cochain, &cx)?;
                let mode = FlatMode::from(mode);
                let report =
                    verify_gk_lipschitz(&cx, &k, trials, seed, cap, mode).map_err(form_error)?;
                Ok(wire::render(&wire::lipschitz_to_doc(&report, seed, cap, mode)))
            }
        },
        Command::Ball { cmd } => match cmd {
            BallCmd::Enum { complex, dim, cap } => {
                let cx = load_complex(&complex)?;
                let chains = enumerate_ball(&cx, &MassBall { dim, cap }).map_err(ball_error)?;
                let docs: Vec<ChainDoc> = chains
                    .iter()
                    .map(ChainDoc::from_typed)
                    .collect::<Result<_, _>>()
                    .map_err(|e| CliError::compute(e.to_string()))?;
                Ok(wire::render(&docs))
            }
            BallCmd::Sample {
                complex,
                dim,
                cap,
                count,
                seed,
            } => {
                let cx = load_complex(&complex)?;
                let chains =
                    sample_ball(&cx, &MassBall { dim, cap }, count, seed).map_err(ball_error)?;
                let docs: Vec<ChainDoc> = chains
                    .iter()
                    .map(ChainDoc::from_typed)
                    .collect::<Result<_, _>>()
                    .map_err(|e| CliError::compute(e.to_string()))?;
                Ok(wire::render(&docs))
            }
        },
        Command::Cycles { cmd } => match cmd {
            CyclesCmd::Basis { complex, dim } => {
                let cx = load_complex(&complex)?;
                let lattice = cycle_basis(&cx, dim).map_err(ball_error)?;
                let basis: Vec<ChainDoc> = lattice
                    .basis()
                    .iter()
                    .map(ChainDoc::from_typed)
                    .collect::<Result<_, _>>()
                    .map_err(|e| CliError::compute(e.to_string()))?;
                Ok(wire::render(&wire::BasisDoc {
                    dim,
                    rank: lattice.rank(),
                    basis,
                }))
            }
        },
        Command::Mean { cmd } => match cmd {
            MeanCmd::Estimate { common } => {
                let cx = load_complex(&common.complex)?;
                let f = mean_function(&cx, &common)?;
                let lattice = if common.cycles_only {
                    Some(cycle_basis(&cx, common.dim).map_err(ball_error)?)
                } else {
                    None
                };
                let (shifts, probes, _) = assemble_mean_inputs(&cx, &common, &lattice)?;
                let estimate =
                    estimate_mean(&cx, &f, &shifts, &probes, common.strategy.into())
                        .map_err(mean_error)?;
                let doc = wire::mean_to_doc(&estimate, shifts.shifts())
                    .map_err(|e| CliError::compute(e.to_string()))?;
                Ok(wire::render(&doc))
            }
            MeanCmd::Shiftcheck {
                common,
                ychain,
                tol,
            } => {
                let cx = load_complex(&common.complex)?;
                let f = mean_function(&cx, &common)?;
                let lattice = if common.cycles_only {
                    Some(cycle_basis(&cx, common.dim).map_err(ball_error)?)
                } else {
                    None
                };
                let (shifts, probes, mut stream) =
                    assemble_mean_inputs(&cx, &common, &lattice)?;
                let y = match &ychain {
                    Some(path) => {
                        let y = load_integer_chain(path, &cx)?;
                        if common.cycles_only
                            && !cx.boundary(&y).map_err(chain_error)?.is_zero()
                        {
                            return Err(CliError::usage(
                                "cycles-only mode requires ∂Y = 0",
                            ));
                        }
                        y
                    }
                    None => stream.draw()?,
                };
                let report = check_shift_invariance(
                    &cx,
                    &f,
                    &shifts,
                    &probes,
                    &y,
                    common.strategy.into(),
                    tol,
                )
                .map_err(mean_error)?;
                let doc = wire::shift_check_to_doc(&report, shifts.shifts())
                    .map_err(|e| CliError::compute(e.to_string()))?;
                Ok(wire::render(&doc))
            }
        },
    }
}
