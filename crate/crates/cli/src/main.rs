use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use conic_locus::algebra::{ambient_ring, make_quotient, CIType, HilbertFunction, QuotientAlgebra};
use conic_locus::coeff::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use conic_locus::error::Error;
use conic_locus::gorenstein::{
    apolar_algebra, g_vector, is_decreasing_type, is_si_sequence, random_dual_generator,
};
use conic_locus::graded::GradedModule;
use conic_locus::locus::{
    expected_codim_ci, expected_codim_locus, is_lefschetz_conic, locus_ideal, locus_of_module,
    slp_range2_check, wlp_check, LocusMode, LocusOptions,
};
use conic_locus::module::make_module;
use conic_locus::parse::{parse_poly, parse_poly_list, parse_presentation};
use conic_locus::report::{certificate_json, certificate_text, locus_json, locus_text, VERSION};
use conic_locus::verify::{format_table, run_suite, Suite};

#[derive(Parser, Debug)]
#[command(name = "conic-locus", version, about = "Non-Lefschetz locus of conics in three variables")]
struct Cli {
    /// Coefficient field: `q` for the rationals or `p <prime>`; defaults to F_32003.
    #[arg(long, global = true, value_name = "q|p PRIME")]
    field: Option<String>,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function and socle degree.
    Hilbert(InputArgs),
    /// Ideal of the non-Lefschetz locus of conics.
    Locus {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
        /// Also estimate the codimension by random linear slices.
        #[arg(long)]
        slicing: bool,
        /// Slices per codimension for the estimate.
        #[arg(long, default_value_t = 3)]
        slices: usize,
        /// Skip the exact Gröbner codimension.
        #[arg(long, requires = "slicing")]
        no_exact: bool,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Expected codimension of the locus for a complete intersection type.
    ExpectedCodim {
        #[arg(long, num_args = 3, required = true, value_names = ["D1", "D2", "D3"])]
        ci: Vec<u32>,
    },
    /// Whether multiplication by one conic has maximal rank in every degree.
    ConicTest {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        conic: String,
    },
    /// Search for a weak Lefschetz element.
    Wlp {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Search for a linear form whose square has maximal rank everywhere.
    Slp2 {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Random Gorenstein algebra from a dual generator.
    Gorenstein {
        #[arg(long)]
        socle_degree: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also compute its locus.
        #[arg(long)]
        locus: bool,
    },
    /// Run verification suites; all of them when no suite is given.
    Verify {
        #[arg(long)]
        suite: Option<String>,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Monomial complete intersection (x1^d1, x2^d2, x3^d3).
    #[arg(long = "monomial-ci", visible_alias = "ci", num_args = 3, value_names = ["D1", "D2", "D3"])]
    monomial_ci: Option<Vec<u32>>,
    /// Complete intersection of random forms of the given degrees.
    #[arg(long, num_args = 3, value_names = ["D1", "D2", "D3"])]
    random_ci: Option<Vec<u32>>,
    /// Generators in x1, x2, x3, inline or `@file`.
    #[arg(long)]
    ideal: Option<String>,
    /// Module presentation file.
    #[arg(long)]
    module: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Full,
    Middle,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidType(_) | Error::WrongArity { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

type Outcome = Result<(String, Value, bool), Failure>;

enum Object<F: Field> {
    Algebra(QuotientAlgebra<F>),
    Module(conic_locus::module::ModulePresentation<F>),
}

impl<F: Field> Object<F> {
    fn graded(&self) -> &dyn GradedModule<F> {
        match self {
            Object::Algebra(a) => a,
            Object::Module(m) => m,
        }
    }
}

fn ci_type(d: &[u32]) -> Result<CIType, Failure> {
    CIType::new(d[0], d[1], d[2]).map_err(Failure::from)
}

fn read_source(src: &str) -> Result<String, Failure> {
    match src.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(src.to_string()),
    }
}

fn load<F: Field>(field: &F, input: &InputArgs) -> Result<Object<F>, Failure> {
    let given = [
        input.monomial_ci.is_some(),
        input.random_ci.is_some(),
        input.ideal.is_some(),
        input.module.is_some(),
    ];
    if given.iter().filter(|g| **g).count() != 1 {
        return Err(Failure::Usage(
            "give exactly one of --monomial-ci, --random-ci, --ideal, --module".into(),
        ));
    }
    let ring = ambient_ring(field.clone());
    if let Some(d) = &input.monomial_ci {
        return Ok(Object::Algebra(QuotientAlgebra::monomial_ci(field.clone(), ci_type(d)?)));
    }
    if let Some(d) = &input.random_ci {
        return Ok(Object::Algebra(QuotientAlgebra::random_ci(field.clone(), ci_type(d)?, input.seed)));
    }
    if let Some(src) = &input.ideal {
        let gens = parse_poly_list(&ring, &read_source(src)?)?;
        return Ok(Object::Algebra(make_quotient(&ring, gens)?));
    }
    let path = input.module.as_deref().unwrap();
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    let p = parse_presentation(&ring, &text)?;
    Ok(Object::Module(make_module(&ring, p.target_shifts, p.source_shifts, p.matrix)?))
}

fn hilbert<F: Field>(field: &F, input: &InputArgs) -> Outcome {
    let obj = load(field, input)?;
    let m = obj.graded();
    let hf = HilbertFunction::new(m.hilbert_values());
    let lowest = m.degree_range().map(|r| r.0).unwrap_or(0);
    let e = hf.socle_degree();
    let gorenstein = match &obj {
        Object::Algebra(a) => Some(a.is_gorenstein()),
        Object::Module(_) => None,
    };
    let mut text = format!("hilbert function: {hf}\n");
    if lowest != 0 {
        writeln!(text, "lowest degree: {lowest}").unwrap();
    }
    match e {
        Some(e) => writeln!(text, "socle degree: {e}").unwrap(),
        None => writeln!(text, "zero module").unwrap(),
    }
    writeln!(text, "length: {}", hf.total()).unwrap();
    if let Some(g) = gorenstein {
        writeln!(text, "gorenstein: {g}").unwrap();
    }
    let value = json!({
        "version": VERSION,
        "field": field.name(),
        "hf": hf.values(),
        "lowest_degree": lowest,
        "e": e,
        "length": hf.total(),
        "gorenstein": gorenstein,
        "seeds": [input.seed],
    });
    Ok((text, value, true))
}

#[allow(clippy::too_many_arguments)]
fn locus<F: Field>(
    field: &F,
    input: &InputArgs,
    mode: ModeArg,
    slicing: bool,
    slices: usize,
    no_exact: bool,
    trials: usize,
) -> Outcome {
    let obj = load(field, input)?;
    let opts = LocusOptions {
        mode: match mode {
            ModeArg::Full => LocusMode::FullIntersection,
            ModeArg::Middle => LocusMode::MiddleOnly,
        },
        seed: input.seed,
        wlp_trials: trials,
        slicing: slicing.then_some(slices),
        exact: !no_exact,
    };
    let report = match &obj {
        Object::Algebra(a) => locus_ideal(a, &opts)?,
        Object::Module(m) => {
            if opts.mode == LocusMode::MiddleOnly {
                return Err(Failure::Compute(
                    Error::MiddleModeUnjustified("only available for quotient algebras".into()).to_string(),
                ));
            }
            locus_of_module(m, &opts)?
        }
    };
    Ok((locus_text(&report), locus_json(&report), true))
}

fn expected_codim(ci: &[u32]) -> Outcome {
    let t = ci_type(ci)?;
    let classifier = expected_codim_ci(t);
    let hf = conic_locus::algebra::ci_hilbert_function(t);
    let determinantal = expected_codim_locus(&hf);
    let text = format!("{classifier}\n");
    let value = json!({
        "version": VERSION,
        "type": t.degrees(),
        "hf": hf.values(),
        "expected_codim": classifier,
        "expected_codim_middle_degree": determinantal,
    });
    Ok((text, value, true))
}

fn conic_test<F: Field>(field: &F, input: &InputArgs, conic: &str) -> Outcome {
    let obj = load(field, input)?;
    let m = obj.graded();
    let c = parse_poly(m.ring(), conic)?;
    let v = is_lefschetz_conic(m, &c)?;
    let mut text = match v.failing_degree {
        None => "Lefschetz: multiplication has maximal rank in every degree\n".to_string(),
        Some(i) => format!("non-Lefschetz: first failing degree i = {i}\n"),
    };
    for (i, rank, full) in &v.ranks {
        writeln!(text, "  degree {i}: rank {rank} of {full}").unwrap();
    }
    let value = json!({
        "version": VERSION,
        "field": field.name(),
        "conic": c.to_string(),
        "lefschetz": v.lefschetz,
        "failing_degree": v.failing_degree,
        "ranks": v.ranks,
        "seeds": [input.seed],
    });
    Ok((text, value, true))
}

fn lefschetz<F: Field>(field: &F, input: &InputArgs, trials: usize, square: bool) -> Outcome {
    let obj = load(field, input)?;
    let m = obj.graded();
    let cert = if square {
        slp_range2_check(m, input.seed, trials)
    } else {
        wlp_check(m, input.seed, trials)
    };
    Ok((format!("{}\n", certificate_text(&cert)), certificate_json(&cert, &field.name()), true))
}

fn gorenstein<F: Field>(field: &F, e: u32, seed: u64, with_locus: bool) -> Outcome {
    let g = random_dual_generator(field.clone(), e, seed)?;
    let a = apolar_algebra(&g)?;
    let hf = a.hilbert_function();
    let gv = g_vector(hf);
    let si = is_si_sequence(hf);
    let decreasing = is_decreasing_type(&gv);
    let mut text = format!(
        "dual generator: {}\nhilbert function: {hf}\ng-vector: {gv:?}\nSI-sequence: {si}\ndecreasing type: {decreasing}\n",
        g.form()
    );
    let mut value = json!({
        "version": VERSION,
        "field": field.name(),
        "e": e,
        "dual_generator": g.form().to_string(),
        "hf": hf.values(),
        "g_vector": gv,
        "si_sequence": si,
        "decreasing_type": decreasing,
        "seeds": [seed],
    });
    if with_locus {
        let opts = LocusOptions {
            seed,
            ..LocusOptions::default()
        };
        let r = locus_ideal(&a, &opts)?;
        text.push_str(&locus_text(&r));
        value["locus"] = locus_json(&r);
    }
    Ok((text, value, true))
}

fn verify(suite: Option<&str>) -> Outcome {
    let suites = match suite {
        Some(s) => vec![s.parse::<Suite>().map_err(Failure::Usage)?],
        None => Suite::ALL.to_vec(),
    };
    let mut text = String::new();
    let mut all = Vec::new();
    let mut ok = true;
    for s in suites {
        let checks = run_suite(s);
        ok &= checks.iter().all(|c| c.passed);
        let passed = checks.iter().filter(|c| c.passed).count();
        writeln!(text, "suite {s}: {passed}/{} passed", checks.len()).unwrap();
        text.push_str(&format_table(&checks));
        all.push(json!({ "suite": s, "checks": checks }));
    }
    Ok((text, json!({ "version": VERSION, "suites": all }), ok))
}

fn dispatch<F: Field>(field: &F, command: &Command) -> Outcome {
    match command {
        Command::Hilbert(input) => hilbert(field, input),
        Command::Locus {
            input,
            mode,
            slicing,
            slices,
            no_exact,
            trials,
        } => locus(field, input, *mode, *slicing, *slices, *no_exact, *trials),
        Command::ExpectedCodim { ci } => expected_codim(ci),
        Command::ConicTest { input, conic } => conic_test(field, input, conic),
        Command::Wlp { input, trials } => lefschetz(field, input, *trials, false),
        Command::Slp2 { input, trials } => lefschetz(field, input, *trials, true),
        Command::Gorenstein {
            socle_degree,
            seed,
            locus,
        } => gorenstein(field, *socle_degree, *seed, *locus),
        Command::Verify { suite } => verify(suite.as_deref()),
    }
}

enum FieldChoice {
    Q,
    P(u64),
}

/// `--field p 101` is two tokens on the command line; glue them into the
/// single value `p:101` before clap sees them.
fn join_field_tokens(args: Vec<String>) -> Vec<String> {
    let mut out = Vec::with_capacity(args.len());
    let mut it = args.into_iter().peekable();
    while let Some(a) = it.next() {
        if a == "--field" {
            if let Some(kind) = it.next() {
                let is_p = kind.eq_ignore_ascii_case("p");
                match it.peek() {
                    Some(n) if is_p && n.parse::<u64>().is_ok() => {
                        let n = it.next().unwrap();
                        out.push(format!("--field={kind}:{n}"));
                    }
                    _ => out.push(format!("--field={kind}")),
                }
                continue;
            }
        }
        out.push(a);
    }
    out
}

fn field_choice(spec: Option<&str>) -> Result<FieldChoice, Failure> {
    let Some(spec) = spec else { return Ok(FieldChoice::P(DEFAULT_PRIME as u64)) };
    if spec.eq_ignore_ascii_case("q") {
        return Ok(FieldChoice::Q);
    }
    let prime = spec
        .strip_prefix("p:")
        .or_else(|| spec.strip_prefix("P:"))
        .ok_or_else(|| Failure::Usage("--field expects `q` or `p <prime>`".into()))?;
    prime
        .parse()
        .map(FieldChoice::P)
        .map_err(|_| Failure::Usage(format!("invalid prime '{prime}'")))
}

fn run(cli: &Cli) -> Outcome {
    match field_choice(cli.field.as_deref())? {
        FieldChoice::Q => dispatch(&Rationals, &cli.command),
        FieldChoice::P(p) => {
            let f = PrimeField::new(p).map_err(|e| Failure::Usage(e.to_string()))?;
            dispatch(&f, &cli.command)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(join_field_tokens(std::env::args().collect()));
    match run(&cli) {
        Ok((text, value, ok)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                print!("{text}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
