//! Command-line surface.
//!
//! Every subcommand reads plain-text complex files and emits a
//! deterministic key-value report on standard output. Exit codes: 0 on
//! success, 1 on argument or file-syntax errors, 2 on validation or
//! geometry failures, 3 when a verification suite fails its tolerance.

use std::fmt::Display;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::complex::SimplicialComplex;
use crate::constraints::{
    constraint_rank, delta_zero_ledger, enumerate_constraints, select_kept, ConstraintMatrix,
};
use crate::fixtures;
use crate::geometry::{
    curvature_action, curvature_action_split, simplex_volume, triangle_angle_data, ActionParams,
    GeometryError, SquaredLengthMap,
};
use crate::io::{fixture_text, ComplexFile, FileError};
use crate::measure::{assemble_measure_report, evaluate_volume_factor, LocalMeasureSpec};
use crate::report::Report;
use crate::verify::{run_suite, Suite, SuiteReport};

#[derive(Parser)]
#[command(
    name = "simmeasure",
    about = "Simplicial complexes, curvature actions, and path-measure assembly",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ComplexArg {
    /// Path to a complex file.
    #[arg(long)]
    complex: PathBuf,
}

#[derive(Args)]
struct LengthsArg {
    /// Squared edge lengths: a number (uniform), `uniform:<x>`, or a path
    /// to a file of `length`/`plength` lines. Defaults to lengths embedded
    /// in the complex file.
    #[arg(long)]
    lengths: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check structural invariants of a complex.
    Validate {
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Face counts, star shapes, and edge-graph summaries.
    Info {
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Volumes of all faces.
    Volumes {
        #[command(flatten)]
        complex: ComplexArg,
        #[command(flatten)]
        lengths: LengthsArg,
    },
    /// Curvature action: deficits, global form, and per-simplex split form.
    Action {
        #[command(flatten)]
        complex: ComplexArg,
        #[command(flatten)]
        lengths: LengthsArg,
        /// Overall action coefficient (overrides --newton-g).
        #[arg(long)]
        coefficient: Option<f64>,
        /// Newton constant; the coefficient becomes 1/(8 pi G).
        #[arg(long = "newton-g")]
        newton_g: Option<f64>,
    },
    /// Continuity constraints: counts, exact rank, kept/redundant split.
    Constraints {
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Assembled measure report: exponents, kept deltas, volume factor.
    Measure {
        #[command(flatten)]
        complex: ComplexArg,
        #[command(flatten)]
        lengths: LengthsArg,
    },
    /// Run numerical verification suites.
    Verify {
        /// Suite name: detm, fresnel, rank, glue, flatness, or all.
        #[arg(long)]
        suite: String,
        /// Override of the suite's primary tolerance.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Write a bundled fixture as a complex file.
    Gen {
        /// Fixture name: boundary5, gluedpair, or chain.
        fixture: String,
        /// Number of simplices (chain only).
        k: Option<usize>,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn parse(message: impl Display) -> Self {
        CliError {
            code: 1,
            message: message.to_string(),
        }
    }

    fn invalid(message: impl Display) -> Self {
        CliError {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<FileError> for CliError {
    fn from(e: FileError) -> Self {
        match e {
            FileError::Parse { .. } => CliError::parse(e),
            _ => CliError::invalid(e),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        CliError::invalid(e)
    }
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn execute(command: Command) -> Result<(String, i32), CliError> {
    match command {
        Command::Validate { complex } => cmd_validate(&complex),
        Command::Info { complex } => cmd_info(&complex),
        Command::Volumes { complex, lengths } => cmd_volumes(&complex, &lengths),
        Command::Action {
            complex,
            lengths,
            coefficient,
            newton_g,
        } => cmd_action(&complex, &lengths, coefficient, newton_g),
        Command::Constraints { complex } => cmd_constraints(&complex),
        Command::Measure { complex, lengths } => cmd_measure(&complex, &lengths),
        Command::Verify { suite, tolerance } => cmd_verify(&suite, tolerance),
        Command::Gen { fixture, k, out } => cmd_gen(&fixture, k, out.as_deref()),
    }
}

fn load_file(arg: &ComplexArg) -> Result<ComplexFile, CliError> {
    let text = fs::read_to_string(&arg.complex)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", arg.complex.display())))?;
    Ok(ComplexFile::parse(&text)?)
}

fn load_complex(arg: &ComplexArg) -> Result<(ComplexFile, SimplicialComplex), CliError> {
    let file = load_file(arg)?;
    let complex = file.build_complex()?;
    Ok((file, complex))
}

/// Resolves `--lengths` to a global squared-length map plus a source label.
fn resolve_lengths(
    spec: &LengthsArg,
    file: &ComplexFile,
    complex: &SimplicialComplex,
) -> Result<(SquaredLengthMap, String), CliError> {
    let (map, label) = match &spec.lengths {
        Some(raw) => {
            if let Ok(x) = raw.parse::<f64>() {
                (uniform_map(complex, x)?, format!("uniform {x:e}"))
            } else if let Some(x) = raw.strip_prefix("uniform:") {
                let x: f64 = x
                    .parse()
                    .map_err(|_| CliError::parse(format!("bad uniform length {raw:?}")))?;
                (uniform_map(complex, x)?, format!("uniform {x:e}"))
            } else {
                let text = fs::read_to_string(raw)
                    .map_err(|e| CliError::parse(format!("cannot read {raw}: {e}")))?;
                let lengths_file = ComplexFile::parse(&text)?;
                (lengths_file.global_length_map()?, "file".to_string())
            }
        }
        None => (file.global_length_map()?, "embedded".to_string()),
    };
    if let Some(edge) = map.missing_edges(complex).into_iter().next() {
        return Err(CliError::invalid(format!(
            "no squared length for edge {edge}; pass --lengths"
        )));
    }
    Ok((map, label))
}

fn uniform_map(complex: &SimplicialComplex, x: f64) -> Result<SquaredLengthMap, CliError> {
    if !x.is_finite() || x <= 0.0 {
        return Err(CliError::parse(format!("uniform length must be positive, got {x}")));
    }
    Ok(SquaredLengthMap::uniform(complex, x))
}

fn push_counts(report: &mut Report, complex: &SimplicialComplex) {
    let validation = complex.validate();
    report.push("complex.four_simplices", validation.four_simplices);
    report.push("complex.vertices", validation.face_counts[0]);
    report.push("complex.edges", validation.face_counts[1]);
    report.push("complex.triangles", validation.face_counts[2]);
    report.push("complex.three_faces", validation.face_counts[3]);
    report.push(
        "complex.interior_three_faces",
        validation.face_counts[3] - validation.boundary_three_faces,
    );
    report.push(
        "complex.boundary_three_faces",
        validation.boundary_three_faces,
    );
}

fn cmd_validate(arg: &ComplexArg) -> Result<(String, i32), CliError> {
    let mut report = Report::new();
    report.push("report", "validate");
    let file = load_file(arg)?;
    match file.build_complex() {
        Ok(complex) => {
            let validation = complex.validate();
            push_counts(&mut report, &complex);
            report.push("complex.closed", validation.is_closed());
            report.push("complex.valid", validation.is_valid());
            report.push("fingerprint", format!("{:016x}", complex.fingerprint()));
            for (i, violation) in validation.violations.iter().enumerate() {
                report.push(format!("violation.{i}"), violation);
            }
            let code = if validation.is_valid() { 0 } else { 2 };
            Ok((report.to_text(), code))
        }
        Err(e) => {
            report.push("complex.valid", false);
            report.push("violation.0", &e);
            Ok((report.to_text(), 2))
        }
    }
}

fn cmd_info(arg: &ComplexArg) -> Result<(String, i32), CliError> {
    let (_, complex) = load_complex(arg)?;
    let mut report = Report::new();
    report.push("report", "info");
    push_counts(&mut report, &complex);

    let mut closed = 0usize;
    let mut open = 0usize;
    let mut non_fan = 0usize;
    for triangle in complex.faces(2) {
        match complex.triangle_star(triangle) {
            Ok(star) if star.closed => closed += 1,
            Ok(_) => open += 1,
            Err(_) => non_fan += 1,
        }
    }
    report.push("triangles.closed_stars", closed);
    report.push("triangles.open_stars", open);
    report.push("triangles.non_fan_stars", non_fan);

    let mut connected = 0usize;
    let mut total_cycle_rank = 0usize;
    for edge in complex.faces(1) {
        let graph = complex.edge_star_graph(edge).map_err(CliError::invalid)?;
        if graph.components == 1 {
            connected += 1;
        }
        total_cycle_rank += graph.cycle_rank();
    }
    report.push("edges.connected_star_graphs", connected);
    report.push("edges.total_cycle_rank", total_cycle_rank);
    report.push("fingerprint", format!("{:016x}", complex.fingerprint()));
    Ok((report.to_text(), 0))
}

fn cmd_volumes(arg: &ComplexArg, lengths: &LengthsArg) -> Result<(String, i32), CliError> {
    let (file, complex) = load_complex(arg)?;
    let (map, label) = resolve_lengths(lengths, &file, &complex)?;
    let mut report = Report::new();
    report.push("report", "volumes");
    report.push("lengths.source", label);
    for dim in 1..=4 {
        let mut total = 0.0;
        for face in complex.faces(dim) {
            let volume = simplex_volume(face, &map)?;
            report.push_f64(format!("volume.{dim}.{face}"), volume);
            total += volume;
        }
        report.push_f64(format!("total.{dim}"), total);
    }
    Ok((report.to_text(), 0))
}

fn cmd_action(
    arg: &ComplexArg,
    lengths: &LengthsArg,
    coefficient: Option<f64>,
    newton_g: Option<f64>,
) -> Result<(String, i32), CliError> {
    let (file, complex) = load_complex(arg)?;
    let (map, label) = resolve_lengths(lengths, &file, &complex)?;

    let params = match (coefficient, newton_g) {
        (Some(c), _) => ActionParams::new(1.0)?.with_coefficient(c)?,
        (None, Some(g)) => ActionParams::new(g)?,
        (None, None) => ActionParams::new(1.0)?.with_coefficient(1.0)?,
    };

    let mut report = Report::new();
    report.push("report", "action");
    report.push("lengths.source", label);
    report.push_f64("coefficient", params.coefficient);
    if let Some(g) = newton_g {
        report.push_f64("newton_constant", g);
    }

    let mut closed = 0usize;
    for triangle in complex.faces(2) {
        let data = triangle_angle_data(&complex, triangle, &map)?;
        if let Some(deficit) = data.deficit {
            closed += 1;
            report.push_f64(format!("deficit.{triangle}"), deficit);
            report.push_f64(format!("area.{triangle}"), data.area);
        }
    }
    report.push("triangles.closed_stars", closed);

    let global = curvature_action(&complex, &map, &params)?;
    report.push_f64("action.global", global);

    let per = file.per_simplex_length_map(&complex)?;
    let split = curvature_action_split(&complex, &per, &params)?;
    report.push_f64("action.split", split);
    Ok((report.to_text(), 0))
}

fn cmd_constraints(arg: &ComplexArg) -> Result<(String, i32), CliError> {
    let (_, complex) = load_complex(arg)?;
    let constraints = enumerate_constraints(&complex);
    let matrix = ConstraintMatrix::from_constraints(&complex, &constraints)
        .map_err(CliError::invalid)?;
    let rank = constraint_rank(&matrix);
    let kept = select_kept(&complex);

    let mut report = Report::new();
    report.push("report", "constraints");
    report.push("constraints.variables", matrix.variables.len());
    report.push("constraints.count", constraints.len());
    report.push("constraints.rank", rank);
    report.push("constraints.kept", kept.kept.len());
    report.push("constraints.redundant", kept.redundant.len());
    report.push("kernel.dimension", matrix.kernel_dimension());
    report.push("edges.count", complex.face_count(1));
    for (i, c) in kept.kept.iter().enumerate() {
        report.push(format!("kept.{i}"), format!("face {} edge {}", c.face, c.edge));
    }
    for (i, c) in kept.redundant.iter().enumerate() {
        report.push(
            format!("redundant.{i}"),
            format!("face {} edge {}", c.face, c.edge),
        );
    }
    Ok((report.to_text(), 0))
}

fn cmd_measure(arg: &ComplexArg, lengths: &LengthsArg) -> Result<(String, i32), CliError> {
    let (file, complex) = load_complex(arg)?;
    let kept = select_kept(&complex);
    let ledger = delta_zero_ledger(&complex);
    let measure = assemble_measure_report(&complex, &kept, &ledger, LocalMeasureSpec::default())
        .map_err(CliError::invalid)?;

    let mut report = Report::new();
    report.push("report", "measure");
    report.push("local_measure", &measure.local_measure);
    report.push("regularization", measure.regularization);
    report.push("exponents.count", measure.volume_exponents.len());
    for (simplex, exponent) in &measure.volume_exponents {
        report.push(format!("exponent.{simplex}"), exponent);
    }
    report.push("kept_deltas.count", measure.kept_deltas.len());
    for (i, c) in measure.kept_deltas.iter().enumerate() {
        report.push(
            format!("kept.{i}"),
            format!("face {} edge {}", c.face, c.edge),
        );
    }
    for (i, note) in measure.notes.iter().enumerate() {
        report.push(format!("note.{i}"), note);
    }

    let have_lengths = lengths.lengths.is_some() || file.has_lengths();
    if have_lengths {
        let (map, label) = resolve_lengths(lengths, &file, &complex)?;
        report.push("lengths.source", label);
        let value = evaluate_volume_factor(&measure, &map).map_err(CliError::invalid)?;
        report.push_f64("volume_factor.log", value);
    }
    Ok((report.to_text(), 0))
}

fn push_suite(report: &mut Report, suite_report: &SuiteReport) {
    for check in &suite_report.checks {
        let prefix = format!("check.{}.{}", suite_report.suite, check.name);
        report.push_f64(format!("{prefix}.value"), check.value);
        report.push_f64(format!("{prefix}.tolerance"), check.tolerance);
        report.push(
            format!("{prefix}.status"),
            if check.passed { "pass" } else { "fail" },
        );
    }
    report.push(
        format!("suite.{}.passed", suite_report.suite),
        suite_report.passed(),
    );
}

fn cmd_verify(suite: &str, tolerance: Option<f64>) -> Result<(String, i32), CliError> {
    let suites: Vec<Suite> = if suite.eq_ignore_ascii_case("all") {
        Suite::all().to_vec()
    } else {
        vec![suite.parse().map_err(CliError::parse)?]
    };
    if let Some(t) = tolerance {
        if !t.is_finite() || t <= 0.0 {
            return Err(CliError::parse(format!("tolerance must be positive, got {t}")));
        }
    }

    let mut report = Report::new();
    report.push("report", "verify");
    let mut all_passed = true;
    for suite in suites {
        let suite_report = run_suite(suite, tolerance);
        all_passed &= suite_report.passed();
        push_suite(&mut report, &suite_report);
    }
    report.push("passed", all_passed);
    Ok((report.to_text(), if all_passed { 0 } else { 3 }))
}

fn cmd_gen(fixture: &str, k: Option<usize>, out: Option<&std::path::Path>) -> Result<(String, i32), CliError> {
    let complex = match fixture {
        "boundary5" => fixtures::boundary_of_5_simplex(),
        "gluedpair" => fixtures::glued_pair(),
        "chain" => {
            let k = k.ok_or_else(|| CliError::parse("chain needs a length argument"))?;
            fixtures::chain(k).map_err(CliError::parse)?
        }
        other => {
            return Err(CliError::parse(format!(
                "unknown fixture {other:?} (expected boundary5, gluedpair, chain)"
            )))
        }
    };
    let text = fixture_text(&complex);
    match out {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| CliError::parse(format!("cannot write {}: {e}", path.display())))?;
            let mut report = Report::new();
            report.push("report", "gen");
            report.push("fixture", fixture);
            report.push("written", path.display());
            Ok((report.to_text(), 0))
        }
        None => Ok((text, 0)),
    }
}
