//! Command-line front end: every capability as a reproducible batch command
//! with JSON, DOT or fixed-width table output.
//!
//! Exit codes: 0 success, 1 validation error, 2 verification failure,
//! 3 internal inconsistency. Failures print a JSON error object to stderr.
//! Internal parallelism is governed by the `RAYON_NUM_THREADS` environment
//! variable.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use isomers::error::Error;
use isomers::genetic::{genetic_digraph, identification_partition, node_label};
use isomers::group::PermGroup;
use isomers::inverse::{solve, CountConstraint};
use isomers::orbits::{burnside_count, orbit_space};
use isomers::partition::Partition;
use isomers::presets::{preset_group, preset_names};
use isomers::verify::{cross_check, system_report};

#[derive(Parser)]
#[command(
    name = "isomers",
    about = "Substitution-isomer counting under a permutation symmetry group",
    long_about = "Counts and lists orbits of site assignments under a symmetry group, \
                  derives substitution relations between them, and searches for groups \
                  consistent with observed counts.\n\n\
                  Thread count is controlled by RAYON_NUM_THREADS.",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of orbits of one shape
    Count(ShapeCmd),
    /// Full orbit decomposition of one shape
    Orbits(ShapeCmd),
    /// Cycle-type census of the group
    Census(CensusCmd),
    /// Digraph of single substitution steps between two shapes
    Genetic(GeneticCmd),
    /// Distinguishability blocks of same-shape orbits
    Identify(IdentifyCmd),
    /// Subgroup classes consistent with observed counts
    Inverse(InverseCmd),
    /// Consistency checks between the census and the orbit counts
    Verify(VerifyCmd),
}

#[derive(Args)]
struct GroupSpec {
    /// Generator in cycle notation; repeat for several generators
    #[arg(long = "group", value_name = "CYCLES", conflicts_with = "preset")]
    generators: Vec<String>,
    /// Built-in group preset
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
}

impl GroupSpec {
    fn resolve(&self, degree: usize) -> Result<PermGroup, Failure> {
        if let Some(name) = &self.preset {
            let group = preset_group(name).ok_or_else(|| {
                Failure::validation(format!(
                    "unknown preset {name:?}; available presets: {}",
                    preset_names().join(", ")
                ))
            })??;
            if group.degree() != degree {
                return Err(Failure::validation(format!(
                    "preset {name:?} has degree {}, but the command implies degree {degree}",
                    group.degree()
                )));
            }
            return Ok(group);
        }
        if self.generators.is_empty() {
            return Err(Failure::validation(
                "no group given; pass --group or --preset".into(),
            ));
        }
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        Ok(PermGroup::from_cycle_strings(&gens, degree)?)
    }
}

#[derive(Args)]
struct OutputSpec {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(short, long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Args)]
struct ShapeCmd {
    #[command(flatten)]
    group: GroupSpec,
    /// Shape as comma-separated parts, e.g. 4,2; the degree is their sum
    #[arg(long, value_name = "PARTS")]
    shape: String,
    #[command(flatten)]
    out: OutputSpec,
}

#[derive(Args)]
struct CensusCmd {
    #[command(flatten)]
    group: GroupSpec,
    /// Degree of the sites; defaults to the preset's degree
    #[arg(long)]
    degree: Option<usize>,
    #[command(flatten)]
    out: OutputSpec,
}

#[derive(Args)]
struct GeneticCmd {
    #[command(flatten)]
    group: GroupSpec,
    /// Upper shape, e.g. 4,2
    #[arg(long, value_name = "PARTS")]
    upper: String,
    /// Lower shape, one substitution step below the upper one
    #[arg(long, value_name = "PARTS")]
    lower: String,
    /// Also report how many moves witness each edge
    #[arg(long)]
    multiplicities: bool,
    #[command(flatten)]
    out: OutputSpec,
}

#[derive(Args)]
struct IdentifyCmd {
    #[command(flatten)]
    group: GroupSpec,
    /// Shape to analyze; repeat to refine across several shapes
    #[arg(long = "shape", value_name = "PARTS", required = true)]
    shapes: Vec<String>,
    #[command(flatten)]
    out: OutputSpec,
}

#[derive(Args)]
struct InverseCmd {
    /// JSON file with count constraints:
    /// [{"shape":[4,2],"relation":">=","value":3}, …]
    #[arg(long, value_name = "PATH")]
    constraints: PathBuf,
    /// Degree to search; defaults to the constraints' degree
    #[arg(long)]
    degree: Option<usize>,
    /// Keep only transitive groups
    #[arg(long)]
    transitive_only: bool,
    #[command(flatten)]
    out: OutputSpec,
}

#[derive(Args)]
struct VerifyCmd {
    #[command(flatten)]
    group: GroupSpec,
    /// Degree of the sites; defaults to the preset's degree
    #[arg(long)]
    degree: Option<usize>,
    #[command(flatten)]
    out: OutputSpec,
}

/// A failure with its exit code and a machine-readable error payload.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn validation(message: String) -> Failure {
        Failure {
            code: 1,
            kind: "validation",
            message,
        }
    }

    fn verification(message: String) -> Failure {
        Failure {
            code: 2,
            kind: "verification",
            message,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match err {
            Error::Inconsistency(_) => 3,
            _ => 1,
        };
        Failure {
            code,
            kind: if code == 3 { "internal" } else { "validation" },
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help and version requests are not failures
            if err.use_stderr() {
                let failure = Failure::validation(err.to_string());
                eprintln!("{}", failure_json(&failure));
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{}", failure_json(&failure));
            ExitCode::from(failure.code)
        }
    }
}

fn failure_json(failure: &Failure) -> String {
    #[derive(Serialize)]
    struct Payload<'a> {
        error: &'a str,
        kind: &'a str,
    }
    serde_json::to_string(&Payload {
        error: &failure.message,
        kind: failure.kind,
    })
    .expect("error payload serializes")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count(cmd) => {
            let shape = parse_shape(&cmd.shape)?;
            let group = cmd.group.resolve(shape.degree())?;
            let count = burnside_count(&group, &shape)?;
            let text = match cmd.out.format {
                Format::Table => format!("{count}\n"),
                Format::Json => {
                    #[derive(Serialize)]
                    struct Payload {
                        group: PermGroup,
                        shape: Partition,
                        count: u64,
                    }
                    pretty(&Payload {
                        group,
                        shape,
                        count,
                    })
                }
                Format::Dot => return Err(bad_format("count")),
            };
            emit(&cmd.out, &text)
        }
        Command::Orbits(cmd) => {
            let shape = parse_shape(&cmd.shape)?;
            let group = cmd.group.resolve(shape.degree())?;
            let space = orbit_space(&group, &shape)?;
            let text = match cmd.out.format {
                Format::Json => pretty(&space),
                Format::Table => {
                    let mut out = String::new();
                    let _ = writeln!(out, "shape {shape}  orbits {}", space.count());
                    for (i, orbit) in space.orbits().iter().enumerate() {
                        let _ = writeln!(
                            out,
                            "{:<4} size={:<4} rep={}",
                            space.label(i),
                            orbit.size(),
                            orbit.representative()
                        );
                    }
                    out
                }
                Format::Dot => return Err(bad_format("orbits")),
            };
            emit(&cmd.out, &text)
        }
        Command::Census(cmd) => {
            let degree = implied_degree(cmd.degree, &cmd.group)?;
            let group = cmd.group.resolve(degree)?;
            let census = group.cycle_census();
            let text = match cmd.out.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Payload {
                        group: PermGroup,
                        census: isomers::group::CycleCensus,
                    }
                    pretty(&Payload {
                        group: group.clone(),
                        census,
                    })
                }
                Format::Table => {
                    let mut out = String::new();
                    for (cycle_type, count) in census.entries() {
                        let _ = writeln!(out, "{:<16} {count}", cycle_type.to_string());
                    }
                    out
                }
                Format::Dot => return Err(bad_format("census")),
            };
            emit(&cmd.out, &text)
        }
        Command::Genetic(cmd) => {
            let upper = parse_shape(&cmd.upper)?;
            let lower = parse_shape(&cmd.lower)?;
            if upper.degree() != lower.degree() {
                return Err(Failure::validation(format!(
                    "shapes {upper} and {lower} partition different degrees"
                )));
            }
            let group = cmd.group.resolve(upper.degree())?;
            let digraph = genetic_digraph(&group, &upper, &lower)?;
            let text = match cmd.out.format {
                Format::Dot => digraph.to_dot(),
                Format::Json if cmd.multiplicities => {
                    #[derive(Serialize)]
                    struct Payload<'a> {
                        #[serde(flatten)]
                        digraph: &'a isomers::genetic::GeneticDigraph,
                        multiplicities: Vec<(String, String, u64)>,
                    }
                    pretty(&Payload {
                        digraph: &digraph,
                        multiplicities: digraph.labeled_multiplicities(),
                    })
                }
                Format::Json => pretty(&digraph),
                Format::Table => {
                    let labels: Vec<(String, String, u64)> = digraph
                        .edges()
                        .map(|(u, l)| {
                            (
                                node_label(&digraph.upper_space().label(u), &upper),
                                node_label(&digraph.lower_space().label(l), &lower),
                                digraph.multiplicity(u, l),
                            )
                        })
                        .collect();
                    let width = labels.iter().map(|(u, _, _)| u.len()).max().unwrap_or(0);
                    let mut out = String::new();
                    let mut current: Option<&str> = None;
                    for (u, l, count) in &labels {
                        if current == Some(u.as_str()) {
                            let _ = write!(out, ", {l}");
                        } else {
                            if current.is_some() {
                                out.push('\n');
                            }
                            let _ = write!(out, "{u:<width$}  ->  {l}");
                            current = Some(u);
                        }
                        if cmd.multiplicities {
                            let _ = write!(out, " (x{count})");
                        }
                    }
                    out.push('\n');
                    out
                }
            };
            emit(&cmd.out, &text)
        }
        Command::Identify(cmd) => {
            let shapes = cmd
                .shapes
                .iter()
                .map(|text| parse_shape(text))
                .collect::<Result<Vec<_>, _>>()?;
            let degree = shapes[0].degree();
            if shapes.iter().any(|s| s.degree() != degree) {
                return Err(Failure::validation(
                    "all shapes must partition the same degree".into(),
                ));
            }
            let group = cmd.group.resolve(degree)?;
            let partitions = identification_partition(&group, &shapes)?;
            let text = match cmd.out.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Payload<'a> {
                        group: &'a PermGroup,
                        partitions: Vec<&'a isomers::genetic::IdentificationPartition>,
                    }
                    pretty(&Payload {
                        group: &group,
                        partitions: partitions.values().collect(),
                    })
                }
                Format::Table => {
                    let mut out = String::new();
                    for partition in partitions.values() {
                        let blocks: Vec<String> = partition
                            .blocks
                            .iter()
                            .map(|block| format!("{{{}}}", block.join(",")))
                            .collect();
                        let _ = writeln!(
                            out,
                            "{:<10} {}",
                            partition.shape.to_string(),
                            blocks.join(" ")
                        );
                    }
                    out
                }
                Format::Dot => return Err(bad_format("identify")),
            };
            emit(&cmd.out, &text)
        }
        Command::Inverse(cmd) => {
            let raw = fs::read_to_string(&cmd.constraints).map_err(|err| {
                Failure::validation(format!(
                    "cannot read {}: {err}",
                    cmd.constraints.display()
                ))
            })?;
            let constraints: Vec<CountConstraint> =
                serde_json::from_str(&raw).map_err(|err| {
                    Failure::validation(format!(
                        "cannot parse {}: {err}",
                        cmd.constraints.display()
                    ))
                })?;
            let implied = CountConstraint::validate_list(&constraints)?;
            let degree = cmd.degree.unwrap_or(implied);
            if degree != implied {
                return Err(Failure::validation(format!(
                    "constraints partition {implied}, but --degree says {degree}"
                )));
            }
            let report = solve(&constraints, degree, cmd.transitive_only)?;
            let text = match cmd.out.format {
                Format::Json => pretty(&report),
                Format::Table => {
                    let mut out = String::new();
                    let _ = writeln!(
                        out,
                        "classes {} (examined {})",
                        report.classes.len(),
                        report.stats.classes_examined
                    );
                    for class in &report.classes {
                        let _ = writeln!(
                            out,
                            "{:<26} gens ⟨{}⟩",
                            class.label,
                            class.representative.generator_strings().join(", ")
                        );
                    }
                    out
                }
                Format::Dot => return Err(bad_format("inverse")),
            };
            emit(&cmd.out, &text)
        }
        Command::Verify(cmd) => {
            let degree = implied_degree(cmd.degree, &cmd.group)?;
            if degree != 6 {
                return Err(Failure::validation(format!(
                    "the verify command checks the degree-6 counting system; got degree {degree}"
                )));
            }
            let group = cmd.group.resolve(degree)?;
            let report = system_report(&group)?;
            let checks = cross_check(&group)?;
            let counts_agree = checks.iter().all(|row| row.agrees());
            let passed = report.passed() && counts_agree;
            let text = match cmd.out.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Payload<'a> {
                        #[serde(flatten)]
                        report: &'a isomers::verify::SystemReport,
                        cross_check: &'a [isomers::verify::CrossCheckRow],
                        passed: bool,
                    }
                    pretty(&Payload {
                        report: &report,
                        cross_check: &checks,
                        passed,
                    })
                }
                Format::Table => {
                    let mut out = String::new();
                    for row in &report.rows {
                        let _ = writeln!(
                            out,
                            "{:<14} tabloids={:<4} residual={:<3} {}",
                            row.shape.to_string(),
                            row.tabloid_total,
                            row.residual,
                            if row.residual == 0 { "ok" } else { "FAIL" }
                        );
                    }
                    for check in &checks {
                        if !check.agrees() {
                            let _ = writeln!(
                                out,
                                "count mismatch on {}: census {} vs enumeration {}",
                                check.shape, check.census_route, check.enumeration_route
                            );
                        }
                    }
                    let _ = writeln!(out, "{}", if passed { "PASS" } else { "FAIL" });
                    out
                }
                Format::Dot => return Err(bad_format("verify")),
            };
            emit(&cmd.out, &text)?;
            if !passed {
                return Err(Failure::verification(
                    "counting system reported a nonzero residual or count mismatch".into(),
                ));
            }
            Ok(())
        }
    }
}

fn parse_shape(text: &str) -> Result<Partition, Failure> {
    text.parse::<Partition>().map_err(Failure::from)
}

fn implied_degree(explicit: Option<usize>, group: &GroupSpec) -> Result<usize, Failure> {
    match explicit {
        Some(degree) => Ok(degree),
        None if group.preset.is_some() => Ok(6),
        None => Err(Failure::validation(
            "pass --degree when the group is given by generators".into(),
        )),
    }
}

fn bad_format(command: &str) -> Failure {
    Failure::validation(format!("the {command} command has no dot output"))
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

fn emit(out: &OutputSpec, text: &str) -> Result<(), Failure> {
    match &out.output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(path, text).map_err(|err| {
            Failure::validation(format!("cannot write {}: {err}", path.display()))
        }),
    }
}
