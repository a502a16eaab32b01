//! Command-line front end: spec files in, reports and spec files out.
//!
//! Exit codes: 0 when every check passes, 1 when some residual is nonzero,
//! 2 on usage or input errors.

pub mod render;
pub mod spec_file;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ha2kit::fixtures;
use ha2kit::ha2::{a2_chart, check_al2, check_lie2, check_lie2_brackets, check_r2_morphism, lift, r2_map, tensor_law_suite};
use ha2kit::point_ha::{check_point_lie, point_equivalence_test, point_to_ha2};
use ha2kit::prolong::prolong2;
use ha2kit::ruth2::{adjoint_rep, check_morphism, check_ruth, ha_to_ruth, ruth_to_ha};
use ha2kit::symbolic::parse;
use ha2kit::{Chart, Connection, HA2Data, RuthMorphism, Section, VerificationReport};

pub use render::Format;
pub use spec_file::{parse_spec, write_spec, InputError, SpecFile};

/// Axiom level for `check`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Skew,
    Al,
    Lie,
}

/// Built-in fixtures available through `fixture`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FixtureName {
    Tm2,
    So3Action,
    So3Point,
    T2m2,
    T2m2NoCoreAnchor,
    So3AdjointPoint,
    So3OmegaBarPoint,
    NonJacobiPoint,
}

#[derive(Parser, Debug)]
#[command(name = "ha2kit", version, about = "Exact symbolic verifier for order-two higher algebroids")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// List every residual in text reports, not only the failing ones.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of any spec file at the requested level.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Level::Lie)]
        level: Level,
        /// Seed of the random functions used by the tensor-law suite.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Connection used for the morphism check of a ruth2 file.
        #[arg(long)]
        connection: Option<PathBuf>,
    },
    /// Write the second-order prolongation of an algebroid1 file.
    Prolong {
        file: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Write the representation up to homotopy of an ha2 file.
    ToRuth {
        file: PathBuf,
        /// Connection on A; the trivial one when omitted.
        #[arg(long)]
        connection: Option<PathBuf>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Reconstruct the Lie algebroid of order two from a ruth2 file with its morphism.
    FromRuth {
        file: PathBuf,
        #[arg(long)]
        connection: Option<PathBuf>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Classify a point_ha file and compare with the generic equations.
    PointCheck { file: PathBuf },
    /// Check the structure equations of a ruth2 file and its morphism.
    CheckRuth {
        file: PathBuf,
        #[arg(long)]
        connection: Option<PathBuf>,
    },
    /// Print the lift of a section of A.
    Lift {
        file: PathBuf,
        /// Comma-separated components in x1..xn.
        #[arg(long)]
        section: String,
        /// Weight 0, -1 or -2.
        #[arg(long, allow_hyphen_values = true)]
        weight: i32,
    },
    /// Print the canonical map from the prolongation and check that it relates lifts.
    R2 { file: PathBuf },
    /// Write the adjoint representation of an algebroid1 file with its identity morphism.
    Adjoint {
        file: PathBuf,
        #[arg(long)]
        connection: Option<PathBuf>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Write a built-in fixture.
    Fixture {
        #[arg(value_enum)]
        name: FixtureName,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
    verbose: bool,
}

type CliResult = Result<i32, String>;

fn read_spec(path: &Path) -> Result<SpecFile, String> {
    let src = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_spec(&src).map_err(|e| format!("{}: {e}", path.display()))
}

fn expect_kind<T>(path: &Path, want: &str, pick: impl FnOnce(SpecFile) -> Option<T>) -> Result<T, String> {
    let spec = read_spec(path)?;
    let got = spec.kind();
    pick(spec).ok_or_else(|| format!("{}: expected kind `{want}`, found `{got}`", path.display()))
}

fn read_ha2(path: &Path) -> Result<HA2Data, String> {
    expect_kind(path, "ha2", |s| match s {
        SpecFile::Ha2(h) => Some(h),
        _ => None,
    })
}

fn read_connection(path: Option<&PathBuf>, n: usize, r: usize) -> Result<Connection, String> {
    let Some(path) = path else {
        return Ok(Connection::trivial(n, r));
    };
    let c = expect_kind(path, "connection", |s| match s {
        SpecFile::Connection(c) => Some(c),
        _ => None,
    })?;
    if (c.n, c.r) != (n, r) {
        return Err(format!(
            "{}: connection has base_dim {} and rank_A {}, expected {n} and {r}",
            path.display(),
            c.n,
            c.r
        ));
    }
    Ok(c)
}

impl Ctx<'_> {
    fn say(&mut self, text: &str) -> Result<(), String> {
        self.out.write_all(text.as_bytes()).map_err(|e| e.to_string())
    }

    fn warn(&mut self, text: &str) {
        let _ = writeln!(self.err, "warning: {text}");
    }

    fn report(&mut self, rep: &VerificationReport) -> CliResult {
        let text = render::render(rep, self.format, self.verbose);
        self.say(&text)?;
        Ok(if rep.passed() { 0 } else { 1 })
    }

    fn emit(&mut self, spec: &SpecFile, out: Option<&PathBuf>) -> CliResult {
        let text = write_spec(spec);
        match out {
            Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?,
            None => self.say(&text)?,
        }
        Ok(0)
    }
}

fn combined(title: String, parts: Vec<VerificationReport>) -> VerificationReport {
    let mut rep = VerificationReport::new(title);
    for p in parts {
        rep.absorb(p);
    }
    rep
}

fn ha2_checks(h: &HA2Data, level: Level, seed: u64) -> Vec<VerificationReport> {
    match level {
        Level::Skew => vec![tensor_law_suite(h, 20, seed)],
        Level::Al => vec![h.algebroid.check_al1(), check_al2(h)],
        Level::Lie => vec![
            h.algebroid.check_al1(),
            h.algebroid.check_jacobi(),
            check_al2(h),
            check_lie2(h),
            check_lie2_brackets(h),
        ],
    }
}

fn ruth_report(rep: &ha2kit::Ruth2Data, phi: Option<&RuthMorphism>, conn: Option<&PathBuf>) -> Result<VerificationReport, String> {
    let mut parts = vec![check_ruth(rep)];
    if let Some(phi) = phi {
        let nabla = read_connection(conn, rep.algebroid.n, rep.algebroid.r)?;
        let adj = adjoint_rep(&rep.algebroid, &nabla).map_err(|e| e.to_string())?;
        parts.push(check_morphism(phi, rep, &adj).map_err(|e| e.to_string())?);
    }
    Ok(combined("two-term representation up to homotopy".into(), parts))
}

fn fixture(name: FixtureName) -> SpecFile {
    match name {
        FixtureName::Tm2 => SpecFile::Algebroid1(fixtures::tm(2)),
        FixtureName::So3Action => SpecFile::Algebroid1(fixtures::so3_action()),
        FixtureName::So3Point => SpecFile::Algebroid1(fixtures::so3_point()),
        FixtureName::T2m2 => SpecFile::Ha2(fixtures::t2m(2)),
        FixtureName::T2m2NoCoreAnchor => SpecFile::Ha2(fixtures::t2m_without_core_anchor(2)),
        FixtureName::So3AdjointPoint => SpecFile::PointHa(fixtures::so3_adjoint_point()),
        FixtureName::So3OmegaBarPoint => SpecFile::PointHa(fixtures::so3_omega_bar_point()),
        FixtureName::NonJacobiPoint => SpecFile::PointHa(fixtures::non_jacobi_point()),
    }
}

fn dispatch(ctx: &mut Ctx, command: Command) -> CliResult {
    match command {
        Command::Check {
            file,
            level,
            seed,
            connection,
        } => {
            let lvl = format!("{level:?}").to_lowercase();
            let rep = match read_spec(&file)? {
                SpecFile::Algebroid1(a) => {
                    let parts = match level {
                        Level::Skew => vec![],
                        Level::Al => vec![a.check_al1()],
                        Level::Lie => vec![a.check_al1(), a.check_jacobi()],
                    };
                    combined(format!("algebroid at level {lvl}"), parts)
                }
                SpecFile::Ha2(h) => combined(format!("order-two algebroid at level {lvl}"), ha2_checks(&h, level, seed)),
                SpecFile::PointHa(p) => {
                    let h = point_to_ha2(&p);
                    let parts = match level {
                        Level::Lie => vec![check_point_lie(&p)],
                        other => ha2_checks(&h, other, seed),
                    };
                    combined(format!("point algebroid at level {lvl}"), parts)
                }
                SpecFile::Ruth2(rep, phi) => ruth_report(&rep, phi.as_ref(), connection.as_ref())?,
                SpecFile::Connection(_) => return Err(format!("{}: a connection file has no axioms to check", file.display())),
            };
            ctx.report(&rep)
        }
        Command::Prolong { file, out } => {
            let a = expect_kind(&file, "algebroid1", |s| match s {
                SpecFile::Algebroid1(a) => Some(a),
                _ => None,
            })?;
            if !a.check_al1().passed() {
                ctx.warn("input is not almost Lie; the prolongation need not satisfy the order-two axioms");
            }
            ctx.emit(&SpecFile::Ha2(prolong2(&a)), out.as_ref())
        }
        Command::ToRuth { file, connection, out } => {
            let h = read_ha2(&file)?;
            if !check_lie2(&h).passed() {
                ctx.warn("input fails the Lie axioms of order two; the output need not be a representation");
            }
            let nabla = read_connection(connection.as_ref(), h.n, h.r)?;
            let (rep, phi) = ha_to_ruth(&h, &nabla).map_err(|e| e.to_string())?;
            ctx.emit(&SpecFile::Ruth2(rep, Some(phi)), out.as_ref())
        }
        Command::FromRuth { file, connection, out } => {
            let (rep, phi) = expect_kind(&file, "ruth2", |s| match s {
                SpecFile::Ruth2(r, p) => Some((r, p)),
                _ => None,
            })?;
            let phi = phi.ok_or_else(|| format!("{}: missing `morphism` to the adjoint representation", file.display()))?;
            let nabla = read_connection(connection.as_ref(), rep.algebroid.n, rep.algebroid.r)?;
            let h = ruth_to_ha(&rep, &phi, &nabla).map_err(|e| e.to_string())?;
            ctx.emit(&SpecFile::Ha2(h), out.as_ref())
        }
        Command::PointCheck { file } => {
            let p = expect_kind(&file, "point_ha", |s| match s {
                SpecFile::PointHa(p) => Some(p),
                _ => None,
            })?;
            let mut rep = check_point_lie(&p);
            if !point_equivalence_test(&p) {
                rep.push(
                    "point:generic_agreement",
                    &[],
                    "classification disagrees with the generic equations".into(),
                    false,
                );
            }
            ctx.report(&rep)
        }
        Command::CheckRuth { file, connection } => {
            let (rep, phi) = expect_kind(&file, "ruth2", |s| match s {
                SpecFile::Ruth2(r, p) => Some((r, p)),
                _ => None,
            })?;
            let report = ruth_report(&rep, phi.as_ref(), connection.as_ref())?;
            ctx.report(&report)
        }
        Command::Lift { file, section, weight } => {
            let h = read_ha2(&file)?;
            let names = Chart::base(h.n).names().to_vec();
            let comps = section
                .split(',')
                .map(|c| parse(c.trim(), &names).map_err(|e| format!("--section: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            let vf = lift(&h, &Section::from_coeffs(comps), weight).map_err(|e| e.to_string())?;
            let text = match ctx.format {
                Format::Text => format!("{vf}\n"),
                Format::Json => format!("{}\n", serde_json::json!({ "weight": weight, "field": vf.to_string() })),
            };
            ctx.say(&text)?;
            Ok(0)
        }
        Command::R2 { file } => {
            let h = read_ha2(&file)?;
            let names = a2_chart(h.n, h.r).names().to_vec();
            let z: Vec<String> = r2_map(&h).z.iter().map(|p| p.to_string_with(&names)).collect();
            let rep = check_r2_morphism(&h);
            match ctx.format {
                Format::Text => {
                    let mut text = String::new();
                    for (mu, p) in z.iter().enumerate() {
                        text.push_str(&format!("z{} = {p}\n", mu + 1));
                    }
                    text.push_str(&render::text(&rep, ctx.verbose));
                    ctx.say(&text)?;
                }
                Format::Json => {
                    let v = serde_json::json!({ "z": z, "report": rep });
                    ctx.say(&format!("{}\n", serde_json::to_string_pretty(&v).expect("serializes")))?;
                }
            }
            Ok(if rep.passed() { 0 } else { 1 })
        }
        Command::Adjoint { file, connection, out } => {
            let a = expect_kind(&file, "algebroid1", |s| match s {
                SpecFile::Algebroid1(a) => Some(a),
                _ => None,
            })?;
            let nabla = read_connection(connection.as_ref(), a.n, a.r)?;
            let rep = adjoint_rep(&a, &nabla).map_err(|e| e.to_string())?;
            let phi = RuthMorphism::identity(&rep);
            ctx.emit(&SpecFile::Ruth2(rep, Some(phi)), out.as_ref())
        }
        Command::Fixture { name, out } => ctx.emit(&fixture(name), out.as_ref()),
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut ctx = Ctx {
        out,
        err,
        format: cli.format,
        verbose: cli.verbose,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            2
        }
    }
}
