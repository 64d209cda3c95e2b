use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use densentropy::config::{parse_list, ConfigFile};
use densentropy::error::{AppError, Result};
use densentropy::plot::gnuplot_script;
use densentropy::report::{Format, Report, Units};
use densentropy::run::{self, AtomSource, SweepConfig};
use densentropy::wfn::PrimitiveConvention;
use densentropy_core::models::Method;
use densentropy_core::quadrature::GridParams;

/// Shannon and Rényi entropy decompositions of molecular electron densities.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dissociation sweep over a built-in STO-6G H₂ model.
    Sweep(SweepArgs),
    /// Single-point analysis of an AIM `.wfn` file.
    Analyze(AnalyzeArgs),
    /// Isolated-atom reference values.
    Atom(AtomArgs),
    /// Integration grid as x,y,z,weight,owner_atom CSV.
    GridDump(GridDumpArgs),
}

#[derive(Args)]
struct Common {
    /// key = value file; command-line flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated Rényi orders; empty for Shannon only.
    #[arg(long, value_parser = list)]
    alphas: Option<List>,
    #[arg(long)]
    n_radial: Option<usize>,
    /// Lebedev order (points per radial shell).
    #[arg(long)]
    lebedev: Option<usize>,
    /// Becke smoothing iterations.
    #[arg(long)]
    stiffness: Option<u32>,
    /// Disable Becke atomic-size adjustment.
    #[arg(long)]
    no_size_adjust: bool,
    #[arg(long, value_enum)]
    units: Option<Units>,
    /// Output file; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// `.wfn` primitive coefficients already include normalization.
    #[arg(long)]
    normalized_primitives: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    /// hf, hl or fci.
    #[arg(long)]
    method: Option<Method>,
    /// Comma-separated bond lengths in bohr.
    #[arg(long, value_parser = list)]
    distances: Option<List>,
    /// Write a gnuplot script next to the CSV output.
    #[arg(long)]
    emit_plot_script: bool,
    /// Also require the infinite-separation identities at the largest R.
    #[arg(long)]
    strict_limits: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    wfn: PathBuf,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct AtomArgs {
    /// Single-center `.wfn`; built-in STO-6G hydrogen if absent.
    #[arg(long)]
    wfn: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct GridDumpArgs {
    /// Molecule from a `.wfn` file.
    #[arg(long, conflicts_with = "distance")]
    wfn: Option<PathBuf>,
    /// H₂ bond length in bohr.
    #[arg(long, default_value_t = 1.4)]
    distance: f64,
    #[command(flatten)]
    common: Common,
}

/// Comma-separated reals as one argument.
#[derive(Clone, Debug)]
struct List(Vec<f64>);

fn list(s: &str) -> std::result::Result<List, String> {
    parse_list(s).map(List).map_err(|e| e.to_string())
}

struct Resolved {
    config: ConfigFile,
    alphas: Vec<f64>,
    grid: GridParams,
    units: Units,
    out: Option<PathBuf>,
    format: Option<Format>,
    convention: PrimitiveConvention,
}

impl Common {
    fn resolve(self, default_alphas: Vec<f64>) -> Result<Resolved> {
        let config = match &self.config {
            Some(p) => ConfigFile::load(p)?,
            None => ConfigFile::default(),
        };
        let d = GridParams::default();
        let grid = GridParams {
            n_radial: self.n_radial.or(config.get("n_radial")?).unwrap_or(d.n_radial),
            lebedev_order: self.lebedev.or(config.get("lebedev")?).unwrap_or(d.lebedev_order),
            stiffness: self.stiffness.or(config.get("stiffness")?).unwrap_or(d.stiffness),
            size_adjust: if self.no_size_adjust {
                false
            } else {
                config.get("size_adjust")?.unwrap_or(d.size_adjust)
            },
        };
        let normalized = self.normalized_primitives || config.get("normalized_primitives")?.unwrap_or(false);
        Ok(Resolved {
            alphas: self.alphas.map(|l| l.0).or(config.get_list("alphas")?).unwrap_or(default_alphas),
            grid,
            units: self.units.or(config.get_enum("units")?).unwrap_or_default(),
            out: self.out.or(config.get("out")?),
            format: self.format.or(config.get_enum("format")?),
            convention: if normalized {
                PrimitiveConvention::Normalized
            } else {
                PrimitiveConvention::Raw
            },
            config,
        })
    }
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| AppError::io(p, e))?)),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn format_for(out: Option<&Path>, explicit: Option<Format>, fallback: Format) -> Format {
    explicit.unwrap_or_else(|| match out.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("json") => Format::Json,
        Some("csv") => Format::Csv,
        _ => fallback,
    })
}

fn reference_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}_reference.csv"))
}

fn emit(report: &Report, out: Option<&Path>, format: Format) -> Result<()> {
    let mut w = sink(out)?;
    match format {
        Format::Json => report.write_json(&mut w)?,
        Format::Csv => {
            report.write_csv(&mut w)?;
            if report.reference.is_some() {
                match out {
                    Some(p) => {
                        let rp = reference_path(p);
                        let f = File::create(&rp).map_err(|e| AppError::io(&rp, e))?;
                        report.write_reference_csv(BufWriter::new(f))?;
                    }
                    None => {
                        writeln!(w).map_err(|e| AppError::io("<stdout>", e))?;
                        report.write_reference_csv(&mut w)?;
                    }
                }
            }
        }
    }
    w.flush().map_err(|e| AppError::io(out.unwrap_or(Path::new("<stdout>")), e))
}

fn identity_status(report: &Report) -> bool {
    for row in report.rows.iter().filter(|r| !r.checks.ok) {
        eprintln!("identity check failed for {} {:?}: {:?}", row.label, row.distance, row.checks);
    }
    report.all_ok()
}

fn sweep(args: SweepArgs) -> Result<bool> {
    let r = args.common.resolve(vec![2.0])?;
    let mut cfg = SweepConfig {
        alphas: r.alphas,
        grid: r.grid,
        units: r.units,
        ..SweepConfig::default()
    };
    if let Some(m) = args.method.or(r.config.get("method")?) {
        cfg.method = m;
    }
    if let Some(d) = args.distances.map(|l| l.0).or(r.config.get_list("distances")?) {
        cfg.distances = d;
    }
    let strict = args.strict_limits || r.config.get("strict_limits")?.unwrap_or(false);
    let plot = args.emit_plot_script || r.config.get("emit_plot_script")?.unwrap_or(false);

    let report = run::run_sweep(&cfg)?;
    let format = format_for(r.out.as_deref(), r.format, Format::Csv);
    emit(&report, r.out.as_deref(), format)?;
    if plot {
        let csv = match (&r.out, format) {
            (Some(p), Format::Csv) => p.clone(),
            _ => return Err(AppError::Config("--emit-plot-script needs --out with CSV output".into())),
        };
        let script = csv.with_extension("gp");
        std::fs::write(&script, gnuplot_script(&report, &csv.to_string_lossy()))
            .map_err(|e| AppError::io(&script, e))?;
    }
    let mut ok = identity_status(&report);
    if strict {
        for v in run::limit_violations(&report) {
            eprintln!("limit check failed: {v}");
            ok = false;
        }
    }
    Ok(ok)
}

fn analyze(args: AnalyzeArgs) -> Result<bool> {
    let r = args.common.resolve(vec![2.0])?;
    let report = run::run_analyze(&args.wfn, &r.alphas, &r.grid, r.convention)?.into_units(r.units);
    emit(&report, r.out.as_deref(), format_for(r.out.as_deref(), r.format, Format::Json))?;
    Ok(identity_status(&report))
}

fn atom(args: AtomArgs) -> Result<bool> {
    let r = args.common.resolve(vec![2.0])?;
    let source = match &args.wfn {
        Some(p) => AtomSource::Wfn(p, r.convention),
        None => AtomSource::Builtin,
    };
    let report = run::run_atom(source, &r.alphas, &r.grid)?.into_units(r.units);
    emit(&report, r.out.as_deref(), format_for(r.out.as_deref(), r.format, Format::Json))?;
    Ok(identity_status(&report))
}

fn grid_dump(args: GridDumpArgs) -> Result<bool> {
    let r = args.common.resolve(Vec::new())?;
    let grid = match &args.wfn {
        Some(p) => r.grid.build(&run::read_wfn(p, r.convention)?.molecule()?)?,
        None => run::diatomic_grid(args.distance, &r.grid)?,
    };
    let mut w = sink(r.out.as_deref())?;
    run::write_grid(&grid, &mut w)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(a) => sweep(a),
        Command::Analyze(a) => analyze(a),
        Command::Atom(a) => atom(a),
        Command::GridDump(a) => grid_dump(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
