use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use lieindex::chevalley::{CartanType, SimpleType};
use lieindex::classical::{parse_partition, Family};
use lieindex::index::RankConfig;
use lieindex::report::{self, BuildReport, ClassicalReport, OrbitInfo, VerifyRecord, DEFAULT_CATALOG};
use lieindex::slice::{find_orbit, load_catalog, CatalogOrbit};
use lieindex::Error;

#[derive(Parser)]
#[command(name = "lieindex", version, about = "Index of the normalizer of the centralizer of a nilpotent element")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Random forms tried per generic rank
    #[arg(long, global = true, default_value_t = 5)]
    trials: usize,
    /// Forms have integer entries in [−bound, bound]
    #[arg(long, global = true, default_value_t = 1000)]
    bound: i64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write records here instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Orbit catalog; the bundled exceptional catalog by default
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Add wall-clock milliseconds to every record
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Subcommand)]
enum Command {
    /// Build a simple Lie algebra and check the Jacobi identity
    Build {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: usize,
        /// Check this many random triples instead of all of them
        #[arg(long)]
        jacobi_samples: Option<usize>,
    },
    /// Dimensions and weights of a catalog orbit
    OrbitInfo {
        /// TYPE:index, TYPE:subregular or the orbit label
        #[arg(long)]
        orbit: String,
    },
    /// Theorems and Property (P) on catalog orbits
    Verify {
        #[arg(long, conflicts_with = "orbit", required_unless_present = "orbit")]
        all: bool,
        #[arg(long)]
        orbit: Option<String>,
    },
    /// Closed-form checks for a nilpotent of sl, so or sp given by its partition
    Classical {
        #[arg(long)]
        family: String,
        #[arg(long)]
        partition: String,
        /// Matrix size; must equal the sum of the parts when given
        #[arg(long)]
        n: Option<usize>,
    },
}

struct Out {
    w: Box<dyn Write>,
    format: Format,
}

impl Out {
    fn record<T: Serialize>(&mut self, rec: &T, text: String) -> io::Result<()> {
        match self.format {
            Format::Jsonl => writeln!(self.w, "{}", serde_json::to_string(rec).expect("serializable")),
            Format::Text => writeln!(self.w, "{text}"),
        }
    }
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn timing(t: Option<u64>) -> String {
    t.map(|ms| format!(", {ms} ms")).unwrap_or_default()
}

fn text_build(r: &BuildReport) -> String {
    format!(
        "{}: dim {}, {} positive roots, Jacobi {} ({}){}",
        r.algebra,
        r.dim,
        r.positive_roots,
        flag(r.jacobi_ok),
        r.jacobi,
        timing(r.timing_ms)
    )
}

fn text_info(r: &OrbitInfo) -> String {
    format!(
        "{} {}: dim g^e = {}, dim z = {}, dim n = {}, weights {:?}, characteristic {:?}, distinguished {}, regular {}",
        r.orbit, r.label, r.dims.gxi, r.dims.z, r.dims.n, r.weights, r.characteristic, r.distinguished, r.regular
    )
}

fn text_verify(r: &VerifyRecord) -> String {
    let blocks: Vec<String> =
        r.prop_p.blocks.iter().map(|b| format!("{}:{}x{}:{}", b.weight, b.rows, b.cols, b.status.name())).collect();
    format!(
        "{} {}: dims {}/{}/{}, weights {:?}, ind g^e = {}, ind n = {}, ind(n, g^e) = {}, rg - dim z = {}, prop4 {}, P {} [{}] -> {}{}",
        r.orbit,
        r.label,
        r.dims.gxi,
        r.dims.z,
        r.dims.n,
        r.weights,
        r.ind_gxi,
        r.ind_n,
        r.ind_n_gxi,
        r.target,
        flag(r.prop4_ok),
        r.prop_p.status.name(),
        blocks.join(" "),
        if r.pass { "PASS" } else { "FAIL" },
        timing(r.timing_ms)
    )
}

fn text_classical(r: &ClassicalReport) -> String {
    let mut s = format!(
        "{} {:?}: dims {}/{}/{}, weights {:?}, dim z' = {}, D closed form {}, det D {}, ind(n, z) = {}{}, ind n = {}, ind(n, g^e) = {}, rg - dim z = {}, theorems {}",
        r.algebra,
        r.partition,
        r.dims.gxi,
        r.dims.z,
        r.dims.n,
        r.weights,
        r.dim_zprime,
        flag(r.dmatrix_closed_form),
        flag(r.dmatrix_det_ok),
        r.ind_n_z,
        if r.ind_n_z_exact { " (exact)" } else { "" },
        r.ind_n,
        r.ind_n_gxi,
        r.target,
        flag(r.theorems_ok),
    );
    if let Some(t) = &r.two_part {
        s += &format!(
            ", two-part s = {} t = {}: lambda = {}, w central {}, brackets {}, full D singular {}, M' nonsingular {}, det M' {}",
            t.s,
            t.t,
            t.lambda,
            flag(t.w_in_center),
            flag(t.crochet_ok),
            flag(t.full_d_singular),
            flag(t.m_prime_nonsingular),
            flag(t.m_prime_det_matches)
        );
    }
    s + &format!(" -> {}{}", if r.pass { "PASS" } else { "FAIL" }, timing(r.timing_ms))
}

fn load(opts: &Opts) -> Result<Vec<CatalogOrbit>, Error> {
    let text = match &opts.catalog {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Error::Input(format!("{}: {e}", p.display())))?,
        None => DEFAULT_CATALOG.to_string(),
    };
    load_catalog(&text)
}

fn select<'a>(orbits: &'a [CatalogOrbit], key: &str) -> Result<&'a CatalogOrbit, Error> {
    find_orbit(orbits, key).ok_or_else(|| Error::Input(format!("no orbit '{key}' in the catalog")))
}

fn run(cli: Cli) -> Result<bool, Error> {
    let opts = &cli.opts;
    let cfg = RankConfig { trials: opts.trials, bound: opts.bound, seed: opts.seed };
    cfg.validate()?;
    let w: Box<dyn Write> = match &opts.output {
        Some(p) => {
            Box::new(BufWriter::new(File::create(p).map_err(|e| Error::Input(format!("{}: {e}", p.display())))?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut out = Out { w, format: opts.format };
    let io_err = |e: io::Error| Error::Input(format!("write failed: {e}"));
    let ok = match cli.command {
        Command::Build { ty, rank, jacobi_samples } => {
            let mut chars = ty.trim().chars();
            let ty = match (chars.next(), chars.next()) {
                (Some(c), None) => SimpleType::from_letter(c)?,
                _ => return Err(Error::Input(format!("type must be one letter A-G, got '{ty}'"))),
            };
            let ct = CartanType::new(ty, rank)?;
            let r = report::build_report(ct, jacobi_samples, opts.seed, opts.timing)?;
            out.record(&r, text_build(&r)).map_err(io_err)?;
            r.jacobi_ok
        }
        Command::OrbitInfo { orbit } => {
            let orbits = load(opts)?;
            let r = report::orbit_info(select(&orbits, &orbit)?)?;
            out.record(&r, text_info(&r)).map_err(io_err)?;
            true
        }
        Command::Verify { all, orbit } => {
            let orbits = load(opts)?;
            let chosen: Vec<&CatalogOrbit> = if all {
                orbits.iter().collect()
            } else {
                vec![select(&orbits, orbit.as_deref().unwrap_or_default())?]
            };
            let recs: Vec<VerifyRecord> =
                chosen.par_iter().map(|o| report::verify_orbit(o, &cfg, opts.timing)).collect::<Result<_, _>>()?;
            for r in &recs {
                out.record(r, text_verify(r)).map_err(io_err)?;
            }
            recs.iter().all(|r| r.pass)
        }
        Command::Classical { family, partition, n } => {
            let family: Family = family.parse()?;
            let parts = parse_partition(&partition)?;
            if let Some(n) = n {
                let sum: usize = parts.iter().sum();
                if n != sum {
                    return Err(Error::Input(format!("partition sums to {sum}, not {n}")));
                }
            }
            let r = report::classical_report(family, &parts, &cfg, opts.timing)?;
            out.record(&r, text_classical(&r)).map_err(io_err)?;
            r.pass
        }
    };
    out.w.flush().map_err(io_err)?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("lieindex: {e}");
            ExitCode::from(2)
        }
    }
}
