//! `genuscenter`: command-line front end. Every subcommand is a thin adapter
//! over the library; reports go to stdout as text or JSON.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "genuscenter", version, about = "Exact centers of higher genera for premodular categories")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Add decimal renderings of exact scalars with this many digits.
    #[arg(long, global = true, value_name = "DIGITS")]
    float: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the structure, pentagon, hexagon and spherical/ribbon validators.
    Validate(CatArg),
    /// Admissible gluings and the surfaces they produce.
    #[command(subcommand)]
    Gluing(GluingCmd),
    /// Center of higher genus computations.
    #[command(subcommand)]
    Center(CenterCmd),
    /// Checks of the induction adjunction.
    #[command(subcommand)]
    Adjoint(AdjointCmd),
    /// Bundled and user catalogs.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Args, Debug)]
struct CatArg {
    /// Bundled key, a key found under GENUSCENTER_CATALOG_DIR, or a JSON path.
    #[arg(long)]
    cat: String,
}

#[derive(Args, Debug)]
struct CatSigma {
    #[arg(long)]
    cat: String,
    /// Gluing in cycle notation, e.g. "(1 3)(2 4)".
    #[arg(long)]
    sigma: String,
}

#[derive(Subcommand, Debug)]
enum GluingCmd {
    /// List every admissible gluing of 2n points.
    Enum {
        #[arg(long)]
        n: usize,
    },
    /// Surface type, orbits and pairwise orbit positions.
    Classify {
        #[arg(long)]
        sigma: String,
    },
    /// The standard gluing for genus g with k punctures.
    Standard {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CenterCmd {
    /// Number of simple objects of the center and the block sizes.
    Rank {
        #[command(flatten)]
        target: CatSigma,
        /// Include the wall-clock runtime (breaks byte-identical output).
        #[arg(long)]
        timing: bool,
    },
    /// Verify the σ-pair axioms for the pair induced from one simple.
    VerifyInduced {
        #[command(flatten)]
        target: CatSigma,
        /// Label of the simple object to induce.
        #[arg(long)]
        object: String,
    },
}

#[derive(Subcommand, Debug)]
enum AdjointCmd {
    /// G∘F and F∘G verdicts for every pair of simples.
    Check {
        #[command(flatten)]
        target: CatSigma,
        /// Projected morphisms per pair on which F∘G is tested.
        #[arg(long, default_value_t = 2)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    /// Keys, labels, dimensions and transparency of every catalog.
    List,
}

fn catalog_dirs() -> Vec<PathBuf> {
    std::env::var_os("GENUSCENTER_CATALOG_DIR").map(|v| std::env::split_paths(&v).collect()).unwrap_or_default()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let ctx = commands::Ctx { float: cli.float, dirs: catalog_dirs() };
    let result = match cli.command {
        Command::Validate(a) => commands::validate(&ctx, &a.cat),
        Command::Gluing(GluingCmd::Enum { n }) => commands::gluing_enum(n),
        Command::Gluing(GluingCmd::Classify { sigma }) => commands::gluing_classify(&sigma),
        Command::Gluing(GluingCmd::Standard { g, k }) => commands::gluing_standard(g, k),
        Command::Center(CenterCmd::Rank { target, timing }) => {
            commands::center_rank(&ctx, &target.cat, &target.sigma, timing)
        }
        Command::Center(CenterCmd::VerifyInduced { target, object }) => {
            commands::verify_induced(&ctx, &target.cat, &target.sigma, &object)
        }
        Command::Adjoint(AdjointCmd::Check { target, samples }) => {
            commands::adjoint_check(&ctx, &target.cat, &target.sigma, samples)
        }
        Command::Catalog(CatalogCmd::List) => commands::catalog_list(&ctx),
    };
    match result {
        Ok(report) => {
            report.print(cli.json);
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(f) => {
            f.print(cli.json);
            ExitCode::from(f.code())
        }
    }
}
