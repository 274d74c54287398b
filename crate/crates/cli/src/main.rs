use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

/// Exact index-class sums and products modulo m, with an exhaustive checker
/// for their closed forms.
#[derive(Parser, Debug)]
#[command(name = "idxsum", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Closed forms only.
    Closed,
    /// Brute-force enumeration only.
    Oracle,
    /// Both, with an agreement check.
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConvOp {
    Dirichlet,
    Lcm,
}

#[derive(clap::Args, Debug)]
pub struct ClassArgs {
    #[arg(long, short = 'm', value_parser = clap::value_parser!(u64).range(1..))]
    pub modulus: u64,
    #[arg(long, short = 'd', value_parser = clap::value_parser!(u64).range(1..))]
    pub delta: u64,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also list the members of the class.
    #[arg(long)]
    pub elements: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sum of the units of order delta modulo m.
    Sum(ClassArgs),
    /// Product of the units of order delta modulo m.
    Product(ClassArgs),
    /// Every index class modulo m with its count, sum and product.
    Classes {
        #[arg(long, short = 'm', value_parser = clap::value_parser!(u64).range(1..))]
        modulus: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check closed forms against enumeration over a range of moduli.
    Verify {
        /// Check every modulus in [1, N]; without it each theorem uses its default range.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_modulus: Option<u64>,
        /// A theorem id, or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Worker threads; 0 uses every available core.
        #[arg(long, env = "IDXSUM_JOBS", default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = idxsum_verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Keep the members of each class while enumerating.
        #[arg(long)]
        include_elements: bool,
    },
    /// Evaluate a named arithmetical function.
    Fn {
        /// One of mu, phi, lambda, M, I, u, id.
        #[arg(long)]
        name: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate a Dirichlet or lcm convolution of two named functions.
    Conv {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value_t = ConvOp::Dirichlet)]
        op: ConvOp,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const MISMATCH: u8 = 2;
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Sum(args) => commands::class_sum(&args),
        Command::Product(args) => commands::class_product(&args),
        Command::Classes { modulus, format } => commands::classes(modulus, format),
        Command::Verify {
            max_modulus,
            theorem,
            jobs,
            seed,
            format,
            out,
            include_elements,
        } => commands::verify(&commands::VerifyArgs {
            max_modulus,
            theorem,
            jobs,
            seed,
            format,
            out,
            include_elements,
        }),
        Command::Fn { name, n, format } => commands::function(&name, n, format),
        Command::Conv {
            left,
            right,
            op,
            n,
            format,
        } => commands::convolution(&left, &right, op, n, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit::USAGE)
        }
    }
}
