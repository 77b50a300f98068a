mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

/// Exact census of finite group actions on the projective line and on
/// elliptic curves over finite fields.
///
/// Fields are written `p^n` (automatic modulus) or `p^n/c0,..,cn` (explicit
/// monic modulus, constant term first). Elements are comma-joined
/// coefficients `c0,c1,..`; points of the line are elements or `inf`.
/// Moebius maps are written `[a,b;c,d]`.
#[derive(Parser, Debug)]
#[command(name = "covercensus", version, about, long_about)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output format; json is the stable contract, table a view.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for the census; 1 runs serially, results are identical.
    #[arg(long, default_value_t = 1, global = true, value_parser = clap::value_parser!(u32).range(1..=256))]
    jobs: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Characteristic, degree, modulus and primitive element of a field.
    FieldInfo {
        #[arg(long)]
        field: String,
    },
    /// Fixed points of a Moebius map over F_{q^ext}.
    FixedPoints {
        #[arg(long)]
        field: String,
        /// The map, as [a,b;c,d].
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 2)]
        ext: u32,
    },
    /// Build a standard subgroup and report its stabilized locus.
    BuildGroup {
        #[arg(long)]
        field: String,
        /// cyclic:n, dihedral:n, A4, S4, A5, PSL2:d, PGL2:d, Zp^m or semidirect:m:n.
        #[arg(long)]
        group: String,
        /// Basis of Gamma as b1;b2;.. for Zp^m and semidirect:m:n.
        #[arg(long)]
        gamma: Option<String>,
        /// Level of the stabilized locus.
        #[arg(long, default_value_t = 2)]
        ext: u32,
    },
    /// Close a set of generators and report the stabilized locus.
    Locus {
        #[arg(long)]
        field: String,
        /// A generator [a,b;c,d]; repeat for several.
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        #[arg(long, default_value_t = 2)]
        ext: u32,
    },
    /// Decide whether two subgroups are conjugate in PGL2(F_{q^ext}).
    Conjugate {
        #[arg(long)]
        field: String,
        /// Generator of the first group; repeat for several.
        #[arg(long = "a", required = true)]
        a: Vec<String>,
        /// Generator of the second group; repeat for several.
        #[arg(long = "b", required = true)]
        b: Vec<String>,
        #[arg(long, default_value_t = 1)]
        ext: u32,
        /// Also run the exhaustive transporter search and compare.
        #[arg(long)]
        brute_force: bool,
    },
    /// All subgroups of a given type with stabilized locus exactly S.
    Census {
        #[arg(long)]
        field: String,
        /// cyclic:n, dihedral:n, A4, S4, A5, PSL2:d, PGL2:d, Zp^m or semidirect:m:n.
        #[arg(long)]
        group: String,
        /// Comma-separated points of F_{q^ext}, `inf` for infinity.
        #[arg(long, allow_hyphen_values = true)]
        locus: String,
        /// The census runs in PGL2(F_{q^ext}).
        #[arg(long, default_value_t = 1)]
        ext: u32,
    },
    /// Additive subgroups of rank m of the field.
    AdditiveSubgroups {
        #[arg(long)]
        field: String,
        #[arg(long)]
        rank: u32,
    },
    /// Fixed-point count of every element of PGL2(F_q) over F_{q^2}.
    VerifyP1fp {
        #[arg(long)]
        field: String,
    },
    /// Growth of the (Z/p)^m census along F_{p^n} against the bounded queries.
    VerifyMain {
        #[arg(long)]
        p: u32,
        /// Comma-separated degrees, each in 1..=4.
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        degrees: Vec<u32>,
        /// Skip the default bounded queries.
        #[arg(long)]
        no_bounded: bool,
    },
    /// Fixed-point dichotomy and finiteness filters on an elliptic curve.
    VerifyGenus1 {
        /// Curve as p^n:a=..,b=.. (short Weierstrass form, p > 3).
        #[arg(long)]
        curve: String,
        /// Point of S as (x,y) or O; repeat for several. Without it every
        /// rational point is tried as a singleton.
        #[arg(long = "point")]
        points: Vec<String>,
        /// Level of the finiteness filters.
        #[arg(long, default_value_t = 1)]
        level: u32,
        /// Highest level of the dichotomy check.
        #[arg(long, default_value_t = 4)]
        max_level: u32,
    },
    /// Ramification of the polynomial map x -> f(x).
    Ramification {
        #[arg(long)]
        field: String,
        /// Coefficients c0;c1;..;cd, constant term first.
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 2)]
        ext: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(r) => r,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let Cli { common, command } = cli;
    let rendered = if common.jobs > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(common.jobs as usize).build() {
            Ok(pool) => pool.install(|| commands::run(command, true)),
            Err(e) => Err(anyhow::anyhow!("--jobs: {e}")),
        }
    } else {
        commands::run(command, false)
    };
    let rendered = match rendered {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = rendered.write(common.format, &mut out).and_then(|_| Ok(out.flush()?)) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if rendered.ok {
        ExitCode::SUCCESS
    } else {
        let diff = serde_json::json!({ "mismatches": rendered.mismatches });
        eprintln!("{}", serde_json::to_string_pretty(&diff).unwrap_or_default());
        ExitCode::from(1)
    }
}
