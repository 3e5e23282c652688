use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod input;

use commands::Outcome;

#[derive(Parser)]
#[command(name = "limitcm", version, about = "Exact monomial commutative algebra over affine and limit monoids")]
struct Cli {
    #[command(flatten)]
    fmt: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monoid queries on a JSON monoid document.
    #[command(subcommand)]
    Monoid(MonoidCmd),
    /// Monomial ideal operations on a JSON ring document.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Koszul and Čech cohomology of monomial sequences.
    #[command(subcommand)]
    Cohom(CohomCmd),
    /// Regular, parameter and Cohen-Macaulay checks.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Reproducible scenarios over k[H] and its truncations.
    #[command(subcommand)]
    Paper(PaperCmd),
}

/// Output format shared by every subcommand.
#[derive(Args, Clone, Copy)]
pub struct Format {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Args)]
pub struct MonoidIn {
    /// Monoid document, or `-` for stdin.
    #[arg(long = "in", value_name = "FILE")]
    pub input: String,
}

#[derive(Args)]
pub struct RingIn {
    /// Ring or ideal document, or `-` for stdin.
    #[arg(long = "in", visible_alias = "ring", value_name = "FILE")]
    pub input: String,
    /// Coefficient field, `Q` or a prime `p`; overrides the document.
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Subcommand)]
enum MonoidCmd {
    /// Minimal generators of the saturation.
    HilbertBasis(MonoidIn),
    Normality(MonoidIn),
    /// Integral closure in the group of differences or the full lattice.
    Closure {
        #[command(flatten)]
        m: MonoidIn,
        /// `group` or `lattice`.
        #[arg(long, default_value = "group")]
        ambient: String,
    },
    /// Faces with their ranks and the heights of their primes.
    Faces(MonoidIn),
    /// Whether the monoid is full in another one.
    Full {
        #[command(flatten)]
        m: MonoidIn,
        /// The ambient monoid document.
        #[arg(long, value_name = "FILE")]
        within: String,
        /// Box for oracle ambients.
        #[arg(long = "box", allow_hyphen_values = true)]
        degree_box: Option<String>,
    },
}

#[derive(Subcommand)]
enum IdealCmd {
    /// `(I : J)` for `J` generated by the given monomials.
    Colon {
        #[command(flatten)]
        r: RingIn,
        #[arg(long, value_name = "MONOMIALS")]
        by: String,
        #[arg(long = "box", allow_hyphen_values = true)]
        degree_box: Option<String>,
    },
    Height(RingIn),
    MinPrimes(RingIn),
    /// Membership of a ring element, term by term.
    Member {
        #[command(flatten)]
        r: RingIn,
        #[arg(long)]
        element: String,
    },
}

#[derive(Subcommand)]
enum CohomCmd {
    /// Koszul homology of `x^m` at one degree.
    Koszul {
        #[command(flatten)]
        r: RingIn,
        #[arg(long)]
        seq: String,
        /// Degree as `a,b,…`.
        #[arg(long)]
        degree: String,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Per-degree Čech cohomology over a box.
    Cech {
        #[command(flatten)]
        r: RingIn,
        #[arg(long)]
        seq: String,
        #[arg(long = "box", allow_hyphen_values = true)]
        degree_box: Option<String>,
    },
    /// Least nonvanishing Čech index with its witness.
    Grade {
        #[command(flatten)]
        r: RingIn,
        #[arg(long)]
        seq: String,
        #[arg(long = "box", allow_hyphen_values = true)]
        degree_box: Option<String>,
    },
}

#[derive(Args)]
pub struct SeqCheck {
    #[command(flatten)]
    pub r: RingIn,
    #[arg(long)]
    pub seq: String,
    #[arg(long = "box", allow_hyphen_values = true)]
    pub degree_box: Option<String>,
}

#[derive(Subcommand)]
enum CheckCmd {
    Regular(SeqCheck),
    Parameter {
        #[command(flatten)]
        s: SeqCheck,
        /// Require every prefix to be a parameter sequence.
        #[arg(long)]
        strong: bool,
        #[arg(long, default_value_t = 2)]
        m_max: u32,
    },
    /// Grade against height on every small monomial ideal.
    CmIdeals {
        #[command(flatten)]
        r: RingIn,
        #[arg(long, default_value_t = 4)]
        degree_bound: i64,
        #[arg(long, default_value_t = 2)]
        max_generators: usize,
        #[arg(long = "box", allow_hyphen_values = true)]
        degree_box: Option<String>,
    },
    /// Weak Bourbaki unmixedness of the document's ideal.
    Wbu {
        #[command(flatten)]
        r: RingIn,
        /// Monomial witnesses; all bounded monoid elements when absent.
        #[arg(long)]
        witnesses: Option<String>,
        #[arg(long, default_value_t = 4)]
        degree_bound: i64,
        #[arg(long = "box", allow_hyphen_values = true)]
        degree_box: Option<String>,
    },
    /// Compare strong parameter and regular monomial sequences.
    HmHarness {
        #[command(flatten)]
        r: RingIn,
        #[arg(long, default_value_t = 2)]
        degree_bound: i64,
        #[arg(long, default_value_t = 2)]
        max_len: usize,
        #[arg(long, default_value_t = 2)]
        m_max: u32,
        #[arg(long = "box", allow_hyphen_values = true)]
        degree_box: Option<String>,
    },
}

#[derive(Subcommand)]
enum PaperCmd {
    List,
    /// Run one scenario, or `all`.
    Run {
        id: String,
        /// Truncation ladder, e.g. `4,6,8`.
        #[arg(long)]
        trunc: Option<String>,
        /// Box ladder, e.g. `8,12,16`.
        #[arg(long = "box")]
        boxes: Option<String>,
        #[arg(long)]
        degree_bound: Option<i64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn init_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("LIMITCM_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| format!("LIMITCM_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("LIMITCM_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn dispatch(cmd: Command, fmt: Format) -> Result<Outcome, String> {
    use commands as c;
    match cmd {
        Command::Monoid(m) => match m {
            MonoidCmd::HilbertBasis(i) => c::hilbert_basis(&i),
            MonoidCmd::Normality(i) => c::normality(&i),
            MonoidCmd::Closure { m, ambient } => c::closure(&m, &ambient),
            MonoidCmd::Faces(i) => c::faces(&i),
            MonoidCmd::Full { m, within, degree_box } => c::full(&m, &within, degree_box.as_deref()),
        },
        Command::Ideal(i) => match i {
            IdealCmd::Colon { r, by, degree_box } => c::colon(&r, &by, degree_box.as_deref()),
            IdealCmd::Height(r) => c::height(&r),
            IdealCmd::MinPrimes(r) => c::min_primes(&r),
            IdealCmd::Member { r, element } => c::member(&r, &element),
        },
        Command::Cohom(h) => match h {
            CohomCmd::Koszul { r, seq, degree, power } => c::koszul(&r, &seq, &degree, power),
            CohomCmd::Cech { r, seq, degree_box } => c::cech(&r, &seq, degree_box.as_deref()),
            CohomCmd::Grade { r, seq, degree_box } => c::grade(&r, &seq, degree_box.as_deref()),
        },
        Command::Check(k) => match k {
            CheckCmd::Regular(s) => c::regular(&s),
            CheckCmd::Parameter { s, strong, m_max } => c::parameter(&s, strong, m_max),
            CheckCmd::CmIdeals {
                r,
                degree_bound,
                max_generators,
                degree_box,
            } => c::cm_ideals(&r, degree_bound, max_generators, degree_box.as_deref()),
            CheckCmd::Wbu {
                r,
                witnesses,
                degree_bound,
                degree_box,
            } => c::wbu(&r, witnesses.as_deref(), degree_bound, degree_box.as_deref()),
            CheckCmd::HmHarness {
                r,
                degree_bound,
                max_len,
                m_max,
                degree_box,
            } => c::hm_harness(&r, degree_bound, max_len, m_max, degree_box.as_deref()),
        },
        Command::Paper(p) => match p {
            PaperCmd::List => Ok(c::paper_list()),
            PaperCmd::Run {
                id,
                trunc,
                boxes,
                degree_bound,
                samples,
                seed,
            } => {
                let cfg = c::scenario_config(trunc.as_deref(), boxes.as_deref(), degree_bound, samples, seed)?;
                c::paper_run(&id, &cfg, fmt.json)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fmt = cli.fmt;
    if let Err(e) = init_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match dispatch(cli.command, fmt) {
        Ok(out) => {
            if fmt.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("values serialize"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
