//! Command-line interface: every invariant of the library behind one
//! binary, with human-readable tables or canonical JSON.

mod report;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use brieskorn::{Budget, ExponentTuple, FamilySign};

#[derive(Parser)]
#[command(
    name = "brieskorn",
    version,
    about = "Exact invariants of Brieskorn manifolds: signatures, sphere and almost-contact \
             classification, index and rank tables, mean Euler characteristics, and the search \
             for exotic but homotopically standard contact spheres"
)]
struct Cli {
    /// Emit canonical JSON instead of human-readable tables
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for counting loops and the search (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Enumeration budget in tuple visits (default 100000000; the
    /// BRIESKORN_BUDGET environment variable overrides the default)
    #[arg(long, global = true, value_name = "VISITS")]
    budget: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: Milnor number, signature counts, sphere verdict,
    /// diffeomorphism type, almost-contact class, mean Euler characteristic
    Invariants {
        /// Exponents a_0 ... a_n (each >= 2, at least two)
        #[arg(required = true, num_args = 2..)]
        exponents: Vec<u64>,
    },

    /// Signature lattice counts of the Milnor filling
    Signature {
        #[arg(required = true, num_args = 2..)]
        exponents: Vec<u64>,
        /// Counting route
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
        /// Also print the central-limit estimate (heuristic, floating point)
        #[arg(long)]
        estimate: bool,
    },

    /// Mean Euler characteristic with the per-stratum audit table
    #[command(name = "chi-m")]
    ChiM {
        #[arg(required = true, num_args = 2..)]
        exponents: Vec<u64>,
    },

    /// Almost-contact group and class, and homotopical standardness
    Classify {
        #[arg(required = true, num_args = 2..)]
        exponents: Vec<u64>,
    },

    /// Graded rank tables (chain, homology, generator, contact-homology,
    /// relative-homology)
    #[command(name = "sh-table")]
    ShTable {
        #[arg(long, value_enum)]
        kind: TableKind,
        /// The parameter l of Sigma(2l, 2, ..., 2) or Sigma(lp, p, 2, 2)
        #[arg(long, default_value_t = 2)]
        ell: u64,
        /// Tuple index n (the manifold has dimension 2n-1)
        #[arg(long, default_value_t = 3)]
        n: u64,
        #[arg(long, value_name = "D")]
        max_degree: i64,
        /// The parameter p of Sigma(lp, p, 2, 2); required for --kind ch
        #[arg(long)]
        p: Option<u64>,
    },

    /// Brute-force search for exotic but homotopically standard contact
    /// 7-spheres
    Search {
        #[arg(long, value_name = "S")]
        s_min: u64,
        #[arg(long, value_name = "S")]
        s_max: u64,
    },

    /// Zero-almost-contact connected-sum combination of two sphere tuples
    Combo {
        /// Exponents of the positive-class sphere
        #[arg(long, required = true, num_args = 2.., value_name = "EXP")]
        sigma1: Vec<u64>,
        /// Exponents of the negative-class sphere
        #[arg(long, required = true, num_args = 2.., value_name = "EXP")]
        sigma2: Vec<u64>,
    },

    /// Scaled family a_0 = k*M +/- 1 over a base tuple
    Family {
        /// Base exponents a_1 ... a_n
        #[arg(long, required = true, num_args = 1.., value_name = "EXP")]
        base: Vec<u64>,
        /// Common multiple of the base exponents (default: their lcm)
        #[arg(long, value_name = "M")]
        modulus: Option<u64>,
        /// +1 or -1
        #[arg(long, default_value = "+1", allow_hyphen_values = true)]
        sign: String,
        /// Family parameter to evaluate
        #[arg(long, default_value_t = 1)]
        k: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Fast,
    Naive,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Chain,
    Homology,
    Generators,
    Ch,
    Relative,
}

fn resolve_budget(flag: Option<u128>) -> Result<Budget> {
    if let Some(b) = flag {
        return Ok(Budget(b));
    }
    if let Ok(env) = std::env::var("BRIESKORN_BUDGET") {
        let parsed = env
            .parse::<u128>()
            .with_context(|| format!("invalid BRIESKORN_BUDGET value `{env}`"))?;
        return Ok(Budget(parsed));
    }
    Ok(Budget::DEFAULT)
}

fn tuple_from(exponents: &[u64]) -> Result<ExponentTuple> {
    ExponentTuple::new(exponents.iter().copied()).map_err(Into::into)
}

fn run(cli: Cli) -> Result<()> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("failed to configure worker pool")?;
    }
    let budget = resolve_budget(cli.budget)?;
    let json = cli.json;
    match cli.command {
        Command::Invariants { exponents } => {
            report::invariants(&tuple_from(&exponents)?, budget, json)
        }
        Command::Signature {
            exponents,
            method,
            estimate,
        } => {
            let tuple = tuple_from(&exponents)?;
            let (fast, naive) = match method {
                Method::Fast => (true, false),
                Method::Naive => (false, true),
                Method::Both => (true, true),
            };
            report::signature(&tuple, budget, fast, naive, estimate, json)
        }
        Command::ChiM { exponents } => report::chi_m(&tuple_from(&exponents)?, budget, json),
        Command::Classify { exponents } => report::classify(&tuple_from(&exponents)?, budget, json),
        Command::ShTable {
            kind,
            ell,
            n,
            max_degree,
            p,
        } => {
            if ell < 1 {
                bail!("--ell must be >= 1");
            }
            match kind {
                TableKind::Chain => {
                    report::rank_table(&brieskorn::sc_plus_ranks(ell, n, max_degree)?, json)
                }
                TableKind::Homology => {
                    let table = if n == 3 {
                        brieskorn::sh_plus_dim5(ell, max_degree)?
                    } else {
                        brieskorn::sh_plus_high_dim(ell, n, max_degree)?
                    };
                    report::rank_table(&table, json)
                }
                TableKind::Generators => {
                    if n != 3 {
                        bail!("generator tables are available for n = 3 only");
                    }
                    if ell < 2 {
                        bail!("generator tables need --ell >= 2");
                    }
                    report::generators(&brieskorn::generator_table(ell, max_degree)?, json)
                }
                TableKind::Ch => {
                    let p = p.ok_or_else(|| anyhow!("--kind ch requires --p"))?;
                    report::rank_table(&brieskorn::ch_ranks_lp(p, max_degree)?, json)
                }
                TableKind::Relative => {
                    report::rank_table(&brieskorn::relative_homology_ranks(ell, n)?, json)
                }
            }
        }
        Command::Search { s_min, s_max } => {
            if !(1 <= s_min && s_min <= s_max) {
                bail!("need 1 <= --s-min <= --s-max");
            }
            report::search(s_min, s_max, budget, json)
        }
        Command::Combo { sigma1, sigma2 } => {
            let recipe = brieskorn::find_trivial_ac_combo(
                &tuple_from(&sigma1)?,
                &tuple_from(&sigma2)?,
                budget,
            )?;
            report::combo(&recipe, json)
        }
        Command::Family {
            base,
            modulus,
            sign,
            k,
        } => {
            let sign = match sign.as_str() {
                "+1" | "1" | "plus" => FamilySign::Plus,
                "-1" | "minus" => FamilySign::Minus,
                other => bail!("--sign must be +1 or -1, got `{other}`"),
            };
            if k < 1 {
                bail!("--k must be >= 1");
            }
            let base = ExponentTuple::new(base.iter().copied())?;
            let modulus = match modulus {
                Some(m) => m,
                None => u64::try_from(base.lcm()?)
                    .map_err(|_| anyhow!("base lcm does not fit the modulus type"))?,
            };
            report::family(&base, modulus, sign, k, budget, json)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
