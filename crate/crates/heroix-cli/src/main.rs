use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use heroix::chromatic::{chromatic_bounds, chromatic_number, Coloring, DEFAULT_CHROMATIC_LIMIT};
use heroix::colorings::u3_hero_coloring;
use heroix::containment::{
    contains_subtournament, is_hero, is_minimal_nonhero, survey_max_chromatic, HeroCertificate,
};
use heroix::enumerate::enumerate_tournaments_with_limit;
use heroix::error::Error;
use heroix::forest::{build_incomparable_map, find_forest_ordering, forest_two_coloring};
use heroix::generators::{generate, FamilySpec};
use heroix::structure::{is_prime, member_a, member_af, member_d};
use heroix::tournament::{strong_components, Ordering, Tournament};

use heroix_cli::format::{parse, serialize};
use heroix_cli::verify::{run_suite, VerifyConfig};

#[derive(Parser)]
#[command(name = "heroix", version, about = "Exact computation with tournaments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Alg {
    Exact,
    Forest,
    U3hero,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named family tournament (e.g. `gen d 3`, `gen delta2`)
    Gen {
        family: String,
        param: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact chromatic number of a tournament file (bounds past the limit)
    Chi { file: PathBuf },
    /// Color a tournament file with the chosen algorithm
    Color {
        file: PathBuf,
        #[arg(long, value_enum)]
        alg: Alg,
        /// Family index for the u3hero algorithm (colors with 3^(n-2))
        #[arg(long, default_value_t = 3)]
        n: u32,
    },
    /// Search for the pattern tournament inside the host tournament
    Contains { host: PathBuf, pattern: PathBuf },
    /// Hero analysis with certificate
    Hero { file: PathBuf },
    /// Search for a forest ordering
    Forest { file: PathBuf },
    /// Structural classification report
    Classify { file: PathBuf },
    /// Build an r-incomparable map for the file's row ordering
    Incomparable {
        file: PathBuf,
        #[arg(long)]
        r: u64,
    },
    /// List all isomorphism classes on n vertices
    Enumerate { n: usize },
    /// Maximum chromatic number over tournaments avoiding the given families
    Survey {
        /// Comma-separated family tokens, e.g. `d3,u3`
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<String>,
        #[arg(long)]
        max_n: usize,
    },
    /// Run a verification suite: core, forest, classes, heroes, colorings, all
    Verify {
        suite: String,
        /// Include the long-running opt-in checks (A_4 refutation)
        #[arg(long)]
        long: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Undecided(_) => fail(3, e.to_string()),
            other => fail(1, other.to_string()),
        }
    }
}

fn max_n_from_env() -> Result<usize, Failure> {
    match std::env::var("HEROIX_MAX_N") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| fail(2, format!("HEROIX_MAX_N must be an integer, got {v:?}"))),
        Err(_) => Ok(8),
    }
}

fn read_tournament(path: &Path) -> Result<(Tournament, Ordering), Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| fail(2, format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

fn family_from_args(family: &str, param: Option<u32>) -> Result<FamilySpec, Failure> {
    let token = match param {
        Some(p) => format!("{family}{p}"),
        None => family.to_string(),
    };
    token.parse::<FamilySpec>().map_err(|e| fail(2, e))
}

fn print_coloring(c: &Coloring) {
    println!("colors {}", c.k());
    for (v, color) in c.assign().iter().enumerate() {
        println!("{v} {color}");
    }
}

fn one_line(t: &Tournament) -> String {
    let mut rows = Vec::with_capacity(t.n());
    for u in t.vertices() {
        let row: String = t
            .vertices()
            .map(|v| if u != v && t.has_edge(u, v) { '1' } else { '0' })
            .collect();
        rows.push(row);
    }
    rows.join("|")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Gen { family, param, out } => {
            let spec = family_from_args(&family, param)?;
            let t = generate(&spec)?;
            let text = serialize(&t, &Ordering::identity(t.n()));
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| fail(2, format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Chi { file } => {
            let (t, _) = read_tournament(&file)?;
            if t.n() <= DEFAULT_CHROMATIC_LIMIT {
                let (chi, _) = chromatic_number(&t)?;
                println!("{chi}");
            } else {
                let (lo, hi) = chromatic_bounds(&t);
                println!("chi >= {lo}");
                println!("chi <= {hi}");
                println!(
                    "(bounds mode: {} vertices exceed the exact engine limit)",
                    t.n()
                );
            }
            Ok(0)
        }
        Command::Color { file, alg, n } => {
            let (t, order) = read_tournament(&file)?;
            let coloring = match alg {
                Alg::Exact => chromatic_number(&t)?.1,
                Alg::Forest => {
                    // The file's own row ordering is tried first, so large
                    // pre-ordered inputs skip the ordering search.
                    let found = if heroix::forest::is_forest_ordering(&t, &order)? {
                        order.clone()
                    } else {
                        match find_forest_ordering(&t)? {
                            Some(o) => o,
                            None => return Err(fail(1, "not a forest tournament")),
                        }
                    };
                    forest_two_coloring(&t, &found)?
                }
                Alg::U3hero => u3_hero_coloring(&t, n)?,
            };
            print_coloring(&coloring);
            Ok(0)
        }
        Command::Contains { host, pattern } => {
            let (h, _) = read_tournament(&host)?;
            let (p, _) = read_tournament(&pattern)?;
            match contains_subtournament(&h, &p)? {
                Some(emb) => {
                    let pairs: Vec<String> = emb
                        .map()
                        .iter()
                        .enumerate()
                        .map(|(pv, hv)| format!("{pv}->{hv}"))
                        .collect();
                    println!("embedding {}", pairs.join(" "));
                }
                None => println!("none"),
            }
            Ok(0)
        }
        Command::Hero { file } => {
            let (t, _) = read_tournament(&file)?;
            let analysis = is_hero(&t)?;
            if analysis.hero {
                println!("hero: yes");
            } else {
                println!("hero: no");
            }
            match analysis.certificate {
                HeroCertificate::Structure(tree) => println!("structure: {tree}"),
                HeroCertificate::ForbiddenWitness { pattern, embedding } => {
                    println!("contains {} at {:?}", pattern.name(), embedding.map());
                }
            }
            Ok(0)
        }
        Command::Forest { file } => {
            let (t, _) = read_tournament(&file)?;
            match find_forest_ordering(&t)? {
                Some(order) => {
                    let seq: Vec<String> = order.seq().iter().map(|v| v.to_string()).collect();
                    println!("forest ordering: {}", seq.join(" "));
                }
                None => println!("not a forest tournament"),
            }
            Ok(0)
        }
        Command::Classify { file } => {
            let (t, _) = read_tournament(&file)?;
            println!("vertices: {}", t.n());
            let comps = strong_components(&t);
            let rendered: Vec<String> = comps
                .iter()
                .map(|c| format!("{:?}", c.as_slice()))
                .collect();
            println!("strong components: {} {}", comps.len(), rendered.join(" "));
            println!("prime: {}", if is_prime(&t)? { "yes" } else { "no" });
            println!(
                "member_D: {}",
                if member_d(&t)?.member { "yes" } else { "no" }
            );
            println!(
                "member_A: {}",
                if member_a(&t)?.member { "yes" } else { "no" }
            );
            let af = member_af(&t)?;
            match af.case {
                Some(case) => println!("member_AF: yes ({case:?})"),
                None => println!("member_AF: no"),
            }
            let hero = is_hero(&t)?;
            println!("hero: {}", if hero.hero { "yes" } else { "no" });
            println!(
                "minimal non-hero: {}",
                if is_minimal_nonhero(&t)? { "yes" } else { "no" }
            );
            Ok(0)
        }
        Command::Incomparable { file, r } => {
            let (t, order) = read_tournament(&file)?;
            let map = build_incomparable_map(&t, &order, r)?;
            for (v, value) in map.phi.iter().enumerate() {
                println!("phi {v} {value}");
            }
            println!("r-incomparable at r={r}: verified");
            Ok(0)
        }
        Command::Enumerate { n } => {
            let limit = max_n_from_env()?;
            let list = enumerate_tournaments_with_limit(n, limit)?;
            println!("classes: {}", list.len());
            for t in &list {
                println!("{}", one_line(t));
            }
            Ok(0)
        }
        Command::Survey { forbid, max_n } => {
            let limit = max_n_from_env()?;
            if max_n > limit {
                return Err(fail(
                    2,
                    format!("--max-n {max_n} exceeds the enumeration limit {limit} (set HEROIX_MAX_N to raise it)"),
                ));
            }
            let mut patterns = Vec::new();
            for token in &forbid {
                let spec = token.parse::<FamilySpec>().map_err(|e| fail(2, e))?;
                patterns.push(generate(&spec)?);
            }
            let rows = survey_max_chromatic(&patterns, max_n, limit)?;
            println!("n free_classes max_chi witness");
            for row in rows {
                match (row.max_chi, row.witness) {
                    (Some(chi), Some(w)) => {
                        println!("{} {} {} {}", row.n, row.free_classes, chi, one_line(&w))
                    }
                    _ => println!("{} {} - -", row.n, row.free_classes),
                }
            }
            Ok(0)
        }
        Command::Verify { suite, long } => {
            let cfg = VerifyConfig {
                max_n: max_n_from_env()?,
                long,
                time_budget: Duration::from_secs(600),
            };
            let report = run_suite(&suite, &cfg)
                .ok_or_else(|| fail(2, format!("unknown suite {suite:?}; expected one of core, forest, classes, heroes, colorings, all")))?;
            print!("{}", report.render());
            Ok(report.exit_code())
        }
    }
}

/// Die quietly on a closed pipe, the way line-oriented tools do.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
