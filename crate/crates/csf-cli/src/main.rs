//! Command-line front end: expansion, leading terms, closed-form formulas,
//! structural inference, the oracle cross-check, enumeration, collision
//! search, and the theorem-verification sweep.
//!
//! JSON is the machine format on stdout; `--pretty` renders aligned tables.
//! Exit codes: 0 success, 1 failed check or data error, 2 usage error.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use csf_core::enumerate::{collision_search, enumerate_unicyclic, enumerate_unicyclic_all, verify_theorems};
use csf_core::formulas::{self, BicyclicShape, DeepVertexProfile, HookParams, RCase};
use csf_core::graph::Graph;
use csf_core::infer::infer;
use csf_core::io::{parse_edge_list, to_graph6};
use csf_core::psum::oracle_star_expansion;
use csf_core::star::{star_expand, StarExpansion};
use csf_core::words::{count_lambda_words, lambda_word_counts, WordFamily};
use csf_core::Partition;
use num_bigint::BigInt;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "csf", version, about = "Star-basis chromatic symmetric function engine")]
struct Cli {
    /// Cap the rayon worker count.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Render human tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand X_G in the star basis and emit the JSON expansion.
    Expand(GraphInput),
    /// Emit only the leading (lexicographically minimal) term.
    Leading(GraphInput),
    /// Evaluate a closed-form formula.
    Formula {
        #[command(subcommand)]
        which: Formula,
    },
    /// Read an expansion (JSON) and emit the structural report.
    Infer {
        /// Expansion file; stdin when omitted.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Assert the DNC engine and the power-sum oracle agree on a graph.
    OracleCheck(GraphInput),
    /// Stream connected unicyclic graphs as graph6 lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Restrict to one cycle size; all sizes when omitted.
        #[arg(long)]
        cycle: Option<usize>,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
    },
    /// Group the (n, c) enumeration by exact CSF equality.
    Collisions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cycle: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Fingerprint cache directory (or env CSF_CACHE_DIR).
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Sweep every structural theorem over the enumeration up to n-max.
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Edge-list file ("n <count>" header, then "u v" lines).
    #[arg(long, conflicts_with_all = ["graph6", "family"])]
    file: Option<PathBuf>,
    /// A graph6 string.
    #[arg(long, conflicts_with = "family")]
    graph6: Option<String>,
    /// Builtin family: path, cycle, star, pan, paw, cuttlefish, bicyclic.
    #[arg(long, requires_ifs = [
        ("path", "n"), ("cycle", "n"), ("star", "n"), ("pan", "n"),
        ("cuttlefish", "c"), ("cuttlefish", "t"),
        ("bicyclic", "shape"), ("bicyclic", "s"), ("bicyclic", "t"),
    ])]
    family: Option<FamilyName>,
    /// Vertex count for path/cycle/star/pan.
    #[arg(long)]
    n: Option<usize>,
    /// Cycle size for cuttlefish.
    #[arg(long)]
    c: Option<usize>,
    /// Leaf count for cuttlefish; second cycle for bicyclic.
    #[arg(long)]
    t: Option<usize>,
    /// First cycle size for bicyclic.
    #[arg(long)]
    s: Option<usize>,
    /// Path parameter ℓ for bicyclic.
    #[arg(long)]
    ell: Option<usize>,
    /// Bicyclic shape.
    #[arg(long)]
    shape: Option<ShapeName>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Path,
    Cycle,
    Star,
    Pan,
    Paw,
    Cuttlefish,
    Bicyclic,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeName {
    Type1,
    Type2,
}

#[derive(Clone, Copy, ValueEnum)]
enum WordFamilyName {
    Path,
    Cycle,
    Pan,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseName {
    R1,
    Rge2,
}

#[derive(Subcommand)]
enum Formula {
    /// Tree hook coefficient (−1)^m1 C(k, m1).
    TreeHook {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m1: u32,
    },
    /// Unicyclic hook coefficient from (n, c, k, r, m1).
    UnicyclicHook {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m1: u32,
    },
    /// Longest nonzero hook and its coefficient from (c, k, r).
    LongestHook {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
    },
    /// Full star expansion of the path P_n (n ≥ 4).
    Path {
        #[arg(long)]
        n: u32,
    },
    /// Full star expansion of the cycle C_n (n ≥ 3).
    Cycle {
        #[arg(long)]
        n: u32,
    },
    /// Full star expansion of the pan on n vertices (n ≥ 4).
    Pan {
        #[arg(long)]
        n: u32,
    },
    /// Count valid λ-words (per λ, or for one λ).
    LambdaWords {
        #[arg(long)]
        family: WordFamilyName,
        #[arg(long)]
        n: u32,
        /// Partition as "3+2+1+1" or "[3,2,1,1]"; all partitions when omitted.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Leading coefficient of a tree from its deep-vertex degrees.
    LeadCoeffTree {
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
    },
    /// Leading coefficient, one non-trivial tree (degrees are those of T′;
    /// list the root degree first when it is a sprout).
    LeadCoeffR1 {
        #[arg(long)]
        c: u32,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        degrees: Vec<u32>,
        #[arg(long)]
        sprout: bool,
    },
    /// Leading coefficient, at least two non-trivial trees.
    LeadCoeffRge2 {
        #[arg(long)]
        r: u32,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        sprout_degrees: Vec<u32>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        deep_degrees: Vec<u32>,
    },
    /// Leading partition (t+1, 2, 1^{c−3}) of the cuttlefish.
    CuttlefishLeading {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        t: u32,
    },
    /// c_(n) of a bicyclic graph.
    BicyclicCn {
        #[arg(long)]
        shape: ShapeName,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 1)]
        ell: u32,
    },
    /// Leaf count implied by a leading partition.
    NumLeaves {
        #[arg(long)]
        leading: String,
        #[arg(long)]
        case: CaseName,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn read_stdin() -> Result<String> {
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
    Ok(buf)
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    if let Some(path) = &input.file {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        return Ok(parse_edge_list(&text)?);
    }
    if let Some(s) = &input.graph6 {
        return Ok(csf_core::io::from_graph6(s)?);
    }
    if let Some(family) = input.family {
        let need_n = || input.n.ok_or_else(|| anyhow!("--n is required for this family"));
        return Ok(match family {
            FamilyName::Path => csf_core::families::path(need_n()?)?,
            FamilyName::Cycle => csf_core::families::cycle(need_n()?)?,
            FamilyName::Star => csf_core::families::star(need_n()?)?,
            FamilyName::Pan => csf_core::families::pan(need_n()?)?,
            FamilyName::Paw => csf_core::families::paw(),
            FamilyName::Cuttlefish => {
                let c = input.c.ok_or_else(|| anyhow!("cuttlefish needs --c"))?;
                let t = input.t.ok_or_else(|| anyhow!("cuttlefish needs --t"))?;
                csf_core::families::cuttlefish(c, t)?
            }
            FamilyName::Bicyclic => {
                let shape = input.shape.ok_or_else(|| anyhow!("bicyclic needs --shape"))?;
                let s = input.s.ok_or_else(|| anyhow!("bicyclic needs --s"))?;
                let t = input.t.ok_or_else(|| anyhow!("bicyclic needs --t"))?;
                let ell = input.ell.unwrap_or(1);
                match shape {
                    ShapeName::Type1 => csf_core::families::bicyclic_type1(s, t, ell)?,
                    ShapeName::Type2 => csf_core::families::bicyclic_type2(s, t, ell)?,
                }
            }
        });
    }
    // stdin: sniff edge list vs graph6
    let text = read_stdin()?;
    let trimmed = text.trim_start();
    if trimmed.starts_with("n ") || trimmed.starts_with('#') {
        Ok(parse_edge_list(&text)?)
    } else {
        Ok(csf_core::io::from_graph6(text.trim())?)
    }
}

fn print_expansion(x: &StarExpansion, pretty: bool) -> Result<()> {
    if pretty {
        println!("degree n = {}", x.degree());
        let width = x.iter().map(|(_, c)| c.to_string().len()).max().unwrap_or(1);
        for (lam, c) in x.iter() {
            println!("  {c:>width$}  st_{lam}");
        }
    } else {
        println!("{}", serde_json::to_string(x)?);
    }
    Ok(())
}

fn json_number(value: &BigInt) -> Result<serde_json::Value> {
    Ok(serde_json::Value::Number(
        serde_json::Number::from_str(&value.to_string()).context("numeric conversion")?,
    ))
}

fn print_value(name: &str, value: &BigInt, pretty: bool) -> Result<()> {
    if pretty {
        println!("{name} = {value}");
    } else {
        let doc = serde_json::json!({ "formula": name, "value": json_number(value)? });
        println!("{doc}");
    }
    Ok(())
}

fn word_family(name: WordFamilyName) -> WordFamily {
    match name {
        WordFamilyName::Path => WordFamily::Path,
        WordFamilyName::Cycle => WordFamily::Cycle,
        WordFamilyName::Pan => WordFamily::Pan,
    }
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Expand(input) => {
            let g = load_graph(input)?;
            print_expansion(&star_expand(&g), cli.pretty)?;
        }
        Command::Leading(input) => {
            let g = load_graph(input)?;
            let (lam, coeff) = star_expand(&g).leading_term()?;
            if cli.pretty {
                println!("leading term: {coeff} · st_{lam}");
            } else {
                let doc = serde_json::json!({
                    "partition": lam.parts(),
                    "coefficient": json_number(&coeff)?,
                });
                println!("{doc}");
            }
        }
        Command::Formula { which } => run_formula(which, cli.pretty)?,
        Command::Infer { file } => {
            let text = match file {
                Some(path) => std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?,
                None => read_stdin()?,
            };
            let x: StarExpansion = serde_json::from_str(&text).context("parsing expansion JSON")?;
            let report = infer(&x)?;
            if cli.pretty {
                println!("n                = {}", report.n);
                println!("cycle size       = {}", report.cycle_size);
                println!("pure cycle       = {}", report.is_pure_cycle);
                println!("longest hook m   = {}", report.longest_hook_m);
                println!("(k, r) candidates = {:?}", report.kr_candidates);
                println!("leaf counts      = {:?}", report.leaf_count_candidates);
                println!("cuttlefish       = {}", report.is_cuttlefish);
            } else {
                println!("{}", serde_json::to_string(&report)?);
            }
        }
        Command::OracleCheck(input) => {
            let g = load_graph(input)?;
            let engine = star_expand(&g);
            let oracle = oracle_star_expansion(&g)?;
            if engine != oracle {
                bail!("engine and power-sum oracle disagree on {}", to_graph6(&g)?);
            }
            let doc = serde_json::json!({
                "ok": true,
                "n": g.vertex_count(),
                "edges": g.edge_count(),
                "support": engine.support_len(),
            });
            println!("{doc}");
        }
        Command::Enumerate { n, cycle, count } => {
            let graphs = match cycle {
                Some(c) => enumerate_unicyclic(*n, *c)?,
                None => enumerate_unicyclic_all(*n)?,
            };
            if *count {
                println!("{}", graphs.len());
            } else {
                for g in &graphs {
                    println!("{}", to_graph6(g)?);
                }
            }
        }
        Command::Collisions { n, cycle, out, cache_dir } => {
            let cache = cache_dir
                .clone()
                .or_else(|| std::env::var_os("CSF_CACHE_DIR").map(PathBuf::from));
            let report = collision_search(*n, *cycle, cache.as_deref())?;
            let body = if cli.pretty {
                let mut s = format!(
                    "n = {}, c = {}: {} CSF-equal pair(s) in {} class(es)\n",
                    report.n,
                    report.c,
                    report.pair_count,
                    report.classes.len()
                );
                for class in &report.classes {
                    s.push_str(&format!("  [{}] {}\n", class.expansion_ref, class.graphs.join(" ")));
                }
                s
            } else {
                serde_json::to_string(&report)? + "\n"
            };
            match out {
                Some(path) => std::fs::write(path, body)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{body}"),
            }
        }
        Command::Verify { n_max } => {
            let report = verify_theorems(*n_max)?;
            if cli.pretty {
                println!("checked {} graphs up to n = {}", report.graphs_checked, report.n_max);
                for c in &report.checks {
                    let status = if c.fail == 0 { "ok" } else { "FAIL" };
                    print!("  {status:<4} {:<26} pass {:<7} fail {}", c.name, c.pass, c.fail);
                    if let Some(ce) = &c.counterexample {
                        print!("  counterexample {ce}");
                    }
                    println!();
                }
            } else {
                println!("{}", serde_json::to_string(&report)?);
            }
            if !report.all_passed() {
                bail!("verification found counterexamples");
            }
        }
    }
    Ok(())
}

fn run_formula(which: &Formula, pretty: bool) -> Result<()> {
    match which {
        Formula::TreeHook { k, m1 } => {
            print_value("tree-hook", &formulas::tree_hook_coeff(*k, *m1), pretty)?;
        }
        Formula::UnicyclicHook { n, c, k, r, m1 } => {
            let params = HookParams { n: *n, c: *c, k: *k, r: *r, m1: *m1 };
            print_value("unicyclic-hook", &formulas::unicyclic_hook_coeff(params), pretty)?;
        }
        Formula::LongestHook { c, k, r } => {
            let (m, coeff) = formulas::longest_hook_data(*c, *k, *r);
            if pretty {
                println!("longest hook m1 = {m}, coefficient = {coeff}");
            } else {
                let doc = serde_json::json!({ "m1": m, "coefficient": json_number(&coeff)? });
                println!("{doc}");
            }
        }
        Formula::Path { n } => print_expansion(&formulas::path_csf(*n)?, pretty)?,
        Formula::Cycle { n } => print_expansion(&formulas::cycle_csf(*n)?, pretty)?,
        Formula::Pan { n } => print_expansion(&formulas::pan_csf(*n)?, pretty)?,
        Formula::LambdaWords { family, n, lambda } => {
            let fam = word_family(*family);
            match lambda {
                Some(text) => {
                    let lam = Partition::parse(text)?;
                    let count = count_lambda_words(fam, *n, &lam)?;
                    print_value("lambda-words", &count, pretty)?;
                }
                None => {
                    let counts = lambda_word_counts(fam, *n)?;
                    if pretty {
                        for (lam, count) in &counts {
                            println!("  {count:>6}  {lam}");
                        }
                    } else {
                        let items: Vec<serde_json::Value> = counts
                            .iter()
                            .map(|(lam, count)| {
                                Ok(serde_json::json!({
                                    "partition": lam.parts(),
                                    "count": json_number(count)?,
                                }))
                            })
                            .collect::<Result<_>>()?;
                        println!("{}", serde_json::Value::Array(items));
                    }
                }
            }
        }
        Formula::LeadCoeffTree { degrees } => {
            print_value("lead-coeff-tree", &formulas::lead_coeff_tree(degrees), pretty)?;
        }
        Formula::LeadCoeffR1 { c, degrees, sprout } => {
            let v = formulas::lead_coeff_unicyclic_r1(*c, degrees, *sprout);
            print_value("lead-coeff-r1", &v, pretty)?;
        }
        Formula::LeadCoeffRge2 { r, sprout_degrees, deep_degrees } => {
            let profile = DeepVertexProfile {
                sprout_degrees: sprout_degrees.clone(),
                nonsprout_deep_degrees: deep_degrees.clone(),
            };
            let v = formulas::lead_coeff_unicyclic_rge2(&profile, *r)?;
            print_value("lead-coeff-rge2", &v, pretty)?;
        }
        Formula::CuttlefishLeading { c, t } => {
            let lam = formulas::cuttlefish_leading(*c, *t);
            if pretty {
                println!("leading partition = {lam}");
            } else {
                println!("{}", serde_json::json!({ "partition": lam.parts() }));
            }
        }
        Formula::BicyclicCn { shape, s, t, ell } => {
            let shape = match shape {
                ShapeName::Type1 => BicyclicShape::TypeI,
                ShapeName::Type2 => BicyclicShape::TypeII,
            };
            print_value("bicyclic-cn", &formulas::bicyclic_cn(shape, *s, *t, *ell), pretty)?;
        }
        Formula::NumLeaves { leading, case } => {
            let lam = Partition::parse(leading)?;
            let case = match case {
                CaseName::R1 => RCase::R1,
                CaseName::Rge2 => RCase::RGe2,
            };
            let v = BigInt::from(formulas::num_leaves_from_leading(&lam, case));
            print_value("num-leaves", &v, pretty)?;
        }
    }
    Ok(())
}
