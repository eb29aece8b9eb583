//! Batch command-line front end.
//!
//! Groups are described by small text files (`rank m` followed by `m i j v`
//! entries), words are space-separated 1-based generator indices, and
//! factorizations are `;`-separated words.  Braid words print in application
//! order: `2 -1` means "apply σ2, then σ1⁻¹".

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::bruhat::{directed_ball, restrict_to_subgroup};
use crate::coxeter::{CoxEntry, CoxeterSystem, Element, Word};
use crate::hurwitz::{hurwitz_orbit, straighten, transitivity_braid, Factorization};
use crate::parabolic::{
    is_standard_parabolic_coxeter_element_with, red_enumerate_in_with, red_enumerate_with,
    theorem2_check_with, DEFAULT_GROUP_BUDGET,
};
use crate::reflect::subgroup_closure;
use crate::{Error, Result};

/// Parse a group file: a `rank <m>` line, then `m <i> <j> <v>` lines with
/// 1 ≤ i < j ≤ m and v ∈ {2, 3, …} ∪ {inf}.  Unspecified pairs default to 2,
/// `#` starts a comment, blank lines are ignored.
pub fn parse_group_file(text: &str) -> Result<CoxeterSystem> {
    let mut rank: Option<usize> = None;
    let mut links: Vec<(usize, usize, CoxEntry)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tok = content.split_whitespace();
        let head = tok.next().expect("nonempty line has a first token");
        match head {
            "rank" => {
                if rank.is_some() {
                    return Err(Error::Parse { line, msg: "duplicate `rank` line".into() });
                }
                let v = tok.next().ok_or_else(|| Error::Parse {
                    line,
                    msg: "`rank` needs a value".into(),
                })?;
                let m: usize = v.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("invalid rank `{v}`"),
                })?;
                if m == 0 {
                    return Err(Error::Parse { line, msg: "rank must be at least 1".into() });
                }
                if tok.next().is_some() {
                    return Err(Error::Parse { line, msg: "trailing tokens after rank".into() });
                }
                rank = Some(m);
            }
            "m" => {
                let m = rank.ok_or_else(|| Error::Parse {
                    line,
                    msg: "`m` line before `rank`".into(),
                })?;
                let (Some(si), Some(sj), Some(sv), None) =
                    (tok.next(), tok.next(), tok.next(), tok.next())
                else {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `m <i> <j> <v>`".into(),
                    });
                };
                let i: usize = si.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("invalid index `{si}`"),
                })?;
                let j: usize = sj.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("invalid index `{sj}`"),
                })?;
                if i == 0 || j == 0 || i > m || j > m {
                    return Err(Error::Parse {
                        line,
                        msg: format!("indices must lie in 1..={m}"),
                    });
                }
                if i == j {
                    return Err(Error::Parse {
                        line,
                        msg: "diagonal entries are fixed at 1; need i < j".into(),
                    });
                }
                if i > j {
                    return Err(Error::Parse { line, msg: "indices must satisfy i < j".into() });
                }
                let entry = if sv == "inf" {
                    CoxEntry::Infinite
                } else {
                    let v: u32 = sv.parse().map_err(|_| Error::Parse {
                        line,
                        msg: format!("invalid entry `{sv}`; need an integer ≥ 2 or `inf`"),
                    })?;
                    if v < 2 {
                        return Err(Error::Parse {
                            line,
                            msg: format!("entry {v} is below 2"),
                        });
                    }
                    CoxEntry::Finite(v)
                };
                if !seen.insert((i, j)) {
                    return Err(Error::Parse {
                        line,
                        msg: format!("duplicate pair ({i}, {j})"),
                    });
                }
                links.push((i - 1, j - 1, entry));
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown directive `{other}`"),
                });
            }
        }
    }
    let m = rank.ok_or(Error::Parse { line: 1, msg: "missing `rank <m>` line".into() })?;
    CoxeterSystem::from_links(m, &links)
}

/// Parse a word of 1-based generator indices into 0-based form.
pub fn parse_word(sys: &CoxeterSystem, text: &str) -> Result<Word> {
    let mut word = Word::new();
    for tok in text.split_whitespace() {
        let v: usize = tok
            .parse()
            .map_err(|_| Error::Contract(format!("invalid generator index `{tok}`")))?;
        if v == 0 || v > sys.rank() {
            return Err(Error::Contract(format!(
                "generator index {v} out of range 1..={}",
                sys.rank()
            )));
        }
        word.push(v - 1);
    }
    Ok(word)
}

/// Parse a `;`-separated list of words as a reflection factorization.
pub fn parse_factorization(sys: &CoxeterSystem, text: &str) -> Result<Factorization> {
    let words: Vec<Word> = text
        .split(';')
        .map(|part| parse_word(sys, part))
        .collect::<Result<_>>()?;
    Factorization::from_words(sys, &words)
}

fn parse_reflection_list(sys: &CoxeterSystem, text: &str) -> Result<Vec<Element>> {
    text.split(';')
        .map(|part| parse_word(sys, part).and_then(|w| sys.element_from_word(&w)))
        .collect()
}

/// The 1-based canonical word of an element, space-separated; empty for e.
fn word_string(w: &Element) -> String {
    w.canonical_word()
        .iter()
        .map(|s| (s + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Parser)]
#[command(
    name = "coxhurwitz",
    about = "Exact Hurwitz-action and Bruhat-order computations in Coxeter groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the Hurwitz orbit of a reflection factorization
    Orbit(OrbitArgs),
    /// Straighten a factorization into a valley path with a braid witness
    Straighten(StraightenArgs),
    /// Braid carrying a factorization to the generator tuple of a Coxeter word
    Braid(BraidArgs),
    /// List the reduced reflection factorizations of an element
    Redfac(RedfacArgs),
    /// Run a verification battery; exits nonzero on failure
    Check(CheckArgs),
    /// Export a ball of the directed Bruhat graph as DOT
    Graph(GraphArgs),
}

#[derive(Args)]
struct OrbitArgs {
    /// Group file
    #[arg(short = 'g', long = "group")]
    group: PathBuf,
    /// Factorization: `;`-separated words of 1-based generator indices
    #[arg(short = 'f', long = "factorization")]
    factorization: String,
    /// Maximum number of orbit elements to enumerate
    #[arg(long)]
    budget: Option<usize>,
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct StraightenArgs {
    /// Group file
    #[arg(short = 'g', long = "group")]
    group: PathBuf,
    /// Factorization to straighten
    #[arg(short = 'f', long = "factorization")]
    factorization: String,
    /// Start vertex as a word (defaults to the identity)
    #[arg(short = 'x', long = "start")]
    start: Option<String>,
}

#[derive(Args)]
struct BraidArgs {
    /// Group file
    #[arg(short = 'g', long = "group")]
    group: PathBuf,
    /// Factorization to transport
    #[arg(short = 'f', long = "factorization")]
    factorization: String,
    /// Reduced, repetition-free word for the target Coxeter element
    #[arg(short = 'c', long = "coxeter-word")]
    coxeter_word: String,
}

#[derive(Args)]
struct RedfacArgs {
    /// Group file
    #[arg(short = 'g', long = "group")]
    group: PathBuf,
    /// Element whose factorizations to list, as a word
    #[arg(short = 'w', long = "word")]
    word: String,
    /// Restrict to the reflection subgroup generated by these reflections
    /// (`;`-separated words)
    #[arg(long)]
    subgroup: Option<String>,
}

#[derive(Args)]
#[command(group(
    ArgGroup::new("battery").required(true).multiple(false).args(["thm1", "thm2", "lemma21"])
))]
struct CheckArgs {
    /// Group file
    #[arg(short = 'g', long = "group")]
    group: PathBuf,
    /// Hurwitz transitivity on the Coxeter element s1⋯sn
    #[arg(long)]
    thm1: bool,
    /// Red_T = Red_{T'} on every standard parabolic subgroup
    #[arg(long)]
    thm2: bool,
    /// ℓ_T = ℓ exactly for products of distinct simple generators
    #[arg(long)]
    lemma21: bool,
}

#[derive(Args)]
struct GraphArgs {
    /// Group file
    #[arg(short = 'g', long = "group")]
    group: PathBuf,
    /// Ball radius in the directed Bruhat graph
    #[arg(long)]
    radius: usize,
    /// Output path for the DOT file
    #[arg(long)]
    dot: PathBuf,
    /// Induced subgraph on the reflection subgroup generated by these
    /// reflections (`;`-separated words); the ball must cover it
    #[arg(long)]
    subgroup: Option<String>,
}

/// Parse argv, run the selected command, and return the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Orbit(args) => cmd_orbit(args),
        Command::Straighten(args) => cmd_straighten(args),
        Command::Braid(args) => cmd_braid(args),
        Command::Redfac(args) => cmd_redfac(args),
        Command::Check(args) => cmd_check(args),
        Command::Graph(args) => cmd_graph(args),
    }
}

fn load_group(path: &Path) -> Result<CoxeterSystem> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_group_file(&text)
}

/// Search budget: explicit flag, else COXHURWITZ_BUDGET, else the default.
fn effective_budget(flag: Option<usize>) -> Result<usize> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("COXHURWITZ_BUDGET") {
        Ok(s) => {
            let v: usize = s.trim().parse().map_err(|_| {
                Error::Config(format!("COXHURWITZ_BUDGET must be a positive integer, got `{s}`"))
            })?;
            if v == 0 {
                return Err(Error::Config("COXHURWITZ_BUDGET must be positive".into()));
            }
            Ok(v)
        }
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_GROUP_BUDGET),
        Err(e) => Err(Error::Config(format!("COXHURWITZ_BUDGET: {e}"))),
    }
}

fn cmd_orbit(args: OrbitArgs) -> Result<i32> {
    let sys = load_group(&args.group)?;
    let f = parse_factorization(&sys, &args.factorization)?;
    let budget = effective_budget(args.budget)?;
    let orbit = hurwitz_orbit(&f, budget)?;
    if args.json {
        let val = serde_json::json!({
            "rank": sys.rank(),
            "product": word_string(f.product()),
            "size": orbit.len(),
            "orbit": orbit
                .iter()
                .map(|g| g.steps().iter().map(word_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        });
        let text = serde_json::to_string_pretty(&val)
            .map_err(|e| Error::Internal(format!("json encoding: {e}")))?;
        println!("{text}");
    } else {
        for g in &orbit {
            println!("{g}");
        }
        println!("size {}", orbit.len());
    }
    Ok(0)
}

fn cmd_straighten(args: StraightenArgs) -> Result<i32> {
    let sys = load_group(&args.group)?;
    let f = parse_factorization(&sys, &args.factorization)?;
    let x = match &args.start {
        Some(text) => sys.element_from_word(&parse_word(&sys, text)?)?,
        None => sys.identity(),
    };
    let (g, witness, pivot) = straighten(&f, &x)?;
    println!("tuple: {g}");
    println!("pivot: {pivot}");
    println!("witness: {witness}");
    Ok(0)
}

fn cmd_braid(args: BraidArgs) -> Result<i32> {
    let sys = load_group(&args.group)?;
    let f = parse_factorization(&sys, &args.factorization)?;
    let c_word = parse_word(&sys, &args.coxeter_word)?;
    let braid = transitivity_braid(&f, &c_word)?;
    println!("{braid}");
    Ok(0)
}

fn cmd_redfac(args: RedfacArgs) -> Result<i32> {
    let sys = load_group(&args.group)?;
    let w = sys.element_from_word(&parse_word(&sys, &args.word)?)?;
    let budget = effective_budget(None)?;
    let reds = match &args.subgroup {
        Some(text) => {
            let gens = parse_reflection_list(&sys, text)?;
            let sub = subgroup_closure(&gens, budget)?;
            red_enumerate_in_with(&w, &sub, budget)?
        }
        None => red_enumerate_with(&w, budget)?,
    };
    for f in &reds {
        if f.is_empty() {
            println!("e");
        } else {
            println!("{f}");
        }
    }
    println!("size {}", reds.len());
    Ok(0)
}

fn cmd_check(args: CheckArgs) -> Result<i32> {
    let sys = load_group(&args.group)?;
    let budget = effective_budget(None)?;
    let ok = if args.thm1 {
        battery_transitivity(&sys, budget)?
    } else if args.thm2 {
        battery_parabolic_factorizations(&sys, budget)?
    } else {
        battery_length_characterization(&sys, budget)?
    };
    if ok {
        println!("PASS");
        Ok(0)
    } else {
        println!("FAIL");
        Ok(1)
    }
}

/// The Hurwitz orbit of (s1, …, sn) must be exactly Red_T(s1⋯sn), and every
/// member must come with a verified transitivity braid.
fn battery_transitivity(sys: &CoxeterSystem, budget: usize) -> Result<bool> {
    let c_word: Word = (0..sys.rank()).collect();
    let c = sys.element_from_word(&c_word)?;
    let seed = Factorization::new(sys, sys.generators())?;
    let orbit = hurwitz_orbit(&seed, budget)?;
    let reds = red_enumerate_with(&c, budget)?;
    println!("coxeter element: {c}");
    println!("hurwitz orbit size: {}", orbit.len());
    println!("reduced factorization count: {}", reds.len());
    let equal = orbit == reds;
    println!("orbit equals Red_T: {}", if equal { "yes" } else { "no" });
    let mut verified = 0usize;
    for f in &reds {
        if transitivity_braid(f, &c_word).is_ok() {
            verified += 1;
        }
    }
    println!("transitivity braids verified: {verified}/{}", reds.len());
    Ok(equal && verified == reds.len())
}

/// Red_T(w) = Red_{T'}(w) for every element w of every standard parabolic
/// subgroup W'.
fn battery_parabolic_factorizations(sys: &CoxeterSystem, budget: usize) -> Result<bool> {
    let gens = sys.generators();
    let mut subgroups = 0usize;
    let mut checked = 0usize;
    let mut failures = 0usize;
    for mask in 1u64..(1u64 << sys.rank()) {
        let part: Vec<Element> = (0..sys.rank())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| gens[i].clone())
            .collect();
        let sub = subgroup_closure(&part, budget)?;
        subgroups += 1;
        for w in sub.elements() {
            checked += 1;
            if !theorem2_check_with(&sub, w, budget)? {
                failures += 1;
            }
        }
    }
    println!("standard parabolic subgroups checked: {subgroups}");
    println!("elements checked: {checked}");
    println!("failures: {failures}");
    Ok(failures == 0)
}

/// ℓ_T(w) = ℓ(w) exactly when some reduced word of w repeats no letter.
fn battery_length_characterization(sys: &CoxeterSystem, budget: usize) -> Result<bool> {
    let mut checked = 0usize;
    let mut failures = 0usize;
    for w in sys.enumerate_elements(budget)? {
        let by_length = is_standard_parabolic_coxeter_element_with(&w, budget)?;
        let by_words = w
            .reduced_words()
            .iter()
            .any(|word| word.iter().collect::<HashSet<_>>().len() == word.len());
        checked += 1;
        if by_length != by_words {
            failures += 1;
        }
    }
    println!("elements checked: {checked}");
    println!("failures: {failures}");
    Ok(failures == 0)
}

fn cmd_graph(args: GraphArgs) -> Result<i32> {
    let sys = load_group(&args.group)?;
    let budget = effective_budget(None)?;
    let ball = directed_ball(&sys, args.radius)?;
    let graph = match &args.subgroup {
        Some(text) => {
            let gens = parse_reflection_list(&sys, text)?;
            let sub = subgroup_closure(&gens, budget)?;
            restrict_to_subgroup(&ball, &sub)?
        }
        None => ball,
    };
    fs::write(&args.dot, graph.to_dot())
        .map_err(|e| Error::Config(format!("cannot write {}: {e}", args.dot.display())))?;
    println!(
        "wrote {} ({} vertices, {} edges)",
        args.dot.display(),
        graph.vertex_count(),
        graph.edge_count()
    );
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_file_examples() {
        let a2 = parse_group_file("rank 2\nm 1 2 3\n").unwrap();
        assert_eq!(a2.rank(), 2);
        assert_eq!(a2.entry(0, 1), CoxEntry::Finite(3));

        let i5 = parse_group_file("# pentagon\nrank 2\n\nm 1 2 5  # the only pair\n").unwrap();
        assert_eq!(i5.entry(0, 1), CoxEntry::Finite(5));
        assert_eq!(i5.group_order(100).unwrap(), 10);

        let infd = parse_group_file("rank 2\nm 1 2 inf\n").unwrap();
        assert_eq!(infd.entry(0, 1), CoxEntry::Infinite);

        // Unspecified pairs default to 2.
        let a1x3 = parse_group_file("rank 3\n").unwrap();
        assert_eq!(a1x3.entry(0, 2), CoxEntry::Finite(2));
        assert_eq!(a1x3.group_order(100).unwrap(), 8);
    }

    #[test]
    fn group_file_diagnostics() {
        let cases: &[(&str, usize, &str)] = &[
            ("rank 2\nm 1 2 3\nm 1 2 4\n", 3, "duplicate pair"),
            ("rank 2\nm 1 2 1\n", 2, "below 2"),
            ("rank 2\nm 2 2 3\n", 2, "diagonal"),
            ("rank 2\nm 2 1 3\n", 2, "i < j"),
            ("rank 2\nm 1 3 3\n", 2, "1..=2"),
            ("rank 2\nm 1 2\n", 2, "expected `m <i> <j> <v>`"),
            ("rank 2\nm 1 2 3 9\n", 2, "expected `m <i> <j> <v>`"),
            ("rank 2\nm 1 2 five\n", 2, "invalid entry"),
            ("rank x\n", 1, "invalid rank"),
            ("rank 0\n", 1, "at least 1"),
            ("m 1 2 3\nrank 2\n", 1, "before `rank`"),
            ("rank 2\nrank 2\n", 2, "duplicate `rank`"),
            ("rank 2\nq 1 2\n", 2, "unknown directive"),
            ("# nothing\n", 1, "missing `rank"),
        ];
        for (text, want_line, want_msg) in cases {
            match parse_group_file(text) {
                Err(Error::Parse { line, msg }) => {
                    assert_eq!(line, *want_line, "wrong line for {text:?}: {msg}");
                    assert!(
                        msg.contains(want_msg),
                        "message {msg:?} missing {want_msg:?}"
                    );
                }
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn word_and_factorization_parsing() {
        let a2 = parse_group_file("rank 2\nm 1 2 3\n").unwrap();
        assert_eq!(parse_word(&a2, "1 2 1").unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word(&a2, "").unwrap(), Vec::<usize>::new());
        assert!(matches!(parse_word(&a2, "3"), Err(Error::Contract(_))));
        assert!(matches!(parse_word(&a2, "0"), Err(Error::Contract(_))));
        assert!(matches!(parse_word(&a2, "x"), Err(Error::Contract(_))));

        let f = parse_factorization(&a2, "1 2 1 ; 1").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "1 2 1 ; 1");
        // Words that evaluate to non-reflections are rejected.
        assert!(matches!(
            parse_factorization(&a2, "1 2"),
            Err(Error::NotAReflection)
        ));
    }

    #[test]
    fn budget_resolution_prefers_the_flag() {
        // The env var is read only when no flag is given; flag values pass
        // through untouched.
        assert_eq!(effective_budget(Some(7)).unwrap(), 7);
    }
}
