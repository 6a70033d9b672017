use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use superloop::automorphisms::random::{random_inner, seeded};
use superloop::automorphisms::{f_group, family_arc, outer_class, representative, AutMorphism, Generator};
use superloop::families::{build_family, Family, FamilySpec};
use superloop::io::{read_algebra, read_automorphism, write_algebra, write_automorphism, IoError};
use superloop::loops::{enumerate_loop_classes, loop_iso_decide, LoopVerdict};
use superloop::superalgebra::LieSuperalgebra;
use superloop::table::{g0_dimension, outer_matches_table, TABLE};

const SUCCESS: u8 = 0;
const FALSE: u8 = 1;
const USAGE: u8 = 2;
const VERIFICATION: u8 = 3;

/// Simple Lie superalgebras, their outer automorphism classes and twisted loop algebras,
/// computed in exact arithmetic.
///
/// Scalars are cyclotomic numbers written `cyc(N)[c0,c1,...]` or plain rationals. The
/// largest conductor is 60 unless SUPERLOOP_MAX_CONDUCTOR says otherwise.
///
/// Exit codes: 0 success, 1 verified false (e.g. not isomorphic), 2 usage or input
/// error, 3 verification failure.
#[derive(Parser, Debug)]
#[command(name = "superloop", version)]
struct Cli {
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of randomized trials
    #[arg(long, global = true, default_value_t = 25)]
    trials: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family member and write its algebra file
    Build {
        /// Family, e.g. `sl(2|1)`, `psq(3)`, `osp(4|2)`, `D(cyc(3)[0,1])`, `H(4)`
        #[arg(long)]
        family: String,
        /// Output algebra file
        #[arg(short, long)]
        output: PathBuf,
        /// Also write an automorphism: a comma-separated word in tau, pi, sigma_q, r
        #[arg(long, conflicts_with = "class")]
        witness: Option<String>,
        /// Also write the representative of this outer class (its index in F)
        #[arg(long)]
        class: Option<u32>,
        /// Where to write the automorphism
        #[arg(long)]
        aut_output: Option<PathBuf>,
    },
    /// Check the axioms, simplicity, centroid and even derivations of an algebra file,
    /// and test the outer-class classifier on random inner twists of each representative
    Verify { file: PathBuf },
    /// Print the outer class and order of an automorphism
    Classify { file: PathBuf, automorphism: PathBuf },
    /// Decide whether two twisted loop algebras are isomorphic
    LoopIso { file1: PathBuf, aut1: PathBuf, file2: PathBuf, aut2: PathBuf },
    /// List the isomorphism classes of twisted loop algebras of a family
    LoopClasses {
        #[arg(long)]
        family: String,
    },
    /// Print the automorphism table with computed checks for the constructed families
    Table,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(e: impl ToString) -> Failure {
    Failure { code: USAGE, message: e.to_string() }
}

fn verification(e: impl ToString) -> Failure {
    Failure { code: VERIFICATION, message: e.to_string() }
}

fn io_failure(path: &Path, e: IoError) -> Failure {
    usage(format!("{}: {e}", path.display()))
}

type Outcome = Result<(u8, String), Failure>;

fn parse_family(s: &str) -> Result<FamilySpec, Failure> {
    s.parse().map_err(usage)
}

fn parse_word(word: &str) -> Result<Vec<Generator>, Failure> {
    word.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s {
            "tau" => Ok(Generator::Tau),
            "pi" => Ok(Generator::Pi),
            "sigma_q" => Ok(Generator::SigmaQ),
            "r" => Ok(Generator::R),
            other => Err(usage(format!("--witness: unknown generator `{other}` (expected tau, pi, sigma_q or r)"))),
        })
        .collect()
}

fn build(family: &str, output: &Path, witness: Option<&str>, class: Option<u32>, aut_output: Option<&Path>) -> Outcome {
    let spec = parse_family(family)?;
    let family = family_arc(&spec).map_err(usage)?;
    write_algebra(output, &family.algebra, Some(&spec)).map_err(|e| io_failure(output, e))?;
    let mut out = String::new();
    let (e, o) = (family.algebra.even_dim(), family.algebra.odd_dim());
    writeln!(out, "family: {spec}").unwrap();
    writeln!(out, "dim: {} ({e}|{o})", e + o).unwrap();
    writeln!(out, "algebra_file: {}", output.display()).unwrap();
    let sigma = match (witness, class) {
        (Some(w), _) => Some(AutMorphism::from_witness(&family, parse_word(w)?).map_err(usage)?),
        (None, Some(c)) => {
            let group = f_group(&spec).map_err(usage)?;
            let c = group.element(c).map_err(usage)?;
            Some(representative(&family, &c).map_err(usage)?)
        }
        (None, None) => None,
    };
    match (sigma, aut_output) {
        (Some(s), Some(path)) => {
            write_automorphism(path, &s).map_err(|e| io_failure(path, e))?;
            writeln!(out, "automorphism_file: {}", path.display()).unwrap();
        }
        (Some(_), None) => return Err(usage("--aut-output is required with --witness or --class")),
        (None, Some(_)) => return Err(usage("--aut-output needs --witness or --class")),
        (None, None) => {}
    }
    Ok((SUCCESS, out))
}

fn load_algebra(path: &Path) -> Result<(LieSuperalgebra, Option<FamilySpec>), Failure> {
    let doc = read_algebra(path).map_err(|e| io_failure(path, e))?;
    let spec = doc.family_spec().map_err(|e| io_failure(path, e))?;
    Ok((doc.to_algebra().map_err(|e| io_failure(path, e))?, spec))
}

fn load_family(path: &Path) -> Result<Arc<Family>, Failure> {
    read_algebra(path).and_then(|d| d.to_family()).map_err(|e| io_failure(path, e))
}

fn load_automorphism(family: &Arc<Family>, path: &Path) -> Result<AutMorphism, Failure> {
    read_automorphism(path).and_then(|d| d.to_automorphism(family)).map_err(|e| io_failure(path, e))
}

/// Checks `outer_class(g ∘ rep(c)) = c` for random inner `g` and every class `c`.
fn classifier_trials(spec: &FamilySpec, seed: u64, trials: usize) -> Result<(usize, usize), Failure> {
    let family = family_arc(spec).map_err(verification)?;
    let group = f_group(spec).map_err(verification)?;
    let mut rng = seeded(seed);
    let (mut run, mut failed) = (0, 0);
    for c in group.elements() {
        let rep = representative(&family, &c).map_err(verification)?;
        for _ in 0..trials {
            let g = random_inner(&family, &mut rng).map_err(verification)?;
            let twisted = g.compose(&rep).map_err(verification)?;
            run += 1;
            failed += usize::from(outer_class(&twisted).ok().as_ref() != Some(&c));
        }
    }
    Ok((run, failed))
}

fn verify(path: &Path, seed: u64, trials: usize) -> Outcome {
    let (g, spec) = load_algebra(path)?;
    let mut out = String::new();
    let mut ok = true;
    if let Some(s) = &spec {
        writeln!(out, "family: {s}").unwrap();
        if build_family(s).map(|f| f.algebra != g).unwrap_or(true) {
            return Err(usage(format!("{}: structure constants differ from the catalog {s}", path.display())));
        }
    }
    writeln!(out, "dim: {} ({}|{})", g.dim(), g.even_dim(), g.odd_dim()).unwrap();
    let violations = g.verify_structure();
    ok &= violations.is_empty();
    writeln!(out, "structure: {}", if violations.is_empty() { "ok" } else { "FAILED" }).unwrap();
    let simple = g.is_simple();
    ok &= simple;
    writeln!(out, "simple: {simple}").unwrap();
    let centroid = g.centroid().dim();
    ok &= centroid == 1;
    writeln!(out, "centroid_dim: {centroid}").unwrap();
    let derivations = g.even_derivations().dim();
    writeln!(out, "even_derivations_dim: {derivations}").unwrap();
    if let Some(expected) = spec.as_ref().and_then(g0_dimension) {
        writeln!(out, "table_g0_dim: {expected}").unwrap();
        writeln!(out, "table_match: {}", expected == derivations).unwrap();
        ok &= expected == derivations;
    }
    if let Some(s) = spec.as_ref().filter(|s| f_group(s).is_ok()) {
        let (run, failed) = classifier_trials(s, seed, trials)?;
        writeln!(out, "classifier_trials: {run}").unwrap();
        writeln!(out, "classifier: {}", if failed == 0 { "ok" } else { "FAILED" }).unwrap();
        ok &= failed == 0;
    }
    for v in violations.iter().take(5) {
        writeln!(out, "violation: {v}").unwrap();
    }
    Ok((if ok { SUCCESS } else { VERIFICATION }, out))
}

fn classify(file: &Path, aut: &Path) -> Outcome {
    let family = load_family(file)?;
    let sigma = load_automorphism(&family, aut)?;
    let class = outer_class(&sigma).map_err(verification)?;
    let order = sigma.order().map_or("infinite or beyond the search bound".to_string(), |o| o.to_string());
    let mut out = String::new();
    writeln!(out, "family: {}", family.spec).unwrap();
    writeln!(out, "group: {}", class.group).unwrap();
    writeln!(out, "class: {class}").unwrap();
    writeln!(out, "class_index: {}", class.element).unwrap();
    writeln!(out, "order: {order}").unwrap();
    writeln!(out).unwrap();
    writeln!(out, "class: {class}, order {order}").unwrap();
    Ok((SUCCESS, out))
}

fn loop_iso(file1: &Path, aut1: &Path, file2: &Path, aut2: &Path) -> Outcome {
    let (f1, f2) = (load_family(file1)?, load_family(file2)?);
    let (s1, s2) = (load_automorphism(&f1, aut1)?, load_automorphism(&f2, aut2)?);
    let decision = loop_iso_decide(&s1, &s2).map_err(verification)?;
    let code = match decision.verdict {
        LoopVerdict::Isomorphic => SUCCESS,
        LoopVerdict::NotIsomorphic => FALSE,
        LoopVerdict::Unsupported => USAGE,
    };
    Ok((code, format!("{decision}\n")))
}

fn word_text(s: &AutMorphism) -> String {
    match s.witness() {
        Some([]) => "identity".into(),
        Some(w) => w.iter().map(ToString::to_string).collect::<Vec<_>>().join(" o "),
        None => "matrix only".into(),
    }
}

fn loop_classes(family: &str) -> Outcome {
    let spec = parse_family(family)?;
    let family = family_arc(&spec).map_err(usage)?;
    let group = f_group(&spec).map_err(usage)?;
    let orbits = enumerate_loop_classes(&family).map_err(verification)?;
    let mut out = String::new();
    writeln!(out, "family: {spec}").unwrap();
    writeln!(out, "group: {group}").unwrap();
    writeln!(out, "classes: {}", orbits.len()).unwrap();
    for (i, o) in orbits.iter().enumerate() {
        let members: Vec<String> = o.classes.iter().map(ToString::to_string).collect();
        let rep = o.representative.as_ref().map_or("not constructed".to_string(), word_text);
        writeln!(out, "orbit {i}: {{{}}} representative: {rep}", members.join(", ")).unwrap();
    }
    writeln!(out).unwrap();
    writeln!(out, "{} classes", orbits.len()).unwrap();
    Ok((SUCCESS, out))
}

struct SampleReport {
    text: String,
    ok: bool,
}

fn table_sample(s: &str) -> SampleReport {
    let spec: FamilySpec = s.parse().expect("table samples parse");
    let outer = outer_matches_table(&spec) == Some(true);
    let expected = g0_dimension(&spec).expect("table samples have a row");
    let computed = family_arc(&spec).map(|f| f.algebra.even_derivations().dim());
    let (computed_text, dim_ok) = match computed {
        Ok(d) => (d.to_string(), d == expected),
        Err(e) => (format!("error ({e})"), false),
    };
    let mark = |b: bool| if b { "ok" } else { "MISMATCH" };
    SampleReport {
        text: format!(
            "  {spec}: F {} | G0 dim table {expected}, computed {computed_text} {}",
            mark(outer),
            mark(dim_ok)
        ),
        ok: outer && dim_ok,
    }
}

fn table() -> Outcome {
    let samples: Vec<Vec<SampleReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = TABLE
            .iter()
            .map(|row| scope.spawn(move || row.samples.iter().map(|s| table_sample(s)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("table worker")).collect()
    });
    let mut out = String::new();
    let mismatches = samples.iter().flatten().filter(|r| !r.ok).count();
    writeln!(out, "rows: {}", TABLE.len()).unwrap();
    writeln!(out, "samples: {}", samples.iter().map(Vec::len).sum::<usize>()).unwrap();
    writeln!(out, "mismatches: {mismatches}").unwrap();
    writeln!(out).unwrap();
    for (row, reports) in TABLE.iter().zip(&samples) {
        let split = if row.split { "yes" } else { "no" };
        writeln!(out, "{} | G0 = {} | F = {} | split: {split}", row.algebra, row.identity_component, row.outer)
            .unwrap();
        if reports.is_empty() {
            writeln!(out, "  (not constructed)").unwrap();
        }
        for r in reports {
            writeln!(out, "{}", r.text).unwrap();
        }
    }
    Ok((if mismatches == 0 { SUCCESS } else { VERIFICATION }, out))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Build { family, output, witness, class, aut_output } => {
            build(&family, &output, witness.as_deref(), class, aut_output.as_deref())
        }
        Command::Verify { file } => verify(&file, cli.seed, cli.trials),
        Command::Classify { file, automorphism } => classify(&file, &automorphism),
        Command::LoopIso { file1, aut1, file2, aut2 } => loop_iso(&file1, &aut1, &file2, &aut2),
        Command::LoopClasses { family } => loop_classes(&family),
        Command::Table => table(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { SUCCESS });
        }
    };
    match run(cli) {
        Ok((code, text)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
