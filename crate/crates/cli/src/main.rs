use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::Value;

use qcrystal::crystal::{build_graph, GraphJson};
use qcrystal::orthogonal::{
    build_graph_o, enumerate_words_o, insert_factorization_o, insert_word_o, word_to_involution_o,
};
use qcrystal::verify::{
    check_ck_invariance, check_crystal_o, check_crystal_sp, check_factorization_bijection,
    check_word_bijection, summarize, Check,
};
use qcrystal::{
    enumerate_words, insert_factorization_sp, insert_word_sp, reverse_factorization_sp, reverse_insert_sp,
    Factorization, FpfInvolution, IncreasingShiftedTableau, InsertionError, InsertionPair, Involution,
    PrimedTableau, Variant, Word,
};

#[derive(Parser)]
#[command(name = "qcrystal", version, about = "Symplectic and orthogonal shifted insertion and queer crystals")]
struct Cli {
    /// Involution family: `sp` (fixed-point-free) or `o`.
    #[arg(long, global = true, default_value = "sp")]
    variant: Variant,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Read the main input from a JSON file instead of the command line.
    #[arg(long, global = true)]
    file: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// List the words of an involution, one per line.
    Words { involution: Option<String> },
    /// Insert a word such as `6241` or a factorization such as `(6)(24)(1)`.
    Insert { input: Option<String> },
    /// Recover a word (or, with `--m`, a factorization) from a JSON pair of tableaux.
    Reverse {
        insertion: Option<String>,
        recording: Option<String>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Emit the crystal graph on increasing factorizations.
    Graph {
        involution: Option<String>,
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    /// Run the invariant checks and print a report.
    Verify {
        /// A single involution; otherwise every involution up to `--window`.
        involution: Option<String>,
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long)]
        window: Option<usize>,
        /// Longest word used in the Coxeter-Knuth check.
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Compare a graph against a fixture with `involution`, `m`, `vertices`, `edges`.
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Delete one edge before checking; the report must then fail.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Standardize a primed tableau given as JSON.
    Standardize { tableau: Option<String> },
}

/// Failures that map to exit code 2 rather than 1.
#[derive(Debug)]
struct Rejected(String);

impl std::fmt::Display for Rejected {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Rejected {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(n) = std::env::var("QCRYSTAL_THREADS") {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: QCRYSTAL_THREADS must be a positive integer");
                return ExitCode::from(1);
            }
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => match e.downcast_ref::<Rejected>() {
            Some(r) => {
                print!("{r}");
                ExitCode::from(2)
            }
            None => {
                eprintln!("error: {}", describe(&e));
                ExitCode::from(1)
            }
        },
    }
}

// Error messages that already embed their source would repeat it.
fn describe(e: &anyhow::Error) -> String {
    let mut parts: Vec<String> = Vec::new();
    for cause in e.chain() {
        let msg = cause.to_string();
        if !parts.last().is_some_and(|prev| prev.contains(&msg)) {
            parts.push(msg);
        }
    }
    parts.join(": ")
}

fn run(cli: &Cli) -> Result<String> {
    let file = cli.file.as_deref().map(read_json).transpose()?;
    match &cli.command {
        Command::Words { involution } => {
            let words: Vec<String> = match cli.variant {
                Variant::Sp => enumerate_words(&fpf_arg(involution, &file)?).iter().map(Word::compact).collect(),
                Variant::O => enumerate_words_o(&inv_arg(involution, &file)?).iter().map(Word::compact).collect(),
            };
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => Ok(serde_json::to_string_pretty(&words)? + "\n"),
                Format::Text => Ok(words.iter().map(|w| format!("{w}\n")).collect()),
                Format::Dot => bail!("dot output is only available for graphs"),
            }
        }
        Command::Insert { input } => {
            let text = match (input, &file) {
                (Some(s), _) => s.clone(),
                (None, Some(Value::String(s))) => s.clone(),
                (None, Some(Value::Array(a))) => a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
                _ => bail!("expected a word or a factorization"),
            };
            let pair = insert(cli.variant, &text)?;
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => Ok(serde_json::to_string_pretty(&pair)? + "\n"),
                Format::Text => Ok(format!("P:\n{}\nQ:\n{}\n", pair.insertion, pair.recording)),
                Format::Dot => bail!("dot output is only available for graphs"),
            }
        }
        Command::Reverse { insertion, recording, m } => {
            if cli.variant == Variant::O {
                bail!("reverse insertion is only available for the sp variant");
            }
            let (p, q): (IncreasingShiftedTableau, PrimedTableau) = match (insertion, recording, file) {
                (Some(p), Some(q), _) => (parse_json(p, "insertion tableau")?, parse_json(q, "recording tableau")?),
                (None, None, Some(v)) => {
                    let pair: InsertionPair = serde_json::from_value(v).context("expected {insertion, recording}")?;
                    (pair.insertion, pair.recording)
                }
                _ => bail!("give both tableaux or --file"),
            };
            let out = match m {
                None => reverse_insert_sp(&p, &q).map(|w| w.compact()),
                Some(m) => reverse_factorization_sp(&p, &q, *m).map(|f| f.to_string()),
            };
            let out = out.map_err(|e| match e {
                InsertionError::NotInImage | InsertionError::Stuck { .. } | InsertionError::ShapeMismatch { .. } => {
                    anyhow!(Rejected(format!("not in the image of insertion: {e}\n")))
                }
                e => anyhow!(e),
            })?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => Ok(serde_json::to_string(&out)? + "\n"),
                Format::Text => Ok(format!("{out}\n")),
                Format::Dot => bail!("dot output is only available for graphs"),
            }
        }
        Command::Graph { involution, m } => {
            check_m(*m)?;
            let g = match cli.variant {
                Variant::Sp => build_graph(&fpf_arg(involution, &file)?, *m),
                Variant::O => build_graph_o(&inv_arg(involution, &file)?, *m),
            };
            match cli.format.unwrap_or(Format::Dot) {
                Format::Dot => Ok(g.to_dot()),
                Format::Json => Ok(serde_json::to_string_pretty(&g.to_json())? + "\n"),
                Format::Text => {
                    let j = g.to_json();
                    let mut out: String = j.vertices.iter().map(|v| format!("{v}\n")).collect();
                    for e in &j.edges {
                        out += &format!("{} -{}-> {}\n", e.src, e.label, e.dst);
                    }
                    Ok(out)
                }
            }
        }
        Command::Verify { involution, m, window, max_len, fixture, inject_fault } => {
            check_m(*m)?;
            let mut checks = Vec::new();
            if let Some(path) = fixture {
                checks.push(check_fixture(cli.variant, path)?);
            }
            if involution.is_some() || file.is_some() || fixture.is_none() || window.is_some() {
                checks.extend(sweep(cli, involution, &file, *m, *window, *max_len, *inject_fault)?);
            }
            let checks = summarize(checks);
            let out = match cli.format.unwrap_or(Format::Text) {
                Format::Json => serde_json::to_string_pretty(&checks)? + "\n",
                Format::Text => checks.iter().map(|c| format!("{c}\n")).collect(),
                Format::Dot => bail!("dot output is only available for graphs"),
            };
            if checks.iter().all(Check::passed) {
                Ok(out)
            } else {
                Err(anyhow!(Rejected(out)))
            }
        }
        Command::Standardize { tableau } => {
            let t: PrimedTableau = match (tableau, file) {
                (Some(s), _) => parse_json(s, "primed tableau")?,
                (None, Some(v)) => serde_json::from_value(v).context("expected a primed tableau")?,
                _ => bail!("expected a primed tableau"),
            };
            let st = t.standardize()?;
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => Ok(serde_json::to_string(&st)? + "\n"),
                Format::Text => Ok(format!("{st}\n")),
                Format::Dot => bail!("dot output is only available for graphs"),
            }
        }
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_json<T: serde::de::DeserializeOwned>(s: &str, what: &str) -> Result<T> {
    serde_json::from_str(s).with_context(|| format!("expected a {what} as JSON"))
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        bail!("--m must be at least 2");
    }
    Ok(())
}

// One-line notation, either positional (`546213`, `5,4,6,2,1,3`) or from a
// JSON file holding an array or an object with an `involution` field.
fn oneline(arg: &Option<String>, file: &Option<Value>) -> Result<Vec<u32>> {
    if let Some(s) = arg {
        let w: Word = s.parse().with_context(|| format!("bad involution {s:?}"))?;
        return Ok(w.into_vec());
    }
    let v = match file {
        Some(Value::Object(o)) => o.get("involution").cloned().ok_or_else(|| anyhow!("no `involution` field"))?,
        Some(v) => v.clone(),
        None => bail!("expected an involution"),
    };
    serde_json::from_value(v).context("expected an array of positive integers")
}

fn fpf_arg(arg: &Option<String>, file: &Option<Value>) -> Result<FpfInvolution> {
    Ok(FpfInvolution::from_oneline(&oneline(arg, file)?)?)
}

fn inv_arg(arg: &Option<String>, file: &Option<Value>) -> Result<Involution> {
    Ok(Involution::from_oneline(&oneline(arg, file)?)?)
}

fn insert(variant: Variant, text: &str) -> Result<InsertionPair> {
    let pair = if text.trim_start().starts_with('(') {
        let f: Factorization = text.parse()?;
        match variant {
            Variant::Sp => insert_factorization_sp(&f),
            Variant::O => insert_factorization_o(&f),
        }
    } else {
        let w: Word = text.parse()?;
        match variant {
            Variant::Sp => insert_word_sp(&w),
            Variant::O => word_to_involution_o(&w).map_err(Into::into).and_then(|_| insert_word_o(&w)),
        }
    };
    Ok(pair?)
}

fn sweep(
    cli: &Cli,
    involution: &Option<String>,
    file: &Option<Value>,
    m: usize,
    window: Option<usize>,
    max_len: usize,
    fault: bool,
) -> Result<Vec<Check>> {
    let single = involution.is_some() || file.is_some();
    let window = window.unwrap_or(if cli.variant == Variant::Sp { 6 } else { 5 });
    Ok(match cli.variant {
        Variant::Sp => {
            let zs = if single { vec![fpf_arg(involution, file)?] } else { FpfInvolution::all(window)? };
            zs.par_iter()
                .flat_map(|z| {
                    let mut out = vec![
                        check_word_bijection(z),
                        check_factorization_bijection(z, m),
                        check_ck_invariance(z, max_len),
                    ];
                    out.extend(check_crystal_sp(z, m, fault));
                    out
                })
                .collect()
        }
        Variant::O => {
            let zs = if single { vec![inv_arg(involution, file)?] } else { Involution::all(window) };
            zs.par_iter().flat_map(|z| check_crystal_o(z, m, fault)).collect()
        }
    })
}

fn check_fixture(variant: Variant, path: &Path) -> Result<Check> {
    let v = read_json(path)?;
    let m: usize = serde_json::from_value(v.get("m").cloned().ok_or_else(|| anyhow!("fixture has no `m`"))?)?;
    check_m(m)?;
    let want: GraphJson = serde_json::from_value(v.clone()).context("fixture needs `vertices` and `edges`")?;
    let z = Some(v);
    let got = match variant {
        Variant::Sp => build_graph(&fpf_arg(&None, &z)?, m),
        Variant::O => build_graph_o(&inv_arg(&None, &z)?, m),
    }
    .to_json();
    let mut c = Check::new(format!("fixture graph [{}]", path.display()));
    c.expect(got.vertices == want.vertices, || "vertex sets differ".into());
    let key = |e: &qcrystal::crystal::JsonEdge| format!("{} -{}-> {}", e.src, e.label, e.dst);
    let have: BTreeSet<String> = got.edges.iter().map(key).collect();
    let need: BTreeSet<String> = want.edges.iter().map(key).collect();
    for e in have.symmetric_difference(&need) {
        c.expect(false, || format!("edge {e} in only one graph"));
    }
    c.checked += need.len();
    Ok(c)
}
