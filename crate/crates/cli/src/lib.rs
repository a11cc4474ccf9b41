//! Command-line front end: reads graphs from edge-list or graph6 files,
//! prints certified words, replays them, and runs the exhaustive oracle.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use colorflip::format::{
    emit_colors, emit_edge_list, parse_colors, parse_edge_list, parse_graph6, parse_graph6_stream,
    parse_labels, parse_word, ParseError,
};
use colorflip::gadgets::{gadget_edge, gadget_p3_end, gadget_p3_ends, gadget_triangle};
use colorflip::oracle::{enumerate_connected, survey_graphs, DEFAULT_CAP};
use colorflip::synth::{color_reversal_word, complete_word, star_word, transform_word};
use colorflip::{
    BicoloredGraph, CertifiedWord, Coloring, Construction, Graph, Oracle, SurveySummary, VertexSet,
    Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Random colorings drawn by `--verify`, in addition to all `+`.
pub const VERIFY_COLORINGS: usize = 16;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_UNSATISFIABLE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("unsatisfiable: {0}")]
    Unsatisfiable(String),

    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => EXIT_VERIFY_FAILED,
            CliError::Unsatisfiable(_) => EXIT_UNSATISFIABLE,
            CliError::Input(_) => EXIT_INPUT,
        }
    }
}

impl From<colorflip::Error> for CliError {
    fn from(e: colorflip::Error) -> Self {
        match e {
            colorflip::Error::Unsatisfiable(msg) => CliError::Unsatisfiable(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "colorflip",
    version,
    about = "Local inversion words on bicolored graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Edge-list (`n <count>` header) or graph6 file; `-` reads stdin.
    #[arg(short, long, value_name = "FILE")]
    input: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyOpts {
    /// Replay the word under all `+` and 16 seeded random colorings.
    #[arg(long)]
    verify: bool,

    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Word reversing every color.
    Reverse {
        #[command(flatten)]
        input: Input,
        /// Print the freely reduced word.
        #[arg(long)]
        reduce: bool,
        #[command(flatten)]
        verify: VerifyOpts,
        /// Comma separated vertex names used when printing the word.
        #[arg(long)]
        labels: Option<String>,
    },
    /// Word turning one coloring into another.
    Transform {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "COLORS", allow_hyphen_values = true)]
        from: String,
        #[arg(long, value_name = "COLORS", allow_hyphen_values = true)]
        to: String,
        #[command(flatten)]
        verify: VerifyOpts,
        #[arg(long)]
        labels: Option<String>,
    },
    /// Applies a word and prints the resulting graph and colors.
    Apply {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "COLORS", allow_hyphen_values = true)]
        colors: String,
        /// Comma separated ids (or names from --labels).
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        labels: Option<String>,
    },
    /// Exact color reversal number by breadth-first search, as JSON.
    Exact {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Exact values for a catalog of graphs, as JSON lines plus a summary.
    Survey {
        #[arg(long)]
        max_n: usize,
        /// graph6 catalog; without it connected graphs are enumerated internally.
        #[arg(long, value_name = "FILE")]
        graph6: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Prints a gadget word.
    Gadget(GadgetArgs),
}

#[derive(Debug, Args)]
struct GadgetArgs {
    #[command(subcommand)]
    kind: GadgetKind,
    /// Names for the roles, in order (`a,b,c` or `c0,c1,...` by default).
    #[arg(long, global = true)]
    labels: Option<String>,
}

#[derive(Debug, Subcommand)]
enum GadgetKind {
    /// `ababab` on an edge `ab`.
    Edge,
    /// `abacbac` on a triangle.
    Triangle,
    /// `cabababc` on an induced path `a - c - b`.
    P3ends,
    /// `cabacba` on an induced path `a - c - b`.
    P3end,
    /// Reversal word of the star with center `c0`.
    Star { n: usize },
    /// Reversal word of the complete graph.
    Complete { n: usize },
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Reverse {
            input,
            reduce,
            verify,
            labels,
        } => reverse(
            &read_graph(&input.input)?,
            reduce,
            &verify,
            labels.as_deref(),
            out,
        ),
        Command::Transform {
            input,
            from,
            to,
            verify,
            labels,
        } => {
            let g = read_graph(&input.input)?;
            let from = parse_colors(&from, g.n())?;
            let to = parse_colors(&to, g.n())?;
            transform(&g, &from, &to, &verify, labels.as_deref(), out)
        }
        Command::Apply {
            input,
            colors,
            word,
            labels,
        } => {
            let g = read_graph(&input.input)?;
            let colors = parse_colors(&colors, g.n())?;
            let labels = labels.as_deref().map(parse_labels).unwrap_or_default();
            let word = parse_word(&word, &labels)?;
            let b = BicoloredGraph::new(g, colors)?.apply_word(&word)?;
            write!(out, "{}", emit_edge_list(b.graph()))?;
            writeln!(out, "{}", emit_colors(b.coloring()))?;
            Ok(())
        }
        Command::Exact { input, cap } => {
            let g = read_graph(&input.input)?;
            let report = Oracle::with_cap(cap)?.exact_cr(&g)?;
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
            Ok(())
        }
        Command::Survey {
            max_n,
            graph6,
            jobs,
            cap,
        } => survey(max_n, graph6.as_deref(), jobs, cap, out),
        Command::Gadget(args) => gadget(args, out),
    }
}

fn read_text(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Edge list if the first meaningful line starts with `n`, graph6 otherwise.
fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = read_text(path)?;
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(line) if line.starts_with('n') && line.split_whitespace().count() == 2 => {
            Ok(parse_edge_list(&text)?)
        }
        Some(line) => Ok(parse_graph6(line)?),
        None => Err(CliError::Input(format!("{}: empty input", path.display()))),
    }
}

fn verification_colorings(n: usize, seed: u64) -> Vec<Coloring> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colorings = vec![Coloring::all_plus(n)];
    for _ in 0..VERIFY_COLORINGS {
        let signs: Vec<i8> = (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect();
        colorings.push(Coloring::from_signs(&signs).expect("signs are +-1"));
    }
    colorings
}

/// Replays `word` from each verification coloring and checks that exactly
/// `target` changed color and the graph came back. Returns the count checked.
fn verify_flip(g: &Graph, word: &Word, target: &VertexSet, seed: u64) -> CliResult<usize> {
    let colorings = verification_colorings(g.n(), seed);
    for c in &colorings {
        let b = BicoloredGraph::new(g.clone(), c.clone())?;
        let after = b.apply_word(word)?;
        if after != b.flip(target)? {
            return Err(CliError::Verification(format!(
                "from colors {} the word gives graph {:?} colors {}",
                emit_colors(c),
                after.graph().edges().collect::<Vec<_>>(),
                emit_colors(after.coloring())
            )));
        }
    }
    Ok(colorings.len())
}

fn render(word: &Word, labels: Option<&str>) -> String {
    match labels {
        Some(l) => word.display_with(&parse_labels(l)),
        None => word.to_string(),
    }
}

fn print_certificate(
    cw: &CertifiedWord,
    reduce: bool,
    labels: Option<&str>,
    out: &mut dyn Write,
) -> CliResult<Word> {
    let word = if reduce {
        cw.reduced()
    } else {
        cw.word.clone()
    };
    writeln!(out, "word: {}", render(&word, labels))?;
    writeln!(out, "length: {}", word.len())?;
    writeln!(out, "bound: {}", cw.bound)?;
    Ok(word)
}

fn check_bound(word: &Word, bound: usize) -> CliResult {
    if word.len() > bound {
        return Err(CliError::Verification(format!(
            "length {} exceeds bound {bound}",
            word.len()
        )));
    }
    Ok(())
}

fn reverse(
    g: &Graph,
    reduce: bool,
    verify: &VerifyOpts,
    labels: Option<&str>,
    out: &mut dyn Write,
) -> CliResult {
    let cw = color_reversal_word(g)?;
    let word = print_certificate(&cw, reduce, labels, out)?;
    if verify.verify {
        check_bound(&word, cw.bound)?;
        let checked = verify_flip(g, &word, &g.vertices(), verify.seed)?;
        writeln!(out, "verified: {checked} colorings")?;
    }
    Ok(())
}

fn transform(
    g: &Graph,
    from: &Coloring,
    to: &Coloring,
    verify: &VerifyOpts,
    labels: Option<&str>,
    out: &mut dyn Write,
) -> CliResult {
    let cw = transform_word(g, from, to)?;
    print_certificate(&cw, false, labels, out)?;
    let strategies = match &cw.construction {
        Construction::Transform(s) if !s.is_empty() => s
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(","),
        _ => "none".to_string(),
    };
    writeln!(out, "strategy: {strategies}")?;
    if verify.verify {
        check_bound(&cw.word, cw.bound)?;
        let start = BicoloredGraph::new(g.clone(), from.clone())?;
        let goal = BicoloredGraph::new(g.clone(), to.clone())?;
        if start.apply_word(&cw.word)? != goal {
            return Err(CliError::Verification(format!(
                "word does not take {} to {}",
                emit_colors(from),
                emit_colors(to)
            )));
        }
        let checked = verify_flip(g, &cw.word, &from.disagreement(to), verify.seed)?;
        writeln!(out, "verified: {} colorings", checked + 1)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a SurveySummary,
}

fn survey(
    max_n: usize,
    graph6: Option<&Path>,
    jobs: usize,
    cap: usize,
    out: &mut dyn Write,
) -> CliResult {
    let oracle = Oracle::with_cap(cap)?;
    let graphs = match graph6 {
        Some(path) => {
            let text = read_text(path)?;
            let graphs = parse_graph6_stream(&text)
                .map_err(|(line, e)| CliError::Input(format!("{}:{line}: {e}", path.display())))?;
            graphs.into_iter().filter(|g| g.n() <= max_n).collect()
        }
        None => {
            if max_n > cap {
                return Err(CliError::Input(format!(
                    "--max-n {max_n} exceeds --cap {cap}"
                )));
            }
            let mut graphs = Vec::new();
            for n in 2..=max_n {
                graphs.extend(enumerate_connected(n)?);
            }
            graphs
        }
    };
    let reports = survey_graphs(&oracle, &graphs, jobs)?;
    for r in &reports {
        writeln!(out, "{}", serde_json::to_string(r)?)?;
    }
    let summary = SurveySummary::from_reports(&reports);
    writeln!(
        out,
        "{}",
        serde_json::to_string(&SummaryLine { summary: &summary })?
    )?;
    Ok(())
}

fn gadget(args: GadgetArgs, out: &mut dyn Write) -> CliResult {
    let roles =
        |k: usize| -> Vec<String> { ["a", "b", "c"][..k].iter().map(|s| s.to_string()).collect() };
    let indexed = |n: usize| -> Vec<String> { (0..n).map(|i| format!("c{i}")).collect() };
    let (word, default_labels) = match args.kind {
        GadgetKind::Edge => (gadget_edge(0, 1), roles(2)),
        GadgetKind::Triangle => (gadget_triangle(0, 1, 2), roles(3)),
        GadgetKind::P3ends => (gadget_p3_ends(0, 1, 2), roles(3)),
        GadgetKind::P3end => (gadget_p3_end(0, 1, 2), roles(3)),
        GadgetKind::Star { n } => (star_word(n)?.word, indexed(n)),
        GadgetKind::Complete { n } => (complete_word(n)?.word, indexed(n)),
    };
    let labels = args
        .labels
        .as_deref()
        .map(parse_labels)
        .unwrap_or(default_labels);
    writeln!(out, "{}", word.display_with(&labels))?;
    Ok(())
}
