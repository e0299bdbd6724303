//! `walkit`: evaluate, compile and convert weighted ω-automata and weight
//! assignment logic formulas.
//!
//! Exit codes: 0 success, 1 parse error, 2 semantic error (caps, ambiguity,
//! invalid input), 3 internal error.

mod input;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use walkit::buchi::{muller_to_buchi, Alphabet, BuchiAutomaton, LassoRun, MullerAutomaton};
use walkit::omega::sample_lassos;
use walkit::valuation::{Disc, Energy, Ratio, StructureKind, ValuationStructure};
use walkit::wal::{compile_ewal, compile_wal, parse_ewal, wba_to_ewal, wba_to_wal, CompileOptions, CompiledWal};
use walkit::wba::{
    decompose, recompose, weighted_buchi_to_muller, weighted_muller_to_buchi, NivatTriple, SolverOptions, WeightedBuchiAutomaton, WeightedMullerAutomaton,
};
use walkit::{Error, LassoWord};

use input::{Doc, Kind};

const DEFAULT_SEED: u64 = 20240601;

#[derive(Parser)]
#[command(name = "walkit", version, about = "Weighted Büchi automata and weight assignment logic on lasso words")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args, Clone)]
struct Flags {
    /// Valuation structure: ratio, disc or energy<n>. Overrides file headers.
    #[arg(long, global = true)]
    structure: Option<StructureKind>,
    /// Default weight for positions a formula leaves undefined.
    #[arg(long, global = true)]
    one: Option<String>,
    /// Tolerance for floating-point diagnostics of the discounted solver.
    #[arg(long, global = true, default_value_t = 1e-9)]
    eps: f64,
    /// Per-counter bound of the energy solver's search.
    #[arg(long = "energy-bound", global = true, default_value_t = 4)]
    energy_bound: u32,
    /// Cap on states of intermediate automata during MSO compilation.
    #[arg(long = "complement-cap", global = true)]
    complement_cap: Option<usize>,
    /// Largest number of `join` variables compiled.
    #[arg(long = "prefix-cap", global = true, default_value_t = walkit::wal::DEFAULT_PREFIX_CAP)]
    prefix_cap: usize,
    /// Seed for sampled lassos.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of sampled lassos.
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Value of an automaton, triple or formula on a lasso word such as `a (b a)`.
    Eval { file: PathBuf, word: String },
    /// Compile a WAL or eWAL sentence to a weighted Büchi automaton.
    Compile {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the Nivat triple.
        #[arg(long)]
        triple: Option<PathBuf>,
    },
    /// Split a weighted Büchi automaton into a Nivat triple.
    Decompose {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rebuild a weighted Büchi automaton from a Nivat triple.
    Recompose {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report whether some word has two accepting runs.
    CheckAmbiguity { file: PathBuf },
    /// Büchi to Muller acceptance or back, weighted or not.
    Convert {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A formula with the behavior of a weighted Büchi automaton.
    Translate {
        file: PathBuf,
        /// Produce an eWAL sentence, which also handles ambiguous automata.
        #[arg(long)]
        ewal: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare two artifacts on sampled lassos.
    EquivSample { left: PathBuf, right: PathBuf },
}

struct Ctx {
    flags: Flags,
    solver: SolverOptions,
    compile: CompileOptions,
}

impl Ctx {
    fn structure(&self, doc: &Doc) -> Option<StructureKind> {
        input::resolve("structure", self.flags.structure.as_ref(), doc.structure.as_ref(), &doc.path)
    }

    fn one<S: ValuationStructure>(&self, s: &S, doc: &Doc) -> Result<S::Weight, Error> {
        match input::resolve("one", self.flags.one.as_ref(), doc.one.as_ref(), &doc.path) {
            Some(text) => s.parse_weight(&text),
            None => Ok(s.default_one()),
        }
    }
}

macro_rules! dispatch {
    ($kind:expr, $s:ident => $body:expr) => {
        match $kind {
            StructureKind::Ratio => {
                let $s = Ratio;
                $body
            }
            StructureKind::Disc => {
                let $s = Disc;
                $body
            }
            StructureKind::Energy(n) => {
                let $s = Energy::new(n);
                $body
            }
        }
    };
}

enum Artifact<S: ValuationStructure> {
    Buchi(WeightedBuchiAutomaton<S>),
    Muller(WeightedMullerAutomaton<S>),
}

impl<S: ValuationStructure> Artifact<S> {
    fn alphabet(&self) -> &Alphabet {
        match self {
            Artifact::Buchi(a) => a.alphabet(),
            Artifact::Muller(m) => m.alphabet(),
        }
    }

    fn eval(&self, w: &LassoWord<String>, opts: &SolverOptions) -> Result<S::Value, Error> {
        match self {
            Artifact::Buchi(a) => a.behavior(w, opts),
            Artifact::Muller(m) => m.behavior(w, opts),
        }
    }
}

fn compile_formula<S: ValuationStructure>(s: &S, doc: &Doc, ctx: &Ctx) -> Result<CompiledWal<S>, Error> {
    let e = parse_ewal(&doc.body, s)?;
    let letters: Vec<String> = match &doc.alphabet {
        Some(a) => a.clone(),
        None => e.body.letters_used().into_iter().collect(),
    };
    if letters.is_empty() {
        return Err(Error::Input(format!("{}: no `alphabet:` line and no letter predicates", doc.path.display())));
    }
    let sigma = Alphabet::new(letters)?;
    let one = ctx.one(s, doc)?;
    if e.prefix.is_empty() {
        compile_wal(&e.body, &sigma, s.clone(), &one, &ctx.compile)
    } else {
        compile_ewal(&e, &sigma, s.clone(), &one, &ctx.compile)
    }
}

fn load<S: ValuationStructure>(s: &S, doc: &Doc, ctx: &Ctx) -> Result<Artifact<S>, Error> {
    Ok(match doc.kind {
        Kind::Buchi => Artifact::Buchi(WeightedBuchiAutomaton::parse(s.clone(), &doc.body)?),
        Kind::Muller => Artifact::Muller(WeightedMullerAutomaton::parse(s.clone(), &doc.body)?),
        Kind::Triple => {
            let t = NivatTriple::parse(s, &doc.body)?;
            Artifact::Buchi(recompose(&t, s.clone(), &ctx.one(s, doc)?)?)
        }
        Kind::Formula => Artifact::Buchi(compile_formula(s, doc, ctx)?.wba),
    })
}

enum Plain {
    Buchi(BuchiAutomaton),
    Muller(MullerAutomaton),
}

fn load_plain(doc: &Doc) -> Result<Plain, Error> {
    match doc.kind {
        Kind::Buchi => Ok(Plain::Buchi(doc.body.parse()?)),
        Kind::Muller => Ok(Plain::Muller(doc.body.parse()?)),
        _ => Err(Error::Input(format!("{}: no `structure:` header; pass --structure", doc.path.display()))),
    }
}

impl Plain {
    fn alphabet(&self) -> &Alphabet {
        match self {
            Plain::Buchi(a) => a.alphabet(),
            Plain::Muller(m) => m.system().alphabet(),
        }
    }

    fn accepts(&self, w: &LassoWord<String>) -> Result<bool, Error> {
        Ok(match self {
            Plain::Buchi(a) => a.accepts(w)?.is_some(),
            Plain::Muller(m) => m.accepts(w)?.is_some(),
        })
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Error> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn show<V: std::fmt::Display>(r: Result<V, Error>) -> Result<String, Error> {
    match r {
        Ok(v) => Ok(v.to_string()),
        Err(e @ Error::Undecided { .. }) => Ok(e.to_string()),
        Err(e) => Err(e),
    }
}

fn word(text: &str) -> Result<LassoWord<String>, Error> {
    text.parse()
}

/// Transitions as `p-a->q`, or `p-a/w->q` when weighted, so parallel
/// transitions stay apart.
fn show_run(states: &[String], step: impl Fn(usize) -> (usize, String, usize), run: &LassoRun) -> String {
    run.map(|&t| {
        let (p, label, q) = step(t);
        format!("{}-{label}->{}", states[p], states[q])
    })
    .to_string()
}

fn cmd_eval(ctx: &Ctx, file: &Path, text: &str) -> Result<(), Error> {
    let doc = input::read(file)?;
    let w = word(text)?;
    let out = match ctx.structure(&doc) {
        None => (if load_plain(&doc)?.accepts(&w)? { "1" } else { "0" }).to_string(),
        Some(k) => dispatch!(k, s => show(load(&s, &doc, ctx)?.eval(&w, &ctx.solver))?),
    };
    println!("{out}");
    Ok(())
}

fn cmd_compile(ctx: &Ctx, file: &Path, output: Option<&Path>, triple: Option<&Path>) -> Result<(), Error> {
    let doc = input::read(file)?;
    if doc.kind != Kind::Formula {
        return Err(Error::Input(format!("{} is not a formula file", file.display())));
    }
    let k = ctx.structure(&doc).ok_or_else(|| Error::Input("no `structure:` header; pass --structure".into()))?;
    dispatch!(k, s => {
        let c = compile_formula(&s, &doc, ctx)?;
        if let Some(p) = triple {
            let one = ctx.one(&s, &doc)?;
            emit(Some(p), &format!("one: {one}\n{}", c.triple.to_text(&s.header())))?;
        }
        emit(output, &c.wba.to_string())
    })
}

fn weighted_buchi<S: ValuationStructure>(s: &S, doc: &Doc) -> Result<WeightedBuchiAutomaton<S>, Error> {
    if doc.kind != Kind::Buchi {
        return Err(Error::Input(format!("{} is not a Büchi automaton file", doc.path.display())));
    }
    WeightedBuchiAutomaton::parse(s.clone(), &doc.body)
}

fn cmd_decompose(ctx: &Ctx, file: &Path, output: Option<&Path>) -> Result<(), Error> {
    let doc = input::read(file)?;
    let k = ctx.structure(&doc).ok_or_else(|| Error::Input("decompose needs a weighted automaton".into()))?;
    dispatch!(k, s => {
        let a = weighted_buchi(&s, &doc)?;
        emit(output, &decompose(&a)?.to_text(&s.header()))
    })
}

fn cmd_recompose(ctx: &Ctx, file: &Path, output: Option<&Path>) -> Result<(), Error> {
    let doc = input::read(file)?;
    if doc.kind != Kind::Triple {
        return Err(Error::Input(format!("{} is not a triple file", file.display())));
    }
    let k = ctx.structure(&doc).ok_or_else(|| Error::Input("no `structure:` header; pass --structure".into()))?;
    dispatch!(k, s => {
        let t = NivatTriple::parse(&s, &doc.body)?;
        emit(output, &recompose(&t, s.clone(), &ctx.one(&s, &doc)?)?.to_string())
    })
}

fn cmd_check_ambiguity(ctx: &Ctx, file: &Path) -> Result<(), Error> {
    let doc = input::read(file)?;
    let report = match ctx.structure(&doc) {
        None => {
            let Plain::Buchi(a) = load_plain(&doc)? else {
                return Err(Error::Input("check-ambiguity takes a Büchi automaton".into()));
            };
            let ts = a.system().transitions();
            a.check_ambiguity().map(|w| {
                let step = |t: usize| (ts[t].from, a.alphabet().name(ts[t].letter).to_string(), ts[t].to);
                let states = a.system().states();
                (a.alphabet().decode(&w.word), show_run(states, step, &w.runs.0), show_run(states, step, &w.runs.1))
            })
        }
        Some(k) => dispatch!(k, s => {
            let a = match load(&s, &doc, ctx)? {
                Artifact::Buchi(a) => a,
                Artifact::Muller(_) => return Err(Error::Input("check-ambiguity takes a Büchi automaton".into())),
            };
            let ts = a.transitions();
            a.check_ambiguity().map(|w| {
                let step = |t: usize| (ts[t].from, format!("{}/{}", a.alphabet().name(ts[t].letter), ts[t].weight), ts[t].to);
                (a.alphabet().decode(&w.word), show_run(a.states(), step, &w.runs.0), show_run(a.states(), step, &w.runs.1))
            })
        }),
    };
    match report {
        None => println!("UNAMBIGUOUS"),
        Some((w, r1, r2)) => println!("AMBIGUOUS on {w}\n  run 1: {r1}\n  run 2: {r2}"),
    }
    Ok(())
}

fn cmd_convert(ctx: &Ctx, file: &Path, output: Option<&Path>) -> Result<(), Error> {
    let doc = input::read(file)?;
    let text = match ctx.structure(&doc) {
        None => match load_plain(&doc)? {
            Plain::Buchi(a) => a.to_muller()?.to_string(),
            Plain::Muller(m) => muller_to_buchi(&m)?.to_string(),
        },
        Some(k) => dispatch!(k, s => match doc.kind {
            Kind::Buchi => weighted_buchi_to_muller(&weighted_buchi(&s, &doc)?)?.to_string(),
            Kind::Muller => weighted_muller_to_buchi(&WeightedMullerAutomaton::parse(s.clone(), &doc.body)?)?.to_string(),
            _ => return Err(Error::Input(format!("{} is not an automaton file", file.display()))),
        }),
    };
    emit(output, &text)
}

fn cmd_translate(ctx: &Ctx, file: &Path, ewal: bool, output: Option<&Path>) -> Result<(), Error> {
    let doc = input::read(file)?;
    let k = ctx.structure(&doc).ok_or_else(|| Error::Input("translate needs a weighted automaton".into()))?;
    dispatch!(k, s => {
        let a = weighted_buchi(&s, &doc)?;
        let mut text = String::new();
        let _ = writeln!(text, "structure: {}", s.header());
        let _ = writeln!(text, "alphabet: {}", a.alphabet().letters().join(" "));
        let _ = writeln!(text, "one: {}", ctx.one(&s, &doc)?);
        if ewal {
            let _ = writeln!(text, "{}", wba_to_ewal(&a)?);
        } else {
            let _ = writeln!(text, "{}", wba_to_wal(&a)?);
        }
        emit(output, &text)
    })
}

fn letter_set(a: &Alphabet) -> BTreeSet<String> {
    a.letters().iter().cloned().collect()
}

fn cmd_equiv_sample(ctx: &Ctx, left: &Path, right: &Path) -> Result<(), Error> {
    let (dl, dr) = (input::read(left)?, input::read(right)?);
    let seed = ctx.flags.seed.unwrap_or_else(|| {
        eprintln!("seed: {DEFAULT_SEED}");
        DEFAULT_SEED
    });
    let n = ctx.flags.samples;
    let verdict: Option<(LassoWord<String>, String, String)> = match (ctx.structure(&dl), ctx.structure(&dr)) {
        (None, None) => {
            let (a, b) = (load_plain(&dl)?, load_plain(&dr)?);
            if letter_set(a.alphabet()) != letter_set(b.alphabet()) {
                return Err(Error::Input("the artifacts have different alphabets".into()));
            }
            let mut found = None;
            for w in sample_lassos(a.alphabet().len(), n, seed) {
                let w = a.alphabet().decode(&w);
                let (x, y) = (a.accepts(&w)?, b.accepts(&w)?);
                if x != y {
                    found = Some((w, (x as u8).to_string(), (y as u8).to_string()));
                    break;
                }
            }
            found
        }
        (Some(k), Some(k2)) if k == k2 => dispatch!(k, s => {
            let (a, b) = (load(&s, &dl, ctx)?, load(&s, &dr, ctx)?);
            if letter_set(a.alphabet()) != letter_set(b.alphabet()) {
                return Err(Error::Input("the artifacts have different alphabets".into()));
            }
            let mut found = None;
            for w in sample_lassos(a.alphabet().len(), n, seed) {
                let w = a.alphabet().decode(&w);
                let (x, y) = (show(a.eval(&w, &ctx.solver))?, show(b.eval(&w, &ctx.solver))?);
                if x != y {
                    found = Some((w, x, y));
                    break;
                }
            }
            found
        }),
        _ => return Err(Error::Input("the artifacts use different structures".into())),
    };
    match verdict {
        None => println!("EQUIVALENT (n={n})"),
        Some((w, x, y)) => println!("DIFFERENT on {w}: {x} vs {y}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    let f = &cli.flags;
    if f.eps <= 0.0 || f.energy_bound == 0 || f.samples == 0 || f.complement_cap == Some(0) {
        return Err(Error::Input("--eps, --energy-bound, --samples and --complement-cap must be positive".into()));
    }
    let mut compile = CompileOptions { prefix_cap: f.prefix_cap, ..CompileOptions::default() };
    if let Some(c) = f.complement_cap {
        compile.state_cap = c;
    }
    let ctx = Ctx { solver: SolverOptions { eps: f.eps, energy_bound: f.energy_bound }, compile, flags: f.clone() };
    match &cli.cmd {
        Cmd::Eval { file, word } => cmd_eval(&ctx, file, word),
        Cmd::Compile { file, output, triple } => cmd_compile(&ctx, file, output.as_deref(), triple.as_deref()),
        Cmd::Decompose { file, output } => cmd_decompose(&ctx, file, output.as_deref()),
        Cmd::Recompose { file, output } => cmd_recompose(&ctx, file, output.as_deref()),
        Cmd::CheckAmbiguity { file } => cmd_check_ambiguity(&ctx, file),
        Cmd::Convert { file, output } => cmd_convert(&ctx, file, output.as_deref()),
        Cmd::Translate { file, ewal, output } => cmd_translate(&ctx, file, *ewal, output.as_deref()),
        Cmd::EquivSample { left, right } => cmd_equiv_sample(&ctx, left, right),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 1,
        Error::Internal(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
