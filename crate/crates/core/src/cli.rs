//! The `soficlab` command line.
//!
//! Exit codes: 0 on success (or "isomorphic"), 1 when a check comes out
//! negative, 2 on usage, parse or I/O errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::corpus::run_examples;
use crate::covers::{fischer_cover, synchronizing_words};
use crate::dynamics::{
    check_lpc_pointwise, entropy_and_growth, omega_level, periodic_points_finite_type, quantized_maps,
    verify_fock_relations,
};
use crate::equivalence::{
    all_labeled_isomorphisms, all_unlabeled_isomorphisms, labeled_isomorphism, lift_unlabeled_to_labeled,
    lpc_word_bijection, unlabeled_isomorphism, IsoWitness,
};
use crate::error::{Error, Result};
use crate::fsg::{augment_with_zeta, build_fsg, build_fsg_from_presentation, validate_fsg, FollowerSetGraph};
use crate::graph::{GraphDocument, GraphMeta, LabeledGraph};
use crate::language::{parse_forbidden_file, Alphabet, Convention, LanguageSpec, Word};
use crate::sampling::{lift_suite, oracle_suite};

#[derive(Parser, Debug)]
#[command(name = "soficlab", version, about = "Follower set graphs and their invariants for factorial languages")]
struct Cli {
    /// Write artifacts into this directory instead of standard output.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Word orientation used in input and output files.
    #[arg(long, global = true, value_enum, default_value_t = ConventionArg::Left)]
    convention: ConventionArg,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    emit: Option<Emit>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the follower set graph of a forbidden-set file or a presentation.
    Fsg(FsgArgs),
    /// Compare two languages by labeled or unlabeled isomorphism of their graphs.
    Compare(CompareArgs),
    /// Synchronizing subgraph (Fischer cover) of a follower set graph.
    Cover(CoverArgs),
    /// Entropy, quantized dynamics and local conjugacy checks.
    Dynamics(DynamicsArgs),
    /// Check the operator relations on a truncated Fock space.
    Fock(FockArgs),
    /// Run the bundled example corpus.
    Examples(ExamplesArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["forbidden", "presentation"])))]
struct FsgArgs {
    /// Forbidden-word file: an `alphabet:` line, then one word per line.
    #[arg(long, value_name = "FILE")]
    forbidden: Option<PathBuf>,
    /// Labeled graph in JSON presenting the language.
    #[arg(long, value_name = "FILE")]
    presentation: Option<PathBuf>,
    /// Add a fresh unconstrained symbol with this token.
    #[arg(long, value_name = "ZETA")]
    augment: Option<String>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").required(true).args(["labeled", "unlabeled", "lpc"])))]
struct CompareArgs {
    /// Isomorphism up to a renaming of symbols.
    #[arg(long)]
    labeled: bool,
    /// Isomorphism of the underlying directed multigraphs.
    #[arg(long)]
    unlabeled: bool,
    /// Unlabeled comparison plus the pointwise conjugacy data and lifting verdict.
    #[arg(long)]
    lpc: bool,
    /// Report every witness.
    #[arg(long)]
    all: bool,
    /// Also tabulate the word bijection f_N.
    #[arg(long = "fn", value_name = "N")]
    f_n: Option<usize>,
    /// First language: forbidden-word file or graph JSON.
    a: PathBuf,
    /// Second language.
    b: PathBuf,
}

#[derive(Args, Debug)]
struct CoverArgs {
    /// Forbidden-word file or graph JSON.
    graph: PathBuf,
    /// Exit with status 1 unless the cover passes the irreducibility check.
    #[arg(long)]
    check_irreducible: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("analysis").required(true).args(["entropy", "omega", "qmask", "lpc_check", "periodic"])))]
struct DynamicsArgs {
    /// Forbidden-word file or graph JSON.
    graph: PathBuf,
    /// Word counts |B_n| for n ≤ N and the entropy.
    #[arg(long, value_name = "N")]
    entropy: Option<usize>,
    /// Classes of Ω_l on words of length at most L.
    #[arg(long, num_args = 2, value_names = ["l", "L"])]
    omega: Option<Vec<usize>>,
    /// Support masks and partial maps φ_i on the vertices.
    #[arg(long)]
    qmask: bool,
    /// Check a witness vertex map (JSON) against a second graph.
    #[arg(long, num_args = 2, value_names = ["MAP", "OTHER"])]
    lpc_check: Option<Vec<PathBuf>>,
    /// Periodic point counts p_n for n ≤ N (finite type only).
    #[arg(long, value_name = "N")]
    periodic: Option<usize>,
}

#[derive(Args, Debug)]
struct FockArgs {
    /// Forbidden-word file or graph JSON.
    spec: PathBuf,
    /// Keep words of length at most N.
    #[arg(long, value_name = "N")]
    truncate: usize,
}

#[derive(Args, Debug)]
struct ExamplesArgs {
    /// Case name, or a substring of one.
    filter: Option<String>,
    /// Also run the randomized property suites with this seed.
    #[arg(long, value_name = "S")]
    seed: Option<u64>,
}

struct Ctx<'a> {
    out: Option<PathBuf>,
    conv: Convention,
    emit: Option<Emit>,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit_or(&self, default: Emit, allowed: &[Emit]) -> Result<Emit> {
        let e = self.emit.unwrap_or(default);
        if allowed.contains(&e) {
            Ok(e)
        } else {
            Err(Error::InvalidArgument(format!("--emit {e:?} is not available for this command").to_lowercase()))
        }
    }

    /// Writes an artifact to `--out DIR/file` or to standard output.
    fn deliver(&mut self, file: &str, content: &str) -> Result<()> {
        match &self.out {
            Some(dir) => {
                fs::create_dir_all(dir)?;
                let path = dir.join(file);
                fs::write(&path, content)?;
                writeln!(self.stdout, "wrote {}", path.display())?;
            }
            None => self.stdout.write_all(content.as_bytes())?,
        }
        Ok(())
    }

    fn note(&mut self, msg: &str) -> Result<()> {
        writeln!(self.stderr, "note: {msg}")?;
        Ok(())
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let conv = match cli.convention {
        ConventionArg::Left => Convention::Left,
        ConventionArg::Right => Convention::Right,
    };
    let mut ctx = Ctx { out: cli.out, conv, emit: cli.emit, stdout, stderr };
    let result = match cli.command {
        Command::Fsg(a) => cmd_fsg(&mut ctx, a),
        Command::Compare(a) => cmd_compare(&mut ctx, a),
        Command::Cover(a) => cmd_cover(&mut ctx, a),
        Command::Dynamics(a) => cmd_dynamics(&mut ctx, a),
        Command::Fock(a) => cmd_fock(&mut ctx, a),
        Command::Examples(a) => cmd_examples(&mut ctx, a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.stderr, "error: {e}");
            2
        }
    }
}

// ---------------------------------------------------------------------------
// Inputs

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "graph".into())
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn read_graph(text: &str, conv: Convention) -> Result<(LabeledGraph, Option<usize>, GraphMeta)> {
    GraphDocument::from_json(text)?.into_graph(conv)
}

/// A forbidden-set file or a presentation JSON, as a language.
fn load_spec(path: &Path, conv: Convention) -> Result<LanguageSpec> {
    let text = read(path)?;
    let spec = if looks_like_json(&text) {
        LanguageSpec::from_presentation(read_graph(&text, conv)?.0)?
    } else {
        parse_forbidden_file(&text, conv)?
    };
    Ok(spec.with_name(stem(path)))
}

/// A follower set graph from any accepted input. Graph JSON recording its
/// empty class and passing validation is taken as is; any other graph JSON is
/// treated as a presentation and minimized.
fn load_fsg(ctx: &mut Ctx, path: &Path) -> Result<FollowerSetGraph> {
    let text = read(path)?;
    if !looks_like_json(&text) {
        let spec = parse_forbidden_file(&text, ctx.conv)?;
        flag_dropped(ctx, &spec)?;
        return build_fsg(&spec);
    }
    let (graph, root, meta) = read_graph(&text, ctx.conv)?;
    if root.is_some() {
        let g = FollowerSetGraph::from_parts(graph.clone(), root, meta);
        if validate_fsg(&g).passed() {
            return Ok(g);
        }
    }
    build_fsg_from_presentation(&graph)
}

fn flag_dropped(ctx: &mut Ctx, spec: &LanguageSpec) -> Result<()> {
    if !spec.dropped_symbols().is_empty() {
        let msg = format!("symbols forbidden outright were dropped: {}", spec.dropped_symbols().join(" "));
        ctx.note(&msg)?;
    }
    Ok(())
}

fn show_word(alphabet: &Alphabet, conv: Convention, w: &Word) -> String {
    alphabet.display_word(&conv.orient(w.clone()))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// fsg

fn cmd_fsg(ctx: &mut Ctx, a: FsgArgs) -> Result<i32> {
    let emit = ctx.emit_or(Emit::Json, &[Emit::Json, Emit::Dot, Emit::Text])?;
    let (mut g, name) = if let Some(p) = &a.forbidden {
        let spec = parse_forbidden_file(&read(p)?, ctx.conv)?;
        flag_dropped(ctx, &spec)?;
        (build_fsg(&spec)?, stem(p))
    } else {
        let p = a.presentation.as_ref().expect("clap requires one input");
        let (graph, _, _) = read_graph(&read(p)?, ctx.conv)?;
        (build_fsg_from_presentation(&graph)?, stem(p))
    };
    if let Some(z) = &a.augment {
        g = augment_with_zeta(&g, z)?;
    }
    let name = if a.augment.is_some() { format!("{name}-augmented") } else { name };
    match emit {
        Emit::Json => ctx.deliver(&format!("{name}.json"), &g.to_json(ctx.conv))?,
        Emit::Dot => ctx.deliver(&format!("{name}.dot"), &g.to_dot(&name, ctx.conv))?,
        Emit::Text => {
            let text = fsg_text(&g, ctx.conv);
            ctx.deliver(&format!("{name}.txt"), &text)?
        }
    }
    Ok(0)
}

fn fsg_text(g: &FollowerSetGraph, conv: Convention) -> String {
    let gr = g.graph();
    let mut out = format!("{} vertices, {} edges\n", g.vertex_count(), g.edge_count());
    for (v, vx) in gr.vertices().iter().enumerate() {
        let words: Vec<String> = vx.words.iter().map(|w| show_word(gr.alphabet(), conv, w)).collect();
        let root = if g.empty_class_vertex() == Some(v) { "  (empty class)" } else { "" };
        out.push_str(&format!("{}: {}{}\n", vx.id, words.join(" "), root));
    }
    for e in gr.edges() {
        out.push_str(&format!("{} -{}-> {}\n", gr.vertex(e.src).id, gr.alphabet().token(e.label), gr.vertex(e.dst).id));
    }
    out.push_str(&validate_fsg(g).render(g));
    out
}

// ---------------------------------------------------------------------------
// compare

fn witness_json(w: &IsoWitness, a: &FollowerSetGraph, b: &FollowerSetGraph) -> Value {
    serde_json::to_value(w.to_document(a, b)).expect("witness documents serialize")
}

fn cmd_compare(ctx: &mut Ctx, a: CompareArgs) -> Result<i32> {
    let emit = ctx.emit_or(Emit::Json, &[Emit::Json, Emit::Text])?;
    let (g1, g2) = (load_fsg(ctx, &a.a)?, load_fsg(ctx, &a.b)?);
    let mode = if a.labeled { "labeled" } else if a.lpc { "lpc" } else { "unlabeled" };
    let witnesses: Vec<IsoWitness> = match (a.labeled, a.all) {
        (true, true) => all_labeled_isomorphisms(&g1, &g2),
        (true, false) => labeled_isomorphism(&g1, &g2).into_iter().collect(),
        (false, true) => all_unlabeled_isomorphisms(&g1, &g2),
        (false, false) => unlabeled_isomorphism(&g1, &g2).into_iter().collect(),
    };
    let Some(first) = witnesses.first() else {
        let doc = json!({ "mode": mode, "isomorphic": false });
        match emit {
            Emit::Json => ctx.deliver("compare.json", &pretty(&doc))?,
            _ => ctx.deliver("compare.txt", &format!("{mode}: not isomorphic\n"))?,
        }
        return Ok(1);
    };
    let mut doc = json!({ "mode": mode, "isomorphic": true });
    if a.all {
        doc["witnesses"] = witnesses.iter().map(|w| witness_json(w, &g1, &g2)).collect();
    } else {
        doc["witness"] = witness_json(first, &g1, &g2);
    }
    let mut text = format!("{mode}: isomorphic ({} witness{})\n", witnesses.len(), if witnesses.len() == 1 { "" } else { "es" });
    for (i, w) in witnesses.iter().enumerate() {
        let d = w.to_document(&g1, &g2);
        let pairs: Vec<String> = d.vertex_map.iter().map(|(x, y)| format!("{x} ↦ {y}")).collect();
        text.push_str(&format!("witness {}: {}\n", i + 1, pairs.join(", ")));
        if let Some(sm) = &d.symbol_map {
            let pairs: Vec<String> = sm.iter().map(|(x, y)| format!("{x} ↦ {y}")).collect();
            text.push_str(&format!("  symbols: {}\n", pairs.join(", ")));
        }
    }
    if let Some(n) = a.f_n {
        let table = lpc_word_bijection(first, &g1, &g2, n)?;
        let (sa, sb) = (g1.alphabet(), g2.alphabet());
        let map: BTreeMap<String, String> =
            table.iter().map(|(x, y)| (show_word(sa, ctx.conv, x), show_word(sb, ctx.conv, y))).collect();
        text.push_str(&format!("f_{n}:\n"));
        for (x, y) in &map {
            text.push_str(&format!("  {x} ↦ {y}\n"));
        }
        doc["f_n"] = json!({ "n": n, "map": map });
    }
    if a.lpc {
        let check = check_lpc_pointwise(&g1, &g2, &first.vertex_map)?;
        let lift = lift_unlabeled_to_labeled(&g1, &g2, first)?;
        let gr = g1.graph();
        let bij: BTreeMap<String, Value> = check
            .bijections
            .iter()
            .enumerate()
            .map(|(v, b)| {
                let val = b.as_ref().map(|pairs| {
                    let m: BTreeMap<&str, &str> =
                        pairs.iter().map(|(x, y)| (gr.alphabet().token(*x), g2.alphabet().token(*y))).collect();
                    json!(m)
                });
                (gr.vertex(v).id.clone(), val.unwrap_or(Value::Null))
            })
            .collect();
        doc["pointwise"] = json!({ "holds": check.holds, "label_bijections": bij });
        doc["lifts_to_labeled"] = json!(lift.is_some());
        text.push_str(&format!("pointwise conjugacy: {}\n", if check.holds { "holds" } else { "fails" }));
        text.push_str(&format!("lifts to a labeled isomorphism: {}\n", if lift.is_some() { "yes" } else { "no" }));
    }
    match emit {
        Emit::Json => ctx.deliver("witness.json", &pretty(&doc))?,
        _ => ctx.deliver("compare.txt", &text)?,
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// cover

fn cmd_cover(ctx: &mut Ctx, a: CoverArgs) -> Result<i32> {
    let emit = ctx.emit_or(Emit::Json, &[Emit::Json, Emit::Dot, Emit::Text])?;
    let g = load_fsg(ctx, &a.graph)?;
    let cover = fischer_cover(&g)?;
    let name = format!("{}-cover", stem(&a.graph));
    if let Some(note) = cover.note {
        ctx.note(note)?;
    }
    match emit {
        Emit::Json => {
            let meta = GraphMeta { source: Some("synchronizing subgraph".into()), ..Default::default() };
            let doc = GraphDocument::from_graph(&cover.graph, None, &meta, ctx.conv);
            ctx.deliver(&format!("{name}.json"), &doc.to_json())?
        }
        Emit::Dot => ctx.deliver(&format!("{name}.dot"), &cover.graph.to_dot(&name, None, ctx.conv))?,
        Emit::Text => {
            let gr = g.graph();
            let sync = synchronizing_words(gr)?;
            let mut out = String::from("synchronizing words:\n");
            for (v, w) in &sync {
                out.push_str(&format!("  {}: {}\n", gr.vertex(*v).id, show_word(gr.alphabet(), ctx.conv, w)));
            }
            out.push_str(&format!("cover: {} vertices\n", cover.graph.vertex_count()));
            let c = &cover.graph;
            for e in c.edges() {
                out.push_str(&format!("  {} -{}-> {}\n", c.vertex(e.src).id, c.alphabet().token(e.label), c.vertex(e.dst).id));
            }
            let r = &cover.irreducibility;
            let words = match (r.first_difference, r.exact) {
                (Some(n), _) => format!("no, first difference at length {n}"),
                (None, true) => "yes, at every length".to_string(),
                (None, false) => format!("yes, up to length {}", r.bound),
            };
            out.push_str(&format!("strongly connected: {}; same words as the graph: {words}\n", r.cover_strongly_connected));
            ctx.deliver(&format!("{name}.txt"), &out)?
        }
    }
    if a.check_irreducible {
        let verdict = if cover.irreducibility.irreducible { "irreducible" } else { "not irreducible" };
        if cover.irreducibility.exact {
            writeln!(ctx.stderr, "{verdict}")?;
        } else {
            writeln!(ctx.stderr, "{verdict} (languages compared up to length {} only)", cover.irreducibility.bound)?;
        }
        return Ok(if cover.irreducibility.irreducible { 0 } else { 1 });
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// dynamics

fn cmd_dynamics(ctx: &mut Ctx, a: DynamicsArgs) -> Result<i32> {
    let emit = ctx.emit_or(Emit::Text, &[Emit::Json, Emit::Text])?;
    let name = stem(&a.graph);
    let (doc, text, code) = if let Some(n) = a.entropy {
        let g = load_fsg(ctx, &a.graph)?;
        let r = entropy_and_growth(&g, n)?;
        let mut text = String::from(" n  |B_n|\n");
        for (i, c) in r.counts.iter().enumerate() {
            text.push_str(&format!("{i:>2}  {c}\n"));
        }
        text.push_str(&format!("spectral radius {:.12}\nentropy {:.12}\n", r.spectral_radius, r.entropy));
        if let Some(e) = r.ratio_estimate {
            text.push_str(&format!("log2(|B_{n}|/|B_{}|) = {e:.12}\n", n - 1));
        }
        let doc = json!({
            "counts": r.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "spectral_radius": r.spectral_radius,
            "entropy": if r.entropy.is_finite() { json!(r.entropy) } else { json!("-inf") },
            "ratio_estimate": r.ratio_estimate,
            "converged": r.converged,
        });
        (doc, text, 0)
    } else if let Some(v) = &a.omega {
        let spec = load_spec(&a.graph, ctx.conv)?;
        let (l, cap) = (v[0], v[1]);
        let p = omega_level(&spec, l, cap)?;
        let show = |w: &Word| show_word(spec.alphabet(), ctx.conv, w);
        let classes: Vec<Vec<String>> = p.classes.iter().map(|c| c.iter().map(show).collect()).collect();
        let mut text = format!("Ω_{l} on words of length ≤ {cap}: {} classes\n", classes.len());
        for (i, c) in classes.iter().enumerate() {
            let up = p.theta.as_ref().map(|t| format!("  θ ↦ {}", t[i])).unwrap_or_default();
            text.push_str(&format!("  [{i}] {}{up}\n", c.join(" ")));
        }
        if p.theta.is_some() {
            text.push_str(&format!("θ well defined: {}, onto: {}\n", p.theta_well_defined, p.theta_onto));
        }
        let doc = json!({
            "level": l, "length_cap": cap, "classes": classes, "theta": p.theta,
            "theta_well_defined": p.theta_well_defined, "theta_onto": p.theta_onto,
        });
        (doc, text, 0)
    } else if a.qmask {
        let g = load_fsg(ctx, &a.graph)?;
        let q = quantized_maps(&g);
        let gr = g.graph();
        let mut text = String::new();
        let mut rows = Vec::new();
        for v in 0..gr.vertex_count() {
            let m = &q.q_support[v];
            let phi: BTreeMap<&str, &str> = gr
                .alphabet()
                .symbols()
                .filter_map(|s| q.phi[s.index()][v].map(|t| (gr.alphabet().token(s), gr.vertex(t).id.as_str())))
                .collect();
            let maps: Vec<String> = phi.iter().map(|(s, t)| format!("φ_{s} ↦ {t}")).collect();
            text.push_str(&format!("{}: {} m={}  {}\n", gr.vertex(v).id, m, m.index(), maps.join(", ")));
            rows.push(json!({ "vertex": gr.vertex(v).id, "mask": m.to_string(), "index": m.index(), "phi": phi }));
        }
        (json!({ "vertices": rows }), text, 0)
    } else if let Some(v) = &a.lpc_check {
        let g1 = load_fsg(ctx, &a.graph)?;
        let g2 = load_fsg(ctx, &v[1])?;
        let map = read_vertex_map(&read(&v[0])?, &g1, &g2)?;
        let check = check_lpc_pointwise(&g1, &g2, &map)?;
        let failures: Vec<&str> = check.failures.iter().map(|f| g1.graph().vertex(*f).id.as_str()).collect();
        let text = if check.holds {
            "pointwise conjugacy holds\n".to_string()
        } else {
            format!("pointwise conjugacy fails at {}\n", failures.join(", "))
        };
        (json!({ "holds": check.holds, "failures": failures }), text, if check.holds { 0 } else { 1 })
    } else {
        let n = a.periodic.expect("clap requires one analysis");
        let spec = load_spec(&a.graph, ctx.conv)?;
        let counts = (1..=n).map(|i| periodic_points_finite_type(&spec, i)).collect::<Result<Vec<u64>>>()?;
        let text: String = counts.iter().enumerate().map(|(i, c)| format!("p_{} = {c}\n", i + 1)).collect();
        (json!({ "periodic_points": counts }), text, 0)
    };
    match emit {
        Emit::Json => ctx.deliver(&format!("{name}-dynamics.json"), &pretty(&doc))?,
        _ => ctx.deliver(&format!("{name}-dynamics.txt"), &text)?,
    }
    Ok(code)
}

/// Reads the `vertex_map` object of a witness document into indices.
fn read_vertex_map(text: &str, g1: &FollowerSetGraph, g2: &FollowerSetGraph) -> Result<Vec<usize>> {
    let v: Value = serde_json::from_str(text)?;
    let obj = v
        .get("vertex_map")
        .or_else(|| v.get("witness").and_then(|w| w.get("vertex_map")))
        .and_then(Value::as_object)
        .ok_or_else(|| Error::InvalidWitness("no vertex_map object".into()))?;
    let mut map = vec![usize::MAX; g1.vertex_count()];
    for (from, to) in obj {
        let to = to.as_str().ok_or_else(|| Error::InvalidWitness("vertex ids must be strings".into()))?;
        let i = g1.vertex_by_id(from).ok_or_else(|| Error::InvalidWitness(format!("unknown vertex {from}")))?;
        let j = g2.vertex_by_id(to).ok_or_else(|| Error::InvalidWitness(format!("unknown vertex {to}")))?;
        map[i] = j;
    }
    if map.contains(&usize::MAX) {
        return Err(Error::InvalidWitness("vertex map is not total".into()));
    }
    Ok(map)
}

// ---------------------------------------------------------------------------
// fock, examples

fn cmd_fock(ctx: &mut Ctx, a: FockArgs) -> Result<i32> {
    let emit = ctx.emit_or(Emit::Text, &[Emit::Json, Emit::Text])?;
    let spec = load_spec(&a.spec, ctx.conv)?;
    let r = verify_fock_relations(&spec, a.truncate)?;
    for w in &r.warnings {
        ctx.note(w)?;
    }
    let name = stem(&a.spec);
    match emit {
        Emit::Json => {
            let checks: Vec<Value> = r
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name, "statement": c.statement, "scope": c.scope,
                        "instances": c.instances, "status": c.status.to_string(), "counterexample": c.counterexample,
                    })
                })
                .collect();
            let doc = json!({ "truncation": r.n, "dimension": r.dim, "checks": checks, "passed": r.all_passed() });
            ctx.deliver(&format!("{name}-fock.json"), &pretty(&doc))?
        }
        _ => ctx.deliver(&format!("{name}-fock.txt"), &r.render())?,
    }
    Ok(if r.all_passed() { 0 } else { 1 })
}

fn cmd_examples(ctx: &mut Ctx, a: ExamplesArgs) -> Result<i32> {
    let emit = ctx.emit_or(Emit::Text, &[Emit::Json, Emit::Text])?;
    let report = run_examples(a.filter.as_deref().unwrap_or(""))?;
    let mut passed = report.passed();
    let mut text = report.render();
    let mut doc = json!({
        "checks": report.outcomes.iter().map(|o| json!({
            "case": o.case, "statement": o.statement, "passed": o.passed, "detail": o.detail,
        })).collect::<Vec<_>>(),
    });
    if let Some(seed) = a.seed {
        let lift = lift_suite(seed, 150)?;
        let oracle = oracle_suite(seed, 500, 8)?;
        text.push_str(&format!(
            "type-1 lifting (seed {seed}): {} symbol-injective pairs, {} two-symbol pairs, {} violations\n",
            lift.injective_pairs,
            lift.two_symbol_pairs,
            lift.violations.len()
        ));
        text.push_str(&format!(
            "construction against brute force (seed {seed}): {} languages, {} violations\n",
            oracle.specs,
            oracle.violations.len()
        ));
        for v in lift.violations.iter().chain(&oracle.violations) {
            text.push_str(&format!("  {v}\n"));
        }
        passed &= lift.violations.is_empty() && oracle.violations.is_empty();
        doc["seed"] = json!(seed);
        doc["lift_suite"] = json!({
            "injective_pairs": lift.injective_pairs, "two_symbol_pairs": lift.two_symbol_pairs, "violations": lift.violations,
        });
        doc["oracle_suite"] = json!({ "languages": oracle.specs, "violations": oracle.violations });
    }
    doc["passed"] = json!(passed);
    match emit {
        Emit::Json => ctx.deliver("examples.json", &pretty(&doc))?,
        _ => ctx.deliver("examples.txt", &text)?,
    }
    Ok(if passed { 0 } else { 1 })
}
