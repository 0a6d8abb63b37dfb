//! `origami-lab`: command-line access to origamis, curves, bicorn paths and
//! twist experiments.
//!
//! Exit status is 0 on success, 2 when the input is well formed but fails a
//! mathematical precondition, and 1 for usage errors and unreadable input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use origami_core::bicorn::{origami_edge_path, pair_matrix, verify_edge_path, EdgePath, PairMatrix};
use origami_core::complex::SurfaceComplex;
use origami_core::curve::{core_curves, PLCurve};
use origami_core::error::Error;
use origami_core::explorer::{distance_bounds, greedy_path, growth_experiment, quotient_sequence};
use origami_core::io::{self, OrigamiRef};
use origami_core::origami::{enumerate_one_one, Origami};
use origami_core::pair::{origami_from_pair, subpair_origamis};
use origami_core::render::{render_svg, RenderSpec};
use origami_core::twist::{chord_budget, dehn_twist, iterate_pa_partial};

#[derive(Parser)]
#[command(name = "origami-lab", version, about = "Origamis, simple closed curves, bicorn paths and Dehn twists")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Also write the command's table as CSV to this file.
    #[arg(long, global = true, value_name = "FILE")]
    emit_csv: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check an origami, curve or curve-pair file.
    Validate { file: PathBuf },
    /// Genus of an origami.
    Genus { origami: PathBuf },
    /// Core curves of the horizontal and vertical cylinders.
    Cores {
        origami: PathBuf,
        /// Write one curve file per core into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Canonical one-cylinder origamis with N squares.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        genus: Option<usize>,
    },
    /// The origami of a coherent filling pair.
    #[command(name = "pair2origami")]
    PairToOrigami {
        /// A curve-pair file, or two curve files.
        #[arg(num_args = 1..=2, required = true)]
        files: Vec<PathBuf>,
    },
    /// Bicorn edge-path from a to b.
    BicornPath {
        #[arg(num_args = 1..=2, required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute every check of an edge path.
    VerifyPath { path: PathBuf },
    /// Dehn twist of g about c.
    Twist {
        #[arg(long)]
        about: PathBuf,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        direction: i32,
        g: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Iterate h = T_a ∘ T_g⁻¹ on g.
    IteratePa {
        #[arg(long)]
        n: usize,
        a: PathBuf,
        g: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Intersection quotients along the bicorn path, or along a given path.
    Quotients {
        #[arg(num_args = 1..=2, required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        path: Option<PathBuf>,
    },
    /// Greedy edge-path search.
    Greedy {
        #[arg(num_args = 1..=2, required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 50)]
        cap: usize,
    },
    /// Distance bounds for a pair.
    Bounds {
        #[arg(num_args = 1..=2, required = true)]
        files: Vec<PathBuf>,
        /// Use this path for the upper bounds instead of the bicorn path.
        #[arg(long)]
        path: Option<PathBuf>,
    },
    /// Intersection growth under h = T_a ∘ T_g⁻¹.
    Growth {
        #[arg(long)]
        n: usize,
        a: PathBuf,
        g: PathBuf,
    },
    /// SVG picture of an origami and curves on it.
    Render {
        #[arg(long)]
        out: PathBuf,
        /// An origami, curve, curve-pair or edge-path file, then more curves.
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 80)]
        unit: u32,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    format: Format,
    csv: Option<PathBuf>,
}

impl Ctx {
    fn emit(&self, value: &Value, text: impl FnOnce() -> String) {
        match self.format {
            Format::Json => print!("{}", io::to_pretty(value)),
            Format::Text => print!("{}", text()),
        }
    }

    fn write_csv<R: Serialize>(&self, rows: &[R]) -> Outcome {
        let Some(path) = &self.csv else { return Ok(()) };
        let mut w = csv::Writer::from_path(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        for r in rows {
            w.serialize(r).map_err(|e| Failure::Usage(e.to_string()))?;
        }
        w.flush().map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(())
    }
}

fn is_curve_pair(text: &str) -> bool {
    serde_json::from_str::<Value>(text).is_ok_and(|v| v.get("a").is_some() && v.get("b").is_some())
}

/// Two curves on one origami, from a curve-pair file or two curve files.
/// Documents written from them carry the origami inline, since a relative
/// reference would not resolve next to the output.
fn load_pair(files: &[PathBuf]) -> Result<(OrigamiRef, Origami, PLCurve, PLCurve), Failure> {
    match files {
        [one] => {
            let p = io::load_curve_pair(one)?;
            Ok((OrigamiRef::Inline(p.origami.clone()), p.origami, p.a, p.b))
        }
        [a, b] => {
            let fa = io::load_curve(a)?;
            let fb = io::load_curve(b)?;
            if fa.origami != fb.origami {
                return Err(Failure::Usage("the two curves lie on different origamis".into()));
            }
            Ok((OrigamiRef::Inline(fa.origami.clone()), fa.origami, fa.curve, fb.curve))
        }
        _ => Err(Failure::Usage("expected a curve-pair file or two curve files".into())),
    }
}

fn complex_of(o: &Origami) -> Result<SurfaceComplex, Failure> {
    Ok(SurfaceComplex::build(o)?)
}

fn checked(c: &PLCurve, complex: &SurfaceComplex) -> Outcome {
    let v = c.validate(complex);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Failure::Domain(v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")))
    }
}

fn matrix_text(m: &PairMatrix) -> String {
    let k = m.geometric.len();
    let mut s = String::from("     ");
    for j in 0..k {
        let _ = write!(s, "{:>6}", format!("v{j}"));
    }
    s.push('\n');
    for i in 0..k {
        let _ = write!(s, "{:<5}", format!("v{i}"));
        for j in 0..k {
            let cell = if i == j { "-".to_string() } else { m.geometric[i][j].to_string() };
            let _ = write!(s, "{cell:>6}");
        }
        s.push('\n');
    }
    s
}

fn origami_text(o: &Origami) -> String {
    format!("n={} h={:?} v={:?}\n", o.n, o.h.images(), o.v.images())
}

fn cmd_validate(ctx: &Ctx, file: &Path) -> Outcome {
    let text = io::read_text(file)?;
    let value: Value = serde_json::from_str(&text).map_err(Error::from)?;
    let (kind, problems): (&str, Vec<String>) = if value.get("h").is_some() {
        let o = io::parse_origami_unchecked(&text)?;
        ("origami", o.validate().iter().map(|v| v.to_string()).collect())
    } else if value.get("points").is_some() {
        let f = io::parse_curve(&text, file.parent())?;
        let cx = complex_of(&f.origami)?;
        ("curve", f.curve.validate(&cx).iter().map(|v| v.to_string()).collect())
    } else if value.get("a").is_some() {
        let p = io::parse_curve_pair(&text, file.parent())?;
        let cx = complex_of(&p.origami)?;
        let mut out: Vec<String> = p.a.validate(&cx).iter().map(|v| format!("a: {v}")).collect();
        out.extend(p.b.validate(&cx).iter().map(|v| format!("b: {v}")));
        ("curve pair", out)
    } else {
        return Err(Failure::Usage("not an origami, curve or curve-pair document".into()));
    };
    let valid = problems.is_empty();
    ctx.emit(&json!({ "kind": kind, "valid": valid, "violations": problems }), || {
        if valid {
            format!("valid {kind}\n")
        } else {
            problems.iter().map(|p| format!("{p}\n")).collect::<String>()
        }
    });
    if valid {
        Ok(())
    } else {
        Err(Failure::Domain(format!("invalid {kind}")))
    }
}

fn cmd_genus(ctx: &Ctx, file: &Path) -> Outcome {
    let o = io::load_origami(file)?;
    let g = o.genus()?;
    let cx = complex_of(&o)?;
    let s = cx.summary();
    ctx.emit(&serde_json::to_value(&s).unwrap_or(json!({ "genus": g })), || format!("{g}\n"));
    Ok(())
}

fn cmd_cores(ctx: &Ctx, file: &Path, out_dir: Option<&Path>) -> Outcome {
    let o = io::load_origami(file)?;
    let cx = complex_of(&o)?;
    let (h, v) = core_curves(&cx);
    let r = OrigamiRef::Inline(o.clone());
    let named: Vec<(String, &PLCurve)> = h
        .iter()
        .enumerate()
        .map(|(i, c)| (format!("h{i}"), c))
        .chain(v.iter().enumerate().map(|(i, c)| (format!("v{i}"), c)))
        .collect();
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
        for (n, c) in &named {
            io::write_text(&dir.join(format!("{n}.curve.json")), &io::to_pretty(&io::curve_json(&r, c)))?;
        }
    }
    let value = Value::Object(named.iter().map(|(n, c)| (n.clone(), io::curve_json(&r, c))).collect());
    ctx.emit(&value, || named.iter().map(|(n, c)| format!("{n}: {} chords\n", c.len())).collect::<String>());
    Ok(())
}

fn cmd_enumerate(ctx: &Ctx, n: usize, genus: Option<usize>) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    let all = enumerate_one_one(n, genus);
    #[derive(Serialize)]
    struct Row {
        index: usize,
        n: usize,
        genus: usize,
        h: String,
        v: String,
    }
    let rows: Vec<Row> = all
        .iter()
        .enumerate()
        .map(|(i, o)| Row {
            index: i,
            n: o.n,
            genus: o.genus().unwrap_or(0),
            h: format!("{:?}", o.h.images()),
            v: format!("{:?}", o.v.images()),
        })
        .collect();
    ctx.write_csv(&rows)?;
    let value = Value::Array(all.iter().map(io::origami_json).collect());
    ctx.emit(&value, || {
        let mut s = format!("{} origamis\n", all.len());
        for (r, o) in rows.iter().zip(&all) {
            let _ = write!(s, "{:>4}  g={}  {}", r.index, r.genus, origami_text(o));
        }
        s
    });
    Ok(())
}

fn cmd_pair2origami(ctx: &Ctx, files: &[PathBuf]) -> Outcome {
    let (_, o, a, b) = load_pair(files)?;
    let cx = complex_of(&o)?;
    let induced = origami_from_pair(&a, &b, &cx)?;
    ctx.emit(&io::origami_json(&induced), || io::to_pretty(&io::origami_json(&induced)));
    Ok(())
}

fn cmd_bicorn_path(ctx: &Ctx, files: &[PathBuf], out: Option<&Path>) -> Outcome {
    let (r, o, a, b) = load_pair(files)?;
    let cx = complex_of(&o)?;
    let p = origami_edge_path(&a, &b, &cx)?;
    let value = io::edge_path_json(&r, &p);
    if let Some(out) = out {
        io::write_text(out, &io::to_pretty(&value))?;
    }
    ctx.emit(&value, || {
        let mut s = format!("length {}\n", p.length);
        for (i, arcs) in p.arcs.iter().enumerate() {
            let _ = writeln!(s, "v{i}: {arcs:?}");
        }
        s.push_str(&matrix_text(&p.checks));
        s
    });
    Ok(())
}

fn cmd_verify_path(ctx: &Ctx, file: &Path) -> Outcome {
    let (o, p) = io::load_edge_path(file)?;
    let cx = complex_of(&o)?;
    for c in &p.curves {
        checked(c, &cx)?;
    }
    let report = verify_edge_path(&p.curves, &cx)?;
    let m = pair_matrix(&p.curves, &cx)?;
    let stored_match = p.checks.geometric.is_empty() || p.checks == m;
    let subs = if report.passed() { subpair_origamis(&p, &cx)? } else { Vec::new() };
    let value = json!({
        "report": report,
        "passed": report.passed(),
        "stored_checks_match": stored_match,
        "checks": m,
        "subpairs": subs,
    });
    ctx.emit(&value, || {
        let mut s = format!("{}\n", if report.passed() { "path verified" } else { "path FAILED verification" });
        for f in &report.failures {
            let _ = writeln!(s, "  {f}");
        }
        if !stored_match {
            s.push_str("stored checks differ from recomputed ones\n");
        }
        s.push_str(&matrix_text(&m));
        for sp in subs.iter().filter(|sp| sp.origami.is_some()) {
            let _ = write!(s, "(v{}, v{}) -> {}", sp.i, sp.j, origami_text(sp.origami.as_ref().unwrap()));
        }
        s
    });
    if report.passed() && stored_match {
        Ok(())
    } else {
        Err(Failure::Domain("edge path failed verification".into()))
    }
}

fn cmd_twist(ctx: &Ctx, about: &Path, direction: i32, g: &Path, out: Option<&Path>) -> Outcome {
    if direction != 1 && direction != -1 {
        return Err(Failure::Usage("--direction must be +1 or -1".into()));
    }
    let fc = io::load_curve(about)?;
    let fg = io::load_curve(g)?;
    if fc.origami != fg.origami {
        return Err(Failure::Usage("the two curves lie on different origamis".into()));
    }
    let cx = complex_of(&fg.origami)?;
    let t = dehn_twist(&fg.curve, &fc.curve, direction, &cx)?;
    let value = io::curve_json(&OrigamiRef::Inline(fg.origami.clone()), &t);
    if let Some(out) = out {
        io::write_text(out, &io::to_pretty(&value))?;
    }
    ctx.emit(&value, || io::to_pretty(&value));
    Ok(())
}

fn load_two_curves(a: &Path, g: &Path) -> Result<(Origami, PLCurve, PLCurve), Failure> {
    let fa = io::load_curve(a)?;
    let fg = io::load_curve(g)?;
    if fa.origami != fg.origami {
        return Err(Failure::Usage("the two curves lie on different origamis".into()));
    }
    Ok((fa.origami, fa.curve, fg.curve))
}

fn cmd_iterate_pa(ctx: &Ctx, n: usize, a: &Path, g: &Path, report: Option<&Path>) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let (o, a, g) = load_two_curves(a, g)?;
    let cx = complex_of(&o)?;
    let budget = chord_budget();
    let run = iterate_pa_partial(&a, &g, n, &cx, budget)?;
    ctx.write_csv(&run.records)?;
    let stopped = run.stopped.as_ref().map(|e| e.to_string());
    let value = json!({ "budget": budget, "records": run.records, "stopped": stopped });
    if let Some(path) = report {
        io::write_text(path, &io::to_pretty(&value))?;
    }
    ctx.emit(&value, || {
        let mut s = format!(
            "{:>3} {:>9} {:>9} {:>9} {:>6} {:>6} {:>6}\n",
            "n", "chords", "i(a,.)", "i(g,.)", "coh_a", "coh_g", "fills"
        );
        for r in &run.records {
            let _ = writeln!(
                s,
                "{:>3} {:>9} {:>9} {:>9} {:>6} {:>6} {:>6}",
                r.n, r.chords, r.i_a, r.i_g, r.coherent_a, r.coherent_g, r.filling_a
            );
        }
        if let Some(e) = &stopped {
            let _ = writeln!(s, "stopped: {e}");
        }
        s
    });
    match run.stopped {
        Some(e) => Err(Failure::from(e)),
        None => Ok(()),
    }
}

fn path_for(files: &[PathBuf], path: Option<&Path>) -> Result<(Origami, PLCurve, PLCurve, EdgePath), Failure> {
    let (_, o, a, b) = load_pair(files)?;
    let p = match path {
        Some(file) => {
            let (po, p) = io::load_edge_path(file)?;
            if po != o {
                return Err(Failure::Usage("path and curves lie on different origamis".into()));
            }
            p
        }
        None => origami_edge_path(&a, &b, &complex_of(&o)?)?,
    };
    Ok((o, a, b, p))
}

fn cmd_quotients(ctx: &Ctx, files: &[PathBuf], path: Option<&Path>) -> Outcome {
    let (o, a, b, p) = path_for(files, path)?;
    let cx = complex_of(&o)?;
    let q = quotient_sequence(&p, &a, &b, &cx)?;
    #[derive(Serialize)]
    struct Row {
        k: usize,
        i_b: usize,
        i_a: usize,
        value: String,
    }
    let rows: Vec<Row> = q
        .quotients
        .iter()
        .enumerate()
        .map(|(k, x)| Row { k: k + 1, i_b: x.i_b, i_a: x.i_a, value: origami_core::curve::format_rat(&x.value()) })
        .collect();
    ctx.write_csv(&rows)?;
    ctx.emit(&serde_json::to_value(&q).expect("report serializes"), || {
        let terms: Vec<String> = q.quotients.iter().map(|x| format!("{}/{}", x.i_b, x.i_a)).collect();
        format!(
            "length {}\n{}\nstrictly decreasing: {}\n",
            q.length,
            if terms.is_empty() { "(no interior curves)".into() } else { terms.join(" > ") },
            q.strictly_decreasing
        )
    });
    Ok(())
}

fn cmd_greedy(ctx: &Ctx, files: &[PathBuf], cap: usize) -> Outcome {
    let (r, o, a, b) = load_pair(files)?;
    let cx = complex_of(&o)?;
    let rep = greedy_path(&a, &b, cap, &cx)?;
    let value = json!({
        "greedy_length": rep.greedy_length,
        "bicorn_length": rep.bicorn_length,
        "origami_length_upper": rep.origami_length_upper,
        "universe": rep.universe,
        "log": rep.log,
        "best_path": io::edge_path_json(&r, &rep.best_path),
    });
    ctx.emit(&value, || {
        let mut s = format!(
            "greedy length {}\nbicorn length {}\norigami_length_upper {}\ncandidates: {}\n",
            rep.greedy_length,
            rep.bicorn_length.map_or("-".into(), |l| l.to_string()),
            rep.origami_length_upper,
            rep.universe
        );
        for l in &rep.log {
            let _ = writeln!(s, "  {l}");
        }
        s
    });
    Ok(())
}

fn cmd_bounds(ctx: &Ctx, files: &[PathBuf], path: Option<&Path>) -> Outcome {
    let (_, o, a, b) = load_pair(files)?;
    let cx = complex_of(&o)?;
    let p = match path {
        Some(file) => Some(io::load_edge_path(file)?.1),
        None => origami_edge_path(&a, &b, &cx).ok(),
    };
    let d = distance_bounds(&a, &b, p.as_ref(), &cx)?;
    ctx.emit(&serde_json::to_value(&d).expect("bounds serialize"), || {
        format!(
            "lower {} ({:?})\nupper_rasmussen {}\nupper_ns {} (no certificate)\n",
            d.lower,
            d.reason,
            d.upper_rasmussen.map_or("-".into(), |u| u.to_string()),
            d.upper_ns.map_or("-".into(), |u| u.to_string()),
        )
    });
    Ok(())
}

fn cmd_growth(ctx: &Ctx, n: usize, a: &Path, g: &Path) -> Outcome {
    let (o, a, g) = load_two_curves(a, g)?;
    let cx = complex_of(&o)?;
    let t = growth_experiment(&a, &g, n, chord_budget(), &cx)?;
    ctx.write_csv(&t.rows)?;
    ctx.emit(&serde_json::to_value(&t).expect("table serializes"), || {
        let mut s = format!("{:>3} {:>9} {:>9} {:>9} {:>6}\n", "n", "chords", "i(a,.)", "i(g,.)", "lower");
        for r in &t.rows {
            let _ = writeln!(s, "{:>3} {:>9} {:>9} {:>9} {:>6}", r.n, r.chords, r.i_a, r.i_g, r.lower);
        }
        if let Some(e) = &t.stopped {
            let _ = writeln!(s, "stopped: {e}");
        }
        s
    });
    Ok(())
}

fn cmd_render(ctx: &Ctx, out: &Path, files: &[PathBuf], unit: u32) -> Outcome {
    let mut origami: Option<Origami> = None;
    let mut curves = Vec::new();
    for f in files {
        let text = io::read_text(f)?;
        let value: Value = serde_json::from_str(&text).map_err(Error::from)?;
        let (o, cs) = if value.get("h").is_some() {
            (io::parse_origami(&text)?, vec![])
        } else if value.get("curves").is_some() {
            let (o, p) = io::parse_edge_path(&text, f.parent())?;
            (o, p.curves)
        } else if is_curve_pair(&text) {
            let p = io::parse_curve_pair(&text, f.parent())?;
            (p.origami, vec![p.a, p.b])
        } else {
            let c = io::parse_curve(&text, f.parent())?;
            (c.origami, vec![c.curve])
        };
        match &origami {
            Some(prev) if *prev != o => return Err(Failure::Domain("inputs lie on different origamis".into())),
            _ => origami = Some(o),
        }
        curves.extend(cs);
    }
    let o = origami.ok_or_else(|| Failure::Usage("nothing to render".into()))?;
    let spec = RenderSpec { unit, ..RenderSpec::default() };
    let svg = render_svg(&o, &curves, &spec)?;
    io::write_text(out, &svg)?;
    ctx.emit(&json!({ "out": out.display().to_string(), "squares": o.n, "curves": curves.len() }), || {
        format!("wrote {} ({} squares, {} curves)\n", out.display(), o.n, curves.len())
    });
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx { format: cli.format, csv: cli.emit_csv };
    match cli.command {
        Command::Validate { file } => cmd_validate(&ctx, &file),
        Command::Genus { origami } => cmd_genus(&ctx, &origami),
        Command::Cores { origami, out_dir } => cmd_cores(&ctx, &origami, out_dir.as_deref()),
        Command::Enumerate { n, genus } => cmd_enumerate(&ctx, n, genus),
        Command::PairToOrigami { files } => cmd_pair2origami(&ctx, &files),
        Command::BicornPath { files, out } => cmd_bicorn_path(&ctx, &files, out.as_deref()),
        Command::VerifyPath { path } => cmd_verify_path(&ctx, &path),
        Command::Twist { about, direction, g, out } => cmd_twist(&ctx, &about, direction, &g, out.as_deref()),
        Command::IteratePa { n, a, g, report } => cmd_iterate_pa(&ctx, n, &a, &g, report.as_deref()),
        Command::Quotients { files, path } => cmd_quotients(&ctx, &files, path.as_deref()),
        Command::Greedy { files, cap } => cmd_greedy(&ctx, &files, cap),
        Command::Bounds { files, path } => cmd_bounds(&ctx, &files, path.as_deref()),
        Command::Growth { n, a, g } => cmd_growth(&ctx, n, &a, &g),
        Command::Render { out, files, unit } => cmd_render(&ctx, &out, &files, unit),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
