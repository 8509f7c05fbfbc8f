mod cache;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use cominuscule::dualequiv::{
    dual_class, dual_equivalent_by_infusion, dual_equivalent_by_moves, generalized_rsk, haiman_table, haiman_tables,
    HaimanTable,
};
use cominuscule::exec::Exec;
use cominuscule::growth::{delta_iterates, evacuation, growth_of, triangular_growth};
use cominuscule::jdt::{infusion, rectify_traced, SlideRecord};
use cominuscule::json::{PosetJson, TableJson, TableauJson};
use cominuscule::render::{render_growth, render_haiman, render_poset, render_tableau, render_trace, render_triangle};
use cominuscule::rootsys::{build_poset, CominusculePoset, Space};
use cominuscule::schubert::{build_table, coeff, verify_ring, Convention, Rule, DEFAULT_TABLE_CAP};
use cominuscule::shapes::{enumerate_syt, format_shape, shape_from_str, Shape, SkewShape, Tableau};

#[derive(Parser)]
#[command(name = "cominuscule", version, about = "Tableau combinatorics and Schubert calculus on cominuscule posets")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// Show intermediate steps (slides, Δ-iterates).
    #[arg(long, global = true)]
    trace: bool,
    /// Seed for randomized output such as `syt --sample`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Show the poset of a family: `poset <family> [params]`.
    Poset { args: Vec<String> },
    /// Standard tableaux of a shape: `syt <family> [params] <outer> [inner]`.
    Syt {
        args: Vec<String>,
        /// Print only the number of tableaux.
        #[arg(long)]
        count: bool,
        /// Print this many tableaux chosen at random (see --seed).
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Rectify a tableau given as JSON.
    Rectify { tableau: PathBuf },
    /// infusion(T, U) for tableaux given as JSON.
    Infusion { t: PathBuf, u: PathBuf },
    /// The dual equivalence class of a tableau, or a comparison with `--with`.
    Dualclass {
        tableau: PathBuf,
        #[arg(long = "with")]
        other: Option<PathBuf>,
    },
    /// Haiman tables: `haiman-table <family> [params] <outer> <inner> [mu]`.
    HaimanTable { args: Vec<String> },
    /// Generalized Robinson-Schensted: insertion and recording tableaux.
    Rsk { tableau: PathBuf },
    /// Growth diagram of infusion(R, T).
    Growth {
        r: PathBuf,
        t: PathBuf,
        /// Force the ASCII grid even with --format json.
        #[arg(long)]
        ascii: bool,
    },
    /// Evacuation of a straight-shape tableau.
    Evac { tableau: PathBuf },
    /// Structure constant: `coeff <family> [params] <lambda> <mu> <nu>`.
    Coeff {
        args: Vec<String>,
        #[arg(long, default_value = "dualclass")]
        rule: String,
        /// Omit the power of two from short roots.
        #[arg(long)]
        minuscule: bool,
    },
    /// Full multiplication table: `table <family> [params]`.
    Table {
        args: Vec<String>,
        #[arg(long, default_value = "dualclass")]
        rule: String,
        #[arg(long)]
        minuscule: bool,
        /// Check commutativity, associativity, identity and grading.
        #[arg(long)]
        verify: bool,
        /// Largest poset accepted.
        #[arg(long, default_value_t = DEFAULT_TABLE_CAP)]
        cap: usize,
    },
}

/// Exit status 1 for domain errors, 2 for usage errors.
enum Fail {
    Usage(String),
    Domain(String),
}

impl From<cominuscule::Error> for Fail {
    fn from(e: cominuscule::Error) -> Fail {
        match e {
            cominuscule::Error::Json(_) => Fail::Usage(e.to_string()),
            _ => Fail::Domain(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for Fail {
    fn from(e: serde_json::Error) -> Fail {
        Fail::Usage(format!("JSON error: {e}"))
    }
}

type Out = Result<String, Fail>;

fn usage(msg: impl Into<String>) -> Fail {
    Fail::Usage(msg.into())
}

/// Splits `<family> [params] rest...`. Parameters may be separate words
/// (`gr 2 4`) or one comma-separated word (`gr 2,4`).
fn parse_space(args: &[String]) -> Result<(Space, &[String]), Fail> {
    let family = args.first().ok_or_else(|| usage("missing family name"))?;
    let count = Space::param_count(family)
        .ok_or_else(|| usage(format!("unknown family {family:?}; expected gr, oq, lg, eq, og, cayley or e7")))?;
    let rest = &args[1..];
    let numbers = |s: &str| -> Option<Vec<usize>> { s.split(',').map(|p| p.trim().parse().ok()).collect() };
    let (params, used) = match rest.first().and_then(|s| numbers(s)) {
        Some(v) if count > 1 && v.len() == count => (v, 1),
        _ => {
            if rest.len() < count {
                return Err(usage(format!("{family} takes {count} parameter(s)")));
            }
            let v = rest[..count]
                .iter()
                .map(|s| s.parse::<usize>().map_err(|_| usage(format!("parameter {s:?} is not a number"))))
                .collect::<Result<Vec<_>, _>>()?;
            (v, count)
        }
    };
    let space = Space::from_parts(family, &params).map_err(|e| usage(e.to_string()))?;
    Ok((space, &rest[used..]))
}

fn expect_args(rest: &[String], min: usize, max: usize, what: &str) -> Result<(), Fail> {
    if rest.len() < min || rest.len() > max {
        return Err(usage(format!("expected {what}")));
    }
    Ok(())
}

fn read_text(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_tableau(path: &Path) -> Result<(CominusculePoset, Tableau), Fail> {
    let text = read_text(path)?;
    let doc: TableauJson = serde_json::from_str(&text)?;
    let poset = build_poset(doc.space().map_err(|e| usage(e.to_string()))?)?;
    let t = doc.to_tableau(&poset)?;
    Ok((poset, t))
}

fn load_on(poset: &CominusculePoset, path: &Path) -> Result<Tableau, Fail> {
    let doc: TableauJson = serde_json::from_str(&read_text(path)?)?;
    Ok(doc.to_tableau(poset)?)
}

fn tj(poset: &CominusculePoset, t: &Tableau) -> Value {
    serde_json::to_value(TableauJson::from_tableau(poset, t)).expect("serializable")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn slide_json(poset: &CominusculePoset, r: &SlideRecord) -> Value {
    let pos = |b: usize| {
        let i = poset.box_info(b);
        json!([i.row, i.col])
    };
    json!({
        "start": pos(r.start),
        "moves": r.moves.iter().map(|&(f, t)| json!([pos(f), pos(t)])).collect::<Vec<_>>(),
        "end": pos(r.end),
    })
}

fn cmd_poset(cli: &Cli, args: &[String]) -> Out {
    let (space, rest) = parse_space(args)?;
    expect_args(rest, 0, 0, "poset <family> [params]")?;
    let p = build_poset(space)?;
    if cli.format == Format::Json {
        return Ok(pretty(&serde_json::to_value(PosetJson::from_poset(&p))?));
    }
    let mut out = render_poset(&p);
    out.push_str(&format!("covers: {}\n", p.covers().len()));
    out.push_str(&format!("short roots: {}\n", p.shortroots(p.full())));
    out.push_str(&format!("order ideals: {}\n", p.ideals().len()));
    Ok(out)
}

fn skew_from(p: &CominusculePoset, outer: &str, inner: Option<&String>) -> Result<SkewShape, Fail> {
    let outer = shape_from_str(p, outer)?;
    let inner = match inner {
        Some(s) => shape_from_str(p, s)?,
        None => Shape::EMPTY,
    };
    Ok(SkewShape::new(p, inner, outer)?)
}

fn skew_title(p: &CominusculePoset, s: &SkewShape) -> String {
    if s.inner.is_empty() {
        format_shape(p, s.outer)
    } else {
        format!("{} / {}", format_shape(p, s.outer), format_shape(p, s.inner))
    }
}

fn cmd_syt(cli: &Cli, args: &[String], count_only: bool, sample: Option<usize>) -> Out {
    let (space, rest) = parse_space(args)?;
    expect_args(rest, 1, 2, "syt <family> [params] <outer> [inner]")?;
    let p = build_poset(space)?;
    let skew = skew_from(&p, &rest[0], rest.get(1))?;
    let mut all = enumerate_syt(&p, skew);
    let total = all.len();
    if let Some(k) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        all.shuffle(&mut rng);
        all.truncate(k);
        all.sort();
    }
    if cli.format == Format::Json {
        let mut v = json!({ "count": total });
        if !count_only {
            v["tableaux"] = all.iter().map(|t| tj(&p, t)).collect();
        }
        return Ok(pretty(&v));
    }
    let mut out = format!("{total} standard tableaux of {}\n", skew_title(&p, &skew));
    if !count_only {
        for t in &all {
            out.push('\n');
            out.push_str(&render_tableau(&p, t));
        }
    }
    Ok(out)
}

fn cmd_rectify(cli: &Cli, path: &Path) -> Out {
    let (p, t) = load_tableau(path)?;
    let (r, trace) = rectify_traced(&p, &t);
    if cli.format == Format::Json {
        let mut v = json!({ "rectification": tj(&p, &r) });
        if cli.trace {
            v["trace"] = trace.iter().map(|s| slide_json(&p, s)).collect();
        }
        return Ok(pretty(&v));
    }
    let mut out = String::new();
    if cli.trace {
        out.push_str(&render_trace(&p, &trace));
        out.push('\n');
    }
    out.push_str(&render_tableau(&p, &r));
    Ok(out)
}

fn cmd_infusion(cli: &Cli, t: &Path, u: &Path) -> Out {
    let (p, t) = load_tableau(t)?;
    let u = load_on(&p, u)?;
    let r = infusion(&p, &t, &u)?;
    if cli.format == Format::Json {
        return Ok(pretty(&json!({ "first": tj(&p, &r.first), "second": tj(&p, &r.second) })));
    }
    Ok(format!("first:\n{}\nsecond:\n{}", render_tableau(&p, &r.first), render_tableau(&p, &r.second)))
}

fn cmd_dualclass(cli: &Cli, path: &Path, other: Option<&Path>) -> Out {
    let (p, t) = load_tableau(path)?;
    if let Some(o) = other {
        let u = load_on(&p, o)?;
        let (a, b) = (dual_equivalent_by_moves(&p, &t, &u), dual_equivalent_by_infusion(&p, &t, &u));
        if cli.format == Format::Json {
            return Ok(pretty(&json!({ "by_moves": a, "by_infusion": b })));
        }
        return Ok(format!("elementary moves: {}\ninfusion: {}\n", verdict(a), verdict(b)));
    }
    let class = dual_class(&p, &t);
    if cli.format == Format::Json {
        return Ok(pretty(&json!({ "class": class.iter().map(|x| tj(&p, x)).collect::<Vec<_>>() })));
    }
    let mut out = format!("dual equivalence class of size {}\n", class.len());
    for x in &class {
        out.push('\n');
        out.push_str(&render_tableau(&p, x));
    }
    Ok(out)
}

fn verdict(b: bool) -> &'static str {
    if b {
        "dual equivalent"
    } else {
        "not dual equivalent"
    }
}

fn haiman_json(p: &CominusculePoset, h: &HaimanTable) -> Value {
    let rows: Vec<Value> = (0..h.rows())
        .map(|r| {
            json!({
                "rectification": tj(p, &h.row_keys[r]),
                "cells": (0..h.cols())
                    .map(|c| h.cell_contents(r, c).iter().map(|t| tj(p, t)).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "outer": format_shape(p, h.skew.outer),
        "inner": format_shape(p, h.skew.inner),
        "mu": format_shape(p, h.mu),
        "full_grid": h.is_full_grid(),
        "rows": rows,
    })
}

fn cmd_haiman(cli: &Cli, args: &[String]) -> Out {
    let (space, rest) = parse_space(args)?;
    expect_args(rest, 2, 3, "haiman-table <family> [params] <outer> <inner> [mu]")?;
    let p = build_poset(space)?;
    let skew = skew_from(&p, &rest[0], rest.get(1))?;
    let tables = match rest.get(2) {
        Some(mu) => vec![haiman_table(&p, skew, shape_from_str(&p, mu)?)],
        None => haiman_tables(&p, skew),
    };
    if cli.format == Format::Json {
        return Ok(pretty(&Value::Array(tables.iter().map(|h| haiman_json(&p, h)).collect())));
    }
    Ok(tables.iter().map(|h| render_haiman(&p, h)).collect::<Vec<_>>().join("\n"))
}

fn cmd_rsk(cli: &Cli, path: &Path) -> Out {
    let (p, t) = load_tableau(path)?;
    let (ins, rec) = generalized_rsk(&p, &t);
    if cli.format == Format::Json {
        return Ok(pretty(&json!({ "insertion": tj(&p, &ins), "recording": tj(&p, &rec) })));
    }
    Ok(format!("insertion:\n{}\nrecording:\n{}", render_tableau(&p, &ins), render_tableau(&p, &rec)))
}

fn cmd_growth(cli: &Cli, r: &Path, t: &Path, ascii: bool) -> Out {
    let (p, r) = load_tableau(r)?;
    let t = load_on(&p, t)?;
    let g = growth_of(&p, &r, &t)?;
    if cli.format == Format::Json && !ascii {
        let rows: Vec<Vec<String>> =
            g.rows().iter().rev().map(|row| row.iter().map(|s| format_shape(&p, *s)).collect()).collect();
        let space = p.space();
        return Ok(pretty(&json!({ "family": space.family_name(), "params": space.params(), "rows": rows })));
    }
    let mut out = render_growth(&p, &g);
    if cli.trace {
        let inf = infusion(&p, &r, &t)?;
        out.push_str(&format!(
            "\nbottom row (infusion_1):\n{}\nright column (infusion_2):\n{}",
            render_tableau(&p, &inf.first),
            render_tableau(&p, &inf.second)
        ));
    }
    Ok(out)
}

fn cmd_evac(cli: &Cli, path: &Path) -> Out {
    let (p, t) = load_tableau(path)?;
    let e = evacuation(&p, &t)?;
    if cli.format == Format::Json {
        let mut v = json!({ "evacuation": tj(&p, &e) });
        if cli.trace {
            v["iterates"] = delta_iterates(&p, &t)?.iter().map(|x| tj(&p, x)).collect();
        }
        return Ok(pretty(&v));
    }
    let mut out = String::new();
    if cli.trace {
        for (k, x) in delta_iterates(&p, &t)?.iter().enumerate().skip(1) {
            if x.is_empty() {
                continue;
            }
            out.push_str(&format!("Δ^{k}:\n{}\n", render_tableau(&p, x)));
        }
        out.push_str(&render_triangle(&p, &triangular_growth(&p, &t)?));
        out.push('\n');
    }
    out.push_str("evac:\n");
    out.push_str(&render_tableau(&p, &e));
    Ok(out)
}

fn convention(minuscule: bool) -> Convention {
    if minuscule {
        Convention::Minuscule
    } else {
        Convention::Cominuscule
    }
}

fn cmd_coeff(cli: &Cli, args: &[String], rule: &str, minuscule: bool) -> Out {
    let (space, rest) = parse_space(args)?;
    expect_args(rest, 3, 3, "coeff <family> [params] <lambda> <mu> <nu>")?;
    let rule = Rule::parse(rule).map_err(|e| usage(e.to_string()))?;
    let p = build_poset(space)?;
    let (l, m, n) = (shape_from_str(&p, &rest[0])?, shape_from_str(&p, &rest[1])?, shape_from_str(&p, &rest[2])?);
    let conv = convention(minuscule);
    let c = coeff(&p, l, m, n, rule, conv)?;
    if cli.format == Format::Json {
        return Ok(pretty(&json!({
            "family": space.family_name(),
            "params": space.params(),
            "lambda": format_shape(&p, l),
            "mu": format_shape(&p, m),
            "nu": format_shape(&p, n),
            "rule": rule.name(),
            "convention": if minuscule { "minuscule" } else { "cominuscule" },
            "value": c,
        })));
    }
    Ok(format!("{c}\n"))
}

fn cmd_table(cli: &Cli, args: &[String], rule: &str, minuscule: bool, verify: bool, cap: usize) -> Out {
    let (space, rest) = parse_space(args)?;
    expect_args(rest, 0, 0, "table <family> [params]")?;
    let rule = Rule::parse(rule).map_err(|e| usage(e.to_string()))?;
    let p = build_poset(space)?;
    let conv = convention(minuscule);
    let table = match cache::load(&p, rule, conv) {
        Some(t) => t,
        None => {
            let t = build_table(&p, rule, conv, cap, Exec::Parallel)?;
            if let Err(e) = cache::store(&p, &t) {
                eprintln!("warning: could not write the table cache: {e}");
            }
            t
        }
    };
    let report = verify.then(|| verify_ring(&table, Exec::Parallel));
    let mut out = if cli.format == Format::Json {
        pretty(&serde_json::to_value(TableJson::from_table(&p, &table))?)
    } else {
        let mut s = format!("{} ({} rule): {} basis classes\n", space.name(), rule.name(), table.basis.len());
        for &l in &table.basis {
            for &m in &table.basis {
                if l > m {
                    continue;
                }
                let prod = table.product(l, m);
                if prod.is_empty() {
                    continue;
                }
                let terms: Vec<String> = prod
                    .iter()
                    .map(|(nu, c)| {
                        let name = format_shape(&p, *nu);
                        if *c == 1 {
                            format!("σ{name}")
                        } else {
                            format!("{c} σ{name}")
                        }
                    })
                    .collect();
                s.push_str(&format!("σ{} · σ{} = {}\n", format_shape(&p, l), format_shape(&p, m), terms.join(" + ")));
            }
        }
        s
    };
    if let Some(r) = report {
        let line = format!(
            "ring check: commutative {}, associative {}, identity {}, graded {} ({} triples)\n",
            r.commutative, r.associative, r.identity, r.graded, r.triples_checked
        );
        if cli.format == Format::Json {
            eprint!("{line}");
        } else {
            out.push_str(&line);
        }
        if !r.ok() {
            for f in r.failures.iter().take(10) {
                eprintln!("{f}");
            }
            print!("{out}");
            return Err(Fail::Domain("the multiplication table fails the ring checks".into()));
        }
    }
    Ok(out)
}

fn run(cli: &Cli) -> Out {
    match &cli.command {
        Command::Poset { args } => cmd_poset(cli, args),
        Command::Syt { args, count, sample } => cmd_syt(cli, args, *count, *sample),
        Command::Rectify { tableau } => cmd_rectify(cli, tableau),
        Command::Infusion { t, u } => cmd_infusion(cli, t, u),
        Command::Dualclass { tableau, other } => cmd_dualclass(cli, tableau, other.as_deref()),
        Command::HaimanTable { args } => cmd_haiman(cli, args),
        Command::Rsk { tableau } => cmd_rsk(cli, tableau),
        Command::Growth { r, t, ascii } => cmd_growth(cli, r, t, *ascii),
        Command::Evac { tableau } => cmd_evac(cli, tableau),
        Command::Coeff { args, rule, minuscule } => cmd_coeff(cli, args, rule, *minuscule),
        Command::Table { args, rule, minuscule, verify, cap } => cmd_table(cli, args, rule, *minuscule, *verify, *cap),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Fail::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
