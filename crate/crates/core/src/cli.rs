//! Command-line front end. Exit codes: 0 success, 1 verification mismatch or
//! failed computation, 2 usage error.

use crate::catalog::{self, divisor_to_shift_matrix, get_monad_template, FramedExampleId, GeometryId, MonadId, ShiftMatrix};
use crate::characters::{self, generator_weights, pyramid_from_shift, Parity};
use crate::framing::{framed_relations, numeric_solution_builder, FramedQuiverWithPotential, FramingStructure};
use crate::monad::{assemble, certify_d_squared, evaluate, generic_point};
use crate::ncalg::{relations_from_potential, Potential, Quiver, Rep};
use crate::partitions::{self, PitConstraint};
use crate::qseries::{self, compare, Comparison, QSeries, Ring, SeriesJson};
use crate::{q_int, Q};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "cyquiv", version, about = "Quivers with potential, monads, fixed-point counts and vacuum characters")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Browse the built-in geometries, framed examples and monads.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Print a quiver as text, JSON or DOT.
    Quiver {
        id: String,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Relations ∂_a W of a geometry or framed example.
    Relations {
        id: String,
        #[arg(long)]
        framing: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Framed relation sets and the framing compatibility check.
    Framing {
        #[command(subcommand)]
        action: FramingCmd,
    },
    /// Verify that a monad squares to zero, symbolically and at points.
    Monad {
        #[command(subcommand)]
        action: MonadCmd,
    },
    /// Enumerate a combinatorial family into a generating series.
    Count {
        family: Family,
        #[arg(long)]
        order: i64,
        /// Pit corner `M,N`.
        #[arg(long)]
        pit: Option<String>,
        #[arg(long)]
        colors: Option<u32>,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Truncated series algebra on series JSON files.
    Series {
        #[command(subcommand)]
        op: SeriesCmd,
    },
    /// Vacuum character from a shift matrix or a divisor.
    Character {
        /// Subdiagonal `s21,s32,..`, optionally prefixed by vanishing upper shifts `U;`.
        #[arg(long, conflicts_with = "divisor")]
        shift: Option<String>,
        /// `mu=3,1 nu=2`.
        #[arg(long, num_args = 1..=2)]
        divisor: Vec<String>,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        t: u32,
        #[arg(long, default_value_t = 10)]
        order: i64,
        /// Also compare the character at `--t-max` with the large-t limit.
        #[arg(long)]
        limit: bool,
        #[arg(long, default_value_t = 25)]
        t_max: u32,
        #[arg(long)]
        json: bool,
    },
    /// Enumeration against closed-form product.
    Compare {
        target: Target,
        #[arg(long)]
        order: i64,
        /// Number of vertices for `orbifold-ncdt`.
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        rank: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List,
    Show {
        id: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum FramingCmd {
    Relations {
        id: String,
        #[arg(long)]
        framing: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    Check {
        id: String,
    },
}

#[derive(Subcommand, Debug)]
enum MonadCmd {
    /// Certify d² ≡ 0 and optionally evaluate fibres on a numeric solution.
    Verify {
        id: String,
        /// JSON list of points `[[x, y], ...]` for the diagonal solution builder.
        #[arg(long)]
        numeric: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum SeriesCmd {
    Macmahon {
        #[arg(long)]
        order: i64,
        #[arg(long)]
        json: bool,
    },
    /// `∏ (1 − q^k)^power`.
    Eta {
        #[arg(long)]
        order: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        power: i64,
        #[arg(long)]
        json: bool,
    },
    Show {
        a: PathBuf,
        #[arg(long)]
        json: bool,
    },
    Add {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        json: bool,
    },
    Mul {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        json: bool,
    },
    Inverse {
        a: PathBuf,
        #[arg(long)]
        json: bool,
    },
    Pow {
        a: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        power: i64,
        #[arg(long)]
        json: bool,
    },
    /// Exit 1 unless the two series agree through `--order`.
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        order: Option<i64>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Partitions,
    Tuples,
    Nested,
    Plane,
    Pyramid,
    Blowup,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Target {
    C3Dt,
    ConifoldNcdt,
    Y20Ncdt,
    OrbifoldNcdt,
    VwRank1,
    Nested,
    Blowup,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

type Out<'a> = &'a mut dyn Write;
type CmdResult = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

/// Parses and dispatches; everything is written to `out`/`err` so tests can capture it.
pub fn run(args: &[String], out: Out, err: Out) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(()) => 0,
        Err(Failure::Mismatch(m)) => {
            let _ = writeln!(err, "{m}");
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
    }
}

pub fn main_entry() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    run(&args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn emit(out: Out, s: &str) -> CmdResult {
    out.write_all(s.as_bytes()).map_err(|e| Failure::Mismatch(format!("write failed: {e}")))
}

fn emit_json(out: Out, v: &Value) -> CmdResult {
    emit(out, &(serde_json::to_string_pretty(v).unwrap() + "\n"))
}

fn dispatch(cmd: Cmd, out: Out) -> CmdResult {
    match cmd {
        Cmd::Catalog { action: CatalogCmd::List } => {
            for l in catalog::list() {
                emit(out, &format!("{l}\n"))?;
            }
            Ok(())
        }
        Cmd::Catalog { action: CatalogCmd::Show { id, json } } => catalog_show(&id, json, out),
        Cmd::Quiver { id, dot, json } => {
            let item = resolve(&id)?;
            if dot {
                emit(out, &item.quiver.to_dot(&item.name))
            } else if json {
                emit_json(out, &json!({"quiver": item.quiver.to_json(), "potential": item.potential.to_json(&item.quiver)}))
            } else {
                emit(out, &quiver_text(&item))
            }
        }
        Cmd::Relations { id, framing, json } | Cmd::Framing { action: FramingCmd::Relations { id, framing, json } } => relations(&id, framing, json, out),
        Cmd::Framing { action: FramingCmd::Check { id } } => {
            let f: FramedExampleId = id.parse().map_err(usage)?;
            let t = catalog::get_framed_example(f).map_err(usage)?;
            match t.check_compatible() {
                Ok(()) => emit(out, &format!("{f}: framing compatible\n")),
                Err(e) => Err(Failure::Mismatch(format!("{f}: {e}"))),
            }
        }
        Cmd::Monad { action: MonadCmd::Verify { id, numeric, json } } => monad_verify(&id, numeric, json, out),
        Cmd::Count { family, order, pit, colors, rank, json } => {
            let s = count(family, order, pit.as_deref(), colors, rank)?;
            if json {
                let j = s.to_json();
                emit_json(out, &json!({"variables": j.vars, "order": j.order, "grading": j.grading, "coefficients": j.coeffs}))
            } else {
                emit(out, &s.table())
            }
        }
        Cmd::Series { op } => series(op, out),
        Cmd::Character { shift, divisor, m, n, t, order, limit, t_max, json } => character(shift, divisor, m, n, t, order, limit.then_some(t_max), json, out),
        Cmd::Compare { target, order, m, rank, json } => compare_cmd(target, order, m, rank, json, out),
    }
}

struct Item {
    name: String,
    quiver: Quiver,
    potential: Potential,
    framed: Option<FramedQuiverWithPotential>,
}

fn resolve(id: &str) -> Result<Item, Failure> {
    if let Ok(g) = id.parse::<GeometryId>() {
        let (quiver, potential) = catalog::get_quiver_with_potential(g).map_err(usage)?;
        return Ok(Item { name: g.normalize().map_err(usage)?.to_string(), quiver, potential, framed: None });
    }
    let f: FramedExampleId = id.parse().map_err(usage)?;
    let t = catalog::get_framed_example(f).map_err(usage)?;
    Ok(Item { name: f.to_string(), quiver: t.quiver.clone(), potential: t.potential.clone(), framed: Some(t) })
}

fn quiver_text(item: &Item) -> String {
    let q = &item.quiver;
    let mut s = format!("{}\nvertices:", item.name);
    for v in q.vertices() {
        s.push_str(&format!(" {}{}", v.name, if v.framing { "*" } else { "" }));
    }
    s.push('\n');
    for a in q.arrows() {
        s.push_str(&format!("  {}: {} -> {}{}\n", a.name, q.vertices()[a.src].name, q.vertices()[a.tgt].name, if a.marked { " (marked)" } else { "" }));
    }
    s.push_str(&format!("W = {}\n", item.potential.render(q)));
    s
}

fn catalog_show(id: &str, json: bool, out: Out) -> CmdResult {
    if let Ok(m) = id.parse::<MonadId>() {
        if id.parse::<GeometryId>().is_err() && id.parse::<FramedExampleId>().is_err() || id.starts_with("monad:") {
            return show_monad(m, json, out);
        }
    }
    if let Some(rest) = id.strip_prefix("monad:") {
        return show_monad(rest.parse().map_err(usage)?, json, out);
    }
    let item = resolve(id)?;
    let q = &item.quiver;
    let rels = relations_from_potential(q, &item.potential);
    let mut v = json!({
        "id": item.name,
        "quiver": q.to_json(),
        "potential": item.potential.to_json(q),
        "relations": rels.render(q),
    });
    if let Ok(g) = id.parse::<GeometryId>() {
        let e = catalog::get_entry(g).map_err(usage)?;
        v["kind"] = json!("geometry");
        v["simples"] = json!(e.simples);
        v["curves"] = json!(e.curves);
        v["resolutions"] = e.resolutions.iter().map(|r| json!({"simple": r.simple, "vertex": r.vertex, "maps": r.maps})).collect();
        v["generators"] = e.generators.iter().map(|g| json!({"name": g.name, "arrow": g.arrow, "from": g.from, "to": g.to, "sign": g.sign, "maps": g.maps})).collect();
    } else if let Some(f) = &item.framed {
        v["kind"] = json!("framed");
        v["framing_ranks"] = json!(f.default_ranks);
        v["nilpotent"] = json!(f.nilpotent);
    }
    if json {
        return emit_json(out, &v);
    }
    let mut s = quiver_text(&item);
    for r in rels.render(q) {
        s.push_str(&format!("  {r}\n"));
    }
    if let Some(c) = v.get("curves") {
        s.push_str(&format!("curves: {c}\n"));
    }
    emit(out, &s)
}

fn show_monad(m: MonadId, json: bool, out: Out) -> CmdResult {
    let t = get_monad_template(m).map_err(usage)?;
    let modules: Vec<Vec<String>> = t.modules.iter().map(|m| m.iter().map(|s| s.to_string()).collect()).collect();
    if json {
        return emit_json(out, &json!({"id": t.id, "kind": "monad", "modules": modules, "maps": t.maps, "fibre_weights": t.fibre_weights}));
    }
    let mut s = format!("monad {}\n", t.id);
    for (k, m) in modules.iter().enumerate() {
        s.push_str(&format!("  C{k} = {}\n", m.join(" + ")));
    }
    for (k, d) in t.maps.iter().enumerate() {
        s.push_str(&format!("  d{}:\n", k + 1));
        for r in d {
            s.push_str(&format!("    [{}]\n", r.join(", ")));
        }
    }
    emit(out, &s)
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn relations(id: &str, framing: Option<PathBuf>, json: bool, out: Out) -> CmdResult {
    let item = resolve(id)?;
    let frs = match (&item.framed, framing) {
        (Some(f), path) => {
            let fs = match path {
                Some(p) => FramingStructure::from_json(&read(&p)?).map_err(usage)?.with_default_ranks(&f.default_ranks),
                None => f.default_framing(),
            };
            framed_relations(&f.specialize(&fs).map_err(usage)?).map_err(usage)?
        }
        (None, Some(_)) => return Err(usage(format!("{id} has no framing"))),
        (None, None) => framed_relations(&FramedQuiverWithPotential::new(&item.name, item.quiver.clone(), item.potential.clone(), &[], &[])).unwrap(),
    };
    let q = &frs.quiver;
    let eff = frs.effective();
    if json {
        let rel = |r: &crate::ncalg::RelationSet| -> Vec<Value> { r.relations.iter().map(|x| json!({"arrow": q.arrows()[x.arrow].name, "poly": x.poly.render(q)})).collect() };
        let bindings: BTreeMap<&String, Vec<Vec<String>>> = frs.bindings.iter().map(|(k, m)| (k, (0..m.rows()).map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect()).collect())).collect();
        return emit_json(out, &json!({"id": item.name, "relations": rel(&frs.relations), "bindings": bindings, "effective": rel(&eff)}));
    }
    let mut s = String::new();
    for r in frs.render() {
        s.push_str(&format!("{r}\n"));
    }
    if !frs.bindings.is_empty() {
        s.push_str("with bound marked arrows:\n");
        for r in eff.render(q) {
            s.push_str(&format!("  {r}\n"));
        }
    }
    emit(out, &s)
}

fn parse_q(v: &Value) -> Result<Q, Failure> {
    match v {
        Value::Number(n) => n.as_i64().map(q_int).ok_or_else(|| usage(format!("non-integer number {n}; quote rationals"))),
        Value::String(s) => s.parse::<Q>().map_err(|_| usage(format!("bad rational `{s}`"))),
        _ => Err(usage("point coordinates must be numbers or strings")),
    }
}

fn monad_verify(id: &str, numeric: Option<PathBuf>, json: bool, out: Out) -> CmdResult {
    let mid: MonadId = id.parse().map_err(usage)?;
    let t = get_monad_template(mid).map_err(usage)?;
    let c = assemble(&t, &BTreeMap::new()).map_err(|e| Failure::Mismatch(format!("{mid}: {e}")))?;
    let fq = FramedQuiverWithPotential::new(&t.id, t.quiver.clone(), t.potential.clone(), &[], &[]);
    let symbolic = framed_relations(&fq).unwrap();
    let mut runs = vec![("symbolic", symbolic.clone())];
    if t.quiver.arrows().iter().any(|a| a.marked) {
        let mut bound = symbolic;
        for a in t.quiver.arrows().iter().filter(|a| a.marked) {
            bound.bindings.insert(a.name.clone(), crate::linalg::QMatrix::zeros(1, 1));
        }
        runs.push(("marked=0", bound));
    }
    let mut text = String::new();
    let mut jruns = Vec::new();
    for (label, rels) in &runs {
        let r = certify_d_squared(&c, rels).map_err(|e| Failure::Mismatch(format!("{mid} [{label}]: {e}")))?;
        text.push_str(&format!("{mid} [{label}]: d² ≡ 0 modulo relations, {} coefficients certified over {} entries\n", r.records.len(), r.entries));
        for e in &r.records {
            let mono = if e.mono.is_empty() { "1".into() } else { e.mono.clone() };
            text.push_str(&format!("  d{}·d{} [{},{}] {mono}: {}\n", e.map + 1, e.map, e.row, e.col, e.certificate));
        }
        jruns.push(json!({
            "binding": label,
            "entries": r.entries,
            "certificates": r.records.iter().map(|e| json!({"composite": format!("d{}d{}", e.map + 1, e.map), "row": e.row, "col": e.col, "mono": e.mono, "certificate": e.certificate})).collect::<Vec<_>>(),
        }));
    }
    let mut jnum = Value::Null;
    if let Some(path) = numeric {
        let v: Value = serde_json::from_str(&read(&path)?).map_err(usage)?;
        let arr = v.get("points").unwrap_or(&v).as_array().ok_or_else(|| usage("points file must be a list of [x, y]"))?;
        let mut pts = Vec::new();
        for p in arr {
            match p.as_array().map(|a| a.as_slice()) {
                Some([x, y]) => pts.push((parse_q(x)?, parse_q(y)?)),
                _ => return Err(usage("each point must be [x, y]")),
            }
        }
        let (fid, rep, rels) = match mid {
            MonadId::ADHM3d | MonadId::PervC3 => {
                let fid = if mid == MonadId::ADHM3d { FramedExampleId::ADHM3d } else { FramedExampleId::PervSystem(GeometryId::C3, 1) };
                let s = numeric_solution_builder(fid, &pts).map_err(usage)?;
                let f = catalog::get_framed_example(fid).unwrap();
                (fid.to_string(), s.rep, framed_relations(&f.specialize(&f.default_framing()).unwrap()).unwrap())
            }
            MonadId::C3 => {
                let fid = FramedExampleId::PervSystem(GeometryId::C3, 1);
                let s = numeric_solution_builder(fid, &pts).map_err(usage)?;
                let fq = catalog::get_framed_example(fid).unwrap().quiver;
                let mats = ["B1", "B2", "B3"].iter().map(|a| (a.to_string(), s.rep.matrix(fq.arrow(a).unwrap()).clone())).collect();
                let rep = Rep::new(&t.quiver, vec![pts.len()], &mats).unwrap();
                ("c3".to_string(), rep, runs[0].1.clone())
            }
            other => return Err(usage(format!("no numeric solution builder for monad {other}"))),
        };
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut eval_pts: Vec<(String, [Q; 3])> = pts.iter().map(|(x, y)| ("support".to_string(), [x.clone(), y.clone(), q_int(0)])).collect();
        for _ in 0..3 {
            eval_pts.push(("random".into(), [0, 1, 2].map(|_| Q::new(q_int(rng.gen_range(-50..50)).numer().clone(), num_bigint::BigInt::from(rng.gen_range(1..7))))));
        }
        let g = generic_point(0x5eed);
        text.push_str(&format!("numeric check on {fid} with {} points\n", pts.len()));
        let mut rows = Vec::new();
        let mut bad = None;
        for (kind, p) in &eval_pts {
            let r = evaluate(&c, &rels, &rep, p).map_err(|e| Failure::Mismatch(e.to_string()))?;
            if !r.d_squared_zero {
                bad = Some(format!("d² ≠ 0 numerically at ({}, {}, {})", p[0], p[1], p[2]));
            }
            text.push_str(&format!("  {kind:<8} ({}, {}, {})  fibre homology {:?}{}\n", p[0], p[1], p[2], r.fibre_homology, if r.fibre_exact { "  exact" } else { "" }));
            rows.push(json!({"kind": kind, "point": p.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "term_dims": r.term_dims, "fibre_homology": r.fibre_homology, "generic_homology": r.generic_homology, "exact": r.fibre_exact}));
        }
        let _ = g;
        if let Some(b) = bad {
            return Err(Failure::Mismatch(b));
        }
        jnum = json!(rows);
    }
    if json {
        emit_json(out, &json!({"id": mid.to_string(), "runs": jruns, "numeric": jnum}))
    } else {
        emit(out, &text)
    }
}

fn parse_pit(s: &str) -> Result<PitConstraint, Failure> {
    let (a, b) = s.split_once(',').ok_or_else(|| usage("--pit expects M,N"))?;
    let (m, n) = (a.trim().parse().map_err(usage)?, b.trim().parse().map_err(usage)?);
    PitConstraint::new(m, n).map_err(usage)
}

fn nonneg(order: i64) -> Result<u32, Failure> {
    u32::try_from(order).map_err(|_| usage("--order must be non-negative"))
}

fn count(family: Family, order: i64, pit: Option<&str>, colors: Option<u32>, rank: Option<u32>) -> Result<QSeries, Failure> {
    let n = nonneg(order)?;
    Ok(match family {
        Family::Partitions => partitions::partition_series(n),
        Family::Tuples => partitions::tuple_series(rank.unwrap_or(1), n),
        Family::Nested => partitions::nested_series(rank.unwrap_or(1), n),
        Family::Plane => {
            let pit = pit.map(parse_pit).transpose()?;
            if colors == Some(0) {
                return Err(usage("--colors must be positive"));
            }
            partitions::plane_partition_series(order, colors, pit).map_err(usage)?
        }
        Family::Pyramid => partitions::pyramid_series(order).map_err(usage)?,
        Family::Blowup => partitions::blowup_series(n, None),
    })
}

fn load_series(p: &PathBuf) -> Result<QSeries, Failure> {
    let j: SeriesJson = serde_json::from_str(&read(p)?).map_err(usage)?;
    QSeries::from_json(&j).map_err(usage)
}

fn print_series(out: Out, s: &QSeries, json: bool) -> CmdResult {
    if json {
        emit(out, &(serde_json::to_string_pretty(&s.to_json()).unwrap() + "\n"))
    } else {
        emit(out, &s.table())
    }
}

fn series(op: SeriesCmd, out: Out) -> CmdResult {
    let fail = |e: qseries::SeriesError| Failure::Mismatch(e.to_string());
    match op {
        SeriesCmd::Macmahon { order, json } => print_series(out, &qseries::macmahon(&Ring::q(), &[0], &[1], order).map_err(fail)?, json),
        SeriesCmd::Eta { order, power, json } => print_series(out, &qseries::eta_like(&Ring::q(), &[1], 1, -1, power, order).map_err(fail)?, json),
        SeriesCmd::Show { a, json } => print_series(out, &load_series(&a)?, json),
        SeriesCmd::Add { a, b, json } => print_series(out, &load_series(&a)?.add(&load_series(&b)?).map_err(usage)?, json),
        SeriesCmd::Mul { a, b, json } => print_series(out, &load_series(&a)?.mul(&load_series(&b)?).map_err(usage)?, json),
        SeriesCmd::Inverse { a, json } => print_series(out, &load_series(&a)?.inverse().map_err(fail)?, json),
        SeriesCmd::Pow { a, power, json } => print_series(out, &load_series(&a)?.pow(power).map_err(fail)?, json),
        SeriesCmd::Compare { a, b, order } => {
            let (x, y) = (load_series(&a)?, load_series(&b)?);
            let order = order.unwrap_or(x.order().min(y.order()));
            report(out, "series", compare(&x, &y, order).map_err(usage)?, order)
        }
    }
}

fn report(out: Out, name: &str, c: Comparison, order: i64) -> CmdResult {
    match c {
        Comparison::Equal => emit(out, &format!("{name}: equal through total degree {order}\n")),
        Comparison::Mismatch { exp, left, right } => Err(Failure::Mismatch(format!("{name}: first mismatch at exponent {exp:?}: enumeration {left}, formula {right}"))),
    }
}

fn parse_list(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',').filter(|x| !x.trim().is_empty()).map(|x| x.trim().parse::<i64>().map_err(|_| usage(format!("bad integer `{x}`")))).collect()
}

#[allow(clippy::too_many_arguments)]
fn character(shift: Option<String>, divisor: Vec<String>, m: usize, n: usize, t: u32, order: i64, t_max: Option<u32>, json: bool, out: Out) -> CmdResult {
    let s: ShiftMatrix = if !divisor.is_empty() {
        let (mut mu, mut nu) = (None, Some(vec![]));
        for d in &divisor {
            match d.split_once('=') {
                Some(("mu", v)) => mu = Some(parse_list(v)?),
                Some(("nu", v)) => nu = Some(parse_list(v)?),
                _ => return Err(usage(format!("bad divisor part `{d}`; expected mu=.. or nu=.."))),
            }
        }
        let mu = mu.ok_or_else(|| usage("--divisor needs mu=.."))?;
        divisor_to_shift_matrix(m, n, &mu, &nu.unwrap()).map_err(usage)?
    } else {
        ShiftMatrix::parse(m, n, shift.as_deref().unwrap_or("")).map_err(usage)?
    };
    if order < 0 {
        return Err(usage("--order must be non-negative"));
    }
    let p = pyramid_from_shift(&s, t).map_err(usage)?;
    let ws = generator_weights(&p).map_err(|e| Failure::Mismatch(e.to_string()))?;
    let ch = characters::character(&ws, order);
    let coeffs: Vec<String> = ch.univariate().iter().map(|c| c.to_string()).collect();
    let warnings = characters::warnings(&s);
    let lim = match t_max {
        Some(tm) => Some(characters::limit_check(&s, order, tm).map_err(usage)?),
        None => None,
    };
    if json {
        let par = |p: Parity| if p == Parity::Even { "even" } else { "odd" };
        let v = json!({
            "m": m, "n": n, "t": t, "order": order,
            "shift": s.sub,
            "pyramid": p.rows.iter().map(|r| json!({"parity": par(r.parity), "left": r.left, "length": r.len})).collect::<Vec<_>>(),
            "weights": ws.0.iter().map(|(&(w, pa), &k)| json!({"weight": w, "parity": par(pa), "multiplicity": k})).collect::<Vec<_>>(),
            "coefficients": coeffs,
            "limit": lim.as_ref().map(|l| json!({"t_max": l.t_max, "matches": l.first_mismatch.is_none()})),
            "warnings": warnings,
        });
        emit_json(out, &v)?;
    } else {
        let mut txt = String::new();
        for w in &warnings {
            txt.push_str(&format!("warning: {w}\n"));
        }
        txt.push_str(&format!("gl({m}|{n}) shift {:?} t={t}\npyramid:\n{p}", s.sub));
        txt.push_str(&format!("generators: {ws}\n"));
        txt.push_str(&format!("coefficients: {}\n", coeffs.join(", ")));
        if let Some(l) = &lim {
            txt.push_str(&format!("limit at t={}: {}\n", l.t_max, if l.first_mismatch.is_none() { "matches" } else { "differs" }));
        }
        emit(out, &txt)?;
    }
    match lim.and_then(|l| l.first_mismatch) {
        Some((k, a, b)) => Err(Failure::Mismatch(format!("limit mismatch at q^{k}: {a} vs {b}"))),
        None => Ok(()),
    }
}

/// Both sides of a `compare` target: enumeration first, formula second.
pub fn compare_sides(target: &str, order: i64, m: usize, rank: u32) -> Result<(QSeries, QSeries), String> {
    let n = u32::try_from(order).map_err(|_| "order must be non-negative".to_string())?;
    let e = |x: partitions::PartitionError| x.to_string();
    Ok(match target {
        "c3-dt" => (partitions::plane_partition_series(order, None, None).map_err(e)?, qseries::macmahon(&Ring::q(), &[0], &[1], order).unwrap()),
        "conifold-ncdt" => (partitions::pyramid_series(order).map_err(e)?.twist(|x| x[1] % 2 != 0), qseries::conifold_ncdt_product(order)),
        "y20-ncdt" | "orbifold-ncdt" => {
            let m = if target == "y20-ncdt" { 2 } else { m };
            if m == 0 {
                return Err("--m must be positive".into());
            }
            let en = partitions::plane_partition_series(order, Some(m as u32), None).map_err(e)?.twist(|x| x[0] % 2 != 0);
            (en, qseries::orbifold_ncdt_product(m, order))
        }
        "vw-rank1" => (partitions::partition_series(n), qseries::eta_product(order).inverse().unwrap()),
        "nested" => {
            let s = ShiftMatrix::zero(1, 0);
            (partitions::nested_series(rank, n), characters::character_of_shift(&s, rank.max(1), order).map_err(|x| x.to_string())?)
        }
        "blowup" => {
            let ring = Ring::half_q();
            let ho = 2 * order;
            let mut theta = QSeries::zero(&ring, ho);
            let mut k: i64 = 0;
            while k * k <= ho {
                theta.add_term(vec![k * k], (if k == 0 { 1 } else { 2 }).into()).unwrap();
                k += 1;
            }
            let eta2 = qseries::eta_like(&ring, &[2], 1, -1, -2, ho).unwrap();
            (partitions::blowup_series(n, None), theta.mul(&eta2).unwrap())
        }
        other => return Err(format!("unknown target {other}")),
    })
}

fn compare_cmd(target: Target, order: i64, m: usize, rank: u32, json: bool, out: Out) -> CmdResult {
    let name = target.to_possible_value().unwrap().get_name().to_string();
    let (a, b) = compare_sides(&name, order, m, rank).map_err(usage)?;
    // blowup lives in half powers of q
    let cmp_order = if matches!(target, Target::Blowup) { 2 * order } else { order };
    let c = compare(&a, &b, cmp_order).map_err(usage)?;
    if json {
        let v = match &c {
            Comparison::Equal => json!({"target": name, "order": order, "equal": true}),
            Comparison::Mismatch { exp, left, right } => json!({"target": name, "order": order, "equal": false, "exp": exp, "enumeration": left.to_string(), "formula": right.to_string()}),
        };
        emit_json(out, &v)?;
        return if matches!(c, Comparison::Equal) { Ok(()) } else { Err(Failure::Mismatch(format!("{name}: mismatch"))) };
    }
    report(out, &name, c, order)
}
