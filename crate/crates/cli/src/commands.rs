use std::path::{Path, PathBuf};

use anticoord::game::{classify, potential, social_welfare, Mode};
use anticoord::generate::random_graph;
use anticoord::io::{emit_dot, parse_coloring, parse_graph, parse_roles, write_coloring, write_graph};
use anticoord::reductions::{
    coordination_proxy_transform, extract_assignment, poa_tight_instance, reduce_3sat_to_strict2,
    reduce_bup_to_directed2, reduce_directed2_to_directedk, reduce_kcolor_to_strict, ArcKind, Copies, MixedGameSpec,
    ReductionOutput,
};
use anticoord::search::{
    balanced_unfriendly_exists, enumerate_stable, price_of_anarchy, proper_colorable, sat_brute_force, search_stable,
    space_size,
};
use anticoord::{run_dynamics, Cnf, Color, Coloring, Graph, Init, Ratio};

use crate::report::{exit, CmdResult, Failure, Report};
use crate::{Family, InitKind, Kind};

/// Outcome of a command: the report text and the exit status.
pub struct Done {
    pub report: String,
    pub code: u8,
}

impl Done {
    fn ok(r: Report) -> Self {
        Done {
            report: r.finish("ok"),
            code: exit::OK,
        }
    }
}

fn colors_str(c: &Coloring) -> String {
    c.as_slice().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn fraction(r: Ratio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn load_graph(r: &mut Report, path: &Path) -> CmdResult<Graph> {
    Ok(parse_graph(&r.read_input(path)?)?)
}

fn write_dot(r: &mut Report, path: Option<&Path>, g: &Graph, c: Option<&Coloring>) -> CmdResult<()> {
    if let Some(path) = path {
        r.write_output(path, &emit_dot(g, c, None)?)?;
    }
    Ok(())
}

fn check_k(k: Color) -> CmdResult<Color> {
    if k < 2 {
        return Err(anticoord::Error::TooFewColors { k, min: 2 }.into());
    }
    Ok(k)
}

#[allow(clippy::too_many_arguments)]
pub fn solve(
    r: &mut Report,
    graph: &Path,
    k: Color,
    init: InitKind,
    seed: u64,
    max_steps: Option<usize>,
    out: Option<&Path>,
    dot: Option<&Path>,
) -> CmdResult<Done> {
    let g = load_graph(r, graph)?;
    let k = check_k(k)?;
    let init = match init {
        InitKind::All1 => Init::AllOne,
        InitKind::Random => Init::Random(seed),
    };
    let t = run_dynamics(&g, k, init, max_steps)?;
    let c = &t.final_coloring;
    r.field("initial", colors_str(&t.initial));
    r.field("steps", t.steps.len());
    r.field("converged", yes(t.converged));
    r.field("coloring", colors_str(c));
    let report = classify(&g, c)?;
    let welfare = social_welfare(&g, c)?;
    r.field("stability", report.overall);
    r.field("welfare", welfare);
    r.result("steps", t.steps.len());
    r.result("converged", yes(t.converged));
    r.result("stability", report.overall);
    r.result("welfare", welfare);
    if let Some(prefix) = out {
        r.write_output(&with_ext(prefix, "coloring"), &write_coloring(c))?;
        r.write_output(&with_ext(prefix, "trace"), &t.to_log())?;
    }
    write_dot(r, dot, &g, Some(c))?;
    if t.converged {
        Ok(Done::ok(std::mem::take(r)))
    } else {
        Ok(Done {
            report: std::mem::take(r).finish("no-convergence"),
            code: exit::NO_CONVERGENCE,
        })
    }
}

pub fn check(r: &mut Report, graph: &Path, coloring: &Path, dot: Option<&Path>) -> CmdResult<Done> {
    let g = load_graph(r, graph)?;
    let c = parse_coloring(&r.read_input(coloring)?)?;
    let report = classify(&g, &c)?;
    let welfare = social_welfare(&g, &c)?;
    let unhappy = report.unhappy();
    let unhappy = if unhappy.is_empty() {
        "-".to_string()
    } else {
        unhappy.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    };
    r.field("stability", report.overall);
    r.field("unhappy", &unhappy);
    r.field("welfare", welfare);
    r.result("stability", report.overall);
    r.result("unhappy", &unhappy);
    r.result("welfare", welfare);
    if !g.is_directed() {
        let phi = potential(&g, &c)?;
        r.field("potential", phi);
        r.result("potential", phi);
    }
    write_dot(r, dot, &g, Some(&c))?;
    Ok(Done::ok(std::mem::take(r)))
}

pub fn enumerate(r: &mut Report, graph: &Path, k: Color, mode: Mode, budget: u128, list: bool) -> CmdResult<Done> {
    let g = load_graph(r, graph)?;
    let q = enumerate_stable(&g, check_k(k)?, mode, budget)?;
    r.field("mode", mode);
    r.field("colorings", space_size(g.n(), k));
    r.field("equilibria", q.len());
    if list {
        for c in &q {
            r.line(format!("eq {}", colors_str(c)));
        }
    }
    r.result("mode", mode);
    r.result("equilibria", q.len());
    if q.is_empty() {
        return Ok(Done {
            report: std::mem::take(r).finish("no-equilibrium"),
            code: exit::NO_EQUILIBRIUM,
        });
    }
    Ok(Done::ok(std::mem::take(r)))
}

pub fn poa(
    r: &mut Report,
    graph: &Path,
    k: Color,
    budget: u128,
    out: Option<&Path>,
    dot: Option<&Path>,
) -> CmdResult<Done> {
    let g = load_graph(r, graph)?;
    let p = price_of_anarchy(&g, check_k(k)?, budget)?;
    r.field("max-welfare", p.max_welfare);
    r.field("min-stable-welfare", p.min_stable_welfare);
    r.field("equilibria", p.equilibria);
    r.field("best", colors_str(&p.best));
    r.field("worst", colors_str(&p.worst));
    r.line(format!("PoA {}", fraction(p.ratio)));
    r.result("poa", fraction(p.ratio));
    r.result("max_welfare", p.max_welfare);
    r.result("min_stable_welfare", p.min_stable_welfare);
    if let Some(prefix) = out {
        r.write_output(&with_ext(prefix, "best.coloring"), &write_coloring(&p.best))?;
        r.write_output(&with_ext(prefix, "worst.coloring"), &write_coloring(&p.worst))?;
    }
    write_dot(r, dot, &g, Some(&p.worst))?;
    Ok(Done::ok(std::mem::take(r)))
}

pub fn gen(r: &mut Report, family: &Family, seed: u64, out: Option<&Path>) -> CmdResult<Done> {
    let g = match *family {
        Family::PoaTight { k } => poa_tight_instance(k)?.0,
        Family::Complete { q } => Graph::complete(q, false)?,
        Family::Cycle { n } => Graph::cycle(n)?,
        Family::Random { n, p } => random_graph(n, p, seed)?,
    };
    let text = write_graph(&g);
    r.field("vertices", g.n());
    r.field("edges", g.m());
    r.result("n", g.n());
    r.result("m", g.m());
    match out {
        Some(path) => r.write_output(path, &text)?,
        None => r.line(text.trim_end()),
    }
    Ok(Done::ok(std::mem::take(r)))
}

/// Parsed reduction input.
enum Instance {
    Graph(Graph),
    Formula(Cnf),
    Mixed(MixedGameSpec),
}

fn load_instance(r: &mut Report, kind: Kind, path: &Path, k: Color) -> CmdResult<Instance> {
    let text = r.read_input(path)?;
    Ok(match kind {
        Kind::SatStrict2 => Instance::Formula(Cnf::parse_dimacs(&text)?),
        Kind::Proxy => Instance::Mixed(MixedGameSpec::parse(&text, k)?),
        _ => Instance::Graph(parse_graph(&text)?),
    })
}

fn build(kind: Kind, inst: &Instance, k: Color, copies: Copies) -> CmdResult<ReductionOutput> {
    Ok(match (kind, inst) {
        (Kind::KcolorStrict, Instance::Graph(g)) => reduce_kcolor_to_strict(g, k)?,
        (Kind::SatStrict2, Instance::Formula(f)) => reduce_3sat_to_strict2(f)?,
        (Kind::BupDirected2, Instance::Graph(g)) => reduce_bup_to_directed2(g)?,
        (Kind::Directed2Directedk, Instance::Graph(g)) => reduce_directed2_to_directedk(g, k, copies.resolve(g.n()))?,
        (Kind::Proxy, Instance::Mixed(spec)) => coordination_proxy_transform(spec)?,
        _ => unreachable!("instance parsed for its kind"),
    })
}

fn describe(r: &mut Report, out: &ReductionOutput) {
    let p = &out.params;
    r.field("construction", p.construction);
    r.field("k", p.k);
    if let Some(c) = p.copies {
        r.field("copies", c);
    }
    if let Some(v) = p.gadget_version {
        r.field("gadget-version", v);
    }
    r.field("vertices", out.graph.n());
    r.field("arcs", out.graph.m());
    r.result("construction", p.construction);
    r.result("n", out.graph.n());
    r.result("m", out.graph.m());
}

pub fn reduce(
    r: &mut Report,
    kind: Kind,
    instance: &Path,
    k: Color,
    copies: Copies,
    out: Option<&Path>,
    dot: Option<&Path>,
) -> CmdResult<Done> {
    let inst = load_instance(r, kind, instance, k)?;
    let red = build(kind, &inst, k, copies)?;
    describe(r, &red);
    match out {
        Some(prefix) => {
            r.write_output(&with_ext(prefix, "graph"), &red.graph_file())?;
            r.write_output(&with_ext(prefix, "roles"), &red.roles_file())?;
        }
        None => {
            r.line(red.graph_file().trim_end());
            r.line(red.roles_file().trim_end());
        }
    }
    if let Some(path) = dot {
        r.write_output(path, &emit_dot(&red.graph, None, Some(&red.roles))?)?;
    }
    Ok(Done::ok(std::mem::take(r)))
}

/// Equilibrium found by pruned search, confirmed by full enumeration when
/// the space fits the budget.
fn target_search(r: &mut Report, g: &Graph, k: Color, mode: Mode, budget: u128) -> CmdResult<Option<Coloring>> {
    let found = search_stable(g, k, mode);
    if space_size(g.n(), k) <= budget {
        let all = enumerate_stable(g, k, mode, budget)?;
        if all.is_empty() == found.is_some() {
            return Err(Failure {
                code: exit::MISMATCH,
                msg: "pruned search disagrees with enumeration".into(),
            });
        }
        r.field("target-equilibria", all.len());
    }
    Ok(found)
}

fn witness(r: &mut Report, key: &str, c: Option<&Coloring>) -> bool {
    if let Some(c) = c {
        r.field(key, colors_str(c));
    }
    c.is_some()
}

fn bits(xs: &[bool], t: char, f: char) -> String {
    xs.iter().map(|&b| if b { t } else { f }).collect()
}

pub fn verify(r: &mut Report, kind: Kind, instance: &Path, k: Color, copies: Copies, budget: u128) -> CmdResult<Done> {
    let inst = load_instance(r, kind, instance, k)?;
    let red = build(kind, &inst, k, copies)?;
    describe(r, &red);
    let g = &red.graph;
    let (source, target) = match (&inst, kind) {
        (Instance::Graph(src), Kind::KcolorStrict) => {
            let s = witness(r, "source-witness", proper_colorable(src, k)?.as_ref());
            let t = target_search(r, g, k, Mode::Strict, budget)?;
            (s, witness(r, "target-witness", t.as_ref()))
        }
        (Instance::Formula(f), Kind::SatStrict2) => {
            let a = sat_brute_force(f)?;
            if let Some(a) = &a {
                r.field("source-witness", bits(a, 'T', 'F'));
            }
            let t = target_search(r, g, 2, Mode::Strict, budget)?;
            if let Some(c) = &t {
                r.field("extracted", bits(&extract_assignment(&red, c)?, 'T', 'F'));
            }
            (a.is_some(), witness(r, "target-witness", t.as_ref()))
        }
        (Instance::Graph(src), Kind::BupDirected2) => {
            let side = balanced_unfriendly_exists(src)?;
            if let Some(side) = &side {
                r.field("source-witness", bits(side, '1', '0'));
            }
            let t = target_search(r, g, 2, Mode::Stable, budget)?;
            (side.is_some(), witness(r, "target-witness", t.as_ref()))
        }
        (Instance::Graph(src), Kind::Directed2Directedk) => {
            let s = target_search(r, src, 2, Mode::Stable, budget)?;
            let s = witness(r, "source-witness", s.as_ref());
            let t = target_search(r, g, k, Mode::Stable, budget)?;
            (s, witness(r, "target-witness", t.as_ref()))
        }
        (Instance::Mixed(spec), Kind::Proxy) => {
            // source: the coordination constraints; target: every equilibrium honors them
            let all = enumerate_stable(g, spec.k(), Mode::Stable, budget)?;
            r.field("target-equilibria", all.len());
            let broken = all.iter().find(|c| {
                spec.arcs()
                    .iter()
                    .any(|&(u, v, kind)| kind == ArcKind::Coordinate && c.get(u) != c.get(v))
            });
            witness(r, "counterexample", broken);
            (true, broken.is_none())
        }
        _ => unreachable!("instance parsed for its kind"),
    };
    let matched = source == target;
    let verdict = if matched { "MATCH" } else { "MISMATCH" };
    r.line(format!("{verdict} (source {}, target {})", yes(source), yes(target)));
    r.result("verdict", verdict);
    r.result("source", yes(source));
    r.result("target", yes(target));
    if matched {
        Ok(Done::ok(std::mem::take(r)))
    } else {
        Ok(Done {
            report: std::mem::take(r).finish("mismatch"),
            code: exit::MISMATCH,
        })
    }
}

pub fn dot(
    r: &mut Report,
    graph: &Path,
    coloring: Option<&Path>,
    roles: Option<&Path>,
    out: Option<&Path>,
) -> CmdResult<Done> {
    let g = load_graph(r, graph)?;
    let c = match coloring {
        Some(p) => Some(parse_coloring(&r.read_input(p)?)?),
        None => None,
    };
    let roles = match roles {
        Some(p) => Some(parse_roles(&r.read_input(p)?)?),
        None => None,
    };
    let text = emit_dot(&g, c.as_ref(), roles.as_ref())?;
    match out {
        Some(path) => r.write_output(path, &text)?,
        None => r.line(text.trim_end()),
    }
    r.result("n", g.n());
    Ok(Done::ok(std::mem::take(r)))
}
