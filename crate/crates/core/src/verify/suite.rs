//! Line-based suite files.
//!
//! ```text
//! # comment
//! load three_graphs.graphs as trio
//! scenario trio-bounds REMARK_BOUNDS h=@trio
//! scenario p5c5-p3 P5C5_EXAMPLE g=P3
//! scenario kt JOIN_KT g=P2 h=P7 t=2 budget=50000000
//! ```
//!
//! Graph references are names from loaded files, the builtins `P<n>`,
//! `C<n>`, `K<n>`, `N<n>` and `K<r>_<s>`, optionally prefixed with `~`
//! (complement) and combined left to right with `|` (disjoint union) and `+`
//! (join). Family references are comma lists of graph references and
//! `@alias` entries, or `sample:<graph>:<auto|dom|{set}>:<mode>:<seed>:<count>`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::Path;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::families::{sample_members, Permutation, SampleMode};
use crate::format::parse_graphs;
use crate::graph::{Graph, GraphFamily};
use crate::par;
use crate::products::join;
use crate::resolving::{SearchConfig, DEFAULT_BUDGET};
use crate::verify::checks::{self, choose_basis, BasisChoice, FCase, JoinCase};
use crate::verify::report::{Claim, VerificationReport};
use crate::vset::VertexSet;

/// Fully resolved inputs of one scenario.
#[derive(Clone, Debug)]
pub enum Task {
    Transfer { g1: Graph, g2: Graph, h: Graph },
    SdCorona { g: GraphFamily, h: GraphFamily },
    FBounds { g: GraphFamily, h: GraphFamily },
    FCase { g: GraphFamily, h: GraphFamily, case: FCase },
    NtUnion { g: GraphFamily, h: GraphFamily },
    AdimFormula { n: usize },
    Mod5 { n: usize },
    Join { g: GraphFamily, h: GraphFamily, h2: GraphFamily, case: JoinCase },
    JoinDominates { h: GraphFamily, h2: GraphFamily },
    JoinKt { g: GraphFamily, h: GraphFamily, t: usize },
    PermFamily { graph: Graph, basis: VertexSet, members: GraphFamily, f: Option<Permutation> },
    ComplementInv { h: GraphFamily },
    RemarkBounds { h: GraphFamily },
    P5C5 { g: Graph },
}

impl Task {
    pub fn claim(&self) -> Claim {
        match self {
            Task::Transfer { .. } => Claim::Transfer,
            Task::SdCorona { .. } => Claim::SdCorona,
            Task::FBounds { .. } => Claim::FBounds,
            Task::FCase { case, .. } => case.claim(),
            Task::NtUnion { .. } => Claim::NtUnion,
            Task::AdimFormula { .. } => Claim::AdimFormula,
            Task::Mod5 { n } if checks::mod5_expects_dominating(*n) => Claim::Mod5Exists,
            Task::Mod5 { .. } => Claim::Mod5None,
            Task::Join { .. } => Claim::JoinSum,
            Task::JoinDominates { .. } => Claim::JoinDominates,
            Task::JoinKt { .. } => Claim::JoinKt,
            Task::PermFamily { .. } => Claim::PermFamily,
            Task::ComplementInv { .. } => Claim::ComplementInv,
            Task::RemarkBounds { .. } => Claim::RemarkBounds,
            Task::P5C5 { .. } => Claim::P5C5Example,
        }
    }

    /// Structural preconditions, checked before anything is computed.
    pub fn validate(&self) -> Result<()> {
        match self {
            Task::Transfer { g1, g2, h } => checks::validate_transfer(g1, g2, h),
            Task::SdCorona { g, h }
            | Task::FBounds { g, h }
            | Task::FCase { g, h, .. }
            | Task::NtUnion { g, h }
            | Task::JoinKt { g, h, .. } => checks::validate_corona(g, h),
            Task::Join { g, h, h2, .. } => {
                checks::validate_corona(g, h)?;
                checks::validate_corona(g, h2)
            }
            Task::Mod5 { n } => checks::validate_mod5(*n),
            Task::AdimFormula { n } if *n < 4 => Err(Error::invalid("ADIM_FORMULA needs n >= 4")),
            Task::P5C5 { g } => {
                checks::validate_corona(&GraphFamily::singleton(g.clone()), &GraphFamily::singleton(Graph::path(5)?))
            }
            _ => Ok(()),
        }
    }

    pub fn run(&self, cfg: &SearchConfig) -> Result<VerificationReport> {
        match self {
            Task::Transfer { g1, g2, h } => checks::check_transfer(g1, g2, h, cfg),
            Task::SdCorona { g, h } => checks::check_sd_corona(g, h, cfg),
            Task::FBounds { g, h } => checks::check_f_bounds(g, h, cfg),
            Task::FCase { g, h, case } => checks::check_f_case(g, h, *case, cfg),
            Task::NtUnion { g, h } => checks::check_nt_union(g, h, cfg),
            Task::AdimFormula { n } => checks::check_adim_formula(*n, cfg),
            Task::Mod5 { n } => checks::check_mod5(*n, cfg),
            Task::Join { g, h, h2, case } => checks::check_join(g, h, h2, *case, cfg),
            Task::JoinDominates { h, h2 } => checks::check_join_dominates(h, h2, cfg),
            Task::JoinKt { g, h, t } => checks::check_join_kt(g, h, *t, cfg),
            Task::PermFamily { graph, basis, members, f } => {
                checks::check_perm_family(graph, basis, members, f.as_ref(), cfg)
            }
            Task::ComplementInv { h } => checks::check_complement_inv(h, cfg),
            Task::RemarkBounds { h } => checks::check_remark_bounds(h, cfg),
            Task::P5C5 { g } => checks::check_p5c5(g, cfg),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub id: String,
    /// Line of the suite file that declared it.
    pub line: usize,
    pub task: Task,
    /// Replaces the claim's own expected token.
    pub expect: Option<String>,
    pub budget: Option<u64>,
}

impl Scenario {
    pub fn new(id: impl Into<String>, task: Task) -> Self {
        Scenario { id: id.into(), line: 0, task, expect: None, budget: None }
    }

    pub fn claim(&self) -> Claim {
        self.task.claim()
    }

    pub fn run(&self, parallel: bool) -> VerificationReport {
        let start = Instant::now();
        let cfg = SearchConfig { budget: self.budget.unwrap_or(DEFAULT_BUDGET), parallel };
        let mut report = match self.task.run(&cfg) {
            Ok(mut r) => {
                if let Some(e) = &self.expect {
                    r.override_expected(e);
                }
                r
            }
            Err(e) => VerificationReport::from_error(self.claim(), &e),
        };
        report.id = self.id.clone();
        report.elapsed = start.elapsed();
        report
    }
}

#[derive(Clone, Debug, Default)]
pub struct Suite {
    pub scenarios: Vec<Scenario>,
}

/// Runs every scenario; reports come back in declaration order.
pub fn run_suite(suite: &Suite, parallel: bool) -> Vec<VerificationReport> {
    par::map(&suite.scenarios, parallel, |s| s.run(parallel))
}

/// Reads and parses a suite file; `load` paths are relative to its directory.
pub fn load_suite(path: &Path) -> Result<Suite> {
    let text = read(path)?;
    parse_suite(&text, path.parent().unwrap_or(Path::new(".")))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

#[derive(Default)]
struct Env {
    graphs: HashMap<String, Graph>,
    families: HashMap<String, GraphFamily>,
}

pub fn parse_suite(text: &str, base_dir: &Path) -> Result<Suite> {
    let mut env = Env::default();
    let mut suite = Suite::default();
    let mut ids = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        let mut words = content.split_whitespace();
        let at = |msg: String| Error::parse(line, msg);
        match words.next() {
            None => {}
            Some("load") => {
                let words: Vec<&str> = words.collect();
                let (file, alias) = match words.as_slice() {
                    [file] => (*file, None),
                    [file, "as", alias] => (*file, Some(*alias)),
                    _ => return Err(at("expected `load <file> [as <alias>]`".into())),
                };
                load(&mut env, &base_dir.join(file), alias).map_err(|e| match e {
                    Error::Io { .. } => e,
                    other => at(format!("in {file}: {other}")),
                })?;
            }
            Some("scenario") => {
                let id = words.next().ok_or_else(|| at("scenario needs an id".into()))?;
                let claim: Claim = words
                    .next()
                    .ok_or_else(|| at("scenario needs a claim".into()))?
                    .parse()
                    .map_err(|e: Error| at(e.to_string()))?;
                if !ids.insert(id.to_string()) {
                    return Err(at(format!("duplicate scenario id `{id}`")));
                }
                let mut args = Args::parse(words).map_err(at)?;
                let expect = args.take("expect");
                let budget = args.take("budget").map(|b| parse_num::<u64>("budget", &b)).transpose().map_err(at)?;
                let cfg = SearchConfig { budget: budget.unwrap_or(DEFAULT_BUDGET), ..SearchConfig::default() };
                let task = build_task(&env, claim, &mut args, &cfg).map_err(at)?;
                args.finish().map_err(at)?;
                task.validate().map_err(|e| at(e.to_string()))?;
                if task.claim() != claim {
                    return Err(at(format!("these inputs belong to {}, not {claim}", task.claim())));
                }
                suite.scenarios.push(Scenario { id: id.to_string(), line, task, expect, budget });
            }
            Some(other) => return Err(at(format!("unknown directive `{other}`"))),
        }
    }
    Ok(suite)
}

fn load(env: &mut Env, path: &Path, alias: Option<&str>) -> Result<()> {
    let graphs = parse_graphs(&read(path)?)?;
    for g in &graphs {
        env.graphs.insert(g.name().to_string(), g.clone());
    }
    let alias = match alias {
        Some(a) => a.to_string(),
        None => path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
    };
    if let [g] = graphs.as_slice() {
        env.graphs.insert(alias.clone(), g.clone());
    }
    match GraphFamily::new(graphs) {
        Ok(f) => {
            env.families.insert(alias, f);
        }
        Err(_) => {
            env.families.remove(&alias);
        }
    }
    Ok(())
}

struct Args {
    map: BTreeMap<String, String>,
}

impl Args {
    fn parse<'a>(words: impl Iterator<Item = &'a str>) -> std::result::Result<Self, String> {
        let mut map = BTreeMap::new();
        for w in words {
            let (k, v) = w.split_once('=').ok_or_else(|| format!("expected key=value, got `{w}`"))?;
            if map.insert(k.to_string(), v.to_string()).is_some() {
                return Err(format!("argument `{k}` given twice"));
            }
        }
        Ok(Args { map })
    }

    fn take(&mut self, key: &str) -> Option<String> {
        self.map.remove(key)
    }

    fn need(&mut self, key: &str) -> std::result::Result<String, String> {
        self.map.remove(key).ok_or_else(|| format!("missing argument `{key}`"))
    }

    fn finish(self) -> std::result::Result<(), String> {
        match self.map.keys().next() {
            Some(k) => Err(format!("unexpected argument `{k}`")),
            None => Ok(()),
        }
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> std::result::Result<T, String> {
    v.parse().map_err(|_| format!("`{key}` must be a non-negative integer, got `{v}`"))
}

fn build_task(env: &Env, claim: Claim, args: &mut Args, cfg: &SearchConfig) -> std::result::Result<Task, String> {
    let task = match claim {
        Claim::Transfer => Task::Transfer {
            g1: graph_arg(env, args, "g1")?,
            g2: graph_arg(env, args, "g2")?,
            h: graph_arg(env, args, "h")?,
        },
        Claim::P5C5Example => Task::P5C5 { g: graph_arg(env, args, "g")? },
        Claim::AdimFormula => Task::AdimFormula { n: parse_num("n", &args.need("n")?)? },
        Claim::Mod5Exists | Claim::Mod5None => Task::Mod5 { n: parse_num("n", &args.need("n")?)? },
        Claim::ComplementInv => Task::ComplementInv { h: family_ref(env, &args.need("h")?, cfg)? },
        Claim::RemarkBounds => Task::RemarkBounds { h: family_ref(env, &args.need("h")?, cfg)? },
        Claim::JoinDominates => Task::JoinDominates {
            h: family_ref(env, &args.need("h")?, cfg)?,
            h2: family_ref(env, &args.need("h2")?, cfg)?,
        },
        Claim::PermFamily => perm_task(env, args, cfg)?,
        _ => {
            let g = family_ref(env, &args.need("g")?, cfg)?;
            let h = family_ref(env, &args.need("h")?, cfg)?;
            match claim {
                Claim::SdCorona => Task::SdCorona { g, h },
                Claim::FBounds => Task::FBounds { g, h },
                Claim::FZero => Task::FCase { g, h, case: FCase::Zero },
                Claim::FVMinus1 => Task::FCase { g, h, case: FCase::VMinus1 },
                Claim::FSGamma => Task::FCase { g, h, case: FCase::SGamma },
                Claim::FGammaPrime => Task::FCase { g, h, case: FCase::GammaPrime },
                Claim::NtUnion => Task::NtUnion { g, h },
                Claim::JoinKt => Task::JoinKt { g, h, t: parse_num("t", &args.need("t")?)? },
                Claim::JoinSum => {
                    let h2 = family_ref(env, &args.need("h2")?, cfg)?;
                    let case = match args.take("predict").as_deref().unwrap_or("sum") {
                        "sum" => JoinCase::Sum,
                        "sgamma" => JoinCase::SumPlusSGamma,
                        other => return Err(format!("`predict` must be sum or sgamma, got `{other}`")),
                    };
                    Task::Join { g, h, h2, case }
                }
                _ => unreachable!("handled above"),
            }
        }
    };
    Ok(task)
}

fn graph_arg(env: &Env, args: &mut Args, key: &str) -> std::result::Result<Graph, String> {
    graph_ref(env, &args.need(key)?)
}

fn perm_task(env: &Env, args: &mut Args, cfg: &SearchConfig) -> std::result::Result<Task, String> {
    let graph = graph_ref(env, &args.need("graph")?)?;
    let choice = basis_choice(args.take("basis").as_deref().unwrap_or("auto"), graph.order())?;
    let basis = choose_basis(&graph, &choice, cfg).map_err(|e| e.to_string())?;
    let members = match args.take("family") {
        Some(f) => family_ref(env, &f, cfg)?,
        None => {
            let mode: SampleMode =
                args.take("mode").as_deref().unwrap_or("relabel").parse().map_err(|e: Error| e.to_string())?;
            let seed = parse_num("seed", args.take("seed").as_deref().unwrap_or("0"))?;
            let count = parse_num("count", args.take("count").as_deref().unwrap_or("1"))?;
            sample_members(&graph, &basis, mode, seed, count).map_err(|e| e.to_string())?
        }
    };
    let f = args
        .take("f")
        .map(|s| {
            let image =
                s.split(',').map(|x| parse_num::<usize>("f", x.trim())).collect::<std::result::Result<Vec<_>, _>>()?;
            Permutation::from_image(image).map_err(|e| e.to_string())
        })
        .transpose()?;
    Ok(Task::PermFamily { graph, basis, members, f })
}

fn basis_choice(s: &str, n: usize) -> std::result::Result<BasisChoice, String> {
    match s {
        "auto" => Ok(BasisChoice::First),
        "dom" => Ok(BasisChoice::Dominating),
        set => VertexSet::parse(n, set).map(BasisChoice::Given).map_err(|e| e.to_string()),
    }
}

/// Resolves a family reference.
fn family_ref(env: &Env, s: &str, cfg: &SearchConfig) -> std::result::Result<GraphFamily, String> {
    if let Some(spec) = s.strip_prefix("sample:") {
        let parts: Vec<&str> = spec.splitn(5, ':').collect();
        let [g, basis, mode, seed, count] = parts.as_slice() else {
            return Err(format!("expected sample:<graph>:<basis>:<mode>:<seed>:<count>, got `{s}`"));
        };
        let graph = graph_ref(env, g)?;
        let choice = basis_choice(basis, graph.order())?;
        let b = choose_basis(&graph, &choice, cfg).map_err(|e| e.to_string())?;
        let mode: SampleMode = mode.parse().map_err(|e: Error| e.to_string())?;
        return sample_members(&graph, &b, mode, parse_num("seed", seed)?, parse_num("count", count)?)
            .map_err(|e| e.to_string());
    }
    let mut members = Vec::new();
    for item in s.split(',').map(str::trim) {
        match item.strip_prefix('@') {
            Some(alias) => members.extend(
                env.families.get(alias).ok_or_else(|| format!("no family loaded as `{alias}`"))?.iter().cloned(),
            ),
            None => members.push(graph_ref(env, item)?),
        }
    }
    GraphFamily::new(members).map_err(|e| e.to_string())
}

/// Resolves a graph reference such as `~P4`, `N1|K3` or `K2+P7`.
fn graph_ref(env: &Env, s: &str) -> std::result::Result<Graph, String> {
    let mut acc: Option<Graph> = None;
    let mut pending = None;
    let mut rest = s;
    loop {
        let end = rest.find(['|', '+']).unwrap_or(rest.len());
        let operand = operand(env, rest[..end].trim())?;
        acc = Some(match (acc, pending) {
            (None, _) => operand,
            (Some(a), Some('|')) => a.disjoint_union(&operand).map_err(|e| e.to_string())?,
            (Some(a), _) => join(&a, &operand).map_err(|e| e.to_string())?,
        });
        if end == rest.len() {
            break;
        }
        pending = rest[end..].chars().next();
        rest = &rest[end + 1..];
    }
    acc.ok_or_else(|| format!("empty graph reference `{s}`"))
}

fn operand(env: &Env, s: &str) -> std::result::Result<Graph, String> {
    if let Some(inner) = s.strip_prefix('~') {
        return operand(env, inner).map(|g| g.complement());
    }
    if let Some(g) = env.graphs.get(s) {
        return Ok(g.clone());
    }
    builtin(s).ok_or_else(|| format!("unknown graph `{s}`"))
}

fn builtin(s: &str) -> Option<Graph> {
    let num = |t: &str| t.parse::<usize>().ok().filter(|_| t.bytes().all(|b| b.is_ascii_digit()));
    let (head, tail) = s.split_at(s.char_indices().nth(1)?.0);
    let g = match head {
        "P" => Graph::path(num(tail)?),
        "C" => Graph::cycle(num(tail)?),
        "N" => Graph::empty(num(tail)?),
        "K" => match tail.split_once('_') {
            Some((r, t)) => Graph::complete_bipartite(num(r)?, num(t)?),
            None => Graph::complete(num(tail)?),
        },
        _ => return None,
    };
    g.ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env() -> Env {
        Env::default()
    }

    #[test]
    fn graph_references() {
        let e = env();
        assert_eq!(graph_ref(&e, "P4").unwrap().edge_count(), 3);
        assert_eq!(graph_ref(&e, "~P4").unwrap().edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 3)]);
        let u = graph_ref(&e, "N1|K3").unwrap();
        assert_eq!((u.order(), u.edge_count(), u.degree(0)), (4, 3, 0));
        let j = graph_ref(&e, "N1+N1").unwrap();
        assert_eq!(j.rows(), Graph::complete(2).unwrap().rows());
        assert_eq!(graph_ref(&e, "K2_3").unwrap().edge_count(), 6);
        assert_eq!(graph_ref(&e, "K2+P3").unwrap().order(), 5);
        assert!(graph_ref(&e, "Q4").is_err());
        assert!(graph_ref(&e, "P").is_err());
    }

    #[test]
    fn family_references() {
        let cfg = SearchConfig::default();
        let f = family_ref(&env(), "P5,C5", &cfg).unwrap();
        assert_eq!(f.len(), 2);
        assert!(family_ref(&env(), "P5,C6", &cfg).is_err());
        let s = family_ref(&env(), "sample:C8:{0,2,6}:relabel:3:4", &cfg).unwrap();
        assert_eq!(s.len(), 4);
        assert!(family_ref(&env(), "@missing", &cfg).is_err());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let dir = Path::new(".");
        let err = parse_suite("# header\n\nscenario a NOPE n=3\n", dir).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_suite("scenario a ADIM_FORMULA\n", dir).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_suite("scenario a ADIM_FORMULA n=5\nscenario a ADIM_FORMULA n=6\n", dir).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_suite("scenario m MOD5_EXISTS n=8\n", dir).unwrap_err();
        assert!(err.to_string().contains("MOD5_NONE"), "{err}");
        let err = parse_suite("scenario a ADIM_FORMULA n=5 colour=red\n", dir).unwrap_err();
        assert!(err.to_string().contains("colour"));
        assert!(matches!(parse_suite("load nowhere.graphs\n", dir).unwrap_err(), Error::Io { .. }));
    }

    #[test]
    fn empty_suite_passes() {
        let suite = parse_suite("# nothing\n", Path::new(".")).unwrap();
        assert!(run_suite(&suite, false).is_empty());
    }

    #[test]
    fn falsified_expectation_fails() {
        let suite = parse_suite(
            "scenario ok ADIM_FORMULA n=6\nscenario bad SD_CORONA g=K2 h=K2 expect=3\nscenario na F_ZERO g=P2 h=K3\n",
            Path::new("."),
        )
        .unwrap();
        let reports = run_suite(&suite, true);
        let lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
        assert!(lines[0].starts_with("PASS ok expected=P6:2,C6:2 computed=P6:2,C6:2 witness={"), "{}", lines[0]);
        assert!(lines[1].starts_with("FAIL bad expected=3 computed=2 witness="), "{}", lines[1]);
        assert!(lines[2].starts_with("INAPPLICABLE na"), "{}", lines[2]);
    }
}
