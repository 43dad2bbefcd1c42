//! Command-line front end. [`run`] returns the exit code and both output
//! streams, so the binary is a thin wrapper and tests can drive it in-process.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::approx;
use crate::cnf::{evaluate_assignment, Assignment, CnfFormula};
use crate::error::{Error, Result};
use crate::exact::{self, HubScope, DEFAULT_BUDGET};
use crate::graph::{self, WeightedGraph, DEFAULT_PATH_CAP};
use crate::instance::{canonical_set, is_hitting_set, sparseness_of, HittingSolution, SetSystemInstance, VertexSet};
use crate::matching::{matching_density, validate_matching, EdgePair, MatchingSolution};
use crate::rational::{self, Rational};
use crate::reductions::{self, GeneratedInstance};

/// What every command prints: the arguments it ran with, a SHA-256 over the
/// bytes of every input file in reading order, and the result payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub input_digest: String,
    pub result: Value,
    /// `value / oracle value` as `num/den`, or `inf` when only the oracle is 0.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "sparsehs", version, about = "Sparse hitting set solvers, approximations and reduction generators")]
struct Cli {
    /// Print only the result payload instead of the full report.
    #[arg(long, global = true)]
    plain: bool,

    /// Also write the result payload as JSON to this file.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a reduction instance from a DIMACS formula or an edge list.
    Generate(GenerateArgs),
    /// Build the solution a reduction maps a certificate to.
    Witness(WitnessArgs),
    /// Read a satisfying assignment back out of a solution.
    Extract(ExtractArgs),
    /// Solve a problem exactly within a node budget.
    SolveExact(SolveExactArgs),
    /// Decide sparseness-1 vertex cover through 2-SAT.
    SolveK1(SolveK1Args),
    /// Run an approximation algorithm.
    Approx(ApproxArgs),
    /// List the shortest-path family P_r.
    Paths(PathsArgs),
    /// List the radii at which P_r or the 2r balls change.
    Radii(GraphArgs),
    /// Compute the highway dimension exactly.
    Hd(HdArgs),
    /// Check a solution against its instance without trusting reported values.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Reduction {
    Svc,
    Fairvc,
    OpenFairvc,
    DenseMatching,
    Rhd,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Problem {
    SparseHs,
    Rhd,
    Rspc,
    Mmsc,
    DenseMatching,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Algorithm {
    SparseVc,
    FairVc,
    Mmsc,
    Rspc,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Scope {
    Anywhere,
    InsideBall,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum VerifyKind {
    HittingSet,
    Matching,
    Assignment,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    reduction: Reduction,
    /// DIMACS CNF, or an edge list for `rhd`.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long)]
    k: Option<usize>,
    /// Gadget copies for `rhd` (default k^2).
    #[arg(long)]
    c: Option<usize>,
    /// Write the Sparse-HS view (F = edges, B = balls) as instance JSON.
    #[arg(long, value_name = "FILE")]
    instance_out: Option<PathBuf>,
    /// Write the generated graph as an edge list.
    #[arg(long, value_name = "FILE")]
    graph_out: Option<PathBuf>,
    /// Write the ball family as a JSON list of vertex lists.
    #[arg(long, value_name = "FILE")]
    balls_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[arg(long, value_enum)]
    reduction: Reduction,
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    /// Satisfying assignment as a literal list, e.g. `1 -2 3`.
    #[arg(long, value_name = "FILE")]
    assignment: Option<PathBuf>,
    /// Clique vertices for `rhd`, comma separated.
    #[arg(long, value_delimiter = ',')]
    clique: Vec<usize>,
}

#[derive(Args, Debug)]
struct ExtractArgs {
    #[arg(long, value_enum)]
    reduction: Reduction,
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long)]
    k: Option<usize>,
    /// Solution JSON: `{"H": [...]}` or, for dense-matching, `{"edges": [[u, v], ...]}`.
    #[arg(long, value_name = "FILE")]
    solution: PathBuf,
}

#[derive(Args, Debug)]
struct SolveExactArgs {
    #[arg(long, value_enum)]
    problem: Problem,
    /// Instance JSON (sparse-hs), `{"universe", "sets"}` JSON (mmsc) or an edge list.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_name = "NUM/DEN")]
    r: Option<String>,
    /// Ball family for dense-matching; otherwise all balls of radius `--r`.
    #[arg(long, value_name = "FILE")]
    balls: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
struct SolveK1Args {
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
    #[arg(long, value_name = "FILE")]
    balls: PathBuf,
}

#[derive(Args, Debug)]
struct ApproxArgs {
    #[arg(long, value_enum)]
    algorithm: Algorithm,
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_name = "FILE")]
    balls: Option<PathBuf>,
    #[arg(long, value_name = "NUM/DEN")]
    r: Option<String>,
    /// Required by the randomized algorithms (mmsc, rspc).
    #[arg(long)]
    seed: Option<u64>,
    /// Exact solution to compare against.
    #[arg(long, value_name = "FILE")]
    oracle: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PathsArgs {
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
    #[arg(long, value_name = "NUM/DEN")]
    r: String,
    #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
    cap: usize,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
}

#[derive(Args, Debug)]
struct HdArgs {
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Scope::Anywhere)]
    scope: Scope,
    /// Report the value at every relevant radius.
    #[arg(long)]
    profile: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    kind: VerifyKind,
    /// Instance JSON, edge list or DIMACS CNF, matching `--kind`.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_name = "FILE")]
    solution: PathBuf,
    #[arg(long, value_name = "FILE")]
    balls: Option<PathBuf>,
    #[arg(long, value_name = "NUM/DEN")]
    r: Option<String>,
}

/// Reads input files and hashes their contents in order.
struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    fn new() -> Self {
        Inputs { hasher: Sha256::new() }
    }

    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = fs::read(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(&bytes);
        String::from_utf8(bytes).map_err(|_| Error::Input(format!("{} is not UTF-8", path.display())))
    }

    fn graph(&mut self, path: &Path) -> Result<WeightedGraph> {
        WeightedGraph::parse_edge_list(&self.read(path)?)
    }

    fn cnf(&mut self, path: &Path) -> Result<CnfFormula> {
        CnfFormula::parse_dimacs(&self.read(path)?)
    }

    fn json<T: for<'de> Deserialize<'de>>(&mut self, path: &Path) -> Result<T> {
        Ok(serde_json::from_str(&self.read(path)?)?)
    }

    fn digest(self) -> String {
        hex::encode(self.hasher.finalize())
    }
}

struct Outcome {
    result: Value,
    ok: bool,
    ratio: Option<String>,
    nodes: Option<u64>,
}

impl Outcome {
    fn ok(result: impl Serialize) -> Result<Self> {
        Ok(Outcome { result: serde_json::to_value(result)?, ok: true, ratio: None, nodes: None })
    }

    fn failed(result: impl Serialize) -> Result<Self> {
        Ok(Outcome { ok: false, ..Outcome::ok(result)? })
    }
}

#[derive(Deserialize)]
struct MmscFile {
    universe: usize,
    sets: Vec<Vec<usize>>,
}

/// Parses `argv` (program name first), runs the command and renders output.
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CliOutput { code: 0, stdout: text, stderr: String::new() }
                }
                _ => CliOutput { code: 3, stdout: String::new(), stderr: text },
            };
        }
    };
    let echo: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut inputs = Inputs::new();
    let outcome = dispatch(&cli.command, &mut inputs).and_then(|o| {
        if let Some(path) = &cli.out {
            write(path, &serde_json::to_string_pretty(&o.result)?)?;
        }
        Ok(o)
    });
    match outcome {
        Ok(o) => {
            let code = if o.ok { 0 } else { 1 };
            let stdout = if cli.plain {
                plain(&o.result)
            } else {
                let report = RunReport {
                    command: echo,
                    input_digest: inputs.digest(),
                    result: o.result,
                    ratio: o.ratio,
                    nodes: o.nodes,
                };
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            };
            CliOutput { code, stdout, stderr: String::new() }
        }
        Err(e) => CliOutput { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => format!("{s}\n"),
        other => format!("{other}\n"),
    }
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
}

fn dispatch(command: &Command, inputs: &mut Inputs) -> Result<Outcome> {
    match command {
        Command::Generate(a) => generate(a, inputs),
        Command::Witness(a) => witness(a, inputs),
        Command::Extract(a) => extract(a, inputs),
        Command::SolveExact(a) => solve_exact(a, inputs),
        Command::SolveK1(a) => {
            let g = inputs.graph(&a.graph)?;
            let balls: Vec<Vec<usize>> = inputs.json(&a.balls)?;
            match crate::twosat::solve_sparse_vc_k1(&g, &balls)? {
                Some(h) => Outcome::ok(h),
                None => Outcome::failed("INFEASIBLE"),
            }
        }
        Command::Approx(a) => approximate(a, inputs),
        Command::Paths(a) => {
            let g = inputs.graph(&a.graph)?;
            Outcome::ok(graph::enumerate_path_family(&g, &radius(&a.r)?, a.cap)?)
        }
        Command::Radii(a) => {
            let g = inputs.graph(&a.graph)?;
            Outcome::ok(graph::relevant_radii(&g).iter().map(rational::format).collect::<Vec<_>>())
        }
        Command::Hd(a) => {
            let g = inputs.graph(&a.graph)?;
            let scope = match a.scope {
                Scope::Anywhere => HubScope::Anywhere,
                Scope::InsideBall => HubScope::InsideBall,
            };
            let profile = exact::highway_dimension_profile(&g, scope)?;
            if a.profile {
                let rows: Vec<Value> = profile
                    .iter()
                    .map(|p| json!({ "radius": rational::format(&p.radius), "value": p.value }))
                    .collect();
                Outcome::ok(rows)
            } else {
                Outcome::ok(profile.iter().map(|p| p.value).max().unwrap_or(0))
            }
        }
        Command::Verify(a) => verify(a, inputs),
    }
}

fn radius(text: &str) -> Result<Rational> {
    let r = rational::parse(text)?;
    if r <= Rational::zero() {
        return Err(Error::Input(format!("radius {text} must be positive")));
    }
    Ok(r)
}

fn need_k(k: Option<usize>) -> Result<usize> {
    k.ok_or_else(|| Error::Input("--k is required for this reduction".into()))
}

fn build(reduction: Reduction, input: &Path, k: Option<usize>, c: Option<usize>, inputs: &mut Inputs) -> Result<GeneratedInstance> {
    if reduction == Reduction::Rhd {
        let h = inputs.graph(input)?;
        let k = need_k(k)?;
        return reductions::clique_to_rhd(&h, k, c.unwrap_or(k * k));
    }
    let f = inputs.cnf(input)?;
    match reduction {
        Reduction::Svc => reductions::exactly3sat_to_sparse_vc(&f, need_k(k)?),
        Reduction::Fairvc => reductions::p2p1n3sat_to_fair_vc(&f, need_k(k)?),
        Reduction::OpenFairvc => reductions::p2p1n3sat_to_open_fair_vc(&f, need_k(k)?),
        Reduction::DenseMatching => reductions::threesat_to_dense_matching(&f),
        Reduction::Rhd => unreachable!(),
    }
}

fn generate(a: &GenerateArgs, inputs: &mut Inputs) -> Result<Outcome> {
    let inst = build(a.reduction, &a.input, a.k, a.c, inputs)?;
    if let Some(path) = &a.instance_out {
        write(path, &inst.set_system()?.to_json())?;
    }
    if let Some(path) = &a.graph_out {
        write(path, &inst.graph.to_edge_list())?;
    }
    if let Some(path) = &a.balls_out {
        write(path, &serde_json::to_string(&inst.balls)?)?;
    }
    Outcome::ok(&inst)
}

fn witness(a: &WitnessArgs, inputs: &mut Inputs) -> Result<Outcome> {
    if a.reduction == Reduction::Rhd {
        let h = inputs.graph(&a.input)?;
        let k = need_k(a.k)?;
        let hubs = reductions::rhd_witness_from_clique(&h, &a.clique, k, a.c.unwrap_or(k * k))?;
        return Outcome::ok(json!({ "H": hubs, "size": hubs.len() }));
    }
    let f = inputs.cnf(&a.input)?;
    let path = a
        .assignment
        .as_ref()
        .ok_or_else(|| Error::Input("--assignment is required for this reduction".into()))?;
    let assignment = Assignment::parse_literals(&inputs.read(path)?, f.variable_count())?;
    let hitting = |inst: GeneratedInstance, h: VertexSet| -> Result<Outcome> {
        Outcome::ok(HittingSolution::evaluate(&inst.set_system()?, h)?)
    };
    match a.reduction {
        Reduction::Svc => {
            let k = need_k(a.k)?;
            hitting(reductions::exactly3sat_to_sparse_vc(&f, k)?, reductions::sparse_vc_witness(&f, k, &assignment)?)
        }
        Reduction::Fairvc => {
            let k = need_k(a.k)?;
            hitting(reductions::p2p1n3sat_to_fair_vc(&f, k)?, reductions::fair_vc_witness(&f, k, &assignment)?)
        }
        Reduction::OpenFairvc => {
            let k = need_k(a.k)?;
            hitting(
                reductions::p2p1n3sat_to_open_fair_vc(&f, k)?,
                reductions::open_fair_vc_witness(&f, k, &assignment)?,
            )
        }
        Reduction::DenseMatching => {
            let inst = reductions::threesat_to_dense_matching(&f)?;
            let m = reductions::dense_matching_witness(&f, &assignment)?;
            Outcome::ok(MatchingSolution::evaluate(&inst.graph, &inst.balls, m)?)
        }
        Reduction::Rhd => unreachable!(),
    }
}

#[derive(Deserialize)]
struct MembersFile {
    #[serde(rename = "H")]
    members: Vec<usize>,
}

#[derive(Deserialize)]
struct EdgesFile {
    edges: Vec<EdgePair>,
}

fn extract(a: &ExtractArgs, inputs: &mut Inputs) -> Result<Outcome> {
    let f = inputs.cnf(&a.input)?;
    let assignment = match a.reduction {
        Reduction::Svc => {
            let h: MembersFile = inputs.json(&a.solution)?;
            reductions::sparse_vc_extract(&f, need_k(a.k)?, &canonical_set(h.members))?
        }
        Reduction::Fairvc | Reduction::OpenFairvc => {
            let k = need_k(a.k)?;
            let inst = if a.reduction == Reduction::Fairvc {
                reductions::p2p1n3sat_to_fair_vc(&f, k)?
            } else {
                reductions::p2p1n3sat_to_open_fair_vc(&f, k)?
            };
            let h: MembersFile = inputs.json(&a.solution)?;
            reductions::fair_vc_extract(&inst, &f, &canonical_set(h.members))?
        }
        Reduction::DenseMatching => {
            let m: EdgesFile = inputs.json(&a.solution)?;
            reductions::dense_matching_extract(&f, &m.edges)?
        }
        Reduction::Rhd => return Err(Error::Input("the clique reduction has no assignment to extract".into())),
    };
    let satisfies = evaluate_assignment(&f, &assignment)?;
    let result = json!({ "assignment": assignment.to_literals(), "satisfies": satisfies });
    if satisfies {
        Outcome::ok(result)
    } else {
        Outcome::failed(result)
    }
}

fn balls_for(g: &WeightedGraph, balls: Option<&PathBuf>, r: Option<&String>, inputs: &mut Inputs) -> Result<Vec<VertexSet>> {
    match (balls, r) {
        (Some(path), _) => inputs.json(path),
        (None, Some(r)) => Ok(graph::all_pairs_distances(g).balls(&radius(r)?)),
        (None, None) => Err(Error::Input("give a ball family with --balls or a radius with --r".into())),
    }
}

fn need_r(r: Option<&String>) -> Result<Rational> {
    radius(r.ok_or_else(|| Error::Input("--r is required for this problem".into()))?)
}

fn solve_exact(a: &SolveExactArgs, inputs: &mut Inputs) -> Result<Outcome> {
    match a.problem {
        Problem::SparseHs => {
            let inst = SetSystemInstance::from_json(&inputs.read(&a.input)?)?;
            let (sol, stats) = exact::solve_sparse_hs_exact_with_stats(&inst, a.budget)?;
            Ok(Outcome { nodes: Some(stats.nodes), ..Outcome::ok(sol)? })
        }
        Problem::Rhd => {
            let g = inputs.graph(&a.input)?;
            Outcome::ok(exact::rhd_value(&g, &need_r(a.r.as_ref())?)?)
        }
        Problem::Rspc => {
            let g = inputs.graph(&a.input)?;
            let r = need_r(a.r.as_ref())?;
            let family = graph::enumerate_path_family(&g, &r, DEFAULT_PATH_CAP)?;
            let balls = graph::all_pairs_distances(&g).balls(&(&r * rational::int(2)));
            Outcome::ok(exact::solve_rspc_exact(&g, &family, &balls, a.budget)?)
        }
        Problem::Mmsc => {
            let file: MmscFile = inputs.json(&a.input)?;
            Outcome::ok(exact::solve_mmsc_exact(file.universe, &file.sets, a.budget)?)
        }
        Problem::DenseMatching => {
            let g = inputs.graph(&a.input)?;
            let balls = balls_for(&g, a.balls.as_ref(), a.r.as_ref(), inputs)?;
            let (sol, stats) = exact::solve_dense_matching_exact_with_stats(&g, &balls, a.budget)?;
            Ok(Outcome { nodes: Some(stats.nodes), ..Outcome::ok(sol)? })
        }
    }
}

fn ratio(value: usize, oracle: usize) -> String {
    match (value, oracle) {
        (0, 0) => "1/1".into(),
        (_, 0) => "inf".into(),
        _ => rational::format(&rational::ratio(value as i64, oracle as i64)),
    }
}

/// Sparseness of an oracle hitting set, recomputed against `f` and `balls`.
fn oracle_sparseness(path: &Path, n: usize, f: Vec<Vec<usize>>, balls: &[VertexSet], inputs: &mut Inputs) -> Result<usize> {
    let oracle: MembersFile = inputs.json(path)?;
    let inst = SetSystemInstance::new(n, f, balls.to_vec())?;
    if !is_hitting_set(&inst, &oracle.members)? {
        return Err(Error::Validation("oracle solution does not hit every required set".into()));
    }
    sparseness_of(&inst, &oracle.members)
}

fn edge_sets(g: &WeightedGraph) -> Vec<Vec<usize>> {
    g.edge_pairs().into_iter().map(|(u, v)| vec![u, v]).collect()
}

fn need_seed(seed: Option<u64>) -> Result<u64> {
    seed.ok_or_else(|| Error::Input("--seed is required for randomized algorithms".into()))
}

fn approximate(a: &ApproxArgs, inputs: &mut Inputs) -> Result<Outcome> {
    let (outcome, value, oracle) = match a.algorithm {
        Algorithm::SparseVc => {
            let g = inputs.graph(&a.input)?;
            let balls = balls_for(&g, a.balls.as_ref(), a.r.as_ref(), inputs)?;
            let out = approx::sparse_vc_2approx(&g, &balls)?;
            let oracle = match &a.oracle {
                Some(p) => Some(oracle_sparseness(p, g.vertex_count(), edge_sets(&g), &balls, inputs)?),
                None => None,
            };
            (Outcome::ok(&out)?, out.solution.sparseness, oracle)
        }
        Algorithm::FairVc => {
            let g = inputs.graph(&a.input)?;
            let out = approx::fair_vc_approx(&g)?;
            let balls: Vec<VertexSet> = (0..g.vertex_count()).map(|v| g.closed_neighborhood(v)).collect();
            let oracle = match &a.oracle {
                Some(p) => Some(oracle_sparseness(p, g.vertex_count(), edge_sets(&g), &balls, inputs)?),
                None => None,
            };
            (Outcome::ok(&out)?, out.solution.sparseness, oracle)
        }
        Algorithm::Mmsc => {
            let seed = need_seed(a.seed)?;
            let file: MmscFile = inputs.json(&a.input)?;
            let out = approx::mmsc_approx(file.universe, &file.sets, seed)?;
            let oracle = match &a.oracle {
                Some(p) => {
                    #[derive(Deserialize)]
                    struct Chosen {
                        chosen: Vec<usize>,
                    }
                    let chosen: Chosen = inputs.json(p)?;
                    Some(mmsc_membership(file.universe, &file.sets, &chosen.chosen)?)
                }
                None => None,
            };
            (Outcome::ok(&out)?, out.membership, oracle)
        }
        Algorithm::Rspc => {
            let seed = need_seed(a.seed)?;
            let g = inputs.graph(&a.input)?;
            let r = need_r(a.r.as_ref())?;
            let out = approx::rspc_logn_approx(&g, &r, seed)?;
            let oracle = match &a.oracle {
                Some(p) => {
                    let family = graph::enumerate_path_family(&g, &r, DEFAULT_PATH_CAP)?;
                    let balls = graph::all_pairs_distances(&g).balls(&(&r * rational::int(2)));
                    Some(oracle_sparseness(p, g.vertex_count(), family.vertex_sets(), &balls, inputs)?)
                }
                None => None,
            };
            (Outcome::ok(&out)?, out.solution.sparseness, oracle)
        }
    };
    Ok(Outcome { ratio: oracle.map(|o| ratio(value, o)), ..outcome })
}

/// Maximum membership of a set selection, which must cover the universe.
fn mmsc_membership(universe: usize, sets: &[Vec<usize>], chosen: &[usize]) -> Result<usize> {
    let mut count = vec![0usize; universe];
    for &i in chosen {
        let set = sets.get(i).ok_or_else(|| Error::Input(format!("oracle chooses missing set {i}")))?;
        for &e in &canonical_set(set.clone()) {
            *count
                .get_mut(e)
                .ok_or_else(|| Error::Input(format!("set {i} has element {e} outside the universe")))? += 1;
        }
    }
    if let Some(e) = count.iter().position(|&c| c == 0) {
        return Err(Error::Validation(format!("oracle selection leaves element {e} uncovered")));
    }
    Ok(count.into_iter().max().unwrap_or(0))
}

fn verify(a: &VerifyArgs, inputs: &mut Inputs) -> Result<Outcome> {
    match a.kind {
        VerifyKind::HittingSet => {
            let inst = SetSystemInstance::from_json(&inputs.read(&a.input)?)?;
            let claimed: Value = inputs.json(&a.solution)?;
            let members: Vec<usize> = serde_json::from_value(claimed.get("H").cloned().unwrap_or(Value::Null))
                .map_err(|e| Error::Input(format!("solution needs an \"H\" list: {e}")))?;
            let hitting = is_hitting_set(&inst, &members)?;
            let sparseness = sparseness_of(&inst, &members)?;
            let reported = claimed.get("sparseness").and_then(Value::as_u64);
            let consistent = reported.is_none_or(|s| s == sparseness as u64);
            let result = json!({
                "valid": hitting && consistent,
                "hitting": hitting,
                "sparseness": sparseness,
                "reported_sparseness": reported,
            });
            if hitting && consistent {
                Outcome::ok(result)
            } else {
                Outcome::failed(result)
            }
        }
        VerifyKind::Matching => {
            let g = inputs.graph(&a.input)?;
            let balls = balls_for(&g, a.balls.as_ref(), a.r.as_ref(), inputs)?;
            let claimed: Value = inputs.json(&a.solution)?;
            let edges: Vec<EdgePair> = serde_json::from_value(claimed.get("edges").cloned().unwrap_or(Value::Null))
                .map_err(|e| Error::Input(format!("solution needs an \"edges\" list: {e}")))?;
            let reported = claimed.get("density").and_then(Value::as_u64);
            match validate_matching(&g, &edges) {
                Ok(()) => {
                    let density = matching_density(&g, &balls, &edges)?;
                    let consistent = reported.is_none_or(|d| d == density as u64);
                    let result = json!({ "valid": consistent, "density": density, "reported_density": reported });
                    if consistent {
                        Outcome::ok(result)
                    } else {
                        Outcome::failed(result)
                    }
                }
                Err(Error::Validation(reason)) => {
                    Outcome::failed(json!({ "valid": false, "reason": reason, "reported_density": reported }))
                }
                Err(e) => Err(e),
            }
        }
        VerifyKind::Assignment => {
            let f = inputs.cnf(&a.input)?;
            let assignment = Assignment::parse_literals(&inputs.read(&a.solution)?, f.variable_count())?;
            let satisfies = evaluate_assignment(&f, &assignment)?;
            let result = json!({ "valid": satisfies, "assignment": assignment.to_literals() });
            if satisfies {
                Outcome::ok(result)
            } else {
                Outcome::failed(result)
            }
        }
    }
}
