//! `nldim`: exact nonlocal/local/full metric dimension from the command
//! line, plus family formulas, embedding, enumeration, and the
//! verification campaigns.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use nldim_core::enumerate::enumerate_connected;
use nldim_core::io::{emit_graph6, parse_graph, GraphFormat};
use nldim_core::verify::{run as run_campaign, CampaignParams, TheoremId, VerificationReport};
use nldim_core::{embed_supergraph, families, formulas, solver, structure, verify_embedding};
use nldim_core::{Graph, PairMode};

#[derive(Parser)]
#[command(
    name = "nldim",
    version,
    about = "Exact nonlocal metric dimension toolkit",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact dimension of a graph read from a file.
    Compute {
        /// Input file; `-` reads stdin.
        #[arg(long)]
        input: PathBuf,
        /// Input format: graph6 | edgelist.
        #[arg(long, default_value = "edgelist")]
        format: String,
        /// Pair mode: nonlocal | local | full.
        #[arg(long, default_value = "nonlocal")]
        mode: String,
        /// Also print one minimum resolving set.
        #[arg(long)]
        certificate: bool,
        /// Enumerate all minimum bases, up to LIMIT of them.
        #[arg(long, value_name = "LIMIT")]
        all_bases: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form value for a named family (solver fallback otherwise).
    Family {
        /// path | cycle | complete | complete_bipartite | star | wheel |
        /// spider | random_tree | random_block_graph | random_connected
        name: String,
        /// Family parameters, e.g. `wheel 13` or `random_tree 10 1`.
        params: Vec<String>,
        /// Also print a resolving set witnessing the value.
        #[arg(long)]
        basis: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run one verification campaign.
    Verify {
        /// One of: eq1 prop21 prop22 thm31 thm32 thm33 thm41 prop51 prop52
        /// thm53 thm61.
        theorem: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Embed a graph into a supergraph with small nonlocal dimension.
    Embed {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "edgelist")]
        format: String,
        /// Confirm the bound with the exact solver on the supergraph.
        #[arg(long)]
        solve: bool,
        #[arg(long)]
        json: bool,
    },
    /// Stream all connected labeled graphs on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep one representative per isomorphism class (slow beyond n=6).
        #[arg(long)]
        canonical: bool,
        /// Per-graph checks to run: any of eq1,prop21,prop51,prop52.
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Compute {
            input,
            format,
            mode,
            certificate,
            all_bases,
            json,
        } => compute(&input, &format, &mode, certificate, all_bases, json),
        Command::Family {
            name,
            params,
            basis,
            json,
        } => family(&name, &params, basis, json),
        Command::Verify {
            theorem,
            max_n,
            seed,
            samples,
            json,
        } => verify(&theorem, max_n, seed, samples, json),
        Command::Embed {
            input,
            format,
            solve,
            json,
        } => embed(&input, &format, solve, json),
        Command::Enumerate { n, canonical, check } => enumerate(n, canonical, &check),
    }
}

fn read_graph(input: &PathBuf, format: &str) -> Result<Graph> {
    let format: GraphFormat = format.parse()?;
    let text = if input.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?
    };
    Ok(parse_graph(&text, format)?)
}

fn parse_mode(mode: &str) -> Result<PairMode> {
    match mode {
        "nonlocal" => Ok(PairMode::NonAdjacent),
        "local" => Ok(PairMode::Adjacent),
        "full" => Ok(PairMode::All),
        other => bail!("unknown mode {other:?} (expected nonlocal | local | full)"),
    }
}

fn fmt_set(set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

fn compute(
    input: &PathBuf,
    format: &str,
    mode: &str,
    certificate: bool,
    all_bases: Option<usize>,
    json: bool,
) -> Result<i32> {
    let g = read_graph(input, format)?;
    let mode = parse_mode(mode)?;
    let started = Instant::now();
    if let Some(limit) = all_bases {
        let bases = solver::all_min_bases(&g, mode, limit)?;
        let elapsed = started.elapsed().as_millis();
        if json {
            let doc = json!({
                "schema": 1,
                "invariant": mode.label(),
                "value": bases.value,
                "basis": bases.bases.first(),
                "bases": bases.bases,
                "truncated": bases.truncated,
                "theorem_refs": [],
                "elapsed_ms": elapsed,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        } else {
            println!("{} = {}", mode.label(), bases.value);
            for b in &bases.bases {
                println!("basis {}", fmt_set(b));
            }
            if bases.truncated {
                println!("(more bases exist; limit {limit} reached)");
            }
        }
        return Ok(0);
    }
    let result = solver::solve_exact(&g, mode)?;
    let elapsed = started.elapsed().as_millis();
    if json {
        let doc = json!({
            "schema": 1,
            "invariant": mode.label(),
            "value": result.value,
            "basis": if certificate { Some(&result.basis) } else { None },
            "theorem_refs": [],
            "elapsed_ms": elapsed,
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("graph: {} vertices, {} edges", g.n(), g.edge_count());
        println!("{} = {}", mode.label(), result.value);
        if certificate {
            println!("basis {}", fmt_set(&result.basis));
        }
    }
    Ok(0)
}

struct FamilyAnswer {
    graph: Graph,
    value: usize,
    basis: Option<Vec<usize>>,
    refs: &'static [&'static str],
}

fn family_answer(name: &str, params: &[String], want_basis: bool) -> Result<FamilyAnswer> {
    let nums = |k: usize| -> Result<Vec<usize>> {
        if params.len() != k {
            bail!("family {name} takes {k} parameter(s), got {}", params.len());
        }
        params.iter().map(|p| Ok(p.parse()?)).collect()
    };
    let answer = match name {
        "wheel" => {
            let n = nums(1)?[0];
            let graph = families::wheel(n)?;
            let value = formulas::dimnl_wheel(n)?;
            let basis = if !want_basis {
                None
            } else if n >= 7 {
                Some(formulas::wheel_basis(n)?)
            } else {
                Some(solver::solve_exact(&graph, PairMode::NonAdjacent)?.basis)
            };
            FamilyAnswer { graph, value, basis, refs: &["thm41"] }
        }
        "complete" => {
            let n = nums(1)?[0];
            FamilyAnswer {
                graph: families::complete(n)?,
                value: 0,
                basis: want_basis.then(Vec::new),
                refs: &[],
            }
        }
        "complete_bipartite" => {
            let st = nums(2)?;
            let (s, t) = (st[0], st[1]);
            let graph = families::complete_bipartite(s, t)?;
            let value = if s + t < 3 { 0 } else { formulas::dimnl_complete_bipartite(s, t)? };
            // All but one vertex from each class.
            let basis = want_basis.then(|| {
                let mut b: Vec<usize> = (0..s.saturating_sub(1)).collect();
                b.extend(s..s + t - 1);
                b
            });
            FamilyAnswer { graph, value, basis, refs: &["prop52"] }
        }
        "path" | "star" | "spider" | "random_tree" => {
            let graph = match name {
                "path" => families::path(nums(1)?[0])?,
                "star" => families::star(nums(1)?[0])?,
                "spider" => {
                    if params.is_empty() {
                        bail!("family spider takes leg lengths");
                    }
                    let legs: Vec<usize> =
                        params.iter().map(|p| p.parse()).collect::<Result<_, _>>()?;
                    families::spider(&legs)?
                }
                _ => {
                    let ps = nums(2)?;
                    families::random_tree(ps[0], ps[1] as u64)?
                }
            };
            let value = if graph.n() <= 2 { 0 } else { formulas::dim_tree(&graph)? };
            let basis = want_basis.then(|| {
                if graph.n() <= 2 {
                    vec![]
                } else {
                    formulas::tree_metric_basis(&graph).expect("tree basis")
                }
            });
            FamilyAnswer { graph, value, basis, refs: &["prop22"] }
        }
        "cycle" => {
            let n = nums(1)?[0];
            let graph = families::cycle(n)?;
            let value = if n == 3 { 0 } else { 2 };
            let basis = if !want_basis {
                None
            } else {
                Some(solver::solve_exact(&graph, PairMode::NonAdjacent)?.basis)
            };
            FamilyAnswer { graph, value, basis, refs: &[] }
        }
        "random_block_graph" => {
            if params.len() < 2 {
                bail!("family random_block_graph takes block sizes then a seed");
            }
            let sizes: Vec<usize> = params[..params.len() - 1]
                .iter()
                .map(|p| p.parse())
                .collect::<Result<_, _>>()?;
            let seed: u64 = params[params.len() - 1].parse()?;
            let graph = families::random_block_graph(&sizes, seed)?;
            let formula = formulas::dimnl_block_graph(&graph)?;
            FamilyAnswer {
                graph,
                value: formula.value,
                basis: if want_basis { formula.witness } else { None },
                refs: &["thm31"],
            }
        }
        "random_connected" => {
            if params.len() != 3 {
                bail!("family random_connected takes n, p, seed");
            }
            let n: usize = params[0].parse()?;
            let p: f64 = params[1].parse()?;
            let seed: u64 = params[2].parse()?;
            let graph = families::random_connected(n, p, seed)?;
            let result = solver::solve_exact(&graph, PairMode::NonAdjacent)?;
            FamilyAnswer {
                graph,
                value: result.value,
                basis: want_basis.then_some(result.basis),
                refs: &[],
            }
        }
        other => bail!("unknown family {other:?}"),
    };
    Ok(answer)
}

fn family(name: &str, params: &[String], basis: bool, json: bool) -> Result<i32> {
    let started = Instant::now();
    let answer = family_answer(name, params, basis)?;
    let elapsed = started.elapsed().as_millis();
    if json {
        let doc = json!({
            "schema": 1,
            "invariant": "dim_nl",
            "family": name,
            "params": params,
            "graph6": emit_graph6(&answer.graph),
            "value": answer.value,
            "basis": answer.basis,
            "theorem_refs": answer.refs,
            "elapsed_ms": elapsed,
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!(
            "{name}({}) on {} vertices",
            params.join(", "),
            answer.graph.n()
        );
        println!("dim_nl = {}", answer.value);
        if let Some(b) = &answer.basis {
            println!("basis {}", fmt_set(b));
        }
    }
    Ok(0)
}

fn print_report(report: &VerificationReport) {
    println!("check {}: {}", report.theorem, report.description);
    println!(
        "instances: {}, failures: {}, skipped: {}, status: {:?}, elapsed: {} ms",
        report.instances,
        report.failures.len(),
        report.skipped.len(),
        report.status,
        report.elapsed_ms
    );
    for f in &report.failures {
        println!(
            "  FAIL graph {} | {} | expected {} | got {}",
            f.graph, f.context, f.expected, f.actual
        );
    }
    for s in &report.skipped {
        println!("  SKIP graph {} | {}", s.graph, s.reason);
    }
}

fn verify(
    theorem: &str,
    max_n: Option<usize>,
    seed: Option<u64>,
    samples: Option<usize>,
    json: bool,
) -> Result<i32> {
    let id: TheoremId = theorem
        .parse()
        .map_err(|_| anyhow!("unknown theorem id {theorem:?}; expected one of {}",
            TheoremId::ALL.map(|t| t.as_str()).join(" ")))?;
    let params = CampaignParams {
        max_n,
        samples,
        seed: seed.unwrap_or(1),
    };
    let report = run_campaign(id, &params);
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print_report(&report);
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn embed(input: &PathBuf, format: &str, solve: bool, json: bool) -> Result<i32> {
    let g = read_graph(input, format)?;
    let embedding = embed_supergraph(&g)?;
    let report = verify_embedding(&g, &embedding, solve)?;
    if json {
        let doc = json!({
            "schema": 1,
            "invariant": "dim_nl_upper_bound",
            "value": embedding.anchor_size(),
            "basis": embedding.anchor,
            "theorem_refs": ["thm61"],
            "classes": embedding.classes,
            "class_count": report.class_count,
            "supergraph6": emit_graph6(&embedding.supergraph),
            "diameter": report.diameter,
            "strict_power_gap": report.strict_power_gap,
            "solver_value": report.solver_value,
            "violations": report.violations,
            "elapsed_ms": 0,
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!(
            "input: {} vertices; clique cover classes: {}; anchor size: {}",
            g.n(),
            report.class_count,
            report.anchor_size
        );
        println!("supergraph: {} vertices, graph6 {}", embedding.supergraph.n(), emit_graph6(&embedding.supergraph));
        println!("classes:");
        for (i, class) in embedding.classes.iter().enumerate() {
            println!("  {i}: {}", fmt_set(class));
        }
        println!("anchor {} resolves: {}", fmt_set(&embedding.anchor), report.anchor_resolves);
        println!(
            "diameter {} (<= 4: {}; strict power gap: {})",
            report.diameter, report.diameter_at_most_4, report.strict_power_gap
        );
        if let Some(v) = report.solver_value {
            println!("solver dim_nl(supergraph) = {v} (bound {})", report.anchor_size);
        }
        for v in &report.violations {
            println!("VIOLATION: {v}");
        }
    }
    Ok(if report.all_ok() { 0 } else { 1 })
}

fn enumerate(n: usize, canonical: bool, checks: &[String]) -> Result<i32> {
    for c in checks {
        if !["eq1", "prop21", "prop51", "prop52"].contains(&c.as_str()) {
            bail!("unsupported enumeration check {c:?}");
        }
    }
    let mut count = 0usize;
    let mut failures = 0usize;
    for g in enumerate_connected(n, canonical)? {
        count += 1;
        for c in checks {
            if let Some(message) = enumeration_check_failure(c, &g)? {
                failures += 1;
                println!("FAIL {} on {}: {}", c, emit_graph6(&g), message);
            }
        }
    }
    println!(
        "connected graphs on {n} vertices{}: {count}",
        if canonical { " (up to isomorphism)" } else { "" }
    );
    if !checks.is_empty() {
        println!("checks {}: {failures} failure(s)", checks.join(","));
    }
    Ok(if failures == 0 { 0 } else { 1 })
}

fn enumeration_check_failure(check: &str, g: &Graph) -> Result<Option<String>> {
    let nl = solver::solve_exact(g, PairMode::NonAdjacent)?.value;
    let complete = g.edge_count() == g.n() * (g.n() - 1) / 2;
    Ok(match check {
        "eq1" => {
            let full = solver::solve_exact(g, PairMode::All)?.value;
            (nl > full).then(|| format!("nonlocal {nl} exceeds full {full}"))
        }
        "prop21" => {
            if complete {
                None
            } else {
                let witness = formulas::levels_complete_vertex(g)?;
                ((nl == 1) != witness.is_some())
                    .then(|| format!("value {nl} vs levels witness {witness:?}"))
            }
        }
        "prop51" => {
            let bound = formulas::omega_upper_bound(g);
            (nl > bound).then(|| format!("nonlocal {nl} exceeds n - omega = {bound}"))
        }
        "prop52" => {
            if g.n() < 3 {
                None
            } else {
                let bipartite_complete = structure::complete_bipartite_classes(g)?.is_some();
                ((nl + 2 == g.n()) != bipartite_complete)
                    .then(|| format!("value {nl} on n {} vs complete bipartite {bipartite_complete}", g.n()))
            }
        }
        _ => unreachable!("validated above"),
    })
}
