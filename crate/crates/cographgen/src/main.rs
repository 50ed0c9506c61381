//! Command line driver: generate, count, verify, bench.

use std::collections::HashSet;
use std::fs::File;
use std::io::{self, BufWriter, LineWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use cographgen::cotree::Cotree;
use cographgen::generator::{count_cographs, count_cographs_parallel, CographHandle, Generator};
use cographgen::graph::{complement_check, RootType, SimpleGraph};
use cographgen::oracle;
use cographgen::partition::Partition;
use cographgen::successor::{next_tree, next_tree_instrumented, StepWork};
use cographgen::{compare_trees, graph6, NodeId, NodeOrdering};

/// Streaming enumeration of unlabeled cographs via canonical cotrees.
#[derive(Parser)]
#[command(name = "cographgen", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every cograph on n vertices in canonical order
    Generate(GenerateArgs),
    /// Print the number of cographs on n vertices
    Count(CountArgs),
    /// Cross-check the enumeration against brute force
    Verify(VerifyArgs),
    /// Measure per-output delay and per-step work
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Number of vertices
    #[arg(short = 'n', long = "vertices", value_name = "N",
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    n: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Cotree)]
    format: Format,
    /// Stop after this many output lines
    #[arg(long, value_name = "COUNT",
          value_parser = clap::builder::RangedU64ValueParser::<u64>::new().range(1..))]
    limit: Option<u64>,
    /// Emit only the connected (join rooted) graph of each pair
    #[arg(long, conflicts_with = "trees_only")]
    connected_only: bool,
    /// Emit each tree once, with no root type prefix (cotree format only)
    #[arg(long)]
    trees_only: bool,
    /// Write to this file instead of standard output
    #[arg(short, long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CountArgs {
    /// Number of vertices
    #[arg(short = 'n', long = "vertices", value_name = "N",
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    n: usize,
    /// Counting workers, each taking whole root partition runs
    #[arg(long, default_value_t = 1,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    threads: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Number of vertices
    #[arg(short = 'n', long = "vertices", value_name = "N",
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    n: usize,
    /// Run the brute force census even at n = 7 (minutes, not seconds)
    #[arg(long)]
    long_oracle: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Number of vertices
    #[arg(short = 'n', long = "vertices", value_name = "N",
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(2..))]
    n: usize,
    /// Advance at most this many trees per pass
    #[arg(long, value_name = "TREES",
          value_parser = clap::builder::RangedU64ValueParser::<u64>::new().range(1..))]
    limit: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Lines `0:<tree>` and `1:<tree>`
    Cotree,
    /// One graph6 string per line
    Graph6,
    /// One line per graph: `n m` then the edge pairs
    Edgelist,
    /// One DOT block per graph, named by ordinal
    Dot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Count(args) => cmd_count(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cographgen: {e}");
            ExitCode::FAILURE
        }
    }
}

fn usage_error(msg: &str) -> ! {
    Cli::command()
        .error(clap::error::ErrorKind::InvalidValue, msg)
        .exit()
}

fn cmd_generate(args: GenerateArgs) -> io::Result<ExitCode> {
    if args.trees_only && args.format != Format::Cotree {
        usage_error("--trees-only only applies to the cotree format");
    }
    if args.format == Format::Graph6 && args.n > graph6::MAX_VERTICES {
        usage_error("graph6 supports at most 258047 vertices");
    }
    match &args.output {
        Some(path) => {
            let mut out = BufWriter::new(File::create(path)?);
            stream(&args, &mut out)?;
            out.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut out = LineWriter::new(stdout.lock());
            stream(&args, &mut out)?;
            out.flush()?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn stream(args: &GenerateArgs, out: &mut impl Write) -> io::Result<()> {
    let mut emitted = 0u64;
    for handle in Generator::new(args.n) {
        let keep = if args.connected_only {
            handle.root_type() == RootType::Join
        } else if args.trees_only {
            // The single-vertex stream holds one join rooted handle.
            handle.root_type() == RootType::Union || handle.tree().leaves() == 1
        } else {
            true
        };
        if !keep {
            continue;
        }
        render(&handle, args, out)?;
        emitted += 1;
        if args.limit == Some(emitted) {
            break;
        }
    }
    Ok(())
}

fn render(handle: &CographHandle, args: &GenerateArgs, out: &mut impl Write) -> io::Result<()> {
    match args.format {
        Format::Cotree => {
            if args.trees_only {
                writeln!(out, "{}", handle.tree().serialize())
            } else {
                writeln!(out, "{}", handle.canonical_line())
            }
        }
        Format::Graph6 => {
            let g6 = graph6::encode(&handle.to_graph())
                .expect("the vertex bound was checked before streaming");
            writeln!(out, "{g6}")
        }
        Format::Edgelist => {
            let g = handle.to_graph();
            let mut line = format!("{} {}", g.vertex_count(), g.edge_count());
            for (u, v) in g.edges() {
                line.push_str(&format!(" {u} {v}"));
            }
            writeln!(out, "{line}")
        }
        Format::Dot => {
            let name = format!("g{}", handle.ordinal());
            write!(out, "{}", handle.to_graph().to_dot(&name))
        }
    }
}

fn cmd_count(args: CountArgs) -> io::Result<ExitCode> {
    let m = if args.threads > 1 {
        count_cographs_parallel(args.n, args.threads)
    } else {
        count_cographs(args.n)
    };
    writeln!(io::stdout().lock(), "{m}")?;
    Ok(ExitCode::SUCCESS)
}

struct Report {
    failed: bool,
}

impl Report {
    fn check(&mut self, name: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => println!("{name:<11} PASS  {detail}"),
            Err(detail) => {
                self.failed = true;
                println!("{name:<11} FAIL  {detail}");
            }
        }
    }

    fn skip(&mut self, name: &str, why: &str) {
        println!("{name:<11} SKIP  {why}");
    }
}

fn cmd_verify(args: VerifyArgs) -> io::Result<ExitCode> {
    let n = args.n;
    let census_cap = if args.long_oracle { 7 } else { 6 };
    let mut r = Report { failed: false };

    if (2..=12).contains(&n) {
        r.check("partitions", check_partition_chain(n));
    } else {
        r.skip("partitions", "chain comparison covers n = 2..12");
    }
    if (2..=9).contains(&n) {
        r.check("trees", check_tree_chain(n));
    } else {
        r.skip("trees", "brute force tree enumeration covers n = 2..9");
    }
    if n <= census_cap {
        r.check("count", check_count(n));
        r.check("graph forms", check_graph_forms(n));
    } else if n == 7 {
        r.skip("count", "pass --long-oracle to brute force n = 7");
        r.skip("graph forms", "pass --long-oracle to brute force n = 7");
    } else {
        r.skip("count", "brute force census covers n = 1..7");
        r.skip("graph forms", "brute force census covers n = 1..7");
    }
    if n <= 8 {
        r.check("graphs", check_graph_invariants(n));
    } else {
        r.skip("graphs", "induced path scan covers n = 1..8");
    }
    r.check("internal", check_internal(n));

    println!("result: {}", if r.failed { "FAIL" } else { "PASS" });
    Ok(if r.failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn check_partition_chain(n: usize) -> Result<String, String> {
    let expected = oracle::all_partitions(n);
    let mut chain = Vec::with_capacity(expected.len());
    let mut p = Partition::minimum(n);
    loop {
        let next = p.successor();
        chain.push(p);
        match next {
            Some(q) => p = q,
            None => break,
        }
    }
    if chain.len() != expected.len() {
        return Err(format!(
            "chain visits {} partitions, brute force finds {}",
            chain.len(),
            expected.len()
        ));
    }
    for (i, (got, want)) in chain.iter().zip(&expected).enumerate() {
        if got != want {
            return Err(format!(
                "first mismatch at index {i}: chain {got}, brute force {want}"
            ));
        }
    }
    Ok(format!(
        "successor chain matches brute force ({} partitions)",
        chain.len()
    ))
}

fn check_tree_chain(n: usize) -> Result<String, String> {
    let expected: Vec<String> = oracle::all_trees(n).iter().map(Cotree::serialize).collect();
    let mut tree = Cotree::minimum(n);
    let mut chain = Vec::with_capacity(expected.len());
    loop {
        chain.push(tree.serialize());
        if !next_tree(&mut tree) {
            break;
        }
    }
    if chain.len() != expected.len() {
        return Err(format!(
            "chain visits {} trees, brute force finds {}",
            chain.len(),
            expected.len()
        ));
    }
    for (i, (got, want)) in chain.iter().zip(&expected).enumerate() {
        if got != want {
            return Err(format!(
                "first mismatch at index {i}: chain {got}, brute force {want}"
            ));
        }
    }
    Ok(format!(
        "successor chain matches brute force ({} trees)",
        chain.len()
    ))
}

fn check_count(n: usize) -> Result<String, String> {
    let got = count_cographs(n);
    let want = oracle::count_cographs_bruteforce(n);
    if got == want {
        Ok(format!("generator counts {got}, brute force agrees"))
    } else {
        Err(format!("generator counts {got}, brute force finds {want}"))
    }
}

fn check_graph_forms(n: usize) -> Result<String, String> {
    let mut got = HashSet::new();
    for h in Generator::new(n) {
        if !got.insert(oracle::canonical_form(&h.to_graph())) {
            return Err(format!(
                "two outputs share a canonical form, second is {}",
                h.canonical_line()
            ));
        }
    }
    let want = oracle::bruteforce_cograph_forms(n);
    if got == want {
        return Ok(format!("{} canonical forms match the census", got.len()));
    }
    for h in Generator::new(n) {
        let g = h.to_graph();
        if !want.contains(&oracle::canonical_form(&g)) {
            let g6 = graph6::encode(&g).expect("census graphs are tiny");
            return Err(format!(
                "output {} ({g6}) is not in the census",
                h.canonical_line()
            ));
        }
    }
    Err(format!(
        "census has {} classes, the output covers {}",
        want.len(),
        got.len()
    ))
}

fn check_graph_invariants(n: usize) -> Result<String, String> {
    let mut pairs = 0u64;
    let mut pending: Option<(SimpleGraph, String)> = None;
    for h in Generator::new(n) {
        let g = h.to_graph();
        if !oracle::is_p4_free(&g) {
            return Err(format!(
                "output {} contains an induced four-vertex path",
                h.canonical_line()
            ));
        }
        match h.root_type() {
            RootType::Union => {
                if g.is_connected() {
                    return Err(format!("union output {} is connected", h.canonical_line()));
                }
                pending = Some((g, h.canonical_line()));
            }
            RootType::Join => {
                if !g.is_connected() {
                    return Err(format!("join output {} is disconnected", h.canonical_line()));
                }
                if let Some((union_graph, union_line)) = pending.take() {
                    if !complement_check(&union_graph, &g) {
                        return Err(format!(
                            "{} is not the complement of {union_line}",
                            h.canonical_line()
                        ));
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!(
        "all outputs P4 free, {pairs} complement pairs, connectivity matches root types"
    ))
}

fn labels_consistent(t: &Cotree) -> bool {
    fn walk(t: &Cotree, v: NodeId) -> bool {
        if t.is_leaf(v) {
            return t.leaf_count(v) == 1;
        }
        let children = t.children(v);
        children.len() >= 2
            && t.leaf_count(v) == children.iter().map(|&c| t.leaf_count(c)).sum::<usize>()
            && children.iter().all(|&c| walk(t, c))
    }
    walk(t, t.root())
}

fn check_internal(n: usize) -> Result<String, String> {
    let mut outputs = 0u64;
    let mut prev: Option<(Cotree, RootType)> = None;
    for h in Generator::new(n) {
        outputs += 1;
        let t = h.tree();
        if !t.is_ordered() {
            return Err(format!("output {} is not ordered", h.canonical_line()));
        }
        if !labels_consistent(t) {
            return Err(format!("output {} has stale labels", h.canonical_line()));
        }
        if t.node_count() > 2 * n - 1 {
            return Err(format!(
                "output {} uses {} nodes",
                h.canonical_line(),
                t.node_count()
            ));
        }
        if let Some((prev_tree, prev_type)) = &prev {
            let ok = match (prev_type, h.root_type()) {
                (RootType::Union, RootType::Join) => {
                    compare_trees(prev_tree, t) == NodeOrdering::Equivalent
                }
                (RootType::Join, RootType::Union) => {
                    compare_trees(prev_tree, t) == NodeOrdering::Less
                }
                _ => false,
            };
            if !ok {
                return Err(format!("output {} breaks the total order", h.canonical_line()));
            }
        }
        prev = Some((t.clone(), h.root_type()));
    }
    if n <= 10 {
        let counted = count_cographs(n);
        if counted != outputs {
            return Err(format!(
                "count reports {counted} but the stream held {outputs}"
            ));
        }
    }
    Ok(format!(
        "{outputs} outputs ordered, labeled, strictly increasing"
    ))
}

fn cmd_bench(args: BenchArgs) -> io::Result<ExitCode> {
    let n = args.n;
    let tree_cap = args.limit.unwrap_or(u64::MAX);

    // Counting pass: successor steps only, nothing materialized.
    let count_start = Instant::now();
    let mut tree = Cotree::minimum(n);
    let count_first = count_start.elapsed();
    let mut trees = 1u64;
    let mut total_work = 0u64;
    let mut max_work = 0u64;
    let mut max_step = Duration::ZERO;
    let mut prev = Instant::now();
    while trees < tree_cap {
        let mut work = StepWork::default();
        if !next_tree_instrumented(&mut tree, &mut work) {
            break;
        }
        let now = Instant::now();
        max_step = max_step.max(now - prev);
        prev = now;
        trees += 1;
        total_work += work.total();
        max_work = max_work.max(work.total());
    }
    let count_total = count_start.elapsed();
    let steps = trees.saturating_sub(1).max(1);
    let outputs = 2 * trees;

    // Serialization pass: full handles with rendered lines.
    let output_cap = tree_cap.saturating_mul(2);
    let serial_start = Instant::now();
    let mut serial_outputs = 0u64;
    let mut bytes = 0u64;
    let mut serial_first = Duration::ZERO;
    let mut serial_max = Duration::ZERO;
    let mut prev = Instant::now();
    for h in Generator::new(n) {
        bytes += h.canonical_line().len() as u64;
        let now = Instant::now();
        if serial_outputs == 0 {
            serial_first = serial_start.elapsed();
        }
        serial_max = serial_max.max(now - prev);
        prev = now;
        serial_outputs += 1;
        if serial_outputs >= output_cap {
            break;
        }
    }
    let serial_total = serial_start.elapsed();

    let out = io::stdout();
    let mut out = out.lock();
    writeln!(out, "n={n}")?;
    writeln!(out, "trees={trees}")?;
    writeln!(out, "outputs={outputs}")?;
    writeln!(out, "count_time_to_first_ns={}", count_first.as_nanos())?;
    writeln!(out, "count_total_ns={}", count_total.as_nanos())?;
    writeln!(
        out,
        "count_mean_delay_ns={}",
        count_total.as_nanos() / u128::from(outputs)
    )?;
    writeln!(out, "count_max_delay_ns={}", max_step.as_nanos())?;
    writeln!(
        out,
        "count_mean_step_work={:.2}",
        total_work as f64 / steps as f64
    )?;
    writeln!(out, "count_max_step_work={max_work}")?;
    writeln!(
        out,
        "count_max_step_work_per_n={:.3}",
        max_work as f64 / n as f64
    )?;
    writeln!(out, "serial_outputs={serial_outputs}")?;
    writeln!(out, "serial_bytes={bytes}")?;
    writeln!(out, "serial_time_to_first_ns={}", serial_first.as_nanos())?;
    writeln!(out, "serial_total_ns={}", serial_total.as_nanos())?;
    writeln!(
        out,
        "serial_mean_delay_ns={}",
        serial_total.as_nanos() / u128::from(serial_outputs.max(1))
    )?;
    writeln!(out, "serial_max_delay_ns={}", serial_max.as_nanos())?;
    Ok(ExitCode::SUCCESS)
}
