//! Command grammar and dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use foldkit_core::enumeration::{
    catalan, closed_walks, closed_walks_series, count_foldable, count_one_foldable, one_fold_growth_rate,
};
use foldkit_core::foldings::{count_foldings, enumerate_foldings, greedy_fold, GreedyFold, Matching};
use foldkit_core::moves::{apply_move, available_moves, build_fold_graph, MoveKind};
use foldkit_core::rsets::{r_superset, top_gap_report, Family, RsetError, WordSpace};
use foldkit_core::trees::{classify_one_foldable, matching_to_tree};
use foldkit_core::words::{doubled, is_alternating, parse_word, Word};
use serde_json::{json, Value};

use crate::census::{budget_from_env, parallel_census, space_name, CensusError, CensusOptions};
use crate::output::{dot, edge_move, num, pairs_json, Format, Report};

#[derive(Debug, Parser)]
#[command(name = "foldkit", version, about = "Word foldings on plane trees")]
struct Cli {
    /// Output format; `dot` only for `fold graph`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Foldings of a single word.
    #[command(subcommand)]
    Fold(FoldCommand),
    /// Word transforms and checks.
    #[command(subcommand)]
    Word(WordCommand),
    /// Closed-form counts over all words of a length.
    #[command(subcommand)]
    Enum(EnumCommand),
    /// Which fold counts occur.
    #[command(subcommand)]
    Rset(RsetCommand),
    /// Words with a known number of foldings.
    Family(FamilyArgs),
    /// Integer sequences.
    #[command(subcommand)]
    Seq(SeqCommand),
}

#[derive(Debug, Args)]
struct WordArg {
    /// Compact (`AaBb`) or token (`A1 a1 A2 a2`) form.
    word: String,
    /// Alphabet size; defaults to the largest letter index.
    #[arg(long)]
    m: Option<u32>,
}

#[derive(Debug, Subcommand)]
enum FoldCommand {
    Count(WordArg),
    Greedy(WordArg),
    Enumerate(WordArg),
    Graph(WordArg),
    Classify(WordArg),
    /// Moves available from a folding (the greedy one by default).
    Moves {
        #[command(flatten)]
        word: WordArg,
        /// 1-based pair list, e.g. `[[1,4],[2,3]]`.
        #[arg(long)]
        from: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum WordCommand {
    Double(WordArg),
    Check(WordArg),
}

#[derive(Debug, Args)]
struct RangeArgs {
    #[arg(long, conflicts_with = "upto", required_unless_present = "upto")]
    n: Option<usize>,
    /// Every n from 0 to this value.
    #[arg(long)]
    upto: Option<usize>,
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Compare against exhaustive counting; exits 1 on any mismatch.
    #[arg(long)]
    verify_brute: bool,
}

impl RangeArgs {
    fn ns(&self) -> std::ops::RangeInclusive<usize> {
        match (self.n, self.upto) {
            (Some(n), _) => n..=n,
            (None, Some(u)) => 0..=u,
            (None, None) => unreachable!("clap requires one of --n, --upto"),
        }
    }
}

#[derive(Debug, Subcommand)]
enum EnumCommand {
    OneFoldable(RangeArgs),
    Foldable(RangeArgs),
    Walks(RangeArgs),
    GrowthRate {
        #[arg(long, default_value_t = 2f64.powi(-25))]
        tol: f64,
    },
}

#[derive(Debug, Subcommand)]
enum RsetCommand {
    Compute {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long)]
        threads: Option<usize>,
        /// Directory for per-block shards; existing shards are reused.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Restrict to alternating words.
        #[arg(long)]
        alternating: bool,
    },
    Superset {
        #[arg(long)]
        n: usize,
    },
    Topgap {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyName {
    Maximal,
    Product,
    Nearmax,
    Jcl,
    Small,
    Staircase,
    Three,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    name: FamilyName,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    /// Count the foldings and compare; exits 1 on mismatch.
    #[arg(long)]
    verify: bool,
}

#[derive(Debug, Subcommand)]
enum SeqCommand {
    Catalan {
        #[arg(long)]
        upto: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

fn domain(e: impl ToString) -> Failure {
    Failure::Domain(e.to_string())
}

impl From<CensusError> for Failure {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::BadBudget(_) => Failure::Usage(e.to_string()),
            e => Failure::Domain(e.to_string()),
        }
    }
}

/// Runs one invocation and returns the exit code: 0 success, 1 domain error,
/// 2 usage error. Diagnostics go to `err` as a single line.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            let _ = writeln!(err, "{}", line.join(" "));
            return 2;
        }
    };
    let format = cli.format;
    let result = dispatch(cli.command).and_then(|(report, status)| {
        let text = report
            .render(format)
            .ok_or_else(|| Failure::Usage("error: dot output is only available for `fold graph`".into()))?;
        Ok((text, status))
    });
    match result {
        Ok((text, status)) => {
            let _ = out.write_all(text.as_bytes());
            match status {
                None => 0,
                Some(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    1
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "{}", prefixed(&msg));
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "{}", prefixed(&msg));
            1
        }
    }
}

fn prefixed(msg: &str) -> String {
    if msg.starts_with("error:") {
        msg.to_string()
    } else {
        format!("error: {msg}")
    }
}

/// A report plus an optional failed-check message: the report is still printed,
/// then the command exits 1.
type Outcome = Result<(Report, Option<String>), Failure>;

fn ok(report: Report) -> Outcome {
    Ok((report, None))
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Fold(c) => fold(c),
        Command::Word(c) => word_cmd(c),
        Command::Enum(c) => enumerate(c),
        Command::Rset(c) => rset(c),
        Command::Family(a) => family(a),
        Command::Seq(SeqCommand::Catalan { upto }) => {
            let rows: Vec<Vec<String>> = (0..=upto).map(|i| vec![i.to_string(), catalan(i).to_string()]).collect();
            let values: Vec<Value> = (0..=upto).map(|i| num(catalan(i))).collect();
            ok(Report::new(vec!["i", "catalan"], rows, json!({ "sequence": "catalan", "values": values })))
        }
    }
}

fn parse(arg: &WordArg) -> Result<Word, Failure> {
    parse_word(&arg.word, arg.m).map_err(|e| Failure::Usage(format!("error: invalid word {:?}: {e}", arg.word)))
}

fn greedy_or_fail(w: &Word) -> Result<Matching, Failure> {
    match greedy_fold(w) {
        GreedyFold::Folded(m) => Ok(m),
        GreedyFold::NotFoldable { open } => {
            let open: Vec<String> = open.iter().map(|p| (p + 1).to_string()).collect();
            Err(domain(format!("word {w} is not foldable; unmatched positions {}", open.join(","))))
        }
    }
}

fn fold(c: FoldCommand) -> Outcome {
    match c {
        FoldCommand::Count(a) => {
            let w = parse(&a)?;
            let count = count_foldings(&w);
            let r = Report::new(
                vec!["word", "count"],
                vec![vec![w.to_string(), count.to_string()]],
                json!({ "word": w.to_string(), "count": num(&count) }),
            );
            ok(r.with_text(count.to_string()))
        }
        FoldCommand::Greedy(a) => {
            let w = parse(&a)?;
            let m = greedy_or_fail(&w)?;
            let tree = matching_to_tree(&m).to_string();
            let r = Report::new(
                vec!["word", "pairs", "tree"],
                vec![vec![w.to_string(), m.to_string(), tree.clone()]],
                json!({ "word": w.to_string(), "pairs": pairs_json(&m), "tree": tree }),
            );
            ok(r.with_text(m.to_string()))
        }
        FoldCommand::Enumerate(a) => {
            let w = parse(&a)?;
            let all = enumerate_foldings(&w);
            let rows = all
                .iter()
                .enumerate()
                .map(|(i, m)| vec![(i + 1).to_string(), m.to_string(), matching_to_tree(m).to_string()])
                .collect();
            let foldings: Vec<Value> = all
                .iter()
                .map(|m| json!({ "pairs": pairs_json(m), "tree": matching_to_tree(m).to_string() }))
                .collect();
            let json = json!({ "word": w.to_string(), "count": all.len(), "foldings": foldings });
            ok(Report::new(vec!["index", "pairs", "tree"], rows, json))
        }
        FoldCommand::Graph(a) => {
            let w = parse(&a)?;
            let g = build_fold_graph(&w);
            let labels: Vec<String> = g.edges().iter().map(|&(u, v)| edge_move(&g, u, v)).collect();
            let rows = g
                .edges()
                .iter()
                .zip(&labels)
                .map(|(&(u, v), mv)| vec![u.to_string(), v.to_string(), mv.clone()])
                .collect();
            let nodes: Vec<Value> = g.nodes().iter().map(pairs_json).collect();
            let edges: Vec<Value> = g
                .edges()
                .iter()
                .zip(&labels)
                .map(|(&(u, v), mv)| json!({ "from": u, "to": v, "kind": 1, "move": mv }))
                .collect();
            let mut text = String::from("nodes");
            for (i, n) in g.nodes().iter().enumerate() {
                text.push_str(&format!("\n  {i}  {n}"));
            }
            text.push_str("\nedges");
            for (&(u, v), mv) in g.edges().iter().zip(&labels) {
                text.push_str(&format!("\n  {u} -> {v}  {mv}"));
            }
            let mut r = Report::new(
                vec!["from", "to", "move"],
                rows,
                json!({ "word": w.to_string(), "nodes": nodes, "edges": edges }),
            )
            .with_text(text);
            r.dot = Some(dot(&g));
            ok(r)
        }
        FoldCommand::Classify(a) => {
            let w = parse(&a)?;
            let count = count_foldings(&w);
            let one = classify_one_foldable(&w);
            let greedy = greedy_fold(&w).into_matching().map(|m| m.to_string());
            let rows = vec![
                vec!["word".into(), w.to_string()],
                vec!["foldable".into(), w.is_foldable().to_string()],
                vec!["count".into(), count.to_string()],
                vec!["one_foldable".into(), one.to_string()],
                vec!["greedy".into(), greedy.clone().unwrap_or_else(|| "-".into())],
            ];
            let json = json!({
                "word": w.to_string(),
                "foldable": w.is_foldable(),
                "count": num(&count),
                "one_foldable": one,
                "greedy": greedy,
            });
            ok(Report::new(vec!["field", "value"], rows, json))
        }
        FoldCommand::Moves { word, from } => {
            let w = parse(&word)?;
            let start = match from {
                Some(text) => {
                    let pairs: Vec<(usize, usize)> = serde_json::from_str(&text)
                        .map_err(|e| Failure::Usage(format!("error: invalid pair list {text:?}: {e}")))?;
                    Matching::from_one_based_pairs(w.len(), &pairs).map_err(domain)?
                }
                None => greedy_or_fail(&w)?,
            };
            let moves = available_moves(&w, &start).map_err(domain)?;
            let results: Vec<Matching> = moves
                .iter()
                .map(|mv| apply_move(&start, mv).expect("available moves apply"))
                .collect();
            let rows = moves
                .iter()
                .zip(&results)
                .map(|(mv, r)| vec![mv.to_string(), r.to_string()])
                .collect();
            let list: Vec<Value> = moves
                .iter()
                .zip(&results)
                .map(|(mv, r)| {
                    let p: Vec<Value> = mv.positions.iter().map(|p| num(p + 1)).collect();
                    let kind = match mv.kind {
                        MoveKind::Type1 => 1,
                        MoveKind::Type2 => 2,
                    };
                    json!({ "kind": kind, "positions": p, "result": pairs_json(r) })
                })
                .collect();
            let json = json!({ "word": w.to_string(), "from": pairs_json(&start), "moves": list });
            ok(Report::new(vec!["move", "result"], rows, json))
        }
    }
}

fn word_cmd(c: WordCommand) -> Outcome {
    match c {
        WordCommand::Double(a) => {
            let w = parse(&a)?;
            let hat = doubled(&w).map_err(domain)?;
            let r = Report::new(
                vec!["word", "doubled"],
                vec![vec![w.to_string(), hat.to_string()]],
                json!({ "word": w.to_string(), "doubled": hat.to_string() }),
            );
            ok(r.with_text(hat.to_string()))
        }
        WordCommand::Check(a) => {
            let w = parse(&a)?;
            let rows = vec![
                vec!["word".into(), w.to_string()],
                vec!["length".into(), w.len().to_string()],
                vec!["alphabet".into(), w.alphabet_size().to_string()],
                vec!["foldable".into(), w.is_foldable().to_string()],
                vec!["alternating".into(), is_alternating(&w).to_string()],
            ];
            let json = json!({
                "word": w.to_string(),
                "length": w.len(),
                "alphabet": w.alphabet_size(),
                "foldable": w.is_foldable(),
                "alternating": is_alternating(&w),
            });
            ok(Report::new(vec!["field", "value"], rows, json))
        }
    }
}

/// Exhaustive census over all words of length `2n`, respecting the budget.
fn census_counts(n: usize, m: u32) -> Result<std::collections::BTreeMap<u128, u64>, Failure> {
    let opts = CensusOptions { threads: None, checkpoint: None, budget: budget_from_env()? };
    Ok(parallel_census(n, m, WordSpace::All, &opts)?.counts)
}

fn enumerate(c: EnumCommand) -> Outcome {
    let (name, args) = match c {
        EnumCommand::GrowthRate { tol } => {
            let p = one_fold_growth_rate(tol).map_err(|e| Failure::Usage(format!("error: {e}")))?;
            let rows = vec![vec![format!("{:.12}", p.x), format!("{:.12}", p.y), format!("{:.14}", p.base)]];
            let json = json!({ "x": p.x, "y": p.y, "base": p.base, "tolerance": p.tolerance });
            return ok(Report::new(vec!["x", "y", "base"], rows, json));
        }
        EnumCommand::OneFoldable(a) => ("one-foldable", a),
        EnumCommand::Foldable(a) => ("foldable", a),
        EnumCommand::Walks(a) => ("walks", a),
    };
    if args.m == 0 {
        return Err(Failure::Usage("error: --m must be at least 1".into()));
    }
    let series = if name == "walks" {
        Some(closed_walks_series(*args.ns().end(), args.m).map_err(domain)?)
    } else {
        None
    };
    let mut rows = Vec::new();
    let mut records = Vec::new();
    let mut mismatches = Vec::new();
    for n in args.ns() {
        let value = match name {
            "one-foldable" => count_one_foldable(n as u64, args.m),
            "foldable" => count_foldable(n, args.m),
            _ => closed_walks(n, args.m).map_err(domain)?,
        };
        let mut row = vec![n.to_string(), value.to_string()];
        let mut record = json!({ "n": n, "value": num(&value) });
        if args.verify_brute {
            let check: String = match name {
                "one-foldable" => census_counts(n, args.m)?.get(&1).copied().unwrap_or(0).to_string(),
                "foldable" => {
                    let counts = census_counts(n, args.m)?;
                    let total: u128 = counts.values().map(|&c| c as u128).sum();
                    (total - counts.get(&0).copied().unwrap_or(0) as u128).to_string()
                }
                _ => series.as_ref().expect("series computed")[n].to_string(),
            };
            if check != value.to_string() {
                mismatches.push(n.to_string());
            }
            record["brute"] = num(&check);
            row.push(check);
        }
        rows.push(row);
        records.push(record);
    }
    let header = if args.verify_brute { vec!["n", "value", "brute"] } else { vec!["n", "value"] };
    let json = json!({ "count": name, "m": args.m, "rows": records, "verified": args.verify_brute && mismatches.is_empty() });
    let status = (!mismatches.is_empty()).then(|| format!("formula and brute force disagree at n = {}", mismatches.join(",")));
    Ok((Report::new(header, rows, json), status))
}

fn list_json(values: impl IntoIterator<Item = u128>) -> Value {
    Value::Array(values.into_iter().map(num).collect())
}

fn joined(values: impl IntoIterator<Item = u128>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn rset(c: RsetCommand) -> Outcome {
    match c {
        RsetCommand::Compute { n, m, threads, checkpoint, alternating } => {
            if threads == Some(0) {
                return Err(Failure::Usage("error: --threads must be at least 1".into()));
            }
            let space = if alternating { WordSpace::Alternating } else { WordSpace::All };
            let opts = CensusOptions { threads, checkpoint, budget: budget_from_env()? };
            let census = parallel_census(n, m, space, &opts)?;
            let rows = census.counts.iter().map(|(k, w)| vec![k.to_string(), w.to_string()]).collect();
            let counts: Vec<Value> = census.counts.iter().map(|(&k, &w)| json!({ "k": num(k), "words": w })).collect();
            let json = json!({
                "n": n,
                "m": m,
                "space": space_name(space),
                "words": census.words(),
                "r_set": list_json(census.r_set()),
                "counts": counts,
            });
            ok(Report::new(vec!["k", "words"], rows, json))
        }
        RsetCommand::Superset { n } => {
            let set = r_superset(n).map_err(domain)?;
            let rows = set.iter().map(|v| vec![v.to_string()]).collect();
            let json = json!({ "n": n, "superset": list_json(set.iter().copied()) });
            ok(Report::new(vec!["value"], rows, json).with_text(joined(set.iter().copied())))
        }
        RsetCommand::Topgap { n } => match top_gap_report(n) {
            Ok(r) => {
                let gaps: Vec<Value> = r.gaps.iter().map(|&(lo, hi)| Value::Array(vec![num(lo), num(hi)])).collect();
                let rows = vec![
                    vec!["n".into(), n.to_string()],
                    vec!["threshold".into(), r.threshold.to_string()],
                    vec!["top_values".into(), joined(r.top_values)],
                    vec!["above_threshold".into(), joined(r.above_threshold.iter().copied())],
                    vec!["gaps".into(), r.gaps.len().to_string()],
                    vec!["holds".into(), "true".into()],
                ];
                let json = json!({
                    "n": n,
                    "threshold": num(r.threshold),
                    "top_values": list_json(r.top_values),
                    "above_threshold": list_json(r.above_threshold.iter().copied()),
                    "gaps": gaps,
                    "holds": true,
                });
                ok(Report::new(vec!["field", "value"], rows, json))
            }
            Err(RsetError::InvalidParameter(msg)) => Err(Failure::Usage(format!("error: {msg}"))),
            Err(e) => Err(domain(e)),
        },
    }
}

fn family(a: FamilyArgs) -> Outcome {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::Usage(format!("error: {:?} needs --{flag}", a.name).to_lowercase()))
    };
    let n = a.n;
    let f = match a.name {
        FamilyName::Maximal => Family::Maximal { n },
        FamilyName::Product => Family::Product { t: need(a.t, "t")?, n },
        FamilyName::Nearmax => Family::NearMax { n },
        FamilyName::Jcl => Family::Jcl { j: need(a.j, "j")?, l: need(a.l, "l")?, n },
        FamilyName::Small => Family::Small { l: need(a.l, "l")?, n },
        FamilyName::Staircase => Family::Staircase { i: need(a.i, "i")?, n },
        FamilyName::Three => Family::Three { n },
    };
    let w = f.word().map_err(|e| Failure::Usage(format!("error: {e}")))?;
    let expected = f.expected().map_err(domain)?;
    let mut header = vec!["family", "word", "expected"];
    let mut row = vec![f.to_string(), w.to_string(), expected.to_string()];
    let mut json = json!({ "family": f.to_string(), "word": w.to_string(), "expected": num(&expected) });
    let mut status = None;
    if a.verify {
        let count = count_foldings(&w);
        header.push("count");
        row.push(count.to_string());
        json["count"] = num(&count);
        json["verified"] = Value::Bool(count == expected);
        if count != expected {
            status = Some(format!("{f}: expected {expected} foldings, counted {count}"));
        }
    }
    Ok((Report::new(header, vec![row], json), status))
}
