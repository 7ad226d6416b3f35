//! `irred`: classification queries, partition enumeration, permutation-module
//! invariants and verification sweeps from the command line.
//!
//! Exit codes: 0 on success; 1 when `--strict` is set and the answer is
//! "reducible", "not applicable" or a failed suite; 2 on malformed input;
//! 3 if an internal invariant breaks.

use std::path::PathBuf;
use std::process::exit;

use clap::{Parser, Subcommand};

use irred::branching::{js_truncation, reachable};
use irred::mullineux::mullineux_map;
use irred::partitions::{enumerate_p_regular, enumerate_splitting, Partition};
use irred::permmod::{invariant_dim, ModuleKind, ModuleSpec, SubgroupDescriptor};
use irred::verdicts::{classify, Outcome, RestrictionQuery, Verdict};
use irred::verify::{run_suite, suites, SuiteOptions, SuiteReport};

#[derive(Parser)]
#[command(
    name = "irred",
    version,
    about = "Irreducible restrictions of alternating-group representations: \
             queries, enumeration, invariants and verification suites"
)]
struct Cli {
    /// Worker threads for sweep fan-out (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Decide whether E^λ_± stays irreducible on restriction to a subgroup.
    Classify {
        /// Field characteristic (a prime).
        #[arg(long)]
        p: u32,
        /// Partition as a comma-separated list, e.g. 4,3,1.
        #[arg(long)]
        lambda: String,
        /// Subgroup: point-stabilizer | intransitive:a,b | young:a,b,... |
        /// wreath:axb | full | primitive.
        #[arg(long)]
        subgroup: String,
        /// Emit the verdict as canonical JSON.
        #[arg(long)]
        json: bool,
        /// Exit 1 unless the verdict is "irreducible".
        #[arg(long)]
        strict: bool,
    },
    /// List p-regular partitions of n, or only the splitting class.
    Enumerate {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
        /// Restrict to partitions whose irreducible splits over A_n.
        #[arg(long)]
        splitting: bool,
        #[arg(long)]
        json: bool,
    },
    /// Fixed-space dimensions of permutation modules under a subgroup.
    Invariants {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        subgroup: String,
        /// One of s1star, s2star, m1, m2, ... (default: a small survey).
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Apply the Mullineux map to a p-regular partition.
    Mullineux {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        json: bool,
    },
    /// JS truncation of a 2-regular partition.
    Jstrunc {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        json: bool,
    },
    /// Partitions reachable from λ by normal-node removals down to size m.
    Reachable {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        lambda: String,
        /// Target size.
        #[arg(long)]
        m: u32,
        /// Check one target partition and print its witness sequence.
        #[arg(long)]
        target: Option<String>,
        #[arg(long)]
        json: bool,
        /// With --target: exit 1 if the target is unreachable.
        #[arg(long)]
        strict: bool,
    },
    /// Run a named verification suite, or list the registry.
    Verify {
        /// Suite name; omit to list all suites.
        suite: Option<String>,
        /// Override the suite's size ceiling.
        #[arg(long)]
        max_n: Option<u32>,
        /// Restrict a multi-characteristic sweep to one p.
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        json: bool,
        /// Also dump the JSON report to a file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 1 if the suite reports failures.
        #[arg(long)]
        strict: bool,
    },
}

fn main() {
    let code = match std::panic::catch_unwind(run) {
        Ok(Ok(code)) => code,
        Ok(Err(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(_) => {
            eprintln!("internal error: an invariant failed; rerun with RUST_BACKTRACE=1");
            3
        }
    };
    exit(code);
}

fn run() -> Result<i32, String> {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| format!("cannot configure {t} worker threads: {e}"))?;
    }
    match cli.verb {
        Verb::Classify { p, lambda, subgroup, json, strict } => {
            let q = RestrictionQuery {
                p,
                lambda: parse_partition(&lambda)?,
                subgroup: parse_subgroup(&subgroup)?,
            };
            let v = classify(&q).map_err(|e| e.to_string())?;
            if json {
                println!("{}", to_json(&v)?);
            } else {
                print_verdict(&v);
            }
            Ok(if strict && v.outcome != Outcome::Irreducible { 1 } else { 0 })
        }
        Verb::Enumerate { p, n, splitting, json } => {
            require_prime(p)?;
            let list =
                if splitting { enumerate_splitting(n, p) } else { enumerate_p_regular(n, p) };
            if json {
                println!("{}", to_json(&list)?);
            } else {
                for lam in &list {
                    println!("{lam}");
                }
            }
            Ok(0)
        }
        Verb::Invariants { p, n, subgroup, module, json } => {
            require_prime(p)?;
            let d = parse_subgroup(&subgroup)?;
            match module {
                Some(name) => {
                    let spec = parse_module(&name, n, p)?;
                    let dim = invariant_dim(&spec, &d).map_err(|e| e.to_string())?;
                    if json {
                        let obj = serde_json::json!({
                            "subgroup": d, "n": n, "p": p, "module": name, "dim": dim,
                        });
                        println!("{obj}");
                    } else {
                        println!("{dim}");
                    }
                    Ok(0)
                }
                None => {
                    let mut rows: Vec<(String, usize)> = Vec::new();
                    for k in 1..=3.min(n / 2) {
                        let spec = ModuleSpec { kind: ModuleKind::M(k), n, p };
                        rows.push((format!("m{k}"), invariant_dim(&spec, &d).map_err(err_str)?));
                    }
                    if n >= 2 {
                        let spec = ModuleSpec { kind: ModuleKind::S1Star, n, p };
                        rows.push(("s1star".into(), invariant_dim(&spec, &d).map_err(err_str)?));
                    }
                    if n >= 5 {
                        let spec = ModuleSpec { kind: ModuleKind::S2Star, n, p };
                        rows.push(("s2star".into(), invariant_dim(&spec, &d).map_err(err_str)?));
                    }
                    if json {
                        let mut obj = serde_json::Map::new();
                        obj.insert("subgroup".into(), serde_json::json!(d));
                        obj.insert("n".into(), n.into());
                        obj.insert("p".into(), p.into());
                        for (name, dim) in &rows {
                            obj.insert(name.clone(), (*dim).into());
                        }
                        println!("{}", serde_json::Value::Object(obj));
                    } else {
                        for (name, dim) in &rows {
                            println!("{name}: {dim}");
                        }
                    }
                    Ok(0)
                }
            }
        }
        Verb::Mullineux { p, lambda, json } => {
            require_prime(p)?;
            let lam = parse_regular(&lambda, p)?;
            let m = mullineux_map(&lam, p);
            if json {
                println!("{}", to_json(&m)?);
            } else {
                println!("{m}");
            }
            Ok(0)
        }
        Verb::Jstrunc { lambda, json } => {
            let lam = parse_regular(&lambda, 2)?;
            let t = js_truncation(&lam);
            if json {
                println!("{}", to_json(&t)?);
            } else {
                println!("{t}");
            }
            Ok(0)
        }
        Verb::Reachable { p, lambda, m, target, json, strict } => {
            require_prime(p)?;
            let lam = parse_regular(&lambda, p)?;
            if m > lam.size() {
                return Err(format!("target size {m} exceeds |λ| = {}", lam.size()));
            }
            let reach = reachable(&lam, p, m);
            match target {
                None => {
                    if json {
                        let members: Vec<&Partition> = reach.members().iter().collect();
                        println!("{}", to_json(&members)?);
                    } else {
                        for mu in reach.members() {
                            println!("{mu}");
                        }
                    }
                    Ok(0)
                }
                Some(t) => {
                    let tp = parse_partition(&t)?;
                    let witness = reach.witness(&tp);
                    if json {
                        let steps: Vec<serde_json::Value> = witness
                            .iter()
                            .flat_map(|w| &w.steps)
                            .map(|(node, after)| {
                                serde_json::json!({ "remove": node, "after": after })
                            })
                            .collect();
                        let obj = serde_json::json!({
                            "target": tp, "reachable": witness.is_some(), "witness": steps,
                        });
                        println!("{obj}");
                    } else {
                        println!("reachable: {}", witness.is_some());
                        for (node, after) in witness.iter().flat_map(|w| &w.steps) {
                            println!("remove {node} -> {after}");
                        }
                    }
                    Ok(if strict && witness.is_none() { 1 } else { 0 })
                }
            }
        }
        Verb::Verify { suite, max_n, p, json, out, strict } => match suite {
            None => {
                if json {
                    let list: Vec<serde_json::Value> = suites()
                        .iter()
                        .map(|s| {
                            serde_json::json!({ "name": s.name, "description": s.description })
                        })
                        .collect();
                    println!("{}", to_json(&list)?);
                } else {
                    for s in suites() {
                        println!("{}: {}", s.name, s.description);
                    }
                }
                Ok(0)
            }
            Some(name) => {
                let rep =
                    run_suite(&name, SuiteOptions { max_n, p }).map_err(|e| e.to_string())?;
                if let Some(path) = &out {
                    let payload = format!("{}\n", to_json(&rep)?);
                    std::fs::write(path, payload)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                }
                if json {
                    println!("{}", to_json(&rep)?);
                } else {
                    print_report(&rep);
                }
                Ok(if strict && !rep.passed() { 1 } else { 0 })
            }
        },
    }
}

fn err_str(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| format!("serialization failed: {e}"))
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(err_str)
}

fn parse_regular(s: &str, p: u32) -> Result<Partition, String> {
    let lam = parse_partition(s)?;
    if !lam.is_p_regular(p) {
        return Err(format!("{lam} is not {p}-regular"));
    }
    Ok(lam)
}

fn parse_subgroup(s: &str) -> Result<SubgroupDescriptor, String> {
    s.parse::<SubgroupDescriptor>().map_err(err_str)
}

fn parse_module(name: &str, n: u32, p: u32) -> Result<ModuleSpec, String> {
    let kind = match name {
        "s1star" => ModuleKind::S1Star,
        "s2star" => ModuleKind::S2Star,
        _ => match name.strip_prefix('m').and_then(|k| k.parse::<u32>().ok()) {
            Some(k) if k >= 1 => ModuleKind::M(k),
            _ => {
                return Err(format!(
                    "unknown module {name:?}: expected s1star, s2star or mK with K >= 1"
                ))
            }
        },
    };
    Ok(ModuleSpec { kind, n, p })
}

fn require_prime(p: u32) -> Result<(), String> {
    let prime = p >= 2 && (2..=p / 2).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if prime {
        Ok(())
    } else {
        Err(format!("p = {p} is not prime"))
    }
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Irreducible => "irreducible",
        Outcome::Reducible => "reducible",
        Outcome::OutOfScopePrimitive => "out_of_scope_primitive",
        Outcome::NotApplicable => "not_applicable",
    }
}

fn print_verdict(v: &Verdict) {
    println!("outcome: {}", outcome_name(v.outcome));
    if let Some(clause) = &v.clause {
        println!("clause: {clause}");
    }
    if let Some(nodes) = &v.evidence.normal_nodes {
        let list: Vec<String> = nodes.iter().map(|n| n.to_string()).collect();
        println!("normal nodes: {}", list.join(" "));
    }
    if let Some(js) = v.evidence.jantzen_seitz {
        println!("jantzen-seitz: {js}");
    }
    if let Some(e) = v.evidence.multiplicity_exponent {
        println!("multiplicity exponent: {e}");
    }
    if let Some(label) = &v.evidence.restriction_label {
        println!("restriction label: {label}");
    }
    if let Some(note) = &v.evidence.note {
        println!("note: {note}");
    }
}

fn print_report(rep: &SuiteReport) {
    println!("suite: {}", rep.suite);
    println!("items checked: {}", rep.items_checked);
    println!("exceptions: {}", rep.exceptions);
    for note in &rep.notes {
        println!("note: {note}");
    }
    for failure in &rep.failures {
        println!("failure: {failure}");
    }
    println!("overall: {}", if rep.passed() { "pass" } else { "fail" });
}
