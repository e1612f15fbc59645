//! Command-line front end: check dispatch, structured reports, exit codes.
//!
//! Exit codes: 0 all executed checks pass, 1 any check fails, 2 usage
//! error, 3 resource-bound abort (including an unwritable report path).

use std::process::ExitCode;

use stabkit::error::Error;
use stabkit::report::Report;
use stabkit::verify::CheckResult;

const USAGE: &str = "\
usage:
  stabkit verify <which> [flags]
  stabkit inspect --group EXPR [--maximals] [flags]

checks:
  all | theorem-a | theorem-b | lemma-sylow | case22 | wreath-witnesses |
  durbin | diagonal | solvability | extensions

flags:
  --group EXPR      group expression (repeatable; see grammar below)
  --max-order N     scan bound (theorem-b default 10000, durbin default 5000)
  --q LIST          comma-separated prime powers for lemma-sylow
  --seed N          seed for the randomized Sylow search (default 0)
  --format FMT      json | text (default text)
  --report PATH     write the report to PATH instead of stdout

group expression grammar:
  sym(n) | alt(n) | cyclic(n) | psl2(q) | pgl2(q) | pgammal2(q) | psl3_3 |
  aut_psl3_3 | m11 | psu3_3 | dp(E,E) | wr(E,E) | diag(E) | nla(E,E) |
  file:<path>

generators file format: line 1 `degree <n>`, then `perm <i0> ... <i(n-1)>`
lines with 0-based images; `#` starts a comment.
";

struct RunConfig {
    command: Command,
    groups: Vec<String>,
    max_order: Option<u128>,
    q_list: Option<Vec<u64>>,
    seed: u64,
    json: bool,
    report_path: Option<String>,
    maximals: bool,
}

enum Command {
    Verify(String),
    Inspect,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {}", msg);
    eprintln!("{}", USAGE);
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let config = match parse_args(&args) {
        Ok(c) => c,
        Err(msg) => return usage_error(&msg),
    };
    match run(&config) {
        Ok(code) => code,
        Err(Error::Resource(msg)) => {
            eprintln!("resource bound: {}", msg);
            ExitCode::from(3)
        }
        Err(Error::Rejected(msg)) | Err(Error::Parse { msg, .. }) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(1)
        }
    }
}

fn parse_args(args: &[String]) -> Result<RunConfig, String> {
    let mut it = args.iter().peekable();
    let command = match it.next().map(|s| s.as_str()) {
        Some("verify") => {
            let which = it
                .next()
                .ok_or_else(|| "verify needs a check name".to_string())?;
            let known = [
                "all",
                "theorem-a",
                "theorem-b",
                "lemma-sylow",
                "case22",
                "wreath-witnesses",
                "durbin",
                "diagonal",
                "solvability",
                "extensions",
            ];
            if !known.contains(&which.as_str()) {
                return Err(format!("unknown check '{}'", which));
            }
            Command::Verify(which.clone())
        }
        Some("inspect") => Command::Inspect,
        Some(other) => return Err(format!("unknown subcommand '{}'", other)),
        None => return Err("missing subcommand".to_string()),
    };
    let mut config = RunConfig {
        command,
        groups: Vec::new(),
        max_order: None,
        q_list: None,
        seed: 0,
        json: false,
        report_path: None,
        maximals: false,
    };
    while let Some(flag) = it.next() {
        match flag.as_str() {
            "--group" => {
                let v = it.next().ok_or("--group needs a value")?;
                config.groups.push(v.clone());
            }
            "--max-order" => {
                let v = it.next().ok_or("--max-order needs a value")?;
                config.max_order = Some(v.parse().map_err(|_| format!("bad --max-order '{}'", v))?);
            }
            "--q" => {
                let v = it.next().ok_or("--q needs a value")?;
                let list = v
                    .split(',')
                    .map(|s| s.trim().parse::<u64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| format!("bad --q list '{}'", v))?;
                config.q_list = Some(list);
            }
            "--seed" => {
                let v = it.next().ok_or("--seed needs a value")?;
                config.seed = v.parse().map_err(|_| format!("bad --seed '{}'", v))?;
            }
            "--format" => {
                let v = it.next().ok_or("--format needs a value")?;
                match v.as_str() {
                    "json" => config.json = true,
                    "text" => config.json = false,
                    other => return Err(format!("unknown format '{}'", other)),
                }
            }
            "--report" => {
                let v = it.next().ok_or("--report needs a value")?;
                config.report_path = Some(v.clone());
            }
            "--maximals" => config.maximals = true,
            other => return Err(format!("unknown flag '{}'", other)),
        }
    }
    Ok(config)
}

fn run(config: &RunConfig) -> stabkit::Result<ExitCode> {
    match &config.command {
        Command::Inspect => inspect(config),
        Command::Verify(which) => {
            let checks = dispatch(which, config)?;
            let report = Report::new(config.seed, checks);
            let body = if config.json {
                report.to_json()
            } else {
                report.to_text()
            };
            match &config.report_path {
                Some(path) => {
                    if std::fs::write(path, &body).is_err() {
                        return Err(Error::resource(format!(
                            "report path {} is not writable",
                            path
                        )));
                    }
                }
                None => print!("{}", body),
            }
            if report.all_executed_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn dispatch(which: &str, config: &RunConfig) -> stabkit::Result<Vec<CheckResult>> {
    use stabkit::verify as v;
    let seed = config.seed;
    let run_one = |name: &str| -> stabkit::Result<CheckResult> {
        Ok(match name {
            "case22" => v::sylow_facts::case22_sylow_facts(seed),
            "diagonal" => v::diagonal::diagonal_correspondence_check(),
            "durbin" => {
                let bound = config.max_order.unwrap_or(5000);
                v::durbin::durbin_crosscheck(bound, seed)
            }
            "extensions" => v::extensions::extension_consistency_checks(seed),
            "lemma-sylow" => {
                let default: Vec<u64> = v::sylow_facts::DEFAULT_Q_LIST.to_vec();
                let qs = config.q_list.clone().unwrap_or(default);
                v::sylow_facts::sylow_normalizer_profile(&qs, seed)
            }
            "solvability" => v::solvability::solvability_property_checks(),
            "theorem-a" => {
                if config.groups.is_empty() {
                    v::theorem_ab::theorem_a_default_check(seed)
                } else {
                    let groups = parse_groups(&config.groups)?;
                    v::theorem_ab::theorem_a_for_groups(&groups, seed)
                }
            }
            "theorem-b" => {
                let bound = config.max_order.unwrap_or(10_000);
                if bound > 10_000 {
                    return Err(Error::rejected(
                        "theorem-b catalog is complete only up to order 10000".to_string(),
                    ));
                }
                v::theorem_ab::theorem_b_scan(bound, seed)
            }
            "wreath-witnesses" => v::wreath::wreath_witness_checks(),
            other => return Err(Error::rejected(format!("unknown check '{}'", other))),
        })
    };
    if which == "all" {
        // lexicographic check-id order
        let ids = [
            "case22",
            "diagonal",
            "durbin",
            "extensions",
            "lemma-sylow",
            "solvability",
            "theorem-a",
            "theorem-b",
            "wreath-witnesses",
        ];
        let mut out = Vec::new();
        for id in ids {
            eprintln!("running {} ...", id);
            out.push(run_one(id)?);
        }
        Ok(out)
    } else {
        Ok(vec![run_one(which)?])
    }
}

fn parse_groups(exprs: &[String]) -> stabkit::Result<Vec<(String, stabkit::PermGroup)>> {
    exprs
        .iter()
        .map(|e| Ok((e.clone(), stabkit::parse::parse_group_expr(e)?)))
        .collect()
}

fn inspect(config: &RunConfig) -> stabkit::Result<ExitCode> {
    if config.groups.is_empty() {
        return Err(Error::rejected(
            "inspect needs at least one --group".to_string(),
        ));
    }
    let mut out = String::new();
    for expr in &config.groups {
        let g = stabkit::parse::parse_group_expr(expr)?;
        if config.json {
            out.push_str(&inspect_json(expr, &g, config)?);
        } else {
            out.push_str(&inspect_text(expr, &g, config)?);
        }
    }
    match &config.report_path {
        Some(path) => {
            if std::fs::write(path, &out).is_err() {
                return Err(Error::resource(format!(
                    "report path {} is not writable",
                    path
                )));
            }
        }
        None => print!("{}", out),
    }
    Ok(ExitCode::SUCCESS)
}

fn maximal_rows(
    g: &stabkit::PermGroup,
    expr: &str,
) -> stabkit::Result<Vec<stabkit::verify::WitnessReport>> {
    let verdict = stabkit::verify::hypothesis_check(g, expr)?;
    Ok(verdict.reports.iter().map(|r| r.to_witness(expr)).collect())
}

fn inspect_text(expr: &str, g: &stabkit::PermGroup, config: &RunConfig) -> stabkit::Result<String> {
    let mut out = String::new();
    out.push_str(&format!(
        "{}: degree {}, order {}\n",
        expr,
        g.degree(),
        g.order()
    ));
    let fp = stabkit::structure::fingerprint::fingerprint(g)?;
    out.push_str(&format!(
        "  supersolvable: {}; derived length: {}; center order: {}\n",
        fp.is_supersolvable,
        fp.derived_length
            .map(|d| d.to_string())
            .unwrap_or_else(|| "non-solvable".to_string()),
        fp.center_order
    ));
    if config.maximals {
        out.push_str("  maximal subgroup classes (order, index, class, supersolvable):\n");
        for r in maximal_rows(g, expr)? {
            out.push_str(&format!(
                "    order {:>8} index {:>8} {:?} supersolvable={}\n",
                r.order, r.index, r.index_class, r.supersolvable
            ));
        }
    }
    Ok(out)
}

fn inspect_json(expr: &str, g: &stabkit::PermGroup, config: &RunConfig) -> stabkit::Result<String> {
    let fp = stabkit::structure::fingerprint::fingerprint(g)?;
    let mut v = serde_json::json!({
        "expression": expr,
        "degree": g.degree(),
        "order": g.order() as u64,
        "supersolvable": fp.is_supersolvable,
        "center_order": fp.center_order as u64,
    });
    if config.maximals {
        let rows = maximal_rows(g, expr)?;
        v["maximal_subgroups"] = serde_json::to_value(rows).expect("serialize");
    }
    Ok(serde_json::to_string_pretty(&v).expect("serialize") + "\n")
}
