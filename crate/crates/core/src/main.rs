use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use linear_groupoids::error::{Error, Limits};
use linear_groupoids::hedron::{build_hedron, implied_set, implies, to_dot, to_json};
use linear_groupoids::identities::{census, enumerate_identities, parse_identity};
use linear_groupoids::models::{direct_product, search_model, GroupoidTable};
use linear_groupoids::varieties::classify;
use linear_groupoids::wreath::{
    full_wreath_order, is_nice_at, niceness_screen, wreath_group_order, NicenessMethod,
};

#[derive(Parser)]
#[command(name = "lingrp", version, about = "Linear groupoid identities: names, hedrons, implication, niceness, and finite models")]
struct Cli {
    /// Output format for data results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Cap on worker threads for parallel operations.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Lift the built-in state-space guards.
    #[arg(long, global = true)]
    unsafe_limits: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Group,
    Bfs,
}

impl From<Method> for NicenessMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Group => NicenessMethod::Group,
            Method::Bfs => NicenessMethod::Bfs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusField {
    L,
    Total,
    Nontrivial,
}

#[derive(Subcommand)]
enum Command {
    /// Systematic name of an identity given in either syntax.
    Name { identity: String },
    /// Surface syntax of an identity given in either syntax.
    Print { identity: String },
    /// Canonical name, choosing between the identity and its swap.
    Canon { identity: String },
    /// All canonical identities of length 2n.
    Enumerate {
        n: usize,
        /// Skip the trivial identities.
        #[arg(long)]
        nontrivial: bool,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Identity and variety counts for length 2n.
    Census {
        n: usize,
        /// Print a single number instead of the full table.
        #[arg(long, value_enum)]
        field: Option<CensusField>,
    },
    /// The identity-hedron H(identity, m).
    Hedron {
        identity: String,
        #[arg(long)]
        m: usize,
    },
    /// Does the first identity imply the second? Exits 1 on "false".
    Implies { premise: String, conclusion: String },
    /// All nontrivial length-2m identities implied by the given one.
    ImpliedSet {
        identity: String,
        #[arg(long)]
        m: usize,
    },
    /// Variety classes of the nontrivial identities of length 2n.
    Classify { n: usize },
    /// Is the identity m-AC-nice? Exits 1 on "false".
    IsNice {
        m: usize,
        identity: String,
        #[arg(long, value_enum, default_value_t = Method::Group)]
        method: Method,
        /// Bracketing label to examine.
        #[arg(long, default_value_t = 0)]
        x: u64,
    },
    /// Niceness verdicts for every length-2n identity over a range of m.
    Screen {
        n: usize,
        m_min: usize,
        m_max: usize,
        #[arg(long, value_enum, default_value_t = Method::Group)]
        method: Method,
    },
    /// |W(identity, m)| and its index in the full wreath product.
    WreathOrder {
        identity: String,
        #[arg(long)]
        m: usize,
    },
    /// Check a multiplication table against identities. Exits 1 on failure.
    Verify {
        /// Table file, or '-' for standard input.
        table: String,
        identities: Vec<String>,
    },
    /// Smallest table satisfying some identities and violating others.
    Search {
        #[arg(long, value_name = "IDENTITY")]
        satisfy: Vec<String>,
        #[arg(long, value_name = "IDENTITY")]
        violate: Vec<String>,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
    },
    /// Direct product of two tables.
    Product { table1: String, table2: String },
}

fn read_table(arg: &str) -> Result<GroupoidTable, Error> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Error::Parse(format!("reading {arg}: {e}")))?
    };
    GroupoidTable::parse(&text)
}

/// Exit 0 on success, 1 on a "false"/not-found result, 2 on errors.
fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("lingrp: {e}");
            return ExitCode::from(2);
        }
    }
    let limits = if cli.unsafe_limits {
        Limits::unrestricted()
    } else {
        Limits::default()
    };
    match run(&cli, &limits) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("lingrp: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, limits: &Limits) -> Result<ExitCode, Error> {
    let format = cli.format;
    match &cli.command {
        Command::Name { identity } => {
            let id = parse_identity(identity)?;
            emit(format, &id.to_string(), || json!(id.to_string()));
        }
        Command::Print { identity } => {
            let id = parse_identity(identity)?;
            emit(format, &id.surface(), || json!(id.surface()));
        }
        Command::Canon { identity } => {
            let id = parse_identity(identity)?.canonicalize();
            emit(format, &id.to_string(), || json!(id.to_string()));
        }
        Command::Enumerate {
            n,
            nontrivial,
            count,
        } => {
            let ids = enumerate_identities(*n, *nontrivial, limits)?;
            if *count {
                emit(format, &ids.len().to_string(), || json!(ids.len()));
            } else {
                let names: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
                emit(format, &names.join("\n"), || json!(names));
            }
        }
        Command::Census { n, field } => {
            let c = census(*n, limits)?;
            match field {
                Some(CensusField::L) => {
                    emit(format, &c.varieties.to_string(), || json!(c.varieties))
                }
                Some(CensusField::Total) => emit(format, &c.total_identities.to_string(), || {
                    json!(c.total_identities)
                }),
                Some(CensusField::Nontrivial) => {
                    emit(format, &c.nontrivial_identities.to_string(), || {
                        json!(c.nontrivial_identities)
                    })
                }
                None => {
                    let mut plain = format!(
                        "n {}\nidentities {}\nnontrivial {}\nvarieties {}",
                        c.n, c.total_identities, c.nontrivial_identities, c.varieties
                    );
                    for (m, count) in c.s.iter().enumerate().skip(2) {
                        plain.push_str(&format!("\ns[{m}] {count}"));
                    }
                    emit(format, &plain, || {
                        json!({
                            "n": c.n,
                            "identities": c.total_identities,
                            "nontrivial": c.nontrivial_identities,
                            "varieties": c.varieties,
                            "s": c.s,
                        })
                    });
                }
            }
        }
        Command::Hedron { identity, m } => {
            let id = parse_identity(identity)?;
            let h = build_hedron(&id, *m, limits)?;
            match format {
                Format::Dot => print!("{}", to_dot(&h)),
                Format::Json => println!("{}", to_json(&h)),
                Format::Plain => {
                    println!("nodes {}", h.node_count());
                    println!("arrows {}", h.arrows().len());
                    for (src, dst, perm) in h.arrows() {
                        println!("{src} -> {dst} {perm}");
                    }
                }
            }
        }
        Command::Implies {
            premise,
            conclusion,
        } => {
            let phi = parse_identity(premise)?;
            let psi = parse_identity(conclusion)?;
            let verdict = implies(&phi, &psi, limits)?;
            emit(format, if verdict { "true" } else { "false" }, || {
                json!(verdict)
            });
            if !verdict {
                return Ok(ExitCode::from(1));
            }
        }
        Command::ImpliedSet { identity, m } => {
            let id = parse_identity(identity)?;
            let set = implied_set(&id, *m, limits)?;
            let names: Vec<String> = set.iter().map(|i| i.to_string()).collect();
            emit(format, &names.join("\n"), || json!(names));
        }
        Command::Classify { n } => {
            let classes = classify(*n, limits)?;
            match format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = classes
                        .iter()
                        .map(|c| {
                            json!({
                                "name": c.representative.to_string(),
                                "identity": c.representative.surface(),
                                "equivalent": c
                                    .equivalent_names()
                                    .iter()
                                    .map(|i| i.to_string())
                                    .collect::<Vec<_>>(),
                                "annotation": c.annotation,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&rows).unwrap());
                }
                _ => {
                    for c in &classes {
                        let equivalent: Vec<String> = c
                            .equivalent_names()
                            .iter()
                            .map(|i| i.to_string())
                            .collect();
                        println!(
                            "{}\t{}\t{}\t{}",
                            c.representative,
                            c.representative.surface(),
                            equivalent.join(","),
                            c.annotation.unwrap_or("")
                        );
                    }
                }
            }
        }
        Command::IsNice {
            m,
            identity,
            method,
            x,
        } => {
            let id = parse_identity(identity)?;
            let report = is_nice_at(*m, &id, *x, (*method).into(), limits)?;
            let gens: Vec<String> = report
                .stabilizer_gens
                .iter()
                .map(|p| p.to_string())
                .collect();
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "identity": report.identity.to_string(),
                        "m": report.m,
                        "x": report.x,
                        "nice": report.nice(),
                        "orbit": report.orbit,
                        "orbit_is_all": report.orbit_is_all,
                        "stabilizer_gens": gens,
                        "stabilizer_order": report.stabilizer_order.to_string(),
                        "stabilizer_is_symmetric": report.stabilizer_is_symmetric,
                        "method": report.method.to_string(),
                        "used_loop_generators": report.used_loop_generators,
                    }))
                    .unwrap()
                ),
                _ => {
                    println!("{}", if report.nice() { "true" } else { "false" });
                    println!("orbit {}/{}", report.orbit.len(), catalan_display(*m));
                    println!("stabilizer_order {}", report.stabilizer_order);
                    println!("stabilizer_gens {}", gens.join(" "));
                }
            }
            if !report.nice() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Screen {
            n,
            m_min,
            m_max,
            method,
        } => {
            let rows = niceness_screen(*n, *m_min..=*m_max, (*method).into(), limits)?;
            match format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "identity": r.identity.to_string(),
                                "m": r.m,
                                "nice": r.nice,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&rows).unwrap());
                }
                _ => {
                    for r in &rows {
                        println!("{}\t{}\t{}", r.identity, r.m, r.nice);
                    }
                }
            }
        }
        Command::WreathOrder { identity, m } => {
            let id = parse_identity(identity)?;
            let order = wreath_group_order(&id, *m, limits)?;
            let full = full_wreath_order(*m)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "order": order.to_string(),
                        "full_wreath_order": full.to_string(),
                    }))
                    .unwrap()
                ),
                _ => println!("{order}"),
            }
        }
        Command::Verify { table, identities } => {
            let t = read_table(table)?;
            let mut all_hold = true;
            for text in identities {
                let id = parse_identity(text)?;
                match t.counterexample(&id) {
                    None => emit(format, &format!("{id} true"), || {
                        json!({"identity": id.to_string(), "satisfied": true})
                    }),
                    Some(witness) => {
                        all_hold = false;
                        let assignment: Vec<String> = witness
                            .iter()
                            .enumerate()
                            .map(|(v, value)| {
                                format!(
                                    "{}={}",
                                    linear_groupoids::identities::variable_name(v + 1),
                                    value
                                )
                            })
                            .collect();
                        emit(
                            format,
                            &format!("{id} false {}", assignment.join(" ")),
                            || {
                                json!({
                                    "identity": id.to_string(),
                                    "satisfied": false,
                                    "counterexample": witness,
                                })
                            },
                        );
                    }
                }
            }
            if !all_hold {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Search {
            satisfy,
            violate,
            max_order,
        } => {
            let satisfy: Vec<_> = satisfy
                .iter()
                .map(|t| parse_identity(t))
                .collect::<Result<_, _>>()?;
            let violate: Vec<_> = violate
                .iter()
                .map(|t| parse_identity(t))
                .collect::<Result<_, _>>()?;
            let outcome = search_model(&satisfy, &violate, *max_order, limits)?;
            match &outcome.model {
                Some(model) => match format {
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "order": model.order(),
                            "table": model.entries(),
                            "exhausted_orders": outcome.exhausted_orders,
                        }))
                        .unwrap()
                    ),
                    _ => print!("{model}"),
                },
                None => {
                    emit(
                        format,
                        &format!(
                            "none (orders {:?} exhausted)",
                            outcome.exhausted_orders
                        ),
                        || {
                            json!({
                                "order": serde_json::Value::Null,
                                "exhausted_orders": outcome.exhausted_orders,
                            })
                        },
                    );
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Product { table1, table2 } => {
            let product = direct_product(&read_table(table1)?, &read_table(table2)?);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "order": product.order(),
                        "table": product.entries(),
                    }))
                    .unwrap()
                ),
                _ => print!("{product}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn catalan_display(m: usize) -> u64 {
    linear_groupoids::terms::catalan(m).unwrap_or(0)
}

fn emit(format: Format, plain: &str, json: impl FnOnce() -> serde_json::Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&json()).unwrap()),
        _ => println!("{plain}"),
    }
}
