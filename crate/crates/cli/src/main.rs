//! `gm`: command-line access to switching, spectra, isomorphism and the
//! fixed example graphs.
//!
//! Exit status: 0 on success, 1 when a checked property does not hold, 2 on
//! usage or input errors.

mod input;

use std::io::{BufRead, BufReader, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use gm_core::constructions::{bipartite18, cyclic_tournament, example27, gadget9, m5_fixture};
use gm_core::graph::{build_grid, build_triangular};
use gm_core::graph6::to_graph6;
use gm_core::invariants::{lemma3_check, theorem4_hypothesis};
use gm_core::isomorphism::{are_isomorphic, automorphism_group, isomorphism_fixing_set};
use gm_core::products::ProductKind;
use gm_core::scenarios::{all_required_passed, run_scenario};
use gm_core::spectrum::{char_poly, cospectral, IntPolynomial};
use gm_core::switching::{
    apply_switching, enumerate_switching_sets, switch, validate_partition, SwitchingPartition,
};
use gm_core::Graph;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{graph_from_text, parse_list, parse_permutation, read_graph};

#[derive(Parser)]
#[command(name = "gm", version, about = "Godsil-McKay switching toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Tensor,
    Strengthened,
}

impl From<Kind> for ProductKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Tensor => ProductKind::Tensor,
            Kind::Strengthened => ProductKind::Strengthened,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Characteristic polynomial, coefficients in ascending degree.
    Charpoly {
        graph: String,
        /// Expected coefficients (JSON array or comma list, ascending);
        /// exits 1 on mismatch.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Whether two graphs have the same characteristic polynomial.
    Cospectral { g: String, h: String },
    /// Search for an isomorphism from G to H, or check a given one.
    Iso {
        g: String,
        h: String,
        /// Only isomorphisms mapping this vertex set onto itself.
        #[arg(long)]
        fix: Option<String>,
        /// Check this permutation (image list or JSON) instead of searching.
        #[arg(long)]
        witness: Option<String>,
    },
    /// Automorphism group: generators, order and orbits.
    Aut { graph: String },
    /// Switch with respect to one or more cells (comma lists).
    Switch {
        graph: String,
        #[arg(required = true)]
        cells: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Only validate the partition; exits 1 if it is not a switching
        /// partition.
        #[arg(long)]
        check: bool,
    },
    /// Enumerate switching sets of a given size.
    FindSets {
        graph: String,
        #[arg(long)]
        size: usize,
        /// Only sets inducing a coclique.
        #[arg(long)]
        cocliques: bool,
    },
    /// Common-neighbor non-isomorphism conditions for switching a set.
    Invariants { graph: String, set: String },
    /// Product hypothesis report for {i} x X in KIND(H, G); exits 1 if not
    /// satisfied.
    Thm4 {
        graph: String,
        set: String,
        h: String,
        vertex: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Tensor or strengthened tensor product of H and G (H first).
    Product {
        h: String,
        g: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Built-in graphs: m5, bipartite18, gadget9, example27, grid:L,M,
    /// triangular:M, tournament:M.
    Fixture {
        name: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run one acceptance scenario (1..10, 5s, 6s) or all of them.
    Verify {
        scenario: String,
        #[arg(long, value_enum, default_value = "json")]
        format: TextFormat,
        /// Include elapsed times in JSON output.
        #[arg(long)]
        timings: bool,
    },
    /// Scan a graph6 file: enumerate switching sets and classify the
    /// switched graphs. One JSON object per input line.
    Census {
        file: String,
        /// Largest switching set size to enumerate.
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long)]
        cocliques: bool,
        /// Skip this many input lines.
        #[arg(long, default_value_t = 0)]
        skip: usize,
    },
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("values serialize"));
}

fn print_graph(g: &Graph, format: Format, extra: Value) {
    match format {
        Format::Graph6 => println!("{}", to_graph6(g)),
        Format::Json => {
            let mut v = json!({
                "order": g.order(),
                "edge_count": g.edge_count(),
                "graph6": to_graph6(g),
            });
            if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
                m.extend(e);
            }
            print_json(&v);
        }
    }
}

fn parse_coefficients(arg: &str) -> Result<IntPolynomial> {
    let trimmed = arg.trim();
    let items: Vec<String> = if trimmed.starts_with('[') {
        let v: Vec<Value> = serde_json::from_str(trimmed).context("parsing --expect")?;
        v.into_iter()
            .map(|x| match x {
                Value::String(s) => s,
                other => other.to_string(),
            })
            .collect()
    } else {
        trimmed.split(',').map(|s| s.trim().to_string()).collect()
    };
    let coeffs = items
        .iter()
        .map(|s| {
            s.parse::<BigInt>()
                .with_context(|| format!("bad coefficient {s:?}"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::new(coeffs))
}

fn fixture(name: &str, format: Format) -> Result<bool> {
    let (graph, set): (Graph, Option<Vec<usize>>) = match name.split_once(':') {
        None => match name {
            "m5" => {
                let (g, x) = m5_fixture();
                (g, Some(x))
            }
            "bipartite18" => {
                let (g, x) = bipartite18();
                (g, Some(x))
            }
            "gadget9" => (gadget9(), None),
            "example27" => {
                let (g, x) = example27();
                (g, Some(x))
            }
            _ => bail!("unknown fixture {name:?}"),
        },
        Some(("grid", params)) => {
            let p = parse_list(params)?;
            let [l, m] = p[..] else {
                bail!("grid needs two parameters, as in grid:4,4")
            };
            (build_grid(l, m)?, None)
        }
        Some(("triangular", params)) => {
            let m = params
                .trim()
                .parse()
                .context("triangular needs one parameter")?;
            (build_triangular(m)?, None)
        }
        Some(("tournament", params)) => {
            let m = params
                .trim()
                .parse()
                .context("tournament needs one parameter")?;
            let t = cyclic_tournament(m)?;
            if let Format::Graph6 = format {
                bail!("a tournament is a matrix, not a graph; use --format json");
            }
            print_json(&json!({
                "name": name,
                "order": t.order(),
                "regular": t.is_regular(),
                "matrix": t.matrix(),
            }));
            return Ok(true);
        }
        Some(_) => bail!("unknown fixture {name:?}"),
    };
    print_graph(
        &graph,
        format,
        json!({ "name": name, "switching_set": set }),
    );
    Ok(true)
}

fn census(file: &str, max_size: usize, cocliques: bool, skip: usize) -> Result<bool> {
    let reader: Box<dyn BufRead> = if file == "-" {
        Box::new(BufReader::new(std::io::stdin()))
    } else {
        Box::new(BufReader::new(
            std::fs::File::open(file).with_context(|| format!("opening {file}"))?,
        ))
    };
    let lines: Vec<(usize, String)> = reader
        .lines()
        .enumerate()
        .skip(skip)
        .map(|(i, l)| l.map(|l| (i + 1, l)))
        .collect::<std::io::Result<_>>()?;
    let stdout = std::io::stdout();
    for chunk in lines.chunks(64) {
        let rows: Vec<Option<Value>> = chunk
            .par_iter()
            .map(|(line, text)| census_line(*line, text, max_size, cocliques))
            .collect();
        let mut out = stdout.lock();
        for row in rows.into_iter().flatten() {
            writeln!(
                out,
                "{}",
                serde_json::to_string(&row).expect("values serialize")
            )?;
        }
        out.flush()?;
    }
    Ok(true)
}

fn census_line(line: usize, text: &str, max_size: usize, cocliques: bool) -> Option<Value> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    let g = match graph_from_text(text) {
        Ok(g) => g,
        Err(e) => return Some(json!({ "line": line, "error": format!("{e:#}") })),
    };
    let mut counts = [0usize; 4];
    let mut examples: Vec<Vec<usize>> = Vec::new();
    for size in 2..=max_size.min(g.order()) {
        for x in enumerate_switching_sets(&g, size, cocliques) {
            let h = switch(&g, &x).expect("enumerated sets are valid");
            let class = if lemma3_check(&g, &x)
                .expect("valid set")
                .certifies_non_isomorphism()
            {
                0
            } else if are_isomorphic(&g, &h).is_none() {
                1
            } else if isomorphism_fixing_set(&g, &h, &x)
                .expect("valid set")
                .is_some()
            {
                2
            } else {
                if examples.len() < 5 {
                    examples.push(x.clone());
                }
                3
            };
            counts[class] += 1;
        }
    }
    Some(json!({
        "line": line,
        "graph6": to_graph6(&g),
        "order": g.order(),
        "switching_sets": counts.iter().sum::<usize>(),
        "nonisomorphic_certified": counts[0],
        "nonisomorphic_uncertified": counts[1],
        "isomorphic_fixing_set": counts[2],
        "isomorphic_no_set_fixing": counts[3],
        "no_set_fixing_examples": examples,
    }))
}

fn run(cmd: Cmd) -> Result<bool> {
    match cmd {
        Cmd::Charpoly { graph, expect } => {
            let g = read_graph(&graph)?;
            let p = char_poly(&g);
            let mut out = json!({ "order": g.order(), "char_poly": p, "display": p.to_string() });
            let mut ok = true;
            if let Some(e) = expect {
                ok = parse_coefficients(&e)? == p;
                out["matches"] = json!(ok);
            }
            print_json(&out);
            Ok(ok)
        }
        Cmd::Cospectral { g, h } => {
            let c = cospectral(&read_graph(&g)?, &read_graph(&h)?);
            print_json(&json!({ "cospectral": c }));
            Ok(c)
        }
        Cmd::Iso { g, h, fix, witness } => {
            let (g, h) = (read_graph(&g)?, read_graph(&h)?);
            let fix = fix.as_deref().map(parse_list).transpose()?;
            if let Some(w) = witness {
                let p = parse_permutation(&w)?;
                let maps = g.permute(&p).ok().as_ref() == Some(&h);
                let fixes = fix.as_ref().map(|x| p.fixes_set(x));
                let valid = maps && fixes.unwrap_or(true);
                print_json(&json!({ "valid": valid, "maps_g_to_h": maps, "fixes_set": fixes }));
                return Ok(valid);
            }
            let found = match &fix {
                Some(x) => isomorphism_fixing_set(&g, &h, x)?,
                None => are_isomorphic(&g, &h),
            };
            print_json(
                &json!({ "isomorphic": found.is_some(), "fixed_set": fix, "witness": found }),
            );
            Ok(found.is_some())
        }
        Cmd::Aut { graph } => {
            print_json(&serde_json::to_value(automorphism_group(&read_graph(
                &graph,
            )?))?);
            Ok(true)
        }
        Cmd::Switch {
            graph,
            cells,
            format,
            check,
        } => {
            let g = read_graph(&graph)?;
            let cells = cells
                .iter()
                .map(|c| parse_list(c))
                .collect::<Result<Vec<_>>>()?;
            let partition = SwitchingPartition::new(cells)?;
            let report = validate_partition(&g, &partition)?;
            if check || !report.valid {
                let mut v = serde_json::to_value(&report)?;
                v["failure_reason"] = json!(report.failure_reason());
                print_json(&v);
                return Ok(report.valid);
            }
            let h = apply_switching(&g, &partition)?;
            print_graph(&h, format, json!({ "partition": partition }));
            Ok(true)
        }
        Cmd::FindSets {
            graph,
            size,
            cocliques,
        } => {
            let g = read_graph(&graph)?;
            let sets = enumerate_switching_sets(&g, size, cocliques);
            print_json(
                &json!({ "size": size, "cocliques_only": cocliques, "count": sets.len(), "sets": sets }),
            );
            Ok(true)
        }
        Cmd::Invariants { graph, set } => {
            let report = lemma3_check(&read_graph(&graph)?, &parse_list(&set)?)?;
            let mut v = serde_json::to_value(&report)?;
            v["certifies_non_isomorphism"] = json!(report.certifies_non_isomorphism());
            print_json(&v);
            Ok(true)
        }
        Cmd::Thm4 {
            graph,
            set,
            h,
            vertex,
            kind,
        } => {
            let g = read_graph(&graph)?;
            let h = read_graph(&h)?;
            let report = theorem4_hypothesis(&g, &parse_list(&set)?, &h, vertex, kind.into())?;
            print_json(&serde_json::to_value(&report)?);
            Ok(report.hypothesis_satisfied)
        }
        Cmd::Product { h, g, kind, format } => {
            let kind = ProductKind::from(kind);
            let p = kind.build(&read_graph(&h)?, &read_graph(&g)?);
            print_graph(&p, format, json!({ "kind": kind }));
            Ok(true)
        }
        Cmd::Fixture { name, format } => fixture(&name, format),
        Cmd::Verify {
            scenario,
            format,
            timings,
        } => {
            let reports = run_scenario(&scenario)?;
            match format {
                TextFormat::Text => {
                    for r in &reports {
                        println!("{}", r.summary_line());
                    }
                }
                TextFormat::Json => {
                    let criteria: Vec<Value> = reports
                        .iter()
                        .map(|r| {
                            let mut v = serde_json::to_value(r).expect("reports serialize");
                            if timings {
                                v["elapsed_secs"] = json!(r.elapsed.as_secs_f64());
                            }
                            v
                        })
                        .collect();
                    print_json(&json!({
                        "criteria": criteria,
                        "all_required_passed": all_required_passed(&reports),
                    }));
                }
            }
            Ok(all_required_passed(&reports))
        }
        Cmd::Census {
            file,
            max_size,
            cocliques,
            skip,
        } => census(&file, max_size, cocliques, skip),
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("GM_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .with_context(|| format!("GM_THREADS={v:?} is not a count"))?;
        if n == 0 {
            bail!("GM_THREADS must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli.cmd)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("gm: {e:#}");
            ExitCode::from(2)
        }
    }
}
