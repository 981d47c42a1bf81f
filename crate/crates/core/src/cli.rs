//! Command-line front end. [`run_args`] does the work of the binary and
//! returns the exit code and captured output instead of printing.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::catalog::{
    census_catalog, compare_census, load_embedded_catalog, load_file_catalog, small_tilde_fixed,
    verified_inventory, Catalog, CatalogError, CensusComparison, CensusRow,
};
use crate::formulas::cross_validate;
use crate::lattice::{all_subgroups, count_subgroups};
use crate::parse::{build_spec, SpecError};
use crate::similarity::{class_sequence, enumerate_classes, similar, tilde_sequence, MAX_SUBGROUPS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable naming an extra catalog file for `census`.
pub const EXTRA_CATALOG_ENV: &str = "SUBCOUNT_EXTRA_CATALOG";

#[derive(Debug, Parser)]
#[command(name = "subcount", version, about = "Subgroup counts of small finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the number of subgroups.
    Count { spec: String },
    /// Print the subgroup lattice.
    Lattice {
        spec: String,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare the closed-form counts with enumeration.
    VerifyFormulas {
        #[arg(long, default_value_t = 4096)]
        max_order: u64,
    },
    /// Count subgroups of every catalog group and check the groups with no
    /// cyclic central Sylow subgroup against the expected table.
    Census {
        #[arg(long)]
        max_order: Option<usize>,
        /// Additional catalog file, e.g. the order-32 groups.
        #[arg(long, env = EXTRA_CATALOG_ENV)]
        extra: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Print the number of groups (or with --tilde, of tilde-fixed groups)
    /// having 1, 2, ... subgroups, up to similarity.
    Sequence {
        #[arg(long, default_value_t = MAX_SUBGROUPS)]
        terms: usize,
        #[arg(long)]
        tilde: bool,
    },
    /// List the similarity classes with exactly N subgroups.
    Classes {
        #[arg(long = "n", short = 'n')]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print whether two groups are similar.
    Similar { a: String, b: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Outcome { code, stdout: String::new(), stderr: stderr.into() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

fn spec_error(text: &str, e: SpecError) -> Outcome {
    Outcome::fail(EXIT_USAGE, format!("error: {text:?}: {e}\n"))
}

fn catalog_error(e: CatalogError) -> Outcome {
    let code = match e {
        CatalogError::Parse { .. } | CatalogError::Io { .. } => EXIT_USAGE,
        _ => EXIT_MISMATCH,
    };
    Outcome::fail(code, format!("error: {e}\n"))
}

pub fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Count { spec } => match build_spec(&spec) {
            Ok(g) => Outcome::ok(format!("{}\n", count_subgroups(&g))),
            Err(e) => spec_error(&spec, e),
        },
        Command::Lattice { spec, dot, json } => {
            let g = match build_spec(&spec) {
                Ok(g) => g,
                Err(e) => return spec_error(&spec, e),
            };
            let lat = all_subgroups(&g);
            if dot {
                Outcome::ok(lat.to_dot())
            } else if json {
                Outcome::ok(lat.to_json() + "\n")
            } else {
                let mut out = String::new();
                for (i, h) in lat.subgroups().iter().enumerate() {
                    let members: Vec<String> =
                        h.elements().map(|x| x.index().to_string()).collect();
                    let normal = h.is_normal_cached().unwrap_or(false);
                    let _ = writeln!(
                        out,
                        "{i}\torder={}\t{}\t{{{}}}",
                        h.order(),
                        if normal { "normal" } else { "-" },
                        members.join(",")
                    );
                }
                let _ = writeln!(out, "{} subgroups", lat.count());
                Outcome::ok(out)
            }
        }
        Command::VerifyFormulas { max_order } => {
            let report = cross_validate(max_order);
            let code = if report.all_agree() { EXIT_OK } else { EXIT_MISMATCH };
            Outcome { code, stdout: report.render(), stderr: String::new() }
        }
        Command::Census { max_order, extra, json } => census_command(max_order, extra, json),
        Command::Sequence { terms, tilde } => {
            if terms == 0 || terms > MAX_SUBGROUPS {
                return Outcome::fail(
                    EXIT_USAGE,
                    format!("error: --terms must be between 1 and {MAX_SUBGROUPS}\n"),
                );
            }
            let inventory = match verified_inventory() {
                Ok(i) => i,
                Err(e) => return catalog_error(e),
            };
            let seq = if tilde {
                tilde_sequence(&inventory)
            } else {
                match class_sequence(&inventory) {
                    Ok(s) => s,
                    Err(e) => return Outcome::fail(EXIT_MISMATCH, format!("error: {e}\n")),
                }
            };
            let text: Vec<String> = seq[..terms].iter().map(|n| n.to_string()).collect();
            Outcome::ok(text.join(" ") + "\n")
        }
        Command::Classes { n, json } => {
            if !(1..=MAX_SUBGROUPS).contains(&n) {
                return Outcome::fail(
                    EXIT_USAGE,
                    format!("error: --n must be between 1 and {MAX_SUBGROUPS}\n"),
                );
            }
            let inventory = match verified_inventory() {
                Ok(i) => i,
                Err(e) => return catalog_error(e),
            };
            let classes = match enumerate_classes(n, &inventory) {
                Ok(c) => c,
                Err(e) => return Outcome::fail(EXIT_USAGE, format!("error: {e}\n")),
            };
            if json {
                let text = serde_json::to_string_pretty(&classes).expect("serializable");
                return Outcome::ok(text + "\n");
            }
            let mut out = String::new();
            for c in &classes {
                let _ = writeln!(out, "{}\t{}", c.display_name, c.representative);
            }
            let _ = writeln!(out, "{} classes with {n} subgroups", classes.len());
            Outcome::ok(out)
        }
        Command::Similar { a, b } => {
            let ga = match build_spec(&a) {
                Ok(g) => g,
                Err(e) => return spec_error(&a, e),
            };
            let gb = match build_spec(&b) {
                Ok(g) => g,
                Err(e) => return spec_error(&b, e),
            };
            match similar(&ga, &gb) {
                Ok(s) => Outcome::ok(format!("{s}\n")),
                Err(e) => Outcome::fail(EXIT_USAGE, format!("error: {e}\n")),
            }
        }
    }
}

fn render_rows(out: &mut String, rows: &[CensusRow]) {
    let _ = writeln!(out, "order\tindex\tname\tsubgroups\ttilde_fixed");
    for r in rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            r.entry.order, r.entry.index, r.entry.name, r.subgroup_count, r.tilde_fixed
        );
    }
}

fn render_comparison(out: &mut String, title: &str, cmp: &CensusComparison) {
    let _ = writeln!(out, "{title}");
    for (spec, id) in &cmp.matched {
        let _ = writeln!(out, "  match\t{spec}\t{id}");
    }
    for spec in &cmp.missing {
        let _ = writeln!(out, "  missing\t{spec}");
    }
    for id in &cmp.unexpected {
        let note = cmp
            .in_p_group_list
            .iter()
            .find(|(listed, _)| listed == id)
            .map_or(String::new(), |(_, spec)| {
                format!("\t(in the non-abelian p-group list as {spec})")
            });
        let _ = writeln!(out, "  unexpected\t{id}{note}");
    }
    for (spec, want, got) in &cmp.count_mismatches {
        let _ = writeln!(out, "  count\t{spec}\texpected {want}, found {got}");
    }
}

fn restrict(catalog: &Catalog, max_order: Option<usize>) -> Catalog {
    let keep = |n: usize| max_order.is_none_or(|m| n <= m);
    let (entries, groups) = catalog
        .iter()
        .filter(|(e, _)| keep(e.order))
        .map(|(e, g)| (e.clone(), g.clone()))
        .unzip();
    Catalog { entries, groups }
}

fn census_command(max_order: Option<usize>, extra: Option<PathBuf>, json: bool) -> Outcome {
    let mut catalogs = Vec::new();
    match load_embedded_catalog() {
        Ok(c) => catalogs.push(("embedded catalog".to_string(), restrict(c, max_order))),
        Err(e) => return catalog_error(e),
    }
    if let Some(path) = extra {
        match load_file_catalog(&path) {
            Ok(c) => catalogs.push((path.display().to_string(), restrict(&c, max_order))),
            Err(e) => return catalog_error(e),
        }
    }

    let mut all_rows = Vec::new();
    let mut comparisons = Vec::new();
    for (title, cat) in &catalogs {
        let rows = census_catalog(cat);
        let orders: BTreeSet<usize> = cat.entries.iter().map(|e| e.order).collect();
        match compare_census(&rows, cat, &orders) {
            Ok(cmp) => comparisons.push((title.clone(), cmp)),
            Err(e) => return catalog_error(e),
        }
        all_rows.extend(rows);
    }
    all_rows.sort_by_key(|r| (r.entry.order, r.entry.index));
    let exact = comparisons.iter().all(|(_, c)| c.is_exact());
    let code = if exact { EXIT_OK } else { EXIT_MISMATCH };

    let stdout = if json {
        let value = serde_json::json!({
            "rows": all_rows,
            "comparisons": comparisons
                .iter()
                .map(|(t, c)| serde_json::json!({ "catalog": t, "result": c }))
                .collect::<Vec<_>>(),
            "exact": exact,
        });
        serde_json::to_string_pretty(&value).expect("serializable") + "\n"
    } else {
        let mut out = String::new();
        render_rows(&mut out, &all_rows);
        let _ = writeln!(out);
        for (title, cmp) in &comparisons {
            render_comparison(&mut out, &format!("{title}: tilde-fixed groups with at most {MAX_SUBGROUPS} subgroups"), cmp);
        }
        let small = small_tilde_fixed(&all_rows).count();
        let _ = writeln!(
            out,
            "{} groups, {small} tilde-fixed with at most {MAX_SUBGROUPS} subgroups, {}",
            all_rows.len(),
            if exact { "table reproduced" } else { "MISMATCH" }
        );
        out
    };
    Outcome { code, stdout, stderr: String::new() }
}
