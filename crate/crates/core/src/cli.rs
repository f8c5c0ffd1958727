//! Command-line front end. `primcov <command> [flags]`; see [`Cli`].
//!
//! Exit codes: 0 when everything passed or was skipped, 1 when a check
//! failed, 2 on usage, parse or hypothesis errors.

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::combinat::{class_size, Nat, Partition};
use crate::cover::{
    class_cover_instance, family_cover, greedy, sigma0_exact, sigma_exact, solve_exact, Budget, CoverInstance,
    CoverNumber, Mode, Status,
};
use crate::error::{Error, Result};
use crate::families::{
    intersect_alt, intersect_blockstab, intersect_blockstab_half, intersect_primitive, intersect_setstab, Catalog,
    FamilyKind, FamilySpec,
};
use crate::permgroup::{resolve_group, Corpus};
use crate::verify::{self, render, CheckReport, Format, Params};

#[derive(Parser, Debug)]
#[command(name = "primcov", version, about = "Exact primary covering numbers and the checks behind them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Primitive group catalogue replacing the built-in one.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
    /// Group corpus replacing the built-in one.
    #[arg(long, global = true)]
    pub corpus: Option<PathBuf>,
    /// Search budget: a duration (`90s`, `10m`, `24h`) or a node count (`5000`).
    #[arg(long, global = true)]
    pub budget: Option<String>,
    /// Deterministic search: wall time is ignored, so pair it with a node budget.
    #[arg(long, global = true)]
    pub det: bool,
    #[arg(long, global = true, default_value = "table")]
    pub format: String,
    /// Thousands separators in table output.
    #[arg(long, global = true)]
    pub human: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// σ₀ of `Sn`, `An` or a corpus group; with `--class`, the cover of one class of `Sn`.
    Sigma0 {
        group: String,
        /// `lattice`, `catalog`, or `auto` (catalogue for `Sn`, n >= 5).
        #[arg(long, default_value = "auto")]
        mode: String,
        #[arg(long)]
        class: Option<String>,
        /// Also compute the ordinary covering number σ.
        #[arg(long)]
        sigma: bool,
        /// Write the instance and solution to this file.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Solve a set-cover instance dump.
    Solve { file: PathBuf },
    /// Run one check, or `all`.
    Verify {
        id: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        max: Option<u32>,
    },
    /// `|M ∩ class|` for one member `M` of a family of `Sn`.
    Count {
        #[arg(long)]
        n: u32,
        /// `A`, `X2`, `X4@1`, `W5`, `P:PGL25`.
        #[arg(long)]
        family: String,
        #[arg(long)]
        class: String,
        /// Count `W_{n/2}` by block-system enumeration instead of the closed form.
        #[arg(long)]
        enumerate: bool,
    },
    /// Claimed σ₀(Sn) for `3 <= n <= max`.
    Table {
        #[arg(long, default_value_t = 64)]
        max: u32,
        /// Solve degrees up to 9 directly.
        #[arg(long)]
        solve: bool,
    },
}

/// Everything a run needs, resolved from the flags.
#[derive(Debug)]
pub struct RunConfig {
    pub budget: Budget,
    /// True when `--budget` was given; enables the heavy checks.
    pub explicit_budget: bool,
    pub format: Format,
    pub human: bool,
    pub catalog: Catalog,
    pub corpus: Corpus,
}

impl RunConfig {
    pub fn from_common(c: &Common) -> Result<Self> {
        let format: Format = c.format.parse().map_err(Error::Usage)?;
        let mut budget = match &c.budget {
            Some(b) => parse_budget(b)?,
            None if c.det => Budget::nodes(5_000_000),
            None => Budget::default(),
        };
        if c.det {
            if budget.max_nodes == u64::MAX {
                return Err(Error::Usage("--det needs a node budget; wall time is not reproducible".into()));
            }
            budget.deterministic = true;
        }
        let catalog = match &c.catalog {
            Some(p) => Catalog::load(p)?,
            None => Catalog::builtin().clone(),
        };
        let corpus = match &c.corpus {
            Some(p) => Corpus::load(p)?,
            None => Corpus::builtin().clone(),
        };
        Ok(RunConfig { budget, explicit_budget: c.budget.is_some(), format, human: c.human, catalog, corpus })
    }
}

/// `500ms`, `90s`, `10m`, `24h` or a plain node count.
pub fn parse_budget(text: &str) -> Result<Budget> {
    let t = text.trim();
    let bad = || Error::Usage(format!("cannot read budget {t:?}"));
    if let Ok(n) = t.parse::<u64>() {
        if n == 0 {
            return Err(Error::Usage("budget must be positive".into()));
        }
        return Ok(Budget::nodes(n));
    }
    let split = t.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
    let (num, unit) = t.split_at(split);
    let v: u64 = num.parse().map_err(|_| bad())?;
    let d = match unit {
        "ms" => Duration::from_millis(v),
        "s" => Duration::from_secs(v),
        "m" => Duration::from_secs(60 * v),
        "h" => Duration::from_secs(3600 * v),
        _ => return Err(bad()),
    };
    if d.is_zero() {
        return Err(Error::Usage("budget must be positive".into()));
    }
    Ok(Budget::time(d))
}

/// `1234567` as `1,234,567`.
pub fn group_digits(s: &str) -> String {
    let (sign, digits) = s.strip_prefix('-').map_or(("", s), |d| ("-", d));
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return s.to_string();
    }
    let mut out = String::new();
    for (i, c) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i) % 3 == 0 {
            out.push(',');
        }
        out.push(c);
    }
    format!("{sign}{out}")
}

/// Prints a flat record in the selected format.
fn emit(out: &mut dyn Write, format: Format, human: bool, fields: &[(&str, String)]) -> std::io::Result<()> {
    match format {
        Format::JsonLines => {
            let map: serde_json::Map<String, serde_json::Value> =
                fields.iter().map(|(k, v)| (k.to_string(), serde_json::Value::String(v.clone()))).collect();
            writeln!(out, "{}", serde_json::Value::Object(map))
        }
        Format::Csv => {
            let row = |it: Vec<String>| it.iter().map(|v| verify::csv_field(v)).collect::<Vec<_>>().join(",");
            writeln!(out, "{}", row(fields.iter().map(|f| f.0.to_string()).collect()))?;
            writeln!(out, "{}", row(fields.iter().map(|f| f.1.clone()).collect()))
        }
        Format::Table => {
            let w = fields.iter().map(|f| f.0.len()).max().unwrap_or(0);
            for (k, v) in fields {
                let v = if human { group_digits(v) } else { v.clone() };
                writeln!(out, "{k:<w$}  {v}")?;
            }
            Ok(())
        }
    }
}

fn status_text(c: &CoverNumber) -> &'static str {
    match c {
        CoverNumber::Infinite { .. } => "infinite",
        CoverNumber::Finite(g) => match g.solution.status {
            Status::Optimal => "optimal",
            Status::UpperBoundOnly => "interval",
            Status::Infeasible => "infeasible",
        },
    }
}

fn cmd_sigma0(
    cfg: &RunConfig,
    out: &mut dyn Write,
    group: &str,
    mode: &str,
    class: Option<&str>,
    sigma: bool,
    dump: Option<&PathBuf>,
) -> Result<i32> {
    if let Some(class) = class {
        let n: u32 = group
            .strip_prefix('S')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| Error::Usage("--class needs a symmetric group Sn".into()))?;
        let lambda: Partition = class.parse()?;
        let (inst, assumed) = class_cover_instance(n, &lambda, &cfg.catalog, &[])?;
        let hint = family_cover(&inst);
        let g = greedy(&inst)?;
        let sol = solve_exact(&inst, cfg.budget, hint.as_deref());
        if let Some(p) = dump {
            std::fs::write(p, format!("{}{}", inst.dump(), sol.dump(&inst)))
                .map_err(|e| Error::Usage(e.to_string()))?;
        }
        let value = if sol.status == Status::Optimal {
            sol.size().to_string()
        } else {
            format!("[{}, {}]", sol.lower_bound, sol.size())
        };
        emit(
            out,
            cfg.format,
            cfg.human,
            &[
                ("group", group.to_string()),
                ("class", lambda.padded_to(n)?.to_string()),
                ("elements", inst.universe_len().to_string()),
                ("subgroups", inst.sets.len().to_string()),
                ("value", value),
                ("status", sol.status.to_string()),
                ("lower_bound", sol.lower_bound.to_string()),
                ("incumbent", sol.size().to_string()),
                ("greedy", g.size().to_string()),
                ("nodes", sol.nodes.to_string()),
                ("assumed_inputs", assumed.iter().map(|a| format!("maximality of {a}")).collect::<Vec<_>>().join("; ")),
            ],
        )
        .map_err(io)?;
        return Ok(0);
    }
    let g = resolve_group(group, &cfg.corpus)?;
    let symmetric = group.strip_prefix('S').is_some_and(|d| d.parse::<u32>().is_ok());
    let mode = match mode {
        "lattice" => Mode::Lattice,
        "catalog" => Mode::Catalog(&cfg.catalog),
        "auto" if symmetric && g.degree() >= 5 => Mode::Catalog(&cfg.catalog),
        "auto" => Mode::Lattice,
        other => return Err(Error::Usage(format!("unknown mode {other:?}"))),
    };
    let mode_name = if matches!(mode, Mode::Lattice) { "lattice" } else { "catalog" };
    let s0 = sigma0_exact(&g, mode, cfg.budget)?;
    let mut fields = vec![
        ("group", group.to_string()),
        ("order", g.order().to_string()),
        ("mode", mode_name.to_string()),
        ("sigma0", s0.display()),
        ("status", status_text(&s0).to_string()),
    ];
    match &s0 {
        CoverNumber::Infinite { reason } => fields.push(("reason", reason.clone())),
        CoverNumber::Finite(c) => {
            fields.push(("cover", c.labels().join(" ")));
            fields.push(("nodes", c.solution.nodes.to_string()));
            fields.push(("assumed_inputs", c.assumed_inputs.join("; ")));
            if let Some(p) = dump {
                std::fs::write(p, format!("{}{}", c.instance.dump(), c.solution.dump(&c.instance)))
                    .map_err(|e| Error::Usage(e.to_string()))?;
            }
        }
    }
    if sigma {
        let s = sigma_exact(&g, mode, cfg.budget)?;
        fields.push(("sigma", s.display()));
    }
    emit(out, cfg.format, cfg.human, &fields).map_err(io)?;
    Ok(0)
}

fn cmd_solve(cfg: &RunConfig, out: &mut dyn Write, file: &PathBuf) -> Result<i32> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Usage(format!("{}: {e}", file.display())))?;
    let inst = CoverInstance::parse(&text)?;
    let hint = family_cover(&inst);
    let sol = solve_exact(&inst, cfg.budget, hint.as_deref());
    match cfg.format {
        Format::Table => write!(out, "{}", sol.dump(&inst)).map_err(io)?,
        f => emit(
            out,
            f,
            false,
            &[
                ("status", sol.status.to_string()),
                ("size", sol.size().to_string()),
                ("lower_bound", sol.lower_bound.to_string()),
                ("nodes", sol.nodes.to_string()),
                ("chosen", sol.chosen.iter().map(|i| inst.sets[*i].label.clone()).collect::<Vec<_>>().join(" ")),
            ],
        )
        .map_err(io)?,
    }
    Ok(0)
}

fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write, id: &str, n: Option<u32>, max: Option<u32>) -> Result<i32> {
    let params =
        Params { n, max, budget: cfg.budget, heavy: cfg.explicit_budget, catalog: &cfg.catalog, corpus: &cfg.corpus };
    let reports: Vec<CheckReport> =
        if id == "all" { verify::run_all(&params)? } else { verify::run_check(id, &params)? };
    write!(out, "{}", render(&reports, cfg.format)).map_err(io)?;
    Ok(if reports.iter().any(CheckReport::failed) { 1 } else { 0 })
}

fn cmd_count(cfg: &RunConfig, out: &mut dyn Write, n: u32, family: &str, class: &str, enumerate: bool) -> Result<i32> {
    let spec = FamilySpec::parse(n, family)?;
    let lambda = class.parse::<Partition>()?.padded_to(n)?;
    let (value, formula): (Nat, String) = match &spec.kind {
        FamilyKind::Alternating => (intersect_alt(&lambda), "class size when the class is even, else 0".into()),
        FamilyKind::SetStab { m, .. } => {
            (intersect_setstab(&lambda, *m), format!("sum over sub-multisets of size {m} of the two class sizes"))
        }
        FamilyKind::BlockStab { d } if 2 * d == n && !enumerate => {
            (intersect_blockstab_half(&lambda)?, "half-block formula |class| |W| / n! · 2^(k-1)".into())
        }
        FamilyKind::BlockStab { d } => (intersect_blockstab(&lambda, *d)?, "block-system enumeration".into()),
        FamilyKind::Primitive { id } => {
            (intersect_primitive(&lambda, cfg.catalog.get(n, id)?), "element count in the catalogued group".into())
        }
    };
    emit(
        out,
        cfg.format,
        cfg.human,
        &[
            ("n", n.to_string()),
            ("family", spec.to_string()),
            ("class", lambda.to_string()),
            ("class_size", class_size(&lambda).to_string()),
            ("count", value.to_string()),
            ("formula", formula),
        ],
    )
    .map_err(io)?;
    Ok(0)
}

fn cmd_table(cfg: &RunConfig, out: &mut dyn Write, max: u32, solve: bool) -> Result<i32> {
    let rows = verify::reproduce_theorem_table(max, solve, &cfg.catalog)?;
    let mut bad = false;
    match cfg.format {
        Format::JsonLines => {
            for r in &rows {
                writeln!(out, "{}", serde_json::to_string(r).expect("rows serialize")).map_err(io)?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,case,claim,certified_by,solved").map_err(io)?;
            for r in &rows {
                let cells = [
                    r.n.to_string(),
                    r.case.clone(),
                    r.claim.to_string(),
                    r.certified_by.join("; "),
                    r.solved.clone().unwrap_or_default(),
                ];
                let line: Vec<String> = cells.iter().map(|c| verify::csv_field(c)).collect();
                writeln!(out, "{}", line.join(",")).map_err(io)?;
            }
        }
        Format::Table => {
            for r in &rows {
                let claim = if cfg.human { group_claim(&r.claim.to_string()) } else { r.claim.to_string() };
                let solved = r.solved.as_ref().map(|s| format!("  solved {s}")).unwrap_or_default();
                writeln!(out, "{:>3}  {:<28}  {}{}  [{}]", r.n, r.case, claim, solved, r.certified_by.join(", "))
                    .map_err(io)?;
            }
        }
    }
    for r in &rows {
        if let Some(s) = &r.solved {
            bad |= *s != r.claim.to_string();
        }
    }
    Ok(if bad { 1 } else { 0 })
}

fn group_claim(s: &str) -> String {
    match s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).and_then(|t| t.split_once(", ")) {
        Some((a, b)) => format!("[{}, {}]", group_digits(a), group_digits(b)),
        None => group_digits(s),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Usage(e.to_string())
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let result = RunConfig::from_common(&cli.common).and_then(|cfg| match &cli.command {
        Command::Sigma0 { group, mode, class, sigma, dump } => {
            cmd_sigma0(&cfg, out, group, mode, class.as_deref(), *sigma, dump.as_ref())
        }
        Command::Solve { file } => cmd_solve(&cfg, out, file),
        Command::Verify { id, n, max } => cmd_verify(&cfg, out, id, *n, *max),
        Command::Count { n, family, class, enumerate } => cmd_count(&cfg, out, *n, family, class, *enumerate),
        Command::Table { max, solve } => cmd_table(&cfg, out, *max, *solve),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budgets() {
        assert_eq!(parse_budget("5000").unwrap().max_nodes, 5000);
        assert_eq!(parse_budget("10m").unwrap().max_time, Some(Duration::from_secs(600)));
        assert_eq!(parse_budget("24h").unwrap().max_time, Some(Duration::from_secs(86400)));
        assert!(parse_budget("0").is_err());
        assert!(parse_budget("10x").is_err());
        assert!(parse_budget("m").is_err());
    }

    #[test]
    fn digits() {
        assert_eq!(group_digits("3175200"), "3,175,200");
        assert_eq!(group_digits("216"), "216");
        assert_eq!(group_digits("115.5"), "115.5");
        assert_eq!(group_claim("[117, 216]"), "[117, 216]");
    }
}
