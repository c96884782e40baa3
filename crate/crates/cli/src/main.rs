//! Command-line front end for the Hessenberg patch-ideal toolkit.
//!
//! Subcommands construct patch-ideal generators on flag-variety coordinate
//! charts, compute reduced Gröbner bases, detect triangular
//! complete-intersection structure, certify geometric vertex decompositions,
//! and check Frobenius-splitting compatibility.
//!
//! Exit codes: 0 = all checks passed, 1 = a mathematical check failed (the
//! failing check is named on stderr), 2 = usage error.  Reports are
//! deterministic given the flags and seed.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hesspatch::charts::{
    chain_ideal, column_major_order, hess_generators, reverse_order, row_major_order,
    HessenbergFunction, PatchIdeal, Permutation,
};
use hesspatch::frob::{
    build_f_n, compat_check, split_poset, Provenance, SplitPoset, SplittingElement,
};
use hesspatch::groebner::{autoreduce, is_groebner, Ideal, MonomialIdeal};
use hesspatch::gvd::{certify_w0_chain, detect_tci, tci_conclusions, GvdCertificate, TciFailure, TciOutcome};
use hesspatch::io::{load_ideal, ring_to_json, variable_from_str};
use hesspatch::{CoeffDomain, Error, Monomial, MonomialOrder, Polynomial, Ring};

#[derive(Parser)]
#[command(
    name = "hesspatch",
    version,
    about = "Hessenberg patch ideals on flag-variety charts: generators, Gröbner bases, \
             vertex-decomposition certificates, and Frobenius splittings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the patch-ideal generators f[k,l] for a chart (n, w) and Hessenberg function h
    Gens(GensArgs),
    /// Reduced Gröbner basis and initial-ideal report
    Gb(GbArgs),
    /// Detect triangular complete-intersection structure of the generator sequence
    Tci(TciArgs),
    /// Certify the geometric vertex decomposition chain on the w0 chart
    GvdCert(GvdCertArgs),
    /// Frobenius-splitting compatibility: single patch with --h, whole poset without
    Frob(FrobArgs),
    /// Certify one splitting compatibly splits every indecomposable patch ideal at size n
    Poset(PosetArgs),
    /// Reduced Gröbner bases of a general w-chart ideal under several lex orders
    Explore(ExploreArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
    /// Write the report to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GensArgs {
    /// Chart size n
    #[arg(long)]
    n: usize,
    /// Hessenberg function values as a comma list, e.g. 2,3,4,5,5
    #[arg(long)]
    h: String,
    /// Chart permutation: "w0" or one-line notation like 4,3,2,1
    #[arg(long, default_value = "w0")]
    w: String,
    /// Work over F_p instead of Q
    #[arg(long)]
    p: Option<u64>,
    /// Restrict to the m-th chain ideal (w0 charts only)
    #[arg(long)]
    m: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct IdealSource {
    /// Chart size n (with --h; alternative to --ideal)
    #[arg(long)]
    n: Option<usize>,
    /// Hessenberg function values as a comma list, e.g. 2,3,4,5,5
    #[arg(long)]
    h: Option<String>,
    /// Chart permutation: "w0" or one-line notation like 4,3,2,1
    #[arg(long, default_value = "w0")]
    w: String,
    /// Work over F_p instead of Q
    #[arg(long)]
    p: Option<u64>,
    /// Restrict to the m-th chain ideal (w0 charts only)
    #[arg(long)]
    m: Option<usize>,
    /// Load the ideal from a JSON file instead of building a patch ideal
    #[arg(long, value_name = "PATH")]
    ideal: Option<PathBuf>,
}

#[derive(Args)]
struct GbArgs {
    #[command(flatten)]
    source: IdealSource,
    /// Monomial order: default | row-major | col-major | reverse | explicit
    /// variable list, most significant first (e.g. "x[2,1],x[1,2],x[1,1]")
    #[arg(long, default_value = "default")]
    order: String,
    /// Also tabulate the graded Hilbert function of R/in(I) up to this degree
    #[arg(long)]
    dmax: Option<i64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct TciArgs {
    #[command(flatten)]
    source: IdealSource,
    /// Monomial order: default | row-major | col-major | reverse | explicit
    /// variable list, most significant first
    #[arg(long, default_value = "default")]
    order: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct GvdCertArgs {
    /// Chart size n
    #[arg(long)]
    n: usize,
    /// Hessenberg function values as a comma list, e.g. 2,3,4,5,5
    #[arg(long)]
    h: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FrobArgs {
    /// Chart size n
    #[arg(long)]
    n: usize,
    /// The prime characteristic
    #[arg(long)]
    p: u64,
    /// Single Hessenberg function; omit to certify the whole poset
    #[arg(long)]
    h: Option<String>,
    /// Seed for the sampled direct checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random monomials tested per generator
    #[arg(long, default_value_t = 20)]
    samples: u64,
    /// Extra total degree allowed for sampled monomials
    #[arg(long, default_value_t = 2)]
    margin: u64,
    /// Term-count budget for expanding the splitting power
    #[arg(long, default_value_t = 1 << 24)]
    budget: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct PosetArgs {
    /// Chart size n
    #[arg(long)]
    n: usize,
    /// The prime characteristic
    #[arg(long)]
    p: u64,
    /// Seed for the sampled direct checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random monomials tested per generator
    #[arg(long, default_value_t = 20)]
    samples: u64,
    /// Extra total degree allowed for sampled monomials
    #[arg(long, default_value_t = 2)]
    margin: u64,
    /// Term-count budget for expanding the splitting power
    #[arg(long, default_value_t = 1 << 24)]
    budget: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ExploreArgs {
    /// Chart size n (at most 5)
    #[arg(long)]
    n: usize,
    /// Hessenberg function values as a comma list, e.g. 2,3,4,4
    #[arg(long)]
    h: String,
    /// Chart permutation: "w0" or one-line notation like 4,3,2,1
    #[arg(long, default_value = "w0")]
    w: String,
    /// Work over F_p instead of Q
    #[arg(long)]
    p: Option<u64>,
    /// Comma list of order presets to run: row-major, col-major, reverse, default
    #[arg(long, default_value = "row-major,col-major,reverse")]
    orders: String,
    /// Explicit lex order as a variable list, most significant first; repeatable
    #[arg(long, action = clap::ArgAction::Append)]
    order: Vec<String>,
    #[command(flatten)]
    output: OutputArgs,
}

/// How a command run can fail, carrying the exit code to report.
enum Failure {
    /// Invalid flags or inputs (exit 2).
    Usage(String),
    /// A named mathematical check failed (exit 1).
    Check(String),
    /// An engine error; the kind decides between usage and math failure.
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

/// Usage-class errors come from bad inputs; everything else is a failed
/// mathematical computation or check.
fn engine_exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::UnknownVariable(_)
        | Error::InvalidVariableSet(_)
        | Error::InvalidOrder(_)
        | Error::InvalidGrading(_)
        | Error::InvalidPermutation(_)
        | Error::InvalidHessenberg(_)
        | Error::IndexOutOfRange(_)
        | Error::TrivialHessenberg
        | Error::NotIndecomposable(_)
        | Error::NotPrime(_)
        | Error::NotAField(_)
        | Error::Unsupported(_)
        | Error::Io(_)
        | Error::Json(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(name)) => {
            eprintln!("error: check failed: {name}");
            ExitCode::from(1)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(engine_exit_code(&e))
        }
    }
}

/// A finished report: JSON and text renderings plus the names of any
/// failed checks.
struct Report {
    json: Value,
    text: String,
    failed_checks: Vec<String>,
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    let (report, output) = match cli.command {
        Command::Gens(args) => (run_gens(&args)?, args.output),
        Command::Gb(args) => (run_gb(&args)?, args.output),
        Command::Tci(args) => (run_tci(&args)?, args.output),
        Command::GvdCert(args) => (run_gvd_cert(&args)?, args.output),
        Command::Frob(args) => (run_frob(&args)?, args.output),
        Command::Poset(args) => (run_poset(&args)?, args.output),
        Command::Explore(args) => (run_explore(&args)?, args.output),
    };
    emit(&report, &output)?;
    if report.failed_checks.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(report.failed_checks.join(", ")))
    }
}

fn emit(report: &Report, output: &OutputArgs) -> Result<(), Failure> {
    let mut body = if output.json {
        serde_json::to_string_pretty(&report.json)
            .map_err(|e| Failure::Engine(Error::Json(e.to_string())))?
    } else {
        report.text.trim_end().to_string()
    };
    body.push('\n');
    match &output.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure::Engine(Error::Io(format!("{}: {e}", path.display())))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// flag parsing helpers

fn parse_usize_list(what: &str, s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("{what}: expected a comma list of integers, got {s:?}")))
        })
        .collect()
}

fn parse_h(s: &str) -> Result<HessenbergFunction, Failure> {
    let values = parse_usize_list("--h", s)?;
    HessenbergFunction::new(values).map_err(Failure::Engine)
}

fn parse_w(n: usize, s: &str) -> Result<Permutation, Failure> {
    if s == "w0" {
        return Ok(Permutation::w0(n));
    }
    let values = parse_usize_list("--w", s)?;
    if values.len() != n {
        return Err(Failure::Usage(format!(
            "--w: one-line notation must list {n} values, got {}",
            values.len()
        )));
    }
    Permutation::from_one_line(values).map_err(Failure::Engine)
}

fn domain_for(p: Option<u64>) -> Result<CoeffDomain, Failure> {
    match p {
        Some(p) => CoeffDomain::prime(p).map_err(Failure::Engine),
        None => Ok(CoeffDomain::Rational),
    }
}

/// Split on commas that are not inside square brackets, so explicit order
/// lists like "x[2,1],x[1,2]" tokenize by variable.
fn split_outside_brackets(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in s.chars() {
        match c {
            '[' => {
                depth += 1;
                current.push(c);
            }
            ']' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                parts.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        parts.push(current.trim().to_string());
    }
    parts
}

/// Resolve an `--order` value: a preset name or an explicit variable list
/// (most significant first, covering every ring variable).
fn resolve_order(ring: &Ring, descriptor: &str) -> Result<MonomialOrder, Failure> {
    match descriptor {
        "default" => Ok(ring.default_order()),
        "row-major" => Ok(row_major_order(ring)),
        "col-major" => Ok(column_major_order(ring)?),
        "reverse" => Ok(reverse_order(ring)),
        explicit => {
            let names = split_outside_brackets(explicit);
            if names.len() != ring.num_vars() {
                return Err(Failure::Usage(format!(
                    "--order: expected a preset or all {} variables, got {} names",
                    ring.num_vars(),
                    names.len()
                )));
            }
            let mut priority = Vec::with_capacity(names.len());
            for name in &names {
                let var = variable_from_str(name);
                let idx = ring
                    .var_index(&var)
                    .ok_or_else(|| Failure::Engine(Error::UnknownVariable(name.clone())))?;
                priority.push(idx);
            }
            MonomialOrder::from_priority(priority).map_err(Failure::Engine)
        }
    }
}

// ---------------------------------------------------------------------------
// report building blocks

fn mono_str(ring: &Ring, m: &Monomial) -> String {
    Polynomial::term(ring, m.clone(), ring.domain().one()).to_string()
}

fn poly_strings(polys: &[Polynomial], order: &MonomialOrder) -> Vec<String> {
    polys.iter().map(|f| f.to_string_with(order)).collect()
}

fn field_str(domain: &CoeffDomain) -> String {
    match domain {
        CoeffDomain::Rational => "Q".to_string(),
        CoeffDomain::Integer => "Z".to_string(),
        CoeffDomain::Prime(p) => format!("F{p}"),
    }
}

fn order_priority_names(ring: &Ring, order: &MonomialOrder) -> Vec<String> {
    order
        .priority()
        .iter()
        .map(|&v| ring.var(v).to_string())
        .collect()
}

fn checks_json(checks: &[(&str, bool)]) -> Value {
    let mut map = serde_json::Map::new();
    for (name, ok) in checks {
        map.insert((*name).to_string(), json!(ok));
    }
    Value::Object(map)
}

fn failed_names(checks: &[(&str, bool)]) -> Vec<String> {
    checks
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| (*name).to_string())
        .collect()
}

/// Build the patch and optionally cut down to the m-th chain ideal.
fn patch_and_ideal(
    n: usize,
    w: &Permutation,
    h: &HessenbergFunction,
    domain: CoeffDomain,
    m: Option<usize>,
) -> Result<(PatchIdeal, Ideal, Vec<(usize, usize)>), Failure> {
    let patch = hess_generators(n, w, h, domain)?;
    let (ideal, positions) = match m {
        Some(m) => {
            let ideal = chain_ideal(&patch, m)?;
            let positions = hesspatch::charts::chain_positions(h, m)?;
            (ideal, positions)
        }
        None => (patch.ideal(), patch.positions().to_vec()),
    };
    Ok((patch, ideal, positions))
}

/// Resolve --ideal / --n,--h into an ideal plus a JSON input descriptor and
/// text header lines.
fn resolve_source(source: &IdealSource) -> Result<(Ideal, Value, String), Failure> {
    if let Some(path) = &source.ideal {
        if source.n.is_some() || source.h.is_some() || source.m.is_some() || source.p.is_some() {
            return Err(Failure::Usage(
                "--ideal cannot be combined with --n/--h/--m/--p".into(),
            ));
        }
        let ideal = load_ideal(path)?;
        let desc = json!({ "file": path.display().to_string() });
        let head = format!(
            "ideal file = {}\nfield = {}\n",
            path.display(),
            field_str(ideal.ring().domain())
        );
        return Ok((ideal, desc, head));
    }
    let (n, h_str) = match (source.n, &source.h) {
        (Some(n), Some(h)) => (n, h.as_str()),
        _ => {
            return Err(Failure::Usage(
                "either --ideal PATH or both --n and --h are required".into(),
            ))
        }
    };
    let h = parse_h(h_str)?;
    let w = parse_w(n, &source.w)?;
    let domain = domain_for(source.p)?;
    let (_, ideal, _) = patch_and_ideal(n, &w, &h, domain.clone(), source.m)?;
    let mut desc = serde_json::Map::new();
    desc.insert("n".into(), json!(n));
    desc.insert("w".into(), json!(w.one_line()));
    desc.insert("h".into(), json!(h.values()));
    if let Some(m) = source.m {
        desc.insert("m".into(), json!(m));
    }
    let mut head = format!("n = {n}\nw = {w}\nh = {h}\nfield = {}\n", field_str(&domain));
    if let Some(m) = source.m {
        let _ = writeln!(head, "chain level m = {m}");
    }
    Ok((ideal, Value::Object(desc), head))
}

// ---------------------------------------------------------------------------
// gens

fn run_gens(args: &GensArgs) -> Result<Report, Failure> {
    let h = parse_h(&args.h)?;
    let w = parse_w(args.n, &args.w)?;
    let domain = domain_for(args.p)?;
    let (patch, ideal, positions) = patch_and_ideal(args.n, &w, &h, domain.clone(), args.m)?;
    let order = patch.ring().default_order();

    let mut text = format!(
        "n = {}\nw = {}\nh = {}\nfield = {}\n",
        args.n,
        w,
        h,
        field_str(&domain)
    );
    if let Some(m) = args.m {
        let _ = writeln!(text, "chain level m = {m}");
    }
    for &(k, l) in &positions {
        let _ = writeln!(text, "f[{k},{l}] = {}", patch.entry(k, l).to_string_with(&order));
    }

    let mut top = serde_json::Map::new();
    top.insert("n".into(), json!(args.n));
    top.insert("w".into(), json!(w.one_line()));
    top.insert("h".into(), json!(h.values()));
    if let Some(m) = args.m {
        top.insert("m".into(), json!(m));
    }
    top.insert(
        "positions".into(),
        json!(positions.iter().map(|&(k, l)| json!([k, l])).collect::<Vec<_>>()),
    );
    top.insert("ring".into(), ring_to_json(patch.ring()));
    top.insert("generators".into(), json!(poly_strings(ideal.gens(), &order)));

    Ok(Report {
        json: Value::Object(top),
        text,
        failed_checks: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// gb

fn run_gb(args: &GbArgs) -> Result<Report, Failure> {
    let (ideal, input, head) = resolve_source(&args.source)?;
    let ring = ideal.ring().clone();
    let order = resolve_order(&ring, &args.order)?;

    let gb = ideal.groebner_basis(&order)?;
    let reduced = autoreduce(&gb, &order)?;
    let confirmed = is_groebner(&reduced, &order)?;
    let leads: Vec<Monomial> = reduced
        .iter()
        .filter_map(|g| g.leading_monomial(&order).cloned())
        .collect();
    let initial = MonomialIdeal::new(&ring, leads);
    let squarefree = initial.is_squarefree();
    let indeterminates = initial.is_ideal_of_indeterminates();
    let dimension = initial.dimension().ok();
    let hilbert = match (args.dmax, ring.grading()) {
        (Some(dmax), Some(grading)) => Some(initial.hilbert_function(grading, dmax)?),
        (Some(_), None) => {
            return Err(Failure::Usage(
                "--dmax needs a graded ring (chart rings carry their grading)".into(),
            ))
        }
        _ => None,
    };

    let checks = [("s_polynomials_reduce_to_zero", confirmed)];
    let initial_strs: Vec<String> = initial.gens().iter().map(|m| mono_str(&ring, m)).collect();

    let mut text = head;
    let _ = writeln!(text, "order = {}", order_priority_names(&ring, &order).join(" > "));
    let _ = writeln!(text, "reduced Groebner basis ({} elements):", reduced.len());
    for g in &reduced {
        let _ = writeln!(text, "  {}", g.to_string_with(&order));
    }
    let _ = writeln!(text, "initial ideal = <{}>", initial_strs.join(", "));
    let _ = writeln!(text, "squarefree = {squarefree}");
    let _ = writeln!(text, "ideal of indeterminates = {indeterminates}");
    match dimension {
        Some(d) => {
            let _ = writeln!(text, "dimension = {d}");
        }
        None => {
            let _ = writeln!(text, "dimension = (not computed)");
        }
    }
    if let Some(values) = &hilbert {
        let _ = writeln!(text, "hilbert function of R/in(I) = {values:?}");
    }
    let _ = writeln!(text, "s-polynomials reduce to zero: {confirmed}");

    let json = json!({
        "input": input,
        "field": field_str(ring.domain()),
        "order": order_priority_names(&ring, &order),
        "reduced_groebner_basis": poly_strings(&reduced, &order),
        "initial_ideal": initial_strs,
        "squarefree": squarefree,
        "ideal_of_indeterminates": indeterminates,
        "dimension": dimension,
        "hilbert_function": hilbert,
        "checks": checks_json(&checks),
    });

    Ok(Report {
        json,
        text,
        failed_checks: failed_names(&checks),
    })
}

// ---------------------------------------------------------------------------
// tci

fn run_tci(args: &TciArgs) -> Result<Report, Failure> {
    let (ideal, input, head) = resolve_source(&args.source)?;
    let ring = ideal.ring().clone();
    let order = resolve_order(&ring, &args.order)?;

    let outcome = detect_tci(ideal.gens(), &order)?;
    let mut text = head;
    let _ = writeln!(text, "order = {}", order_priority_names(&ring, &order).join(" > "));

    match outcome {
        TciOutcome::NotTriangular(failure) => {
            let (kind, detail) = match failure {
                TciFailure::NonVariableLead { index } => (
                    "non_variable_lead",
                    json!({ "generator": index }),
                ),
                TciFailure::LeadVarReappears { index, later } => (
                    "lead_variable_reappears",
                    json!({ "generator": index, "reappears_in": later }),
                ),
            };
            let checks = [("triangular_lead_structure", false)];
            let _ = writeln!(text, "triangular = false ({kind})");
            let json = json!({
                "input": input,
                "order": order_priority_names(&ring, &order),
                "triangular": false,
                "failure": { "kind": kind, "detail": detail },
                "checks": checks_json(&checks),
            });
            Ok(Report {
                json,
                text,
                failed_checks: failed_names(&checks),
            })
        }
        TciOutcome::Triangular(witness) => {
            let conclusions = tci_conclusions(&witness)?;
            let lead_names: Vec<String> = witness
                .lead_vars()
                .iter()
                .map(|&v| ring.var(v).to_string())
                .collect();
            let unit_strs: Vec<String> =
                witness.units().iter().map(|u| u.to_string()).collect();
            let initial_strs: Vec<String> = conclusions
                .initial_ideal
                .gens()
                .iter()
                .map(|m| mono_str(&ring, m))
                .collect();
            let checks = [("triangular_lead_structure", true)];

            let _ = writeln!(text, "triangular = true");
            let _ = writeln!(text, "lead variables = {}", lead_names.join(", "));
            let _ = writeln!(text, "units = {}", unit_strs.join(", "));
            let _ = writeln!(text, "height = {}", conclusions.height);
            let _ = writeln!(text, "dimension = {}", conclusions.dimension);
            let _ = writeln!(text, "initial ideal = <{}>", initial_strs.join(", "));
            let _ = writeln!(
                text,
                "generators are a Groebner basis: true (pairwise coprime single-variable leads)"
            );

            let json = json!({
                "input": input,
                "order": order_priority_names(&ring, &order),
                "triangular": true,
                "lead_variables": lead_names,
                "units": unit_strs,
                "height": conclusions.height,
                "dimension": conclusions.dimension,
                "initial_ideal": initial_strs,
                "groebner_basis": poly_strings(&conclusions.groebner_basis, &order),
                "checks": checks_json(&checks),
            });
            Ok(Report {
                json,
                text,
                failed_checks: failed_names(&checks),
            })
        }
    }
}

// ---------------------------------------------------------------------------
// gvd-cert

fn render_certificate(cert: &GvdCertificate) -> String {
    let mut text = format!("n = {}\nh = {}\n", cert.n, cert.h);
    if cert.steps.is_empty() {
        let _ = writeln!(text, "steps: none");
    } else {
        let _ = writeln!(text, "steps:");
        for step in &cert.steps {
            let _ = writeln!(
                text,
                "  n={} m={}: y = {}, witness = {}, kind = {}, checks = {}",
                step.level_n,
                step.m,
                step.y,
                step.witness,
                if step.kind.is_degenerate() { "degenerate" } else { "non-degenerate" },
                if step.checks.all() { "pass" } else { "FAIL" },
            );
        }
    }
    let _ = writeln!(
        text,
        "terminal: {} after {} relabeling(s)",
        cert.base_case.as_str(),
        cert.relabel_depth
    );
    text
}

fn run_gvd_cert(args: &GvdCertArgs) -> Result<Report, Failure> {
    let h = parse_h(&args.h)?;
    let cert = certify_w0_chain(args.n, &h)?;
    let text = render_certificate(&cert);
    Ok(Report {
        json: cert.to_json(),
        text,
        failed_checks: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// frob / poset

fn render_poset(poset: &SplitPoset) -> String {
    let mut text = format!(
        "n = {}, p = {}, splitting = F_n^(p-1)\nunit check Tr = 1: {}\nnodes ({}):\n",
        poset.n,
        poset.p,
        if poset.unit_check { "pass" } else { "FAIL" },
        poset.nodes.len()
    );
    for node in &poset.nodes {
        let _ = writeln!(
            text,
            "  h = {}: membership = {}, sampled = {} with {} failures",
            node.h,
            if node.report.frob_power_membership { "pass" } else { "FAIL" },
            node.report.sampled.count,
            node.report.sampled.failures
        );
    }
    let _ = writeln!(text, "containments ({}):", poset.edges.len());
    for &(a, b) in &poset.edges {
        let _ = writeln!(
            text,
            "  I{} contains I{}",
            poset.nodes[a].h, poset.nodes[b].h
        );
    }
    text
}

fn poset_report(poset: &SplitPoset) -> Report {
    let all_nodes_pass = poset.nodes.iter().all(|n| n.report.passed());
    let no_sample_failures = poset.nodes.iter().all(|n| n.report.sampled.failures == 0);
    let checks = [
        ("unit_trace_is_one", poset.unit_check),
        ("frob_power_membership", all_nodes_pass),
        ("sampled_checks_clean", no_sample_failures),
    ];
    Report {
        json: poset.to_json(),
        text: render_poset(poset),
        failed_checks: failed_names(&checks),
    }
}

fn run_poset_common(
    n: usize,
    p: u64,
    seed: u64,
    samples: u64,
    margin: u64,
    budget: usize,
) -> Result<Report, Failure> {
    let poset = split_poset(n, p, seed, samples, margin, budget)?;
    Ok(poset_report(&poset))
}

fn run_poset(args: &PosetArgs) -> Result<Report, Failure> {
    run_poset_common(args.n, args.p, args.seed, args.samples, args.margin, args.budget)
}

fn run_frob(args: &FrobArgs) -> Result<Report, Failure> {
    let Some(h_str) = &args.h else {
        return run_poset_common(args.n, args.p, args.seed, args.samples, args.margin, args.budget);
    };
    let h = parse_h(h_str)?;
    if h.n() != args.n {
        return Err(Failure::Usage(format!(
            "--h lists {} values but --n is {}",
            h.n(),
            args.n
        )));
    }
    let w0 = Permutation::w0(args.n);
    let patch = hess_generators(args.n, &w0, &h, CoeffDomain::prime(args.p)?)?;
    let ring = patch.ring().clone();
    let order = ring.default_order();
    let f_n = build_f_n(args.n)?;
    let s = SplittingElement::from_base(&f_n, args.p, Provenance::FnPower, &order, args.budget)?;
    let unit = s.unit_check()?;
    let ideal = patch.ideal();
    let report = compat_check(&s, &ideal, &order, args.seed, args.samples, args.margin)?;

    let checks = [
        ("unit_trace_is_one", unit),
        ("frob_power_membership", report.frob_power_membership),
        ("sampled_checks_clean", report.sampled.failures == 0),
    ];

    let mut text = format!(
        "n = {}, p = {}, h = {}, splitting = F_n^(p-1)\nunit check Tr = 1: {}\n",
        args.n,
        args.p,
        h,
        if unit { "pass" } else { "FAIL" }
    );
    let _ = writeln!(
        text,
        "Frobenius-power membership f*g in I^[p]: {}",
        if report.frob_power_membership { "pass" } else { "FAIL" }
    );
    for (&(k, l), ok) in patch.positions().iter().zip(&report.per_generator) {
        let _ = writeln!(text, "  f[{k},{l}]: {}", if *ok { "pass" } else { "FAIL" });
    }
    let _ = writeln!(
        text,
        "sampled direct checks: {} with {} failures (seed {})",
        report.sampled.count, report.sampled.failures, report.seed
    );

    let json = json!({
        "n": args.n,
        "p": args.p,
        "h": h.to_string(),
        "splitting": "F_n^(p-1)",
        "unit_check": unit,
        "generators": poly_strings(&patch.generators(), &order),
        "frob_power_membership": report.frob_power_membership,
        "per_generator": report.per_generator,
        "sampled_direct_checks": {
            "count": report.sampled.count,
            "failures": report.sampled.failures,
        },
        "seed": report.seed,
        "checks": checks_json(&checks),
    });

    Ok(Report {
        json,
        text,
        failed_checks: failed_names(&checks),
    })
}

// ---------------------------------------------------------------------------
// explore

fn run_explore(args: &ExploreArgs) -> Result<Report, Failure> {
    if args.n > 5 {
        return Err(Failure::Usage(format!(
            "explore is capped at n = 5, got n = {}",
            args.n
        )));
    }
    let h = parse_h(&args.h)?;
    let w = parse_w(args.n, &args.w)?;
    let domain = domain_for(args.p)?;
    let patch = hess_generators(args.n, &w, &h, domain.clone())?;
    let ring = patch.ring().clone();
    let ideal = patch.ideal();

    let mut order_names: Vec<String> = args
        .orders
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    order_names.extend(args.order.iter().cloned());
    if order_names.is_empty() {
        return Err(Failure::Usage("no orders given".into()));
    }

    let pattern = w.contains_321_pattern();
    let mut text = format!(
        "n = {}, w = {}, h = {}, field = {}\nw contains a decreasing pattern of length 3: {}\n",
        args.n,
        w,
        h,
        field_str(&domain),
        pattern
    );
    let mut order_reports = Vec::new();
    for name in &order_names {
        let order = resolve_order(&ring, name)?;
        let gb = ideal.groebner_basis(&order)?;
        let reduced = autoreduce(&gb, &order)?;
        let leads: Vec<Monomial> = reduced
            .iter()
            .filter_map(|g| g.leading_monomial(&order).cloned())
            .collect();
        let initial = MonomialIdeal::new(&ring, leads);
        let squarefree = initial.is_squarefree();
        let indeterminates = initial.is_ideal_of_indeterminates();
        let initial_strs: Vec<String> =
            initial.gens().iter().map(|m| mono_str(&ring, m)).collect();
        let _ = writeln!(
            text,
            "order {}: reduced GB size = {}, squarefree = {}, ideal of indeterminates = {}",
            name,
            reduced.len(),
            squarefree,
            indeterminates
        );
        let _ = writeln!(text, "  initial ideal = <{}>", initial_strs.join(", "));
        for g in &reduced {
            let _ = writeln!(text, "  {}", g.to_string_with(&order));
        }
        order_reports.push(json!({
            "order": name,
            "priority": order_priority_names(&ring, &order),
            "reduced_groebner_basis": poly_strings(&reduced, &order),
            "initial_ideal": initial_strs,
            "squarefree": squarefree,
            "ideal_of_indeterminates": indeterminates,
        }));
    }

    let json = json!({
        "n": args.n,
        "w": w.one_line(),
        "h": h.values(),
        "field": field_str(&domain),
        "contains_321_pattern": pattern,
        "orders": order_reports,
    });

    Ok(Report {
        json,
        text,
        failed_checks: Vec::new(),
    })
}
