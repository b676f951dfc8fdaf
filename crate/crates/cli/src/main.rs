use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use stated_skein::algebras::{algebra, Builtin, Surface};
use stated_skein::frobenius::check_order;
use stated_skein::gluing::{self, truncated_kernel_solve, GluingScenario, KernelProblem, Scenario};
use stated_skein::poisson::{r_matrix_bracket, star_bracket, Orientation};
use stated_skein::suites::{all_passed, presentation_confluence, run_suite, Suite, SuiteOptions};
use stated_skein::syntax::{format_json, format_poly, parse_expr, PresentationFile};
use stated_skein::{Algebra, Report, Result, Ring, SkeinError};

const SCHEMA: u32 = 1;

/// Exact computations in stated skein algebras of the bigon and triangle.
#[derive(Parser, Debug)]
#[command(name = "skein", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// laurent, cyclo:N or dual.
    #[arg(long, value_parser = parse_ring)]
    ring: Option<Ring>,
    /// Root-of-unity order.
    #[arg(long = "N", value_name = "N")]
    n: Option<u32>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce an expression to normal form.
    Reduce {
        /// Builtin name, or a comma-separated list for a tensor product.
        #[arg(long, default_value = "bigon")]
        algebra: String,
        /// Read the presentation from a JSON file instead.
        #[arg(long)]
        presentation_file: Option<PathBuf>,
        /// Print the presentation (builtin or file) in file format and exit.
        #[arg(long)]
        export: bool,
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Poisson bracket of two elements at ω = +1.
    Bracket {
        #[arg(long, value_parser = parse_surface, default_value = "triangle")]
        surface: Surface,
        /// Boundary orientation signs, e.g. `+,-` (r-matrix route only).
        #[arg(long, value_parser = parse_orientation, allow_hyphen_values = true)]
        orientation: Option<Orientation>,
        #[arg(long, value_enum, default_value_t = Route::Star)]
        route: Route,
        #[arg(long)]
        json: bool,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Solve for the glued subalgebra of a square or punctured disc.
    Glue {
        #[arg(long, value_parser = parse_scenario, default_value = "square")]
        scenario: Scenario,
        #[arg(long, default_value_t = 2)]
        kernel_degree: usize,
        /// Word-length bound; defaults to max(degree, 2).
        #[arg(long)]
        max_len: Option<usize>,
        /// Cap on the number of domain words.
        #[arg(long)]
        cap: Option<usize>,
        /// Catalogue elements to test, e.g. `abar[+,-]`; default: all.
        #[arg(long)]
        element: Vec<String>,
        /// Omit the kernel basis from the output.
        #[arg(long)]
        no_basis: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, value_parser = parse_builtin)]
        algebra: Option<Builtin>,
        #[arg(long)]
        presentation_file: Option<PathBuf>,
        #[arg(long, value_parser = parse_surface)]
        surface: Option<Surface>,
        #[arg(long, value_parser = parse_orientation, allow_hyphen_values = true)]
        orientation: Option<Orientation>,
        #[arg(long, value_parser = parse_scenario)]
        scenario: Option<Scenario>,
        #[arg(long)]
        kernel_degree: Option<usize>,
        /// Number of matrices in the trace identity.
        #[arg(long)]
        k: Option<usize>,
        /// Overlap length for completing presentations.
        #[arg(long)]
        max_len: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    /// First-order commutator of the deformation.
    Star,
    /// Classical r-matrix formula on the character variety.
    Rmatrix,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Relations,
    Hopf,
    Confluence,
    Frobenius,
    Chebyshev,
    Trace,
    Poisson,
    Gluing,
    All,
}

impl SuiteArg {
    fn suite(self) -> Suite {
        match self {
            SuiteArg::Relations => Suite::Relations,
            SuiteArg::Hopf => Suite::Hopf,
            SuiteArg::Confluence => Suite::Confluence,
            SuiteArg::Frobenius => Suite::Frobenius,
            SuiteArg::Chebyshev => Suite::Chebyshev,
            SuiteArg::Trace => Suite::Trace,
            SuiteArg::Poisson => Suite::Poisson,
            SuiteArg::Gluing => Suite::Gluing,
            SuiteArg::All => Suite::All,
        }
    }
}

fn parse_ring(s: &str) -> std::result::Result<Ring, String> {
    Ring::parse(s).map_err(|e| e.to_string())
}

fn parse_surface(s: &str) -> std::result::Result<Surface, String> {
    Surface::parse(s).map_err(|e| e.to_string())
}

fn parse_builtin(s: &str) -> std::result::Result<Builtin, String> {
    Builtin::parse(s).map_err(|e| e.to_string())
}

fn parse_orientation(s: &str) -> std::result::Result<Orientation, String> {
    Orientation::parse(s).map_err(|e| e.to_string())
}

fn parse_scenario(s: &str) -> std::result::Result<Scenario, String> {
    Scenario::parse(s).map_err(|e| e.to_string())
}

/// Outcome of a command: printed output and whether every check passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, passed: true }
    }
}

fn load_file(path: &PathBuf) -> Result<PresentationFile> {
    let text = std::fs::read_to_string(path).map_err(|e| SkeinError::File(format!("{}: {e}", path.display())))?;
    PresentationFile::from_json(&text)
}

fn build_algebra(names: &str, file: Option<&PathBuf>, ring: Option<Ring>) -> Result<Algebra> {
    if let Some(path) = file {
        return Ok(Algebra::single(Arc::new(load_file(path)?.build(ring)?)));
    }
    let ring = ring.unwrap_or(Ring::Laurent);
    let factors = names.split(',').map(|n| algebra(Builtin::parse(n.trim())?, ring)).collect::<Result<Vec<_>>>()?;
    if factors.len() == 1 {
        return Ok(factors.into_iter().next().expect("one factor"));
    }
    Algebra::tensor(&factors.iter().collect::<Vec<_>>())
}

fn ring_with_n(common: &Common) -> Result<Option<Ring>> {
    match (common.ring, common.n) {
        (Some(r), _) => Ok(Some(r)),
        (None, Some(n)) => Ok(Some(check_order(n)?)),
        (None, None) => Ok(None),
    }
}

fn reduce(algebra_names: &str, file: Option<&PathBuf>, export: bool, common: &Common, expr: Option<&str>) -> Result<Outcome> {
    let alg = build_algebra(algebra_names, file, ring_with_n(common)?)?;
    if export {
        if alg.slots() != 1 {
            return Err(SkeinError::Unsupported("only single presentations export".into()));
        }
        return Ok(Outcome::ok(PresentationFile::export(alg.factor(0)?).to_json()));
    }
    let expr = expr.ok_or_else(|| SkeinError::Parse { pos: 0, msg: "missing expression".into() })?;
    let p = parse_expr(expr, &alg)?;
    Ok(Outcome::ok(if common.json { format_json(&alg, &p) } else { format_poly(&alg, &p) }))
}

fn bracket(surface: Surface, orientation: Option<Orientation>, route: Route, json: bool, u: &str, v: &str) -> Result<Outcome> {
    let (alg, b) = match route {
        Route::Star => {
            let alg = algebra(surface.plus1(), Ring::Laurent)?;
            let (pu, pv) = (parse_expr(u, &alg)?, parse_expr(v, &alg)?);
            let b = star_bracket(&alg, &pu, &pv)?;
            (alg, b)
        }
        Route::Rmatrix => {
            let o = orientation.unwrap_or_else(|| Orientation::all(surface).remove(0));
            o.fit(surface)?;
            let table = r_matrix_bracket(surface, &o)?;
            let alg = algebra(surface.charvar(), Ring::Laurent)?;
            let (pu, pv) = (parse_expr(u, &alg)?, parse_expr(v, &alg)?);
            let b = table.bracket(&pu, &pv)?;
            (alg, b)
        }
    };
    Ok(Outcome::ok(if json { format_json(&alg, &b) } else { format_poly(&alg, &b) }))
}

struct GlueArgs<'a> {
    scenario: Scenario,
    degree: usize,
    max_len: Option<usize>,
    cap: Option<usize>,
    elements: &'a [String],
    basis: bool,
    common: &'a Common,
}

fn glue(a: GlueArgs) -> Result<Outcome> {
    let ring = match a.common.ring {
        Some(r) => r,
        None => check_order(a.common.n.unwrap_or(3))?,
    };
    let sc = GluingScenario::quantum(a.scenario, ring)?;
    let mut problem = KernelProblem::new(&sc, a.degree);
    if let Some(m) = a.max_len {
        problem.max_len = m;
    }
    if let Some(c) = a.cap {
        problem.cap = c;
    }
    let sol = truncated_kernel_solve(&problem)?;
    let names = if a.elements.is_empty() { sc.catalog() } else { a.elements.to_vec() };
    let mut members = Report::new(&format!("membership {} d={}", a.scenario, a.degree));
    let mut rows = Vec::new();
    for name in &names {
        let x = sc.glued_element(name)?;
        let defect_zero = sc.is_in_kernel(&x)?;
        let degree = x.terms().map(|(w, _)| sc.seam_degree(w)).max().unwrap_or(0);
        let in_kernel = if degree <= a.degree { Some(sol.contains(&x)?) } else { None };
        members.record(format!("{name} has zero defect"), "glued subalgebra", (!defect_zero).then(|| "nonzero defect".to_string()));
        rows.push(json!({"element": name, "defect_zero": defect_zero, "in_truncated_kernel": in_kernel}));
    }
    let members = members.finish();
    let reports = vec![members, gluing::kernel_check(a.scenario, a.degree, a.common.n.unwrap_or(3))];
    let passed = all_passed(&reports);
    let basis: Vec<String> = if a.basis { sol.basis.iter().map(|p| format_poly(&sc.algebra, p)).collect() } else { Vec::new() };
    let text = if a.common.json {
        serde_json::to_string_pretty(&json!({
            "schema": SCHEMA,
            "scenario": a.scenario.to_string(),
            "ring": ring.to_string(),
            "degree": a.degree,
            "max_len": problem.max_len,
            "domain_dim": sol.domain_dim,
            "rank": sol.rank,
            "kernel_dim": sol.basis.len(),
            "basis": basis,
            "elements": rows,
            "reports": reports,
            "passed": passed,
        }))
        .expect("json")
    } else {
        let mut s = format!(
            "{} over {}: degree {}, length {}: domain {}, rank {}, kernel {}\n",
            a.scenario,
            ring,
            a.degree,
            problem.max_len,
            sol.domain_dim,
            sol.rank,
            sol.basis.len()
        );
        for b in &basis {
            s.push_str(&format!("  {b}\n"));
        }
        for r in &reports {
            s.push_str(&format!("{r}\n"));
        }
        s.push_str(if passed { "PASS" } else { "FAIL" });
        s
    };
    Ok(Outcome { text, passed })
}

fn render_reports(reports: &[Report], json: bool) -> Outcome {
    let passed = all_passed(reports);
    let text = if json {
        let v: Value = json!({"schema": SCHEMA, "reports": reports, "passed": passed});
        serde_json::to_string_pretty(&v).expect("json")
    } else {
        let mut s = String::new();
        for r in reports {
            s.push_str(&format!("{r}\n\n"));
        }
        let failed = reports.iter().filter(|r| !r.passed()).count();
        s.push_str(&format!("{} suites, {} failed: {}", reports.len(), failed, if passed { "PASS" } else { "FAIL" }));
        s
    };
    Outcome { text, passed }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Reduce { algebra, presentation_file, export, common, expr } => {
            reduce(&algebra, presentation_file.as_ref(), export, &common, expr.as_deref())
        }
        Command::Bracket { surface, orientation, route, json, u, v } => bracket(surface, orientation, route, json, &u, &v),
        Command::Glue { scenario, kernel_degree, max_len, cap, element, no_basis, common } => glue(GlueArgs {
            scenario,
            degree: kernel_degree,
            max_len,
            cap,
            elements: &element,
            basis: !no_basis,
            common: &common,
        }),
        Command::Verify { suite, algebra, presentation_file, surface, orientation, scenario, kernel_degree, k, max_len, common } => {
            if let (Some(o), Some(s)) = (&orientation, surface) {
                o.fit(s)?;
            }
            if let Some(path) = presentation_file {
                if !matches!(suite, SuiteArg::Confluence | SuiteArg::Relations) {
                    return Err(SkeinError::Unsupported("--presentation-file applies to `verify confluence`".into()));
                }
                let p = load_file(&path)?.build(common.ring)?;
                let r = presentation_confluence(&p, max_len.unwrap_or(6));
                return Ok(render_reports(&[r], common.json));
            }
            let options = SuiteOptions { algebra, ring: common.ring, n: common.n, surface, orientation, scenario, kernel_degree, k, max_len };
            let reports = run_suite(suite.suite(), &options)?;
            Ok(render_reports(&reports, common.json))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{}", out.text);
            if out.passed { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
