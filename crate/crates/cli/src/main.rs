//! `quiverdet`: build bipartite determinantal ideals, check them, certify
//! S-pairs and run the tensor utilities.
//!
//! Exit codes: 0 success, 1 property refuted, 2 input error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use itertools::Itertools;

use quiverdet::groebner::{buchberger_check, initial_ideal_gens, is_squarefree, CheckOptions};
use quiverdet::minors::{expand_minor, natural_generators, Generator, MinorRef};
use quiverdet::poly::{is_prime_u64, render_monomial, s_polynomial, Coeff, Fp, OrderSpec, Polynomial};
use quiverdet::quiver::{parse_quiver, ConsistentOrder, Layout, QuiverSpec};
use quiverdet::spair::{analyze, build_chain, verify_chain};
use quiverdet::tensor::{independence_ideal, render_matrix, triple_eq_check, IndepStatement, Tensor, TensorVars};

#[derive(Parser, Debug)]
#[command(name = "quiverdet", version, about = "Groebner bases of bipartite determinantal ideals")]
struct Cli {
    /// Coefficients in GF(p) instead of the rationals.
    #[arg(long, global = true, value_name = "P")]
    field: Option<u64>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Print the natural generators.
    Gens {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Buchberger's criterion on the natural generators.
    Check {
        #[arg(long)]
        quiver: PathBuf,
        #[command(flatten)]
        opts: CheckArgs,
    },
    /// Chain certificates for generator pairs.
    Certify {
        #[arg(long)]
        quiver: PathBuf,
        #[command(flatten)]
        opts: CertifyArgs,
    },
    /// S-polynomial of two minors and its pseudominor decomposition.
    Spair {
        #[arg(long)]
        quiver: PathBuf,
        #[command(flatten)]
        opts: SpairArgs,
    },
    /// Minimal generators of the initial ideal.
    InitIdeal {
        #[arg(long)]
        quiver: PathBuf,
    },
    /// The two-vertex quiver with `r` pages and minor sizes `u`, `v`.
    Double {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[command(subcommand)]
        verb: DoubleVerb,
    },
    /// Contraction, scan and flattening of a tensor file.
    Tensor {
        #[command(subcommand)]
        op: TensorOp,
    },
    /// Compare the double and triple determinantal ideals.
    TripleEq {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        w: usize,
    },
    /// Generators of an independence ideal.
    Indep {
        /// Comma-separated dimensions.
        #[arg(long, value_delimiter = ',')]
        shape: Vec<usize>,
        /// Comma-separated statements: `a_b`, `a|rest`, `a_b|c`, `a|rest:s`.
        #[arg(long, value_delimiter = ',')]
        statements: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum DoubleVerb {
    Gens {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Check(CheckArgs),
    Certify(CertifyArgs),
    Spair(SpairArgs),
    InitIdeal,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    no_coprime_skip: bool,
    #[arg(long)]
    fail_fast: bool,
    /// Also print one line per pair.
    #[arg(long)]
    listing: bool,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    /// `all`, or two 1-based generator indices `i,j`.
    #[arg(long, default_value = "all")]
    pairs: String,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args, Debug)]
struct SpairArgs {
    /// Minor spec `vertex:rows;cols`, 1-based.
    #[arg(long)]
    m1: String,
    #[arg(long)]
    m2: String,
    #[arg(long)]
    decompose: bool,
}

#[derive(Subcommand, Debug)]
enum TensorOp {
    Contract {
        #[arg(long)]
        data: PathBuf,
        /// Comma-separated 1-based axes.
        #[arg(long, value_delimiter = ',')]
        axes: Vec<usize>,
    },
    Scan {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        axes: usize,
    },
    Flatten {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        axes: usize,
    },
}

/// Outcome of a verb: printed text and whether the checked property held.
struct Report {
    text: String,
    holds: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, holds: true }
    }
}

type Outcome = Result<Report, String>;

struct Instance {
    layout: Layout,
    order: OrderSpec,
}

impl Instance {
    fn from_file(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let spec = parse_quiver(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let order_file = spec.order_file.clone();
        let layout = Layout::new(spec).map_err(|e| e.to_string())?;
        let order = match order_file {
            None => layout.default_order(),
            Some(name) => {
                let p = path.parent().unwrap_or(Path::new(".")).join(name);
                let t = std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?;
                layout.parse_ranking(&t).map_err(|e| format!("{}: {e}", p.display()))?
            }
        };
        Ok(Instance { layout, order })
    }

    fn double(m: usize, n: usize, r: usize, u: usize, v: usize) -> Result<Self, String> {
        if [m, n, r, u, v].contains(&0) {
            return Err("m, n, r, u and v must be positive".into());
        }
        let layout = Layout::new(QuiverSpec::double_determinantal(m, n, r, u, v)).map_err(|e| e.to_string())?;
        let order = layout.default_order();
        Ok(Instance { layout, order })
    }

    fn consistent(&self) -> Result<ConsistentOrder, String> {
        ConsistentOrder::new(self.order.clone(), &self.layout).map_err(|v| {
            let first = &v[0];
            format!(
                "order is not consistent: {} violations, first in matrix {} between {} and {}",
                v.len(),
                first.vertex + 1,
                self.layout.var_name(first.first),
                self.layout.var_name(first.second)
            )
        })
    }

    fn generators(&self) -> Vec<Generator> {
        natural_generators(&self.layout)
    }
}

fn field(p: Option<u64>) -> Result<Option<u64>, String> {
    match p {
        Some(p) if !is_prime_u64(p) => Err(format!("--field {p} is not a prime")),
        Some(p) if p > u32::MAX as u64 => Err(format!("--field {p} exceeds the machine-word limit 2^32")),
        other => Ok(other),
    }
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, String> {
    match threads {
        None => Ok(f()),
        Some(0) => Err("--threads must be positive".into()),
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| e.to_string()).map(|pool| pool.install(f)),
    }
}

fn gens(inst: &Instance, out: Option<&Path>) -> Outcome {
    let mut text = String::new();
    for (i, g) in inst.generators().iter().enumerate() {
        let _ = writeln!(text, "{} {} {}", i + 1, g.minor, g.poly.render(&inst.order, &inst.layout));
    }
    match out {
        Some(p) => {
            std::fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display()))?;
            Ok(Report::ok(format!("wrote {} generators to {}\n", inst.generators().len(), p.display())))
        }
        None => Ok(Report::ok(text)),
    }
}

fn check_with<C: Coeff>(polys: &[Polynomial<C>], inst: &Instance, args: &CheckArgs) -> Outcome {
    let opts = CheckOptions { coprime_skip: !args.no_coprime_skip, fail_fast: args.fail_fast };
    let report = with_threads(args.threads, || buchberger_check(polys, &inst.order, opts))?.map_err(|e| e.to_string())?;
    let mut text = String::new();
    if args.listing {
        text.push_str(&report.listing(&inst.order, &inst.layout));
    }
    for ((i, j), r) in &report.failures {
        let _ = writeln!(text, "failure: pair {} {} remainder {}", i + 1, j + 1, r.render(&inst.order, &inst.layout));
    }
    let _ = writeln!(text, "{}", report.summary());
    Ok(Report { text, holds: report.is_groebner() })
}

fn check(inst: &Instance, args: &CheckArgs, p: Option<u64>) -> Outcome {
    let polys: Vec<Polynomial> = inst.generators().into_iter().map(|g| g.poly).collect();
    match field(p)? {
        None => check_with(&polys, inst, args),
        Some(p) => {
            let fp: Vec<Polynomial<Fp>> = polys.iter().map(|f| f.map_coeffs(|c| Fp::from_rational(c, p).expect("integral generators"))).collect();
            check_with(&fp, inst, args)
        }
    }
}

fn certify(inst: &Instance, args: &CertifyArgs) -> Outcome {
    let ord = inst.consistent()?;
    let gens = inst.generators();
    if args.pairs != "all" {
        let idx: Vec<usize> = args
            .pairs
            .split(',')
            .map(|s| s.trim().parse::<usize>().ok().filter(|&i| (1..=gens.len()).contains(&i)).map(|i| i - 1))
            .collect::<Option<_>>()
            .filter(|v: &Vec<usize>| v.len() == 2)
            .ok_or_else(|| format!("--pairs expects `all` or `i,j` with 1 <= i,j <= {}", gens.len()))?;
        let (a, b) = (&gens[idx[0]].minor, &gens[idx[1]].minor);
        let cert = build_chain(&inst.layout, a, b, &ord).map_err(|e| e.to_string())?;
        let ok = verify_chain(&inst.layout, &cert, &ord);
        return Ok(Report { text: format!("{}verified: {ok}\n", cert.render(&inst.layout)), holds: ok });
    }
    let pairs: Vec<(usize, usize)> = (0..gens.len()).tuple_combinations().collect();
    let results: Vec<Result<bool, String>> = with_threads(args.threads, || {
        use rayon::prelude::*;
        pairs
            .par_iter()
            .map(|&(i, j)| {
                build_chain(&inst.layout, &gens[i].minor, &gens[j].minor, &ord)
                    .map(|c| verify_chain(&inst.layout, &c, &ord))
                    .map_err(|e| e.to_string())
            })
            .collect()
    })?;
    let mut text = String::new();
    let mut failed = 0;
    for (&(i, j), r) in pairs.iter().zip(&results) {
        match r {
            Ok(true) => {}
            Ok(false) => {
                failed += 1;
                let _ = writeln!(text, "pair {} {}: certificate rejected", i + 1, j + 1);
            }
            Err(e) => {
                failed += 1;
                let _ = writeln!(text, "pair {} {}: {e}", i + 1, j + 1);
            }
        }
    }
    let _ = writeln!(text, "{} generators, {} pairs, {} certified, {failed} failures", gens.len(), pairs.len(), pairs.len() - failed);
    Ok(Report { text, holds: failed == 0 })
}

fn one_based(p: &[usize]) -> String {
    format!("({})", p.iter().map(|i| i + 1).join(" "))
}

fn spair(inst: &Instance, args: &SpairArgs) -> Outcome {
    let l = &inst.layout;
    let ord = inst.consistent()?;
    let m = MinorRef::parse(l, &args.m1).map_err(|e| e.to_string())?;
    let n = MinorRef::parse(l, &args.m2).map_err(|e| e.to_string())?;
    let s = s_polynomial(&expand_minor(l, &m), &expand_minor(l, &n), &ord).map_err(|e| e.to_string())?;
    let mut text = format!("S({m}, {n}) = {}\n", s.render(&ord, l));
    if !args.decompose {
        return Ok(Report::ok(text));
    }
    let a = analyze(l, &m, &n, &ord);
    let d = a.decomposition();
    let _ = writeln!(text, "L = {}", render_monomial(&a.l, l));
    let _ = writeln!(text, "points: {}", a.points.iter().map(|&v| l.var_name(v)).join(" > "));
    let _ = writeln!(text, "S_M = {}, S_N = {}", one_based(&a.s_m), one_based(&a.s_n));
    let term = |side: &str, p: &[usize], t: &quiverdet::spair::DecompTerm, sign: i64| {
        let cof = if t.cofactor.is_one() { "1".to_string() } else { render_monomial(&t.cofactor, l) };
        format!("{side} {}: {} {cof} * |{}|\n", one_based(p), if t.sign * sign < 0 { '-' } else { '+' }, t.pseudo)
    };
    for (p, t) in &d.row_terms {
        text.push_str(&term("+ P_row", p, t, 1));
    }
    for (p, t) in &d.col_terms {
        text.push_str(&term("- P_col", p, t, 1));
    }
    let equal = d.expand(l) == s;
    let small = a.has_small_lts(&d, &ord);
    let _ = writeln!(text, "P(M,N) = S(M,N): {equal}");
    let _ = writeln!(text, "sufficiently small leading terms: {small}");
    let v = a.violations();
    let _ = writeln!(text, "violations: {}", v.len());
    for x in &v {
        let _ = writeln!(
            text,
            "  ({}, {}, {}){}",
            l.var_name(a.points[x.i]),
            l.var_name(a.points[x.j]),
            l.var_name(a.points[x.k]),
            if x.strict { " strict" } else { "" }
        );
    }
    Ok(Report { text, holds: equal })
}

fn init_ideal(inst: &Instance) -> Outcome {
    inst.consistent()?;
    let polys: Vec<Polynomial> = inst.generators().into_iter().map(|g| g.poly).collect();
    let lms = initial_ideal_gens(&polys, &inst.order).map_err(|e| e.to_string())?;
    let mut text = String::new();
    for m in &lms {
        let _ = writeln!(text, "{}", render_monomial(m, &inst.layout));
    }
    let sq = is_squarefree(&lms);
    let _ = writeln!(text, "{} minimal generators, squarefree: {sq}", lms.len());
    Ok(Report { text, holds: sq })
}

fn load_tensor(path: &Path) -> Result<Tensor, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Tensor::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn zero_based(axes: &[usize]) -> Result<Vec<usize>, String> {
    axes.iter().map(|&a| a.checked_sub(1).ok_or_else(|| "axes are 1-based".to_string())).collect()
}

fn tensor(op: &TensorOp) -> Outcome {
    let text = match op {
        TensorOp::Contract { data, axes } => {
            let t = load_tensor(data)?;
            t.contraction(&zero_based(axes)?).map_err(|e| e.to_string())?.render()
        }
        TensorOp::Scan { data, axes } => {
            let t = load_tensor(data)?;
            let slices = t.scan(zero_based(&[*axes])?[0]).map_err(|e| e.to_string())?;
            slices.iter().enumerate().map(|(i, s)| format!("# slice {}\n{}", i + 1, s.render())).join("")
        }
        TensorOp::Flatten { data, axes } => {
            let t = load_tensor(data)?;
            format!("{}\n", render_matrix(&t.flatten(zero_based(&[*axes])?[0]).map_err(|e| e.to_string())?))
        }
    };
    Ok(Report::ok(text))
}

fn indep(shape: &[usize], statements: &[String]) -> Outcome {
    if shape.is_empty() || shape.contains(&0) {
        return Err("--shape needs positive dimensions".into());
    }
    let st: Vec<IndepStatement> = statements.iter().map(|s| IndepStatement::parse(s)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let gens = independence_ideal(shape, &st).map_err(|e| e.to_string())?;
    let vars = TensorVars::new(shape.to_vec());
    let ord = OrderSpec::identity(vars.nvars());
    let mut text = String::new();
    for g in &gens {
        let _ = writeln!(text, "{}", g.render(&ord, &vars));
    }
    let _ = writeln!(text, "{} generators", gens.len());
    Ok(Report::ok(text))
}

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.verb {
        Verb::Gens { quiver, out } => gens(&Instance::from_file(quiver)?, out.as_deref()),
        Verb::Check { quiver, opts } => check(&Instance::from_file(quiver)?, opts, cli.field),
        Verb::Certify { quiver, opts } => certify(&Instance::from_file(quiver)?, opts),
        Verb::Spair { quiver, opts } => spair(&Instance::from_file(quiver)?, opts),
        Verb::InitIdeal { quiver } => init_ideal(&Instance::from_file(quiver)?),
        Verb::Double { m, n, r, u, v, verb } => {
            let inst = Instance::double(*m, *n, *r, *u, *v)?;
            match verb {
                DoubleVerb::Gens { out } => gens(&inst, out.as_deref()),
                DoubleVerb::Check(opts) => check(&inst, opts, cli.field),
                DoubleVerb::Certify(opts) => certify(&inst, opts),
                DoubleVerb::Spair(opts) => spair(&inst, opts),
                DoubleVerb::InitIdeal => init_ideal(&inst),
            }
        }
        Verb::Tensor { op } => tensor(op),
        Verb::TripleEq { m, n, r, u, v, w } => {
            let rep = triple_eq_check(*m, *n, *r, *u, *v, *w).map_err(|e| e.to_string())?;
            Ok(Report { text: format!("{}\n", rep.summary()), holds: rep.verified })
        }
        Verb::Indep { shape, statements } => indep(shape, statements),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(r) => {
            print!("{}", r.text);
            ExitCode::from(if r.holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
