use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skeinlab::constructions::{
    build_rotant_pair, certify, conjecture_report, connected_sum_suite, mutation_suite, random_marked_link, random_rotor, random_stator, rewrite_cyclic_word,
    rotant_suite, satellite_mutation_suite, traczyk_suite, word_suite, Certificate, ConstructionError, CyclicWord, Letter, MarkedLink, Rewrite, Rotor,
    SegmentOrientation, Stator, SuiteReport, WordTheorem,
};
use skeinlab::diagram::{from_pd, Axis, DiagramError, TangleDiagram};
use skeinlab::hecke::{self, hecke_invert, hecke_spectral_p, HeckeElement, HeckeError, HeckeSpectral, SPrime3Element, SPrime3Spectral};
use skeinlab::invariants::{compute, homflypt, InvariantError, InvariantKind, SkeinConfig};
use skeinlab::linalg;
use skeinlab::poly::Vars;
use skeinlab::tl::{self, annulus_reduce, tl_from_tangle, tl_invert, tl_spectral_p, Spectral, SpectralAxis, TLElement, TlError};

// a closed pipe downstream is not an error worth a panic
macro_rules! say {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "skeinlab", version, about = "Skein-theoretic link invariants and the constructions that preserve them")]
struct Cli {
    /// Crossing cap for the skein-tree invariants.
    #[arg(long, global = true, env = "SKEINLAB_MAX_CROSSINGS", default_value_t = 24)]
    max_crossings: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print invariants of a closed diagram.
    Invariant {
        #[arg(long = "kind", required = true)]
        kinds: Vec<String>,
        #[command(flatten)]
        input: DiagramInput,
    },
    /// Mutate a marked link (JSON file, or random with --seed) and certify the pair.
    Mutate {
        #[arg(long, value_enum)]
        axis: AxisArg,
        file: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a rotant pair (JSON file, or random with --seed and --n) and certify it.
    Rotant {
        file: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve for a spectral-parameter tangle.
    Spectral {
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        file: PathBuf,
        #[arg(long, value_enum, default_value = "y")]
        axis: SpectralAxisArg,
    },
    /// Rewrite a cyclic word and compare the two sides.
    Word {
        file: PathBuf,
        #[arg(long)]
        rewrite: String,
    },
    /// Arithmetic in the small algebras.
    Algebra {
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        #[arg(long, value_enum)]
        op: AlgebraOp,
        files: Vec<PathBuf>,
    },
    /// Run the property suite for one theorem.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a named property suite, or all of them.
    Suite {
        name: String,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct DiagramInput {
    file: PathBuf,
    /// Read the file as a PD code.
    #[arg(long)]
    from_pd: bool,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: u64,
    /// Directory for failure certificates.
    #[arg(long, default_value = "certificates")]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    X,
    Y,
    Z,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectralAxisArg {
    Y,
    Z,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Tl2,
    Tl3,
    H2,
    H3,
    Sprime3,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraOp {
    Mul,
    Invert,
    Det,
    Ry,
}

enum Failure {
    Usage(String),
    Resource(String),
    Violation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Violation(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Resource(_) => 3,
        }
    }
}

type Res<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Budget(..) => Failure::Resource(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Invariant(e) => e.into(),
            e => Failure::Usage(e.to_string()),
        }
    }
}

macro_rules! plain_failure {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Usage(e.to_string())
            }
        }
    )*};
}
plain_failure!(DiagramError, TlError, HeckeError);

fn read_json(path: &Path) -> Res<Value> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}:{}:{}: {e}", path.display(), e.line(), e.column())))
}

fn field<'a>(v: &'a Value, key: &str, path: &Path) -> Res<&'a Value> {
    v.get(key).ok_or_else(|| usage(format!("{}: missing field `{key}`", path.display())))
}

fn diagram_at(v: &Value, path: &Path) -> Res<TangleDiagram> {
    TangleDiagram::from_json_value(v).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// PD codes as JSON (`[[1,5,2,4],...]`) or in the catalog form `X[1,5,2,4] X[3,1,4,6] ...`.
fn parse_pd(text: &str, path: &Path) -> Res<Vec<[usize; 4]>> {
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(text).map_err(|e| usage(format!("{}:{}:{}: {e}", path.display(), e.line(), e.column())));
    }
    let mut code = vec![];
    let mut rest = text;
    let mut offset = 0;
    while let Some(i) = rest.find('[') {
        let j = rest[i..].find(']').ok_or_else(|| usage(format!("{}: position {}: unclosed `[`", path.display(), offset + i)))? + i;
        let nums: Result<Vec<usize>, _> = rest[i + 1..j].split(',').map(|x| x.trim().parse()).collect();
        match nums.ok().and_then(|n| <[usize; 4]>::try_from(n).ok()) {
            Some(x) => code.push(x),
            None => return Err(usage(format!("{}: position {}: expected four labels", path.display(), offset + i))),
        }
        offset += j + 1;
        rest = &rest[j + 1..];
    }
    Ok(code)
}

fn load_diagram(input: &DiagramInput) -> Res<TangleDiagram> {
    if input.from_pd {
        let text = fs::read_to_string(&input.file).map_err(|e| usage(format!("{}: {e}", input.file.display())))?;
        return Ok(from_pd(&parse_pd(&text, &input.file)?)?);
    }
    diagram_at(&read_json(&input.file)?, &input.file)
}

fn cfg(cli: &Cli) -> SkeinConfig {
    SkeinConfig::with_cap(cli.max_crossings)
}

fn need_seed(seed: Option<u64>, what: &str) -> Res<u64> {
    seed.ok_or_else(|| usage(format!("{what} without an input file is randomized and needs --seed")))
}

fn emit(text: &str, out: Option<&Path>) -> Res<()> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            say!("{text}");
            Ok(())
        }
    }
}

fn report_certificate(c: &Certificate, out: Option<&Path>) -> Res<()> {
    emit(&c.to_json(), out)?;
    if c.all_equal() {
        Ok(())
    } else {
        Err(Failure::Violation(format!("{}: invariants differ", c.construction)))
    }
}

fn cmd_invariant(cli: &Cli, kinds: &[String], input: &DiagramInput) -> Res<()> {
    let kinds: Vec<InvariantKind> = if kinds.iter().any(|k| k == "all") {
        InvariantKind::ALL.to_vec()
    } else {
        kinds.iter().map(|k| InvariantKind::parse(k).ok_or_else(|| usage(format!("unknown invariant kind `{k}`")))).collect::<Res<_>>()?
    };
    let d = load_diagram(input)?;
    for k in kinds {
        say!("{k}: {}", compute(&d, k, &cfg(cli))?.value);
    }
    Ok(())
}

fn axis(a: AxisArg) -> Axis {
    match a {
        AxisArg::X => Axis::X,
        AxisArg::Y => Axis::Y,
        AxisArg::Z => Axis::Z,
    }
}

fn cmd_mutate(cli: &Cli, a: AxisArg, file: Option<&Path>, seed: Option<u64>, out: Option<&Path>) -> Res<()> {
    let m = match file {
        Some(p) => {
            let v = read_json(p)?;
            let at = field(&v, "at", p)?.as_u64().ok_or_else(|| usage(format!("{}: `at` must be a number", p.display())))? as usize;
            MarkedLink::new(diagram_at(field(&v, "below", p)?, p)?, diagram_at(field(&v, "inner", p)?, p)?, at, diagram_at(field(&v, "above", p)?, p)?)?
        }
        None => random_marked_link(need_seed(seed, "mutate")?, 5, 8, true),
    };
    let axis = axis(a);
    let (l, ml) = (m.link()?, m.mutant(axis)?.link()?);
    let mut kinds = vec![InvariantKind::Bracket];
    if l.is_oriented() && m.component_preserving(axis)? {
        kinds.extend([InvariantKind::Homflypt, InvariantKind::KauffmanF]);
    }
    let c = certify(&format!("mutation-{axis:?}"), "1.1", (&l, &ml), &kinds, &cfg(cli), seed)?;
    report_certificate(&c, out)
}

fn cmd_rotant(cli: &Cli, file: Option<&Path>, n: Option<usize>, seed: Option<u64>, out: Option<&Path>) -> Res<()> {
    let (rotor, stator) = match file {
        Some(p) => {
            let v = read_json(p)?;
            let n = field(&v, "n", p)?.as_u64().ok_or_else(|| usage(format!("{}: `n` must be a number", p.display())))? as usize;
            let pieces = field(&v, "stator", p)?.as_array().ok_or_else(|| usage(format!("{}: `stator` must be a list", p.display())))?;
            let pieces = pieces.iter().map(|x| diagram_at(x, p)).collect::<Res<Vec<_>>>()?;
            (Rotor::new(diagram_at(field(&v, "segment", p)?, p)?, n)?, Stator::new(pieces)?)
        }
        None => {
            let seed = need_seed(seed, "rotant")?;
            let n = n.ok_or_else(|| usage("a random rotant needs --n"))?;
            let kind = SegmentOrientation::Oriented;
            let rotor = random_rotor(seed, n, 1 + (seed % 2) as usize, 3, kind)?;
            let stator = random_stator(seed ^ 0x5eed, &rotor, 1, 2, kind)?;
            (rotor, stator)
        }
    };
    let (l, rl) = build_rotant_pair(&rotor, &stator)?;
    let n = rotor.order();
    let mut kinds = vec![InvariantKind::Bracket];
    if l.is_oriented() {
        if n <= 4 {
            kinds.push(InvariantKind::Homflypt);
        }
        if n <= 3 {
            kinds.push(InvariantKind::KauffmanLambda);
        }
    }
    let c = certify(&format!("rotant n={n}"), "2.2", (&l, &rl), &kinds, &cfg(cli), seed)?;
    report_certificate(&c, out)
}

/// An algebra file is either a bare element or `{"vars": [...], ...}`.
fn algebra_vars(alg: AlgebraArg, v: &Value, path: &Path) -> Res<Vars> {
    let base = match alg {
        AlgebraArg::Tl2 | AlgebraArg::Tl3 => Vars::a(),
        _ => Vars::vz(),
    };
    let Some(names) = v.get("vars") else { return Ok(base) };
    let names: Vec<String> = serde_json::from_value(names.clone()).map_err(|e| usage(format!("{}: vars: {e}", path.display())))?;
    if let Some(missing) = base.names().iter().find(|b| !names.contains(b)) {
        return Err(usage(format!("{}: vars must include `{missing}`", path.display())));
    }
    Ok(Vars::new(&names))
}

fn element_value<'a>(v: &'a Value, key: &str) -> &'a Value {
    if v.get("vars").is_some() {
        v.get(key).unwrap_or(&Value::Null)
    } else {
        v
    }
}

enum Element {
    Tl(TLElement),
    Hecke(HeckeElement),
    SPrime(SPrime3Element),
}

fn load_element(alg: AlgebraArg, path: &Path, key: &str) -> Res<Element> {
    let v = read_json(path)?;
    let vars = algebra_vars(alg, &v, path)?;
    let e = element_value(&v, key);
    let wrap = |s: String| usage(format!("{}: {s}", path.display()));
    Ok(match alg {
        AlgebraArg::Tl2 => Element::Tl(TLElement::from_json_value(2, &vars, e).map_err(|x| wrap(x.to_string()))?),
        AlgebraArg::Tl3 => Element::Tl(TLElement::from_json_value(3, &vars, e).map_err(|x| wrap(x.to_string()))?),
        AlgebraArg::H2 => Element::Hecke(HeckeElement::from_json_value(2, &vars, e).map_err(|x| wrap(x.to_string()))?),
        AlgebraArg::H3 => Element::Hecke(HeckeElement::from_json_value(3, &vars, e).map_err(|x| wrap(x.to_string()))?),
        AlgebraArg::Sprime3 => Element::SPrime(SPrime3Element::from_json_value(&vars, e).map_err(|x| wrap(x.to_string()))?),
    })
}

fn cmd_spectral(alg: AlgebraArg, file: &Path, ax: SpectralAxisArg) -> Res<()> {
    let (p, p_inv) = match alg {
        AlgebraArg::Tl3 => {
            let Element::Tl(l) = load_element(alg, file, "element")? else { unreachable!() };
            let ax = match ax {
                SpectralAxisArg::Y => SpectralAxis::Y,
                SpectralAxisArg::Z => SpectralAxis::Z,
            };
            match tl_spectral_p(&l, ax)? {
                Spectral::Found { p, p_inv } => (p.to_json_value(), p_inv.to_json_value()),
                Spectral::NotInDense => return not_in_dense(),
            }
        }
        AlgebraArg::H3 => {
            let Element::Hecke(l) = load_element(alg, file, "element")? else { unreachable!() };
            match hecke_spectral_p(&l)? {
                HeckeSpectral::Found { p, p_inv } => (p.to_json_value(), p_inv.to_json_value()),
                HeckeSpectral::NotInDense => return not_in_dense(),
            }
        }
        AlgebraArg::Sprime3 => {
            let Element::SPrime(x) = load_element(alg, file, "x")? else { unreachable!() };
            let Element::SPrime(b) = load_element(alg, file, "b")? else { unreachable!() };
            match hecke::sprime3_spectral(&x, &b)? {
                SPrime3Spectral::Found { y, y_inv } => (y.to_json_value(), y_inv.to_json_value()),
                SPrime3Spectral::NotInDense => return not_in_dense(),
            }
        }
        AlgebraArg::Tl2 | AlgebraArg::H2 => return Err(usage("the spectral solvers take tl3, h3 or sprime3")),
    };
    say!("P: {p}");
    say!("P^-1: {p_inv}");
    Ok(())
}

fn not_in_dense() -> Res<()> {
    say!("NOT-IN-DENSE");
    Ok(())
}

fn cmd_algebra(alg: AlgebraArg, op: AlgebraOp, files: &[PathBuf]) -> Res<()> {
    let arity = if matches!(op, AlgebraOp::Mul) { 2 } else { 1 };
    if files.len() != arity {
        return Err(usage(format!("this operation takes {arity} input file(s)")));
    }
    let x = load_element(alg, &files[0], "element")?;
    let out: Value = match (op, &x) {
        (AlgebraOp::Mul, _) => match (x, load_element(alg, &files[1], "element")?) {
            (Element::Tl(a), Element::Tl(b)) => a.mul(&b)?.to_json_value(),
            (Element::Hecke(a), Element::Hecke(b)) => a.mul(&b)?.to_json_value(),
            (Element::SPrime(a), Element::SPrime(b)) => a.mul(&b)?.to_json_value(),
            _ => unreachable!(),
        },
        (AlgebraOp::Invert, Element::Tl(a)) => tl_invert(a)?.to_json_value(),
        (AlgebraOp::Invert, Element::Hecke(a)) => hecke_invert(a)?.to_json_value(),
        (AlgebraOp::Invert, Element::SPrime(a)) => a.invert()?.to_json_value(),
        (AlgebraOp::Det, Element::Tl(a)) => json!(linalg::det(&tl::left_mult_matrix(a)?, a.vars()).to_string()),
        (AlgebraOp::Det, Element::Hecke(a)) => json!(linalg::det(&hecke::left_mult_matrix(a)?, a.vars()).to_string()),
        (AlgebraOp::Det, Element::SPrime(a)) => json!(linalg::det(&a.left_mult_matrix()?, a.vars()).to_string()),
        (AlgebraOp::Ry, Element::Tl(a)) => a.r_y().to_json_value(),
        (AlgebraOp::Ry, Element::Hecke(a)) => a.transpose_ry().to_json_value(),
        (AlgebraOp::Ry, Element::SPrime(a)) => a.r_y().to_json_value(),
    };
    say!("{}", serde_json::to_string_pretty(&out).expect("json"));
    Ok(())
}

/// `{"letters": [{"tangle": D}, {"tangle": D, "at": i}, ...]}`; letters with
/// `at` are 2-tangles that rewriting leaves alone.
fn cmd_word(cli: &Cli, file: &Path, rewrite: &str) -> Res<()> {
    let rw = Rewrite::parse(rewrite).ok_or_else(|| usage(format!("unknown rewrite `{rewrite}` (rz, ry, orz, ory)")))?;
    let v = read_json(file)?;
    let letters = field(&v, "letters", file)?.as_array().ok_or_else(|| usage(format!("{}: `letters` must be a list", file.display())))?;
    let letters = letters
        .iter()
        .map(|l| {
            let t = diagram_at(field(l, "tangle", file)?, file)?;
            Ok(match l.get("at").and_then(Value::as_u64) {
                Some(at) => Letter::Fixed { tangle: t, at: at as usize },
                None => Letter::Tangle(t),
            })
        })
        .collect::<Res<Vec<_>>>()?;
    let w = CyclicWord::new(letters)?;
    let w2 = rewrite_cyclic_word(&w, rw)?;
    let mut same = true;
    let (a, b) = (annulus_reduce(&tl_from_tangle(&w.product()?)?), annulus_reduce(&tl_from_tangle(&w2.product()?)?));
    say!("annulus: {a:?}");
    say!("annulus rewritten: {b:?}");
    same &= a == b;
    if w.product()?.is_oriented() {
        for k in 0..=2 {
            let (p, q) = (homflypt(&w.closure(k)?, &cfg(cli))?, homflypt(&w2.closure(k)?, &cfg(cli))?);
            say!("homflypt twist {k}: {p}");
            say!("homflypt twist {k} rewritten: {q}");
            same &= p == q;
        }
    }
    if same {
        say!("equal");
        Ok(())
    } else {
        Err(Failure::Violation("the rewritten word differs".into()))
    }
}

fn write_failures(reports: &[SuiteReport], dir: &Path) -> Res<usize> {
    let mut count = 0;
    for r in reports {
        for (i, c) in r.failures.iter().enumerate() {
            fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
            let name = format!("{}-{}-{i}.json", r.name.replace(' ', "_"), c.theorem);
            let path = dir.join(name);
            fs::write(&path, c.to_json()).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            eprintln!("certificate: {}", path.display());
            count += 1;
        }
    }
    Ok(count)
}

fn finish(reports: Vec<SuiteReport>, run: &RunArgs) -> Res<()> {
    for r in &reports {
        say!("{}", r.summary());
        for note in &r.notes {
            say!("  {note}");
        }
    }
    let (_, alex) = conjecture_report(&reports);
    if reports.iter().any(|r| !r.alexander.is_empty()) {
        say!("{alex}");
    }
    let failed = write_failures(&reports, &run.out)?;
    if failed > 0 {
        return Err(Failure::Violation(format!("{failed} violation(s)")));
    }
    if let Some(r) = reports.iter().find(|r| r.checks == 0) {
        return Err(Failure::Resource(format!("{}: every instance exceeded the crossing cap", r.name)));
    }
    Ok(())
}

const SATELLITE_BASE: usize = 4;

fn rotant_kinds(n: usize) -> Vec<InvariantKind> {
    let mut k = vec![InvariantKind::Bracket];
    if n <= 4 {
        k.push(InvariantKind::Homflypt);
    }
    if n <= 3 {
        k.push(InvariantKind::KauffmanLambda);
    }
    k
}

fn theorem_reports(theorem: &str, n: Option<usize>, run: &RunArgs, cfg: &SkeinConfig) -> Res<Vec<SuiteReport>> {
    let seed = run.seed;
    let t = |d: usize| run.trials.unwrap_or(d);
    let words = |ts: &[WordTheorem]| -> Res<Vec<SuiteReport>> { ts.iter().map(|&w| Ok(word_suite(w, seed, t(25), cfg)?)).collect() };
    Ok(match theorem {
        "1.1" => vec![mutation_suite(seed, t(100), cfg)?],
        "1.2" => vec![satellite_mutation_suite(seed, t(10), SATELLITE_BASE, cfg)?],
        "1.3" => vec![connected_sum_suite(seed, t(10), SATELLITE_BASE, cfg)?],
        "2.2" => match n {
            Some(n) => vec![rotant_suite(seed, n, &rotant_kinds(n), t(25), cfg)?],
            None => (2..=5).map(|n| Ok(rotant_suite(seed, n, &rotant_kinds(n), t(25), cfg)?)).collect::<Res<_>>()?,
        },
        "2.3" => match n {
            Some(n) => vec![traczyk_suite(seed, n, t(10))?],
            None => vec![traczyk_suite(seed, 6, t(10))?, traczyk_suite(seed, 7, t(10))?],
        },
        "3.4" => words(&[WordTheorem::T34a, WordTheorem::T34b])?,
        "4.2" => words(&[WordTheorem::T42a, WordTheorem::T42b])?,
        other => match WordTheorem::parse(other) {
            Some(w) => words(&[w])?,
            None => return Err(usage(format!("unknown theorem `{other}`"))),
        },
    })
}

const SUITES: [(&str, &str); 9] = [
    ("mutation", "1.1"),
    ("satellite", "1.2"),
    ("sum", "1.3"),
    ("rotant", "2.2"),
    ("traczyk", "2.3"),
    ("spectral-tl", "3.2"),
    ("words-tl", "3.4"),
    ("words-hecke", "4.2"),
    ("words-sprime", "5.1"),
];

fn run(cli: &Cli) -> Res<()> {
    let cfg = cfg(cli);
    match &cli.command {
        Command::Invariant { kinds, input } => cmd_invariant(cli, kinds, input),
        Command::Mutate { axis, file, seed, out } => cmd_mutate(cli, *axis, file.as_deref(), *seed, out.as_deref()),
        Command::Rotant { file, n, seed, out } => cmd_rotant(cli, file.as_deref(), *n, *seed, out.as_deref()),
        Command::Spectral { algebra, file, axis } => cmd_spectral(*algebra, file, *axis),
        Command::Word { file, rewrite } => cmd_word(cli, file, rewrite),
        Command::Algebra { algebra, op, files } => cmd_algebra(*algebra, *op, files),
        Command::Verify { theorem, n, run } => finish(theorem_reports(theorem, *n, run, &cfg)?, run),
        Command::Suite { name, run } => {
            let chosen: Vec<&str> = match name.as_str() {
                "all" => SUITES.iter().map(|s| s.1).collect(),
                other => match SUITES.iter().find(|s| s.0 == other) {
                    Some(s) => vec![s.1],
                    None => {
                        let names: Vec<&str> = SUITES.iter().map(|s| s.0).collect();
                        return Err(usage(format!("unknown suite `{other}`; one of all, {}", names.join(", "))));
                    }
                },
            };
            let mut reports = vec![];
            for t in chosen {
                reports.extend(theorem_reports(t, None, run, &cfg)?);
            }
            finish(reports, run)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Usage(m) | Failure::Resource(m) | Failure::Violation(m)) = &f;
            let tag = match f {
                Failure::Usage(_) => "error",
                Failure::Resource(_) => "resource limit",
                Failure::Violation(_) => "violation",
            };
            eprintln!("{tag}: {m}");
            ExitCode::from(f.code())
        }
    }
}
