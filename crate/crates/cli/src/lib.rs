//! Command dispatch for the `coalg`, `binomial`, `sset`, `smap` and `corpus`
//! tools.
//!
//! [`run_command`] takes a full argument vector (tool name first) and returns
//! the exit code with the report text. Exit codes: 0 success or property
//! true, 1 property false, 2 invalid input, 3 unsupported ring or operation.
//! Reports are deterministic: every listing is sorted or follows basis order.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use coalg::binomial::{binomial_check, DEFAULT_PRIMES};
use coalg::coalgebra::{dual_algebra, dual_of_algebra, purify_subcoalgebra, tensor, validate_coalgebra, Coalgebra};
use coalg::grouplike::{group_likes, is_pointed};
use coalg::io;
use coalg::ring::scalar_to_string;
use coalg::simplicial::{chains_functor, chains_of_map, homology, is_cofibration, is_weak_equivalence, validate_sset};
use coalg::structure::{components, coradical_filtration, primitives, split_coradical, wedge};
use coalg::{Error, Lattice, Matrix, RingSpec, Scalar};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

/// Environment variable overriding the default prime list of `binomial check`.
pub const PRIMES_VAR: &str = "COALG_PRIMES";

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::PrimeInverted(_)
        | Error::NotPointed
        | Error::NotIrreducible(_)
        | Error::TooLarge(_)
        | Error::Unsupported(_)
        | Error::Invariant(_) => EXIT_UNSUPPORTED,
        _ => EXIT_INVALID,
    }
}

/// What a command produced: its exit code and report.
struct Outcome {
    code: i32,
    text: String,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { code: EXIT_TRUE, text }
    }

    fn verdict(flag: bool, text: String) -> Self {
        Outcome { code: if flag { EXIT_TRUE } else { EXIT_FALSE }, text }
    }
}

type Run = coalg::Result<Outcome>;

#[derive(Args, Debug)]
struct Input {
    /// Input file.
    file: PathBuf,
    /// Base-change the input to this ring (`Z`, `Q`, `F7`, `Z[1/2,1/3]`).
    #[arg(long)]
    ring: Option<String>,
    /// Also write the result as canonical JSON to this path.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Parser, Debug)]
#[command(name = "coalg", about = "Structure theory of finite-rank cocommutative coalgebras")]
struct CoalgCli {
    #[command(subcommand)]
    cmd: CoalgCmd,
}

#[derive(Subcommand, Debug)]
enum CoalgCmd {
    /// Validate a coalgebra, algebra or map file.
    Check(Input),
    /// List the group-like elements.
    Grouplikes(Input),
    /// Decide pointedness (exit 1 when not pointed).
    Pointed(Input),
    /// The coradical `span(Gr(C))` of a pointed coalgebra.
    Coradical(Input),
    /// The coradical filtration.
    Filtration(Input),
    /// Primitives of an irreducible pointed coalgebra.
    Primitives(Input),
    /// Irreducible components.
    Components(Input),
    /// The coradical splitting map.
    Split(Input),
    /// Tensor product of two coalgebras.
    Tensor {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Dual of a coalgebra (an algebra) or of an algebra (a coalgebra).
    Dual(Input),
    /// `D ∧ F` for two sublattice files.
    Wedge {
        #[command(flatten)]
        input: Input,
        #[arg(long = "sub", num_args = 1, required = true)]
        subs: Vec<PathBuf>,
    },
    /// Purify a subcoalgebra lattice.
    Purify {
        #[command(flatten)]
        input: Input,
        #[arg(long = "sub", required = true)]
        sub: PathBuf,
    },
}

#[derive(Parser, Debug)]
#[command(name = "binomial", about = "Binomial-ring conditions at finitely many primes")]
struct BinomialCli {
    #[command(subcommand)]
    cmd: BinomialCmd,
}

#[derive(Subcommand, Debug)]
enum BinomialCmd {
    /// Check an algebra (or the dual of a coalgebra).
    Check {
        #[command(flatten)]
        input: Input,
        /// Comma-separated primes; defaults to $COALG_PRIMES, then 2,3,5,7,11,13.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
    },
}

#[derive(Parser, Debug)]
#[command(name = "sset", about = "Finite truncated simplicial sets")]
struct SsetCli {
    #[command(subcommand)]
    cmd: SsetCmd,
}

#[derive(Subcommand, Debug)]
enum SsetCmd {
    /// Validate the simplicial identities (exit 1 on failure).
    Validate { file: PathBuf },
    /// The simplicial coalgebra of chains.
    Chains {
        #[command(flatten)]
        input: Input,
    },
    /// Homology of the normalized chains.
    Homology {
        #[command(flatten)]
        input: Input,
        /// Top degree; defaults to one below the truncation dimension.
        #[arg(short = 'N', long = "degree")]
        degree: Option<usize>,
    },
}

#[derive(Parser, Debug)]
#[command(name = "smap", about = "Maps of finite simplicial sets, through their chains")]
struct SmapCli {
    #[command(subcommand)]
    cmd: SmapCmd,
}

#[derive(Subcommand, Debug)]
enum SmapCmd {
    /// Decide whether the chains map is a weak equivalence or a cofibration.
    #[command(group(ArgGroup::new("property").required(true).args(["we", "cof"])))]
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        we: bool,
        #[arg(long)]
        cof: bool,
        #[arg(short = 'N', long = "degree")]
        degree: Option<usize>,
    },
}

#[derive(Parser, Debug)]
#[command(name = "corpus", about = "Reproducible corpus of pointed coalgebras")]
struct CorpusCli {
    #[command(subcommand)]
    cmd: CorpusCmd,
}

#[derive(Subcommand, Debug)]
enum CorpusCmd {
    /// List (and optionally write) seeded coalgebras.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Directory to write one canonical JSON file per coalgebra.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Runs one invocation; `argv[0]` names the tool.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let argv: Vec<String> = argv.iter().map(|s| s.as_ref().to_string()).collect();
    let tool = argv.first().map(|s| tool_name(s)).unwrap_or_default();
    let parsed = match tool.as_str() {
        "coalg" => CoalgCli::try_parse_from(&argv).map(|c| run_coalg(c.cmd)),
        "binomial" => BinomialCli::try_parse_from(&argv).map(|c| run_binomial(c.cmd)),
        "sset" => SsetCli::try_parse_from(&argv).map(|c| run_sset(c.cmd)),
        "smap" => SmapCli::try_parse_from(&argv).map(|c| run_smap(c.cmd)),
        "corpus" => CorpusCli::try_parse_from(&argv).map(|c| run_corpus(c.cmd)),
        other => return (EXIT_INVALID, format!("unknown tool \"{other}\"\n")),
    };
    match parsed {
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_TRUE };
            (code, e.to_string())
        }
        Ok(Ok(out)) => (out.code, out.text),
        Ok(Err(e)) => (exit_code(&e), format!("error: {e}\n")),
    }
}

fn tool_name(arg0: &str) -> String {
    Path::new(arg0).file_stem().and_then(|s| s.to_str()).unwrap_or(arg0).to_string()
}

fn read(path: &Path) -> coalg::Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse { location: path.display().to_string(), message: e.to_string() })
}

fn write(path: &Path, text: &str) -> coalg::Result<()> {
    fs::write(path, text).map_err(|e| Error::Parse { location: path.display().to_string(), message: e.to_string() })
}

/// Prefixes parse locations with the file name.
fn in_file<T>(path: &Path, r: coalg::Result<T>) -> coalg::Result<T> {
    r.map_err(|e| match e {
        Error::Parse { location, message } if !location.starts_with(&path.display().to_string()) => {
            let location = if location.is_empty() { path.display().to_string() } else { format!("{}: {location}", path.display()) };
            Error::Parse { location, message }
        }
        other => other,
    })
}

fn ring_override(flag: &Option<String>) -> coalg::Result<Option<RingSpec>> {
    flag.as_deref().map(io::parse_ring_flag).transpose()
}

fn base_change(c: Coalgebra, ring: &Option<RingSpec>) -> coalg::Result<Coalgebra> {
    match ring {
        None => Ok(c),
        Some(r) if r == c.ring() => Ok(c),
        Some(r) => {
            let from = c.ring().symbol();
            let d = c.base_change(r).map_err(|e| Error::Unsupported(format!("base change from {from} to {}: {e}", r.symbol())))?;
            let report = validate_coalgebra(&d);
            if !report.overall() {
                return Err(Error::Validation(report));
            }
            Ok(d)
        }
    }
}

fn load_coalgebra(input: &Input) -> coalg::Result<Coalgebra> {
    let doc = in_file(&input.file, io::parse_json(&read(&input.file)?))?;
    if io::is_algebra_document(&doc) {
        return Err(Error::Parse { location: input.file.display().to_string(), message: "expected a coalgebra, found an algebra".into() });
    }
    let c = in_file(&input.file, io::coalgebra_from_json(&doc, ""))?;
    base_change(c, &ring_override(&input.ring)?)
}

fn load_lattice(path: &Path, c: &Coalgebra) -> coalg::Result<Lattice> {
    let l = in_file(path, io::parse_lattice(&read(path)?))?;
    if l.ambient_rank() != c.rank() {
        return Err(Error::AmbientMismatch(c.rank(), l.ambient_rank()));
    }
    if l.ring() == c.ring() {
        return Ok(l);
    }
    Lattice::from_vectors(c.ring(), c.rank(), &l.basis_vectors())
}

/// Reads files named inside another file relative to its directory.
fn sibling_loader(base: &Path) -> impl Fn(&str) -> coalg::Result<String> + '_ {
    move |name: &str| {
        let p = Path::new(name);
        let p = if p.is_absolute() { p.to_path_buf() } else { base.parent().unwrap_or(Path::new(".")).join(p) };
        read(&p)
    }
}

fn emit(output: &Option<PathBuf>, value: &Value, text: &mut String) -> coalg::Result<()> {
    if let Some(path) = output {
        write(path, &io::to_canonical_string(value))?;
        let _ = writeln!(text, "wrote {}", path.display());
    }
    Ok(())
}

fn vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(scalar_to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// `2·a − b` style expansion in the basis names.
fn expansion(c: &Coalgebra, v: &[Scalar]) -> String {
    let mut s = String::new();
    for (i, x) in v.iter().enumerate() {
        let coeff = scalar_to_string(x);
        if coeff == "0" {
            continue;
        }
        let (sign, mag) = match coeff.strip_prefix('-') {
            Some(m) => ("-", m.to_string()),
            None => ("+", coeff),
        };
        if s.is_empty() {
            if sign == "-" {
                s.push('-');
            }
        } else {
            let _ = write!(s, " {sign} ");
        }
        if mag != "1" {
            let _ = write!(s, "{mag}*");
        }
        s.push_str(&c.name(i));
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

fn lattice_block(l: &Lattice, text: &mut String) {
    for b in l.basis_vectors() {
        let _ = writeln!(text, "    {}", vector(&b));
    }
}

fn matrix_block(m: &Matrix, text: &mut String) {
    for i in 0..m.rows() {
        let _ = writeln!(text, "    {}", vector(m.row(i)));
    }
}

fn header(c: &Coalgebra) -> String {
    format!("coalgebra of rank {} over {}\n", c.rank(), c.ring().symbol())
}

fn sorted_group_likes(c: &Coalgebra) -> coalg::Result<Vec<Vec<Scalar>>> {
    let mut g = group_likes(c)?.vectors;
    g.sort();
    Ok(g)
}

fn require_pointed(c: &Coalgebra) -> coalg::Result<()> {
    if is_pointed(c)?.pointed {
        Ok(())
    } else {
        Err(Error::NotPointed)
    }
}

fn run_coalg(cmd: CoalgCmd) -> Run {
    match cmd {
        CoalgCmd::Check(input) => check(&input),
        CoalgCmd::Grouplikes(input) => {
            let c = load_coalgebra(&input)?;
            let g = sorted_group_likes(&c)?;
            let mut text = header(&c);
            let _ = writeln!(text, "group-like elements: {}", g.len());
            for (k, v) in g.iter().enumerate() {
                let _ = writeln!(text, "  g{k} = {}  ({})", vector(v), expansion(&c, v));
            }
            emit(&input.output, &io::vectors_json(&g), &mut text)?;
            Ok(Outcome::ok(text))
        }
        CoalgCmd::Pointed(input) => {
            let c = load_coalgebra(&input)?;
            let r = is_pointed(&c)?;
            let mut text = header(&c);
            let _ = writeln!(text, "pointed: {}", r.pointed);
            let _ = writeln!(text, "characters over the fraction field: {}", r.character_count);
            let _ = writeln!(text, "semisimple dimension: {}", r.semisimple_dim);
            let _ = writeln!(text, "radical dimension: {}", r.radical_dim);
            let mut bad = r.non_integral.clone();
            bad.sort();
            for v in &bad {
                let _ = writeln!(text, "  group-like outside the lattice: {}", vector(v));
            }
            Ok(Outcome::verdict(r.pointed, text))
        }
        CoalgCmd::Coradical(input) => {
            let c = load_coalgebra(&input)?;
            require_pointed(&c)?;
            let g = sorted_group_likes(&c)?;
            let l = Lattice::from_vectors(c.ring(), c.rank(), &g)?;
            let mut text = header(&c);
            let _ = writeln!(text, "coradical: rank {}", l.rank());
            lattice_block(&l, &mut text);
            emit(&input.output, &io::lattice_json(&l), &mut text)?;
            Ok(Outcome::ok(text))
        }
        CoalgCmd::Filtration(input) => {
            let c = load_coalgebra(&input)?;
            let f = coradical_filtration(&c)?;
            let mut text = header(&c);
            let ranks: Vec<String> = f.ranks().iter().map(ToString::to_string).collect();
            let _ = writeln!(text, "coradical filtration ranks: {}", ranks.join(", "));
            for (i, s) in f.stages().iter().enumerate() {
                let _ = writeln!(text, "  C_{i}: rank {}", s.rank());
                lattice_block(s, &mut text);
            }
            let doc = json!({"stages": f.stages().iter().map(io::lattice_json).collect::<Vec<_>>()});
            emit(&input.output, &doc, &mut text)?;
            Ok(Outcome::ok(text))
        }
        CoalgCmd::Primitives(input) => {
            let c = load_coalgebra(&input)?;
            require_pointed(&c)?;
            let g = sorted_group_likes(&c)?;
            if g.len() != 1 {
                return Err(Error::NotIrreducible(g.len()));
            }
            let p = primitives(&c, &g[0])?;
            let mut text = header(&c);
            let _ = writeln!(text, "group-like: {}", vector(&g[0]));
            let _ = writeln!(text, "primitives: rank {}", p.rank());
            for b in p.basis_vectors() {
                let _ = writeln!(text, "    {}  ({})", vector(&b), expansion(&c, &b));
            }
            emit(&input.output, &io::lattice_json(&p), &mut text)?;
            Ok(Outcome::ok(text))
        }
        CoalgCmd::Components(input) => {
            let c = load_coalgebra(&input)?;
            let d = components(&c)?;
            let mut text = header(&c);
            let _ = writeln!(text, "irreducible components: {}", d.parts.len());
            for (g, l) in &d.parts {
                let _ = writeln!(text, "  component of {}: rank {}", vector(g), l.rank());
                lattice_block(l, &mut text);
            }
            let doc = Value::Array(
                d.parts.iter().map(|(g, l)| json!({"group_like": io::vectors_json(std::slice::from_ref(g))[0], "lattice": io::lattice_json(l)})).collect(),
            );
            emit(&input.output, &doc, &mut text)?;
            Ok(Outcome::ok(text))
        }
        CoalgCmd::Split(input) => {
            let c = load_coalgebra(&input)?;
            let r = split_coradical(&c)?;
            let mut text = header(&c);
            let _ = writeln!(text, "splitting C -> C_0, rows are images of basis vectors:");
            matrix_block(r.matrix(), &mut text);
            emit(&input.output, &io::map_json(&r), &mut text)?;
            Ok(Outcome::ok(text))
        }
        CoalgCmd::Tensor { first, second, output } => {
            let a = load_coalgebra(&Input { file: first, ring: None, output: None })?;
            let b = load_coalgebra(&Input { file: second, ring: None, output: None })?;
            let t = tensor(&a, &b)?;
            serialized(&output, &io::coalgebra_json(&t))
        }
        CoalgCmd::Dual(input) => {
            let doc = in_file(&input.file, io::parse_json(&read(&input.file)?))?;
            let out = if io::is_algebra_document(&doc) {
                let a = in_file(&input.file, io::algebra_from_json(&doc, ""))?;
                let c = base_change(dual_of_algebra(&a)?, &ring_override(&input.ring)?)?;
                io::coalgebra_json(&c)
            } else {
                let c = load_coalgebra(&input)?;
                io::algebra_json(&dual_algebra(&c))
            };
            serialized(&input.output, &out)
        }
        CoalgCmd::Wedge { input, subs } => {
            if subs.len() != 2 {
                return Err(Error::Parse { location: "--sub".into(), message: format!("expected two lattices, found {}", subs.len()) });
            }
            let c = load_coalgebra(&input)?;
            let d = load_lattice(&subs[0], &c)?;
            let f = load_lattice(&subs[1], &c)?;
            let w = wedge(&d, &f, &c)?;
            let mut text = header(&c);
            let _ = writeln!(text, "wedge: rank {}", w.rank());
            lattice_block(&w, &mut text);
            emit(&input.output, &io::lattice_json(&w), &mut text)?;
            Ok(Outcome::ok(text))
        }
        CoalgCmd::Purify { input, sub } => {
            let c = load_coalgebra(&input)?;
            let l = load_lattice(&sub, &c)?;
            let p = purify_subcoalgebra(&l, &c)?;
            let mut text = header(&c);
            let _ = writeln!(text, "purification: rank {}", p.rank());
            lattice_block(&p, &mut text);
            emit(&input.output, &io::lattice_json(&p), &mut text)?;
            Ok(Outcome::ok(text))
        }
    }
}

/// Canonical JSON on stdout, or into `output` with a one-line note.
fn serialized(output: &Option<PathBuf>, value: &Value) -> Run {
    match output {
        None => Ok(Outcome::ok(io::to_canonical_string(value))),
        Some(_) => {
            let mut text = String::new();
            emit(output, value, &mut text)?;
            Ok(Outcome::ok(text))
        }
    }
}

/// Validates whichever document the file holds; axiom failures exit 1.
fn check(input: &Input) -> Run {
    let doc = in_file(&input.file, io::parse_json(&read(&input.file)?))?;
    let ring = ring_override(&input.ring)?;
    let (what, result) = if doc.get("matrix").is_some() {
        ("coalgebra map", io::map_from_json(&doc, &sibling_loader(&input.file)).map(|_| ()))
    } else if io::is_algebra_document(&doc) {
        ("algebra", io::algebra_from_json(&doc, "").map(|_| ()))
    } else {
        let c = in_file(&input.file, io::coalgebra_from_json_unchecked(&doc, ""))?;
        let c = match &ring {
            Some(r) if r != c.ring() => c.base_change(r).map_err(|e| Error::Unsupported(e.to_string()))?,
            _ => c,
        };
        let report = validate_coalgebra(&c);
        let mut text = header(&c);
        let _ = writeln!(text, "{report}");
        return Ok(Outcome::verdict(report.overall(), text));
    };
    match in_file(&input.file, result) {
        Ok(()) => Ok(Outcome::ok(format!("{what}: valid\n"))),
        Err(Error::Validation(report)) => Ok(Outcome::verdict(false, format!("{what}: invalid\n{report}\n"))),
        Err(Error::InvalidAlgebra(msg)) => Ok(Outcome::verdict(false, format!("{what}: invalid\n  {msg}\n"))),
        Err(e) => Err(e),
    }
}

pub fn primes_from_env(value: Option<&str>) -> coalg::Result<Vec<u64>> {
    match value {
        None => Ok(DEFAULT_PRIMES.to_vec()),
        Some(s) => s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse { location: PRIMES_VAR.into(), message: format!("not a prime: \"{t}\"") }))
            .collect(),
    }
}

fn run_binomial(cmd: BinomialCmd) -> Run {
    let BinomialCmd::Check { input, primes } = cmd;
    let primes = match primes {
        Some(p) => p,
        None => primes_from_env(std::env::var(PRIMES_VAR).ok().as_deref())?,
    };
    let doc = in_file(&input.file, io::parse_json(&read(&input.file)?))?;
    let a = if io::is_algebra_document(&doc) {
        in_file(&input.file, io::algebra_from_json(&doc, ""))?
    } else {
        dual_algebra(&load_coalgebra(&input)?)
    };
    let a = match ring_override(&input.ring)? {
        Some(r) if &r != a.ring() => a.base_change(&r).map_err(|e| Error::Unsupported(e.to_string()))?,
        _ => a,
    };
    let report = binomial_check(&a, &primes)?;
    let mut text = format!("algebra of rank {} over {}\n", a.rank(), a.ring().symbol());
    for v in &report.per_prime {
        if v.vacuous {
            let _ = writeln!(text, "  p={}: inverted in the ground ring", v.p);
            continue;
        }
        let _ = writeln!(
            text,
            "  p={}: reduced={} residue_fields_prime={} nilradical_rank={}",
            v.p, v.reduced, v.residue_fields_prime, v.nilradical_rank
        );
    }
    let verdict = report.binomial_up_to_tested_primes();
    let _ = writeln!(text, "binomial at tested primes: {verdict}");
    Ok(Outcome::verdict(verdict, text))
}

fn homology_line(groups: &[coalg::simplicial::HomologyGroup]) -> String {
    groups.iter().enumerate().map(|(n, g)| format!("H{n}={g}")).collect::<Vec<_>>().join(", ")
}

fn run_sset(cmd: SsetCmd) -> Run {
    match cmd {
        SsetCmd::Validate { file } => {
            let x = in_file(&file, io::parse_sset_unchecked(&read(&file)?))?;
            let report = validate_sset(&x);
            let sizes: Vec<String> = x.sizes().iter().map(ToString::to_string).collect();
            let text = format!("simplicial set truncated at {}, level sizes {}\n{report}\n", x.dimension(), sizes.join(", "));
            Ok(Outcome::verdict(report.overall(), text))
        }
        SsetCmd::Chains { input } => {
            let x = in_file(&input.file, io::parse_sset(&read(&input.file)?))?;
            let ring = ring_override(&input.ring)?.unwrap_or(RingSpec::Integers);
            let c = chains_functor(&x, &ring)?;
            let d = c.dimension();
            let faces: Vec<Value> = (1..=d)
                .flat_map(|n| (0..=n).map(move |i| (n, i)))
                .map(|(n, i)| json!({"n": n, "i": i, "matrix": matrix_json(c.face(n, i).matrix())}))
                .collect();
            let degens: Vec<Value> = (0..d)
                .flat_map(|n| (0..=n).map(move |j| (n, j)))
                .map(|(n, j)| json!({"n": n, "j": j, "matrix": matrix_json(c.degeneracy(n, j).matrix())}))
                .collect();
            let doc = json!({
                "dimension": d,
                "levels": (0..=d).map(|n| io::coalgebra_json(c.level(n))).collect::<Vec<_>>(),
                "faces": faces,
                "degeneracies": degens,
            });
            serialized(&input.output, &doc)
        }
        SsetCmd::Homology { input, degree } => {
            let x = in_file(&input.file, io::parse_sset(&read(&input.file)?))?;
            let ring = ring_override(&input.ring)?.unwrap_or(RingSpec::Integers);
            let top = degree.unwrap_or(x.dimension().saturating_sub(1));
            let h = homology(&chains_functor(&x, &ring)?, top)?;
            Ok(Outcome::ok(format!("{}\n", homology_line(&h))))
        }
    }
}

fn matrix_json(m: &Matrix) -> Value {
    io::vectors_json(&m.row_list())
}

fn run_smap(cmd: SmapCmd) -> Run {
    let SmapCmd::Check { input, we, cof, degree } = cmd;
    let f = in_file(&input.file, io::parse_smap_with(&read(&input.file)?, &sibling_loader(&input.file)))?;
    let ring = ring_override(&input.ring)?.unwrap_or(RingSpec::Integers);
    let cf = chains_of_map(&f, &ring)?;
    debug_assert!(we != cof);
    if cof {
        let flag = is_cofibration(&cf);
        return Ok(Outcome::verdict(flag, format!("cofibration over {}: {flag}\n", ring.symbol())));
    }
    let top = degree.unwrap_or(f.source().dimension().saturating_sub(1));
    let flag = is_weak_equivalence(&cf, top)?;
    let mut text = format!("weak equivalence through degree {top} over {}: {flag}\n", ring.symbol());
    let hs = homology(cf.source(), top)?;
    let ht = homology(cf.target(), top)?;
    let _ = writeln!(text, "  source: {}", homology_line(&hs));
    let _ = writeln!(text, "  target: {}", homology_line(&ht));
    Ok(Outcome::verdict(flag, text))
}

fn run_corpus(cmd: CorpusCmd) -> Run {
    let CorpusCmd::Generate { seed, count, output } = cmd;
    let entries = coalg::corpus::coalgebras(seed, count, &RingSpec::Integers)?;
    if let Some(dir) = &output {
        fs::create_dir_all(dir).map_err(|e| Error::Parse { location: dir.display().to_string(), message: e.to_string() })?;
    }
    let mut text = format!("corpus seed {seed}: {count} coalgebras\n");
    for (k, e) in entries.iter().enumerate() {
        let _ = writeln!(text, "{k:04} rank {:2} {}", e.shape.rank(), e.shape.describe());
        if let Some(dir) = &output {
            write(&dir.join(format!("c{k:04}.json")), &io::serialize_coalgebra(&e.coalgebra))?;
        }
    }
    Ok(Outcome::ok(text))
}
