//! The `gaq` command line: argument parsing, input loading and reports.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use gaq::algebra::{truncated_quotient, CollapseReport, Element, InvariantVector, LocalAlgebra, Presentation};
use gaq::builtins::{self, builtin, modality_notes, rep_notes, Builtin};
use gaq::corresp::{dual_space, rep_from_algebra};
use gaq::exact::{Matrix, Scalar};
use gaq::orbits::{closure_orbit_census, modality_table, CensusVerdict, Locus, SampleOptions};
use gaq::ortho::{centralizer_in_so, no_open_orbit_check, so_counterexample, MatrixSubalgebra};
use gaq::quadric::{canonical_quadric_algebra, quadric_names, quadric_verdict, rank_invariant, QuadricVerdict};
use gaq::text::{parse_algebra, parse_presentation, print_algebra};
use gaq::Error;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Pretty,
}

#[derive(Parser, Debug)]
#[command(name = "gaq", version, about = "Local algebras, additive actions and quadrics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Built-in object, e.g. truncated:2:3 (repeatable for iso-invariants).
    #[arg(long, global = true)]
    pub builtin: Vec<String>,

    /// Input file: `.alg` algebra or `.pres` presentation (repeatable).
    #[arg(long = "in", global = true)]
    pub input: Vec<PathBuf>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=10_000))]
    pub trials: u32,

    #[arg(long = "coeff-bound", global = true, default_value_t = 10, value_parser = clap::value_parser!(i64).range(1..=1_000_000))]
    pub coeff_bound: i64,

    /// Exact rank over the function field instead of sampling.
    #[arg(long, global = true)]
    pub symbolic: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the algebra axioms and print invariants.
    Verify,
    /// Truncated quotient of a presentation, printed as an algebra file.
    FromPresentation,
    /// The representation matrix exp(a1 M1 + ... + an Mn).
    Rep,
    /// Shift-invariant polynomial space of a presentation.
    Dual {
        /// Degree bound for the search.
        #[arg(long)]
        bound: Option<u32>,
    },
    /// The form B0 and the quadric verdict.
    QuadricCheck,
    /// The canonical algebra of the n-dimensional quadric.
    CanonicalQuadric { n: usize },
    /// Stratified modality table.
    Modality,
    /// Orbits in the closure of the open orbit.
    Census,
    /// The five-dimensional list: collapses and invariants.
    Classify5,
    /// The free-rowed subalgebra of so(n+2) and its checks.
    SoCounterexample { n: usize },
    /// Invariant vectors of one or two algebras.
    IsoInvariants,
    /// Print a built-in object, or list the ids.
    Builtin {
        #[arg(long)]
        list: bool,
        id: Option<String>,
    },
}

/// Outcome of a command: a report plus a failing-check flag.
struct Report {
    text: String,
    failed: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, failed: false }
    }
}

enum Failure {
    /// Bad input or arguments: exit 1.
    Input(String),
    /// A check failed with a certificate: exit 2.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::UnknownBuiltin(_) => Failure::Input(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

type CmdResult = Result<Report, Failure>;

/// A loaded algebra with the generators of the acting group.
struct Loaded {
    name: String,
    algebra: LocalAlgebra,
    group_gens: Vec<Element>,
    presentation: Option<Presentation>,
    collapse: Option<CollapseReport>,
    warnings: Vec<String>,
}

enum Source {
    Builtin(String),
    File(PathBuf),
}

fn sources(cli: &Cli) -> Vec<Source> {
    let mut s: Vec<Source> = cli.builtin.iter().cloned().map(Source::Builtin).collect();
    s.extend(cli.input.iter().cloned().map(Source::File));
    s
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_file<T>(path: &Path, r: gaq::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match Failure::from(e) {
        Failure::Input(m) => Failure::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn all_of_m(a: &LocalAlgebra) -> Vec<Element> {
    (1..a.dim()).map(|i| a.basis_element(i)).collect()
}

fn load(source: &Source) -> Result<Loaded, Failure> {
    match source {
        Source::Builtin(id) => match builtin(id)? {
            Builtin::Algebra(b) => Ok(Loaded {
                name: id.clone(),
                algebra: b.algebra,
                group_gens: b.group_gens,
                presentation: b.presentation,
                collapse: b.collapse,
                warnings: b.warnings,
            }),
            Builtin::Subalgebra(_) => Err(Failure::Input(format!("{id} is a matrix subalgebra, not an algebra"))),
        },
        Source::File(path) => {
            let text = read(path)?;
            if path.extension().is_some_and(|e| e == "pres") {
                let p = with_file(path, parse_presentation(&text))?;
                let (algebra, collapse) = truncated_quotient(&p)?;
                Ok(Loaded {
                    name: path.display().to_string(),
                    group_gens: all_of_m(&algebra),
                    algebra,
                    presentation: Some(p),
                    collapse: Some(collapse),
                    warnings: Vec::new(),
                })
            } else {
                let algebra = with_file(path, parse_algebra(&text))?;
                let group_gens = match algebra.generators() {
                    Some(g) => g.to_vec(),
                    None => all_of_m(&algebra),
                };
                Ok(Loaded {
                    name: path.display().to_string(),
                    algebra,
                    group_gens,
                    presentation: None,
                    collapse: None,
                    warnings: Vec::new(),
                })
            }
        }
    }
}

fn load_one(cli: &Cli) -> Result<Loaded, Failure> {
    let s = sources(cli);
    match s.as_slice() {
        [one] => load(one),
        [] => Err(Failure::Input("expected --builtin <id> or --in <file>".into())),
        _ => Err(Failure::Input("this command takes a single input".into())),
    }
}

fn load_presentation(cli: &Cli) -> Result<(String, Presentation), Failure> {
    let s = sources(cli);
    match s.as_slice() {
        [Source::File(path)] => {
            let text = read(path)?;
            Ok((path.display().to_string(), with_file(path, parse_presentation(&text))?))
        }
        [one @ Source::Builtin(id)] => {
            let l = load(one)?;
            l.presentation
                .map(|p| (id.clone(), p))
                .ok_or_else(|| Failure::Input(format!("{id} is not built from a presentation")))
        }
        [] => Err(Failure::Input("expected --builtin <id> or --in <file.pres>".into())),
        _ => Err(Failure::Input("this command takes a single input".into())),
    }
}

fn options(cli: &Cli) -> SampleOptions {
    SampleOptions {
        seed: cli.seed,
        trials: cli.trials as usize,
        bound: cli.coeff_bound,
        symbolic: cli.symbolic,
        ..SampleOptions::default()
    }
}

fn invariants_line(v: &InvariantVector) -> String {
    let h: Vec<String> = v.hilbert.iter().map(usize::to_string).collect();
    format!(
        "dim {}\thilbert ({})\tsocle_dim {}\tann_dim {}\tmin_generators {}",
        v.dim,
        h.join(","),
        v.socle_dim,
        v.ann_dim,
        v.min_generators
    )
}

fn warnings(out: &mut String, w: &[String]) {
    for line in w {
        let _ = writeln!(out, "# warning: {line}");
    }
}

fn verify(cli: &Cli) -> CmdResult {
    let l = load_one(cli)?;
    let report = l.algebra.validate();
    let mut out = String::new();
    warnings(&mut out, &l.warnings);
    if let Some(c) = &l.collapse {
        let _ = writeln!(out, "# quotient_dim {}\ttruncation_degree {}", c.quotient_dim, c.degree);
    }
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{}\t{status}\t{}", c.name, c.detail);
    }
    if report.passed() {
        let _ = writeln!(out, "invariants\t{}", invariants_line(&l.algebra.invariant_vector()));
    }
    Ok(Report {
        text: out,
        failed: !report.passed(),
    })
}

fn from_presentation(cli: &Cli) -> CmdResult {
    let (_, p) = load_presentation(cli)?;
    let (a, collapse) = truncated_quotient(&p)?;
    let mut out = String::new();
    let _ = writeln!(out, "# quotient_dim {}", collapse.quotient_dim);
    let _ = writeln!(out, "# truncation_degree {}", collapse.degree);
    if collapse.forced_zero.is_empty() {
        let _ = writeln!(out, "# forced_zero none");
    } else {
        let z: Vec<String> = collapse.forced_zero.iter().map(|f| f.display(p.vars())).collect();
        let _ = writeln!(out, "# forced_zero {}", z.join(", "));
    }
    out += &print_algebra(&a);
    Ok(Report::ok(out))
}

fn rep(cli: &Cli) -> CmdResult {
    let l = load_one(cli)?;
    let r = rep_from_algebra(&l.algebra, &l.group_gens)?;
    let mut out = String::new();
    let _ = writeln!(out, "# basis {}", l.algebra.labels().join(" "));
    let _ = writeln!(out, "# parameters {}", r.param_names().join(" "));
    out += &r.display();
    out.push('\n');
    for note in rep_notes(&l.name) {
        let _ = writeln!(out, "# {note}");
    }
    Ok(Report::ok(out))
}

fn dual(cli: &Cli, bound: Option<u32>) -> CmdResult {
    let (_, p) = load_presentation(cli)?;
    let v = dual_space(&p, bound)?;
    let mut out = format!(
        "# dim {}\tdegree_bound {}\tmax_degree {}\n",
        v.dim(),
        v.degree_bound(),
        v.max_degree()
    );
    out += &v.display();
    Ok(Report::ok(out))
}

fn form_lines(out: &mut String, verdict: &QuadricVerdict, dim: usize) {
    if let Some(form) = verdict.form() {
        let names = quadric_names(dim);
        let _ = writeln!(out, "equation\t{}", form.equation().display(&names));
        let _ = writeln!(out, "rank\t{}", form.rank());
        let _ = writeln!(out, "basis\t{}", form.labels().join(" "));
        match form.permutation() {
            Some(p) => {
                let p: Vec<String> = p.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "permutation\t{}", p.join(" "));
            }
            None => {
                let _ = writeln!(out, "permutation\tnone (basis change is not a permutation)");
            }
        }
    }
}

fn quadric_check(cli: &Cli) -> CmdResult {
    let l = load_one(cli)?;
    let verdict = quadric_verdict(&l.algebra)?;
    let mut out = format!("verdict\t{}\n", verdict.kind());
    form_lines(&mut out, &verdict, l.algebra.dim());
    match &verdict {
        QuadricVerdict::NotDimOneSquare { dim } => {
            let _ = writeln!(out, "dim_m2\t{dim}");
            Ok(Report { text: out, failed: true })
        }
        _ => {
            let _ = writeln!(out, "rank_invariant\t{}", rank_invariant(&l.algebra)?);
            Ok(Report::ok(out))
        }
    }
}

fn canonical_quadric(n: usize) -> CmdResult {
    if n == 0 {
        return Err(Failure::Input("n must be positive".into()));
    }
    let a = canonical_quadric_algebra(n);
    let verdict = quadric_verdict(&a)?;
    let mut out = print_algebra(&a);
    let _ = writeln!(out, "verdict\t{}", verdict.kind());
    form_lines(&mut out, &verdict, a.dim());
    Ok(Report::ok(out))
}

fn modality(cli: &Cli) -> CmdResult {
    let l = load_one(cli)?;
    let table = modality_table(&l.algebra, &l.group_gens, &options(cli))?;
    let mut out = String::new();
    warnings(&mut out, &l.warnings);
    out += &match cli.format {
        Format::Tsv => table.to_tsv(),
        Format::Pretty => table.to_pretty(),
    };
    for note in modality_notes(&l.name, &table) {
        let _ = writeln!(out, "# {note}");
    }
    Ok(Report::ok(out))
}

fn census(cli: &Cli) -> CmdResult {
    let l = load_one(cli)?;
    let c = closure_orbit_census(&l.algebra, &l.group_gens, &options(cli))?;
    let names: Vec<String> = (0..l.algebra.dim()).map(|i| format!("u{i}")).collect();
    let mut out = String::new();
    let _ = writeln!(out, "# adapted basis {}", c.quadric.labels.join(" "));
    let _ = writeln!(out, "# closure quadric {} = 0", c.quadric.polynomial().display(&names));
    let _ = writeln!(out, "c\tstratum_dim\tlocus\tlocus_dim\torbit_dim\tfamily_dim\tcomponents");
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    for r in &c.rows {
        let locus = match r.locus {
            Locus::Empty => "empty",
            Locus::Whole => "whole",
            Locus::Hypersurface => "hypersurface",
        };
        let _ = writeln!(
            out,
            "{}\t{}\t{locus}\t{}\t{}\t{}\t{}",
            r.c,
            r.ambient_dim,
            opt(r.locus_dim),
            opt(r.orbit_dim),
            opt(r.family_dim),
            r.components
        );
    }
    match c.verdict {
        CensusVerdict::Finite(k) => {
            let _ = writeln!(out, "verdict\tFinite\t{k}");
        }
        CensusVerdict::InfiniteCertificate { c, family_dim } => {
            let _ = writeln!(out, "verdict\tInfinite\tstratum {c}\tfamily_dim {family_dim}");
        }
    }
    Ok(Report::ok(out))
}

fn classify5() -> CmdResult {
    let mut out = String::from("id\tquotient_dim\tforced_zero\thilbert\tsocle_dim\tann_dim\n");
    let mut collapsed = Vec::new();
    for id in builtins::r5_ids() {
        let name = format!("r5:{id}");
        let b = builtin(&name)?;
        let a = b.algebra().expect("algebra built-in");
        let collapse = a.collapse.as_ref().expect("presentation built-in");
        let vars = a.presentation.as_ref().expect("presentation").vars();
        let zeros: Vec<String> = collapse.forced_zero.iter().map(|f| f.display(vars)).collect();
        let v = a.algebra.invariant_vector();
        let h: Vec<String> = v.hilbert.iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "{name}\t{}\t{}\t({})\t{}\t{}",
            collapse.quotient_dim,
            if zeros.is_empty() { "-".into() } else { zeros.join(",") },
            h.join(","),
            v.socle_dim,
            v.ann_dim
        );
        if collapse.quotient_dim != 5 {
            collapsed.push(name);
        }
    }
    let _ = writeln!(out, "collapsed\t{}", collapsed.join(" "));
    let r2 = builtin("r5:2")?.algebra().expect("algebra").algebra.invariant_vector();
    let r3p = builtin("r5:3p")?.algebra().expect("algebra").algebra.invariant_vector();
    let verdict = if r2 != r3p { "NON_ISOMORPHIC" } else { "INVARIANTS_AGREE" };
    let _ = writeln!(out, "r5:2 vs r5:3p\t{verdict}\tann_dim {} vs {}", r2.ann_dim, r3p.ann_dim);
    Ok(Report::ok(out))
}

fn matrix_block(out: &mut String, m: &Matrix<Scalar>) {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(Scalar::to_string).collect();
        let _ = writeln!(out, "{}", row.join("\t"));
    }
}

fn so_counterexample_cmd(cli: &Cli, n: usize) -> CmdResult {
    if n < 6 {
        return Err(Failure::Input("n must be at least 6".into()));
    }
    let s = gaq::ortho::free_rowed_subalgebra(n);
    let c = so_counterexample(n, cli.seed, cli.trials as usize);
    let mut out = String::new();
    let _ = writeln!(out, "# form");
    matrix_block(&mut out, s.form().matrix());
    for (k, x) in s.basis().iter().enumerate() {
        let _ = writeln!(out, "# X{}", k + 1);
        matrix_block(&mut out, x);
    }
    let flag = |b: bool| if b { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "so_membership\t{}", flag(c.so_membership));
    let _ = writeln!(out, "commutative\t{}", flag(c.commutative));
    let _ = writeln!(out, "cube_zero\t{}", flag(c.cube_zero));
    let support: Vec<String> = c
        .square_support
        .iter()
        .map(|(i, j, v)| format!("({},{})={v}", i + 1, j + 1))
        .collect();
    let _ = writeln!(
        out,
        "square_support\t{}\t{}",
        flag(c.square_in_corner()),
        if support.is_empty() { "zero".into() } else { support.join(" ") }
    );
    let _ = writeln!(out, "exp_identity\t{}", flag(c.exp_identity));
    let _ = writeln!(out, "exp_preserves_form\t{}", flag(c.exp_preserves_form));
    let _ = writeln!(out, "max_orbit_dim\t{}\t(n = {n}, open orbit needs {n})", c.max_orbit_dim);
    let _ = writeln!(
        out,
        "centralizer_dim\t{}\t{}",
        c.centralizer_dim,
        if c.centralizer_dim == n { "maximal" } else { "not maximal" }
    );
    Ok(Report {
        text: out,
        failed: !c.passed(),
    })
}

fn iso_invariants(cli: &Cli) -> CmdResult {
    let s = sources(cli);
    if s.is_empty() || s.len() > 2 {
        return Err(Failure::Input("expected one or two inputs".into()));
    }
    let loaded = s.iter().map(load).collect::<Result<Vec<_>, _>>()?;
    let mut out = String::new();
    let vectors: Vec<InvariantVector> = loaded.iter().map(|l| l.algebra.invariant_vector()).collect();
    for (l, v) in loaded.iter().zip(&vectors) {
        let _ = writeln!(out, "{}\t{}", l.name, invariants_line(v));
    }
    if let [a, b] = vectors.as_slice() {
        let verdict = if a != b { "NON_ISOMORPHIC" } else { "INVARIANTS_AGREE" };
        let _ = writeln!(out, "verdict\t{verdict}");
    }
    Ok(Report::ok(out))
}

fn subalgebra_text(s: &MatrixSubalgebra, cli: &Cli) -> String {
    let mut out = format!("# subalgebra of dimension {} in so({})\n# form\n", s.dim(), s.ambient_dim());
    matrix_block(&mut out, s.form().matrix());
    for (k, x) in s.basis().iter().enumerate() {
        let _ = writeln!(out, "# X{}", k + 1);
        matrix_block(&mut out, x);
    }
    let _ = writeln!(out, "max_orbit_dim\t{}", no_open_orbit_check(s, cli.seed, cli.trials as usize));
    let _ = writeln!(out, "centralizer_dim\t{}", centralizer_in_so(s).dim);
    out
}

fn builtin_cmd(cli: &Cli, list: bool, id: Option<&str>) -> CmdResult {
    if list {
        return Ok(Report::ok(builtins::list().iter().map(|s| format!("{s}\n")).collect()));
    }
    let id = id
        .or(cli.builtin.first().map(String::as_str))
        .ok_or_else(|| Failure::Input("expected a built-in id or --list".into()))?;
    match builtin(id)? {
        Builtin::Algebra(b) => {
            let mut out = String::new();
            warnings(&mut out, &b.warnings);
            if let Some(p) = &b.presentation {
                let rels: Vec<String> = p.relations().iter().map(|r| r.display(p.vars())).collect();
                let _ = writeln!(out, "# presentation ({})", rels.join(", "));
            }
            out += &print_algebra(&b.algebra);
            Ok(Report::ok(out))
        }
        Builtin::Subalgebra(s) => Ok(Report::ok(subalgebra_text(&s, cli))),
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Verify => verify(cli),
        Command::FromPresentation => from_presentation(cli),
        Command::Rep => rep(cli),
        Command::Dual { bound } => dual(cli, *bound),
        Command::QuadricCheck => quadric_check(cli),
        Command::CanonicalQuadric { n } => canonical_quadric(*n),
        Command::Modality => modality(cli),
        Command::Census => census(cli),
        Command::Classify5 => classify5(),
        Command::SoCounterexample { n } => so_counterexample_cmd(cli, *n),
        Command::IsoInvariants => iso_invariants(cli),
        Command::Builtin { list, id } => builtin_cmd(cli, *list, id.as_deref()),
    }
}

/// Runs the command line `args` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code: 0 on
/// success, 1 on input errors, 2 on failed checks.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let (text, code) = match dispatch(&cli) {
        Ok(r) => (r.text, if r.failed { 2 } else { 0 }),
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            return 1;
        }
        Err(Failure::Check(m)) => (format!("FAIL\t{m}\n"), 2),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                let _ = writeln!(err, "error: {}: {e}", path.display());
                return 1;
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    code
}
