use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use supergrade::assembly::{
    assemble_mn, assemble_nn, build_model_la, coordinatize, matrix_sl_a, model_la_data, theorem310_check, CoordinateData,
};
use supergrade::coordalg::{AssocSuperalgebra, Builtin};
use supergrade::document::{load_document, save_document, Document};
use supergrade::homspaces::{hom_basis, GModule};
use supergrade::lie::{GradedAlgebra, JacobiOptions};
use supergrade::roots::{cartan_matrix, check_root_graded, root_system};
use supergrade::superclassical::{casimir_matrix, ClassicalAlgebra};
use supergrade::suite::run_all;
use supergrade::{Error, Field, Rational};

type Q = Rational;

#[derive(Parser)]
#[command(name = "supergrade", version, about = "Exact constructions and checks for A(m,n)-graded Lie superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Shape {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Even block size, alternative to --m (p = m + 1).
    #[arg(long)]
    p: Option<usize>,
    /// Odd block size, alternative to --n (q = n + 1).
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Args, Clone)]
struct Common {
    /// Structured JSON report (or document, for assemble/coordinatize).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest dimension for exhaustive Jacobi checks.
    #[arg(long, default_value_t = 64)]
    max_dim: usize,
}

#[derive(Args, Clone)]
struct Source {
    #[command(flatten)]
    shape: Shape,
    /// Coordinate algebra: builtin such as `matrix_super:1,1`, or a document path.
    #[arg(long, default_value = "ground_field")]
    coord: String,
    #[arg(long, value_enum, default_value_t = Model::La)]
    model: Model,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    /// 𝔏(A) = (g ⊗ A) ⊕ ad [A, A]; a coordinate document is assembled as given.
    #[value(name = "LA", alias = "la")]
    La,
    /// g ⊗ A with D = 0 (psl ⊗ A when m = n).
    Tensor,
    /// sl(m+1|n+1)(A) inside matrices over A.
    Sl,
}

#[derive(Subcommand)]
enum Command {
    /// Even, odd and simple roots.
    Roots {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        common: Common,
    },
    /// Cartan matrix from the pairing of simple roots.
    Cartan {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        common: Common,
    },
    /// dim Hom_g(g⊗g, g) and dim Hom_g(g⊗g, F).
    Homdim {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        common: Common,
    },
    /// Casimir operator on the adjoint and trivial modules.
    Casimir {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        common: Common,
    },
    /// Super Jacobi identity of an assembled algebra or a Lie document.
    VerifyJacobi {
        #[command(flatten)]
        source: Source,
        /// Lie superalgebra document to check instead of an assembled model.
        #[arg(long)]
        lie: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// The coordinate conditions for the Jacobi identity.
    #[command(name = "check-310")]
    Check310 {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
    },
    /// Root-gradedness of an assembled model.
    CheckGraded {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
    },
    /// Recover coordinate data from the central quotient of a model.
    Coordinatize {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
    },
    /// Build a model and write it as a Lie document.
    Assemble {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
    },
    /// Run the acceptance suite.
    Suite {
        #[arg(long, default_value = "desk")]
        level: String,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Usage(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct CheckLine {
    name: String,
    passed: bool,
    detail: String,
    millis: u128,
}

struct Report {
    command: String,
    lines: Vec<CheckLine>,
    info: Vec<String>,
}

impl Report {
    fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            lines: Vec::new(),
            info: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, passed: bool, detail: String, start: Instant) {
        self.lines.push(CheckLine {
            name: name.into(),
            passed,
            detail,
            millis: start.elapsed().as_millis(),
        });
    }

    fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    fn print(&self) {
        for i in &self.info {
            println!("{i}");
        }
        for l in &self.lines {
            let tag = if l.passed { "PASS" } else { "FAIL" };
            if l.detail.is_empty() {
                println!("{tag} {}", l.name);
            } else {
                println!("{tag} {}: {}", l.name, l.detail);
            }
        }
        if !self.lines.is_empty() {
            println!("overall: {}", if self.passed() { "PASS" } else { "FAIL" });
        }
    }

    fn to_json(&self, common: &Common) -> serde_json::Value {
        json!({
            "command": self.command,
            "seed": common.seed,
            "max_dim": common.max_dim,
            "info": self.info,
            "checks": self.lines.iter().map(|l| json!({
                "name": l.name,
                "passed": l.passed,
                "witness": if l.passed { serde_json::Value::Null } else { json!(l.detail) },
                "detail": l.detail,
                "millis": l.millis,
            })).collect::<Vec<_>>(),
            "passed": self.passed(),
        })
    }
}

impl Shape {
    fn mn(&self) -> Result<(usize, usize), Failure> {
        let m = match (self.m, self.p) {
            (Some(m), None) => m,
            (None, Some(p)) if p > 0 => p - 1,
            (None, None) => return Err(Failure::Usage("give --m or --p".into())),
            _ => return Err(Failure::Usage("give exactly one of --m and --p (p >= 1)".into())),
        };
        let n = match (self.n, self.q) {
            (Some(n), None) => n,
            (None, Some(q)) if q > 0 => q - 1,
            (None, None) => return Err(Failure::Usage("give --n or --q".into())),
            _ => return Err(Failure::Usage("give exactly one of --n and --q (q >= 1)".into())),
        };
        Ok((m, n))
    }

    fn algebra(&self) -> Result<(usize, usize, Arc<ClassicalAlgebra<Q>>), Failure> {
        let (m, n) = self.mn()?;
        Ok((m, n, Arc::new(ClassicalAlgebra::type_a(m, n)?)))
    }
}

enum Coord {
    Algebra(AssocSuperalgebra<Q>),
    Data(CoordinateData<Q>),
}

fn load_coord(spec: &str) -> Result<Coord, Failure> {
    if let Ok(b) = spec.parse::<Builtin>() {
        return Ok(Coord::Algebra(b.build()?));
    }
    let path = PathBuf::from(spec);
    if !path.exists() {
        return Err(Failure::Usage(format!("'{spec}' is neither a builtin algebra nor an existing file")));
    }
    match load_document::<Q>(&path) {
        Ok(Document::Assoc(a)) => Ok(Coord::Algebra(a)),
        Ok(Document::Coordinates(c)) => Ok(Coord::Data(c)),
        Ok(Document::Lie(_)) => Err(Failure::Input(format!("{spec}: expected an associative or coordinate document"))),
        Err(e) => Err(Failure::Input(format!("{spec}: {e}"))),
    }
}

fn coordinate_data(src: &Source) -> Result<CoordinateData<Q>, Failure> {
    match load_coord(&src.coord)? {
        Coord::Data(c) => Ok(c),
        Coord::Algebra(a) => {
            let (m, n) = src.shape.mn()?;
            Ok(match src.model {
                Model::La => model_la_data(&a, m, n)?,
                Model::Tensor | Model::Sl => CoordinateData::without_d(m, n, a)?,
            })
        }
    }
}

fn build(src: &Source) -> Result<GradedAlgebra<Q>, Failure> {
    match load_coord(&src.coord)? {
        Coord::Data(c) => Ok(assemble_mn(&c)?),
        Coord::Algebra(a) => {
            let (m, n) = src.shape.mn()?;
            Ok(match src.model {
                Model::La => build_model_la(&a, m, n)?,
                Model::Tensor if m == n => assemble_nn(n, &a, Vec::new(), &vec![Vec::new(); a.dim() * a.dim()])?,
                Model::Tensor => assemble_mn(&CoordinateData::without_d(m, n, a)?)?,
                Model::Sl => matrix_sl_a(m + 1, n + 1, &a)?,
            })
        }
    }
}

fn jacobi_options(common: &Common, g: Option<&GradedAlgebra<Q>>) -> JacobiOptions {
    let mut priority: Vec<usize> = Vec::new();
    if let Some(g) = g {
        for v in g.embedding.images() {
            priority.extend(v.iter().enumerate().filter(|(_, c)| **c != Q::from_i64(0)).map(|(i, _)| i));
        }
        priority.sort_unstable();
        priority.dedup();
    }
    JacobiOptions {
        max_exhaustive_dim: common.max_dim,
        seed: common.seed,
        priority,
        ..Default::default()
    }
}

fn run(cli: Cli) -> Result<(Report, Common), Failure> {
    match cli.command {
        Command::Roots { shape, common } => {
            let (m, n, g) = shape.algebra()?;
            let rs = root_system(g.shape());
            let mut r = Report::new("roots");
            let fmt = |v: &[supergrade::roots::Weight]| v.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ");
            r.info.push(format!("A({m},{n}), shape {}", g.shape()));
            r.info.push(format!("even roots ({}): {}", rs.even_roots.len(), fmt(&rs.even_roots)));
            r.info.push(format!("odd roots ({}): {}", rs.odd_roots.len(), fmt(&rs.odd_roots)));
            r.info.push(format!("simple roots: {}", fmt(&rs.simple_roots)));
            Ok((r, common))
        }
        Command::Cartan { shape, common } => {
            let (_, _, g) = shape.algebra()?;
            let c = cartan_matrix::<Q>(&root_system(g.shape()));
            let mut r = Report::new("cartan");
            for i in 0..c.rows() {
                r.info.push(c.row(i).iter().map(|x| format!("{x:>3}")).collect::<Vec<_>>().join(" "));
            }
            Ok((r, common))
        }
        Command::Homdim { shape, common } => {
            let (_, _, g) = shape.algebra()?;
            let mut r = Report::new("homdim");
            let adj = GModule::adjoint(g.clone());
            let sq = adj.tensor(&adj)?;
            let t = Instant::now();
            let d1 = hom_basis(&sq, &adj)?.len();
            r.info.push(format!("dim Hom_g(g⊗g,g) = {d1} ({} ms)", t.elapsed().as_millis()));
            let t = Instant::now();
            let d2 = hom_basis(&sq, &GModule::trivial(g.clone(), 1, 0))?.len();
            r.info.push(format!("dim Hom_g(g⊗g,F) = {d2} ({} ms)", t.elapsed().as_millis()));
            Ok((r, common))
        }
        Command::Casimir { shape, common } => {
            let (m, n, g) = shape.algebra()?;
            let mut r = Report::new("casimir");
            let t = Instant::now();
            let c = casimir_matrix(&g, &GModule::adjoint(g.clone()))?;
            let k = if m == n { 0 } else { m as i64 - n as i64 };
            let expect = supergrade::linalg::Matrix::identity(g.dim()).scale(&Q::from_i64(k));
            r.check("adjoint", c == expect, format!("C = {k} id expected"), t);
            let t = Instant::now();
            let z = casimir_matrix(&g, &GModule::trivial(g.clone(), 1, 0))?.is_zero();
            r.check("trivial", z, "C = 0 expected".into(), t);
            Ok((r, common))
        }
        Command::VerifyJacobi { source, lie, common } => {
            let mut r = Report::new("verify-jacobi");
            let t = Instant::now();
            let (alg, graded) = match lie {
                Some(p) => match load_document::<Q>(&p) {
                    Ok(Document::Lie(l)) => (l, None),
                    Ok(_) => return Err(Failure::Input(format!("{}: expected a Lie document", p.display()))),
                    Err(e) => return Err(Failure::Input(format!("{}: {e}", p.display()))),
                },
                None => {
                    let g = build(&source)?;
                    (g.algebra.clone(), Some(g))
                }
            };
            let opts = jacobi_options(&common, graded.as_ref());
            let mode = if alg.dim() <= opts.max_exhaustive_dim { "exhaustive" } else { "sampled" };
            r.info.push(format!("dim {} ({mode}, max-dim {})", alg.dim(), common.max_dim));
            let c = alg.jacobi_check(&opts);
            let detail = match c.witness() {
                Some(w) => format!(
                    "fails on ({}, {}, {})",
                    alg.label(w.triple.0),
                    alg.label(w.triple.1),
                    alg.label(w.triple.2)
                ),
                None => String::new(),
            };
            r.check("jacobi", c.holds(), detail, t);
            Ok((r, common))
        }
        Command::Check310 { source, common } => {
            let cd = coordinate_data(&source)?;
            let mut r = Report::new("check-310");
            let t = Instant::now();
            let rep = theorem310_check(&cd)?;
            for (name, c) in rep.conditions() {
                r.check(name, c.holds(), c.witness().cloned().unwrap_or_default(), t);
            }
            r.check("form_spans_d", rep.form_spans_d, String::new(), t);
            Ok((r, common))
        }
        Command::CheckGraded { source, common } => {
            let g = build(&source)?;
            let mut r = Report::new("check-graded");
            let t = Instant::now();
            let rep = check_root_graded(&g.algebra, &g.embedding)?;
            r.info.push(format!("dim {}", g.algebra.dim()));
            r.check("embedding", rep.embedding_valid, rep.embedding_failure.clone().unwrap_or_default(), t);
            let off = rep.offending_weights.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ");
            r.check("weights_in_roots", rep.weights_in_roots, off, t);
            r.check(
                "zero_space_generated",
                rep.zero_space_generated,
                format!("generated {} of {}", rep.zero_space_dims.0, rep.zero_space_dims.1),
                t,
            );
            Ok((r, common))
        }
        Command::Coordinatize { source, common } => {
            let g = build(&source)?.central_quotient()?;
            let mut r = Report::new("coordinatize");
            let t = Instant::now();
            let cd = coordinatize(&g.algebra, &g.embedding)?;
            r.info.push(format!(
                "L/Z(L) dim {}: A dim {} (parity {:?}), D dim {}",
                g.algebra.dim(),
                cd.coord_algebra().dim(),
                cd.coord_algebra().parity(),
                cd.d_algebra().dim()
            ));
            r.check("coordinatize", true, String::new(), t);
            if let Some(p) = &common.out {
                save_document(&Document::Coordinates(cd), p)?;
                r.info.push(format!("wrote {}", p.display()));
            }
            Ok((r, Common { out: None, ..common }))
        }
        Command::Assemble { source, common } => {
            let g = build(&source)?;
            let mut r = Report::new("assemble");
            r.info.push(format!("dim {}", g.algebra.dim()));
            match &common.out {
                Some(p) => {
                    save_document(&Document::Lie(g.algebra), p)?;
                    r.info.push(format!("wrote {}", p.display()));
                }
                None => println!("{}", Document::Lie(g.algebra).to_json()),
            }
            Ok((r, Common { out: None, ..common }))
        }
        Command::Suite { level, common } => {
            if level != "desk" {
                return Err(Failure::Usage(format!("unknown suite level '{level}' (only 'desk')")));
            }
            let mut r = Report::new("suite");
            for o in run_all(common.seed) {
                r.lines.push(CheckLine {
                    name: format!("{:02} {}", o.id, o.name),
                    passed: o.passed,
                    detail: o.detail,
                    millis: o.millis,
                });
            }
            Ok((r, common))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, common)) => {
            report.print();
            if let Some(p) = &common.out {
                let text = serde_json::to_string_pretty(&report.to_json(&common)).expect("report serializes");
                if let Err(e) = std::fs::write(p, text + "\n") {
                    eprintln!("error: {}: {e}", p.display());
                    return ExitCode::from(2);
                }
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
