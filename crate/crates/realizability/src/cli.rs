//! The `realize` command line. [`run`] is the whole program minus the
//! process boundary, so tests drive it in-process.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use realizability_core::dco::{
    check_cartesian_shallow, check_dco_axioms, check_functional_completeness,
    check_reconstruction_iso, check_saturation, Dco, FiniteDco, InducedDco, SearchBudget,
};
use realizability_core::exlex::{audit_topos_conditions, discrete_lift_check, lex_base, Rt};
use realizability_core::fam::{check_roundtrip, fiber_leq, show_pred};
use realizability_core::pasm::{
    audit_characterization, check_category_laws, check_factorization, check_limits,
    pointedness_equivalences, pointedness_equivalences_apply, Obj, PAsm,
};
use realizability_core::pca::element;
use realizability_core::poly::compile;
use realizability_core::{
    evaluate, Fuel, Polynomial, Report, Search, SkPca, Status, Term, Verdict,
};

use crate::format::DcoFile;
use crate::report::{exit_code, Document, Settings};
use crate::sample;

pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_IO: u8 = 74;

#[derive(Parser, Debug)]
#[command(
    name = "realize",
    version,
    about = "Checks and audits for realizability structures"
)]
pub struct Cli {
    /// Reduction steps allowed per evaluation.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub fuel: Fuel,
    /// Largest realizer candidate, in leaves, for searches over combinatory logic.
    #[arg(long, global = true, default_value_t = 8)]
    pub depth: usize,
    /// Largest index set enumerated by exhaustive checks.
    #[arg(long, global = true, default_value_t = 2)]
    pub bound: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduce a combinatory term to normal form.
    Eval { term: String },
    /// Compile a polynomial such as `x2 x1` into a combinator.
    Compile {
        poly: String,
        #[arg(long)]
        arity: Option<usize>,
    },
    /// Sampled combinatory completeness and pairing laws.
    PcaLaws,
    /// Axioms and declared structure of a finite DCO.
    DcoCheck { file: PathBuf },
    /// Sampled cartesian and completeness laws of the DCO induced by combinatory logic.
    DcoInduce,
    /// Rebuild an algebra from a DCO and compare it with the original.
    DcoReconstruct { file: Option<PathBuf> },
    /// Whether predicate PHI is below PSI in the fiber, with a realizer.
    FamLeq {
        file: PathBuf,
        phi: String,
        psi: String,
    },
    /// Universal properties of the chosen finite limits.
    PasmLimits { file: Option<PathBuf> },
    /// Category laws, factorizations and the characterization audit.
    PasmAudit { file: PathBuf },
    /// The four topos conditions on the exact completion.
    ExlexAudit { file: PathBuf },
    /// Morphisms between two objects of the completion over combinatory
    /// logic. Objects are written `t1, t2, … [| c1 c2 …]`: a predicate
    /// and optional class labels.
    RtHom { src: String, tgt: String },
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

fn fail(code: u8, msg: String) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("realize: {msg}\n"),
        code,
    }
}

enum Produced {
    Report(Report),
    /// A single value with a text rendering of its own.
    Value {
        report: Report,
        text: String,
    },
}

pub fn run(args: &[String]) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    if cli.fuel == 0 {
        return fail(EXIT_USAGE, "--fuel must be positive".into());
    }
    if cli.depth == 0 {
        return fail(EXIT_USAGE, "--depth must be positive".into());
    }
    let settings = Settings {
        seed: cli.seed,
        fuel: cli.fuel,
        depth: cli.depth,
        bound: cli.bound,
    };
    let produced = match dispatch(&cli) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let (report, value) = match produced {
        Produced::Report(r) => (r, None),
        Produced::Value { report, text } => (report, Some(text)),
    };
    let doc = Document::new(args.iter().skip(1).cloned().collect(), &settings, &report);
    let rendered = match (cli.format, value) {
        (OutputFormat::Structured, _) => doc.to_json(),
        (OutputFormat::Text, Some(v)) => v,
        (OutputFormat::Text, None) => doc.to_text(),
    };
    let code = exit_code(report.overall());
    match &cli.out {
        Some(path) => match crate::report::emit(&rendered, path) {
            Ok(()) => Outcome {
                stdout: String::new(),
                stderr: String::new(),
                code,
            },
            Err(e) => fail(EXIT_IO, format!("{}: {e}", path.display())),
        },
        None => Outcome {
            stdout: rendered,
            stderr: String::new(),
            code,
        },
    }
}

pub fn load_dco(path: &Path) -> Result<DcoFile, Outcome> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_IO, format!("{}: {e}", path.display())))?;
    DcoFile::parse(&src).map_err(|e| fail(EXIT_DATA, format!("{}:{e}", path.display())))
}

fn dispatch(cli: &Cli) -> Result<Produced, Outcome> {
    let fuel = cli.fuel;
    let bound = cli.bound;
    Ok(match &cli.command {
        Command::Eval { term } => {
            let t: Term = term.parse().map_err(|e| fail(EXIT_DATA, format!("{e}")))?;
            let mut r = Report::new();
            let text = match evaluate(&t, fuel) {
                Verdict::Value(v) => {
                    r.push("eval", Status::Pass, v.to_string());
                    format!("{v}\n")
                }
                Verdict::Exhausted { spent } => {
                    r.push_fuel(
                        "eval",
                        Status::Unknown,
                        format!("no normal form within {spent} steps"),
                        spent,
                    );
                    format!("unknown: no normal form within {spent} steps\n")
                }
                Verdict::Undefined => {
                    r.push("eval", Status::Fail, "undefined");
                    String::from("undefined\n")
                }
            };
            Produced::Value { report: r, text }
        }
        Command::Compile { poly, arity } => {
            let p = Polynomial::parse(poly, *arity).map_err(|e| fail(EXIT_DATA, format!("{e}")))?;
            let mut r = Report::new();
            let text = match compile(&SkPca, &p, fuel) {
                Verdict::Value(e) => {
                    r.push("compile", Status::Pass, e.to_string());
                    format!("{e}\n")
                }
                Verdict::Exhausted { spent } => {
                    r.push_fuel("compile", Status::Unknown, "ran out of fuel", spent);
                    String::from("unknown: ran out of fuel\n")
                }
                Verdict::Undefined => {
                    r.push("compile", Status::Fail, "undefined");
                    String::from("undefined\n")
                }
            };
            Produced::Value { report: r, text }
        }
        Command::PcaLaws => {
            let mut r = Report::new();
            r.extend_prefixed(
                "completeness",
                sample::combinatory_completeness(cli.seed, 100, 20, fuel),
            );
            r.extend_prefixed("pairing", sample::pairing_laws(cli.seed, 200, fuel));
            Produced::Report(r)
        }
        Command::DcoCheck { file } => {
            let f = load_dco(file)?;
            Produced::Report(dco_check(&f, fuel))
        }
        Command::DcoInduce => {
            let mut r = Report::new();
            r.extend_prefixed("cartesian", sample::induced_cartesian(cli.seed, 100, fuel));
            r.extend_prefixed(
                "completeness",
                sample::functional_completeness(cli.seed, 100, fuel),
            );
            Produced::Report(r)
        }
        Command::DcoReconstruct { file: None } => {
            let mut r = sample::reconstruction(cli.seed, 100, 50, fuel);
            let d = induced(cli)?;
            let probes: Vec<Term> = ["I", "K", "K a", "S K K", "K I", "S (K I)"]
                .iter()
                .map(|s| s.parse().expect("fixed probe"))
                .collect();
            let pool = sample::element_pool();
            r.extend_prefixed("iso", check_reconstruction_iso(&d, &probes, &pool, fuel));
            Produced::Report(r)
        }
        Command::DcoReconstruct { file: Some(file) } => {
            let f = load_dco(file)?;
            let d = &f.dco;
            let members: Vec<usize> = (0..d.member_count()).collect();
            let atoms: Vec<usize> = (0..d.size()).collect();
            Produced::Report(check_reconstruction_iso(d, &members, &atoms, fuel))
        }
        Command::FamLeq { file, phi, psi } => {
            let f = load_dco(file)?;
            let get = |name: &str| {
                f.pred(name)
                    .ok_or_else(|| fail(EXIT_DATA, format!("unknown predicate `{name}`")))
            };
            let (p, q) = (get(phi)?, get(psi)?);
            if p.indices != q.indices {
                return Err(fail(
                    EXIT_DATA,
                    format!("`{phi}` and `{psi}` live on different index sets"),
                ));
            }
            let d = &f.dco;
            let mut r = Report::new();
            let what = format!("{} ≤ {}", show_pred(d, &p.atoms), show_pred(d, &q.atoms));
            match fiber_leq(d, &p.atoms, &q.atoms) {
                Search::Found(m) => r.push("leq", Status::Pass, format!("{what} by {}", d.name(m))),
                Search::Refuted => {
                    r.push("leq", Status::Fail, format!("no member realizes {what}"))
                }
                Search::Exhausted => r.push("leq", Status::Unknown, what),
            }
            Produced::Report(r)
        }
        Command::PasmLimits { file: Some(file) } => {
            let f = load_dco(file)?;
            Produced::Report(check_limits(&PAsm::new(&f.dco, fuel), bound))
        }
        Command::PasmLimits { file: None } => {
            Produced::Report(sample::sk_limits(cli.seed, 50, fuel))
        }
        Command::PasmAudit { file } => {
            let f = load_dco(file)?;
            let c = PAsm::new(&f.dco, fuel);
            let mut r = Report::new();
            declared_morphisms(&f, &c, &mut r);
            r.extend_prefixed("category", check_category_laws(&c, bound));
            r.extend_prefixed("factorization", check_factorization(&c, bound));
            if pointedness_equivalences_apply(&f.dco) {
                let p = pointedness_equivalences(&c, bound);
                let agree = p.records.windows(2).all(|w| w[0].status == w[1].status);
                r.push("pointedness/agree", Status::from_bool(agree), "");
            }
            r.extend_prefixed("characterization", audit_characterization(&c, bound));
            Produced::Report(r)
        }
        Command::ExlexAudit { file } => {
            let f = load_dco(file)?;
            let mut r = audit_topos_conditions(&f.dco, fuel, bound);
            if let Some(base) = lex_base(&f.dco) {
                let c = PAsm::new(&base, fuel);
                for o in &f.objects {
                    let x = Obj::new(o.atoms.clone());
                    r.extend_prefixed(
                        &format!("discrete/{}", o.name),
                        discrete_lift_check(&c, &x, bound),
                    );
                }
            }
            Produced::Report(r)
        }
        Command::RtHom { src, tgt } => {
            let d = induced(cli)?;
            let rt = Rt::new(&d, fuel);
            let x = rt_object(&rt, src, fuel)?;
            let y = rt_object(&rt, tgt, fuel)?;
            let h = rt.hom(&x, &y);
            let mut r = Report::new();
            let maps: Vec<String> = h
                .classes
                .iter()
                .map(|m| format!("{:?}", m.base.map))
                .collect();
            let st = if h.unknown == 0 {
                Status::Pass
            } else {
                Status::Unknown
            };
            r.push(
                "hom",
                st,
                format!(
                    "{} classes {}, {} candidates undecided",
                    h.classes.len(),
                    maps.join(" "),
                    h.unknown
                ),
            );
            Produced::Report(r)
        }
    })
}

fn induced(cli: &Cli) -> Result<InducedDco<SkPca>, Outcome> {
    let budget = SearchBudget {
        depth: cli.depth,
        fuel: cli.fuel.min(SearchBudget::default().fuel),
    };
    InducedDco::with_budget(SkPca, cli.fuel, budget).map_err(|e| fail(EXIT_DATA, e.to_string()))
}

type RtObj = realizability_core::exlex::ExObj<Obj<Term>, realizability_core::pasm::Mor<Term, Term>>;

fn rt_object(rt: &Rt<'_, SkPca>, text: &str, fuel: Fuel) -> Result<RtObj, Outcome> {
    let (terms, classes) = match text.split_once('|') {
        Some((t, c)) => (t, Some(c)),
        None => (text, None),
    };
    let pred = terms
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| element(&SkPca, s, fuel).map_err(|e| fail(EXIT_DATA, format!("`{s}`: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let x = rt.object(pred);
    let built = match classes {
        None => rt.embed(&x),
        Some(c) => {
            let labels = c
                .split_whitespace()
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|e| fail(EXIT_DATA, format!("class label `{s}`: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if labels.len() != x.len() {
                return Err(fail(
                    EXIT_DATA,
                    format!("{} class labels for {} points", labels.len(), x.len()),
                ));
            }
            rt.quotient(&x, &labels)
        }
    };
    built.map_err(|e| fail(EXIT_DATA, format!("`{text}`: {e}")))
}

fn dco_check(f: &DcoFile, fuel: Fuel) -> Report {
    let d = &f.dco;
    let mut r = Report::new();
    r.extend_prefixed("axioms", check_dco_axioms(d));
    r.extend_prefixed("saturation", check_saturation(d));
    r.extend_prefixed("roundtrip", check_roundtrip(d));
    if d.cartesian().is_some() {
        r.extend_prefixed("cartesian", check_cartesian_shallow(d));
    }
    if d.completeness().is_some() {
        r.extend_prefixed("completeness", check_functional_completeness(d));
    }
    let c = PAsm::new(d, fuel);
    declared_morphisms(f, &c, &mut r);
    r
}

fn declared_morphisms(f: &DcoFile, c: &PAsm<'_, FiniteDco>, r: &mut Report) {
    let d = &f.dco;
    for m in &f.morphisms {
        let (src, tgt) = f.morphism_parts(m);
        let name = format!("morphism/{}", m.name);
        match m.realizer {
            Some(k) => {
                let st = c.check_realizer(&f.realized(m, k));
                r.push(name, st, format!("realizer {}", d.name(k)));
            }
            None => match c.track(&src, &tgt, &m.map) {
                Search::Found(k) => r.push(
                    name,
                    Status::Pass,
                    format!("realizer {}", d.show_member(&k)),
                ),
                Search::Refuted => r.push(name, Status::Fail, "no realizer"),
                Search::Exhausted => r.push(name, Status::Unknown, "search exhausted"),
            },
        }
    }
}
