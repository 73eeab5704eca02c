//! Command-line driver: verify stored objects, construct derived ones,
//! and run the named theorem checks, against a definition file or one
//! of the built-in demos.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 when
//! the command could not run (usage, unknown names, malformed input).

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{smash, twist_algebra, verify_yd_algebra, YDAlgebra};
use crate::demo::{build_demo, describe_corpus, DEMO_NAMES};
use crate::endo::{azumaya_ranks, brauer_trivial_forward, coco_check, end_algebra, end_op_algebra, p4_check};
use crate::error::{Error, Result};
use crate::hopf::{verify_hopf, HopfAlgebra};
use crate::io::{self, pick, Corpus, DefinitionFile, FieldDef, ObjectDef};
use crate::monoidal::{dual, tensor, DualFlavor, TensorKind};
use crate::report::{emit_report, Report, ReportCheck, ReportFormat};
use crate::yd::{check_pair_in_involution, check_yd, YDModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> ReportFormat {
        match f {
            FormatArg::Text => ReportFormat::Text,
            FormatArg::Json => ReportFormat::Json,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "ydbrauer",
    version,
    about = "Exact checks for Yetter-Drinfeld modules, their endomorphism algebras and H-Azumaya maps"
)]
pub struct Cli {
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    #[command(subcommand)]
    pub command: Command,
}

/// Where the named objects come from.
#[derive(Args, Debug, Clone)]
pub struct SourceArgs {
    /// Definition file with named objects
    #[arg(long, value_name = "PATH", conflicts_with = "demo")]
    pub file: Option<PathBuf>,
    /// Built-in corpus: c2 | c3 | sweedler | taft3
    #[arg(long, value_name = "NAME")]
    pub demo: Option<String>,
    /// Field characteristic override for --demo
    #[arg(long, value_name = "PRIME", requires = "demo")]
    pub p: Option<u64>,
}

impl SourceArgs {
    fn corpus(&self) -> Result<Corpus> {
        match (&self.file, &self.demo) {
            (Some(path), None) => io::resolve(&io::read_definition(path)?),
            (None, Some(demo)) => build_demo(demo, self.p),
            _ => Err(Error::BadParameter("pass --demo NAME or --file PATH".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify the axioms of a stored object
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Build a derived object and write it to a definition file
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Run a named theorem check
    #[command(subcommand)]
    Check(CheckCmd),
    /// Built-in demo corpora
    #[command(subcommand)]
    Demo(DemoCmd),
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// All Hopf algebra axioms
    Hopf {
        #[command(flatten)]
        src: SourceArgs,
        /// Hopf object name (default: the only one)
        #[arg(long)]
        object: Option<String>,
    },
    /// Module, comodule and compatibility laws of a module
    Yd {
        #[command(flatten)]
        src: SourceArgs,
        /// Module name (default: the only one)
        #[arg(long)]
        module: Option<String>,
    },
    /// The Yetter-Drinfeld algebra laws
    Algebra {
        #[command(flatten)]
        src: SourceArgs,
        /// Algebra name (default: the only one)
        #[arg(long)]
        algebra: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EndVariantArg {
    /// Composition as multiplication
    Standard,
    /// Reversed composition
    Opposite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    One,
    Two,
    Hat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    #[value(name = "diamond_left", alias = "diamond-left")]
    DiamondLeft,
    #[value(name = "diamond_right", alias = "diamond-right")]
    DiamondRight,
    #[value(name = "star_left", alias = "star-left")]
    StarLeft,
    #[value(name = "star_right", alias = "star-right")]
    StarRight,
}

#[derive(Subcommand, Debug)]
pub enum ConstructCmd {
    /// Endomorphism algebra of a module
    End {
        #[command(flatten)]
        src: SourceArgs,
        /// Module name (default: the only one)
        #[arg(long)]
        module: Option<String>,
        #[arg(long, value_enum, default_value_t = EndVariantArg::Standard)]
        variant: EndVariantArg,
        /// Output definition file
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Tensor product of two modules
    Tensor {
        #[command(flatten)]
        src: SourceArgs,
        /// Left factor
        #[arg(long)]
        module: String,
        /// Right factor
        #[arg(long)]
        with: String,
        #[arg(long, value_enum, default_value_t = KindArg::Hat)]
        kind: KindArg,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Dual of a module
    Dual {
        #[command(flatten)]
        src: SourceArgs,
        /// Module name (default: the only one)
        #[arg(long)]
        module: Option<String>,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Smash product of two algebras
    Smash {
        #[command(flatten)]
        src: SourceArgs,
        /// Left factor
        #[arg(long)]
        algebra: String,
        /// Right factor
        #[arg(long)]
        with: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Twist of an algebra by an automorphism
    Twist {
        #[command(flatten)]
        src: SourceArgs,
        /// Algebra name (default: the only one)
        #[arg(long)]
        algebra: Option<String>,
        /// Automorphism name ("id" is built in)
        #[arg(long)]
        mu: String,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    /// Ranks of the canonical maps F and G for End(module) or a named algebra
    Azumaya {
        #[command(flatten)]
        src: SourceArgs,
        /// Check End of this module
        #[arg(long, conflicts_with = "algebra")]
        module: Option<String>,
        /// Check this algebra directly
        #[arg(long)]
        algebra: Option<String>,
        /// Allow carriers beyond dimension 4 (End beyond dimension 16)
        #[arg(long)]
        allow_large: bool,
    },
    /// End of a conjugate twist equals the twist of End
    P4 {
        #[command(flatten)]
        src: SourceArgs,
        /// Module name (default: the only one)
        #[arg(long)]
        module: Option<String>,
        /// First automorphism of the twisting pair
        #[arg(long)]
        alpha: String,
        /// Second automorphism of the twisting pair
        #[arg(long)]
        beta: String,
    },
    /// Shifting a module leaves both End structures unchanged
    Coco {
        #[command(flatten)]
        src: SourceArgs,
        /// Module name (default: the only one)
        #[arg(long)]
        module: Option<String>,
        /// Automorphism to shift by
        #[arg(long)]
        beta: String,
    },
    /// Character/grouplike pair in involution for (alpha, beta)
    PairInvolution {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long)]
        character: String,
        #[arg(long)]
        grouplike: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// The forward Brauer triviality chain through a one-dimensional module
    BrauerTrivial {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long)]
        character: String,
        #[arg(long)]
        grouplike: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        /// Auxiliary module over the identity pair (default: the only one)
        #[arg(long)]
        module: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum DemoCmd {
    /// List the built-in corpora and their named objects
    List,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u128) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed().as_millis())
}

fn spread(checks: &mut [ReportCheck], millis: u128) {
    let n = checks.len().max(1) as u128;
    for c in checks.iter_mut() {
        c.millis = millis / n;
    }
}

fn hopf_name_of(corpus: &Corpus, h: &Arc<HopfAlgebra>) -> String {
    corpus
        .hopfs
        .iter()
        .find(|(_, v)| Arc::ptr_eq(v, h) || ***v == **h)
        .map(|(k, _)| k.clone())
        .unwrap_or_else(|| "hopf".to_string())
}

/// Definition objects for one module, emitting its pair as named
/// automorphisms when they are not the identity.
fn module_with_pair_defs(out_name: &str, hopf_name: &str, m: &YDModule) -> Vec<ObjectDef> {
    let mut objs = Vec::new();
    let alpha = if m.pair().alpha().is_identity() {
        "id".to_string()
    } else {
        let n = format!("{out_name}_alpha");
        objs.push(io::automorphism_to_def(&n, hopf_name, m.pair().alpha()));
        n
    };
    let beta = if m.pair().beta().is_identity() {
        "id".to_string()
    } else {
        let n = format!("{out_name}_beta");
        objs.push(io::automorphism_to_def(&n, hopf_name, m.pair().beta()));
        n
    };
    objs.push(io::module_to_def(out_name, hopf_name, &alpha, &beta, m));
    objs
}

fn write_module_artifact(
    corpus: &Corpus,
    out: &Path,
    name: &str,
    m: &YDModule,
) -> Result<ReportCheck> {
    let hopf_name = hopf_name_of(corpus, m.hopf());
    let mut objects = vec![io::hopf_to_def(&hopf_name, m.hopf())];
    objects.extend(module_with_pair_defs(name, &hopf_name, m));
    let def = DefinitionFile { field: FieldDef::from_spec(m.hopf().field()), objects };
    io::write_definition(out, &def)?;
    Ok(ReportCheck::info(
        "construct",
        true,
        format!("yd_module {name} (dim {}) written to {}", m.dim(), out.display()),
    ))
}

fn write_algebra_artifact(
    corpus: &Corpus,
    out: &Path,
    name: &str,
    a: &YDAlgebra,
) -> Result<ReportCheck> {
    let hopf_name = hopf_name_of(corpus, a.hopf());
    let carrier = format!("{name}_carrier");
    let mut objects = vec![io::hopf_to_def(&hopf_name, a.hopf())];
    objects.extend(module_with_pair_defs(&carrier, &hopf_name, a.module()));
    objects.push(io::algebra_to_def(name, &carrier, a));
    let def = DefinitionFile { field: FieldDef::from_spec(a.hopf().field()), objects };
    io::write_definition(out, &def)?;
    Ok(ReportCheck::info(
        "construct",
        true,
        format!("yd_algebra {name} (dim {}) written to {}", a.dim(), out.display()),
    ))
}

fn execute(command: &Command) -> Result<Vec<ReportCheck>> {
    match command {
        Command::Verify(v) => verify_cmd(v),
        Command::Construct(c) => construct_cmd(c),
        Command::Check(c) => check_cmd(c),
        Command::Demo(DemoCmd::List) => {
            let mut checks = Vec::new();
            for name in DEMO_NAMES {
                let (corpus, ms) = timed(|| build_demo(name, None));
                checks.push(ReportCheck::info(name, true, describe_corpus(&corpus?)).timed(ms));
            }
            Ok(checks)
        }
    }
}

fn verify_cmd(cmd: &VerifyCmd) -> Result<Vec<ReportCheck>> {
    match cmd {
        VerifyCmd::Hopf { src, object } => {
            let corpus = src.corpus()?;
            let (_, h) = pick(&corpus.hopfs, object.as_deref(), "hopf")?;
            let (report, ms) = timed(|| verify_hopf(h));
            let mut checks = ReportCheck::from_axiom_report(&report);
            spread(&mut checks, ms);
            Ok(checks)
        }
        VerifyCmd::Yd { src, module } => {
            let corpus = src.corpus()?;
            let (_, m) = pick(&corpus.modules, module.as_deref(), "yd_module")?;
            let start = Instant::now();
            let mut checks = ReportCheck::from_axiom_report(&m.module_axioms());
            checks.extend(ReportCheck::from_axiom_report(&m.comodule_axioms()));
            if checks.iter().all(|c| c.ok) {
                let yd = check_yd(m)?;
                for axiom in [&yd.ab, &yd.abn] {
                    let mut check = ReportCheck::from_axiom(axiom);
                    // compatibility witnesses index H then the module
                    if let Some(w) = &check.witness {
                        if !check.ok && w.len() == 2 {
                            check.verdict =
                                format!("fail at ({}, e{})", m.hopf().label(w[0]), w[1]);
                        }
                    }
                    checks.push(check);
                }
            }
            spread(&mut checks, start.elapsed().as_millis());
            Ok(checks)
        }
        VerifyCmd::Algebra { src, algebra } => {
            let corpus = src.corpus()?;
            let (_, a) = pick(&corpus.algebras, algebra.as_deref(), "yd_algebra")?;
            let (outcome, ms) = timed(|| verify_yd_algebra(a));
            let mut checks = match outcome {
                Ok(report) => ReportCheck::from_axiom_report(&report),
                Err(Error::Axiom(msg)) => {
                    vec![ReportCheck::info("module_axioms", false, msg)]
                }
                Err(e) => return Err(e),
            };
            spread(&mut checks, ms);
            Ok(checks)
        }
    }
}

fn construct_cmd(cmd: &ConstructCmd) -> Result<Vec<ReportCheck>> {
    match cmd {
        ConstructCmd::End { src, module, variant, out } => {
            let corpus = src.corpus()?;
            let (mname, m) = pick(&corpus.modules, module.as_deref(), "yd_module")?;
            let (alg, ms) = timed(|| match variant {
                EndVariantArg::Standard => end_algebra(m),
                EndVariantArg::Opposite => end_op_algebra(m),
            });
            let suffix = match variant {
                EndVariantArg::Standard => "end",
                EndVariantArg::Opposite => "end_op",
            };
            let name = format!("{suffix}_{mname}");
            Ok(vec![write_algebra_artifact(&corpus, out, &name, &alg?)?.timed(ms)])
        }
        ConstructCmd::Tensor { src, module, with, kind, out } => {
            let corpus = src.corpus()?;
            let (lname, left) = pick(&corpus.modules, Some(module), "yd_module")?;
            let (rname, right) = pick(&corpus.modules, Some(with), "yd_module")?;
            let kind = match kind {
                KindArg::One => TensorKind::One,
                KindArg::Two => TensorKind::Two,
                KindArg::Hat => TensorKind::Hat,
            };
            let (result, ms) = timed(|| tensor(left, right, kind));
            let name = format!("{lname}_tensor_{rname}");
            Ok(vec![write_module_artifact(&corpus, out, &name, &result?)?.timed(ms)])
        }
        ConstructCmd::Dual { src, module, flavor, out } => {
            let corpus = src.corpus()?;
            let (mname, m) = pick(&corpus.modules, module.as_deref(), "yd_module")?;
            let flavor = match flavor {
                FlavorArg::DiamondLeft => DualFlavor::DiamondLeft,
                FlavorArg::DiamondRight => DualFlavor::DiamondRight,
                FlavorArg::StarLeft => DualFlavor::StarLeft,
                FlavorArg::StarRight => DualFlavor::StarRight,
            };
            let (result, ms) = timed(|| dual(m, flavor));
            let name = format!("{mname}_dual");
            Ok(vec![write_module_artifact(&corpus, out, &name, &result?)?.timed(ms)])
        }
        ConstructCmd::Smash { src, algebra, with, out } => {
            let corpus = src.corpus()?;
            let (lname, left) = pick(&corpus.algebras, Some(algebra), "yd_algebra")?;
            let (rname, right) = pick(&corpus.algebras, Some(with), "yd_algebra")?;
            let (result, ms) = timed(|| smash(left, right));
            let name = format!("{lname}_smash_{rname}");
            Ok(vec![write_algebra_artifact(&corpus, out, &name, &result?)?.timed(ms)])
        }
        ConstructCmd::Twist { src, algebra, mu, out } => {
            let corpus = src.corpus()?;
            let (aname, a) = pick(&corpus.algebras, algebra.as_deref(), "yd_algebra")?;
            let mu = corpus.automorphism(a.hopf(), mu)?;
            let (result, ms) = timed(|| twist_algebra(a, &mu));
            let name = format!("{aname}_twist");
            Ok(vec![write_algebra_artifact(&corpus, out, &name, &result?)?.timed(ms)])
        }
    }
}

fn check_cmd(cmd: &CheckCmd) -> Result<Vec<ReportCheck>> {
    match cmd {
        CheckCmd::Azumaya { src, module, algebra, allow_large } => {
            let corpus = src.corpus()?;
            let target = match (module, algebra) {
                (None, None) => {
                    return Err(Error::BadParameter(
                        "pass --module NAME (checks End of it) or --algebra NAME".into(),
                    ))
                }
                (Some(m), None) => {
                    let (_, m) = pick(&corpus.modules, Some(m), "yd_module")?;
                    if m.dim() > 4 && !allow_large {
                        return Err(Error::BadParameter(format!(
                            "module dimension {} makes End {}-dimensional; pass --allow-large",
                            m.dim(),
                            m.dim() * m.dim()
                        )));
                    }
                    end_algebra(m)?
                }
                (None, Some(a)) => {
                    let (_, a) = pick(&corpus.algebras, Some(a), "yd_algebra")?;
                    if a.dim() > 16 && !allow_large {
                        return Err(Error::BadParameter(format!(
                            "algebra dimension {} exceeds 16; pass --allow-large",
                            a.dim()
                        )));
                    }
                    a.clone()
                }
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            };
            let (verdict, ms) = timed(|| azumaya_ranks(&target));
            let verdict = verdict?;
            let full = verdict.dim * verdict.dim;
            let line = format!(
                "F rank {}/{}, G rank {}/{}, H-Azumaya: {}",
                verdict.f_rank,
                full,
                verdict.g_rank,
                full,
                if verdict.is_azumaya() { "yes" } else { "no" }
            );
            Ok(vec![ReportCheck::info("azumaya", verdict.is_azumaya(), line).timed(ms)])
        }
        CheckCmd::P4 { src, module, alpha, beta } => {
            let corpus = src.corpus()?;
            let (_, m) = pick(&corpus.modules, module.as_deref(), "yd_module")?;
            let by = corpus.pair(m.hopf(), alpha, beta)?;
            let (ok, ms) = timed(|| p4_check(m, &by));
            Ok(vec![ReportCheck::flag("end_of_conjugate_twist", ok?).timed(ms)])
        }
        CheckCmd::Coco { src, module, beta } => {
            let corpus = src.corpus()?;
            let (_, m) = pick(&corpus.modules, module.as_deref(), "yd_module")?;
            let by = corpus.automorphism(m.hopf(), beta)?;
            let (ok, ms) = timed(|| coco_check(m, &by));
            Ok(vec![ReportCheck::flag("end_of_shift", ok?).timed(ms)])
        }
        CheckCmd::PairInvolution { src, character, grouplike, alpha, beta } => {
            let corpus = src.corpus()?;
            let (_, f) = pick(&corpus.characters, Some(character), "character")?;
            let (_, g) = pick(&corpus.grouplikes, Some(grouplike), "grouplike")?;
            let pair = corpus.pair(f.parent(), alpha, beta)?;
            let (check, ms) = timed(|| check_pair_in_involution(&pair, f, g));
            Ok(vec![ReportCheck::from_axiom(&check?).timed(ms)])
        }
        CheckCmd::BrauerTrivial { src, character, grouplike, alpha, beta, module } => {
            let corpus = src.corpus()?;
            let (_, f) = pick(&corpus.characters, Some(character), "character")?;
            let (_, g) = pick(&corpus.grouplikes, Some(grouplike), "grouplike")?;
            let (_, m) = pick(&corpus.modules, module.as_deref(), "yd_module")?;
            let pair = corpus.pair(f.parent(), alpha, beta)?;
            let (outcome, ms) = timed(|| brauer_trivial_forward(f, g, &pair, m));
            let check = match outcome {
                Ok(ok) => ReportCheck::flag("brauer_trivial", ok),
                Err(Error::Involution(msg)) => ReportCheck::info("pair_in_involution", false, msg),
                Err(e) => return Err(e),
            };
            Ok(vec![check.timed(ms)])
        }
    }
}

/// Parse and run one invocation. The report's command echo is the argv
/// tail, so identical invocations yield identical reports.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> Result<(Report, ReportFormat)> {
    let cli = Cli::try_parse_from(argv.iter().map(AsRef::as_ref))
        .map_err(|e| Error::BadParameter(e.to_string()))?;
    let echo = argv.iter().skip(1).map(AsRef::as_ref).collect::<Vec<_>>().join(" ");
    let checks = execute(&cli.command)?;
    Ok((Report::new(echo, checks), cli.format.into()))
}

/// Full process entry: parse std::env args, print the report, return
/// the exit code.
pub fn main_entry() -> i32 {
    crate::init_thread_pool();
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let is_usage = e.use_stderr();
            let _ = e.print();
            return if is_usage { 2 } else { 0 };
        }
    };
    let echo = argv.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    match execute(&cli.command) {
        Ok(checks) => {
            let report = Report::new(echo, checks);
            print!("{}", emit_report(&report, cli.format.into()));
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (Report, ReportFormat) {
        run_command(args).unwrap()
    }

    #[test]
    fn verify_hopf_demo_passes() {
        let (report, fmt) = run(&["ydbrauer", "verify", "hopf", "--demo", "sweedler", "--p", "5"]);
        assert!(report.passed());
        assert_eq!(report.exit_code(), 0);
        assert_eq!(fmt, ReportFormat::Text);
        assert!(report.checks.len() >= 9);
        assert_eq!(report.command, "verify hopf --demo sweedler --p 5");
    }

    #[test]
    fn check_azumaya_emits_the_rank_line() {
        let (report, _) =
            run(&["ydbrauer", "check", "azumaya", "--demo", "sweedler", "--module", "h_id"]);
        assert!(report.passed());
        assert_eq!(
            report.checks[0].verdict,
            "F rank 256/256, G rank 256/256, H-Azumaya: yes"
        );

        let (report, _) =
            run(&["ydbrauer", "check", "azumaya", "--demo", "sweedler", "--algebra", "kxk"]);
        assert!(!report.passed());
        assert_eq!(report.exit_code(), 1);
        assert!(report.checks[0].verdict.ends_with("H-Azumaya: no"));
    }

    #[test]
    fn usage_problems_are_errors_not_failed_reports() {
        assert!(run_command(&["ydbrauer", "verify", "hopf"]).is_err());
        assert!(run_command(&["ydbrauer", "verify", "hopf", "--demo", "nope"]).is_err());
        assert!(run_command(&[
            "ydbrauer", "check", "azumaya", "--demo", "taft3", "--module", "h_id"
        ])
        .is_err());
        assert!(run_command(&["ydbrauer", "check", "azumaya", "--demo", "sweedler"]).is_err());
    }

    #[test]
    fn involution_failure_is_a_failing_check() {
        let (report, _) = run(&[
            "ydbrauer", "check", "brauer-trivial", "--demo", "sweedler", "--character", "eps",
            "--grouplike", "one", "--alpha", "s2", "--beta", "id", "--module", "k_triv",
        ]);
        assert!(!report.passed());
        assert_eq!(report.checks[0].name, "pair_in_involution");

        let (report, _) = run(&[
            "ydbrauer", "check", "brauer-trivial", "--demo", "sweedler", "--character", "eps",
            "--grouplike", "g", "--alpha", "s2", "--beta", "id", "--module", "k_triv",
        ]);
        assert!(report.passed());
    }

    #[test]
    fn checks_and_demo_list_run_green() {
        for args in [
            vec!["ydbrauer", "check", "p4", "--demo", "sweedler", "--module", "h_id", "--alpha", "phi2", "--beta", "id"],
            vec!["ydbrauer", "check", "coco", "--demo", "sweedler", "--module", "h_phi2_phi3", "--beta", "phi2"],
            vec![
                "ydbrauer", "check", "pair-involution", "--demo", "sweedler", "--character",
                "eps", "--grouplike", "g", "--alpha", "s2", "--beta", "id",
            ],
            vec!["ydbrauer", "demo", "list"],
        ] {
            let (report, _) = run(&args);
            assert!(report.passed(), "{args:?}: {report:?}");
        }
    }

    #[test]
    fn construct_artifacts_parse_back() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("end_k.json");
        let (report, _) = run(&[
            "ydbrauer", "construct", "end", "--demo", "sweedler", "--module", "k_triv", "-o",
            out.to_str().unwrap(),
        ]);
        assert!(report.passed());
        let def = io::read_definition(&out).unwrap();
        let corpus = io::resolve(&def).unwrap();
        assert_eq!(corpus.algebras["end_k_triv"].dim(), 1);

        let out2 = dir.path().join("dual.json");
        let (report, _) = run(&[
            "ydbrauer", "construct", "dual", "--demo", "sweedler", "--module", "h_s2_id",
            "--flavor", "star_left", "-o", out2.to_str().unwrap(),
        ]);
        assert!(report.passed());
        let corpus = io::resolve(&io::read_definition(&out2).unwrap()).unwrap();
        let d = &corpus.modules["h_s2_id_dual"];
        assert_eq!(d.dim(), 4);
        assert!(check_yd(d).unwrap().passed());
    }
}
