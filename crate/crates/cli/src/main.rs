use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use orw_core::driver::{
    execute, parse_element, run_suite, AlgebraSel, Check, ModuleSel, SuiteConfig, SuiteReport,
};
use orw_core::pbw::{element_equal, normal_form, OmegaKind};
use orw_core::superalg::HalfInt;
use orw_core::weightmod::omega_min_m;
use orw_core::Error;

#[derive(Parser)]
#[command(name = "orw", version, about = "Exact checks for Lie superalgebras, weight modules and Omega-operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Algebra-level checks
    Algebra {
        #[command(subcommand)]
        action: AlgebraCmd,
    },
    /// Module axiom checks
    Module {
        #[command(subcommand)]
        action: ModuleCmd,
    },
    /// Omega-operator scans
    Omega {
        #[command(subcommand)]
        action: OmegaCmd,
    },
    /// Enveloping-algebra computations
    Pbw {
        #[command(subcommand)]
        action: PbwCmd,
    },
    /// Exterior-algebra ideal certificates
    Grassmann {
        #[command(subcommand)]
        action: GrassmannCmd,
    },
    /// Run a named suite and emit a JSON report
    Suite(SuiteArgs),
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    /// vir, witt, orw, q, bms3, sw22, ns
    #[arg(long, default_value = "orw")]
    algebra: String,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    epsilon: Option<String>,
}

impl AlgebraArgs {
    fn selection(&self) -> AlgebraSel {
        let mut sel = AlgebraSel::named(&self.algebra);
        if self.algebra == "orw" {
            sel.lambda = Some(self.lambda.clone().unwrap_or_else(|| "-1/2".into()));
            sel.epsilon = Some(self.epsilon.clone().unwrap_or_else(|| "1/2".into()));
        } else {
            sel.lambda = self.lambda.clone();
            sel.epsilon = self.epsilon.clone();
        }
        sel
    }
}

#[derive(Args)]
struct ModuleArgs {
    /// Aab, Flambda, Aabc, Sab, PiSab, Aab_trivial_ext, HalfS
    #[arg(long)]
    module: String,
    /// Algebra to act on; the module's default when omitted
    #[arg(long)]
    over: Option<String>,
    #[arg(long)]
    over_lambda: Option<String>,
    #[arg(long)]
    over_epsilon: Option<String>,
    /// Rational or `sym`
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    c: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
}

impl ModuleArgs {
    fn selection(&self) -> ModuleSel {
        let over = match &self.over {
            Some(name) => AlgebraArgs {
                algebra: name.clone(),
                lambda: self.over_lambda.clone(),
                epsilon: self.over_epsilon.clone(),
            }
            .selection(),
            None => ModuleSel::default_algebra(&self.module),
        };
        let mut sel = ModuleSel::new(&self.module, over);
        for (k, v) in [("a", &self.a), ("b", &self.b), ("c", &self.c), ("lambda", &self.lambda)] {
            if let Some(v) = v {
                sel = sel.with(k, v);
            }
        }
        sel
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Print the JSON report instead of one line per check
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Antisymmetry and super-Jacobi over a degree window
    Check {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Degree window `lo..hi`
        #[arg(long, default_value = "-4..4", allow_hyphen_values = true)]
        window: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// Pin the sign convention, then check the module axioms
    Check {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value = "-4..4", allow_hyphen_values = true)]
        window: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum OmegaCmd {
    /// Smallest m with Omega acting as zero
    Scan {
        /// LL, GL or GG
        #[arg(long)]
        kind: OmegaKind,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum PbwCmd {
    /// Compare two elements after normal ordering
    Eq {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Print the normal form of an element
    Normal {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
}

#[derive(Subcommand)]
enum GrassmannCmd {
    /// Ideal membership with certificates for one (m, k, s)
    Lemma33 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        s: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct SuiteArgs {
    /// jacobi, modules, lemma21, lemma31, lemma32, lemma33, thm34, section5, all
    name: String,
    /// TOML or JSON configuration; its values override the flags below
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    max_m: Option<usize>,
    /// λ values for the orw sweep (repeatable)
    #[arg(long = "lambda", allow_hyphen_values = true)]
    lambdas: Vec<String>,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn doubled_window(text: &str) -> Result<[i64; 2], Error> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| Error::Config(format!("expected `lo..hi`, got `{text}`")))?;
    let lo = HalfInt::parse(lo.trim())?;
    let hi = HalfInt::parse(hi.trim())?;
    Ok([lo.doubled, hi.doubled])
}

fn emit(report: &SuiteReport, output: &OutputArgs) -> Result<ExitCode, Error> {
    if let Some(path) = &output.out {
        std::fs::write(path, report.to_json()).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    }
    if output.json {
        print!("{}", report.to_json());
    } else {
        for c in &report.checks {
            println!("{}: {} | {}", status_word(c.passed(), &c.status), c.check, c.payload);
        }
    }
    Ok(ExitCode::from(report.exit_code() as u8))
}

fn status_word(passed: bool, status: &orw_core::driver::Status) -> String {
    if passed {
        "PASS".into()
    } else {
        serde_json::to_value(status)
            .ok()
            .and_then(|v| v.as_str().map(str::to_uppercase))
            .unwrap_or_else(|| "FAIL".into())
    }
}

fn single(suite: &str, checks: &[Check], cfg: &SuiteConfig) -> SuiteReport {
    SuiteReport::new(suite, checks.iter().map(|c| execute(suite, c, cfg)).collect())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Algebra {
            action: AlgebraCmd::Check { algebra, window, output },
        } => {
            let cfg = SuiteConfig {
                window: Some(doubled_window(&window)?),
                algebras: Some(vec![algebra.selection()]),
                ..SuiteConfig::default()
            };
            cfg.validate()?;
            let sel = algebra.selection();
            emit(&single("algebra", &[Check::Antisymmetry(sel.clone()), Check::Jacobi(sel)], &cfg), &output)
        }
        Command::Module {
            action: ModuleCmd::Check { module, window, output },
        } => {
            let sel = module.selection();
            let cfg = SuiteConfig {
                window: Some(doubled_window(&window)?),
                modules: Some(vec![sel.clone()]),
                ..SuiteConfig::default()
            };
            cfg.validate()?;
            emit(
                &single("module", &[Check::ModuleAxioms(sel.clone()), Check::CentralActsZero(sel)], &cfg),
                &output,
            )
        }
        Command::Omega {
            action: OmegaCmd::Scan { kind, module, max_m, json },
        } => {
            let spec = module.selection().resolve()?;
            let scan = omega_min_m(&spec, kind, max_m, SuiteConfig::default().grid())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&scan).expect("scan serializes"));
            } else {
                for s in &scan.steps {
                    println!(
                        "m={} grid={} symbolic={} residual={}",
                        s.m,
                        s.grid_passed,
                        s.symbolic_passed.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
                        s.residual.as_deref().unwrap_or("0")
                    );
                }
                match scan.min_m {
                    Some(m) => println!("min_m = {m}"),
                    None => println!("min_m > {max_m}"),
                }
            }
            Ok(if scan.min_m.is_some() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Pbw {
            action: PbwCmd::Eq { algebra, lhs, rhs },
        } => {
            let alg = algebra.selection().resolve()?;
            let l = parse_element(&alg, &lhs)?;
            let r = parse_element(&alg, &rhs)?;
            let equal = element_equal(&alg, &l, &r)?;
            println!("lhs = {}", normal_form(&alg, &l)?.format(&alg));
            println!("rhs = {}", normal_form(&alg, &r)?.format(&alg));
            println!("{}", if equal { "equal" } else { "not equal" });
            Ok(if equal { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Pbw {
            action: PbwCmd::Normal { algebra, element },
        } => {
            let alg = algebra.selection().resolve()?;
            let e = parse_element(&alg, &element)?;
            println!("{}", normal_form(&alg, &e)?.format(&alg));
            Ok(ExitCode::SUCCESS)
        }
        Command::Grassmann {
            action: GrassmannCmd::Lemma33 { m, k, s, output },
        } => {
            let s = HalfInt::parse(&s)?;
            if s.is_integral() {
                return Err(Error::Grassmann(format!("s = {s} must lie in Z+1/2")));
            }
            let check = Check::Lemma33 { m, k, s };
            emit(&single("grassmann", &[check], &SuiteConfig::default()), &output)
        }
        Command::Suite(args) => {
            let mut cfg = SuiteConfig {
                max_m: args.max_m,
                lambdas: (!args.lambdas.is_empty()).then(|| args.lambdas.clone()),
                ..SuiteConfig::default()
            };
            if let Some(path) = &args.config {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                let file = SuiteConfig::from_str_auto(&text)?;
                cfg = merge(cfg, file);
            }
            let report = run_suite(&args.name, &cfg)?;
            let out = args.out.clone().or_else(|| cfg.output.clone().map(PathBuf::from));
            match out {
                Some(path) => {
                    std::fs::write(&path, report.to_json())
                        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                    let s = &report.summary;
                    eprintln!(
                        "{}: {} checks, {} pass, {} fail, {} skipped",
                        report.suite, s.total, s.pass, s.fail, s.skipped
                    );
                }
                None => print!("{}", report.to_json()),
            }
            for c in report.failures() {
                eprintln!("not passed: {} / {}", c.suite, c.check);
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
    }
}

/// Fields set in the file win over flags.
fn merge(flags: SuiteConfig, file: SuiteConfig) -> SuiteConfig {
    SuiteConfig {
        algebras: file.algebras.or(flags.algebras),
        custom: file.custom.or(flags.custom),
        modules: file.modules.or(flags.modules),
        window: file.window.or(flags.window),
        max_m: file.max_m.or(flags.max_m),
        grid: file.grid.or(flags.grid),
        scan_window: file.scan_window.or(flags.scan_window),
        lambdas: file.lambdas.or(flags.lambdas),
        output: file.output.or(flags.output),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
