use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use homweyl::expr::parse_and_eval;
use homweyl::morphism::{check_morphism, DerivationSpec, DerivationVerdict, GenMorphism, LeibnizProbe};
use homweyl::series::{self, check_hom_assoc_t, check_hom_jacobi_t, TruncatedSeries};
use homweyl::verifier::{self, SuiteConfig, Verdict};
use homweyl::{AlgebraCtx, Scalar, WeylPoly};

/// Exact computations in the Weyl algebra and its hom-associative deformations.
///
/// Expressions use `.` for the associative product and `*` for the star
/// product of `A_1^k`; `^n` is an associative power and `*^n` a left-normed
/// star power.
#[derive(Parser)]
#[command(name = "homweyl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct KArg {
    /// deformation parameter, e.g. 1, -2, 1/2
    #[arg(long, allow_hyphen_values = true)]
    k: Scalar,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression to normal form.
    Eval {
        #[command(flatten)]
        k: KArg,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// print {"terms":[{"y":i,"x":j,"coeff":"a/b"}]}
        #[arg(long)]
        json: bool,
    },
    /// Star commutator [e1, e2]_*.
    Comm {
        #[command(flatten)]
        k: KArg,
        #[arg(allow_hyphen_values = true)]
        e1: String,
        #[arg(allow_hyphen_values = true)]
        e2: String,
    },
    /// Star associator (e1, e2, e3)_*.
    Assoc {
        #[command(flatten)]
        k: KArg,
        #[arg(allow_hyphen_values = true)]
        e1: String,
        #[arg(allow_hyphen_values = true)]
        e2: String,
        #[arg(allow_hyphen_values = true)]
        e3: String,
    },
    /// Probe [c y + p(x), .] for the star-Leibniz law.
    CheckDerivation {
        #[command(flatten)]
        k: KArg,
        #[arg(long, allow_hyphen_values = true)]
        c: Scalar,
        /// polynomial in x
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, default_value_t = 5)]
        bound: u32,
    },
    /// Audit x -> fx, y -> fy as a morphism A_1^k -> A_1^l.
    CheckMorphism {
        #[command(flatten)]
        k: KArg,
        #[arg(long, allow_hyphen_values = true)]
        l: Scalar,
        #[arg(long, allow_hyphen_values = true)]
        fx: String,
        #[arg(long, allow_hyphen_values = true)]
        fy: String,
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
    /// Check hom-associativity (or hom-Jacobi) of the formal deformation, per power of t.
    DeformCheck {
        #[arg(long)]
        order: usize,
        /// three expressions separated by ';', evaluated in A_1
        #[arg(long, allow_hyphen_values = true)]
        triple: String,
        #[arg(long)]
        jacobi: bool,
    },
    /// Run verification suites.
    Verify {
        /// suite to run; repeatable; all suites when absent
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        json: bool,
        /// list suite names and exit
        #[arg(long)]
        list: bool,
    },
}

enum Failure {
    /// the check ran and did not hold
    Check,
    /// bad input
    Usage(String),
}

fn eval(k: &Scalar, text: &str) -> Result<WeylPoly, Failure> {
    parse_and_eval(&AlgebraCtx::new(k.clone()), text).map_err(|e| Failure::Usage(format!("in `{text}`: {e}")))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { k, expr, json } => {
            let p = eval(&k.k, &expr)?;
            if json {
                println!("{}", serde_json::to_string(&p).expect("serializable"));
            } else {
                println!("{p}");
            }
        }
        Command::Comm { k, e1, e2 } => {
            let ctx = AlgebraCtx::new(k.k.clone());
            println!("{}", ctx.star_commutator(&eval(&k.k, &e1)?, &eval(&k.k, &e2)?));
        }
        Command::Assoc { k, e1, e2, e3 } => {
            let ctx = AlgebraCtx::new(k.k.clone());
            let (a, b, c) = (eval(&k.k, &e1)?, eval(&k.k, &e2)?, eval(&k.k, &e3)?);
            println!("{}", ctx.star_associator(&a, &b, &c));
        }
        Command::CheckDerivation { k, c, p, bound } => {
            let ctx = AlgebraCtx::new(k.k.clone());
            let p = eval(&k.k, &p)?;
            let spec = DerivationSpec::new(ctx.clone(), c, p).map_err(|e| Failure::Usage(e.to_string()))?;
            let v = LeibnizProbe::new(ctx, bound).check(|a| spec.apply(a));
            println!("{v}");
            if let DerivationVerdict::Fail(_) = v {
                return Err(Failure::Check);
            }
        }
        Command::CheckMorphism { k, l, fx, fy, bound } => {
            let (fx, fy) = (eval(&l, &fx)?, eval(&l, &fy)?);
            let v = check_morphism(&GenMorphism::new(k.k, l, fx, fy), bound);
            println!("{v}");
            if !v.passed() {
                return Err(Failure::Check);
            }
        }
        Command::DeformCheck { order, triple, jacobi } => {
            let parts: Vec<&str> = triple.split(';').collect();
            if parts.len() != 3 {
                return Err(Failure::Usage(format!("--triple needs three expressions separated by ';', got {}", parts.len())));
            }
            let zero = Scalar::zero();
            let polys = parts.iter().map(|t| eval(&zero, t.trim())).collect::<Result<Vec<_>, _>>()?;
            let s: Vec<TruncatedSeries> = polys.iter().map(|p| TruncatedSeries::constant(p.clone(), order)).collect();
            let v = if jacobi {
                check_hom_jacobi_t(&s[0], &s[1], &s[2])
            } else {
                check_hom_assoc_t(&s[0], &s[1], &s[2])
            }
            .expect("equal orders");
            let exact = series::exact_order_for(&[&polys[0], &polys[1], &polys[2]]);
            println!("identity {}", if jacobi { "hom-Jacobi" } else { "hom-associativity" });
            println!("order {order} (all terms vanish beyond t^{exact})");
            for (i, ok) in v.per_degree().into_iter().enumerate() {
                if ok {
                    println!("t^{i} PASS");
                } else {
                    println!("t^{i} FAIL lhs [{}] rhs [{}]", v.lhs.coeff(i), v.rhs.coeff(i));
                }
            }
            println!("{}", verdict(v.passed()));
            if !v.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Verify { suites, seed, bound, trials, json, list } => {
            if list {
                for name in verifier::suite_names() {
                    println!("{name}");
                }
                return Ok(());
            }
            let mut cfg = SuiteConfig::default();
            if let Some(s) = seed {
                cfg.rng_seed = s;
            }
            if let Some(b) = bound {
                cfg.degree_bound = b;
            }
            if let Some(t) = trials {
                cfg.trials = t;
            }
            let names: Vec<String> = if suites.is_empty() {
                verifier::suite_names().into_iter().map(String::from).collect()
            } else {
                suites
            };
            if let Some(bad) = names.iter().find(|n| !verifier::suite_names().contains(&n.as_str())) {
                return Err(Failure::Usage(format!("unknown suite `{bad}`; try --list")));
            }
            let verdicts: Vec<Verdict> = names.iter().map(|n| verifier::run_suite(n, &cfg).expect("known suite")).collect();
            let all = verdicts.iter().all(|v| v.passed);
            if json {
                let report = serde_json::json!({ "config": cfg, "passed": all, "suites": verdicts });
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                for v in &verdicts {
                    println!("{v}");
                }
                let failed = verdicts.iter().filter(|v| !v.passed).count();
                println!("{} of {} suites passed", verdicts.len() - failed, verdicts.len());
            }
            if !all {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
