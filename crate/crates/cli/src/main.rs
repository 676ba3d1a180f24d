use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use defset_core::boolfn::{classify_spectrum, quadratic_rank, walsh_transform};
use defset_core::code::{
    dual_distance_witness, griesmer_check, minimum_distance, pless_moment_check,
    predicted_enumerator, weight_enumerator, CodeConfig, DefiningSetCode, Prediction,
};
use defset_core::designs::{classify_design, AbelianGroup, DefiningSet};
use defset_core::family::{FamilySpec, FieldRequest};
use defset_core::verify::{run_cases, Verdict};
use defset_core::{Error, Field, FieldConfig, FuncSpec, Target};

#[derive(Parser)]
#[command(name = "defset", version, about = "Linear codes from defining sets over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the elements of a defining set.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        /// Print discrete logs instead of element indices.
        #[arg(long)]
        dlog: bool,
        /// Also classify the set as a design in the multiplicative group.
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Difference-function analysis of a defining set.
    AnalyzeDesign {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = GroupChoice::Auto)]
        group: GroupChoice,
        #[arg(long)]
        json: bool,
    },
    /// Walsh spectrum of Tr(f) over GF(2^m).
    Walsh {
        /// Polynomial as comma-separated `c@e` terms.
        #[arg(long)]
        func: String,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = FieldConfig::default().max_field_bits)]
        max_field_bits: u32,
        #[arg(long)]
        json: bool,
    },
    /// Weight enumerator and checks for the code of a defining set.
    Code {
        #[command(flatten)]
        family: FamilyArgs,
        /// Prediction to compare against, or `none`.
        #[arg(long, default_value = "none")]
        expect: String,
        #[arg(long, default_value_t = CodeConfig::default().max_work)]
        max_work: u64,
        #[arg(long)]
        json: bool,
    },
    /// Generator matrix of the code, one row per basis element.
    ExportGen {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Run the built-in reproduction cases.
    VerifyPaper {
        /// Case id, or a prefix such as `glynn2`.
        #[arg(long)]
        case: Option<String>,
        /// List the case ids and exit.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// paley | qf-image:EXPR | maschietti:CASE | hkm:H | bool:EXPR | custom:I,J,...
    #[arg(long)]
    family: String,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Value of `u` in qf-image expressions (`a^k` or an index).
    #[arg(long)]
    u: Option<String>,
    #[arg(long, default_value_t = FieldConfig::default().max_field_bits)]
    max_field_bits: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupChoice {
    /// Multiplicative when the set avoids zero, else additive.
    Auto,
    Additive,
    Multiplicative,
    /// GF(q)* / GF(p)*.
    Quotient,
}

/// Failure kinds mapped onto exit codes.
enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, Error> {
        self.family.parse()
    }

    fn request(&self) -> FieldRequest {
        FieldRequest {
            p: self.p,
            m: self.m,
            u: self.u.clone(),
            config: FieldConfig {
                max_field_bits: self.max_field_bits,
                ..FieldConfig::default()
            },
        }
    }

    fn build(&self) -> Result<(FamilySpec, DefiningSet), Error> {
        let spec = self.spec()?;
        let set = spec.build(&self.request())?;
        Ok((spec, set))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Construct {
            family,
            dlog,
            classify,
            json,
        } => construct(&family, dlog, classify, json),
        Command::AnalyzeDesign {
            family,
            group,
            json,
        } => analyze_design(&family, group, json),
        Command::Walsh {
            func,
            m,
            max_field_bits,
            json,
        } => walsh(&func, m, max_field_bits, json),
        Command::Code {
            family,
            expect,
            max_work,
            json,
        } => code(&family, &expect, max_work, json),
        Command::ExportGen { family } => export_gen(&family),
        Command::VerifyPaper { case, list, json } => verify(case.as_deref(), list, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch) => ExitCode::from(2),
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
}

fn construct(args: &FamilyArgs, dlog: bool, classify: bool, json: bool) -> CmdResult {
    let (spec, set) = args.build()?;
    let field = set.field();
    let listing = if dlog { set.dlogs()? } else { set.indices() };
    let class = if classify {
        let group = AbelianGroup::Cyclic(field.q() - 1);
        Some(classify_design(&group, &set.dlogs()?)?.to_string())
    } else {
        None
    };
    if json {
        let out = json!({
            "family": spec.to_string(),
            "p": field.p(),
            "m": field.m(),
            "size": set.len(),
            "labels": if dlog { "dlog" } else { "index" },
            "elements": listing,
            "design": class,
        });
        println!("{out}");
    } else {
        println!("family {spec} over GF({}^{})", field.p(), field.m());
        println!("size {}", set.len());
        println!("{} {{{}}}", if dlog { "dlogs" } else { "elements" }, join(&listing));
        if let Some(c) = class {
            println!("design {c}");
        }
    }
    Ok(())
}

fn analyze_design(args: &FamilyArgs, choice: GroupChoice, json: bool) -> CmdResult {
    let (spec, set) = args.build()?;
    let field = set.field();
    let q = field.q();
    let choice = match choice {
        GroupChoice::Auto if set.contains_zero() => GroupChoice::Additive,
        GroupChoice::Auto => GroupChoice::Multiplicative,
        c => c,
    };
    let (group, name, residues) = match choice {
        GroupChoice::Additive => (
            AbelianGroup::Additive(field.clone()),
            format!("(GF({q}), +)"),
            set.indices(),
        ),
        GroupChoice::Multiplicative | GroupChoice::Auto => {
            (AbelianGroup::Cyclic(q - 1), format!("Z_{}", q - 1), set.dlogs()?)
        }
        GroupChoice::Quotient => {
            let n = (q - 1) / (field.p() - 1);
            let image = set.quotient_image(n)?;
            if image.len() != set.len() {
                return Err(Failure::Usage(format!(
                    "set is not injective modulo GF({})*",
                    field.p()
                )));
            }
            (AbelianGroup::Cyclic(n), format!("Z_{n}"), image)
        }
    };
    let class = classify_design(&group, &residues)?;
    if json {
        println!(
            "{}",
            json!({ "family": spec.to_string(), "group": name, "size": residues.len(), "design": class })
        );
    } else {
        println!("family {spec}, {} elements in {name}", residues.len());
        println!("{class}");
    }
    Ok(())
}

fn walsh(expr: &str, m: u32, max_field_bits: u32, json: bool) -> CmdResult {
    let config = FieldConfig {
        max_field_bits,
        ..FieldConfig::default()
    };
    let field = Field::with_config(2, m, None, &config)?;
    let f = FuncSpec::parse(expr, &field, None, Target::Trace)?;
    let spectrum = walsh_transform(&field, &f)?;
    let class = classify_spectrum(&spectrum);
    let rank = quadratic_rank(&field, &f).ok().map(|r| r.r);
    let counts = spectrum.value_counts();
    if json {
        let hist: Vec<_> = counts.iter().map(|(v, c)| json!({ "value": v, "count": c })).collect();
        println!(
            "{}",
            json!({
                "function": f.to_string(),
                "m": m,
                "values": hist,
                "class": class.kind.to_string(),
                "n_f": class.n_f,
                "rank": rank,
            })
        );
    } else {
        println!("{f} over GF(2^{m})");
        for (v, c) in &counts {
            println!("  {v:>8}: {c}");
        }
        println!("class {}", class.kind);
        println!("n_f {}", class.n_f);
        if let Some(r) = rank {
            println!("rank {r}");
        }
    }
    Ok(())
}

fn code(args: &FamilyArgs, expect: &str, max_work: u64, json: bool) -> CmdResult {
    let (spec, set) = args.build()?;
    let field = set.field().clone();
    let code = DefiningSetCode::new(set)?;
    let e = weight_enumerator(&code, &CodeConfig { max_work })?;
    let d = minimum_distance(&e)?;
    let griesmer = griesmer_check(e.n, e.k, d, e.p);
    let witness = dual_distance_witness(&code);
    let pless = pless_moment_check(&e, &witness);
    let moments = |r: Option<bool>| match r {
        None => "n/a",
        Some(true) => "ok",
        Some(false) => "broken",
    };
    let comparison = if expect == "none" {
        None
    } else {
        let which: Prediction = expect.parse()?;
        let params = spec.prediction_params(&field, args.u.as_deref())?;
        let pred = predicted_enumerator(which, &params)?;
        Some((which, pred.matches(&e), pred))
    };
    if json {
        let report = json!({
            "d": d,
            "griesmer": griesmer.to_string(),
            "moments": [moments(pless.first), moments(pless.second)],
            "expect": comparison.as_ref().map(|(w, ok, pred)| json!({
                "id": w.id(),
                "predicted": pred.to_string(),
                "verdict": if *ok { "pass" } else { "fail" },
            })),
        });
        println!("{{\"enumerator\":{},\"report\":{report}}}", e.to_json());
    } else {
        println!("[{},{},{}] over GF({})", e.n, e.k, d, e.p);
        println!("enumerator {e}");
        println!("griesmer {griesmer}");
        println!(
            "moments {} {}",
            moments(pless.first),
            moments(pless.second)
        );
        if let Some((w, ok, pred)) = &comparison {
            println!("expect {} {}: {pred}", w.id(), if *ok { "pass" } else { "FAIL" });
        }
    }
    if pless.first == Some(false) || pless.second == Some(false) {
        return Err(Failure::Mismatch);
    }
    match comparison {
        Some((_, false, _)) => Err(Failure::Mismatch),
        _ => Ok(()),
    }
}

fn export_gen(args: &FamilyArgs) -> CmdResult {
    let (_, set) = args.build()?;
    print!("{}", DefiningSetCode::new(set)?.export_generator());
    Ok(())
}

fn verify(filter: Option<&str>, list: bool, json: bool) -> CmdResult {
    if list {
        for id in defset_core::verify::case_ids() {
            println!("{id}");
        }
        return Ok(());
    }
    let reports = run_cases(filter)?;
    if json {
        println!("{}", serde_json::to_string(&reports).expect("reports serialize"));
    } else {
        let width = reports.iter().map(|r| r.case_id.len()).max().unwrap_or(0);
        for r in &reports {
            println!("{:width$}  {:<7} {:>7}ms  {}", r.case_id, r.verdict.to_string(), r.elapsed_ms, r.actual);
            if matches!(r.verdict, Verdict::Fail) {
                println!("{:width$}  expected {}", "", r.expected);
            }
        }
        let failed = reports.iter().filter(|r| !r.passed()).count();
        println!("{} cases, {} failed", reports.len(), failed);
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
