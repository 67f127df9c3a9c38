//! The `cherednik` command-line tool as a library, so tests can drive it
//! without spawning processes.
//!
//! Every report is a JSON object with `"schema": 1`, a `conventions` block
//! naming the frozen conventions it was computed under, a `warnings` array,
//! and the command's own fields. Map keys are sorted, so output is a pure
//! function of the configuration.

pub mod cache;
pub mod config;

use std::collections::BTreeMap;
use std::path::Path;

use cherednik_core::charform::{self, Contraction, ModularParams, Pipeline};
use cherednik_core::cherednik::checks::{dunkl_suite, pbw_suite};
use cherednik_core::cherednik::{p_center_check, MonomialOrder, VermaModule, DUNKL_SIGN};
use cherednik_core::exactqt::is_prime_u64;
use cherednik_core::hilbk::{self, FixedPointClass, Weights};
use cherednik_core::macdonald::{KostkaConvention, KostkaTable};
use cherednik_core::{Limit, Partition, PartitionFunction};
use serde_json::{json, Map, Value};

pub use cache::{cache_path, ensure_kostka, CacheEvent};
pub use config::{Cli, ClassArg, ClassArgs, Command, Format, RunConfig, Suite};

pub const SCHEMA: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] cherednik_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit status: 2 for invalid input, 1 for runtime failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

/// The conventions every report is computed under.
pub fn conventions(kostka: KostkaConvention, contraction: Contraction) -> Value {
    json!({
        "box_orientation": "box (r, s) has weight t^r q^s: rows carry t, columns carry q",
        "arm_leg": "arm = boxes right in the row, leg = boxes below in the column",
        "kostka_convention": kostka.name(),
        "kostka_normalization": "K~_{(1^n),mu} = t^{n(mu)} q^{n(mu')}",
        "dunkl_sign": DUNKL_SIGN,
        "calogero_gauge": "delta^{-c} o H_c o delta^{c} = L_c, c lifted to [0, p)",
        "contraction": contraction.name(),
        "splitting_normalization": "W_c = f_c / top(W_0), f_c = (qt)^{-p/2} Fr_* O(c~)",
    })
}

/// Runs a configuration and returns the rendered report.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    let value = match config.threads {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            pool.install(|| dispatch(config))?
        }
        None => dispatch(config)?,
    };
    Ok(render(&value, config.format))
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("serializable") + "\n",
        Format::Text => {
            let mut out = String::new();
            render_text(v, 0, &mut out);
            out
        }
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(inner) if !inner.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            out.push_str(&format!("{pad}  -\n"));
                            render_text(item, indent + 2, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        Value::Object(m) if m.is_empty() => "{}".into(),
        other => other.to_string(),
    }
}

fn partition(s: &str) -> Result<Partition, CliError> {
    s.parse::<Partition>().map_err(|_| CliError::Usage(format!("invalid partition syntax: {s:?}")))
}

fn partition_of(s: &str, n: usize, what: &str) -> Result<Partition, CliError> {
    let p = partition(s)?;
    if p.n() != n {
        return Err(CliError::Usage(format!("--{what} {s} is not a partition of {n}")));
    }
    Ok(p)
}

fn check_prime(p: u64, n: usize) -> Result<(), CliError> {
    if !is_prime_u64(p) {
        return Err(cherednik_core::Error::NotPrime(p).into());
    }
    if p <= n as u64 {
        return Err(cherednik_core::Error::PrimeTooSmall { p, n }.into());
    }
    Ok(())
}

fn check_n(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be positive".into()));
    }
    Ok(())
}

fn params(p: u64, n: usize, c: &str, lift: Option<i64>) -> Result<ModularParams, CliError> {
    check_prime(p, n)?;
    let (a, b) = config::parse_rational(c)?;
    Ok(ModularParams::new(p, a, b, lift)?)
}

fn limit_text(l: &Limit) -> String {
    match l {
        Limit::Pole => "pole".into(),
        Limit::Value(v) => v.to_string(),
    }
}

fn envelope(command: &str, conv: Value, warnings: Vec<String>, fields: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("conventions".into(), conv);
    m.insert("warnings".into(), json!(warnings));
    if let Value::Object(f) = fields {
        m.extend(f);
    }
    Value::Object(m)
}

fn note_cache(dir: &Path, n: usize) -> Result<(), CliError> {
    let (_, event) = ensure_kostka(dir, n)?;
    if matches!(event, CacheEvent::Rewritten) {
        eprintln!("note: replaced unreadable cache file {}", cache_path(dir, n).display());
    }
    Ok(())
}

fn dispatch(config: &RunConfig) -> Result<Value, CliError> {
    let default_conv = conventions(KostkaConvention::Standard, Contraction::default());
    match &config.command {
        Command::Kostka { n, convention } => {
            check_n(*n)?;
            let conv = match convention {
                config::ConventionArg::Standard => KostkaConvention::Standard,
                config::ConventionArg::Swapped => KostkaConvention::Swapped,
            };
            let (table, event) = ensure_kostka(&config.cache_dir, *n)?;
            if matches!(event, CacheEvent::Rewritten) {
                eprintln!("note: replaced unreadable cache file {}", cache_path(&config.cache_dir, *n).display());
            }
            let table: KostkaTable = match conv {
                KostkaConvention::Standard => (*table).clone(),
                KostkaConvention::Swapped => table.swapped(),
            };
            let mut entries = BTreeMap::new();
            for lam in table.partitions() {
                for mu in table.partitions() {
                    entries.insert(format!("{}|{}", lam.key(), mu.key()), table.get(lam, mu).to_string());
                }
            }
            Ok(envelope(
                "kostka",
                conventions(conv, Contraction::default()),
                vec![],
                json!({ "n": n, "convention": conv.name(), "entries": entries }),
            ))
        }
        Command::Fixedpoints(args) => {
            let (class, mut fields, warnings) = fixed_point_class(config, args)?;
            fields.insert("values".into(), json!(class.to_text_map()));
            Ok(envelope("fixedpoints", default_conv, warnings, Value::Object(fields)))
        }
        Command::Euler(args) => {
            let (class, mut fields, warnings) = fixed_point_class(config, args)?;
            let weights = if args.twisted { Weights::Frobenius(args.p.expect("checked")) } else { Weights::Plain };
            let chi = hilbk::euler_characteristic_with(&class, weights);
            fields.insert("euler".into(), json!(chi.to_string()));
            fields.insert("limit_at_one".into(), json!(limit_text(&chi.limit_at_one())));
            Ok(envelope("euler", default_conv, warnings, Value::Object(fields)))
        }
        Command::Char { n, p, c, lift, lambda, contraction } => {
            check_n(*n)?;
            let lam = partition_of(lambda, *n, "lambda")?;
            let params = params(*p, *n, c, *lift)?;
            note_cache(&config.cache_dir, *n)?;
            let how = match contraction {
                config::ContractionArg::Columns => Contraction::Columns,
                config::ContractionArg::Rows => Contraction::Rows,
            };
            let pipe = Pipeline::new(&params, *n)?;
            let rep = pipe.character(&lam, how)?;
            let fields = json!({
                "n": n,
                "lambda": lam,
                "p": p,
                "c": format!("{}/{}", params.c_num, params.c_den),
                "lift": params.c_lift,
                "X": rep.x.to_text_map(),
                "character": rep.character.to_string(),
                "localization": rep.localization.to_string(),
                "routes_agree": rep.routes_agree(),
                "integral_laurent": rep.is_integral_laurent(),
                "dim_limit": limit_text(&rep.dim_limit),
            });
            Ok(envelope("char", conventions(KostkaConvention::Standard, how), rep.warnings.clone(), fields))
        }
        Command::Verma { n, p, c, tau, order } => {
            check_n(*n)?;
            let tau = partition_of(tau, *n, "tau")?;
            let (residue, warnings) = residue(*p, *n, c)?;
            let order = match order {
                config::OrderArg::Grevlex => MonomialOrder::Grevlex,
                config::OrderArg::Lex => MonomialOrder::Lex,
            };
            let m = VermaModule::build_with_order(*n, *p, residue, &tau, order)?;
            let simple = m.simple_character();
            let fields = json!({
                "n": n,
                "p": p,
                "c": c,
                "c_mod_p": residue,
                "tau": tau,
                "order": order.name(),
                "dim_verma": m.dim(),
                "dim_simple": simple.total(),
                "character": simple.coeffs,
                "verma_character": m.character().coeffs,
            });
            Ok(envelope("verma", default_conv, warnings, fields))
        }
        Command::Check { n, p, c, suite, degree, words, seed } => {
            check_n(*n)?;
            let (residue, warnings) = residue(*p, *n, c)?;
            let report = match suite {
                Suite::Pcenter => p_center_check(*n, *p, residue, degree.unwrap_or(12))?,
                Suite::Dunkl => {
                    let p = *p as usize;
                    dunkl_suite(*n, p as u64, residue, degree.unwrap_or(3 * p), degree.unwrap_or(2 * p))?
                }
                Suite::Pbw => pbw_suite(*n, *p, residue, *words, *seed)?,
            };
            let mut fields = serde_json::to_value(&report).expect("serializable");
            if let Value::Object(m) = &mut fields {
                m.insert("c".into(), json!(c));
                m.insert("c_mod_p".into(), json!(residue));
            }
            Ok(envelope("check", default_conv, warnings, fields))
        }
    }
}

/// `c` as a residue mod `p`, with the good-set warning when it applies.
fn residue(p: u64, n: usize, c: &str) -> Result<(u64, Vec<String>), CliError> {
    let params = params(p, n, c, None)?;
    let warnings = if params.in_q_good() { Vec::new() } else { params.warnings().into_iter().take(1).collect() };
    Ok((params.c_mod_p(), warnings))
}

type ClassOutput = (FixedPointClass, Map<String, Value>, Vec<String>);

fn fixed_point_class(config: &RunConfig, args: &ClassArgs) -> Result<ClassOutput, CliError> {
    let n = args.n;
    check_n(n)?;
    let mut fields = Map::new();
    fields.insert("n".into(), json!(n));
    let class_name = match args.class {
        ClassArg::Structure => "structure",
        ClassArg::Skyscraper => "skyscraper",
        ClassArg::Procesi => "procesi",
        ClassArg::Bkr => "bkr",
        ClassArg::FrobeniusLine => "frobenius_line",
        ClassArg::Fc => "fc",
        ClassArg::W0 => "w0",
        ClassArg::Wc => "wc",
    };
    fields.insert("class".into(), json!(class_name));
    let need = |v: &Option<String>, flag: &str| {
        v.clone().ok_or_else(|| CliError::Usage(format!("class {class_name} needs --{flag}")))
    };
    let need_p = || args.p.ok_or_else(|| CliError::Usage(format!("class {class_name} needs --p")));
    if args.twisted {
        let p = need_p()?;
        check_prime(p, n)?;
        fields.insert("twisted".into(), json!(true));
    }
    let weights = if args.twisted { Weights::Frobenius(args.p.expect("checked")) } else { Weights::Plain };
    let mut warnings = Vec::new();
    let mut modular = |fields: &mut Map<String, Value>| -> Result<ModularParams, CliError> {
        let p = need_p()?;
        let c = args.c.clone().unwrap_or_else(|| "0".into());
        let params = params(p, n, &c, args.lift)?;
        fields.insert("p".into(), json!(p));
        fields.insert("c".into(), json!(format!("{}/{}", params.c_num, params.c_den)));
        fields.insert("lift".into(), json!(params.c_lift));
        warnings.extend(params.warnings());
        Ok(params)
    };
    let class: PartitionFunction = match args.class {
        ClassArg::Structure => hilbk::structure_sheaf(n),
        ClassArg::Skyscraper => {
            let mu = partition_of(&need(&args.mu, "mu")?, n, "mu")?;
            fields.insert("mu".into(), json!(mu));
            hilbk::skyscraper_class(&mu)
        }
        ClassArg::Procesi => {
            let lam = partition_of(&need(&args.lambda, "lambda")?, n, "lambda")?;
            note_cache(&config.cache_dir, n)?;
            fields.insert("lambda".into(), json!(lam));
            hilbk::procesi_restriction_with(n, weights)?.remove(&lam).expect("lambda is a partition of n")
        }
        ClassArg::Bkr => {
            let lam = partition_of(&need(&args.lambda, "lambda")?, n, "lambda")?;
            note_cache(&config.cache_dir, n)?;
            fields.insert("lambda".into(), json!(lam));
            hilbk::bkr_inverse_class_with(&lam, weights)?
        }
        ClassArg::FrobeniusLine => {
            let params = modular(&mut fields)?;
            hilbk::frobenius_line_bundle_class(params.c_lift, params.p, n)
        }
        ClassArg::Fc => {
            let params = modular(&mut fields)?;
            charform::f_c(&params, n)?
        }
        ClassArg::W0 => {
            let p = need_p()?;
            check_prime(p, n)?;
            note_cache(&config.cache_dir, n)?;
            fields.insert("p".into(), json!(p));
            charform::splitting_class_w0(n, p)?
        }
        ClassArg::Wc => {
            let params = modular(&mut fields)?;
            note_cache(&config.cache_dir, n)?;
            charform::splitting_class_wc(&params, n)?
        }
    };
    Ok((class, fields, warnings))
}
