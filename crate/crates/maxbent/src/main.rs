use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use maxbent::certify;
use maxbent::error::Error;
use maxbent::family::{self, ScanMode};
use maxbent::field::{canonical_modulus, FieldCtx, TowerCtx};
use maxbent::linpoly::{parse_elem, LinearizedPoly};
use maxbent::survey::{self, SurveyConfig};

#[derive(Parser)]
#[command(
    name = "maxbent",
    version,
    about = "Walsh and differential analysis of functions on GF(2^n) with the maximal number of bent components"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate normalized linearized permutations, classify by spectra,
    /// and compare against the dimension-8/10 reference tables
    Survey(SurveyArgs),
    /// Run the certificate suite over a full survey or a single member
    Certify(CertifyArgs),
    /// Analyze one member given r and L
    Member(MemberArgs),
    /// Count bent components of every monomial x^d
    MonomialScan(MonomialScanArgs),
    /// Reproduce the reference examples in dimensions 12 and 6 by witness search
    Examples(ExamplesArgs),
    /// Build and check binomial members L = x^(2^(3r)) + beta x^(2^r)
    Bino(BinoArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct SurveyArgs {
    /// Subfield degree m (the field pair is GF(2^m) inside GF(2^2m))
    #[arg(long)]
    m: Option<u32>,
    /// Frobenius shift r, canonicalized mod m
    #[arg(long)]
    r: Option<u32>,
    /// Base-field modulus override (hex bitmask, e.g. 0x13)
    #[arg(long)]
    modulus: Option<String>,
    /// Extension-field modulus override (hex bitmask)
    #[arg(long)]
    modulus_ext: Option<String>,
    /// Output directory; reports go to stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads (defaults to all cores)
    #[arg(long)]
    workers: Option<usize>,
    /// Seed for the deterministic revalidation sample
    #[arg(long)]
    seed: Option<u64>,
    /// Witnesses kept per category
    #[arg(long)]
    witness_cap: Option<usize>,
    /// Fraction of members revalidated with full 2^n tables
    #[arg(long)]
    revalidate_rate: Option<f64>,
    /// Optional key=value config file; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long)]
    m: u32,
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Certify a single member instead of a survey: "coeff:index,..."
    #[arg(long)]
    lambda: Option<String>,
    /// Also run the exhaustive best-class equivalence over these r values
    #[arg(long, value_delimiter = ',')]
    allbest_rs: Option<Vec<u32>>,
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long)]
    modulus_ext: Option<String>,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct MemberArgs {
    #[arg(long)]
    m: u32,
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Coefficients as "coeff:index" pairs, e.g. "g^52:5,g^40:4,1:0"
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long)]
    modulus_ext: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct MonomialScanArgs {
    /// Even dimension n <= 12
    #[arg(long)]
    n: u32,
    /// direct tests every component; orbit scales one test per image coset
    #[arg(long, value_enum)]
    mode: Option<ScanModeArg>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ScanModeArg {
    Direct,
    Orbit,
}

#[derive(Args)]
struct ExamplesArgs {
    /// Re-verify the dimension-12 witness on the full 2^12 table
    #[arg(long, default_value_t = true)]
    direct: bool,
}

#[derive(Args)]
struct BinoArgs {
    #[arg(long, default_value_t = 6)]
    m: u32,
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Single beta ("g^5", hex or decimal); scans every nonzero beta when omitted
    #[arg(long)]
    beta: Option<String>,
}

fn parse_modulus(s: &str) -> Result<u32, Error> {
    let t = s.trim();
    let digits = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    u32::from_str_radix(digits, 16).map_err(|_| Error::Parse(format!("bad modulus {s:?}")))
}

fn load_config(path: &PathBuf) -> Result<std::collections::BTreeMap<String, String>, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut map = std::collections::BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::Parse(format!(
                "{}:{}: expected key=value",
                path.display(),
                lineno + 1
            ))
        })?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn build_survey_config(a: &SurveyArgs) -> Result<(SurveyConfig, Format, Option<PathBuf>), Error> {
    let file = match &a.config {
        Some(p) => load_config(p)?,
        None => Default::default(),
    };
    let get = |key: &str| file.get(key).cloned();
    let parse_u32 = |key: &str, v: String| {
        v.parse::<u32>()
            .map_err(|_| Error::Parse(format!("config {key}: bad integer {v:?}")))
    };

    let m = match (a.m, get("m")) {
        (Some(m), _) => m,
        (None, Some(v)) => parse_u32("m", v)?,
        (None, None) => {
            return Err(Error::Parse(
                "--m is required (or set m= in the config file)".into(),
            ))
        }
    };
    let r = match (a.r, get("r")) {
        (Some(r), _) => r,
        (None, Some(v)) => parse_u32("r", v)?,
        (None, None) => 1,
    };
    let mut cfg = SurveyConfig::new(m, r);
    cfg.base_modulus = match (&a.modulus, get("modulus")) {
        (Some(s), _) => Some(parse_modulus(s)?),
        (None, Some(v)) => Some(parse_modulus(&v)?),
        _ => None,
    };
    cfg.ext_modulus = match (&a.modulus_ext, get("modulus_ext")) {
        (Some(s), _) => Some(parse_modulus(s)?),
        (None, Some(v)) => Some(parse_modulus(&v)?),
        _ => None,
    };
    cfg.workers = match (a.workers, get("workers")) {
        (Some(w), _) => Some(w),
        (None, Some(v)) => Some(
            v.parse()
                .map_err(|_| Error::Parse("config workers: bad integer".into()))?,
        ),
        _ => None,
    };
    cfg.seed = match (a.seed, get("seed")) {
        (Some(s), _) => s,
        (None, Some(v)) => v
            .parse()
            .map_err(|_| Error::Parse("config seed: bad integer".into()))?,
        _ => 0,
    };
    cfg.witness_cap = match (a.witness_cap, get("witness_cap")) {
        (Some(w), _) => w,
        (None, Some(v)) => v
            .parse()
            .map_err(|_| Error::Parse("config witness_cap: bad integer".into()))?,
        _ => 4,
    };
    cfg.revalidate_rate = match (a.revalidate_rate, get("revalidate_rate")) {
        (Some(f), _) => f,
        (None, Some(v)) => v
            .parse()
            .map_err(|_| Error::Parse("config revalidate_rate: bad number".into()))?,
        _ => 0.01,
    };
    let format = a.format.unwrap_or(match get("format").as_deref() {
        Some("csv") => Format::Csv,
        Some("json") => Format::Json,
        _ => Format::Text,
    });
    let out = a.out.clone().or_else(|| get("out").map(PathBuf::from));
    Ok((cfg, format, out))
}

fn cmd_survey(a: SurveyArgs) -> Result<u8, Error> {
    let (cfg, format, out) = build_survey_config(&a)?;
    let result = survey::run_survey(&cfg)?;
    match out {
        Some(dir) => {
            for path in survey::emit_reports(&result, &dir)? {
                eprintln!("wrote {}", path.display());
            }
        }
        None => {
            let rendered = match format {
                Format::Text => survey::render_text(&result),
                Format::Csv => survey::render_csv(&result),
                Format::Json => survey::render_json(&result),
            };
            print!("{rendered}");
        }
    }
    Ok(if result.certificates.violated() > 0 {
        1
    } else {
        0
    })
}

fn cmd_certify(a: CertifyArgs) -> Result<u8, Error> {
    let mut cfg = SurveyConfig::new(a.m, a.r);
    cfg.base_modulus = a.modulus.as_deref().map(parse_modulus).transpose()?;
    cfg.ext_modulus = a.modulus_ext.as_deref().map(parse_modulus).transpose()?;
    cfg.workers = a.workers;
    cfg.seed = a.seed;
    let mut violated = 0u64;

    match &a.lambda {
        Some(spec) => {
            let base = match cfg.base_modulus {
                Some(p) => FieldCtx::with_modulus(a.m, p)?,
                None => FieldCtx::new(a.m),
            };
            let lambda = LinearizedPoly::parse(a.m, spec, &base)?;
            let report = survey::analyze_member(&cfg, &lambda)?;
            println!("member {}", report.descriptor);
            println!("L permutation:   {}", report.is_permutation);
            println!(
                "bent components: {} of {}",
                report.bent_count, report.max_bent
            );
            println!("walsh spectrum:  {}", report.walsh);
            println!(
                "diff spectrum:   {} ; subfield {}",
                report.diff, report.subfield_diff_row
            );
            println!("nonlinearity:    {}", report.nonlinearity);
            for c in &report.certificates {
                println!("{}", c.line());
                violated += c.is_violated() as u64;
            }
        }
        None => {
            let result = survey::run_survey(&cfg)?;
            print!("{}", survey::render_text(&result));
            violated += result.certificates.violated();
        }
    }

    for rep in certify::lemma_suite() {
        println!("{}", rep.line());
        violated += rep.is_violated() as u64;
    }
    if let Some(rs) = &a.allbest_rs {
        let base = match cfg.base_modulus {
            Some(p) => FieldCtx::with_modulus(a.m, p)?,
            None => FieldCtx::new(a.m),
        };
        let chk = certify::check_best_nonlinearity_class(&base, rs);
        println!("{}", chk.report.line());
        for (r, lambda) in &chk.attaining {
            println!("  attaining: r={r};L={}", lambda.render(&base));
        }
        violated += chk.report.is_violated() as u64;
    }
    Ok(if violated > 0 { 1 } else { 0 })
}

fn cmd_member(a: MemberArgs) -> Result<u8, Error> {
    let mut cfg = SurveyConfig::new(a.m, a.r);
    cfg.base_modulus = a.modulus.as_deref().map(parse_modulus).transpose()?;
    cfg.ext_modulus = a.modulus_ext.as_deref().map(parse_modulus).transpose()?;
    let base = match cfg.base_modulus {
        Some(p) => FieldCtx::with_modulus(a.m, p)?,
        None => FieldCtx::new(a.m),
    };
    let lambda = LinearizedPoly::parse(a.m, &a.lambda, &base)?;
    let report = survey::analyze_member(&cfg, &lambda)?;
    match a.format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("serializable")
            )
        }
        _ => {
            println!("member {}", report.descriptor);
            println!(
                "fields: GF(2^{}) modulus {} / GF(2^{}) modulus {}",
                report.config.m,
                report.config.base_modulus,
                report.config.n,
                report.config.ext_modulus
            );
            println!("L permutation:   {}", report.is_permutation);
            println!(
                "bent components: {} of {}",
                report.bent_count, report.max_bent
            );
            println!("walsh spectrum:  {}", report.walsh);
            println!(
                "diff spectrum:   {} ; subfield {}",
                report.diff, report.subfield_diff_row
            );
            println!("nonlinearity:    {}", report.nonlinearity);
            for c in &report.certificates {
                println!("{}", c.line());
            }
        }
    }
    let violated = report
        .certificates
        .iter()
        .filter(|c| c.is_violated())
        .count();
    Ok(if violated > 0 { 1 } else { 0 })
}

fn cmd_monomial_scan(a: MonomialScanArgs) -> Result<u8, Error> {
    if !a.n.is_multiple_of(2) || !(4..=12).contains(&a.n) {
        return Err(Error::Parse(
            "monomial scan needs an even n with 4 <= n <= 12".into(),
        ));
    }
    let mode = match a.mode {
        Some(ScanModeArg::Direct) => ScanMode::Direct,
        Some(ScanModeArg::Orbit) => ScanMode::Orbit,
        // direct is the primary path at small n; orbit keeps n = 10, 12 fast
        None => {
            if a.n <= 8 {
                ScanMode::Direct
            } else {
                ScanMode::Orbit
            }
        }
    };
    let ctx = FieldCtx::new(a.n);
    let scan = family::monomial_scan(&ctx, mode);
    println!(
        "# monomial scan n={} mode={:?}: {} exponents attain the maximal bent count {}",
        scan.n,
        mode,
        scan.attaining.len(),
        scan.max_bent
    );
    let m = a.n / 2;
    for &d in &scan.attaining {
        println!("d={d} = {}*(2^{m}+1)", d / ((1u64 << m) + 1));
    }
    println!(
        "factorization property: {}",
        if scan.factorization_ok {
            "holds for every attaining exponent"
        } else {
            "VIOLATED"
        }
    );
    Ok(if scan.factorization_ok { 0 } else { 1 })
}

fn cmd_examples(a: ExamplesArgs) -> Result<u8, Error> {
    let named = certify::verify_named_examples();
    for rep in &named.reports {
        println!("{}", rep.line());
    }
    println!("dim12: {}", named.dim12.finding);
    println!("h64:   {}", named.h64.finding);
    if a.direct {
        if let Some(w) = &named.dim12.witness {
            let (walsh, diff) = certify::dim12_direct_verification(w)?;
            println!(
                "dim12 direct (full 2^12 table) under modulus {:#x}, gamma g^{}: walsh {:?} diff {:?}",
                w.modulus, w.gamma_log, walsh, diff
            );
        }
    }
    Ok(0)
}

fn cmd_bino(a: BinoArgs) -> Result<u8, Error> {
    if a.m % 4 != 2 {
        return Err(Error::Parse(
            "the binomial construction needs m = 2 mod 4".into(),
        ));
    }
    let tower = Arc::new(TowerCtx::with_moduli(
        a.m,
        canonical_modulus(a.m),
        canonical_modulus(2 * a.m),
    )?);
    let base_modulus = tower.base().modulus();
    let betas: Vec<u32> = match &a.beta {
        Some(s) => vec![parse_elem(s, tower.base())?],
        None => (1..1u32 << a.m).collect(),
    };
    let mut built = 0u64;
    let mut rejected = 0u64;
    for beta in betas {
        match family::binomial_member(&tower, a.r, beta) {
            Ok(fm) => {
                built += 1;
                let shadow = family::analyze_shadow(tower.base(), fm.r, &fm.lambda);
                println!(
                    "beta={:<6} member {:<44} walsh {:?}",
                    tower.base().render_gpow(beta),
                    fm.descriptor(),
                    shadow.f_walsh_signature(),
                );
            }
            Err(Error::BetaInPowerImage { power, .. }) => {
                rejected += 1;
                println!(
                    "beta={:<6} rejected: {power}th power",
                    tower.base().render_gpow(beta)
                );
            }
            Err(e) => return Err(e),
        }
    }
    println!(
        "# modulus {base_modulus:#x}: built {built} members, rejected {rejected} power-image betas"
    );
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Survey(a) => cmd_survey(a),
        Cmd::Certify(a) => cmd_certify(a),
        Cmd::Member(a) => cmd_member(a),
        Cmd::MonomialScan(a) => cmd_monomial_scan(a),
        Cmd::Examples(a) => cmd_examples(a),
        Cmd::Bino(a) => cmd_bino(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e @ (Error::Parse(_) | Error::Io(_) | Error::BadModulus { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
