mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use wiggle_core::certify::{certify, random_parameter, tuple_seed, verify_certificate, Certificate, CertifyOptions, DCParams, Status};
use wiggle_core::json::{
    certificate_to_json, identity_report_to_json, mat2_to_json, polys_report_to_json, rat_to_json, witness_to_json,
};
use wiggle_core::mat2::Mat2;
use wiggle_core::rational::{format_rat, parse_rat};
use wiggle_core::wiggle::{assoc_polys, eval_direct, eval_normal_form, gamma_of, trace_poly, verify_identities};
use wiggle_core::witness::build_witness;
use wiggle_core::words::{parse_word, Word};
use wiggle_core::{Error, Rat};

const SUCCESS: u8 = 0;
const INCONCLUSIVE: u8 = 1;
const TRIVIAL: u8 = 2;
const INPUT_ERROR: u8 = 3;

const ORACLE_SAMPLES: usize = 8;

#[derive(Parser)]
#[command(name = "wiggle", version, about = "Wiggle polynomials and unipotent certificates for two-generator words in SL2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print α, β, γ and the trace polynomial of a word.
    Polys(Options),
    /// Check the determinant, symmetry and Bezout identities symbolically.
    Verify(Options),
    /// Certify a non-trivial unipotent in the image of a double commutator.
    Certify(Options),
    /// Certify, then build an explicit witness g.
    Witness(Options),
    /// Compare the direct word evaluation against the normal form.
    Oracle(Options),
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["word", "dc", "grid"])))]
struct Options {
    /// Word in x, y, e.g. "[x^2, y]^-1 x y".
    #[arg(long)]
    word: Option<String>,
    /// Double commutator [[x^k,y^l],[x^m,y^n]] as k,l,m,n.
    #[arg(long, value_parser = parse_dc, allow_hyphen_values = true)]
    dc: Option<DCParams>,
    /// Box of double commutators, kmin:kmax,lmin:lmax,mmin:mmax,nmin:nmax.
    #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
    grid: Option<Grid>,
    #[arg(long, value_parser = parse_rat_arg, requires = "mu", allow_hyphen_values = true)]
    lambda: Option<Rat>,
    #[arg(long, value_parser = parse_rat_arg, requires = "lambda", allow_hyphen_values = true)]
    mu: Option<Rat>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Decimal digits for approximate witnesses.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    precision: u32,
    /// Specializations tried per orientation of the word.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    max_attempts: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Debug)]
struct Grid([(i64, i64); 4]);

impl Grid {
    fn tuples(&self) -> Vec<DCParams> {
        let [k, l, m, n] = self.0;
        let mut out = Vec::new();
        for a in k.0..=k.1 {
            for b in l.0..=l.1 {
                for c in m.0..=m.1 {
                    for d in n.0..=n.1 {
                        out.push(DCParams::new(a, b, c, d));
                    }
                }
            }
        }
        out
    }
}

fn parse_dc(s: &str) -> Result<DCParams, String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match v[..] {
        [k, l, m, n] => Ok(DCParams::new(k, l, m, n)),
        _ => Err(format!("expected four integers k,l,m,n, got {}", v.len())),
    }
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    let ranges: Vec<(i64, i64)> = s
        .split(',')
        .map(|part| {
            let num = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"));
            let (lo, hi) = match part.split_once(':') {
                Some((a, b)) => (num(a)?, num(b)?),
                None => (num(part)?, num(part)?),
            };
            if lo > hi {
                return Err(format!("empty range {part:?}"));
            }
            Ok((lo, hi))
        })
        .collect::<Result<_, _>>()?;
    let n = ranges.len();
    ranges
        .try_into()
        .map(Grid)
        .map_err(|_| format!("expected four ranges, got {n}"))
}

fn parse_rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: INPUT_ERROR, message: message.into() }
    }

    fn internal(err: Error) -> Self {
        Failure { code: INCONCLUSIVE, message: err.to_string() }
    }
}

/// Points at the failing position of a word.
fn word_error(text: &str, err: Error) -> Failure {
    let pos = match err {
        Error::Syntax { pos, .. } | Error::ExponentOverflow { pos } => Some(pos),
        _ => None,
    };
    let mut message = err.to_string();
    if let Some(pos) = pos {
        let col = text[..pos.min(text.len())].chars().count();
        message.push_str(&format!("\n  {text}\n  {}^", " ".repeat(col)));
    }
    Failure::input(message)
}

enum Target {
    Word(Word),
    Dc(DCParams),
}

impl Target {
    fn pairs(&self) -> Vec<(i64, i64)> {
        match self {
            Target::Word(w) => w.to_pairs(),
            Target::Dc(p) => p.pairs().to_vec(),
        }
    }

    fn word(&self) -> Word {
        match self {
            Target::Word(w) => w.clone(),
            Target::Dc(p) => Word::from_pairs(&p.pairs()).expect("small exponents"),
        }
    }
}

impl Options {
    fn target(&self) -> Result<Target, Failure> {
        match (&self.word, &self.dc) {
            (Some(text), _) => parse_word(text).map(Target::Word).map_err(|e| word_error(text, e)),
            (_, Some(p)) => Ok(Target::Dc(*p)),
            _ => Err(Failure::input("--grid is only supported by certify")),
        }
    }

    fn dc(&self, command: &str) -> Result<DCParams, Failure> {
        self.dc
            .ok_or_else(|| Failure::input(format!("{command} needs a double commutator; pass --dc k,l,m,n")))
    }

    fn specialization(&self) -> Option<(Rat, Rat)> {
        self.lambda.clone().zip(self.mu.clone())
    }

    /// A closed stdout is not an error worth reporting.
    fn emit(&self, value: Value, human: impl FnOnce() -> String) {
        let text = if self.json {
            serde_json::to_string_pretty(&value).expect("JSON values serialize")
        } else {
            human()
        };
        let _ = writeln!(std::io::stdout().lock(), "{text}");
    }
}

fn status_code(s: Status) -> u8 {
    match s {
        Status::Certified | Status::SwappedCertified => SUCCESS,
        Status::Inconclusive => INCONCLUSIVE,
        Status::TrivialWord => TRIVIAL,
    }
}

/// Runs the pipeline and rechecks any certificate before it is shown.
fn checked_certificate(p: &DCParams, opts: &Options, seed: u64) -> Result<Certificate, Failure> {
    let copts = CertifyOptions { seed, max_attempts: opts.max_attempts, specialization: opts.specialization() };
    let cert = certify(p, &copts).map_err(Failure::internal)?;
    if cert.status.is_certified() {
        let checks = verify_certificate(&cert).map_err(Failure::internal)?;
        if checks != cert.checks || !checks.all() {
            return Err(Failure {
                code: INCONCLUSIVE,
                message: format!("independent check rejected the certificate for {:?}", p.as_array()),
            });
        }
    }
    Ok(cert)
}

fn polys(opts: &Options) -> Result<u8, Failure> {
    let target = opts.target()?;
    let word = target.word();
    let ap = assoc_polys(&target.pairs());
    let mut report = polys_report_to_json(&ap);
    report["word"] = json!(word.to_string());
    report["pairs"] = json!(ap.pairs());
    opts.emit(report, || {
        format!(
            "w = {word}\nα(t) = {}\nβ(t) = {}\nγ(t) = {}\nT(t) = {}",
            ap.alpha,
            ap.beta,
            gamma_of(&ap),
            trace_poly(&ap)
        )
    });
    Ok(SUCCESS)
}

fn verify(opts: &Options) -> Result<u8, Failure> {
    let target = opts.target()?;
    let word = target.word();
    let r = verify_identities(&assoc_polys(&target.pairs()));
    let mut report = identity_report_to_json(&r);
    report["word"] = json!(word.to_string());
    opts.emit(report, || format!("w = {word}\n{}", render::identities(&r)));
    Ok(if r.all_pass() { SUCCESS } else { INCONCLUSIVE })
}

fn certify_cmd(opts: &Options) -> Result<u8, Failure> {
    if opts.word.is_some() {
        return Err(Failure::input("certify needs a double commutator; pass --dc or --grid"));
    }
    let Some(grid) = &opts.grid else {
        let p = opts.dc("certify")?;
        let cert = checked_certificate(&p, opts, opts.seed)?;
        opts.emit(certificate_to_json(&cert), || render::certificate(&cert));
        return Ok(status_code(cert.status));
    };
    let tuples = grid.tuples();
    log::info!("certifying {} tuples", tuples.len());
    let certs: Vec<Certificate> = tuples
        .par_iter()
        .map(|p| checked_certificate(p, opts, tuple_seed(opts.seed, p)))
        .collect::<Result<_, _>>()?;
    let code = if certs.iter().any(|c| c.status == Status::Inconclusive) { INCONCLUSIVE } else { SUCCESS };
    opts.emit(Value::Array(certs.iter().map(certificate_to_json).collect()), || {
        certs.iter().map(render::certificate).collect::<Vec<_>>().join("\n")
    });
    Ok(code)
}

fn witness_cmd(opts: &Options) -> Result<u8, Failure> {
    if opts.word.is_some() || opts.grid.is_some() {
        return Err(Failure::input("witness needs a single double commutator; pass --dc k,l,m,n"));
    }
    let p = opts.dc("witness")?;
    let cert = checked_certificate(&p, opts, opts.seed)?;
    if !cert.status.is_certified() {
        opts.emit(json!({"certificate": certificate_to_json(&cert), "witness": null}), || render::certificate(&cert));
        return Ok(status_code(cert.status));
    }
    let w = build_witness(&cert, opts.precision).map_err(Failure::internal)?;
    opts.emit(json!({"certificate": certificate_to_json(&cert), "witness": witness_to_json(&w)}), || {
        format!("{}\n{}", render::certificate(&cert), render::witness(&w, opts.precision))
    });
    Ok(SUCCESS)
}

fn random_unimodular(rng: &mut ChaCha8Rng) -> Mat2<Rat> {
    let a = random_parameter(rng);
    let b = Rat::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=20).into());
    let c = Rat::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=20).into());
    let d = (Rat::one() + &b * &c) / &a;
    Mat2::new(a, b, c, d)
}

fn oracle(opts: &Options) -> Result<u8, Failure> {
    let target = opts.target()?;
    let pairs = target.pairs();
    let ap = assoc_polys(&pairs);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut samples = Vec::with_capacity(ORACLE_SAMPLES);
    let mut lines = Vec::with_capacity(ORACLE_SAMPLES);
    let mut all_agree = true;
    for _ in 0..ORACLE_SAMPLES {
        let (lam, mu) = opts
            .specialization()
            .unwrap_or_else(|| (random_parameter(&mut rng), random_parameter(&mut rng)));
        let g = random_unimodular(&mut rng);
        let direct = eval_direct(&pairs, &lam, &mu, &g).map_err(Failure::internal)?;
        let normal = eval_normal_form(&ap, &lam, &mu, &g).map_err(Failure::internal)?.matrix;
        let agree = direct == normal;
        all_agree &= agree;
        lines.push(format!(
            "λ = {}, μ = {}, g = {}: {}",
            format_rat(&lam),
            format_rat(&mu),
            render::matrix(&g, format_rat),
            if agree { "agree" } else { "MISMATCH" }
        ));
        samples.push(json!({
            "lambda": rat_to_json(&lam),
            "mu": rat_to_json(&mu),
            "g": mat2_to_json(&g, rat_to_json),
            "direct": mat2_to_json(&direct, rat_to_json),
            "normal_form": mat2_to_json(&normal, rat_to_json),
            "agree": agree,
        }));
    }
    let word = target.word();
    opts.emit(json!({"word": word.to_string(), "samples": samples, "agree": all_agree}), || {
        format!("w = {word}\n{}", lines.join("\n"))
    });
    Ok(if all_agree { SUCCESS } else { INCONCLUSIVE })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { INPUT_ERROR } else { SUCCESS };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Polys(o) => polys(o),
        Command::Verify(o) => verify(o),
        Command::Certify(o) => certify_cmd(o),
        Command::Witness(o) => witness_cmd(o),
        Command::Oracle(o) => oracle(o),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
