//! Command-line front end and the JSON/CSV document formats.
//!
//! Every document carries `"schema": 1`; rationals are strings (`"p/q"`),
//! exponents are `[a, b]` pairs meaning `exp(a·t + b·x)`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exprat::{EvalConfig, ExpPoly, ExpRational, LinForm, WaveConstants, Q};
use crate::spectral::{SpectralData, Spike};
use crate::tau::solution_from_tau;
use crate::transforms::{apply_chain, TransformId};
use crate::verify::{self, Mode, Report};
use crate::wavesys::{model, Algebra, FieldConfig, RootLabel};

pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "nwave", version, about = "Exact multisoliton solutions of the rank-2 n-wave systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the solution after n1 first-root and n2 second-root steps.
    Construct {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        spectral: PathBuf,
        #[arg(long, default_value_t = 0)]
        n1: i64,
        #[arg(long, default_value_t = 0)]
        n2: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a comma-separated chain of transformations, left to right.
    Transform {
        #[arg(long, default_value = "")]
        chain: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite or check a configuration's residuals.
    Verify {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        suite: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, default_value = "exact")]
        mode: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Sample every field on a rectangular (t, x) grid into CSV.
    Sample {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        t0: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        t1: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        x0: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        x1: String,
        #[arg(long, default_value_t = 11)]
        nt: usize,
        #[arg(long, default_value_t = 11)]
        nx: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

// ---------------------------------------------------------------------------
// Documents

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SpikeDoc {
    pub pos: String,
    pub w: String,
}

/// Spectral input: wave constants and the two spike lists.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SpectralDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    pub c: [String; 2],
    pub d: [String; 2],
    #[serde(rename = "P")]
    pub p: Vec<SpikeDoc>,
    #[serde(rename = "Q")]
    pub q: Vec<SpikeDoc>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermDoc {
    pub c: String,
    pub e: [String; 2],
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RatioDoc {
    pub num: Vec<TermDoc>,
    pub den: Vec<TermDoc>,
}

/// A field configuration.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ConfigDoc {
    pub schema: u32,
    pub algebra: String,
    pub c: [String; 2],
    pub d: [String; 2],
    pub fields: BTreeMap<String, RatioDoc>,
}

pub fn parse_q(s: &str) -> Result<Q, Error> {
    s.trim()
        .parse::<Q>()
        .map_err(|_| Error::Input(format!("'{s}' is not an exact rational (use \"p/q\")")))
}

fn constants_from(c: &[String; 2], d: &[String; 2]) -> Result<WaveConstants, Error> {
    WaveConstants::new(parse_q(&c[0])?, parse_q(&c[1])?, parse_q(&d[0])?, parse_q(&d[1])?)
}

fn check_schema(found: Option<u32>) -> Result<(), Error> {
    match found {
        None | Some(SCHEMA) => Ok(()),
        Some(v) => Err(Error::Input(format!("unsupported schema version {v}"))),
    }
}

impl SpectralDoc {
    pub fn to_data(&self) -> Result<SpectralData, Error> {
        check_schema(self.schema)?;
        let w = constants_from(&self.c, &self.d)?;
        let sp = |v: &[SpikeDoc]| -> Result<Vec<Spike>, Error> { v.iter().map(|s| Ok(Spike::new(parse_q(&s.pos)?, parse_q(&s.w)?))).collect() };
        SpectralData::new(w, sp(&self.p)?, sp(&self.q)?)
    }

    pub fn from_data(s: &SpectralData) -> SpectralDoc {
        let w = &s.constants;
        let sp = |v: &[Spike]| {
            v.iter()
                .map(|s| SpikeDoc {
                    pos: s.pos.to_string(),
                    w: s.weight.to_string(),
                })
                .collect()
        };
        SpectralDoc {
            schema: Some(SCHEMA),
            c: [w.c1.to_string(), w.c2.to_string()],
            d: [w.d1.to_string(), w.d2.to_string()],
            p: sp(&s.pspikes),
            q: sp(&s.qspikes),
        }
    }
}

fn poly_doc(p: &ExpPoly) -> Vec<TermDoc> {
    p.terms()
        .map(|(e, c)| TermDoc {
            c: c.to_string(),
            e: [e.a.to_string(), e.b.to_string()],
        })
        .collect()
}

fn poly_from(v: &[TermDoc]) -> Result<ExpPoly, Error> {
    let mut p = ExpPoly::zero();
    for t in v {
        p.add_term(LinForm::new(parse_q(&t.e[0])?, parse_q(&t.e[1])?), parse_q(&t.c)?);
    }
    Ok(p)
}

impl ConfigDoc {
    pub fn from_config(cfg: &FieldConfig) -> ConfigDoc {
        let w = &cfg.constants;
        ConfigDoc {
            schema: SCHEMA,
            algebra: cfg.algebra.to_string(),
            c: [w.c1.to_string(), w.c2.to_string()],
            d: [w.d1.to_string(), w.d2.to_string()],
            fields: cfg
                .fields()
                .map(|(r, v)| {
                    (
                        r.to_string(),
                        RatioDoc {
                            num: poly_doc(v.num()),
                            den: poly_doc(v.den()),
                        },
                    )
                })
                .collect(),
        }
    }

    pub fn to_config(&self) -> Result<FieldConfig, Error> {
        check_schema(Some(self.schema))?;
        let algebra: Algebra = self.algebra.parse()?;
        let mut cfg = FieldConfig::zero(algebra, constants_from(&self.c, &self.d)?);
        for (k, v) in &self.fields {
            let den = poly_from(&v.den)?;
            if den.is_zero() {
                return Err(Error::Input(format!("field {k} has a zero denominator")));
            }
            cfg.set(RootLabel::parse(k)?, ExpRational::new(poly_from(&v.num)?, den)?)?;
        }
        Ok(cfg)
    }
}

/// Canonical JSON text of a configuration (trailing newline included).
pub fn config_to_json(cfg: &FieldConfig) -> String {
    let mut s = serde_json::to_string_pretty(&ConfigDoc::from_config(cfg)).expect("config serializes");
    s.push('\n');
    s
}

pub fn config_from_json(text: &str) -> Result<FieldConfig, Error> {
    let doc: ConfigDoc = serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed configuration JSON: {e}")))?;
    doc.to_config()
}

pub fn spectral_from_json(text: &str) -> Result<SpectralData, Error> {
    let doc: SpectralDoc = serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed spectral JSON: {e}")))?;
    doc.to_data()
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            std::io::stdout().write_all(text.as_bytes()).map_err(|e| Error::Input(format!("stdout: {e}")))?;
            Ok(())
        }
    }
}

/// Evenly spaced exact rationals from `a` to `b` inclusive.
pub fn linspace(a: &Q, b: &Q, n: usize) -> Vec<Q> {
    match n {
        0 => vec![],
        1 => vec![a.clone()],
        _ => (0..n)
            .map(|k| a + (b - a) * Q::from_integer((k as i64).into()) / Q::from_integer(((n - 1) as i64).into()))
            .collect(),
    }
}

/// CSV text with header `t,x,<field>...`; poles become empty cells.
pub fn sample_csv(cfg: &FieldConfig, ts: &[Q], xs: &[Q]) -> Result<String, Error> {
    let labels: Vec<RootLabel> = cfg.fields().map(|(r, _)| *r).collect();
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["t".to_string(), "x".to_string()];
    header.extend(labels.iter().map(|r| r.to_string()));
    let io = |e: csv::Error| Error::Input(format!("csv: {e}"));
    w.write_record(&header).map_err(io)?;
    let ecfg = EvalConfig::default();
    let f64_of = |v: &Q| num_traits::ToPrimitive::to_f64(v).unwrap_or(f64::NAN);
    for t in ts {
        for x in xs {
            let mut row = vec![f64_of(t).to_string(), f64_of(x).to_string()];
            for r in &labels {
                row.push(match cfg.get(*r).eval_with(t, x, &ecfg) {
                    Ok(v) if v.is_finite() => v.to_string(),
                    _ => String::new(),
                });
            }
            w.write_record(&row).map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Input(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

/// One line per check, for the terminal.
pub fn summary(r: &Report) -> String {
    let mut s = String::new();
    for c in &r.checks {
        let tag = if c.gated { "" } else { " (recorded)" };
        let status = serde_json::to_value(c.status).expect("status").as_str().unwrap_or("?").to_string();
        s.push_str(&format!("{status:5} {}{tag}", c.name));
        if !c.failing.is_empty() {
            s.push_str(&format!(" -- failing: {}", c.failing.join(", ")));
        }
        if c.status == verify::Status::Error {
            if let Some(d) = &c.detail {
                s.push_str(&format!(" -- {d}"));
            }
        }
        s.push('\n');
    }
    s.push_str(&format!(
        "{} {}: {} passed, {} failed, {} recorded\n",
        r.suite,
        if r.pass() { "PASS" } else { "FAIL" },
        r.passed,
        r.failed,
        r.recorded
    ));
    s
}

/// Runs one command; returns the process exit code.
pub fn execute(cmd: Command) -> Result<i32, Error> {
    match cmd {
        Command::Construct {
            algebra,
            spectral,
            n1,
            n2,
            out,
        } => {
            let a: Algebra = algebra.parse()?;
            let s = spectral_from_json(&read(&spectral)?)?;
            let cfg = solution_from_tau(&model(a), &s, n1, n2)?;
            write_out(out.as_deref(), &config_to_json(&cfg))?;
            Ok(0)
        }
        Command::Transform { chain, input, out } => {
            let cfg = config_from_json(&read(&input)?)?;
            let ids = chain
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| TransformId::parse_for(cfg.algebra, s))
                .collect::<Result<Vec<_>, _>>()?;
            let res = apply_chain(&ids, &cfg)?;
            write_out(out.as_deref(), &config_to_json(&res))?;
            Ok(0)
        }
        Command::Verify { suite, input, mode, report } => {
            let mode: Mode = mode.parse()?;
            let (rep, always_ok) = match (suite, input) {
                (Some(name), _) => (verify::verify_suite(&name, mode)?, name == "g2-hypothesis"),
                (None, Some(path)) => (verify::verify_config(&config_from_json(&read(&path)?)?, mode), false),
                (None, None) => return Err(Error::Input("either --suite or --in is required".into())),
            };
            let mut json = rep.to_json();
            json.push('\n');
            match report.as_deref() {
                Some(p) => {
                    write_out(Some(p), &json)?;
                    print!("{}", summary(&rep));
                }
                None => write_out(None, &json)?,
            }
            Ok(if rep.pass() || always_ok { 0 } else { 1 })
        }
        Command::Sample {
            input,
            t0,
            t1,
            x0,
            x1,
            nt,
            nx,
            csv,
        } => {
            let cfg = config_from_json(&read(&input)?)?;
            let ts = linspace(&parse_q(&t0)?, &parse_q(&t1)?, nt);
            let xs = linspace(&parse_q(&x0)?, &parse_q(&x1)?, nx);
            write_out(csv.as_deref(), &sample_csv(&cfg, &ts, &xs)?)?;
            Ok(0)
        }
    }
}

/// Parses arguments and runs; errors are printed and mapped to exit codes.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
