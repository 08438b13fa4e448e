mod dimension;
mod manifest;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use epsfkit_core::parser::{parse_literal_raw, scan_path_raw};
use epsfkit_core::{
    parse_literal, scan_path, BBoxSource, FigurePlan, PlanError, ScanOptions, ScanOutcome,
    ScanResult, Session, SessionOptions, SizePolicy, Sp,
};
use serde::Serialize;

use crate::dimension::{parse_dimension, parse_factor};
use crate::report::{json, BoxJson, Format, PlanJson};

const EXIT_DEFAULTS: u8 = 1;
const EXIT_UNREADABLE: u8 = 2;
const EXIT_PLAN: u8 = 3;

/// Compute DVI `\special`s and placement boxes for EPS figures.
#[derive(Debug, Parser)]
#[command(name = "epsfkit", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Print the computed size and missing-box warnings on stderr.
    /// Also enabled by EPSFKIT_VERBOSE=1.
    #[arg(long, global = true)]
    verbose: bool,
    /// Accept only plain decimal coordinates and reject binary EPS headers.
    #[arg(long, global = true)]
    strict: bool,
    /// Reproduce the original macros' token handling exactly.
    #[arg(long, global = true)]
    compat_raw: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report the bounding box of each file.
    Bbox {
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Plan one figure: a path, or `[llx lly urx ury]file` to skip reading it.
    Plan {
        spec: String,
        /// Target width, e.g. `200bp` or `144pt`.
        #[arg(long, value_parser = parse_dimension)]
        width: Option<Sp>,
        /// Target height.
        #[arg(long, value_parser = parse_dimension)]
        height: Option<Sp>,
        /// Scale the natural width by this factor when no size is given.
        #[arg(long, value_parser = parse_factor, conflicts_with_all = ["width", "height"])]
        scale: Option<epsfkit_core::FixedFactor>,
        #[arg(long)]
        clip: bool,
    },
    /// Plan every figure in a JSON Lines manifest.
    Batch { manifest: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let verbose = cli.common.verbose || std::env::var("EPSFKIT_VERBOSE").is_ok_and(|v| v == "1");
    let options = SessionOptions {
        verbose,
        strict: cli.common.strict,
        compat_raw: cli.common.compat_raw,
    };
    let format = cli.common.format;
    let code = match cli.command {
        Command::Bbox { files } => bbox(&files, options, format),
        Command::Plan {
            spec,
            width,
            height,
            scale,
            clip,
        } => {
            let mut session = Session::new(options);
            session.set_xsize(width.unwrap_or(Sp::ZERO));
            session.set_ysize(height.unwrap_or(Sp::ZERO));
            if let Some(factor) = scale {
                session.set_policy(SizePolicy::ScaleFactor(factor));
            }
            if clip {
                session.clip_on();
            }
            plan(&mut session, &spec, format)
        }
        Command::Batch { manifest } => match batch(&manifest, options, format) {
            Ok(code) => code,
            Err(e) => {
                eprintln!("epsfkit: {e:#}");
                EXIT_UNREADABLE
            }
        },
    };
    ExitCode::from(code)
}

#[derive(Serialize)]
struct BboxJson<'a> {
    file: &'a str,
    #[serde(flatten)]
    bbox: Option<BoxJson<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn bbox(files: &[String], options: SessionOptions, format: Format) -> u8 {
    let opts = ScanOptions {
        strict: options.strict,
    };
    let mut worst = 0;
    for file in files {
        let found = if options.compat_raw {
            match parse_literal_raw(file) {
                Ok(Some((raw, _))) => Ok((raw.tokens.clone(), raw.source)),
                Ok(None) => outcome(scan_path_raw(file, file, opts), options.verbose, |b| {
                    (b.tokens.clone(), b.source)
                }),
                Err(e) => Err((EXIT_PLAN, e.to_string())),
            }
        } else {
            match parse_literal(file, options.strict) {
                Ok(Some((b, _))) => Ok((b.texts().map(String::from), b.source)),
                Ok(None) => outcome(scan_path(file, file, opts), options.verbose, |b| {
                    (b.texts().map(String::from), b.source)
                }),
                Err(e) => Err((EXIT_PLAN, e.to_string())),
            }
        };
        match found {
            Ok((texts, source)) => {
                if source == BBoxSource::Default {
                    worst = worst.max(EXIT_DEFAULTS);
                }
                let texts = texts.each_ref().map(String::as_str);
                match format {
                    Format::Text => println!("{}", report::bbox_text(file, texts, source)),
                    Format::Json => println!(
                        "{}",
                        json(&BboxJson {
                            file,
                            bbox: Some(BoxJson::new(texts, source)),
                            error: None,
                        })
                    ),
                }
            }
            Err((code, msg)) => {
                worst = worst.max(code);
                eprintln!("epsfkit: {msg}");
                if format == Format::Json {
                    println!(
                        "{}",
                        json(&BboxJson {
                            file,
                            bbox: None,
                            error: Some(msg),
                        })
                    );
                }
            }
        }
    }
    worst
}

fn outcome<B>(
    outcome: ScanOutcome<B>,
    verbose: bool,
    parts: impl Fn(&B) -> ([String; 4], BBoxSource),
) -> Result<([String; 4], BBoxSource), (u8, String)> {
    if let Some(msg) = outcome.diagnostic(verbose) {
        if outcome.bbox().is_some() {
            eprintln!("epsfkit: {msg}");
        }
    }
    match &outcome.result {
        ScanResult::Found(b) | ScanResult::DefaultsUsed { bbox: b, .. } => Ok(parts(b)),
        ScanResult::Unreadable(msg) => Err((EXIT_UNREADABLE, msg.clone())),
    }
}

fn exit_code(err: &PlanError) -> u8 {
    match err {
        PlanError::Unreadable(_) => EXIT_UNREADABLE,
        _ => EXIT_PLAN,
    }
}

fn print_plan(plan: &FigurePlan, format: Format) {
    for msg in plan.diagnostics() {
        eprintln!("epsfkit: {msg}");
    }
    if let Some(note) = plan.verbose_note() {
        eprintln!("{note}");
    }
    match format {
        Format::Text => println!("{}", report::plan_text(plan)),
        Format::Json => println!("{}", json(&PlanJson::new(plan))),
    }
}

fn plan(session: &mut Session, spec: &str, format: Format) -> u8 {
    match session.plan(spec) {
        Ok(plan) => {
            print_plan(&plan, format);
            0
        }
        Err(e) => {
            eprintln!("epsfkit: {spec}: {e}");
            exit_code(&e)
        }
    }
}

#[derive(Serialize)]
struct BatchJson<'a> {
    line: usize,
    figure: Option<&'a str>,
    #[serde(flatten)]
    plan: Option<PlanJson<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn batch(path: &PathBuf, options: SessionOptions, format: Format) -> anyhow::Result<u8> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read manifest {}", path.display()))?;
    let (mut ok, mut failed) = (0usize, 0usize);
    for record in manifest::parse(&text) {
        let figure = record.entry.as_ref().ok().map(|e| e.figure.as_str());
        let result = record.entry.clone().and_then(|entry| {
            let mut session = Session::new(options);
            if let Some(w) = &entry.width {
                session.set_xsize(parse_dimension(w)?);
            }
            if let Some(h) = &entry.height {
                session.set_ysize(parse_dimension(h)?);
            }
            if entry.clip {
                session.clip_on();
            }
            session.plan(&entry.figure).map_err(|e| e.to_string())
        });
        let label = figure.map_or_else(|| format!("line {}", record.line), str::to_string);
        match &result {
            Ok(plan) => {
                ok += 1;
                for msg in plan.diagnostics() {
                    eprintln!("epsfkit: {label}: {msg}");
                }
                if let Some(note) = plan.verbose_note() {
                    eprintln!("{note}");
                }
            }
            Err(_) => failed += 1,
        }
        match format {
            Format::Text => match &result {
                Ok(plan) => println!("{label}: {}", plan.special()),
                Err(msg) => println!("{label}: error: {msg}"),
            },
            Format::Json => println!(
                "{}",
                json(&BatchJson {
                    line: record.line,
                    figure,
                    plan: result.as_ref().ok().map(PlanJson::new),
                    error: result.as_ref().err().cloned(),
                })
            ),
        }
    }
    match format {
        Format::Text => println!("{ok} ok, {failed} failed"),
        Format::Json => println!("{}", serde_json::json!({ "ok": ok, "failed": failed })),
    }
    Ok(if failed > 0 { 1 } else { 0 })
}
