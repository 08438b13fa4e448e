//! Stateful front end mirroring the macro package's global registers.
//!
//! A [`Session`] holds the pending width and height, the clip flag and the
//! width policy. Every plan consumes the pending sizes, whether it
//! succeeds or not, while clip and policy stay as set.

use std::path::Path;

use crate::dimen::{DimenError, Sp};
use crate::emitter::FigurePlan;
use crate::parser::{
    parse_literal, parse_literal_raw, scan_file, scan_file_raw, scan_path, scan_path_raw, BBox,
    LineSource, ParseError, RawBBox, ScanOptions, ScanOutcome, ScanResult,
};
use crate::scaler::{natural_extent, resolve, ScaleError, SizePolicy, SizeRequest};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlanError {
    #[error("{0}")]
    Unreadable(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Dimen(#[from] DimenError),
    #[error(transparent)]
    Scale(#[from] ScaleError),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SessionOptions {
    pub verbose: bool,
    /// Plain-decimal coordinates only, binary EPS rejected, warnings for
    /// filenames the special cannot represent.
    pub strict: bool,
    /// Reproduce the macros token for token, including the garbage they
    /// store for malformed bounding boxes.
    pub compat_raw: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Session {
    options: SessionOptions,
    xsize: Sp,
    ysize: Sp,
    clip: bool,
    policy: SizePolicy,
}

enum Source<'a, L> {
    Path,
    Lines(&'a mut L),
}

impl Session {
    pub fn new(options: SessionOptions) -> Session {
        Session {
            options,
            ..Session::default()
        }
    }

    pub fn options(&self) -> SessionOptions {
        self.options
    }

    pub fn set_verbose(&mut self, verbose: bool) {
        self.options.verbose = verbose;
    }

    pub fn set_xsize(&mut self, xsize: Sp) {
        self.xsize = xsize;
    }

    pub fn set_ysize(&mut self, ysize: Sp) {
        self.ysize = ysize;
    }

    pub fn clip_on(&mut self) {
        self.clip = true;
    }

    pub fn clip_off(&mut self) {
        self.clip = false;
    }

    pub fn clip(&self) -> bool {
        self.clip
    }

    pub fn set_policy(&mut self, policy: SizePolicy) {
        self.policy = policy;
    }

    /// The request the next plan will use.
    pub fn pending(&self) -> SizeRequest {
        SizeRequest {
            xsize: self.xsize,
            ysize: self.ysize,
            policy: self.policy,
        }
    }

    /// Clears the pending sizes. Clip and policy are left alone.
    pub fn post_resolve_reset(&mut self) {
        self.xsize = Sp::ZERO;
        self.ysize = Sp::ZERO;
    }

    fn scan_opts(&self) -> ScanOptions {
        ScanOptions {
            strict: self.options.strict,
        }
    }

    /// Plans a figure given as a file path or a `[llx lly urx ury]file`
    /// literal. Files are opened relative to the working directory.
    pub fn plan(&mut self, spec: &str) -> Result<FigurePlan, PlanError> {
        self.plan_inner::<crate::parser::IterLines<std::iter::Empty<&[u8]>>>(spec, Source::Path)
    }

    /// Plans a figure whose header lines come from `lines`; `name` is the
    /// filename written into the special.
    pub fn plan_lines<L: LineSource>(
        &mut self,
        name: &str,
        lines: &mut L,
    ) -> Result<FigurePlan, PlanError> {
        self.plan_inner(name, Source::Lines(lines))
    }

    /// Plans a figure against an already known bounding box.
    pub fn plan_bbox(&mut self, filename: &str, bbox: BBox) -> Result<FigurePlan, PlanError> {
        let request = self.pending();
        self.post_resolve_reset();
        self.finish(filename, bbox, request, Vec::new())
    }

    fn plan_inner<L: LineSource>(
        &mut self,
        spec: &str,
        source: Source<'_, L>,
    ) -> Result<FigurePlan, PlanError> {
        let request = self.pending();
        self.post_resolve_reset();
        let mut diagnostics = Vec::new();
        let (bbox, filename) = if self.options.compat_raw {
            let (raw, filename) = match parse_literal_raw(spec)? {
                Some(lit) => lit,
                None => {
                    let outcome = match source {
                        Source::Path => scan_path_raw(Path::new(spec), spec, self.scan_opts()),
                        Source::Lines(lines) => scan_file_raw(lines, spec),
                    };
                    (self.take_scan(outcome, &mut diagnostics)?, spec.to_string())
                }
            };
            (RawBBox::resolve(&raw)?, filename)
        } else {
            match parse_literal(spec, self.options.strict)? {
                Some(lit) => lit,
                None => {
                    let outcome = match source {
                        Source::Path => scan_path(Path::new(spec), spec, self.scan_opts()),
                        Source::Lines(lines) => scan_file(lines, spec, self.scan_opts()),
                    };
                    (self.take_scan(outcome, &mut diagnostics)?, spec.to_string())
                }
            }
        };
        if self.options.strict && filename.chars().any(char::is_whitespace) {
            diagnostics.push(format!(
                "filename `{filename}` contains whitespace; the special cannot represent it"
            ));
        }
        self.finish(&filename, bbox, request, diagnostics)
    }

    fn take_scan<B>(
        &self,
        outcome: ScanOutcome<B>,
        diagnostics: &mut Vec<String>,
    ) -> Result<B, PlanError> {
        if let Some(msg) = outcome.diagnostic(self.options.verbose) {
            diagnostics.push(msg.to_string());
        }
        match outcome.result {
            ScanResult::Found(b) | ScanResult::DefaultsUsed { bbox: b, .. } => Ok(b),
            ScanResult::Unreadable(msg) => Err(PlanError::Unreadable(msg)),
        }
    }

    fn finish(
        &self,
        filename: &str,
        bbox: BBox,
        request: SizeRequest,
        diagnostics: Vec<String>,
    ) -> Result<FigurePlan, PlanError> {
        let (tsize, rsize) = natural_extent(&bbox)?;
        let size = resolve(&request, tsize, rsize)?;
        let plan = FigurePlan::build(filename, bbox, size, self.clip, self.options.verbose)?;
        Ok(plan.with_diagnostics(diagnostics))
    }
}
