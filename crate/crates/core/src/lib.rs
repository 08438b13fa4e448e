//! Encapsulated PostScript figure inclusion, computed the way the plain TeX
//! `epsf` macros compute it.
//!
//! The pipeline has four stages:
//!
//! * [`parser`] finds the `%%BoundingBox` in an EPS header (or takes a
//!   literal `[llx lly urx ury]file` override),
//! * [`scaler`] turns the box and any requested width/height into a final
//!   size using TeX's integer arithmetic,
//! * [`emitter`] writes the `PSfile=… rwi=…` driver special,
//! * [`session`] strings them together and keeps the pending-size and clip
//!   state between figures.
//!
//! All dimension arithmetic lives in [`dimen`] and is exact to the scaled
//! point.
//!
//! ```
//! use epsfkit_core::{IterLines, Session};
//!
//! let header = ["%!PS-Adobe-3.0 EPSF-3.0", "%%BoundingBox: 72 72 540 720"];
//! let mut session = Session::default();
//! let plan = session.plan_lines("fig.eps", &mut IterLines(header.iter())).unwrap();
//! assert_eq!(plan.special(), "PSfile=fig.eps llx=72 lly=72 urx=540 ury=720 rwi=4680");
//! ```

pub mod dimen;
pub mod emitter;
pub mod parser;
pub mod scaler;
pub mod session;

pub use dimen::{format_sp, one_bp, parse_decimal, times_dimen, DimenError, FixedFactor, Sp};
pub use emitter::{build_special, compute_rwi, placement, verbose_note, FigurePlan};
pub use parser::{
    parse_literal, scan_file, scan_path, BBox, BBoxSource, IterLines, LineSource, ParseError,
    RawBBox, ReaderLines, ScanOptions, ScanOutcome, ScanResult,
};
pub use scaler::{
    mul_div, natural_extent, resolve, ResolvedSize, ScaleError, SizePolicy, SizeRequest,
};
pub use session::{PlanError, Session, SessionOptions};
