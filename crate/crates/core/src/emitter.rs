//! `PSfile` special generation and placement geometry.

use crate::dimen::{format_sp, one_bp, DimenError, Sp};
use crate::parser::BBox;
use crate::scaler::ResolvedSize;

/// Everything needed to place one figure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FigurePlan {
    filename: String,
    bbox: BBox,
    width: Sp,
    height: Sp,
    rwi: u32,
    rhi: Option<u32>,
    clip: bool,
    special: String,
    verbose_note: Option<String>,
    diagnostics: Vec<String>,
}

impl FigurePlan {
    pub fn build(
        filename: &str,
        bbox: BBox,
        size: ResolvedSize,
        clip: bool,
        verbose: bool,
    ) -> Result<FigurePlan, DimenError> {
        let rwi = compute_rwi(size.xsize)?;
        let rhi = if size.rhi_needed {
            Some(compute_rwi(size.ysize)?)
        } else {
            None
        };
        let special = build_special(filename, &bbox, rwi, rhi, clip);
        Ok(FigurePlan {
            filename: filename.to_string(),
            bbox,
            width: size.xsize,
            height: size.ysize,
            rwi,
            rhi,
            clip,
            special,
            verbose_note: verbose.then(|| verbose_note(filename, size.xsize, size.ysize)),
            diagnostics: Vec::new(),
        })
    }

    pub(crate) fn with_diagnostics(mut self, diagnostics: Vec<String>) -> FigurePlan {
        self.diagnostics = diagnostics;
        self
    }

    pub fn filename(&self) -> &str {
        &self.filename
    }

    pub fn bbox(&self) -> &BBox {
        &self.bbox
    }

    pub fn width(&self) -> Sp {
        self.width
    }

    pub fn height(&self) -> Sp {
        self.height
    }

    pub fn rwi(&self) -> u32 {
        self.rwi
    }

    pub fn rhi(&self) -> Option<u32> {
        self.rhi
    }

    pub fn clip(&self) -> bool {
        self.clip
    }

    pub fn special(&self) -> &str {
        &self.special
    }

    pub fn verbose_note(&self) -> Option<&str> {
        self.verbose_note.as_deref()
    }

    /// Warnings collected while planning (missing bounding box, strict
    /// mode notes).
    pub fn diagnostics(&self) -> &[String] {
        &self.diagnostics
    }
}

/// Width in tenths of a big point, truncated: `⌊10·width / 1bp⌋`.
pub fn compute_rwi(width: Sp) -> Result<u32, DimenError> {
    let tenfold = width.checked_mul(10)?;
    Ok(tenfold.div_trunc(one_bp().get()).max(0) as u32)
}

/// The driver special. Coordinates are written back exactly as they were
/// read.
pub fn build_special(
    filename: &str,
    bbox: &BBox,
    rwi: u32,
    rhi: Option<u32>,
    clip: bool,
) -> String {
    let [llx, lly, urx, ury] = bbox.texts();
    let mut special =
        format!("PSfile={filename} llx={llx} lly={lly} urx={urx} ury={ury} rwi={rwi}");
    if let Some(rhi) = rhi {
        special.push_str(&format!(" rhi={rhi}"));
    }
    if clip {
        special.push_str(" clip");
    }
    special
}

/// Box to reserve, `(width, height)`. The graphic sits at its lower left.
pub fn placement(plan: &FigurePlan) -> (Sp, Sp) {
    (plan.width, plan.height)
}

pub fn verbose_note(filename: &str, width: Sp, height: Sp) -> String {
    format!(
        "{filename}: width={}, height={}",
        format_sp(width),
        format_sp(height)
    )
}
