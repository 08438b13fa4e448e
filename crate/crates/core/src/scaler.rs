//! Figure size resolution.
//!
//! Given the natural extent of the bounding box and whatever width or
//! height the caller asked for, pick the final box size. When only one
//! side is constrained the other is scaled to keep the aspect ratio, using
//! a binary long division that never forms the full `y·t` product.

use crate::dimen::{one_bp, times_dimen, DimenError, FixedFactor, Sp};
use crate::parser::BBox;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScaleError {
    #[error(transparent)]
    Dimen(#[from] DimenError),
    #[error("degenerate bounding box: natural size {width}sp x {height}sp")]
    Degenerate { width: i32, height: i32 },
    #[error("requested size must not be negative, got {0}")]
    NegativeSize(Sp),
    #[error("scaling operands must be positive: {y}, {t}, {r}")]
    NonPositive { y: Sp, t: Sp, r: Sp },
}

/// Replacement for the width hook: computes the effective requested
/// width from the natural width and height.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum SizePolicy {
    /// Use the requested width as is.
    #[default]
    Passthrough,
    /// Always request the natural width.
    NaturalWidth,
    FixedWidth(Sp),
    /// Request a multiple of the natural width.
    ScaleFactor(FixedFactor),
}

impl SizePolicy {
    pub fn apply(&self, requested: Sp, tsize: Sp) -> Result<Sp, ScaleError> {
        Ok(match *self {
            SizePolicy::Passthrough => requested,
            SizePolicy::NaturalWidth => tsize,
            SizePolicy::FixedWidth(w) => w,
            SizePolicy::ScaleFactor(f) => times_dimen(f, tsize)?,
        })
    }
}

/// Requested dimensions; zero means "not set".
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SizeRequest {
    pub xsize: Sp,
    pub ysize: Sp,
    pub policy: SizePolicy,
}

impl SizeRequest {
    pub fn new(xsize: Sp, ysize: Sp) -> SizeRequest {
        SizeRequest {
            xsize,
            ysize,
            policy: SizePolicy::Passthrough,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResolvedSize {
    pub xsize: Sp,
    pub ysize: Sp,
    /// Both sides were fixed by the caller, so the driver also needs the
    /// height.
    pub rhi_needed: bool,
}

/// Natural width and height of the box. Each coordinate is converted to
/// scaled points on its own before subtracting.
pub fn natural_extent(bbox: &BBox) -> Result<(Sp, Sp), ScaleError> {
    let bp = one_bp();
    let tsize =
        times_dimen(bbox.urx.value(), bp)?.checked_sub(times_dimen(bbox.llx.value(), bp)?)?;
    let rsize =
        times_dimen(bbox.ury.value(), bp)?.checked_sub(times_dimen(bbox.lly.value(), bp)?)?;
    if tsize.get() <= 0 || rsize.get() <= 0 {
        return Err(ScaleError::Degenerate {
            width: tsize.get(),
            height: rsize.get(),
        });
    }
    Ok((tsize, rsize))
}

/// `y·t/r` by whole-part multiplication followed by bitwise long division
/// of the remainder. `h` is halved before each step and the loop stops once
/// it reaches zero, so the result is a slight underestimate.
pub fn mul_div(y: Sp, t: Sp, r: Sp) -> Result<Sp, ScaleError> {
    if y.get() <= 0 || t.get() <= 0 || r.get() <= 0 {
        return Err(ScaleError::NonPositive { y, t, r });
    }
    let (y, t, r) = (y.get() as i64, t.get() as i64, r.get() as i64);
    let q = t / r;
    let mut acc = Sp::from_sp(y as i32).checked_mul(q as i32)?.get() as i64;
    let mut rem = t - q * r;
    let mut h = y;
    loop {
        rem += rem;
        h /= 2;
        if h == 0 {
            break;
        }
        if rem >= r {
            rem -= r;
            acc += h;
        }
    }
    Ok(Sp::new(acc)?)
}

/// Final box size for a request against a natural extent.
pub fn resolve(req: &SizeRequest, tsize: Sp, rsize: Sp) -> Result<ResolvedSize, ScaleError> {
    if tsize.get() <= 0 || rsize.get() <= 0 {
        return Err(ScaleError::Degenerate {
            width: tsize.get(),
            height: rsize.get(),
        });
    }
    let xsize = req.policy.apply(req.xsize, tsize)?;
    let ysize = req.ysize;
    for s in [xsize, ysize] {
        if s.get() < 0 {
            return Err(ScaleError::NegativeSize(s));
        }
    }
    Ok(match (xsize.is_zero(), ysize.is_zero()) {
        (true, true) => ResolvedSize {
            xsize: tsize,
            ysize: rsize,
            rhi_needed: false,
        },
        (true, false) => ResolvedSize {
            xsize: mul_div(ysize, tsize, rsize)?,
            ysize,
            rhi_needed: false,
        },
        (false, true) => ResolvedSize {
            xsize,
            ysize: mul_div(xsize, rsize, tsize)?,
            rhi_needed: false,
        },
        (false, false) => ResolvedSize {
            xsize,
            ysize,
            rhi_needed: true,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{BBox, BBoxSource};

    fn sp(v: i32) -> Sp {
        Sp::from_sp(v)
    }

    fn bbox(t: [&str; 4]) -> BBox {
        BBox::from_tokens(&t, BBoxSource::Header, false).unwrap()
    }

    #[test]
    fn natural_extent_examples() {
        assert_eq!(
            natural_extent(&bbox(["72", "72", "540", "720"])).unwrap(),
            (sp(30785508), sp(42626088))
        );
        assert_eq!(
            natural_extent(&bbox(["0", "0", "1", "1"])).unwrap(),
            (sp(65781), sp(65781))
        );
        assert!(matches!(
            natural_extent(&bbox(["10", "10", "10", "20"])),
            Err(ScaleError::Degenerate { width: 0, .. })
        ));
        assert!(matches!(
            natural_extent(&bbox(["10", "30", "20", "20"])),
            Err(ScaleError::Degenerate { .. })
        ));
    }

    #[test]
    fn natural_extent_converts_before_subtracting() {
        // 0.5bp and 1bp truncate separately: 65781 - 32890 = 32891,
        // not the 32890 a direct conversion of 0.5 would give.
        let (t, _) = natural_extent(&bbox(["0.5", "0", "1", "1"])).unwrap();
        assert_eq!(t.get(), 65781 - 32890);
    }

    #[test]
    fn natural_extent_negative_coordinates() {
        let (t, r) = natural_extent(&bbox(["-10", "-20", "10", "20"])).unwrap();
        assert_eq!(t.get(), 20 * 65781);
        assert_eq!(r.get(), 40 * 65781);
    }

    #[test]
    fn natural_extent_overflow() {
        assert!(matches!(
            natural_extent(&bbox(["-16000", "0", "16000", "1"])),
            Err(ScaleError::Dimen(_))
        ));
    }

    #[test]
    fn mul_div_examples() {
        // q = 0, so everything comes from the halving loop; it lands 4sp
        // under the exact quotient 30785508
        assert_eq!(
            mul_div(sp(42626088), sp(30785508), sp(42626088)).unwrap(),
            sp(30785504)
        );
        assert_eq!(mul_div(sp(100), sp(200), sp(100)).unwrap(), sp(200));
        // trace: q=0, rem=1, h=3 -> rem=2,h=1 (2<3) -> h=0 stop
        assert_eq!(mul_div(sp(3), sp(1), sp(3)).unwrap(), sp(0));
        assert_eq!(mul_div(sp(1), sp(5), sp(3)).unwrap(), sp(1));
    }

    #[test]
    fn mul_div_overflow_and_domain() {
        assert!(matches!(
            mul_div(sp(1 << 20), sp(1 << 20), sp(1)),
            Err(ScaleError::Dimen(DimenError::Overflow { .. }))
        ));
        assert!(matches!(
            mul_div(sp(0), sp(1), sp(1)),
            Err(ScaleError::NonPositive { .. })
        ));
    }

    #[test]
    fn resolve_cases() {
        let (t, r) = (sp(30785508), sp(42626088));
        let natural = resolve(&SizeRequest::default(), t, r).unwrap();
        assert_eq!(
            natural,
            ResolvedSize {
                xsize: t,
                ysize: r,
                rhi_needed: false
            }
        );

        // 324bp high: exact width is 234bp = 15392754sp, the loop
        // truncates to 15392749sp
        let by_height = resolve(&SizeRequest::new(Sp::ZERO, sp(21313044)), t, r).unwrap();
        assert_eq!(by_height.xsize, sp(15392749));
        assert_eq!(by_height.ysize, sp(21313044));
        assert!(!by_height.rhi_needed);

        let by_width = resolve(&SizeRequest::new(sp(15392754), Sp::ZERO), t, r).unwrap();
        assert_eq!(by_width.ysize, sp(21313035));

        let both = resolve(&SizeRequest::new(t, r), t, r).unwrap();
        assert_eq!((both.xsize, both.ysize, both.rhi_needed), (t, r, true));
    }

    #[test]
    fn resolve_policies() {
        let (t, r) = (sp(30785508), sp(42626088));
        let req = |policy| SizeRequest {
            xsize: sp(1000),
            ysize: Sp::ZERO,
            policy,
        };
        let natural = resolve(&req(SizePolicy::NaturalWidth), t, r).unwrap();
        assert_eq!(natural.xsize, t);
        assert_eq!(natural.ysize, mul_div(t, r, t).unwrap());

        let fixed = resolve(&req(SizePolicy::FixedWidth(sp(65536))), t, r).unwrap();
        assert_eq!(fixed.xsize, sp(65536));

        let half = FixedFactor {
            integer_part: 0,
            fraction: 32768,
            negative: false,
        };
        let scaled = resolve(&req(SizePolicy::ScaleFactor(half)), t, r).unwrap();
        assert_eq!(scaled.xsize, sp(30785508 / 2));
        assert_eq!(scaled.ysize, sp(21313035));

        // a policy that yields zero falls back to the natural size
        let zero = resolve(&req(SizePolicy::FixedWidth(Sp::ZERO)), t, r).unwrap();
        assert_eq!(zero.xsize, t);

        let negative = resolve(&req(SizePolicy::FixedWidth(sp(-1))), t, r);
        assert!(matches!(negative, Err(ScaleError::NegativeSize(_))));
    }

    #[test]
    fn resolve_rejects_degenerate() {
        assert!(resolve(&SizeRequest::default(), Sp::ZERO, sp(1)).is_err());
    }
}
