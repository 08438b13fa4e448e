//! Scaled-point dimension arithmetic, reproducing TeX's integer routines.
//!
//! Every dimension is a signed count of scaled points (`sp`), with
//! 65536 sp to the point. Nothing in this module touches floating point:
//! decimal scanning, factor multiplication and printing all follow the
//! integer algorithms TeX itself uses, so results agree with a TeX run
//! down to the last scaled point.

use std::fmt;
use std::str::FromStr;

/// Scaled points per printer's point.
pub const UNITY: i32 = 1 << 16;

/// Largest legal dimension magnitude, `\maxdimen` = 16383.99998pt.
pub const MAX_DIMEN: i32 = (1 << 30) - 1;

/// Largest integer TeX's number scanner accepts.
const INFINITY: u32 = i32::MAX as u32;

/// At most this many fraction digits take part in rounding.
const MAX_FRACTION_DIGITS: usize = 17;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DimenError {
    #[error("malformed number `{0}`")]
    Malformed(String),
    #[error("number too big: `{0}`")]
    NumberTooBig(String),
    #[error("arithmetic overflow: {lhs} times {rhs}")]
    Overflow { lhs: String, rhs: String },
    #[error("dimension too large: {0}sp exceeds \\maxdimen")]
    OutOfRange(i64),
}

/// A dimension in scaled points, always within `±MAX_DIMEN`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sp(i32);

impl Sp {
    pub const ZERO: Sp = Sp(0);
    pub const ONE_PT: Sp = Sp(UNITY);
    pub const MAX: Sp = Sp(MAX_DIMEN);

    /// Range-checked constructor.
    pub fn new(sp: i64) -> Result<Sp, DimenError> {
        if sp.abs() > MAX_DIMEN as i64 {
            Err(DimenError::OutOfRange(sp))
        } else {
            Ok(Sp(sp as i32))
        }
    }

    /// Constructor for literals known to be in range.
    ///
    /// Panics if `|sp| > MAX_DIMEN`.
    pub const fn from_sp(sp: i32) -> Sp {
        assert!(
            sp >= -MAX_DIMEN && sp <= MAX_DIMEN,
            "dimension out of range"
        );
        Sp(sp)
    }

    pub const fn get(self) -> i32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn checked_add(self, rhs: Sp) -> Result<Sp, DimenError> {
        Sp::new(self.0 as i64 + rhs.0 as i64)
    }

    pub fn checked_sub(self, rhs: Sp) -> Result<Sp, DimenError> {
        Sp::new(self.0 as i64 - rhs.0 as i64)
    }

    /// `\multiply`: integer times dimension, failing past `\maxdimen`
    /// the way `nx_plus_y` does.
    pub fn checked_mul(self, n: i32) -> Result<Sp, DimenError> {
        Sp::new(self.0 as i64 * n as i64).map_err(|_| DimenError::Overflow {
            lhs: n.to_string(),
            rhs: format_sp(self),
        })
    }

    /// `\divide`: truncates toward zero.
    ///
    /// Panics if `n` is zero.
    pub fn div_trunc(self, n: i32) -> i32 {
        (self.0 as i64 / n as i64) as i32
    }
}

impl fmt::Display for Sp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_sp(*self))
    }
}

/// A scanned decimal constant, as TeX holds it while scanning
/// `<factor><internal dimen>`: an integer part, a 16-bit binary
/// fraction and a sign.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct FixedFactor {
    pub integer_part: u32,
    /// Fraction in units of 2^-16, always below 65536.
    pub fraction: u32,
    pub negative: bool,
}

impl FixedFactor {
    pub const ONE: FixedFactor = FixedFactor::integer(1);

    pub const fn integer(n: u32) -> FixedFactor {
        FixedFactor {
            integer_part: n,
            fraction: 0,
            negative: false,
        }
    }

    /// Value in units of 2^-16, signed.
    pub fn scaled(&self) -> i64 {
        let mag = ((self.integer_part as i64) << 16) + self.fraction as i64;
        if self.negative {
            -mag
        } else {
            mag
        }
    }
}

impl fmt::Display for FixedFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write!(f, "{}", self.integer_part)?;
        let digits = fraction_digits(self.fraction as i32);
        if digits != "0" {
            write!(f, ".{digits}")?;
        }
        Ok(())
    }
}

impl FromStr for FixedFactor {
    type Err = DimenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_decimal(s)
    }
}

/// TeX's `round_decimals`: the first 17 digits of a decimal fraction,
/// rounded half-up to a multiple of 2^-16.
fn round_decimals(digits: &[u8]) -> u32 {
    let mut a: u32 = 0;
    for &d in digits.iter().take(MAX_FRACTION_DIGITS).rev() {
        a = (a + d as u32 * (2 * UNITY as u32)) / 10;
    }
    a.div_ceil(2)
}

/// Scans a decimal constant with TeX's number grammar: any run of `+`/`-`
/// signs, then digits with an optional `.` or `,` fraction. A bare
/// separator is zero, as in TeX.
pub fn parse_decimal(text: &str) -> Result<FixedFactor, DimenError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut negative = false;
    while pos < bytes.len() && matches!(bytes[pos], b'+' | b'-') {
        negative ^= bytes[pos] == b'-';
        pos += 1;
    }
    let int_start = pos;
    let mut integer_part: u32 = 0;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        let d = (bytes[pos] - b'0') as u32;
        integer_part = integer_part
            .checked_mul(10)
            .and_then(|v| v.checked_add(d))
            .filter(|&v| v <= INFINITY)
            .ok_or_else(|| DimenError::NumberTooBig(text.to_string()))?;
        pos += 1;
    }
    let had_integer = pos > int_start;
    let mut fraction = 0;
    if pos < bytes.len() && matches!(bytes[pos], b'.' | b',') {
        pos += 1;
        let frac_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let digits: Vec<u8> = bytes[frac_start..pos].iter().map(|b| b - b'0').collect();
        fraction = round_decimals(&digits);
    } else if !had_integer {
        return Err(DimenError::Malformed(text.to_string()));
    }
    if pos != bytes.len() {
        return Err(DimenError::Malformed(text.to_string()));
    }
    // A fraction of .99999999 rounds up to a whole unit.
    if fraction >= UNITY as u32 {
        integer_part = integer_part
            .checked_add(1)
            .ok_or_else(|| DimenError::NumberTooBig(text.to_string()))?;
        fraction -= UNITY as u32;
    }
    Ok(FixedFactor {
        integer_part,
        fraction,
        negative,
    })
}

/// Conservative grammar for strict mode: `[+-]?digits(.digits)?` or
/// `[+-]?.digits`.
pub fn parse_decimal_strict(text: &str) -> Result<FixedFactor, DimenError> {
    let body = text.strip_prefix(['+', '-']).unwrap_or(text);
    let (int, frac) = match body.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (body, None),
    };
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    let ok = all_digits(int)
        && match frac {
            Some(f) => !f.is_empty() && all_digits(f),
            None => !int.is_empty(),
        };
    if !ok {
        return Err(DimenError::Malformed(text.to_string()));
    }
    parse_decimal(text)
}

/// `<factor><dimen>`: `sign × (n·d + ⌊f·d / 2^16⌋)`, the fractional part
/// truncated toward zero as `xn_over_d` does.
pub fn times_dimen(factor: FixedFactor, d: Sp) -> Result<Sp, DimenError> {
    let mag = (d.0 as i64).abs();
    let value = factor.integer_part as i64 * mag + ((factor.fraction as i64 * mag) >> 16);
    if value > MAX_DIMEN as i64 {
        return Err(DimenError::Overflow {
            lhs: factor.to_string(),
            rhs: format_sp(d),
        });
    }
    let negative = factor.negative != (d.0 < 0);
    Ok(Sp(if negative { -value } else { value } as i32))
}

/// The value TeX assigns to `1bp`: 7227/7200 pt, scanned with the
/// truncating num/denom conversion.
pub const fn one_bp() -> Sp {
    const NUM: i32 = 7227;
    const DENOM: i32 = 7200;
    let whole = NUM / DENOM;
    let remainder = NUM % DENOM;
    let fraction = (UNITY * remainder) / DENOM;
    Sp(whole * UNITY + fraction)
}

fn fraction_digits(frac: i32) -> String {
    let mut out = String::new();
    let mut s = 10 * frac + 5;
    let mut delta = 10;
    loop {
        if delta > UNITY {
            // round the last digit
            s += 0x8000 - 50000;
        }
        out.push(char::from(b'0' + (s / UNITY) as u8));
        s = 10 * (s % UNITY);
        delta *= 10;
        if s <= delta {
            break;
        }
    }
    out
}

/// `\the` applied to a dimension: TeX's `print_scaled` followed by `pt`.
pub fn format_sp(d: Sp) -> String {
    let mut out = String::new();
    let mut s = d.0;
    if s < 0 {
        out.push('-');
        s = -s;
    }
    out.push_str(&(s / UNITY).to_string());
    out.push('.');
    out.push_str(&fraction_digits(s % UNITY));
    out.push_str("pt");
    out
}
