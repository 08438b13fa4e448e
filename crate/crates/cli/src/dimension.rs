use epsfkit_core::dimen::{parse_decimal_strict, times_dimen};
use epsfkit_core::{one_bp, FixedFactor, Sp};

/// Parses `<decimal>bp` or `<decimal>pt` into scaled points.
///
/// `bp` is multiplied onto the 1bp constant like `<n>\pspoints`; `pt` onto
/// 65536sp. Negative sizes are refused.
pub fn parse_dimension(text: &str) -> Result<Sp, String> {
    let (number, unit) = if let Some(n) = text.strip_suffix("bp") {
        (n, one_bp())
    } else if let Some(n) = text.strip_suffix("pt") {
        (n, Sp::ONE_PT)
    } else {
        return Err(format!("`{text}`: expected a size ending in bp or pt"));
    };
    let factor = parse_decimal_strict(number).map_err(|e| format!("`{text}`: {e}"))?;
    if factor.negative && factor.scaled() != 0 {
        return Err(format!("`{text}`: size must not be negative"));
    }
    times_dimen(factor, unit).map_err(|e| format!("`{text}`: {e}"))
}

pub fn parse_factor(text: &str) -> Result<FixedFactor, String> {
    let factor = parse_decimal_strict(text).map_err(|e| e.to_string())?;
    if factor.negative {
        return Err(format!("`{text}`: scale must not be negative"));
    }
    Ok(factor)
}
