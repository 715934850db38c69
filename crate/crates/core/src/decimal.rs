//! Exact decimal text <-> scaled integer conversion.
//!
//! Weights enter the library as decimal strings and are stored as integers
//! over a common power-of-ten denominator, so every later sum is exact.

/// Most fractional digits accepted in a weight literal.
pub const MAX_FRACTION_DIGITS: u32 = 9;

/// A parsed decimal literal `mantissa / 10^fraction_digits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decimal {
    pub mantissa: i128,
    pub fraction_digits: u32,
}

impl Decimal {
    /// Rewrites the value over `10^digits`. `digits` must be at least
    /// `self.fraction_digits`; returns `None` on overflow.
    pub fn rescale(self, digits: u32) -> Option<i128> {
        debug_assert!(digits >= self.fraction_digits);
        let factor = 10i128.checked_pow(digits - self.fraction_digits)?;
        self.mantissa.checked_mul(factor)
    }
}

/// Parses `[+-]digits[.digits]`. No exponents, no thousands separators.
pub fn parse_decimal(text: &str) -> Result<Decimal, String> {
    let (negative, body) = match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("`{text}` is not a decimal number"));
    }
    let all_digits = |s: &str| s.bytes().all(|c| c.is_ascii_digit());
    if !all_digits(int_part)
        || !all_digits(frac_part)
        || (body.contains('.') && frac_part.is_empty())
    {
        return Err(format!("`{text}` is not a decimal number"));
    }
    let fraction_digits = frac_part.len() as u32;
    if fraction_digits > MAX_FRACTION_DIGITS {
        return Err(format!(
            "`{text}` has more than {MAX_FRACTION_DIGITS} fractional digits"
        ));
    }
    let mut mantissa: i128 = 0;
    for c in int_part.bytes().chain(frac_part.bytes()) {
        mantissa = mantissa
            .checked_mul(10)
            .and_then(|m| m.checked_add(i128::from(c - b'0')))
            .ok_or_else(|| format!("`{text}` is out of range"))?;
    }
    if negative {
        mantissa = -mantissa;
    }
    Ok(Decimal {
        mantissa,
        fraction_digits,
    })
}

/// Brings a batch of literals onto a single power-of-ten scale.
/// Returns the scaled values and the scale.
pub fn common_scale(values: &[Decimal]) -> Option<(Vec<i128>, i64)> {
    let digits = values.iter().map(|d| d.fraction_digits).max().unwrap_or(0);
    let scaled = values
        .iter()
        .map(|d| d.rescale(digits))
        .collect::<Option<Vec<_>>>()?;
    Some((scaled, 10i64.pow(digits)))
}

/// Formats `value / scale` exactly. Power-of-ten scales print as decimals
/// with trailing zeros trimmed; any other scale prints as a reduced fraction.
pub fn format_scaled(value: i128, scale: i64) -> String {
    assert!(scale >= 1, "scale must be positive");
    let scale = i128::from(scale);
    if scale == 1 {
        return value.to_string();
    }
    match power_of_ten(scale) {
        Some(digits) => {
            let sign = if value < 0 { "-" } else { "" };
            let abs = value.unsigned_abs();
            let scale = scale as u128;
            let whole = abs / scale;
            let frac = abs % scale;
            if frac == 0 {
                return format!("{sign}{whole}");
            }
            let frac = format!("{:0width$}", frac, width = digits as usize);
            format!("{sign}{whole}.{}", frac.trim_end_matches('0'))
        }
        None => {
            let g = gcd(value.unsigned_abs(), scale as u128) as i128;
            let (num, den) = (value / g, scale / g);
            if den == 1 {
                num.to_string()
            } else {
                format!("{num}/{den}")
            }
        }
    }
}

fn power_of_ten(mut x: i128) -> Option<u32> {
    let mut digits = 0;
    while x > 1 {
        if x % 10 != 0 {
            return None;
        }
        x /= 10;
        digits += 1;
    }
    Some(digits)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_fractional() {
        assert_eq!(
            parse_decimal("42").unwrap(),
            Decimal {
                mantissa: 42,
                fraction_digits: 0
            }
        );
        assert_eq!(
            parse_decimal("-1.25").unwrap(),
            Decimal {
                mantissa: -125,
                fraction_digits: 2
            }
        );
        assert_eq!(
            parse_decimal("+.5").unwrap(),
            Decimal {
                mantissa: 5,
                fraction_digits: 1
            }
        );
        assert_eq!(
            parse_decimal("3.").unwrap_err(),
            "`3.` is not a decimal number"
        );
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "-", ".", "1e3", "1.2.3", "abc", "0x10", "1.0000000001"] {
            assert!(parse_decimal(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn common_scale_aligns_digits() {
        let ds: Vec<_> = ["1", "0.25", "-3.5"]
            .iter()
            .map(|s| parse_decimal(s).unwrap())
            .collect();
        let (vals, scale) = common_scale(&ds).unwrap();
        assert_eq!(scale, 100);
        assert_eq!(vals, vec![100, 25, -350]);
    }

    #[test]
    fn formats_exactly() {
        assert_eq!(format_scaled(4, 1), "4");
        assert_eq!(format_scaled(150, 100), "1.5");
        assert_eq!(format_scaled(-5, 10), "-0.5");
        assert_eq!(format_scaled(-300, 100), "-3");
        assert_eq!(format_scaled(1, 1_000_000_000), "0.000000001");
        assert_eq!(format_scaled(4, 6), "2/3");
    }
}
