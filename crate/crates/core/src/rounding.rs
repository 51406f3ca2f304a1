//! Decimal half-up rounding for display.
//!
//! `format!("{:.2}", x)` rounds the exact binary value, so `2.675` (stored as
//! `2.67499999...`) prints as `2.67`. Printed tables here round the shortest
//! round-trip decimal form of the value instead, half away from zero, so
//! `2.675` prints as `2.68`.

/// Formats `x` with exactly `precision` fractional digits, rounding half-up
/// on its shortest decimal representation.
pub fn round_half_up(x: f64, precision: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("`{:e}` always has an exponent");
    let exp: i64 = exp.parse().expect("integer exponent");
    let mut digits: Vec<u8> = mantissa.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();

    // value = 0.d1d2d3... × 10^point
    let mut point = exp + 1;
    if point < 0 {
        let mut padded = vec![0u8; (-point) as usize];
        padded.extend(digits);
        digits = padded;
        point = 0;
    }
    let mut point = point as usize;
    let keep = point + precision;
    if digits.len() <= keep {
        digits.resize(keep + 1, 0);
    }
    let round_up = digits[keep] >= 5;
    digits.truncate(keep);
    if round_up {
        let mut i = keep;
        loop {
            if i == 0 {
                digits.insert(0, 1);
                point += 1;
                break;
            }
            i -= 1;
            if digits[i] == 9 {
                digits[i] = 0;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }

    let mut out = String::with_capacity(digits.len() + 3);
    if x.is_sign_negative() && digits.iter().any(|&d| d != 0) {
        out.push('-');
    }
    let int_part = &digits[..point];
    let first_nonzero = int_part.iter().position(|&d| d != 0).unwrap_or(int_part.len());
    if first_nonzero == int_part.len() {
        out.push('0');
    } else {
        out.extend(int_part[first_nonzero..].iter().map(|&d| char::from(b'0' + d)));
    }
    if precision > 0 {
        out.push('.');
        out.extend(digits[point..].iter().map(|&d| char::from(b'0' + d)));
    }
    out
}
