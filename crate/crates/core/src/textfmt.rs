//! Deterministic text formatting shared by the report types and the CLI.

/// Formats a float with 12 significant digits, `%g`-style: positional
/// notation for moderate exponents, scientific otherwise, trailing zeros
/// trimmed, `-0` collapsed to `0`. Reports and golden files rely on this
/// being byte-stable.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{x:.11e}");
    let (mant, exp) = sci.split_once('e').expect("float in scientific notation");
    let exp: i32 = exp.parse().expect("valid exponent");
    let sign = if mant.starts_with('-') { "-" } else { "" };
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    if digits.is_empty() {
        return "0".to_string();
    }
    if (-4..12).contains(&exp) {
        let e = exp as isize;
        let nd = digits.len() as isize;
        if e >= nd - 1 {
            format!("{sign}{digits}{}", "0".repeat((e - (nd - 1)) as usize))
        } else if e >= 0 {
            let (int_part, frac) = digits.split_at((e + 1) as usize);
            format!("{sign}{int_part}.{frac}")
        } else {
            format!("{sign}0.{}{digits}", "0".repeat((-e - 1) as usize))
        }
    } else {
        let (first, rest) = digits.split_at(1);
        if rest.is_empty() {
            format!("{sign}{first}e{exp}")
        } else {
            format!("{sign}{first}.{rest}e{exp}")
        }
    }
}

/// Space-separated [`sig12`] rendering of a float slice.
pub fn sig12_list(xs: &[f64]) -> String {
    xs.iter().map(|&x| sig12(x)).collect::<Vec<_>>().join(" ")
}
