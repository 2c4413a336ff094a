/// `x` rounded to 12 significant digits, printed in the shortest form that
/// parses back to that rounded value.
pub fn fmt_sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("valid float");
    format!("{rounded}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(fmt_sig(2.68), "2.68");
        assert_eq!(fmt_sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_sig(123456789.0123456), "123456789.012");
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(-5.5e-7), "-0.00000055");
    }

    #[test]
    fn parses_back_to_the_rounded_value() {
        for x in [std::f64::consts::PI, 1e-20 / 3.0, 7.0e15 / 9.0, -2.5] {
            let s = fmt_sig(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(fmt_sig(back), s);
            assert!(((back - x) / x).abs() < 1e-11);
        }
    }
}
