//! Sign samples of `H*`, `a5*`, `a4*` on a `(t, w)` grid, as CSV.

use std::io::{self, Write};

use super::families::{a4_star, a5_star, h_star};
use crate::polycore::rational::{format_rational, int, signum};
use crate::polycore::Rational;

/// Closed rectangle `[t_min, t_max] × [w_min, w_max]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub t_min: Rational,
    pub t_max: Rational,
    pub w_min: Rational,
    pub w_max: Rational,
}

impl Default for Region {
    fn default() -> Self {
        Self { t_min: int(-5), t_max: int(5), w_min: int(-5), w_max: int(5) }
    }
}

fn nodes(lo: &Rational, hi: &Rational, n: usize) -> Vec<Rational> {
    let step = (hi - lo) / int(n as i64 - 1);
    (0..n).map(|k| lo + &step * int(k as i64)).collect()
}

/// Writes `t,w,sgnH,sgnA5,sgnA4` rows over an `nt × nw` grid, with `t` and
/// `w` as exact rationals and signs as -1, 0 or 1.
pub fn emit_figure_data<W: Write>(region: &Region, nt: usize, nw: usize, out: &mut W) -> io::Result<()> {
    if nt < 2 || nw < 2 {
        return Err(io::Error::new(io::ErrorKind::InvalidInput, "grid must be at least 2×2"));
    }
    if region.t_min >= region.t_max || region.w_min >= region.w_max {
        return Err(io::Error::new(io::ErrorKind::InvalidInput, "region must have positive width and height"));
    }
    let (h, a5, a4) = (h_star(), a5_star(), a4_star());
    writeln!(out, "t,w,sgnH,sgnA5,sgnA4")?;
    for w in nodes(&region.w_min, &region.w_max, nw) {
        let (hw, a5w, a4w) = (h.eval_secondary(&w), a5.eval_secondary(&w), a4.eval_secondary(&w));
        for t in nodes(&region.t_min, &region.t_max, nt) {
            writeln!(
                out,
                "{},{},{},{},{}",
                format_rational(&t),
                format_rational(&w),
                signum(&hw.eval(&t)),
                signum(&a5w.eval(&t)),
                signum(&a4w.eval(&t))
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::rat;

    fn rows(region: &Region, nt: usize, nw: usize) -> Vec<String> {
        let mut buf = Vec::new();
        emit_figure_data(region, nt, nw, &mut buf).unwrap();
        String::from_utf8(buf).unwrap().lines().map(str::to_string).collect()
    }

    #[test]
    fn common_zero_at_origin_of_t_on_w_three() {
        let region = Region { t_min: int(0), t_max: int(3), w_min: int(0), w_max: int(3) };
        let rows = rows(&region, 4, 4);
        assert_eq!(rows[0], "t,w,sgnH,sgnA5,sgnA4");
        assert_eq!(rows.len(), 17);
        assert!(rows.iter().any(|r| r.starts_with("0,3,0,0,")));
        // On w = 3, H* = t(16t + 15) is positive for t > 0.
        assert!(rows.iter().filter(|r| r.starts_with("1,3,") || r.starts_with("2,3,")).all(|r| r.split(',').nth(2) == Some("1")));
    }

    #[test]
    fn column_t_two_thirds_is_positive_for_nonnegative_w() {
        let region = Region { t_min: rat(2, 3), t_max: int(1), w_min: int(0), w_max: int(4) };
        let rows = rows(&region, 2, 5);
        assert!(rows.iter().skip(1).filter(|r| r.starts_with("2/3,")).all(|r| r.split(',').nth(2) == Some("1")));
    }

    #[test]
    fn tiny_grid_is_rejected() {
        let mut buf = Vec::new();
        assert!(emit_figure_data(&Region::default(), 1, 5, &mut buf).is_err());
    }
}
