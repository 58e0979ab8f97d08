//! Real solutions of `a8 = −1, a1 = 0, a_j = 0` (`j = 4, 5`) for
//! `(x+u)^6 (x−w)^2 (x−ξ)`, by exact elimination.
//!
//! `a8 = 6u − 2w − ξ`, so `a8 = −1` gives `ξ = 6u − 2w + 1` exactly. The two
//! remaining equations become polynomials in `(w, u)`; their resultant in `w`
//! vanishes at the `u` of every common solution. If all real roots of that
//! resultant are nonpositive, every real solution has `u ≤ 0`.

use super::families::{minus, plus};
use super::CheckResult;
use crate::polycore::rational::{int, rat, to_decimal};
use crate::polycore::{BiPoly, Rational};
use crate::rootcount::{real_roots, RootSign};

fn xi_on_plane(u: &Rational, w: &Rational) -> Rational {
    int(6) * u - int(2) * w + int(1)
}

/// Coefficient `a_j` on the plane `a8 = −1`, main variable `w`, secondary `u`.
fn coefficient_on_plane(j: usize) -> BiPoly {
    BiPoly::interpolate(9, 9, |w, u| {
        let p = &(&plus(u).pow(6) * &minus(w).pow(2)) * &minus(&xi_on_plane(u, w));
        p.coeff(j)
    })
}

fn eliminate(r: &mut CheckResult, j: usize) {
    let system = format!("a8 = -1, a1 = 0, a{j} = 0");
    let (l1, lj) = (coefficient_on_plane(1), coefficient_on_plane(j));
    let sample = (rat(3, 7), rat(5, 4));
    let p = &(&plus(&sample.0).pow(6) * &minus(&sample.1).pow(2)) * &minus(&xi_on_plane(&sample.0, &sample.1));
    r.exact(format!("{system}: a8 on the plane ξ = 6u − 2w + 1"), &int(-1), &p.coeff(8));

    let res = match BiPoly::resultant(&l1, &lj) {
        Ok(res) if !res.is_zero() => res,
        Ok(_) => {
            r.holds(format!("{system}: elimination"), false, "nonzero resultant", "resultant vanishes identically (elimination degenerate)");
            return;
        }
        Err(e) => {
            r.holds(format!("{system}: elimination"), false, "nonzero resultant", e.to_string());
            return;
        }
    };
    r.note(format!("{system}: Res_w = {res}"));
    let roots = match real_roots(&res) {
        Ok(roots) => roots,
        Err(e) => {
            r.holds(format!("{system}: real roots of Res_w"), false, "isolated", e.to_string());
            return;
        }
    };
    let listed: Vec<String> = roots
        .iter()
        .map(|root| match root.sign {
            RootSign::Zero => "0".to_string(),
            _ => to_decimal(&root.refined(&rat(1, 1 << 20)).midpoint(), 5),
        })
        .collect();
    let positive: Vec<&str> = roots.iter().zip(&listed).filter(|(root, _)| root.sign == RootSign::Positive).map(|(_, t)| t.as_str()).collect();
    r.holds(
        format!("{system}: every real u-root of Res_w is nonpositive"),
        positive.is_empty(),
        "no positive u",
        format!("real u-roots [{}]", listed.join(", ")),
    );
    if !positive.is_empty() {
        r.note(format!("{system}: positive candidates u ≈ {} need back-substitution", positive.join(", ")));
    }
}

pub fn check_lemma11() -> CheckResult {
    let mut r = CheckResult::new("check_lemma11");
    for j in [4, 5] {
        eliminate(&mut r, j);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_systems_force_a_nonpositive_component() {
        let r = check_lemma11();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.notes.len(), 2);
    }

    #[test]
    fn plane_coefficient_matches_expansion() {
        let l4 = coefficient_on_plane(4);
        let (u, w) = (rat(2, 3), rat(7, 5));
        let p = &(&plus(&u).pow(6) * &minus(&w).pow(2)) * &minus(&xi_on_plane(&u, &w));
        assert_eq!(l4.eval(&w, &u), p.coeff(4));
    }
}
