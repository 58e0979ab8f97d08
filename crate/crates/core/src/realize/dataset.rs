//! Embedded data: the degree-8 nonrealizable rows with `pos = 0` (cited,
//! not searched), the degree-9 couples built from them, and the couples
//! whose nonrealizability is proved.

use crate::signs::{revert, AdmissiblePair, Couple, SignPattern};

/// One printed row: a degree-8 pattern with `pos = 0` and its `neg` values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseRow {
    pub name: &'static str,
    /// Pattern exactly as printed; four rows have 8 signs instead of 9.
    pub pattern: &'static str,
    pub negs: &'static [usize],
}

impl CaseRow {
    /// Nine signs, as a degree-8 pattern must have.
    pub fn is_well_formed(&self) -> bool {
        self.pattern.len() == 9
    }

    /// Flag attached to rows that cannot be used.
    pub fn flag(&self) -> Option<&'static str> {
        (!self.is_well_formed()).then_some("as-printed, length-inconsistent")
    }

    /// The degree-8 couples of a well-formed row.
    pub fn couples(&self) -> Vec<Couple> {
        if !self.is_well_formed() {
            return Vec::new();
        }
        self.negs
            .iter()
            .map(|&neg| Couple::parse(self.pattern, 0, neg).expect("table rows are admissible"))
            .collect()
    }
}

const ROWS: &[CaseRow] = &[
    CaseRow { name: "A", pattern: "++----++", negs: &[6] },
    CaseRow { name: "B", pattern: "+-----++", negs: &[6] },
    CaseRow { name: "C", pattern: "++++----+", negs: &[6] },
    CaseRow { name: "D", pattern: "+++-----+", negs: &[6] },
    CaseRow { name: "E", pattern: "+-+---+-+", negs: &[2] },
    CaseRow { name: "F", pattern: "+-+-+---+", negs: &[2] },
    CaseRow { name: "G1", pattern: "+-+-----+", negs: &[2] },
    CaseRow { name: "G2", pattern: "+-+-----+", negs: &[4] },
    CaseRow { name: "H1", pattern: "+---+---+", negs: &[2] },
    CaseRow { name: "H2", pattern: "+---+---+", negs: &[4] },
    CaseRow { name: "I1", pattern: "+-------+", negs: &[2] },
    CaseRow { name: "I2", pattern: "+-------+", negs: &[4] },
    CaseRow { name: "I3", pattern: "+-------+", negs: &[6] },
    CaseRow { name: "J", pattern: "+++---++", negs: &[6] },
    CaseRow { name: "K", pattern: "+----+--+", negs: &[4] },
    CaseRow { name: "L", pattern: "+-----++", negs: &[4] },
    CaseRow { name: "M", pattern: "+-++----+", negs: &[4] },
    CaseRow { name: "N", pattern: "+-+----++", negs: &[4] },
    CaseRow { name: "Q", pattern: "+----+-++", negs: &[4] },
];

pub fn case_table() -> &'static [CaseRow] {
    ROWS
}

/// Degree-9 couples `(row + "-", (1, neg))` for every well-formed row and
/// its reversal, named `X` or `X^r`. The reversal of row C gives the
/// nonrealizable degree-9 couple and is left out; reversals equal to their
/// row are listed once.
pub fn degree9_case_couples() -> Vec<(String, Couple)> {
    let mut out: Vec<(String, Couple)> = Vec::new();
    for row in ROWS.iter().filter(|r| r.is_well_formed()) {
        let base: SignPattern = row.pattern.parse().expect("well-formed row");
        for (name, pattern) in [(row.name.to_string(), base.clone()), (format!("{}^r", row.name), revert(&base))] {
            if name == "C^r" {
                continue;
            }
            let extended: SignPattern = format!("{pattern}-").parse().expect("valid pattern");
            for &neg in row.negs {
                let cp = Couple::new(extended.clone(), AdmissiblePair::new(1, neg)).expect("admissible");
                if !out.iter().any(|(_, c)| c == &cp) {
                    out.push((name.clone(), cp));
                }
            }
        }
    }
    out
}

/// A couple known not to be realizable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownCouple {
    pub couple: Couple,
    pub citation: &'static str,
    /// Proved (rather than quoted from elsewhere).
    pub proved: bool,
}

/// Known nonrealizable couples of degree `d`, one per listed orbit
/// representative (callers close them under the action).
pub fn known_nonrealizable(d: usize) -> Vec<KnownCouple> {
    let proved = |p: &str, pos, neg, citation| KnownCouple { couple: Couple::parse(p, pos, neg).expect("admissible"), citation, proved: true };
    match d {
        4 => vec![proved("++-++", 2, 0, "Grabiner's quartic: two positive roots force two negative ones")],
        5 => vec![proved("++-+--", 3, 0, "the single nonrealizable degree-5 orbit")],
        8 => {
            let mut out = Vec::new();
            for row in ROWS {
                for couple in row.couples() {
                    for c in [couple.clone(), Couple::new(revert(couple.pattern()), couple.pair()).expect("reversal keeps admissibility")] {
                        if !out.iter().any(|k: &KnownCouple| k.couple == c) {
                            out.push(KnownCouple {
                                couple: c,
                                citation: "degree-8 classification with pos = 0, quoted without proof",
                                proved: false,
                            });
                        }
                    }
                }
            }
            out
        }
        9 => vec![proved("+----++++-", 1, 6, "the one nonrealizable degree-9 orbit: one positive, six negative simple roots and a complex pair are impossible")],
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_rows_are_flagged() {
        let flagged: Vec<_> = case_table().iter().filter(|r| r.flag().is_some()).map(|r| r.name).collect();
        assert_eq!(flagged, vec!["A", "B", "J", "L"]);
    }

    #[test]
    fn row_pairs_are_admissible() {
        for row in case_table().iter().filter(|r| r.is_well_formed()) {
            assert_eq!(row.couples().len(), row.negs.len(), "{}", row.name);
        }
    }

    #[test]
    fn degree9_couples_exclude_the_exception() {
        let couples = degree9_case_couples();
        let sigma0 = Couple::parse("+----++++-", 1, 6).unwrap();
        assert!(!couples.iter().any(|(_, c)| c == &sigma0));
        assert!(couples.iter().any(|(n, c)| n == "N^r" && c == &Couple::parse("++----+-+-", 1, 4).unwrap()));
        assert!(couples.iter().all(|(_, c)| c.degree() == 9 && c.pair().pos == 1));
    }

    #[test]
    fn known_lists() {
        assert_eq!(known_nonrealizable(4).len(), 1);
        assert!(known_nonrealizable(8).iter().all(|k| !k.proved && k.couple.degree() == 8));
        assert!(known_nonrealizable(3).is_empty());
    }
}
