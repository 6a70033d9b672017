//! The automorphism-group table of the simple Lie superalgebras: the identity
//! component `G⁰`, the finite quotient `F`, and whether the group is split.

use crate::automorphisms::{f_group, FKind};
use crate::exactfield::CycScalar;
use crate::families::{d_alpha_canonical, FamilySpec, FamilyTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub algebra: &'static str,
    pub identity_component: &'static str,
    pub outer: &'static str,
    pub split: bool,
    /// Members built and checked by `table`; empty for rows served as static data.
    pub samples: &'static [&'static str],
}

pub const TABLE: &[TableRow] = &[
    TableRow {
        algebra: "sl(m|n), m != n",
        identity_component: "(SL_m x SL_n x G_m)/(mu_m x mu_n)",
        outer: "Z2",
        split: false,
        samples: &["sl(2|1)", "sl(3|1)", "sl(3|2)"],
    },
    TableRow {
        algebra: "psl(n|n), n > 2",
        identity_component: "(SL_n x SL_n x G_m)/(mu_n x mu_n)",
        outer: "Z2xZ2",
        split: false,
        samples: &["psl(3|3)"],
    },
    TableRow {
        algebra: "psl(2|2)",
        identity_component: "(SL_2 x SL_2 x SL_2)/(mu_2 x mu_2)",
        outer: "Z2",
        split: true,
        samples: &["psl(2|2)"],
    },
    TableRow {
        algebra: "s-p(n)",
        identity_component: "(SL_n x G_m)/mu_n",
        outer: "1",
        split: true,
        samples: &["sp_quotient(3)"],
    },
    TableRow { algebra: "psq(n)", identity_component: "PGL_n", outer: "Z4", split: true, samples: &["psq(3)"] },
    TableRow {
        algebra: "osp(2l|2n)",
        identity_component: "(SO_2l x Sp_2n)/mu_2",
        outer: "Z2",
        split: true,
        samples: &["osp(4|2)"],
    },
    TableRow {
        algebra: "osp(2l+1|2n)",
        identity_component: "SO_2l+1 x Sp_2n",
        outer: "1",
        split: true,
        samples: &["osp(3|2)", "osp(5|2)"],
    },
    TableRow { algebra: "F(4)", identity_component: "(Spin_7 x SL_2)/mu_2", outer: "1", split: true, samples: &[] },
    TableRow { algebra: "G(3)", identity_component: "G_2 x SL_2", outer: "1", split: true, samples: &[] },
    TableRow {
        algebra: "D(a), a^3 != 1, a != -2, -1/2",
        identity_component: "(SL_2 x SL_2 x SL_2)/(mu_2 x mu_2)",
        outer: "1",
        split: true,
        samples: &["D(2)"],
    },
    TableRow {
        algebra: "D(a), a in {1, -2, -1/2}",
        identity_component: "(SL_2 x SL_2 x SL_2)/(mu_2 x mu_2)",
        outer: "Z2",
        split: true,
        samples: &["D(1)"],
    },
    TableRow {
        algebra: "D(a), a^3 = 1, a != 1",
        identity_component: "(SL_2 x SL_2 x SL_2)/(mu_2 x mu_2)",
        outer: "Z3",
        split: true,
        samples: &["D(cyc(3)[0,1])"],
    },
    TableRow {
        algebra: "W(n)",
        identity_component: "N_W(n) x| GL_n",
        outer: "1",
        split: true,
        samples: &["W(2)", "W(3)"],
    },
    TableRow { algebra: "S(n)", identity_component: "N_S(n) x| GL_n", outer: "1", split: true, samples: &["S(3)"] },
    TableRow {
        algebra: "S'(2l)",
        identity_component: "N_S'(2l) x| SL_2l",
        outer: "1",
        split: true,
        samples: &["Sprime(4)"],
    },
    TableRow {
        algebra: "H(2l)",
        identity_component: "N_H(2l) x| ((SO_2l x G_m)/mu_2)",
        outer: "Z2",
        split: true,
        samples: &["H(4)"],
    },
    TableRow {
        algebra: "H(2l+1)",
        identity_component: "N_H(2l+1) x| (SO_2l+1 x G_m)",
        outer: "1",
        split: true,
        samples: &["H(5)"],
    },
];

/// The row of [`TABLE`] covering `spec`, if it is a simple algebra of the table.
pub fn table_row(spec: &FamilySpec) -> Option<&'static TableRow> {
    let p = &spec.params;
    let name = match spec.tag {
        FamilyTag::Sl if p[0] != p[1] => "sl(m|n), m != n",
        FamilyTag::Psl if p[0] == 2 => "psl(2|2)",
        FamilyTag::Psl => "psl(n|n), n > 2",
        FamilyTag::SpQuotient => "s-p(n)",
        FamilyTag::Psq => "psq(n)",
        FamilyTag::Osp if p[0].is_multiple_of(2) => "osp(2l|2n)",
        FamilyTag::Osp => "osp(2l+1|2n)",
        FamilyTag::DAlpha => {
            let c = d_alpha_canonical(spec.alpha.as_ref()?);
            if c == d_alpha_canonical(&CycScalar::one()) {
                "D(a), a in {1, -2, -1/2}"
            } else if c.pow(3).is_one() {
                "D(a), a^3 = 1, a != 1"
            } else {
                "D(a), a^3 != 1, a != -2, -1/2"
            }
        }
        FamilyTag::W => "W(n)",
        FamilyTag::S => "S(n)",
        FamilyTag::Sprime => "S'(2l)",
        FamilyTag::H if p[0].is_multiple_of(2) => "H(2l)",
        FamilyTag::H => "H(2l+1)",
        _ => return None,
    };
    TABLE.iter().find(|r| r.algebra == name)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim W(n)_k = n·C(n, k+1)`.
fn w_graded(n: usize, k: usize) -> usize {
    n * binomial(n, k + 1)
}

/// `dim S(n)_k = n·C(n, k+1) − C(n, k)` for `0 ≤ k ≤ n − 2`.
fn s_graded(n: usize, k: usize) -> usize {
    if k + 2 > n {
        0
    } else {
        w_graded(n, k) - binomial(n, k)
    }
}

/// Dimension of `G⁰` read off the table: the reductive factor, plus for the Cartan
/// series the unipotent radical `N`, whose Lie algebra is the even part of positive
/// degree (degrees `2, 4, …`).
pub fn g0_dimension(spec: &FamilySpec) -> Option<usize> {
    table_row(spec)?;
    let p = &spec.params;
    let even_positive = |graded: &dyn Fn(usize) -> usize, top: usize| (2..=top).step_by(2).map(graded).sum::<usize>();
    Some(match spec.tag {
        FamilyTag::Sl => p[0] * p[0] + p[1] * p[1] - 1,
        FamilyTag::Psl if p[0] == 2 => 9,
        FamilyTag::Psl => 2 * p[0] * p[0] - 1,
        FamilyTag::SpQuotient => p[0] * p[0],
        FamilyTag::Psq => p[0] * p[0] - 1,
        FamilyTag::Osp => p[0] * (p[0] - 1) / 2 + p[1] * (2 * p[1] + 1),
        FamilyTag::DAlpha => 9,
        FamilyTag::W => {
            let n = p[0];
            even_positive(&|k| w_graded(n, k), n) + n * n
        }
        FamilyTag::S => {
            let n = p[0];
            even_positive(&|k| s_graded(n, k), n) + n * n
        }
        FamilyTag::Sprime => {
            let n = p[0];
            even_positive(&|k| s_graded(n, k), n) + n * n - 1
        }
        FamilyTag::H => {
            // D_f for monomials f of even degree ≥ 4 (the top form included)
            let n = p[0];
            (4..=n).step_by(2).map(|k| binomial(n, k)).sum::<usize>() + n * (n - 1) / 2 + 1
        }
        _ => return None,
    })
}

/// Whether the computed outer group of `spec` agrees with the `F` column of its row.
pub fn outer_matches_table(spec: &FamilySpec) -> Option<bool> {
    let row = table_row(spec)?;
    let kind = f_group(spec).ok()?.kind;
    let name = match kind {
        FKind::Trivial => "1",
        k => k.name(),
    };
    Some(name == row.outer)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(s: &str) -> Option<usize> {
        g0_dimension(&s.parse().unwrap())
    }

    #[test]
    fn identity_component_dimensions() {
        let expected = [
            ("sl(2|1)", 4),
            ("sl(3|1)", 9),
            ("sl(3|2)", 12),
            ("psl(3|3)", 17),
            ("psl(2|2)", 9),
            ("sp_quotient(3)", 9),
            ("psq(3)", 8),
            ("osp(3|2)", 6),
            ("osp(4|2)", 9),
            ("osp(5|2)", 13),
            ("D(2)", 9),
            ("W(2)", 4),
            ("W(3)", 12),
            ("S(3)", 9),
            ("Sprime(4)", 25),
            ("H(4)", 8),
            ("H(5)", 16),
        ];
        for (s, d) in expected {
            assert_eq!(dim(s), Some(d), "{s}");
        }
        assert_eq!(dim("gl(2|1)"), None);
    }

    #[test]
    fn outer_column_agrees_with_the_computed_groups() {
        for row in TABLE {
            for s in row.samples {
                assert_eq!(outer_matches_table(&s.parse().unwrap()), Some(true), "{s}");
                assert_eq!(table_row(&s.parse().unwrap()), Some(row));
            }
        }
        assert_eq!(table_row(&"D(-1/2)".parse().unwrap()).unwrap().outer, "Z2");
        assert_eq!(table_row(&"D(cyc(3)[-1,-1])".parse().unwrap()).unwrap().outer, "Z3");
    }
}
