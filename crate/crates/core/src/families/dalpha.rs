//! The exceptional family `D(α)` on `sl₂³ ⊕ V₂⊗V₂⊗V₂`.
//!
//! Basis: slot `s ∈ {0,1,2}` contributes `e_s, h_s, f_s` at indices `3s..3s+3`;
//! the odd vector `v_a ⊗ v_b ⊗ v_c` sits at `9 + 4a + 2b + c`.

use crate::exactfield::CycScalar;
use crate::superalgebra::{LieSuperalgebra, Parity, Terms};

#[derive(Debug, Clone)]
pub struct DAlphaRealization {
    alpha: CycScalar,
}

/// The slot weights `(α, 1, −1−α)` summing to zero.
pub fn d_alpha_slots(alpha: &CycScalar) -> [CycScalar; 3] {
    [alpha.clone(), CycScalar::one(), &(-alpha) - &CycScalar::one()]
}

/// The images of `α` under the six maps that give isomorphic `D(α)`.
pub fn d_alpha_orbit(alpha: &CycScalar) -> Vec<CycScalar> {
    let one = CycScalar::one();
    let inv = |x: &CycScalar| x.inv().expect("α ∉ {0, −1}");
    let a = alpha.clone();
    let b = &(-alpha) - &one;
    let c = &(-alpha) * &inv(&(alpha + &one));
    vec![inv(&a), a, inv(&b), b, inv(&c), c]
}

/// The orbit element with the lexicographically least coefficient tuple.
pub fn d_alpha_canonical(alpha: &CycScalar) -> CycScalar {
    d_alpha_orbit(alpha).into_iter().min_by(|x, y| x.lex_cmp(y)).expect("orbit is nonempty")
}

pub fn odd_index(t: [usize; 3]) -> usize {
    9 + 4 * t[0] + 2 * t[1] + t[2]
}

pub fn odd_tensor(k: usize) -> [usize; 3] {
    let r = k - 9;
    [r >> 2, (r >> 1) & 1, r & 1]
}

/// `2×2` matrices of `e, h, f` acting on `V₂`.
fn sl2_matrix(which: usize) -> [[i64; 2]; 2] {
    match which {
        0 => [[0, 1], [0, 0]],
        1 => [[1, 0], [0, -1]],
        _ => [[0, 0], [1, 0]],
    }
}

/// `p(u, v) = uᵗ J v` on basis vectors, `J = (0 1; −1 0)`.
fn form(a: usize, b: usize) -> i64 {
    match (a, b) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

impl DAlphaRealization {
    pub fn new(alpha: CycScalar) -> Self {
        DAlphaRealization { alpha }
    }

    pub fn alpha(&self) -> &CycScalar {
        &self.alpha
    }

    /// `Ψ(v_a, v_b) = (v_a v_bᵗ + v_b v_aᵗ) J` written in `e, h, f` coordinates.
    fn psi(a: usize, b: usize) -> [i64; 3] {
        let mut m = [[0i64; 2]; 2];
        for (r, row) in m.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                // (u vᵗ J)_{rc} = u_r Σ_k v_k J_kc
                let uv = |u: usize, v: usize| if r == u { form(v, c) } else { 0 };
                *x = uv(a, b) + uv(b, a);
            }
        }
        // [[x, y], [z, −x]] = x h + y e + z f
        [m[0][1], m[0][0], m[1][0]]
    }

    pub fn algebra(&self) -> LieSuperalgebra {
        let c = CycScalar::from_int;
        let mut names = Vec::new();
        for s in 1..=3 {
            for x in ["e", "h", "f"] {
                names.push(format!("{x}{s}"));
            }
        }
        for k in 9..17 {
            let t = odd_tensor(k);
            names.push(format!("v{}{}{}", t[0], t[1], t[2]));
        }
        let mut parity = vec![Parity::Even; 9];
        parity.extend([Parity::Odd; 8]);

        let mut brackets: Vec<(usize, usize, Terms)> = Vec::new();
        for s in 0..3 {
            let (e, h, f) = (3 * s, 3 * s + 1, 3 * s + 2);
            brackets.push((e, h, vec![(e, c(-2))]));
            brackets.push((e, f, vec![(h, c(1))]));
            brackets.push((h, f, vec![(f, c(-2))]));
            for x in 0..3 {
                let mat = sl2_matrix(x);
                for k in 9..17 {
                    let t = odd_tensor(k);
                    let mut terms = Terms::new();
                    for (r, row) in mat.iter().enumerate() {
                        let coeff = row[t[s]];
                        if coeff != 0 {
                            let mut u = t;
                            u[s] = r;
                            terms.push((odd_index(u), c(coeff)));
                        }
                    }
                    brackets.push((3 * s + x, k, terms));
                }
            }
        }
        let weights = d_alpha_slots(&self.alpha);
        for k in 9..17 {
            for l in k..17 {
                let (u, v) = (odd_tensor(k), odd_tensor(l));
                let mut terms = Terms::new();
                for s in 0..3 {
                    let others: i64 = (0..3).filter(|&j| j != s).map(|j| form(u[j], v[j])).product();
                    if others == 0 {
                        continue;
                    }
                    let psi = Self::psi(u[s], v[s]);
                    for (x, &p) in psi.iter().enumerate() {
                        if p != 0 {
                            terms.push((3 * s + x, &weights[s] * &c(others * p)));
                        }
                    }
                }
                brackets.push((k, l, terms));
            }
        }
        LieSuperalgebra::from_upper_table(names, parity, self.alpha.conductor(), brackets).expect("indices in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SubspaceBasis;

    fn build(alpha: CycScalar) -> LieSuperalgebra {
        DAlphaRealization::new(alpha).algebra()
    }

    #[test]
    fn structure_for_several_parameters() {
        let z3 = CycScalar::primitive_root(3).unwrap();
        for a in [CycScalar::one(), CycScalar::from_int(2), CycScalar::frac(-1, 2), z3] {
            let g = build(a.clone());
            assert_eq!((g.even_dim(), g.odd_dim()), (9, 8));
            assert!(g.verify_structure().is_empty(), "D({a})");
            assert!(g.is_simple(), "D({a})");
        }
    }

    #[test]
    fn even_part_is_three_commuting_ideals() {
        let g = build(CycScalar::from_int(3));
        for s in 0..3 {
            for t in 0..3 {
                if s != t {
                    for x in 0..3 {
                        for y in 0..3 {
                            assert!(g.structure(3 * s + x, 3 * t + y).is_empty());
                        }
                    }
                }
            }
        }
        let even: Vec<_> = (0..9).map(|i| g.basis_vector(i)).collect();
        assert_eq!(SubspaceBasis::span(17, even).dim(), 9);
    }

    #[test]
    fn excluded_parameters_degenerate() {
        // α = 0 drops the first slot from odd brackets; the rest is a proper ideal
        let g = build(CycScalar::zero());
        assert!(g.verify_structure().is_empty());
        assert!(!g.is_simple());
    }
}
