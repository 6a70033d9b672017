//! The distinguished automorphisms and how each acts on a concrete model.

use std::fmt;

use crate::exactfield::CycScalar;
use crate::families::{ad_lambda_matrix, odd_index, odd_tensor, Family, FamilyTag, LambdaMap, Realization};
use crate::linalg::Matrix;

use super::AutError;

/// One factor of a witness. A witness `[g₁, …, g_k]` stands for `g₁ ∘ ⋯ ∘ g_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `(A B; C D) ↦ (XAX⁻¹, XBY⁻¹; YCX⁻¹, YDY⁻¹)`.
    Ad { x: Matrix, y: Matrix },
    /// `(A B; C D) ↦ (A, λB; λ⁻¹C, D)`.
    J(CycScalar),
    /// The extra `SL₂` acting on the odd part of `psl(2|2)`.
    Rho(Matrix),
    /// `(A B; C D) ↦ (−Aᵗ, Cᵗ; −Bᵗ, −Dᵗ)`.
    Tau,
    /// `(A B; C D) ↦ (D C; B A)`.
    Pi,
    /// `(A B; B A) ↦ (−Aᵗ, ζ₄Bᵗ; ζ₄Bᵗ, −Aᵗ)`.
    SigmaQ,
    /// `Ad(r_m, I)` with `r_m = diag(−1, 1, …, 1)`.
    R,
    /// Permutes the three `sl₂` slots of `D(α)`: slot `i` of the image is slot `perm[i]` of
    /// the argument, and the odd part is scaled by `lambda`.
    Theta { perm: [usize; 3], lambda: CycScalar },
    /// `Ad(X₁, X₂, X₃)` on `D(α)`.
    AdD([Matrix; 3]),
    /// `D ↦ φ D φ⁻¹` for an automorphism `φ` of the Grassmann algebra.
    AutLambda(LambdaMap),
}

impl Generator {
    pub fn name(&self) -> &'static str {
        match self {
            Generator::Ad { .. } => "Ad",
            Generator::J(_) => "j",
            Generator::Rho(_) => "rho",
            Generator::Tau => "tau",
            Generator::Pi => "pi",
            Generator::SigmaQ => "sigma_q",
            Generator::R => "r",
            Generator::Theta { .. } => "theta",
            Generator::AdD(_) => "AdD",
            Generator::AutLambda(_) => "autlambda",
        }
    }

    /// The inverse as a word in generators.
    pub fn inverse(&self) -> Vec<Generator> {
        let inv = |m: &Matrix| m.inverse().expect("validated generators are invertible");
        match self {
            Generator::Ad { x, y } => vec![Generator::Ad { x: inv(x), y: inv(y) }],
            Generator::J(l) => vec![Generator::J(l.inv().expect("nonzero"))],
            Generator::Rho(z) => vec![Generator::Rho(inv(z))],
            Generator::Tau => vec![Generator::Tau; 3],
            Generator::SigmaQ => vec![Generator::SigmaQ; 3],
            Generator::Pi | Generator::R => vec![self.clone()],
            Generator::Theta { perm, lambda } => {
                let mut back = [0; 3];
                for (i, &p) in perm.iter().enumerate() {
                    back[p] = i;
                }
                vec![Generator::Theta { perm: back, lambda: lambda.inv().expect("nonzero") }]
            }
            Generator::AdD(xs) => vec![Generator::AdD([inv(&xs[0]), inv(&xs[1]), inv(&xs[2])])],
            Generator::AutLambda(phi) => vec![Generator::AutLambda(phi.inverse())],
        }
    }

    fn bad(&self, family: &Family, reason: impl Into<String>) -> AutError {
        AutError::Generator {
            generator: self.name().to_string(),
            family: family.spec.to_string(),
            reason: reason.into(),
        }
    }

    /// Checks that the generator is defined on the family and that its data has the
    /// required shape and group-membership properties.
    pub fn validate(&self, family: &Family) -> Result<(), AutError> {
        let tag = family.spec.tag;
        let matrix_family = |g: &Generator| match family.matrix_realization() {
            Some(r) => Ok(r.blocks()),
            None => Err(g.bad(family, "needs a supermatrix family")),
        };
        let linear_like = matches!(tag, FamilyTag::Gl | FamilyTag::Sl | FamilyTag::Psl);
        match self {
            Generator::Ad { x, y } => {
                let (p, q) = matrix_family(self)?;
                if x.rows() != p || !x.is_square() || y.rows() != q || !y.is_square() {
                    return Err(self.bad(family, format!("X must be {p}x{p} and Y must be {q}x{q}")));
                }
                if !x.is_invertible() || !y.is_invertible() {
                    return Err(self.bad(family, "X and Y must be invertible"));
                }
                match tag {
                    FamilyTag::P | FamilyTag::SpQuotient if y != &x.transpose().inverse().expect("invertible") => {
                        Err(self.bad(family, "Y must equal (Xᵗ)⁻¹"))
                    }
                    FamilyTag::Q | FamilyTag::Sq | FamilyTag::Psq if x != y => Err(self.bad(family, "Y must equal X")),
                    FamilyTag::Osp => {
                        if !(&x.transpose() * x).is_identity() {
                            return Err(self.bad(family, "X is not orthogonal"));
                        }
                        let j = symplectic_form(q / 2);
                        if &(&y.transpose() * &j) * y != j {
                            return Err(self.bad(family, "Y is not symplectic"));
                        }
                        Ok(())
                    }
                    _ => Ok(()),
                }
            }
            Generator::J(l) => {
                if !(linear_like || matches!(tag, FamilyTag::P | FamilyTag::SpQuotient)) {
                    return Err(self.bad(family, "defined on gl, sl, psl and the periplectic family"));
                }
                if l.is_zero() {
                    return Err(self.bad(family, "λ must be nonzero"));
                }
                Ok(())
            }
            Generator::Rho(z) => {
                if !(tag == FamilyTag::Psl && family.spec.params[0] == 2) {
                    return Err(self.bad(family, "defined on psl(2|2) only"));
                }
                check_sl2(z).map_err(|why| self.bad(family, format!("Z {why}")))
            }
            Generator::Tau if !linear_like => Err(self.bad(family, "defined on gl, sl and psl")),
            Generator::Pi => {
                let (p, q) = matrix_family(self)?;
                if !(linear_like && p == q) {
                    return Err(self.bad(family, "needs equal block sizes"));
                }
                Ok(())
            }
            Generator::SigmaQ if !matches!(tag, FamilyTag::Q | FamilyTag::Sq | FamilyTag::Psq) => {
                Err(self.bad(family, "defined on the queer family"))
            }
            Generator::R if tag != FamilyTag::Osp => Err(self.bad(family, "defined on osp")),
            Generator::Theta { perm, lambda } => {
                if tag != FamilyTag::DAlpha {
                    return Err(self.bad(family, "defined on D(α)"));
                }
                let mut seen = [false; 3];
                for &p in perm {
                    if p > 2 || seen[p] {
                        return Err(self.bad(family, "perm must be a permutation of 0, 1, 2"));
                    }
                    seen[p] = true;
                }
                if lambda.is_zero() {
                    return Err(self.bad(family, "λ must be nonzero"));
                }
                Ok(())
            }
            Generator::AdD(xs) => {
                if tag != FamilyTag::DAlpha {
                    return Err(self.bad(family, "defined on D(α)"));
                }
                for (i, x) in xs.iter().enumerate() {
                    check_sl2(x).map_err(|why| self.bad(family, format!("X{} {why}", i + 1)))?;
                }
                Ok(())
            }
            Generator::AutLambda(phi) => match family.cartan_realization() {
                Some(c) if c.n() == phi.n() => Ok(()),
                Some(c) => {
                    Err(self.bad(family, format!("φ acts on Λ({}) but the family lives on Λ({})", phi.n(), c.n())))
                }
                None => Err(self.bad(family, "needs a Cartan type family")),
            },
            _ => Ok(()),
        }
    }

    /// Whether the generator lies in the identity component for this family.
    pub fn is_inner(&self, family: &Family) -> bool {
        match self {
            Generator::Ad { x, .. } if family.spec.tag == FamilyTag::Osp => {
                x.det().map(|d| d.is_one()).unwrap_or(false)
            }
            Generator::Ad { .. } | Generator::J(_) | Generator::Rho(_) | Generator::AdD(_) => true,
            Generator::AutLambda(phi) => {
                let n = phi.n();
                family.spec.tag != FamilyTag::H || n % 2 == 1 || similitude_sign(&phi.linear_part()) == Some(1)
            }
            _ => false,
        }
    }

    /// The matrix of the generator in the basis of the family's algebra.
    pub fn matrix(&self, family: &Family) -> Result<Matrix, AutError> {
        self.validate(family)?;
        match &family.realization {
            Realization::Matrix(r) => {
                let (p, q) = r.blocks();
                let f = self.supermatrix_map(p, q);
                r.induced_map(f).ok_or_else(|| self.bad(family, "does not preserve the algebra"))
            }
            Realization::DAlpha(_) => Ok(match self {
                Generator::AdD(xs) => d_alpha_adjoint(xs),
                Generator::Theta { perm, lambda } => d_alpha_theta(perm, lambda),
                _ => unreachable!("validated"),
            }),
            Realization::Cartan(c) => match self {
                Generator::AutLambda(phi) => ad_lambda_matrix(c, phi).map_err(|e| self.bad(family, e.to_string())),
                _ => unreachable!("validated"),
            },
        }
    }

    /// The action on `(p|q)` supermatrices.
    fn supermatrix_map(&self, p: usize, q: usize) -> impl Fn(&Matrix) -> Matrix + '_ {
        let conj = match self {
            Generator::Ad { x, y } => Some(block_diag(x, y)),
            Generator::R => {
                let mut r = Matrix::identity(p);
                r[(0, 0)] = CycScalar::from_int(-1);
                Some(block_diag(&r, &Matrix::identity(q)))
            }
            _ => None,
        };
        let conj = conj.map(|c| {
            let ci = c.inverse().expect("validated generators are invertible");
            (c, ci)
        });
        let zeta = CycScalar::primitive_root(4).expect("conductor 4 is always allowed");
        move |m: &Matrix| {
            if let Some((c, ci)) = &conj {
                return &(c * m) * ci;
            }
            let a = m.block(0, 0, p, p);
            let b = m.block(0, p, p, q);
            let c = m.block(p, 0, q, p);
            let d = m.block(p, p, q, q);
            let (a2, b2, c2, d2) = match self {
                Generator::J(l) => (a, b.scale(l), c.scale(&l.inv().expect("nonzero")), d),
                Generator::Tau => (-&a.transpose(), c.transpose(), -&b.transpose(), -&d.transpose()),
                Generator::Pi => (d, c, b, a),
                Generator::SigmaQ => {
                    let bt = b.transpose().scale(&zeta);
                    (-&a.transpose(), bt.clone(), bt, -&a.transpose())
                }
                Generator::Rho(z) => {
                    let (al, be, ga, de) = (&z[(0, 0)], &z[(0, 1)], &z[(1, 0)], &z[(1, 1)]);
                    let b2 = &b.scale(al) + &psi(&c).scale(be);
                    let c2 = &psi(&b).scale(ga) + &c.scale(de);
                    (a, b2, c2, d)
                }
                _ => unreachable!("only supermatrix generators reach here"),
            };
            let mut out = Matrix::zeros(p + q, p + q);
            out.set_block(0, 0, &a2);
            out.set_block(0, p, &b2);
            out.set_block(p, 0, &c2);
            out.set_block(p, p, &d2);
            out
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::J(l) => write!(f, "j({l})"),
            Generator::Theta { perm, lambda } => {
                write!(f, "theta([{},{},{}],{lambda})", perm[0] + 1, perm[1] + 1, perm[2] + 1)
            }
            g => f.write_str(g.name()),
        }
    }
}

/// `J = (0 I; −I 0)` of size `2n`.
pub fn symplectic_form(n: usize) -> Matrix {
    let mut j = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = CycScalar::one();
        j[(n + i, i)] = CycScalar::from_int(-1);
    }
    j
}

fn block_diag(x: &Matrix, y: &Matrix) -> Matrix {
    let (p, q) = (x.rows(), y.rows());
    let mut m = Matrix::zeros(p + q, p + q);
    m.set_block(0, 0, x);
    m.set_block(p, p, y);
    m
}

fn check_sl2(z: &Matrix) -> Result<(), &'static str> {
    if z.rows() != 2 || z.cols() != 2 {
        return Err("must be 2x2");
    }
    if !z.det().map(|d| d.is_one()).unwrap_or(false) {
        return Err("must have determinant 1");
    }
    Ok(())
}

/// `ψ(E) = −J Eᵗ J⁻¹` for `J = (0 1; −1 0)`.
pub fn psi(e: &Matrix) -> Matrix {
    let j = symplectic_form(1);
    let jinv = -&j;
    -&(&(&j * &e.transpose()) * &jinv)
}

/// For `L` with `LᵗL = μ²I`, the sign `det L / μⁿ` when `n` is even, computed as
/// `det L / (μ²)^{n/2}`.
pub(crate) fn similitude_sign(l: &Matrix) -> Option<i64> {
    let n = l.rows();
    if !n.is_multiple_of(2) {
        return None;
    }
    let g = &l.transpose() * l;
    let mu2 = g[(0, 0)].clone();
    if mu2.is_zero() || g != Matrix::identity(n).scale(&mu2) {
        return None;
    }
    let s = l.det().ok()?.checked_div(&mu2.pow((n / 2) as u32)).ok()?;
    if s.is_one() {
        Some(1)
    } else if (-&s).is_one() {
        Some(-1)
    } else {
        None
    }
}

const SL2_BASIS: [[[i64; 2]; 2]; 3] = [[[0, 1], [0, 0]], [[1, 0], [0, -1]], [[0, 0], [1, 0]]];

/// `Ad(X₁, X₂, X₃)` in the basis `e_s, h_s, f_s, v_abc`.
fn d_alpha_adjoint(xs: &[Matrix; 3]) -> Matrix {
    let mut m = Matrix::zeros(17, 17);
    for (s, x) in xs.iter().enumerate() {
        let xi = x.inverse().expect("validated");
        for (k, e) in SL2_BASIS.iter().enumerate() {
            let e = Matrix::from_int_rows(&[&e[0], &e[1]]);
            let y = &(x * &e) * &xi;
            // [[a, b], [c, −a]] = b e + a h + c f
            m[(3 * s, 3 * s + k)] = y[(0, 1)].clone();
            m[(3 * s + 1, 3 * s + k)] = y[(0, 0)].clone();
            m[(3 * s + 2, 3 * s + k)] = y[(1, 0)].clone();
        }
    }
    let k = xs[0].kron(&xs[1].kron(&xs[2]));
    m.set_block(9, 9, &k);
    m
}

fn d_alpha_theta(perm: &[usize; 3], lambda: &CycScalar) -> Matrix {
    let mut m = Matrix::zeros(17, 17);
    for (i, &src) in perm.iter().enumerate() {
        for k in 0..3 {
            m[(3 * i + k, 3 * src + k)] = CycScalar::one();
        }
    }
    for col in 9..17 {
        let t = odd_tensor(col);
        let image = [t[perm[0]], t[perm[1]], t[perm[2]]];
        m[(odd_index(image), col)] = lambda.clone();
    }
    m
}
