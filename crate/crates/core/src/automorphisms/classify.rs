//! Per-family invariants reading off the class of an automorphism in `F`.

use crate::exactfield::CycScalar;
use crate::families::{Family, FamilyTag, MatrixRealization};
use crate::linalg::{rank_one_factor, Matrix, SubspaceBasis};

use super::generators::similitude_sign;
use super::{f_group, representative, AutError, AutMorphism, FClass, FKind, Generator};

fn fail(family: &Family, reason: impl Into<String>) -> AutError {
    AutError::Classify { family: family.spec.to_string(), reason: reason.into() }
}

/// The image of `σ` in the outer group of its family.
pub fn outer_class(sigma: &AutMorphism) -> Result<FClass, AutError> {
    let family = sigma.family().as_ref();
    let group = f_group(&family.spec)?;
    if !family.algebra.is_automorphism(sigma.matrix()) {
        return Err(AutError::NotAutomorphism(family.spec.to_string()));
    }
    if group.kind == FKind::Trivial {
        return Ok(group.identity());
    }
    let element = match family.spec.tag {
        FamilyTag::Sl => sl_class(family, sigma.matrix())?,
        FamilyTag::Psl => psl_class(family, sigma, group.kind)?,
        FamilyTag::Psq => psq_class(sigma)?,
        FamilyTag::Osp => osp_class(family, sigma.matrix())?,
        FamilyTag::DAlpha => d_alpha_class(sigma, group.kind)?,
        FamilyTag::H => {
            let phi = sigma.lambda_witness().ok_or_else(|| AutError::WitnessRequired(family.spec.to_string()))?;
            match similitude_sign(&phi.linear_part()) {
                Some(1) => 0,
                Some(_) => 1,
                None => return Err(fail(family, "the linear part of φ is not a similitude")),
            }
        }
        _ => unreachable!("f_group covers the families with nontrivial F"),
    };
    group.element(element)
}

fn realization(family: &Family) -> &MatrixRealization {
    family.matrix_realization().expect("matrix family")
}

fn image_matrix(r: &MatrixRealization, sigma: &Matrix, k: usize) -> Matrix {
    r.element_matrix(&sigma.column(k))
}

/// `σ` fixes or negates `z = diag(n I_m, m I_n)`, the center of the even part, and
/// with it preserves or swaps the two `ad z` eigenspaces of the odd part.
fn sl_class(family: &Family, sigma: &Matrix) -> Result<u32, AutError> {
    let r = realization(family);
    let (m, n) = r.blocks();
    let mut diag = vec![CycScalar::from_int(n as i64); m];
    diag.extend(vec![CycScalar::from_int(m as i64); n]);
    let z = r.coords_of(&Matrix::diagonal(&diag)).expect("z lies in sl(m|n)");
    let image = sigma.mul_vec(&z);
    if image == z {
        Ok(0)
    } else if image.iter().zip(&z).all(|(a, b)| a == &-b) {
        Ok(1)
    } else {
        Err(fail(family, "σ does not map the center of the even part to ±itself"))
    }
}

fn traceless(a: &Matrix) -> Matrix {
    let n = a.rows();
    let t = &a.trace() * &CycScalar::frac(1, n as i64);
    a - &Matrix::identity(n).scale(&t)
}

/// Solution space of `{ φ_k X = X a_k }` over pairs `(φ_k, a_k)` of `n×n` matrices,
/// and whether it contains an invertible element.
fn intertwiner_exists(pairs: &[(Matrix, Matrix)], n: usize) -> bool {
    let mut rows: Vec<Vec<CycScalar>> = Vec::new();
    for (phi, a) in pairs {
        // (φX − Xa)_{ij} = Σ_k φ_ik X_kj − X_ik a_kj
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![CycScalar::zero(); n * n];
                for k in 0..n {
                    row[k * n + j] += &phi[(i, k)];
                    row[i * n + k] -= &a[(k, j)];
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sol: SubspaceBasis = if rows.is_empty() {
        SubspaceBasis::full(n * n)
    } else {
        Matrix::from_rows(rows).expect("rectangular").nullspace()
    };
    sol.vectors().iter().any(|v| {
        let x = Matrix::from_rows(v.chunks(n).map(|c| c.to_vec()).collect()).expect("square");
        x.is_invertible()
    })
}

/// `π`-bit: whether the two simple ideals of the even part are swapped. `τ`-bit: whether
/// `σ` (after removing `π`) acts on the first `sl_n` by an outer automorphism.
fn psl_class(family: &Family, sigma: &AutMorphism, kind: FKind) -> Result<u32, AutError> {
    let r = realization(family);
    let n = r.blocks().0;
    let first_ideal: Vec<(usize, Matrix)> = r
        .basis()
        .iter()
        .enumerate()
        .filter(|(_, b)| {
            let a = b.block(0, 0, n, n);
            !a.is_zero()
                && b.block(n, n, n, n).is_zero()
                && b.block(0, n, n, n).is_zero()
                && b.block(n, 0, n, n).is_zero()
        })
        .map(|(k, b)| (k, b.block(0, 0, n, n)))
        .collect();
    let projections = |m: &Matrix, k: usize| {
        let img = image_matrix(r, m, k);
        (traceless(&img.block(0, 0, n, n)), traceless(&img.block(n, n, n, n)))
    };
    let mat = sigma.matrix();
    let kept = first_ideal.iter().all(|(k, _)| projections(mat, *k).1.is_zero());
    let swapped = first_ideal.iter().all(|(k, _)| projections(mat, *k).0.is_zero());
    let pi_bit = match (kept, swapped) {
        (true, false) => 0,
        (false, true) => 1,
        _ => return Err(fail(family, "σ does not permute the simple ideals of the even part")),
    };
    if kind == FKind::Z2 {
        return Ok(pi_bit);
    }
    let phi = if pi_bit == 1 {
        let pi = AutMorphism::generator(sigma.family(), Generator::Pi)?;
        mat * pi.matrix()
    } else {
        mat.clone()
    };
    let pairs: Vec<(Matrix, Matrix)> = first_ideal.iter().map(|(k, a)| (projections(&phi, *k).0, a.clone())).collect();
    let tau_bit = u32::from(!intertwiner_exists(&pairs, n));
    Ok(2 * pi_bit + tau_bit)
}

/// The unique `j` for which `σ ∘ σ_q^{−j}` is `Ad(X, X)` on both copies of `sl_n`.
fn psq_class(sigma: &AutMorphism) -> Result<u32, AutError> {
    let family = sigma.family().as_ref();
    let r = realization(family);
    let n = r.blocks().0;
    let parities = family.algebra.parities();
    let block = |m: &Matrix, odd: bool| traceless(&if odd { m.block(0, n, n, n) } else { m.block(0, 0, n, n) });
    let sq = AutMorphism::generator(sigma.family(), Generator::SigmaQ)?;
    let mut phi = sigma.matrix().clone();
    let mut found = Vec::new();
    for j in 0..4 {
        let pairs: Vec<(Matrix, Matrix)> = r
            .basis()
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let odd = parities[k].is_odd();
                (block(&image_matrix(r, &phi, k), odd), block(b, odd))
            })
            .collect();
        if intertwiner_exists(&pairs, n) {
            found.push(j);
        }
        // σ ∘ σ_q^{−(j+1)} = σ ∘ σ_q^{−j} ∘ σ_q³
        phi = &phi * &sq.matrix().pow(3);
    }
    match found.as_slice() {
        [j] => Ok(*j),
        _ => Err(fail(family, format!("expected exactly one matching power of σ_q, found {found:?}"))),
    }
}

/// On the odd part `V_m ⊗ V_2n`, `σ = C ⊗ D` with `CᵗC = μ²I`; the class is the sign
/// `det C / (μ²)^{m/2}`.
fn osp_class(family: &Family, sigma: &Matrix) -> Result<u32, AutError> {
    let (m, q) = realization(family).blocks();
    let e = family.algebra.even_dim();
    let odd = sigma.block(e, e, m * q, m * q);
    let (c, _) = rank_one_factor(&odd, m, q)
        .expect("square")
        .ok_or_else(|| fail(family, "the odd part is not a tensor product"))?;
    match similitude_sign(&c) {
        Some(1) => Ok(0),
        Some(_) => Ok(1),
        None => Err(fail(family, "the orthogonal factor is not a similitude")),
    }
}

/// The permutation of the three `sl₂` ideals: `p[s]` is the slot containing `σ(e_s)`.
fn slot_permutation(sigma: &Matrix) -> Option<[usize; 3]> {
    let mut p = [0; 3];
    for (s, slot) in p.iter_mut().enumerate() {
        let col = sigma.column(3 * s);
        let hits: Vec<usize> = (0..3).filter(|t| (0..3).any(|x| !col[3 * t + x].is_zero())).collect();
        match hits.as_slice() {
            [t] => *slot = *t,
            _ => return None,
        }
    }
    Some(p)
}

fn d_alpha_class(sigma: &AutMorphism, kind: FKind) -> Result<u32, AutError> {
    let family = sigma.family().as_ref();
    let perm = slot_permutation(sigma.matrix()).ok_or_else(|| fail(family, "σ does not permute the sl₂ ideals"))?;
    let identity = [0, 1, 2];
    match kind {
        FKind::Z2 => Ok(u32::from(perm != identity)),
        _ => {
            let group = f_group(&family.spec)?;
            let gen = representative(sigma.family(), &group.element(1)?)?;
            let g = slot_permutation(gen.matrix()).expect("θ permutes the slots");
            let mut power = identity;
            for j in 0..3 {
                if power == perm {
                    return Ok(j);
                }
                power = [g[power[0]], g[power[1]], g[power[2]]];
            }
            Err(fail(family, "the slot permutation is not a power of the 3-cycle"))
        }
    }
}
