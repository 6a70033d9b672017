//! Seeded random group elements over `Q` for property checks.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactfield::CycScalar;
use crate::families::grassmann::{full_mask, Mask};
use crate::families::{
    hamiltonian_field, lambda_exp, s_spanning_set, Family, FamilyTag, GrassmannPoly, LambdaMap, PolyDerivation,
};
use crate::linalg::Matrix;

use super::{inner, symplectic_form, AutError, AutMorphism, Generator};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_nonzero(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let x = rng.gen_range(-bound..=bound);
        if x != 0 {
            return x;
        }
    }
}

/// A nonzero rational `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 3`.
pub fn scalar(rng: &mut impl Rng) -> CycScalar {
    CycScalar::frac(small_nonzero(rng, 5), rng.gen_range(1..=3))
}

/// A product of elementary matrices with small integer entries.
pub fn special_linear(n: usize, rng: &mut impl Rng) -> Matrix {
    let mut m = Matrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..n + 2 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let mut e = Matrix::identity(n);
        e[(i, j)] = CycScalar::from_int(small_nonzero(rng, 2));
        m = &m * &e;
    }
    m
}

pub fn general_linear(n: usize, rng: &mut impl Rng) -> Matrix {
    let mut d = vec![CycScalar::one(); n];
    d[0] = scalar(rng);
    &special_linear(n, rng) * &Matrix::diagonal(&d)
}

fn reflection(v: &[CycScalar]) -> Matrix {
    let n = v.len();
    let norm = v.iter().fold(CycScalar::zero(), |acc, x| &acc + &(x * x));
    let c = &CycScalar::from_int(-2) * &norm.inv().expect("nonzero vector");
    let mut m = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = &m[(i, j)] + &(&c * &(&v[i] * &v[j]));
        }
    }
    m
}

/// A product of two reflections (`det = 1`), times one more when `det_one` is false.
pub fn orthogonal(m: usize, det_one: bool, rng: &mut impl Rng) -> Matrix {
    let mut vec = || -> Vec<CycScalar> {
        loop {
            let v: Vec<i64> = (0..m).map(|_| rng.gen_range(-2..=2)).collect();
            if v.iter().any(|&x| x != 0) {
                return v.into_iter().map(CycScalar::from_int).collect();
            }
        }
    };
    let mut out = &reflection(&vec()) * &reflection(&vec());
    if !det_one {
        out = &out * &reflection(&vec());
    }
    out
}

/// A product of symplectic transvections `I + c v vᵗ J` for the form of [`symplectic_form`].
pub fn symplectic(n: usize, rng: &mut impl Rng) -> Matrix {
    let j = symplectic_form(n);
    let mut out = Matrix::identity(2 * n);
    for _ in 0..3 {
        let v: Vec<CycScalar> = (0..2 * n).map(|_| CycScalar::from_int(rng.gen_range(-2..=2))).collect();
        let vv = Matrix::from_columns(std::slice::from_ref(&v));
        let t = &(&vv * &vv.transpose()) * &j;
        let c = CycScalar::from_int(small_nonzero(rng, 2));
        out = &out * &(&Matrix::identity(2 * n) + &t.scale(&c));
    }
    out
}

fn random_mask(n: usize, degree: u32, rng: &mut impl Rng) -> Mask {
    loop {
        let m = rng.gen_range(0..=full_mask(n));
        if m.count_ones() == degree {
            return m;
        }
    }
}

/// A Grassmann automorphism preserving the family's defining form up to scale: a
/// linear part times the exponential of a nilpotent even derivation when one exists.
pub fn lambda_automorphism(tag: FamilyTag, n: usize, rng: &mut impl Rng) -> Result<LambdaMap, AutError> {
    let linear = match tag {
        FamilyTag::Sprime => special_linear(n, rng),
        FamilyTag::H | FamilyTag::Htilde => orthogonal(n, true, rng).scale(&scalar(rng)),
        _ => general_linear(n, rng),
    };
    let phi = LambdaMap::linear(&linear)?;
    let nilpotent: Option<PolyDerivation> = match tag {
        FamilyTag::W if n >= 3 => {
            let mask = random_mask(n, 3, rng);
            let i = rng.gen_range(1..=n);
            Some(PolyDerivation::single(GrassmannPoly::monomial(n, mask, scalar(rng)), i))
        }
        FamilyTag::S if n >= 4 => {
            let pool: Vec<PolyDerivation> = s_spanning_set(n).into_iter().filter(|d| d.degree() == Some(2)).collect();
            pool.get(rng.gen_range(0..pool.len().max(1))).map(|d| d.scale(&scalar(rng)))
        }
        FamilyTag::H | FamilyTag::Htilde if n >= 4 => {
            Some(hamiltonian_field(&GrassmannPoly::monomial(n, random_mask(n, 4, rng), scalar(rng))))
        }
        _ => None,
    };
    Ok(match nilpotent {
        Some(d) => phi.compose(&lambda_exp(&d)?),
        None => phi,
    })
}

/// A random word of identity-component generators for the family.
pub fn inner_word(family: &Family, rng: &mut impl Rng) -> Result<Vec<Generator>, AutError> {
    let spec = &family.spec;
    let p = &spec.params;
    Ok(match spec.tag {
        FamilyTag::Gl | FamilyTag::Sl | FamilyTag::Psl => {
            let mut w = vec![
                Generator::Ad { x: special_linear(p[0], rng), y: special_linear(p[1], rng) },
                Generator::J(scalar(rng)),
            ];
            if spec.tag == FamilyTag::Psl && p[0] == 2 {
                w.push(Generator::Rho(special_linear(2, rng)));
            }
            w
        }
        FamilyTag::P | FamilyTag::SpQuotient => {
            let x = general_linear(p[0], rng);
            let y = x.transpose().inverse().expect("invertible");
            vec![Generator::Ad { x, y }, Generator::J(scalar(rng))]
        }
        FamilyTag::Q | FamilyTag::Sq | FamilyTag::Psq => {
            let x = general_linear(p[0], rng);
            vec![Generator::Ad { x: x.clone(), y: x }]
        }
        FamilyTag::Osp => vec![Generator::Ad { x: orthogonal(p[0], true, rng), y: symplectic(p[1], rng) }],
        FamilyTag::DAlpha => {
            vec![Generator::AdD([special_linear(2, rng), special_linear(2, rng), special_linear(2, rng)])]
        }
        t => vec![Generator::AutLambda(lambda_automorphism(t, p[0], rng)?)],
    })
}

pub fn random_inner(family: &Arc<Family>, rng: &mut impl Rng) -> Result<AutMorphism, AutError> {
    let word = inner_word(family, rng)?;
    inner(family, word)
}
