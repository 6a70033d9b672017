//! Twisted loop superalgebras `L_m(g, σ) = ⊕_{i∈Z} g_{i mod m} ⊗ z^i` and their
//! classification by outer classes up to inversion.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::automorphisms::{eigen_decomposition, f_group, outer_class, representative, AutError, AutMorphism, FClass};
use crate::exactfield::CycScalar;
use crate::families::{expected_superdimension, Family, FamilySpec, FamilyTag};
use crate::linalg::SubspaceBasis;
use crate::superalgebra::{ElementVector, LieSuperalgebra, Parity};

pub use crate::families::{d_alpha_canonical, d_alpha_orbit};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoopError {
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error("component of degree {degree} does not lie in the eigenspace {residue} mod {period}")]
    NotInLoop { degree: i64, residue: u64, period: u64 },
    #[error("{0}")]
    Precondition(String),
}

#[derive(Debug, Clone)]
pub struct LoopAlgebra {
    sigma: AutMorphism,
    period: u64,
    eigenspaces: Vec<SubspaceBasis>,
}

/// A finitely supported sum `Σ x_d ⊗ z^d`; zero components are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoopElement {
    components: BTreeMap<i64, ElementVector>,
}

impl LoopElement {
    pub fn zero() -> Self {
        LoopElement::default()
    }

    pub fn homogeneous(degree: i64, x: ElementVector) -> Self {
        let mut out = LoopElement::zero();
        out.add_component(degree, &x);
        out
    }

    fn add_component(&mut self, degree: i64, x: &[CycScalar]) {
        if x.iter().all(CycScalar::is_zero) {
            return;
        }
        let entry = self.components.entry(degree).or_insert_with(|| vec![CycScalar::zero(); x.len()]);
        for (a, b) in entry.iter_mut().zip(x) {
            *a += b;
        }
        if entry.iter().all(CycScalar::is_zero) {
            self.components.remove(&degree);
        }
    }

    pub fn components(&self) -> &BTreeMap<i64, ElementVector> {
        &self.components
    }

    pub fn component(&self, degree: i64) -> Option<&ElementVector> {
        self.components.get(&degree)
    }

    pub fn support(&self) -> Vec<i64> {
        self.components.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn add(&self, other: &LoopElement) -> LoopElement {
        let mut out = self.clone();
        for (d, x) in &other.components {
            out.add_component(*d, x);
        }
        out
    }

    pub fn scale(&self, s: &CycScalar) -> LoopElement {
        let mut out = LoopElement::zero();
        for (d, x) in &self.components {
            out.add_component(*d, &x.iter().map(|c| c * s).collect::<Vec<_>>());
        }
        out
    }

    /// The parity of a homogeneous element.
    pub fn parity(&self, base: &LieSuperalgebra) -> Option<Parity> {
        let mut seen = None;
        for x in self.components.values() {
            let p = base.parity_of(x)?;
            if seen.is_some_and(|q| q != p) {
                return None;
            }
            seen = Some(p);
        }
        seen
    }
}

impl fmt::Display for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(d, x)| {
                let v: Vec<String> = x.iter().map(|c| c.to_string()).collect();
                format!("[{}] z^{d}", v.join(", "))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Builds `L_m(g, σ)`; `m` may be any period of `σ`.
pub fn loop_build(sigma: &AutMorphism, period: u64) -> Result<LoopAlgebra, LoopError> {
    let eigenspaces = eigen_decomposition(sigma, period)?;
    Ok(LoopAlgebra { sigma: sigma.clone(), period, eigenspaces })
}

impl LoopAlgebra {
    pub fn base(&self) -> &LieSuperalgebra {
        self.sigma.algebra()
    }

    pub fn sigma(&self) -> &AutMorphism {
        &self.sigma
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    fn residue(&self, d: i64) -> u64 {
        d.rem_euclid(self.period as i64) as u64
    }

    /// `g_{d mod m}`.
    pub fn eigenspace(&self, d: i64) -> &SubspaceBasis {
        &self.eigenspaces[self.residue(d) as usize]
    }

    pub fn eigenspaces(&self) -> &[SubspaceBasis] {
        &self.eigenspaces
    }

    pub fn graded_dim(&self, d: i64) -> usize {
        self.eigenspace(d).dim()
    }

    pub fn check(&self, u: &LoopElement) -> Result<(), LoopError> {
        for (d, x) in u.components() {
            if x.len() != self.base().dim() || !self.eigenspace(*d).contains(x) {
                return Err(LoopError::NotInLoop { degree: *d, residue: self.residue(*d), period: self.period });
            }
        }
        Ok(())
    }

    /// Basis of `g_{d mod m} ⊗ z^d`, each vector homogeneous in parity.
    pub fn homogeneous_basis(&self, d: i64) -> Vec<(Parity, ElementVector)> {
        self.eigenspace(d)
            .vectors()
            .iter()
            .map(|v| (self.base().parity_of(v).expect("eigenspaces of a parity-preserving map split"), v.clone()))
            .collect()
    }
}

/// `[x ⊗ z^i, y ⊗ z^j] = [x, y] ⊗ z^{i+j}`, extended bilinearly.
pub fn loop_bracket(l: &LoopAlgebra, u: &LoopElement, v: &LoopElement) -> Result<LoopElement, LoopError> {
    l.check(u)?;
    l.check(v)?;
    let g = l.base();
    let mut out = LoopElement::zero();
    for (i, x) in u.components() {
        for (j, y) in v.components() {
            let z = g.bracket(x, y).map_err(|e| LoopError::Precondition(e.to_string()))?;
            out.add_component(i + j, &z);
        }
    }
    l.check(&out)?;
    Ok(out)
}

/// Whether `L_{lm}(g, σ)` and `L_m(g, σ)` agree under `z ↦ z^l`: degree `l·d` of the
/// former has the same eigenspace as degree `d` of the latter, and degrees not
/// divisible by `l` vanish.
pub fn period_rescale_check(sigma: &AutMorphism, m: u64, l: u64) -> Result<bool, LoopError> {
    if l == 0 {
        return Err(LoopError::Precondition("the rescaling factor l must be at least 1".into()));
    }
    let small = loop_build(sigma, m)?;
    let large = loop_build(sigma, l * m)?;
    for k in 0..(l * m) as i64 {
        let ok = if k % l as i64 == 0 {
            let (a, b) = (large.eigenspace(k), small.eigenspace(k / l as i64));
            a.contains_subspace(b) && b.contains_subspace(a)
        } else {
            large.graded_dim(k) == 0
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopVerdict {
    Isomorphic,
    NotIsomorphic,
    Unsupported,
}

impl LoopVerdict {
    pub fn name(self) -> &'static str {
        match self {
            LoopVerdict::Isomorphic => "isomorphic",
            LoopVerdict::NotIsomorphic => "not-isomorphic",
            LoopVerdict::Unsupported => "unsupported",
        }
    }
}

/// Which of `c₂`, `c₂⁻¹` matched `c₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Same,
    Inverse,
}

#[derive(Debug, Clone)]
pub struct LoopIsoDecision {
    pub verdict: LoopVerdict,
    pub classes: Option<(FClass, FClass)>,
    pub direction: Option<Direction>,
    pub reason: String,
}

impl fmt::Display for LoopIsoDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.verdict.name())?;
        if let Some((a, b)) = &self.classes {
            writeln!(f, "class1: {a}")?;
            writeln!(f, "class2: {b}")?;
        }
        if let Some(d) = self.direction {
            let d = match d {
                Direction::Same => "same",
                Direction::Inverse => "inverse",
            };
            writeln!(f, "matched: {d}")?;
        }
        write!(f, "reason: {}", self.reason)
    }
}

/// Whether two specs name the same algebra: equal parameters, or `D(α)` parameters in
/// one orbit.
pub fn same_algebra(a: &FamilySpec, b: &FamilySpec) -> Option<bool> {
    if a.tag != b.tag {
        return if expected_superdimension(a) != expected_superdimension(b) { Some(false) } else { None };
    }
    Some(match a.tag {
        FamilyTag::DAlpha => match (&a.alpha, &b.alpha) {
            (Some(x), Some(y)) => d_alpha_canonical(x) == d_alpha_canonical(y),
            _ => false,
        },
        _ => a.params == b.params,
    })
}

/// `L(g₁, σ₁) ≅ L(g₂, σ₂)` iff `g₁ ≅ g₂` and `σ̄₁ ∈ {σ̄₂, σ̄₂⁻¹}` in the (abelian) outer group.
pub fn loop_iso_decide(s1: &AutMorphism, s2: &AutMorphism) -> Result<LoopIsoDecision, LoopError> {
    for s in [s1, s2] {
        if s.order().is_none() {
            return Err(LoopError::Precondition(format!("an automorphism of {} has no finite order", s.spec())));
        }
    }
    let decision = |verdict, reason: String| LoopIsoDecision { verdict, classes: None, direction: None, reason };
    match same_algebra(s1.spec(), s2.spec()) {
        None => {
            return Ok(decision(
                LoopVerdict::Unsupported,
                format!("{} and {} have equal superdimension; identifying them is not supported", s1.spec(), s2.spec()),
            ))
        }
        Some(false) => {
            return Ok(decision(
                LoopVerdict::NotIsomorphic,
                format!("{} and {} are not isomorphic", s1.spec(), s2.spec()),
            ))
        }
        Some(true) => {}
    }
    let (c1, c2) = (outer_class(s1)?, outer_class(s2)?);
    let direction = if c1.element == c2.element {
        Some(Direction::Same)
    } else if c1.element == c2.inverse().element {
        Some(Direction::Inverse)
    } else {
        None
    };
    let (verdict, reason) = match direction {
        Some(_) => (LoopVerdict::Isomorphic, "the outer classes agree up to inversion".to_string()),
        None => (LoopVerdict::NotIsomorphic, format!("{c1} is neither {c2} nor its inverse")),
    };
    Ok(LoopIsoDecision { verdict, classes: Some((c1, c2)), direction, reason })
}

/// An orbit `{c, c⁻¹}` of the outer group, with a lift of its first element.
#[derive(Debug, Clone)]
pub struct ClassOrbit {
    pub classes: Vec<FClass>,
    pub representative: Option<AutMorphism>,
}

/// The inversion orbits of `F`, which label the loop algebras of the family up to isomorphism.
pub fn enumerate_loop_classes(family: &Arc<Family>) -> Result<Vec<ClassOrbit>, LoopError> {
    let group = f_group(&family.spec)?;
    let mut orbits: Vec<ClassOrbit> = Vec::new();
    for c in group.elements() {
        if orbits.iter().any(|o| o.classes.contains(&c)) {
            continue;
        }
        let inv = c.inverse();
        let mut classes = vec![c.clone()];
        if inv != c {
            classes.push(inv);
        }
        orbits.push(ClassOrbit { classes, representative: representative(family, &c).ok() });
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphisms::random::{random_inner, seeded};
    use crate::automorphisms::{family_arc, Generator};
    use rand::Rng;

    fn fam(s: &str) -> Arc<Family> {
        family_arc(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn untwisted_loop_has_full_graded_pieces() {
        let f = fam("sl(2|1)");
        let l = loop_build(&AutMorphism::identity(&f), 1).unwrap();
        for d in -3..=3 {
            assert_eq!(l.graded_dim(d), 8);
        }
        let (x, y) = (f.algebra.basis_vector(0), f.algebra.basis_vector(5));
        let b =
            loop_bracket(&l, &LoopElement::homogeneous(0, x.clone()), &LoopElement::homogeneous(0, y.clone())).unwrap();
        assert_eq!(b, LoopElement::homogeneous(0, f.algebra.bracket(&x, &y).unwrap()));
    }

    #[test]
    fn degrees_add_and_are_periodic() {
        let f = fam("sl(2|1)");
        let tau = AutMorphism::generator(&f, Generator::Tau).unwrap();
        let l = loop_build(&tau, 4).unwrap();
        assert_eq!((0..4).map(|d| l.graded_dim(d)).sum::<usize>(), 8);
        for d in -6..6 {
            assert_eq!(l.graded_dim(d), l.graded_dim(d + 4));
        }
        let u = &l.homogeneous_basis(1);
        let v = &l.homogeneous_basis(-1);
        let mut rng = seeded(1);
        let (a, b) = (&u[rng.gen_range(0..u.len())], &v[rng.gen_range(0..v.len())]);
        let br =
            loop_bracket(&l, &LoopElement::homogeneous(1, a.1.clone()), &LoopElement::homogeneous(-1, b.1.clone()))
                .unwrap();
        assert!(br.support().iter().all(|&d| d == 0));
        if let Some(p) = br.parity(l.base()) {
            assert_eq!(p, a.0 + b.0);
        }
    }

    #[test]
    fn rejects_non_periods_and_foreign_elements() {
        let f = fam("psq(3)");
        let sq = AutMorphism::generator(&f, Generator::SigmaQ).unwrap();
        assert!(loop_build(&sq, 2).is_err());
        assert!(loop_build(&sq.pow(2), 2).is_ok());
        let l = loop_build(&sq, 4).unwrap();
        let bad = LoopElement::homogeneous(1, l.homogeneous_basis(0)[0].1.clone());
        assert!(matches!(loop_bracket(&l, &bad, &bad), Err(LoopError::NotInLoop { .. })));
    }

    #[test]
    fn periods_can_be_rescaled() {
        let f = fam("sl(2|1)");
        assert!(period_rescale_check(&AutMorphism::identity(&f), 1, 3).unwrap());
        assert!(period_rescale_check(&AutMorphism::generator(&f, Generator::Tau).unwrap(), 4, 2).unwrap());
        let sq = AutMorphism::generator(&fam("psq(3)"), Generator::SigmaQ).unwrap();
        assert!(period_rescale_check(&sq.pow(2), 2, 2).unwrap());
        assert!(period_rescale_check(&sq, 2, 2).is_err());
        assert!(period_rescale_check(&sq, 4, 0).is_err());
    }

    #[test]
    fn canonical_alpha_is_constant_on_orbits() {
        let c = |s: &str| d_alpha_canonical(&s.parse().unwrap());
        assert_eq!(c("1"), c("-2"));
        assert_eq!(c("1"), c("-1/2"));
        assert_eq!(c("cyc(3)[0,1]"), c("cyc(3)[-1,-1]"));
        let orbit = d_alpha_orbit(&CycScalar::from_int(2));
        for s in ["2", "1/2", "-3", "-1/3", "-2/3", "-3/2"] {
            let a: CycScalar = s.parse().unwrap();
            assert!(orbit.contains(&a), "{s}");
            assert_eq!(d_alpha_canonical(&a), c("2"));
        }
    }

    #[test]
    fn inner_twists_do_not_change_the_verdict() {
        let f = fam("psl(3|3)");
        let tau = AutMorphism::generator(&f, Generator::Tau).unwrap();
        let mut rng = seeded(4);
        let twisted = random_inner(&f, &mut rng).unwrap().compose(&tau).unwrap();
        if twisted.order().is_some() {
            assert_eq!(loop_iso_decide(&tau, &twisted).unwrap().verdict, LoopVerdict::Isomorphic);
        }
    }

    #[test]
    fn cross_family_pairs() {
        let a = AutMorphism::identity(&fam("sl(3|1)"));
        let b = AutMorphism::identity(&fam("sl(2|1)"));
        assert_eq!(loop_iso_decide(&a, &b).unwrap().verdict, LoopVerdict::NotIsomorphic);
        let a = AutMorphism::identity(&fam("D(1)"));
        let b = AutMorphism::identity(&fam("osp(4|2)"));
        assert_eq!(loop_iso_decide(&a, &b).unwrap().verdict, LoopVerdict::Unsupported);
        let a = AutMorphism::identity(&fam("D(2)"));
        let b = AutMorphism::identity(&fam("D(-3)"));
        assert_eq!(loop_iso_decide(&a, &b).unwrap().verdict, LoopVerdict::Isomorphic);
    }
}
