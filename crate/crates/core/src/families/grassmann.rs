//! Grassmann algebra Λ(n) and its derivations W(n).
//!
//! Monomials are bitmasks: bit `i` stands for `ξ_{i+1}`, and the generators
//! of a monomial are kept in increasing order.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactfield::CycScalar;
use crate::superalgebra::Parity;

pub type Mask = u32;

fn parity_of_mask(mask: Mask) -> Parity {
    Parity::from_bit((mask.count_ones() & 1) as u8)
}

/// Sign of `ξ_S · ξ_T` after reordering into `ξ_{S∪T}`, or `None` when they overlap.
pub fn monomial_sign(s: Mask, t: Mask) -> Option<i64> {
    if s & t != 0 {
        return None;
    }
    let mut inversions = 0u32;
    for bit in 0..32 {
        if t & (1 << bit) != 0 {
            // generators of s that sit after this one
            inversions += (s >> (bit + 1)).count_ones();
        }
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

#[derive(Clone, PartialEq, Eq)]
pub struct GrassmannPoly {
    n: usize,
    terms: BTreeMap<Mask, CycScalar>,
}

impl GrassmannPoly {
    pub fn zero(n: usize) -> Self {
        GrassmannPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: CycScalar) -> Self {
        Self::monomial(n, 0, c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, CycScalar::one())
    }

    pub fn monomial(n: usize, mask: Mask, c: CycScalar) -> Self {
        let mut p = Self::zero(n);
        p.add_term(mask, c);
        p
    }

    /// `ξ_i` with 1-based `i`.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "generator index out of range");
        Self::monomial(n, 1 << (i - 1), CycScalar::one())
    }

    /// `ξ_1 ξ_2 ⋯ ξ_n`.
    pub fn top(n: usize) -> Self {
        Self::monomial(n, full_mask(n), CycScalar::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Mask, CycScalar)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, mask: Mask, c: CycScalar) {
        assert!(mask <= full_mask(self.n), "monomial uses a generator beyond ξ_{}", self.n);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_insert_with(CycScalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Mask, CycScalar> {
        &self.terms
    }

    pub fn coeff(&self, mask: Mask) -> CycScalar {
        self.terms.get(&mask).cloned().unwrap_or_else(CycScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> CycScalar {
        self.coeff(0)
    }

    /// Parity when homogeneous, `None` for zero or mixed polynomials.
    pub fn parity(&self) -> Option<Parity> {
        let mut ps = self.terms.keys().map(|&m| parity_of_mask(m));
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.count_ones()).min()
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(m, c)| (*m, c * s)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(*m, c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&CycScalar::from_int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "Grassmann algebras differ");
        let mut p = Self::zero(self.n);
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                if let Some(sg) = monomial_sign(*s, *t) {
                    p.add_term(s | t, &(a * b) * &CycScalar::from_int(sg));
                }
            }
        }
        p
    }

    /// Left derivative `∂/∂ξ_i` (1-based): removes `ξ_i` with sign
    /// `(−1)^{#generators before ξ_i}`.
    pub fn partial(&self, i: usize) -> Self {
        assert!((1..=self.n).contains(&i), "partial index out of range");
        let bit = 1 << (i - 1);
        let mut p = Self::zero(self.n);
        for (m, c) in &self.terms {
            if m & bit != 0 {
                let before = (m & (bit - 1)).count_ones();
                let c = if before.is_multiple_of(2) { c.clone() } else { -c };
                p.add_term(m & !bit, c);
            }
        }
        p
    }

    /// Homogeneous components split by parity (even, odd).
    pub fn split_parity(&self) -> (Self, Self) {
        let mut even = Self::zero(self.n);
        let mut odd = Self::zero(self.n);
        for (m, c) in &self.terms {
            if parity_of_mask(*m).is_odd() {
                odd.add_term(*m, c.clone());
            } else {
                even.add_term(*m, c.clone());
            }
        }
        (even, odd)
    }

    /// Coefficient vector in the monomial basis indexed by mask.
    pub fn to_dense(&self) -> Vec<CycScalar> {
        let mut v = vec![CycScalar::zero(); 1 << self.n];
        for (m, c) in &self.terms {
            v[*m as usize] = c.clone();
        }
        v
    }

    pub fn from_dense(n: usize, v: &[CycScalar]) -> Self {
        Self::from_terms(n, v.iter().enumerate().map(|(m, c)| (m as Mask, c.clone())))
    }
}

pub fn full_mask(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        Mask::MAX >> (32 - n)
    }
}

pub fn monomial_name(mask: Mask) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..32).filter(|b| mask & (1 << b) != 0).map(|b| format!("x{}", b + 1)).collect::<Vec<_>>().join("")
}

impl fmt::Display for GrassmannPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})*{}", monomial_name(*m))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GrassmannPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `D = Σ P_i ∂/∂ξ_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyDerivation {
    n: usize,
    components: Vec<GrassmannPoly>,
}

impl PolyDerivation {
    pub fn zero(n: usize) -> Self {
        PolyDerivation { n, components: vec![GrassmannPoly::zero(n); n] }
    }

    pub fn new(components: Vec<GrassmannPoly>) -> Self {
        let n = components.len();
        assert!(components.iter().all(|p| p.n() == n), "component lives in a different Λ(n)");
        PolyDerivation { n, components }
    }

    /// `P ∂/∂ξ_i` (1-based `i`).
    pub fn single(p: GrassmannPoly, i: usize) -> Self {
        let mut d = Self::zero(p.n());
        d.components[i - 1] = p;
        d
    }

    /// `ξ_S ∂/∂ξ_i`.
    pub fn basis_element(n: usize, mask: Mask, i: usize) -> Self {
        Self::single(GrassmannPoly::monomial(n, mask, CycScalar::one()), i)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[GrassmannPoly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &GrassmannPoly {
        &self.components[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(GrassmannPoly::is_zero)
    }

    /// Parity of the derivation: `|P_i| + 1`.
    pub fn parity(&self) -> Option<Parity> {
        let mut seen: Option<Parity> = None;
        for c in &self.components {
            if c.is_zero() {
                continue;
            }
            let p = c.parity()? + Parity::Odd;
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        seen
    }

    pub fn apply(&self, f: &GrassmannPoly) -> GrassmannPoly {
        let mut out = GrassmannPoly::zero(self.n);
        for (i, p) in self.components.iter().enumerate() {
            if !p.is_zero() {
                out = out.add(&p.mul(&f.partial(i + 1)));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect())
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        Self::new(self.components.iter().map(|a| a.scale(s)).collect())
    }

    /// `f · D = Σ (f P_i) ∂/∂ξ_i`.
    pub fn left_mul(&self, f: &GrassmannPoly) -> Self {
        Self::new(self.components.iter().map(|p| f.mul(p)).collect())
    }

    fn split_parity(&self) -> (Self, Self) {
        // D even ⟺ components odd
        let (mut even, mut odd) = (Vec::new(), Vec::new());
        for c in &self.components {
            let (ce, co) = c.split_parity();
            even.push(co);
            odd.push(ce);
        }
        (Self::new(even), Self::new(odd))
    }

    /// Degree in the grading `deg(ξ_S ∂_i) = |S| − 1`, when homogeneous.
    pub fn degree(&self) -> Option<i32> {
        let mut seen = None;
        for c in &self.components {
            for m in c.terms().keys() {
                let d = m.count_ones() as i32 - 1;
                match seen {
                    None => seen = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
        }
        seen
    }

    /// Coordinates in the basis `ξ_S ∂_i` at index `mask·n + (i−1)`.
    pub fn to_vector(&self) -> Vec<CycScalar> {
        let n = self.n;
        let mut v = vec![CycScalar::zero(); n << n];
        for (i, p) in self.components.iter().enumerate() {
            for (m, c) in p.terms() {
                v[*m as usize * n + i] = c.clone();
            }
        }
        v
    }

    pub fn from_vector(n: usize, v: &[CycScalar]) -> Self {
        let mut comps = vec![GrassmannPoly::zero(n); n];
        for (idx, c) in v.iter().enumerate() {
            if !c.is_zero() {
                comps[idx % n].add_term((idx / n) as Mask, c.clone());
            }
        }
        Self::new(comps)
    }
}

/// Super-commutator `[D, E] = DE − (−1)^{|D||E|} ED`, computed on generators.
pub fn derivation_bracket(d: &PolyDerivation, e: &PolyDerivation) -> PolyDerivation {
    assert_eq!(d.n(), e.n(), "Grassmann algebras differ");
    let n = d.n();
    let (d0, d1) = d.split_parity();
    let (e0, e1) = e.split_parity();
    let mut out = PolyDerivation::zero(n);
    for (dp, dpar) in [(&d0, Parity::Even), (&d1, Parity::Odd)] {
        for (ep, epar) in [(&e0, Parity::Even), (&e1, Parity::Odd)] {
            if dp.is_zero() || ep.is_zero() {
                continue;
            }
            let s = CycScalar::from_int(if dpar.is_odd() && epar.is_odd() { -1 } else { 1 });
            let comps =
                (0..n).map(|j| dp.apply(&ep.components[j]).sub(&ep.apply(&dp.components[j]).scale(&s))).collect();
            out = out.add(&PolyDerivation::new(comps));
        }
    }
    out
}

/// `Σ_i ∂P_i/∂ξ_i`.
pub fn divergence(d: &PolyDerivation) -> GrassmannPoly {
    let mut out = GrassmannPoly::zero(d.n());
    for (i, p) in d.components().iter().enumerate() {
        out = out.add(&p.partial(i + 1));
    }
    out
}

/// `D_f = Σ_i ∂f/∂ξ_i ∂/∂ξ_i`.
pub fn hamiltonian_field(f: &GrassmannPoly) -> PolyDerivation {
    PolyDerivation::new((1..=f.n()).map(|i| f.partial(i)).collect())
}

/// `{f, g} = (−1)^{|f|} Σ_i ∂f/∂ξ_i ∂g/∂ξ_i`, extended bilinearly over the parity parts of `f`.
pub fn poisson(f: &GrassmannPoly, g: &GrassmannPoly) -> GrassmannPoly {
    let n = f.n();
    let (fe, fo) = f.split_parity();
    let mut out = GrassmannPoly::zero(n);
    for (part, s) in [(fe, 1), (fo, -1)] {
        for i in 1..=n {
            out = out.add(&part.partial(i).mul(&g.partial(i)).scale(&CycScalar::from_int(s)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> GrassmannPoly {
        GrassmannPoly::generator(n, i)
    }

    fn c(v: i64) -> CycScalar {
        CycScalar::from_int(v)
    }

    #[test]
    fn products() {
        assert!(x(2, 1).mul(&x(2, 1)).is_zero());
        assert_eq!(x(2, 2).mul(&x(2, 1)), GrassmannPoly::monomial(2, 0b11, c(-1)));
        let a = GrassmannPoly::one(2).add(&x(2, 1));
        let b = GrassmannPoly::one(2).add(&x(2, 2));
        let expected = GrassmannPoly::from_terms(2, [(0, c(1)), (1, c(1)), (2, c(1)), (3, c(1))]);
        assert_eq!(a.mul(&b), expected);
    }

    #[test]
    fn partials() {
        assert_eq!(x(2, 1).partial(1), GrassmannPoly::one(2));
        assert!(x(2, 1).partial(2).is_zero());
        let x12 = x(2, 1).mul(&x(2, 2));
        assert_eq!(x12.partial(2), x(2, 1).scale(&c(-1)));
        let f = GrassmannPoly::from_terms(4, [(0b1011, c(3)), (0b0110, c(-2)), (0b1111, c(5))]);
        for i in 1..=4 {
            for j in 1..=4 {
                assert!(f.partial(i).partial(j).add(&f.partial(j).partial(i)).is_zero());
            }
        }
    }

    #[test]
    fn brackets_of_derivations() {
        let d1 = PolyDerivation::basis_element(2, 0, 1);
        assert!(derivation_bracket(&d1, &d1).is_zero());
        let a = PolyDerivation::single(x(2, 1), 2);
        let b = PolyDerivation::single(x(2, 2), 1);
        let expected = PolyDerivation::single(x(2, 1), 1).add(&PolyDerivation::single(x(2, 2).scale(&c(-1)), 2));
        assert_eq!(derivation_bracket(&a, &b), expected);
        let odd = PolyDerivation::single(x(3, 1).mul(&x(3, 2)), 3);
        assert_eq!(odd.parity(), Some(Parity::Odd));
        assert!(derivation_bracket(&odd, &odd).is_zero());
    }

    #[test]
    fn divergence_examples() {
        assert!(divergence(&PolyDerivation::single(x(3, 1).mul(&x(3, 2)), 3)).is_zero());
        assert_eq!(divergence(&PolyDerivation::single(x(2, 1), 1)), GrassmannPoly::one(2));
    }

    #[test]
    fn hamiltonian_and_poisson() {
        assert_eq!(hamiltonian_field(&x(3, 1)), PolyDerivation::basis_element(3, 0, 1));
        assert!(poisson(&x(3, 1), &x(3, 2)).is_zero());
        assert_eq!(poisson(&x(3, 1), &x(3, 1)), GrassmannPoly::constant(3, c(-1)));
        let f = x(3, 1).mul(&x(3, 2));
        let g = x(3, 2).mul(&x(3, 3));
        let lhs = derivation_bracket(&hamiltonian_field(&f), &hamiltonian_field(&g));
        assert_eq!(lhs, hamiltonian_field(&poisson(&f, &g)));
    }

    #[test]
    fn vector_round_trip() {
        let d = PolyDerivation::single(x(3, 1), 2).add(&PolyDerivation::basis_element(3, 0b101, 3));
        assert_eq!(PolyDerivation::from_vector(3, &d.to_vector()), d);
        assert_eq!(d.parity(), None);
    }
}
