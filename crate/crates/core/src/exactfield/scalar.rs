use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use super::cyclotomic::{euler_phi, inverse_mod_cyclotomic, lcm, max_conductor, reduce_mod_cyclotomic};
use super::rational::Rational;
use super::FieldError;

/// An element of the cyclotomic field Q(ζ_N), stored as the coefficient
/// vector of its reduced representative modulo Φ_N in the power basis
/// 1, ζ_N, ..., ζ_N^{φ(N)−1}.
///
/// Rational values are always stored at conductor 1, so the overwhelmingly
/// common rational case costs a single [`Rational`] per operation. Equality
/// compares coefficients after aligning both operands to the lcm conductor.
#[derive(Clone)]
pub struct CycScalar {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CycScalar {
    pub fn zero() -> Self {
        Self::from_rational(Rational::ZERO)
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        CycScalar { conductor: 1, coeffs: vec![r] }
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num, den).expect("nonzero denominator"))
    }

    /// Builds an element from its coefficient vector at conductor `n`.
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Result<Self, FieldError> {
        if n == 0 {
            return Err(FieldError::Usage("conductor must be positive".into()));
        }
        if n > max_conductor() {
            return Err(FieldError::ConductorTooLarge { conductor: n, bound: max_conductor() });
        }
        if coeffs.len() != euler_phi(n) {
            return Err(FieldError::Usage(format!(
                "conductor {n} needs {} coefficients, got {}",
                euler_phi(n),
                coeffs.len()
            )));
        }
        Ok(Self::normalized(n, coeffs))
    }

    fn normalized(n: u32, coeffs: Vec<Rational>) -> Self {
        if n != 1 && coeffs[1..].iter().all(Rational::is_zero) {
            let c0 = coeffs.into_iter().next().unwrap();
            return CycScalar { conductor: 1, coeffs: vec![c0] };
        }
        CycScalar { conductor: n, coeffs }
    }

    /// The compatible primitive m-th root of unity ζ_m = ζ_N^{N/m}.
    pub fn primitive_root(m: u32) -> Result<Self, FieldError> {
        if m == 0 {
            return Err(FieldError::Usage("root of unity order must be positive".into()));
        }
        if m > max_conductor() {
            return Err(FieldError::ConductorTooLarge { conductor: m, bound: max_conductor() });
        }
        let mut poly = vec![Rational::ZERO; 2];
        poly[1] = Rational::ONE;
        Ok(Self::normalized(m, reduce_mod_cyclotomic(poly, m)))
    }

    /// ζ_m^k for any integer k.
    pub fn root_power(m: u32, k: i64) -> Result<Self, FieldError> {
        let z = Self::primitive_root(m)?;
        let e = k.rem_euclid(m as i64) as u32;
        Ok(z.pow(e))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    /// Re-expresses `self` at conductor `n`, which must be a multiple of the
    /// current conductor.
    pub fn embed_conductor(&self, n: u32) -> Result<Vec<Rational>, FieldError> {
        if n == 0 || !n.is_multiple_of(self.conductor) {
            return Err(FieldError::Usage(format!("conductor {} does not divide {n}", self.conductor)));
        }
        Ok(self.raw_embed(n))
    }

    /// Like [`embed_conductor`](Self::embed_conductor) but returns a scalar
    /// carrying the requested conductor label where possible.
    pub fn embed(&self, n: u32) -> Result<Self, FieldError> {
        let coeffs = self.embed_conductor(n)?;
        Ok(Self::normalized(n, coeffs))
    }

    fn raw_embed(&self, n: u32) -> Vec<Rational> {
        if n == self.conductor {
            return self.coeffs.clone();
        }
        let step = (n / self.conductor) as usize;
        if self.conductor == 1 {
            let mut out = vec![Rational::ZERO; euler_phi(n)];
            out[0] = self.coeffs[0].clone();
            return out;
        }
        let mut poly = vec![Rational::ZERO; (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        reduce_mod_cyclotomic(poly, n)
    }

    fn aligned(&self, other: &Self) -> (u32, Vec<Rational>, Vec<Rational>) {
        let n = lcm(self.conductor, other.conductor);
        (n, self.raw_embed(n), other.raw_embed(n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()?));
        }
        let inv = inverse_mod_cyclotomic(&self.coeffs, self.conductor).ok_or(FieldError::DivisionByZero)?;
        Ok(Self::normalized(self.conductor, inv))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * &rhs.inv()?)
    }

    /// Coefficient tuple at conductor `n`, used for deterministic tie breaks.
    pub fn key_at(&self, n: u32) -> Vec<Rational> {
        self.raw_embed(n)
    }

    /// Lexicographic comparison of coefficient tuples at the common conductor.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let (_, a, b) = self.aligned(other);
        a.cmp(&b)
    }

    /// Representation size used to pick cheap pivots.
    pub fn size_hint(&self) -> u64 {
        self.coeffs.iter().map(Rational::size_hint).sum::<u64>() + self.conductor as u64
    }

    /// Textual form `cyc(N)[c0,c1,...]`.
    pub fn to_cyc_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("cyc({})[{}]", self.conductor, parts.join(","))
    }
}

impl Default for CycScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        // rationals are always stored at conductor 1
        if self.conductor == 1 || other.conductor == 1 {
            return false;
        }
        let (_, a, b) = self.aligned(other);
        a == b
    }
}

impl Eq for CycScalar {}

impl From<i64> for CycScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for CycScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

fn check_conductor(n: u32) {
    assert!(
        n <= max_conductor(),
        "cyclotomic conductor {n} exceeds the configured bound {} (set SUPERLOOP_MAX_CONDUCTOR)",
        max_conductor()
    );
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &'a CycScalar) -> CycScalar {
        if self.conductor == 1 && rhs.conductor == 1 {
            return CycScalar::from_rational(&self.coeffs[0] + &rhs.coeffs[0]);
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (n, mut a, b) = self.aligned(rhs);
        check_conductor(n);
        for (x, y) in a.iter_mut().zip(&b) {
            *x += y;
        }
        CycScalar::normalized(n, a)
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &'a CycScalar) -> CycScalar {
        if self.conductor == 1 && rhs.conductor == 1 {
            return CycScalar::from_rational(&self.coeffs[0] - &rhs.coeffs[0]);
        }
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &'a CycScalar) -> CycScalar {
        if self.conductor == 1 || rhs.conductor == 1 {
            let (r, other) = if self.conductor == 1 { (&self.coeffs[0], rhs) } else { (&rhs.coeffs[0], self) };
            if r.is_zero() {
                return CycScalar::zero();
            }
            if r.is_one() {
                return other.clone();
            }
            let coeffs = other.coeffs.iter().map(|c| c * r).collect();
            return CycScalar { conductor: other.conductor, coeffs };
        }
        let (n, a, b) = self.aligned(rhs);
        check_conductor(n);
        let mut prod = vec![Rational::ZERO; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    let t = x * y;
                    prod[i + j] += &t;
                }
            }
        }
        CycScalar::normalized(n, reduce_mod_cyclotomic(prod, n))
    }
}

impl<'a> Div<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn div(self, rhs: &'a CycScalar) -> CycScalar {
        self.checked_div(rhs).expect("cyclotomic division by zero")
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &'a CycScalar) -> CycScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        if self.conductor == 1 && rhs.conductor == 1 {
            self.coeffs[0] += &rhs.coeffs[0];
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        if self.conductor == 1 && rhs.conductor == 1 {
            self.coeffs[0] -= &rhs.coeffs[0];
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&CycScalar> for CycScalar {
    fn mul_assign(&mut self, rhs: &CycScalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            f.write_str(&self.to_cyc_string())
        }
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CycScalar {
    type Err = FieldError;

    /// Parses either the textual form `cyc(N)[c0,...]` or a plain rational.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let Some(rest) = s.strip_prefix("cyc(") else {
            return Ok(Self::from_rational(s.parse()?));
        };
        let bad = || FieldError::Parse(format!("invalid cyclotomic literal `{s}`"));
        let (n, rest) = rest.split_once(')').ok_or_else(bad)?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        let body = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let coeffs = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',').map(str::parse).collect::<Result<Vec<Rational>, _>>()?
        };
        Self::from_coeffs(n, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32) -> CycScalar {
        CycScalar::primitive_root(m).unwrap()
    }

    #[test]
    fn one_plus_zeta3_times_one_plus_zeta3_squared() {
        // (1+x)(1+x^2) = 1 + x + x^2 + x^3 ≡ x^3 ≡ 1 modulo x^2+x+1
        let a = &CycScalar::one() + &z(3);
        let b = &CycScalar::one() + &z(3).pow(2);
        assert_eq!(&a * &b, CycScalar::one());
    }

    #[test]
    fn small_roots() {
        assert_eq!(z(1), CycScalar::one());
        assert_eq!(z(2), CycScalar::from_int(-1));
        assert_eq!(&z(4) * &z(4), CycScalar::from_int(-1));
        assert_eq!(z(6).pow(2), z(3));
    }

    #[test]
    fn embedding_compatibility() {
        let three = CycScalar::from_int(3);
        assert_eq!(three.embed(12).unwrap(), three);
        // ζ₃ seen at conductor 6 is ζ₆², and it satisfies Φ₃
        let e = z(3).embed(6).unwrap();
        assert_eq!(e, z(6).pow(2));
        assert!((&(&e * &e) + &e + CycScalar::one()).is_zero());
        assert_eq!(z(12).pow(3), z(4));
        assert!(CycScalar::primitive_root(4).unwrap().embed(6).is_err());
    }

    #[test]
    fn division_and_errors() {
        let a = &z(5) + &CycScalar::from_int(2);
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, CycScalar::one());
        assert!(CycScalar::zero().inv().is_err());
        assert!(CycScalar::one().checked_div(&CycScalar::zero()).is_err());
    }

    #[test]
    fn textual_roundtrip_and_normalization() {
        let a: CycScalar = "cyc(3)[2/4,-6/3]".parse().unwrap();
        assert_eq!(a.to_cyc_string(), "cyc(3)[1/2,-2]");
        assert_eq!(a.to_cyc_string().parse::<CycScalar>().unwrap(), a);
        let r: CycScalar = "cyc(4)[5,0]".parse().unwrap();
        assert_eq!(r, CycScalar::from_int(5));
        assert!("cyc(4)[1]".parse::<CycScalar>().is_err());
        assert!("cyc(4)[1,2".parse::<CycScalar>().is_err());
    }
}
