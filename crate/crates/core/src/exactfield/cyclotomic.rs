//! Cyclotomic polynomials and polynomial arithmetic over Q used by
//! [`CycScalar`](super::CycScalar).

use std::sync::OnceLock;

use num_integer::Integer;

use super::rational::Rational;

/// Default upper bound on conductors, overridable with `SUPERLOOP_MAX_CONDUCTOR`.
pub const DEFAULT_MAX_CONDUCTOR: u32 = 60;

pub const MAX_CONDUCTOR_ENV: &str = "SUPERLOOP_MAX_CONDUCTOR";

pub fn max_conductor() -> u32 {
    static BOUND: OnceLock<u32> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var(MAX_CONDUCTOR_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
            .filter(|&v| v >= 1)
            .unwrap_or(DEFAULT_MAX_CONDUCTOR)
    })
}

pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Exact division of integer polynomials (coefficients low to high) by a monic divisor.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Φ_n computed as (x^n − 1) divided by Φ_d for every proper divisor d of n.
fn compute_cyclotomic(n: u32, table: &[Vec<i64>]) -> Vec<i64> {
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = if (d as usize) < table.len() && !table[d as usize].is_empty() {
                table[d as usize].clone()
            } else {
                cyclotomic_uncached(d)
            };
            poly = div_monic(&poly, &phi_d);
        }
    }
    poly
}

fn cyclotomic_uncached(n: u32) -> Vec<i64> {
    let mut table: Vec<Vec<i64>> = vec![Vec::new(); n as usize];
    for d in 1..n {
        if n.is_multiple_of(d) {
            table[d as usize] = compute_cyclotomic(d, &table);
        }
    }
    compute_cyclotomic(n, &table)
}

fn table() -> &'static Vec<Vec<i64>> {
    static TABLE: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let bound = max_conductor().max(DEFAULT_MAX_CONDUCTOR) as usize;
        let mut t: Vec<Vec<i64>> = vec![Vec::new(); bound + 1];
        for n in 1..=bound as u32 {
            let p = compute_cyclotomic(n, &t);
            t[n as usize] = p;
        }
        t
    })
}

/// Coefficients (low to high, monic) of the n-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u32) -> std::borrow::Cow<'static, [i64]> {
    let t = table();
    if (n as usize) < t.len() {
        std::borrow::Cow::Borrowed(&t[n as usize])
    } else {
        std::borrow::Cow::Owned(cyclotomic_uncached(n))
    }
}

/// Reduces a polynomial modulo Φ_n in place and returns exactly φ(n) coefficients.
pub fn reduce_mod_cyclotomic(mut poly: Vec<Rational>, n: u32) -> Vec<Rational> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            let c = std::mem::take(&mut poly[k]);
            if c.is_zero() {
                continue;
            }
            for (j, &pj) in phi[..deg].iter().enumerate() {
                if pj != 0 {
                    let t = &c * &Rational::from_int(pj);
                    poly[k - deg + j] -= &t;
                }
            }
        }
        poly.truncate(deg);
    }
    poly.resize(deg, Rational::ZERO);
    poly
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Polynomial division with remainder over Q.
fn poly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = den[dd].recip().expect("nonzero leading coefficient");
    let mut quot = vec![Rational::ZERO; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] * &lead_inv;
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                let t = &c * dj;
                rem[k + j] -= &t;
            }
        }
        quot[k] = c;
    }
    rem.truncate(dd);
    trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                let t = x * y;
                out[i + j] += &t;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::ZERO; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo Φ_n via the extended Euclidean algorithm.
/// Returns `None` when `a` is zero in Q(ζ_n).
pub fn inverse_mod_cyclotomic(a: &[Rational], n: u32) -> Option<Vec<Rational>> {
    let modulus: Vec<Rational> = cyclotomic_poly(n).iter().map(|&c| Rational::from_int(c)).collect();
    let mut r0 = modulus;
    let mut r1 = a.to_vec();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    // invariant: s_i * a ≡ r_i (mod Φ_n)
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::ONE];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd, a nonzero constant since Φ_n is irreducible
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip().ok()?;
    let inv: Vec<Rational> = s0.iter().map(|x| x * &c).collect();
    Some(reduce_mod_cyclotomic(inv, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(&*cyclotomic_poly(1), &[-1, 1]);
        assert_eq!(&*cyclotomic_poly(2), &[1, 1]);
        assert_eq!(&*cyclotomic_poly(3), &[1, 1, 1]);
        assert_eq!(&*cyclotomic_poly(4), &[1, 0, 1]);
        assert_eq!(&*cyclotomic_poly(6), &[1, -1, 1]);
        assert_eq!(&*cyclotomic_poly(12), &[1, 0, -1, 0, 1]);
    }

    #[test]
    fn degrees_match_totient() {
        for n in 1..=60 {
            assert_eq!(cyclotomic_poly(n).len() - 1, euler_phi(n), "n = {n}");
        }
        // beyond the cache
        assert_eq!(cyclotomic_poly(105).len() - 1, euler_phi(105));
        assert!(cyclotomic_poly(105).contains(&-2));
    }
}
