//! Exact arithmetic in the quaternion algebra B = (a,b | Q).
//!
//! B is spanned by 1, i, j, ij over Q with i^2 = a, j^2 = b and ij = -ji.
//! Everything here is exact: coordinates are arbitrary-precision rationals
//! and the local invariants (Hilbert symbols, ramified primes, discriminant)
//! are discrete data computed without floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational p/q.
pub fn ratio(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// A place of Q: a finite prime or the real place.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Place {
    Finite(u64),
    Infinite,
}

/// An element x0 + x1*i + x2*j + x3*ij with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionElement {
    pub x0: Rational,
    pub x1: Rational,
    pub x2: Rational,
    pub x3: Rational,
}

impl QuaternionElement {
    pub fn new(x0: Rational, x1: Rational, x2: Rational, x3: Rational) -> Self {
        Self { x0, x1, x2, x3 }
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64, x3: i64) -> Self {
        Self::new(rat(x0), rat(x1), rat(x2), rat(x3))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn ij() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn coords(&self) -> [&Rational; 4] {
        [&self.x0, &self.x1, &self.x2, &self.x3]
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(c * &self.x0, c * &self.x1, c * &self.x2, c * &self.x3)
    }

    pub fn is_zero(&self) -> bool {
        self.x0.is_zero() && self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    /// Conjugate: negates the pure part.
    pub fn conjugate(&self) -> Self {
        Self::new(self.x0.clone(), -&self.x1, -&self.x2, -&self.x3)
    }

    /// Reduced trace trd(x) = x + conj(x) = 2*x0.
    pub fn reduced_trace(&self) -> Rational {
        &self.x0 + &self.x0
    }

    /// True if the reduced trace vanishes.
    pub fn is_pure(&self) -> bool {
        self.x0.is_zero()
    }
}

impl Add for &QuaternionElement {
    type Output = QuaternionElement;
    fn add(self, rhs: &QuaternionElement) -> QuaternionElement {
        QuaternionElement::new(
            &self.x0 + &rhs.x0,
            &self.x1 + &rhs.x1,
            &self.x2 + &rhs.x2,
            &self.x3 + &rhs.x3,
        )
    }
}

impl Sub for &QuaternionElement {
    type Output = QuaternionElement;
    fn sub(self, rhs: &QuaternionElement) -> QuaternionElement {
        QuaternionElement::new(
            &self.x0 - &rhs.x0,
            &self.x1 - &rhs.x1,
            &self.x2 - &rhs.x2,
            &self.x3 - &rhs.x3,
        )
    }
}

impl Neg for &QuaternionElement {
    type Output = QuaternionElement;
    fn neg(self) -> QuaternionElement {
        QuaternionElement::new(-&self.x0, -&self.x1, -&self.x2, -&self.x3)
    }
}

impl fmt::Display for QuaternionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (c, name) in [
            (&self.x0, ""),
            (&self.x1, "i"),
            (&self.x2, "j"),
            (&self.x3, "ij"),
        ] {
            if c.is_zero() {
                continue;
            }
            let body = if name.is_empty() {
                format!("{c}")
            } else if c.is_one() {
                name.to_string()
            } else if (-c).is_one() {
                format!("-{name}")
            } else {
                format!("{c}*{name}")
            };
            if parts.is_empty() {
                parts.push(body);
            } else if body.starts_with('-') {
                parts.push(format!(" - {}", &body[1..]));
            } else {
                parts.push(format!(" + {body}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.concat())
        }
    }
}

/// The algebra (a,b | Q) together with its computed local invariants.
///
/// Construction rejects split (D = 1) and definite algebras, so every value
/// of this type is an indefinite division algebra as required downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionAlgebra {
    a: Rational,
    b: Rational,
    ramified_primes: Vec<u64>,
    discriminant: u64,
    indefinite: bool,
}

impl QuaternionAlgebra {
    /// Compute the invariants of (a,b | Q) and gate the hypotheses.
    ///
    /// Ramified primes are found among 2 and the primes dividing the
    /// numerators and denominators of a and b; the discriminant is their
    /// product. Errors: `SplitAlgebra` if no finite prime ramifies,
    /// `DefiniteAlgebra` if the real place does.
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        assert!(!a.is_zero() && !b.is_zero(), "a and b must be nonzero");
        if hilbert_symbol(&a, &b, Place::Infinite) == -1 {
            return Err(Error::DefiniteAlgebra);
        }
        let mut candidates = vec![2u64];
        for r in [&a, &b] {
            for n in [r.numer().abs(), r.denom().clone()] {
                candidates.extend(trial_factor(&n));
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        let ramified: Vec<u64> = candidates
            .into_iter()
            .filter(|&p| hilbert_symbol(&a, &b, Place::Finite(p)) == -1)
            .collect();
        if ramified.is_empty() {
            return Err(Error::SplitAlgebra);
        }
        // Indefinite here, so the finite ramified set alone has even cardinality.
        debug_assert_eq!(ramified.len() % 2, 0);
        let discriminant = ramified.iter().product();
        Ok(Self {
            a,
            b,
            ramified_primes: ramified,
            discriminant,
            indefinite: true,
        })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(rat(a), rat(b))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn ramified_primes(&self) -> &[u64] {
        &self.ramified_primes
    }

    pub fn discriminant(&self) -> u64 {
        self.discriminant
    }

    pub fn is_indefinite(&self) -> bool {
        self.indefinite
    }

    /// Exact product in the presentation basis.
    ///
    /// Determined by i^2 = a, j^2 = b, ij = -ji, so (ij)^2 = -ab,
    /// jk = -b i, kj = b i, ik = a j, ki = -a j for k = ij.
    pub fn mul(&self, x: &QuaternionElement, y: &QuaternionElement) -> QuaternionElement {
        let (a, b) = (&self.a, &self.b);
        let ab = a * b;
        QuaternionElement::new(
            &x.x0 * &y.x0 + a * &x.x1 * &y.x1 + b * &x.x2 * &y.x2 - &ab * &x.x3 * &y.x3,
            &x.x0 * &y.x1 + &x.x1 * &y.x0 - b * &x.x2 * &y.x3 + b * &x.x3 * &y.x2,
            &x.x0 * &y.x2 + &x.x2 * &y.x0 + a * &x.x1 * &y.x3 - a * &x.x3 * &y.x1,
            &x.x0 * &y.x3 + &x.x3 * &y.x0 + &x.x1 * &y.x2 - &x.x2 * &y.x1,
        )
    }

    /// Reduced norm nrd(x) = x * conj(x) = x0^2 - a x1^2 - b x2^2 + ab x3^2.
    pub fn reduced_norm(&self, x: &QuaternionElement) -> Rational {
        let (a, b) = (&self.a, &self.b);
        &x.x0 * &x.x0 - a * &x.x1 * &x.x1 - b * &x.x2 * &x.x2 + a * b * &x.x3 * &x.x3
    }
}

/// Hilbert symbol (a,b)_v for nonzero rationals, by the standard local formulas.
///
/// Returns +1 iff z^2 = a x^2 + b y^2 has a nontrivial point over the
/// completion at `place`. At the real place this is -1 iff a < 0 and b < 0;
/// at odd p and at 2 the unit/valuation formulas are used. The brute-force
/// conic-solvability oracle in the tests cross-checks these formulas.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: Place) -> i32 {
    assert!(!a.is_zero() && !b.is_zero(), "a and b must be nonzero");
    match place {
        Place::Infinite => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(2) => hilbert_at_two(a, b),
        Place::Finite(p) => hilbert_at_odd(a, b, p),
    }
}

fn hilbert_at_odd(a: &Rational, b: &Rational, p: u64) -> i32 {
    let (alpha, u) = split_valuation(a, p);
    let (beta, v) = split_valuation(b, p);
    let eps = ((p - 1) / 2) % 2; // (p-1)/2 mod 2
    let mut s = if (alpha * beta).rem_euclid(2) == 1 && eps == 1 {
        -1
    } else {
        1
    };
    if beta.rem_euclid(2) == 1 {
        s *= legendre_unit(&u, p);
    }
    if alpha.rem_euclid(2) == 1 {
        s *= legendre_unit(&v, p);
    }
    s
}

fn hilbert_at_two(a: &Rational, b: &Rational) -> i32 {
    let (alpha, u) = split_valuation(a, 2);
    let (beta, v) = split_valuation(b, 2);
    let uu = unit_mod(&u, 8);
    let vv = unit_mod(&v, 8);
    let eps_u = ((uu - 1) / 2) % 2;
    let eps_v = ((vv - 1) / 2) % 2;
    let om_u = ((uu * uu - 1) / 8) % 2;
    let om_v = ((vv * vv - 1) / 8) % 2;
    let expo =
        (eps_u * eps_v + alpha.rem_euclid(2) as u64 * om_v + beta.rem_euclid(2) as u64 * om_u) % 2;
    if expo == 1 {
        -1
    } else {
        1
    }
}

/// Write r = p^e * u with u a p-adic unit; return (e mod 2, u).
fn split_valuation(r: &Rational, p: u64) -> (i64, Rational) {
    let pb = BigInt::from(p);
    let mut numer = r.numer().clone();
    let mut denom = BigInt::from(r.denom().clone());
    let mut e: i64 = 0;
    while (&numer % &pb).is_zero() {
        numer /= &pb;
        e += 1;
    }
    while (&denom % &pb).is_zero() {
        denom /= &pb;
        e -= 1;
    }
    (e, BigRational::new(numer, denom))
}

/// Legendre symbol of a p-adic unit rational, p odd.
fn legendre_unit(u: &Rational, p: u64) -> i32 {
    let pb = BigInt::from(p);
    let n = mod_floor(u.numer(), &pb);
    let d = mod_floor(u.denom(), &pb);
    let d_inv = d.modpow(&(&pb - 2), &pb); // Fermat inverse, p prime
    let x = (n * d_inv) % &pb;
    let ls = x.modpow(&((&pb - 1) / 2), &pb);
    if ls.is_one() {
        1
    } else {
        -1
    }
}

/// Residue of an odd-unit rational mod 8, via numer * denom^{-1};
/// for odd d, d^{-1} = d mod 8.
fn unit_mod(u: &Rational, m: u64) -> u64 {
    let mb = BigInt::from(m);
    let n = mod_floor(u.numer(), &mb);
    let d = mod_floor(u.denom(), &mb);
    let r = (n * d) % &mb;
    u64::try_from(r).unwrap()
}

fn mod_floor(n: &BigInt, m: &BigInt) -> BigInt {
    let r = n % m;
    if r.is_negative() {
        r + m
    } else {
        r
    }
}

/// Prime factors of |n| by trial division (inputs here are user-scale).
fn trial_factor(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2u64);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            out.push(u64::try_from(&p).expect("prime factor fits u64"));
            while (&n % &p).is_zero() {
                n /= &p;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(u64::try_from(&n).expect("prime factor fits u64"));
    }
    out
}
