//! Exact integer primitives shared by every solver.
//!
//! All public entry points are total. Solvers work in `i64` and route every
//! product and sum through the checked helpers at the bottom of this file, so
//! an out-of-range intermediate surfaces as [`Error::Overflow`] instead of
//! wrapping.

use crate::error::{Error, Result};

/// Output of the extended Euclidean algorithm: `a*x + b*y == g`.
///
/// `g` is unsigned because `gcd(i64::MIN, 0) = 2^63` does not fit in `i64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bezout {
    pub g: u64,
    pub x: i64,
    pub y: i64,
}

/// Nonnegative greatest common divisor; `gcd(0, 0) == 0`.
pub fn gcd(a: i64, b: i64) -> u64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `gcd(gcd(a, b), c)`.
pub fn gcd3(a: i64, b: i64, c: i64) -> u64 {
    let mut g = gcd(a, b);
    let mut c = c.unsigned_abs();
    while c != 0 {
        (g, c) = (c, g % c);
    }
    g
}

/// True iff `l` is an integer multiple of `k`. `divides(0, l)` holds only for `l == 0`.
pub fn divides(k: i64, l: i64) -> bool {
    if k == 0 {
        l == 0
    } else {
        // i128 sidesteps i64::MIN % -1.
        (l as i128) % (k as i128) == 0
    }
}

/// Extended Euclid with a canonical coefficient pair.
///
/// When `b != 0` and `g != 0`, `x` is the representative of its residue class
/// modulo `|b|/g` with the smallest absolute value; ties go to the nonnegative
/// one. When `b == 0` the pair is `(sign(a), 0)`.
pub fn ext_gcd(a: i64, b: i64) -> Bezout {
    let (a, b) = (a as i128, b as i128);
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    let (g, mut x) = if r0 < 0 { (-r0, -s0) } else { (r0, s0) };
    let y;
    if b == 0 {
        x = a.signum();
        y = 0;
    } else if g == 0 {
        x = 0;
        y = 0;
    } else {
        let step = (b / g).abs();
        let r = x.rem_euclid(step);
        x = if r <= step - r { r } else { r - step };
        y = (g - a * x) / b;
    }
    // |x| <= |b|/(2g) and |y| <= |a|/(2g) + 1, both inside i64.
    Bezout {
        g: g as u64,
        x: x as i64,
        y: y as i64,
    }
}

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(Error::Overflow)
}

/// `a / b` where the caller has established `b | a` and `b != 0`.
pub(crate) fn exact_div(a: i64, b: i64) -> Result<i64> {
    debug_assert!(b != 0 && divides(b, a));
    a.checked_div(b).ok_or(Error::Overflow)
}

pub(crate) fn gcd_signed(a: i64, b: i64) -> Result<i64> {
    i64::try_from(gcd(a, b)).map_err(|_| Error::Overflow)
}

pub(crate) fn gcd3_signed(a: i64, b: i64, c: i64) -> Result<i64> {
    i64::try_from(gcd3(a, b, c)).map_err(|_| Error::Overflow)
}

/// Bezout triple as signed values, for use inside the solvers.
pub(crate) fn bezout(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    let e = ext_gcd(a, b);
    let g = i64::try_from(e.g).map_err(|_| Error::Overflow)?;
    Ok((g, e.x, e.y))
}
