//! Sparse bivariate polynomials over the two-element field.
//!
//! A polynomial is the set of monomials `x^i y^j` whose coefficient is 1.
//! Addition is symmetric difference; multiplication collapses coefficients
//! mod 2. Exponents are `u32` and every operation that could push an
//! exponent past `u32::MAX` reports [`Error::ExponentOverflow`] instead of
//! wrapping. The `Add`/`Mul` operator impls panic in that case.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// The monomial `x^x y^y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(self) -> u64 {
        self.x as u64 + self.y as u64
    }

    pub fn checked_mul(self, other: Monomial) -> Result<Monomial> {
        match (self.x.checked_add(other.x), self.y.checked_add(other.y)) {
            (Some(x), Some(y)) => Ok(Monomial { x, y }),
            _ => Err(Error::ExponentOverflow),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn var(f: &mut fmt::Formatter<'_>, name: &str, e: u32) -> fmt::Result {
            match e {
                0 => Ok(()),
                1 => write!(f, "{name}"),
                _ => write!(f, "{name}^{e}"),
            }
        }
        if self.x == 0 && self.y == 0 {
            return write!(f, "1");
        }
        var(f, "x", self.x)?;
        var(f, "y", self.y)
    }
}

/// Polynomial in `x, y` with coefficients in Z/2.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyGF2 {
    terms: BTreeSet<Monomial>,
}

impl PolyGF2 {
    pub fn zero() -> Self {
        PolyGF2::default()
    }

    pub fn one() -> Self {
        PolyGF2::monomial(0, 0)
    }

    pub fn x() -> Self {
        PolyGF2::monomial(1, 0)
    }

    pub fn y() -> Self {
        PolyGF2::monomial(0, 1)
    }

    pub fn monomial(x: u32, y: u32) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(Monomial { x, y });
        PolyGF2 { terms }
    }

    /// Builds a polynomial from exponent pairs. Repeated pairs cancel in pairs.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut p = PolyGF2::zero();
        for (x, y) in pairs {
            p.toggle(Monomial { x, y });
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, x: u32, y: u32) -> bool {
        self.terms.contains(&Monomial { x, y })
    }

    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().copied()
    }

    /// Highest total degree of a present monomial, `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|m| m.degree()).max()
    }

    /// Adds a single monomial (mod 2).
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn try_mul(&self, other: &PolyGF2) -> Result<PolyGF2> {
        let mut out = PolyGF2::zero();
        for &m in &self.terms {
            for &n in &other.terms {
                out.toggle(m.checked_mul(n)?);
            }
        }
        Ok(out)
    }

    /// `self^n` by repeated squaring; `p^0 = 1` (including `0^0`).
    pub fn try_pow(&self, mut n: u64) -> Result<PolyGF2> {
        let mut result = PolyGF2::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn pow(&self, n: u64) -> PolyGF2 {
        self.try_pow(n).expect("exponent overflow in PolyGF2::pow")
    }

    /// Replaces `x` and `y` by the linear forms in `sub` and expands.
    pub fn try_substitute(&self, sub: &LinearSubstitution) -> Result<PolyGF2> {
        let (Some(max_x), Some(max_y)) = (
            self.terms.iter().map(|m| m.x).max(),
            self.terms.iter().map(|m| m.y).max(),
        ) else {
            return Ok(PolyGF2::zero());
        };
        let powers = |form: LinearForm, top: u32| -> Result<Vec<PolyGF2>> {
            let base = form.to_poly();
            let mut v = Vec::with_capacity(top as usize + 1);
            v.push(PolyGF2::one());
            for e in 1..=top as usize {
                let next = v[e - 1].try_mul(&base)?;
                v.push(next);
            }
            Ok(v)
        };
        let px = powers(sub.image_of_x, max_x)?;
        let py = powers(sub.image_of_y, max_y)?;
        let mut out = PolyGF2::zero();
        for m in &self.terms {
            let t = px[m.x as usize].try_mul(&py[m.y as usize])?;
            out = &out + &t;
        }
        Ok(out)
    }

    pub fn substitute(&self, sub: &LinearSubstitution) -> PolyGF2 {
        self.try_substitute(sub)
            .expect("exponent overflow in PolyGF2::substitute")
    }
}

impl Add for &PolyGF2 {
    type Output = PolyGF2;
    fn add(self, rhs: &PolyGF2) -> PolyGF2 {
        PolyGF2 {
            terms: self.terms.symmetric_difference(&rhs.terms).copied().collect(),
        }
    }
}

impl Add for PolyGF2 {
    type Output = PolyGF2;
    fn add(self, rhs: PolyGF2) -> PolyGF2 {
        &self + &rhs
    }
}

impl Mul for &PolyGF2 {
    type Output = PolyGF2;
    fn mul(self, rhs: &PolyGF2) -> PolyGF2 {
        self.try_mul(rhs).expect("exponent overflow in PolyGF2 product")
    }
}

impl Mul for PolyGF2 {
    type Output = PolyGF2;
    fn mul(self, rhs: PolyGF2) -> PolyGF2 {
        &self * &rhs
    }
}

impl FromIterator<Monomial> for PolyGF2 {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut p = PolyGF2::zero();
        for m in iter {
            p.toggle(m);
        }
        p
    }
}

/// Terms are printed by descending degree, then descending power of `x`.
impl fmt::Display for PolyGF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ms: Vec<Monomial> = self.terms.iter().copied().collect();
        ms.sort_by(|l, r| r.degree().cmp(&l.degree()).then(r.x.cmp(&l.x)));
        for (k, m) in ms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// One of the four linear forms `0, x, y, x + y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    pub x: bool,
    pub y: bool,
}

impl LinearForm {
    pub const ZERO: LinearForm = LinearForm { x: false, y: false };
    pub const X: LinearForm = LinearForm { x: true, y: false };
    pub const Y: LinearForm = LinearForm { x: false, y: true };
    pub const X_PLUS_Y: LinearForm = LinearForm { x: true, y: true };

    pub const ALL: [LinearForm; 4] = [Self::ZERO, Self::X, Self::Y, Self::X_PLUS_Y];

    pub fn to_poly(self) -> PolyGF2 {
        let mut p = PolyGF2::zero();
        if self.x {
            p.toggle(Monomial::new(1, 0));
        }
        if self.y {
            p.toggle(Monomial::new(0, 1));
        }
        p
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match (self.x, self.y) {
            (false, false) => "0",
            (true, false) => "x",
            (false, true) => "y",
            (true, true) => "x+y",
        })
    }
}

/// Images of the degree-1 generators `x', y'` as linear forms in `x, y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearSubstitution {
    pub image_of_x: LinearForm,
    pub image_of_y: LinearForm,
}

impl LinearSubstitution {
    pub const IDENTITY: LinearSubstitution = LinearSubstitution {
        image_of_x: LinearForm::X,
        image_of_y: LinearForm::Y,
    };

    /// `x -> x, y -> x + y`, which exchanges the factors `y` and `x + y`.
    pub const SHEAR: LinearSubstitution = LinearSubstitution {
        image_of_x: LinearForm::X,
        image_of_y: LinearForm::X_PLUS_Y,
    };

    pub const SWAP: LinearSubstitution = LinearSubstitution {
        image_of_x: LinearForm::Y,
        image_of_y: LinearForm::X,
    };

    pub fn new(image_of_x: LinearForm, image_of_y: LinearForm) -> Self {
        LinearSubstitution { image_of_x, image_of_y }
    }

    /// Whether the 2x2 matrix is invertible over Z/2.
    pub fn is_invertible(&self) -> bool {
        (self.image_of_x.x & self.image_of_y.y) ^ (self.image_of_x.y & self.image_of_y.x)
    }
}

impl fmt::Display for LinearSubstitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x'->{}; y'->{}", self.image_of_x, self.image_of_y)
    }
}

/// `binom(n, m) mod 2`, zero when `m < 0` or `m > n`.
///
/// Lucas: the binomial is odd iff every binary digit of `m` is at most the
/// corresponding digit of `n`.
pub fn binom_mod2(n: u64, m: i64) -> bool {
    if m < 0 {
        return false;
    }
    let m = m as u64;
    m <= n && (m & !n) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(u32, u32)]) -> PolyGF2 {
        PolyGF2::from_terms(pairs.iter().copied())
    }

    #[test]
    fn add_examples() {
        let x = PolyGF2::x();
        let y = PolyGF2::y();
        assert_eq!(&(&x + &y) + &y, x);
        assert_eq!(&PolyGF2::zero() + &x, x);
        assert_eq!(
            &p(&[(2, 0), (1, 1)]) + &p(&[(1, 1), (0, 2)]),
            p(&[(2, 0), (0, 2)])
        );
    }

    #[test]
    fn mul_examples() {
        let s = &PolyGF2::x() + &PolyGF2::y();
        assert_eq!(&s * &s, p(&[(2, 0), (0, 2)]));
        assert!((&s * &PolyGF2::zero()).is_zero());
        assert_eq!(&s * &PolyGF2::y(), p(&[(1, 1), (0, 2)]));
    }

    #[test]
    fn pow_examples() {
        let s = &PolyGF2::x() + &PolyGF2::y();
        assert_eq!(s.pow(0), PolyGF2::one());
        assert_eq!(s.pow(2), p(&[(2, 0), (0, 2)]));
        assert_eq!(s.pow(3), p(&[(3, 0), (2, 1), (1, 2), (0, 3)]));
        assert_eq!(s.pow(4), p(&[(4, 0), (0, 4)]));
        assert_eq!(PolyGF2::zero().pow(0), PolyGF2::one());
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(
            p(&[(1, 1)]).substitute(&LinearSubstitution::IDENTITY),
            p(&[(1, 1)])
        );
        assert_eq!(
            p(&[(0, 2)]).substitute(&LinearSubstitution::SHEAR),
            p(&[(2, 0), (0, 2)])
        );
        assert_eq!(PolyGF2::x().substitute(&LinearSubstitution::SWAP), PolyGF2::y());
        assert!(PolyGF2::zero().substitute(&LinearSubstitution::SWAP).is_zero());
    }

    #[test]
    fn binom_examples() {
        assert!(!binom_mod2(3, 5));
        assert!(!binom_mod2(4, 2));
        assert!(!binom_mod2(4, -1));
        for n in 0..100 {
            assert!(binom_mod2(n, 0));
            assert!(binom_mod2(n, n as i64));
        }
    }

    #[test]
    fn overflow_is_reported() {
        let big = PolyGF2::monomial(u32::MAX, 0);
        assert_eq!(big.try_mul(&PolyGF2::x()), Err(Error::ExponentOverflow));
        assert_eq!(PolyGF2::x().try_pow(1 << 33), Err(Error::ExponentOverflow));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(0, 0), (1, 0), (1, 1), (0, 2)]).to_string(), "xy + y^2 + x + 1");
        assert_eq!(PolyGF2::zero().to_string(), "0");
        assert_eq!(LinearSubstitution::SHEAR.to_string(), "x'->x; y'->x+y");
    }

    #[test]
    fn invertibility() {
        assert!(LinearSubstitution::IDENTITY.is_invertible());
        assert!(LinearSubstitution::SHEAR.is_invertible());
        assert!(LinearSubstitution::SWAP.is_invertible());
        assert!(!LinearSubstitution::new(LinearForm::ZERO, LinearForm::Y).is_invertible());
        assert!(!LinearSubstitution::new(LinearForm::X_PLUS_Y, LinearForm::X_PLUS_Y).is_invertible());
    }
}
