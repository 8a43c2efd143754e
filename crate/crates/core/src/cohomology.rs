//! The ring `Z/2[x,y] / (x^a, (x+y)^q y^(b-q))`, i.e. the mod-2 cohomology
//! of `M(q) = P(qγ ⊕ (b-q)1)` over `RP^(a-1)`.
//!
//! Elements are kept in normal form on the basis `x^i y^j`, `i < a`, `j < b`.
//! Reduction is a two-rule rewriting system:
//!
//! * R1: a monomial with `i >= a` is zero.
//! * R2: `y^b = Σ_{k=1..q} binom(q,k) x^k y^(b-k)`, obtained from the second
//!   relation by isolating its `y^b` term (whose coefficient `binom(q,0)` is 1).
//!
//! R2 strictly lowers the `y`-exponent of the monomial it rewrites, so
//! repeatedly rewriting the monomial of largest `y`-exponent terminates.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2poly::{binom_mod2, LinearSubstitution, Monomial, PolyGF2};

/// The triple `(a, b, q)` naming one ring of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingPresentation {
    a: u32,
    b: u32,
    q: u32,
}

impl RingPresentation {
    pub fn new(a: u32, b: u32, q: u32) -> Result<Self> {
        if a == 0 || b == 0 || q > b {
            return Err(Error::InvalidPresentation {
                a: a as u64,
                b: b as u64,
                q: q as u64,
            });
        }
        Ok(RingPresentation { a, b, q })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The presentation for `M(b - q)`.
    pub fn complement(&self) -> RingPresentation {
        RingPresentation {
            q: self.b - self.q,
            ..*self
        }
    }

    pub fn same_shape(&self, other: &RingPresentation) -> bool {
        self.a == other.a && self.b == other.b
    }

    /// Total dimension `a * b`.
    pub fn dimension(&self) -> u64 {
        self.a as u64 * self.b as u64
    }

    /// Degree of the fundamental class, `a + b - 2`.
    pub fn top_degree(&self) -> u64 {
        self.a as u64 + self.b as u64 - 2
    }

    /// Basis monomials of degree `d`, ordered by increasing power of `x`.
    pub fn basis_in_degree(&self, d: u64) -> impl Iterator<Item = Monomial> {
        let (a, b) = (self.a as u64, self.b as u64);
        let lo = d.saturating_sub(b - 1);
        let hi = d.min(a - 1);
        (lo..=hi).map(move |i| Monomial::new(i as u32, (d - i) as u32))
    }

    pub fn basis(&self) -> impl Iterator<Item = Monomial> {
        let (a, b) = (self.a, self.b);
        (0..a).flat_map(move |i| (0..b).map(move |j| Monomial::new(i, j)))
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={}, q={})", self.a, self.b, self.q)
    }
}

/// `(x^a, (x+y)^q y^(b-q))`.
pub fn relation_polys(pres: &RingPresentation) -> (PolyGF2, PolyGF2) {
    let first = PolyGF2::monomial(pres.a, 0);
    let q = pres.q;
    let second: PolyGF2 = (0..=q)
        .filter(|&i| binom_mod2(q as u64, i as i64))
        .map(|i| Monomial::new(i, pres.b - i))
        .collect();
    (first, second)
}

/// Reduces `p` to its representative on the monomial basis.
pub fn normal_form(p: &PolyGF2, pres: &RingPresentation) -> RingElement {
    let (a, b, q) = (pres.a, pres.b, pres.q);
    // Keyed (y, x) so the largest y-exponent is last.
    let mut work: BTreeSet<(u32, u32)> = BTreeSet::new();
    let toggle = |work: &mut BTreeSet<(u32, u32)>, key: (u32, u32)| {
        if !work.remove(&key) {
            work.insert(key);
        }
    };
    for m in p.terms().filter(|m| m.x < a) {
        toggle(&mut work, (m.y, m.x));
    }
    let tail: Vec<u32> = (1..=q.min(a - 1))
        .filter(|&k| binom_mod2(q as u64, k as i64))
        .collect();
    while let Some(&(j, i)) = work.last() {
        if j < b {
            break;
        }
        work.pop_last();
        for &k in &tail {
            if i as u64 + k as u64 >= a as u64 {
                break;
            }
            toggle(&mut work, (j - k, i + k));
        }
    }
    RingElement {
        pres: *pres,
        coeffs: work.into_iter().map(|(j, i)| Monomial::new(i, j)).collect(),
    }
}

/// An element of `H*(M(q); Z/2)` in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    pres: RingPresentation,
    coeffs: PolyGF2,
}

impl RingElement {
    pub fn zero(pres: &RingPresentation) -> Self {
        RingElement {
            pres: *pres,
            coeffs: PolyGF2::zero(),
        }
    }

    pub fn one(pres: &RingPresentation) -> Self {
        normal_form(&PolyGF2::one(), pres)
    }

    pub fn x(pres: &RingPresentation) -> Self {
        normal_form(&PolyGF2::x(), pres)
    }

    pub fn y(pres: &RingPresentation) -> Self {
        normal_form(&PolyGF2::y(), pres)
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.pres
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn coefficient(&self, m: Monomial) -> bool {
        self.coeffs.contains(m.x, m.y)
    }

    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.coeffs.terms()
    }

    /// The representative as a polynomial.
    pub fn lift(&self) -> PolyGF2 {
        self.coeffs.clone()
    }

    fn check(&self, other: &RingElement) -> Result<()> {
        if self.pres != other.pres {
            return Err(Error::PresentationMismatch {
                left: self.pres.to_string(),
                right: other.pres.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        Ok(RingElement {
            pres: self.pres,
            coeffs: &self.coeffs + &other.coeffs,
        })
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        Ok(normal_form(&(&self.coeffs * &other.coeffs), &self.pres))
    }

    pub fn pow(&self, n: u64) -> RingElement {
        let mut result = RingElement::one(&self.pres);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = normal_form(&(&result.coeffs * &base.coeffs), &self.pres);
            }
            n >>= 1;
            if n > 0 {
                base = normal_form(&(&base.coeffs * &base.coeffs), &self.pres);
            }
        }
        result
    }

    /// Substitutes the representative and reduces in `dst`.
    pub fn substitute_into(&self, sub: &LinearSubstitution, dst: &RingPresentation) -> RingElement {
        normal_form(&self.coeffs.substitute(sub), dst)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.coeffs.fmt(f)
    }
}

/// `(y^a != 0, (x+y)^a != 0)` in normal form.
pub fn lemma1_check(pres: &RingPresentation) -> (bool, bool) {
    let y_pow = PolyGF2::monomial(0, pres.a);
    let s_pow = (&PolyGF2::x() + &PolyGF2::y()).pow(pres.a as u64);
    (
        !normal_form(&y_pow, pres).is_zero(),
        !normal_form(&s_pow, pres).is_zero(),
    )
}

/// Number of basis monomials of degree `d`.
pub fn betti(pres: &RingPresentation, d: u64) -> u64 {
    let (a, b) = (pres.a as u64, pres.b as u64);
    let lo = d.saturating_sub(b - 1);
    let hi = d.min(a - 1);
    if lo > hi {
        0
    } else {
        hi - lo + 1
    }
}

/// `(1+x)^a (1+y)^(b-q) (1+x+y)^q`, unreduced.
pub fn sw_polynomial(pres: &RingPresentation) -> PolyGF2 {
    let one = PolyGF2::one();
    let base = &one + &PolyGF2::x();
    let taut = &one + &PolyGF2::y();
    let twisted = &taut + &PolyGF2::x();
    let p = &base.pow(pres.a as u64) * &taut.pow((pres.b - pres.q) as u64);
    &p * &twisted.pow(pres.q as u64)
}

/// Total Stiefel-Whitney class of `M(q)`.
///
/// From `τM ⊕ 1 ≅ Hom(η, qγ ⊕ (b-q)1) ⊕ π*τRP^(a-1)` and
/// `τRP^(a-1) ⊕ 1 ≅ aγ`: the stable tangent bundle is
/// `aγ ⊕ q(η⊗γ) ⊕ (b-q)η`, with `w1(γ) = x`, `w1(η) = y`, `w1(η⊗γ) = x+y`.
pub fn total_sw_class(pres: &RingPresentation) -> RingElement {
    normal_form(&sw_polynomial(pres), pres)
}
