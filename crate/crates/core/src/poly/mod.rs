//! Exact sparse Laurent polynomials over the integers.
//!
//! Every polynomial is kept canonical: a sorted map from [`Monomial`] to a
//! nonzero [`BigInt`]. Equal polynomials therefore have identical term maps,
//! and `==` is exact symbolic equality.

mod monomial;
mod parse;
mod var;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use monomial::Monomial;
pub use parse::ParsePolyError;
pub use var::{Family, VarId};

/// Exact rational numbers, used for evaluation.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("coefficient {coeff} is not a unit but {var} occurs with a negative exponent")]
    NonUnitCoefficientAtNegativeExponent { var: VarId, coeff: BigInt },
    #[error("cannot substitute a polynomial for {var}: it occurs with a negative exponent")]
    NegativeExponentSubstitution { var: VarId },
    #[error("cannot set {var} to zero: it occurs with a negative exponent")]
    ZeroAtNegativeExponent { var: VarId },
    #[error("evaluating {var} leaves non-integral coefficients")]
    NonIntegralResult { var: VarId },
    #[error("substitution coefficient for {var} must be nonzero")]
    ZeroCoefficient { var: VarId },
    #[error("no value given for {var}")]
    Unbound { var: VarId },
}

/// A Laurent polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> LaurentPoly {
        LaurentPoly::term(c, Monomial::one())
    }

    pub fn var(v: VarId) -> LaurentPoly {
        LaurentPoly::term(1, Monomial::var(v))
    }

    /// A single term `c * m`.
    pub fn term(c: impl Into<BigInt>, m: Monomial) -> LaurentPoly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// Sums the given terms, merging like monomials.
    pub fn from_terms<I, C>(terms: I) -> LaurentPoly
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
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

    /// Terms in canonical (printing) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v))
            .collect()
    }

    /// Smallest and largest exponent of `v` over all terms (0 when absent).
    pub fn exponent_range(&self, v: VarId) -> (i32, i32) {
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .fold((0, 0), |(lo, hi), e| (lo.min(e), hi.max(e)))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplies every term by `c * m`.
    pub fn mul_term(&self, c: &BigInt, m: &Monomial) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces every `var^k` by `coeff^k * m^k`, for all integer `k`.
    ///
    /// `m` may itself contain `var`; the replacement is simultaneous, so
    /// `q -> p*q` is a valid substitution. A coefficient other than `±1` is
    /// only allowed when `var` never appears with a negative exponent.
    pub fn substitute_monomial(
        &self,
        var: VarId,
        coeff: &BigInt,
        m: &Monomial,
    ) -> Result<LaurentPoly, PolyError> {
        if coeff.is_zero() {
            return Err(PolyError::ZeroCoefficient { var });
        }
        let unit = coeff.abs().is_one();
        let mut out = LaurentPoly::zero();
        for (mono, c) in &self.terms {
            let (rest, k) = mono.split(var);
            if k == 0 {
                out.add_term(rest, c.clone());
                continue;
            }
            if k < 0 && !unit {
                return Err(PolyError::NonUnitCoefficientAtNegativeExponent {
                    var,
                    coeff: coeff.clone(),
                });
            }
            let scale = if unit {
                if coeff.is_negative() && k % 2 != 0 {
                    -BigInt::one()
                } else {
                    BigInt::one()
                }
            } else {
                num_traits::pow(coeff.clone(), k as usize)
            };
            out.add_term(rest.mul(&m.pow(k)), c * scale);
        }
        Ok(out)
    }

    /// Composes with `var -> g`. `var` must occur only with nonnegative exponents.
    pub fn substitute_poly(&self, var: VarId, g: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        let (lo, hi) = self.exponent_range(var);
        if lo < 0 {
            return Err(PolyError::NegativeExponentSubstitution { var });
        }
        let mut powers = vec![LaurentPoly::one()];
        for k in 1..=hi as usize {
            let next = &powers[k - 1] * g;
            powers.push(next);
        }
        let mut out = LaurentPoly::zero();
        for (mono, c) in &self.terms {
            let (rest, k) = mono.split(var);
            for (pm, pc) in &powers[k as usize].terms {
                out.add_term(rest.mul(pm), c * pc);
            }
        }
        Ok(out)
    }

    /// Sets `var` to a rational value. The result must have integer coefficients.
    pub fn partial_eval(&self, var: VarId, value: &Rational) -> Result<LaurentPoly, PolyError> {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (mono, c) in &self.terms {
            let (rest, k) = mono.split(var);
            if k < 0 && value.is_zero() {
                return Err(PolyError::ZeroAtNegativeExponent { var });
            }
            let contrib = Rational::from_integer(c.clone()) * value.pow(k);
            *acc.entry(rest).or_insert_with(Rational::zero) += contrib;
        }
        let mut out = LaurentPoly::zero();
        for (mono, c) in acc {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return Err(PolyError::NonIntegralResult { var });
            }
            out.terms.insert(mono, c.to_integer());
        }
        Ok(out)
    }

    /// Evaluates at a point; every variable must be bound.
    pub fn eval(&self, point: &BTreeMap<VarId, Rational>) -> Result<Rational, PolyError> {
        let mut total = Rational::zero();
        for (mono, c) in &self.terms {
            let mut t = Rational::from_integer(c.clone());
            for (v, e) in mono.iter() {
                let x = point.get(&v).ok_or(PolyError::Unbound { var: v })?;
                if e < 0 && x.is_zero() {
                    return Err(PolyError::ZeroAtNegativeExponent { var: v });
                }
                t *= x.pow(e);
            }
            total += t;
        }
        Ok(total)
    }

    /// Sends every indexed variable of `family` to the shared variable of
    /// that family, e.g. `v0, v1, ... -> v`.
    pub fn collapse(&self, family: Family) -> LaurentPoly {
        let shared = VarId::new(family, None).expect("index-free variables always exist");
        let indexed: Vec<VarId> = self
            .variables()
            .into_iter()
            .filter(|v| v.family() == family && v.index().is_some())
            .collect();
        let target = Monomial::var(shared);
        indexed.into_iter().fold(self.clone(), |acc, v| {
            acc.substitute_monomial(v, &BigInt::one(), &target)
                .expect("unit substitution cannot fail")
        })
    }

    /// Canonical text rendering, see the [`fmt::Display`] impl.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in monomial order, e.g. `1 + 2*q^-1*v0` or `2 - 3*l + l^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> LaurentPoly {
        LaurentPoly::constant(c)
    }
}

impl From<VarId> for LaurentPoly {
    fn from(v: VarId) -> LaurentPoly {
        LaurentPoly::var(v)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn add_cancels_and_merges() {
        assert_eq!(p("1 + v0*q^-1") + p("-1"), p("q^-1*v0"));
        assert_eq!(p("x + 1") + LaurentPoly::zero(), p("1 + x"));
        assert_eq!(p("2*q^-1") + p("3*q^-1"), p("5*q^-1"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("q^-1*v0") * p("p^-1*u0"), p("p^-1*q^-1*u0*v0"));
        assert_eq!(p("1 + x") * LaurentPoly::one(), p("1 + x"));
        assert_eq!(p("1 + v0") * p("1 - v0"), p("1 - v0^2"));
    }

    #[test]
    fn substitute_monomial_examples() {
        let pq = Monomial::from_pairs([(VarId::P, 1), (VarId::Q, 1)]);
        let f = p("1 + v0*q^-1");
        assert_eq!(
            f.substitute_monomial(VarId::Q, &BigInt::one(), &pq)
                .unwrap(),
            p("1 + v0*p^-1*q^-1")
        );

        let g = p("1 + 2*v0*q^-1");
        let flipped = g
            .substitute_monomial(VarId::v(0), &(-BigInt::one()), &Monomial::var(VarId::v(0)))
            .unwrap();
        assert_eq!(flipped, p("1 - 2*v0*q^-1"));

        let err = p("q^-1")
            .substitute_monomial(VarId::Q, &BigInt::from(2), &Monomial::var(VarId::Q))
            .unwrap_err();
        assert!(matches!(
            err,
            PolyError::NonUnitCoefficientAtNegativeExponent { .. }
        ));
    }

    #[test]
    fn substitute_monomial_nonunit_positive_exponent() {
        let f = p("1 + x^3");
        let got = f
            .substitute_monomial(VarId::X, &BigInt::from(2), &Monomial::var(VarId::Y))
            .unwrap();
        assert_eq!(got, p("1 + 8*y^3"));
    }

    #[test]
    fn substitute_poly_examples() {
        let g = p("1 + a*b");
        assert_eq!(
            p("x + 1").substitute_poly(VarId::X, &g).unwrap(),
            p("a*b + 2")
        );
        assert_eq!(
            p("x^2")
                .substitute_poly(VarId::X, &LaurentPoly::zero())
                .unwrap(),
            LaurentPoly::zero()
        );
        let err = p("q^-1")
            .substitute_poly(VarId::Q, &p("x + 1"))
            .unwrap_err();
        assert_eq!(
            err,
            PolyError::NegativeExponentSubstitution { var: VarId::Q }
        );
    }

    #[test]
    fn substitute_poly_checked_by_evaluation() {
        // (1 + ab) + 1 at a = b = 1 is 3.
        let got = p("x + 1").substitute_poly(VarId::X, &p("1 + a*b")).unwrap();
        let point = BTreeMap::from([(VarId::A, rat(1)), (VarId::B, rat(1))]);
        assert_eq!(got.eval(&point).unwrap(), rat(3));
    }

    #[test]
    fn partial_eval_examples() {
        assert_eq!(
            p("x + y - 1").partial_eval(VarId::Y, &rat(0)).unwrap(),
            p("x - 1")
        );
        assert_eq!(
            p("1 + v0*q^-1")
                .partial_eval(VarId::v(0), &rat(-1))
                .unwrap(),
            p("1 - q^-1")
        );
        assert_eq!(
            p("q^-1").partial_eval(VarId::Q, &rat(0)).unwrap_err(),
            PolyError::ZeroAtNegativeExponent { var: VarId::Q }
        );
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(
            p("x").partial_eval(VarId::X, &half).unwrap_err(),
            PolyError::NonIntegralResult { var: VarId::X }
        );
    }

    #[test]
    fn equality_is_canonical() {
        assert_eq!(p("x+1"), p("1+x"));
        assert_eq!(p("0"), LaurentPoly::zero());
        assert_ne!(p("q^-1"), p("q"));
    }

    #[test]
    fn canonical_string_examples() {
        assert_eq!(LaurentPoly::zero().canonical_string(), "0");
        let f = LaurentPoly::one()
            + LaurentPoly::term(2, Monomial::from_pairs([(VarId::v(0), 1), (VarId::Q, -1)]));
        assert_eq!(f.canonical_string(), "1 + 2*q^-1*v0");
        assert_eq!(p("x+1").canonical_string(), "1 + x");
        assert_eq!(p("l^2 - 3*l + 2").canonical_string(), "2 - 3*l + l^2");
        assert_eq!(p("-x").canonical_string(), "-x");
    }

    #[test]
    fn collapse_merges_indexed_variables() {
        let f = p("v0*u0 + v1*u1 + q^-1*v0*v1");
        assert_eq!(
            f.collapse(Family::V).collapse(Family::U),
            p("2*v*u + q^-1*v^2")
        );
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = p("x - 1");
        assert_eq!(f.pow(3), &(&f * &f) * &f);
        assert_eq!(f.pow(0), LaurentPoly::one());
    }
}
