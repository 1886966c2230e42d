use std::cmp::Ordering;
use std::fmt;

use super::VarId;

/// A product of variables raised to nonzero integer powers.
///
/// Stored as `(variable, exponent)` pairs sorted by variable with no zero
/// exponents, so structural equality is monomial equality. The empty product
/// is the unit monomial.
///
/// Monomials are ordered by total degree first and then lexicographically by
/// their `(variable, exponent)` pairs, which is the order terms are printed in.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(VarId, i32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn power(v: VarId, exp: i32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    /// Collects arbitrary `(variable, exponent)` pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, i32)>>(pairs: I) -> Monomial {
        let mut v: Vec<(VarId, i32)> = pairs.into_iter().collect();
        v.sort_by_key(|&(var, _)| var);
        let mut out: Vec<(VarId, i32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some((last, acc)) if *last == var => *acc = checked_exp(*acc, e),
                _ => out.push((var, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, i32)> + '_ {
        self.0.iter().copied()
    }

    pub fn exponent(&self, v: VarId) -> i32 {
        match self.0.binary_search_by_key(&v, |&(var, _)| var) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn contains(&self, v: VarId) -> bool {
        self.exponent(v) != 0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| i64::from(e)).sum()
    }

    /// Splits off `v`, returning the rest of the monomial and the exponent of `v`.
    pub fn split(&self, v: VarId) -> (Monomial, i32) {
        match self.0.binary_search_by_key(&v, |&(var, _)| var) {
            Ok(i) => {
                let mut rest = self.0.clone();
                let (_, e) = rest.remove(i);
                (Monomial(rest), e)
            }
            Err(_) => (self.clone(), 0),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = checked_exp(a[i].1, b[j].1);
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(
            self.0
                .iter()
                .map(|&(v, e)| (v, e.checked_mul(k).expect("exponent overflow")))
                .collect(),
        )
    }

    /// Applies `f` to every variable, merging variables that collide.
    pub fn rename(&self, mut f: impl FnMut(VarId) -> VarId) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }
}

fn checked_exp(a: i32, b: i32) -> i32 {
    a.checked_add(b).expect("exponent overflow")
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_pairs_merges_and_drops_zeros() {
        let m = Monomial::from_pairs([(VarId::Q, -1), (VarId::v(0), 1), (VarId::Q, 1)]);
        assert_eq!(m, Monomial::var(VarId::v(0)));
    }

    #[test]
    fn mul_adds_exponents() {
        let a = Monomial::from_pairs([(VarId::Q, -1), (VarId::v(0), 1)]);
        let b = Monomial::from_pairs([(VarId::P, -1), (VarId::u(0), 1)]);
        assert_eq!(a.mul(&b).to_string(), "q^-1*p^-1*v0*u0");
        assert!(a.mul(&a.pow(-1)).is_one());
    }

    #[test]
    fn degree_then_lex() {
        let one = Monomial::one();
        let qv = Monomial::from_pairs([(VarId::Q, -1), (VarId::v(0), 1)]);
        let x = Monomial::var(VarId::X);
        // q^-1*v0 has total degree 0 and sorts after the unit.
        assert!(one < qv);
        assert!(qv < x);
        assert!(Monomial::var(VarId::A) < Monomial::var(VarId::B));
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_is_asserted() {
        Monomial::power(VarId::X, i32::MAX).mul(&Monomial::var(VarId::X));
    }
}
