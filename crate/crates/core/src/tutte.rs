//! The polynomial families of a multiplicity matroid, each computed from its
//! defining sum over all subsets.
//!
//! | function | polynomial |
//! |---|---|
//! | [`multivariate_z`] | `𝒵(q, v) = Σ_A m(A) q^{-rk A} Π_{e∈A} v_e` |
//! | [`arithmetic_tutte`] | `𝔐(x, y) = Σ_A m(A) (x-1)^{rk X - rk A} (y-1)^{|A| - rk A}` |
//! | [`classical_tutte`] | the same sum with `m ≡ 1` |
//! | [`characteristic`] | `χ(λ) = Σ_A (-1)^{|A|} m(A) λ^{rk X - rk A}` |
//!
//! With the trivial multiplicity `𝒵` is the multivariate Tutte polynomial
//! `Z(q, v)` of the underlying matroid.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matroid::MultiplicityMatroid;
use crate::poly::{Family, LaurentPoly, Monomial, Rational, VarId};
use crate::report::{IdentityId, IdentityReport};
use crate::subset::Subset;

/// Variable choice for [`multivariate_z`]: `q` or `p` for the rank variable,
/// `v_e` or `u_e` for the element variables, and whether every element
/// variable is negated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZVars {
    pub scale: VarId,
    pub element: Family,
    pub negate: bool,
}

impl ZVars {
    /// `𝒵(q, v)`.
    pub const QV: ZVars = ZVars {
        scale: VarId::Q,
        element: Family::V,
        negate: false,
    };
    /// `𝒵(p, u)`.
    pub const PU: ZVars = ZVars {
        scale: VarId::P,
        element: Family::U,
        negate: false,
    };

    pub fn negated(self) -> ZVars {
        ZVars {
            negate: !self.negate,
            ..self
        }
    }

    fn element_var(self, label: u32) -> VarId {
        match self.element {
            Family::V => VarId::v(label),
            Family::U => VarId::u(label),
            f => panic!("{f:?} is not an element-variable family"),
        }
    }
}

/// The multivariate arithmetic Tutte polynomial, with element variables
/// indexed by the matroid's element labels.
pub fn multivariate_z(m: &MultiplicityMatroid, vars: ZVars) -> LaurentPoly {
    assert!(
        matches!(vars.scale.family(), Family::Q | Family::P),
        "rank variable must be q or p"
    );
    let mut out = LaurentPoly::zero();
    for a in Subset::all(m.size()) {
        let rank = m.rank(a) as i32;
        let mono = Monomial::from_pairs(
            std::iter::once((vars.scale, -rank))
                .chain(a.elements().map(|e| (vars.element_var(m.label(e)), 1))),
        );
        let mut c = m.mult(a).clone();
        if vars.negate && a.len() % 2 == 1 {
            c = -c;
        }
        out.add_term(mono, c);
    }
    out
}

/// `(base)^k` for `k = 0..=max`.
fn powers(base: &LaurentPoly, max: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::one()];
    for k in 1..=max {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

fn corank_nullity_sum(m: &MultiplicityMatroid, weight: impl Fn(Subset) -> BigInt) -> LaurentPoly {
    let total = m.total_rank();
    // Group by (corank, nullity) so each power product is formed once.
    let mut grouped: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for a in Subset::all(m.size()) {
        let rank = m.rank(a);
        let key = ((total - rank) as usize, a.len() - rank as usize);
        *grouped.entry(key).or_insert_with(BigInt::zero) += weight(a);
    }
    let x1 = LaurentPoly::var(VarId::X) - LaurentPoly::one();
    let y1 = LaurentPoly::var(VarId::Y) - LaurentPoly::one();
    let xp = powers(&x1, total as usize);
    let yp = powers(&y1, m.size() - total as usize);
    let mut out = LaurentPoly::zero();
    for ((i, j), c) in grouped {
        out += (&xp[i] * &yp[j]).mul_term(&c, &Monomial::one());
    }
    out
}

/// The arithmetic Tutte polynomial `𝔐(x, y)`.
pub fn arithmetic_tutte(m: &MultiplicityMatroid) -> LaurentPoly {
    corank_nullity_sum(m, |a| m.mult(a).clone())
}

/// The classical Tutte polynomial `T(x, y)` of the underlying matroid; the
/// multiplicity table is ignored.
pub fn classical_tutte(m: &MultiplicityMatroid) -> LaurentPoly {
    corank_nullity_sum(m, |_| BigInt::one())
}

/// The characteristic polynomial `χ(λ)`.
pub fn characteristic(m: &MultiplicityMatroid) -> LaurentPoly {
    let total = m.total_rank();
    let mut out = LaurentPoly::zero();
    for a in Subset::all(m.size()) {
        let c = if a.len() % 2 == 0 {
            m.mult(a).clone()
        } else {
            -m.mult(a)
        };
        out.add_term(
            Monomial::power(VarId::LAMBDA, (total - m.rank(a)) as i32),
            c,
        );
    }
    out
}

/// Checks `𝔐(x, y) = (x-1)^{rk X} 𝒵((x-1)(y-1), y-1)`.
///
/// The right side starts from the polynomial `𝒵(q, v)` with every `v_e`
/// set to one shared `v`. Each of its terms `c q^{-i} v^j` comes from subsets
/// of rank `i` and size `j`, so it becomes `c (x-1)^{rk X - i} (y-1)^{j - i}`
/// with both exponents nonnegative; the computation never leaves the
/// polynomial ring.
pub fn check_z_to_tutte_relation(m: &MultiplicityMatroid) -> IdentityReport {
    let start = Instant::now();
    let lhs = arithmetic_tutte(m);
    let z = multivariate_z(m, ZVars::QV).collapse(Family::V);
    let total = m.total_rank() as i32;
    let x1 = LaurentPoly::var(VarId::X) - LaurentPoly::one();
    let y1 = LaurentPoly::var(VarId::Y) - LaurentPoly::one();
    let mut rhs = LaurentPoly::zero();
    for (mono, c) in z.terms() {
        let rank = -mono.exponent(VarId::Q);
        let size = mono.exponent(VarId::V);
        assert!(
            rank >= 0 && rank <= total && size >= rank,
            "term {mono} of 𝒵 cannot come from a subset"
        );
        let term = &x1.pow((total - rank) as u32) * &y1.pow((size - rank) as u32);
        rhs += term.mul_term(c, &Monomial::one());
    }
    IdentityReport::new(
        IdentityId::ZToTutteRelation,
        lhs,
        rhs,
        None,
        start.elapsed(),
    )
}

/// `λ^{rk X} 𝒵(λ, -1)`: every `v_e` evaluated at -1, then `q -> λ`.
pub fn chi_from_z(m: &MultiplicityMatroid) -> LaurentPoly {
    let minus_one = Rational::from_integer(-BigInt::one());
    let mut z = multivariate_z(m, ZVars::QV);
    for &label in m.labels() {
        z = z
            .partial_eval(VarId::v(label), &minus_one)
            .expect("v_e occurs with nonnegative exponents");
    }
    let z = z
        .substitute_monomial(VarId::Q, &BigInt::one(), &Monomial::var(VarId::LAMBDA))
        .expect("unit substitution");
    z.mul_term(
        &BigInt::one(),
        &Monomial::power(VarId::LAMBDA, m.total_rank() as i32),
    )
}

/// Checks `χ_ℳ(λ) = λ^{rk X} 𝒵_ℳ(λ, -1)` and the same relation for the
/// underlying matroid.
pub fn check_chi_relations(m: &MultiplicityMatroid) -> [IdentityReport; 2] {
    let start = Instant::now();
    let arithmetic = IdentityReport::new(
        IdentityId::CharRelation,
        characteristic(m),
        chi_from_z(m),
        None,
        start.elapsed(),
    );
    let start = Instant::now();
    let trivial = m.trivialized();
    let classical = IdentityReport::new(
        IdentityId::CharRelationClassical,
        characteristic(&trivial),
        chi_from_z(&trivial),
        None,
        start.elapsed(),
    );
    [arithmetic, classical]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{from_integer_matrix, graphic, uniform};

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn two() -> MultiplicityMatroid {
        from_integer_matrix(&[vec![2]]).unwrap()
    }

    fn k3() -> MultiplicityMatroid {
        graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn z_examples() {
        let empty = uniform(0, 0).unwrap();
        assert_eq!(multivariate_z(&empty, ZVars::QV), LaurentPoly::one());
        assert_eq!(multivariate_z(&two(), ZVars::QV), p("1 + 2*q^-1*v0"));
        assert_eq!(
            multivariate_z(&uniform(1, 2).unwrap(), ZVars::QV),
            p("1 + q^-1*v0 + q^-1*v1 + q^-1*v0*v1")
        );
        assert_eq!(
            multivariate_z(&two(), ZVars::PU.negated()),
            p("1 - 2*p^-1*u0")
        );
    }

    #[test]
    fn z_uses_original_labels_in_minors() {
        let m = from_integer_matrix(&[vec![2, 0], vec![0, 3]]).unwrap();
        let c = m.contraction(Subset::singleton(0));
        assert_eq!(multivariate_z(&c, ZVars::PU), p("2 + 6*p^-1*u1"));
    }

    #[test]
    fn arithmetic_tutte_examples() {
        assert_eq!(arithmetic_tutte(&two()), p("x + 1"));
        assert_eq!(arithmetic_tutte(&uniform(1, 1).unwrap()), p("x"));
        assert_eq!(arithmetic_tutte(&k3()), p("x^2 + x + y"));
    }

    #[test]
    fn classical_tutte_examples() {
        assert_eq!(classical_tutte(&two()), p("x"));
        assert_eq!(classical_tutte(&graphic(1, &[(0, 0)]).unwrap()), p("y"));
        assert_eq!(classical_tutte(&uniform(1, 2).unwrap()), p("x + y"));
    }

    #[test]
    fn characteristic_examples() {
        assert_eq!(characteristic(&two()), p("l - 2"));
        assert_eq!(characteristic(&uniform(1, 1).unwrap()), p("l - 1"));
        assert_eq!(characteristic(&k3()), p("l^2 - 3*l + 2"));
    }

    #[test]
    fn z_to_tutte_relation_examples() {
        let r = check_z_to_tutte_relation(&two());
        assert!(r.equal);
        assert_eq!(r.rhs_first, p("x + 1"));
        let r = check_z_to_tutte_relation(&uniform(1, 2).unwrap());
        assert!(r.equal);
        assert_eq!(r.lhs, p("x + y"));
        assert!(check_z_to_tutte_relation(&k3()).equal);
    }

    #[test]
    fn chi_relation_examples() {
        let [a, c] = check_chi_relations(&two());
        assert!(a.equal && c.equal);
        assert_eq!(a.rhs_first, p("l - 2"));
        assert_eq!(c.rhs_first, p("l - 1"));
        let [a, _] = check_chi_relations(&uniform(0, 0).unwrap());
        assert_eq!(a.lhs, LaurentPoly::one());
        assert!(a.equal);
        let [a, c] = check_chi_relations(&k3());
        assert!(a.equal && c.equal);
        assert_eq!(a.rhs_first, p("l^2 - 3*l + 2"));
    }
}
