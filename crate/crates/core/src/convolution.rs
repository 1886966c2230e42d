//! Both sides of every convolution identity, computed as exact polynomials.
//!
//! Each `verify_*` function builds the left side from the whole matroid and
//! the right side(s) as a sum over all subsets `T` of products of
//! polynomials of the restriction `ℳ|T` and the contraction `ℳ/T`. Minors
//! keep the original element labels, so the factors of a product live on
//! disjoint sets of `v_e` / `u_e` variables and multiply without renaming.
//!
//! None of the identities use the arithmetic axioms, so every function here
//! accepts arbitrary multiplicity matroids.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::MatroidError;
use crate::matroid::MultiplicityMatroid;
use crate::poly::{Family, LaurentPoly, Monomial, Rational, VarId};
use crate::report::{IdentityId, IdentityReport};
use crate::subset::Subset;
use crate::tutte::{
    arithmetic_tutte, characteristic, check_chi_relations, check_z_to_tutte_relation,
    classical_tutte, multivariate_z, ZVars,
};

/// `Σ_T f(T)` over all subsets of the ground set, in parallel.
fn subset_sum<F>(m: &MultiplicityMatroid, f: F) -> LaurentPoly
where
    F: Fn(Subset) -> LaurentPoly + Sync + Send,
{
    Subset::all(m.size())
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(f)
        .reduce(LaurentPoly::zero, |a, b| a + b)
}

fn one() -> BigInt {
    BigInt::one()
}

/// `𝒵_ℳ(pq, uv)`: `𝒵(q, v)` followed by `q -> p q` and `v_e -> u_e v_e`.
fn z_at_pq_uv(m: &MultiplicityMatroid) -> LaurentPoly {
    let pq = Monomial::from_pairs([(VarId::P, 1), (VarId::Q, 1)]);
    let mut z = multivariate_z(m, ZVars::QV)
        .substitute_monomial(VarId::Q, &one(), &pq)
        .expect("unit substitution");
    for &label in m.labels() {
        let uv = Monomial::from_pairs([(VarId::u(label), 1), (VarId::v(label), 1)]);
        z = z
            .substitute_monomial(VarId::v(label), &one(), &uv)
            .expect("unit substitution");
    }
    z
}

/// `Σ_T p^{-rk T} Π_{e∈T} (-u_e) 𝒵_{R|T}(q, -v) 𝒵_{C/T}(p, u)`.
fn product_rhs(restricted: &MultiplicityMatroid, contracted: &MultiplicityMatroid) -> LaurentPoly {
    subset_sum(restricted, |t| {
        let prefactor = Monomial::from_pairs(
            std::iter::once((VarId::P, -(restricted.rank(t) as i32)))
                .chain(t.elements().map(|e| (VarId::u(restricted.label(e)), 1))),
        );
        let sign = if t.len() % 2 == 0 { one() } else { -one() };
        let left = multivariate_z(&restricted.restriction(t), ZVars::QV.negated());
        let right = multivariate_z(&contracted.contraction(t), ZVars::PU);
        (&left * &right).mul_term(&sign, &prefactor)
    })
}

fn collapse_uv(p: &LaurentPoly) -> LaurentPoly {
    p.collapse(Family::V).collapse(Family::U)
}

fn collapsed(report: IdentityReport, identity: IdentityId) -> IdentityReport {
    let start = Instant::now();
    let lhs = collapse_uv(&report.lhs);
    let rhs1 = collapse_uv(&report.rhs_first);
    let rhs2 = report.rhs_second.as_ref().map(collapse_uv);
    IdentityReport::new(identity, lhs, rhs1, rhs2, report.elapsed + start.elapsed())
}

/// `𝒵_ℳ(pq, uv) = Σ_T p^{-rk T} Π_{e∈T}(-u_e) 𝒵_{ℳ₁|T}(q,-v) 𝒵_{ℳ₂/T}(p,u)`
/// for `ℳ = ℳ₁ • ℳ₂`, with the second sum taking the roles of `ℳ₁` and `ℳ₂`
/// swapped.
pub fn verify_product_multivariate(
    m1: &MultiplicityMatroid,
    m2: &MultiplicityMatroid,
) -> Result<IdentityReport, MatroidError> {
    let start = Instant::now();
    let product = m1.product(m2)?;
    let lhs = z_at_pq_uv(&product);
    let rhs1 = product_rhs(m1, m2);
    let rhs2 = product_rhs(m2, m1);
    Ok(IdentityReport::new(
        IdentityId::ProductMultivariate,
        lhs,
        rhs1,
        Some(rhs2),
        start.elapsed(),
    ))
}

/// [`verify_product_multivariate`] with every `v_e` set to `v` and every
/// `u_e` to `u`.
pub fn verify_product_univariate(
    m1: &MultiplicityMatroid,
    m2: &MultiplicityMatroid,
) -> Result<IdentityReport, MatroidError> {
    let mv = verify_product_multivariate(m1, m2)?;
    Ok(collapsed(mv, IdentityId::ProductUnivariate))
}

/// The product identity with one trivial factor:
/// `Σ_T ... 𝒵_{ℳ|T}(q,-v) Z_{M/T}(p,u)` and `Σ_T ... Z_{M|T}(q,-v) 𝒵_{ℳ/T}(p,u)`.
pub fn verify_single_multivariate(m: &MultiplicityMatroid) -> IdentityReport {
    let start = Instant::now();
    let trivial = m.trivialized();
    let lhs = z_at_pq_uv(m);
    let rhs1 = product_rhs(m, &trivial);
    let rhs2 = product_rhs(&trivial, m);
    IdentityReport::new(
        IdentityId::SingleMultivariate,
        lhs,
        rhs1,
        Some(rhs2),
        start.elapsed(),
    )
}

pub fn verify_single_univariate(m: &MultiplicityMatroid) -> IdentityReport {
    collapsed(verify_single_multivariate(m), IdentityId::SingleUnivariate)
}

fn at(p: LaurentPoly, var: VarId, value: &LaurentPoly) -> LaurentPoly {
    p.substitute_poly(var, value)
        .expect("Tutte polynomials have nonnegative exponents")
}

fn eval_zero(p: LaurentPoly, var: VarId) -> LaurentPoly {
    p.partial_eval(var, &Rational::from_integer(BigInt::from(0)))
        .expect("Tutte polynomials have nonnegative exponents")
}

/// `1 + s t` or `1 - s` style affine arguments.
fn affine(sign: i64, vars: &[VarId]) -> LaurentPoly {
    let m = Monomial::from_pairs(vars.iter().map(|&v| (v, 1)));
    LaurentPoly::one() + LaurentPoly::term(sign, m)
}

fn dupont_rhs(restricted: &MultiplicityMatroid, contracted: &MultiplicityMatroid) -> LaurentPoly {
    let total = restricted.total_rank();
    let (one_minus_a, one_minus_c) = (affine(-1, &[VarId::A]), affine(-1, &[VarId::C]));
    let (one_plus_b, one_plus_d) = (affine(1, &[VarId::B]), affine(1, &[VarId::D]));
    subset_sum(restricted, |a| {
        let rank = restricted.rank(a);
        let nullity = a.len() as i32 - rank as i32;
        let prefactor =
            Monomial::from_pairs([(VarId::A, (total - rank) as i32), (VarId::D, nullity)]);
        let sign = if nullity % 2 == 0 { one() } else { -one() };
        let left = arithmetic_tutte(&restricted.restriction(a));
        let left = at(at(left, VarId::X, &one_minus_a), VarId::Y, &one_minus_c);
        let right = arithmetic_tutte(&contracted.contraction(a));
        let right = at(at(right, VarId::X, &one_plus_b), VarId::Y, &one_plus_d);
        (&left * &right).mul_term(&sign, &prefactor)
    })
}

/// `𝔐_ℳ(1+ab, 1+cd) = Σ_A a^{rk X - rk A} (-d)^{|A| - rk A} 𝔐_{ℳ₁|A}(1-a, 1-c) 𝔐_{ℳ₂/A}(1+b, 1+d)`,
/// and the same with `ℳ₁`, `ℳ₂` swapped.
pub fn verify_dupont(
    m1: &MultiplicityMatroid,
    m2: &MultiplicityMatroid,
) -> Result<IdentityReport, MatroidError> {
    let start = Instant::now();
    let product = m1.product(m2)?;
    let lhs = at(
        at(
            arithmetic_tutte(&product),
            VarId::X,
            &affine(1, &[VarId::A, VarId::B]),
        ),
        VarId::Y,
        &affine(1, &[VarId::C, VarId::D]),
    );
    let rhs1 = dupont_rhs(m1, m2);
    let rhs2 = dupont_rhs(m2, m1);
    Ok(IdentityReport::new(
        IdentityId::Dupont,
        lhs,
        rhs1,
        Some(rhs2),
        start.elapsed(),
    ))
}

/// `Σ_A f(ℳ|A)(0, y) g(ℳ/A)(x, 0)`.
fn tutte_convolution<F, G>(m: &MultiplicityMatroid, restricted: F, contracted: G) -> LaurentPoly
where
    F: Fn(&MultiplicityMatroid) -> LaurentPoly + Sync + Send,
    G: Fn(&MultiplicityMatroid) -> LaurentPoly + Sync + Send,
{
    subset_sum(m, |a| {
        let left = eval_zero(restricted(&m.restriction(a)), VarId::X);
        let right = eval_zero(contracted(&m.contraction(a)), VarId::Y);
        &left * &right
    })
}

/// `𝔐_ℳ(x, y) = Σ_A 𝔐_{ℳ₁|A}(0, y) 𝔐_{ℳ₂/A}(x, 0)` for `ℳ = ℳ₁ • ℳ₂`, and
/// the same with `ℳ₁`, `ℳ₂` swapped.
pub fn verify_backman_lenz(
    m1: &MultiplicityMatroid,
    m2: &MultiplicityMatroid,
) -> Result<IdentityReport, MatroidError> {
    let start = Instant::now();
    let product = m1.product(m2)?;
    let lhs = arithmetic_tutte(&product);
    let rhs_with = |r: &MultiplicityMatroid, c: &MultiplicityMatroid| {
        subset_sum(r, |a| {
            let left = eval_zero(arithmetic_tutte(&r.restriction(a)), VarId::X);
            let right = eval_zero(arithmetic_tutte(&c.contraction(a)), VarId::Y);
            &left * &right
        })
    };
    let rhs1 = rhs_with(m1, m2);
    let rhs2 = rhs_with(m2, m1);
    Ok(IdentityReport::new(
        IdentityId::BackmanLenz,
        lhs,
        rhs1,
        Some(rhs2),
        start.elapsed(),
    ))
}

/// `𝔐_ℳ(x, y) = Σ_A 𝔐_{ℳ|A}(0, y) T_{M/A}(x, 0) = Σ_A T_{M|A}(0, y) 𝔐_{ℳ/A}(x, 0)`.
pub fn verify_mixed_tutte(m: &MultiplicityMatroid) -> IdentityReport {
    let start = Instant::now();
    let lhs = arithmetic_tutte(m);
    let rhs1 = tutte_convolution(m, arithmetic_tutte, classical_tutte);
    let rhs2 = tutte_convolution(m, classical_tutte, arithmetic_tutte);
    IdentityReport::new(
        IdentityId::MixedTutte,
        lhs,
        rhs1,
        Some(rhs2),
        start.elapsed(),
    )
}

/// `T_M(x, y) = Σ_A T_{M/A}(x, 0) T_{M|A}(0, y)` on the underlying matroid.
pub fn verify_classical_kook(m: &MultiplicityMatroid) -> IdentityReport {
    let start = Instant::now();
    let lhs = classical_tutte(m);
    let rhs = tutte_convolution(m, classical_tutte, classical_tutte);
    IdentityReport::new(IdentityId::ClassicalKook, lhs, rhs, None, start.elapsed())
}

fn lambda_to(p: LaurentPoly, target: &Monomial) -> LaurentPoly {
    p.substitute_monomial(VarId::LAMBDA, &one(), target)
        .expect("unit substitution")
}

/// `χ_ℳ(λξ) = Σ_A λ^{rk X - rk A} χ_{ℳ|A}(λ) χ_{M/A}(ξ)
///          = Σ_A λ^{rk X - rk A} χ_{M|A}(λ) χ_{ℳ/A}(ξ)`.
pub fn verify_char_convolution(m: &MultiplicityMatroid) -> IdentityReport {
    let start = Instant::now();
    let lambda_xi = Monomial::from_pairs([(VarId::LAMBDA, 1), (VarId::XI, 1)]);
    let xi = Monomial::var(VarId::XI);
    let lhs = lambda_to(characteristic(m), &lambda_xi);
    let total = m.total_rank();
    let side = |arith_restriction: bool| {
        subset_sum(m, |a| {
            let r = m.restriction(a);
            let c = m.contraction(a);
            let (r, c) = if arith_restriction {
                (r, c.trivialized())
            } else {
                (r.trivialized(), c)
            };
            let left = characteristic(&r);
            let right = lambda_to(characteristic(&c), &xi);
            let prefactor = Monomial::power(VarId::LAMBDA, (total - m.rank(a)) as i32);
            (&left * &right).mul_term(&one(), &prefactor)
        })
    };
    let rhs1 = side(true);
    let rhs2 = side(false);
    IdentityReport::new(
        IdentityId::CharConvolution,
        lhs,
        rhs1,
        Some(rhs2),
        start.elapsed(),
    )
}

/// Runs one identity. Single-matroid identities and relations use only `m1`;
/// product identities use the pair `(m1, m2)`.
pub fn verify_identity(
    identity: IdentityId,
    m1: &MultiplicityMatroid,
    m2: &MultiplicityMatroid,
) -> Result<IdentityReport, MatroidError> {
    use IdentityId::*;
    Ok(match identity {
        ProductMultivariate => verify_product_multivariate(m1, m2)?,
        ProductUnivariate => verify_product_univariate(m1, m2)?,
        Dupont => verify_dupont(m1, m2)?,
        BackmanLenz => verify_backman_lenz(m1, m2)?,
        SingleMultivariate => verify_single_multivariate(m1),
        SingleUnivariate => verify_single_univariate(m1),
        MixedTutte => verify_mixed_tutte(m1),
        CharConvolution => verify_char_convolution(m1),
        ClassicalKook => verify_classical_kook(m1),
        ZToTutteRelation => check_z_to_tutte_relation(m1),
        CharRelation | CharRelationClassical => {
            let [arith, classical] = check_chi_relations(m1);
            if identity == CharRelation {
                arith
            } else {
                classical
            }
        }
    })
}
