use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::poly::LaurentPoly;

/// Which identity a report is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    ProductMultivariate,
    ProductUnivariate,
    SingleMultivariate,
    SingleUnivariate,
    #[serde(rename = "dupont_abcd")]
    Dupont,
    BackmanLenz,
    MixedTutte,
    CharConvolution,
    ClassicalKook,
    /// `𝔐(x,y) = (x-1)^{rk X} 𝒵((x-1)(y-1), y-1)`.
    ZToTutteRelation,
    /// `χ(λ) = λ^{rk X} 𝒵(λ, -1)`.
    CharRelation,
    /// The same relation for the underlying matroid.
    CharRelationClassical,
}

impl IdentityId {
    pub const ALL: [IdentityId; 12] = [
        IdentityId::ProductMultivariate,
        IdentityId::ProductUnivariate,
        IdentityId::SingleMultivariate,
        IdentityId::SingleUnivariate,
        IdentityId::Dupont,
        IdentityId::BackmanLenz,
        IdentityId::MixedTutte,
        IdentityId::CharConvolution,
        IdentityId::ClassicalKook,
        IdentityId::ZToTutteRelation,
        IdentityId::CharRelation,
        IdentityId::CharRelationClassical,
    ];

    /// The single-matroid convolution identities.
    pub const SINGLE: [IdentityId; 5] = [
        IdentityId::SingleMultivariate,
        IdentityId::SingleUnivariate,
        IdentityId::MixedTutte,
        IdentityId::CharConvolution,
        IdentityId::ClassicalKook,
    ];

    /// Identities stated for a pair of multiplicity functions.
    pub const PRODUCT: [IdentityId; 4] = [
        IdentityId::ProductMultivariate,
        IdentityId::ProductUnivariate,
        IdentityId::Dupont,
        IdentityId::BackmanLenz,
    ];

    /// Relations between the polynomial families of one matroid.
    pub const RELATIONS: [IdentityId; 3] = [
        IdentityId::ZToTutteRelation,
        IdentityId::CharRelation,
        IdentityId::CharRelationClassical,
    ];

    /// Inverse of [`IdentityId::name`].
    pub fn from_name(name: &str) -> Option<IdentityId> {
        IdentityId::ALL.into_iter().find(|id| id.name() == name)
    }

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::ProductMultivariate => "product_multivariate",
            IdentityId::ProductUnivariate => "product_univariate",
            IdentityId::SingleMultivariate => "single_multivariate",
            IdentityId::SingleUnivariate => "single_univariate",
            IdentityId::Dupont => "dupont_abcd",
            IdentityId::BackmanLenz => "backman_lenz",
            IdentityId::MixedTutte => "mixed_tutte",
            IdentityId::CharConvolution => "char_convolution",
            IdentityId::ClassicalKook => "classical_kook",
            IdentityId::ZToTutteRelation => "z_to_tutte_relation",
            IdentityId::CharRelation => "chi_relation",
            IdentityId::CharRelationClassical => "chi_relation_classical",
        }
    }

    /// Identities whose statement involves two multiplicity functions.
    pub fn is_product(self) -> bool {
        IdentityId::PRODUCT.contains(&self)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Both sides of one identity evaluated on one input, as exact polynomials.
///
/// Identities stated with two right-hand sums keep both, so a failure shows
/// which ordering broke.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub lhs: LaurentPoly,
    pub rhs_first: LaurentPoly,
    pub rhs_second: Option<LaurentPoly>,
    pub equal: bool,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn new(
        identity: IdentityId,
        lhs: LaurentPoly,
        rhs_first: LaurentPoly,
        rhs_second: Option<LaurentPoly>,
        elapsed: Duration,
    ) -> IdentityReport {
        let equal = lhs == rhs_first && rhs_second.as_ref().is_none_or(|r| *r == lhs);
        IdentityReport {
            identity,
            lhs,
            rhs_first,
            rhs_second,
            equal,
            elapsed,
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.identity,
            if self.equal { "equal" } else { "NOT equal" }
        )?;
        writeln!(f, "  lhs  = {}", self.lhs)?;
        write!(f, "  rhs1 = {}", self.rhs_first)?;
        if let Some(r) = &self.rhs_second {
            write!(f, "\n  rhs2 = {r}")?;
        }
        Ok(())
    }
}
