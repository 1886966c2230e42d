//! Probabilistic checking: every identity evaluated at random rational points.
//!
//! Values are computed straight from the rank and multiplicity tables of the
//! input, reading minors off as `ℳ|A: B ↦ (rk B, m(B))` and
//! `ℳ/A: C ↦ (rk(C ∪ A) - rk A, m(C ∪ A))`. No polynomial is expanded, so this
//! scales to ground sets where the exact sides would be too large. Agreement
//! at a few random points is strong evidence, not proof.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::MatroidError;
use crate::matroid::MultiplicityMatroid;
use crate::poly::Rational;
use crate::report::IdentityId;
use crate::subset::Subset;

/// One random assignment. `v[e]` and `u[e]` are indexed by element label.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePoint {
    pub q: Rational,
    pub p: Rational,
    pub x: Rational,
    pub y: Rational,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub lambda: Rational,
    pub xi: Rational,
    pub v: Vec<Rational>,
    pub u: Vec<Rational>,
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let num: i64 = rng.gen_range(-60..=60);
        let den: i64 = rng.gen_range(1..=23);
        if num != 0 {
            return Rational::new(num.into(), den.into());
        }
    }
}

/// Nonzero and different from 1, so `x - 1` and `y - 1` are usable as `q`.
fn random_shifted(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = random_nonzero(rng);
        if !r.is_one() {
            return r;
        }
    }
}

impl SamplePoint {
    /// A point for labels `0..labels`. With `shared`, every `v_e` takes one
    /// value and every `u_e` another.
    pub fn random(rng: &mut ChaCha8Rng, labels: usize, shared: bool) -> SamplePoint {
        let mut scalars: Vec<Rational> = (0..8).map(|_| random_nonzero(rng)).collect();
        let (x, y) = (random_shifted(rng), random_shifted(rng));
        let (v, u) = if shared {
            let (v, u) = (random_nonzero(rng), random_nonzero(rng));
            (vec![v; labels], vec![u; labels])
        } else {
            let v = (0..labels).map(|_| random_nonzero(rng)).collect();
            let u = (0..labels).map(|_| random_nonzero(rng)).collect();
            (v, u)
        };
        let mut next = || scalars.pop().expect("eight scalars");
        SamplePoint {
            q: next(),
            p: next(),
            a: next(),
            b: next(),
            c: next(),
            d: next(),
            lambda: next(),
            xi: next(),
            x,
            y,
            v,
            u,
        }
    }
}

/// Outcome of a sampled check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledReport {
    pub identity: IdentityId,
    pub points: usize,
    /// Index of the first point where the sides differ.
    pub first_failure: Option<usize>,
    pub elapsed: Duration,
}

impl SampledReport {
    pub fn equal(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Restriction or contraction of the table-backed matroid at `a`, with an
/// optional override of the multiplicity by 1.
#[derive(Clone, Copy)]
struct View<'a> {
    m: &'a MultiplicityMatroid,
    a: Subset,
    contracted: bool,
    classical: bool,
}

impl<'a> View<'a> {
    fn whole(m: &'a MultiplicityMatroid, classical: bool) -> Self {
        View {
            m,
            a: Subset::EMPTY,
            contracted: true,
            classical,
        }
    }

    fn restriction(m: &'a MultiplicityMatroid, a: Subset, classical: bool) -> Self {
        View {
            m,
            a,
            contracted: false,
            classical,
        }
    }

    fn contraction(m: &'a MultiplicityMatroid, a: Subset, classical: bool) -> Self {
        View {
            m,
            a,
            contracted: true,
            classical,
        }
    }

    /// Subsets of the view's ground set, as subsets of the parent ground set.
    fn subsets(&self) -> impl Iterator<Item = Subset> {
        let ground = if self.contracted {
            self.m.ground().difference(self.a)
        } else {
            self.a
        };
        ground.subsets()
    }

    fn offset(&self, b: Subset) -> Subset {
        if self.contracted {
            b.union(self.a)
        } else {
            b
        }
    }

    fn rank(&self, b: Subset) -> i32 {
        let base = if self.contracted {
            self.m.rank(self.a)
        } else {
            0
        };
        (self.m.rank(self.offset(b)) - base) as i32
    }

    fn total_rank(&self) -> i32 {
        if self.contracted {
            (self.m.total_rank() - self.m.rank(self.a)) as i32
        } else {
            self.m.rank(self.a) as i32
        }
    }

    fn weight(&self, b: Subset) -> Rational {
        if self.classical {
            Rational::one()
        } else {
            Rational::from_integer(self.m.mult(self.offset(b)).clone())
        }
    }

    /// `Σ_B w(B) scale^{-rk B} Π_{e∈B} elem(label e)`.
    fn z(&self, scale: &Rational, elem: impl Fn(u32) -> Rational) -> Rational {
        self.subsets()
            .map(|b| {
                let mono = b.elements().fold(scale.pow(-self.rank(b)), |acc, e| {
                    acc * elem(self.m.label(e))
                });
                self.weight(b) * mono
            })
            .sum()
    }

    /// `Σ_B w(B) (x-1)^{r - rk B} (y-1)^{|B| - rk B}`.
    fn tutte(&self, x: &Rational, y: &Rational) -> Rational {
        let (x1, y1) = (x - Rational::one(), y - Rational::one());
        let r = self.total_rank();
        self.subsets()
            .map(|b| {
                let rk = self.rank(b);
                self.weight(b) * x1.pow(r - rk) * y1.pow(b.len() as i32 - rk)
            })
            .sum()
    }

    /// `Σ_B (-1)^{|B|} w(B) λ^{r - rk B}`.
    fn chi(&self, lambda: &Rational) -> Rational {
        let r = self.total_rank();
        self.subsets()
            .map(|b| {
                let term = self.weight(b) * lambda.pow(r - self.rank(b));
                if b.len() % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }
}

fn sum_over<F>(m: &MultiplicityMatroid, f: F) -> Rational
where
    F: Fn(Subset) -> Rational + Sync + Send,
{
    Subset::all(m.size())
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(f)
        .reduce(Rational::zero, |a, b| a + b)
}

fn product_rhs(
    r: &MultiplicityMatroid,
    r_classical: bool,
    c: &MultiplicityMatroid,
    c_classical: bool,
    pt: &SamplePoint,
) -> Rational {
    sum_over(r, |t| {
        let prefactor = t.elements().fold(pt.p.pow(-(r.rank(t) as i32)), |acc, e| {
            acc * -&pt.u[r.label(e) as usize]
        });
        let left = View::restriction(r, t, r_classical).z(&pt.q, |l| -&pt.v[l as usize]);
        let right = View::contraction(c, t, c_classical).z(&pt.p, |l| pt.u[l as usize].clone());
        prefactor * left * right
    })
}

fn product_lhs(prod: &MultiplicityMatroid, classical: bool, pt: &SamplePoint) -> Rational {
    View::whole(prod, classical).z(&(&pt.p * &pt.q), |l| &pt.u[l as usize] * &pt.v[l as usize])
}

fn dupont_rhs(r: &MultiplicityMatroid, c: &MultiplicityMatroid, pt: &SamplePoint) -> Rational {
    let one = Rational::one();
    let total = r.total_rank() as i32;
    sum_over(r, |a| {
        let rk = r.rank(a) as i32;
        let prefactor = pt.a.pow(total - rk) * (-&pt.d).pow(a.len() as i32 - rk);
        let left = View::restriction(r, a, false).tutte(&(&one - &pt.a), &(&one - &pt.c));
        let right = View::contraction(c, a, false).tutte(&(&one + &pt.b), &(&one + &pt.d));
        prefactor * left * right
    })
}

fn tutte_conv(
    m1: &MultiplicityMatroid,
    r_classical: bool,
    m2: &MultiplicityMatroid,
    c_classical: bool,
    pt: &SamplePoint,
) -> Rational {
    let zero = Rational::zero();
    sum_over(m1, |a| {
        View::restriction(m1, a, r_classical).tutte(&zero, &pt.y)
            * View::contraction(m2, a, c_classical).tutte(&pt.x, &zero)
    })
}

fn char_rhs(m: &MultiplicityMatroid, arith_restriction: bool, pt: &SamplePoint) -> Rational {
    let total = m.total_rank() as i32;
    sum_over(m, |a| {
        pt.lambda.pow(total - m.rank(a) as i32)
            * View::restriction(m, a, !arith_restriction).chi(&pt.lambda)
            * View::contraction(m, a, arith_restriction).chi(&pt.xi)
    })
}

type Sides = (Rational, Rational, Option<Rational>);

fn sides(
    identity: IdentityId,
    m1: &MultiplicityMatroid,
    m2: &MultiplicityMatroid,
    pt: &SamplePoint,
) -> Result<Sides, MatroidError> {
    use IdentityId::*;
    Ok(match identity {
        ProductMultivariate | ProductUnivariate => {
            let prod = m1.product(m2)?;
            (
                product_lhs(&prod, false, pt),
                product_rhs(m1, false, m2, false, pt),
                Some(product_rhs(m2, false, m1, false, pt)),
            )
        }
        SingleMultivariate | SingleUnivariate => (
            product_lhs(m1, false, pt),
            product_rhs(m1, false, m1, true, pt),
            Some(product_rhs(m1, true, m1, false, pt)),
        ),
        Dupont => {
            let prod = m1.product(m2)?;
            let one = Rational::one();
            let lhs =
                View::whole(&prod, false).tutte(&(&one + &pt.a * &pt.b), &(&one + &pt.c * &pt.d));
            (lhs, dupont_rhs(m1, m2, pt), Some(dupont_rhs(m2, m1, pt)))
        }
        BackmanLenz => {
            let prod = m1.product(m2)?;
            (
                View::whole(&prod, false).tutte(&pt.x, &pt.y),
                tutte_conv(m1, false, m2, false, pt),
                Some(tutte_conv(m2, false, m1, false, pt)),
            )
        }
        MixedTutte => (
            View::whole(m1, false).tutte(&pt.x, &pt.y),
            tutte_conv(m1, false, m1, true, pt),
            Some(tutte_conv(m1, true, m1, false, pt)),
        ),
        ClassicalKook => (
            View::whole(m1, true).tutte(&pt.x, &pt.y),
            tutte_conv(m1, true, m1, true, pt),
            None,
        ),
        CharConvolution => (
            View::whole(m1, false).chi(&(&pt.lambda * &pt.xi)),
            char_rhs(m1, true, pt),
            Some(char_rhs(m1, false, pt)),
        ),
        ZToTutteRelation => {
            let (x1, y1) = (&pt.x - Rational::one(), &pt.y - Rational::one());
            let whole = View::whole(m1, false);
            let rhs = x1.pow(m1.total_rank() as i32) * whole.z(&(&x1 * &y1), |_| y1.clone());
            (whole.tutte(&pt.x, &pt.y), rhs, None)
        }
        CharRelation | CharRelationClassical => {
            let whole = View::whole(m1, identity == CharRelationClassical);
            let minus_one = -Rational::one();
            let rhs =
                pt.lambda.pow(m1.total_rank() as i32) * whole.z(&pt.lambda, |_| minus_one.clone());
            (whole.chi(&pt.lambda), rhs, None)
        }
    })
}

fn is_univariate(identity: IdentityId) -> bool {
    matches!(
        identity,
        IdentityId::ProductUnivariate | IdentityId::SingleUnivariate
    )
}

/// Checks `identity` at `points` random points drawn from `seed`. Single
/// matroid identities ignore `m2`.
pub fn sample_identity(
    identity: IdentityId,
    m1: &MultiplicityMatroid,
    m2: &MultiplicityMatroid,
    points: usize,
    seed: u64,
) -> Result<SampledReport, MatroidError> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels = m1
        .labels()
        .iter()
        .chain(m2.labels())
        .max()
        .map_or(0, |&l| l as usize + 1);
    let mut first_failure = None;
    for i in 0..points {
        let pt = SamplePoint::random(&mut rng, labels, is_univariate(identity));
        let (lhs, rhs1, rhs2) = sides(identity, m1, m2, &pt)?;
        if lhs != rhs1 || rhs2.is_some_and(|r| r != lhs) {
            first_failure = Some(i);
            break;
        }
    }
    Ok(SampledReport {
        identity,
        points,
        first_failure,
        elapsed: start.elapsed(),
    })
}
