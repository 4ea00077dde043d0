//! Canonical Gram matrices of integral trace forms of tame cyclic fields.
//!
//! A tame cyclic field of degree `n` is described here only by its
//! ramification data: each ramified prime `p` with its ramification index
//! `e`. The trace pairing in the normal integral basis built from Gauss
//! periods is a symmetric circulant on `Z[Z/nZ]`. For a single ramified
//! prime it is `p Y - h Σ_⟨e⟩` with `h = (p - 1) / e`, where `Y` is the
//! identity when `h` is even and the order-two element `σ` (complex
//! conjugation) when `h` is odd. For several primes it is the product of
//! the local circulants.
//!
//! Matrix convention: `M[i][j]` is the coefficient of the residue
//! `(j - i) mod n` in the circulant.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith;
use crate::group_ring::{FiniteAbelianGroup, GroupRingElement, GroupRingError};
use crate::matrix::GramMatrix;

/// Reasons a ramification description is not a tame cyclic field.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("degree must be at least 1")]
    InvalidDegree,
    #[error("{p} is not prime")]
    NonPrime { p: u64 },
    #[error("ramification index {e} of {p} must be at least 2")]
    BadIndex { p: u64, e: u64 },
    #[error("{p} is wildly ramified (index {e}, degree {degree})")]
    WildRamification { p: u64, e: u64, degree: u64 },
    #[error("{p} is not congruent to 1 modulo its ramification index {e}")]
    BadCongruence { p: u64, e: u64 },
    #[error("prime {p} is listed more than once")]
    DuplicatePrime { p: u64 },
    #[error("ramification indices have lcm {lcm}, which is not the degree {degree}")]
    BadLcm { lcm: u64, degree: u64 },
}

impl SpecError {
    /// Stable short name, used by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            SpecError::InvalidDegree => "InvalidDegree",
            SpecError::NonPrime { .. } => "NonPrime",
            SpecError::BadIndex { .. } => "BadIndex",
            SpecError::WildRamification { .. } => "WildRamification",
            SpecError::BadCongruence { .. } => "BadCongruence",
            SpecError::DuplicatePrime { .. } => "DuplicatePrime",
            SpecError::BadLcm { .. } => "BadLcm",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceFormError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    GroupRing(#[from] GroupRingError),
    #[error("element is not fixed by the involution")]
    NotSymmetric,
    #[error("no closed form for degree {0}; use the expanded circulant")]
    UnsupportedDegree(u64),
    #[error("ramification index {e} does not divide degree {degree}")]
    IndexNotDividing { e: u64, degree: u64 },
    #[error("prime {p} has odd cofactor in odd degree {degree}")]
    OddCofactorInOddDegree { p: u64, degree: u64 },
    #[error("circulant is not in the span of the subgroup sums")]
    NotInSpan,
}

/// A ramified prime with its ramification index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RamifiedPrime {
    pub p: u64,
    pub e: u64,
}

impl RamifiedPrime {
    pub fn new(p: u64, e: u64) -> Self {
        Self { p, e }
    }

    /// `h = (p - 1) / e`, the index of the local field in `Q(η_p)`.
    pub fn cofactor(&self) -> u64 {
        (self.p - 1) / self.e
    }

    /// The local field is totally complex exactly when `h` is odd.
    pub fn is_locally_complex(&self) -> bool {
        self.cofactor() % 2 == 1
    }
}

/// Ramification data of a tame cyclic field, always valid once constructed.
///
/// Primes are kept in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    degree: u64,
    ramified: Vec<RamifiedPrime>,
}

/// Validate ramification data and put it in canonical order.
pub fn validate_spec(degree: u64, ramified: &[RamifiedPrime]) -> Result<FieldSpec, SpecError> {
    FieldSpec::new(degree, ramified.to_vec())
}

impl FieldSpec {
    pub fn new(degree: u64, mut ramified: Vec<RamifiedPrime>) -> Result<Self, SpecError> {
        if degree == 0 {
            return Err(SpecError::InvalidDegree);
        }
        for &RamifiedPrime { p, e } in &ramified {
            if !arith::is_prime(p) {
                return Err(SpecError::NonPrime { p });
            }
            if e < 2 {
                return Err(SpecError::BadIndex { p, e });
            }
            if e % p == 0 || degree.is_multiple_of(p) {
                return Err(SpecError::WildRamification { p, e, degree });
            }
            if (p - 1) % e != 0 {
                return Err(SpecError::BadCongruence { p, e });
            }
        }
        ramified.sort();
        if let Some(w) = ramified.windows(2).find(|w| w[0].p == w[1].p) {
            return Err(SpecError::DuplicatePrime { p: w[0].p });
        }
        let lcm = ramified.iter().fold(1u64, |acc, rp| arith::lcm(acc, rp.e));
        if lcm != degree {
            return Err(SpecError::BadLcm { lcm, degree });
        }
        Ok(Self { degree, ramified })
    }

    /// The rational field `Q`.
    pub fn rationals() -> Self {
        Self {
            degree: 1,
            ramified: Vec::new(),
        }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn ramified(&self) -> &[RamifiedPrime] {
        &self.ramified
    }

    /// Product of the ramified primes.
    pub fn conductor(&self) -> BigInt {
        self.ramified.iter().map(|rp| BigInt::from(rp.p)).product()
    }

    pub fn conductor_u64(&self) -> Option<u64> {
        self.ramified
            .iter()
            .try_fold(1u64, |acc, rp| acc.checked_mul(rp.p))
    }

    /// Number of ramified primes whose cofactor `h` is odd.
    pub fn epsilon(&self) -> u32 {
        self.ramified.iter().filter(|rp| rp.is_locally_complex()).count() as u32
    }

    pub fn is_totally_real(&self) -> bool {
        self.degree % 2 == 1 || self.epsilon().is_multiple_of(2)
    }

    fn group(&self) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(self.degree)
    }
}

/// A group-ring element fixed by the involution; the trace pairing in a
/// normal basis is `β(X, Y) = Pr(s X Ȳ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circulant(GroupRingElement);

impl Circulant {
    pub fn new(element: GroupRingElement) -> Result<Self, TraceFormError> {
        if !element.is_self_adjoint() {
            return Err(TraceFormError::NotSymmetric);
        }
        Ok(Self(element))
    }

    pub fn element(&self) -> &GroupRingElement {
        &self.0
    }

    pub fn into_element(self) -> GroupRingElement {
        self.0
    }

    pub fn order(&self) -> u64 {
        self.0.group().order()
    }
}

/// `p Y - h Σ_⟨e⟩` in `Z[Z/nZ]`.
pub fn local_circulant(rp: RamifiedPrime, degree: u64) -> Result<Circulant, TraceFormError> {
    let RamifiedPrime { p, e } = rp;
    if e == 0 || !degree.is_multiple_of(e) {
        return Err(TraceFormError::IndexNotDividing { e, degree });
    }
    let group = FiniteAbelianGroup::cyclic(degree);
    let h = rp.cofactor();
    let y = if h.is_multiple_of(2) {
        GroupRingElement::one(&group)
    } else {
        if degree % 2 == 1 {
            return Err(TraceFormError::OddCofactorInOddDegree { p, degree });
        }
        GroupRingElement::basis(&group, &[degree / 2])?
    };
    let sigma = GroupRingElement::sigma_cyclic(degree, e)?;
    let s = &y.scale(&BigInt::from(p)) - &sigma.scale(&BigInt::from(h));
    Circulant::new(s)
}

/// The product of the local circulants of every ramified prime.
pub fn field_circulant(spec: &FieldSpec) -> Circulant {
    let group = spec.group();
    let product = spec.ramified.iter().fold(GroupRingElement::one(&group), |acc, &rp| {
        let local = local_circulant(rp, spec.degree).expect("validated spec");
        &acc * local.element()
    });
    Circulant(product)
}

/// `M[i][j] = s_{(j - i) mod n}`.
pub fn circulant_to_matrix(c: &Circulant) -> GramMatrix {
    let n = c.order() as usize;
    let row: Vec<BigInt> = (0..n).map(|k| c.element().coeff_cyclic(k as i64)).collect();
    GramMatrix::from_fn(n, |i, j| row[(j + n - i) % n].clone())
}

/// The canonical Gram matrix of the integral trace form.
pub fn gram_matrix(spec: &FieldSpec) -> GramMatrix {
    circulant_to_matrix(&field_circulant(spec))
}

/// Where a coefficient table came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientSource {
    /// Closed form for prime-power or odd degree.
    ClosedForm,
    /// Read off from the expanded circulant.
    Expansion,
}

/// Coefficients `a_d` with `s = a_1 σ^ε + Σ_{d | n, d > 1} a_d Σ_⟨d⟩`.
///
/// Only the parity of `ε` enters the circulant; the full count is kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    pub degree: u64,
    pub coeffs: BTreeMap<u64, BigInt>,
    pub epsilon: u32,
    pub source: CoefficientSource,
}

impl CoefficientTable {
    fn empty(degree: u64, epsilon: u32, source: CoefficientSource) -> Self {
        Self {
            degree,
            coeffs: arith::divisors(degree)
                .into_iter()
                .map(|d| (d, BigInt::zero()))
                .collect(),
            epsilon,
            source,
        }
    }

    pub fn get(&self, d: u64) -> BigInt {
        self.coeffs.get(&d).cloned().unwrap_or_default()
    }

    fn leading_unit(&self) -> GroupRingElement {
        let group = FiniteAbelianGroup::cyclic(self.degree);
        if self.epsilon % 2 == 1 && self.degree.is_multiple_of(2) {
            GroupRingElement::basis(&group, &[self.degree / 2]).expect("σ is an element")
        } else {
            GroupRingElement::one(&group)
        }
    }

    /// `a_1 σ^(ε mod 2) + Σ_{d > 1} a_d Σ_⟨d⟩`.
    pub fn reconstruct(&self) -> GroupRingElement {
        let n = self.degree;
        let mut out = self.leading_unit().scale(&self.get(1));
        for (&d, a) in &self.coeffs {
            if d > 1 && !a.is_zero() {
                let sigma = GroupRingElement::sigma_cyclic(n, d).expect("d divides n");
                out = &out + &sigma.scale(a);
            }
        }
        out
    }

    /// `a_1 S^(ε mod 2) + Σ_{d > 1} a_d A_d` where `(A_d)_{ij} = 1` iff
    /// `n/d | (j - i)` and `S` is the shift by `n/2`.
    pub fn basis_matrix_sum(&self) -> GramMatrix {
        let n = self.degree;
        let shift = if self.epsilon % 2 == 1 && n.is_multiple_of(2) { n / 2 } else { 0 };
        GramMatrix::from_fn(n as usize, |i, j| {
            let k = (j as u64 + n - i as u64) % n;
            let mut v = if k == shift { self.get(1) } else { BigInt::zero() };
            for (&d, a) in &self.coeffs {
                if d > 1 && k.is_multiple_of(n / d) {
                    v += a;
                }
            }
            v
        })
    }

    /// Decompose an expanded circulant on the basis `{σ^ε, Σ_⟨d⟩ : d > 1}`.
    pub fn read_off(c: &Circulant, epsilon: u32) -> Result<Self, TraceFormError> {
        let n = c.order();
        let divs = arith::divisors(n);
        // class value on residues with gcd(k, n) = g, sampled at k = g
        let class = |g: u64| c.element().coeff_cyclic((g % n) as i64);
        // c(g) = Σ_{D | g} B(D) with B(D) the coefficient of Σ_⟨n/D⟩
        let mut by_index: BTreeMap<u64, BigInt> = BTreeMap::new();
        for &g in &divs {
            let below: BigInt = by_index
                .iter()
                .filter(|(&d, _)| g % d == 0)
                .map(|(_, b)| b.clone())
                .sum();
            by_index.insert(g, class(g) - below);
        }
        let mut table = Self::empty(n, epsilon, CoefficientSource::Expansion);
        for (&big_d, b) in &by_index {
            table.coeffs.insert(n / big_d, b.clone());
        }
        if epsilon % 2 == 1 && n.is_multiple_of(2) {
            // b_1 I + b_2 Σ_⟨2⟩ = (-b_1) σ + (b_1 + b_2) Σ_⟨2⟩
            let b1 = table.get(1);
            let b2 = table.get(2);
            table.coeffs.insert(1, -&b1);
            table.coeffs.insert(2, b1 + b2);
        }
        if table.reconstruct() != *c.element() {
            return Err(TraceFormError::NotInSpan);
        }
        Ok(table)
    }
}

/// Coefficient table from the closed-form product expansions.
///
/// Supported degrees: `1`, prime powers (odd or even), and odd composites.
/// General even composite degrees return [`TraceFormError::UnsupportedDegree`];
/// use [`expanded_coefficients`] for those.
pub fn closed_form_coefficients(spec: &FieldSpec) -> Result<CoefficientTable, TraceFormError> {
    let n = spec.degree;
    let factors = arith::factorize(n);
    match factors.as_slice() {
        [] => {
            let mut t = CoefficientTable::empty(1, 0, CoefficientSource::ClosedForm);
            t.coeffs.insert(1, BigInt::one());
            Ok(t)
        }
        [(q, r)] => Ok(prime_power_coefficients(spec, *q, *r)),
        _ if n % 2 == 1 => Ok(odd_degree_coefficients(spec)),
        _ => Err(TraceFormError::UnsupportedDegree(n)),
    }
}

/// Coefficient table read off from the expanded circulant; works for every degree.
pub fn expanded_coefficients(spec: &FieldSpec) -> CoefficientTable {
    CoefficientTable::read_off(&field_circulant(spec), spec.epsilon())
        .expect("field circulants lie in the span of the subgroup sums")
}

/// Product `w_d` of the primes with ramification index `d`, keyed by `d`.
fn primes_by_index(spec: &FieldSpec) -> BTreeMap<u64, BigInt> {
    let mut w: BTreeMap<u64, BigInt> = BTreeMap::new();
    for rp in &spec.ramified {
        *w.entry(rp.e).or_insert_with(BigInt::one) *= rp.p;
    }
    w
}

/// Degree `q^r`: the indices form a chain, so with `m_j` the product of primes
/// of index `q^j` and `f_j = (m_j - 1) / q^j`,
/// `a_1 = Π p` and `a_{q^i} = -f_i Π_{j > i} m_j`.
fn prime_power_coefficients(spec: &FieldSpec, q: u64, r: u32) -> CoefficientTable {
    let w = primes_by_index(spec);
    let mut t = CoefficientTable::empty(spec.degree, spec.epsilon(), CoefficientSource::ClosedForm);
    let powers: Vec<u64> = (1..=r).map(|j| q.pow(j)).collect();
    let m: Vec<BigInt> = powers
        .iter()
        .map(|d| w.get(d).cloned().unwrap_or_else(BigInt::one))
        .collect();
    let f: Vec<BigInt> = m
        .iter()
        .zip(&powers)
        .map(|(mj, &d)| (mj - 1u32) / d)
        .collect();
    t.coeffs.insert(1, spec.conductor());
    for i in 0..powers.len() {
        let tail: BigInt = m[i + 1..].iter().product();
        t.coeffs.insert(powers[i], -&f[i] * tail);
    }
    t
}

/// Odd degree: expand `Π_d (w_d I - f_d Σ_⟨d⟩)` over subsets `S` of the
/// occurring indices, using `Π_{d ∈ S} Σ_⟨d⟩ = (Π_{d ∈ S} d / lcm S) Σ_⟨lcm S⟩`.
fn odd_degree_coefficients(spec: &FieldSpec) -> CoefficientTable {
    let w = primes_by_index(spec);
    let active: Vec<(u64, BigInt, BigInt)> = w
        .iter()
        .map(|(&d, wd)| (d, wd.clone(), (wd - 1u32) / d))
        .collect();
    let mut t = CoefficientTable::empty(spec.degree, 0, CoefficientSource::ClosedForm);
    for mask in 0u64..(1u64 << active.len()) {
        let mut lcm = 1u64;
        let mut index_product = BigInt::one();
        let mut term = BigInt::one();
        for (bit, (d, wd, fd)) in active.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                lcm = arith::lcm(lcm, *d);
                index_product *= *d;
                term *= -fd;
            } else {
                term *= wd;
            }
        }
        if term.is_zero() {
            continue;
        }
        let multiplicity = index_product / lcm;
        *t.coeffs.entry(lcm).or_default() += term * multiplicity;
    }
    t
}

/// `(-1)^{r_2} Π p^{n - n/e}`.
pub fn discriminant(spec: &FieldSpec) -> BigInt {
    let n = spec.degree;
    let magnitude: BigInt = spec
        .ramified
        .iter()
        .map(|rp| num_traits::pow(BigInt::from(rp.p), (n - n / rp.e) as usize))
        .product();
    // r_2 equals the number of negative squares of the trace form
    let (_, r2) = signature(spec);
    if r2 % 2 == 1 {
        -magnitude
    } else {
        magnitude
    }
}

/// Signature `(positive, negative)` of the trace form.
pub fn signature(spec: &FieldSpec) -> (u64, u64) {
    let n = spec.degree;
    if spec.is_totally_real() {
        (n, 0)
    } else {
        (n / 2, n / 2)
    }
}

/// Outcome of comparing two trace forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryVerdict {
    pub isometric: bool,
    pub degrees: (u64, u64),
    pub discriminants: (BigInt, BigInt),
    /// The shared canonical Gram matrix when isometric.
    pub witness: Option<GramMatrix>,
}

/// Two tame cyclic fields have isometric trace forms iff they share degree
/// and discriminant. When they do, the canonical Gram matrices coincide and
/// the identity between canonical bases is the isometry.
///
/// # Panics
///
/// If equal degree and discriminant ever produce different canonical
/// matrices; that would be a bug in this crate.
pub fn is_isometric(a: &FieldSpec, b: &FieldSpec) -> IsometryVerdict {
    let discriminants = (discriminant(a), discriminant(b));
    let degrees = (a.degree, b.degree);
    let isometric = degrees.0 == degrees.1 && discriminants.0 == discriminants.1;
    let witness = if isometric {
        let (ma, mb) = (gram_matrix(a), gram_matrix(b));
        assert_eq!(ma, mb, "equal discriminants must give equal canonical matrices");
        Some(ma)
    } else {
        None
    };
    IsometryVerdict {
        isometric,
        degrees,
        discriminants,
        witness,
    }
}

/// Every valid spec of the given degree with conductor at most `bound`,
/// ordered by conductor and then by the prime list.
pub fn enumerate_specs(degree: u64, bound: u64) -> Vec<FieldSpec> {
    if degree == 0 || bound == 0 {
        return Vec::new();
    }
    let candidates: Vec<(u64, Vec<u64>)> = primes_up_to(bound)
        .into_iter()
        .filter(|&p| !degree.is_multiple_of(p))
        .filter_map(|p| {
            let g = arith::gcd(degree, p - 1);
            let indices: Vec<u64> = arith::divisors(g).into_iter().filter(|&e| e >= 2).collect();
            (!indices.is_empty()).then_some((p, indices))
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen = Vec::new();
    collect_specs(degree, bound, &candidates, 0, 1, 1, &mut chosen, &mut out);
    out.sort_by(|a, b| {
        a.conductor()
            .cmp(&b.conductor())
            .then_with(|| a.ramified.cmp(&b.ramified))
    });
    out
}

#[allow(clippy::too_many_arguments)]
fn collect_specs(
    degree: u64,
    bound: u64,
    candidates: &[(u64, Vec<u64>)],
    start: usize,
    product: u64,
    lcm: u64,
    chosen: &mut Vec<RamifiedPrime>,
    out: &mut Vec<FieldSpec>,
) {
    if lcm == degree {
        out.push(FieldSpec {
            degree,
            ramified: chosen.clone(),
        });
    }
    for (i, (p, indices)) in candidates.iter().enumerate().skip(start) {
        let Some(next) = product.checked_mul(*p).filter(|&x| x <= bound) else {
            break;
        };
        for &e in indices {
            chosen.push(RamifiedPrime::new(*p, e));
            collect_specs(degree, bound, candidates, i + 1, next, arith::lcm(lcm, e), chosen, out);
            chosen.pop();
        }
    }
}

fn primes_up_to(bound: u64) -> Vec<u64> {
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: u64, r: &[(u64, u64)]) -> FieldSpec {
        FieldSpec::new(n, r.iter().map(|&(p, e)| RamifiedPrime::new(p, e)).collect()).unwrap()
    }

    fn rows(m: &GramMatrix) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        m.to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.to_i64().unwrap()).collect())
            .collect()
    }

    fn cyc(n: u64, terms: &[(i64, i64)]) -> GroupRingElement {
        GroupRingElement::cyclic(n, terms.iter().copied())
    }

    fn sigma(n: u64, d: u64) -> GroupRingElement {
        GroupRingElement::sigma_cyclic(n, d).unwrap()
    }

    fn big(k: i64) -> BigInt {
        BigInt::from(k)
    }

    #[test]
    fn validation() {
        let s = validate_spec(6, &[RamifiedPrime::new(7, 3), RamifiedPrime::new(5, 2)]).unwrap();
        assert_eq!(s.ramified()[0], RamifiedPrime::new(5, 2));
        let err = validate_spec(4, &[RamifiedPrime::new(5, 2)]).unwrap_err();
        assert_eq!(err, SpecError::BadLcm { lcm: 2, degree: 4 });
        assert_eq!(err.name(), "BadLcm");
        let err = validate_spec(3, &[RamifiedPrime::new(3, 3)]).unwrap_err();
        assert_eq!(err.name(), "WildRamification");
        assert_eq!(
            validate_spec(2, &[RamifiedPrime::new(9, 2)]).unwrap_err().name(),
            "NonPrime"
        );
        assert_eq!(
            validate_spec(3, &[RamifiedPrime::new(5, 3)]).unwrap_err().name(),
            "BadCongruence"
        );
        assert_eq!(
            validate_spec(2, &[RamifiedPrime::new(5, 2), RamifiedPrime::new(5, 2)])
                .unwrap_err()
                .name(),
            "DuplicatePrime"
        );
        assert_eq!(validate_spec(0, &[]).unwrap_err().name(), "InvalidDegree");
        assert_eq!(validate_spec(1, &[]).unwrap(), FieldSpec::rationals());
    }

    #[test]
    fn local_circulants() {
        let c = local_circulant(RamifiedPrime::new(7, 3), 3).unwrap();
        assert_eq!(*c.element(), &cyc(3, &[(0, 7)]) - &sigma(3, 3).scale(&big(2)));
        let c = local_circulant(RamifiedPrime::new(3, 2), 2).unwrap();
        assert_eq!(*c.element(), &cyc(2, &[(1, 3)]) - &sigma(2, 2));
        let c = local_circulant(RamifiedPrime::new(13, 4), 4).unwrap();
        assert_eq!(*c.element(), &cyc(4, &[(2, 13)]) - &sigma(4, 4).scale(&big(3)));
        assert!(matches!(
            local_circulant(RamifiedPrime::new(7, 3), 4),
            Err(TraceFormError::IndexNotDividing { .. })
        ));
        assert!(Circulant::new(cyc(3, &[(1, 1)])).is_err());
    }

    #[test]
    fn field_circulants() {
        let c = field_circulant(&spec(3, &[(7, 3), (13, 3)]));
        assert_eq!(*c.element(), &cyc(3, &[(0, 91)]) - &sigma(3, 3).scale(&big(30)));
        assert_eq!(*field_circulant(&FieldSpec::rationals()).element(), cyc(1, &[(0, 1)]));
        assert_eq!(
            *field_circulant(&spec(2, &[(3, 2)])).element(),
            cyc(2, &[(0, -1), (1, 2)])
        );
    }

    #[test]
    fn closed_forms() {
        let t = closed_form_coefficients(&spec(3, &[(7, 3), (13, 3)])).unwrap();
        assert_eq!((t.get(1), t.get(3), t.epsilon), (big(91), big(-30), 0));
        let t = closed_form_coefficients(&spec(9, &[(19, 9)])).unwrap();
        assert_eq!((t.get(1), t.get(3), t.get(9)), (big(19), big(0), big(-2)));
        let t = closed_form_coefficients(&spec(2, &[(3, 2)])).unwrap();
        assert_eq!((t.get(1), t.get(2), t.epsilon), (big(3), big(-1), 1));
        assert_eq!(t.reconstruct(), *field_circulant(&spec(2, &[(3, 2)])).element());
        let s = spec(6, &[(7, 3), (5, 2)]);
        assert_eq!(
            closed_form_coefficients(&s).unwrap_err(),
            TraceFormError::UnsupportedDegree(6)
        );
        assert_eq!(expanded_coefficients(&s).reconstruct(), *field_circulant(&s).element());
    }

    #[test]
    fn odd_composite_needs_lcm_multiplicity() {
        // three indices 3, 5, 15 with lcm 15 but gcd 1: the multiplicity of the
        // full product is 3·5·15 / 15 = 15, not gcd(3, 5, 15) = 1
        let s = spec(15, &[(7, 3), (11, 5), (31, 15)]);
        let closed = closed_form_coefficients(&s).unwrap();
        let expanded = expanded_coefficients(&s);
        assert_eq!(closed.coeffs, expanded.coeffs);
        assert_eq!(closed.reconstruct(), *field_circulant(&s).element());
    }

    #[test]
    fn matrices() {
        let c = Circulant::new(&cyc(3, &[(0, 7)]) - &sigma(3, 3).scale(&big(2))).unwrap();
        assert_eq!(
            rows(&circulant_to_matrix(&c)),
            vec![vec![5, -2, -2], vec![-2, 5, -2], vec![-2, -2, 5]]
        );
        let c = Circulant::new(cyc(2, &[(0, -1), (1, 2)])).unwrap();
        assert_eq!(rows(&circulant_to_matrix(&c)), vec![vec![-1, 2], vec![2, -1]]);
        let c = Circulant::new(&cyc(4, &[(2, 5)]) - &sigma(4, 4)).unwrap();
        assert_eq!(
            rows(&circulant_to_matrix(&c)),
            vec![
                vec![-1, -1, 4, -1],
                vec![-1, -1, -1, 4],
                vec![4, -1, -1, -1],
                vec![-1, 4, -1, -1]
            ]
        );
        assert_eq!(
            rows(&gram_matrix(&spec(3, &[(7, 3)]))),
            vec![vec![5, -2, -2], vec![-2, 5, -2], vec![-2, -2, 5]]
        );
        assert_eq!(rows(&gram_matrix(&spec(2, &[(5, 2)]))), vec![vec![3, -2], vec![-2, 3]]);
        assert_eq!(rows(&gram_matrix(&FieldSpec::rationals())), vec![vec![1]]);
        let t = closed_form_coefficients(&spec(4, &[(5, 4)])).unwrap();
        assert_eq!(t.basis_matrix_sum(), gram_matrix(&spec(4, &[(5, 4)])));
    }

    #[test]
    fn invariants() {
        assert_eq!(discriminant(&spec(3, &[(7, 3)])), big(49));
        assert_eq!(discriminant(&spec(2, &[(3, 2)])), big(-3));
        assert_eq!(discriminant(&spec(4, &[(5, 4)])), big(125));
        assert_eq!(discriminant(&FieldSpec::rationals()), big(1));
        assert_eq!(signature(&spec(3, &[(7, 3)])), (3, 0));
        assert_eq!(signature(&spec(2, &[(3, 2)])), (1, 1));
        assert_eq!(signature(&spec(2, &[(5, 2)])), (2, 0));
        for s in [spec(3, &[(7, 3)]), spec(2, &[(3, 2)]), spec(4, &[(5, 4)])] {
            assert_eq!(gram_matrix(&s).determinant(), discriminant(&s));
        }
    }

    #[test]
    fn isometry() {
        let a = spec(3, &[(7, 3)]);
        let v = is_isometric(&a, &a);
        assert!(v.isometric);
        assert_eq!(v.witness, Some(gram_matrix(&a)));
        let v = is_isometric(&a, &spec(3, &[(13, 3)]));
        assert!(!v.isometric);
        assert_eq!(v.discriminants, (big(49), big(169)));
        assert!(!is_isometric(&spec(2, &[(5, 2)]), &spec(4, &[(5, 4)])).isometric);
    }

    #[test]
    fn enumeration() {
        let found: Vec<u64> = enumerate_specs(2, 7)
            .iter()
            .map(|s| s.conductor_u64().unwrap())
            .collect();
        assert_eq!(found, vec![3, 5, 7]);
        assert!(enumerate_specs(3, 6).is_empty());
        assert_eq!(enumerate_specs(1, 10), vec![FieldSpec::rationals()]);
        // 6 = lcm(2, 3): 5·7 = 35 ([(5,2),(7,3)]), 7 alone with e = 6 needs 7 ≡ 1 mod 6
        let six = enumerate_specs(6, 40);
        assert!(six.contains(&spec(6, &[(7, 6)])));
        assert!(six.contains(&spec(6, &[(5, 2), (7, 3)])));
    }
}
