//! Integer group rings `Z[G]` of finite abelian groups.
//!
//! A [`FiniteAbelianGroup`] is a direct product of cyclic groups `Z/n_1 x ... x Z/n_k`.
//! Elements are tuples of residues; internally each tuple is packed into a
//! mixed-radix index with the first factor least significant, so the
//! product `G1 x G2` packs `(g1, g2)` as `g1 + |G1| * g2`.
//!
//! [`GroupRingElement`] is kept in canonical sparse form: a map from group
//! elements to non-zero arbitrary-precision coefficients. Equality is
//! structural on that form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupRingError {
    #[error("operands live in different group rings ({left} vs {right})")]
    GroupMismatch { left: String, right: String },
    #[error("invariant factors must be >= 1")]
    InvalidFactor,
    #[error("{d} does not divide the group order {order}")]
    NotDivisor { d: u64, order: u64 },
    #[error("group {0} is not cyclic")]
    NotCyclic(String),
    #[error("element {element:?} does not have {arity} components")]
    BadElement { element: Vec<u64>, arity: usize },
}

/// `Z/n_1 x ... x Z/n_k`, given by its factors `n_i >= 1`.
///
/// The empty factor list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self, GroupRingError> {
        if factors.contains(&0) {
            return Err(GroupRingError::InvalidFactor);
        }
        Ok(Self { factors })
    }

    /// `Z/mZ`.
    pub fn cyclic(m: u64) -> Self {
        assert!(m >= 1, "cyclic group order must be >= 1");
        Self { factors: vec![m] }
    }

    pub fn trivial() -> Self {
        Self { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// The order `m` if the group is presented as a single `Z/mZ`.
    pub fn cyclic_order(&self) -> Option<u64> {
        match self.factors.as_slice() {
            [m] => Some(*m),
            [] => Some(1),
            _ => None,
        }
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self { factors }
    }

    /// Reduce a tuple of integers to an element of the group.
    pub fn element(&self, residues: &[i64]) -> Result<Vec<u64>, GroupRingError> {
        if residues.len() != self.factors.len() {
            return Err(GroupRingError::BadElement {
                element: residues.iter().map(|&r| r as u64).collect(),
                arity: self.factors.len(),
            });
        }
        Ok(residues
            .iter()
            .zip(&self.factors)
            .map(|(&r, &n)| r.rem_euclid(n as i64) as u64)
            .collect())
    }

    pub fn identity(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.order() as usize).map(|i| self.decode(i))
    }

    pub(crate) fn encode(&self, element: &[u64]) -> usize {
        let mut idx = 0usize;
        let mut stride = 1usize;
        for (&r, &n) in element.iter().zip(&self.factors) {
            idx += (r % n) as usize * stride;
            stride *= n as usize;
        }
        idx
    }

    pub(crate) fn decode(&self, mut idx: usize) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&n| {
                let r = (idx % n as usize) as u64;
                idx /= n as usize;
                r
            })
            .collect()
    }

    fn check_element(&self, element: &[u64]) -> Result<(), GroupRingError> {
        if element.len() != self.factors.len() {
            return Err(GroupRingError::BadElement {
                element: element.to_vec(),
                arity: self.factors.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn add_idx(&self, a: usize, b: usize) -> usize {
        if let [n] = self.factors.as_slice() {
            return (a + b) % *n as usize;
        }
        let (mut a, mut b) = (a, b);
        let mut idx = 0usize;
        let mut stride = 1usize;
        for &n in &self.factors {
            let n = n as usize;
            idx += ((a % n + b % n) % n) * stride;
            a /= n;
            b /= n;
            stride *= n;
        }
        idx
    }

    pub(crate) fn neg_idx(&self, a: usize) -> usize {
        if let [n] = self.factors.as_slice() {
            let n = *n as usize;
            return (n - a % n) % n;
        }
        let mut a = a;
        let mut idx = 0usize;
        let mut stride = 1usize;
        for &n in &self.factors {
            let n = n as usize;
            idx += ((n - a % n) % n) * stride;
            a /= n;
            stride *= n;
        }
        idx
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// A subgroup, stored as its closed element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    group: FiniteAbelianGroup,
    members: BTreeSet<usize>,
    generators: Vec<Vec<u64>>,
}

impl Subgroup {
    /// The unique subgroup of order `d` of a cyclic group `Z/mZ`, generated by `m/d`.
    pub fn of_order(group: &FiniteAbelianGroup, d: u64) -> Result<Self, GroupRingError> {
        let m = group
            .cyclic_order()
            .ok_or_else(|| GroupRingError::NotCyclic(group.to_string()))?;
        if d == 0 || m % d != 0 {
            return Err(GroupRingError::NotDivisor { d, order: m });
        }
        if group.factors.is_empty() {
            return Ok(Self::trivial(group));
        }
        Self::generated_by(group, &[vec![m / d]])
    }

    /// The closure of `generators` under the group law.
    pub fn generated_by(
        group: &FiniteAbelianGroup,
        generators: &[Vec<u64>],
    ) -> Result<Self, GroupRingError> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            group.check_element(g)?;
            gens.push(g.iter().zip(&group.factors).map(|(&r, &n)| r % n).collect::<Vec<u64>>());
        }
        let mut members = BTreeSet::from([0usize]);
        let mut frontier = vec![0usize];
        let gen_idx: Vec<usize> = gens.iter().map(|g| group.encode(g)).collect();
        while let Some(x) = frontier.pop() {
            for &g in &gen_idx {
                let y = group.add_idx(x, g);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Ok(Self {
            group: group.clone(),
            members,
            generators: gens,
        })
    }

    pub fn trivial(group: &FiniteAbelianGroup) -> Self {
        Self {
            group: group.clone(),
            members: BTreeSet::from([0usize]),
            generators: Vec::new(),
        }
    }

    pub fn whole(group: &FiniteAbelianGroup) -> Self {
        let generators = (0..group.factors.len())
            .map(|i| {
                let mut e = group.identity();
                e[i] = 1 % group.factors[i];
                e
            })
            .collect();
        Self {
            group: group.clone(),
            members: (0..group.order() as usize).collect(),
            generators,
        }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn contains(&self, element: &[u64]) -> bool {
        element.len() == self.group.factors.len() && self.members.contains(&self.group.encode(element))
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        self.members.iter().map(|&i| self.group.decode(i))
    }

    /// `Σ_H`, the sum of all elements of the subgroup.
    pub fn sigma(&self) -> GroupRingElement {
        GroupRingElement {
            group: self.group.clone(),
            coeffs: self.members.iter().map(|&i| (i, BigInt::one())).collect(),
        }
    }

    /// The quotient `G/H` presented as a product of cyclic groups, together
    /// with the projection `G -> G/H` on packed indices.
    fn quotient(&self) -> (FiniteAbelianGroup, Vec<usize>) {
        let g = &self.group;
        if let Some(m) = g.cyclic_order() {
            if !g.factors.is_empty() {
                let q = m / self.order();
                let target = FiniteAbelianGroup::cyclic(q);
                let proj = (0..m as usize).map(|k| k % q as usize).collect();
                return (target, proj);
            }
        }
        let (invariants, transform) = quotient_presentation(&g.factors, &self.generators);
        let keep: Vec<usize> = (0..invariants.len()).filter(|&i| invariants[i] != 1).collect();
        let target = FiniteAbelianGroup {
            factors: keep.iter().map(|&i| invariants[i]).collect(),
        };
        let proj = g
            .elements()
            .map(|x| {
                let image: Vec<u64> = keep
                    .iter()
                    .map(|&i| {
                        let d = invariants[i] as i128;
                        let v: i128 = transform[i]
                            .iter()
                            .zip(&x)
                            .map(|(&t, &xi)| t as i128 * xi as i128)
                            .sum();
                        v.rem_euclid(d) as u64
                    })
                    .collect();
                target.encode(&image)
            })
            .collect();
        (target, proj)
    }
}

/// Smith normal form presentation of `Z^k / (diag(factors) + span(generators))`.
///
/// Returns the diagonal entries and the unimodular row transform `P` so that
/// an element `x` maps to `(P x)_i mod d_i` in the quotient.
fn quotient_presentation(factors: &[u64], generators: &[Vec<u64>]) -> (Vec<u64>, Vec<Vec<i64>>) {
    let k = factors.len();
    let cols = k + generators.len();
    let mut a: Vec<Vec<i64>> = (0..k)
        .map(|i| {
            let mut row = vec![0i64; cols];
            row[i] = factors[i] as i64;
            for (j, g) in generators.iter().enumerate() {
                row[k + j] = g[i] as i64;
            }
            row
        })
        .collect();
    let mut p: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
        .collect();

    for t in 0..k {
        loop {
            // pivot: smallest non-zero magnitude in the remaining block
            let mut best: Option<(usize, usize)> = None;
            for i in t..k {
                for j in t..cols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break;
            };
            a.swap(t, bi);
            p.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let mut clean = true;
            for i in t + 1..k {
                let q = a[i][t].div_euclid(a[t][t]);
                if q != 0 {
                    for j in 0..cols {
                        a[i][j] -= q * a[t][j];
                    }
                    for j in 0..k {
                        p[i][j] -= q * p[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(a[t][t]);
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..k).find(|&i| (t + 1..cols).any(|j| a[i][j] % a[t][t] != 0));
            match bad {
                Some(i) => {
                    for j in 0..cols {
                        a[t][j] += a[i][j];
                    }
                    for j in 0..k {
                        p[t][j] += p[i][j];
                    }
                }
                None => break,
            }
        }
    }
    let diag = (0..k).map(|i| a[i].get(i).map_or(0, |v| v.unsigned_abs())).collect();
    (diag, p)
}

/// An element of `Z[G]` in canonical sparse form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    group: FiniteAbelianGroup,
    coeffs: BTreeMap<usize, BigInt>,
}

impl GroupRingElement {
    pub fn zero(group: &FiniteAbelianGroup) -> Self {
        Self {
            group: group.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The identity element `e`, i.e. the ring unit.
    pub fn one(group: &FiniteAbelianGroup) -> Self {
        Self::basis(group, &group.identity()).expect("identity is a valid element")
    }

    /// The basis element `g`.
    pub fn basis(group: &FiniteAbelianGroup, g: &[u64]) -> Result<Self, GroupRingError> {
        Self::from_terms(group, [(g.to_vec(), BigInt::one())])
    }

    pub fn from_terms<I>(group: &FiniteAbelianGroup, terms: I) -> Result<Self, GroupRingError>
    where
        I: IntoIterator<Item = (Vec<u64>, BigInt)>,
    {
        let mut out = Self::zero(group);
        for (g, c) in terms {
            group.check_element(&g)?;
            let idx = group.encode(&g);
            out.add_at(idx, &c);
        }
        Ok(out)
    }

    /// Element of `Z[Z/mZ]` from `(residue, coefficient)` pairs.
    pub fn cyclic<I>(m: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let group = FiniteAbelianGroup::cyclic(m);
        let mut out = Self::zero(&group);
        for (r, c) in terms {
            out.add_at(r.rem_euclid(m as i64) as usize, &BigInt::from(c));
        }
        out
    }

    /// `Σ_H` for the subgroup of order `d` in the cyclic group `Z/mZ`.
    pub fn sigma_cyclic(m: u64, d: u64) -> Result<Self, GroupRingError> {
        Ok(Subgroup::of_order(&FiniteAbelianGroup::cyclic(m), d)?.sigma())
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of group elements with non-zero coefficient.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, g: &[u64]) -> BigInt {
        if g.len() != self.group.factors.len() {
            return BigInt::zero();
        }
        self.coeffs
            .get(&self.group.encode(g))
            .cloned()
            .unwrap_or_default()
    }

    /// Coefficient of residue `k` in `Z[Z/mZ]`.
    pub fn coeff_cyclic(&self, k: i64) -> BigInt {
        let m = self.group.order() as i64;
        self.coeffs
            .get(&(k.rem_euclid(m) as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<u64>, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&i, c)| (self.group.decode(i), c))
    }

    fn add_at(&mut self, idx: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(idx).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    fn same_group(&self, other: &Self) -> Result<(), GroupRingError> {
        if self.group != other.group {
            return Err(GroupRingError::GroupMismatch {
                left: self.group.to_string(),
                right: other.group.to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.same_group(other)?;
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.add_at(i, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.try_add(&other.neg_ref())
    }

    /// Convolution product.
    pub fn try_mul(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.same_group(other)?;
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                *acc.entry(self.group.add_idx(i, j)).or_default() += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self {
            group: self.group.clone(),
            coeffs: acc,
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.group);
        }
        Self {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, c * k)).collect(),
        }
    }

    fn neg_ref(&self) -> Self {
        Self {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, -c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.group);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// The involution `g -> g^{-1}`.
    pub fn involute(&self) -> Self {
        Self {
            group: self.group.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&i, c)| (self.group.neg_idx(i), c.clone()))
                .collect(),
        }
    }

    pub fn is_self_adjoint(&self) -> bool {
        *self == self.involute()
    }

    /// Coefficient of the identity.
    pub fn pr(&self) -> BigInt {
        self.coeffs.get(&0).cloned().unwrap_or_default()
    }

    /// Augmentation: sum of all coefficients.
    pub fn aug(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Image under the ring homomorphism `Z[G] -> Z[G/H]`.
    ///
    /// For cyclic `G = Z/mZ` the quotient is `Z/(m/|H|)` with `k -> k mod (m/|H|)`.
    pub fn quotient_push(&self, h: &Subgroup) -> Result<Self, GroupRingError> {
        if h.group != self.group {
            return Err(GroupRingError::GroupMismatch {
                left: self.group.to_string(),
                right: h.group.to_string(),
            });
        }
        let (target, proj) = h.quotient();
        let mut out = Self::zero(&target);
        for (&i, c) in &self.coeffs {
            out.add_at(proj[i], c);
        }
        Ok(out)
    }

    /// The image of `(a, b)` under `Z[G1] x Z[G2] -> Z[G1 x G2]`, `(X1, X2) -> X1 X2`.
    pub fn tensor_embed(&self, other: &Self) -> Self {
        let group = self.group.product(&other.group);
        let stride = self.group.order() as usize;
        let mut coeffs = BTreeMap::new();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                coeffs.insert(i + stride * j, a * b);
            }
        }
        Self { group, coeffs }
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&i, c) in &self.coeffs {
            let g = self.group.decode(i);
            let label = if i == 0 {
                "e".to_string()
            } else if g.len() == 1 {
                format!("g^{}", g[0])
            } else {
                format!("{g:?}")
            };
            if !first {
                write!(f, " ")?;
            }
            if c.sign() == num_bigint::Sign::Minus {
                write!(f, "- {}*{label}", -c)?;
            } else {
                write!(f, "{}{c}*{label}", if first { "" } else { "+ " })?;
            }
            first = false;
        }
        Ok(())
    }
}

impl<'a> Add<&'a GroupRingElement> for &'a GroupRingElement {
    type Output = GroupRingElement;

    fn add(self, rhs: &'a GroupRingElement) -> GroupRingElement {
        self.try_add(rhs).expect("group mismatch in addition")
    }
}

impl<'a> Sub<&'a GroupRingElement> for &'a GroupRingElement {
    type Output = GroupRingElement;

    fn sub(self, rhs: &'a GroupRingElement) -> GroupRingElement {
        self.try_sub(rhs).expect("group mismatch in subtraction")
    }
}

impl<'a> Mul<&'a GroupRingElement> for &'a GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, rhs: &'a GroupRingElement) -> GroupRingElement {
        self.try_mul(rhs).expect("group mismatch in multiplication")
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;

    fn neg(self) -> GroupRingElement {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u64, terms: &[(i64, i64)]) -> GroupRingElement {
        GroupRingElement::cyclic(m, terms.iter().copied())
    }

    #[test]
    fn add_examples() {
        let e_plus_g = z(5, &[(0, 1), (1, 1)]);
        assert_eq!(&e_plus_g + &z(5, &[(1, -1)]), z(5, &[(0, 1)]));
        let x = z(5, &[(2, 4), (3, -1)]);
        assert_eq!(&GroupRingElement::zero(x.group()) + &x, x);
        assert_eq!(&z(3, &[(0, 2)]) + &z(3, &[(0, 3)]), z(3, &[(0, 5)]));
    }

    #[test]
    fn mul_examples() {
        assert!((&z(2, &[(0, 1), (1, 1)]) * &z(2, &[(0, 1), (1, -1)])).is_zero());
        let sigma = GroupRingElement::sigma_cyclic(3, 3).unwrap();
        assert_eq!(&sigma * &sigma, sigma.scale(&BigInt::from(3)));
        // (7e - 2Σ)(13e - 4Σ) in Z[Z/3]: 91e - 28Σ - 26Σ + 8·3Σ = 91e - 30Σ
        let e = GroupRingElement::one(sigma.group());
        let a = &e.scale(&7.into()) - &sigma.scale(&2.into());
        let b = &e.scale(&13.into()) - &sigma.scale(&4.into());
        let expected = &e.scale(&91.into()) - &sigma.scale(&30.into());
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn mismatch_is_error() {
        let a = z(3, &[(0, 1)]);
        let b = z(4, &[(0, 1)]);
        assert!(matches!(a.try_add(&b), Err(GroupRingError::GroupMismatch { .. })));
        assert!(matches!(a.try_mul(&b), Err(GroupRingError::GroupMismatch { .. })));
    }

    #[test]
    fn involution_examples() {
        let e = z(4, &[(0, 1)]);
        assert_eq!(e.involute(), e);
        assert_eq!(z(4, &[(1, 2)]).involute(), z(4, &[(3, 2)]));
        for d in [1, 2, 4] {
            let s = GroupRingElement::sigma_cyclic(4, d).unwrap();
            assert_eq!(s.involute(), s);
        }
        let g = FiniteAbelianGroup::new(vec![3, 4]).unwrap();
        let h = Subgroup::generated_by(&g, &[vec![1, 2]]).unwrap();
        assert_eq!(h.sigma().involute(), h.sigma());
    }

    #[test]
    fn pr_and_aug() {
        assert_eq!(z(4, &[(0, 5), (1, 3)]).pr(), BigInt::from(5));
        assert_eq!(GroupRingElement::sigma_cyclic(6, 6).unwrap().pr(), BigInt::one());
        assert_eq!(z(4, &[(1, 1)]).pr(), BigInt::zero());
        assert_eq!(GroupRingElement::sigma_cyclic(6, 6).unwrap().aug(), BigInt::from(6));
        let sigma = GroupRingElement::sigma_cyclic(3, 3).unwrap();
        let x = &z(3, &[(0, 7)]) - &sigma.scale(&2.into());
        assert_eq!(x.aug(), BigInt::one());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(
            GroupRingElement::sigma_cyclic(6, 3).unwrap(),
            z(6, &[(0, 1), (2, 1), (4, 1)])
        );
        assert_eq!(GroupRingElement::sigma_cyclic(4, 1).unwrap(), z(4, &[(0, 1)]));
        let s2 = GroupRingElement::sigma_cyclic(4, 2).unwrap();
        let s4 = GroupRingElement::sigma_cyclic(4, 4).unwrap();
        assert_eq!(&s2 * &s4, s4.scale(&2.into()));
        assert!(matches!(
            GroupRingElement::sigma_cyclic(6, 4),
            Err(GroupRingError::NotDivisor { d: 4, order: 6 })
        ));
    }

    #[test]
    fn quotient_examples() {
        let g = FiniteAbelianGroup::cyclic(4);
        let h = Subgroup::of_order(&g, 2).unwrap();
        let pushed = Subgroup::whole(&g).sigma().quotient_push(&h).unwrap();
        let q = FiniteAbelianGroup::cyclic(2);
        assert_eq!(pushed, Subgroup::whole(&q).sigma().scale(&2.into()));
        assert_eq!(
            GroupRingElement::one(&g).quotient_push(&h).unwrap(),
            GroupRingElement::one(&q)
        );
        assert!(z(4, &[(1, 1), (3, -1)]).quotient_push(&h).unwrap().is_zero());
    }

    #[test]
    fn quotient_of_non_cyclic_group() {
        // Z/2 x Z/4 modulo <(1, 2)> is cyclic of order 4
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        let h = Subgroup::generated_by(&g, &[vec![1, 2]]).unwrap();
        assert_eq!(h.order(), 2);
        let one = GroupRingElement::one(&g);
        let img = one.quotient_push(&h).unwrap();
        assert_eq!(img.group().order(), 4);
        assert_eq!(img, GroupRingElement::one(img.group()));
        let pushed = h.sigma().quotient_push(&h).unwrap();
        assert_eq!(pushed, GroupRingElement::one(img.group()).scale(&2.into()));
        // the generator (0,1) has order 4 in the quotient
        let gen = GroupRingElement::basis(&g, &[0, 1]).unwrap();
        let q = gen.quotient_push(&h).unwrap();
        assert_ne!(q.pow(2), GroupRingElement::one(q.group()));
        assert_eq!(q.pow(4), GroupRingElement::one(q.group()));
    }

    #[test]
    fn tensor_examples() {
        let g1 = FiniteAbelianGroup::cyclic(3);
        let g2 = FiniteAbelianGroup::cyclic(4);
        let e = GroupRingElement::one(&g1).tensor_embed(&GroupRingElement::one(&g2));
        assert_eq!(e, GroupRingElement::one(&g1.product(&g2)));
        let s = Subgroup::whole(&g1).sigma().tensor_embed(&Subgroup::whole(&g2).sigma());
        assert_eq!(s, Subgroup::whole(&g1.product(&g2)).sigma());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(z(3, &[(0, 7), (1, -2)]).to_string(), "7*e - 2*g^1");
        assert_eq!(GroupRingElement::zero(&FiniteAbelianGroup::cyclic(2)).to_string(), "0");
    }
}
