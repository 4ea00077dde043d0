//! Brute-force certification of the canonical Gram matrix.
//!
//! A tame cyclic field `K` with ramification data `{(p_i, e_i)}` lives inside
//! `Q(η_f)`, `f = Π p_i`. It is cut out by a surjection
//! `χ: (Z/fZ)* -> Z/nZ` whose restriction to the `i`-th factor has image of
//! order `e_i`. The Gauss periods over the fibres of `χ` form a normal
//! integral basis of `K`, and all their traces reduce to Ramanujan sums.
//!
//! Elements are formal sums `Σ c_a η_f^a` over residues `a mod f`. No
//! relation among roots of unity is ever applied; only the (linear) trace
//! is read off, so the representation does not need to be faithful.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith;
use crate::exec::Execution;
use crate::matrix::GramMatrix;
use crate::trace_form::{gram_matrix, FieldSpec};

/// Largest conductor the oracle will materialize.
pub const MAX_ORACLE_CONDUCTOR: u64 = 1 << 22;

const DENSE_LIMIT: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("modulus {0} is not squarefree")]
    NotSquarefree(u64),
    #[error("{t} is not a primitive root modulo {p}")]
    NotPrimitiveRoot { t: u64, p: u64 },
    #[error("expected {expected} primitive roots, got {got}")]
    RootCount { expected: usize, got: usize },
    #[error("conductor {0} is too large for the oracle")]
    ConductorTooLarge(String),
    #[error("trace {trace} is not divisible by the index {index}")]
    InexactDivision { trace: BigInt, index: u64 },
    #[error("moduli differ ({0} vs {1})")]
    ModulusMismatch(u64, u64),
}

/// `c_f(a) = Tr_{Q(η_f)/Q}(η_f^a) = μ(f/g) φ(f) / φ(f/g)` with `g = gcd(a, f)`.
pub fn ramanujan_sum(f: u64, a: i64) -> Result<i64, OracleError> {
    if f == 0 || !arith::is_squarefree(f) {
        return Err(OracleError::NotSquarefree(f));
    }
    let g = arith::gcd(a.rem_euclid(f as i64) as u64, f);
    let q = f / g;
    Ok(arith::mobius(q) * (arith::totient(f) / arith::totient(q)) as i64)
}

/// `c_f(k)` for every residue `k mod f`.
struct RamanujanTable {
    values: Vec<i64>,
}

impl RamanujanTable {
    fn new(f: u64) -> Result<Self, OracleError> {
        let mut by_gcd: HashMap<u64, i64> = HashMap::new();
        for g in arith::divisors(f) {
            by_gcd.insert(g, ramanujan_sum(f, g as i64)?);
        }
        let values = (0..f).map(|k| by_gcd[&arith::gcd(k, f)]).collect();
        Ok(Self { values })
    }
}

/// `Σ c_a η_f^a` with integer coefficients, canonical sparse form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalRootSum {
    modulus: u64,
    coeffs: BTreeMap<u64, BigInt>,
}

impl FormalRootSum {
    pub fn zero(modulus: u64) -> Self {
        assert!(modulus >= 1);
        Self {
            modulus,
            coeffs: BTreeMap::new(),
        }
    }

    /// `η_f^a`.
    pub fn root_power(modulus: u64, a: i64) -> Self {
        let mut out = Self::zero(modulus);
        out.coeffs
            .insert(a.rem_euclid(modulus as i64) as u64, BigInt::from(1));
        out
    }

    pub fn one(modulus: u64) -> Self {
        Self::root_power(modulus, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(modulus: u64, terms: I) -> Self {
        let mut out = Self::zero(modulus);
        for (a, c) in terms {
            out.add_term(a.rem_euclid(modulus as i64) as u64, c);
        }
        out
    }

    fn add_term(&mut self, a: u64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(a).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&a);
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeff(&self, a: i64) -> BigInt {
        self.coeffs
            .get(&(a.rem_euclid(self.modulus as i64) as u64))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs.iter().map(|(&a, c)| (a, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self, OracleError> {
        self.check(other)?;
        let mut out = self.clone();
        for (&a, c) in &other.coeffs {
            out.add_term(a, c.clone());
        }
        Ok(out)
    }

    /// Product: exponents add modulo `f`.
    pub fn mul(&self, other: &Self) -> Result<Self, OracleError> {
        self.check(other)?;
        let f = self.modulus;
        if let Some(out) = self.mul_small(other) {
            return Ok(out);
        }
        let mut out = Self::zero(f);
        for (&a, x) in &self.coeffs {
            for (&b, y) in &other.coeffs {
                out.add_term((a + b) % f, x * y);
            }
        }
        Ok(out)
    }

    /// Dense `i128` convolution when no partial sum can overflow.
    fn mul_small(&self, other: &Self) -> Option<Self> {
        let f = self.modulus;
        if f > DENSE_LIMIT {
            return None;
        }
        let max_abs = |s: &Self| -> Option<i128> {
            s.coeffs.values().map(|c| c.abs().to_i128()).try_fold(0i128, |m, c| Some(m.max(c?)))
        };
        let (mx, my) = (max_abs(self)?, max_abs(other)?);
        let count = self.coeffs.len().min(other.coeffs.len()) as i128;
        mx.checked_mul(my)?.checked_mul(count.max(1))?.checked_mul(2)?;
        let xs: Vec<(u64, i128)> = self.coeffs.iter().map(|(&a, c)| (a, c.to_i128().unwrap())).collect();
        let ys: Vec<(u64, i128)> = other.coeffs.iter().map(|(&b, c)| (b, c.to_i128().unwrap())).collect();
        let mut acc = vec![0i128; f as usize];
        for &(a, x) in &xs {
            for &(b, y) in &ys {
                let k = a + b;
                let k = if k >= f { k - f } else { k };
                acc[k as usize] += x * y;
            }
        }
        let coeffs = acc
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .map(|(k, c)| (k as u64, BigInt::from(c)))
            .collect();
        Some(Self { modulus: f, coeffs })
    }

    fn check(&self, other: &Self) -> Result<(), OracleError> {
        if self.modulus != other.modulus {
            return Err(OracleError::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    fn trace_with(&self, table: &RamanujanTable) -> BigInt {
        self.coeffs
            .iter()
            .map(|(&a, c)| c * table.values[a as usize])
            .sum()
    }
}

/// `Tr_{Q(η_f)/Q}` of a formal root sum.
pub fn trace_full(x: &FormalRootSum) -> Result<BigInt, OracleError> {
    let f = x.modulus;
    let mut cache: HashMap<u64, i64> = HashMap::new();
    let mut total = BigInt::zero();
    for (&a, c) in &x.coeffs {
        let g = a.gcd(&f);
        let value = match cache.get(&g) {
            Some(&v) => v,
            None => {
                let v = ramanujan_sum(f, a as i64)?;
                cache.insert(g, v);
                v
            }
        };
        total += c * value;
    }
    Ok(total)
}

/// A concrete field with the given ramification data: the character
/// `χ: (Z/fZ)* -> Z/nZ` defined on the `i`-th factor by `t_i^k -> k (n / e_i)`.
#[derive(Debug, Clone)]
pub struct FieldRealization {
    spec: FieldSpec,
    conductor: u64,
    roots: Vec<u64>,
    /// discrete logarithm tables, one per ramified prime
    dlogs: Vec<Vec<u64>>,
    fibers: Vec<Vec<u64>>,
}

impl FieldRealization {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The primitive roots `t_i` this realization was built from.
    pub fn roots(&self) -> &[u64] {
        &self.roots
    }

    /// `χ(u)`, or `None` when `u` is not a unit modulo `f`.
    pub fn chi(&self, u: i64) -> Option<u64> {
        let f = self.conductor;
        let u = u.rem_euclid(f as i64) as u64;
        if arith::gcd(u, f) != 1 {
            return None;
        }
        let n = self.spec.degree();
        let mut value = 0u64;
        for (rp, dlog) in self.spec.ramified().iter().zip(&self.dlogs) {
            let k = dlog[(u % rp.p) as usize];
            value = (value + (k % rp.e) * (n / rp.e)) % n;
        }
        Some(value)
    }

    /// `χ^{-1}(j)` for `j = 0..n`.
    pub fn fibers(&self) -> &[Vec<u64>] {
        &self.fibers
    }

    /// `ker χ`; two realizations give the same field iff their kernels agree.
    pub fn kernel(&self) -> &[u64] {
        &self.fibers[0]
    }
}

/// Build the realization for the given primitive roots, one per ramified prime
/// in canonical order.
pub fn realize(spec: &FieldSpec, roots: &[u64]) -> Result<FieldRealization, OracleError> {
    let ramified = spec.ramified();
    if roots.len() != ramified.len() {
        return Err(OracleError::RootCount {
            expected: ramified.len(),
            got: roots.len(),
        });
    }
    let conductor = spec
        .conductor_u64()
        .filter(|&f| f <= MAX_ORACLE_CONDUCTOR)
        .ok_or_else(|| OracleError::ConductorTooLarge(spec.conductor().to_string()))?;
    let mut dlogs = Vec::with_capacity(ramified.len());
    for (rp, &t) in ramified.iter().zip(roots) {
        if !arith::is_primitive_root(t, rp.p) {
            return Err(OracleError::NotPrimitiveRoot { t, p: rp.p });
        }
        let mut table = vec![0u64; rp.p as usize];
        let mut x = 1u64;
        for k in 0..rp.p - 1 {
            table[x as usize] = k;
            x = x * (t % rp.p) % rp.p;
        }
        dlogs.push(table);
    }
    let mut r = FieldRealization {
        spec: spec.clone(),
        conductor,
        roots: roots.to_vec(),
        dlogs,
        fibers: vec![Vec::new(); spec.degree() as usize],
    };
    let mut fibers = vec![Vec::new(); spec.degree() as usize];
    for u in 0..conductor {
        if let Some(j) = r.chi(u as i64) {
            fibers[j as usize].push(u);
        }
    }
    r.fibers = fibers;
    Ok(r)
}

/// Realization using the least primitive root of every prime.
pub fn realize_default(spec: &FieldSpec) -> Result<FieldRealization, OracleError> {
    let roots: Vec<u64> = spec
        .ramified()
        .iter()
        .map(|rp| arith::primitive_root(rp.p))
        .collect();
    realize(spec, &roots)
}

/// Uniformly random primitive roots, one per ramified prime.
pub fn random_roots<R: Rng + ?Sized>(spec: &FieldSpec, rng: &mut R) -> Vec<u64> {
    spec.ramified()
        .iter()
        .map(|rp| {
            let g = arith::primitive_root(rp.p);
            let order = rp.p - 1;
            loop {
                let k = rng.random_range(1..=order);
                if arith::gcd(k, order) == 1 {
                    break arith::pow_mod(g, k, rp.p);
                }
            }
        })
        .collect()
}

/// The Gauss periods `𝕖_{j+1} = Σ_{u ∈ χ^{-1}(j)} η_f^u`.
pub fn nib(r: &FieldRealization) -> Vec<FormalRootSum> {
    r.fibers
        .iter()
        .map(|fiber| {
            let mut e = FormalRootSum::zero(r.conductor);
            for &u in fiber {
                e.add_term(u, BigInt::from(1));
            }
            e
        })
        .collect()
}

/// `G[i][j] = Tr_{K/Q}(𝕖_i 𝕖_j) = Tr_{Q(η_f)/Q}(𝕖_i 𝕖_j) · n / φ(f)`.
pub fn gram_oracle(r: &FieldRealization) -> Result<GramMatrix, OracleError> {
    let f = r.conductor;
    let n = r.spec.degree() as usize;
    let index = arith::totient(f) / n as u64;
    let table = RamanujanTable::new(f)?;
    let basis = nib(r);
    let mut upper: Vec<Vec<BigInt>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i..n {
            let trace = basis[i].mul(&basis[j])?.trace_with(&table);
            let (q, rem) = trace.div_rem(&BigInt::from(index));
            if !rem.is_zero() {
                return Err(OracleError::InexactDivision { trace, index });
            }
            upper[i].push(q);
        }
    }
    Ok(GramMatrix::from_fn(n, |i, j| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        upper[a][b - a].clone()
    }))
}

/// A trial whose oracle matrix disagreed with the canonical one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: usize,
    pub roots: Vec<u64>,
    pub oracle: GramMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifyReport {
    pub trials: usize,
    pub seed: u64,
    pub pass: bool,
    pub expected: GramMatrix,
    /// Primitive roots used by each trial, in trial order.
    pub realizations: Vec<Vec<u64>>,
    /// Number of distinct fields among the realizations.
    pub distinct_fields: usize,
    pub failure: Option<Counterexample>,
}

/// Compare the oracle against [`gram_matrix`] on `trials` random realizations.
pub fn certify(spec: &FieldSpec, trials: usize, seed: u64) -> Result<CertifyReport, OracleError> {
    certify_with(spec, trials, seed, Execution::default())
}

pub fn certify_with(
    spec: &FieldSpec,
    trials: usize,
    seed: u64,
    exec: Execution,
) -> Result<CertifyReport, OracleError> {
    let expected = gram_matrix(spec);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let realizations: Vec<Vec<u64>> = (0..trials).map(|_| random_roots(spec, &mut rng)).collect();
    let outcomes = exec.map(&realizations, |roots| {
        let r = realize(spec, roots)?;
        let g = gram_oracle(&r)?;
        Ok::<_, OracleError>((r.kernel().to_vec(), g))
    });
    let mut kernels = Vec::new();
    let mut failure = None;
    for (trial, outcome) in outcomes.into_iter().enumerate() {
        let (kernel, oracle) = outcome?;
        if !kernels.contains(&kernel) {
            kernels.push(kernel);
        }
        if failure.is_none() && oracle != expected {
            failure = Some(Counterexample {
                trial,
                roots: realizations[trial].clone(),
                oracle,
            });
        }
    }
    Ok(CertifyReport {
        trials,
        seed,
        pass: failure.is_none(),
        expected,
        realizations,
        distinct_fields: kernels.len(),
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace_form::RamifiedPrime;

    fn spec(n: u64, r: &[(u64, u64)]) -> FieldSpec {
        FieldSpec::new(n, r.iter().map(|&(p, e)| RamifiedPrime::new(p, e)).collect()).unwrap()
    }

    fn rows(m: &GramMatrix) -> Vec<Vec<i64>> {
        m.to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.to_i64().unwrap()).collect())
            .collect()
    }

    #[test]
    fn ramanujan_examples() {
        assert_eq!(ramanujan_sum(7, 0), Ok(6));
        assert_eq!(ramanujan_sum(7, 3), Ok(-1));
        // divisor sum: d ∈ {1, 5}: 1·μ(15) + 5·μ(3) = 1 - 5
        assert_eq!(ramanujan_sum(15, 5), Ok(-4));
        assert_eq!(ramanujan_sum(12, 1), Err(OracleError::NotSquarefree(12)));
        assert_eq!(ramanujan_sum(1, 0), Ok(1));
    }

    #[test]
    fn trace_examples() {
        let x = FormalRootSum::from_terms(3, [(1, 1.into()), (2, 1.into())]);
        assert_eq!(trace_full(&x), Ok(BigInt::from(-2)));
        assert_eq!(trace_full(&FormalRootSum::one(15)), Ok(BigInt::from(8)));
        assert_eq!(trace_full(&FormalRootSum::zero(15)), Ok(BigInt::zero()));
    }

    #[test]
    fn mul_paths_agree() {
        let x = FormalRootSum::from_terms(10, [(1, 3.into()), (4, (-2).into()), (9, 1.into())]);
        let y = FormalRootSum::from_terms(10, [(6, 5.into()), (3, 1.into())]);
        let fast = x.mul(&y).unwrap();
        let huge = BigInt::from(1u8) << 100;
        let xb = FormalRootSum::from_terms(10, x.terms().map(|(a, c)| (a as i64, c * &huge)));
        let slow = xb.mul(&y).unwrap();
        let rescaled = FormalRootSum::from_terms(10, fast.terms().map(|(a, c)| (a as i64, c * &huge)));
        assert_eq!(slow, rescaled);
        assert_eq!(fast.coeff(0), BigInt::from(-10));
        assert_eq!(fast.coeff(7), BigInt::from(15 - 2));
    }

    #[test]
    fn realize_examples() {
        let s = spec(2, &[(3, 2)]);
        let r = realize(&s, &[2]).unwrap();
        assert_eq!(r.chi(2), Some(1));
        assert_eq!(r.fibers(), &[vec![1], vec![2]]);

        let s = spec(3, &[(7, 3)]);
        let r = realize(&s, &[3]).unwrap();
        assert_eq!(r.chi(3), Some(1));
        assert_eq!(r.kernel(), &[1, 6]);
        assert_eq!(
            realize(&s, &[4]).unwrap_err(),
            OracleError::NotPrimitiveRoot { t: 4, p: 7 }
        );
        assert!(matches!(realize(&s, &[]), Err(OracleError::RootCount { .. })));
    }

    #[test]
    fn nib_examples() {
        let r = realize(&spec(2, &[(3, 2)]), &[2]).unwrap();
        assert_eq!(nib(&r), vec![FormalRootSum::root_power(3, 1), FormalRootSum::root_power(3, 2)]);
        let r = realize(&spec(3, &[(7, 3)]), &[3]).unwrap();
        let e1 = FormalRootSum::from_terms(7, [(1, 1.into()), (6, 1.into())]);
        assert_eq!(nib(&r)[0], e1);
        let r = realize(&FieldSpec::rationals(), &[]).unwrap();
        assert_eq!(nib(&r), vec![FormalRootSum::one(1)]);
    }

    #[test]
    fn oracle_examples() {
        let r = realize(&spec(2, &[(3, 2)]), &[2]).unwrap();
        assert_eq!(rows(&gram_oracle(&r).unwrap()), vec![vec![-1, 2], vec![2, -1]]);
        let r = realize(&spec(3, &[(7, 3)]), &[3]).unwrap();
        assert_eq!(
            rows(&gram_oracle(&r).unwrap()),
            vec![vec![5, -2, -2], vec![-2, 5, -2], vec![-2, -2, 5]]
        );
        let r = realize(&FieldSpec::rationals(), &[]).unwrap();
        assert_eq!(rows(&gram_oracle(&r).unwrap()), vec![vec![1]]);
    }

    #[test]
    fn certify_examples() {
        let rep = certify(&spec(3, &[(7, 3)]), 5, 1).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.distinct_fields, 1);
        let rep = certify(&spec(2, &[(3, 2)]), 1, 1).unwrap();
        assert!(rep.pass);
        assert_eq!(rows(&rep.expected), vec![vec![-1, 2], vec![2, -1]]);
    }

    #[test]
    fn certify_covers_all_fields_with_same_data() {
        // χ is determined up to the ratio of the two local twists in (Z/5)*
        let s = spec(5, &[(11, 5), (31, 5)]);
        let rep = certify(&s, 8, 3).unwrap();
        assert!(rep.pass);
        let rep = certify(&s, 64, 3).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.distinct_fields, 4);
    }

    #[test]
    fn certify_is_reproducible() {
        let s = spec(4, &[(5, 4), (13, 2)]);
        let a = certify(&s, 4, 99).unwrap();
        let b = certify_with(&s, 4, 99, Execution::Sequential).unwrap();
        assert_eq!(a, b);
    }
}
