//! Square integer matrices with exact determinant and inertia.
//!
//! Everything here is exact: determinants use fraction-free (Bareiss)
//! elimination over `BigInt`, and the inertia comes from a congruence
//! diagonalization over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Row-major `n x n` integer matrix, used for Gram matrices of trace forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl GramMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    /// Build from rows; `None` if the rows do not form a square matrix.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Option<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return None;
        }
        Some(Self {
            dim,
            entries: rows.iter().flatten().cloned().map(Into::into).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows().map(<[BigInt]>::to_vec).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    /// `P^T M P` for the permutation matrix of `perm`, i.e. entry `(i, j)` becomes
    /// `M[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dim);
        Self::from_fn(self.dim, |i, j| self.get(perm[i], perm[j]).clone())
    }

    fn leading_block(&self, k: usize) -> Vec<Vec<BigInt>> {
        (0..k)
            .map(|i| (0..k).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn determinant(&self) -> BigInt {
        bareiss_determinant(self.leading_block(self.dim))
    }

    /// `det` of the leading `k x k` blocks for `k = 1..=n`.
    pub fn leading_principal_minors(&self) -> Vec<BigInt> {
        (1..=self.dim)
            .map(|k| bareiss_determinant(self.leading_block(k)))
            .collect()
    }

    /// Sylvester's criterion on exact leading minors.
    pub fn is_positive_definite(&self) -> bool {
        self.leading_principal_minors().iter().all(Signed::is_positive)
    }

    /// Inertia by symmetric congruence diagonalization over `Q`. Panics if the
    /// matrix is not symmetric.
    pub fn inertia(&self) -> Inertia {
        assert!(self.is_symmetric(), "inertia needs a symmetric matrix");
        let n = self.dim;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from_integer(self.get(i, j).clone()))
                    .collect()
            })
            .collect();
        let mut out = Inertia {
            positive: 0,
            negative: 0,
            zero: 0,
        };
        let mut active: Vec<usize> = (0..n).collect();
        while !active.is_empty() {
            let pivot = match active.iter().copied().find(|&i| !a[i][i].is_zero()) {
                Some(p) => Some(p),
                None => {
                    // all remaining diagonal entries vanish: fold a partner row in
                    // so that the diagonal becomes 2 a_ij
                    let pair = active.iter().flat_map(|&i| active.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !a[i][j].is_zero());
                    pair.map(|(i, j)| {
                        add_congruent(&mut a, i, j);
                        i
                    })
                }
            };
            let Some(p) = pivot else {
                out.zero += active.len();
                break;
            };
            let d = a[p][p].clone();
            if d.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            active.retain(|&i| i != p);
            for &i in &active {
                if a[i][p].is_zero() {
                    continue;
                }
                let factor = &a[i][p] / &d;
                for &j in &active {
                    let delta = &factor * &a[p][j];
                    a[i][j] -= delta;
                }
            }
            for &i in &active {
                a[i][p] = BigRational::zero();
                a[p][i] = BigRational::zero();
            }
        }
        out
    }

    /// Negative-eigenvalue count from sign changes of `1, D_1, ..., D_n`, valid
    /// only when every leading minor is non-zero.
    pub fn jacobi_negative_count(&self) -> Option<usize> {
        let minors = self.leading_principal_minors();
        if minors.iter().any(Zero::is_zero) {
            return None;
        }
        let mut prev = BigInt::one();
        let mut changes = 0;
        for m in minors {
            if m.is_negative() != prev.is_negative() {
                changes += 1;
            }
            prev = m;
        }
        Some(changes)
    }
}

/// Row and column `i += j`, a congruence transform. With `a_ii = a_jj = 0`
/// the new diagonal entry is `2 a_ij`.
fn add_congruent(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    let n = a.len();
    for k in 0..n {
        let v = a[j][k].clone();
        a[i][k] += v;
    }
    for k in 0..n {
        let v = a[k][j].clone();
        a[k][i] += v;
    }
}

/// Fraction-free Gaussian elimination with row pivoting.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> GramMatrix {
        GramMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    // Leibniz expansion over all permutations.
    fn leibniz(a: &GramMatrix) -> BigInt {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = a.dim();
        perms(n)
            .into_iter()
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let term: BigInt = (0..n).map(|i| a.get(i, p[i]).clone()).product();
                if inversions % 2 == 0 { term } else { -term }
            })
            .sum()
    }

    #[test]
    fn determinant_matches_leibniz() {
        let cases = [
            m(&[&[5, -2, -2], &[-2, 5, -2], &[-2, -2, 5]]),
            m(&[&[0, 1, 2], &[1, 0, 3], &[2, 3, 0]]),
            m(&[&[-1, -1, 4, -1], &[-1, -1, -1, 4], &[4, -1, -1, -1], &[-1, 4, -1, -1]]),
            m(&[&[1, 2], &[2, 4]]),
            m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]),
        ];
        for c in &cases {
            assert_eq!(c.determinant(), leibniz(c), "{c}");
        }
        assert_eq!(cases[0].determinant(), BigInt::from(49));
        assert_eq!(cases[2].determinant(), BigInt::from(125));
    }

    #[test]
    fn empty_matrix_has_unit_determinant() {
        let e = GramMatrix::from_rows::<i64>(&[]).unwrap();
        assert_eq!(e.determinant(), BigInt::one());
    }

    #[test]
    fn inertia_handles_zero_diagonal() {
        let h = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(h.inertia(), Inertia { positive: 1, negative: 1, zero: 0 });
        let z = m(&[&[0, 0], &[0, 0]]);
        assert_eq!(z.inertia(), Inertia { positive: 0, negative: 0, zero: 2 });
        let eis = m(&[&[-1, 2], &[2, -1]]);
        assert_eq!(eis.inertia(), Inertia { positive: 1, negative: 1, zero: 0 });
        assert_eq!(eis.jacobi_negative_count(), Some(1));
        let sing = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.inertia(), Inertia { positive: 1, negative: 0, zero: 1 });
    }

    #[test]
    fn definiteness() {
        assert!(m(&[&[3, -2], &[-2, 3]]).is_positive_definite());
        assert!(!m(&[&[-1, 2], &[2, -1]]).is_positive_definite());
    }

    #[test]
    fn not_square_is_rejected() {
        assert!(GramMatrix::from_rows(&[vec![1, 2]]).is_none());
    }
}
