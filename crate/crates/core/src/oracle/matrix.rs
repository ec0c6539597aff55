use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Largest dimension accepted by [`charpoly_exact`].
pub const MAX_CHARPOLY_DIM: usize = 80;
/// Largest dimension accepted by [`rank_exact`] and [`det_exact`].
pub const MAX_ELIMINATION_DIM: usize = 400;

/// Dense square matrix of big integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "{} entries cannot form a {n}x{n} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        ExactMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix must be square".into()));
        }
        Ok(ExactMatrix {
            n,
            entries: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `M + c I`
    pub fn plus_scalar(&self, c: &BigInt) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.entries[i * self.n + i] += c;
        }
        out
    }

    /// Deletes row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let n = self.n - 1;
        let entries = (0..self.n)
            .filter(|&i| i != r)
            .flat_map(|i| (0..self.n).filter(move |&j| j != c).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        ExactMatrix { n, entries }
    }

    fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[BigInt]>::to_vec)
            .collect()
    }

    /// `self * rhs`, using machine-word multipliers when `self` fits.
    fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let n = self.n;
        let Some(small) = self
            .entries
            .iter()
            .map(ToPrimitive::to_i64)
            .collect::<Option<Vec<i64>>>()
        else {
            return self.mul_big(rhs);
        };
        // column sums, for rows that are mostly one repeated off-diagonal value
        let mut col_sums: Option<Vec<BigInt>> = None;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            let row_a = &small[i * n..(i + 1) * n];
            let row = &mut out[i * n..(i + 1) * n];
            if let Some(v) = dense_off_diagonal(row_a, i) {
                let sums = col_sums.get_or_insert_with(|| column_sums(rhs));
                // v * (sum of all rows except row i and the zero entries)
                row.clone_from_slice(sums);
                for (l, &a) in row_a.iter().enumerate() {
                    if l == i || a == 0 {
                        let other = &rhs.entries[l * n..(l + 1) * n];
                        row.iter_mut().zip(other).for_each(|(o, b)| *o -= b);
                    }
                }
                if v == -1 {
                    row.iter_mut().for_each(|o| *o = -std::mem::take(o));
                }
                let d = row_a[i];
                if d != 0 {
                    let other = &rhs.entries[i * n..(i + 1) * n];
                    row.iter_mut().zip(other).for_each(|(o, b)| *o += b * d);
                }
                continue;
            }
            for (l, &a) in row_a.iter().enumerate() {
                let other = &rhs.entries[l * n..(l + 1) * n];
                match a {
                    0 => {}
                    1 => row.iter_mut().zip(other).for_each(|(o, b)| *o += b),
                    -1 => row.iter_mut().zip(other).for_each(|(o, b)| *o -= b),
                    _ => row.iter_mut().zip(other).for_each(|(o, b)| *o += b * a),
                }
            }
        }
        ExactMatrix { n, entries: out }
    }

    fn mul_big(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let n = self.n;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let a = &self.entries[i * n + l];
                if a.is_zero() {
                    continue;
                }
                let other = &rhs.entries[l * n..(l + 1) * n];
                let row = &mut out[i * n..(i + 1) * n];
                row.iter_mut().zip(other).for_each(|(o, b)| *o += b * a);
            }
        }
        ExactMatrix { n, entries: out }
    }
}

/// `Some(v)` when every nonzero off-diagonal entry of the row equals
/// `v = ±1` and more than half of them are nonzero.
fn dense_off_diagonal(row: &[i64], i: usize) -> Option<i64> {
    let mut v = 0;
    let mut count = 0;
    for (l, &a) in row.iter().enumerate() {
        if l == i || a == 0 {
            continue;
        }
        if (a != 1 && a != -1) || (v != 0 && a != v) {
            return None;
        }
        v = a;
        count += 1;
    }
    (2 * count > row.len()).then_some(v)
}

fn column_sums(m: &ExactMatrix) -> Vec<BigInt> {
    let mut sums = vec![BigInt::zero(); m.n];
    for row in m.entries.chunks(m.n.max(1)) {
        sums.iter_mut().zip(row).for_each(|(s, b)| *s += b);
    }
    sums
}

fn check_dim(m: &ExactMatrix, limit: usize, what: &'static str) -> Result<()> {
    if m.n > limit {
        return Err(Error::too_large(what, m.n, limit as u64));
    }
    Ok(())
}

fn exact_div(num: BigInt, den: &BigInt, what: &'static str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::InternalInexactDivision(what));
    }
    Ok(q)
}

/// Fraction-free elimination to echelon form. Returns the number of
/// pivots, the last pivot, and the parity of row swaps.
fn bareiss(m: &ExactMatrix) -> Result<(usize, BigInt, bool)> {
    let n = m.n;
    let mut a = m.rows();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut odd_swaps = false;
    for c in 0..n {
        // deterministic pivoting: first nonzero entry in the column
        let Some(p) = (rank..n).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            odd_swaps = !odd_swaps;
        }
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..n {
                let num = &pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = exact_div(num, &prev, "fraction-free elimination")?;
            }
        }
        prev = pivot;
        rank += 1;
    }
    Ok((rank, prev, odd_swaps))
}

/// Rank over the rationals.
pub fn rank_exact(m: &ExactMatrix) -> Result<usize> {
    check_dim(m, MAX_ELIMINATION_DIM, "exact rank")?;
    Ok(bareiss(m)?.0)
}

/// `n - rank`
pub fn nullity_exact(m: &ExactMatrix) -> Result<usize> {
    Ok(m.n - rank_exact(m)?)
}

pub fn det_exact(m: &ExactMatrix) -> Result<BigInt> {
    check_dim(m, MAX_ELIMINATION_DIM, "exact determinant")?;
    if m.n == 0 {
        return Ok(BigInt::one());
    }
    let (rank, last_pivot, odd) = bareiss(m)?;
    if rank < m.n {
        return Ok(BigInt::zero());
    }
    Ok(if odd { -last_pivot } else { last_pivot })
}

/// `det(x I - M)` by the Faddeev-LeVerrier recurrence.
pub fn charpoly_exact(m: &ExactMatrix) -> Result<IntPolynomial> {
    check_dim(m, MAX_CHARPOLY_DIM, "exact characteristic polynomial")?;
    let n = m.n;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // am = A * M_{k-1}, starting from M_0 = 0
    let mut am = ExactMatrix::zeros(n);
    for k in 1..=n {
        let mk = am.plus_scalar(&coeffs[n - k + 1]);
        am = m.mul(&mk);
        let tr = am.trace();
        coeffs[n - k] = exact_div(-tr, &BigInt::from(k), "Faddeev-LeVerrier trace")?;
    }
    Ok(IntPolynomial::new(coeffs))
}
