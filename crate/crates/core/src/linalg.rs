//! Exact integer matrices: Bareiss elimination (rank, determinant) and the
//! Faddeev–LeVerrier characteristic polynomial.
//!
//! Every routine first runs on checked `i128` and reruns on `BigInt` when an
//! intermediate value overflows, so results are always exact.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;

/// Ring operations that may refuse (overflow) instead of wrapping.
trait Exact: Clone + PartialEq {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    /// Division known to be exact.
    fn div_exact(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Exact for i128 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        debug_assert_eq!(self % o, 0);
        self.checked_div(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Exact for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        debug_assert!(Zero::is_zero(&(self % o)));
        Some(self / o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NonSquare { rows: n, cols: r.len() });
        }
        Ok(IntMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square input");
        IntMatrix { n, entries: rows.iter().flatten().map(|&v| BigInt::from(v)).collect() }
    }

    /// Adjacency matrix plus `shift` times the identity.
    pub fn adjacency(g: &Graph, shift: i64) -> Self {
        let n = g.order();
        let rows: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| if i == j { shift } else { g.has_edge(i, j) as i64 }).collect()).collect();
        Self::from_rows_i64(&rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).to_i64()).collect()).collect()
    }

    /// `self + k I`.
    pub fn shifted(&self, k: i64) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m.entries[i * self.n + i] += k;
        }
        m
    }

    fn rows_as<T: Exact>(&self) -> Option<Vec<Vec<T>>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).to_i64().map(T::from_i64)).collect()).collect()
    }

    fn big_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect()).collect()
    }

    pub fn rank(&self) -> usize {
        rank_exact(self)
    }

    pub fn det(&self) -> BigInt {
        if let Some(d) = self.rows_as::<i128>().and_then(bareiss_det) {
            return BigInt::from(d);
        }
        bareiss_det(self.big_rows()).expect("bigint arithmetic cannot overflow")
    }
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank_exact(m: &IntMatrix) -> usize {
    if let Some(r) = m.rows_as::<i128>().and_then(bareiss_rank) {
        return r;
    }
    bareiss_rank(m.big_rows()).expect("bigint arithmetic cannot overflow")
}

/// Rank of `A(g) + shift I`, without going through `BigInt` when it fits.
pub fn adjacency_rank(g: &Graph, shift: i64) -> usize {
    let n = g.order();
    let rows: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { shift as i128 } else { g.has_edge(i, j) as i128 }).collect())
        .collect();
    match bareiss_rank(rows) {
        Some(r) => r,
        None => rank_exact(&IntMatrix::adjacency(g, shift)),
    }
}

/// `det(xI - M)`, monic of degree `n`.
pub fn char_poly(m: &IntMatrix) -> IntPoly {
    let coeffs = match m.rows_as::<i128>().and_then(faddeev_leverrier) {
        Some(c) => c.into_iter().collect(),
        None => faddeev_leverrier(m.big_rows()).expect("bigint arithmetic cannot overflow"),
    };
    IntPoly::new(coeffs)
}

fn bareiss_rank<T: Exact>(mut a: Vec<Vec<T>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = T::from_i64(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = a[r][c].mul(&a[i][j])?.sub(&a[i][c].mul(&a[r][j])?)?;
                a[i][j] = v.div_exact(&prev)?;
            }
            a[i][c] = T::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    Some(r)
}

fn bareiss_det<T: Exact>(mut a: Vec<Vec<T>>) -> Option<T> {
    let n = a.len();
    if n == 0 {
        return Some(T::from_i64(1));
    }
    let mut prev = T::from_i64(1);
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Some(T::zero());
        };
        if p != k {
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k].mul(&a[i][j])?.sub(&a[i][k].mul(&a[k][j])?)?;
                a[i][j] = v.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        Some(d)
    }
}

/// Coefficients of `det(xI - A)` in ascending degree.
///
/// `M_1 = I`, `c_{n-k} = -tr(A M_k) / k`, `M_{k+1} = A M_k + c_{n-k} I`.
fn faddeev_leverrier<T: Exact>(a: Vec<Vec<T>>) -> Option<Vec<BigInt>> {
    let n = a.len();
    let mut c: Vec<T> = vec![T::zero(); n + 1];
    c[n] = T::from_i64(1);
    // m holds M_k; starts at the identity
    let mut m: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| T::from_i64((i == j) as i64)).collect()).collect();
    for k in 1..=n {
        let mut am = vec![vec![T::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !m[l][j].is_zero() {
                        am[i][j] = am[i][j].add(&a[i][l].mul(&m[l][j])?)?;
                    }
                }
            }
        }
        let mut tr = T::zero();
        for (i, row) in am.iter().enumerate() {
            tr = tr.add(&row[i])?;
        }
        let ck = tr.neg()?.div_exact(&T::from_i64(k as i64))?;
        c[n - k] = ck.clone();
        for (i, row) in am.iter_mut().enumerate() {
            row[i] = row[i].add(&ck)?;
        }
        m = am;
    }
    Some(c.into_iter().map(Exact::into_big).collect())
}

/// Determinant of a small `i64` matrix as `BigInt`.
pub fn det_i64(rows: &[Vec<i64>]) -> BigInt {
    IntMatrix::from_rows_i64(rows).det()
}

/// Sign helper used by callers that only need the sign of a determinant.
pub fn sign(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}
