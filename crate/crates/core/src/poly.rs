//! Integer polynomials with exact real-root counting.
//!
//! Root counts go through a square-free (Yun) decomposition `p = prod f_i^i`
//! computed once, then a Sturm chain per factor built from signed
//! pseudo-remainders over the integers. Signs at rational points are
//! evaluated exactly on the homogenised polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::sign;

/// Polynomial with integer coefficients in ascending degree. Trailing zero
/// coefficients are trimmed; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `prod (x - r)^k` over the given `(r, k)` pairs.
    pub fn from_roots(roots: &[(i64, usize)]) -> Self {
        let mut p = IntPoly::from_i64(&[1]);
        for &(r, k) in roots {
            for _ in 0..k {
                p = p.mul(&IntPoly::from_i64(&[-r, 1]));
            }
        }
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect())
    }

    /// Evaluates at a small integer (test helper, panics on overflow).
    pub fn eval_i64(&self, x: i64) -> i128 {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * BigInt::from(x) + c)
            .to_i128()
            .expect("value fits in i128")
    }

    /// Exact quotient `self / divisor`; fails if the division leaves a remainder
    /// or needs non-integer coefficients.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let lead = divisor.leading().ok_or(Error::ZeroPolynomial)?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        if self.degree() < divisor.degree() {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(IntPoly::new(quot))
    }

    /// Largest `k` with `(x - r)^k` dividing `self`, by repeated synthetic division.
    /// The zero polynomial reports 0.
    pub fn root_mult_at(&self, r: &BigInt) -> usize {
        let mut p = self.coeffs.clone();
        let mut k = 0;
        while p.len() > 1 {
            // synthetic division by (x - r), highest coefficient first
            let mut q = vec![BigInt::zero(); p.len() - 1];
            let mut carry = BigInt::zero();
            for i in (0..p.len()).rev() {
                carry = carry * r + &p[i];
                if i > 0 {
                    q[i - 1] = carry.clone();
                }
            }
            if !carry.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }

    /// Sign of `self(num/den)` for `den > 0`, evaluated on the homogenised form
    /// `sum c_k num^k den^(d-k)`.
    fn sign_at(&self, x: &BigRational) -> i8 {
        let (num, den) = (x.numer(), x.denom());
        debug_assert!(den.is_positive());
        let mut it = self.coeffs.iter().rev();
        let Some(first) = it.next() else {
            return 0;
        };
        let mut acc = first.clone();
        let mut den_pow = BigInt::one();
        for c in it {
            den_pow *= den;
            acc = acc * num + c * &den_pow;
        }
        sign(&acc)
    }

    /// Sign as `x -> +inf` (`at_pos = true`) or `x -> -inf`.
    fn sign_at_infinity(&self, at_pos: bool) -> i8 {
        let Some(lc) = self.leading() else {
            return 0;
        };
        let s = sign(lc);
        if at_pos || self.degree().is_multiple_of(2) {
            s
        } else {
            -s
        }
    }

    fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the content and makes the leading coefficient positive.
    fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Square-free decomposition: primitive factors `f_i` with multiplicity `i`,
    /// `self = c * prod f_i^i`. Constant factors are omitted.
    pub fn square_free_factors(&self) -> Result<Vec<(IntPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(yun(&QPoly::from_int(self)).into_iter().map(|(f, i)| (f.to_primitive_int(), i)).collect())
    }

    /// Number of real roots, with multiplicity, in `interval`.
    pub fn count_roots_in(&self, interval: &Interval) -> Result<usize> {
        Ok(RootCounter::new(self)?.count(interval))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// One end of an interval on the real line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Bound {
    NegInf,
    PosInf,
    Open(BigRational),
    Closed(BigRational),
}

impl Bound {
    pub fn open(num: i64, den: i64) -> Self {
        Bound::Open(BigRational::new(num.into(), den.into()))
    }

    pub fn closed(num: i64, den: i64) -> Self {
        Bound::Closed(BigRational::new(num.into(), den.into()))
    }

    fn value(&self) -> Option<&BigRational> {
        match self {
            Bound::Open(v) | Bound::Closed(v) => Some(v),
            _ => None,
        }
    }
}

/// Real interval with independently open or closed ends.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn new(lo: Bound, hi: Bound) -> Self {
        Interval { lo, hi }
    }

    /// `(t, +inf)`
    pub fn above(t: BigRational) -> Self {
        Interval::new(Bound::Open(t), Bound::PosInf)
    }

    /// `(-inf, t)`
    pub fn below(t: BigRational) -> Self {
        Interval::new(Bound::NegInf, Bound::Open(t))
    }

    /// `(a, b)` with integer ends.
    pub fn open_int(a: i64, b: i64) -> Self {
        Interval::new(Bound::open(a, 1), Bound::open(b, 1))
    }
}

/// Precomputed square-free factors and Sturm chains of one polynomial, so
/// several interval queries share a single decomposition.
pub struct RootCounter {
    factors: Vec<(SturmChain, usize)>,
}

impl RootCounter {
    pub fn new(p: &IntPoly) -> Result<Self> {
        let factors = p.square_free_factors()?.into_iter().map(|(f, i)| (SturmChain::new(&f), i)).collect();
        Ok(RootCounter { factors })
    }

    pub fn count(&self, interval: &Interval) -> usize {
        self.factors.iter().map(|(chain, mult)| chain.count_distinct(interval) * mult).sum()
    }
}

/// Sturm chain of a square-free integer polynomial of positive degree.
struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    fn new(f: &IntPoly) -> Self {
        let mut polys = vec![f.clone(), f.derivative().primitive()];
        loop {
            let n = polys.len();
            if polys[n - 1].degree() == 0 {
                break;
            }
            let r = signed_prem(&polys[n - 2], &polys[n - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(r.primitive_keep_sign());
        }
        SturmChain { polys }
    }

    fn changes<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations(&self, b: &Bound) -> usize {
        match b {
            Bound::NegInf => Self::changes(self.polys.iter().map(|p| p.sign_at_infinity(false))),
            Bound::PosInf => Self::changes(self.polys.iter().map(|p| p.sign_at_infinity(true))),
            Bound::Open(x) | Bound::Closed(x) => Self::changes(self.polys.iter().map(|p| p.sign_at(x))),
        }
    }

    fn vanishes_at(&self, x: &BigRational) -> bool {
        self.polys[0].sign_at(x) == 0
    }

    /// Distinct roots in the interval. `V(a) - V(b)` counts roots in `(a, b]`;
    /// the ends are then adjusted for open/closed.
    fn count_distinct(&self, iv: &Interval) -> usize {
        if matches!(iv.lo, Bound::PosInf) || matches!(iv.hi, Bound::NegInf) {
            return 0;
        }
        if let (Some(a), Some(b)) = (iv.lo.value(), iv.hi.value()) {
            if a > b {
                return 0;
            }
            if a == b {
                let both_closed = matches!(iv.lo, Bound::Closed(_)) && matches!(iv.hi, Bound::Closed(_));
                return usize::from(both_closed && self.vanishes_at(a));
            }
        }
        let mut count = self.variations(&iv.lo) as i64 - self.variations(&iv.hi) as i64;
        if let Bound::Closed(a) = &iv.lo {
            count += i64::from(self.vanishes_at(a));
        }
        if let Bound::Open(b) = &iv.hi {
            count -= i64::from(self.vanishes_at(b));
        }
        debug_assert!(count >= 0);
        count.max(0) as usize
    }
}

impl IntPoly {
    /// Divides by the positive content, keeping the sign of every coefficient.
    fn primitive_keep_sign(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }
}

/// Negated pseudo-remainder, scaled by a positive constant so that it has the
/// sign of `-(a mod b)` everywhere.
fn signed_prem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree();
    let lb = b.leading().expect("nonzero divisor").clone();
    let mut r = a.coeffs.clone();
    let delta = a.degree() + 1 - db;
    let mut steps = 0;
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1;
        let top = r[k].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, d) in b.coeffs.iter().enumerate() {
            r[k - db + j] -= &top * d;
        }
        debug_assert!(r[k].is_zero());
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        steps += 1;
    }
    // r = lb^steps * a - q b; make the multiplier lb^delta and then positive
    for _ in steps..delta {
        for c in r.iter_mut() {
            *c *= &lb;
        }
    }
    let positive_scale = lb.is_positive() || delta.is_multiple_of(2);
    let r = IntPoly::new(r);
    if positive_scale {
        IntPoly::new(r.coeffs.iter().map(|c| -c).collect())
    } else {
        r
    }
}

/// Dense polynomial over the rationals, used for the square-free decomposition.
#[derive(Clone, PartialEq, Debug)]
struct QPoly(Vec<BigRational>);

impl QPoly {
    fn from_int(p: &IntPoly) -> Self {
        QPoly(p.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn monic(self) -> Self {
        match self.0.last().cloned() {
            Some(lc) => QPoly(self.0.into_iter().map(|c| c / &lc).collect()),
            None => self,
        }
    }

    fn derivative(&self) -> Self {
        QPoly(self.0.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(BigInt::from(k))).collect())
            .trim()
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        QPoly((0..n).map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z)).collect()).trim()
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree();
        let lc = d.0.last().expect("nonzero divisor");
        let mut rem = self.0.clone();
        if rem.len() < d.0.len() {
            return (QPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / lc;
            for (j, c) in d.0.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (QPoly(quot).trim(), QPoly(rem).trim())
    }

    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn to_primitive_int(&self) -> IntPoly {
        let lcm = self.0.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPoly::new(self.0.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect())
            .primitive()
    }
}

/// Yun's algorithm over the rationals; returns the non-constant factors.
fn yun(f: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    let f = f.clone().monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        let nb = b.div_rem(&a).0;
        let nc = d.div_rem(&a).0;
        if a.degree() > 0 {
            out.push((a, i));
        }
        b = nb;
        d = nc.sub(&b.derivative());
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn all_reals() -> Interval {
        Interval::new(Bound::NegInf, Bound::PosInf)
    }

    #[test]
    fn multiplicities() {
        let k3 = p(&[-2, -3, 0, 1]);
        assert_eq!(k3.root_mult_at(&BigInt::from(-1)), 2);
        assert_eq!(k3.root_mult_at(&BigInt::from(2)), 1);
        assert_eq!(p(&[1, 0, -3, 0, 1]).root_mult_at(&BigInt::zero()), 0);
        assert_eq!(p(&[0, 0, 1]).root_mult_at(&BigInt::zero()), 2);
    }

    #[test]
    fn interval_counts() {
        let x2m2 = p(&[-2, 0, 1]);
        assert_eq!(x2m2.count_roots_in(&Interval::new(Bound::open(-1, 1), Bound::closed(0, 1))).unwrap(), 0);
        assert_eq!(x2m2.count_roots_in(&Interval::new(Bound::open(1, 1), Bound::closed(2, 1))).unwrap(), 1);
        let f = IntPoly::from_roots(&[(-2, 2), (1, 1)]);
        assert_eq!(f.count_roots_in(&Interval::new(Bound::NegInf, Bound::open(-1, 1))).unwrap(), 2);
        assert_eq!(f.count_roots_in(&all_reals()).unwrap(), 3);
    }

    #[test]
    fn endpoint_handling() {
        let f = IntPoly::from_roots(&[(0, 1), (1, 3), (3, 1)]);
        let c = |lo, hi| f.count_roots_in(&Interval::new(lo, hi)).unwrap();
        assert_eq!(c(Bound::closed(0, 1), Bound::closed(1, 1)), 4);
        assert_eq!(c(Bound::open(0, 1), Bound::closed(1, 1)), 3);
        assert_eq!(c(Bound::open(0, 1), Bound::open(1, 1)), 0);
        assert_eq!(c(Bound::closed(1, 1), Bound::closed(1, 1)), 3);
        assert_eq!(c(Bound::open(1, 1), Bound::closed(1, 1)), 0);
        assert_eq!(c(Bound::closed(2, 1), Bound::closed(1, 1)), 0);
        assert_eq!(c(Bound::open(1, 2), Bound::PosInf), 4);
        assert_eq!(c(Bound::NegInf, Bound::closed(0, 1)), 1);
    }

    #[test]
    fn rational_endpoints() {
        // roots 1/2 and -2/3 of (2x - 1)(3x + 2)
        let f = p(&[-2, 1, 6]);
        assert_eq!(f.count_roots_in(&Interval::new(Bound::closed(1, 2), Bound::PosInf)).unwrap(), 1);
        assert_eq!(f.count_roots_in(&Interval::new(Bound::open(1, 2), Bound::PosInf)).unwrap(), 0);
        assert_eq!(f.count_roots_in(&Interval::new(Bound::NegInf, Bound::closed(-2, 3))).unwrap(), 1);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert_eq!(IntPoly::new(vec![]).count_roots_in(&all_reals()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn square_free() {
        let f = IntPoly::from_roots(&[(2, 1), (-1, 2), (0, 3)]);
        let mut fs = f.square_free_factors().unwrap();
        fs.sort_by_key(|(_, i)| *i);
        assert_eq!(fs, vec![(p(&[-2, 1]), 1), (p(&[1, 1]), 2), (p(&[0, 1]), 3)]);
        // irreducible repeated factor (x^2 - 2)^2 (x - 1)
        let g = p(&[-2, 0, 1]).mul(&p(&[-2, 0, 1])).mul(&p(&[-1, 1]));
        let fs = g.square_free_factors().unwrap();
        assert!(fs.contains(&(p(&[-2, 0, 1]), 2)));
        assert_eq!(g.count_roots_in(&all_reals()).unwrap(), 5);
    }

    #[test]
    fn exact_division() {
        let f = IntPoly::from_roots(&[(0, 2), (-1, 1), (3, 1)]);
        let q = f.div_exact(&p(&[0, 1])).unwrap();
        assert_eq!(q.root_mult_at(&BigInt::zero()), 1);
        assert_eq!(f.div_exact(&p(&[5, 1])), Err(Error::InexactDivision));
        assert_eq!(f.div_exact(&IntPoly::new(vec![])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-2, -3, 0, 1]).to_string(), "x^3 - 3x - 2");
        assert_eq!(p(&[1, 0, -3, 0, 1]).to_string(), "x^4 - 3x^2 + 1");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn sturm_with_negative_leading_terms() {
        // -(x-1)(x-2)(x+3) has negative leading coefficient
        let f = IntPoly::from_roots(&[(1, 1), (2, 1), (-3, 1)]);
        let neg = IntPoly::new(f.coeffs().iter().map(|c| -c).collect());
        assert_eq!(neg.count_roots_in(&Interval::open_int(0, 3)).unwrap(), 2);
        assert_eq!(neg.count_roots_in(&Interval::new(Bound::NegInf, Bound::PosInf)).unwrap(), 3);
    }
}
