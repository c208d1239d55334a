//! Determinants of `P4` quotient matrices and the positive integer
//! solutions of the resulting equations.
//!
//! Each solver returns its solutions together with a certificate that the
//! list is complete. The certificate comes from a branch-and-bound over boxes
//! `x_i = v` or `x_i >= a`: after substituting points and shifting
//! `x_i = a + y_i`, a polynomial whose coefficients all share one strict
//! sign has no zero with `y >= 0`. A second, independent argument is recorded
//! as a rewriting `sum_k u_k (m_k - c_k) = rhs` with `rhs < 0`, so that some
//! `m_k < c_k` must hold at every solution.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::catalog::path;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::mixext::{quotient_matrix, ExtensionType};

const VARS: [&str; 4] = ["p", "q", "r", "s"];

/// Polynomial in `p, q, r, s` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<[u32; 4], i128>,
}

impl MultiPoly {
    pub fn constant(c: i128) -> Self {
        let mut m = MultiPoly::default();
        m.add_term([0; 4], c);
        m
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        let mut m = MultiPoly::default();
        m.add_term(e, 1);
        m
    }

    /// The four variables `p, q, r, s`.
    pub fn vars() -> [MultiPoly; 4] {
        [0, 1, 2, 3].map(MultiPoly::var)
    }

    fn add_term(&mut self, e: [u32; 4], c: i128) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: [i64; 4]) -> i128 {
        self.terms.iter().map(|(e, &c)| (0..4).fold(c, |acc, i| acc * (x[i] as i128).pow(e[i]))).sum()
    }

    /// Substitutes `x_i = v` for the `Point` entries and `x_i = a + y_i` for the
    /// `From` entries; the result is a polynomial in the `y_i`.
    fn restrict(&self, bx: &[Range; 4]) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (e, &c) in &self.terms {
            // expand prod (a_i + y_i)^{e_i} term by term
            let mut partial: Vec<([u32; 4], i128)> = vec![([0; 4], c)];
            for i in 0..4 {
                let k = e[i];
                if k == 0 {
                    continue;
                }
                let (a, free) = match bx[i] {
                    Range::Point(v) => (v as i128, false),
                    Range::From(a) => (a as i128, true),
                };
                if !free {
                    for t in &mut partial {
                        t.1 *= a.pow(k);
                    }
                    continue;
                }
                let mut next = Vec::with_capacity(partial.len() * (k as usize + 1));
                for (pe, pc) in &partial {
                    let mut binom: i128 = 1;
                    for j in 0..=k {
                        let mut ne = *pe;
                        ne[i] = j;
                        next.push((ne, pc * binom * a.pow(k - j)));
                        binom = binom * (k - j) as i128 / (j + 1) as i128;
                    }
                }
                partial = next;
            }
            for (pe, pc) in partial {
                out.add_term(pe, pc);
            }
        }
        out
    }

    fn definite_sign(&self) -> Option<i8> {
        let constant = self.terms.get(&[0; 4]).copied().unwrap_or(0);
        if constant == 0 {
            return None;
        }
        let s = constant.signum();
        self.terms.values().all(|c| c.signum() == s).then_some(s as i8)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, o: MultiPoly) -> MultiPoly {
        for (e, c) in o.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -*c;
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: MultiPoly) -> MultiPoly {
        self + (-o)
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]], ca * cb);
            }
        }
        out
    }
}

impl Add<i128> for MultiPoly {
    type Output = MultiPoly;
    fn add(self, c: i128) -> MultiPoly {
        self + MultiPoly::constant(c)
    }
}

impl Sub<i128> for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, c: i128) -> MultiPoly {
        self + MultiPoly::constant(-c)
    }
}

impl Mul<MultiPoly> for i128 {
    type Output = MultiPoly;
    fn mul(self, m: MultiPoly) -> MultiPoly {
        MultiPoly::constant(self) * m
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // highest total degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| (std::cmp::Reverse(e.iter().sum::<u32>()), std::cmp::Reverse(**e)));
        for (k, (e, &c)) in terms.into_iter().enumerate() {
            let mono: String = (0..4).flat_map(|i| std::iter::repeat_n(VARS[i], e[i] as usize)).collect();
            let sign = if c < 0 { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            match (c.abs(), mono.is_empty()) {
                (m, true) => write!(f, "{m}")?,
                (1, false) => write!(f, "{mono}")?,
                (m, false) => write!(f, "{m}{mono}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Range {
    Point(i64),
    From(i64),
}

fn describe_box(bx: &[Range; 4], used: [bool; 4]) -> String {
    (0..4)
        .filter(|&i| used[i])
        .map(|i| match bx[i] {
            Range::Point(v) => format!("{}={v}", VARS[i]),
            Range::From(a) => format!("{}>={a}", VARS[i]),
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Proof that a polynomial has exactly the listed zeros on a box `x_i >= lower_i`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ZeroCertificate {
    pub polynomial: String,
    pub domain: String,
    /// Boxes on which the polynomial is strictly positive (`+`) or negative (`-`).
    pub regions: Vec<String>,
    /// Largest value taken by any variable in a point or region corner.
    pub largest_corner: i64,
    pub zeros: Vec<Vec<i64>>,
}

/// Branch-and-bound limit; the formulas here need a few hundred boxes.
const MAX_BOXES: usize = 100_000;

/// Finds all zeros of `f` with `x_i >= lower_i` over the variables marked in
/// `used` (the others are ignored), with a certificate of completeness.
pub fn certify_zeros(f: &MultiPoly, lower: [i64; 4], used: [bool; 4]) -> Result<ZeroCertificate> {
    let mut stack = vec![lower.map(Range::From)];
    for i in 0..4 {
        if !used[i] {
            stack[0][i] = Range::Point(lower[i]);
        }
    }
    let mut regions = Vec::new();
    let mut zeros = Vec::new();
    let mut largest = 0;
    let mut boxes = 0;
    while let Some(bx) = stack.pop() {
        boxes += 1;
        if boxes > MAX_BOXES {
            return Err(Error::OutOfRange { what: "branch-and-bound boxes", value: boxes });
        }
        largest = largest.max(
            bx.iter()
                .map(|r| match *r {
                    Range::Point(v) | Range::From(v) => v,
                })
                .max()
                .unwrap_or(0),
        );
        let g = f.restrict(&bx);
        let split = (0..4)
            .filter_map(|i| match bx[i] {
                Range::From(a) => Some((a, i)),
                Range::Point(_) => None,
            })
            .min();
        let Some((a, i)) = split else {
            let point: Vec<i64> = (0..4)
                .filter(|&i| used[i])
                .map(|i| match bx[i] {
                    Range::Point(v) | Range::From(v) => v,
                })
                .collect();
            if g.is_zero() {
                zeros.push(point);
            } else {
                regions.push(format!("{}: {}", describe_box(&bx, used), if g.eval([0; 4]) > 0 { '+' } else { '-' }));
            }
            continue;
        };
        if let Some(s) = g.definite_sign() {
            regions.push(format!("{}: {}", describe_box(&bx, used), if s > 0 { '+' } else { '-' }));
            continue;
        }
        let mut later = bx;
        later[i] = Range::From(a + 1);
        let mut now = bx;
        now[i] = Range::Point(a);
        stack.push(later);
        stack.push(now);
    }
    zeros.sort();
    let domain =
        (0..4).filter(|&i| used[i]).map(|i| format!("{}>={}", VARS[i], lower[i])).collect::<Vec<_>>().join(",");
    Ok(ZeroCertificate { polynomial: f.to_string(), domain, regions, largest_corner: largest, zeros })
}

/// Sign pattern of an extension type of `P4`: `true` marks a coclique cell.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignPattern {
    pub negative: [bool; 4],
}

impl SignPattern {
    /// The nine patterns with at least one clique cell, up to reversal,
    /// followed by the all-coclique pattern.
    pub fn all() -> Vec<SignPattern> {
        [
            "p,q,r,-s",
            "p,q,-r,-s",
            "p,-q,-r,s",
            "p,-q,r,-s",
            "p,-q,-r,-s",
            "-p,q,r,-s",
            "-p,-q,r,-s",
            "p,q,-r,s",
            "p,q,r,s",
            "-p,-q,-r,-s",
        ]
        .iter()
        .map(|s| s.parse().expect("valid pattern"))
        .collect()
    }

    /// The signed type vector for positive parameters.
    pub fn extension_type(&self, params: [i64; 4]) -> Result<ExtensionType> {
        if let Some(i) = params.iter().position(|&x| x < 1) {
            return Err(Error::InvalidParams {
                name: self.to_string(),
                msg: format!("parameter {} must be positive", VARS[i]),
            });
        }
        ExtensionType::new((0..4).map(|i| if self.negative[i] { -params[i] } else { params[i] }).collect())
    }

    /// `det(Q)` and `det(Q + I)` for the quotient matrix `Q`, as polynomials in `p, q, r, s`.
    pub fn formulas(&self) -> Result<(MultiPoly, MultiPoly)> {
        let [p, q, r, s] = MultiPoly::vars();
        let c = MultiPoly::constant;
        let pqrs = p.clone() * q.clone() * r.clone() * s.clone();
        Ok(match self.to_string().as_str() {
            "p,q,r,-s" | "p,q,-r,-s" => (r.clone() * s * (p.clone() + q.clone() - 1), -(p * q * r)),
            "p,-q,-r,s" => (q.clone() * r.clone() * (p.clone() + s.clone() - 1), p * s * (c(1) - q - r)),
            "p,-q,r,-s" => (pqrs, p * r * (q.clone() * s.clone() - s - 2 * q + 1)),
            "p,-q,-r,-s" => (pqrs, p * (q.clone() * r.clone() * s.clone() - r.clone() * s - q.clone() * r - q + 1)),
            "-p,q,r,-s" => (pqrs, q * r * ((p - 1) * (s - 1) - 1)),
            "-p,-q,r,-s" => (pqrs, r * (p.clone() * q.clone() * s.clone() - p * q.clone() - q - s + 1)),
            "p,q,-r,s" => (
                r * (-(p.clone() * q.clone() * s.clone())
                    + 2 * (q.clone() * s.clone())
                    + p.clone() * q.clone()
                    + p * s.clone()
                    - s
                    - q),
                -pqrs,
            ),
            "p,q,r,s" => (
                -pqrs.clone()
                    + p.clone() * q.clone() * r.clone()
                    + q.clone() * r.clone() * s.clone()
                    + p.clone() * s.clone()
                    + p.clone() * r.clone()
                    + q.clone() * s.clone()
                    - p
                    - q
                    - r
                    - s
                    + 1,
                -pqrs,
            ),
            "-p,-q,-r,-s" => (pqrs.clone(), pqrs - p.clone() * q.clone() - q * r.clone() - r * s + 1),
            other => return Err(Error::UnknownPattern(other.to_string())),
        })
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let body = text.trim();
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
        let fields: Vec<&str> = body.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(Error::UnknownPattern(text.to_string()));
        }
        let mut negative = [false; 4];
        for (i, f) in fields.iter().enumerate() {
            match (f.strip_prefix('-'), *f == VARS[i]) {
                (Some(v), _) if v == VARS[i] => negative[i] = true,
                (None, true) => {}
                _ => return Err(Error::UnknownPattern(text.to_string())),
            }
        }
        Ok(SignPattern { negative })
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            (0..4).map(|i| format!("{}{}", if self.negative[i] { "-" } else { "" }, VARS[i])).collect();
        f.write_str(&parts.join(","))
    }
}

/// `(det Q, det(Q + I))` from the closed-form formulas.
pub fn det_formulas(pattern: &SignPattern, params: [i64; 4]) -> Result<(i128, i128)> {
    pattern.extension_type(params)?;
    let (d0, d1) = pattern.formulas()?;
    Ok((d0.eval(params), d1.eval(params)))
}

/// `(det Q, det(Q + I))` computed from the quotient matrix itself.
pub fn det_direct(pattern: &SignPattern, params: [i64; 4]) -> Result<(i128, i128)> {
    let q = quotient_matrix(&path(4)?, &pattern.extension_type(params)?)?;
    let small = |m: &IntMatrix| -> Result<i128> {
        use num_traits::ToPrimitive;
        m.det().to_i128().ok_or(Error::OutOfRange { what: "determinant", value: usize::MAX })
    };
    Ok((small(&q)?, small(&q.shifted(1))?))
}

/// A term `outer * (inner - c)` of a rewriting.
#[derive(Clone, Debug)]
struct Term {
    outer: MultiPoly,
    inner: MultiPoly,
    c: i128,
}

/// `sum terms = rhs` is equivalent to `f = 0` because `sum terms - rhs = k f`.
struct Rewriting {
    terms: Vec<Term>,
    rhs: MultiPoly,
    k: i128,
}

impl Rewriting {
    fn lhs(&self) -> MultiPoly {
        self.terms.iter().fold(MultiPoly::default(), |acc, t| acc + t.outer.clone() * (t.inner.clone() - t.c))
    }

    fn holds_for(&self, f: &MultiPoly) -> bool {
        (self.lhs() - self.rhs.clone()) == self.k * f.clone()
    }

    /// Each alternative `inner <= c - 1` as text.
    fn alternatives(&self) -> Vec<String> {
        self.terms.iter().map(|t| format!("{} <= {}", t.inner, t.c - 1)).collect()
    }

    fn some_alternative(&self, x: [i64; 4]) -> bool {
        self.terms.iter().any(|t| t.inner.eval(x) < t.c)
    }
}

/// Report of a solver run.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SolveReport {
    pub family: String,
    pub equation: String,
    pub bound: i64,
    /// Solutions, one per reversal class where that symmetry applies.
    pub solutions: Vec<Vec<i64>>,
    pub certificate: ZeroCertificate,
    /// The rewriting `sum u_k (m_k - c_k) = rhs`, checked as a polynomial identity.
    pub rewriting: String,
    pub rewriting_verified: bool,
    /// At every solution some `m_k <= c_k - 1`.
    pub bound_alternatives: Vec<String>,
    pub alternatives_hold: bool,
    /// Exhaustive search over `[lower, bound]` gave exactly the certified zeros in range.
    pub search_agrees: bool,
}

fn brute_force(f: &MultiPoly, lower: [i64; 4], used: [bool; 4], bound: i64) -> Vec<Vec<i64>> {
    let hi = |i: usize| if used[i] { bound } else { lower[i] };
    let mut out = Vec::new();
    for p in lower[0]..=hi(0) {
        for q in lower[1]..=hi(1) {
            for r in lower[2]..=hi(2) {
                for s in lower[3]..=hi(3) {
                    let x = [p, q, r, s];
                    if f.eval(x) == 0 {
                        out.push((0..4).filter(|&i| used[i]).map(|i| x[i]).collect());
                    }
                }
            }
        }
    }
    out
}

fn expand_used(v: &[i64], used: [bool; 4], lower: [i64; 4]) -> [i64; 4] {
    let mut x = lower;
    let mut it = v.iter();
    for i in 0..4 {
        if used[i] {
            x[i] = *it.next().expect("one value per used variable");
        }
    }
    x
}

fn rhs_negative(rhs: &MultiPoly, lower: [i64; 4], used: [bool; 4]) -> Result<bool> {
    let mut bx = lower.map(Range::From);
    for i in 0..4 {
        if !used[i] {
            bx[i] = Range::Point(lower[i]);
        }
    }
    Ok(rhs.restrict(&bx).definite_sign() == Some(-1))
}

#[allow(clippy::too_many_arguments)]
fn solve(
    family: &str,
    f: MultiPoly,
    lower: [i64; 4],
    used: [bool; 4],
    rewriting: Rewriting,
    bound: i64,
    min_bound: i64,
    normalize: impl Fn(Vec<i64>) -> Vec<i64>,
) -> Result<SolveReport> {
    if bound < min_bound {
        return Err(Error::OutOfRange { what: "search bound", value: bound.max(0) as usize });
    }
    let certificate = certify_zeros(&f, lower, used)?;
    let in_range: Vec<Vec<i64>> = certificate.zeros.iter().filter(|z| z.iter().all(|&x| x <= bound)).cloned().collect();
    let search_agrees = brute_force(&f, lower, used, bound) == in_range;
    let rewriting_verified = rewriting.holds_for(&f) && rhs_negative(&rewriting.rhs, lower, used)?;
    let alternatives_hold = certificate.zeros.iter().all(|z| rewriting.some_alternative(expand_used(z, used, lower)));
    let mut solutions: Vec<Vec<i64>> = certificate.zeros.iter().cloned().map(normalize).collect();
    solutions.sort();
    solutions.dedup();
    Ok(SolveReport {
        family: family.to_string(),
        equation: format!("{} = 0", f),
        bound,
        solutions,
        rewriting: format!("{} = {}", rewriting.lhs_text(), rewriting.rhs),
        rewriting_verified,
        bound_alternatives: rewriting.alternatives(),
        alternatives_hold,
        search_agrees,
        certificate,
    })
}

impl Rewriting {
    fn lhs_text(&self) -> String {
        self.terms.iter().map(|t| format!("({})({} - {})", t.outer, t.inner, t.c)).collect::<Vec<_>>().join(" + ")
    }
}

fn term(outer: MultiPoly, inner: MultiPoly, c: i128) -> Term {
    Term { outer, inner, c }
}

fn reversal_min(v: Vec<i64>) -> Vec<i64> {
    let rev: Vec<i64> = v.iter().rev().copied().collect();
    v.min(rev)
}

/// Positive solutions of `pqrs - pq - qr - rs + 1 = 0`: the coclique extensions
/// of `P4` with an eigenvalue `1`, i.e. with exactly two positive eigenvalues.
/// Solutions are reported as the lexicographically smaller of the tuple and its reversal.
pub fn solve_bipartite_p4(bound: i64) -> Result<SolveReport> {
    let [p, q, r, s] = MultiPoly::vars();
    let f = SignPattern::from_str("-p,-q,-r,-s")?.formulas()?.1;
    let rewriting = Rewriting {
        terms: vec![
            term(p.clone() * q.clone(), r.clone() * s.clone(), 3),
            term(q.clone() * r.clone(), p.clone() * s.clone(), 3),
            term(r * s, p * q, 3),
        ],
        rhs: MultiPoly::constant(-3),
        k: 3,
    };
    solve("bipP4", f, [1; 4], [true; 4], rewriting, bound, 6, reversal_min)
}

/// Parameters `(p, q, s)` with `det Q = 0` for the type `(p, q, -r, s)`; the
/// factor `r` never vanishes, so `r` is free.
pub fn solve_p4_one_coclique(bound: i64) -> Result<SolveReport> {
    let [p, q, _, s] = MultiPoly::vars();
    let f =
        q.clone() * s.clone() * (MultiPoly::constant(2) - p.clone()) + p.clone() * q.clone() + p.clone() * s.clone()
            - s.clone()
            - q.clone();
    let rewriting = Rewriting {
        terms: vec![
            term(q.clone() * s.clone(), p.clone(), 6),
            term(p.clone() * q.clone(), s.clone(), 3),
            term(p * s.clone(), q.clone(), 3),
        ],
        rhs: -3 * (q + s),
        k: -3,
    };
    solve("iii", f, [2, 2, 1, 2], [true, true, false, true], rewriting, bound, 8, |v| v)
}

/// Parameters `(p, q, r, s)`, all at least 2, with `det Q = 0` for the clique
/// type `(p, q, r, s)`; one tuple per reversal class, normalized to `p <= s`
/// and `q <= r` when `p = s`.
pub fn solve_p4_cliques(bound: i64) -> Result<SolveReport> {
    let [p, q, r, s] = MultiPoly::vars();
    let f = SignPattern::from_str("p,q,r,s")?.formulas()?.0;
    let rewriting = Rewriting {
        terms: vec![
            term(3 * (p.clone() * q.clone() * r.clone()), s.clone(), 4),
            term(3 * (q.clone() * r.clone() * s.clone()), p.clone(), 4),
            term(2 * (p.clone() * s.clone()), q.clone() * r.clone(), 6),
            term(2 * (p.clone() * r.clone()), q.clone() * s.clone(), 6),
            term(2 * (q.clone() * s.clone()), p.clone() * r.clone(), 6),
        ],
        rhs: -12 * (p + q + r + s - 1),
        k: -12,
    };
    let normalize = |v: Vec<i64>| {
        let (p, q, r, s) = (v[0], v[1], v[2], v[3]);
        if p < s || (p == s && q <= r) {
            v
        } else {
            vec![s, r, q, p]
        }
    };
    solve("iv", f, [2; 4], [true; 4], rewriting, bound, 8, normalize)
}

/// Outcome for one pattern that has no solutions on its domain.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NoSolutionCheck {
    pub pattern: String,
    pub domain: String,
    pub det_q: ZeroCertificate,
    pub det_q_plus_i: ZeroCertificate,
    /// No zero of either determinant with all parameters in `[lower, bound]`.
    pub search_agrees: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NoSolutionReport {
    pub bound: i64,
    pub checks: Vec<NoSolutionCheck>,
    pub all_hold: bool,
}

/// The patterns whose quotient matrix never has eigenvalue `0` or `-1`: three on
/// all positive parameters, and `(-p, -q, r, -s)` once `p, q, s >= 2`.
pub fn verify_no_solution_patterns(bound: i64) -> Result<NoSolutionReport> {
    let cases = [
        ("p,q,r,-s", [1, 1, 1, 1]),
        ("p,q,-r,-s", [1, 1, 1, 1]),
        ("p,-q,-r,s", [1, 1, 1, 1]),
        ("-p,-q,r,-s", [2, 2, 1, 2]),
    ];
    let mut checks = Vec::new();
    for (name, lower) in cases {
        let pattern: SignPattern = name.parse()?;
        let (d0, d1) = pattern.formulas()?;
        let c0 = certify_zeros(&d0, lower, [true; 4])?;
        let c1 = certify_zeros(&d1, lower, [true; 4])?;
        let search_agrees = brute_force(&d0, lower, [true; 4], bound).is_empty()
            && brute_force(&d1, lower, [true; 4], bound).is_empty();
        checks.push(NoSolutionCheck {
            pattern: format!("({name})"),
            domain: c0.domain.clone(),
            det_q: c0,
            det_q_plus_i: c1,
            search_agrees,
        });
    }
    let all_hold =
        checks.iter().all(|c| c.det_q.zeros.is_empty() && c.det_q_plus_i.zeros.is_empty() && c.search_agrees);
    Ok(NoSolutionReport { bound, checks, all_hold })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> SignPattern {
        s.parse().unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(det_formulas(&pat("p,-q,r,-s"), [1, 2, 1, 3]).unwrap().1, 0);
        assert_eq!(det_formulas(&pat("-p,q,r,-s"), [2, 1, 1, 2]).unwrap().1, 0);
        assert_eq!(det_formulas(&pat("p,q,r,s"), [2, 2, 2, 7]).unwrap().0, 0);
        assert!(det_formulas(&pat("p,q,r,s"), [0, 2, 2, 7]).is_err());
        assert!(matches!("p,q,x,s".parse::<SignPattern>(), Err(Error::UnknownPattern(_))));
        // reversal of a listed pattern has no formula of its own
        assert!(matches!(pat("-p,q,r,s").formulas(), Err(Error::UnknownPattern(_))));
    }

    #[test]
    fn formulas_match_matrices() {
        for pattern in SignPattern::all() {
            for x in [[1, 1, 1, 1], [2, 3, 1, 4], [5, 2, 6, 3]] {
                assert_eq!(det_formulas(&pattern, x).unwrap(), det_direct(&pattern, x).unwrap(), "{pattern} {x:?}");
            }
        }
    }

    #[test]
    fn restrict_shifts() {
        let [p, q, _, _] = MultiPoly::vars();
        let f = p.clone() * q.clone() - 3 * p;
        let g = f.restrict(&[Range::From(2), Range::Point(5), Range::Point(1), Range::Point(1)]);
        // (2 + y)(5) - 3(2 + y) = 4 + 2y
        assert_eq!(g.eval([0; 4]), 4);
        assert_eq!(g.eval([1, 0, 0, 0]), 6);
        assert_eq!(g.definite_sign(), Some(1));
    }

    #[test]
    fn small_certificates() {
        let [p, q, _, _] = MultiPoly::vars();
        // (p - 1)(q - 2) - 1 = 0 at (2, 3) only
        let f = (p - 1) * (q - 2) - 1;
        let c = certify_zeros(&f, [1, 1, 1, 1], [true, true, false, false]).unwrap();
        assert_eq!(c.zeros, vec![vec![2, 3]]);
    }

    #[test]
    fn display() {
        let f = pat("-p,-q,-r,-s").formulas().unwrap().1;
        assert_eq!(f.to_string(), "pqrs - pq - qr - rs + 1");
        assert_eq!(pat("(p, -q, r, -s)").to_string(), "p,-q,r,-s");
    }

    #[test]
    fn bipartite_solutions() {
        let r = solve_bipartite_p4(10).unwrap();
        assert_eq!(r.solutions, vec![vec![1, 2, 1, 3], vec![1, 3, 2, 2], vec![2, 1, 1, 2]]);
        assert!(r.rewriting_verified && r.alternatives_hold && r.search_agrees);
    }
}
