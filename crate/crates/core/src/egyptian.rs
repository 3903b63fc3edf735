//! Enumeration of affine weighted stars.
//!
//! A star with `m` arms is affine with `p = m - k` exactly when its
//! denominators `N_i = r_i + 1` solve `sum 1/N_i = p` with
//! `2 <= N_1 <= ... <= N_m`. The search fixes denominators left to right and
//! keeps the remaining target as an exact rational. With residual `rho` and
//! `t` terms still to choose, the next denominator lies in
//! `[ceil(1/rho), floor(t/rho)]`: it cannot exceed `rho` on its own, and the
//! `t` remaining terms (each at most `1/N_j`) must reach `rho`. Together with
//! monotonicity this bounds every level, so the search is finite.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::exact::{BigInt, BigRat};
use crate::star::{verify_kernel, AffineSolution, StarShape};
use crate::{Error, Result};

/// What to enumerate and how much of it to return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumQuery {
    /// Number of arms (unit fractions), at least 2.
    pub m: usize,
    /// Target integer, at least 1.
    pub p: u64,
    /// Drop solutions with dimension above this from the returned list.
    /// They still count towards the total.
    pub d_max: Option<u64>,
    /// Return at most this many solutions (after sorting and `d_max`).
    pub limit: Option<usize>,
    /// Only count; return no solutions.
    pub count_only: bool,
}

impl EnumQuery {
    pub fn new(m: usize, p: u64) -> Self {
        EnumQuery { m, p, d_max: None, limit: None, count_only: false }
    }

    pub fn with_d_max(mut self, d_max: u64) -> Self {
        self.d_max = Some(d_max);
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn counting(mut self) -> Self {
        self.count_only = true;
        self
    }

    /// Each term is at most 1/2, so solutions need `2p <= m`.
    pub fn is_feasible(&self) -> bool {
        2 * self.p <= self.m as u64
    }

    fn validate(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::InvalidArgument(format!("m must be at least 2, got {}", self.m)));
        }
        if self.p == 0 {
            return Err(Error::InvalidArgument("p must be at least 1".into()));
        }
        Ok(())
    }
}

/// Output of [`enumerate_affine`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Sorted by dimension, then `s`, then arms; filtered and capped.
    pub solutions: Vec<AffineSolution>,
    /// Number of solutions before `d_max` and `limit` were applied.
    pub total: u64,
    /// Set when the query could not have any solutions.
    pub diagnostic: Option<String>,
}

/// Partial choice of denominators during the search.
#[derive(Debug, Clone)]
struct SearchFrame {
    chosen: Vec<BigInt>,
    residual: BigRat,
    remaining: usize,
}

impl SearchFrame {
    fn root(m: usize, p: u64) -> Self {
        SearchFrame { chosen: Vec::with_capacity(m), residual: BigRat::from_integer(p.into()), remaining: m }
    }

    fn floor(&self) -> BigInt {
        self.chosen.last().cloned().unwrap_or_else(|| BigInt::from(2))
    }

    fn push(&mut self, n: &BigInt) -> BigRat {
        let previous = self.residual.clone();
        self.residual = &self.residual - BigRat::new(BigInt::one(), n.clone());
        self.chosen.push(n.clone());
        self.remaining -= 1;
        previous
    }

    fn pop(&mut self, previous: BigRat) {
        self.chosen.pop();
        self.residual = previous;
        self.remaining += 1;
    }
}

/// Admissible range `[lo, hi]` for the next denominator; `lo > hi` means
/// the branch is dead.
pub fn denominator_bounds(rho: &BigRat, t: usize, n_prev: &BigInt) -> Result<(BigInt, BigInt)> {
    if !rho.is_positive() {
        return Err(Error::InvalidArgument(format!("residual must be positive, got {rho}")));
    }
    if t == 0 {
        return Err(Error::InvalidArgument("at least one term must remain".into()));
    }
    let inverse = rho.recip();
    let lo = inverse.ceil().to_integer().max(n_prev.clone()).max(BigInt::from(2));
    let hi = (inverse * BigInt::from(t)).floor().to_integer();
    Ok((lo, hi))
}

fn descend(frame: &mut SearchFrame, emit: &mut dyn FnMut(&[BigInt])) {
    let (mut n, hi) = denominator_bounds(&frame.residual, frame.remaining, &frame.floor())
        .expect("search only descends with a positive residual");
    while n <= hi {
        let previous = frame.push(&n);
        if frame.remaining == 0 {
            if frame.residual.is_zero() {
                emit(&frame.chosen);
            }
        } else if frame.residual.is_positive() {
            descend(frame, emit);
        }
        frame.pop(previous);
        n += 1u32;
    }
}

/// Runs the search with the first level fanned out across threads. Subtrees
/// are disjoint, and each emits in increasing lexicographic order.
fn search<T, F>(m: usize, p: u64, per_subtree: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut SearchFrame) -> T + Sync,
{
    let root = SearchFrame::root(m, p);
    let (lo, hi) = denominator_bounds(&root.residual, root.remaining, &root.floor()).expect("p >= 1");
    let mut firsts = Vec::new();
    let mut n = lo;
    while n <= hi {
        firsts.push(n.clone());
        n += 1u32;
    }
    firsts
        .par_iter()
        .map(|n| {
            let mut frame = root.clone();
            frame.push(n);
            per_subtree(&mut frame)
        })
        .collect()
}

fn visit_subtree(frame: &mut SearchFrame, emit: &mut dyn FnMut(&[BigInt])) {
    if frame.remaining == 0 {
        if frame.residual.is_zero() {
            emit(&frame.chosen);
        }
    } else if frame.residual.is_positive() {
        descend(frame, emit);
    }
}

/// All sorted denominator tuples, single-threaded, in lexicographic order.
pub fn denominator_tuples(m: usize, p: u64) -> Result<Vec<Vec<BigInt>>> {
    EnumQuery::new(m, p).validate()?;
    let mut out = Vec::new();
    let mut frame = SearchFrame::root(m, p);
    descend(&mut frame, &mut |ns| out.push(ns.to_vec()));
    Ok(out)
}

fn to_solution(m: usize, p: u64, denominators: &[BigInt]) -> Result<AffineSolution> {
    let arms = denominators
        .iter()
        .map(|n| (n - 1u32).to_u64().ok_or_else(|| Error::ArmOverflow(n.clone())))
        .collect::<Result<Vec<u64>>>()?;
    let shape = StarShape::new(m as u64 - p, arms)?;
    let solution = AffineSolution::from_shape(shape)?;
    assert!(
        verify_kernel(solution.shape(), &solution.labels())?,
        "enumerated {solution} failed the kernel check"
    );
    Ok(solution)
}

/// Every affine star with `m` arms and `p = m - k`, in table order.
pub fn enumerate_affine(q: &EnumQuery) -> Result<Enumeration> {
    q.validate()?;
    if !q.is_feasible() {
        return Ok(Enumeration { solutions: Vec::new(), total: 0, diagnostic: Some(infeasible(q)) });
    }
    if q.count_only {
        return Ok(Enumeration { solutions: Vec::new(), total: count_affine(q.m, q.p)?, diagnostic: None });
    }
    let tuples: Vec<Vec<Vec<BigInt>>> = search(q.m, q.p, |frame| {
        let mut out = Vec::new();
        visit_subtree(frame, &mut |ns| out.push(ns.to_vec()));
        out
    });
    let mut solutions = tuples
        .into_iter()
        .flatten()
        .map(|ns| to_solution(q.m, q.p, &ns))
        .collect::<Result<Vec<_>>>()?;
    let total = solutions.len() as u64;
    solutions.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    if let Some(d_max) = q.d_max {
        let cap = BigInt::from(d_max);
        solutions.retain(|s| s.dimension() <= &cap);
    }
    if let Some(limit) = q.limit {
        solutions.truncate(limit);
    }
    Ok(Enumeration { solutions, total, diagnostic: None })
}

/// Number of unordered solutions of `sum_{i=1}^m 1/N_i = p`, without
/// building them.
pub fn count_affine(m: usize, p: u64) -> Result<u64> {
    let q = EnumQuery::new(m, p);
    q.validate()?;
    if !q.is_feasible() {
        return Ok(0);
    }
    let counts = search(m, p, |frame| {
        let mut count = 0u64;
        visit_subtree(frame, &mut |_| count += 1);
        count
    });
    Ok(counts.into_iter().sum())
}

fn infeasible(q: &EnumQuery) -> String {
    let (half, rem) = q.m.div_rem(&2);
    let bound = if rem == 0 { half.to_string() } else { format!("{half}.5") };
    format!("p = {} exceeds m/2 = {bound}; every term is at most 1/2, so there are no solutions", q.p)
}
