//! Closed-form bounds on `sat(n, C≥r)`, evaluated exactly.
//!
//! The piecewise-linear function [`g_value`] is generic over [`Scalar`], so
//! it runs on floats for plotting and on exact rationals for breakpoint
//! identities. Edge counts are integers with explicit floors and ceilings.

use std::fmt::Debug;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, ToPrimitive};
use serde::Serialize;

use crate::{Error, Rational, Result};

/// Number type accepted by the bound evaluators.
pub trait Scalar: Num + Clone + PartialOrd + Debug + ToPrimitive {
    fn from_int(v: i64) -> Self;
    fn floor(&self) -> Self;
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn floor(&self) -> Self {
        f64::floor(*self)
    }
}

impl Scalar for f32 {
    fn from_int(v: i64) -> Self {
        v as f32
    }
    fn floor(&self) -> Self {
        f32::floor(*self)
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Clone + Debug + From<i64>,
    Ratio<I>: ToPrimitive,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(I::from(v))
    }
    fn floor(&self) -> Self {
        Ratio::floor(self)
    }
}

fn int<T: Scalar>(v: i64) -> T {
    T::from_int(v)
}

/// The index `k >= 2` of the piece pair covering `x` in `(1/(2k), 1/(2k-2)]`,
/// or `None` for `x` in `[1/2, 1]`.
pub fn g_piece<T: Scalar>(x: &T) -> Option<i64> {
    let half = T::one() / int(2);
    if *x >= half {
        return None;
    }
    // 1/(2k) < x <= 1/(2k-2)  <=>  k - 1 <= 1/(2x) < k
    let inv = (T::one() / (int::<T>(2) * x.clone())).floor();
    Some(inv.to_i64().expect("x is positive and not tiny") + 1)
}

/// `g(x)` on `0 < x <= 1`.
pub fn g_value<T: Scalar>(x: &T) -> Result<T> {
    if *x <= T::zero() || *x > T::one() {
        return Err(Error::InvalidParameter(format!("g is defined on (0, 1], got {x:?}")));
    }
    let two = int::<T>(2);
    Ok(match g_piece(x) {
        None => T::one() + x.clone() / two,
        Some(k) => {
            let turn = two.clone() / int(4 * k - 3);
            if *x <= turn {
                T::one() + int::<T>(k) * x.clone() / two
            } else {
                two.clone() - int::<T>(3 * k - 3) * x.clone() / two
            }
        }
    })
}

/// Breakpoints of piece pair `k`: `(1/(2k), 2/(4k-3), 1/(2k-2))`.
pub fn g_breakpoints<T: Scalar>(k: i64) -> (T, T, T) {
    (
        T::one() / int(2 * k),
        int::<T>(2) / int(4 * k - 3),
        T::one() / int(2 * k - 2),
    )
}

/// Rising piece `1 + kx/2` and falling piece `2 - (3k-3)x/2`, evaluated
/// without interval checks.
pub fn g_rising<T: Scalar>(k: i64, x: &T) -> T {
    T::one() + int::<T>(k) * x.clone() / int(2)
}

pub fn g_falling<T: Scalar>(k: i64, x: &T) -> T {
    int::<T>(2) - int::<T>(3 * k - 3) * x.clone() / int(2)
}

/// `(x, g(x))` for `x = i / samples`, `i = 1..=samples`.
pub fn g_samples(samples: usize) -> Result<Vec<(Rational, Rational)>> {
    if samples == 0 {
        return Err(Error::InvalidParameter("at least one sample is needed".into()));
    }
    (1..=samples as i64)
        .map(|i| {
            let x = Rational::new(i, samples as i64);
            g_value(&x).map(|y| (x, y))
        })
        .collect()
}

/// `(r - 1)(n - 1) / 2`, the largest size of a graph without cycles of
/// length at least `r`.
pub fn erdos_gallai_bound(n: usize, r: usize) -> Result<Rational> {
    if r < 3 || n < r {
        return Err(Error::InvalidParameter(format!("need n >= r >= 3, got n = {n}, r = {r}")));
    }
    Ok(Rational::new(((r - 1) * (n - 1)) as i64, 2))
}

/// `m <= (r - 1)(n - 1) / 2`, in integers.
pub fn erdos_gallai_holds(n: usize, m: usize, r: usize) -> bool {
    2 * m <= (r - 1) * n.saturating_sub(1)
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Which branch of the chained construction covers `(r, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum MrnCase {
    /// `r <= n <= 2r`: leaves on one base copy.
    Single,
    /// `2(k-1)r - 2(k-2) < n` and `2n < (4k-3)r`: `k - 1` parts with leaves
    /// and triangles.
    Mixed { k: usize },
    /// `(4k-3)r <= 2n` and `n <= 2kr - 2(k-1)`: `k` parts with leaves.
    Leaves { k: usize },
}

pub fn mrn_case(r: usize, n: usize) -> Result<MrnCase> {
    if r < 3 || n < r {
        return Err(Error::InvalidParameter(format!("need n >= r >= 3, got n = {n}, r = {r}")));
    }
    if n <= 2 * r {
        return Ok(MrnCase::Single);
    }
    let mut k = 2;
    loop {
        if 2 * (k - 1) * r - 2 * (k - 2) < n && 2 * n < (4 * k - 3) * r {
            return Ok(MrnCase::Mixed { k });
        }
        if (4 * k - 3) * r <= 2 * n && n <= 2 * k * r - 2 * (k - 1) {
            return Ok(MrnCase::Leaves { k });
        }
        k += 1;
    }
}

/// Edge count of the chained construction on `n` vertices from an `r`-vertex
/// base with `⌈3r/2⌉` edges.
pub fn mrn_edge_count(r: usize, n: usize) -> Result<usize> {
    Ok(match mrn_case(r, n)? {
        MrnCase::Single => n + ceil_div(r, 2),
        MrnCase::Mixed { k } => 2 * n + 3 * (k - 2) - (k - 1) * (3 * r / 2),
        MrnCase::Leaves { k } => n + k * ceil_div(r, 2) + (k - 1),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Saturated graphs for r = 3 are exactly the trees.
    Trees,
    /// `n + ⌊(n-3)/4⌋` for r = 4.
    C4Formula,
    /// `⌈10(n-1)/7⌉` for r = 5.
    C5Formula,
    /// Small-order values 9, 11, 12, 13 for r = 6.
    C6SmallTable,
    /// `⌈3(n-1)/2⌉` for r = 6 and n >= 10.
    C6Formula,
    /// `n + ⌈r/2⌉` for `28 <= n/2 <= r <= n`.
    HalfRangeExact,
    /// `n + r/2` lower bound for `r <= n <= 2r`, r >= 6.
    HalfRangeLower,
    /// A saturated graph is connected.
    Connectivity,
    /// Edge count of the chained construction with an `r`-vertex base.
    Construction,
}

/// Candidate values at a case boundary where two descriptions of the
/// construction disagree on which formula applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryFlag {
    pub k: usize,
    pub as_leaves_case: usize,
    pub as_mixed_case: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SatBound {
    pub n: usize,
    pub r: usize,
    pub lower: usize,
    pub lower_source: Source,
    pub upper: Option<usize>,
    pub upper_source: Option<Source>,
    pub exact: Option<usize>,
    /// `⌈5n/4⌉`, valid only once `n` exceeds an unspecified threshold `n(r)`.
    pub conditional_lower: usize,
    /// `g(r/n) n + 2n/r` for `n >= r >= 56`.
    #[serde(serialize_with = "opt_ratio_str")]
    pub g_upper: Option<Rational>,
    pub boundary: Option<BoundaryFlag>,
    pub notes: Vec<String>,
}

/// Rationals go out as `"p/q"` strings so no precision is lost.
pub fn ratio_str<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

fn opt_ratio_str<S: serde::Serializer>(q: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.collect_str(q),
        None => s.serialize_none(),
    }
}

/// Sharpest known bracket for `sat(n, C≥r)`.
pub fn sat_bounds(n: usize, r: usize) -> Result<SatBound> {
    if r < 3 || n < r {
        return Err(Error::InvalidParameter(format!("need n >= r >= 3, got n = {n}, r = {r}")));
    }
    let exact = |value: usize, source: Source| SatBound {
        n,
        r,
        lower: value,
        lower_source: source,
        upper: Some(value),
        upper_source: Some(source),
        exact: Some(value),
        conditional_lower: ceil_div(5 * n, 4),
        g_upper: None,
        boundary: None,
        notes: Vec::new(),
    };
    let mut out = match (r, n) {
        (3, _) => exact(n - 1, Source::Trees),
        (4, _) => exact(n + (n - 3) / 4, Source::C4Formula),
        (5, _) => exact(ceil_div(10 * (n - 1), 7), Source::C5Formula),
        (6, 6) => exact(9, Source::C6SmallTable),
        (6, 7) => exact(11, Source::C6SmallTable),
        (6, 8) => exact(12, Source::C6SmallTable),
        (6, 9) => exact(13, Source::C6SmallTable),
        (6, _) => exact(ceil_div(3 * (n - 1), 2), Source::C6Formula),
        _ if n >= 56 && n <= 2 * r => exact(n + ceil_div(r, 2), Source::HalfRangeExact),
        _ => {
            let (lower, lower_source) = if n <= 2 * r {
                (n + ceil_div(r, 2), Source::HalfRangeLower)
            } else {
                (n - 1, Source::Connectivity)
            };
            let upper = if r >= 56 { Some(mrn_edge_count(r, n)?) } else { None };
            SatBound {
                n,
                r,
                lower,
                lower_source,
                upper,
                upper_source: upper.map(|_| Source::Construction),
                exact: None,
                conditional_lower: ceil_div(5 * n, 4),
                g_upper: None,
                boundary: None,
                notes: Vec::new(),
            }
        }
    };
    out.notes.push(
        "for n >= n(r): 5n/4 <= sat <= (5/4 + c/r)n with an absolute constant c; c = 8 suffices when r >= 36"
            .into(),
    );
    if r >= 56 {
        let x = Rational::new(r as i64, n as i64);
        out.g_upper = Some(g_value(&x)? * Rational::from_integer(n as i64) + Rational::new(2 * n as i64, r as i64));
    }
    out.boundary = boundary_flag(r, n);
    Ok(out)
}

/// At `n = 2(k-1)r - 2(k-2)` the construction puts `n` in the leaves-only
/// case with `k - 1` parts, while a looser reading puts it in the mixed case
/// with `k` parts. Both values are reported.
pub fn boundary_flag(r: usize, n: usize) -> Option<BoundaryFlag> {
    (2..=n).find_map(|k| {
        let edge = 2 * (k - 1) * r;
        if edge < 2 * (k - 2) || edge - 2 * (k - 2) != n {
            return None;
        }
        let as_leaves_case = if k == 2 {
            n + ceil_div(r, 2)
        } else {
            n + (k - 1) * ceil_div(r, 2) + (k - 2)
        };
        let as_mixed_case = (2 * n + 3 * (k - 2)).checked_sub((k - 1) * (3 * r / 2))?;
        Some(BoundaryFlag {
            k,
            as_leaves_case,
            as_mixed_case,
        })
    })
}

/// Reference values of `sat(n, C_r)` for a single cycle length, where known.
pub fn known_single_cycle_sat(n: usize, r: usize) -> Option<usize> {
    match r {
        3 if n >= 3 => Some(n - 1),
        4 if n >= 5 => Some((3 * n - 5) / 2),
        5 if n >= 21 => Some(ceil_div(10 * (n - 1), 7)),
        _ if r == n && (n == 17 || n >= 19) => Some(ceil_div(3 * n, 2)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn g_known_values() {
        assert_eq!(g_value(&q(1, 1)).unwrap(), q(3, 2));
        assert_eq!(g_value(&q(1, 2)).unwrap(), q(5, 4));
        assert_eq!(g_value(&q(2, 5)).unwrap(), q(7, 5));
        assert_eq!(g_rising(2, &q(2, 5)), q(7, 5));
        assert_eq!(g_falling(2, &q(2, 5)), q(7, 5));
        assert_eq!(g_falling(2, &q(1, 2)), q(5, 4));
    }

    #[test]
    fn g_domain() {
        assert!(g_value(&q(0, 1)).is_err());
        assert!(g_value(&q(11, 10)).is_err());
        assert!(g_value(&-q(1, 3)).is_err());
    }

    #[test]
    fn g_piece_index() {
        assert_eq!(g_piece(&q(1, 2)), None);
        assert_eq!(g_piece(&q(49, 100)), Some(2));
        assert_eq!(g_piece(&q(26, 100)), Some(2));
        // Left endpoints are open: 1/4 belongs to k = 3, 1/6 to k = 4.
        assert_eq!(g_piece(&q(1, 4)), Some(3));
        assert_eq!(g_piece(&q(24, 100)), Some(3));
        assert_eq!(g_piece(&q(1, 6)), Some(4));
    }

    #[test]
    fn g_generic_over_scalars() {
        let exact = g_value(&q(3, 10)).unwrap();
        assert_eq!(exact, q(13, 10));
        let float = g_value(&0.3f64).unwrap();
        assert!((float - 1.3).abs() < 1e-12);
        let big = g_value(&Ratio::new(BigInt::from(3), BigInt::from(10))).unwrap();
        assert_eq!(big, Ratio::new(BigInt::from(*exact.numer()), BigInt::from(*exact.denom())));
        let wide = g_value(&Ratio::<i128>::new(3, 10)).unwrap();
        assert_eq!(wide, Ratio::<i128>::new(*exact.numer() as i128, *exact.denom() as i128));
        assert!((g_value(&0.3f32).unwrap() - float as f32).abs() < 1e-6);
    }

    #[test]
    fn erdos_gallai() {
        assert_eq!(erdos_gallai_bound(10, 5).unwrap(), q(18, 1));
        assert_eq!(erdos_gallai_bound(7, 7).unwrap(), q(36, 2));
        assert!(erdos_gallai_bound(4, 5).is_err());
        assert!(erdos_gallai_holds(10, 18, 5));
        assert!(!erdos_gallai_holds(10, 19, 5));
    }

    #[test]
    fn mrn_counts() {
        assert_eq!(mrn_case(20, 30).unwrap(), MrnCase::Single);
        assert_eq!(mrn_case(20, 40).unwrap(), MrnCase::Single);
        assert_eq!(mrn_case(20, 45).unwrap(), MrnCase::Mixed { k: 2 });
        assert_eq!(mrn_case(20, 50).unwrap(), MrnCase::Leaves { k: 2 });
        assert_eq!(mrn_edge_count(20, 30).unwrap(), 40);
        assert_eq!(mrn_edge_count(20, 45).unwrap(), 60);
        assert_eq!(mrn_edge_count(20, 50).unwrap(), 71);
    }

    #[test]
    fn sat_bound_examples() {
        assert_eq!(sat_bounds(100, 60).unwrap().exact, Some(130));
        assert_eq!(sat_bounds(8, 6).unwrap().exact, Some(12));
        assert_eq!(sat_bounds(9, 4).unwrap().exact, Some(10));
        assert_eq!(sat_bounds(7, 5).unwrap().exact, Some(9));
        let open = sat_bounds(12, 8).unwrap();
        assert_eq!(open.exact, None);
        assert_eq!(open.lower, 16);
        assert!(sat_bounds(5, 6).is_err());
    }

    #[test]
    fn boundary_values_coincide() {
        let f = boundary_flag(20, 78).unwrap();
        assert_eq!(f.k, 3);
        assert_eq!(f.as_leaves_case, f.as_mixed_case);
        assert!(boundary_flag(20, 79).is_none());
    }

    #[test]
    fn single_cycle_table() {
        assert_eq!(known_single_cycle_sat(20, 20), Some(30));
        assert_eq!(known_single_cycle_sat(10, 4), Some(12));
        assert_eq!(known_single_cycle_sat(10, 7), None);
        assert_eq!(known_single_cycle_sat(18, 18), None);
    }
}
