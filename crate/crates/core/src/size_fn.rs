//! Size functions f: {0, .., n} -> R>=0 with f(0) = 0.
//!
//! Every function is tabulated on `0..=n_max` in `f64`. Families with
//! rational values also carry an exact table, which the solvers use for
//! exact density comparisons.

use alloc::format;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Exact, Weight};

/// Default relative tolerance for comparisons between `f64` values.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Built-in families and explicit tables.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// f(x) = x.
    Linear,
    /// f(x) = x^alpha, alpha in [1, 2].
    Power(f64),
    /// f(x) = lambda x + (1 - lambda) x^2, lambda in [0, 1).
    ConvexCombo(Ratio<i64>),
    /// f(x) = x^2 / (lambda x + (1 - lambda)), lambda in [0, 1], f(0) = 0.
    Ratio(Ratio<i64>),
    /// f(x) = max{x, (total / (edge / 2)) (x - k) + k}, whose optimum is the
    /// densest subgraph with at most `k` vertices.
    DamKs {
        k: usize,
        total: Weight,
        edge: Weight,
    },
    /// f(x) = slope (x - k) + weight for x > 0, f(0) = 0.
    FrontierAffine {
        k: usize,
        weight: Weight,
        slope: Ratio<i64>,
    },
    /// Explicit values f(0), f(1), ...
    Table(Vec<f64>),
    /// Explicit rational values f(0), f(1), ...
    RationalTable(Vec<Exact>),
}

/// Discrete shape of f on `[0, n_max]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Shape {
    pub convex: bool,
    pub concave: bool,
    pub strictly_concave: bool,
    /// Positions x with f(x + 1) < f(x).
    pub monotone_violations: Vec<usize>,
}

impl Shape {
    pub fn is_monotone(&self) -> bool {
        self.monotone_violations.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct SizeFunction {
    family: Family,
    values: Vec<f64>,
    exact: Option<Vec<Exact>>,
    tol: f64,
    shape: Shape,
}

fn ratio_param(name: &str, x: Ratio<i64>, lo: i64, hi_inclusive: bool) -> Result<Exact> {
    let lo = Ratio::from_integer(lo);
    let one = Ratio::one();
    let ok = x >= lo && if hi_inclusive { x <= one } else { x < one };
    if !ok {
        return Err(Error::InvalidParameter(format!(
            "{name} = {x} out of range"
        )));
    }
    Ok(widen(x))
}

fn widen(x: Ratio<i64>) -> Exact {
    Exact::new(i128::from(*x.numer()), i128::from(*x.denom()))
}

pub(crate) fn exact_to_f64(x: &Exact) -> f64 {
    x.to_f64()
        .unwrap_or_else(|| *x.numer() as f64 / *x.denom() as f64)
}

impl SizeFunction {
    /// Tabulates `family` on `0..=n_max`.
    pub fn new(family: Family, n_max: usize) -> Result<Self> {
        let xs = 0..=n_max;
        let (values, exact): (Vec<f64>, Option<Vec<Exact>>) = match &family {
            Family::Linear => {
                let e: Vec<Exact> = xs.map(|x| Exact::from_integer(x as i128)).collect();
                (e.iter().map(exact_to_f64).collect(), Some(e))
            }
            Family::Power(alpha) => {
                if !(1.0..=2.0).contains(alpha) {
                    return Err(Error::InvalidParameter(format!(
                        "alpha = {alpha} outside [1, 2]"
                    )));
                }
                if *alpha == 1.0 || *alpha == 2.0 {
                    let p = *alpha as u32;
                    let e: Vec<Exact> = xs
                        .map(|x| Exact::from_integer((x as i128).pow(p)))
                        .collect();
                    (e.iter().map(exact_to_f64).collect(), Some(e))
                } else {
                    (xs.map(|x| libm::pow(x as f64, *alpha)).collect(), None)
                }
            }
            Family::ConvexCombo(lambda) => {
                let l = ratio_param("lambda", *lambda, 0, false)?;
                let e: Vec<Exact> = xs
                    .map(|x| {
                        let x = Exact::from_integer(x as i128);
                        l * x + (Exact::one() - l) * x * x
                    })
                    .collect();
                (e.iter().map(exact_to_f64).collect(), Some(e))
            }
            Family::Ratio(lambda) => {
                let l = ratio_param("lambda", *lambda, 0, true)?;
                let e: Vec<Exact> = xs
                    .map(|x| {
                        if x == 0 {
                            return Exact::zero();
                        }
                        let x = Exact::from_integer(x as i128);
                        x * x / (l * x + (Exact::one() - l))
                    })
                    .collect();
                (e.iter().map(exact_to_f64).collect(), Some(e))
            }
            Family::DamKs { k, total, edge } => {
                if *k < 2 || *k > n_max {
                    return Err(Error::InvalidParameter(format!(
                        "damks k = {k} outside [2, {n_max}]"
                    )));
                }
                if !edge.is_positive() || total < edge {
                    return Err(Error::InvalidParameter(
                        "damks needs 0 < edge weight <= total weight".into(),
                    ));
                }
                let slope = widen(*total) * Exact::from_integer(2) / widen(*edge);
                let k = Exact::from_integer(*k as i128);
                let e: Vec<Exact> = xs
                    .map(|x| {
                        let x = Exact::from_integer(x as i128);
                        core::cmp::max(x, slope * (x - k) + k)
                    })
                    .collect();
                (e.iter().map(exact_to_f64).collect(), Some(e))
            }
            Family::FrontierAffine { k, weight, slope } => {
                if !slope.is_positive() {
                    return Err(Error::InvalidParameter(format!(
                        "frontier slope = {slope} must be positive"
                    )));
                }
                let (kk, w, s) = (
                    Exact::from_integer(*k as i128),
                    widen(*weight),
                    widen(*slope),
                );
                let e: Vec<Exact> = xs
                    .map(|x| {
                        if x == 0 {
                            Exact::zero()
                        } else {
                            s * (Exact::from_integer(x as i128) - kk) + w
                        }
                    })
                    .collect();
                (e.iter().map(exact_to_f64).collect(), Some(e))
            }
            Family::Table(t) => {
                if t.len() <= n_max {
                    return Err(Error::TableTooShort {
                        have: t.len().saturating_sub(1),
                        need: n_max,
                    });
                }
                if t[0] != 0.0 {
                    return Err(Error::NonZeroAtOrigin);
                }
                if t.iter().any(|v| !v.is_finite()) {
                    return Err(Error::InvalidParameter("non-finite table value".into()));
                }
                (t[..=n_max].to_vec(), None)
            }
            Family::RationalTable(t) => {
                if t.len() <= n_max {
                    return Err(Error::TableTooShort {
                        have: t.len().saturating_sub(1),
                        need: n_max,
                    });
                }
                if !t[0].is_zero() {
                    return Err(Error::NonZeroAtOrigin);
                }
                let e = t[..=n_max].to_vec();
                (e.iter().map(exact_to_f64).collect(), Some(e))
            }
        };
        let mut f = SizeFunction {
            family,
            values,
            exact,
            tol: DEFAULT_TOL,
            shape: Shape::default(),
        };
        f.shape = f.classify(n_max);
        Ok(f)
    }

    /// Tabulates an arbitrary closure as an explicit `f64` table.
    pub fn from_fn(n_max: usize, f: impl Fn(usize) -> f64) -> Result<Self> {
        SizeFunction::new(Family::Table((0..=n_max).map(f).collect()), n_max)
    }

    /// f(x) = sqrt(x).
    pub fn sqrt(n_max: usize) -> Self {
        Self::from_fn(n_max, |x| libm::sqrt(x as f64)).expect("valid table")
    }

    /// f(x) = ln(1 + x).
    pub fn log1p(n_max: usize) -> Self {
        Self::from_fn(n_max, |x| libm::log1p(x as f64)).expect("valid table")
    }

    /// f(x) = min{x, cap}.
    pub fn plateau(n_max: usize, cap: usize) -> Self {
        let t = (0..=n_max)
            .map(|x| Exact::from_integer(x.min(cap) as i128))
            .collect();
        SizeFunction::new(Family::RationalTable(t), n_max).expect("valid table")
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self.shape = self.classify(self.n_max());
        self
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn value(&self, x: usize) -> f64 {
        self.values[x]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn exact(&self, x: usize) -> Option<Exact> {
        self.exact.as_ref().map(|e| e[x])
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    fn second_difference_sign(&self, x: usize) -> core::cmp::Ordering {
        use core::cmp::Ordering;
        if let Some(e) = &self.exact {
            let d = e[x] - e[x + 1] * Exact::from_integer(2) + e[x + 2];
            return d.cmp(&Exact::zero());
        }
        let v = &self.values;
        let d = v[x] - 2.0 * v[x + 1] + v[x + 2];
        let scale = self.tol * v[x + 2].abs().max(1.0);
        if d > scale {
            Ordering::Greater
        } else if d < -scale {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }

    fn decreases_at(&self, x: usize) -> bool {
        match &self.exact {
            Some(e) => e[x + 1] < e[x],
            None => {
                let v = &self.values;
                v[x + 1] < v[x] - self.tol * v[x].abs().max(1.0)
            }
        }
    }

    /// Shape flags on `[0, n]`, with `n <= n_max`. Never fails.
    pub fn classify(&self, n: usize) -> Shape {
        use core::cmp::Ordering;
        let n = n.min(self.n_max());
        let mut shape = Shape {
            convex: true,
            concave: true,
            strictly_concave: true,
            monotone_violations: Vec::new(),
        };
        for x in 0..n.saturating_sub(1) {
            match self.second_difference_sign(x) {
                Ordering::Greater => {
                    shape.concave = false;
                    shape.strictly_concave = false;
                }
                Ordering::Less => shape.convex = false,
                Ordering::Equal => shape.strictly_concave = false,
            }
        }
        shape.monotone_violations = (0..n).filter(|&x| self.decreases_at(x)).collect();
        shape
    }

    /// First x in `0..=n-2` where the second difference is positive.
    pub(crate) fn concavity_violation(&self, n: usize) -> Option<usize> {
        (0..n.saturating_sub(1))
            .find(|&x| self.second_difference_sign(x) == core::cmp::Ordering::Greater)
    }

    pub(crate) fn convexity_violation(&self, n: usize) -> Option<usize> {
        (0..n.saturating_sub(1))
            .find(|&x| self.second_difference_sign(x) == core::cmp::Ordering::Less)
    }

    /// Checks that f can serve as the denominator of an f-density on a graph
    /// with `n` vertices: the table covers n, f is monotone, and f(2) > 0.
    pub fn check_admissible(&self, n: usize) -> Result<()> {
        if self.n_max() < n {
            return Err(Error::TableTooShort {
                have: self.n_max(),
                need: n,
            });
        }
        if let Some(&x) = self.classify(n).monotone_violations.first() {
            return Err(Error::NotMonotone(x));
        }
        if n >= 2 && self.value(2) <= 0.0 {
            return Err(Error::NotPositive);
        }
        Ok(())
    }
}

/// Network coefficients a_1..a_n of a monotone concave f.
#[derive(Debug, Clone, PartialEq)]
pub struct ACoefficients {
    /// `a[k - 1]` holds a_k.
    pub a: Vec<f64>,
    pub exact: Option<Vec<Exact>>,
}

impl ACoefficients {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// sum_i min{i, s} a_i, which reproduces f(s).
    pub fn reconstruct(&self, s: usize) -> f64 {
        self.a
            .iter()
            .enumerate()
            .map(|(i, a)| (i + 1).min(s) as f64 * a)
            .sum()
    }

    pub fn reconstruct_exact(&self, s: usize) -> Option<Exact> {
        self.exact.as_ref().map(|e| {
            e.iter()
                .enumerate()
                .map(|(i, a)| Exact::from_integer((i + 1).min(s) as i128) * a)
                .fold(Exact::zero(), |acc, t| acc + t)
        })
    }
}

/// a_k = 2f(k) - f(k+1) - f(k-1) for k < n and a_n = f(n) - f(n-1).
pub fn a_coefficients(f: &SizeFunction, n: usize) -> Result<ACoefficients> {
    if n == 0 || f.n_max() < n {
        return Err(Error::TableTooShort {
            have: f.n_max(),
            need: n,
        });
    }
    if let Some(x) = f.concavity_violation(n) {
        return Err(Error::NotConcave(x));
    }
    let v = f.values();
    let a = (1..=n)
        .map(|k| {
            let raw = if k < n {
                2.0 * v[k] - v[k + 1] - v[k - 1]
            } else {
                v[n] - v[n - 1]
            };
            raw.max(0.0)
        })
        .collect();
    let exact = f.exact.as_ref().map(|e| {
        (1..=n)
            .map(|k| {
                if k < n {
                    e[k] * Exact::from_integer(2) - e[k + 1] - e[k - 1]
                } else {
                    e[n] - e[n - 1]
                }
            })
            .collect()
    });
    Ok(ACoefficients { a, exact })
}
