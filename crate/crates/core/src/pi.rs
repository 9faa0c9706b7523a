//! Integrals `∫₀¹ xⁿ(1−x)ᵐ(a + bx + cx²)/(1 + x²) dx` evaluated exactly as
//! `r + s·pi + t·ln2`, and an exhaustive search for parameters whose integral
//! reduces to `s·(pi − target)`.
//!
//! Writing the numerator as `Q(x)(1 + x²) + u + vx` gives
//! `∫₀¹ Q + u·pi/4 + v·ln2/2`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{PiForm, Poly, Rational};
use crate::error::{precondition, Result};

/// Selects the integrand `xⁿ(1−x)ᵐ(a + bx + cx²)/(1 + x²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiIntegrandParams {
    pub n: usize,
    pub m: usize,
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl PiIntegrandParams {
    /// Rejects `a = b = c = 0`, whose integrand vanishes identically.
    pub fn new(n: usize, m: usize, a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 && b == 0 && c == 0 {
            return Err(precondition("at least one of a, b, c must be nonzero"));
        }
        Ok(Self { n, m, a, b, c })
    }

    pub fn numerator(&self) -> Poly {
        let quad = Poly::new(
            [self.a, self.b, self.c]
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        );
        &Poly::beta_kernel(self.n, self.m) * &quad
    }
}

impl fmt::Display for PiIntegrandParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {}, {})", self.n, self.m, self.a, self.b, self.c)
    }
}

fn eval_numerator(p: &Poly) -> PiForm {
    let (quot, u, v) = p.divmod_x2_plus_1();
    PiForm::new(
        quot.integrate_unit(),
        u / Rational::from_integer(4.into()),
        v / Rational::from_integer(2.into()),
    )
}

/// Exact value of the integral selected by `params`.
pub fn pi_eval_exact(params: &PiIntegrandParams) -> PiForm {
    eval_numerator(&params.numerator())
}

/// `∫₀¹ x⁴(1−x)⁴/(1+x²) dx = 22/7 − pi`.
pub fn dalzell_check() -> bool {
    let params = PiIntegrandParams::new(4, 4, 1, 0, 0).expect("nonzero triple");
    pi_eval_exact(&params)
        == PiForm::new(
            Rational::new(22.into(), 7.into()),
            Rational::from_integer((-1).into()),
            Rational::zero(),
        )
}

/// Which side of `pi` the target sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Above,
    Below,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Above => "above",
            Side::Below => "below",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub params: PiIntegrandParams,
    pub value: PiForm,
    /// `|s|`.
    pub scale: Rational,
    pub side: Side,
}

/// Builds a hit if `params` integrates to `s·(pi − target)` with `s ≠ 0`.
pub fn verify_hit(params: PiIntegrandParams, target: &Rational) -> Option<SearchHit> {
    let value = pi_eval_exact(&params);
    if value.neglect().as_ref() != Some(target) {
        return None;
    }
    // the integral is positive, so s < 0 exactly when target > pi
    let side = if value.s.is_negative() {
        Side::Above
    } else {
        Side::Below
    };
    Some(SearchHit {
        params,
        scale: value.s.abs(),
        side,
        value,
    })
}

/// Clears denominators of a rational row.
fn integer_row(row: &[Rational; 3]) -> [BigInt; 3] {
    let lcm = row
        .iter()
        .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    row.clone()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
}

fn cross(u: &[BigInt; 3], v: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

fn dot(u: &[BigInt; 3], x: &[u64; 3]) -> BigInt {
    u.iter().zip(x).map(|(a, &b)| a * BigInt::from(b)).sum()
}

/// Every nonzero `x ∈ {0..=max}³` with `rows[0]·x = rows[1]·x = 0`.
fn natural_kernel(rows: &[[Rational; 3]; 2], max: u64) -> Vec<[u64; 3]> {
    let r1 = integer_row(&rows[0]);
    let r2 = integer_row(&rows[1]);
    let normal = cross(&r1, &r2);

    if normal.iter().any(|x| !x.is_zero()) {
        // one-dimensional kernel: multiples of the primitive normal vector
        let g = normal.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let mut dir = normal.map(|x| x / &g);
        if dir.iter().any(Signed::is_negative) {
            dir = dir.map(|x| -x);
        }
        if dir.iter().any(Signed::is_negative) {
            return Vec::new();
        }
        let Some(dir) = dir
            .iter()
            .map(ToPrimitive::to_u64)
            .collect::<Option<Vec<u64>>>()
        else {
            return Vec::new();
        };
        let top = dir.iter().copied().max().unwrap_or(0).max(1);
        return (1..=max / top)
            .map(|lambda| [dir[0] * lambda, dir[1] * lambda, dir[2] * lambda])
            .collect();
    }

    let Some(row) = [&r1, &r2]
        .into_iter()
        .find(|r| r.iter().any(|x| !x.is_zero()))
    else {
        // no constraint at all
        return (0..=max)
            .flat_map(|a| (0..=max).flat_map(move |b| (0..=max).map(move |c| [a, b, c])))
            .filter(|x| x != &[0, 0, 0])
            .collect();
    };

    // rank one: solve the pivot coordinate from the two free ones
    let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
    let (i, j) = match pivot {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let mut out = Vec::new();
    for x in 0..=max {
        for y in 0..=max {
            let rest = -(&row[i] * BigInt::from(x) + &row[j] * BigInt::from(y));
            let (q, r) = rest.div_rem(&row[pivot]);
            if !r.is_zero() || q.is_negative() {
                continue;
            }
            let Some(z) = q.to_u64().filter(|&z| z <= max) else {
                continue;
            };
            let mut sol = [0; 3];
            sol[pivot] = z;
            sol[i] = x;
            sol[j] = y;
            if sol != [0, 0, 0] && dot(&r1, &sol).is_zero() && dot(&r2, &sol).is_zero() {
                out.push(sol);
            }
        }
    }
    out
}

fn search_cell(target: &Rational, n: usize, m: usize, max_nm: usize, max_coeff: u64) -> Vec<SearchHit> {
    let basis = [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|[a, b, c]| {
        pi_eval_exact(&PiIntegrandParams { n, m, a, b, c })
    });
    // t = 0 and r + target·s = 0, both linear in (a, b, c)
    let ln2_row = [0, 1, 2].map(|i| basis[i].t.clone());
    let target_row = [0, 1, 2].map(|i| &basis[i].r + target * &basis[i].s);
    natural_kernel(&[ln2_row, target_row], max_coeff)
        .into_iter()
        .map(|[a, b, c]| PiIntegrandParams { n, m, a, b, c })
        .filter(|p| is_grid_representative(p, max_nm))
        .filter_map(|p| verify_hit(p, target))
        .collect()
}

/// Whether `params` is the representative of its integrand inside the grid.
/// With `a = 0` the integrand equals that of `(n+1, m, b, c, 0)`, which is
/// still in the grid unless `n = max_nm`; the largest `n` wins.
pub fn is_grid_representative(params: &PiIntegrandParams, max_nm: usize) -> bool {
    params.a != 0 || params.n == max_nm
}

/// All distinct integrands with `n, m ≤ max_nm` and `a, b, c ≤ max_coeff`
/// whose value equals `s·(pi − target)` for some `s ≠ 0`, ordered by
/// `(n, m, a, b, c)`. Each integrand is reported once, through the
/// parameters picked by [`is_grid_representative`].
///
/// The constraints are linear in `(a, b, c)`, so each `(n, m)` cell is solved
/// as a small integer kernel problem instead of scanning all coefficient
/// triples. Every hit is re-evaluated exactly before it is returned.
pub fn lucas_search(target: &Rational, max_nm: usize, max_coeff: u64) -> Result<Vec<SearchHit>> {
    if !target.is_positive() {
        return Err(precondition("search target must be positive"));
    }
    if max_coeff == 0 {
        return Err(precondition("max_coeff must be at least 1"));
    }
    let cells: Vec<(usize, usize)> = (0..=max_nm)
        .flat_map(|n| (0..=max_nm).map(move |m| (n, m)))
        .collect();

    #[cfg(feature = "parallel")]
    let mut hits: Vec<SearchHit> = {
        use rayon::prelude::*;
        cells
            .par_iter()
            .flat_map_iter(|&(n, m)| search_cell(target, n, m, max_nm, max_coeff))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let mut hits: Vec<SearchHit> = cells
        .iter()
        .flat_map(|&(n, m)| search_cell(target, n, m, max_nm, max_coeff))
        .collect();

    hits.sort_by_key(|h| h.params);
    Ok(hits)
}

#[cfg(feature = "quadrature")]
pub fn quad_reference(params: &PiIntegrandParams, tol: f64) -> f64 {
    let (n, m) = (params.n as i32, params.m as i32);
    let (a, b, c) = (params.a as f64, params.b as f64, params.c as f64);
    crate::quadrature::adaptive_simpson(
        |x| x.powi(n) * (1.0 - x).powi(m) * (a + b * x + c * x * x) / (1.0 + x * x),
        0.0,
        1.0,
        tol,
    )
}
