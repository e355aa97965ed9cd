//! The degree hyperplane, rational simplices of seeds, their normal
//! fans, cluster-monomial decomposition of rational points, the linear
//! map carrying dominance cones onto normal-fan faces, and exact
//! disjointness of simplex interiors.
//!
//! All simplices live in the affine hyperplane `<lambda, .> = 1`, where
//! `lambda` is the height vector of the convex-order roots. The
//! reported volume is the normalized quantity `1 / prod_j <lambda,
//! psi_j>`; no Euclidean volume is ever needed.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cluster::{Seed, SeedContext};
use crate::linalg;
use crate::{Error, Rational, Result};

/// Reversed lexicographic comparison: the largest index where the
/// vectors differ decides.
pub fn revlex_compare(a: &[i64], b: &[i64]) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

/// Valuation of a Laurent monomial in the seed's variables: the
/// integer combination `sum_j a_j psi_j`.
pub fn psi_of_monomial(seed: &Seed, exponents: &[i64]) -> Vec<i64> {
    let n = seed.psi.len();
    let mut out = vec![0i64; n];
    for (j, &a) in exponents.iter().enumerate() {
        if a != 0 {
            for (t, &x) in seed.psi[j].iter().enumerate() {
                out[t] += a * x;
            }
        }
    }
    out
}

/// A rational simplex in the degree hyperplane, with its two normal
/// systems and normalized volume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSimplex {
    /// Degree-normalized vertices, one per cluster variable.
    pub vertices: Vec<Vec<Rational>>,
    /// `N_j` with `<psi_i, N_j> = delta_ij`; integral because the psi
    /// matrix is unimodular.
    pub normals_cap: Vec<Vec<i64>>,
    /// `n_j`, the projections of `N_j` along `lambda`.
    pub normals: Vec<Vec<Rational>>,
    /// `1 / prod_j <lambda, psi_j>`.
    pub volume: Rational,
}

fn lambda_projection(ctx: &SeedContext, ncap: &[i64]) -> Vec<Rational> {
    let norm2 = linalg::rational_from_i64(ctx.lambda_norm2());
    let pairing = linalg::rational_from_i64(linalg::dot_ii(&ctx.lambda, ncap));
    (0..ctx.len())
        .map(|t| {
            linalg::rational_from_i64(ncap[t])
                - &pairing * linalg::rational_from_i64(ctx.lambda[t]) / &norm2
        })
        .collect()
}

/// The simplex of the whole algebra: vertices `e_k / ht(beta_k)`,
/// volume `1 / prod_k ht(beta_k)`.
pub fn delta_total(ctx: &SeedContext) -> RationalSimplex {
    let n = ctx.len();
    let mut vertices = Vec::with_capacity(n);
    let mut normals_cap = Vec::with_capacity(n);
    let mut normals = Vec::with_capacity(n);
    let mut denom = BigInt::one();
    for k in 0..n {
        let mut v = vec![Rational::zero(); n];
        v[k] = Rational::new(BigInt::one(), BigInt::from(ctx.lambda[k]));
        vertices.push(v);
        let mut e = vec![0i64; n];
        e[k] = 1;
        normals.push(lambda_projection(ctx, &e));
        normals_cap.push(e);
        denom *= BigInt::from(ctx.lambda[k]);
    }
    RationalSimplex {
        vertices,
        normals_cap,
        normals,
        volume: Rational::new(BigInt::one(), denom),
    }
}

fn normals_cap_of(seed: &Seed) -> Result<Vec<Vec<i64>>> {
    let m = seed.psi_matrix();
    let Some(minv) = linalg::invert_unimodular(&m) else {
        return Err(Error::Internal(format!(
            "psi matrix at depth {} is not unimodular",
            seed.depth
        )));
    };
    // N = transpose of the inverse, so N_j is the j-th row of M^{-1}
    Ok(minv)
}

/// The simplex of a seed: degree-normalized valuation vectors as
/// vertices. Verifies containment in the total simplex and the normal
/// identities before returning.
pub fn delta_seed(seed: &Seed, ctx: &SeedContext) -> Result<RationalSimplex> {
    let n = ctx.len();
    let lengths = seed.variable_lengths(ctx);
    let mut vertices = Vec::with_capacity(n);
    let mut denom = BigInt::one();
    for (j, col) in seed.psi.iter().enumerate() {
        if lengths[j] <= 0 {
            return Err(Error::Internal(format!(
                "variable {} has nonpositive degree",
                j + 1
            )));
        }
        let d = BigInt::from(lengths[j]);
        vertices.push(
            col.iter()
                .map(|&x| Rational::new(BigInt::from(x), d.clone()))
                .collect::<Vec<Rational>>(),
        );
        denom *= d;
    }
    let normals_cap = normals_cap_of(seed)?;
    let fan = normal_fan(seed, ctx)?;
    Ok(RationalSimplex {
        vertices,
        normals_cap,
        normals: fan.rays,
        volume: Rational::new(BigInt::one(), denom),
    })
}

/// Normal-fan data of a seed's simplex, after exact verification.
#[derive(Debug, Clone)]
pub struct NormalFan {
    /// The `N_j` system (rows of the inverse psi matrix).
    pub rays_cap: Vec<Vec<i64>>,
    /// The rays `n_j` of the normal fan.
    pub rays: Vec<Vec<Rational>>,
}

/// Computes `N_j` from the inverse-transpose of the psi matrix and
/// checks, exactly: the duality `<psi_i, N_j> = delta_ij`, that the
/// carried `n_j` equal the lambda-projections of the `N_j`, and facet
/// normality against the vertices. Any failure is an invariant
/// violation naming the seed's mutation path.
pub fn normal_fan(seed: &Seed, ctx: &SeedContext) -> Result<NormalFan> {
    let n = ctx.len();
    let normals_cap = normals_cap_of(seed)?;
    for i in 0..n {
        for j in 0..n {
            let expected = i64::from(i == j);
            if linalg::dot_ii(&seed.psi[i], &normals_cap[j]) != expected {
                return Err(Error::Internal(format!(
                    "normal duality failed at ({}, {}) after path {:?}",
                    i + 1,
                    j + 1,
                    seed.path
                )));
            }
        }
    }
    let norm2 = ctx.lambda_norm2();
    let mut rays = Vec::with_capacity(n);
    for j in 0..n {
        let proj = lambda_projection(ctx, &normals_cap[j]);
        let carried: Vec<Rational> = seed.nvec_scaled[j]
            .iter()
            .map(|&v| Rational::new(BigInt::from(v), BigInt::from(norm2)))
            .collect();
        if proj != carried {
            return Err(Error::Internal(format!(
                "carried ray {} disagrees with the lambda-projection after path {:?}",
                j + 1,
                seed.path
            )));
        }
        rays.push(proj);
    }
    // facet normality against the degree-normalized vertices
    let lengths = seed.variable_lengths(ctx);
    let vertices: Vec<Vec<Rational>> = seed
        .psi
        .iter()
        .zip(&lengths)
        .map(|(col, &d)| {
            col.iter()
                .map(|&x| Rational::new(BigInt::from(x), BigInt::from(d)))
                .collect()
        })
        .collect();
    for j in 0..n {
        for p in 0..n {
            for q in 0..n {
                if p == j || q == j || p == q {
                    continue;
                }
                let diff: Vec<Rational> = vertices[p]
                    .iter()
                    .zip(&vertices[q])
                    .map(|(a, b)| a - b)
                    .collect();
                let pairing: Rational = rays[j]
                    .iter()
                    .zip(&diff)
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |acc, x| acc + x);
                if !pairing.is_zero() {
                    return Err(Error::Internal(format!(
                        "facet {} is not orthogonal to ray {} after path {:?}",
                        j + 1,
                        j + 1,
                        seed.path
                    )));
                }
            }
            if p != j {
                let diff: Vec<Rational> = vertices[j]
                    .iter()
                    .zip(&vertices[p])
                    .map(|(a, b)| a - b)
                    .collect();
                let pairing: Rational = rays[j]
                    .iter()
                    .zip(&diff)
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |acc, x| acc + x);
                if !pairing.is_positive() {
                    return Err(Error::Internal(format!(
                        "ray {} does not separate vertex {} after path {:?}",
                        j + 1,
                        p + 1,
                        seed.path
                    )));
                }
            }
        }
    }
    Ok(NormalFan {
        rays_cap: normals_cap,
        rays,
    })
}

/// A successful cluster-monomial decomposition: `psi . exponents`
/// equals the scaled input, and `scale` is its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub exponents: Vec<i64>,
    pub scale: i64,
}

/// Decomposes a point as a cluster monomial of the seed. Integer
/// vectors are decomposed as they stand (`scale` is their degree);
/// fractional vectors with positive degree pairing are scaled by the
/// least integer clearing the solved coordinates. Returns `None` when
/// the exact solution has a negative entry, i.e. the point is not a
/// cluster monomial of this seed.
pub fn decompose_point(
    seed: &Seed,
    ctx: &SeedContext,
    point: &[Rational],
) -> Result<Option<Decomposition>> {
    let n = ctx.len();
    if point.len() != n {
        return Err(Error::DimensionMismatch {
            left: point.len(),
            right: n,
        });
    }
    let m = seed.psi_matrix();
    let rows: Vec<Vec<Rational>> = m.iter().map(|r| linalg::rational_row(r)).collect();
    let Some(x) = linalg::solve(&rows, point) else {
        return Err(Error::Internal(format!(
            "singular psi system at depth {}",
            seed.depth
        )));
    };
    if x.iter().any(|v| v.is_negative()) {
        return Ok(None);
    }
    let all_integer = point.iter().all(|p| p.is_integer());
    let scale_factor = if all_integer {
        BigInt::one()
    } else {
        let degree: Rational = point
            .iter()
            .zip(&ctx.lambda)
            .map(|(p, &l)| p * linalg::rational_from_i64(l))
            .fold(Rational::zero(), |acc, v| acc + v);
        if !degree.is_positive() {
            return Ok(None);
        }
        let mut l = BigInt::one();
        for v in &x {
            l = l.lcm(v.denom());
        }
        l
    };
    let mut exponents = Vec::with_capacity(n);
    for v in &x {
        let scaled = v * Rational::from_integer(scale_factor.clone());
        if !scaled.is_integer() {
            return Err(Error::Internal(format!(
                "scaling by {} did not clear denominators",
                scale_factor
            )));
        }
        let Ok(e) = i64::try_from(scaled.to_integer()) else {
            return Err(Error::Internal(format!(
                "exponent overflow at depth {}",
                seed.depth
            )));
        };
        exponents.push(e);
    }
    let scale = exponents
        .iter()
        .zip(seed.variable_lengths(ctx))
        .map(|(&a, d)| a * d)
        .sum();
    Ok(Some(Decomposition { exponents, scale }))
}

/// The universal linear map `T` on the weight kernel, pinned on the
/// initial seed by `T(muhat_j) = n_j`.
#[derive(Debug, Clone)]
pub struct TMap {
    basis: Vec<Vec<i64>>,
    images: Vec<Vec<Rational>>,
    n: usize,
}

/// Builds `T` from the initial seed of the context. Fails when the
/// `muhat` vectors are rank-deficient, which would mean an upstream
/// invariant was violated.
pub fn build_tmap(initial: &Seed, ctx: &SeedContext) -> Result<TMap> {
    let n = ctx.len();
    let basis = initial.muhat.clone();
    let images: Vec<Vec<Rational>> = ctx
        .j_ex
        .iter()
        .map(|&j| {
            initial.nvec_scaled[j]
                .iter()
                .map(|&v| Rational::new(BigInt::from(v), BigInt::from(ctx.lambda_norm2())))
                .collect()
        })
        .collect();
    // full column rank on both the basis and its images; a solve
    // against zero succeeds exactly when the columns are independent
    let zero = vec![Rational::zero(); n];
    if !basis.is_empty() {
        let a: Vec<Vec<Rational>> = (0..n)
            .map(|t| {
                basis
                    .iter()
                    .map(|b| linalg::rational_from_i64(b[t]))
                    .collect()
            })
            .collect();
        if linalg::solve(&a, &zero).is_none() {
            return Err(Error::Internal(
                "muhat vectors of the initial seed are linearly dependent".into(),
            ));
        }
        let a: Vec<Vec<Rational>> = (0..n)
            .map(|t| images.iter().map(|img| img[t].clone()).collect())
            .collect();
        if linalg::solve(&a, &zero).is_none() {
            return Err(Error::Internal(
                "normal-fan rays of the initial seed are linearly dependent".into(),
            ));
        }
    }
    Ok(TMap { basis, images, n })
}

impl TMap {
    /// Dimension of the domain, `|J_ex|`.
    pub fn domain_dim(&self) -> usize {
        self.basis.len()
    }

    /// Applies `T` to a vector of the weight kernel.
    pub fn apply(&self, ctx: &SeedContext, v: &[i64]) -> Result<Vec<Rational>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: v.len(),
                right: self.n,
            });
        }
        if ctx.weight_of(v).iter().any(|&x| x != 0) {
            return Err(Error::Internal(format!(
                "vector {:?} is outside the weight kernel",
                v
            )));
        }
        if self.basis.is_empty() {
            return Ok(vec![Rational::zero(); self.n]);
        }
        let a: Vec<Vec<Rational>> = (0..self.n)
            .map(|t| {
                self.basis
                    .iter()
                    .map(|b| linalg::rational_from_i64(b[t]))
                    .collect()
            })
            .collect();
        let b: Vec<Rational> = v.iter().map(|&x| linalg::rational_from_i64(x)).collect();
        let Some(gamma) = linalg::solve(&a, &b) else {
            return Err(Error::Internal(format!(
                "vector {:?} is outside the span of the muhat basis",
                v
            )));
        };
        let mut out = vec![Rational::zero(); self.n];
        for (g, img) in gamma.iter().zip(&self.images) {
            for (t, x) in img.iter().enumerate() {
                out[t] += g * x;
            }
        }
        Ok(out)
    }
}

/// One strict inequality `sum coeffs . x + constant > 0`.
type StrictRow = (Vec<BigInt>, BigInt);

fn normalize_row(mut row: StrictRow) -> StrictRow {
    let mut g = row.1.abs();
    for c in &row.0 {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in row.0.iter_mut() {
            *c /= &g;
        }
        row.1 /= &g;
    }
    row
}

/// Fourier-Motzkin feasibility for a system of strict inequalities.
/// Returns true when a rational solution exists.
fn strict_system_feasible(mut rows: Vec<StrictRow>, vars: usize) -> bool {
    use alloc::collections::BTreeSet;
    let mut remaining: Vec<usize> = (0..vars).collect();
    loop {
        // constant rows decide or disappear
        let mut next = Vec::new();
        for row in rows {
            if row.0.iter().all(|c| c.is_zero()) {
                if row.1.is_positive() {
                    continue;
                }
                return false;
            }
            next.push(row);
        }
        rows = next;
        let Some(&var) = remaining
            .iter()
            .filter(|&&v| rows.iter().any(|r| !r.0[v].is_zero()))
            .min_by_key(|&&v| {
                let pos = rows.iter().filter(|r| r.0[v].is_positive()).count();
                let neg = rows.iter().filter(|r| r.0[v].is_negative()).count();
                pos * neg
            })
        else {
            return true; // nothing left to eliminate, no contradiction found
        };
        remaining.retain(|&v| v != var);
        let mut zero_rows = Vec::new();
        let mut pos_rows = Vec::new();
        let mut neg_rows = Vec::new();
        for row in rows {
            if row.0[var].is_zero() {
                zero_rows.push(row);
            } else if row.0[var].is_positive() {
                pos_rows.push(row);
            } else {
                neg_rows.push(row);
            }
        }
        let mut set: BTreeSet<StrictRow> = zero_rows.into_iter().map(normalize_row).collect();
        for p in &pos_rows {
            for q in &neg_rows {
                let a = q.0[var].abs();
                let b = p.0[var].clone();
                let coeffs: Vec<BigInt> =
                    p.0.iter().zip(&q.0).map(|(x, y)| x * &a + y * &b).collect();
                let constant = &p.1 * &a + &q.1 * &b;
                if coeffs.iter().all(|c| c.is_zero()) && !constant.is_positive() {
                    return false;
                }
                set.insert(normalize_row((coeffs, constant)));
            }
        }
        rows = set.into_iter().collect();
    }
}

/// Exact test that two seed simplices have disjoint relative interiors
/// inside the degree hyperplane. A seed compared against itself (or any
/// seed with the same simplex) reports `false`.
pub fn interiors_disjoint(a: &Seed, b: &Seed, ctx: &SeedContext) -> Result<bool> {
    let n = ctx.len();
    let rays_a = normals_cap_of(a)?;
    let rays_b = normals_cap_of(b)?;
    // substitute the hyperplane equality away through coordinate `t`
    let t = n - 1;
    let lt = ctx.lambda[t];
    let mut rows: Vec<StrictRow> = Vec::new();
    for ray in rays_a.iter().chain(rays_b.iter()) {
        let mut coeffs = Vec::with_capacity(n - 1);
        for i in 0..n {
            if i != t {
                coeffs.push(BigInt::from(ray[i] * lt - ray[t] * ctx.lambda[i]));
            }
        }
        rows.push(normalize_row((coeffs, BigInt::from(ray[t]))));
    }
    Ok(!strict_system_feasible(rows, n - 1))
}
