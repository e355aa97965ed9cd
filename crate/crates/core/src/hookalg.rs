//! Exact sparse multivariate polynomial arithmetic over the rationals
//! in the simple-root variables, and the hook-identity verifiers.
//!
//! Identities between sums of reciprocals of products of linear forms
//! are decided by clearing denominators: the common denominator takes
//! every distinct form at its maximal multiplicity, the numerators are
//! expanded, and the two expansions are compared coefficient by
//! coefficient. The forms stay short and the dimensions small, so full
//! expansion is cheap and keeps the verifier free of gcd machinery.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::cluster::{SeedContext, SeedEnumeration};
use crate::lyndon::{DominantWord, GoodLyndonTable};
use crate::rootsys::count_reduced_expressions;
use crate::{Error, Rational, Result};

/// A sparse multivariate polynomial: exponent multi-indices mapped to
/// nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SparsePoly {
    pub fn zero(n_vars: usize) -> SparsePoly {
        SparsePoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> SparsePoly {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; n_vars], Rational::one());
        SparsePoly { n_vars, terms }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    fn insert(&mut self, exps: Vec<u32>, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        debug_assert_eq!(self.n_vars, other.n_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        debug_assert_eq!(self.n_vars, other.n_vars);
        let mut out = SparsePoly::zero(self.n_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert(exps, ca * cb);
            }
        }
        out
    }

    pub fn from_linear_form(n_vars: usize, form: &LinearForm) -> SparsePoly {
        let mut out = SparsePoly::zero(n_vars);
        for (i, &c) in form.coeffs().iter().enumerate() {
            if c != 0 {
                let mut exps = vec![0u32; n_vars];
                exps[i] = 1;
                out.insert(exps, Rational::from_integer(BigInt::from(c)));
            }
        }
        out
    }

    /// Substitutes 1 for every variable.
    pub fn eval_at_ones(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Canonical textual encoding used for certificate hashing.
    fn canonical_encoding(&self) -> String {
        let mut s = String::new();
        for (e, c) in &self.terms {
            let _ = write!(s, "{:?}:{}/{};", e, c.numer(), c.denom());
        }
        s
    }
}

/// A nonzero linear form with nonnegative integer coefficients over the
/// simple-root variables; weights of words and roots land here.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: Vec<i64>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Result<LinearForm> {
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::ZeroVector);
        }
        if coeffs.iter().any(|&c| c < 0) {
            return Err(Error::Internal(format!(
                "linear form with a negative coefficient: {:?}",
                coeffs
            )));
        }
        Ok(LinearForm { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Value under the specialization of every variable to 1.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// Weight of a valuation vector as a linear form: `wt(v) = sum_k v_k
/// beta_k`.
pub fn weight_linear_form(ctx: &SeedContext, v: &[i64]) -> Result<LinearForm> {
    LinearForm::new(ctx.weight_of(v))
}

/// Weight of a dominant word as a linear form.
pub fn weight_form_of_dominant(table: &GoodLyndonTable, word: &DominantWord) -> Result<LinearForm> {
    LinearForm::new(word.weight(table))
}

/// A sum of terms `prod 1/f` over multisets of linear forms, each term
/// carrying the same number of factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocalProductSum {
    n_vars: usize,
    factor_count: usize,
    terms: Vec<BTreeMap<LinearForm, u32>>,
}

impl ReciprocalProductSum {
    pub fn new(n_vars: usize, factor_count: usize) -> ReciprocalProductSum {
        ReciprocalProductSum {
            n_vars,
            factor_count,
            terms: Vec::new(),
        }
    }

    pub fn push_term(&mut self, factors: &[LinearForm]) -> Result<()> {
        if factors.len() != self.factor_count {
            return Err(Error::DimensionMismatch {
                left: factors.len(),
                right: self.factor_count,
            });
        }
        let mut term: BTreeMap<LinearForm, u32> = BTreeMap::new();
        for f in factors {
            if f.coeffs().len() != self.n_vars {
                return Err(Error::DimensionMismatch {
                    left: f.coeffs().len(),
                    right: self.n_vars,
                });
            }
            *term.entry(f.clone()).or_insert(0) += 1;
        }
        self.terms.push(term);
        Ok(())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[BTreeMap<LinearForm, u32>] {
        &self.terms
    }

    /// Specializes every variable to 1: `sum 1/prod(heights)`.
    pub fn eval_at_ones(&self) -> Rational {
        let mut acc = Rational::zero();
        for term in &self.terms {
            let mut denom = BigInt::one();
            for (f, &m) in term {
                for _ in 0..m {
                    denom *= BigInt::from(f.height());
                }
            }
            acc += Rational::new(BigInt::one(), denom);
        }
        acc
    }
}

/// Equality certificate: the denominator factorization both numerators
/// were expanded over, and deterministic hashes of the expansions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub equal: bool,
    pub lhs_hash: u64,
    pub rhs_hash: u64,
    pub denominator: Vec<(LinearForm, u32)>,
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf29ce484222325u64;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn expanded_numerator(
    sum: &ReciprocalProductSum,
    max_mult: &BTreeMap<LinearForm, u32>,
) -> SparsePoly {
    let mut total = SparsePoly::zero(sum.n_vars);
    for term in &sum.terms {
        let mut prod = SparsePoly::one(sum.n_vars);
        for (f, &m) in max_mult {
            let have = term.get(f).copied().unwrap_or(0);
            let poly = SparsePoly::from_linear_form(sum.n_vars, f);
            for _ in 0..m.saturating_sub(have) {
                prod = prod.mul(&poly);
            }
        }
        total = total.add(&prod);
    }
    total
}

/// Decides `lhs = rhs` exactly by clearing denominators and comparing
/// the expanded numerator polynomials coefficient by coefficient.
pub fn sum_equals(lhs: &ReciprocalProductSum, rhs: &ReciprocalProductSum) -> Result<Certificate> {
    if lhs.n_vars != rhs.n_vars {
        return Err(Error::DimensionMismatch {
            left: lhs.n_vars,
            right: rhs.n_vars,
        });
    }
    let mut max_mult: BTreeMap<LinearForm, u32> = BTreeMap::new();
    for term in lhs.terms.iter().chain(rhs.terms.iter()) {
        for (f, &m) in term {
            let e = max_mult.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
    }
    let lhs_poly = expanded_numerator(lhs, &max_mult);
    let rhs_poly = expanded_numerator(rhs, &max_mult);
    Ok(Certificate {
        equal: lhs_poly == rhs_poly,
        lhs_hash: fnv1a64(lhs_poly.canonical_encoding().as_bytes()),
        rhs_hash: fnv1a64(rhs_poly.canonical_encoding().as_bytes()),
        denominator: max_mult.into_iter().collect(),
    })
}

/// Outcome of the product-of-reciprocals identity over a complete
/// enumeration.
#[derive(Debug, Clone)]
pub struct ProphookReport {
    pub lhs: ReciprocalProductSum,
    pub rhs: ReciprocalProductSum,
    pub certificate: Certificate,
}

impl ProphookReport {
    pub fn verified(&self) -> bool {
        self.certificate.equal
    }
}

/// Builds the left side from the convex-order roots and the right side
/// from the weights of every seed's cluster variables, then decides
/// equality exactly. Refuses incomplete enumerations.
pub fn verify_prophook(ctx: &SeedContext, seeds: &SeedEnumeration) -> Result<ProphookReport> {
    if !seeds.finite {
        return Err(Error::IncompleteEnumeration);
    }
    let psis: Vec<&[Vec<i64>]> = seeds.seeds.iter().map(|s| s.psi.as_slice()).collect();
    verify_prophook_psis(ctx, &psis)
}

/// [`verify_prophook`] against externally supplied valuation vectors
/// (one psi list per seed), assumed to cover every seed.
pub fn verify_prophook_psis(ctx: &SeedContext, psis: &[&[Vec<i64>]]) -> Result<ProphookReport> {
    let n_vars = ctx.cartan.rank;
    let n = ctx.len();
    let mut lhs = ReciprocalProductSum::new(n_vars, n);
    let root_forms: Vec<LinearForm> = ctx
        .betas
        .iter()
        .map(|beta| LinearForm::new(beta.clone()))
        .collect::<Result<_>>()?;
    lhs.push_term(&root_forms)?;
    let mut rhs = ReciprocalProductSum::new(n_vars, n);
    for psi in psis {
        let forms: Vec<LinearForm> = psi
            .iter()
            .map(|col| weight_linear_form(ctx, col))
            .collect::<Result<_>>()?;
        rhs.push_term(&forms)?;
    }
    let certificate = sum_equals(&lhs, &rhs)?;
    Ok(ProphookReport {
        lhs,
        rhs,
        certificate,
    })
}

/// Both sides of the specialized identity: the hook value
/// `N! / prod ht(beta)` and the seed sum `sum_S N! / prod_j |mu_j^S|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorhookReport {
    pub hook_side: Rational,
    pub seed_side: Rational,
}

impl CorhookReport {
    pub fn verified(&self) -> bool {
        self.hook_side == self.seed_side
    }
}

pub fn factorial(n: usize) -> BigInt {
    let mut out = BigInt::one();
    for k in 2..=n {
        out *= BigInt::from(k);
    }
    out
}

/// Checks `N!/prod ht(beta) = sum_S N!/prod_j |mu_j^S|` as exact
/// rationals. Refuses incomplete enumerations.
pub fn verify_corhook(ctx: &SeedContext, seeds: &SeedEnumeration) -> Result<CorhookReport> {
    if !seeds.finite {
        return Err(Error::IncompleteEnumeration);
    }
    let psis: Vec<&[Vec<i64>]> = seeds.seeds.iter().map(|s| s.psi.as_slice()).collect();
    verify_corhook_psis(ctx, &psis)
}

/// [`verify_corhook`] against externally supplied valuation vectors.
pub fn verify_corhook_psis(ctx: &SeedContext, psis: &[&[Vec<i64>]]) -> Result<CorhookReport> {
    let n = ctx.len();
    let nfac = factorial(n);
    let mut hook_denom = BigInt::one();
    for &h in &ctx.lambda {
        hook_denom *= BigInt::from(h);
    }
    let hook_side = Rational::new(nfac.clone(), hook_denom);
    let mut seed_side = Rational::zero();
    for psi in psis {
        let mut denom = BigInt::one();
        for col in psi.iter() {
            let d = ctx.lambda_dot(col);
            if d <= 0 {
                return Err(Error::Internal(format!(
                    "seed variable with nonpositive degree {}",
                    d
                )));
            }
            denom *= BigInt::from(d);
        }
        seed_side += Rational::new(nfac.clone(), denom);
    }
    Ok(CorhookReport {
        hook_side,
        seed_side,
    })
}

/// The hook value, the exact reduced-expression count, and whether they
/// coincide. They need not: the match is reported, never asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PetersonProctor {
    pub hook: Rational,
    pub reduced_words: BigUint,
    pub matches: bool,
}

pub fn peterson_proctor_report(ctx: &SeedContext) -> PetersonProctor {
    let n = ctx.len();
    let mut denom = BigInt::one();
    for &h in &ctx.lambda {
        denom *= BigInt::from(h);
    }
    let hook = Rational::new(factorial(n), denom);
    let reduced_words = count_reduced_expressions(&ctx.cartan, &ctx.w);
    let matches =
        hook.is_integer() && hook.to_integer().magnitude() == &reduced_words && !hook.is_negative();
    PetersonProctor {
        hook,
        reduced_words,
        matches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::enumerate_seeds;
    use crate::lyndon::AlphabetOrder;
    use crate::rootsys::{CartanData, Family};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn form(coeffs: &[i64]) -> LinearForm {
        LinearForm::new(coeffs.to_vec()).unwrap()
    }

    fn ctx_a3_2132() -> SeedContext {
        let c = CartanData::new(Family::A, 3).unwrap();
        let order = AlphabetOrder::new(&[2, 1, 3]).unwrap();
        SeedContext::new(&c, &order, &[2, 1, 3, 2]).unwrap()
    }

    fn ctx_a2_121() -> SeedContext {
        let c = CartanData::new(Family::A, 2).unwrap();
        SeedContext::new(&c, &AlphabetOrder::natural(2), &[1, 2, 1]).unwrap()
    }

    #[test]
    fn weight_forms() {
        let ctx = ctx_a3_2132();
        // e_k maps to beta_k
        let f = weight_linear_form(&ctx, &[0, 0, 0, 1]).unwrap();
        assert_eq!(f.coeffs(), &[1, 1, 1]);
        // the fourth initial variable has weight alpha1 + 2 alpha2 + alpha3
        let f = weight_linear_form(&ctx, &[1, 0, 0, 1]).unwrap();
        assert_eq!(f.coeffs(), &[1, 2, 1]);
        // dominant word (2 3 1 2) in the natural-order A3 table
        let c = CartanData::new(Family::A, 3).unwrap();
        let t = crate::lyndon::compute_good_lyndon(&c, &AlphabetOrder::natural(3)).unwrap();
        let d = crate::lyndon::is_dominant(&t, &[2, 3, 1, 2]).unwrap();
        let f = weight_form_of_dominant(&t, &d).unwrap();
        assert_eq!(f.coeffs(), &[1, 2, 1]);
        // the word "21" in the 2<1<3 table has weight alpha1 + alpha2
        let f = weight_linear_form(&ctx, &[0, 1, 0, 0]).unwrap();
        assert_eq!(f.coeffs(), &[1, 1, 0]);

        assert_eq!(
            weight_linear_form(&ctx, &[0, 0, 0, 0]),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn worked_hook_identity() {
        // 1/(a2 (a1+a2) (a2+a3) (a1+a2+a3)) equals the two-term sum
        // with the doubled form a1+2a2+a3 in both denominators.
        let mut lhs = ReciprocalProductSum::new(3, 4);
        lhs.push_term(&[
            form(&[0, 1, 0]),
            form(&[1, 1, 0]),
            form(&[0, 1, 1]),
            form(&[1, 1, 1]),
        ])
        .unwrap();
        let mut rhs = ReciprocalProductSum::new(3, 4);
        rhs.push_term(&[
            form(&[0, 1, 0]),
            form(&[1, 1, 0]),
            form(&[1, 1, 1]),
            form(&[1, 2, 1]),
        ])
        .unwrap();
        rhs.push_term(&[
            form(&[0, 1, 0]),
            form(&[0, 1, 1]),
            form(&[1, 1, 1]),
            form(&[1, 2, 1]),
        ])
        .unwrap();
        let cert = sum_equals(&lhs, &rhs).unwrap();
        assert!(cert.equal);

        // reflexivity
        let cert = sum_equals(&lhs, &lhs).unwrap();
        assert!(cert.equal);
        assert_eq!(cert.lhs_hash, cert.rhs_hash);

        // dropping a term breaks it
        let mut partial = ReciprocalProductSum::new(3, 4);
        partial
            .push_term(&[
                form(&[0, 1, 0]),
                form(&[1, 1, 0]),
                form(&[1, 1, 1]),
                form(&[1, 2, 1]),
            ])
            .unwrap();
        assert!(!sum_equals(&lhs, &partial).unwrap().equal);

        // perturbing a single coefficient breaks it
        let mut perturbed = ReciprocalProductSum::new(3, 4);
        perturbed
            .push_term(&[
                form(&[0, 1, 0]),
                form(&[1, 1, 0]),
                form(&[1, 1, 1]),
                form(&[2, 2, 1]),
            ])
            .unwrap();
        perturbed
            .push_term(&[
                form(&[0, 1, 0]),
                form(&[0, 1, 1]),
                form(&[1, 1, 1]),
                form(&[1, 2, 1]),
            ])
            .unwrap();
        assert!(!sum_equals(&lhs, &perturbed).unwrap().equal);
    }

    #[test]
    fn prophook_on_golden_instances() {
        let ctx = ctx_a3_2132();
        let seeds = enumerate_seeds(&ctx, 100).unwrap();
        let report = verify_prophook(&ctx, &seeds).unwrap();
        assert!(report.verified());
        assert_eq!(report.rhs.num_terms(), 2);
        // the two term multisets match the worked example
        let term_forms: Vec<Vec<&LinearForm>> = report
            .rhs
            .terms()
            .iter()
            .map(|t| t.keys().collect())
            .collect();
        assert!(term_forms[0].iter().any(|f| f.coeffs() == [0, 1, 0]));
        assert!(term_forms[1].iter().any(|f| f.coeffs() == [1, 1, 1]));
        for t in report.rhs.terms() {
            assert_eq!(t.get(&form(&[1, 2, 1])), Some(&1));
        }

        let ctx = ctx_a2_121();
        let seeds = enumerate_seeds(&ctx, 100).unwrap();
        let report = verify_prophook(&ctx, &seeds).unwrap();
        assert!(report.verified());
        assert_eq!(report.rhs.num_terms(), 2);

        // a length-1 word: single seed, single frozen variable
        let a2 = CartanData::new(Family::A, 2).unwrap();
        let single = SeedContext::new(&a2, &AlphabetOrder::natural(2), &[1]).unwrap();
        let seeds = enumerate_seeds(&single, 10).unwrap();
        assert_eq!(seeds.seeds.len(), 1);
        let report = verify_prophook(&single, &seeds).unwrap();
        assert!(report.verified());
    }

    #[test]
    fn prophook_refuses_incomplete_enumerations() {
        let a3 = CartanData::new(Family::A, 3).unwrap();
        let w0 = crate::rootsys::longest_element(&a3);
        let ctx = SeedContext::for_order(&a3, &AlphabetOrder::natural(3), &w0).unwrap();
        let partial = enumerate_seeds(&ctx, 3).unwrap();
        assert!(!partial.finite);
        assert_eq!(
            verify_prophook(&ctx, &partial).unwrap_err(),
            Error::IncompleteEnumeration
        );
        assert_eq!(
            verify_corhook(&ctx, &partial).unwrap_err(),
            Error::IncompleteEnumeration
        );
    }

    #[test]
    fn corhook_values() {
        let ctx = ctx_a2_121();
        let seeds = enumerate_seeds(&ctx, 100).unwrap();
        let report = verify_corhook(&ctx, &seeds).unwrap();
        assert_eq!(report.hook_side, q(3, 1));
        assert_eq!(report.seed_side, q(3, 2) + q(3, 2));
        assert!(report.verified());

        let ctx = ctx_a3_2132();
        let seeds = enumerate_seeds(&ctx, 100).unwrap();
        let report = verify_corhook(&ctx, &seeds).unwrap();
        assert_eq!(report.hook_side, q(2, 1));
        assert!(report.verified());

        let c = CartanData::new(Family::A, 3).unwrap();
        let ctx = SeedContext::new(&c, &AlphabetOrder::natural(3), &[1, 2, 3, 1, 2]).unwrap();
        let seeds = enumerate_seeds(&ctx, 100).unwrap();
        let report = verify_corhook(&ctx, &seeds).unwrap();
        assert_eq!(report.hook_side, q(10, 1));
        assert!(report.verified());
    }

    #[test]
    fn peterson_proctor_examples() {
        let ctx = ctx_a3_2132();
        let report = peterson_proctor_report(&ctx);
        assert_eq!(report.hook, q(2, 1));
        assert_eq!(report.reduced_words, BigUint::from(2u32));
        assert!(report.matches);

        let ctx = ctx_a2_121();
        let report = peterson_proctor_report(&ctx);
        assert_eq!(report.hook, q(3, 1));
        assert_eq!(report.reduced_words, BigUint::from(2u32));
        assert!(!report.matches);

        let a2 = CartanData::new(Family::A, 2).unwrap();
        let single = SeedContext::new(&a2, &AlphabetOrder::natural(2), &[2]).unwrap();
        let report = peterson_proctor_report(&single);
        assert_eq!(report.hook, q(1, 1));
        assert_eq!(report.reduced_words, BigUint::from(1u32));
        assert!(report.matches);
    }

    #[test]
    fn ring_laws_on_random_polynomials() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let random_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut p = SparsePoly::zero(3);
            for _ in 0..rng.gen_range(0..6) {
                let exps: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
                let num = rng.gen_range(-5i64..=5);
                let den = rng.gen_range(1i64..=4);
                p.insert(exps, q(num, den));
            }
            p
        };
        for _ in 0..50 {
            let a = random_poly(&mut rng);
            let b = random_poly(&mut rng);
            let c = random_poly(&mut rng);
            assert_eq!(a.add(&b), b.add(&a));
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.sub(&a), SparsePoly::zero(3));
            assert_eq!(a.mul(&SparsePoly::one(3)), a);
        }
    }

    #[test]
    fn specialization_matches_corhook() {
        // specializing the prophook sides at 1 reproduces the corhook
        // rationals divided by N!
        let ctx = ctx_a3_2132();
        let seeds = enumerate_seeds(&ctx, 100).unwrap();
        let hook = verify_prophook(&ctx, &seeds).unwrap();
        let cor = verify_corhook(&ctx, &seeds).unwrap();
        let nfac = Rational::from_integer(factorial(ctx.len()));
        assert_eq!(hook.lhs.eval_at_ones() * nfac.clone(), cor.hook_side);
        assert_eq!(hook.rhs.eval_at_ones() * nfac, cor.seed_side);
    }
}
