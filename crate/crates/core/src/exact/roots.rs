//! Real root counting, isolation, and exact comparison via Sturm sequences.
//!
//! All arithmetic is exact: chains are built with fraction-free pseudo
//! remainders, query points are dyadic rationals, and comparisons between
//! largest roots of two polynomials fall back to gcd root counting when
//! bisection brackets overlap, so equal algebraic numbers are recognized
//! rather than guessed from floating point.

use crate::error::{Error, Result};
use crate::exact::poly::IntPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Certified interval `[lo, hi]` around one real root (exact when `lo == hi`).
#[derive(Clone, Debug, PartialEq)]
pub struct RootBracket {
    pub lo: BigRational,
    pub hi: BigRational,
    /// True when a Sturm count certifies exactly one root in the interval.
    pub guaranteed: bool,
}

impl RootBracket {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from(BigInt::from(2))
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// Sturm chain of a squarefree polynomial.
struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    fn new(squarefree: &IntPolynomial) -> SturmChain {
        let p0 = squarefree.primitive_part();
        let mut chain = vec![p0];
        if chain[0].degree() >= 1 {
            chain.push(chain[0].derivative().primitive_part());
            loop {
                let len = chain.len();
                if chain[len - 1].is_zero() || chain[len - 1].degree() == 0 {
                    break;
                }
                let next = neg_prem_primitive(&chain[len - 2], &chain[len - 1]);
                if next.is_zero() {
                    break;
                }
                chain.push(next);
            }
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    ///
    /// With zero-skipping variation counts, `V(x)` at a simple root of the
    /// first entry equals the limit from the right, so a root at `a` is
    /// excluded and a root at `b` is included. Requires `a < b`.
    fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a < b);
        let va = self.variations_at(a);
        let vb = self.variations_at(b);
        debug_assert!(va >= vb, "sign variations must not increase");
        va - vb
    }
}

/// Primitive part of a positive multiple of `-rem(a, b)`.
///
/// Computed fraction-free: the loop multiplies the running remainder by the
/// leading coefficient of `b`, and the final sign is corrected so the result
/// differs from `-rem(a, b)` only by a positive rational factor (the only
/// rescaling a Sturm chain tolerates).
fn neg_prem_primitive(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    debug_assert!(!b.is_zero() && b.degree() >= 1);
    let lc = b.leading().clone();
    let db = b.degree();
    let mut r = a.clone();
    let mut mults = 0usize;
    while !r.is_zero() && r.degree() >= db {
        let shift = r.degree() - db;
        let lead_r = r.leading().clone();
        r = &r.scale(&lc) - &b.mul_monomial(&lead_r, shift);
        mults += 1;
    }
    if r.is_zero() {
        return r;
    }
    let multiplier_negative = lc.is_negative() && mults % 2 == 1;
    let out = if multiplier_negative { r } else { -&r };
    out.primitive_part()
}

/// gcd in `Z[x]`, primitive with positive leading coefficient (zero iff both
/// inputs are zero).
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut x = a.primitive_part();
    let mut y = b.primitive_part();
    if x.is_zero() {
        return normalize_sign(y);
    }
    if y.is_zero() {
        return normalize_sign(x);
    }
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() && y.degree() >= 1 {
        let r = neg_prem_primitive(&x, &y);
        x = y;
        y = r;
    }
    if !y.is_zero() {
        // Nonzero constant remainder: coprime.
        return IntPolynomial::one();
    }
    normalize_sign(x)
}

fn normalize_sign(p: IntPolynomial) -> IntPolynomial {
    if p.leading().is_negative() {
        -&p
    } else {
        p
    }
}

/// `p` divided by `gcd(p, p')`: same roots, all simple.
pub fn squarefree_part(p: &IntPolynomial) -> Result<IntPolynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Ok(IntPolynomial::one());
    }
    let g = poly_gcd(p, &p.derivative());
    if g.degree() == 0 {
        return Ok(p.primitive_part());
    }
    p.primitive_part().divide_exact(&g)
}

/// Strict upper bound on the absolute value of every root:
/// `1 + ceil(max |a_i| / |a_d|)`.
fn cauchy_bound(p: &IntPolynomial) -> BigInt {
    let d = p.degree();
    let lead = p.leading().abs();
    let mut maxabs = BigInt::zero();
    for i in 0..d {
        let a = p.coeff(i).abs();
        if a > maxabs {
            maxabs = a;
        }
    }
    if maxabs.is_zero() {
        return BigInt::one();
    }
    (&maxabs + &lead - BigInt::one()) / &lead + BigInt::one()
}

/// Number of distinct real roots.
pub fn real_root_count(p: &IntPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Ok(0);
    }
    let sf = squarefree_part(p)?;
    let chain = SturmChain::new(&sf);
    let m = BigRational::from(cauchy_bound(&sf));
    Ok(chain.count_half_open(&-m.clone(), &m))
}

/// Number of real roots counted with multiplicity.
pub fn real_root_count_with_multiplicity(p: &IntPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut total = 0;
    let mut q = p.primitive_part();
    while q.degree() >= 1 {
        total += real_root_count(&q)?;
        q = poly_gcd(&q, &q.derivative());
    }
    Ok(total)
}

/// Synthetic division of `p` by `(x - root)`; errors unless `root` is exact.
/// The result is scaled back to a primitive integer polynomial (a positive
/// rescaling, so roots and signs of values are preserved up to that factor).
fn deflate(p: &IntPolynomial, root: &BigRational) -> Result<IntPolynomial> {
    let d = p.degree();
    debug_assert!(d >= 1);
    let mut q = vec![BigRational::zero(); d];
    let mut acc = BigRational::zero();
    for i in (1..=d).rev() {
        acc = &acc * root + BigRational::from(p.coeff(i));
        q[i - 1] = acc.clone();
    }
    let rem = &acc * root + BigRational::from(p.coeff(0));
    if !rem.is_zero() {
        return Err(Error::Internal("deflation at a non-root".into()));
    }
    let mut l = BigInt::one();
    for c in &q {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = q
        .iter()
        .map(|c| (c * BigRational::from(l.clone())).to_integer())
        .collect();
    Ok(IntPolynomial::from_coeffs(ints).primitive_part())
}

/// Certified bracket around the largest real root, of width at most
/// `precision` (or exact).
pub fn largest_real_root_bracket(p: &IntPolynomial, precision: f64) -> Result<RootBracket> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !precision.is_finite() || precision <= 0.0 {
        return Err(Error::InvalidArgument("precision must be positive and finite".into()));
    }
    if p.degree() == 0 {
        return Err(Error::NoRealRoot);
    }
    let eps = BigRational::from_float(precision)
        .ok_or_else(|| Error::InvalidArgument("precision is not representable".into()))?;
    let mut sf = squarefree_part(p)?;
    let mut chain = SturmChain::new(&sf);
    let bound = BigRational::from(cauchy_bound(&sf));
    let mut lo = -bound.clone();
    let mut hi = bound;
    let mut count = chain.count_half_open(&lo, &hi);
    if count == 0 {
        return Err(Error::NoRealRoot);
    }
    let two = BigRational::from(BigInt::from(2));

    // Phase 1: shrink (lo, hi) until it contains exactly the largest root.
    while count > 1 {
        let mid = (&lo + &hi) / &two;
        if sf.sign_at(&mid) == 0 {
            let above = chain.count_half_open(&mid, &hi);
            if above == 0 {
                return Ok(RootBracket { lo: mid.clone(), hi: mid, guaranteed: true });
            }
            // A root below the largest; deflate it away so interval endpoints
            // stay off the root set.
            sf = deflate(&sf, &mid)?;
            chain = SturmChain::new(&sf);
            lo = mid;
            count = above;
        } else {
            let above = chain.count_half_open(&mid, &hi);
            if above >= 1 {
                lo = mid;
                count = above;
            } else {
                hi = mid;
            }
        }
    }

    // Phase 2: sign bisection on the single simple root in (lo, hi).
    let s_lo = sf.sign_at(&lo);
    debug_assert!(s_lo != 0 && sf.sign_at(&hi) == -s_lo);
    while self_width(&lo, &hi) > eps {
        let mid = (&lo + &hi) / &two;
        let s = sf.sign_at(&mid);
        if s == 0 {
            return Ok(RootBracket { lo: mid.clone(), hi: mid, guaranteed: true });
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RootBracket { lo, hi, guaranteed: true })
}

fn self_width(lo: &BigRational, hi: &BigRational) -> BigRational {
    hi - lo
}

/// Largest real root to within `precision` (midpoint of a certified bracket).
pub fn largest_real_root(p: &IntPolynomial, precision: f64) -> Result<f64> {
    Ok(largest_real_root_bracket(p, precision)?.midpoint_f64())
}

fn refine(sf: &IntPolynomial, br: &RootBracket, eps: &BigRational) -> RootBracket {
    if br.is_exact() {
        return br.clone();
    }
    let mut lo = br.lo.clone();
    let mut hi = br.hi.clone();
    let s_lo = sf.sign_at(&lo);
    debug_assert!(s_lo != 0);
    let two = BigRational::from(BigInt::from(2));
    while self_width(&lo, &hi) > *eps {
        let mid = (&lo + &hi) / &two;
        let s = sf.sign_at(&mid);
        if s == 0 {
            return RootBracket { lo: mid.clone(), hi: mid, guaranteed: true };
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RootBracket { lo, hi, guaranteed: true }
}

/// Exact comparison of the largest real roots of two polynomials.
///
/// Brackets are refined until they separate; if they keep overlapping, a root
/// of `gcd(p, q)` inside the overlap certifies equality exactly.
pub fn compare_largest_real_roots(p: &IntPolynomial, q: &IntPolynomial) -> Result<Ordering> {
    let sfp = squarefree_part(p)?;
    let sfq = squarefree_part(q)?;
    let mut bp = largest_real_root_bracket(p, 1e-12)?;
    let mut bq = largest_real_root_bracket(q, 1e-12)?;
    let g = poly_gcd(&sfp, &sfq);
    let gchain = if g.degree() >= 1 { Some(SturmChain::new(&g)) } else { None };
    let mut eps = BigRational::from_float(1e-12).expect("representable");
    let shrink = BigRational::new(BigInt::one(), BigInt::from(1u64 << 32));
    for _ in 0..64 {
        if bp.is_exact() && bq.is_exact() {
            return Ok(bp.lo.cmp(&bq.lo));
        }
        if bp.hi <= bq.lo {
            return Ok(Ordering::Less);
        }
        if bq.hi <= bp.lo {
            return Ok(Ordering::Greater);
        }
        if bp.is_exact() {
            // bq.lo < point < bq.hi here; equal iff the point is q's root.
            if sfq.sign_at(&bp.lo) == 0 {
                return Ok(Ordering::Equal);
            }
        } else if bq.is_exact() {
            if sfp.sign_at(&bq.lo) == 0 {
                return Ok(Ordering::Equal);
            }
        } else if let Some(ch) = &gchain {
            let lo = bp.lo.clone().max(bq.lo.clone());
            let hi = bp.hi.clone().min(bq.hi.clone());
            debug_assert!(lo < hi);
            if ch.count_half_open(&lo, &hi) >= 1 {
                // Each bracket holds exactly one root (its largest); a shared
                // root in the overlap forces both largest roots onto it.
                return Ok(Ordering::Equal);
            }
        }
        eps = &eps * &shrink;
        bp = refine(&sfp, &bp, &eps);
        bq = refine(&sfq, &bq, &eps);
    }
    Err(Error::Internal("largest-root comparison failed to separate".into()))
}
