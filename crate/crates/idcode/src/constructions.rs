//! Explicit code families and closed-form cardinality bounds.
//!
//! All bounds are computed in exact integer arithmetic; interval and
//! ceiling computations never touch floating point, so boundary cases
//! cannot misclassify.

use crate::arith;
use crate::codesets::{self, Code};
use crate::hamming::Radices;
use crate::{Error, Result};

/// The subgroup { (x_1, ..., x_{n-1}, x_1 + ... + x_{n-1} mod m) } of the
/// uniform-radix group, of order m^{n-1}.
///
/// For n >= 3 this is a group identifying code; its codewords are pairwise
/// at distance >= 2, and every non-codeword has exactly one codeword
/// neighbor per coordinate direction.
pub fn sum_code(m: u32, n: usize) -> Result<Code> {
    if m < 2 {
        return Err(Error::RadixTooSmall(m));
    }
    if n < 2 {
        return Err(Error::TooFewCoordinates { needed: 2, got: n });
    }
    let radices = Radices::new(vec![m; n])?;
    let mut code = Code::new(radices.clone());
    for v in radices.vertices() {
        let prefix: u32 = v.coords()[..n - 1]
            .iter()
            .fold(0, |acc, &c| (acc + c) % m);
        if v.coords()[n - 1] == prefix {
            code.insert(&v)?;
        }
    }
    debug_assert_eq!(code.len(), radices.vertex_count() / m as usize);
    debug_assert!(crate::algebra::is_subgroup(&code));
    debug_assert_eq!(codesets::min_pairwise_distance(&code), Ok(2));
    Ok(code)
}

/// The code { (a, c) : a in F_p, c in C } over one more coordinate.
///
/// The free coordinate is prepended, which keeps the indices of C's
/// members stable within each block. The result has p times as many
/// members; it is a subgroup iff C is.
pub fn direct_sum_extend(c: &Code) -> Result<Code> {
    let p = uniform_prime_radix(c.radices())?;
    let mut dims = vec![p];
    dims.extend_from_slice(c.radices().dims());
    let extended = Radices::new(dims)?;
    let block = c.radices().vertex_count();
    let mut out = Code::new(extended);
    for a in 0..p as usize {
        for idx in c.indices() {
            out.insert_index(a * block + idx)?;
        }
    }
    Ok(out)
}

/// True iff every codeword has a second codeword in its closed
/// neighborhood, i.e. |J(u)| > 1 for all codewords u.
///
/// For an identifying code over uniform prime radix, this holds exactly
/// when `direct_sum_extend` yields an identifying code again: a codeword u
/// with J(u) = {u} makes (a, u) and (a', u) indistinguishable after
/// extension, and conversely. The input must itself be identifying.
pub fn extension_preserves_identifying(c: &Code) -> Result<bool> {
    uniform_prime_radix(c.radices())?;
    if !codesets::is_identifying(c) {
        return Err(Error::NotIdentifying);
    }
    Ok(c.indices().all(|idx| codesets::j_indices(c, idx).len() > 1))
}

fn uniform_prime_radix(radices: &Radices) -> Result<u32> {
    let Some(m) = radices.uniform() else {
        return Err(Error::UnsupportedScope("the radices are not uniform".into()));
    };
    if !arith::is_prime(m) {
        return Err(Error::NotPrime(m));
    }
    Ok(m)
}

/// Lower bound ceil(mu*q / (delta + 1 + mu - nu)) on the size of an
/// identifying code, valid whenever every J-set has size at least mu and
/// any two closed neighborhoods share at most nu codewords beyond what
/// separation requires. mu = nu = 1 gives the plain domination bound.
pub fn generic_id_lower_bound(q: u128, delta: u128, mu: u128, nu: u128) -> Result<u128> {
    if mu < 1 || nu < 1 || delta < 1 {
        return Err(Error::InvalidArgument(
            "the bound needs mu, nu and delta all at least 1".into(),
        ));
    }
    let denom = (delta + 1 + mu).checked_sub(nu).unwrap_or(0);
    if denom == 0 {
        return Err(Error::InvalidArgument("the bound denominator must be positive".into()));
    }
    let num = mu.checked_mul(q).ok_or(Error::Overflow("bound numerator"))?;
    Ok(arith::ceil_div(num, denom))
}

/// Lower bound ceil(3 * m_1...m_n / (m_1+...+m_n - n + 3)) on the size of
/// a group identifying code, for n >= 3 coordinates all of radix >= 3.
pub fn gid_lower_bound(radices: &Radices) -> Result<u128> {
    let n = radices.n();
    if n < 3 {
        return Err(Error::UnsupportedScope(format!(
            "the bound needs at least 3 coordinates, got {n}"
        )));
    }
    if let Some(&m) = radices.dims().iter().find(|&&m| m < 3) {
        return Err(Error::UnsupportedScope(format!("the bound needs every radix >= 3, got {m}")));
    }
    let q = radices
        .dims()
        .iter()
        .try_fold(1u128, |acc, &m| acc.checked_mul(m as u128))
        .ok_or(Error::Overflow("vertex count"))?;
    let delta = radices.degree() as u128;
    generic_id_lower_bound(q, delta, 3, 1)
}

/// Lower and upper bounds on the minimum group identifying code of the
/// uniform Hamming graph with n >= 3 coordinates of radix m >= 3:
/// (ceil(3m^n / (n(m-1) + 3)), m^{n-1}). For n = 3 the two coincide at m^2.
pub fn gid_bounds(m: u32, n: usize) -> Result<(u128, u128)> {
    if n < 3 {
        return Err(Error::UnsupportedScope(format!(
            "the bounds need at least 3 coordinates, got {n}"
        )));
    }
    if m < 3 {
        return Err(Error::UnsupportedScope(format!("the bounds need radix >= 3, got {m}")));
    }
    let q = arith::pow_u128(m as u128, n as u32).ok_or(Error::Overflow("vertex count"))?;
    let denom = n as u128 * (m as u128 - 1) + 3;
    let lower = arith::ceil_div(3 * q, denom);
    let upper = q / m as u128;
    debug_assert!(lower <= upper);
    Ok((lower, upper))
}

/// Smallest dimension defect of a linear identifying code: the minimum
/// size is p^kappa(n, p), and a minimum code has dimension n - r where r
/// is located by exact interval arithmetic.
///
/// For n >= 3, r is the unique value with
/// 3(p^r - 1)/(p - 1) <= n <= 3(p^r - 1)/(p - 1) + 3p^r - 1; consecutive
/// intervals tile the lengths from 3 up, so r exists and is unique. For
/// n = 2 the answer is 2: no proper subspace of F_p^2 can identify.
pub fn kappa(n: usize, p: u32) -> Result<usize> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n < 2 {
        return Err(Error::NotTwinFree);
    }
    if n == 2 {
        return Ok(2);
    }
    let p = p as u128;
    let n128 = n as u128;
    let mut r = 1u32;
    loop {
        let pr = arith::pow_u128(p, r).ok_or(Error::Overflow("interval endpoint"))?;
        let low = 3 * (pr - 1) / (p - 1);
        let high = low + 3 * pr - 1;
        debug_assert_eq!(high + 1, 3 * (pr * p - 1) / (p - 1));
        if (low..=high).contains(&n128) {
            return Ok(n - r as usize);
        }
        r += 1;
    }
}

/// Smallest k with p^k * (n(p-1) + 3) >= 3p^n, i.e. the exact-arithmetic
/// form of ceil(log_p(3p^n / (n(p-1) + 3))). Always at most kappa(n, p).
pub fn kappa_lower_bound(n: usize, p: u32) -> Result<usize> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n < 3 {
        return Err(Error::UnsupportedScope(format!(
            "the bound needs at least 3 coordinates, got {n}"
        )));
    }
    let target = arith::pow_u128(p as u128, n as u32)
        .and_then(|q| q.checked_mul(3))
        .ok_or(Error::Overflow("bound target"))?;
    let mut acc = n as u128 * (p as u128 - 1) + 3;
    let mut k = 0;
    while acc < target {
        acc = acc.checked_mul(p as u128).ok_or(Error::Overflow("bound step"))?;
        k += 1;
    }
    Ok(k)
}

/// Checks kappa(n+1, p) <= kappa(n, p) + 1: lengthening a word by one
/// coordinate never costs more than one dimension.
pub fn kappa_monotonicity_check(n: usize, p: u32) -> Result<bool> {
    Ok(kappa(n + 1, p)? <= kappa(n, p)? + 1)
}

/// Exact minimum identifying code size for a product of two complete
/// graphs: max(2m - k, m + floor(k/2)) for radices m >= k >= 2. At m = k
/// this is floor(3m/2); exhaustive search over the 3x3 case confirms the
/// floor (a 4-element code identifies K_3 x K_3).
pub fn two_factor_gamma_id(a: u32, b: u32) -> Result<u128> {
    if a < 2 || b < 2 {
        return Err(Error::RadixTooSmall(a.min(b)));
    }
    let (m, k) = (a.max(b) as u128, a.min(b) as u128);
    Ok((2 * m - k).max(m + k / 2))
}
