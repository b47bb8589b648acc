//! Ranking and unranking in all four listings.
//!
//! Words are read left to right with 0-based positions `w[0] .. w[n-1]`, which
//! is exactly the text order stored in [`QuatString`].

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::codes::{count, ListingKind};
use crate::error::{out_of_range, Result};
use crate::state::QuatString;

/// `floor(4^(k+1) / 15)` (OEIS A033114).
pub fn a033114(k: usize) -> BigUint {
    num_traits::pow(BigUint::from(4u32), k + 1) / 15u32
}

/// `(3^k - 1) / 2` (OEIS A003462).
pub fn a003462(k: usize) -> BigUint {
    (num_traits::pow(BigUint::from(3u32), k) - 1u32) / 2u32
}

pub fn rank(kind: ListingKind, q: &QuatString) -> Result<BigUint> {
    kind.require(q)?;
    let w = q.digits();
    Ok(match kind {
        ListingKind::Brgc => rank_reflected(w, 2),
        ListingKind::Quat => rank_reflected(w, 4),
        ListingKind::Long => rank_long(w),
        ListingKind::Short => rank_short(w),
    })
}

/// Reflected-code rank: a digit is complemented when the digits to its left
/// have odd sum, then the result is read in base `radix`.
fn rank_reflected(w: &[u8], radix: u8) -> BigUint {
    let top = radix - 1;
    let mut left = 0u32;
    let a: Vec<u8> = w
        .iter()
        .map(|&d| {
            let x = if left.is_multiple_of(2) { d } else { top - d };
            left += d as u32;
            x
        })
        .collect();
    BigUint::from_radix_be(&a, radix as u32).expect("digits below radix")
}

fn lead(w: &[u8]) -> Option<usize> {
    w.iter().position(|&d| d != 0)
}

/// Algorithm 1: rank in the longest solution.
///
/// The printed pseudocode uses `m` both for the index of the leftmost nonzero
/// letter and for the per-step multiplier; they are `lead` and `mult` here.
/// The sum `s = sum c_i * A033114(n-2-i)` is not formed with big products:
/// since `A033114(k) = (4^(k+1) - r_k) / 15` with `r_k` = 4 (k even) or 1
/// (k odd), `15 s = 16 X - T` where `X` is built Horner-style.
fn rank_long(w: &[u8]) -> BigUint {
    let n = w.len();
    let rq = rank_reflected(w, 4);
    let Some(lead) = lead(w) else {
        return rq;
    };
    if n < 3 || lead > n - 3 {
        return rq;
    }
    let mut b = BigUint::zero();
    let mut l: u32 = 0;
    let mut x = BigUint::zero();
    let mut t = BigUint::zero();
    for i in lead..=n - 3 {
        let mult: u32 = if l % 2 == 1 || (i > lead && w[i - 1] == 3) {
            (4 - w[i] as u32) / 2
        } else {
            (w[i] as u32).div_ceil(2)
        };
        l += w[i] as u32;
        let c = if i == lead {
            BigUint::from(mult)
        } else if i == lead + 1 {
            b = BigUint::from(2 * w[lead] as u32);
            &b + mult
        } else {
            let p: u32 = if (l - w[i] as u32 - w[i - 1] as u32) % 2 == 1 || (i > 1 && w[i - 2] == 3) {
                2 * 2u32.saturating_sub(w[i - 1] as u32)
            } else {
                2 * w[i - 1] as u32
            };
            b = &b * 3u32 + p;
            &b + mult
        };
        let k = n - 2 - i;
        x = (x << 2) + &c;
        t += if k.is_multiple_of(2) { c << 2 } else { c };
    }
    // x = sum c_i 4^(k_i - 1), the last k being 1
    let s = ((x << 4) - t) / 15u32;
    rq - s * 6u32
}

/// Algorithm 2: rank in the shortest solution.
///
/// As in [`rank_long`] the clobbered `m` is split into `lead` and `mult`.
/// With `A003462(k) = (3^k - 1) / 2`, `2 s = 3 Y - sum a_i` where `Y` is built
/// Horner-style.
fn rank_short(w: &[u8]) -> BigUint {
    let n = w.len();
    let rl = rank_long(w);
    let Some(lead) = lead(w) else {
        return rl;
    };
    if n < 3 || lead > n - 3 {
        return rl;
    }
    let mut a = BigUint::zero();
    let mut b = BigUint::zero();
    let mut l: u32 = 0;
    let mut y = BigUint::zero();
    let mut sum_a = BigUint::zero();
    for i in lead..=n - 3 {
        let after_03 = i > 1 && w[i - 2] != 0 && w[i - 1] == 0 && w[i] == 3;
        let mult: u32 = if l % 2 == 1 || (i > lead && w[i - 1] == 3) || after_03 {
            (3 - w[i] as u32) / 2
        } else {
            w[i] as u32 / 2
        };
        l += w[i] as u32;
        if i == lead {
            // the first term is mult * A003462 and does not touch `a`
            y = (y * 3u32) + mult;
            sum_a += mult;
            continue;
        } else if i == lead + 1 {
            b = BigUint::from(w[lead]);
            a = &b + mult;
        } else if w[i] == 3 && (w[i - 1] == 0 || w[i - 1] == 3) {
            a = (a << 1) + 1u32;
        } else {
            let x = (l - w[i] as u32 - w[i - 1] as u32) % 2;
            let p: u32 = if (x == 1 && w[i - 1] == 1) || (x == 0 && w[i - 1] == 2) {
                2
            } else {
                1
            };
            b = (b << 1) + p;
            a = &b + mult;
        }
        y = (y * 3u32) + &a;
        sum_a += &a;
    }
    let s = (y * 3u32 - sum_a) / 2u32;
    rl - s * 6u32
}

/// `|rank(w) - rank(v)|`: the number of moves between them along the listing.
pub fn distance(kind: ListingKind, w: &QuatString, v: &QuatString) -> Result<BigUint> {
    let a = rank(kind, w)?;
    let b = rank(kind, v)?;
    Ok(if a >= b { a - b } else { b - a })
}

/// The state at rank `r` of the listing of length-`n` words.
pub fn unrank(kind: ListingKind, n: usize, r: &BigUint) -> Result<QuatString> {
    if n == 0 {
        return Err(out_of_range("n", n, ">= 1"));
    }
    let total = count(kind, n);
    if r >= &total {
        return Err(out_of_range("rank", r, format!("0..{total}")));
    }
    let digits = match kind {
        ListingKind::Brgc => unrank_reflected(n, r, 2),
        ListingKind::Quat => unrank_reflected(n, r, 4),
        ListingKind::Long => unrank_long(n, r.clone(), total),
        ListingKind::Short => unrank_short(n, r.clone()),
    };
    Ok(QuatString::from_digits_unchecked(digits))
}

fn unrank_reflected(n: usize, r: &BigUint, radix: u8) -> Vec<u8> {
    let top = radix - 1;
    let mut a = r.to_radix_be(radix as u32);
    if a.len() < n {
        let mut padded = vec![0; n - a.len()];
        padded.extend_from_slice(&a);
        a = padded;
    }
    let mut left = 0u32;
    a.iter()
        .map(|&x| {
            let d = if left.is_multiple_of(2) { x } else { top - x };
            left += d as u32;
            d
        })
        .collect()
}

/// Descends `LONG(k) = 0.L, 1.rev L, 2.L, 3^k`.
fn unrank_long(n: usize, mut r: BigUint, mut size: BigUint) -> Vec<u8> {
    let mut out = Vec::with_capacity(n);
    let mut reversed = false;
    for k in (1..=n).rev() {
        if reversed {
            r = &size - 1u32 - r;
        }
        if k == 1 {
            out.push(digit_of(&r));
            break;
        }
        let sub = (&size - 1u32) / 3u32;
        if r == &sub * 3u32 {
            out.extend(std::iter::repeat_n(3, k));
            break;
        }
        let (block, rest) = div_small(&r, &sub);
        out.push(block);
        r = rest;
        reversed = block == 1;
        size = sub;
    }
    out
}

/// Descends `SHORT(k) = 0.SHORT(k-1), 1.rev core(k-1), 2.core(k-1), 3^k` and
/// `core(k) = 03^(k-1), 1.rev core(k-1), 2.core(k-1), 3^k`.
fn unrank_short(n: usize, mut r: BigUint) -> Vec<u8> {
    let mut out = Vec::with_capacity(n);
    let mut k = n;
    let mut in_core = false;
    let mut reversed = false;
    loop {
        let core_size = core_count(k);
        if reversed {
            r = &core_size - 1u32 - r;
        }
        if k == 1 {
            out.push(digit_of(&r));
            return out;
        }
        let sub_core = core_count(k - 1);
        // offset of the 1-block within the current list
        let head = if in_core {
            BigUint::one()
        } else {
            count(ListingKind::Short, k - 1)
        };
        if r < head {
            if in_core {
                out.push(0);
                out.extend(std::iter::repeat_n(3, k - 1));
                return out;
            }
            out.push(0);
        } else {
            r -= &head;
            if r < sub_core {
                out.push(1);
                reversed = true;
                in_core = true;
            } else {
                r -= &sub_core;
                if r < sub_core {
                    out.push(2);
                    reversed = false;
                    in_core = true;
                } else {
                    out.extend(std::iter::repeat_n(3, k));
                    return out;
                }
            }
        }
        k -= 1;
    }
}

/// `|core(k)| = 3 * 2^k - 2`.
fn core_count(k: usize) -> BigUint {
    (BigUint::one() << k) * 3u32 - 2u32
}

fn digit_of(r: &BigUint) -> u8 {
    r.to_u32_digits().first().copied().unwrap_or(0) as u8
}

/// `(r / sub, r % sub)` where the quotient is known to be below 3.
fn div_small(r: &BigUint, sub: &BigUint) -> (u8, BigUint) {
    let mut q = 0u8;
    let mut rest = r.clone();
    while &rest >= sub {
        rest -= sub;
        q += 1;
    }
    (q, rest)
}
