//! Exact rational scalars and a couple of small integer helpers.

use alloc::string::String;
use alloc::{format, vec::Vec};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number. All arithmetic in this crate is
/// exact; floats never appear.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn rfrac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical rendering: `2`, `-1/3`, `0`.
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Binomial coefficient as `i128`; small arguments only.
pub fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i128 / (j + 1) as i128;
    }
    acc
}

/// Sum of the coordinates of a rational vector.
pub fn coord_sum(coords: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for c in coords {
        acc += c;
    }
    acc
}

/// True if every coordinate is `>= 0`.
pub fn all_nonnegative(coords: &[Rat]) -> bool {
    coords.iter().all(|c| !c.is_negative())
}

/// Render an integer polynomial `sum c_k q^(step*k)` in the variable `q`.
/// Used for Hilbert numerators and Poincaré polynomials; `step = 2` gives the
/// cohomological grading.
pub fn int_poly_to_string(coeffs: &[i128], step: usize) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let e = k * step;
        let mag = c.unsigned_abs();
        let body = if e == 0 {
            format!("{mag}")
        } else {
            let var = if e == 1 {
                String::from("q")
            } else {
                format!("q^{e}")
            };
            if mag == 1 {
                var
            } else {
                format!("{mag}*{var}")
            }
        };
        if parts.is_empty() {
            parts.push(if c < 0 { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {}", if c < 0 { "-" } else { "+" }, body));
        }
    }
    if parts.is_empty() {
        String::from("0")
    } else {
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10, 5), 252);
    }

    #[test]
    fn rendering() {
        assert_eq!(rat_to_string(&rfrac(-1, 3)), "-1/3");
        assert_eq!(rat_to_string(&rint(7)), "7");
        assert_eq!(int_poly_to_string(&[1, 2, 1], 2), "1 + 2*q^2 + q^4");
        assert_eq!(int_poly_to_string(&[1, -1], 1), "1 - q");
        assert_eq!(int_poly_to_string(&[0], 2), "0");
    }
}
