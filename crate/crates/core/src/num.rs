//   Copyright 2026 plvo developers
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

//! Exact rational scalars and dense vectors.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational in canonical form (reduced, positive denominator).
pub type Rational = BigRational;

/// Dense rational vector.
pub type Vector = Vec<Rational>;

#[inline]
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, panics on a zero denominator.
#[inline]
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn vector(values: &[i64]) -> Vector {
    values.iter().map(|&v| int(v)).collect()
}

pub fn zeros(n: usize) -> Vector {
    (0..n).map(|_| Rational::zero()).collect()
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Rational::one();
    v
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rational], s: &Rational) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn neg(a: &[Rational]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// `a + s * b`
pub fn axpy(a: &[Rational], s: &Rational, b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

/// Scales `a` so that its first nonzero entry has absolute value one. Returns the
/// positive factor used, or `None` for the zero vector.
pub fn normalizer(a: &[Rational]) -> Option<Rational> {
    a.iter().find(|x| !x.is_zero()).map(|x| x.abs().recip())
}

/// Concatenation `[a, b]`.
pub fn concat(a: &[Rational], b: &[Rational]) -> Vector {
    let mut v = Vec::with_capacity(a.len() + b.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    v
}
