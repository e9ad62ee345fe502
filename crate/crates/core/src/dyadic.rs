//! Exact dyadic rationals: integers divided by a power of two. These are
//! the only denominators the group law ever produces, so a (numerator,
//! exponent) pair with exact comparisons replaces floating point entirely.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;

/// num / 2^exp, normalized so num is odd or the value is exactly zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };
    pub const HALF: Dyadic = Dyadic { num: 1, exp: 1 };

    pub fn new(num: i64, exp: u32) -> Self {
        Dyadic { num, exp }.normalized()
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic { num: n, exp: 0 }
    }

    fn normalized(mut self) -> Self {
        if self.num == 0 {
            self.exp = 0;
            return self;
        }
        while self.exp > 0 && self.num % 2 == 0 {
            self.num /= 2;
            self.exp -= 1;
        }
        self
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// True when the value is an integer.
    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    /// True when the value lies in (1/2) Z.
    pub fn is_half_integer(&self) -> bool {
        self.exp <= 1
    }

    pub fn halved(&self) -> Self {
        Dyadic {
            num: self.num,
            exp: self.exp + 1,
        }
        .normalized()
    }

    pub fn doubled(&self) -> Self {
        if self.exp > 0 {
            Dyadic {
                num: self.num,
                exp: self.exp - 1,
            }
        } else {
            Dyadic {
                num: self.num.checked_mul(2).expect("dyadic overflow"),
                exp: 0,
            }
        }
    }

    /// Largest integer not exceeding the value. Arithmetic shift right
    /// rounds toward negative infinity, which is exactly floor here.
    pub fn floor(&self) -> i64 {
        self.num >> self.exp
    }

    /// Exact integer value; panics unless the value is an integer.
    pub fn to_int(&self) -> i64 {
        assert!(self.is_integer(), "dyadic {self} is not an integer");
        self.num
    }

    fn to_i128_at(self, exp: u32) -> i128 {
        debug_assert!(exp >= self.exp);
        (self.num as i128) << (exp - self.exp)
    }

    pub fn cmp_int(&self, n: i64) -> Ordering {
        self.cmp(&Dyadic::from_int(n))
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        let num = self.to_i128_at(exp) + rhs.to_i128_at(exp);
        Dyadic {
            num: i64::try_from(num).expect("dyadic overflow"),
            exp,
        }
        .normalized()
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    // numerators multiply, denominator exponents add
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Dyadic) -> Dyadic {
        Dyadic {
            num: self.num.checked_mul(rhs.num).expect("dyadic overflow"),
            exp: self.exp + rhs.exp,
        }
        .normalized()
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        self.to_i128_at(exp).cmp(&other.to_i128_at(exp))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u64 << self.exp)
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Parses "n" or "n/d" with d a positive power of two.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |reason| Error::BadDyadic {
            input: s.to_string(),
            reason,
        };
        match s.split_once('/') {
            None => {
                let n = s.trim().parse::<i64>().map_err(|_| bad("not an integer"))?;
                Ok(Dyadic::from_int(n))
            }
            Some((num, den)) => {
                let num = num.trim().parse::<i64>().map_err(|_| bad("bad numerator"))?;
                let den = den.trim().parse::<u64>().map_err(|_| bad("bad denominator"))?;
                if den == 0 || !den.is_power_of_two() {
                    return Err(bad("denominator must be a positive power of two"));
                }
                Ok(Dyadic::new(num, den.trailing_zeros()))
            }
        }
    }
}
