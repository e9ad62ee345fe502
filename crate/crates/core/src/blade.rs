//! Exact arithmetic on signed basis blades of the Clifford algebra C_k
//! with relations e_i^2 = -1 and e_i e_j = -e_j e_i.
//!
//! A blade is a product of distinct generators in ascending index order
//! together with a sign. Every element this crate ever needs (generators,
//! double products, the volume element) is a single signed blade, so no
//! linear-combination type exists.

use std::fmt;

/// Maximum number of generators; bounded by the mask word width.
pub const MAX_GENERATORS: usize = 63;

/// A signed product of distinct Clifford generators.
///
/// `mask` bit `i` set means generator `e_{i+1}` appears. The empty mask with
/// sign `+1` is the multiplicative identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade {
    k: usize,
    mask: u64,
    sign: i8,
}

impl Blade {
    /// The identity blade (empty product) in C_k.
    pub fn one(k: usize) -> Self {
        Self::new(k, 0, 1)
    }

    /// Generator `e_{i+1}` of C_k (`i` is 0-based).
    pub fn generator(k: usize, i: usize) -> Self {
        assert!(i < k, "generator index {i} out of range for k = {k}");
        Self::new(k, 1 << i, 1)
    }

    pub fn new(k: usize, mask: u64, sign: i8) -> Self {
        assert!(k <= MAX_GENERATORS, "k = {k} exceeds mask width");
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        assert!(mask >> k == 0, "mask uses generators beyond k = {k}");
        Blade { k, mask, sign }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// Clifford product. The result mask is the symmetric difference; the
    /// sign picks up one transposition factor per out-of-order generator
    /// pair and one factor -1 per repeated generator.
    pub fn mul(&self, other: &Blade) -> Blade {
        assert_eq!(self.k, other.k, "blade product across different C_k");
        let mut swaps = 0u32;
        let mut bits = other.mask;
        while bits != 0 {
            let j = bits.trailing_zeros();
            // generators of `self` with index strictly above j must be
            // stepped over to put e_{j+1} in place
            swaps += (self.mask >> (j + 1)).count_ones();
            bits &= bits - 1;
        }
        let repeated = (self.mask & other.mask).count_ones();
        let flip = (swaps + repeated) % 2 == 1;
        let sign = self.sign * other.sign * if flip { -1 } else { 1 };
        Blade {
            k: self.k,
            mask: self.mask ^ other.mask,
            sign,
        }
    }

    /// Grading: number of generators mod 2.
    pub fn parity(&self) -> u8 {
        (self.mask.count_ones() % 2) as u8
    }

    pub fn negated(&self) -> Blade {
        Blade {
            sign: -self.sign,
            ..*self
        }
    }
}

/// The volume element e_1 e_2 ... e_k with sign +1.
pub fn volume_element(k: usize) -> Blade {
    assert!(k >= 1, "volume element needs k >= 1");
    assert!(k <= MAX_GENERATORS);
    let mask = if k == MAX_GENERATORS {
        u64::MAX >> 1
    } else {
        (1u64 << k) - 1
    };
    Blade::new(k, mask, 1)
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.mask == 0 {
            return write!(f, "1");
        }
        let mut bits = self.mask;
        while bits != 0 {
            let i = bits.trailing_zeros();
            write!(f, "e{}", i + 1)?;
            bits &= bits - 1;
        }
        Ok(())
    }
}
