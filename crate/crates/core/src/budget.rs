use num_bigint::BigUint;

use crate::{Error, Result};

/// Resource caps for arbitrary-precision computations.
///
/// `max_bits` caps the bit length of any produced integer, `max_steps` caps
/// the number of recursive evaluation steps. Exceeding either is an error,
/// never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_bits: u64,
    pub max_steps: u64,
}

impl Budget {
    pub const fn new(max_bits: u64, max_steps: u64) -> Self {
        Budget { max_bits, max_steps }
    }

    pub fn check(&self, value: &BigUint) -> Result<()> {
        if value.bits() > self.max_bits {
            Err(Error::BudgetExceeded)
        } else {
            Ok(())
        }
    }

    /// `base^exp`, refusing up front when the result cannot fit.
    pub fn pow(&self, base: &BigUint, exp: &BigUint) -> Result<BigUint> {
        use num_traits::{One, ToPrimitive, Zero};
        if exp.is_zero() || base.is_one() {
            return Ok(BigUint::one());
        }
        if base.is_zero() {
            return Ok(BigUint::zero());
        }
        // bits(base^e) >= (bits(base) - 1) * e + 1
        let e = exp.to_u64().ok_or(Error::BudgetExceeded)?;
        let lower = (base.bits() - 1).saturating_mul(e).saturating_add(1);
        if lower > self.max_bits {
            return Err(Error::BudgetExceeded);
        }
        let e32 = u32::try_from(e).map_err(|_| Error::BudgetExceeded)?;
        let out = base.pow(e32);
        self.check(&out)?;
        Ok(out)
    }
}

impl Default for Budget {
    /// Room for `2_4(4)`-scale towers (65536 bits).
    fn default() -> Self {
        Budget { max_bits: 1 << 17, max_steps: 1 << 22 }
    }
}

/// Step counter shared by one recursive evaluation.
#[derive(Debug)]
pub(crate) struct Meter {
    left: u64,
}

impl Meter {
    pub(crate) fn new(budget: &Budget) -> Self {
        Meter { left: budget.max_steps }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::BudgetExceeded);
        }
        self.left -= 1;
        Ok(())
    }
}
