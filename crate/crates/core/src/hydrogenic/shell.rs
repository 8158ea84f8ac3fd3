use serde::{Deserialize, Serialize};

use crate::amath::HalfInt;
use crate::{Error, Result};

/// Largest principal quantum number the tables are sized for.
pub const MAX_N: u32 = 200;

/// One energy shell: principal quantum number `n` and nuclear charge `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShellSpec {
    n: u32,
    z: u32,
}

impl ShellSpec {
    pub fn new(n: u32, z: u32) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::Domain(format!("n = {n} outside 1..={MAX_N}")));
        }
        if z == 0 {
            return Err(Error::Domain("Z must be at least 1".into()));
        }
        Ok(ShellSpec { n, z })
    }

    /// Hydrogen shell.
    pub fn hydrogen(n: u32) -> Result<Self> {
        Self::new(n, 1)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn z(&self) -> u32 {
        self.z
    }

    /// `j = (n - 1) / 2`, the spin of each of the two SO(3) factors.
    pub fn j(&self) -> HalfInt {
        HalfInt::from_twice(self.n as i32 - 1)
    }

    pub fn check_l(&self, l: u32) -> Result<()> {
        if l >= self.n {
            Err(Error::Domain(format!("l = {l} outside 0..{} for n = {}", self.n, self.n)))
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ShellSpec::new(0, 1).is_err());
        assert!(ShellSpec::new(1, 0).is_err());
        assert!(ShellSpec::new(201, 1).is_err());
        let s = ShellSpec::new(141, 1).unwrap();
        assert_eq!(s.j(), HalfInt::from_int(70));
        assert_eq!(ShellSpec::hydrogen(2).unwrap().j(), HalfInt::from_twice(1));
        assert!(s.check_l(140).is_ok());
        assert!(s.check_l(141).is_err());
    }
}
