//! Classical group instances of type B, C, D and their torus data.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Dynkin type of a classical group family.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum ClassicalFamily {
    B,
    C,
    D,
}

impl ClassicalFamily {
    pub fn letter(self) -> char {
        match self {
            ClassicalFamily::B => 'B',
            ClassicalFamily::C => 'C',
            ClassicalFamily::D => 'D',
        }
    }

    /// Smallest rank at which the family is defined here (`D_1` is excluded).
    pub fn min_rank(self) -> usize {
        match self {
            ClassicalFamily::D => 2,
            _ => 1,
        }
    }
}

impl FromStr for ClassicalFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(ClassicalFamily::B),
            "C" | "c" => Ok(ClassicalFamily::C),
            "D" | "d" => Ok(ClassicalFamily::D),
            other => Err(Error::InvalidGroup(other.to_string())),
        }
    }
}

/// A classical group named by Dynkin type and subscript: `B_r` is
/// `O_{2r+1}`, `C_r` is `Sp_{2r}`, `D_r` is `O_{2r}`. The subscript equals
/// the rank of the Lie algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GroupInstance {
    family: ClassicalFamily,
    rank: usize,
}

impl GroupInstance {
    pub fn new(family: ClassicalFamily, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::InvalidGroup(format!(
                "{}{} (rank must be at least {})",
                family.letter(),
                rank,
                family.min_rank()
            )));
        }
        Ok(GroupInstance { family, rank })
    }

    pub fn family(&self) -> ClassicalFamily {
        self.family
    }

    /// Rank of the Lie algebra; also the arity of torus characters.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Name of the underlying matrix group, e.g. `Sp6` for `C3`.
    pub fn matrix_group(&self) -> String {
        match self.family {
            ClassicalFamily::B => format!("O{}", 2 * self.rank + 1),
            ClassicalFamily::C => format!("Sp{}", 2 * self.rank),
            ClassicalFamily::D => format!("O{}", 2 * self.rank),
        }
    }

    /// The torus eigenvalues of the vector representation, as monomials in
    /// `rank` variables. This is the alphabet at which stable symmetric
    /// functions specialize to finite-rank characters.
    pub fn torus_alphabet(&self) -> Vec<LaurentPoly> {
        let r = self.rank;
        let mut out = Vec::new();
        for i in 0..r {
            let mut e = vec![0i64; r];
            e[i] = 1;
            out.push(LaurentPoly::monomial_unit(r, e.clone()));
            e[i] = -1;
            out.push(LaurentPoly::monomial_unit(r, e));
        }
        if self.family == ClassicalFamily::B {
            out.push(LaurentPoly::one(r));
        }
        out
    }
}

impl fmt::Display for GroupInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for GroupInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() < 2 {
            return Err(Error::InvalidGroup(s.to_string()));
        }
        let family: ClassicalFamily = s[..1].parse()?;
        let rank: usize = s[1..]
            .parse()
            .map_err(|_| Error::InvalidGroup(s.to_string()))?;
        GroupInstance::new(family, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_names() {
        let g: GroupInstance = "C3".parse().unwrap();
        assert_eq!(g.matrix_group(), "Sp6");
        assert_eq!(g.rank(), 3);
        let g: GroupInstance = "B2".parse().unwrap();
        assert_eq!(g.matrix_group(), "O5");
        let g: GroupInstance = "D4".parse().unwrap();
        assert_eq!(g.matrix_group(), "O8");
        assert_eq!(g.to_string(), "D4");
        assert!("D1".parse::<GroupInstance>().is_err());
        assert!("E6".parse::<GroupInstance>().is_err());
        assert!("B".parse::<GroupInstance>().is_err());
    }

    #[test]
    fn alphabet_sizes() {
        assert_eq!("C3".parse::<GroupInstance>().unwrap().torus_alphabet().len(), 6);
        assert_eq!("B2".parse::<GroupInstance>().unwrap().torus_alphabet().len(), 5);
        assert_eq!("D3".parse::<GroupInstance>().unwrap().torus_alphabet().len(), 6);
    }
}
