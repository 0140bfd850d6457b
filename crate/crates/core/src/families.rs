//! Named families of Nakayama algebras with known homological behaviour.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Algebra;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `(2^d, 1)`, `d >= 1`.
    Ladder { d: u32 },
    /// `((n+1)^(n-1), n)`, `n >= 2`.
    Gustafson { n: u32 },
    /// `((2^(d-1), 3)^a, 2^d, 1)`, `a >= 1`, `d >= 2`.
    Comb { a: u32, d: u32 },
    /// `(n^(alpha n), n, n-1, ..., 1)`, `n >= 2`.
    Staircase { n: u32, alpha: u32 },
    /// `[X, Y]` with `X = (j+1)n - j` and `Y = jn - (j-1)`, `j >= 1`, `n >= 2`.
    Bracket { j: u32, n: u32 },
    /// `(X^(alpha X), [X, Y], Y^(beta Y))` with `X`, `Y` as for the bracket.
    Stacked {
        j: u32,
        n: u32,
        alpha: u32,
        beta: u32,
    },
}

impl Family {
    pub fn from_params(name: &str, params: &[u32]) -> Result<Family> {
        let want = |k: usize| -> Result<()> {
            if params.len() != k {
                return Err(Error::BadParams(format!(
                    "family {name} takes {k} parameters, got {}",
                    params.len()
                )));
            }
            Ok(())
        };
        let f = match name.parse::<FamilyName>()? {
            FamilyName::Ladder => {
                want(1)?;
                Family::Ladder { d: params[0] }
            }
            FamilyName::Gustafson => {
                want(1)?;
                Family::Gustafson { n: params[0] }
            }
            FamilyName::Comb => {
                want(2)?;
                Family::Comb {
                    a: params[0],
                    d: params[1],
                }
            }
            FamilyName::Staircase => {
                want(2)?;
                Family::Staircase {
                    n: params[0],
                    alpha: params[1],
                }
            }
            FamilyName::Bracket => {
                want(2)?;
                Family::Bracket {
                    j: params[0],
                    n: params[1],
                }
            }
            FamilyName::Stacked => {
                want(4)?;
                Family::Stacked {
                    j: params[0],
                    n: params[1],
                    alpha: params[2],
                    beta: params[3],
                }
            }
        };
        Ok(f)
    }

    pub fn series(&self) -> Result<Vec<u32>> {
        let bad = |msg: String| Err(Error::BadParams(msg));
        match *self {
            Family::Ladder { d } => {
                if d < 1 {
                    return bad("ladder needs d >= 1".into());
                }
                let mut s = vec![2; d as usize];
                s.push(1);
                Ok(s)
            }
            Family::Gustafson { n } => {
                if n < 2 {
                    return bad("gustafson needs n >= 2".into());
                }
                let mut s = vec![n + 1; n as usize - 1];
                s.push(n);
                Ok(s)
            }
            Family::Comb { a, d } => {
                if a < 1 || d < 2 {
                    return bad("comb needs a >= 1 and d >= 2".into());
                }
                let mut s = Vec::new();
                for _ in 0..a {
                    s.extend(std::iter::repeat_n(2, d as usize - 1));
                    s.push(3);
                }
                s.extend(std::iter::repeat_n(2, d as usize));
                s.push(1);
                Ok(s)
            }
            Family::Staircase { n, alpha } => {
                if n < 2 {
                    return bad("staircase needs n >= 2".into());
                }
                let mut s = vec![n; (alpha * n) as usize];
                s.extend((1..=n).rev());
                Ok(s)
            }
            Family::Bracket { j, n } => {
                let (x, y) = bracket_bounds(j, n)?;
                Ok(bracket(x, y))
            }
            Family::Stacked { j, n, alpha, beta } => {
                let (x, y) = bracket_bounds(j, n)?;
                let mut s = vec![x; (alpha * x) as usize];
                s.extend(bracket(x, y));
                s.extend(std::iter::repeat_n(y, (beta * y) as usize));
                Ok(s)
            }
        }
    }

    pub fn algebra(&self) -> Result<Algebra> {
        Algebra::from_series(self.series()?)
    }

    /// Global (and dominant) dimension the family is known to have, where
    /// it is given by a closed formula.
    pub fn expected_gldim(&self) -> Option<u32> {
        match *self {
            Family::Ladder { d } => Some(d),
            Family::Gustafson { n } => Some(2 * n - 2),
            Family::Comb { d, .. } => Some(d),
            Family::Staircase { alpha, .. } => Some(2 * alpha + 1),
            Family::Bracket { j, .. } => Some(2 * j + 1),
            Family::Stacked { .. } => None,
        }
    }
}

/// `X = (j+1)n - j`, `Y = jn - (j-1)`.
pub fn bracket_bounds(j: u32, n: u32) -> Result<(u32, u32)> {
    if j < 1 || n < 2 {
        return Err(Error::BadParams("bracket needs j >= 1 and n >= 2".into()));
    }
    Ok(((j + 1) * n - j, j * n - (j - 1)))
}

/// `[X, Y] = (X, X-1, ..., Y+1, Y^Y)` for `X > Y`.
pub fn bracket(x: u32, y: u32) -> Vec<u32> {
    assert!(x > y, "bracket needs X > Y");
    let mut s: Vec<u32> = (y + 1..=x).rev().collect();
    s.extend(std::iter::repeat_n(y, y as usize));
    s
}

/// Concatenates the Kupisch series `m` times. For a Nakayama cycle this
/// repeats the component list.
pub fn cover(a: &Algebra, m: usize) -> Result<Algebra> {
    if m < 1 {
        return Err(Error::BadParams("cover needs m >= 1".into()));
    }
    Algebra::from_series(a.series().repeat(m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FamilyName {
    Ladder,
    Gustafson,
    Comb,
    Staircase,
    Bracket,
    Stacked,
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ladder" => FamilyName::Ladder,
            "gustafson" => FamilyName::Gustafson,
            "comb" => FamilyName::Comb,
            "staircase" => FamilyName::Staircase,
            "bracket" => FamilyName::Bracket,
            "stacked" => FamilyName::Stacked,
            _ => return Err(Error::BadParams(format!("unknown family {s}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Ladder { d } => write!(f, "ladder({d})"),
            Family::Gustafson { n } => write!(f, "gustafson({n})"),
            Family::Comb { a, d } => write!(f, "comb({a},{d})"),
            Family::Staircase { n, alpha } => write!(f, "staircase({n},{alpha})"),
            Family::Bracket { j, n } => write!(f, "bracket({j},{n})"),
            Family::Stacked { j, n, alpha, beta } => {
                write!(f, "stacked({j},{n},{alpha},{beta})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dim::Dim;

    #[test]
    fn named_members() {
        let g = Family::Gustafson { n: 3 }.algebra().unwrap();
        assert_eq!(g.series(), &[4, 4, 3]);
        assert_eq!(g.gldim(), Dim::Finite(4));
        let c = Family::Comb { a: 1, d: 2 }.algebra().unwrap();
        assert_eq!(c.series(), &[2, 3, 2, 2, 1]);
        assert_eq!(c.defect(), 2);
        let s = Family::Staircase { n: 3, alpha: 2 }.algebra().unwrap();
        assert_eq!(s.series(), &[3, 3, 3, 3, 3, 3, 3, 2, 1]);
        assert_eq!(s.gldim(), Dim::Finite(5));
        assert_eq!(bracket(5, 3), vec![5, 4, 3, 3, 3]);
        assert_eq!(
            Family::Bracket { j: 1, n: 2 }.series().unwrap(),
            vec![3, 2, 2]
        );
    }

    #[test]
    fn parameters() {
        assert!(Family::Ladder { d: 0 }.series().is_err());
        assert!(Family::Comb { a: 1, d: 1 }.series().is_err());
        assert!(Family::from_params("ladder", &[1, 2]).is_err());
        assert!(Family::from_params("spiral", &[1]).is_err());
        assert_eq!(
            Family::from_params("comb", &[2, 3]).unwrap(),
            Family::Comb { a: 2, d: 3 }
        );
    }

    #[test]
    fn covers() {
        let a = Algebra::from_series(vec![3, 2]).unwrap();
        assert_eq!(cover(&a, 2).unwrap().series(), &[3, 2, 3, 2]);
        assert!(cover(&a, 0).is_err());
    }
}
