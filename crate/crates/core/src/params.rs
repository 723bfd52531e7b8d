//! Charge parameters `(e; s; u)` and the derived shift `t = s - u`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Parameters driving every node statistic.
///
/// `s` is the integer multicharge, `u` a rational shift vector with
/// `0 < u_j - u_i < e` for `i < j`, and `t_j = s_j - u_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChargeParams {
    e: u32,
    s: Vec<i64>,
    u: Vec<Rational>,
    t: Vec<Rational>,
}

impl ChargeParams {
    pub fn new(e: u32, s: Vec<i64>, u: Vec<Rational>) -> Result<Self> {
        if e == 0 {
            return Err(Error::Params("e must be positive".into()));
        }
        if s.is_empty() {
            return Err(Error::Params("level must be at least 1".into()));
        }
        if s.len() != u.len() {
            return Err(Error::Params(format!("s has {} entries but u has {}", s.len(), u.len())));
        }
        let e_rat = Rational::from_integer(e as i64);
        for j in 0..u.len() {
            for i in 0..j {
                let d = u[j] - u[i];
                if d <= Rational::from_integer(0) || d >= e_rat {
                    return Err(Error::Params(format!(
                        "0 < u_j - u_i < e violated at (i,j) = ({i},{j}): u_{j} - u_{i} = {}, e = {e}",
                        rational::format_rational(&d)
                    )));
                }
            }
        }
        let t = s.iter().zip(&u).map(|(&sj, uj)| Rational::from_integer(sj) - uj).collect();
        Ok(ChargeParams { e, s, u, t })
    }

    /// The Uglov choice `u_j = j e / l`.
    pub fn uglov(e: u32, s: Vec<i64>) -> Result<Self> {
        let u = uglov_shift(e, s.len());
        Self::new(e, s, u)
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn level(&self) -> usize {
        self.s.len()
    }

    pub fn s(&self) -> &[i64] {
        &self.s
    }

    pub fn u(&self) -> &[Rational] {
        &self.u
    }

    pub fn t(&self) -> &[Rational] {
        &self.t
    }

    pub fn min_t(&self) -> Rational {
        *self.t.iter().min().expect("level >= 1")
    }

    pub(crate) fn check_comp(&self, comp: usize) -> Result<()> {
        if comp < self.level() {
            Ok(())
        } else {
            Err(Error::ComponentOutOfRange { comp, level: self.level() })
        }
    }
}

pub fn uglov_shift(e: u32, level: usize) -> Vec<Rational> {
    (0..level).map(|j| Rational::new(j as i64 * e as i64, level as i64)).collect()
}

/// Wire form: `{"e":int,"s":[int...],"u":["p/q"...]}`.
#[derive(Serialize, Deserialize)]
struct ChargeParamsRepr {
    e: u32,
    s: Vec<i64>,
    #[serde(with = "rational::vec_as_string")]
    u: Vec<Rational>,
}

impl Serialize for ChargeParams {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ChargeParamsRepr { e: self.e, s: self.s.clone(), u: self.u.clone() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ChargeParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ChargeParamsRepr::deserialize(d)?;
        ChargeParams::new(r.e, r.s, r.u).map_err(serde::de::Error::custom)
    }
}
