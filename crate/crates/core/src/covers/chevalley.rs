use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{CoverDatum, CoverError};
use crate::chartab::{CharacterTable, Cyclotomic};

/// Which way the eigenvalue exponents of a local monodromy are weighted.
///
/// With [`LocalConvention::Counterclockwise`] an eigenvalue `zeta_m^u` of
/// `rho(c_p)` contributes `1 - u/m` to the multiplicity of `rho` in the
/// holomorphic differentials; [`LocalConvention::Clockwise`] uses `u/m`,
/// which exchanges every irrep with its dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum LocalConvention {
    #[default]
    Counterclockwise,
    Clockwise,
}

impl LocalConvention {
    pub fn flipped(self) -> Self {
        match self {
            Self::Counterclockwise => Self::Clockwise,
            Self::Clockwise => Self::Counterclockwise,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Self::Counterclockwise => "ccw-1-u/m",
            Self::Clockwise => "cw-u/m",
        }
    }
}

/// Multiplicities `N_u` of the eigenvalues `zeta_m^u` of `rho_i(x)`, where
/// `m` is the order of `x`, by discrete Fourier inversion of the character
/// on the powers of `x`.
pub fn eigenvalue_multiplicities(
    table: &CharacterTable,
    i: usize,
    x: usize,
) -> Result<Vec<usize>, CoverError> {
    let g = table.group();
    let m = g.element_order(x);
    let values: Vec<&Cyclotomic> = (0..m)
        .map(|t| table.value_at(i, g.pow(x, t as i64)))
        .collect();
    let scale = Rational64::new(1, m as i64);
    (0..m)
        .map(|u| {
            let s: Cyclotomic = values
                .iter()
                .enumerate()
                .map(|(t, v)| *v * &Cyclotomic::zeta_power(m, -((u * t) as i64)))
                .sum();
            let n = s.scale(scale);
            n.as_integer()
                .filter(|&k| k >= 0)
                .map(|k| k as usize)
                .ok_or(CoverError::NonIntegral {
                    what: "eigenvalue multiplicity",
                    value: n.to_string(),
                })
        })
        .collect()
}

/// Multiplicity of irrep `i` in `H^0(X, omega_X)`:
/// `dim rho (g - 1) + [rho trivial] + sum_p sum_u N_{p,u} w(u, m_p)` with
/// `w = 1 - u/m` (or `u/m` for the clockwise convention) for `u != 0`.
pub fn chevalley_weil(
    d: &CoverDatum,
    table: &CharacterTable,
    i: usize,
    convention: LocalConvention,
) -> Result<usize, CoverError> {
    let deg = table.degree(i) as i64;
    let mut total = Rational64::from_integer(deg * (d.base_genus() as i64 - 1));
    if i == table.trivial() {
        total += 1;
    }
    for &c in d.puncture_images() {
        let m = d.group().element_order(c) as i64;
        let mults = eigenvalue_multiplicities(table, i, c)?;
        for (u, &n) in mults.iter().enumerate().skip(1) {
            if n == 0 {
                continue;
            }
            let w = match convention {
                LocalConvention::Counterclockwise => Rational64::new(m - u as i64, m),
                LocalConvention::Clockwise => Rational64::new(u as i64, m),
            };
            total += w * n as i64;
        }
    }
    if !total.is_integer() || total < Rational64::zero() {
        return Err(CoverError::NonIntegral {
            what: "Chevalley-Weil multiplicity",
            value: total.to_string(),
        });
    }
    Ok(total.to_integer() as usize)
}

/// Multiplicities of one irreducible character in the cohomology of the
/// cover and in the Prym piece `V = H^1(X)/H^1(Y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepMultiplicities {
    pub irrep: usize,
    pub degree: usize,
    pub fs_indicator: i8,
    pub dual: usize,
    /// In `H^0(X, omega_X)`.
    pub m_h0: usize,
    /// In `H^1(X, C)`.
    pub m_h1: usize,
    /// In `V`.
    pub m_v: usize,
    /// In `F^1 V = H^0(X, omega_X) / H^0(Y, omega_Y)`.
    pub m_f1v: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicProfile {
    pub cover_genus: usize,
    pub convention: LocalConvention,
    /// Indexed by irrep.
    pub irreps: Vec<IrrepMultiplicities>,
    /// Galois orbits of irreps, as in the character table.
    pub orbits: Vec<Vec<usize>>,
}

impl IsotypicProfile {
    pub fn orbit_members(&self, orbit: usize) -> impl Iterator<Item = &IrrepMultiplicities> {
        self.orbits[orbit].iter().map(move |&i| &self.irreps[i])
    }

    /// Class function `sum_i m_h1(i) chi_i`, the character of `H^1(X, C)`.
    pub fn h1_character(&self, table: &CharacterTable) -> Vec<Cyclotomic> {
        (0..table.classes().len())
            .map(|c| {
                self.irreps
                    .iter()
                    .filter(|r| r.m_h1 > 0)
                    .map(|r| table.value(r.irrep, c).scale(Rational64::from_integer(r.m_h1 as i64)))
                    .sum()
            })
            .collect()
    }
}

/// Full multiplicity profile of a valid cover.
pub fn prym_profile(
    d: &CoverDatum,
    table: &CharacterTable,
    convention: LocalConvention,
) -> Result<IsotypicProfile, CoverError> {
    let g = d.base_genus();
    let h0: Vec<usize> = (0..table.len())
        .map(|i| chevalley_weil(d, table, i, convention))
        .collect::<Result<_, _>>()?;
    let irreps = (0..table.len())
        .map(|i| {
            let triv = i == table.trivial();
            let dual = table.dual(i);
            let m_h1 = if triv { 2 * g } else { h0[i] + h0[dual] };
            IrrepMultiplicities {
                irrep: i,
                degree: table.degree(i),
                fs_indicator: table.frobenius_schur(i),
                dual,
                m_h0: h0[i],
                m_h1,
                m_v: if triv { m_h1 - 2 * g } else { m_h1 },
                m_f1v: if triv { h0[i] - g } else { h0[i] },
            }
        })
        .collect();
    Ok(IsotypicProfile {
        cover_genus: d.cover_genus(),
        convention,
        irreps,
        orbits: table.galois_orbits().to_vec(),
    })
}
