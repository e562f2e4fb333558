use std::sync::Arc;

use serde::Serialize;

use super::CoverError;
use crate::groups::FiniteGroup;

/// A connected Galois `H`-cover of a genus-`g` surface with `n` punctures,
/// given by the images of the standard generators of the fundamental group.
///
/// The surface relation is `[a_1,b_1] ... [a_g,b_g] c_1 ... c_n = 1` with
/// left-to-right products and `[a,b] = a b a^-1 b^-1`.
#[derive(Debug, Clone)]
pub struct CoverDatum {
    group: Arc<FiniteGroup>,
    base_genus: usize,
    handles: Vec<(usize, usize)>,
    punctures: Vec<usize>,
}

/// Base surface `(g, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, serde::Deserialize)]
pub struct Base {
    pub genus: usize,
    pub punctures: usize,
}

impl CoverDatum {
    /// Builds and validates a cover datum.
    pub fn new(
        group: Arc<FiniteGroup>,
        handles: Vec<(usize, usize)>,
        punctures: Vec<usize>,
    ) -> Result<Self, CoverError> {
        let d = Self::new_unchecked(group, handles, punctures);
        d.validate()?;
        Ok(d)
    }

    /// Builds a datum without checking the cover invariants; call
    /// [`CoverDatum::validate`] before using it.
    pub fn new_unchecked(
        group: Arc<FiniteGroup>,
        handles: Vec<(usize, usize)>,
        punctures: Vec<usize>,
    ) -> Self {
        CoverDatum {
            base_genus: handles.len(),
            group,
            handles,
            punctures,
        }
    }

    /// Origami datum over `(1,1)`: `(a, b) = (gamma, delta)` and
    /// `c_1 = [gamma, delta]^-1`.
    pub fn origami(group: Arc<FiniteGroup>, gamma: usize, delta: usize) -> Result<Self, CoverError> {
        let c = group.inverse(group.commutator(gamma, delta));
        Self::new(group, vec![(gamma, delta)], vec![c])
    }

    /// Fills in the last puncture image so that the surface relation holds.
    pub fn completing_last(
        group: Arc<FiniteGroup>,
        handles: Vec<(usize, usize)>,
        mut punctures: Vec<usize>,
    ) -> Result<Self, CoverError> {
        let partial = Self::new_unchecked(group.clone(), handles.clone(), punctures.clone());
        punctures.push(group.inverse(partial.relation_product()));
        Self::new(group, handles, punctures)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn base_genus(&self) -> usize {
        self.base_genus
    }

    pub fn puncture_count(&self) -> usize {
        self.punctures.len()
    }

    pub fn base(&self) -> Base {
        Base {
            genus: self.base_genus,
            punctures: self.punctures.len(),
        }
    }

    pub fn handles(&self) -> &[(usize, usize)] {
        &self.handles
    }

    pub fn puncture_images(&self) -> &[usize] {
        &self.punctures
    }

    /// All monodromy images in the order `a_1, b_1, .., a_g, b_g, c_1, .., c_n`.
    pub fn tuple(&self) -> Vec<usize> {
        self.handles
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .chain(self.punctures.iter().copied())
            .collect()
    }

    /// `prod [a_j, b_j] * prod c_i`, which is the identity for a valid datum.
    pub fn relation_product(&self) -> usize {
        let g = &self.group;
        let h = self
            .handles
            .iter()
            .fold(0, |acc, &(a, b)| g.mul(acc, g.commutator(a, b)));
        self.punctures.iter().fold(h, |acc, &c| g.mul(acc, c))
    }

    pub fn validate(&self) -> Result<(), CoverError> {
        let n = self.group.order();
        if let Some(&bad) = self.tuple().iter().find(|&&x| x >= n) {
            return Err(CoverError::InvalidElement { index: bad, order: n });
        }
        let euler = 2 * self.base_genus as i64 - 2 + self.punctures.len() as i64;
        if euler <= 0 {
            return Err(CoverError::NotHyperbolic {
                genus: self.base_genus,
                punctures: self.punctures.len(),
            });
        }
        let r = self.relation_product();
        if r != 0 {
            return Err(CoverError::SurfaceRelation { product: r });
        }
        let generated = self.group.subgroup_generated(&self.tuple());
        if generated != n {
            return Err(CoverError::Disconnected {
                generated,
                order: n,
            });
        }
        Ok(())
    }

    /// Orders `m_i` of the puncture monodromies.
    pub fn ramification_orders(&self) -> Vec<usize> {
        self.punctures
            .iter()
            .map(|&c| self.group.element_order(c))
            .collect()
    }

    /// Genus of the compactified cover by Riemann-Hurwitz:
    /// `2g' - 2 = |H| (2g - 2) + sum_i |H| (1 - 1/m_i)`.
    pub fn cover_genus(&self) -> usize {
        let h = self.group.order() as i64;
        let mut twice = h * (2 * self.base_genus as i64 - 2);
        for m in self.ramification_orders() {
            twice += h - h / m as i64;
        }
        debug_assert!(twice % 2 == 0 && twice >= -2);
        ((twice + 2) / 2) as usize
    }

    /// The orientation-reversed datum: handles `(b_j, a_j)` in reverse
    /// order and punctures `c_n^-1, .., c_1^-1`. Inverting the surface
    /// relation shows it again has standard form. Each local monodromy is
    /// inverted, so every multiplicity is exchanged with its dual's.
    pub fn mirrored(&self) -> Self {
        let g = &self.group;
        let handles = self.handles.iter().rev().map(|&(a, b)| (b, a)).collect();
        let punctures = self.punctures.iter().rev().map(|&c| g.inverse(c)).collect();
        Self::new_unchecked(g.clone(), handles, punctures)
    }
}
