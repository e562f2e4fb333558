use crate::groups::FiniteGroup;

/// Conjugacy classes of a group, ordered by their least element index.
#[derive(Debug, Clone)]
pub struct ClassData {
    representatives: Vec<usize>,
    members: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
    orders: Vec<usize>,
    /// `powers[c][t]` is the class of `rep_c^t` for `0 <= t < ord(rep_c)`.
    powers: Vec<Vec<usize>>,
    exponent: usize,
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ClassData {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = members.len();
        class_of[x] = c;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for &s in g.generators() {
                let z = g.conjugate(y, s);
                if class_of[z] == usize::MAX {
                    class_of[z] = c;
                    orbit.push(z);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        members.push(orbit);
    }
    let representatives: Vec<usize> = members.iter().map(|m| m[0]).collect();
    let inverse_class = representatives
        .iter()
        .map(|&r| class_of[g.inverse(r)])
        .collect();
    let mut orders = Vec::with_capacity(members.len());
    let mut powers = Vec::with_capacity(members.len());
    for &r in &representatives {
        let mut row = vec![class_of[0]];
        let mut y = r;
        while y != 0 {
            row.push(class_of[y]);
            y = g.mul(y, r);
        }
        orders.push(row.len());
        powers.push(row);
    }
    let exponent = orders.iter().fold(1, |a, &o| num_integer::lcm(a, o));
    ClassData {
        representatives,
        members,
        class_of,
        inverse_class,
        orders,
        powers,
        exponent,
    }
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn representative(&self, c: usize) -> usize {
        self.representatives[c]
    }

    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    /// Order of the elements of class `c`.
    pub fn element_order(&self, c: usize) -> usize {
        self.orders[c]
    }

    /// Exponent of the group (lcm of element orders).
    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// Class containing the `k`-th powers of class `c`.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        let o = self.orders[c] as i64;
        self.powers[c][k.rem_euclid(o) as usize]
    }

    /// The `k`-th power map on classes.
    pub fn power_map(&self, k: i64) -> Vec<usize> {
        (0..self.len()).map(|c| self.power_class(c, k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{catalog, dicyclic, DEFAULT_MAX_COSETS};

    #[test]
    fn abelian_classes_are_singletons() {
        let g = catalog("cyclic:4", DEFAULT_MAX_COSETS).unwrap();
        let c = conjugacy_classes(&g);
        assert_eq!(c.len(), 4);
        assert_eq!(c.sizes(), vec![1; 4]);
        assert_eq!(c.power_map(1), vec![0, 1, 2, 3]);
    }

    /// Classes from a brute-force orbit computation over all conjugators.
    fn brute_force_sizes(g: &FiniteGroup) -> Vec<usize> {
        let n = g.order();
        let mut done = vec![false; n];
        let mut sizes = Vec::new();
        for x in 0..n {
            if done[x] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..n).map(|y| g.conjugate(x, y)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                done[y] = true;
            }
            sizes.push(orbit.len());
        }
        sizes
    }

    #[test]
    fn quaternion_classes() {
        let g = dicyclic(2).unwrap();
        let c = conjugacy_classes(&g);
        let mut sizes = c.sizes();
        assert_eq!(sizes, brute_force_sizes(&g));
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        assert_eq!(c.size(0), 1);
        for k in 0..c.len() {
            assert_eq!(c.inverse_class(c.inverse_class(k)), k);
        }
    }

    #[test]
    fn generator_orbits_match_full_conjugation() {
        for spec in ["binary:T", "dicyclic:5", "binary:O"] {
            let g = catalog(spec, DEFAULT_MAX_COSETS).unwrap();
            assert_eq!(conjugacy_classes(&g).sizes(), brute_force_sizes(&g), "{spec}");
        }
    }
}
