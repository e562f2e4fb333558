use std::collections::{HashMap, VecDeque};

use super::presentation::Word;
use super::{GroupError, Permutation};

/// Largest order for which a full multiplication table is cached.
const TABLE_LIMIT: usize = 2048;

/// A finite group realized by permutations.
///
/// Elements are addressed by index; index 0 is always the identity.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
    generators: Vec<usize>,
    generator_names: Vec<String>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order())
            .field("generators", &self.generator_names)
            .finish()
    }
}

impl FiniteGroup {
    /// Closes the given generating permutations under multiplication.
    /// Elements are numbered in breadth-first order of the right Cayley
    /// graph starting from the identity.
    pub fn from_generators(
        name: impl Into<String>,
        generator_names: Vec<String>,
        generators: Vec<Permutation>,
        max_order: usize,
    ) -> Result<Self, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        if generator_names.len() != generators.len() {
            return Err(GroupError::GeneratorNameMismatch);
        }
        let degree = generators[0].degree();
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch);
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut lookup: HashMap<Permutation, usize> = HashMap::new();
        lookup.insert(elements[0].clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let p = elements[i].then(g);
                if !lookup.contains_key(&p) {
                    if elements.len() >= max_order {
                        return Err(GroupError::TooLarge { limit: max_order });
                    }
                    lookup.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let gens = generators.iter().map(|g| lookup[g]).collect();
        Ok(Self::assemble(name.into(), elements, lookup, gens, generator_names))
    }

    /// Builds a group from an explicit, already closed element list whose
    /// first entry is the identity.
    pub(crate) fn from_element_list(
        name: String,
        elements: Vec<Permutation>,
        generators: Vec<usize>,
        generator_names: Vec<String>,
    ) -> Self {
        debug_assert!(elements[0].is_identity());
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Self::assemble(name, elements, lookup, generators, generator_names)
    }

    fn assemble(
        name: String,
        elements: Vec<Permutation>,
        lookup: HashMap<Permutation, usize>,
        generators: Vec<usize>,
        generator_names: Vec<String>,
    ) -> Self {
        let inverses = elements.iter().map(|p| lookup[&p.inverse()]).collect();
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; n * n];
            for (i, x) in elements.iter().enumerate() {
                for (j, y) in elements.iter().enumerate() {
                    t[i * n + j] = lookup[&x.then(y)] as u32;
                }
            }
            t
        });
        FiniteGroup {
            name,
            elements,
            lookup,
            generators,
            generator_names,
            inverses,
            table,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub(crate) fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, x: usize) -> &Permutation {
        &self.elements[x]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        match &self.table {
            Some(t) => t[x * self.elements.len() + y] as usize,
            None => self.lookup[&self.elements[x].then(&self.elements[y])],
        }
    }

    #[inline]
    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse(x) } else { x };
        let mut e = k.unsigned_abs();
        let mut acc = 0;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    /// `x^-1 * y * x`.
    pub fn conjugate(&self, y: usize, x: usize) -> usize {
        self.mul(self.mul(self.inverse(x), y), x)
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut m = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            m += 1;
        }
        m
    }

    /// `x * y * x^-1 * y^-1`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        let xyx = self.mul(xy, self.inverse(x));
        self.mul(xyx, self.inverse(y))
    }

    /// Sorted element set of the subgroup generated by `set`.
    pub fn closure(&self, set: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut members = vec![0usize];
        let gens: Vec<usize> = set.iter().copied().filter(|&s| s != 0).collect();
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in &gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    pub fn subgroup_generated(&self, set: &[usize]) -> usize {
        self.closure(set).len()
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let n = self.order();
        let mut comms: Vec<usize> = Vec::new();
        let mut seen = vec![false; n];
        for x in 0..n {
            for y in 0..n {
                let c = self.commutator(x, y);
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.closure(&comms)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .all(|&x| g.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, x| {
            num_integer::lcm(acc, self.element_order(x))
        })
    }

    /// Evaluates a word in the distinguished generators.
    pub fn evaluate(&self, word: &Word) -> usize {
        word.letters().iter().fold(0, |acc, &(g, e)| {
            self.mul(acc, self.pow(self.generators[g], e))
        })
    }
}
