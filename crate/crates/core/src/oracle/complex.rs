use std::sync::Arc;

use crate::covers::CoverDatum;
use crate::groups::FiniteGroup;

/// A letter of a word in the free generators: (generator, +1 or -1).
pub type Letter = (usize, i8);

/// The closed cover as an `H`-equivariant CW complex.
///
/// Vertices are the elements of `H`. Edge `(v, s)` joins `v` to `v * phi(s)`
/// for each free generator `s` of the punctured base. For `n >= 1` there is
/// one 2-cell for each puncture `p` and left coset `q <c_p>`, attached along
/// `word_p^{m_p}` read from `q`; the last puncture word is the one that
/// completes the surface relation. For `n = 0` there is one 2-cell per
/// element along the surface relator. `H` acts by left multiplication.
#[derive(Debug, Clone)]
pub struct EquivariantComplex {
    group: Arc<FiniteGroup>,
    generator_images: Vec<usize>,
    faces: Vec<Face>,
    /// `face_index[p][x]` is the face of puncture `p` through the coset of `x`.
    face_index: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub puncture: Option<usize>,
    pub start: usize,
    pub word: Vec<Letter>,
    pub repeats: usize,
}

impl EquivariantComplex {
    pub fn build(d: &CoverDatum) -> Self {
        let group = d.group().clone();
        let g = &*group;
        let genus = d.base_genus();
        let n = d.puncture_count();
        let mut generator_images: Vec<usize> = d.handles().iter().flat_map(|&(a, b)| [a, b]).collect();
        if n > 0 {
            generator_images.extend_from_slice(&d.puncture_images()[..n - 1]);
        }
        let relator: Vec<Letter> = (0..genus)
            .flat_map(|j| [(2 * j, 1), (2 * j + 1, 1), (2 * j, -1), (2 * j + 1, -1)])
            .collect();
        let mut faces = Vec::new();
        let mut face_index = Vec::new();
        if n == 0 {
            for x in 0..g.order() {
                faces.push(Face {
                    puncture: None,
                    start: x,
                    word: relator.clone(),
                    repeats: 1,
                });
            }
            face_index.push((0..g.order()).collect());
        } else {
            for p in 0..n {
                let word: Vec<Letter> = if p + 1 < n {
                    vec![(2 * genus + p, 1)]
                } else {
                    let mut w = relator.clone();
                    w.extend((0..n - 1).map(|k| (2 * genus + k, 1)));
                    w.reverse();
                    w.into_iter().map(|(s, e)| (s, -e)).collect()
                };
                let c = d.puncture_images()[p];
                let m = g.element_order(c);
                let mut index = vec![usize::MAX; g.order()];
                for q in 0..g.order() {
                    if index[q] != usize::MAX {
                        continue;
                    }
                    let f = faces.len();
                    let mut x = q;
                    for _ in 0..m {
                        index[x] = f;
                        x = g.mul(x, c);
                    }
                    faces.push(Face {
                        puncture: Some(p),
                        start: q,
                        word: word.clone(),
                        repeats: m,
                    });
                }
                face_index.push(index);
            }
        }
        EquivariantComplex {
            group,
            generator_images,
            faces,
            face_index,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn vertex_count(&self) -> usize {
        self.group.order()
    }

    pub fn free_generators(&self) -> usize {
        self.generator_images.len()
    }

    pub fn edge_count(&self) -> usize {
        self.group.order() * self.generator_images.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn edge(&self, v: usize, s: usize) -> usize {
        v * self.generator_images.len() + s
    }

    /// Endpoints `(tail, head)` of an edge.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let k = self.generator_images.len();
        let (v, s) = (e / k, e % k);
        (v, self.group.mul(v, self.generator_images[s]))
    }

    /// Signed edge occurrences along the attaching loop of a face.
    pub fn face_boundary(&self, f: usize) -> Vec<(usize, i64)> {
        let g = &*self.group;
        let face = &self.faces[f];
        let mut v = face.start;
        let mut out = Vec::with_capacity(face.word.len() * face.repeats);
        for _ in 0..face.repeats {
            for &(s, e) in &face.word {
                let img = self.generator_images[s];
                if e > 0 {
                    out.push((self.edge(v, s), 1));
                    v = g.mul(v, img);
                } else {
                    v = g.mul(v, g.inverse(img));
                    out.push((self.edge(v, s), -1));
                }
            }
        }
        debug_assert_eq!(v, face.start, "attaching loop closes");
        out
    }

    /// Dense integer `d1` (vertices x edges).
    pub fn boundary_1(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.edge_count()]; self.vertex_count()];
        for e in 0..self.edge_count() {
            let (t, h) = self.endpoints(e);
            m[h][e] += 1;
            m[t][e] -= 1;
        }
        m
    }

    /// Dense integer `d2` (edges x faces).
    pub fn boundary_2(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.face_count()]; self.edge_count()];
        for f in 0..self.face_count() {
            for (e, s) in self.face_boundary(f) {
                m[e][f] += s;
            }
        }
        m
    }

    pub fn act_vertex(&self, h: usize, v: usize) -> usize {
        self.group.mul(h, v)
    }

    pub fn act_edge(&self, h: usize, e: usize) -> usize {
        let k = self.generator_images.len();
        self.edge(self.group.mul(h, e / k), e % k)
    }

    pub fn act_face(&self, h: usize, f: usize) -> usize {
        let face = &self.faces[f];
        let p = face.puncture.unwrap_or(0);
        self.face_index[p][self.group.mul(h, face.start)]
    }

    /// Checks `d1 d2 = 0` and equivariance of both boundary maps under the
    /// generators of `H`; returns the first failure.
    pub fn check(&self) -> Result<(), String> {
        for f in 0..self.face_count() {
            let mut acc = vec![0i64; self.vertex_count()];
            for (e, s) in self.face_boundary(f) {
                let (t, h) = self.endpoints(e);
                acc[h] += s;
                acc[t] -= s;
            }
            if acc.iter().any(|&x| x != 0) {
                return Err(format!("d1 d2 != 0 on face {f}"));
            }
        }
        for &h in self.group.generators() {
            for e in 0..self.edge_count() {
                let (t, hd) = self.endpoints(e);
                let (t2, h2) = self.endpoints(self.act_edge(h, e));
                if (self.act_vertex(h, t), self.act_vertex(h, hd)) != (t2, h2) {
                    return Err(format!("d1 not equivariant on edge {e}"));
                }
            }
            for f in 0..self.face_count() {
                let mut moved: Vec<(usize, i64)> = self
                    .face_boundary(f)
                    .into_iter()
                    .map(|(e, s)| (self.act_edge(h, e), s))
                    .collect();
                let mut image = self.face_boundary(self.act_face(h, f));
                moved.sort_unstable();
                image.sort_unstable();
                if moved != image {
                    return Err(format!("d2 not equivariant on face {f}"));
                }
            }
        }
        Ok(())
    }

    /// Signed count of cells fixed by `h`; all fixed cells are fixed with
    /// their orientation.
    pub fn lefschetz_chain_trace(&self, h: usize) -> i64 {
        let fv = (0..self.vertex_count()).filter(|&v| self.act_vertex(h, v) == v).count();
        let fe = (0..self.edge_count()).filter(|&e| self.act_edge(h, e) == e).count();
        let ff = (0..self.face_count()).filter(|&f| self.act_face(h, f) == f).count();
        fv as i64 - fe as i64 + ff as i64
    }
}
