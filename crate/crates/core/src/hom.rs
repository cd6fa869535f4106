//! Linear equations expressing that an unknown map intertwines structure
//! maps, and helpers to turn solutions back into matrices.
//!
//! An unknown map `f: X → Y` occupies a block of unknowns stored
//! column-major: entry `f[y, x]` has index `offset + x * dim Y + y`.

use crate::linalg::matrix::normalize;
use crate::linalg::{Field, LinearMap, LinearSystem, SolutionSpace, SparseVec};

#[derive(Clone, Copy, Debug)]
pub struct MapUnknown {
    pub offset: usize,
    pub rows: usize,
    pub cols: usize,
}

impl MapUnknown {
    pub fn index(&self, r: usize, c: usize) -> usize {
        self.offset + c * self.rows + r
    }

    pub fn len(&self) -> usize {
        self.rows * self.cols
    }

    /// Reads the block out of a solution vector.
    pub fn extract(&self, field: Field, v: &[(usize, crate::linalg::Scalar)]) -> LinearMap {
        let entries = v
            .iter()
            .filter(|(i, _)| *i >= self.offset && *i < self.offset + self.len())
            .map(|(i, s)| {
                let k = i - self.offset;
                (k % self.rows, k / self.rows, s.clone())
            });
        LinearMap::from_entries(field, self.rows, self.cols, entries).expect("in range")
    }
}

pub struct HomEquations {
    system: LinearSystem,
}

impl HomEquations {
    pub fn new(field: Field, unknowns: usize) -> Self {
        HomEquations { system: LinearSystem::new(field, unknowns) }
    }

    /// `(id_P ⊗ f ⊗ id_Q) ∘ σ_X = σ_Y ∘ f` for structure maps
    /// `σ_X: X → P⊗X⊗Q` and `σ_Y: Y → P⊗Y⊗Q`.
    pub fn coaction(&mut self, f: MapUnknown, sigma_x: &LinearMap, sigma_y: &LinearMap, p: usize, q: usize) {
        let (ny, nx) = (f.rows, f.cols);
        assert_eq!(sigma_x.shape(), (p * nx * q, nx), "source structure map");
        assert_eq!(sigma_y.shape(), (p * ny * q, ny), "target structure map");
        let height = p * ny * q;
        let mut eqs: Vec<SparseVec> = vec![Vec::new(); height];
        let mut touched: Vec<usize> = Vec::new();
        for x in 0..nx {
            for (r, s) in sigma_x.column(x) {
                let (pq, qq) = (r / (nx * q), r % q);
                let xp = (r / q) % nx;
                for y in 0..ny {
                    let row = (pq * ny + y) * q + qq;
                    if eqs[row].is_empty() {
                        touched.push(row);
                    }
                    eqs[row].push((f.index(y, xp), s.clone()));
                }
            }
            for yp in 0..ny {
                for (row, s) in sigma_y.column(yp) {
                    if eqs[*row].is_empty() {
                        touched.push(*row);
                    }
                    eqs[*row].push((f.index(yp, x), -s));
                }
            }
            for &row in &touched {
                self.system.add_equation(normalize(std::mem::take(&mut eqs[row])));
            }
            touched.clear();
        }
    }

    /// `f ∘ a_X = a_Y ∘ (id_P ⊗ f ⊗ id_Q)` for actions
    /// `a_X: P⊗X⊗Q → X` and `a_Y: P⊗Y⊗Q → Y`.
    pub fn action(&mut self, f: MapUnknown, a_x: &LinearMap, a_y: &LinearMap, p: usize, q: usize) {
        let (ny, nx) = (f.rows, f.cols);
        assert_eq!(a_x.shape(), (nx, p * nx * q), "source action");
        assert_eq!(a_y.shape(), (ny, p * ny * q), "target action");
        let mut eqs: Vec<SparseVec> = vec![Vec::new(); ny];
        for pp in 0..p {
            for x in 0..nx {
                for qq in 0..q {
                    let c = (pp * nx + x) * q + qq;
                    for (xp, s) in a_x.column(c) {
                        for (y, eq) in eqs.iter_mut().enumerate() {
                            eq.push((f.index(y, *xp), s.clone()));
                        }
                    }
                    for yp in 0..ny {
                        for (y, s) in a_y.column((pp * ny + yp) * q + qq) {
                            eqs[*y].push((f.index(yp, x), -s));
                        }
                    }
                    for eq in &mut eqs {
                        if !eq.is_empty() {
                            self.system.add_equation(normalize(std::mem::take(eq)));
                        }
                    }
                }
            }
        }
    }

    /// `f ∘ g = t · target` with `t` the unknown at index `t`.
    pub fn scaled_composite(&mut self, f: MapUnknown, g: &LinearMap, target: &LinearMap, t: usize) {
        assert_eq!(g.rows(), f.cols, "inner dimension");
        assert_eq!(target.shape(), (f.rows, g.cols()), "target shape");
        for c in 0..g.cols() {
            let mut eqs: Vec<SparseVec> = vec![Vec::new(); f.rows];
            for (k, s) in g.column(c) {
                for (r, eq) in eqs.iter_mut().enumerate() {
                    eq.push((f.index(r, *k), s.clone()));
                }
            }
            for (r, s) in target.column(c) {
                eqs[*r].push((t, -s));
            }
            for eq in eqs {
                if !eq.is_empty() {
                    self.system.add_equation(normalize(eq));
                }
            }
        }
    }

    pub fn solve(&self) -> SolutionSpace {
        self.system.solve()
    }
}

/// Converts a solution basis for a single map unknown into matrices.
pub fn basis_maps(space: &SolutionSpace, f: MapUnknown) -> Vec<LinearMap> {
    space.basis.iter().map(|v| f.extract(space.field, v)).collect()
}
