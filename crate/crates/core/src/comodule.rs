//! Left comodules over a Hopf algebra, their tensor products and duals.
//!
//! A coaction `δ: X → H⊗X` is a `(dim H · dim X) × dim X` matrix. Writing
//! `δ(e_j) = Σ_l c_{lj} ⊗ e_l`, the matrix coefficients `c_{lj} ∈ H` satisfy
//! `Δ(c_{lj}) = Σ_i c_{ij} ⊗ c_{li}`.
//!
//! Duality conventions (dual bases `e^l`):
//! - right dual `X^∨`: `e^l ↦ Σ_i S⁻¹(c_{li}) ⊗ e^i`, with
//!   `ev: X^∨⊗X → k` and `coev: k → X⊗X^∨`;
//! - left dual `^∨X`: `e^l ↦ Σ_i S(c_{li}) ⊗ e^i`, with
//!   `ev: X⊗^∨X → k` and `coev: k → ^∨X⊗X`;
//! - double dual `X^∨∨` has the basis of `X` and coaction `(S⁻²⊗id)∘δ`.
//!
//! Zig-zag identities, with these orders of tensor factors:
//! `(id⊗ev)(coev⊗id) = id_X` and `(ev⊗id)(id⊗coev) = id_{X^∨}`, and the
//! mirror images for the left dual.

use crate::error::{Error, Result};
use crate::hom::{basis_maps, HomEquations, MapUnknown};
use crate::hopf::HopfAlgebra;
use crate::linalg::{LinearMap, SolutionSpace, SparseVec};
use crate::report::CheckReport;

#[derive(Clone, Debug)]
pub struct Comodule {
    hopf: HopfAlgebra,
    name: String,
    coaction: LinearMap,
}

impl Comodule {
    pub fn new(hopf: &HopfAlgebra, name: impl Into<String>, coaction: LinearMap) -> Result<Self> {
        let d = hopf.dim();
        let n = coaction.cols();
        if coaction.rows() != d * n {
            return Err(Error::Shape {
                context: "coaction".into(),
                expected_rows: d * n,
                expected_cols: n,
                rows: coaction.rows(),
                cols: n,
            });
        }
        if coaction.field() != hopf.field() {
            return Err(Error::FieldMismatch(format!("coaction over {}", coaction.field())));
        }
        Ok(Comodule { hopf: hopf.clone(), name: name.into(), coaction })
    }

    /// The ground field with `v ↦ 1⊗v`.
    pub fn trivial(hopf: &HopfAlgebra) -> Self {
        Comodule { hopf: hopf.clone(), name: "trivial".into(), coaction: hopf.unit().clone() }
    }

    /// `(H, Δ)`.
    pub fn regular(hopf: &HopfAlgebra) -> Self {
        Comodule { hopf: hopf.clone(), name: "regular".into(), coaction: hopf.comul().clone() }
    }

    /// The one-dimensional comodule `v ↦ g⊗v` of a grouplike `g`.
    pub fn grouplike(hopf: &HopfAlgebra, g: &SparseVec, name: impl Into<String>) -> Result<Self> {
        let coaction = LinearMap::from_columns(hopf.field(), hopf.dim(), vec![g.clone()])?;
        let x = Comodule::new(hopf, name, coaction)?;
        if let Some(c) = check_comodule(&x).failures().next() {
            return Err(Error::InvalidParameter(format!("{g:?} is not grouplike: {} fails", c.id)));
        }
        Ok(x)
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.coaction.cols()
    }

    pub fn coaction(&self) -> &LinearMap {
        &self.coaction
    }

    pub fn id(&self) -> LinearMap {
        LinearMap::identity(self.hopf.field(), self.dim())
    }
}

pub fn regular_comodule(hopf: &HopfAlgebra) -> Comodule {
    Comodule::regular(hopf)
}

pub fn check_comodule(x: &Comodule) -> CheckReport {
    let h = x.hopf();
    let (d, n) = (h.dim(), x.dim());
    let delta = x.coaction();
    let mut r = CheckReport::new(format!("comodule {}", x.name()));
    let lhs = h.comul().kronecker(&x.id()).compose(delta).expect("shape");
    let rhs = h.id().kronecker(delta).compose(delta).expect("shape");
    r.equal_indexed("coassociativity", &lhs, &rhs, &[d, d, n], &[n]);
    let counit = h.counit().kronecker(&x.id()).compose(delta).expect("shape");
    r.equal_indexed("counitality", &counit, &x.id(), &[n], &[n]);
    r
}

/// `X⊗Y` with `x⊗y ↦ x_{(-1)}y_{(-1)} ⊗ x_{(0)} ⊗ y_{(0)}`.
pub fn tensor_comodule(x: &Comodule, y: &Comodule) -> Result<Comodule> {
    x.hopf().ensure_same(y.hopf())?;
    let coaction = tensor_coaction(x.hopf(), x.coaction(), y.coaction());
    Comodule::new(x.hopf(), format!("{}⊗{}", x.name(), y.name()), coaction)
}

/// `(μ⊗id⊗id) ∘ (id⊗τ⊗id) ∘ (δ_X⊗δ_Y)`.
pub(crate) fn tensor_coaction(h: &HopfAlgebra, dx: &LinearMap, dy: &LinearMap) -> LinearMap {
    let d = h.dim();
    let (nx, ny) = (dx.cols(), dy.cols());
    let f = h.field();
    let perm = LinearMap::permute_factors(f, &[d, nx, d, ny], &[0, 2, 1, 3]);
    let mul = h.mul().kronecker(&LinearMap::identity(f, nx * ny));
    LinearMap::chain(&[&mul, &perm, &dx.kronecker(dy)]).expect("shape")
}

/// Reindexes a coaction matrix `(h, l) ← j` to `(h, j) ← l`, i.e. sends
/// the coefficient `c_{lj}` to position `(j, l)`.
pub(crate) fn partial_transpose(c: &LinearMap, d: usize) -> LinearMap {
    let n = c.cols();
    let entries = c.entries().map(|(r, j, s)| {
        let (h, l) = (r / n, r % n);
        (h * n + j, l, s.clone())
    });
    LinearMap::from_entries(c.field(), d * n, n, entries).expect("in range")
}

/// The coaction of `X^∨` without verification.
pub(crate) fn right_dual_coaction(x: &Comodule) -> LinearMap {
    let h = x.hopf();
    let t = partial_transpose(x.coaction(), h.dim());
    h.antipode_inv().kronecker(&x.id()).compose(&t).expect("shape")
}

/// The coaction of `X^∨∨`.
pub fn double_dual(x: &Comodule) -> Comodule {
    let h = x.hopf();
    let s2 = h.antipode_inv().compose(h.antipode_inv()).expect("square");
    let coaction = s2.kronecker(&x.id()).compose(x.coaction()).expect("shape");
    Comodule { hopf: h.clone(), name: format!("{}^∨∨", x.name()), coaction }
}

/// A dual object with its evaluation and coevaluation.
#[derive(Clone, Debug)]
pub struct Duality {
    pub object: Comodule,
    pub ev: LinearMap,
    pub coev: LinearMap,
}

/// `Σ_i e^i⊗e_i` paired as `ev(e^l⊗e_i) = δ_{li}` on an `n ⊗ n` space.
fn pairing(x: &Comodule) -> LinearMap {
    let n = x.dim();
    let f = x.hopf().field();
    LinearMap::from_entries(f, 1, n * n, (0..n).map(|i| (0, i * n + i, f.one()))).expect("in range")
}

pub fn right_dual(x: &Comodule) -> Result<Duality> {
    let object = Comodule {
        hopf: x.hopf().clone(),
        name: format!("{}^∨", x.name()),
        coaction: right_dual_coaction(x),
    };
    let ev = pairing(x);
    let coev = ev.transpose();
    let dual = Duality { object, ev, coev };
    let report = check_right_duality(x, &dual);
    if let Some(c) = report.failures().next() {
        return Err(Error::Internal(format!("right dual of {}: {} fails", x.name(), c.id)));
    }
    Ok(dual)
}

/// The left dual, with its coaction computed as the composite
/// `τ ∘ (id⊗S⊗ev) ∘ (id⊗δ_X⊗id) ∘ (coev⊗id)` on `^∨X`.
pub fn left_dual(x: &Comodule) -> Result<Duality> {
    let h = x.hopf();
    let f = h.field();
    let (d, n) = (h.dim(), x.dim());
    let ev = pairing(x);
    let coev = ev.transpose();
    let id_n = x.id();
    let step1 = coev.kronecker(&id_n);
    let step2 = LinearMap::kron_all(&[&id_n, x.coaction(), &id_n]);
    let step3 = LinearMap::kron_all(&[&id_n, h.antipode(), &ev]);
    let step4 = LinearMap::flip(f, n, d);
    let coaction = LinearMap::chain(&[&step4, &step3, &step2, &step1])?;
    let object = Comodule { hopf: h.clone(), name: format!("∨{}", x.name()), coaction };
    let dual = Duality { object, ev, coev };
    let report = check_left_duality(x, &dual);
    if let Some(c) = report.failures().next() {
        return Err(Error::Internal(format!("left dual of {}: {} fails", x.name(), c.id)));
    }
    Ok(dual)
}

/// Whether `f: X → Y` intertwines the coactions.
pub fn is_comodule_morphism(x: &Comodule, y: &Comodule, f: &LinearMap) -> bool {
    let h = x.hopf();
    let lhs = h.id().kronecker(f).compose(x.coaction());
    let rhs = y.coaction().compose(f);
    matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b)
}

pub fn check_right_duality(x: &Comodule, dual: &Duality) -> CheckReport {
    let xd = &dual.object;
    let k = Comodule::trivial(x.hopf());
    let mut r = CheckReport::new(format!("right dual of {}", x.name()));
    r.absorb("dual comodule", check_comodule(xd));
    let zig = LinearMap::chain(&[&x.id().kronecker(&dual.ev), &dual.coev.kronecker(&x.id())]);
    let zag = LinearMap::chain(&[&dual.ev.kronecker(&xd.id()), &xd.id().kronecker(&dual.coev)]);
    r.condition("zig-zag on X", zig.as_ref().is_ok_and(LinearMap::is_identity), || "not the identity".into());
    r.condition("zig-zag on dual", zag.as_ref().is_ok_and(LinearMap::is_identity), || "not the identity".into());
    let dx = tensor_comodule(xd, x).expect("same algebra");
    let xdx = tensor_comodule(x, xd).expect("same algebra");
    r.condition("ev intertwines", is_comodule_morphism(&dx, &k, &dual.ev), || "ev is not a comodule map".into());
    r.condition("coev intertwines", is_comodule_morphism(&k, &xdx, &dual.coev), || "coev is not a comodule map".into());
    r
}

pub fn check_left_duality(x: &Comodule, dual: &Duality) -> CheckReport {
    let xd = &dual.object;
    let k = Comodule::trivial(x.hopf());
    let mut r = CheckReport::new(format!("left dual of {}", x.name()));
    r.absorb("dual comodule", check_comodule(xd));
    let zig = LinearMap::chain(&[&dual.ev.kronecker(&x.id()), &x.id().kronecker(&dual.coev)]);
    let zag = LinearMap::chain(&[&xd.id().kronecker(&dual.ev), &dual.coev.kronecker(&xd.id())]);
    r.condition("zig-zag on X", zig.as_ref().is_ok_and(LinearMap::is_identity), || "not the identity".into());
    r.condition("zig-zag on dual", zag.as_ref().is_ok_and(LinearMap::is_identity), || "not the identity".into());
    let xdx = tensor_comodule(x, xd).expect("same algebra");
    let dxd = tensor_comodule(xd, x).expect("same algebra");
    r.condition("ev intertwines", is_comodule_morphism(&xdx, &k, &dual.ev), || "ev is not a comodule map".into());
    r.condition("coev intertwines", is_comodule_morphism(&k, &dxd, &dual.coev), || "coev is not a comodule map".into());
    r
}

/// Dimension of the space of coactions `D` on the dual space that differ
/// from the constructed one while keeping `ev` an intertwiner; 0 means the
/// right-dual coaction is forced.
pub fn right_dual_uniqueness_defect(x: &Comodule) -> usize {
    // Homogeneous part of the ev condition: Σ_i d_{il} c_{ij} = 0 for all l, j,
    // where D(e^l) = Σ_i d_{il} ⊗ e^i.
    let h = x.hopf();
    let (d, n) = (h.dim(), x.dim());
    let unknown = |hh: usize, i: usize, l: usize| (hh * n + i) * n + l;
    let mut system = crate::linalg::LinearSystem::new(h.field(), d * n * n);
    let c = x.coaction();
    for l in 0..n {
        for j in 0..n {
            let mut eqs: Vec<SparseVec> = vec![Vec::new(); d];
            for (row, cv) in c.column(j) {
                let (h2, i) = (row / n, row % n);
                for h1 in 0..d {
                    for (out, m) in h.mul().column(h1 * d + h2) {
                        eqs[*out].push((unknown(h1, i, l), cv * m));
                    }
                }
            }
            for eq in eqs {
                system.add_equation(eq);
            }
        }
    }
    system.solve().dim()
}

pub fn comodule_hom(x: &Comodule, y: &Comodule) -> Result<SolutionSpace> {
    x.hopf().ensure_same(y.hopf())?;
    let f = MapUnknown { offset: 0, rows: y.dim(), cols: x.dim() };
    let mut eqs = HomEquations::new(x.hopf().field(), f.len());
    eqs.coaction(f, x.coaction(), y.coaction(), x.hopf().dim(), 1);
    Ok(eqs.solve())
}

/// A basis of `Hom(X, Y)` as matrices.
pub fn comodule_hom_basis(x: &Comodule, y: &Comodule) -> Result<Vec<LinearMap>> {
    let space = comodule_hom(x, y)?;
    Ok(basis_maps(&space, MapUnknown { offset: 0, rows: y.dim(), cols: x.dim() }))
}

#[derive(Clone, Debug)]
pub struct ComoduleMorphism {
    pub source: Comodule,
    pub target: Comodule,
    pub map: LinearMap,
}

impl ComoduleMorphism {
    /// Wraps `map` without checking; see [`ComoduleMorphism::is_valid`].
    pub fn new(source: &Comodule, target: &Comodule, map: LinearMap) -> Result<Self> {
        source.hopf().ensure_same(target.hopf())?;
        if map.shape() != (target.dim(), source.dim()) {
            return Err(Error::Shape {
                context: "comodule morphism".into(),
                expected_rows: target.dim(),
                expected_cols: source.dim(),
                rows: map.rows(),
                cols: map.cols(),
            });
        }
        Ok(ComoduleMorphism { source: source.clone(), target: target.clone(), map })
    }

    pub fn is_valid(&self) -> bool {
        is_comodule_morphism(&self.source, &self.target, &self.map)
    }
}
