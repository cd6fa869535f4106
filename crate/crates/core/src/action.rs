//! Bicomodules over `(H, H^opcop)`, bicomodule algebras, objects of the
//! module category over a bicomodule algebra `B`, and the actions of
//! `comod H` on it from both sides.
//!
//! A bicomodule has a left coaction `λ: M → H⊗M` and a right coaction
//! `ρ: M → M⊗H`, `m ↦ m_{(0)}⊗m_{(1)}`, which is a comodule structure over
//! `H^opcop`: `(ρ⊗id)∘ρ = (id⊗τΔ)∘ρ`. All matrices are written in terms of
//! the structure maps of `H` itself.
//!
//! Tensor products of bicomodules are codiagonal: `m_{(-1)}n_{(-1)}` on the
//! left and the `H^opcop` product `n_{(1)}m_{(1)}` on the right. The
//! actions of a comodule `X` are
//! - `X▷M` on `X⊗M`: left `x_{(-1)}m_{(-1)}`, right `m_{(1)}`;
//! - `M◁X` on `M⊗X`: left `m_{(-1)}`, right `m_{(1)}x_{(-1)}` in the
//!   product of `H`;
//!
//! with `B` acting on the `M` factor. Associators and unitors are
//! identities on the lexicographic tensor basis.

use crate::comodule::{tensor_coaction, Comodule};
use crate::error::{Error, Result};
use crate::hom::{basis_maps, HomEquations, MapUnknown};
use crate::hopf::{check_algebra, AlgebraData, HopfAlgebra};
use crate::linalg::{LinearMap, SolutionSpace};
use crate::report::CheckReport;

#[derive(Clone, Debug)]
pub struct Bicomodule {
    hopf: HopfAlgebra,
    name: String,
    left: LinearMap,
    right: LinearMap,
}

impl Bicomodule {
    pub fn new(hopf: &HopfAlgebra, name: impl Into<String>, left: LinearMap, right: LinearMap) -> Result<Self> {
        let d = hopf.dim();
        let n = left.cols();
        for (context, m) in [("left coaction", &left), ("right coaction", &right)] {
            if m.shape() != (d * n, n) {
                return Err(Error::Shape {
                    context: context.into(),
                    expected_rows: d * n,
                    expected_cols: n,
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
            if m.field() != hopf.field() {
                return Err(Error::FieldMismatch(format!("{context} over {}", m.field())));
            }
        }
        Ok(Bicomodule { hopf: hopf.clone(), name: name.into(), left, right })
    }

    pub fn trivial(hopf: &HopfAlgebra) -> Self {
        let u = hopf.unit().clone();
        Bicomodule { hopf: hopf.clone(), name: "k".into(), left: u.clone(), right: u }
    }

    /// A left comodule with the trivial right coaction `x ↦ x⊗1`.
    pub fn from_left(x: &Comodule) -> Self {
        let h = x.hopf();
        Bicomodule {
            hopf: h.clone(),
            name: x.name().into(),
            left: x.coaction().clone(),
            right: x.id().kronecker(h.unit()),
        }
    }

    /// `X ⊠ Y` for left comodules: left coaction from `X`, right coaction
    /// `x⊗y ↦ x⊗y_{(0)}⊗y_{(-1)}`.
    pub fn boxed(x: &Comodule, y: &Comodule) -> Result<Self> {
        x.hopf().ensure_same(y.hopf())?;
        let h = x.hopf();
        let f = h.field();
        let left = x.coaction().kronecker(&y.id());
        let right = x.id().kronecker(&LinearMap::flip(f, h.dim(), y.dim()).compose(y.coaction())?);
        Bicomodule::new(h, format!("{}⊠{}", x.name(), y.name()), left, right)
    }

    /// `M ⊕ N`, basis of `M` first.
    pub fn direct_sum(m: &Bicomodule, n: &Bicomodule) -> Result<Self> {
        m.hopf.ensure_same(&n.hopf)?;
        let h = &m.hopf;
        let (d, a, b) = (h.dim(), m.dim(), n.dim());
        let s = a + b;
        let mut left = Vec::with_capacity(s);
        let mut right = Vec::with_capacity(s);
        for (shift, size, src) in [(0, a, m), (a, b, n)] {
            for j in 0..size {
                left.push(src.left.column(j).iter().map(|(r, v)| ((r / size) * s + shift + r % size, v.clone())).collect());
                right.push(src.right.column(j).iter().map(|(r, v)| (r + shift * d, v.clone())).collect());
            }
        }
        let name = format!("{}⊕{}", m.name, n.name);
        Bicomodule::new(h, name, LinearMap::from_columns(h.field(), d * s, left)?, LinearMap::from_columns(h.field(), s * d, right)?)
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
        self.left.cols()
    }

    pub fn left(&self) -> &LinearMap {
        &self.left
    }

    pub fn right(&self) -> &LinearMap {
        &self.right
    }

    pub fn id(&self) -> LinearMap {
        LinearMap::identity(self.hopf.field(), self.dim())
    }

    pub fn same_structure(&self, other: &Bicomodule) -> bool {
        self.hopf.same(&other.hopf) && self.left == other.left && self.right == other.right
    }
}

pub fn check_bicomodule(m: &Bicomodule) -> CheckReport {
    let h = m.hopf();
    let f = h.field();
    let (d, n) = (h.dim(), m.dim());
    let id = m.id();
    let (l, r) = (m.left(), m.right());
    let mut rep = CheckReport::new(format!("bicomodule {}", m.name()));

    let lhs = h.comul().kronecker(&id).compose(l).expect("shape");
    let rhs = h.id().kronecker(l).compose(l).expect("shape");
    rep.equal_indexed("left coassociativity", &lhs, &rhs, &[d, d, n], &[n]);
    let cu = h.counit().kronecker(&id).compose(l).expect("shape");
    rep.equal("left counitality", &cu, &id);

    let cop = LinearMap::flip(f, d, d).compose(h.comul()).expect("shape");
    let lhs = r.kronecker(&h.id()).compose(r).expect("shape");
    let rhs = id.kronecker(&cop).compose(r).expect("shape");
    rep.equal_indexed("right coassociativity", &lhs, &rhs, &[n, d, d], &[n]);
    let cu = id.kronecker(h.counit()).compose(r).expect("shape");
    rep.equal("right counitality", &cu, &id);

    let lhs = h.id().kronecker(r).compose(l).expect("shape");
    let rhs = l.kronecker(&h.id()).compose(r).expect("shape");
    rep.equal_indexed("coactions commute", &lhs, &rhs, &[d, n, d], &[n]);
    rep
}

/// Maps intertwining both coactions.
pub fn bicomodule_hom(m: &Bicomodule, n: &Bicomodule) -> Result<SolutionSpace> {
    m.hopf().ensure_same(n.hopf())?;
    let d = m.hopf().dim();
    let f = MapUnknown { offset: 0, rows: n.dim(), cols: m.dim() };
    let mut eqs = HomEquations::new(m.hopf().field(), f.len());
    eqs.coaction(f, m.left(), n.left(), d, 1);
    eqs.coaction(f, m.right(), n.right(), 1, d);
    Ok(eqs.solve())
}

pub fn bicomodule_hom_basis(m: &Bicomodule, n: &Bicomodule) -> Result<Vec<LinearMap>> {
    let space = bicomodule_hom(m, n)?;
    Ok(basis_maps(&space, MapUnknown { offset: 0, rows: n.dim(), cols: m.dim() }))
}

/// Codiagonal tensor product.
pub fn tensor_bicomodule(m: &Bicomodule, n: &Bicomodule) -> Result<Bicomodule> {
    m.hopf().ensure_same(n.hopf())?;
    let h = m.hopf();
    let left = tensor_coaction(h, m.left(), n.left());
    let right = tensor_right_coaction(h, m.right(), n.right());
    Bicomodule::new(h, format!("{}⊗{}", m.name(), n.name()), left, right)
}

/// `m⊗n ↦ m_{(0)}⊗n_{(0)}⊗n_{(1)}m_{(1)}`.
fn tensor_right_coaction(h: &HopfAlgebra, rm: &LinearMap, rn: &LinearMap) -> LinearMap {
    let f = h.field();
    let d = h.dim();
    let (a, b) = (rm.cols(), rn.cols());
    let perm = LinearMap::permute_factors(f, &[a, d, b, d], &[0, 2, 3, 1]);
    let mul = LinearMap::identity(f, a * b).kronecker(h.mul());
    LinearMap::chain(&[&mul, &perm, &rm.kronecker(rn)]).expect("shape")
}

/// Records whether `f: M → N` intertwines both coactions.
pub fn check_bicomodule_morphism(
    report: &mut CheckReport,
    id: &str,
    m: &Bicomodule,
    n: &Bicomodule,
    f: &LinearMap,
) -> bool {
    let h = m.hopf();
    if f.shape() != (n.dim(), m.dim()) {
        report.fail(id, format!("map is {}x{}, expected {}x{}", f.rows(), f.cols(), n.dim(), m.dim()));
        return false;
    }
    let d = h.dim();
    let lhs = h.id().kronecker(f).compose(m.left()).expect("shape");
    let rhs = n.left().compose(f).expect("shape");
    let a = report.equal_indexed(format!("{id}: left coaction"), &lhs, &rhs, &[d, n.dim()], &[m.dim()]);
    let lhs = f.kronecker(&h.id()).compose(m.right()).expect("shape");
    let rhs = n.right().compose(f).expect("shape");
    let b = report.equal_indexed(format!("{id}: right coaction"), &lhs, &rhs, &[n.dim(), d], &[m.dim()]);
    a && b
}

#[derive(Clone, Debug)]
pub struct BicomoduleAlgebra {
    carrier: Bicomodule,
    mul: LinearMap,
    unit: LinearMap,
}

impl BicomoduleAlgebra {
    pub fn new(carrier: Bicomodule, mul: LinearMap, unit: LinearMap) -> Result<Self> {
        let n = carrier.dim();
        let data = AlgebraData { dim: n, mul: mul.clone(), unit: unit.clone() };
        check_algebra(&data)?;
        if mul.field() != carrier.hopf().field() {
            return Err(Error::FieldMismatch("multiplication".into()));
        }
        Ok(BicomoduleAlgebra { carrier, mul, unit })
    }

    /// The ground field with both coactions given by the unit of `H`.
    pub fn trivial(hopf: &HopfAlgebra) -> Self {
        let one = LinearMap::identity(hopf.field(), 1);
        BicomoduleAlgebra { carrier: Bicomodule::trivial(hopf), mul: one.clone(), unit: one }
    }

    pub fn carrier(&self) -> &Bicomodule {
        &self.carrier
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        self.carrier.hopf()
    }

    pub fn name(&self) -> &str {
        self.carrier.name()
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn mul(&self) -> &LinearMap {
        &self.mul
    }

    pub fn unit(&self) -> &LinearMap {
        &self.unit
    }

    pub fn same(&self, other: &BicomoduleAlgebra) -> bool {
        self.carrier.same_structure(&other.carrier) && self.mul == other.mul && self.unit == other.unit
    }

    pub fn ensure_same(&self, other: &BicomoduleAlgebra) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "objects are modules over different algebras {} and {}",
                self.name(),
                other.name()
            )))
        }
    }
}

pub fn check_bicomodule_algebra(b: &BicomoduleAlgebra) -> CheckReport {
    let mut r = CheckReport::new(format!("bicomodule algebra {}", b.name()));
    r.absorb("carrier", check_bicomodule(b.carrier()));
    let data = AlgebraData { dim: b.dim(), mul: b.mul.clone(), unit: b.unit.clone() };
    r.absorb("algebra", check_algebra(&data).expect("validated at construction"));
    let bb = tensor_bicomodule(b.carrier(), b.carrier()).expect("same algebra");
    check_bicomodule_morphism(&mut r, "multiplication", &bb, b.carrier(), &b.mul);
    let k = Bicomodule::trivial(b.hopf());
    check_bicomodule_morphism(&mut r, "unit", &k, b.carrier(), &b.unit);
    r
}

/// A right `B`-module in bicomodules.
#[derive(Clone, Debug)]
pub struct ModuleCategoryObject {
    carrier: Bicomodule,
    algebra: BicomoduleAlgebra,
    action: LinearMap,
}

impl ModuleCategoryObject {
    pub fn new(carrier: Bicomodule, algebra: &BicomoduleAlgebra, action: LinearMap) -> Result<Self> {
        carrier.hopf().ensure_same(algebra.hopf())?;
        let (n, b) = (carrier.dim(), algebra.dim());
        if action.shape() != (n, n * b) {
            return Err(Error::Shape {
                context: "module action".into(),
                expected_rows: n,
                expected_cols: n * b,
                rows: action.rows(),
                cols: action.cols(),
            });
        }
        Ok(ModuleCategoryObject { carrier, algebra: algebra.clone(), action })
    }

    /// `B` as a right module over itself.
    pub fn regular(b: &BicomoduleAlgebra) -> Self {
        ModuleCategoryObject { carrier: b.carrier().clone(), algebra: b.clone(), action: b.mul().clone() }
    }

    pub fn carrier(&self) -> &Bicomodule {
        &self.carrier
    }

    pub fn algebra(&self) -> &BicomoduleAlgebra {
        &self.algebra
    }

    pub fn action(&self) -> &LinearMap {
        &self.action
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        self.carrier.hopf()
    }

    pub fn name(&self) -> &str {
        self.carrier.name()
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.carrier = self.carrier.renamed(name);
        self
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn id(&self) -> LinearMap {
        self.carrier.id()
    }
}

pub fn check_module_object(m: &ModuleCategoryObject) -> CheckReport {
    let b = m.algebra();
    let id_m = m.id();
    let id_b = LinearMap::identity(m.hopf().field(), b.dim());
    let a = m.action();
    let mut r = CheckReport::new(format!("module object {}", m.name()));
    r.absorb("carrier", check_bicomodule(m.carrier()));
    let lhs = a.compose(&a.kronecker(&id_b)).expect("shape");
    let rhs = a.compose(&id_m.kronecker(b.mul())).expect("shape");
    r.equal_indexed("action associativity", &lhs, &rhs, &[m.dim()], &[m.dim(), b.dim(), b.dim()]);
    let u = a.compose(&id_m.kronecker(b.unit())).expect("shape");
    r.equal("action unitality", &u, &id_m);
    let mb = tensor_bicomodule(m.carrier(), b.carrier()).expect("same algebra");
    check_bicomodule_morphism(&mut r, "action", &mb, m.carrier(), a);
    r
}

/// `X ▷ M`.
pub fn left_act(x: &Comodule, m: &ModuleCategoryObject) -> Result<ModuleCategoryObject> {
    x.hopf().ensure_same(m.hopf())?;
    let h = x.hopf();
    let left = tensor_coaction(h, x.coaction(), m.carrier().left());
    let right = x.id().kronecker(m.carrier().right());
    let carrier = Bicomodule::new(h, format!("{}▷{}", x.name(), m.name()), left, right)?;
    let action = x.id().kronecker(m.action());
    ModuleCategoryObject::new(carrier, m.algebra(), action)
}

/// `M ◁ X`.
pub fn right_act(m: &ModuleCategoryObject, x: &Comodule) -> Result<ModuleCategoryObject> {
    x.hopf().ensure_same(m.hopf())?;
    let h = x.hopf();
    let f = h.field();
    let (d, n, k) = (h.dim(), m.dim(), x.dim());
    let left = m.carrier().left().kronecker(&x.id());
    let perm = LinearMap::permute_factors(f, &[n, d, d, k], &[0, 3, 1, 2]);
    let right = LinearMap::chain(&[
        &LinearMap::identity(f, n * k).kronecker(h.mul()),
        &perm,
        &m.carrier().right().kronecker(x.coaction()),
    ])?;
    let carrier = Bicomodule::new(h, format!("{}◁{}", m.name(), x.name()), left, right)?;
    let b = m.algebra().dim();
    let swap = LinearMap::permute_factors(f, &[n, k, b], &[0, 2, 1]);
    let action = m.action().kronecker(&x.id()).compose(&swap)?;
    ModuleCategoryObject::new(carrier, m.algebra(), action)
}

/// Records whether `f` is a morphism of module objects.
pub fn check_module_morphism(
    report: &mut CheckReport,
    id: &str,
    m: &ModuleCategoryObject,
    n: &ModuleCategoryObject,
    f: &LinearMap,
) -> bool {
    if !check_bicomodule_morphism(report, id, m.carrier(), n.carrier(), f) {
        return false;
    }
    let id_b = LinearMap::identity(m.hopf().field(), m.algebra().dim());
    let lhs = f.compose(m.action()).expect("shape");
    let rhs = n.action().compose(&f.kronecker(&id_b)).expect("shape");
    report.equal(format!("{id}: action"), &lhs, &rhs)
}

pub fn module_object_hom(m1: &ModuleCategoryObject, m2: &ModuleCategoryObject) -> Result<SolutionSpace> {
    m1.hopf().ensure_same(m2.hopf())?;
    m1.algebra().ensure_same(m2.algebra())?;
    let d = m1.hopf().dim();
    let f = MapUnknown { offset: 0, rows: m2.dim(), cols: m1.dim() };
    let mut eqs = HomEquations::new(m1.hopf().field(), f.len());
    eqs.coaction(f, m1.carrier().left(), m2.carrier().left(), d, 1);
    eqs.coaction(f, m1.carrier().right(), m2.carrier().right(), 1, d);
    eqs.action(f, m1.action(), m2.action(), 1, m1.algebra().dim());
    Ok(eqs.solve())
}

pub fn module_object_hom_basis(m1: &ModuleCategoryObject, m2: &ModuleCategoryObject) -> Result<Vec<LinearMap>> {
    let space = module_object_hom(m1, m2)?;
    Ok(basis_maps(&space, MapUnknown { offset: 0, rows: m2.dim(), cols: m1.dim() }))
}
