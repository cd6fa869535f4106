//! Relative Hopf bimodules over `(H̃, B)`, induction `M ↦ H̃⊗M` with its
//! balancing, the correspondence between monad modules `ρ: H̃⊗M → M` and
//! half-braidings `γ(X): X▷M → M◁X^∨∨`, and the twisted Yetter-Drinfeld
//! condition.
//!
//! Closed forms used throughout (the double dual `X^∨∨` shares the basis
//! of `X`):
//! - `β_{M,X}(h⊗m⊗x) = hS(x_{(-1)}) ⊗ x_{(0)} ⊗ m`, inverse
//!   `h⊗x⊗m ↦ hx_{(-1)} ⊗ m ⊗ x_{(0)}`;
//! - `γ(X)(x⊗n) = x_{(-1)}.n ⊗ x_{(0)}`;
//! - `ρ(h⊗n) = (id⊗ev)(γ(H)(h⊗n) ⊗ ε)`.

use crate::action::{
    check_bicomodule, check_bicomodule_morphism, check_module_morphism, left_act, right_act,
    tensor_bicomodule, Bicomodule, BicomoduleAlgebra, ModuleCategoryObject,
};
use crate::coend::{hat_algebra, j_map, twisted_coend_algebra};
use crate::comodule::{comodule_hom_basis, double_dual, tensor_coaction, Comodule};
use crate::error::{Error, Result};
use crate::hom::{basis_maps, HomEquations, MapUnknown};
use crate::hopf::HopfAlgebra;
use crate::linalg::{LinearMap, SolutionSpace};
use crate::report::CheckReport;

/// An `H̃`-`B`-bimodule in bicomodules. The left action is the monad
/// module structure `ρ`.
#[derive(Clone, Debug)]
pub struct HopfBimodule {
    carrier: Bicomodule,
    coend: BicomoduleAlgebra,
    algebra: BicomoduleAlgebra,
    left_action: LinearMap,
    right_action: LinearMap,
}

impl HopfBimodule {
    pub fn new(
        carrier: Bicomodule,
        coend: &BicomoduleAlgebra,
        algebra: &BicomoduleAlgebra,
        left_action: LinearMap,
        right_action: LinearMap,
    ) -> Result<Self> {
        carrier.hopf().ensure_same(coend.hopf())?;
        carrier.hopf().ensure_same(algebra.hopf())?;
        let n = carrier.dim();
        for (context, m, cols) in [
            ("left action", &left_action, coend.dim() * n),
            ("right action", &right_action, n * algebra.dim()),
        ] {
            if m.shape() != (n, cols) {
                return Err(Error::Shape {
                    context: context.into(),
                    expected_rows: n,
                    expected_cols: cols,
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
        }
        Ok(HopfBimodule { carrier, coend: coend.clone(), algebra: algebra.clone(), left_action, right_action })
    }

    pub fn carrier(&self) -> &Bicomodule {
        &self.carrier
    }

    pub fn coend(&self) -> &BicomoduleAlgebra {
        &self.coend
    }

    pub fn algebra(&self) -> &BicomoduleAlgebra {
        &self.algebra
    }

    pub fn left_action(&self) -> &LinearMap {
        &self.left_action
    }

    pub fn right_action(&self) -> &LinearMap {
        &self.right_action
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

    pub fn id(&self) -> LinearMap {
        self.carrier.id()
    }

    /// The same object with a different left action.
    pub fn with_left_action(&self, rho: LinearMap) -> Result<Self> {
        HopfBimodule::new(self.carrier.clone(), &self.coend, &self.algebra, rho, self.right_action.clone())
    }
}

/// Associativity and unitality of the left action alone.
pub fn check_monad_module(n: &HopfBimodule) -> CheckReport {
    let a = n.coend();
    let rho = n.left_action();
    let id_n = n.id();
    let id_a = LinearMap::identity(n.hopf().field(), a.dim());
    let mut r = CheckReport::new(format!("monad module {}", n.name()));
    let lhs = rho.compose(&a.mul().kronecker(&id_n)).expect("shape");
    let rhs = rho.compose(&id_a.kronecker(rho)).expect("shape");
    r.equal_indexed("left associativity", &lhs, &rhs, &[n.dim()], &[a.dim(), a.dim(), n.dim()]);
    let u = rho.compose(&a.unit().kronecker(&id_n)).expect("shape");
    r.equal("left unitality", &u, &id_n);
    r
}

pub fn check_hopf_bimodule(n: &HopfBimodule) -> CheckReport {
    let (a, b) = (n.coend(), n.algebra());
    let f = n.hopf().field();
    let (rho, act) = (n.left_action(), n.right_action());
    let id_n = n.id();
    let id_a = LinearMap::identity(f, a.dim());
    let id_b = LinearMap::identity(f, b.dim());
    let mut r = CheckReport::new(format!("hopf bimodule {}", n.name()));
    r.absorb("carrier", check_bicomodule(n.carrier()));
    r.checks.extend(check_monad_module(n).checks);
    let lhs = act.compose(&act.kronecker(&id_b)).expect("shape");
    let rhs = act.compose(&id_n.kronecker(b.mul())).expect("shape");
    r.equal_indexed("right associativity", &lhs, &rhs, &[n.dim()], &[n.dim(), b.dim(), b.dim()]);
    let u = act.compose(&id_n.kronecker(b.unit())).expect("shape");
    r.equal("right unitality", &u, &id_n);
    let lhs = act.compose(&rho.kronecker(&id_b)).expect("shape");
    let rhs = rho.compose(&id_a.kronecker(act)).expect("shape");
    r.equal_indexed("actions commute", &lhs, &rhs, &[n.dim()], &[a.dim(), n.dim(), b.dim()]);
    let an = tensor_bicomodule(a.carrier(), n.carrier()).expect("same algebra");
    check_bicomodule_morphism(&mut r, "left action", &an, n.carrier(), rho);
    let nb = tensor_bicomodule(n.carrier(), b.carrier()).expect("same algebra");
    check_bicomodule_morphism(&mut r, "right action", &nb, n.carrier(), act);
    r
}

/// `H̃ ⊗ M` with `H̃` acting by multiplication on the left factor.
pub fn induce(m: &ModuleCategoryObject) -> Result<HopfBimodule> {
    let htilde = twisted_coend_algebra(m.hopf())?;
    induce_with(&htilde, m)
}

pub(crate) fn induce_with(htilde: &BicomoduleAlgebra, m: &ModuleCategoryObject) -> Result<HopfBimodule> {
    let carrier = tensor_bicomodule(htilde.carrier(), m.carrier())?.renamed(format!("H̃⊗{}", m.name()));
    let left = htilde.mul().kronecker(&m.id());
    let right = LinearMap::identity(m.hopf().field(), htilde.dim()).kronecker(m.action());
    HopfBimodule::new(carrier, htilde, m.algebra(), left, right)
}

/// The underlying module object.
pub fn forget(n: &HopfBimodule) -> ModuleCategoryObject {
    ModuleCategoryObject::new(n.carrier().clone(), n.algebra(), n.right_action().clone())
        .expect("shapes validated at construction")
}

pub fn hom_hopf_bimodule(n1: &HopfBimodule, n2: &HopfBimodule) -> Result<SolutionSpace> {
    n1.hopf().ensure_same(n2.hopf())?;
    n1.algebra().ensure_same(n2.algebra())?;
    n1.coend().ensure_same(n2.coend())?;
    let d = n1.hopf().dim();
    let f = MapUnknown { offset: 0, rows: n2.dim(), cols: n1.dim() };
    let mut eqs = HomEquations::new(n1.hopf().field(), f.len());
    eqs.action(f, n1.left_action(), n2.left_action(), n1.coend().dim(), 1);
    eqs.action(f, n1.right_action(), n2.right_action(), 1, n1.algebra().dim());
    eqs.coaction(f, n1.carrier().left(), n2.carrier().left(), d, 1);
    eqs.coaction(f, n1.carrier().right(), n2.carrier().right(), 1, d);
    Ok(eqs.solve())
}

pub fn hom_hopf_bimodule_basis(n1: &HopfBimodule, n2: &HopfBimodule) -> Result<Vec<LinearMap>> {
    let space = hom_hopf_bimodule(n1, n2)?;
    Ok(basis_maps(&space, MapUnknown { offset: 0, rows: n2.dim(), cols: n1.dim() }))
}

/// Records whether `f` is a morphism of Hopf bimodules.
pub fn check_hopf_bimodule_morphism(
    report: &mut CheckReport,
    id: &str,
    n1: &HopfBimodule,
    n2: &HopfBimodule,
    f: &LinearMap,
) -> bool {
    if !check_bicomodule_morphism(report, id, n1.carrier(), n2.carrier(), f) {
        return false;
    }
    let field = n1.hopf().field();
    let id_a = LinearMap::identity(field, n1.coend().dim());
    let id_b = LinearMap::identity(field, n1.algebra().dim());
    let lhs = f.compose(n1.left_action()).expect("shape");
    let rhs = n2.left_action().compose(&id_a.kronecker(f)).expect("shape");
    let a = report.equal(format!("{id}: left action"), &lhs, &rhs);
    let lhs = f.compose(n1.right_action()).expect("shape");
    let rhs = n2.right_action().compose(&f.kronecker(&id_b)).expect("shape");
    let b = report.equal(format!("{id}: right action"), &lhs, &rhs);
    a && b
}

/// `h⊗m⊗x ↦ hS(x_{(-1)}) ⊗ x_{(0)} ⊗ m` on `H⊗M⊗X → H⊗X⊗M`.
pub fn balancing_map(h: &HopfAlgebra, m_dim: usize, x: &Comodule) -> LinearMap {
    let f = h.field();
    let (d, k) = (h.dim(), x.dim());
    let coact = LinearMap::kron_all(&[&h.id(), &LinearMap::identity(f, m_dim), x.coaction()]);
    let perm = LinearMap::permute_factors(f, &[d, m_dim, d, k], &[0, 2, 3, 1]);
    let h_s = h.mul().compose(&h.id().kronecker(h.antipode())).expect("shape");
    let mult = h_s.kronecker(&LinearMap::identity(f, k * m_dim));
    LinearMap::chain(&[&mult, &perm, &coact]).expect("shape")
}

/// `h⊗x⊗m ↦ hx_{(-1)} ⊗ m ⊗ x_{(0)}` on `H⊗X⊗M → H⊗M⊗X`.
pub fn balancing_inverse_map(h: &HopfAlgebra, m_dim: usize, x: &Comodule) -> LinearMap {
    let f = h.field();
    let (d, k) = (h.dim(), x.dim());
    let coact = LinearMap::kron_all(&[&h.id(), x.coaction(), &LinearMap::identity(f, m_dim)]);
    let perm = LinearMap::permute_factors(f, &[d, d, k, m_dim], &[0, 1, 3, 2]);
    let mult = h.mul().kronecker(&LinearMap::identity(f, m_dim * k));
    LinearMap::chain(&[&mult, &perm, &coact]).expect("shape")
}

/// `β_{M,X}: H̃⊗(M◁X) → H̃⊗(X▷M)` with its inverse and end objects.
#[derive(Clone, Debug)]
pub struct BalancingWitness {
    pub source: HopfBimodule,
    pub target: HopfBimodule,
    pub beta: LinearMap,
    pub inverse: LinearMap,
}

/// Builds `β_{M,X}` and verifies invertibility and that it is a morphism of
/// Hopf bimodules.
pub fn balancing(m: &ModuleCategoryObject, x: &Comodule) -> Result<BalancingWitness> {
    let htilde = twisted_coend_algebra(m.hopf())?;
    let w = balancing_unchecked(&htilde, m, x)?;
    let report = check_balancing_witness(&w);
    if let Some(c) = report.failures().next() {
        return Err(Error::Diagram {
            diagram: format!("balancing at ({}, {})", m.name(), x.name()),
            detail: c.id.clone(),
        });
    }
    Ok(w)
}

pub(crate) fn balancing_unchecked(
    htilde: &BicomoduleAlgebra,
    m: &ModuleCategoryObject,
    x: &Comodule,
) -> Result<BalancingWitness> {
    let h = m.hopf();
    let source = induce_with(htilde, &right_act(m, x)?)?;
    let target = induce_with(htilde, &left_act(x, m)?)?;
    Ok(BalancingWitness {
        source,
        target,
        beta: balancing_map(h, m.dim(), x),
        inverse: balancing_inverse_map(h, m.dim(), x),
    })
}

pub fn check_balancing_witness(w: &BalancingWitness) -> CheckReport {
    let mut r = CheckReport::new(format!("balancing {}", w.source.name()));
    let round = w.inverse.compose(&w.beta).expect("shape");
    r.condition("inverse after beta", round.is_identity(), || "not the identity".into());
    let round = w.beta.compose(&w.inverse).expect("shape");
    r.condition("beta after inverse", round.is_identity(), || "not the identity".into());
    check_hopf_bimodule_morphism(&mut r, "beta morphism", &w.source, &w.target, &w.beta);
    r
}

/// `β_{M',X} ∘ (id⊗f⊗id) = (id⊗id⊗f) ∘ β_{M,X}` for `f: M → M'`.
pub fn balancing_natural_in_module(
    h: &HopfAlgebra,
    m: usize,
    m2: usize,
    x: &Comodule,
    beta: &LinearMap,
    beta2: &LinearMap,
    f: &LinearMap,
) -> bool {
    let lhs = beta2.compose(&LinearMap::kron_all(&[&h.id(), f, &x.id()])).expect("shape");
    let rhs = LinearMap::kron_all(&[&h.id(), &x.id(), f]).compose(beta).expect("shape");
    debug_assert_eq!((f.cols(), f.rows()), (m, m2));
    lhs == rhs
}

/// `β_{M,X'} ∘ (id⊗id⊗g) = (id⊗g⊗id) ∘ β_{M,X}` for `g: X → X'`.
pub fn balancing_natural_in_comodule(
    h: &HopfAlgebra,
    m: usize,
    beta: &LinearMap,
    beta2: &LinearMap,
    g: &LinearMap,
) -> bool {
    let id_m = LinearMap::identity(h.field(), m);
    let lhs = beta2.compose(&LinearMap::kron_all(&[&h.id(), &id_m, g])).expect("shape");
    let rhs = LinearMap::kron_all(&[&h.id(), g, &id_m]).compose(beta).expect("shape");
    lhs == rhs
}

/// The coherence square `β_{Y▷M,X} ∘ β_{M◁X,Y} = β_{M,X⊗Y}` and the unit
/// triangle `β_{M,𝕀} = id`.
pub fn check_balanced_axioms(m: &ModuleCategoryObject, x: &Comodule, y: &Comodule) -> Result<CheckReport> {
    let h = m.hopf();
    let mx = right_act(m, x)?;
    let ym = left_act(y, m)?;
    let first = balancing_map(h, mx.dim(), y);
    let second = balancing_map(h, ym.dim(), x);
    let xy = Comodule::new(h, format!("{}⊗{}", x.name(), y.name()), tensor_coaction(h, x.coaction(), y.coaction()))?;
    let direct = balancing_map(h, m.dim(), &xy);
    let mut r = CheckReport::new(format!("balanced axioms ({}, {}, {})", m.name(), x.name(), y.name()));
    r.equal_indexed(
        "coherence square",
        &second.compose(&first)?,
        &direct,
        &[h.dim(), x.dim(), y.dim(), m.dim()],
        &[h.dim(), m.dim(), x.dim(), y.dim()],
    );
    let unit = balancing_map(h, m.dim(), &Comodule::trivial(h));
    r.condition("unit triangle", unit.is_identity(), || "β at the unit object is not the identity".into());
    Ok(r)
}

/// `γ(X): X⊗N → N⊗X^∨∨` as the composite
/// `(ρ⊗id) ∘ ((j_X⊗id_N)⊗id) ∘ reorder ∘ (id⊗coev_{X^∨})`, evaluated one
/// basis vector at a time: `x_a⊗n ↦ Σ_i ρ(j_X(x_a⊗x^i)⊗n) ⊗ x_i`.
pub fn rho_to_gamma(n: &HopfBimodule, x: &Comodule) -> Result<LinearMap> {
    n.hopf().ensure_same(x.hopf())?;
    let f = n.hopf().field();
    let (k, nn) = (x.dim(), n.dim());
    let j = j_map(x);
    let rho = n.left_action();
    let mut entries = Vec::new();
    for a in 0..k {
        for c in 0..nn {
            for i in 0..k {
                let mut acc = Vec::new();
                for (hh, s) in j.column(a * k + i) {
                    acc.extend(rho.column(hh * nn + c).iter().map(|(r, t)| (*r, s * t)));
                }
                entries.extend(acc.into_iter().map(|(r, v)| (r * k + i, a * nn + c, v)));
            }
        }
    }
    LinearMap::from_entries(f, nn * k, k * nn, entries)
}

/// A module object with maps `γ(X): X▷M → M◁X^∨∨` on a family of comodules.
#[derive(Clone, Debug)]
pub struct CenterStructure {
    pub base: ModuleCategoryObject,
    pub gamma: Vec<(Comodule, LinearMap)>,
}

impl CenterStructure {
    pub fn from_bimodule(n: &HopfBimodule, family: &[Comodule]) -> Result<Self> {
        let gamma = family
            .iter()
            .map(|x| Ok((x.clone(), rho_to_gamma(n, x)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(CenterStructure { base: forget(n), gamma })
    }

    /// The component at a comodule with the given coaction.
    pub fn at(&self, x: &Comodule) -> Option<&LinearMap> {
        self.gamma.iter().find(|(y, _)| y.coaction() == x.coaction()).map(|(_, g)| g)
    }
}

/// `ρ(h⊗n) = (id_N⊗ev)(γ(H)(h⊗n) ⊗ ε)`, followed by verification of the
/// monad module laws.
pub fn gamma_to_rho(c: &CenterStructure) -> Result<HopfBimodule> {
    let h = c.base.hopf();
    let f = h.field();
    let d = h.dim();
    let regular = Comodule::regular(h);
    let gamma_h = c
        .at(&regular)
        .ok_or_else(|| Error::Precondition("the family must contain the regular comodule".into()))?;
    let epsilon = h.counit().transpose();
    let ev = LinearMap::from_entries(f, 1, d * d, (0..d).map(|i| (0, i * d + i, f.one())))?;
    let rho = c.base.id().kronecker(&ev).compose(&gamma_h.kronecker(&epsilon))?;
    let htilde = twisted_coend_algebra(h)?;
    let n = HopfBimodule::new(c.base.carrier().clone(), &htilde, c.base.algebra(), rho, c.base.action().clone())?;
    let laws = check_monad_module(&n);
    if !laws.passed() {
        return Err(Error::Diagram {
            diagram: "gamma does not satisfy hexagon/naturality".into(),
            detail: laws.failed_ids().join(", "),
        });
    }
    Ok(n)
}

/// `γ(X⊗Y) = (γ(X)⊗id) ∘ (id_X⊗γ(Y))`.
pub fn check_hexagon(c: &CenterStructure, x: &Comodule, y: &Comodule) -> Result<CheckReport> {
    let h = c.base.hopf();
    let missing = |z: &str| Error::Precondition(format!("no γ component at {z}"));
    let gx = c.at(x).ok_or_else(|| missing(x.name()))?;
    let gy = c.at(y).ok_or_else(|| missing(y.name()))?;
    let xy = Comodule::new(h, format!("{}⊗{}", x.name(), y.name()), tensor_coaction(h, x.coaction(), y.coaction()))?;
    let gxy = c.at(&xy).ok_or_else(|| missing(xy.name()))?;
    let rhs = gx.kronecker(&y.id()).compose(&x.id().kronecker(gy))?;
    let mut r = CheckReport::new(format!("hexagon {}, {}", x.name(), y.name()));
    r.equal_indexed(
        "hexagon",
        gxy,
        &rhs,
        &[c.base.dim(), x.dim(), y.dim()],
        &[x.dim(), y.dim(), c.base.dim()],
    );
    Ok(r)
}

/// Invertibility, the module-morphism property, the hexagon on every pair
/// whose product is in the family, and naturality against computed Hom
/// bases. Check ids start with `invertibility`, `module morphism`,
/// `hexagon` or `naturality`.
pub fn check_center(c: &CenterStructure) -> Result<CheckReport> {
    center_checks(c, false)
}

/// The id of the first failing center check, if any; stops early.
pub fn center_defect(c: &CenterStructure) -> Result<Option<String>> {
    let r = center_checks(c, true)?;
    let first = r.failures().next().map(|f| f.id.clone());
    Ok(first)
}

fn center_checks(c: &CenterStructure, stop_early: bool) -> Result<CheckReport> {
    let m = &c.base;
    let h = m.hopf();
    let mut r = CheckReport::new(format!("center structure on {}", m.name()));
    let done = |r: &CheckReport| stop_early && !r.passed();
    for (x, g) in &c.gamma {
        let n = x.dim() * m.dim();
        let rank = g.rank();
        r.condition(format!("invertibility {}", x.name()), rank == n, || format!("rank {rank} < {n}"));
        if done(&r) {
            return Ok(r);
        }
    }
    for (x, g) in &c.gamma {
        let source = left_act(x, m)?;
        let target = right_act(m, &double_dual(x))?;
        check_module_morphism(&mut r, &format!("module morphism {}", x.name()), &source, &target, g);
        if done(&r) {
            return Ok(r);
        }
    }
    for (x, _) in &c.gamma {
        for (y, _) in &c.gamma {
            let xy = Comodule::new(h, "", tensor_coaction(h, x.coaction(), y.coaction()))?;
            if c.at(&xy).is_some() {
                r.absorb("hexagon", check_hexagon(c, x, y)?);
                if done(&r) {
                    return Ok(r);
                }
            }
        }
    }
    for (x, gx) in &c.gamma {
        for (y, gy) in &c.gamma {
            for (k, f) in comodule_hom_basis(x, y)?.iter().enumerate() {
                let lhs = gy.compose(&f.kronecker(&m.id()))?;
                let rhs = m.id().kronecker(f).compose(gx)?;
                r.condition(format!("naturality {} → {} #{k}", x.name(), y.name()), lhs == rhs, || {
                    "square does not commute".into()
                });
                if done(&r) {
                    return Ok(r);
                }
            }
        }
    }
    Ok(r)
}

fn check_h_action(h: &HopfAlgebra, x: &Comodule, action: &LinearMap) -> Result<()> {
    let n = x.dim();
    if action.shape() != (n, h.dim() * n) {
        return Err(Error::Shape {
            context: "H-action".into(),
            expected_rows: n,
            expected_cols: h.dim() * n,
            rows: action.rows(),
            cols: action.cols(),
        });
    }
    let assoc_l = action.compose(&h.mul().kronecker(&x.id()))?;
    let assoc_r = action.compose(&h.id().kronecker(action))?;
    let unit = action.compose(&h.unit().kronecker(&x.id()))?;
    if assoc_l != assoc_r || !unit.is_identity() {
        return Err(Error::Precondition("not an associative unital H-action".into()));
    }
    Ok(())
}

/// `h⊗x ↦ h_{(1)}x_{(-1)} ⊗ h_{(2)}.x_{(0)}` and
/// `h⊗x ↦ (h_{(1)}.x)_{(-1)} h_{(2)} ⊗ (h_{(1)}.x)_{(0)}`, each optionally
/// followed by `S²` on the first product factor.
fn yd_sides(h: &HopfAlgebra, x: &Comodule, action: &LinearMap, twist: Option<&LinearMap>) -> (LinearMap, LinearMap) {
    let f = h.field();
    let (d, n) = (h.dim(), x.dim());
    let id_h = h.id();
    let outer = |m: LinearMap| match twist {
        Some(s2) => s2.compose(&m).expect("shape"),
        None => m,
    };
    let lhs = LinearMap::chain(&[
        &outer(h.mul().clone()).kronecker(action),
        &LinearMap::permute_factors(f, &[d, d, d, n], &[0, 2, 1, 3]),
        &h.comul().kronecker(x.coaction()),
    ])
    .expect("shape");
    let first = match twist {
        Some(s2) => h.mul().compose(&s2.kronecker(&id_h)).expect("shape"),
        None => h.mul().clone(),
    };
    let rhs = LinearMap::chain(&[
        &first.kronecker(&x.id()),
        &LinearMap::permute_factors(f, &[d, n, d], &[0, 2, 1]),
        &x.coaction().kronecker(&id_h),
        &action.kronecker(&id_h),
        &LinearMap::permute_factors(f, &[d, d, n], &[0, 2, 1]),
        &h.comul().kronecker(&x.id()),
    ])
    .expect("shape");
    (lhs, rhs)
}

/// `S²(h_{(1)}x_{(-1)}) ⊗ h_{(2)}.x_{(0)} = S²((h_{(1)}.x)_{(-1)}) h_{(2)} ⊗ (h_{(1)}.x)_{(0)}`.
pub fn twisted_yd_check(x: &Comodule, action: &LinearMap) -> Result<CheckReport> {
    let h = x.hopf();
    check_h_action(h, x, action)?;
    let s2 = h.antipode().compose(h.antipode())?;
    let (lhs, rhs) = yd_sides(h, x, action, Some(&s2));
    let mut r = CheckReport::new(format!("twisted YD {}", x.name()));
    r.equal_indexed("twisted Yetter-Drinfeld", &lhs, &rhs, &[h.dim(), x.dim()], &[h.dim(), x.dim()]);
    Ok(r)
}

/// The untwisted condition `h_{(1)}x_{(-1)} ⊗ h_{(2)}.x_{(0)} = (h_{(1)}.x)_{(-1)} h_{(2)} ⊗ (h_{(1)}.x)_{(0)}`.
pub fn ordinary_yd_check(x: &Comodule, action: &LinearMap) -> Result<CheckReport> {
    let h = x.hopf();
    check_h_action(h, x, action)?;
    let (lhs, rhs) = yd_sides(h, x, action, None);
    let mut r = CheckReport::new(format!("YD {}", x.name()));
    r.equal_indexed("Yetter-Drinfeld", &lhs, &rhs, &[h.dim(), x.dim()], &[h.dim(), x.dim()]);
    Ok(r)
}

/// The free twisted Yetter-Drinfeld module on a comodule `Y`: `H⊗Y` with
/// `h.(k⊗y) = hk⊗y` and `k⊗y ↦ k_{(1)}y_{(-1)}S⁻¹(k_{(3)}) ⊗ k_{(2)} ⊗ y_{(0)}`.
pub fn free_twisted_yd(y: &Comodule) -> Result<(Comodule, LinearMap)> {
    let h = y.hopf();
    let f = h.field();
    let (d, n) = (h.dim(), y.dim());
    let delta2 = h.comul().kronecker(&h.id()).compose(h.comul())?;
    let coact = delta2.kronecker(y.coaction());
    let perm = LinearMap::permute_factors(f, &[d, d, d, d, n], &[0, 3, 2, 1, 4]);
    let triple = LinearMap::chain(&[h.mul(), &h.mul().kronecker(h.antipode_inv())])?;
    let coaction = LinearMap::chain(&[&triple.kronecker(&LinearMap::identity(f, d * n)), &perm, &coact])?;
    let x = Comodule::new(h, format!("H⊗{}", y.name()), coaction)?;
    let action = h.mul().kronecker(&y.id());
    Ok((x, action))
}

/// `X ▷ Ĥ`, an object of the module category over `Ĥ`.
pub fn yd_induction(x: &Comodule) -> Result<ModuleCategoryObject> {
    let hat = hat_algebra(x.hopf())?;
    left_act(x, &ModuleCategoryObject::regular(&hat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;
    use crate::zoo::ZooEntry;

    #[test]
    fn balancing_inverse_round_trip_on_h4() {
        let h = ZooEntry::SweedlerH4.build(Field::Rational).unwrap();
        let x = Comodule::regular(&h);
        let beta = balancing_map(&h, 1, &x);
        let inv = balancing_inverse_map(&h, 1, &x);
        assert!(inv.compose(&beta).unwrap().is_identity());
    }

    fn gamma_composite(n: &HopfBimodule, x: &Comodule) -> LinearMap {
        let f = n.hopf().field();
        let (k, nn) = (x.dim(), n.dim());
        let coev = LinearMap::from_entries(f, k * k, 1, (0..k).map(|i| (i * k + i, 0, f.one()))).unwrap();
        let step1 = LinearMap::identity(f, k * nn).kronecker(&coev);
        let step2 = LinearMap::permute_factors(f, &[k, nn, k, k], &[0, 2, 1, 3]);
        let step3 = LinearMap::kron_all(&[&j_map(x), &n.id(), &x.id()]);
        let step4 = n.left_action().kronecker(&x.id());
        LinearMap::chain(&[&step4, &step3, &step2, &step1]).unwrap()
    }

    #[test]
    fn gamma_matches_literal_composite() {
        let h = ZooEntry::SweedlerH4.build(Field::Rational).unwrap();
        let m = ModuleCategoryObject::regular(&hat_algebra(&h).unwrap());
        let n = induce(&m).unwrap();
        for x in [Comodule::trivial(&h), Comodule::regular(&h)] {
            assert_eq!(rho_to_gamma(&n, &x).unwrap(), gamma_composite(&n, &x));
        }
    }
}
