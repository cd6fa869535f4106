//! The coend `H̃ = ∫^X X ⊠ X^∨` of `comod H`, its dinatural family, the
//! factorization of co-wedges through it, and the bicomodule algebra `Ĥ`.
//!
//! `H̃` is `H` with left coaction `Δ`, right coaction `h ↦ h_{(1)}⊗S⁻¹(h_{(2)})`
//! and the algebra structure of `H`. The dinatural family is
//! `j_X(x⊗φ) = x_{(-1)} φ(x_{(0)})`. `Ĥ` is `H` with
//! `h ↦ h_{(1)}⊗h_{(2)}⊗S(h_{(3)})`, i.e. right coaction `h_{(1)}⊗S(h_{(2)})`.

use crate::action::{check_bicomodule_algebra, check_bicomodule_morphism, Bicomodule, BicomoduleAlgebra};
use crate::comodule::{comodule_hom_basis, right_dual, tensor_comodule, Comodule};
use crate::error::{Error, Result};
use crate::hom::{HomEquations, MapUnknown};
use crate::hopf::HopfAlgebra;
use crate::linalg::LinearMap;
use crate::report::CheckReport;

fn hopf_carrier_algebra(h: &HopfAlgebra, name: &str, right_twist: &LinearMap) -> Result<BicomoduleAlgebra> {
    let right = h.id().kronecker(right_twist).compose(h.comul())?;
    let carrier = Bicomodule::new(h, name, h.comul().clone(), right)?;
    let b = BicomoduleAlgebra::new(carrier, h.mul().clone(), h.unit().clone())?;
    let report = check_bicomodule_algebra(&b);
    if let Some(c) = report.failures().next() {
        return Err(Error::Internal(format!("{name} over {}: {} fails", h.name(), c.id)));
    }
    Ok(b)
}

/// `H̃`, verified as a bicomodule algebra.
pub fn twisted_coend_algebra(h: &HopfAlgebra) -> Result<BicomoduleAlgebra> {
    hopf_carrier_algebra(h, "H̃", h.antipode_inv())
}

/// `Ĥ`, verified as a bicomodule algebra.
pub fn hat_algebra(h: &HopfAlgebra) -> Result<BicomoduleAlgebra> {
    hopf_carrier_algebra(h, "Ĥ", h.antipode())
}

/// `(id_H ⊗ (ev_X ∘ τ)) ∘ (δ_X ⊗ id)`, without verification. Column
/// `a·n + i` of `j_X` is the `H`-component of `δ(x_a)` at `x_i`.
pub(crate) fn j_map(x: &Comodule) -> LinearMap {
    let h = x.hopf();
    let n = x.dim();
    let mut columns = vec![Vec::new(); n * n];
    for a in 0..n {
        for (r, s) in x.coaction().column(a) {
            columns[a * n + r % n].push((r / n, s.clone()));
        }
    }
    LinearMap::from_columns(h.field(), h.dim(), columns).expect("in range")
}

/// `j_X: X⊗X^∨ → H̃`, verified to be a bicomodule morphism from `X⊠X^∨`.
pub fn dinatural_j(x: &Comodule) -> Result<LinearMap> {
    let j = j_map(x);
    let mut r = CheckReport::new("j");
    let dual = right_dual(x)?;
    let source = Bicomodule::boxed(x, &dual.object)?;
    let target = twisted_coend_algebra(x.hopf())?;
    if !check_bicomodule_morphism(&mut r, "j", &source, target.carrier(), &j) {
        return Err(Error::Internal(format!("j at {} is not a bicomodule morphism", x.name())));
    }
    Ok(j)
}

/// The bicomodule `X ⊠ X^∨` on which `j_X` is defined.
pub fn cowedge_source(x: &Comodule) -> Result<Bicomodule> {
    Bicomodule::boxed(x, &right_dual(x)?.object)
}

/// `α_X ∘ (id_X ⊗ fᵀ) = α_Y ∘ (f ⊗ id_{Y^∨})` for `f: X → Y`.
pub fn dinaturality_holds(alpha_x: &LinearMap, alpha_y: &LinearMap, x: &Comodule, y: &Comodule, f: &LinearMap) -> bool {
    let lhs = alpha_x.compose(&x.id().kronecker(&f.transpose()));
    let rhs = alpha_y.compose(&f.kronecker(&LinearMap::identity(x.hopf().field(), y.dim()))).ok();
    matches!((lhs, rhs), (Ok(a), Some(b)) if a == b)
}

/// Dinaturality of `j` at the map `f: X → Y`.
pub fn check_dinaturality(x: &Comodule, y: &Comodule, f: &LinearMap) -> CheckReport {
    let mut r = CheckReport::new(format!("dinaturality {} → {}", x.name(), y.name()));
    let (jx, jy) = (j_map(x), j_map(y));
    let lhs = jx.compose(&x.id().kronecker(&f.transpose()));
    let rhs = jy.compose(&f.kronecker(&LinearMap::identity(x.hopf().field(), y.dim())));
    match (lhs, rhs) {
        (Ok(a), Ok(b)) => {
            r.equal_indexed("square", &a, &b, &[x.hopf().dim()], &[x.dim(), y.dim()]);
        }
        _ => r.fail("square", "map has the wrong shape"),
    }
    r
}

/// `μ ∘ (j_X⊗j_Y) ∘ R = j_{X⊗Y}` with `R: X⊗Y⊗X^∨⊗Y^∨ → X⊗X^∨⊗Y⊗Y^∨`,
/// using `(X⊗Y)^∨ = X^∨⊗Y^∨` on the dual of the product basis.
pub fn check_coend_multiplication(x: &Comodule, y: &Comodule) -> Result<CheckReport> {
    let h = x.hopf();
    let (nx, ny) = (x.dim(), y.dim());
    let xy = tensor_comodule(x, y)?;
    let reindex = LinearMap::permute_factors(h.field(), &[nx, ny, nx, ny], &[0, 2, 1, 3]);
    let lhs = LinearMap::chain(&[h.mul(), &j_map(x).kronecker(&j_map(y)), &reindex])?;
    let mut r = CheckReport::new(format!("coend multiplication {}, {}", x.name(), y.name()));
    r.equal_indexed("product of j", &lhs, &j_map(&xy), &[h.dim()], &[nx, ny, nx, ny]);
    Ok(r)
}

/// A co-wedge: one map `α_X: X⊗X^∨ → T` per comodule of a family.
#[derive(Clone, Debug)]
pub struct Cowedge {
    pub target: Bicomodule,
    pub components: Vec<(Comodule, LinearMap)>,
}

#[derive(Clone, Debug)]
pub struct Factorization {
    /// `φ: H̃ → T` with `φ ∘ j_X = α_X`.
    pub phi: LinearMap,
    /// Dimension of the space of pairs `(ψ, t)`, `ψ` a bicomodule map with
    /// `ψ ∘ j_X = t·α_X` on the family. Exactly 1 for a genuine co-wedge.
    pub uniqueness_dim: usize,
}

/// Validates a co-wedge: each component is a bicomodule map from `X⊠X^∨`
/// and the family is dinatural against computed Hom bases.
pub fn check_cowedge(alpha: &Cowedge) -> Result<CheckReport> {
    let mut r = CheckReport::new(format!("co-wedge into {}", alpha.target.name()));
    for (x, a) in &alpha.components {
        let source = cowedge_source(x)?;
        check_bicomodule_morphism(&mut r, &format!("component {}", x.name()), &source, &alpha.target, a);
    }
    for (x, ax) in &alpha.components {
        for (y, ay) in &alpha.components {
            for (k, f) in comodule_hom_basis(x, y)?.iter().enumerate() {
                let ok = dinaturality_holds(ax, ay, x, y, f);
                r.condition(format!("dinatural {} → {} #{k}", x.name(), y.name()), ok, || {
                    "square does not commute".into()
                });
            }
        }
    }
    Ok(r)
}

/// Factors a co-wedge through `H̃` by `φ(h) = α_H(h⊗ε)` and verifies the
/// factorization and its uniqueness.
pub fn cowedge_factorize(alpha: &Cowedge) -> Result<Factorization> {
    let report = check_cowedge(alpha)?;
    if let Some(c) = report.failures().next() {
        return Err(Error::NotCowedge(c.id.clone()));
    }
    let (reg, alpha_h) = alpha
        .components
        .iter()
        .find(|(x, _)| x.coaction() == x.hopf().comul())
        .ok_or_else(|| Error::Precondition("the family must contain the regular comodule".into()))?;
    let h = reg.hopf();
    let epsilon = h.counit().transpose();
    let phi = alpha_h.compose(&h.id().kronecker(&epsilon))?;
    for (x, a) in &alpha.components {
        if phi.compose(&j_map(x))? != *a {
            return Err(Error::FactorizationFailed { comodule: x.name().into() });
        }
    }
    let htilde = twisted_coend_algebra(h)?;
    let mut r = CheckReport::new("φ");
    if !check_bicomodule_morphism(&mut r, "φ", htilde.carrier(), &alpha.target, &phi) {
        return Err(Error::Internal("the factorization is not a bicomodule morphism".into()));
    }
    let uniqueness_dim = factorization_space_dim(alpha, &htilde)?;
    Ok(Factorization { phi, uniqueness_dim })
}

/// Solves for `(ψ, t)`. Members are added smallest first; once the space
/// is at most one-dimensional the remaining members cannot enlarge it, and
/// `(φ, 1)` has already been verified on all of them.
fn factorization_space_dim(alpha: &Cowedge, htilde: &BicomoduleAlgebra) -> Result<usize> {
    let h = htilde.hopf();
    let d = h.dim();
    let t_dim = alpha.target.dim();
    let psi = MapUnknown { offset: 0, rows: t_dim, cols: d };
    let t = psi.len();
    let mut eqs = HomEquations::new(h.field(), t + 1);
    eqs.coaction(psi, htilde.carrier().left(), alpha.target.left(), d, 1);
    eqs.coaction(psi, htilde.carrier().right(), alpha.target.right(), 1, d);
    let mut order: Vec<&(Comodule, LinearMap)> = alpha.components.iter().collect();
    order.sort_by_key(|(x, _)| x.dim());
    let mut dim = eqs.solve().dim();
    for (x, a) in order {
        eqs.scaled_composite(psi, &j_map(x), a, t);
        dim = eqs.solve().dim();
        if dim <= 1 {
            break;
        }
    }
    Ok(dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;
    use crate::zoo::ZooEntry;

    fn j_composite(x: &Comodule) -> LinearMap {
        let h = x.hopf();
        let f = h.field();
        let n = x.dim();
        let ev = LinearMap::from_entries(f, 1, n * n, (0..n).map(|i| (0, i * n + i, f.one()))).unwrap();
        let pair = ev.compose(&LinearMap::flip(f, n, n)).unwrap();
        h.id().kronecker(&pair).compose(&x.coaction().kronecker(&x.id())).unwrap()
    }

    #[test]
    fn j_matches_composite() {
        for entry in ["sweedler_h4", "group_algebra(3)", "taft(3,2,7)"] {
            let h = ZooEntry::parse(entry).unwrap().build(Field::Rational).unwrap();
            let reg = Comodule::regular(&h);
            let dual = right_dual(&reg).unwrap().object;
            for x in [Comodule::trivial(&h), reg, dual] {
                assert_eq!(j_map(&x), j_composite(&x), "{entry} {}", x.name());
            }
        }
    }

    #[test]
    fn j_regular_against_counit_is_identity() {
        let h = ZooEntry::SweedlerH4.build(Field::Rational).unwrap();
        let j = j_map(&Comodule::regular(&h));
        let phi = j.compose(&h.id().kronecker(&h.counit().transpose())).unwrap();
        assert!(phi.is_identity());
    }
}
