//! Algebras, coalgebras and Hopf algebras given by structure constants.
//!
//! Matrices follow the tensor basis convention of [`crate::linalg::matrix`]:
//! `mul` is `dim × dim²` with column `i * dim + j` holding `e_i e_j`, `comul`
//! is `dim² × dim`, `unit` is `dim × 1` and `counit` is `1 × dim`.
//!
//! The ground field is ℚ or GF(p) rather than an algebraically closed field.
//! Every statement checked here is an equation between matrices, which
//! holds or fails independently of closure.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Field, LinearMap, SparseVec};
use crate::report::CheckReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    pub dim: usize,
    pub mul: LinearMap,
    pub unit: LinearMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    pub dim: usize,
    pub comul: LinearMap,
    pub counit: LinearMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    pub antipode: LinearMap,
}

fn shape(context: &str, m: &LinearMap, rows: usize, cols: usize) -> Result<()> {
    if m.shape() != (rows, cols) {
        return Err(Error::Shape {
            context: context.into(),
            expected_rows: rows,
            expected_cols: cols,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(())
}

fn same_field(maps: &[&LinearMap]) -> Result<Field> {
    let field = maps[0].field();
    if let Some(m) = maps.iter().find(|m| m.field() != field) {
        return Err(Error::FieldMismatch(format!("{} vs {}", field, m.field())));
    }
    Ok(field)
}

impl AlgebraData {
    pub fn field(&self) -> Field {
        self.mul.field()
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim;
        shape("multiplication", &self.mul, d, d * d)?;
        shape("unit", &self.unit, d, 1)?;
        same_field(&[&self.mul, &self.unit])?;
        Ok(())
    }
}

impl CoalgebraData {
    pub fn field(&self) -> Field {
        self.comul.field()
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim;
        shape("comultiplication", &self.comul, d * d, d)?;
        shape("counit", &self.counit, 1, d)?;
        same_field(&[&self.comul, &self.counit])?;
        Ok(())
    }
}

impl HopfAlgebraData {
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn validate(&self) -> Result<()> {
        self.algebra.validate()?;
        self.coalgebra.validate()?;
        if self.coalgebra.dim != self.algebra.dim {
            return Err(Error::InvalidParameter(format!(
                "algebra has dim {} but coalgebra has dim {}",
                self.algebra.dim, self.coalgebra.dim
            )));
        }
        let d = self.dim();
        shape("antipode", &self.antipode, d, d)?;
        same_field(&[&self.algebra.mul, &self.coalgebra.comul, &self.antipode])?;
        Ok(())
    }
}

pub fn check_algebra(a: &AlgebraData) -> Result<CheckReport> {
    a.validate()?;
    let mut r = CheckReport::new("algebra");
    algebra_checks(&mut r, a);
    Ok(r)
}

fn algebra_checks(r: &mut CheckReport, a: &AlgebraData) {
    let d = a.dim;
    let f = a.field();
    let id = LinearMap::identity(f, d);
    let m = &a.mul;
    let left = m.compose(&m.kronecker(&id)).expect("shape");
    let right = m.compose(&id.kronecker(m)).expect("shape");
    r.equal_indexed("associativity", &left, &right, &[d], &[d, d, d]);
    let lu = m.compose(&a.unit.kronecker(&id)).expect("shape");
    r.equal_indexed("left unit", &lu, &id, &[d], &[d]);
    let ru = m.compose(&id.kronecker(&a.unit)).expect("shape");
    r.equal_indexed("right unit", &ru, &id, &[d], &[d]);
}

pub fn check_coalgebra(c: &CoalgebraData) -> Result<CheckReport> {
    c.validate()?;
    let mut r = CheckReport::new("coalgebra");
    coalgebra_checks(&mut r, c);
    Ok(r)
}

fn coalgebra_checks(r: &mut CheckReport, c: &CoalgebraData) {
    let d = c.dim;
    let id = LinearMap::identity(c.field(), d);
    let delta = &c.comul;
    let left = delta.kronecker(&id).compose(delta).expect("shape");
    let right = id.kronecker(delta).compose(delta).expect("shape");
    r.equal_indexed("coassociativity", &left, &right, &[d, d, d], &[d]);
    let lc = c.counit.kronecker(&id).compose(delta).expect("shape");
    r.equal_indexed("left counit", &lc, &id, &[d], &[d]);
    let rc = id.kronecker(&c.counit).compose(delta).expect("shape");
    r.equal_indexed("right counit", &rc, &id, &[d], &[d]);
}

/// All Hopf algebra axioms, including invertibility of the antipode.
pub fn check_hopf(h: &HopfAlgebraData) -> Result<CheckReport> {
    h.validate()?;
    let mut r = CheckReport::new("hopf algebra");
    algebra_checks(&mut r, &h.algebra);
    coalgebra_checks(&mut r, &h.coalgebra);
    let d = h.dim();
    let f = h.field();
    let id = LinearMap::identity(f, d);
    let (mul, unit) = (&h.algebra.mul, &h.algebra.unit);
    let (delta, eps) = (&h.coalgebra.comul, &h.coalgebra.counit);

    let mid = LinearMap::kron_all(&[&id, &LinearMap::flip(f, d, d), &id]);
    let lhs = delta.compose(mul).expect("shape");
    let rhs = LinearMap::chain(&[&mul.kronecker(mul), &mid, &delta.kronecker(delta)]).expect("shape");
    r.equal_indexed("comultiplication multiplicative", &lhs, &rhs, &[d, d], &[d, d]);
    r.equal("comultiplication unital", &delta.compose(unit).expect("shape"), &unit.kronecker(unit));
    r.equal_indexed(
        "counit multiplicative",
        &eps.compose(mul).expect("shape"),
        &eps.kronecker(eps),
        &[1],
        &[d, d],
    );
    r.equal("counit unital", &eps.compose(unit).expect("shape"), &LinearMap::identity(f, 1));

    let s = &h.antipode;
    let unit_counit = unit.compose(eps).expect("shape");
    let left = LinearMap::chain(&[mul, &s.kronecker(&id), delta]).expect("shape");
    r.equal_indexed("antipode left", &left, &unit_counit, &[d], &[d]);
    let right = LinearMap::chain(&[mul, &id.kronecker(s), delta]).expect("shape");
    r.equal_indexed("antipode right", &right, &unit_counit, &[d], &[d]);
    let rank = s.rank();
    r.condition("antipode invertible", rank == d, || format!("antipode has rank {rank} < {d}"));
    Ok(r)
}

/// `S ∘ μ = μ ∘ τ ∘ (S ⊗ S)`.
pub fn check_antipode_antimultiplicative(h: &HopfAlgebraData) -> Result<CheckReport> {
    h.validate()?;
    let d = h.dim();
    let f = h.field();
    let s = &h.antipode;
    let mul = &h.algebra.mul;
    let mut r = CheckReport::new("antipode");
    let lhs = s.compose(mul)?;
    let rhs = LinearMap::chain(&[mul, &LinearMap::flip(f, d, d), &s.kronecker(s)])?;
    r.equal_indexed("antimultiplicative", &lhs, &rhs, &[d], &[d, d]);
    Ok(r)
}

pub fn antipode_inverse(h: &HopfAlgebraData) -> Result<LinearMap> {
    h.validate()?;
    h.antipode.inverse().map_err(|_| Error::NotInvertible("antipode".into()))
}

/// `H^opcop`: product and coproduct both flipped. Its antipode is `S`.
pub fn op_cop(h: &HopfAlgebraData) -> HopfAlgebraData {
    let d = h.dim();
    let tau = LinearMap::flip(h.field(), d, d);
    HopfAlgebraData {
        algebra: AlgebraData {
            dim: d,
            mul: h.algebra.mul.compose(&tau).expect("shape"),
            unit: h.algebra.unit.clone(),
        },
        coalgebra: CoalgebraData {
            dim: d,
            comul: tau.compose(&h.coalgebra.comul).expect("shape"),
            counit: h.coalgebra.counit.clone(),
        },
        antipode: h.antipode.clone(),
    }
}

/// Grouplike elements among the candidates: basis vectors, the unit, and
/// for `dim ≤ 4` every vector with entries in {0, 1, -1}. Complete whenever
/// the grouplikes lie in the distinguished basis, as for every zoo entry.
/// Sorted by coordinate vector.
pub fn grouplike_elements(h: &HopfAlgebraData) -> Vec<SparseVec> {
    let d = h.dim();
    let f = h.field();
    let mut candidates: Vec<SparseVec> = (0..d).map(|i| vec![(i, f.one())]).collect();
    candidates.push(h.algebra.unit.column(0).to_vec());
    if d <= 4 {
        let total = 3usize.pow(d as u32);
        for code in 1..total {
            let mut c = code;
            let mut v = SparseVec::new();
            for i in 0..d {
                match c % 3 {
                    1 => v.push((i, f.one())),
                    2 => v.push((i, f.from_i64(-1))),
                    _ => {}
                }
                c /= 3;
            }
            candidates.push(v);
        }
    }
    let mut found: Vec<SparseVec> = Vec::new();
    for v in candidates {
        if v.is_empty() || found.contains(&v) {
            continue;
        }
        let eps = h.coalgebra.counit.apply(&v);
        if !(eps.len() == 1 && eps[0].1.is_one()) {
            continue;
        }
        let dv = h.coalgebra.comul.apply(&v);
        let vv: SparseVec = v
            .iter()
            .flat_map(|(i, a)| v.iter().map(move |(j, b)| (i * d + j, a * b)))
            .collect();
        if dv == vv {
            found.push(v);
        }
    }
    found.sort_by(|a, b| {
        let key = |v: &SparseVec| v.iter().map(|(i, s)| (*i, s.to_string())).collect::<Vec<_>>();
        key(a).cmp(&key(b))
    });
    found
}

/// A validated Hopf algebra with cached derived maps. Cheap to clone;
/// objects built over it hold a handle and are compared through it.
#[derive(Clone)]
pub struct HopfAlgebra(Arc<Inner>);

struct Inner {
    name: String,
    data: HopfAlgebraData,
    antipode_inv: LinearMap,
}

impl HopfAlgebra {
    /// Validates all axioms; the first failing identity becomes the error.
    pub fn new(name: impl Into<String>, data: HopfAlgebraData) -> Result<Self> {
        let report = check_hopf(&data)?;
        if let Some(c) = report.failures().next() {
            return Err(Error::Precondition(format!("not a Hopf algebra: {} fails", c.id)));
        }
        let antipode_inv = antipode_inverse(&data)?;
        Ok(HopfAlgebra(Arc::new(Inner { name: name.into(), data, antipode_inv })))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn data(&self) -> &HopfAlgebraData {
        &self.0.data
    }

    pub fn dim(&self) -> usize {
        self.0.data.dim()
    }

    pub fn field(&self) -> Field {
        self.0.data.field()
    }

    pub fn mul(&self) -> &LinearMap {
        &self.0.data.algebra.mul
    }

    pub fn unit(&self) -> &LinearMap {
        &self.0.data.algebra.unit
    }

    pub fn comul(&self) -> &LinearMap {
        &self.0.data.coalgebra.comul
    }

    pub fn counit(&self) -> &LinearMap {
        &self.0.data.coalgebra.counit
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.0.data.antipode
    }

    pub fn antipode_inv(&self) -> &LinearMap {
        &self.0.antipode_inv
    }

    pub fn id(&self) -> LinearMap {
        LinearMap::identity(self.field(), self.dim())
    }

    /// Same Hopf algebra: identical handle or identical structure constants.
    pub fn same(&self, other: &HopfAlgebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.data == other.0.data
    }

    pub fn ensure_same(&self, other: &HopfAlgebra) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::HopfMismatch)
        }
    }

    pub fn grouplikes(&self) -> Vec<SparseVec> {
        grouplike_elements(self.data())
    }
}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfAlgebra({}, dim {} over {})", self.name(), self.dim(), self.field())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_dim(field: Field) -> HopfAlgebraData {
        let one = LinearMap::identity(field, 1);
        HopfAlgebraData {
            algebra: AlgebraData { dim: 1, mul: one.clone(), unit: one.clone() },
            coalgebra: CoalgebraData { dim: 1, comul: one.clone(), counit: one.clone() },
            antipode: one,
        }
    }

    #[test]
    fn ground_field_is_hopf() {
        let h = one_dim(Field::Rational);
        assert!(check_hopf(&h).unwrap().passed());
        assert_eq!(grouplike_elements(&h).len(), 1);
        assert_eq!(op_cop(&h), h);
    }

    #[test]
    fn shape_errors_precede_checks() {
        let mut h = one_dim(Field::Rational);
        h.algebra.mul = LinearMap::zero(Field::Rational, 1, 2);
        assert!(matches!(check_hopf(&h), Err(Error::Shape { .. })));
    }

    #[test]
    fn singular_antipode_rejected() {
        let mut h = one_dim(Field::Rational);
        h.antipode = LinearMap::zero(Field::Rational, 1, 1);
        assert_eq!(antipode_inverse(&h).unwrap_err(), Error::NotInvertible("antipode".into()));
        let r = check_hopf(&h).unwrap();
        assert!(r.failed_ids().contains(&"antipode invertible"));
    }
}
