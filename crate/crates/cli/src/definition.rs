//! The JSON definition file: a field, one Hopf algebra and named objects
//! over it, all given as sparse structure-constant tuples.
//!
//! Every tuple lists basis indices followed by one scalar. Rational scalars
//! are strings `"a"` or `"a/b"`; residues are integers. Index layouts:
//!
//! | list | tuple | meaning |
//! |---|---|---|
//! | `mul` | `[i, j, k, s]` | `e_i e_j` has `s` at `e_k` |
//! | `unit` | `[k, s]` | `1` has `s` at `e_k` |
//! | `comul` | `[i, j, k, s]` | `Δ(e_i)` has `s` at `e_j⊗e_k` |
//! | `counit` | `[i, s]` | `ε(e_i) = s` |
//! | `antipode` | `[i, j, s]` | `S(e_i)` has `s` at `e_j` |
//! | `coaction`, `left` | `[j, h, l, s]` | `δ(v_j)` has `s` at `c_h⊗v_l` |
//! | `right` | `[j, l, h, s]` | `v_j ↦` `s` at `v_l⊗c_h` |
//! | `action` | `[m, b, k, s]` | `v_m · b_b` has `s` at `v_k` |
//! | `left_action` | `[a, n, k, s]` | `a_a · v_n` has `s` at `v_k` (over `H̃`) |
//! | `right_action` | `[n, b, k, s]` | `v_n · b_b` has `s` at `v_k` |
//! | `matrix` | `[r, c, s]` | entry at row `r`, column `c` |
//!
//! Bicomodule algebras may be referred to by the built-in names `trivial`,
//! `hat` and `coend` (or `k`, `Ĥ`, `H̃`); comodules by the names of the
//! standard test family (`trivial`, `regular`, `grouplike 1`, …).

use std::fmt;

use hopf_trace::action::{Bicomodule, BicomoduleAlgebra, ModuleCategoryObject};
use hopf_trace::comodule::Comodule;
use hopf_trace::hopf::{AlgebraData, CoalgebraData, HopfAlgebra, HopfAlgebraData};
use hopf_trace::linalg::{Field, LinearMap, Scalar};
use hopf_trace::suite::{Extras, Subject};
use hopf_trace::trace::HopfBimodule;
use hopf_trace::zoo::{standard_test_family, test_module_objects};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub type Tuples = Vec<Vec<Value>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    pub fn field(self) -> Result<Field, DefinitionError> {
        match self {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Prime(p) => Field::prime(u64::from(p)).map_err(|e| DefinitionError::new(e.to_string())),
        }
    }

    pub fn of(field: Field) -> Self {
        match field {
            Field::Rational => FieldSpec::Rational,
            Field::Prime(p) => FieldSpec::Prime(p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefinitionFile {
    pub field: FieldSpec,
    pub hopf_algebra: HopfAlgebraDef,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comodules: Vec<ComoduleDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bicomodule_algebras: Vec<BicomoduleAlgebraDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub module_objects: Vec<ModuleObjectDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hopf_bimodules: Vec<HopfBimoduleDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub balancings: Vec<BalancingDef>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfAlgebraDef {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub mul: Tuples,
    pub unit: Tuples,
    pub comul: Tuples,
    pub counit: Tuples,
    pub antipode: Tuples,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleDef {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub coaction: Tuples,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BicomoduleAlgebraDef {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub left: Tuples,
    pub right: Tuples,
    pub mul: Tuples,
    pub unit: Tuples,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleObjectDef {
    pub name: String,
    pub algebra: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub left: Tuples,
    pub right: Tuples,
    pub action: Tuples,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfBimoduleDef {
    pub name: String,
    pub algebra: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub left: Tuples,
    pub right: Tuples,
    pub left_action: Tuples,
    pub right_action: Tuples,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BalancingDef {
    pub module: String,
    pub comodule: String,
    pub matrix: Tuples,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinitionError {
    pub message: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl DefinitionError {
    pub fn new(message: impl Into<String>) -> Self {
        DefinitionError { message: message.into(), line: None, column: None }
    }

    fn at(path: &str, message: impl fmt::Display) -> Self {
        DefinitionError::new(format!("{path}: {message}"))
    }
}

impl fmt::Display for DefinitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            _ => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for DefinitionError {}

pub fn parse(text: &str) -> Result<DefinitionFile, DefinitionError> {
    serde_json::from_str(text).map_err(|e| DefinitionError {
        message: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
        line: Some(e.line()),
        column: Some(e.column()),
    })
}

/// Row and column of a tuple's indices in the structure matrix.
type Place = fn(&[usize], &[usize]) -> (usize, usize);

/// Index layouts: `dims` are the ranges of the tuple's indices.
struct Layout {
    dims: Vec<usize>,
    rows: usize,
    cols: usize,
    place: Place,
    unplace: fn(usize, usize, &[usize]) -> Vec<usize>,
}

impl Layout {
    /// `[i, j, k]`: two inputs `(i, j)` map to output `k`.
    fn binary(a: usize, b: usize, out: usize) -> Self {
        Layout {
            dims: vec![a, b, out],
            rows: out,
            cols: a * b,
            place: |ix, d| (ix[2], ix[0] * d[1] + ix[1]),
            unplace: |r, c, d| vec![c / d[1], c % d[1], r],
        }
    }

    /// `[i, j, k]`: input `i` maps to the pair `(j, k)`.
    fn cobinary(input: usize, a: usize, b: usize) -> Self {
        Layout {
            dims: vec![input, a, b],
            rows: a * b,
            cols: input,
            place: |ix, d| (ix[1] * d[2] + ix[2], ix[0]),
            unplace: |r, c, d| vec![c, r / d[2], r % d[2]],
        }
    }

    /// `[i, j]`: input `i` maps to output `j`.
    fn unary(input: usize, out: usize) -> Self {
        Layout { dims: vec![input, out], rows: out, cols: input, place: |ix, _| (ix[1], ix[0]), unplace: |r, c, _| vec![c, r] }
    }

    /// `[k]`: a column vector.
    fn vector(out: usize) -> Self {
        Layout { dims: vec![out], rows: out, cols: 1, place: |ix, _| (ix[0], 0), unplace: |r, _, _| vec![r] }
    }

    /// `[i]`: a row vector.
    fn covector(input: usize) -> Self {
        Layout { dims: vec![input], rows: 1, cols: input, place: |ix, _| (0, ix[0]), unplace: |_, c, _| vec![c] }
    }

    /// `[r, c]`: a plain matrix.
    fn matrix(rows: usize, cols: usize) -> Self {
        Layout { dims: vec![rows, cols], rows, cols, place: |ix, _| (ix[0], ix[1]), unplace: |r, c, _| vec![r, c] }
    }
}

fn scalar_value(field: Field, v: &Value) -> Option<Scalar> {
    match v {
        Value::String(s) => field.parse_scalar(s).ok(),
        Value::Number(n) => n.as_i64().map(|n| field.from_i64(n)),
        _ => None,
    }
}

fn read(field: Field, tuples: &Tuples, layout: &Layout, path: &str) -> Result<LinearMap, DefinitionError> {
    let arity = layout.dims.len();
    let mut entries = Vec::with_capacity(tuples.len());
    for (t, tuple) in tuples.iter().enumerate() {
        let here = format!("{path}[{t}]");
        if tuple.len() != arity + 1 {
            return Err(DefinitionError::at(&here, format!("expected {} indices and a scalar", arity)));
        }
        let mut ix = Vec::with_capacity(arity);
        for (k, v) in tuple[..arity].iter().enumerate() {
            let i = v
                .as_u64()
                .and_then(|i| usize::try_from(i).ok())
                .ok_or_else(|| DefinitionError::at(&here, format!("index {v} is not a non-negative integer")))?;
            if i >= layout.dims[k] {
                return Err(DefinitionError::at(&here, format!("index {i} out of range (dimension {})", layout.dims[k])));
            }
            ix.push(i);
        }
        let s = scalar_value(field, &tuple[arity])
            .ok_or_else(|| DefinitionError::at(&here, format!("cannot read scalar {} in {field}", tuple[arity])))?;
        let (r, c) = (layout.place)(&ix, &layout.dims);
        entries.push((r, c, s));
    }
    LinearMap::from_entries(field, layout.rows, layout.cols, entries).map_err(|e| DefinitionError::at(path, e))
}

fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(_) => Value::String(s.to_string()),
        Scalar::Residue { value, .. } => Value::from(*value),
    }
}

fn write(map: &LinearMap, layout: &Layout) -> Tuples {
    let mut out: Vec<(Vec<usize>, Value)> = map
        .entries()
        .map(|(r, c, s)| ((layout.unplace)(r, c, &layout.dims), scalar_json(s)))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter()
        .map(|(ix, s)| ix.into_iter().map(Value::from).chain([s]).collect())
        .collect()
}

fn wrap(path: &str) -> impl Fn(hopf_trace::Error) -> DefinitionError + '_ {
    move |e| DefinitionError::at(path, e)
}

fn check_basis(basis: &Option<Vec<String>>, dim: usize, path: &str) -> Result<(), DefinitionError> {
    match basis {
        Some(b) if b.len() != dim => Err(DefinitionError::at(path, format!("{} basis labels for dimension {dim}", b.len()))),
        _ => Ok(()),
    }
}

fn hopf_data(def: &HopfAlgebraDef, field: Field) -> Result<HopfAlgebraData, DefinitionError> {
    let d = def.dim;
    let p = "hopf_algebra";
    check_basis(&def.basis, d, p)?;
    Ok(HopfAlgebraData {
        algebra: AlgebraData {
            dim: d,
            mul: read(field, &def.mul, &Layout::binary(d, d, d), &format!("{p}.mul"))?,
            unit: read(field, &def.unit, &Layout::vector(d), &format!("{p}.unit"))?,
        },
        coalgebra: CoalgebraData {
            dim: d,
            comul: read(field, &def.comul, &Layout::cobinary(d, d, d), &format!("{p}.comul"))?,
            counit: read(field, &def.counit, &Layout::covector(d), &format!("{p}.counit"))?,
        },
        antipode: read(field, &def.antipode, &Layout::unary(d, d), &format!("{p}.antipode"))?,
    })
}

pub fn hopf_def(name: &str, data: &HopfAlgebraData, basis: Option<Vec<String>>) -> HopfAlgebraDef {
    let d = data.dim();
    HopfAlgebraDef {
        name: name.to_string(),
        dim: d,
        basis,
        mul: write(&data.algebra.mul, &Layout::binary(d, d, d)),
        unit: write(&data.algebra.unit, &Layout::vector(d)),
        comul: write(&data.coalgebra.comul, &Layout::cobinary(d, d, d)),
        counit: write(&data.coalgebra.counit, &Layout::covector(d)),
        antipode: write(&data.antipode, &Layout::unary(d, d)),
    }
}

pub fn comodule_def(x: &Comodule) -> ComoduleDef {
    let (d, n) = (x.hopf().dim(), x.dim());
    ComoduleDef { name: x.name().to_string(), dim: n, basis: None, coaction: write(x.coaction(), &Layout::cobinary(n, d, n)) }
}

fn left_layout(d: usize, n: usize) -> Layout {
    Layout::cobinary(n, d, n)
}

fn right_layout(d: usize, n: usize) -> Layout {
    Layout::cobinary(n, n, d)
}

pub fn bicomodule_algebra_def(b: &BicomoduleAlgebra) -> BicomoduleAlgebraDef {
    let (d, n) = (b.hopf().dim(), b.dim());
    BicomoduleAlgebraDef {
        name: b.name().to_string(),
        dim: n,
        basis: None,
        left: write(b.carrier().left(), &left_layout(d, n)),
        right: write(b.carrier().right(), &right_layout(d, n)),
        mul: write(b.mul(), &Layout::binary(n, n, n)),
        unit: write(b.unit(), &Layout::vector(n)),
    }
}

pub fn module_object_def(m: &ModuleCategoryObject) -> ModuleObjectDef {
    let (d, n, nb) = (m.hopf().dim(), m.dim(), m.algebra().dim());
    ModuleObjectDef {
        name: m.name().to_string(),
        algebra: m.algebra().name().to_string(),
        dim: n,
        basis: None,
        left: write(m.carrier().left(), &left_layout(d, n)),
        right: write(m.carrier().right(), &right_layout(d, n)),
        action: write(m.action(), &Layout::binary(n, nb, n)),
    }
}

pub fn hopf_bimodule_def(n: &HopfBimodule) -> HopfBimoduleDef {
    let (d, dim, na, nb) = (n.hopf().dim(), n.dim(), n.coend().dim(), n.algebra().dim());
    HopfBimoduleDef {
        name: n.name().to_string(),
        algebra: n.algebra().name().to_string(),
        dim,
        basis: None,
        left: write(n.carrier().left(), &left_layout(d, dim)),
        right: write(n.carrier().right(), &right_layout(d, dim)),
        left_action: write(n.left_action(), &Layout::binary(na, dim, dim)),
        right_action: write(n.right_action(), &Layout::binary(dim, nb, dim)),
    }
}

pub fn balancing_def(module: &str, comodule: &str, beta: &LinearMap) -> BalancingDef {
    BalancingDef {
        module: module.to_string(),
        comodule: comodule.to_string(),
        matrix: write(beta, &Layout::matrix(beta.rows(), beta.cols())),
    }
}

/// Named objects resolved from a file together with the built-in family.
#[derive(Clone, Debug, Default)]
pub struct Registry {
    pub comodules: Vec<Comodule>,
    pub algebras: Vec<BicomoduleAlgebra>,
    pub modules: Vec<ModuleCategoryObject>,
    pub bimodules: Vec<HopfBimodule>,
}

impl Registry {
    /// The standard test family, its module objects and the built-in
    /// bicomodule algebras.
    pub fn builtin(h: &HopfAlgebra) -> hopf_trace::Result<Self> {
        let family = standard_test_family(h)?;
        let mut modules = Vec::new();
        for b in &family.algebras {
            modules.extend(test_module_objects(b, &family)?);
        }
        Ok(Registry { comodules: family.comodules.clone(), algebras: family.algebras.clone(), modules, bimodules: Vec::new() })
    }

    pub fn algebra(&self, name: &str) -> Option<&BicomoduleAlgebra> {
        let name = match name {
            "trivial" => "k",
            "hat" => "Ĥ",
            "coend" | "twisted" => "H̃",
            other => other,
        };
        self.algebras.iter().find(|b| b.name() == name)
    }

    pub fn comodule(&self, name: &str) -> Option<&Comodule> {
        self.comodules.iter().find(|x| x.name() == name)
    }

    pub fn module(&self, name: &str) -> Option<&ModuleCategoryObject> {
        self.modules.iter().find(|m| m.name() == name)
    }

    pub fn bimodule(&self, name: &str) -> Option<&HopfBimodule> {
        self.bimodules.iter().find(|n| n.name() == name)
    }

    fn taken(&self, name: &str) -> bool {
        self.comodule(name).is_some()
            || self.algebra(name).is_some()
            || self.module(name).is_some()
            || self.bimodule(name).is_some()
    }
}

/// A parsed file: the suite subject and the named objects.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub subject: Subject,
    pub registry: Option<Registry>,
    pub basis: Option<Vec<String>>,
}

pub fn load(def: &DefinitionFile) -> Result<Loaded, DefinitionError> {
    let field = def.field.field()?;
    let data = hopf_data(&def.hopf_algebra, field)?;
    let subject = Subject::new(def.hopf_algebra.name.clone(), data);
    let basis = def.hopf_algebra.basis.clone();
    let Some(h) = subject.hopf.clone() else {
        return Ok(Loaded { subject, registry: None, basis });
    };
    let mut reg = Registry::builtin(&h).map_err(|e| DefinitionError::new(e.to_string()))?;
    let mut extras = Extras::default();
    let d = h.dim();
    let fresh = |reg: &Registry, name: &str, path: &str| {
        if reg.taken(name) {
            Err(DefinitionError::at(path, format!("name {name:?} is already in use")))
        } else {
            Ok(())
        }
    };
    for (i, c) in def.comodules.iter().enumerate() {
        let p = format!("comodules[{i}]");
        fresh(&reg, &c.name, &p)?;
        check_basis(&c.basis, c.dim, &p)?;
        let coaction = read(field, &c.coaction, &Layout::cobinary(c.dim, d, c.dim), &format!("{p}.coaction"))?;
        let x = Comodule::new(&h, c.name.clone(), coaction).map_err(wrap(&p))?;
        reg.comodules.push(x.clone());
        extras.comodules.push(x);
    }
    for (i, b) in def.bicomodule_algebras.iter().enumerate() {
        let p = format!("bicomodule_algebras[{i}]");
        fresh(&reg, &b.name, &p)?;
        check_basis(&b.basis, b.dim, &p)?;
        let n = b.dim;
        let carrier = Bicomodule::new(
            &h,
            b.name.clone(),
            read(field, &b.left, &left_layout(d, n), &format!("{p}.left"))?,
            read(field, &b.right, &right_layout(d, n), &format!("{p}.right"))?,
        )
        .map_err(wrap(&p))?;
        let mul = read(field, &b.mul, &Layout::binary(n, n, n), &format!("{p}.mul"))?;
        let unit = read(field, &b.unit, &Layout::vector(n), &format!("{p}.unit"))?;
        let alg = BicomoduleAlgebra::new(carrier, mul, unit).map_err(wrap(&p))?;
        reg.algebras.push(alg.clone());
        extras.algebras.push(alg);
    }
    for (i, m) in def.module_objects.iter().enumerate() {
        let p = format!("module_objects[{i}]");
        fresh(&reg, &m.name, &p)?;
        check_basis(&m.basis, m.dim, &p)?;
        let b = reg
            .algebra(&m.algebra)
            .cloned()
            .ok_or_else(|| DefinitionError::at(&p, format!("unknown bicomodule algebra {:?}", m.algebra)))?;
        let n = m.dim;
        let carrier = Bicomodule::new(
            &h,
            m.name.clone(),
            read(field, &m.left, &left_layout(d, n), &format!("{p}.left"))?,
            read(field, &m.right, &right_layout(d, n), &format!("{p}.right"))?,
        )
        .map_err(wrap(&p))?;
        let action = read(field, &m.action, &Layout::binary(n, b.dim(), n), &format!("{p}.action"))?;
        let obj = ModuleCategoryObject::new(carrier, &b, action).map_err(wrap(&p))?;
        reg.modules.push(obj.clone());
        extras.modules.push(obj);
    }
    let htilde = reg.algebra("H̃").cloned().expect("built in");
    for (i, nd) in def.hopf_bimodules.iter().enumerate() {
        let p = format!("hopf_bimodules[{i}]");
        fresh(&reg, &nd.name, &p)?;
        check_basis(&nd.basis, nd.dim, &p)?;
        let b = reg
            .algebra(&nd.algebra)
            .cloned()
            .ok_or_else(|| DefinitionError::at(&p, format!("unknown bicomodule algebra {:?}", nd.algebra)))?;
        let n = nd.dim;
        let carrier = Bicomodule::new(
            &h,
            nd.name.clone(),
            read(field, &nd.left, &left_layout(d, n), &format!("{p}.left"))?,
            read(field, &nd.right, &right_layout(d, n), &format!("{p}.right"))?,
        )
        .map_err(wrap(&p))?;
        let left = read(field, &nd.left_action, &Layout::binary(d, n, n), &format!("{p}.left_action"))?;
        let right = read(field, &nd.right_action, &Layout::binary(n, b.dim(), n), &format!("{p}.right_action"))?;
        let obj = HopfBimodule::new(carrier, &htilde, &b, left, right).map_err(wrap(&p))?;
        reg.bimodules.push(obj.clone());
        extras.bimodules.push(obj);
    }
    for (i, bd) in def.balancings.iter().enumerate() {
        let p = format!("balancings[{i}]");
        let m = reg
            .module(&bd.module)
            .cloned()
            .ok_or_else(|| DefinitionError::at(&p, format!("unknown module object {:?}", bd.module)))?;
        let x = reg
            .comodule(&bd.comodule)
            .cloned()
            .ok_or_else(|| DefinitionError::at(&p, format!("unknown comodule {:?}", bd.comodule)))?;
        let side = d * m.dim() * x.dim();
        let beta = read(field, &bd.matrix, &Layout::matrix(side, side), &format!("{p}.matrix"))?;
        extras.balancings.push((m, x, beta));
    }
    Ok(Loaded { subject: subject.with_extras(extras), registry: Some(reg), basis })
}

/// Re-emits a parsed file in canonical form: entries merged, zeros dropped,
/// tuples sorted, scalars normalized.
pub fn canonicalize(def: &DefinitionFile) -> Result<DefinitionFile, DefinitionError> {
    let field = def.field.field()?;
    let d = def.hopf_algebra.dim;
    let data = hopf_data(&def.hopf_algebra, field)?;
    let redo = |t: &Tuples, layout: Layout, path: &str| -> Result<Tuples, DefinitionError> {
        Ok(write(&read(field, t, &layout, path)?, &layout))
    };
    let algebra_dim = |name: &str| -> Option<usize> {
        match name {
            "trivial" | "k" => Some(1),
            "hat" | "Ĥ" | "coend" | "twisted" | "H̃" => Some(d),
            other => def.bicomodule_algebras.iter().find(|b| b.name == other).map(|b| b.dim),
        }
    };
    let mut out = def.clone();
    out.hopf_algebra = hopf_def(&def.hopf_algebra.name, &data, def.hopf_algebra.basis.clone());
    for (c, o) in def.comodules.iter().zip(&mut out.comodules) {
        o.coaction = redo(&c.coaction, Layout::cobinary(c.dim, d, c.dim), &c.name)?;
    }
    for (b, o) in def.bicomodule_algebras.iter().zip(&mut out.bicomodule_algebras) {
        let n = b.dim;
        o.left = redo(&b.left, left_layout(d, n), &b.name)?;
        o.right = redo(&b.right, right_layout(d, n), &b.name)?;
        o.mul = redo(&b.mul, Layout::binary(n, n, n), &b.name)?;
        o.unit = redo(&b.unit, Layout::vector(n), &b.name)?;
    }
    for (m, o) in def.module_objects.iter().zip(&mut out.module_objects) {
        let n = m.dim;
        let nb = algebra_dim(&m.algebra)
            .ok_or_else(|| DefinitionError::at(&m.name, format!("unknown bicomodule algebra {:?}", m.algebra)))?;
        o.left = redo(&m.left, left_layout(d, n), &m.name)?;
        o.right = redo(&m.right, right_layout(d, n), &m.name)?;
        o.action = redo(&m.action, Layout::binary(n, nb, n), &m.name)?;
    }
    for (m, o) in def.hopf_bimodules.iter().zip(&mut out.hopf_bimodules) {
        let n = m.dim;
        let nb = algebra_dim(&m.algebra)
            .ok_or_else(|| DefinitionError::at(&m.name, format!("unknown bicomodule algebra {:?}", m.algebra)))?;
        o.left = redo(&m.left, left_layout(d, n), &m.name)?;
        o.right = redo(&m.right, right_layout(d, n), &m.name)?;
        o.left_action = redo(&m.left_action, Layout::binary(d, n, n), &m.name)?;
        o.right_action = redo(&m.right_action, Layout::binary(n, nb, n), &m.name)?;
    }
    for (b, o) in def.balancings.iter().zip(&mut out.balancings) {
        let rows = b.matrix.iter().filter_map(|t| t.first().and_then(Value::as_u64)).max().map_or(0, |m| m as usize + 1);
        let cols = b.matrix.iter().filter_map(|t| t.get(1).and_then(Value::as_u64)).max().map_or(0, |m| m as usize + 1);
        let side = rows.max(cols);
        o.matrix = redo(&b.matrix, Layout::matrix(side, side), "balancing")?;
    }
    Ok(out)
}

/// Canonical text: two-space indentation, one tuple per line, trailing
/// newline.
pub fn to_text(def: &DefinitionFile) -> String {
    let value = serde_json::to_value(def).expect("serializable");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_array() && !i.is_object()),
        _ => false,
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, val)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(key).expect("string"));
                out.push_str(": ");
                write_value(val, indent + 1, out);
                if k + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && !is_flat(v) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                if k + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(|i| serde_json::to_string(i).expect("scalar")).collect();
            out.push('[');
            out.push_str(&inner.join(", "));
            out.push(']');
        }
        other => out.push_str(&serde_json::to_string(other).expect("scalar")),
    }
}
